//! Computation of fundamental groups of admissible presentations of bound
//! quiver algebras.
//!
//! The library works with finite acyclic connected quivers over an exact
//! field (the rationals or a prime field). Around them it provides:
//!
//! - elements and two-sided ideals of the path algebra, kept in canonical
//!   reduced-echelon form per `(source, target)` pair ([`algebra`], [`ideal`]);
//! - path-algebra automorphisms, in particular transvections
//!   `α ↦ α + τu` for a bypass `(α, u)` ([`morphism`]);
//! - minimal relations, the homotopy relation of an admissible presentation,
//!   and the induced fundamental-group presentation ([`homotopy`]);
//! - a small finitely-presented-group engine: Tietze simplification, Smith
//!   normal form, Todd–Coxeter coset enumeration, classification ([`fpgroup`]);
//! - the quiver of homotopy relations over a family of presentations, with
//!   transvection-witnessed arrows, plus orbit exploration ([`gamma`]).
//!
//! All arithmetic is exact; no floating point is used anywhere. Paths are
//! stored in traversal order: `b1·a1` means "traverse `b1`, then `a1`".

pub mod algebra;
pub mod counterexample;
pub mod fpgroup;
pub mod gamma;
pub mod homotopy;
pub mod ideal;
pub mod linalg;
pub mod morphism;
pub mod quiver;
pub mod scalar;

pub use algebra::{Algebra, AlgebraElement, PathId, PathSpace};
pub use fpgroup::{Classification, Decision, GroupFingerprint, Presentation, Word};
pub use gamma::{GammaQuiver, PresentationFamily};
pub use homotopy::{HomotopyRelation, MinimalSupport};
pub use ideal::Ideal;
pub use morphism::Morphism;
pub use quiver::{ArrowId, Path, Quiver, SpanningTree, VertexId, Walk};
pub use scalar::{Field, FieldSpec, Scalar};
