//! Path-algebra endomorphisms given by arrow images, including transvections,
//! with invertibility checked on the full path basis.

use crate::algebra::{Algebra, AlgebraElement};
use crate::ideal::Ideal;
use crate::linalg;
use crate::quiver::{ArrowId, Path, VertexId};
use crate::scalar::Scalar;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MorphismError {
    #[error("image of arrow `{0}` is not parallel to it")]
    NotParallel(String),
    #[error("image of arrow `{0}` contains a stationary path")]
    StationaryTerm(String),
    #[error("the induced linear map is not invertible (pair {0} -> {1})")]
    NotInvertible(String, String),
    #[error("transvection coefficient must be nonzero")]
    ZeroCoefficient,
    #[error("`{0}` paired with itself is not a bypass")]
    NotABypass(String),
    #[error("missing image for arrow `{0}`")]
    MissingImage(String),
}

/// An algebra automorphism determined by arrow images. Images are restricted
/// to the arrow ideal (paths of length >= 1), so admissibility and
/// triangularity are preserved; invertibility of the induced linear map on
/// the whole path space is checked at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    images: Vec<AlgebraElement>, // indexed by ArrowId
}

impl Morphism {
    /// Builds a morphism from one image per arrow, in canonical arrow order.
    pub fn new(alg: &Algebra, images: Vec<AlgebraElement>) -> Result<Morphism, MorphismError> {
        let q = alg.quiver();
        assert_eq!(images.len(), q.arrow_count());
        for a in q.arrows() {
            let arr = q.arrow(a);
            let img = &images[a.0];
            if img.source != arr.source || img.target != arr.target {
                return Err(MorphismError::NotParallel(arr.name.clone()));
            }
            if img.support().any(|p| alg.paths().path(p).is_stationary()) {
                return Err(MorphismError::StationaryTerm(arr.name.clone()));
            }
        }
        let m = Morphism { images };
        // Invertibility on every pair's path basis.
        for (s, t) in alg.paths().pairs() {
            let rows = m.pair_matrix(alg, s, t);
            let n = rows.len();
            if linalg::rank(alg.field(), &rows, n) != n {
                return Err(MorphismError::NotInvertible(
                    q.vertex_name(s).to_string(),
                    q.vertex_name(t).to_string(),
                ));
            }
        }
        Ok(m)
    }

    pub fn identity(alg: &Algebra) -> Morphism {
        let images = alg
            .quiver()
            .arrows()
            .map(|a| {
                let p = Path {
                    source: alg.quiver().arrow(a).source,
                    target: alg.quiver().arrow(a).target,
                    arrows: vec![a],
                };
                alg.element_from_path(&p).expect("arrow path")
            })
            .collect();
        Morphism { images }
    }

    /// The transvection `α ↦ α + τ·u` for a bypass `(α, u)`, fixing every
    /// other arrow. Always invertible on an acyclic quiver (inverse is the
    /// transvection with `-τ`).
    pub fn transvection(
        alg: &Algebra,
        arrow: ArrowId,
        bypass: &Path,
        tau: &Scalar,
    ) -> Result<Morphism, MorphismError> {
        let q = alg.quiver();
        let arr = q.arrow(arrow);
        if alg.field().is_zero(tau) {
            return Err(MorphismError::ZeroCoefficient);
        }
        if bypass.source != arr.source || bypass.target != arr.target {
            return Err(MorphismError::NotParallel(arr.name.clone()));
        }
        if bypass.arrows == [arrow] {
            return Err(MorphismError::NotABypass(arr.name.clone()));
        }
        let mut m = Morphism::identity(alg);
        let u = alg
            .element_from_path(bypass)
            .map_err(|_| MorphismError::NotParallel(arr.name.clone()))?;
        m.images[arrow.0] = alg
            .combine(&m.images[arrow.0], &u, tau)
            .expect("parallel by construction");
        Ok(m)
    }

    pub fn image_of_arrow(&self, a: ArrowId) -> &AlgebraElement {
        &self.images[a.0]
    }

    pub fn arrow_images(&self) -> &[AlgebraElement] {
        &self.images
    }

    /// Multiplicative extension to a path (stationary paths are fixed).
    pub fn apply_to_path(&self, alg: &Algebra, p: &Path) -> AlgebraElement {
        if p.is_stationary() {
            return alg.element_from_path(p).expect("stationary path");
        }
        let mut acc = self.images[p.arrows[0].0].clone();
        for a in &p.arrows[1..] {
            acc = alg
                .multiply(&acc, &self.images[a.0])
                .expect("composable images");
        }
        acc
    }

    /// Linear extension to an arbitrary homogeneous element.
    pub fn apply(&self, alg: &Algebra, x: &AlgebraElement) -> AlgebraElement {
        let mut acc = AlgebraElement::zero(x.source, x.target);
        for (p, c) in x.terms() {
            let img = self.apply_to_path(alg, alg.paths().path(p));
            acc = alg.combine(&acc, &img, c).expect("parallel images");
        }
        acc
    }

    /// Image ideal: the closure of the images of the generators. For an
    /// automorphism this is the full image of the ideal.
    pub fn apply_to_ideal(&self, alg: &Algebra, ideal: &Ideal) -> Ideal {
        let gens: Vec<AlgebraElement> = ideal
            .generators()
            .iter()
            .map(|g| self.apply(alg, g))
            .collect();
        Ideal::closure(alg, &gens)
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, alg: &Algebra, other: &Morphism) -> Morphism {
        Morphism {
            images: other
                .images
                .iter()
                .map(|img| self.apply(alg, img))
                .collect(),
        }
    }

    /// Matrix of the induced map on the `(s, t)` path basis; row `i` is the
    /// coordinate vector of the image of basis path `i`.
    fn pair_matrix(&self, alg: &Algebra, s: VertexId, t: VertexId) -> Vec<Vec<Scalar>> {
        alg.paths()
            .pair_paths(s, t)
            .iter()
            .map(|p| {
                let img = self.apply_to_path(alg, alg.paths().path(*p));
                alg.to_vector(&img)
            })
            .collect()
    }

    /// Two-sided inverse, read off the inverted pair matrices. Construction
    /// guarantees invertibility, and the inverse of an algebra automorphism
    /// is again determined by its arrow images.
    pub fn inverse(&self, alg: &Algebra) -> Morphism {
        let q = alg.quiver();
        let images = q
            .arrows()
            .map(|a| {
                let arr = q.arrow(a);
                let m = self.pair_matrix(alg, arr.source, arr.target);
                let inv = linalg::invert(alg.field(), &m).expect("automorphism");
                let pos = alg.paths().position(
                    alg.paths()
                        .id_of(&Path {
                            source: arr.source,
                            target: arr.target,
                            arrows: vec![a],
                        })
                        .expect("arrow path"),
                );
                alg.from_vector(arr.source, arr.target, &inv[pos])
            })
            .collect();
        Morphism { images }
    }
}
