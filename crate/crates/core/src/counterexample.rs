//! The embedded counter-example: the double-double quiver, the five ideals
//! I, I1..I4, and the explicit automorphism with 1/2 coefficients.
//!
//! Everything here is expressed through the public library operations, so it
//! doubles as the fixture for the built-in verification command.

use crate::algebra::{Algebra, AlgebraElement};
use crate::ideal::Ideal;
use crate::morphism::Morphism;
use crate::quiver::Quiver;
use crate::scalar::{Field, FieldError};

/// Vertices 1, 2, 3 with double arrows a1, a2: 2 -> 1 and b1, b2: 3 -> 2.
pub fn quiver() -> Quiver {
    crate::quiver::double_double_quiver()
}

pub fn algebra(field: Field) -> Algebra {
    Algebra::new(quiver(), field)
}

fn path_elem(a: &Algebra, names: &[&str]) -> AlgebraElement {
    a.element_from_path(&a.quiver().path_by_names(names).unwrap())
        .unwrap()
}

fn lin(a: &Algebra, terms: &[(i64, &[&str])]) -> AlgebraElement {
    let mut it = terms.iter();
    let (c0, p0) = it.next().expect("nonempty");
    let mut acc = a.scale(&path_elem(a, p0), &a.field().from_integer(*c0));
    for (c, p) in it {
        acc = a
            .combine(&acc, &path_elem(a, p), &a.field().from_integer(*c))
            .unwrap();
    }
    acc
}

/// I = <a1 after b1, a2 after b2> (paths written in traversal order:
/// `b1*a1`, `b2*a2`).
pub fn ideal_i(a: &Algebra) -> Ideal {
    Ideal::closure(
        a,
        &[path_elem(a, &["b1", "a1"]), path_elem(a, &["b2", "a2"])],
    )
}

/// I1 = <b1*a1 - b1*a2, b2*a2>.
pub fn ideal_i1(a: &Algebra) -> Ideal {
    Ideal::closure(
        a,
        &[
            lin(a, &[(1, &["b1", "a1"]), (-1, &["b1", "a2"])]),
            path_elem(a, &["b2", "a2"]),
        ],
    )
}

/// I2 = <b1*a1 - b2*a1, b2*a2>.
pub fn ideal_i2(a: &Algebra) -> Ideal {
    Ideal::closure(
        a,
        &[
            lin(a, &[(1, &["b1", "a1"]), (-1, &["b2", "a1"])]),
            path_elem(a, &["b2", "a2"]),
        ],
    )
}

/// I3 = <b1*a1 - b1*a2 - b2*a1, b2*a2>.
pub fn ideal_i3(a: &Algebra) -> Ideal {
    Ideal::closure(
        a,
        &[
            lin(
                a,
                &[(1, &["b1", "a1"]), (-1, &["b1", "a2"]), (-1, &["b2", "a1"])],
            ),
            path_elem(a, &["b2", "a2"]),
        ],
    )
}

/// I4 = <b1*a1 + b2*a2, b1*a2 + b2*a1>.
pub fn ideal_i4(a: &Algebra) -> Ideal {
    Ideal::closure(
        a,
        &[
            lin(a, &[(1, &["b1", "a1"]), (1, &["b2", "a2"])]),
            lin(a, &[(1, &["b1", "a2"]), (1, &["b2", "a1"])]),
        ],
    )
}

/// The five named ideals in order: I, I1, I2, I3, I4.
pub fn ideals(a: &Algebra) -> Vec<(String, Ideal)> {
    vec![
        ("I".to_string(), ideal_i(a)),
        ("I1".to_string(), ideal_i1(a)),
        ("I2".to_string(), ideal_i2(a)),
        ("I3".to_string(), ideal_i3(a)),
        ("I4".to_string(), ideal_i4(a)),
    ]
}

/// The explicit automorphism:
/// a1 -> (a1 - a2)/2, a2 -> (a1 + a2)/2, b1 -> (b1 - b2)/2, b2 -> b1 + b2.
/// Fails over fields of characteristic 2, where 1/2 does not exist.
pub fn automorphism_phi(a: &Algebra) -> Result<Morphism, FieldError> {
    let f = a.field();
    let half = f.from_fraction(1, 2)?;
    let m_half = f.from_fraction(-1, 2)?;
    let one = f.one();
    let e = |n: &str| path_elem(a, &[n]);
    let img_a1 = a
        .combine(&a.scale(&e("a1"), &half), &e("a2"), &m_half)
        .unwrap();
    let img_a2 = a
        .combine(&a.scale(&e("a1"), &half), &e("a2"), &half)
        .unwrap();
    let img_b1 = a
        .combine(&a.scale(&e("b1"), &half), &e("b2"), &m_half)
        .unwrap();
    let img_b2 = a.combine(&e("b1"), &e("b2"), &one).unwrap();
    // Canonical arrow order: a1, a2, b1, b2.
    Ok(Morphism::new(a, vec![img_a1, img_a2, img_b1, img_b2]).expect("invertible"))
}
