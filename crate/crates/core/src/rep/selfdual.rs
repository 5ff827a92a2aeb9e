//! Self-duality of simple objects: for `f: x → x*`, the dagger
//! `f† = (y* ⊗ i_x)(y* ⊗ f ⊗ x*)(e_y ⊗ x*)` with `y = x*` equals `±f`.

use serde::Serialize;

use super::adjunction::Adjunction;
use super::object::RepObject;
use crate::error::{Error, Result};
use crate::linalg::{self, CMat, C64};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SelfDuality {
    NotSelfDual,
    Plus,
    Minus,
}

impl SelfDuality {
    pub fn sign(self) -> Option<i32> {
        match self {
            SelfDuality::NotSelfDual => None,
            SelfDuality::Plus => Some(1),
            SelfDuality::Minus => Some(-1),
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            SelfDuality::NotSelfDual => "not-self-dual",
            SelfDuality::Plus => "+1",
            SelfDuality::Minus => "-1",
        }
    }
}

#[derive(Debug, Clone)]
pub struct SelfDualityReport {
    pub class: SelfDuality,
    /// An isomorphism `x → x*` when one exists.
    pub witness: Option<CMat>,
    /// `min(‖f† − f‖, ‖f† + f‖)` for the witness.
    pub residual: f64,
}

/// `f†: y* → x*` for `f: x → y`, built from the canonical adjunctions.
pub fn dagger(x: &RepObject, y: &RepObject, f: &CMat) -> Result<CMat> {
    if f.shape() != (y.dim(), x.dim()) {
        return Err(Error::Shape {
            label: "dagger input".into(),
            expected: (y.dim(), x.dim()),
            got: f.shape(),
        });
    }
    let ix = Adjunction::canonical(x).unit();
    let ey = Adjunction::canonical(y).counit();
    let id_ys = linalg::identity(y.dim());
    let id_xs = linalg::identity(x.dim());
    let step1 = linalg::kron(&id_ys, &ix);
    let step2 = linalg::kron(&linalg::kron(&id_ys, f), &id_xs);
    let step3 = linalg::kron(&ey, &id_xs);
    Ok(step3 * step2 * step1)
}

/// Classifies a simple object as not self-dual, or self-dual with `f† = ±f`.
pub fn classify_self_dual(x: &RepObject) -> Result<SelfDualityReport> {
    if !x.is_simple() {
        return Err(Error::NotSimple(x.commutant_dim()));
    }
    let xs = x.conjugate();
    let basis = RepObject::hom_basis(x, &xs)?;
    let Some(f) = basis.into_iter().next() else {
        return Ok(SelfDualityReport {
            class: SelfDuality::NotSelfDual,
            witness: None,
            residual: 0.0,
        });
    };
    // x* ≅ x* as carriers, so f†: x → x* again
    let fd = dagger(x, &xs, &f)?;
    let plus = linalg::deviation(&fd, &f);
    let minus = linalg::deviation(&fd, &(-&f));
    let (class, residual) = if plus <= minus {
        (SelfDuality::Plus, plus)
    } else {
        (SelfDuality::Minus, minus)
    };
    if residual > 1e-6 {
        return Err(Error::Numeric(format!(
            "dagger is not ±f (residual {residual:.3e})"
        )));
    }
    Ok(SelfDualityReport {
        class,
        witness: Some(f),
        residual,
    })
}

/// Frobenius–Schur indicator `(1/|G|) Σ_g χ(g²)`.
pub fn frobenius_schur(x: &RepObject) -> C64 {
    let g = x.category().group();
    let chi = x.character();
    let sum: C64 = (0..g.order()).map(|a| chi[g.mul(a, a)]).sum();
    sum / linalg::re(g.order() as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::RepCategory;

    fn class_of(group: &str, irrep: &str) -> SelfDuality {
        let cat = RepCategory::catalog(group, 0).unwrap();
        classify_self_dual(&RepObject::irrep_named(&cat, irrep).unwrap())
            .unwrap()
            .class
    }

    #[test]
    fn known_signs() {
        assert_eq!(class_of("S3", "std"), SelfDuality::Plus);
        assert_eq!(class_of("Q8", "std"), SelfDuality::Minus);
        assert_eq!(class_of("D4", "std"), SelfDuality::Plus);
        assert_eq!(class_of("Z3", "chi1"), SelfDuality::NotSelfDual);
        assert_eq!(class_of("Z3", "chi0"), SelfDuality::Plus);
    }

    #[test]
    fn dagger_is_transpose() {
        let cat = RepCategory::catalog("S3", 0).unwrap();
        let x = RepObject::irrep_named(&cat, "std").unwrap();
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(1);
        let f = linalg::random_matrix(&mut rng, 2, 2);
        let fd = dagger(&x, &x.conjugate(), &f).unwrap();
        assert!(linalg::deviation(&fd, &f.transpose()) < 1e-12);
    }

    #[test]
    fn agrees_with_frobenius_schur_on_catalog() {
        for name in ["Z4", "Z2xZ2", "S3", "S4", "D4", "Q8"] {
            let cat = RepCategory::catalog(name, 0).unwrap();
            for k in 0..cat.irreps().len() {
                let x = RepObject::irrep(&cat, k);
                let fs = frobenius_schur(&x);
                let expect = match fs.re.round() as i32 {
                    1 => SelfDuality::Plus,
                    -1 => SelfDuality::Minus,
                    _ => SelfDuality::NotSelfDual,
                };
                assert_eq!(
                    classify_self_dual(&x).unwrap().class,
                    expect,
                    "{name} irrep {k}"
                );
            }
        }
    }

    #[test]
    fn rejects_non_simple() {
        let cat = RepCategory::catalog("S3", 0).unwrap();
        let x = RepObject::regular(&cat);
        assert!(matches!(classify_self_dual(&x), Err(Error::NotSimple(_))));
    }
}
