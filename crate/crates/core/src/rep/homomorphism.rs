//! Restriction functors `Rep(G) → Rep(H)` along group homomorphisms
//! `φ: H → G`, and a validator for the symmetric monoidal structure.

use std::sync::Arc;

use serde::Serialize;

use super::adjunction::Adjunction;
use super::irreps::RepCategory;
use super::object::{braiding, RepObject};
use crate::error::{Error, Result};
use crate::linalg;

#[derive(Debug, Clone)]
pub struct Restriction {
    src: Arc<RepCategory>,
    dst: Arc<RepCategory>,
    phi: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FunctorCheck {
    pub tensor: f64,
    pub braiding: f64,
    pub star: f64,
    pub unit: f64,
    pub dimension: f64,
    pub balancing: f64,
}

impl FunctorCheck {
    pub fn worst(&self) -> f64 {
        [
            self.tensor,
            self.braiding,
            self.star,
            self.unit,
            self.dimension,
            self.balancing,
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }
}

impl Restriction {
    /// `src = Rep(G)`, `dst = Rep(H)`, `phi[h] ∈ G`.
    pub fn new(src: Arc<RepCategory>, dst: Arc<RepCategory>, phi: Vec<usize>) -> Result<Self> {
        if !dst.group().is_homomorphism(src.group(), &phi) {
            return Err(Error::Invalid("map is not a group homomorphism".into()));
        }
        if let (Some(zh), Some(zg)) = (dst.z(), src.z()) {
            if phi[zh] != zg {
                return Err(Error::Invalid(
                    "homomorphism does not preserve the grading element".into(),
                ));
            }
        } else if dst.z().is_some() != src.z().is_some() {
            return Err(Error::Invalid("grading present on only one side".into()));
        }
        Ok(Restriction { src, dst, phi })
    }

    pub fn apply(&self, x: &RepObject) -> RepObject {
        let mats = self.phi.iter().map(|&g| x.matrix(g).clone()).collect();
        RepObject::from_parts_unchecked(self.dst.clone(), mats)
    }

    /// Checks on `x`, `y` that the restriction is strictly monoidal,
    /// preserves braiding, duals, the unit, dimensions and balancings.
    pub fn check(&self, x: &RepObject, y: &RepObject) -> Result<FunctorCheck> {
        if !x.category().same_as(&self.src) || !y.category().same_as(&self.src) {
            return Err(Error::GroupMismatch(
                "objects outside the source category".into(),
            ));
        }
        let (fx, fy) = (self.apply(x), self.apply(y));
        let fxy = self.apply(&x.tensor(y)?);
        let fx_fy = fx.tensor(&fy)?;
        let id = linalg::identity(fxy.dim());
        let tensor = RepObject::equivariance_defect(&fx_fy, &fxy, &id);
        let braiding_dev = linalg::deviation(&braiding(&fx, &fy)?, &braiding(x, y)?);
        let star = RepObject::equivariance_defect(
            &self.apply(&x.conjugate()),
            &fx.conjugate(),
            &linalg::identity(x.dim()),
        );
        let unit = RepObject::equivariance_defect(
            &self.apply(&RepObject::unit(&self.src)),
            &RepObject::unit(&self.dst),
            &linalg::identity(1),
        );
        let dimension =
            (Adjunction::well_balanced(&fx).dim() - Adjunction::well_balanced(x).dim()).abs();
        let balancing = linalg::deviation(
            &Adjunction::well_balanced(&fx).balancing(),
            &Adjunction::well_balanced(x).balancing(),
        );
        Ok(FunctorCheck {
            tensor,
            braiding: braiding_dev,
            star,
            unit,
            dimension,
            balancing,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::catalog;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn restriction_from_s3_to_z3() {
        let s3 = RepCategory::catalog("S3", 0).unwrap();
        let z3 = RepCategory::catalog("Z3", 0).unwrap();
        let g = s3.group();
        let r = g.element_by_name("120").unwrap();
        let phi = vec![g.identity(), r, g.mul(r, r)];
        let res = Restriction::new(s3.clone(), z3.clone(), phi).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let x = RepObject::random_with_multiplicities(&s3, &[1, 0, 1], &mut rng);
        let y = RepObject::irrep_named(&s3, "std").unwrap();
        let report = res.check(&x, &y).unwrap();
        assert!(report.worst() < 1e-9, "{report:?}");
        // std restricts to the two nontrivial characters
        assert_eq!(res.apply(&y).multiplicities(), vec![0, 1, 1]);
    }

    #[test]
    fn rejects_non_homomorphisms() {
        let s3 = RepCategory::catalog("S3", 0).unwrap();
        let z2 = RepCategory::catalog("Z2", 0).unwrap();
        let t = s3.group().element_by_name("120").unwrap();
        assert!(Restriction::new(s3, z2, vec![0, t]).is_err());
    }

    #[test]
    fn graded_restriction() {
        let q8 = RepCategory::super_rep(&catalog::super_quaternion(), 0).unwrap();
        let sh = RepCategory::catalog("SuperHilb", 0).unwrap();
        let res = Restriction::new(q8.clone(), sh, vec![0, 4]).unwrap();
        let x = RepObject::irrep_named(&q8, "std").unwrap();
        let report = res.check(&x, &x).unwrap();
        assert!(report.worst() < 1e-9, "{report:?}");
    }
}
