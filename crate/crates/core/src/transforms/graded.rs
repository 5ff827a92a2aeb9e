//! `Hilb[G]`: finite-dimensional `G`-graded Hilbert spaces with the
//! convolution tensor product.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, CMat};
use crate::rep::FiniteGroup;

/// A `G`-graded Hilbert space. The carrier is `⊕_g ℂ^{n_g}`, fibers stacked
/// in element order.
#[derive(Debug, Clone, PartialEq)]
pub struct GradedObject {
    group: FiniteGroup,
    fibers: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct RawGraded {
    group: String,
    fibers: BTreeMap<String, usize>,
}

impl GradedObject {
    pub fn new(group: FiniteGroup, fibers: Vec<usize>) -> Result<Self> {
        if fibers.len() != group.order() {
            return Err(Error::Invalid(format!(
                "{} fibers for a group of order {}",
                fibers.len(),
                group.order()
            )));
        }
        Ok(GradedObject { group, fibers })
    }

    pub fn zero(group: &FiniteGroup) -> Self {
        GradedObject {
            group: group.clone(),
            fibers: vec![0; group.order()],
        }
    }

    /// `ℂ` placed in degree `g`.
    pub fn delta(group: &FiniteGroup, g: usize) -> Self {
        let mut x = Self::zero(group);
        x.fibers[g] = 1;
        x
    }

    /// The unit: `ℂ` in the identity degree.
    pub fn unit(group: &FiniteGroup) -> Self {
        Self::delta(group, group.identity())
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn fibers(&self) -> &[usize] {
        &self.fibers
    }

    pub fn fiber(&self, g: usize) -> usize {
        self.fibers[g]
    }

    pub fn dim(&self) -> usize {
        self.fibers.iter().sum()
    }

    /// Offset of fiber `g` inside the carrier.
    pub fn offset(&self, g: usize) -> usize {
        self.fibers[..g].iter().sum()
    }

    /// Degree of each carrier coordinate.
    pub fn degrees(&self) -> Vec<usize> {
        self.fibers
            .iter()
            .enumerate()
            .flat_map(|(g, &n)| std::iter::repeat_n(g, n))
            .collect()
    }

    fn check_group(&self, other: &GradedObject) -> Result<()> {
        if self.group != other.group {
            return Err(Error::GroupMismatch(format!(
                "graded over `{}` and `{}`",
                self.group.name(),
                other.group.name()
            )));
        }
        Ok(())
    }

    pub fn direct_sum(&self, other: &GradedObject) -> Result<GradedObject> {
        self.check_group(other)?;
        Ok(GradedObject {
            group: self.group.clone(),
            fibers: self
                .fibers
                .iter()
                .zip(&other.fibers)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// `(x ⊗ y)(g) = ⊕_{g′g″ = g} x(g′) ⊗ y(g″)`.
    pub fn convolution_tensor(&self, other: &GradedObject) -> Result<GradedObject> {
        self.check_group(other)?;
        let mut fibers = vec![0; self.group.order()];
        for (a, &na) in self.fibers.iter().enumerate() {
            for (b, &nb) in other.fibers.iter().enumerate() {
                fibers[self.group.mul(a, b)] += na * nb;
            }
        }
        Ok(GradedObject {
            group: self.group.clone(),
            fibers,
        })
    }

    /// The permutation from the Kronecker carrier `x ⊗ y` to the carrier of
    /// the convolution product, which groups summands by degree.
    pub fn convolution_coordinates(&self, other: &GradedObject) -> Result<CMat> {
        let prod = self.convolution_tensor(other)?;
        let dx = self.degrees();
        let dy = other.degrees();
        let mut next: Vec<usize> = (0..prod.group.order()).map(|g| prod.offset(g)).collect();
        let mut perm = vec![0; dx.len() * dy.len()];
        for (i, &a) in dx.iter().enumerate() {
            for (j, &b) in dy.iter().enumerate() {
                let g = self.group.mul(a, b);
                perm[i * dy.len() + j] = next[g];
                next[g] += 1;
            }
        }
        Ok(linalg::permutation_matrix(&perm))
    }

    /// The symmetry `x ⊗ y → y ⊗ x` of `Hilb[G]` for abelian `G`, on
    /// convolution carriers.
    pub fn braiding(&self, other: &GradedObject) -> Result<CMat> {
        if !self.group.is_abelian() {
            return Err(Error::NotAbelian(self.group.name().to_string()));
        }
        let pxy = self.convolution_coordinates(other)?;
        let pyx = other.convolution_coordinates(self)?;
        Ok(pyx * linalg::swap_matrix(self.dim(), other.dim()) * pxy.transpose())
    }

    /// Largest entry of `m` connecting different degrees.
    pub fn grading_defect(x: &GradedObject, y: &GradedObject, m: &CMat) -> f64 {
        if m.shape() != (y.dim(), x.dim()) {
            return f64::INFINITY;
        }
        let (dx, dy) = (x.degrees(), y.degrees());
        let mut worst = 0.0f64;
        for (r, &gr) in dy.iter().enumerate() {
            for (c, &gc) in dx.iter().enumerate() {
                if gr != gc {
                    worst = worst.max(m[(r, c)].norm());
                }
            }
        }
        worst
    }

    /// `{"group": name, "fibers": {element: dim}}`, omitting empty fibers.
    pub fn to_json(&self) -> serde_json::Value {
        let fibers = self
            .fibers
            .iter()
            .enumerate()
            .filter(|(_, &n)| n > 0)
            .map(|(g, &n)| (self.group.element_name(g).to_string(), n))
            .collect();
        serde_json::to_value(RawGraded {
            group: self.group.name().to_string(),
            fibers,
        })
        .expect("graded object serializes")
    }

    pub fn from_json(group: &FiniteGroup, value: &serde_json::Value) -> Result<Self> {
        let raw: RawGraded =
            serde_json::from_value(value.clone()).map_err(|e| Error::Invalid(e.to_string()))?;
        if raw.group != group.name() {
            return Err(Error::GroupMismatch(format!(
                "expected `{}`, got `{}`",
                group.name(),
                raw.group
            )));
        }
        let mut x = Self::zero(group);
        for (name, n) in raw.fibers {
            let g = group
                .element_by_name(&name)
                .ok_or(Error::UnknownLabel(name))?;
            x.fibers[g] = n;
        }
        Ok(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::catalog;

    #[test]
    fn deltas_multiply() {
        let z5 = catalog::cyclic(5).unwrap();
        let x = GradedObject::delta(&z5, 2)
            .convolution_tensor(&GradedObject::delta(&z5, 4))
            .unwrap();
        assert_eq!(x, GradedObject::delta(&z5, 1));
    }

    #[test]
    fn z2_counts() {
        let z2 = catalog::cyclic(2).unwrap();
        let x = GradedObject::new(z2, vec![1, 1]).unwrap();
        assert_eq!(x.convolution_tensor(&x).unwrap().fibers(), &[2, 2]);
    }

    #[test]
    fn unit_is_neutral() {
        let g = catalog::klein();
        let x = GradedObject::new(g.clone(), vec![2, 0, 1, 3]).unwrap();
        assert_eq!(GradedObject::unit(&g).convolution_tensor(&x).unwrap(), x);
    }

    #[test]
    fn braiding_is_graded_and_involutive() {
        let z3 = catalog::cyclic(3).unwrap();
        let x = GradedObject::new(z3.clone(), vec![1, 2, 0]).unwrap();
        let y = GradedObject::new(z3, vec![0, 1, 1]).unwrap();
        let bxy = x.braiding(&y).unwrap();
        let byx = y.braiding(&x).unwrap();
        let xy = x.convolution_tensor(&y).unwrap();
        assert!(GradedObject::grading_defect(&xy, &xy, &bxy) < 1e-15);
        assert!(linalg::deviation(&(byx * bxy), &linalg::identity(xy.dim())) < 1e-15);
    }

    #[test]
    fn json_roundtrip() {
        let g = catalog::cyclic(4).unwrap();
        let x = GradedObject::new(g.clone(), vec![0, 2, 0, 1]).unwrap();
        let v = x.to_json();
        assert_eq!(v["fibers"]["1"], 2);
        assert_eq!(GradedObject::from_json(&g, &v).unwrap(), x);
    }
}
