//! Finite (super)groupoids, normalised to disjoint unions of vertex groups,
//! and their representation categories as products of component categories.

use std::sync::Arc;

use super::group::FiniteGroup;
use super::irreps::RepCategory;
use super::object::RepObject;
use crate::error::{Error, Result};
use crate::linalg::{self, CMat, C64};

/// One connected component: its objects and the automorphism group of any of them.
#[derive(Debug, Clone)]
pub struct GroupoidComponent {
    pub objects: Vec<String>,
    pub vertex_group: FiniteGroup,
    pub z: Option<usize>,
}

#[derive(Debug, Clone)]
pub struct FiniteGroupoid {
    components: Vec<GroupoidComponent>,
}

impl FiniteGroupoid {
    pub fn new(components: Vec<GroupoidComponent>) -> Result<Self> {
        for c in &components {
            if c.objects.is_empty() {
                return Err(Error::Invalid("groupoid component without objects".into()));
            }
        }
        Ok(FiniteGroupoid { components })
    }

    /// A group as a one-object groupoid.
    pub fn from_group(group: FiniteGroup, z: Option<usize>) -> Self {
        FiniteGroupoid {
            components: vec![GroupoidComponent {
                objects: vec!["*".into()],
                vertex_group: group,
                z,
            }],
        }
    }

    /// The action groupoid of `group` on `0..points`, where `action[g][p]` is
    /// the image of `p`. Components are orbits, vertex groups stabilisers.
    pub fn action(group: &FiniteGroup, action: &[Vec<usize>]) -> Result<Self> {
        let n = group.order();
        if action.len() != n {
            return Err(Error::Invalid(
                "one permutation per group element required".into(),
            ));
        }
        let points = action[0].len();
        for a in 0..n {
            for b in 0..n {
                for p in 0..points {
                    if action[group.mul(a, b)][p] != action[a][action[b][p]] {
                        return Err(Error::Invalid("not a left action".into()));
                    }
                }
            }
        }
        let mut seen = vec![false; points];
        let mut components = Vec::new();
        for p in 0..points {
            if seen[p] {
                continue;
            }
            let mut orbit: Vec<usize> = (0..n).map(|g| action[g][p]).collect();
            orbit.sort_unstable();
            orbit.dedup();
            for &q in &orbit {
                seen[q] = true;
            }
            let stab: Vec<usize> = (0..n).filter(|&g| action[g][p] == p).collect();
            let index = |g: usize| {
                stab.iter()
                    .position(|&s| s == g)
                    .expect("stabiliser is closed")
            };
            let table = stab
                .iter()
                .map(|&a| stab.iter().map(|&b| index(group.mul(a, b))).collect())
                .collect();
            let names = stab
                .iter()
                .map(|&g| group.element_name(g).to_string())
                .collect();
            let vertex_group =
                FiniteGroup::new(format!("Stab({p})"), table)?.with_element_names(names)?;
            components.push(GroupoidComponent {
                objects: orbit.iter().map(|q| q.to_string()).collect(),
                vertex_group,
                z: None,
            });
        }
        Ok(FiniteGroupoid { components })
    }

    pub fn disjoint_union(&self, other: &FiniteGroupoid) -> FiniteGroupoid {
        let mut components = self.components.clone();
        components.extend(other.components.iter().cloned());
        FiniteGroupoid { components }
    }

    pub fn components(&self) -> &[GroupoidComponent] {
        &self.components
    }

    pub fn object_count(&self) -> usize {
        self.components.iter().map(|c| c.objects.len()).sum()
    }
}

/// `Rep` of a finite (super)groupoid: one representation category per component.
#[derive(Debug, Clone)]
pub struct RepGroupoid {
    cats: Vec<Arc<RepCategory>>,
}

/// A representation of a groupoid: one representation per component.
#[derive(Debug, Clone)]
pub struct GroupoidRep {
    parts: Vec<RepObject>,
}

impl RepGroupoid {
    pub fn new(groupoid: &FiniteGroupoid, seed: u64) -> Result<Self> {
        let cats = groupoid
            .components()
            .iter()
            .map(|c| RepCategory::with_grading(c.vertex_group.clone(), c.z, seed))
            .collect::<Result<_>>()?;
        Ok(RepGroupoid { cats })
    }

    pub fn categories(&self) -> &[Arc<RepCategory>] {
        &self.cats
    }

    pub fn unit(&self) -> GroupoidRep {
        GroupoidRep {
            parts: self.cats.iter().map(RepObject::unit).collect(),
        }
    }

    /// A representation from one object per component.
    pub fn object(&self, parts: Vec<RepObject>) -> Result<GroupoidRep> {
        if parts.len() != self.cats.len()
            || parts
                .iter()
                .zip(&self.cats)
                .any(|(p, c)| !p.category().same_as(c))
        {
            return Err(Error::GroupMismatch(
                "one object per component required".into(),
            ));
        }
        Ok(GroupoidRep { parts })
    }

    /// The simple object supported on one component.
    pub fn simple(&self, component: usize, irrep: usize) -> GroupoidRep {
        let parts = self
            .cats
            .iter()
            .enumerate()
            .map(|(k, c)| {
                if k == component {
                    RepObject::irrep(c, irrep)
                } else {
                    RepObject::zero(c)
                }
            })
            .collect();
        GroupoidRep { parts }
    }

    /// Number of simple summands of the unit object, i.e. `dim end(1)`.
    /// The category is connected iff this is 1.
    pub fn unit_components(&self) -> usize {
        self.unit().parts.iter().map(RepObject::commutant_dim).sum()
    }

    pub fn is_connected(&self) -> bool {
        self.unit_components() == 1
    }
}

impl GroupoidRep {
    pub fn parts(&self) -> &[RepObject] {
        &self.parts
    }

    fn zip_with(
        &self,
        other: &GroupoidRep,
        f: impl Fn(&RepObject, &RepObject) -> Result<RepObject>,
    ) -> Result<Self> {
        if self.parts.len() != other.parts.len() {
            return Err(Error::GroupMismatch(
                "representations of different groupoids".into(),
            ));
        }
        let parts = self
            .parts
            .iter()
            .zip(&other.parts)
            .map(|(a, b)| f(a, b))
            .collect::<Result<_>>()?;
        Ok(GroupoidRep { parts })
    }

    pub fn tensor(&self, other: &GroupoidRep) -> Result<Self> {
        self.zip_with(other, RepObject::tensor)
    }

    pub fn direct_sum(&self, other: &GroupoidRep) -> Result<Self> {
        self.zip_with(other, RepObject::direct_sum)
    }

    pub fn conjugate(&self) -> Self {
        GroupoidRep {
            parts: self.parts.iter().map(RepObject::conjugate).collect(),
        }
    }

    /// `dim x` as an element of `end(1) = ℂ^{components}`.
    pub fn dim(&self) -> Vec<f64> {
        self.parts.iter().map(|p| p.dim() as f64).collect()
    }

    pub fn hom_dim(&self, other: &GroupoidRep) -> Result<usize> {
        self.parts
            .iter()
            .zip(&other.parts)
            .map(|(a, b)| RepObject::hom_dim(a, b))
            .sum()
    }

    /// `⟨α, β⟩ = Σ_c tr(α_c* β_c)`, one term per component.
    pub fn inner_product(alpha: &[CMat], beta: &[CMat]) -> C64 {
        alpha
            .iter()
            .zip(beta)
            .map(|(a, b)| linalg::hs_inner(a, b))
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::catalog;

    #[test]
    fn action_groupoid_of_s3_on_pairs() {
        // S3 acting on {0,1,2} ⊔ {3}: orbits of sizes 3 and 1
        let s3 = catalog::symmetric(3).unwrap();
        let action: Vec<Vec<usize>> = (0..6)
            .map(|g| {
                let name = s3.element_name(g);
                let mut p: Vec<usize> = name
                    .chars()
                    .map(|c| c.to_digit(10).unwrap() as usize)
                    .collect();
                p.push(3);
                p
            })
            .collect();
        let gd = FiniteGroupoid::action(&s3, &action).unwrap();
        let sizes: Vec<(usize, usize)> = gd
            .components()
            .iter()
            .map(|c| (c.objects.len(), c.vertex_group.order()))
            .collect();
        assert_eq!(sizes, vec![(3, 2), (1, 6)]);
        let rep = RepGroupoid::new(&gd, 0).unwrap();
        assert_eq!(rep.unit_components(), 2);
        assert!(!rep.is_connected());
    }

    #[test]
    fn group_is_connected() {
        let rep =
            RepGroupoid::new(&FiniteGroupoid::from_group(catalog::quaternion(), None), 0).unwrap();
        assert!(rep.is_connected());
    }

    #[test]
    fn dims_live_in_end_of_unit() {
        let gd = FiniteGroupoid::from_group(catalog::symmetric(3).unwrap(), None).disjoint_union(
            &FiniteGroupoid::from_group(catalog::cyclic(3).unwrap(), None),
        );
        let rep = RepGroupoid::new(&gd, 0).unwrap();
        let x = rep.simple(0, 2).direct_sum(&rep.simple(1, 1)).unwrap();
        assert_eq!(x.dim(), vec![2.0, 1.0]);
        let xx = x.tensor(&x.conjugate()).unwrap();
        assert_eq!(xx.dim(), vec![4.0, 1.0]);
        assert_eq!(x.hom_dim(&x).unwrap(), 2);
        // end(1) is spanned by the two component idempotents, which commute
        let e0 = vec![linalg::identity(1), linalg::zeros(1, 1)];
        let e1 = vec![linalg::zeros(1, 1), linalg::identity(1)];
        assert!(GroupoidRep::inner_product(&e0, &e1).norm() < 1e-15);
        let prod01: Vec<CMat> = e0.iter().zip(&e1).map(|(a, b)| a * b).collect();
        let prod10: Vec<CMat> = e1.iter().zip(&e0).map(|(a, b)| a * b).collect();
        assert_eq!(prod01, prod10);
    }
}
