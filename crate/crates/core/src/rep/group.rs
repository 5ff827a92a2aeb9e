//! Finite groups given by multiplication tables, and supergroups `(G, z)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite group with elements `0..n`; `table[a][b]` is the index of `a·b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
    element_names: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct RawGroup {
    #[serde(default)]
    name: Option<String>,
    order: usize,
    table: Vec<Vec<usize>>,
    #[serde(default)]
    identity: Option<usize>,
    #[serde(default)]
    elements: Option<Vec<String>>,
    #[serde(default)]
    central_involution: Option<usize>,
}

impl FiniteGroup {
    /// Validates the table (closure, associativity, identity, inverses).
    pub fn new(name: impl Into<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        let name = name.into();
        if n == 0 {
            return Err(Error::Invalid("group must be nonempty".into()));
        }
        if table
            .iter()
            .any(|row| row.len() != n || row.iter().any(|&x| x >= n))
        {
            return Err(Error::Invalid(format!(
                "table of `{name}` is not a closed {n}×{n} table"
            )));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| Error::Invalid(format!("`{name}` has no identity")))?;
        let mut inverse = vec![0; n];
        for (a, inv) in inverse.iter_mut().enumerate() {
            *inv = (0..n)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or_else(|| Error::Invalid(format!("element {a} of `{name}` has no inverse")))?;
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(Error::Invalid(format!(
                            "`{name}` is not associative at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            name,
            element_names: (0..n).map(|i| i.to_string()).collect(),
            table,
            identity,
            inverse,
        })
    }

    pub fn with_element_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.order() {
            return Err(Error::Invalid("one name per element required".into()));
        }
        self.element_names = names;
        Ok(self)
    }

    /// Closure of a set of permutations of `0..degree` under composition.
    /// Elements are ordered by discovery (breadth first, identity first);
    /// the product is `(p·q)(i) = p(q(i))`.
    pub fn from_permutations(
        name: impl Into<String>,
        degree: usize,
        generators: &[Vec<usize>],
    ) -> Result<Self> {
        let id: Vec<usize> = (0..degree).collect();
        let mut elements = vec![id];
        let mut frontier = 0;
        while frontier < elements.len() {
            let p = elements[frontier].clone();
            frontier += 1;
            for g in generators {
                let q: Vec<usize> = (0..degree).map(|i| g[p[i]]).collect();
                if !elements.contains(&q) {
                    elements.push(q);
                }
            }
        }
        let index = |p: &Vec<usize>| elements.iter().position(|e| e == p).expect("closed set");
        let table = elements
            .iter()
            .map(|p| {
                elements
                    .iter()
                    .map(|q| index(&(0..degree).map(|i| p[q[i]]).collect()))
                    .collect()
            })
            .collect();
        let names = elements
            .iter()
            .map(|p| p.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(""))
            .collect();
        FiniteGroup::new(name, table)?.with_element_names(names)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn element_name(&self, a: usize) -> &str {
        &self.element_names[a]
    }

    pub fn element_names(&self) -> &[String] {
        &self.element_names
    }

    pub fn element_by_name(&self, name: &str) -> Option<usize> {
        self.element_names.iter().position(|n| n == name)
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    pub fn is_central(&self, z: usize) -> bool {
        (0..self.order()).all(|a| self.table[a][z] == self.table[z][a])
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.table[x][a];
            k += 1;
        }
        k
    }

    pub fn is_cyclic(&self) -> bool {
        (0..self.order()).any(|a| self.element_order(a) == self.order())
    }

    /// Conjugacy classes, each sorted, in order of smallest element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        for a in 0..n {
            if seen[a] {
                continue;
            }
            let mut class: Vec<usize> = (0..n)
                .map(|g| self.mul(self.mul(g, a), self.inv(g)))
                .collect();
            class.sort_unstable();
            class.dedup();
            for &c in &class {
                seen[c] = true;
            }
            classes.push(class);
        }
        classes
    }

    /// Checks that `phi: self → other` (given on element indices) is a homomorphism.
    pub fn is_homomorphism(&self, other: &FiniteGroup, phi: &[usize]) -> bool {
        let n = self.order();
        phi.len() == n
            && phi.iter().all(|&x| x < other.order())
            && (0..n).all(|a| (0..n).all(|b| phi[self.mul(a, b)] == other.mul(phi[a], phi[b])))
    }

    /// Direct product `self × other`, element `(a, b)` at index `a·|other| + b`.
    pub fn product(&self, other: &FiniteGroup, name: impl Into<String>) -> Result<FiniteGroup> {
        let (n, m) = (self.order(), other.order());
        let table = (0..n * m)
            .map(|x| {
                (0..n * m)
                    .map(|y| self.mul(x / m, y / m) * m + other.mul(x % m, y % m))
                    .collect()
            })
            .collect();
        let names = (0..n * m)
            .map(|x| {
                format!(
                    "({},{})",
                    self.element_name(x / m),
                    other.element_name(x % m)
                )
            })
            .collect();
        FiniteGroup::new(name, table)?.with_element_names(names)
    }

    /// Parses the JSON group format; returns the group and the optional
    /// central involution.
    pub fn from_json(text: &str) -> Result<(FiniteGroup, Option<usize>)> {
        let raw: RawGroup =
            serde_json::from_str(text).map_err(|e| Error::Invalid(e.to_string()))?;
        if raw.order != raw.table.len() {
            return Err(Error::Invalid(format!(
                "declared order {} but table has {} rows",
                raw.order,
                raw.table.len()
            )));
        }
        let mut g = FiniteGroup::new(
            raw.name.unwrap_or_else(|| format!("G{}", raw.order)),
            raw.table,
        )?;
        if let Some(id) = raw.identity {
            if id != g.identity {
                return Err(Error::Invalid(format!(
                    "declared identity {id} is not the identity"
                )));
            }
        }
        if let Some(names) = raw.elements {
            g = g.with_element_names(names)?;
        }
        Ok((g, raw.central_involution))
    }

    pub fn to_json(&self, central_involution: Option<usize>) -> String {
        serde_json::to_string(&RawGroup {
            name: Some(self.name.clone()),
            order: self.order(),
            table: self.table.clone(),
            identity: Some(self.identity),
            elements: Some(self.element_names.clone()),
            central_involution,
        })
        .expect("group serializes")
    }
}

/// A finite supergroup: a group with a central element `z`, `z² = 1`, whose
/// action defines the grading of every representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSuperGroup {
    group: FiniteGroup,
    z: usize,
}

impl FiniteSuperGroup {
    pub fn new(group: FiniteGroup, z: usize) -> Result<Self> {
        if z >= group.order() {
            return Err(Error::Invalid(format!("z = {z} is not an element")));
        }
        if !group.is_central(z) {
            return Err(Error::Invalid(format!(
                "z = {} is not central",
                group.element_name(z)
            )));
        }
        if group.mul(z, z) != group.identity() {
            return Err(Error::Invalid(format!(
                "z = {} does not square to 1",
                group.element_name(z)
            )));
        }
        Ok(FiniteSuperGroup { group, z })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn z(&self) -> usize {
        self.z
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_groups() {
        assert!(FiniteGroup::new("bad", vec![vec![0, 0], vec![0, 0]]).is_err());
        assert!(FiniteGroup::new("bad", vec![vec![0, 1], vec![1, 2]]).is_err());
    }

    #[test]
    fn permutation_closure_of_s3() {
        let g = FiniteGroup::from_permutations("S3", 3, &[vec![1, 0, 2], vec![1, 2, 0]]).unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        assert_eq!(g.conjugacy_classes().len(), 3);
    }

    #[test]
    fn json_roundtrip_keeps_involution() {
        let g = FiniteGroup::new("Z2", vec![vec![0, 1], vec![1, 0]]).unwrap();
        let (back, z) = FiniteGroup::from_json(&g.to_json(Some(1))).unwrap();
        assert_eq!(back, g);
        assert_eq!(z, Some(1));
        assert!(FiniteSuperGroup::new(back, 1).is_ok());
    }

    #[test]
    fn supergroup_needs_central_involution() {
        let s3 = FiniteGroup::from_permutations("S3", 3, &[vec![1, 0, 2], vec![1, 2, 0]]).unwrap();
        let t = s3.element_by_name("102").unwrap();
        assert!(FiniteSuperGroup::new(s3, t).is_err());
    }
}
