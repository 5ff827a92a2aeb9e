//! Unitary irreducible representations computed numerically, and the
//! category `Rep(G)` (or `SuperRep(G, z)`) that owns them.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::group::{FiniteGroup, FiniteSuperGroup};
use crate::error::{Error, Result};
use crate::linalg::{self, c, re, CMat, C64};

/// Tolerance used to decide that two characters agree.
const CHAR_TOL: f64 = 1e-6;

#[derive(Debug, Clone)]
pub struct UnitaryIrrep {
    pub label: String,
    pub aliases: Vec<String>,
    pub degree: usize,
    /// `ρ(g)` for every element index `g`.
    pub matrices: Vec<CMat>,
    pub character: Vec<C64>,
}

impl UnitaryIrrep {
    pub fn answers_to(&self, name: &str) -> bool {
        self.label == name || self.aliases.iter().any(|a| a == name)
    }
}

/// How the symmetric braiding of a representation category is twisted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BraidingMode {
    /// The plain swap `v ⊗ w ↦ w ⊗ v`.
    Plain,
    /// The Koszul-signed swap determined by the grading `ρ(z)`.
    Super,
    /// The super braiding twisted by `(−1)^{|x||y|}`, i.e. the bosonization.
    Bosonized,
}

/// `Rep(G)` or `SuperRep(G, z)` with its irreps computed once.
#[derive(Debug)]
pub struct RepCategory {
    group: FiniteGroup,
    z: Option<usize>,
    mode: BraidingMode,
    irreps: Arc<Vec<UnitaryIrrep>>,
}

impl RepCategory {
    pub fn new(group: FiniteGroup, seed: u64) -> Result<Arc<Self>> {
        let irreps = Arc::new(compute_irreps(&group, seed)?);
        Ok(Arc::new(RepCategory {
            group,
            z: None,
            mode: BraidingMode::Plain,
            irreps,
        }))
    }

    pub fn super_rep(sg: &FiniteSuperGroup, seed: u64) -> Result<Arc<Self>> {
        let irreps = Arc::new(compute_irreps(sg.group(), seed)?);
        Ok(Arc::new(RepCategory {
            group: sg.group().clone(),
            z: Some(sg.z()),
            mode: BraidingMode::Super,
            irreps,
        }))
    }

    /// Builds `Rep(G)` or, when a grading element is given, `SuperRep(G, z)`.
    pub fn with_grading(group: FiniteGroup, z: Option<usize>, seed: u64) -> Result<Arc<Self>> {
        match z {
            Some(z) => Self::super_rep(&FiniteSuperGroup::new(group, z)?, seed),
            None => Self::new(group, seed),
        }
    }

    /// Catalog group by name; `SuperHilb` comes graded.
    pub fn catalog(name: &str, seed: u64) -> Result<Arc<Self>> {
        let (g, z) = super::catalog::lookup(name)?;
        Self::with_grading(g, z, seed)
    }

    /// The same objects with the bosonized braiding.
    pub fn bosonize(&self) -> Result<Arc<Self>> {
        if self.mode != BraidingMode::Super {
            return Err(Error::Invalid(
                "bosonization needs a super representation category".into(),
            ));
        }
        Ok(Arc::new(RepCategory {
            group: self.group.clone(),
            z: self.z,
            mode: BraidingMode::Bosonized,
            irreps: self.irreps.clone(),
        }))
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn z(&self) -> Option<usize> {
        self.z
    }

    pub fn mode(&self) -> BraidingMode {
        self.mode
    }

    pub fn irreps(&self) -> &[UnitaryIrrep] {
        &self.irreps
    }

    pub fn irrep_index(&self, name: &str) -> Result<usize> {
        self.irreps
            .iter()
            .position(|r| r.answers_to(name))
            .ok_or_else(|| Error::UnknownLabel(name.to_string()))
    }

    /// Parity of an irrep: the sign of `ρ(z)` (always even without grading).
    pub fn irrep_parity(&self, index: usize) -> i32 {
        match self.z {
            Some(z) => {
                let r = &self.irreps[index];
                if (r.character[z] / re(r.degree as f64)).re < 0.0 {
                    -1
                } else {
                    1
                }
            }
            None => 1,
        }
    }

    /// Structural identity: same group, grading and braiding.
    pub fn same_as(&self, other: &RepCategory) -> bool {
        std::ptr::eq(self, other)
            || (self.group == other.group && self.z == other.z && self.mode == other.mode)
    }
}

/// Decomposes the regular representation with a random commutant element,
/// retrying with fresh randomness when the spectrum fails to separate.
pub fn compute_irreps(group: &FiniteGroup, seed: u64) -> Result<Vec<UnitaryIrrep>> {
    let n = group.order();
    let classes = group.conjugacy_classes().len();
    let regular: Vec<CMat> = (0..n)
        .map(|g| {
            let perm: Vec<usize> = (0..n).map(|h| group.mul(g, h)).collect();
            linalg::permutation_matrix(&perm)
        })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut last_problem = String::new();
    for _attempt in 0..25 {
        let h = linalg::random_hermitian(&mut rng, n);
        let mut avg = linalg::zeros(n, n);
        for r in &regular {
            avg += r * &h * r.adjoint();
        }
        avg /= re(n as f64);
        let (vals, vecs) = linalg::hermitian_eigen(&avg);
        let mut found: Vec<UnitaryIrrep> = Vec::new();
        let mut ok = true;
        for range in linalg::cluster_sorted(&vals, 1e-7) {
            let cols: Vec<usize> = range.collect();
            let q = linalg::select_columns(&vecs, &cols);
            let mats: Vec<CMat> = regular.iter().map(|r| q.adjoint() * r * &q).collect();
            let character: Vec<C64> = mats.iter().map(|m| m.trace()).collect();
            let norm: f64 = character.iter().map(|z| z.norm_sqr()).sum::<f64>() / n as f64;
            if (norm - 1.0).abs() > 1e-6 {
                ok = false;
                last_problem = format!("eigenspace of dimension {} is reducible", cols.len());
                break;
            }
            if !found
                .iter()
                .any(|r| same_character(&r.character, &character))
            {
                found.push(UnitaryIrrep {
                    label: String::new(),
                    aliases: Vec::new(),
                    degree: cols.len(),
                    matrices: mats,
                    character,
                });
            }
        }
        if !ok {
            continue;
        }
        let total: usize = found.iter().map(|r| r.degree * r.degree).sum();
        if total != n || found.len() != classes {
            last_problem = format!("found {} irreps with Σd² = {total}", found.len());
            continue;
        }
        label_irreps(group, &mut found);
        return Ok(found);
    }
    Err(Error::Numeric(format!(
        "irreps of `{}` did not separate: {last_problem}",
        group.name()
    )))
}

fn same_character(a: &[C64], b: &[C64]) -> bool {
    a.iter().zip(b).all(|(x, y)| (x - y).norm() < CHAR_TOL)
}

fn fingerprint_cmp(a: &[C64], b: &[C64]) -> std::cmp::Ordering {
    let key = |z: &C64| ((z.re * 1e6).round() as i64, (z.im * 1e6).round() as i64);
    for (x, y) in a.iter().zip(b) {
        let o = key(y).cmp(&key(x));
        if o != std::cmp::Ordering::Equal {
            return o;
        }
    }
    std::cmp::Ordering::Equal
}

fn label_irreps(group: &FiniteGroup, irreps: &mut [UnitaryIrrep]) {
    let is_trivial = |r: &UnitaryIrrep| {
        r.degree == 1 && r.character.iter().all(|z| (z - re(1.0)).norm() < CHAR_TOL)
    };
    irreps.sort_by(|a, b| {
        is_trivial(b)
            .cmp(&is_trivial(a))
            .then(a.degree.cmp(&b.degree))
            .then_with(|| fingerprint_cmp(&a.character, &b.character))
    });
    let mut counters = std::collections::BTreeMap::new();
    for r in irreps.iter_mut() {
        if is_trivial(r) {
            r.label = "triv".into();
            continue;
        }
        let k = counters.entry(r.degree).or_insert(0u8);
        r.label = format!("{}{}", r.degree, (b'a' + *k) as char);
        *k += 1;
    }
    let rename = |irreps: &mut [UnitaryIrrep], from: &str, to: &str| {
        if let Some(r) = irreps.iter_mut().find(|r| r.label == from) {
            let old = std::mem::replace(&mut r.label, to.to_string());
            r.aliases.push(old);
        }
    };
    let n = group.order();
    match group.name() {
        "S3" => {
            rename(irreps, "1a", "sgn");
            rename(irreps, "2a", "std");
        }
        "S4" => {
            rename(irreps, "1a", "sgn");
            if let Some(t) = group.element_by_name("1023") {
                let std_label = irreps
                    .iter()
                    .find(|r| r.degree == 3 && r.character[t].re > 0.0)
                    .map(|r| r.label.clone());
                if let Some(l) = std_label {
                    let other = if l == "3a" { "3b" } else { "3a" };
                    rename(irreps, &l, "std");
                    rename(irreps, other, "std_sgn");
                }
            }
        }
        "Q8" | "D4" => rename(irreps, "2a", "std"),
        "SuperHilb" => {
            rename(irreps, "triv", "even");
            rename(irreps, "1a", "odd");
        }
        name if name.starts_with('Z')
            && name[1..].parse::<usize>() == Ok(n)
            && n > 1
            && group.element_order(1) == n =>
        {
            for r in irreps.iter_mut() {
                let phase = r.matrices[1][(0, 0)];
                let k = ((phase.arg() / (2.0 * std::f64::consts::PI) * n as f64).round() as i64)
                    .rem_euclid(n as i64);
                let old = std::mem::replace(&mut r.label, format!("chi{k}"));
                r.aliases.push(old);
            }
        }
        _ => {}
    }
    for r in irreps.iter_mut() {
        if r.label != "triv" && r.aliases.iter().all(|a| a != "triv") && is_trivial(r) {
            r.aliases.push("triv".into());
        }
    }
    // cyclic groups list characters by k
    if irreps.iter().all(|r| r.label.starts_with("chi")) {
        irreps.sort_by_key(|r| r.label[3..].parse::<usize>().unwrap_or(usize::MAX));
    }
}

/// `exp(2πi k / n)`.
pub fn root_of_unity(k: i64, n: usize) -> C64 {
    let t = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
    c(t.cos(), t.sin())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::catalog;

    fn degrees(name: &str) -> Vec<usize> {
        let cat = RepCategory::catalog(name, 1).unwrap();
        cat.irreps().iter().map(|r| r.degree).collect()
    }

    #[test]
    fn known_degrees() {
        assert_eq!(degrees("Z3"), vec![1, 1, 1]);
        assert_eq!(degrees("S3"), vec![1, 1, 2]);
        assert_eq!(degrees("Q8"), vec![1, 1, 1, 1, 2]);
        assert_eq!(degrees("D4"), vec![1, 1, 1, 1, 2]);
        assert_eq!(degrees("S4"), vec![1, 1, 2, 3, 3]);
    }

    #[test]
    fn irreps_are_unitary_homomorphisms() {
        for name in ["S3", "Q8", "S4", "Z2xZ2"] {
            let cat = RepCategory::catalog(name, 2).unwrap();
            let g = cat.group();
            for r in cat.irreps() {
                for a in 0..g.order() {
                    assert!(linalg::unitarity_defect(&r.matrices[a]) < 1e-10);
                    for b in 0..g.order() {
                        let lhs = &r.matrices[g.mul(a, b)];
                        let rhs = &r.matrices[a] * &r.matrices[b];
                        assert!(linalg::deviation(lhs, &rhs) < 1e-10);
                    }
                }
            }
        }
    }

    #[test]
    fn cyclic_characters_are_roots_of_unity() {
        let cat = RepCategory::catalog("Z3", 3).unwrap();
        for (k, r) in cat.irreps().iter().enumerate() {
            assert_eq!(r.label, format!("chi{k}"));
            assert!((r.matrices[1][(0, 0)] - root_of_unity(k as i64, 3)).norm() < 1e-10);
        }
        assert_eq!(cat.irrep_index("triv").unwrap(), 0);
    }

    #[test]
    fn friendly_labels() {
        let s3 = RepCategory::catalog("S3", 0).unwrap();
        assert!(s3.irrep_index("std").is_ok());
        assert!(s3.irrep_index("2a").is_ok());
        let s4 = RepCategory::catalog("S4", 0).unwrap();
        let std = &s4.irreps()[s4.irrep_index("std").unwrap()];
        assert_eq!(std.degree, 3);
        let sh = RepCategory::catalog("SuperHilb", 0).unwrap();
        assert_eq!(sh.irrep_parity(sh.irrep_index("odd").unwrap()), -1);
        assert_eq!(sh.irrep_parity(sh.irrep_index("even").unwrap()), 1);
    }

    #[test]
    fn different_seeds_give_equivalent_characters() {
        let g = catalog::quaternion();
        let a = compute_irreps(&g, 10).unwrap();
        let b = compute_irreps(&g, 99).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.label, y.label);
            assert!(same_character(&x.character, &y.character));
        }
    }
}
