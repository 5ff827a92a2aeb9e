//! Built-in groups: ℤ/n (n ≤ 12), ℤ/2×ℤ/2, S3, S4, D4, Q8 and the
//! supergroup {1, z} whose representations are super-Hilbert spaces.

use std::path::Path;

use super::group::{FiniteGroup, FiniteSuperGroup};
use crate::error::{Error, Result};

pub const CATALOG_NAMES: &[&str] = &[
    "Z2",
    "Z3",
    "Z4",
    "Z5",
    "Z6",
    "Z7",
    "Z8",
    "Z9",
    "Z10",
    "Z11",
    "Z12",
    "Z2xZ2",
    "S3",
    "S4",
    "D4",
    "Q8",
    "SuperHilb",
    "SuperQ8",
];

pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 || n > 12 {
        return Err(Error::Invalid(format!(
            "cyclic groups are catalogued for 1 ≤ n ≤ 12, got {n}"
        )));
    }
    let table = (0..n)
        .map(|a| (0..n).map(|b| (a + b) % n).collect())
        .collect();
    FiniteGroup::new(format!("Z{n}"), table)
}

pub fn klein() -> FiniteGroup {
    let z2 = cyclic(2).expect("n = 2 is catalogued");
    z2.product(&z2, "Z2xZ2").expect("product of groups")
}

pub fn symmetric(n: usize) -> Result<FiniteGroup> {
    if !(2..=5).contains(&n) {
        return Err(Error::Invalid(format!("S{n} is not catalogued")));
    }
    let mut transposition: Vec<usize> = (0..n).collect();
    transposition.swap(0, 1);
    let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    FiniteGroup::from_permutations(format!("S{n}"), n, &[transposition, cycle])
}

/// Symmetries of a square acting on its vertices.
pub fn dihedral4() -> FiniteGroup {
    let rotation = vec![1, 2, 3, 0];
    let reflection = vec![0, 3, 2, 1];
    FiniteGroup::from_permutations("D4", 4, &[rotation, reflection]).expect("generated group")
}

/// Quaternion units `±1, ±i, ±j, ±k`; element `4s + u` is `(−1)^s · unit_u`.
pub fn quaternion() -> FiniteGroup {
    // unit products: (sign, unit) for unit_a · unit_b, units 1, i, j, k
    const UNIT: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let table = (0..8)
        .map(|a: usize| {
            (0..8)
                .map(|b: usize| {
                    let (s, u) = UNIT[a % 4][b % 4];
                    4 * ((s + a / 4 + b / 4) % 2) + u
                })
                .collect()
        })
        .collect();
    let names = ["1", "i", "j", "k", "-1", "-i", "-j", "-k"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    FiniteGroup::new("Q8", table)
        .and_then(|g| g.with_element_names(names))
        .expect("quaternion table is a group")
}

/// The supergroup `{1, z}` with `z` acting as the parity.
pub fn super_hilb() -> FiniteSuperGroup {
    let g = FiniteGroup::new("SuperHilb", vec![vec![0, 1], vec![1, 0]])
        .and_then(|g| g.with_element_names(vec!["1".into(), "z".into()]))
        .expect("Z2 table");
    FiniteSuperGroup::new(g, 1).expect("z is central of order 2")
}

/// `(Q8, −1)`: the quaternion group graded by its central involution.
pub fn super_quaternion() -> FiniteSuperGroup {
    FiniteSuperGroup::new(quaternion(), 4).expect("−1 is central of order 2")
}

fn normalize(name: &str) -> String {
    name.to_ascii_lowercase()
        .replace(['/', ' ', '_'], "")
        .replace('×', "x")
}

/// Looks a catalog group up by name. Accepts `Z5`, `Z/5`, `C5`, `Z2xZ2`,
/// `V4`, `S3`, `S4`, `D4`, `Q8`, `SuperHilb`, `SuperQ8`; names are
/// case-insensitive. Returns the group and, for the super groups, the grading
/// element.
pub fn lookup(name: &str) -> Result<(FiniteGroup, Option<usize>)> {
    let key = normalize(name);
    let group = match key.as_str() {
        "z2xz2" | "v4" | "klein" => klein(),
        "s3" => symmetric(3)?,
        "s4" => symmetric(4)?,
        "d4" => dihedral4(),
        "q8" => quaternion(),
        "superhilb" => {
            let s = super_hilb();
            let z = s.z();
            return Ok((s.group().clone(), Some(z)));
        }
        "superq8" => {
            let s = super_quaternion();
            return Ok((s.group().clone(), Some(s.z())));
        }
        _ => {
            let digits = key.strip_prefix('z').or_else(|| key.strip_prefix('c'));
            match digits.and_then(|d| d.parse::<usize>().ok()) {
                Some(n) => cyclic(n)?,
                None => return Err(Error::UnknownLabel(name.to_string())),
            }
        }
    };
    Ok((group, None))
}

/// Loads a group from `<dir>/<name>.json` when present, otherwise from the
/// built-in catalog.
pub fn lookup_in(dir: Option<&Path>, name: &str) -> Result<(FiniteGroup, Option<usize>)> {
    if let Some(dir) = dir {
        let path = dir.join(format!("{name}.json"));
        if path.is_file() {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
            return FiniteGroup::from_json(&text);
        }
    }
    lookup(name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_orders() {
        let expected = [
            ("Z2", 2),
            ("Z12", 12),
            ("Z2xZ2", 4),
            ("S3", 6),
            ("S4", 24),
            ("D4", 8),
            ("Q8", 8),
            ("SuperHilb", 2),
        ];
        for (name, order) in expected {
            assert_eq!(lookup(name).unwrap().0.order(), order, "{name}");
        }
        assert!(lookup("Z13").is_err());
        assert!(lookup("nope").is_err());
    }

    #[test]
    fn every_catalog_name_resolves() {
        for name in CATALOG_NAMES {
            assert!(lookup(name).is_ok(), "{name}");
        }
    }

    #[test]
    fn quaternion_relations() {
        let q = quaternion();
        let (i, j, k, m1) = (1, 2, 3, 4);
        assert_eq!(q.mul(i, j), k);
        assert_eq!(q.mul(j, i), q.mul(m1, k));
        assert_eq!(q.mul(i, i), m1);
        assert!(!q.is_abelian());
        assert_eq!(q.conjugacy_classes().len(), 5);
    }

    #[test]
    fn klein_is_not_cyclic() {
        assert!(!klein().is_cyclic());
        assert!(cyclic(4).unwrap().is_cyclic());
        assert_eq!(dihedral4().conjugacy_classes().len(), 5);
    }
}
