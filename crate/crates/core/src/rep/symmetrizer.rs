//! Complete symmetrizers and antisymmetrizers on tensor powers, through the
//! symmetric-group action induced by the braiding.

use super::irreps::BraidingMode;
use super::object::RepObject;
use crate::error::{Error, Result};
use crate::linalg::{self, re, CMat};

/// Largest tensor power for which `S_n` is enumerated.
pub const MAX_POWER: usize = 6;

#[derive(Debug, Clone)]
pub struct Symmetrizers {
    pub n: usize,
    pub p_sym: CMat,
    pub p_alt: CMat,
    /// `Sⁿx`, realised on the range of `p_S`.
    pub sym_power: RepObject,
    /// `Λⁿx`, realised on the range of `p_A`.
    pub alt_power: RepObject,
    /// Isometries `Sⁿx → x^{⊗n}` and `Λⁿx → x^{⊗n}`.
    pub sym_embedding: CMat,
    pub alt_embedding: CMat,
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(current.clone());
        let Some(k) = (0..n.saturating_sub(1))
            .rev()
            .find(|&k| current[k] < current[k + 1])
        else {
            return out;
        };
        let l = (k + 1..n)
            .rev()
            .find(|&l| current[k] < current[l])
            .expect("successor exists");
        current.swap(k, l);
        current[k + 1..].reverse();
    }
}

pub fn permutation_sign(p: &[usize]) -> f64 {
    let mut inversions = 0;
    for a in 0..p.len() {
        for b in a + 1..p.len() {
            if p[a] > p[b] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// The operator on `x^{⊗n}` moving tensor factor `k` to slot `σ(k)`, with the
/// Koszul sign of the braiding. `parities[j]` is the parity (0 or 1) of basis
/// vector `j` of the carrier.
fn permutation_operator(d: usize, n: usize, sigma: &[usize], parities: &[u8]) -> CMat {
    let total = d.pow(n as u32);
    let mut m = linalg::zeros(total, total);
    let mut digits = vec![0usize; n];
    let mut out = vec![0usize; n];
    for col in 0..total {
        let mut r = col;
        for k in (0..n).rev() {
            digits[k] = r % d;
            r /= d;
        }
        let mut odd_swaps = 0u32;
        for a in 0..n {
            out[sigma[a]] = digits[a];
            for b in a + 1..n {
                if sigma[a] > sigma[b] {
                    odd_swaps += u32::from(parities[digits[a]] & parities[digits[b]]);
                }
            }
        }
        let row = out.iter().fold(0, |acc, &v| acc * d + v);
        m[(row, col)] = re(if odd_swaps.is_multiple_of(2) { 1.0 } else { -1.0 });
    }
    m
}

/// The projections `(p_S, p_A)` on `x^{⊗n}` for `1 ≤ n ≤ 6`.
pub fn symmetrizer_projections(x: &RepObject, n: usize) -> Result<(CMat, CMat)> {
    if n == 0 {
        return Err(Error::Invalid("tensor power must be positive".into()));
    }
    if n > MAX_POWER {
        return Err(Error::Overflow(n));
    }
    let d = x.dim();
    let total = d.pow(n as u32);
    let (w, parities) = match x.category().mode() {
        BraidingMode::Super => {
            let (vals, vecs) = linalg::hermitian_eigen(&x.grading());
            (
                Some(vecs),
                vals.iter().map(|v| u8::from(*v < 0.0)).collect::<Vec<_>>(),
            )
        }
        _ => (None, vec![0u8; d]),
    };
    let mut p_sym = linalg::zeros(total, total);
    let mut p_alt = linalg::zeros(total, total);
    let perms = permutations(n);
    let norm = 1.0 / perms.len() as f64;
    for sigma in &perms {
        let t = permutation_operator(d, n, sigma, &parities);
        p_alt += &t * re(permutation_sign(sigma) * norm);
        p_sym += t * re(norm);
    }
    // the permutation operators were built in a basis diagonalising the grading
    if let Some(w) = w {
        let wn = linalg::kron_all(std::iter::repeat_n(&w, n));
        p_sym = &wn * p_sym * wn.adjoint();
        p_alt = &wn * p_alt * wn.adjoint();
    }
    Ok((p_sym, p_alt))
}

/// `p_S`, `p_A`, `Sⁿx` and `Λⁿx` for `1 ≤ n ≤ 6`.
pub fn symmetrizer_power(x: &RepObject, n: usize) -> Result<Symmetrizers> {
    let (p_sym, p_alt) = symmetrizer_projections(x, n)?;
    let xn = x.tensor_power(n)?;
    let id = linalg::identity(xn.dim());
    // images as cokernels of the complementary projections
    let sym_embedding = linalg::range_complement(&(&id - &p_sym), 1e-8);
    let alt_embedding = linalg::range_complement(&(&id - &p_alt), 1e-8);
    Ok(Symmetrizers {
        n,
        sym_power: xn.subobject(&sym_embedding),
        alt_power: xn.subobject(&alt_embedding),
        p_sym,
        p_alt,
        sym_embedding,
        alt_embedding,
    })
}

/// `(1/n!) d (d−1) ··· (d−n+1)`.
pub fn falling_factorial_over_factorial(d: f64, n: usize) -> f64 {
    (0..n).map(|k| (d - k as f64) / (k as f64 + 1.0)).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::{Adjunction, RepCategory};

    #[test]
    fn enumerates_permutations() {
        let p = permutations(4);
        assert_eq!(p.len(), 24);
        let plus = p.iter().filter(|s| permutation_sign(s) > 0.0).count();
        assert_eq!(plus, 12);
    }

    #[test]
    fn two_dimensional_powers() {
        let cat = RepCategory::catalog("S3", 0).unwrap();
        let x = RepObject::irrep_named(&cat, "std").unwrap();
        let s2 = symmetrizer_power(&x, 2).unwrap();
        assert!(linalg::deviation(&(&s2.p_sym + &s2.p_alt), &linalg::identity(4)) < 1e-12);
        let adj = Adjunction::well_balanced(&x.tensor_power(2).unwrap());
        assert!((adj.trace(&s2.p_alt).unwrap() - re(1.0)).norm() < 1e-12);
        assert_eq!(s2.alt_power.multiplicities(), vec![0, 1, 0]);
        let s3 = symmetrizer_power(&x, 3).unwrap();
        assert_eq!(s3.alt_power.dim(), 0);
        assert_eq!(s3.sym_power.dim(), 4);
    }

    #[test]
    fn projectors_are_equivariant_idempotents() {
        let cat = RepCategory::catalog("Q8", 0).unwrap();
        let x = RepObject::irrep_named(&cat, "std").unwrap();
        let s = symmetrizer_power(&x, 3).unwrap();
        let xn = x.tensor_power(3).unwrap();
        for p in [&s.p_sym, &s.p_alt] {
            assert!(linalg::deviation(&(p * p), p) < 1e-12);
            assert!(linalg::hermiticity_defect(p) < 1e-12);
            assert!(RepObject::equivariance_defect(&xn, &xn, p) < 1e-12);
        }
    }

    #[test]
    fn odd_line_swaps_roles() {
        // for the odd line the super braiding is −1, so Λ² is a line and S² vanishes
        let cat = RepCategory::catalog("SuperHilb", 0).unwrap();
        let odd = RepObject::irrep_named(&cat, "odd").unwrap();
        let s = symmetrizer_power(&odd, 2).unwrap();
        assert_eq!(s.alt_power.dim(), 1);
        assert_eq!(s.sym_power.dim(), 0);
    }

    #[test]
    fn rejects_large_powers() {
        let cat = RepCategory::catalog("Z2", 0).unwrap();
        let x = RepObject::irrep(&cat, 0);
        assert!(matches!(symmetrizer_power(&x, 7), Err(Error::Overflow(7))));
    }
}
