//! Concrete unitary representations, their tensor products, duals,
//! isotypic decompositions, intertwiner spaces and the symmetric braiding.

use std::sync::Arc;

use rand::Rng;

use super::irreps::{BraidingMode, RepCategory};
use crate::error::{Error, Result};
use crate::linalg::{self, re, CMat, C64};

/// A unitary representation on `ℂ^dim`, living in a fixed [`RepCategory`].
#[derive(Debug, Clone)]
pub struct RepObject {
    cat: Arc<RepCategory>,
    dim: usize,
    mats: Vec<CMat>,
}

/// Isotypic data for one irrep `λ` of an object `x`.
#[derive(Debug, Clone)]
pub struct IsotypicPart {
    pub irrep: usize,
    pub multiplicity: usize,
    /// Isometry `ℂ^m ⊗ ℂ^{d_λ} → x` (copy-major columns) with
    /// `ρ_x(g) V = V (1_m ⊗ ρ_λ(g))`.
    pub embedding: CMat,
}

#[derive(Debug, Clone)]
pub struct Decomposition {
    pub parts: Vec<IsotypicPart>,
}

impl Decomposition {
    pub fn multiplicities(&self) -> Vec<usize> {
        self.parts.iter().map(|p| p.multiplicity).collect()
    }

    /// All isotypic embeddings side by side: a unitary `x → x`.
    pub fn unitary(&self, dim: usize) -> CMat {
        let cols: Vec<CMat> = self.parts.iter().map(|p| p.embedding.clone()).collect();
        let total: usize = cols.iter().map(|m| m.ncols()).sum();
        let mut u = linalg::zeros(dim, total);
        let mut j = 0;
        for m in cols {
            u.view_mut((0, j), m.shape()).copy_from(&m);
            j += m.ncols();
        }
        u
    }
}

impl RepObject {
    /// Validates unitarity and the homomorphism property.
    pub fn new(cat: Arc<RepCategory>, mats: Vec<CMat>) -> Result<Self> {
        let g = cat.group();
        if mats.len() != g.order() {
            return Err(Error::Invalid(format!(
                "{} matrices for a group of order {}",
                mats.len(),
                g.order()
            )));
        }
        let dim = mats[0].nrows();
        if mats.iter().any(|m| m.shape() != (dim, dim)) {
            return Err(Error::Invalid(
                "action matrices must share one square shape".into(),
            ));
        }
        let obj = RepObject { cat, dim, mats };
        let defect = obj.action_defect();
        if defect > 1e-8 {
            return Err(Error::validation("unitary group action", defect));
        }
        Ok(obj)
    }

    pub(crate) fn from_parts_unchecked(cat: Arc<RepCategory>, mats: Vec<CMat>) -> Self {
        let dim = mats.first().map_or(0, |m| m.nrows());
        RepObject { cat, dim, mats }
    }

    /// Largest violation of unitarity or of `ρ(ab) = ρ(a)ρ(b)`.
    pub fn action_defect(&self) -> f64 {
        let g = self.cat.group();
        let mut worst = 0.0f64;
        for a in 0..g.order() {
            worst = worst.max(linalg::unitarity_defect(&self.mats[a]));
            for b in 0..g.order() {
                let lhs = &self.mats[g.mul(a, b)];
                worst = worst.max(linalg::deviation(lhs, &(&self.mats[a] * &self.mats[b])));
            }
        }
        worst
    }

    pub fn irrep(cat: &Arc<RepCategory>, index: usize) -> Self {
        let mats = cat.irreps()[index].matrices.clone();
        Self::from_parts_unchecked(cat.clone(), mats)
    }

    pub fn irrep_named(cat: &Arc<RepCategory>, name: &str) -> Result<Self> {
        Ok(Self::irrep(cat, cat.irrep_index(name)?))
    }

    /// The unit object: `ℂ` with trivial action.
    pub fn unit(cat: &Arc<RepCategory>) -> Self {
        let n = cat.group().order();
        Self::from_parts_unchecked(cat.clone(), vec![linalg::identity(1); n])
    }

    /// The zero object.
    pub fn zero(cat: &Arc<RepCategory>) -> Self {
        let n = cat.group().order();
        RepObject {
            cat: cat.clone(),
            dim: 0,
            mats: vec![linalg::zeros(0, 0); n],
        }
    }

    pub fn regular(cat: &Arc<RepCategory>) -> Self {
        let g = cat.group();
        let mats = (0..g.order())
            .map(|a| {
                linalg::permutation_matrix(&(0..g.order()).map(|h| g.mul(a, h)).collect::<Vec<_>>())
            })
            .collect();
        Self::from_parts_unchecked(cat.clone(), mats)
    }

    /// `⊕_λ m_λ ρ_λ` conjugated by a random unitary.
    pub fn random_with_multiplicities<R: Rng + ?Sized>(
        cat: &Arc<RepCategory>,
        mult: &[usize],
        rng: &mut R,
    ) -> Self {
        let mut x = Self::zero(cat);
        for (i, &m) in mult.iter().enumerate() {
            for _ in 0..m {
                x = x.direct_sum(&Self::irrep(cat, i)).expect("same category");
            }
        }
        let u = linalg::random_unitary(rng, x.dim);
        x.conjugated(&u)
    }

    /// The representation `u ρ(g) u†`.
    pub fn conjugated(&self, u: &CMat) -> Self {
        let mats = self.mats.iter().map(|m| u * m * u.adjoint()).collect();
        Self::from_parts_unchecked(self.cat.clone(), mats)
    }

    pub fn category(&self) -> &Arc<RepCategory> {
        &self.cat
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrices(&self) -> &[CMat] {
        &self.mats
    }

    pub fn matrix(&self, g: usize) -> &CMat {
        &self.mats[g]
    }

    /// Same object moved to another category over the same group, e.g. its bosonization.
    pub fn rebind(&self, cat: &Arc<RepCategory>) -> Result<Self> {
        if cat.group() != self.cat.group() {
            return Err(Error::GroupMismatch("rebinding across groups".into()));
        }
        Ok(Self::from_parts_unchecked(cat.clone(), self.mats.clone()))
    }

    fn check_same(&self, other: &RepObject) -> Result<()> {
        if !self.cat.same_as(&other.cat) {
            return Err(Error::GroupMismatch(format!(
                "objects of `{}` and `{}`",
                self.cat.group().name(),
                other.cat.group().name()
            )));
        }
        Ok(())
    }

    pub fn tensor(&self, other: &RepObject) -> Result<RepObject> {
        self.check_same(other)?;
        let mats = self
            .mats
            .iter()
            .zip(&other.mats)
            .map(|(a, b)| linalg::kron(a, b))
            .collect();
        Ok(RepObject {
            cat: self.cat.clone(),
            dim: self.dim * other.dim,
            mats,
        })
    }

    pub fn direct_sum(&self, other: &RepObject) -> Result<RepObject> {
        self.check_same(other)?;
        let mats = self
            .mats
            .iter()
            .zip(&other.mats)
            .map(|(a, b)| linalg::block_diag(&[a.clone(), b.clone()]))
            .collect();
        Ok(RepObject {
            cat: self.cat.clone(),
            dim: self.dim + other.dim,
            mats,
        })
    }

    /// The dual object `x*`: entrywise-conjugate matrices on the same carrier.
    pub fn conjugate(&self) -> RepObject {
        RepObject {
            cat: self.cat.clone(),
            dim: self.dim,
            mats: self.mats.iter().map(|m| m.map(|z| z.conj())).collect(),
        }
    }

    pub fn tensor_power(&self, n: usize) -> Result<RepObject> {
        let mut out = RepObject::unit(&self.cat);
        for _ in 0..n {
            out = out.tensor(self)?;
        }
        Ok(out)
    }

    /// Restriction to an invariant subspace spanned by orthonormal columns `q`.
    pub fn subobject(&self, q: &CMat) -> RepObject {
        let mats = self.mats.iter().map(|m| q.adjoint() * m * q).collect();
        RepObject {
            cat: self.cat.clone(),
            dim: q.ncols(),
            mats,
        }
    }

    pub fn character(&self) -> Vec<C64> {
        self.mats.iter().map(|m| m.trace()).collect()
    }

    /// The grading `ρ(z)`; the identity for ungraded categories.
    pub fn grading(&self) -> CMat {
        match self.cat.z() {
            Some(z) => self.mats[z].clone(),
            None => linalg::identity(self.dim),
        }
    }

    /// `+1` (even), `−1` (odd) or `0` (inhomogeneous).
    pub fn parity(&self) -> i32 {
        let p = self.grading();
        let id = linalg::identity(self.dim);
        if linalg::deviation(&p, &id) < 1e-9 {
            1
        } else if linalg::deviation(&p, &(-id)) < 1e-9 {
            -1
        } else {
            0
        }
    }

    /// Multiplicity of each irrep, from character inner products.
    pub fn multiplicities(&self) -> Vec<usize> {
        let n = self.cat.group().order() as f64;
        let chi = self.character();
        self.cat
            .irreps()
            .iter()
            .map(|r| {
                let ip: C64 = r
                    .character
                    .iter()
                    .zip(&chi)
                    .map(|(a, b)| a.conj() * b)
                    .sum();
                (ip.re / n).round().max(0.0) as usize
            })
            .collect()
    }

    /// Isotypic decomposition through the projections
    /// `P_{i1} = (d/|G|) Σ_g conj(ρ_λ(g)_{i1}) ρ_x(g)`.
    pub fn decompose(&self) -> Decomposition {
        let g = self.cat.group();
        let n = g.order() as f64;
        let mut parts = Vec::new();
        for (idx, r) in self.cat.irreps().iter().enumerate() {
            let d = r.degree;
            let proj = |i: usize| -> CMat {
                let mut p = linalg::zeros(self.dim, self.dim);
                for a in 0..g.order() {
                    p += &self.mats[a] * r.matrices[a][(i, 0)].conj();
                }
                p * re(d as f64 / n)
            };
            let p11 = proj(0);
            let w = linalg::range_basis(&p11, 1e-8);
            let m = w.ncols();
            let mut emb = linalg::zeros(self.dim, m * d);
            if m > 0 {
                let pis: Vec<CMat> = (0..d).map(proj).collect();
                for a in 0..m {
                    let wa = w.column(a).into_owned();
                    for (i, pi) in pis.iter().enumerate() {
                        emb.set_column(a * d + i, &(pi * &wa));
                    }
                }
            }
            parts.push(IsotypicPart {
                irrep: idx,
                multiplicity: m,
                embedding: emb,
            });
        }
        Decomposition { parts }
    }

    /// `‖ρ_y(g) T − T ρ_x(g)‖` maximised over `g`.
    pub fn equivariance_defect(x: &RepObject, y: &RepObject, t: &CMat) -> f64 {
        if t.shape() != (y.dim, x.dim) {
            return f64::INFINITY;
        }
        x.mats
            .iter()
            .zip(&y.mats)
            .map(|(a, b)| linalg::deviation(&(b * t), &(t * a)))
            .fold(0.0, f64::max)
    }

    /// An orthonormal (Hilbert–Schmidt) basis of `hom(x, y)`.
    pub fn hom_basis(x: &RepObject, y: &RepObject) -> Result<Vec<CMat>> {
        x.check_same(y)?;
        let dx = x.decompose();
        let dy = y.decompose();
        let mut basis = Vec::new();
        for (px, py) in dx.parts.iter().zip(&dy.parts) {
            let d = x.cat.irreps()[px.irrep].degree;
            for a in 0..py.multiplicity {
                for b in 0..px.multiplicity {
                    let mut t = linalg::zeros(y.dim, x.dim);
                    for i in 0..d {
                        let col_y = py.embedding.column(a * d + i);
                        let col_x = px.embedding.column(b * d + i);
                        t += col_y * col_x.adjoint();
                    }
                    basis.push(t / re((d as f64).sqrt()));
                }
            }
        }
        Ok(basis)
    }

    pub fn hom_dim(x: &RepObject, y: &RepObject) -> Result<usize> {
        x.check_same(y)?;
        Ok(x.multiplicities()
            .iter()
            .zip(y.multiplicities())
            .map(|(a, b)| a * b)
            .sum())
    }

    /// Commutant dimension `dim end(x)`; simple iff 1.
    pub fn commutant_dim(&self) -> usize {
        self.multiplicities().iter().map(|m| m * m).sum()
    }

    pub fn is_simple(&self) -> bool {
        self.commutant_dim() == 1
    }
}

/// `½(1⊗1 + 1⊗q + p⊗1 − p⊗q)`: `+1` unless both factors are odd.
pub fn koszul_sign(p: &CMat, q: &CMat) -> CMat {
    let (a, b) = (p.nrows(), q.nrows());
    let ia = linalg::identity(a);
    let ib = linalg::identity(b);
    (linalg::identity(a * b) + linalg::kron(&ia, q) + linalg::kron(p, &ib) - linalg::kron(p, q))
        * re(0.5)
}

/// `koszul_sign(p, q) · m`, applied factor by factor.
fn koszul_apply(p: &CMat, q: &CMat, m: &CMat) -> CMat {
    let ia = linalg::identity(p.nrows());
    let ib = linalg::identity(q.nrows());
    let q_m = linalg::kron_apply(&ia, q, m);
    let pq_m = linalg::kron_apply(p, &ib, &q_m);
    (m + q_m + linalg::kron_apply(p, &ib, m) - pq_m) * re(0.5)
}

/// The symmetric braiding `B_{x,y}: x ⊗ y → y ⊗ x` of the category of `x`.
///
/// Bosonized categories use `B♭ = S(b_y, b_x) ∘ B` where `B` is the super
/// braiding and `b` the (super) balancing; this reduces to the plain swap.
pub fn braiding(x: &RepObject, y: &RepObject) -> Result<CMat> {
    x.check_same(y)?;
    let (a, b) = (x.dim, y.dim);
    match x.cat.mode() {
        BraidingMode::Plain => Ok(linalg::swap_matrix(a, b)),
        BraidingMode::Super => Ok(linalg::swap_rows(
            a,
            b,
            &koszul_sign(&x.grading(), &y.grading()),
        )),
        BraidingMode::Bosonized => {
            let super_b = linalg::swap_rows(a, b, &koszul_sign(&x.grading(), &y.grading()));
            let bx = super_balancing(x);
            let by = super_balancing(y);
            Ok(koszul_apply(&by, &bx, &super_b))
        }
    }
}

/// Balancing of the canonical adjunction under the super braiding, from the
/// closed-form contraction: `Σ_t c_t A_t C_t` for `S = Σ_t c_t A_t ⊗ C_t`.
fn super_balancing(x: &RepObject) -> CMat {
    let p = x.grading();
    let id = linalg::identity(x.dim);
    (&id + &p + &p - &p * &p) * re(0.5)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn unit_is_neutral_for_tensor() {
        let cat = RepCategory::catalog("S3", 0).unwrap();
        let x = RepObject::irrep_named(&cat, "std").unwrap();
        let ux = RepObject::unit(&cat).tensor(&x).unwrap();
        for (a, b) in ux.matrices().iter().zip(x.matrices()) {
            assert!(linalg::deviation(a, b) < 1e-15);
        }
    }

    #[test]
    fn std_squared_in_s3() {
        // oracle: character inner products computed by hand from χ_std = (2, 0, −1)
        let cat = RepCategory::catalog("S3", 0).unwrap();
        let x = RepObject::irrep_named(&cat, "std").unwrap();
        let xx = x.tensor(&x).unwrap();
        let mults = xx.multiplicities();
        let names: Vec<&str> = cat.irreps().iter().map(|r| r.label.as_str()).collect();
        assert_eq!(names, vec!["triv", "sgn", "std"]);
        assert_eq!(mults, vec![1, 1, 1]);
        assert_eq!(xx.decompose().multiplicities(), vec![1, 1, 1]);
    }

    #[test]
    fn decomposition_recomposes() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let cat = RepCategory::catalog("Q8", 0).unwrap();
        let x = RepObject::random_with_multiplicities(&cat, &[1, 0, 2, 0, 2], &mut rng);
        let dec = x.decompose();
        let u = dec.unitary(x.dim());
        assert!(linalg::unitarity_defect(&u) < 1e-9);
        for p in &dec.parts {
            let r = &cat.irreps()[p.irrep];
            for (a, m) in x.matrices().iter().enumerate() {
                let rhs =
                    &p.embedding * linalg::kron(&linalg::identity(p.multiplicity), &r.matrices[a]);
                assert!(linalg::deviation(&(m * &p.embedding), &rhs) < 1e-9);
            }
        }
    }

    #[test]
    fn hom_basis_is_orthonormal_and_equivariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let cat = RepCategory::catalog("S3", 0).unwrap();
        let x = RepObject::random_with_multiplicities(&cat, &[1, 1, 2], &mut rng);
        let y = RepObject::random_with_multiplicities(&cat, &[0, 2, 1], &mut rng);
        let basis = RepObject::hom_basis(&x, &y).unwrap();
        assert_eq!(basis.len(), RepObject::hom_dim(&x, &y).unwrap());
        assert_eq!(basis.len(), 2 + 2);
        for (i, a) in basis.iter().enumerate() {
            assert!(RepObject::equivariance_defect(&x, &y, a) < 1e-9);
            for (j, b) in basis.iter().enumerate() {
                let ip = linalg::hs_inner(a, b);
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((ip - re(expect)).norm() < 1e-9);
            }
        }
    }

    #[test]
    fn super_braiding_signs() {
        let cat = RepCategory::catalog("SuperHilb", 0).unwrap();
        let odd = RepObject::irrep_named(&cat, "odd").unwrap();
        let even = RepObject::irrep_named(&cat, "even").unwrap();
        assert!((braiding(&odd, &odd).unwrap()[(0, 0)] - re(-1.0)).norm() < 1e-12);
        assert!((braiding(&even, &odd).unwrap()[(0, 0)] - re(1.0)).norm() < 1e-12);
        let boson = cat.bosonize().unwrap();
        let odd_b = odd.rebind(&boson).unwrap();
        let bb = braiding(&odd_b, &odd_b).unwrap();
        assert!((bb[(0, 0)] - re(1.0)).norm() < 1e-12, "{bb}");
    }

    #[test]
    fn braiding_is_equivariant_and_symmetric() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let cat = crate::rep::RepCategory::super_rep(&crate::rep::catalog::super_quaternion(), 0)
            .unwrap();
        let x = RepObject::random_with_multiplicities(&cat, &[1, 0, 0, 0, 1], &mut rng);
        let y = RepObject::random_with_multiplicities(&cat, &[0, 1, 0, 0, 1], &mut rng);
        let bxy = braiding(&x, &y).unwrap();
        let byx = braiding(&y, &x).unwrap();
        let xy = x.tensor(&y).unwrap();
        let yx = y.tensor(&x).unwrap();
        assert!(RepObject::equivariance_defect(&xy, &yx, &bxy) < 1e-9);
        assert!(linalg::deviation(&(&byx * &bxy), &linalg::identity(xy.dim())) < 1e-9);
    }
}
