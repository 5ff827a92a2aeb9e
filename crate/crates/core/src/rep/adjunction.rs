//! Adjunctions `(x, x*, i, e)`, balancing, well-balancing, traces and
//! dimensions.
//!
//! With `x*` the conjugate representation on the same carrier, a counit is
//! `e(u ⊗ w) = uᵀ E w` for `E` in the commutant of `x`, and the unit is the
//! vectorisation of `I` (`i = Σ I_ab e_a ⊗ e_b`). The triangle identities
//! say exactly `I E = 1`.

use super::object::{braiding, RepObject};
use crate::error::{Error, Result};
use crate::linalg::{self, re, CMat, C64};

#[derive(Debug, Clone)]
pub struct Adjunction {
    x: RepObject,
    xstar: RepObject,
    e: CMat,
    i: CMat,
}

/// Row-major vectorisation: index `a·cols + b` holds `m[a, b]`.
fn flatten(m: &CMat) -> CMat {
    let (r, c) = m.shape();
    CMat::from_fn(r * c, 1, |k, _| m[(k / c, k % c)])
}

impl Adjunction {
    /// The standard pairing `e(u ⊗ w) = Σ_j u_j w_j` and copairing
    /// `i(1) = Σ_j e_j ⊗ e_j`.
    pub fn canonical(x: &RepObject) -> Self {
        let d = x.dim();
        Adjunction {
            x: x.clone(),
            xstar: x.conjugate(),
            e: linalg::identity(d),
            i: linalg::identity(d),
        }
    }

    /// Adjunction with counit matrix `E` (required invertible and equivariant)
    /// and unit `I = E⁻¹`.
    pub fn from_pairing(x: &RepObject, e: CMat) -> Result<Self> {
        let d = x.dim();
        if e.shape() != (d, d) {
            return Err(Error::Shape {
                label: "pairing".into(),
                expected: (d, d),
                got: e.shape(),
            });
        }
        let defect = RepObject::equivariance_defect(x, x, &e);
        if defect > 1e-8 {
            return Err(Error::validation("counit equivariance", defect));
        }
        let i = e
            .clone()
            .try_inverse()
            .ok_or_else(|| Error::NotInvertible {
                label: "pairing".into(),
            })?;
        Ok(Adjunction {
            x: x.clone(),
            xstar: x.conjugate(),
            e,
            i,
        })
    }

    /// Raw data, unvalidated; use [`Adjunction::validate`].
    pub fn from_raw(x: &RepObject, e: CMat, i: CMat) -> Self {
        Adjunction {
            x: x.clone(),
            xstar: x.conjugate(),
            e,
            i,
        }
    }

    /// A well-balanced adjunction on `x`.
    pub fn well_balanced(x: &RepObject) -> Self {
        Self::canonical(x)
    }

    /// `e ↦ s·e`, `i ↦ i/s`: still an adjunction, balancing scaled by `|s|²`.
    pub fn scaled(&self, s: f64) -> Self {
        Adjunction {
            x: self.x.clone(),
            xstar: self.xstar.clone(),
            e: &self.e * re(s),
            i: &self.i * re(1.0 / s),
        }
    }

    /// An adjunction whose balancing is `λ` times a unitary one.
    pub fn mis_scaled(x: &RepObject, lambda: f64) -> Self {
        Self::well_balanced(x).scaled(lambda.sqrt())
    }

    pub fn object(&self) -> &RepObject {
        &self.x
    }

    pub fn dual(&self) -> &RepObject {
        &self.xstar
    }

    /// Counit coefficient matrix `E`.
    pub fn pairing(&self) -> &CMat {
        &self.e
    }

    /// Unit coefficient matrix `I`.
    pub fn copairing(&self) -> &CMat {
        &self.i
    }

    /// `e: x* ⊗ x → 1` as a `1 × d²` matrix.
    pub fn counit(&self) -> CMat {
        flatten(&self.e).transpose()
    }

    /// `i: 1 → x ⊗ x*` as a `d² × 1` matrix.
    pub fn unit(&self) -> CMat {
        flatten(&self.i)
    }

    /// `(x*, x, e*, i*)`.
    pub fn star(&self) -> Adjunction {
        Adjunction {
            x: self.xstar.clone(),
            xstar: self.x.clone(),
            e: self.i.map(|z| z.conj()),
            i: self.e.map(|z| z.conj()),
        }
    }

    /// Deviations of `(x ⊗ e)(i ⊗ x)` and `(e ⊗ x*)(x* ⊗ i)` from identities.
    pub fn triangle_defects(&self) -> (f64, f64) {
        let d = self.x.dim();
        let id = linalg::identity(d);
        let (e, i) = (self.counit(), self.unit());
        let left = linalg::kron(&id, &e) * linalg::kron(&i, &id);
        let right = linalg::kron(&e, &id) * linalg::kron(&id, &i);
        (
            linalg::deviation(&left, &id),
            linalg::deviation(&right, &id),
        )
    }

    /// Checks equivariance of `i`, `e` and both triangle identities.
    pub fn validate(&self, tol: f64) -> Result<()> {
        let eq_e = RepObject::equivariance_defect(&self.x, &self.x, &self.e);
        if eq_e > tol {
            return Err(Error::validation("counit equivariance", eq_e));
        }
        let eq_i = RepObject::equivariance_defect(&self.x, &self.x, &self.i);
        if eq_i > tol {
            return Err(Error::validation("unit equivariance", eq_i));
        }
        let (l, r) = self.triangle_defects();
        if l > tol {
            return Err(Error::validation("triangle identity on x", l));
        }
        if r > tol {
            return Err(Error::validation("triangle identity on x*", r));
        }
        Ok(())
    }

    /// `b = (e* ⊗ x)(x* ⊗ B_{x,x})(e ⊗ x)`. Contracting the two pairings
    /// leaves `b_lk = Σ_{p,q} (E*E)_pq B_{(q,l),(p,k)}`.
    pub fn balancing(&self) -> CMat {
        let d = self.x.dim();
        let b = braiding(&self.x, &self.x).expect("same category");
        let m = self.e.adjoint() * &self.e;
        CMat::from_fn(d, d, |l, k| {
            let mut acc = C64::new(0.0, 0.0);
            for p in 0..d {
                for q in 0..d {
                    acc += m[(p, q)] * b[(q * d + l, p * d + k)];
                }
            }
            acc
        })
    }

    pub fn is_well_balanced(&self, tol: f64) -> bool {
        linalg::unitarity_defect(&self.balancing()) <= tol
    }

    /// Replaces `E` by the unitary factor of its polar decomposition, which
    /// makes the balancing unitary.
    pub fn well_balance(&self) -> Result<Adjunction> {
        let h = linalg::psd_sqrt(&(self.e.adjoint() * &self.e));
        let h_inv = h.try_inverse().ok_or_else(|| Error::NotInvertible {
            label: "pairing".into(),
        })?;
        let u = &self.e * h_inv;
        Ok(Adjunction {
            x: self.x.clone(),
            xstar: self.xstar.clone(),
            i: u.adjoint(),
            e: u,
        })
    }

    /// The isomorphism `x*₁ → x*₂` relating two adjunctions on the same `x`,
    /// `(x*₁ ⊗ i₂)(e₁ ⊗ x*₂)`.
    pub fn comparison(&self, other: &Adjunction) -> Result<CMat> {
        let d = self.x.dim();
        if other.x.dim() != d
            || RepObject::equivariance_defect(&self.x, &other.x, &linalg::identity(d)) > 1e-9
        {
            return Err(Error::Endpoints(
                "comparison needs adjunctions on the same object".into(),
            ));
        }
        let id = linalg::identity(d);
        Ok(linalg::kron(&self.counit(), &id) * linalg::kron(&id, &other.unit()))
    }

    /// `tr(f) = e (x* ⊗ f) e*`. The vector `(x* ⊗ f) e*` is the reshaped
    /// matrix `Ē fᵀ`, so `x* ⊗ x` is never materialised.
    pub fn trace(&self, f: &CMat) -> Result<C64> {
        self.check_endo(f)?;
        let v = self.e.map(|z| z.conj()) * f.transpose();
        Ok(self.e.iter().zip(v.iter()).map(|(a, b)| a * b).sum())
    }

    /// `i* (f ⊗ x*) i`, equal to [`Adjunction::trace`] for well-balanced data.
    /// Here `(f ⊗ x*) i` reshapes to `f I`.
    pub fn trace_via_unit(&self, f: &CMat) -> Result<C64> {
        self.check_endo(f)?;
        let v = f * &self.i;
        Ok(linalg::hs_inner(&self.i, &v))
    }

    /// `qtr(f) = tr(b f)`.
    pub fn qtrace(&self, f: &CMat) -> Result<C64> {
        self.check_endo(f)?;
        self.trace(&(self.balancing() * f))
    }

    pub fn dim(&self) -> f64 {
        self.trace(&linalg::identity(self.x.dim()))
            .expect("identity endomorphism")
            .re
    }

    pub fn qdim(&self) -> f64 {
        self.qtrace(&linalg::identity(self.x.dim()))
            .expect("identity endomorphism")
            .re
    }

    fn check_endo(&self, f: &CMat) -> Result<()> {
        let d = self.x.dim();
        if f.shape() != (d, d) {
            return Err(Error::Shape {
                label: "endomorphism".into(),
                expected: (d, d),
                got: f.shape(),
            });
        }
        Ok(())
    }

    /// `x` is invertible iff `dim x = 1`, iff `i` and `i*` are mutually
    /// inverse. Returns both verdicts.
    pub fn invertibility(&self, tol: f64) -> (bool, bool) {
        let by_dim = self.x.dim() == 1;
        let i = self.unit();
        let n = i.nrows();
        let inverse = linalg::deviation(&(i.adjoint() * &i), &linalg::identity(1)) <= tol
            && linalg::deviation(&(&i * i.adjoint()), &linalg::identity(n)) <= tol;
        (by_dim, inverse)
    }
}

/// `true` iff `x` is invertible; panics-free cross-check of both criteria.
pub fn invertibility_check(x: &RepObject) -> Result<bool> {
    let (by_dim, by_unit) = Adjunction::well_balanced(x).invertibility(1e-9);
    if by_dim != by_unit {
        return Err(Error::Numeric(
            "dimension and unit criteria for invertibility disagree".into(),
        ));
    }
    Ok(by_dim)
}

/// The balancing of a well-balanced adjunction on `x`.
pub fn balancing(x: &RepObject) -> CMat {
    Adjunction::well_balanced(x).balancing()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::{catalog, RepCategory};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// Closed-form contraction of the balancing composite for a braiding of
    /// the form `swap ∘ Σ_t c_t A_t ⊗ C_t`: `b = Σ_t c_t A_t E†E C_t`.
    fn closed_form_super(adj: &Adjunction) -> CMat {
        let p = adj.object().grading();
        let d = p.nrows();
        let id = linalg::identity(d);
        let g = adj.pairing().adjoint() * adj.pairing();
        let terms = [
            (0.5, &id, &id),
            (0.5, &id, &p),
            (0.5, &p, &id),
            (-0.5, &p, &p),
        ];
        terms.iter().fold(linalg::zeros(d, d), |acc, (c, a, cc)| {
            acc + *a * &g * *cc * re(*c)
        })
    }

    /// The balancing and trace composites as literal products of layers.
    fn layered_balancing(adj: &Adjunction) -> CMat {
        let id = linalg::identity(adj.object().dim());
        let b = braiding(adj.object(), adj.object()).unwrap();
        let e = adj.counit();
        linalg::kron(&e, &id) * linalg::kron(&id, &b) * linalg::kron(&e.adjoint(), &id)
    }

    fn layered_traces(adj: &Adjunction, f: &CMat) -> (C64, C64) {
        let id = linalg::identity(adj.object().dim());
        let (e, i) = (adj.counit(), adj.unit());
        let by_counit = (&e * linalg::kron(&id, f) * e.adjoint())[(0, 0)];
        let by_unit = (i.adjoint() * linalg::kron(f, &id) * &i)[(0, 0)];
        (by_counit, by_unit)
    }

    #[test]
    fn contractions_match_layered_products() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let cat = RepCategory::super_rep(&catalog::super_quaternion(), 0).unwrap();
        let x = RepObject::random_with_multiplicities(&cat, &[1, 0, 1, 0, 1], &mut rng);
        let f = linalg::random_matrix(&mut rng, x.dim(), x.dim());
        for adj in [
            Adjunction::canonical(&x).scaled(1.7),
            Adjunction::well_balanced(&x),
        ] {
            assert!(linalg::deviation(&adj.balancing(), &layered_balancing(&adj)) < 1e-12);
            let (t, u) = layered_traces(&adj, &f);
            assert!((adj.trace(&f).unwrap() - t).norm() < 1e-12);
            assert!((adj.trace_via_unit(&f).unwrap() - u).norm() < 1e-12);
        }
    }

    #[test]
    fn canonical_adjunction_validates_and_star_too() {
        let cat = RepCategory::catalog("S3", 0).unwrap();
        let x = RepObject::irrep_named(&cat, "std").unwrap();
        let adj = Adjunction::canonical(&x);
        adj.validate(1e-12).unwrap();
        adj.star().validate(1e-12).unwrap();
        assert!(linalg::deviation(&adj.balancing(), &linalg::identity(2)) < 1e-12);
        assert!((adj.dim() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn scaled_adjunction_has_balancing_four() {
        let cat = RepCategory::catalog("S3", 0).unwrap();
        let x = RepObject::irrep_named(&cat, "std").unwrap();
        let bad = Adjunction::canonical(&x).scaled(2.0);
        bad.validate(1e-12).unwrap();
        let b = bad.balancing();
        assert!(linalg::deviation(&b, &(linalg::identity(2) * re(4.0))) < 1e-12);
        assert!(!bad.is_well_balanced(1e-6));
        let fixed = bad.well_balance().unwrap();
        fixed.validate(1e-12).unwrap();
        assert!(linalg::deviation(&fixed.balancing(), &linalg::identity(2)) < 1e-12);
    }

    #[test]
    fn explicit_balancing_matches_closed_form() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let cat = RepCategory::super_rep(&catalog::super_quaternion(), 0).unwrap();
        let x = RepObject::random_with_multiplicities(&cat, &[1, 0, 1, 0, 1], &mut rng);
        // non-unitary pairing from a random positive commutant element
        let basis = RepObject::hom_basis(&x, &x).unwrap();
        let mut e = linalg::identity(x.dim()) * re(2.0);
        for (k, t) in basis.iter().enumerate() {
            e += t * re(0.3 * (k as f64 + 1.0));
        }
        let adj = Adjunction::from_pairing(&x, e).unwrap();
        adj.validate(1e-9).unwrap();
        assert!(linalg::deviation(&adj.balancing(), &closed_form_super(&adj)) < 1e-9);
        let wb = adj.well_balance().unwrap();
        assert!(wb.is_well_balanced(1e-9));
        assert!(linalg::deviation(&wb.balancing(), &x.grading()) < 1e-9);
    }

    #[test]
    fn odd_line_has_negative_balancing_and_qdim() {
        let cat = RepCategory::catalog("SuperHilb", 0).unwrap();
        let odd = RepObject::irrep_named(&cat, "odd").unwrap();
        let adj = Adjunction::well_balanced(&odd);
        assert!((adj.balancing()[(0, 0)] - re(-1.0)).norm() < 1e-12);
        assert!((adj.qdim() + 1.0).abs() < 1e-12);
        assert!((adj.dim() - 1.0).abs() < 1e-12);
        let boson = odd.rebind(&cat.bosonize().unwrap()).unwrap();
        assert!((balancing(&boson)[(0, 0)] - re(1.0)).norm() < 1e-12);
    }

    #[test]
    fn comparison_of_well_balanced_adjunctions_is_unitary() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let cat = RepCategory::catalog("D4", 0).unwrap();
        let x = RepObject::random_with_multiplicities(&cat, &[0, 1, 0, 0, 2], &mut rng);
        let a1 = Adjunction::canonical(&x);
        let basis = RepObject::hom_basis(&x, &x).unwrap();
        let mut e = linalg::identity(x.dim());
        for t in &basis {
            e += t * linalg::c(0.4, -0.2);
        }
        let a2 = Adjunction::from_pairing(&x, e)
            .unwrap()
            .well_balance()
            .unwrap();
        let f = a1.comparison(&a2).unwrap();
        assert!(linalg::unitarity_defect(&f) < 1e-9);
        assert!(RepObject::equivariance_defect(a1.dual(), a2.dual(), &f) < 1e-9);
    }

    #[test]
    fn traces_agree_for_well_balanced_data() {
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        let cat = RepCategory::catalog("S3", 0).unwrap();
        let x = RepObject::random_with_multiplicities(&cat, &[1, 1, 1], &mut rng);
        let adj = Adjunction::well_balanced(&x);
        let f = linalg::random_matrix(&mut rng, 4, 4);
        let t1 = adj.trace(&f).unwrap();
        let t2 = adj.trace_via_unit(&f).unwrap();
        assert!((t1 - t2).norm() < 1e-12);
        assert!((t1 - f.trace()).norm() < 1e-12);
    }

    #[test]
    fn invertible_objects() {
        let cat = RepCategory::catalog("S3", 0).unwrap();
        assert!(invertibility_check(&RepObject::irrep_named(&cat, "sgn").unwrap()).unwrap());
        assert!(!invertibility_check(&RepObject::irrep_named(&cat, "std").unwrap()).unwrap());
        let z4 = RepCategory::catalog("Z4", 0).unwrap();
        for k in 0..4 {
            let x = RepObject::irrep(&z4, k);
            assert!(invertibility_check(&x).unwrap());
            let xx = x.tensor(&x.conjugate()).unwrap();
            assert_eq!(xx.multiplicities()[0], 1);
        }
    }
}
