//! Spectrum points of `Rep(G)` and the Gelfand transform `x ↦ (T ↦ T(x))`.
//!
//! A point is presented as the forgetful functor twisted by a unitary frame
//! `W_λ` on each irrep: `T(x) = ℂ^{dim x}` with identification
//! `U_x = Σ_λ E_λ (1 ⊗ W_λ) E_λ*`, where `E_λ` are the isotypic embeddings,
//! and `T(f) = U_y f U_x*`. Graded points land in super Hilbert spaces with
//! grading `U_x ρ(z) U_x*`.

use std::sync::Arc;

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{self, CMat};
use crate::rep::{braiding, koszul_sign, Adjunction, BraidingMode, RepCategory, RepObject};

#[derive(Debug, Clone)]
pub struct SpectrumPoint {
    cat: Arc<RepCategory>,
    frames: Vec<CMat>,
    graded: bool,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct PointReport {
    pub frames: f64,
    pub symmetry: f64,
    pub balancing: f64,
}

impl PointReport {
    pub fn worst(&self) -> f64 {
        self.frames.max(self.symmetry).max(self.balancing)
    }
}

impl SpectrumPoint {
    /// The forgetful functor, into super Hilbert spaces when `cat` is super.
    pub fn tautological(cat: &Arc<RepCategory>) -> Self {
        let frames = cat
            .irreps()
            .iter()
            .map(|r| linalg::identity(r.degree))
            .collect();
        SpectrumPoint {
            cat: cat.clone(),
            frames,
            graded: cat.mode() == BraidingMode::Super,
        }
    }

    /// A point isomorphic to the tautological one, with random frames.
    pub fn random<R: Rng + ?Sized>(cat: &Arc<RepCategory>, rng: &mut R) -> Self {
        let mut p = Self::tautological(cat);
        p.frames = cat
            .irreps()
            .iter()
            .map(|r| linalg::random_unitary(rng, r.degree))
            .collect();
        p
    }

    pub fn with_frames(cat: &Arc<RepCategory>, frames: Vec<CMat>, graded: bool) -> Result<Self> {
        if frames.len() != cat.irreps().len()
            || frames
                .iter()
                .zip(cat.irreps())
                .any(|(w, r)| w.shape() != (r.degree, r.degree))
        {
            return Err(Error::Invalid("one square frame per irrep required".into()));
        }
        Ok(SpectrumPoint {
            cat: cat.clone(),
            frames,
            graded,
        })
    }

    pub fn is_graded(&self) -> bool {
        self.graded
    }

    pub fn category(&self) -> &Arc<RepCategory> {
        &self.cat
    }

    /// `U_x: x → T(x)`.
    pub fn identification(&self, x: &RepObject) -> CMat {
        let mut u = linalg::zeros(x.dim(), x.dim());
        for part in x.decompose().parts {
            if part.multiplicity == 0 {
                continue;
            }
            let w = linalg::kron(
                &linalg::identity(part.multiplicity),
                &self.frames[part.irrep],
            );
            u += &part.embedding * w * part.embedding.adjoint();
        }
        u
    }

    pub fn apply_morphism(&self, x: &RepObject, y: &RepObject, f: &CMat) -> CMat {
        self.identification(y) * f * self.identification(x).adjoint()
    }

    /// The grading of `T(x)` in the target.
    fn target_grading(&self, x: &RepObject) -> CMat {
        if self.graded {
            let u = self.identification(x);
            &u * x.grading() * u.adjoint()
        } else {
            linalg::identity(x.dim())
        }
    }

    fn target_braiding(&self, x: &RepObject, y: &RepObject) -> CMat {
        let swap = linalg::swap_matrix(x.dim(), y.dim());
        swap * koszul_sign(&self.target_grading(x), &self.target_grading(y))
    }

    /// Frames unitary; `Φ_{y,x} B = T(B_{x,y}) Φ_{x,y}` on sample pairs;
    /// `T(β_x) = b_{T(x)}` on samples.
    pub fn validate(&self, samples: &[RepObject]) -> Result<PointReport> {
        let mut report = PointReport {
            frames: self
                .frames
                .iter()
                .map(linalg::unitarity_defect)
                .fold(0.0, f64::max),
            ..PointReport::default()
        };
        for x in samples {
            if !x.category().same_as(&self.cat) {
                return Err(Error::GroupMismatch(
                    "sample outside the category of the point".into(),
                ));
            }
            for y in samples {
                let (xy, yx) = (x.tensor(y)?, y.tensor(x)?);
                let (ux, uy) = (self.identification(x), self.identification(y));
                let phi_xy = self.identification(&xy) * linalg::kron(&ux, &uy).adjoint();
                let phi_yx = self.identification(&yx) * linalg::kron(&uy, &ux).adjoint();
                let lhs = phi_yx * self.target_braiding(x, y);
                let rhs = self.apply_morphism(&xy, &yx, &braiding(x, y)?) * phi_xy;
                report.symmetry = report.symmetry.max(linalg::deviation(&lhs, &rhs));
            }
            let beta = Adjunction::well_balanced(x).balancing();
            let image = self.apply_morphism(x, x, &beta);
            report.balancing = report
                .balancing
                .max(linalg::deviation(&image, &self.target_grading(x)));
        }
        Ok(report)
    }

    pub fn check(&self, samples: &[RepObject], tol: f64) -> Result<()> {
        let r = self.validate(samples)?;
        if r.frames > tol {
            return Err(Error::validation("unitary frames", r.frames));
        }
        if r.symmetry > tol {
            return Err(Error::validation(
                "symmetric monoidal structure",
                r.symmetry,
            ));
        }
        if r.balancing > tol {
            return Err(Error::validation("F(β_x) = b_F(x)", r.balancing));
        }
        Ok(())
    }
}

/// `x̂` on a finite set of points: the value at each point, the action of
/// the symmetry group there, and the transports between points.
#[derive(Debug, Clone)]
pub struct GelfandHat {
    pub dims: Vec<usize>,
    /// `actions[p][g] = U_x ρ_x(g) U_x*` at point `p`.
    pub actions: Vec<Vec<CMat>>,
    /// `transports[p][q] = U^q_x (U^p_x)*: x̂(p) → x̂(q)`.
    pub transports: Vec<Vec<CMat>>,
}

pub fn gelfand_hat(x: &RepObject, points: &[SpectrumPoint]) -> Result<GelfandHat> {
    let samples = [x.clone()];
    for p in points {
        p.check(&samples, 1e-8)?;
    }
    let us: Vec<CMat> = points.iter().map(|p| p.identification(x)).collect();
    let actions = us
        .iter()
        .map(|u| x.matrices().iter().map(|m| u * m * u.adjoint()).collect())
        .collect();
    let transports = us
        .iter()
        .map(|up| us.iter().map(|uq| uq * up.adjoint()).collect())
        .collect();
    Ok(GelfandHat {
        dims: vec![x.dim(); points.len()],
        actions,
        transports,
    })
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct HatReport {
    pub tensor: f64,
    pub direct_sum: f64,
    pub star: f64,
    pub transport: f64,
}

impl HatReport {
    pub fn worst(&self) -> f64 {
        self.tensor
            .max(self.direct_sum)
            .max(self.star)
            .max(self.transport)
    }
}

fn action_defect(a: &[CMat], b: &[CMat], t: &CMat) -> f64 {
    a.iter()
        .zip(b)
        .map(|(ma, mb)| linalg::deviation(&(mb * t), &(t * ma)))
        .fold(linalg::unitarity_defect(t), f64::max)
}

/// The hat map preserves `⊗`, `⊕` and `*` up to the structure isomorphisms,
/// and transports between points intertwine the actions.
pub fn hat_homomorphism(
    x: &RepObject,
    y: &RepObject,
    points: &[SpectrumPoint],
) -> Result<HatReport> {
    let hx = gelfand_hat(x, points)?;
    let hy = gelfand_hat(y, points)?;
    let xy = x.tensor(y)?;
    let xpy = x.direct_sum(y)?;
    let xs = x.conjugate();
    let hxy = gelfand_hat(&xy, points)?;
    let hxpy = gelfand_hat(&xpy, points)?;
    let hxs = gelfand_hat(&xs, points)?;
    let mut r = HatReport::default();
    for (k, p) in points.iter().enumerate() {
        let (ux, uy) = (p.identification(x), p.identification(y));
        let kron_action: Vec<CMat> = hx.actions[k]
            .iter()
            .zip(&hy.actions[k])
            .map(|(a, b)| linalg::kron(a, b))
            .collect();
        let phi = p.identification(&xy) * linalg::kron(&ux, &uy).adjoint();
        r.tensor = r
            .tensor
            .max(action_defect(&kron_action, &hxy.actions[k], &phi));
        let sum_action: Vec<CMat> = hx.actions[k]
            .iter()
            .zip(&hy.actions[k])
            .map(|(a, b)| linalg::block_diag(&[a.clone(), b.clone()]))
            .collect();
        let psi = p.identification(&xpy) * linalg::block_diag(&[ux.clone(), uy]).adjoint();
        r.direct_sum = r
            .direct_sum
            .max(action_defect(&sum_action, &hxpy.actions[k], &psi));
        let conj_action: Vec<CMat> = hx.actions[k].iter().map(|a| a.map(|z| z.conj())).collect();
        let chi = p.identification(&xs) * ux.map(|z| z.conj()).adjoint();
        r.star = r
            .star
            .max(action_defect(&conj_action, &hxs.actions[k], &chi));
        for (q, t) in hx.transports[k].iter().enumerate() {
            r.transport = r
                .transport
                .max(action_defect(&hx.actions[k], &hx.actions[q], t));
        }
    }
    Ok(r)
}

/// `dim` of the space of `T` with `B_g T = T A_g` for all `g`, by a null-space
/// computation on the stacked linear system.
pub fn commutant_dim(a: &[CMat], b: &[CMat]) -> usize {
    let (n, m) = (a[0].nrows(), b[0].nrows());
    if n == 0 || m == 0 {
        return 0;
    }
    let mut rows: Vec<CMat> = Vec::new();
    for (ma, mb) in a.iter().zip(b) {
        rows.push(
            linalg::kron(&linalg::identity(n), mb)
                - linalg::kron(&ma.transpose(), &linalg::identity(m)),
        );
    }
    let stacked = CMat::from_fn(rows.len() * n * m, n * m, |r, c| {
        rows[r / (n * m)][(r % (n * m), c)]
    });
    linalg::null_space(&stacked, 1e-8).ncols()
}

/// At the tautological point, `dim hom(x̂, ŷ)` over the reconstructed
/// symmetry group against `dim hom(x, y)`.
pub fn full_faithfulness(x: &RepObject, y: &RepObject) -> Result<(usize, usize)> {
    let point = SpectrumPoint::tautological(x.category());
    let hx = gelfand_hat(x, std::slice::from_ref(&point))?;
    let hy = gelfand_hat(y, std::slice::from_ref(&point))?;
    Ok((
        commutant_dim(&hx.actions[0], &hy.actions[0]),
        RepObject::hom_dim(x, y)?,
    ))
}
