//! The Fourier transform `Rep(T) → Hilb[T̂]` for finite abelian `T`.

use std::sync::Arc;

use super::graded::GradedObject;
use crate::error::{Error, Result};
use crate::linalg::{self, CMat, C64};
use crate::rep::{braiding, BraidingMode, FiniteGroup, RepCategory, RepObject};

/// `T̂` as a finite group, element `λ` being the `λ`-th irrep of `T`.
#[derive(Debug, Clone)]
pub struct DualGroup {
    pub group: FiniteGroup,
    /// `characters[λ][t] = χ_λ(t)`.
    pub characters: Vec<Vec<C64>>,
}

fn same_character(a: &[C64], b: &[C64]) -> bool {
    a.iter().zip(b).all(|(x, y)| (x - y).norm() < 1e-6)
}

/// Materialises `T̂` with the pointwise product of characters.
pub fn dual_group(cat: &RepCategory) -> Result<DualGroup> {
    let t = cat.group();
    if !t.is_abelian() {
        return Err(Error::NotAbelian(t.name().to_string()));
    }
    let characters: Vec<Vec<C64>> = cat.irreps().iter().map(|r| r.character.clone()).collect();
    let n = characters.len();
    let mut table = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            let prod: Vec<C64> = characters[a]
                .iter()
                .zip(&characters[b])
                .map(|(x, y)| x * y)
                .collect();
            table[a][b] = characters
                .iter()
                .position(|c| same_character(c, &prod))
                .ok_or_else(|| Error::Numeric("character product is not a character".into()))?;
        }
    }
    let names = cat.irreps().iter().map(|r| r.label.clone()).collect();
    let group = FiniteGroup::new(format!("{}^", t.name()), table)?.with_element_names(names)?;
    Ok(DualGroup { group, characters })
}

/// The Fourier transform of an object, with its identification of carriers.
#[derive(Debug, Clone)]
pub struct Transformed {
    pub graded: GradedObject,
    /// Unitary `carrier(F x) → x`, mapping fiber `λ` onto the `λ`-isotypic part.
    pub embedding: CMat,
}

/// `F: Rep(T) → Hilb[T̂]` together with its inverse.
#[derive(Debug, Clone)]
pub struct Fourier {
    cat: Arc<RepCategory>,
    dual: DualGroup,
}

#[derive(Debug, Clone, Default)]
pub struct MonoidalReport {
    /// Unitarity and grading defect of `Φ: F(x) ⊗ F(y) → F(x ⊗ y)`.
    pub structure: f64,
    /// `Φ_{y,x} ∘ B_{Fx,Fy}` against `F(B_{x,y}) ∘ Φ_{x,y}`.
    pub braiding: f64,
    /// `F(f*)` against `F(f)*` on a sample intertwiner.
    pub star: f64,
}

impl MonoidalReport {
    pub fn worst(&self) -> f64 {
        self.structure.max(self.braiding).max(self.star)
    }
}

impl Fourier {
    pub fn new(cat: Arc<RepCategory>) -> Result<Self> {
        let dual = dual_group(&cat)?;
        Ok(Fourier { cat, dual })
    }

    pub fn dual(&self) -> &DualGroup {
        &self.dual
    }

    pub fn category(&self) -> &Arc<RepCategory> {
        &self.cat
    }

    pub fn transform(&self, x: &RepObject) -> Result<Transformed> {
        if !x.category().same_as(&self.cat) {
            return Err(Error::GroupMismatch(
                "object outside the transformed category".into(),
            ));
        }
        let dec = x.decompose();
        let graded = GradedObject::new(self.dual.group.clone(), dec.multiplicities())?;
        Ok(Transformed {
            embedding: dec.unitary(x.dim()),
            graded,
        })
    }

    /// `F(f) = U_y* f U_x` for an intertwiner `f: x → y`.
    pub fn transform_morphism(&self, fx: &Transformed, fy: &Transformed, f: &CMat) -> CMat {
        fy.embedding.adjoint() * f * &fx.embedding
    }

    /// `⊕_λ n_λ ρ_λ`.
    pub fn inverse(&self, g: &GradedObject) -> Result<RepObject> {
        if g.group() != &self.dual.group {
            return Err(Error::GroupMismatch(
                "graded over a different dual group".into(),
            ));
        }
        let mut x = RepObject::zero(&self.cat);
        for (lambda, &n) in g.fibers().iter().enumerate() {
            for _ in 0..n {
                x = x.direct_sum(&RepObject::irrep(&self.cat, lambda))?;
            }
        }
        Ok(x)
    }

    /// The structure map `Φ_{x,y}: F(x) ⊗ F(y) → F(x ⊗ y)` on convolution carriers.
    pub fn structure_map(&self, x: &RepObject, y: &RepObject) -> Result<CMat> {
        let (fx, fy, fxy) = (
            self.transform(x)?,
            self.transform(y)?,
            self.transform(&x.tensor(y)?)?,
        );
        let p = fx.graded.convolution_coordinates(&fy.graded)?;
        Ok(fxy.embedding.adjoint() * linalg::kron(&fx.embedding, &fy.embedding) * p.transpose())
    }

    pub fn check_monoidal(
        &self,
        x: &RepObject,
        y: &RepObject,
        sample: &CMat,
    ) -> Result<MonoidalReport> {
        let (fx, fy) = (self.transform(x)?, self.transform(y)?);
        let fxy = self.transform(&x.tensor(y)?)?;
        let fyx = self.transform(&y.tensor(x)?)?;
        let conv = fx.graded.convolution_tensor(&fy.graded)?;
        let phi_xy = self.structure_map(x, y)?;
        let phi_yx = self.structure_map(y, x)?;
        let structure = linalg::unitarity_defect(&phi_xy).max(GradedObject::grading_defect(
            &conv,
            &fxy.graded,
            &phi_xy,
        ));
        let lhs = phi_yx * self.graded_braiding(&fx.graded, &fy.graded)?;
        let rhs = self.transform_morphism(&fxy, &fyx, &braiding(x, y)?) * &phi_xy;
        let star_lhs = self.transform_morphism(&fx, &fx, &sample.adjoint());
        let star_rhs = self.transform_morphism(&fx, &fx, sample).adjoint();
        Ok(MonoidalReport {
            structure,
            braiding: linalg::deviation(&lhs, &rhs),
            star: linalg::deviation(&star_lhs, &star_rhs),
        })
    }

    /// The unitary natural isomorphism `F⁻¹(F(x)) → x` and its defect
    /// (unitarity plus equivariance).
    pub fn round_trip(&self, x: &RepObject) -> Result<(CMat, f64)> {
        let fx = self.transform(x)?;
        let back = self.inverse(&fx.graded)?;
        let w = fx.embedding.clone();
        let defect = linalg::unitarity_defect(&w).max(RepObject::equivariance_defect(&back, x, &w));
        Ok((w, defect))
    }

    /// The symmetry of `Hilb[T̂]`, Koszul-signed by fiber parities in the
    /// super case.
    pub fn graded_braiding(&self, x: &GradedObject, y: &GradedObject) -> Result<CMat> {
        let parity = self.fiber_parities();
        let (dx, dy) = (x.degrees(), y.degrees());
        let signs = linalg::block_diag(
            &dx.iter()
                .flat_map(|&a| dy.iter().map(move |&b| (a, b)))
                .map(|(a, b)| {
                    linalg::identity(1)
                        * linalg::re(if parity[a] < 0 && parity[b] < 0 {
                            -1.0
                        } else {
                            1.0
                        })
                })
                .collect::<Vec<_>>(),
        );
        let p_xy = x.convolution_coordinates(y)?;
        let plain = x.braiding(y)?;
        Ok(plain * &p_xy * signs * p_xy.transpose())
    }

    /// Parity of each fiber, the sign of `χ_λ(z)`; all even unless the
    /// category is super.
    pub fn fiber_parities(&self) -> Vec<i32> {
        if self.cat.mode() != BraidingMode::Super {
            return vec![1; self.dual.characters.len()];
        }
        match self.cat.z() {
            Some(z) => self
                .dual
                .characters
                .iter()
                .map(|c| if c[z].re < 0.0 { -1 } else { 1 })
                .collect(),
            None => vec![1; self.dual.characters.len()],
        }
    }
}

/// Fiber data of `F(x)` in the bosonized category against the
/// bosonization of `Hilb[T̂]`-with-parities applied to `F(x)`: the objects
/// and fibers agree, only the braiding changes.
pub fn bosonization_compatible(cat: &Arc<RepCategory>, x: &RepObject) -> Result<bool> {
    let boson = cat.bosonize()?;
    let f_super = Fourier::new(cat.clone())?;
    let f_boson = Fourier::new(boson.clone())?;
    let a = f_boson.transform(&x.rebind(&boson)?)?.graded;
    let b = f_super.transform(x)?.graded;
    Ok(a.fibers() == b.fibers())
}
