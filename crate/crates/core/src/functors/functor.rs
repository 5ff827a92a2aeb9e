//! Exact *-functors between skeletal 2-Hilbert spaces, encoded as
//! nonnegative integer matrices, and natural transformations between them.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hstar::{BlockMorphism, ObjectExpr, SpaceTable};
use crate::linalg::{self, re, CMat, C64};

/// A functor `H → K` determined by `F(e_λ) = ⊕_μ F_{λμ} e'_μ`.
///
/// Within `F(x)` at a target simple `μ`, summands are ordered by source
/// simple `λ`, then by the copy of `e_λ` in `x`, then by the copy of `e'_μ`
/// in `F(e_λ)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FusionFunctor {
    src: Arc<SpaceTable>,
    dst: Arc<SpaceTable>,
    mult: Vec<Vec<usize>>,
}

impl FusionFunctor {
    pub fn new(src: Arc<SpaceTable>, dst: Arc<SpaceTable>, mult: Vec<Vec<usize>>) -> Result<Self> {
        if mult.len() != src.dim() || mult.iter().any(|row| row.len() != dst.dim()) {
            return Err(Error::Invalid(format!(
                "multiplicity matrix must be {}×{}",
                src.dim(),
                dst.dim()
            )));
        }
        Ok(FusionFunctor { src, dst, mult })
    }

    pub fn identity(space: &Arc<SpaceTable>) -> Self {
        let n = space.dim();
        let mult = (0..n)
            .map(|i| (0..n).map(|j| usize::from(i == j)).collect())
            .collect();
        FusionFunctor {
            src: space.clone(),
            dst: space.clone(),
            mult,
        }
    }

    pub fn zero(src: &Arc<SpaceTable>, dst: &Arc<SpaceTable>) -> Self {
        FusionFunctor {
            src: src.clone(),
            dst: dst.clone(),
            mult: vec![vec![0; dst.dim()]; src.dim()],
        }
    }

    pub fn src(&self) -> &Arc<SpaceTable> {
        &self.src
    }

    pub fn dst(&self) -> &Arc<SpaceTable> {
        &self.dst
    }

    pub fn mult(&self) -> &[Vec<usize>] {
        &self.mult
    }

    pub fn entry(&self, lambda: usize, mu: usize) -> usize {
        self.mult[lambda][mu]
    }

    pub fn is_zero(&self) -> bool {
        self.mult.iter().flatten().all(|&n| n == 0)
    }

    /// Image of a simple: `F(e_λ)`.
    pub fn image_of_simple(&self, lambda: usize) -> ObjectExpr {
        ObjectExpr::new(self.dst.clone(), self.mult[lambda].clone())
            .expect("row length matches target")
    }

    /// `F(x)`: the row vector of multiplicities times the matrix.
    pub fn apply_object(&self, x: &ObjectExpr) -> Result<ObjectExpr> {
        if **x.space() != *self.src {
            return Err(Error::SpaceMismatch);
        }
        let mut out = vec![0; self.dst.dim()];
        for (l, &n) in x.mult().iter().enumerate() {
            for (m, o) in out.iter_mut().enumerate() {
                *o += n * self.mult[l][m];
            }
        }
        ObjectExpr::new(self.dst.clone(), out)
    }

    /// `F(f)`: the block at `μ` is `⊕_λ f_λ ⊗ 1_{F_{λμ}}`.
    pub fn apply_morphism(&self, f: &BlockMorphism) -> Result<BlockMorphism> {
        let src = self.apply_object(f.src())?;
        let dst = self.apply_object(f.dst())?;
        let blocks = (0..self.dst.dim())
            .map(|m| {
                let parts: Vec<CMat> = f
                    .blocks()
                    .iter()
                    .enumerate()
                    .map(|(l, b)| linalg::kron(b, &linalg::identity(self.mult[l][m])))
                    .collect();
                linalg::block_diag(&parts)
            })
            .collect();
        BlockMorphism::new(src, dst, blocks)
    }

    /// The two-sided adjoint `F*`, with transposed matrix.
    pub fn adjoint(&self) -> FusionFunctor {
        let mult = (0..self.dst.dim())
            .map(|m| (0..self.src.dim()).map(|l| self.mult[l][m]).collect())
            .collect();
        FusionFunctor {
            src: self.dst.clone(),
            dst: self.src.clone(),
            mult,
        }
    }

    /// Composite "first `self`, then `g`", with matrix `F · G`.
    pub fn then(&self, g: &FusionFunctor) -> Result<FusionFunctor> {
        if *self.dst != *g.src {
            return Err(Error::Composition("functor endpoints do not match".into()));
        }
        let mult = (0..self.src.dim())
            .map(|l| {
                (0..g.dst.dim())
                    .map(|n| {
                        (0..self.dst.dim())
                            .map(|m| self.mult[l][m] * g.mult[m][n])
                            .sum()
                    })
                    .collect()
            })
            .collect();
        Ok(FusionFunctor {
            src: self.src.clone(),
            dst: g.dst.clone(),
            mult,
        })
    }
}

/// `dim hom(x, y) = Σ_λ x_λ y_λ` in a skeletal space.
pub fn hom_dim(x: &ObjectExpr, y: &ObjectExpr) -> usize {
    x.mult().iter().zip(y.mult()).map(|(a, b)| a * b).sum()
}

/// Verifies `dim hom(F e_λ, e'_μ) = dim hom(e_λ, F* e'_μ)` for all basis pairs.
pub fn adjoint_duality_holds(f: &FusionFunctor) -> bool {
    let fs = f.adjoint();
    (0..f.src().dim()).all(|l| {
        let el = ObjectExpr::simple(f.src().clone(), l);
        let fel = f.apply_object(&el).expect("same space");
        (0..f.dst().dim()).all(|m| {
            let em = ObjectExpr::simple(f.dst().clone(), m);
            let fsem = fs.apply_object(&em).expect("same space");
            hom_dim(&fel, &em) == hom_dim(&el, &fsem)
        })
    })
}

/// A natural transformation `α: F ⇒ G`, stored by its components
/// `α_λ: F(e_λ) → G(e_λ)` on simples.
#[derive(Debug, Clone)]
pub struct NatBlock {
    src: FusionFunctor,
    dst: FusionFunctor,
    components: Vec<BlockMorphism>,
}

impl NatBlock {
    pub fn new(
        src: FusionFunctor,
        dst: FusionFunctor,
        components: Vec<BlockMorphism>,
    ) -> Result<Self> {
        if src.src != dst.src || src.dst != dst.dst {
            return Err(Error::Endpoints(
                "natural transformation between functors with different endpoints".into(),
            ));
        }
        if components.len() != src.src.dim() {
            return Err(Error::Invalid(
                "one component per source simple required".into(),
            ));
        }
        for (l, c) in components.iter().enumerate() {
            if *c.src() != src.image_of_simple(l) || *c.dst() != dst.image_of_simple(l) {
                return Err(Error::Endpoints(format!(
                    "component at `{}` has wrong endpoints",
                    src.src.label(l)
                )));
            }
        }
        Ok(NatBlock {
            src,
            dst,
            components,
        })
    }

    pub fn identity(f: &FusionFunctor) -> Self {
        let components = (0..f.src.dim())
            .map(|l| BlockMorphism::identity(&f.image_of_simple(l)))
            .collect();
        NatBlock {
            src: f.clone(),
            dst: f.clone(),
            components,
        }
    }

    pub fn src(&self) -> &FusionFunctor {
        &self.src
    }

    pub fn dst(&self) -> &FusionFunctor {
        &self.dst
    }

    pub fn components(&self) -> &[BlockMorphism] {
        &self.components
    }

    /// `α_x: F(x) → G(x)`; the block at `μ` is `⊕_λ 1_{x_λ} ⊗ (α_λ)_μ`.
    pub fn component_at(&self, x: &ObjectExpr) -> Result<BlockMorphism> {
        let fx = self.src.apply_object(x)?;
        let gx = self.dst.apply_object(x)?;
        let blocks = (0..self.src.dst.dim())
            .map(|m| {
                let parts: Vec<CMat> = x
                    .mult()
                    .iter()
                    .enumerate()
                    .map(|(l, &n)| {
                        linalg::kron(&linalg::identity(n), &self.components[l].blocks()[m])
                    })
                    .collect();
                linalg::block_diag(&parts)
            })
            .collect();
        BlockMorphism::new(fx, gx, blocks)
    }

    /// The dual `α*: G ⇒ F`, componentwise star.
    pub fn star(&self) -> NatBlock {
        NatBlock {
            src: self.dst.clone(),
            dst: self.src.clone(),
            components: self.components.iter().map(|c| c.star()).collect(),
        }
    }

    /// Vertical composite "first `self`, then `beta`".
    pub fn then(&self, beta: &NatBlock) -> Result<NatBlock> {
        if self.dst != beta.src {
            return Err(Error::Composition(
                "natural transformations do not compose".into(),
            ));
        }
        let components = self
            .components
            .iter()
            .zip(&beta.components)
            .map(|(a, b)| a.compose(b))
            .collect::<Result<_>>()?;
        Ok(NatBlock {
            src: self.src.clone(),
            dst: beta.dst.clone(),
            components,
        })
    }

    /// `⟨α, β⟩ = Σ_λ ⟨α_{e_λ}, β_{e_λ}⟩`.
    pub fn inner_product(&self, beta: &NatBlock) -> Result<C64> {
        if self.src != beta.src || self.dst != beta.dst {
            return Err(Error::Endpoints(
                "inner product of non-parallel transformations".into(),
            ));
        }
        let mut total = re(0.0);
        for (a, b) in self.components.iter().zip(&beta.components) {
            total += a.inner_product(b)?;
        }
        Ok(total)
    }

    pub fn deviation(&self, beta: &NatBlock) -> f64 {
        self.components
            .iter()
            .zip(&beta.components)
            .map(|(a, b)| a.deviation(b))
            .fold(0.0, f64::max)
    }

    pub fn unitarity_defect(&self) -> f64 {
        self.components
            .iter()
            .map(|c| c.unitarity_defect())
            .fold(0.0, f64::max)
    }

    /// Componentwise polar decomposition `α = β γ` with `β` positive and `γ` unitary.
    pub fn polar_decompose(&self, tol: f64) -> Result<(NatBlock, NatBlock)> {
        let mut pos = Vec::new();
        let mut uni = Vec::new();
        for c in &self.components {
            let (a, u) = c.polar_decompose(tol)?;
            pos.push(a);
            uni.push(u);
        }
        Ok((
            NatBlock {
                src: self.src.clone(),
                dst: self.src.clone(),
                components: pos,
            },
            NatBlock {
                src: self.src.clone(),
                dst: self.dst.clone(),
                components: uni,
            },
        ))
    }

    /// Whiskering after a functor: `α;H : F;H ⇒ G;H`, components `H(α_λ)`.
    pub fn whisker_after(&self, h: &FusionFunctor) -> Result<NatBlock> {
        let components = self
            .components
            .iter()
            .map(|c| h.apply_morphism(c))
            .collect::<Result<_>>()?;
        NatBlock::new(self.src.then(h)?, self.dst.then(h)?, components)
    }

    /// Whiskering before a functor: `K;α : K;F ⇒ K;G`, components `α_{K(e_κ)}`.
    pub fn whisker_before(&self, k: &FusionFunctor) -> Result<NatBlock> {
        let components = (0..k.src.dim())
            .map(|i| self.component_at(&k.image_of_simple(i)))
            .collect::<Result<_>>()?;
        NatBlock::new(k.then(&self.src)?, k.then(&self.dst)?, components)
    }
}

/// Summand labels of `(F;G)(e_λ)` at a target simple `ν`, in storage order:
/// `(μ, a, c)` with `a < F_{λμ}`, `c < G_{μν}`.
fn composite_indices(
    f: &FusionFunctor,
    g: &FusionFunctor,
    l: usize,
    n: usize,
) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for m in 0..f.dst.dim() {
        for a in 0..f.mult[l][m] {
            for c in 0..g.mult[m][n] {
                out.push((m, a, c));
            }
        }
    }
    out
}

/// The associator `(F;G);H ⇒ F;(G;H)`, a permutation in every component.
pub fn associator(f: &FusionFunctor, g: &FusionFunctor, h: &FusionFunctor) -> Result<NatBlock> {
    let fg = f.then(g)?;
    let gh = g.then(h)?;
    let left = fg.then(h)?;
    let right = f.then(&gh)?;
    let mut components = Vec::with_capacity(f.src.dim());
    for l in 0..f.src.dim() {
        let blocks = (0..h.dst.dim())
            .map(|n| {
                // left order: (μ2, (μ1, a, b), c); right order: (μ1, a, (μ2, b, c))
                let mut left_keys = Vec::new();
                for m2 in 0..h.src.dim() {
                    for (m1, a, b) in composite_indices(f, g, l, m2) {
                        for c in 0..h.mult[m2][n] {
                            left_keys.push((m1, a, m2, b, c));
                        }
                    }
                }
                let mut right_keys = Vec::new();
                for m1 in 0..f.dst.dim() {
                    for a in 0..f.mult[l][m1] {
                        for (m2, b, c) in composite_indices(g, h, m1, n) {
                            right_keys.push((m1, a, m2, b, c));
                        }
                    }
                }
                permutation_between(&left_keys, &right_keys)
            })
            .collect();
        components.push(BlockMorphism::new(
            left.image_of_simple(l),
            right.image_of_simple(l),
            blocks,
        )?);
    }
    NatBlock::new(left, right, components)
}

/// Matrix sending the basis vector labelled `from[j]` to the one labelled the same in `to`.
pub(crate) fn permutation_between<K: PartialEq>(from: &[K], to: &[K]) -> CMat {
    let mut m = linalg::zeros(to.len(), from.len());
    for (j, key) in from.iter().enumerate() {
        let i = to.iter().position(|k| k == key).expect("index sets agree");
        m[(i, j)] = re(1.0);
    }
    m
}

/// Unit `1_H ⇒ F;F*` and counit `F*;F ⇒ 1_K` of the adjunction `F ⊣ F*`,
/// built from the identity pairing of summands.
pub fn adjunction_data(f: &FusionFunctor) -> Result<(NatBlock, NatBlock)> {
    let fs = f.adjoint();
    let ffs = f.then(&fs)?;
    let fsf = fs.then(f)?;
    let id_h = FusionFunctor::identity(&f.src);
    let id_k = FusionFunctor::identity(&f.dst);

    let mut unit = Vec::new();
    for l in 0..f.src.dim() {
        let blocks = (0..f.src.dim())
            .map(|l2| {
                let idx = composite_indices(f, &fs, l, l2);
                let mut b = linalg::zeros(idx.len(), usize::from(l == l2));
                if l == l2 {
                    for (r, &(_, a, c)) in idx.iter().enumerate() {
                        if a == c {
                            b[(r, 0)] = re(1.0);
                        }
                    }
                }
                b
            })
            .collect();
        unit.push(BlockMorphism::new(
            id_h.image_of_simple(l),
            ffs.image_of_simple(l),
            blocks,
        )?);
    }

    let mut counit = Vec::new();
    for m in 0..f.dst.dim() {
        let blocks = (0..f.dst.dim())
            .map(|m2| {
                let idx = composite_indices(&fs, f, m, m2);
                let mut b = linalg::zeros(usize::from(m == m2), idx.len());
                if m == m2 {
                    for (r, &(_, a, c)) in idx.iter().enumerate() {
                        if a == c {
                            b[(0, r)] = re(1.0);
                        }
                    }
                }
                b
            })
            .collect();
        counit.push(BlockMorphism::new(
            fsf.image_of_simple(m),
            id_k.image_of_simple(m),
            blocks,
        )?);
    }
    Ok((
        NatBlock::new(id_h, ffs, unit)?,
        NatBlock::new(fsf, id_k, counit)?,
    ))
}

/// Largest deviation from the two triangle identities for a candidate
/// adjunction `F ⊣ G` with unit `η: 1 ⇒ F;G` and counit `ε: G;F ⇒ 1`.
pub fn triangle_defect(
    f: &FusionFunctor,
    g: &FusionFunctor,
    eta: &NatBlock,
    eps: &NatBlock,
) -> Result<f64> {
    let assoc_fgf = associator(f, g, f)?;
    let assoc_gfg = associator(g, f, g)?;
    let mut worst = 0.0f64;
    for l in 0..f.src.dim() {
        let fe = f.image_of_simple(l);
        let step = f
            .apply_morphism(&eta.components[l])?
            .compose(&assoc_fgf.components[l])?
            .compose(&eps.component_at(&fe)?)?;
        worst = worst.max(step.deviation(&BlockMorphism::identity(&fe)));
    }
    for m in 0..f.dst.dim() {
        let ge = g.image_of_simple(m);
        let step = eta
            .component_at(&ge)?
            .compose(&assoc_gfg.components[m].star())?
            .compose(&g.apply_morphism(&eps.components[m])?)?;
        worst = worst.max(step.deviation(&BlockMorphism::identity(&ge)));
    }
    Ok(worst)
}

/// An equivalence between spaces with equal numbers of simples, pairing
/// simples in table order.
#[derive(Debug, Clone)]
pub struct Equivalence {
    pub forward: FusionFunctor,
    pub backward: FusionFunctor,
    pub unit: NatBlock,
    pub counit: NatBlock,
}

pub fn equivalence(h: &Arc<SpaceTable>, k: &Arc<SpaceTable>) -> Result<Equivalence> {
    if h.dim() != k.dim() {
        return Err(Error::Invalid(format!(
            "spaces of dimension {} and {} are not equivalent",
            h.dim(),
            k.dim()
        )));
    }
    let n = h.dim();
    let mult = (0..n)
        .map(|i| (0..n).map(|j| usize::from(i == j)).collect())
        .collect();
    let forward = FusionFunctor::new(h.clone(), k.clone(), mult)?;
    let backward = forward.adjoint();
    let (unit, counit) = adjunction_data(&forward)?;
    Ok(Equivalence {
        forward,
        backward,
        unit,
        counit,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::random_matrix;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn sp(n: usize) -> Arc<SpaceTable> {
        SpaceTable::numbered(&vec![1.0; n]).unwrap().into_arc()
    }

    fn random_functor(
        rng: &mut ChaCha8Rng,
        h: &Arc<SpaceTable>,
        k: &Arc<SpaceTable>,
    ) -> FusionFunctor {
        let mult = (0..h.dim())
            .map(|_| (0..k.dim()).map(|_| rng.gen_range(0..=2)).collect())
            .collect();
        FusionFunctor::new(h.clone(), k.clone(), mult).unwrap()
    }

    fn random_morphism(rng: &mut ChaCha8Rng, x: &ObjectExpr, y: &ObjectExpr) -> BlockMorphism {
        let blocks = x
            .mult()
            .iter()
            .zip(y.mult())
            .map(|(&a, &b)| random_matrix(rng, b, a))
            .collect();
        BlockMorphism::new(x.clone(), y.clone(), blocks).unwrap()
    }

    #[test]
    fn row_times_matrix() {
        let h = sp(1);
        let k = sp(2);
        let f = FusionFunctor::new(h.clone(), k, vec![vec![1, 2]]).unwrap();
        let x = ObjectExpr::simple(h, 0);
        assert_eq!(f.apply_object(&x).unwrap().mult(), &[1, 2]);
        assert_eq!(f.adjoint().mult(), &[vec![1], vec![2]]);
        assert_eq!(f.adjoint().adjoint(), f);
        assert!(adjoint_duality_holds(&f));
    }

    #[test]
    fn identity_functor_acts_trivially() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let h = sp(2);
        let x = ObjectExpr::new(h.clone(), vec![1, 2]).unwrap();
        let f = random_morphism(&mut rng, &x, &x);
        let id = FusionFunctor::identity(&h);
        assert_eq!(id.apply_morphism(&f).unwrap().deviation(&f), 0.0);
    }

    #[test]
    fn apply_preserves_composition_and_star() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let h = sp(2);
        let k = sp(3);
        let f = random_functor(&mut rng, &h, &k);
        let x = ObjectExpr::new(h.clone(), vec![1, 2]).unwrap();
        let y = ObjectExpr::new(h.clone(), vec![2, 1]).unwrap();
        let z = ObjectExpr::new(h, vec![1, 1]).unwrap();
        let a = random_morphism(&mut rng, &x, &y);
        let b = random_morphism(&mut rng, &y, &z);
        let lhs = f.apply_morphism(&a.compose(&b).unwrap()).unwrap();
        let rhs = f
            .apply_morphism(&a)
            .unwrap()
            .compose(&f.apply_morphism(&b).unwrap())
            .unwrap();
        assert!(lhs.deviation(&rhs) < 1e-12);
        assert!(
            f.apply_morphism(&a.star())
                .unwrap()
                .deviation(&f.apply_morphism(&a).unwrap().star())
                < 1e-15
        );
    }

    #[test]
    fn adjoint_reverses_composites() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let (h, k, l) = (sp(2), sp(3), sp(2));
        let f = random_functor(&mut rng, &h, &k);
        let g = random_functor(&mut rng, &k, &l);
        assert_eq!(
            f.then(&g).unwrap().adjoint(),
            g.adjoint().then(&f.adjoint()).unwrap()
        );
    }

    #[test]
    fn triangles_hold_and_swap() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..10 {
            let h = sp(rng.gen_range(1..4));
            let k = sp(rng.gen_range(1..4));
            let f = random_functor(&mut rng, &h, &k);
            let g = f.adjoint();
            let (eta, eps) = adjunction_data(&f).unwrap();
            assert!(triangle_defect(&f, &g, &eta, &eps).unwrap() < 1e-14);
            // (G, F, ε*, ι*) is again an adjunction
            assert!(triangle_defect(&g, &f, &eps.star(), &eta.star()).unwrap() < 1e-14);
        }
    }

    #[test]
    fn broken_unit_is_detected() {
        let h = sp(1);
        let f = FusionFunctor::new(h.clone(), h, vec![vec![2]]).unwrap();
        let (eta, eps) = adjunction_data(&f).unwrap();
        let scaled = NatBlock::new(
            eta.src().clone(),
            eta.dst().clone(),
            eta.components().iter().map(|c| c.scale(re(2.0))).collect(),
        )
        .unwrap();
        assert!((triangle_defect(&f, &f.adjoint(), &scaled, &eps).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn naturality_of_components() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let (h, k) = (sp(2), sp(2));
        let f = random_functor(&mut rng, &h, &k);
        let comps = (0..2)
            .map(|l| {
                let e = f.image_of_simple(l);
                random_morphism(&mut rng, &e, &e)
            })
            .collect();
        let alpha = NatBlock::new(f.clone(), f.clone(), comps).unwrap();
        let x = ObjectExpr::new(h.clone(), vec![2, 1]).unwrap();
        let y = ObjectExpr::new(h, vec![1, 2]).unwrap();
        let m = random_morphism(&mut rng, &x, &y);
        let lhs = f
            .apply_morphism(&m)
            .unwrap()
            .compose(&alpha.component_at(&y).unwrap())
            .unwrap();
        let rhs = alpha
            .component_at(&x)
            .unwrap()
            .compose(&f.apply_morphism(&m).unwrap())
            .unwrap();
        assert!(lhs.deviation(&rhs) < 1e-12);
    }

    #[test]
    fn invertible_natblock_has_polar_factors() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let h = sp(2);
        let f = FusionFunctor::new(h.clone(), h, vec![vec![2, 0], vec![1, 1]]).unwrap();
        let comps = (0..2)
            .map(|l| {
                let e = f.image_of_simple(l);
                let blocks = e
                    .mult()
                    .iter()
                    .map(|&n| linalg::random_invertible(&mut rng, n))
                    .collect();
                BlockMorphism::new(e.clone(), e, blocks).unwrap()
            })
            .collect();
        let alpha = NatBlock::new(f.clone(), f, comps).unwrap();
        let (b, g) = alpha.polar_decompose(1e-10).unwrap();
        assert!(g.unitarity_defect() < 1e-10);
        assert!(b.then(&g).unwrap().deviation(&alpha) < 1e-10);
        assert!(b.deviation(&b.star()) < 1e-10);
    }

    #[test]
    fn equivalence_exists_iff_same_dimension() {
        let h = SpaceTable::numbered(&[1.0, 2.0]).unwrap().into_arc();
        let k = SpaceTable::numbered(&[3.0, 0.5]).unwrap().into_arc();
        let eq = equivalence(&h, &k).unwrap();
        assert!(eq.unit.unitarity_defect() < 1e-15);
        assert!(eq.counit.unitarity_defect() < 1e-15);
        assert!(equivalence(&h, &sp(3)).is_err());
    }
}
