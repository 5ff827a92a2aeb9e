//! Spaces built from spaces: `hom(H, K)`, the dual `H* = hom(H, Hilb)`, and
//! the tensor product `H ⊗ K` with its braiding.

use std::sync::Arc;

use super::functor::{permutation_between, FusionFunctor, NatBlock};
use crate::error::{Error, Result};
use crate::hstar::{BlockMorphism, ObjectExpr, SpaceTable};
use crate::linalg::{self, CMat};

/// `hom(H, K)`: simples are the matrix-unit functors `E_{λμ}` sending `e_λ`
/// to `e'_μ` and every other simple to 0. `E_{λμ}` has weight `k'_μ`.
#[derive(Debug, Clone)]
pub struct HomSpace {
    pub src: Arc<SpaceTable>,
    pub dst: Arc<SpaceTable>,
    pub table: Arc<SpaceTable>,
}

impl HomSpace {
    fn index(&self, l: usize, m: usize) -> usize {
        l * self.dst.dim() + m
    }

    /// A functor as an object: multiplicity `F_{λμ}` at `E_{λμ}`.
    pub fn embed_functor(&self, f: &FusionFunctor) -> Result<ObjectExpr> {
        if **f.src() != *self.src || **f.dst() != *self.dst {
            return Err(Error::SpaceMismatch);
        }
        let mut mult = vec![0; self.table.dim()];
        for l in 0..self.src.dim() {
            for m in 0..self.dst.dim() {
                mult[self.index(l, m)] = f.entry(l, m);
            }
        }
        ObjectExpr::new(self.table.clone(), mult)
    }

    /// A natural transformation as a morphism: `(α_λ)_μ` becomes the block at `E_{λμ}`.
    pub fn embed_nat(&self, alpha: &NatBlock) -> Result<BlockMorphism> {
        let src = self.embed_functor(alpha.src())?;
        let dst = self.embed_functor(alpha.dst())?;
        let mut blocks = vec![CMat::zeros(0, 0); self.table.dim()];
        for (l, comp) in alpha.components().iter().enumerate() {
            for (m, b) in comp.blocks().iter().enumerate() {
                blocks[self.index(l, m)] = b.clone();
            }
        }
        BlockMorphism::new(src, dst, blocks)
    }
}

pub fn hom_space(h: &Arc<SpaceTable>, k: &Arc<SpaceTable>) -> HomSpace {
    let mut simples = Vec::with_capacity(h.dim() * k.dim());
    let mut weights = Vec::with_capacity(h.dim() * k.dim());
    for l in h.simples() {
        for (m, &w) in k.simples().iter().zip(k.weights()) {
            simples.push(format!("{l}->{m}"));
            weights.push(w);
        }
    }
    let table = SpaceTable::new(simples, weights)
        .expect("pair labels are distinct and weights positive")
        .into_arc();
    HomSpace {
        src: h.clone(),
        dst: k.clone(),
        table,
    }
}

/// `H* = hom(H, Hilb)`, spanned by the dual-basis functors `f^λ`.
pub fn dual_space(h: &Arc<SpaceTable>) -> HomSpace {
    hom_space(h, &Arc::new(SpaceTable::hilb()))
}

/// The object `x` with `hom(x, -) ≅ F` for a functor into `Hilb`:
/// `mult(x)_λ = F_{λ,C}`.
pub fn riesz_represent(f: &FusionFunctor) -> Result<ObjectExpr> {
    if f.dst().dim() != 1 {
        return Err(Error::Invalid(
            "Riesz representation needs a functor into Hilb".into(),
        ));
    }
    let mult = (0..f.src().dim()).map(|l| f.entry(l, 0)).collect();
    ObjectExpr::new(f.src().clone(), mult)
}

/// The dual-basis functor `f^λ: H → Hilb`.
pub fn dual_basis_functor(h: &Arc<SpaceTable>, lambda: usize) -> FusionFunctor {
    let mult = (0..h.dim())
        .map(|l| vec![usize::from(l == lambda)])
        .collect();
    FusionFunctor::new(h.clone(), Arc::new(SpaceTable::hilb()), mult).expect("shape matches")
}

/// `H ⊗ K`: simples are pairs `(λ, μ)` in λ-major order with weight `k_λ k_μ`.
#[derive(Debug, Clone)]
pub struct TensorSpace {
    pub left: Arc<SpaceTable>,
    pub right: Arc<SpaceTable>,
    pub table: Arc<SpaceTable>,
}

pub fn tensor_space(h: &Arc<SpaceTable>, k: &Arc<SpaceTable>) -> TensorSpace {
    let mut simples = Vec::new();
    let mut weights = Vec::new();
    for (l, &a) in h.simples().iter().zip(h.weights()) {
        for (m, &b) in k.simples().iter().zip(k.weights()) {
            simples.push(format!("({l},{m})"));
            weights.push(a * b);
        }
    }
    let table = SpaceTable::new(simples, weights)
        .expect("pair labels are distinct and weights positive")
        .into_arc();
    TensorSpace {
        left: h.clone(),
        right: k.clone(),
        table,
    }
}

impl TensorSpace {
    pub fn pair_index(&self, l: usize, m: usize) -> usize {
        l * self.right.dim() + m
    }

    /// The bimorphism on objects: `x ⊠ y` has multiplicity `x_λ y_μ` at `(λ, μ)`.
    pub fn pair_objects(&self, x: &ObjectExpr, y: &ObjectExpr) -> Result<ObjectExpr> {
        if **x.space() != *self.left || **y.space() != *self.right {
            return Err(Error::SpaceMismatch);
        }
        let mut mult = vec![0; self.table.dim()];
        for (l, &a) in x.mult().iter().enumerate() {
            for (m, &b) in y.mult().iter().enumerate() {
                mult[self.pair_index(l, m)] = a * b;
            }
        }
        ObjectExpr::new(self.table.clone(), mult)
    }

    /// The bimorphism on morphisms: blocks `f_λ ⊗ g_μ`.
    pub fn pair_morphisms(&self, f: &BlockMorphism, g: &BlockMorphism) -> Result<BlockMorphism> {
        let src = self.pair_objects(f.src(), g.src())?;
        let dst = self.pair_objects(f.dst(), g.dst())?;
        let mut blocks = Vec::with_capacity(self.table.dim());
        for a in f.blocks() {
            for b in g.blocks() {
                blocks.push(linalg::kron(a, b));
            }
        }
        BlockMorphism::new(src, dst, blocks)
    }
}

/// The braiding `R_{H,K}: H ⊗ K → K ⊗ H`, the pair-swap permutation.
pub fn braiding(hk: &TensorSpace, kh: &TensorSpace) -> Result<FusionFunctor> {
    if *hk.left != *kh.right || *hk.right != *kh.left {
        return Err(Error::SpaceMismatch);
    }
    let n = hk.table.dim();
    let mut mult = vec![vec![0; n]; n];
    for l in 0..hk.left.dim() {
        for m in 0..hk.right.dim() {
            mult[hk.pair_index(l, m)][kh.pair_index(m, l)] = 1;
        }
    }
    FusionFunctor::new(hk.table.clone(), kh.table.clone(), mult)
}

/// `F ⊗ G` acting on pair spaces, with matrix `F ⊗ G` (Kronecker product).
pub fn tensor_functors(f: &FusionFunctor, g: &FusionFunctor) -> Result<FusionFunctor> {
    let src = tensor_space(f.src(), g.src());
    let dst = tensor_space(f.dst(), g.dst());
    let mut mult = vec![vec![0; dst.table.dim()]; src.table.dim()];
    for l in 0..f.src().dim() {
        for k in 0..g.src().dim() {
            for l2 in 0..f.dst().dim() {
                for k2 in 0..g.dst().dim() {
                    mult[src.pair_index(l, k)][dst.pair_index(l2, k2)] =
                        f.entry(l, l2) * g.entry(k, k2);
                }
            }
        }
    }
    FusionFunctor::new(src.table, dst.table, mult)
}

/// Result of the tensorator check for `F: H → H'`, `G: K → K'`.
#[derive(Debug, Clone)]
pub struct Tensorator {
    /// `(F ⊗ K);(H' ⊗ G)`.
    pub left: FusionFunctor,
    /// `(H ⊗ G);(F ⊗ K')`.
    pub right: FusionFunctor,
    /// Unitary witness `left ⇒ right`.
    pub witness: NatBlock,
}

pub fn tensorator(f: &FusionFunctor, g: &FusionFunctor) -> Result<Tensorator> {
    let id = FusionFunctor::identity;
    let f_k = tensor_functors(f, &id(g.src()))?;
    let h2_g = tensor_functors(&id(f.dst()), g)?;
    let h_g = tensor_functors(&id(f.src()), g)?;
    let f_k2 = tensor_functors(f, &id(g.dst()))?;
    let left = f_k.then(&h2_g)?;
    let right = h_g.then(&f_k2)?;
    if left.mult() != right.mult() {
        return Err(Error::validation("tensorator multiplicities", 1.0));
    }
    let src = tensor_space(f.src(), g.src());
    let dst = tensor_space(f.dst(), g.dst());
    let mut components = Vec::new();
    for l in 0..f.src().dim() {
        for k in 0..g.src().dim() {
            let p = src.pair_index(l, k);
            let blocks = (0..dst.table.dim())
                .map(|q| {
                    let (l2, k2) = (q / g.dst().dim(), q % g.dst().dim());
                    let (nf, ng) = (f.entry(l, l2), g.entry(k, k2));
                    // left stores (a, c) a-major, right stores (c, a) c-major
                    let left_keys: Vec<(usize, usize)> =
                        (0..nf).flat_map(|a| (0..ng).map(move |c| (a, c))).collect();
                    let right_keys: Vec<(usize, usize)> =
                        (0..ng).flat_map(|c| (0..nf).map(move |a| (a, c))).collect();
                    permutation_between(&left_keys, &right_keys)
                })
                .collect();
            components.push(BlockMorphism::new(
                left.image_of_simple(p),
                right.image_of_simple(p),
                blocks,
            )?);
        }
    }
    let witness = NatBlock::new(left.clone(), right.clone(), components)?;
    Ok(Tensorator {
        left,
        right,
        witness,
    })
}

/// Naturality of the braiding at multiplicity level:
/// `(F ⊗ G);R_{H',K'} = R_{H,K};(G ⊗ F)`.
pub fn braiding_natural(f: &FusionFunctor, g: &FusionFunctor) -> Result<bool> {
    let r_src = braiding(
        &tensor_space(f.src(), g.src()),
        &tensor_space(g.src(), f.src()),
    )?;
    let r_dst = braiding(
        &tensor_space(f.dst(), g.dst()),
        &tensor_space(g.dst(), f.dst()),
    )?;
    let lhs = tensor_functors(f, g)?.then(&r_dst)?;
    let rhs = r_src.then(&tensor_functors(g, f)?)?;
    Ok(lhs.mult() == rhs.mult())
}

/// Involutor checks: `R_{H,K};R_{K,H}` is the identity matrix, and the two
/// whiskered composites `R;(R';R)` and `(R;R');R` both reduce to `R`.
pub fn involutor_holds(h: &Arc<SpaceTable>, k: &Arc<SpaceTable>) -> Result<bool> {
    let hk = tensor_space(h, k);
    let kh = tensor_space(k, h);
    let r = braiding(&hk, &kh)?;
    let r2 = braiding(&kh, &hk)?;
    let rr = r.then(&r2)?;
    let identity = FusionFunctor::identity(&hk.table);
    let left = r.then(&r2.then(&r)?)?;
    let right = rr.then(&r)?;
    Ok(rr.mult() == identity.mult() && left.mult() == r.mult() && right.mult() == r.mult())
}

/// `dim hom(H, hom(H', K))` and `dim hom(H ⊗ H', K)`.
pub fn hom_tensor_dims(
    h: &Arc<SpaceTable>,
    h2: &Arc<SpaceTable>,
    k: &Arc<SpaceTable>,
) -> (usize, usize) {
    let inner = hom_space(h2, k);
    let lhs = hom_space(h, &inner.table).table.dim();
    let rhs = hom_space(&tensor_space(h, h2).table, k).table.dim();
    (lhs, rhs)
}
