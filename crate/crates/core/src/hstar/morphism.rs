//! Block morphisms `f = ⊕_λ f_λ` between skeletal objects and the H*-category
//! operations on them.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::space::{ObjectExpr, SpaceTable};
use crate::error::{Error, Result};
use crate::json::{matrix_to_rows, rows_to_matrix};
use crate::linalg::{self, re, CMat, C64};

/// A morphism `src → dst`, one complex matrix per simple. The block at `λ`
/// has shape `dst.mult(λ) × src.mult(λ)`; blocks of a simple absent from
/// either endpoint are stored as empty matrices.
#[derive(Debug, Clone)]
pub struct BlockMorphism {
    src: ObjectExpr,
    dst: ObjectExpr,
    blocks: Vec<CMat>,
}

impl BlockMorphism {
    pub fn new(src: ObjectExpr, dst: ObjectExpr, blocks: Vec<CMat>) -> Result<Self> {
        if !src.same_space(&dst) {
            return Err(Error::SpaceMismatch);
        }
        let space = src.space();
        if blocks.len() != space.dim() {
            return Err(Error::Invalid(format!(
                "{} blocks over a space with {} simples",
                blocks.len(),
                space.dim()
            )));
        }
        for (i, b) in blocks.iter().enumerate() {
            let expected = (dst.mult()[i], src.mult()[i]);
            if b.shape() != expected {
                return Err(Error::Shape {
                    label: space.label(i).to_string(),
                    expected,
                    got: b.shape(),
                });
            }
        }
        Ok(BlockMorphism { src, dst, blocks })
    }

    /// Builds a morphism from labelled blocks; unnamed simples get zero blocks.
    pub fn from_labeled(
        src: ObjectExpr,
        dst: ObjectExpr,
        entries: Vec<(&str, CMat)>,
    ) -> Result<Self> {
        let mut blocks = zero_blocks(&src, &dst);
        for (label, m) in entries {
            let i = src.space().index_of(label)?;
            blocks[i] = m;
        }
        Self::new(src, dst, blocks)
    }

    pub fn identity(x: &ObjectExpr) -> Self {
        let blocks = x.mult().iter().map(|&n| linalg::identity(n)).collect();
        BlockMorphism {
            src: x.clone(),
            dst: x.clone(),
            blocks,
        }
    }

    pub fn zero(src: &ObjectExpr, dst: &ObjectExpr) -> Result<Self> {
        if !src.same_space(dst) {
            return Err(Error::SpaceMismatch);
        }
        Ok(BlockMorphism {
            blocks: zero_blocks(src, dst),
            src: src.clone(),
            dst: dst.clone(),
        })
    }

    pub fn src(&self) -> &ObjectExpr {
        &self.src
    }

    pub fn dst(&self) -> &ObjectExpr {
        &self.dst
    }

    pub fn space(&self) -> &Arc<SpaceTable> {
        self.src.space()
    }

    pub fn blocks(&self) -> &[CMat] {
        &self.blocks
    }

    pub fn block(&self, label: &str) -> Result<&CMat> {
        Ok(&self.blocks[self.space().index_of(label)?])
    }

    /// Composite "first `self`, then `g`": block `g_λ · f_λ`.
    pub fn compose(&self, g: &BlockMorphism) -> Result<BlockMorphism> {
        if !self.dst.same_space(&g.src) {
            return Err(Error::Composition(
                "morphisms live over different spaces".into(),
            ));
        }
        if self.dst.mult() != g.src.mult() {
            return Err(Error::Composition(format!(
                "target {} of the first morphism differs from source {} of the second",
                self.dst, g.src
            )));
        }
        let blocks = self
            .blocks
            .iter()
            .zip(&g.blocks)
            .map(|(f, g)| g * f)
            .collect();
        Ok(BlockMorphism {
            src: self.src.clone(),
            dst: g.dst.clone(),
            blocks,
        })
    }

    /// The adjoint: endpoints swapped, every block conjugate-transposed.
    pub fn star(&self) -> BlockMorphism {
        BlockMorphism {
            src: self.dst.clone(),
            dst: self.src.clone(),
            blocks: self.blocks.iter().map(|b| b.adjoint()).collect(),
        }
    }

    fn check_parallel(&self, other: &BlockMorphism) -> Result<()> {
        if self.src != other.src || self.dst != other.dst {
            return Err(Error::Endpoints(format!(
                "{} → {} versus {} → {}",
                self.src, self.dst, other.src, other.dst
            )));
        }
        Ok(())
    }

    /// `⟨f, g⟩ = Σ_λ k_λ tr(f_λ* g_λ)`.
    pub fn inner_product(&self, g: &BlockMorphism) -> Result<C64> {
        self.check_parallel(g)?;
        let weights = self.space().weights();
        Ok(self
            .blocks
            .iter()
            .zip(&g.blocks)
            .zip(weights)
            .map(|((a, b), &k)| linalg::hs_inner(a, b) * k)
            .sum())
    }

    pub fn norm(&self) -> f64 {
        self.inner_product(self)
            .map(|z| z.re.max(0.0).sqrt())
            .unwrap_or(0.0)
    }

    pub fn add(&self, g: &BlockMorphism) -> Result<BlockMorphism> {
        self.check_parallel(g)?;
        Ok(BlockMorphism {
            src: self.src.clone(),
            dst: self.dst.clone(),
            blocks: self
                .blocks
                .iter()
                .zip(&g.blocks)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn scale(&self, s: C64) -> BlockMorphism {
        BlockMorphism {
            src: self.src.clone(),
            dst: self.dst.clone(),
            blocks: self.blocks.iter().map(|b| b * s).collect(),
        }
    }

    /// Largest entrywise difference; infinite for non-parallel morphisms.
    pub fn deviation(&self, g: &BlockMorphism) -> f64 {
        if self.check_parallel(g).is_err() {
            return f64::INFINITY;
        }
        self.blocks
            .iter()
            .zip(&g.blocks)
            .map(|(a, b)| linalg::deviation(a, b))
            .fold(0.0, f64::max)
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.blocks.iter().all(|b| linalg::max_abs(b) <= tol)
    }

    /// Every block is injective.
    pub fn is_mono(&self, tol: f64) -> bool {
        self.blocks
            .iter()
            .all(|b| linalg::rank(b, tol) == b.ncols())
    }

    /// Every block is surjective.
    pub fn is_epi(&self, tol: f64) -> bool {
        self.blocks
            .iter()
            .all(|b| linalg::rank(b, tol) == b.nrows())
    }

    pub fn is_iso(&self, tol: f64) -> bool {
        self.src == self.dst && self.is_mono(tol)
    }

    pub fn unitarity_defect(&self) -> f64 {
        if self.src != self.dst {
            return f64::INFINITY;
        }
        self.blocks
            .iter()
            .map(linalg::unitarity_defect)
            .fold(0.0, f64::max)
    }

    /// Cokernel `q: dst → c` with `f q = 0`; `q` restricted to the orthogonal
    /// complement of the range of `f` is unitary.
    pub fn cokernel(&self, tol: f64) -> (ObjectExpr, BlockMorphism) {
        let comps: Vec<CMat> = self
            .blocks
            .iter()
            .map(|b| linalg::range_complement(b, tol))
            .collect();
        let mult = comps.iter().map(|k| k.ncols()).collect();
        let c = ObjectExpr::new(self.space().clone(), mult).expect("multiplicities match space");
        let blocks = comps.iter().map(|k| k.adjoint()).collect();
        let q = BlockMorphism {
            src: self.dst.clone(),
            dst: c.clone(),
            blocks,
        };
        (c, q)
    }

    /// Kernel `j: k → src` with `j f = 0`, obtained as the star of the
    /// cokernel of `f*`.
    pub fn kernel(&self, tol: f64) -> (ObjectExpr, BlockMorphism) {
        let (k, q) = self.star().cokernel(tol);
        (k, q.star())
    }

    /// Polar decomposition `f = a u` (first `a`, then `u`) of an isomorphism:
    /// `a` is the positive square root of `f f*` on the source, `u` is unitary.
    pub fn polar_decompose(&self, tol: f64) -> Result<(BlockMorphism, BlockMorphism)> {
        if self.src != self.dst {
            return Err(Error::Endpoints(format!(
                "polar decomposition needs an automorphism, got {} → {}",
                self.src, self.dst
            )));
        }
        let mut a_blocks = Vec::with_capacity(self.blocks.len());
        let mut u_blocks = Vec::with_capacity(self.blocks.len());
        for (i, f) in self.blocks.iter().enumerate() {
            if f.nrows() == 0 {
                a_blocks.push(f.clone());
                u_blocks.push(f.clone());
                continue;
            }
            let label = self.space().label(i).to_string();
            if linalg::rank(f, tol) < f.ncols() {
                return Err(Error::NotInvertible { label });
            }
            let a = linalg::psd_sqrt(&(f.adjoint() * f));
            let a_inv = a
                .clone()
                .try_inverse()
                .ok_or(Error::NotInvertible { label })?;
            u_blocks.push(f * a_inv);
            a_blocks.push(a);
        }
        let a = BlockMorphism {
            src: self.src.clone(),
            dst: self.src.clone(),
            blocks: a_blocks,
        };
        let u = BlockMorphism {
            src: self.src.clone(),
            dst: self.dst.clone(),
            blocks: u_blocks,
        };
        Ok((a, u))
    }

    /// A left inverse `r` of a monomorphism: `m r = 1`.
    pub fn retraction(&self, tol: f64) -> Result<BlockMorphism> {
        let mut blocks = Vec::with_capacity(self.blocks.len());
        for (i, m) in self.blocks.iter().enumerate() {
            if m.ncols() == 0 {
                blocks.push(linalg::zeros(0, m.nrows()));
                continue;
            }
            let gram = m.adjoint() * m;
            let inv = if linalg::rank(m, tol) == m.ncols() {
                gram.try_inverse()
            } else {
                None
            };
            let inv = inv.ok_or_else(|| Error::NotInvertible {
                label: self.space().label(i).to_string(),
            })?;
            blocks.push(inv * m.adjoint());
        }
        Ok(BlockMorphism {
            src: self.dst.clone(),
            dst: self.src.clone(),
            blocks,
        })
    }

    /// `f ⊕ g : x ⊕ x' → y ⊕ y'`, summands ordered as in [`direct_sum`].
    pub fn direct_sum(&self, g: &BlockMorphism) -> Result<BlockMorphism> {
        let src = direct_sum(&self.src, &g.src)?.object;
        let dst = direct_sum(&self.dst, &g.dst)?.object;
        let blocks = self
            .blocks
            .iter()
            .zip(&g.blocks)
            .map(|(a, b)| linalg::block_diag(&[a.clone(), b.clone()]))
            .collect();
        BlockMorphism::new(src, dst, blocks)
    }
}

fn zero_blocks(src: &ObjectExpr, dst: &ObjectExpr) -> Vec<CMat> {
    src.mult()
        .iter()
        .zip(dst.mult())
        .map(|(&n, &m)| linalg::zeros(m, n))
        .collect()
}

/// A biproduct together with its structural injections and projections.
#[derive(Debug, Clone)]
pub struct DirectSum {
    pub object: ObjectExpr,
    pub injections: Vec<BlockMorphism>,
    pub projections: Vec<BlockMorphism>,
}

/// `x ⊕ y`: inside each block the copies of `x` come first.
pub fn direct_sum(x: &ObjectExpr, y: &ObjectExpr) -> Result<DirectSum> {
    direct_sum_many(&[x.clone(), y.clone()])
}

/// Biproduct of a list of objects over one space.
pub fn direct_sum_many(summands: &[ObjectExpr]) -> Result<DirectSum> {
    let first = summands
        .first()
        .ok_or_else(|| Error::Invalid("empty direct sum".into()))?;
    if summands.iter().any(|s| !s.same_space(first)) {
        return Err(Error::SpaceMismatch);
    }
    let space = first.space().clone();
    let n = space.dim();
    let mult: Vec<usize> = (0..n)
        .map(|i| summands.iter().map(|s| s.mult()[i]).sum())
        .collect();
    let object = ObjectExpr::new(space, mult.clone())?;
    let mut offsets = vec![0usize; n];
    let mut injections = Vec::with_capacity(summands.len());
    let mut projections = Vec::with_capacity(summands.len());
    for s in summands {
        let blocks: Vec<CMat> = (0..n)
            .map(|i| {
                let mut b = linalg::zeros(mult[i], s.mult()[i]);
                for r in 0..s.mult()[i] {
                    b[(offsets[i] + r, r)] = re(1.0);
                }
                b
            })
            .collect();
        for i in 0..n {
            offsets[i] += s.mult()[i];
        }
        let inj = BlockMorphism {
            src: s.clone(),
            dst: object.clone(),
            blocks,
        };
        projections.push(inj.star());
        injections.push(inj);
    }
    Ok(DirectSum {
        object,
        injections,
        projections,
    })
}

/// Tensoring with `ℂⁿ`: the direct sum of `n` copies of `x`.
pub fn scalar_tensor(x: &ObjectExpr, n: usize) -> Result<DirectSum> {
    if n == 0 {
        return Ok(DirectSum {
            object: ObjectExpr::zero(x.space().clone()),
            injections: Vec::new(),
            projections: Vec::new(),
        });
    }
    direct_sum_many(&vec![x.clone(); n])
}

#[derive(Serialize, Deserialize)]
struct RawObject {
    space: SpaceTable,
    mult: BTreeMap<String, usize>,
}

#[derive(Serialize, Deserialize)]
struct RawMorphism {
    src: RawObject,
    dst: RawObject,
    blocks: BTreeMap<String, Vec<Vec<[f64; 2]>>>,
}

fn raw_object(x: &ObjectExpr) -> RawObject {
    RawObject {
        space: (**x.space()).clone(),
        mult: x
            .mult()
            .iter()
            .enumerate()
            .filter(|(_, &n)| n > 0)
            .map(|(i, &n)| (x.space().label(i).to_string(), n))
            .collect(),
    }
}

fn object_from_raw(raw: RawObject, space: Option<&Arc<SpaceTable>>) -> Result<ObjectExpr> {
    let space = match space {
        Some(s) if **s == raw.space => s.clone(),
        _ => Arc::new(raw.space),
    };
    let entries: Vec<(&str, usize)> = raw.mult.iter().map(|(k, &v)| (k.as_str(), v)).collect();
    ObjectExpr::from_labels(space, &entries)
}

impl Serialize for ObjectExpr {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        raw_object(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for ObjectExpr {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawObject::deserialize(d)?;
        object_from_raw(raw, None).map_err(serde::de::Error::custom)
    }
}

impl Serialize for BlockMorphism {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let space = self.space();
        let blocks = self
            .blocks
            .iter()
            .enumerate()
            .filter(|(_, b)| !b.is_empty())
            .map(|(i, b)| (space.label(i).to_string(), matrix_to_rows(b)))
            .collect();
        RawMorphism {
            src: raw_object(&self.src),
            dst: raw_object(&self.dst),
            blocks,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BlockMorphism {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = RawMorphism::deserialize(d)?;
        let src = object_from_raw(raw.src, None).map_err(D::Error::custom)?;
        let dst = object_from_raw(raw.dst, Some(src.space())).map_err(D::Error::custom)?;
        let mut entries = Vec::new();
        for (label, rows) in &raw.blocks {
            let i = src.space().index_of(label).map_err(D::Error::custom)?;
            let m = rows_to_matrix(rows, src.mult()[i])
                .ok_or_else(|| D::Error::custom(format!("ragged block `{label}`")))?;
            entries.push((label.as_str(), m));
        }
        BlockMorphism::from_labeled(src, dst, entries).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{c, random_invertible, random_matrix};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn one_simple(k: f64) -> Arc<SpaceTable> {
        SpaceTable::new(vec!["e".into()], vec![k])
            .unwrap()
            .into_arc()
    }

    fn scalar(space: &Arc<SpaceTable>, z: C64) -> BlockMorphism {
        let x = ObjectExpr::simple(space.clone(), 0);
        BlockMorphism::new(x.clone(), x, vec![CMat::from_element(1, 1, z)]).unwrap()
    }

    #[test]
    fn scalar_composition() {
        let s = one_simple(1.0);
        let h = scalar(&s, re(2.0)).compose(&scalar(&s, re(3.0))).unwrap();
        assert_eq!(h.blocks()[0][(0, 0)], re(6.0));
    }

    #[test]
    fn identity_is_neutral() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let s = SpaceTable::numbered(&[1.0, 2.0]).unwrap().into_arc();
        let x = ObjectExpr::new(s.clone(), vec![2, 1]).unwrap();
        let y = ObjectExpr::new(s, vec![1, 3]).unwrap();
        let g = BlockMorphism::new(
            x.clone(),
            y,
            vec![random_matrix(&mut rng, 1, 2), random_matrix(&mut rng, 3, 1)],
        )
        .unwrap();
        let h = BlockMorphism::identity(&x).compose(&g).unwrap();
        assert_eq!(h.deviation(&g), 0.0);
    }

    #[test]
    fn composition_matches_full_matrix_product() {
        // brute force: embed blocks into one block-diagonal matrix
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let s = SpaceTable::numbered(&[1.0, 1.5]).unwrap().into_arc();
        let dims = [vec![2, 1], vec![1, 2], vec![3, 2]];
        let obj: Vec<ObjectExpr> = dims
            .iter()
            .map(|m| ObjectExpr::new(s.clone(), m.clone()).unwrap())
            .collect();
        let f = BlockMorphism::new(
            obj[0].clone(),
            obj[1].clone(),
            vec![random_matrix(&mut rng, 1, 2), random_matrix(&mut rng, 2, 1)],
        )
        .unwrap();
        let g = BlockMorphism::new(
            obj[1].clone(),
            obj[2].clone(),
            vec![random_matrix(&mut rng, 3, 1), random_matrix(&mut rng, 2, 2)],
        )
        .unwrap();
        let fg = f.compose(&g).unwrap();
        let full = linalg::block_diag(g.blocks()) * linalg::block_diag(f.blocks());
        assert!(linalg::deviation(&full, &linalg::block_diag(fg.blocks())) < 1e-13);
    }

    #[test]
    fn star_conjugates() {
        let s = one_simple(1.0);
        let f = scalar(&s, c(0.0, 1.0)).star();
        assert_eq!(f.blocks()[0][(0, 0)], c(0.0, -1.0));
    }

    #[test]
    fn inner_product_uses_weights() {
        let s = one_simple(2.0);
        let one = BlockMorphism::identity(&ObjectExpr::simple(s, 0));
        assert_eq!(one.inner_product(&one).unwrap(), re(2.0));
    }

    #[test]
    fn disjoint_blocks_are_orthogonal() {
        let s = SpaceTable::numbered(&[1.0, 1.0]).unwrap().into_arc();
        let x = ObjectExpr::new(s, vec![1, 1]).unwrap();
        let f = BlockMorphism::from_labeled(
            x.clone(),
            x.clone(),
            vec![("e0", CMat::from_element(1, 1, re(1.0)))],
        )
        .unwrap();
        let g = BlockMorphism::from_labeled(
            x.clone(),
            x,
            vec![("e1", CMat::from_element(1, 1, re(4.0)))],
        )
        .unwrap();
        assert_eq!(f.inner_product(&g).unwrap(), re(0.0));
    }

    #[test]
    fn cokernel_of_column_inclusion() {
        let s = one_simple(1.0);
        let e = ObjectExpr::simple(s.clone(), 0);
        let ee = ObjectExpr::new(s, vec![2]).unwrap();
        let f = BlockMorphism::new(
            e,
            ee,
            vec![CMat::from_column_slice(2, 1, &[re(1.0), re(0.0)])],
        )
        .unwrap();
        let (c, q) = f.cokernel(1e-10);
        assert_eq!(c.mult(), &[1]);
        // orthogonal complement of span{(1,0)} is spanned by (0,1), up to phase
        let b = &q.blocks()[0];
        assert!(b[(0, 0)].norm() < 1e-12);
        assert!((b[(0, 1)].norm() - 1.0).abs() < 1e-12);
        assert!(f.compose(&q).unwrap().is_zero(1e-12));
    }

    #[test]
    fn cokernel_of_zero_and_of_epi() {
        let s = SpaceTable::numbered(&[1.0, 3.0]).unwrap().into_arc();
        let x = ObjectExpr::new(s.clone(), vec![1, 2]).unwrap();
        let y = ObjectExpr::new(s, vec![2, 1]).unwrap();
        let (c, q) = BlockMorphism::zero(&x, &y).unwrap().cokernel(1e-10);
        assert_eq!(c, y);
        assert!(q.unitarity_defect() < 1e-12);
        let (c, _) = BlockMorphism::identity(&x).cokernel(1e-10);
        assert!(c.is_zero());
    }

    #[test]
    fn polar_examples() {
        let s = one_simple(1.0);
        let (a, u) = scalar(&s, re(2.0)).polar_decompose(1e-10).unwrap();
        assert!((a.blocks()[0][(0, 0)] - re(2.0)).norm() < 1e-12);
        assert!((u.blocks()[0][(0, 0)] - re(1.0)).norm() < 1e-12);

        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let x = ObjectExpr::new(s.clone(), vec![3]).unwrap();
        let f =
            BlockMorphism::new(x.clone(), x.clone(), vec![random_invertible(&mut rng, 3)]).unwrap();
        let (a, u) = f.polar_decompose(1e-10).unwrap();
        assert!(a.compose(&u).unwrap().deviation(&f) < 1e-9);
        assert!(u.unitarity_defect() < 1e-9);
        assert!(a.deviation(&a.star()) < 1e-9);
        // eigendecomposition oracle: a² = f* f blockwise
        let f0 = &f.blocks()[0];
        assert!(linalg::deviation(&(&a.blocks()[0] * &a.blocks()[0]), &(f0.adjoint() * f0)) < 1e-9);

        let (a, _) = u.polar_decompose(1e-10).unwrap();
        assert!(a.deviation(&BlockMorphism::identity(&x)) < 1e-9);
    }

    #[test]
    fn polar_names_singular_label() {
        let s = SpaceTable::unweighted(["good", "bad"]).unwrap().into_arc();
        let x = ObjectExpr::new(s, vec![1, 1]).unwrap();
        let f = BlockMorphism::from_labeled(
            x.clone(),
            x,
            vec![("good", CMat::from_element(1, 1, re(1.0)))],
        )
        .unwrap();
        assert_eq!(
            f.polar_decompose(1e-10).unwrap_err(),
            Error::NotInvertible {
                label: "bad".into()
            }
        );
    }

    #[test]
    fn biproduct_identities() {
        let s = one_simple(1.0);
        let e = ObjectExpr::simple(s.clone(), 0);
        let ds = direct_sum(&e, &e).unwrap();
        assert_eq!(ds.object.mult(), &[2]);
        let sum = ds.projections[0]
            .compose(&ds.injections[0])
            .unwrap()
            .add(&ds.projections[1].compose(&ds.injections[1]).unwrap())
            .unwrap();
        assert!(sum.deviation(&BlockMorphism::identity(&ds.object)) < 1e-15);
        assert!(
            ds.injections[0]
                .compose(&ds.projections[0])
                .unwrap()
                .deviation(&BlockMorphism::identity(&e))
                < 1e-15
        );
        assert!(ds.injections[0]
            .compose(&ds.projections[1])
            .unwrap()
            .is_zero(0.0));

        let z = ObjectExpr::zero(s.clone());
        let ds = direct_sum(&e, &z).unwrap();
        assert_eq!(ds.object, e);
        assert!(ds.injections[0].unitarity_defect() < 1e-15);

        let x = ObjectExpr::new(s, vec![2]).unwrap();
        let t = scalar_tensor(&x, 3).unwrap();
        assert_eq!(t.object.mult(), &[6]);
        assert_eq!(t.injections.len(), 3);
    }

    #[test]
    fn json_roundtrip_omits_empty_blocks() {
        let s = SpaceTable::unweighted(["a", "b"]).unwrap().into_arc();
        let x = ObjectExpr::new(s, vec![2, 0]).unwrap();
        let f = BlockMorphism::identity(&x).scale(c(0.5, -1.0));
        let text = serde_json::to_string(&f).unwrap();
        assert!(!text.contains("\"b\":[["));
        let back: BlockMorphism = serde_json::from_str(&text).unwrap();
        assert_eq!(back.deviation(&f), 0.0);
    }
}
