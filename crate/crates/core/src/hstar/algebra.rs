//! Concrete finite-dimensional H*-algebras given by structure constants in an
//! orthonormal basis, and their Ambrose decomposition into weighted matrix
//! algebras `L²(ℂ^d, k)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::space::ObjectExpr;
use crate::error::{Error, Result};
use crate::json::{complex_to_pair, pair_to_complex};
use crate::linalg::{self, re, CMat, CVec, C64};

/// An H*-algebra in an orthonormal basis `e_0 … e_{n-1}`.
///
/// * `table[i][j][k]` is the coefficient of `e_k` in `e_i e_j`;
/// * `unit` holds the coordinates of `1`;
/// * `star` is the matrix `S` with `e_i* = Σ_m S[m][i] e_m`, extended
///   antilinearly, so `a* = S · conj(a)` on coordinate vectors.
#[derive(Debug, Clone)]
pub struct HStarAlgebraData {
    dim: usize,
    table: Vec<C64>,
    unit: CVec,
    star: CMat,
}

/// One minimal two-sided ideal `≅ L²(ℂ^d, k)`.
#[derive(Debug, Clone)]
pub struct AmbroseBlock {
    /// Matrix size `d`.
    pub size: usize,
    /// Weight `k = ⟨p, p⟩ / d`.
    pub weight: f64,
    /// Coordinates of the central projection `p`.
    pub central_projection: CVec,
    /// Isometry `n × d²` whose column `r·d + s` holds the coordinates of the
    /// normalized matrix unit `E_rs / √k`.
    pub embedding: CMat,
}

#[derive(Debug, Clone)]
pub struct AmbroseDecomposition {
    pub blocks: Vec<AmbroseBlock>,
    /// Largest deviation between the original structure constants (product
    /// and star) and those transported from the block model.
    pub recomposition_defect: f64,
}

impl AmbroseDecomposition {
    /// `(size, weight)` per ideal, sorted by size then weight.
    pub fn sizes_and_weights(&self) -> Vec<(usize, f64)> {
        let mut v: Vec<(usize, f64)> = self.blocks.iter().map(|b| (b.size, b.weight)).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.total_cmp(&b.1)));
        v
    }
}

impl HStarAlgebraData {
    pub fn new(dim: usize, table: Vec<C64>, unit: CVec, star: CMat) -> Result<Self> {
        if table.len() != dim * dim * dim || unit.len() != dim || star.shape() != (dim, dim) {
            return Err(Error::Invalid(format!(
                "structure data does not match dimension {dim}"
            )));
        }
        Ok(HStarAlgebraData {
            dim,
            table,
            unit,
            star,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &CVec {
        &self.unit
    }

    pub fn star_matrix(&self) -> &CMat {
        &self.star
    }

    #[inline]
    pub fn constant(&self, i: usize, j: usize, k: usize) -> C64 {
        self.table[(i * self.dim + j) * self.dim + k]
    }

    pub fn mul(&self, a: &CVec, b: &CVec) -> CVec {
        let n = self.dim;
        let mut out = CVec::zeros(n);
        for i in 0..n {
            if a[i] == re(0.0) {
                continue;
            }
            for j in 0..n {
                let ab = a[i] * b[j];
                if ab == re(0.0) {
                    continue;
                }
                for k in 0..n {
                    out[k] += ab * self.constant(i, j, k);
                }
            }
        }
        out
    }

    pub fn star(&self, a: &CVec) -> CVec {
        &self.star * a.map(|z| z.conj())
    }

    /// Matrix of `x ↦ a x`.
    pub fn left_mult(&self, a: &CVec) -> CMat {
        let n = self.dim;
        let mut m = linalg::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    m[(k, j)] += a[i] * self.constant(i, j, k);
                }
            }
        }
        m
    }

    fn basis(&self, i: usize) -> CVec {
        let mut v = CVec::zeros(self.dim);
        v[i] = re(1.0);
        v
    }

    /// Checks associativity, unit laws, the star involution and both
    /// H*-identities on basis elements. Returns the largest violation.
    pub fn validate(&self, tol: f64) -> Result<f64> {
        let n = self.dim;
        let mut worst = 0.0f64;
        let mut check = |name: &str, v: f64| -> Result<()> {
            worst = worst.max(v);
            if v > tol {
                return Err(Error::validation(name, v));
            }
            Ok(())
        };

        // (e_i e_j) e_l = e_i (e_j e_l)
        let mut assoc: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                let eij = self.mul(&self.basis(i), &self.basis(j));
                for l in 0..n {
                    let lhs = self.mul(&eij, &self.basis(l));
                    let rhs = self.mul(&self.basis(i), &self.mul(&self.basis(j), &self.basis(l)));
                    assoc = assoc.max(linalg::vec_max_abs(&(lhs - rhs)));
                }
            }
        }
        check("associativity", assoc)?;

        let mut unit: f64 = 0.0;
        for i in 0..n {
            let e = self.basis(i);
            unit = unit
                .max(linalg::vec_max_abs(&(self.mul(&self.unit, &e) - &e)))
                .max(linalg::vec_max_abs(&(self.mul(&e, &self.unit) - &e)));
        }
        check("unit law", unit)?;

        // star is an antilinear involution: S conj(S) = 1
        let inv = linalg::deviation(
            &(&self.star * self.star.map(|z| z.conj())),
            &linalg::identity(n),
        );
        check("star involution", inv)?;

        // star reverses products
        let mut anti: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                let (a, b) = (self.basis(i), self.basis(j));
                let lhs = self.star(&self.mul(&a, &b));
                let rhs = self.mul(&self.star(&b), &self.star(&a));
                anti = anti.max(linalg::vec_max_abs(&(lhs - rhs)));
            }
        }
        check("star anti-multiplicativity", anti)?;

        // ⟨e_i e_j, e_k⟩ = ⟨e_j, e_i* e_k⟩ = ⟨e_i, e_k e_j*⟩
        let mut h1: f64 = 0.0;
        let mut h2: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let lhs = self.constant(i, j, k).conj();
                    let mut r1 = re(0.0);
                    let mut r2 = re(0.0);
                    for m in 0..n {
                        r1 += self.star[(m, i)] * self.constant(m, k, j);
                        r2 += self.star[(m, j)] * self.constant(k, m, i);
                    }
                    h1 = h1.max((lhs - r1).norm());
                    h2 = h2.max((lhs - r2).norm());
                }
            }
        }
        check("<ab,c> = <b,a*c>", h1)?;
        check("<ab,c> = <a,cb*>", h2)?;
        Ok(worst)
    }

    /// Orthonormal basis (columns) of the center.
    pub fn center(&self, tol: f64) -> CMat {
        let n = self.dim;
        let mut m = linalg::zeros(n * n, n);
        for j in 0..n {
            for k in 0..n {
                for i in 0..n {
                    m[(j * n + k, i)] = self.constant(i, j, k) - self.constant(j, i, k);
                }
            }
        }
        linalg::null_space(&m, tol)
    }

    /// The weighted block model `⊕_i L²(ℂ^{d_i}, k_i)` in the basis of
    /// normalized matrix units `E_rs / √k`.
    pub fn block_model(blocks: &[(usize, f64)]) -> Result<Self> {
        if blocks.iter().any(|&(d, k)| d == 0 || !(k > 0.0)) {
            return Err(Error::Invalid(
                "block sizes and weights must be positive".into(),
            ));
        }
        let n: usize = blocks.iter().map(|&(d, _)| d * d).sum();
        let mut table = vec![re(0.0); n * n * n];
        let mut unit = CVec::zeros(n);
        let mut star = linalg::zeros(n, n);
        let mut offset = 0;
        for &(d, k) in blocks {
            let idx = |r: usize, s: usize| offset + r * d + s;
            let scale = 1.0 / k.sqrt();
            for r in 0..d {
                unit[idx(r, r)] = re(k.sqrt());
                for s in 0..d {
                    star[(idx(s, r), idx(r, s))] = re(1.0);
                    for u in 0..d {
                        // (E_rs/√k)(E_su/√k) = (E_ru/√k)/√k
                        table[(idx(r, s) * n + idx(s, u)) * n + idx(r, u)] = re(scale);
                    }
                }
            }
            offset += d * d;
        }
        Self::new(n, table, unit, star)
    }

    /// `end(x)` of a skeletal object, with inner product `Σ k_λ tr(f* g)`.
    pub fn endomorphisms(x: &ObjectExpr) -> Result<Self> {
        let blocks: Vec<(usize, f64)> = x
            .mult()
            .iter()
            .zip(x.space().weights())
            .filter(|(&m, _)| m > 0)
            .map(|(&m, &k)| (m, k))
            .collect();
        if blocks.is_empty() {
            return Err(Error::Invalid("endomorphisms of the zero object".into()));
        }
        Self::block_model(&blocks)
    }

    /// The same algebra presented in the orthonormal basis `g_j = Σ_m W[m][j] e_m`.
    pub fn change_basis(&self, w: &CMat) -> Result<Self> {
        let n = self.dim;
        if w.shape() != (n, n) || linalg::unitarity_defect(w) > 1e-10 {
            return Err(Error::Invalid("basis change must be unitary".into()));
        }
        let wc = w.map(|z| z.conj());
        // T'[i][j][k] = Σ W[a][i] W[b][j] T[a][b][c] conj(W[c][k])
        let mut tmp = vec![re(0.0); n * n * n];
        for a in 0..n {
            for b in 0..n {
                for cc in 0..n {
                    let t = self.constant(a, b, cc);
                    if t == re(0.0) {
                        continue;
                    }
                    for k in 0..n {
                        tmp[(a * n + b) * n + k] += t * wc[(cc, k)];
                    }
                }
            }
        }
        let mut tmp2 = vec![re(0.0); n * n * n];
        for a in 0..n {
            for b in 0..n {
                for k in 0..n {
                    let t = tmp[(a * n + b) * n + k];
                    if t == re(0.0) {
                        continue;
                    }
                    for j in 0..n {
                        tmp2[(a * n + j) * n + k] += w[(b, j)] * t;
                    }
                }
            }
        }
        let mut table = vec![re(0.0); n * n * n];
        for a in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let t = tmp2[(a * n + j) * n + k];
                    if t == re(0.0) {
                        continue;
                    }
                    for i in 0..n {
                        table[(i * n + j) * n + k] += w[(a, i)] * t;
                    }
                }
            }
        }
        let unit = w.adjoint() * &self.unit;
        let star = w.adjoint() * &self.star * &wc;
        Self::new(n, table, unit, star)
    }

    /// Ambrose decomposition into minimal two-sided ideals.
    pub fn ambrose_decompose(&self, tol: f64, seed: u64) -> Result<AmbroseDecomposition> {
        self.validate(tol.max(1e-9))?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let center = self.center(1e-9);
        let nc = center.ncols();
        if nc == 0 {
            return Err(Error::Numeric("algebra has trivial center basis".into()));
        }
        for _attempt in 0..20 {
            let coeffs = CVec::from_fn(nc, |_, _| {
                linalg::c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
            });
            let z = &center * coeffs;
            let h = (&z + self.star(&z)) * re(0.5);
            let lh = self.left_mult(&h);
            let (vals, vecs) = linalg::hermitian_eigen(&lh);
            let clusters = linalg::cluster_sorted(&vals, 1e-6);
            if clusters.len() != nc {
                continue;
            }
            let mut blocks = Vec::with_capacity(nc);
            let mut ok = true;
            for range in clusters {
                let cols: Vec<usize> = range.collect();
                let basis = linalg::select_columns(&vecs, &cols);
                match self.decompose_ideal(&basis, &mut rng) {
                    Some(b) => blocks.push(b),
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if !ok {
                continue;
            }
            let recomposition_defect = self.recomposition_defect(&blocks);
            if recomposition_defect > tol.max(1e-7) {
                return Err(Error::validation(
                    "Ambrose recomposition",
                    recomposition_defect,
                ));
            }
            return Ok(AmbroseDecomposition {
                blocks,
                recomposition_defect,
            });
        }
        Err(Error::Numeric(
            "could not separate minimal ideals after 20 random central elements".into(),
        ))
    }

    /// Matrix units of one minimal ideal spanned by the orthonormal columns of `basis`.
    fn decompose_ideal(&self, basis: &CMat, rng: &mut ChaCha8Rng) -> Option<AmbroseBlock> {
        let n_i = basis.ncols();
        let d = (n_i as f64).sqrt().round() as usize;
        if d * d != n_i {
            return None;
        }
        let p = basis * (basis.adjoint() * &self.unit);
        let weight = p.norm_squared() / d as f64;
        if d == 1 {
            let unit_vec = &p / re(p.norm());
            return Some(AmbroseBlock {
                size: 1,
                weight,
                central_projection: p,
                embedding: CMat::from_column_slice(self.dim, 1, unit_vec.as_slice()),
            });
        }
        for _ in 0..10 {
            // random self-adjoint element of the ideal
            let y = basis
                * CVec::from_fn(n_i, |_, _| {
                    linalg::c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
                });
            let a = (&y + self.star(&y)) * re(0.5);
            let la = basis.adjoint() * self.left_mult(&a) * basis;
            let (vals, _) = linalg::hermitian_eigen(&la);
            let clusters = linalg::cluster_sorted(&vals, 1e-6);
            if clusters.len() != d || clusters.iter().any(|r| r.len() != d) {
                continue;
            }
            let lambdas: Vec<f64> = clusters
                .iter()
                .map(|r| vals[r.clone()].iter().sum::<f64>() / d as f64)
                .collect();
            // spectral projections q_r = Π_{s≠r} (a − λ_s p)/(λ_r − λ_s)
            let q: Vec<CVec> = (0..d)
                .map(|r| {
                    let mut acc = p.clone();
                    for s in 0..d {
                        if s != r {
                            let factor = (&a - &p * re(lambdas[s])) / re(lambdas[r] - lambdas[s]);
                            acc = self.mul(&acc, &factor);
                        }
                    }
                    acc
                })
                .collect();
            // partial isometries e_{r0} ∈ q_r A q_0 with e_{r0}* e_{r0} = q_0
            let mut e_r0 = vec![q[0].clone()];
            let mut good = true;
            for qr in q.iter().skip(1) {
                let mut best: Option<(f64, CVec)> = None;
                for col in 0..n_i {
                    let cand = self.mul(&self.mul(qr, &basis.column(col).into_owned()), &q[0]);
                    let nrm = cand.norm();
                    if best.as_ref().is_none_or(|(b, _)| nrm > *b) {
                        best = Some((nrm, cand));
                    }
                }
                let (nrm, x) = best.expect("ideal is nonempty");
                if nrm < 1e-8 {
                    good = false;
                    break;
                }
                let xx = self.mul(&self.star(&x), &x);
                // xx = c q_0 with c > 0
                let cval = xx.dotc(&q[0]).re / q[0].norm_squared();
                if !(cval > 0.0) {
                    good = false;
                    break;
                }
                e_r0.push(x / re(cval.sqrt()));
            }
            if !good {
                continue;
            }
            let mut embedding = linalg::zeros(self.dim, d * d);
            let scale = re(1.0 / weight.sqrt());
            for r in 0..d {
                for s in 0..d {
                    let ers = self.mul(&e_r0[r], &self.star(&e_r0[s]));
                    embedding.set_column(r * d + s, &(ers * scale));
                }
            }
            return Some(AmbroseBlock {
                size: d,
                weight,
                central_projection: p,
                embedding,
            });
        }
        None
    }

    fn recomposition_defect(&self, blocks: &[AmbroseBlock]) -> f64 {
        let model = match Self::block_model(
            &blocks
                .iter()
                .map(|b| (b.size, b.weight))
                .collect::<Vec<_>>(),
        ) {
            Ok(m) => m,
            Err(_) => return f64::INFINITY,
        };
        let u = CMat::from_columns(
            &blocks
                .iter()
                .flat_map(|b| {
                    b.embedding
                        .column_iter()
                        .map(|c| c.into_owned())
                        .collect::<Vec<_>>()
                })
                .collect::<Vec<_>>(),
        );
        if u.shape() != (self.dim, self.dim) {
            return f64::INFINITY;
        }
        let mut worst = linalg::unitarity_defect(&u);
        match model.change_basis(&u.adjoint()) {
            Ok(back) => {
                for (a, b) in back.table.iter().zip(&self.table) {
                    worst = worst.max((a - b).norm());
                }
                worst = worst.max(linalg::deviation(&back.star, &self.star));
                worst = worst.max(linalg::vec_max_abs(&(back.unit - &self.unit)));
            }
            Err(_) => return f64::INFINITY,
        }
        worst
    }
}

#[derive(Serialize, Deserialize)]
struct RawAlgebra {
    dim: usize,
    table: Vec<Vec<Vec<[f64; 2]>>>,
    unit: Vec<[f64; 2]>,
    star: Vec<Vec<[f64; 2]>>,
}

impl Serialize for HStarAlgebraData {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let n = self.dim;
        RawAlgebra {
            dim: n,
            table: (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            (0..n)
                                .map(|k| complex_to_pair(self.constant(i, j, k)))
                                .collect()
                        })
                        .collect()
                })
                .collect(),
            unit: self.unit.iter().map(|&z| complex_to_pair(z)).collect(),
            star: crate::json::matrix_to_rows(&self.star),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for HStarAlgebraData {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = RawAlgebra::deserialize(d)?;
        let n = raw.dim;
        let mut table = Vec::with_capacity(n * n * n);
        for plane in &raw.table {
            for row in plane {
                table.extend(row.iter().map(|&p| pair_to_complex(p)));
            }
        }
        let unit =
            CVec::from_iterator(raw.unit.len(), raw.unit.iter().map(|&p| pair_to_complex(p)));
        let star = crate::json::rows_to_matrix(&raw.star, n)
            .ok_or_else(|| D::Error::custom("ragged star matrix"))?;
        HStarAlgebraData::new(n, table, unit, star).map_err(D::Error::custom)
    }
}
