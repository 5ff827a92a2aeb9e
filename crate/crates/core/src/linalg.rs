//! Dense complex linear algebra helpers shared by every layer of the crate.
//!
//! Matrices always map source coordinates to target coordinates, so the
//! diagrammatic composite "first `f`, then `g`" is the product `g * f`.

use nalgebra::{Complex, DMatrix, DVector};
use rand::Rng;

pub type C64 = Complex<f64>;
pub type CMat = DMatrix<C64>;
pub type CVec = DVector<C64>;

/// Default absolute tolerance for scalar and matrix equality.
pub const DEFAULT_TOL: f64 = 1e-9;

#[inline]
pub fn c(re: f64, im: f64) -> C64 {
    Complex::new(re, im)
}

#[inline]
pub fn re(x: f64) -> C64 {
    Complex::new(x, 0.0)
}

pub fn identity(n: usize) -> CMat {
    CMat::identity(n, n)
}

pub fn zeros(rows: usize, cols: usize) -> CMat {
    CMat::zeros(rows, cols)
}

/// Largest entry modulus; 0 for empty matrices.
pub fn max_abs(m: &CMat) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Largest entry modulus of a vector.
pub fn vec_max_abs(v: &CVec) -> f64 {
    v.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Largest entrywise deviation between two matrices of the same shape.
/// Shape mismatch counts as infinite deviation.
pub fn deviation(a: &CMat, b: &CMat) -> f64 {
    if a.shape() != b.shape() {
        return f64::INFINITY;
    }
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

pub fn approx_eq(a: &CMat, b: &CMat, tol: f64) -> bool {
    deviation(a, b) <= tol
}

pub fn kron(a: &CMat, b: &CMat) -> CMat {
    a.kronecker(b)
}

/// Kronecker product of a list of matrices, left to right. The empty product
/// is the 1×1 identity.
pub fn kron_all<'a, I: IntoIterator<Item = &'a CMat>>(ms: I) -> CMat {
    ms.into_iter().fold(identity(1), |acc, m| kron(&acc, m))
}

pub fn block_diag(blocks: &[CMat]) -> CMat {
    let rows: usize = blocks.iter().map(|b| b.nrows()).sum();
    let cols: usize = blocks.iter().map(|b| b.ncols()).sum();
    let mut out = zeros(rows, cols);
    let (mut r, mut c0) = (0, 0);
    for b in blocks {
        out.view_mut((r, c0), b.shape()).copy_from(b);
        r += b.nrows();
        c0 += b.ncols();
    }
    out
}

/// Distance of `u` from being unitary: max of `|u†u - 1|` and `|uu† - 1|`.
pub fn unitarity_defect(u: &CMat) -> f64 {
    if !u.is_square() {
        return f64::INFINITY;
    }
    let n = u.nrows();
    let id = identity(n);
    deviation(&(u.adjoint() * u), &id).max(deviation(&(u * u.adjoint()), &id))
}

pub fn is_unitary(u: &CMat, tol: f64) -> bool {
    unitarity_defect(u) <= tol
}

pub fn hermiticity_defect(a: &CMat) -> f64 {
    deviation(a, &a.adjoint())
}

/// Eigen-decomposition of a Hermitian matrix, eigenvalues ascending.
pub fn hermitian_eigen(a: &CMat) -> (Vec<f64>, CMat) {
    let n = a.nrows();
    if n == 0 {
        return (Vec::new(), zeros(0, 0));
    }
    let sym = (a + a.adjoint()) * re(0.5);
    let eig = sym.symmetric_eigen();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[i].total_cmp(&eig.eigenvalues[j]));
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let mut vectors = zeros(n, n);
    for (col, &i) in order.iter().enumerate() {
        vectors.set_column(col, &eig.eigenvectors.column(i));
    }
    (values, vectors)
}

/// Groups ascending eigenvalues into clusters whose consecutive gaps are at
/// most `gap`. Returns index ranges into the sorted eigenvalue list.
pub fn cluster_sorted(values: &[f64], gap: f64) -> Vec<std::ops::Range<usize>> {
    let mut out = Vec::new();
    let mut start = 0;
    for i in 1..=values.len() {
        if i == values.len() || values[i] - values[i - 1] > gap {
            if i > start {
                out.push(start..i);
            }
            start = i;
        }
    }
    out
}

/// Positive square root of a positive semidefinite Hermitian matrix.
pub fn psd_sqrt(a: &CMat) -> CMat {
    let (vals, vecs) = hermitian_eigen(a);
    let d = CMat::from_diagonal(&CVec::from_iterator(
        vals.len(),
        vals.iter().map(|&v| re(v.max(0.0).sqrt())),
    ));
    &vecs * d * vecs.adjoint()
}

pub fn singular_values(a: &CMat) -> Vec<f64> {
    if a.nrows() == 0 || a.ncols() == 0 {
        return Vec::new();
    }
    let mut s: Vec<f64> = a
        .clone()
        .svd(false, false)
        .singular_values
        .iter()
        .copied()
        .collect();
    s.sort_by(|x, y| y.total_cmp(x));
    s
}

/// Numerical rank: singular values above `tol * max(1, σ_max)`.
pub fn rank(a: &CMat, tol: f64) -> usize {
    let s = singular_values(a);
    let cutoff = tol * s.first().copied().unwrap_or(0.0).max(1.0);
    s.iter().filter(|&&v| v > cutoff).count()
}

/// Orthonormal basis (as columns) of the range of `a`.
pub fn range_basis(a: &CMat, tol: f64) -> CMat {
    let m = a.nrows();
    if m == 0 || a.ncols() == 0 {
        return zeros(m, 0);
    }
    // Eigenvectors of a a† with nonzero eigenvalue span the range.
    let gram = a * a.adjoint();
    let (vals, vecs) = hermitian_eigen(&gram);
    let top = vals.last().copied().unwrap_or(0.0).max(1.0);
    let keep: Vec<usize> = (0..m).filter(|&i| vals[i] > tol * top).collect();
    select_columns(&vecs, &keep)
}

/// Orthonormal basis of the orthogonal complement of the range of `a`
/// inside its target space.
pub fn range_complement(a: &CMat, tol: f64) -> CMat {
    let m = a.nrows();
    if a.ncols() == 0 {
        return identity(m);
    }
    if m == 0 {
        return zeros(0, 0);
    }
    let gram = a * a.adjoint();
    let (vals, vecs) = hermitian_eigen(&gram);
    let top = vals.last().copied().unwrap_or(0.0).max(1.0);
    let keep: Vec<usize> = (0..m).filter(|&i| vals[i] <= tol * top).collect();
    select_columns(&vecs, &keep)
}

/// Orthonormal basis of the null space of `a`.
pub fn null_space(a: &CMat, tol: f64) -> CMat {
    let n = a.ncols();
    if a.nrows() == 0 {
        return identity(n);
    }
    if n == 0 {
        return zeros(0, 0);
    }
    let gram = a.adjoint() * a;
    let (vals, vecs) = hermitian_eigen(&gram);
    let top = vals.last().copied().unwrap_or(0.0).max(1.0);
    let keep: Vec<usize> = (0..n).filter(|&i| vals[i] <= tol * top).collect();
    select_columns(&vecs, &keep)
}

pub fn select_columns(m: &CMat, cols: &[usize]) -> CMat {
    let mut out = zeros(m.nrows(), cols.len());
    for (k, &j) in cols.iter().enumerate() {
        out.set_column(k, &m.column(j));
    }
    out
}

/// Gram-Schmidt over a list of vectors, dropping those already in the span.
pub fn orthonormalize(vectors: &[CVec], tol: f64) -> Vec<CVec> {
    let mut basis: Vec<CVec> = Vec::new();
    for v in vectors {
        let mut w = v.clone();
        // two passes for stability
        for _ in 0..2 {
            for b in &basis {
                let proj = b.dotc(&w);
                w -= b * proj;
            }
        }
        let norm = w.norm();
        if norm > tol {
            basis.push(w / re(norm));
        }
    }
    basis
}

pub fn columns_to_matrix(rows: usize, cols: &[CVec]) -> CMat {
    let mut m = zeros(rows, cols.len());
    for (j, v) in cols.iter().enumerate() {
        m.set_column(j, v);
    }
    m
}

/// Column-major flattening used when treating a matrix as a vector.
pub fn vectorize(m: &CMat) -> CVec {
    CVec::from_iterator(m.len(), m.iter().copied())
}

pub fn unvectorize(v: &CVec, rows: usize, cols: usize) -> CMat {
    CMat::from_iterator(rows, cols, v.iter().copied())
}

/// Permutation matrix sending basis vector `j` to basis vector `perm[j]`.
pub fn permutation_matrix(perm: &[usize]) -> CMat {
    let n = perm.len();
    let mut m = zeros(n, n);
    for (j, &i) in perm.iter().enumerate() {
        m[(i, j)] = re(1.0);
    }
    m
}

/// The swap `V ⊗ W → W ⊗ V` for `dim V = a`, `dim W = b`.
pub fn swap_matrix(a: usize, b: usize) -> CMat {
    let mut perm = vec![0; a * b];
    for i in 0..a {
        for j in 0..b {
            perm[i * b + j] = j * a + i;
        }
    }
    permutation_matrix(&perm)
}

/// `swap_matrix(a, b) · m` by permuting rows.
pub fn swap_rows(a: usize, b: usize, m: &CMat) -> CMat {
    let mut out = zeros(m.nrows(), m.ncols());
    for i in 0..a {
        for j in 0..b {
            out.set_row(j * a + i, &m.row(i * b + j));
        }
    }
    out
}

/// `(p ⊗ q) m`, each column of `m` reshaped to a matrix `X` and sent to `p X qᵀ`.
pub fn kron_apply(p: &CMat, q: &CMat, m: &CMat) -> CMat {
    let (pr, pc, qr, qc) = (p.nrows(), p.ncols(), q.nrows(), q.ncols());
    assert_eq!(m.nrows(), pc * qc, "kron_apply: shape mismatch");
    let qt = q.transpose();
    let mut out = zeros(pr * qr, m.ncols());
    for col in 0..m.ncols() {
        let x = CMat::from_fn(pc, qc, |i, j| m[(i * qc + j, col)]);
        let y = p * x * &qt;
        for i in 0..pr {
            for j in 0..qr {
                out[(i * qr + j, col)] = y[(i, j)];
            }
        }
    }
    out
}

pub fn random_matrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> CMat {
    CMat::from_fn(rows, cols, |_, _| {
        c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    })
}

pub fn random_hermitian<R: Rng + ?Sized>(rng: &mut R, n: usize) -> CMat {
    let a = random_matrix(rng, n, n);
    (&a + a.adjoint()) * re(0.5)
}

/// Haar-ish random unitary from the QR decomposition of a random matrix.
pub fn random_unitary<R: Rng + ?Sized>(rng: &mut R, n: usize) -> CMat {
    if n == 0 {
        return zeros(0, 0);
    }
    let a = random_matrix(rng, n, n);
    let qr = a.qr();
    let q = qr.q();
    let r = qr.r();
    // fix column phases so the distribution does not depend on QR conventions
    let mut out = q.clone();
    for j in 0..n {
        let d = r[(j, j)];
        let phase = if d.norm() > 0.0 {
            d / re(d.norm())
        } else {
            re(1.0)
        };
        let col = out.column(j) * phase;
        out.set_column(j, &col);
    }
    out
}

/// A random invertible matrix, kept away from singularity by a diagonal shift.
pub fn random_invertible<R: Rng + ?Sized>(rng: &mut R, n: usize) -> CMat {
    let a = random_matrix(rng, n, n);
    a + identity(n) * re(n as f64 + 1.0)
}

pub fn trace(m: &CMat) -> C64 {
    m.trace()
}

/// Frobenius-style inner product `tr(a† b)`.
pub fn hs_inner(a: &CMat, b: &CMat) -> C64 {
    a.iter().zip(b.iter()).map(|(x, y)| x.conj() * y).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn swap_matches_definition() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let v = random_matrix(&mut rng, 2, 1);
        let w = random_matrix(&mut rng, 3, 1);
        let s = swap_matrix(2, 3);
        assert!(approx_eq(&(s * kron(&v, &w)), &kron(&w, &v), 1e-14));
    }

    #[test]
    fn range_and_complement_partition_space() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let a = random_matrix(&mut rng, 4, 2);
        let r = range_basis(&a, 1e-10);
        let k = range_complement(&a, 1e-10);
        assert_eq!(r.ncols(), 2);
        assert_eq!(k.ncols(), 2);
        let full = &r * r.adjoint() + &k * k.adjoint();
        assert!(approx_eq(&full, &identity(4), 1e-12));
        assert!(max_abs(&(k.adjoint() * &a)) < 1e-12);
    }

    #[test]
    fn random_unitary_is_unitary() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 1..5 {
            assert!(is_unitary(&random_unitary(&mut rng, n), 1e-12));
        }
    }

    #[test]
    fn clusters_split_on_gaps() {
        let v = [0.0, 1e-12, 1.0, 1.0, 3.0];
        let cl = cluster_sorted(&v, 1e-6);
        assert_eq!(cl, vec![0..2, 2..4, 4..5]);
    }

    #[test]
    fn structured_products_match_dense() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let m = random_matrix(&mut rng, 6, 4);
        assert!(approx_eq(
            &swap_rows(2, 3, &m),
            &(swap_matrix(2, 3) * &m),
            0.0
        ));
        let (p, q) = (random_matrix(&mut rng, 3, 2), random_matrix(&mut rng, 2, 3));
        assert!(approx_eq(
            &kron_apply(&p, &q, &m),
            &(kron(&p, &q) * &m),
            1e-14
        ));
    }
}
