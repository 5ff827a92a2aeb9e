//! JSON encodings for complex scalars and matrices: a complex number is a
//! `[re, im]` pair and a matrix is a list of rows.

use nalgebra::Complex;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::linalg::{CMat, C64};

pub fn complex_to_pair(z: C64) -> [f64; 2] {
    [z.re, z.im]
}

pub fn pair_to_complex(p: [f64; 2]) -> C64 {
    Complex::new(p[0], p[1])
}

pub fn matrix_to_rows(m: &CMat) -> Vec<Vec<[f64; 2]>> {
    (0..m.nrows())
        .map(|i| (0..m.ncols()).map(|j| complex_to_pair(m[(i, j)])).collect())
        .collect()
}

/// Rebuilds a matrix from rows. `cols` is used when there are no rows.
pub fn rows_to_matrix(rows: &[Vec<[f64; 2]>], cols: usize) -> Option<CMat> {
    let ncols = rows.first().map_or(cols, |r| r.len());
    if rows.iter().any(|r| r.len() != ncols) {
        return None;
    }
    Some(CMat::from_fn(rows.len(), ncols, |i, j| {
        pair_to_complex(rows[i][j])
    }))
}

/// Serde adapter for a single complex matrix field.
pub mod cmat {
    use super::*;

    pub fn serialize<S: Serializer>(m: &CMat, s: S) -> Result<S::Ok, S::Error> {
        matrix_to_rows(m).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<CMat, D::Error> {
        let rows = Vec::<Vec<[f64; 2]>>::deserialize(d)?;
        rows_to_matrix(&rows, 0).ok_or_else(|| serde::de::Error::custom("ragged matrix rows"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::c;

    #[test]
    fn matrix_roundtrip() {
        let m = CMat::from_row_slice(2, 2, &[c(1.0, 2.0), c(0.0, -1.0), c(3.0, 0.0), c(0.5, 0.5)]);
        let back = rows_to_matrix(&matrix_to_rows(&m), 0).unwrap();
        assert_eq!(m, back);
    }
}
