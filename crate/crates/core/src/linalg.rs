//! Dense Gaussian elimination over `F_m`.

use crate::field::Field;

/// Reduced row echelon form in place; returns the pivot columns.
pub(crate) fn rref(f: &Field, rows: &mut [Vec<u8>]) -> Vec<usize> {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, p);
        let s = f.inv(rows[r][c]);
        for x in rows[r].iter_mut() {
            *x = f.mul(*x, s);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let t = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = f.sub(*x, f.mul(t, y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub(crate) fn rank(f: &Field, rows: &[Vec<u8>]) -> usize {
    rref(f, &mut rows.to_vec()).len()
}

/// Inverse of a square matrix, or `None` when singular.
pub(crate) fn inverse(f: &Field, mat: &[Vec<u8>]) -> Option<Vec<Vec<u8>>> {
    let n = mat.len();
    let mut aug: Vec<Vec<u8>> = mat
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| u8::from(i == j)));
            r
        })
        .collect();
    let pivots = rref(f, &mut aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub(crate) fn mat_mul(f: &Field, x: &[Vec<u8>], y: &[Vec<u8>]) -> Vec<Vec<u8>> {
    let cols = y.first().map_or(0, |r| r.len());
    x.iter()
        .map(|row| {
            (0..cols)
                .map(|j| row.iter().zip(y).fold(0, |acc, (&a, yr)| f.add(acc, f.mul(a, yr[j]))))
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_roundtrip() {
        for m in [2u8, 3, 4, 5] {
            let f = Field::standard(m).unwrap();
            let a = vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1 % m + (m > 2) as u8]];
            if let Some(inv) = inverse(f, &a) {
                let id = mat_mul(f, &a, &inv);
                for (i, row) in id.iter().enumerate() {
                    for (j, &x) in row.iter().enumerate() {
                        assert_eq!(x, u8::from(i == j));
                    }
                }
            } else {
                assert!(rank(f, &a) < 3);
            }
        }
        let f2 = Field::standard(2).unwrap();
        assert_eq!(rank(f2, &[vec![1, 1], vec![1, 1]]), 1);
        assert!(inverse(f2, &[vec![1, 1], vec![1, 1]]).is_none());
    }
}
