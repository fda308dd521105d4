//! Dense matrices over GF(q) and Gaussian elimination.

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::{Fe, Field};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Fe>,
}

/// Row-major list of rows of reprs.
impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq((0..self.rows).map(|i| {
            self.row(i).iter().map(|c| c.0).collect::<Vec<_>>()
        }))
    }
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![Fe::ZERO; rows * cols],
        }
    }

    pub fn from_rows(field: &Field, rows: &[Vec<Fe>]) -> Result<Matrix> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::LengthMismatch {
                expected: cols,
                got: rows.iter().map(Vec::len).find(|&l| l != cols).unwrap_or(0),
            });
        }
        Ok(Matrix {
            field: field.clone(),
            rows: rows.len(),
            cols,
            data: rows.concat(),
        })
    }

    /// Builds a matrix whose columns are `cols`.
    pub fn from_columns(field: &Field, cols: &[Vec<Fe>]) -> Result<Matrix> {
        Ok(Matrix::from_rows(field, cols)?.transpose())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Fe {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Fe) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Fe] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Fe> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn to_reprs(&self) -> Vec<Vec<u32>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|c| c.0).collect())
            .collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), f.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// `self * v` for a column vector `v`.
    pub fn mul_vec(&self, v: &[Fe]) -> Result<Vec<Fe>> {
        if v.len() != self.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        let f = &self.field;
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Fe::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|c| c.is_zero())
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(piv) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if piv != r {
                for j in 0..self.cols {
                    self.data.swap(piv * self.cols + j, r * self.cols + j);
                }
            }
            let inv = f.inv(self.get(r, c)).expect("pivot is nonzero");
            for j in 0..self.cols {
                let v = f.mul(self.get(r, j), inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                let factor = self.get(i, c);
                if i == r || factor.is_zero() {
                    continue;
                }
                for j in 0..self.cols {
                    let v = f.sub(self.get(i, j), f.mul(factor, self.get(r, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// A solution `x` of `self * x = b`, if one exists.
    pub fn solve(&self, b: &[Fe]) -> Result<Option<Vec<Fe>>> {
        if b.len() != self.rows {
            return Err(Error::LengthMismatch {
                expected: self.rows,
                got: b.len(),
            });
        }
        let mut aug = Matrix::zeros(&self.field, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, self.cols, b[i]);
        }
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Fe::ZERO; self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug.get(r, self.cols);
        }
        Ok(Some(x))
    }
}

/// Whether `target` lies in the span of `vectors` (all of equal length).
pub fn in_span(field: &Field, vectors: &[&[Fe]], target: &[Fe]) -> bool {
    if target.iter().all(|c| c.is_zero()) {
        return true;
    }
    if vectors.is_empty() {
        return false;
    }
    let rows = target.len();
    let mut m = Matrix::zeros(field, rows, vectors.len() + 1);
    for (j, v) in vectors.iter().enumerate() {
        for i in 0..rows {
            m.set(i, j, v[i]);
        }
    }
    for (i, &t) in target.iter().enumerate() {
        m.set(i, vectors.len(), t);
    }
    m.rref().last() != Some(&vectors.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u64) -> Field {
        Field::of_order(q).unwrap()
    }

    fn mat(f: &Field, rows: &[&[u32]]) -> Matrix {
        let rows: Vec<Vec<Fe>> = rows.iter().map(|r| r.iter().map(|&c| Fe(c)).collect()).collect();
        Matrix::from_rows(f, &rows).unwrap()
    }

    #[test]
    fn rank_and_solve() {
        let f = gf(5);
        let m = mat(&f, &[&[1, 2, 3], &[0, 1, 4], &[1, 3, 2]]);
        // row3 = row1 + row2, so the column space is {v : v3 = v1 + v2}
        assert_eq!(m.rank(), 2);
        let b = [Fe(1), Fe(0), Fe(1)];
        let x = m.solve(&b).unwrap().unwrap();
        assert_eq!(m.mul_vec(&x).unwrap(), b.to_vec());
        assert!(m.solve(&[Fe(1), Fe(0), Fe(0)]).unwrap().is_none());
    }

    #[test]
    fn span_membership() {
        let f = gf(7);
        let a = [Fe(1), Fe(0), Fe(2)];
        let b = [Fe(0), Fe(1), Fe(3)];
        let sum: Vec<Fe> = (0..3).map(|i| f.add(f.mul(Fe(4), a[i]), b[i])).collect();
        assert!(in_span(&f, &[&a, &b], &sum));
        assert!(!in_span(&f, &[&a, &b], &[Fe(0), Fe(0), Fe(1)]));
        assert!(in_span(&f, &[], &[Fe(0), Fe(0), Fe(0)]));
        assert!(!in_span(&f, &[], &[Fe(1), Fe(0), Fe(0)]));
    }

    #[test]
    fn transpose_and_product() {
        let f = gf(3);
        let m = mat(&f, &[&[1, 2], &[0, 1], &[2, 2]]);
        let p = m.transpose().mul(&m).unwrap();
        // entries: [1+0+4, 2+0+4; 2+0+4, 4+1+4] mod 3
        assert_eq!(p.to_reprs(), vec![vec![2, 0], vec![0, 0]]);
    }
}
