//! Dense exact linear algebra over F_p: row reduction, rank, kernels,
//! inverses. Workhorse for Macaulay matrices and the Koszul oracle.

use crate::error::{Error, Result};
use crate::field::{Fp, PrimeField};

/// Dense row-major matrix over F_p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpMat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<u64>,
    k: PrimeField,
}

impl FpMat {
    pub fn zero(k: PrimeField, rows: usize, cols: usize) -> Self {
        FpMat {
            rows,
            cols,
            data: vec![0; rows * cols],
            k,
        }
    }

    pub fn identity(k: PrimeField, n: usize) -> Self {
        let mut m = Self::zero(k, n, n);
        for i in 0..n {
            m.set(i, i, Fp::ONE);
        }
        m
    }

    pub fn from_rows(k: PrimeField, rows: Vec<Vec<Fp>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in &rows {
            assert_eq!(row.len(), c);
            data.extend(row.iter().map(|x| x.0));
        }
        FpMat {
            rows: r,
            cols: c,
            data,
            k,
        }
    }

    pub fn field(&self) -> PrimeField {
        self.k
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Fp {
        Fp(self.data[i * self.cols + j])
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Fp) {
        self.data[i * self.cols + j] = v.0;
    }

    pub fn mul(&self, other: &FpMat) -> FpMat {
        assert_eq!(self.cols, other.rows);
        let k = self.k;
        let p = k.characteristic() as u128;
        let mut out = FpMat::zero(k, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.data[i * self.cols + l] as u128;
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.data[l * other.cols + j] as u128;
                    if b == 0 {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = ((out.data[idx] as u128 + a * b) % p) as u64;
                }
            }
        }
        out
    }

    /// In-place reduction to reduced row echelon form.
    /// Returns the pivot columns in order.
    pub fn rref(&mut self) -> Vec<usize> {
        let k = self.k;
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            // find pivot
            let mut pr = None;
            for r in row..self.rows {
                if self.data[r * self.cols + col] != 0 {
                    pr = Some(r);
                    break;
                }
            }
            let Some(pr) = pr else { continue };
            self.swap_rows(row, pr);
            // normalize
            let inv = k.inv(self.get(row, col)).expect("pivot nonzero");
            if inv != Fp::ONE {
                for j in col..self.cols {
                    let v = self.get(row, j);
                    self.set(row, j, k.mul(v, inv));
                }
            }
            // eliminate the column everywhere else
            for r in 0..self.rows {
                if r == row {
                    continue;
                }
                let f = self.get(r, col);
                if f.is_zero() {
                    continue;
                }
                for j in col..self.cols {
                    let v = self.get(row, j);
                    if v.is_zero() {
                        continue;
                    }
                    let cur = self.get(r, j);
                    self.set(r, j, k.sub(cur, k.mul(f, v)));
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(mut self) -> usize {
        self.rref().len()
    }

    /// Basis of the right kernel, one vector per non-pivot column.
    pub fn kernel_basis(mut self) -> Vec<Vec<Fp>> {
        let k = self.k;
        let pivots = self.rref();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let mut out = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![Fp::ZERO; self.cols];
            v[free] = Fp::ONE;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = k.neg(self.get(r, free));
            }
            out.push(v);
        }
        out
    }

    pub fn inverse(&self) -> Result<FpMat> {
        if self.rows != self.cols {
            return Err(Error::SingularMatrix);
        }
        let n = self.rows;
        let k = self.k;
        let mut aug = FpMat::zero(k, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, Fp::ONE);
        }
        let pivots = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
            return Err(Error::SingularMatrix);
        }
        let mut inv = FpMat::zero(k, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j));
            }
        }
        Ok(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.clone().rank() == self.rows
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k() -> PrimeField {
        PrimeField::new(32003).unwrap()
    }

    #[test]
    fn rref_rank_kernel() {
        let k = k();
        let mut m = FpMat::from_rows(
            k,
            vec![
                vec![k.el(1), k.el(2), k.el(3)],
                vec![k.el(2), k.el(4), k.el(6)],
                vec![k.el(0), k.el(1), k.el(1)],
            ],
        );
        let pivots = m.clone().rref();
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(m.clone().rank(), 2);
        let ker = m.clone().kernel_basis();
        assert_eq!(ker.len(), 1);
        // check the kernel vector really annihilates
        for i in 0..3 {
            let mut acc = Fp::ZERO;
            for j in 0..3 {
                acc = k.add(acc, k.mul(m.get(i, j), ker[0][j]));
            }
            assert_eq!(acc, Fp::ZERO);
        }
        let _ = m.rref();
    }

    #[test]
    fn inverse_roundtrip() {
        let k = k();
        let m = FpMat::from_rows(
            k,
            vec![
                vec![k.el(1), k.el(1), k.el(0)],
                vec![k.el(0), k.el(1), k.el(2)],
                vec![k.el(1), k.el(0), k.el(1)],
            ],
        );
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), FpMat::identity(k, 3));
        assert_eq!(inv.mul(&m), FpMat::identity(k, 3));
    }

    #[test]
    fn singular_matrix_detected() {
        let k = k();
        let m = FpMat::from_rows(
            k,
            vec![vec![k.el(1), k.el(2)], vec![k.el(2), k.el(4)]],
        );
        assert!(m.inverse().is_err());
        assert!(!m.is_invertible());
    }
}
