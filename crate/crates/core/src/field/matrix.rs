use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use super::{CycNum, FieldError};

/// Dense row-major matrix over Q(ζ₁₂).
#[derive(Clone, PartialEq, Eq)]
pub struct CycMatrix {
    rows: usize,
    cols: usize,
    data: Vec<CycNum>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub rref: CycMatrix,
    pub pivots: Vec<usize>,
}

impl CycMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CycMatrix {
            rows,
            cols,
            data: vec![CycNum::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = CycNum::one();
        }
        m
    }

    pub fn scalar(n: usize, s: &CycNum) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = s.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> CycNum) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        CycMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<CycNum>>) -> Result<Self, FieldError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(FieldError::Shape("ragged rows".into()));
        }
        Ok(CycMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let c = rows.first().map_or(0, |r| r.len());
        Self::from_fn(rows.len(), c, |i, j| CycNum::from_int(rows[i][j]))
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(rows: usize, columns: &[Vec<CycNum>]) -> Self {
        Self::from_fn(rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[CycNum] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<CycNum> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(CycNum::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.data.iter().all(CycNum::is_rational)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Self {
        CycMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(CycNum::conj).collect(),
        }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn trace(&self) -> CycNum {
        let mut t = CycNum::zero();
        for i in 0..self.rows.min(self.cols) {
            t += &self[(i, i)];
        }
        t
    }

    pub fn scale(&self, s: &CycNum) -> Self {
        CycMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[CycNum]) -> Vec<CycNum> {
        assert_eq!(v.len(), self.cols, "dimension mismatch in mul_vec");
        (0..self.rows)
            .map(|i| {
                let mut acc = CycNum::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    acc.add_mul(a, b);
                }
                acc
            })
            .collect()
    }

    /// Commutator `AB − BA`.
    pub fn commutator(&self, other: &CycMatrix) -> CycMatrix {
        &(self * other) - &(other * self)
    }

    pub fn kron(&self, other: &CycMatrix) -> CycMatrix {
        Self::from_fn(self.rows * other.rows, self.cols * other.cols, |i, j| {
            let a = &self[(i / other.rows, j / other.cols)];
            if a.is_zero() {
                CycNum::zero()
            } else {
                a * &other[(i % other.rows, j % other.cols)]
            }
        })
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> CycMatrix {
        Self::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }

    pub fn hstack(&self, other: &CycMatrix) -> CycMatrix {
        assert_eq!(self.rows, other.rows);
        Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                other[(i, j - self.cols)].clone()
            }
        })
    }

    /// Gauss-Jordan elimination to reduced row echelon form.
    pub fn echelon(&self) -> Echelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv().expect("pivot is nonzero");
            if !inv.is_one() {
                for j in c..m.cols {
                    if !m[(r, j)].is_zero() {
                        m[(r, j)] = &m[(r, j)] * &inv;
                    }
                }
            }
            let pivot_row: Vec<(usize, CycNum)> = (c..m.cols)
                .filter(|&j| !m[(r, j)].is_zero())
                .map(|j| (j, m[(r, j)].clone()))
                .collect();
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for (j, v) in &pivot_row {
                    let d = &f * v;
                    m[(i, *j)] -= &d;
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { rref: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Rank and a basis of the right kernel `{v : Mv = 0}`.
    pub fn rank_kernel(&self) -> (usize, Vec<Vec<CycNum>>) {
        let Echelon { rref, pivots } = self.echelon();
        let mut is_pivot = vec![None; self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            is_pivot[c] = Some(r);
        }
        let mut kernel = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free].is_some() {
                continue;
            }
            let mut v = vec![CycNum::zero(); self.cols];
            v[free] = CycNum::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -&rref[(r, free)];
            }
            kernel.push(v);
        }
        (pivots.len(), kernel)
    }

    pub fn determinant(&self) -> Result<CycNum, FieldError> {
        if !self.is_square() {
            return Err(FieldError::Shape(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let mut m = self.clone();
        let n = m.rows;
        let mut det = CycNum::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Ok(CycNum::zero());
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let piv = m[(c, c)].clone();
            det = &det * &piv;
            let inv = piv.inv()?;
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = &m[(i, c)] * &inv;
                for j in c..n {
                    if !m[(c, j)].is_zero() {
                        let d = &f * &m[(c, j)];
                        m[(i, j)] -= &d;
                    }
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<CycMatrix, FieldError> {
        if !self.is_square() {
            return Err(FieldError::Shape("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let aug = self.hstack(&CycMatrix::identity(n)).echelon();
        if aug.pivots.len() < n || aug.pivots[n - 1] != n - 1 {
            return Err(FieldError::Singular);
        }
        let all: Vec<usize> = (0..n).collect();
        let right: Vec<usize> = (n..2 * n).collect();
        Ok(aug.rref.submatrix(&all, &right))
    }

    /// Solves `M x = b`, returning some solution or `None` when inconsistent.
    pub fn solve(&self, b: &[CycNum]) -> Option<Vec<CycNum>> {
        assert_eq!(b.len(), self.rows);
        let col = CycMatrix::from_columns(self.rows, &[b.to_vec()]);
        let Echelon { rref, pivots } = self.hstack(&col).echelon();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![CycNum::zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = rref[(r, self.cols)].clone();
        }
        Some(x)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = &CycNum> {
        self.data.iter()
    }
}

impl Index<(usize, usize)> for CycMatrix {
    type Output = CycNum;
    fn index(&self, (i, j): (usize, usize)) -> &CycNum {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for CycMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut CycNum {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl Mul<&CycMatrix> for &CycMatrix {
    type Output = CycMatrix;
    fn mul(self, rhs: &CycMatrix) -> CycMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = CycMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)].add_mul(a, b);
                    }
                }
            }
        }
        out
    }
}

impl Add<&CycMatrix> for &CycMatrix {
    type Output = CycMatrix;
    fn add(self, rhs: &CycMatrix) -> CycMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        CycMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub<&CycMatrix> for &CycMatrix {
    type Output = CycMatrix;
    fn sub(self, rhs: &CycMatrix) -> CycMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        CycMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &CycMatrix {
    type Output = CycMatrix;
    fn neg(self) -> CycMatrix {
        CycMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Debug for CycMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CycMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|a| a.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_has_full_rank() {
        let (rank, ker) = CycMatrix::identity(9).rank_kernel();
        assert_eq!(rank, 9);
        assert!(ker.is_empty());
    }

    #[test]
    fn zero_matrix_kernel_is_everything() {
        let (rank, ker) = CycMatrix::zeros(3, 5).rank_kernel();
        assert_eq!(rank, 0);
        assert_eq!(ker.len(), 5);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = CycMatrix::from_fn(3, 6, |i, j| {
            CycNum::from_int_coeffs([(i * j) as i64 % 5 - 2, (i + j) as i64 % 3, 0, (j % 2) as i64])
        });
        let (rank, ker) = m.rank_kernel();
        assert_eq!(rank + ker.len(), 6);
        for v in &ker {
            assert!(m.mul_vec(v).iter().all(CycNum::is_zero));
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let m = CycMatrix::from_rows(vec![
            vec![CycNum::i(), CycNum::one()],
            vec![CycNum::omega(), CycNum::from_int(2)],
        ])
        .unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, CycMatrix::identity(2));
        let det = m.determinant().unwrap();
        assert_eq!(det, &(&CycNum::i() * &CycNum::from_int(2)) - &CycNum::omega());
    }

    #[test]
    fn singular_inverse_fails() {
        let m = CycMatrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(m.inverse(), Err(FieldError::Singular));
        assert!(m.determinant().unwrap().is_zero());
    }

    #[test]
    fn solve_detects_inconsistency() {
        let m = CycMatrix::from_int_rows(&[&[1, 1], &[2, 2]]);
        assert!(m.solve(&[CycNum::one(), CycNum::one()]).is_none());
        let x = m.solve(&[CycNum::one(), CycNum::from_int(2)]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![CycNum::one(), CycNum::from_int(2)]);
    }
}
