use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::FieldError;

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        IntMatrix { rows, cols, data }
    }

    /// Builds a matrix from rows; `cols` is needed when there are no rows.
    pub fn from_rows(rows: Vec<Vec<BigInt>>, cols: usize) -> Result<Self, FieldError> {
        if rows.iter().any(|r| r.len() != cols) {
            return Err(FieldError::Shape(format!("expected rows of length {cols}")));
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let c = rows.first().map_or(0, |r| r.len());
        Self::from_fn(rows.len(), c, |i, j| BigInt::from(rows[i][j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn row_vec(&self, i: usize) -> Vec<BigInt> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt, FieldError> {
        if self.rows != self.cols {
            return Err(FieldError::Shape("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[(i, k)].is_zero()) else {
                    return Ok(BigInt::zero());
                };
                m.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)];
                    m[(i, j)] = v / &prev;
                }
            }
            prev = m[(k, k)].clone();
        }
        Ok(sign * &m[(n - 1, n - 1)])
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] += f * row[src]
    fn add_row(&mut self, dst: usize, src: usize, f: &BigInt) {
        for j in 0..self.cols {
            let v = &self[(src, j)] * f;
            self[(dst, j)] += v;
        }
    }

    /// col[dst] += f * col[src]
    fn add_col(&mut self, dst: usize, src: usize, f: &BigInt) {
        for i in 0..self.rows {
            let v = &self[(i, src)] * f;
            self[(i, dst)] += v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -&self[(r, j)];
            self[(r, j)] = v;
        }
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul<&IntMatrix> for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row_vec(i).iter().map(|a| a.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// `U · M · V = D` with `D` diagonal, `d₁ | d₂ | … | d_r` and `U`, `V` unimodular.
#[derive(Clone, Debug)]
pub struct SmithForm {
    /// Diagonal of `D`, length `min(rows, cols)`; nonzero entries first.
    pub diag: Vec<BigInt>,
    pub rank: usize,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.diag[..self.rank]
            .iter()
            .filter(|d| !d.is_one())
            .cloned()
            .collect()
    }

    pub fn diagonal_matrix(&self, rows: usize, cols: usize) -> IntMatrix {
        let mut d = IntMatrix::zeros(rows, cols);
        for (i, x) in self.diag.iter().enumerate() {
            d[(i, i)] = x.clone();
        }
        d
    }
}

/// Position of the nonzero entry of least absolute value in the trailing block.
fn min_pivot(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for i in t..a.rows {
        for j in t..a.cols {
            let v = a[(i, j)].abs();
            if v.is_zero() {
                continue;
            }
            if best.as_ref().is_none_or(|(_, b)| v < *b) {
                let done = v.is_one();
                best = Some(((i, j), v));
                if done {
                    return best.map(|(p, _)| p);
                }
            }
        }
    }
    best.map(|(p, _)| p)
}

/// Smith normal form by unimodular row and column operations.
///
/// The pivot at each step is the smallest nonzero entry in absolute value.
/// The result is checked by multiplying out `U · M · V` before it is returned.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = min_pivot(&a, t) else {
            break;
        };
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = -a[(i, t)].div_floor(&a[(t, t)]);
                a.add_row(i, t, &q);
                u.add_row(i, t, &q);
                if !a[(i, t)].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = -a[(t, j)].div_floor(&a[(t, t)]);
                a.add_col(j, t, &q);
                v.add_col(j, t, &q);
                if !a[(t, j)].is_zero() {
                    dirty = true;
                }
            }
            if !dirty {
                // Row and column are clear; enforce divisibility of the rest.
                let bad = (t + 1..rows)
                    .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                    .find(|&(i, j)| !a[(i, j)].is_multiple_of(&a[(t, t)]));
                match bad {
                    None => break,
                    Some((i, _)) => {
                        a.add_row(t, i, &BigInt::one());
                        u.add_row(t, i, &BigInt::one());
                    }
                }
            }
            // Remainders are smaller than the pivot, so move the new minimum in.
            if let Some((pi, pj)) = min_pivot_restricted(&a, t) {
                a.swap_rows(t, pi);
                u.swap_rows(t, pi);
                a.swap_cols(t, pj);
                v.swap_cols(t, pj);
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }
    let diag: Vec<BigInt> = (0..rows.min(cols)).map(|i| a[(i, i)].clone()).collect();
    let rank = diag.iter().take_while(|d| !d.is_zero()).count();
    let form = SmithForm { diag, rank, u, v };
    let check = &(&form.u * m) * &form.v;
    assert_eq!(
        check,
        form.diagonal_matrix(rows, cols),
        "Smith normal form failed its U·M·V reconstruction"
    );
    for w in form.diag[..rank].windows(2) {
        assert!(w[1].is_multiple_of(&w[0]), "divisibility chain broken");
    }
    form
}

/// Smallest nonzero entry in row t or column t (from position t) if it beats the pivot.
fn min_pivot_restricted(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best = a[(t, t)].abs();
    let mut at = None;
    for i in t + 1..a.rows {
        let x = a[(i, t)].abs();
        if !x.is_zero() && (best.is_zero() || x < best) {
            best = x;
            at = Some((i, t));
        }
    }
    for j in t + 1..a.cols {
        let x = a[(t, j)].abs();
        if !x.is_zero() && (best.is_zero() || x < best) {
            best = x;
            at = Some((t, j));
        }
    }
    at
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag_of(rows: &[&[i64]]) -> Vec<i64> {
        let f = smith_normal_form(&IntMatrix::from_i64(rows));
        f.diag.iter().map(|d| i64::try_from(d).unwrap()).collect()
    }

    #[test]
    fn two_by_two_example() {
        // gcd(2,3) = 1, product 6
        assert_eq!(diag_of(&[&[2, 0], &[0, 3]]), vec![1, 6]);
    }

    #[test]
    fn zero_matrix() {
        let f = smith_normal_form(&IntMatrix::zeros(3, 2));
        assert_eq!(f.rank, 0);
        assert!(f.diag.iter().all(Zero::is_zero));
    }

    #[test]
    fn one_by_one() {
        assert_eq!(diag_of(&[&[3]]), vec![3]);
        assert_eq!(diag_of(&[&[-3]]), vec![3]);
    }

    #[test]
    fn rectangular_with_torsion() {
        assert_eq!(diag_of(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]), vec![2, 6, 12]);
        assert_eq!(diag_of(&[&[4, 6], &[6, 9], &[2, 3]]), vec![1, 0]);
    }

    #[test]
    fn transforms_are_unimodular() {
        let f = smith_normal_form(&IntMatrix::from_i64(&[&[3, 5, 7], &[11, 13, 17]]));
        assert_eq!(f.u.determinant().unwrap().abs(), BigInt::one());
        assert_eq!(f.v.determinant().unwrap().abs(), BigInt::one());
    }

    #[test]
    fn bareiss_determinant() {
        let m = IntMatrix::from_i64(&[&[0, 2, 1], &[3, 1, 4], &[1, 5, 9]]);
        // 0*(9-20) - 2*(27-4) + 1*(15-1) = -46 + 14
        assert_eq!(m.determinant().unwrap(), BigInt::from(-32));
    }
}
