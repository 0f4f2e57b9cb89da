use crate::field::{CycMatrix, CycNum};

use super::basis::{basis_element, DIM};
use super::{bracket, grade};

/// Sparse coordinate vector: `(index, coefficient)` pairs sorted by index, no zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SparseVec(Vec<(u16, CycNum)>);

impl SparseVec {
    pub fn new() -> Self {
        SparseVec(Vec::new())
    }

    pub fn unit(k: usize) -> Self {
        SparseVec(vec![(k as u16, CycNum::one())])
    }

    pub fn from_dense(v: &[CycNum]) -> Self {
        SparseVec(
            v.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i as u16, c.clone()))
                .collect(),
        )
    }

    /// Builds from arbitrary pairs, summing duplicates and dropping zeros.
    pub fn from_pairs(mut pairs: Vec<(usize, CycNum)>) -> Self {
        pairs.sort_by_key(|p| p.0);
        let mut out: Vec<(u16, CycNum)> = Vec::with_capacity(pairs.len());
        for (i, c) in pairs {
            match out.last_mut() {
                Some((j, acc)) if *j as usize == i => *acc += &c,
                _ => out.push((i as u16, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        SparseVec(out)
    }

    pub fn to_dense(&self, n: usize) -> Vec<CycNum> {
        let mut v = vec![CycNum::zero(); n];
        for (i, c) in &self.0 {
            v[*i as usize] = c.clone();
        }
        v
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &CycNum)> {
        self.0.iter().map(|(i, c)| (*i as usize, c))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, k: usize) -> CycNum {
        self.0
            .binary_search_by_key(&(k as u16), |p| p.0)
            .map(|p| self.0[p].1.clone())
            .unwrap_or_default()
    }

    pub fn scale(&self, s: &CycNum) -> SparseVec {
        if s.is_zero() {
            return SparseVec::new();
        }
        SparseVec(self.0.iter().map(|(i, c)| (*i, c * s)).collect())
    }

    pub fn neg(&self) -> SparseVec {
        SparseVec(self.0.iter().map(|(i, c)| (*i, -c)).collect())
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new(DIM.max(self.max_index()).max(other.max_index()));
        acc.add_scaled(self, &CycNum::one());
        acc.add_scaled(other, &CycNum::one());
        acc.take()
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        self.add(&other.neg())
    }

    fn max_index(&self) -> usize {
        self.0.last().map_or(0, |(i, _)| *i as usize + 1)
    }

    /// Maps every coefficient, dropping any that become zero.
    pub fn map(&self, f: impl Fn(usize, &CycNum) -> CycNum) -> SparseVec {
        SparseVec(
            self.0
                .iter()
                .map(|(i, c)| (*i, f(*i as usize, c)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        )
    }
}

/// Dense scratch accumulator that only touches the slots it has written.
pub(crate) struct Accumulator {
    slots: Vec<CycNum>,
    touched: Vec<usize>,
    flag: Vec<bool>,
}

impl Accumulator {
    pub(crate) fn new(n: usize) -> Self {
        Accumulator {
            slots: vec![CycNum::zero(); n],
            touched: Vec::new(),
            flag: vec![false; n],
        }
    }

    pub(crate) fn add_mul_at(&mut self, i: usize, a: &CycNum, b: &CycNum) {
        if !self.flag[i] {
            self.flag[i] = true;
            self.touched.push(i);
        }
        self.slots[i].add_mul(a, b);
    }

    pub(crate) fn add_scaled(&mut self, v: &SparseVec, s: &CycNum) {
        for (i, c) in v.iter() {
            self.add_mul_at(i, c, s);
        }
    }

    /// Returns the accumulated vector and resets the scratch space.
    pub(crate) fn take(&mut self) -> SparseVec {
        self.touched.sort_unstable();
        let mut out = Vec::with_capacity(self.touched.len());
        for &i in &self.touched {
            self.flag[i] = false;
            let c = std::mem::take(&mut self.slots[i]);
            if !c.is_zero() {
                out.push((i as u16, c));
            }
        }
        self.touched.clear();
        SparseVec(out)
    }

    /// True when everything accumulated cancels; resets the scratch space.
    pub(crate) fn take_is_zero(&mut self) -> bool {
        let mut zero = true;
        for &i in &self.touched {
            self.flag[i] = false;
            if !self.slots[i].is_zero() {
                zero = false;
                self.slots[i] = CycNum::zero();
            }
        }
        self.touched.clear();
        zero
    }
}

/// Memoized structure constants `[e_i, e_j] = Σ_k c_ij^k e_k` on the canonical basis.
pub struct BracketTable {
    entries: Vec<SparseVec>,
}

impl BracketTable {
    /// Evaluates the bracket on every ordered pair of basis elements.
    pub fn build() -> Self {
        use rayon::prelude::*;
        let basis: Vec<_> = (0..DIM).map(basis_element).collect();
        let entries = (0..DIM * DIM)
            .into_par_iter()
            .map(|p| bracket(&basis[p / DIM], &basis[p % DIM]).to_sparse())
            .collect();
        BracketTable { entries }
    }

    pub fn entry(&self, i: usize, j: usize) -> &SparseVec {
        &self.entries[i * DIM + j]
    }

    pub fn nonzeros(&self) -> usize {
        self.entries.iter().map(SparseVec::len).sum()
    }

    /// Bilinear extension of the table to sparse vectors.
    pub fn bracket(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new(DIM);
        self.bracket_into(&mut acc, a, b);
        acc.take()
    }

    pub(crate) fn bracket_into(&self, acc: &mut Accumulator, a: &SparseVec, b: &SparseVec) {
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                let xy = x * y;
                for (k, c) in self.entry(i, j).iter() {
                    acc.add_mul_at(k, c, &xy);
                }
            }
        }
    }

    /// `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]`, accumulated in `acc`.
    pub(crate) fn jacobi_into(&self, acc: &mut Accumulator, i: usize, j: usize, k: usize) {
        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
            for (l, x) in self.entry(a, b).iter() {
                for (m, y) in self.entry(l, c).iter() {
                    acc.add_mul_at(m, x, y);
                }
            }
        }
    }

    pub fn jacobi_holds(&self, i: usize, j: usize, k: usize) -> bool {
        let mut acc = Accumulator::new(DIM);
        self.jacobi_into(&mut acc, i, j, k);
        acc.take_is_zero()
    }

    /// `tr(ad e_i ∘ ad e_j) = Σ_{k,l} c_il^k c_jk^l`.
    pub fn trace_form(&self, i: usize, j: usize) -> CycNum {
        let mut t = CycNum::zero();
        for l in 0..DIM {
            for (k, c) in self.entry(i, l).iter() {
                let d = self.entry(j, k).get(l);
                t.add_mul(c, &d);
            }
        }
        t
    }

    /// Dense `ad` of a sparse element, from the table.
    pub fn ad_matrix(&self, x: &SparseVec) -> CycMatrix {
        let mut m = CycMatrix::zeros(DIM, DIM);
        for (i, c) in x.iter() {
            for j in 0..DIM {
                for (k, s) in self.entry(i, j).iter() {
                    m[(k, j)].add_mul(c, s);
                }
            }
        }
        m
    }

    /// Graded sanity check: the bracket of grades `a` and `b` lands in grade `a + b` mod 3.
    pub fn respects_grading(&self) -> bool {
        (0..DIM).all(|i| {
            (0..DIM).all(|j| {
                let g = (grade(i).omega_power() + grade(j).omega_power()) % 3;
                self.entry(i, j)
                    .iter()
                    .all(|(k, _)| grade(k).omega_power() == g)
            })
        })
    }
}
