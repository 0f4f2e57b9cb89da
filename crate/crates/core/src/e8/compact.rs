//! The compact real form `su(9) ⊕ Λ_R` as the fixed set of [`sigma`](super::sigma).

use super::table::{BracketTable, SparseVec};
use super::{basis_element, killing, E8Elem, E8Error, DIM, SL9_DIM, THREE_FORMS};
use super::basis::offdiag_index;
use crate::field::{CycMatrix, CycNum};

/// A real basis of the compact form together with the change of coordinates
/// from the canonical complex basis.
pub struct CompactForm {
    elements: Vec<E8Elem>,
    sparse: Vec<SparseVec>,
    /// Inverse of the matrix whose columns are the basis elements.
    to_real: CycMatrix,
}

/// 80 elements spanning su(9) followed by `(0, b, −b)` and `(0, ib, ib)` for each
/// basis 3-form `b`.
pub fn compact_form_basis() -> Vec<E8Elem> {
    let i = CycNum::i();
    let mut out = Vec::with_capacity(DIM);
    for a in 0..9 {
        for b in a + 1..9 {
            let (ab, ba) = (
                SparseVec::unit(offdiag_index(a, b)),
                SparseVec::unit(offdiag_index(b, a)),
            );
            out.push(E8Elem::from_sparse(&ab.sub(&ba)));
            out.push(E8Elem::from_sparse(&ab.add(&ba).scale(&i)));
        }
    }
    for k in 0..8 {
        out.push(basis_element(72 + k).scale(&i));
    }
    for k in 0..THREE_FORMS {
        let x = SparseVec::unit(SL9_DIM + k);
        let y = SparseVec::unit(SL9_DIM + THREE_FORMS + k);
        out.push(E8Elem::from_sparse(&x.sub(&y)));
        out.push(E8Elem::from_sparse(&x.add(&y).scale(&i)));
    }
    out
}

impl CompactForm {
    pub fn new() -> Result<Self, E8Error> {
        let elements = compact_form_basis();
        let sparse: Vec<SparseVec> = elements.iter().map(E8Elem::to_sparse).collect();
        let cols: Vec<Vec<CycNum>> = sparse.iter().map(|s| s.to_dense(DIM)).collect();
        let to_real = CycMatrix::from_columns(DIM, &cols)
            .inverse()
            .map_err(|_| E8Error::NotAnAutomorphism("compact basis is not a basis".into()))?;
        Ok(CompactForm {
            elements,
            sparse,
            to_real,
        })
    }

    pub fn elements(&self) -> &[E8Elem] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Coordinates of a canonical-basis vector in the compact basis.
    pub fn coordinates(&self, v: &SparseVec) -> Vec<CycNum> {
        let mut out = vec![CycNum::zero(); DIM];
        for (j, c) in v.iter() {
            for (a, slot) in out.iter_mut().enumerate() {
                slot.add_mul(&self.to_real[(a, j)], c);
            }
        }
        out
    }

    /// Expands `[b_a, b_b]` in the compact basis; `None` unless every coordinate is
    /// rational and the expansion reproduces the bracket.
    pub fn real_bracket_coords(&self, table: &BracketTable, a: usize, b: usize) -> Option<Vec<CycNum>> {
        let z = table.bracket(&self.sparse[a], &self.sparse[b]);
        let coords = self.coordinates(&z);
        if !coords.iter().all(CycNum::is_rational) {
            return None;
        }
        let mut back = SparseVec::new();
        for (k, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                back = back.add(&self.sparse[k].scale(c));
            }
        }
        (back == z).then_some(coords)
    }

    /// Counts pairs whose bracket fails to re-expand with rational coordinates.
    pub fn closure_violations(&self, table: &BracketTable) -> (usize, usize) {
        use rayon::prelude::*;
        let n = self.len();
        let bad = (0..n)
            .into_par_iter()
            .map(|a| {
                (a + 1..n)
                    .filter(|&b| self.real_bracket_coords(table, a, b).is_none())
                    .count()
            })
            .sum();
        (n * (n - 1) / 2, bad)
    }

    pub fn gram(&self) -> CycMatrix {
        let n = self.len();
        CycMatrix::from_fn(n, n, |a, b| killing(&self.elements[a], &self.elements[b]))
    }

    /// Pivots of symmetric Gaussian elimination on the Killing Gram matrix; negative
    /// definiteness means every pivot is a negative rational.
    pub fn gram_pivots(&self) -> Vec<CycNum> {
        symmetric_pivots(&self.gram())
    }
}

/// Leading-principal pivots of `m` (no row exchanges); stops at the first zero pivot.
pub fn symmetric_pivots(m: &CycMatrix) -> Vec<CycNum> {
    let mut a = m.clone();
    let n = a.rows();
    let mut pivots = Vec::with_capacity(n);
    for k in 0..n {
        let p = a[(k, k)].clone();
        if p.is_zero() {
            pivots.push(p);
            break;
        }
        let inv = p.inv().expect("nonzero pivot");
        for i in k + 1..n {
            if a[(i, k)].is_zero() {
                continue;
            }
            let f = &a[(i, k)] * &inv;
            for j in k..n {
                if !a[(k, j)].is_zero() {
                    let d = &f * &a[(k, j)];
                    a[(i, j)] -= &d;
                }
            }
        }
        pivots.push(p);
    }
    pivots
}
