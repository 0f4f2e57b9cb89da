//! Frozen ordering of the canonical 248-element basis.
//!
//! Indices `0..72` are the off-diagonal matrix units `E_ij` (row-major, `i ≠ j`),
//! `72..80` are `E_kk − E_{k+1,k+1}`, `80..164` the lexicographic 3-forms in the `x`
//! slot and `164..248` the same 3-forms in the `y` slot.

use super::{three_form_basis, E8Elem};
use crate::exterior::{KForm, MultiIndex};
use crate::field::{CycMatrix, CycNum};

pub const DIM: usize = 248;
pub const SL9_DIM: usize = 80;
pub const THREE_FORMS: usize = 84;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Grade {
    R,
    X,
    Y,
}

impl Grade {
    /// Exponent of ω by which the order-three automorphism scales this summand.
    pub fn omega_power(self) -> u32 {
        match self {
            Grade::R => 0,
            Grade::X => 1,
            Grade::Y => 2,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Grade::R => "R",
            Grade::X => "x",
            Grade::Y => "y",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisKind {
    /// `E_ij`, 0-based.
    OffDiagonal(usize, usize),
    /// `E_kk − E_{k+1,k+1}`, 0-based `k`.
    Cartan(usize),
    X(MultiIndex),
    Y(MultiIndex),
}

pub(crate) fn offdiag_index(i: usize, j: usize) -> usize {
    debug_assert!(i != j && i < 9 && j < 9);
    i * 8 + if j < i { j } else { j - 1 }
}

pub fn grade(k: usize) -> Grade {
    match k {
        0..SL9_DIM => Grade::R,
        SL9_DIM..164 => Grade::X,
        _ => Grade::Y,
    }
}

pub fn basis_kind(k: usize) -> BasisKind {
    assert!(k < DIM, "basis index out of range");
    let (forms, _) = three_form_basis();
    match k {
        0..72 => {
            let i = k / 8;
            let p = k % 8;
            BasisKind::OffDiagonal(i, if p < i { p } else { p + 1 })
        }
        72..SL9_DIM => BasisKind::Cartan(k - 72),
        SL9_DIM..164 => BasisKind::X(forms[k - SL9_DIM]),
        _ => BasisKind::Y(forms[k - 164]),
    }
}

pub fn basis_element(k: usize) -> E8Elem {
    let one = CycNum::one();
    let zero_form = || KForm::zero(9, 3);
    let form = |m: MultiIndex| KForm::from_terms(9, 3, [(m, one.clone())]).expect("3-form");
    match basis_kind(k) {
        BasisKind::OffDiagonal(i, j) => {
            let mut r = CycMatrix::zeros(9, 9);
            r[(i, j)] = one.clone();
            E8Elem::new_unchecked(r, zero_form(), zero_form())
        }
        BasisKind::Cartan(c) => {
            let mut r = CycMatrix::zeros(9, 9);
            r[(c, c)] = one.clone();
            r[(c + 1, c + 1)] = -&one;
            E8Elem::new_unchecked(r, zero_form(), zero_form())
        }
        BasisKind::X(m) => E8Elem::new_unchecked(CycMatrix::zeros(9, 9), form(m), zero_form()),
        BasisKind::Y(m) => E8Elem::new_unchecked(CycMatrix::zeros(9, 9), zero_form(), form(m)),
    }
}
