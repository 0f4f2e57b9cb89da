//! Exterior algebra of `V = C⁹` or `R⁸` in the standard basis.
//!
//! A [`KForm`] is a sparse map from increasing multi-indices to coefficients.
//! The multi-index basis is orthonormal for [`pairing`] (no `1/k!`), the pairing is
//! complex-bilinear, and the orientation is `vol = dx₁ ∧ … ∧ dx_dim`. The Hodge star is
//! the unique linear map with `α ∧ ⋆β = (α, β) vol`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::field::{CycMatrix, CycNum};

/// Largest ambient dimension supported by the bitmask representation.
pub const MAX_DIM: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExteriorError {
    #[error("ambient dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("degree {degree} exceeds ambient dimension {dim}")]
    DegreeTooLarge { degree: usize, dim: usize },
    #[error("invalid multi-index {0:?}")]
    BadIndex(Vec<usize>),
    #[error("matrix must be {0}x{0}")]
    MatrixShape(usize),
    #[error("group action by a singular matrix")]
    Singular,
}

/// A strictly increasing tuple of indices, stored as a bitmask (bit `i-1` for index `i`).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct MultiIndex(u16);

impl MultiIndex {
    pub const EMPTY: MultiIndex = MultiIndex(0);

    /// From 1-based strictly increasing indices.
    pub fn new(indices: &[usize]) -> Result<Self, ExteriorError> {
        let bad = || ExteriorError::BadIndex(indices.to_vec());
        let mut mask = 0u16;
        let mut last = 0;
        for &i in indices {
            if i <= last || i > MAX_DIM {
                return Err(bad());
            }
            mask |= 1 << (i - 1);
            last = i;
        }
        Ok(MultiIndex(mask))
    }

    /// Sorts arbitrary distinct 1-based indices, returning the permutation sign.
    /// `None` when an index repeats.
    pub fn sorted(indices: &[usize]) -> Option<(i64, MultiIndex)> {
        let mut v = indices.to_vec();
        let mut sign = 1;
        for i in 0..v.len() {
            for j in 0..v.len() - i - 1 {
                match v[j].cmp(&v[j + 1]) {
                    Ordering::Greater => {
                        v.swap(j, j + 1);
                        sign = -sign;
                    }
                    Ordering::Equal => return None,
                    Ordering::Less => {}
                }
            }
        }
        MultiIndex::new(&v).ok().map(|m| (sign, m))
    }

    pub fn from_mask(mask: u16) -> Self {
        MultiIndex(mask)
    }

    pub fn mask(self) -> u16 {
        self.0
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, i: usize) -> bool {
        (1..=MAX_DIM).contains(&i) && self.0 & (1 << (i - 1)) != 0
    }

    pub fn max_index(self) -> usize {
        (16 - self.0.leading_zeros()) as usize
    }

    /// 1-based indices in increasing order.
    pub fn indices(self) -> Vec<usize> {
        (1..=MAX_DIM).filter(|&i| self.contains(i)).collect()
    }

    pub fn complement(self, dim: usize) -> MultiIndex {
        MultiIndex(!self.0 & full_mask(dim))
    }
}

fn full_mask(dim: usize) -> u16 {
    if dim >= 16 {
        u16::MAX
    } else {
        (1u16 << dim) - 1
    }
}

/// Sign of `dx_I ∧ dx_J` relative to `dx_{I∪J}`; `None` if the sets meet.
pub fn wedge_sign(a: MultiIndex, b: MultiIndex) -> Option<i64> {
    if a.0 & b.0 != 0 {
        return None;
    }
    let mut inversions = 0u32;
    let mut rest = b.0;
    while rest != 0 {
        let j = rest.trailing_zeros();
        rest &= rest - 1;
        let above = if j >= 15 { 0 } else { a.0 >> (j + 1) };
        inversions += above.count_ones();
    }
    Some(if inversions.is_multiple_of(2) { 1 } else { -1 })
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.indices().cmp(&other.indices()))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.indices().iter().map(usize::to_string).collect();
        write!(f, "dx{}", idx.join(""))
    }
}

/// All degree-`k` multi-indices over `1..=dim` in lexicographic order.
pub fn basis_indices(dim: usize, k: usize) -> Vec<MultiIndex> {
    fn rec(start: usize, dim: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<MultiIndex>) {
        if cur.len() == k {
            out.push(MultiIndex::new(cur).expect("increasing"));
            return;
        }
        for i in start..=dim {
            cur.push(i);
            rec(i + 1, dim, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, dim, k, &mut Vec::new(), &mut out);
    out
}

/// A homogeneous k-form on a `dim`-dimensional space.
#[derive(Clone, PartialEq, Eq)]
pub struct KForm {
    dim: usize,
    degree: usize,
    coeffs: BTreeMap<MultiIndex, CycNum>,
}

impl KForm {
    pub fn zero(dim: usize, degree: usize) -> Self {
        assert!(dim <= MAX_DIM && degree <= dim, "invalid form shape");
        KForm {
            dim,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn scalar(dim: usize, c: CycNum) -> Self {
        let mut f = Self::zero(dim, 0);
        f.add_term(MultiIndex::EMPTY, &c);
        f
    }

    /// `dx_{i₁} ∧ … ∧ dx_{i_k}` for 1-based strictly increasing indices.
    pub fn basis(dim: usize, indices: &[usize]) -> Result<Self, ExteriorError> {
        Self::monomial(dim, indices, CycNum::one())
    }

    pub fn monomial(dim: usize, indices: &[usize], c: CycNum) -> Result<Self, ExteriorError> {
        let idx = MultiIndex::new(indices)?;
        if idx.max_index() > dim {
            return Err(ExteriorError::BadIndex(indices.to_vec()));
        }
        let mut f = Self::zero(dim, indices.len());
        f.add_term(idx, &c);
        Ok(f)
    }

    pub fn volume(dim: usize) -> Self {
        let mut f = Self::zero(dim, dim);
        f.add_term(MultiIndex(full_mask(dim)), &CycNum::one());
        f
    }

    /// The 1-form `Σ vᵢ dxᵢ`.
    pub fn one_form(v: &[CycNum]) -> Self {
        let mut f = Self::zero(v.len(), 1);
        for (i, c) in v.iter().enumerate() {
            f.add_term(MultiIndex(1 << i), c);
        }
        f
    }

    pub fn from_terms(
        dim: usize,
        degree: usize,
        terms: impl IntoIterator<Item = (MultiIndex, CycNum)>,
    ) -> Result<Self, ExteriorError> {
        if degree > dim || dim > MAX_DIM {
            return Err(ExteriorError::DegreeTooLarge { degree, dim });
        }
        let mut f = Self::zero(dim, degree);
        for (idx, c) in terms {
            if idx.degree() != degree || idx.max_index() > dim {
                return Err(ExteriorError::BadIndex(idx.indices()));
            }
            f.add_term(idx, &c);
        }
        Ok(f)
    }

    /// Coordinates in a fixed ordered basis of multi-indices (see [`basis_indices`]).
    pub fn from_vector(dim: usize, degree: usize, basis: &[MultiIndex], v: &[CycNum]) -> Self {
        let mut f = Self::zero(dim, degree);
        for (idx, c) in basis.iter().zip(v) {
            f.add_term(*idx, c);
        }
        f
    }

    pub fn to_vector(&self, basis: &[MultiIndex]) -> Vec<CycNum> {
        basis.iter().map(|i| self.coeff(*i)).collect()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, idx: MultiIndex) -> CycNum {
        self.coeffs.get(&idx).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (MultiIndex, &CycNum)> {
        self.coeffs.iter().map(|(k, v)| (*k, v))
    }

    /// Adds `c · dx_idx`, keeping the map free of zero coefficients.
    pub fn add_term(&mut self, idx: MultiIndex, c: &CycNum) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(idx.degree(), self.degree);
        let slot = self.coeffs.entry(idx).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&idx);
        }
    }

    pub fn scale(&self, s: &CycNum) -> KForm {
        let mut out = KForm::zero(self.dim, self.degree);
        for (i, c) in self.terms() {
            out.add_term(i, &(c * s));
        }
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(&CycNum) -> CycNum) -> KForm {
        let mut out = KForm::zero(self.dim, self.degree);
        for (i, c) in self.terms() {
            out.add_term(i, &f(c));
        }
        out
    }

    pub fn conj(&self) -> KForm {
        self.map_coeffs(CycNum::conj)
    }

    fn check_same(&self, other: &KForm) -> Result<(), ExteriorError> {
        if self.dim != other.dim {
            return Err(ExteriorError::DimensionMismatch(self.dim, other.dim));
        }
        if self.degree != other.degree {
            return Err(ExteriorError::DegreeMismatch(self.degree, other.degree));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &KForm) -> Result<KForm, ExteriorError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (i, c) in other.terms() {
            out.add_term(i, c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &KForm) -> Result<KForm, ExteriorError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (i, c) in other.terms() {
            out.add_term(i, &-c);
        }
        Ok(out)
    }
}

impl fmt::Debug for KForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KForm(dim={}, deg={}) {{", self.dim, self.degree)?;
        for (i, (idx, c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, " {idx:?}: {c}")?;
        }
        write!(f, " }}")
    }
}

pub fn wedge(a: &KForm, b: &KForm) -> Result<KForm, ExteriorError> {
    if a.dim != b.dim {
        return Err(ExteriorError::DimensionMismatch(a.dim, b.dim));
    }
    let degree = a.degree + b.degree;
    if degree > a.dim {
        return Err(ExteriorError::DegreeTooLarge { degree, dim: a.dim });
    }
    let mut out = KForm::zero(a.dim, degree);
    for (i, x) in a.terms() {
        for (j, y) in b.terms() {
            if let Some(s) = wedge_sign(i, j) {
                let p = x * y;
                let p = if s < 0 { -p } else { p };
                out.add_term(MultiIndex(i.0 | j.0), &p);
            }
        }
    }
    Ok(out)
}

pub fn hodge_star(a: &KForm) -> KForm {
    let mut out = KForm::zero(a.dim, a.dim - a.degree);
    for (i, c) in a.terms() {
        let j = i.complement(a.dim);
        let s = wedge_sign(i, j).expect("complement is disjoint");
        out.add_term(j, &if s < 0 { -c } else { c.clone() });
    }
    out
}

pub fn pairing(a: &KForm, b: &KForm) -> Result<CycNum, ExteriorError> {
    a.check_same(b)?;
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let mut acc = CycNum::zero();
    for (i, c) in small.terms() {
        if let Some(d) = large.coeffs.get(&i) {
            acc.add_mul(c, d);
        }
    }
    Ok(acc)
}

fn check_square(m: &CycMatrix, dim: usize) -> Result<(), ExteriorError> {
    if m.rows() != dim || m.cols() != dim {
        return Err(ExteriorError::MatrixShape(dim));
    }
    Ok(())
}

/// Derivation action `R·(v₁∧…∧v_k) = Σ v₁∧…∧Rv_j∧…∧v_k`.
pub fn algebra_action(r: &CycMatrix, a: &KForm) -> Result<KForm, ExteriorError> {
    let dim = a.dim;
    check_square(r, dim)?;
    let mut out = KForm::zero(dim, a.degree);
    for (idx, c) in a.terms() {
        for j in idx.indices() {
            for k in 1..=dim {
                let rkj = &r[(k - 1, j - 1)];
                if rkj.is_zero() {
                    continue;
                }
                if k == j {
                    out.add_term(idx, &(c * rkj));
                    continue;
                }
                if idx.contains(k) {
                    continue;
                }
                let (lo, hi) = if j < k { (j, k) } else { (k, j) };
                let between = idx.0 & (full_mask(hi - 1) & !full_mask(lo));
                let term = c * rkj;
                let term = if between.count_ones().is_multiple_of(2) { term } else { -term };
                let moved = MultiIndex((idx.0 & !(1 << (j - 1))) | (1 << (k - 1)));
                out.add_term(moved, &term);
            }
        }
    }
    Ok(out)
}

/// `A·(v₁∧…∧v_k) = Av₁∧…∧Av_k` for invertible `A`.
pub fn group_action(a: &CycMatrix, f: &KForm) -> Result<KForm, ExteriorError> {
    let dim = f.dim;
    check_square(a, dim)?;
    if a.determinant().map_err(|_| ExteriorError::Singular)?.is_zero() {
        return Err(ExteriorError::Singular);
    }
    group_action_unchecked(a, f)
}

/// [`group_action`] without the invertibility check; callers vouch for `A`.
pub(crate) fn group_action_unchecked(a: &CycMatrix, f: &KForm) -> Result<KForm, ExteriorError> {
    let dim = f.dim;
    check_square(a, dim)?;
    let images: Vec<KForm> = (0..dim).map(|j| KForm::one_form(&a.column(j))).collect();
    let mut out = KForm::zero(dim, f.degree);
    for (idx, c) in f.terms() {
        let mut acc = KForm::scalar(dim, c.clone());
        for j in idx.indices() {
            acc = wedge(&acc, &images[j - 1])?;
        }
        for (k, v) in acc.terms() {
            out.add_term(k, v);
        }
    }
    Ok(out)
}
