//! The 248-dimensional model `sl(9,C) ⊕ Λ³(C⁹) ⊕ Λ³(C⁹)` of the complex E8 Lie algebra.
//!
//! An element is a triple `(R, x, y)` with `R` a traceless 9×9 matrix and `x`, `y`
//! three-forms on C⁹. The bracket is
//!
//! ```text
//! R = [R₁,R₂] + x₁×y₂ − x₂×y₁
//! x = R₁·x₂ − R₂·x₁ + ⋆(y₁∧y₂)
//! y = −R₁ᵗ·y₂ + R₂ᵗ·y₁ − ⋆(x₁∧x₂)
//! ```
//!
//! where `(x×y)(u) = ⋆(y ∧ ⋆(x∧u)) + ⅔(x,y)u` and the actions on forms are the
//! derivation actions of [`crate::exterior`].

mod auto;
mod basis;
mod compact;
mod table;
pub mod verify;

pub use auto::{phased_permutation, phi_act, phi_images, random_phased_permutation, sigma, tau_hat, w_apply};
pub use basis::{basis_element, basis_kind, grade, BasisKind, Grade, DIM, SL9_DIM, THREE_FORMS};
pub use compact::{compact_form_basis, CompactForm};
pub use table::{BracketTable, SparseVec};

use std::sync::OnceLock;

use crate::exterior::{algebra_action, basis_indices, hodge_star, pairing, wedge, KForm, MultiIndex};
use crate::field::{CycMatrix, CycNum};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum E8Error {
    #[error("matrix component must be a traceless 9x9 matrix")]
    NotTraceless,
    #[error("form components must be 3-forms on C^9")]
    BadForm,
    #[error("not special unitary")]
    NotSpecialUnitary,
    #[error("vector must have 248 coordinates")]
    BadVector,
    #[error("not an automorphism: {0}")]
    NotAnAutomorphism(String),
}

/// The lexicographic basis of Λ³(C⁹) and its inverse lookup by bitmask.
pub(crate) fn three_form_basis() -> &'static (Vec<MultiIndex>, Vec<Option<usize>>) {
    static CELL: OnceLock<(Vec<MultiIndex>, Vec<Option<usize>>)> = OnceLock::new();
    CELL.get_or_init(|| {
        let b = basis_indices(9, 3);
        let mut pos = vec![None; 1 << 9];
        for (k, m) in b.iter().enumerate() {
            pos[m.mask() as usize] = Some(k);
        }
        (b, pos)
    })
}

/// An element `R ⊕ x ⊕ y` of the model.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct E8Elem {
    r: CycMatrix,
    x: KForm,
    y: KForm,
}

impl E8Elem {
    pub fn new(r: CycMatrix, x: KForm, y: KForm) -> Result<Self, E8Error> {
        if r.rows() != 9 || r.cols() != 9 || !r.trace().is_zero() {
            return Err(E8Error::NotTraceless);
        }
        for f in [&x, &y] {
            if f.dim() != 9 || f.degree() != 3 {
                return Err(E8Error::BadForm);
            }
        }
        Ok(E8Elem { r, x, y })
    }

    pub(crate) fn new_unchecked(r: CycMatrix, x: KForm, y: KForm) -> Self {
        debug_assert!(r.trace().is_zero());
        E8Elem { r, x, y }
    }

    pub fn zero() -> Self {
        E8Elem {
            r: CycMatrix::zeros(9, 9),
            x: KForm::zero(9, 3),
            y: KForm::zero(9, 3),
        }
    }

    pub fn from_matrix(r: CycMatrix) -> Result<Self, E8Error> {
        Self::new(r, KForm::zero(9, 3), KForm::zero(9, 3))
    }

    pub fn from_x(x: KForm) -> Result<Self, E8Error> {
        Self::new(CycMatrix::zeros(9, 9), x, KForm::zero(9, 3))
    }

    pub fn from_y(y: KForm) -> Result<Self, E8Error> {
        Self::new(CycMatrix::zeros(9, 9), KForm::zero(9, 3), y)
    }

    pub fn r(&self) -> &CycMatrix {
        &self.r
    }

    pub fn x(&self) -> &KForm {
        &self.x
    }

    pub fn y(&self) -> &KForm {
        &self.y
    }

    pub fn is_zero(&self) -> bool {
        self.r.is_zero() && self.x.is_zero() && self.y.is_zero()
    }

    pub fn add(&self, other: &E8Elem) -> E8Elem {
        E8Elem {
            r: &self.r + &other.r,
            x: self.x.try_add(&other.x).expect("same shape"),
            y: self.y.try_add(&other.y).expect("same shape"),
        }
    }

    pub fn sub(&self, other: &E8Elem) -> E8Elem {
        E8Elem {
            r: &self.r - &other.r,
            x: self.x.try_sub(&other.x).expect("same shape"),
            y: self.y.try_sub(&other.y).expect("same shape"),
        }
    }

    pub fn scale(&self, s: &CycNum) -> E8Elem {
        E8Elem {
            r: self.r.scale(s),
            x: self.x.scale(s),
            y: self.y.scale(s),
        }
    }

    /// Coordinates in the canonical basis (see [`basis_element`]).
    pub fn to_coords(&self) -> Vec<CycNum> {
        let mut v = vec![CycNum::zero(); DIM];
        for i in 0..9 {
            for j in 0..9 {
                if i != j {
                    v[basis::offdiag_index(i, j)] = self.r[(i, j)].clone();
                }
            }
        }
        // R = Σ c_k (E_kk − E_{k+1,k+1})  ⇒  c_k = d_1 + … + d_k
        let mut partial = CycNum::zero();
        for k in 0..8 {
            partial += &self.r[(k, k)];
            v[72 + k] = partial.clone();
        }
        let (b, _) = three_form_basis();
        for (k, idx) in b.iter().enumerate() {
            v[SL9_DIM + k] = self.x.coeff(*idx);
            v[SL9_DIM + THREE_FORMS + k] = self.y.coeff(*idx);
        }
        v
    }

    pub fn from_coords(v: &[CycNum]) -> Result<E8Elem, E8Error> {
        if v.len() != DIM {
            return Err(E8Error::BadVector);
        }
        let mut r = CycMatrix::zeros(9, 9);
        for i in 0..9 {
            for j in 0..9 {
                if i != j {
                    r[(i, j)] = v[basis::offdiag_index(i, j)].clone();
                }
            }
        }
        for k in 0..8 {
            r[(k, k)] += &v[72 + k];
            r[(k + 1, k + 1)] -= &v[72 + k];
        }
        let (b, _) = three_form_basis();
        let x = KForm::from_vector(9, 3, b, &v[SL9_DIM..SL9_DIM + THREE_FORMS]);
        let y = KForm::from_vector(9, 3, b, &v[SL9_DIM + THREE_FORMS..]);
        Ok(E8Elem { r, x, y })
    }

    pub fn to_sparse(&self) -> SparseVec {
        SparseVec::from_dense(&self.to_coords())
    }

    pub fn from_sparse(v: &SparseVec) -> E8Elem {
        E8Elem::from_coords(&v.to_dense(DIM)).expect("248 coordinates")
    }
}

/// The cross product `Λ³ × Λ³ → sl(9)`.
pub fn cross(x: &KForm, y: &KForm) -> CycMatrix {
    let mut m = CycMatrix::zeros(9, 9);
    if x.is_zero() || y.is_zero() {
        return m;
    }
    for u in 1..=9 {
        let du = KForm::basis(9, &[u]).expect("valid index");
        let inner = hodge_star(&wedge(x, &du).expect("degree 4"));
        let col = hodge_star(&wedge(y, &inner).expect("degree 8"));
        for (idx, c) in col.terms() {
            let k = idx.indices()[0];
            m[(k - 1, u - 1)] += c;
        }
    }
    let p = pairing(x, y).expect("both 3-forms");
    if !p.is_zero() {
        let d = &p * &CycNum::frac(2, 3);
        for u in 0..9 {
            m[(u, u)] += &d;
        }
    }
    m
}

pub fn bracket(a: &E8Elem, b: &E8Elem) -> E8Elem {
    let mut r = a.r.commutator(&b.r);
    if !a.x.is_zero() && !b.y.is_zero() {
        r = &r + &cross(&a.x, &b.y);
    }
    if !b.x.is_zero() && !a.y.is_zero() {
        r = &r - &cross(&b.x, &a.y);
    }

    let act = |m: &CycMatrix, f: &KForm| algebra_action(m, f).expect("9x9 on C^9");
    let mut x = act(&a.r, &b.x)
        .try_sub(&act(&b.r, &a.x))
        .expect("3-forms");
    if !a.y.is_zero() && !b.y.is_zero() {
        x = x
            .try_add(&hodge_star(&wedge(&a.y, &b.y).expect("degree 6")))
            .expect("3-forms");
    }

    let mut y = act(&b.r.transpose(), &a.y)
        .try_sub(&act(&a.r.transpose(), &b.y))
        .expect("3-forms");
    if !a.x.is_zero() && !b.x.is_zero() {
        y = y
            .try_sub(&hodge_star(&wedge(&a.x, &b.x).expect("degree 6")))
            .expect("3-forms");
    }
    E8Elem::new_unchecked(r, x, y)
}

/// `60 (tr(R₁R₂) + (x₁,y₂) + (x₂,y₁))`.
pub fn killing(a: &E8Elem, b: &E8Elem) -> CycNum {
    let mut t = CycNum::zero();
    for i in 0..9 {
        for j in 0..9 {
            t.add_mul(&a.r[(i, j)], &b.r[(j, i)]);
        }
    }
    t += &pairing(&a.x, &b.y).expect("3-forms");
    t += &pairing(&b.x, &a.y).expect("3-forms");
    &t * &CycNum::from_int(60)
}

/// The 248×248 matrix of `ad X` in the canonical basis, column `j` being `[X, e_j]`.
pub fn ad_matrix(x: &E8Elem) -> CycMatrix {
    let cols: Vec<Vec<CycNum>> = (0..DIM)
        .map(|j| bracket(x, &basis_element(j)).to_coords())
        .collect();
    CycMatrix::from_columns(DIM, &cols)
}
