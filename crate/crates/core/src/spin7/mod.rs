//! Spin(7) linear algebra on R⁸.
//!
//! Two-forms are stored as 28-vectors on the lexicographic pairs `12, 13, …, 78`.

mod clifford;
pub mod verify;

use std::sync::OnceLock;

use crate::exterior::{basis_indices, hodge_star, wedge, KForm, MultiIndex};
use crate::field::{rational_eigenspaces, CycMatrix, CycNum};

pub use clifford::{
    build_gamma, clifford_two_form_map, compatible_spinors, default_spinor, deformation_symbol,
    dirac_symbol, spinor_isos, symbol_compare, GammaRep, SpinorIsos, SymbolMatch, UnitSpinor,
    GAMMA_WORDS,
};

pub const PAIRS: usize = 28;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Spin7Error {
    #[error("covector must be nonzero")]
    ZeroCovector,
    #[error("kernel mismatch: the Clifford kernel of Λ² → S⁺ is not Λ²₂₁")]
    KernelMismatch,
    #[error("no intertwiner: {0}")]
    NoIntertwiner(String),
    #[error("convention bug: π₇(F) = 0 and ∗(F∧Ω) = −F disagree")]
    ConventionBug,
    #[error("coefficient for pair {0} is not anti-hermitian and traceless")]
    NotAntiHermitian(String),
    #[error("bad spinor: {0}")]
    BadSpinor(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
}

/// The 28 increasing pairs in lexicographic order.
pub fn pairs() -> &'static [MultiIndex] {
    static P: OnceLock<Vec<MultiIndex>> = OnceLock::new();
    P.get_or_init(|| basis_indices(8, 2))
}

pub fn pair_index(a: usize, b: usize) -> Option<usize> {
    let idx = MultiIndex::new(&[a, b]).ok()?;
    pairs().iter().position(|p| *p == idx)
}

/// The Cayley 4-form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyForm {
    form: KForm,
}

const CAYLEY_TERMS: [(i64, [usize; 4]); 14] = [
    (1, [1, 2, 3, 4]),
    (-1, [1, 2, 7, 8]),
    (-1, [1, 6, 3, 8]),
    (-1, [1, 6, 7, 4]),
    (1, [1, 5, 2, 6]),
    (1, [1, 5, 3, 7]),
    (1, [1, 5, 4, 8]),
    (1, [5, 6, 7, 8]),
    (-1, [5, 6, 3, 4]),
    (-1, [5, 2, 7, 4]),
    (-1, [5, 2, 3, 8]),
    (1, [3, 7, 4, 8]),
    (1, [2, 6, 4, 8]),
    (1, [2, 6, 3, 7]),
];

impl CayleyForm {
    pub fn form(&self) -> &KForm {
        &self.form
    }
}

pub fn cayley_form() -> &'static CayleyForm {
    static OMEGA: OnceLock<CayleyForm> = OnceLock::new();
    OMEGA.get_or_init(|| {
        let mut form = KForm::zero(8, 4);
        for (s, idx) in CAYLEY_TERMS {
            let (p, m) = MultiIndex::sorted(&idx).expect("distinct indices");
            form.add_term(m, &CycNum::from_int(s * p));
        }
        CayleyForm { form }
    })
}

fn two_form(v: &[CycNum]) -> KForm {
    KForm::from_vector(8, 2, pairs(), v)
}

/// `L(F) = ∗(F ∧ Ω)` evaluated directly on a scalar 2-form vector.
pub fn l_omega_apply(v: &[CycNum]) -> Vec<CycNum> {
    let f = two_form(v);
    let w = wedge(&f, cayley_form().form()).expect("2 + 4 ≤ 8");
    hodge_star(&w).to_vector(pairs())
}

/// The matrix of `L` on the pair basis.
pub fn l_omega_matrix() -> &'static CycMatrix {
    static L: OnceLock<CycMatrix> = OnceLock::new();
    L.get_or_init(|| {
        let cols: Vec<Vec<CycNum>> = (0..PAIRS)
            .map(|j| {
                let mut e = vec![CycNum::zero(); PAIRS];
                e[j] = CycNum::one();
                l_omega_apply(&e)
            })
            .collect();
        CycMatrix::from_columns(PAIRS, &cols)
    })
}

/// The two projectors together with the eigenbases they were assembled from.
#[derive(Debug, Clone)]
pub struct Projectors {
    pub pi7: CycMatrix,
    pub pi21: CycMatrix,
    /// Basis of Λ²₇ (eigenvalue 3 of `L`).
    pub basis7: Vec<Vec<CycNum>>,
    /// Basis of Λ²₂₁ (eigenvalue −1 of `L`).
    pub basis21: Vec<Vec<CycNum>>,
    /// Coordinates in `basis7` of the Λ²₇ component: the first 7 rows of `P⁻¹`.
    pub coords7: CycMatrix,
}

/// Builds the projectors from the exact eigendecomposition of `L`.
pub fn projectors() -> &'static Projectors {
    static P: OnceLock<Projectors> = OnceLock::new();
    P.get_or_init(|| {
        let spaces = rational_eigenspaces(l_omega_matrix()).expect("L has rational spectrum");
        let find = |v: i64| {
            spaces
                .iter()
                .find(|s| s.value == num_rational::BigRational::from_integer(v.into()))
                .map(|s| s.basis.clone())
                .expect("eigenvalues 3 and −1")
        };
        let (basis7, basis21) = (find(3), find(-1));
        assert_eq!((basis7.len(), basis21.len()), (7, 21));
        let cols: Vec<Vec<CycNum>> = basis7.iter().chain(&basis21).cloned().collect();
        let p = CycMatrix::from_columns(PAIRS, &cols);
        let p_inv = p.inverse().expect("eigenbasis spans");
        let select = |range: std::ops::Range<usize>| {
            let mut d = CycMatrix::zeros(PAIRS, PAIRS);
            for k in range {
                d[(k, k)] = CycNum::one();
            }
            &(&p * &d) * &p_inv
        };
        let rows7: Vec<usize> = (0..7).collect();
        let all: Vec<usize> = (0..PAIRS).collect();
        Projectors {
            pi7: select(0..7),
            pi21: select(7..PAIRS),
            coords7: p_inv.submatrix(&rows7, &all),
            basis7,
            basis21,
        }
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Part {
    Seven,
    TwentyOne,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Coeffs {
    Scalar(Vec<CycNum>),
    Lie { d: usize, mats: Vec<CycMatrix> },
}

/// A 2-form on R⁸ with scalar or matrix-valued coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoForm8 {
    coeffs: Coeffs,
}

impl TwoForm8 {
    pub fn zero() -> Self {
        TwoForm8::scalar(vec![CycNum::zero(); PAIRS]).expect("28 entries")
    }

    pub fn scalar(v: Vec<CycNum>) -> Result<Self, Spin7Error> {
        if v.len() != PAIRS {
            return Err(Spin7Error::Shape(format!("expected 28 coefficients, got {}", v.len())));
        }
        Ok(TwoForm8 {
            coeffs: Coeffs::Scalar(v),
        })
    }

    /// Matrix-valued coefficients; each must be anti-hermitian with trace 0.
    pub fn lie_valued(mats: Vec<CycMatrix>) -> Result<Self, Spin7Error> {
        if mats.len() != PAIRS {
            return Err(Spin7Error::Shape(format!("expected 28 coefficients, got {}", mats.len())));
        }
        let d = mats.first().map_or(0, CycMatrix::rows);
        if d == 0 {
            return Err(Spin7Error::Shape("empty coefficient matrix".into()));
        }
        for (m, p) in mats.iter().zip(pairs()) {
            if m.rows() != d || m.cols() != d {
                return Err(Spin7Error::Shape(format!("coefficients must all be {d}x{d}")));
            }
            if m.adjoint() != -m || !m.trace().is_zero() {
                let ix = p.indices();
                return Err(Spin7Error::NotAntiHermitian(format!("{}{}", ix[0], ix[1])));
            }
        }
        Ok(TwoForm8 {
            coeffs: Coeffs::Lie { d, mats },
        })
    }

    pub fn from_kform(f: &KForm) -> Result<Self, Spin7Error> {
        if f.dim() != 8 || f.degree() != 2 {
            return Err(Spin7Error::Shape("expected a 2-form on R^8".into()));
        }
        TwoForm8::scalar(f.to_vector(pairs()))
    }

    /// `None` for scalar forms, the coefficient size otherwise.
    pub fn lie_dim(&self) -> Option<usize> {
        match &self.coeffs {
            Coeffs::Scalar(_) => None,
            Coeffs::Lie { d, .. } => Some(*d),
        }
    }

    pub fn scalar_coeffs(&self) -> Option<&[CycNum]> {
        match &self.coeffs {
            Coeffs::Scalar(v) => Some(v),
            Coeffs::Lie { .. } => None,
        }
    }

    pub fn matrix_coeffs(&self) -> Option<&[CycMatrix]> {
        match &self.coeffs {
            Coeffs::Scalar(_) => None,
            Coeffs::Lie { mats, .. } => Some(mats),
        }
    }

    pub fn to_kform(&self) -> Option<KForm> {
        self.scalar_coeffs().map(two_form)
    }

    pub fn is_zero(&self) -> bool {
        match &self.coeffs {
            Coeffs::Scalar(v) => v.iter().all(CycNum::is_zero),
            Coeffs::Lie { mats, .. } => mats.iter().all(CycMatrix::is_zero),
        }
    }

    /// Scalar component forms: one for a scalar form, `d²` (one per matrix slot) otherwise.
    pub fn components(&self) -> Vec<Vec<CycNum>> {
        match &self.coeffs {
            Coeffs::Scalar(v) => vec![v.clone()],
            Coeffs::Lie { d, mats } => (0..d * d)
                .map(|s| mats.iter().map(|m| m[(s / d, s % d)].clone()).collect())
                .collect(),
        }
    }

    /// Applies a 28×28 matrix to the coefficient vector, slotwise for matrix coefficients.
    pub fn apply(&self, m: &CycMatrix) -> TwoForm8 {
        let coeffs = match &self.coeffs {
            Coeffs::Scalar(v) => Coeffs::Scalar(m.mul_vec(v)),
            Coeffs::Lie { d, mats } => {
                let out = (0..PAIRS)
                    .map(|i| {
                        let mut acc = CycMatrix::zeros(*d, *d);
                        for (j, f) in mats.iter().enumerate() {
                            let c = &m[(i, j)];
                            if !c.is_zero() {
                                acc = &acc + &f.scale(c);
                            }
                        }
                        acc
                    })
                    .collect();
                Coeffs::Lie { d: *d, mats: out }
            }
        };
        TwoForm8 { coeffs }
    }

    pub fn add(&self, other: &TwoForm8) -> Result<TwoForm8, Spin7Error> {
        self.combine(other, |a, b| a + b, |a, b| a + b)
    }

    pub fn sub(&self, other: &TwoForm8) -> Result<TwoForm8, Spin7Error> {
        self.combine(other, |a, b| a - b, |a, b| a - b)
    }

    fn combine(
        &self,
        other: &TwoForm8,
        f: impl Fn(&CycNum, &CycNum) -> CycNum,
        g: impl Fn(&CycMatrix, &CycMatrix) -> CycMatrix,
    ) -> Result<TwoForm8, Spin7Error> {
        let coeffs = match (&self.coeffs, &other.coeffs) {
            (Coeffs::Scalar(a), Coeffs::Scalar(b)) => {
                Coeffs::Scalar(a.iter().zip(b).map(|(x, y)| f(x, y)).collect())
            }
            (Coeffs::Lie { d, mats: a }, Coeffs::Lie { d: e, mats: b }) if d == e => Coeffs::Lie {
                d: *d,
                mats: a.iter().zip(b).map(|(x, y)| g(x, y)).collect(),
            },
            _ => return Err(Spin7Error::Shape("incompatible coefficient types".into())),
        };
        Ok(TwoForm8 { coeffs })
    }

    /// `Σ_{a<b} ⟨F_ab, F_ab⟩` with the hermitian inner product on coefficients.
    pub fn norm_squared(&self) -> CycNum {
        let mut t = CycNum::zero();
        for comp in self.components() {
            for c in &comp {
                t.add_mul(c, &c.conj());
            }
        }
        t
    }
}

pub fn project(f: &TwoForm8, part: Part) -> TwoForm8 {
    let p = projectors();
    f.apply(match part {
        Part::Seven => &p.pi7,
        Part::TwentyOne => &p.pi21,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstantonCheck {
    pub is_instanton: bool,
    pub residual: TwoForm8,
}

/// Tests `π₇(F) = 0` and `∗(F∧Ω) = −F` separately and insists they agree.
pub fn instanton_check(f: &TwoForm8) -> Result<InstantonCheck, Spin7Error> {
    let residual = project(f, Part::Seven);
    let by_projector = residual.is_zero();
    let by_star = f.components().iter().all(|v| {
        l_omega_apply(v)
            .iter()
            .zip(v)
            .all(|(l, x)| (l + x).is_zero())
    });
    if by_projector != by_star {
        return Err(Spin7Error::ConventionBug);
    }
    Ok(InstantonCheck {
        is_instanton: by_projector,
        residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(k: usize) -> Vec<CycNum> {
        let mut v = vec![CycNum::zero(); PAIRS];
        v[k] = CycNum::one();
        v
    }

    #[test]
    fn cayley_form_terms() {
        let om = cayley_form().form();
        assert_eq!(om.len(), 14);
        let c = |ix: &[usize]| om.coeff(MultiIndex::new(ix).unwrap());
        assert_eq!(c(&[1, 2, 3, 4]), CycNum::one());
        assert_eq!(c(&[5, 6, 7, 8]), CycNum::one());
        assert!(om.terms().all(|(_, v)| v.is_one() || (-v).is_one()));
        assert_eq!(&hodge_star(om), om);
    }

    #[test]
    fn l_of_dx12() {
        let l = l_omega_apply(&e(pair_index(1, 2).unwrap()));
        let support: Vec<usize> = (0..PAIRS).filter(|&k| !l[k].is_zero()).collect();
        let expected: Vec<usize> = [(3, 4), (5, 6), (7, 8)]
            .iter()
            .map(|&(a, b)| pair_index(a, b).unwrap())
            .collect();
        assert_eq!(support, expected);
        for k in support {
            assert!(l[k].is_one() || (-&l[k]).is_one());
        }
    }

    #[test]
    fn l_is_symmetric_traceless() {
        let l = l_omega_matrix();
        assert_eq!(&l.transpose(), l);
        assert!(l.trace().is_zero());
        assert!(l.is_rational());
        let minus3 = l - &CycMatrix::scalar(PAIRS, &CycNum::from_int(3));
        let (rank, ker) = minus3.rank_kernel();
        assert_eq!((rank, ker.len()), (21, 7));
    }

    #[test]
    fn projectors_match_the_closed_form() {
        let p = projectors();
        let l = l_omega_matrix();
        let id = CycMatrix::identity(PAIRS);
        let quarter = CycNum::frac(1, 4);
        assert_eq!(p.pi7, (l + &id).scale(&quarter));
        assert_eq!(p.pi21, (&id.scale(&CycNum::from_int(3)) - l).scale(&quarter));
        assert_eq!(p.pi7.rank(), 7);
        assert_eq!(&p.pi7 * &p.pi7, p.pi7);
        assert!((&p.pi7 * &p.pi21).is_zero());
    }

    #[test]
    fn eigenvectors_project_to_themselves() {
        let p = projectors();
        for v in &p.basis7 {
            let f = TwoForm8::scalar(v.clone()).unwrap();
            assert_eq!(project(&f, Part::Seven), f);
            let chk = instanton_check(&f).unwrap();
            assert!(!chk.is_instanton);
            assert_eq!(chk.residual, f);
        }
        for v in &p.basis21 {
            let f = TwoForm8::scalar(v.clone()).unwrap();
            assert!(instanton_check(&f).unwrap().is_instanton);
        }
        assert!(instanton_check(&TwoForm8::zero()).unwrap().is_instanton);
    }

    #[test]
    fn lie_valued_validation() {
        let i = CycNum::i();
        let mut good = CycMatrix::zeros(2, 2);
        good[(0, 0)] = i.clone();
        good[(1, 1)] = -&i;
        let mut mats = vec![CycMatrix::zeros(2, 2); PAIRS];
        mats[3] = good.clone();
        let f = TwoForm8::lie_valued(mats.clone()).unwrap();
        assert_eq!(f.components().len(), 4);
        mats[5] = CycMatrix::identity(2);
        assert!(matches!(TwoForm8::lie_valued(mats), Err(Spin7Error::NotAntiHermitian(_))));
        assert_eq!(f.norm_squared(), CycNum::from_int(2));
    }
}
