//! The real Cl(8) module R¹⁶ = S⁺ ⊕ S⁻ and the two symbols it intertwines.

use super::{pair_index, pairs, projectors, Spin7Error, PAIRS};
use crate::field::{CycMatrix, CycNum};

/// Generators as signed Kronecker words over `1`, `x = σ₁`, `z = σ₃`, `e = [[0,1],[−1,0]]`;
/// the first letter is the most significant factor.
pub const GAMMA_WORDS: [(i64, &str); 8] = [
    (1, "111e"),
    (1, "11ex"),
    (-1, "1xez"),
    (1, "1e1z"),
    (1, "xzez"),
    (1, "ez1z"),
    (1, "xezx"),
    (1, "xexx"),
];

fn letter(c: char) -> CycMatrix {
    match c {
        '1' => CycMatrix::identity(2),
        'x' => CycMatrix::from_int_rows(&[&[0, 1], &[1, 0]]),
        'z' => CycMatrix::from_int_rows(&[&[1, 0], &[0, -1]]),
        'e' => CycMatrix::from_int_rows(&[&[0, 1], &[-1, 0]]),
        _ => unreachable!("gamma words use 1, x, z, e"),
    }
}

fn word(sign: i64, w: &str) -> CycMatrix {
    let m = w
        .chars()
        .fold(CycMatrix::identity(1), |acc, c| acc.kron(&letter(c)));
    m.scale(&CycNum::from_int(sign))
}

/// Eight anticommuting generators with `γᵢ² = −1` and the chirality splitting.
#[derive(Debug, Clone)]
pub struct GammaRep {
    pub gammas: Vec<CycMatrix>,
    pub volume: CycMatrix,
    pub plus: Vec<usize>,
    pub minus: Vec<usize>,
}

/// Builds the representation and checks every invariant exactly.
pub fn build_gamma() -> GammaRep {
    let gammas: Vec<CycMatrix> = GAMMA_WORDS.iter().map(|&(s, w)| word(s, w)).collect();
    let id = CycMatrix::identity(16);
    for (i, a) in gammas.iter().enumerate() {
        for (j, b) in gammas.iter().enumerate() {
            let anti = &(a * b) + &(b * a);
            let want = if i == j { id.scale(&CycNum::from_int(-2)) } else { CycMatrix::zeros(16, 16) };
            assert_eq!(anti, want, "Clifford relation for ({i}, {j})");
        }
    }
    let volume = gammas.iter().fold(id.clone(), |acc, g| &acc * g);
    assert_eq!(&volume * &volume, id);
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for k in 0..16 {
        for l in 0..16 {
            assert!(k == l || volume[(k, l)].is_zero(), "volume element is diagonal");
        }
        if volume[(k, k)].is_one() {
            plus.push(k);
        } else {
            minus.push(k);
        }
    }
    assert_eq!((plus.len(), minus.len()), (8, 8));
    for g in &gammas {
        assert!(g.submatrix(&plus, &plus).is_zero() && g.submatrix(&minus, &minus).is_zero());
    }
    GammaRep {
        gammas,
        volume,
        plus,
        minus,
    }
}

impl GammaRep {
    /// Clifford multiplication `c(ξ) = Σ ξᵢ γᵢ`.
    pub fn clifford(&self, xi: &[CycNum]) -> CycMatrix {
        let mut m = CycMatrix::zeros(16, 16);
        for (g, c) in self.gammas.iter().zip(xi) {
            if !c.is_zero() {
                m = &m + &g.scale(c);
            }
        }
        m
    }

    /// `ρ(F) = Σ_{a<b} F_ab γ_a γ_b`.
    pub fn two_form_action(&self, f: &[CycNum]) -> CycMatrix {
        let mut m = CycMatrix::zeros(16, 16);
        for (p, c) in pairs().iter().zip(f) {
            if !c.is_zero() {
                let ix = p.indices();
                m = &m + &(&self.gammas[ix[0] - 1] * &self.gammas[ix[1] - 1]).scale(c);
            }
        }
        m
    }

    fn restrict(&self, v: &[CycNum], set: &[usize]) -> Vec<CycNum> {
        set.iter().map(|&k| v[k].clone()).collect()
    }

    fn embed_plus(&self, v: &[CycNum]) -> Vec<CycNum> {
        let mut out = vec![CycNum::zero(); 16];
        for (&k, c) in self.plus.iter().zip(v) {
            out[k] = c.clone();
        }
        out
    }
}

/// A unit spinor in S⁺, stored in S⁺ coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitSpinor {
    eta: Vec<CycNum>,
}

impl UnitSpinor {
    pub fn new(plus_coords: Vec<CycNum>) -> Result<Self, Spin7Error> {
        if plus_coords.len() != 8 {
            return Err(Spin7Error::BadSpinor("expected 8 S+ coordinates".into()));
        }
        let mut n = CycNum::zero();
        for c in &plus_coords {
            n.add_mul(c, &c.conj());
        }
        if !n.is_one() {
            return Err(Spin7Error::BadSpinor(format!("(eta, eta) = {n}, expected 1")));
        }
        Ok(UnitSpinor { eta: plus_coords })
    }

    pub fn plus_coords(&self) -> &[CycNum] {
        &self.eta
    }

    pub fn full(&self, rep: &GammaRep) -> Vec<CycNum> {
        rep.embed_plus(&self.eta)
    }
}

/// The 8×28 map `e_a ∧ e_b ↦ c(e_a)c(e_b)η`, in S⁺ coordinates.
pub fn clifford_two_form_map(rep: &GammaRep, eta: &UnitSpinor) -> CycMatrix {
    let full = eta.full(rep);
    let cols: Vec<Vec<CycNum>> = pairs()
        .iter()
        .map(|p| {
            let ix = p.indices();
            let g = &rep.gammas[ix[0] - 1] * &rep.gammas[ix[1] - 1];
            rep.restrict(&g.mul_vec(&full), &rep.plus)
        })
        .collect();
    CycMatrix::from_columns(8, &cols)
}

/// Basis of the S⁺ spinors annihilated by `ρ(F)` for every `F ∈ Λ²₂₁`.
pub fn compatible_spinors(rep: &GammaRep) -> Vec<Vec<CycNum>> {
    let mut rows: Vec<Vec<CycNum>> = Vec::new();
    for f in &projectors().basis21 {
        let m = rep.two_form_action(f).submatrix(&rep.plus, &rep.plus);
        rows.extend((0..8).map(|i| m.row(i).to_vec()));
    }
    CycMatrix::from_rows(rows).expect("8 columns").rank_kernel().1
}

/// The first S⁺ basis vector if it is compatible with Ω, otherwise a unit vector
/// from [`compatible_spinors`].
pub fn default_spinor(rep: &GammaRep) -> Result<UnitSpinor, Spin7Error> {
    let mut e0 = vec![CycNum::zero(); 8];
    e0[0] = CycNum::one();
    let first = UnitSpinor::new(e0)?;
    if spinor_isos(rep, &first).is_ok() {
        return Ok(first);
    }
    for v in compatible_spinors(rep) {
        let mut n = CycNum::zero();
        for c in &v {
            n.add_mul(c, &c.conj());
        }
        // rescale only when 1/√n stays in the field
        if let Some(r) = n.as_rational() {
            let (p, q) = (r.numer().sqrt(), r.denom().sqrt());
            if &(&p * &p) == r.numer() && &(&q * &q) == r.denom() {
                let s = CycNum::from_rational(num_rational::BigRational::new(q, p));
                let eta = UnitSpinor::new(v.iter().map(|c| c * &s).collect())?;
                if spinor_isos(rep, &eta).is_ok() {
                    return Ok(eta);
                }
            }
        }
    }
    Err(Spin7Error::KernelMismatch)
}

/// `S⁻ ≅ Λ¹` and `S⁺ ≅ R ⊕ Λ²₇`, as matrices into chiral coordinates.
#[derive(Debug, Clone)]
pub struct SpinorIsos {
    /// Column `j` is `c(e_j)η` in S⁻ coordinates.
    pub iso_minus: CycMatrix,
    /// Column 0 is `η`; column `1 + i` is the image of the `i`-th Λ²₇ basis form.
    pub iso_plus: CycMatrix,
    pub clifford_kernel: Vec<Vec<CycNum>>,
}

pub fn spinor_isos(rep: &GammaRep, eta: &UnitSpinor) -> Result<SpinorIsos, Spin7Error> {
    let full = eta.full(rep);
    let minus_cols: Vec<Vec<CycNum>> = (0..8)
        .map(|j| rep.restrict(&rep.gammas[j].mul_vec(&full), &rep.minus))
        .collect();
    let iso_minus = CycMatrix::from_columns(8, &minus_cols);
    if iso_minus.rank() != 8 {
        return Err(Spin7Error::BadSpinor("c(·)η is not injective".into()));
    }
    let cmap = clifford_two_form_map(rep, eta);
    let (_, kernel) = cmap.rank_kernel();
    let p = projectors();
    if kernel.len() != 21 || !same_span(&kernel, &p.basis21) {
        return Err(Spin7Error::KernelMismatch);
    }
    let mut plus_cols = vec![eta.plus_coords().to_vec()];
    plus_cols.extend(p.basis7.iter().map(|v| cmap.mul_vec(v)));
    let iso_plus = CycMatrix::from_columns(8, &plus_cols);
    if iso_plus.rank() != 8 {
        return Err(Spin7Error::KernelMismatch);
    }
    Ok(SpinorIsos {
        iso_minus,
        iso_plus,
        clifford_kernel: kernel,
    })
}

fn same_span(a: &[Vec<CycNum>], b: &[Vec<CycNum>]) -> bool {
    let m = |vs: &[Vec<CycNum>]| CycMatrix::from_columns(PAIRS, vs);
    let joint: Vec<Vec<CycNum>> = a.iter().chain(b).cloned().collect();
    let r = m(a).rank();
    r == m(b).rank() && r == m(&joint).rank()
}

/// `a ↦ (⟨ξ,a⟩, π₇(ξ∧a))` as an 8×8 matrix, the Λ²₇ part in the eigenbasis coordinates.
pub fn deformation_symbol(xi: &[CycNum]) -> Result<CycMatrix, Spin7Error> {
    if xi.len() != 8 {
        return Err(Spin7Error::Shape("covector must have 8 entries".into()));
    }
    if xi.iter().all(CycNum::is_zero) {
        return Err(Spin7Error::ZeroCovector);
    }
    let coords7 = &projectors().coords7;
    let cols: Vec<Vec<CycNum>> = (0..8)
        .map(|j| {
            let mut w = vec![CycNum::zero(); PAIRS];
            // ξ∧e_j = Σ_i ξ_i e_i∧e_j
            for (i, x) in xi.iter().enumerate() {
                if i != j && !x.is_zero() {
                    let (a, b, s) = if i < j { (i, j, x.clone()) } else { (j, i, -x) };
                    w[pair_index(a + 1, b + 1).expect("pair")] += &s;
                }
            }
            let mut col = vec![xi[j].clone()];
            col.extend(coords7.mul_vec(&w));
            col
        })
        .collect();
    Ok(CycMatrix::from_columns(8, &cols))
}

/// `c(ξ)` restricted to S⁻ → S⁺.
pub fn dirac_symbol(rep: &GammaRep, xi: &[CycNum]) -> CycMatrix {
    rep.clifford(xi).submatrix(&rep.plus, &rep.minus)
}

/// Intertwiners `Φ₁ = isoMinus`, `Φ₂ = isoPlus ∘ diag(β, γ·I₇)` with
/// `c(ξ)∘Φ₁ = Φ₂∘σ_ξ` for all ξ.
#[derive(Debug, Clone)]
pub struct SymbolMatch {
    pub intertwiners_found: bool,
    pub scale: (CycNum, CycNum),
    pub phi1: CycMatrix,
    pub phi2: CycMatrix,
    /// Basis covectors on which the relation was checked, with the failures.
    pub checked: usize,
    pub failures: usize,
}

pub fn symbol_compare(rep: &GammaRep, eta: &UnitSpinor) -> Result<SymbolMatch, Spin7Error> {
    let isos = spinor_isos(rep, eta)?;
    let unit = |k: usize| {
        let mut v = vec![CycNum::zero(); 8];
        v[k] = CycNum::one();
        v
    };
    let plus_inv = isos.iso_plus.inverse().map_err(|_| Spin7Error::KernelMismatch)?;
    let e1 = unit(0);
    let sigma_inv = deformation_symbol(&e1)?
        .inverse()
        .map_err(|_| Spin7Error::NoIntertwiner("symbol at e1 is singular".into()))?;
    let t = &(&(&plus_inv * &dirac_symbol(rep, &e1)) * &isos.iso_minus) * &sigma_inv;
    let beta = t[(0, 0)].clone();
    let gamma = t[(1, 1)].clone();
    let mut d = CycMatrix::identity(8).scale(&gamma);
    d[(0, 0)] = beta.clone();
    if t != d || beta.is_zero() || gamma.is_zero() {
        return Err(Spin7Error::NoIntertwiner(
            "the solution at e1 is not of the form diag(β, γ·I₇)".into(),
        ));
    }
    let phi2 = &isos.iso_plus * &d;
    let failures = (0..8)
        .filter(|&k| {
            let xi = unit(k);
            let lhs = &dirac_symbol(rep, &xi) * &isos.iso_minus;
            let rhs = &phi2 * &deformation_symbol(&xi).expect("nonzero");
            lhs != rhs
        })
        .count();
    if failures > 0 {
        return Err(Spin7Error::NoIntertwiner(format!(
            "relation fails on {failures} basis covectors"
        )));
    }
    Ok(SymbolMatch {
        intertwiners_found: true,
        scale: (beta, gamma),
        phi1: isos.iso_minus,
        phi2,
        checked: 8,
        failures,
    })
}
