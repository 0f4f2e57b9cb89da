//! Integral cellular cochain complexes and the H³ orientability criterion.
//!
//! A complex is given by its cochain ranks `n₀ … n_d` and coboundaries
//! `δᵏ: Z^{n_k} → Z^{n_{k+1}}`, stored as `n_{k+1} × n_k` integer matrices.

mod fixtures;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::field::{smith_normal_form, IntMatrix};

pub use fixtures::{fixture, fixture_names, Fixture, FIXTURES};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CohomologyError {
    #[error("not a complex: δ^{} ∘ δ^{degree} ≠ 0 (at degree {degree})", degree + 1)]
    NotAComplex { degree: usize },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("degree {k} out of range 0..={dim}")]
    DegreeOutOfRange { k: usize, dim: usize },
    #[error("dimension {dim} too small, need at least {need}")]
    DimensionTooSmall { dim: usize, need: usize },
    #[error("{0} out of range")]
    OutOfRange(String),
    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

/// A validated cochain complex of free abelian groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CochainComplex {
    ranks: Vec<usize>,
    deltas: Vec<IntMatrix>,
}

impl CochainComplex {
    /// Checks shapes and `δᵏ⁺¹ ∘ δᵏ = 0` for every `k`.
    pub fn new(ranks: Vec<usize>, deltas: Vec<IntMatrix>) -> Result<Self, CohomologyError> {
        if ranks.is_empty() {
            return Err(CohomologyError::Shape("at least one cochain group is required".into()));
        }
        if deltas.len() + 1 != ranks.len() {
            return Err(CohomologyError::Shape(format!(
                "{} ranks need {} coboundaries, got {}",
                ranks.len(),
                ranks.len() - 1,
                deltas.len()
            )));
        }
        for (k, d) in deltas.iter().enumerate() {
            if d.rows() != ranks[k + 1] || d.cols() != ranks[k] {
                return Err(CohomologyError::Shape(format!(
                    "δ^{k} is {}x{}, expected {}x{}",
                    d.rows(),
                    d.cols(),
                    ranks[k + 1],
                    ranks[k]
                )));
            }
        }
        for k in 0..deltas.len().saturating_sub(1) {
            if !(&deltas[k + 1] * &deltas[k]).is_zero() {
                return Err(CohomologyError::NotAComplex { degree: k });
            }
        }
        Ok(CochainComplex { ranks, deltas })
    }

    /// The complex with the given ranks and all coboundaries zero.
    pub fn zero_differentials(ranks: Vec<usize>) -> Self {
        let deltas = ranks.windows(2).map(|w| IntMatrix::zeros(w[1], w[0])).collect();
        CochainComplex { ranks, deltas }
    }

    pub fn dim(&self) -> usize {
        self.ranks.len() - 1
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn deltas(&self) -> &[IntMatrix] {
        &self.deltas
    }

    /// `Σ (−1)ᵏ n_k`.
    pub fn euler_characteristic(&self) -> i64 {
        alternating(self.ranks.iter().map(|&n| n as i64))
    }
}

fn alternating(xs: impl Iterator<Item = i64>) -> i64 {
    xs.enumerate()
        .map(|(k, x)| if k % 2 == 0 { x } else { -x })
        .sum()
}

/// `Z^betti ⊕ Z/d₁ ⊕ … ⊕ Z/d_r` with `d₁ | d₂ | …` and every `dᵢ ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CohGroup {
    pub betti: usize,
    pub torsion: Vec<BigInt>,
}

impl CohGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn integers() -> Self {
        CohGroup {
            betti: 1,
            torsion: Vec::new(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }

    /// The group order, or `None` when it is infinite.
    pub fn order(&self) -> Option<BigInt> {
        (self.betti == 0).then(|| self.torsion.iter().product())
    }

    /// `dim_{Z₂} Hom(G, Z₂)`: one per free summand and one per even invariant factor.
    pub fn hom_z2_rank(&self) -> usize {
        self.betti + self.torsion.iter().filter(|d| d.is_even()).count()
    }
}

impl fmt::Display for CohGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.betti {
            0 => {}
            1 => parts.push("Z".to_string()),
            b => parts.push(format!("Z^{b}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

fn rank_of(m: &IntMatrix) -> usize {
    if m.rows() == 0 || m.cols() == 0 {
        0
    } else {
        smith_normal_form(m).rank
    }
}

/// `Hᵏ = ker δᵏ / im δᵏ⁻¹` via Smith normal forms.
pub fn cohomology(c: &CochainComplex, k: usize) -> Result<CohGroup, CohomologyError> {
    if k > c.dim() {
        return Err(CohomologyError::DegreeOutOfRange { k, dim: c.dim() });
    }
    let out_rank = if k < c.dim() { rank_of(&c.deltas[k]) } else { 0 };
    let (in_rank, torsion) = if k > 0 && c.ranks[k - 1] > 0 && c.ranks[k] > 0 {
        let snf = smith_normal_form(&c.deltas[k - 1]);
        (snf.rank, snf.torsion())
    } else {
        (0, Vec::new())
    };
    Ok(CohGroup {
        betti: c.ranks[k] - out_rank - in_rank,
        torsion,
    })
}

pub fn all_cohomology(c: &CochainComplex) -> Vec<CohGroup> {
    (0..=c.dim())
        .map(|k| cohomology(c, k).expect("degree in range"))
        .collect()
}

/// `Σ (−1)ᵏ betti(Hᵏ)`.
pub fn betti_euler_characteristic(c: &CochainComplex) -> i64 {
    alternating(all_cohomology(c).iter().map(|g| g.betti as i64))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reason {
    FreePart,
    EvenTorsion,
    AllTorsionOdd,
}

impl Reason {
    pub fn as_str(self) -> &'static str {
        match self {
            Reason::FreePart => "free-part",
            Reason::EvenTorsion => "even-torsion",
            Reason::AllTorsionOdd => "all-torsion-odd",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientabilityVerdict {
    pub criterion_holds: bool,
    pub h3: CohGroup,
    pub reason: Reason,
}

/// Decides `Hom(H³, Z₂) = 0`, cross-checked against "|H³| is finite and odd".
pub fn orientability_verdict(c: &CochainComplex) -> Result<OrientabilityVerdict, CohomologyError> {
    if c.dim() < 3 {
        return Err(CohomologyError::DimensionTooSmall { dim: c.dim(), need: 3 });
    }
    let h3 = cohomology(c, 3)?;
    let by_hom = h3.hom_z2_rank() == 0;
    let by_order = h3.order().is_some_and(|n| n.is_odd());
    if by_hom != by_order {
        return Err(CohomologyError::Inconsistent(format!(
            "Hom(H³,Z₂) = 0 is {by_hom} but |H³| finite and odd is {by_order} for H³ = {h3}"
        )));
    }
    let reason = if h3.betti > 0 {
        Reason::FreePart
    } else if h3.torsion.iter().any(|d| d.is_even()) {
        Reason::EvenTorsion
    } else {
        Reason::AllTorsionOdd
    };
    Ok(OrientabilityVerdict {
        criterion_holds: by_hom,
        h3,
        reason,
    })
}

/// A value computed outside the 8-dimensional setting carries a warning.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flagged<T> {
    pub value: T,
    pub warning: Option<String>,
}

fn dimension_warning(c: &CochainComplex) -> Option<String> {
    (c.dim() != 8).then(|| format!("complex has dimension {}, not 8", c.dim()))
}

/// `π₁(𝓑*) = H³(M, Z)` for gauge group E₈.
pub fn pi1_config(c: &CochainComplex) -> Result<Flagged<CohGroup>, CohomologyError> {
    if c.dim() < 3 {
        return Err(CohomologyError::DimensionTooSmall { dim: c.dim(), need: 3 });
    }
    Ok(Flagged {
        value: cohomology(c, 3)?,
        warning: dimension_warning(c),
    })
}

/// `π_q(Map^P(M, BE₈)) = H^{4−q}(M, Z)` for `1 ≤ q ≤ 3`.
pub fn mapping_homotopy(c: &CochainComplex, q: usize) -> Result<Flagged<CohGroup>, CohomologyError> {
    if !(1..=3).contains(&q) {
        return Err(CohomologyError::OutOfRange(format!("q = {q} (expected 1..=3)")));
    }
    if c.dim() < 4 - q {
        return Err(CohomologyError::DimensionTooSmall { dim: c.dim(), need: 4 - q });
    }
    Ok(Flagged {
        value: cohomology(c, 4 - q)?,
        warning: dimension_warning(c),
    })
}

/// `π_i(E₈)` for `0 ≤ i ≤ 15`: `Z` in degrees 3 and 15, trivial otherwise.
pub fn e8_homotopy(i: usize) -> Result<CohGroup, CohomologyError> {
    match i {
        3 | 15 => Ok(CohGroup::integers()),
        0..=15 => Ok(CohGroup::trivial()),
        _ => Err(CohomologyError::OutOfRange(format!("i = {i} (expected 0..=15)"))),
    }
}

/// `π_k(𝓑₀)` over Sⁿ, which is `π_{n+k−1}(E₈)` in this range: `Z` iff `n + k = 4`.
pub fn sphere_config_homotopy(n: usize, k: usize) -> Result<CohGroup, CohomologyError> {
    if !(1..=8).contains(&n) || !(1..=3).contains(&k) {
        return Err(CohomologyError::OutOfRange(format!("(n, k) = ({n}, {k})")));
    }
    let direct = if n + k == 4 { CohGroup::integers() } else { CohGroup::trivial() };
    let via_e8 = e8_homotopy(n + k - 1)?;
    if direct != via_e8 {
        return Err(CohomologyError::Inconsistent(format!(
            "sphere table and π_{}(E₈) disagree",
            n + k - 1
        )));
    }
    Ok(direct)
}

/// True when every consecutive pair divides.
pub fn is_divisibility_chain(d: &[BigInt]) -> bool {
    d.windows(2).all(|w| !w[0].is_zero() && (w[1].clone() % &w[0]).is_zero())
        && d.iter().all(|x| x > &BigInt::one())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64(rows)
    }

    fn with_delta(ranks: Vec<usize>, k: usize, d: IntMatrix) -> Result<CochainComplex, CohomologyError> {
        let mut deltas: Vec<IntMatrix> = ranks.windows(2).map(|w| IntMatrix::zeros(w[1], w[0])).collect();
        deltas[k] = d;
        CochainComplex::new(ranks, deltas)
    }

    #[test]
    fn validate_examples() {
        assert!(CochainComplex::new(vec![1, 1], vec![IntMatrix::zeros(1, 1)]).is_ok());
        let bad = CochainComplex::new(
            vec![0, 0, 1, 1, 1],
            vec![IntMatrix::zeros(0, 0), IntMatrix::zeros(1, 0), m(&[&[1]]), m(&[&[1]])],
        );
        assert_eq!(bad, Err(CohomologyError::NotAComplex { degree: 2 }));
        let shape = CochainComplex::new(vec![1, 2], vec![IntMatrix::zeros(1, 1)]);
        assert!(matches!(shape, Err(CohomologyError::Shape(_))));
    }

    #[test]
    fn torsion_three() {
        let c = with_delta(vec![1, 0, 1, 1, 0, 0, 0, 0, 1], 2, m(&[&[3]])).unwrap();
        let h3 = cohomology(&c, 3).unwrap();
        assert_eq!(h3, CohGroup { betti: 0, torsion: vec![3.into()] });
        assert_eq!(h3.to_string(), "Z/3");
        assert!(cohomology(&c, 2).unwrap().is_trivial());
        assert_eq!(cohomology(&c, 9), Err(CohomologyError::DegreeOutOfRange { k: 9, dim: 8 }));
        let v = orientability_verdict(&c).unwrap();
        assert!(v.criterion_holds);
        assert_eq!(v.reason, Reason::AllTorsionOdd);
    }

    #[test]
    fn free_and_even_verdicts() {
        let free = CochainComplex::zero_differentials(vec![1, 0, 0, 1, 0, 1, 0, 0, 1]);
        let v = orientability_verdict(&free).unwrap();
        assert!(!v.criterion_holds);
        assert_eq!(v.reason, Reason::FreePart);
        let even = with_delta(vec![1, 0, 1, 1, 0, 0, 0, 0, 1], 2, m(&[&[2]])).unwrap();
        let v = orientability_verdict(&even).unwrap();
        assert!(!v.criterion_holds);
        assert_eq!(v.reason, Reason::EvenTorsion);
        let small = CochainComplex::zero_differentials(vec![1, 0, 1]);
        assert!(matches!(orientability_verdict(&small), Err(CohomologyError::DimensionTooSmall { .. })));
    }

    #[test]
    fn circle_factor_and_warnings() {
        // S¹ × S⁷
        let c = CochainComplex::zero_differentials(vec![1, 1, 0, 0, 0, 0, 0, 1, 1]);
        assert_eq!(mapping_homotopy(&c, 3).unwrap().value, CohGroup::integers());
        assert!(mapping_homotopy(&c, 4).is_err());
        assert!(mapping_homotopy(&c, 1).unwrap().warning.is_none());
        let c5 = CochainComplex::zero_differentials(vec![1, 0, 0, 1, 0, 1]);
        let p = pi1_config(&c5).unwrap();
        assert_eq!(p.value, CohGroup::integers());
        assert!(p.warning.is_some());
    }

    #[test]
    fn homotopy_tables() {
        assert_eq!(e8_homotopy(3).unwrap(), CohGroup::integers());
        assert!(e8_homotopy(7).unwrap().is_trivial());
        assert_eq!(e8_homotopy(15).unwrap(), CohGroup::integers());
        assert!(e8_homotopy(16).is_err());
        assert_eq!(sphere_config_homotopy(3, 1).unwrap(), CohGroup::integers());
        assert!(sphere_config_homotopy(5, 1).unwrap().is_trivial());
        assert_eq!(sphere_config_homotopy(2, 2).unwrap(), CohGroup::integers());
        assert!(sphere_config_homotopy(9, 1).is_err());
    }

    #[test]
    fn group_helpers() {
        let g = CohGroup { betti: 2, torsion: vec![2.into(), 6.into()] };
        assert_eq!(g.to_string(), "Z^2 + Z/2 + Z/6");
        assert_eq!(g.hom_z2_rank(), 4);
        assert_eq!(g.order(), None);
        assert!(is_divisibility_chain(&g.torsion));
        assert!(!is_divisibility_chain(&[2.into(), 3.into()]));
    }
}
