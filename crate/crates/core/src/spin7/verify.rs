//! Exact sweeps for the Spin(7) identities.

use rand::Rng;
use rayon::prelude::*;

use super::{
    build_gamma, cayley_form, default_spinor, deformation_symbol, dirac_symbol, instanton_check,
    l_omega_matrix, project, projectors, spinor_isos, symbol_compare, GammaRep, Part, TwoForm8,
    PAIRS,
};
use crate::exterior::hodge_star;
use crate::field::{CycMatrix, CycNum};
use crate::report::{suite_rng, timed, SuiteOutcome};

/// A small random rational: `p/q` with `|p| ≤ 4`, `1 ≤ q ≤ 3`.
pub fn random_rational<R: Rng>(rng: &mut R) -> CycNum {
    CycNum::frac(rng.gen_range(-4..=4), rng.gen_range(1..=3))
}

pub fn random_scalar_form<R: Rng>(rng: &mut R) -> TwoForm8 {
    TwoForm8::scalar((0..PAIRS).map(|_| random_rational(rng)).collect()).expect("28 entries")
}

/// Random traceless anti-hermitian `d×d` matrix over Q(i).
pub fn random_anti_hermitian<R: Rng>(rng: &mut R, d: usize) -> CycMatrix {
    let i = CycNum::i();
    let mut m = CycMatrix::zeros(d, d);
    let mut trace = CycNum::zero();
    for a in 0..d {
        if a + 1 < d {
            m[(a, a)] = &i * &random_rational(rng);
            trace += &m[(a, a)];
        } else {
            m[(a, a)] = -&trace;
        }
        for b in a + 1..d {
            let z = &random_rational(rng) + &(&i * &random_rational(rng));
            m[(b, a)] = -&z.conj();
            m[(a, b)] = z;
        }
    }
    m
}

pub fn random_lie_form<R: Rng>(rng: &mut R, d: usize) -> TwoForm8 {
    TwoForm8::lie_valued((0..PAIRS).map(|_| random_anti_hermitian(rng, d)).collect())
        .expect("anti-hermitian by construction")
}

fn random_covector<R: Rng>(rng: &mut R) -> Vec<CycNum> {
    loop {
        let xi: Vec<CycNum> = (0..8).map(|_| random_rational(rng)).collect();
        if !xi.iter().all(CycNum::is_zero) {
            return xi;
        }
    }
}

fn unit(k: usize) -> Vec<CycNum> {
    let mut v = vec![CycNum::zero(); 8];
    v[k] = CycNum::one();
    v
}

/// 14 terms with coefficients ±1, self-dual.
pub fn cayley() -> SuiteOutcome {
    let om = cayley_form().form();
    let shape = om.len() == 14 && om.terms().all(|(_, c)| c.is_one() || (-c).is_one());
    let bad = u64::from(!shape) + u64::from(&hodge_star(om) != om);
    SuiteOutcome::new("spin7.cayley", 2, bad)
}

/// `L` symmetric, traceless, spectrum exactly `{3⁷, (−1)²¹}`.
pub fn l_spectrum() -> SuiteOutcome {
    let l = l_omega_matrix();
    let p = projectors();
    let checks = [
        &l.transpose() == l,
        l.trace().is_zero(),
        p.basis7.len() == 7,
        p.basis21.len() == 21,
    ];
    SuiteOutcome::new("spin7.l.spectrum", checks.len() as u64, checks.iter().filter(|c| !**c).count() as u64)
}

/// Projector identities, plus agreement with `(L + I)/4` and `(3I − L)/4`.
pub fn projector_identities() -> SuiteOutcome {
    let p = projectors();
    let l = l_omega_matrix();
    let id = CycMatrix::identity(PAIRS);
    let q = CycNum::frac(1, 4);
    let checks = [
        &p.pi7 * &p.pi7 == p.pi7,
        &p.pi21 * &p.pi21 == p.pi21,
        (&p.pi7 * &p.pi21).is_zero(),
        (&p.pi21 * &p.pi7).is_zero(),
        &p.pi7 + &p.pi21 == id,
        p.pi7.transpose() == p.pi7,
        p.pi21.transpose() == p.pi21,
        p.pi7.rank() == 7,
        p.pi7 == (l + &id).scale(&q),
        p.pi21 == (&id.scale(&CycNum::from_int(3)) - l).scale(&q),
    ];
    SuiteOutcome::new("spin7.projectors", checks.len() as u64, checks.iter().filter(|c| !**c).count() as u64)
}

/// Agreement of the two instanton criteria. Half the samples are projected into Λ²₂₁
/// first, so both verdicts occur; those must also come out as instantons.
fn instanton_sweep(name: &str, samples: usize, seed: u64, gen: impl Fn(&mut rand_chacha::ChaCha8Rng) -> TwoForm8 + Sync) -> SuiteOutcome {
    let mut rng = suite_rng(seed, name);
    let forms: Vec<(bool, TwoForm8)> = (0..samples)
        .map(|k| {
            let f = gen(&mut rng);
            if k % 2 == 0 {
                (true, project(&f, Part::TwentyOne))
            } else {
                (false, f)
            }
        })
        .collect();
    let bad = forms
        .par_iter()
        .filter(|(projected, f)| match instanton_check(f) {
            Ok(chk) => *projected && !chk.is_instanton,
            Err(_) => true,
        })
        .count() as u64;
    SuiteOutcome::new(name, samples as u64, bad)
}

pub fn instanton_scalar(samples: usize, seed: u64) -> SuiteOutcome {
    instanton_sweep("spin7.instanton.scalar", samples, seed, random_scalar_form)
}

pub fn instanton_lie(samples: usize, seed: u64) -> SuiteOutcome {
    instanton_sweep("spin7.instanton.lie", samples, seed, |r| {
        let d = if r.gen_bool(0.75) { 2 } else { 3 };
        random_lie_form(r, d)
    })
}

/// Clifford relations, and the volume element commuting with even products and
/// anticommuting with generators.
pub fn clifford(rep: &GammaRep) -> SuiteOutcome {
    let id = CycMatrix::identity(16);
    let mut population = 0;
    let mut bad = 0;
    for (i, a) in rep.gammas.iter().enumerate() {
        population += 1;
        if (a * &rep.volume) != -&(&rep.volume * a) {
            bad += 1;
        }
        for (j, b) in rep.gammas.iter().enumerate() {
            population += 2;
            let want = if i == j { id.scale(&CycNum::from_int(-2)) } else { CycMatrix::zeros(16, 16) };
            if &(a * b) + &(b * a) != want {
                bad += 1;
            }
            let ab = a * b;
            if &ab * &rep.volume != &rep.volume * &ab {
                bad += 1;
            }
        }
    }
    population += 1;
    if &rep.volume * &rep.volume != id {
        bad += 1;
    }
    SuiteOutcome::new("spin7.clifford", population, bad)
}

/// The Clifford kernel of Λ² → S⁺ equals Λ²₂₁.
pub fn kernel_match(rep: &GammaRep) -> SuiteOutcome {
    let ok = default_spinor(rep).and_then(|eta| spinor_isos(rep, &eta)).is_ok();
    SuiteOutcome::new("spin7.kernel", 1, u64::from(!ok))
}

/// Rank 8 of the deformation symbol on basis and random covectors.
pub fn ellipticity(samples: usize, seed: u64) -> SuiteOutcome {
    let mut rng = suite_rng(seed, "spin7.ellipticity");
    let mut xis: Vec<Vec<CycNum>> = (0..8).map(unit).collect();
    xis.extend((0..samples).map(|_| random_covector(&mut rng)));
    let bad = xis
        .par_iter()
        .filter(|xi| deformation_symbol(xi).map_or(true, |s| s.rank() != 8))
        .count() as u64;
    SuiteOutcome::new("spin7.ellipticity", xis.len() as u64, bad)
}

/// `c(ξ)² = −|ξ|²` on R¹⁶ and invertibility of `c(ξ): S⁻ → S⁺` for random ξ ≠ 0.
pub fn dirac(rep: &GammaRep, samples: usize, seed: u64) -> SuiteOutcome {
    let mut rng = suite_rng(seed, "spin7.dirac");
    let xis: Vec<Vec<CycNum>> = (0..samples).map(|_| random_covector(&mut rng)).collect();
    let bad = xis
        .par_iter()
        .filter(|xi| {
            let c = rep.clifford(xi);
            let mut n = CycNum::zero();
            for x in xi.iter() {
                n.add_mul(x, x);
            }
            let square_ok = &c * &c == CycMatrix::identity(16).scale(&-n);
            !square_ok || dirac_symbol(rep, xi).rank() != 8
        })
        .count() as u64;
    SuiteOutcome::new("spin7.dirac", samples as u64, bad)
}

/// One intertwiner pair fixed at `e₁`, checked on all basis covectors and on random ξ.
pub fn symbol_coincidence(rep: &GammaRep, samples: usize, seed: u64) -> SuiteOutcome {
    let name = "spin7.symbol_compare";
    let Ok(m) = default_spinor(rep).and_then(|eta| symbol_compare(rep, &eta)) else {
        return SuiteOutcome::new(name, 8 + samples as u64, 8 + samples as u64);
    };
    let mut rng = suite_rng(seed, name);
    let xis: Vec<Vec<CycNum>> = (0..samples).map(|_| random_covector(&mut rng)).collect();
    let bad = xis
        .par_iter()
        .filter(|xi| {
            let lhs = &dirac_symbol(rep, xi) * &m.phi1;
            lhs != &m.phi2 * &deformation_symbol(xi).expect("nonzero")
        })
        .count();
    SuiteOutcome::new(name, (m.checked + samples) as u64, (m.failures + bad) as u64)
}

/// Every spin7 suite in a fixed order.
pub fn run_all(samples: usize, seed: u64) -> Vec<SuiteOutcome> {
    let rep = build_gamma();
    let mut out = timed(|| vec![cayley()]);
    out.extend(timed(|| vec![l_spectrum()]));
    out.extend(timed(|| vec![projector_identities()]));
    out.extend(timed(|| vec![instanton_scalar(samples, seed)]));
    out.extend(timed(|| vec![instanton_lie(samples, seed)]));
    out.extend(timed(|| vec![clifford(&rep)]));
    out.extend(timed(|| vec![kernel_match(&rep)]));
    out.extend(timed(|| vec![ellipticity(samples, seed)]));
    out.extend(timed(|| vec![dirac(&rep, samples, seed)]));
    out.extend(timed(|| vec![symbol_coincidence(&rep, samples, seed)]));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweeps_pass() {
        for o in run_all(20, 5) {
            assert!(o.passed(), "{o:?}");
        }
    }

    #[test]
    fn random_matrices_are_valid_coefficients() {
        let mut rng = suite_rng(1, "t");
        for d in [2, 3] {
            let m = random_anti_hermitian(&mut rng, d);
            assert_eq!(m.adjoint(), -&m);
            assert!(m.trace().is_zero());
        }
    }
}
