//! Exact verification sweeps over the structure constants.
//!
//! Every sweep returns a [`SuiteOutcome`] counting the cases checked and the cases
//! that failed. Randomized sweeps are deterministic functions of their seed.

use std::collections::BTreeMap;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::compact::CompactForm;
use super::table::{Accumulator, BracketTable, SparseVec};
use super::{basis_element, grade, killing, phi_images, random_phased_permutation, w_apply, DIM};
use crate::field::{CycMatrix, CycNum};
use crate::report::{suite_rng, timed, SuiteOutcome};

/// The bracket table plus the Killing form on basis pairs.
pub struct E8Context {
    pub table: BracketTable,
    killing_rows: Vec<SparseVec>,
}

impl E8Context {
    pub fn new() -> Self {
        let table = BracketTable::build();
        let basis: Vec<_> = (0..DIM).map(basis_element).collect();
        let killing_rows = basis
            .par_iter()
            .map(|a| {
                let row: Vec<CycNum> = basis.iter().map(|b| killing(a, b)).collect();
                SparseVec::from_dense(&row)
            })
            .collect();
        E8Context {
            table,
            killing_rows,
        }
    }

    /// Killing form of two sparse vectors via the basis Gram matrix.
    pub fn killing_sparse(&self, a: &SparseVec, b: &SparseVec) -> CycNum {
        let mut t = CycNum::zero();
        for (i, x) in a.iter() {
            for (j, g) in self.killing_rows[i].iter() {
                let y = b.get(j);
                if !y.is_zero() {
                    t.add_mul(&(x * g), &y);
                }
            }
        }
        t
    }

    pub fn gram_matrix(&self) -> CycMatrix {
        let rows: Vec<Vec<CycNum>> = self.killing_rows.iter().map(|r| r.to_dense(DIM)).collect();
        CycMatrix::from_rows(rows).expect("square")
    }
}

impl Default for E8Context {
    fn default() -> Self {
        Self::new()
    }
}

pub fn antisymmetry(table: &BracketTable) -> SuiteOutcome {
    let bad = (0..DIM)
        .into_par_iter()
        .map(|i| {
            (i + 1..DIM)
                .filter(|&j| table.entry(i, j) != &table.entry(j, i).neg())
                .count() as u64
        })
        .sum();
    SuiteOutcome::new("e8.antisymmetry", (DIM * (DIM - 1) / 2) as u64, bad)
}

pub fn stratum_label(i: usize, j: usize, k: usize) -> String {
    let mut g = [grade(i), grade(j), grade(k)];
    g.sort();
    g.iter().map(|x| x.label()).collect::<Vec<_>>().join("-")
}

/// All unordered triples of distinct basis elements, reported per graded stratum.
///
/// Triples with a repeated element are implied by antisymmetry.
pub fn jacobi_strata(table: &BracketTable) -> Vec<SuiteOutcome> {
    let per_i: Vec<BTreeMap<String, (u64, u64)>> = (0..DIM)
        .into_par_iter()
        .map_init(
            || Accumulator::new(DIM),
            |acc, i| {
                let mut counts: BTreeMap<String, (u64, u64)> = BTreeMap::new();
                for j in i + 1..DIM {
                    for k in j + 1..DIM {
                        table.jacobi_into(acc, i, j, k);
                        let ok = acc.take_is_zero();
                        let e = counts.entry(stratum_label(i, j, k)).or_default();
                        e.0 += 1;
                        if !ok {
                            e.1 += 1;
                        }
                    }
                }
                counts
            },
        )
        .collect();
    let mut total: BTreeMap<String, (u64, u64)> = BTreeMap::new();
    for m in per_i {
        for (k, (p, v)) in m {
            let e = total.entry(k).or_default();
            e.0 += p;
            e.1 += v;
        }
    }
    total
        .into_iter()
        .map(|(label, (p, v))| SuiteOutcome::new(&format!("e8.jacobi.{label}"), p, v))
        .collect()
}

fn random_triples(rng: &mut ChaCha8Rng, n: usize) -> Vec<(usize, usize, usize)> {
    (0..n)
        .map(|_| (rng.gen_range(0..DIM), rng.gen_range(0..DIM), rng.gen_range(0..DIM)))
        .collect()
}

fn random_pairs(rng: &mut ChaCha8Rng, n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .map(|_| (rng.gen_range(0..DIM), rng.gen_range(0..DIM)))
        .collect()
}

pub fn jacobi_random(table: &BracketTable, samples: usize, seed: u64) -> SuiteOutcome {
    let triples = random_triples(&mut suite_rng(seed, "e8.jacobi.random"), samples);
    let bad = triples
        .par_iter()
        .map_init(
            || Accumulator::new(DIM),
            |acc, &(i, j, k)| {
                table.jacobi_into(acc, i, j, k);
                u64::from(!acc.take_is_zero())
            },
        )
        .sum();
    SuiteOutcome::new("e8.jacobi.random", samples as u64, bad)
}

/// The explicit Killing formula against `tr(ad e_i ∘ ad e_j)`.
pub fn killing_trace(ctx: &E8Context, samples: usize, seed: u64) -> SuiteOutcome {
    let pairs = random_pairs(&mut suite_rng(seed, "e8.killing.trace"), samples);
    let bad = pairs
        .par_iter()
        .filter(|&&(i, j)| killing(&basis_element(i), &basis_element(j)) != ctx.table.trace_form(i, j))
        .count() as u64;
    SuiteOutcome::new("e8.killing.trace", samples as u64, bad)
}

/// `κ([z,x],y) + κ(x,[z,y]) = 0` on random basis triples.
pub fn killing_invariance(ctx: &E8Context, samples: usize, seed: u64) -> SuiteOutcome {
    let triples = random_triples(&mut suite_rng(seed, "e8.killing.invariance"), samples);
    let bad = triples
        .par_iter()
        .filter(|&&(z, x, y)| {
            let (x_v, y_v) = (SparseVec::unit(x), SparseVec::unit(y));
            let zx = ctx.table.entry(z, x);
            let zy = ctx.table.entry(z, y);
            let s = &ctx.killing_sparse(zx, &y_v) + &ctx.killing_sparse(&x_v, zy);
            !s.is_zero()
        })
        .count() as u64;
    SuiteOutcome::new("e8.killing.invariance", samples as u64, bad)
}

pub fn killing_nondegenerate(ctx: &E8Context) -> SuiteOutcome {
    let rank = ctx.gram_matrix().rank();
    SuiteOutcome::new("e8.killing.rank", 1, u64::from(rank != DIM))
}

fn w_sparse(v: &SparseVec) -> SparseVec {
    let w = CycNum::omega();
    v.map(|k, c| c * &w.pow(grade(k).omega_power()))
}

/// `w³ = Id` on every basis element and on derived mixed elements.
pub fn w_cube() -> SuiteOutcome {
    let mut bad = 0;
    let mut population = 0;
    for k in 0..DIM {
        let e = basis_element(k);
        let mixed = e.add(&basis_element((k * 97 + 13) % DIM).scale(&CycNum::zeta()));
        for x in [e, mixed] {
            population += 1;
            if w_apply(&w_apply(&w_apply(&x))) != x {
                bad += 1;
            }
        }
    }
    SuiteOutcome::new("e8.w.cube", population, bad)
}

/// `w[e_i, e_j] = [w e_i, w e_j]` on all basis pairs.
pub fn w_bracket(table: &BracketTable) -> SuiteOutcome {
    let bad = (0..DIM)
        .into_par_iter()
        .map(|i| {
            let wi = w_sparse(&SparseVec::unit(i));
            (i + 1..DIM)
                .filter(|&j| {
                    let wj = w_sparse(&SparseVec::unit(j));
                    w_sparse(table.entry(i, j)) != table.bracket(&wi, &wj)
                })
                .count() as u64
        })
        .sum();
    SuiteOutcome::new("e8.w.bracket", (DIM * (DIM - 1) / 2) as u64, bad)
}

pub fn w_killing(ctx: &E8Context) -> SuiteOutcome {
    let mut bad = 0;
    for i in 0..DIM {
        let wi = w_sparse(&SparseVec::unit(i));
        for j in i..DIM {
            let wj = w_sparse(&SparseVec::unit(j));
            let k0 = ctx.killing_sparse(&SparseVec::unit(i), &SparseVec::unit(j));
            if ctx.killing_sparse(&wi, &wj) != k0 {
                bad += 1;
            }
        }
    }
    SuiteOutcome::new("e8.w.killing", (DIM * (DIM + 1) / 2) as u64, bad)
}

/// `φ(ωᵏ Id)` fixes every basis element.
pub fn phi_kernel() -> SuiteOutcome {
    let mut bad = 0;
    let mut population = 0;
    for k in 0..3 {
        let a = CycMatrix::scalar(9, &CycNum::omega().pow(k));
        let images = phi_images(&a).expect("ω^k Id is special unitary");
        for (j, img) in images.iter().enumerate() {
            population += 1;
            if img != &SparseVec::unit(j) {
                bad += 1;
            }
        }
    }
    SuiteOutcome::new("e8.phi.kernel", population, bad)
}

/// Bracket and Killing preservation for random phased permutations.
pub fn phi_automorphism(ctx: &E8Context, matrices: usize, pairs: usize, seed: u64) -> [SuiteOutcome; 2] {
    let mut rng = suite_rng(seed, "e8.phi");
    let mut bracket_bad = 0;
    let mut killing_bad = 0;
    for _ in 0..matrices {
        let a = random_phased_permutation(&mut rng);
        let images = phi_images(&a).expect("phased permutations are special unitary");
        let apply = |v: &SparseVec| {
            let mut acc = Accumulator::new(DIM);
            for (k, c) in v.iter() {
                acc.add_scaled(&images[k], c);
            }
            acc.take()
        };
        for (i, j) in random_pairs(&mut rng, pairs) {
            let lhs = apply(ctx.table.entry(i, j));
            let rhs = ctx.table.bracket(&images[i], &images[j]);
            if lhs != rhs {
                bracket_bad += 1;
            }
            let k0 = ctx.killing_sparse(&SparseVec::unit(i), &SparseVec::unit(j));
            if ctx.killing_sparse(&images[i], &images[j]) != k0 {
                killing_bad += 1;
            }
        }
    }
    let n = (matrices * pairs) as u64;
    [
        SuiteOutcome::new("e8.phi.bracket", n, bracket_bad),
        SuiteOutcome::new("e8.phi.killing", n, killing_bad),
    ]
}

/// Closure of the compact basis under the bracket with rational coordinates,
/// and negative definiteness of the Killing form on it.
pub fn compact_form(table: &BracketTable) -> [SuiteOutcome; 2] {
    let form = CompactForm::new().expect("compact basis spans");
    let (pairs, bad) = form.closure_violations(table);
    let pivots = form.gram_pivots();
    let negative = pivots
        .iter()
        .filter(|p| p.as_rational().is_some_and(num_traits::Signed::is_negative))
        .count();
    [
        SuiteOutcome::new("e8.compact.closure", pairs as u64, bad as u64),
        SuiteOutcome::new("e8.compact.definite", DIM as u64, (DIM - negative) as u64),
    ]
}

/// Every e8 suite in a fixed order.
pub fn run_all(ctx: &E8Context, samples: usize, seed: u64) -> Vec<SuiteOutcome> {
    let mut out = timed(|| vec![antisymmetry(&ctx.table)]);
    out.extend(timed(|| jacobi_strata(&ctx.table)));
    out.extend(timed(|| vec![jacobi_random(&ctx.table, samples, seed)]));
    out.extend(timed(|| vec![killing_trace(ctx, samples, seed)]));
    out.extend(timed(|| vec![killing_invariance(ctx, samples, seed)]));
    out.extend(timed(|| vec![killing_nondegenerate(ctx)]));
    out.extend(timed(|| vec![w_cube()]));
    out.extend(timed(|| vec![w_bracket(&ctx.table)]));
    out.extend(timed(|| vec![w_killing(ctx)]));
    out.extend(timed(|| vec![phi_kernel()]));
    out.extend(timed(|| phi_automorphism(ctx, 20, samples.div_ceil(20).max(1), seed).to_vec()));
    out.extend(timed(|| compact_form(&ctx.table).to_vec()));
    out
}
