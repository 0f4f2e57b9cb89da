//! Independent oracles and generators shared by the integration tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::Rng;

use e8spin7::cellcoh::{CochainComplex, CohGroup};
use e8spin7::field::{CycMatrix, CycNum, IntMatrix};

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Cofactor expansion; slow and obviously correct.
fn det(m: &[Vec<BigInt>]) -> BigInt {
    match m.len() {
        0 => BigInt::one(),
        1 => m[0][0].clone(),
        n => {
            let mut t = BigInt::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<BigInt>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect())
                    .collect();
                let term = &m[0][j] * det(&minor);
                if j % 2 == 0 {
                    t += term;
                } else {
                    t -= term;
                }
            }
            t
        }
    }
}

/// Invariant factors from determinantal divisors: `d_k = gcd of all k×k minors`,
/// factor `k` is `d_k / d_{k−1}`.
pub fn invariant_factors(m: &IntMatrix) -> Vec<BigInt> {
    let mut out = Vec::new();
    let mut prev = BigInt::one();
    for k in 1..=m.rows().min(m.cols()) {
        let mut g = BigInt::zero();
        for rs in combinations(m.rows(), k) {
            for cs in combinations(m.cols(), k) {
                let sub: Vec<Vec<BigInt>> =
                    rs.iter().map(|&i| cs.iter().map(|&j| m[(i, j)].clone()).collect()).collect();
                g = g.gcd(&det(&sub));
            }
        }
        if g.is_zero() {
            break;
        }
        out.push(&g / &prev);
        prev = g;
    }
    out
}

pub fn rank_over_q(m: &IntMatrix) -> usize {
    if m.rows() == 0 || m.cols() == 0 {
        return 0;
    }
    CycMatrix::from_fn(m.rows(), m.cols(), |i, j| {
        CycNum::from_rational(num_rational::BigRational::from_integer(m[(i, j)].clone()))
    })
    .rank()
}

/// Cohomology from the oracles above, not from Smith normal form.
pub fn naive_cohomology(c: &CochainComplex, k: usize) -> CohGroup {
    let out = if k < c.dim() { rank_over_q(&c.deltas()[k]) } else { 0 };
    let (inc, torsion) = if k > 0 {
        let d = &c.deltas()[k - 1];
        let f = invariant_factors(d);
        (rank_over_q(d), f.into_iter().filter(|x| !x.is_one()).collect())
    } else {
        (0, Vec::new())
    };
    CohGroup { betti: c.ranks()[k] - out - inc, torsion }
}

pub fn random_int_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    IntMatrix::from_fn(rows, cols, |_, _| BigInt::from(rng.gen_range(-bound..=bound)))
}

/// A random unimodular matrix: a product of a few elementary operations.
pub fn random_unimodular<R: Rng>(rng: &mut R, n: usize) -> IntMatrix {
    let mut m = IntMatrix::identity(n);
    if n < 2 {
        return m;
    }
    for _ in 0..n {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if i == j {
            continue;
        }
        let f = BigInt::from(rng.gen_range(-1..=1));
        for c in 0..n {
            let v = &m[(j, c)] * &f;
            m[(i, c)] += v;
        }
    }
    m
}

/// A random complex with ranks ≤ 6 and small entries. Either the coboundaries alternate
/// between random and zero maps, or the complex is built in block form and then
/// conjugated degreewise by random unimodular matrices.
pub fn random_complex<R: Rng>(rng: &mut R) -> CochainComplex {
    let len = rng.gen_range(3..=6);
    let ranks: Vec<usize> = (0..len).map(|_| rng.gen_range(0..=6)).collect();
    if rng.gen_bool(0.5) {
        let offset = rng.gen_range(0..2);
        let deltas = (0..len - 1)
            .map(|k| {
                let (r, c) = (ranks[k + 1], ranks[k]);
                if k % 2 == offset {
                    random_int_matrix(rng, r, c, 4)
                } else {
                    IntMatrix::zeros(r, c)
                }
            })
            .collect();
        return CochainComplex::new(ranks, deltas).expect("alternating zeros compose to zero");
    }
    // Split each Z^{n_k} as B_k ⊕ H_k ⊕ C_k (image of δᵏ⁻¹, leftover, complement
    // mapped injectively by δᵏ onto B_{k+1}), then conjugate by unimodular changes.
    let mut b = vec![0usize; len];
    let mut cpart = vec![0usize; len];
    for k in 0..len {
        let free = ranks[k] - b[k];
        if k + 1 < len {
            let room = ranks[k + 1];
            cpart[k] = rng.gen_range(0..=free.min(room));
            b[k + 1] = cpart[k];
        }
    }
    let changes: Vec<IntMatrix> = ranks.iter().map(|&n| random_unimodular(rng, n)).collect();
    let inverses: Vec<IntMatrix> = changes.iter().map(unimodular_inverse).collect();
    let deltas = (0..len - 1)
        .map(|k| {
            let (r, c) = (ranks[k + 1], ranks[k]);
            // C_k (last cpart[k] coordinates of Z^{n_k}) → B_{k+1} (first b[k+1] of Z^{n_{k+1}})
            let mut d = IntMatrix::zeros(r, c);
            for t in 0..cpart[k] {
                d[(t, c - cpart[k] + t)] = BigInt::from(rng.gen_range(1..=4));
            }
            &(&changes[k + 1] * &d) * &inverses[k]
        })
        .collect();
    CochainComplex::new(ranks, deltas).expect("block form composes to zero")
}

/// Inverse of a unimodular matrix via exact rational elimination.
pub fn unimodular_inverse(m: &IntMatrix) -> IntMatrix {
    let n = m.rows();
    if n == 0 {
        return IntMatrix::zeros(0, 0);
    }
    let q = CycMatrix::from_fn(n, n, |i, j| {
        CycNum::from_rational(num_rational::BigRational::from_integer(m[(i, j)].clone()))
    });
    let inv = q.inverse().expect("unimodular");
    IntMatrix::from_fn(n, n, |i, j| {
        let r = inv[(i, j)].as_rational().expect("rational").clone();
        assert!(r.is_integer());
        r.to_integer()
    })
}
