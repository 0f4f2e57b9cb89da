//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::process::Command;
use std::time::{Duration, Instant};

use e8spin7::cellcoh::{
    all_cohomology, betti_euler_characteristic, cohomology, e8_homotopy, fixture, fixture_names,
    orientability_verdict, pi1_config, sphere_config_homotopy,
};
use e8spin7::e8::verify as e8v;
use e8spin7::e8::{compact_form_basis, DIM};
use e8spin7::field::smith_normal_form;
use e8spin7::report::{suite_rng, SuiteOutcome};
use e8spin7::spin7::verify as s7v;
use e8spin7::spin7::{build_gamma, cayley_form};

const SEED: u64 = 20240917;

struct Criterion {
    id: usize,
    title: &'static str,
    checks: Vec<(String, bool)>,
    elapsed: Duration,
}

impl Criterion {
    fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|(_, ok)| *ok)
    }
}

fn suite(o: &SuiteOutcome, min_population: u64) -> (String, bool) {
    let ok = o.passed() && o.population >= min_population;
    (
        format!("{} population={} (need ≥{min_population}) violations={}", o.name, o.population, o.violations),
        ok,
    )
}

fn check(label: impl Into<String>, ok: bool) -> (String, bool) {
    (label.into(), ok)
}

fn run(id: usize, title: &'static str, f: impl FnOnce() -> Vec<(String, bool)>) -> Criterion {
    let start = Instant::now();
    let checks = f();
    Criterion {
        id,
        title,
        checks,
        elapsed: start.elapsed(),
    }
}

fn cli(args: &[&str]) -> (Vec<u8>, Option<i32>) {
    let out = Command::new(env!("CARGO_BIN_EXE_e8spin7"))
        .args(args)
        .output()
        .expect("binary runs");
    (out.stdout, out.status.code())
}

fn samples_dir() -> String {
    format!("{}/samples", env!("CARGO_MANIFEST_DIR"))
}

fn main() {
    let mut results = Vec::new();
    let ctx_start = Instant::now();
    let ctx = e8v::E8Context::new();
    let table_time = ctx_start.elapsed();

    results.push(run(1, "e8 antisymmetry and Jacobi identity", || {
        let start = Instant::now();
        let mut checks = vec![suite(&e8v::antisymmetry(&ctx.table), (DIM * (DIM - 1) / 2) as u64)];
        let strata = e8v::jacobi_strata(&ctx.table);
        let total: u64 = strata.iter().map(|s| s.population).sum();
        checks.extend(strata.iter().map(|s| suite(s, 1)));
        checks.push(check(format!("strata cover all {total} distinct triples"), total == 248 * 247 * 246 / 6));
        checks.push(suite(&e8v::jacobi_random(&ctx.table, 100_000, SEED), 100_000));
        let elapsed = table_time + start.elapsed();
        checks.push(check(format!("runtime {:.1}s incl. table (limit 600s)", elapsed.as_secs_f64()), elapsed.as_secs() <= 600));
        checks
    }));

    results.push(run(2, "Killing form formula and nondegeneracy", || {
        vec![
            suite(&e8v::killing_trace(&ctx, 1000, SEED), 1000),
            suite(&e8v::killing_invariance(&ctx, 1000, SEED), 1000),
            suite(&e8v::killing_nondegenerate(&ctx), 1),
        ]
    }));

    results.push(run(3, "automorphisms w and φ(A)", || {
        let mut checks = vec![
            suite(&e8v::w_cube(), DIM as u64),
            suite(&e8v::w_bracket(&ctx.table), (DIM * (DIM - 1) / 2) as u64),
            suite(&e8v::w_killing(&ctx), 1),
            suite(&e8v::phi_kernel(), 3 * DIM as u64),
        ];
        let [b, k] = e8v::phi_automorphism(&ctx, 20, 100, SEED);
        checks.push(suite(&b, 2000));
        checks.push(suite(&k, 2000));
        checks
    }));

    results.push(run(4, "compact real form su(9) ⊕ Λ_R", || {
        let basis = compact_form_basis();
        let with_r = basis.iter().filter(|e| !e.r().is_zero()).count();
        let [closure, definite] = e8v::compact_form(&ctx.table);
        vec![
            check(format!("basis size {} = {with_r} + {}", basis.len(), basis.len() - with_r), basis.len() == 248 && with_r == 80),
            suite(&closure, (DIM * (DIM - 1) / 2) as u64),
            suite(&definite, DIM as u64),
        ]
    }));

    results.push(run(5, "Spin(7) decomposition Λ² = Λ²₇ ⊕ Λ²₂₁", || {
        let om = cayley_form().form();
        vec![
            check("Ω has 14 terms", om.len() == 14),
            suite(&s7v::cayley(), 2),
            suite(&s7v::l_spectrum(), 4),
            suite(&s7v::projector_identities(), 10),
        ]
    }));

    results.push(run(6, "instanton criteria agree", || {
        vec![
            suite(&s7v::instanton_scalar(1000, SEED), 1000),
            suite(&s7v::instanton_lie(1000, SEED), 1000),
        ]
    }));

    results.push(run(7, "ellipticity and symbol coincidence", || {
        let rep = build_gamma();
        vec![
            suite(&s7v::ellipticity(1000, SEED), 1008),
            suite(&s7v::symbol_coincidence(&rep, 1000, SEED), 1008),
            suite(&s7v::kernel_match(&rep), 1),
            suite(&s7v::dirac(&rep, 1000, SEED), 1000),
        ]
    }));

    results.push(run(8, "cohomology engine", || {
        let mut rng = suite_rng(SEED, "acceptance.complexes");
        let mut agree = 0;
        let mut snf_ok = 0;
        let mut snf_total = 0;
        const N: usize = 200;
        for _ in 0..N {
            let c = common::random_complex(&mut rng);
            let matches = (0..=c.dim()).all(|k| cohomology(&c, k).unwrap() == common::naive_cohomology(&c, k));
            agree += usize::from(matches && betti_euler_characteristic(&c) == c.euler_characteristic());
            for d in c.deltas() {
                snf_total += 1;
                let s = smith_normal_form(d);
                snf_ok += usize::from(&(&s.u * d) * &s.v == s.diagonal_matrix(d.rows(), d.cols()));
            }
        }
        let euler: Vec<bool> = fixture_names()
            .iter()
            .map(|n| {
                let c = fixture(n).unwrap().complex;
                betti_euler_characteristic(&c) == c.euler_characteristic()
            })
            .collect();
        vec![
            check(format!("{agree}/{N} random complexes agree with the naive oracle"), agree == N),
            check(format!("{snf_ok}/{snf_total} SNF reconstructions U·M·V = D"), snf_ok == snf_total),
            check(format!("Euler characteristic on {} fixtures", euler.len()), euler.iter().all(|x| *x)),
        ]
    }));

    results.push(run(9, "orientability verdicts and homotopy tables", || {
        let expected = [("hp2", true), ("gr2c4", true), ("free-h3", false), ("torsion-2", false), ("torsion-3", true)];
        let mut checks: Vec<(String, bool)> = expected
            .iter()
            .map(|&(n, want)| {
                let c = fixture(n).unwrap().complex;
                let v = orientability_verdict(&c).unwrap();
                let pi1 = pi1_config(&c).unwrap();
                let h3 = &all_cohomology(&c)[3];
                check(
                    format!("{n}: criterion {} (want {want}), π₁ = H³ = {h3}", v.criterion_holds),
                    v.criterion_holds == want && &pi1.value == h3 && pi1.warning.is_none(),
                )
            })
            .collect();
        let mut consistent = 0;
        for n in 1..=8 {
            for k in 1..=3 {
                consistent += usize::from(sphere_config_homotopy(n, k).ok() == e8_homotopy(n + k - 1).ok());
            }
        }
        checks.push(check(format!("{consistent}/24 sphere pairs match π_(n+k−1)(E8)"), consistent == 24));
        checks
    }));

    results.push(run(10, "byte-identical CLI reports", || {
        let dx12 = format!("{}/dx12.json", samples_dir());
        let lie = format!("{}/lie-instanton.json", samples_dir());
        let runs: Vec<Vec<&str>> = vec![
            vec!["verify", "all", "--samples", "200", "--seed", "7"],
            vec!["verify", "spin7", "--samples", "50", "--seed", "7", "--format", "text"],
            vec!["decompose", &dx12],
            vec!["instanton-check", &lie],
            vec!["cohomology", "torsion-3", "--report", "pi1"],
            vec!["cohomology", "gr2c4", "--report", "groups"],
            vec!["fixtures", "list"],
        ];
        runs.iter()
            .map(|args| {
                let (a, ca) = cli(args);
                let (b, cb) = cli(args);
                check(
                    format!("`{}` ({} bytes, exit {:?})", args.join(" "), a.len(), ca),
                    !a.is_empty() && a == b && ca == Some(0) && ca == cb,
                )
            })
            .collect()
    }));

    let mut failed = 0;
    for c in &results {
        let status = if c.passed() { "PASS" } else { "FAIL" };
        println!("{status} criterion {:>2}: {} ({:.1}s)", c.id, c.title, c.elapsed.as_secs_f64());
        for (label, ok) in &c.checks {
            println!("      {} {label}", if *ok { "ok  " } else { "FAIL" });
        }
        failed += usize::from(!c.passed());
    }
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
