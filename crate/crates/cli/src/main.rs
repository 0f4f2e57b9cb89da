use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use e8spin7::cellcoh::{
    all_cohomology, betti_euler_characteristic, fixture, fixture_names, mapping_homotopy,
    orientability_verdict, pi1_config, CochainComplex,
};
use e8spin7::e8::verify::E8Context;
use e8spin7::json::{
    complex_from_str, cyc_to_json, group_to_json, two_form_from_str, two_form_to_json,
    verdict_to_json, with_warning,
};
use e8spin7::report::RunReport;
use e8spin7::spin7::{instanton_check, project, Part};

#[derive(Parser)]
#[command(name = "e8spin7", version, about = "Exact checks for the E8 model, Spin(7) linear algebra and the H³ criterion")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    E8,
    Spin7,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Run the verification suites; exits nonzero iff any suite has a violation.
    Verify {
        #[arg(value_enum)]
        target: Target,
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Include wall-clock times; output is then no longer reproducible.
        #[arg(long)]
        timings: bool,
    },
    /// Split a 2-form on R⁸ into its Λ²₇ and Λ²₂₁ parts.
    Decompose { input: String },
    /// Report only whether a 2-form satisfies the instanton condition.
    InstantonCheck { input: String },
    /// Cohomology of a cochain complex given as a fixture name or a JSON file.
    Cohomology {
        complex: String,
        /// groups, orientability, pi1, or mapping:q with q in 1..=3.
        #[arg(long, default_value = "groups")]
        report: String,
    },
    /// The shipped cochain complexes.
    Fixtures {
        #[command(subcommand)]
        action: FixtureAction,
    },
}

#[derive(Subcommand)]
enum FixtureAction {
    List,
}

type CmdResult = Result<(Value, bool), String>;

fn verify(target: Target, samples: u64, seed: u64, timings: bool) -> Vec<RunReport> {
    let n = samples as usize;
    let mut out = Vec::new();
    if matches!(target, Target::E8 | Target::All) {
        let ctx = E8Context::new();
        out.extend(e8spin7::e8::verify::run_all(&ctx, n, seed));
    }
    if matches!(target, Target::Spin7 | Target::All) {
        out.extend(e8spin7::spin7::verify::run_all(n, seed));
    }
    out.iter()
        .map(|o| RunReport::from_outcome(o, seed, timings))
        .collect()
}

fn read(path: &str) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))
}

fn decompose(path: &str, verdict_only: bool) -> CmdResult {
    let f = two_form_from_str(&read(path)?).map_err(|e| format!("{path}: {e}"))?;
    let chk = instanton_check(&f).map_err(|e| e.to_string())?;
    let norm = cyc_to_json(&chk.residual.norm_squared());
    let v = if verdict_only {
        json!({ "isInstanton": chk.is_instanton, "residualNorm2": norm })
    } else {
        json!({
            "pi7": two_form_to_json(&project(&f, Part::Seven)),
            "pi21": two_form_to_json(&project(&f, Part::TwentyOne)),
            "isInstanton": chk.is_instanton,
            "residualNorm2": norm,
        })
    };
    Ok((v, true))
}

fn load_complex(spec: &str) -> Result<CochainComplex, String> {
    if let Ok(f) = fixture(spec) {
        return Ok(f.complex);
    }
    if !Path::new(spec).exists() {
        return Err(format!(
            "{spec:?} is neither a fixture ({}) nor a file",
            fixture_names().join(", ")
        ));
    }
    complex_from_str(&read(spec)?).map_err(|e| format!("{spec}: {e}"))
}

fn cohomology(spec: &str, report: &str) -> CmdResult {
    let c = load_complex(spec)?;
    let v = match report {
        "groups" => {
            let groups: Vec<Value> = all_cohomology(&c)
                .iter()
                .enumerate()
                .map(|(k, g)| {
                    let mut v = group_to_json(g);
                    v["degree"] = json!(k);
                    v
                })
                .collect();
            json!({
                "groups": groups,
                "eulerCharacteristic": c.euler_characteristic(),
                "bettiEulerCharacteristic": betti_euler_characteristic(&c),
            })
        }
        "orientability" => verdict_to_json(&orientability_verdict(&c).map_err(|e| e.to_string())?),
        "pi1" => {
            let p = pi1_config(&c).map_err(|e| e.to_string())?;
            with_warning(json!({ "pi1": group_to_json(&p.value) }), p.warning.as_deref())
        }
        other => {
            let q = other
                .strip_prefix("mapping:")
                .and_then(|q| q.parse::<usize>().ok())
                .ok_or_else(|| format!("unknown report {other:?}; expected groups, orientability, pi1 or mapping:q"))?;
            let p = mapping_homotopy(&c, q).map_err(|e| e.to_string())?;
            with_warning(json!({ "q": q, "group": group_to_json(&p.value) }), p.warning.as_deref())
        }
    };
    Ok((v, true))
}

fn fixtures_list() -> CmdResult {
    let list: Vec<Value> = fixture_names()
        .into_iter()
        .map(|n| {
            let f = fixture(n).expect("listed fixture");
            json!({ "name": n, "description": f.description, "ranks": f.complex.ranks() })
        })
        .collect();
    Ok((Value::Array(list), true))
}

fn text_lines(reports: &[RunReport]) -> String {
    let mut s = String::new();
    for r in reports {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        s.push_str(&format!("{status} {} population={} violations={}", r.suite, r.population, r.violations));
        if let Some(ms) = r.elapsed_ms {
            s.push_str(&format!(" elapsedMs={ms}"));
        }
        s.push('\n');
    }
    if let Some(r) = reports.first() {
        s.push_str(&format!("conventionLedgerHash={} seed={}\n", r.convention_ledger_hash, r.seed));
    }
    s
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(s: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(s.as_bytes()).and_then(|_| out.flush());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify {
            target,
            samples,
            seed,
            format,
            timings,
        } => {
            let reports = verify(target, samples, seed, timings);
            let ok = reports.iter().all(RunReport::passed);
            if let Format::Text = format {
                emit(&text_lines(&reports));
                return if ok { ExitCode::SUCCESS } else { ExitCode::FAILURE };
            }
            Ok((serde_json::to_value(&reports).expect("reports serialize"), ok))
        }
        Command::Decompose { input } => decompose(&input, false),
        Command::InstantonCheck { input } => decompose(&input, true),
        Command::Cohomology { complex, report } => cohomology(&complex, &report),
        Command::Fixtures { action: FixtureAction::List } => fixtures_list(),
    };
    match result {
        Ok((v, ok)) => {
            emit(&(serde_json::to_string_pretty(&v).expect("json") + "\n"));
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
