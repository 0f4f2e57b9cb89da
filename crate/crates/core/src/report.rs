//! Suite outcomes, run reports and the hash of the frozen conventions.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

/// Every sign, normalization and ordering choice the verification depends on.
///
/// Changing any entry changes [`convention_ledger_hash`], and reports with different
/// hashes are not comparable.
pub const CONVENTIONS: &[(&str, &str)] = &[
    ("scalar-field", "Q(zeta12), power basis, zeta^4 = zeta^2 - 1"),
    ("form-inner-product", "bilinear; increasing multi-index basis orthonormal"),
    ("orientation", "vol = dx1 ^ ... ^ dxn, standard order"),
    ("hodge-star", "a ^ *b = (a,b) vol"),
    ("e8-basis", "E_ij (i!=j, row-major), E_kk - E_k+1k+1, dx_I (lex) in x, dx_I (lex) in y"),
    ("e8-dual-summand", "y on the same 3-form basis, bilinear pairing, tau coefficientwise"),
    ("compact-involution", "sigma(R,x,y) = (-R^dagger, -tau y, -tau x)"),
    ("cayley-form", "14 terms, dx1234 - dx1278 - dx1638 - ... + dx2637"),
    ("l-omega", "L(F) = *(F ^ Omega); pi7 = eigenvalue 3, pi21 = eigenvalue -1"),
    ("clifford", "g_i g_j + g_j g_i = -2 delta_ij"),
    ("gamma-words", "111e 11ex -1xez 1e1z xzez ez1z xezx xexx (x=s1, z=s3, e=[[0,1],[-1,0]])"),
    ("chirality", "S+ = +1 eigenspace of g1...g8"),
    ("unit-spinor", "first basis vector of S+"),
    ("codifferential-symbol", "a -> <xi, a>"),
];

pub fn convention_ledger_hash() -> String {
    let mut h = Sha256::new();
    for (k, v) in CONVENTIONS {
        h.update(k.as_bytes());
        h.update(b"=");
        h.update(v.as_bytes());
        h.update(b"\n");
    }
    hex::encode(h.finalize())
}

/// Seeded RNG for one named suite, independent of the order suites run in.
pub fn suite_rng(seed: u64, suite: &str) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tag = Sha256::digest(suite.as_bytes());
    let mut stream = [0u8; 8];
    stream.copy_from_slice(&tag[..8]);
    rng.set_stream(u64::from_le_bytes(stream));
    rng
}

/// Result of one verification sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub name: String,
    pub population: u64,
    pub violations: u64,
    /// Wall-clock time of the sweep that produced this outcome, if measured.
    pub elapsed_ms: Option<u64>,
}

impl SuiteOutcome {
    pub fn new(name: &str, population: u64, violations: u64) -> Self {
        SuiteOutcome {
            name: name.to_string(),
            population,
            violations,
            elapsed_ms: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

/// Runs a sweep and stamps its wall-clock time on every outcome it returns.
pub fn timed(f: impl FnOnce() -> Vec<SuiteOutcome>) -> Vec<SuiteOutcome> {
    let start = std::time::Instant::now();
    let mut out = f();
    let ms = start.elapsed().as_millis() as u64;
    for o in &mut out {
        o.elapsed_ms = Some(ms);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RunReport {
    pub suite: String,
    pub population: u64,
    pub violations: u64,
    pub seed: u64,
    pub convention_ledger_hash: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub elapsed_ms: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("reports were produced under different conventions ({0} vs {1})")]
pub struct ConventionMismatch(pub String, pub String);

impl RunReport {
    /// Timings are kept only when `with_timing` is set, so default reports are reproducible.
    pub fn from_outcome(o: &SuiteOutcome, seed: u64, with_timing: bool) -> Self {
        RunReport {
            suite: o.name.clone(),
            population: o.population,
            violations: o.violations,
            seed,
            convention_ledger_hash: convention_ledger_hash(),
            elapsed_ms: if with_timing { o.elapsed_ms } else { None },
        }
    }

    pub fn passed(&self) -> bool {
        self.violations == 0
    }

    /// True when both reports describe the same outcome; errors across conventions.
    pub fn same_outcome(&self, other: &RunReport) -> Result<bool, ConventionMismatch> {
        if self.convention_ledger_hash != other.convention_ledger_hash {
            return Err(ConventionMismatch(
                self.convention_ledger_hash.clone(),
                other.convention_ledger_hash.clone(),
            ));
        }
        Ok(self.suite == other.suite
            && self.population == other.population
            && self.violations == other.violations)
    }
}
