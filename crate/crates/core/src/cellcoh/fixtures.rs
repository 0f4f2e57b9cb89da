use serde_json::Value;

use super::{CochainComplex, CohomologyError};
use crate::json::complex_from_json;

/// A shipped complex together with its documentation string.
#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: &'static str,
    pub description: String,
    pub complex: CochainComplex,
}

/// `(name, JSON source)` for every shipped fixture.
pub const FIXTURES: [(&str, &str); 5] = [
    ("hp2", include_str!("../../fixtures/hp2.json")),
    ("gr2c4", include_str!("../../fixtures/gr2c4.json")),
    ("free-h3", include_str!("../../fixtures/free-h3.json")),
    ("torsion-3", include_str!("../../fixtures/torsion-3.json")),
    ("torsion-2", include_str!("../../fixtures/torsion-2.json")),
];

pub fn fixture_names() -> Vec<&'static str> {
    FIXTURES.iter().map(|(n, _)| *n).collect()
}

pub fn fixture(name: &str) -> Result<Fixture, CohomologyError> {
    let (name, src) = FIXTURES
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| CohomologyError::UnknownFixture(name.to_string()))?;
    let v: Value = serde_json::from_str(src).expect("shipped fixtures are valid JSON");
    let complex = complex_from_json(&v).expect("shipped fixtures are valid complexes");
    Ok(Fixture {
        name,
        description: v["description"].as_str().unwrap_or_default().to_string(),
        complex,
    })
}
