//! JSON encodings for exact values, 2-forms, complexes and verdicts.
//!
//! Scalars are exact: a rational is a decimal string like `"-3/4"` (integers may also be
//! JSON numbers), and a general element of Q(ζ₁₂) is an array of four rational strings,
//! its coordinates in the basis `1, ζ, ζ², ζ³`.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Map, Value};

use crate::cellcoh::{CochainComplex, CohGroup, CohomologyError, OrientabilityVerdict};
use crate::field::{CycMatrix, CycNum, IntMatrix};
use crate::spin7::{pair_index, pairs, Spin7Error, TwoForm8, PAIRS};

#[derive(Debug, thiserror::Error)]
pub enum JsonError {
    #[error("parse error: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error(transparent)]
    Spin7(#[from] Spin7Error),
    #[error(transparent)]
    Complex(#[from] CohomologyError),
}

fn invalid<T>(msg: impl Into<String>) -> Result<T, JsonError> {
    Err(JsonError::Invalid(msg.into()))
}

pub fn rational_to_string(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational, JsonError> {
    let s = s.trim();
    let bad = || JsonError::Invalid(format!("not an exact rational: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q == BigInt::from(0) {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

fn rational_from_value(v: &Value) -> Result<BigRational, JsonError> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(BigRational::from_integer(i.into())),
            None => invalid(format!("{n} is not an integer; write fractions as strings")),
        },
        _ => invalid(format!("expected a rational, got {v}")),
    }
}

/// A rational string when the value is rational, otherwise four coordinate strings.
pub fn cyc_to_json(c: &CycNum) -> Value {
    match c.as_rational() {
        Some(r) => Value::String(rational_to_string(r)),
        None => Value::Array(
            c.coeffs()
                .iter()
                .map(|r| Value::String(rational_to_string(r)))
                .collect(),
        ),
    }
}

pub fn cyc_from_json(v: &Value) -> Result<CycNum, JsonError> {
    match v {
        Value::Array(xs) if xs.len() == 4 => {
            let c: Vec<BigRational> = xs.iter().map(rational_from_value).collect::<Result<_, _>>()?;
            Ok(CycNum::from_coeffs(c.try_into().expect("four entries")))
        }
        Value::Array(_) => invalid("a cyclotomic number has exactly 4 coordinates"),
        _ => Ok(CycNum::from_rational(rational_from_value(v)?)),
    }
}

fn cyc_matrix_from_json(v: &Value) -> Result<CycMatrix, JsonError> {
    let Value::Array(rows) = v else {
        return invalid("matrix must be an array of rows");
    };
    let rows: Vec<Vec<CycNum>> = rows
        .iter()
        .map(|r| match r {
            Value::Array(xs) => xs.iter().map(cyc_from_json).collect(),
            _ => invalid("matrix rows must be arrays"),
        })
        .collect::<Result<_, _>>()?;
    CycMatrix::from_rows(rows).map_err(|e| JsonError::Invalid(e.to_string()))
}

fn cyc_matrix_to_json(m: &CycMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(cyc_to_json).collect()))
            .collect(),
    )
}

/// Reads `{"terms":[{"idx":[a,b],"coeff":…}]}` or the lie-valued variant with
/// `"matrix"` in place of `"coeff"`. Repeated pairs add up; `[b,a]` means `−[a,b]`.
pub fn two_form_from_str(s: &str) -> Result<TwoForm8, JsonError> {
    two_form_from_json(&serde_json::from_str(s)?)
}

pub fn two_form_from_json(v: &Value) -> Result<TwoForm8, JsonError> {
    let Some(Value::Array(terms)) = v.get("terms") else {
        return invalid("expected an object with a \"terms\" array");
    };
    let mut scalar = vec![CycNum::zero(); PAIRS];
    let mut mats: Vec<Option<CycMatrix>> = vec![None; PAIRS];
    let mut lie_dim: Option<usize> = None;
    let mut any_scalar = false;
    for t in terms {
        let idx: Vec<usize> = match t.get("idx") {
            Some(Value::Array(xs)) => xs
                .iter()
                .map(|x| x.as_u64().map(|u| u as usize))
                .collect::<Option<_>>()
                .ok_or_else(|| JsonError::Invalid("idx entries must be integers 1..=8".into()))?,
            _ => return invalid("every term needs an \"idx\" array"),
        };
        if idx.len() != 2 {
            return invalid(format!("not a 2-form: term has {} indices", idx.len()));
        }
        let (a, b) = (idx[0], idx[1]);
        if a == b || !(1..=8).contains(&a) || !(1..=8).contains(&b) {
            return invalid(format!("bad index pair [{a},{b}]"));
        }
        let (k, sign) = match pair_index(a.min(b), a.max(b)) {
            Some(k) => (k, if a < b { CycNum::one() } else { CycNum::from_int(-1) }),
            None => return invalid(format!("bad index pair [{a},{b}]")),
        };
        match (t.get("coeff"), t.get("matrix")) {
            (Some(c), None) => {
                any_scalar = true;
                scalar[k] += &(&cyc_from_json(c)? * &sign);
            }
            (None, Some(m)) => {
                let m = cyc_matrix_from_json(m)?.scale(&sign);
                if *lie_dim.get_or_insert(m.rows()) != m.rows() {
                    return invalid("all coefficient matrices must have the same size");
                }
                mats[k] = Some(match mats[k].take() {
                    Some(prev) => &prev + &m,
                    None => m,
                });
            }
            _ => return invalid("every term needs exactly one of \"coeff\" or \"matrix\""),
        }
    }
    match lie_dim {
        None => Ok(TwoForm8::scalar(scalar)?),
        Some(_) if any_scalar => invalid("cannot mix scalar and matrix coefficients"),
        Some(d) => Ok(TwoForm8::lie_valued(
            mats.into_iter()
                .map(|m| m.unwrap_or_else(|| CycMatrix::zeros(d, d)))
                .collect(),
        )?),
    }
}

/// Nonzero terms in lexicographic pair order.
pub fn two_form_to_json(f: &TwoForm8) -> Value {
    let mut terms = Vec::new();
    for (k, p) in pairs().iter().enumerate() {
        let idx = json!(p.indices());
        if let Some(v) = f.scalar_coeffs() {
            if !v[k].is_zero() {
                terms.push(json!({"idx": idx, "coeff": cyc_to_json(&v[k])}));
            }
        } else if let Some(ms) = f.matrix_coeffs() {
            if !ms[k].is_zero() {
                terms.push(json!({"idx": idx, "matrix": cyc_matrix_to_json(&ms[k])}));
            }
        }
    }
    json!({ "terms": terms })
}

fn int_from_value(v: &Value) -> Result<BigInt, JsonError> {
    let r = rational_from_value(v)?;
    if !r.is_integer() {
        return invalid(format!("{v} is not an integer"));
    }
    Ok(r.to_integer())
}

/// Reads `{"ranks":[n₀,…],"deltas":[δ⁰,…]}` where `δᵏ` lists `n_{k+1}` rows of length
/// `n_k`; an empty array stands for the zero map of whatever shape is needed.
pub fn complex_from_str(s: &str) -> Result<CochainComplex, JsonError> {
    complex_from_json(&serde_json::from_str(s)?)
}

pub fn complex_from_json(v: &Value) -> Result<CochainComplex, JsonError> {
    let ranks: Vec<usize> = match v.get("ranks") {
        Some(Value::Array(xs)) => xs
            .iter()
            .map(|x| x.as_u64().map(|u| u as usize))
            .collect::<Option<_>>()
            .ok_or_else(|| JsonError::Invalid("ranks must be nonnegative integers".into()))?,
        _ => return invalid("expected a \"ranks\" array"),
    };
    if ranks.is_empty() {
        return invalid("ranks must be nonempty");
    }
    let deltas = match v.get("deltas") {
        Some(Value::Array(ds)) => ds,
        None => &Vec::new(),
        _ => return invalid("\"deltas\" must be an array"),
    };
    if !deltas.is_empty() && deltas.len() + 1 != ranks.len() {
        return invalid(format!(
            "{} ranks need {} coboundaries, got {}",
            ranks.len(),
            ranks.len() - 1,
            deltas.len()
        ));
    }
    let mut mats = Vec::with_capacity(ranks.len() - 1);
    for k in 0..ranks.len() - 1 {
        let (rows, cols) = (ranks[k + 1], ranks[k]);
        let m = match deltas.get(k) {
            None => IntMatrix::zeros(rows, cols),
            Some(Value::Array(rs)) if rs.is_empty() => IntMatrix::zeros(rows, cols),
            Some(Value::Array(rs)) => {
                let rs: Vec<Vec<BigInt>> = rs
                    .iter()
                    .map(|r| match r {
                        Value::Array(xs) => xs.iter().map(int_from_value).collect(),
                        _ => invalid(format!("rows of δ^{k} must be arrays")),
                    })
                    .collect::<Result<_, _>>()?;
                if rs.len() != rows {
                    return invalid(format!("δ^{k} has {} rows, expected {rows}", rs.len()));
                }
                IntMatrix::from_rows(rs, cols)
                    .map_err(|_| JsonError::Invalid(format!("rows of δ^{k} must have length {cols}")))?
            }
            Some(_) => return invalid(format!("δ^{k} must be an array of rows")),
        };
        mats.push(m);
    }
    Ok(CochainComplex::new(ranks, mats)?)
}

pub fn complex_to_json(c: &CochainComplex) -> Value {
    let deltas: Vec<Value> = c
        .deltas()
        .iter()
        .map(|m| {
            Value::Array(
                (0..m.rows())
                    .map(|i| Value::Array(m.row_vec(i).iter().map(|x| Value::String(x.to_string())).collect()))
                    .collect(),
            )
        })
        .collect();
    json!({ "ranks": c.ranks(), "deltas": deltas })
}

pub fn group_to_json(g: &CohGroup) -> Value {
    json!({
        "betti": g.betti,
        "torsion": g.torsion.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
    })
}

pub fn verdict_to_json(v: &OrientabilityVerdict) -> Value {
    json!({
        "h3": group_to_json(&v.h3),
        "criterionHolds": v.criterion_holds,
        "reason": v.reason.as_str(),
    })
}

/// Adds a `"warning"` entry when one is present.
pub fn with_warning(mut v: Value, warning: Option<&str>) -> Value {
    if let (Value::Object(m), Some(w)) = (&mut v, warning) {
        m.insert("warning".into(), Value::String(w.into()));
    }
    v
}

pub fn object(entries: Vec<(&str, Value)>) -> Value {
    let mut m = Map::new();
    for (k, v) in entries {
        m.insert(k.to_string(), v);
    }
    Value::Object(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalars_round_trip() {
        for c in [CycNum::frac(-3, 4), CycNum::from_int(5), CycNum::zeta(), CycNum::omega()] {
            assert_eq!(cyc_from_json(&cyc_to_json(&c)).unwrap(), c);
        }
        assert_eq!(cyc_to_json(&CycNum::frac(1, 2)), json!("1/2"));
        assert_eq!(cyc_from_json(&json!(7)).unwrap(), CycNum::from_int(7));
        assert!(cyc_from_json(&json!(0.5)).is_err());
        assert!(cyc_from_json(&json!("1/0")).is_err());
    }

    #[test]
    fn two_forms() {
        let f = two_form_from_str(r#"{"terms":[{"idx":[2,1],"coeff":"1/2"},{"idx":[3,4],"coeff":1}]}"#).unwrap();
        let v = f.scalar_coeffs().unwrap();
        assert_eq!(v[0], CycNum::frac(-1, 2));
        assert_eq!(two_form_from_json(&two_form_to_json(&f)).unwrap(), f);
        assert!(two_form_from_str(r#"{"terms":[{"idx":[1,2,3],"coeff":1}]}"#).is_err());
        let e = two_form_from_str("{\"terms\": [\n  {\"idx\": [1,2], }\n]}").unwrap_err();
        assert!(e.to_string().contains("line 2"), "{e}");
        let lie = two_form_from_str(
            r#"{"terms":[{"idx":[1,2],"matrix":[[["0","0","0","1"],"0"],["0",["0","0","0","-1"]]]}]}"#,
        )
        .unwrap();
        assert_eq!(lie.lie_dim(), Some(2));
        assert_eq!(two_form_from_json(&two_form_to_json(&lie)).unwrap(), lie);
    }

    #[test]
    fn complexes() {
        let c = complex_from_str(r#"{"ranks":[1,1,1],"deltas":[[["0"]],[[2]]]}"#).unwrap();
        assert_eq!(complex_from_json(&complex_to_json(&c)).unwrap(), c);
        let bad = complex_from_str(r#"{"ranks":[1,1,1],"deltas":[[[1]],[[1]]]}"#);
        assert!(matches!(bad, Err(JsonError::Complex(CohomologyError::NotAComplex { degree: 0 }))));
    }
}
