//! Problem files: a strict JSON document naming a Cartan matrix, a weight and a height bound.

use std::fs;
use std::path::{Path, PathBuf};

use kmchar_core::{CartanDatum, Rational, Weight};
use serde::Deserialize;

use crate::CliError;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProblem {
    cartan_matrix: Vec<Vec<i64>>,
    weight: Vec<String>,
    height_bound: u32,
    #[serde(default)]
    cache_dir: Option<PathBuf>,
}

#[derive(Clone, Debug)]
pub struct Problem {
    pub datum: CartanDatum,
    /// Fundamental-weight coordinates.
    pub lambda: Weight,
    pub height_bound: u32,
    /// Resolved against the directory of the problem file.
    pub cache_dir: Option<PathBuf>,
}

/// Accepts `p/q` or a bare integer. Decimals are rejected.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let t = text.trim();
    let ok = !t.is_empty()
        && t.chars()
            .all(|c| c.is_ascii_digit() || c == '/' || c == '-');
    if !ok {
        return None;
    }
    let r: Rational = t.parse().ok()?;
    Some(r)
}

pub fn parse_problem(text: &str, base: Option<&Path>) -> Result<Problem, CliError> {
    let raw: RawProblem = serde_json::from_str(text).map_err(|e| CliError::Parse {
        field: format!("line {} column {}", e.line(), e.column()),
        message: e.to_string(),
    })?;
    if raw.height_bound == 0 {
        return Err(CliError::Parse {
            field: "height_bound".into(),
            message: "must be at least 1".into(),
        });
    }
    let coords = raw
        .weight
        .iter()
        .enumerate()
        .map(|(k, s)| {
            parse_rational(s).ok_or_else(|| CliError::Parse {
                field: format!("weight[{k}]"),
                message: format!("{s:?} is not an exact rational p/q"),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let datum = CartanDatum::new(raw.cartan_matrix)?;
    let lambda = Weight::new(coords);
    datum.check_weight(&lambda)?;
    let cache_dir = raw.cache_dir.map(|p| match base {
        Some(b) if p.is_relative() => b.join(p),
        _ => p,
    });
    Ok(Problem {
        datum,
        lambda,
        height_bound: raw.height_bound,
        cache_dir,
    })
}

pub fn load_problem(path: &Path) -> Result<Problem, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    parse_problem(&text, path.parent())
}
