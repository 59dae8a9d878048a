//! Line-oriented problem files.
//!
//! ```text
//! # comment
//! space 1 1 3 6
//! vars x0 x1 x2 x3
//! gen x0^3
//! gen x1^3
//! param bound 8
//! ```
//!
//! `vars` is optional (default `x0 … xN`). `param` values run to the end of
//! the line. Unknown directives and unknown parameter names are errors.

use std::collections::BTreeMap;
use std::sync::Arc;

use wcilab_core::wps::WeightedSpace;
use wcilab_core::{parse_poly, GradedRing, Poly};

use crate::CliError;

pub const PARAMS: &[&str] = &[
    "bound",
    "irrelevant",
    "components",
    "oracle_budget",
    "a",
    "degree",
    "kind",
    "max_weight",
    "max_codim",
    "dim",
    "max_degree_sum",
    "class",
    "max_results",
    "max_a",
    "max_d",
];

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ProblemFile {
    pub weights: Option<Vec<i64>>,
    pub vars: Option<Vec<String>>,
    /// Raw generator text with its line number.
    pub gens: Vec<(usize, String)>,
    pub params: BTreeMap<String, (usize, String)>,
}

fn line_err(line: usize, msg: impl Into<String>) -> CliError {
    CliError::Problem {
        line,
        msg: msg.into(),
    }
}

impl ProblemFile {
    pub fn parse(text: &str) -> Result<ProblemFile, CliError> {
        let mut p = ProblemFile::default();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            if !content.is_ascii() {
                return Err(line_err(line, "non-ASCII input"));
            }
            let (key, rest) = match content.split_once(char::is_whitespace) {
                Some((k, r)) => (k, r.trim()),
                None => (content, ""),
            };
            match key {
                "space" => {
                    if p.weights.is_some() {
                        return Err(line_err(line, "duplicate space line"));
                    }
                    let w: Result<Vec<i64>, _> = rest.split_whitespace().map(str::parse).collect();
                    let w = w.map_err(|_| line_err(line, "weights must be integers"))?;
                    p.weights = Some(w);
                }
                "vars" => {
                    if p.vars.is_some() {
                        return Err(line_err(line, "duplicate vars line"));
                    }
                    p.vars = Some(rest.split_whitespace().map(String::from).collect());
                }
                "gen" => {
                    if rest.is_empty() {
                        return Err(line_err(line, "empty generator"));
                    }
                    p.gens.push((line, rest.to_string()));
                }
                "param" => {
                    let (name, value) = match rest.split_once(char::is_whitespace) {
                        Some((n, v)) => (n, v.trim()),
                        None => return Err(line_err(line, "param needs a name and a value")),
                    };
                    if !PARAMS.contains(&name) {
                        return Err(line_err(line, format!("unknown parameter '{name}'")));
                    }
                    if p.params
                        .insert(name.to_string(), (line, value.to_string()))
                        .is_some()
                    {
                        return Err(line_err(line, format!("duplicate parameter '{name}'")));
                    }
                }
                other => return Err(line_err(line, format!("unknown directive '{other}'"))),
            }
        }
        Ok(p)
    }

    pub fn param(&self, name: &str) -> Option<&str> {
        self.params.get(name).map(|(_, v)| v.as_str())
    }

    pub fn int_param(&self, name: &str) -> Result<Option<i64>, CliError> {
        match self.params.get(name) {
            None => Ok(None),
            Some((line, v)) => v
                .parse()
                .map(Some)
                .map_err(|_| line_err(*line, format!("parameter '{name}' must be an integer"))),
        }
    }

    /// Comma- or space-separated integers.
    pub fn int_list_param(&self, name: &str) -> Result<Option<Vec<i64>>, CliError> {
        match self.params.get(name) {
            None => Ok(None),
            Some((line, v)) => v
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| s.parse())
                .collect::<Result<Vec<i64>, _>>()
                .map(Some)
                .map_err(|_| {
                    line_err(
                        *line,
                        format!("parameter '{name}' must be a list of integers"),
                    )
                }),
        }
    }

    pub fn ring(&self) -> Result<Arc<GradedRing>, CliError> {
        let w = self
            .weights
            .as_ref()
            .ok_or_else(|| line_err(0, "missing space line"))?;
        let names = match &self.vars {
            Some(v) => v.clone(),
            None => (0..w.len()).map(|i| format!("x{i}")).collect(),
        };
        Ok(GradedRing::new(names, w.clone(), None)?)
    }

    pub fn space(&self) -> Result<WeightedSpace, CliError> {
        Ok(WeightedSpace::from_ring(self.ring()?)?)
    }

    pub fn generators(&self, ring: &Arc<GradedRing>) -> Result<Vec<Poly>, CliError> {
        self.gens
            .iter()
            .map(|(line, text)| parse_poly(text, ring).map_err(|e| line_err(*line, e.to_string())))
            .collect()
    }
}
