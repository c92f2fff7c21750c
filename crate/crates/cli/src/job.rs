//! The job description shared by the compute commands, and its validation.

use ramyip::names::{parse_ints, weight_from_input, AffineName, Basis};
use ramyip::root_data::{Datum, Lattice, ParamMode};
use ramyip::Wt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid --{field}: {msg}")]
    Validation { field: &'static str, msg: String },
    #[error("{0}")]
    Failed(String),
    #[error(transparent)]
    Lib(#[from] ramyip::Error),
    #[error("cannot read {path}: {msg}")]
    Io { path: String, msg: String },
}

impl CliError {
    pub fn field(field: &'static str, e: impl ToString) -> Self {
        CliError::Validation { field, msg: e.to_string() }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation { .. } | CliError::Io { .. } => 2,
            _ => 1,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Which value of the polynomial to produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Spec {
    Full,
    V0,
    Vinf,
    Q0,
    Qinf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Params {
    /// A single parameter `v`.
    Equal,
    /// Independent `v_s`, `v_l`, `v_0`, ...
    General,
}

/// A fully specified computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JobSpec {
    #[serde(rename = "type")]
    pub type_name: String,
    pub lattice_x: Option<String>,
    pub lattice_y: Option<String>,
    pub weight: Vec<i64>,
    pub basis: Option<String>,
    pub spec: Spec,
    pub symmetric: bool,
    pub params: Params,
    pub u: Option<Vec<usize>>,
    pub word: Option<Vec<usize>>,
    pub format: Format,
}

/// A validated job.
pub struct Resolved {
    pub datum: Datum,
    pub basis: Basis,
    pub lambda: Wt,
}

impl JobSpec {
    pub fn datum_ref(&self, d: &Datum) -> String {
        format!("{} ({:?}, {:?})", self.type_name, d.lat_x, d.lat_y)
    }

    pub fn mode(&self) -> ParamMode {
        match self.params {
            Params::Equal => ParamMode::Equal,
            Params::General => ParamMode::General,
        }
    }

    pub fn resolve(&self) -> CliResult<Resolved> {
        let name = AffineName::parse(&self.type_name).map_err(|e| CliError::field("type", e))?;
        let lattices = match (&self.lattice_x, &self.lattice_y) {
            (None, None) => None,
            (x, y) => {
                let parse = |s: &Option<String>, field, default| -> CliResult<Lattice> {
                    s.as_deref().map_or(Ok(default), |s| Lattice::parse(s).map_err(|e| CliError::field(field, e)))
                };
                Some((parse(x, "lattice-x", name.lattices.0)?, parse(y, "lattice-y", name.lattices.1)?))
            }
        };
        let datum = name.datum(lattices).map_err(|e| CliError::field("type", e))?;
        let basis = match &self.basis {
            Some(b) => Basis::parse(b).map_err(|e| CliError::field("basis", e))?,
            None => name.default_basis(),
        };
        let lambda = weight_from_input(&datum, basis, &self.weight).map_err(|e| CliError::field("weight", e))?;
        if let Some(w) = &self.word {
            if w.iter().any(|&i| i > datum.n) {
                return Err(CliError::field("word", format!("node index above {}", datum.n)));
            }
        }
        if let Some(u) = &self.u {
            if u.iter().any(|&i| i > datum.n) {
                return Err(CliError::field("u", format!("node index above {}", datum.n)));
            }
        }
        Ok(Resolved { datum, basis, lambda })
    }
}

/// Comma-separated weight coordinates.
pub fn parse_weight(s: &str) -> CliResult<Vec<i64>> {
    parse_ints(s).map_err(|e| CliError::field("weight", e))
}

/// Comma-separated node labels; the empty string is the empty word.
pub fn parse_word(field: &'static str, s: &str) -> CliResult<Vec<usize>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|_| CliError::field(field, format!("'{p}' is not a node label"))))
        .collect()
}
