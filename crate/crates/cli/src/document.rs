//! Input file formats.
//!
//! A fan document describes a characteristic pair:
//!
//! ```json
//! { "dim": 2, "rays": [[1,0],[0,1],[-1,-1]], "cones": [[1,2],[2,3],[1,3]],
//!   "lambda": null, "h": ["0","0","1"], "mode": "integer" }
//! ```
//!
//! An arrangement document lists affine hyperplanes `normal · x = offset`:
//!
//! ```json
//! { "dim": 2, "hyperplanes": [{ "normal": [1,0], "offset": "0" }] }
//! ```
//!
//! Vertex indices are 1-based in files. Rationals may be JSON integers or
//! strings such as `"-3/4"`.

use gvpoly::arrangements::SubspaceArrangement;
use gvpoly::complexes::{validate_characteristic, CharacteristicPair, Fan, Issue, Mode, Report};
use gvpoly::exact::scalar::{int, parse};
use gvpoly::exact::{Scalar, Vector};
use serde::Deserialize;

use crate::CliError;

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum Num {
    Int(i64),
    Text(String),
}

impl Num {
    pub fn to_scalar(&self) -> Result<Scalar, CliError> {
        match self {
            Num::Int(v) => Ok(int(*v)),
            Num::Text(s) => parse(s).map_err(|e| CliError::Parse(e.to_string())),
        }
    }
}

fn scalars(v: &[Num]) -> Result<Vector, CliError> {
    v.iter().map(Num::to_scalar).collect()
}

#[derive(Debug, Clone, Copy, Default, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum ModeName {
    #[default]
    Integer,
    Real,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub dim: usize,
    pub rays: Vec<Vec<i64>>,
    pub cones: Vec<Vec<usize>>,
    #[serde(default)]
    pub lambda: Option<Vec<Vec<Num>>>,
    #[serde(default)]
    pub h: Option<Vec<Num>>,
    #[serde(default)]
    pub mode: ModeName,
    /// Accept rays that cover space more than once; completeness issues
    /// become warnings and the orientation comes from the ray determinants.
    #[serde(default)]
    pub multifan: bool,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Hyperplane {
    pub normal: Vec<Num>,
    pub offset: Num,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrangementDocument {
    pub dim: usize,
    pub hyperplanes: Vec<Hyperplane>,
}

/// A parsed fan document before any mathematical validation.
#[derive(Debug, Clone)]
pub struct FanInput {
    pub fan: Fan,
    pub lambda: Option<Vec<Vector>>,
    pub h: Option<Vector>,
    pub mode: Mode,
    pub multifan: bool,
}

/// Outcome of validating a fan document.
#[derive(Debug, Clone)]
pub struct Validation {
    pub fan_report: Report,
    pub characteristic_report: Report,
    pub warnings: Vec<String>,
}

impl Validation {
    pub fn is_ok(&self) -> bool {
        self.fan_report.is_ok() && self.characteristic_report.is_ok()
    }
}

pub enum Loaded {
    Fan(FanInput),
    Arrangement(SubspaceArrangement),
}

pub fn load(bytes: &[u8]) -> Result<Loaded, CliError> {
    let value: serde_json::Value =
        serde_json::from_slice(bytes).map_err(|e| CliError::Parse(format!("invalid JSON: {e}")))?;
    if value.get("hyperplanes").is_some() {
        let doc: ArrangementDocument =
            serde_json::from_value(value).map_err(|e| CliError::Parse(format!("arrangement document: {e}")))?;
        return Ok(Loaded::Arrangement(arrangement_from(doc)?));
    }
    let doc: InputDocument =
        serde_json::from_value(value).map_err(|e| CliError::Parse(format!("fan document: {e}")))?;
    Ok(Loaded::Fan(fan_from(doc)?))
}

fn arrangement_from(doc: ArrangementDocument) -> Result<SubspaceArrangement, CliError> {
    let mut forms = Vec::with_capacity(doc.hyperplanes.len());
    for (i, hp) in doc.hyperplanes.iter().enumerate() {
        if hp.normal.len() != doc.dim {
            return Err(CliError::Parse(format!(
                "hyperplane {} has {} coordinates, expected {}",
                i + 1,
                hp.normal.len(),
                doc.dim
            )));
        }
        forms.push((scalars(&hp.normal)?, hp.offset.to_scalar()?));
    }
    SubspaceArrangement::hyperplanes(doc.dim, forms).map_err(CliError::from)
}

fn fan_from(doc: InputDocument) -> Result<FanInput, CliError> {
    let m = doc.rays.len();
    for (i, r) in doc.rays.iter().enumerate() {
        if r.len() != doc.dim {
            return Err(CliError::Parse(format!("ray {} has {} coordinates, expected {}", i + 1, r.len(), doc.dim)));
        }
    }
    let mut cones = Vec::with_capacity(doc.cones.len());
    for c in &doc.cones {
        if let Some(&bad) = c.iter().find(|&&v| v == 0 || v > m) {
            return Err(CliError::Parse(format!("cone index {bad} is outside 1..={m}")));
        }
        cones.push(c.iter().map(|v| v - 1).collect());
    }
    let rays = doc.rays.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
    let fan = Fan::new(doc.dim, rays, cones).map_err(|e| CliError::Parse(e.to_string()))?;
    let lambda = match &doc.lambda {
        Some(rows) => {
            if rows.len() != m {
                return Err(CliError::Parse(format!("lambda has {} rows, expected {m}", rows.len())));
            }
            Some(rows.iter().map(|r| scalars(r)).collect::<Result<Vec<_>, _>>()?)
        }
        None => None,
    };
    let h = doc.h.as_deref().map(scalars).transpose()?;
    let mode = match doc.mode {
        ModeName::Integer => Mode::Integer,
        ModeName::Real => Mode::Real,
    };
    Ok(FanInput { fan, lambda, h, mode, multifan: doc.multifan })
}

impl FanInput {
    pub fn validate(&self) -> Validation {
        let mut fan_report = self.fan.validate();
        let mut warnings =
            vec!["completeness is tested on sampled directions with exact arithmetic: a semi-decision".to_string()];
        if self.multifan {
            let (cover, rest): (Vec<Issue>, Vec<Issue>) =
                fan_report.issues.into_iter().partition(|i| matches!(i, Issue::NotComplete { .. }));
            warnings.extend(cover.iter().map(|i| format!("multifan: {i}")));
            fan_report.issues = rest;
        }
        let lambda = self.lambda.clone().unwrap_or_else(|| self.fan.rays().to_vec());
        let characteristic_report = validate_characteristic(&self.fan.complex(), self.fan.dim(), &lambda, self.mode);
        Validation { fan_report, characteristic_report, warnings }
    }

    /// The validated pair; for a multifan the fan itself is not attached.
    pub fn pair(&self) -> Result<(CharacteristicPair, Vec<String>), CliError> {
        let v = self.validate();
        if !v.is_ok() {
            let mut all = v.fan_report.clone();
            all.merge(v.characteristic_report.clone());
            return Err(CliError::Validation(all.messages()));
        }
        let pair = if self.multifan {
            let sphere = self.fan.orientation()?;
            let lambda = self.lambda.clone().unwrap_or_else(|| self.fan.rays().to_vec());
            CharacteristicPair::new(sphere, lambda, self.mode)?
        } else {
            CharacteristicPair::from_fan(self.fan.clone(), self.lambda.clone(), self.mode)?
        };
        Ok((pair, v.warnings))
    }
}
