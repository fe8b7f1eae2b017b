use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::corpus;
use crate::engine::{validate_spec, HomogeneousSpec, RawSpec};
use crate::error::{Error, Result};
use crate::lattice::IntMatrix;
use crate::oracle::PairMode;
use crate::weyl::{build_root_datum, GroupSpec, PresetGroup, RawGroup};

/// Independent count that `check` compares against the engine.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum OracleHint {
    /// `GL(2r)/H_r`, compared with the closed form.
    Glr { r: u32 },
    /// Pairs of points on the projective line.
    P1Pairs { mode: PairMode },
    /// The nonsplit rank-one torus as the conic `x² − a·y² = 1`, `a` a nonsquare.
    Conic,
    /// A torus with trivial `H`, compared with direct fixed-point enumeration.
    TorusPoints,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Metadata {
    pub name: String,
    #[serde(default)]
    pub description: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleHint>,
}

/// On-disk description of `G/H`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    pub metadata: Metadata,
    pub group: GroupSpec,
    pub subtorus_restriction: IntMatrix,
    pub gamma_generators: Vec<IntMatrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub frobenius_twist: Option<IntMatrix>,
}

/// 1-based line of the first occurrence of `"key"` in `text`.
fn line_of(text: &str, key: &str) -> Option<usize> {
    let needle = format!("\"{key}\"");
    text.lines().position(|l| l.contains(&needle)).map(|i| i + 1)
}

fn anchored(text: &str, key: &str, err: Error) -> Error {
    match (line_of(text, key), err) {
        (Some(line), Error::DimensionMismatch(m)) => Error::DimensionMismatch(format!("line {line}: {m}")),
        (Some(line), Error::InvalidInput(m)) => Error::InvalidInput(format!("line {line}: {m}")),
        (Some(line), Error::InvalidCartan(m)) => Error::InvalidCartan(format!("line {line}: {m}")),
        (_, e) => e,
    }
}

/// Re-diagnose a `group` value that matched neither form, so that an unknown
/// preset name is reported as such.
fn explain_group(text: &str) -> Option<Error> {
    let value: serde_json::Value = serde_json::from_str(text).ok()?;
    let group = value.get("group")?.clone();
    let message = if group.get("preset").is_some() {
        serde_json::from_value::<PresetGroup>(group).err()?.to_string()
    } else {
        serde_json::from_value::<RawGroup>(group).err()?.to_string()
    };
    let line = line_of(text, "group").unwrap_or(1);
    Some(Error::Parse(format!("line {line}: group: {message}")))
}

/// Parse and structurally check a spec document: the group must build, and
/// every matrix must have the shape implied by the rank and the restriction.
pub fn parse_spec_file(text: &str) -> Result<SpecFile> {
    let mut spec: SpecFile = serde_json::from_str(text).map_err(|e| {
        if e.to_string().contains("GroupSpec") {
            explain_group(text).unwrap_or_else(|| Error::Parse(e.to_string()))
        } else {
            Error::Parse(e.to_string())
        }
    })?;
    let rd = build_root_datum(&spec.group).map_err(|e| anchored(text, "group", e))?;
    let d = rd.rank();
    spec.subtorus_restriction = std::mem::replace(&mut spec.subtorus_restriction, IntMatrix::zeros(0, 0))
        .with_cols(d)
        .map_err(|_| {
            anchored(
                text,
                "subtorus_restriction",
                Error::DimensionMismatch(format!("subtorus_restriction must have {d} columns")),
            )
        })?;
    let h = spec.subtorus_rank();
    if h > d {
        return Err(anchored(
            text,
            "subtorus_restriction",
            Error::DimensionMismatch(format!("subtorus_restriction has {h} rows, more than the rank {d}")),
        ));
    }
    for (i, g) in spec.gamma_generators.iter_mut().enumerate() {
        if g.rows() == 0 && h == 0 {
            *g = IntMatrix::zeros(0, 0);
        } else if g.rows() != h || g.cols() != h {
            return Err(anchored(
                text,
                "gamma_generators",
                Error::DimensionMismatch(format!(
                    "gamma generator {i} is {}x{}, expected {h}x{h}",
                    g.rows(),
                    g.cols()
                )),
            ));
        }
    }
    if let Some(f) = &spec.frobenius_twist {
        if f.rows() != d || f.cols() != d {
            return Err(anchored(
                text,
                "frobenius_twist",
                Error::DimensionMismatch(format!("frobenius_twist is {}x{}, expected {d}x{d}", f.rows(), f.cols())),
            ));
        }
    }
    Ok(spec)
}

/// Read a spec from a path, falling back to the bundled corpus by name.
pub fn load_spec(path_or_name: &str) -> Result<SpecFile> {
    let path = Path::new(path_or_name);
    if path.is_file() {
        return parse_spec_file(&std::fs::read_to_string(path)?);
    }
    let stem = path.file_name().and_then(|s| s.to_str()).unwrap_or(path_or_name);
    match corpus::get(stem) {
        Some(text) => parse_spec_file(text),
        None => Err(Error::Io(format!(
            "{path_or_name}: no such file and no bundled spec of that name"
        ))),
    }
}

impl SpecFile {
    pub fn subtorus_rank(&self) -> usize {
        self.subtorus_restriction.rows()
    }

    pub fn to_raw(&self) -> Result<RawSpec> {
        Ok(RawSpec {
            group: build_root_datum(&self.group)?,
            restriction: self.subtorus_restriction.clone(),
            gamma_generators: self.gamma_generators.clone(),
            f0: self.frobenius_twist.clone(),
        })
    }

    pub fn validate(&self) -> Result<HomogeneousSpec> {
        validate_spec(self.to_raw()?)
    }
}
