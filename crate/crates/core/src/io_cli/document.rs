//! Surface documents: a TOML description of the fibration, validated into a
//! [`SurfaceDescription`] with field-located errors.
//!
//! ```toml
//! minimal_model_class = "k3"      # only needed when kappa <= 0
//!
//! [base]
//! genus = 0
//!
//! [flags]
//! isotrivial = true
//! cm = false                      # optional
//! standard = true                 # optional
//! zeta_nef_codim_one = false      # optional
//! zeta_pseudoeffective = false    # optional
//!
//! [[fibers]]
//! kind = "I0*"                    # or kind = "I", n = 3; kind = "I*", n = 1
//! count = 4                       # optional, default 1
//! multiplicity = 1                # optional, only for I0
//!
//! [action]                        # optional
//! group_order = 2
//! branch = [{ order = 2, action = "involution" }]
//! ```

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::kodaira::{numerical_invariants, Assumptions, FiberConfiguration, FiberKind, FiberType, KodairaError};
use crate::orbifold::{BranchPoint, EAction, GroupActionData, OrbifoldError};
use crate::verdict::{MinimalModelClass, SurfaceDescription};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DocumentErrorKind {
    Syntax,
    UnknownFiberKind,
    InvalidMultiplicity,
    HurwitzInconsistent,
    NonIntegralEuler,
    InvalidValue,
}

impl fmt::Display for DocumentErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::Syntax => "syntax error",
            Self::UnknownFiberKind => "unknown fiber kind",
            Self::InvalidMultiplicity => "invalid multiplicity",
            Self::HurwitzInconsistent => "Hurwitz formula inconsistent",
            Self::NonIntegralEuler => "non-integral Euler characteristic",
            Self::InvalidValue => "invalid value",
        };
        f.write_str(s)
    }
}

/// A validation failure at a field path such as `fibers[2].multiplicity`.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("{path}: {kind}: {message}")]
pub struct DocumentError {
    pub path: String,
    pub kind: DocumentErrorKind,
    pub message: String,
}

impl DocumentError {
    fn new(path: impl Into<String>, kind: DocumentErrorKind, message: impl fmt::Display) -> Self {
        // keep the message to one line
        let message =
            message.to_string().lines().map(str::trim).filter(|l| !l.is_empty()).collect::<Vec<_>>().join(" ");
        Self { path: path.into(), kind, message }
    }
}

#[derive(Debug, Default, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    minimal_model_class: Option<String>,
    base: RawBase,
    #[serde(default)]
    flags: RawFlags,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    fibers: Vec<RawFiber>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    action: Option<RawAction>,
}

#[derive(Debug, Default, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawBase {
    genus: i64,
}

#[derive(Debug, Default, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawFlags {
    #[serde(default)]
    isotrivial: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    cm: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    standard: Option<bool>,
    #[serde(default)]
    zeta_nef_codim_one: bool,
    #[serde(default)]
    zeta_pseudoeffective: bool,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawFiber {
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    n: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    multiplicity: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    count: Option<i64>,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawAction {
    group_order: i64,
    #[serde(default)]
    branch: Vec<RawBranch>,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawBranch {
    order: i64,
    action: String,
}

/// Upper bound on `count` per fiber entry.
const MAX_COUNT: i64 = 10_000;

fn nonneg_u32(v: i64, path: &str) -> Result<u32, DocumentError> {
    u32::try_from(v).map_err(|_| {
        DocumentError::new(path, DocumentErrorKind::InvalidValue, format!("expected a nonnegative integer, got {v}"))
    })
}

fn parse_kind(f: &RawFiber, path: &str) -> Result<FiberKind, DocumentError> {
    let kind_path = format!("{path}.kind");
    let unknown = || {
        DocumentError::new(
            &kind_path,
            DocumentErrorKind::UnknownFiberKind,
            format!("{:?} is not a Kodaira fiber type", f.kind),
        )
    };
    let with_n = |star: bool| -> Result<FiberKind, DocumentError> {
        let n_path = format!("{path}.n");
        let n = f.n.ok_or_else(|| {
            DocumentError::new(&n_path, DocumentErrorKind::InvalidValue, format!("kind {:?} needs n", f.kind))
        })?;
        let n = nonneg_u32(n, &n_path)?;
        Ok(if star { FiberKind::IStar(n) } else { FiberKind::I(n) })
    };
    let kind = match f.kind.trim() {
        "I" | "In" | "I_n" => with_n(false)?,
        "I*" | "In*" | "I_n*" => with_n(true)?,
        other => other.parse::<FiberKind>().map_err(|_| unknown())?,
    };
    if let (Some(n), FiberKind::I(m) | FiberKind::IStar(m)) = (f.n, kind) {
        if !matches!(f.kind.trim(), "I" | "In" | "I_n" | "I*" | "In*" | "I_n*") && i64::from(m) != n {
            return Err(DocumentError::new(
                format!("{path}.n"),
                DocumentErrorKind::InvalidValue,
                format!("n = {n} contradicts kind {:?}", f.kind),
            ));
        }
    }
    Ok(kind)
}

fn parse_action(a: &RawAction, base_genus: u32) -> Result<GroupActionData, DocumentError> {
    let order = u32::try_from(a.group_order).ok().filter(|&d| d >= 1).ok_or_else(|| {
        DocumentError::new("action.group_order", DocumentErrorKind::InvalidValue, "group order must be at least 1")
    })?;
    let mut branch = Vec::with_capacity(a.branch.len());
    for (k, b) in a.branch.iter().enumerate() {
        let path = format!("action.branch[{k}]");
        let action = match b.action.trim().to_ascii_lowercase().as_str() {
            "translation" => EAction::Translation,
            "involution" | "-1" => EAction::Involution,
            "order4" | "i" => EAction::Order4,
            "order6" | "zeta" | "-zeta" => EAction::Order6,
            other => {
                return Err(DocumentError::new(
                    format!("{path}.action"),
                    DocumentErrorKind::InvalidValue,
                    format!("unknown action {other:?}"),
                ))
            }
        };
        let stab = nonneg_u32(b.order, &format!("{path}.order"))?;
        let bp = BranchPoint::new(stab, action)
            .map_err(|e| DocumentError::new(format!("{path}.order"), DocumentErrorKind::InvalidValue, e))?;
        branch.push(bp);
    }
    GroupActionData::new(order, base_genus, branch).map_err(|e| match e {
        OrbifoldError::Inconsistent { .. } => {
            DocumentError::new("action.branch", DocumentErrorKind::HurwitzInconsistent, e)
        }
        OrbifoldError::StabilizerNotDividing { .. } => {
            DocumentError::new("action.branch", DocumentErrorKind::InvalidValue, e)
        }
        other => DocumentError::new("action", DocumentErrorKind::InvalidValue, other),
    })
}

/// Parses and validates a surface document.
pub fn parse_surface(text: &str) -> Result<SurfaceDescription, DocumentError> {
    let de = toml::Deserializer::parse(text)
        .map_err(|e| DocumentError::new("(document)", DocumentErrorKind::Syntax, e.message()))?;
    let raw: RawDocument = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let path = if path == "." { "(document)".to_string() } else { path };
        DocumentError::new(path, DocumentErrorKind::Syntax, e.inner().message())
    })?;

    let base_genus = nonneg_u32(raw.base.genus, "base.genus")?;
    let mut fibers = Vec::new();
    for (idx, f) in raw.fibers.iter().enumerate() {
        let path = format!("fibers[{idx}]");
        let kind = parse_kind(f, &path)?;
        let m = f.multiplicity.unwrap_or(1);
        let mpath = format!("{path}.multiplicity");
        if m < 1 {
            return Err(DocumentError::new(
                mpath,
                DocumentErrorKind::InvalidMultiplicity,
                format!("multiplicity must be at least 1, got {m}"),
            ));
        }
        let m = u32::try_from(m).map_err(|_| {
            DocumentError::new(&mpath, DocumentErrorKind::InvalidMultiplicity, "multiplicity too large")
        })?;
        let t = FiberType::new(kind, m)
            .map_err(|e| DocumentError::new(&mpath, DocumentErrorKind::InvalidMultiplicity, e))?;
        let count = f.count.unwrap_or(1);
        if !(1..=MAX_COUNT).contains(&count) {
            return Err(DocumentError::new(
                format!("{path}.count"),
                DocumentErrorKind::InvalidValue,
                format!("count must be between 1 and {MAX_COUNT}, got {count}"),
            ));
        }
        fibers.extend(std::iter::repeat_n(t, count as usize));
    }
    let config = FiberConfiguration {
        base_genus,
        fibers,
        isotrivial: raw.flags.isotrivial,
        cm_flag: raw.flags.cm,
        assumptions: Assumptions {
            standard: raw.flags.standard,
            zeta_nef_codim_one: raw.flags.zeta_nef_codim_one,
            zeta_pseudoeffective: raw.flags.zeta_pseudoeffective,
        },
    };
    if let Err(KodairaError::NonIntegralEuler { e }) = numerical_invariants(&config) {
        return Err(DocumentError::new(
            "fibers",
            DocumentErrorKind::NonIntegralEuler,
            format!("e = {e} is not divisible by 12"),
        ));
    }
    let action = raw.action.as_ref().map(|a| parse_action(a, base_genus)).transpose()?;
    let minimal_model_class = raw
        .minimal_model_class
        .as_deref()
        .map(|s| {
            s.parse::<MinimalModelClass>()
                .map_err(|e| DocumentError::new("minimal_model_class", DocumentErrorKind::InvalidValue, e))
        })
        .transpose()?;
    Ok(SurfaceDescription { config, action, minimal_model_class })
}

/// Writes a document that [`parse_surface`] reads back to an equal
/// description; runs of equal fibers are merged with `count`.
pub fn emit_surface(s: &SurfaceDescription) -> String {
    let c = &s.config;
    let mut fibers: Vec<RawFiber> = Vec::new();
    let mut prev: Option<FiberType> = None;
    for &f in &c.fibers {
        if prev == Some(f) {
            let last = fibers.last_mut().expect("run started");
            last.count = Some(last.count.unwrap_or(1) + 1);
            continue;
        }
        prev = Some(f);
        fibers.push(RawFiber {
            kind: f.kind().to_string(),
            n: None,
            multiplicity: (f.multiplicity() > 1).then(|| i64::from(f.multiplicity())),
            count: None,
        });
    }
    let action = s.action.as_ref().map(|a| RawAction {
        group_order: i64::from(a.group_order()),
        branch: a
            .branch()
            .iter()
            .map(|b| RawBranch { order: i64::from(b.stab_order), action: b.action.to_string() })
            .collect(),
    });
    let raw = RawDocument {
        minimal_model_class: s.minimal_model_class.map(|m| m.to_string()),
        base: RawBase { genus: i64::from(c.base_genus) },
        flags: RawFlags {
            isotrivial: c.isotrivial,
            cm: c.cm_flag,
            standard: c.assumptions.standard,
            zeta_nef_codim_one: c.assumptions.zeta_nef_codim_one,
            zeta_pseudoeffective: c.assumptions.zeta_pseudoeffective,
        },
        fibers,
        action,
    };
    toml::to_string(&raw).expect("document serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    const KUMMER: &str = r#"
minimal_model_class = "K3"

[base]
genus = 0

[flags]
isotrivial = true
standard = true

[[fibers]]
kind = "I0*"
count = 4

[action]
group_order = 2
branch = [
  { order = 2, action = "involution" },
  { order = 2, action = "involution" },
  { order = 2, action = "involution" },
  { order = 2, action = "involution" },
]
"#;

    fn err(text: &str) -> DocumentError {
        parse_surface(text).unwrap_err()
    }

    #[test]
    fn kummer_document() {
        let s = parse_surface(KUMMER).unwrap();
        assert_eq!(s.config.fibers, vec![FiberType::simple(FiberKind::IStar(0)); 4]);
        assert_eq!(s.minimal_model_class, Some(MinimalModelClass::K3));
        assert_eq!(s.action.as_ref().unwrap().curve_genus(), 1);
        assert_eq!(parse_surface(&emit_surface(&s)).unwrap(), s);
    }

    #[test]
    fn unknown_kind() {
        let e = err("[base]\ngenus = 0\n[[fibers]]\nkind = \"V\"\n");
        assert_eq!(e.kind, DocumentErrorKind::UnknownFiberKind);
        assert_eq!(e.path, "fibers[0].kind");
    }

    #[test]
    fn zero_multiplicity() {
        let e = err("[base]\ngenus = 0\n[[fibers]]\nkind = \"I0\"\nmultiplicity = 0\n");
        assert_eq!(e.kind, DocumentErrorKind::InvalidMultiplicity);
        assert_eq!(e.path, "fibers[0].multiplicity");
        let e = err("[base]\ngenus = 0\n[[fibers]]\nkind = \"I1\"\nmultiplicity = 2\n");
        assert_eq!(e.kind, DocumentErrorKind::InvalidMultiplicity);
    }

    #[test]
    fn hurwitz_and_euler() {
        let e = err("[base]\ngenus = 0\n[[fibers]]\nkind = \"I\"\nn = 12\n[action]\ngroup_order = 2\nbranch = [{ order = 2, action = \"involution\" }]\n");
        assert_eq!(e.kind, DocumentErrorKind::HurwitzInconsistent);
        assert_eq!(e.path, "action.branch");
        let e = err("[base]\ngenus = 0\n[[fibers]]\nkind = \"I5\"\n");
        assert_eq!(e.kind, DocumentErrorKind::NonIntegralEuler);
        assert_eq!(e.path, "fibers");
    }

    #[test]
    fn located_syntax_errors() {
        let e = err("[base]\ngenus = \"zero\"\n");
        assert_eq!(e.kind, DocumentErrorKind::Syntax);
        assert_eq!(e.path, "base.genus");
        let e = err("[base]\ngenus = 0\n[[fibers]]\nkind = \"I1\"\ncolor = 3\n");
        assert_eq!(e.path, "fibers[0].color");
        let e = err("not toml = = =");
        assert_eq!(e.path, "(document)");
        assert!(!e.message.contains('\n'));
        let e = err("[base]\ngenus = -1\n");
        assert_eq!(e.path, "base.genus");
    }

    #[test]
    fn kind_with_n() {
        let s = parse_surface(
            "[base]\ngenus = 0\n[[fibers]]\nkind = \"I*\"\nn = 2\ncount = 3\n[[fibers]]\nkind = \"I\"\nn = 0\n",
        )
        .unwrap();
        assert_eq!(s.config.fibers[0], FiberType::simple(FiberKind::IStar(2)));
        assert_eq!(s.config.fibers[3], FiberType::simple(FiberKind::I(0)));
        let e = err("[base]\ngenus = 0\n[[fibers]]\nkind = \"I3\"\nn = 2\n");
        assert_eq!(e.path, "fibers[0].n");
    }
}
