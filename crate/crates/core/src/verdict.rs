//! The decision tree: pseudoeffectivity of `Ω_X`, `q̃(X) > 0` and
//! nonvanishing of symmetric differentials from fiber data.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::arith::Rational;
use crate::isotrivial::{classify_action, ActionClassification};
use crate::kodaira::{numerical_invariants, FiberConfiguration, KodairaDim, KodairaError, NumericalInvariants};
use crate::orbifold::{lambda_and_base_twist, qtilde_criterion, GroupActionData, QTilde};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Yes,
    No,
    Unknown,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Yes => "yes",
            Status::No => "no",
            Status::Unknown => "unknown",
        })
    }
}

/// Minimal model of a surface with `κ ≤ 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MinimalModelClass {
    Abelian,
    Bielliptic,
    K3,
    Enriques,
    Rational,
    /// Ruled over a curve of the given genus (genus 0 is rational).
    Ruled(u32),
}

impl MinimalModelClass {
    fn kappa(self) -> KodairaDim {
        match self {
            Self::Abelian | Self::Bielliptic | Self::K3 | Self::Enriques => KodairaDim::Zero,
            Self::Rational | Self::Ruled(_) => KodairaDim::NegInfinity,
        }
    }

    /// Whether some quasi-étale cover is irregular (equivalently here, `Ω_X`
    /// pseudoeffective and symmetric differentials exist).
    fn positive(self) -> bool {
        match self {
            Self::Abelian | Self::Bielliptic => true,
            Self::K3 | Self::Enriques | Self::Rational => false,
            Self::Ruled(g) => g >= 1,
        }
    }
}

impl fmt::Display for MinimalModelClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Abelian => write!(f, "abelian"),
            Self::Bielliptic => write!(f, "bielliptic"),
            Self::K3 => write!(f, "k3"),
            Self::Enriques => write!(f, "enriques"),
            Self::Rational => write!(f, "rational"),
            Self::Ruled(g) => write!(f, "ruled:{g}"),
        }
    }
}

impl FromStr for MinimalModelClass {
    type Err = String;

    /// `abelian`, `bielliptic`, `k3`, `enriques`, `rational` or `ruled:<g>`,
    /// case-insensitive.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.trim().to_ascii_lowercase();
        Ok(match lower.as_str() {
            "abelian" => Self::Abelian,
            "bielliptic" | "hyperelliptic" => Self::Bielliptic,
            "k3" => Self::K3,
            "enriques" => Self::Enriques,
            "rational" => Self::Rational,
            other => match other.strip_prefix("ruled:") {
                Some(g) => Self::Ruled(g.trim().parse().map_err(|_| format!("bad ruled genus in {s:?}"))?),
                None => return Err(format!("unknown minimal model class {s:?}")),
            },
        })
    }
}

impl Serialize for MinimalModelClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceDescription {
    pub config: FiberConfiguration,
    pub action: Option<GroupActionData>,
    pub minimal_model_class: Option<MinimalModelClass>,
}

impl SurfaceDescription {
    pub fn new(config: FiberConfiguration) -> Self {
        Self { config, action: None, minimal_model_class: None }
    }

    pub fn with_action(mut self, a: GroupActionData) -> Self {
        self.action = Some(a);
        self
    }

    pub fn with_class(mut self, c: MinimalModelClass) -> Self {
        self.minimal_model_class = Some(c);
        self
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerdictError {
    #[error(transparent)]
    Kodaira(#[from] KodairaError),
    #[error("kappa = {0}: a minimal model class is required")]
    MissingMinimalModelClass(KodairaDim),
    #[error("minimal model class {class} is incompatible with {reason}")]
    ClassInconsistent { class: MinimalModelClass, reason: String },
    #[error("action base genus {action} differs from the fibration base genus {config}")]
    BaseGenusMismatch { action: u32, config: u32 },
    #[error("cm = false, but a stabilizer of order 3, 4 or 6 acts on the fiber, which needs complex multiplication")]
    CmInconsistent,
}

/// A rule of the decision tree that fired, with what it established.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RuleCitation {
    pub rule: &'static str,
    pub statement: String,
}

pub mod rules {
    //! Identifiers used in [`super::VerdictReport::case_trace`].
    pub const CLASSIFICATION: &str = "kappa-nonpositive-classification";
    pub const ALMOST_SMOOTH: &str = "almost-smooth-irregular";
    pub const NON_ISOTRIVIAL: &str = "non-isotrivial-equivalence";
    pub const STANDARD_ISOTRIVIAL: &str = "standard-isotrivial-vanishing";
    pub const BASE_TWIST: &str = "base-twist-pseudoeffective";
    pub const ZARISKI_NEF: &str = "zeta-nef-codimension-one";
    pub const NON_STANDARD_OPEN: &str = "non-standard-open";
    pub const QTILDE_CRITERION: &str = "orbifold-qtilde-criterion";
    pub const FINITE_PI1: &str = "finite-fundamental-group";
}

/// Advisory status of the tautological class `ζ` on `P(Ω_X)` and of the
/// divisor `Y`; never computed geometrically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZetaFlags {
    pub zeta_pseudoeffective: Status,
    pub zeta_nef_codim_one_assumed: bool,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerdictReport {
    pub invariants: NumericalInvariants,
    #[serde(with = "crate::arith::serde_rational")]
    pub lambda: Rational,
    pub base_twist_pseff: bool,
    pub omega_pseff: Status,
    pub qtilde_positive: Status,
    pub nonvanishing: Status,
    pub pi1_finite: Status,
    pub zeta_flags: ZetaFlags,
    pub action: Option<ActionClassification>,
    pub case_trace: Vec<RuleCitation>,
}

impl VerdictReport {
    pub fn cites(&self, rule: &str) -> bool {
        self.case_trace.iter().any(|c| c.rule == rule)
    }

    /// The three positivity answers, in order omega, q̃, nonvanishing.
    pub fn answers(&self) -> [Status; 3] {
        [self.omega_pseff, self.qtilde_positive, self.nonvanishing]
    }
}

enum Standardness {
    Standard(&'static str),
    NonStandard(&'static str),
}

fn standardness(s: &SurfaceDescription, action: Option<&ActionClassification>) -> Standardness {
    let a = &s.config.assumptions;
    match (a.standard, s.config.cm_flag, action) {
        (Some(true), _, _) => Standardness::Standard("declared standard"),
        (Some(false), _, _) => Standardness::NonStandard("declared non-standard"),
        (None, Some(false), _) => Standardness::Standard("general fiber without complex multiplication"),
        (None, _, Some(c)) if c.standard => Standardness::Standard("all stabilizers act by translations or -1"),
        (None, _, Some(_)) => Standardness::NonStandard("a stabilizer of order 3, 4 or 6 acts on the fiber"),
        (None, _, None) => Standardness::NonStandard("standardness not established"),
    }
}

fn all(s: Status) -> (Status, Status, Status) {
    (s, s, s)
}

pub fn evaluate(s: &SurfaceDescription) -> Result<VerdictReport, VerdictError> {
    let c = &s.config;
    let invariants = numerical_invariants(c)?;
    if let Some(a) = &s.action {
        if a.base_genus() != c.base_genus {
            return Err(VerdictError::BaseGenusMismatch { action: a.base_genus(), config: c.base_genus });
        }
    }
    let (lambda, base_twist_pseff) = lambda_and_base_twist(c);
    let qtilde_hint = qtilde_criterion(c);
    let action = s.action.as_ref().map(classify_action);
    if c.cm_flag == Some(false) && action.as_ref().is_some_and(|a| !a.standard) {
        return Err(VerdictError::CmInconsistent);
    }
    let mut trace = Vec::new();
    let mut cite = |rule: &'static str, statement: String| trace.push(RuleCitation { rule, statement });
    let mut notes = Vec::new();

    let (omega, qtilde, nonvanishing) = match invariants.kappa {
        KodairaDim::NegInfinity | KodairaDim::Zero => {
            let class = s.minimal_model_class.ok_or(VerdictError::MissingMinimalModelClass(invariants.kappa))?;
            if class.kappa() != invariants.kappa {
                return Err(VerdictError::ClassInconsistent { class, reason: format!("kappa = {}", invariants.kappa) });
            }
            if qtilde_hint == QTilde::Yes && !class.positive() {
                return Err(VerdictError::ClassInconsistent {
                    class,
                    reason: "the multiple-fiber criterion for an irregular cover".into(),
                });
            }
            let st = if class.positive() { Status::Yes } else { Status::No };
            cite(
                rules::CLASSIFICATION,
                format!("kappa = {} with minimal model {class}: all three properties are {st}", invariants.kappa),
            );
            all(st)
        }
        KodairaDim::One if c.is_almost_smooth() => {
            cite(rules::ALMOST_SMOOTH, "e = 0: only multiple smooth fibers, chi = 0 forces an irregular cover".into());
            all(Status::Yes)
        }
        KodairaDim::One => {
            let twist = format!(
                "2g(B) - 2 + lambda = {} {} 0",
                crate::arith::fmt_rational(
                    &(Rational::from_integer((2 * i64::from(c.base_genus) - 2).into()) + &lambda)
                ),
                if base_twist_pseff { ">=" } else { "<" }
            );
            let verdict = if base_twist_pseff { Status::Yes } else { Status::No };
            if !c.isotrivial {
                cite(rules::NON_ISOTRIVIAL, format!("non-isotrivial, {twist}: all three properties are {verdict}"));
                all(verdict)
            } else {
                match standardness(s, action.as_ref()) {
                    Standardness::Standard(why) => {
                        cite(
                            rules::STANDARD_ISOTRIVIAL,
                            format!("standard isotrivial ({why}), {twist}: all three properties are {verdict}"),
                        );
                        all(verdict)
                    }
                    Standardness::NonStandard(why) if base_twist_pseff => {
                        cite(rules::BASE_TWIST, format!("non-standard isotrivial ({why}), {twist}: all yes"));
                        all(Status::Yes)
                    }
                    Standardness::NonStandard(why) => {
                        let a = &c.assumptions;
                        if a.zeta_nef_codim_one && a.zeta_pseudoeffective {
                            cite(
                                rules::ZARISKI_NEF,
                                format!(
                                    "non-standard isotrivial ({why}); zeta assumed pseudoeffective and nef in \
                                     codimension one: all yes"
                                ),
                            );
                            all(Status::Yes)
                        } else {
                            cite(
                                rules::NON_STANDARD_OPEN,
                                format!("non-standard isotrivial ({why}), {twist}: undecided"),
                            );
                            notes.push("open: whether zeta - cY is pseudoeffective for some c >= 1".to_string());
                            all(Status::Unknown)
                        }
                    }
                }
            }
        }
    };

    if qtilde_hint == QTilde::Yes {
        debug_assert_eq!(qtilde, Status::Yes);
        cite(rules::QTILDE_CRITERION, "g(B) >= 1, lambda >= 2 or e = 0: an irregular cover exists".into());
    }
    let pi1_finite = if omega == Status::No {
        cite(rules::FINITE_PI1, "Omega_X not pseudoeffective: the fundamental group is finite".into());
        Status::Yes
    } else {
        Status::Unknown
    };

    let a = &c.assumptions;
    let zeta_pseudoeffective = match omega {
        Status::Unknown if a.zeta_pseudoeffective => Status::Yes,
        other => other,
    };
    let zeta_flags = ZetaFlags { zeta_pseudoeffective, zeta_nef_codim_one_assumed: a.zeta_nef_codim_one, notes };

    Ok(VerdictReport {
        invariants,
        lambda,
        base_twist_pseff,
        omega_pseff: omega,
        qtilde_positive: qtilde,
        nonvanishing,
        pi1_finite,
        zeta_flags,
        action,
        case_trace: trace,
    })
}
