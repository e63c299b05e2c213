//! Report documents and their human-readable rendering.

use std::fmt::Write as _;

use serde::Serialize;

use crate::arith::{fmt_rational, Rational};
use crate::feasibility::{CaseRow, FeasibilityStatus};
use crate::kodaira::{d_divisor, euler_number, fiber_model, FiberConfiguration, FiberType, NumericalInvariants};
use crate::lattice::{QDivisor, ZariskiPair};
use crate::orbifold::{lambda_and_base_twist, qtilde_criterion, QTilde};
use crate::verdict::VerdictReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Human,
    Machine,
}

pub fn machine<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("reports serialize") + "\n"
}

fn rationals(v: &[Rational]) -> Vec<String> {
    v.iter().map(fmt_rational).collect()
}

pub fn verdict_human(r: &VerdictReport) -> String {
    let mut s = String::new();
    let inv = &r.invariants;
    let _ = writeln!(
        s,
        "e = {}, chi = {}, lambda = {}, delta = {}, kappa = {}",
        inv.e,
        inv.chi,
        fmt_rational(&inv.lambda),
        fmt_rational(&inv.delta),
        inv.kappa
    );
    let _ = writeln!(s, "f*Omega_B(D) pseudoeffective: {}", if r.base_twist_pseff { "yes" } else { "no" });
    let _ = writeln!(s, "Omega_X pseudoeffective:      {}", r.omega_pseff);
    let _ = writeln!(s, "irregular quasi-etale cover:  {}", r.qtilde_positive);
    let _ = writeln!(s, "symmetric differentials:      {}", r.nonvanishing);
    let _ = writeln!(s, "finite fundamental group:     {}", r.pi1_finite);
    if let Some(a) = &r.action {
        let fibers: Vec<String> = a.fibers.iter().map(ToString::to_string).collect();
        let _ = writeln!(s, "action: fibers [{}], standard = {}", fibers.join(", "), a.standard);
        for n in &a.notes {
            let _ = writeln!(s, "  note: {n}");
        }
    }
    let _ = writeln!(s, "trace:");
    for c in &r.case_trace {
        let _ = writeln!(s, "  [{}] {}", c.rule, c.statement);
    }
    for n in &r.zeta_flags.notes {
        let _ = writeln!(s, "note: {n}");
    }
    s
}

#[derive(Clone, Debug, Serialize)]
pub struct InvariantsReport {
    pub invariants: NumericalInvariants,
    pub base_twist_pseff: bool,
    pub qtilde_criterion: &'static str,
    pub multiplicities: Vec<u32>,
    /// Number of singular points of the reduced singular fibers.
    pub z_points: usize,
    /// Fibers (by index) with a non-reduced part `D₀`.
    pub d0_fibers: Vec<usize>,
}

pub fn invariants_report(c: &FiberConfiguration, inv: NumericalInvariants) -> InvariantsReport {
    let (_, base_twist_pseff) = lambda_and_base_twist(c);
    let d = d_divisor(c);
    InvariantsReport {
        invariants: inv,
        base_twist_pseff,
        qtilde_criterion: match qtilde_criterion(c) {
            QTilde::Yes => "yes",
            QTilde::Unknown => "unknown",
        },
        multiplicities: c.multiplicities(),
        z_points: d.z_total,
        d0_fibers: d.d0_models.iter().map(|e| e.fiber_index).collect(),
    }
}

pub fn invariants_human(r: &InvariantsReport) -> String {
    let inv = &r.invariants;
    format!(
        "e = {}\nchi = {}\nlambda = {}\ndelta = {}\nkappa = {}\nmultiple fibers: {:?}\nbase twist pseudoeffective: {}\nq~ criterion: {}\nsingular points of reduced fibers: {}\nfibers with D0: {:?}\n",
        inv.e,
        inv.chi,
        fmt_rational(&inv.lambda),
        fmt_rational(&inv.delta),
        inv.kappa,
        r.multiplicities,
        r.base_twist_pseff,
        r.qtilde_criterion,
        r.z_points,
        r.d0_fibers
    )
}

#[derive(Clone, Debug, Serialize)]
pub struct ZariskiReport {
    pub labels: Vec<String>,
    pub divisor: Vec<String>,
    pub positive: Vec<String>,
    pub negative: Vec<String>,
    pub negative_support: Vec<String>,
}

pub fn zariski_report(d: &QDivisor, z: &ZariskiPair) -> ZariskiReport {
    let labels = d.config().labels().to_vec();
    ZariskiReport {
        negative_support: z.negative.support().iter().map(|&i| labels[i].clone()).collect(),
        labels,
        divisor: rationals(d.coeffs()),
        positive: rationals(z.positive.coeffs()),
        negative: rationals(z.negative.coeffs()),
    }
}

pub fn zariski_human(d: &QDivisor, z: &ZariskiPair) -> String {
    format!("D = {d}\nP = {}\nN = {}\n", z.positive, z.negative)
}

#[derive(Clone, Debug, Serialize)]
pub struct SymdiffReport {
    pub genus: u32,
    pub i: u32,
    pub j: u32,
    pub invariant_basis_size: usize,
    pub invariant_dim: usize,
    pub n_min: u32,
    pub parity: u32,
    pub involution_points: u32,
    pub guaranteed_vanishing: bool,
}

pub fn symdiff_human(r: &SymdiffReport) -> String {
    format!(
        "genus {} model, i = {}, j = {}\ninvariant product basis: {}\ninvariant differentials descending holomorphically: {}\nlocal bound: n >= {} with n = {} mod 2\ndegree count forces vanishing ({} points): {}\n",
        r.genus, r.i, r.j, r.invariant_basis_size, r.invariant_dim, r.n_min, r.parity, r.involution_points, r.guaranteed_vanishing
    )
}

#[derive(Clone, Debug, Serialize)]
pub struct SakaiRow {
    pub i: u32,
    pub invariant_dim: usize,
}

pub fn sakai_human(g: u32, rows: &[SakaiRow]) -> String {
    let mut s = format!("genus {g}: dim of invariant S^i differentials descending to the resolution\n");
    for r in rows {
        let _ = writeln!(s, "  i = {:>2}: {}", r.i, r.invariant_dim);
    }
    s
}

pub fn feasibility_human(rows: &[CaseRow]) -> String {
    let mut s = String::from("kind  k   status\n");
    for r in rows {
        let status = match &r.verdict.status {
            FeasibilityStatus::Infeasible => "infeasible (no sections)".to_string(),
            FeasibilityStatus::Feasible { witness } => {
                format!("feasible (numerical only), t = {}", fmt_rational(&witness.general_fibers))
            }
        };
        let _ = writeln!(s, "{:<5} {:<3} {status}", r.kind.to_string(), r.verdict.k);
    }
    s
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub fiber: String,
    pub euler: u64,
    pub multiplicities: Vec<u32>,
    pub gram: Vec<Vec<String>>,
    pub singular_points: usize,
}

pub fn catalog_entries(types: &[FiberType]) -> Vec<CatalogEntry> {
    types
        .iter()
        .map(|&t| {
            let m = fiber_model(t);
            CatalogEntry {
                fiber: t.to_string(),
                euler: euler_number(t),
                multiplicities: m.mult_vector.clone(),
                gram: m.components.gram().iter().map(|r| rationals(r)).collect(),
                singular_points: m.z_scheme_length(),
            }
        })
        .collect()
}

pub fn catalog_human(entries: &[CatalogEntry]) -> String {
    let mut s = String::from("fiber  e   components  multiplicities\n");
    for e in entries {
        let mults: Vec<String> = e.multiplicities.iter().map(ToString::to_string).collect();
        let _ = writeln!(s, "{:<6} {:<3} {:<11} [{}]", e.fiber, e.euler, e.multiplicities.len(), mults.join(", "));
    }
    s
}
