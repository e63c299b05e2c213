//! Command-line entry point shared by the `ellsurf` binary and the tests.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand};

use super::document::parse_surface;
use super::report::{self, Format, SakaiRow, SymdiffReport};
use crate::arith::parse_rational;
use crate::feasibility::{check_witness, fiber_case_table, FeasibilityStatus, VerticalSectionProblem};
use crate::kodaira::{catalog, fiber_model, numerical_invariants};
use crate::lattice::{zariski_decompose, CurveConfig, QDivisor};
use crate::symdiff::{
    guaranteed_vanishing, invariant_basis, invariant_dim_capped, obstruction_profile, HyperellipticModel,
    DEFAULT_DESK_CAP,
};
use crate::verdict::{evaluate, SurfaceDescription};

/// Environment variable overriding the symmetric-degree cap of `symdiff` and
/// `sakai`.
pub const DESK_CAP_VAR: &str = "ELLSURF_DESK_CAP";

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_INTERNAL: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "ellsurf", version, about = "Positivity of the cotangent bundle of elliptic surfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide pseudoeffectivity, q~ > 0 and nonvanishing for a surface document.
    Verdict {
        #[arg(required_unless_present = "batch", conflicts_with = "batch")]
        file: Option<PathBuf>,
        /// Evaluate every `*.toml` file in a directory.
        #[arg(long)]
        batch: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Numerical invariants e, chi, lambda, delta, kappa.
    Invariants {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Zariski decomposition on the components of all listed fibers.
    Zariski {
        file: PathBuf,
        /// `D` for the non-reduced part of the fibers, or comma-separated
        /// rational coefficients, one per component.
        #[arg(long, default_value = "D")]
        divisor: String,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Invariant twisted symmetric differentials on the genus-g product model.
    Symdiff {
        #[arg(long)]
        genus: u32,
        #[arg(long = "i")]
        i: u32,
        #[arg(long = "j", default_value_t = 0)]
        j: u32,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Untwisted invariant symmetric differentials for i = 1..=imax.
    Sakai {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        imax: u32,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Vertical-divisor feasibility for II, III, IV, I0* and k = 1..=kmax.
    Feasibility {
        #[arg(long)]
        kmax: u32,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Kodaira fiber types with component lattices.
    Catalog {
        /// Largest n for I_n and I_n*.
        #[arg(long, default_value_t = 4)]
        max_n: u32,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
}

/// Outcome of a subcommand: text for stdout, or an error with its exit code.
type Outcome = Result<String, (i32, String)>;

fn invalid(msg: impl std::fmt::Display) -> (i32, String) {
    (EXIT_INVALID, msg.to_string())
}

fn internal(msg: impl std::fmt::Display) -> (i32, String) {
    (EXIT_INTERNAL, format!("internal invariant violated: {msg}"))
}

fn load(path: &Path) -> Result<SurfaceDescription, (i32, String)> {
    let text = std::fs::read_to_string(path).map_err(|e| invalid(format!("{}: {e}", path.display())))?;
    parse_surface(&text).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn desk_cap() -> Result<u32, (i32, String)> {
    match std::env::var(DESK_CAP_VAR) {
        Ok(v) => {
            v.trim().parse().map_err(|_| invalid(format!("{DESK_CAP_VAR} must be a nonnegative integer, got {v:?}")))
        }
        Err(_) => Ok(DEFAULT_DESK_CAP),
    }
}

fn verdict_one(path: &Path, format: Format) -> Outcome {
    let s = load(path)?;
    let r = evaluate(&s).map_err(|e| invalid(format!("{}: {e}", path.display())))?;
    if r.invariants.kappa == crate::kodaira::KodairaDim::One
        && r.answers().iter().any(|&a| a != crate::verdict::Status::Unknown)
        && r.answers().windows(2).any(|w| w[0] != w[1])
    {
        return Err(internal("positivity answers disagree"));
    }
    Ok(match format {
        Format::Human => report::verdict_human(&r),
        Format::Machine => report::machine(&r),
    })
}

fn verdict_batch(dir: &Path, format: Format) -> Outcome {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| invalid(format!("{}: {e}", dir.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "toml"))
        .collect();
    files.sort();
    let results: Vec<Outcome> = std::thread::scope(|scope| {
        let handles: Vec<_> = files.iter().map(|f| scope.spawn(move || verdict_one(f, format))).collect();
        handles.into_iter().map(|h| h.join().unwrap_or_else(|_| Err(internal("evaluation panicked")))).collect()
    });
    let mut code = EXIT_OK;
    let mut out = String::new();
    match format {
        Format::Human => {
            for (f, r) in files.iter().zip(&results) {
                out.push_str(&format!("== {}\n", f.display()));
                match r {
                    Ok(text) => out.push_str(text),
                    Err((c, msg)) => {
                        code = code.max(*c);
                        out.push_str(&format!("error: {msg}\n"));
                    }
                }
            }
        }
        Format::Machine => {
            let docs: Vec<serde_json::Value> = files
                .iter()
                .zip(&results)
                .map(|(f, r)| match r {
                    Ok(text) => serde_json::json!({
                        "file": f.display().to_string(),
                        "report": serde_json::from_str::<serde_json::Value>(text).expect("own output"),
                    }),
                    Err((c, msg)) => {
                        code = code.max(*c);
                        serde_json::json!({ "file": f.display().to_string(), "error": msg })
                    }
                })
                .collect();
            out = report::machine(&docs);
        }
    }
    if code == EXIT_OK {
        Ok(out)
    } else {
        Err((code, out))
    }
}

fn zariski(path: &Path, divisor: &str, format: Format) -> Outcome {
    let s = load(path)?;
    let models: Vec<_> = s.config.fibers.iter().map(|&f| fiber_model(f)).collect();
    let parts: Vec<&CurveConfig> = models.iter().map(|m| m.components.as_ref()).collect();
    let config = Arc::new(CurveConfig::disjoint_union(&parts, "F"));
    let coeffs = if divisor.trim() == "D" {
        models.iter().flat_map(|m| m.d0_divisor().coeffs().to_vec()).collect()
    } else {
        divisor
            .split(',')
            .map(|x| parse_rational(x).ok_or_else(|| invalid(format!("--divisor: cannot parse {x:?} as a rational"))))
            .collect::<Result<Vec<_>, _>>()?
    };
    let d = QDivisor::new(config, coeffs).map_err(|e| invalid(format!("--divisor: {e}")))?;
    let z = zariski_decompose(&d).map_err(|e| invalid(format!("--divisor: {e}")))?;
    if !z.satisfies_conditions(&d) {
        return Err(internal("Zariski decomposition fails its defining conditions"));
    }
    Ok(match format {
        Format::Human => report::zariski_human(&d, &z),
        Format::Machine => report::machine(&report::zariski_report(&d, &z)),
    })
}

fn symdiff(genus: u32, i: u32, j: u32, format: Format) -> Outcome {
    let model = HyperellipticModel::standard(genus).map_err(invalid)?;
    let dim = invariant_dim_capped(&model, i, j, desk_cap()?).map_err(invalid)?;
    let (n_min, parity) = obstruction_profile(i, j);
    let points = 2 * genus + 2;
    let r = SymdiffReport {
        genus,
        i,
        j,
        invariant_basis_size: invariant_basis(genus, i, j).len(),
        invariant_dim: dim,
        n_min,
        parity,
        involution_points: points,
        guaranteed_vanishing: guaranteed_vanishing(genus, points, i, j).map_err(invalid)?,
    };
    if r.guaranteed_vanishing && r.invariant_dim != 0 {
        return Err(internal("vanishing guaranteed by the degree count, but sections were found"));
    }
    Ok(match format {
        Format::Human => report::symdiff_human(&r),
        Format::Machine => report::machine(&r),
    })
}

fn sakai(genus: u32, imax: u32, format: Format) -> Outcome {
    let model = HyperellipticModel::standard(genus).map_err(invalid)?;
    let cap = desk_cap()?;
    let rows = (1..=imax)
        .map(|i| invariant_dim_capped(&model, i, 0, cap).map(|d| SakaiRow { i, invariant_dim: d }))
        .collect::<Result<Vec<_>, _>>()
        .map_err(invalid)?;
    Ok(match format {
        Format::Human => report::sakai_human(genus, &rows),
        Format::Machine => report::machine(&rows),
    })
}

fn feasibility(kmax: u32, format: Format) -> Outcome {
    let rows = fiber_case_table(kmax);
    for r in &rows {
        if let FeasibilityStatus::Feasible { witness } = &r.verdict.status {
            let p = VerticalSectionProblem::single_fiber(r.kind, r.verdict.k).map_err(invalid)?;
            if !check_witness(&p, witness) {
                return Err(internal(format!("witness for {} at k = {} fails re-check", r.kind, r.verdict.k)));
            }
        }
    }
    Ok(match format {
        Format::Human => report::feasibility_human(&rows),
        Format::Machine => report::machine(&rows),
    })
}

fn dispatch(command: Command) -> Outcome {
    match command {
        Command::Verdict { file: Some(f), format, .. } => verdict_one(&f, format),
        Command::Verdict { batch: Some(dir), format, .. } => verdict_batch(&dir, format),
        Command::Verdict { .. } => Err(invalid("verdict needs a file or --batch")),
        Command::Invariants { file, format } => {
            let s = load(&file)?;
            let inv = numerical_invariants(&s.config).map_err(invalid)?;
            let r = report::invariants_report(&s.config, inv);
            Ok(match format {
                Format::Human => report::invariants_human(&r),
                Format::Machine => report::machine(&r),
            })
        }
        Command::Zariski { file, divisor, format } => zariski(&file, &divisor, format),
        Command::Symdiff { genus, i, j, format } => symdiff(genus, i, j, format),
        Command::Sakai { genus, imax, format } => sakai(genus, imax, format),
        Command::Feasibility { kmax, format } => feasibility(kmax, format),
        Command::Catalog { max_n, format } => {
            let entries = report::catalog_entries(&catalog(max_n));
            Ok(match format {
                Format::Human => report::catalog_human(&entries),
                Format::Machine => report::machine(&entries),
            })
        }
    }
}

/// Runs the command line and returns the process exit code: 0 on success,
/// 1 for invalid input, 2 when an internal consistency check fails.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            EXIT_OK
        }
        Err((code, msg)) => {
            let _ = writeln!(err, "{}", msg.trim_end());
            code
        }
    }
}
