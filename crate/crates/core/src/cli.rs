//! Command-line front end. Every subcommand returns its report as a string;
//! the binary prints it and maps errors to exit codes (1 for domain errors,
//! 2 for malformed input).

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::efree::{parse_emat, write_emat, GradedMap};
use crate::eres::{alpha_hilbert_rhs, alphas, regularity_of_coker, RegularityOptions, ResolutionWindow};
use crate::error::{Error, Result};
use crate::extalg::{AlgebraContext, ExtElement, ExtMonomial};
use crate::paramspace::{census, membership_x0, reconstruct, sample, TypeVectors};
use crate::smod::parse_smod;
use crate::tate::{descent, pushforward_check, slice_for_tate, tate_window, TateWindow};
use crate::efree::FreeEModule;

#[derive(Parser, Debug)]
#[command(name = "bggtate", version, about = "Tate resolutions and cohomology tables over exterior algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Csv,
    Json,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct RegArgs {
    /// Unchanged Betti rows needed to certify a regularity (default n+2).
    #[arg(long)]
    pub stab_window: Option<usize>,
    /// Largest number of resolution steps.
    #[arg(long, default_value_t = 64)]
    pub max_steps: usize,
    /// Largest slice dimension a resolution step may work on.
    #[arg(long, default_value_t = 4000)]
    pub max_slice: usize,
}

impl RegArgs {
    fn options(&self) -> RegularityOptions {
        RegularityOptions {
            window: self.stab_window,
            max_steps: self.max_steps,
            max_slice: self.max_slice,
            stop_below: None,
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct WindowArgs {
    /// S-module file (`ring n= p=` format).
    #[arg(long)]
    pub module: PathBuf,
    /// Column window `lo..hi`.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_window)]
    pub window: (i32, i32),
    /// Position where the linear part starts (default: regularity + 1).
    #[arg(long, allow_hyphen_values = true)]
    pub start: Option<i32>,
}

#[derive(Args, Debug, Clone)]
pub struct TypeArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    pub b: Vec<usize>,
    #[arg(long, value_delimiter = ',', required = true)]
    pub bprime: Vec<usize>,
    /// Top variable index; the exterior algebra has n+1 variables.
    #[arg(short = 'n', long = "n")]
    pub n: usize,
    #[arg(long, default_value_t = 32003)]
    pub p: u32,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_window, default_value = "-3..6")]
    pub window: (i32, i32),
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Cohomology table of the sheaf of an S-module.
    Cohomology {
        #[command(flatten)]
        win: WindowArgs,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Free modules (and optionally differentials) of a Tate window.
    Tate {
        #[command(flatten)]
        win: WindowArgs,
        /// Print every differential in E-matrix format.
        #[arg(long)]
        maps: bool,
    },
    /// Betti table of the cokernel of an E-matrix.
    Betti {
        #[arg(long)]
        matrix: PathBuf,
        /// Use the cokernel of the dual matrix.
        #[arg(long)]
        dual: bool,
        /// Homological degrees to compute.
        #[arg(long, default_value_t = 6)]
        steps: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Regularity of the cokernel of an E-matrix.
    Reg {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        dual: bool,
        #[command(flatten)]
        reg: RegArgs,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// The invariants alpha_k of a cokernel and the Hilbert function they determine.
    Alpha {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        dual: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Smallest linear subspace carrying the sheaf.
    Descend {
        #[command(flatten)]
        win: WindowArgs,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Compare tables before and after adding a variable that acts by zero.
    PushCheck {
        #[command(flatten)]
        win: WindowArgs,
    },
    /// Draw one matrix of type (b, b') and rebuild its sheaf.
    Sample {
        #[command(flatten)]
        ty: TypeArgs,
        #[command(flatten)]
        reg: RegArgs,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Sample many matrices of type (b, b') and summarize the sheaves found.
    Census {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[command(flatten)]
        reg: RegArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Regularity of E/(e0e1 + e2e3 + ... ) in 2*ell variables.
    Mccullough {
        #[arg(long)]
        ell: usize,
        #[arg(long, default_value_t = 32003)]
        p: u32,
        #[command(flatten)]
        reg: RegArgs,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

fn parse_window(s: &str) -> std::result::Result<(i32, i32), String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected lo..hi, got `{s}`"))?;
    let lo = a.trim().parse::<i32>().map_err(|e| format!("bad window start `{a}`: {e}"))?;
    let hi = b.trim().parse::<i32>().map_err(|e| format!("bad window end `{b}`: {e}"))?;
    if lo > hi {
        return Err(format!("empty window {lo}..{hi}"));
    }
    Ok((lo, hi))
}

/// Exit status for an error: 2 for malformed input, 1 otherwise.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => 2,
        _ => 1,
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))
}

fn located<T>(path: &Path, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse { line, col, msg } => Error::Parse { line, col, msg: format!("{}: {msg}", path.display()) },
        other => other,
    })
}

fn load_matrix(path: &Path, dual: bool) -> Result<GradedMap> {
    let f = located(path, parse_emat(&read(path)?))?;
    Ok(if dual { f.dual() } else { f })
}

fn build_window(win: &WindowArgs) -> Result<TateWindow> {
    let pres = located(&win.module, parse_smod(&read(&win.module)?))?;
    let (m, k0) = slice_for_tate(&pres, win.window.1, win.start)?;
    tate_window(&m, win.window.0, win.window.1, k0)
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("reports serialize") + "\n"
}

pub fn run(cli: Cli) -> Result<String> {
    match cli.command {
        Command::Cohomology { win, format } => {
            let t = build_window(&win)?;
            let table = t.cohomology_table();
            Ok(match format {
                Format::Text => format!("{table}"),
                Format::Csv => table.to_csv(),
                Format::Json => json(&table),
            })
        }
        Command::Tate { win, maps } => {
            let t = build_window(&win)?;
            let mut s = String::new();
            writeln!(s, "start {}", t.start()).unwrap();
            for k in t.lo()..=t.hi() {
                writeln!(s, "T^{k} = {}", describe_free(t.module(k))).unwrap();
            }
            if maps {
                for k in t.lo()..t.hi() {
                    writeln!(s, "\n# d^{k}").unwrap();
                    s.push_str(&write_emat(t.map(k)));
                }
            }
            Ok(s)
        }
        Command::Betti { matrix, dual, steps, format } => {
            let f = load_matrix(&matrix, dual)?;
            let mut res = ResolutionWindow::of_coker(&f);
            res.extend_to(steps + 1);
            let table = res.betti().truncated(steps);
            Ok(match format {
                Format::Text => format!("{table}"),
                Format::Csv => {
                    let mut s = String::from("i,j,row,value\n");
                    for r in table.records() {
                        writeln!(s, "{},{},{},{}", r.i, r.j, r.row, r.value).unwrap();
                    }
                    s
                }
                Format::Json => json(&table.records()),
            })
        }
        Command::Reg { matrix, dual, reg, format } => {
            let f = load_matrix(&matrix, dual)?;
            let r = regularity_of_coker(&f, reg.options())?;
            Ok(match format {
                Format::Json => json(&r),
                Format::Csv => format!("value,certified,steps\n{},{},{}\n", r.value, r.certified, r.steps),
                Format::Text => describe_regularity(r.value, r.certified, r.steps) + "\n",
            })
        }
        Command::Alpha { matrix, dual, format } => {
            let f = load_matrix(&matrix, dual)?;
            let m = f.vectorize_coker();
            let a = alphas(&m);
            let rows: Vec<(i32, usize, i64)> = if m.is_zero() {
                Vec::new()
            } else {
                (m.lo()..=m.hi()).map(|e| (e, m.dim(e), alpha_hilbert_rhs(&m, e))).collect()
            };
            Ok(match format {
                Format::Json => {
                    let hilbert: Vec<_> = rows.iter().map(|&(e, dim, rhs)| json!({"e": e, "dim": dim, "rhs": rhs})).collect();
                    json(&json!({"alphas": a, "hilbert": hilbert}))
                }
                Format::Csv => {
                    let mut s = String::from("k,alpha\n");
                    for (k, v) in &a {
                        writeln!(s, "{k},{v}").unwrap();
                    }
                    s
                }
                Format::Text => {
                    let mut s = String::new();
                    for (k, v) in &a {
                        writeln!(s, "alpha_{k} = {v}").unwrap();
                    }
                    for (e, dim, rhs) in rows {
                        let mark = if dim as i64 == rhs { "ok" } else { "MISMATCH" };
                        writeln!(s, "dim M_{e} = {dim}, from alphas {rhs}: {mark}").unwrap();
                    }
                    s
                }
            })
        }
        Command::Descend { win, format } => {
            let t = build_window(&win)?;
            let (n0, span) = descent(&t, t.start() - 1)?;
            let field = *t.ctx().field();
            let forms: Vec<String> = span.iter().map(|e| e.to_text(&field)).collect();
            Ok(match format {
                Format::Json => json(&json!({"n0": n0, "span": forms})),
                Format::Csv => format!("n0\n{n0}\n"),
                Format::Text => format!("n0 = {n0}\nspan: {}\n", forms.join(", ")),
            })
        }
        Command::PushCheck { win } => {
            let pres = located(&win.module, parse_smod(&read(&win.module)?))?;
            let (m, k0) = slice_for_tate(&pres, win.window.1, win.start)?;
            let ok = pushforward_check(&m, win.window.0, win.window.1, k0)?;
            if ok {
                Ok("tables agree after adding a variable: OK\n".into())
            } else {
                Err(Error::Invalid("tables differ after adding a variable".into()))
            }
        }
        Command::Sample { ty, reg, format } => {
            use rand::SeedableRng;
            let t = TypeVectors::new(ty.b.clone(), ty.bprime.clone())?;
            let ctx = AlgebraContext::with_prime(ty.n, ty.p)?;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(ty.seed);
            let phi = sample(&t, &ctx, &mut rng)?;
            let opts = reg.options();
            let member = membership_x0(&phi, opts)?;
            let table = if member.member && member.certified {
                Some(reconstruct(&t, &phi, ty.window.0, ty.window.1, opts)?.1)
            } else {
                None
            };
            Ok(match format {
                Format::Json => json(&json!({"matrix": write_emat(&phi), "membership": member, "table": table})),
                _ => {
                    let mut s = write_emat(&phi);
                    writeln!(
                        s,
                        "member of X^0: {} ({}; regularity of coker of the dual {})",
                        member.member,
                        if member.certified { "certified" } else { "not certified" },
                        member.regularity
                    )
                    .unwrap();
                    if let Some(table) = table {
                        s.push_str(&if format == Format::Csv { table.to_csv() } else { table.to_string() });
                    }
                    s
                }
            })
        }
        Command::Census { ty, trials, reg, format } => {
            let t = TypeVectors::new(ty.b.clone(), ty.bprime.clone())?;
            let ctx = AlgebraContext::with_prime(ty.n, ty.p)?;
            let report = census(&t, &ctx, trials, ty.window, ty.seed, reg.options())?;
            Ok(match format {
                Format::Json => json(&report),
                Format::Csv => {
                    let r = &report;
                    format!(
                        "members,nonMembers,uncertified,nonMinimalPresentation,distinctTables,maxRegularity,maxDescentDim\n{},{},{},{},{},{},{}\n",
                        r.members,
                        r.non_members,
                        r.uncertified,
                        r.non_minimal_presentation,
                        r.distinct_tables.len(),
                        r.max_regularity.map_or(String::new(), |v| v.to_string()),
                        r.max_descent_dim.map_or(String::new(), |v| v.to_string())
                    )
                }
                Format::Text => {
                    let r = &report;
                    let mut s = String::new();
                    writeln!(s, "members {} / non-members {} / uncertified {}", r.members, r.non_members, r.uncertified).unwrap();
                    writeln!(s, "non-minimal presentations {}", r.non_minimal_presentation).unwrap();
                    writeln!(s, "max regularity {:?}, max descent dimension {:?}", r.max_regularity, r.max_descent_dim).unwrap();
                    writeln!(s, "Z_i counts {:?}", r.z_histogram).unwrap();
                    writeln!(s, "{} distinct table(s)", r.distinct_tables.len()).unwrap();
                    for table in &r.distinct_tables {
                        writeln!(s, "\n{table}").unwrap();
                    }
                    s
                }
            })
        }
        Command::Mccullough { ell, p, reg, format } => {
            let (phi, q) = mccullough_map(ell, p)?;
            let r = regularity_of_coker(&phi, reg.options())?;
            let expected = ell as i32 - 2;
            let agrees = r.certified && r.value == expected;
            Ok(match format {
                Format::Json => json(&json!({"ell": ell, "quadric": q, "regularity": r, "expected": expected, "agrees": agrees})),
                Format::Csv => format!("ell,value,certified,expected\n{ell},{},{},{expected}\n", r.value, r.certified),
                Format::Text => format!(
                    "quadric {q}\n{}\nexpected ell-2 = {expected}: {}\n",
                    describe_regularity(r.value, r.certified, r.steps),
                    if agrees { "OK" } else { "MISMATCH" }
                ),
            })
        }
    }
}

/// `E -> E/(e0e1 + ... + e_{2l-2}e_{2l-1})` as the map `E(2) -> E`.
pub fn mccullough_map(ell: usize, p: u32) -> Result<(GradedMap, String)> {
    if ell == 0 {
        return Err(Error::Invalid("ell must be at least 1".into()));
    }
    let ctx = AlgebraContext::with_prime(2 * ell - 1, p)?;
    let terms = (0..ell).map(|t| (ExtMonomial::from_indices(&[2 * t, 2 * t + 1]).unwrap(), 1));
    let q = ExtElement::from_terms(ctx.field(), -2, terms)?;
    let text = q.to_text(ctx.field());
    let phi = GradedMap::new(FreeEModule::new(&ctx, vec![-2]), FreeEModule::new(&ctx, vec![0]), vec![vec![q]])?;
    Ok((phi, text))
}

fn describe_regularity(value: i32, certified: bool, steps: usize) -> String {
    if certified {
        format!("regularity {value} (certified after {steps} steps)")
    } else {
        format!("regularity at most {value} (not certified; stopped after {steps} steps)")
    }
}

/// `E(a)^r + ...` in increasing twist.
fn describe_free(m: &FreeEModule) -> String {
    if m.is_zero() {
        return "0".into();
    }
    let mut counts: BTreeMap<i32, usize> = BTreeMap::new();
    for &g in m.degrees() {
        *counts.entry(-g).or_insert(0) += 1;
    }
    counts
        .iter()
        .map(|(&a, r)| if a == 0 { format!("E^{r}") } else { format!("E({a})^{r}") }).collect::<Vec<_>>().join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Result<String> {
        run(Cli::try_parse_from(std::iter::once("bggtate").chain(args.iter().copied())).unwrap())
    }

    #[test]
    fn windows_parse_with_negative_ends() {
        assert_eq!(parse_window("-2..2"), Ok((-2, 2)));
        assert!(parse_window("3..1").is_err());
        let cli = Cli::try_parse_from(["bggtate", "cohomology", "--module", "x", "--window", "-2..2", "--start", "-1"]).unwrap();
        let Command::Cohomology { win, .. } = cli.command else { panic!() };
        assert_eq!((win.window, win.start), ((-2, 2), Some(-1)));
    }

    #[test]
    fn mccullough_one() {
        let out = run_args(&["mccullough", "--ell", "1"]).unwrap();
        assert!(out.contains("regularity -1 (certified"));
        assert!(out.contains("expected ell-2 = -1: OK"));
    }

    #[test]
    fn census_json_fields() {
        let out = run_args(&["census", "--b", "1", "--bprime", "2", "-n", "2", "--trials", "5", "--seed", "3"]).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        for key in ["params", "members", "nonMembers", "uncertified", "distinctTables", "maxRegularity", "maxDescentDim", "zHistogram"] {
            assert!(v.get(key).is_some(), "{key}");
        }
    }

    #[test]
    fn parse_errors_exit_two() {
        assert_eq!(exit_code(&Error::Parse { line: 1, col: 1, msg: String::new() }), 2);
        assert_eq!(exit_code(&Error::ZeroModule(String::new())), 1);
    }
}
