//! `magicchart`: the magic chart, its dimension formulas and their checks.
//!
//! Exit codes: 0 on success, 1 when a verification or `--expect` fails,
//! 2 on usage errors and rejected parameters.

mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use magicchart::dimform::{
    dim_der, dim_g, dim_tri, e7_vdim, exc_gk, severi_vk, so12_vdim_w5w2, so12_vdim_w6w1, subexc_gk,
    subexc_v2k, subexc_vk,
};
use magicchart::intermediate::{magic_chart, odd_symplectic_gk};
use magicchart::jordan::{gw_membership, j3_cofactor, j3_det, nu3, Tag, J3A};
use magicchart::rootsys::{power_decompose, tensor_decompose, DecompBounds, ModuleSpec, PowerKind, RootSystem, Weight};
use magicchart::sample::seeded;
use magicchart::serial::parse_rational;
use magicchart::{Error, Rational};
use serde_json::json;

use verify::Suite;

#[derive(Parser)]
#[command(name = "magicchart", version, about = "Exact computations around the sextonions and the magic chart")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the expanded magic chart and the Barton-Sudbery table.
    Chart {
        #[arg(long, value_enum, default_value_t = Format::Md)]
        format: Format,
    },
    /// Evaluate one closed-form dimension formula.
    Dim {
        #[arg(value_enum)]
        formula: Formula,
        /// Series parameter, an integer or a fraction such as -2/3.
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        i: Option<u64>,
        #[arg(long)]
        j: Option<u64>,
        #[arg(long)]
        n: Option<u64>,
        /// Fail with exit code 1 unless the value equals this.
        #[arg(long, allow_hyphen_values = true)]
        expect: Option<String>,
    },
    /// Run a verification suite and print a JSON report.
    Verify {
        #[arg(value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Highest plethysm degree checked; defaults to MAGICCHART_MAX_DEGREE or 2.
        #[arg(long)]
        max_degree: Option<u32>,
    },
    /// Decompose a tensor or symmetric/exterior power into irreducibles.
    Decompose {
        /// Root system such as D6 or E7.
        #[arg(long)]
        group: String,
        /// Highest weight in fundamental-weight coordinates, e.g. 0,0,0,0,0,1.
        /// Repeat for a reducible module.
        #[arg(long = "weight", required = true)]
        weights: Vec<String>,
        /// Second factor of a tensor product.
        #[arg(long = "tensor")]
        tensor: Vec<String>,
        #[arg(long, default_value_t = 1)]
        degree: u32,
        #[arg(long, value_enum, default_value_t = Kind::Sym)]
        kind: Kind,
        #[arg(long)]
        max_degree: Option<u32>,
    },
    /// Print a worked example.
    Demo {
        #[arg(value_enum)]
        topic: Topic,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Md,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Formula {
    ExcGk,
    SubexcGk,
    SubexcVk,
    SubexcV2k,
    SeveriVk,
    DimDer,
    DimTri,
    DimG,
    E7Vdim,
    So12W5w2,
    So12W6w1,
    OddSymplectic,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Sym,
    Alt,
}

#[derive(Clone, Copy, ValueEnum)]
enum Topic {
    Jordan,
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn need<T>(x: Option<T>, flag: &str) -> Result<T, Failure> {
    x.ok_or_else(|| Failure::Usage(format!("missing --{flag}")))
}

fn rational(x: Option<String>, flag: &str) -> Result<Rational, Failure> {
    Ok(parse_rational(&need(x, flag)?)?)
}

#[allow(clippy::too_many_arguments)]
fn cmd_dim(
    formula: Formula,
    a: Option<String>,
    b: Option<String>,
    k: Option<u32>,
    i: Option<u64>,
    j: Option<u64>,
    n: Option<u64>,
) -> Result<String, Failure> {
    let value = match formula {
        Formula::ExcGk => exc_gk(&rational(a, "a")?, need(k, "k")?)?.to_string(),
        Formula::SubexcGk => subexc_gk(&rational(a, "a")?, need(k, "k")?)?.to_string(),
        Formula::SubexcVk => subexc_vk(&rational(a, "a")?, need(k, "k")?)?.to_string(),
        Formula::SubexcV2k => subexc_v2k(&rational(a, "a")?, need(k, "k")?)?.to_string(),
        Formula::SeveriVk => severi_vk(&rational(a, "a")?, need(k, "k")?)?.to_string(),
        Formula::DimDer => dim_der(&rational(a, "a")?)?.to_string(),
        Formula::DimTri => dim_tri(&rational(a, "a")?)?.to_string(),
        Formula::DimG => dim_g(&rational(a, "a")?, &rational(b, "b")?)?.to_string(),
        Formula::E7Vdim => e7_vdim(need(i, "i")?, need(j, "j")?)?.to_string(),
        Formula::So12W5w2 => so12_vdim_w5w2(need(i, "i")?, need(j, "j")?)?.to_string(),
        Formula::So12W6w1 => so12_vdim_w6w1(need(i, "i")?, need(j, "j")?)?.to_string(),
        Formula::OddSymplectic => odd_symplectic_gk(need(n, "n")?, u64::from(need(k, "k")?))?.to_string(),
    };
    Ok(value)
}

fn module(rs: &RootSystem, ws: &[String]) -> Result<ModuleSpec, Failure> {
    let mut m = ModuleSpec::default();
    for w in ws {
        let w: Weight = w.parse()?;
        if w.rank() != rs.rank {
            return Err(Error::WeightRank { got: w.rank(), rank: rs.rank }.into());
        }
        m.push(w, 1);
    }
    Ok(m)
}

fn cmd_decompose(
    group: &str,
    weights: &[String],
    tensor: &[String],
    degree: u32,
    kind: Kind,
    max_degree: Option<u32>,
) -> Result<String, Failure> {
    let rs = RootSystem::parse(group)?;
    let m = module(&rs, weights)?;
    let mut bounds = DecompBounds::from_env();
    if let Some(d) = max_degree {
        bounds.max_degree = d;
    }
    let mut out = format!("group: {}\nmodule: {m}\ndim: {}\n", rs.name(), m.dim(&rs)?);
    if !tensor.is_empty() {
        let other = module(&rs, tensor)?;
        let t = tensor_decompose(&rs, &m, &other)?;
        out += &format!("tensor with: {other}\nresult: {t}\ndim: {}\n", t.dim(&rs)?);
    } else {
        let (pk, label) = match kind {
            Kind::Sym => (PowerKind::Sym, "S"),
            Kind::Alt => (PowerKind::Alt, "L"),
        };
        let p = power_decompose(&rs, &m, degree, pk, bounds)?;
        out += &format!("{label}^{degree}: {p}\ndim: {}\n", p.dim(&rs)?);
    }
    Ok(out)
}

fn cmd_demo_jordan(seed: u64) -> Result<String, Failure> {
    let mut rng = seeded(seed);
    let x = J3A::random(&mut rng, Tag::S);
    let q = j3_cofactor(&x);
    let det = j3_det(&x);
    let m = nu3(&x);
    let v = json!({
        "seed": seed,
        "x": x,
        "Q(x)": q,
        "det(x)": det.to_string(),
        "Q(Q(x)) == det(x) x": j3_cofactor(&q) == x.scale(&det),
        "nu3(x)": m,
        "nu3(x) in G_w": gw_membership(&m),
    });
    serde_json::to_string_pretty(&v).map(|s| s + "\n").map_err(|e| Failure::Usage(e.to_string()))
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Chart { format } => {
            let chart = magic_chart()?;
            Ok(match format {
                Format::Md => chart.to_markdown(),
                Format::Csv => chart.to_csv(),
                Format::Json => chart.to_json(),
            })
        }
        Command::Dim { formula, a, b, k, i, j, n, expect } => {
            let value = cmd_dim(formula, a, b, k, i, j, n)?;
            match expect {
                Some(e) if e.trim() != value => {
                    eprintln!("expected {}, got {value}", e.trim());
                    Err(Failure::Check(format!("{value}\n")))
                }
                _ => Ok(format!("{value}\n")),
            }
        }
        Command::Verify { suite, seed, max_degree } => {
            let d = max_degree.unwrap_or_else(|| {
                std::env::var(magicchart::rootsys::MAX_DEGREE_ENV)
                    .ok()
                    .and_then(|v| v.parse().ok())
                    .unwrap_or(2)
            });
            let report = verify::run(suite, seed, d);
            let text = serde_json::to_string_pretty(&report).map_err(|e| Failure::Usage(e.to_string()))? + "\n";
            if report.all_pass() {
                Ok(text)
            } else {
                Err(Failure::Check(text))
            }
        }
        Command::Decompose { group, weights, tensor, degree, kind, max_degree } => {
            cmd_decompose(&group, &weights, &tensor, degree, kind, max_degree)
        }
        Command::Demo { topic: Topic::Jordan, seed } => cmd_demo_jordan(seed),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Check(text)) => {
            print!("{text}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
