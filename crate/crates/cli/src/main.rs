use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use farey_surgery::surgery::{CLAIMED_HYPERBOLIC_COUNT, SHARPNESS_LIMIT};
use farey_surgery::verify::{verify, SweepOutcome, VerifyOptions, DEFAULT_SEED};
use farey_surgery::{
    enumerate_omega_le, expand_cf, flip_path, geodesic_distance, report, s_sum, Error, FareyTriangle, FlipPath,
    OmegaReport, SurgeryCoefficient,
};
use serde::Serialize;

const THREADS_VAR: &str = "FAREY_SURGERY_THREADS";

#[derive(Parser)]
#[command(
    name = "farey-surgery",
    version,
    about = "Complexity bounds for surgeries on the figure-eight knot"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Upper complexity bound ω(p/q) for the surgery slope
    Omega {
        #[arg(allow_hyphen_values = true)]
        slope: String,
        /// Show triangles, flip distances and the assembly bill
        #[arg(long)]
        explain: bool,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Flip distance between two Farey triangles given as "a,b,c"
    Distance {
        #[arg(allow_hyphen_values = true)]
        t1: String,
        #[arg(allow_hyphen_values = true)]
        t2: String,
        /// Also print the geodesic sequence of triangles
        #[arg(long)]
        path: bool,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Geodesic sequence of triangles between two Farey triangles
    FlipPath {
        #[arg(allow_hyphen_values = true)]
        t1: String,
        #[arg(allow_hyphen_values = true)]
        t2: String,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Continued fraction expansion and partial quotient sum
    Cf {
        #[arg(allow_hyphen_values = true)]
        slope: String,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Every slope with ω(p/q) at most the given bound
    Enumerate {
        #[arg(long, default_value_t = SHARPNESS_LIMIT)]
        max_omega: u64,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Cross-check the walk against BFS and the assembly against the formula
    Verify {
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..=20))]
        radius: u32,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Number of random triangle pairs checked against BFS
        #[arg(long, default_value_t = 1000)]
        random_pairs: usize,
        /// Perturb one distance to exercise the failure path
        #[arg(long, hide = true)]
        inject_fault: bool,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

fn single_valued(format: Format, command: &str) -> anyhow::Result<Format> {
    if format == Format::Csv {
        bail!("csv output is only available for enumerate, not {command}");
    }
    Ok(format)
}

fn parse_slope(text: &str) -> anyhow::Result<SurgeryCoefficient> {
    text.parse().map_err(|e| match e {
        Error::InfiniteCoefficient => anyhow::anyhow!("infinite slope excluded by the theorem"),
        e => anyhow::Error::new(e).context(format!("invalid slope {text:?}")),
    })
}

fn parse_triangle(text: &str) -> anyhow::Result<FareyTriangle> {
    text.parse().with_context(|| format!("invalid triangle {text:?}"))
}

fn print_json(value: &impl Serialize) -> anyhow::Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn headline(r: &OmegaReport) -> String {
    let lead = format!("omega({}) = {}", r.slope, r.omega);
    match (r.complexity_claim, r.is_hyperbolic()) {
        (Some(c), true) => format!("{lead}; complexity = {c} (omega <= {SHARPNESS_LIMIT})"),
        (Some(c), false) => format!("{lead}; complexity = {c}"),
        (None, _) => format!("{lead}; complexity <= {}", r.omega),
    }
}

fn or_dash(v: Option<u64>) -> String {
    v.map(|v| v.to_string()).unwrap_or_else(|| "-".into())
}

fn print_explained(r: &OmegaReport) {
    println!("{}", headline(r));
    println!("  hyperbolic: {}", r.is_hyperbolic());
    println!("  a = {}, z = {}", r.a_value, r.z);
    if let (Some(m), Some(v)) = (&r.triangle_m, &r.triangle_v) {
        println!("  triangle_m = {m}; d(triangle_m, 0) = {}", or_dash(r.d_m_0));
        println!("  triangle_v = {v}; d(triangle_v, 0) = {}", or_dash(r.d_v_0));
        println!("  d(triangle_v, {}) = {}", r.z, or_dash(r.d_v_z));
    }
    if let Some(assembly) = &r.assembly {
        println!("  assembly:");
        for item in &assembly.cost_breakdown {
            println!("    {:<40} {:>4}", item.step, item.vertices);
        }
        println!("    {:<40} {:>4}", "total", assembly.block.interior_vertices());
    }
    if let (Some(v), Some(c)) = (r.pipeline_vertices, r.integer_correction) {
        println!("  pipeline vertices = {v}, integer correction = {c}, omega = {}", v - c);
    }
}

fn cmd_omega(slope: &str, explain: bool, format: Format) -> anyhow::Result<()> {
    let format = single_valued(format, "omega")?;
    let x = parse_slope(slope)?;
    let mut r = report(x)?;
    if !explain {
        r.assembly = None;
    }
    match format {
        Format::Json => print_json(&r),
        _ if explain => {
            print_explained(&r);
            Ok(())
        }
        _ => {
            println!("{}", headline(&r));
            Ok(())
        }
    }
}

fn print_path(path: &FlipPath) {
    for (i, t) in path.triangles().iter().enumerate() {
        println!("{i:>4}  {t}");
    }
}

#[derive(Serialize)]
struct DistanceOutput<'a> {
    t1: &'a FareyTriangle,
    t2: &'a FareyTriangle,
    distance: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    path: Option<&'a FlipPath>,
}

fn cmd_distance(t1: &str, t2: &str, with_path: bool, format: Format) -> anyhow::Result<()> {
    let format = single_valued(format, "distance")?;
    let (t1, t2) = (parse_triangle(t1)?, parse_triangle(t2)?);
    let distance = geodesic_distance(&t1, &t2)?;
    let path = if with_path { Some(flip_path(&t1, &t2)?) } else { None };
    match format {
        Format::Json => print_json(&DistanceOutput {
            t1: &t1,
            t2: &t2,
            distance,
            path: path.as_ref(),
        }),
        _ => {
            println!("{distance}");
            if let Some(path) = &path {
                print_path(path);
            }
            Ok(())
        }
    }
}

fn cmd_flip_path(t1: &str, t2: &str, format: Format) -> anyhow::Result<()> {
    let format = single_valued(format, "flip-path")?;
    let path = flip_path(&parse_triangle(t1)?, &parse_triangle(t2)?)?;
    match format {
        Format::Json => print_json(&path),
        _ => {
            print_path(&path);
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct CfOutput {
    slope: SurgeryCoefficient,
    quotients: Vec<u64>,
    sum: u64,
}

fn cmd_cf(slope: &str, format: Format) -> anyhow::Result<()> {
    let format = single_valued(format, "cf")?;
    let x = parse_slope(slope)?;
    let cf = expand_cf(x);
    match format {
        Format::Json => print_json(&CfOutput {
            slope: x,
            quotients: cf.quotients().to_vec(),
            sum: s_sum(x),
        }),
        _ => {
            println!("{x} = {cf}; S = {}", s_sum(x));
            Ok(())
        }
    }
}

fn cmd_enumerate(max_omega: u64, format: Format) -> anyhow::Result<()> {
    let e = enumerate_omega_le(max_omega)?;
    let summary = format!(
        "hyperbolic count = {} (published count {CLAIMED_HYPERBOLIC_COUNT} for max_omega = {SHARPNESS_LIMIT})",
        e.hyperbolic_count
    );
    match format {
        Format::Json => print_json(&e)?,
        Format::Csv => {
            println!("{}", OmegaReport::CSV_HEADER);
            for r in &e.reports {
                println!("{}", r.csv_row());
            }
            eprintln!("{summary}");
        }
        Format::Plain => {
            println!("{:<12} {:>5}  {:<10}  complexity", "slope", "omega", "hyperbolic");
            for r in &e.reports {
                println!(
                    "{:<12} {:>5}  {:<10}  {}",
                    r.slope.to_string(),
                    r.omega,
                    r.is_hyperbolic(),
                    or_dash(r.complexity_claim)
                );
            }
            println!("{} slopes", e.reports.len());
            println!("{summary}");
        }
    }
    Ok(())
}

fn print_sweep(name: &str, s: &SweepOutcome) {
    println!("{name}: {} checks, {} failures", s.checks, s.failures.len());
    for f in &s.failures {
        println!("  FAIL {f}");
    }
}

fn cmd_verify(options: VerifyOptions, format: Format) -> anyhow::Result<ExitCode> {
    let format = single_valued(format, "verify")?;
    let r = verify(&options)?;
    match format {
        Format::Json => print_json(&r)?,
        _ => {
            print_sweep("walk vs bfs ball", &r.ball);
            print_sweep("random pairs", &r.random_pairs);
            print_sweep("slope identities", &r.slopes);
            let verdict = if r.passed() { "PASS" } else { "FAIL" };
            println!(
                "verify {verdict}: {} checks (radius {}, seed {})",
                r.total_checks(),
                options.radius,
                options.seed
            );
        }
    }
    Ok(if r.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn configure_threads() -> anyhow::Result<()> {
    let Ok(value) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .with_context(|| format!("{THREADS_VAR} must be a positive integer, got {value:?}"))?;
    rayon::ThreadPoolBuilder::new().num_threads(threads).build_global()?;
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    configure_threads()?;
    match cli.command {
        Command::Omega { slope, explain, format } => cmd_omega(&slope, explain, format)?,
        Command::Distance { t1, t2, path, format } => cmd_distance(&t1, &t2, path, format)?,
        Command::FlipPath { t1, t2, format } => cmd_flip_path(&t1, &t2, format)?,
        Command::Cf { slope, format } => cmd_cf(&slope, format)?,
        Command::Enumerate { max_omega, format } => cmd_enumerate(max_omega, format)?,
        Command::Verify {
            radius,
            seed,
            random_pairs,
            inject_fault,
            format,
        } => {
            let options = VerifyOptions {
                radius,
                random_pairs,
                seed,
                inject_fault,
            };
            return cmd_verify(options, format);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
