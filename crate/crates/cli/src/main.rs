use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use extremal_diam::bench::{run_bench, BenchConfig, SCHEMA};
use extremal_diam::chordal::diameter_chordal;
use extremal_diam::domtarget::diameter_dominating_target;
use extremal_diam::engine::{approx_eccentricities, exact_diameter, CutoffMode, Stats};
use extremal_diam::extremities::all_extremities_oracle;
use extremal_diam::generators::{generate, Family, GenSpec};
use extremal_diam::graph::eccentricity_oracle;
use extremal_diam::io::{parse_auto, write_edge_list};
use extremal_diam::{Error, Graph};

const EXIT_MISMATCH: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_PROMISE: u8 = 3;

#[derive(Parser)]
#[command(name = "extremal-diam", version, about = "Diameter and eccentricities via graph extremities")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Cutoff {
    /// Known bound on pairwise nonadjacent extremities of the quotient.
    #[arg(long, conflicts_with = "oblivious")]
    alpha: Option<u32>,
    /// Derive the path cutoff from the Δ* estimate (default).
    #[arg(long)]
    oblivious: bool,
}

impl Cutoff {
    fn mode(&self) -> CutoffMode {
        match self.alpha {
            Some(a) => CutoffMode::Alpha(a),
            None => CutoffMode::Oblivious,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Exact diameter.
    Diameter {
        file: PathBuf,
        #[command(flatten)]
        cutoff: Cutoff,
        /// Compare against the all-BFS oracle.
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        json: bool,
    },
    /// Eccentricities up to an additive 1.
    EccApprox {
        file: PathBuf,
        #[command(flatten)]
        cutoff: Cutoff,
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        json: bool,
    },
    /// All extremities and the largest independent set among them.
    Extremities {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Every eccentricity by one BFS per vertex.
    Oracle {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Exact diameter of a chordal graph.
    ChordalDiameter {
        file: PathBuf,
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        json: bool,
    },
    /// Diameter of a graph with a small dominating target.
    DomtargetDiameter {
        file: PathBuf,
        /// Promised size of a dominating target.
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        json: bool,
    },
    /// Write a generated graph as an edge list.
    Gen {
        /// family:n:k:density:seed
        spec: String,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Scaling of the exact diameter against the oracle.
    Bench {
        family: String,
        #[arg(long, value_delimiter = ',', default_values_t = vec![500, 1000, 2000, 4000])]
        sizes: Vec<usize>,
        /// Comma list, or a range like 1..5.
        #[arg(long, default_value = "1..3")]
        seeds: String,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, default_value_t = 4.6)]
        density: f64,
        #[arg(long)]
        alpha: Option<u32>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Serialize)]
struct Input {
    path: String,
    n: usize,
    m: usize,
}

#[derive(Serialize)]
struct RunReport<R: Serialize> {
    schema: &'static str,
    algorithm: &'static str,
    input: Input,
    result: R,
    #[serde(skip_serializing_if = "Option::is_none")]
    stats: Option<Stats>,
    wall_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    verified: Option<bool>,
}

struct Failure {
    code: u8,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure { code: EXIT_INPUT, msg: e.to_string() }
    }
}

fn input_error(msg: impl Into<String>) -> Failure {
    Failure { code: EXIT_INPUT, msg: msg.into() }
}

fn load(path: &Path) -> Result<(Graph, Input), Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    let g = parse_auto(&text).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    let input = Input { path: path.display().to_string(), n: g.n(), m: g.m() };
    Ok((g, input))
}

fn emit<R: Serialize>(json: bool, report: &RunReport<R>, text: impl FnOnce() -> String) {
    if json {
        println!("{}", serde_json::to_string_pretty(report).expect("serializable report"));
    } else {
        println!("{}", text());
    }
}

fn verdict_suffix(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => " (verified)",
        Some(false) => " (MISMATCH)",
        None => "",
    }
}

fn mismatch_code(v: Option<bool>) -> u8 {
    if v == Some(false) {
        EXIT_MISMATCH
    } else {
        0
    }
}

fn parse_seeds(s: &str) -> Result<Vec<u64>, Failure> {
    let bad = || input_error(format!("invalid seeds {s:?}"));
    if let Some((a, b)) = s.split_once("..") {
        let a: u64 = a.trim().parse().map_err(|_| bad())?;
        let b: u64 = b.trim().parse().map_err(|_| bad())?;
        if b < a {
            return Err(bad());
        }
        return Ok((a..=b).collect());
    }
    s.split(',').map(|x| x.trim().parse().map_err(|_| bad())).collect()
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.cmd {
        Cmd::Diameter { file, cutoff, verify, json } => {
            let (g, input) = load(&file)?;
            let t = Instant::now();
            let r = exact_diameter(&g, cutoff.mode())?;
            let wall_ms = t.elapsed().as_secs_f64() * 1e3;
            let verified = verify.then(|| eccentricity_oracle(&g).map(|o| o.diameter == r.value)).transpose()?;
            let value = r.value;
            let report = RunReport {
                schema: SCHEMA,
                algorithm: "exact_diameter",
                input,
                stats: Some(r.stats.clone()),
                result: r,
                wall_ms,
                verified,
            };
            emit(json, &report, || format!("diameter {value}{}", verdict_suffix(verified)));
            Ok(mismatch_code(verified))
        }
        Cmd::EccApprox { file, cutoff, verify, json } => {
            let (g, input) = load(&file)?;
            let t = Instant::now();
            let est = approx_eccentricities(&g, cutoff.mode())?;
            let wall_ms = t.elapsed().as_secs_f64() * 1e3;
            let verified = if verify {
                let e = eccentricity_oracle(&g)?.eccentricities;
                Some(est.values.iter().zip(&e).all(|(a, b)| a <= b && a + 1 >= *b))
            } else {
                None
            };
            let text = || {
                let mut s: Vec<String> = est.values.iter().enumerate().map(|(v, e)| format!("{v} {e}")).collect();
                if let Some(ok) = verified {
                    s.push(if ok { "within 1 (verified)".into() } else { "outside band (MISMATCH)".into() });
                }
                s.join("\n")
            };
            let report = RunReport {
                schema: SCHEMA,
                algorithm: "approx_eccentricities",
                input,
                stats: Some(est.stats.clone()),
                result: &est.values,
                wall_ms,
                verified,
            };
            emit(json, &report, text);
            Ok(mismatch_code(verified))
        }
        Cmd::Extremities { file, json } => {
            let (g, input) = load(&file)?;
            let t = Instant::now();
            let rep = all_extremities_oracle(&g)?;
            let wall_ms = t.elapsed().as_secs_f64() * 1e3;
            let text = || {
                let exact = if rep.alpha_exact { "" } else { " (lower bound)" };
                format!("{} extremities, alpha={}{exact}", rep.extremities.len(), rep.alpha)
            };
            let report = RunReport { schema: SCHEMA, algorithm: "extremities", input, result: &rep, stats: None, wall_ms, verified: None };
            emit(json, &report, text);
            Ok(0)
        }
        Cmd::Oracle { file, json } => {
            let (g, input) = load(&file)?;
            let t = Instant::now();
            let rep = eccentricity_oracle(&g)?;
            let wall_ms = t.elapsed().as_secs_f64() * 1e3;
            let text = || format!("diameter {} radius {}", rep.diameter, rep.radius);
            let report = RunReport { schema: SCHEMA, algorithm: "oracle", input, result: &rep, stats: None, wall_ms, verified: None };
            emit(json, &report, text);
            Ok(0)
        }
        Cmd::ChordalDiameter { file, verify, json } => {
            let (g, input) = load(&file)?;
            let t = Instant::now();
            let r = diameter_chordal(&g)?;
            let wall_ms = t.elapsed().as_secs_f64() * 1e3;
            let verified = verify.then(|| eccentricity_oracle(&g).map(|o| o.diameter == r.diameter.value)).transpose()?;
            let text = || format!("diameter {} branch {:?}{}", r.diameter.value, r.branch, verdict_suffix(verified));
            let report = RunReport {
                schema: SCHEMA,
                algorithm: "diameter_chordal",
                input,
                stats: Some(r.diameter.stats.clone()),
                result: &r,
                wall_ms,
                verified,
            };
            emit(json, &report, text);
            Ok(mismatch_code(verified))
        }
        Cmd::DomtargetDiameter { file, k, verify, json } => {
            let (g, input) = load(&file)?;
            let t = Instant::now();
            let r = diameter_dominating_target(&g, k)?;
            let wall_ms = t.elapsed().as_secs_f64() * 1e3;
            let verified = verify.then(|| eccentricity_oracle(&g).map(|o| o.diameter == r.diameter.value)).transpose()?;
            let text = || {
                let flag = if r.promise_violated { " (promise violated)" } else { "" };
                format!("diameter {}{}{flag}", r.diameter.value, verdict_suffix(verified))
            };
            let report = RunReport {
                schema: SCHEMA,
                algorithm: "diameter_dominating_target",
                input,
                stats: Some(r.diameter.stats.clone()),
                result: &r,
                wall_ms,
                verified,
            };
            emit(json, &report, text);
            Ok(match mismatch_code(verified) {
                0 if r.promise_violated => EXIT_PROMISE,
                c => c,
            })
        }
        Cmd::Gen { spec, output } => {
            let spec: GenSpec = spec.parse()?;
            let g = generate(&spec)?;
            let text = write_edge_list(&g, Some(&spec.to_string()));
            std::fs::write(&output, text).map_err(|e| input_error(format!("{}: {e}", output.display())))?;
            eprintln!("wrote {} vertices, {} edges to {}", g.n(), g.m(), output.display());
            Ok(0)
        }
        Cmd::Bench { family, sizes, seeds, k, density, alpha, json } => {
            let family: Family = family.parse()?;
            let cfg = BenchConfig {
                family,
                sizes,
                seeds: parse_seeds(&seeds)?,
                k,
                density,
                mode: alpha.map_or(CutoffMode::Oblivious, CutoffMode::Alpha),
            };
            let rep = run_bench(&cfg)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&rep).expect("serializable report"));
            } else {
                println!("{:>8} {:>10} {:>12} {:>14} {:>12} {:>14}", "n", "m", "exact ms", "exact work", "oracle ms", "oracle work");
                for r in &rep.rows {
                    println!(
                        "{:>8} {:>10.0} {:>12.2} {:>14.0} {:>12.2} {:>14.0}",
                        r.n, r.median_m, r.exact.median_ms, r.exact.median_work, r.oracle.median_ms, r.oracle.median_work
                    );
                }
                let s = &rep.slopes;
                println!("slope work: exact {:.3} oracle {:.3}", s.exact_work, s.oracle_work);
                println!("slope time: exact {:.3} oracle {:.3}", s.exact_time, s.oracle_time);
                println!("slope searches: exact {:.3} oracle {:.3}", s.exact_searches, s.oracle_searches);
            }
            Ok(if rep.mismatches > 0 { EXIT_MISMATCH } else { 0 })
        }
    }
}

fn configure_threads() {
    let threads = std::env::var("EXTREMAL_DIAM_THREADS").ok().and_then(|s| s.parse::<usize>().ok()).unwrap_or(0);
    if threads > 0 {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
