//! Scaling measurements of the exact diameter against the all-BFS oracle.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::engine::{exact_diameter, CutoffMode};
use crate::error::{Error, Result};
use crate::generators::{generate_connected, Family, GenSpec};
use crate::graph::eccentricity_oracle;

pub const SCHEMA: &str = "extremal-diam/1";

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub family: Family,
    pub sizes: Vec<usize>,
    pub seeds: Vec<u64>,
    pub k: usize,
    pub density: f64,
    pub mode: CutoffMode,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Measure {
    pub median_ms: f64,
    pub median_searches: f64,
    /// Median of searches × (n + 2m).
    pub median_work: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub n: usize,
    pub median_m: f64,
    pub exact: Measure,
    pub oracle: Measure,
    pub runs: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Slopes {
    pub exact_searches: f64,
    pub exact_work: f64,
    pub exact_time: f64,
    pub oracle_searches: f64,
    pub oracle_work: f64,
    pub oracle_time: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub schema: String,
    pub family: String,
    pub specs: Vec<String>,
    pub rows: Vec<BenchRow>,
    /// Least-squares slopes of log(measure) against log(n).
    pub slopes: Slopes,
    pub mismatches: usize,
}

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(f64::total_cmp);
    let k = xs.len();
    if k % 2 == 1 {
        xs[k / 2]
    } else {
        (xs[k / 2 - 1] + xs[k / 2]) / 2.0
    }
}

/// Slope of the least-squares line through (ln x, ln y).
pub fn log_log_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let pts: Vec<(f64, f64)> = xs.iter().zip(ys).map(|(x, y)| (x.ln(), y.max(f64::MIN_POSITIVE).ln())).collect();
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    if sxx == 0.0 {
        0.0
    } else {
        sxy / sxx
    }
}

pub fn run_bench(cfg: &BenchConfig) -> Result<BenchReport> {
    if cfg.sizes.len() < 2 || cfg.seeds.is_empty() {
        return Err(Error::InvalidArgument("need at least two sizes and one seed".into()));
    }
    let mut rows = Vec::new();
    let mut specs = Vec::new();
    let mut mismatches = 0;
    for &n in &cfg.sizes {
        let (mut ms, mut ex, mut or) = (Vec::new(), [Vec::new(), Vec::new(), Vec::new()], [Vec::new(), Vec::new(), Vec::new()]);
        for &seed in &cfg.seeds {
            let spec = GenSpec::new(cfg.family, n, cfg.k, cfg.density, seed);
            specs.push(spec.to_string());
            let g = generate_connected(&spec)?;
            let size = (g.n() + 2 * g.m()) as f64;
            ms.push(g.m() as f64);

            let t = Instant::now();
            let r = exact_diameter(&g, cfg.mode)?;
            ex[0].push(t.elapsed().as_secs_f64() * 1e3);
            ex[1].push(r.stats.searches as f64);
            ex[2].push(r.stats.work as f64);

            let t = Instant::now();
            let o = eccentricity_oracle(&g)?;
            or[0].push(t.elapsed().as_secs_f64() * 1e3);
            or[1].push(g.n() as f64);
            or[2].push(g.n() as f64 * size);
            if o.diameter != r.value {
                mismatches += 1;
            }
        }
        let measure = |m: &[Vec<f64>; 3]| Measure {
            median_ms: median(m[0].clone()),
            median_searches: median(m[1].clone()),
            median_work: median(m[2].clone()),
        };
        rows.push(BenchRow { n, median_m: median(ms), exact: measure(&ex), oracle: measure(&or), runs: cfg.seeds.len() });
    }
    let xs: Vec<f64> = rows.iter().map(|r| r.n as f64).collect();
    let col = |f: &dyn Fn(&BenchRow) -> f64| -> Vec<f64> { rows.iter().map(f).collect() };
    let slopes = Slopes {
        exact_searches: log_log_slope(&xs, &col(&|r| r.exact.median_searches)),
        exact_work: log_log_slope(&xs, &col(&|r| r.exact.median_work)),
        exact_time: log_log_slope(&xs, &col(&|r| r.exact.median_ms)),
        oracle_searches: log_log_slope(&xs, &col(&|r| r.oracle.median_searches)),
        oracle_work: log_log_slope(&xs, &col(&|r| r.oracle.median_work)),
        oracle_time: log_log_slope(&xs, &col(&|r| r.oracle.median_ms)),
    };
    Ok(BenchReport {
        schema: SCHEMA.to_string(),
        family: cfg.family.tag().to_string(),
        specs,
        rows,
        slopes,
        mismatches,
    })
}
