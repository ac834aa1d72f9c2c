//! Timing harness: every counting method on every grid point, median
//! wall-clock time over the repetitions. Counts are cross-checked before
//! any timing is reported.

use frobenius3::{Error, ThreeVarInstance};

use crate::args::Format;
use crate::report::{BenchReport, BenchRow, Render};
use crate::{method_name, timed_count, Budgets, Outcome, COUNT_METHODS, EXIT_DISAGREE};

#[derive(Debug, Clone, Default)]
pub struct Grid {
    pub p: Vec<i64>,
    pub q: Vec<i64>,
    pub l: Vec<i64>,
    pub n: Vec<i64>,
}

impl Grid {
    /// Cartesian product in `(p, q, l, n)` order; empty if any axis is.
    pub fn instances(&self) -> frobenius3::Result<Vec<ThreeVarInstance>> {
        let mut out = Vec::new();
        for &p in &self.p {
            for &q in &self.q {
                for &l in &self.l {
                    for &n in &self.n {
                        out.push(ThreeVarInstance::new(p, q, l, n)?);
                    }
                }
            }
        }
        Ok(out)
    }
}

/// The brute-force oracle gets a much larger cap here than elsewhere, so
/// that grids up to n = 10^5 run without `--budget`.
pub fn default_budgets() -> Budgets {
    Budgets {
        brute_iterations: 1_000_000_000,
        ..Budgets::default()
    }
}

fn median(mut v: Vec<u64>) -> u64 {
    v.sort_unstable();
    v[v.len() / 2]
}

pub fn measure(inst: &ThreeVarInstance, reps: u32, budgets: &Budgets) -> Result<BenchRow, Outcome> {
    let mut counts = [0u128; 5];
    let mut times: [Vec<u64>; 5] = Default::default();
    for rep in 0..reps {
        for (i, &method) in COUNT_METHODS.iter().enumerate() {
            let (count, micros) =
                timed_count(inst, method, budgets).map_err(|e| Outcome::error(&e))?;
            if rep == 0 {
                counts[i] = count;
            }
            times[i].push(micros);
        }
        if rep == 0 && counts.windows(2).any(|w| w[0] != w[1]) {
            let parts: Vec<String> = COUNT_METHODS
                .iter()
                .zip(counts)
                .map(|(m, c)| format!("{}={c}", method_name(*m)))
                .collect();
            return Err(Outcome {
                code: EXIT_DISAGREE,
                stdout: String::new(),
                stderr: format!(
                    "error: methods disagree on ({}, {}, {}, {}): {}\n",
                    inst.p(),
                    inst.q(),
                    inst.l(),
                    inst.n(),
                    parts.join(" ")
                ),
            });
        }
    }
    let [residue, closed, exhaustive, series, brute] = times.map(median);
    Ok(BenchRow {
        p: inst.p(),
        q: inst.q(),
        l: inst.l(),
        n: inst.n(),
        count: counts[0],
        residue_us: residue,
        closed_us: closed,
        exhaustive_us: exhaustive,
        series_us: series,
        brute_us: brute,
    })
}

pub fn run(grid: &Grid, reps: u32, budgets: &Budgets, format: Format) -> Outcome {
    if reps == 0 {
        return Outcome::error(&Error::InvalidInput("--reps must be at least 1".into()));
    }
    let instances = match grid.instances() {
        Ok(v) => v,
        Err(e) => return Outcome::error(&e),
    };
    let mut rows = Vec::with_capacity(instances.len());
    for inst in &instances {
        match measure(inst, reps, budgets) {
            Ok(row) => rows.push(row),
            Err(outcome) => return outcome,
        }
    }
    let report = BenchReport {
        repetitions: reps,
        rows,
    };
    Outcome::ok(match format {
        Format::Json => report.json(),
        Format::Csv | Format::Plain => report.csv(),
    })
}
