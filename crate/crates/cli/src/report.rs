//! Serializable reports, one per subcommand, and their csv/plain renderings.
//!
//! Field order in the structs is the JSON field order. Timings are integer
//! microseconds, the only fields that vary between identical runs.

use std::fmt::Write;

use frobenius3::reduction::{Completion, ConjectureReport, ReductionSets, SweepReport};
use frobenius3::two_var::{BinnerData, FrobeniusPair};
use frobenius3::{SolutionTriple, ThreeVarInstance};
use serde::{Deserialize, Serialize};

pub trait Render: Serialize {
    fn csv(&self) -> String;
    fn plain(&self) -> String;

    fn json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MethodResult {
    pub method: String,
    pub count: u128,
    pub micros: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountReport {
    pub instance: ThreeVarInstance,
    pub methods: Vec<MethodResult>,
    pub agree: bool,
    /// The common count, absent when the methods disagree.
    pub count: Option<u128>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveReport {
    pub instance: ThreeVarInstance,
    pub methods: Vec<MethodResult>,
    pub agree: bool,
    pub count: u128,
    pub solutions: Vec<SolutionTriple>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoReport {
    pub a: i64,
    pub b: i64,
    pub m: i64,
    pub gcd: i64,
    pub count: u128,
    /// Family data and table count; present only for coprime pairs.
    pub binner: Option<BinnerData>,
    pub table_count: Option<u128>,
    pub first_nonneg: Option<(i64, i64)>,
    pub agree: bool,
    pub solutions: Vec<(i64, i64)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct McNuggetReport {
    pub n: i64,
    pub count: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusReport {
    pub a: i64,
    pub b: i64,
    pub frobenius: i128,
    pub non_representable_count: u128,
}

impl FrobeniusReport {
    pub fn new(a: i64, b: i64, pair: FrobeniusPair) -> Self {
        Self {
            a,
            b,
            frobenius: pair.frobenius,
            non_representable_count: pair.non_representable_count,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReduceReport {
    pub instance: ThreeVarInstance,
    pub boundary: ReductionSets,
    pub completion: Completion,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepGrid {
    pub p_max: i64,
    pub q_max: i64,
    pub l_max: i64,
    pub n_max: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepOutput {
    pub grid: SweepGrid,
    pub report: SweepReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchRow {
    pub p: i64,
    pub q: i64,
    pub l: i64,
    pub n: i64,
    pub count: u128,
    pub residue_us: u64,
    pub closed_us: u64,
    pub exhaustive_us: u64,
    pub series_us: u64,
    pub brute_us: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchReport {
    pub repetitions: u32,
    pub rows: Vec<BenchRow>,
}

fn instance_line(inst: &ThreeVarInstance) -> String {
    format!(
        "{}x + {}y + {}z = {}",
        inst.p(),
        inst.q(),
        inst.l(),
        inst.n()
    )
}

fn triple_rows(out: &mut String, solutions: &[SolutionTriple]) {
    for s in solutions {
        let _ = writeln!(out, "{},{},{}", s.x, s.y, s.z);
    }
}

impl Render for CountReport {
    fn csv(&self) -> String {
        let mut out = String::from("method,count,micros\n");
        for m in &self.methods {
            let _ = writeln!(out, "{},{},{}", m.method, m.count, m.micros);
        }
        out
    }

    fn plain(&self) -> String {
        let mut out = format!("{}\n", instance_line(&self.instance));
        for m in &self.methods {
            let _ = writeln!(out, "  {:<10} {:>12}  ({} us)", m.method, m.count, m.micros);
        }
        match self.count {
            Some(c) => {
                let _ = writeln!(out, "count: {c}");
            }
            None => out.push_str("methods disagree\n"),
        }
        out
    }
}

impl Render for SolveReport {
    fn csv(&self) -> String {
        let mut out = String::from("x,y,z\n");
        triple_rows(&mut out, &self.solutions);
        out
    }

    fn plain(&self) -> String {
        let mut out = format!(
            "{}: {} solutions\n",
            instance_line(&self.instance),
            self.count
        );
        for s in &self.solutions {
            let _ = writeln!(out, "  {s}");
        }
        out
    }
}

impl Render for TwoReport {
    fn csv(&self) -> String {
        let mut out = String::from("x,y\n");
        for (x, y) in &self.solutions {
            let _ = writeln!(out, "{x},{y}");
        }
        out
    }

    fn plain(&self) -> String {
        let mut out = format!(
            "{}x + {}y = {}: {} solutions\n",
            self.a, self.b, self.m, self.count
        );
        if let Some(d) = &self.binner {
            let _ = writeln!(out, "  a1 = {}, b1 = {}, M = {}", d.a1, d.b1, d.max_index);
        }
        for (x, y) in &self.solutions {
            let _ = writeln!(out, "  ({x}, {y})");
        }
        out
    }
}

impl Render for McNuggetReport {
    fn csv(&self) -> String {
        format!("n,count\n{},{}\n", self.n, self.count)
    }

    fn plain(&self) -> String {
        format!("N(6, 9, 20, {}) = {}\n", self.n, self.count)
    }
}

impl Render for FrobeniusReport {
    fn csv(&self) -> String {
        format!(
            "a,b,frobenius,non_representable_count\n{},{},{},{}\n",
            self.a, self.b, self.frobenius, self.non_representable_count
        )
    }

    fn plain(&self) -> String {
        format!(
            "g({}, {}) = {}; {} non-representable positive integers\n",
            self.a, self.b, self.frobenius, self.non_representable_count
        )
    }
}

impl Render for ReduceReport {
    fn csv(&self) -> String {
        let mut out = String::from("set,x,y,z\n");
        let b = &self.boundary;
        for (name, set) in [("s1", &b.s1), ("s2", &b.s2), ("s3", &b.s3)]
            .into_iter()
            .chain([("combined", &self.completion.combined)])
        {
            for s in set {
                let _ = writeln!(out, "{name},{},{},{}", s.x, s.y, s.z);
            }
        }
        out
    }

    fn plain(&self) -> String {
        let b = &self.boundary;
        let list = |v: &[SolutionTriple]| {
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        };
        format!(
            "{}\n  S1 (x=0): {{{}}}\n  S2 (y=0): {{{}}}\n  S3 (z=0): {{{}}}\n  combined: {{{}}}\n  \
             completion found {} of {} solutions\n",
            instance_line(&self.instance),
            list(&b.s1),
            list(&b.s2),
            list(&b.s3),
            list(&self.completion.combined),
            self.completion.solutions.len(),
            self.completion.expected,
        )
    }
}

impl Render for ConjectureReport {
    fn csv(&self) -> String {
        let mut out =
            String::from("target_x,target_y,target_z,a_x,a_y,a_z,b_x,b_y,b_z,c_x,c_y,c_z\n");
        for w in &self.free_witnesses {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{},{},{}",
                w.target.x,
                w.target.y,
                w.target.z,
                w.s_a.x,
                w.s_a.y,
                w.s_a.z,
                w.s_b.x,
                w.s_b.y,
                w.s_b.z,
                w.s_c.x,
                w.s_c.y,
                w.s_c.z,
            );
        }
        out
    }

    fn plain(&self) -> String {
        let mut out = format!(
            "{}\n  solutions: {}\n  witnessed (face-indexed): {}\n  witnessed (free): {}\n  \
             N-hat: {}, bound 3*C(N-hat,3) = {} ({:?})\n",
            instance_line(&self.instance),
            self.total_solutions,
            self.witnessed_strict,
            self.witnessed_free,
            self.n_hat,
            self.bound,
            self.bound_status,
        );
        for w in &self.free_witnesses {
            let _ = writeln!(out, "  {} = {} - {} + {}", w.target, w.s_a, w.s_b, w.s_c);
        }
        for c in &self.counterexamples {
            let _ = writeln!(out, "  no witness: {c}");
        }
        out
    }
}

impl Render for SweepOutput {
    fn csv(&self) -> String {
        let mut out = String::from("p,q,l,n,x,y,z\n");
        for c in &self.report.counterexamples {
            let [p, q, l] = c.instance.coefficients();
            for s in &c.unwitnessed {
                let _ = writeln!(
                    out,
                    "{p},{q},{l},{},{},{},{}",
                    c.instance.n(),
                    s.x,
                    s.y,
                    s.z
                );
            }
        }
        out
    }

    fn plain(&self) -> String {
        let r = &self.report;
        format!(
            "instances: {}\n  fully witnessed (free): {}\n  fully witnessed (face-indexed): {}\n  \
             with counterexamples: {}\n  bound violations: {}\n  bound flagged for review: {}\n",
            r.instances,
            r.fully_witnessed_free,
            r.fully_witnessed_strict,
            r.with_counterexamples,
            r.bound_violations,
            r.bound_reviews,
        )
    }
}

impl Render for BenchReport {
    fn csv(&self) -> String {
        let mut out =
            String::from("p,q,l,n,count,residue_us,closed_us,exhaustive_us,series_us,brute_us\n");
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{}",
                r.p,
                r.q,
                r.l,
                r.n,
                r.count,
                r.residue_us,
                r.closed_us,
                r.exhaustive_us,
                r.series_us,
                r.brute_us
            );
        }
        out
    }

    fn plain(&self) -> String {
        self.csv()
    }
}
