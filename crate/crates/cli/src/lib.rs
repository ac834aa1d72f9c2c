//! Library side of the `frobenius3` binary. [`run`] turns an argument list
//! into an exit status plus the text for stdout and stderr, so the whole
//! front end can be driven from tests without spawning processes.
//!
//! Exit status: 0 success, 1 invalid input, 2 methods disagree,
//! 3 budget exceeded.

pub mod args;
pub mod bench;
pub mod report;

use std::time::Instant;

use clap::Parser;
use frobenius3::reduction::{self, DEFAULT_SEARCH_BUDGET};
use frobenius3::{
    genfunc, three_var, two_var, Error, SolutionTriple, ThreeVarInstance, TwoVarEquation,
};

use args::{Cli, Command, Format, InstanceArgs, Method, SolveMethod};
use report::{
    CountReport, FrobeniusReport, McNuggetReport, MethodResult, ReduceReport, Render, SolveReport,
    SweepGrid, SweepOutput, TwoReport,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_DISAGREE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(e: &Error) -> Self {
        let code = match e {
            Error::BudgetExceeded { .. } => EXIT_BUDGET,
            _ => EXIT_INVALID,
        };
        Self {
            code,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        }
    }
}

/// Caps for the budgeted computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budgets {
    pub brute_iterations: u64,
    pub series_terms: u64,
    pub search_triples: u128,
}

impl Default for Budgets {
    fn default() -> Self {
        Self {
            brute_iterations: genfunc::DEFAULT_BRUTE_BUDGET,
            series_terms: genfunc::DEFAULT_SERIES_LIMIT,
            search_triples: DEFAULT_SEARCH_BUDGET,
        }
    }
}

impl Budgets {
    /// One `--budget` value caps every computation.
    pub fn uniform(n: u64) -> Self {
        Self {
            brute_iterations: n,
            series_terms: n,
            search_triples: n as u128,
        }
    }
}

/// Every single counting method, in report order.
pub const COUNT_METHODS: [Method; 5] = [
    Method::Residue,
    Method::Closed,
    Method::Exhaustive,
    Method::Series,
    Method::Brute,
];

pub fn method_name(m: Method) -> &'static str {
    match m {
        Method::Residue => "residue",
        Method::Closed => "closed",
        Method::Exhaustive => "exhaustive",
        Method::Series => "series",
        Method::Brute => "brute",
        Method::All => "all",
    }
}

/// Run one counting method and time it.
pub fn timed_count(
    inst: &ThreeVarInstance,
    method: Method,
    budgets: &Budgets,
) -> frobenius3::Result<(u128, u64)> {
    let start = Instant::now();
    let count = match method {
        Method::Residue => three_var::count_residue(inst)?,
        Method::Closed => three_var::count_closed(inst)?.0,
        Method::Exhaustive => three_var::enumerate_exhaustive(inst)?.len() as u128,
        Method::Series => genfunc::series_count_within(
            &inst.coefficients(),
            inst.n() as u64,
            budgets.series_terms,
        )?,
        Method::Brute => genfunc::brute_force_count_within(inst, budgets.brute_iterations)?,
        Method::All => unreachable!("`all` is expanded by the caller"),
    };
    Ok((count, start.elapsed().as_micros() as u64))
}

fn instance(args: &InstanceArgs) -> frobenius3::Result<ThreeVarInstance> {
    ThreeVarInstance::new(args.p, args.q, args.l, args.n)
}

fn render<R: Render>(report: &R, format: Format) -> String {
    match format {
        Format::Json => report.json(),
        Format::Csv => report.csv(),
        Format::Plain => report.plain(),
    }
}

fn disagreement(methods: &[MethodResult]) -> String {
    let parts: Vec<String> = methods
        .iter()
        .map(|m| format!("{}={}", m.method, m.count))
        .collect();
    format!("error: methods disagree: {}\n", parts.join(" "))
}

fn count(args: &InstanceArgs, method: Method, budgets: &Budgets, format: Format) -> Outcome {
    let inst = match instance(args) {
        Ok(i) => i,
        Err(e) => return Outcome::error(&e),
    };
    let selected: Vec<Method> = if method == Method::All {
        COUNT_METHODS.to_vec()
    } else {
        vec![method]
    };
    let mut methods = Vec::with_capacity(selected.len());
    for m in selected {
        match timed_count(&inst, m, budgets) {
            Ok((count, micros)) => methods.push(MethodResult {
                method: method_name(m).into(),
                count,
                micros,
            }),
            Err(e) => return Outcome::error(&e),
        }
    }
    let agree = methods.windows(2).all(|w| w[0].count == w[1].count);
    let report = CountReport {
        instance: inst,
        count: agree.then(|| methods[0].count),
        agree,
        methods,
    };
    let stdout = render(&report, format);
    if agree {
        Outcome::ok(stdout)
    } else {
        Outcome {
            code: EXIT_DISAGREE,
            stdout,
            stderr: disagreement(&report.methods),
        }
    }
}

type Enumerator = fn(&ThreeVarInstance) -> frobenius3::Result<Vec<SolutionTriple>>;

fn solve(args: &InstanceArgs, method: SolveMethod, format: Format) -> Outcome {
    let inst = match instance(args) {
        Ok(i) => i,
        Err(e) => return Outcome::error(&e),
    };
    let runs: Vec<(&str, Enumerator)> = match method {
        SolveMethod::Closed => vec![("closed", three_var::enumerate_closed)],
        SolveMethod::Exhaustive => vec![("exhaustive", three_var::enumerate_exhaustive)],
        SolveMethod::All => vec![
            ("closed", three_var::enumerate_closed),
            ("exhaustive", three_var::enumerate_exhaustive),
        ],
    };
    let mut methods = Vec::new();
    let mut lists = Vec::new();
    for (name, f) in runs {
        let start = Instant::now();
        match f(&inst) {
            Ok(list) => {
                methods.push(MethodResult {
                    method: name.into(),
                    count: list.len() as u128,
                    micros: start.elapsed().as_micros() as u64,
                });
                lists.push(list);
            }
            Err(e) => return Outcome::error(&e),
        }
    }
    let agree = lists.windows(2).all(|w| w[0] == w[1]);
    let solutions = lists.swap_remove(0);
    let report = SolveReport {
        instance: inst,
        count: solutions.len() as u128,
        methods,
        agree,
        solutions,
    };
    let stdout = render(&report, format);
    if agree {
        Outcome::ok(stdout)
    } else {
        Outcome {
            code: EXIT_DISAGREE,
            stdout,
            stderr: disagreement(&report.methods),
        }
    }
}

fn two(a: i64, b: i64, m: i64, format: Format) -> Outcome {
    let eq = match TwoVarEquation::new(a, b, m) {
        Ok(eq) => eq,
        Err(e) => return Outcome::error(&e),
    };
    let solutions = two_var::enumerate_nonneg(&eq);
    let count = solutions.len() as u128;
    let gcd = frobenius3::arith::gcd(a as i128, b as i128) as i64;
    let (binner, table_count) = if gcd == 1 {
        match (two_var::count_binner(&eq), two_var::count_bcs_table(&eq)) {
            (Ok((_, data)), Ok(table)) => (Some(data), Some(table)),
            (Err(e), _) | (_, Err(e)) => return Outcome::error(&e),
        }
    } else {
        (None, None)
    };
    let agree =
        binner.is_none_or(|d| d.family_size() == count) && table_count.is_none_or(|t| t == count);
    let report = TwoReport {
        a,
        b,
        m,
        gcd,
        count,
        binner,
        table_count,
        first_nonneg: two_var::first_nonneg(&eq).ok(),
        agree,
        solutions,
    };
    let stdout = render(&report, format);
    if agree {
        Outcome::ok(stdout)
    } else {
        Outcome {
            code: EXIT_DISAGREE,
            stdout,
            stderr: format!(
                "error: methods disagree: window={count} binner={:?} table={:?}\n",
                binner.map(|d| d.family_size()),
                table_count
            ),
        }
    }
}

fn sweep(grid: SweepGrid, budgets: &Budgets, format: Format) -> Outcome {
    if [grid.p_max, grid.q_max, grid.l_max, grid.n_max]
        .iter()
        .any(|&v| v < 0)
    {
        return Outcome::error(&Error::InvalidInput(
            "grid bounds must be nonnegative".into(),
        ));
    }
    match reduction::conjecture_sweep(
        grid.p_max,
        grid.q_max,
        grid.l_max,
        grid.n_max,
        budgets.search_triples,
    ) {
        Ok(report) => Outcome::ok(render(&SweepOutput { grid, report }, format)),
        Err(e) => Outcome::error(&e),
    }
}

pub fn dispatch(cli: Cli) -> Outcome {
    let format = cli.format.unwrap_or(match cli.command {
        Command::Bench { .. } => Format::Csv,
        _ => Format::Json,
    });
    let budgets = cli.budget.map_or_else(Budgets::default, Budgets::uniform);
    match cli.command {
        Command::Count { instance, method } => count(&instance, method, &budgets, format),
        Command::Solve { instance, method } => solve(&instance, method, format),
        Command::Two { a, b, m } => two(a, b, m, format),
        Command::Mcnugget { n } => {
            if n < 0 {
                return Outcome::error(&Error::InvalidInput(format!(
                    "n must be nonnegative, got {n}"
                )));
            }
            let report = McNuggetReport {
                n,
                count: three_var::mcnugget_count(n as u64),
            };
            Outcome::ok(render(&report, format))
        }
        Command::Frobenius { a, b } => match two_var::frobenius_two(a, b) {
            Ok(pair) => Outcome::ok(render(&FrobeniusReport::new(a, b, pair), format)),
            Err(e) => Outcome::error(&e),
        },
        Command::Reduce { instance: args } => {
            let result = instance(&args).and_then(|inst| {
                Ok(ReduceReport {
                    instance: inst,
                    boundary: reduction::boundary_sets(&inst)?,
                    completion: reduction::heuristic_complete(&inst)?,
                })
            });
            match result {
                Ok(report) => Outcome::ok(render(&report, format)),
                Err(e) => Outcome::error(&e),
            }
        }
        Command::Conjecture { instance: args } => {
            match instance(&args)
                .and_then(|inst| reduction::conjecture_check_within(&inst, budgets.search_triples))
            {
                Ok(report) => Outcome::ok(render(&report, format)),
                Err(e) => Outcome::error(&e),
            }
        }
        Command::Sweep {
            p_max,
            q_max,
            l_max,
            n_max,
        } => sweep(
            SweepGrid {
                p_max,
                q_max,
                l_max,
                n_max,
            },
            &budgets,
            format,
        ),
        Command::Bench { p, q, l, n, reps } => {
            let budgets = cli
                .budget
                .map_or_else(bench::default_budgets, Budgets::uniform);
            bench::run(&bench::Grid { p, q, l, n }, reps, &budgets, format)
        }
    }
}

/// Parse `args` (including the program name) and run the subcommand.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => dispatch(cli),
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                Outcome {
                    code: EXIT_INVALID,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                // --help and --version
                Outcome::ok(rendered)
            }
        }
    }
}
