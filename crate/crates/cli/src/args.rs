use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "frobenius3",
    version,
    about = "Count and enumerate nonnegative solutions of px + qy + lz = n"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format (default: json, or csv for `bench`)
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Iteration cap for whichever budgeted computation the subcommand runs
    #[arg(long, global = true)]
    pub budget: Option<u64>,

    /// Reserved; every algorithm here is deterministic
    #[arg(long, global = true)]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Residue,
    Closed,
    Exhaustive,
    Series,
    Brute,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SolveMethod {
    Closed,
    Exhaustive,
    All,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct InstanceArgs {
    /// Coefficient of x
    #[arg(short = 'p', allow_negative_numbers = true)]
    pub p: i64,
    /// Coefficient of y
    #[arg(short = 'q', allow_negative_numbers = true)]
    pub q: i64,
    /// Coefficient of z
    #[arg(short = 'l', allow_negative_numbers = true)]
    pub l: i64,
    /// Right-hand side
    #[arg(short = 'n', allow_negative_numbers = true)]
    pub n: i64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count solutions with one method or cross-check all of them
    Count {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long, value_enum, default_value = "closed")]
        method: Method,
    },
    /// List every solution
    Solve {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long, value_enum, default_value = "closed")]
        method: SolveMethod,
    },
    /// Solve the two-variable equation a·x + b·y = m
    Two {
        #[arg(short = 'a', allow_negative_numbers = true)]
        a: i64,
        #[arg(short = 'b', allow_negative_numbers = true)]
        b: i64,
        #[arg(short = 'm', allow_negative_numbers = true)]
        m: i64,
    },
    /// Count solutions of 6x + 9y + 20z = n
    Mcnugget {
        #[arg(short = 'n', allow_negative_numbers = true)]
        n: i64,
    },
    /// Frobenius number and non-representable count of a coprime pair
    Frobenius {
        #[arg(short = 'a', allow_negative_numbers = true)]
        a: i64,
        #[arg(short = 'b', allow_negative_numbers = true)]
        b: i64,
    },
    /// Boundary (face) solution sets and the four-step completion
    Reduce {
        #[command(flatten)]
        instance: InstanceArgs,
    },
    /// Search s_a - s_b + s_c witnesses for every solution
    Conjecture {
        #[command(flatten)]
        instance: InstanceArgs,
    },
    /// Run the witness search over a grid of instances p <= q <= l
    Sweep {
        #[arg(long)]
        p_max: i64,
        #[arg(long)]
        q_max: i64,
        #[arg(long)]
        l_max: i64,
        #[arg(long)]
        n_max: i64,
    },
    /// Time every counting method over a grid
    Bench {
        #[arg(short = 'p', value_delimiter = ',', num_args = 0..)]
        p: Vec<i64>,
        #[arg(short = 'q', value_delimiter = ',', num_args = 0..)]
        q: Vec<i64>,
        #[arg(short = 'l', value_delimiter = ',', num_args = 0..)]
        l: Vec<i64>,
        #[arg(short = 'n', value_delimiter = ',', num_args = 0..)]
        n: Vec<i64>,
        #[arg(long, default_value_t = 3)]
        reps: u32,
    },
}
