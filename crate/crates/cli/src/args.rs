use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

/// Exact counts, asymptotics and identity checks for p-core partitions.
#[derive(Debug, Parser)]
#[command(name = "pcore", version)]
pub struct Cli {
    /// Decimal digits of working precision (at least 20).
    #[arg(long, global = true, env = "PCORE_PREC", default_value_t = 60)]
    pub prec: u32,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Append-only JSON-lines file of previously computed reports.
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ApproxMethodArg {
    Almkvist,
    Garvan,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FftRow {
    All,
    Bernoulli,
    Legendre,
    Zeta,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Number of p-cores of n.
    Count {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        n: usize,
    },
    /// Coefficients a_p(0), ..., a_p(max_n).
    Series {
        #[arg(long)]
        p: u32,
        #[arg(long = "max-n")]
        max_n: usize,
    },
    /// Asymptotic estimate of a_p(n).
    Approx {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: i64,
        #[arg(long, value_enum)]
        method: ApproxMethodArg,
        /// Number of singular-point terms (almkvist only; default 50).
        #[arg(long)]
        kmax: Option<u64>,
    },
    /// The constant c_p by one formula (i..vi) or all of them.
    Cp {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value = "all")]
        variant: String,
    },
    /// The cotangent sum S(r,p) against the Bernoulli sum T(r,p).
    Trig {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        p: u64,
    },
    /// Class number h(-p) by one method or all three.
    Classnum {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value = "all")]
        method: String,
    },
    /// Check an identity over a parameter range.
    Verify {
        #[command(subcommand)]
        target: Verify,
    },
}

#[derive(Debug, Subcommand)]
pub enum Verify {
    /// A_p(k,n) = (k|p) c_k(n + (p²-1)/24).
    Conjecture1 {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 30)]
        kmax: u64,
        #[arg(long, default_value_t = 30)]
        nmax: u64,
    },
    /// Integrality and parity of p·s(ph,k) - s(h,k) - (p²-1)h/(12k).
    Conjecture2 {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 60)]
        kmax: u64,
    },
    /// Twisted Ramanujan-sum series against its L-value closed form.
    Prop21 {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 10_000)]
        kmax: u64,
    },
    /// Modular transformation of the p-core generating function.
    Theorem33 {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        h: u64,
        #[arg(long)]
        k: u64,
        /// Positive rational, as a/b or a terminating decimal.
        #[arg(long, default_value = "1/2")]
        t: String,
        /// Product factors on each side.
        #[arg(long, default_value_t = 400)]
        factors: usize,
    },
    /// Finite Fourier transform table rows.
    Fft {
        #[arg(long, value_enum, default_value_t = FftRow::All)]
        row: FftRow,
        #[arg(long)]
        k: Option<u64>,
        #[arg(long)]
        r: Option<u32>,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        s: Option<u32>,
    },
    /// Cotangent sum over squares against its Bernoulli form.
    Intro {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        p: u64,
    },
    /// Divisibility and integrality of T(r,p) for r up to rmax.
    Remark31 {
        #[arg(long)]
        p: u64,
        /// Defaults to C(p,2).
        #[arg(long)]
        rmax: Option<u64>,
    },
}
