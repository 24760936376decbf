use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "nschur", version, about = "Vandermonde/Schur polynomials and Newton power sums over finite fields")]
#[command(args_override_self = true)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Largest field size enumerated exhaustively. Each command has its own
    /// default when unset.
    #[arg(long, env = "NSCHUR_CEILING", global = true, value_parser = parse_ceiling)]
    pub ceiling: Option<u64>,

    /// Seed for randomized sampling.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,

    /// Treat skipped points as failures.
    #[arg(long, global = true)]
    pub strict: bool,

    /// Worker threads for sweeps (0 = all cores).
    #[arg(long, default_value_t = 0, global = true)]
    pub jobs: usize,

    /// TOML file whose keys are flag names; command-line flags win.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Tsv,
}

fn parse_ceiling(s: &str) -> Result<u64, String> {
    let n: u64 = s.parse().map_err(|e| format!("{e}"))?;
    if n < 2 {
        return Err("ceiling must be at least 2".into());
    }
    Ok(n)
}

/// Coefficient field: the rationals for `--char 0`, else `F_{p^r}`.
#[derive(Debug, Clone, Args)]
pub struct FieldArgs {
    #[arg(long = "char", default_value_t = 0)]
    pub characteristic: u64,
    #[arg(long, default_value_t = 1)]
    pub r: u32,
}

#[derive(Debug, Clone, Args)]
pub struct PairArgs {
    #[arg(long = "A")]
    pub a: u32,
    #[arg(long = "B")]
    pub b: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Eq1,
    Eq2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Formula,
    Oracle,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum IdentityModeArg {
    Direct,
    Shortcut,
    Both,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print T_{A,B} = R_{A,B} / V_d.
    #[command(args_override_self = true)]
    Tpoly {
        #[command(flatten)]
        pair: PairArgs,
        #[command(flatten)]
        field: FieldArgs,
    },
    /// Print the determinant R_{A,B}.
    #[command(args_override_self = true)]
    Rpoly {
        #[command(flatten)]
        pair: PairArgs,
        #[command(flatten)]
        field: FieldArgs,
    },
    /// Print the Schur polynomial of a partition via the bialternant.
    #[command(args_override_self = true)]
    Schur {
        /// Three non-increasing parts, e.g. `2,1,0`.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        parts: Vec<u32>,
        #[arg(long, default_value_t = 1)]
        d: u32,
        #[command(flatten)]
        field: FieldArgs,
    },
    /// Linear factors Z - αX - βY of T_{A,B} over F_{p^r}.
    #[command(args_override_self = true)]
    Factor {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        r: u32,
    },
    /// Signature witnesses for I_{A,B}.
    #[command(args_override_self = true)]
    Signature {
        #[command(flatten)]
        pair: PairArgs,
        #[command(flatten)]
        field: FieldArgs,
    },
    /// Check a closed-form factorization of T over F_{p^r}.
    #[command(name = "verify-fact", args_override_self = true)]
    VerifyFact {
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        r: u32,
    },
    /// Build the alternative pair z, w and test z^m + w^m = x^m + y^m.
    #[command(args_override_self = true)]
    Counterexample {
        #[arg(long)]
        p: u64,
        /// Exponents to test; defaults to 1 and p + 1.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        m: Vec<u64>,
        #[arg(long, value_enum, default_value_t = IdentityModeArg::Direct)]
        mode: IdentityModeArg,
    },
    /// Degree [S : N_{p^r+1}, N_{p^s+1}, N_1] by formula and/or oracle.
    #[command(args_override_self = true)]
    Degree {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        s: u32,
        #[arg(long, value_enum, default_value_t = ModeArg::Both)]
        mode: ModeArg,
    },
    /// Run a verification over a parameter grid.
    #[command(args_override_self = true)]
    Sweep {
        #[command(subcommand)]
        target: SweepTarget,
    },
    /// Structural identities of T for 2 <= k <= k-max.
    #[command(args_override_self = true)]
    Identity {
        #[arg(long, default_value_t = 10)]
        k_max: u32,
        /// Random points at which T·V = R is also evaluated.
        #[arg(long, default_value_t = 0)]
        samples: u32,
        #[command(flatten)]
        field: FieldArgs,
    },
}

/// Ranges are `a..b` (inclusive), `a,b,c` or a single value.
#[derive(Debug, Subcommand)]
pub enum SweepTarget {
    #[command(name = "verify-fact", args_override_self = true)]
    VerifyFact {
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long)]
        p: String,
        #[arg(long)]
        r: String,
    },
    #[command(args_override_self = true)]
    Degree {
        #[arg(long)]
        p: String,
        #[arg(long)]
        r: String,
        /// Defaults to every 1 <= s < r.
        #[arg(long)]
        s: Option<String>,
        #[arg(long, value_enum, default_value_t = ModeArg::Both)]
        mode: ModeArg,
    },
    #[command(args_override_self = true)]
    Signature {
        #[arg(long = "A")]
        a: String,
        #[arg(long = "B")]
        b: String,
        #[command(flatten)]
        field: FieldArgs,
    },
    /// Eisenstein-like check of T_{p^r+1,1} against X - Y over F_p.
    #[command(args_override_self = true)]
    Eisenstein {
        #[arg(long)]
        p: String,
        #[arg(long)]
        r: String,
    },
}

/// Parses `a..b`, `a,b,c` or `a`.
pub fn parse_range(s: &str) -> Result<Vec<u64>, String> {
    let s = s.trim();
    if let Some((lo, hi)) = s.split_once("..") {
        let lo: u64 = lo.trim().parse().map_err(|_| format!("bad range {s:?}"))?;
        let hi: u64 = hi.trim().parse().map_err(|_| format!("bad range {s:?}"))?;
        return Ok((lo..=hi).collect());
    }
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse().map_err(|_| format!("bad value {t:?} in {s:?}")))
        .collect()
}
