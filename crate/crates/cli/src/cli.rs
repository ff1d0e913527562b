use clap::{Parser, Subcommand};

/// Simsun permutations, 1-2 trees and Motzkin paths: maps, predicates,
/// enumeration and exhaustive verification.
#[derive(Debug, Parser)]
#[command(name = "simsun", version)]
pub struct Cli {
    /// Structured output instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Apply a named map to one object.
    Map {
        /// One of: phi, phi-inv, chi, chi-inv, psi, psi-inv, gamma, rho,
        /// rho-inv, varrho, zeta, rs213-to-motzkin, rs231-to-motzkin,
        /// motzkin-to-rs213, motzkin-to-rs231.
        name: String,
        /// The object in its text format.
        input: String,
    },

    /// Test a predicate. Exit status 0 when it holds, 1 when it does not,
    /// 2 on error.
    Check {
        /// One of: simsun, double-simsun, avoids, every-4132-in-51342,
        /// rtl-increasing, dd-free, in-r, in-q, in-w.
        predicate: String,
        input: String,
        /// Pattern for the `avoids` predicate, e.g. 231.
        #[arg(long)]
        pattern: Option<String>,
    },

    /// List a class of permutations in lexicographic order.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// all, simsun or double-simsun.
        #[arg(long, default_value = "all")]
        class: String,
        /// Comma-separated patterns to avoid, e.g. 132,213.
        #[arg(long, value_delimiter = ',')]
        avoid: Vec<String>,
        /// Require the inverse to avoid the patterns as well.
        #[arg(long)]
        inverse_avoid: bool,
        /// Stop after this many permutations.
        #[arg(long)]
        limit: Option<usize>,
        /// Print only the number of permutations.
        #[arg(long)]
        count_only: bool,
    },

    /// Run the exhaustive checks: table1, all, or one claim id.
    Verify {
        suite: String,
        #[arg(long, default_value_t = 9)]
        nmax: usize,
        /// Worker threads; 0 uses one per core.
        #[arg(long, default_value_t = 0)]
        workers: usize,
        /// Directory for the JSON and TSV reports.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },

    /// Print a sequence as `n<TAB>value` lines.
    Sequence {
        /// euler, motzkin, catalan, secondary, fibonacci, pow2 or
        /// double-simsun.
        name: String,
        #[arg(long, default_value_t = 10)]
        nmax: usize,
        #[arg(long, default_value_t = 0)]
        workers: usize,
    },

    /// List the registered claim ids.
    Claims,
}
