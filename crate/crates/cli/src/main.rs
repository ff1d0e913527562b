mod cli;
mod cmd;
mod error;

use std::io::{BufWriter, Write};

use clap::Parser;

use cli::{Cli, Command};
use error::CliError;

fn main() {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = dispatch(&cli, &mut out);
    let flushed = out.flush();
    match result {
        Ok(code) => {
            if let Err(e) = flushed {
                eprintln!("error: {e}");
                std::process::exit(2);
            }
            std::process::exit(code);
        }
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(e.exit_code());
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    match &cli.command {
        Command::Map { name, input } => cmd::map(name, input, cli.json, out),
        Command::Check {
            predicate,
            input,
            pattern,
        } => cmd::check(predicate, input, pattern.as_deref(), cli.json, out),
        Command::Enumerate {
            n,
            class,
            avoid,
            inverse_avoid,
            limit,
            count_only,
        } => cmd::enumerate(
            &cmd::EnumerateArgs {
                n: *n,
                class,
                avoid,
                inverse_avoid: *inverse_avoid,
                limit: *limit,
                count_only: *count_only,
            },
            cli.json,
            out,
        ),
        Command::Verify {
            suite,
            nmax,
            workers,
            out: dir,
        } => cmd::verify(suite, *nmax, *workers, dir.as_deref(), cli.json, out),
        Command::Sequence {
            name,
            nmax,
            workers,
        } => cmd::sequence(name, *nmax, *workers, cli.json, out),
        Command::Claims => cmd::claims(cli.json, out),
    }
}
