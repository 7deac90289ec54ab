//! Command-line front end: evaluates relaxation laws, estimates crossing
//! probabilities, runs verification suites and writes comparison tables.

pub mod args;
pub mod commands;
pub mod config;
pub mod error;
pub mod table;

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use args::{Cli, Command, Format};
use frax_core::relaxation::Regime;

pub use error::{CliError, CliResult};
pub use table::{read_csv, CsvData, Table};

fn emit(table: &Table, format: Format, out: Option<&Path>) -> CliResult<()> {
    match out {
        Some(p) => {
            let f = File::create(p).map_err(|e| CliError::io(p, e))?;
            let mut w = BufWriter::new(f);
            table.write(format, &mut w)?;
            w.flush().map_err(|e| CliError::io(p, e))
        }
        None => table.write(format, std::io::stdout().lock()),
    }
}

pub fn run(cli: &Cli) -> CliResult<()> {
    match &cli.command {
        Command::Eval(a) => emit(&commands::eval(a)?, a.output.format, a.output.out.as_deref()),
        Command::Simulate(a) => {
            let (table, strict) = commands::simulate(a)?;
            emit(&table, a.output.format, a.output.out.as_deref())?;
            strict.map_or(Ok(()), Err)
        }
        Command::Verify(a) => {
            let report = commands::verify(a.suite);
            let text = serde_json::to_string_pretty(&report).expect("report serializes");
            match &a.out {
                Some(p) => std::fs::write(p, text + "\n").map_err(|e| CliError::io(p, e))?,
                None => println!("{text}"),
            }
            if report.passed {
                Ok(())
            } else {
                let bad: Vec<_> = report.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
                Err(CliError::VerifyFailed(bad.join("; ")))
            }
        }
        Command::Tables(a) => {
            std::fs::create_dir_all(&a.out).map_err(|e| CliError::io(&a.out, e))?;
            for (regime, file) in [(Regime::SmallT, "table1_small_t.csv"), (Regime::LargeT, "table2_large_t.csv")] {
                let p = a.out.join(file);
                emit(&commands::comparison_table(regime)?, Format::Csv, Some(&p))?;
            }
            Ok(())
        }
    }
}
