use std::process::ExitCode;

use clap::Parser;
use deephole_cli::{run, write_report, ExperimentConfig};

fn main() -> ExitCode {
    let config = match ExperimentConfig::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let result = run(&config).and_then(|report| {
        write_report(&report, config.format, config.out.as_deref())?;
        Ok(report.all_hold())
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("deephole: a checked result does not hold; see \"checks\" in the report");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("deephole: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
