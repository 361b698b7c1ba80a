mod args;
mod checks;
mod commands;
mod error;
mod output;

use std::process::ExitCode;

use clap::Parser;

use args::{CheckAction, Cli, Command, PlanAction, RootsysAction};
use error::CliError;
use output::Report;

/// Exit code when a check or the selftest exceeds its tolerance.
const EXIT_BREACH: u8 = 3;

fn run(cli: &Cli) -> Result<(Report, bool), CliError> {
    let g = &cli.global;
    let ok = |r: Report| Ok((r, true));
    match &cli.command {
        Command::Rootsys { action: RootsysAction::Info { diagram } } => ok(commands::rootsys_info(diagram)?),
        Command::Orbit { action } => ok(commands::orbit_cmd(action)?),
        Command::Eval(a) => ok(commands::eval_cmd(a)?),
        Command::Product(a) => ok(commands::product_cmd(a)?),
        Command::Branch(a) => ok(commands::branch_cmd(a)?),
        Command::Grid(a) => ok(commands::grid_cmd(a)?),
        Command::Transform(a) => ok(commands::transform_cmd(a)?),
        Command::Plan { action: PlanAction::Verify(a) } => ok(commands::plan_verify(a)?),
        Command::Check { action: CheckAction::Laplace(a) } => checks::check_laplace(a, g),
        Command::Check { action: CheckAction::Shift(a) } => checks::check_shift(a, g),
        Command::Check { action: CheckAction::Hermite(a) } => checks::check_hermite(a, g),
        Command::Selftest(a) => checks::selftest(a, g),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = run(&cli).and_then(|(report, pass)| {
        let text = report.render(cli.global.format)?;
        output::write_out(&text, cli.global.out.as_deref())?;
        Ok(pass)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_BREACH),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
