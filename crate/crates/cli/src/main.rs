//! `modnet`: command-line front end of the modnet library.
//!
//! Every command prints one report (JSON by default) wrapped in an envelope
//! with the command name, crate version, inputs, tolerance, seed and overall
//! verdict. Exit codes: 0 when every check passes, 1 when a mathematical check
//! fails, 2 on unreadable input or bad usage.

mod args;
mod commands;
mod error;
mod output;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command, LorentzCommand, NetCommand, OrbitCommand, SplitCommand, SpinCommand, SubspaceCommand};
use commands::{geometry, net, spin, split, subspace, suite};
use error::CliError;
use output::{render, write_output, Rendered, RunConfig};

const EXIT_FAIL: u8 = 1;
const EXIT_INPUT: u8 = 2;

fn config(cli: &Cli, command: &str, inputs: Vec<String>) -> RunConfig {
    RunConfig {
        command: command.to_string(),
        inputs,
        tol: cli.global.tol,
        seed: cli.global.seed,
        format: cli.global.format,
    }
}

fn path(p: &std::path::Path) -> String {
    p.display().to_string()
}

fn dispatch(cli: &Cli) -> Result<Rendered, CliError> {
    let tol = cli.global.tol;
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(CliError::Input(format!("--tol must be a positive finite number, got {tol}")));
    }
    match &cli.command {
        Command::Subspace(cmd) => match cmd {
            SubspaceCommand::Check(a) => {
                render(&config(cli, "subspace check", vec![path(&a.input)]), subspace::check(&a.input, tol)?)
            }
            SubspaceCommand::Modular(a) => {
                render(&config(cli, "subspace modular", vec![path(&a.input)]), subspace::modular(&a.input, tol)?)
            }
            SubspaceCommand::Complement(a) => render(
                &config(cli, "subspace complement", vec![path(&a.input)]),
                subspace::complement(&a.input, tol)?,
            ),
        },
        Command::Lorentz(LorentzCommand::Cover(a)) => {
            let inputs = a.input.iter().map(|p| path(p)).collect();
            render(&config(cli, "lorentz cover", inputs), geometry::cover(a, tol)?)
        }
        Command::Orbit(OrbitCommand::Reflect(a)) => {
            render(&config(cli, "orbit reflect", Vec::new()), geometry::reflect(a, tol)?)
        }
        Command::Mc(a) => render(
            &config(cli, "mc", vec![path(&a.model)]),
            geometry::mc(&a.model, &a.certificate, tol)?,
        ),
        Command::Spin(SpinCommand::Decompose(a)) => {
            render(&config(cli, "spin decompose", Vec::new()), spin::decompose(a)?)
        }
        Command::Net(NetCommand::Verify(a)) => render(
            &config(cli, "net verify", vec![path(&a.spec)]),
            net::verify(&a.spec, a.checks.as_deref(), tol)?,
        ),
        Command::Net(NetCommand::DemoCounterexample(a)) => {
            let inputs = a.spec.iter().map(|p| path(p)).collect();
            render(
                &config(cli, "net demo-counterexample", inputs),
                net::demo(a.omega, a.spec.as_deref(), tol)?,
            )
        }
        Command::Split(SplitCommand::Trace(a)) => {
            render(&config(cli, "split trace", vec![path(&a.spectrum)]), split::trace(&a.spectrum)?)
        }
        Command::Split(SplitCommand::Growth(a)) => {
            render(&config(cli, "split growth", vec![path(&a.surrogate)]), split::growth(a)?)
        }
        Command::Suite(a) => render(
            &config(cli, "suite", Vec::new()),
            suite::suite(a.cases, cli.global.seed, tol)?,
        ),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT } else { 0 });
        }
    };
    let rendered = match dispatch(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("modnet: {e}");
            return ExitCode::from(EXIT_INPUT);
        }
    };
    if let Err(e) = write_output(&rendered.text, cli.global.out.as_deref()) {
        eprintln!("modnet: {e}");
        return ExitCode::from(EXIT_INPUT);
    }
    for reason in &rendered.failures {
        eprintln!("modnet: check failed: {reason}");
    }
    if rendered.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}
