use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use negcat_cli::diagram::{DiagramKind, Format};
use negcat_cli::error::exit;
use negcat_cli::selftest::{selftest, SUITES};
use negcat_cli::{load, render_diagram, run_scenario, CliError, Report, Result, Scenario};
use negcat_core::{Arc, CatParams, SmsCandidate};

#[derive(Parser)]
#[command(
    name = "negcat",
    version,
    about = "Negative cluster categories of type A: systems, hearts and torsion triples"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the tasks of a scenario file and print a JSON report.
    Run {
        scenario: PathBuf,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw the polygon model or the AR quiver.
    Diagram {
        #[arg(long, default_value = "polygon")]
        kind: DiagramKind,
        #[arg(long, default_value = "svg")]
        format: Format,
        /// Scenario providing parameters and systems.
        #[arg(long)]
        scenario: Option<PathBuf>,
        /// Parameters `w,n` when no scenario is given.
        #[arg(long, value_parser = parse_pair)]
        params: Option<(usize, usize)>,
        /// System of the scenario to draw on the polygon.
        #[arg(long)]
        sms: Option<String>,
        /// Arcs to draw, e.g. `1-7,0-13`.
        #[arg(long)]
        arcs: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the built-in invariant suites.
    Selftest {
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
        suite: Option<String>,
        #[arg(long, value_parser = parse_pair)]
        params: Option<(usize, usize)>,
    },
}

fn parse_pair(s: &str) -> std::result::Result<(usize, usize), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or("expected two numbers separated by ','")?;
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("'{t}': {e}"));
    Ok((num(a)?, num(b)?))
}

fn parse_arcs(s: &str) -> Result<Vec<Arc>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            let pair = t
                .split_once('-')
                .and_then(|(a, b)| Some((a.trim().parse().ok()?, b.trim().parse().ok()?)));
            pair.map(|(a, b)| Arc::new(a, b))
                .ok_or_else(|| CliError::Input(format!("bad arc '{t}' (expected a-b)")))
        })
        .collect()
}

fn write_or_print(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Write {
            path: path.to_owned(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit(report: &Report, out: Option<&Path>) -> Result<i32> {
    write_or_print(&report.to_json(), out)?;
    Ok(report.exit_code())
}

#[allow(clippy::too_many_arguments)]
fn diagram(
    kind: DiagramKind,
    format: Format,
    scenario: Option<&Path>,
    params: Option<(usize, usize)>,
    sms: Option<String>,
    arcs: Option<String>,
    out: Option<&Path>,
) -> Result<i32> {
    let mut sc = match (scenario, params) {
        (Some(_), Some(_)) => {
            return Err(CliError::Input("give either --scenario or --params".into()))
        }
        (Some(path), None) => load(path)?,
        (None, Some((w, n))) => Scenario {
            params: CatParams::new(w, n)?,
            sms: BTreeMap::new(),
            tasks: Vec::new(),
        },
        (None, None) => {
            return Err(CliError::Input(
                "diagram needs --scenario or --params".into(),
            ))
        }
    };
    let mut name = sms;
    if let Some(name) = &name {
        if !sc.sms.contains_key(name) {
            return Err(CliError::Input(format!("no system named '{name}'")));
        }
    }
    if let Some(text) = arcs {
        let arcs = parse_arcs(&text)?;
        for &a in &arcs {
            sc.params.check(a)?;
        }
        sc.sms
            .insert("--arcs".into(), SmsCandidate::new(&sc.params, arcs)?);
        name = Some("--arcs".into());
    }
    if kind == DiagramKind::Arquiver && !(sc.sms.contains_key("A") && sc.sms.contains_key("B")) {
        return Err(CliError::Input(
            "the AR quiver needs a scenario with systems A and B".into(),
        ));
    }
    let text = render_diagram(&sc, kind, format, name.as_deref())?;
    write_or_print(&text, out)?;
    Ok(exit::PASS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Run { scenario, out } => {
            load(&scenario).and_then(|s| emit(&run_scenario(&s), out.as_deref()))
        }
        Command::Diagram {
            kind,
            format,
            scenario,
            params,
            sms,
            arcs,
            out,
        } => diagram(
            kind,
            format,
            scenario.as_deref(),
            params,
            sms,
            arcs,
            out.as_deref(),
        ),
        Command::Selftest { suite, params } => selftest(suite.as_deref(), params)
            .map_err(CliError::Input)
            .and_then(|r| emit(&r, None)),
    };
    let code = result.unwrap_or_else(|e| {
        eprintln!("negcat: {e}");
        e.exit_code()
    });
    ExitCode::from(code as u8)
}
