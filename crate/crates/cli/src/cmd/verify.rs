use std::collections::BTreeMap;

use chowforms::chowlab::{
    ideal_claim_hilbert_check, verify_chow_degree, verify_chow_tangent, verify_terracini, VerificationReport,
};
use chowforms::decomp::{verify_roundtrip, verify_smoothness_case};
use chowforms::exactalg::Field;
use chowforms::Error;
use clap::ValueEnum;
use serde_json::{json, Value};

use super::{with_field, Outcome};
use crate::config::{Failure, Output, RunConfig};
use crate::output::envelope;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    ChowTangent,
    IdealClaim,
    Terracini,
    ChowDegree,
    Smoothness,
    Roundtrip,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Grid {
    Small,
}

#[derive(Debug, clap::Args)]
pub struct Args {
    suite: Suite,

    #[arg(long)]
    n: Option<usize>,

    #[arg(long)]
    d: Option<usize>,

    #[arg(long)]
    s: Option<usize>,

    /// Run the suite over its built-in parameter grid.
    #[arg(long, value_enum)]
    grid: Option<Grid>,
}

#[derive(Debug, Clone, Copy)]
enum Cell {
    ChowTangent { n: usize, s: usize },
    IdealClaim { n: usize, s: usize },
    Terracini { n: usize, d: usize },
    ChowDegree { n: usize, s: usize },
    Smoothness { n: usize, d: usize },
    Roundtrip { n: usize, d: usize },
}

impl Cell {
    fn name(self) -> &'static str {
        match self {
            Cell::ChowTangent { .. } => "chow-tangent",
            Cell::IdealClaim { .. } => "ideal-claim",
            Cell::Terracini { .. } => "terracini",
            Cell::ChowDegree { .. } => "chow-degree",
            Cell::Smoothness { .. } => "smoothness",
            Cell::Roundtrip { .. } => "roundtrip",
        }
    }

    fn params(self) -> BTreeMap<&'static str, usize> {
        let pairs = match self {
            Cell::ChowTangent { n, s } | Cell::IdealClaim { n, s } | Cell::ChowDegree { n, s } => [("n", n), ("s", s)],
            Cell::Terracini { n, d } | Cell::Smoothness { n, d } | Cell::Roundtrip { n, d } => [("n", n), ("d", d)],
        };
        pairs.into_iter().collect()
    }

    fn run<F: Field>(self, field: &F, config: &RunConfig) -> chowforms::Result<VerificationReport> {
        let (seed, retries) = (config.seed, config.retries);
        match self {
            Cell::ChowTangent { n, s } => verify_chow_tangent(field, n, s, seed, retries),
            Cell::IdealClaim { n, s } => ideal_claim_hilbert_check(field, n, s, s - 1..=s + 2, seed, retries),
            Cell::Terracini { n, d } => verify_terracini(field, n, d, seed, retries),
            Cell::ChowDegree { n, s } => verify_chow_degree(field, n, s, seed, retries, config.enumeration_guard),
            Cell::Smoothness { n, d } => verify_smoothness_case(field, n, d, seed, retries),
            Cell::Roundtrip { n, d } => verify_roundtrip(field, n, d, seed, retries),
        }
    }
}

fn small_grid(suite: Suite) -> Vec<Cell> {
    let pairs = |a: std::ops::RangeInclusive<usize>, b: std::ops::RangeInclusive<usize>| {
        a.flat_map(move |x| b.clone().map(move |y| (x, y))).collect::<Vec<_>>()
    };
    match suite {
        Suite::ChowTangent => pairs(2..=4, 2..=4).into_iter().map(|(n, s)| Cell::ChowTangent { n, s }).collect(),
        Suite::IdealClaim => pairs(2..=3, 3..=4).into_iter().map(|(n, s)| Cell::IdealClaim { n, s }).collect(),
        Suite::Terracini => pairs(1..=3, 1..=8).into_iter().map(|(n, d)| Cell::Terracini { n, d }).collect(),
        Suite::ChowDegree => [(2, 2), (2, 3), (2, 4), (3, 2)]
            .into_iter()
            .map(|(n, s)| Cell::ChowDegree { n, s })
            .collect(),
        Suite::Smoothness => [(2, 5), (2, 8)].into_iter().map(|(n, d)| Cell::Smoothness { n, d }).collect(),
        Suite::Roundtrip => pairs(1..=3, 1..=6).into_iter().map(|(n, d)| Cell::Roundtrip { n, d }).collect(),
        Suite::All => [
            Suite::ChowTangent,
            Suite::IdealClaim,
            Suite::Terracini,
            Suite::ChowDegree,
            Suite::Smoothness,
            Suite::Roundtrip,
        ]
        .into_iter()
        .flat_map(small_grid)
        .collect(),
    }
}

fn single_cell(args: &Args) -> Result<Cell, Failure> {
    let need = |v: Option<usize>, flag: &str| {
        v.ok_or_else(|| Failure::Usage(format!("suite {:?} needs --{flag} (or --grid small)", args.suite)))
    };
    Ok(match args.suite {
        Suite::ChowTangent => Cell::ChowTangent { n: need(args.n, "n")?, s: need(args.s, "s")? },
        Suite::IdealClaim => Cell::IdealClaim { n: need(args.n, "n")?, s: need(args.s, "s")? },
        Suite::ChowDegree => Cell::ChowDegree { n: need(args.n, "n")?, s: need(args.s, "s")? },
        Suite::Terracini => Cell::Terracini { n: need(args.n, "n")?, d: need(args.d, "d")? },
        Suite::Smoothness => Cell::Smoothness { n: need(args.n, "n")?, d: need(args.d, "d")? },
        Suite::Roundtrip => Cell::Roundtrip { n: need(args.n, "n")?, d: need(args.d, "d")? },
        Suite::All => unreachable!("handled by the grid"),
    })
}

fn text_line(report: &VerificationReport) -> String {
    let params: Vec<String> = report.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    let values: Vec<String> = report
        .computed
        .iter()
        .map(|(k, v)| format!("{k}={v}/{}", report.expected[k]))
        .collect();
    format!(
        "{} {} {} seed={} retries={} {}\n",
        if report.pass { "PASS" } else { "FAIL" },
        report.oracle_name,
        params.join(" "),
        report.seed,
        report.retries_used,
        values.join(" ")
    )
}

pub fn run(config: &RunConfig, args: &Args) -> Result<Outcome, Failure> {
    let cells = if args.grid.is_some() || args.suite == Suite::All {
        small_grid(args.suite)
    } else {
        vec![single_cell(args)?]
    };
    let mut results: Vec<Value> = Vec::with_capacity(cells.len());
    let mut lines = String::new();
    let mut ok = true;
    for cell in cells {
        let outcome = with_field!(config.field, |f| cell.run(f, config));
        match outcome {
            Ok(report) => {
                ok &= report.pass;
                lines.push_str(&text_line(&report));
                results.push(serde_json::to_value(&report).expect("serializable"));
            }
            Err(e @ Error::GenericityFailure { .. }) => {
                ok = false;
                lines.push_str(&format!("FAIL {} {:?} seed={} error: {e}\n", cell.name(), cell.params(), config.seed));
                results.push(json!({
                    "oracle_name": cell.name(),
                    "params": cell.params(),
                    "seed": config.seed,
                    "field": config.field,
                    "pass": false,
                    "error": e.to_string(),
                }));
            }
            Err(e) => return Err(e.into()),
        }
    }
    let text = match config.output {
        Output::Json => envelope("verify", config, &results),
        Output::Text => lines,
        Output::Csv => return Err(Failure::Usage("verify has no CSV output".into())),
    };
    Ok(Outcome { text, ok })
}
