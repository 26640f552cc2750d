use std::ops::RangeInclusive;

use chowforms::formulas::{table, WaringProfile};

use super::{parse_range, Outcome};
use crate::config::{Failure, Output, RunConfig};
use crate::output::envelope;

#[derive(Debug, clap::Args)]
pub struct Args {
    /// Range of n, as a..b or a single value.
    #[arg(long, value_parser = parse_range)]
    n: RangeInclusive<u64>,

    /// Range of d, as a..b or a single value.
    #[arg(long, value_parser = parse_range)]
    d: RangeInclusive<u64>,

    /// Keep rows where VSH is zero-dimensional.
    #[arg(long)]
    zero_dim: bool,

    /// Keep rows where smin differs from the expected count.
    #[arg(long)]
    defective: bool,
}

pub fn run(config: &RunConfig, args: &Args) -> Result<Outcome, Failure> {
    let rows: Vec<WaringProfile> = table(args.n.clone(), args.d.clone())?
        .into_iter()
        .filter(|r| !args.zero_dim || r.vsh_dim == 0)
        .filter(|r| !args.defective || r.defective)
        .collect();
    let text = match config.output {
        Output::Json => {
            let results: Vec<_> = rows.iter().map(|r| serde_json::to_value(r).expect("serializable")).collect();
            envelope("formulas", config, &results)
        }
        Output::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["d", "n", "s", "degree"]).expect("in-memory write");
            for r in &rows {
                w.write_record([r.d.to_string(), r.n.to_string(), r.smin.to_string(), r.vsh_degree.to_string()])
                    .expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
        }
        Output::Text => {
            let mut out = format!(
                "{:>4} {:>4} {:>5} {:>5} {:>5} {:>10} {:>9} {:>7}  {}\n",
                "d", "n", "smin", "sexp", "sstar", "ah_rank", "defective", "vsh_dim", "vsh_degree"
            );
            for r in &rows {
                out.push_str(&format!(
                    "{:>4} {:>4} {:>5} {:>5} {:>5} {:>10} {:>9} {:>7}  {}\n",
                    r.d, r.n, r.smin, r.sexp, r.sstar, r.ah_rank, r.defective, r.vsh_dim, r.vsh_degree
                ));
            }
            out
        }
    };
    Ok(Outcome { text, ok: true })
}
