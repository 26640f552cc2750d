use std::path::PathBuf;

use chowforms::decomp::{synth_instance, vsh_point_count};
use chowforms::exactalg::{FieldSpec, PrimeField};
use chowforms::formulas::{smin, vsh_degree};
use chowforms::polyring::{random_form, Form, Ring};
use chowforms::rng::seeded;
use chowforms::serial::InstanceRecord;
use serde_json::json;

use super::Outcome;
use crate::config::{Failure, Output, RunConfig};
use crate::output::envelope;

#[derive(Debug, clap::Args)]
pub struct Args {
    #[arg(long, required_unless_present = "file")]
    n: Option<usize>,

    #[arg(long, required_unless_present = "file")]
    d: Option<usize>,

    /// Number of hyperplanes; defaults to smin(n, d).
    #[arg(long)]
    s: Option<usize>,

    /// Small prime to count over.
    #[arg(long, required_unless_present = "file")]
    p: Option<u64>,

    /// Count for a synthetic instance with s hyperplanes instead of a
    /// random form.
    #[arg(long, conflicts_with = "file")]
    synth: bool,

    /// Instance or form file over a prime field.
    #[arg(long)]
    file: Option<PathBuf>,
}

pub fn run(config: &RunConfig, args: &Args) -> Result<Outcome, Failure> {
    let (fp, f, source, planted_s) = match &args.file {
        Some(path) => {
            let record: InstanceRecord = serde_json::from_str(&std::fs::read_to_string(path)?)?;
            let FieldSpec::Prime { modulus } = record.form.field else {
                return Err(Failure::Usage("counting needs a prime field".into()));
            };
            if args.p.is_some_and(|p| p != modulus) {
                return Err(Failure::Usage(format!("--p disagrees with the file's modulus {modulus}")));
            }
            let fp = PrimeField::new(modulus)?;
            let inst = record.to_instance(&fp)?;
            (fp, inst.f, "file", Some(inst.s))
        }
        None => {
            let (n, d, p) = (args.n.expect("clap"), args.d.expect("clap"), args.p.expect("clap"));
            let fp = PrimeField::new(p)?;
            if args.synth {
                let s = args.s.unwrap_or_else(|| smin(n as u64, d as u64) as usize);
                let inst = synth_instance(&fp, n, d, s, config.seed)?;
                (fp, inst.f, "synthetic", Some(s))
            } else {
                let f: Form<PrimeField> = random_form(&fp, n, d, Ring::S, &mut seeded(config.seed));
                (fp, f, "generic", None)
            }
        }
    };
    let (n, d) = (f.n(), f.degree());
    if n < 1 || d < 1 {
        return Err(Failure::Usage("count needs n >= 1 and d >= 1".into()));
    }
    let s = args.s.or(planted_s).unwrap_or_else(|| smin(n as u64, d as u64) as usize);
    let count = vsh_point_count(&fp, &f, s, config.enumeration_guard)?;
    let bound = vsh_degree(n as u64, d as u64);
    let config = config.with_field(FieldSpec::Prime { modulus: fp.modulus() });
    let text = match config.output {
        Output::Json => {
            let result = json!({
                "n": n,
                "d": d,
                "s": s,
                "smin": smin(n as u64, d as u64),
                "p": fp.modulus().to_string(),
                "source": source,
                "count": count,
                "degree_bound": bound.to_string(),
            });
            envelope("count", &config, &[result])
        }
        Output::Text => format!(
            "{source} form over GF({}) n={n} d={d} s={s}: {count} rational points (degree bound {bound})\n",
            fp.modulus()
        ),
        Output::Csv => return Err(Failure::Usage("count has no CSV output".into())),
    };
    Ok(Outcome { text, ok: true })
}
