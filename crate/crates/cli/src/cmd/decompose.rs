use std::path::PathBuf;

use chowforms::decomp::{
    forward_check, reconstruct, sylvester_binary, synth_instance, synth_power_sum, CodimOneInstance, SamplingPlan,
};
use chowforms::exactalg::{Field, FieldSpec, PrimeField};
use chowforms::formulas::sstar;
use chowforms::polyring::{apply, Form, Ring};
use chowforms::rng::derive_seed;
use chowforms::serial::{FormRecord, InstanceRecord, PowerTermRecord};
use serde_json::json;

use super::{parse_triple, with_field, Outcome};
use crate::config::{Failure, Output, RunConfig};
use crate::output::{envelope, render_form, render_linear};

#[derive(Debug, clap::Args)]
#[command(group(clap::ArgGroup::new("source").required(true).args(["synth", "file", "binary"])))]
pub struct Args {
    /// Synthetic instance with parameters n,d,s.
    #[arg(long, value_parser = parse_triple)]
    synth: Option<(usize, usize, usize)>,

    /// Instance file: a form record plus a list of hyperplanes.
    #[arg(long)]
    file: Option<PathBuf>,

    /// Sylvester's algorithm on a synthetic binary power sum.
    #[arg(long, requires = "synth_d")]
    binary: bool,

    /// Degree of the synthetic binary form.
    #[arg(long)]
    synth_d: Option<usize>,
}

pub fn run(config: &RunConfig, args: &Args) -> Result<Outcome, Failure> {
    if args.binary {
        return binary(config, args.synth_d.expect("required by clap"));
    }
    if let Some((n, d, s)) = args.synth {
        return with_field!(config.field, |f| {
            let mut inst = synth_instance(f, n, d, s, config.seed)?;
            inst.summands = None;
            codim_one(f, config, inst)
        });
    }
    let path = args.file.as_ref().expect("required by clap");
    let record: InstanceRecord = serde_json::from_str(&std::fs::read_to_string(path)?)?;
    let config = config.with_field(record.form.field);
    with_field!(config.field, |f| codim_one(f, &config, record.to_instance(f)?))
}

fn codim_one<F: Field>(field: &F, config: &RunConfig, input: CodimOneInstance<F>) -> Result<Outcome, Failure> {
    if !forward_check(field, &input.f, &input.hyperplanes)? {
        return Err(Failure::Verification(
            "the product of the hyperplanes does not annihilate f; no decomposition exists".into(),
        ));
    }
    let plan = SamplingPlan::new(input.n, input.d, derive_seed(config.seed, 1));
    let rec = reconstruct(field, &input.f, &input.hyperplanes, plan, config.retries)?;
    let summands = rec.instance.summands.as_ref().expect("reconstruct fills summands");
    let mut sum = Form::zero(field, input.n, input.d, Ring::S);
    let mut annihilated = Vec::with_capacity(summands.len());
    for (l, g) in input.hyperplanes.iter().zip(summands) {
        annihilated.push(apply(field, &l.to_form(), g)?.is_zero(field));
        sum = sum.add(field, g)?;
    }
    let residual = input.f.sub(field, &sum)?;
    let ok = residual.is_zero(field) && annihilated.iter().all(|&a| a);

    let text = match config.output {
        Output::Json => {
            let result = json!({
                "input": InstanceRecord::from_instance(field, &input),
                "summands": InstanceRecord::from_instance(field, &rec.instance).summands,
                "forward_check": true,
                "annihilated": annihilated,
                "residual_zero": residual.is_zero(field),
                "unknowns": rec.unknowns,
                "equations": rec.equations,
                "retries_used": rec.retries_used,
            });
            envelope("decompose", config, &[result])
        }
        Output::Text => {
            let mut out = format!(
                "field {}  n={} d={} s={}\nf = {}\n",
                config.field,
                input.n,
                input.d,
                input.s,
                render_form(field, &input.f)
            );
            for (i, (l, g)) in input.hyperplanes.iter().zip(summands).enumerate() {
                out.push_str(&format!(
                    "L{} = {}\nf{} = {}\n  L{} o f{} = 0: {}\n",
                    i + 1,
                    render_linear(field, l),
                    i + 1,
                    render_form(field, g),
                    i + 1,
                    i + 1,
                    annihilated[i]
                ));
            }
            out.push_str(&format!(
                "unknowns {} equations {} retries {}\nresidual f - sum f_i = {}\n",
                rec.unknowns,
                rec.equations,
                rec.retries_used,
                render_form(field, &residual)
            ));
            out
        }
        Output::Csv => return Err(Failure::Usage("decompose has no CSV output".into())),
    };
    Ok(Outcome { text, ok })
}

fn binary(config: &RunConfig, d: usize) -> Result<Outcome, Failure> {
    let FieldSpec::Prime { modulus } = config.field else {
        return Err(Failure::Usage("Sylvester's algorithm needs a prime field".into()));
    };
    let fp = PrimeField::new(modulus)?;
    let s = sstar(d as u64) as usize;
    let (f, planted) = synth_power_sum(&fp, 1, d, s, config.seed)?;
    let terms = sylvester_binary(&fp, &f, config.enumeration_guard)?;
    let mut sum = Form::zero(&fp, 1, d, Ring::S);
    for t in &terms {
        sum = sum.add(&fp, &t.point.power(&fp, d).scale(&fp, &t.coefficient))?;
    }
    let mut got: Vec<_> = terms.iter().map(|t| t.point.coeffs().to_vec()).collect();
    let mut want: Vec<_> = planted.iter().map(|t| t.point.coeffs().to_vec()).collect();
    got.sort();
    want.sort();
    let recovered = got == want;
    let sum_ok = sum == f;

    let text = match config.output {
        Output::Json => {
            let result = json!({
                "form": FormRecord::from_form(&fp, &f),
                "terms": terms.iter().map(|t| PowerTermRecord::from_term(&fp, t)).collect::<Vec<_>>(),
                "planted": planted.iter().map(|t| PowerTermRecord::from_term(&fp, t)).collect::<Vec<_>>(),
                "recovered_planted_points": recovered,
                "sum_equals_f": sum_ok,
            });
            envelope("decompose", config, &[result])
        }
        Output::Text => {
            let mut out = format!("field {}  d={} s={}\nf = {}\n", config.field, d, s, render_form(&fp, &f));
            for t in &terms {
                out.push_str(&format!("  {} * ({})^{}\n", t.coefficient, render_form(&fp, &t.point.to_form()), d));
            }
            out.push_str(&format!("planted points recovered: {recovered}\nsum equals f: {sum_ok}\n"));
            out
        }
        Output::Csv => return Err(Failure::Usage("decompose has no CSV output".into())),
    };
    Ok(Outcome { text, ok: sum_ok })
}
