use chowforms::exactalg::Field;
use chowforms::polyring::{Form, LinearForm, Ring};
use serde::Serialize;
use serde_json::Value;

use crate::config::RunConfig;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize)]
struct Envelope<'a> {
    schema_version: u32,
    command: &'a str,
    config: &'a RunConfig,
    results: &'a [Value],
}

pub fn envelope(command: &str, config: &RunConfig, results: &[Value]) -> String {
    let doc = Envelope {
        schema_version: SCHEMA_VERSION,
        command,
        config,
        results,
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
    s.push('\n');
    s
}

fn variable(ring: Ring) -> &'static str {
    match ring {
        Ring::S => "x",
        Ring::T => "d",
    }
}

/// Human-readable polynomial, e.g. `3*x0^2*x1 + x2^3`.
pub fn render_form<F: Field>(field: &F, f: &Form<F>) -> String {
    let v = variable(f.ring());
    let terms: Vec<String> = f
        .terms(field)
        .map(|(exps, c)| {
            let monomial: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { format!("{v}{i}") } else { format!("{v}{i}^{e}") })
                .collect();
            match (monomial.is_empty(), field.is_one(c)) {
                (true, _) => field.format(c),
                (false, true) => monomial.join("*"),
                (false, false) => format!("{}*{}", field.format(c), monomial.join("*")),
            }
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

pub fn render_linear<F: Field>(field: &F, l: &LinearForm<F>) -> String {
    render_form(field, &l.to_form())
}
