pub mod count;
pub mod decompose;
pub mod formulas;
pub mod verify;

use std::ops::RangeInclusive;

/// Rendered output and whether every check passed.
pub struct Outcome {
    pub text: String,
    pub ok: bool,
}

/// Runs `$body` with `$f` bound to a reference to the field named by a
/// `FieldSpec`.
macro_rules! with_field {
    ($spec:expr, |$f:ident| $body:expr) => {
        match $spec {
            chowforms::exactalg::FieldSpec::Prime { modulus } => {
                let $f = &chowforms::exactalg::PrimeField::new(modulus)?;
                $body
            }
            chowforms::exactalg::FieldSpec::Rationals => {
                let $f = &chowforms::exactalg::Rationals;
                $body
            }
        }
    };
}
pub(crate) use with_field;

/// `a..b` (inclusive) or a single value `a`.
pub fn parse_range(s: &str) -> Result<RangeInclusive<u64>, String> {
    let bad = || format!("expected a..b or a single integer, got {s:?}");
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
        None => (s, s),
    };
    let a: u64 = a.trim().parse().map_err(|_| bad())?;
    let b: u64 = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(format!("empty range {s:?}"));
    }
    Ok(a..=b)
}

/// Comma-separated `n,d,s`.
pub fn parse_triple(s: &str) -> Result<(usize, usize, usize), String> {
    let parts: Vec<usize> = s
        .split(',')
        .map(|x| x.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|_| format!("expected n,d,s, got {s:?}"))?;
    match parts[..] {
        [n, d, s] => Ok((n, d, s)),
        _ => Err(format!("expected n,d,s, got {s:?}")),
    }
}
