//! Rational points of the variety of sums of codimension-one forms over a
//! small prime field, and the smoothness check in the zero-dimensional case.

use num_bigint::BigUint;
use num_integer::binomial;

use crate::apolar::{perp_space, point_ideal_piece};
use crate::chowlab::{Comparison, OracleRun, VerificationReport};
use crate::error::{Error, Result};
use crate::exactalg::{EchelonSpan, Field, PrimeField};
use crate::formulas::{binom, smin, vsh_dim};
use crate::polyring::{apply, exponent_table, monomial_index, num_monomials, random_distinct_linear, Form, LinearForm, Ring};
use crate::rng::seeded;

/// Every hyperplane of `P^n(F_p)`, as normalized linear forms in T.
pub fn rational_hyperplanes(fp: &PrimeField, n: usize) -> Vec<LinearForm<PrimeField>> {
    let p = fp.modulus();
    let mut out = Vec::new();
    for lead in 0..=n {
        let free = n - lead;
        let mut tail = vec![0u64; free];
        loop {
            let mut v = vec![0u64; n + 1];
            v[lead] = 1;
            v[lead + 1..].copy_from_slice(&tail);
            out.push(LinearForm::new(fp, Ring::T, v).expect("nonzero"));
            // odometer over F_p^free
            let Some(pos) = tail.iter().rposition(|&x| x + 1 < p) else {
                break;
            };
            tail[pos] += 1;
            tail[pos + 1..].iter_mut().for_each(|x| *x = 0);
        }
    }
    out
}

/// Index tables for multiplying a degree-k form by a linear form.
struct Shifts {
    n: usize,
    up: Vec<Vec<Vec<usize>>>,
}

impl Shifts {
    fn new(n: usize, top: usize) -> Self {
        let up = (0..top)
            .map(|k| {
                exponent_table(n, k)
                    .into_iter()
                    .map(|mut e| {
                        (0..=n)
                            .map(|v| {
                                e[v] += 1;
                                let i = monomial_index(&e);
                                e[v] -= 1;
                                i
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Self { n, up }
    }

    fn times_linear(&self, fp: &PrimeField, a: &[u64], k: usize, l: &[u64]) -> Vec<u64> {
        let mut out = vec![0u64; num_monomials(self.n, k + 1)];
        for (m, c) in a.iter().enumerate() {
            if *c == 0 {
                continue;
            }
            for (v, lv) in l.iter().enumerate() {
                let i = self.up[k][m][v];
                out[i] = fp.add(&out[i], &fp.mul(c, lv));
            }
        }
        out
    }
}

/// Number of unordered s-subsets of rational hyperplanes whose product lies
/// in `(f^perp)_s`.
pub fn vsh_point_count(fp: &PrimeField, f: &Form<PrimeField>, s: usize, guard: u64) -> Result<u64> {
    if s < 1 {
        return Err(Error::Domain("vsh_point_count needs s >= 1".into()));
    }
    let n = f.n();
    let p = BigUint::from(fp.modulus());
    let planes_big = (p.pow(n as u32 + 1) - 1u32) / (p - 1u32);
    let subsets = binomial(planes_big, BigUint::from(s));
    if subsets > BigUint::from(guard) {
        return Err(Error::EnumerationTooLarge {
            size: subsets.to_string(),
            guard,
        });
    }
    let perp = perp_space(fp, f, s)?;
    let span = EchelonSpan::new(fp, perp.coefficient_rows(), num_monomials(n, s));
    if span.dim() == 0 {
        return Ok(0);
    }
    let planes = rational_hyperplanes(fp, n);
    let shifts = Shifts::new(n, s);
    let mut count = 0u64;
    // prefix[k] is the product of the first k chosen hyperplanes
    let mut prefix: Vec<Vec<u64>> = vec![vec![1]];
    let mut chosen: Vec<usize> = Vec::with_capacity(s);
    let mut next = 0usize;
    loop {
        if chosen.len() == s {
            if span.contains(fp, &prefix[s]) {
                count += 1;
            }
        } else if next < planes.len() && planes.len() - next >= s - chosen.len() {
            let k = chosen.len();
            let prod = shifts.times_linear(fp, &prefix[k], k, planes[next].coeffs());
            prefix.truncate(k + 1);
            prefix.push(prod);
            chosen.push(next);
            next += 1;
            continue;
        }
        // backtrack
        match chosen.pop() {
            Some(last) => {
                prefix.truncate(chosen.len() + 1);
                next = last + 1;
            }
            None => break,
        }
    }
    Ok(count)
}

/// Draws `n s` points with `n s = C(d-s+n, n)`, `s = smin(n, d)`, sets
/// `g = sum l_i^d` and compares `(g^perp)_s` with `(I_X)_s`.
pub fn verify_smoothness_case<F: Field>(field: &F, n: usize, d: usize, seed: u64, retries: usize) -> Result<VerificationReport> {
    if n < 1 || d < 1 {
        return Err(Error::Domain("smoothness case needs n >= 1 and d >= 1".into()));
    }
    let s = smin(n as u64, d as u64) as usize;
    let dim = vsh_dim(n as u64, d as u64);
    if dim != 0 {
        return Err(Error::NotZeroDimensional { n, d, dim: dim as i64 });
    }
    let points = n * s;
    let expected = num_monomials(n, s) as i64 - points as i64;
    debug_assert_eq!(binom((d - s + n) as i64, n as u64), BigUint::from(points));
    let run = OracleRun {
        name: "smoothness",
        params: &[("n", n as u64), ("d", d as u64), ("s", s as u64)],
        seed,
        field: field.spec(),
        retries,
    };
    run.execute(|attempt_seed| {
        let mut rng = seeded(attempt_seed);
        let ls = random_distinct_linear(field, n, Ring::S, points, &mut rng)?;
        let mut g = Form::zero(field, n, d, Ring::S);
        for l in &ls {
            g = g.add(field, &l.power(field, d))?;
        }
        let perp = perp_space(field, &g, s)?;
        let ideal = point_ideal_piece(field, &ls, s)?;
        let mut contained = true;
        for q in &ideal {
            contained &= apply(field, q, &g)?.is_zero(field);
        }
        let mut cmp = Comparison::default();
        cmp.record("perp_dim", perp.dim() as i64, expected);
        cmp.record("ideal_dim", ideal.len() as i64, expected);
        cmp.record("ideal_in_perp", contained as i64, 1);
        Ok(cmp)
    })
}
