//! Sylvester's algorithm for binary forms over a prime field: a squarefree
//! element of `(f^perp)_s`, `s = ceil((d+1)/2)`, that splits into distinct
//! rational linear factors gives the points of a power sum decomposition.

use rand::Rng;

use crate::apolar::{perp_space, waring_fit};
use crate::error::{Error, Result};
use crate::exactalg::{Field, PrimeField};
use crate::formulas::sstar;
use crate::polyring::{random_distinct_linear, Form, LinearForm, Ring};
use crate::rng::seeded;

/// One term `c * l^d` of a power sum decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerTerm<F: Field> {
    pub coefficient: F::Elem,
    pub point: LinearForm<F>,
}

/// Univariate polynomials over F_p, coefficients from low to high degree.
struct Univariate<'a> {
    fp: &'a PrimeField,
}

impl Univariate<'_> {
    fn trim(&self, mut a: Vec<u64>) -> Vec<u64> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    fn monic(&self, a: Vec<u64>) -> Vec<u64> {
        let lead = self.fp.inv(a.last().expect("nonzero polynomial")).expect("nonzero lead");
        a.iter().map(|c| self.fp.mul(c, &lead)).collect()
    }

    /// Quotient and remainder by a monic divisor.
    fn divrem(&self, a: &[u64], b: &[u64]) -> (Vec<u64>, Vec<u64>) {
        let db = b.len() - 1;
        let mut r = a.to_vec();
        if r.len() <= db {
            return (Vec::new(), self.trim(r));
        }
        let mut q = vec![0; r.len() - db];
        for i in (db..r.len()).rev() {
            let c = r[i];
            if c == 0 {
                continue;
            }
            q[i - db] = c;
            for (j, bj) in b.iter().enumerate() {
                r[i - db + j] = self.fp.sub(&r[i - db + j], &self.fp.mul(&c, bj));
            }
        }
        r.truncate(db);
        (self.trim(q), self.trim(r))
    }

    fn mulmod(&self, a: &[u64], b: &[u64], m: &[u64]) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] = self.fp.add(&out[i + j], &self.fp.mul(x, y));
            }
        }
        self.divrem(&out, m).1
    }

    fn powmod(&self, base: &[u64], mut e: u64, m: &[u64]) -> Vec<u64> {
        let mut result = self.divrem(&[1], m).1;
        let mut b = self.divrem(base, m).1;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mulmod(&result, &b, m);
            }
            b = self.mulmod(&b, &b, m);
            e >>= 1;
        }
        result
    }

    /// Monic gcd; empty when both inputs vanish.
    fn gcd(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let (mut a, mut b) = (self.trim(a.to_vec()), self.trim(b.to_vec()));
        while !b.is_empty() {
            let mb = self.monic(b.clone());
            let r = self.divrem(&a, &mb).1;
            a = mb;
            b = r;
        }
        if a.is_empty() {
            a
        } else {
            self.monic(a)
        }
    }

    fn sub_x(&self, mut a: Vec<u64>) -> Vec<u64> {
        if a.len() < 2 {
            a.resize(2, 0);
        }
        a[1] = self.fp.sub(&a[1], &1);
        self.trim(a)
    }

    /// Roots of a monic polynomial that is a product of distinct linear
    /// factors, by random equal-degree splitting.
    fn split<R: Rng>(&self, g: Vec<u64>, rng: &mut R, out: &mut Vec<u64>) {
        match g.len() {
            0 | 1 => {}
            2 => out.push(self.fp.neg(&g[0])),
            _ => loop {
                let a = self.fp.random(rng);
                let mut h = self.powmod(&[a, 1], (self.fp.modulus() - 1) / 2, &g);
                if h.is_empty() {
                    h.push(0);
                }
                h[0] = self.fp.sub(&h[0], &1);
                let factor = self.gcd(&g, &h);
                if factor.len() > 1 && factor.len() < g.len() {
                    let other = self.divrem(&g, &factor).0;
                    self.split(factor, rng, out);
                    self.split(other, rng, out);
                    return;
                }
            },
        }
    }

    /// Distinct roots in F_p of a nonzero polynomial.
    fn roots(&self, a: &[u64]) -> Vec<u64> {
        let a = self.trim(a.to_vec());
        if a.len() <= 1 {
            return Vec::new();
        }
        let m = self.monic(a);
        let xp = self.powmod(&[0, 1], self.fp.modulus(), &m);
        let g = self.gcd(&m, &self.sub_x(xp));
        let mut out = Vec::new();
        self.split(g, &mut seeded(0), &mut out);
        out.sort_unstable();
        out
    }
}

/// Distinct rational roots `[a:b]` of a binary operator `D`, as points of
/// the dual line. Scans all `p + 1` points when that is within `guard`,
/// and otherwise factors `D(1, t)` with Cantor-Zassenhaus.
pub fn binary_roots(fp: &PrimeField, op: &Form<PrimeField>, guard: u64) -> Result<Vec<LinearForm<PrimeField>>> {
    if op.n() != 1 {
        return Err(Error::VariableMismatch {
            expected: 1,
            found: op.n(),
        });
    }
    if op.is_zero(fp) {
        return Err(Error::Domain("the zero operator vanishes everywhere".into()));
    }
    let s = op.degree();
    // coefficient of t^k in D(1, t) is that of d_0^{s-k} d_1^k
    let dehomogenized = op.coeffs();
    let p = fp.modulus();
    let ts: Vec<u64> = if p == 2 || p.saturating_add(1) <= guard {
        (0..p)
            .filter(|t| {
                let v = dehomogenized
                    .iter()
                    .rev()
                    .fold(0, |acc, c| fp.add(&fp.mul(&acc, t), c));
                v == 0
            })
            .collect()
    } else {
        Univariate { fp }.roots(dehomogenized)
    };
    let mut points: Vec<LinearForm<PrimeField>> = ts
        .into_iter()
        .map(|t| LinearForm::new(fp, Ring::S, vec![1, t]))
        .collect::<Result<_>>()?;
    if dehomogenized[s] == 0 {
        points.push(LinearForm::new(fp, Ring::S, vec![0, 1])?);
    }
    Ok(points)
}

/// `f = sum c_i l_i^d` for `count` distinct random points and random nonzero
/// coefficients.
pub fn synth_power_sum<F: Field>(field: &F, n: usize, d: usize, count: usize, seed: u64) -> Result<(Form<F>, Vec<PowerTerm<F>>)> {
    let mut rng = seeded(seed);
    let points = random_distinct_linear(field, n, Ring::S, count, &mut rng)?;
    let mut f = Form::zero(field, n, d, Ring::S);
    let mut terms = Vec::with_capacity(count);
    for point in points {
        let coefficient = loop {
            let c = field.random(&mut rng);
            if !field.is_zero(&c) {
                break c;
            }
        };
        f = f.add(field, &point.power(field, d).scale(field, &coefficient))?;
        terms.push(PowerTerm { coefficient, point });
    }
    Ok((f, terms))
}

/// Writes a binary form as a sum of `ceil((d+1)/2)` powers when some basis
/// element of `(f^perp)_s` has that many distinct rational roots.
pub fn sylvester_binary(fp: &PrimeField, f: &Form<PrimeField>, guard: u64) -> Result<Vec<PowerTerm<PrimeField>>> {
    if f.n() != 1 {
        return Err(Error::VariableMismatch {
            expected: 1,
            found: f.n(),
        });
    }
    let s = sstar(f.degree() as u64) as usize;
    let perp = perp_space(fp, f, s)?;
    for op in &perp.basis {
        let roots = binary_roots(fp, op, guard)?;
        if roots.len() != s {
            continue;
        }
        if let Some(c) = waring_fit(fp, f, &roots)? {
            return Ok(c
                .into_iter()
                .zip(roots)
                .map(|(coefficient, point)| PowerTerm { coefficient, point })
                .collect());
        }
    }
    Err(Error::SplittingFailure)
}
