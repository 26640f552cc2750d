//! Codimension-one decompositions `f = f_1 + ... + f_s` with `L_i o f_i = 0`.
//!
//! A form has such a decomposition with pairwise distinct hyperplanes
//! exactly when `L_1 ... L_s` annihilates it. Given the hyperplanes, the
//! summands are recovered by sampling `C(d+n-1, n-1)` points on each
//! hyperplane and solving for `f` as a combination of their d-th powers.

mod sylvester;
mod vsh;

use std::collections::HashSet;

use rand::Rng;

use crate::apolar::inverse_system;
use crate::chowlab::{Comparison, OracleRun, VerificationReport};
use crate::error::{Error, Result};
use crate::exactalg::{Field, Matrix};
use crate::formulas;
use crate::polyring::{apply, first_proportional_pair, num_monomials, product, random_distinct_linear, Form, LinearForm, Ring};
use crate::rng::{derive_seed, seeded};

pub use sylvester::{binary_roots, sylvester_binary, synth_power_sum, PowerTerm};
pub use vsh::{rational_hyperplanes, verify_smoothness_case, vsh_point_count};

/// A form together with s hyperplanes and, when known, summands with
/// `L_i o f_i = 0` adding up to the form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodimOneInstance<F: Field> {
    pub n: usize,
    pub d: usize,
    pub s: usize,
    pub f: Form<F>,
    pub hyperplanes: Vec<LinearForm<F>>,
    pub summands: Option<Vec<Form<F>>>,
}

impl<F: Field> CodimOneInstance<F> {
    /// Checks the instance invariants exactly. Without summands only the
    /// shapes and the distinctness of the hyperplanes are checked.
    pub fn is_valid(&self, field: &F) -> Result<bool> {
        if self.hyperplanes.len() != self.s || first_proportional_pair(&self.hyperplanes).is_some() {
            return Ok(false);
        }
        let Some(summands) = &self.summands else {
            return Ok(true);
        };
        if summands.len() != self.s {
            return Ok(false);
        }
        let mut total = Form::zero(field, self.n, self.d, Ring::S);
        for (l, g) in self.hyperplanes.iter().zip(summands) {
            if !apply(field, &l.to_form(), g)?.is_zero(field) {
                return Ok(false);
            }
            total = total.add(field, g)?;
        }
        Ok(total == self.f)
    }
}

/// How many points to sample per hyperplane, and from which seed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SamplingPlan {
    pub points_per_hyperplane: usize,
    pub seed: u64,
}

impl SamplingPlan {
    /// `C(d+n-1, n-1)` points, the dimension of the degree-d forms on a
    /// hyperplane.
    pub fn new(n: usize, d: usize, seed: u64) -> Self {
        Self {
            points_per_hyperplane: num_monomials(n - 1, d),
            seed,
        }
    }
}

/// Random instance: s distinct hyperplanes, a random element of each
/// `(L_i^{-1})_d`, and their sum.
pub fn synth_instance<F: Field>(field: &F, n: usize, d: usize, s: usize, seed: u64) -> Result<CodimOneInstance<F>> {
    if n < 1 || s < 1 {
        return Err(Error::Domain("synth_instance needs n >= 1 and s >= 1".into()));
    }
    let mut rng = seeded(seed);
    let hyperplanes = random_distinct_linear(field, n, Ring::T, s, &mut rng)?;
    let mut f = Form::zero(field, n, d, Ring::S);
    let mut summands = Vec::with_capacity(s);
    for l in &hyperplanes {
        let mut g = Form::zero(field, n, d, Ring::S);
        for b in inverse_system(field, &l.to_form(), d)? {
            g = g.add(field, &b.scale(field, &field.random(&mut rng)))?;
        }
        f = f.add(field, &g)?;
        summands.push(g);
    }
    Ok(CodimOneInstance {
        n,
        d,
        s,
        f,
        hyperplanes,
        summands: Some(summands),
    })
}

/// True iff `L_1 ... L_s` annihilates `f`.
pub fn forward_check<F: Field>(field: &F, f: &Form<F>, ls: &[LinearForm<F>]) -> Result<bool> {
    if ls.is_empty() {
        return Ok(f.is_zero(field));
    }
    if ls.len() > f.degree() {
        // T_s kills S_d for s > d
        return Ok(true);
    }
    let op = product(field, &ls.iter().map(LinearForm::to_form).collect::<Vec<_>>())?;
    Ok(apply(field, &op, f)?.is_zero(field))
}

/// Random projective points `l` of the dual space with `L(l) = 0`.
fn points_on_hyperplane<F: Field, R: Rng + ?Sized>(
    field: &F,
    l: &LinearForm<F>,
    count: usize,
    taken: &mut HashSet<Vec<F::Elem>>,
    rng: &mut R,
) -> Result<Vec<LinearForm<F>>> {
    let n = l.n();
    let span = Matrix::from_rows(n + 1, vec![l.coeffs().to_vec()])?.kernel_basis(field);
    let mut out = Vec::with_capacity(count);
    let mut draws = 0;
    while out.len() < count {
        draws += 1;
        if draws > crate::polyring::DISTINCT_DRAW_LIMIT * count.max(1) {
            return Err(Error::GenericityFailure {
                attempts: draws,
                reason: "could not sample distinct points on a hyperplane".into(),
            });
        }
        let mut v = vec![field.zero(); n + 1];
        for b in &span {
            let c = field.random(rng);
            for (x, y) in v.iter_mut().zip(b) {
                *x = field.add(x, &field.mul(&c, y));
            }
        }
        let Ok(p) = LinearForm::new(field, Ring::S, v) else {
            continue;
        };
        if taken.insert(p.coeffs().to_vec()) {
            out.push(p);
        }
    }
    Ok(out)
}

/// Result of [`reconstruct`], with the size of the linear system solved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reconstruction<F: Field> {
    pub instance: CodimOneInstance<F>,
    pub unknowns: usize,
    pub equations: usize,
    pub retries_used: usize,
}

/// Recovers summands `f_i` with `L_i o f_i = 0` and `sum f_i = f` by
/// writing `f` as a combination of d-th powers of points sampled on the
/// hyperplanes. Retries with fresh points on an inconsistent system.
pub fn reconstruct<F: Field>(
    field: &F,
    f: &Form<F>,
    ls: &[LinearForm<F>],
    plan: SamplingPlan,
    retries: usize,
) -> Result<Reconstruction<F>> {
    if f.ring() != Ring::S {
        return Err(Error::RingMismatch("reconstruct needs a form in S".into()));
    }
    if let Some((i, j)) = first_proportional_pair(ls) {
        return Err(Error::ProportionalFactors(i, j));
    }
    if ls.is_empty() || !forward_check(field, f, ls)? {
        return Err(Error::Inconsistent);
    }
    let (n, d, s) = (f.n(), f.degree(), ls.len());
    let per = plan.points_per_hyperplane;
    let equations = num_monomials(n, d);
    for attempt in 0..=retries {
        let mut rng = seeded(derive_seed(plan.seed, attempt));
        let mut taken = HashSet::new();
        let mut points = Vec::with_capacity(s * per);
        for l in ls {
            points.extend(points_on_hyperplane(field, l, per, &mut taken, &mut rng)?);
        }
        let columns: Vec<Vec<F::Elem>> = points.iter().map(|p| p.power(field, d).into_coeffs()).collect();
        let m = Matrix::from_columns(equations, &columns)?;
        let Some(c) = m.solve(field, f.coeffs()) else {
            continue;
        };
        let summands = c
            .chunks(per)
            .zip(columns.chunks(per))
            .map(|(cs, cols)| {
                let mut acc = vec![field.zero(); equations];
                for (ci, col) in cs.iter().zip(cols) {
                    for (a, b) in acc.iter_mut().zip(col) {
                        *a = field.add(a, &field.mul(ci, b));
                    }
                }
                Form::new(n, d, Ring::S, acc)
            })
            .collect::<Result<Vec<_>>>()?;
        return Ok(Reconstruction {
            instance: CodimOneInstance {
                n,
                d,
                s,
                f: f.clone(),
                hyperplanes: ls.to_vec(),
                summands: Some(summands),
            },
            unknowns: s * per,
            equations,
            retries_used: attempt,
        });
    }
    Err(Error::Inconsistent)
}

/// Synthesizes an instance with `smin(n, d)` summands, runs the forward
/// check and the reconstruction, and checks the reconstructed summands.
pub fn verify_roundtrip<F: Field>(field: &F, n: usize, d: usize, seed: u64, retries: usize) -> Result<VerificationReport> {
    if n < 1 || d < 1 {
        return Err(Error::Domain("roundtrip needs n >= 1 and d >= 1".into()));
    }
    let s = formulas::smin(n as u64, d as u64) as usize;
    let run = OracleRun {
        name: "roundtrip",
        params: &[("n", n as u64), ("d", d as u64), ("s", s as u64)],
        seed,
        field: field.spec(),
        retries,
    };
    run.execute(|attempt_seed| {
        let inst = synth_instance(field, n, d, s, attempt_seed)?;
        let forward = forward_check(field, &inst.f, &inst.hyperplanes)?;
        let plan = SamplingPlan::new(n, d, derive_seed(attempt_seed, 1));
        let rec = match reconstruct(field, &inst.f, &inst.hyperplanes, plan, 0) {
            Ok(r) => r,
            Err(Error::Inconsistent) => return Err(crate::chowlab::degenerate("sampled points did not span")),
            Err(e) => return Err(e),
        };
        let mut cmp = Comparison::default();
        cmp.record("synthetic_valid", inst.is_valid(field)? as i64, 1);
        cmp.record("forward_check", forward as i64, 1);
        cmp.record("reconstruction_valid", rec.instance.is_valid(field)? as i64, 1);
        cmp.record("unknowns", rec.unknowns as i64, (s * num_monomials(n - 1, d)) as i64);
        cmp.record("equations", rec.equations as i64, num_monomials(n, d) as i64);
        Ok(cmp)
    })
}

#[cfg(test)]
mod tests;
