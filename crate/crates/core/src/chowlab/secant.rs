//! Tangent spaces to the variety of codimension-one forms and the
//! tangent-span (Terracini) computation of its secant dimensions.

use rand::Rng;

use crate::apolar::inverse_system;
use crate::error::{Error, Result};
use crate::exactalg::{Field, Matrix};
use crate::formulas;
use crate::polyring::{apply, num_monomials, random_linear, Form, LinearForm, Ring};
use crate::rng::seeded;

use super::{Comparison, OracleRun, VerificationReport};

/// Echelon basis of the affine tangent space to the cone over the variety
/// of codimension-one forms at `g`, where `L o g = 0`.
///
/// Writing `g = h(w_1, ..., w_n)` with `w_k` spanning the hyperplane `L = 0`
/// of linear forms, the fiber directions are all of `(L^{-1})_d` and moving
/// the hyperplane contributes `(dh/dy_k)(w) * x_j`; the partials `dg/dx_m`
/// span the same space as the `(dh/dy_k)(w)`.
pub fn vhat_tangent_basis<F: Field>(field: &F, l: &LinearForm<F>, g: &Form<F>) -> Result<Vec<Form<F>>> {
    if l.ring() != Ring::T || g.ring() != Ring::S {
        return Err(Error::RingMismatch("expected L in T and g in S".into()));
    }
    let op = l.to_form();
    if g.is_zero(field) || g.degree() == 0 || !apply(field, &op, g)?.is_zero(field) {
        return Err(Error::InvalidPoint);
    }
    let (n, d) = (g.n(), g.degree());
    let mut vectors: Vec<Vec<F::Elem>> = inverse_system(field, &op, d)?
        .into_iter()
        .map(Form::into_coeffs)
        .collect();
    for m in 0..=n {
        let dg = g.partial(field, m)?;
        for j in 0..=n {
            vectors.push(dg.mul(field, &Form::variable(field, n, Ring::S, j))?.into_coeffs());
        }
    }
    let basis = crate::exactalg::row_space_basis(field, vectors, num_monomials(n, d));
    basis.into_iter().map(|v| Form::new(n, d, Ring::S, v)).collect()
}

/// A random codimension-one form: a random hyperplane `L` and a random
/// element of `(L^{-1})_d`.
pub fn random_vhat_point<F: Field, R: Rng + ?Sized>(
    field: &F,
    n: usize,
    d: usize,
    rng: &mut R,
) -> Result<(LinearForm<F>, Form<F>)> {
    let l = random_linear(field, n, Ring::T, rng);
    let basis = inverse_system(field, &l.to_form(), d)?;
    let mut g = Form::zero(field, n, d, Ring::S);
    for b in &basis {
        g = g.add(field, &b.scale(field, &field.random(rng)))?;
    }
    Ok((l, g))
}

fn tangent_vectors<F: Field, R: Rng + ?Sized>(field: &F, n: usize, d: usize, rng: &mut R) -> Result<Vec<Vec<F::Elem>>> {
    loop {
        let (l, g) = random_vhat_point(field, n, d, rng)?;
        match vhat_tangent_basis(field, &l, &g) {
            Ok(b) => return Ok(b.into_iter().map(Form::into_coeffs).collect()),
            // g = 0 drawn by chance
            Err(Error::InvalidPoint) => continue,
            Err(e) => return Err(e),
        }
    }
}

fn projective_dim<F: Field>(field: &F, cols: usize, vectors: &[Vec<F::Elem>]) -> Result<i64> {
    if vectors.is_empty() {
        return Ok(-1);
    }
    let m = Matrix::from_rows(cols, vectors.to_vec())?;
    Ok(m.rank(field) as i64 - 1)
}

/// Projective dimension of the span of the tangent spaces at `s`
/// independent random codimension-one forms.
pub fn terracini_dim<F: Field>(field: &F, n: usize, d: usize, s: usize, seed: u64) -> Result<i64> {
    let mut rng = seeded(seed);
    let mut vectors = Vec::new();
    for _ in 0..s {
        vectors.extend(tangent_vectors(field, n, d, &mut rng)?);
    }
    projective_dim(field, num_monomials(n, d), &vectors)
}

/// Smallest s whose tangent span fills `P S_d`, scanning s = 1, 2, ... and
/// adding one random point per step.
pub fn smin_oracle<F: Field>(field: &F, n: usize, d: usize, seed: u64) -> Result<u64> {
    let ambient = num_monomials(n, d) as i64 - 1;
    let mut rng = seeded(seed);
    let mut vectors = Vec::new();
    for s in 1..=d + 1 {
        vectors.extend(tangent_vectors(field, n, d, &mut rng)?);
        if projective_dim(field, num_monomials(n, d), &vectors)? == ambient {
            return Ok(s as u64);
        }
    }
    Err(super::degenerate(format!("tangent span did not fill P S_{d} within {} points", d + 1)))
}

/// Compares [`smin_oracle`] with the closed formula.
pub fn verify_terracini<F: Field>(field: &F, n: usize, d: usize, seed: u64, retries: usize) -> Result<VerificationReport> {
    if n < 1 || d < 1 {
        return Err(Error::Domain("terracini oracle needs n >= 1 and d >= 1".into()));
    }
    let expected = formulas::smin(n as u64, d as u64) as i64;
    let run = OracleRun {
        name: "terracini",
        params: &[("n", n as u64), ("d", d as u64)],
        seed,
        field: field.spec(),
        retries,
    };
    run.execute(|attempt_seed| {
        let mut cmp = Comparison::default();
        cmp.record("smin", smin_oracle(field, n, d, attempt_seed)? as i64, expected);
        Ok(cmp)
    })
}

/// Compares the tangent dimension at one random point with the dimension
/// formula for the variety of codimension-one forms, capped by `dim P S_d`.
pub fn verify_vhat_dim<F: Field>(field: &F, n: usize, d: usize, seed: u64, retries: usize) -> Result<VerificationReport> {
    let ambient = num_monomials(n, d) as u64 - 1;
    let formula = formulas::vhat_dim(n as u64, d as u64);
    let expected = if formula > ambient.into() { ambient } else { u64::try_from(formula).expect("below ambient") };
    let run = OracleRun {
        name: "vhat-dim",
        params: &[("n", n as u64), ("d", d as u64)],
        seed,
        field: field.spec(),
        retries,
    };
    run.execute(|attempt_seed| {
        let mut cmp = Comparison::default();
        cmp.record("vhat_dim", terracini_dim(field, n, d, 1, attempt_seed)?, expected as i64);
        Ok(cmp)
    })
}
