//! Tangent spaces to `Delta_{n,s}` at `L_1 ... L_s` and the ideal of the
//! pairwise intersections `X_F = U_{i<j} {L_i = L_j = 0}`.

use std::ops::RangeInclusive;

use crate::error::{Error, Result};
use crate::exactalg::{EchelonSpan, Field, Matrix};
use crate::polyring::{
    exponent_table, first_proportional_pair, num_monomials, product, random_distinct_linear, Form, LinearForm,
    Ring,
};
use crate::rng::seeded;

use super::{degenerate, Comparison, OracleRun, VerificationReport};

fn check_factors<F: Field>(ls: &[LinearForm<F>]) -> Result<usize> {
    let n = ls
        .first()
        .ok_or_else(|| Error::Domain("need at least one linear factor".into()))?
        .n();
    if let Some(bad) = ls.iter().find(|l| l.n() != n) {
        return Err(Error::VariableMismatch {
            expected: n,
            found: bad.n(),
        });
    }
    if let Some((i, j)) = first_proportional_pair(ls) {
        return Err(Error::ProportionalFactors(i, j));
    }
    Ok(n)
}

/// `prod_{j != i} L_j` for each i, the generators of the ideal of `X_F`.
fn complementary_products<F: Field>(field: &F, ls: &[LinearForm<F>]) -> Result<Vec<Form<F>>> {
    let n = ls[0].n();
    (0..ls.len())
        .map(|i| {
            let others: Vec<_> = ls
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, l)| l.to_form())
                .collect();
            if others.is_empty() {
                Ok(Form::constant(n, Ring::T, field.one()))
            } else {
                product(field, &others)
            }
        })
        .collect()
}

fn to_forms<F: Field>(n: usize, t: usize, vectors: Vec<Vec<F::Elem>>) -> Result<Vec<Form<F>>> {
    vectors.into_iter().map(|v| Form::new(n, t, Ring::T, v)).collect()
}

/// Echelon basis of the affine tangent space to the cone over `Delta_{n,s}`
/// at `L_1 ... L_s`: all products with one factor replaced by a coordinate.
pub fn chow_tangent_basis<F: Field>(field: &F, ls: &[LinearForm<F>]) -> Result<Vec<Form<F>>> {
    let n = check_factors(ls)?;
    let s = ls.len();
    let mut vectors = Vec::with_capacity(s * (n + 1));
    for g in complementary_products(field, ls)? {
        for k in 0..=n {
            let v = g.mul(field, &Form::variable(field, n, Ring::T, k))?;
            vectors.push(v.into_coeffs());
        }
    }
    let basis = EchelonSpan::new(field, vectors, num_monomials(n, s));
    to_forms(n, s, basis.basis().to_vec())
}

/// Linear conditions on degree-t operators for vanishing on every
/// `{L_i = L_j = 0}`. Each codimension-2 subspace is parametrized by n-1
/// coordinates and the restricted polynomial must vanish coefficientwise.
pub fn pairwise_meet_conditions<F: Field>(field: &F, ls: &[LinearForm<F>], t: usize) -> Result<Matrix<F>> {
    let n = check_factors(ls)?;
    let monos = exponent_table(n, t);
    let mut rows: Vec<Vec<F::Elem>> = Vec::new();
    if n < 2 {
        return Matrix::from_rows(monos.len(), rows);
    }
    for i in 0..ls.len() {
        for j in i + 1..ls.len() {
            let pair = Matrix::from_rows(n + 1, vec![ls[i].coeffs().to_vec(), ls[j].coeffs().to_vec()])?;
            let span = pair.kernel_basis(field);
            debug_assert_eq!(span.len(), n - 1);
            // coordinate x_m restricted to the subspace, as a linear form in n-1 variables
            let coords: Vec<Form<F>> = (0..=n)
                .map(|m| {
                    let c = span.iter().map(|v| v[m].clone()).collect();
                    Form::new(n - 2, 1, Ring::T, c)
                })
                .collect::<Result<_>>()?;
            let powers: Vec<Vec<Form<F>>> = coords
                .iter()
                .map(|x| {
                    let mut p = vec![Form::constant(n - 2, Ring::T, field.one())];
                    for e in 1..=t {
                        let next = p[e - 1].mul(field, x)?;
                        p.push(next);
                    }
                    Ok(p)
                })
                .collect::<Result<_>>()?;
            let restricted: Vec<Vec<F::Elem>> = monos
                .iter()
                .map(|exps| {
                    let mut acc = Form::constant(n - 2, Ring::T, field.one());
                    for (m, &e) in exps.iter().enumerate() {
                        if e > 0 {
                            acc = acc.mul(field, &powers[m][e as usize])?;
                        }
                    }
                    Ok(acc.into_coeffs())
                })
                .collect::<Result<_>>()?;
            let n_conditions = num_monomials(n - 2, t);
            for r in 0..n_conditions {
                rows.push(restricted.iter().map(|col| col[r].clone()).collect());
            }
        }
    }
    Matrix::from_rows(monos.len(), rows)
}

/// Basis of degree-t operators vanishing on every pairwise intersection
/// `{L_i = 0} n {L_j = 0}` in the dual projective space.
pub fn forms_through_pairwise_meets<F: Field>(field: &F, ls: &[LinearForm<F>], t: usize) -> Result<Vec<Form<F>>> {
    let n = check_factors(ls)?;
    let m = pairwise_meet_conditions(field, ls, t)?;
    to_forms(n, t, m.kernel_basis(field))
}

/// Checks that the tangent space at a random point `L_1 ... L_s` has
/// dimension `n s + 1` and equals the degree-s forms through `X_F`.
pub fn verify_chow_tangent<F: Field>(
    field: &F,
    n: usize,
    s: usize,
    seed: u64,
    retries: usize,
) -> Result<VerificationReport> {
    if n < 1 || s < 1 {
        return Err(Error::Domain("verify_chow_tangent needs n >= 1 and s >= 1".into()));
    }
    let run = OracleRun {
        name: "chow-tangent",
        params: &[("n", n as u64), ("s", s as u64)],
        seed,
        field: field.spec(),
        retries,
    };
    run.execute(|attempt_seed| {
        let mut rng = seeded(attempt_seed);
        let ls = random_distinct_linear(field, n, Ring::T, s, &mut rng)?;
        let tangent = chow_tangent_basis(field, &ls)?;
        let meets = forms_through_pairwise_meets(field, &ls, s)?;
        let span = EchelonSpan::new(
            field,
            meets.iter().map(|f| f.coeffs().to_vec()).collect(),
            num_monomials(n, s),
        );
        let contained = tangent.iter().all(|g| span.contains(field, g.coeffs()));
        let expected_dim = (n * s + 1).min(num_monomials(n, s)) as i64;
        let mut cmp = Comparison::default();
        cmp.record("tangent_dim", tangent.len() as i64, expected_dim);
        cmp.record("meets_dim", meets.len() as i64, expected_dim);
        cmp.record("tangent_in_meets", contained as i64, 1);
        Ok(cmp)
    })
}

/// Compares, degree by degree, the ideal generated by the products
/// `L_1 ... ^L_i ... L_s` with the forms vanishing on `X_F`.
pub fn ideal_claim_hilbert_check<F: Field>(
    field: &F,
    n: usize,
    s: usize,
    degrees: RangeInclusive<usize>,
    seed: u64,
    retries: usize,
) -> Result<VerificationReport> {
    if s < 2 || n < 1 {
        return Err(Error::Domain("ideal claim needs n >= 1 and s >= 2".into()));
    }
    if degrees.is_empty() || *degrees.start() < s - 1 || *degrees.end() > s + 3 {
        return Err(Error::Domain(format!(
            "degree range {degrees:?} must lie in [{}, {}]",
            s - 1,
            s + 3
        )));
    }
    let run = OracleRun {
        name: "ideal-claim",
        params: &[
            ("n", n as u64),
            ("s", s as u64),
            ("t_min", *degrees.start() as u64),
            ("t_max", *degrees.end() as u64),
        ],
        seed,
        field: field.spec(),
        retries,
    };
    run.execute(|attempt_seed| {
        let mut rng = seeded(attempt_seed);
        let ls = random_distinct_linear(field, n, Ring::T, s, &mut rng)?;
        let generators = complementary_products(field, &ls)?;
        let mut cmp = Comparison::default();
        for t in degrees.clone() {
            let multipliers = exponent_table(n, t + 1 - s);
            let mut vectors = Vec::with_capacity(generators.len() * multipliers.len());
            for g in &generators {
                for exps in &multipliers {
                    vectors.push(g.mul(field, &Form::monomial(field, Ring::T, exps))?.into_coeffs());
                }
            }
            let ideal_dim = EchelonSpan::new(field, vectors, num_monomials(n, t)).dim();
            let meets_dim = forms_through_pairwise_meets(field, &ls, t)?.len();
            cmp.record(&format!("dim_t{t}"), ideal_dim as i64, meets_dim as i64);
        }
        if cmp.computed.values().all(|&v| v == 0) {
            return Err(degenerate("every graded piece vanished"));
        }
        Ok(cmp)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{PrimeField, Rationals};
    use crate::polyring::random_distinct_linear;

    fn fp() -> PrimeField {
        PrimeField::default()
    }

    #[test]
    fn tangent_dimensions() {
        let f = fp();
        let ls = random_distinct_linear(&f, 2, Ring::T, 3, &mut seeded(1)).unwrap();
        assert_eq!(chow_tangent_basis(&f, &ls).unwrap().len(), 7);
        let ls = random_distinct_linear(&f, 3, Ring::T, 2, &mut seeded(2)).unwrap();
        assert_eq!(chow_tangent_basis(&f, &ls).unwrap().len(), 7);
        let coords = vec![
            LinearForm::new(&f, Ring::T, vec![1, 0]).unwrap(),
            LinearForm::new(&f, Ring::T, vec![0, 1]).unwrap(),
        ];
        assert_eq!(chow_tangent_basis(&f, &coords).unwrap().len(), 3);
    }

    #[test]
    fn proportional_factors_rejected() {
        let f = fp();
        let l = LinearForm::new(&f, Ring::T, vec![1, 2, 3]).unwrap();
        let m = LinearForm::new(&f, Ring::T, vec![2, 4, 6]).unwrap();
        assert_eq!(chow_tangent_basis(&f, &[l.clone(), m.clone()]), Err(Error::ProportionalFactors(0, 1)));
        assert_eq!(forms_through_pairwise_meets(&f, &[l, m], 2), Err(Error::ProportionalFactors(0, 1)));
    }

    #[test]
    fn meets_dimensions() {
        let f = fp();
        let ls = random_distinct_linear(&f, 2, Ring::T, 3, &mut seeded(4)).unwrap();
        assert_eq!(forms_through_pairwise_meets(&f, &ls, 3).unwrap().len(), 7);
        assert_eq!(forms_through_pairwise_meets(&f, &ls, 2).unwrap().len(), 3);
        assert!(forms_through_pairwise_meets(&f, &ls, 1).unwrap().is_empty());
        let ls = random_distinct_linear(&f, 3, Ring::T, 3, &mut seeded(5)).unwrap();
        assert_eq!(forms_through_pairwise_meets(&f, &ls, 3).unwrap().len(), 10);
    }

    /// Every product `L_1 ... L_s` and every complementary product lies in
    /// the vanishing ideal of the pairwise meets.
    #[test]
    fn products_vanish_on_meets() {
        let f = fp();
        let ls = random_distinct_linear(&f, 3, Ring::T, 4, &mut seeded(6)).unwrap();
        let cond = pairwise_meet_conditions(&f, &ls, 3).unwrap();
        for g in complementary_products(&f, &ls).unwrap() {
            assert!(cond.mul_vec(&f, g.coeffs()).iter().all(|x| *x == 0));
        }
    }

    #[test]
    fn chow_tangent_reports() {
        let f = fp();
        for (n, s, dim) in [(2, 3, 7), (2, 4, 9), (3, 3, 10), (1, 3, 4)] {
            let r = verify_chow_tangent(&f, n, s, 0, 5).unwrap();
            assert!(r.pass, "{r:?}");
            assert_eq!(r.computed["tangent_dim"], dim);
            assert_eq!(r.computed["meets_dim"], dim);
        }
    }

    #[test]
    fn chow_tangent_over_rationals() {
        let r = verify_chow_tangent(&Rationals, 2, 3, 1, 5).unwrap();
        assert!(r.pass);
        assert_eq!(r.field, crate::exactalg::FieldSpec::Rationals);
    }

    #[test]
    fn ideal_claim_small() {
        let f = fp();
        let r = ideal_claim_hilbert_check(&f, 2, 3, 2..=3, 0, 5).unwrap();
        assert!(r.pass);
        assert_eq!(r.computed["dim_t2"], 3);
        assert_eq!(r.computed["dim_t3"], 7);
        let r = ideal_claim_hilbert_check(&f, 3, 3, 2..=4, 9, 5).unwrap();
        assert!(r.pass, "{r:?}");
        assert!(ideal_claim_hilbert_check(&f, 2, 3, 1..=3, 0, 5).is_err());
        assert!(ideal_claim_hilbert_check(&f, 2, 3, 2..=7, 0, 5).is_err());
    }
}
