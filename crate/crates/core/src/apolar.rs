//! Apolarity: catalecticant matrices, graded pieces of `f^perp` and of
//! inverse systems `D^{-1}`, graded pieces of ideals of points, and fitting
//! a form as a combination of powers of given linear forms.

use crate::error::{Error, Result};
use crate::exactalg::{Field, Matrix};
use crate::polyring::{
    check_characteristic, exponent_table, falling_factorial_product, first_proportional_pair, monomial_index,
    num_monomials, Form, LinearForm, Ring,
};

/// Degree-s piece of `f^perp`, as a reduced echelon basis of operators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerpPiece<F: Field> {
    pub n: usize,
    pub d: usize,
    pub s: usize,
    pub basis: Vec<Form<F>>,
}

impl<F: Field> PerpPiece<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn coefficient_rows(&self) -> Vec<Vec<F::Elem>> {
        self.basis.iter().map(|b| b.coeffs().to_vec()).collect()
    }
}

fn require_s(f: &Form<impl Field>) -> Result<()> {
    if f.ring() != Ring::S {
        return Err(Error::RingMismatch(format!("expected a form in S, got {}", f.ring())));
    }
    Ok(())
}

/// Matrix of `T_s -> S_{d-s}, D -> D o f`; rows indexed by the monomials
/// of `S_{d-s}`, columns by those of `T_s`.
pub fn catalecticant<F: Field>(field: &F, f: &Form<F>, s: usize) -> Result<Matrix<F>> {
    require_s(f)?;
    let (n, d) = (f.n(), f.degree());
    if s > d {
        return Err(Error::DegreeMismatch(format!("catalecticant degree {s} exceeds form degree {d}")));
    }
    check_characteristic(field, d)?;
    let rows = exponent_table(n, d - s);
    let cols = exponent_table(n, s);
    let mut m = Matrix::zeros(field, rows.len(), cols.len());
    let mut sum = vec![0u32; n + 1];
    for (c, a) in cols.iter().enumerate() {
        for (r, b) in rows.iter().enumerate() {
            for i in 0..=n {
                sum[i] = a[i] + b[i];
            }
            let coeff = &f.coeffs()[monomial_index(&sum)];
            if field.is_zero(coeff) {
                continue;
            }
            m.set(r, c, field.mul(coeff, &falling_factorial_product(field, &sum, a)));
        }
    }
    Ok(m)
}

pub fn perp_space<F: Field>(field: &F, f: &Form<F>, s: usize) -> Result<PerpPiece<F>> {
    let cat = catalecticant(field, f, s)?;
    let basis = cat
        .kernel_basis(field)
        .into_iter()
        .map(|v| Form::new(f.n(), s, Ring::T, v))
        .collect::<Result<_>>()?;
    Ok(PerpPiece {
        n: f.n(),
        d: f.degree(),
        s,
        basis,
    })
}

/// Matrix of `S_e -> S_{e-s}, g -> D o g` for an operator D of degree s.
fn contraction_by<F: Field>(field: &F, op: &Form<F>, e: usize) -> Matrix<F> {
    let n = op.n();
    let s = op.degree();
    let cols = exponent_table(n, e);
    let mut m = Matrix::zeros(field, num_monomials(n, e - s), cols.len());
    let terms: Vec<_> = op.terms(field).collect();
    let mut rest = vec![0u32; n + 1];
    for (c, b) in cols.iter().enumerate() {
        for (a, ca) in &terms {
            if a.iter().zip(b).any(|(ai, bi)| ai > bi) {
                continue;
            }
            for i in 0..=n {
                rest[i] = b[i] - a[i];
            }
            let r = monomial_index(&rest);
            let t = field.mul(ca, &falling_factorial_product(field, b, a));
            let v = field.add(m.get(r, c), &t);
            m.set(r, c, v);
        }
    }
    m
}

/// Basis of `(D^{-1})_e = { g in S_e : D o g = 0 }`.
pub fn inverse_system<F: Field>(field: &F, op: &Form<F>, e: usize) -> Result<Vec<Form<F>>> {
    if op.ring() != Ring::T {
        return Err(Error::RingMismatch(format!("expected an operator in T, got {}", op.ring())));
    }
    let n = op.n();
    if e < op.degree() {
        return Ok(exponent_table(n, e)
            .iter()
            .map(|exps| Form::monomial(field, Ring::S, exps))
            .collect());
    }
    check_characteristic(field, e)?;
    contraction_by(field, op, e)
        .kernel_basis(field)
        .into_iter()
        .map(|v| Form::new(n, e, Ring::S, v))
        .collect()
}

/// Basis of `(I_X)_s` for the points `X` of the dual projective space given
/// by linear forms in S: one evaluation condition per point.
pub fn point_ideal_piece<F: Field>(field: &F, points: &[LinearForm<F>], s: usize) -> Result<Vec<Form<F>>> {
    let Some(first) = points.first() else {
        return Err(Error::Domain("point_ideal_piece needs at least one point".into()));
    };
    let n = first.n();
    check_points(points, n)?;
    let m = evaluation_matrix(field, points, s);
    m.kernel_basis(field)
        .into_iter()
        .map(|v| Form::new(n, s, Ring::T, v))
        .collect()
}

fn check_points<F: Field>(points: &[LinearForm<F>], n: usize) -> Result<()> {
    if let Some(bad) = points.iter().find(|p| p.n() != n) {
        return Err(Error::VariableMismatch {
            expected: n,
            found: bad.n(),
        });
    }
    if let Some((i, j)) = first_proportional_pair(points) {
        return Err(Error::ProportionalPoints(i, j));
    }
    Ok(())
}

/// Row i holds the degree-s monomials evaluated at point i.
pub fn evaluation_matrix<F: Field>(field: &F, points: &[LinearForm<F>], s: usize) -> Matrix<F> {
    let n = points[0].n();
    let monos = exponent_table(n, s);
    let mut m = Matrix::zeros(field, points.len(), monos.len());
    for (r, p) in points.iter().enumerate() {
        for (c, exps) in monos.iter().enumerate() {
            let v = exps
                .iter()
                .zip(p.coeffs())
                .fold(field.one(), |acc, (&e, x)| field.mul(&acc, &field.pow(x, e as u64)));
            m.set(r, c, v);
        }
    }
    m
}

/// Coefficients `c` with `f = sum c_i l_i^d`, or `None` when f is outside
/// the span of the powers.
pub fn waring_fit<F: Field>(field: &F, f: &Form<F>, points: &[LinearForm<F>]) -> Result<Option<Vec<F::Elem>>> {
    require_s(f)?;
    check_points(points, f.n())?;
    if points.is_empty() {
        return Ok(f.is_zero(field).then(Vec::new));
    }
    let columns: Vec<Vec<F::Elem>> = points
        .iter()
        .map(|l| l.power(field, f.degree()).into_coeffs())
        .collect();
    let m = Matrix::from_columns(num_monomials(f.n(), f.degree()), &columns)?;
    Ok(m.solve(field, f.coeffs()))
}
