use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::Field;

use super::monomial::{exponent_table, monomial_index, num_monomials};

/// Which side of the apolarity pairing a form lives on: polynomials
/// `S = k[X_0..X_n]` or differential operators `T = k[d_0..d_n]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Ring {
    S,
    T,
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::S => f.write_str("S"),
            Ring::T => f.write_str("T"),
        }
    }
}

/// Dense homogeneous form. Coefficients follow [`super::monomial_basis`]
/// for `(n, degree)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Form<F: Field> {
    n: usize,
    degree: usize,
    ring: Ring,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> Form<F> {
    pub fn new(n: usize, degree: usize, ring: Ring, coeffs: Vec<F::Elem>) -> Result<Self> {
        let expected = num_monomials(n, degree);
        if coeffs.len() != expected {
            return Err(Error::LengthMismatch {
                expected,
                found: coeffs.len(),
            });
        }
        Ok(Self {
            n,
            degree,
            ring,
            coeffs,
        })
    }

    pub fn zero(field: &F, n: usize, degree: usize, ring: Ring) -> Self {
        Self {
            n,
            degree,
            ring,
            coeffs: vec![field.zero(); num_monomials(n, degree)],
        }
    }

    pub fn constant(n: usize, ring: Ring, c: F::Elem) -> Self {
        Self {
            n,
            degree: 0,
            ring,
            coeffs: vec![c],
        }
    }

    pub fn monomial(field: &F, ring: Ring, exps: &[u32]) -> Self {
        let n = exps.len() - 1;
        let degree = exps.iter().map(|&e| e as usize).sum();
        let mut f = Self::zero(field, n, degree, ring);
        f.coeffs[monomial_index(exps)] = field.one();
        f
    }

    /// The i-th coordinate `X_i` (ring S) or `d_i` (ring T).
    pub fn variable(field: &F, n: usize, ring: Ring, i: usize) -> Self {
        let mut exps = vec![0; n + 1];
        exps[i] = 1;
        Self::monomial(field, ring, &exps)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F::Elem> {
        self.coeffs
    }

    pub fn coeff(&self, exps: &[u32]) -> &F::Elem {
        &self.coeffs[monomial_index(exps)]
    }

    pub fn is_zero(&self, field: &F) -> bool {
        self.coeffs.iter().all(|c| field.is_zero(c))
    }

    /// Nonzero terms as (exponents, coefficient).
    pub fn terms<'a>(&'a self, field: &'a F) -> impl Iterator<Item = (Vec<u32>, &'a F::Elem)> + 'a {
        exponent_table(self.n, self.degree)
            .into_iter()
            .zip(&self.coeffs)
            .filter(move |(_, c)| !field.is_zero(c))
    }

    pub fn with_ring(mut self, ring: Ring) -> Self {
        self.ring = ring;
        self
    }

    fn check_same_space(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::VariableMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        if self.ring != other.ring {
            return Err(Error::RingMismatch(format!("{} vs {}", self.ring, other.ring)));
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(format!(
                "cannot add forms of degree {} and {}",
                self.degree, other.degree
            )));
        }
        Ok(())
    }

    pub fn add(&self, field: &F, other: &Self) -> Result<Self> {
        self.check_same_space(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| field.add(a, b))
            .collect();
        Ok(self.with_coeffs(coeffs))
    }

    pub fn sub(&self, field: &F, other: &Self) -> Result<Self> {
        self.check_same_space(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| field.sub(a, b))
            .collect();
        Ok(self.with_coeffs(coeffs))
    }

    pub fn scale(&self, field: &F, c: &F::Elem) -> Self {
        let coeffs = self.coeffs.iter().map(|a| field.mul(a, c)).collect();
        self.with_coeffs(coeffs)
    }

    fn with_coeffs(&self, coeffs: Vec<F::Elem>) -> Self {
        Self {
            n: self.n,
            degree: self.degree,
            ring: self.ring,
            coeffs,
        }
    }

    pub fn mul(&self, field: &F, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::VariableMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        if self.ring != other.ring {
            return Err(Error::RingMismatch(format!("{} vs {}", self.ring, other.ring)));
        }
        let mut out = Self::zero(field, self.n, self.degree + other.degree, self.ring);
        let rhs: Vec<_> = other.terms(field).collect();
        let mut exps = vec![0u32; self.n + 1];
        for (a, ca) in self.terms(field) {
            for (b, cb) in &rhs {
                for i in 0..=self.n {
                    exps[i] = a[i] + b[i];
                }
                let idx = monomial_index(&exps);
                out.coeffs[idx] = field.add(&out.coeffs[idx], &field.mul(ca, cb));
            }
        }
        Ok(out)
    }

    pub fn evaluate(&self, field: &F, point: &[F::Elem]) -> Result<F::Elem> {
        if point.len() != self.n + 1 {
            return Err(Error::LengthMismatch {
                expected: self.n + 1,
                found: point.len(),
            });
        }
        let mut acc = field.zero();
        for (exps, c) in self.terms(field) {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&exps) {
                if e > 0 {
                    t = field.mul(&t, &field.pow(x, e as u64));
                }
            }
            acc = field.add(&acc, &t);
        }
        Ok(acc)
    }

    /// Derivative with respect to the i-th variable, as the action of `d_i`.
    pub fn partial(&self, field: &F, i: usize) -> Result<Self> {
        let op = Form::variable(field, self.n, Ring::T, i);
        apply(field, &op, self)
    }
}

/// Fails when the field characteristic does not exceed `degree`, since the
/// integer constants produced by differentiation must stay invertible.
pub fn check_characteristic<F: Field>(field: &F, degree: usize) -> Result<()> {
    let p = field.characteristic();
    if p != 0 && p <= degree as u64 {
        return Err(Error::CharacteristicTooSmall {
            characteristic: p,
            degree,
        });
    }
    Ok(())
}

/// Product over coordinates of `b_i! / (b_i - a_i)!`, computed in the field.
pub(crate) fn falling_factorial_product<F: Field>(field: &F, b: &[u32], a: &[u32]) -> F::Elem {
    let mut acc = field.one();
    for (&bi, &ai) in b.iter().zip(a) {
        for k in (bi - ai + 1)..=bi {
            acc = field.mul(&acc, &field.from_u64(k as u64));
        }
    }
    acc
}

/// The apolarity action `D o f` of an operator in T of degree s on a form
/// in S of degree d, giving a form in S of degree d - s.
pub fn apply<F: Field>(field: &F, op: &Form<F>, f: &Form<F>) -> Result<Form<F>> {
    if op.ring != Ring::T || f.ring != Ring::S {
        return Err(Error::RingMismatch(format!(
            "apply needs an operator in T and a form in S, got {} and {}",
            op.ring, f.ring
        )));
    }
    if op.n != f.n {
        return Err(Error::VariableMismatch {
            expected: f.n,
            found: op.n,
        });
    }
    if op.degree > f.degree {
        return Err(Error::DegreeMismatch(format!(
            "operator degree {} exceeds form degree {}",
            op.degree, f.degree
        )));
    }
    check_characteristic(field, f.degree)?;
    let mut out = Form::zero(field, f.n, f.degree - op.degree, Ring::S);
    let targets: Vec<_> = f.terms(field).collect();
    let mut rest = vec![0u32; f.n + 1];
    for (a, ca) in op.terms(field) {
        for (b, cb) in &targets {
            if a.iter().zip(b).any(|(ai, bi)| ai > bi) {
                continue;
            }
            for i in 0..=f.n {
                rest[i] = b[i] - a[i];
            }
            let k = falling_factorial_product(field, b, &a);
            let idx = monomial_index(&rest);
            let t = field.mul(&field.mul(ca, cb), &k);
            out.coeffs[idx] = field.add(&out.coeffs[idx], &t);
        }
    }
    Ok(out)
}

/// Product of forms from the same ring and variable count.
pub fn product<F: Field>(field: &F, factors: &[Form<F>]) -> Result<Form<F>> {
    let (first, rest) = factors
        .split_first()
        .ok_or_else(|| Error::Domain("product of an empty list of factors".into()))?;
    rest.iter().try_fold(first.clone(), |acc, g| acc.mul(field, g))
}

pub fn random_form<F: Field, R: Rng + ?Sized>(field: &F, n: usize, d: usize, ring: Ring, rng: &mut R) -> Form<F> {
    let coeffs = (0..num_monomials(n, d)).map(|_| field.random(rng)).collect();
    Form {
        n,
        degree: d,
        ring,
        coeffs,
    }
}

/// Linear form, projectively normalized so that its first nonzero
/// coefficient is 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearForm<F: Field> {
    ring: Ring,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> LinearForm<F> {
    pub fn new(field: &F, ring: Ring, coeffs: Vec<F::Elem>) -> Result<Self> {
        let lead = coeffs
            .iter()
            .find(|c| !field.is_zero(c))
            .ok_or(Error::ZeroLinearForm)?;
        let inv = field.inv(lead).expect("leading coefficient is nonzero");
        let coeffs = coeffs.iter().map(|c| field.mul(c, &inv)).collect();
        Ok(Self { ring, coeffs })
    }

    pub fn n(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    /// Normalized representatives coincide.
    pub fn is_proportional(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }

    pub fn to_form(&self) -> Form<F> {
        Form {
            n: self.n(),
            degree: 1,
            ring: self.ring,
            coeffs: self.coeffs.clone(),
        }
    }

    /// The same coefficient vector read on the other side of the pairing.
    pub fn dual(&self) -> Self {
        Self {
            ring: match self.ring {
                Ring::S => Ring::T,
                Ring::T => Ring::S,
            },
            coeffs: self.coeffs.clone(),
        }
    }

    /// `self^d` by repeated multiplication.
    pub fn power(&self, field: &F, d: usize) -> Form<F> {
        let lin = self.to_form();
        let mut acc = Form::constant(self.n(), self.ring, field.one());
        for _ in 0..d {
            acc = acc.mul(field, &lin).expect("same ring and variable count");
        }
        acc
    }

    /// Pairing of a linear operator with a point: `sum c_i x_i`.
    pub fn pair(&self, field: &F, point: &[F::Elem]) -> F::Elem {
        crate::exactalg::dot(field, &self.coeffs, point)
    }
}

pub fn random_linear<F: Field, R: Rng + ?Sized>(field: &F, n: usize, ring: Ring, rng: &mut R) -> LinearForm<F> {
    loop {
        let coeffs = (0..=n).map(|_| field.random(rng)).collect();
        if let Ok(l) = LinearForm::new(field, ring, coeffs) {
            return l;
        }
    }
}

/// Number of redraws allowed when asking for pairwise distinct random
/// linear forms.
pub const DISTINCT_DRAW_LIMIT: usize = 1000;

/// `count` pairwise non-proportional random linear forms.
pub fn random_distinct_linear<F: Field, R: Rng + ?Sized>(
    field: &F,
    n: usize,
    ring: Ring,
    count: usize,
    rng: &mut R,
) -> Result<Vec<LinearForm<F>>> {
    let mut out: Vec<LinearForm<F>> = Vec::with_capacity(count);
    let mut draws = 0;
    while out.len() < count {
        if draws == DISTINCT_DRAW_LIMIT {
            return Err(Error::GenericityFailure {
                attempts: draws,
                reason: format!("could not draw {count} distinct linear forms in {n}+1 variables"),
            });
        }
        draws += 1;
        let l = random_linear(field, n, ring, rng);
        if !out.iter().any(|m| m.is_proportional(&l)) {
            out.push(l);
        }
    }
    Ok(out)
}

/// Index pair of the first two proportional entries, if any.
pub fn first_proportional_pair<F: Field>(forms: &[LinearForm<F>]) -> Option<(usize, usize)> {
    for i in 0..forms.len() {
        for j in i + 1..forms.len() {
            if forms[i].is_proportional(&forms[j]) {
                return Some((i, j));
            }
        }
    }
    None
}
