//! Dense homogeneous polynomials in S = k[X_0..X_n] and operators in
//! T = k[d_0..d_n], with T acting on S by differentiation.

mod form;
mod monomial;

pub use form::{
    apply, check_characteristic, first_proportional_pair, product, random_distinct_linear, random_form,
    random_linear, Form, LinearForm, Ring, DISTINCT_DRAW_LIMIT,
};
pub(crate) use form::falling_factorial_product;
pub use monomial::{monomial_basis, monomial_index, num_monomials, MultiIndex};
pub(crate) use monomial::exponent_table;
