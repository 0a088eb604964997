//! GF(2) groundwork: parity kernels, monomials and their orders, sparse
//! polynomials, and small dense bit matrices.

pub mod bitmatrix;
mod monomial;
mod parity;
mod poly;

pub use bitmatrix::BitMatrix;
pub(crate) use monomial::MAX_TOWER;
pub use monomial::{cmp_lex, ExtMonomial, GradedMonomial, Monomial, MonomialOrder, MAX_EXPONENT};
pub use parity::{binom_mod2, multinomial_mod2};
pub use poly::{ExtPolynomial, Polynomial, SparsePoly};
