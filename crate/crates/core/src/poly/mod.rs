//! Exact-rational sparse polynomials in one, two, and many variables, with
//! truncated power-series expansion. This is the numeric substrate for the
//! whole crate: every coefficient is a reduced `BigRational`, zero
//! coefficients are never stored, and nothing is ever rounded.

mod bi;
mod multi;
mod parse;
mod uni;

pub use bi::BiPoly;
pub use multi::MultiPoly;
pub(crate) use parse::parse as parse_expr;
pub use parse::Ast;
pub use uni::UniPoly;

pub use num::BigInt;
/// Arbitrary-precision rational scalar. Always reduced, denominator > 0;
/// both invariants are maintained by the representation itself.
pub use num::BigRational as Rational;

use num::{One, Signed};

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational n/d. Panics on d = 0, like the underlying constructor.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Generalized binomial coefficient C(e, j) for integer e (possibly
/// negative): e (e-1) ... (e-j+1) / j!.
pub fn binomial(e: i64, j: u32) -> Rational {
    let mut acc = Rational::one();
    for i in 0..j as i64 {
        acc *= Rational::new(BigInt::from(e - i), BigInt::from(i + 1));
    }
    acc
}

/// Renders a term list as canonical text: terms are expected in canonical
/// order already, monomials come pre-rendered ("" for the constant term).
/// Produces e.g. "1 + 7*L + 29*L^2" or "1 - 4*u - 4*v + u*v".
pub(crate) fn format_terms(terms: &[(String, Rational)]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (mono, coeff)) in terms.iter().enumerate() {
        let neg = coeff.is_negative();
        let abs = coeff.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mono.is_empty() {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(mono);
        } else {
            out.push_str(&abs.to_string());
            out.push('*');
            out.push_str(mono);
        }
    }
    out
}

/// Renders one monomial from (name, exponent) pairs, skipping zero exponents.
pub(crate) fn format_monomial(parts: &[(&str, u32)]) -> String {
    let mut pieces = Vec::new();
    for &(name, e) in parts {
        match e {
            0 => {}
            1 => pieces.push(name.to_string()),
            _ => pieces.push(format!("{name}^{e}")),
        }
    }
    pieces.join("*")
}
