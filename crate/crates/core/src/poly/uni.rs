//! Univariate exact-rational polynomials, keyed by exponent.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Zero};

use super::{format_monomial, format_terms, Rational};
use crate::error::Error;
use crate::Result;

/// Sparse polynomial in one variable. The variable is anonymous; rendering
/// takes the name. The degree of the zero polynomial is `None` (the "minus
/// infinity" marker).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: BTreeMap<u32, Rational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(exp: u32, coeff: Rational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(exp, coeff);
        }
        Self { coeffs }
    }

    pub fn from_terms<I: IntoIterator<Item = (u32, Rational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Parses canonical text like "1 + 7*t^2 + t^4" (also accepts implicit
    /// multiplication, e.g. "7t^2"). `var` is the only admissible variable.
    pub fn parse(input: &str, var: &str) -> Result<Self> {
        let p = super::MultiPoly::parse(input, &[var])?;
        p.to_unipoly(var)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, exp: u32) -> Rational {
        self.coeffs
            .get(&exp)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn leading_coeff(&self) -> Rational {
        self.degree()
            .map(|d| self.coeff(d))
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Rational)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn add_term(&mut self, exp: u32, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes t -> t^k, i.e. p(t^k).
    pub fn compose_power(&self, k: u32) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (e * k, c.clone()))
                .collect(),
        }
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        let mut last = 0u32;
        let mut pw = Rational::one();
        for (e, c) in &self.coeffs {
            for _ in last..*e {
                pw *= x;
            }
            last = *e;
            acc += c * &pw;
        }
        acc
    }

    /// Exact division by the monomial t^k. Failure carries the offending
    /// monomial; it is a mathematical conclusion, not a malfunction.
    pub fn divide_exact(&self, k: u32, var: &str) -> Result<Self> {
        let mut out = BTreeMap::new();
        for (e, c) in &self.coeffs {
            if *e < k {
                return Err(Error::DivisibilityViolation {
                    dividend: self.to_canonical(var),
                    divisor: format_monomial(&[(var, k)]),
                    monomial: if *e == 0 {
                        "1".to_string()
                    } else {
                        format_monomial(&[(var, *e)])
                    },
                });
            }
            out.insert(e - k, c.clone());
        }
        Ok(Self { coeffs: out })
    }

    /// True when all coefficients are non-negative integers.
    pub fn is_betti_like(&self) -> bool {
        use num::Signed;
        self.coeffs
            .values()
            .all(|c| c.is_integer() && !c.is_negative())
    }

    /// Coefficients mirror-symmetric about degree/2 (Poincare duality).
    pub fn is_palindromic(&self) -> bool {
        match self.degree() {
            None => true,
            Some(d) => (0..=d).all(|e| self.coeff(e) == self.coeff(d - e)),
        }
    }

    /// Canonical text form, terms in ascending degree.
    pub fn to_canonical(&self, var: &str) -> String {
        let terms: Vec<(String, Rational)> = self
            .coeffs
            .iter()
            .map(|(e, c)| (format_monomial(&[(var, *e)]), c.clone()))
            .collect();
        format_terms(&terms)
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        let mut out = UniPoly::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl std::fmt::Display for UniPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_canonical("t"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn p(s: &str) -> UniPoly {
        UniPoly::parse(s, "t").unwrap()
    }

    #[test]
    fn zero_degree_marker() {
        assert_eq!(UniPoly::zero().degree(), None);
        assert_eq!(p("1").degree(), Some(0));
        assert_eq!(p("t^4 + 1").degree(), Some(4));
    }

    #[test]
    fn difference_of_squares() {
        let a = p("1 + t^2");
        let b = p("1 - t^2");
        assert_eq!(&a * &b, p("1 - t^4"));
    }

    #[test]
    fn additive_identity() {
        let a = p("3/2 + t^3");
        assert_eq!(&a + &UniPoly::zero(), a);
    }

    #[test]
    fn compose_power_squares_exponents() {
        assert_eq!(p("1 + 7*t^2 + t^4").compose_power(2), p("1 + 7*t^4 + t^8"));
    }

    #[test]
    fn eval_exact() {
        // (1 + L + L^2) at L = 2
        assert_eq!(p("1 + t + t^2").eval(&rat(2)), rat(7));
    }

    #[test]
    fn divide_exact_and_violation() {
        assert_eq!(p("t^4 + t^6").divide_exact(4, "t").unwrap(), p("1 + t^2"));
        let err = p("1 + t^4").divide_exact(4, "t").unwrap_err();
        match err {
            Error::DivisibilityViolation { monomial, .. } => assert_eq!(monomial, "1"),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn canonical_rendering() {
        assert_eq!(
            p("1 + 7t + 29t^2 + 7t^3 + t^4").to_canonical("L"),
            "1 + 7*L + 29*L^2 + 7*L^3 + L^4"
        );
        assert_eq!(UniPoly::zero().to_canonical("t"), "0");
        assert_eq!(p("-t + 1/2").to_canonical("t"), "1/2 - t");
    }

    #[test]
    fn palindromic_check() {
        assert!(p("1 + 7t^2 + t^4").is_palindromic());
        assert!(!p("1 + 7t^2 + 2*t^4").is_palindromic());
    }
}
