//! Bivariate exact-rational polynomials; the home of Hodge-Deligne values.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Zero};

use super::{format_monomial, format_terms, Rational, UniPoly};
use crate::error::Error;
use crate::Result;

/// Sparse polynomial in two anonymous variables (rendered as u, v).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BiPoly {
    coeffs: BTreeMap<(u32, u32), Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn monomial(eu: u32, ev: u32, coeff: Rational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert((eu, ev), coeff);
        }
        Self { coeffs }
    }

    pub fn from_terms<I: IntoIterator<Item = (u32, u32, Rational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (a, b, c) in terms {
            p.add_term(a, b, c);
        }
        p
    }

    pub fn parse(input: &str, u: &str, v: &str) -> Result<Self> {
        let p = super::MultiPoly::parse(input, &[u, v])?;
        p.to_bipoly(u, v)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, eu: u32, ev: u32) -> Rational {
        self.coeffs
            .get(&(eu, ev))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &Rational)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn add_term(&mut self, eu: u32, ev: u32, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry((eu, ev)).or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&(eu, ev));
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(k, r)| (*k, r * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// (u, v) -> (u^k, v^k).
    pub fn compose_power(&self, k: u32) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|((a, b), c)| ((a * k, b * k), c.clone()))
                .collect(),
        }
    }

    /// Diagonal specialization (u, v) -> (t, t).
    pub fn specialize_diagonal(&self) -> UniPoly {
        let mut out = UniPoly::zero();
        for ((a, b), c) in &self.coeffs {
            out.add_term(a + b, c.clone());
        }
        out
    }

    /// Drops every monomial divisible by u*v. Idempotent.
    pub fn mod_uv(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .filter(|((a, b), _)| *a == 0 || *b == 0)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        }
    }

    /// Exact division by the monomial u^ku * v^kv.
    pub fn divide_exact(&self, ku: u32, kv: u32, u: &str, v: &str) -> Result<Self> {
        let mut out = BTreeMap::new();
        for ((a, b), c) in &self.coeffs {
            if *a < ku || *b < kv {
                return Err(Error::DivisibilityViolation {
                    dividend: self.to_canonical(u, v),
                    divisor: format_monomial(&[(u, ku), (v, kv)]),
                    monomial: if *a == 0 && *b == 0 {
                        "1".to_string()
                    } else {
                        format_monomial(&[(u, *a), (v, *b)])
                    },
                });
            }
            out.insert((a - ku, b - kv), c.clone());
        }
        Ok(Self { coeffs: out })
    }

    /// Canonical text: ascending total degree, u-heavier monomials first
    /// within a degree.
    pub fn to_canonical(&self, u: &str, v: &str) -> String {
        let mut keys: Vec<(u32, u32)> = self.coeffs.keys().copied().collect();
        keys.sort_by_key(|(a, b)| (a + b, std::cmp::Reverse((*a, *b))));
        let terms: Vec<(String, Rational)> = keys
            .into_iter()
            .map(|(a, b)| (format_monomial(&[(u, a), (v, b)]), self.coeff(a, b)))
            .collect();
        format_terms(&terms)
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for ((a, b), c) in &rhs.coeffs {
            out.add_term(*a, *b, c.clone());
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for ((a, b), c) in &rhs.coeffs {
            out.add_term(*a, *b, -c.clone());
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for ((a1, b1), c1) in &self.coeffs {
            for ((a2, b2), c2) in &rhs.coeffs {
                out.add_term(a1 + a2, b1 + b2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, -c.clone())).collect(),
        }
    }
}

impl std::fmt::Display for BiPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_canonical("u", "v"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> BiPoly {
        BiPoly::parse(s, "u", "v").unwrap()
    }

    #[test]
    fn mod_uv_strips_mixed_monomials() {
        assert_eq!(p("1 - 4u - 4v + u*v").mod_uv(), p("1 - 4u - 4v"));
        assert_eq!(p("u^2*v^3").mod_uv(), BiPoly::zero());
        let q = p("3 + u^5 - 2*v + u*v^4");
        assert_eq!(q.mod_uv().mod_uv(), q.mod_uv());
    }

    #[test]
    fn diagonal_specialization() {
        assert_eq!(
            p("1 - 4u - 4v + u*v").specialize_diagonal(),
            UniPoly::parse("1 - 8t + t^2", "t").unwrap()
        );
    }

    #[test]
    fn compose_power_doubles() {
        assert_eq!(
            p("1 - 4u - 4v + u*v").compose_power(2),
            p("1 - 4u^2 - 4v^2 + u^2*v^2")
        );
    }

    #[test]
    fn canonical_rendering_orders_u_first() {
        assert_eq!(
            p("v + u - 4 + v^2 + u*v").to_canonical("u", "v"),
            "-4 + u + v + u*v + v^2"
        );
    }

    #[test]
    fn exact_division_by_uv_square() {
        let n = p("u^2*v^2 + 3*u^3*v^2");
        assert_eq!(n.divide_exact(2, 2, "u", "v").unwrap(), p("1 + 3u"));
        assert!(p("u + u^2*v^2").divide_exact(2, 2, "u", "v").is_err());
    }
}
