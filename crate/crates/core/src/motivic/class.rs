//! The class representation: integer-linear combinations of monomials
//! `L^a * g1^e1 * ... * gk^ek` over declared symbolic generators.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, One, Zero};

use crate::error::Error;
use crate::poly::{format_terms, Rational, UniPoly};
use crate::Result;

/// A multiset of generator names, kept sorted. The empty multiset is the
/// pure-Lefschetz part.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct GeneratorPowers(Vec<(String, u32)>);

impl GeneratorPowers {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn single(name: &str) -> Self {
        Self(vec![(name.to_string(), 1)])
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(|(n, _)| n.as_str())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, u32)> {
        self.0.iter().map(|(n, e)| (n.as_str(), *e))
    }

    fn merged(&self, other: &Self) -> Self {
        let mut map: BTreeMap<String, u32> = self.0.iter().cloned().collect();
        for (n, e) in &other.0 {
            *map.entry(n.clone()).or_insert(0) += e;
        }
        Self(map.into_iter().collect())
    }

    fn render(&self, l_power: u32) -> String {
        let mut pieces = Vec::new();
        match l_power {
            0 => {}
            1 => pieces.push("L".to_string()),
            k => pieces.push(format!("L^{k}")),
        }
        for (n, e) in &self.0 {
            match e {
                1 => pieces.push(format!("[{n}]")),
                k => pieces.push(format!("[{n}]^{k}")),
            }
        }
        pieces.join("*")
    }
}

/// Key = (generator multiset, L-exponent); the derived order groups pure-L
/// terms first and sorts by L-degree, which is also the display order.
type Key = (GeneratorPowers, u32);

/// An element of the modelled subring of K0(Var): finitely many terms with
/// integer coefficients. Immutable in practice; all operations are pure.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MotivicClass {
    terms: BTreeMap<Key, BigInt>,
}

impl MotivicClass {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::integer(1)
    }

    pub fn integer(n: i64) -> Self {
        let mut c = Self::zero();
        c.add_term(GeneratorPowers::empty(), 0, BigInt::from(n));
        c
    }

    /// L^k.
    pub fn lefschetz(k: u32) -> Self {
        let mut c = Self::zero();
        c.add_term(GeneratorPowers::empty(), k, BigInt::one());
        c
    }

    /// The class of a declared generator, e.g. `[V]`.
    pub fn generator(name: &str) -> Self {
        let mut c = Self::zero();
        c.add_term(GeneratorPowers::single(name), 0, BigInt::one());
        c
    }

    /// Parses e.g. "1 - L + L^3 - L*[V]". Coefficients must be integers; `L`
    /// is the only plain variable, everything bracketed is a generator.
    pub fn parse(input: &str) -> Result<Self> {
        let ast = crate::poly::parse_expr(input)?;
        eval_class(&ast)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, gens: GeneratorPowers, l_power: u32, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry((gens, l_power)) {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GeneratorPowers, u32, &BigInt)> {
        self.terms.iter().map(|((g, l), c)| (g, *l, c))
    }

    /// Names of all generators that occur.
    pub fn generator_names(&self) -> Vec<String> {
        let mut names: Vec<String> = Vec::new();
        for (g, _) in self.terms.keys() {
            for n in g.names() {
                if !names.iter().any(|m| m == n) {
                    names.push(n.to_string());
                }
            }
        }
        names
    }

    pub fn is_pure_lefschetz(&self) -> bool {
        self.terms.keys().all(|(g, _)| g.is_empty())
    }

    /// Coefficient of L^k in the pure-Lefschetz part.
    pub fn coeff_l(&self, k: u32) -> BigInt {
        self.terms
            .get(&(GeneratorPowers::empty(), k))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// The class as an integer polynomial in L; errors if generators occur.
    pub fn l_polynomial(&self) -> Result<UniPoly> {
        if !self.is_pure_lefschetz() {
            return Err(Error::NotPureLefschetz {
                generators: self.generator_names().join(", "),
            });
        }
        Ok(UniPoly::from_terms(self.terms.iter().map(|((_, l), c)| {
            (*l, Rational::from_integer(c.clone()))
        })))
    }

    /// Builds a class from an integer polynomial in L.
    pub fn from_l_polynomial(p: &UniPoly) -> Result<Self> {
        let mut out = Self::zero();
        for (e, c) in p.terms() {
            if !c.is_integer() {
                return Err(Error::NonIntegerCoefficient {
                    monomial: format!("L^{e}"),
                    coefficient: c.to_string(),
                });
            }
            out.add_term(GeneratorPowers::empty(), e, c.to_integer());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, r)| (k.clone(), r * c)).collect(),
        }
    }

    /// Multiplication by L^k.
    pub fn mul_lefschetz(&self, k: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|((g, l), c)| ((g.clone(), l + k), c.clone()))
                .collect(),
        }
    }

    /// Exact division by L^k; the error carries the offending terms, which is
    /// the divisibility obstruction itself.
    pub fn divide_lefschetz_exact(&self, k: u32) -> Result<Self> {
        for (g, l) in self.terms.keys() {
            if *l < k {
                return Err(Error::DivisibilityViolation {
                    dividend: self.to_canonical(),
                    divisor: format!("L^{k}"),
                    monomial: if g.is_empty() && *l == 0 {
                        "1".to_string()
                    } else {
                        g.render(*l)
                    },
                });
            }
        }
        Ok(Self {
            terms: self
                .terms
                .iter()
                .map(|((g, l), c)| ((g.clone(), l - k), c.clone()))
                .collect(),
        })
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Canonical text, e.g. "1 - L + L^3 - L*[V]".
    pub fn to_canonical(&self) -> String {
        let terms: Vec<(String, Rational)> = self
            .terms
            .iter()
            .map(|((g, l), c)| (g.render(*l), Rational::from_integer(c.clone())))
            .collect();
        format_terms(&terms)
    }
}

impl Add for &MotivicClass {
    type Output = MotivicClass;
    fn add(self, rhs: &MotivicClass) -> MotivicClass {
        let mut out = self.clone();
        for ((g, l), c) in &rhs.terms {
            out.add_term(g.clone(), *l, c.clone());
        }
        out
    }
}

impl Sub for &MotivicClass {
    type Output = MotivicClass;
    fn sub(self, rhs: &MotivicClass) -> MotivicClass {
        let mut out = self.clone();
        for ((g, l), c) in &rhs.terms {
            out.add_term(g.clone(), *l, -c.clone());
        }
        out
    }
}

impl Mul for &MotivicClass {
    type Output = MotivicClass;
    fn mul(self, rhs: &MotivicClass) -> MotivicClass {
        let mut out = MotivicClass::zero();
        for ((g1, l1), c1) in &self.terms {
            for ((g2, l2), c2) in &rhs.terms {
                out.add_term(g1.merged(g2), l1 + l2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &MotivicClass {
    type Output = MotivicClass;
    fn neg(self) -> MotivicClass {
        MotivicClass {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl std::fmt::Display for MotivicClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_canonical())
    }
}

fn eval_class(ast: &crate::poly::Ast) -> Result<MotivicClass> {
    use crate::poly::Ast;
    match ast {
        Ast::Num(r) => {
            if !r.is_integer() {
                return Err(Error::NonIntegerCoefficient {
                    monomial: "1".to_string(),
                    coefficient: r.to_string(),
                });
            }
            let mut c = MotivicClass::zero();
            c.add_term(GeneratorPowers::empty(), 0, r.to_integer());
            Ok(c)
        }
        Ast::Var(name) if name == "L" => Ok(MotivicClass::lefschetz(1)),
        Ast::Var(name) => Err(Error::UnknownVariable {
            name: format!("{name} (class expressions use L and bracketed generators)"),
        }),
        Ast::Gen(name) => Ok(MotivicClass::generator(name)),
        Ast::Add(a, b) => Ok(&eval_class(a)? + &eval_class(b)?),
        Ast::Sub(a, b) => Ok(&eval_class(a)? - &eval_class(b)?),
        Ast::Mul(a, b) => Ok(&eval_class(a)? * &eval_class(b)?),
        Ast::Pow(a, e) => Ok(eval_class(a)?.pow(*e)),
        Ast::Neg(a) => Ok(-&eval_class(a)?),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_groups_pure_terms_first() {
        let v = MotivicClass::generator("V");
        let c = &(&(&MotivicClass::one() - &MotivicClass::lefschetz(1))
            + &MotivicClass::lefschetz(3))
            - &(&MotivicClass::lefschetz(1) * &v);
        assert_eq!(c.to_canonical(), "1 - L + L^3 - L*[V]");
    }

    #[test]
    fn parse_round_trip() {
        let c = MotivicClass::parse("1 - L + L^3 - L*[V]").unwrap();
        assert_eq!(c.to_canonical(), "1 - L + L^3 - L*[V]");
        assert!(!c.is_pure_lefschetz());
        assert_eq!(c.generator_names(), vec!["V".to_string()]);
    }

    #[test]
    fn parse_rejects_fractional_coefficients() {
        assert!(MotivicClass::parse("1/2 L").is_err());
    }

    #[test]
    fn generator_products_representable() {
        let v = MotivicClass::generator("V");
        let sq = &v * &v;
        assert_eq!(sq.to_canonical(), "[V]^2");
        let lv = &MotivicClass::lefschetz(2) * &v;
        assert_eq!(lv.to_canonical(), "L^2*[V]");
    }

    #[test]
    fn lefschetz_division() {
        let c = MotivicClass::parse("27 L^2").unwrap();
        assert_eq!(
            c.divide_lefschetz_exact(2).unwrap(),
            MotivicClass::integer(27)
        );
        let err = MotivicClass::parse("1 + L^2")
            .unwrap()
            .divide_lefschetz_exact(2);
        assert!(matches!(err, Err(Error::DivisibilityViolation { .. })));
    }

    #[test]
    fn l_polynomial_round_trip() {
        let c = MotivicClass::parse("1 + 7L + L^2").unwrap();
        let p = c.l_polynomial().unwrap();
        assert_eq!(MotivicClass::from_l_polynomial(&p).unwrap(), c);
        assert!(MotivicClass::parse("1 + [V]")
            .unwrap()
            .l_polynomial()
            .is_err());
    }
}
