//! Multivariate exact-rational polynomials over a named, ordered variable
//! list. Operations require both sides to share the same variable list;
//! callers align rings up front (canonical ordering fixed per computation),
//! which rules out silent variable capture in substitutions like t -> t^2.

use std::collections::BTreeMap;

use num::{One, Zero};

use super::{binomial, format_monomial, format_terms, BiPoly, Rational, UniPoly};
use crate::error::Error;
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Vec<String>,
    coeffs: BTreeMap<Vec<u32>, Rational>,
}

impl MultiPoly {
    pub fn zero(vars: &[&str]) -> Self {
        Self {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            coeffs: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[&str], c: Rational) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(vec![0; p.vars.len()], c);
        p
    }

    pub fn one(vars: &[&str]) -> Self {
        Self::constant(vars, Rational::one())
    }

    /// The variable `name` as a polynomial in the given ring.
    pub fn var(vars: &[&str], name: &str) -> Result<Self> {
        let mut p = Self::zero(vars);
        let idx = p.var_index(name)?;
        let mut exps = vec![0; p.vars.len()];
        exps[idx] = 1;
        p.add_term(exps, Rational::one());
        Ok(p)
    }

    pub fn monomial(vars: &[&str], exps: Vec<u32>, coeff: Rational) -> Self {
        let mut p = Self::zero(vars);
        assert_eq!(exps.len(), p.vars.len(), "exponent vector length mismatch");
        p.add_term(exps, coeff);
        p
    }

    /// Parses an expression over exactly the given variables.
    pub fn parse(input: &str, vars: &[&str]) -> Result<Self> {
        let ast = super::parse::parse(input)?;
        ast.to_multipoly(vars)
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable {
                name: name.to_string(),
            })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    /// The constant term as a rational.
    pub fn constant_term(&self) -> Rational {
        self.coeffs
            .get(&vec![0; self.vars.len()])
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn coeff_of(&self, exps: &[u32]) -> Rational {
        self.coeffs
            .get(exps)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.coeffs.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.coeffs.keys().map(|e| e.iter().sum()).max()
    }

    pub fn degree_in(&self, var: &str) -> Result<Option<u32>> {
        let idx = self.var_index(var)?;
        Ok(self.coeffs.keys().map(|e| e[idx]).max())
    }

    pub fn add_term(&mut self, exps: Vec<u32>, coeff: Rational) {
        debug_assert_eq!(exps.len(), self.vars.len());
        if coeff.is_zero() {
            return;
        }
        match self.coeffs.entry(exps) {
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

    fn check_same_vars(&self, rhs: &Self) -> Result<()> {
        if self.vars != rhs.vars {
            return Err(Error::VariableMismatch {
                left: self.vars.join(", "),
                right: rhs.vars.join(", "),
            });
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_same_vars(rhs)?;
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.check_same_vars(rhs)?;
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.check_same_vars(rhs)?;
        let mut out = Self {
            vars: self.vars.clone(),
            coeffs: BTreeMap::new(),
        };
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                let exps: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(exps, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        Self {
            vars: self.vars.clone(),
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self {
                vars: self.vars.clone(),
                coeffs: BTreeMap::new(),
            };
        }
        Self {
            vars: self.vars.clone(),
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, r)| (e.clone(), r * c))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Result<Self> {
        let mut acc = Self::one(&self.var_refs());
        for _ in 0..n {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    fn var_refs(&self) -> Vec<&str> {
        self.vars.iter().map(|s| s.as_str()).collect()
    }

    /// Exact composition: each assigned variable is replaced by its image;
    /// unassigned variables are retained (they must exist in the image ring).
    /// All images must live in one common ring, which is also the result
    /// ring.
    pub fn substitute(&self, assignments: &BTreeMap<String, MultiPoly>) -> Result<Self> {
        let target_vars: Vec<String> = match assignments.values().next() {
            Some(img) => img.vars.clone(),
            None => self.vars.clone(),
        };
        let target_refs: Vec<&str> = target_vars.iter().map(|s| s.as_str()).collect();
        // image of every source variable in the target ring
        let mut images = Vec::with_capacity(self.vars.len());
        for v in &self.vars {
            match assignments.get(v) {
                Some(img) => {
                    if img.vars != target_vars {
                        return Err(Error::VariableMismatch {
                            left: img.vars.join(", "),
                            right: target_vars.join(", "),
                        });
                    }
                    images.push(img.clone());
                }
                None => images.push(Self::var(&target_refs, v)?),
            }
        }
        let mut out = Self::zero(&target_refs);
        for (exps, coeff) in &self.coeffs {
            let mut term = Self::constant(&target_refs, coeff.clone());
            for (i, &e) in exps.iter().enumerate() {
                if e > 0 {
                    term = term.mul(&images[i].pow(e)?)?;
                }
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Drops every term whose exponent in `var` exceeds `order`.
    pub fn truncate_in(&self, var: &str, order: u32) -> Result<Self> {
        let idx = self.var_index(var)?;
        Ok(Self {
            vars: self.vars.clone(),
            coeffs: self
                .coeffs
                .iter()
                .filter(|(e, _)| e[idx] <= order)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        })
    }

    /// Truncated binomial power series: self^exponent modulo terms of
    /// `var`-order > `order`. For non-negative exponents this is plain
    /// truncated exponentiation. For negative exponents the slice of self at
    /// var^0 must be a nonzero constant (the only units in the coefficient
    /// ring).
    pub fn series_binomial(&self, exponent: i64, order: u32, var: &str) -> Result<Self> {
        let idx = self.var_index(var)?;
        if exponent >= 0 {
            return self.pow(exponent as u32)?.truncate_in(var, order);
        }
        // constant-slice check
        let mut slice = Self::zero(&self.var_refs());
        for (e, c) in &self.coeffs {
            if e[idx] == 0 {
                slice.add_term(e.clone(), c.clone());
            }
        }
        if !slice.is_constant() || slice.is_zero() {
            return Err(Error::NonInvertibleSeries {
                base: self.to_canonical(),
                var: var.to_string(),
            });
        }
        let c0 = slice.constant_term();
        // self = c0 (1 + w) with w of var-order >= 1 after scaling
        let unit = self.scale(&(Rational::one() / &c0));
        let w = unit.sub(&Self::one(&self.var_refs()))?;
        let mut acc = Self::one(&self.var_refs());
        let mut wpow = Self::one(&self.var_refs());
        for j in 1..=order {
            wpow = wpow.mul(&w)?.truncate_in(var, order)?;
            if wpow.is_zero() {
                break;
            }
            acc = acc.add(&wpow.scale(&binomial(exponent, j)))?;
        }
        // c0^exponent with a negative integer exponent
        let c0_pow = {
            let mut p = Rational::one();
            for _ in 0..(-exponent) {
                p /= &c0;
            }
            p
        };
        acc.scale(&c0_pow).truncate_in(var, order)
    }

    /// The coefficient of var^k, as a polynomial in the same ring with the
    /// `var`-exponent zeroed out.
    pub fn coefficient_of_power(&self, var: &str, k: u32) -> Result<Self> {
        let idx = self.var_index(var)?;
        let mut out = Self::zero(&self.var_refs());
        for (e, c) in &self.coeffs {
            if e[idx] == k {
                let mut exps = e.clone();
                exps[idx] = 0;
                out.add_term(exps, c.clone());
            }
        }
        Ok(out)
    }

    /// Converts to a univariate polynomial; every variable other than `var`
    /// must be absent.
    pub fn to_unipoly(&self, var: &str) -> Result<UniPoly> {
        let idx = self.var_index(var)?;
        let mut out = UniPoly::zero();
        for (e, c) in &self.coeffs {
            for (i, &x) in e.iter().enumerate() {
                if i != idx && x != 0 {
                    return Err(Error::UnknownVariable {
                        name: format!("{} (expected a polynomial in {} only)", self.vars[i], var),
                    });
                }
            }
            out.add_term(e[idx], c.clone());
        }
        Ok(out)
    }

    pub fn to_bipoly(&self, u: &str, v: &str) -> Result<BiPoly> {
        let iu = self.var_index(u)?;
        let iv = self.var_index(v)?;
        let mut out = BiPoly::zero();
        for (e, c) in &self.coeffs {
            for (i, &x) in e.iter().enumerate() {
                if i != iu && i != iv && x != 0 {
                    return Err(Error::UnknownVariable {
                        name: format!(
                            "{} (expected a polynomial in {}, {} only)",
                            self.vars[i], u, v
                        ),
                    });
                }
            }
            out.add_term(e[iu], e[iv], c.clone());
        }
        Ok(out)
    }

    /// Leading term under an arbitrary monomial comparison.
    pub fn leading_term_by<F>(&self, cmp: F) -> Option<(&Vec<u32>, &Rational)>
    where
        F: Fn(&[u32], &[u32]) -> std::cmp::Ordering,
    {
        self.coeffs.iter().max_by(|(a, _), (b, _)| cmp(a, b))
    }

    pub fn render_monomial(&self, exps: &[u32]) -> String {
        let parts: Vec<(&str, u32)> = self
            .vars
            .iter()
            .map(|s| s.as_str())
            .zip(exps.iter().copied())
            .collect();
        let s = format_monomial(&parts);
        if s.is_empty() {
            "1".to_string()
        } else {
            s
        }
    }

    /// Canonical text: ascending total degree, then descending lexicographic
    /// exponent within a degree (so u-terms print before v-terms).
    pub fn to_canonical(&self) -> String {
        let mut keys: Vec<&Vec<u32>> = self.coeffs.keys().collect();
        keys.sort_by_key(|e| (e.iter().sum::<u32>(), std::cmp::Reverse((*e).clone())));
        let terms: Vec<(String, Rational)> = keys
            .into_iter()
            .map(|e| {
                let parts: Vec<(&str, u32)> = self
                    .vars
                    .iter()
                    .map(|s| s.as_str())
                    .zip(e.iter().copied())
                    .collect();
                (format_monomial(&parts), self.coeff_of(e))
            })
            .collect();
        format_terms(&terms)
    }
}

impl std::fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_canonical())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, ratio};
    use proptest::prelude::*;

    fn mp(s: &str, vars: &[&str]) -> MultiPoly {
        MultiPoly::parse(s, vars).unwrap()
    }

    #[test]
    fn product_of_surface_factors() {
        // (1 + 7L + L^2)(1 + L^2) = 1 + 7L + 2L^2 + 7L^3 + L^4
        let a = mp("1 + 7*L + L^2", &["L"]);
        let b = mp("1 + L^2", &["L"]);
        assert_eq!(
            a.mul(&b).unwrap(),
            mp("1 + 7*L + 2*L^2 + 7*L^3 + L^4", &["L"])
        );
    }

    #[test]
    fn mismatched_rings_refused() {
        let a = mp("x", &["x"]);
        let b = mp("y", &["y"]);
        assert!(matches!(a.add(&b), Err(Error::VariableMismatch { .. })));
    }

    #[test]
    fn substitute_t_squared_and_evaluation() {
        let p = mp("1 + 7*t^2 + t^4", &["t"]);
        let mut sigma = BTreeMap::new();
        sigma.insert("t".to_string(), mp("t^2", &["t"]));
        assert_eq!(p.substitute(&sigma).unwrap(), mp("1 + 7*t^4 + t^8", &["t"]));

        let q = mp("1 + L + L^2", &["L"]);
        let mut ev = BTreeMap::new();
        ev.insert("L".to_string(), MultiPoly::constant(&["L"], rat(2)));
        assert_eq!(
            q.substitute(&ev).unwrap(),
            MultiPoly::constant(&["L"], rat(7))
        );
    }

    #[test]
    fn substitute_hodge_deligne_squares() {
        let hd = mp("1 - 4*u - 4*v + u*v", &["u", "v"]);
        let mut sigma = BTreeMap::new();
        sigma.insert("u".to_string(), mp("u^2", &["u", "v"]));
        sigma.insert("v".to_string(), mp("v^2", &["u", "v"]));
        assert_eq!(
            hd.substitute(&sigma).unwrap(),
            mp("1 - 4*u^2 - 4*v^2 + u^2*v^2", &["u", "v"])
        );
    }

    #[test]
    fn coeff_of_brute_force_defect() {
        // coefficient of t^4 in (1/2)p^2 + (1/2)p(t^2) - (1 + t^4)p at
        // p = 1 + 7t^2 + t^4, computed from scratch right here.
        let t = &["t"];
        let p = mp("1 + 7*t^2 + t^4", t);
        let mut sq = BTreeMap::new();
        sq.insert("t".to_string(), mp("t^2", t));
        let half = ratio(1, 2);
        let lhs = p
            .pow(2)
            .unwrap()
            .scale(&half)
            .add(&p.substitute(&sq).unwrap().scale(&half))
            .unwrap()
            .sub(&mp("1 + t^4", t).mul(&p).unwrap())
            .unwrap();
        assert_eq!(lhs.coeff_of(&[4]), rat(27));
        assert_eq!(lhs, mp("27*t^4", t));
        // absent monomial
        assert_eq!(mp("1 + t^2", t).coeff_of(&[3]), rat(0));
    }

    #[test]
    fn series_binomial_examples() {
        let t = &["t"];
        let geom = mp("1 - t", t).series_binomial(-1, 3, "t").unwrap();
        assert_eq!(geom, mp("1 + t + t^2 + t^3", t));

        let ls = &["L", "t"];
        let f = mp("1 - L*t", ls).series_binomial(-2, 2, "t").unwrap();
        assert_eq!(f, mp("1 + 2*L*t + 3*L^2*t^2", ls));

        let poly_case = mp("1 - t", t).series_binomial(1, 5, "t").unwrap();
        assert_eq!(poly_case, mp("1 - t", t));
    }

    #[test]
    fn series_binomial_rejects_zero_constant_slice() {
        let t = &["t"];
        assert!(matches!(
            mp("t + t^2", t).series_binomial(-1, 3, "t"),
            Err(Error::NonInvertibleSeries { .. })
        ));
        // non-constant slice in the coefficient ring is not a unit either
        let ls = &["L", "t"];
        assert!(mp("1 + L + t", ls).series_binomial(-1, 2, "t").is_err());
    }

    prop_compose! {
        fn small_poly()(terms in proptest::collection::vec(
            ((0u32..4, 0u32..4), -4i64..5), 0..6)) -> MultiPoly {
            let mut p = MultiPoly::zero(&["x", "y"]);
            for ((a, b), c) in terms {
                p.add_term(vec![a, b], rat(c));
            }
            p
        }
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            let ab_c = a.mul(&b).unwrap().mul(&c).unwrap();
            let a_bc = a.mul(&b.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(&ab_c, &a_bc);
            let dist = a.mul(&b.add(&c).unwrap()).unwrap();
            let expand = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(&dist, &expand);
            prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        }

        #[test]
        fn substitution_composes(p in small_poly(), k1 in 1u32..3, k2 in 1u32..3) {
            // sigma: x -> x^k1, tau: y -> y^k2; applying then composing agree
            let ring = &["x", "y"];
            let mut sigma = BTreeMap::new();
            sigma.insert("x".to_string(), MultiPoly::parse(&format!("x^{k1}"), ring).unwrap());
            let mut tau = BTreeMap::new();
            tau.insert("y".to_string(), MultiPoly::parse(&format!("y^{k2}"), ring).unwrap());
            let step = p.substitute(&sigma).unwrap().substitute(&tau).unwrap();
            let mut both = BTreeMap::new();
            both.insert("x".to_string(), MultiPoly::parse(&format!("x^{k1}"), ring).unwrap());
            both.insert("y".to_string(), MultiPoly::parse(&format!("y^{k2}"), ring).unwrap());
            prop_assert_eq!(step, p.substitute(&both).unwrap());
        }

        #[test]
        fn series_inverse_cancels(c in 1i64..4, e in 1i64..4, order in 1u32..6) {
            let ring = &["L", "t"];
            let base = MultiPoly::parse(&format!("1 - {c}*L*t"), ring).unwrap();
            let plus = base.series_binomial(e, order, "t").unwrap();
            let minus = base.series_binomial(-e, order, "t").unwrap();
            let prod = plus.mul(&minus).unwrap().truncate_in("t", order).unwrap();
            prop_assert_eq!(prod, MultiPoly::one(ring));
        }
    }
}
