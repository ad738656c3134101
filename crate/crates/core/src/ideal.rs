//! Exact-rational Buchberger Groebner bases with lexicographic and graded
//! orders, ideal membership by multivariate division, ideal equality, and
//! kernels of polynomial ring maps. Sized for presentation computations in a
//! handful of variables; no modular or F4-style acceleration, clarity over
//! speed.

use std::cmp::Ordering;

use num::One;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::poly::{MultiPoly, Rational, UniPoly};
use crate::Result;

/// Refuse computations in more variables than this.
pub const MAX_VARIABLES: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MonomialOrder {
    /// Pure lexicographic, first variable strongest.
    Lex,
    /// Total degree, ties broken lexicographically.
    GrLex,
    /// Total degree, ties broken by the reverse-lexicographic rule.
    GRevLex,
}

impl MonomialOrder {
    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialOrder::Lex => lex_cmp(a, b),
            MonomialOrder::GrLex => {
                let (da, db) = (total(a), total(b));
                da.cmp(&db).then_with(|| lex_cmp(a, b))
            }
            MonomialOrder::GRevLex => {
                let (da, db) = (total(a), total(b));
                da.cmp(&db).then_with(|| {
                    for i in (0..a.len()).rev() {
                        match a[i].cmp(&b[i]) {
                            Ordering::Equal => continue,
                            // smaller exponent in the last differing
                            // position wins
                            ord => return ord.reverse(),
                        }
                    }
                    Ordering::Equal
                })
            }
        }
    }
}

fn total(e: &[u32]) -> u32 {
    e.iter().sum()
}

fn lex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    Ordering::Equal
}

#[derive(Clone, Debug)]
pub struct Ideal {
    pub generators: Vec<MultiPoly>,
    pub order: MonomialOrder,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GroebnerBasis {
    pub basis: Vec<MultiPoly>,
    pub order: MonomialOrder,
    pub reduced: bool,
}

fn leading_term(p: &MultiPoly, order: MonomialOrder) -> Option<(Vec<u32>, Rational)> {
    p.leading_term_by(|a, b| order.cmp(a, b))
        .map(|(e, c)| (e.clone(), c.clone()))
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn exp_sub(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn exp_lcm(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn mul_monomial(p: &MultiPoly, exps: &[u32], coeff: &Rational) -> MultiPoly {
    let vars: Vec<&str> = p.vars().iter().map(|s| s.as_str()).collect();
    let mono = MultiPoly::monomial(&vars, exps.to_vec(), coeff.clone());
    p.mul(&mono).expect("same ring")
}

/// Full normal form of `p` modulo `divisors`: every term of the remainder is
/// divisible by no leading monomial of the divisors.
pub fn normal_form(p: &MultiPoly, divisors: &[MultiPoly], order: MonomialOrder) -> MultiPoly {
    let vars: Vec<&str> = p.vars().iter().map(|s| s.as_str()).collect();
    let lts: Vec<Option<(Vec<u32>, Rational)>> =
        divisors.iter().map(|g| leading_term(g, order)).collect();
    let mut rest = p.clone();
    let mut remainder = MultiPoly::zero(&vars);
    'outer: while let Some((lm, lc)) = leading_term(&rest, order) {
        for (g, lt) in divisors.iter().zip(&lts) {
            if let Some((glm, glc)) = lt {
                if divides(glm, &lm) {
                    let factor = mul_monomial(g, &exp_sub(&lm, glm), &(&lc / glc));
                    rest = rest.sub(&factor).expect("same ring");
                    continue 'outer;
                }
            }
        }
        // leading term irreducible: move it to the remainder
        let mono = MultiPoly::monomial(&vars, lm.clone(), lc.clone());
        remainder = remainder.add(&mono).expect("same ring");
        rest = rest.sub(&mono).expect("same ring");
    }
    remainder
}

fn s_polynomial(f: &MultiPoly, g: &MultiPoly, order: MonomialOrder) -> MultiPoly {
    let (flm, flc) = leading_term(f, order).expect("nonzero");
    let (glm, glc) = leading_term(g, order).expect("nonzero");
    let lcm = exp_lcm(&flm, &glm);
    let a = mul_monomial(f, &exp_sub(&lcm, &flm), &(Rational::one() / flc));
    let b = mul_monomial(g, &exp_sub(&lcm, &glm), &(Rational::one() / glc));
    a.sub(&b).expect("same ring")
}

/// Buchberger's algorithm with the normal selection strategy (pairs of
/// minimal lcm degree first) and the coprime-leading-term criterion.
/// Deterministic for a given generator order; output is the reduced basis.
pub fn buchberger(ideal: &Ideal) -> Result<GroebnerBasis> {
    let nvars = ideal
        .generators
        .first()
        .map(|g| g.vars().len())
        .unwrap_or(0);
    if nvars > MAX_VARIABLES {
        return Err(Error::ScaleGuard {
            variables: nvars,
            limit: MAX_VARIABLES,
        });
    }
    let order = ideal.order;
    let mut basis: Vec<MultiPoly> = ideal
        .generators
        .iter()
        .filter(|g| !g.is_zero())
        .cloned()
        .collect();
    if basis.is_empty() {
        return Ok(GroebnerBasis {
            basis,
            order,
            reduced: true,
        });
    }

    let pair_key = |basis: &[MultiPoly], i: usize, j: usize| -> (u32, Vec<u32>) {
        let (a, _) = leading_term(&basis[i], order).expect("nonzero");
        let (b, _) = leading_term(&basis[j], order).expect("nonzero");
        let lcm = exp_lcm(&a, &b);
        (total(&lcm), lcm)
    };

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pairs.push((i, j));
        }
    }
    while !pairs.is_empty() {
        // normal strategy: minimal lcm total degree, lcm as tiebreak
        pairs.sort_by(|&(i1, j1), &(i2, j2)| {
            pair_key(&basis, i2, j2).cmp(&pair_key(&basis, i1, j1))
        });
        let (i, j) = pairs.pop().expect("nonempty");
        let (a, _) = leading_term(&basis[i], order).expect("nonzero");
        let (b, _) = leading_term(&basis[j], order).expect("nonzero");
        // coprime leading monomials reduce to zero automatically
        if exp_lcm(&a, &b) == a.iter().zip(&b).map(|(x, y)| x + y).collect::<Vec<_>>() {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], order);
        let r = normal_form(&s, &basis, order);
        if !r.is_zero() {
            let k = basis.len();
            for t in 0..k {
                pairs.push((t, k));
            }
            basis.push(r);
        }
    }

    Ok(GroebnerBasis {
        basis: reduce_basis(basis, order),
        order,
        reduced: true,
    })
}

/// Inter-reduction: minimal, monic, fully tail-reduced, deterministically
/// sorted (descending leading monomial).
fn reduce_basis(mut basis: Vec<MultiPoly>, order: MonomialOrder) -> Vec<MultiPoly> {
    // minimalize: drop any element whose leading monomial is divisible by
    // another's
    loop {
        let mut removed = false;
        'scan: for i in 0..basis.len() {
            let (lm_i, _) = leading_term(&basis[i], order).expect("nonzero");
            for (j, other) in basis.iter().enumerate() {
                if i == j {
                    continue;
                }
                let (lm_j, _) = leading_term(other, order).expect("nonzero");
                if divides(&lm_j, &lm_i) {
                    basis.remove(i);
                    removed = true;
                    break 'scan;
                }
            }
        }
        if !removed {
            break;
        }
    }
    // full reduction of each element modulo the rest, repeated to a fixed
    // point
    loop {
        let mut changed = false;
        for i in 0..basis.len() {
            let others: Vec<MultiPoly> = basis
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, g)| g.clone())
                .collect();
            let r = normal_form(&basis[i], &others, order);
            if r != basis[i] {
                basis[i] = r;
                changed = true;
            }
        }
        basis.retain(|g| !g.is_zero());
        if !changed {
            break;
        }
    }
    // monic
    for g in basis.iter_mut() {
        let (_, lc) = leading_term(g, order).expect("nonzero");
        *g = g.scale(&(Rational::one() / lc));
    }
    basis.sort_by(|a, b| {
        let (la, _) = leading_term(a, order).expect("nonzero");
        let (lb, _) = leading_term(b, order).expect("nonzero");
        order.cmp(&lb, &la)
    });
    basis
}

impl GroebnerBasis {
    /// Membership by division: member iff the normal form vanishes. Returns
    /// the remainder either way.
    pub fn member(&self, p: &MultiPoly) -> (bool, MultiPoly) {
        let r = normal_form(p, &self.basis, self.order);
        (r.is_zero(), r)
    }

    /// Post-hoc Buchberger criterion: every S-polynomial reduces to zero.
    pub fn verify(&self) -> bool {
        for i in 0..self.basis.len() {
            for j in (i + 1)..self.basis.len() {
                let s = s_polynomial(&self.basis[i], &self.basis[j], self.order);
                if !normal_form(&s, &self.basis, self.order).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// Two ideals over the same ring and order are equal iff their reduced bases
/// coincide (the reduced Groebner basis is unique).
pub fn ideal_equal(a: &Ideal, b: &Ideal) -> Result<bool> {
    let ga = buchberger(a)?;
    let gb = buchberger(b)?;
    Ok(ga.basis == gb.basis)
}

/// Kernel of the ring map Q[x][t_1, ..., t_k] -> Q[x], t_i -> image_i(x),
/// x -> x. The kernel is generated by { t_i - image_i }; it is returned as
/// the reduced Groebner basis in lexicographic order with the t variables
/// strongest and x last, which keeps the generators elimination-free and
/// membership checks (for derived relations) a plain division.
pub fn kernel_of_map(images: &[(String, UniPoly)], x: &str) -> Result<(Ideal, GroebnerBasis)> {
    if images.is_empty() {
        return Err(Error::Domain {
            reason: "kernel_of_map needs at least one assignment".to_string(),
        });
    }
    let mut vars: Vec<&str> = images.iter().map(|(t, _)| t.as_str()).collect();
    vars.push(x);
    if vars.len() > MAX_VARIABLES {
        return Err(Error::ScaleGuard {
            variables: vars.len(),
            limit: MAX_VARIABLES,
        });
    }
    let xpoly = |f: &UniPoly| -> MultiPoly {
        let mut p = MultiPoly::zero(&vars);
        for (e, c) in f.terms() {
            let mut exps = vec![0; vars.len()];
            *exps.last_mut().expect("x present") = e;
            p.add_term(exps, c.clone());
        }
        p
    };
    let mut generators = Vec::new();
    for (i, (_name, f)) in images.iter().enumerate() {
        let mut exps = vec![0; vars.len()];
        exps[i] = 1;
        let tvar = MultiPoly::monomial(&vars, exps, Rational::one());
        generators.push(tvar.sub(&xpoly(f)).expect("same ring"));
    }
    let ideal = Ideal {
        generators,
        order: MonomialOrder::Lex,
    };
    let gb = buchberger(&ideal)?;
    Ok((ideal, gb))
}
