//! The Y-F(Y) relation solver: everything the cut-and-paste identity
//! `[Y^[2]] = [Y][P^m] + L^2 [F(Y)]` forces at the Poincare and class level.
//!
//! With the Hilbert-square identity and the symmetric-square formula the
//! relation becomes, at the Poincare level,
//!
//! ```text
//! (1/2) p(t)^2 + (1/2) p(t^2) - (1 + t^{2m}) p(t) = t^4 p_F(t)
//! ```
//!
//! and this module extracts p_F, dim F, b0(F) from a given p_Y, runs the
//! emptiness cascade, verifies the top-coefficient identities with symbolic
//! Betti numbers, and solves for [F(Y)] at class level with the singular
//! correction term.

use std::collections::BTreeMap;

use num::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::motivic::{symmetric_powers, MotivicClass};
use crate::poly::{rat, ratio, MultiPoly, Rational, UniPoly};
use crate::Result;

/// Outcome record for the Poincare-level solve.
#[derive(Clone, Debug, PartialEq)]
pub struct FanoReport {
    /// (1/2) p^2 + (1/2) p(t^2) - (1 + t^{2m}) p.
    pub lhs: UniPoly,
    pub divisible_by_t4: bool,
    /// Present iff the lhs is divisible by t^4 and the quotient has
    /// non-negative integer coefficients (Betti numbers of F).
    pub p_fano: Option<UniPoly>,
    /// deg(p_fano) / 2 when p_fano is present and nonzero.
    pub dim_fano: Option<u32>,
    pub b0_fano: Option<Rational>,
    pub violations: Vec<Violation>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub monomial: String,
    pub reason: String,
}

/// JSON-facing rendering of a [`FanoReport`], with polynomials in canonical
/// text form. Field order is the serialization order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FanoReportDoc {
    pub lhs: String,
    pub divisible_by_t4: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p_fano: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim_fano: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b0_fano: Option<String>,
    pub violations: Vec<Violation>,
}

impl FanoReport {
    pub fn to_doc(&self) -> FanoReportDoc {
        FanoReportDoc {
            lhs: self.lhs.to_canonical("t"),
            divisible_by_t4: self.divisible_by_t4,
            p_fano: self.p_fano.as_ref().map(|p| p.to_canonical("t")),
            dim_fano: self.dim_fano,
            b0_fano: self.b0_fano.as_ref().map(|b| b.to_string()),
            violations: self.violations.clone(),
        }
    }
}

/// The defect (1/2) p^2 + (1/2) p(t^2) - (1 + t^{2m}) p.
pub fn relation_defect(p: &UniPoly, m: u32) -> UniPoly {
    let half = ratio(1, 2);
    let sym2 = &(p * p).scale(&half) + &p.compose_power(2).scale(&half);
    let mut shift = UniPoly::one();
    shift.add_term(2 * m, Rational::one());
    &sym2 - &(&shift * p)
}

/// Solves the relation at Poincare level. `p` must look like the Poincare
/// polynomial of a connected m-dimensional variety: constant term 1, leading
/// term t^{2m}, non-negative integer coefficients throughout.
pub fn solve_fano_poincare(p: &UniPoly, m: u32) -> Result<FanoReport> {
    if p.coeff(0) != rat(1) {
        return Err(Error::MalformedPoincare {
            reason: format!(
                "constant term must be 1 (connectedness), got {}",
                p.coeff(0)
            ),
        });
    }
    if p.degree() != Some(2 * m) || p.leading_coeff() != rat(1) {
        return Err(Error::MalformedPoincare {
            reason: format!(
                "leading term must be t^{} with coefficient 1, got degree {:?}",
                2 * m,
                p.degree()
            ),
        });
    }
    if !p.is_betti_like() {
        return Err(Error::MalformedPoincare {
            reason: "coefficients must be non-negative integers (Betti numbers)".to_string(),
        });
    }

    let lhs = relation_defect(p, m);
    let mut violations = Vec::new();
    for (e, c) in lhs.terms() {
        if e < 4 {
            violations.push(Violation {
                monomial: if e == 0 { "1".into() } else { format!("t^{e}") },
                reason: format!("coefficient {c} obstructs divisibility by t^4"),
            });
        }
    }
    let divisible = violations.is_empty();
    let mut p_fano = None;
    let mut dim_fano = None;
    let mut b0_fano = None;
    if divisible {
        let q = lhs.divide_exact(4, "t").expect("low terms checked");
        let mut ok = true;
        for (e, c) in q.terms() {
            if !c.is_integer() || c.is_negative() {
                violations.push(Violation {
                    monomial: format!("t^{e}"),
                    reason: format!("quotient coefficient {c} is not a non-negative integer"),
                });
                ok = false;
            }
        }
        if ok {
            dim_fano = q.degree().map(|d| d / 2);
            b0_fano = Some(q.coeff(0));
            p_fano = Some(q);
        }
    }
    Ok(FanoReport {
        lhs,
        divisible_by_t4: divisible,
        p_fano,
        dim_fano,
        b0_fano,
        violations,
    })
}

/// One step of the emptiness cascade.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CascadeStep {
    pub index: u32,
    pub equation: String,
    pub conclusion: String,
}

/// Trace of the emptiness contradiction: the forced Betti vanishings and the
/// final unequal pair.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EmptyFanoTrace {
    pub m: u32,
    pub steps: Vec<CascadeStep>,
    pub forced_poincare: String,
    pub contradiction_lhs: String,
    pub contradiction_rhs: String,
    pub contradiction: bool,
}

/// Runs the cascade that refutes `[Y^(2)] = (1 + L^m)[Y]` at Poincare level.
///
/// Write p = 1 + b_1 t + ... + b_{2m-1} t^{2m-1} + t^{2m} with the b_k as
/// symbols. For k = 1..2m-1, matching the t^{2k} coefficient of
/// (1/2) p^2 + (1/2) p(t^2) against the t^{2k} coefficient b_{2k} of p itself
/// (under the substitutions already derived) yields b_k^2 + b_k = 0, and
/// non-negativity forces b_k = 0. Substituting the surviving top term
/// p = t^{2m} leaves the unequal pair 2 t^{4m} vs 2 (1 + t^{2m}) t^{2m}.
pub fn empty_fano_cascade(m: u32) -> Result<EmptyFanoTrace> {
    if m < 1 {
        return Err(Error::Domain {
            reason: "the emptiness cascade needs m >= 1".to_string(),
        });
    }
    // ring: t plus one symbol per unknown Betti number
    let b_names: Vec<String> = (1..=2 * m - 1).map(|i| format!("b{i}")).collect();
    let mut vars: Vec<&str> = vec!["t"];
    vars.extend(b_names.iter().map(|s| s.as_str()));

    let mut zeroed: Vec<bool> = vec![false; b_names.len()];
    let mut steps = Vec::new();
    for k in 1..=(2 * m - 1) {
        let p = cascade_poincare(&vars, m, &zeroed)?;
        let half = ratio(1, 2);
        let sym2 = p
            .pow(2)?
            .scale(&half)
            .add(&substitute_t_power(&p, 2)?.scale(&half))?;
        // coefficient of t^{2k} on each side, as polynomials in the b's
        let lhs_coeff = sym2.coefficient_of_power("t", 2 * k)?;
        let rhs_coeff = p.coefficient_of_power("t", 2 * k)?;
        let equation = lhs_coeff.sub(&rhs_coeff)?.scale(&rat(2));
        // expected shape b_k^2 + b_k
        let bk = MultiPoly::var(&vars, &format!("b{k}"))?;
        let expected = bk.pow(2)?.add(&bk)?;
        if equation != expected {
            return Err(Error::Domain {
                reason: format!("cascade step {k}: unexpected equation {equation}"),
            });
        }
        steps.push(CascadeStep {
            index: k,
            equation: format!("b{k}^2 + b{k} = 0"),
            conclusion: format!("b{k} = 0 (Betti numbers are non-negative)"),
        });
        zeroed[(k - 1) as usize] = true;
    }
    // all b_k dropped; substitute the top term alone
    let top = UniPoly::monomial(2 * m, Rational::one());
    let lhs_final = relation_sym2(&top).scale(&rat(2));
    let mut shift = UniPoly::one();
    shift.add_term(2 * m, Rational::one());
    let rhs_final = (&shift * &top).scale(&rat(2));
    Ok(EmptyFanoTrace {
        m,
        steps,
        forced_poincare: top.to_canonical("t"),
        contradiction_lhs: lhs_final.to_canonical("t"),
        contradiction_rhs: rhs_final.to_canonical("t"),
        contradiction: lhs_final != rhs_final,
    })
}

fn relation_sym2(p: &UniPoly) -> UniPoly {
    let half = ratio(1, 2);
    &(p * p).scale(&half) + &p.compose_power(2).scale(&half)
}

fn cascade_poincare(vars: &[&str], m: u32, zeroed: &[bool]) -> Result<MultiPoly> {
    let mut p = MultiPoly::one(vars);
    p = p.add(&MultiPoly::parse(&format!("t^{}", 2 * m), vars)?)?;
    for i in 1..=(2 * m - 1) {
        if zeroed[(i - 1) as usize] {
            continue;
        }
        let term = MultiPoly::parse(&format!("b{i} * t^{i}"), vars)?;
        p = p.add(&term)?;
    }
    Ok(p)
}

fn substitute_t_power(p: &MultiPoly, k: u32) -> Result<MultiPoly> {
    let vars: Vec<&str> = p.vars().iter().map(|s| s.as_str()).collect();
    let mut sigma = BTreeMap::new();
    sigma.insert("t".to_string(), MultiPoly::parse(&format!("t^{k}"), &vars)?);
    p.substitute(&sigma)
}

/// The five top coefficients of the relation defect with symbolic Betti
/// numbers: t^{4m}, t^{4m-1}, t^{4m-2}, t^{4m-3}, t^{4m-4}, in that order.
#[derive(Clone, Debug)]
pub struct SymbolicTopCoefficients {
    pub m: u32,
    pub vars: Vec<String>,
    pub coefficients: [MultiPoly; 5],
}

/// Builds the defect for p = 1 + b_2 t^2 + ... + b_{2m-2} t^{2m-2} + t^{2m}
/// (b_1 = b_{2m-1} = 0 imposed) with the intermediate Betti numbers as
/// indeterminates, and extracts the top five coefficients as exact
/// polynomial identities. With `palindromic` the duality identification
/// b_{2m-i} = b_i is applied, so the t^{4m-4} coefficient lands on
/// (1/2) b_2^2 + (1/2) b_2; with free indeterminates it is
/// (1/2) b_{2m-2}^2 + (1/2) b_{2m-2}. Needs m >= 3 so that the t^{4m-4}
/// slot clears the top term t^{2m} (at m = 2 the identity shifts by the
/// constant echo, which is where the cubic surface's 27 = 28 - 1 comes
/// from).
pub fn symbolic_top_coefficients(m: u32, palindromic: bool) -> Result<SymbolicTopCoefficients> {
    if m < 3 {
        return Err(Error::Domain {
            reason: "symbolic top coefficients need m >= 3".to_string(),
        });
    }
    let sym_name = |i: u32| -> String {
        if palindromic && i > m {
            format!("b{}", 2 * m - i)
        } else {
            format!("b{i}")
        }
    };
    let mut names: Vec<String> = Vec::new();
    for i in 2..=(2 * m - 2) {
        let n = sym_name(i);
        if !names.contains(&n) {
            names.push(n);
        }
    }
    let mut vars: Vec<&str> = vec!["t"];
    vars.extend(names.iter().map(|s| s.as_str()));

    let mut p = MultiPoly::one(&vars);
    p = p.add(&MultiPoly::parse(&format!("t^{}", 2 * m), &vars)?)?;
    for i in 2..=(2 * m - 2) {
        p = p.add(&MultiPoly::parse(
            &format!("{} * t^{i}", sym_name(i)),
            &vars,
        )?)?;
    }
    let half = ratio(1, 2);
    let shift = MultiPoly::one(&vars).add(&MultiPoly::parse(&format!("t^{}", 2 * m), &vars)?)?;
    let defect = p
        .pow(2)?
        .scale(&half)
        .add(&substitute_t_power(&p, 2)?.scale(&half))?
        .sub(&shift.mul(&p)?)?;
    let coefficients = [
        defect.coefficient_of_power("t", 4 * m)?,
        defect.coefficient_of_power("t", 4 * m - 1)?,
        defect.coefficient_of_power("t", 4 * m - 2)?,
        defect.coefficient_of_power("t", 4 * m - 3)?,
        defect.coefficient_of_power("t", 4 * m - 4)?,
    ];
    Ok(SymbolicTopCoefficients {
        m,
        vars: vars.iter().map(|s| s.to_string()).collect(),
        coefficients,
    })
}

/// Solves `L^2 [F(Y)] = [Y^(2)] - (1 + L^m)[Y] + L^m [Sing Y]` at class
/// level. `sing` is the class of the singular locus (zero for smooth Y).
/// Non-divisibility by L^2 comes back as the obstruction error.
pub fn solve_fano_class(y: &MotivicClass, m: u32, sing: &MotivicClass) -> Result<MotivicClass> {
    if m < 1 {
        return Err(Error::Domain {
            reason: "solve_fano_class needs m >= 1".to_string(),
        });
    }
    let sym2 = symmetric_powers(y, 2)?.pop().expect("order 2");
    solve_fano_class_with_sym2(y, &sym2, m, sing)
}

/// As [`solve_fano_class`] with an externally supplied `[Y^(2)]`.
pub fn solve_fano_class_with_sym2(
    y: &MotivicClass,
    sym2: &MotivicClass,
    m: u32,
    sing: &MotivicClass,
) -> Result<MotivicClass> {
    let shifted = &(&MotivicClass::one() + &MotivicClass::lefschetz(m)) * y;
    let numerator = &(sym2 - &shifted) + &sing.mul_lefschetz(m);
    numerator.divide_lefschetz_exact(2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn up(s: &str) -> UniPoly {
        UniPoly::parse(s, "t").unwrap()
    }

    #[test]
    fn cubic_surface_report() {
        let r = solve_fano_poincare(&up("1 + 7t^2 + t^4"), 2).unwrap();
        assert!(r.divisible_by_t4);
        assert_eq!(r.lhs, up("27t^4"));
        assert_eq!(r.p_fano, Some(up("27")));
        assert_eq!(r.dim_fano, Some(0));
        assert_eq!(r.b0_fano, Some(rat(27)));
        assert!(r.violations.is_empty());
    }

    #[test]
    fn projective_four_space_coefficient() {
        // p = 1 + t^2 + ... + t^8 (b_2 = 1, m = 4): the t^{4m-4} defect
        // coefficient is (1/2) 1^2 + (1/2) 1 = 1
        let p = up("1 + t^2 + t^4 + t^6 + t^8");
        let lhs = relation_defect(&p, 4);
        assert_eq!(lhs.coeff(12), rat(1));
    }

    #[test]
    fn nonzero_b1_gives_t2_violation() {
        let r = solve_fano_poincare(&up("1 + 2t + 3t^2 + 2t^3 + t^4"), 2).unwrap();
        assert!(!r.divisible_by_t4);
        assert!(r.p_fano.is_none());
        assert!(r.violations.iter().any(|v| v.monomial == "t^2"));
    }

    #[test]
    fn malformed_inputs_rejected() {
        assert!(matches!(
            solve_fano_poincare(&up("t^2 + t^4"), 2),
            Err(Error::MalformedPoincare { .. })
        ));
        assert!(matches!(
            solve_fano_poincare(&up("1 + t^2"), 2),
            Err(Error::MalformedPoincare { .. })
        ));
        assert!(matches!(
            solve_fano_poincare(&up("1 - t^2 + t^4"), 2),
            Err(Error::MalformedPoincare { .. })
        ));
    }

    #[test]
    fn cascade_small_dimensions() {
        for m in 1..=3u32 {
            let trace = empty_fano_cascade(m).unwrap();
            assert_eq!(trace.steps.len(), (2 * m - 1) as usize);
            for (i, step) in trace.steps.iter().enumerate() {
                assert_eq!(step.index as usize, i + 1);
                assert_eq!(step.equation, format!("b{}^2 + b{} = 0", i + 1, i + 1));
            }
            assert_eq!(trace.forced_poincare, format!("t^{}", 2 * m));
            assert!(trace.contradiction);
        }
        let t1 = empty_fano_cascade(1).unwrap();
        assert_eq!(t1.contradiction_lhs, "2*t^4");
        assert_eq!(t1.contradiction_rhs, "2*t^2 + 2*t^4");
    }

    #[test]
    fn symbolic_top_coefficients_free_and_palindromic() {
        assert!(symbolic_top_coefficients(2, false).is_err());
        for m in 3..=6u32 {
            for palindromic in [false, true] {
                let s = symbolic_top_coefficients(m, palindromic).unwrap();
                let vars: Vec<&str> = s.vars.iter().map(|v| v.as_str()).collect();
                // t^{4m}, t^{4m-1}, t^{4m-2}, t^{4m-3} vanish identically
                for j in 0..4 {
                    assert!(s.coefficients[j].is_zero(), "m={m} slot {j}");
                }
                let witness = if palindromic {
                    "b2".to_string()
                } else {
                    format!("b{}", 2 * m - 2)
                };
                let expected =
                    MultiPoly::parse(&format!("1/2 {witness}^2 + 1/2 {witness}"), &vars).unwrap();
                assert_eq!(
                    s.coefficients[4], expected,
                    "m={m} palindromic={palindromic}"
                );
            }
        }
    }

    #[test]
    fn b0_identity_on_random_admissible_inputs() {
        // coeff of t^4 in the defect = (1/2) b_2^2 + (1/2) b_2 whenever
        // b_1 = 0, checked on 50 random Betti-like inputs
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..50 {
            let m = rng.gen_range(3..7u32);
            let mut p = UniPoly::one();
            p.add_term(2 * m, rat(1));
            for i in 2..2 * m {
                p.add_term(i, rat(rng.gen_range(0..5)));
            }
            let b2 = p.coeff(2);
            let expect = (b2.clone() * b2.clone() + b2) * ratio(1, 2);
            let lhs = relation_defect(&p, m);
            assert_eq!(lhs.coeff(4), expect);
            // and when the full report succeeds, b0(F) agrees
            if let Some(b0) = solve_fano_poincare(&p, m).unwrap().b0_fano {
                assert_eq!(b0, expect);
            }
        }
    }

    #[test]
    fn class_solution_for_cubic_surface() {
        let y = MotivicClass::parse("1 + 7L + L^2").unwrap();
        let f = solve_fano_class(&y, 2, &MotivicClass::zero()).unwrap();
        assert_eq!(f, MotivicClass::integer(27));
    }

    #[test]
    fn degenerate_point_refused() {
        assert!(matches!(
            solve_fano_class(&MotivicClass::one(), 0, &MotivicClass::zero()),
            Err(Error::Domain { .. })
        ));
    }

    #[test]
    fn class_and_measure_level_commute() {
        // poincare(solve_fano_class(y, m, 0)) * t^4 = defect of poincare(y)
        let table = crate::motivic::GeneratorTable::empty();
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        for _ in 0..50 {
            let m = rng.gen_range(2..6u32);
            let mut y = MotivicClass::one();
            y.add_term(crate::motivic::GeneratorPowers::empty(), m, BigInt::one());
            for k in 1..m {
                y.add_term(
                    crate::motivic::GeneratorPowers::empty(),
                    k,
                    BigInt::from(rng.gen_range(0i64..4)),
                );
            }
            let Ok(f) = solve_fano_class(&y, m, &MotivicClass::zero()) else {
                continue;
            };
            let p_y = crate::measure::poincare(&y, &table).unwrap();
            let lhs = relation_defect(&p_y, m);
            let p_f = crate::measure::poincare(&f, &table).unwrap();
            assert_eq!(&p_f * &UniPoly::monomial(4, rat(1)), lhs);
            // and against the report's p_fano when present
            if let Some(p_fano) = solve_fano_poincare(&p_y, m).unwrap().p_fano {
                assert_eq!(p_fano, p_f);
            }
        }
    }
}
