//! End-to-end case studies, each returning a machine-checkable certificate:
//! every claim records the expected and the recomputed value, and the
//! certificate passes only if all of them match.

use std::collections::BTreeMap;

use num::Zero;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::fano::solve_fano_class_with_sym2;
use crate::generate::{expressed_as_polynomial_of, GenerationOutcome};
use crate::measure::{hodge_deligne, point_count, sym2_bi};
use crate::motivic::{
    odp_cubic_threefold_class, projective_space_class, quadric_class, symmetric_powers,
    GeneratorTable, MotivicClass,
};
use crate::poly::{rat, ratio, BiPoly, MultiPoly, Rational, UniPoly};
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub description: String,
    pub expected: String,
    pub computed: String,
    pub matched: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub name: String,
    pub claims: Vec<Claim>,
    pub overall: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub citations: Vec<String>,
}

impl Certificate {
    fn new(name: &str) -> Self {
        Self {
            name: name.to_string(),
            claims: Vec::new(),
            overall: true,
            citations: Vec::new(),
        }
    }

    fn claim(&mut self, description: &str, expected: impl ToString, computed: impl ToString) {
        let expected = expected.to_string();
        let computed = computed.to_string();
        let matched = expected == computed;
        self.overall &= matched;
        self.claims.push(Claim {
            description: description.to_string(),
            expected,
            computed,
            matched,
        });
    }

    pub fn with_citations(mut self, citations: &[&str]) -> Self {
        self.citations = citations.iter().map(|s| s.to_string()).collect();
        self
    }

    pub fn strip_citations(mut self) -> Self {
        self.citations.clear();
        self
    }
}

/// Names accepted by the CLI's case-study command.
pub const STUDY_NAMES: [&str; 5] = [
    "cubic-surface",
    "quadric-family",
    "plane-family",
    "odp-threefold",
    "non-generation",
];

fn sym2_class(c: &MotivicClass) -> Result<MotivicClass> {
    Ok(symmetric_powers(c, 2)?.pop().expect("order 2"))
}

/// Recovery of L^2 from the cubic-surface-shaped class 1 + bL + L^2:
/// (2 / (b^2 + b - 2)) ([Y^(2)] - (1 + L^2)[Y]), refused at the b = 1
/// degeneracy where b^2 + b - 2 = 0.
pub fn lefschetz_square_recovery(b: i64) -> Result<UniPoly> {
    let denom = b * b + b - 2;
    if denom == 0 {
        return Err(Error::Domain {
            reason: format!("b = {b} makes b^2 + b - 2 = 0; the recovery divides by it"),
        });
    }
    let y = MotivicClass::from_l_polynomial(&UniPoly::from_terms([
        (0, rat(1)),
        (1, rat(b)),
        (2, rat(1)),
    ]))?;
    let sym2 = sym2_class(&y)?;
    let shifted = &(&MotivicClass::one() + &MotivicClass::lefschetz(2)) * &y;
    let numerator = (&sym2 - &shifted).l_polynomial()?;
    Ok(numerator.scale(&ratio(2, denom)))
}

/// Smooth cubic surface: the symmetric square, the 27, and the recovery of
/// L and L^2 from the classes alone.
pub fn cubic_surface_study() -> Result<Certificate> {
    let mut cert = Certificate::new("cubic-surface");
    let y = MotivicClass::parse("1 + 7L + L^2")?;
    let sym2 = sym2_class(&y)?;
    cert.claim(
        "[Y^(2)] for the cubic surface class [Y] = 1 + 7L + L^2",
        "1 + 7*L + 29*L^2 + 7*L^3 + L^4",
        sym2.to_canonical(),
    );
    let shifted = &(&MotivicClass::one() + &MotivicClass::lefschetz(2)) * &y;
    cert.claim(
        "[Y^(2)] - (1 + L^2)[Y]",
        "27*L^2",
        (&sym2 - &shifted).to_canonical(),
    );
    let f = solve_fano_class_with_sym2(&y, &sym2, 2, &MotivicClass::zero())?;
    cert.claim("[F(Y)] from the class-level solve", "27", f.to_canonical());

    let recovered_l2 = lefschetz_square_recovery(7)?;
    cert.claim(
        "L^2 recovered as (2/(b^2 + b - 2)) ([Y^(2)] - (1 + L^2)[Y]) at b = 7",
        "L^2",
        recovered_l2.to_canonical("L"),
    );
    // L = (1/b)([Y] - L^2 - 1), with L^2 the recovered class
    let y_poly = y.l_polynomial()?;
    let recovered_l = (&(&y_poly - &recovered_l2) - &UniPoly::one()).scale(&ratio(1, 7));
    cert.claim(
        "L recovered as (1/b)([Y] - L^2 - 1) at b = 7",
        "L",
        recovered_l.to_canonical("L"),
    );
    let guard = match lefschetz_square_recovery(1) {
        Err(Error::Domain { .. }) => "refused (b^2 + b - 2 = 0)".to_string(),
        other => format!("unexpected: {other:?}"),
    };
    cert.claim(
        "degenerate b = 1 recovery is refused by the division guard",
        "refused (b^2 + b - 2 = 0)",
        guard,
    );
    Ok(cert.with_citations(&[
        "a smooth cubic surface is the blowup of the plane in six points, so [Y] = 1 + 7L + L^2",
        "the cut-and-paste relation [Y^(2)] = (1 + L^2)[Y] + L^2 [F(Y)] then forces [F(Y)] = 27",
    ]))
}

/// Trivial pencil of quadrics P^1 x Q with Q in P^m: the L^2 coefficients of
/// [Y^(2)] and (1 + L^m)[Y] differ by 3, so b0(F(Y)) = 3 and F(Y) cannot be
/// connected. Runs for either parity of m; m below 4 is informational only.
pub fn quadric_family_study(m: u32) -> Result<Certificate> {
    if m < 2 {
        return Err(Error::Domain {
            reason: "quadric family study needs m >= 2".to_string(),
        });
    }
    let mut cert = Certificate::new("quadric-family");
    let q = quadric_class(m)?;
    let y = &projective_space_class(1) * &q;
    let sym2 = sym2_class(&y)?;
    let shifted = &(&MotivicClass::one() + &MotivicClass::lefschetz(m)) * &y;
    let got = format!("({}, {})", shifted.coeff_l(2), sym2.coeff_l(2));
    // the (2, 5) pair from the even-m expansion holds for every m >= 4
    // except m = 5, where the middle quadric term lands on L^2 and the pair
    // is (3, 6); the difference is 3 either way
    let expected_pair = match m {
        5 => "(3, 6)".to_string(),
        m if m >= 4 => "(2, 5)".to_string(),
        _ => got.clone(), // informational below the stated range
    };
    cert.claim(
        &format!(
            "L^2 coefficients of ((1 + L^{m})[Y], [Y^(2)]) for m = {m} ({})",
            if m >= 4 {
                "in range"
            } else {
                "informational, below the stated range"
            }
        ),
        expected_pair,
        &got,
    );
    let f = solve_fano_class_with_sym2(&y, &sym2, m, &MotivicClass::zero())?;
    let b0 = f.coeff_l(0);
    if m >= 4 {
        cert.claim(
            "constant term of [F(Y)] (= b0 of any F satisfying the relation)",
            "3",
            &b0,
        );
        cert.claim(
            "b0 = 1 demanded by a connected F(Y)",
            "contradiction (b0 = 3)",
            if b0 == num::BigInt::from(3) {
                "contradiction (b0 = 3)".to_string()
            } else {
                format!("b0 = {b0}")
            },
        );
    } else {
        cert.claim(
            &format!("constant term of [F(Y)] at m = {m} (informational)"),
            &b0,
            &b0,
        );
    }
    Ok(cert.with_citations(&[
        "[Q] = [P^{m-1}] for even m and [P^{m-1}] + L^{(m-1)/2} for odd m",
        "symmetric powers of sums expand by the convolution identity",
    ]))
}

/// Family of (m-2)-planes between a fixed (m-4)-plane and a fixed
/// (m-1)-plane: point counts give #Y = (1 + q + ... + q^{m-4})(1 + q + q^2),
/// and the q^2 coefficients of #Y^(2) vs (1 + q^m) #Y force b0(F(Y)) = 3.
pub fn plane_family_study(m: u32) -> Result<Certificate> {
    if m < 4 {
        return Err(Error::Domain {
            reason: "plane family study needs m >= 4".to_string(),
        });
    }
    let mut cert = Certificate::new("plane-family");
    let y = &projective_space_class(m - 4) * &projective_space_class(2);
    let count = y.l_polynomial()?;
    if m == 6 {
        cert.claim(
            "#Y(F_q) at m = 6",
            "1 + 2*q + 3*q^2 + 2*q^3 + q^4",
            count.to_canonical("q"),
        );
    }
    let sym2 = sym2_class(&y)?;
    let shifted = &(&MotivicClass::one() + &MotivicClass::lefschetz(m)) * &y;
    let got = format!("({}, {})", sym2.coeff_l(2), shifted.coeff_l(2));
    let expected_pair = match m {
        m if m >= 6 => "(6, 3)".to_string(),
        5 => "(5, 2)".to_string(),
        _ => got.clone(), // m = 4: informational
    };
    cert.claim(
        &format!(
            "q^2 coefficients of (#Y^(2), (1 + q^{m}) #Y) for m = {m} ({})",
            if m >= 6 {
                "in range"
            } else {
                "informational, below the stated range"
            }
        ),
        expected_pair,
        &got,
    );
    // brute-force multiset oracle at q = 2, 3: c_k copies of an element of
    // weight q^k; unordered pairs weighted by the product of their weights
    for q in [2u64, 3] {
        let mut weights: Vec<i64> = Vec::new();
        for (_, k, coeff) in y.terms() {
            let copies = num::ToPrimitive::to_i64(coeff).expect("small");
            for _ in 0..copies {
                weights.push((q as i64).pow(k));
            }
        }
        let mut oracle = 0i64;
        for i in 0..weights.len() {
            for j in i..weights.len() {
                oracle += weights[i] * weights[j];
            }
        }
        let evaluated = point_count(&sym2, q, &GeneratorTable::empty())?;
        cert.claim(
            &format!("#Y^(2)(F_{q}) against the weighted multiset oracle"),
            oracle,
            evaluated,
        );
    }
    if m >= 5 {
        let f = solve_fano_class_with_sym2(&y, &sym2, m, &MotivicClass::zero())?;
        cert.claim(
            "constant term of [F(Y)]: F(Y) cannot be connected",
            "3",
            f.coeff_l(0),
        );
    }
    Ok(cert.with_citations(&[
        "the union of the planes has class a polynomial in L, so point counts over F_q decide everything",
        "#Y(F_q) = #A(F_q) * #(B/A)(F_q) for the fixed flags A inside B",
    ]))
}

fn bi_pow_uv(k: u32) -> BiPoly {
    BiPoly::monomial(k, k, rat(1))
}

/// Strips every monomial divisible by u*v from a polynomial over a ring that
/// contains u and v among other variables.
fn strip_uv(p: &MultiPoly, u: &str, v: &str) -> Result<MultiPoly> {
    let iu = p.var_index(u)?;
    let iv = p.var_index(v)?;
    let vars: Vec<&str> = p.vars().iter().map(|s| s.as_str()).collect();
    let mut out = MultiPoly::zero(&vars);
    for (e, c) in p.terms() {
        if e[iu] == 0 || e[iv] == 0 {
            out.add_term(e.clone(), c.clone());
        }
    }
    Ok(out)
}

/// Cubic threefold with one ordinary double point: the Hodge-Deligne side of
/// the relation, the mod-uv obstruction with symbolic coefficients, the
/// power-stripping branches, and the divisibility criterion for line
/// coefficients.
pub fn odp_threefold_study(table: &GeneratorTable) -> Result<Certificate> {
    let mut cert = Certificate::new("odp-threefold");
    let v_entry = table.get("V")?;
    let hd_v = v_entry.hodge_deligne.clone();

    let y = odp_cubic_threefold_class(table)?;
    cert.claim(
        "[Y] for the one-node cubic threefold (node blowup = blowup of P^3 along V)",
        "1 - L + L^3 + L*[V]",
        y.to_canonical(),
    );
    let hd_y = hodge_deligne(&y, table)?;
    let expected_hd_y = &BiPoly::parse("1 - u*v + u^3*v^3", "u", "v")? + &(&bi_pow_uv(1) * &hd_v);
    cert.claim(
        "HD(Y) = 1 - uv + u^3v^3 + uv * HD(V)",
        expected_hd_y.to_canonical("u", "v"),
        hd_y.to_canonical("u", "v"),
    );

    // relation numerator at Hodge-Deligne level, singular locus one point:
    // HD([Y^(2)] - (1 + L^3)[Y] + L^3)
    let hd_sym2 = sym2_bi(&hd_y);
    let shift = &BiPoly::one() + &bi_pow_uv(3);
    let numerator = &(&hd_sym2 - &(&shift * &hd_y)) + &bi_pow_uv(3);
    let hd_f = &sym2_bi(&hd_v) - &hd_v;
    let quotient = numerator.divide_exact(2, 2, "u", "v")?;
    cert.claim(
        "HD([Y^(2)] - (1 + L^3)[Y] + L^3) is exactly (uv)^2 times HD([V^(2)] - [V])",
        hd_f.to_canonical("u", "v"),
        quotient.to_canonical("u", "v"),
    );

    // mod-uv obstruction with symbolic b and g:
    // (L + b)[F] reduces to b * ((g^2 - g)/2)(u^2 + v^2) mod uv
    let ring = &["u", "v", "b", "g"];
    let hd_v_sym = MultiPoly::parse("1 - g*u - g*v + u*v", ring)?;
    let mut squares = BTreeMap::new();
    squares.insert("u".to_string(), MultiPoly::parse("u^2", ring)?);
    squares.insert("v".to_string(), MultiPoly::parse("v^2", ring)?);
    let half = ratio(1, 2);
    let hd_f_sym = hd_v_sym
        .pow(2)?
        .scale(&half)
        .add(&hd_v_sym.substitute(&squares)?.scale(&half))?
        .sub(&hd_v_sym)?;
    let reduced = strip_uv(&hd_f_sym, "u", "v")?;
    cert.claim(
        "HD([V^(2)] - [V]) mod uv with symbolic genus g",
        MultiPoly::parse("1/2 (g^2 - g) u^2 + 1/2 (g^2 - g) v^2", ring)?.to_canonical(),
        reduced.to_canonical(),
    );
    let obstruction = MultiPoly::parse("b", ring)?.mul(&reduced)?;
    let mut g4 = BTreeMap::new();
    g4.insert("g".to_string(), MultiPoly::parse("4", ring)?);
    cert.claim(
        "mod-uv obstruction b * (...) at g = 4",
        "6*u^2*b + 6*v^2*b",
        obstruction.substitute(&g4)?.to_canonical(),
    );

    // power-stripping branches for P = x^k Q with x not dividing Q
    let c4 = strip_uv(
        &obstruction.substitute(&g4)?.substitute(&{
            let mut b1 = BTreeMap::new();
            b1.insert("b".to_string(), MultiPoly::parse("1", ring)?);
            b1
        })?,
        "u",
        "v",
    )?;
    cert.claim(
        "k >= 2 branch: stripping (uv)^{k-1} leaves 0 mod uv on one side but 6(u^2 + v^2) on the other",
        "6*u^2 + 6*v^2 (nonzero, contradiction)",
        format!("{} ({})", c4.to_canonical(), if c4.is_zero() { "zero" } else { "nonzero, contradiction" }),
    );
    cert.claim(
        "k = 1 branch: Q(0, 1, 1) would be a constant, but the reduction is not congruent to one",
        "degree-2 monomials present (contradiction)",
        if c4.total_degree() == Some(2) {
            "degree-2 monomials present (contradiction)".to_string()
        } else {
            format!("total degree {:?}", c4.total_degree())
        },
    );

    // the divisibility criterion on sample line coefficients P(x):
    // P(L)[F(Y)] is a polynomial in L, [Y], [Y^(2)] iff x^2 | P
    let samples: [(&str, bool); 5] = [
        ("1", false),
        ("x", false),
        ("x + 1", false),
        ("x^2", true),
        ("x^3 + x^2", true),
    ];
    for (text, expected) in samples {
        let p = UniPoly::parse(text, "x")?;
        let divisible = p.coeff(0).is_zero() && p.coeff(1).is_zero();
        let verdict = if expected {
            "expressible"
        } else {
            "not expressible"
        };
        let computed = if divisible {
            "expressible"
        } else {
            "not expressible"
        };
        cert.claim(
            &format!("P = {text}: expressible iff x^2 divides P"),
            verdict,
            computed,
        );
        if divisible {
            // exhibit the witness: P = x^2 S gives Q = S(x)(z - (1+x^3)y + x^3),
            // certified at the Hodge-Deligne level
            let s = p.divide_exact(2, "x")?;
            let s_uv = {
                let mut out = BiPoly::zero();
                for (e, c) in s.terms() {
                    out.add_term(e, e, c.clone());
                }
                out
            };
            let p_uv = {
                let mut out = BiPoly::zero();
                for (e, c) in p.terms() {
                    out.add_term(e, e, c.clone());
                }
                out
            };
            cert.claim(
                &format!(
                    "witness for P = {text}: HD(S(L)([Y^(2)] - (1+L^3)[Y] + L^3)) = HD(P(L)[F(Y)])"
                ),
                (&p_uv * &hd_f).to_canonical("u", "v"),
                (&s_uv * &numerator).to_canonical("u", "v"),
            );
        }
    }
    Ok(cert.with_citations(&[
        "blowing up the node exhibits Y as a P^3 blowup along a genus-4 curve V",
        "F(Y) has the Hodge numbers of V^(2) minus V (computed in the localization)",
        "comparisons run in Z[u, v] mod uv, where uv-multiples vanish",
    ]))
}

/// The witness relation with fractional L-coefficients on [F(Y)] vanishes in
/// the subring but is not a polynomial in the distinguished relation.
pub fn non_generation_study() -> Result<Certificate> {
    let mut cert = Certificate::new("non-generation");
    let y = MotivicClass::parse("1 + 7L + L^2")?;
    let sym2 = sym2_class(&y)?;
    let f = solve_fano_class_with_sym2(&y, &sym2, 2, &MotivicClass::zero())?;
    cert.claim("[F(Y)]", "27", f.to_canonical());

    // c_i = (coefficient of L^i in [Y^(2)]) / 27 for i = 1..4
    let sym2_poly = sym2.l_polynomial()?;
    let c: Vec<Rational> = (1..=4).map(|i| sym2_poly.coeff(i) * ratio(1, 27)).collect();
    cert.claim(
        "coefficients (c1, c2, c3, c4) of the witness relation",
        "(7/27, 29/27, 7/27, 1/27)",
        format!("({}, {}, {}, {})", c[0], c[1], c[2], c[3]),
    );

    // the witness vanishes in the subring: [Y^(2)] - 1 - sum c_i L^i [F]
    let mut witness_value = &sym2_poly - &UniPoly::one();
    for (i, ci) in c.iter().enumerate() {
        let term = UniPoly::monomial(i as u32 + 1, ci * rat(27));
        witness_value = &witness_value - &term;
    }
    cert.claim(
        "the witness relation vanishes in the subring",
        "0",
        witness_value.to_canonical("L"),
    );

    // graded solve against the distinguished relation
    let ring = ["L", "T1", "T2", "T3"];
    let relation = MultiPoly::parse("T3 - (1 + L^2)*T2 - L^2*T1", &ring)?;
    let witness = MultiPoly::parse(
        "T3 - 1 - (7/27 L + 29/27 L^2 + 7/27 L^3 + 1/27 L^4) * T1",
        &ring,
    )?;
    let outcome = expressed_as_polynomial_of(&witness, &relation, &["T1", "T2", "T3"])?;
    cert.claim(
        "full witness is not A(relation) for any A with zero constant term",
        "not generated (layer 0: T-free term -1)",
        match &outcome {
            GenerationOutcome::NotGenerated { layer: 0, .. } => {
                "not generated (layer 0: T-free term -1)".to_string()
            }
            other => format!("{other:?}"),
        },
    );
    let witness_positive = MultiPoly::parse(
        "T3 - (7/27 L + 29/27 L^2 + 7/27 L^3 + 1/27 L^4) * T1",
        &ring,
    )?;
    let outcome = expressed_as_polynomial_of(&witness_positive, &relation, &["T1", "T2", "T3"])?;
    cert.claim(
        "degree-1 layer: a_1 = 1 forced by T3, then the T2 coefficient demands 1 + L^2 = 0",
        "not generated (layer 1 at T2)",
        match &outcome {
            GenerationOutcome::NotGenerated {
                layer: 1, monomial, ..
            } if monomial == "T2" => "not generated (layer 1 at T2)".to_string(),
            other => format!("{other:?}"),
        },
    );

    // positive control: 5 f^2 - 2 f is recognized with A(X) = 5X^2 - 2X
    let control = relation
        .pow(2)?
        .scale(&rat(5))
        .sub(&relation.scale(&rat(2)))?;
    let outcome = expressed_as_polynomial_of(&control, &relation, &["T1", "T2", "T3"])?;
    cert.claim(
        "control: 5 f^2 - 2 f is generated with A(X) = 5X^2 - 2X",
        "coefficients [-2, 5]",
        match &outcome {
            GenerationOutcome::Generated { coefficients } => {
                format!("coefficients [{}]", coefficients.join(", "))
            }
            other => format!("{other:?}"),
        },
    );
    Ok(cert.with_citations(&[
        "every symmetric power of a rational surface class is a polynomial in L",
        "the coefficient of [F(Y)] in a polynomial of the distinguished relation only sees even powers of L",
    ]))
}

/// Dispatch by CLI name. The quadric and plane studies take their dimension
/// from `m`, the rest ignore it.
pub fn run_study(name: &str, m: Option<u32>) -> Result<Certificate> {
    match name {
        "cubic-surface" => cubic_surface_study(),
        "quadric-family" => quadric_family_study(m.unwrap_or(4)),
        "plane-family" => plane_family_study(m.unwrap_or(6)),
        "odp-threefold" => odp_threefold_study(&GeneratorTable::odp_standard()),
        "non-generation" => non_generation_study(),
        _ => Err(Error::Domain {
            reason: format!(
                "unknown case study `{name}`; available: {}",
                STUDY_NAMES.join(", ")
            ),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_all(cert: &Certificate) {
        for claim in &cert.claims {
            assert!(
                claim.matched,
                "{}: `{}` expected {} got {}",
                cert.name, claim.description, claim.expected, claim.computed
            );
        }
        assert!(cert.overall);
    }

    #[test]
    fn cubic_surface_passes() {
        assert_all(&cubic_surface_study().unwrap());
    }

    #[test]
    fn quadric_family_all_dimensions() {
        for m in 4..=12 {
            assert_all(&quadric_family_study(m).unwrap());
        }
        // below range: runs, informational only
        let low = quadric_family_study(2).unwrap();
        assert!(low.overall);
    }

    #[test]
    fn plane_family_all_dimensions() {
        for m in 6..=12 {
            assert_all(&plane_family_study(m).unwrap());
        }
        let low = plane_family_study(4).unwrap();
        assert!(low.overall);
    }

    #[test]
    fn odp_threefold_passes() {
        assert_all(&odp_threefold_study(&GeneratorTable::odp_standard()).unwrap());
        assert!(odp_threefold_study(&GeneratorTable::empty()).is_err());
    }

    #[test]
    fn non_generation_passes() {
        assert_all(&non_generation_study().unwrap());
    }

    #[test]
    fn dispatch_rejects_unknown() {
        assert!(run_study("unknown", None).is_err());
        for name in STUDY_NAMES {
            assert!(run_study(name, None).unwrap().overall);
        }
    }

    #[test]
    fn conclusions_stable_across_dimension() {
        // the L^2 / q^2 coefficient pairs stop depending on m
        for m in 6..=12u32 {
            let cert = quadric_family_study(m).unwrap();
            assert!(cert.claims[0].computed.contains("(2, 5)"));
            let cert = plane_family_study(m).unwrap();
            assert!(cert.claims.iter().any(|c| c.computed.contains("(6, 3)")));
        }
    }
}
