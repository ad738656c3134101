//! Motivic measures: Poincare polynomial, Hodge-Deligne polynomial, and
//! F_q point count, applied to classes; plus the measure-level symmetric
//! square and the mod-uv reduction.
//!
//! Each measure is a ring homomorphism out of the modelled subring. The
//! Lefschetz class maps to t^2 / uv / q respectively; declared generators map
//! to their table entries. Betti numbers are read off Poincare coefficients
//! (b_i = coefficient of t^i).

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::motivic::{GeneratorTable, MotivicClass};
use crate::poly::{ratio, BiPoly, Rational, UniPoly};
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum MeasureKind {
    Poincare,
    HodgeDeligne,
    PointCount { q: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MeasureValue {
    Poincare(UniPoly),
    HodgeDeligne(BiPoly),
    Count(Rational),
}

impl MeasureValue {
    pub fn to_canonical(&self) -> String {
        match self {
            MeasureValue::Poincare(p) => p.to_canonical("t"),
            MeasureValue::HodgeDeligne(p) => p.to_canonical("u", "v"),
            MeasureValue::Count(c) => c.to_string(),
        }
    }
}

/// Applies a measure to a class over the given table.
pub fn measure(
    class: &MotivicClass,
    kind: &MeasureKind,
    table: &GeneratorTable,
) -> Result<MeasureValue> {
    match kind {
        MeasureKind::Poincare => Ok(MeasureValue::Poincare(poincare(class, table)?)),
        MeasureKind::HodgeDeligne => Ok(MeasureValue::HodgeDeligne(hodge_deligne(class, table)?)),
        MeasureKind::PointCount { q } => {
            if *q < 2 {
                return Err(Error::Domain {
                    reason: format!("point count needs a prime power q >= 2, got {q}"),
                });
            }
            Ok(MeasureValue::Count(point_count(class, *q, table)?))
        }
    }
}

/// Poincare measure: L -> t^2, generators to their table polynomials.
pub fn poincare(class: &MotivicClass, table: &GeneratorTable) -> Result<UniPoly> {
    let mut out = UniPoly::zero();
    for (gens, l_power, coeff) in class.terms() {
        let mut term = UniPoly::monomial(2 * l_power, Rational::from_integer(coeff.clone()));
        for (name, e) in gens.iter() {
            let entry = table.get(name)?;
            term = &term * &entry.poincare.pow(e);
        }
        out = &out + &term;
    }
    Ok(out)
}

/// Hodge-Deligne measure: L -> uv.
pub fn hodge_deligne(class: &MotivicClass, table: &GeneratorTable) -> Result<BiPoly> {
    let mut out = BiPoly::zero();
    for (gens, l_power, coeff) in class.terms() {
        let mut term = BiPoly::monomial(l_power, l_power, Rational::from_integer(coeff.clone()));
        for (name, e) in gens.iter() {
            let entry = table.get(name)?;
            term = &term * &entry.hodge_deligne.pow(e);
        }
        out = &out + &term;
    }
    Ok(out)
}

/// Point count over F_q: evaluation L -> q, justified for polynomial-in-L
/// classes. Generators must carry the `effective` flag; their count is read
/// off the even Poincare coefficients (an effective generator behaves like a
/// polynomial in L, so b_{2i} copies of q^i).
pub fn point_count(class: &MotivicClass, q: u64, table: &GeneratorTable) -> Result<Rational> {
    let qr = Rational::from_integer(q.into());
    let mut out = Rational::zero();
    for (gens, l_power, coeff) in class.terms() {
        let mut term = Rational::from_integer(coeff.clone());
        let mut p = Rational::one();
        for _ in 0..l_power {
            p *= &qr;
        }
        term *= p;
        for (name, e) in gens.iter() {
            let entry = table.get(name)?;
            if !entry.effective {
                return Err(Error::PointCountUnavailable {
                    name: name.to_string(),
                });
            }
            let count = effective_count(&entry.poincare, &qr).ok_or_else(|| {
                Error::PointCountUnavailable {
                    name: name.to_string(),
                }
            })?;
            for _ in 0..e {
                term *= &count;
            }
        }
        out += term;
    }
    Ok(out)
}

fn effective_count(poincare: &UniPoly, q: &Rational) -> Option<Rational> {
    let mut acc = Rational::zero();
    for (e, c) in poincare.terms() {
        if e % 2 != 0 {
            return None;
        }
        let mut p = Rational::one();
        for _ in 0..(e / 2) {
            p *= q;
        }
        acc += c * &p;
    }
    Some(acc)
}

/// Measure-level symmetric square: (1/2) p(t)^2 + (1/2) p(t^2).
pub fn sym2_uni(p: &UniPoly) -> UniPoly {
    let half = ratio(1, 2);
    let sq = (p * p).scale(&half);
    &sq + &p.compose_power(2).scale(&half)
}

/// Measure-level symmetric square in two variables:
/// (1/2) p(u,v)^2 + (1/2) p(u^2,v^2).
pub fn sym2_bi(p: &BiPoly) -> BiPoly {
    let half = ratio(1, 2);
    let sq = (p * p).scale(&half);
    &sq + &p.compose_power(2).scale(&half)
}

/// Drops every monomial divisible by uv. Re-exported here because it is the
/// reduction the comparison arguments run in.
pub fn mod_uv(p: &BiPoly) -> BiPoly {
    p.mod_uv()
}

/// Exact division of a Poincare-side value by t^k.
pub fn exact_divide_uni(p: &UniPoly, k: u32) -> Result<UniPoly> {
    p.divide_exact(k, "t")
}

/// Exact division of a Hodge-Deligne-side value by u^a v^b.
pub fn exact_divide_bi(p: &BiPoly, a: u32, b: u32) -> Result<BiPoly> {
    p.divide_exact(a, b, "u", "v")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::motivic::{symmetric_powers, GeneratorEntry, GeneratorPowers};
    use num::BigInt;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn cl(s: &str) -> MotivicClass {
        MotivicClass::parse(s).unwrap()
    }

    fn up(s: &str) -> UniPoly {
        UniPoly::parse(s, "t").unwrap()
    }

    fn bp(s: &str) -> BiPoly {
        BiPoly::parse(s, "u", "v").unwrap()
    }

    #[test]
    fn poincare_of_cubic_surface() {
        let p = poincare(&cl("1 + 7L + L^2"), &GeneratorTable::empty()).unwrap();
        assert_eq!(p, up("1 + 7t^2 + t^4"));
    }

    #[test]
    fn hodge_deligne_of_odp_display() {
        let table = GeneratorTable::odp_standard();
        let hd = hodge_deligne(&cl("1 - L + L^3 - L*[V]"), &table).unwrap();
        let expected = &bp("1 - u*v + u^3*v^3") - &(&bp("u*v") * &bp("1 - 4u - 4v + u*v"));
        assert_eq!(hd, expected);
    }

    #[test]
    fn point_count_of_plane_family_class() {
        let n = point_count(
            &cl("1 + 2L + 3L^2 + 2L^3 + L^4"),
            2,
            &GeneratorTable::empty(),
        )
        .unwrap();
        assert_eq!(n, crate::poly::rat(49));
    }

    #[test]
    fn point_count_gate_on_effective_flag() {
        let table = GeneratorTable::odp_standard();
        let err = point_count(&cl("1 + [V]"), 2, &table).unwrap_err();
        assert!(matches!(err, Error::PointCountUnavailable { .. }));
        // an effective toy generator counts through its even Poincare part
        let toy = GeneratorEntry {
            name: "W".to_string(),
            dimension: 1,
            poincare: up("1 + 3t^2"),
            hodge_deligne: bp("1 + 3u*v"),
            effective: true,
        };
        let table = GeneratorTable::new(vec![toy]).unwrap();
        let n = point_count(&cl("[W] + L"), 2, &table).unwrap();
        assert_eq!(n, crate::poly::rat(9));
    }

    #[test]
    fn missing_generator_named_in_error() {
        let err = poincare(&cl("[W]"), &GeneratorTable::empty()).unwrap_err();
        assert_eq!(
            err,
            Error::MissingGenerator {
                name: "W".to_string()
            }
        );
    }

    #[test]
    fn sym2_of_cubic_surface_poincare() {
        assert_eq!(
            sym2_uni(&up("1 + 7t^2 + t^4")),
            up("1 + 7t^2 + 29t^4 + 7t^6 + t^8")
        );
        assert_eq!(sym2_uni(&up("1")), up("1"));
    }

    #[test]
    fn sym2_bi_matches_halved_expansion() {
        let hd = bp("1 - 4u - 4v + u*v");
        let direct =
            &(&hd * &hd).scale(&ratio(1, 2)) + &bp("1 - 4u^2 - 4v^2 + u^2*v^2").scale(&ratio(1, 2));
        assert_eq!(sym2_bi(&hd), direct);
    }

    #[test]
    fn mod_uv_expansion_oracle() {
        // (1 - gu - gv - uv)^2 at g = 4, then mod uv
        let f = bp("1 - 4u - 4v - u*v");
        assert_eq!(mod_uv(&(&f * &f)), bp("1 - 8u - 8v + 16u^2 + 16v^2"));
    }

    #[test]
    fn exact_division_examples() {
        assert_eq!(exact_divide_uni(&up("27t^4"), 4).unwrap(), up("27"));
        assert_eq!(
            exact_divide_uni(&up("t^4 + t^6"), 4).unwrap(),
            up("1 + t^2")
        );
        let err = exact_divide_uni(&up("1 + t^4"), 4).unwrap_err();
        assert!(
            matches!(err, Error::DivisibilityViolation { ref monomial, .. } if monomial == "1")
        );
    }

    fn random_class(rng: &mut ChaCha8Rng, with_gens: bool) -> MotivicClass {
        let mut c = MotivicClass::zero();
        for _ in 0..rng.gen_range(1..5) {
            let l = rng.gen_range(0..3u32);
            let coeff = rng.gen_range(-3i64..=3);
            let gens = if with_gens && rng.gen_bool(0.4) {
                GeneratorPowers::single("V")
            } else {
                GeneratorPowers::empty()
            };
            c.add_term(gens, l, BigInt::from(coeff));
        }
        c
    }

    #[test]
    fn measures_are_ring_homomorphisms() {
        let table = GeneratorTable::odp_standard();
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..120 {
            let a = random_class(&mut rng, true);
            let b = random_class(&mut rng, true);
            let prod = &a * &b;
            let sum = &a + &b;
            // Poincare
            let pa = poincare(&a, &table).unwrap();
            let pb = poincare(&b, &table).unwrap();
            assert_eq!(poincare(&prod, &table).unwrap(), &pa * &pb);
            assert_eq!(poincare(&sum, &table).unwrap(), &pa + &pb);
            // Hodge-Deligne
            let ha = hodge_deligne(&a, &table).unwrap();
            let hb = hodge_deligne(&b, &table).unwrap();
            assert_eq!(hodge_deligne(&prod, &table).unwrap(), &ha * &hb);
            assert_eq!(hodge_deligne(&sum, &table).unwrap(), &ha + &hb);
        }
    }

    #[test]
    fn specialization_square() {
        // hodge_deligne then (u,v) -> (t,t) equals poincare
        let table = GeneratorTable::odp_standard();
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        for _ in 0..120 {
            let c = random_class(&mut rng, true);
            let hd = hodge_deligne(&c, &table).unwrap();
            assert_eq!(hd.specialize_diagonal(), poincare(&c, &table).unwrap());
        }
    }

    #[test]
    fn sym2_measure_matches_zeta_square() {
        // zeta-level and measure-level symmetric squares agree on
        // non-negative pure-L classes
        let table = GeneratorTable::empty();
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..120 {
            let mut c = MotivicClass::zero();
            for k in 0..3u32 {
                c.add_term(
                    GeneratorPowers::empty(),
                    k,
                    BigInt::from(rng.gen_range(0i64..4)),
                );
            }
            let sym2 = symmetric_powers(&c, 2).unwrap().pop().unwrap();
            assert_eq!(
                poincare(&sym2, &table).unwrap(),
                sym2_uni(&poincare(&c, &table).unwrap())
            );
            assert_eq!(
                hodge_deligne(&sym2, &table).unwrap(),
                sym2_bi(&hodge_deligne(&c, &table).unwrap())
            );
        }
    }

    #[test]
    fn mod_uv_is_ring_map_compatible() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        for _ in 0..120 {
            let mut a = BiPoly::zero();
            let mut b = BiPoly::zero();
            for _ in 0..4 {
                a.add_term(
                    rng.gen_range(0..3),
                    rng.gen_range(0..3),
                    crate::poly::rat(rng.gen_range(-3i64..=3)),
                );
                b.add_term(
                    rng.gen_range(0..3),
                    rng.gen_range(0..3),
                    crate::poly::rat(rng.gen_range(-3i64..=3)),
                );
            }
            let lhs = mod_uv(&(&a * &b));
            let rhs = mod_uv(&(&mod_uv(&a) * &mod_uv(&b)));
            assert_eq!(lhs, rhs);
        }
    }
}
