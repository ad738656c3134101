//! Symmetric powers through the Kapranov zeta function.
//!
//! For a pure-Lefschetz class c = sum_k c_k L^k the zeta function factors as
//! zeta_c(s) = prod_k (1 - L^k s)^{-c_k}, which stays meaningful for negative
//! c_k (virtual classes) via the binomial series. The symmetric powers are
//! its s-coefficients; for non-negative c_k this agrees with the term
//! convolution ([X_1] + ... + [X_l])^(n) = sum over n_1+...+n_l = n of
//! prod [X_i]^(n_i).

use num::ToPrimitive;

use super::MotivicClass;
use crate::error::Error;
use crate::poly::MultiPoly;
use crate::Result;

/// Returns `[c^(1)], ..., [c^(order)]`.
///
/// Classes containing symbolic generators are refused: their symmetric powers
/// only exist at measure level (see the measure module's symmetric-square
/// formula).
pub fn symmetric_powers(class: &MotivicClass, order: u32) -> Result<Vec<MotivicClass>> {
    if !class.is_pure_lefschetz() {
        return Err(Error::SymbolicSymmetricPower {
            generators: class.generator_names().join(", "),
        });
    }
    let ring = &["L", "s"];
    let one = MultiPoly::one(ring);
    let mut zeta = one.clone();
    for (_, l_power, coeff) in class.terms() {
        let exponent = -coeff.to_i64().ok_or_else(|| Error::Domain {
            reason: format!("coefficient {coeff} too large for zeta expansion"),
        })?;
        // factor (1 - L^k s)^{-c_k}
        let factor = one
            .sub(&MultiPoly::monomial(
                ring,
                vec![l_power, 1],
                crate::poly::rat(1),
            ))
            .expect("same ring");
        let series = factor.series_binomial(exponent, order, "s")?;
        zeta = zeta
            .mul(&series)
            .expect("same ring")
            .truncate_in("s", order)?;
    }
    let mut powers = Vec::with_capacity(order as usize);
    for n in 1..=order {
        let slice = zeta.coefficient_of_power("s", n)?;
        let p = slice.to_unipoly("L")?;
        powers.push(MotivicClass::from_l_polynomial(&p)?);
    }
    Ok(powers)
}
