//! Decides whether a target relation is generated by a distinguished
//! relation in the composition sense: target = A(f) for a single polynomial
//! A over the rational scalars with zero constant term.
//!
//! The generator f must be homogeneous of degree 1 in the designated
//! T-variables with no T-free part; then A(f) = sum a_j f^j splits along the
//! T-degree grading and each layer determines a_j by one scalar division,
//! with every remaining coefficient an exact consistency check. The first
//! layer that cannot be matched is returned as the non-generation
//! certificate.

use num::Zero;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::poly::{MultiPoly, Rational};
use crate::Result;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "outcome")]
pub enum GenerationOutcome {
    /// target = sum_j coefficients[j-1] * f^j.
    Generated { coefficients: Vec<String> },
    NotGenerated {
        layer: u32,
        monomial: String,
        requirement: String,
    },
}

/// T-degree of an exponent vector: total exponent over the T-variable
/// indices.
fn t_degree(exps: &[u32], t_indices: &[usize]) -> u32 {
    t_indices.iter().map(|&i| exps[i]).sum()
}

fn t_layer(p: &MultiPoly, t_indices: &[usize], d: u32) -> MultiPoly {
    let vars: Vec<&str> = p.vars().iter().map(|s| s.as_str()).collect();
    let mut out = MultiPoly::zero(&vars);
    for (e, c) in p.terms() {
        if t_degree(e, t_indices) == d {
            out.add_term(e.clone(), c.clone());
        }
    }
    out
}

/// Solves target = A(relation) layer by layer along the T-degree grading.
/// `t_vars` names the graded variables; everything else is coefficient
/// territory. The relation must be T-linear with zero T-free part, and A is
/// constrained to rational scalars and zero constant term.
pub fn expressed_as_polynomial_of(
    target: &MultiPoly,
    relation: &MultiPoly,
    t_vars: &[&str],
) -> Result<GenerationOutcome> {
    if relation.vars() != target.vars() {
        return Err(Error::VariableMismatch {
            left: relation.vars().join(", "),
            right: target.vars().join(", "),
        });
    }
    let t_indices: Vec<usize> = t_vars
        .iter()
        .map(|t| relation.var_index(t))
        .collect::<Result<_>>()?;
    for (e, _) in relation.terms() {
        if t_degree(e, &t_indices) != 1 {
            return Err(Error::Domain {
                reason:
                    "the generating relation must be homogeneous of degree 1 in the T-variables"
                        .to_string(),
            });
        }
    }
    if relation.is_zero() {
        return Err(Error::Domain {
            reason: "the generating relation must be nonzero".to_string(),
        });
    }

    // layer 0: A has zero constant term, so the target may not have a
    // T-free part
    let layer0 = t_layer(target, &t_indices, 0);
    if !layer0.is_zero() {
        let (mono, coeff) = layer0
            .terms()
            .next()
            .map(|(e, c)| (layer0.render_monomial(e), c.clone()))
            .expect("nonzero layer");
        return Ok(GenerationOutcome::NotGenerated {
            layer: 0,
            requirement: format!(
                "A has zero constant term, but the target has T-free term {coeff}*{mono}"
            ),
            monomial: mono,
        });
    }

    let max_layer = target
        .terms()
        .map(|(e, _)| t_degree(e, &t_indices))
        .max()
        .unwrap_or(0);
    let mut coefficients = Vec::new();
    let mut fpow = MultiPoly::one(
        &relation
            .vars()
            .iter()
            .map(|s| s.as_str())
            .collect::<Vec<_>>(),
    );
    for j in 1..=max_layer {
        fpow = fpow.mul(relation)?;
        let wj = t_layer(target, &t_indices, j);
        // f^j is T-homogeneous of degree j, so it is the only contribution
        // to this layer; a_j comes from any one monomial of f^j
        let (pivot_e, pivot_c) = fpow.terms().next().expect("power of nonzero poly");
        let a_j = wj.coeff_of(pivot_e) / pivot_c;
        let residue = wj.sub(&fpow.scale(&a_j))?;
        if let Some((e, c)) = residue.terms().next() {
            let mono = residue.render_monomial(e);
            let needed = fpow.coeff_of(e);
            return Ok(GenerationOutcome::NotGenerated {
                layer: j,
                monomial: mono.clone(),
                requirement: format!(
                    "layer {j} forces a_{j} = {a_j} from the pivot monomial, but the coefficient of {mono} then needs {a_j} * ({needed}) = {}, which fails by {c}",
                    wj.coeff_of(e)
                ),
            });
        }
        coefficients.push(a_j);
    }
    // drop trailing zero coefficients for a tidy A
    while coefficients.last().is_some_and(Rational::is_zero) {
        coefficients.pop();
    }
    Ok(GenerationOutcome::Generated {
        coefficients: coefficients.iter().map(|c| c.to_string()).collect(),
    })
}
