//! Numerical decision engine over declared variety profiles: expected Fano
//! dimensions, degree bounds, complete-intersection criteria, the family
//! case split, and the final cubic-hypersurface classification.
//!
//! All comparisons are exact over integers and rationals, boundary cases
//! included. Profile fields are trusted declarations; nothing here inspects
//! equations. The classifier presumes dim F(Y) = 2m - 4 has already been
//! established (the relation solver's output), and every verdict lists the
//! exact predicate values that fired, so runs are replayable.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyType {
    #[default]
    None,
    QuadricPencil,
    PlaneFamily,
    G14Section,
    Unknown,
}

/// Declared numerical profile of a subvariety Y of P^n.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VarietyProfile {
    pub ambient_n: i64,
    pub dim_m: i64,
    /// Degree of a single hypersurface; in the complete-intersection case the
    /// relevant quantity is the sum of `ci_degrees`, stored separately to
    /// keep the two notions apart.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree_d: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ci_degrees: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub equation_count: Option<i64>,
    pub smooth: bool,
    pub nondegenerate: bool,
    /// None means unknown.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fano_connected: Option<bool>,
    #[serde(default)]
    pub family_type: FamilyType,
    /// Second Betti number of Y, when supplied.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b2: Option<i64>,
}

impl VarietyProfile {
    pub fn validate(&self) -> Result<()> {
        if self.dim_m > self.ambient_n {
            return Err(Error::Domain {
                reason: format!(
                    "dim_m = {} exceeds ambient_n = {}",
                    self.dim_m, self.ambient_n
                ),
            });
        }
        if let Some(d) = self.degree_d {
            if d < 1 {
                return Err(Error::Domain {
                    reason: "degree_d must be >= 1".to_string(),
                });
            }
        }
        if let Some(ds) = &self.ci_degrees {
            if ds.iter().any(|&d| d < 1) {
                return Err(Error::Domain {
                    reason: "ci_degrees must all be >= 1".to_string(),
                });
            }
        }
        Ok(())
    }

    pub fn from_toml_str(s: &str) -> Result<Self> {
        let p: VarietyProfile = toml::from_str(s).map_err(|e| Error::Parse {
            input: "variety profile".to_string(),
            reason: e.to_string(),
        })?;
        p.validate()?;
        Ok(p)
    }

    fn codimension(&self) -> i64 {
        self.ambient_n - self.dim_m
    }

    fn ci_degree_sum(&self) -> Option<i64> {
        self.ci_degrees.as_ref().map(|ds| ds.iter().sum())
    }
}

/// Optional hypotheses that relax the numeric gates.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyOptions {
    /// Hartshorne's conjecture in codimension 2: gates weaken to
    /// 2d - 4 <= n together with n >= 7.
    #[serde(default)]
    pub assume_hartshorne: bool,
    /// Debarre-de Jong analogue for complete intersections: numeric gates
    /// removed entirely.
    #[serde(default)]
    pub assume_ddj: bool,
    /// Y contained in some hypersurface of degree d with 2d - 4 <= n; the
    /// option's only effect is that gate, nothing else is inferred from it.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub containing_hypersurface_degree: Option<i64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    CubicHypersurface,
    CubicOrTwoQuadrics,
    ExcludedFamilyCase,
    #[serde(rename = "excluded_22_ci")]
    Excluded22Ci,
    ExcludedNumeric,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Condition {
    pub name: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub branch: Branch,
    pub conditions_fired: Vec<Condition>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub citations: Vec<String>,
}

/// Expected dimension of the space of lines: 2(m+1) - d - 3 for a
/// hypersurface of degree d and dimension m; n - sum(d_i) + m - 2 for a
/// complete intersection in P^n. Errors without degree data.
pub fn expected_fano_dim(profile: &VarietyProfile) -> Result<i64> {
    if let Some(sum) = profile.ci_degree_sum() {
        return Ok(profile.ambient_n - sum + profile.dim_m - 2);
    }
    if let Some(d) = profile.degree_d {
        return Ok(2 * (profile.dim_m + 1) - d - 3);
    }
    Err(Error::Domain {
        reason: "expected_fano_dim needs degree_d or ci_degrees".to_string(),
    })
}

/// A general hypersurface of degree r in P^n carries no lines at all once
/// r > 2n - 3.
pub fn kollar_empty_fano(n: i64, r: i64) -> bool {
    r > 2 * n - 3
}

/// Bertram-Ein-Lazarsfeld criterion: a smooth variety of degree d and
/// codimension e in P^r is a complete intersection once d <= r / (2e).
/// Exact rational comparison, boundary included.
pub fn bel_complete_intersection(d: i64, r_ambient: i64, e_codim: i64) -> bool {
    // d <= r / 2e  <=>  2 e d <= r
    2 * e_codim * d <= r_ambient
}

/// Lower bound for the line-space dimension of an intersection of `u`
/// general hypersurfaces of degrees `degrees` in P^n:
/// (u + 1)(n - (R + 2)) + (R + 1) with R = max degree. Returns the bound and
/// whether it is <= 2m - 4. Degrees above 2n - 3 are routed to the empty-
/// Fano bound instead.
pub fn general_intersection_bound(n: i64, u: i64, degrees: &[i64], m: i64) -> Result<(i64, bool)> {
    if degrees.is_empty() {
        return Err(Error::Domain {
            reason: "general_intersection_bound needs at least one degree".to_string(),
        });
    }
    for &r in degrees {
        if kollar_empty_fano(n, r) {
            return Err(Error::Domain {
                reason: format!(
                    "degree {r} > 2n - 3 = {}: a general hypersurface of that degree has an empty space of lines, so the degree-bound exclusion applies instead",
                    2 * n - 3
                ),
            });
        }
    }
    let r_max = *degrees.iter().max().expect("nonempty");
    let bound = (u + 1) * (n - (r_max + 2)) + (r_max + 1);
    Ok((bound, bound <= 2 * m - 4))
}

/// Chain bound for complete intersections of u >= 2 general hypersurfaces:
/// dim F(Y) >= u(n - 2) - 1 >= 2n - 5, which exceeds 2m - 4 whenever
/// m <= n - 2. Returns (lower bound, excluded).
pub fn general_ci_excluded(n: i64, u: i64, m: i64) -> (i64, bool) {
    let bound = u * (n - 2) - 1;
    (bound, bound > 2 * m - 4)
}

struct Conditions(Vec<Condition>);

impl Conditions {
    fn push(&mut self, name: &str, value: impl ToString) {
        self.0.push(Condition {
            name: name.to_string(),
            value: value.to_string(),
        });
    }
}

/// The main classifier. Presumes dim F(Y) = 2m - 4 established upstream.
pub fn classify_profile(profile: &VarietyProfile, opts: &ClassifyOptions) -> Verdict {
    let mut c = Conditions(Vec::new());
    let mut citations = Vec::new();
    let n = profile.ambient_n;
    let m = profile.dim_m;
    c.push("dim_fano = 2m - 4 established upstream", 2 * m - 4);

    let verdict = |branch: Branch, c: Conditions, citations: Vec<String>| Verdict {
        branch,
        conditions_fired: c.0,
        citations,
    };

    // family case split first: declared families fail the symmetric-square
    // coefficient test outright
    match profile.family_type {
        FamilyType::QuadricPencil | FamilyType::PlaneFamily => {
            c.push("family_type", format!("{:?}", profile.family_type));
            citations.push(
                "pencils of quadrics and plane families have b0(F(Y)) = 3 from the symmetric-square coefficients, so F(Y) cannot be connected".to_string(),
            );
            return verdict(Branch::ExcludedFamilyCase, c, citations);
        }
        FamilyType::G14Section => {
            c.push("family_type", "G14Section");
            c.push(
                "max dimension of a linear section of the line Grassmannian of P^4",
                6,
            );
            return verdict(Branch::Inconclusive, c, citations);
        }
        FamilyType::Unknown => {
            c.push("family_type", "Unknown");
            c.push("family alternatives excluded", false);
            return verdict(Branch::Inconclusive, c, citations);
        }
        FamilyType::None => {
            c.push("family_type", "None");
        }
    }

    if !profile.smooth || !profile.nondegenerate {
        c.push("smooth", profile.smooth);
        c.push("nondegenerate", profile.nondegenerate);
        return verdict(Branch::Inconclusive, c, citations);
    }
    c.push("smooth", true);
    c.push("nondegenerate", true);

    if m < 7 {
        c.push("dim_m >= 7", format!("false (m = {m})"));
        return verdict(Branch::Inconclusive, c, citations);
    }
    c.push("dim_m >= 7", format!("true (m = {m})"));

    // numeric gates: any one suffices
    let degree_for_gate = profile.ci_degree_sum().or(profile.degree_d);
    let mut gate = false;
    if let Some(d) = degree_for_gate {
        let g = 4 * d <= n;
        c.push("gate: d <= n/4", format!("{g} (d = {d}, n = {n})"));
        gate |= g;
    }
    if let Some(eqs) = profile.equation_count {
        let g = 2 * eqs <= n;
        c.push(
            "gate: defined by <= n/2 equations",
            format!("{g} ({eqs} equations, n = {n})"),
        );
        gate |= g;
    }
    if opts.assume_hartshorne {
        if let Some(d) = degree_for_gate {
            let g = 2 * d - 4 <= n && n >= 7;
            c.push(
                "gate (Hartshorne assumed): 2d - 4 <= n and n >= 7",
                format!("{g} (d = {d}, n = {n})"),
            );
            citations.push("Hartshorne's conjecture in codimension 2".to_string());
            gate |= g;
        }
    }
    if let Some(dc) = opts.containing_hypersurface_degree {
        let g = 2 * dc - 4 <= n;
        c.push(
            "gate: contained in a hypersurface of degree d with 2d - 4 <= n",
            format!("{g} (d = {dc}, n = {n})"),
        );
        gate |= g;
    }
    if opts.assume_ddj {
        c.push(
            "gate: Debarre-de Jong analogue assumed, numeric conditions removed",
            true,
        );
        citations.push("Debarre-de Jong analogue for complete intersections".to_string());
        gate = true;
    }
    if !gate {
        c.push("numeric gates", "none satisfied");
        return verdict(Branch::Inconclusive, c, citations);
    }

    // with the gates and the family split, the line-space dimension pins the
    // codimension to <= 2
    citations.push(
        "Rogora: an irreducible k-fold (k >= 4) whose maximal family of lines has dimension 2k - 4 is one of the listed families or has codimension <= 2".to_string(),
    );
    let codim = profile.codimension();
    c.push("codimension n - m", codim);
    if codim >= 3 {
        c.push("codimension <= 2", false);
        return verdict(Branch::ExcludedNumeric, c, citations);
    }

    if codim == 1 {
        let Some(d) = profile.degree_d else {
            c.push("degree_d", "missing");
            return verdict(Branch::Inconclusive, c, citations);
        };
        let expected = 2 * (m + 1) - d - 3;
        citations.push(
            "Beheshti-Riedl: a smooth hypersurface with n >= 2d - 4 has a line space of the expected dimension 2n - d - 3".to_string(),
        );
        c.push("expected line-space dimension 2(m+1) - d - 3", expected);
        if expected != 2 * m - 4 {
            c.push("expected dimension equals 2m - 4 (forces d = 3)", false);
            return verdict(Branch::ExcludedNumeric, c, citations);
        }
        c.push("expected dimension equals 2m - 4 (forces d = 3)", true);
        // connectedness of F upgrades the two-branch conclusion to cubic only
        let connected_evidence = match (profile.fano_connected, profile.b2) {
            (Some(true), _) => Some("fano_connected declared".to_string()),
            (_, Some(1)) => Some("b2 = 1 supplied, so b0(F) = (1/2)(b2^2 + b2) = 1".to_string()),
            _ => None,
        };
        match connected_evidence {
            Some(evidence) => {
                c.push("F(Y) connected", evidence);
                verdict(Branch::CubicHypersurface, c, citations)
            }
            None => {
                c.push("F(Y) connected", "unknown");
                verdict(Branch::CubicOrTwoQuadrics, c, citations)
            }
        }
    } else {
        // codimension 2: the gates make Y a complete intersection
        citations.push(
            "Bertram-Ein-Lazarsfeld: degree <= r/(2e) forces a complete intersection; so does definition by <= n/2 equations".to_string(),
        );
        let Some(sum) = profile.ci_degree_sum() else {
            c.push("ci_degrees", "missing");
            return verdict(Branch::Inconclusive, c, citations);
        };
        c.push("sum of CI degrees", sum);
        let expected = n - sum + m - 2;
        c.push(
            "expected line-space dimension n - sum(d_i) + m - 2",
            expected,
        );
        if expected != 2 * m - 4 {
            c.push("expected dimension equals 2m - 4 (forces sum = 4)", false);
            return verdict(Branch::ExcludedNumeric, c, citations);
        }
        c.push("expected dimension equals 2m - 4 (forces sum = 4)", true);
        if profile
            .ci_degrees
            .as_deref()
            .is_some_and(|ds| ds.iter().any(|&d| d < 2))
        {
            c.push("nondegenerate forces every CI degree >= 2", false);
            return verdict(Branch::Inconclusive, c, citations);
        }
        c.push("CI degrees", "(2, 2) by nondegeneracy");
        if profile.fano_connected == Some(true) {
            let b2_line = match profile.b2 {
                Some(b2) if b2 >= 2 => format!("b2 = {b2} supplied"),
                Some(b2) => {
                    c.push("b2 supplied", b2);
                    c.push("b2 consistent with connected F (needs b2 = 1)", b2 == 1);
                    // a (2,2) complete intersection with b2 = 1 contradicts
                    // the declared shape; leave it undecided
                    return verdict(Branch::Inconclusive, c, citations);
                }
                None => "b2 >= 2 for smooth intersections of two quadrics".to_string(),
            };
            c.push(
                "connected F forces b0(F) = (1/2)(b2^2 + b2) = 1, i.e. b2 = 1",
                true,
            );
            c.push("second Betti number of the (2,2) intersection", b2_line);
            citations.push(
                "connected F(Y) forces b2(Y) = 1, while an intersection of two quadrics has a larger second Betti number".to_string(),
            );
            verdict(Branch::Excluded22Ci, c, citations)
        } else {
            c.push("F(Y) connected", "unknown or false");
            verdict(Branch::CubicOrTwoQuadrics, c, citations)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hypersurface_profile(m: i64, d: i64) -> VarietyProfile {
        VarietyProfile {
            ambient_n: m + 1,
            dim_m: m,
            degree_d: Some(d),
            ci_degrees: None,
            equation_count: Some(1),
            smooth: true,
            nondegenerate: true,
            fano_connected: Some(true),
            family_type: FamilyType::None,
            b2: None,
        }
    }

    #[test]
    fn expected_dims() {
        // hypersurface of degree 3: 2m - 4
        for m in 1..=12 {
            assert_eq!(
                expected_fano_dim(&hypersurface_profile(m, 3)).unwrap(),
                2 * m - 4
            );
        }
        // codimension-2 CI with degree sum 4
        let mut p = hypersurface_profile(8, 3);
        p.ambient_n = 10;
        p.degree_d = None;
        p.ci_degrees = Some(vec![2, 2]);
        assert_eq!(expected_fano_dim(&p).unwrap(), 12);
        // d = 2, m = 3: 2*4 - 2 - 3 = 3
        assert_eq!(expected_fano_dim(&hypersurface_profile(3, 2)).unwrap(), 3);
        let mut none = hypersurface_profile(3, 2);
        none.degree_d = None;
        assert!(expected_fano_dim(&none).is_err());
    }

    #[test]
    fn hypersurface_and_ci_formulas_agree() {
        // the CI formula with a single degree reduces to the hypersurface one
        for d in 1..=10i64 {
            for m in 1..=10i64 {
                let hyp = hypersurface_profile(m, d);
                let mut ci = hyp.clone();
                ci.degree_d = None;
                ci.ci_degrees = Some(vec![d]);
                assert_eq!(
                    expected_fano_dim(&hyp).unwrap(),
                    expected_fano_dim(&ci).unwrap(),
                    "d={d} m={m}"
                );
            }
        }
    }

    #[test]
    fn kollar_bound() {
        assert!(kollar_empty_fano(4, 6));
        assert!(!kollar_empty_fano(4, 5));
        // degenerate n: 1 > -1
        assert!(kollar_empty_fano(1, 1));
    }

    #[test]
    fn bel_criterion() {
        assert!(bel_complete_intersection(2, 16, 2));
        assert!(!bel_complete_intersection(5, 16, 2));
        // boundary inclusive
        assert!(bel_complete_intersection(8, 16, 1));
    }

    #[test]
    fn intersection_bounds() {
        let (bound, sat) = general_intersection_bound(10, 2, &[2, 2], 8).unwrap();
        assert_eq!(bound, 21);
        assert!(!sat);
        // u = 1 chain collapses to the hypersurface expected dimension
        for d in 1..=10i64 {
            for m in 1..=12i64 {
                let n = m + 1;
                if kollar_empty_fano(n, d) {
                    assert!(general_intersection_bound(n, 1, &[d], m).is_err());
                    continue;
                }
                let (bound, _) = general_intersection_bound(n, 1, &[d], m).unwrap();
                assert_eq!(bound, 2 * n - d - 3);
                if d == 3 {
                    let (b, sat) = general_intersection_bound(n, 1, &[3], m).unwrap();
                    assert_eq!(b, 2 * m - 4);
                    assert!(sat);
                }
            }
        }
        // part 2: u >= 2 general CIs always overshoot 2m - 4
        for n in 4..=20i64 {
            for m in 2..=(n - 2) {
                let (bound, excluded) = general_ci_excluded(n, 2, m);
                assert!(bound >= 2 * n - 5);
                assert!(excluded, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn classify_cubic_hypersurface() {
        let p = hypersurface_profile(8, 3);
        let v = classify_profile(&p, &ClassifyOptions::default());
        assert_eq!(v.branch, Branch::CubicHypersurface);
        assert!(!v.conditions_fired.is_empty());
        // deterministic and replayable
        assert_eq!(v, classify_profile(&p, &ClassifyOptions::default()));
    }

    #[test]
    fn classify_two_branch_then_b2_upgrade() {
        let mut p = hypersurface_profile(8, 3);
        p.fano_connected = None;
        let v = classify_profile(&p, &ClassifyOptions::default());
        assert_eq!(v.branch, Branch::CubicOrTwoQuadrics);
        p.b2 = Some(1);
        let v = classify_profile(&p, &ClassifyOptions::default());
        assert_eq!(v.branch, Branch::CubicHypersurface);
    }

    #[test]
    fn classify_family_exclusion() {
        let mut p = hypersurface_profile(8, 3);
        p.family_type = FamilyType::QuadricPencil;
        let v = classify_profile(&p, &ClassifyOptions::default());
        assert_eq!(v.branch, Branch::ExcludedFamilyCase);
    }

    #[test]
    fn classify_low_dimension_inconclusive() {
        let p = hypersurface_profile(5, 3);
        let v = classify_profile(&p, &ClassifyOptions::default());
        assert_eq!(v.branch, Branch::Inconclusive);
        assert!(v
            .conditions_fired
            .iter()
            .any(|c| c.name.contains("dim_m >= 7") && c.value.contains("false")));
    }

    #[test]
    fn classify_22_exclusion() {
        let p = VarietyProfile {
            ambient_n: 10,
            dim_m: 8,
            degree_d: None,
            ci_degrees: Some(vec![2, 2]),
            equation_count: Some(2),
            smooth: true,
            nondegenerate: true,
            fano_connected: Some(true),
            family_type: FamilyType::None,
            b2: Some(2),
        };
        let v = classify_profile(&p, &ClassifyOptions::default());
        assert_eq!(v.branch, Branch::Excluded22Ci);
    }

    #[test]
    fn classify_hartshorne_gate() {
        // degree 5 hypersurface in P^9 fails both plain gates if declared by
        // many equations, but 2d - 4 = 6 <= 9 passes under Hartshorne;
        // it is then excluded by expected dimension
        let mut p = hypersurface_profile(8, 5);
        p.equation_count = None;
        let plain = classify_profile(&p, &ClassifyOptions::default());
        assert_eq!(plain.branch, Branch::Inconclusive);
        let opts = ClassifyOptions {
            assume_hartshorne: true,
            ..Default::default()
        };
        let v = classify_profile(&p, &opts);
        assert_eq!(v.branch, Branch::ExcludedNumeric);
    }

    #[test]
    fn profile_toml_round_trip() {
        let toml = r#"
            ambient_n = 9
            dim_m = 8
            degree_d = 3
            equation_count = 1
            smooth = true
            nondegenerate = true
            fano_connected = true
            family_type = "none"
        "#;
        let p = VarietyProfile::from_toml_str(toml).unwrap();
        assert_eq!(p, hypersurface_profile(8, 3));
        assert!(VarietyProfile::from_toml_str(
            "ambient_n = 2\ndim_m = 5\nsmooth = true\nnondegenerate = true"
        )
        .is_err());
    }
}
