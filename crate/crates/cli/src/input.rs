//! check-yfy input handling: inline flags or TOML files with [poincare],
//! [class], and [profile] sections, any subset present.

use serde::{Deserialize, Serialize};

use motivic_core::classify::{classify_profile, Branch, ClassifyOptions, VarietyProfile, Verdict};
use motivic_core::error::Error;
use motivic_core::fano::{solve_fano_class, solve_fano_poincare, FanoReportDoc};
use motivic_core::motivic::MotivicClass;
use motivic_core::poly::UniPoly;
use motivic_core::Result;

#[derive(Clone, Debug, Deserialize)]
pub struct PoincareSection {
    pub p: String,
    pub m: u32,
}

#[derive(Clone, Debug, Deserialize)]
pub struct ClassSection {
    pub y: String,
    pub m: u32,
    #[serde(default)]
    pub sing: Option<String>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct CheckInput {
    #[serde(default)]
    pub poincare: Option<PoincareSection>,
    #[serde(default)]
    pub class: Option<ClassSection>,
    #[serde(default)]
    pub profile: Option<VarietyProfile>,
    #[serde(default)]
    pub options: Option<ClassifyOptions>,
}

impl CheckInput {
    pub fn from_toml_str(s: &str) -> Result<Self> {
        let input: CheckInput = toml::from_str(s).map_err(|e| Error::Parse {
            input: "check-yfy input".to_string(),
            reason: e.to_string(),
        })?;
        if input.poincare.is_none() && input.class.is_none() && input.profile.is_none() {
            return Err(Error::Parse {
                input: "check-yfy input".to_string(),
                reason: "need at least one of [poincare], [class], [profile]".to_string(),
            });
        }
        if let Some(p) = &input.profile {
            p.validate()?;
        }
        Ok(input)
    }

    pub fn from_flags(
        poincare: Option<&str>,
        class: Option<&str>,
        m: Option<u32>,
        sing: Option<&str>,
    ) -> Result<Self> {
        if poincare.is_none() && class.is_none() {
            return Err(Error::Parse {
                input: "check-yfy".to_string(),
                reason: "need --poincare or --class (or --profile/--batch)".to_string(),
            });
        }
        let m = m.ok_or_else(|| Error::Parse {
            input: "check-yfy".to_string(),
            reason: "--m is required with --poincare/--class".to_string(),
        })?;
        Ok(CheckInput {
            poincare: poincare.map(|p| PoincareSection {
                p: p.to_string(),
                m,
            }),
            class: class.map(|y| ClassSection {
                y: y.to_string(),
                m,
                sing: sing.map(|s| s.to_string()),
            }),
            profile: None,
            options: None,
        })
    }
}

/// Combined output of the relation pipeline; whichever stages had input.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct CheckReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fano_report: Option<FanoReportDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fano_class: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class_obstruction: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<Verdict>,
}

impl CheckReport {
    pub fn obstructed(&self) -> bool {
        let report_blocked = self
            .fano_report
            .as_ref()
            .is_some_and(|r| !r.violations.is_empty());
        let class_blocked = self.class_obstruction.is_some();
        let excluded = self.verdict.as_ref().is_some_and(|v| {
            matches!(
                v.branch,
                Branch::ExcludedFamilyCase | Branch::Excluded22Ci | Branch::ExcludedNumeric
            )
        });
        report_blocked || class_blocked || excluded
    }
}

pub fn evaluate_check_input(input: &CheckInput, explain: bool) -> Result<CheckReport> {
    let mut out = CheckReport {
        fano_report: None,
        fano_class: None,
        class_obstruction: None,
        verdict: None,
    };
    if let Some(section) = &input.poincare {
        let p = UniPoly::parse(&section.p, "t")?;
        out.fano_report = Some(solve_fano_poincare(&p, section.m)?.to_doc());
    }
    if let Some(section) = &input.class {
        let y = MotivicClass::parse(&section.y)?;
        let sing = match &section.sing {
            Some(s) => MotivicClass::parse(s)?,
            None => MotivicClass::zero(),
        };
        match solve_fano_class(&y, section.m, &sing) {
            Ok(f) => out.fano_class = Some(f.to_canonical()),
            Err(err @ Error::DivisibilityViolation { .. }) => {
                out.class_obstruction = Some(err.to_string());
            }
            Err(other) => return Err(other),
        }
    }
    if let Some(profile) = &input.profile {
        let opts = input.options.clone().unwrap_or_default();
        let mut verdict = classify_profile(profile, &opts);
        if !explain {
            verdict.citations.clear();
        }
        out.verdict = Some(verdict);
    }
    Ok(out)
}
