//! Plain-text renderings of the report types for `--format text`.

use motivic_core::classify::Verdict;
use motivic_core::generate::GenerationOutcome;
use motivic_core::study::Certificate;

use crate::input::CheckReport;

pub fn sym_powers(class: &str, powers: &[String]) -> String {
    let mut out = vec![format!("c = {class}")];
    for (i, p) in powers.iter().enumerate() {
        out.push(format!("c^({}) = {p}", i + 1));
    }
    out.join("\n")
}

pub fn check_report(report: &CheckReport) -> String {
    let mut out = Vec::new();
    if let Some(r) = &report.fano_report {
        out.push(format!("lhs = {}", r.lhs));
        out.push(format!(
            "divisible by t^4: {}",
            if r.divisible_by_t4 { "yes" } else { "no" }
        ));
        if let Some(p) = &r.p_fano {
            out.push(format!("p_F(t) = {p}"));
        }
        if let Some(d) = r.dim_fano {
            out.push(format!("dim F = {d}"));
        }
        if let Some(b0) = &r.b0_fano {
            out.push(format!("b0(F) = {b0}"));
        }
        for v in &r.violations {
            out.push(format!("violation at {}: {}", v.monomial, v.reason));
        }
    }
    if let Some(f) = &report.fano_class {
        out.push(format!("[F(Y)] = {f}"));
    }
    if let Some(o) = &report.class_obstruction {
        out.push(format!("class-level obstruction: {o}"));
    }
    if let Some(v) = &report.verdict {
        out.push(verdict(v));
    }
    out.join("\n")
}

pub fn verdict(v: &Verdict) -> String {
    let mut out = vec![format!("branch: {}", branch_name(v))];
    for c in &v.conditions_fired {
        out.push(format!("  {} = {}", c.name, c.value));
    }
    for cite in &v.citations {
        out.push(format!("  [cite] {cite}"));
    }
    out.join("\n")
}

fn branch_name(v: &Verdict) -> String {
    serde_json::to_value(v.branch)
        .ok()
        .and_then(|x| x.as_str().map(|s| s.to_string()))
        .unwrap_or_else(|| format!("{:?}", v.branch))
}

pub fn kernel(order: &str, basis: &[String]) -> String {
    let mut out = vec![format!("order: {order}")];
    for b in basis {
        out.push(format!("  {b}"));
    }
    out.join("\n")
}

pub fn certificate(cert: &Certificate) -> String {
    let mut out = vec![format!("study: {}", cert.name)];
    for claim in &cert.claims {
        if claim.matched {
            out.push(format!("  [ok] {}: {}", claim.description, claim.computed));
        } else {
            out.push(format!(
                "  [FAIL] {}: expected {}, got {}",
                claim.description, claim.expected, claim.computed
            ));
        }
    }
    for cite in &cert.citations {
        out.push(format!("  [cite] {cite}"));
    }
    out.push(format!(
        "overall: {}",
        if cert.overall { "PASS" } else { "FAIL" }
    ));
    out.join("\n")
}

pub fn generation(outcome: &GenerationOutcome) -> String {
    match outcome {
        GenerationOutcome::Generated { coefficients } => {
            let terms: Vec<String> = coefficients
                .iter()
                .enumerate()
                .filter(|(_, c)| c.as_str() != "0")
                .map(|(i, c)| format!("{c} X^{}", i + 1))
                .collect();
            format!("generated: A(X) = {}", terms.join(" + "))
        }
        GenerationOutcome::NotGenerated {
            layer,
            monomial,
            requirement,
        } => format!("not generated (layer {layer}, at {monomial}): {requirement}"),
    }
}
