//! Renderers for the two output formats.
//!
//! Text output is a single verdict line, optionally preceded by a
//! numbered trace that mirrors the check order, with the rho line
//! placed where the procedure computes it: before the first record of
//! a power-family candidate. Both renderers are deterministic, so
//! identical inputs always produce byte-identical reports.

use std::fmt::Write as _;

use crate::critical_graphs::CandidateGroup;
use crate::decider::{CheckRecord, CheckStage, Verdict};
use crate::graph::Edge;

/// Candidates visited by the loop over rho, as opposed to the fixed
/// head of the candidate list.
fn is_rho_family(cand: CandidateGroup) -> bool {
    match cand {
        CandidateGroup::Psl2CharTwo { p } => p.get() != 2,
        CandidateGroup::Suzuki { .. } | CandidateGroup::Psl2CharThree { .. } => true,
        CandidateGroup::Psl2Prime { .. } | CandidateGroup::Psl3Three => false,
    }
}

fn edge_list(edges: &[Edge]) -> String {
    let mut out = String::from("{");
    for (i, e) in edges.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        let _ = write!(out, "{e}");
    }
    out.push('}');
    out
}

fn record_line(rec: &CheckRecord) -> String {
    let head = format!("{} [{}]", rec.candidate, rec.stage);
    match rec.stage {
        CheckStage::VertexContainment => {
            let support = rec.support.as_deref().unwrap_or("?");
            if rec.passed {
                let primes = rec
                    .support_primes
                    .as_ref()
                    .map_or_else(|| "?".to_string(), |s| s.to_string());
                format!("{head}: pass, π({support}) = {primes} ⊆ π")
            } else {
                let missing = rec
                    .missing
                    .as_ref()
                    .map_or_else(String::new, |m| format!("{m}; "));
                format!("{head}: FAIL, {missing}π({support}) ⊄ π")
            }
        }
        CheckStage::EdgeContainment | CheckStage::HardcodedLine => {
            let required = rec
                .required_edges
                .as_deref()
                .map_or_else(|| "{}".to_string(), edge_list);
            if rec.passed {
                format!("{head}: pass, required edges {required} all present (witness)")
            } else {
                let missing = rec
                    .missing
                    .as_ref()
                    .map_or_else(String::new, |m| format!("{m}; "));
                format!("{head}: FAIL, {missing}required {required}")
            }
        }
    }
}

/// The trace lines in execution order, including the rho line at the
/// point the procedure computes it. The rho line is omitted when a
/// witness stopped the run before the power families.
fn trace_lines(verdict: &Verdict) -> Vec<String> {
    let mut lines = Vec::new();
    let mut rho_emitted = false;
    for rec in &verdict.trace {
        if !rho_emitted && is_rho_family(rec.candidate) {
            lines.push(format!("ρ = {}", verdict.rho));
            rho_emitted = true;
        }
        lines.push(record_line(rec));
    }
    if !rho_emitted && verdict.is_soluble_shemetkov {
        lines.push(format!("ρ = {}", verdict.rho));
    }
    lines
}

pub fn render_text(verdict: &Verdict, emit_trace: bool) -> String {
    let mut out = String::new();
    if emit_trace {
        for (i, line) in trace_lines(verdict).iter().enumerate() {
            let _ = writeln!(out, "{}. {line}", i + 1);
        }
        let _ = writeln!(out, "candidates checked: {}", verdict.candidates_checked);
    }
    if verdict.is_soluble_shemetkov {
        out.push_str("VERDICT: soluble+Shemetkov\n");
    } else {
        let witness = verdict
            .witness
            .as_ref()
            .expect("a negative verdict always carries a witness");
        let _ = writeln!(out, "VERDICT: not guaranteed — witness {witness}");
        if let Some(all) = &verdict.witnesses {
            let names: Vec<String> = all.iter().map(|w| w.to_string()).collect();
            let _ = writeln!(out, "witnesses: {}", names.join(", "));
        }
    }
    out
}

pub fn render_json(verdict: &Verdict) -> String {
    let mut out = serde_json::to_string_pretty(verdict).expect("verdict serialization cannot fail");
    out.push('\n');
    out
}
