//! Plain-text renderings of verification results. Column layouts are stable;
//! comment lines start with `#`.

use std::fmt::Write;

use edgecrit_core::criticality::{EdgeCriticalityReport, Verdict, VertexCriticalityReport};
use edgecrit_core::homomorphism::{LowerBoundReport, StepEvidence};
use edgecrit_core::solver::ChromaticResult;
use edgecrit_core::Graph;

use crate::sweep::RatioRow;

fn yes_no(flag: bool) -> &'static str {
    if flag {
        "yes"
    } else {
        "no"
    }
}

/// One line per edge: `edge case colours_used proper endpoints_monochromatic
/// verdict`, plus a `solver` column when solver checks ran.
pub fn edge_report(report: &EdgeCriticalityReport) -> String {
    let with_solver = report.gn_not_colorable.is_some();
    let mut out = String::from("# edge case colours_used proper endpoints_monochromatic verdict");
    if with_solver {
        out.push_str(" solver");
    }
    out.push('\n');
    for row in &report.rows {
        write!(
            out,
            "{},{} {} {} {} {} {}",
            row.chords.0,
            row.chords.1,
            row.case.map_or("none", |c| c.name()),
            row.colors_used,
            yes_no(row.proper),
            yes_no(row.endpoints_monochromatic),
            row.verdict().name(),
        )
        .unwrap();
        if let Some(check) = row.solver {
            write!(out, " {}", check.name()).unwrap();
        }
        out.push('\n');
    }
    writeln!(
        out,
        "# n={} edges={} pass={} fail={} timeout={}",
        report.n,
        report.rows.len(),
        report.count(Verdict::Pass),
        report.count(Verdict::Fail),
        report.count(Verdict::Timeout),
    )
    .unwrap();
    if let Some(check) = report.gn_not_colorable {
        writeln!(
            out,
            "# G_{} not {}-colourable: {}",
            report.n,
            report.n - 3,
            check.name()
        )
        .unwrap();
    }
    writeln!(out, "# verdict {}", report.verdict().name()).unwrap();
    out
}

pub fn vertex_report(g: &Graph, report: &VertexCriticalityReport) -> String {
    let mut out = String::from("# vertex chi_after drops\n");
    for row in &report.rows {
        let after = row
            .chi_after
            .map_or_else(|| "timeout".to_string(), |c| c.to_string());
        let drops = match (report.chi, row.chi_after) {
            (Some(chi), Some(after)) => yes_no(after < chi),
            _ => "unknown",
        };
        writeln!(out, "{} {} {}", g.label(row.vertex), after, drops).unwrap();
    }
    let chi = report
        .chi
        .map_or_else(|| "timeout".to_string(), |c| c.to_string());
    writeln!(
        out,
        "# chi={chi} vertices={} drop_by_exactly_one={}",
        report.rows.len(),
        yes_no(report.drops_by_exactly_one())
    )
    .unwrap();
    writeln!(out, "# verdict {}", report.verdict().name()).unwrap();
    out
}

pub fn chromatic_report(name: &str, expected: usize, result: &ChromaticResult) -> String {
    let mut out = String::new();
    writeln!(out, "graph {name}").unwrap();
    writeln!(out, "chi {}", result.chi).unwrap();
    writeln!(out, "lower_bound {}", result.lower_bound).unwrap();
    writeln!(out, "clique {}", result.lower_bound_witness.len()).unwrap();
    writeln!(out, "expected {expected}").unwrap();
    let status = if result.is_exact() {
        "exact"
    } else {
        "timeout_with_bounds"
    };
    writeln!(out, "status {status}").unwrap();
    out
}

pub fn chain_report(report: &LowerBoundReport, solver_chi: Option<Option<usize>>) -> String {
    let mut out = String::from("# level domain_edges violations increment\n");
    for level in &report.levels {
        let evidence = match level.evidence {
            StepEvidence::SolverChecked => "solver-checked",
            StepEvidence::Cited => "cited",
        };
        writeln!(
            out,
            "{} {} {} {}",
            level.m, level.domain_edges, level.violations, evidence
        )
        .unwrap();
    }
    writeln!(out, "# base chi(G_5)={}", report.base_chi).unwrap();
    for &(k, chi) in &report.mycielski_checks {
        let chi = chi.map_or_else(|| "timeout".to_string(), |c| c.to_string());
        writeln!(out, "# chi(M_{k})={chi}").unwrap();
    }
    let qualifier = if report.fully_machine_checked() {
        "machine-checked"
    } else {
        "certified modulo the Mycielski increment at cited levels"
    };
    writeln!(
        out,
        "# bound chi(G_{}) >= {} ({qualifier})",
        report.n, report.bound
    )
    .unwrap();
    match solver_chi {
        Some(Some(chi)) => writeln!(out, "# solver chi(G_{})={chi}", report.n).unwrap(),
        Some(None) => writeln!(out, "# solver chi(G_{})=timeout", report.n).unwrap(),
        None => {}
    }
    out
}

/// Aligned table of the pair census, or machine rows
/// `n crossing transverse lateral nested1 ratio_num ratio_den`.
pub fn ratio_report(rows: &[RatioRow], machine: bool) -> String {
    let mut out = String::new();
    if machine {
        for r in rows {
            writeln!(
                out,
                "{} {} {} {} {} {} {}",
                r.n,
                r.counts.crossing,
                r.counts.transverse,
                r.counts.lateral,
                r.counts.nested_through_1,
                r.ratio_num,
                r.ratio_den
            )
            .unwrap();
        }
        return out;
    }
    writeln!(
        out,
        "{:>5} {:>12} {:>12} {:>12} {:>10} {:>12} {:>12} {:>10}",
        "n", "crossing", "transverse", "lateral", "nested1", "ratio_num", "ratio_den", "ratio"
    )
    .unwrap();
    for r in rows {
        writeln!(
            out,
            "{:>5} {:>12} {:>12} {:>12} {:>10} {:>12} {:>12} {:>10.6}",
            r.n,
            r.counts.crossing,
            r.counts.transverse,
            r.counts.lateral,
            r.counts.nested_through_1,
            r.ratio_num,
            r.ratio_den,
            r.ratio()
        )
        .unwrap();
    }
    out
}
