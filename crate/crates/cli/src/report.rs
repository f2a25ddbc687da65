use std::fmt::Write as _;

use chain_endo::{Claim, VerificationReport, VertexFilter};

/// JSON Schema for the output of `verify --format json`.
pub const REPORT_SCHEMA: &str = include_str!("../schema/report.schema.json");

fn table(values: &[usize]) -> String {
    let cells: Vec<String> = values.iter().map(ToString::to_string).collect();
    format!("[{}]", cells.join(","))
}

fn points(values: &[usize]) -> String {
    let cells: Vec<String> = values.iter().map(ToString::to_string).collect();
    format!("{{{}}}", cells.join(","))
}

/// Human-readable rendering of one report, witnesses included.
pub fn render_report(report: &VerificationReport) -> String {
    let mut s = String::new();
    let verdict = if report.holds() { "HOLDS" } else { "VIOLATED" };
    let _ = write!(s, "{}: {verdict}", report.claim);
    if let Ok(claim) = report.claim.parse::<Claim>() {
        let _ = write!(s, "  ({})", claim.summary());
    }
    s.push('\n');

    let b = &report.bounds;
    let vertices = match &b.vertices {
        VertexFilter::All => "all".to_owned(),
        VertexFilter::Full => "full chain".to_owned(),
        VertexFilter::Exact(p) => points(p),
    };
    let _ = write!(
        s,
        "  bounds: n = {}..={}, vertex sets: {vertices}",
        b.n_min, b.n_max
    );
    if let Some(l) = b.lower {
        let _ = write!(s, ", l = {l}");
    }
    if let Some(m) = b.upper {
        let _ = write!(s, ", m = {m}");
    }
    if let Some(p) = b.p {
        let _ = write!(s, ", p = {p}");
    }
    s.push('\n');
    let _ = writeln!(
        s,
        "  searched: {}, violations: {}, elapsed: {} ms",
        report.searched, report.violations, report.elapsed_ms
    );
    for note in &report.notes {
        let _ = writeln!(s, "  note: {note}");
    }
    for (i, w) in report.witnesses.iter().enumerate() {
        let _ = write!(s, "  witness {}: n = {}", i + 1, w.n);
        if let Some(v) = &w.vertices {
            let _ = write!(s, ", A = {}", points(v));
        }
        for (name, value) in &w.params {
            let _ = write!(s, ", {name} = {value}");
        }
        s.push('\n');
        if !w.note.is_empty() {
            let _ = writeln!(s, "    {}", w.note);
        }
        let width = w.endos.keys().map(String::len).max().unwrap_or(0);
        for (name, endo) in &w.endos {
            let _ = writeln!(s, "    {name:width$} = {}  {}", table(endo.values()), endo);
        }
    }
    if report.violations > report.witnesses.len() as u64 {
        let _ = writeln!(
            s,
            "  ({} further violations not shown)",
            report.violations - report.witnesses.len() as u64
        );
    }
    s
}
