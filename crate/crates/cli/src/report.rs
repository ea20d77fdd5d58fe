//! Fixed `key=value` report grammar.

use std::fmt::Write;

use qpgrade::faces::{EhrhartReport, Face};
use qpgrade::hilbert::WeightedReport;
use qpgrade::QuasiPolynomial;

pub fn line(out: &mut String, text: impl AsRef<str>) {
    out.push_str(text.as_ref());
    out.push('\n');
}

pub fn quasipolynomial(out: &mut String, q: &QuasiPolynomial) {
    line(out, q.to_string());
}

pub fn face(out: &mut String, f: &Face, span_lattice: bool) {
    let vertices: Vec<String> = f.vertex_indices.iter().map(ToString::to_string).collect();
    let _ = writeln!(out, "face dim={} vertices={} span_lattice={span_lattice}", f.dim, vertices.join(","));
}

pub fn ehrhart(out: &mut String, r: &EhrhartReport) {
    let delta = r.delta_star.map_or_else(|| "none".to_string(), |d| d.to_string());
    let _ = writeln!(out, "grade={}", r.grade);
    let _ = writeln!(out, "delta_star={delta}");
    let _ = writeln!(out, "period={}", r.period);
    let _ = writeln!(out, "holds={}", r.holds);
    quasipolynomial(out, &r.quasipolynomial);
    for (f, ok) in &r.faces {
        face(out, f, *ok);
    }
    for (delta, failing) in r.per_delta.iter().enumerate() {
        let _ = writeln!(out, "delta={delta} failing_faces={}", failing.len());
    }
    let gap = r.gap().map_or_else(|| "none".to_string(), |g| g.to_string());
    let _ = writeln!(out, "gap={gap}");
    let _ = writeln!(out, "vacuous={}", r.vacuous());
}

pub fn weighted(out: &mut String, r: &WeightedReport) {
    let _ = writeln!(out, "grade={}", r.grade);
    let _ = writeln!(out, "bound={}", r.bound);
    let _ = writeln!(out, "period={}", r.period);
    let _ = writeln!(out, "holds={}", r.holds);
    let _ = writeln!(out, "n0={}", r.n0);
    quasipolynomial(out, &r.quasipolynomial);
}
