//! Text renderings: Graphviz DOT and aligned plain-text tables.

use std::fmt::Write;

use crate::dto::{
    CheckDoc, CosetRow, CosetsDoc, IntervalDoc, QuotientDoc, ReportDoc, ScanData, ScanDoc,
};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Left-aligned columns separated by ` | `, padded by character count.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (k, cell) in row.iter().enumerate() {
            widths[k] = widths[k].max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| -> String {
        let last = cells.len() - 1;
        let mut out = String::new();
        for (k, cell) in cells.into_iter().enumerate() {
            out.push_str(cell);
            if k < last {
                out.extend(std::iter::repeat_n(' ', widths[k] - cell.chars().count()));
                out.push_str(" | ");
            }
        }
        out.push('\n');
        out
    };
    let mut out = line(header.to_vec());
    let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
    out.push_str(&rule.join("-+-"));
    out.push('\n');
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}

fn set_label(indices: &[usize]) -> String {
    let names: Vec<String> = indices.iter().map(|i| format!("s{i}")).collect();
    format!("{{{}}}", names.join(", "))
}

/// The interval's Bruhat graph with one cluster per length, drawn bottom-up.
/// `hasse` keeps only covering edges (length difference 1).
pub fn interval_dot(doc: &IntervalDoc, hasse: bool) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(&format!("B({})", doc.w))).unwrap();
    out.push_str("  rankdir=BT;\n  node [shape=plaintext];\n");
    let mut start = 0;
    for (len, &count) in doc.levels.iter().enumerate() {
        writeln!(out, "  subgraph cluster_length_{len} {{").unwrap();
        writeln!(out, "    label=\"length {len}\";\n    rank=same;").unwrap();
        for name in &doc.members[start..start + count] {
            writeln!(out, "    {};", quote(name)).unwrap();
        }
        out.push_str("  }\n");
        start += count;
    }
    let lengths: Vec<usize> = doc
        .levels
        .iter()
        .enumerate()
        .flat_map(|(len, &count)| std::iter::repeat_n(len, count))
        .collect();
    for &[i, j] in &doc.edges {
        if hasse && lengths[j] != lengths[i] + 1 {
            continue;
        }
        writeln!(
            out,
            "  {} -> {};",
            quote(&doc.members[i]),
            quote(&doc.members[j])
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn interval_table(doc: &IntervalDoc) -> String {
    let mut out = format!(
        "B({}): {} elements, {} edges, levels ({})\n",
        doc.w,
        doc.size,
        doc.edges.len(),
        doc.levels
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    );
    let mut rows = Vec::new();
    let mut start = 0;
    for (len, &count) in doc.levels.iter().enumerate() {
        let members = &doc.members[start..start + count];
        let degrees = &doc.degrees[start..start + count];
        rows.push(vec![
            len.to_string(),
            count.to_string(),
            members.join(", "),
            degrees
                .iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(", "),
        ]);
        start += count;
    }
    out.push_str(&table(&["ℓ", "count", "members", "degrees"], &rows));
    out
}

/// Members listed from the top of the coset down, as in the paper's tables.
fn coset_cells(row: &CosetRow) -> Vec<String> {
    let members: Vec<&str> = row.members.iter().rev().map(String::as_str).collect();
    vec![
        format!("{{{}}}", members.join(", ")),
        row.p_up.clone(),
        row.length.to_string(),
        row.p_down.clone(),
        row.mid.to_string(),
        row.side.to_string(),
        row.factorization.clone(),
    ]
}

const COSET_HEADER: [&str; 7] = ["C", "P↑", "ℓ(C)", "P↓", "mid", "side", "P↑ = x|P↓|y"];

pub fn cosets_table(doc: &CosetsDoc) -> String {
    let mut out = format!(
        "C({}): {} cosets, D_L = {}, D_R = {}\n",
        doc.w,
        doc.cosets.len(),
        set_label(&doc.left),
        set_label(&doc.right)
    );
    let rows: Vec<Vec<String>> = doc.cosets.iter().map(coset_cells).collect();
    out.push_str(&table(&COSET_HEADER, &rows));
    out
}

/// The member Bruhat graph with one cluster per coset.
pub fn cosets_dot(doc: &CosetsDoc, interval: &IntervalDoc) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(&format!("C({})", doc.w))).unwrap();
    out.push_str("  rankdir=BT;\n  node [shape=plaintext];\n");
    for (k, c) in doc.cosets.iter().enumerate() {
        writeln!(out, "  subgraph cluster_coset_{k} {{").unwrap();
        writeln!(out, "    label={};", quote(&format!("P↑ = {}", c.p_up))).unwrap();
        for name in &c.members {
            writeln!(out, "    {};", quote(name)).unwrap();
        }
        out.push_str("  }\n");
    }
    for &[i, j] in &interval.edges {
        writeln!(
            out,
            "  {} -> {};",
            quote(&interval.members[i]),
            quote(&interval.members[j])
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

/// Quotient graph: one vertex per coset (labelled `P↑ / P↓`), clustered by
/// middle length, with the induced arcs.
pub fn quotient_dot(doc: &QuotientDoc) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "digraph {} {{",
        quote(&format!("quotient C({})", doc.w))
    )
    .unwrap();
    out.push_str("  rankdir=BT;\n  node [shape=box];\n");
    let top_mid = doc.cosets.iter().map(|c| c.mid).max().unwrap_or(0);
    for mid in 0..=top_mid {
        let ids: Vec<usize> = (0..doc.cosets.len())
            .filter(|&k| doc.cosets[k].mid == mid)
            .collect();
        if ids.is_empty() {
            continue;
        }
        writeln!(out, "  subgraph cluster_mid_{mid} {{").unwrap();
        writeln!(out, "    label=\"mid {mid}\";\n    rank=same;").unwrap();
        for k in ids {
            let c = &doc.cosets[k];
            writeln!(
                out,
                "    c{k} [label={}];",
                quote(&format!("{} / {}", c.p_up, c.p_down))
            )
            .unwrap();
        }
        out.push_str("  }\n");
    }
    for &[a, b] in &doc.arcs {
        writeln!(out, "  c{a} -> c{b};").unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn quotient_table(doc: &QuotientDoc) -> String {
    let mut out = format!(
        "C({}): {} cosets, {} arcs, separated: {}\n",
        doc.w,
        doc.cosets.len(),
        doc.arcs.len(),
        if doc.separated { "yes" } else { "no" }
    );
    let rows: Vec<Vec<String>> = doc
        .cosets
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let mut cells = vec![k.to_string()];
            cells.extend(coset_cells(c));
            cells
        })
        .collect();
    let mut header = vec!["#"];
    header.extend(COSET_HEADER);
    out.push_str(&table(&header, &rows));
    let list = |xs: &[[usize; 2]]| {
        xs.iter()
            .map(|[a, b]| format!("{a}->{b}"))
            .collect::<Vec<_>>()
            .join(" ")
    };
    writeln!(out, "arcs: {}", list(&doc.arcs)).unwrap();
    writeln!(out, "covers: {}", list(&doc.order)).unwrap();
    writeln!(
        out,
        "arc equivalence C->D iff P↓(C)->P↓(D): {}",
        if doc.checks.arc_equivalence {
            "holds"
        } else {
            "fails"
        }
    )
    .unwrap();
    out
}

fn report_lines(out: &mut String, r: &ReportDoc) {
    let pass = r.clauses.iter().filter(|c| c.outcome == "pass").count();
    let status = if !r.passed {
        "FAIL"
    } else if !r.clauses.is_empty() && r.clauses.iter().all(|c| c.outcome == "skip") {
        "skip"
    } else {
        "ok"
    };
    writeln!(
        out,
        "{status:<4} {} ({pass}/{} clauses pass)",
        r.subject,
        r.clauses.len()
    )
    .unwrap();
    for c in r.clauses.iter().filter(|c| c.outcome != "pass") {
        if status == "skip" && c.outcome == "skip" {
            continue;
        }
        writeln!(
            out,
            "     {} {}: {}",
            c.outcome,
            c.name,
            c.witness.as_deref().unwrap_or("")
        )
        .unwrap();
    }
    if status == "skip" {
        if let Some(reason) = r.clauses.first().and_then(|c| c.witness.as_deref()) {
            writeln!(out, "     {reason}").unwrap();
        }
    }
}

pub fn check_table(doc: &CheckDoc) -> String {
    let mut out = String::new();
    for r in &doc.reports {
        report_lines(&mut out, r);
    }
    let s = &doc.summary;
    writeln!(
        out,
        "{} over {} ({}): {} reports, {} passed, {} failed, {} skipped",
        doc.check,
        doc.system_label(),
        doc.scope.kind,
        s.reports,
        s.passed,
        s.failed,
        s.skipped
    )
    .unwrap();
    out
}

pub fn scan_table(doc: &ScanDoc) -> String {
    let mut out = String::new();
    match &doc.data {
        ScanData::Poincare { rows } => {
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.w.clone(),
                        format!("{:?}", r.poincare),
                        r.bottom.clone(),
                        format!("{:?}", r.bottom_poincare),
                    ]
                })
                .collect();
            out.push_str(&table(&["w", "P_w", "P↓(w)", "P_P↓(w)"], &cells));
        }
        ScanData::Degmono { witnesses, .. } if !witnesses.is_empty() => {
            let cells: Vec<Vec<String>> = witnesses
                .iter()
                .map(|x| {
                    vec![
                        x.w.clone(),
                        x.u.clone(),
                        x.deg_u.to_string(),
                        x.v.clone(),
                        x.deg_v.to_string(),
                    ]
                })
                .collect();
            out.push_str(&table(&["w", "u", "deg u", "v", "deg v"], &cells));
        }
        _ => {}
    }
    report_lines(&mut out, &doc.report);
    writeln!(
        out,
        "scan {} over {} ({}, {} elements)",
        doc.scan,
        doc.system_label(),
        doc.scope.kind,
        doc.scope.size
    )
    .unwrap();
    out
}

impl CheckDoc {
    fn system_label(&self) -> String {
        self.system.label()
    }
}

impl ScanDoc {
    fn system_label(&self) -> String {
        self.system.label()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_aligns_by_characters() {
        let t = table(&["ℓ", "x"], &[vec!["10".into(), "a".into()]]);
        assert_eq!(t, "ℓ  | x\n---+--\n10 | a\n");
    }
}
