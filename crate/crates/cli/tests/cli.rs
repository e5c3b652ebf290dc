//! End-to-end tests of the command-line surface: outputs, golden files,
//! round-trips, determinism and exit codes.

use std::path::PathBuf;
use std::process::Command;

use bruhat_cli::dto::{
    CheckDoc, CosetsDoc, IntervalDoc, QuotientDoc, ReportDoc, ScanData, ScanDoc, Summary,
};
use bruhat_cli::scope::{resolve_system, ScopeDoc};
use bruhat_cli::{commands, run};
use serde::de::DeserializeOwned;
use serde::Serialize;

/// Runs the command in-process; returns (status, stdout, stderr).
fn cli(args: &[&str]) -> (u8, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("bruhat").chain(args.iter().copied());
    let status = run(argv, &mut out, &mut err);
    (
        status,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn ok(args: &[&str]) -> String {
    let (status, out, err) = cli(args);
    assert_eq!(status, 0, "{args:?}: {err}");
    out
}

/// Parses, checks the version field and that re-serializing is byte-identical.
fn round_trip<T: Serialize + DeserializeOwned + PartialEq + std::fmt::Debug>(text: &str) -> T {
    let value: serde_json::Value = serde_json::from_str(text).unwrap();
    assert_eq!(value["v"], 1);
    let doc: T = serde_json::from_str(text).unwrap();
    assert_eq!(bruhat_cli::dto::to_json(&doc), text);
    let again: T = serde_json::from_str(&bruhat_cli::dto::to_json(&doc)).unwrap();
    assert_eq!(again, doc);
    doc
}

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

/// Byte-exact comparison; `BLESS=1` rewrites the golden file instead.
fn assert_golden(name: &str, actual: &str) {
    let path = golden(name);
    if std::env::var_os("BLESS").is_some() {
        std::fs::write(&path, actual).unwrap();
    }
    let expected = std::fs::read_to_string(&path).unwrap();
    assert_eq!(actual, expected, "golden file {name} differs");
}

#[test]
fn golden_files_are_reproduced_byte_exactly() {
    let cases: [(&str, &[&str]); 9] = [
        (
            "table1.txt",
            &["cosets", "--w", "3412", "--format", "table"],
        ),
        (
            "table2.txt",
            &["cosets", "--w", "45312", "--format", "table"],
        ),
        (
            "table3.txt",
            &["cosets", "--w", "52341", "--format", "table"],
        ),
        (
            "cosets_3412.json",
            &["cosets", "--w", "3412", "--format", "json"],
        ),
        (
            "quotient_45312.dot",
            &["quotient", "--w", "45312", "--format", "dot"],
        ),
        (
            "quotient_52341.dot",
            &["quotient", "--w", "52341", "--format", "dot"],
        ),
        ("quotient_45312.json", &["quotient", "--w", "45312"]),
        ("quotient_52341.json", &["quotient", "--w", "52341"]),
        (
            "figure1.dot",
            &[
                "interval", "--type", "A", "--rank", "3", "--w", "3412", "--format", "dot",
            ],
        ),
    ];
    for (name, args) in cases {
        assert_golden(name, &ok(args));
    }
}

#[test]
fn golden_tables_carry_the_paper_values() {
    let t1 = std::fs::read_to_string(golden("table1.txt")).unwrap();
    assert!(
        t1.contains("{3412, 3142, 2413, 2143} | 3412 | 4    | 2143 | 2   | 2"),
        "{t1}"
    );
    let t2 = std::fs::read_to_string(golden("table2.txt")).unwrap();
    for f in [
        "45312 = s2s3s2|s1s4|s2s3s2",
        "43215",
        "s2s3s2|s1|s2s3",
        "s2s3s2|s4|s3s2",
        "s2s3s2|e|e",
    ] {
        let needle = f.split(" = ").last().unwrap();
        assert!(t2.contains(needle), "{needle}");
    }
    let t3 = std::fs::read_to_string(golden("table3.txt")).unwrap();
    assert!(
        t3.contains("| 52341 | 7    | 14325 | 3   | 4    | s1s4|s2s3s2|s1s4"),
        "{t3}"
    );
}

#[test]
fn interval_outputs() {
    let doc: IntervalDoc = round_trip(&ok(&[
        "interval", "--type", "A", "--rank", "3", "--w", "3412",
    ]));
    assert_eq!(
        (doc.size, doc.members.len(), doc.levels.clone()),
        (14, 14, vec![1, 3, 5, 4, 1])
    );
    assert_eq!(doc.edges.len(), 29);
    // members sorted by (length, canonical form) and re-parse to the interval
    let ctx = resolve_system(&Default::default(), &["3412".into()]).unwrap();
    let b = bruhat_core::lower_interval(&ctx.sys, &ctx.parse("3412").unwrap());
    let parsed: Vec<_> = doc.members.iter().map(|m| ctx.parse(m).unwrap()).collect();
    assert_eq!(parsed, b.members());

    let e: IntervalDoc = round_trip(&ok(&["interval", "--w", "e"]));
    assert_eq!((e.size, e.edges.len()), (1, 0));

    let dot = ok(&["interval", "--w", "3412", "--format", "dot"]);
    assert_eq!(dot.matches("subgraph cluster_length_").count(), 5);
    assert_eq!(dot.matches(" -> ").count(), 29);
    let hasse = ok(&["interval", "--w", "3412", "--format", "dot", "--hasse"]);
    assert!(hasse.matches(" -> ").count() < 29);
    assert!(!hasse.contains("\"1234\" -> \"3214\""));
    assert!(dot.contains("\"1234\" -> \"3214\""));

    let table = ok(&["interval", "--w", "2 1 3 2", "--format", "table"]);
    assert!(
        table.starts_with("B(3412): 14 elements, 29 edges, levels (1,3,5,4,1)"),
        "{table}"
    );
}

#[test]
fn cosets_rows_match_the_worked_examples() {
    let rows = |w: &str| -> Vec<(u32, u32, u32)> {
        let doc: CosetsDoc = round_trip(&ok(&["cosets", "--w", w]));
        doc.cosets
            .iter()
            .map(|c| (c.length, c.mid, c.side))
            .collect()
    };
    assert_eq!(rows("3412"), [(4, 2, 2), (3, 1, 2), (3, 1, 2), (1, 0, 1)]);
    assert_eq!(rows("45312"), [(8, 2, 6), (6, 1, 5), (6, 1, 5), (3, 0, 3)]);
    assert_eq!(
        rows("52341"),
        [
            (7, 3, 4),
            (6, 2, 4),
            (6, 2, 4),
            (4, 1, 3),
            (4, 1, 3),
            (2, 0, 2)
        ]
    );
    let doc: CosetsDoc = round_trip(&ok(&["cosets", "--w", "3412"]));
    assert_eq!(doc.cosets[0].members, ["2143", "2413", "3142", "3412"]);
    assert_eq!((doc.left.clone(), doc.right.clone()), (vec![2], vec![2]));
    let dot = ok(&["cosets", "--w", "3412", "--format", "dot"]);
    assert_eq!(dot.matches("subgraph cluster_coset_").count(), 4);
}

#[test]
fn quotient_outputs() {
    let q: QuotientDoc = round_trip(&ok(&["quotient", "--w", "45312"]));
    assert_eq!((q.cosets.len(), q.arcs.len(), q.separated), (4, 4, true));
    assert!(q.checks.arc_equivalence && q.checks.consistent);
    let q: QuotientDoc = round_trip(&ok(&["quotient", "--w", "52341"]));
    assert_eq!((q.cosets.len(), q.arcs.len()), (6, 9));
    assert!(q.arcs.contains(&[5, 0]), "bottom -> top arc");
    let q: QuotientDoc = round_trip(&ok(&["quotient", "--w", "e"]));
    assert_eq!((q.cosets.len(), q.arcs.len(), q.order.len()), (1, 0, 0));
    let q: QuotientDoc = round_trip(&ok(&["quotient", "--w", "456123"]));
    assert!(!q.separated);
    assert!(q.checks.consistent && q.checks.forward_violations.is_empty());
}

#[test]
fn check_commands() {
    let doc: CheckDoc = round_trip(&ok(&["check", "theorem1", "--group", "A3", "--all"]));
    assert_eq!(
        doc.summary,
        Summary {
            reports: 24,
            passed: 24,
            failed: 0,
            skipped: 0
        }
    );
    assert_eq!(doc.scope.kind, "all");
    let (status, out, _) = cli(&["check", "theorem2", "--w", "456123"]);
    assert_eq!(status, 0);
    let doc: CheckDoc = round_trip(&out);
    assert_eq!(doc.summary.skipped, 1);
    assert!(doc.reports[0].clauses.iter().all(|c| c.outcome == "skip"));
    let doc: CheckDoc = round_trip(&ok(&["check", "appendix", "--group", "A3"]));
    assert_eq!(doc.summary.failed, 0);
    assert!(doc.reports[0].clauses.iter().all(|c| c.outcome == "pass"));
    // reports rebuild into the verifier's in-memory values
    let ctx = resolve_system(&Default::default(), &["3412".into()]).unwrap();
    let doc: CheckDoc = round_trip(&ok(&["check", "theorem1", "--w", "3412"]));
    let direct = bruhat_core::lab::verify_theorem1(&ctx.sys, &ctx.parse("3412").unwrap());
    assert_eq!(doc.reports[0].to_report().unwrap(), direct);
    let table = ok(&["check", "theorem1", "--group", "A2", "--format", "table"]);
    assert!(
        table.ends_with("theorem1 over A2 (all): 6 reports, 6 passed, 0 failed, 0 skipped\n"),
        "{table}"
    );
}

#[test]
fn scan_commands() {
    let doc: ScanDoc = round_trip(&ok(&["scan", "deodhar", "--group", "A3"]));
    match doc.data {
        ScanData::Deodhar {
            intervals,
            min_slack,
            violations,
        } => {
            assert_eq!(intervals, 24);
            assert!(min_slack.unwrap() >= 0);
            assert!(violations.is_empty());
        }
        other => panic!("{other:?}"),
    }
    let doc: ScanDoc = round_trip(&ok(&["scan", "poincare", "--w", "3412"]));
    match &doc.data {
        ScanData::Poincare { rows } => {
            assert_eq!(rows[0].poincare, [1, 3, 5, 4, 1]);
            assert_eq!(rows[0].bottom, "2143");
            assert_eq!(rows[0].bottom_poincare, [1, 2, 1]);
        }
        other => panic!("{other:?}"),
    }
    let a = ok(&["scan", "degmono", "--group", "A3", "--seed", "7"]);
    assert_eq!(a, ok(&["scan", "degmono", "--group", "A3", "--seed", "7"]));
    let doc: ScanDoc = round_trip(&a);
    assert!(matches!(doc.data, ScanData::Degmono { intervals: 24, .. }));
    assert!(doc.report.clauses.iter().all(|c| c.outcome == "note"));
    for name in ["witnesses", "degclass", "product"] {
        let doc: ScanDoc = round_trip(&ok(&["scan", name, "--group", "A2"]));
        assert!(doc.report.passed, "{name}");
    }
    let doc: ScanDoc = round_trip(&ok(&["scan", "product", "--w", "52341"]));
    match doc.data {
        ScanData::Product { witness: Some(x) } => {
            assert_eq!(
                (x.interval_size, x.min_set_size, x.top_coset_size),
                (68, 6, 16)
            );
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn sampled_runs_are_deterministic() {
    let args = [
        "scan", "deodhar", "--group", "A4", "--sample", "10", "--seed", "3",
    ];
    let a = ok(&args);
    assert_eq!(a, ok(&args));
    let doc: ScanDoc = round_trip(&a);
    assert_eq!(
        (doc.scope.kind.as_str(), doc.scope.size, doc.scope.seed),
        ("sample", 10, Some(3))
    );
    let other = ok(&[
        "scan", "deodhar", "--group", "A4", "--sample", "10", "--seed", "4",
    ]);
    let other: ScanDoc = round_trip(&other);
    assert_ne!(doc.scope.elements, other.scope.elements);
}

#[test]
fn other_systems_via_descriptors() {
    let dir = tempfile::tempdir().unwrap();
    let affine = dir.path().join("affine.json");
    std::fs::write(&affine, r#"{"coxeter_matrix":[[1,3,3],[3,1,3],[3,3,1]]}"#).unwrap();
    let path = affine.to_str().unwrap();
    let doc: IntervalDoc = round_trip(&ok(&["interval", "--matrix-file", path, "--w", "1 2 3 1"]));
    assert_eq!(doc.length, 4);
    assert_eq!(doc.members[0], "e");
    let ScopeDoc { size, .. } = round_trip::<CheckDoc>(&ok(&[
        "check",
        "theorem1",
        "--matrix-file",
        path,
        "--max-length",
        "3",
    ]))
    .scope;
    // affine A2 has 3k elements of length k >= 1
    assert_eq!(size, 1 + 3 + 6 + 9);
    let typed = dir.path().join("a3.json");
    std::fs::write(&typed, r#"{"type":"A","rank":3}"#).unwrap();
    let doc: CosetsDoc = round_trip(&ok(&[
        "cosets",
        "--matrix-file",
        typed.to_str().unwrap(),
        "--w",
        "3412",
    ]));
    assert_eq!(doc.cosets.len(), 4);
    let doc: QuotientDoc = round_trip(&ok(&["quotient", "--group", "B3", "--w", "1 2 3 2 1"]));
    assert!(doc.checks.consistent);
    let doc: CheckDoc = round_trip(&ok(&["check", "theorem1", "--group", "G2"]));
    assert_eq!(doc.summary.reports, 12);
    assert_eq!(doc.summary.failed, 0);
}

#[test]
fn out_and_export_write_files() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("c.json");
    let (status, stdout, _) = cli(&["cosets", "--w", "3412", "--out", file.to_str().unwrap()]);
    assert_eq!((status, stdout.as_str()), (0, ""));
    assert_eq!(
        std::fs::read_to_string(&file).unwrap(),
        std::fs::read_to_string(golden("cosets_3412.json")).unwrap()
    );
    let out = dir.path().join("export");
    let listing = ok(&["export", "--w", "45312", "--out", out.to_str().unwrap()]);
    assert_eq!(listing.lines().count(), 9);
    let q = std::fs::read_to_string(out.join("quotient.dot")).unwrap();
    assert_eq!(
        q,
        std::fs::read_to_string(golden("quotient_45312.dot")).unwrap()
    );
    let _: QuotientDoc = round_trip(&std::fs::read_to_string(out.join("quotient.json")).unwrap());
    let only = dir.path().join("only");
    let listing = ok(&[
        "export",
        "--w",
        "3412",
        "--format",
        "table",
        "--out",
        only.to_str().unwrap(),
    ]);
    assert_eq!(listing.lines().count(), 3);
    assert_eq!(
        std::fs::read_to_string(only.join("cosets.txt")).unwrap(),
        std::fs::read_to_string(golden("table1.txt")).unwrap()
    );
}

#[test]
fn invalid_input_exits_with_2() {
    let bad: [&[&str]; 10] = [
        &["interval", "--w", "99x"],
        &["interval", "--w", "3312"],
        &["interval", "--group", "B3", "--w", "2134"],
        &["interval", "--type", "A", "--rank", "3", "--w", "12345"],
        &["interval", "--type", "Q", "--rank", "3", "--w", "1"],
        &["check", "lemma9", "--group", "A3"],
        &["check", "theorem1"],
        &[
            "scan", "deodhar", "--type", "A", "--rank", "3", "--w", "5 1",
        ],
        &[
            "cosets",
            "--matrix-file",
            "/nonexistent/descriptor.json",
            "--w",
            "1",
        ],
        &["check", "theorem1", "--group", "A3", "--format", "dot"],
    ];
    for args in bad {
        let (status, _, err) = cli(args);
        assert_eq!(status, 2, "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
    let dir = tempfile::tempdir().unwrap();
    let affine = dir.path().join("affine.json");
    std::fs::write(&affine, r#"{"coxeter_matrix":[[1,0],[0,1]]}"#).unwrap();
    let (status, _, err) = cli(&[
        "check",
        "theorem1",
        "--matrix-file",
        affine.to_str().unwrap(),
    ]);
    assert_eq!(status, 2, "{err}");
    std::fs::write(&affine, r#"{"coxeter_matrix":[[1,5],[5,1]]}"#).unwrap();
    let (status, _, _) = cli(&[
        "interval",
        "--matrix-file",
        affine.to_str().unwrap(),
        "--w",
        "1",
    ]);
    assert_eq!(status, 2);
    let (status, out, _) = cli(&["--help"]);
    assert_eq!(status, 0);
    assert!(out.contains("interval"));
}

#[test]
fn status_helpers_signal_violations() {
    let report = ReportDoc {
        subject: "theorem1 w=x".into(),
        passed: false,
        clauses: vec![],
    };
    let scope = ScopeDoc {
        kind: "elements".into(),
        seed: None,
        max_length: None,
        size: 1,
        elements: vec![],
    };
    let system = bruhat_cli::descriptor::SystemDoc::Named {
        kind: "A".into(),
        rank: 1,
    };
    let doc = CheckDoc {
        v: 1,
        check: "theorem1".into(),
        system: system.clone(),
        scope: scope.clone(),
        summary: Summary {
            reports: 1,
            passed: 0,
            failed: 1,
            skipped: 0,
        },
        reports: vec![report.clone()],
    };
    assert_eq!(commands::check_status(&doc), 1);
    let scan = |data| ScanDoc {
        v: 1,
        scan: "x".into(),
        system: system.clone(),
        scope: scope.clone(),
        report: report.clone(),
        data,
    };
    let violation = bruhat_cli::dto::DegreeDoc {
        w: "21".into(),
        u: "12".into(),
        degree: 0,
    };
    assert_eq!(
        commands::scan_status(&scan(ScanData::Deodhar {
            intervals: 1,
            min_slack: Some(-1),
            violations: vec![violation]
        })),
        1
    );
    let gap = ScanData::Degmono {
        intervals: 1,
        comparable_pairs: 1,
        witness_count: 1,
        witnesses: vec![],
    };
    assert_eq!(commands::scan_status(&scan(gap)), 0);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_bruhat");
    let code = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(code(&["interval", "--w", "3412"]), Some(0));
    assert_eq!(code(&["interval", "--w", "nope"]), Some(2));
    assert_eq!(code(&["check", "nope"]), Some(2));
    assert_eq!(code(&["check", "theorem2", "--w", "456123"]), Some(0));
}
