//! Command execution. Every command produces one text document, written to
//! `--out` or standard output, plus an exit status.

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

use bruhat_core::lab::scans::{degree_monotone_one, deodhar_one};
use bruhat_core::lab::{
    degree_class_scan, direct_product_witness, poincare_compare, remark_witness_hunt,
    verify_appendix, verify_theorem1, verify_theorem2, CheckReport, Clause, DeodharScan,
    MonotoneScan,
};
use bruhat_core::{
    lower_interval, project_down, Element, LowerInterval, Partition, QuotientInterval,
};
use clap::Parser;
use rayon::prelude::*;

use crate::args::{CheckName, Cli, Command, Format, ScanName, ScopeArgs, SystemArgs};
use crate::dto::{self, CheckDoc, ReportDoc, ScanData, ScanDoc, Summary, SCHEMA_VERSION};
use crate::error::{CliError, EXIT_INPUT, EXIT_OK, EXIT_VIOLATION};
use crate::render;
use crate::scope::{ball, resolve_scope, resolve_system, Context, Scope};

/// A rendered document and the exit status it implies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub status: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Output {
            text,
            status: EXIT_OK,
        }
    }
}

/// Parses `argv` (including the program name), runs the command and writes
/// its output. Returns the process exit status.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = stderr.write_all(text.as_bytes());
                EXIT_INPUT
            } else {
                let _ = stdout.write_all(text.as_bytes());
                EXIT_OK
            };
        }
    };
    let result = execute(&cli.command).and_then(|out| {
        match command_out(&cli.command) {
            Some(path) => std::fs::write(path, &out.text)
                .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))?,
            None => stdout
                .write_all(out.text.as_bytes())
                .map_err(|e| CliError::Input(format!("cannot write output: {e}")))?,
        }
        Ok(out.status)
    });
    match result {
        Ok(status) => status,
        Err(e) => {
            let _ = writeln!(stderr, "bruhat: {e}");
            e.exit_code()
        }
    }
}

/// The file a non-export command writes to, if any.
fn command_out(command: &Command) -> Option<&Path> {
    match command {
        Command::Interval { out, .. }
        | Command::Cosets { out, .. }
        | Command::Quotient { out, .. }
        | Command::Check { out, .. }
        | Command::Scan { out, .. } => out.as_deref(),
        Command::Export { .. } => None,
    }
}

/// Runs a command and renders its document without touching stdout.
/// `export` writes its files here and returns the list of paths.
pub fn execute(command: &Command) -> Result<Output, CliError> {
    match command {
        Command::Interval {
            system,
            w,
            hasse,
            format,
            ..
        } => {
            let (ctx, w) = single(system, w)?;
            Ok(Output::ok(render_interval(
                &ctx,
                &lower_interval(&ctx.sys, &w),
                *format,
                *hasse,
            )))
        }
        Command::Cosets {
            system, w, format, ..
        } => {
            let (ctx, w) = single(system, w)?;
            let b = lower_interval(&ctx.sys, &w);
            Ok(Output::ok(render_cosets(&ctx, &b, *format)?))
        }
        Command::Quotient {
            system, w, format, ..
        } => {
            let (ctx, w) = single(system, w)?;
            let q = QuotientInterval::new(&ctx.sys, lower_interval(&ctx.sys, &w))?;
            quotient_output(&ctx, &q, *format)
        }
        Command::Check {
            name,
            system,
            scope,
            format,
            ..
        } => {
            let (ctx, scope) = scoped(system, scope)?;
            let doc = check_doc(&ctx, &scope, *name);
            let status = check_status(&doc);
            let text = match format {
                Format::Json => dto::to_json(&doc),
                Format::Table => render::check_table(&doc),
                Format::Dot => return Err(CliError::Input("check has no DOT rendering".into())),
            };
            Ok(Output { text, status })
        }
        Command::Scan {
            name,
            system,
            scope,
            limit,
            format,
            ..
        } => {
            let (ctx, scope) = scoped(system, scope)?;
            let doc = scan_doc(&ctx, &scope, *name, *limit)?;
            let status = scan_status(&doc);
            let text = match format {
                Format::Json => dto::to_json(&doc),
                Format::Table => render::scan_table(&doc),
                Format::Dot => return Err(CliError::Input("scan has no DOT rendering".into())),
            };
            Ok(Output { text, status })
        }
        Command::Export {
            system,
            w,
            format,
            hasse,
            out,
        } => {
            let (ctx, w) = single(system, w)?;
            export(&ctx, &w, *format, *hasse, out)
        }
    }
}

/// 1 when any clause of any report failed; skips are not failures.
pub fn check_status(doc: &CheckDoc) -> u8 {
    if doc.summary.failed > 0 {
        EXIT_VIOLATION
    } else {
        EXIT_OK
    }
}

/// 1 only for a Deodhar violation; open-question evidence never fails.
pub fn scan_status(doc: &ScanDoc) -> u8 {
    match &doc.data {
        ScanData::Deodhar { violations, .. } if !violations.is_empty() => EXIT_VIOLATION,
        _ => EXIT_OK,
    }
}

fn single(system: &SystemArgs, literal: &str) -> Result<(Context, Element), CliError> {
    let ctx = resolve_system(system, &[literal.to_string()])?;
    let w = ctx.parse(literal)?;
    Ok((ctx, w))
}

fn scoped(system: &SystemArgs, args: &ScopeArgs) -> Result<(Context, Scope), CliError> {
    let ctx = resolve_system(system, &args.w)?;
    let scope = resolve_scope(&ctx, args)?;
    Ok((ctx, scope))
}

pub fn render_interval(ctx: &Context, b: &LowerInterval, format: Format, hasse: bool) -> String {
    let doc = dto::interval_doc(ctx, b);
    match format {
        Format::Json => dto::to_json(&doc),
        Format::Dot => render::interval_dot(&doc, hasse),
        Format::Table => render::interval_table(&doc),
    }
}

pub fn render_cosets(ctx: &Context, b: &LowerInterval, format: Format) -> Result<String, CliError> {
    let p = Partition::new(&ctx.sys, b)?;
    let doc = dto::cosets_doc(ctx, b.top(), &p);
    Ok(match format {
        Format::Json => dto::to_json(&doc),
        Format::Table => render::cosets_table(&doc),
        Format::Dot => render::cosets_dot(&doc, &dto::interval_doc(ctx, b)),
    })
}

/// Renders `C(w)`; the status is 1 when the arc checks contradict the
/// theory (an engine bug).
pub fn quotient_output(
    ctx: &Context,
    q: &QuotientInterval,
    format: Format,
) -> Result<Output, CliError> {
    let doc = dto::quotient_doc(ctx, q);
    let status = if doc.checks.consistent {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    };
    let text = match format {
        Format::Json => dto::to_json(&doc),
        Format::Dot => render::quotient_dot(&doc),
        Format::Table => render::quotient_table(&doc),
    };
    Ok(Output { text, status })
}

/// Runs a verifier over the scope in parallel; report order follows the
/// scope order regardless of scheduling.
pub fn check_doc(ctx: &Context, scope: &Scope, name: CheckName) -> CheckDoc {
    let sys = &ctx.sys;
    let reports: Vec<CheckReport> = match name {
        CheckName::Theorem1 => scope
            .elements
            .par_iter()
            .map(|w| verify_theorem1(sys, w))
            .collect(),
        CheckName::Theorem2 => scope
            .elements
            .par_iter()
            .map(|w| verify_theorem2(sys, w))
            .collect(),
        CheckName::Appendix => vec![verify_appendix(sys, &scope.elements)],
    };
    CheckDoc {
        v: SCHEMA_VERSION,
        check: check_name(name).into(),
        system: ctx.doc.clone(),
        scope: scope.doc(ctx),
        summary: Summary::of(&reports),
        reports: reports.iter().map(ReportDoc::from_report).collect(),
    }
}

fn check_name(name: CheckName) -> &'static str {
    match name {
        CheckName::Theorem1 => "theorem1",
        CheckName::Theorem2 => "theorem2",
        CheckName::Appendix => "appendix",
    }
}

fn scan_name(name: ScanName) -> &'static str {
    match name {
        ScanName::Deodhar => "deodhar",
        ScanName::Degmono => "degmono",
        ScanName::Poincare => "poincare",
        ScanName::Witnesses => "witnesses",
        ScanName::Degclass => "degclass",
        ScanName::Product => "product",
    }
}

pub fn scan_doc(
    ctx: &Context,
    scope: &Scope,
    name: ScanName,
    limit: usize,
) -> Result<ScanDoc, CliError> {
    let sys = &ctx.sys;
    let elements = &scope.elements;
    let (report, data) = match name {
        ScanName::Deodhar => {
            let scan =
                DeodharScan::collect(elements.par_iter().map(|w| deodhar_one(sys, w)).collect());
            let data = ScanData::Deodhar {
                intervals: scan.intervals,
                min_slack: scan.min_slack,
                violations: scan
                    .violations
                    .iter()
                    .map(|x| dto::DegreeDoc {
                        w: ctx.name(&x.w),
                        u: ctx.name(&x.u),
                        degree: x.degree,
                    })
                    .collect(),
            };
            (scan.report(sys), data)
        }
        ScanName::Degmono => {
            let mut scan = MonotoneScan::collect(
                elements
                    .par_iter()
                    .map(|w| degree_monotone_one(sys, w, limit))
                    .collect(),
            );
            scan.witnesses.truncate(limit);
            let data = ScanData::Degmono {
                intervals: scan.intervals,
                comparable_pairs: scan.comparable_pairs,
                witness_count: scan.witness_count,
                witnesses: scan
                    .witnesses
                    .iter()
                    .map(|x| dto::MonotoneDoc {
                        w: ctx.name(&x.w),
                        u: ctx.name(&x.u),
                        v: ctx.name(&x.v),
                        deg_u: x.deg_u,
                        deg_v: x.deg_v,
                    })
                    .collect(),
            };
            (scan.report(sys), data)
        }
        ScanName::Poincare => {
            let rows = elements
                .par_iter()
                .map(|w| {
                    let (pw, pd) = poincare_compare(sys, w);
                    let bottom = project_down(sys, w, w)?;
                    Ok(dto::PoincareRow {
                        w: ctx.name(w),
                        poincare: pw.0,
                        bottom: ctx.name(&bottom),
                        bottom_poincare: pd.0,
                    })
                })
                .collect::<Result<Vec<_>, bruhat_core::Error>>()?;
            let equal = rows
                .iter()
                .filter(|r| r.poincare == r.bottom_poincare)
                .count();
            let report = CheckReport::new(
                "poincare".into(),
                vec![Clause::note(
                    "poincare-pairs",
                    format!(
                        "{} pairs (P_w, P_P↓(w)); {} with P_w = P_P↓(w)",
                        rows.len(),
                        equal
                    ),
                )],
            );
            (report, ScanData::Poincare { rows })
        }
        ScanName::Witnesses => {
            if ball(sys, None, crate::scope::MAX_UNIVERSE).is_err() {
                return Err(CliError::Input(
                    "the witness hunt needs a finite group".into(),
                ));
            }
            let found = remark_witness_hunt(sys, elements);
            let ix = dto::indices;
            let data = ScanData::Witnesses {
                triples: found.triples,
                non_unique: found.non_unique.as_ref().map(|x| {
                    Box::new(dto::NonUniqueDoc {
                        left: ix(x.left),
                        right: ix(x.right),
                        u: ctx.name(&x.u),
                        v: ctx.name(&x.v),
                        first: [ctx.name(&x.first.0), ctx.name(&x.first.1)],
                        second: [ctx.name(&x.second.0), ctx.name(&x.second.1)],
                    })
                }),
                index_choice: found.index_choice.as_ref().map(|x| {
                    Box::new(dto::IndexChoiceDoc {
                        u: ctx.name(&x.u),
                        first: [ix(x.first.0), ix(x.first.1)],
                        second: [ix(x.second.0), ix(x.second.1)],
                    })
                }),
                not_graded: found.not_graded.as_ref().map(|x| {
                    Box::new(dto::GapDoc {
                        left: ix(x.left),
                        right: ix(x.right),
                        u: ctx.name(&x.u),
                        w: ctx.name(&x.w),
                    })
                }),
            };
            (found.report(sys), data)
        }
        ScanName::Degclass => {
            let report = degree_class_scan(sys, elements)?;
            (
                report,
                ScanData::Degclass {
                    intervals: elements.len(),
                },
            )
        }
        ScanName::Product => {
            let witness = direct_product_witness(sys, elements)?;
            let clause = match &witness {
                Some(x) => Clause::note(
                    "not-a-product",
                    format!(
                        "w={}: |B(w)| = {} but |B↓(w)| * |top coset| = {} * {}",
                        ctx.name(&x.w),
                        x.interval_size,
                        x.min_set_size,
                        x.top_coset_size
                    ),
                ),
                None => Clause::note("not-a-product", "none found".into()),
            };
            let data = ScanData::Product {
                witness: witness.map(|x| dto::ProductDoc {
                    w: ctx.name(&x.w),
                    interval_size: x.interval_size,
                    min_set_size: x.min_set_size,
                    top_coset_size: x.top_coset_size,
                }),
            };
            (CheckReport::new("product".into(), vec![clause]), data)
        }
    };
    Ok(ScanDoc {
        v: SCHEMA_VERSION,
        scan: scan_name(name).into(),
        system: ctx.doc.clone(),
        scope: scope.doc(ctx),
        report: ReportDoc::from_report(&report),
        data,
    })
}

/// Writes `interval`, `cosets` and `quotient` renderings of `w` into `dir`.
fn export(
    ctx: &Context,
    w: &Element,
    only: Option<Format>,
    hasse: bool,
    dir: &Path,
) -> Result<Output, CliError> {
    std::fs::create_dir_all(dir)
        .map_err(|e| CliError::Input(format!("cannot create {}: {e}", dir.display())))?;
    let q = QuotientInterval::new(&ctx.sys, lower_interval(&ctx.sys, w))?;
    let formats: Vec<Format> = match only {
        Some(f) => vec![f],
        None => vec![Format::Json, Format::Dot, Format::Table],
    };
    let mut listing = String::new();
    let mut status = EXIT_OK;
    for format in formats {
        let quotient = quotient_output(ctx, &q, format)?;
        status = status.max(quotient.status);
        let files = [
            (
                "interval",
                render_interval(ctx, q.interval(), format, hasse),
            ),
            ("cosets", render_cosets(ctx, q.interval(), format)?),
            ("quotient", quotient.text),
        ];
        for (stem, text) in files {
            let path = dir.join(format!("{stem}.{}", format.extension()));
            std::fs::write(&path, text)
                .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))?;
            listing.push_str(&format!("{}\n", path.display()));
        }
    }
    Ok(Output {
        text: listing,
        status,
    })
}
