//! `classprod` command-line front end.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use clap::builder::TypedValueParser as _;
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use classprod::corpus::{
    build_report, collect_group_files, parse_permutation, Family, GroupFile, ReportFile,
};
use classprod::{
    ClassId, ClassTable, HypothesisKind, HypothesisMatch, Lab, Status, Theorem, TheoremError,
    TheoremReport, DEFAULT_MAX_ORDER, MAX_ORDER_ENV,
};

#[derive(Parser)]
#[command(
    name = "classprod",
    version,
    about = "Products of conjugacy classes in finite permutation groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generator file for a named family, e.g. `construct frobenius 7 3`.
    Construct {
        /// cyclic, dihedral, symmetric, alternating, frobenius, z3sq_v4, z3sq_z4, agammal18
        family: String,
        params: Vec<u64>,
        /// Output path; stdout when omitted.
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
        /// Name written into the file; defaults to the family identifier.
        #[arg(long)]
        name: Option<String>,
    },
    /// Scan groups for hypothesis matches and verify every match.
    Scan(ScanArgs),
    /// Verify one statement for explicitly selected classes.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Args)]
struct Budget {
    /// Largest group order that will be enumerated.
    #[arg(long, env = MAX_ORDER_ENV, default_value_t = DEFAULT_MAX_ORDER,
          value_parser = clap::value_parser!(u32).range(1..).map(|v| v as usize))]
    max_order: usize,
}

#[derive(Args)]
struct ScanArgs {
    /// `.grp`/`.cay` files or corpus directories.
    #[arg(required = true)]
    inputs: Vec<PathBuf>,
    /// Hypothesis kinds to look for (comma-separated or repeated); all by default.
    #[arg(long = "hypothesis", value_delimiter = ',')]
    hypotheses: Vec<HypothesisKind>,
    #[command(flatten)]
    budget: Budget,
    /// Worker threads; defaults to the number of CPUs.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..).map(|v| v as usize))]
    workers: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Exit with status 1 when any check is FALSIFIED.
    #[arg(long)]
    fail_on_falsification: bool,
    /// Output path; stdout when omitted.
    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Group file.
    file: PathBuf,
    /// theorem_A, theorem_B, theorem_C, theorem_3_1, lemma_2_2, theorem_2_1, conjecture
    theorem: Theorem,
    /// Class selector: a class id or a cycle-notation member. Repeatable.
    #[arg(long = "class")]
    class: Vec<String>,
    /// Comma-separated class selectors, e.g. `--classes 2,3`.
    #[arg(long, value_delimiter = ',')]
    classes: Vec<String>,
    /// Classes generating the normal subgroup for theorem_2_1 (comma-separated).
    #[arg(long, value_delimiter = ',')]
    normal: Vec<String>,
    #[command(flatten)]
    budget: Budget,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Construct {
            family,
            params,
            output,
            name,
        } => construct(&family, &params, output.as_deref(), name),
        Command::Scan(args) => scan(&args),
        Command::Verify(args) => verify(&args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn emit(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(path) => {
            std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

fn construct(
    family: &str,
    params: &[u64],
    output: Option<&Path>,
    name: Option<String>,
) -> Result<u8> {
    let family = Family::parse(family, params)?;
    let (degree, generators) = family.generators()?;
    let order = family
        .build(DEFAULT_MAX_ORDER.max(family.expected_order() as usize))?
        .order();
    let file = GroupFile::from_generators(
        name.unwrap_or_else(|| family.file_stem()),
        format!("classprod construct {family}"),
        degree,
        generators,
    );
    emit(output, &file.serialize())?;
    eprintln!("{family}: order {order}, degree {degree}");
    Ok(0)
}

fn load(path: &Path, max_order: usize) -> Result<(String, ClassTable)> {
    let file = GroupFile::load(path)?;
    let group = file.build(max_order)?;
    Ok((file.name.clone(), ClassTable::new(Arc::new(group))))
}

#[derive(Serialize)]
#[serde(untagged)]
enum Entry {
    Report(ReportFile),
    Error { file: String, error: String },
}

fn expand_inputs(inputs: &[PathBuf], max_order: usize) -> Vec<Result<PathBuf, (PathBuf, String)>> {
    let mut out = Vec::new();
    for input in inputs {
        if input.is_dir() {
            match collect_group_files(input, Some(max_order)) {
                Ok(files) if files.is_empty() => {
                    out.push(Err((input.clone(), "no group files found".to_string())))
                }
                Ok(files) => out.extend(files.into_iter().map(Ok)),
                Err(e) => out.push(Err((input.clone(), e.to_string()))),
            }
        } else {
            out.push(Ok(input.clone()));
        }
    }
    out
}

fn scan(args: &ScanArgs) -> Result<u8> {
    let kinds: BTreeSet<HypothesisKind> = if args.hypotheses.is_empty() {
        HypothesisKind::ALL.into_iter().collect()
    } else {
        args.hypotheses.iter().copied().collect()
    };
    let max_order = args.budget.max_order;
    let inputs = expand_inputs(&args.inputs, max_order);

    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = args.workers {
        pool = pool.num_threads(n);
    }
    let pool = pool.build()?;
    let entries: Vec<Entry> = pool.install(|| {
        inputs
            .par_iter()
            .map(|input| {
                let path = match input {
                    Ok(path) => path,
                    Err((path, error)) => {
                        eprintln!("{}: {error}", path.display());
                        return Entry::Error {
                            file: path.display().to_string(),
                            error: error.clone(),
                        };
                    }
                };
                match load(path, max_order) {
                    Ok((name, table)) => {
                        let lab = Lab::new(&table, name.clone());
                        let reports = lab.sweep(&kinds);
                        let report = build_report(&name, &table, &reports);
                        eprintln!(
                            "{}: order {}, {} match(es), {} FALSIFIED",
                            name,
                            report.group.order,
                            report.matches.len(),
                            report.count(Status::Falsified)
                        );
                        Entry::Report(report)
                    }
                    Err(e) => {
                        eprintln!("{}: {e:#}", path.display());
                        Entry::Error {
                            file: path.display().to_string(),
                            error: format!("{e:#}"),
                        }
                    }
                }
            })
            .collect()
    });

    let text = match args.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&entries)?;
            s.push('\n');
            s
        }
        Format::Csv => scan_csv(&entries),
        Format::Table => scan_table(&entries),
    };
    emit(args.output.as_deref(), &text)?;

    let errors = entries
        .iter()
        .filter(|e| matches!(e, Entry::Error { .. }))
        .count();
    let falsified: usize = entries
        .iter()
        .map(|e| match e {
            Entry::Report(r) => r.count(Status::Falsified),
            Entry::Error { .. } => 0,
        })
        .sum();
    if falsified > 0 {
        eprintln!("{falsified} FALSIFIED result(s)");
    }
    Ok(scan_exit_code(
        entries.len(),
        errors,
        falsified,
        args.fail_on_falsification,
    ))
}

fn scan_exit_code(
    inputs: usize,
    errors: usize,
    falsified: usize,
    fail_on_falsification: bool,
) -> u8 {
    if errors == inputs {
        2
    } else if falsified > 0 && fail_on_falsification {
        1
    } else {
        0
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

const COLUMNS: [&str; 9] = [
    "group",
    "order",
    "degree",
    "hypothesis",
    "theorem",
    "classes",
    "sizes",
    "status",
    "detail",
];

fn rows(entries: &[Entry]) -> Vec<[String; 9]> {
    let mut out = Vec::new();
    for entry in entries {
        match entry {
            Entry::Report(r) => {
                for m in &r.matches {
                    let failed: Vec<&str> = m
                        .checks
                        .iter()
                        .filter(|c| !c.pass)
                        .map(|c| c.name.as_str())
                        .collect();
                    let detail = if failed.is_empty() {
                        m.notes.join("; ")
                    } else {
                        format!("failed: {}", failed.join(" "))
                    };
                    let join = |f: &dyn Fn(&classprod::corpus::ClassEntry) -> String| {
                        m.classes.iter().map(f).collect::<Vec<_>>().join(" ")
                    };
                    out.push([
                        r.group.name.clone(),
                        r.group.order.to_string(),
                        r.group.degree.to_string(),
                        m.hypothesis.to_string(),
                        m.theorem.to_string(),
                        match &m.normal_subgroup {
                            Some(n) => format!(
                                "{} N={}",
                                join(&|c| c.id.to_string()),
                                n.iter()
                                    .map(ToString::to_string)
                                    .collect::<Vec<_>>()
                                    .join("+")
                            ),
                            None => join(&|c| c.id.to_string()),
                        },
                        join(&|c| c.size.to_string()),
                        m.status.to_string(),
                        detail,
                    ]);
                }
            }
            Entry::Error { file, error } => out.push([
                file.clone(),
                String::new(),
                String::new(),
                String::new(),
                String::new(),
                String::new(),
                String::new(),
                "error".to_string(),
                error.clone(),
            ]),
        }
    }
    out
}

fn scan_csv(entries: &[Entry]) -> String {
    let mut s = COLUMNS.join(",");
    s.push('\n');
    for row in rows(entries) {
        let cells: Vec<String> = row.iter().map(|c| csv_field(c)).collect();
        s.push_str(&cells.join(","));
        s.push('\n');
    }
    s
}

fn render_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut s = String::new();
    let mut line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:<w$}"))
            .collect();
        let _ = writeln!(s, "{}", padded.join("  ").trim_end());
    };
    line(header.to_vec());
    for row in rows {
        line(row.iter().map(String::as_str).collect());
    }
    s
}

fn scan_table(entries: &[Entry]) -> String {
    let rows: Vec<Vec<String>> = rows(entries).into_iter().map(Vec::from).collect();
    render_table(&COLUMNS, &rows)
}

fn select(table: &ClassTable, selector: &str) -> Result<ClassId> {
    let selector = selector.trim();
    if let Ok(id) = selector.parse::<ClassId>() {
        if id < table.len() {
            return Ok(id);
        }
        bail!(
            "no class with id {id} (the group has {} classes)",
            table.len()
        );
    }
    let p = parse_permutation(selector, table.group().degree())
        .with_context(|| format!("class selector `{selector}`"))?;
    table
        .class_of_perm(&p)
        .ok_or_else(|| anyhow!("`{selector}` is not an element of the group"))
}

fn verify(args: &VerifyArgs) -> Result<u8> {
    let (name, table) = load(&args.file, args.budget.max_order)?;
    let lab = Lab::new(&table, name.clone());
    let ids = args
        .class
        .iter()
        .chain(&args.classes)
        .map(|s| select(&table, s))
        .collect::<Result<Vec<_>>>()?;
    let normal = if args.theorem == Theorem::T2_1 {
        if args.normal.is_empty() {
            bail!("theorem_2_1 needs --normal");
        }
        Some(
            args.normal
                .iter()
                .map(|s| select(&table, s))
                .collect::<Result<BTreeSet<_>>>()?
                .into_iter()
                .collect(),
        )
    } else {
        None
    };
    let arity = match args.theorem {
        Theorem::C | Theorem::T3_1 | Theorem::T2_1 => 1,
        _ => 2,
    };
    if ids.len() != arity {
        bail!(
            "{} takes {arity} class selector(s), got {}",
            args.theorem,
            ids.len()
        );
    }
    let m = HypothesisMatch {
        kind: args.theorem.hypothesis(),
        class_ids: ids,
        normal_subgroup: normal,
        group_ref: name.clone(),
    };
    let report = match lab.verify_match(args.theorem, &m) {
        Ok(r) => r,
        Err(e @ TheoremError::HypothesisNotMet { .. }) => {
            eprintln!("{name}: {e}");
            return Ok(2);
        }
        Err(e) => return Err(e.into()),
    };
    let text = match args.format {
        Format::Json => {
            let mut s = build_report(&name, &table, std::slice::from_ref(&report)).to_json();
            s.push('\n');
            s
        }
        Format::Csv | Format::Table => verify_text(&name, &table, &report, args.format),
    };
    emit(args.output.as_deref(), &text)?;
    Ok(match report.status {
        Status::Falsified => 1,
        Status::Pass | Status::Skipped => 0,
    })
}

fn verify_text(name: &str, table: &ClassTable, r: &TheoremReport, format: Format) -> String {
    let header = ["check", "expected", "observed", "pass", "witness"];
    let rows: Vec<Vec<String>> = r
        .checks
        .iter()
        .map(|c| {
            vec![
                c.name.clone(),
                c.expected.clone(),
                c.observed.clone(),
                c.pass.to_string(),
                c.witness.clone().unwrap_or_default(),
            ]
        })
        .collect();
    if format == Format::Csv {
        let mut s = header.join(",");
        s.push('\n');
        for row in rows {
            let cells: Vec<String> = row.iter().map(|c| csv_field(c)).collect();
            s.push_str(&cells.join(","));
            s.push('\n');
        }
        return s;
    }
    let mut s = String::new();
    let classes: Vec<String> = r
        .matched
        .class_ids
        .iter()
        .map(|&c| {
            let cls = table.class(c);
            format!(
                "{c} (size {}, order {}, rep {})",
                cls.size(),
                cls.element_order,
                table.representative(c)
            )
        })
        .collect();
    let _ = writeln!(s, "group: {name} (order {})", table.group().order());
    let _ = writeln!(s, "{}: {}", r.theorem, r.status);
    let _ = writeln!(s, "classes: {}", classes.join("; "));
    for (k, v) in &r.facts {
        let _ = writeln!(s, "{k}: {v}");
    }
    for n in &r.notes {
        let _ = writeln!(s, "note: {n}");
    }
    s.push_str(&render_table(&header, &rows));
    s
}
