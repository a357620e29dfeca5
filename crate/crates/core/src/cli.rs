//! Command-line front end. [`run`] takes the argument list and output
//! streams and returns the process exit status:
//! 0 success, 1 invalid scene (or failed check), 2 unreadable input.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::chains::{branch_chain, pseudo_chains, BranchIndex, ChainResult, Convention};
use crate::diagram::{parse_scene, validate_scene, Scene};
use crate::lifts::{format_cycles, Cell, LiftTrace, PlacementSeed};
use crate::linalg::{format_rational, Rational};
use crate::linking::{
    aggregate, branch_linking_with, classify_entries, compare_transposed, intersection_matrix,
    Entry, EntryKind, LinkingMatrix,
};
use crate::prepared::PreparedScene;

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Table,
    Json,
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Mode {
    #[default]
    Code,
    Theorem,
}

impl From<Mode> for Convention {
    fn from(m: Mode) -> Convention {
        match m {
            Mode::Code => Convention::Code,
            Mode::Theorem => Convention::Theorem,
        }
    }
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Seed {
    #[default]
    Default,
    Alternate,
}

impl From<Seed> for PlacementSeed {
    fn from(s: Seed) -> PlacementSeed {
        match s {
            Seed::Default => PlacementSeed::Smallest,
            Seed::Alternate => PlacementSeed::Largest,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum CurveName {
    Gamma,
    Delta,
}

#[derive(Parser, Debug)]
#[command(
    name = "dilink",
    version,
    about = "Linking numbers of lifts in 3-fold dihedral branched covers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug)]
struct Common {
    /// Scene file (JSON).
    file: PathBuf,
    #[arg(long, value_enum, default_value_t)]
    format: OutputFormat,
}

#[derive(clap::Args, Debug)]
struct Compute {
    #[command(flatten)]
    common: Common,
    /// Sign convention: the reference one, or the literal closed-form rules.
    #[arg(long, value_enum, default_value_t)]
    mode: Mode,
    /// Which of the two admissible sheets seeds the A2 placement.
    #[arg(long, value_enum, default_value_t)]
    seed: Seed,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a scene and list every violation.
    Validate {
        #[command(flatten)]
        common: Common,
    },
    /// Print the lifts of a curve, its monodromy and closed lifts.
    Lifts {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "gamma")]
        curve: CurveName,
    },
    /// Solve for the 2-chains bounding gamma's lifts, or a branch curve.
    Chains {
        #[command(flatten)]
        compute: Compute,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        branch: Option<u8>,
    },
    /// Intersection matrix between gamma's and delta's lifts.
    Link {
        #[command(flatten)]
        compute: Compute,
        /// Role-swapped scene (gamma and delta exchanged), used to label
        /// which entries are linking numbers and to check symmetry.
        #[arg(long)]
        swapped: Option<PathBuf>,
    },
    /// Linking of gamma's lifts with a branch curve.
    LinkBranch {
        #[command(flatten)]
        compute: Compute,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        index: u8,
    },
    /// Compare a scene with its role-swapped encoding.
    Symmetry {
        file: PathBuf,
        swapped: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        mode: Mode,
    },
}

enum Failure {
    Invalid(String),
    Unreadable(String),
}

type Outcome = Result<u8, Failure>;

fn load(path: &Path) -> Result<Scene, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Unreadable(format!("{}: {e}", path.display())))?;
    parse_scene(&text).map_err(|e| Failure::Unreadable(format!("{}: {e}", path.display())))
}

fn prepare(
    path: &Path,
    seed: PlacementSeed,
    err: &mut dyn Write,
) -> Result<PreparedScene, Failure> {
    let scene = load(path)?;
    let p = PreparedScene::with_seed(scene, seed)
        .map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?;
    for w in p.warnings() {
        let _ = writeln!(err, "warning: {}: {w}", path.display());
    }
    Ok(p)
}

/// `[numerator, denominator]`, as JSON integers when they fit in i64 and as
/// decimal strings otherwise.
pub fn rational_json(q: &Rational) -> Value {
    let part = |n: &BigInt| {
        n.to_i64()
            .map_or_else(|| Value::String(n.to_string()), |v| json!(v))
    };
    json!([part(q.numer()), part(q.denom())])
}

/// Inverse of [`rational_json`].
pub fn parse_rational_json(v: &Value) -> Option<Rational> {
    let arr = v.as_array()?;
    if arr.len() != 2 {
        return None;
    }
    let part = |x: &Value| -> Option<BigInt> {
        match x {
            Value::Number(n) => n.as_i64().map(BigInt::from),
            Value::String(s) => s.parse().ok(),
            _ => None,
        }
    };
    let (n, d) = (part(&arr[0])?, part(&arr[1])?);
    (d != BigInt::from(0)).then(|| Rational::new(n, d))
}

fn entry_json(e: &Entry) -> Value {
    e.value().map_or(Value::Null, rational_json)
}

fn cycles_json(cycles: &[Vec<Cell>]) -> Value {
    json!(cycles
        .iter()
        .map(|c| c.iter().map(|x| x.value()).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

fn vector(x: &[Rational]) -> String {
    x.iter().map(format_rational).collect::<Vec<_>>().join(" ")
}

fn banner(out: &mut dyn Write, c: Convention) -> std::io::Result<()> {
    match c {
        Convention::Code => writeln!(out, "mode: code"),
        Convention::Theorem => writeln!(out, "mode: theorem (literal formulas)"),
    }
}

fn emit_json(out: &mut dyn Write, v: &Value) -> std::io::Result<()> {
    writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(v).expect("JSON values serialize")
    )
}

fn cmd_validate(common: &Common, out: &mut dyn Write) -> Outcome {
    let scene = load(&common.file)?;
    let report = validate_scene(&scene);
    match common.format {
        OutputFormat::Json => {
            let items: Vec<Value> = report
                .violations
                .iter()
                .map(|v| json!({"name": v.name(), "message": v.to_string()}))
                .collect();
            emit_json(
                out,
                &json!({"valid": report.is_valid(), "violations": items}),
            )
            .ok();
        }
        OutputFormat::Table => {
            if report.is_valid() {
                writeln!(out, "valid").ok();
            } else {
                for v in &report.violations {
                    writeln!(out, "{v}").ok();
                }
            }
        }
    }
    Ok(if report.is_valid() { 0 } else { 1 })
}

fn trace_json(name: &str, t: &LiftTrace) -> Value {
    json!({
        "curve": name,
        "cells": t.cells.iter().map(|l| l.iter().map(|c| c.value()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "monodromy": Cell::ALL.iter().map(|&c| t.monodromy.apply(c).value()).collect::<Vec<_>>(),
        "closure": cycles_json(&t.closure),
    })
}

fn cmd_lifts(
    common: &Common,
    curve: CurveName,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    let p = prepare(&common.file, PlacementSeed::default(), err)?;
    let (name, trace) = match curve {
        CurveName::Gamma => ("gamma", p.gamma_trace()),
        CurveName::Delta => (
            "delta",
            p.delta_trace().ok_or_else(|| {
                Failure::Invalid(format!(
                    "{}: scene has no delta curve",
                    common.file.display()
                ))
            })?,
        ),
    };
    match common.format {
        OutputFormat::Json => {
            emit_json(out, &trace_json(name, trace)).ok();
        }
        OutputFormat::Table => {
            writeln!(out, "curve: {name}").ok();
            for j in Cell::ALL {
                let cells: Vec<String> = trace.lift(j).iter().map(Cell::to_string).collect();
                writeln!(out, "lift {j}: {}", cells.join(" ")).ok();
            }
            writeln!(out, "monodromy: {}", trace.monodromy).ok();
            writeln!(out, "closure: {}", format_cycles(&trace.closure)).ok();
        }
    }
    Ok(0)
}

fn chain_json(c: &ChainResult) -> Value {
    c.coefficients().map_or(Value::Null, |x| {
        json!(x.iter().map(rational_json).collect::<Vec<_>>())
    })
}

fn chain_line(c: &ChainResult) -> String {
    c.coefficients()
        .map_or_else(|| "not nullhomologous".to_string(), vector)
}

fn cmd_chains(
    args: &Compute,
    branch: Option<u8>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    let p = prepare(&args.common.file, args.seed.into(), err)?;
    let conv: Convention = args.mode.into();
    let json = args.common.format == OutputFormat::Json;
    if let Some(b) = branch.and_then(BranchIndex::from_number) {
        let chain = branch_chain(&p, b, conv);
        if json {
            emit_json(
                out,
                &json!({"mode": conv.to_string(), "branch": b.number(), "x": chain_json(&chain)}),
            )
            .ok();
        } else {
            banner(out, conv).ok();
            writeln!(out, "branch {}: {}", b.number(), chain_line(&chain)).ok();
        }
        return Ok(0);
    }
    let chains = pseudo_chains(&p, conv);
    if json {
        emit_json(
            out,
            &json!({
                "mode": conv.to_string(),
                "lifts": chains.iter().map(chain_json).collect::<Vec<_>>(),
                "closure": cycles_json(&p.gamma_trace().closure),
            }),
        )
        .ok();
    } else {
        banner(out, conv).ok();
        for (j, c) in Cell::ALL.iter().zip(&chains) {
            writeln!(out, "lift {j}: {}", chain_line(c)).ok();
        }
        writeln!(out, "closure: {}", format_cycles(&p.gamma_trace().closure)).ok();
    }
    Ok(0)
}

fn matrix_json(m: &LinkingMatrix) -> Value {
    json!(m
        .entries
        .iter()
        .map(|r| r.iter().map(entry_json).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

fn kind_tag(k: EntryKind) -> &'static str {
    match k {
        EntryKind::Linking => "linking",
        EntryKind::Intersection => "intersection",
        EntryKind::Undefined => "undefined",
    }
}

fn cmd_link(
    args: &Compute,
    swapped: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    let p = prepare(&args.common.file, args.seed.into(), err)?;
    let conv: Convention = args.mode.into();
    let matrix = intersection_matrix(&p, conv)
        .map_err(|e| Failure::Invalid(format!("{}: {e}", args.common.file.display())))?;
    let gamma_closure = &p.gamma_trace().closure;
    let delta_closure = &p.delta_trace().expect("delta present").closure;
    let agg = aggregate(&matrix, gamma_closure, delta_closure);

    let mut extra = None;
    if let Some(path) = swapped {
        let q = prepare(path, args.seed.into(), err)?;
        let other = intersection_matrix(&q, conv)
            .map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?;
        let bounds = pseudo_chains(&q, conv).map(|c| c.is_solved());
        let kinds = classify_entries(&matrix, gamma_closure, delta_closure, bounds);
        extra = Some((kinds, compare_transposed(&matrix, &other)));
    }

    if args.common.format == OutputFormat::Json {
        let mut doc = json!({
            "mode": conv.to_string(),
            "matrix": matrix_json(&matrix),
            "aggregated": agg.entries.iter().map(|e| json!({
                "gamma": cycles_json(std::slice::from_ref(&e.gamma_cycle))[0],
                "delta": cycles_json(std::slice::from_ref(&e.delta_cycle))[0],
                "value": entry_json(&e.value),
            })).collect::<Vec<_>>(),
        });
        if let Some((kinds, sym)) = &extra {
            doc["kinds"] = json!(kinds.iter().map(|r| r.map(kind_tag)).collect::<Vec<_>>());
            doc["symmetry"] =
                json!({"compared": sym.compared.len(), "mismatches": sym.mismatches.len()});
        }
        emit_json(out, &doc).ok();
    } else {
        banner(out, conv).ok();
        write!(out, "{matrix}").ok();
        let values: Vec<String> = agg.values().iter().map(|v| v.to_string()).collect();
        writeln!(out, "aggregated: {}", values.join(", ")).ok();
        write!(out, "{agg}").ok();
        if let Some((kinds, sym)) = &extra {
            writeln!(out, "kinds:").ok();
            for r in kinds {
                writeln!(out, "  {}", r.map(kind_tag).join(" ")).ok();
            }
            writeln!(
                out,
                "symmetry: {} compared, {} mismatched",
                sym.compared.len(),
                sym.mismatches.len()
            )
            .ok();
        }
    }
    Ok(0)
}

fn cmd_link_branch(args: &Compute, index: u8, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let p = prepare(&args.common.file, args.seed.into(), err)?;
    let conv: Convention = args.mode.into();
    let b = BranchIndex::from_number(index).expect("clap restricts the index");
    let chain = branch_chain(&p, b, conv);
    let values = branch_linking_with(&p, b, &chain, conv);
    let closure = &p.gamma_trace().closure;
    let sums: Vec<Entry> = closure
        .iter()
        .map(|cy| {
            cy.iter()
                .map(|c| values[c.index()].value().cloned())
                .sum::<Option<Rational>>()
                .map_or(Entry::Undefined, Entry::Value)
        })
        .collect();
    if args.common.format == OutputFormat::Json {
        emit_json(
            out,
            &json!({
                "mode": conv.to_string(),
                "index": index,
                "values": values.iter().map(entry_json).collect::<Vec<_>>(),
                "aggregated": closure.iter().zip(&sums).map(|(cy, v)| json!({
                    "gamma": cycles_json(std::slice::from_ref(cy))[0],
                    "value": entry_json(v),
                })).collect::<Vec<_>>(),
            }),
        )
        .ok();
    } else {
        banner(out, conv).ok();
        writeln!(out, "branch {index}").ok();
        for (j, v) in Cell::ALL.iter().zip(&values) {
            writeln!(out, "lift {j}: {v}").ok();
        }
        let parts: Vec<String> = closure
            .iter()
            .zip(&sums)
            .map(|(cy, v)| format!("{} {v}", format_cycles(std::slice::from_ref(cy))))
            .collect();
        writeln!(out, "aggregated: {}", parts.join(", ")).ok();
    }
    Ok(0)
}

fn cmd_symmetry(
    file: &Path,
    swapped: &Path,
    mode: Mode,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    let a = prepare(file, PlacementSeed::default(), err)?;
    let b = prepare(swapped, PlacementSeed::default(), err)?;
    let report = crate::linking::symmetry_check(&a, &b, mode.into())
        .map_err(|e| Failure::Invalid(e.to_string()))?;
    for m in &report.mismatches {
        writeln!(
            out,
            "mismatch: A({}, {}) = {} but B({}, {}) = {}",
            m.j,
            m.k,
            format_rational(&m.a),
            m.k,
            m.j,
            format_rational(&m.b)
        )
        .ok();
    }
    writeln!(
        out,
        "symmetry: {} compared, {} mismatched",
        report.compared.len(),
        report.mismatches.len()
    )
    .ok();
    Ok(if report.holds() { 0 } else { 1 })
}

/// Runs the CLI and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    let result = match &cli.command {
        Command::Validate { common } => cmd_validate(common, out),
        Command::Lifts { common, curve } => cmd_lifts(common, *curve, out, err),
        Command::Chains { compute, branch } => cmd_chains(compute, *branch, out, err),
        Command::Link { compute, swapped } => cmd_link(compute, swapped.as_deref(), out, err),
        Command::LinkBranch { compute, index } => cmd_link_branch(compute, *index, out, err),
        Command::Symmetry {
            file,
            swapped,
            mode,
        } => cmd_symmetry(file, swapped, *mode, out, err),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Invalid(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Unreadable(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}
