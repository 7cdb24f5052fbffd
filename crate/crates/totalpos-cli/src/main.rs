//! Command-line front end for the `totalpos` library.
//!
//! Exit codes:
//! - 0: computation finished (including "criterion not satisfied" answers
//!   and scans that observe failures; those are results, not errors)
//! - 1: a recorded claim failed under `repro`
//! - 2: usage, parse, or input errors
//! - 3: the interval-arithmetic precision ladder was exhausted before a
//!   sign could be certified
//!
//! Every numeric argument is an exact rational like `3`, `-2`, or `7/4`;
//! decimal floats are not accepted anywhere. Matrix files are either the
//! JSON object `{"rows": m, "cols": n, "entries": [[...]]}` or a plain
//! whitespace grid, sniffed by the leading character. `--format json`
//! wraps every answer as `{"config": ..., "result": ...}` so a run can be
//! reproduced from its own output; table mode prints the same config as a
//! leading line.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use totalpos::catalog::{case_matrices, run_all, run_case, CaseMatrix};
use totalpos::classify::{classify_brute, classify_hankel, Classification};
use totalpos::exact::Rat;
use totalpos::exppoly::{
    classify_power_with, count_roots_certified, laguerre_bound, minor_exppoly,
    PowerClassification, DEFAULT_MAX_BITS,
};
use totalpos::hadamard::hadamard_product;
use totalpos::matrix::{IndexSet, Matrix};
use totalpos::moments::{shifted_hankel, DiscreteMeasure, MomentSequence};
use totalpos::{Error, Result};

#[derive(Parser)]
#[command(
    name = "totalpos",
    version,
    about = "Exact total-positivity classification, Hadamard-power certificates, \
             and a reproducible example catalog"
)]
struct Cli {
    /// Output style: human-readable lines or one JSON document.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Precision ceiling in bits for certified signs. Defaults to the
    /// TOTALPOS_BITS environment variable, then 4096.
    #[arg(long, global = true)]
    bits: Option<u32>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Moment-rank classifier when the input is square Hankel, brute force
    /// otherwise.
    Auto,
    /// Every minor of every size.
    Brute,
    /// Initial-minor criterion for full total positivity.
    Gp,
    /// Contiguous-minor criterion for TP_r.
    Fekete,
    /// Moment-rank classifier; the input must be square Hankel.
    Hankel,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Op {
    Product,
    Sum,
}

#[derive(Subcommand)]
enum Command {
    /// Largest orders r with the matrix TP_r and TN_r, plus failing minors.
    Classify {
        /// Matrix file, JSON or whitespace grid.
        #[arg(long)]
        input: PathBuf,

        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,

        /// Order bound for --method fekete; other methods ignore it.
        #[arg(long)]
        order: Option<usize>,
    },

    /// Classify the entrywise power A^t of a positive matrix, every minor
    /// sign certified.
    Power {
        /// Matrix file with strictly positive entries.
        #[arg(long)]
        input: PathBuf,

        /// Rational exponent, e.g. 3/2.
        #[arg(long)]
        t: String,

        /// Largest minor size to certify (default: the full size).
        #[arg(long)]
        order: Option<usize>,
    },

    /// Sweep an arithmetic t-grid and report where A^t stops being TN_r.
    Scan {
        /// "fh" for the parameterised Hankel family, or a catalog case id.
        #[arg(long)]
        family: String,

        /// Matrix name inside the catalog case (default "a").
        #[arg(long)]
        matrix: Option<String>,

        /// Size for --family fh: 3, 4 or 5 (default 4).
        #[arg(long)]
        n: Option<usize>,

        /// Perturbation eps for --family fh (default: the case default).
        #[arg(long)]
        eps: Option<String>,

        /// Grid endpoints "LO:HI", both rationals, LO < HI.
        #[arg(long, value_name = "LO:HI", allow_hyphen_values = true)]
        t_range: String,

        /// Number of grid intervals; the grid has steps+1 points.
        #[arg(long)]
        steps: usize,

        /// TN order to certify (default: n for fh, the full size otherwise).
        #[arg(long)]
        order: Option<usize>,
    },

    /// Re-check the recorded claims of the worked-example catalog.
    Repro {
        /// Case id, e.g. fallat07.
        #[arg(long, conflicts_with = "all")]
        case: Option<String>,

        /// Run every case.
        #[arg(long)]
        all: bool,
    },

    /// Entrywise product or sum of two matrices, then classify the result.
    Hadamard {
        #[arg(long)]
        a: PathBuf,

        #[arg(long)]
        b: PathBuf,

        #[arg(long, value_enum)]
        op: Op,
    },

    /// Build a Hankel moment matrix and classify it.
    HankelGen {
        /// Discrete measure as "location:weight,..." pairs.
        #[arg(long)]
        measure: Option<String>,

        /// Use the factorial moments 1, 1, 2, 6, 24, ...
        #[arg(long)]
        factorial: bool,

        /// Use the moments lambda^(k^2) for a rational lambda > 1.
        #[arg(long)]
        lambda2: Option<String>,

        /// Matrix size.
        #[arg(long)]
        n: usize,

        /// Moment shift: entry (i, j) holds a_(i+j+shift), 0-based.
        #[arg(long, default_value_t = 0)]
        shift: usize,
    },

    /// A minor of A^t as an exponential polynomial in t, with a root bound
    /// and certified root isolation.
    Exppoly {
        /// Matrix file with strictly positive entries.
        #[arg(long)]
        input: PathBuf,

        /// Row and column sets as "i,j,..;k,l,..", 1-based and increasing.
        #[arg(long, value_name = "ROWS;COLS")]
        minor: String,

        /// Root-search window lower end.
        #[arg(long, default_value = "-5", allow_hyphen_values = true)]
        lo: String,

        /// Root-search window upper end.
        #[arg(long, default_value = "5", allow_hyphen_values = true)]
        hi: String,

        /// Initial subdivision count for root isolation.
        #[arg(long, default_value_t = 64)]
        grid: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = resolve_bits(cli.bits).and_then(|bits| run(cli.command, cli.format, bits));
    match out {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            if matches!(e, Error::Precision(_)) {
                ExitCode::from(3)
            } else {
                ExitCode::from(2)
            }
        }
    }
}

fn resolve_bits(flag: Option<u32>) -> Result<u32> {
    if let Some(bits) = flag {
        return Ok(bits);
    }
    match std::env::var("TOTALPOS_BITS") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("TOTALPOS_BITS must be an integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_BITS),
    }
}

fn run(cmd: Command, format: Format, bits: u32) -> Result<ExitCode> {
    match cmd {
        Command::Classify { input, method, order } => cmd_classify(&input, method, order, format),
        Command::Power { input, t, order } => cmd_power(&input, &t, order, bits, format),
        Command::Scan { family, matrix, n, eps, t_range, steps, order } => {
            cmd_scan(&family, matrix, n, eps, &t_range, steps, order, bits, format)
        }
        Command::Repro { case, all } => cmd_repro(case, all, format),
        Command::Hadamard { a, b, op } => cmd_hadamard(&a, &b, op, format),
        Command::HankelGen { measure, factorial, lambda2, n, shift } => {
            cmd_hankel_gen(measure, factorial, lambda2, n, shift, format)
        }
        Command::Exppoly { input, minor, lo, hi, grid } => {
            cmd_exppoly(&input, &minor, &lo, &hi, grid, format)
        }
    }
}

// ---------------------------------------------------------------- classify

fn cmd_classify(
    input: &Path,
    method: Method,
    order: Option<usize>,
    format: Format,
) -> Result<ExitCode> {
    let a = load_matrix(input)?;
    let config = json!({
        "command": "classify",
        "input": input.display().to_string(),
        "method": method_name(method),
        "order": order,
    });
    match method {
        Method::Auto | Method::Brute | Method::Hankel => {
            let (used, c) = match method {
                Method::Hankel => ("hankel", classify_hankel(&a)?),
                Method::Auto if a.is_square() && a.is_hankel() => ("hankel", classify_hankel(&a)?),
                _ => ("brute", classify_brute(&a)),
            };
            let table = format!(
                "matrix: {} x {}\nmethod: {}\n{}",
                a.rows(),
                a.cols(),
                used,
                classification_table(&c)
            );
            let result = json!({ "method": used, "classification": serde_json::to_value(&c)? });
            emit(format, config, result, &table)?;
        }
        Method::Gp => {
            let witness = gp_witness(&a)?;
            let (table, result) = criterion_output("gp", "totally positive", &witness);
            emit(format, config, result, &table)?;
        }
        Method::Fekete => {
            let r = order.unwrap_or_else(|| a.rows().min(a.cols()));
            let witness = fekete_witness(&a, r)?;
            let label = format!("fekete (order {r})");
            let conclusion = format!("TP_{r}");
            let (table, result) = criterion_output(&label, &conclusion, &witness);
            emit(format, config, result, &table)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Auto => "auto",
        Method::Brute => "brute",
        Method::Gp => "gp",
        Method::Fekete => "fekete",
        Method::Hankel => "hankel",
    }
}

/// First non-positive initial minor in row-major (i, j) order, if any.
/// The initial minor at (i, j) is the k-square contiguous minor with
/// k = min(i, j) whose lower-right corner is (i, j).
fn gp_witness(a: &Matrix<Rat>) -> Result<Option<(IndexSet, IndexSet, Rat)>> {
    for i in 1..=a.rows() {
        for j in 1..=a.cols() {
            let k = i.min(j);
            let rows = IndexSet::interval(i - k + 1, k)?;
            let cols = IndexSet::interval(j - k + 1, k)?;
            let v = a.minor(&rows, &cols)?;
            if !v.is_positive() {
                return Ok(Some((rows, cols, v)));
            }
        }
    }
    Ok(None)
}

/// First non-positive contiguous minor of size at most r, smallest size
/// first, if any.
fn fekete_witness(a: &Matrix<Rat>, r: usize) -> Result<Option<(IndexSet, IndexSet, Rat)>> {
    for s in 1..=r.min(a.rows()).min(a.cols()) {
        for i in 1..=a.rows() - s + 1 {
            for j in 1..=a.cols() - s + 1 {
                let rows = IndexSet::interval(i, s)?;
                let cols = IndexSet::interval(j, s)?;
                let v = a.minor(&rows, &cols)?;
                if !v.is_positive() {
                    return Ok(Some((rows, cols, v)));
                }
            }
        }
    }
    Ok(None)
}

fn criterion_output(
    method: &str,
    conclusion: &str,
    witness: &Option<(IndexSet, IndexSet, Rat)>,
) -> (String, serde_json::Value) {
    match witness {
        None => (
            format!("method: {method}\ncriterion satisfied: matrix is {conclusion}\n"),
            json!({ "method": method, "satisfied": true }),
        ),
        Some((rows, cols, v)) => (
            format!(
                "method: {method}\ncriterion not satisfied\n\
                 first failing minor: rows {rows} cols {cols} = {v}\n"
            ),
            json!({
                "method": method,
                "satisfied": false,
                "witness": {
                    "rows": rows.indices(),
                    "cols": cols.indices(),
                    "value": v.to_string(),
                },
            }),
        ),
    }
}

// ------------------------------------------------------------------- power

fn cmd_power(
    input: &Path,
    t_str: &str,
    order: Option<usize>,
    bits: u32,
    format: Format,
) -> Result<ExitCode> {
    let a = load_matrix(input)?;
    let t: Rat = t_str.parse()?;
    let r = order.unwrap_or_else(|| a.rows().min(a.cols()));
    let pc = classify_power_with(&a, &t, r, bits)?;
    let config = json!({
        "command": "power",
        "input": input.display().to_string(),
        "t": t.to_string(),
        "order": r,
        "bits": bits,
    });
    let table = power_table(&pc, r);
    emit(format, config, serde_json::to_value(&pc)?, &table)?;
    Ok(ExitCode::SUCCESS)
}

fn power_table(pc: &PowerClassification, r: usize) -> String {
    let mut s = format!(
        "t: {}\norder cap: {}\ntn_order: {}\ntp_order: {}\n",
        pc.t, r, pc.tn_order, pc.tp_order
    );
    for (label, w) in [("tn", &pc.tn_witness), ("tp", &pc.tp_witness)] {
        if let Some(w) = w {
            s += &format!("{label} fails next at: rows {} cols {} sign {}", w.rows, w.cols, w.sign);
            if let Some(v) = &w.value {
                s += &format!(" = {v}");
            }
            s.push('\n');
        }
    }
    s += &format!("max precision bits: {}\n", pc.max_precision_bits);
    s
}

// -------------------------------------------------------------------- scan

#[allow(clippy::too_many_arguments)]
fn cmd_scan(
    family: &str,
    matrix: Option<String>,
    n: Option<usize>,
    eps: Option<String>,
    t_range: &str,
    steps: usize,
    order: Option<usize>,
    bits: u32,
    format: Format,
) -> Result<ExitCode> {
    let eps_echo = eps.clone();
    let (a, r, target) = scan_target(family, matrix, n, eps, order)?;
    let (lo, hi) = parse_range(t_range)?;
    if steps == 0 {
        return Err(Error::Domain("steps must be at least 1".into()));
    }
    if lo.is_negative() {
        return Err(Error::Domain(format!(
            "powers are defined for t >= 0, grid starts at {lo}"
        )));
    }
    let span = &hi - &lo;
    let steps_rat = Rat::from(steps as i64);
    let mut grid = Vec::new();
    let mut failures: Vec<String> = Vec::new();
    let mut table = String::new();
    for k in 0..=steps {
        let t = &lo + &(&(&span * &Rat::from(k as i64)) / &steps_rat);
        let pc = classify_power_with(&a, &t, r, bits)?;
        let pass = pc.is_tn_to(r);
        table += &format!(
            "t = {t}: tn_order {} of {r} {}\n",
            pc.tn_order,
            if pass { "pass" } else { "FAIL" }
        );
        grid.push(json!({
            "t": t.to_string(),
            "tn_order": pc.tn_order,
            "tp_order": pc.tp_order,
            "pass": pass,
        }));
        if !pass {
            failures.push(t.to_string());
        }
    }
    table += &if failures.is_empty() {
        "failures: none\n".to_string()
    } else {
        format!("failures: {}\n", failures.join(" "))
    };
    let config = json!({
        "command": "scan",
        "family": family,
        "target": target,
        "eps": eps_echo,
        "t_range": t_range,
        "steps": steps,
        "order": r,
        "bits": bits,
    });
    emit(format, config, json!({ "grid": grid, "failures": failures }), &table)?;
    Ok(ExitCode::SUCCESS)
}

fn scan_target(
    family: &str,
    matrix: Option<String>,
    n: Option<usize>,
    eps: Option<String>,
    order: Option<usize>,
) -> Result<(Matrix<Rat>, usize, serde_json::Value)> {
    if family == "fh" {
        let n = n.unwrap_or(4);
        let mut overrides = BTreeMap::new();
        if let Some(e) = eps {
            overrides.insert("eps".to_string(), e.parse::<Rat>()?);
        }
        let mats = case_matrices("fh_family", &overrides)?;
        let key = format!("fh{n}");
        let Some(CaseMatrix::Rational(m)) = mats.get(&key) else {
            return Err(Error::Domain(format!("fh size must be 3, 4 or 5, got {n}")));
        };
        let target = json!({ "case": "fh_family", "matrix": key });
        Ok((m.clone(), order.unwrap_or(n), target))
    } else {
        if n.is_some() || eps.is_some() {
            return Err(Error::Domain(
                "--n and --eps apply only to --family fh".into(),
            ));
        }
        let mats = case_matrices(family, &BTreeMap::new())?;
        let name = matrix.unwrap_or_else(|| "a".to_string());
        match mats.get(&name) {
            Some(CaseMatrix::Rational(m)) => {
                let r = order.unwrap_or_else(|| m.rows().min(m.cols()));
                let target = json!({ "case": family, "matrix": name });
                Ok((m.clone(), r, target))
            }
            Some(CaseMatrix::Polynomial(_)) => Err(Error::Domain(format!(
                "matrix {name} of case {family} has polynomial entries; scan needs rationals"
            ))),
            None => Err(Error::Domain(format!("case {family} has no matrix named {name}"))),
        }
    }
}

fn parse_range(spec: &str) -> Result<(Rat, Rat)> {
    let (lo, hi) = spec
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("range {spec:?} is not LO:HI")))?;
    let lo: Rat = lo.trim().parse()?;
    let hi: Rat = hi.trim().parse()?;
    if lo.cmp_rat(&hi) != std::cmp::Ordering::Less {
        return Err(Error::Domain(format!("range needs LO < HI, got {lo} and {hi}")));
    }
    Ok((lo, hi))
}

// ------------------------------------------------------------------- repro

fn cmd_repro(case: Option<String>, all: bool, format: Format) -> Result<ExitCode> {
    let config = json!({ "command": "repro", "case": case, "all": all });
    let (doc, table, ok) = if all {
        let rep = run_all()?;
        let ok = rep.failed == 0;
        (serde_json::to_value(&rep)?, format!("{rep}\n"), ok)
    } else if let Some(id) = case {
        let rep = run_case(&id, &BTreeMap::new())?;
        let ok = rep.all_passed();
        (serde_json::to_value(&rep)?, format!("{rep}\n"), ok)
    } else {
        return Err(Error::Domain("choose --case ID or --all".into()));
    };
    emit(format, config, doc, &table)?;
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

// ---------------------------------------------------------------- hadamard

fn cmd_hadamard(a_path: &Path, b_path: &Path, op: Op, format: Format) -> Result<ExitCode> {
    let a = load_matrix(a_path)?;
    let b = load_matrix(b_path)?;
    let (name, c) = match op {
        Op::Product => ("product", hadamard_product(&a, &b)?),
        Op::Sum => ("sum", a.add(&b)?),
    };
    let cls = classify_brute(&c);
    let config = json!({
        "command": "hadamard",
        "a": a_path.display().to_string(),
        "b": b_path.display().to_string(),
        "op": name,
    });
    let table = format!("entrywise {name}:\n{}\n{}", c.to_text(), classification_table(&cls));
    let result = json!({
        "matrix": matrix_value(&c)?,
        "classification": serde_json::to_value(&cls)?,
    });
    emit(format, config, result, &table)?;
    Ok(ExitCode::SUCCESS)
}

// -------------------------------------------------------------- hankel-gen

fn cmd_hankel_gen(
    measure: Option<String>,
    factorial: bool,
    lambda2: Option<String>,
    n: usize,
    shift: usize,
    format: Format,
) -> Result<ExitCode> {
    let chosen = usize::from(measure.is_some()) + usize::from(factorial) + usize::from(lambda2.is_some());
    if chosen != 1 {
        return Err(Error::Domain(
            "choose exactly one of --measure, --factorial, --lambda2".into(),
        ));
    }
    if n == 0 {
        return Err(Error::Domain("size must be at least 1".into()));
    }
    let seq = if let Some(s) = &measure {
        MomentSequence::Measure(DiscreteMeasure::new(parse_atoms(s)?)?)
    } else if factorial {
        MomentSequence::Factorial
    } else {
        MomentSequence::LambdaSquare { lambda: lambda2.as_deref().unwrap().parse()? }
    };
    let m = shifted_hankel(&seq, n, shift)?;
    let cls = classify_hankel(&m)?;
    let config = json!({
        "command": "hankel-gen",
        "sequence": serde_json::to_value(&seq)?,
        "n": n,
        "shift": shift,
    });
    let table = format!("{}\n{}", m.to_text(), classification_table(&cls));
    let result = json!({
        "matrix": matrix_value(&m)?,
        "classification": serde_json::to_value(&cls)?,
    });
    emit(format, config, result, &table)?;
    Ok(ExitCode::SUCCESS)
}

/// "location:weight,location:weight,..." with rational parts, any order.
fn parse_atoms(s: &str) -> Result<Vec<(Rat, Rat)>> {
    let mut atoms: Vec<(Rat, Rat)> = Vec::new();
    for part in s.split(',') {
        let (x, w) = part
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("measure atom {part:?} is not location:weight")))?;
        atoms.push((x.trim().parse()?, w.trim().parse()?));
    }
    atoms.sort_by(|a, b| a.0.cmp_rat(&b.0));
    Ok(atoms)
}

// ----------------------------------------------------------------- exppoly

fn cmd_exppoly(
    input: &Path,
    minor: &str,
    lo: &str,
    hi: &str,
    grid: usize,
    format: Format,
) -> Result<ExitCode> {
    let a = load_matrix(input)?;
    let (rows, cols) = parse_minor_spec(minor)?;
    let f = minor_exppoly(&a, &rows, &cols)?;
    let config = json!({
        "command": "exppoly",
        "input": input.display().to_string(),
        "minor": minor,
        "lo": lo,
        "hi": hi,
        "grid": grid,
    });
    let mut table = format!("minor rows {rows} cols {cols} of A^t:\nf(t) = {f}\n");
    if f.is_zero() {
        table += "identically zero\n";
        let result = json!({ "exppoly": f.to_string(), "zero": true });
        emit(format, config, result, &table)?;
        return Ok(ExitCode::SUCCESS);
    }
    let lo: Rat = lo.parse()?;
    let hi: Rat = hi.parse()?;
    let (bound, parity) = laguerre_bound(&f);
    let report = count_roots_certified(&f, &lo, &hi, grid)?;
    let counted: usize = report.roots.iter().map(|r| r.multiplicity).sum();
    table += &format!("root bound: {bound} (parity {parity})\n");
    table += &format!("roots in [{lo}, {hi}]: {counted} counted with multiplicity\n");
    for root in &report.roots {
        match &root.exact {
            Some(v) => table += &format!("  t = {v} (multiplicity {})\n", root.multiplicity),
            None => {
                table +=
                    &format!("  t in [{}, {}] (multiplicity {})\n", root.lo, root.hi, root.multiplicity)
            }
        }
    }
    table += &format!("complete: {}\n", if report.complete { "yes" } else { "no" });
    let terms: Vec<serde_json::Value> = f
        .terms()
        .iter()
        .map(|(base, coeff)| json!({ "base": base.to_string(), "coeff": coeff.to_string() }))
        .collect();
    let result = json!({
        "exppoly": f.to_string(),
        "terms": terms,
        "root_bound": bound,
        "parity": parity,
        "roots": serde_json::to_value(&report)?,
    });
    emit(format, config, result, &table)?;
    Ok(ExitCode::SUCCESS)
}

/// "i,j,..;k,l,.." into two 1-based increasing index sets.
fn parse_minor_spec(spec: &str) -> Result<(IndexSet, IndexSet)> {
    let (rows, cols) = spec
        .split_once(';')
        .ok_or_else(|| Error::Parse(format!("minor spec {spec:?} is not ROWS;COLS")))?;
    Ok((parse_index_list(rows)?, parse_index_list(cols)?))
}

fn parse_index_list(s: &str) -> Result<IndexSet> {
    let mut v = Vec::new();
    for part in s.split(',') {
        let i: usize = part
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("index {part:?} is not a positive integer")))?;
        v.push(i);
    }
    IndexSet::new(v)
}

// ---------------------------------------------------------------- plumbing

fn load_matrix(path: &Path) -> Result<Matrix<Rat>> {
    let text = std::fs::read_to_string(path)?;
    if text.trim_start().starts_with('{') {
        Matrix::<Rat>::from_json(&text)
    } else {
        Matrix::<Rat>::parse_text(&text)
    }
}

fn matrix_value(m: &Matrix<Rat>) -> Result<serde_json::Value> {
    Ok(serde_json::from_str(&m.to_json())?)
}

fn classification_table(c: &Classification) -> String {
    let mut s = format!("tn_order: {}\ntp_order: {}\n", c.tn_order, c.tp_order);
    for (label, w) in [("tn", &c.tn_witness), ("tp", &c.tp_witness)] {
        if let Some(w) = w {
            s += &format!("{label} fails next at: rows {} cols {} = {}\n", w.rows, w.cols, w.value);
        }
    }
    s
}

fn emit(
    format: Format,
    config: serde_json::Value,
    result: serde_json::Value,
    table: &str,
) -> Result<()> {
    match format {
        Format::Json => {
            let doc = json!({ "config": config, "result": result });
            println!("{}", serde_json::to_string_pretty(&doc)?);
        }
        Format::Table => {
            println!("config: {config}");
            print!("{table}");
        }
    }
    Ok(())
}
