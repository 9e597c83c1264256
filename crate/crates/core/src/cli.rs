//! Command-line front end. `run` returns the process exit status:
//! 0 on success, 1 when a verification fails, 2 on usage errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::clifford::{check_fock_vector, fock_weight, parse_clifford, parse_fock_vector};
use crate::diagram::{enumerate_diagrams, enumerate_up_to_boxes, FockIndex, Sign, StrictPartition};
use crate::error::{Error, Result};
use crate::oracle::{
    clifford_matrix, embedding_rank, fock_basis, operator_matrix, run_suite, run_truncated, spin_basis,
    ExactMatrix, Report, Status, Suite,
};
use crate::quiver::RankContext;
use crate::sparse::{format_rational, SparseVec};
use crate::spinrep::{apply_word, check_spin_vector, parse_spin_vector, parse_word, weight_eps, BasisState, EpsWeight};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "halfspin", version, about = "Exact half-spin representations of so(2n)")]
struct Cli {
    /// Machine-readable JSON output (same as `--format json`).
    #[arg(long, global = true)]
    json: bool,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args, Debug, Clone)]
struct Mode {
    /// Rank n (at least 2).
    #[arg(long)]
    n: Option<usize>,

    /// Unbounded mode: diagrams of any width, capped by `--max-boxes`.
    #[arg(long)]
    dinfty: bool,

    /// Box cap in unbounded mode.
    #[arg(long)]
    max_boxes: Option<u32>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List every basis state with its dimension vector, u, weight and Fock index.
    Enumerate(#[command(flatten)] Mode),
    /// Apply an operator word (rightmost first) to a spin vector.
    Act {
        #[command(flatten)]
        mode: Mode,
        /// Word such as "F_2 F_4" or "b_3*a_1*kappa".
        word: String,
        /// Vector such as "(plus,-)" or "2 * (plus,3,1) - (minus,2)".
        vector: String,
        /// Also write the matrix of the word on the spin basis.
        #[arg(long)]
        export_matrix: Option<PathBuf>,
    },
    /// Weight data of a spin state, or of a Fock basis vector with `--fock`.
    Weight {
        #[command(flatten)]
        mode: Mode,
        /// State such as "(plus,3,1)", or an index set such as "{1,3}" with `--fock`.
        state: String,
        #[arg(long)]
        fock: bool,
    },
    /// Normal-order a Clifford expression, optionally applying it to a Fock vector.
    Clifford {
        #[arg(long)]
        n: usize,
        expression: String,
        #[arg(long)]
        apply: Option<String>,
    },
    /// Run verification suites.
    Verify {
        /// A rank or an inclusive range such as "2..6".
        #[arg(long)]
        n: Option<String>,
        #[arg(long)]
        dinfty: bool,
        #[arg(long)]
        max_boxes: Option<u32>,
        /// Run every suite (the default when no `--suite` is given).
        #[arg(long)]
        all: bool,
        /// Suite name; repeat or separate with commas.
        #[arg(long, value_delimiter = ',')]
        suite: Vec<String>,
    },
    /// Write the sparse matrix of an operator.
    ExportMatrix {
        #[arg(long)]
        n: usize,
        /// Spin operator ("E_2", "a_1", "kappa", a word), or a Clifford
        /// expression with `--fock`.
        operator: String,
        #[arg(long)]
        fock: bool,
        /// Output path; stdout when omitted.
        #[arg(long)]
        export_matrix: Option<PathBuf>,
    },
}

/// What a command produced: text for humans, JSON for machines.
struct Output {
    text: String,
    json: Value,
    csv: Option<String>,
    exit: i32,
}

impl Output {
    fn new(text: String, json: Value) -> Self {
        Self {
            text,
            json,
            csv: None,
            exit: EXIT_OK,
        }
    }
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mut stdout = std::io::stdout().lock();
    let mut stderr = std::io::stderr().lock();
    run_with(args, &mut stdout, &mut stderr)
}

/// Like [`run`], writing to the given streams.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    let format = if cli.json { Format::Json } else { cli.format };
    match execute(cli.command, format) {
        Ok(o) => {
            let written = match format {
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&o.json).expect("json value")),
                Format::Csv => match &o.csv {
                    Some(csv) => write!(out, "{csv}"),
                    None => write!(out, "{}", o.text),
                },
                Format::Text => write!(out, "{}", o.text),
            };
            if written.is_err() {
                return EXIT_VERIFY_FAILED;
            }
            o.exit
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::InvariantViolation(_) => EXIT_VERIFY_FAILED,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn execute(command: Command, format: Format) -> Result<Output> {
    match command {
        Command::Enumerate(mode) => enumerate(&mode, format),
        Command::Act {
            mode,
            word,
            vector,
            export_matrix,
        } => act(&mode, &word, &vector, export_matrix),
        Command::Weight { mode, state, fock } => weight(&mode, &state, fock),
        Command::Clifford { n, expression, apply } => clifford(n, &expression, apply.as_deref()),
        Command::Verify {
            n,
            dinfty,
            max_boxes,
            all,
            suite,
        } => verify(n.as_deref(), dinfty, max_boxes, all, &suite),
        Command::ExportMatrix {
            n,
            operator,
            fock,
            export_matrix,
        } => export(n, &operator, fock, export_matrix),
    }
}

/// Rank to compute in, and the box cap in unbounded mode.
fn resolve(mode: &Mode) -> Result<(RankContext, Option<u32>)> {
    if mode.dinfty {
        let cap = mode
            .max_boxes
            .ok_or_else(|| Error::parse("--dinfty needs --max-boxes"))?;
        let n = mode.n.unwrap_or(0).max(embedding_rank(cap));
        if n > crate::MAX_RANK {
            return Err(Error::InvalidRank(n));
        }
        Ok((RankContext::new(n)?, Some(cap)))
    } else {
        if mode.max_boxes.is_some() {
            return Err(Error::parse("--max-boxes needs --dinfty"));
        }
        let n = mode.n.ok_or_else(|| Error::parse("--n is required"))?;
        Ok((RankContext::new(n)?, None))
    }
}

fn diagrams_for(ctx: &RankContext, cap: Option<u32>) -> Result<Vec<StrictPartition>> {
    match cap {
        Some(b) => Ok(enumerate_up_to_boxes(b)),
        None => enumerate_diagrams(ctx.rank()),
    }
}

fn weight_json(w: &EpsWeight) -> Value {
    Value::Array(w.coeffs().iter().map(|x| Value::String(format_rational(x))).collect())
}

fn fock_json(i: FockIndex) -> Value {
    json!(i.iter().collect::<Vec<_>>())
}

fn state_json(s: &BasisState, ctx: &RankContext) -> Value {
    json!({
        "sign": s.sign.to_string(),
        "diagram": s.diagram.rows(),
        "dim_vector": s.dim_vector(ctx).entries(),
        "u": s.weight_u(ctx).entries(),
        "weight": weight_json(&weight_eps(s, ctx)),
        "fock_index": fock_json(s.diagram.fock_index(s.sign, ctx.rank())),
    })
}

fn terms_json<K: Ord + Clone + std::fmt::Display>(v: &SparseVec<K>) -> Value {
    Value::Array(
        v.iter()
            .map(|(k, c)| json!({"basis": k.to_string(), "coeff": format_rational(c)}))
            .collect(),
    )
}

fn enumerate(mode: &Mode, format: Format) -> Result<Output> {
    let (ctx, cap) = resolve(mode)?;
    let diagrams = diagrams_for(&ctx, cap)?;
    let states: Vec<BasisState> = Sign::BOTH
        .iter()
        .flat_map(|&s| diagrams.iter().map(move |y| BasisState::new(s, y.clone())))
        .collect();

    let rows: Vec<[String; 6]> = states
        .iter()
        .map(|s| {
            [
                s.sign.to_string(),
                s.diagram.to_string(),
                s.dim_vector(&ctx).to_string(),
                s.weight_u(&ctx).to_string(),
                weight_eps(s, &ctx).to_string(),
                s.diagram.fock_index(s.sign, ctx.rank()).to_string(),
            ]
        })
        .collect();
    let header = ["sign", "diagram", "dim_vector", "u", "weight", "fock_index"];

    let mut widths = header.map(str::len);
    for r in &rows {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &[&str]| {
        let padded: Vec<String> = cells
            .iter()
            .zip(widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut text = line(&header);
    for r in &rows {
        text += &line(&r.each_ref().map(String::as_str));
    }

    let csv = if format == Format::Csv {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(header).map_err(|e| Error::parse(e.to_string()))?;
        for r in &rows {
            w.write_record(r).map_err(|e| Error::parse(e.to_string()))?;
        }
        Some(String::from_utf8(w.into_inner().map_err(|e| Error::parse(e.to_string()))?).expect("utf-8"))
    } else {
        None
    };

    let json = json!({
        "command": "enumerate",
        "rank": ctx.rank(),
        "max_boxes": cap,
        "count": states.len(),
        "states": states.iter().map(|s| state_json(s, &ctx)).collect::<Vec<_>>(),
    });
    let mut o = Output::new(text, json);
    o.csv = csv;
    Ok(o)
}

fn act(mode: &Mode, word: &str, vector: &str, export_path: Option<PathBuf>) -> Result<Output> {
    let (ctx, _) = resolve(mode)?;
    let ops = parse_word(word)?;
    for op in &ops {
        op.check_rank(&ctx)?;
    }
    let v = parse_spin_vector(vector)?;
    check_spin_vector(&v, &ctx)?;
    let result = apply_word(&ops, &v, &ctx)?;

    if let Some(path) = export_path {
        let basis = spin_basis(&ctx);
        let mut m = ExactMatrix::identity(basis.len());
        for op in &ops {
            m = m.mul(&operator_matrix(*op, &basis, &ctx)?)?;
        }
        write_file(&path, &m.to_triplet_text(word, &basis.labels()))?;
    }

    let json = json!({
        "command": "act",
        "rank": ctx.rank(),
        "word": ops.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "input": v.to_string(),
        "result": result.to_string(),
        "terms": terms_json(&result),
    });
    Ok(Output::new(format!("{result}\n"), json))
}

fn weight(mode: &Mode, state: &str, fock: bool) -> Result<Output> {
    let (ctx, _) = resolve(mode)?;
    if fock {
        let i: FockIndex = state.parse()?;
        i.check_rank(ctx.rank())?;
        let w = fock_weight(i, &ctx);
        let json = json!({
            "command": "weight",
            "rank": ctx.rank(),
            "fock_index": fock_json(i),
            "weight": weight_json(&w),
        });
        return Ok(Output::new(format!("weight      {w}\n"), json));
    }
    let s: BasisState = state.parse()?;
    s.check_rank(&ctx)?;
    let w = weight_eps(&s, &ctx);
    let text = format!(
        "weight      {w}\nu           {}\ndim_vector  {}\nfock_index  {}\n",
        s.weight_u(&ctx),
        s.dim_vector(&ctx),
        s.diagram.fock_index(s.sign, ctx.rank())
    );
    let mut json = state_json(&s, &ctx);
    json["command"] = json!("weight");
    json["rank"] = json!(ctx.rank());
    Ok(Output::new(text, json))
}

fn clifford(n: usize, expression: &str, apply: Option<&str>) -> Result<Output> {
    let ctx = RankContext::new(n)?;
    let x = parse_clifford(expression)?;
    x.check_rank(&ctx)?;
    match apply {
        None => {
            let json = json!({
                "command": "clifford",
                "rank": n,
                "element": x.to_string(),
                "terms": x
                    .terms()
                    .map(|(m, c)| json!({"basis": m.to_string(), "coeff": format_rational(c)}))
                    .collect::<Vec<_>>(),
            });
            Ok(Output::new(format!("{x}\n"), json))
        }
        Some(v) => {
            let v = parse_fock_vector(v)?;
            check_fock_vector(&v, &ctx)?;
            let result = x.act(&v, &ctx)?;
            let json = json!({
                "command": "clifford",
                "rank": n,
                "element": x.to_string(),
                "input": v.to_string(),
                "result": result.to_string(),
                "terms": terms_json(&result),
            });
            Ok(Output::new(format!("{result}\n"), json))
        }
    }
}

/// Parses "4" or an inclusive range "2..6".
pub fn parse_rank_range(text: &str) -> Result<Vec<usize>> {
    let num = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|_| Error::parse(format!("bad rank `{s}`")))
    };
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => {
            let n = num(text)?;
            (n, n)
        }
    };
    if lo > hi {
        return Err(Error::parse(format!("empty rank range `{text}`")));
    }
    for n in [lo, hi] {
        crate::diagram::check_rank(n)?;
    }
    Ok((lo..=hi).collect())
}

fn verify(n: Option<&str>, dinfty: bool, max_boxes: Option<u32>, all: bool, names: &[String]) -> Result<Output> {
    let suites: Vec<Suite> = if all || names.is_empty() {
        Suite::ALL.to_vec()
    } else {
        names.iter().map(|s| s.parse()).collect::<Result<_>>()?
    };

    // (suite, rank, cap) jobs plus the ones skipped up front.
    let mut jobs = Vec::new();
    let mut skipped = Vec::new();
    if dinfty {
        let cap = max_boxes.ok_or_else(|| Error::parse("--dinfty needs --max-boxes"))?;
        let floor = embedding_rank(cap);
        let n = match n {
            Some(t) => parse_rank_range(t)?.into_iter().max().unwrap_or(floor).max(floor),
            None => floor,
        };
        if n > crate::MAX_RANK {
            return Err(Error::InvalidRank(n));
        }
        for &s in &suites {
            if s.supports_truncation() {
                jobs.push((s, n, Some(cap)));
            } else {
                skipped.push((s, n, "not available in unbounded mode"));
            }
        }
    } else {
        if max_boxes.is_some() {
            return Err(Error::parse("--max-boxes needs --dinfty"));
        }
        let ranks = parse_rank_range(n.ok_or_else(|| Error::parse("--n is required"))?)?;
        for &s in &suites {
            for &r in &ranks {
                if s.supports_rank(r) {
                    jobs.push((s, r, None));
                } else {
                    skipped.push((s, r, "faithfulness runs for n <= 7"));
                }
            }
        }
    }

    let mut reports: Vec<Report> = jobs
        .par_iter()
        .map(|&(s, r, cap)| match cap {
            Some(b) => run_truncated(s, b, r),
            None => run_suite(s, r),
        })
        .collect::<Result<_>>()?;
    reports.sort_by(|a, b| (a.check.as_str(), a.rank).cmp(&(b.check.as_str(), b.rank)));
    skipped.sort_by(|a, b| (a.0.name(), a.1).cmp(&(b.0.name(), b.1)));

    let passed = reports.iter().all(Report::passed);
    let mut text = String::new();
    for r in &reports {
        text += &r.summary_line();
        text.push('\n');
        for e in r.entries.iter().filter(|e| e.status != Status::Pass) {
            text += &format!("    {}: {}", e.status, e.identity);
            if let Some(w) = &e.witness {
                text += &format!(" at {}: {} vs {}", w.state, w.lhs, w.rhs);
            }
            if let Some(note) = &e.note {
                text += &format!(" ({note})");
            }
            text.push('\n');
        }
    }
    for (s, r, why) in &skipped {
        text += &format!("{:<14} n={:<14} skipped ({why})\n", s.name(), r);
    }
    text += if passed { "all suites passed\n" } else { "verification FAILED\n" };

    let json = json!({
        "command": "verify",
        "passed": passed,
        "reports": reports,
        "skipped": skipped
            .iter()
            .map(|(s, r, why)| json!({"check": s.name(), "rank": r, "reason": why}))
            .collect::<Vec<_>>(),
    });
    let mut o = Output::new(text, json);
    o.exit = if passed { EXIT_OK } else { EXIT_VERIFY_FAILED };
    Ok(o)
}

fn export(n: usize, operator: &str, fock: bool, path: Option<PathBuf>) -> Result<Output> {
    let ctx = RankContext::new(n)?;
    let (matrix, labels) = if fock {
        let x = parse_clifford(operator)?;
        x.check_rank(&ctx)?;
        let basis = fock_basis(&ctx);
        (clifford_matrix(&x, &basis, &ctx)?, basis.labels())
    } else {
        let ops = parse_word(operator)?;
        let basis = spin_basis(&ctx);
        let mut m = ExactMatrix::identity(basis.len());
        for op in &ops {
            m = m.mul(&operator_matrix(*op, &basis, &ctx)?)?;
        }
        (m, basis.labels())
    };
    let text = matrix.to_triplet_text(operator, &labels);
    let json = json!({
        "command": "export-matrix",
        "rank": n,
        "operator": operator,
        "basis": labels,
        "shape": [matrix.num_rows(), matrix.num_cols()],
        "entries": matrix
            .triplets()
            .into_iter()
            .map(|(r, c, x)| json!([r, c, format_rational(&x)]))
            .collect::<Vec<_>>(),
    });
    match path {
        Some(p) => {
            write_file(&p, &text)?;
            let msg = format!("wrote {} nonzero entries to {}\n", matrix.nnz(), p.display());
            Ok(Output::new(msg, json))
        }
        None => Ok(Output::new(text, json)),
    }
}

fn write_file(path: &PathBuf, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::parse(format!("cannot write {}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_with(std::iter::once("halfspin").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn rank_ranges() {
        assert_eq!(parse_rank_range("2..4").unwrap(), vec![2, 3, 4]);
        assert_eq!(parse_rank_range("2..=3").unwrap(), vec![2, 3]);
        assert_eq!(parse_rank_range("5").unwrap(), vec![5]);
        assert!(parse_rank_range("1").is_err());
        assert!(parse_rank_range("4..2").is_err());
        assert!(parse_rank_range("x").is_err());
    }

    #[test]
    fn command_examples() {
        assert_eq!(call(&["act", "--n", "4", "F_2 F_4", "(plus,-)"]).1, "(plus,2)\n");
        assert_eq!(call(&["act", "--n", "4", "E_1", "(plus,-)"]).1, "0\n");
        assert_eq!(call(&["clifford", "--n", "2", "a1*b1 + b1*a1"]).1, "1\n");
        assert_eq!(call(&["clifford", "--n", "4", "a1*a1"]).1, "0\n");
        assert_eq!(call(&["clifford", "--n", "4", "--apply", "{1,3}", "b2*a1"]).1, "{2,3}\n");
        assert_eq!(call(&["enumerate", "--n", "4"]).1.lines().count(), 17);
        assert_eq!(call(&["verify", "--n", "1"]).0, EXIT_USAGE);
        assert_eq!(call(&["act", "--n", "4", "E_9", "(plus,-)"]).0, EXIT_USAGE);
        assert_eq!(call(&["bogus"]).0, EXIT_USAGE);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }
}
