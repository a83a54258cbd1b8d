//! The `circloid` command line: expansions, statistics, verification suites
//! and crystal graph export.

use std::io::Read;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::colored::{Circloid, ColoredTabloid};
use crate::crystals::{self, CrystalGraph, CrystalVertex, TensorRowVertex};
use crate::enumerate::{self, check_cap, CAP_ENV};
use crate::error::{Error, Result};
use crate::fillings::Filling;
use crate::maps;
use crate::shapes::{Composition, Partition, SkewShape};
use crate::symfunc::{self, Basis, GrothMethod, HlMethod, KConvention, Q1Method, SymExpansion};
use crate::verify;
use crate::words::{self, Word};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "circloid", version, about = "Exact circloid and Macdonald polynomial combinatorics")]
pub struct Cli {
    /// Largest size any enumeration may reach.
    #[arg(long, global = true, env = CAP_ENV)]
    pub cap: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print a symmetric function expansion.
    Expand(ExpandArgs),
    /// Print statistics of a JSON object read from a file or stdin.
    Stats {
        /// JSON file; stdin when omitted or `-`.
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: StatsFormat,
    },
    /// Run identity verification suites.
    Verify {
        /// A suite name or `all`.
        suite: String,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Export a crystal graph.
    Crystal(CrystalArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExpandKind {
    Macdonald,
    MacdonaldQ1,
    HallLittlewood,
    KostkaFoulkes,
    DualGrothendieck,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Lines,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StatsFormat {
    Text,
    Json,
}

#[derive(clap::Args, Debug)]
pub struct ExpandArgs {
    #[arg(value_enum)]
    pub kind: ExpandKind,
    /// Comma separated parts, e.g. `2,1`.
    #[arg(long, value_parser = parse_partition)]
    pub mu: Option<Partition>,
    #[arg(long, value_parser = parse_partition)]
    pub lambda: Option<Partition>,
    /// Skew shape `outer/inner`, e.g. `3,2/1`.
    #[arg(long, value_parser = parse_skew)]
    pub shape: Option<SkewShape>,
    /// macdonald: hhl|circloid|charge|qsym; macdonald-q1: ssct|maj-block|standard|hhl-q1;
    /// hall-littlewood: super|zmaj|hhl-q0|kostka; dual-grothendieck: rpp|schur.
    #[arg(long)]
    pub method: Option<String>,
    /// Number of variables; defaults to the degree.
    #[arg(long)]
    pub vars: Option<usize>,
    #[arg(long, value_enum)]
    pub basis: Option<Basis>,
    #[arg(long, value_enum, default_value = "lines")]
    pub format: OutputFormat,
    #[arg(long, value_enum, default_value = "decompress")]
    pub convention: KConvention,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CrystalKind {
    Word,
    Circloid,
    Dagger,
    Tensor,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Dot,
    Json,
}

#[derive(clap::Args, Debug)]
pub struct CrystalArgs {
    #[arg(value_enum)]
    pub kind: CrystalKind,
    /// Alphabet size, sector count or row count.
    #[arg(long)]
    pub m: Option<usize>,
    /// Word length for the word crystal.
    #[arg(long)]
    pub n: Option<usize>,
    /// Letter multiplicities (circloid, dagger) or row lengths (tensor).
    #[arg(long, value_parser = parse_composition)]
    pub gamma: Option<Composition>,
    #[arg(long, value_enum, default_value = "dot")]
    pub format: GraphFormat,
}

fn parts(s: &str) -> std::result::Result<Vec<usize>, String> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|p| p.trim().parse::<usize>().map_err(|e| format!("bad part {p:?}: {e}"))).collect()
}

pub fn parse_partition(s: &str) -> std::result::Result<Partition, String> {
    Partition::new(parts(s)?).map_err(|e| e.to_string())
}

pub fn parse_composition(s: &str) -> std::result::Result<Composition, String> {
    Ok(Composition::new(parts(s)?))
}

/// `outer/inner`, or a bare partition for a straight shape.
pub fn parse_skew(s: &str) -> std::result::Result<SkewShape, String> {
    let (outer, inner) = s.split_once('/').unwrap_or((s, ""));
    SkewShape::new(parts(outer)?, parts(inner)?).map_err(|e| e.to_string())
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } => EXIT_CAP,
        _ => EXIT_USAGE,
    }
}

/// Parses `std::env::args` and runs the command; returns the exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let mut out = String::new();
    let code = match execute(&cli, &mut out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    };
    print!("{out}");
    code
}

/// Runs a parsed command, appending its standard output to `out`.
pub fn execute(cli: &Cli, out: &mut String) -> Result<i32> {
    if let Some(cap) = cli.cap {
        enumerate::set_max_n(cap);
    }
    match &cli.command {
        Command::Expand(a) => {
            out.push_str(&expand(a)?);
            Ok(EXIT_OK)
        }
        Command::Stats { file, format } => {
            let text = read_input(file.as_ref())?;
            let v: Value = serde_json::from_str(&text).map_err(|e| Error::Parse(format!("malformed JSON: {e}")))?;
            let report = object_stats(&v)?;
            match format {
                StatsFormat::Text => out.push_str(&stats_text(&report)),
                StatsFormat::Json => out.push_str(&format!("{}\n", serde_json::to_string_pretty(&report).expect("json"))),
            }
            Ok(EXIT_OK)
        }
        Command::Verify { suite, max_n, json } => {
            let reports = if suite == "all" { verify::run_all(*max_n)? } else { vec![verify::run_suite(suite, *max_n)?] };
            if *json {
                out.push_str(&format!("{}\n", serde_json::to_string_pretty(&reports).expect("json")));
            } else {
                for r in &reports {
                    out.push_str(&format!("{r}\n"));
                }
            }
            Ok(if reports.iter().all(|r| r.passed) { EXIT_OK } else { EXIT_VERIFY_FAILED })
        }
        Command::Crystal(a) => {
            out.push_str(&crystal(a)?);
            Ok(EXIT_OK)
        }
    }
}

fn read_input(file: Option<&PathBuf>) -> Result<String> {
    let mut s = String::new();
    match file {
        Some(p) if p.as_os_str() != "-" => {
            s = std::fs::read_to_string(p).map_err(|e| Error::Parse(format!("{}: {e}", p.display())))?;
        }
        _ => {
            std::io::stdin().read_to_string(&mut s).map_err(|e| Error::Parse(format!("stdin: {e}")))?;
        }
    }
    Ok(s)
}

fn require<T: Clone>(x: &Option<T>, flag: &str, kind: ExpandKind) -> Result<T> {
    x.clone().ok_or_else(|| Error::Parse(format!("{kind:?} needs --{flag}")))
}

fn method<T: ValueEnum>(name: &Option<String>, default: T) -> Result<T> {
    match name {
        None => Ok(default),
        Some(s) => T::from_str(s, true).map_err(|e| Error::Parse(format!("bad method {s:?}: {e}"))),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MacMethod {
    Hhl,
    Circloid,
    Charge,
    Qsym,
}

/// Builds the requested expansion and renders it.
pub fn expand(a: &ExpandArgs) -> Result<String> {
    if a.kind == ExpandKind::KostkaFoulkes {
        let lambda = require(&a.lambda, "lambda", a.kind)?;
        let mu = require(&a.mu, "mu", a.kind)?;
        check_cap(mu.degree())?;
        let k = symfunc::kostka_foulkes(&lambda, &mu)?;
        return Ok(match a.format {
            OutputFormat::Lines => format!("{k}\n"),
            OutputFormat::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(["q", "t", "coeff"]).expect("in-memory write");
                for (x, y, c) in k.terms() {
                    w.write_record([x.to_string(), y.to_string(), c.to_string()]).expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
            }
            OutputFormat::Json => {
                format!("{}\n", serde_json::to_string_pretty(&json!({ "lambda": lambda, "mu": mu, "poly": k })).expect("json"))
            }
        });
    }
    let e = match a.kind {
        ExpandKind::DualGrothendieck => {
            let shape = match (&a.shape, &a.mu) {
                (Some(s), _) => s.clone(),
                (None, Some(mu)) => mu.to_skew(),
                (None, None) => return Err(Error::Parse("dual-grothendieck needs --shape or --mu".into())),
            };
            check_cap(shape.size())?;
            let n = a.vars.unwrap_or(shape.size());
            check_cap(n)?;
            symfunc::dual_groth(&shape, n, method(&a.method, GrothMethod::Schur)?, a.convention)?
        }
        _ => {
            let mu = require(&a.mu, "mu", a.kind)?;
            check_cap(mu.degree())?;
            let n = a.vars.unwrap_or(mu.degree());
            check_cap(n)?;
            let mac_default = if a.basis == Some(Basis::Fundamental) { MacMethod::Qsym } else { MacMethod::Hhl };
            match a.kind {
                ExpandKind::Macdonald => match method(&a.method, mac_default)? {
                    MacMethod::Hhl => symfunc::macdonald_hhl(&mu, n)?,
                    MacMethod::Circloid => symfunc::macdonald_circloid(&mu, n)?,
                    MacMethod::Charge => symfunc::macdonald_circloid_charge(&mu, n)?,
                    MacMethod::Qsym => symfunc::macdonald_qsym(&mu, n)?,
                },
                ExpandKind::MacdonaldQ1 => symfunc::mac_q1(&mu, n, method(&a.method, Q1Method::HhlQ1)?)?,
                ExpandKind::HallLittlewood => symfunc::hl_specialization(&mu, n, method(&a.method, HlMethod::Kostka)?)?,
                _ => unreachable!("handled above"),
            }
        }
    };
    let e = match a.basis {
        Some(b) if b != e.basis => e.to_basis(b)?,
        None if e.basis == Basis::Monomial => e.to_basis(Basis::Schur)?,
        _ => e,
    };
    Ok(render(&e, a.format))
}

pub fn render(e: &SymExpansion, format: OutputFormat) -> String {
    match format {
        OutputFormat::Lines => e.to_lines(),
        OutputFormat::Csv => e.to_csv(),
        OutputFormat::Json => format!("{}\n", serde_json::to_string_pretty(e).expect("json")),
    }
}

/// Statistics of one object, in display order.
pub type StatsReport = Vec<(String, Value)>;

fn push<T: Into<Value>>(r: &mut StatsReport, key: &str, v: Result<T>) {
    if let Ok(v) = v {
        r.push((key.to_string(), v.into()));
    }
}

fn parse_field<T: serde::de::DeserializeOwned>(v: &Value, what: &str) -> Result<T> {
    serde_json::from_value(v.clone()).map_err(|e| Error::Parse(format!("bad {what}: {e}")))
}

/// Statistics for the first recognized key of `v`: `word`, `circloid`,
/// `filling`, `colored_tabloid`, `tensor` or `mu`.
pub fn object_stats(v: &Value) -> Result<StatsReport> {
    let mut r = StatsReport::new();
    if let Some(w) = v.get("word") {
        let w: Word = match w {
            Value::String(s) => Word::from_str(s)?,
            other => parse_field(other, "word")?,
        };
        r.push(("word".into(), w.to_string().into()));
        push(&mut r, "cocharge", words::cocharge_word(&w));
        push(&mut r, "charge", words::charge_word(&w));
        r.push(("maj".into(), w.maj().into()));
        r.push(("yamanouchi".into(), words::is_yamanouchi(&w).into()));
    } else if let Some(c) = v.get("circloid") {
        let c: Circloid = parse_field(c, "circloid")?;
        r.push(("circloid".into(), c.to_string().into()));
        push(&mut r, "cocharge", c.cocharge());
        push(&mut r, "betrayal", c.betrayal());
        push(&mut r, "charge", c.charge());
        r.push(("yamanouchi".into(), words::is_yamanouchi(&c.word()).into()));
        r.push(("reverse_colored".into(), c.is_reverse_colored().into()));
        r.push(("faithful".into(), c.is_faithful().into()));
    } else if let Some(f) = v.get("filling") {
        let f: Filling = parse_field(f, "filling")?;
        r.push(("filling".into(), serde_json::to_value(&f).expect("json")));
        push(&mut r, "inv", f.inv());
        push(&mut r, "maj", f.maj());
        let c = maps::f_inv(&f);
        push(&mut r, "cocharge", c.cocharge());
        push(&mut r, "betrayal", c.betrayal());
        r.push(("yamanouchi".into(), f.is_yamanouchi().into()));
        r.push(("super_yamanouchi".into(), f.is_super_yamanouchi().into()));
        push(&mut r, "jammed", f.is_jammed());
        r.push(("tabloid".into(), f.is_tabloid().into()));
        r.push(("column_strict".into(), f.is_column_strict().into()));
        let t = maps::companion(&f);
        r.push(("companion".into(), serde_json::to_value(&t).expect("json")));
        r.push(("companion_reverse_colored".into(), t.is_reverse_colored().into()));
        r.push(("companion_faithful".into(), t.is_faithful().into()));
    } else if let Some(t) = v.get("colored_tabloid") {
        let t: ColoredTabloid = parse_field(t, "colored tabloid")?;
        r.push(("colored_tabloid".into(), serde_json::to_value(&t).expect("json")));
        push(&mut r, "cocharge", t.cocharge());
        push(&mut r, "betrayal", t.betrayal());
        push(&mut r, "faithful_cocharge", t.faithful_recoloring().and_then(|x| x.cocharge()));
        r.push(("reverse_colored".into(), t.is_reverse_colored().into()));
        r.push(("faithful".into(), t.is_faithful().into()));
        r.push(("prismatic_columns".into(), t.columns_prismatic_increasing().into()));
        r.push(("letter_columns".into(), t.columns_letter_increasing().into()));
        r.push(("ssct".into(), t.is_ssct().into()));
    } else if let Some(b) = v.get("tensor") {
        let b: TensorRowVertex = parse_field(b, "tensor")?;
        r.push(("tensor".into(), b.to_string().into()));
        let z = b.zwords().map(|z| z.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(" "));
        push(&mut r, "zwords", z);
        push(&mut r, "zmaj", b.zmaj());
        push(&mut r, "companion_cocharge", b.companion_cocharge());
    } else if let Some(mu) = v.get("mu") {
        let mu: Partition = parse_field(mu, "partition")?;
        r.push(("mu".into(), mu.to_string().into()));
        r.push(("conjugate".into(), mu.conjugate().to_string().into()));
        r.push(("n".into(), mu.n_stat().into()));
    } else {
        return Err(Error::Parse(
            "expected one of the keys word, circloid, filling, colored_tabloid, tensor, mu".into(),
        ));
    }
    Ok(r)
}

/// `key=value` pairs on one line; structured values are written as JSON.
pub fn stats_text(r: &StatsReport) -> String {
    let fields: Vec<String> = r
        .iter()
        .map(|(k, v)| match v {
            Value::String(s) => format!("{k}={s}"),
            other => format!("{k}={other}"),
        })
        .collect();
    format!("{}\n", fields.join(" "))
}

fn graph_out<V: CrystalVertex>(g: CrystalGraph<V>, name: &str, f: GraphFormat) -> String {
    match f {
        GraphFormat::Dot => g.to_dot(name),
        GraphFormat::Json => format!("{}\n", serde_json::to_string_pretty(&g.to_json()).expect("json")),
    }
}

pub fn crystal(a: &CrystalArgs) -> Result<String> {
    let need = |x: Option<usize>, flag: &str| x.ok_or_else(|| Error::Parse(format!("crystal needs --{flag}")));
    let gamma = || a.gamma.clone().ok_or_else(|| Error::Parse("crystal needs --gamma".into()));
    match a.kind {
        CrystalKind::Word => {
            let (m, n) = (need(a.m, "m")?, need(a.n, "n")?);
            check_cap(m.max(n))?;
            Ok(graph_out(crystals::word_crystal(m, n)?, "word", a.format))
        }
        CrystalKind::Circloid | CrystalKind::Dagger => {
            let g = gamma()?;
            let m = a.m.unwrap_or(g.degree());
            check_cap(m.max(g.degree()))?;
            Ok(if a.kind == CrystalKind::Circloid {
                graph_out(crystals::circloid_crystal(&g, m)?, "circloid", a.format)
            } else {
                graph_out(crystals::dagger_crystal(&g, m)?, "dagger", a.format)
            })
        }
        CrystalKind::Tensor => {
            let g = gamma()?;
            let m = a.m.unwrap_or(g.degree());
            check_cap(m.max(g.degree()))?;
            Ok(graph_out(crystals::tensor_crystal(&g, m)?, "tensor", a.format))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String) {
        let cli = Cli::try_parse_from(std::iter::once("circloid").chain(args.iter().copied())).unwrap();
        let mut out = String::new();
        let code = match execute(&cli, &mut out) {
            Ok(c) => c,
            Err(e) => exit_code(&e),
        };
        (code, out)
    }

    #[test]
    fn parses_shapes() {
        assert_eq!(parse_skew("3,2/1").unwrap(), SkewShape::new(vec![3, 2], vec![1]).unwrap());
        assert_eq!(parse_skew("2,1").unwrap(), SkewShape::straight(vec![2, 1]));
        assert!(parse_partition("1,2").is_err());
        assert!(parse_partition("a").is_err());
    }

    #[test]
    fn kostka_foulkes_line() {
        let (code, out) = run_args(&["expand", "kostka-foulkes", "--lambda", "2,1", "--mu", "1,1,1"]);
        assert_eq!(code, 0);
        assert_eq!(out, "t + t^2\n");
    }

    #[test]
    fn macdonald_schur_lines() {
        let (code, out) = run_args(&["expand", "macdonald", "--mu", "2,1", "--method", "hhl", "--basis", "schur"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 3, "{out}");
    }

    #[test]
    fn stats_of_the_word() {
        let r = object_stats(&json!({ "word": "6714235" })).unwrap();
        assert!(stats_text(&r).contains("cocharge=6"));
    }

    #[test]
    fn cap_exit_code() {
        let (code, _) = run_args(&["expand", "macdonald", "--mu", "4,3"]);
        assert_eq!(code, EXIT_CAP);
    }
}
