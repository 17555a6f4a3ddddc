//! `qschur` command-line front end.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qschur::combinatorics::{Composition, Partition, WeakComposition};
use qschur::macdonald::{
    hall_littlewood_P, integral_form, j_fundamental, l_alpha, l_alpha_M, ns_hall_littlewood,
};
use qschur::pieri::{pieri_col, pieri_row, product_S};
use qschur::poly::QtPoly;
use qschur::qsym::{
    demazure_atom, expand_S_in_F, expand_S_in_M, express_in_S, transition_matrix, Basis, QSymExpr,
};
use qschur::tableaux::Basement;
use qschur::verify::{run_suite, SUITES};
use qschur::XPoly;

const DEFAULT_MAX_CELLS: usize = 8;
const DEFAULT_MAX_VARS: usize = 6;

#[derive(Parser)]
#[command(
    name = "qschur",
    version,
    about = "Exact computations with quasisymmetric Schur functions"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Lift the size guard on filling enumerations.
    #[arg(long, global = true)]
    no_guard: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TargetBasis {
    #[value(name = "M", alias = "m")]
    M,
    #[value(name = "F", alias = "f")]
    F,
}

impl From<TargetBasis> for Basis {
    fn from(b: TargetBasis) -> Basis {
        match b {
            TargetBasis::M => Basis::M,
            TargetBasis::F => Basis::F,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Expand S_a in the monomial or fundamental basis.
    Expand {
        #[arg(long, value_enum)]
        basis: TargetBasis,
        #[arg(value_parser = parse_comp)]
        comp: Composition,
    },
    /// Transition matrix from S to M or F in degree n.
    Matrix {
        #[arg(long, value_enum)]
        basis: TargetBasis,
        #[arg(long)]
        n: usize,
    },
    /// Rewrite an M or F expression (JSON or text, `-` for stdin) in the S basis.
    InS { file: PathBuf },
    /// S_(k) * S_a by the row Pieri rule.
    PieriRow {
        #[arg(value_parser = parse_comp)]
        comp: Composition,
        k: usize,
    },
    /// S_(1^k) * S_a by the column Pieri rule.
    PieriCol {
        #[arg(value_parser = parse_comp)]
        comp: Composition,
        k: usize,
    },
    /// S_a * S_b computed through polynomials.
    Product {
        #[arg(value_parser = parse_comp)]
        a: Composition,
        #[arg(value_parser = parse_comp)]
        b: Composition,
    },
    /// Demazure atom of a weak composition.
    #[command(visible_alias = "atoms")]
    Atom {
        #[arg(long, value_parser = parse_weak)]
        shape: WeakComposition,
        #[arg(long)]
        vars: Option<usize>,
    },
    /// Integral form E_g for a basement.
    EPoly {
        #[arg(long, value_parser = parse_weak)]
        shape: WeakComposition,
        #[arg(long)]
        vars: Option<usize>,
        #[arg(long, value_parser = parse_basement, default_value = "id")]
        basement: Basement,
        #[arg(long, value_parser = parse_spec)]
        spec: Option<Spec>,
    },
    /// Nonsymmetric Hall-Littlewood polynomial.
    NsHl {
        #[arg(long, value_parser = parse_weak)]
        shape: WeakComposition,
        #[arg(long)]
        vars: Option<usize>,
        #[arg(long, value_parser = parse_spec)]
        spec: Option<Spec>,
    },
    /// Quasisymmetric Hall-Littlewood L_a; in the M basis unless --vars is given.
    LAlpha {
        #[arg(long, value_parser = parse_comp)]
        shape: Composition,
        #[arg(long)]
        vars: Option<usize>,
        #[arg(long, value_parser = parse_spec)]
        spec: Option<Spec>,
    },
    /// Hall-Littlewood P_l.
    HlP {
        #[arg(long, value_parser = parse_partition)]
        shape: Partition,
        #[arg(long)]
        vars: Option<usize>,
        #[arg(long, value_parser = parse_spec)]
        spec: Option<Spec>,
    },
    /// Integral form J_l in the fundamental basis.
    JFund {
        #[arg(long, value_parser = parse_partition)]
        shape: Partition,
        #[arg(long)]
        vars: Option<usize>,
        #[arg(long, value_parser = parse_spec)]
        spec: Option<Spec>,
    },
    /// Run a property suite.
    Verify {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(SUITES.iter().copied().chain(["all"])))]
        suite: String,
        #[arg(long, default_value_t = 4)]
        max_size: usize,
    },
}

#[derive(Clone, Copy, Debug, Default)]
struct Spec {
    q: Option<i64>,
    t: Option<i64>,
}

fn parse_comp(s: &str) -> Result<Composition, String> {
    s.parse().map_err(|e: qschur::Error| e.to_string())
}

fn parse_weak(s: &str) -> Result<WeakComposition, String> {
    s.parse().map_err(|e: qschur::Error| e.to_string())
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: qschur::Error| e.to_string())
}

fn parse_basement(s: &str) -> Result<Basement, String> {
    s.parse().map_err(|e: qschur::Error| e.to_string())
}

fn parse_spec(s: &str) -> Result<Spec, String> {
    let mut spec = Spec::default();
    for item in s.split(',').map(str::trim).filter(|x| !x.is_empty()) {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| format!("expected name=value, got {item:?}"))?;
        let v: i64 = v
            .trim()
            .parse()
            .map_err(|_| format!("bad value in {item:?}"))?;
        match k.trim() {
            "q" => spec.q = Some(v),
            "t" => spec.t = Some(v),
            other => return Err(format!("unknown parameter {other:?}")),
        }
    }
    Ok(spec)
}

enum Failure {
    Domain(String),
    Usage(String),
}

impl From<qschur::Error> for Failure {
    fn from(e: qschur::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

struct Output {
    text: String,
    json: Value,
    ok: bool,
}

impl Output {
    fn expr(e: &QSymExpr) -> Self {
        Output {
            text: e.to_string(),
            json: serde_json::to_value(e).expect("serializable"),
            ok: true,
        }
    }

    fn poly(p: &XPoly) -> Self {
        Output {
            text: p.to_string(),
            json: serde_json::to_value(p).expect("serializable"),
            ok: true,
        }
    }
}

struct Guard {
    enabled: bool,
    max_cells: usize,
}

impl Guard {
    fn from_env(enabled: bool) -> Result<Self, Failure> {
        let max_cells = match std::env::var("QSCHUR_MAX_CELLS") {
            Ok(v) => v.trim().parse().map_err(|_| {
                Failure::Usage(format!("QSCHUR_MAX_CELLS must be an integer, got {v:?}"))
            })?,
            Err(_) => DEFAULT_MAX_CELLS,
        };
        Ok(Guard { enabled, max_cells })
    }

    fn check(&self, cells: usize, vars: usize) -> Result<(), Failure> {
        if !self.enabled {
            return Ok(());
        }
        if cells > self.max_cells {
            return Err(Failure::Domain(format!(
                "{cells} cells exceed the guard of {}; pass --no-guard or set QSCHUR_MAX_CELLS",
                self.max_cells
            )));
        }
        if vars > DEFAULT_MAX_VARS && cells > 0 {
            return Err(Failure::Domain(format!(
                "{vars} variables exceed the guard of {DEFAULT_MAX_VARS}; pass --no-guard"
            )));
        }
        Ok(())
    }
}

fn specialize_poly(p: XPoly, spec: Option<Spec>) -> XPoly {
    match spec {
        Some(s) => p.specialize(s.q, s.t),
        None => p,
    }
}

fn specialize_expr(e: QSymExpr, spec: Option<Spec>) -> QSymExpr {
    match spec {
        Some(s) => e.specialize(s.q, s.t),
        None => e,
    }
}

/// Reads `M(1,2) + 2F(3) - M(1,1,1)` style sums with integer coefficients.
fn parse_expr_text(s: &str) -> Result<QSymExpr, String> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() || compact == "0" {
        return Err("empty expression has no basis; use JSON".into());
    }
    let mut basis: Option<Basis> = None;
    let mut terms = Vec::new();
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let mut sign = 1i64;
        if let Some(r) = rest.strip_prefix('+') {
            rest = r;
        } else if let Some(r) = rest.strip_prefix('-') {
            sign = -1;
            rest = r;
        } else if !terms.is_empty() {
            return Err(format!("expected + or - before {rest:?}"));
        }
        let digits = rest.chars().take_while(char::is_ascii_digit).count();
        let coeff: i64 = if digits == 0 {
            1
        } else {
            rest[..digits]
                .parse()
                .map_err(|_| "coefficient too large".to_string())?
        };
        rest = rest[digits..].trim_start_matches('*');
        let letter = rest.chars().next().ok_or("missing basis letter")?;
        let b: Basis = letter
            .to_string()
            .parse()
            .map_err(|e: qschur::Error| e.to_string())?;
        if *basis.get_or_insert(b) != b {
            return Err("terms use different bases".into());
        }
        rest = &rest[letter.len_utf8()..];
        let close = rest.find(')').ok_or("unclosed composition")?;
        let comp: Composition = rest[..=close]
            .parse()
            .map_err(|e: qschur::Error| e.to_string())?;
        rest = &rest[close + 1..];
        terms.push((comp, QtPoly::from_int(sign * coeff)));
    }
    Ok(QSymExpr::from_terms(
        basis.expect("at least one term"),
        terms,
    ))
}

fn read_expr(path: &PathBuf) -> Result<QSymExpr, Failure> {
    let mut content = String::new();
    if path.as_os_str() == "-" {
        io::stdin()
            .read_to_string(&mut content)
            .map_err(|e| Failure::Domain(format!("stdin: {e}")))?;
    } else {
        content = fs::read_to_string(path)
            .map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))?;
    }
    if content.trim_start().starts_with('{') {
        serde_json::from_str(&content)
            .map_err(|e| Failure::Usage(format!("bad expression JSON: {e}")))
    } else {
        parse_expr_text(&content).map_err(Failure::Usage)
    }
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let guard = Guard::from_env(!cli.no_guard)?;
    let out = match &cli.command {
        Command::Expand { basis, comp } => Output::expr(&match basis {
            TargetBasis::M => expand_S_in_M(comp),
            TargetBasis::F => expand_S_in_F(comp),
        }),
        Command::Matrix { basis, n } => {
            if guard.enabled && *n > guard.max_cells {
                return Err(Failure::Domain(format!(
                    "degree {n} exceeds the guard of {}; pass --no-guard",
                    guard.max_cells
                )));
            }
            let m = transition_matrix((*basis).into(), *n)?;
            Output {
                text: m.to_string(),
                json: serde_json::to_value(&m).expect("serializable"),
                ok: true,
            }
        }
        Command::InS { file } => {
            let e = read_expr(file)?;
            if e.basis() == Basis::S {
                Output::expr(&e)
            } else {
                Output::expr(&express_in_S(&e)?)
            }
        }
        Command::PieriRow { comp, k } => Output::expr(&pieri_row(comp, *k)),
        Command::PieriCol { comp, k } => Output::expr(&pieri_col(comp, *k)),
        Command::Product { a, b } => {
            guard.check(a.size() + b.size(), 0)?;
            Output::expr(&product_S(a, b)?)
        }
        Command::Atom { shape, vars } => {
            let n = vars.unwrap_or(shape.len());
            guard.check(shape.size(), n)?;
            Output::poly(&demazure_atom(shape, n)?)
        }
        Command::EPoly {
            shape,
            vars,
            basement,
            spec,
        } => {
            let n = vars.unwrap_or(shape.len());
            guard.check(shape.size(), n)?;
            Output::poly(&specialize_poly(integral_form(shape, *basement, n)?, *spec))
        }
        Command::NsHl { shape, vars, spec } => {
            let n = vars.unwrap_or(shape.len());
            guard.check(shape.size(), n)?;
            Output::poly(&specialize_poly(ns_hall_littlewood(shape, n)?, *spec))
        }
        Command::LAlpha { shape, vars, spec } => match vars {
            Some(n) => {
                guard.check(shape.size(), *n)?;
                Output::poly(&specialize_poly(l_alpha(shape, *n)?, *spec))
            }
            None => {
                guard.check(shape.size(), shape.size())?;
                Output::expr(&specialize_expr(l_alpha_M(shape, shape.size())?, *spec))
            }
        },
        Command::HlP { shape, vars, spec } => {
            let n = vars.unwrap_or(shape.len());
            guard.check(shape.size(), n)?;
            Output::poly(&specialize_poly(hall_littlewood_P(shape, n)?, *spec))
        }
        Command::JFund { shape, vars, spec } => {
            let n = vars.unwrap_or(shape.size().max(1));
            guard.check(shape.size(), n)?;
            Output::expr(&specialize_expr(j_fundamental(shape, n)?, *spec))
        }
        Command::Verify { suite, max_size } => {
            let names: Vec<&str> = if suite == "all" {
                SUITES.to_vec()
            } else {
                vec![suite.as_str()]
            };
            let mut reports = Vec::new();
            for name in names {
                reports.push(run_suite(name, *max_size)?);
            }
            let ok = reports.iter().all(|r| r.passed());
            let mut text = String::new();
            for r in &reports {
                for p in &r.properties {
                    let mark = if p.passed { "ok  " } else { "FAIL" };
                    text.push_str(&format!(
                        "{mark} {}/{} ({} cases)\n",
                        r.suite, p.name, p.checked
                    ));
                    if let Some(c) = &p.counterexample {
                        text.push_str(&format!(
                            "     counterexample: {}\n",
                            serde_json::to_string(c).expect("serializable")
                        ));
                    }
                }
            }
            text.push_str(if ok {
                "all properties passed"
            } else {
                "some properties failed"
            });
            let json = if reports.len() == 1 {
                serde_json::to_value(&reports[0]).expect("serializable")
            } else {
                json!({ "passed": ok, "suites": reports })
            };
            Output { text, json, ok }
        }
    };
    Ok(out)
}

fn emit(cli: &Cli, out: &Output) -> io::Result<()> {
    let body = match cli.format {
        Format::Text => out.text.clone(),
        Format::Json => serde_json::to_string_pretty(&out.json).expect("serializable"),
    };
    match &cli.out {
        Some(path) => fs::write(path, format!("{body}\n")),
        None => writeln!(io::stdout().lock(), "{body}"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if let Err(e) = emit(&cli, &out) {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}
