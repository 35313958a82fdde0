//! Each command returns its stdout text and exit code; `main` only prints.

use std::fs;
use std::path::Path;

use hopfbrace::bracelab::{
    check_brace_triple, check_hopf_brace, check_post_hopf, check_s_hopf_brace, check_star_condition, Structure,
};
use hopfbrace::exhibits::{enumerate_skew_braces, hopf_brace_from_skew_brace, FiniteGroup, SkewBrace};
use hopfbrace::functors::{
    functor_f, functor_g, functor_p, functor_q, roundtrip_fg, roundtrip_gf, roundtrip_gqp, roundtrip_pgq,
};
use hopfbrace::hopfcore::{check_hopf, is_cocommutative};
use hopfbrace::{Error, Report};
use serde::Serialize;

use crate::dsl::{parse_expr, show_ty, Env};
use crate::error::CliError;
use crate::format::{parse_structure, render_structure};

/// Exit code when every clause passes.
pub const EXIT_PASS: i32 = 0;
/// Exit code for an axiom failure, a round-trip mismatch or a refused conversion.
pub const EXIT_FAIL: i32 = 1;
/// Exit code for parse, IO and type errors.
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn verdict(stdout: String, ok: bool) -> Outcome {
        Outcome { stdout, code: if ok { EXIT_PASS } else { EXIT_FAIL } }
    }
}

pub fn load(path: &Path) -> Result<Structure, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    parse_structure(&text)
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

fn render(r: &Report, as_json: bool) -> String {
    if as_json {
        json(r)
    } else {
        r.to_string()
    }
}

/// The report `check` prints for a structure.
pub fn check_report(s: &Structure) -> Report {
    match s {
        Structure::Hopf(h) => check_hopf(h),
        Structure::HopfBrace(b) => {
            let mut r = check_hopf_brace(b);
            r.property("s_hopf_brace", check_s_hopf_brace(b).all_passed());
            r
        }
        Structure::BraceTriple(t) => check_brace_triple(t),
        Structure::PostHopf(p) => {
            let mut r = check_post_hopf(p);
            if is_cocommutative(p.hopf()) {
                r.property("star", check_star_condition(p).all_passed());
            }
            r
        }
    }
}

pub fn check(path: &Path, as_json: bool) -> Result<Outcome, CliError> {
    let r = check_report(&load(path)?);
    Ok(Outcome::verdict(render(&r, as_json), r.all_passed()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Via {
    F,
    G,
    P,
    Q,
}

/// Functors refuse inputs that fail their checkers; that is a verdict, not
/// a usage error.
fn refused(e: Error) -> Result<Outcome, CliError> {
    match e {
        Error::InvalidInput(_) | Error::StarConditionFailed => {
            Ok(Outcome { stdout: format!("refused: {e}\n"), code: EXIT_FAIL })
        }
        other => Err(other.into()),
    }
}

fn wrong_kind(s: &Structure, want: &str, what: &str) -> CliError {
    CliError::Usage(format!("{what} needs a {want} file, got {}", s.kind()))
}

pub fn convert(path: &Path, via: Via, out: Option<&Path>) -> Result<Outcome, CliError> {
    let s = load(path)?;
    let converted = match (via, &s) {
        (Via::F, Structure::BraceTriple(t)) => functor_f(t).map(Structure::HopfBrace),
        (Via::G, Structure::HopfBrace(b)) => functor_g(b).map(Structure::BraceTriple),
        (Via::P, Structure::BraceTriple(t)) => functor_p(t).map(Structure::PostHopf),
        (Via::Q, Structure::PostHopf(p)) => functor_q(p).map(Structure::HopfBrace),
        (Via::F | Via::P, _) => return Err(wrong_kind(&s, "brace_triple", "this conversion")),
        (Via::G, _) => return Err(wrong_kind(&s, "hopf_brace", "G")),
        (Via::Q, _) => return Err(wrong_kind(&s, "post_hopf", "Q")),
    };
    let converted = match converted {
        Ok(c) => c,
        Err(e) => return refused(e),
    };
    let text = render_structure(&converted);
    match out {
        Some(p) => {
            write_file(p, &text)?;
            Ok(Outcome { stdout: format!("wrote {} ({})\n", p.display(), converted.kind()), code: EXIT_PASS })
        }
        None => Ok(Outcome { stdout: text, code: EXIT_PASS }),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pair {
    FG,
    QP,
}

pub fn roundtrip(path: &Path, pair: Pair, as_json: bool) -> Result<Outcome, CliError> {
    let s = load(path)?;
    let rt = match (pair, &s) {
        (Pair::FG, Structure::BraceTriple(t)) => roundtrip_gf(t),
        (Pair::FG, Structure::HopfBrace(b)) => roundtrip_fg(b),
        (Pair::QP, Structure::BraceTriple(t)) => roundtrip_gqp(t),
        (Pair::QP, Structure::PostHopf(p)) => roundtrip_pgq(p),
        (Pair::FG, _) => return Err(wrong_kind(&s, "brace_triple or hopf_brace", "--pair FG")),
        (Pair::QP, _) => return Err(wrong_kind(&s, "brace_triple or post_hopf", "--pair QP")),
    };
    let rt = match rt {
        Ok(r) => r,
        Err(e) => return refused(e),
    };
    let text = if as_json { json(&rt) } else { rt.fields.to_string() };
    Ok(Outcome::verdict(text, rt.identical()))
}

#[derive(Serialize)]
struct EvalJson {
    dom: String,
    cod: String,
    matrix: Vec<Vec<String>>,
}

pub fn eval(path: &Path, expr: &str, as_json: bool) -> Result<Outcome, CliError> {
    let s = load(path)?;
    let e = parse_expr(expr)?;
    let b = Env::new(&s).eval(&e)?;
    let matrix: Vec<Vec<String>> =
        b.mor.to_rows().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
    let (dom, cod) = (show_ty(&b.dom), show_ty(&b.cod));
    let stdout = if as_json {
        json(&EvalJson { dom, cod, matrix })
    } else {
        let mut out = format!("{e}: {dom} -> {cod}\n");
        for row in matrix {
            out.push_str(&format!("[{}]\n", row.join(", ")));
        }
        out
    };
    Ok(Outcome { stdout, code: EXIT_PASS })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Trivial,
    Opposite,
    Exhaustive,
}

impl Family {
    fn as_str(self) -> &'static str {
        match self {
            Family::Trivial => "trivial",
            Family::Opposite => "opposite",
            Family::Exhaustive => "exhaustive",
        }
    }
}

#[derive(Serialize)]
struct EnumeratedJson {
    group: String,
    family: &'static str,
    index: usize,
    dot: Vec<Vec<usize>>,
    circ: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    file: Option<String>,
}

pub fn enumerate(
    order: usize,
    family: Family,
    group: Option<&str>,
    out_dir: Option<&Path>,
    as_json: bool,
) -> Result<Outcome, CliError> {
    let groups: Vec<FiniteGroup> = FiniteGroup::builtin_of_order(order)
        .into_iter()
        .filter(|g| group.is_none_or(|n| g.name().eq_ignore_ascii_case(n)))
        .collect();
    if groups.is_empty() {
        return Err(CliError::Usage(match group {
            Some(n) => format!("no built-in group named {n} of order {order}"),
            None => format!("no built-in group of order {order}"),
        }));
    }
    if let Some(d) = out_dir {
        fs::create_dir_all(d).map_err(|e| CliError::Io(format!("{}: {e}", d.display())))?;
    }
    let mut text = String::new();
    let mut rows = Vec::new();
    for g in &groups {
        let braces: Vec<SkewBrace> = match family {
            Family::Trivial => vec![SkewBrace::trivial(g)],
            Family::Opposite => vec![SkewBrace::opposite(g)],
            Family::Exhaustive => enumerate_skew_braces(g)?,
        };
        text.push_str(&format!("{}: {} skew brace(s), {}\n", g.name(), braces.len(), family.as_str()));
        for (i, s) in braces.iter().enumerate() {
            let file = match out_dir {
                Some(d) => {
                    let p = d.join(format!("{}_{}_{i}.json", g.name(), family.as_str()));
                    let b = Structure::HopfBrace(hopf_brace_from_skew_brace(s));
                    write_file(&p, &render_structure(&b))?;
                    Some(p.display().to_string())
                }
                None => None,
            };
            text.push_str(&format!("  #{i} ⋆ = {:?}\n", s.circ().table()));
            if let Some(f) = &file {
                text.push_str(&format!("     wrote {f}\n"));
            }
            rows.push(EnumeratedJson {
                group: g.name().to_string(),
                family: family.as_str(),
                index: i,
                dot: g.table().to_vec(),
                circ: s.circ().table().to_vec(),
                file,
            });
        }
    }
    Ok(Outcome { stdout: if as_json { json(&rows) } else { text }, code: EXIT_PASS })
}
