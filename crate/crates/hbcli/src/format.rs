//! The structure file: a JSON document with a fixed key order and one matrix
//! row per line, so saved files diff cleanly and load∘save is byte-exact.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use hopfbrace::bracelab::{BraceTriple, HopfBrace, PostHopfAlgebra, Structure};
use hopfbrace::hopfcore::HopfAlgebra;
use hopfbrace::tensorcat::{BraidingKind, Mor, Obj};
use hopfbrace::Scalar;
use serde::Deserialize;
use serde_json::Value;

use crate::error::CliError;

pub const FORMAT_VERSION: u32 = 1;

const HOPF_KEYS: [&str; 5] = ["eta", "mu", "eps", "delta", "lambda"];

fn required_keys(kind: &str) -> Option<Vec<&'static str>> {
    let mut keys = match kind {
        "hopf" | "brace_triple" | "post_hopf" => HOPF_KEYS.to_vec(),
        "hopf_brace" => vec!["eta", "mu1", "lambda1", "mu2", "lambda2", "eps", "delta"],
        _ => return None,
    };
    match kind {
        "brace_triple" => keys.extend(["gamma", "T"]),
        "post_hopf" => keys.push("m"),
        _ => {}
    }
    Some(keys)
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    format_version: u32,
    kind: String,
    carrier: RawCarrier,
    braiding: BraidingKind,
    morphisms: BTreeMap<String, Vec<Vec<Value>>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCarrier {
    dim: usize,
    #[serde(default)]
    grading: Option<Vec<u8>>,
}

fn scalar(v: &Value) -> Result<Scalar, String> {
    match v {
        Value::String(s) => s.parse().map_err(|_| format!("bad scalar {s:?}")),
        Value::Number(n) => n
            .as_i64()
            .map(Scalar::from)
            .ok_or_else(|| format!("bad scalar {n}; write non-integers as \"p/q\"")),
        other => Err(format!("bad scalar {other}")),
    }
}

/// Parses and validates a structure file.
pub fn parse_structure(text: &str) -> Result<Structure, CliError> {
    let raw: RawFile = serde_json::from_str(text).map_err(|e| CliError::Format(e.to_string()))?;
    if raw.format_version != FORMAT_VERSION {
        return Err(CliError::Format(format!("unsupported format_version {}", raw.format_version)));
    }
    let keys = required_keys(&raw.kind).ok_or_else(|| CliError::Format(format!("unknown kind {:?}", raw.kind)))?;
    for k in raw.morphisms.keys() {
        if !keys.contains(&k.as_str()) {
            return Err(CliError::Format(format!("unexpected morphism {k:?} for kind {}", raw.kind)));
        }
    }
    if raw.carrier.dim == 0 {
        return Err(CliError::Format("carrier dim must be positive".into()));
    }
    let h = match raw.carrier.grading {
        Some(g) => {
            if g.len() != raw.carrier.dim {
                return Err(CliError::Format("grading length differs from dim".into()));
            }
            Obj::graded("H", g)?
        }
        None => Obj::new("H", raw.carrier.dim),
    };
    let k = Obj::unit();
    let hh = h.tensor(&h);
    let get = |name: &str, dom: &Obj, cod: &Obj| -> Result<Mor, CliError> {
        let rows = raw
            .morphisms
            .get(name)
            .ok_or_else(|| CliError::Format(format!("missing morphism {name:?}")))?;
        let rows = rows
            .iter()
            .map(|r| r.iter().map(scalar).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| CliError::Format(format!("{name}: {e}")))?;
        Mor::from_rows(dom, cod, rows).map_err(|e| CliError::Format(format!("{name}: {e}")))
    };
    let hopf = |mu: &str, lambda: &str| -> Result<HopfAlgebra, CliError> {
        Ok(HopfAlgebra::new(
            h.clone(),
            raw.braiding,
            get("eta", &k, &h)?,
            get(mu, &hh, &h)?,
            get("eps", &h, &k)?,
            get("delta", &h, &hh)?,
            get(lambda, &h, &h)?,
        )?)
    };
    Ok(match raw.kind.as_str() {
        "hopf" => Structure::Hopf(hopf("mu", "lambda")?),
        "hopf_brace" => Structure::HopfBrace(HopfBrace::new(hopf("mu1", "lambda1")?, hopf("mu2", "lambda2")?)?),
        "brace_triple" => {
            Structure::BraceTriple(BraceTriple::new(hopf("mu", "lambda")?, get("gamma", &hh, &h)?, get("T", &h, &h)?)?)
        }
        _ => Structure::PostHopf(PostHopfAlgebra::new(hopf("mu", "lambda")?, get("m", &hh, &h)?)?),
    })
}

fn quoted(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

fn write_matrix(out: &mut String, m: &Mor) {
    let rows = m.to_rows();
    out.push('[');
    for (i, row) in rows.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|v| quoted(&v.to_string())).collect();
        let sep = if i + 1 == rows.len() { "" } else { "," };
        let _ = write!(out, "\n      [{}]{sep}", cells.join(", "));
    }
    out.push_str("\n    ]");
}

/// Canonical text: fixed top-level order, morphisms sorted by name.
pub fn render_structure(s: &Structure) -> String {
    let h = s.hopf();
    let mut named: BTreeMap<&str, Mor> = BTreeMap::new();
    let mut put_hopf = |hopf: &HopfAlgebra, mu: &'static str, lambda: &'static str| {
        named.insert("eta", hopf.unit().clone());
        named.insert("eps", hopf.counit().clone());
        named.insert("delta", hopf.comul().clone());
        named.insert(mu, hopf.mul().clone());
        named.insert(lambda, hopf.antipode().clone());
    };
    match s {
        Structure::Hopf(x) => put_hopf(x, "mu", "lambda"),
        Structure::HopfBrace(b) => {
            put_hopf(b.second(), "mu2", "lambda2");
            put_hopf(b.first(), "mu1", "lambda1");
        }
        Structure::BraceTriple(t) => {
            put_hopf(t.hopf(), "mu", "lambda");
            named.insert("gamma", t.gamma().clone());
            named.insert("T", t.t().clone());
        }
        Structure::PostHopf(p) => {
            put_hopf(p.hopf(), "mu", "lambda");
            named.insert("m", p.m().clone());
        }
    }
    let mut out = String::from("{\n");
    let _ = writeln!(out, "  \"format_version\": {FORMAT_VERSION},");
    let _ = writeln!(out, "  \"kind\": {},", quoted(s.kind()));
    let c = h.carrier();
    match c.grading() {
        Some(g) => {
            let g: Vec<String> = g.iter().map(u8::to_string).collect();
            let _ = writeln!(out, "  \"carrier\": {{\"dim\": {}, \"grading\": [{}]}},", c.dim(), g.join(", "));
        }
        None => {
            let _ = writeln!(out, "  \"carrier\": {{\"dim\": {}}},", c.dim());
        }
    }
    let _ = writeln!(out, "  \"braiding\": {},", quoted(h.braid().as_str()));
    out.push_str("  \"morphisms\": {");
    let n = named.len();
    for (i, (name, m)) in named.iter().enumerate() {
        let _ = write!(out, "\n    {}: ", quoted(name));
        write_matrix(&mut out, m);
        if i + 1 < n {
            out.push(',');
        }
    }
    out.push_str("\n  }\n}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use hopfbrace::exhibits::{hopf_brace_from_skew_brace, super_line, FiniteGroup, SkewBrace};
    use hopfbrace::functors::{functor_g, functor_p};

    fn corpus() -> Vec<Structure> {
        let b = hopf_brace_from_skew_brace(&SkewBrace::opposite(&FiniteGroup::symmetric3()));
        let t = functor_g(&b).unwrap();
        let p = functor_p(&t).unwrap();
        vec![Structure::Hopf(super_line()), Structure::HopfBrace(b), Structure::BraceTriple(t), Structure::PostHopf(p)]
    }

    #[test]
    fn save_load_save_is_byte_exact() {
        for s in corpus() {
            let text = render_structure(&s);
            let back = parse_structure(&text).unwrap();
            assert_eq!(back, s);
            assert_eq!(render_structure(&back), text);
        }
    }

    #[test]
    fn output_is_valid_json() {
        for s in corpus() {
            let v: Value = serde_json::from_str(&render_structure(&s)).unwrap();
            assert_eq!(v["format_version"], 1);
        }
    }

    #[test]
    fn rationals_survive() {
        let text = render_structure(&Structure::Hopf(super_line())).replace("\"-1\"", "\"-3/7\"");
        let s = parse_structure(&text).unwrap();
        assert_eq!(s.hopf().antipode().entry(1, 1), Scalar::ratio(-3, 7));
        assert!(render_structure(&s).contains("\"-3/7\""));
    }

    #[test]
    fn rejects_bad_files() {
        let good = render_structure(&Structure::Hopf(super_line()));
        for bad in [
            good.replace("\"kind\": \"hopf\"", "\"kind\": \"group\""),
            good.replace("\"eta\"", "\"unit\""),
            good.replace("\"format_version\": 1", "\"format_version\": 9"),
            good.replace("\"dim\": 2", "\"dim\": 3"),
            good.replace("\"-1\"", "\"1.5\""),
            good.replace("\"graded_flip\"", "\"twist\""),
        ] {
            assert!(parse_structure(&bad).is_err(), "{bad}");
        }
    }
}
