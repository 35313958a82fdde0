//! Golden CLI cases shared by the golden and acceptance targets.
//!
//! Each case runs `hb` from `tests/golden` and compares stdout (and stderr,
//! when the case expects any) with `tests/golden/expected/<name>.out` /
//! `<name>.err`. Set `HB_BLESS=1` to rewrite the expected files.

#![allow(dead_code)]

use std::fs;
use std::path::PathBuf;
use std::process::Command;

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub exit: i32,
}

const fn case(name: &'static str, args: &'static [&'static str], exit: i32) -> Case {
    Case { name, args, exit }
}

pub const CASES: &[Case] = &[
    case("check_c2_hopf", &["check", "inputs/c2_hopf.json"], 0),
    case("check_super_line", &["check", "inputs/super_line.json"], 0),
    case("check_super_line_flip", &["check", "inputs/super_line_flip.json"], 1),
    case("check_s3_brace", &["check", "inputs/s3_brace.json"], 0),
    case("check_s3_triple", &["check", "inputs/s3_triple.json"], 0),
    case("check_s3_triple_json", &["check", "--json", "inputs/s3_triple.json"], 0),
    case("check_s3_post", &["check", "inputs/s3_post.json"], 0),
    case("check_s3_triple_perturbed", &["check", "inputs/s3_triple_perturbed.json"], 1),
    case("check_missing_file", &["check", "inputs/absent.json"], 2),
    case("convert_s3_triple_f", &["convert", "inputs/s3_triple.json", "--via", "F"], 0),
    case("convert_s3_brace_g", &["convert", "inputs/s3_brace.json", "--via", "G"], 0),
    case("convert_s3_triple_p", &["convert", "inputs/s3_triple.json", "--via", "P"], 0),
    case("convert_s3_post_q", &["convert", "inputs/s3_post.json", "--via", "Q"], 0),
    case("convert_perturbed_f", &["convert", "inputs/s3_triple_perturbed.json", "--via", "F"], 1),
    case("convert_wrong_kind", &["convert", "inputs/c2_hopf.json", "--via", "F"], 2),
    case("roundtrip_s3_triple_fg", &["roundtrip", "inputs/s3_triple.json", "--pair", "FG"], 0),
    case("roundtrip_s3_brace_fg", &["roundtrip", "inputs/s3_brace.json", "--pair", "FG"], 0),
    case("roundtrip_s3_brace_fg_json", &["roundtrip", "--json", "inputs/s3_brace.json", "--pair", "FG"], 0),
    case("roundtrip_s3_triple_qp", &["roundtrip", "inputs/s3_triple.json", "--pair", "QP"], 0),
    case("roundtrip_s3_post_qp", &["roundtrip", "inputs/s3_post.json", "--pair", "QP"], 0),
    case("roundtrip_perturbed_fg", &["roundtrip", "inputs/s3_triple_perturbed.json", "--pair", "FG"], 1),
    case("eval_c2_antipode", &["eval", "inputs/c2_hopf.json", "mu . (id[H] ox lambda) . delta"], 0),
    case("eval_c2_square", &["eval", "inputs/c2_hopf.json", "mu . delta"], 0),
    case("eval_super_braid", &["eval", "inputs/super_line.json", "c[H,H] . c[H,H]"], 0),
    case("eval_super_braid_json", &["eval", "--json", "inputs/super_line.json", "c[H,H]"], 0),
    case("eval_triple_unit", &["eval", "inputs/s3_triple.json", "gamma . (eta ox id[H])"], 0),
    case("eval_post_unit", &["eval", "inputs/s3_post.json", "m . (id[H] ox eta)"], 0),
    case("eval_syntax_error", &["eval", "inputs/c2_hopf.json", "mu ."], 2),
    case("eval_type_error", &["eval", "inputs/c2_hopf.json", "mu . eps"], 2),
    case("eval_unknown_generator", &["eval", "inputs/c2_hopf.json", "gamma"], 2),
    case("enumerate_c4", &["enumerate", "--order", "4", "--family", "exhaustive"], 0),
    case("enumerate_bound", &["enumerate", "--order", "7", "--family", "exhaustive"], 2),
];

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub struct Run {
    pub stdout: Vec<u8>,
    pub stderr: Vec<u8>,
    pub code: i32,
}

pub fn hb(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_hb"))
        .current_dir(golden_dir())
        .args(args)
        .output()
        .expect("failed to spawn hb");
    Run { stdout: out.stdout, stderr: out.stderr, code: out.status.code().unwrap_or(-1) }
}

fn compare(path: PathBuf, got: &[u8], bless: bool) -> Result<(), String> {
    if bless {
        if got.is_empty() {
            let _ = fs::remove_file(&path);
        } else {
            fs::write(&path, got).map_err(|e| e.to_string())?;
        }
        return Ok(());
    }
    let want = fs::read(&path).unwrap_or_default();
    if want == got {
        Ok(())
    } else {
        Err(format!(
            "{} differs\n--- expected\n{}\n--- got\n{}",
            path.display(),
            String::from_utf8_lossy(&want),
            String::from_utf8_lossy(got)
        ))
    }
}

/// Runs one case; `Err` describes the first mismatch.
pub fn check_case(c: &Case) -> Result<(), String> {
    let bless = std::env::var_os("HB_BLESS").is_some();
    let run = hb(c.args);
    if run.code != c.exit {
        return Err(format!(
            "{}: exit {} (expected {})\n{}",
            c.name,
            run.code,
            c.exit,
            String::from_utf8_lossy(&run.stderr)
        ));
    }
    let dir = golden_dir().join("expected");
    compare(dir.join(format!("{}.out", c.name)), &run.stdout, bless)?;
    compare(dir.join(format!("{}.err", c.name)), &run.stderr, bless)
}
