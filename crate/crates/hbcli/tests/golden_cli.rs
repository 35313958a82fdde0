mod common;

use std::fs;

use common::{check_case, golden_dir, hb, CASES};

#[test]
fn golden_cases() {
    let failures: Vec<String> = CASES.iter().filter_map(|c| check_case(c).err()).collect();
    assert!(failures.is_empty(), "{}", failures.join("\n\n"));
}

#[test]
fn convert_f_reproduces_the_brace_file() {
    let run = hb(&["convert", "inputs/s3_triple.json", "--via", "F"]);
    assert_eq!(run.stdout, fs::read(golden_dir().join("inputs/s3_brace.json")).unwrap());
}

#[test]
fn convert_g_then_f_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let mid = dir.path().join("triple.json");
    let out = dir.path().join("brace.json");
    let input = golden_dir().join("inputs/s3_brace.json");
    let via = |src: &std::path::Path, f: &str, dst: &std::path::Path| {
        hb(&["convert", src.to_str().unwrap(), "--via", f, "-o", dst.to_str().unwrap()]).code
    };
    assert_eq!(via(&input, "G", &mid), 0);
    assert_eq!(via(&mid, "F", &out), 0);
    assert_eq!(fs::read(&out).unwrap(), fs::read(&input).unwrap());
}

#[test]
fn enumerate_writes_checkable_files() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let run = hb(&["enumerate", "--order", "4", "--family", "exhaustive", "--group", "C4", "-o", d]);
    assert_eq!(run.code, 0);
    let mut n = 0;
    for entry in fs::read_dir(dir.path()).unwrap() {
        let p = entry.unwrap().path();
        assert_eq!(hb(&["check", p.to_str().unwrap()]).code, 0, "{}", p.display());
        n += 1;
    }
    assert!(n >= 1);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(hb(&["convert", "inputs/s3_brace.json", "--via", "X"]).code, 2);
    assert_eq!(hb(&["frobnicate"]).code, 2);
}
