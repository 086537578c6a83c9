#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

/// Worked cubics with checked-in `classify --format json` output.
pub const GOLDEN: [(&str, &str); 6] = [
    ("cubic_central_roots", "x^3 - x"),
    ("cubic_central_sphere", "x^3 + x"),
    ("cubic_isolated_only", "x^3 - i x^2 - x + i"),
    ("cubic_isolated_and_sphere", "x^3 - i x^2 + x - i"),
    (
        "cubic_double_real_root",
        "x^3 + (2 - i) x^2 + (1 - 2i) x - i",
    ),
    ("cubic_shifted_sphere", "x^3 + (1 - i) x^2 + (1 - i) x - i"),
];

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{name}.json"))
}

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn quatpoly(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_quatpoly"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).expect("utf-8"),
        stderr: String::from_utf8(out.stderr).expect("utf-8"),
    }
}

/// Returns the names of golden files whose output changed.
pub fn golden_mismatches() -> Vec<String> {
    GOLDEN
        .iter()
        .filter(|(name, poly)| {
            let run = quatpoly(&["--format", "json", "classify", poly]);
            let expected = std::fs::read_to_string(golden_path(name)).unwrap_or_default();
            run.code != 0 || run.stdout != expected
        })
        .map(|(name, _)| name.to_string())
        .collect()
}
