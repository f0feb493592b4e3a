//! The CLI golden corpus: arguments, expected exit code, golden file name.

use std::path::{Path, PathBuf};
use std::process::Command;

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub exit: i32,
}

pub const CASES: &[Case] = &[
    Case { name: "cover", args: &["cover", "tests/fixtures/domain.txt"], exit: 0 },
    Case { name: "cover_delta3", args: &["cover", "tests/fixtures/domain.txt", "--delta", "tests/fixtures/delta3.txt"], exit: 0 },
    Case { name: "cover_json", args: &["--json", "cover", "tests/fixtures/domain.txt"], exit: 0 },
    Case { name: "lift", args: &["lift", "tests/fixtures/lift.txt"], exit: 0 },
    Case { name: "verify_universal", args: &["verify-universal", "tests/fixtures/lift.txt"], exit: 0 },
    Case { name: "verify_universal_bad", args: &["verify-universal", "tests/fixtures/verify_bad.txt"], exit: 1 },
    Case { name: "symmetrize_even", args: &["symmetrize", "tests/fixtures/sym_even.txt"], exit: 0 },
    Case { name: "symmetrize_odd", args: &["symmetrize", "tests/fixtures/sym_odd.txt"], exit: 0 },
    Case { name: "decompose", args: &["decompose", "tests/fixtures/decompose.txt"], exit: 0 },
    Case { name: "decompose_not_invariant", args: &["decompose", "tests/fixtures/not_invariant.txt"], exit: 1 },
    Case { name: "pushdown", args: &["pushdown", "tests/fixtures/pushdown.txt"], exit: 0 },
    Case { name: "orbit_vanishes", args: &["orbit-vanishes", "tests/fixtures/orbit.txt"], exit: 0 },
    Case { name: "deck", args: &["deck", "tests/fixtures/delta2.txt"], exit: 0 },
    Case { name: "deck_delta3", args: &["deck", "tests/fixtures/delta3.txt"], exit: 0 },
    Case { name: "deck_missing_generator", args: &["deck", "tests/fixtures/delta_missing.txt"], exit: 2 },
    Case { name: "check_cocycle", args: &["check-cocycle", "tests/fixtures/atlas_good.txt"], exit: 0 },
    Case { name: "check_cocycle_bad", args: &["check-cocycle", "tests/fixtures/atlas_bad.txt"], exit: 1 },
    Case { name: "cover_atlas", args: &["cover-atlas", "tests/fixtures/atlas_good.txt"], exit: 0 },
    Case { name: "cover_atlas_bad", args: &["cover-atlas", "tests/fixtures/atlas_bad.txt"], exit: 2 },
    Case { name: "descend", args: &["descend", "tests/fixtures/atlas_sym.txt"], exit: 0 },
    Case { name: "descend_asymmetric", args: &["descend", "tests/fixtures/atlas_asym.txt"], exit: 1 },
    Case { name: "roundtrip_graded", args: &["roundtrip", "tests/fixtures/atlas_good.txt"], exit: 0 },
    Case { name: "roundtrip_symmetric", args: &["roundtrip", "tests/fixtures/atlas_sym.txt"], exit: 0 },
    Case { name: "verify_no_vb_cover", args: &["verify-no-vb-cover"], exit: 0 },
    Case { name: "verify_no_vb_cover_quotient", args: &["verify-no-vb-cover", "--quotient"], exit: 0 },
    Case { name: "verify_no_vb_cover_json", args: &["--json", "verify-no-vb-cover"], exit: 0 },
    Case { name: "syntax_error", args: &["symmetrize", "tests/fixtures/bad_syntax.txt"], exit: 2 },
    Case { name: "missing_file", args: &["lift", "tests/fixtures/no_such_file.txt"], exit: 2 },
];

pub fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn golden_path(name: &str) -> PathBuf {
    manifest_dir().join("tests/golden").join(format!("{name}.out"))
}

/// Runs the binary from the crate directory; returns stdout followed by
/// stderr, and the exit code.
pub fn run(bin: &Path, args: &[&str]) -> (Vec<u8>, i32) {
    let out = Command::new(bin)
        .args(args)
        .current_dir(manifest_dir())
        .output()
        .expect("binary runs");
    let mut bytes = out.stdout;
    bytes.extend(out.stderr);
    (bytes, out.status.code().unwrap_or(-1))
}

/// Compares one case against its golden file, rewriting it when
/// `UPDATE_GOLDEN` is set. Returns a description of any mismatch.
pub fn check(bin: &Path, case: &Case) -> Result<(), String> {
    let (first, code) = run(bin, case.args);
    let (second, _) = run(bin, case.args);
    if first != second {
        return Err(format!("{}: output differs between runs", case.name));
    }
    if code != case.exit {
        return Err(format!("{}: exit code {code}, expected {}", case.name, case.exit));
    }
    let path = golden_path(case.name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &first).map_err(|e| e.to_string())?;
        return Ok(());
    }
    let expected = std::fs::read(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if expected != first {
        return Err(format!(
            "{}: output differs from {}\n--- got ---\n{}",
            case.name,
            path.display(),
            String::from_utf8_lossy(&first)
        ));
    }
    Ok(())
}
