use std::path::{Path, PathBuf};
use std::process::Command;

fn crate_dir() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn header_declares_every_entry_point() {
    let header = std::fs::read_to_string(crate_dir().join("include/halfspin.h")).unwrap();
    let src = std::fs::read_to_string(crate_dir().join("src/lib.rs")).unwrap();
    let exported: Vec<&str> = src
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert!(exported.len() >= 20, "{exported:?}");
    for name in exported {
        let declared = header.contains(&format!(" {name}(")) || header.contains(&format!("*{name}("));
        assert!(declared, "{name} missing from header");
    }
    for handle in ["HsContext", "HsSpinVector", "HsFockVector", "HsClifford"] {
        assert!(header.contains(&format!("typedef struct {handle} {handle};")), "{handle} not opaque");
    }
    assert!(header.contains("HS_STATUS_VERIFICATION_FAILED = 8"));
}

/// Directory holding the static library built alongside this test.
fn lib_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn c_program_links_against_static_library() {
    let lib = lib_dir().join("libhalfspin_ffi.a");
    assert!(lib.exists(), "{} not built", lib.display());
    let out = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("halfspin_smoke");
    let status = Command::new(std::env::var("CC").unwrap_or_else(|_| "cc".into()))
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(crate_dir().join("include"))
        .arg(crate_dir().join("tests/c/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&out)
        .status()
        .expect("C compiler available");
    assert!(status.success(), "compiling the C smoke test failed");
    let run = Command::new(&out).output().unwrap();
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "ok");
}
