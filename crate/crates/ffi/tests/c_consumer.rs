use std::path::{Path, PathBuf};
use std::process::Command;

const MANIFEST: &str = env!("CARGO_MANIFEST_DIR");

/// target/<profile>, where the cdylib sits next to the `deps` directory.
fn artifact_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(Path::parent).unwrap().to_path_buf()
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(Path::new(MANIFEST).join("include/morphtok.h")).unwrap();
    for item in [
        "typedef struct MtTokenizer MtTokenizer;",
        "MT_STATUS_MODE_INPUT_MISMATCH",
        "enum MtStatus mt_tokenizer_new(",
        "void mt_tokenizer_free(",
        "enum MtStatus mt_tokenize(",
        "enum MtStatus mt_detokenize(",
        "enum MtStatus mt_metrics(",
        "enum MtStatus mt_token_id(",
        "void mt_string_free(",
        "const char *mt_last_error_message(void);",
    ] {
        assert!(header.contains(item), "missing {item}");
    }
}

#[test]
fn c_program_links_and_matches_cli_output() {
    let lib_dir = artifact_dir();
    assert!(lib_dir.join("libmorphtok_ffi.so").exists(), "cdylib not built in {lib_dir:?}");
    let tmp = tempfile::tempdir().unwrap();
    let exe = tmp.path().join("smoke");
    let manifest = Path::new(MANIFEST);
    let status = Command::new("cc")
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-L")
        .arg(&lib_dir)
        .arg("-lmorphtok_ffi")
        .arg("-o")
        .arg(&exe)
        .status()
        .expect("a C compiler named cc");
    assert!(status.success());

    let fixtures = manifest.join("tests/fixtures");
    let out = Command::new(&exe)
        .env("LD_LIBRARY_PATH", &lib_dir)
        .arg(fixtures.join("morwp_md.vocab"))
        .arg(manifest.join("../core/tests/fixtures/ramen.tsv"))
        .arg(fixtures.join("ramen_morwp_md.expected"))
        .output()
        .unwrap();
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(out.status.success(), "{stdout}{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout.starts_with("ModeInputMismatch 23 "), "{stdout}");
}
