//! Compiles and runs a C program against the generated header and the
//! static library. Skipped when no C compiler is on the path.

use std::path::PathBuf;
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include "avecond.h"

int main(void) {
    double data[4] = {3.0, -1.0, -1.0, 3.0};
    AvecondMatrix *a = NULL;
    if (avecond_matrix_new(2, 2, data, &a) != AVECOND_STATUS_OK) return 1;
    double value = 0.0;
    int8_t witness[2] = {0, 0};
    if (avecond_cond_exact(a, AVECOND_NORM_INF, NULL, &value, witness) != AVECOND_STATUS_OK) return 2;
    double b[2] = {1.0, 1.0}, x[2];
    if (avecond_solve(a, b, x) != AVECOND_STATUS_OK) return 3;
    avecond_matrix_free(a);
    printf("%.17g %d %d %.17g %.17g\n", value, witness[0], witness[1], x[0], x[1]);
    return 0;
}
"#;

fn target_dir() -> PathBuf {
    // tests/<name>-<hash> lives in target/<profile>/deps
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn c_program_links_and_runs() {
    if Command::new("cc").arg("--version").output().is_err() {
        eprintln!("no C compiler; skipping");
        return;
    }
    let lib = target_dir().join("libavecond_ffi.a");
    assert!(lib.exists(), "{} missing", lib.display());
    let include = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include");
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("main.c");
    let bin = dir.path().join("main");
    std::fs::write(&src, PROGRAM).unwrap();
    let status = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-I"])
        .arg(&include)
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&bin).output().unwrap();
    assert!(out.status.success(), "{out:?}");
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "1 1 1 1 1\n");
}
