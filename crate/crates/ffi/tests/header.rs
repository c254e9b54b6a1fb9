use std::path::Path;
use std::process::Command;

const EXPORTED: &[&str] = &[
    "hermops_last_error",
    "hermops_string_free",
    "hermops_poly_hermite",
    "hermops_poly_bivariate_hermite",
    "hermops_poly_u",
    "hermops_poly_legendre",
    "hermops_poly_laguerre",
    "hermops_poly_to_json",
    "hermops_poly_free",
    "hermops_op_new",
    "hermops_op_add_term",
    "hermops_op_mul",
    "hermops_op_commutator",
    "hermops_op_apply",
    "hermops_op_to_string",
    "hermops_op_free",
    "hermops_check",
];

fn header_path() -> std::path::PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("include/hermops.h")
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(header_path()).expect("header generated by build script");
    for name in EXPORTED {
        assert!(header.contains(&format!("{name}(")), "missing {name}");
    }
    for item in [
        "typedef struct HermopsPoly HermopsPoly;",
        "typedef struct HermopsOp HermopsOp;",
        "HERMOPS_STATUS_OK = 0",
        "HERMOPS_STATUS_DEGREE_OVERFLOW = 3",
        "HERMOPS_CONVENTION_M_WITH_X = 1",
    ] {
        assert!(header.contains(item), "missing {item}");
    }
}

#[test]
fn header_compiles_as_c() {
    let Ok(out) = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-x", "c"])
        .arg(header_path())
        .output()
    else {
        eprintln!("no C compiler on PATH; skipping");
        return;
    };
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
}
