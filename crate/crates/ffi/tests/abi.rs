use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use abfactor_ffi::*;

fn graph(n: usize, edges: &[(usize, usize)]) -> *mut AbfGraph {
    let flat: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    let mut g = ptr::null_mut();
    let status = unsafe { abf_graph_new(n, flat.as_ptr(), edges.len(), &mut g) };
    assert_eq!(status, AbfStatus::Ok);
    g
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(abf_last_error_message()) }.to_string_lossy().into_owned()
}

#[test]
fn graph_round_trip() {
    let g = graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
    unsafe {
        assert_eq!(abf_graph_vertex_count(g), 4);
        assert_eq!(abf_graph_edge_count(g), 4);
        let (mut u, mut v) = (0, 0);
        assert_eq!(abf_graph_edge(g, 0, &mut u, &mut v), AbfStatus::Ok);
        assert_eq!((u, v), (0, 1));
        assert_eq!(abf_graph_edge(g, 4, &mut u, &mut v), AbfStatus::InvalidArgument);
        let mut k = 0;
        assert_eq!(abf_edge_connectivity(g, &mut k), AbfStatus::Ok);
        assert_eq!(k, 2);
        assert_eq!(abf_min_degree(g, &mut k), AbfStatus::Ok);
        assert_eq!(k, 2);
        let mut infinite = true;
        assert_eq!(abf_sigma2(g, &mut k, &mut infinite), AbfStatus::Ok);
        assert!(!infinite);
        assert_eq!(k, 4);
        abf_graph_free(g);
    }
}

#[test]
fn invalid_input_sets_message() {
    let flat = [0usize, 0];
    let mut g = ptr::null_mut();
    let status = unsafe { abf_graph_new(2, flat.as_ptr(), 1, &mut g) };
    assert_eq!(status, AbfStatus::InvalidArgument);
    assert!(g.is_null());
    assert!(!last_error().is_empty());

    let status = unsafe { abf_graph_new(2, ptr::null(), 1, &mut g) };
    assert_eq!(status, AbfStatus::NullPointer);
}

#[test]
fn parse_text() {
    let text = CString::new("3 2\n0 1\n1 2\n").unwrap();
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(abf_graph_parse(text.as_ptr(), &mut g), AbfStatus::Ok);
        assert_eq!(abf_graph_edge_count(g), 2);
        abf_graph_free(g);
    }
}

#[test]
fn even_factor_found_and_verified() {
    let mut g = ptr::null_mut();
    let mut f = ptr::null_mut();
    unsafe {
        assert_eq!(abf_complete_bipartite(3, 3, &mut g), AbfStatus::Ok);
        assert_eq!(abf_find_even_factor(g, 2, 2, &mut f), AbfStatus::Ok);
        assert_eq!(abf_factor_edge_count(f), 6);
        let mut valid = false;
        assert_eq!(abf_verify_factor(g, f, 2, 2, true, &mut valid), AbfStatus::Ok);
        assert!(valid);
        abf_factor_free(f);
        abf_graph_free(g);
    }
}

#[test]
fn families_have_no_even_factor() {
    let mut g = ptr::null_mut();
    let mut f = ptr::null_mut();
    let mut k = 0;
    unsafe {
        assert_eq!(abf_example1(4, 12, 9, &mut g), AbfStatus::Ok);
        assert_eq!(abf_edge_connectivity(g, &mut k), AbfStatus::Ok);
        assert_eq!(k, 3);
        assert_eq!(abf_find_even_factor(g, 4, 12, &mut f), AbfStatus::Absent);
        assert!(f.is_null());
        abf_graph_free(g);

        assert_eq!(abf_example2(4, 24, 6, &mut g), AbfStatus::Ok);
        assert_eq!(abf_vertex_connectivity(g, &mut k), AbfStatus::Ok);
        assert_eq!(k, 3);
        abf_graph_free(g);

        assert_eq!(abf_example1(4, 12, 2, &mut g), AbfStatus::InvalidArgument);
        assert!(g.is_null());
    }
}

#[test]
fn ab_factor_and_criterion() {
    let mut g = ptr::null_mut();
    let mut f = ptr::null_mut();
    unsafe {
        assert_eq!(abf_h_na(6, 2, &mut g), AbfStatus::Ok);
        let (mut holds, mut max_value) = (true, 0i64);
        assert_eq!(abf_criterion_decide(g, 2, 2, 18, &mut holds, &mut max_value), AbfStatus::Ok);
        let status = abf_find_ab_factor(g, 2, 2, 0, &mut f);
        assert_eq!(status == AbfStatus::Ok, holds);
        assert_eq!(holds, max_value <= 0);
        abf_factor_free(f);
        abf_graph_free(g);
    }
}

#[test]
fn spectral_values() {
    let mut g = ptr::null_mut();
    let (mut l, mut r) = (0.0, 0.0);
    unsafe {
        assert_eq!(abf_h_na(6, 1, &mut g), AbfStatus::Ok);
        assert_eq!(abf_lambda1(g, 1e-10, &mut l), AbfStatus::Ok);
        assert_eq!(abf_rho(6, 1, 1e-12, &mut r), AbfStatus::Ok);
        assert!((l - r).abs() < 1e-6);
        assert!((r - 4.0).abs() < 1e-9);
        abf_graph_free(g);
        assert_eq!(abf_lambda1(ptr::null(), 1e-10, &mut l), AbfStatus::NullPointer);
        assert!(!CStr::from_ptr(abf_version()).to_bytes().is_empty());
    }
}

#[test]
fn header_declares_every_symbol() {
    let header = std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("include/abfactor.h")).unwrap();
    let source = include_str!("../src/lib.rs");
    let exported: Vec<&str> = source
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert!(exported.len() > 20);
    for name in exported {
        assert!(header.contains(&format!("{name}(")), "{name} missing from header");
    }
    assert!(header.contains("typedef struct AbfGraph AbfGraph;"));
    assert!(header.contains("ABF_STATUS_NULL_POINTER = 4"));
}

#[test]
fn header_compiles_as_c() {
    let Ok(cc) = which_cc() else { return };
    let include = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    let dir = tempfile_dir();
    let file = dir.join("probe.c");
    std::fs::write(&file, "#include \"abfactor.h\"\nint main(void) { return ABF_STATUS_OK; }\n").unwrap();
    let status = Command::new(cc)
        .arg("-fsyntax-only")
        .arg("-I")
        .arg(&include)
        .arg(&file)
        .status()
        .unwrap();
    assert!(status.success());
}

fn which_cc() -> Result<&'static str, ()> {
    ["cc", "gcc", "clang"]
        .into_iter()
        .find(|c| Command::new(c).arg("--version").output().is_ok_and(|o| o.status.success()))
        .ok_or(())
}

fn tempfile_dir() -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("abfactor-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}
