use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use cutbound_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(cb_last_error_message()).to_string_lossy().into_owned() }
}

fn parse(text: &str) -> (CbStatus, *mut CbGraph) {
    let source = CString::new(text).unwrap();
    let mut g = ptr::null_mut();
    let status = unsafe { cb_graph_parse(source.as_ptr(), &mut g) };
    (status, g)
}

#[test]
fn bounds_through_handles() {
    let (status, g) = parse("p 5 5\ne 0 1 1\ne 1 2 1\ne 2 3 1\ne 3 4 1\ne 0 4 1\n");
    assert_eq!(status, CbStatus::Ok);
    unsafe {
        assert_eq!(cb_graph_vertex_count(g), 5);
        assert_eq!(cb_graph_total_weight(g), 5.0);
        let mut r = ptr::null_mut();
        let name = CString::new("poljak_turzik").unwrap();
        assert_eq!(cb_bound(g, name.as_ptr(), 0, 0, &mut r), CbStatus::Ok);
        assert_eq!(cb_report_bound_value(r), 3.5);
        assert_eq!(cb_report_cut_weight(r), 4.0);
        let mut sides = [9u8; 5];
        assert_eq!(cb_report_cut_sides(r, sides.as_mut_ptr(), 5), CbStatus::Ok);
        assert!(sides.iter().all(|&s| s <= 1));
        assert_eq!(cb_report_cut_sides(r, sides.as_mut_ptr(), 3), CbStatus::InvalidInput);
        let json: serde_json::Value = serde_json::from_str(CStr::from_ptr(cb_report_json(r)).to_str().unwrap()).unwrap();
        assert_eq!(json["bound_value"], 3.5);
        cb_report_free(r);

        let shearer = CString::new("shearer").unwrap();
        assert_eq!(cb_bound(g, shearer.as_ptr(), 3, 16, &mut r), CbStatus::Ok);
        assert_eq!(cb_report_is_deterministic(r), 0);
        cb_report_free(r);
        cb_graph_free(g);
    }
}

#[test]
fn error_codes() {
    let (status, g) = parse("p 2 1\ne 0 1 -3\n");
    assert_eq!(status, CbStatus::InvalidInput);
    assert!(g.is_null());
    assert!(last_error().contains("negative"));

    unsafe {
        assert_eq!(cb_graph_parse(ptr::null(), &mut ptr::null_mut()), CbStatus::NullPointer);
        let kind = CString::new("cycle").unwrap();
        let n = CString::new("31").unwrap();
        let params = [n.as_ptr()];
        let mut g = ptr::null_mut();
        assert_eq!(cb_graph_generate(kind.as_ptr(), params.as_ptr(), 1, 0, &mut g), CbStatus::Ok);
        let mut value = 0.0;
        assert_eq!(cb_exact_max_cut(g, 0, &mut value, ptr::null_mut()), CbStatus::SizeGuard);
        assert_eq!(cb_exact_max_cut(g, 31, &mut value, ptr::null_mut()), CbStatus::Ok);
        assert_eq!(value, 30.0);
        let unknown = CString::new("nope").unwrap();
        let mut r = ptr::null_mut();
        assert_eq!(cb_bound(g, unknown.as_ptr(), 0, 0, &mut r), CbStatus::InvalidInput);
        assert!(r.is_null());
        cb_graph_free(g);
        cb_graph_free(ptr::null_mut());
        cb_report_free(ptr::null_mut());
        assert!(cb_report_bound_value(ptr::null()).is_nan());
    }
}

#[test]
fn arrays_constructor() {
    let us = [0u32, 0, 0];
    let vs = [1u32, 2, 3];
    let ws = [1.0, 2.0, 3.0];
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(cb_graph_new(4, us.as_ptr(), vs.as_ptr(), ws.as_ptr(), 3, &mut g), CbStatus::Ok);
        let mut value = 0.0;
        let mut sides = [0u8; 4];
        assert_eq!(cb_exact_max_cut(g, 0, &mut value, sides.as_mut_ptr()), CbStatus::Ok);
        assert_eq!(value, 6.0);
        assert!(sides[1] == sides[2] && sides[2] == sides[3] && sides[0] != sides[1]);
        cb_graph_free(g);
        let mut empty = ptr::null_mut();
        assert_eq!(cb_graph_new(3, ptr::null(), ptr::null(), ptr::null(), 0, &mut empty), CbStatus::Ok);
        cb_graph_free(empty);
        let bad = [7u32];
        assert_eq!(cb_graph_new(2, us.as_ptr(), bad.as_ptr(), ws.as_ptr(), 1, &mut g), CbStatus::InvalidInput);
    }
}

/// Compiles the C smoke program against the generated header and the
/// static library; skipped when no C compiler is around.
#[test]
fn c_program_links_and_runs() {
    let crate_dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().unwrap().parent().unwrap();
    let lib = profile_dir.join("libcutbound_ffi.a");
    if !lib.exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping: no C compiler or static library");
        return;
    }
    let out_dir = tempfile::tempdir().unwrap();
    let bin = out_dir.path().join("smoke");
    let status = Command::new("cc")
        .arg("-std=c11")
        .arg("-Wall")
        .arg("-I")
        .arg(crate_dir.join("include"))
        .arg(crate_dir.join("tests/c/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success());
    let run = Command::new(&bin).output().unwrap();
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    assert!(String::from_utf8_lossy(&run.stdout).starts_with("ok "));
}
