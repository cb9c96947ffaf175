use std::ffi::{CStr, CString};
use std::ptr;

use tracenorm_ffi::*;

fn handle(n: usize, arcs: &[(usize, usize)]) -> *mut TnDigraph {
    let tails: Vec<usize> = arcs.iter().map(|a| a.0).collect();
    let heads: Vec<usize> = arcs.iter().map(|a| a.1).collect();
    let mut h = ptr::null_mut();
    let s = unsafe { tn_digraph_from_arcs(n, tails.as_ptr(), heads.as_ptr(), arcs.len(), &mut h) };
    assert_eq!(s, TnStatus::Ok);
    h
}

fn last_error() -> String {
    let p = tn_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn trace_norm_of_path() {
    let h = handle(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
    let mut t = 0.0;
    assert_eq!(unsafe { tn_trace_norm(h, 0.0, &mut t) }, TnStatus::Ok);
    assert!((t - 4.0).abs() < 1e-9);
    assert_eq!(unsafe { tn_digraph_order(h) }, 5);
    assert_eq!(unsafe { tn_digraph_arc_count(h) }, 4);
    unsafe { tn_digraph_free(h) };
}

#[test]
fn singular_values_buffer() {
    let h = handle(2, &[(0, 1)]);
    let mut buf = [0.0f64; 2];
    assert_eq!(unsafe { tn_singular_values(h, 0.5, buf.as_mut_ptr(), 2) }, TnStatus::Ok);
    assert!((buf[0] - 0.5f64.sqrt()).abs() < 1e-12);
    assert_eq!(buf[1], 0.0);
    assert_eq!(unsafe { tn_singular_values(h, 0.5, buf.as_mut_ptr(), 1) }, TnStatus::BufferTooSmall);
    unsafe { tn_digraph_free(h) };
}

#[test]
fn parse_and_errors() {
    let text = CString::new("3 3\n0 1\n1 2\n2 0\n").unwrap();
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { tn_digraph_parse(text.as_ptr(), &mut h) }, TnStatus::Ok);
    let mut t = 0.0;
    assert_eq!(unsafe { tn_trace_norm(h, 0.0, &mut t) }, TnStatus::Ok);
    assert!((t - 3.0).abs() < 1e-9);
    assert_eq!(unsafe { tn_trace_norm(h, 1.0, &mut t) }, TnStatus::Domain);
    assert!(last_error().contains("alpha"));
    unsafe { tn_digraph_free(h) };

    let bad = CString::new("2 1\n1 1\n").unwrap();
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { tn_digraph_parse(bad.as_ptr(), &mut h) }, TnStatus::Parse);
    assert!(last_error().contains("line 2"));
    assert!(h.is_null());

    let mut h = ptr::null_mut();
    let tails = [0usize, 0];
    let heads = [1usize, 1];
    assert_eq!(unsafe { tn_digraph_from_arcs(2, tails.as_ptr(), heads.as_ptr(), 2, &mut h) }, TnStatus::InvalidInput);
}

#[test]
fn null_pointers_are_reported() {
    let mut t = 0.0;
    assert_eq!(unsafe { tn_trace_norm(ptr::null(), 0.0, &mut t) }, TnStatus::NullPointer);
    assert_eq!(unsafe { tn_arc_bound(0.0, ptr::null_mut()) }, TnStatus::NullPointer);
    assert_eq!(unsafe { tn_digraph_parse(ptr::null(), ptr::null_mut()) }, TnStatus::NullPointer);
    unsafe { tn_digraph_free(ptr::null_mut()) };
    assert_eq!(unsafe { tn_digraph_order(ptr::null()) }, 0);
}

#[test]
fn deletion_reports() {
    let h = handle(3, &[(0, 1), (1, 2)]);
    let mut r = std::mem::MaybeUninit::<TnDeletionReport>::uninit();
    assert_eq!(unsafe { tn_arc_deletion_report(h, 0, 1, 0.0, 1e-9, r.as_mut_ptr()) }, TnStatus::Ok);
    let r = unsafe { r.assume_init() };
    assert_eq!(r.kind, TnDeletionKind::Arc);
    assert!(r.equality_predicted && r.equality_observed);
    assert!(r.slack.abs() < 1e-9);

    let mut v = std::mem::MaybeUninit::<TnDeletionReport>::uninit();
    assert_eq!(unsafe { tn_vertex_deletion_report(h, 1, 0.0, 1e-9, v.as_mut_ptr()) }, TnStatus::Ok);
    let v = unsafe { v.assume_init() };
    assert_eq!(v.kind, TnDeletionKind::NonleafVertex);
    assert_eq!(v.bound, 2.0);

    let mut w = std::mem::MaybeUninit::<TnDeletionReport>::uninit();
    assert_eq!(unsafe { tn_arc_deletion_report(h, 1, 0, 0.0, 1e-9, w.as_mut_ptr()) }, TnStatus::InvalidInput);
    unsafe { tn_digraph_free(h) };
}

#[test]
fn arc_bound_value() {
    let mut f = 0.0;
    assert_eq!(unsafe { tn_arc_bound(0.5, &mut f) }, TnStatus::Ok);
    assert!((f - 0.5f64.sqrt()).abs() < 1e-15);
    assert_eq!(unsafe { tn_arc_bound(-0.1, &mut f) }, TnStatus::Domain);
}

#[test]
fn header_declares_the_abi() {
    let header = include_str!("../include/tracenorm.h");
    for name in [
        "tn_digraph_from_arcs",
        "tn_digraph_parse",
        "tn_digraph_free",
        "tn_trace_norm",
        "tn_singular_values",
        "tn_arc_deletion_report",
        "tn_vertex_deletion_report",
        "tn_last_error_message",
        "TN_STATUS_NUMERICAL = 3",
        "typedef struct TnDigraph TnDigraph;",
    ] {
        assert!(header.contains(name), "header is missing {name}");
    }
}
