//! C ABI for the plane-chroma library.
//!
//! Conventions:
//! - Every function returns a `PcStatus` code; results come back through
//!   out-pointers.
//! - Structured data crosses the boundary as JSON in NUL-terminated UTF-8
//!   strings. Strings returned by this library must be released with
//!   `pc_string_free`.
//! - `PcGraph` is an opaque handle created by `pc_graph_from_json` and
//!   released by `pc_graph_free`.
//! - All functions catch panics and report them as `PC_INTERNAL`.

use plane_chroma::bounds::{self, families, BoundKind};
use plane_chroma::coloring::{chromatic_number, hex_verify, HexConfig};
use plane_chroma::embeddings::catalog::{catalog, catalog_names, CatalogGraph};
use plane_chroma::embeddings::realize::{realize, RealizeConfig};
use plane_chroma::embeddings::{verify, Embedding};
use plane_chroma::geometry::{Scalar, Tolerance};
use plane_chroma::graphs::SimpleGraph;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

/// Status codes returned by every FFI entry point.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PcStatus {
    PcOk = 0,
    /// A pointer argument was null or a value argument was out of range.
    PcInvalidArgument = 1,
    /// Input was not valid JSON or did not match the expected schema.
    PcBadJson = 2,
    /// A search completed without finding a witness (advisory, not proof).
    PcSearchExhausted = 3,
    /// A panic or other internal failure.
    PcInternal = 4,
    /// The requested catalog entry does not exist.
    PcUnknownName = 5,
}

/// Opaque graph handle.
pub struct PcGraph {
    inner: SimpleGraph,
}

fn guard<F: FnOnce() -> PcStatus>(f: F) -> PcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => PcStatus::PcInternal,
    }
}

/// # Safety
/// `ptr` must be null or a valid NUL-terminated string.
unsafe fn read_str<'a>(ptr: *const c_char) -> Option<&'a str> {
    if ptr.is_null() {
        return None;
    }
    CStr::from_ptr(ptr).to_str().ok()
}

fn give_string(s: String, out: *mut *mut c_char) -> PcStatus {
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            PcStatus::PcOk
        }
        Err(_) => PcStatus::PcInternal,
    }
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be null or a pointer previously returned by this library.
#[no_mangle]
pub unsafe extern "C" fn pc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a simple graph from JSON into an opaque handle.
///
/// # Safety
/// `json` must be a valid NUL-terminated string; `out` must be a valid
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn pc_graph_from_json(
    json: *const c_char,
    out: *mut *mut PcGraph,
) -> PcStatus {
    if out.is_null() {
        return PcStatus::PcInvalidArgument;
    }
    let Some(text) = read_str(json) else {
        return PcStatus::PcInvalidArgument;
    };
    guard(|| {
        let Ok(value) = serde_json::from_str(text) else {
            return PcStatus::PcBadJson;
        };
        match SimpleGraph::from_json(&value) {
            Ok(g) => {
                *out = Box::into_raw(Box::new(PcGraph { inner: g }));
                PcStatus::PcOk
            }
            Err(_) => PcStatus::PcBadJson,
        }
    })
}

/// Releases a graph handle.
///
/// # Safety
/// `g` must be null or a handle from `pc_graph_from_json`, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pc_graph_free(g: *mut PcGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices.
///
/// # Safety
/// `g` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn pc_graph_order(g: *const PcGraph, out: *mut usize) -> PcStatus {
    if g.is_null() || out.is_null() {
        return PcStatus::PcInvalidArgument;
    }
    *out = (*g).inner.n();
    PcStatus::PcOk
}

/// Chromatic number by exhaustive search (small graphs).
///
/// # Safety
/// `g` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn pc_graph_chromatic_number(
    g: *const PcGraph,
    out: *mut u32,
) -> PcStatus {
    if g.is_null() || out.is_null() {
        return PcStatus::PcInvalidArgument;
    }
    let graph = &(*g).inner;
    guard(AssertUnwindSafe(|| {
        *out = chromatic_number(graph) as u32;
        PcStatus::PcOk
    }))
}

/// Newline-separated catalog entry names.
///
/// # Safety
/// `out` must be a valid pointer; free the result with `pc_string_free`.
#[no_mangle]
pub unsafe extern "C" fn pc_catalog_names(out: *mut *mut c_char) -> PcStatus {
    if out.is_null() {
        return PcStatus::PcInvalidArgument;
    }
    guard(|| give_string(catalog_names().join("\n"), out))
}

/// Full catalog entry (graph, embedding, d, notes) as JSON.
///
/// # Safety
/// `name` must be a valid NUL-terminated string and `out_json` a valid
/// pointer; free the result with `pc_string_free`.
#[no_mangle]
pub unsafe extern "C" fn pc_catalog_entry_json(
    name: *const c_char,
    out_json: *mut *mut c_char,
) -> PcStatus {
    if out_json.is_null() {
        return PcStatus::PcInvalidArgument;
    }
    let Some(name) = read_str(name) else {
        return PcStatus::PcInvalidArgument;
    };
    guard(|| {
        let Ok(e) = catalog(name) else {
            return PcStatus::PcUnknownName;
        };
        let graph = match &e.graph {
            CatalogGraph::Simple(g) => g.to_json(),
            CatalogGraph::Bicolored(g) => g.to_json(),
        };
        let v = serde_json::json!({
            "name": e.name,
            "description": e.description,
            "graph": graph,
            "embedding": e.embedding.to_json(),
            "d": e.d.as_ref().map(|d| d.to_decimal_string()),
            "d_symbolic": e.d_symbolic,
            "vertex_names": e.vertex_names,
            "notes": e.notes,
        });
        give_string(v.to_string(), out_json)
    })
}

/// Verifies an embedding against a simple graph; emits the report as JSON.
///
/// # Safety
/// String arguments must be valid NUL-terminated strings and `out_report`
/// a valid pointer; free the result with `pc_string_free`.
#[no_mangle]
pub unsafe extern "C" fn pc_verify_json(
    graph_json: *const c_char,
    embedding_json: *const c_char,
    out_report: *mut *mut c_char,
) -> PcStatus {
    if out_report.is_null() {
        return PcStatus::PcInvalidArgument;
    }
    let (Some(gt), Some(et)) = (read_str(graph_json), read_str(embedding_json)) else {
        return PcStatus::PcInvalidArgument;
    };
    guard(|| {
        let (Ok(gv), Ok(ev)) = (
            serde_json::from_str(gt),
            serde_json::from_str(et),
        ) else {
            return PcStatus::PcBadJson;
        };
        let (Ok(g), Ok(emb)) = (SimpleGraph::from_json(&gv), Embedding::from_json(&ev)) else {
            return PcStatus::PcBadJson;
        };
        let Ok(report) = verify(&g, &emb, &Tolerance::default()) else {
            return PcStatus::PcInvalidArgument;
        };
        let v = serde_json::json!({
            "is_udr": report.is_udr,
            "is_faithful": report.is_faithful,
            "edge_violations": report.edge_violations,
            "nonedge_unit_pairs": report.nonedge_unit_pairs,
            "coincident_pairs": report.coincident_pairs,
        });
        give_string(v.to_string(), out_report)
    })
}

/// Searches for a unit-distance embedding; emits it as JSON on success.
/// Returns `PC_SEARCH_EXHAUSTED` when no embedding is found.
///
/// # Safety
/// `graph_json` must be a valid NUL-terminated string and `out_embedding`
/// a valid pointer; free the result with `pc_string_free`.
#[no_mangle]
pub unsafe extern "C" fn pc_realize_json(
    graph_json: *const c_char,
    seed: u64,
    out_embedding: *mut *mut c_char,
) -> PcStatus {
    if out_embedding.is_null() {
        return PcStatus::PcInvalidArgument;
    }
    let Some(gt) = read_str(graph_json) else {
        return PcStatus::PcInvalidArgument;
    };
    guard(|| {
        let Ok(gv) = serde_json::from_str(gt) else {
            return PcStatus::PcBadJson;
        };
        let Ok(g) = SimpleGraph::from_json(&gv) else {
            return PcStatus::PcBadJson;
        };
        let cfg = RealizeConfig {
            seed,
            ..RealizeConfig::default()
        };
        match realize(&g, &cfg) {
            Ok(Some(emb)) => give_string(emb.to_json().to_string(), out_embedding),
            Ok(None) => PcStatus::PcSearchExhausted,
            Err(_) => PcStatus::PcInvalidArgument,
        }
    })
}

/// The assembled p_d bound table as CSV (optionally with the fixed-point
/// propagation piece).
///
/// # Safety
/// `out_csv` must be a valid pointer; free the result with
/// `pc_string_free`.
#[no_mangle]
pub unsafe extern "C" fn pc_bounds_table_csv(
    propagate: bool,
    out_csv: *mut *mut c_char,
) -> PcStatus {
    if out_csv.is_null() {
        return PcStatus::PcInvalidArgument;
    }
    guard(|| {
        let upper = bounds::upper_bound_table();
        let Ok(summary) = families::summary_table(&upper) else {
            return PcStatus::PcInternal;
        };
        let mut table = upper;
        for p in summary.pieces {
            table.push(p);
        }
        if propagate {
            table = bounds::propagate(&table, &[bounds::one_over_325_config()], 8);
        }
        give_string(table.to_csv(), out_csv)
    })
}

/// Tightest known bounds on p_d at a single distance, as JSON:
/// `{"lower": {"num", "den"} | null, "upper": {"num", "den"} | null}`.
///
/// # Safety
/// `out_json` must be a valid pointer; free the result with
/// `pc_string_free`.
#[no_mangle]
pub unsafe extern "C" fn pc_bounds_at(d: f64, out_json: *mut *mut c_char) -> PcStatus {
    if out_json.is_null() {
        return PcStatus::PcInvalidArgument;
    }
    if !d.is_finite() || d <= 0.0 {
        return PcStatus::PcInvalidArgument;
    }
    guard(|| {
        let upper = bounds::upper_bound_table();
        let Ok(summary) = families::summary_table(&upper) else {
            return PcStatus::PcInternal;
        };
        let mut table = upper;
        for p in summary.pieces {
            table.push(p);
        }
        table = bounds::propagate(&table, &[bounds::one_over_325_config()], 8);
        let ds = Scalar::from_f64(d);
        let to_json = |kind: BoundKind| {
            table.query(&ds, kind).map(|r| {
                serde_json::json!({
                    "num": r.numer().to_string(),
                    "den": r.denom().to_string(),
                })
            })
        };
        let v = serde_json::json!({
            "lower": to_json(BoundKind::Lower),
            "upper": to_json(BoundKind::Upper),
        });
        give_string(v.to_string(), out_json)
    })
}

/// Sample-tests the hexagonal 7-coloring; writes the number of sampled
/// unit-distance same-color pairs (0 means the test passed).
///
/// # Safety
/// `out_violations` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pc_hex_verify(
    side: f64,
    samples: u64,
    seed: u64,
    out_violations: *mut u64,
) -> PcStatus {
    if out_violations.is_null() {
        return PcStatus::PcInvalidArgument;
    }
    if !side.is_finite() || side <= 0.0 {
        return PcStatus::PcInvalidArgument;
    }
    guard(|| {
        let Ok(cfg) = HexConfig::new(Scalar::from_f64(side)) else {
            return PcStatus::PcInvalidArgument;
        };
        match hex_verify(&cfg, samples, seed) {
            Ok(report) => {
                *out_violations = report.violations;
                PcStatus::PcOk
            }
            Err(_) => PcStatus::PcInvalidArgument,
        }
    })
}

/// Minimum monochromatic pairs among n points under 4 colors.
#[no_mangle]
pub extern "C" fn pc_f_min_mono_pairs(n: u64) -> u64 {
    bounds::f_min_mono_pairs(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    fn cstr(s: &str) -> CString {
        CString::new(s).unwrap()
    }

    unsafe fn take_string(p: *mut c_char) -> String {
        let s = CStr::from_ptr(p).to_str().unwrap().to_string();
        pc_string_free(p);
        s
    }

    #[test]
    fn graph_round_trip_and_chromatic() {
        unsafe {
            let json = cstr(r#"{"n":3,"edges":[[0,1],[1,2],[0,2]]}"#);
            let mut g: *mut PcGraph = ptr::null_mut();
            assert_eq!(pc_graph_from_json(json.as_ptr(), &mut g), PcStatus::PcOk);
            let mut n = 0usize;
            assert_eq!(pc_graph_order(g, &mut n), PcStatus::PcOk);
            assert_eq!(n, 3);
            let mut chi = 0u32;
            assert_eq!(pc_graph_chromatic_number(g, &mut chi), PcStatus::PcOk);
            assert_eq!(chi, 3);
            pc_graph_free(g);
        }
    }

    #[test]
    fn error_codes() {
        unsafe {
            let mut g: *mut PcGraph = ptr::null_mut();
            assert_eq!(
                pc_graph_from_json(ptr::null(), &mut g),
                PcStatus::PcInvalidArgument
            );
            let bad = cstr("not json");
            assert_eq!(
                pc_graph_from_json(bad.as_ptr(), &mut g),
                PcStatus::PcBadJson
            );
            let schema = cstr(r#"{"nodes": 3}"#);
            assert_eq!(
                pc_graph_from_json(schema.as_ptr(), &mut g),
                PcStatus::PcBadJson
            );
            let mut out: *mut c_char = ptr::null_mut();
            let missing = cstr("no-such-entry");
            assert_eq!(
                pc_catalog_entry_json(missing.as_ptr(), &mut out),
                PcStatus::PcUnknownName
            );
        }
    }

    #[test]
    fn catalog_and_verify_through_abi() {
        unsafe {
            let mut names_ptr: *mut c_char = ptr::null_mut();
            assert_eq!(pc_catalog_names(&mut names_ptr), PcStatus::PcOk);
            let names = take_string(names_ptr);
            assert!(names.lines().any(|l| l == "moser-spindle"));

            let name = cstr("moser-spindle");
            let mut entry_ptr: *mut c_char = ptr::null_mut();
            assert_eq!(
                pc_catalog_entry_json(name.as_ptr(), &mut entry_ptr),
                PcStatus::PcOk
            );
            let entry: serde_json::Value =
                serde_json::from_str(&take_string(entry_ptr)).unwrap();

            let graph = cstr(&entry["graph"].to_string());
            let embedding = cstr(&entry["embedding"].to_string());
            let mut report_ptr: *mut c_char = ptr::null_mut();
            assert_eq!(
                pc_verify_json(graph.as_ptr(), embedding.as_ptr(), &mut report_ptr),
                PcStatus::PcOk
            );
            let report: serde_json::Value =
                serde_json::from_str(&take_string(report_ptr)).unwrap();
            assert_eq!(report["is_udr"], true);
            assert_eq!(report["is_faithful"], true);
        }
    }

    #[test]
    fn realize_found_and_exhausted() {
        unsafe {
            let c5 = cstr(r#"{"n":5,"edges":[[0,1],[1,2],[2,3],[3,4],[0,4]]}"#);
            let mut emb_ptr: *mut c_char = ptr::null_mut();
            assert_eq!(pc_realize_json(c5.as_ptr(), 0, &mut emb_ptr), PcStatus::PcOk);
            let emb: serde_json::Value = serde_json::from_str(&take_string(emb_ptr)).unwrap();
            assert_eq!(emb["points"].as_array().unwrap().len(), 5);

            // K4 is not a unit-distance graph.
            let k4 = cstr(r#"{"n":4,"edges":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]}"#);
            assert_eq!(
                pc_realize_json(k4.as_ptr(), 0, &mut emb_ptr),
                PcStatus::PcSearchExhausted
            );
        }
    }

    #[test]
    fn bounds_through_abi() {
        unsafe {
            let mut csv_ptr: *mut c_char = ptr::null_mut();
            assert_eq!(pc_bounds_table_csv(true, &mut csv_ptr), PcStatus::PcOk);
            let csv = take_string(csv_ptr);
            assert!(csv.starts_with("d_lo,d_hi,"));
            assert!(csv.contains("propagate:point-325"));

            let mut json_ptr: *mut c_char = ptr::null_mut();
            assert_eq!(pc_bounds_at(0.6, &mut json_ptr), PcStatus::PcOk);
            let v: serde_json::Value = serde_json::from_str(&take_string(json_ptr)).unwrap();
            assert_eq!(v["lower"]["num"], "1");
            assert_eq!(v["lower"]["den"], "125");
            assert_eq!(v["upper"]["num"], "12");
            assert_eq!(v["upper"]["den"], "25");

            assert_eq!(pc_bounds_at(-1.0, &mut json_ptr), PcStatus::PcInvalidArgument);
        }
    }

    #[test]
    fn hex_and_f_through_abi() {
        unsafe {
            let mut violations = u64::MAX;
            assert_eq!(pc_hex_verify(0.45, 2000, 0, &mut violations), PcStatus::PcOk);
            assert_eq!(violations, 0);
            // Side length outside [1/sqrt 7, 1/2].
            assert_eq!(
                pc_hex_verify(0.7, 100, 0, &mut violations),
                PcStatus::PcInvalidArgument
            );
        }
        assert_eq!(pc_f_min_mono_pairs(9), 6);
        assert_eq!(pc_f_min_mono_pairs(4), 0);
    }
}
