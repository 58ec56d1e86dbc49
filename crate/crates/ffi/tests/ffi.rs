use std::ffi::CStr;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use picard_hodge_ffi::*;

fn chi(x: i64, y: i64, z: i64, w: i64) -> PhCharacter {
    PhCharacter { x, y, z, w }
}

#[test]
fn kostant_and_types() {
    let mut buf = [PhCharacter::default(); 4];
    let mut len = 0usize;
    let status =
        unsafe { ph_kostant_cohomology(chi(1, 0, 0, 0), 1, buf.as_mut_ptr(), buf.len(), &mut len) };
    assert_eq!(status, PhStatus::Ok);
    assert_eq!(&buf[..len], &[chi(-1, 2, 0, 0), chi(1, -1, 1, 0)]);

    let mut types = [PhHodgeType::default(); 2];
    let status =
        unsafe { ph_degeneration_types(chi(0, 0, 0, 0), 3, types.as_mut_ptr(), 2, &mut len) };
    assert_eq!(status, PhStatus::Ok);
    assert_eq!(&types[..len], &[PhHodgeType { p: 2, q: 2 }]);

    let status = unsafe { ph_degeneration_types(chi(0, 0, 0, 0), 7, ptr::null_mut(), 0, &mut len) };
    assert_eq!(status, PhStatus::Ok);
    assert_eq!(len, 0);

    let mut weights = [0i64; 2];
    let status =
        unsafe { ph_degeneration_weights(chi(0, 0, 0, 0), 2, weights.as_mut_ptr(), 2, &mut len) };
    assert_eq!(status, PhStatus::Ok);
    assert_eq!(weights, [3, 3]);
}

#[test]
fn buffer_and_pointer_errors() {
    let mut one = [PhCharacter::default(); 1];
    let mut len = 0usize;
    let status =
        unsafe { ph_kostant_cohomology(chi(2, 1, 0, 0), 1, one.as_mut_ptr(), 1, &mut len) };
    assert_eq!(status, PhStatus::BufferTooSmall);
    assert_eq!(len, 2);

    let status =
        unsafe { ph_kostant_cohomology(chi(2, 1, 0, 0), 0, one.as_mut_ptr(), 1, ptr::null_mut()) };
    assert_eq!(status, PhStatus::NullPointer);

    let status =
        unsafe { ph_kostant_cohomology(chi(0, 1, 0, 0), 0, one.as_mut_ptr(), 1, &mut len) };
    assert_eq!(status, PhStatus::NotDominant);

    let mut out = 0u32;
    assert_eq!(
        unsafe { ph_weyl_length([0u8, 0, 1].as_ptr(), &mut out) },
        PhStatus::InvalidArgument
    );
    assert_eq!(
        unsafe { ph_weyl_length(ptr::null(), &mut out) },
        PhStatus::NullPointer
    );
}

#[test]
fn weyl_group_entry_points() {
    let mut len = 0u32;
    assert_eq!(
        unsafe { ph_weyl_length([2u8, 1, 0].as_ptr(), &mut len) },
        PhStatus::Ok
    );
    assert_eq!(len, 3);

    let mut out = PhCharacter::default();
    let status = unsafe { ph_rho_shift([2u8, 1, 0].as_ptr(), chi(2, 1, 0, 5), &mut out) };
    assert_eq!(status, PhStatus::Ok);
    assert_eq!(out, chi(-2, 1, 4, 5));
    assert!(ph_is_dominant(chi(3, 3, 3, -2)));
    assert!(!ph_is_dominant(chi(0, 1, 0, 0)));
}

#[test]
fn scalar_queries() {
    let mut w = 0i64;
    assert_eq!(
        unsafe { ph_vhs_weight(chi(0, 0, -1, 0), &mut w) },
        PhStatus::Ok
    );
    assert_eq!(w, 1);

    let mut list = [0i64; 6];
    assert_eq!(
        unsafe { ph_avoidance_list(chi(2, 1, 0, 0), list.as_mut_ptr()) },
        PhStatus::Ok
    );
    assert_eq!(list, [-3, -2, -2, 1, 1, 2]);

    let mut generic = false;
    assert_eq!(
        unsafe { ph_is_generic(chi(2, 1, 0, 0), &mut generic) },
        PhStatus::Ok
    );
    assert!(generic);
    assert_eq!(
        unsafe { ph_is_generic(chi(1, 1, 0, 0), &mut generic) },
        PhStatus::Ok
    );
    assert!(!generic);

    let mut dim = 0u64;
    assert_eq!(
        unsafe { ph_irrep_dimension(chi(1, 0, -1, 0), &mut dim) },
        PhStatus::Ok
    );
    assert_eq!(dim, 8);

    let mut member = false;
    assert_eq!(
        unsafe { ph_lemma_predicate(chi(1, 0, -1, -1), 1, 2, &mut member) },
        PhStatus::Ok
    );
    assert!(member);
    assert_eq!(
        unsafe { ph_lemma_predicate(chi(2, 0, 0, -1), 1, 2, &mut member) },
        PhStatus::Ok
    );
    assert!(!member);
}

#[test]
fn decomposition_handle() {
    let mut handle: *mut PhDecomposition = ptr::null_mut();
    assert_eq!(
        unsafe { ph_decomposition_new(1, 2, &mut handle) },
        PhStatus::Ok
    );
    assert!(!handle.is_null());
    assert_eq!(unsafe { ph_decomposition_len(handle) }, 4);

    let mut hw = PhCharacter::default();
    let mut mult = 0u64;
    assert_eq!(
        unsafe { ph_decomposition_term(handle, 0, &mut hw, &mut mult) },
        PhStatus::Ok
    );
    assert_eq!((hw, mult), (chi(1, 1, 0, -2), 1));
    assert_eq!(
        unsafe { ph_decomposition_term(handle, 4, &mut hw, &mut mult) },
        PhStatus::InvalidArgument
    );
    unsafe { ph_decomposition_free(handle) };
    unsafe { ph_decomposition_free(ptr::null_mut()) };
    assert_eq!(unsafe { ph_decomposition_len(ptr::null()) }, 0);
}

#[test]
fn weight_set_handles() {
    let mut predicted: *mut PhWeightSets = ptr::null_mut();
    let mut computed: *mut PhWeightSets = ptr::null_mut();
    assert_eq!(
        unsafe { ph_weight_sets_predicted(2, 5, &mut predicted) },
        PhStatus::Ok
    );
    assert_eq!(
        unsafe { ph_weight_sets_computed(2, 5, &mut computed) },
        PhStatus::Ok
    );
    assert!(unsafe { ph_weight_sets_equal(predicted, computed) });

    let mut buf = [0i64; 16];
    let mut len = 0usize;
    let status = unsafe { ph_weight_sets_get(predicted, 1, buf.as_mut_ptr(), buf.len(), &mut len) };
    assert_eq!(status, PhStatus::Ok);
    // p = 5, r = 2: M_p = 2 + (5 - 2) / 2 = 3, so {6 - j : 0 <= j <= 3}.
    assert_eq!(&buf[..len], &[3, 4, 5, 6]);

    unsafe {
        ph_weight_sets_free(predicted);
        ph_weight_sets_free(computed);
    }

    let mut empty: *mut PhWeightSets = ptr::null_mut();
    assert_eq!(
        unsafe { ph_weight_sets_predicted(1, 7, &mut empty) },
        PhStatus::Ok
    );
    let status = unsafe { ph_weight_sets_get(empty, 0, buf.as_mut_ptr(), buf.len(), &mut len) };
    assert_eq!((status, len), (PhStatus::Ok, 0));
    unsafe { ph_weight_sets_free(empty) };
}

#[test]
fn verification() {
    let mut passed = false;
    assert_eq!(unsafe { ph_verify_case(2, 7, &mut passed) }, PhStatus::Ok);
    assert!(passed);
    assert_eq!(
        unsafe { ph_verify_case(1, 7, &mut passed) },
        PhStatus::DegreeOutOfRange
    );
    assert_eq!(
        unsafe { ph_verify_case(0, 0, &mut passed) },
        PhStatus::InvalidArgument
    );
}

#[test]
fn status_messages_are_static_strings() {
    for status in [
        PhStatus::Ok,
        PhStatus::NotDominant,
        PhStatus::BufferTooSmall,
        PhStatus::Panic,
    ] {
        let msg = unsafe { CStr::from_ptr(ph_status_message(status)) };
        assert!(!msg.to_bytes().is_empty());
    }
}

fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn header_declares_every_entry_point() {
    let header = std::fs::read_to_string(crate_dir().join("include/picard_hodge.h")).unwrap();
    for name in [
        "ph_status_message",
        "ph_kostant_cohomology",
        "ph_degeneration_types",
        "ph_degeneration_weights",
        "ph_avoidance_list",
        "ph_decomposition_new",
        "ph_decomposition_term",
        "ph_decomposition_free",
        "ph_weight_sets_computed",
        "ph_weight_sets_free",
        "ph_verify_case",
        "typedef struct PhDecomposition PhDecomposition;",
        "PH_STATUS_NOT_DOMINANT = 1",
    ] {
        assert!(header.contains(name), "header is missing {name}");
    }
}

/// Directory holding the artifacts of this build profile, found from the
/// test executable's own location (`target/<profile>/deps/ffi-*`).
fn profile_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(Path::parent).unwrap().to_path_buf()
}

#[test]
fn c_program_links_against_static_library() {
    if Command::new("cc").arg("--version").output().is_err() {
        eprintln!("no C compiler on PATH; skipping");
        return;
    }
    let lib = profile_dir().join("libpicard_hodge_ffi.a");
    assert!(
        lib.exists(),
        "static library not found at {}",
        lib.display()
    );

    let out_dir = tempfile::tempdir().unwrap();
    let exe = out_dir.path().join("smoke");
    let status = Command::new("cc")
        .arg(crate_dir().join("tests/c/smoke.c"))
        .arg("-I")
        .arg(crate_dir().join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C smoke test failed to compile");

    let run = Command::new(&exe).output().unwrap();
    assert!(
        run.status.success(),
        "{}",
        String::from_utf8_lossy(&run.stderr)
    );
    assert_eq!(String::from_utf8_lossy(&run.stdout), "ok\n");
}
