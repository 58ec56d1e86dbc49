//! C ABI over `picard-hodge`.
//!
//! Values cross the boundary as plain `#[repr(C)]` structs; decompositions and
//! weight sets are returned as opaque handles that the caller releases with the
//! matching `*_free` function. Every entry point returns a [`PhStatus`] and
//! writes its result through an out-pointer. Variable-length results use the
//! `(buffer, capacity, *len)` convention: `*len` always receives the required
//! length, and `PH_STATUS_BUFFER_TOO_SMALL` is returned if `capacity` is short.
//!
//! The header `include/picard_hodge.h` is generated by cbindgen at build time.

use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, UnwindSafe};
use std::ptr;

use num_traits::ToPrimitive;
use picard_hodge::character::{decompose, exterior_power_weights, irrep_dimension};
use picard_hodge::degeneration::{
    avoidance_list, computed_weight_sets, degeneration_types, degeneration_weights, is_generic,
    lemma_predicate, predicted_weight_sets, vhs_weight, WeightSets,
};
use picard_hodge::kostant::kostant_cohomology;
use picard_hodge::verify::verify_case;
use picard_hodge::weights::{rho_shift, DominantWeight, TorusCharacter, WeylElement};
use picard_hodge::{Error, IrrepDecomposition};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PhStatus {
    Ok = 0,
    NotDominant = 1,
    NotACharacter = 2,
    DegreeOutOfRange = 3,
    NullPointer = 4,
    BufferTooSmall = 5,
    InvalidArgument = 6,
    Overflow = 7,
    Panic = 8,
}

impl From<Error> for PhStatus {
    fn from(e: Error) -> Self {
        match e {
            Error::NotDominant(_) => PhStatus::NotDominant,
            Error::NotACharacter(_) => PhStatus::NotACharacter,
            Error::DegreeOutOfRange { .. } => PhStatus::DegreeOutOfRange,
            Error::SelfCheck(_) => PhStatus::Panic,
        }
    }
}

/// A torus character `(x, y, z, w)`.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PhCharacter {
    pub x: i64,
    pub y: i64,
    pub z: i64,
    pub w: i64,
}

impl From<TorusCharacter> for PhCharacter {
    fn from(c: TorusCharacter) -> Self {
        PhCharacter {
            x: c.x,
            y: c.y,
            z: c.z,
            w: c.w,
        }
    }
}

impl From<PhCharacter> for TorusCharacter {
    fn from(c: PhCharacter) -> Self {
        TorusCharacter::new(c.x, c.y, c.z, c.w)
    }
}

/// A Hodge type `(p, q)`.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PhHodgeType {
    pub p: i64,
    pub q: i64,
}

/// Irreducible decomposition of an exterior power. Opaque.
pub struct PhDecomposition {
    inner: IrrepDecomposition,
}

/// Degree-indexed weight sets. Opaque.
pub struct PhWeightSets {
    inner: WeightSets,
}

fn guard<F: FnOnce() -> Result<(), PhStatus> + UnwindSafe>(f: F) -> PhStatus {
    match catch_unwind(f) {
        Ok(Ok(())) => PhStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => PhStatus::Panic,
    }
}

unsafe fn out_ref<'a, T>(p: *mut T) -> Result<&'a mut T, PhStatus> {
    p.as_mut().ok_or(PhStatus::NullPointer)
}

fn dominant(lambda: PhCharacter) -> Result<DominantWeight, PhStatus> {
    DominantWeight::try_from(TorusCharacter::from(lambda)).map_err(PhStatus::from)
}

fn weyl(images: *const u8) -> Result<WeylElement, PhStatus> {
    if images.is_null() {
        return Err(PhStatus::NullPointer);
    }
    let mut arr = [0u8; 3];
    // SAFETY: caller passes three readable bytes.
    unsafe { ptr::copy_nonoverlapping(images, arr.as_mut_ptr(), 3) };
    WeylElement::from_images(arr).ok_or(PhStatus::InvalidArgument)
}

/// Copy `items` into a caller buffer under the `(buf, cap, *len)` convention.
unsafe fn write_slice<T: Copy>(
    items: &[T],
    buf: *mut T,
    cap: usize,
    len: *mut usize,
) -> Result<(), PhStatus> {
    *out_ref(len)? = items.len();
    if items.is_empty() {
        return Ok(());
    }
    if cap < items.len() {
        return Err(PhStatus::BufferTooSmall);
    }
    if buf.is_null() {
        return Err(PhStatus::NullPointer);
    }
    ptr::copy_nonoverlapping(items.as_ptr(), buf, items.len());
    Ok(())
}

/// Static, NUL-terminated description of a status code.
#[no_mangle]
pub extern "C" fn ph_status_message(status: PhStatus) -> *const c_char {
    let msg: &'static CStr = match status {
        PhStatus::Ok => c"ok",
        PhStatus::NotDominant => c"weight is not dominant (need x >= y >= z)",
        PhStatus::NotACharacter => c"multiset is not the character of a representation",
        PhStatus::DegreeOutOfRange => c"degree p outside [0, 6r]",
        PhStatus::NullPointer => c"null pointer argument",
        PhStatus::BufferTooSmall => c"output buffer too small",
        PhStatus::InvalidArgument => c"invalid argument",
        PhStatus::Overflow => c"value does not fit the output type",
        PhStatus::Panic => c"internal error",
    };
    msg.as_ptr()
}

#[no_mangle]
pub extern "C" fn ph_is_dominant(chi: PhCharacter) -> bool {
    TorusCharacter::from(chi).is_dominant()
}

/// Length of the Weyl element with zero-based images `images[0..3]`.
///
/// # Safety
/// `images` must point to three readable bytes; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ph_weyl_length(images: *const u8, out: *mut u32) -> PhStatus {
    guard(|| {
        let sigma = weyl(images)?;
        *out_ref(out)? = sigma.length();
        Ok(())
    })
}

/// `σ(λ + ρ) − ρ`.
///
/// # Safety
/// `images` must point to three readable bytes; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ph_rho_shift(
    images: *const u8,
    lambda: PhCharacter,
    out: *mut PhCharacter,
) -> PhStatus {
    guard(|| {
        let sigma = weyl(images)?;
        *out_ref(out)? = rho_shift(&sigma, &lambda.into()).into();
        Ok(())
    })
}

/// Characters of `H^k(W, F_λ)`, lexicographically sorted.
///
/// # Safety
/// `out` must have room for `cap` elements; `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ph_kostant_cohomology(
    lambda: PhCharacter,
    k: u32,
    out: *mut PhCharacter,
    cap: usize,
    len: *mut usize,
) -> PhStatus {
    guard(|| {
        let lambda = dominant(lambda)?;
        let items: Vec<PhCharacter> = kostant_cohomology(&lambda, k)
            .into_iter()
            .map(Into::into)
            .collect();
        write_slice(&items, out, cap, len)
    })
}

/// Hodge types of `R^k i^* j_* μ(F_λ)`.
///
/// # Safety
/// `out` must have room for `cap` elements; `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ph_degeneration_types(
    lambda: PhCharacter,
    k: u32,
    out: *mut PhHodgeType,
    cap: usize,
    len: *mut usize,
) -> PhStatus {
    guard(|| {
        let lambda = dominant(lambda)?;
        let items: Vec<PhHodgeType> = degeneration_types(&lambda, k)
            .into_iter()
            .map(|t| PhHodgeType { p: t.p, q: t.q })
            .collect();
        write_slice(&items, out, cap, len)
    })
}

/// Weights of `R^k i^* j_* μ(F_λ)`.
///
/// # Safety
/// `out` must have room for `cap` elements; `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ph_degeneration_weights(
    lambda: PhCharacter,
    k: u32,
    out: *mut i64,
    cap: usize,
    len: *mut usize,
) -> PhStatus {
    guard(|| {
        let lambda = dominant(lambda)?;
        write_slice(&degeneration_weights(&lambda, k), out, cap, len)
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ph_vhs_weight(lambda: PhCharacter, out: *mut i64) -> PhStatus {
    guard(|| {
        let lambda = dominant(lambda)?;
        *out_ref(out)? = vhs_weight(&lambda);
        Ok(())
    })
}

/// The six values `k - w + w̄`, sorted ascending.
///
/// # Safety
/// `out` must have room for six elements.
#[no_mangle]
pub unsafe extern "C" fn ph_avoidance_list(lambda: PhCharacter, out: *mut i64) -> PhStatus {
    guard(|| {
        let lambda = dominant(lambda)?;
        let list = avoidance_list(&lambda);
        let mut len = 0usize;
        write_slice(&list, out, list.len(), &mut len)
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ph_is_generic(lambda: PhCharacter, out: *mut bool) -> PhStatus {
    guard(|| {
        let lambda = dominant(lambda)?;
        *out_ref(out)? = is_generic(&lambda);
        Ok(())
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ph_irrep_dimension(lambda: PhCharacter, out: *mut u64) -> PhStatus {
    guard(|| {
        let lambda = dominant(lambda)?;
        *out_ref(out)? = irrep_dimension(&lambda);
        Ok(())
    })
}

/// Whether `F_λ` occurs in `∧^p(F_{0,0,-1,0}^r ⊕ F_{1,0,0,-1}^r)`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ph_lemma_predicate(
    lambda: PhCharacter,
    r: u32,
    p: u32,
    out: *mut bool,
) -> PhStatus {
    guard(|| {
        let lambda = dominant(lambda)?;
        *out_ref(out)? = lemma_predicate(&lambda, r, p);
        Ok(())
    })
}

/// Decomposes `∧^p(F_{0,0,-1,0}^r ⊕ F_{1,0,0,-1}^r)`. The handle written to
/// `*out` must be released with [`ph_decomposition_free`].
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ph_decomposition_new(
    r: u32,
    p: u32,
    out: *mut *mut PhDecomposition,
) -> PhStatus {
    guard(|| {
        let slot = out_ref(out)?;
        *slot = ptr::null_mut();
        let inner = decompose(&exterior_power_weights(r, p))?;
        *slot = Box::into_raw(Box::new(PhDecomposition { inner }));
        Ok(())
    })
}

/// Number of irreducible terms; 0 for a null handle.
///
/// # Safety
/// `handle` must be null or come from [`ph_decomposition_new`].
#[no_mangle]
pub unsafe extern "C" fn ph_decomposition_len(handle: *const PhDecomposition) -> usize {
    handle.as_ref().map_or(0, |h| h.inner.terms.len())
}

/// Highest weight and multiplicity of term `index`.
///
/// # Safety
/// `handle` must come from [`ph_decomposition_new`]; the out-pointers must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn ph_decomposition_term(
    handle: *const PhDecomposition,
    index: usize,
    highest_weight: *mut PhCharacter,
    multiplicity: *mut u64,
) -> PhStatus {
    guard(|| {
        let h = handle.as_ref().ok_or(PhStatus::NullPointer)?;
        let (lambda, mult) = h.inner.terms.get(index).ok_or(PhStatus::InvalidArgument)?;
        let mult = mult.to_u64().ok_or(PhStatus::Overflow)?;
        *out_ref(highest_weight)? = lambda.character().into();
        *out_ref(multiplicity)? = mult;
        Ok(())
    })
}

/// # Safety
/// `handle` must be null or come from [`ph_decomposition_new`], and must not
/// be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ph_decomposition_free(handle: *mut PhDecomposition) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Closed-form weight sets for `(r, p)`. Empty for `p > 6r`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ph_weight_sets_predicted(
    r: u32,
    p: u32,
    out: *mut *mut PhWeightSets,
) -> PhStatus {
    guard(|| {
        let slot = out_ref(out)?;
        *slot = Box::into_raw(Box::new(PhWeightSets {
            inner: predicted_weight_sets(r, p),
        }));
        Ok(())
    })
}

/// Weight sets from the decomposition of `∧^p`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ph_weight_sets_computed(
    r: u32,
    p: u32,
    out: *mut *mut PhWeightSets,
) -> PhStatus {
    guard(|| {
        let slot = out_ref(out)?;
        *slot = ptr::null_mut();
        let inner = computed_weight_sets(r, p)?;
        *slot = Box::into_raw(Box::new(PhWeightSets { inner }));
        Ok(())
    })
}

/// Sorted weights in degree `k`.
///
/// # Safety
/// `handle` must come from one of the `ph_weight_sets_*` constructors; `out`
/// must have room for `cap` elements; `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ph_weight_sets_get(
    handle: *const PhWeightSets,
    k: u32,
    out: *mut i64,
    cap: usize,
    len: *mut usize,
) -> PhStatus {
    guard(|| {
        let h = handle.as_ref().ok_or(PhStatus::NullPointer)?;
        let items: Vec<i64> = h.inner.get(&k).into_iter().flatten().copied().collect();
        write_slice(&items, out, cap, len)
    })
}

/// # Safety
/// Both handles must be null or valid.
#[no_mangle]
pub unsafe extern "C" fn ph_weight_sets_equal(
    a: *const PhWeightSets,
    b: *const PhWeightSets,
) -> bool {
    match (a.as_ref(), b.as_ref()) {
        (Some(a), Some(b)) => a.inner == b.inner,
        _ => false,
    }
}

/// # Safety
/// `handle` must be null or valid, and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ph_weight_sets_free(handle: *mut PhWeightSets) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Runs every check for one `(r, p)` and reports whether all passed.
///
/// # Safety
/// `passed` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ph_verify_case(r: u32, p: u32, passed: *mut bool) -> PhStatus {
    guard(|| {
        if r == 0 {
            return Err(PhStatus::InvalidArgument);
        }
        if u64::from(p) > 6 * u64::from(r) {
            return Err(PhStatus::DegreeOutOfRange);
        }
        let verdict = verify_case(r, p)?;
        *out_ref(passed)? = verdict.passed();
        Ok(())
    })
}
