//! The inner loop of son construction: decrement every destination lane whose
//! source lane is nonzero.
//!
//! For lane `i < len`: `dst[i] -= (src[i] != 0) as u8`. Lanes at `len` and
//! beyond are never written. The vector kernels follow the compare/and-not/
//! subtract sequence: compare each source lane with zero to get an all-ones
//! mask on zero lanes, and-not the mask against a broadcast `1` to get a 0/1
//! lane, then subtract that lane from the destination.
//!
//! Every kernel subtracts with per-lane wrap-around, so all of them agree
//! bit for bit even on inputs that break the no-underflow precondition.

use std::fmt;
use std::str::FromStr;

/// Lane count of the SIMD block used by [`decrement_where_nonzero_vector`].
#[cfg(target_arch = "x86_64")]
pub const VECTOR_WIDTH: usize = 16;
#[cfg(not(target_arch = "x86_64"))]
pub const VECTOR_WIDTH: usize = SWAR_WIDTH;

/// Lanes packed into one `u64` by [`decrement_where_nonzero_swar`].
pub const SWAR_WIDTH: usize = 8;

/// Which implementation of the decrement loop to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Kernel {
    Scalar,
    #[default]
    Vector,
}

impl Kernel {
    /// Runs the kernel on `len` lanes. Only the view lengths are checked;
    /// the no-underflow precondition is left to the caller.
    #[inline]
    pub fn apply(self, src: &[u8], dst: &mut [u8], len: usize) {
        let (src, dst) = (&src[..len], &mut dst[..len]);
        match self {
            Kernel::Scalar => scalar_unchecked(src, dst),
            #[cfg(target_arch = "x86_64")]
            Kernel::Vector => sse2::run(src, dst),
            #[cfg(not(target_arch = "x86_64"))]
            Kernel::Vector => swar_unchecked(src, dst),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Kernel::Scalar => "scalar",
            Kernel::Vector => "vector",
        }
    }

    /// Human-readable description of the instruction set actually used.
    pub fn backend(self) -> &'static str {
        match self {
            Kernel::Scalar => "scalar",
            #[cfg(target_arch = "x86_64")]
            Kernel::Vector => "sse2 (16 lanes)",
            #[cfg(not(target_arch = "x86_64"))]
            Kernel::Vector => "swar (8 lanes)",
        }
    }
}

impl fmt::Display for Kernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownKernel(pub String);

impl fmt::Display for UnknownKernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "unknown kernel `{}` (expected scalar, vector or auto)",
            self.0
        )
    }
}

impl std::error::Error for UnknownKernel {}

impl FromStr for Kernel {
    type Err = UnknownKernel;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "scalar" => Ok(Kernel::Scalar),
            "vector" | "auto" => Ok(Kernel::Vector),
            other => Err(UnknownKernel(other.to_owned())),
        }
    }
}

#[inline]
fn check_views(src: &[u8], dst: &[u8], len: usize) {
    assert!(
        src.len() >= len && dst.len() >= len,
        "kernel view shorter than len"
    );
    debug_assert!(
        src.iter()
            .zip(dst.iter())
            .take(len)
            .all(|(&s, &d)| s == 0 || d >= 1),
        "destination lane would underflow"
    );
}

/// Reference implementation, one lane at a time.
pub fn decrement_where_nonzero_scalar(src: &[u8], dst: &mut [u8], len: usize) {
    check_views(src, dst, len);
    scalar_unchecked(&src[..len], &mut dst[..len]);
}

#[inline]
fn scalar_unchecked(src: &[u8], dst: &mut [u8]) {
    for (d, &s) in dst.iter_mut().zip(src) {
        if s != 0 {
            *d = d.wrapping_sub(1);
        }
    }
}

/// Block-wise implementation. Accepts any starting offsets; the final
/// `len % VECTOR_WIDTH` lanes go through the scalar loop.
pub fn decrement_where_nonzero_vector(src: &[u8], dst: &mut [u8], len: usize) {
    check_views(src, dst, len);
    #[cfg(target_arch = "x86_64")]
    sse2::run(&src[..len], &mut dst[..len]);
    #[cfg(not(target_arch = "x86_64"))]
    swar_unchecked(&src[..len], &mut dst[..len]);
}

/// Portable eight-lanes-per-`u64` implementation.
pub fn decrement_where_nonzero_swar(src: &[u8], dst: &mut [u8], len: usize) {
    check_views(src, dst, len);
    swar_unchecked(&src[..len], &mut dst[..len]);
}

const LOW7: u64 = 0x7f7f_7f7f_7f7f_7f7f;
const HIGH: u64 = 0x8080_8080_8080_8080;

/// 0x01 in every byte of `x` that is nonzero, 0x00 elsewhere.
#[inline]
fn nonzero_lanes(x: u64) -> u64 {
    // Bit 7 of each byte ends up set iff the byte is nonzero; the addition
    // cannot carry out of a byte.
    let t = ((x & LOW7).wrapping_add(LOW7)) | x;
    (t >> 7) & 0x0101_0101_0101_0101
}

/// Per-byte wrapping subtraction.
#[inline]
fn sub_lanes(a: u64, b: u64) -> u64 {
    ((a | HIGH).wrapping_sub(b & !HIGH)) ^ ((a ^ !b) & HIGH)
}

fn swar_unchecked(src: &[u8], dst: &mut [u8]) {
    let mut src_blocks = src.chunks_exact(SWAR_WIDTH);
    let mut dst_blocks = dst.chunks_exact_mut(SWAR_WIDTH);
    for (s, d) in (&mut src_blocks).zip(&mut dst_blocks) {
        let s = u64::from_le_bytes(s.try_into().unwrap());
        let v = u64::from_le_bytes((&*d).try_into().unwrap());
        d.copy_from_slice(&sub_lanes(v, nonzero_lanes(s)).to_le_bytes());
    }
    scalar_unchecked(src_blocks.remainder(), dst_blocks.into_remainder());
}

#[cfg(target_arch = "x86_64")]
mod sse2 {
    use core::arch::x86_64::{
        __m128i, _mm_andnot_si128, _mm_cmpeq_epi8, _mm_loadu_si128, _mm_set1_epi8,
        _mm_setzero_si128, _mm_storeu_si128, _mm_sub_epi8,
    };

    use super::VECTOR_WIDTH;

    pub(super) fn run(src: &[u8], dst: &mut [u8]) {
        debug_assert_eq!(src.len(), dst.len());
        let blocks = src.len() / VECTOR_WIDTH;
        // SSE2 is part of the x86_64 baseline.
        unsafe {
            let zero = _mm_setzero_si128();
            let one = _mm_set1_epi8(1);
            for b in 0..blocks {
                let offset = b * VECTOR_WIDTH;
                // SAFETY: offset + 16 <= len for every full block, and the
                // unaligned load/store variants impose no alignment.
                let s = _mm_loadu_si128(src.as_ptr().add(offset) as *const __m128i);
                let d = _mm_loadu_si128(dst.as_ptr().add(offset) as *const __m128i);
                let zero_mask = _mm_cmpeq_epi8(s, zero);
                let step = _mm_andnot_si128(zero_mask, one);
                _mm_storeu_si128(
                    dst.as_mut_ptr().add(offset) as *mut __m128i,
                    _mm_sub_epi8(d, step),
                );
            }
        }
        let tail = blocks * VECTOR_WIDTH;
        super::scalar_unchecked(&src[tail..], &mut dst[tail..]);
    }
}
