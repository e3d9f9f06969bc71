//! Canonical basis blades as bitmasks and the sign kernels of their products.
//!
//! Bit `i` of a mask set means the fiducial vector `b_{i+1}` is a factor.
//! Factors are always taken in ascending index order.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::error::{Error, Result};

/// Default upper bound on the ambient dimension.
pub const DEFAULT_MAX_DIM: usize = 12;

/// Hard limit imposed by the `u32` mask and dense `2ⁿ` storage.
pub const HARD_MAX_DIM: usize = 20;

static MAX_DIM: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_DIM);

/// Current dimension cap.
pub fn dimension_cap() -> usize {
    MAX_DIM.load(Ordering::Relaxed)
}

/// Overrides the dimension cap. Values are clamped to `1..=HARD_MAX_DIM`.
pub fn set_dimension_cap(cap: usize) -> usize {
    let cap = cap.clamp(1, HARD_MAX_DIM);
    MAX_DIM.store(cap, Ordering::Relaxed);
    cap
}

pub(crate) fn check_dim(dim: usize) -> Result<()> {
    let cap = dimension_cap();
    if dim == 0 || dim > cap {
        return Err(Error::DimensionOutOfRange { dim, cap });
    }
    Ok(())
}

/// A canonical basis blade `b_{i₁}∧…∧b_{iₖ}`, `i₁ < … < iₖ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BladeIndex(pub u32);

impl BladeIndex {
    pub const SCALAR: BladeIndex = BladeIndex(0);

    /// Blade of a single fiducial vector, zero-based.
    pub fn vector(i: usize) -> Self {
        BladeIndex(1 << i)
    }

    /// Blade from zero-based factor indices (any order, duplicates rejected by `None`).
    pub fn from_factors(factors: &[usize]) -> Option<Self> {
        let mut mask = 0u32;
        for &i in factors {
            let bit = 1u32.checked_shl(i as u32)?;
            if mask & bit != 0 {
                return None;
            }
            mask |= bit;
        }
        Some(BladeIndex(mask))
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    /// Zero-based factor indices in ascending order.
    pub fn factors(self) -> impl Iterator<Item = usize> {
        let mut m = self.0;
        std::iter::from_fn(move || {
            if m == 0 {
                None
            } else {
                let i = m.trailing_zeros() as usize;
                m &= m - 1;
                Some(i)
            }
        })
    }

    pub fn fits(self, dim: usize) -> bool {
        (self.0 as u64) < (1u64 << dim)
    }
}

/// `true` when bringing `a·b` (concatenated ascending factor lists) into
/// ascending order takes an odd number of transpositions.
#[inline]
pub fn reorder_is_odd(a: u32, b: u32) -> bool {
    let mut a = a >> 1;
    let mut swaps = 0u32;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    swaps & 1 == 1
}

#[inline]
fn signed(odd: bool) -> i8 {
    if odd {
        -1
    } else {
        1
    }
}

/// `a ∧ b` on blades: sign and result mask, or `None` if they share a factor.
#[inline]
pub fn wedge(a: u32, b: u32) -> Option<(i8, u32)> {
    if a & b != 0 {
        None
    } else {
        Some((signed(reorder_is_odd(a, b)), a | b))
    }
}

/// Euclidean left contraction `a ⌟ b`: nonzero only when `a ⊆ b`.
#[inline]
pub fn left_contract(a: u32, b: u32) -> Option<(i8, u32)> {
    if a & b != a {
        None
    } else {
        Some((signed(reorder_is_odd(a, b)), a ^ b))
    }
}

/// Euclidean right contraction `a ⌞ b`: nonzero only when `b ⊆ a`.
#[inline]
pub fn right_contract(a: u32, b: u32) -> Option<(i8, u32)> {
    if a & b != b {
        None
    } else {
        Some((signed(reorder_is_odd(a, b)), a ^ b))
    }
}

/// Clifford product of orthonormal blades: `sign · (a xor b)`.
#[inline]
pub fn euclidean_product(a: u32, b: u32) -> (i8, u32) {
    (signed(reorder_is_odd(a, b)), a ^ b)
}

/// Clifford product of blades for a diagonal metric whose negative
/// directions are the set bits of `negative`.
#[inline]
pub fn diagonal_product(a: u32, b: u32, negative: u32) -> (i8, u32) {
    let odd = reorder_is_odd(a, b) ^ ((a & b & negative).count_ones() & 1 == 1);
    (signed(odd), a ^ b)
}

/// `(-1)^k` for the grade involution.
#[inline]
pub fn hat_sign(grade: usize) -> i8 {
    if grade % 2 == 1 {
        -1
    } else {
        1
    }
}

/// `(-1)^{k(k-1)/2}` for reversion.
#[inline]
pub fn tilde_sign(grade: usize) -> i8 {
    if (grade / 2) % 2 == 1 {
        -1
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Sign of sorting a word of distinct indices by counting inversions.
    fn inversion_sign(word: &[usize]) -> i8 {
        let mut inv = 0;
        for i in 0..word.len() {
            for j in i + 1..word.len() {
                if word[i] > word[j] {
                    inv += 1;
                }
            }
        }
        if inv % 2 == 1 {
            -1
        } else {
            1
        }
    }

    #[test]
    fn reorder_sign_matches_inversion_count() {
        for a in 0u32..64 {
            for b in 0u32..64 {
                if a & b != 0 {
                    continue;
                }
                let word: Vec<usize> = BladeIndex(a).factors().chain(BladeIndex(b).factors()).collect();
                assert_eq!(wedge(a, b).unwrap().0, inversion_sign(&word), "a={a} b={b}");
            }
        }
    }

    #[test]
    fn basic_wedges() {
        assert_eq!(wedge(0b01, 0b01), None);
        assert_eq!(wedge(0b01, 0b10), Some((1, 0b11)));
        assert_eq!(wedge(0b10, 0b01), Some((-1, 0b11)));
    }

    #[test]
    fn contraction_examples() {
        assert_eq!(left_contract(0b001, 0b011), Some((1, 0b010)));
        assert_eq!(left_contract(0b011, 0b001), None);
        assert_eq!(left_contract(0b011, 0b111), Some((-1, 0b100)));
        assert_eq!(right_contract(0b011, 0b001), Some((-1, 0b010)));
    }

    #[test]
    fn diagonal_product_signs() {
        // b2 b2 = -1 with b2 negative
        assert_eq!(diagonal_product(0b10, 0b10, 0b10), (-1, 0));
        assert_eq!(diagonal_product(0b01, 0b01, 0b10), (1, 0));
        assert_eq!(euclidean_product(0b01, 0b11), (1, 0b10));
    }

    #[test]
    fn involution_signs() {
        let hats: Vec<i8> = (0..5).map(hat_sign).collect();
        let tildes: Vec<i8> = (0..5).map(tilde_sign).collect();
        assert_eq!(hats, vec![1, -1, 1, -1, 1]);
        assert_eq!(tildes, vec![1, 1, -1, -1, 1]);
    }

    #[test]
    fn factors_ascending() {
        let b = BladeIndex::from_factors(&[3, 0, 2]).unwrap();
        assert_eq!(b.factors().collect::<Vec<_>>(), vec![0, 2, 3]);
        assert_eq!(b.grade(), 3);
        assert!(BladeIndex::from_factors(&[1, 1]).is_none());
    }
}
