//! Basis blades as bitsets over `{0, 1, ..., n}`.
//!
//! Bit 0 is the origin unit `O`; bit `i >= 1` is the basis vector `v_i`.
//! A blade stands for the wedge of its units taken in ascending order.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::Error;

/// Largest supported affine dimension; a blade over `{0..=16}` fits a `u32`.
pub const MAX_DIM: usize = 16;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Blade(u32);

impl Blade {
    /// The empty blade, i.e. the scalar unit.
    pub const SCALAR: Blade = Blade(0);
    /// The origin unit `O`.
    pub const ORIGIN: Blade = Blade(1);

    pub const fn from_bits(bits: u32) -> Self {
        Blade(bits)
    }

    /// Builds a blade from a strictly ascending index list.
    pub fn from_indices(indices: &[usize]) -> Result<Self, Error> {
        let mut bits = 0u32;
        let mut last: Option<usize> = None;
        for &i in indices {
            if i > MAX_DIM || last.is_some_and(|l| i <= l) {
                return Err(Error::InvalidBlade);
            }
            bits |= 1 << i;
            last = Some(i);
        }
        Ok(Blade(bits))
    }

    /// Single unit: `0` for the origin, `i` for `v_i`.
    pub fn unit(index: usize) -> Self {
        debug_assert!(index <= MAX_DIM);
        Blade(1 << index)
    }

    /// The full blade `{0, 1, ..., n}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_DIM);
        Blade((1u32 << (n + 1)) - 1)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    pub const fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn contains(self, index: usize) -> bool {
        self.0 & (1 << index) != 0
    }

    pub const fn has_origin(self) -> bool {
        self.0 & 1 != 0
    }

    /// Largest index present, `None` for the scalar blade.
    pub fn max_index(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(31 - self.0.leading_zeros() as usize)
        }
    }

    pub fn fits(self, n: usize) -> bool {
        self.0 & !Blade::full(n).0 == 0
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..=MAX_DIM).filter(move |i| bits & (1 << i) != 0)
    }

    pub fn without(self, index: usize) -> Self {
        Blade(self.0 & !(1 << index))
    }

    /// Wedge of two blades: `None` when they share a unit, otherwise the
    /// merged blade and whether the merge permutation is odd.
    pub fn wedge(self, other: Blade) -> Option<(Blade, bool)> {
        if self.0 & other.0 != 0 {
            return None;
        }
        // Number of pairs (i in self, j in other) with i > j.
        let mut inversions = 0u32;
        let mut shifted = self.0 >> 1;
        while shifted != 0 {
            inversions += (shifted & other.0).count_ones();
            shifted >>= 1;
        }
        Some((Blade(self.0 | other.0), inversions % 2 == 1))
    }

    /// All blades of grade `k` over `{0..=n}`, in canonical order.
    pub fn all_of_grade(n: usize, k: usize) -> Vec<Blade> {
        let mut out: Vec<Blade> = (0..1u32 << (n + 1))
            .map(Blade)
            .filter(|b| b.grade() == k)
            .collect();
        out.sort();
        out
    }
}

impl Ord for Blade {
    /// Grade first, then lexicographic on the ascending index lists.
    fn cmp(&self, other: &Self) -> Ordering {
        self.grade().cmp(&other.grade()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & (diff & diff.wrapping_neg()) != 0 {
                // The smallest differing unit belongs to self.
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.indices()).finish()
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("1");
        }
        let mut first = true;
        for i in self.indices() {
            if !first {
                f.write_str("∧")?;
            }
            first = false;
            if i == 0 {
                f.write_str("O")?;
            } else {
                write!(f, "v{}", i)?;
            }
        }
        Ok(())
    }
}
