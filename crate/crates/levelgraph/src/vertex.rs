use std::fmt;

use crate::error::{Error, Result};

/// Largest universe for which vertices can be materialized as bit masks.
pub const MAX_UNIVERSE: u32 = 64;

/// A subset of the ground set `{1, …, n}`, stored as a 64-bit mask.
///
/// Bit `e - 1` is set exactly when element `e` is a member. Two sets over
/// the same universe are equal iff their masks are equal; ordering compares
/// masks numerically, which is the canonical enumeration order used
/// throughout the crate.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    bits: u64,
    n: u8,
}

impl VertexSet {
    /// The empty subset of `{1, …, n}`.
    pub fn empty(n: u32) -> Self {
        assert!(n <= MAX_UNIVERSE, "universe size {n} exceeds {MAX_UNIVERSE}");
        VertexSet { bits: 0, n: n as u8 }
    }

    /// The full ground set `{1, …, n}`.
    pub fn full(n: u32) -> Self {
        VertexSet::empty(n).complement()
    }

    /// Builds a set from 1-based element labels. Duplicates collapse.
    pub fn from_elements(n: u32, elements: &[u32]) -> Result<Self> {
        if n > MAX_UNIVERSE {
            return Err(Error::UniverseTooLarge { n, max: MAX_UNIVERSE });
        }
        let mut bits = 0u64;
        for &element in elements {
            if element < 1 || element > n {
                return Err(Error::ElementOutOfRange { element, n });
            }
            bits |= 1 << (element - 1);
        }
        Ok(VertexSet { bits, n: n as u8 })
    }

    /// The interval `{lo, …, hi}` as a subset of `{1, …, n}`; empty when `lo > hi`.
    pub fn interval(n: u32, lo: u32, hi: u32) -> Self {
        assert!(n <= MAX_UNIVERSE);
        if lo > hi {
            return VertexSet::empty(n);
        }
        assert!(lo >= 1 && hi <= n, "interval [{lo},{hi}] leaves the ground set 1..={n}");
        let width = hi - lo + 1;
        let run = if width == 64 { u64::MAX } else { (1u64 << width) - 1 };
        VertexSet { bits: run << (lo - 1), n: n as u8 }
    }

    pub(crate) fn from_bits(n: u32, bits: u64) -> Self {
        debug_assert!(n <= MAX_UNIVERSE);
        debug_assert_eq!(bits & !universe_mask(n), 0);
        VertexSet { bits, n: n as u8 }
    }

    /// Raw membership mask.
    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Size of the ground set this subset lives in.
    pub fn universe(&self) -> u32 {
        self.n as u32
    }

    /// Number of members.
    pub fn len(&self) -> u32 {
        self.bits.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, element: u32) -> bool {
        element >= 1 && element <= self.n as u32 && self.bits & (1 << (element - 1)) != 0
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.n, other.n);
        VertexSet { bits: self.bits & other.bits, n: self.n }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.n, other.n);
        VertexSet { bits: self.bits | other.bits, n: self.n }
    }

    /// Members of `self` that are not members of `other`.
    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.n, other.n);
        VertexSet { bits: self.bits & !other.bits, n: self.n }
    }

    pub fn complement(&self) -> VertexSet {
        VertexSet { bits: !self.bits & universe_mask(self.n as u32), n: self.n }
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        debug_assert_eq!(self.n, other.n);
        self.bits & !other.bits == 0
    }

    /// Iterates the members in ascending order, as 1-based labels.
    pub fn elements(self) -> impl Iterator<Item = u32> {
        let mut bits = self.bits;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let position = bits.trailing_zeros();
                bits &= bits - 1;
                Some(position + 1)
            }
        })
    }
}

fn universe_mask(n: u32) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// All subsets of `{1, …, n}` with exactly `size` members, in ascending
/// mask order.
pub fn sets_of_size(n: u32, size: u32) -> impl Iterator<Item = VertexSet> {
    assert!(n < 64, "enumeration is limited to universes below 64 elements");
    let mut mask = if size == 0 { 0u64 } else { (1u64 << size) - 1 };
    let end = 1u64 << n;
    let mut exhausted = size > n;
    std::iter::from_fn(move || {
        if exhausted || mask >= end {
            return None;
        }
        let current = mask;
        if mask == 0 {
            exhausted = true;
        } else {
            // Gosper's hack: next mask with the same popcount.
            let lowest = mask & mask.wrapping_neg();
            let ripple = mask + lowest;
            mask = ripple | (((mask ^ ripple) >> 2) / lowest);
        }
        Some(VertexSet::from_bits(n, current))
    })
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (position, element) in self.elements().enumerate() {
            if position > 0 {
                write!(f, ",")?;
            }
            write!(f, "{element}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}/{}", self.n)
    }
}
