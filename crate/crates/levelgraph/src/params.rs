use std::fmt;

use crate::error::{Error, Result};
use crate::metric::LayerSide;
use crate::vertex::{VertexSet, MAX_UNIVERSE};

/// Validated parameters of a level graph: the universe size `n` and the
/// small level size `k`, with `2k < n`.
///
/// Two derived quantities drive every formula in the crate:
/// * [`gap`](LevelParams::gap) `= n - 2k`, how much one down-up (or up-down)
///   step can shift a set;
/// * [`radius`](LevelParams::radius) `= ⌈k / gap⌉`, the largest layer index
///   reachable from the initial vertex.
///
/// Parameters alone never materialize vertices, so `n` may exceed the
/// 64-element universe cap; only operations that build concrete sets
/// enforce it.
#[derive(Copy, Clone, PartialEq, Eq, Hash)]
pub struct LevelParams {
    n: u32,
    k: u32,
    gap: u32,
    radius: u32,
}

impl LevelParams {
    /// Validates `(n, k)` and derives the gap and radius.
    ///
    /// ```
    /// use levelgraph::LevelParams;
    /// let params = LevelParams::new(5, 2).unwrap();
    /// assert_eq!((params.gap(), params.radius()), (1, 2));
    /// assert!(LevelParams::new(6, 3).is_err());
    /// ```
    pub fn new(n: u32, k: u32) -> Result<Self> {
        if 2 * (k as u64) >= n as u64 {
            return Err(Error::DegenerateLevels { n, k });
        }
        let gap = n - 2 * k;
        let radius = k.div_ceil(gap);
        Ok(LevelParams { n, k, gap, radius })
    }

    /// All valid parameter pairs with this universe size, by ascending `k`.
    pub fn all_for(n: u32) -> impl Iterator<Item = LevelParams> {
        (0..).map_while(move |k| LevelParams::new(n, k).ok())
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// `n - 2k`.
    pub fn gap(&self) -> u32 {
        self.gap
    }

    /// `⌈k / gap⌉`; distances range over `0..=2 * radius + 1`.
    pub fn radius(&self) -> u32 {
        self.radius
    }

    /// Cardinality of the large level, `n - k`.
    pub fn large_size(&self) -> u32 {
        self.n - self.k
    }

    /// The initial vertex `P = {1, …, k}`.
    pub fn initial_vertex(&self) -> Result<VertexSet> {
        if self.n > MAX_UNIVERSE {
            return Err(Error::UniverseTooLarge { n: self.n, max: MAX_UNIVERSE });
        }
        Ok(VertexSet::interval(self.n, 1, self.k))
    }

    /// True iff one argument is a k-set, the other an (n-k)-set, and the
    /// smaller is contained in the larger. Symmetric in its arguments.
    ///
    /// Sets whose cardinality is neither `k` nor `n - k` are not vertices
    /// and are rejected.
    pub fn is_edge(&self, a: &VertexSet, b: &VertexSet) -> Result<bool> {
        let side_a = self.side_of(a)?;
        let side_b = self.side_of(b)?;
        Ok(match (side_a, side_b) {
            (LayerSide::Small, LayerSide::Large) => a.is_subset_of(b),
            (LayerSide::Large, LayerSide::Small) => b.is_subset_of(a),
            _ => false,
        })
    }

    /// Which level a vertex belongs to; errors on malformed cardinality
    /// or a foreign universe.
    pub fn side_of(&self, v: &VertexSet) -> Result<LayerSide> {
        if v.universe() != self.n {
            return Err(Error::UniverseMismatch { expected: self.n, got: v.universe() });
        }
        let cardinality = v.len();
        if cardinality == self.k {
            Ok(LayerSide::Small)
        } else if cardinality == self.large_size() {
            Ok(LayerSide::Large)
        } else {
            Err(Error::WrongCardinality { cardinality, k: self.k, n: self.n })
        }
    }
}

impl fmt::Display for LevelParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.k, self.n)
    }
}

impl fmt::Debug for LevelParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{}) gap={} radius={}", self.k, self.n, self.gap, self.radius)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derives_gap_and_radius() {
        let p = LevelParams::new(5, 2).unwrap();
        assert_eq!((p.n(), p.k(), p.gap(), p.radius()), (5, 2, 1, 2));
        let p = LevelParams::new(8, 3).unwrap();
        assert_eq!((p.gap(), p.radius()), (2, 2));
    }

    #[test]
    fn rejects_degenerate_levels() {
        assert_eq!(LevelParams::new(6, 3), Err(Error::DegenerateLevels { n: 6, k: 3 }));
        assert_eq!(LevelParams::new(4, 2), Err(Error::DegenerateLevels { n: 4, k: 2 }));
        assert_eq!(LevelParams::new(0, 0), Err(Error::DegenerateLevels { n: 0, k: 0 }));
    }

    #[test]
    fn k_zero_is_a_valid_degenerate_graph() {
        let p = LevelParams::new(2, 0).unwrap();
        assert_eq!((p.gap(), p.radius()), (2, 0));
        assert_eq!(p.initial_vertex().unwrap(), VertexSet::empty(2));
    }

    #[test]
    fn counting_only_params_may_exceed_the_materialization_cap() {
        let p = LevelParams::new(1000, 400).unwrap();
        assert_eq!(p.gap(), 200);
        assert_eq!(p.radius(), 2);
        assert!(p.initial_vertex().is_err());
    }

    #[test]
    fn edge_requires_containment_across_levels() {
        let p = LevelParams::new(5, 2).unwrap();
        let small = |e: &[u32]| VertexSet::from_elements(5, e).unwrap();
        assert!(p.is_edge(&small(&[1, 2]), &small(&[1, 2, 3])).unwrap());
        assert!(p.is_edge(&small(&[1, 2, 3]), &small(&[1, 2])).unwrap());
        assert!(!p.is_edge(&small(&[1, 2]), &small(&[3, 4, 5])).unwrap());
        assert!(!p.is_edge(&small(&[1, 2]), &small(&[1, 3])).unwrap());
    }

    #[test]
    fn edge_rejects_malformed_cardinality() {
        let p = LevelParams::new(5, 2).unwrap();
        let bad = VertexSet::from_elements(5, &[1]).unwrap();
        let ok = VertexSet::from_elements(5, &[1, 2]).unwrap();
        assert_eq!(
            p.is_edge(&bad, &ok),
            Err(Error::WrongCardinality { cardinality: 1, k: 2, n: 5 })
        );
    }

    #[test]
    fn all_for_lists_every_valid_k() {
        let ks: Vec<u32> = LevelParams::all_for(10).map(|p| p.k()).collect();
        assert_eq!(ks, vec![0, 1, 2, 3, 4]);
        assert_eq!(LevelParams::all_for(1).count(), 1);
        assert_eq!(LevelParams::all_for(0).count(), 0);
    }
}
