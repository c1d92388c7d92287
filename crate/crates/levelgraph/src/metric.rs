use std::fmt;

use crate::error::Result;
use crate::params::LevelParams;
use crate::vertex::VertexSet;

/// Which of the two levels a vertex belongs to.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub enum LayerSide {
    /// The k-element level.
    Small,
    /// The (n-k)-element level.
    Large,
}

/// Position of a vertex relative to the initial vertex `P = {1, …, k}`.
///
/// A small-side index `i` encodes distance `2i` from `P`; a large-side
/// index `i` encodes distance `2i + 1`.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub struct LayerIndex {
    pub side: LayerSide,
    pub index: u32,
}

impl LayerIndex {
    pub fn new(side: LayerSide, index: u32) -> Self {
        LayerIndex { side, index }
    }

    /// The distance from the initial vertex this layer encodes.
    pub fn distance(&self) -> u32 {
        match self.side {
            LayerSide::Small => 2 * self.index,
            LayerSide::Large => 2 * self.index + 1,
        }
    }
}

impl fmt::Display for LayerIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.side {
            LayerSide::Small => write!(f, "small:{}", self.index),
            LayerSide::Large => write!(f, "large:{}", self.index),
        }
    }
}

impl LevelParams {
    /// Graph distance between two vertices, in closed form.
    ///
    /// With `i = |A ∩ B|` and `t` the gap, the distance is
    /// `2⌈(k - i)/t⌉ + 1` for vertices on different levels and
    /// `2⌈(|A| - i)/t⌉` for vertices on the same level. The value equals
    /// the length of a shortest path, which
    /// [`shortest_path`](LevelParams::shortest_path) constructs and the
    /// oracle module certifies by exhaustive BFS.
    ///
    /// ```
    /// use levelgraph::{LevelParams, VertexSet};
    /// let params = LevelParams::new(5, 2).unwrap();
    /// let a = VertexSet::from_elements(5, &[1, 2]).unwrap();
    /// let b = VertexSet::from_elements(5, &[3, 4, 5]).unwrap();
    /// assert_eq!(params.distance(&a, &b).unwrap(), 5);
    /// ```
    pub fn distance(&self, a: &VertexSet, b: &VertexSet) -> Result<u32> {
        let side_a = self.side_of(a)?;
        let side_b = self.side_of(b)?;
        let common = a.intersection(b).len();
        let distance = if side_a == side_b {
            2 * (a.len() - common).div_ceil(self.gap())
        } else {
            2 * (self.k() - common).div_ceil(self.gap()) + 1
        };
        Ok(distance)
    }

    /// The layer of a vertex relative to the initial vertex `P`, consistent
    /// with `distance(P, v)`.
    pub fn classify(&self, v: &VertexSet) -> Result<LayerIndex> {
        let side = self.side_of(v)?;
        let initial = self.initial_vertex()?;
        let moved_out = self.k() - initial.intersection(v).len();
        Ok(LayerIndex::new(side, moved_out.div_ceil(self.gap())))
    }
}
