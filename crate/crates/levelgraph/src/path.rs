use std::fmt;

use crate::error::{Error, Result};
use crate::metric::LayerSide;
use crate::params::LevelParams;
use crate::vertex::VertexSet;

/// A permutation of the ground set `{1, …, n}` together with its inverse.
///
/// Shortest paths are constructed on a canonical interval layout and mapped
/// back through one of these; `canonicalize` builds the permutation that
/// sends an arbitrary vertex pair onto that layout.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabeling {
    forward: Vec<u8>,
    inverse: Vec<u8>,
}

impl Relabeling {
    /// The permutation sending `a ∩ b` to an initial interval, then `a \ b`,
    /// then `b \ a`, then the remaining elements, each block in ascending
    /// order.
    ///
    /// Under it, the image of `a` and `b` is a union of integer intervals
    /// whatever the input sets look like, which is the only shape the path
    /// constructions handle directly.
    pub fn canonicalize(a: &VertexSet, b: &VertexSet) -> Relabeling {
        debug_assert_eq!(a.universe(), b.universe());
        let n = a.universe();
        let mut forward = vec![0u8; n as usize];
        let mut next = 1u8;
        let blocks = [
            a.intersection(b),
            a.difference(b),
            b.difference(a),
            a.union(b).complement(),
        ];
        for block in blocks {
            for element in block.elements() {
                forward[(element - 1) as usize] = next;
                next += 1;
            }
        }
        let mut inverse = vec![0u8; n as usize];
        for (index, &image) in forward.iter().enumerate() {
            inverse[(image - 1) as usize] = (index + 1) as u8;
        }
        Relabeling { forward, inverse }
    }

    /// Applies the permutation to every member of a set.
    pub fn apply(&self, v: &VertexSet) -> VertexSet {
        map_elements(v, &self.forward)
    }

    /// Applies the inverse permutation to every member of a set.
    pub fn apply_inverse(&self, v: &VertexSet) -> VertexSet {
        map_elements(v, &self.inverse)
    }

    /// Image of one ground element.
    pub fn image(&self, element: u32) -> u32 {
        self.forward[(element - 1) as usize] as u32
    }
}

fn map_elements(v: &VertexSet, table: &[u8]) -> VertexSet {
    debug_assert_eq!(v.universe() as usize, table.len());
    let elements: Vec<u32> =
        v.elements().map(|e| table[(e - 1) as usize] as u32).collect();
    VertexSet::from_elements(v.universe(), &elements)
        .expect("permutation images stay inside the universe")
}

/// A walk through the graph witnessing a distance.
///
/// Every path this crate produces alternates strictly between the two
/// levels, never revisits a vertex, and has consecutive members related by
/// containment; [`validate`](Path::validate) re-checks all of that.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Path {
    params: LevelParams,
    vertices: Vec<VertexSet>,
}

impl Path {
    pub fn params(&self) -> LevelParams {
        self.params
    }

    pub fn vertices(&self) -> &[VertexSet] {
        &self.vertices
    }

    /// Number of edges, one less than the number of vertices.
    pub fn length(&self) -> u32 {
        (self.vertices.len() - 1) as u32
    }

    pub fn source(&self) -> &VertexSet {
        self.vertices.first().expect("paths are never empty")
    }

    pub fn target(&self) -> &VertexSet {
        self.vertices.last().expect("paths are never empty")
    }

    /// Re-checks every structural invariant: members are vertices,
    /// consecutive members are adjacent, levels strictly alternate, and no
    /// vertex repeats.
    pub fn validate(&self) -> std::result::Result<(), String> {
        if self.vertices.is_empty() {
            return Err("a path must contain at least its endpoint".into());
        }
        let mut seen = std::collections::HashSet::new();
        for v in &self.vertices {
            self.params.side_of(v).map_err(|e| e.to_string())?;
            if !seen.insert(v.bits()) {
                return Err(format!("vertex {v} repeats"));
            }
        }
        for pair in self.vertices.windows(2) {
            if pair[0].len() == pair[1].len() {
                return Err(format!("levels do not alternate at {} -> {}", pair[0], pair[1]));
            }
            match self.params.is_edge(&pair[0], &pair[1]) {
                Ok(true) => {}
                _ => return Err(format!("{} -> {} is not an edge", pair[0], pair[1])),
            }
        }
        Ok(())
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (index, v) in self.vertices.iter().enumerate() {
            if index > 0 {
                write!(f, " -> ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl LevelParams {
    /// Constructs a shortest path between two vertices.
    ///
    /// The pair is first sent onto the canonical interval layout by
    /// [`Relabeling::canonicalize`]; there the path is assembled from
    /// shifting interval unions — directly when the endpoints sit on
    /// different levels, via one reduction step or a common superset when
    /// both are small, and by the mirrored interval walk when both are
    /// large — and finally mapped back. The result always has length
    /// exactly [`distance`](LevelParams::distance), and identical inputs
    /// produce identical paths.
    ///
    /// ```
    /// use levelgraph::{LevelParams, VertexSet};
    /// let params = LevelParams::new(5, 2).unwrap();
    /// let a = VertexSet::from_elements(5, &[1, 2]).unwrap();
    /// let b = VertexSet::from_elements(5, &[1, 3, 4]).unwrap();
    /// let path = params.shortest_path(&a, &b).unwrap();
    /// assert_eq!(path.length(), 3);
    /// ```
    pub fn shortest_path(&self, a: &VertexSet, b: &VertexSet) -> Result<Path> {
        let side_a = self.side_of(a)?;
        let side_b = self.side_of(b)?;
        if self.n() > crate::vertex::MAX_UNIVERSE {
            return Err(Error::UniverseTooLarge { n: self.n(), max: crate::vertex::MAX_UNIVERSE });
        }

        // Build large -> small pairs in the small -> large direction.
        if side_a == LayerSide::Large && side_b == LayerSide::Small {
            let mut path = self.shortest_path(b, a)?;
            path.vertices.reverse();
            return Ok(path);
        }

        let relabeling = Relabeling::canonicalize(a, b);
        let common = a.intersection(b).len();
        let canonical = match (side_a, side_b) {
            (LayerSide::Small, LayerSide::Large) => self.mixed_pair_canonical(common),
            (LayerSide::Small, LayerSide::Small) => self.small_pair_canonical(common),
            (LayerSide::Large, LayerSide::Large) => self.large_pair_canonical(common),
            (LayerSide::Large, LayerSide::Small) => unreachable!("reoriented above"),
        };
        let vertices = canonical.iter().map(|v| relabeling.apply_inverse(v)).collect();
        let path = Path { params: *self, vertices };
        debug_assert_eq!(path.validate(), Ok(()));
        debug_assert_eq!(*path.source(), *a);
        debug_assert_eq!(*path.target(), *b);
        Ok(path)
    }

    /// Canonical path from `[1,k]` to `[1,i] ∪ [k+1, n-i]`, of length
    /// `2⌈(k-i)/gap⌉ + 1`: the upper interval of the small endpoint is
    /// pushed right in gap-sized steps, each step passing through the
    /// large set that covers both positions.
    fn mixed_pair_canonical(&self, common: u32) -> Vec<VertexSet> {
        let (n, k, t) = (self.n(), self.k(), self.gap());
        let i = common;
        let steps = (k - i).div_ceil(t);
        let mut vertices = Vec::with_capacity(2 * steps as usize + 2);
        let head = VertexSet::interval(n, 1, i);
        for j in 0..=steps {
            vertices.push(head.union(&VertexSet::interval(n, i + 1 + j * t, k + j * t)));
            if j < steps {
                vertices.push(head.union(&VertexSet::interval(n, i + 1 + j * t, k + (j + 1) * t)));
            }
        }
        vertices.push(head.union(&VertexSet::interval(n, k + 1, n - i)));
        vertices
    }

    /// Canonical path between the small sets `[1,k]` and `[1,i] ∪ [k+1, 2k-i]`.
    fn small_pair_canonical(&self, common: u32) -> Vec<VertexSet> {
        let (n, k, t) = (self.n(), self.k(), self.gap());
        let i = common;
        if i == k {
            return vec![VertexSet::interval(n, 1, k)];
        }
        let target = VertexSet::interval(n, 1, i)
            .union(&VertexSet::interval(n, k + 1, 2 * k - i));
        if k - i >= t {
            // One reduction step: the mixed-pair walk to
            // C = [1, i+t] ∪ [k+1, 2k-i], which contains the target and
            // meets the source in i + t elements, already ends one edge
            // short of the target.
            let mut vertices = self.mixed_pair_canonical(i + t);
            vertices.push(target);
            vertices
        } else {
            // The union has fewer than n - k elements; one common superset
            // suffices, completed with the smallest unused elements.
            vec![
                VertexSet::interval(n, 1, k),
                VertexSet::interval(n, 1, n - k),
                target,
            ]
        }
    }

    /// Canonical path between the large sets `[1, n-k]` and
    /// `[1,i] ∪ [n-k+1, 2(n-k)-i]`, of length `2⌈(n-k-i)/gap⌉`.
    fn large_pair_canonical(&self, common: u32) -> Vec<VertexSet> {
        let (n, k, t) = (self.n(), self.k(), self.gap());
        let large = self.large_size();
        let i = common;
        if i == large {
            return vec![VertexSet::interval(n, 1, large)];
        }
        let steps = (large - i).div_ceil(t);
        let head = VertexSet::interval(n, 1, i);
        let mut vertices = Vec::with_capacity(2 * steps as usize + 1);
        for j in 0..steps {
            vertices.push(head.union(&VertexSet::interval(n, i + 1 + j * t, large + j * t)));
            // The interval-union formula only yields a k-set while i <= k,
            // which holds whenever more than one descent is needed; a
            // single descent (i >= k) goes through the k smallest common
            // elements instead, and the two agree at i == k.
            if i >= k {
                vertices.push(VertexSet::interval(n, 1, k));
            } else {
                vertices
                    .push(head.union(&VertexSet::interval(n, i + 1 + (j + 1) * t, large + j * t)));
            }
        }
        vertices.push(head.union(&VertexSet::interval(n, large + 1, 2 * large - i)));
        vertices
    }
}
