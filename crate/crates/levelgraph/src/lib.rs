//! Distances, shortest paths, and reachability layers in the bipartite
//! level graphs `L(k,n)`.
//!
//! Fix a ground set `{1, …, n}` and a level size `k` with `2k < n`. The
//! vertices of `L(k,n)` are all k-element and all (n-k)-element subsets,
//! and a k-set is adjacent to exactly the (n-k)-sets containing it. This
//! crate provides:
//!
//! * a closed-form [`distance`](LevelParams::distance) between any two
//!   vertices, driven only by set sizes and the intersection size;
//! * a deterministic [`shortest_path`](LevelParams::shortest_path)
//!   constructor witnessing every distance;
//! * exact counts ([`gamma`](LevelParams::gamma),
//!   [`delta`](LevelParams::delta),
//!   [`count_at_distance`](LevelParams::count_at_distance)) and
//!   enumeration of the reachability layers around the initial vertex
//!   `P = {1, …, k}`, plus the two layer-sum identities that follow;
//! * a brute-force BFS [`oracle`] that materializes small graphs and
//!   certifies all of the above exhaustively.
//!
//! Counting is generic over an exact integer scalar (the [`Count`] trait):
//! use [`Count64`]/[`Count128`] when a fixed width is known to suffice —
//! overflow is detected, never silent — or [`BigCount`] for unbounded
//! universes.
//!
//! ```
//! use levelgraph::{LevelParams, VertexSet, Count64};
//!
//! let params = LevelParams::new(5, 2).unwrap();
//! let a = VertexSet::from_elements(5, &[1, 2]).unwrap();
//! let b = VertexSet::from_elements(5, &[4, 5]).unwrap();
//!
//! assert_eq!(params.distance(&a, &b).unwrap(), 4);
//! assert_eq!(params.shortest_path(&a, &b).unwrap().length(), 4);
//!
//! let f: Vec<u64> = (0..=5)
//!     .map(|x| params.count_at_distance::<Count64>(x).unwrap())
//!     .collect();
//! assert_eq!(f, [1, 3, 6, 6, 3, 1]);
//! ```

mod count;
mod error;
mod layers;
mod metric;
pub mod oracle;
mod params;
mod path;
mod vertex;

pub use count::{binom, Count};
pub use error::{Error, Result};
pub use layers::{IdentityReport, LayerTable, MAX_ENUMERATION_UNIVERSE};
pub use metric::{LayerIndex, LayerSide};
pub use params::LevelParams;
pub use path::{Path, Relabeling};
pub use vertex::{sets_of_size, VertexSet, MAX_UNIVERSE};

/// Fixed-width exact counter; enough for every layer table with `n <= 62`.
pub type Count64 = u64;

/// Wide fixed-width exact counter; enough for every layer table with
/// `n <= 128`.
pub type Count128 = u128;

/// Unbounded exact counter for counting-only use beyond the fixed widths.
pub type BigCount = num_bigint::BigUint;
