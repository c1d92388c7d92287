use std::collections::HashMap;
use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::metric::{LayerIndex, LayerSide};
use crate::params::LevelParams;
use crate::vertex::{sets_of_size, VertexSet};

/// Cap on universes the oracle will materialize.
pub const MAX_GRAPH_UNIVERSE: u32 = 20;
/// Cap on universes for exhaustive pair sweeps (BFS from every vertex).
pub const MAX_PAIR_SWEEP_UNIVERSE: u32 = 14;
/// Cap on universes for exhaustive triple sweeps.
pub const MAX_TRIPLE_SWEEP_UNIVERSE: u32 = 10;

/// The explicit graph: every vertex of both levels and every containment
/// edge, with BFS as the single source of ground truth.
///
/// Vertices are indexed with all k-sets first and all (n-k)-sets second,
/// each block in ascending mask order.
#[derive(Clone, Debug)]
pub struct AdjacencyGraph {
    params: LevelParams,
    vertices: Vec<VertexSet>,
    position: HashMap<u64, u32>,
    offsets: Vec<u32>,
    targets: Vec<u32>,
}

impl AdjacencyGraph {
    /// Materializes the full graph by superset enumeration.
    pub fn build(params: &LevelParams) -> Result<Self> {
        if params.n() > MAX_GRAPH_UNIVERSE {
            return Err(Error::UniverseTooLarge { n: params.n(), max: MAX_GRAPH_UNIVERSE });
        }
        let n = params.n();
        let mut vertices: Vec<VertexSet> = sets_of_size(n, params.k()).collect();
        let small_count = vertices.len();
        vertices.extend(sets_of_size(n, params.large_size()));

        let mut position = HashMap::with_capacity(vertices.len());
        for (index, v) in vertices.iter().enumerate() {
            position.insert(v.bits(), index as u32);
        }

        let mut adjacency: Vec<Vec<u32>> = vec![Vec::new(); vertices.len()];
        for small_index in 0..small_count {
            let small = vertices[small_index];
            let complement: Vec<u32> = small.complement().elements().collect();
            for extra in sets_of_size(complement.len() as u32, params.gap()) {
                let mut added: Vec<u32> =
                    extra.elements().map(|pos| complement[(pos - 1) as usize]).collect();
                added.extend(small.elements());
                let large = VertexSet::from_elements(n, &added)?;
                let large_index = position[&large.bits()] as usize;
                adjacency[small_index].push(large_index as u32);
                adjacency[large_index].push(small_index as u32);
            }
        }

        let mut offsets = Vec::with_capacity(vertices.len() + 1);
        let mut targets = Vec::new();
        offsets.push(0);
        for mut neighbors in adjacency {
            neighbors.sort_unstable();
            targets.extend_from_slice(&neighbors);
            offsets.push(targets.len() as u32);
        }
        Ok(AdjacencyGraph { params: *params, vertices, position, offsets, targets })
    }

    pub fn params(&self) -> LevelParams {
        self.params
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> u64 {
        self.targets.len() as u64 / 2
    }

    pub fn vertices(&self) -> &[VertexSet] {
        &self.vertices
    }

    pub fn index_of(&self, v: &VertexSet) -> Option<usize> {
        if v.universe() != self.params.n() {
            return None;
        }
        self.position.get(&v.bits()).map(|&index| index as usize)
    }

    pub fn neighbors(&self, index: usize) -> &[u32] {
        &self.targets[self.offsets[index] as usize..self.offsets[index + 1] as usize]
    }

    /// Unweighted shortest-path distances from one vertex to all others,
    /// indexed like [`vertices`](AdjacencyGraph::vertices).
    pub fn bfs_distances(&self, source: &VertexSet) -> Result<Vec<u32>> {
        let source_index =
            self.index_of(source).ok_or(Error::UnknownVertex { vertex: *source })?;
        Ok(self.bfs_from(source_index))
    }

    pub fn bfs_from(&self, source: usize) -> Vec<u32> {
        let mut distances = vec![u32::MAX; self.vertices.len()];
        distances[source] = 0;
        let mut queue = VecDeque::with_capacity(self.vertices.len());
        queue.push_back(source as u32);
        while let Some(current) = queue.pop_front() {
            let next_distance = distances[current as usize] + 1;
            for &neighbor in self.neighbors(current as usize) {
                if distances[neighbor as usize] == u32::MAX {
                    distances[neighbor as usize] = next_distance;
                    queue.push_back(neighbor);
                }
            }
        }
        distances
    }

    /// How many vertices sit at each distance from the source.
    pub fn distance_histogram(&self, source: &VertexSet) -> Result<Vec<u64>> {
        let distances = self.bfs_distances(source)?;
        let reach = *distances.iter().max().expect("graphs are nonempty");
        assert_ne!(reach, u32::MAX, "level graphs are connected");
        let mut histogram = vec![0u64; reach as usize + 1];
        for d in distances {
            histogram[d as usize] += 1;
        }
        Ok(histogram)
    }
}

/// How a verification sweep chooses its probes.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum SampleMode {
    /// Every pair and triple.
    Exhaustive,
    /// `count` pseudo-random triples from the given seed; reruns with the
    /// same seed probe the same triples.
    Sampled { count: u64, seed: u64 },
}

/// A single disagreement found by a verification sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mismatch {
    /// Closed-form distance disagrees with BFS.
    Distance { a: VertexSet, b: VertexSet, closed_form: u32, bfs: u32 },
    /// A BFS histogram entry disagrees with the layer counts.
    Histogram { step: u32, expected: u64, actual: u64 },
    /// An enumerated layer has the wrong number of vertices.
    LayerSize { layer: LayerIndex, expected: u64, actual: u64 },
    /// An enumerated layer member sits at the wrong BFS distance.
    LayerMember { vertex: VertexSet, expected: u32, bfs: u32 },
    /// d(a, b) = 0 for distinct vertices, or nonzero for equal ones.
    Identity { a: VertexSet, b: VertexSet, distance: u32 },
    /// d(a, b) differs from d(b, a).
    Symmetry { a: VertexSet, b: VertexSet, forward: u32, backward: u32 },
    /// d(a, b) + d(b, c) < d(a, c).
    Triangle { a: VertexSet, b: VertexSet, c: VertexSet, ab: u32, bc: u32, ac: u32 },
    /// d = 1 disagrees with adjacency.
    EdgeCharacterization { a: VertexSet, b: VertexSet, distance: u32, edge: bool },
    /// A constructed path has the wrong length.
    PathLength { a: VertexSet, b: VertexSet, path_length: u32, bfs: u32 },
    /// A constructed path breaks a structural invariant.
    PathShape { a: VertexSet, b: VertexSet, detail: String },
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mismatch::Distance { a, b, closed_form, bfs } => {
                write!(f, "d({a},{b}) = {closed_form} but BFS gives {bfs}")
            }
            Mismatch::Histogram { step, expected, actual } => {
                write!(f, "histogram[{step}] = {actual} but layer counts give {expected}")
            }
            Mismatch::LayerSize { layer, expected, actual } => {
                write!(f, "layer {layer} enumerates {actual} vertices, counts give {expected}")
            }
            Mismatch::LayerMember { vertex, expected, bfs } => {
                write!(f, "{vertex} classified at distance {expected} but BFS gives {bfs}")
            }
            Mismatch::Identity { a, b, distance } => {
                write!(f, "identity violated: d({a},{b}) = {distance}")
            }
            Mismatch::Symmetry { a, b, forward, backward } => {
                write!(f, "symmetry violated: d({a},{b}) = {forward}, d({b},{a}) = {backward}")
            }
            Mismatch::Triangle { a, b, c, ab, bc, ac } => {
                write!(
                    f,
                    "triangle violated: d({a},{b}) + d({b},{c}) = {} < d({a},{c}) = {ac}",
                    ab + bc
                )
            }
            Mismatch::EdgeCharacterization { a, b, distance, edge } => {
                write!(f, "edge characterization violated: d({a},{b}) = {distance}, edge = {edge}")
            }
            Mismatch::PathLength { a, b, path_length, bfs } => {
                write!(f, "path {a} -> {b} has length {path_length} but BFS gives {bfs}")
            }
            Mismatch::PathShape { a, b, detail } => {
                write!(f, "path {a} -> {b} is malformed: {detail}")
            }
        }
    }
}

/// Result of one verification sweep. `checked` counts the pairs or triples
/// examined; the sweep passed iff no mismatch was recorded.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub params: LevelParams,
    pub checked: u64,
    pub mismatches: Vec<Mismatch>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    fn new(params: LevelParams) -> Self {
        VerificationReport { params, checked: 0, mismatches: Vec::new() }
    }
}

fn check_sweep_cap(params: &LevelParams, max: u32) -> Result<()> {
    if params.n() > max {
        return Err(Error::UniverseTooLarge { n: params.n(), max });
    }
    Ok(())
}

/// Compares the closed-form distance against BFS over all ordered vertex
/// pairs.
pub fn verify_distance_formula(params: &LevelParams) -> Result<VerificationReport> {
    check_sweep_cap(params, MAX_PAIR_SWEEP_UNIVERSE)?;
    let graph = AdjacencyGraph::build(params)?;
    let mut report = VerificationReport::new(*params);
    for (source_index, source) in graph.vertices().iter().enumerate() {
        let distances = graph.bfs_from(source_index);
        for (target_index, target) in graph.vertices().iter().enumerate() {
            let closed_form = params.distance(source, target)?;
            let bfs = distances[target_index];
            report.checked += 1;
            if closed_form != bfs {
                report.mismatches.push(Mismatch::Distance {
                    a: *source,
                    b: *target,
                    closed_form,
                    bfs,
                });
            }
        }
    }
    Ok(report)
}

/// BFS from the initial vertex and checks the distance histogram against
/// the interleaved layer counts, plus each enumerated layer against its
/// count and encoded distance.
pub fn verify_layers(params: &LevelParams) -> Result<VerificationReport> {
    check_sweep_cap(params, MAX_PAIR_SWEEP_UNIVERSE)?;
    let graph = AdjacencyGraph::build(params)?;
    let initial = params.initial_vertex()?;
    let distances = graph.bfs_distances(&initial)?;
    let histogram = graph.distance_histogram(&initial)?;
    let expected: Vec<u64> = params.layer_table::<u64>()?.interleaved();
    let mut report = VerificationReport::new(*params);

    let steps = expected.len().max(histogram.len());
    for step in 0..steps {
        let want = expected.get(step).copied().unwrap_or(0);
        let got = histogram.get(step).copied().unwrap_or(0);
        report.checked += 1;
        if want != got {
            report.mismatches.push(Mismatch::Histogram { step: step as u32, expected: want, actual: got });
        }
    }

    for side in [LayerSide::Small, LayerSide::Large] {
        for index in 0..=params.radius() {
            let layer = LayerIndex::new(side, index);
            let members = params.enumerate_layer(layer)?;
            let count = match side {
                LayerSide::Small => params.gamma::<u64>(index)?,
                LayerSide::Large => params.delta::<u64>(index)?,
            };
            report.checked += 1;
            if members.len() as u64 != count {
                report.mismatches.push(Mismatch::LayerSize {
                    layer,
                    expected: count,
                    actual: members.len() as u64,
                });
            }
            for member in members {
                let graph_index = graph.index_of(&member).expect("layer members are vertices");
                report.checked += 1;
                if distances[graph_index] != layer.distance() {
                    report.mismatches.push(Mismatch::LayerMember {
                        vertex: member,
                        expected: layer.distance(),
                        bfs: distances[graph_index],
                    });
                }
            }
        }
    }
    Ok(report)
}

/// Checks the metric axioms — identity, symmetry, the triangle inequality —
/// and the `d = 1 ⟺ edge` characterization, either over every pair and
/// triple or over seeded pseudo-random samples.
pub fn verify_metric_axioms(params: &LevelParams, mode: SampleMode) -> Result<VerificationReport> {
    match mode {
        SampleMode::Exhaustive => verify_metric_exhaustive(params),
        SampleMode::Sampled { count, seed } => verify_metric_sampled(params, count, seed),
    }
}

fn verify_metric_exhaustive(params: &LevelParams) -> Result<VerificationReport> {
    check_sweep_cap(params, MAX_TRIPLE_SWEEP_UNIVERSE)?;
    let mut vertices: Vec<VertexSet> = sets_of_size(params.n(), params.k()).collect();
    vertices.extend(sets_of_size(params.n(), params.large_size()));
    let order = vertices.len();

    let mut table = vec![0u32; order * order];
    for (row, a) in vertices.iter().enumerate() {
        for (column, b) in vertices.iter().enumerate() {
            table[row * order + column] = params.distance(a, b)?;
        }
    }

    let mut report = VerificationReport::new(*params);
    for (row, a) in vertices.iter().enumerate() {
        for (column, b) in vertices.iter().enumerate() {
            let d = table[row * order + column];
            if (d == 0) != (a == b) {
                report.mismatches.push(Mismatch::Identity { a: *a, b: *b, distance: d });
            }
            let back = table[column * order + row];
            if d != back {
                report.mismatches.push(Mismatch::Symmetry {
                    a: *a,
                    b: *b,
                    forward: d,
                    backward: back,
                });
            }
            let edge = params.is_edge(a, b)?;
            if (d == 1) != edge {
                report.mismatches.push(Mismatch::EdgeCharacterization {
                    a: *a,
                    b: *b,
                    distance: d,
                    edge,
                });
            }
        }
    }
    for row in 0..order {
        for middle in 0..order {
            let first = table[row * order + middle];
            for column in 0..order {
                report.checked += 1;
                if first + table[middle * order + column] < table[row * order + column] {
                    report.mismatches.push(Mismatch::Triangle {
                        a: vertices[row],
                        b: vertices[middle],
                        c: vertices[column],
                        ab: first,
                        bc: table[middle * order + column],
                        ac: table[row * order + column],
                    });
                }
            }
        }
    }
    Ok(report)
}

fn verify_metric_sampled(params: &LevelParams, count: u64, seed: u64) -> Result<VerificationReport> {
    if params.n() > crate::vertex::MAX_UNIVERSE {
        return Err(Error::UniverseTooLarge { n: params.n(), max: crate::vertex::MAX_UNIVERSE });
    }
    let mut rng = SplitMix64::new(seed);
    let mut report = VerificationReport::new(*params);
    for _ in 0..count {
        let a = random_vertex(params, &mut rng);
        let b = random_vertex(params, &mut rng);
        let c = random_vertex(params, &mut rng);
        let ab = params.distance(&a, &b)?;
        let bc = params.distance(&b, &c)?;
        let ac = params.distance(&a, &c)?;
        report.checked += 1;
        if (ab == 0) != (a == b) {
            report.mismatches.push(Mismatch::Identity { a, b, distance: ab });
        }
        let back = params.distance(&b, &a)?;
        if ab != back {
            report.mismatches.push(Mismatch::Symmetry { a, b, forward: ab, backward: back });
        }
        if ab + bc < ac {
            report.mismatches.push(Mismatch::Triangle { a, b, c, ab, bc, ac });
        }
        let edge = params.is_edge(&a, &b)?;
        if (ab == 1) != edge {
            report.mismatches.push(Mismatch::EdgeCharacterization { a, b, distance: ab, edge });
        }
    }
    Ok(report)
}

/// Builds the constructed shortest path for every ordered vertex pair and
/// checks its shape and its length against BFS.
pub fn verify_paths(params: &LevelParams) -> Result<VerificationReport> {
    check_sweep_cap(params, MAX_PAIR_SWEEP_UNIVERSE)?;
    let graph = AdjacencyGraph::build(params)?;
    let mut report = VerificationReport::new(*params);
    for (source_index, source) in graph.vertices().iter().enumerate() {
        let distances = graph.bfs_from(source_index);
        for (target_index, target) in graph.vertices().iter().enumerate() {
            report.checked += 1;
            let path = params.shortest_path(source, target)?;
            if let Err(detail) = path.validate() {
                report.mismatches.push(Mismatch::PathShape { a: *source, b: *target, detail });
                continue;
            }
            if path.source() != source || path.target() != target {
                report.mismatches.push(Mismatch::PathShape {
                    a: *source,
                    b: *target,
                    detail: "endpoints do not match the query".into(),
                });
                continue;
            }
            let bfs = distances[target_index];
            if path.length() != bfs {
                report.mismatches.push(Mismatch::PathLength {
                    a: *source,
                    b: *target,
                    path_length: path.length(),
                    bfs,
                });
            }
        }
    }
    Ok(report)
}

fn random_vertex(params: &LevelParams, rng: &mut SplitMix64) -> VertexSet {
    let size = if rng.next() & 1 == 0 { params.k() } else { params.large_size() };
    random_set_of_size(params.n(), size, rng)
}

fn random_set_of_size(n: u32, size: u32, rng: &mut SplitMix64) -> VertexSet {
    // Partial Fisher-Yates over the ground elements.
    let mut pool: Vec<u32> = (1..=n).collect();
    for slot in 0..size as usize {
        let pick = slot + (rng.next() % (n as u64 - slot as u64)) as usize;
        pool.swap(slot, pick);
    }
    VertexSet::from_elements(n, &pool[..size as usize]).expect("sampled elements are in range")
}

/// Tiny deterministic generator for the sampled sweeps.
struct SplitMix64(u64);

impl SplitMix64 {
    fn new(seed: u64) -> Self {
        SplitMix64(seed)
    }

    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }
}
