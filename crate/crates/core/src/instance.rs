//! Instance generators and the on-disk instance format.
//!
//! Format, line-oriented ASCII:
//! ```text
//! c optional comment lines anywhere
//! p tecs <vertices> <edges>
//! e <u> <v> <weight>     (1-based endpoints, u < v)
//! ```

use std::io::Write as _;
use std::path::Path;

use thiserror::Error;

use crate::graph::{is_two_edge_connected, EdgeWeights, Graph, GraphError, VertexId};
use crate::rng::Rng;

#[derive(Debug, Error)]
pub enum InstanceError {
    #[error("malformed header: {0}")]
    MalformedHeader(String),
    #[error("malformed edge line {0}: {1}")]
    MalformedEdge(usize, String),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {0} out of range 1..={1}")]
    VertexOutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("declared {declared} edges, found {found}")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("generator gave up after {0} retries (k too small for n?)")]
    RetriesExhausted(usize),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Clone, Debug, PartialEq)]
pub enum InstanceKind {
    SparsifiedKnn { n: usize, k: usize, alpha: f64 },
    KnCycles { ell: usize },
    Complete { n: usize, weight_lo: i64, weight_hi: i64 },
}

#[derive(Clone, Debug, PartialEq)]
pub struct InstanceSpec {
    pub kind: InstanceKind,
    pub seed: u64,
}

impl InstanceSpec {
    pub fn generate(&self) -> Result<(Graph, EdgeWeights), InstanceError> {
        match self.kind {
            InstanceKind::SparsifiedKnn { n, k, alpha } => {
                gen_sparsified_knn(n, k, alpha, self.seed)
            }
            InstanceKind::KnCycles { ell } => Ok(gen_kn_cycles(ell, self.seed)),
            InstanceKind::Complete { n, weight_lo, weight_hi } => {
                Ok(gen_complete(n, weight_lo, weight_hi, self.seed))
            }
        }
    }
}

const KNN_RETRIES: usize = 64;

/// Sparsified k-nearest-neighbor graph: n uniform points in the unit
/// square, each joined to its k nearest neighbors (symmetrized); point sets
/// whose graph is not 2-edge-connected are redrawn from a derived seed.
/// A fraction `alpha` of the edges is then visited in random order and
/// deleted whenever 2-edge-connectivity survives. Weights are uniform
/// integers in [-5, 6].
pub fn gen_sparsified_knn(
    n: usize,
    k: usize,
    alpha: f64,
    seed: u64,
) -> Result<(Graph, EdgeWeights), InstanceError> {
    assert!(n >= 3 && k >= 2 && (0.0..=1.0).contains(&alpha));
    let mut seed_source = Rng::new(seed);
    for _ in 0..KNN_RETRIES {
        let mut rng = Rng::new(seed_source.derive_seed());
        let points: Vec<(f64, f64)> = (0..n)
            .map(|_| (rng.uniform_f64(), rng.uniform_f64()))
            .collect();
        let g = knn_graph(&points, k);
        if !is_two_edge_connected(&g) {
            continue;
        }
        let g = sparsify(&g, alpha, &mut rng);
        let weights = (0..g.edge_count()).map(|_| rng.uniform_i64(-5, 6)).collect();
        return Ok((g, weights));
    }
    Err(InstanceError::RetriesExhausted(KNN_RETRIES))
}

fn knn_graph(points: &[(f64, f64)], k: usize) -> Graph {
    let n = points.len();
    let mut edges = std::collections::BTreeSet::new();
    for i in 0..n {
        // Distances to everyone else; ties break on the point index.
        let mut others: Vec<(f64, usize)> = (0..n)
            .filter(|&j| j != i)
            .map(|j| {
                let dx = points[i].0 - points[j].0;
                let dy = points[i].1 - points[j].1;
                (dx * dx + dy * dy, j)
            })
            .collect();
        others.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap().then(a.1.cmp(&b.1)));
        for &(_, j) in others.iter().take(k.min(n - 1)) {
            edges.insert((i.min(j), i.max(j)));
        }
    }
    Graph::new(n, edges).expect("knn edges are simple")
}

fn sparsify(g: &Graph, alpha: f64, rng: &mut Rng) -> Graph {
    let m = g.edge_count();
    let chosen = rng.sample_indices(m, (alpha * m as f64).floor() as usize);
    let mut alive = vec![true; m];
    for e in chosen {
        alive[e] = false;
        let keeps = {
            let r = crate::graph::Restriction { vertex_alive: None, edge_alive: Some(&alive) };
            crate::graph::components_restricted(g, r).len() == 1
                && crate::graph::bridges_restricted(g, r).is_empty()
        };
        if !keeps {
            alive[e] = true;
        }
    }
    let edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .enumerate()
        .filter(|&(e, _)| alive[e])
        .map(|(_, &pair)| pair)
        .collect();
    Graph::new(g.vertex_count(), edges).expect("subset of a simple graph")
}

/// Ring-of-cliques construction: `ell` complete graphs of 3 to 7 vertices
/// are repeatedly partitioned into groups of 3 to 7 and joined by fresh
/// cyclic connector edges (each such connector set is one coparallel class
/// of the result), until one graph remains. Weights are uniform integers in
/// [-5, 6].
pub fn gen_kn_cycles(ell: usize, seed: u64) -> (Graph, EdgeWeights) {
    assert!(ell >= 2);
    let mut rng = Rng::new(seed);
    // Each pending part is a vertex-count plus edge list on local ids.
    let mut parts: Vec<(usize, Vec<(usize, usize)>)> = (0..ell)
        .map(|_| {
            let size = 3 + rng.uniform_usize(5);
            let edges = (0..size)
                .flat_map(|u| ((u + 1)..size).map(move |v| (u, v)))
                .collect();
            (size, edges)
        })
        .collect();

    while parts.len() > 1 {
        let mut next = Vec::new();
        let mut index = 0;
        while index < parts.len() {
            let remaining = parts.len() - index;
            let mut take = (3 + rng.uniform_usize(5)).min(remaining);
            // A remnant of one or two parts joins the previous group.
            if remaining - take > 0 && remaining - take < 3 {
                take = remaining;
            }
            let group = &parts[index..index + take];
            next.push(connect_group(group, &mut rng));
            index += take;
        }
        parts = next;
    }
    let (n, edges) = parts.pop().expect("at least one part");
    let g = Graph::new(n, edges).expect("construction is simple");
    let weights = (0..g.edge_count()).map(|_| rng.uniform_i64(-5, 6)).collect();
    (g, weights)
}

/// Join a group of parts into one graph by a cycle of fresh edges
/// `{v_i, w_i}` with `v_i` in part `i` and `w_i` in part `i + 1 (mod k)`.
/// With `k >= 2` the connectors form a coparallel class.
fn connect_group(group: &[(usize, Vec<(usize, usize)>)], rng: &mut Rng) -> (usize, Vec<(usize, usize)>) {
    let k = group.len();
    let mut offsets = Vec::with_capacity(k);
    let mut n = 0;
    let mut edges = Vec::new();
    for (size, part_edges) in group {
        offsets.push(n);
        edges.extend(part_edges.iter().map(|&(u, v)| (u + n, v + n)));
        n += size;
    }
    if k == 1 {
        return (n, edges);
    }
    let mut edge_set: std::collections::HashSet<(usize, usize)> =
        edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    for i in 0..k {
        let j = (i + 1) % k;
        loop {
            let v = offsets[i] + rng.uniform_usize(group[i].0);
            let w = offsets[j] + rng.uniform_usize(group[j].0);
            let key = (v.min(w), v.max(w));
            if edge_set.insert(key) {
                edges.push(key);
                break;
            }
        }
    }
    (n, edges)
}

/// Complete graph with i.i.d. uniform integer weights in
/// [weight_lo, weight_hi].
pub fn gen_complete(n: usize, weight_lo: i64, weight_hi: i64, seed: u64) -> (Graph, EdgeWeights) {
    assert!(n >= 4, "odd star preconditions need n >= 4");
    assert!(weight_lo <= weight_hi);
    let mut rng = Rng::new(seed);
    let g = crate::corpus::complete(n);
    let weights = (0..g.edge_count())
        .map(|_| rng.uniform_i64(weight_lo, weight_hi))
        .collect();
    (g, weights)
}

/// Parse an instance from text. Distinct errors for a malformed header,
/// duplicate edges, out-of-range endpoints and self-loops.
pub fn parse_instance(text: &str) -> Result<(Graph, EdgeWeights), InstanceError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    let mut weights: Vec<i64> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if let Some(rest) = line.strip_prefix('p') {
            if header.is_some() {
                return Err(InstanceError::MalformedHeader("second header line".into()));
            }
            let fields: Vec<&str> = rest.split_whitespace().collect();
            if fields.len() != 3 || fields[0] != "tecs" {
                return Err(InstanceError::MalformedHeader(line.to_string()));
            }
            let n = fields[1]
                .parse::<usize>()
                .map_err(|_| InstanceError::MalformedHeader(line.to_string()))?;
            let m = fields[2]
                .parse::<usize>()
                .map_err(|_| InstanceError::MalformedHeader(line.to_string()))?;
            header = Some((n, m));
            continue;
        }
        if let Some(rest) = line.strip_prefix('e') {
            let (n, _) = header.ok_or_else(|| {
                InstanceError::MalformedHeader("edge line before header".into())
            })?;
            let fields: Vec<&str> = rest.split_whitespace().collect();
            if fields.len() != 3 {
                return Err(InstanceError::MalformedEdge(lineno + 1, line.to_string()));
            }
            let u: usize = fields[0]
                .parse()
                .map_err(|_| InstanceError::MalformedEdge(lineno + 1, line.to_string()))?;
            let v: usize = fields[1]
                .parse()
                .map_err(|_| InstanceError::MalformedEdge(lineno + 1, line.to_string()))?;
            let w: i64 = fields[2]
                .parse()
                .map_err(|_| InstanceError::MalformedEdge(lineno + 1, line.to_string()))?;
            if u == v {
                return Err(InstanceError::SelfLoop(u));
            }
            if u < 1 || u > n || v < 1 || v > n {
                return Err(InstanceError::VertexOutOfRange(u.max(v), n));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(InstanceError::DuplicateEdge(key.0, key.1));
            }
            edges.push((u - 1, v - 1));
            weights.push(w);
            continue;
        }
        return Err(InstanceError::MalformedHeader(format!(
            "unrecognized line {}: {line}",
            lineno + 1
        )));
    }
    let (n, m) = header.ok_or_else(|| InstanceError::MalformedHeader("missing header".into()))?;
    if edges.len() != m {
        return Err(InstanceError::EdgeCountMismatch { declared: m, found: edges.len() });
    }
    let g = Graph::new(n, edges)?;
    Ok((g, weights))
}

pub fn format_instance(g: &Graph, w: &EdgeWeights) -> String {
    assert_eq!(w.len(), g.edge_count());
    let mut out = String::new();
    out.push_str(&format!("p tecs {} {}\n", g.vertex_count(), g.edge_count()));
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let (a, b) = (u.min(v) + 1, u.max(v) + 1);
        out.push_str(&format!("e {a} {b} {}\n", w[e]));
    }
    out
}

pub fn read_instance(path: impl AsRef<Path>) -> Result<(Graph, EdgeWeights), InstanceError> {
    let text = std::fs::read_to_string(path)?;
    parse_instance(&text)
}

pub fn write_instance(
    path: impl AsRef<Path>,
    g: &Graph,
    w: &EdgeWeights,
) -> Result<(), InstanceError> {
    let mut file = std::fs::File::create(path)?;
    file.write_all(format_instance(g, w).as_bytes())?;
    Ok(())
}
