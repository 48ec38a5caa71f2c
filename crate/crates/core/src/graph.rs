//! Simple undirected graphs with the connectivity primitives the rest of the
//! crate is built on: components, bridges, cuts, 2-edge-connectivity and
//! exact minimum s-t cuts.

use num_integer::Integer;
use num_traits::Signed;
use thiserror::Error;

use crate::ineq::Rational;

/// Edge handles are dense indices into the edge list and are never
/// reassigned by read-only queries.
pub type EdgeId = usize;
pub type VertexId = usize;

/// Integer weight per edge, indexed by `EdgeId`.
pub type EdgeWeights = Vec<i64>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(VertexId, VertexId),
    #[error("vertex {0} out of range (vertex count {1})")]
    VertexOutOfRange(VertexId, usize),
    #[error("edge {0} out of range (edge count {1})")]
    EdgeOutOfRange(EdgeId, usize),
    #[error("vertex side must be a proper nonempty subset")]
    ImproperSide,
    #[error("source and sink must differ")]
    SourceEqualsSink,
}

/// A simple undirected graph. Vertices are `0..vertex_count`, edges are
/// unordered pairs with stable dense ids.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    adj: Vec<Vec<(VertexId, EdgeId)>>,
}

impl Graph {
    pub fn new(
        vertex_count: usize,
        edge_list: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self, GraphError> {
        let mut edges = Vec::new();
        let mut adj = vec![Vec::new(); vertex_count];
        let mut seen = std::collections::HashSet::new();
        for (u, v) in edge_list {
            if u >= vertex_count {
                return Err(GraphError::VertexOutOfRange(u, vertex_count));
            }
            if v >= vertex_count {
                return Err(GraphError::VertexOutOfRange(v, vertex_count));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(GraphError::DuplicateEdge(key.0, key.1));
            }
            let id = edges.len();
            edges.push((u, v));
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        Ok(Graph { n: vertex_count, edges, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    /// Neighbors of `v` with the incident edge id.
    pub fn adjacent(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adj[v]
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.adj[u]
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, id)| id)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn is_complete(&self) -> bool {
        self.n >= 1 && self.edges.len() == self.n * (self.n - 1) / 2
    }
}

/// A vertex side together with the edges crossing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutSet {
    /// The side `S`, sorted.
    pub side: Vec<VertexId>,
    /// The edges of `delta(S)`, sorted by id.
    pub cut_edges: Vec<EdgeId>,
    /// True when both `G[S]` and `G[V - S]` are connected, i.e. no proper
    /// subset of the cut edges is itself a cut.
    pub minimal: bool,
}

impl CutSet {
    pub fn side_mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for &v in &self.side {
            mask[v] = true;
        }
        mask
    }
}

/// An edge subset of a host graph; its vertex set is induced by the edges.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EdgeSubgraph {
    pub edges: Vec<EdgeId>,
}

impl EdgeSubgraph {
    pub fn incidence_vector(&self, edge_count: usize) -> Vec<u8> {
        let mut x = vec![0u8; edge_count];
        for &e in &self.edges {
            x[e] = 1;
        }
        x
    }
}

/// Restriction of a graph: a vertex may be dropped, an edge may be dropped.
/// Both filters default to keeping everything.
#[derive(Clone, Copy)]
pub struct Restriction<'a> {
    pub vertex_alive: Option<&'a [bool]>,
    pub edge_alive: Option<&'a [bool]>,
}

impl Restriction<'_> {
    pub const FULL: Restriction<'static> = Restriction { vertex_alive: None, edge_alive: None };

    fn vertex(&self, v: VertexId) -> bool {
        self.vertex_alive.is_none_or(|m| m[v])
    }

    fn edge(&self, g: &Graph, e: EdgeId) -> bool {
        let (u, v) = g.edges[e];
        self.edge_alive.is_none_or(|m| m[e]) && self.vertex(u) && self.vertex(v)
    }
}

/// Connected components of the restricted graph, each sorted; components are
/// ordered by their smallest vertex. Dropped vertices appear in no component.
pub fn components_restricted(g: &Graph, r: Restriction<'_>) -> Vec<Vec<VertexId>> {
    let mut comp = vec![usize::MAX; g.n];
    let mut components = Vec::new();
    for start in 0..g.n {
        if comp[start] != usize::MAX || !r.vertex(start) {
            continue;
        }
        let idx = components.len();
        let mut members = vec![start];
        comp[start] = idx;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &(w, id) in g.adjacent(v) {
                if comp[w] == usize::MAX && r.edge(g, id) {
                    comp[w] = idx;
                    members.push(w);
                    stack.push(w);
                }
            }
        }
        members.sort_unstable();
        components.push(members);
    }
    components
}

/// Vertex partition into connected components.
pub fn connected_components(g: &Graph) -> Vec<Vec<VertexId>> {
    components_restricted(g, Restriction::FULL)
}

pub fn is_connected(g: &Graph) -> bool {
    connected_components(g).len() <= 1
}

/// Bridges of the restricted graph, found by one iterative depth-first
/// traversal with low-link values. Works on disconnected graphs.
pub fn bridges_restricted(g: &Graph, r: Restriction<'_>) -> Vec<EdgeId> {
    let n = g.n;
    let mut order = vec![usize::MAX; n];
    let mut low = vec![usize::MAX; n];
    let mut clock = 0usize;
    let mut result = Vec::new();

    // Stack frames: (vertex, incoming edge id, next adjacency index).
    let mut stack: Vec<(VertexId, EdgeId, usize)> = Vec::new();
    for root in 0..n {
        if order[root] != usize::MAX || !r.vertex(root) {
            continue;
        }
        order[root] = clock;
        low[root] = clock;
        clock += 1;
        stack.push((root, usize::MAX, 0));
        while let Some(&mut (v, in_edge, ref mut next)) = stack.last_mut() {
            if *next < g.adj[v].len() {
                let (w, id) = g.adj[v][*next];
                *next += 1;
                if id == in_edge || !r.edge(g, id) {
                    continue;
                }
                if order[w] == usize::MAX {
                    order[w] = clock;
                    low[w] = clock;
                    clock += 1;
                    stack.push((w, id, 0));
                } else {
                    low[v] = low[v].min(order[w]);
                }
            } else {
                stack.pop();
                if let Some(&(parent, _, _)) = stack.last() {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] > order[parent] {
                        result.push(in_edge);
                    }
                }
            }
        }
    }
    result.sort_unstable();
    result
}

/// All bridges of the graph.
pub fn bridges(g: &Graph) -> Vec<EdgeId> {
    bridges_restricted(g, Restriction::FULL)
}

/// Connected with no bridges. The empty graph and a single vertex qualify.
pub fn is_two_edge_connected(g: &Graph) -> bool {
    if g.n <= 1 {
        return true;
    }
    is_connected(g) && bridges(g).is_empty()
}

/// The cut `delta(side)` with its minimality flag.
pub fn delta(g: &Graph, side: &[VertexId]) -> Result<CutSet, GraphError> {
    let mut in_side = vec![false; g.n];
    for &v in side {
        if v >= g.n {
            return Err(GraphError::VertexOutOfRange(v, g.n));
        }
        in_side[v] = true;
    }
    delta_from_mask(g, &in_side).ok_or(GraphError::ImproperSide)
}

pub(crate) fn delta_from_mask(g: &Graph, in_side: &[bool]) -> Option<CutSet> {
    let count = in_side.iter().filter(|&&b| b).count();
    if count == 0 || count == g.n {
        return None;
    }
    let cut_edges: Vec<EdgeId> = g
        .edges
        .iter()
        .enumerate()
        .filter(|&(_, &(u, v))| in_side[u] != in_side[v])
        .map(|(id, _)| id)
        .collect();
    let minimal = side_connected(g, in_side, true) && side_connected(g, in_side, false);
    let side: Vec<VertexId> = (0..g.n).filter(|&v| in_side[v]).collect();
    Some(CutSet { side, cut_edges, minimal })
}

/// Is the subgraph induced by `{v : in_side[v] == value}` connected?
fn side_connected(g: &Graph, in_side: &[bool], value: bool) -> bool {
    let members: Vec<VertexId> = (0..g.n).filter(|&v| in_side[v] == value).collect();
    if members.len() <= 1 {
        return true;
    }
    let mut seen = vec![false; g.n];
    seen[members[0]] = true;
    let mut stack = vec![members[0]];
    let mut reached = 1;
    while let Some(v) = stack.pop() {
        for &(w, _) in g.adjacent(v) {
            if in_side[w] == value && !seen[w] {
                seen[w] = true;
                reached += 1;
                stack.push(w);
            }
        }
    }
    reached == members.len()
}

/// Dinic max-flow over integer capacities; undirected edges get residual
/// capacity in both directions.
struct FlowNetwork {
    to: Vec<usize>,
    cap: Vec<i128>,
    next: Vec<usize>,
    head: Vec<usize>,
}

impl FlowNetwork {
    fn new(n: usize) -> Self {
        FlowNetwork { to: Vec::new(), cap: Vec::new(), next: Vec::new(), head: vec![usize::MAX; n] }
    }

    fn add_undirected(&mut self, u: usize, v: usize, c: i128) {
        for (a, b) in [(u, v), (v, u)] {
            self.to.push(b);
            self.cap.push(c);
            self.next.push(self.head[a]);
            self.head[a] = self.to.len() - 1;
        }
    }

    fn max_flow(&mut self, s: usize, t: usize) -> i128 {
        let n = self.head.len();
        let mut total = 0i128;
        let mut level = vec![usize::MAX; n];
        let mut iter = vec![usize::MAX; n];
        loop {
            level.fill(usize::MAX);
            level[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                let mut a = self.head[v];
                while a != usize::MAX {
                    if self.cap[a] > 0 && level[self.to[a]] == usize::MAX {
                        level[self.to[a]] = level[v] + 1;
                        queue.push_back(self.to[a]);
                    }
                    a = self.next[a];
                }
            }
            if level[t] == usize::MAX {
                return total;
            }
            iter.copy_from_slice(&self.head);
            loop {
                let f = self.augment(s, t, i128::MAX, &level, &mut iter);
                if f == 0 {
                    break;
                }
                total += f;
            }
        }
    }

    fn augment(
        &mut self,
        v: usize,
        t: usize,
        limit: i128,
        level: &[usize],
        iter: &mut [usize],
    ) -> i128 {
        if v == t {
            return limit;
        }
        while iter[v] != usize::MAX {
            let a = iter[v];
            let w = self.to[a];
            if self.cap[a] > 0 && level[w] == level[v] + 1 {
                let f = self.augment(w, t, limit.min(self.cap[a]), level, iter);
                if f > 0 {
                    self.cap[a] -= f;
                    self.cap[a ^ 1] += f;
                    return f;
                }
            }
            iter[v] = self.next[a];
        }
        0
    }

    /// Vertices reachable from `s` in the residual network.
    fn residual_side(&self, s: usize) -> Vec<bool> {
        let n = self.head.len();
        let mut seen = vec![false; n];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            let mut a = self.head[v];
            while a != usize::MAX {
                if self.cap[a] > 0 && !seen[self.to[a]] {
                    seen[self.to[a]] = true;
                    stack.push(self.to[a]);
                }
                a = self.next[a];
            }
        }
        seen
    }
}

/// Minimum s-t cut with integer capacities. Returns the flow value and the
/// source-side mask. Zero-capacity edges carry no flow, so setting an edge's
/// capacity to zero removes it from the flow network.
pub(crate) fn min_cut_scaled(
    g: &Graph,
    capacities: &[i128],
    s: VertexId,
    t: VertexId,
) -> (i128, Vec<bool>) {
    let mut net = FlowNetwork::new(g.n);
    for (id, &(u, v)) in g.edges.iter().enumerate() {
        if capacities[id] > 0 {
            net.add_undirected(u, v, capacities[id]);
        }
    }
    let value = net.max_flow(s, t);
    (value, net.residual_side(s))
}

/// Exact minimum s-t cut under nonnegative rational capacities. The returned
/// side contains `s`; disconnected `s`, `t` yields value zero.
pub fn min_st_cut(
    g: &Graph,
    capacities: &[Rational],
    s: VertexId,
    t: VertexId,
) -> Result<(Rational, CutSet), GraphError> {
    if s >= g.n {
        return Err(GraphError::VertexOutOfRange(s, g.n));
    }
    if t >= g.n {
        return Err(GraphError::VertexOutOfRange(t, g.n));
    }
    if s == t {
        return Err(GraphError::SourceEqualsSink);
    }
    assert_eq!(capacities.len(), g.edge_count());
    assert!(
        capacities.iter().all(|c| !c.is_negative()),
        "capacities must be nonnegative"
    );
    // Scale to a common denominator so the flow computation is exact.
    let mut denom: i128 = 1;
    for c in capacities {
        denom = denom.lcm(&(*c.denom() as i128));
    }
    let scaled: Vec<i128> = capacities
        .iter()
        .map(|c| *c.numer() as i128 * (denom / *c.denom() as i128))
        .collect();
    let (value, in_side) = min_cut_scaled(g, &scaled, s, t);
    let cut = cut_from_side_mask(g, &in_side);
    Ok((exact_ratio(value, denom), cut))
}

fn exact_ratio(num: i128, den: i128) -> Rational {
    let g = num.gcd(&den);
    let (num, den) = if g == 0 { (0, 1) } else { (num / g, den / g) };
    Rational::new(
        i64::try_from(num).expect("cut value overflows i64"),
        i64::try_from(den).expect("cut denominator overflows i64"),
    )
}

pub(crate) fn cut_from_side_mask(g: &Graph, in_side: &[bool]) -> CutSet {
    delta_from_mask(g, in_side).unwrap_or(CutSet {
        side: (0..g.n).filter(|&v| in_side[v]).collect(),
        cut_edges: Vec::new(),
        minimal: false,
    })
}

/// Replace parallel edges by paths of length two so downstream code only
/// sees simple graphs. Each extra copy of `{u, v}` becomes `u - x - v`
/// through a fresh vertex `x`; one of the two new edges keeps the original
/// weight and the other gets zero. The back-map sends each new edge id to
/// the index of the multi-edge it represents.
pub fn simplify_multigraph(
    vertex_count: usize,
    multi_edges: &[(VertexId, VertexId, i64)],
) -> Result<(Graph, EdgeWeights, Vec<usize>), GraphError> {
    let mut n = vertex_count;
    let mut edges = Vec::new();
    let mut weights = Vec::new();
    let mut back = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (idx, &(u, v, w)) in multi_edges.iter().enumerate() {
        if u >= vertex_count {
            return Err(GraphError::VertexOutOfRange(u, vertex_count));
        }
        if v >= vertex_count {
            return Err(GraphError::VertexOutOfRange(v, vertex_count));
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let key = (u.min(v), u.max(v));
        if seen.insert(key) {
            edges.push((u, v));
            weights.push(w);
            back.push(idx);
        } else {
            // The two path edges form a 2-cut, so any 2-edge-connected
            // subgraph uses both or neither; the weight split keeps totals.
            let x = n;
            n += 1;
            edges.push((u, x));
            weights.push(w);
            back.push(idx);
            edges.push((x, v));
            weights.push(0);
            back.push(idx);
        }
    }
    let g = Graph::new(n, edges)?;
    Ok((g, weights, back))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn components_of_empty_graph() {
        let g = Graph::new(0, []).unwrap();
        assert!(connected_components(&g).is_empty());
    }

    #[test]
    fn components_of_cycle_and_disjoint_triangles() {
        let c5 = corpus::cycle(5);
        let comps = connected_components(&c5);
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].len(), 5);

        let two = Graph::new(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        let comps = connected_components(&two);
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 3));
    }

    #[test]
    fn bridges_cycle_path_and_bar() {
        assert!(bridges(&corpus::cycle(5)).is_empty());

        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(bridges(&p3), vec![0, 1]);

        let barbell = corpus::two_triangles_bridged();
        let b = bridges(&barbell);
        assert_eq!(b.len(), 1);
        let (u, v) = barbell.endpoints(b[0]);
        assert_eq!((u.min(v), u.max(v)), (2, 3));
    }

    #[test]
    fn two_edge_connectivity_basics() {
        assert!(is_two_edge_connected(&corpus::complete(4)));
        assert!(!is_two_edge_connected(&Graph::new(3, [(0, 1), (1, 2)]).unwrap()));
        assert!(is_two_edge_connected(&Graph::new(0, []).unwrap()));
        assert!(is_two_edge_connected(&Graph::new(1, []).unwrap()));
        // Two isolated vertices are disconnected.
        assert!(!is_two_edge_connected(&Graph::new(2, []).unwrap()));
    }

    #[test]
    fn delta_on_cycle_and_complete_graph() {
        let c4 = corpus::cycle(4);
        let cut = delta(&c4, &[0]).unwrap();
        assert_eq!(cut.cut_edges.len(), 2);
        assert!(cut.minimal);

        let k4 = corpus::complete(4);
        let cut = delta(&k4, &[0]).unwrap();
        assert_eq!(cut.cut_edges.len(), 3);
        assert!(cut.minimal);

        assert_eq!(delta(&c4, &[]).unwrap_err(), GraphError::ImproperSide);
        assert_eq!(delta(&c4, &[0, 1, 2, 3]).unwrap_err(), GraphError::ImproperSide);
    }

    #[test]
    fn delta_non_minimal_when_side_induces_disconnected_subgraph() {
        let (g, s1, s2) = corpus::non_minimal_cut_fixture();
        let side: Vec<_> = s1.iter().chain(&s2).copied().collect();
        let cut = delta(&g, &side).unwrap();
        assert!(!cut.minimal);
        let inner = delta(&g, &s1).unwrap();
        assert!(inner.minimal);
        assert!(inner.cut_edges.iter().all(|e| cut.cut_edges.contains(e)));
        assert!(inner.cut_edges.len() < cut.cut_edges.len());
    }

    #[test]
    fn min_cut_examples() {
        let one = Rational::from_integer(1);
        let c4 = corpus::cycle(4);
        let caps = vec![one; 4];
        let (value, cut) = min_st_cut(&c4, &caps, 0, 2).unwrap();
        assert_eq!(value, Rational::from_integer(2));
        assert!(cut.side.contains(&0));
        assert!(!cut.side.contains(&2));

        let k4 = corpus::complete(4);
        let caps = vec![one; 6];
        let (value, _) = min_st_cut(&k4, &caps, 0, 3).unwrap();
        assert_eq!(value, Rational::from_integer(3));

        // Path s - m - t with capacities 5 and 2: the bottleneck is the m-t edge.
        let p = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let caps = vec![Rational::from_integer(5), Rational::from_integer(2)];
        let (value, cut) = min_st_cut(&p, &caps, 0, 2).unwrap();
        assert_eq!(value, Rational::from_integer(2));
        assert_eq!(cut.cut_edges, vec![1]);
    }

    #[test]
    fn min_cut_disconnected_pair_is_zero() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let caps = vec![Rational::from_integer(1); 2];
        let (value, cut) = min_st_cut(&g, &caps, 0, 3).unwrap();
        assert_eq!(value, Rational::from_integer(0));
        assert!(cut.side.contains(&0));
    }

    #[test]
    fn min_cut_rational_capacities_exact() {
        // Two parallel paths; fractional capacities must add exactly.
        let g = Graph::new(4, [(0, 1), (1, 3), (0, 2), (2, 3)]).unwrap();
        let caps = vec![
            Rational::new(1, 3),
            Rational::new(1, 2),
            Rational::new(1, 6),
            Rational::new(2, 3),
        ];
        let (value, _) = min_st_cut(&g, &caps, 0, 3).unwrap();
        assert_eq!(value, Rational::new(1, 3) + Rational::new(1, 6));
    }

    #[test]
    fn simplify_multigraph_examples() {
        // Simple input: unchanged with identity back-map.
        let (g, w, back) = simplify_multigraph(3, &[(0, 1, 2), (1, 2, 5), (0, 2, 1)]).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(w, vec![2, 5, 1]);
        assert_eq!(back, vec![0, 1, 2]);

        // Double edge: one simple edge plus a length-two path.
        let (g, w, back) = simplify_multigraph(2, &[(0, 1, 3), (0, 1, 4)]).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(w, vec![3, 4, 0]);
        assert_eq!(back, vec![0, 1, 1]);

        // Triple edge: two fresh vertices, five edges.
        let (g, w, _) = simplify_multigraph(2, &[(0, 1, 1), (0, 1, 2), (0, 1, 3)]).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 5);
        assert_eq!(w.iter().sum::<i64>(), 6);

        assert_eq!(
            simplify_multigraph(2, &[(1, 1, 5)]).unwrap_err(),
            GraphError::SelfLoop(1)
        );
    }

    /// Every cut meets every cycle in an even number of edges.
    #[test]
    fn cut_meets_cycle_evenly() {
        for n in 3..8 {
            let g = corpus::cycle(n);
            for side_bits in 1..((1u32 << n) - 1) {
                let side: Vec<usize> = (0..n).filter(|&v| side_bits >> v & 1 == 1).collect();
                let cut = delta(&g, &side).unwrap();
                assert_eq!(cut.cut_edges.len() % 2, 0);
            }
        }
    }

    /// Bridges are exactly the edges whose endpoints are disconnected after
    /// removing the edge (min-cut value zero with unit capacities).
    #[test]
    fn bridges_agree_with_min_cut_definition() {
        let mut rng = crate::rng::Rng::new(0x5eed);
        for _ in 0..40 {
            let g = corpus::random_graph_any(&mut rng, 8, 12);
            let bridge_set: std::collections::HashSet<_> = bridges(&g).into_iter().collect();
            for e in 0..g.edge_count() {
                let (s, t) = g.endpoints(e);
                let caps: Vec<i128> = (0..g.edge_count()).map(|f| i128::from(f != e)).collect();
                let (value, _) = min_cut_scaled(&g, &caps, s, t);
                assert_eq!(bridge_set.contains(&e), value == 0);
            }
        }
    }

    /// 2-edge-connectivity agrees with the two-disjoint-paths definition.
    #[test]
    fn two_edge_connected_iff_all_pairs_min_cut_at_least_two() {
        let mut rng = crate::rng::Rng::new(0x2ec2ec);
        for _ in 0..40 {
            let g = corpus::random_graph_any(&mut rng, 7, 11);
            if g.vertex_count() < 2 {
                continue;
            }
            let caps = vec![1i128; g.edge_count()];
            let mut all_pairs_two = true;
            for s in 0..g.vertex_count() {
                for t in (s + 1)..g.vertex_count() {
                    let (value, _) = min_cut_scaled(&g, &caps, s, t);
                    if value < 2 {
                        all_pairs_two = false;
                    }
                }
            }
            assert_eq!(is_two_edge_connected(&g), all_pairs_two);
        }
    }
}
