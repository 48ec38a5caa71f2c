//! Exact brute-force ground truth on small graphs: enumerate every
//! 2-edge-connected subgraph, compute polytope and face dimensions with
//! integer-preserving elimination, and machine-check the dimension formula,
//! the lattice-point description and all facet characterizations.
//!
//! Everything here uses exact arithmetic; facet status is a rank condition
//! and does not tolerate rounding.

use thiserror::Error;

use crate::copar::{components_after_class_removal, coparallel_partition, CoparallelPartition};
use crate::graph::{
    bridges_restricted, components_restricted, is_two_edge_connected, CutSet, EdgeId, Graph,
    Restriction,
};
use crate::ineq::{
    enumerate_odd_stars, make_asymmetric, make_box_lower, make_box_upper, make_connectivity,
    make_coparallel_class, LinearInequality,
};

/// Enumeration iterates over unions of coparallel classes.
pub const MAX_ENUM_CLASSES: usize = 24;
/// Vertex-subset brute force.
pub const MAX_SUBSET_VERTICES: usize = 16;
/// Lattice-point check iterates over all binary edge vectors.
pub const MAX_LATTICE_EDGES: usize = 18;
/// Edge sets are stored as single-word bitmasks.
pub const MAX_MASK_EDGES: usize = 63;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("enumeration budget exceeded: {0} coparallel classes (limit {MAX_ENUM_CLASSES})")]
    TooManyClasses(usize),
    #[error("subset brute force budget exceeded: {0} vertices (limit {MAX_SUBSET_VERTICES})")]
    TooManyVertices(usize),
    #[error("lattice check budget exceeded: {0} edges (limit {MAX_LATTICE_EDGES})")]
    TooManyLatticeEdges(usize),
    #[error("edge mask budget exceeded: {0} edges (limit {MAX_MASK_EDGES})")]
    TooManyEdges(usize),
    #[error("budget exceeded: {0} inequality instances")]
    TooManyInstances(usize),
    #[error("graph must be 2-edge-connected")]
    NotTwoEdgeConnected,
    #[error("edge {0} is not a bridge of the restricted side")]
    NotABridge(EdgeId),
    #[error("invalid predicate arguments: {0}")]
    BadPredicate(String),
}

/// The vertex set of the polytope: one incidence bitmask per
/// 2-edge-connected subgraph, plus the cached affine dimension.
#[derive(Clone, Debug)]
pub struct VertexSet2EC {
    edge_count: usize,
    vectors: Vec<u64>,
    dim: usize,
}

impl VertexSet2EC {
    pub fn vectors(&self) -> &[u64] {
        &self.vectors
    }

    pub fn vector_count(&self) -> usize {
        self.vectors.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Affine dimension of the vertex set.
    pub fn dim(&self) -> usize {
        self.dim
    }
}

/// Reusable-buffer check whether an edge mask induces a 2-edge-connected
/// subgraph (on the vertices touched by the mask; the empty mask passes).
struct MaskChecker {
    endpoints: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, usize)>>,
    touched: Vec<usize>,
    order: Vec<usize>,
    low: Vec<usize>,
    stack: Vec<(usize, usize, usize)>,
}

impl MaskChecker {
    fn new(g: &Graph) -> Self {
        MaskChecker {
            endpoints: g.edges().to_vec(),
            adj: vec![Vec::new(); g.vertex_count()],
            touched: Vec::new(),
            order: vec![usize::MAX; g.vertex_count()],
            low: vec![usize::MAX; g.vertex_count()],
            stack: Vec::new(),
        }
    }

    fn is_2ec(&mut self, mask: u64) -> bool {
        if mask == 0 {
            return true;
        }
        for &v in &self.touched {
            self.adj[v].clear();
            self.order[v] = usize::MAX;
        }
        self.touched.clear();
        let mut bits = mask;
        while bits != 0 {
            let e = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let (u, v) = self.endpoints[e];
            if self.adj[u].is_empty() {
                self.touched.push(u);
            }
            if self.adj[v].is_empty() {
                self.touched.push(v);
            }
            self.adj[u].push((v, e));
            self.adj[v].push((u, e));
        }
        // One DFS: connectivity of the touched vertices and absence of
        // bridges via low-link values.
        let root = self.touched[0];
        let mut clock = 0usize;
        self.order[root] = clock;
        self.low[root] = clock;
        clock += 1;
        let mut visited = 1usize;
        self.stack.clear();
        self.stack.push((root, usize::MAX, 0));
        while let Some(&mut (v, in_edge, ref mut next)) = self.stack.last_mut() {
            if *next < self.adj[v].len() {
                let (w, id) = self.adj[v][*next];
                *next += 1;
                if id == in_edge {
                    continue;
                }
                if self.order[w] == usize::MAX {
                    self.order[w] = clock;
                    self.low[w] = clock;
                    clock += 1;
                    visited += 1;
                    self.stack.push((w, id, 0));
                } else {
                    self.low[v] = self.low[v].min(self.order[w]);
                }
            } else {
                self.stack.pop();
                if let Some(&(parent, _, _)) = self.stack.last() {
                    self.low[parent] = self.low[parent].min(self.low[v]);
                    if self.low[v] > self.order[parent] {
                        return false; // bridge
                    }
                }
            }
        }
        visited == self.touched.len()
    }
}

/// All 2-edge-connected subgraphs, enumerated as unions of coparallel
/// classes (2^|CP| candidates instead of 2^|E|). Always contains the zero
/// vector.
pub fn enumerate_2ec(g: &Graph) -> Result<VertexSet2EC, OracleError> {
    let partition = coparallel_partition(g);
    enumerate_2ec_with_partition(g, &partition)
}

pub fn enumerate_2ec_with_partition(
    g: &Graph,
    partition: &CoparallelPartition,
) -> Result<VertexSet2EC, OracleError> {
    let m = g.edge_count();
    if m > MAX_MASK_EDGES {
        return Err(OracleError::TooManyEdges(m));
    }
    let k = partition.class_count();
    if k > MAX_ENUM_CLASSES {
        return Err(OracleError::TooManyClasses(k));
    }
    let class_masks: Vec<u64> = partition
        .classes
        .iter()
        .map(|c| c.iter().fold(0u64, |acc, &e| acc | 1 << e))
        .collect();
    let mut checker = MaskChecker::new(g);
    let mut vectors = Vec::new();
    for subset in 0u64..(1 << k) {
        let mut mask = 0u64;
        let mut bits = subset;
        while bits != 0 {
            let c = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            mask |= class_masks[c];
        }
        if checker.is_2ec(mask) {
            vectors.push(mask);
        }
    }
    vectors.sort_unstable();
    vectors.dedup();
    let dim = affine_dimension(&vectors, m);
    Ok(VertexSet2EC { edge_count: m, vectors, dim })
}

/// Independent reference enumeration over all 2^|E| edge subsets. Slower
/// and deliberately separate from the class-union route.
pub fn naive_enumerate_2ec(g: &Graph) -> Result<Vec<u64>, OracleError> {
    let m = g.edge_count();
    if m > 22 {
        return Err(OracleError::TooManyLatticeEdges(m));
    }
    let mut checker = MaskChecker::new(g);
    let mut vectors = Vec::new();
    for mask in 0u64..(1 << m) {
        if checker.is_2ec(mask) {
            vectors.push(mask);
        }
    }
    Ok(vectors)
}

/// Integer-preserving (fraction-free) echelon basis for rank computation.
struct Echelon {
    cols: usize,
    rows: Vec<Vec<i128>>,
    pivots: Vec<usize>,
}

impl Echelon {
    fn new(cols: usize) -> Self {
        Echelon { cols, rows: Vec::new(), pivots: Vec::new() }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the basis with one-step fraction-free elimination;
    /// insert the remainder if it is nonzero. Returns true when the rank grew.
    fn insert(&mut self, mut v: Vec<i128>) -> bool {
        let mut prev_pivot: i128 = 1;
        for (row, &col) in self.rows.iter().zip(&self.pivots) {
            let p = row[col];
            let c = v[col];
            for j in 0..self.cols {
                let t = p
                    .checked_mul(v[j])
                    .and_then(|a| c.checked_mul(row[j]).and_then(|b| a.checked_sub(b)))
                    .expect("echelon overflow");
                debug_assert_eq!(t % prev_pivot, 0, "fraction-free division must be exact");
                v[j] = t / prev_pivot;
            }
            prev_pivot = p;
        }
        match v.iter().position(|&x| x != 0) {
            Some(col) => {
                self.rows.push(v);
                self.pivots.push(col);
                true
            }
            None => false,
        }
    }
}

/// Affine dimension of a set of 0/1 vectors given as edge masks: the rank of
/// the differences against the first vector, computed exactly. A single
/// point has dimension zero.
pub fn affine_dimension(vectors: &[u64], edge_count: usize) -> usize {
    assert!(!vectors.is_empty(), "affine dimension of an empty set");
    let base = vectors[0];
    let mut ech = Echelon::new(edge_count);
    for &v in &vectors[1..] {
        if ech.rank() == edge_count {
            break; // rank cannot exceed the ambient dimension
        }
        if v != base {
            ech.insert(mask_difference(v, base, edge_count));
        }
    }
    ech.rank()
}

fn mask_difference(v: u64, base: u64, m: usize) -> Vec<i128> {
    (0..m)
        .map(|e| i128::from(v >> e & 1) - i128::from(base >> e & 1))
        .collect()
}

/// A row rearranged for O(1) exact evaluation at an edge mask: coefficients
/// grouped by value, each with a popcount mask.
struct MaskRow {
    groups: Vec<(i64, u64)>,
    rhs: i64,
}

impl MaskRow {
    fn new(row: &LinearInequality) -> Self {
        let (coeffs, rhs) = row.integer_form();
        let mut groups: Vec<(i64, u64)> = Vec::new();
        for (e, c) in coeffs {
            match groups.iter_mut().find(|(v, _)| *v == c) {
                Some((_, mask)) => *mask |= 1 << e,
                None => groups.push((c, 1 << e)),
            }
        }
        MaskRow { groups, rhs }
    }

    fn eval(&self, x: u64) -> i64 {
        self.groups
            .iter()
            .map(|&(c, mask)| c * (mask & x).count_ones() as i64)
            .sum()
    }
}

struct FaceStats {
    valid: bool,
    tight_count: usize,
    face_dim: i64,
}

fn face_stats(vs: &VertexSet2EC, row: &LinearInequality) -> FaceStats {
    let mr = MaskRow::new(row);
    let dim = vs.dim;
    let mut valid = true;
    let mut tight_count = 0usize;
    let mut seen_nontight = false;
    let mut first_tight: Option<u64> = None;
    let mut ech = Echelon::new(vs.edge_count);
    for &v in &vs.vectors {
        let val = mr.eval(v);
        if val > mr.rhs {
            valid = false;
        }
        if val == mr.rhs {
            tight_count += 1;
            match first_tight {
                None => first_tight = Some(v),
                Some(base) => {
                    // The rank of the tight set is capped by dim, and by
                    // dim - 1 once a vector off the hyperplane exists.
                    let saturated = ech.rank() == dim
                        || (seen_nontight && dim > 0 && ech.rank() == dim - 1);
                    if !saturated && v != base {
                        ech.insert(mask_difference(v, base, vs.edge_count));
                    }
                }
            }
        } else {
            seen_nontight = true;
        }
    }
    let face_dim = if tight_count == 0 { -1 } else { ech.rank() as i64 };
    FaceStats { valid, tight_count, face_dim }
}

/// Face diagnostics of one inequality over an enumerated vertex set.
#[derive(Clone, Debug)]
pub struct FaceReport {
    pub inequality: LinearInequality,
    pub valid: bool,
    pub tight_vectors: Vec<u64>,
    /// Affine dimension of the tight set; -1 for the empty face.
    pub face_dim: i64,
    pub polytope_dim: usize,
    pub is_facet: bool,
}

pub fn face_report(vs: &VertexSet2EC, row: &LinearInequality) -> FaceReport {
    let stats = face_stats(vs, row);
    let mr = MaskRow::new(row);
    let tight_vectors: Vec<u64> = vs
        .vectors
        .iter()
        .copied()
        .filter(|&v| mr.eval(v) == mr.rhs)
        .collect();
    FaceReport {
        inequality: row.clone(),
        valid: stats.valid,
        tight_vectors,
        face_dim: stats.face_dim,
        polytope_dim: vs.dim,
        is_facet: is_facet(vs.dim, &stats),
    }
}

fn is_facet(polytope_dim: usize, stats: &FaceStats) -> bool {
    stats.valid
        && stats.tight_count > 0
        && polytope_dim > 0
        && stats.face_dim == polytope_dim as i64 - 1
}

/// Proper vertex sides, each listed once (vertex 0 stays outside).
fn proper_sides(n: usize) -> impl Iterator<Item = u32> {
    let upper = if n <= 1 { 1 } else { 1u32 << (n - 1) };
    (1u32..upper).map(|bits| bits << 1)
}

fn side_mask_vec(bits: u32, n: usize) -> Vec<bool> {
    (0..n).map(|v| bits >> v & 1 == 1).collect()
}

/// All binary vectors satisfying every asymmetric and connectivity cut
/// inequality are exactly the incidence vectors of 2-edge-connected
/// subgraphs. Checks the equality by full enumeration.
pub fn check_lattice_points(g: &Graph) -> Result<bool, OracleError> {
    if !is_two_edge_connected(g) {
        return Err(OracleError::NotTwoEdgeConnected);
    }
    let m = g.edge_count();
    if m > MAX_LATTICE_EDGES {
        return Err(OracleError::TooManyLatticeEdges(m));
    }
    let n = g.vertex_count();
    if n > MAX_SUBSET_VERTICES {
        return Err(OracleError::TooManyVertices(n));
    }

    // Per side: the crossing mask and the strictly-inside masks.
    let mut sides = Vec::new();
    for bits in proper_sides(n) {
        let mask = side_mask_vec(bits, n);
        let mut crossing = 0u64;
        let mut inside = 0u64;
        let mut outside = 0u64;
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            match (mask[u], mask[v]) {
                (true, false) | (false, true) => crossing |= 1 << e,
                (true, true) => inside |= 1 << e,
                (false, false) => outside |= 1 << e,
            }
        }
        sides.push((crossing, inside, outside));
    }

    let mut feasible = Vec::new();
    'cand: for x in 0u64..(1 << m) {
        for &(crossing, inside, outside) in &sides {
            let d = (x & crossing).count_ones();
            // d == 1 violates the asymmetric row for the single used edge;
            // d <= 1 with used edges strictly on both sides violates the
            // connectivity row for that pair.
            if d == 1 || (d <= 1 && x & inside != 0 && x & outside != 0) {
                continue 'cand;
            }
        }
        feasible.push(x);
    }

    let enumerated = enumerate_2ec(g)?;
    Ok(feasible == enumerated.vectors)
}

/// Is `e` contained in some 3-cut? Brute force over all vertex sides.
pub fn predicate_in_3cut(g: &Graph, e: EdgeId) -> Result<bool, OracleError> {
    let n = g.vertex_count();
    if n > MAX_SUBSET_VERTICES {
        return Err(OracleError::TooManyVertices(n));
    }
    let (a, b) = g.endpoints(e);
    for bits in proper_sides(n) {
        let mask = side_mask_vec(bits, n);
        if mask[a] == mask[b] {
            continue;
        }
        let size = g
            .edges()
            .iter()
            .filter(|&&(u, v)| mask[u] != mask[v])
            .count();
        if size == 3 {
            return Ok(true);
        }
    }
    Ok(false)
}

/// For a bridge `f` of `G[W]`, `W` being the side of the cut containing both
/// endpoints of `f`: the cut edges with one end in the component of
/// `G[W] - f` containing neither `e1` nor `e2`.
pub fn predicate_delta_wf(
    g: &Graph,
    cut: &CutSet,
    e1: EdgeId,
    e2: EdgeId,
    f: EdgeId,
) -> Result<Vec<EdgeId>, OracleError> {
    if f == e1 || f == e2 {
        return Err(OracleError::BadPredicate("f must differ from e1 and e2".into()));
    }
    let side_mask = cut.side_mask(g.vertex_count());
    let (fu, fv) = g.endpoints(f);
    if side_mask[fu] != side_mask[fv] {
        return Err(OracleError::BadPredicate("f crosses the cut".into()));
    }
    let w_value = side_mask[fu];
    let vertex_alive: Vec<bool> = side_mask.iter().map(|&b| b == w_value).collect();
    // f must be a bridge of G[W].
    let side_bridges = bridges_restricted(
        g,
        Restriction { vertex_alive: Some(&vertex_alive), edge_alive: None },
    );
    if !side_bridges.contains(&f) {
        return Err(OracleError::NotABridge(f));
    }
    let mut edge_alive = vec![true; g.edge_count()];
    edge_alive[f] = false;
    let comps = components_restricted(
        g,
        Restriction { vertex_alive: Some(&vertex_alive), edge_alive: Some(&edge_alive) },
    );
    let mut comp_of = vec![usize::MAX; g.vertex_count()];
    for (i, comp) in comps.iter().enumerate() {
        for &v in comp {
            comp_of[v] = i;
        }
    }
    let holds = |edge: EdgeId, comp: usize| {
        let (u, v) = g.endpoints(edge);
        comp_of[u] == comp && comp_of[v] == comp
    };
    // The two components at the ends of f; exactly one may contain e1/e2.
    let (cu, cv) = (comp_of[fu], comp_of[fv]);
    if cu == cv {
        return Err(OracleError::NotABridge(f));
    }
    let target = match (
        holds(e1, cu) || holds(e2, cu),
        holds(e1, cv) || holds(e2, cv),
    ) {
        (true, false) => cv,
        (false, true) => cu,
        _ => {
            return Err(OracleError::BadPredicate(
                "exactly one side of f must contain e1 or e2".into(),
            ))
        }
    };
    Ok(cut
        .cut_edges
        .iter()
        .copied()
        .filter(|&e| {
            let (u, v) = g.endpoints(e);
            comp_of[u] == target || comp_of[v] == target
        })
        .collect())
}

/// Result of checking one facet characterization over all its instances.
#[derive(Clone, Debug)]
pub struct TheoremCheck {
    pub name: &'static str,
    pub instances: usize,
    pub skipped: usize,
    pub mismatches: Vec<String>,
}

impl TheoremCheck {
    fn new(name: &'static str) -> Self {
        TheoremCheck { name, instances: 0, skipped: 0, mismatches: Vec::new() }
    }

    fn record(&mut self, expected: bool, actual: bool, witness: impl FnOnce() -> String) {
        self.instances += 1;
        if expected != actual {
            self.mismatches
                .push(format!("{} (expected facet: {expected}, got: {actual})", witness()));
        }
    }

    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Aggregated result of the facet-characterization suite on one graph.
#[derive(Clone, Debug)]
pub struct TheoremReport {
    pub class_count: usize,
    pub polytope_dim: usize,
    pub polytope_vertices: usize,
    pub checks: Vec<TheoremCheck>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed())
    }
}

impl std::fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(
            f,
            "polytope: {} vertices, dim {} = |CP| {}",
            self.polytope_vertices, self.polytope_dim, self.class_count
        )?;
        for check in &self.checks {
            write!(
                f,
                "  {:<22} {:>6} instances, {:>4} skipped: {}",
                check.name,
                check.instances,
                check.skipped,
                if check.passed() { "ok" } else { "MISMATCH" }
            )?;
            writeln!(f)?;
            for m in check.mismatches.iter().take(5) {
                writeln!(f, "    {m}")?;
            }
        }
        Ok(())
    }
}

const MAX_COPARALLEL_INSTANCES: usize = 100_000;

/// Check every instance of each facet characterization against the
/// enumerated polytope:
/// (a) `x_e >= 0` is a facet iff `e` is in no 3-cut;
/// (b) `x_e <= 1` is always a facet;
/// (c) asymmetric rows on minimal cuts of size >= 3 are facets iff every
///     bridge of a side shares a coparallel class with a cut edge; on
///     2-cuts the face is the whole polytope;
/// (d) connectivity rows on inclusion-minimal cuts are facets iff one of
///     the two bridge conditions holds;
/// (e) coparallel class rows with three or more components are facets;
/// (f) odd star rows of complete graphs are facets.
pub fn check_theorems(g: &Graph) -> Result<TheoremReport, OracleError> {
    if !is_two_edge_connected(g) {
        return Err(OracleError::NotTwoEdgeConnected);
    }
    let n = g.vertex_count();
    if n > MAX_SUBSET_VERTICES {
        return Err(OracleError::TooManyVertices(n));
    }
    let partition = coparallel_partition(g);
    let vs = enumerate_2ec_with_partition(g, &partition)?;

    let mut box_lower = TheoremCheck::new("box x_e >= 0");
    let mut box_upper = TheoremCheck::new("box x_e <= 1");
    for e in 0..g.edge_count() {
        let expected = !predicate_in_3cut(g, e)?;
        let actual = face_stats(&vs, &make_box_lower(e));
        box_lower.record(expected, is_facet(vs.dim, &actual), || format!("x{e} >= 0"));

        let actual = face_stats(&vs, &make_box_upper(e));
        box_upper.record(true, is_facet(vs.dim, &actual), || format!("x{e} <= 1"));
    }

    let mut asym = TheoremCheck::new("asymmetric cut");
    let mut conn = TheoremCheck::new("connectivity cut");
    for bits in proper_sides(n) {
        let mask = side_mask_vec(bits, n);
        let cut = match crate::graph::delta_from_mask(g, &mask) {
            Some(c) => c,
            None => continue,
        };
        let k = cut.cut_edges.len();
        let side_alive: Vec<bool> = mask.clone();
        let comp_alive: Vec<bool> = mask.iter().map(|&b| !b).collect();
        let bridges_side = bridges_restricted(
            g,
            Restriction { vertex_alive: Some(&side_alive), edge_alive: None },
        );
        let bridges_comp = bridges_restricted(
            g,
            Restriction { vertex_alive: Some(&comp_alive), edge_alive: None },
        );

        // (c) asymmetric rows.
        if k == 2 {
            // The face is the whole polytope; never a facet.
            for &e in &cut.cut_edges {
                let row = make_asymmetric(g, &cut, e).unwrap();
                let stats = face_stats(&vs, &row);
                let whole = stats.valid && stats.face_dim == vs.dim as i64;
                asym.record(true, whole && !is_facet(vs.dim, &stats), || {
                    format!("2-cut row {row} should define the whole polytope")
                });
            }
        } else if k >= 3 {
            if !cut.minimal {
                asym.skipped += cut.cut_edges.len(); // dominated by a smaller cut
            } else {
                let cond = |bridge_list: &[EdgeId]| {
                    bridge_list.iter().all(|&b| {
                        let class = partition.class_of[b]
                            .map(|idx| partition.classes[idx].as_slice())
                            .unwrap_or(&[]);
                        class.iter().any(|e| cut.cut_edges.contains(e))
                    })
                };
                let expected = cond(&bridges_side) && cond(&bridges_comp);
                for &e in &cut.cut_edges {
                    let row = make_asymmetric(g, &cut, e).unwrap();
                    let stats = face_stats(&vs, &row);
                    asym.record(expected, is_facet(vs.dim, &stats), || format!("{row}"));
                }
            }
        }

        // (d) connectivity rows on inclusion-minimal cuts.
        if cut.minimal {
            let inside: Vec<EdgeId> = (0..g.edge_count())
                .filter(|&e| {
                    let (u, v) = g.endpoints(e);
                    mask[u] && mask[v]
                })
                .collect();
            let outside: Vec<EdgeId> = (0..g.edge_count())
                .filter(|&e| {
                    let (u, v) = g.endpoints(e);
                    !mask[u] && !mask[v]
                })
                .collect();
            for &e1 in &inside {
                for &e2 in &outside {
                    let e1_bridge = bridges_side.contains(&e1);
                    let e2_bridge = bridges_comp.contains(&e2);
                    let cond_i = (e1_bridge || e2_bridge) && k == 2;
                    let cond_ii = !e1_bridge
                        && !e2_bridge
                        && bridges_side
                            .iter()
                            .chain(&bridges_comp)
                            .filter(|&&f| f != e1 && f != e2)
                            .all(|&f| {
                                predicate_delta_wf(g, &cut, e1, e2, f)
                                    .map(|set| set.len() == 1)
                                    .unwrap_or(false)
                            });
                    let expected = cond_i || cond_ii;
                    let row = make_connectivity(g, &cut, e1, e2).unwrap();
                    let stats = face_stats(&vs, &row);
                    conn.record(expected, is_facet(vs.dim, &stats), || format!("{row}"));
                }
            }
        } else {
            conn.skipped += 1;
        }
    }

    // (e) coparallel class rows: always facets when r >= 3.
    let mut cpc = TheoremCheck::new("coparallel class");
    for class_index in 0..partition.class_count() {
        let comps = components_after_class_removal(g, &partition, class_index)
            .expect("graph checked 2-edge-connected");
        let with_edges: Vec<_> = comps.iter().filter(|c| c.has_edges()).collect();
        let r = with_edges.len();
        if r < 3 {
            continue;
        }
        let combos: usize = with_edges.iter().map(|c| c.edges.len()).product::<usize>()
            * partition.classes[class_index].len();
        if cpc.instances + combos > MAX_COPARALLEL_INSTANCES {
            return Err(OracleError::TooManyInstances(cpc.instances + combos));
        }
        let mut choice = vec![0usize; r];
        loop {
            let e_choices: Vec<EdgeId> = choice
                .iter()
                .enumerate()
                .map(|(i, &j)| with_edges[i].edges[j])
                .collect();
            for &f in &partition.classes[class_index] {
                let row = make_coparallel_class(g, &partition, class_index, f, &e_choices)
                    .expect("valid construction");
                let stats = face_stats(&vs, &row);
                cpc.record(true, is_facet(vs.dim, &stats), || format!("{row}"));
            }
            // Advance the mixed-radix counter over component choices.
            let mut i = 0;
            loop {
                if i == r {
                    break;
                }
                choice[i] += 1;
                if choice[i] < with_edges[i].edges.len() {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
            if i == r {
                break;
            }
        }
    }

    // (f) odd star rows on complete graphs.
    let mut star = TheoremCheck::new("odd star");
    if g.is_complete() && n >= 4 {
        for row in enumerate_odd_stars(g).expect("complete graph") {
            let stats = face_stats(&vs, &row);
            star.record(true, is_facet(vs.dim, &stats), || format!("{row}"));
        }
    }

    Ok(TheoremReport {
        class_count: partition.class_count(),
        polytope_dim: vs.dim,
        polytope_vertices: vs.vector_count(),
        checks: vec![box_lower, box_upper, asym, conn, cpc, star],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::copar::coparallel_partition;
    use crate::corpus;
    use crate::graph::{is_two_edge_connected, Graph};
    use crate::ineq::{Family, Provenance, Rational};

    #[test]
    fn enumerate_cycle() {
        let vs = enumerate_2ec(&corpus::cycle(5)).unwrap();
        assert_eq!(vs.vector_count(), 2); // empty and the full cycle
        assert_eq!(vs.dim(), 1);
    }

    #[test]
    fn enumerate_k4_matches_independent_oracle() {
        let k4 = corpus::complete(4);
        // Independent 2^6 route first.
        let naive = naive_enumerate_2ec(&k4).unwrap();
        assert_eq!(naive.len(), 15);
        let vs = enumerate_2ec(&k4).unwrap();
        assert_eq!(vs.vectors(), naive.as_slice());
        assert_eq!(vs.dim(), 6);
    }

    #[test]
    fn enumerate_shared_vertex_triangles() {
        let g = corpus::two_triangles_shared_vertex();
        let naive = naive_enumerate_2ec(&g).unwrap();
        assert_eq!(naive.len(), 4); // empty, each triangle, both
        let vs = enumerate_2ec(&g).unwrap();
        assert_eq!(vs.vectors(), naive.as_slice());
    }

    #[test]
    fn class_union_enumeration_matches_naive_on_random_graphs() {
        for seed in 0..25 {
            let g = corpus::random_2ec_graph(seed);
            if g.edge_count() > 14 {
                continue;
            }
            let naive = naive_enumerate_2ec(&g).unwrap();
            let vs = enumerate_2ec(&g).unwrap();
            assert_eq!(vs.vectors(), naive.as_slice(), "seed {seed}");
        }
    }

    #[test]
    fn affine_dimension_of_simple_sets() {
        assert_eq!(affine_dimension(&[0], 4), 0);
        let c5 = enumerate_2ec(&corpus::cycle(5)).unwrap();
        assert_eq!(affine_dimension(c5.vectors(), 5), 1);
        let k4 = enumerate_2ec(&corpus::complete(4)).unwrap();
        assert_eq!(affine_dimension(k4.vectors(), 6), 6);
    }

    #[test]
    fn dimension_equals_class_count_on_corpus() {
        for (name, g) in corpus::verification_corpus() {
            if g.edge_count() > 16 {
                continue;
            }
            let vs = enumerate_2ec(&g).unwrap();
            assert_eq!(
                vs.dim(),
                crate::copar::dimension(&g),
                "dimension mismatch on {name}"
            );
        }
    }

    #[test]
    fn face_report_examples() {
        let k4 = corpus::complete(4);
        let vs = enumerate_2ec(&k4).unwrap();

        let report = face_report(&vs, &crate::ineq::make_box_upper(0));
        assert!(report.valid);
        assert!(report.is_facet);
        assert_eq!(report.face_dim, 5);

        // x(E) >= 0 is valid and tight only at the origin.
        let row = LinearInequality::new(
            (0..6).map(|e| (e, Rational::from_integer(-1))).collect(),
            Rational::from_integer(0),
            Family::BoxLower,
            Provenance::BoxBound { edge: 0 },
        );
        let report = face_report(&vs, &row);
        assert!(report.valid);
        assert_eq!(report.tight_vectors, vec![0]);
        assert_eq!(report.face_dim, 0);
        assert!(!report.is_facet);

        // On a 2-cut the asymmetric face is the whole polytope.
        let c4 = corpus::cycle(4);
        let vs = enumerate_2ec(&c4).unwrap();
        let cut = crate::graph::delta(&c4, &[0]).unwrap();
        let row = make_asymmetric(&c4, &cut, cut.cut_edges[0]).unwrap();
        let report = face_report(&vs, &row);
        assert!(report.valid);
        assert_eq!(report.face_dim, vs.dim() as i64);
        assert!(!report.is_facet);
    }

    #[test]
    fn lattice_points_examples() {
        assert!(check_lattice_points(&corpus::complete(4)).unwrap());
        assert!(check_lattice_points(&corpus::cycle(5)).unwrap());
        assert!(check_lattice_points(&corpus::linked_triangles()).unwrap());
        assert_eq!(
            check_lattice_points(&corpus::two_triangles_bridged()).unwrap_err(),
            OracleError::NotTwoEdgeConnected
        );
    }

    #[test]
    fn three_cut_predicate() {
        let k4 = corpus::complete(4);
        for e in 0..6 {
            assert!(predicate_in_3cut(&k4, e).unwrap());
        }
        let c5 = corpus::cycle(5);
        for e in 0..5 {
            assert!(!predicate_in_3cut(&c5, e).unwrap(), "cycle cuts are even");
        }
        let k5 = corpus::complete(5);
        for e in 0..10 {
            assert!(!predicate_in_3cut(&k5, e).unwrap(), "K5 cuts have size >= 4");
        }
    }

    #[test]
    fn delta_wf_predicate() {
        let (g, side, e1, e2, f) = corpus::bridged_side_fixture();
        let cut = crate::graph::delta(&g, &side).unwrap();
        let set = predicate_delta_wf(&g, &cut, e1, e2, f).unwrap();
        assert_eq!(set, vec![14, 15]);

        // A 2-edge-connected side has no bridges: any inner edge fails.
        let g2 = corpus::linked_triangles();
        let cut2 = crate::graph::delta(&g2, &[0, 1, 2]).unwrap();
        assert_eq!(
            predicate_delta_wf(&g2, &cut2, 0, 3, 1).unwrap_err(),
            OracleError::NotABridge(1)
        );
    }

    #[test]
    fn delta_wf_singleton_case() {
        // A leaf triangle hanging off the side by a bridge, touched by one
        // cut edge.
        // Side: triangle {0,1,2} (with e1) + bridge (2,3) + triangle {3,4,5},
        // cut edges: two into the first triangle, one into the second.
        let g = Graph::new(
            9,
            [
                (0, 1),
                (1, 2),
                (0, 2),
                (3, 4),
                (4, 5),
                (3, 5),
                (2, 3), // bridge f
                (6, 7),
                (7, 8),
                (6, 8),
                (0, 6),
                (1, 7),
                (4, 8), // single edge into the far triangle
            ],
        )
        .unwrap();
        assert!(is_two_edge_connected(&g));
        let cut = crate::graph::delta(&g, &[0, 1, 2, 3, 4, 5]).unwrap();
        let set = predicate_delta_wf(&g, &cut, 0, 7, 6).unwrap();
        assert_eq!(set, vec![12]);
    }

    #[test]
    fn theorems_on_k4() {
        let report = check_theorems(&corpus::complete(4)).unwrap();
        assert!(report.passed(), "{report}");
        assert_eq!(report.polytope_vertices, 15);
        assert_eq!(report.polytope_dim, 6);
        // Every K4 edge lies in a 3-cut, so no lower box row is a facet;
        // passing means expected == actual == false throughout.
        let box_lower = &report.checks[0];
        assert_eq!(box_lower.instances, 6);
    }

    #[test]
    fn theorems_on_triangle_ring_and_c6() {
        let report = check_theorems(&corpus::triangle_ring()).unwrap();
        assert!(report.passed(), "{report}");
        let cpc = report.checks.iter().find(|c| c.name == "coparallel class").unwrap();
        assert!(cpc.instances > 0, "ring must exercise the coparallel theorem");

        let report = check_theorems(&corpus::cycle(6)).unwrap();
        assert!(report.passed(), "{report}");
    }

    /// Degenerate coparallel rows: r = 1 reproduces the upper box row and
    /// r = 2 is tight on the same vertices as the matching connectivity row.
    #[test]
    fn degenerate_coparallel_rows() {
        // r = 1: K4 minus nothing; any singleton class leaves one component.
        let k4 = corpus::complete(4);
        let cp = coparallel_partition(&k4);
        let row = make_coparallel_class(&k4, &cp, 0, 0, &[3]).unwrap();
        let box_row = crate::ineq::make_box_upper(3);
        assert_eq!(row.canonical_key(), box_row.canonical_key());

        // r = 2: linked triangles, class {6, 7}.
        let g = corpus::linked_triangles();
        let cp = coparallel_partition(&g);
        let class_index = cp.class_of[6].unwrap();
        let row = make_coparallel_class(&g, &cp, class_index, 6, &[0, 3]).unwrap();
        let cut = crate::graph::delta(&g, &[0, 1, 2]).unwrap();
        let conn = make_connectivity(&g, &cut, 0, 3).unwrap();
        let vs = enumerate_2ec(&g).unwrap();
        let tight_a = face_report(&vs, &row).tight_vectors;
        let tight_b = face_report(&vs, &conn).tight_vectors;
        assert_eq!(tight_a, tight_b);
    }

    #[test]
    fn budget_errors() {
        // 17 isolated vertices exceed the subset budget.
        let g = Graph::new(17, (0..17).map(|i| (i, (i + 1) % 17))).unwrap();
        assert!(matches!(
            predicate_in_3cut(&g, 0),
            Err(OracleError::TooManyVertices(17))
        ));
        assert!(matches!(
            check_lattice_points(&corpus::complete(7)),
            Err(OracleError::TooManyLatticeEdges(21))
        ));
    }
}
