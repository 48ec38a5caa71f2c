//! Branch-and-cut search for a maximum-weight 2-edge-connected subgraph.
//!
//! The LP relaxation starts from the box alone and grows a shared pool of
//! valid rows through separation. Integral LP points are always checked
//! combinatorially (the rows describe exactly the incidence vectors of
//! 2-edge-connected subgraphs, so an integral point that survives exact
//! separation is feasible); fractional separation is optional per config.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use crate::copar::{components_after_class_removal, coparallel_partition, ClassComponent};
use crate::graph::{
    components_restricted, delta_from_mask, is_two_edge_connected, EdgeId, EdgeSubgraph,
    EdgeWeights, Graph, Restriction,
};
use crate::ineq::{
    enumerate_odd_stars, make_asymmetric, make_connectivity, separate_asymmetric,
    separate_connectivity, separate_coparallel, Family, FractionalPoint, LinearInequality,
    ViolatedRow,
};
use crate::simplex::{self, LinearProgram, LpOutcome, SimplexError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Model {
    Basic,
    Strengthened,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeparationMode {
    IntegerOnly,
    Fractional,
}

#[derive(Clone, Debug)]
pub struct ModelConfig {
    pub model: Model,
    pub separation_mode: SeparationMode,
    pub time_limit: Duration,
    pub cut_cap_per_round: usize,
    pub feasibility_tol: f64,
    pub integrality_tol: f64,
    pub violation_tol: f64,
    pub seed: u64,
}

impl Default for ModelConfig {
    fn default() -> Self {
        ModelConfig {
            model: Model::Basic,
            separation_mode: SeparationMode::IntegerOnly,
            time_limit: Duration::from_secs(600),
            cut_cap_per_round: 20,
            feasibility_tol: 1e-9,
            integrality_tol: 1e-6,
            violation_tol: 1e-6,
            seed: 0,
        }
    }
}

impl ModelConfig {
    pub fn with_variant(model: Model, separation_mode: SeparationMode) -> Self {
        ModelConfig { model, separation_mode, ..Default::default() }
    }

    pub fn all_variants() -> [ModelConfig; 4] {
        [
            ModelConfig::with_variant(Model::Basic, SeparationMode::IntegerOnly),
            ModelConfig::with_variant(Model::Basic, SeparationMode::Fractional),
            ModelConfig::with_variant(Model::Strengthened, SeparationMode::IntegerOnly),
            ModelConfig::with_variant(Model::Strengthened, SeparationMode::Fractional),
        ]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Optimal,
    TimeLimit,
}

#[derive(Clone, Debug, Default)]
pub struct Stats {
    pub nodes: usize,
    pub lp_solves: usize,
    pub cuts_asymmetric: usize,
    pub cuts_connectivity: usize,
    pub cuts_coparallel: usize,
    pub cuts_odd_star: usize,
    pub wall_time: Duration,
}

impl Stats {
    fn absorb(&mut self, other: &Stats) {
        self.nodes += other.nodes;
        self.lp_solves += other.lp_solves;
        self.cuts_asymmetric += other.cuts_asymmetric;
        self.cuts_connectivity += other.cuts_connectivity;
        self.cuts_coparallel += other.cuts_coparallel;
        self.cuts_odd_star += other.cuts_odd_star;
    }
}

#[derive(Clone, Debug)]
pub struct SolveReport {
    pub incumbent: EdgeSubgraph,
    pub objective: i64,
    pub dual_bound: f64,
    pub status: Status,
    pub stats: Stats,
}

/// Deduplicating pool of globally valid rows, shared by every tree node.
#[derive(Default)]
pub struct CutPool {
    rows: Vec<LinearInequality>,
    keys: HashSet<(Vec<(EdgeId, (i64, i64))>, (i64, i64))>,
}

impl CutPool {
    pub fn new() -> Self {
        Self::default()
    }

    /// Insert unless a row with the identical canonical form is present.
    pub fn insert(&mut self, row: LinearInequality) -> bool {
        if self.keys.insert(row.canonical_key()) {
            self.rows.push(row);
            true
        } else {
            false
        }
    }

    pub fn rows(&self) -> &[LinearInequality] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

/// Delete bridges, split into connected components, and drop edgeless
/// leftovers. Each returned component is connected and bridgeless, with a
/// back-map from component edge ids to edge ids of the input graph.
pub fn preprocess(g: &Graph, w: &EdgeWeights) -> Vec<(Graph, EdgeWeights, Vec<EdgeId>)> {
    assert_eq!(w.len(), g.edge_count());
    let mut alive = vec![true; g.edge_count()];
    // Bridge deletion can expose new bridges; iterate to a fixed point.
    loop {
        let found = crate::graph::bridges_restricted(
            g,
            Restriction { vertex_alive: None, edge_alive: Some(&alive) },
        );
        if found.is_empty() {
            break;
        }
        for e in found {
            alive[e] = false;
        }
    }
    let comps = components_restricted(
        g,
        Restriction { vertex_alive: None, edge_alive: Some(&alive) },
    );
    let mut out = Vec::new();
    for comp in comps {
        let vertex_index: std::collections::HashMap<usize, usize> =
            comp.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut edges = Vec::new();
        let mut weights = Vec::new();
        let mut back = Vec::new();
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            if alive[e] && vertex_index.contains_key(&u) && vertex_index.contains_key(&v) {
                edges.push((vertex_index[&u], vertex_index[&v]));
                weights.push(w[e]);
                back.push(e);
            }
        }
        if edges.is_empty() {
            continue;
        }
        let sub = Graph::new(comp.len(), edges).expect("component of a simple graph");
        out.push((sub, weights, back));
    }
    out
}

/// Solve a maximum-weight 2-edge-connected subgraph problem. Bridges are
/// deleted and components solved independently; a 2-edge-connected subgraph
/// is connected, so the result is the best single component optimum (or the
/// empty subgraph at objective zero).
pub fn solve(g: &Graph, w: &EdgeWeights, cfg: &ModelConfig) -> SolveReport {
    let start = Instant::now();
    let deadline = start + cfg.time_limit;
    let mut best: Option<(i64, Vec<EdgeId>)> = None;
    let mut stats = Stats::default();
    let mut status = Status::Optimal;
    let mut dual_bound = 0f64;
    for (sub, sub_w, back) in preprocess(g, w) {
        let mut search = ComponentSearch::new(&sub, &sub_w, cfg, deadline);
        let outcome = search.run();
        stats.absorb(&search.stats);
        if outcome.status == Status::TimeLimit {
            status = Status::TimeLimit;
        }
        dual_bound = dual_bound.max(outcome.dual_bound);
        if outcome.objective > best.as_ref().map_or(0, |(obj, _)| *obj) {
            best = Some((
                outcome.objective,
                outcome.incumbent.iter().map(|&e| back[e]).collect(),
            ));
        }
    }
    let (objective, edges) = best.unwrap_or((0, Vec::new()));
    // The empty subgraph is always available.
    let dual_bound = dual_bound.max(0.0).max(objective as f64);
    stats.wall_time = start.elapsed();
    SolveReport {
        incumbent: EdgeSubgraph { edges },
        objective,
        dual_bound: if status == Status::Optimal { objective as f64 } else { dual_bound },
        status,
        stats,
    }
}

struct ComponentOutcome {
    incumbent: Vec<EdgeId>,
    objective: i64,
    dual_bound: f64,
    status: Status,
}

struct Node {
    /// (edge, fixed value) pairs along the branching path.
    fixings: Vec<(EdgeId, bool)>,
    bound: f64,
    depth: usize,
}

struct ComponentSearch<'a> {
    g: &'a Graph,
    w: &'a EdgeWeights,
    cfg: &'a ModelConfig,
    deadline: Instant,
    pool: CutPool,
    class_components: Vec<(usize, Vec<ClassComponent>)>,
    partition: Option<crate::copar::CoparallelPartition>,
    stats: Stats,
    incumbent: Option<(i64, Vec<EdgeId>)>,
}

impl<'a> ComponentSearch<'a> {
    fn new(g: &'a Graph, w: &'a EdgeWeights, cfg: &'a ModelConfig, deadline: Instant) -> Self {
        debug_assert!(is_two_edge_connected(g));
        let mut pool = CutPool::new();
        let mut stats = Stats::default();
        let partition = if cfg.model == Model::Strengthened {
            Some(coparallel_partition(g))
        } else {
            None
        };
        // Odd star rows exist only on complete graphs and are few; install
        // them up front instead of separating.
        if cfg.model == Model::Strengthened && g.is_complete() && g.vertex_count() >= 4 {
            for row in enumerate_odd_stars(g).expect("complete graph") {
                if pool.insert(row) {
                    stats.cuts_odd_star += 1;
                }
            }
        }
        let class_components = match &partition {
            Some(p) => (0..p.class_count())
                .map(|idx| {
                    (idx, components_after_class_removal(g, p, idx).expect("2ec component"))
                })
                .filter(|(_, comps)| comps.iter().filter(|c| c.has_edges()).count() >= 3)
                .collect(),
            None => Vec::new(),
        };
        ComponentSearch {
            g,
            w,
            cfg,
            deadline,
            pool,
            class_components,
            partition,
            stats,
            incumbent: None,
        }
    }

    fn run(&mut self) -> ComponentOutcome {
        // The empty subgraph seeds the incumbent so bound pruning is active
        // from the root.
        self.incumbent = Some((0, Vec::new()));
        let trivial_bound: f64 = self.w.iter().filter(|&&x| x > 0).sum::<i64>() as f64;
        let mut open = std::collections::BinaryHeap::new();
        open.push(OrderedNode(Node { fixings: Vec::new(), bound: trivial_bound, depth: 0 }));
        let mut timed_out = false;

        while let Some(OrderedNode(node)) = open.pop() {
            if Instant::now() > self.deadline {
                timed_out = true;
                // Nodes still open keep the dual bound honest.
                open.push(OrderedNode(node));
                break;
            }
            let incumbent_obj = self.incumbent.as_ref().map_or(0, |(o, _)| *o);
            if prune_bound(node.bound, self.cfg.integrality_tol) <= incumbent_obj {
                continue;
            }
            self.stats.nodes += 1;
            match self.process_node(&node) {
                NodeResult::Pruned => {}
                NodeResult::NewIncumbent => {}
                NodeResult::Branch { point, bound } => {
                    if prune_bound(bound, self.cfg.integrality_tol) <= incumbent_obj {
                        continue;
                    }
                    let e = self.branch_edge(&point, &node.fixings);
                    for value in [false, true] {
                        let mut fixings = node.fixings.clone();
                        fixings.push((e, value));
                        open.push(OrderedNode(Node {
                            fixings,
                            bound,
                            depth: node.depth + 1,
                        }));
                    }
                }
                NodeResult::TimedOut(keep_bound) => {
                    timed_out = true;
                    open.push(OrderedNode(Node { fixings: node.fixings, bound: keep_bound, depth: node.depth }));
                    break;
                }
            }
        }

        let (objective, incumbent) = self.incumbent.clone().unwrap_or((0, Vec::new()));
        let dual_bound = if timed_out {
            open.iter()
                .map(|OrderedNode(n)| n.bound)
                .fold(objective as f64, f64::max)
        } else {
            objective as f64
        };
        ComponentOutcome {
            incumbent,
            objective,
            dual_bound,
            status: if timed_out { Status::TimeLimit } else { Status::Optimal },
        }
    }

    fn branch_edge(&self, point: &[f64], fixings: &[(EdgeId, bool)]) -> EdgeId {
        let fixed: HashSet<EdgeId> = fixings.iter().map(|&(e, _)| e).collect();
        let mut best = None;
        let mut best_score = f64::INFINITY;
        for (e, &x) in point.iter().enumerate() {
            if fixed.contains(&e) {
                continue;
            }
            let score = (x - 0.5).abs();
            if score < best_score - 1e-12 {
                best_score = score;
                best = Some(e);
            }
        }
        best.expect("fractional point has an unfixed coordinate")
    }

    fn build_lp(&self, fixings: &[(EdgeId, bool)]) -> LinearProgram {
        let m = self.g.edge_count();
        let mut lower = vec![0.0; m];
        let mut upper = vec![1.0; m];
        for &(e, value) in fixings {
            lower[e] = if value { 1.0 } else { 0.0 };
            upper[e] = lower[e];
        }
        let objective: Vec<f64> = self.w.iter().map(|&x| x as f64).collect();
        let mut lp = LinearProgram::new(objective, lower, upper);
        for row in self.pool.rows() {
            let coeffs: Vec<(usize, f64)> = row
                .coefficients()
                .iter()
                .map(|&(e, c)| (e, crate::ineq::ratio_to_f64(c)))
                .collect();
            lp.add_row(coeffs, crate::ineq::ratio_to_f64(row.rhs()));
        }
        lp
    }

    fn process_node(&mut self, node: &Node) -> NodeResult {
        let mut last_bound = node.bound;
        loop {
            if Instant::now() > self.deadline {
                return NodeResult::TimedOut(last_bound);
            }
            self.stats.lp_solves += 1;
            let lp = self.build_lp(&node.fixings);
            let (value, point) = match simplex::solve(&lp) {
                Ok(LpOutcome::Optimal { value, point }) => (value, point),
                Ok(LpOutcome::Infeasible) => return NodeResult::Pruned,
                Err(SimplexError::IterationLimit(n)) => {
                    panic!("LP solver failed to converge after {n} pivots")
                }
                Err(SimplexError::Unbounded) => {
                    panic!("box-constrained LP reported unbounded")
                }
            };
            last_bound = value;
            let incumbent_obj = self.incumbent.as_ref().map_or(0, |(o, _)| *o);
            if prune_bound(value, self.cfg.integrality_tol) <= incumbent_obj {
                return NodeResult::Pruned;
            }

            if let Some(rounded) = self.round_integral(&point) {
                // Exact combinatorial separation at integral points; this is
                // what makes integral survivors genuinely feasible.
                match self.separate_integral(&rounded) {
                    Some(rows) => {
                        self.add_rows(rows);
                        continue;
                    }
                    None => {
                        let edges: Vec<EdgeId> =
                            (0..rounded.len()).filter(|&e| rounded[e]).collect();
                        let objective: i64 = edges.iter().map(|&e| self.w[e]).sum();
                        assert!(self.revalidate(&edges), "incumbent fails revalidation");
                        if objective > incumbent_obj {
                            self.incumbent = Some((objective, edges));
                        }
                        return NodeResult::NewIncumbent;
                    }
                }
            }

            if self.cfg.separation_mode == SeparationMode::Fractional {
                let rows = self.separate_fractional(&point);
                if !rows.is_empty() {
                    self.add_rows(rows);
                    continue;
                }
            }
            return NodeResult::Branch { point, bound: value };
        }
    }

    fn round_integral(&self, point: &[f64]) -> Option<Vec<bool>> {
        let tol = self.cfg.integrality_tol;
        let mut out = Vec::with_capacity(point.len());
        for &x in point {
            if x <= tol {
                out.push(false);
            } else if (x - 1.0).abs() <= tol {
                out.push(true);
            } else {
                return None;
            }
        }
        Some(out)
    }

    fn revalidate(&self, edges: &[EdgeId]) -> bool {
        if edges.is_empty() {
            return true;
        }
        let alive: Vec<bool> = {
            let mut mask = vec![false; self.g.edge_count()];
            for &e in edges {
                mask[e] = true;
            }
            mask
        };
        let touched: HashSet<usize> = edges
            .iter()
            .flat_map(|&e| {
                let (u, v) = self.g.endpoints(e);
                [u, v]
            })
            .collect();
        let vertex_alive: Vec<bool> =
            (0..self.g.vertex_count()).map(|v| touched.contains(&v)).collect();
        let r = Restriction { vertex_alive: Some(&vertex_alive), edge_alive: Some(&alive) };
        components_restricted(self.g, r).len() == 1
            && crate::graph::bridges_restricted(self.g, r).is_empty()
    }

    /// Exact separation at a 0/1 point: if the support is 2-edge-connected
    /// there is nothing to cut (the point is feasible); otherwise a bridge
    /// yields a violated asymmetric row and a disconnection a violated
    /// connectivity row.
    fn separate_integral(&mut self, x: &[bool]) -> Option<Vec<(Family, LinearInequality)>> {
        let edges: Vec<EdgeId> = (0..x.len()).filter(|&e| x[e]).collect();
        if edges.is_empty() {
            return None;
        }
        let touched: HashSet<usize> = edges
            .iter()
            .flat_map(|&e| {
                let (u, v) = self.g.endpoints(e);
                [u, v]
            })
            .collect();
        let vertex_alive: Vec<bool> =
            (0..self.g.vertex_count()).map(|v| touched.contains(&v)).collect();
        let edge_alive: Vec<bool> = (0..self.g.edge_count()).map(|e| x[e]).collect();
        let r = Restriction { vertex_alive: Some(&vertex_alive), edge_alive: Some(&edge_alive) };

        let comps = components_restricted(self.g, r);
        if comps.len() > 1 {
            // Disconnected support: cut the pair of first edges of two
            // components with the connectivity row over S = V(comp 0).
            let mut side_mask = vec![false; self.g.vertex_count()];
            for &v in &comps[0] {
                side_mask[v] = true;
            }
            let cut = delta_from_mask(self.g, &side_mask).expect("proper side");
            let e1 = *edges
                .iter()
                .find(|&&e| {
                    let (u, v) = self.g.endpoints(e);
                    side_mask[u] && side_mask[v]
                })
                .expect("component 0 contains an edge");
            let e2 = *edges
                .iter()
                .find(|&&e| {
                    let (u, v) = self.g.endpoints(e);
                    !side_mask[u] && !side_mask[v]
                })
                .expect("another component contains an edge");
            let row = make_connectivity(self.g, &cut, e1, e2).expect("sides verified");
            return Some(vec![(Family::ConnectivityCut, row)]);
        }

        let bridge_edges = crate::graph::bridges_restricted(self.g, r);
        if let Some(&b) = bridge_edges.first() {
            // S = one side of the support minus the bridge.
            let (bu, _) = self.g.endpoints(b);
            let mut without_bridge = edge_alive.clone();
            without_bridge[b] = false;
            let comps = components_restricted(
                self.g,
                Restriction { vertex_alive: Some(&vertex_alive), edge_alive: Some(&without_bridge) },
            );
            let side = comps
                .iter()
                .find(|c| c.contains(&bu))
                .expect("bridge endpoint in a component");
            let mut side_mask = vec![false; self.g.vertex_count()];
            for &v in side {
                side_mask[v] = true;
            }
            let cut = delta_from_mask(self.g, &side_mask).expect("proper side");
            let row = make_asymmetric(self.g, &cut, b).expect("bridge crosses the side");
            return Some(vec![(Family::AsymmetricCut, row)]);
        }
        None
    }

    fn separate_fractional(&mut self, point: &[f64]) -> Vec<(Family, LinearInequality)> {
        let x = FractionalPoint::new(point.iter().map(|&v| v.clamp(0.0, 1.0)).collect());
        let tol = self.cfg.violation_tol;
        let cap = self.cfg.cut_cap_per_round;
        let mut out = Vec::new();
        let take = |result: Vec<ViolatedRow>, family: Family, out: &mut Vec<_>| {
            for v in result.into_iter().take(cap) {
                out.push((family, v.row));
            }
        };
        take(
            separate_asymmetric(self.g, &x, tol).violated,
            Family::AsymmetricCut,
            &mut out,
        );
        take(
            separate_connectivity(self.g, &x, tol).violated,
            Family::ConnectivityCut,
            &mut out,
        );
        if let Some(partition) = &self.partition {
            if !self.class_components.is_empty() {
                let res = separate_coparallel(self.g, partition, &x, tol)
                    .expect("component graph is 2-edge-connected");
                take(res.violated, Family::CoparallelClass, &mut out);
            }
        }
        out
    }

    fn add_rows(&mut self, rows: Vec<(Family, LinearInequality)>) {
        for (family, row) in rows {
            if self.pool.insert(row) {
                match family {
                    Family::AsymmetricCut => self.stats.cuts_asymmetric += 1,
                    Family::ConnectivityCut => self.stats.cuts_connectivity += 1,
                    Family::CoparallelClass => self.stats.cuts_coparallel += 1,
                    Family::OddStar => self.stats.cuts_odd_star += 1,
                    Family::BoxLower | Family::BoxUpper => {}
                }
            }
        }
    }
}

enum NodeResult {
    Pruned,
    NewIncumbent,
    Branch { point: Vec<f64>, bound: f64 },
    TimedOut(f64),
}

/// Integer weights allow rounding the LP bound down before pruning.
fn prune_bound(bound: f64, integrality_tol: f64) -> i64 {
    (bound + integrality_tol).floor() as i64
}

struct OrderedNode(Node);

impl PartialEq for OrderedNode {
    fn eq(&self, other: &Self) -> bool {
        self.0.bound == other.0.bound && self.0.depth == other.0.depth
    }
}
impl Eq for OrderedNode {}
impl PartialOrd for OrderedNode {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for OrderedNode {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // Best dual bound first; deeper node on ties.
        self.0
            .bound
            .total_cmp(&other.0.bound)
            .then(self.0.depth.cmp(&other.0.depth))
    }
}

/// The relaxation value at the root after at most `max_rounds` rounds of
/// fractional separation under the given config. Used to compare the
/// strength of model variants.
pub fn root_relaxation_bound(
    g: &Graph,
    w: &EdgeWeights,
    cfg: &ModelConfig,
    max_rounds: usize,
) -> f64 {
    let deadline = Instant::now() + cfg.time_limit;
    let mut search = ComponentSearch::new(g, w, cfg, deadline);
    let mut bound = f64::INFINITY;
    for _ in 0..=max_rounds {
        let lp = search.build_lp(&[]);
        let (value, point) = match simplex::solve(&lp) {
            Ok(LpOutcome::Optimal { value, point }) => (value, point),
            _ => break,
        };
        bound = value;
        let rows = if let Some(rounded) = search.round_integral(&point) {
            search.separate_integral(&rounded).unwrap_or_default()
        } else {
            search.separate_fractional(&point)
        };
        if rows.is_empty() {
            break;
        }
        search.add_rows(rows);
    }
    bound
}

/// Brute-force reference optimum over the enumerated vertex set; exact.
pub fn brute_force_optimum(g: &Graph, w: &EdgeWeights) -> Result<i64, crate::oracle::OracleError> {
    let vs = crate::oracle::enumerate_2ec(g)?;
    Ok(vs
        .vectors()
        .iter()
        .map(|&mask| {
            (0..g.edge_count())
                .filter(|&e| mask >> e & 1 == 1)
                .map(|e| w[e])
                .sum::<i64>()
        })
        .max()
        .unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::graph::Graph;

    fn quick_cfg(model: Model, mode: SeparationMode) -> ModelConfig {
        ModelConfig {
            time_limit: Duration::from_secs(60),
            ..ModelConfig::with_variant(model, mode)
        }
    }

    #[test]
    fn preprocess_examples() {
        let bridged = corpus::two_triangles_bridged();
        let w = vec![1; 7];
        let parts = preprocess(&bridged, &w);
        assert_eq!(parts.len(), 2);
        assert!(parts.iter().all(|(g, _, _)| g.edge_count() == 3));

        let g = corpus::complete(4);
        let parts = preprocess(&g, &vec![1; 6]);
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].2, vec![0, 1, 2, 3, 4, 5]);

        // A tree melts away entirely.
        let tree = Graph::new(4, [(0, 1), (1, 2), (1, 3)]).unwrap();
        assert!(preprocess(&tree, &vec![5; 3]).is_empty());
    }

    #[test]
    fn solve_cycle_examples() {
        let c5 = corpus::cycle(5);
        for cfg in ModelConfig::all_variants() {
            let report = solve(&c5, &vec![1; 5], &cfg);
            assert_eq!(report.status, Status::Optimal);
            assert_eq!(report.objective, 5);
            assert_eq!(report.incumbent.edges.len(), 5);
        }

        // One weight -2: the all-or-nothing cycle still totals 2 > 0.
        let mut w = vec![1; 5];
        w[2] = -2;
        let report = solve(&c5, &w, &ModelConfig::default());
        assert_eq!(report.objective, 2);
        assert_eq!(report.incumbent.edges.len(), 5);

        // All weights negative: the empty subgraph wins.
        let report = solve(&c5, &vec![-1; 5], &ModelConfig::default());
        assert_eq!(report.objective, 0);
        assert!(report.incumbent.edges.is_empty());
    }

    #[test]
    fn solve_k4_matches_brute_force() {
        let k4 = corpus::complete(4);
        let mut rng = crate::rng::Rng::new(0xbead);
        for _ in 0..10 {
            let w: Vec<i64> = (0..6).map(|_| rng.uniform_i64(-5, 6)).collect();
            let reference = brute_force_optimum(&k4, &w).unwrap();
            for cfg in ModelConfig::all_variants() {
                let report = solve(&k4, &w, &cfg);
                assert_eq!(report.objective, reference, "weights {w:?}");
                assert_eq!(report.status, Status::Optimal);
            }
        }
    }

    #[test]
    fn solver_only_returns_valid_incumbents() {
        let bridged = corpus::two_triangles_bridged();
        // Make one triangle better than the other; the bridge is unusable.
        let w = vec![3, 3, 3, 100, 1, 1, 1];
        let report = solve(&bridged, &w, &ModelConfig::default());
        assert_eq!(report.objective, 9);
        assert_eq!(report.incumbent.edges, vec![0, 1, 2]);
    }

    #[test]
    fn cut_pool_deduplicates_canonical_forms() {
        let g = corpus::cycle(4);
        let cut = crate::graph::delta(&g, &[0]).unwrap();
        let row = make_asymmetric(&g, &cut, cut.cut_edges[0]).unwrap();
        let mut pool = CutPool::new();
        assert!(pool.insert(row.clone()));
        assert!(!pool.insert(row.clone()));

        // Same coefficients from different provenance: still deduplicated.
        let cut_other_side = crate::graph::delta(&g, &[1, 2, 3]).unwrap();
        let row2 = make_asymmetric(&g, &cut_other_side, cut.cut_edges[0]).unwrap();
        assert_eq!(row.canonical_key(), row2.canonical_key());
        assert!(!pool.insert(row2));

        // Equal support, different coefficients: kept.
        let conn_cut = crate::graph::delta(&corpus::linked_triangles(), &[0, 1, 2]).unwrap();
        let lt = corpus::linked_triangles();
        let a = make_connectivity(&lt, &conn_cut, 0, 3).unwrap();
        let b = make_connectivity(&lt, &conn_cut, 0, 4).unwrap();
        let mut pool = CutPool::new();
        assert!(pool.insert(a));
        assert!(pool.insert(b));
        assert_eq!(pool.len(), 2);
    }

    #[test]
    fn strengthened_root_bound_is_no_worse_on_triangle_ring() {
        let g = corpus::triangle_ring();
        // Weights that pull the relaxation toward the documented fractional
        // point: connectors cheap, triangle edges attractive.
        let w: Vec<i64> = (0..12)
            .map(|e| if corpus::TRIANGLE_RING_CONNECTORS.contains(&e) { -4 } else { 2 })
            .collect();
        // After one round both variants separated the same box optimum, so
        // the strengthened pool is a superset; after exhaustive root
        // separation the strengthened feasible set is contained in the
        // basic one. Both cases force a bound that is no worse.
        for rounds in [1, 50] {
            let basic = root_relaxation_bound(
                &g,
                &w,
                &quick_cfg(Model::Basic, SeparationMode::Fractional),
                rounds,
            );
            let strong = root_relaxation_bound(
                &g,
                &w,
                &quick_cfg(Model::Strengthened, SeparationMode::Fractional),
                rounds,
            );
            assert!(
                strong <= basic + 1e-6,
                "round {rounds}: strengthened {strong} vs basic {basic}"
            );
        }
    }

    #[test]
    fn anytime_soundness_under_tiny_time_limit() {
        let g = corpus::complete(6);
        let mut rng = crate::rng::Rng::new(77);
        let w: Vec<i64> = (0..15).map(|_| rng.uniform_i64(-5, 6)).collect();
        let cfg = ModelConfig {
            time_limit: Duration::from_millis(1),
            ..ModelConfig::default()
        };
        let report = solve(&g, &w, &cfg);
        // Whatever happened, the incumbent is valid and bounded by the dual.
        assert!(report.objective as f64 <= report.dual_bound + 1e-6);
        let edges = &report.incumbent.edges;
        let total: i64 = edges.iter().map(|&e| w[e]).sum();
        assert_eq!(total, report.objective);
    }
}
