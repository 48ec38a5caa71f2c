//! The inequality families supported by the solver and the oracle, as sparse
//! rows over edge coordinates, together with their separation routines.
//!
//! All rows have sense `a * x <= rhs` and are kept in canonical form
//! (coefficients sorted by ascending edge id, zeros dropped), which is also
//! the cut-pool deduplication key.

use num_integer::Integer;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::copar::{components_after_class_removal, CoparError, CoparallelPartition};
use crate::graph::{cut_from_side_mask, min_cut_scaled, CutSet, EdgeId, Graph, VertexId};

pub type Rational = num_rational::Ratio<i64>;

/// Canonical row identity used for cut-pool deduplication: sorted
/// (edge, coefficient) pairs and the right-hand side, rationals split into
/// (numerator, denominator).
pub type CanonicalKey = (Vec<(EdgeId, (i64, i64))>, (i64, i64));

/// Violation threshold on the floating-point separation path. Exact checks
/// in the oracle use rational arithmetic and demand strict violation.
pub const VIOLATION_TOLERANCE: f64 = 1e-6;

/// Capacities handed to the max-flow routine are fixed-point scaled so the
/// flow itself runs on integers.
const CAP_SCALE: f64 = (1u64 << 40) as f64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IneqError {
    #[error("edge {0} is not a cut edge")]
    EdgeNotInCut(EdgeId),
    #[error("edge {0} must lie strictly inside the {1} side")]
    EdgeNotInsideSide(EdgeId, &'static str),
    #[error("edge {0} is not in the class")]
    EdgeNotInClass(EdgeId),
    #[error("expected one chosen edge per edge-containing component ({expected}), got {got}")]
    WrongComponentChoices { expected: usize, got: usize },
    #[error("chosen edges {0} and {1} lie in the same component")]
    SameComponent(EdgeId, EdgeId),
    #[error("chosen edge {0} does not lie in any edge-containing component")]
    NotInAnyComponent(EdgeId),
    #[error("graph is not complete")]
    NotComplete,
    #[error("complete graph must have at least 4 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("odd star witness required exactly when the vertex count is odd")]
    WitnessParityMismatch,
    #[error("malformed odd star witness")]
    BadWitness,
    #[error(transparent)]
    Copar(#[from] CoparError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    BoxLower,
    BoxUpper,
    AsymmetricCut,
    ConnectivityCut,
    CoparallelClass,
    OddStar,
}

/// The structural witness a row was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    BoxBound { edge: EdgeId },
    AsymmetricCut { side: Vec<VertexId>, edge: EdgeId },
    ConnectivityCut { side: Vec<VertexId>, e1: EdgeId, e2: EdgeId },
    CoparallelClass { class_index: usize, f: EdgeId, component_choices: Vec<EdgeId> },
    OddStar { center: VertexId, odd_witness: Option<(EdgeId, EdgeId)> },
}

#[derive(Clone, Debug)]
pub struct LinearInequality {
    coeffs: Vec<(EdgeId, Rational)>,
    rhs: Rational,
    pub family: Family,
    pub provenance: Provenance,
}

impl LinearInequality {
    pub(crate) fn new(
        mut pairs: Vec<(EdgeId, Rational)>,
        rhs: Rational,
        family: Family,
        provenance: Provenance,
    ) -> Self {
        pairs.sort_by_key(|&(e, _)| e);
        let mut coeffs: Vec<(EdgeId, Rational)> = Vec::with_capacity(pairs.len());
        for (e, c) in pairs {
            match coeffs.last_mut() {
                Some(&mut (last, ref mut acc)) if last == e => *acc += c,
                _ => coeffs.push((e, c)),
            }
        }
        coeffs.retain(|(_, c)| !c.is_zero());
        LinearInequality { coeffs, rhs, family, provenance }
    }

    pub fn coefficients(&self) -> &[(EdgeId, Rational)] {
        &self.coeffs
    }

    pub fn rhs(&self) -> Rational {
        self.rhs
    }

    pub fn eval_rational(&self, x: &[Rational]) -> Rational {
        self.coeffs.iter().map(|&(e, c)| c * x[e]).sum()
    }

    pub fn eval_f64(&self, x: &[f64]) -> f64 {
        self.coeffs
            .iter()
            .map(|&(e, c)| ratio_to_f64(c) * x[e])
            .sum()
    }

    pub fn violation_f64(&self, x: &[f64]) -> f64 {
        self.eval_f64(x) - ratio_to_f64(self.rhs)
    }

    /// Satisfied (with exact arithmetic) by the given rational point?
    pub fn satisfied_by(&self, x: &[Rational]) -> bool {
        self.eval_rational(x) <= self.rhs
    }

    /// The row scaled by the least common denominator: integer coefficients
    /// and right-hand side, for exact arithmetic in the oracle.
    pub fn integer_form(&self) -> (Vec<(EdgeId, i64)>, i64) {
        let mut denom: i64 = *self.rhs.denom();
        for (_, c) in &self.coeffs {
            denom = denom.lcm(c.denom());
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|&(e, c)| (e, c.numer() * (denom / c.denom())))
            .collect();
        (coeffs, self.rhs.numer() * (denom / self.rhs.denom()))
    }

    /// Deduplication key: the canonical coefficient list and right-hand
    /// side. Provenance is deliberately excluded.
    pub fn canonical_key(&self) -> CanonicalKey {
        (
            self.coeffs
                .iter()
                .map(|&(e, c)| (e, (*c.numer(), *c.denom())))
                .collect(),
            (*self.rhs.numer(), *self.rhs.denom()),
        )
    }
}

impl PartialEq for LinearInequality {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && self.rhs == other.rhs
    }
}

impl std::fmt::Display for LinearInequality {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for &(e, c) in &self.coeffs {
            if first {
                if c == Rational::from_integer(1) {
                    write!(f, "x{e}")?;
                } else if c == Rational::from_integer(-1) {
                    write!(f, "-x{e}")?;
                } else {
                    write!(f, "{c} x{e}")?;
                }
                first = false;
            } else if c.is_negative() {
                if c == Rational::from_integer(-1) {
                    write!(f, " - x{e}")?;
                } else {
                    write!(f, " - {} x{e}", -c)?;
                }
            } else if c == Rational::from_integer(1) {
                write!(f, " + x{e}")?;
            } else {
                write!(f, " + {c} x{e}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " <= {}", self.rhs)
    }
}

pub fn ratio_to_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// The bound `x_e >= 0`, stored as `-x_e <= 0`.
pub fn make_box_lower(e: EdgeId) -> LinearInequality {
    LinearInequality::new(
        vec![(e, Rational::from_integer(-1))],
        Rational::zero(),
        Family::BoxLower,
        Provenance::BoxBound { edge: e },
    )
}

/// The bound `x_e <= 1`.
pub fn make_box_upper(e: EdgeId) -> LinearInequality {
    LinearInequality::new(
        vec![(e, Rational::from_integer(1))],
        Rational::from_integer(1),
        Family::BoxUpper,
        Provenance::BoxBound { edge: e },
    )
}

/// Asymmetric cut inequality `x_e - x(delta(S) - e) <= 0`: a subgraph may
/// not use exactly one edge of a cut.
pub fn make_asymmetric(
    _g: &Graph,
    cut: &CutSet,
    e: EdgeId,
) -> Result<LinearInequality, IneqError> {
    if !cut.cut_edges.contains(&e) {
        return Err(IneqError::EdgeNotInCut(e));
    }
    let mut pairs = vec![(e, Rational::from_integer(1))];
    for &f in &cut.cut_edges {
        if f != e {
            pairs.push((f, Rational::from_integer(-1)));
        }
    }
    Ok(LinearInequality::new(
        pairs,
        Rational::zero(),
        Family::AsymmetricCut,
        Provenance::AsymmetricCut { side: cut.side.clone(), edge: e },
    ))
}

/// Connectivity cut inequality `2 x_e1 - x(delta(S)) + 2 x_e2 <= 2` with
/// `e1` strictly inside `S` and `e2` strictly inside the complement.
pub fn make_connectivity(
    g: &Graph,
    cut: &CutSet,
    e1: EdgeId,
    e2: EdgeId,
) -> Result<LinearInequality, IneqError> {
    let mask = cut.side_mask(g.vertex_count());
    let (u1, v1) = g.endpoints(e1);
    if !(mask[u1] && mask[v1]) {
        return Err(IneqError::EdgeNotInsideSide(e1, "S"));
    }
    let (u2, v2) = g.endpoints(e2);
    if mask[u2] || mask[v2] {
        return Err(IneqError::EdgeNotInsideSide(e2, "complement"));
    }
    let mut pairs = vec![
        (e1, Rational::from_integer(2)),
        (e2, Rational::from_integer(2)),
    ];
    for &f in &cut.cut_edges {
        pairs.push((f, Rational::from_integer(-1)));
    }
    Ok(LinearInequality::new(
        pairs,
        Rational::from_integer(2),
        Family::ConnectivityCut,
        Provenance::ConnectivityCut { side: cut.side.clone(), e1, e2 },
    ))
}

/// Coparallel class inequality `sum_j x_{e_j} - (r - 1) x_f <= 1` over the
/// `r` edge-containing components of `G - C`, with `f` in the class `C`.
/// Callers normally want `r >= 3`; `r = 1` degenerates to `x_{e_1} <= 1`
/// and `r = 2` to a connectivity cut, and both are accepted so the
/// degenerate forms can be checked.
pub fn make_coparallel_class(
    g: &Graph,
    partition: &CoparallelPartition,
    class_index: usize,
    f: EdgeId,
    e_choices: &[EdgeId],
) -> Result<LinearInequality, IneqError> {
    if class_index >= partition.classes.len() {
        return Err(CoparError::ClassOutOfRange(class_index, partition.classes.len()).into());
    }
    if !partition.classes[class_index].contains(&f) {
        return Err(IneqError::EdgeNotInClass(f));
    }
    let components = components_after_class_removal(g, partition, class_index)?;
    let with_edges: Vec<_> = components.into_iter().filter(|c| c.has_edges()).collect();
    if e_choices.len() != with_edges.len() {
        return Err(IneqError::WrongComponentChoices {
            expected: with_edges.len(),
            got: e_choices.len(),
        });
    }
    let mut component_of = std::collections::HashMap::new();
    for (i, comp) in with_edges.iter().enumerate() {
        for &e in &comp.edges {
            component_of.insert(e, i);
        }
    }
    let mut used = vec![None; with_edges.len()];
    for &e in e_choices {
        let &i = component_of.get(&e).ok_or(IneqError::NotInAnyComponent(e))?;
        if let Some(prev) = used[i] {
            return Err(IneqError::SameComponent(prev, e));
        }
        used[i] = Some(e);
    }
    let r = e_choices.len();
    let mut pairs: Vec<(EdgeId, Rational)> = e_choices
        .iter()
        .map(|&e| (e, Rational::from_integer(1)))
        .collect();
    pairs.push((f, Rational::from_integer(-(r as i64 - 1))));
    Ok(LinearInequality::new(
        pairs,
        Rational::from_integer(1),
        Family::CoparallelClass,
        Provenance::CoparallelClass {
            class_index,
            f,
            component_choices: e_choices.to_vec(),
        },
    ))
}

/// Odd star inequality for a complete graph on `n >= 4` vertices. For even
/// `n` (no witness): `x(delta(v)) - x(E(K_n - v)) <= (n - 2) / 2`. For odd
/// `n` the witness `(h, f)` with `h = {w1, w2}` away from `v` and
/// `f = {v, w1}` drops `h` from the row and moves `f` to the negative side:
/// `x(delta(v) - f) - x(E(K_n - v) - h) - x_f <= (n - 3) / 2`.
pub fn make_odd_star(
    g: &Graph,
    v: VertexId,
    odd_witness: Option<(EdgeId, EdgeId)>,
) -> Result<LinearInequality, IneqError> {
    if !g.is_complete() {
        return Err(IneqError::NotComplete);
    }
    let n = g.vertex_count();
    if n < 4 {
        return Err(IneqError::TooFewVertices(n));
    }
    if n.is_multiple_of(2) != odd_witness.is_none() {
        return Err(IneqError::WitnessParityMismatch);
    }
    let star: Vec<EdgeId> = g.adjacent(v).iter().map(|&(_, id)| id).collect();
    let mut pairs = Vec::new();
    let rhs = match odd_witness {
        None => {
            for &e in &star {
                pairs.push((e, Rational::from_integer(1)));
            }
            for (id, &(a, b)) in g.edges().iter().enumerate() {
                if a != v && b != v {
                    pairs.push((id, Rational::from_integer(-1)));
                }
            }
            Rational::new(n as i64 - 2, 2)
        }
        Some((h, f)) => {
            let (hw1, hw2) = g.endpoints(h);
            if hw1 == v || hw2 == v {
                return Err(IneqError::BadWitness);
            }
            let (fu, fv) = g.endpoints(f);
            let w1 = if fu == v {
                fv
            } else if fv == v {
                fu
            } else {
                return Err(IneqError::BadWitness);
            };
            if w1 != hw1 && w1 != hw2 {
                return Err(IneqError::BadWitness);
            }
            for &e in &star {
                if e != f {
                    pairs.push((e, Rational::from_integer(1)));
                }
            }
            pairs.push((f, Rational::from_integer(-1)));
            for (id, &(a, b)) in g.edges().iter().enumerate() {
                if a != v && b != v && id != h {
                    pairs.push((id, Rational::from_integer(-1)));
                }
            }
            Rational::new(n as i64 - 3, 2)
        }
    };
    Ok(LinearInequality::new(
        pairs,
        rhs,
        Family::OddStar,
        Provenance::OddStar { center: v, odd_witness },
    ))
}

/// All odd star inequalities of a complete graph: `n` rows for even `n`,
/// `n (n - 1) (n - 2)` rows for odd `n`.
pub fn enumerate_odd_stars(g: &Graph) -> Result<Vec<LinearInequality>, IneqError> {
    if !g.is_complete() {
        return Err(IneqError::NotComplete);
    }
    let n = g.vertex_count();
    if n < 4 {
        return Err(IneqError::TooFewVertices(n));
    }
    let mut rows = Vec::new();
    if n.is_multiple_of(2) {
        for v in 0..n {
            rows.push(make_odd_star(g, v, None)?);
        }
    } else {
        for v in 0..n {
            for w1 in 0..n {
                if w1 == v {
                    continue;
                }
                for w2 in 0..n {
                    if w2 == v || w2 == w1 {
                        continue;
                    }
                    let h = g.edge_between(w1, w2).expect("complete graph");
                    let f = g.edge_between(v, w1).expect("complete graph");
                    rows.push(make_odd_star(g, v, Some((h, f)))?);
                }
            }
        }
    }
    let expected = if n.is_multiple_of(2) { n } else { n * (n - 1) * (n - 2) };
    assert_eq!(rows.len(), expected);
    Ok(rows)
}

/// A point of the LP relaxation box, one value per edge.
#[derive(Clone, Debug)]
pub struct FractionalPoint {
    values: Vec<f64>,
}

impl FractionalPoint {
    pub fn new(values: Vec<f64>) -> Self {
        assert!(
            values.iter().all(|&v| (-1e-9..=1.0 + 1e-9).contains(&v)),
            "coordinates must lie in [0, 1]"
        );
        FractionalPoint { values }
    }

    pub fn from_rationals(values: &[Rational]) -> Self {
        Self::new(values.iter().map(|&r| ratio_to_f64(r)).collect())
    }

    /// The incidence vector of an edge set.
    pub fn from_support(edges: &[EdgeId], edge_count: usize) -> Self {
        let mut values = vec![0.0; edge_count];
        for &e in edges {
            values[e] = 1.0;
        }
        FractionalPoint { values }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    fn scaled_capacities(&self) -> Vec<i128> {
        self.values
            .iter()
            .map(|&v| (v.max(0.0) * CAP_SCALE).round() as i128)
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct ViolatedRow {
    pub row: LinearInequality,
    pub violation: f64,
}

/// Outcome of one separation call. `exhausted` means the exact routine
/// completed and certifies that no inequality of the family is violated.
#[derive(Clone, Debug)]
pub struct SeparationResult {
    pub violated: Vec<ViolatedRow>,
    pub exhausted: bool,
}

impl SeparationResult {
    fn finish(mut rows: Vec<ViolatedRow>) -> Self {
        rows.sort_by(|a, b| {
            b.violation
                .partial_cmp(&a.violation)
                .unwrap()
                .then_with(|| a.row.canonical_key().cmp(&b.row.canonical_key()))
        });
        let exhausted = rows.is_empty();
        SeparationResult { violated: rows, exhausted }
    }
}

/// Exact separation of the asymmetric cut inequalities: for each edge
/// `e = {s, t}` a minimum s-t cut of `G - e` under capacities `x` yields the
/// most violated row with positive coefficient on `e`, if any.
pub fn separate_asymmetric(g: &Graph, x: &FractionalPoint, tol: f64) -> SeparationResult {
    assert_eq!(x.len(), g.edge_count());
    let base = x.scaled_capacities();
    let mut rows = Vec::new();
    for e in 0..g.edge_count() {
        if x.values()[e] <= tol {
            // The row needs x_e > 0 to be violated.
            continue;
        }
        let (s, t) = g.endpoints(e);
        let mut caps = base.clone();
        caps[e] = 0;
        let (_, side) = min_cut_scaled(g, &caps, s, t);
        let cut = cut_from_side_mask(g, &side);
        let row = make_asymmetric(g, &cut, e).expect("e crosses the returned cut");
        let violation = row.violation_f64(x.values());
        if violation > tol {
            rows.push(ViolatedRow { row, violation });
        }
    }
    SeparationResult::finish(rows)
}

/// Exact separation of the connectivity cut inequalities: for each pair of
/// non-adjacent edges, a minimum cut separating them under capacities `x`
/// (with the pair forced uncut by a huge capacity) yields the most violated
/// row for that pair, if any.
pub fn separate_connectivity(g: &Graph, x: &FractionalPoint, tol: f64) -> SeparationResult {
    assert_eq!(x.len(), g.edge_count());
    let mut rows = Vec::new();
    let big = (2 * g.edge_count().max(1)) as i128 * CAP_SCALE as i128;
    let base = x.scaled_capacities();
    for e1 in 0..g.edge_count() {
        for e2 in (e1 + 1)..g.edge_count() {
            if let Some(row) = connectivity_candidate(g, x, &base, big, e1, e2) {
                let violation = row.violation_f64(x.values());
                if violation > tol {
                    rows.push(ViolatedRow { row, violation });
                }
            }
        }
    }
    SeparationResult::finish(rows)
}

fn connectivity_candidate(
    g: &Graph,
    _x: &FractionalPoint,
    base: &[i128],
    big: i128,
    e1: EdgeId,
    e2: EdgeId,
) -> Option<LinearInequality> {
    let (a, b) = g.endpoints(e1);
    let (c, d) = g.endpoints(e2);
    if a == c || a == d || b == c || b == d {
        return None; // adjacent edges can never sit strictly on opposite sides
    }
    let mut caps = base.to_vec();
    caps[e1] = big;
    caps[e2] = big;
    let (_, side) = min_cut_scaled(g, &caps, a, c);
    let cut = cut_from_side_mask(g, &side);
    make_connectivity(g, &cut, e1, e2).ok()
}

/// Heuristic pre-pass: try one pair of edges per pair of connected
/// components of the support graph of `x`, falling back to the exact loop
/// when nothing is found.
pub fn separate_connectivity_heuristic(
    g: &Graph,
    x: &FractionalPoint,
    tol: f64,
) -> SeparationResult {
    assert_eq!(x.len(), g.edge_count());
    let alive: Vec<bool> = x.values().iter().map(|&v| v > tol).collect();
    let comps = crate::graph::components_restricted(
        g,
        crate::graph::Restriction { vertex_alive: None, edge_alive: Some(&alive) },
    );
    // One representative edge per support component.
    let mut vertex_comp = vec![usize::MAX; g.vertex_count()];
    for (i, comp) in comps.iter().enumerate() {
        for &v in comp {
            vertex_comp[v] = i;
        }
    }
    let mut repr: Vec<Option<EdgeId>> = vec![None; comps.len()];
    for (e, &(u, _)) in g.edges().iter().enumerate() {
        if alive[e] && repr[vertex_comp[u]].is_none() {
            repr[vertex_comp[u]] = Some(e);
        }
    }
    let reps: Vec<EdgeId> = repr.into_iter().flatten().collect();
    let big = (2 * g.edge_count().max(1)) as i128 * CAP_SCALE as i128;
    let base = x.scaled_capacities();
    let mut rows = Vec::new();
    for i in 0..reps.len() {
        for j in (i + 1)..reps.len() {
            if let Some(row) = connectivity_candidate(g, x, &base, big, reps[i], reps[j]) {
                let violation = row.violation_f64(x.values());
                if violation > tol {
                    rows.push(ViolatedRow { row, violation });
                }
            }
        }
    }
    if rows.is_empty() {
        // The pre-pass proves nothing; only the exact loop may declare
        // exhaustion.
        separate_connectivity(g, x, tol)
    } else {
        SeparationResult::finish(rows)
    }
}

/// Separation of the coparallel class inequalities for a 2-edge-connected
/// graph: per class with at least three edge-containing components, the
/// argmax edge of each component and the argmin class edge give the most
/// violated candidate; if none of these rows is violated, no coparallel
/// class inequality is.
pub fn separate_coparallel(
    g: &Graph,
    partition: &CoparallelPartition,
    x: &FractionalPoint,
    tol: f64,
) -> Result<SeparationResult, CoparError> {
    assert_eq!(x.len(), g.edge_count());
    let mut rows = Vec::new();
    for class_index in 0..partition.class_count() {
        let components = components_after_class_removal(g, partition, class_index)?;
        let with_edges: Vec<_> = components.iter().filter(|c| c.has_edges()).collect();
        if with_edges.len() < 3 {
            continue;
        }
        // Ties go to the smallest edge id; component edge lists are sorted.
        let e_choices: Vec<EdgeId> = with_edges
            .iter()
            .map(|comp| {
                *comp
                    .edges
                    .iter()
                    .max_by(|&&a, &&b| {
                        x.values()[a]
                            .partial_cmp(&x.values()[b])
                            .unwrap()
                            .then(b.cmp(&a))
                    })
                    .unwrap()
            })
            .collect();
        let f = *partition.classes[class_index]
            .iter()
            .min_by(|&&a, &&b| {
                x.values()[a]
                    .partial_cmp(&x.values()[b])
                    .unwrap()
                    .then(a.cmp(&b))
            })
            .unwrap();
        let row = make_coparallel_class(g, partition, class_index, f, &e_choices)
            .expect("choices constructed from the components");
        let violation = row.violation_f64(x.values());
        if violation > tol {
            rows.push(ViolatedRow { row, violation });
        }
    }
    Ok(SeparationResult::finish(rows))
}
