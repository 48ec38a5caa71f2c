//! Coparallel classes: the partition of the non-bridge edges into maximal
//! sets of pairwise coparallel edges (pairs forming minimal 2-cuts). The
//! class structure determines the polytope dimension and drives both the
//! class-union enumeration of the oracle and the coparallel class cuts.

use thiserror::Error;

use crate::graph::{
    bridges, bridges_restricted, components_restricted, is_two_edge_connected, EdgeId, Graph,
    Restriction, VertexId,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CoparError {
    #[error("graph must be 2-edge-connected")]
    NotTwoEdgeConnected,
    #[error("class index {0} out of range ({1} classes)")]
    ClassOutOfRange(usize, usize),
}

/// The partition of the non-bridge edges into coparallel classes. Bridges
/// belong to no class. Classes are ordered by their smallest edge id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoparallelPartition {
    pub classes: Vec<Vec<EdgeId>>,
    /// Class index per edge; `None` for bridges.
    pub class_of: Vec<Option<usize>>,
}

impl CoparallelPartition {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }
}

/// Compute the coparallel classes. Two edges share a class exactly when they
/// form a minimal 2-cut, closed transitively. Bridges are deleted first; on
/// the remaining bridgeless graph the edges coparallel to `e` are exactly
/// the bridges of `G - e`, and a disjoint-set structure merges the pairs.
pub fn coparallel_partition(g: &Graph) -> CoparallelPartition {
    let m = g.edge_count();
    let bridge_edges = bridges(g);
    let mut alive = vec![true; m];
    for &b in &bridge_edges {
        alive[b] = false;
    }

    let mut dsu = Dsu::new(m);
    let mut removed = alive.clone();
    for e in 0..m {
        if !alive[e] {
            continue;
        }
        removed[e] = false;
        let coparallel = bridges_restricted(g, Restriction { vertex_alive: None, edge_alive: Some(&removed) });
        removed[e] = true;
        for f in coparallel {
            if alive[f] {
                dsu.union(e, f);
            }
        }
    }

    let mut groups: std::collections::BTreeMap<usize, Vec<EdgeId>> = Default::default();
    for e in 0..m {
        if alive[e] {
            groups.entry(dsu.find(e)).or_default().push(e);
        }
    }
    let mut classes: Vec<Vec<EdgeId>> = groups.into_values().collect();
    classes.sort_by_key(|c| c[0]);
    let mut class_of = vec![None; m];
    for (idx, class) in classes.iter().enumerate() {
        for &e in class {
            class_of[e] = Some(idx);
        }
    }
    CoparallelPartition { classes, class_of }
}

/// One connected component of `G - C`, possibly a single vertex with no
/// edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassComponent {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl ClassComponent {
    pub fn has_edges(&self) -> bool {
        !self.edges.is_empty()
    }
}

/// Connected components of `G - C` for a class of a 2-edge-connected graph;
/// each component is itself 2-edge-connected.
pub fn components_after_class_removal(
    g: &Graph,
    partition: &CoparallelPartition,
    class_index: usize,
) -> Result<Vec<ClassComponent>, CoparError> {
    if !is_two_edge_connected(g) {
        return Err(CoparError::NotTwoEdgeConnected);
    }
    if class_index >= partition.classes.len() {
        return Err(CoparError::ClassOutOfRange(class_index, partition.classes.len()));
    }
    let mut alive = vec![true; g.edge_count()];
    for &e in &partition.classes[class_index] {
        alive[e] = false;
    }
    let comp_vertices =
        components_restricted(g, Restriction { vertex_alive: None, edge_alive: Some(&alive) });
    let mut vertex_to_comp = vec![usize::MAX; g.vertex_count()];
    for (i, comp) in comp_vertices.iter().enumerate() {
        for &v in comp {
            vertex_to_comp[v] = i;
        }
    }
    let mut result: Vec<ClassComponent> = comp_vertices
        .into_iter()
        .map(|vertices| ClassComponent { vertices, edges: Vec::new() })
        .collect();
    for (e, &(u, _)) in g.edges().iter().enumerate() {
        if alive[e] {
            result[vertex_to_comp[u]].edges.push(e);
        }
    }
    Ok(result)
}

/// The dimension of the polytope of 2-edge-connected subgraphs: the number
/// of coparallel classes, after bridges are deleted.
pub fn dimension(g: &Graph) -> usize {
    coparallel_partition(g).class_count()
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // Anchor to the smaller root so class order is deterministic.
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.parent[hi] = lo;
        }
    }
}
