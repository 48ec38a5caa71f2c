//! Named graphs used by the verification suites: standard families, the
//! structured examples the inequality families were designed around, and a
//! seeded generator for small random 2-edge-connected graphs.

use crate::graph::{is_two_edge_connected, Graph, VertexId};
use crate::rng::Rng;

/// The cycle on `n >= 3` vertices; edge `i` joins `i` and `(i + 1) % n`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

/// The complete graph on `n` vertices, edges in lexicographic order.
pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v)));
    Graph::new(n, edges).unwrap()
}

/// The complete graph on `n` vertices minus the edge `{0, 1}`.
pub fn complete_minus_edge(n: usize) -> Graph {
    let edges = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .filter(|&(u, v)| (u, v) != (0, 1));
    Graph::new(n, edges).unwrap()
}

/// Two triangles joined by exactly two edges: the smallest graph on which a
/// connectivity cut inequality separates a point that all asymmetric cut
/// inequalities admit.
///
/// Vertices 0-2 form the left triangle, 3-5 the right one. Edge ids:
/// 0:(0,1) 1:(0,2) 2:(1,2) 3:(3,4) 4:(3,5) 5:(4,5), links 6:(1,3) 7:(0,4).
/// Coparallel classes: the links {6, 7}, the degree-two corners {1, 2} and
/// {4, 5}, and the singletons {0} and {3}.
pub fn linked_triangles() -> Graph {
    Graph::new(
        6,
        [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (1, 3), (0, 4)],
    )
    .unwrap()
}

/// The two link edges of [`linked_triangles`].
pub const LINKED_TRIANGLES_LINKS: [usize; 2] = [6, 7];

/// Three triangles arranged in a ring, joined by three connector edges that
/// form a coparallel class of size three. Removing the connector class
/// leaves three triangle components, which is the smallest setting where a
/// coparallel class inequality with three terms exists.
///
/// Vertices: triangle A = {0, 1, 4}, triangle B = {2, 3, 7}, triangle
/// C = {5, 6, 8}. Edge ids:
/// 0:(0,1) 1:(1,2) 2:(2,3) 3:(0,4) 4:(4,5) 5:(5,6) 6:(3,7) 7:(7,8) 8:(6,8)
/// 9:(1,4) 10:(2,7) 11:(5,8); the connector class is {1, 4, 7}.
pub fn triangle_ring() -> Graph {
    Graph::new(
        9,
        [
            (0, 1),
            (1, 2),
            (2, 3),
            (0, 4),
            (4, 5),
            (5, 6),
            (3, 7),
            (7, 8),
            (6, 8),
            (1, 4),
            (2, 7),
            (5, 8),
        ],
    )
    .unwrap()
}

/// The size-three connector class of [`triangle_ring`].
pub const TRIANGLE_RING_CONNECTORS: [usize; 3] = [1, 4, 7];

/// The edge sets of the three triangle components of [`triangle_ring`] after
/// removing the connector class.
pub const TRIANGLE_RING_COMPONENTS: [[usize; 3]; 3] = [[0, 3, 9], [2, 6, 10], [5, 8, 11]];

/// Two triangles sharing vertex 0; the union of both is 2-edge-connected.
pub fn two_triangles_shared_vertex() -> Graph {
    Graph::new(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]).unwrap()
}

/// Two triangles joined by a single bridge edge {2, 3} (edge id 3).
pub fn two_triangles_bridged() -> Graph {
    Graph::new(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)]).unwrap()
}

/// A 2-edge-connected graph with a side `S = S1 (+) S2` inducing a
/// disconnected subgraph, so `delta(S)` strictly contains the minimal cut
/// `delta(S1)`. Returns `(graph, S1, S2)`.
pub fn non_minimal_cut_fixture() -> (Graph, Vec<VertexId>, Vec<VertexId>) {
    // S1 = triangle {0,1,2}, S2 = triangle {3,4,5}, middle = triangle {6,7,8};
    // each outer triangle attaches to the middle by two edges.
    let g = Graph::new(
        9,
        [
            (0, 1),
            (1, 2),
            (0, 2),
            (3, 4),
            (4, 5),
            (3, 5),
            (6, 7),
            (7, 8),
            (6, 8),
            (0, 6),
            (1, 7),
            (3, 7),
            (4, 8),
        ],
    )
    .unwrap();
    (g, vec![0, 1, 2], vec![3, 4, 5])
}

/// A minimal cut whose `S` side consists of two triangles joined by a bridge
/// `f`, with two cut edges attached beyond the bridge. Returns
/// `(graph, side, e1, e2, f)` where `e1` lies in the triangle on the near
/// side of `f` and `e2` on the other side of the cut.
pub fn bridged_side_fixture() -> (Graph, Vec<VertexId>, usize, usize, usize) {
    // Side S: triangle T1 = {0,1,2} and triangle T2 = {3,4,5} joined by the
    // bridge f = (2,3). Other side: square {6,7,8,9} with e2 = (6,7).
    // Cut edges: (0,6), (1,7), (2,8) to T1 and (4,8), (5,9) to T2.
    let g = Graph::new(
        10,
        [
            (0, 1),  // 0: e1, in T1
            (1, 2),  // 1
            (0, 2),  // 2
            (3, 4),  // 3
            (4, 5),  // 4
            (3, 5),  // 5
            (2, 3),  // 6: f, bridge of G[S]
            (6, 7),  // 7: e2
            (7, 8),  // 8
            (8, 9),  // 9
            (6, 9),  // 10
            (0, 6),  // 11: cut
            (1, 7),  // 12: cut
            (2, 8),  // 13: cut
            (4, 8),  // 14: cut, in delta(S, f)
            (5, 9),  // 15: cut, in delta(S, f)
        ],
    )
    .unwrap();
    (g, vec![0, 1, 2, 3, 4, 5], 0, 7, 6)
}

/// Seeded random 2-edge-connected graph with a bounded coparallel partition.
/// Mixes three shapes: a cycle with chords, a ring of small cliques, and a
/// dense rejection-sampled graph. Every output is 2-edge-connected and has
/// at most 16 coparallel classes and at most 14 edges.
pub fn random_2ec_graph(seed: u64) -> Graph {
    let mut rng = Rng::new(seed);
    let g = match rng.uniform_usize(3) {
        0 => random_chorded_cycle(&mut rng),
        1 => random_clique_ring(&mut rng),
        _ => random_dense_2ec(&mut rng),
    };
    debug_assert!(is_two_edge_connected(&g));
    g
}

fn random_chorded_cycle(rng: &mut Rng) -> Graph {
    let n = 4 + rng.uniform_usize(6); // 4..=9
    let max_chords = (n * (n - 3) / 2).min(14 - n);
    let chords = rng.uniform_usize(max_chords.min(3) + 1);
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    let mut attempts = 0;
    while edges.len() < n + chords && attempts < 100 {
        attempts += 1;
        let u = rng.uniform_usize(n);
        let v = rng.uniform_usize(n);
        if u == v {
            continue;
        }
        let key = (u.min(v), u.max(v));
        if !edges.iter().any(|&(a, b)| (a.min(b), a.max(b)) == key) {
            edges.push(key);
        }
    }
    Graph::new(n, edges).unwrap()
}

fn random_clique_ring(rng: &mut Rng) -> Graph {
    // 2 to 3 components of size 3, cyclically linked; the links form one
    // coparallel class of the output.
    let parts = 2 + rng.uniform_usize(2);
    let size = 3;
    let n = parts * size;
    let mut edges = Vec::new();
    for p in 0..parts {
        let base = p * size;
        for a in 0..size {
            for b in (a + 1)..size {
                edges.push((base + a, base + b));
            }
        }
    }
    for p in 0..parts {
        let q = (p + 1) % parts;
        loop {
            let u = p * size + rng.uniform_usize(size);
            let v = q * size + rng.uniform_usize(size);
            let key = (u.min(v), u.max(v));
            if !edges.contains(&key) {
                edges.push(key);
                break;
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

fn random_dense_2ec(rng: &mut Rng) -> Graph {
    loop {
        let n = 4 + rng.uniform_usize(4); // 4..=7
        let max_m = (n * (n - 1) / 2).min(14);
        if max_m < n {
            continue;
        }
        let m = n + rng.uniform_usize(max_m - n + 1);
        let mut all_pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .collect();
        rng.shuffle(&mut all_pairs);
        all_pairs.truncate(m);
        let g = Graph::new(n, all_pairs).unwrap();
        if is_two_edge_connected(&g) {
            return g;
        }
    }
}

/// Random generator used by graph-level stress tests; output may be
/// disconnected or bridgy on purpose.
pub fn random_graph_any(rng: &mut Rng, max_n: usize, max_m: usize) -> Graph {
    let n = 2 + rng.uniform_usize(max_n - 1);
    let mut all_pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    rng.shuffle(&mut all_pairs);
    let m = rng.uniform_usize(all_pairs.len().min(max_m) + 1);
    all_pairs.truncate(m);
    Graph::new(n, all_pairs).unwrap()
}

/// The graphs the verification command checks by default, with display names.
pub fn verification_corpus() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 3..=8 {
        out.push((format!("cycle-{n}"), cycle(n)));
    }
    for n in 4..=7 {
        out.push((format!("complete-{n}"), complete(n)));
    }
    out.push(("linked-triangles".into(), linked_triangles()));
    out.push(("triangle-ring".into(), triangle_ring()));
    for i in 0..10 {
        out.push((format!("random-{i}"), random_2ec_graph(0xc0ffee + i as u64)));
    }
    out
}
