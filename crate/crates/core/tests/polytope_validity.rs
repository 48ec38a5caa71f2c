//! Every constructed row of every family is valid for the enumerated
//! polytope vertices, the all-or-nothing class rule holds on the naive
//! enumeration, and the dimension formula survives the full corpus.

use tecs::copar::{components_after_class_removal, coparallel_partition, dimension};
use tecs::corpus;
use tecs::graph::{delta, Graph};
use tecs::ineq::{
    enumerate_odd_stars, make_asymmetric, make_box_lower, make_box_upper, make_connectivity,
    make_coparallel_class, LinearInequality, Rational,
};
use tecs::oracle::{enumerate_2ec, naive_enumerate_2ec};

fn vertex_rationals(mask: u64, m: usize) -> Vec<Rational> {
    (0..m)
        .map(|e| Rational::from_integer((mask >> e & 1) as i64))
        .collect()
}

fn assert_valid_for_all(g: &Graph, rows: &[LinearInequality], name: &str) {
    let vs = enumerate_2ec(g).unwrap();
    for &mask in vs.vectors() {
        let x = vertex_rationals(mask, g.edge_count());
        for row in rows {
            assert!(
                row.satisfied_by(&x),
                "{name}: vertex {mask:b} violates {row}"
            );
        }
    }
}

fn proper_sides(n: usize) -> Vec<Vec<usize>> {
    (1u32..(1 << (n - 1)))
        .map(|bits| {
            let bits = bits << 1;
            (0..n).filter(|&v| bits >> v & 1 == 1).collect()
        })
        .collect()
}

#[test]
fn all_families_are_valid_on_small_corpus() {
    let graphs = vec![
        ("cycle-5".to_string(), corpus::cycle(5)),
        ("complete-4".to_string(), corpus::complete(4)),
        ("complete-5".to_string(), corpus::complete(5)),
        ("linked-triangles".to_string(), corpus::linked_triangles()),
        ("triangle-ring".to_string(), corpus::triangle_ring()),
        ("random-7".to_string(), corpus::random_2ec_graph(7)),
        ("random-8".to_string(), corpus::random_2ec_graph(8)),
    ];
    for (name, g) in graphs {
        let mut rows = Vec::new();
        for e in 0..g.edge_count() {
            rows.push(make_box_lower(e));
            rows.push(make_box_upper(e));
        }
        for side in proper_sides(g.vertex_count()) {
            let cut = delta(&g, &side).unwrap();
            for &e in &cut.cut_edges {
                rows.push(make_asymmetric(&g, &cut, e).unwrap());
            }
            let mask = cut.side_mask(g.vertex_count());
            let inner: Vec<usize> = (0..g.edge_count())
                .filter(|&e| {
                    let (u, v) = g.endpoints(e);
                    mask[u] && mask[v]
                })
                .collect();
            let outer: Vec<usize> = (0..g.edge_count())
                .filter(|&e| {
                    let (u, v) = g.endpoints(e);
                    !mask[u] && !mask[v]
                })
                .collect();
            for &e1 in &inner {
                for &e2 in &outer {
                    rows.push(make_connectivity(&g, &cut, e1, e2).unwrap());
                }
            }
        }
        let cp = coparallel_partition(&g);
        for class_index in 0..cp.class_count() {
            let comps = components_after_class_removal(&g, &cp, class_index).unwrap();
            let with_edges: Vec<_> = comps.iter().filter(|c| c.has_edges()).collect();
            if with_edges.len() < 3 {
                continue;
            }
            // First edge of each component with every class representative.
            let picks: Vec<usize> = with_edges.iter().map(|c| c.edges[0]).collect();
            for &f in &cp.classes[class_index] {
                rows.push(make_coparallel_class(&g, &cp, class_index, f, &picks).unwrap());
            }
        }
        if g.is_complete() && g.vertex_count() >= 4 {
            rows.extend(enumerate_odd_stars(&g).unwrap());
        }
        assert_valid_for_all(&g, &rows, &name);
    }
}

/// Every 2-edge-connected subgraph uses each coparallel class entirely or
/// not at all (checked on the independent naive enumeration).
#[test]
fn all_or_nothing_class_rule() {
    for seed in 0..20 {
        let g = corpus::random_2ec_graph(seed + 600);
        if g.edge_count() > 14 {
            continue;
        }
        let cp = coparallel_partition(&g);
        for mask in naive_enumerate_2ec(&g).unwrap() {
            for class in &cp.classes {
                let hits = class.iter().filter(|&&e| mask >> e & 1 == 1).count();
                assert!(
                    hits == 0 || hits == class.len(),
                    "seed {seed}: class {class:?} partially used by {mask:b}"
                );
            }
        }
    }
}

#[test]
fn dimension_formula_on_verification_corpus() {
    for (name, g) in corpus::verification_corpus() {
        let vs = enumerate_2ec(&g).unwrap();
        assert_eq!(vs.dim(), dimension(&g), "{name}");
    }
}
