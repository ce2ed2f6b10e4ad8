use eternal_pursuit::graph::catalog::{connected_graphs, trees};
use eternal_pursuit::graph::{
    cartesian_product, generate, strong_product, subgrid_retraction, verify_retraction, Family, Graph,
    DEFAULT_PRODUCT_LIMIT,
};
use eternal_pursuit::Error;
use proptest::prelude::*;

#[test]
fn generator_shapes() {
    let cases = [
        ("path:5", 5, 4),
        ("cycle:6", 6, 6),
        ("clique:5", 5, 10),
        ("spider:3x4", 13, 12),
        ("spider:4,4,5", 14, 13),
        ("tree:-1,0,0,1", 4, 3),
        ("grid:3x4", 12, 17),
        ("king:3x3", 9, 20),
        ("grid:2x2x2", 8, 12),
    ];
    for (spec, n, m) in cases {
        let g = generate(spec).unwrap();
        assert_eq!((g.n(), g.edge_count()), (n, m), "{spec}");
        assert!(g.is_connected());
    }
}

#[test]
fn bad_specs() {
    for spec in ["", "path", "path:0", "cycle:2", "spider:", "tree:0,0", "grid:3x", "blob:3", "path:x"] {
        assert!(generate(spec).is_err(), "{spec}");
    }
}

#[test]
fn family_parse_matches_generate() {
    let f: Family = "king:2x3".parse().unwrap();
    assert_eq!(f.build().unwrap().hash(), generate("king:2x3").unwrap().hash());
}

#[test]
fn edge_list_round_trip_and_errors() {
    let g = generate("spider:2,3").unwrap();
    let back = Graph::from_edge_list(&g.to_edge_list()).unwrap();
    assert_eq!(back, g);
    assert!(matches!(Graph::from_edge_list("3 1\n0 0\n"), Err(Error::SelfLoop(0))));
    assert!(Graph::from_edge_list("3 1\n0 5\n").is_err());
    assert!(Graph::from_edge_list("").is_err());
    assert!(Graph::from_edge_list("3 2\n0 1\n").is_err());
}

#[test]
fn hash_ignores_edge_order() {
    let a = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
    let b = Graph::new(3, &[(2, 1), (1, 0)]).unwrap();
    assert_eq!(a.hash(), b.hash());
    assert_ne!(a.hash(), Graph::new(3, &[(0, 1), (0, 2)]).unwrap().hash());
}

#[test]
fn catalog_counts() {
    let connected: Vec<usize> = (1..=7).map(|n| connected_graphs(n).len()).collect();
    assert_eq!(connected, [1, 1, 2, 6, 21, 112, 853]);
    let tree_counts: Vec<usize> = (1..=9).map(|n| trees(n).len()).collect();
    assert_eq!(tree_counts, [1, 1, 1, 2, 3, 6, 11, 23, 47]);
}

#[test]
fn product_limit_is_enforced() {
    let p = generate("path:20").unwrap();
    assert!(matches!(strong_product(&p, &p, 100), Err(Error::ProductTooLarge { .. })));
}

#[test]
fn subgrid_retractions_are_valid() {
    for (m, n, a, b) in [(5, 5, 3, 3), (4, 6, 3, 4), (3, 3, 3, 3), (6, 4, 5, 3)] {
        let r = subgrid_retraction(m, n, a, b).unwrap();
        let g = generate(&format!("grid:{m}x{n}")).unwrap();
        assert!(verify_retraction(&g, &r).is_ok(), "{m}x{n} onto {a}x{b}");
        assert_eq!(r.target.len(), a * b);
    }
    assert!(subgrid_retraction(4, 6, 2, 4).is_err());
}

proptest! {
    #[test]
    fn product_degrees(a in 1usize..6, b in 1usize..6) {
        let (pa, pb) = (generate(&format!("path:{a}")).unwrap(), generate(&format!("path:{b}")).unwrap());
        let strong = strong_product(&pa, &pb, DEFAULT_PRODUCT_LIMIT).unwrap();
        let cart = cartesian_product(&pa, &pb, DEFAULT_PRODUCT_LIMIT).unwrap();
        prop_assert_eq!(strong.n(), a * b);
        for v in 0..a * b {
            let (x, y) = (v / b, v % b);
            let dx = pa.degree(x);
            let dy = pb.degree(y);
            prop_assert_eq!(cart.degree(v), dx + dy);
            prop_assert_eq!(strong.degree(v), (dx + 1) * (dy + 1) - 1);
        }
    }

    #[test]
    fn distances_are_symmetric(parents in prop::collection::vec(0usize..100, 1..12)) {
        let n = parents.len() + 1;
        let edges: Vec<_> = parents.iter().enumerate().map(|(j, p)| (p % (j + 1), j + 1)).collect();
        let g = Graph::new(n, &edges).unwrap();
        prop_assert!(g.is_tree());
        for u in 0..n {
            for v in 0..n {
                prop_assert_eq!(g.dist(u, v), g.dist(v, u));
            }
        }
    }
}
