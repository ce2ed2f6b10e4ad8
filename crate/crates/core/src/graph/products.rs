//! Strong and Cartesian products. Vertex `(u, u')` gets index `u * |V(h)| + u'`.

use super::Graph;
use crate::error::{Error, Result};

/// Default cap on the number of product vertices.
pub const DEFAULT_PRODUCT_LIMIT: usize = 4096;

pub fn strong_product(g: &Graph, h: &Graph, limit: usize) -> Result<Graph> {
    product(g, h, limit, true)
}

pub fn cartesian_product(g: &Graph, h: &Graph, limit: usize) -> Result<Graph> {
    product(g, h, limit, false)
}

fn product(g: &Graph, h: &Graph, limit: usize, strong: bool) -> Result<Graph> {
    let (a, b) = (g.n(), h.n());
    let vertices = a.saturating_mul(b);
    if vertices > limit {
        return Err(Error::ProductTooLarge { vertices, limit });
    }
    let idx = |u: usize, w: usize| u * b + w;
    let mut edges = Vec::new();
    for u in 0..a {
        for w in 0..b {
            // u = v, w ~ w'
            for &w2 in h.neighbors(w) {
                edges.push((idx(u, w), idx(u, w2)));
            }
            for &u2 in g.neighbors(u) {
                // w = w', u ~ v
                edges.push((idx(u, w), idx(u2, w)));
                if strong {
                    for &w2 in h.neighbors(w) {
                        edges.push((idx(u, w), idx(u2, w2)));
                    }
                }
            }
        }
    }
    Graph::new(vertices, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::{clique, path};
    use crate::graph::INF;

    #[test]
    fn p2_strong_p2_is_k4() {
        let g = strong_product(&path(2).unwrap(), &path(2).unwrap(), 100).unwrap();
        assert_eq!(g, clique(4).unwrap());
    }

    #[test]
    fn king_three_by_three() {
        let g = strong_product(&path(3).unwrap(), &path(3).unwrap(), 100).unwrap();
        assert_eq!(g.dist(0, 8), 2);
        assert_eq!(g.degree(4), 8);
    }

    #[test]
    fn identity_factors() {
        let k1 = path(1).unwrap();
        assert_eq!(strong_product(&path(2).unwrap(), &k1, 100).unwrap(), path(2).unwrap());
        assert_eq!(cartesian_product(&path(5).unwrap(), &k1, 100).unwrap(), path(5).unwrap());
    }

    #[test]
    fn p2_box_p2_is_c4() {
        let g = cartesian_product(&path(2).unwrap(), &path(2).unwrap(), 100).unwrap();
        assert_eq!(g.edge_count(), 4);
        assert!((0..4).all(|v| g.degree(v) == 2));
        assert_eq!(g.dist(0, 3), 2);
    }

    #[test]
    fn grid_three_by_three() {
        let g = cartesian_product(&path(3).unwrap(), &path(3).unwrap(), 100).unwrap();
        assert_eq!(g.dist(0, 8), 4);
    }

    #[test]
    fn size_guard() {
        let p = path(10).unwrap();
        assert_eq!(
            strong_product(&p, &p, 50),
            Err(Error::ProductTooLarge { vertices: 100, limit: 50 })
        );
    }

    #[test]
    fn disconnected_factor_gives_inf() {
        let g = Graph::new(2, &[]).unwrap();
        let p = cartesian_product(&g, &path(2).unwrap(), 10).unwrap();
        assert_eq!(p.dist(0, 2), INF);
    }
}
