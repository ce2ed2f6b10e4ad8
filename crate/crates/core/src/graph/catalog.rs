//! Exhaustive catalogues of small graphs up to isomorphism.
//!
//! Graphs are grown one vertex at a time from every representative on one
//! fewer vertex and deduplicated by a canonical code: colour refinement
//! orders the vertices into classes, and the code is the least adjacency
//! bit string over all orderings that permute vertices within classes.

use std::collections::BTreeSet;

use super::Graph;

/// Largest order the catalogue supports (the code is an upper-triangle bit string).
pub const MAX_CATALOG_ORDER: usize = 11;

/// All graphs on `n` vertices up to isomorphism, as adjacency bit rows.
fn all_graphs(n: usize) -> Vec<Vec<u16>> {
    assert!(n <= MAX_CATALOG_ORDER, "catalogue limited to {MAX_CATALOG_ORDER} vertices");
    if n == 0 {
        return vec![Vec::new()];
    }
    let smaller = all_graphs(n - 1);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for base in &smaller {
        for mask in 0u16..(1 << (n - 1)) {
            let mut rows = base.clone();
            rows.push(mask);
            for (v, row) in rows.iter_mut().enumerate().take(n - 1) {
                if mask >> v & 1 == 1 {
                    *row |= 1 << (n - 1);
                }
            }
            if seen.insert(canonical_code(&rows)) {
                out.push(rows);
            }
        }
    }
    out
}

fn rows_to_graph(rows: &[u16]) -> Graph {
    let n = rows.len();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rows[u] >> v & 1 == 1 {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("catalogue graphs are well formed")
}

/// Connected graphs on `n` vertices, one per isomorphism class.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n)
        .iter()
        .map(|r| rows_to_graph(r))
        .filter(Graph::is_connected)
        .collect()
}

/// Trees on `n` vertices, one per isomorphism class.
pub fn trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    // leaf addition keeps the search inside trees
    let mut layer: Vec<Vec<u16>> = vec![vec![0]];
    for size in 2..=n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for base in &layer {
            for parent in 0..size - 1 {
                let mut rows = base.clone();
                rows.push(1 << parent);
                rows[parent] |= 1 << (size - 1);
                if seen.insert(canonical_code(&rows)) {
                    next.push(rows);
                }
            }
        }
        layer = next;
    }
    layer.iter().map(|r| rows_to_graph(r)).collect()
}

/// Canonical code of a graph given as adjacency bit rows.
pub fn canonical_code(rows: &[u16]) -> u64 {
    let n = rows.len();
    let colors = refine(rows);
    // vertices grouped by colour, colours in increasing order
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let max_color = colors.iter().copied().max().map_or(0, |c| c + 1);
    for c in 0..max_color {
        let class: Vec<usize> = (0..n).filter(|&v| colors[v] == c).collect();
        if !class.is_empty() {
            classes.push(class);
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut best = u64::MAX;
    search(rows, &mut classes, 0, &mut order, &mut best);
    best
}

fn search(rows: &[u16], classes: &mut [Vec<usize>], ci: usize, order: &mut Vec<usize>, best: &mut u64) {
    if ci == classes.len() {
        let code = encode(rows, order);
        if code < *best {
            *best = code;
        }
        return;
    }
    let class = classes[ci].clone();
    permute(rows, classes, ci, &class, &mut vec![false; class.len()], order, best);
}

fn permute(
    rows: &[u16],
    classes: &mut [Vec<usize>],
    ci: usize,
    class: &[usize],
    used: &mut Vec<bool>,
    order: &mut Vec<usize>,
    best: &mut u64,
) {
    if used.iter().all(|&u| u) {
        search(rows, classes, ci + 1, order, best);
        return;
    }
    for i in 0..class.len() {
        if !used[i] {
            used[i] = true;
            order.push(class[i]);
            permute(rows, classes, ci, class, used, order, best);
            order.pop();
            used[i] = false;
        }
    }
}

fn encode(rows: &[u16], order: &[usize]) -> u64 {
    let mut code = 0u64;
    let mut bit = 0;
    for i in 0..order.len() {
        for j in i + 1..order.len() {
            if rows[order[i]] >> order[j] & 1 == 1 {
                code |= 1 << bit;
            }
            bit += 1;
        }
    }
    code
}

/// Colour refinement with isomorphism-invariant colour names.
fn refine(rows: &[u16]) -> Vec<usize> {
    let n = rows.len();
    let mut colors: Vec<usize> = (0..n).map(|v| rows[v].count_ones() as usize).collect();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n).filter(|&u| rows[v] >> u & 1 == 1).map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let distinct: Vec<&(usize, Vec<usize>)> = {
            let set: BTreeSet<&(usize, Vec<usize>)> = sigs.iter().collect();
            set.into_iter().collect()
        };
        let next: Vec<usize> = sigs.iter().map(|s| distinct.binary_search(&s).unwrap()).collect();
        let before = colors.iter().collect::<BTreeSet<_>>().len();
        colors = next;
        if distinct.len() == before {
            return colors;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_counts_match_known_sequences() {
        // numbers of graphs and connected graphs on n vertices
        let all = [1, 1, 2, 4, 11, 34, 156];
        let connected = [0, 1, 1, 2, 6, 21, 112];
        for n in 1..=6 {
            assert_eq!(all_graphs(n).len(), all[n], "graphs on {n}");
            assert_eq!(connected_graphs(n).len(), connected[n], "connected graphs on {n}");
        }
    }

    #[test]
    fn tree_counts_match_known_sequence() {
        let counts = [0, 1, 1, 1, 2, 3, 6, 11, 23, 47];
        for n in 1..=9 {
            assert_eq!(trees(n).len(), counts[n], "trees on {n}");
            assert!(trees(n).iter().all(Graph::is_tree));
        }
    }

    #[test]
    fn relabelled_graphs_share_a_code() {
        // P_4 labelled two ways
        let a = [0b0010, 0b0101, 0b1010, 0b0100];
        let b = [0b0100, 0b1000, 0b1001, 0b0110];
        assert_eq!(canonical_code(&a), canonical_code(&b));
    }
}
