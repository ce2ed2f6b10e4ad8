//! Solver against a naive explicit-state oracle, plus structural properties.

use std::collections::{HashMap, HashSet};

use eternal_pursuit::engine::{
    c_t, capt_k, cop_number, eternal_cop_number, eternal_win_set, extract_single_play_strategy, extract_strategy,
    is_legal_move, Budget, CopConfig,
};
use eternal_pursuit::graph::catalog::connected_graphs;
use eternal_pursuit::graph::generators::{clique, cycle, path};
use eternal_pursuit::graph::Graph;
use proptest::prelude::*;

/// Straightforward memoised game search, written without bitsets.
struct Naive<'a> {
    g: &'a Graph,
    configs: Vec<Vec<usize>>,
    moves: Vec<Vec<usize>>,
}

impl<'a> Naive<'a> {
    fn new(g: &'a Graph, k: usize) -> Self {
        let mut configs = vec![vec![]];
        for _ in 0..k {
            let mut next = Vec::new();
            for c in &configs {
                let lo = c.last().copied().unwrap_or(0);
                for v in lo..g.n() {
                    let mut d = c.clone();
                    d.push(v);
                    next.push(d);
                }
            }
            configs = next;
        }
        let index: HashMap<_, _> = configs.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
        let moves = configs
            .iter()
            .map(|c| {
                let mut out = HashSet::new();
                let mut partial = vec![vec![]];
                for &p in c {
                    let mut next = Vec::new();
                    for q in &partial {
                        for &w in g.closed_neighbors(p) {
                            let mut q2: Vec<usize> = q.clone();
                            q2.push(w);
                            next.push(q2);
                        }
                    }
                    partial = next;
                }
                for mut q in partial {
                    q.sort();
                    out.insert(index[&q]);
                }
                let mut out: Vec<usize> = out.into_iter().collect();
                out.sort();
                out
            })
            .collect();
        Naive { g, configs, moves }
    }

    fn has(&self, c: usize, v: usize) -> bool {
        self.configs[c].contains(&v)
    }

    fn wins(&self, c: usize, r: usize, s: usize, target: &[bool], memo: &mut HashMap<(usize, usize, usize), bool>) -> bool {
        if let Some(&w) = memo.get(&(c, r, s)) {
            return w;
        }
        let mut result = false;
        for &d in &self.moves[c] {
            let ok = if self.has(d, r) {
                target[d]
            } else {
                self.g.closed_neighbors(r).iter().all(|&r2| {
                    if self.has(d, r2) {
                        target[d]
                    } else {
                        s > 1 && self.wins(d, r2, s - 1, target, memo)
                    }
                })
            };
            if ok {
                result = true;
                break;
            }
        }
        memo.insert((c, r, s), result);
        result
    }

    fn covers(&self, c: usize, t: usize, target: &[bool], memo: &mut HashMap<(usize, usize, usize), bool>) -> bool {
        (0..self.g.n()).filter(|&r| !self.has(c, r)).all(|r| self.wins(c, r, t, target, memo))
    }

    fn eternal(&self, t: usize) -> Vec<bool> {
        let mut w = vec![true; self.configs.len()];
        loop {
            let mut memo = HashMap::new();
            let next: Vec<bool> = (0..self.configs.len()).map(|c| w[c] && self.covers(c, t, &w, &mut memo)).collect();
            if next == w {
                return w;
            }
            w = next;
        }
    }

    fn single(&self, t: usize) -> bool {
        let all = vec![true; self.configs.len()];
        let mut memo = HashMap::new();
        (0..self.configs.len()).any(|c| self.covers(c, t, &all, &mut memo))
    }
}

fn naive_eternal_number(g: &Graph, t: usize) -> usize {
    (1..=g.n()).find(|&k| Naive::new(g, k).eternal(t).iter().any(|&w| w)).unwrap()
}

fn naive_c_t(g: &Graph, t: usize) -> usize {
    (1..=g.n()).find(|&k| Naive::new(g, k).single(t)).unwrap()
}

fn budget() -> Budget {
    Budget::default()
}

fn arb_connected(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (Just(n), prop::collection::vec(0..usize::MAX, n - 1), prop::collection::vec(any::<bool>(), pairs)).prop_map(
            |(n, parents, extra)| {
                let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (parents[v - 1] % v, v)).collect();
                let mut idx = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if extra[idx] && !edges.contains(&(u, v)) {
                            edges.push((u, v));
                        }
                        idx += 1;
                    }
                }
                Graph::new(n, &edges).unwrap()
            },
        )
    })
}

#[test]
fn matches_naive_oracle_on_all_graphs_up_to_five_vertices() {
    for n in 1..=5 {
        for g in connected_graphs(n) {
            for t in 1..=3 {
                assert_eq!(eternal_cop_number(&g, t, budget()).unwrap().k, naive_eternal_number(&g, t), "{g:?} t={t}");
                assert_eq!(c_t(&g, t, budget()).unwrap(), naive_c_t(&g, t), "{g:?} t={t}");
            }
        }
    }
}

#[test]
fn win_sets_match_naive_oracle() {
    for g in [path(6).unwrap(), cycle(6).unwrap(), clique(4).unwrap()] {
        for k in 1..=3 {
            for t in 1..=3 {
                let naive = Naive::new(&g, k);
                let want: Vec<CopConfig> = naive
                    .eternal(t)
                    .iter()
                    .enumerate()
                    .filter(|(_, &w)| w)
                    .map(|(c, _)| CopConfig::new(naive.configs[c].clone()))
                    .collect();
                assert_eq!(eternal_win_set(&g, k, t, budget()).unwrap(), want, "k={k} t={t}");
            }
        }
    }
}

#[test]
fn known_small_values() {
    let p3 = path(3).unwrap();
    assert_eq!(capt_k(&p3, 1, budget()).unwrap(), Some(1));
    assert_eq!(cop_number(&cycle(5).unwrap(), budget()).unwrap(), 2);
    assert_eq!(capt_k(&cycle(5).unwrap(), 1, budget()).unwrap(), None);
    assert_eq!(eternal_cop_number(&clique(6).unwrap(), 1, budget()).unwrap().k, 1);
}

#[test]
fn t_zero_and_disconnected_graphs_are_rejected() {
    let g = path(3).unwrap();
    assert!(eternal_cop_number(&g, 0, budget()).is_err());
    let split = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
    assert!(eternal_cop_number(&split, 2, budget()).is_err());
}

#[test]
fn budget_is_honoured() {
    let g = path(40).unwrap();
    assert!(eternal_win_set(&g, 4, 2, Budget(1000)).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn agrees_with_naive_oracle(g in arb_connected(6), t in 1usize..=3) {
        prop_assert_eq!(eternal_cop_number(&g, t, budget()).unwrap().k, naive_eternal_number(&g, t));
    }

    #[test]
    fn monotone_and_sandwiched(g in arb_connected(8), t in 1usize..=4) {
        let e = eternal_cop_number(&g, t, budget()).unwrap().k;
        let e_next = eternal_cop_number(&g, t + 1, budget()).unwrap().k;
        let single = c_t(&g, t, budget()).unwrap();
        prop_assert!(e_next <= e);
        prop_assert!(single <= e);
        prop_assert!(cop_number(&g, budget()).unwrap() <= single);
    }

    #[test]
    fn win_set_is_closed_under_fixpoint(g in arb_connected(7), t in 1usize..=3) {
        let k = eternal_cop_number(&g, t, budget()).unwrap().k;
        let win = eternal_win_set(&g, k, t, budget()).unwrap();
        prop_assert!(!win.is_empty());
        // one more cop never hurts
        let more = eternal_win_set(&g, k + 1, t, budget()).unwrap();
        prop_assert!(!more.is_empty());
        if k > 1 {
            prop_assert!(eternal_win_set(&g, k - 1, t, budget()).unwrap().is_empty());
        }
    }

    #[test]
    fn extracted_tables_certify(g in arb_connected(7), t in 1usize..=3) {
        let k = eternal_cop_number(&g, t, budget()).unwrap().k;
        let table = extract_strategy(&g, k, t, budget()).unwrap();
        table.certify(&g).unwrap();
        for (key, to) in &table.moves {
            prop_assert!(is_legal_move(&g, &key.config, to));
        }
        let single = extract_single_play_strategy(&g, c_t(&g, t, budget()).unwrap(), t, budget()).unwrap();
        prop_assert!(!single.winning.is_empty());
    }
}
