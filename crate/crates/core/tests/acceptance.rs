//! Acceptance criteria, one test each. Every test prints a single
//! `PASS`/`FAIL` line with the measured values (visible with `--nocapture`
//! or on failure).

use std::time::{Duration, Instant};

use eternal_pursuit::bounds::{
    cycle_value, ell, maxseq, maxseq_oracle, path_value, report_all, report_family, retract_parameter_bound, showcase,
};
use eternal_pursuit::engine::{
    c_t, capt_k, config_count, cop_number, eternal_cop_number, eternal_win_set, Budget,
};
use eternal_pursuit::graph::catalog::{connected_graphs, trees};
use eternal_pursuit::graph::generators::{cycle, generate, path};
use eternal_pursuit::graph::{strong_product, Family, Graph, DEFAULT_PRODUCT_LIMIT};
use eternal_pursuit::reduction::{small_instances, verify_reduction};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn budget() -> Budget {
    Budget::default()
}

fn report(id: u32, title: &str, failures: &[String], detail: &str) {
    if failures.is_empty() {
        println!("PASS criterion {id:>2} {title}: {detail}");
    } else {
        println!("FAIL criterion {id:>2} {title}: {detail}");
        for f in failures.iter().take(20) {
            println!("    {f}");
        }
    }
}

fn conclude(id: u32, title: &str, failures: Vec<String>, detail: String) {
    report(id, title, &failures, &detail);
    assert!(failures.is_empty(), "criterion {id} failed: {} problem(s)", failures.len());
}

fn eternal(g: &Graph, t: usize) -> usize {
    eternal_cop_number(g, t, budget()).unwrap().k
}

#[test]
fn criterion_01_path_formula() {
    let limit = Duration::from_secs(10);
    let mut failures = Vec::new();
    let mut slowest = Duration::ZERO;
    for n in 1..=8 {
        for t in 1..=4 {
            let start = Instant::now();
            let got = eternal(&path(n).unwrap(), t);
            let took = start.elapsed();
            slowest = slowest.max(took);
            let want = path_value(n as u64, t as u64).unwrap() as usize;
            if got != want {
                failures.push(format!("P_{n} t={t}: solver {got}, formula {want}"));
            }
            if took > limit {
                failures.push(format!("P_{n} t={t}: {took:?} exceeds {limit:?}"));
            }
        }
    }
    conclude(1, "path formula", failures, format!("32 instances, slowest {slowest:?}"));
}

#[test]
fn criterion_02_cycle_formulas() {
    let limit = Duration::from_secs(60);
    let mut failures = Vec::new();
    let mut slowest = Duration::ZERO;
    for n in 4..=9 {
        for t in 1..=4 {
            let start = Instant::now();
            let got = eternal(&cycle(n).unwrap(), t);
            let took = start.elapsed();
            slowest = slowest.max(took);
            let want = cycle_value(n as u64, t as u64).unwrap() as usize;
            if got != want {
                failures.push(format!("C_{n} t={t}: solver {got}, formula {want}"));
            }
            if took > limit {
                failures.push(format!("C_{n} t={t}: {took:?} exceeds {limit:?}"));
            }
        }
    }
    conclude(2, "cycle formulas", failures, format!("24 instances, slowest {slowest:?}"));
}

#[test]
fn criterion_03_one_step_is_eternal_domination() {
    let mut failures = Vec::new();
    for n in 1..=9 {
        let got = eternal(&path(n).unwrap(), 1);
        if got != n.div_ceil(2) {
            failures.push(format!("P_{n}: {got}, expected {}", n.div_ceil(2)));
        }
    }
    for n in 3..=9 {
        let got = eternal(&cycle(n).unwrap(), 1);
        if got != n.div_ceil(3) {
            failures.push(format!("C_{n}: {got}, expected {}", n.div_ceil(3)));
        }
    }
    conclude(3, "t=1 equivalence", failures, "P_1..P_9 and C_3..C_9".into());
}

#[test]
fn criterion_04_spider_case_study() {
    let spider = generate("spider:3x4").unwrap();
    let extended = generate("spider:4,4,5").unwrap();
    let single = c_t(&spider, 5, budget()).unwrap();
    let forever = eternal(&spider, 5);
    let extended_value = eternal(&extended, 5);
    let mut failures = Vec::new();
    if single != 1 {
        failures.push(format!("c_5(spider:3x4) = {single}, expected 1"));
    }
    if forever != 2 {
        failures.push(format!("eternal value of spider:3x4 at t=5 is {forever}, expected 2"));
    }
    if extended_value < 3 {
        failures.push(format!("eternal value of spider:4,4,5 at t=5 is {extended_value}, expected >= 3"));
    }
    conclude(
        4,
        "spider case study",
        failures,
        format!("c_5 = {single}, eternal = {forever}, extended spider eternal = {extended_value}"),
    );
}

#[test]
fn criterion_05_capture_time_doubling() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 1..=7 {
        for g in connected_graphs(n) {
            for k in 1..=2 {
                let Some(capt) = capt_k(&g, k, budget()).unwrap() else { continue };
                // k >= n cops sit everywhere and capt is 0; any t works
                let t = (2 * capt).max(1);
                checked += 1;
                if eternal_win_set(&g, k, t, budget()).unwrap().is_empty() {
                    failures.push(format!("{} with k={k}, capt={capt}: {k} cops lose at t={t}", g.to_edge_list().replace('\n', ";")));
                }
            }
        }
    }
    let took = start.elapsed();
    if took > Duration::from_secs(30 * 60) {
        failures.push(format!("took {took:?}"));
    }
    conclude(5, "capture-time doubling", failures, format!("{checked} (graph, k) pairs in {took:?}"));
}

#[test]
fn criterion_06_horizon_equivalence() {
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 1..=5 {
        for g in connected_graphs(n) {
            let c = cop_number(&g, budget()).unwrap();
            for k in 1..=2 {
                let t = n * config_count(n, k).unwrap() as usize;
                let wins = !eternal_win_set(&g, k, t, budget()).unwrap().is_empty();
                checked += 1;
                if wins != (c <= k) {
                    failures.push(format!("n={n} k={k}: eternal win {wins}, cop number {c}"));
                }
            }
        }
    }
    conclude(6, "horizon equivalence", failures, format!("{checked} (graph, k) pairs"));
}

#[test]
fn criterion_07_maxseq() {
    let start = Instant::now();
    let failures: Vec<String> = (1..=64u64)
        .filter(|&t| maxseq(t) != maxseq_oracle(t).unwrap())
        .map(|t| format!("t={t}: formula {}, oracle {}", maxseq(t), maxseq_oracle(t).unwrap()))
        .collect();
    let took = start.elapsed();
    let mut failures = failures;
    if took > Duration::from_secs(1) {
        failures.push(format!("took {took:?}"));
    }
    conclude(7, "maxseq", failures, format!("t = 1..64 in {took:?}"));
}

#[test]
fn criterion_08_reduction_equivalence() {
    let limit = Duration::from_secs(600);
    let mut failures = Vec::new();
    let mut checked = 0;
    for inst in small_instances(2, 2) {
        for t in 1..=2 {
            let start = Instant::now();
            let check = verify_reduction(&inst, t, budget()).unwrap();
            checked += 1;
            if !check.holds() {
                failures.push(format!("{:?} t={t}: {check:?}", inst.subsets));
            }
            if start.elapsed() > limit {
                failures.push(format!("{:?} t={t}: too slow", inst.subsets));
            }
        }
    }
    conclude(8, "reduction equivalence", failures, format!("{checked} (instance, t) pairs"));
}

fn random_connected(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    let p: f64 = rng.gen_range(0.1..0.6);
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

#[test]
fn criterion_09_bound_soundness() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut graphs: Vec<(String, Graph, Option<Family>)> = Vec::new();
    for n in 1..=8 {
        for (j, g) in trees(n).into_iter().enumerate() {
            graphs.push((format!("tree n={n} #{j}"), g, None));
        }
    }
    for j in 0..200 {
        let n = rng.gen_range(2..=8);
        graphs.push((format!("random #{j} (n={n})"), random_connected(&mut rng, n), None));
    }
    for spec in ["grid:3x3", "grid:3x4", "king:3x3", "king:3x4"] {
        let f: Family = spec.parse().unwrap();
        graphs.push((spec.to_string(), f.build().unwrap(), Some(f)));
    }
    let mut failures = Vec::new();
    let mut checks = 0;
    for (name, g, family) in &graphs {
        for t in 1..=3 {
            let exact = eternal(g, t) as u64;
            let set = match family {
                Some(f) => report_family(f, t as u64, budget()).unwrap(),
                None => report_all(g, t as u64, budget()).unwrap(),
            };
            assert!(set.skipped.is_empty(), "{name}: {:?}", set.skipped);
            for r in &set.reports {
                checks += 1;
                if !r.admits(exact) {
                    failures.push(format!("{name} t={t}: {} {} {} vs exact {exact}", r.name, r.kind, r.value));
                }
            }
        }
    }
    conclude(
        9,
        "bound soundness",
        failures,
        format!("{} graphs x t=1..3, {checks} reports checked", graphs.len()),
    );
}

#[test]
fn criterion_10_four_retract_example() {
    let (g, d) = showcase().unwrap();
    let rep = retract_parameter_bound(&g, &d, 4, budget()).unwrap();
    let alphas = (d.alpha(1, 2), d.alpha(4, 1), d.alpha(1, 1));
    let mut failures = Vec::new();
    if rep.value != 8 {
        failures.push(format!("bound {}", rep.value));
    }
    if alphas != (1, 1, 2) {
        failures.push(format!("alphas {alphas:?}"));
    }
    if (ell(1, 4), ell(4, 4)) != (2, 4) {
        failures.push("ell values".into());
    }
    conclude(10, "four-retract example", failures, format!("n = {}, bound = {}, alphas = {alphas:?}", g.n(), rep.value));
}

#[test]
fn criterion_11_strong_product_law() {
    let p3 = path(3).unwrap();
    let p6 = path(6).unwrap();
    let big = strong_product(&p6, &p3, DEFAULT_PRODUCT_LIMIT).unwrap();
    let small = strong_product(&p3, &p3, DEFAULT_PRODUCT_LIMIT).unwrap();
    let (v6, vbig, vsmall) = (eternal(&p6, 2), eternal(&big, 2), eternal(&small, 2));
    let mut failures = Vec::new();
    if big.n() != 18 || vbig != 2 || vbig != v6 {
        failures.push(format!("P_6 x P_3: {vbig} on {} vertices, P_6 alone {v6}", big.n()));
    }
    if vsmall != 1 {
        failures.push(format!("P_3 x P_3: {vsmall}"));
    }
    conclude(11, "strong product law", failures, format!("P_6xP_3 -> {vbig}, P_3xP_3 -> {vsmall}"));
}

#[test]
fn criterion_12_grid_capture_time() {
    let mut failures = Vec::new();
    let mut seen = Vec::new();
    for m in 2..=3 {
        for n in 2..=3 {
            let g = generate(&format!("grid:{m}x{n}")).unwrap();
            let capt = capt_k(&g, 2, budget()).unwrap();
            seen.push(format!("{m}x{n}: {capt:?}"));
            if capt != Some((m + n) / 2) {
                failures.push(format!("capt_2 of {m}x{n} grid is {capt:?}, expected {}", (m + n) / 2));
            }
        }
    }
    conclude(12, "grid capture time", failures, seen.join(", "));
}
