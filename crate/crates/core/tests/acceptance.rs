//! Acceptance gate: twelve standalone criteria, each printing a single
//! PASS line. Decision procedures are checked against independent
//! brute-force oracles defined locally in this file.

use std::collections::{BTreeMap, BTreeSet};
use std::process::Command;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ecdecomp::generators::{
    gallai_blowup, rainbow_complete, random_ecg, random_ecg_min_cdeg, random_oriented,
    InternalColoring,
};
use ecdecomp::graph::{
    two_color_core_of, ColorId, Digraph, Edge, EdgeColoredGraph, PartitionTargets, VertexId,
};
use ecdecomp::io::{parse_certificate, parse_ecg, verify_certificate, write_ecg};
use ecdecomp::partition::{
    check_partition, exact_partition_search, g_threshold, p_s_bound, p_s_exact,
    partition_2k_pipeline, partition_bipartite_a2, partition_complete_a2, random_partition,
    CheckOutcome, GoodVector,
};
use ecdecomp::reductions::{bermond_thomassen_probe, bound_chain, digraph_to_ecg};
use ecdecomp::structures::{find_pc_c4_bipartite, has_pc_cycle, minimalize_two_colored, MinimalStructure};
use ecdecomp::Search;

const BUDGET: u64 = 10_000_000;

/// Brute-force PC cycle oracle: enumerate simple cycles (canonical minimum
/// start) and check that adjacent edges, including around the closure,
/// carry distinct colors.
fn oracle_has_pc_cycle(g: &EdgeColoredGraph) -> bool {
    fn dfs(
        g: &EdgeColoredGraph,
        s: VertexId,
        path: &mut Vec<VertexId>,
        cols: &mut Vec<ColorId>,
        on: &mut Vec<bool>,
    ) -> bool {
        let u = *path.last().unwrap();
        for &(w, c) in g.neighbors(u) {
            if let Some(&last) = cols.last() {
                if c == last {
                    continue;
                }
            }
            if w == s {
                if path.len() >= 3 && c != cols[0] {
                    return true;
                }
                continue;
            }
            if w > s && !on[w] {
                path.push(w);
                cols.push(c);
                on[w] = true;
                let hit = dfs(g, s, path, cols, on);
                on[w] = false;
                cols.pop();
                path.pop();
                if hit {
                    return true;
                }
            }
        }
        false
    }
    let n = g.vertex_count();
    let mut on = vec![false; n];
    for s in 0..n {
        let mut path = vec![s];
        let mut cols = Vec::new();
        on[s] = true;
        let hit = dfs(g, s, &mut path, &mut cols, &mut on);
        on[s] = false;
        if hit {
            return true;
        }
    }
    false
}

fn structure_graph(g: &EdgeColoredGraph, s: &MinimalStructure) -> EdgeColoredGraph {
    EdgeColoredGraph::new(g.vertex_count(), s.edges(g)).unwrap()
}

#[test]
fn criterion_01_minimalize_classification() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xAC01);
    let mut classified = 0usize;
    let mut bowties = 0usize;
    let mut seed = 0u64;
    while classified < 10_000 {
        seed += 1;
        let n = rng.gen_range(4..=12);
        let p = [0.3, 0.45, 0.6][rng.gen_range(0..3)];
        let colors = rng.gen_range(2..=4);
        let g = random_ecg(n, p, colors, seed).unwrap();
        if g.two_color_core().is_empty() {
            continue;
        }
        let s = minimalize_two_colored(&g)
            .unwrap_or_else(|e| panic!("classification failure on seed {seed}: {e}"));
        let sub = structure_graph(&g, &s);
        // minimally 2-colored: min color degree 2 on its vertices, and no
        // proper edge subset retains a nonempty 2-color core
        let es = s.edges(&g);
        for i in 0..es.len() {
            let mut t = es.clone();
            t.remove(i);
            assert!(
                two_color_core_of(g.vertex_count(), &t).is_empty(),
                "non-minimal structure on seed {seed}"
            );
        }
        match &s {
            MinimalStructure::PcCycle(c) => c.validate(&g).unwrap(),
            MinimalStructure::GBowtie(b) => {
                b.validate(&g).unwrap();
                assert!(!has_pc_cycle(&sub), "g-bowtie output must be PC-cycle-free");
                bowties += 1;
            }
        }
        classified += 1;
    }
    println!(
        "ACCEPTANCE 1: PASS - {classified} random cores classified, zero failures ({bowties} g-bowties)"
    );
}

#[test]
fn criterion_02_pc_cycle_decision_soundness() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xAC02);
    for trial in 0..100_000u64 {
        let n = rng.gen_range(3..=6);
        let p = [0.2, 0.4, 0.6, 0.9][rng.gen_range(0..4)];
        let colors = rng.gen_range(1..=3);
        let g = random_ecg(n, p, colors, 0x2000_0000 + trial).unwrap();
        assert_eq!(
            has_pc_cycle(&g),
            oracle_has_pc_cycle(&g),
            "disagreement on trial {trial}: {:?}",
            g.edges()
        );
    }
    for trial in 0..10_000u64 {
        let n = rng.gen_range(4..=9);
        let p = [0.3, 0.5, 0.8][rng.gen_range(0..3)];
        let colors = rng.gen_range(2..=5);
        let g = random_ecg(n, p, colors, 0x3000_0000 + trial).unwrap();
        assert_eq!(has_pc_cycle(&g), oracle_has_pc_cycle(&g));
    }
    println!("ACCEPTANCE 2: PASS - peeling agrees with exhaustive cycle search on 110000 instances");
}

#[test]
fn criterion_03_two_two_at_delta_five() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xAC03);
    let targets = PartitionTargets::new(vec![2, 2]).unwrap();
    for trial in 0..1_000u64 {
        let n = rng.gen_range(6..=10);
        let g = random_ecg_min_cdeg(n, 5, 0.5, n, 0x4000_0000 + trial, 10_000).unwrap();
        assert!(g.min_color_degree().unwrap() >= 5);
        let exact = exact_partition_search(&g, &targets, BUDGET);
        assert!(
            !matches!(exact, Search::Absent),
            "counterexample at trial {trial}: {:?}",
            g.edges()
        );
        assert!(
            partition_2k_pipeline(&g, 2, BUDGET, trial).is_found(),
            "pipeline failed at trial {trial}"
        );
    }
    println!("ACCEPTANCE 3: PASS - 1000 instances at min color degree 5, zero Absent");
}

#[test]
fn criterion_04_rainbow_tightness() {
    for (a, b) in [(2usize, 2usize), (3, 2), (3, 3)] {
        let g = rainbow_complete(a + b + 1).unwrap();
        let targets = PartitionTargets::new(vec![a, b]).unwrap();
        assert!(
            matches!(exact_partition_search(&g, &targets, BUDGET), Search::Absent),
            "rainbow K_{} must admit no ({a},{b})-feasible partition",
            a + b + 1
        );
    }
    println!("ACCEPTANCE 4: PASS - rainbow K_(a+b+1) proven infeasible for (2,2), (3,2), (3,3)");
}

#[test]
fn criterion_05_tail_bound_exhaustive() {
    // the tail probability is symmetric in the xs, so multisets cover all
    // good vectors; spot-check the symmetry explicitly as well
    let mut checked = 0usize;
    for k in 1..=10usize {
        let mut xs = vec![1usize; k];
        loop {
            for x0 in 0..=(k / 2) {
                let gv = GoodVector::new(x0, xs.clone()).unwrap();
                let exact = p_s_exact(&gv);
                let bound = p_s_bound(x0, k).unwrap();
                assert!(
                    exact <= bound,
                    "tail bound violated at x0={x0}, xs={xs:?}"
                );
                if xs.iter().all(|&x| x == 1) {
                    assert_eq!(exact, bound, "equality must hold at all-ones");
                }
                checked += 1;
            }
            // next nondecreasing vector with entries in 1..=4
            let Some(i) = (0..k).rev().find(|&i| xs[i] < 4) else { break };
            xs[i] += 1;
            for j in (i + 1)..k {
                xs[j] = xs[i];
            }
        }
    }
    let sym_a = p_s_exact(&GoodVector::new(2, [1, 3, 2, 4, 1].to_vec()).unwrap());
    let sym_b = p_s_exact(&GoodVector::new(2, [4, 1, 1, 2, 3].to_vec()).unwrap());
    assert_eq!(sym_a, sym_b);
    println!("ACCEPTANCE 5: PASS - exact tail <= closed-form bound on {checked} good vectors, equality at all-ones");
}

#[test]
fn criterion_06_random_partition_regime() {
    let mut successes = 0usize;
    let mut total = 0usize;
    for &n in &[32usize, 64] {
        let delta = (2.0 * (n as f64).ln() + 4.0).ceil() as usize;
        for trial in 0..100u64 {
            let g =
                random_ecg_min_cdeg(n, delta, 0.5, n, 0x6000_0000 + n as u64 * 1000 + trial, 100_000)
                    .unwrap();
            total += 1;
            if random_partition(&g, 2, 2, trial, 100).is_ok() {
                successes += 1;
            }
        }
    }
    assert!(
        successes * 100 >= total * 99,
        "success rate too low: {successes}/{total}"
    );
    println!("ACCEPTANCE 6: PASS - random bipartition succeeded on {successes}/{total} instances");
}

#[test]
fn criterion_07_complete_a2_regime() {
    let mut count = 0usize;
    for &a in &[2usize, 3] {
        // random complete instances (rainbow triangles abound)
        for trial in 0..70u64 {
            let n = 10 + (trial % 3) as usize;
            let g =
                random_ecg_min_cdeg(n, a + 3, 1.0, n, 0x7000_0000 + a as u64 * 997 + trial, 10_000)
                    .unwrap();
            let cert = partition_complete_a2(&g, a).unwrap();
            let targets = PartitionTargets::new(vec![a, 2]).unwrap();
            assert!(matches!(
                check_partition(&g, &cert.parts, &targets).unwrap(),
                CheckOutcome::Valid(_)
            ));
            count += 1;
        }
        // Gallai blow-ups: two internally rainbow parts, one crossing color
        let m = a + 3;
        for seed in 0..30u64 {
            let g = gallai_blowup(&[m, m], InternalColoring::Rainbow, &[0], seed, false).unwrap();
            assert!(g.min_color_degree().unwrap() >= a + 3);
            let cert = partition_complete_a2(&g, a).unwrap();
            let targets = PartitionTargets::new(vec![a, 2]).unwrap();
            assert!(matches!(
                check_partition(&g, &cert.parts, &targets).unwrap(),
                CheckOutcome::Valid(_)
            ));
            count += 1;
        }
    }
    println!("ACCEPTANCE 7: PASS - {count} complete instances partitioned and verified at (a,2)");
}

fn random_complete_bipartite(
    m: usize,
    n: usize,
    colors: usize,
    min_cdeg: usize,
    seed: u64,
) -> Option<(EdgeColoredGraph, BTreeSet<VertexId>, BTreeSet<VertexId>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..200 {
        let mut es = Vec::new();
        for u in 0..m {
            for v in 0..n {
                es.push(Edge::new(u, m + v, rng.gen_range(0..colors)));
            }
        }
        let g = EdgeColoredGraph::new(m + n, es).unwrap();
        if g.min_color_degree().unwrap() >= min_cdeg {
            let x = (0..m).collect();
            let y = (m..m + n).collect();
            return Some((g, x, y));
        }
    }
    None
}

fn oracle_pc_c4(g: &EdgeColoredGraph, x: &BTreeSet<VertexId>, y: &BTreeSet<VertexId>) -> bool {
    let xs: Vec<_> = x.iter().copied().collect();
    let ys: Vec<_> = y.iter().copied().collect();
    for i in 0..xs.len() {
        for j in (i + 1)..xs.len() {
            for p in 0..ys.len() {
                for q in (p + 1)..ys.len() {
                    let (a, b, c, d) = (xs[i], ys[p], xs[j], ys[q]);
                    let e1 = g.edge_color(a, b).unwrap();
                    let e2 = g.edge_color(b, c).unwrap();
                    let e3 = g.edge_color(c, d).unwrap();
                    let e4 = g.edge_color(d, a).unwrap();
                    if e1 != e2 && e2 != e3 && e3 != e4 && e4 != e1 {
                        return true;
                    }
                }
            }
        }
    }
    false
}

#[test]
fn criterion_08_bipartite_regime() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xAC08);
    let mut found = 0usize;
    let mut trial = 0u64;
    while found < 200 {
        trial += 1;
        let m = rng.gen_range(3..=6);
        let n = rng.gen_range(3..=6);
        let Some((g, x, y)) = random_complete_bipartite(m, n, 6, 3, 0x8000_0000 + trial) else {
            continue;
        };
        let witness = find_pc_c4_bipartite(&g, &x, &y).unwrap();
        assert!(oracle_pc_c4(&g, &x, &y), "oracle disagrees: no PC C4 exists");
        let c4 = witness.expect("PC C4 must exist at min color degree >= 3");
        c4.validate(&g).unwrap();
        found += 1;
    }
    // (2,2) partitions at min color degree >= 4
    let mut partitioned = 0usize;
    let mut trial = 0u64;
    while partitioned < 50 {
        trial += 1;
        let Some((g, x, y)) = random_complete_bipartite(6, 6, 8, 4, 0x8100_0000 + trial) else {
            continue;
        };
        let cert = partition_bipartite_a2(&g, &x, &y, 2).unwrap();
        let targets = PartitionTargets::new(vec![2, 2]).unwrap();
        assert!(matches!(
            check_partition(&g, &cert.parts, &targets).unwrap(),
            CheckOutcome::Valid(_)
        ));
        partitioned += 1;
    }
    println!(
        "ACCEPTANCE 8: PASS - PC C4 found and oracle-confirmed on {found} instances, {partitioned} (2,2) certificates verified"
    );
}

fn check_reduction_identity(d: &Digraph) {
    let g = digraph_to_ecg(d).unwrap();
    for u in 0..d.vertex_count() {
        let expected = d.out_degree(u) + usize::from(d.in_degree(u) > 0);
        assert_eq!(
            g.color_degree(u).unwrap(),
            expected,
            "identity violated at vertex {u} of {:?}",
            d.arcs()
        );
    }
}

#[test]
fn criterion_09_reduction_identity() {
    // exhaustive: every oriented digraph on n <= 5 vertices, encoding each
    // unordered pair as absent / forward / backward
    let mut exhaustive = 0usize;
    for n in 1..=5usize {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect();
        let mut state = vec![0u8; pairs.len()];
        loop {
            let arcs: Vec<(usize, usize)> = pairs
                .iter()
                .zip(&state)
                .filter_map(|(&(u, v), &s)| match s {
                    1 => Some((u, v)),
                    2 => Some((v, u)),
                    _ => None,
                })
                .collect();
            check_reduction_identity(&Digraph::new(n, arcs, true).unwrap());
            exhaustive += 1;
            let Some(i) = state.iter().rposition(|&s| s < 2) else { break };
            state[i] += 1;
            for s in &mut state[i + 1..] {
                *s = 0;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xAC09);
    for trial in 0..10_000u64 {
        let n = rng.gen_range(6..=12);
        let min_out = rng.gen_range(0..=(n - 1) / 2);
        let d = random_oriented(n, min_out, 0x9000_0000 + trial).unwrap();
        check_reduction_identity(&d);
    }
    println!(
        "ACCEPTANCE 9: PASS - color-degree identity on {exhaustive} exhaustive + 10000 random digraphs"
    );
}

#[test]
fn criterion_10_bermond_thomassen_probe() {
    let mut total = 0usize;
    let mut successes = 0usize;
    let mut absences = 0usize;
    for (i, &n) in [7usize, 8, 9].iter().enumerate() {
        let samples = if i == 2 { 166 } else { 167 };
        let report =
            bermond_thomassen_probe(n, 2, samples, 0xA000 + n as u64, BUDGET, None).unwrap();
        total += samples;
        successes += report.successes();
        absences += report.absences();
    }
    assert_eq!(absences, 0, "a confirmed absence would refute f(2)=3");
    assert_eq!(successes, total, "every instance must yield 2 disjoint cycles");
    println!("ACCEPTANCE 10: PASS - 2 disjoint dicycles found on all {total} instances at min outdegree 3");
}

#[test]
fn criterion_11_threshold_arithmetic() {
    assert_eq!(g_threshold(2, &BTreeMap::from([(2, 3)])).unwrap(), 5);
    for k in 2..=10u64 {
        assert_eq!(bound_chain(3, k).unwrap(), 3 * k - 1);
    }
    println!("ACCEPTANCE 11: PASS - g(2) = 5 and bound_chain(3,k) = 3k-1 for k <= 10");
}

#[test]
fn criterion_12_cli_end_to_end() {
    let bin = env!("CARGO_BIN_EXE_ecdecomp");
    let dir = tempfile::tempdir().unwrap();
    let path = |name: &str| dir.path().join(name);

    // byte-identical regeneration
    for args in [
        vec!["generate", "rainbow-complete", "--n", "5"],
        vec!["generate", "random", "--n", "8", "--colors", "4", "--seed", "7"],
        vec!["generate", "tournament", "--n", "6", "--seed", "3"],
    ] {
        let run = |out: &str| {
            let mut full = args.clone();
            let o = path(out);
            full.extend(["-o", o.to_str().unwrap()]);
            assert!(Command::new(bin).args(&full).status().unwrap().success());
            std::fs::read(o).unwrap()
        };
        assert_eq!(run("a.out"), run("b.out"), "generation must be deterministic");
    }

    // roundtrip through reduce-complete on an already complete instance
    let k5 = path("k5.ecg");
    Command::new(bin)
        .args(["generate", "rainbow-complete", "--n", "5", "-o", k5.to_str().unwrap()])
        .status()
        .unwrap();
    let k5b = path("k5b.ecg");
    Command::new(bin)
        .args(["reduce", "complete", k5.to_str().unwrap(), "-o", k5b.to_str().unwrap()])
        .status()
        .unwrap();
    assert_eq!(std::fs::read(&k5).unwrap(), std::fs::read(&k5b).unwrap());

    // partition + verify on a two-disjoint-C4 fixture
    let fixture = path("two_c4.ecg");
    let mut es = Vec::new();
    for base in [0usize, 4] {
        for i in 0..4usize {
            es.push(Edge::new(base + i, base + (i + 1) % 4, i % 2));
        }
    }
    let g = EdgeColoredGraph::new(8, es).unwrap();
    std::fs::write(&fixture, write_ecg(&g)).unwrap();
    let cert = path("cert.json");
    let status = Command::new(bin)
        .args([
            "partition",
            fixture.to_str().unwrap(),
            "--targets",
            "2,2",
            "-o",
            cert.to_str().unwrap(),
        ])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    let status = Command::new(bin)
        .args(["verify", cert.to_str().unwrap(), fixture.to_str().unwrap()])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));

    // library-level re-verification of the emitted document
    let doc = parse_certificate(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    let parsed = parse_ecg(&std::fs::read_to_string(&fixture).unwrap()).unwrap();
    verify_certificate(&doc, &parsed).unwrap();

    // tampered certificate is rejected with exit 3
    let mut tampered = doc.clone();
    tampered.parts = vec![vec![0, 1], vec![2, 3, 4, 5, 6, 7]];
    let tampered_path = path("tampered.json");
    std::fs::write(&tampered_path, ecdecomp::io::write_certificate(&tampered)).unwrap();
    let out = Command::new(bin)
        .args(["verify", tampered_path.to_str().unwrap(), fixture.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("vertex"));

    // proven absence exits 2
    let k5r = path("k5r.ecg");
    std::fs::write(&k5r, write_ecg(&rainbow_complete(5).unwrap())).unwrap();
    let status = Command::new(bin)
        .args([
            "partition",
            k5r.to_str().unwrap(),
            "--targets",
            "2,2",
            "--method",
            "exact",
        ])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(2));

    println!("ACCEPTANCE 12: PASS - CLI partition/verify end-to-end, tamper rejection, byte-identical roundtrips");
}
