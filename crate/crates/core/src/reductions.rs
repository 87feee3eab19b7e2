//! Digraph ↔ edge-colored-graph reductions, vertex-disjoint directed cycle
//! search, and the seeded experiment probes around the Bermond–Thomassen
//! bound.

use std::collections::VecDeque;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rand::Rng;
use thiserror::Error;

use crate::generators::{
    derive_rng, random_ecg_min_cdeg, random_oriented, GenError,
};
use crate::graph::{
    Digraph, Edge, EdgeColoredGraph, GraphError, PartitionTargets, VertexId,
};
use crate::io::{write_dg, write_ecg};
use crate::partition::{exact_partition_search, partition_2k_pipeline};
use crate::Search;

#[derive(Debug, Error)]
pub enum ReductionError {
    #[error("digraph is not oriented (contains a 2-cycle)")]
    NotOriented,
    #[error("malformed partition: {0}")]
    MalformedPartition(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Pairwise vertex-disjoint directed cycles in a host digraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DicycleSet {
    pub cycles: Vec<Vec<VertexId>>,
}

impl DicycleSet {
    pub fn validate(&self, d: &Digraph) -> Result<(), ReductionError> {
        let mut used = vec![false; d.vertex_count()];
        for cycle in &self.cycles {
            if cycle.len() < 2 {
                return Err(ReductionError::MalformedPartition(
                    "directed cycle needs at least 2 vertices".into(),
                ));
            }
            for (i, &u) in cycle.iter().enumerate() {
                if used[u] {
                    return Err(ReductionError::MalformedPartition(format!(
                        "vertex {u} reused across cycles"
                    )));
                }
                used[u] = true;
                let v = cycle[(i + 1) % cycle.len()];
                if !d.has_arc(u, v) {
                    return Err(ReductionError::MalformedPartition(format!(
                        "missing arc {u} -> {v}"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Replace each arc u→v by an edge {u,v} colored with the head vertex id v.
/// Out-arcs of a vertex then carry pairwise distinct colors.
pub fn digraph_to_ecg(d: &Digraph) -> Result<EdgeColoredGraph, ReductionError> {
    for &(u, v) in d.arcs() {
        if d.has_arc(v, u) {
            return Err(ReductionError::NotOriented);
        }
    }
    let edges = d.arcs().iter().map(|&(u, v)| Edge::new(u, v, v));
    Ok(EdgeColoredGraph::new(d.vertex_count(), edges)?)
}

/// Complete the graph with one fresh color on all missing edges; already
/// complete graphs pass through unchanged.
pub fn ecg_to_complete(g: &EdgeColoredGraph) -> EdgeColoredGraph {
    let n = g.vertex_count();
    let fresh = g.colors().iter().max().map_or(0, |&c| c + 1);
    let mut edges = g.edges().to_vec();
    for u in 0..n {
        for v in (u + 1)..n {
            if !g.has_edge(u, v) {
                edges.push(Edge::new(u, v, fresh));
            }
        }
    }
    EdgeColoredGraph::new(n, edges).expect("completion preserves validity")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartProjection {
    pub part: usize,
    pub min_out_degree: usize,
    /// δ^c of the head-colored image restricted to this part.
    pub min_color_degree: usize,
    pub target: usize,
    pub premise_holds: bool,
    pub bound_holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectionReport {
    pub parts: Vec<PartProjection>,
    /// premise δ^c ≥ dᵢ implies δ⁺ ≥ dᵢ−1, for every part
    pub all_implications_hold: bool,
}

/// Check the degree translation per part: whenever the head-colored graph
/// satisfies δ^c(G[Vᵢ]) ≥ dᵢ, the digraph satisfies δ⁺(D[Vᵢ]) ≥ dᵢ−1.
pub fn project_partition_to_digraph(
    d: &Digraph,
    parts: &[Vec<VertexId>],
    targets: &[usize],
) -> Result<ProjectionReport, ReductionError> {
    let n = d.vertex_count();
    if parts.len() != targets.len() {
        return Err(ReductionError::MalformedPartition(format!(
            "{} parts for {} targets",
            parts.len(),
            targets.len()
        )));
    }
    let mut seen = vec![false; n];
    for part in parts {
        if part.is_empty() {
            return Err(ReductionError::MalformedPartition("empty part".into()));
        }
        for &v in part {
            if v >= n || seen[v] {
                return Err(ReductionError::MalformedPartition(format!(
                    "vertex {v} out of range or repeated"
                )));
            }
            seen[v] = true;
        }
    }
    if seen.iter().any(|&s| !s) {
        return Err(ReductionError::MalformedPartition("partition does not cover V".into()));
    }
    let g = digraph_to_ecg(d)?;
    let mut out = Vec::new();
    let mut all_hold = true;
    for (i, part) in parts.iter().enumerate() {
        let set: std::collections::BTreeSet<VertexId> = part.iter().copied().collect();
        let sub = g.induced_subgraph(&set)?;
        let min_cdeg = sub.graph.min_color_degree()?;
        let min_out = part
            .iter()
            .map(|&u| d.out_neighbors(u).iter().filter(|w| set.contains(w)).count())
            .min()
            .unwrap();
        let premise_holds = min_cdeg >= targets[i];
        let bound_holds = min_out + 1 >= targets[i];
        if premise_holds && !bound_holds {
            all_hold = false;
        }
        out.push(PartProjection {
            part: i,
            min_out_degree: min_out,
            min_color_degree: min_cdeg,
            target: targets[i],
            premise_holds,
            bound_holds,
        });
    }
    Ok(ProjectionReport { parts: out, all_implications_hold: all_hold })
}

/// Shortest directed cycle among the alive vertices, via BFS from each root.
fn shortest_cycle(d: &Digraph, alive: &[bool]) -> Option<Vec<VertexId>> {
    let n = d.vertex_count();
    let mut best: Option<Vec<VertexId>> = None;
    for r in 0..n {
        if !alive[r] {
            continue;
        }
        let mut parent = vec![usize::MAX; n];
        let mut dist = vec![usize::MAX; n];
        dist[r] = 0;
        let mut q = VecDeque::from([r]);
        let mut closer: Option<VertexId> = None;
        'bfs: while let Some(u) = q.pop_front() {
            for &w in d.out_neighbors(u) {
                if !alive[w] {
                    continue;
                }
                if w == r {
                    closer = Some(u);
                    break 'bfs;
                }
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push_back(w);
                }
            }
        }
        if let Some(mut u) = closer {
            let mut cycle = Vec::new();
            while u != r {
                cycle.push(u);
                u = parent[u];
            }
            cycle.push(r);
            cycle.reverse();
            if best.as_ref().is_none_or(|b| cycle.len() < b.len()) {
                best = Some(cycle);
            }
        }
    }
    best
}

/// Enumerate all simple directed cycles, canonicalized to start at their
/// minimum vertex. Returns None if the step budget runs out.
fn enumerate_cycles(d: &Digraph, budget: &mut u64) -> Option<Vec<Vec<VertexId>>> {
    let n = d.vertex_count();
    let mut cycles = Vec::new();
    let mut path: Vec<VertexId> = Vec::new();
    let mut on_path = vec![false; n];

    fn dfs(
        d: &Digraph,
        s: VertexId,
        u: VertexId,
        path: &mut Vec<VertexId>,
        on_path: &mut Vec<bool>,
        cycles: &mut Vec<Vec<VertexId>>,
        budget: &mut u64,
    ) -> bool {
        if *budget == 0 {
            return false;
        }
        *budget -= 1;
        for &w in d.out_neighbors(u) {
            if w == s && path.len() >= 2 {
                cycles.push(path.clone());
            } else if w > s && !on_path[w] {
                path.push(w);
                on_path[w] = true;
                let ok = dfs(d, s, w, path, on_path, cycles, budget);
                on_path[w] = false;
                path.pop();
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    for s in 0..n {
        path.push(s);
        on_path[s] = true;
        let ok = dfs(d, s, s, &mut path, &mut on_path, &mut cycles, budget);
        on_path[s] = false;
        path.pop();
        if !ok {
            return None;
        }
    }
    Some(cycles)
}

fn pick_disjoint(
    cycles: &[Vec<VertexId>],
    start: usize,
    used: &mut Vec<bool>,
    chosen: &mut Vec<Vec<VertexId>>,
    k: usize,
    budget: &mut u64,
) -> Search<Vec<Vec<VertexId>>> {
    if chosen.len() == k {
        return Search::Found(chosen.clone());
    }
    if *budget == 0 {
        return Search::Exhausted;
    }
    *budget -= 1;
    for (i, cycle) in cycles.iter().enumerate().skip(start) {
        if cycle.iter().any(|&v| used[v]) {
            continue;
        }
        for &v in cycle {
            used[v] = true;
        }
        chosen.push(cycle.clone());
        let res = pick_disjoint(cycles, i + 1, used, chosen, k, budget);
        chosen.pop();
        for &v in cycle {
            used[v] = false;
        }
        match res {
            Search::Absent => {}
            other => return other,
        }
    }
    Search::Absent
}

/// Greedy shortest-cycle removal first; on failure, exhaustive backtracking
/// over all simple cycles. Absent is only ever claimed after a complete
/// enumeration within budget.
pub fn find_k_disjoint_dicycles(d: &Digraph, k: usize, budget: u64) -> Search<DicycleSet> {
    if k < 1 {
        return Search::Absent;
    }
    let n = d.vertex_count();
    let mut alive = vec![true; n];
    let mut greedy = Vec::new();
    for _ in 0..k {
        match shortest_cycle(d, &alive) {
            Some(cycle) => {
                for &v in &cycle {
                    alive[v] = false;
                }
                greedy.push(cycle);
            }
            None => break,
        }
    }
    if greedy.len() == k {
        return Search::Found(DicycleSet { cycles: greedy });
    }
    let mut enum_budget = budget;
    let Some(mut cycles) = enumerate_cycles(d, &mut enum_budget) else {
        return Search::Exhausted;
    };
    cycles.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let mut used = vec![false; n];
    let mut chosen = Vec::new();
    let mut pick_budget = budget;
    pick_disjoint(&cycles, 0, &mut used, &mut chosen, k, &mut pick_budget)
        .map(|cycles| DicycleSet { cycles })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrialOutcome {
    Found,
    Absent,
    Exhausted,
}

impl TrialOutcome {
    pub fn as_str(&self) -> &'static str {
        match self {
            TrialOutcome::Found => "found",
            TrialOutcome::Absent => "absent",
            TrialOutcome::Exhausted => "exhausted",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialRecord {
    pub trial_index: usize,
    pub seed: u64,
    pub n: usize,
    pub params: Vec<(String, String)>,
    pub outcome: TrialOutcome,
    pub elapsed_ms: u128,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExperimentReport {
    pub rows: Vec<TrialRecord>,
    /// instances where the expected witness was not found, dumped to disk
    pub counterexample_files: Vec<PathBuf>,
}

impl ExperimentReport {
    pub fn successes(&self) -> usize {
        self.rows.iter().filter(|r| r.outcome == TrialOutcome::Found).count()
    }

    pub fn absences(&self) -> usize {
        self.rows.iter().filter(|r| r.outcome == TrialOutcome::Absent).count()
    }

    pub fn to_csv(&self) -> String {
        let mut header = vec!["trial_index".into(), "seed".into(), "n".into()];
        if let Some(first) = self.rows.first() {
            header.extend(first.params.iter().map(|(k, _)| k.clone()));
        }
        header.push("outcome".into());
        header.push("elapsed_ms".into());
        let mut out = header.join(",");
        out.push('\n');
        for row in &self.rows {
            let mut cols = vec![
                row.trial_index.to_string(),
                row.seed.to_string(),
                row.n.to_string(),
            ];
            cols.extend(row.params.iter().map(|(_, v)| v.clone()));
            cols.push(row.outcome.as_str().into());
            cols.push(row.elapsed_ms.to_string());
            out.push_str(&cols.join(","));
            out.push('\n');
        }
        out
    }
}

fn trial_seed(seed: u64, trial: usize) -> u64 {
    derive_rng(seed, 0xBEEF_0000 ^ trial as u64).gen()
}

fn dump(dir: &Path, name: &str, body: &str) -> Result<PathBuf, ReductionError> {
    std::fs::create_dir_all(dir)?;
    let path = dir.join(name);
    std::fs::write(&path, body)?;
    Ok(path)
}

/// Sample oriented graphs with δ⁺ ≥ 2k−1 and hunt for k disjoint directed
/// cycles. Trials that come up empty are serialized with their seed and
/// trial index, never just counted.
pub fn bermond_thomassen_probe(
    n: usize,
    k: usize,
    samples: usize,
    seed: u64,
    budget: u64,
    dump_dir: Option<&Path>,
) -> Result<ExperimentReport, ReductionError> {
    if n < 1 || samples < 1 || k < 1 {
        return Err(ReductionError::Precondition("need n, k, samples >= 1".into()));
    }
    let min_outdeg = 2 * k - 1;
    let mut rows = Vec::new();
    let mut files = Vec::new();
    for trial in 0..samples {
        let ts = trial_seed(seed, trial);
        let d = random_oriented(n, min_outdeg, ts)?;
        let t0 = Instant::now();
        let outcome = match find_k_disjoint_dicycles(&d, k, budget) {
            Search::Found(set) => {
                set.validate(&d).expect("search returned an invalid cycle set");
                TrialOutcome::Found
            }
            Search::Absent => TrialOutcome::Absent,
            Search::Exhausted => TrialOutcome::Exhausted,
        };
        if outcome != TrialOutcome::Found {
            if let Some(dir) = dump_dir {
                let body = format!("# seed {ts} trial {trial}\n{}", write_dg(&d));
                files.push(dump(dir, &format!("bt_t{trial}_s{ts}.dg"), &body)?);
            }
        }
        rows.push(TrialRecord {
            trial_index: trial,
            seed: ts,
            n,
            params: vec![
                ("k".into(), k.to_string()),
                ("min_outdeg".into(), min_outdeg.to_string()),
            ],
            outcome,
            elapsed_ms: t0.elapsed().as_millis(),
        });
    }
    Ok(ExperimentReport { rows, counterexample_files: files })
}

/// Conditional bound chain: given g(a,2) ≤ a+t, the k-part uniform threshold
/// satisfies g(2,…,2)_k ≤ t·k − t + 2.
pub fn bound_chain(t: u64, k: u64) -> Result<u64, ReductionError> {
    if t < 1 || k < 2 {
        return Err(ReductionError::Precondition("need t >= 1 and k >= 2".into()));
    }
    Ok(t * k - t + 2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProbeMode {
    /// (a,b)-feasible partitions via the exact oracle.
    AbFeasible { a: usize, b: usize },
    /// Uniform (2,…,2) partitions via the structure pipeline.
    TwoK { k: usize },
}

/// Sample random instances at a given δ^c and record, per trial, whether a
/// feasible partition was found. Absent instances are dumped as
/// counterexample candidates.
#[allow(clippy::too_many_arguments)]
pub fn conjecture_probe(
    mode: ProbeMode,
    n: usize,
    delta_c: usize,
    edge_prob: f64,
    samples: usize,
    seed: u64,
    budget: u64,
    dump_dir: Option<&Path>,
) -> Result<ExperimentReport, ReductionError> {
    if n < 1 || samples < 1 {
        return Err(ReductionError::Precondition("need n, samples >= 1".into()));
    }
    let mut rows = Vec::new();
    let mut files = Vec::new();
    for trial in 0..samples {
        let ts = trial_seed(seed, trial);
        let g = random_ecg_min_cdeg(n, delta_c, edge_prob, n.max(2), ts, 10_000)?;
        let t0 = Instant::now();
        let (search, params) = match mode {
            ProbeMode::AbFeasible { a, b } => {
                let targets = PartitionTargets::new(vec![a, b])
                    .map_err(|e| ReductionError::Precondition(e.to_string()))?;
                (
                    exact_partition_search(&g, &targets, budget),
                    vec![
                        ("mode".into(), "ab_feasible".into()),
                        ("a".into(), a.to_string()),
                        ("b".into(), b.to_string()),
                        ("delta_c".into(), delta_c.to_string()),
                    ],
                )
            }
            ProbeMode::TwoK { k } => (
                partition_2k_pipeline(&g, k, budget, ts),
                vec![
                    ("mode".into(), "two_k".into()),
                    ("k".into(), k.to_string()),
                    ("delta_c".into(), delta_c.to_string()),
                ],
            ),
        };
        let outcome = match search {
            Search::Found(_) => TrialOutcome::Found,
            Search::Absent => TrialOutcome::Absent,
            Search::Exhausted => TrialOutcome::Exhausted,
        };
        if outcome == TrialOutcome::Absent {
            if let Some(dir) = dump_dir {
                let body = format!("# seed {ts} trial {trial}\n{}", write_ecg(&g));
                files.push(dump(dir, &format!("cx_t{trial}_s{ts}.ecg"), &body)?);
            }
        }
        rows.push(TrialRecord {
            trial_index: trial,
            seed: ts,
            n,
            params,
            outcome,
            elapsed_ms: t0.elapsed().as_millis(),
        });
    }
    Ok(ExperimentReport { rows, counterexample_files: files })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{pc_cycle_graph, random_tournament};

    fn directed_triangle() -> Digraph {
        Digraph::new(3, [(0, 1), (1, 2), (2, 0)], true).unwrap()
    }

    #[test]
    fn digraph_to_ecg_examples() {
        let g = digraph_to_ecg(&directed_triangle()).unwrap();
        assert_eq!(g.edge_color(0, 1), Some(1));
        assert_eq!(g.edge_color(1, 2), Some(2));
        assert_eq!(g.edge_color(0, 2), Some(0));
        for v in 0..3 {
            assert_eq!(g.color_degree(v).unwrap(), 2);
        }

        let single = Digraph::new(2, [(0, 1)], true).unwrap();
        let g = digraph_to_ecg(&single).unwrap();
        assert_eq!(g.edge_color(0, 1), Some(1));
        assert_eq!(g.color_degree(0).unwrap(), 1);
        assert_eq!(g.color_degree(1).unwrap(), 1);

        let two_cycle = Digraph::new(2, [(0, 1), (1, 0)], false).unwrap();
        assert!(matches!(digraph_to_ecg(&two_cycle), Err(ReductionError::NotOriented)));
    }

    #[test]
    fn color_degree_identity_small() {
        let d = random_tournament(6, 42);
        let g = digraph_to_ecg(&d).unwrap();
        for u in 0..6 {
            let expected = d.out_degree(u) + usize::from(d.in_degree(u) > 0);
            assert_eq!(g.color_degree(u).unwrap(), expected);
        }
    }

    #[test]
    fn ecg_to_complete_examples() {
        let c4 = pc_cycle_graph(4).unwrap();
        let k4 = ecg_to_complete(&c4);
        assert_eq!(k4.edge_count(), 6);
        assert_eq!(k4.edge_color(0, 2), Some(2));
        assert_eq!(k4.edge_color(1, 3), Some(2));
        for v in 0..4 {
            assert_eq!(c4.color_degree(v).unwrap(), 2);
            assert_eq!(k4.color_degree(v).unwrap(), 3);
        }
        assert_eq!(ecg_to_complete(&k4), k4);

        let empty = EdgeColoredGraph::edgeless(3);
        let k3 = ecg_to_complete(&empty);
        assert_eq!(k3.colors().len(), 1);
        assert_eq!(k3.edge_count(), 3);
    }

    #[test]
    fn projection_examples() {
        let d = directed_triangle();
        let report = project_partition_to_digraph(&d, &[vec![0, 1, 2]], &[2]).unwrap();
        assert!(report.all_implications_hold);
        assert_eq!(report.parts[0].min_out_degree, 1);
        assert!(report.parts[0].premise_holds);

        let two = Digraph::new(
            6,
            [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)],
            true,
        )
        .unwrap();
        let report =
            project_partition_to_digraph(&two, &[vec![0, 1, 2], vec![3, 4, 5]], &[2, 2]).unwrap();
        assert!(report.all_implications_hold);
        assert!(report.parts.iter().all(|p| p.min_out_degree == 1));

        // independent set in D, vacuous d=1 bound
        let report = project_partition_to_digraph(&two, &[vec![0, 3], vec![1, 2, 4, 5]], &[1, 1])
            .unwrap();
        assert_eq!(report.parts[0].min_out_degree, 0);
        assert!(report.parts[0].bound_holds);

        assert!(project_partition_to_digraph(&two, &[vec![0, 1]], &[1]).is_err());
    }

    #[test]
    fn dicycles_examples() {
        let two = Digraph::new(
            6,
            [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)],
            true,
        )
        .unwrap();
        match find_k_disjoint_dicycles(&two, 2, 100_000) {
            Search::Found(set) => {
                set.validate(&two).unwrap();
                assert_eq!(set.cycles.len(), 2);
            }
            other => panic!("expected 2 cycles, got {other:?}"),
        }

        let dag = Digraph::new(4, [(0, 1), (0, 2), (1, 3), (2, 3)], true).unwrap();
        assert!(matches!(find_k_disjoint_dicycles(&dag, 1, 100_000), Search::Absent));

        // rotational tournament on 7 vertices: i -> i+1, i+2, i+3 (mod 7)
        let mut arcs = Vec::new();
        for i in 0..7usize {
            for j in 1..=3usize {
                arcs.push((i, (i + j) % 7));
            }
        }
        let rot = Digraph::new(7, arcs, true).unwrap();
        assert_eq!(rot.min_out_degree().unwrap(), 3);
        match find_k_disjoint_dicycles(&rot, 2, 1_000_000) {
            Search::Found(set) => set.validate(&rot).unwrap(),
            other => panic!("expected 2 cycles in the rotational tournament, got {other:?}"),
        }
    }

    #[test]
    fn dicycles_map_to_pc_cycles() {
        let two = Digraph::new(
            6,
            [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)],
            true,
        )
        .unwrap();
        let set = find_k_disjoint_dicycles(&two, 2, 100_000).found().unwrap();
        let g = digraph_to_ecg(&two).unwrap();
        for cycle in &set.cycles {
            let m = cycle.len();
            for i in 0..m {
                let (a, b, c) = (cycle[i], cycle[(i + 1) % m], cycle[(i + 2) % m]);
                assert_ne!(g.edge_color(a, b), g.edge_color(b, c));
            }
        }
    }

    #[test]
    fn bt_probe_examples() {
        let report = bermond_thomassen_probe(5, 1, 20, 7, 100_000, None).unwrap();
        assert_eq!(report.successes(), 20);

        let report = bermond_thomassen_probe(8, 2, 20, 7, 1_000_000, None).unwrap();
        assert_eq!(report.successes(), 20);
        let csv = report.to_csv();
        assert!(csv.starts_with("trial_index,seed,n,k,min_outdeg,outcome,elapsed_ms\n"));
        assert_eq!(csv.lines().count(), 21);
    }

    #[test]
    fn bound_chain_examples() {
        assert_eq!(bound_chain(3, 2).unwrap(), 5);
        assert_eq!(bound_chain(3, 3).unwrap(), 8);
        for k in 2..=10 {
            assert_eq!(bound_chain(3, k).unwrap(), 3 * k - 1);
        }
        assert!(bound_chain(3, 1).is_err());
        assert!(bound_chain(0, 2).is_err());
    }

    #[test]
    fn conjecture_probe_smoke() {
        let report = conjecture_probe(
            ProbeMode::AbFeasible { a: 2, b: 2 },
            8,
            5,
            0.6,
            5,
            11,
            1_000_000,
            None,
        )
        .unwrap();
        assert_eq!(report.rows.len(), 5);
        assert_eq!(report.absences(), 0, "Absent at delta_c = 5 would be a counterexample");
        assert!(report.to_csv().contains("ab_feasible"));
    }
}
