//! Detection and extraction of properly colored cycles, rainbow triangles,
//! Yeo vertices and minimally 2-colored structures (PC cycle or 2-colored
//! g-bowtie).

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{
    edges_within, two_color_core_of, ColorId, Edge, EdgeColoredGraph, VertexId,
};
use crate::Search;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("two-color core is empty")]
    EmptyCore,
    #[error("classification failure (implementation bug): {0}")]
    ClassificationFailure(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("graph is not complete bipartite: {0}")]
    NotCompleteBipartite(String),
}

/// A properly colored cycle: `colors[i]` is the color of the edge from
/// `vertices[i]` to `vertices[(i+1) % len]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PCCycle {
    pub vertices: Vec<VertexId>,
    pub colors: Vec<ColorId>,
}

impl PCCycle {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex_set(&self) -> BTreeSet<VertexId> {
        self.vertices.iter().copied().collect()
    }

    /// Check this is a properly colored cycle of the host graph.
    pub fn validate(&self, g: &EdgeColoredGraph) -> Result<(), StructureError> {
        let n = self.vertices.len();
        if n < 3 || self.colors.len() != n {
            return Err(StructureError::ClassificationFailure(
                "cycle must have >= 3 vertices and matching color count".into(),
            ));
        }
        if self.vertex_set().len() != n {
            return Err(StructureError::ClassificationFailure(
                "cycle vertices must be distinct".into(),
            ));
        }
        for i in 0..n {
            let u = self.vertices[i];
            let v = self.vertices[(i + 1) % n];
            if g.edge_color(u, v) != Some(self.colors[i]) {
                return Err(StructureError::ClassificationFailure(format!(
                    "edge {{{u}, {v}}} missing or wrongly colored"
                )));
            }
            if self.colors[i] == self.colors[(i + 1) % n] {
                return Err(StructureError::ClassificationFailure(
                    "adjacent edges share a color".into(),
                ));
            }
        }
        Ok(())
    }
}

/// Two vertex-disjoint cycles joined by a path. When `path` is empty the two
/// cycles share exactly one vertex, which is the first entry of both cycle
/// sequences. When `path` is nonempty, `path[0]` is the first vertex of
/// `cycle1` and `path[last]` the first vertex of `cycle2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GBowtie {
    pub cycle1: Vec<VertexId>,
    pub cycle2: Vec<VertexId>,
    pub path: Vec<VertexId>,
}

impl GBowtie {
    pub fn vertex_set(&self) -> BTreeSet<VertexId> {
        self.cycle1
            .iter()
            .chain(self.cycle2.iter())
            .chain(self.path.iter())
            .copied()
            .collect()
    }

    pub fn edges(&self, g: &EdgeColoredGraph) -> Vec<Edge> {
        let mut es = Vec::new();
        for cyc in [&self.cycle1, &self.cycle2] {
            for i in 0..cyc.len() {
                let u = cyc[i];
                let v = cyc[(i + 1) % cyc.len()];
                es.push(Edge::new(u, v, g.edge_color(u, v).unwrap_or(usize::MAX)));
            }
        }
        for w in self.path.windows(2) {
            es.push(Edge::new(w[0], w[1], g.edge_color(w[0], w[1]).unwrap_or(usize::MAX)));
        }
        es.sort_unstable();
        es.dedup();
        es
    }

    pub fn validate(&self, g: &EdgeColoredGraph) -> Result<(), StructureError> {
        let fail = |msg: &str| Err(StructureError::ClassificationFailure(msg.into()));
        for cyc in [&self.cycle1, &self.cycle2] {
            if cyc.len() < 3 {
                return fail("g-bowtie cycle shorter than 3");
            }
            let set: BTreeSet<_> = cyc.iter().copied().collect();
            if set.len() != cyc.len() {
                return fail("repeated vertex inside a cycle");
            }
            for i in 0..cyc.len() {
                if !g.has_edge(cyc[i], cyc[(i + 1) % cyc.len()]) {
                    return fail("missing cycle edge");
                }
            }
        }
        let c1: BTreeSet<_> = self.cycle1.iter().copied().collect();
        let c2: BTreeSet<_> = self.cycle2.iter().copied().collect();
        if self.path.is_empty() {
            let shared: Vec<_> = c1.intersection(&c2).copied().collect();
            if shared.len() != 1 || self.cycle1[0] != self.cycle2[0] || shared[0] != self.cycle1[0]
            {
                return fail("empty path requires exactly one shared vertex, first in both cycles");
            }
        } else {
            if !c1.is_disjoint(&c2) {
                return fail("cycles must be disjoint when joined by a path");
            }
            if self.path[0] != self.cycle1[0] || *self.path.last().unwrap() != self.cycle2[0] {
                return fail("path endpoints must attach to the cycles");
            }
            for w in self.path.windows(2) {
                if !g.has_edge(w[0], w[1]) {
                    return fail("missing path edge");
                }
            }
            let interior: BTreeSet<_> =
                self.path[1..self.path.len() - 1].iter().copied().collect();
            if !interior.is_disjoint(&c1) || !interior.is_disjoint(&c2) {
                return fail("path interior meets a cycle");
            }
            let pset: BTreeSet<_> = self.path.iter().copied().collect();
            if pset.len() != self.path.len() {
                return fail("repeated vertex on the path");
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructureKind {
    PcCycle,
    GBowtie,
}

/// Classification witness: a minimally 2-colored subgraph is either a PC
/// cycle or a 2-colored g-bowtie free of PC cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinimalStructure {
    PcCycle(PCCycle),
    GBowtie(GBowtie),
}

impl MinimalStructure {
    pub fn kind(&self) -> StructureKind {
        match self {
            MinimalStructure::PcCycle(_) => StructureKind::PcCycle,
            MinimalStructure::GBowtie(_) => StructureKind::GBowtie,
        }
    }

    pub fn vertex_set(&self) -> BTreeSet<VertexId> {
        match self {
            MinimalStructure::PcCycle(c) => c.vertex_set(),
            MinimalStructure::GBowtie(b) => b.vertex_set(),
        }
    }

    pub fn edges(&self, g: &EdgeColoredGraph) -> Vec<Edge> {
        match self {
            MinimalStructure::PcCycle(c) => {
                let n = c.vertices.len();
                let mut es: Vec<Edge> = (0..n)
                    .map(|i| Edge::new(c.vertices[i], c.vertices[(i + 1) % n], c.colors[i]))
                    .collect();
                es.sort_unstable();
                es
            }
            MinimalStructure::GBowtie(b) => b.edges(g),
        }
    }
}

/// Lexicographically first triangle with three pairwise distinct edge colors.
pub fn find_rainbow_triangle(g: &EdgeColoredGraph) -> Option<(VertexId, VertexId, VertexId)> {
    let n = g.vertex_count();
    for a in 0..n {
        for b in (a + 1)..n {
            let Some(cab) = g.edge_color(a, b) else { continue };
            for c in (b + 1)..n {
                let (Some(cbc), Some(cac)) = (g.edge_color(b, c), g.edge_color(a, c)) else {
                    continue;
                };
                if cab != cbc && cbc != cac && cab != cac {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

fn components_without(
    n: usize,
    edges: &[Edge],
    active: &[bool],
    z: VertexId,
) -> Vec<Vec<VertexId>> {
    let mut comp = vec![usize::MAX; n];
    let mut comps: Vec<Vec<VertexId>> = Vec::new();
    for s in 0..n {
        if !active[s] || s == z || comp[s] != usize::MAX {
            continue;
        }
        let id = comps.len();
        let mut stack = vec![s];
        comp[s] = id;
        let mut members = vec![s];
        while let Some(v) = stack.pop() {
            for e in edges {
                let (a, b) = (e.u, e.v);
                let w = if a == v { b } else if b == v { a } else { continue };
                if w == z || !active[w] || comp[w] != usize::MAX {
                    continue;
                }
                comp[w] = id;
                members.push(w);
                stack.push(w);
            }
        }
        members.sort_unstable();
        comps.push(members);
    }
    comps
}

fn yeo_vertex_in(n: usize, edges: &[Edge], active: &[bool]) -> Option<VertexId> {
    for z in 0..n {
        if !active[z] {
            continue;
        }
        let comps = components_without(n, edges, active, z);
        let mut ok = true;
        for members in &comps {
            let mut cols = BTreeSet::new();
            for e in edges {
                let other = if e.u == z { e.v } else if e.v == z { e.u } else { continue };
                if active[other] && members.binary_search(&other).is_ok() {
                    cols.insert(e.color);
                }
            }
            if cols.len() > 1 {
                ok = false;
                break;
            }
        }
        if ok {
            return Some(z);
        }
    }
    None
}

/// Lowest-id vertex z such that every component of G−z sees z through edges
/// of at most one color. Exists whenever G has no PC cycle (Yeo's theorem).
pub fn find_yeo_vertex(g: &EdgeColoredGraph) -> Option<VertexId> {
    let active = vec![true; g.vertex_count()];
    yeo_vertex_in(g.vertex_count(), g.edges(), &active)
}

pub(crate) fn has_pc_cycle_edges(n: usize, edges: &[Edge]) -> bool {
    let mut active = vec![false; n];
    for e in edges {
        active[e.u] = true;
        active[e.v] = true;
    }
    loop {
        let any_edge = edges.iter().any(|e| active[e.u] && active[e.v]);
        if !any_edge {
            return false;
        }
        match yeo_vertex_in(n, edges, &active) {
            // No Yeo vertex: Yeo's theorem forces a PC cycle. A PC cycle
            // through a Yeo vertex would enter and leave it inside one
            // component of G−z with two colors, so deletion is safe.
            None => return true,
            Some(z) => active[z] = false,
        }
    }
}

/// Decide PC-cycle existence by iterated Yeo-vertex peeling.
pub fn has_pc_cycle(g: &EdgeColoredGraph) -> bool {
    has_pc_cycle_edges(g.vertex_count(), g.edges())
}

struct PcSearch<'a> {
    g: &'a EdgeColoredGraph,
    budget: u64,
    states: u64,
    path: Vec<VertexId>,
    colors: Vec<ColorId>,
    in_path: Vec<bool>,
}

enum DfsOutcome {
    Found,
    NotHere,
    OutOfBudget,
}

impl<'a> PcSearch<'a> {
    fn dfs(&mut self, current: VertexId, start: VertexId) -> DfsOutcome {
        self.states += 1;
        if self.states > self.budget {
            return DfsOutcome::OutOfBudget;
        }
        let entry_color = self.colors.last().copied();
        for &(nb, c) in self.g.neighbors(current) {
            if Some(c) == entry_color {
                continue;
            }
            if nb == start && self.path.len() >= 3 && c != self.colors[0] {
                self.colors.push(c);
                return DfsOutcome::Found;
            }
            // restrict to cycles whose minimum vertex is the start
            if nb <= start || self.in_path[nb] {
                continue;
            }
            self.path.push(nb);
            self.colors.push(c);
            self.in_path[nb] = true;
            match self.dfs(nb, start) {
                DfsOutcome::NotHere => {
                    self.path.pop();
                    self.colors.pop();
                    self.in_path[nb] = false;
                }
                other => return other,
            }
        }
        DfsOutcome::NotHere
    }
}

/// Witness extraction by (vertex, entry-color) backtracking. Distinguishes
/// a proven absence from running out of budget.
pub fn find_pc_cycle(g: &EdgeColoredGraph, budget: u64) -> Search<PCCycle> {
    let n = g.vertex_count();
    let mut search = PcSearch {
        g,
        budget,
        states: 0,
        path: Vec::new(),
        colors: Vec::new(),
        in_path: vec![false; n],
    };
    for start in 0..n {
        search.path = vec![start];
        search.colors.clear();
        search.in_path = vec![false; n];
        search.in_path[start] = true;
        match search.dfs(start, start) {
            DfsOutcome::Found => {
                return Search::Found(PCCycle {
                    vertices: search.path,
                    colors: search.colors,
                });
            }
            DfsOutcome::OutOfBudget => return Search::Exhausted,
            DfsOutcome::NotHere => {}
        }
    }
    Search::Absent
}

fn graph_from_edges(n: usize, edges: &[Edge]) -> EdgeColoredGraph {
    EdgeColoredGraph::new(n, edges.iter().copied()).expect("edge subset of a valid graph")
}

fn classify(n: usize, edges: &[Edge]) -> Result<MinimalStructure, StructureError> {
    let sub = graph_from_edges(n, edges);
    if has_pc_cycle_edges(n, edges) {
        let cycle = match find_pc_cycle(&sub, u64::MAX) {
            Search::Found(c) => c,
            _ => {
                return Err(StructureError::ClassificationFailure(
                    "peeling found a PC cycle but extraction did not".into(),
                ))
            }
        };
        if cycle.len() != edges.len() {
            return Err(StructureError::ClassificationFailure(
                "minimal PC-cycle structure has surplus edges".into(),
            ));
        }
        cycle.validate(&sub)?;
        return Ok(MinimalStructure::PcCycle(cycle));
    }
    // "2-colored" means min color degree >= 2, not two colors globally:
    // the two cycles may repeat different color pairs
    let mut incident: Vec<BTreeSet<ColorId>> = vec![BTreeSet::new(); n];
    for e in edges {
        incident[e.u].insert(e.color);
        incident[e.v].insert(e.color);
    }
    if let Some(v) = (0..n).find(|&v| incident[v].len() == 1) {
        return Err(StructureError::ClassificationFailure(format!(
            "vertex {v} of a minimal structure has color degree 1"
        )));
    }
    let bowtie = parse_bowtie(n, edges)?;
    bowtie.validate(&sub)?;
    Ok(MinimalStructure::GBowtie(bowtie))
}

/// Follow the chain of degree-2 vertices starting with the edge
/// (from, via) until a branch vertex (degree != 2) is reached.
/// Returns the walked sequence starting at `from`.
fn walk_chain(adj: &[Vec<VertexId>], from: VertexId, via: VertexId) -> Vec<VertexId> {
    let mut seq = vec![from, via];
    let (mut prev, mut cur) = (from, via);
    while adj[cur].len() == 2 {
        let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
        seq.push(next);
        prev = cur;
        cur = next;
        if cur == from {
            break;
        }
    }
    seq
}

fn parse_bowtie(n: usize, edges: &[Edge]) -> Result<GBowtie, StructureError> {
    let fail = |msg: &str| StructureError::ClassificationFailure(msg.into());
    let mut adj: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    for e in edges {
        adj[e.u].push(e.v);
        adj[e.v].push(e.u);
    }
    for a in &mut adj {
        a.sort_unstable();
    }
    let mut deg3 = Vec::new();
    let mut deg4 = Vec::new();
    for (v, a) in adj.iter().enumerate().take(n) {
        match a.len() {
            0 | 2 => {}
            3 => deg3.push(v),
            4 => deg4.push(v),
            _ => return Err(fail("vertex degree outside {2,3,4} in candidate g-bowtie")),
        }
    }
    match (deg4.len(), deg3.len()) {
        (1, 0) => {
            // two cycles sharing the degree-4 vertex
            let w = deg4[0];
            let first = walk_chain(&adj, w, adj[w][0]);
            if *first.last().unwrap() != w {
                return Err(fail("walk from shared vertex did not close"));
            }
            let mut cycle1 = first;
            cycle1.pop();
            let used: BTreeSet<VertexId> = cycle1.iter().copied().collect();
            let via2 = *adj[w]
                .iter()
                .find(|x| !used.contains(x))
                .ok_or_else(|| fail("no second cycle at shared vertex"))?;
            let second = walk_chain(&adj, w, via2);
            if *second.last().unwrap() != w {
                return Err(fail("second walk did not close"));
            }
            let mut cycle2 = second;
            cycle2.pop();
            Ok(GBowtie { cycle1, cycle2, path: Vec::new() })
        }
        (0, 2) => {
            let (a, b) = (deg3[0], deg3[1]);
            let mut cycle_at_a = None;
            let mut path = None;
            for &via in &adj[a] {
                let w = walk_chain(&adj, a, via);
                let end = *w.last().unwrap();
                if end == a && cycle_at_a.is_none() {
                    let mut cyc = w;
                    cyc.pop();
                    cycle_at_a = Some(cyc);
                } else if end == b && path.is_none() {
                    path = Some(w);
                }
            }
            let cycle1 = cycle_at_a.ok_or_else(|| fail("no cycle at first branch vertex"))?;
            let path = path.ok_or_else(|| fail("no path between branch vertices"))?;
            let on_path: BTreeSet<VertexId> = path.iter().copied().collect();
            let via2 = *adj[b]
                .iter()
                .find(|x| !on_path.contains(x))
                .ok_or_else(|| fail("no cycle at second branch vertex"))?;
            let w2 = walk_chain(&adj, b, via2);
            if *w2.last().unwrap() != b {
                return Err(fail("walk at second branch vertex did not close"));
            }
            let mut cycle2 = w2;
            cycle2.pop();
            Ok(GBowtie { cycle1, cycle2, path })
        }
        _ => Err(fail("branch-vertex pattern does not match a g-bowtie")),
    }
}

fn minimalize_edges(
    n: usize,
    start_edges: Vec<Edge>,
    mut rng: Option<&mut ChaCha8Rng>,
) -> Result<MinimalStructure, StructureError> {
    let core = two_color_core_of(n, &start_edges);
    if core.is_empty() {
        return Err(StructureError::EmptyCore);
    }
    let mut edges = edges_within(&start_edges, &core);
    edges.sort_unstable();
    loop {
        let mut order: Vec<usize> = (0..edges.len()).collect();
        if let Some(r) = rng.as_deref_mut() {
            order.shuffle(r);
        }
        let mut progressed = false;
        for i in order {
            let mut trial = edges.clone();
            trial.remove(i);
            let core2 = two_color_core_of(n, &trial);
            if !core2.is_empty() {
                edges = edges_within(&trial, &core2);
                edges.sort_unstable();
                progressed = true;
                break;
            }
        }
        if !progressed {
            break;
        }
    }
    classify(n, &edges)
}

/// Restrict to the 2-color core and repeatedly delete single edges while a
/// nonempty core survives; classify the remainder per the minimally
/// 2-colored characterization.
pub fn minimalize_two_colored(g: &EdgeColoredGraph) -> Result<MinimalStructure, StructureError> {
    minimalize_edges(g.vertex_count(), g.edges().to_vec(), None)
}

/// Like [`minimalize_two_colored`] but with a seeded random edge-deletion
/// order, for enumerating alternative minimal structures.
pub fn minimalize_two_colored_seeded(
    g: &EdgeColoredGraph,
    seed: u64,
) -> Result<MinimalStructure, StructureError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    minimalize_edges(g.vertex_count(), g.edges().to_vec(), Some(&mut rng))
}

fn is_minimally_two_colored(g: &EdgeColoredGraph) -> bool {
    let n = g.vertex_count();
    let all: BTreeSet<VertexId> = (0..n).collect();
    if g.two_color_core() != all {
        return false;
    }
    for i in 0..g.edge_count() {
        let mut trial = g.edges().to_vec();
        trial.remove(i);
        if !two_color_core_of(n, &trial).is_empty() {
            return false;
        }
    }
    true
}

/// The constructive route of the classification proof: locate a Yeo vertex
/// whose removal splits the graph into two monochromatically joined sides,
/// grow longest PC paths into each side and close them at the forced
/// repeated-color chord.
pub fn extract_structure_via_yeo(g: &EdgeColoredGraph) -> Result<GBowtie, StructureError> {
    if !is_minimally_two_colored(g) {
        return Err(StructureError::PreconditionViolated(
            "input is not minimally 2-colored".into(),
        ));
    }
    if has_pc_cycle(g) {
        return Err(StructureError::PreconditionViolated(
            "input contains a PC cycle".into(),
        ));
    }
    let n = g.vertex_count();
    let active = vec![true; n];
    let mut split = None;
    for z in 0..n {
        let comps = components_without(n, g.edges(), &active, z);
        if comps.len() != 2 {
            continue;
        }
        let mut cols = Vec::new();
        let mut ok = true;
        for members in &comps {
            let side: BTreeSet<VertexId> = members.iter().copied().collect();
            let zset: BTreeSet<VertexId> = [z].into();
            let c = g.color_set_between(&zset, &side).unwrap();
            if c.len() != 1 {
                ok = false;
                break;
            }
            cols.push(*c.iter().next().unwrap());
        }
        if ok && cols[0] != cols[1] {
            split = Some((z, comps));
            break;
        }
    }
    let (z, comps) = split.ok_or_else(|| {
        StructureError::ClassificationFailure(
            "no Yeo vertex with two monochromatically joined components".into(),
        )
    })?;

    let close_side = |side: &[VertexId]| -> Result<(Vec<VertexId>, usize), StructureError> {
        let allowed: BTreeSet<VertexId> =
            side.iter().copied().chain(std::iter::once(z)).collect();
        let path = longest_pc_path_from(g, z, &allowed);
        let p = path.len() - 1;
        if p < 2 {
            return Err(StructureError::ClassificationFailure(
                "longest PC path too short for the bowtie construction".into(),
            ));
        }
        let last_color = g.edge_color(path[p - 1], path[p]).unwrap();
        for i in 0..=(p - 2) {
            if let Some(c) = g.edge_color(path[p], path[i]) {
                if c != last_color {
                    // no PC cycle forces the chord color to repeat forward
                    let forward = g.edge_color(path[i], path[i + 1]).unwrap();
                    if c != forward {
                        return Err(StructureError::ClassificationFailure(
                            "chord color does not repeat along the path".into(),
                        ));
                    }
                    return Ok((path, i));
                }
            }
        }
        Err(StructureError::ClassificationFailure(
            "no closing chord found on longest PC path".into(),
        ))
    };

    let (xpath, i) = close_side(&comps[0])?;
    let (ypath, j) = close_side(&comps[1])?;
    let cycle1: Vec<VertexId> = xpath[i..].to_vec();
    let cycle2: Vec<VertexId> = ypath[j..].to_vec();
    // runs cycle1-attachment .. z .. cycle2-attachment
    let mut path: Vec<VertexId> = xpath[..=i].iter().rev().copied().collect();
    path.extend(ypath[1..=j].iter().copied());
    if path.len() == 1 {
        path.clear();
    }
    let bowtie = GBowtie { cycle1, cycle2, path };
    bowtie.validate(g)?;
    Ok(bowtie)
}

fn longest_pc_path_from(
    g: &EdgeColoredGraph,
    start: VertexId,
    allowed: &BTreeSet<VertexId>,
) -> Vec<VertexId> {
    fn dfs(
        g: &EdgeColoredGraph,
        allowed: &BTreeSet<VertexId>,
        path: &mut Vec<VertexId>,
        last_color: Option<ColorId>,
        best: &mut Vec<VertexId>,
    ) {
        if path.len() > best.len() {
            *best = path.clone();
        }
        let cur = *path.last().unwrap();
        for &(nb, c) in g.neighbors(cur) {
            if Some(c) == last_color || !allowed.contains(&nb) || path.contains(&nb) {
                continue;
            }
            path.push(nb);
            dfs(g, allowed, path, Some(c), best);
            path.pop();
        }
    }
    let mut path = vec![start];
    let mut best = path.clone();
    dfs(g, allowed, &mut path, None, &mut best);
    best
}

/// Exhaustive PC C₄ search in a complete bipartite graph.
pub fn find_pc_c4_bipartite(
    g: &EdgeColoredGraph,
    x_side: &BTreeSet<VertexId>,
    y_side: &BTreeSet<VertexId>,
) -> Result<Option<PCCycle>, StructureError> {
    validate_complete_bipartite(g, x_side, y_side)?;
    let xs: Vec<VertexId> = x_side.iter().copied().collect();
    let ys: Vec<VertexId> = y_side.iter().copied().collect();
    for a in 0..xs.len() {
        for b in (a + 1)..xs.len() {
            for p in 0..ys.len() {
                for q in (p + 1)..ys.len() {
                    let (x1, x2, y1, y2) = (xs[a], xs[b], ys[p], ys[q]);
                    let c1 = g.edge_color(x1, y1).unwrap();
                    let c2 = g.edge_color(y1, x2).unwrap();
                    let c3 = g.edge_color(x2, y2).unwrap();
                    let c4 = g.edge_color(y2, x1).unwrap();
                    if c1 != c2 && c2 != c3 && c3 != c4 && c4 != c1 {
                        return Ok(Some(PCCycle {
                            vertices: vec![x1, y1, x2, y2],
                            colors: vec![c1, c2, c3, c4],
                        }));
                    }
                }
            }
        }
    }
    Ok(None)
}

pub fn validate_complete_bipartite(
    g: &EdgeColoredGraph,
    x_side: &BTreeSet<VertexId>,
    y_side: &BTreeSet<VertexId>,
) -> Result<(), StructureError> {
    let n = g.vertex_count();
    if !x_side.is_disjoint(y_side) || x_side.len() + y_side.len() != n {
        return Err(StructureError::NotCompleteBipartite(
            "sides must partition the vertex set".into(),
        ));
    }
    if x_side.iter().chain(y_side.iter()).any(|&v| v >= n) {
        return Err(StructureError::NotCompleteBipartite("vertex id out of range".into()));
    }
    for &x in x_side {
        for &y in y_side {
            if !g.has_edge(x, y) {
                return Err(StructureError::NotCompleteBipartite(format!(
                    "missing crossing edge {{{x}, {y}}}"
                )));
            }
        }
    }
    for e in g.edges() {
        let same_side = (x_side.contains(&e.u) && x_side.contains(&e.v))
            || (y_side.contains(&e.u) && y_side.contains(&e.v));
        if same_side {
            return Err(StructureError::NotCompleteBipartite(format!(
                "edge {{{}, {}}} inside one side",
                e.u, e.v
            )));
        }
    }
    Ok(())
}

fn greedy_disjoint(
    g: &EdgeColoredGraph,
    k: usize,
    mut rng: Option<&mut ChaCha8Rng>,
) -> Option<Vec<MinimalStructure>> {
    let n = g.vertex_count();
    let mut available: BTreeSet<VertexId> = (0..n).collect();
    let mut found = Vec::new();
    for _ in 0..k {
        let edges = edges_within(g.edges(), &available);
        let structure = match minimalize_edges(n, edges, rng.as_deref_mut()) {
            Ok(s) => s,
            Err(StructureError::EmptyCore) => return None,
            Err(_) => return None,
        };
        for v in structure.vertex_set() {
            available.remove(&v);
        }
        found.push(structure);
    }
    Some(found)
}

fn exhaustive_disjoint(g: &EdgeColoredGraph, k: usize) -> Option<Vec<MinimalStructure>> {
    // backtracking over assignments vertex -> {unused, part 1..k}
    let n = g.vertex_count();
    fn part_ok(g: &EdgeColoredGraph, part: &BTreeSet<VertexId>) -> bool {
        part.iter().all(|&v| {
            let cols: BTreeSet<ColorId> = g
                .neighbors(v)
                .iter()
                .filter(|(w, _)| part.contains(w))
                .map(|&(_, c)| c)
                .collect();
            cols.len() >= 2
        })
    }
    fn rec(
        g: &EdgeColoredGraph,
        v: usize,
        parts: &mut Vec<BTreeSet<VertexId>>,
    ) -> Option<Vec<BTreeSet<VertexId>>> {
        let n = g.vertex_count();
        if v == n {
            if parts.iter().all(|p| p.len() >= 3 && part_ok(g, p)) {
                return Some(parts.clone());
            }
            return None;
        }
        let remaining = n - v;
        let deficit: usize = parts.iter().map(|p| 3usize.saturating_sub(p.len())).sum();
        if deficit > remaining {
            return None;
        }
        for i in 0..=parts.len() {
            if i < parts.len() {
                parts[i].insert(v);
            }
            if let Some(sol) = rec(g, v + 1, parts) {
                return Some(sol);
            }
            if i < parts.len() {
                parts[i].remove(&v);
            }
        }
        None
    }
    let mut parts = vec![BTreeSet::new(); k];
    let sets = rec(g, 0, &mut parts)?;
    let mut out = Vec::new();
    for set in sets {
        let edges = edges_within(g.edges(), &set);
        out.push(minimalize_edges(n, edges, None).ok()?);
    }
    Some(out)
}

/// Search for k pairwise vertex-disjoint minimally 2-colored structures:
/// a deterministic greedy pass, then seeded restarts with randomized
/// edge-deletion orders, then an exhaustive assignment search at small n.
pub fn find_k_disjoint_structures(
    g: &EdgeColoredGraph,
    k: usize,
    budget: u64,
    seed: u64,
) -> Search<Vec<MinimalStructure>> {
    if k == 0 {
        return Search::Found(Vec::new());
    }
    let core = g.two_color_core();
    if g.vertex_count() < 3 * k || core.len() < 3 * k {
        return Search::Absent;
    }
    if let Some(found) = greedy_disjoint(g, k, None) {
        return Search::Found(found);
    }
    let restarts = budget.min(64);
    for t in 0..restarts {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(t).wrapping_mul(0x9E3779B97F4A7C15));
        if let Some(found) = greedy_disjoint(g, k, Some(&mut rng)) {
            return Search::Found(found);
        }
    }
    let states = (k as u128 + 1).checked_pow(g.vertex_count() as u32);
    if states.is_some_and(|s| s <= 4_000_000) {
        return match exhaustive_disjoint(g, k) {
            Some(found) => Search::Found(found),
            None => Search::Absent,
        };
    }
    Search::Exhausted
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{g_bowtie_graph, pc_cycle_graph, rainbow_complete};
    use crate::graph::EdgeColoredGraph;

    pub(crate) fn bowtie_fixture() -> EdgeColoredGraph {
        EdgeColoredGraph::new(
            5,
            [
                Edge::new(0, 1, 1),
                Edge::new(1, 2, 2),
                Edge::new(2, 0, 1),
                Edge::new(0, 3, 2),
                Edge::new(3, 4, 1),
                Edge::new(4, 0, 2),
            ],
        )
        .unwrap()
    }

    #[test]
    fn rainbow_triangle_examples() {
        let k3 = rainbow_complete(3).unwrap();
        assert_eq!(find_rainbow_triangle(&k3), Some((0, 1, 2)));
        assert_eq!(find_rainbow_triangle(&bowtie_fixture()), None);
    }

    #[test]
    fn yeo_vertex_examples() {
        let star = EdgeColoredGraph::new(
            4,
            [Edge::new(0, 1, 7), Edge::new(0, 2, 7), Edge::new(0, 3, 7)],
        )
        .unwrap();
        assert_eq!(find_yeo_vertex(&star), Some(0));
        let c4 = pc_cycle_graph(4).unwrap();
        assert_eq!(find_yeo_vertex(&c4), None);
        assert_eq!(find_yeo_vertex(&bowtie_fixture()), Some(0));
    }

    #[test]
    fn has_pc_cycle_examples() {
        assert!(has_pc_cycle(&pc_cycle_graph(4).unwrap()));
        let mono = EdgeColoredGraph::new(
            3,
            [Edge::new(0, 1, 0), Edge::new(1, 2, 0), Edge::new(0, 2, 0)],
        )
        .unwrap();
        assert!(!has_pc_cycle(&mono));
        assert!(!has_pc_cycle(&bowtie_fixture()));
    }

    #[test]
    fn find_pc_cycle_examples() {
        let c4 = pc_cycle_graph(4).unwrap();
        match find_pc_cycle(&c4, 1_000_000) {
            Search::Found(c) => {
                assert_eq!(c.len(), 4);
                c.validate(&c4).unwrap();
            }
            other => panic!("expected cycle, got {other:?}"),
        }
        let k4 = rainbow_complete(4).unwrap();
        match find_pc_cycle(&k4, 1_000_000) {
            Search::Found(c) => c.validate(&k4).unwrap(),
            other => panic!("expected cycle, got {other:?}"),
        }
        let mut es = Vec::new();
        for u in 0..4 {
            for v in (u + 1)..4 {
                es.push(Edge::new(u, v, 0));
            }
        }
        let mono_k4 = EdgeColoredGraph::new(4, es).unwrap();
        assert!(matches!(find_pc_cycle(&mono_k4, 1_000_000), Search::Absent));
    }

    #[test]
    fn minimalize_examples() {
        let c4 = pc_cycle_graph(4).unwrap();
        match minimalize_two_colored(&c4).unwrap() {
            MinimalStructure::PcCycle(c) => assert_eq!(c.len(), 4),
            other => panic!("expected PC cycle, got {other:?}"),
        }
        let k4 = rainbow_complete(4).unwrap();
        match minimalize_two_colored(&k4).unwrap() {
            MinimalStructure::PcCycle(c) => assert_eq!(c.len(), 3),
            other => panic!("expected triangle, got {other:?}"),
        }
        let bt = bowtie_fixture();
        match minimalize_two_colored(&bt).unwrap() {
            MinimalStructure::GBowtie(b) => {
                b.validate(&bt).unwrap();
                assert_eq!(b.vertex_set(), (0..5).collect());
            }
            other => panic!("expected g-bowtie, got {other:?}"),
        }
    }

    #[test]
    fn minimalize_empty_core_errors() {
        let p4 = EdgeColoredGraph::new(
            4,
            [Edge::new(0, 1, 1), Edge::new(1, 2, 2), Edge::new(2, 3, 1)],
        )
        .unwrap();
        assert_eq!(minimalize_two_colored(&p4), Err(StructureError::EmptyCore));
    }

    #[test]
    fn extract_via_yeo_examples() {
        let bt = bowtie_fixture();
        let b = extract_structure_via_yeo(&bt).unwrap();
        b.validate(&bt).unwrap();
        assert_eq!(b.vertex_set(), (0..5).collect());

        let long = g_bowtie_graph(3, 3, 2).unwrap();
        let b = extract_structure_via_yeo(&long).unwrap();
        b.validate(&long).unwrap();
        assert_eq!(b.vertex_set(), (0..long.vertex_count()).collect());

        let c4 = pc_cycle_graph(4).unwrap();
        assert!(matches!(
            extract_structure_via_yeo(&c4),
            Err(StructureError::PreconditionViolated(_))
        ));
    }

    #[test]
    fn extract_agrees_with_minimalize_on_minimal_input() {
        let bt = bowtie_fixture();
        let via_yeo = extract_structure_via_yeo(&bt).unwrap();
        match minimalize_two_colored(&bt).unwrap() {
            MinimalStructure::GBowtie(b) => assert_eq!(b.vertex_set(), via_yeo.vertex_set()),
            other => panic!("expected g-bowtie, got {other:?}"),
        }
    }

    #[test]
    fn pc_c4_bipartite_examples() {
        // K2,2 alternating
        let g = EdgeColoredGraph::new(
            4,
            [
                Edge::new(0, 2, 0),
                Edge::new(0, 3, 1),
                Edge::new(1, 2, 1),
                Edge::new(1, 3, 0),
            ],
        )
        .unwrap();
        let x: BTreeSet<_> = [0, 1].into();
        let y: BTreeSet<_> = [2, 3].into();
        let c = find_pc_c4_bipartite(&g, &x, &y).unwrap().unwrap();
        c.validate(&g).unwrap();

        let mono = EdgeColoredGraph::new(
            4,
            [
                Edge::new(0, 2, 0),
                Edge::new(0, 3, 0),
                Edge::new(1, 2, 0),
                Edge::new(1, 3, 0),
            ],
        )
        .unwrap();
        assert!(find_pc_c4_bipartite(&mono, &x, &y).unwrap().is_none());

        let not_complete = EdgeColoredGraph::new(4, [Edge::new(0, 2, 0)]).unwrap();
        assert!(find_pc_c4_bipartite(&not_complete, &x, &y).is_err());
    }

    #[test]
    fn disjoint_structures_examples() {
        // two vertex-disjoint alternating C4s
        let mut es = pc_cycle_graph(4).unwrap().edges().to_vec();
        for e in pc_cycle_graph(4).unwrap().edges() {
            es.push(Edge::new(e.u + 4, e.v + 4, e.color));
        }
        let g = EdgeColoredGraph::new(8, es).unwrap();
        match find_k_disjoint_structures(&g, 2, 1000, 7) {
            Search::Found(v) => {
                assert_eq!(v.len(), 2);
                assert!(v[0].vertex_set().is_disjoint(&v[1].vertex_set()));
            }
            other => panic!("expected two structures, got {other:?}"),
        }

        let k5 = rainbow_complete(5).unwrap();
        assert!(matches!(find_k_disjoint_structures(&k5, 2, 1000, 7), Search::Absent));

        let k6 = rainbow_complete(6).unwrap();
        match find_k_disjoint_structures(&k6, 2, 1000, 7) {
            Search::Found(v) => {
                assert_eq!(v.len(), 2);
                assert!(v[0].vertex_set().is_disjoint(&v[1].vertex_set()));
                for s in &v {
                    assert_eq!(s.kind(), StructureKind::PcCycle);
                    assert_eq!(s.vertex_set().len(), 3);
                }
            }
            other => panic!("expected two triangles, got {other:?}"),
        }
    }
}
