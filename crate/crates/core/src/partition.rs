//! Feasible-partition machinery: certificates, greedy extension from
//! disjoint seeds, an exact search oracle, the 2^k pipeline, the randomized
//! two-part method with its exact probability kernel, and the specialized
//! complete / complete-bipartite solvers.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use thiserror::Error;

use crate::generators::derive_rng;
use crate::graph::{
    ColorId, EdgeColoredGraph, GraphError, PartitionTargets, TargetsError, VertexId,
};
use crate::structures::{
    find_k_disjoint_structures, find_pc_c4_bipartite, find_rainbow_triangle,
    validate_complete_bipartite, StructureError,
};
use crate::Search;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("malformed partition: {0}")]
    Malformed(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("stuck: {0} (invariant violation, indicates a bug)")]
    StuckInvariantViolation(String),
    #[error("no feasible random partition within {tries} trials")]
    TriesExhausted { tries: usize },
    #[error("graph is not complete")]
    NotComplete,
    #[error("rainbow triangle present; Gallai partition undefined")]
    RainbowTrianglePresent,
    #[error("vector is not good: {0}")]
    NotGoodVector(String),
    #[error("f oracle missing a value for k = {0}")]
    MissingOracleValue(usize),
    #[error("internal invariant violation: {0}")]
    InvariantViolation(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Targets(#[from] TargetsError),
    #[error(transparent)]
    Structure(#[from] StructureError),
}

/// A vertex partition with per-part color-degree targets and per-vertex
/// witness color sets; re-checkable against the graph alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionCertificate {
    pub parts: Vec<Vec<VertexId>>,
    pub targets: PartitionTargets,
    /// witnesses[v] = the distinct colors v sees inside its own part.
    pub witnesses: Vec<BTreeSet<ColorId>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Deficiency {
    pub vertex: VertexId,
    pub part: usize,
    pub have: usize,
    pub need: usize,
}

/// Every deficient vertex with its shortfall.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FailureReport {
    pub deficient: Vec<Deficiency>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckOutcome {
    Valid(PartitionCertificate),
    Deficient(FailureReport),
}

impl CheckOutcome {
    pub fn valid(self) -> Option<PartitionCertificate> {
        match self {
            CheckOutcome::Valid(c) => Some(c),
            CheckOutcome::Deficient(_) => None,
        }
    }
}

fn colors_into(g: &EdgeColoredGraph, v: VertexId, set: &BTreeSet<VertexId>) -> BTreeSet<ColorId> {
    g.neighbors(v)
        .iter()
        .filter(|(w, _)| set.contains(w))
        .map(|&(_, c)| c)
        .collect()
}

/// Re-derive per-vertex witness color sets and compare against the targets.
pub fn check_partition(
    g: &EdgeColoredGraph,
    parts: &[Vec<VertexId>],
    targets: &PartitionTargets,
) -> Result<CheckOutcome, PartitionError> {
    let n = g.vertex_count();
    if parts.len() != targets.len() {
        return Err(PartitionError::Malformed(format!(
            "{} parts given for {} targets",
            parts.len(),
            targets.len()
        )));
    }
    let mut seen = vec![false; n];
    for part in parts {
        if part.is_empty() {
            return Err(PartitionError::Malformed("empty part".into()));
        }
        for &v in part {
            if v >= n {
                return Err(PartitionError::Malformed(format!("vertex {v} out of range")));
            }
            if seen[v] {
                return Err(PartitionError::Malformed(format!("vertex {v} in two parts")));
            }
            seen[v] = true;
        }
    }
    if let Some(v) = seen.iter().position(|&s| !s) {
        return Err(PartitionError::Malformed(format!("vertex {v} not covered")));
    }
    let mut witnesses = vec![BTreeSet::new(); n];
    let mut deficient = Vec::new();
    for (i, part) in parts.iter().enumerate() {
        let set: BTreeSet<VertexId> = part.iter().copied().collect();
        for &v in part {
            let w = colors_into(g, v, &set);
            if w.len() < targets.as_slice()[i] {
                deficient.push(Deficiency {
                    vertex: v,
                    part: i,
                    have: w.len(),
                    need: targets.as_slice()[i],
                });
            }
            witnesses[v] = w;
        }
    }
    if deficient.is_empty() {
        let mut sorted_parts: Vec<Vec<VertexId>> =
            parts.iter().map(|p| { let mut p = p.clone(); p.sort_unstable(); p }).collect();
        for p in &mut sorted_parts {
            p.dedup();
        }
        Ok(CheckOutcome::Valid(PartitionCertificate {
            parts: sorted_parts,
            targets: targets.clone(),
            witnesses,
        }))
    } else {
        deficient.sort_by_key(|d| d.vertex);
        Ok(CheckOutcome::Deficient(FailureReport { deficient }))
    }
}

/// Grow k disjoint seed sets into a full feasible partition. Single vertices
/// move greedily into the first part that already meets their threshold;
/// when no single move exists, the whole remainder is absorbed into the
/// last part (the maximal-pair argument guarantees this succeeds).
pub fn extend_feasible_tuple(
    g: &EdgeColoredGraph,
    seeds: &[BTreeSet<VertexId>],
    targets: &PartitionTargets,
) -> Result<PartitionCertificate, PartitionError> {
    let n = g.vertex_count();
    let k = targets.len();
    if seeds.len() != k {
        return Err(PartitionError::Malformed(format!(
            "{} seeds for {} targets",
            seeds.len(),
            k
        )));
    }
    let floor = targets.extension_floor();
    if g.min_color_degree()? < floor {
        return Err(PartitionError::PreconditionViolated(format!(
            "min color degree below Σ(aᵢ−1)+1 = {floor}"
        )));
    }
    let mut used: BTreeSet<VertexId> = BTreeSet::new();
    for (i, seed) in seeds.iter().enumerate() {
        if seed.is_empty() {
            return Err(PartitionError::PreconditionViolated(format!("seed {i} empty")));
        }
        if !used.is_disjoint(seed) {
            return Err(PartitionError::Malformed("seeds overlap".into()));
        }
        used.extend(seed.iter().copied());
        let a_i = targets.as_slice()[i];
        for &v in seed {
            if colors_into(g, v, seed).len() < a_i {
                return Err(PartitionError::PreconditionViolated(format!(
                    "seed {i} has color degree below {a_i} at vertex {v}"
                )));
            }
        }
    }
    let mut parts: Vec<BTreeSet<VertexId>> = seeds.to_vec();
    let mut leftover: BTreeSet<VertexId> = (0..n).filter(|v| !used.contains(v)).collect();
    while !leftover.is_empty() {
        let mut moved = None;
        'scan: for &x in &leftover {
            for (i, part) in parts.iter().enumerate().take(k) {
                if colors_into(g, x, part).len() >= targets.as_slice()[i] {
                    moved = Some((x, i));
                    break 'scan;
                }
            }
        }
        if let Some((x, i)) = moved {
            leftover.remove(&x);
            parts[i].insert(x);
            continue;
        }
        // no single move: absorb the remainder into the last part
        let last = k - 1;
        let a_last = targets.as_slice()[last];
        let union: BTreeSet<VertexId> = parts[last].union(&leftover).copied().collect();
        for &x in &leftover {
            let mut w = colors_into(g, x, &union);
            w.remove(&usize::MAX);
            if w.len() < a_last {
                return Err(PartitionError::StuckInvariantViolation(format!(
                    "vertex {x} cannot be placed anywhere"
                )));
            }
        }
        parts[last] = union;
        leftover.clear();
    }
    let parts: Vec<Vec<VertexId>> = parts.into_iter().map(|p| p.into_iter().collect()).collect();
    match check_partition(g, &parts, targets)? {
        CheckOutcome::Valid(cert) => Ok(cert),
        CheckOutcome::Deficient(r) => Err(PartitionError::StuckInvariantViolation(format!(
            "extension produced a deficient partition: {r:?}"
        ))),
    }
}

struct ExactSearch<'a> {
    g: &'a EdgeColoredGraph,
    targets: &'a PartitionTargets,
    assignment: Vec<Option<usize>>,
    parts: Vec<BTreeSet<VertexId>>,
    nodes: u64,
    budget: u64,
}

enum ExactOutcome {
    Found(PartitionCertificate),
    NoneHere,
    OutOfBudget,
}

impl<'a> ExactSearch<'a> {
    fn potential(&self, u: VertexId, next: usize) -> usize {
        let part = self.assignment[u].unwrap();
        let mut cols = BTreeSet::new();
        for &(w, c) in self.g.neighbors(u) {
            let counts = match self.assignment.get(w).copied().flatten() {
                Some(p) => p == part,
                None => w >= next,
            };
            if counts {
                cols.insert(c);
            }
        }
        cols.len()
    }

    fn rec(&mut self, v: usize) -> ExactOutcome {
        self.nodes += 1;
        if self.nodes > self.budget {
            return ExactOutcome::OutOfBudget;
        }
        let n = self.g.vertex_count();
        let k = self.targets.len();
        if v == n {
            if self.parts.iter().any(|p| p.is_empty()) {
                return ExactOutcome::NoneHere;
            }
            let parts: Vec<Vec<VertexId>> =
                self.parts.iter().map(|p| p.iter().copied().collect()).collect();
            if let Ok(CheckOutcome::Valid(cert)) = check_partition(self.g, &parts, self.targets) {
                return ExactOutcome::Found(cert);
            }
            return ExactOutcome::NoneHere;
        }
        // parts still empty must be fillable from the remaining vertices
        let empty = self.parts.iter().filter(|p| p.is_empty()).count();
        if empty > n - v {
            return ExactOutcome::NoneHere;
        }
        for part in 0..k {
            self.assignment[v] = Some(part);
            self.parts[part].insert(v);
            // color-budget feasibility for v and its assigned neighbors
            let mut feasible = self.potential(v, v + 1) >= self.targets.as_slice()[part];
            if feasible {
                for &(w, _) in self.g.neighbors(v) {
                    if w < v && self.potential(w, v + 1) < self.targets.as_slice()[self.assignment[w].unwrap()]
                    {
                        feasible = false;
                        break;
                    }
                }
            }
            if feasible {
                match self.rec(v + 1) {
                    ExactOutcome::NoneHere => {}
                    other => return other,
                }
            }
            self.parts[part].remove(&v);
            self.assignment[v] = None;
        }
        ExactOutcome::NoneHere
    }
}

/// Backtracking assignment of vertices to parts with per-vertex color-budget
/// pruning. Absent is claimed only when the search tree was fully exhausted.
pub fn exact_partition_search(
    g: &EdgeColoredGraph,
    targets: &PartitionTargets,
    budget: u64,
) -> Search<PartitionCertificate> {
    let n = g.vertex_count();
    let k = targets.len();
    if k > n || n == 0 {
        return Search::Absent;
    }
    let mut search = ExactSearch {
        g,
        targets,
        assignment: vec![None; n],
        parts: vec![BTreeSet::new(); k],
        nodes: 0,
        budget,
    };
    match search.rec(0) {
        ExactOutcome::Found(cert) => Search::Found(cert),
        ExactOutcome::NoneHere => Search::Absent,
        ExactOutcome::OutOfBudget => Search::Exhausted,
    }
}

/// The 2^k pipeline: find k disjoint minimally 2-colored structures, extend
/// them greedily when the degree floor allows, and otherwise fall back to
/// the exact oracle.
pub fn partition_2k_pipeline(
    g: &EdgeColoredGraph,
    k: usize,
    budget: u64,
    seed: u64,
) -> Search<PartitionCertificate> {
    let targets = match PartitionTargets::uniform(k, 2) {
        Ok(t) => t,
        Err(_) => return Search::Absent,
    };
    if let Search::Found(structures) = find_k_disjoint_structures(g, k, budget, seed) {
        if g.min_color_degree().map(|d| d > k).unwrap_or(false) {
            let seeds: Vec<BTreeSet<VertexId>> =
                structures.iter().map(|s| s.vertex_set()).collect();
            if let Ok(cert) = extend_feasible_tuple(g, &seeds, &targets) {
                return Search::Found(cert);
            }
        }
    }
    exact_partition_search(g, &targets, budget)
}

/// Repeated random bipartition. Trial t draws from a generator seeded by
/// (seed, t), so results are reproducible and trials are independent.
pub fn random_partition(
    g: &EdgeColoredGraph,
    a: usize,
    b: usize,
    seed: u64,
    max_tries: usize,
) -> Result<(PartitionCertificate, usize), PartitionError> {
    if a < b || b < 1 {
        return Err(PartitionError::PreconditionViolated("need a >= b >= 1".into()));
    }
    let n = g.vertex_count();
    if n < 2 {
        return Err(PartitionError::PreconditionViolated(
            "a partition needs two nonempty parts".into(),
        ));
    }
    let targets = PartitionTargets::new(vec![a, b])?;
    for trial in 0..max_tries {
        let mut rng = derive_rng(seed, 0x5EED_0000 + trial as u64);
        let mut part_a = Vec::new();
        let mut part_b = Vec::new();
        for v in 0..n {
            if rng.gen_bool(0.5) {
                part_a.push(v);
            } else {
                part_b.push(v);
            }
        }
        if part_a.is_empty() || part_b.is_empty() {
            continue;
        }
        if let CheckOutcome::Valid(cert) =
            check_partition(g, &[part_a, part_b], &targets)?
        {
            return Ok((cert, trial + 1));
        }
    }
    Err(PartitionError::TriesExhausted { tries: max_tries })
}

/// A good vector (x₀; x₁, …, x_k): k ≥ 1, every xᵢ ≥ 1 and 0 ≤ x₀ ≤ k/2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoodVector {
    x0: usize,
    xs: Vec<usize>,
}

impl GoodVector {
    pub fn new(x0: usize, xs: Vec<usize>) -> Result<Self, PartitionError> {
        if xs.is_empty() {
            return Err(PartitionError::NotGoodVector("k must be >= 1".into()));
        }
        if xs.contains(&0) {
            return Err(PartitionError::NotGoodVector("every xᵢ must be >= 1".into()));
        }
        if 2 * x0 > xs.len() {
            return Err(PartitionError::NotGoodVector(format!(
                "x0 = {x0} exceeds k/2 with k = {}",
                xs.len()
            )));
        }
        Ok(GoodVector { x0, xs })
    }

    pub fn x0(&self) -> usize {
        self.x0
    }

    pub fn xs(&self) -> &[usize] {
        &self.xs
    }
}

fn pow2_rational(exp: usize) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2u32).pow(exp as u32))
}

/// Exact lower tail of the Poisson-binomial "colors present in S" count:
/// color i is present independently with probability 1 − 2^{−xᵢ}; returns
/// P(#present ≤ x₀) in exact rational arithmetic.
pub fn p_s_exact(x: &GoodVector) -> BigRational {
    let k = x.xs.len();
    // dp[j] = probability that exactly j colors are present so far
    let mut dp: Vec<BigRational> = vec![BigRational::zero(); k + 1];
    dp[0] = BigRational::one();
    for (i, &xi) in x.xs.iter().enumerate() {
        let absent = pow2_rational(xi);
        let present = BigRational::one() - &absent;
        let mut next = vec![BigRational::zero(); k + 1];
        for j in 0..=i {
            if dp[j].is_zero() {
                continue;
            }
            next[j] += &dp[j] * &absent;
            next[j + 1] += &dp[j] * &present;
        }
        dp = next;
    }
    dp[..=x.x0].iter().fold(BigRational::zero(), |acc, p| acc + p)
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k.min(n - k) {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Σ_{j=0}^{x₀} C(k, j) · 2^{−k}, the closed-form tail bound.
pub fn p_s_bound(x0: usize, k: usize) -> Result<BigRational, PartitionError> {
    if 2 * x0 > k {
        return Err(PartitionError::NotGoodVector(format!("x0 = {x0} exceeds k/2")));
    }
    let sum: BigInt = (0..=x0).map(|j| binomial(k, j)).sum();
    Ok(BigRational::new(sum, BigInt::from(2u32).pow(k as u32)))
}

/// The recursive color-degree threshold: g(1) = 2 and
/// g(k) = max(f(k) + 1, g(k−1) + 3).
pub fn g_threshold(k: usize, f_oracle: &BTreeMap<usize, u64>) -> Result<u64, PartitionError> {
    if k < 1 {
        return Err(PartitionError::PreconditionViolated("k must be >= 1".into()));
    }
    let mut g = 2u64;
    for j in 2..=k {
        let f = *f_oracle
            .get(&j)
            .ok_or(PartitionError::MissingOracleValue(j))?;
        g = (f + 1).max(g + 3);
    }
    Ok(g)
}

/// Partition of a rainbow-triangle-free complete colored graph with at most
/// two crossing colors and one color per part pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GallaiPartition {
    pub parts: Vec<Vec<VertexId>>,
    pub crossing_colors: BTreeSet<ColorId>,
}

impl GallaiPartition {
    pub fn validate(&self, g: &EdgeColoredGraph) -> Result<(), PartitionError> {
        if self.parts.len() < 2 {
            return Err(PartitionError::InvariantViolation("fewer than 2 parts".into()));
        }
        let mut crossing = BTreeSet::new();
        for i in 0..self.parts.len() {
            for j in (i + 1)..self.parts.len() {
                let a: BTreeSet<VertexId> = self.parts[i].iter().copied().collect();
                let b: BTreeSet<VertexId> = self.parts[j].iter().copied().collect();
                let cols = g.color_set_between(&a, &b)?;
                if cols.len() != 1 {
                    return Err(PartitionError::InvariantViolation(format!(
                        "parts {i} and {j} joined by {} colors",
                        cols.len()
                    )));
                }
                crossing.extend(cols);
            }
        }
        if crossing.len() > 2 {
            return Err(PartitionError::InvariantViolation(
                "more than two crossing colors".into(),
            ));
        }
        if crossing != self.crossing_colors {
            return Err(PartitionError::InvariantViolation(
                "recorded crossing colors disagree".into(),
            ));
        }
        Ok(())
    }
}

fn ensure_complete(g: &EdgeColoredGraph) -> Result<(), PartitionError> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(PartitionError::NotComplete);
    }
    if g.edge_count() != n * (n - 1) / 2 {
        return Err(PartitionError::NotComplete);
    }
    Ok(())
}

/// Find a Gallai partition: try each candidate crossing color set, contract
/// the components spanned by the other colors, and merge part pairs seeing
/// both candidate colors until every pair is monochromatic. Validity is
/// always re-checked structurally.
pub fn gallai_partition(g: &EdgeColoredGraph) -> Result<GallaiPartition, PartitionError> {
    ensure_complete(g)?;
    if find_rainbow_triangle(g).is_some() {
        return Err(PartitionError::RainbowTrianglePresent);
    }
    let n = g.vertex_count();
    let colors: Vec<ColorId> = g.colors().into_iter().collect();
    let mut candidates: Vec<BTreeSet<ColorId>> = Vec::new();
    for (i, &c1) in colors.iter().enumerate() {
        candidates.push([c1].into());
        for &c2 in &colors[i + 1..] {
            candidates.push([c1, c2].into());
        }
    }
    let mut best: Option<GallaiPartition> = None;
    for cand in candidates {
        if let Some(gp) = try_gallai_candidate(g, n, &cand) {
            if gp.validate(g).is_ok() {
                let better = match &best {
                    None => true,
                    Some(b) => gp.parts.len() < b.parts.len(),
                };
                if better {
                    best = Some(gp);
                }
            }
        }
    }
    best.ok_or_else(|| {
        PartitionError::InvariantViolation(
            "no Gallai partition found for a rainbow-triangle-free complete graph".into(),
        )
    })
}

fn try_gallai_candidate(
    g: &EdgeColoredGraph,
    n: usize,
    crossing: &BTreeSet<ColorId>,
) -> Option<GallaiPartition> {
    // union-find over vertices; internal edges glue
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let r = find(parent, parent[x]);
            parent[x] = r;
        }
        parent[x]
    }
    for e in g.edges() {
        if !crossing.contains(&e.color) {
            let (a, b) = (find(&mut parent, e.u), find(&mut parent, e.v));
            parent[a] = b;
        }
    }
    loop {
        let roots: Vec<usize> = (0..n).map(|v| find(&mut parent, v)).collect();
        let mut uniq: Vec<usize> = roots.clone();
        uniq.sort_unstable();
        uniq.dedup();
        if uniq.len() < 2 {
            return None;
        }
        // find a part pair seeing two colors and merge it
        let mut merged = false;
        'outer: for (ai, &ra) in uniq.iter().enumerate() {
            for &rb in &uniq[ai + 1..] {
                let mut seen: Option<ColorId> = None;
                for e in g.edges() {
                    let (ru, rv) = (roots[e.u], roots[e.v]);
                    if (ru == ra && rv == rb) || (ru == rb && rv == ra) {
                        match seen {
                            None => seen = Some(e.color),
                            Some(c) if c != e.color => {
                                parent[ra] = rb;
                                merged = true;
                                break 'outer;
                            }
                            _ => {}
                        }
                    }
                }
            }
        }
        if !merged {
            let mut parts_map: BTreeMap<usize, Vec<VertexId>> = BTreeMap::new();
            for (v, &root) in roots.iter().enumerate().take(n) {
                parts_map.entry(root).or_default().push(v);
            }
            let parts: Vec<Vec<VertexId>> = parts_map.into_values().collect();
            let mut crossing_seen = BTreeSet::new();
            for e in g.edges() {
                if roots[e.u] != roots[e.v] {
                    crossing_seen.insert(e.color);
                }
            }
            return Some(GallaiPartition { parts, crossing_colors: crossing_seen });
        }
    }
}

/// (a,2)-feasible partition of a complete graph with δ^c ≥ a+3: the rainbow
/// triangle route when one exists, otherwise peel off one Gallai part.
pub fn partition_complete_a2(
    g: &EdgeColoredGraph,
    a: usize,
) -> Result<PartitionCertificate, PartitionError> {
    if a < 2 {
        return Err(PartitionError::PreconditionViolated("need a >= 2".into()));
    }
    ensure_complete(g)?;
    let delta = g.min_color_degree()?;
    if delta < a + 3 {
        return Err(PartitionError::PreconditionViolated(format!(
            "min color degree {delta} below a+3 = {}",
            a + 3
        )));
    }
    let targets = PartitionTargets::new(vec![a, 2])?;
    let n = g.vertex_count();
    let parts: Vec<Vec<VertexId>> = if let Some((x, y, z)) = find_rainbow_triangle(g) {
        let tri = vec![x, y, z];
        let rest: Vec<VertexId> = (0..n).filter(|v| !tri.contains(v)).collect();
        if rest.is_empty() {
            return Err(PartitionError::PreconditionViolated("graph too small".into()));
        }
        vec![rest, tri]
    } else {
        let gp = gallai_partition(g)?;
        let v1 = gp.parts[0].clone();
        let rest: Vec<VertexId> = (0..n).filter(|v| !v1.contains(v)).collect();
        vec![rest, v1]
    };
    match check_partition(g, &parts, &targets)? {
        CheckOutcome::Valid(cert) => Ok(cert),
        CheckOutcome::Deficient(r) => Err(PartitionError::InvariantViolation(format!(
            "complete-graph construction failed its own check: {r:?}"
        ))),
    }
}

/// (a,2)-feasible partition of a complete bipartite graph with δ^c ≥ a+2:
/// a PC C₄ as the 2-part, the rest as the a-part.
pub fn partition_bipartite_a2(
    g: &EdgeColoredGraph,
    x_side: &BTreeSet<VertexId>,
    y_side: &BTreeSet<VertexId>,
    a: usize,
) -> Result<PartitionCertificate, PartitionError> {
    if a < 1 {
        return Err(PartitionError::PreconditionViolated("need a >= 1".into()));
    }
    validate_complete_bipartite(g, x_side, y_side)?;
    let delta = g.min_color_degree()?;
    if delta < a + 2 {
        return Err(PartitionError::PreconditionViolated(format!(
            "min color degree {delta} below a+2 = {}",
            a + 2
        )));
    }
    let c4 = find_pc_c4_bipartite(g, x_side, y_side)?.ok_or_else(|| {
        PartitionError::InvariantViolation(
            "no PC C4 despite min color degree >= 3 in a complete bipartite graph".into(),
        )
    })?;
    let b_part: Vec<VertexId> = {
        let mut v: Vec<VertexId> = c4.vertices.clone();
        v.sort_unstable();
        v
    };
    let a_part: Vec<VertexId> =
        (0..g.vertex_count()).filter(|v| !b_part.contains(v)).collect();
    if a_part.is_empty() {
        return Err(PartitionError::PreconditionViolated("graph too small".into()));
    }
    let targets = PartitionTargets::new(vec![a, 2])?;
    match check_partition(g, &[a_part, b_part], &targets)? {
        CheckOutcome::Valid(cert) => Ok(cert),
        CheckOutcome::Deficient(r) => Err(PartitionError::InvariantViolation(format!(
            "bipartite construction failed its own check: {r:?}"
        ))),
    }
}
