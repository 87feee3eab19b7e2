//! Deterministic and seeded instance generators for fixtures, random
//! testing and experiments. Randomness comes from ChaCha8 seeded per call,
//! so identical arguments reproduce identical graphs.

use std::collections::BTreeSet;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{ColorId, Digraph, Edge, EdgeColoredGraph, VertexId};
use crate::structures::find_rainbow_triangle;

/// Name of the pinned RNG, recorded in experiment outputs.
pub const RNG_NAME: &str = "chacha8";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("invalid size: {0}")]
    InvalidSize(String),
    #[error("unsatisfiable: {0}")]
    Unsatisfiable(String),
    #[error("repair attempts exhausted")]
    AttemptsExhausted,
    #[error("internal palette collides with crossing colors on color {0}")]
    PaletteCollision(ColorId),
    #[error("internal coloring contains a rainbow triangle in part {0}")]
    RainbowTriangleInPart(usize),
}

pub(crate) fn derive_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    // splitmix-style mix so (seed, stream) pairs give independent streams
    let mut z = seed ^ stream.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    ChaCha8Rng::seed_from_u64(z ^ (z >> 31))
}

/// K_n with pairwise distinct edge colors; δ^c = n − 1.
pub fn rainbow_complete(n: usize) -> Result<EdgeColoredGraph, GenError> {
    if n < 1 {
        return Err(GenError::InvalidSize("rainbow_complete requires n >= 1".into()));
    }
    let mut es = Vec::new();
    let mut color = 0;
    for u in 0..n {
        for v in (u + 1)..n {
            es.push(Edge::new(u, v, color));
            color += 1;
        }
    }
    Ok(EdgeColoredGraph::new(n, es).unwrap())
}

/// Properly colored cycle on n vertices: 2 colors when n is even, 3 when odd.
pub fn pc_cycle_graph(n: usize) -> Result<EdgeColoredGraph, GenError> {
    if n < 3 {
        return Err(GenError::InvalidSize("cycle requires n >= 3".into()));
    }
    let mut es = Vec::new();
    for i in 0..n {
        let color = if n % 2 == 1 && i == n - 1 { 2 } else { i % 2 };
        es.push(Edge::new(i, (i + 1) % n, color));
    }
    Ok(EdgeColoredGraph::new(n, es).unwrap())
}

/// The 2-colored PC-cycle-free g-bowtie: odd cycles of p and q edges joined
/// by a path of `ell` edges (0 = shared vertex). Each cycle alternates two
/// colors with one repeat at its attachment vertex, so every vertex has
/// color degree exactly 2 while no cycle is properly colored.
pub fn g_bowtie_graph(p: usize, q: usize, ell: usize) -> Result<EdgeColoredGraph, GenError> {
    if p < 3 || q < 3 {
        return Err(GenError::InvalidSize("g-bowtie cycles require length >= 3".into()));
    }
    if p.is_multiple_of(2) || q.is_multiple_of(2) {
        // even cycles force proper alternation around the whole cycle,
        // which creates a PC cycle
        return Err(GenError::InvalidSize(
            "2-colored PC-cycle-free g-bowtie requires odd cycle lengths".into(),
        ));
    }
    let mut es = Vec::new();
    // cycle 1 on vertices 0..p, attachment 0, repeat color 0
    for i in 0..p {
        let color = if i == p - 1 { 0 } else { i % 2 };
        es.push(Edge::new(i, (i + 1) % p, color));
    }
    let a2: VertexId;
    let mut last_path_color = 0;
    if ell == 0 {
        a2 = 0;
    } else {
        // path 0, p, p+1, ..., p+ell-1; edge t colored (t+1) % 2
        let mut prev = 0;
        for t in 0..ell {
            let next = p + t;
            last_path_color = (t + 1) % 2;
            es.push(Edge::new(prev, next, last_path_color));
            prev = next;
        }
        a2 = p + ell - 1;
    }
    let repeat2 = if ell == 0 { 1 } else { 1 - last_path_color };
    // cycle 2 on a2 plus fresh vertices, repeat color repeat2
    let base = if ell == 0 { p } else { p + ell };
    let cyc2: Vec<VertexId> =
        std::iter::once(a2).chain(base..base + q - 1).collect();
    for i in 0..q {
        let color = if i == q - 1 { repeat2 } else { (repeat2 + i) % 2 };
        es.push(Edge::new(cyc2[i], cyc2[(i + 1) % q], color));
    }
    let n = base + q - 1;
    Ok(EdgeColoredGraph::new(n, es).unwrap())
}

/// G(n, p) with a uniform color per edge from [0, color_count).
pub fn random_ecg(
    n: usize,
    edge_prob: f64,
    color_count: usize,
    seed: u64,
) -> Result<EdgeColoredGraph, GenError> {
    if !(0.0..=1.0).contains(&edge_prob) {
        return Err(GenError::InvalidSize("edge_prob must lie in [0, 1]".into()));
    }
    if color_count < 1 {
        return Err(GenError::InvalidSize("color_count must be >= 1".into()));
    }
    let mut rng = derive_rng(seed, 0);
    let mut es = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(edge_prob) {
                es.push(Edge::new(u, v, rng.gen_range(0..color_count)));
            }
        }
    }
    Ok(EdgeColoredGraph::new(n, es).unwrap())
}

/// Random graph repaired to min color degree >= delta_c by adding (or, at a
/// saturated vertex, recoloring) fresh-colored edges. Fresh colors only
/// increase color degrees, so the repair is monotone.
pub fn random_ecg_min_cdeg(
    n: usize,
    delta_c: usize,
    edge_prob: f64,
    color_count: usize,
    seed: u64,
    max_attempts: usize,
) -> Result<EdgeColoredGraph, GenError> {
    if n >= 1 && delta_c > n - 1 {
        return Err(GenError::Unsatisfiable(format!(
            "delta_c {delta_c} exceeds n-1 = {}",
            n - 1
        )));
    }
    let base = random_ecg(n, edge_prob, color_count, seed)?;
    let mut edges = base.edges().to_vec();
    let fresh_base = edges.iter().map(|e| e.color + 1).max().unwrap_or(0).max(color_count);
    for attempt in 0..max_attempts {
        let fresh = fresh_base + attempt;
        let g = EdgeColoredGraph::new(n, edges.iter().copied()).unwrap();
        let Some(v) = (0..n).find(|&v| g.color_degree(v).unwrap() < delta_c) else {
            return Ok(g);
        };
        let non_neighbor =
            (0..n).find(|&w| w != v && !g.has_edge(v, w));
        match non_neighbor {
            Some(w) => edges.push(Edge::new(v, w, fresh)),
            None => {
                // saturated vertex: recolor an incident edge whose color
                // repeats at v
                let mut count = std::collections::BTreeMap::new();
                for &(_, c) in g.neighbors(v) {
                    *count.entry(c).or_insert(0usize) += 1;
                }
                let dup = count.iter().find(|(_, &k)| k >= 2).map(|(&c, _)| c);
                let Some(dup) = dup else {
                    return Err(GenError::Unsatisfiable(
                        "saturated vertex already has all-distinct colors".into(),
                    ));
                };
                let idx = edges
                    .iter()
                    .position(|e| (e.u == v || e.v == v) && e.color == dup)
                    .unwrap();
                edges[idx].color = fresh;
            }
        }
    }
    Err(GenError::AttemptsExhausted)
}

/// Internal coloring style for [`gallai_blowup`] parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InternalColoring {
    /// Pairwise distinct fresh colors inside every part.
    Rainbow,
    /// One fresh color per part.
    Monochromatic,
    /// Uniform colors from an explicit palette (checked against the
    /// crossing colors).
    RandomPalette(Vec<ColorId>),
}

/// Complete graph whose parts are internally colored and pair-monochromatic
/// between parts using at most two crossing colors.
pub fn gallai_blowup(
    part_sizes: &[usize],
    internal: InternalColoring,
    crossing_colors: &[ColorId],
    seed: u64,
    require_rainbow_free: bool,
) -> Result<EdgeColoredGraph, GenError> {
    if part_sizes.len() < 2 || part_sizes.contains(&0) {
        return Err(GenError::InvalidSize("need >= 2 nonempty parts".into()));
    }
    if crossing_colors.is_empty() || crossing_colors.len() > 2 {
        return Err(GenError::InvalidSize("need 1 or 2 crossing colors".into()));
    }
    if let InternalColoring::RandomPalette(palette) = &internal {
        if palette.is_empty() {
            return Err(GenError::InvalidSize("empty internal palette".into()));
        }
        if let Some(&c) = palette.iter().find(|c| crossing_colors.contains(c)) {
            return Err(GenError::PaletteCollision(c));
        }
    }
    let mut rng = derive_rng(seed, 1);
    let mut fresh = crossing_colors.iter().max().unwrap() + 1;
    if let InternalColoring::RandomPalette(palette) = &internal {
        fresh = fresh.max(palette.iter().max().unwrap() + 1);
    }
    let mut parts: Vec<Vec<VertexId>> = Vec::new();
    let mut next = 0;
    for &s in part_sizes {
        parts.push((next..next + s).collect());
        next += s;
    }
    let n = next;
    let mut es = Vec::new();
    for (pi, part) in parts.iter().enumerate() {
        let mono = fresh;
        if matches!(internal, InternalColoring::Monochromatic) {
            fresh += 1;
        }
        for i in 0..part.len() {
            for j in (i + 1)..part.len() {
                let color = match &internal {
                    InternalColoring::Rainbow => {
                        fresh += 1;
                        fresh - 1
                    }
                    InternalColoring::Monochromatic => mono,
                    InternalColoring::RandomPalette(p) => p[rng.gen_range(0..p.len())],
                };
                es.push(Edge::new(part[i], part[j], color));
            }
        }
        if require_rainbow_free && part.len() >= 3 {
            let sub: BTreeSet<VertexId> = part.iter().copied().collect();
            let g = EdgeColoredGraph::new(n, es.iter().copied()).unwrap();
            let induced = g.induced_subgraph(&sub).unwrap();
            if find_rainbow_triangle(&induced.graph).is_some() {
                return Err(GenError::RainbowTriangleInPart(pi));
            }
        }
    }
    for i in 0..parts.len() {
        for j in (i + 1)..parts.len() {
            let c = crossing_colors[rng.gen_range(0..crossing_colors.len())];
            for &u in &parts[i] {
                for &v in &parts[j] {
                    es.push(Edge::new(u, v, c));
                }
            }
        }
    }
    Ok(EdgeColoredGraph::new(n, es).unwrap())
}

/// Random tournament: every pair oriented by a fair coin.
pub fn random_tournament(n: usize, seed: u64) -> Digraph {
    let mut rng = derive_rng(seed, 2);
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(0.5) {
                arcs.push((u, v));
            } else {
                arcs.push((v, u));
            }
        }
    }
    Digraph::new(n, arcs, true).unwrap()
}

/// Seeded random oriented graph with δ⁺ >= min_outdeg, built from a random
/// tournament by flip repair, then sparsified where slack allows.
pub fn random_oriented(n: usize, min_outdeg: usize, seed: u64) -> Result<Digraph, GenError> {
    if n == 0 {
        return Err(GenError::InvalidSize("need n >= 1".into()));
    }
    if min_outdeg > (n - 1) / 2 {
        // sum of out-degrees is at most C(n,2)
        return Err(GenError::Unsatisfiable(format!(
            "min_outdeg {min_outdeg} infeasible for an oriented graph on {n} vertices"
        )));
    }
    for restart in 0..32u64 {
        let mut rng = derive_rng(seed, 3 + restart);
        let t = random_tournament(n, seed.wrapping_add(restart.wrapping_mul(0xA5A5_A5A5)));
        let mut outs: Vec<BTreeSet<VertexId>> = (0..n)
            .map(|u| t.out_neighbors(u).iter().copied().collect())
            .collect();
        let mut ok = true;
        for _ in 0..(n * n * 4) {
            let Some(v) = (0..n).find(|&v| outs[v].len() < min_outdeg) else {
                break;
            };
            // flip an arc from the in-neighbor with the largest out-degree
            let in_nbrs: Vec<VertexId> =
                (0..n).filter(|&u| u != v && outs[u].contains(&v)).collect();
            if in_nbrs.is_empty() {
                ok = false;
                break;
            }
            let max_deg = in_nbrs.iter().map(|&u| outs[u].len()).max().unwrap();
            let candidates: Vec<VertexId> =
                in_nbrs.into_iter().filter(|&u| outs[u].len() == max_deg).collect();
            let u = candidates[rng.gen_range(0..candidates.len())];
            outs[u].remove(&v);
            outs[v].insert(u);
        }
        if !ok || (0..n).any(|v| outs[v].len() < min_outdeg) {
            continue;
        }
        // sparsify: drop arcs whose tail keeps slack above the floor
        let mut arcs = Vec::new();
        for (u, out) in outs.iter_mut().enumerate() {
            for v in out.clone() {
                if out.len() > min_outdeg && rng.gen_bool(0.25) {
                    out.remove(&v);
                } else {
                    arcs.push((u, v));
                }
            }
        }
        return Ok(Digraph::new(n, arcs, true).unwrap());
    }
    Err(GenError::AttemptsExhausted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::{has_pc_cycle, minimalize_two_colored, MinimalStructure};

    #[test]
    fn rainbow_complete_examples() {
        assert_eq!(rainbow_complete(5).unwrap().min_color_degree().unwrap(), 4);
        assert_eq!(rainbow_complete(3).unwrap().colors().len(), 3);
        assert_eq!(rainbow_complete(6).unwrap().min_color_degree().unwrap(), 5);
        assert!(rainbow_complete(0).is_err());
    }

    #[test]
    fn pc_cycle_graph_examples() {
        let c4 = pc_cycle_graph(4).unwrap();
        assert_eq!(c4.colors().len(), 2);
        assert!(has_pc_cycle(&c4));
        assert_eq!(pc_cycle_graph(3).unwrap().colors().len(), 3);
        let c5 = pc_cycle_graph(5).unwrap();
        assert_eq!(c5.colors().len(), 3);
        assert!(has_pc_cycle(&c5));
        assert!(pc_cycle_graph(2).is_err());
    }

    #[test]
    fn g_bowtie_examples() {
        let canonical = g_bowtie_graph(3, 3, 0).unwrap();
        assert_eq!(canonical.vertex_count(), 5);
        assert_eq!(canonical.colors().len(), 2);
        assert!(!has_pc_cycle(&canonical));
        assert_eq!(canonical.min_color_degree().unwrap(), 2);

        let long = g_bowtie_graph(3, 3, 2).unwrap();
        assert!(!has_pc_cycle(&long));
        assert_eq!(long.min_color_degree().unwrap(), 2);
        match minimalize_two_colored(&long).unwrap() {
            MinimalStructure::GBowtie(b) => {
                assert_eq!(b.vertex_set(), (0..long.vertex_count()).collect())
            }
            other => panic!("expected g-bowtie, got {other:?}"),
        }

        assert!(g_bowtie_graph(4, 4, 0).is_err());
        assert!(g_bowtie_graph(2, 3, 0).is_err());
    }

    #[test]
    fn random_ecg_examples() {
        assert_eq!(random_ecg(6, 0.0, 3, 1).unwrap().edge_count(), 0);
        let a = random_ecg(8, 0.5, 4, 42).unwrap();
        let b = random_ecg(8, 0.5, 4, 42).unwrap();
        assert_eq!(a, b);
        let full = random_ecg(6, 1.0, 100, 7).unwrap();
        assert_eq!(full.edge_count(), 15);
    }

    #[test]
    fn random_ecg_min_cdeg_examples() {
        let g = random_ecg_min_cdeg(8, 7, 0.3, 5, 11, 10_000).unwrap();
        assert!(g.min_color_degree().unwrap() >= 7);
        let g = random_ecg_min_cdeg(8, 0, 0.3, 5, 11, 10_000).unwrap();
        assert_eq!(g, random_ecg(8, 0.3, 5, 11).unwrap());
        assert!(matches!(
            random_ecg_min_cdeg(5, 5, 0.3, 5, 11, 100),
            Err(GenError::Unsatisfiable(_))
        ));
    }

    #[test]
    fn gallai_blowup_examples() {
        let g = gallai_blowup(&[5, 5], InternalColoring::Rainbow, &[0], 3, false).unwrap();
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(g.min_color_degree().unwrap(), 5);
        let two_colored =
            gallai_blowup(&[1, 1, 1, 1], InternalColoring::Rainbow, &[0, 1], 3, false).unwrap();
        assert!(two_colored.colors().len() <= 2);
        assert!(matches!(
            gallai_blowup(&[2, 2], InternalColoring::RandomPalette(vec![0]), &[0], 3, false),
            Err(GenError::PaletteCollision(0))
        ));
    }

    #[test]
    fn random_oriented_examples() {
        let d = random_oriented(7, 3, 5).unwrap();
        assert!(d.min_out_degree().unwrap() >= 3);
        assert!(d.is_oriented());
        assert!(random_oriented(4, 3, 5).is_err());
        let t = random_tournament(3, 1);
        assert_eq!(t.arcs().len(), 3);
        assert_eq!(random_tournament(9, 4), random_tournament(9, 4));
    }
}
