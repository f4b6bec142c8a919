//! The main pipeline for 2-connected graphs: a seed cycle carrying `C₀`,
//! chords, then shortest ears grown into sphere-colored pieces.

use std::collections::VecDeque;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::k2n::{color_k2n_shaped, k2n_sides};
use super::sphere::{c0_any, sphere_fill};
use super::two_coloring::balanced_on_edges;
use super::util::{cap, greedy_fill, misra_gries, repair, RepairSpec, Tally};
use super::{ceil_sqrt, certify_md, ConstructError, Result};
use crate::coloring::{Color, EdgeColoring, PartialColoring, Palette};
use crate::exact::{exact_index, ExactError};
use crate::graph::{block_decomposition, find_cycle, Graph, SearchError, Vertex};
use crate::verify::IndexKind;

/// Node budget for the exact route on subcubic graphs.
const SUBCUBIC_BUDGET: u64 = 5_000_000;
/// Budget for the seed-cycle search.
const CYCLE_BUDGET: u64 = 2_000_000;

pub(crate) fn is_two_connected(g: &Graph) -> bool {
    g.n() >= 3 && g.is_connected() && {
        let bt = block_decomposition(g);
        bt.blocks.len() == 1 && bt.cut_vertices.is_empty()
    }
}

/// Majority distinguishing coloring of a 2-connected graph with at most
/// `⌈√Δ⌉ + 5` colors.
pub fn color_2connected(g: &Graph, seed: u64) -> Result<EdgeColoring> {
    if !is_two_connected(g) {
        return Err(ConstructError::NotTwoConnected);
    }
    let delta = g.max_degree();
    let c = if delta <= 3 {
        proper_distinguishing_small(g, seed)?
    } else if let Some((x0, x1)) = k2n_sides(g) {
        color_k2n_shaped(g, x0, x1)?
    } else {
        block_pipeline(g, ceil_sqrt(delta), seed)?
    };
    check_bound(&c, delta)?;
    Ok(c)
}

pub(crate) fn check_bound(c: &EdgeColoring, delta: usize) -> Result<()> {
    let bound = ceil_sqrt(delta) + 5;
    if c.colors_used() > bound {
        return Err(ConstructError::VerifierRejected(format!(
            "{} colors exceed the bound {bound}",
            c.colors_used()
        )));
    }
    Ok(())
}

/// For `Δ ≤ 3` majority means proper: exact search, then a proper coloring
/// plus repair when the budget runs out.
pub(crate) fn proper_distinguishing_small(g: &Graph, seed: u64) -> Result<EdgeColoring> {
    let delta = g.max_degree();
    match exact_index(g, IndexKind::ProperDistinguishing, delta + 2, SUBCUBIC_BUDGET) {
        Ok(r) => return certify_md(g, r.witness),
        Err(ExactError::BudgetExhausted { .. } | ExactError::InfeasibleUpToKMax { .. }) => {}
        Err(e) => return Err(e.into()),
    }
    let k = ceil_sqrt(delta.max(1)) + 5;
    let mut colors = misra_gries(g.n(), g.edges());
    let allowed: Vec<Color> = (0..k as Color).collect();
    let frozen = vec![false; g.m()];
    let caps = vec![1; g.n()];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let spec = RepairSpec {
        allowed: &allowed,
        frozen: &frozen,
        caps: &caps,
        fixed: &[],
        max_steps: 50 * g.m() + 100,
    };
    repair(g, &mut colors, &spec, k, &mut rng);
    certify_md(g, EdgeColoring::numbered(colors))
}

/// Seed cycle with `C₀(1, 2)`, chords in two colors, ears via spheres, then
/// leftovers and a final repair that never touches the seed cycle. Colors
/// come from `Z = {0, 0′, 1, …, s + 3}`; `0` and `0′` only on the cycle.
pub(crate) fn block_pipeline(g: &Graph, s: usize, seed: u64) -> Result<EdgeColoring> {
    let k = s + 5;
    let cycle = match find_cycle(g, 5, CYCLE_BUDGET) {
        Ok(c) => c,
        Err(SearchError::NoCycleExists | SearchError::NotFoundWithinBudget | SearchError::BudgetExhausted) => {
            find_cycle(g, 3, CYCLE_BUDGET)?
        }
        Err(e) => return Err(e.into()),
    };
    let nonzero: Vec<Color> = (2..k as Color).collect();
    let caps: Vec<usize> = (0..g.n()).map(|v| cap(g.degree(v))).collect();
    let mut pc = PartialColoring::new(g.m());
    let mut tally = Tally::new(g.n(), k);
    let mut frozen = vec![false; g.m()];

    let pattern = c0_any(cycle.len(), 2, 3)?;
    for (i, &c) in pattern.iter().enumerate() {
        let (u, v) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        let id = g.edge_id(u, v).expect("cycle edge");
        pc.set(id, c);
        tally.add(u, v, c);
        frozen[id] = true;
    }
    let mut in_f = vec![false; g.n()];
    for &v in &cycle {
        in_f[v] = true;
    }

    // chords in γ, δ
    let chords: Vec<usize> = (0..g.m())
        .filter(|&id| {
            let (u, v) = g.edge(id);
            in_f[u] && in_f[v] && !pc.is_colored(id)
        })
        .collect();
    let pick = |present: &[Vertex]| present.iter().copied().max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)));
    let (pairs, _) = balanced_on_edges(g, &chords, &pick, None);
    for (id, c) in pairs {
        let (u, v) = g.edge(id);
        let c = 4 + c;
        if tally.fits(&caps, u, v, c) {
            pc.set(id, c);
            tally.add(u, v, c);
        }
    }

    // ears
    while let Some((a, b, dist)) = shortest_ear(g, &in_f) {
        let da = restricted_bfs(g, &in_f, a, b);
        let db = restricted_bfs(g, &in_f, b, a);
        let hv: Vec<Vertex> = (0..g.n())
            .filter(|&v| v == a || v == b || (!in_f[v] && matches!((da[v], db[v]), (Some(x), Some(y)) if x + y == dist)))
            .collect();
        let mut local = vec![usize::MAX; g.n()];
        for (i, &v) in hv.iter().enumerate() {
            local[v] = i;
        }
        let mut h_ids = Vec::new();
        let mut h_edges = Vec::new();
        for (id, &(u, v)) in g.edges().iter().enumerate() {
            if local[u] != usize::MAX && local[v] != usize::MAX && !pc.is_colored(id) && !(in_f[u] && in_f[v]) {
                h_ids.push(id);
                h_edges.push((local[u], local[v]));
            }
        }
        let h = Graph::new(hv.len(), h_edges)?;
        let mut h_tally = Tally::new(h.n(), k);
        for (i, &v) in hv.iter().enumerate() {
            for c in 0..k as Color {
                h_tally.bump(i, c, tally.get(v, c));
            }
        }
        let h_caps: Vec<usize> = hv.iter().map(|&v| caps[v]).collect();
        let mut h_pc = PartialColoring::new(h.m());
        sphere_fill(&h, local[a], local[b], s, &nonzero, &h_caps, &mut h_tally, &mut h_pc, false);
        greedy_fill(&h, &mut h_pc, &mut h_tally, &h_caps, &nonzero);
        for (hid, &id) in h_ids.iter().enumerate() {
            if let Some(c) = h_pc.get(hid) {
                let (u, v) = g.edge(id);
                pc.set(id, c);
                tally.add(u, v, c);
            }
        }
        for &v in &hv {
            in_f[v] = true;
        }
    }

    if !greedy_fill(g, &mut pc, &mut tally, &caps, &nonzero) {
        return Err(ConstructError::VerifierRejected("an edge had no legal color".into()));
    }
    let mut colors: Vec<Color> = pc.as_slice().iter().map(|c| c.expect("total")).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let spec = RepairSpec {
        allowed: &nonzero,
        frozen: &frozen,
        caps: &caps,
        fixed: &[],
        max_steps: 20 * g.m() + 100,
    };
    repair(g, &mut colors, &spec, k, &mut rng);
    certify_md(g, EdgeColoring::new(colors, Palette::zero_primed(s + 3)))
}

/// BFS from `from` through vertices outside `in_f`; `from` and `to` are the
/// only members of `in_f` allowed, and `to` is a dead end.
fn restricted_bfs(g: &Graph, in_f: &[bool], from: Vertex, to: Vertex) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.n()];
    dist[from] = Some(0);
    let mut q = VecDeque::from([from]);
    while let Some(v) = q.pop_front() {
        if v == to {
            continue;
        }
        let d = dist[v].expect("visited");
        for w in g.neighbors(v) {
            if dist[w].is_none() && (!in_f[w] || w == to) {
                // a direct step between the two ends is not an ear
                if v == from && w == to {
                    continue;
                }
                dist[w] = Some(d + 1);
                q.push_back(w);
            }
        }
    }
    dist
}

/// Shortest path with both ends in `F`, at least one inner vertex and all
/// inner vertices outside `F`: `(a, b, length)`.
fn shortest_ear(g: &Graph, in_f: &[bool]) -> Option<(Vertex, Vertex, usize)> {
    if in_f.iter().all(|&x| x) {
        return None;
    }
    let mut best: Option<(usize, Vertex, Vertex)> = None;
    for a in (0..g.n()).filter(|&v| in_f[v]) {
        if !g.neighbors(a).any(|w| !in_f[w]) {
            continue;
        }
        // BFS through outside vertices; record the first other F vertex met
        let mut dist = vec![usize::MAX; g.n()];
        dist[a] = 0;
        let mut q = VecDeque::from([a]);
        let mut found: Option<(usize, Vertex)> = None;
        while let Some(v) = q.pop_front() {
            if found.is_some_and(|(d, _)| dist[v] + 1 > d) {
                break;
            }
            for w in g.neighbors(v) {
                if in_f[w] {
                    if v != a && w != a {
                        let cand = (dist[v] + 1, w);
                        if found.is_none_or(|f| cand < f) {
                            found = Some(cand);
                        }
                    }
                } else if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    q.push_back(w);
                }
            }
        }
        if let Some((d, b)) = found {
            if best.is_none_or(|(bd, _, _)| d < bd) {
                best = Some((d, a, b));
            }
        }
    }
    best.map(|(d, a, b)| (a, b, d))
}

/// Dispatches on connectivity: 2-connected graphs to the block pipeline,
/// graphs with a cut vertex to the connectivity-1 construction.
pub fn color_auto(g: &Graph, seed: u64) -> Result<EdgeColoring> {
    if g.m() == 0 {
        return Err(ConstructError::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(ConstructError::NotConnected);
    }
    if is_two_connected(g) {
        color_2connected(g, seed)
    } else {
        super::blocks::color_connectivity1(g, seed)
    }
}
