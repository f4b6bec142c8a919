//! Majority distinguishing arc colorings of symmetric digraphs.

use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::util::{cap, Tally};
use super::{ceil_fourth_root, ConstructError, Result};
use crate::automorphism::labelled_arc_witness;
use crate::coloring::{ArcColoring, Color, Palette};
use crate::graph::{find_cycle, Digraph, Vertex};
use crate::verify::verify_arc_majority_distinguishing;

const CYCLE_BUDGET: u64 = 2_000_000;

/// Arc coloring of `↔G` over `{0, 1, …, ⌈⁴√Δ⌉ + 3}`: one direction of a long
/// cycle is colored 0, its reverse carries one `α` arc and otherwise `β`, and
/// every other edge gets an ordered pair of colors, distinct among the
/// children of each vertex in a breadth-first sweep from the cycle.
pub fn color_symmetric_digraph(d: &Digraph, seed: u64) -> Result<ArcColoring> {
    let g = d.underlying().ok_or(ConstructError::NotSymmetric)?;
    if !g.is_connected() {
        return Err(ConstructError::NotConnected);
    }
    if g.min_degree() < 2 {
        return Err(ConstructError::MinDegreeTooSmall {
            got: g.min_degree(),
            need: 2,
        });
    }
    let n = d.n();
    let t = ceil_fourth_root(g.max_degree());
    let k = t + 4;
    let nonzero: Vec<Color> = (1..k as Color).collect();
    // slot v is the out-side of v, slot n + v its in-side
    let caps: Vec<usize> = (0..2 * n).map(|s| cap(g.degree(s % n))).collect();
    let mut tally = Tally::new(2 * n, k);
    let mut colors: Vec<Option<Color>> = vec![None; d.arc_count()];
    let mut frozen = vec![false; d.arc_count()];

    let cycle = find_cycle(&g, 3, CYCLE_BUDGET)?;
    let len = cycle.len();
    for i in 0..len {
        let (u, v) = (cycle[i], cycle[(i + 1) % len]);
        let fwd = d.arc_id(u, v).expect("arc");
        let back = d.arc_id(v, u).expect("arc");
        let back_color = if i == 0 { 1 } else { 2 };
        for (id, c) in [(fwd, 0), (back, back_color)] {
            let (x, y) = d.arc(id);
            colors[id] = Some(c);
            frozen[id] = true;
            tally.add(x, n + y, c);
        }
    }

    // breadth-first sweep from the cycle, pair codes per parent
    let mut seen = vec![false; n];
    let mut queue = VecDeque::new();
    for &v in &cycle {
        seen[v] = true;
        queue.push_back(v);
    }
    let pairs: Vec<(Color, Color)> = nonzero
        .iter()
        .flat_map(|&a| nonzero.iter().map(move |&b| (a, b)))
        .collect();
    while let Some(v) = queue.pop_front() {
        let mut children: Vec<Vertex> = g.neighbors(v).filter(|&w| !seen[w]).collect();
        children.sort_unstable();
        let mut used: Vec<(Color, Color)> = Vec::new();
        for w in children {
            seen[w] = true;
            queue.push_back(w);
            let out = d.arc_id(v, w).expect("arc");
            let back = d.arc_id(w, v).expect("arc");
            let fits = |&(c1, c2): &(Color, Color)| {
                tally.get(v, c1) < caps[v]
                    && tally.get(n + w, c1) < caps[n + w]
                    && tally.get(w, c2) < caps[w]
                    && tally.get(n + v, c2) < caps[n + v]
            };
            let load = |&(c1, c2): &(Color, Color)| tally.get(v, c1) + tally.get(n + v, c2);
            let mut options: Vec<(Color, Color)> = pairs.iter().copied().filter(|p| fits(p)).collect();
            options.sort_by_key(|p| (used.contains(p), load(p), *p));
            if let Some(&(c1, c2)) = options.first() {
                used.push((c1, c2));
                colors[out] = Some(c1);
                colors[back] = Some(c2);
                tally.add(v, n + w, c1);
                tally.add(w, n + v, c2);
            }
        }
    }

    // everything else arc by arc
    for id in 0..d.arc_count() {
        if colors[id].is_some() {
            continue;
        }
        let (u, v) = d.arc(id);
        let c = nonzero
            .iter()
            .copied()
            .filter(|&c| tally.fits(&caps, u, n + v, c))
            .min_by_key(|&c| (tally.get(u, c) + tally.get(n + v, c), c))
            .ok_or_else(|| ConstructError::VerifierRejected("an arc had no legal color".into()))?;
        colors[id] = Some(c);
        tally.add(u, n + v, c);
    }
    let mut colors: Vec<Color> = colors.into_iter().map(|c| c.expect("total")).collect();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..20 * d.arc_count() + 100 {
        let labels: Vec<u64> = colors.iter().map(|&c| u64::from(c) + 1).collect();
        let Some(phi) = labelled_arc_witness(d, &labels, &[]) else {
            break;
        };
        let mut moved: Vec<usize> = (0..d.arc_count())
            .filter(|&id| {
                let (u, v) = d.arc(id);
                !frozen[id] && (phi.apply(u), phi.apply(v)) != (u, v)
            })
            .collect();
        moved.shuffle(&mut rng);
        let mut changed = false;
        for id in moved {
            let (u, v) = d.arc(id);
            let old = colors[id];
            tally.remove(u, n + v, old);
            let options: Vec<Color> = nonzero
                .iter()
                .copied()
                .filter(|&c| c != old && tally.fits(&caps, u, n + v, c))
                .collect();
            if options.is_empty() {
                tally.add(u, n + v, old);
                continue;
            }
            let c = options[rng.gen_range(0..options.len())];
            colors[id] = c;
            tally.add(u, n + v, c);
            changed = true;
            break;
        }
        if !changed {
            break;
        }
    }

    let c = ArcColoring::new(colors, Palette::from_zero(k - 1));
    let r = verify_arc_majority_distinguishing(d, &c)?;
    if !r.passed() {
        return Err(ConstructError::VerifierRejected(r.to_string()));
    }
    Ok(c)
}
