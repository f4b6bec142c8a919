//! The seed-cycle pattern `C₀(α, β)` and the sphere-by-sphere coloring of a
//! graph covered by shortest `a`–`b` paths.

use std::collections::HashSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::util::{cap, greedy_fill, repair, RepairSpec, Tally};
use super::{ceil_sqrt, ConstructError, Result};
use crate::automorphism::{labelled_group, labelled_witness};
use crate::coloring::{Color, EdgeColoring, PartialColoring, Palette};
use crate::graph::{geodesic_cover_check, spheres, Graph, Vertex};
use crate::verify::{verify_majority, MajorityMode};

/// Colors around a cycle of length `len`: `α, 0, β`, then `0′, 0, 0′, …`.
/// Colors are indices into [`Palette::zero_primed`], so `0` is color 0 and
/// `0′` is color 1.
pub fn c0_pattern(len: usize, alpha: Color, beta: Color) -> Result<Vec<Color>> {
    if len < 5 {
        return Err(ConstructError::CycleTooShort(len));
    }
    c0_any(len, alpha, beta)
}

/// Same pattern without the length floor; cycles of length 3 and 4 still get
/// distinct colors at every vertex.
pub(crate) fn c0_any(len: usize, alpha: Color, beta: Color) -> Result<Vec<Color>> {
    if alpha == beta || alpha < 2 || beta < 2 {
        return Err(ConstructError::BadColors);
    }
    if len < 3 {
        return Err(ConstructError::CycleTooShort(len));
    }
    let mut out = vec![alpha, 0, beta];
    for i in 3..len {
        out.push(if i % 2 == 1 { 1 } else { 0 });
    }
    Ok(out)
}

/// Applies [`c0_pattern`] to the cycle `v₀ v₁ … v_{L−1}` of `g`; edge
/// `v_i v_{i+1}` gets entry `i`.
pub fn color_c0(g: &Graph, cycle: &[Vertex], alpha: Color, beta: Color) -> Result<PartialColoring> {
    let colors = c0_pattern(cycle.len(), alpha, beta)?;
    let mut pc = PartialColoring::new(g.m());
    for (i, &c) in colors.iter().enumerate() {
        let (u, v) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        let id = g
            .edge_id(u, v)
            .ok_or_else(|| ConstructError::Precondition(format!("{u}-{v} is not an edge")))?;
        pc.set(id, c);
    }
    Ok(pc)
}

/// What held after one sphere was processed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LayerTrace {
    pub layer: usize,
    /// Orbit sizes of the current stabilizer on this sphere before coloring.
    pub orbit_sizes: Vec<usize>,
    /// Colored part of `H_r` is almost majority.
    pub almost_majority: bool,
    /// Colored part of `H_{r+1}` is weak majority.
    pub weak_majority_next: bool,
    /// Fixing `S_{r+1}` pointwise fixes `S_r`.
    pub propagation: bool,
    /// No orbit on `S_{r+1}` exceeds `⌈√Δ⌉`.
    pub permutable_bound: bool,
    /// Vertices whose multiset had to ignore the soft forbidden rules.
    pub relaxed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaHOutput {
    pub coloring: EdgeColoring,
    pub trace: Vec<LayerTrace>,
}

/// Almost majority coloring of `h` with `palette` colors that no
/// non-identity automorphism fixing `a` and `b` preserves.
pub fn lemma_h_coloring(h: &Graph, a: Vertex, b: Vertex, delta: usize, palette: usize, seed: u64) -> Result<LemmaHOutput> {
    if a >= h.n() || b >= h.n() || a == b || !geodesic_cover_check(h, a, b) {
        return Err(ConstructError::PreconditionGeodesicFailed);
    }
    if h.max_degree() > delta {
        return Err(ConstructError::Precondition(format!("Δ(h) = {} exceeds {delta}", h.max_degree())));
    }
    let s = ceil_sqrt(delta.max(1));
    if palette < s + 3 {
        return Err(ConstructError::PaletteTooSmall { got: palette, need: s + 3 });
    }
    let colors: Vec<Color> = (0..palette as Color).collect();
    let caps: Vec<usize> = (0..h.n()).map(|v| cap(h.degree(v))).collect();
    let mut tally = Tally::new(h.n(), palette);
    let mut pc = PartialColoring::new(h.m());
    let trace = sphere_fill(h, a, b, s, &colors, &caps, &mut tally, &mut pc, true);
    greedy_fill(h, &mut pc, &mut tally, &caps, &colors);
    let mut out = pc
        .into_total(Palette::numbered(palette))
        .ok_or_else(|| ConstructError::VerifierRejected("an edge had no legal color".into()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let frozen = vec![false; h.m()];
    let spec = RepairSpec {
        allowed: &colors,
        frozen: &frozen,
        caps: &caps,
        fixed: &[a, b],
        max_steps: 20 * h.m() + 50,
    };
    if !repair(h, &mut out.colors, &spec, palette, &mut rng) {
        return Err(ConstructError::VerifierRejected("an automorphism fixing a and b survived".into()));
    }
    let r = verify_majority(h, &out, MajorityMode::Almost)?;
    if !r.passed() {
        return Err(ConstructError::VerifierRejected(r.to_string()));
    }
    let labels: Vec<u64> = out.colors.iter().map(|&c| u64::from(c) + 1).collect();
    if labelled_witness(h, &labels, &[a, b]).is_some() {
        return Err(ConstructError::VerifierRejected("an automorphism fixing a and b survived".into()));
    }
    Ok(LemmaHOutput { coloring: out, trace })
}

/// Colors the edges of `h` between consecutive spheres around `a`, layer by
/// layer, giving vertices of one orbit distinct color multisets on their
/// edges to the next sphere. Edges inside a sphere are left uncolored.
/// `tally` may already hold counts from edges outside `h`.
#[allow(clippy::too_many_arguments)]
pub(crate) fn sphere_fill(
    h: &Graph,
    a: Vertex,
    b: Vertex,
    s: usize,
    palette: &[Color],
    caps: &[usize],
    tally: &mut Tally,
    pc: &mut PartialColoring,
    check: bool,
) -> Vec<LayerTrace> {
    let sd = spheres(h, a);
    let depth = sd.distances[b].expect("b reachable");
    let layer = |v: Vertex| sd.distances[v].expect("connected");
    let down = |v: Vertex| -> Vec<(Vertex, usize)> {
        let mut d: Vec<(Vertex, usize)> = h
            .incident(v)
            .iter()
            .copied()
            .filter(|&(w, _)| layer(w) == layer(v) + 1)
            .collect();
        d.sort_unstable();
        d
    };
    let mut trace = Vec::new();

    // root: same-colored groups of at most min(s, d/2) edges
    let root = down(a);
    let group = s.min(h.degree(a) / 2).max(1);
    let mut used = HashSet::new();
    for chunk in root.chunks(group) {
        let choice = order_by_use(palette, tally, a).into_iter().find(|&c| {
            !used.contains(&c)
                && tally.get(a, c) + chunk.len() <= caps[a]
                && chunk.iter().all(|&(w, _)| tally.get(w, c) < caps[w])
        });
        match choice {
            Some(c) => {
                used.insert(c);
                for &(w, id) in chunk {
                    pc.set(id, c);
                    tally.add(a, w, c);
                }
            }
            None => {
                for &(w, id) in chunk {
                    if let Some(c) = order_by_use(palette, tally, a).into_iter().find(|&c| tally.fits(caps, a, w, c)) {
                        pc.set(id, c);
                        tally.add(a, w, c);
                    }
                }
            }
        }
    }
    if check {
        trace.push(layer_trace(h, a, b, s, pc, &sd.layers, 0, vec![1], 0));
    }

    for r in 1..depth {
        let mut vlabels = vec![0u64; h.n()];
        vlabels[a] = 1;
        vlabels[b] = 2;
        let group = labelled_group(h, &pc.labels(), &vlabels);
        let mut orbits: Vec<Vec<Vertex>> = group
            .orbits()
            .into_iter()
            .filter(|o| layer(o[0]) == r)
            .collect();
        orbits.sort();
        let orbit_sizes: Vec<usize> = orbits.iter().map(Vec::len).collect();
        let mut relaxed = 0;
        let mut layer_full: HashSet<Vec<Color>> = HashSet::new();
        for orbit in &orbits {
            let mut taken: HashSet<Vec<Color>> = HashSet::new();
            for &v in orbit {
                let edges = down(v);
                if edges.is_empty() {
                    continue;
                }
                let up: Vec<Color> = h.incident(v).iter().filter_map(|&(_, id)| pc.get(id)).collect();
                let novelty = Novelty {
                    up: &up,
                    seen: &layer_full,
                };
                let (ms, soft) = choose_multiset(v, &edges, s, palette, caps, tally, &taken, &novelty);
                if !soft {
                    relaxed += 1;
                }
                if let Some((multiset, assignment)) = ms {
                    for (&(w, id), &c) in edges.iter().zip(&assignment) {
                        pc.set(id, c);
                        tally.add(v, w, c);
                    }
                    layer_full.insert(novelty_key(&up, &multiset));
                    taken.insert(multiset);
                } else {
                    // nothing distinct fits: color edge by edge
                    relaxed += 1;
                    for &(w, id) in &edges {
                        if let Some(c) = order_by_use(palette, tally, v).into_iter().find(|&c| tally.fits(caps, v, w, c)) {
                            pc.set(id, c);
                            tally.add(v, w, c);
                        }
                    }
                }
            }
        }
        if check {
            trace.push(layer_trace(h, a, b, s, pc, &sd.layers, r, orbit_sizes, relaxed));
        }
    }
    trace
}

fn order_by_use(palette: &[Color], tally: &Tally, v: Vertex) -> Vec<Color> {
    let mut p = palette.to_vec();
    p.sort_by_key(|&c| (tally.get(v, c), c));
    p
}

type Choice = Option<(Vec<Color>, Vec<Color>)>;

/// Full multisets already produced on the current sphere; a candidate that
/// repeats one is kept only as a fallback.
struct Novelty<'a> {
    up: &'a [Color],
    seen: &'a HashSet<Vec<Color>>,
}

fn novelty_key(up: &[Color], m: &[Color]) -> Vec<Color> {
    let mut full: Vec<Color> = up.iter().chain(m).copied().collect();
    full.sort_unstable();
    full
}

/// Picks a color multiset for the down edges of `v` that no earlier vertex
/// of its orbit received, and an assignment of it to the edges. The second
/// value is false when the soft forbidden rules had to be dropped.
#[allow(clippy::too_many_arguments)]
fn choose_multiset(
    v: Vertex,
    edges: &[(Vertex, usize)],
    s: usize,
    palette: &[Color],
    caps: &[usize],
    tally: &Tally,
    taken: &HashSet<Vec<Color>>,
    novelty: &Novelty,
) -> (Choice, bool) {
    let k = edges.len();
    for soft in [true, false] {
        let here = if soft { forbidden_here(v, palette, tally) } else { Vec::new() };
        let excluded: Vec<Color> = if k == 1 { here } else { here.into_iter().take(1).collect() };
        let mut pal: Vec<Color> = order_by_use(palette, tally, v);
        pal.retain(|c| !excluded.contains(c));
        let mut tries = 0;
        let mut seen = HashSet::new();
        let mut fallback: Choice = None;
        for m in candidates(k, s, &pal) {
            tries += 1;
            if tries > 4000 {
                break;
            }
            if taken.contains(&m) || !seen.insert(m.clone()) {
                continue;
            }
            if !fits_at(v, &m, caps, tally) {
                continue;
            }
            let allowed = |w: Vertex, c: Color| tally.get(w, c) < caps[w] && (!soft || !forbidden_next(w, c, tally));
            if let Some(assign) = assign_colors(edges, &m, allowed) {
                if !novelty.seen.contains(&novelty_key(novelty.up, &m)) {
                    return (Some((m, assign)), soft);
                }
                fallback.get_or_insert((m, assign));
            }
        }
        if fallback.is_some() {
            return (fallback, soft);
        }
    }
    (None, false)
}

/// Colors forbidden at `v` on the current sphere: a color on at least half
/// of its colored edges. Most used first.
fn forbidden_here(v: Vertex, palette: &[Color], tally: &Tally) -> Vec<Color> {
    let colored = tally.total(v);
    let mut f: Vec<(usize, Color)> = palette
        .iter()
        .map(|&c| (tally.get(v, c), c))
        .filter(|&(count, _)| count > 0 && count >= colored.div_ceil(2))
        .collect();
    f.sort_by(|x, y| y.cmp(x));
    f.into_iter().map(|(_, c)| c).collect()
}

/// On the next sphere a color is forbidden once it is on more than half of
/// the colored edges.
fn forbidden_next(w: Vertex, c: Color, tally: &Tally) -> bool {
    2 * tally.get(w, c) > tally.total(w)
}

fn fits_at(v: Vertex, m: &[Color], caps: &[usize], tally: &Tally) -> bool {
    let mut i = 0;
    while i < m.len() {
        let mut j = i;
        while j < m.len() && m[j] == m[i] {
            j += 1;
        }
        if tally.get(v, m[i]) + (j - i) > caps[v] {
            return false;
        }
        i = j;
    }
    true
}

/// Matches multiset slots to edges, edge `i` going to child `edges[i].0`.
fn assign_colors(edges: &[(Vertex, usize)], m: &[Color], allowed: impl Fn(Vertex, Color) -> bool) -> Option<Vec<Color>> {
    let k = edges.len();
    // slot_of_edge[i] = index into m
    let mut edge_of_slot: Vec<Option<usize>> = vec![None; k];
    let mut slot_of_edge: Vec<Option<usize>> = vec![None; k];
    fn augment(
        e: usize,
        edges: &[(Vertex, usize)],
        m: &[Color],
        allowed: &dyn Fn(Vertex, Color) -> bool,
        seen: &mut [bool],
        edge_of_slot: &mut [Option<usize>],
        slot_of_edge: &mut [Option<usize>],
    ) -> bool {
        for slot in 0..m.len() {
            if seen[slot] || !allowed(edges[e].0, m[slot]) {
                continue;
            }
            seen[slot] = true;
            let free = match edge_of_slot[slot] {
                None => true,
                Some(other) => augment(other, edges, m, allowed, seen, edge_of_slot, slot_of_edge),
            };
            if free {
                edge_of_slot[slot] = Some(e);
                slot_of_edge[e] = Some(slot);
                return true;
            }
        }
        false
    }
    for e in 0..k {
        let mut seen = vec![false; k];
        if !augment(e, edges, m, &allowed, &mut seen, &mut edge_of_slot, &mut slot_of_edge) {
            return None;
        }
    }
    Some(slot_of_edge.into_iter().map(|s| m[s.expect("matched")]).collect())
}

/// Candidate multisets (sorted) for a vertex with `k` edges to the next
/// sphere, in the order the three regimes prescribe, followed by every
/// multiset with multiplicities at most `max(1, k/2)`.
fn candidates(k: usize, s: usize, pal: &[Color]) -> Box<dyn Iterator<Item = Vec<Color>> + '_> {
    let sorted = |mut v: Vec<Color>| {
        v.sort_unstable();
        v
    };
    let first: Box<dyn Iterator<Item = Vec<Color>>> = if k == 1 {
        Box::new(pal.iter().map(|&c| vec![c]))
    } else if k <= s {
        Box::new(Combinations::new(pal.to_vec(), k))
    } else if k == 4 {
        let p = pal.to_vec();
        Box::new(Combinations::new(p, 2).map(|xy| vec![xy[0], xy[0], xy[1], xy[1]]))
    } else {
        // one signature color used once, the rest filled two at a time
        let p = pal.to_vec();
        Box::new((0..p.len()).flat_map(move |si| {
            let sig = p[si];
            let rest: Vec<Color> = p.iter().copied().filter(|&c| c != sig).collect();
            (0..rest.len().max(1)).filter_map(move |start| {
                if rest.is_empty() {
                    return None;
                }
                let mut m = vec![sig];
                let mut i = start;
                while m.len() < k {
                    m.push(rest[i % rest.len()]);
                    if m.len() < k {
                        m.push(rest[i % rest.len()]);
                    }
                    i += 1;
                }
                Some(m)
            })
        }))
    };
    let bound = (k / 2).max(1);
    Box::new(first.map(sorted).chain(Multisets::new(pal.to_vec(), k, bound)))
}

struct Combinations {
    items: Vec<Color>,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(items: Vec<Color>, k: usize) -> Self {
        let done = k > items.len() || k == 0;
        Self {
            idx: (0..k).collect(),
            items,
            done,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<Color>;

    fn next(&mut self) -> Option<Vec<Color>> {
        if self.done {
            return None;
        }
        let out = self.idx.iter().map(|&i| self.items[i]).collect();
        let n = self.items.len();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// Multisets of size `k` over `items` with each multiplicity at most `bound`,
/// as count vectors enumerated from the most front-loaded.
struct Multisets {
    items: Vec<Color>,
    counts: Vec<usize>,
    k: usize,
    bound: usize,
    started: bool,
    done: bool,
}

impl Multisets {
    fn new(items: Vec<Color>, k: usize, bound: usize) -> Self {
        let done = items.len() * bound < k;
        Self {
            counts: vec![0; items.len()],
            items,
            k,
            bound,
            started: false,
            done,
        }
    }

    /// Fills `counts[from..]` greedily with `left` items.
    fn fill(&mut self, from: usize, mut left: usize) -> bool {
        for i in from..self.counts.len() {
            let take = left.min(self.bound);
            self.counts[i] = take;
            left -= take;
        }
        left == 0
    }
}

impl Iterator for Multisets {
    type Item = Vec<Color>;

    fn next(&mut self) -> Option<Vec<Color>> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if !self.fill(0, self.k) {
                self.done = true;
                return None;
            }
        } else {
            // decrement the rightmost position that can pass one unit right
            let n = self.counts.len();
            let mut advanced = false;
            for i in (0..n.saturating_sub(1)).rev() {
                if self.counts[i] == 0 {
                    continue;
                }
                let tail: usize = self.counts[i + 1..].iter().sum();
                let room = (n - i - 1) * self.bound;
                if tail < room {
                    self.counts[i] -= 1;
                    if self.fill(i + 1, tail + 1) {
                        advanced = true;
                        break;
                    }
                }
            }
            if !advanced {
                self.done = true;
                return None;
            }
        }
        let mut out = Vec::with_capacity(self.k);
        for (i, &c) in self.counts.iter().enumerate() {
            out.extend(std::iter::repeat_n(self.items[i], c));
        }
        out.sort_unstable();
        Some(out)
    }
}

#[allow(clippy::too_many_arguments)]
fn layer_trace(
    h: &Graph,
    a: Vertex,
    b: Vertex,
    s: usize,
    pc: &PartialColoring,
    layers: &[Vec<Vertex>],
    r: usize,
    orbit_sizes: Vec<usize>,
    relaxed: usize,
) -> LayerTrace {
    let mut layer_of = vec![usize::MAX; h.n()];
    for (i, l) in layers.iter().enumerate() {
        for &v in l {
            layer_of[v] = i;
        }
    }
    let majority_upto = |upto: usize, mode: MajorityMode| {
        (0..h.n()).filter(|&v| layer_of[v] <= upto).all(|v| {
            let inside: Vec<usize> = h
                .incident(v)
                .iter()
                .filter(|&&(w, _)| layer_of[w] <= upto)
                .map(|&(_, id)| id)
                .collect();
            let limit = mode.threshold(inside.len());
            let mut counts = std::collections::HashMap::new();
            for id in inside {
                if let Some(c) = pc.get(id) {
                    *counts.entry(c).or_insert(0) += 1;
                }
            }
            counts.values().all(|&x| x <= limit)
        })
    };
    let almost_majority = majority_upto(r, MajorityMode::Almost);
    let weak_majority_next = majority_upto(r + 1, MajorityMode::Weak);

    let next: &[Vertex] = layers.get(r + 1).map_or(&[], Vec::as_slice);
    let mut vlabels = vec![0u64; h.n()];
    vlabels[a] = 1;
    vlabels[b] = 2;
    let base = labelled_group(h, &pc.labels(), &vlabels);
    let permutable_bound = base
        .orbits()
        .iter()
        .filter(|o| layer_of[o[0]] == r + 1)
        .all(|o| o.len() <= s);
    for (i, &w) in next.iter().enumerate() {
        vlabels[w] = 3 + i as u64;
    }
    let pinned = labelled_group(h, &pc.labels(), &vlabels);
    let propagation = layers[r].iter().all(|&v| pinned.orbit(v).len() == 1);
    LayerTrace {
        layer: r,
        orbit_sizes,
        almost_majority,
        weak_majority_next,
        propagation,
        permutable_bound,
        relaxed,
    }
}
