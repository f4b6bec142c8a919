//! Shared machinery: Euler circuits, proper edge colorings, vertex splitting,
//! per-vertex tallies and the symmetry repair pass.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::automorphism::{edge_image, labelled_witness, Permutation};
use crate::coloring::{Color, PartialColoring};
use crate::graph::{Graph, Vertex};

/// Closed trail through every edge of a multigraph, as edge indices in
/// walking order, starting and ending at `start`. Every vertex must have even
/// degree and all edges must be reachable from `start`. With an RNG the
/// neighbor order is shuffled.
pub(crate) fn euler_circuit(n: usize, edges: &[(usize, usize)], start: usize, rng: Option<&mut ChaCha8Rng>) -> Vec<usize> {
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        adj[u].push((v, i));
        adj[v].push((u, i));
    }
    if let Some(rng) = rng {
        for list in &mut adj {
            list.shuffle(rng);
        }
    } else {
        // pop() takes from the back; reverse so the smallest neighbor goes first
        for list in &mut adj {
            list.sort_unstable();
            list.reverse();
        }
    }
    let mut used = vec![false; edges.len()];
    let mut stack: Vec<(usize, Option<usize>)> = vec![(start, None)];
    let mut out = Vec::with_capacity(edges.len());
    while let Some(&(v, via)) = stack.last() {
        let mut next = None;
        while let Some((w, id)) = adj[v].pop() {
            if !used[id] {
                used[id] = true;
                next = Some((w, id));
                break;
            }
        }
        match next {
            Some((w, id)) => stack.push((w, Some(id))),
            None => {
                stack.pop();
                if let Some(id) = via {
                    out.push(id);
                }
            }
        }
    }
    out.reverse();
    out
}

/// Edge ids of a closed walk given as a vertex sequence, if the walk uses
/// every edge of `g` exactly once.
pub(crate) fn walk_edges(g: &Graph, walk: &[Vertex]) -> Option<Vec<usize>> {
    if walk.len() != g.m() + 1 || walk.first() != walk.last() {
        return None;
    }
    let mut seen = vec![false; g.m()];
    let mut ids = Vec::with_capacity(g.m());
    for w in walk.windows(2) {
        let id = g.edge_id(w[0], w[1])?;
        if std::mem::replace(&mut seen[id], true) {
            return None;
        }
        ids.push(id);
    }
    Some(ids)
}

/// Proper edge coloring with at most `Δ + 1` colors (Misra–Gries). The input
/// must be simple.
pub(crate) fn misra_gries(n: usize, edges: &[(usize, usize)]) -> Vec<Color> {
    let mut deg = vec![0; n];
    for &(u, v) in edges {
        deg[u] += 1;
        deg[v] += 1;
    }
    let k = deg.iter().max().copied().unwrap_or(0) + 1;
    // at[v][c] = the neighbor joined to v by the edge colored c
    let mut at: Vec<Vec<Option<usize>>> = vec![vec![None; k]; n];
    let mut nbrs: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(u, v) in edges {
        nbrs[u].push(v);
        nbrs[v].push(u);
    }
    let free = |at: &Vec<Vec<Option<usize>>>, v: usize| -> usize {
        (0..k).find(|&c| at[v][c].is_none()).expect("degree < k")
    };
    let color_of = |at: &Vec<Vec<Option<usize>>>, u: usize, w: usize| -> Option<usize> {
        (0..k).find(|&c| at[u][c] == Some(w))
    };
    for &(u, v0) in edges {
        // maximal fan at u starting with v0
        let mut fan = vec![v0];
        let mut in_fan = vec![false; n];
        in_fan[v0] = true;
        loop {
            let last = *fan.last().expect("fan non-empty");
            let next = nbrs[u].iter().copied().find(|&w| {
                !in_fan[w]
                    && color_of(&at, u, w).is_some_and(|c| at[last][c].is_none())
            });
            match next {
                Some(w) => {
                    in_fan[w] = true;
                    fan.push(w);
                }
                None => break,
            }
        }
        let c = free(&at, u);
        let d = free(&at, *fan.last().expect("fan non-empty"));
        // invert the cd-path starting at u (first edge colored d)
        if c != d && at[u][d].is_some() {
            let mut path = vec![u];
            let mut cur = u;
            let mut col = d;
            while let Some(w) = at[cur][col] {
                path.push(w);
                cur = w;
                col = if col == d { c } else { d };
            }
            let mut col = d;
            let mut recolor = Vec::new();
            for w in path.windows(2) {
                recolor.push((w[0], w[1], col));
                col = if col == d { c } else { d };
            }
            for &(x, y, cl) in &recolor {
                at[x][cl] = None;
                at[y][cl] = None;
            }
            for &(x, y, cl) in &recolor {
                let nc = if cl == d { c } else { d };
                at[x][nc] = Some(y);
                at[y][nc] = Some(x);
            }
        }
        // first fan prefix that is still a fan and ends at a vertex where d is free
        let mut w_idx = fan.len() - 1;
        for i in 0..fan.len() {
            let prefix_ok = (0..i).all(|j| {
                color_of(&at, u, fan[j + 1]).is_some_and(|cl| at[fan[j]][cl].is_none())
            });
            if !prefix_ok {
                break;
            }
            if at[fan[i]][d].is_none() {
                w_idx = i;
                break;
            }
        }
        // rotate the fan prefix
        for j in 0..w_idx {
            let cl = color_of(&at, u, fan[j + 1]).expect("fan edge colored");
            at[u][cl] = None;
            at[fan[j + 1]][cl] = None;
            at[u][cl] = Some(fan[j]);
            at[fan[j]][cl] = Some(u);
        }
        let w = fan[w_idx];
        debug_assert!(at[u][d].is_none() && at[w][d].is_none());
        at[u][d] = Some(w);
        at[w][d] = Some(u);
    }
    edges
        .iter()
        .map(|&(u, v)| color_of(&at, u, v).expect("every edge colored") as Color)
        .collect()
}

/// Proper edge coloring of a bipartite multigraph with exactly `Δ` colors by
/// alternating-path flips.
pub(crate) fn konig(n: usize, edges: &[(usize, usize)]) -> Vec<Color> {
    let mut deg = vec![0; n];
    for &(u, v) in edges {
        deg[u] += 1;
        deg[v] += 1;
    }
    let k = deg.iter().max().copied().unwrap_or(0);
    // at[v][c] = edge id colored c at v
    let mut at: Vec<Vec<Option<usize>>> = vec![vec![None; k]; n];
    let mut color = vec![usize::MAX; edges.len()];
    let other = |id: usize, v: usize| {
        let (a, b) = edges[id];
        if a == v {
            b
        } else {
            a
        }
    };
    for (id, &(u, v)) in edges.iter().enumerate() {
        let a = (0..k).find(|&c| at[u][c].is_none()).expect("free color at u");
        if at[v][a].is_some() {
            let b = (0..k).find(|&c| at[v][c].is_none()).expect("free color at v");
            // flip the a/b path from v; in a bipartite graph it avoids u
            let mut path = Vec::new();
            let mut cur = v;
            let mut col = a;
            while let Some(e) = at[cur][col] {
                path.push(e);
                cur = other(e, cur);
                col = if col == a { b } else { a };
            }
            for &e in &path {
                let (x, y) = edges[e];
                at[x][color[e]] = None;
                at[y][color[e]] = None;
            }
            for &e in &path {
                let nc = if color[e] == a { b } else { a };
                color[e] = nc;
                let (x, y) = edges[e];
                at[x][nc] = Some(e);
                at[y][nc] = Some(e);
            }
        }
        color[id] = a;
        at[u][a] = Some(id);
        at[v][a] = Some(id);
    }
    color.into_iter().map(|c| c as Color).collect()
}

/// Splits every vertex's incident edges into consecutive parts of the given
/// sizes and returns `(copies, edges)` of the split graph, edge `i` of the
/// result coming from edge `i` of `g`.
pub(crate) fn split_vertices(g: &Graph, parts: impl Fn(usize) -> Vec<usize>) -> (usize, Vec<(usize, usize)>) {
    let mut copy_of: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    let mut next = 0;
    // incident edge position -> copy
    let mut slot: Vec<std::collections::HashMap<usize, usize>> = vec![Default::default(); g.n()];
    for v in 0..g.n() {
        let sizes = parts(g.degree(v));
        debug_assert_eq!(sizes.iter().sum::<usize>(), g.degree(v));
        let mut pos = 0;
        for s in sizes {
            for &(_, id) in &g.incident(v)[pos..pos + s] {
                slot[v].insert(id, next);
            }
            copy_of[v].push(next);
            next += 1;
            pos += s;
        }
        if g.degree(v) == 0 {
            next += 1;
        }
    }
    let edges = g
        .edges()
        .iter()
        .enumerate()
        .map(|(id, &(u, v))| (slot[u][&id], slot[v][&id]))
        .collect();
    (next, edges)
}

/// Largest allowed count of one color at a vertex of degree `d` under strict
/// majority, with degree-one vertices exempt.
pub(crate) fn cap(d: usize) -> usize {
    (d / 2).max(1)
}

/// Per-vertex color counts of a partial coloring.
#[derive(Debug, Clone)]
pub(crate) struct Tally {
    counts: Vec<Vec<usize>>,
}

impl Tally {
    pub(crate) fn new(n: usize, k: usize) -> Self {
        Self {
            counts: vec![vec![0; k]; n],
        }
    }

    pub(crate) fn of(g: &Graph, pc: &PartialColoring, k: usize) -> Self {
        let mut t = Self::new(g.n(), k);
        for (id, &(u, v)) in g.edges().iter().enumerate() {
            if let Some(c) = pc.get(id) {
                t.add(u, v, c);
            }
        }
        t
    }

    pub(crate) fn get(&self, v: Vertex, c: Color) -> usize {
        self.counts[v][c as usize]
    }

    /// Colored edges at `v`.
    pub(crate) fn total(&self, v: Vertex) -> usize {
        self.counts[v].iter().sum()
    }

    /// Adds `by` to one end only (counts from edges outside the host).
    pub(crate) fn bump(&mut self, v: Vertex, c: Color, by: usize) {
        self.counts[v][c as usize] += by;
    }

    pub(crate) fn add(&mut self, u: Vertex, v: Vertex, c: Color) {
        self.counts[u][c as usize] += 1;
        self.counts[v][c as usize] += 1;
    }

    pub(crate) fn remove(&mut self, u: Vertex, v: Vertex, c: Color) {
        self.counts[u][c as usize] -= 1;
        self.counts[v][c as usize] -= 1;
    }

    /// Can edge `uv` take color `c` without exceeding `caps`?
    pub(crate) fn fits(&self, caps: &[usize], u: Vertex, v: Vertex, c: Color) -> bool {
        self.get(u, c) < caps[u] && self.get(v, c) < caps[v]
    }
}

/// Colors every uncolored edge with a color from `allowed` that fits the caps
/// at both ends, preferring the color least used at the two endpoints.
/// Returns false if some edge had no fitting color.
pub(crate) fn greedy_fill(g: &Graph, pc: &mut PartialColoring, tally: &mut Tally, caps: &[usize], allowed: &[Color]) -> bool {
    let mut ok = true;
    let todo: Vec<usize> = pc.uncolored().collect();
    for id in todo {
        let (u, v) = g.edge(id);
        let best = allowed
            .iter()
            .copied()
            .filter(|&c| tally.fits(caps, u, v, c))
            .min_by_key(|&c| (tally.get(u, c) + tally.get(v, c), c));
        match best {
            Some(c) => {
                pc.set(id, c);
                tally.add(u, v, c);
            }
            None => ok = false,
        }
    }
    ok
}

/// Options for [`repair`].
pub(crate) struct RepairSpec<'a> {
    /// Colors the pass may write.
    pub allowed: &'a [Color],
    /// Edges the pass must not recolor.
    pub frozen: &'a [bool],
    /// Per-vertex cap on a single color.
    pub caps: &'a [usize],
    /// Vertices every automorphism must fix (e.g. a and b of a sphere
    /// coloring).
    pub fixed: &'a [Vertex],
    pub max_steps: usize,
}

/// Breaks color-preserving automorphisms one witness at a time: recolors a
/// moved, unfrozen edge with another color that fits the caps. Returns true
/// once no non-identity automorphism (fixing `spec.fixed`) survives.
pub(crate) fn repair(g: &Graph, colors: &mut [Color], spec: &RepairSpec<'_>, k: usize, rng: &mut ChaCha8Rng) -> bool {
    let mut tally = Tally::new(g.n(), k);
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        tally.add(u, v, colors[id]);
    }
    for _ in 0..spec.max_steps {
        let labels: Vec<u64> = colors.iter().map(|&c| u64::from(c) + 1).collect();
        let Some(phi) = labelled_witness(g, &labels, spec.fixed) else {
            return true;
        };
        if !recolor_one(g, colors, &mut tally, spec, &phi, rng) {
            return false;
        }
    }
    let labels: Vec<u64> = colors.iter().map(|&c| u64::from(c) + 1).collect();
    labelled_witness(g, &labels, spec.fixed).is_none()
}

fn recolor_one(
    g: &Graph,
    colors: &mut [Color],
    tally: &mut Tally,
    spec: &RepairSpec<'_>,
    phi: &Permutation,
    rng: &mut ChaCha8Rng,
) -> bool {
    let mut moved: Vec<usize> = (0..g.m())
        .filter(|&id| !spec.frozen[id] && edge_image(g, phi, id) != id)
        .collect();
    moved.shuffle(rng);
    for id in moved {
        let (u, v) = g.edge(id);
        let old = colors[id];
        tally.remove(u, v, old);
        let options: Vec<Color> = spec
            .allowed
            .iter()
            .copied()
            .filter(|&c| c != old && tally.fits(spec.caps, u, v, c))
            .collect();
        if options.is_empty() {
            tally.add(u, v, old);
            continue;
        }
        let c = options[rng.gen_range(0..options.len())];
        colors[id] = c;
        tally.add(u, v, c);
        return true;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
    }

    fn is_proper(n: usize, edges: &[(usize, usize)], c: &[Color]) -> bool {
        let mut seen = std::collections::HashSet::new();
        edges
            .iter()
            .zip(c)
            .all(|(&(u, v), &col)| seen.insert((u, col)) && seen.insert((v, col)))
            && n > 0
    }

    #[test]
    fn euler_on_k5() {
        let g = complete(5);
        let ids = euler_circuit(5, g.edges(), 0, None);
        assert_eq!(ids.len(), 10);
        let mut sorted = ids.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, (0..10).collect::<Vec<_>>());
        // consecutive edges share a vertex
        let mut at = 0;
        for id in ids {
            let (u, v) = g.edge(id);
            at = if u == at { v } else { assert_eq!(v, at); u };
        }
        assert_eq!(at, 0);
    }

    #[test]
    fn misra_gries_is_proper() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in [5, 6, 9, 12] {
            let g = complete(n);
            let c = misra_gries(n, g.edges());
            assert!(is_proper(n, g.edges(), &c));
            assert!(c.iter().all(|&x| (x as usize) < n));
            // random sparse graphs
            let edges: Vec<(usize, usize)> = g
                .edges()
                .iter()
                .copied()
                .filter(|_| rng.gen_bool(0.4))
                .collect();
            let c = misra_gries(n, &edges);
            assert!(is_proper(n, &edges, &c));
        }
    }

    #[test]
    fn konig_on_k33() {
        let edges: Vec<(usize, usize)> = (0..3).flat_map(|i| (3..6).map(move |j| (i, j))).collect();
        let c = konig(6, &edges);
        assert!(is_proper(6, &edges, &c));
        assert!(c.iter().all(|&x| x < 3));
    }
}
