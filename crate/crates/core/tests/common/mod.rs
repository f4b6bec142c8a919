//! Seeded random graphs and the small-graph corpus shared by the
//! integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use majicolor::graph::{generate, FamilyKind, FamilySpec, Graph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn degree(e: &BTreeSet<(usize, usize)>, n: usize) -> Vec<usize> {
    let mut d = vec![0; n];
    for &(u, v) in e {
        d[u] += 1;
        d[v] += 1;
    }
    d
}

fn add(e: &mut BTreeSet<(usize, usize)>, u: usize, v: usize) -> bool {
    u != v && e.insert((u.min(v), u.max(v)))
}

/// Random spanning tree plus `extra` random edges.
pub fn random_connected(r: &mut ChaCha8Rng, n: usize, extra: usize) -> Graph {
    let mut e = BTreeSet::new();
    for v in 1..n {
        let u = r.gen_range(0..v);
        add(&mut e, u, v);
    }
    let mut tries = 0;
    while e.len() < n - 1 + extra && tries < 50 * (extra + 1) {
        tries += 1;
        add(&mut e, r.gen_range(0..n), r.gen_range(0..n));
    }
    Graph::new(n, e).unwrap()
}

/// Connected, minimum degree at least 2, maximum degree at most `max_deg`;
/// `density` controls how many edges go beyond the minimum.
pub fn random_min_deg2(r: &mut ChaCha8Rng, n: usize, max_deg: usize, density: f64) -> Graph {
    loop {
        let mut e = BTreeSet::new();
        for v in 1..n {
            let u = r.gen_range(0..v);
            add(&mut e, u, v);
        }
        let target = ((n * max_deg) as f64 * density / 2.0) as usize;
        let mut tries = 0;
        while tries < 20 * n * n {
            tries += 1;
            let d = degree(&e, n);
            let low: Vec<usize> = (0..n).filter(|&v| d[v] < 2).collect();
            let (u, v) = match low.first() {
                Some(&u) => (u, r.gen_range(0..n)),
                None if e.len() < target => (r.gen_range(0..n), r.gen_range(0..n)),
                None => break,
            };
            if u != v && d[u] < max_deg && d[v] < max_deg {
                add(&mut e, u, v);
            }
        }
        let d = degree(&e, n);
        if d.iter().all(|&x| (2..=max_deg).contains(&x)) {
            return Graph::new(n, e).unwrap();
        }
    }
}

/// Connected bipartite graph with minimum degree at least 2.
pub fn random_bipartite_min_deg2(r: &mut ChaCha8Rng, a: usize, b: usize, p: f64) -> Graph {
    loop {
        let mut e = BTreeSet::new();
        for i in 0..a {
            for j in 0..b {
                if r.gen_bool(p) {
                    e.insert((i, a + j));
                }
            }
        }
        let d = degree(&e, a + b);
        for v in 0..a + b {
            for _ in d[v]..2 {
                let w = if v < a { a + r.gen_range(0..b) } else { r.gen_range(0..a) };
                add(&mut e, v, w);
            }
        }
        let g = Graph::new(a + b, e.iter().copied()).unwrap();
        if g.is_connected() && g.min_degree() >= 2 {
            return g;
        }
    }
}

/// Spanning path `0, 1, …, n-1` plus random chords until every degree is at
/// least 4; the vertices are then shuffled and the path returned.
pub fn random_traceable_min_deg4(r: &mut ChaCha8Rng, n: usize) -> (Graph, Vec<usize>) {
    let mut e: BTreeSet<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    loop {
        let d = degree(&e, n);
        let Some(v) = (0..n).find(|&v| d[v] < 4) else { break };
        add(&mut e, v, r.gen_range(0..n));
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(r);
    let g = Graph::new(n, e.iter().map(|&(u, v)| (perm[u], perm[v]))).unwrap();
    (g, perm)
}

/// Named graphs and seeded random graphs with at most 9 vertices.
pub fn small_corpus() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    let fam = |k: FamilyKind, p: &[usize]| generate(&FamilySpec::new(k, p.to_vec())).unwrap();
    for n in 2..=9 {
        out.push((format!("K{n}"), fam(FamilyKind::Complete, &[n])));
        out.push((format!("P{n}"), fam(FamilyKind::Path, &[n])));
    }
    for n in 3..=9 {
        out.push((format!("C{n}"), fam(FamilyKind::Cycle, &[n])));
    }
    for a in 1..=4 {
        for b in a..=(9 - a).min(5) {
            out.push((format!("K{a},{b}"), fam(FamilyKind::CompleteBipartite, &[a, b])));
        }
    }
    let mut r = rng(9);
    for i in 0..40 {
        let n = r.gen_range(4..=9);
        let extra = r.gen_range(0..=n);
        out.push((format!("random{i}"), random_connected(&mut r, n, extra)));
    }
    out
}

/// Several random pieces of minimum degree 2 joined at shared vertices or by
/// bridges; with `twins`, pieces come in isomorphic copies hung at the same
/// vertex.
pub fn random_with_cut_vertices(r: &mut ChaCha8Rng, pieces: usize, max_deg: usize, twins: bool) -> Graph {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut n = 0;
    let mut attach: Vec<usize> = Vec::new();
    let mut i = 0;
    while i < pieces {
        let size = r.gen_range(3..=8);
        let density = r.gen_range(0.0..1.0);
        let p = random_min_deg2(r, size, max_deg.min(size - 1).max(2), density);
        let copies = if twins && !attach.is_empty() && i + 1 < pieces { 2 } else { 1 };
        let host = if attach.is_empty() { None } else { Some(attach[r.gen_range(0..attach.len())]) };
        let bridge = host.is_some() && !twins && r.gen_bool(0.3);
        for _ in 0..copies {
            let base = n;
            let glue_local = 0;
            let map = |x: usize| -> Option<usize> {
                match (host, bridge) {
                    (Some(h), false) if x == glue_local => Some(h),
                    _ => None,
                }
            };
            let mut index = vec![0; p.n()];
            for (x, slot) in index.iter_mut().enumerate() {
                *slot = match map(x) {
                    Some(h) => h,
                    None => {
                        n += 1;
                        n - 1
                    }
                };
            }
            edges.extend(p.edges().iter().map(|&(u, v)| (index[u], index[v])));
            if let (Some(h), true) = (host, bridge) {
                edges.push((h, index[glue_local]));
            }
            attach.extend(index.iter().copied().filter(|&v| v >= base));
            i += 1;
        }
    }
    Graph::new(n, edges).unwrap()
}

/// All degrees even: a Hamiltonian cycle plus up to `extra` edge-disjoint
/// random cycles.
pub fn random_eulerian(r: &mut ChaCha8Rng, n: usize, extra: usize) -> Graph {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(r);
    let mut e = BTreeSet::new();
    for i in 0..n {
        add(&mut e, perm[i], perm[(i + 1) % n]);
    }
    for _ in 0..extra {
        for _ in 0..50 {
            let len = r.gen_range(3..=n);
            let mut vs: Vec<usize> = (0..n).collect();
            vs.shuffle(r);
            vs.truncate(len);
            let cyc: Vec<(usize, usize)> = (0..len)
                .map(|i| (vs[i].min(vs[(i + 1) % len]), vs[i].max(vs[(i + 1) % len])))
                .collect();
            if cyc.iter().all(|p| !e.contains(p)) {
                e.extend(cyc);
                break;
            }
        }
    }
    Graph::new(n, e).unwrap()
}

/// Per-vertex color counts, computed without the library's verifiers.
pub fn tallies(edges: &[(usize, usize)], n: usize, colors: &[u32]) -> Vec<std::collections::BTreeMap<u32, usize>> {
    let mut t = vec![std::collections::BTreeMap::new(); n];
    for (&(u, v), &c) in edges.iter().zip(colors) {
        *t[u].entry(c).or_insert(0) += 1;
        *t[v].entry(c).or_insert(0) += 1;
    }
    t
}

/// Strict majority: no color on more than half the edges at any vertex.
pub fn is_majority(g: &Graph, colors: &[u32]) -> bool {
    tallies(g.edges(), g.n(), colors)
        .iter()
        .enumerate()
        .all(|(v, t)| t.values().all(|&c| 2 * c <= g.degree(v)))
}

pub fn distinct_colors(colors: &[u32]) -> usize {
    colors.iter().collect::<BTreeSet<_>>().len()
}

/// Smallest `r` with `r^k ≥ x`.
pub fn ceil_root(x: usize, k: u32) -> usize {
    (0..).find(|&r: &usize| r.pow(k) >= x).unwrap()
}

/// Permutations that map every edge onto an edge of the same color, found
/// by trying all `n!` of them (Heap's algorithm).
pub fn naive_group_order(g: &Graph, colors: &[u32]) -> u128 {
    let n = g.n();
    let mut label = vec![vec![None; n]; n];
    for (&(u, v), &c) in g.edges().iter().zip(colors) {
        label[u][v] = Some(c);
        label[v][u] = Some(c);
    }
    let preserves = |p: &[usize]| g.edges().iter().all(|&(u, v)| label[p[u]][p[v]] == label[u][v]);
    let mut p: Vec<usize> = (0..n).collect();
    let mut count = u128::from(preserves(&p));
    let mut c = vec![0; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            count += u128::from(preserves(&p));
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    count
}
