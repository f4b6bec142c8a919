//! Balanced 2-colorings along Euler circuits, and the 4-color almost majority
//! coloring built from them.

use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::util::{euler_circuit, misra_gries, split_vertices, walk_edges};
use super::{certify_majority, ConstructError, Result};
use crate::coloring::{Color, EdgeColoring, Palette};
use crate::graph::{CircuitOrder, Graph, Vertex};
use crate::verify::{verify_majority_distinguishing, MajorityMode, VerificationReport};

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoColoringSpec {
    /// Where the excess goes when every degree is even and `|E|` is odd.
    pub special_vertex: Option<Vertex>,
    /// Vertices that must not become special.
    pub forbidden_special: Vec<Vertex>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoColoring {
    pub coloring: EdgeColoring,
    /// Set exactly when the graph has only even degrees and an odd number of
    /// edges; this vertex carries `d/2 + 1` edges of one color.
    pub special_vertex: Option<Vertex>,
}

/// Colors one connected edge set with 0/1 so that every vertex sees each
/// color at most `⌈d/2⌉` times, except a special vertex in the all-even,
/// odd-size case. `pick` chooses that vertex among the set's vertices.
pub(crate) fn balanced_component(
    n: usize,
    edges: &[(usize, usize)],
    pick: &dyn Fn(&[Vertex]) -> Option<Vertex>,
    rng: Option<&mut ChaCha8Rng>,
) -> (Vec<Color>, Option<Vertex>) {
    let mut deg = vec![0usize; n];
    for &(u, v) in edges {
        deg[u] += 1;
        deg[v] += 1;
    }
    let odd: Vec<Vertex> = (0..n).filter(|&v| deg[v] % 2 == 1).collect();
    let mut all = edges.to_vec();
    let (start, special) = if !odd.is_empty() {
        all.extend(odd.iter().map(|&v| (n, v)));
        (n, None)
    } else {
        let present: Vec<Vertex> = (0..n).filter(|&v| deg[v] > 0).collect();
        if edges.len() % 2 == 1 {
            let u = pick(&present).unwrap_or(present[0]);
            (u, Some(u))
        } else {
            (pick(&present).unwrap_or(present[0]), None)
        }
    };
    let circuit = euler_circuit(n + 1, &all, start, rng);
    let mut colors = vec![0; edges.len()];
    for (step, &id) in circuit.iter().enumerate() {
        if id < edges.len() {
            colors[id] = (step % 2) as Color;
        }
    }
    (colors, special)
}

/// Runs [`balanced_component`] on every connected component of the edge subset
/// `ids` of `g`. Returns `(edge id, color)` pairs and the special vertices.
pub(crate) fn balanced_on_edges(
    g: &Graph,
    ids: &[usize],
    pick: &dyn Fn(&[Vertex]) -> Option<Vertex>,
    mut rng: Option<&mut ChaCha8Rng>,
) -> (Vec<(usize, Color)>, Vec<Vertex>) {
    let mut parent: Vec<usize> = (0..g.n()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let nx = p[y];
            p[y] = r;
            y = nx;
        }
        r
    }
    for &id in ids {
        let (u, v) = g.edge(id);
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for &id in ids {
        let r = find(&mut parent, g.edge(id).0);
        groups.entry(r).or_default().push(id);
    }
    let mut out = Vec::with_capacity(ids.len());
    let mut specials = Vec::new();
    for group in groups.values() {
        let edges: Vec<(usize, usize)> = group.iter().map(|&id| g.edge(id)).collect();
        let (colors, special) = balanced_component(g.n(), &edges, pick, rng.as_deref_mut());
        out.extend(group.iter().copied().zip(colors));
        specials.extend(special);
    }
    (out, specials)
}

/// Balanced edge 2-coloring of a connected graph: every vertex sees each
/// color at most `⌈d/2⌉` times, except that when all degrees are even and
/// `|E|` is odd, the special vertex sees one color `d/2 + 1` times.
pub fn two_coloring_balanced(g: &Graph, spec: &TwoColoringSpec) -> Result<TwoColoring> {
    if g.m() == 0 {
        return Err(ConstructError::EmptyGraph);
    }
    let active: Vec<Vertex> = (0..g.n()).filter(|&v| g.degree(v) > 0).collect();
    if !g.spanning_subgraph(0..g.m()).induced(&active).0.is_connected() {
        return Err(ConstructError::NotConnected);
    }
    if let Some(u) = spec.special_vertex {
        if u >= g.n() || g.degree(u) == 0 || spec.forbidden_special.contains(&u) {
            return Err(ConstructError::Precondition(format!("vertex {u} cannot be special")));
        }
    }
    let pick = |present: &[Vertex]| {
        spec.special_vertex
            .or_else(|| present.iter().copied().find(|v| !spec.forbidden_special.contains(v)))
    };
    let (colors, special) = balanced_component(g.n(), g.edges(), &pick, None);
    if special.is_some_and(|u| spec.forbidden_special.contains(&u)) {
        return Err(ConstructError::Precondition("every vertex is forbidden as special".into()));
    }
    let coloring = EdgeColoring::new(colors, Palette::numbered(2));
    // certify the exact per-case counts
    for (v, t) in coloring.tallies(g).iter().enumerate() {
        let d = g.degree(v);
        let limit = if special == Some(v) { d / 2 + 1 } else { d.div_ceil(2) };
        if let Some((&c, &count)) = t.iter().find(|&(_, &count)| count > limit) {
            return Err(ConstructError::VerifierRejected(format!(
                "vertex {v} has {count} edges of color {c}, limit {limit}"
            )));
        }
    }
    Ok(TwoColoring {
        coloring,
        special_vertex: special,
    })
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.m() == 0 {
        return Err(ConstructError::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(ConstructError::NotConnected);
    }
    Ok(())
}

/// Almost majority coloring with at most four colors (at most two when every
/// vertex of degree at least two has even degree and a leaf exists or `|E|`
/// is even).
pub fn almost_majority_4(g: &Graph) -> Result<EdgeColoring> {
    require_connected(g)?;
    let max_deg = |present: &[Vertex]| present.iter().copied().max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)));
    let all: Vec<usize> = (0..g.m()).collect();

    if (0..g.n()).all(|v| g.degree(v) < 2 || g.degree(v).is_multiple_of(2)) {
        let (pairs, specials) = balanced_on_edges(g, &all, &max_deg, None);
        let mut colors = vec![0; g.m()];
        for (id, c) in pairs {
            colors[id] = c;
        }
        // odd size, no leaves: move one surplus edge at the special vertex to a third color
        if let Some(&u) = specials.first() {
            let tally0 = g.incident(u).iter().filter(|&&(_, id)| colors[id] == 0).count();
            let surplus = if 2 * tally0 > g.degree(u) { 0 } else { 1 };
            let &(_, id) = g
                .incident(u)
                .iter()
                .find(|&&(_, id)| colors[id] == surplus)
                .expect("special vertex has a surplus color");
            colors[id] = 2;
        }
        let k = colors.iter().max().map_or(1, |&c| c as usize + 1);
        return certify_majority(g, EdgeColoring::new(colors, Palette::numbered(k)), MajorityMode::Almost);
    }

    // two rounds of balanced 2-colorings
    let (first, _) = balanced_on_edges(g, &all, &max_deg, None);
    let mut colors = vec![0; g.m()];
    for &(id, c) in &first {
        colors[id] = 2 * c;
    }
    for half in 0..2 {
        let class: Vec<usize> = first.iter().filter(|&&(_, c)| c == half).map(|&(id, _)| id).collect();
        let (second, _) = balanced_on_edges(g, &class, &max_deg, None);
        for (id, c) in second {
            colors[id] = 2 * half + c;
        }
    }
    let iterated = EdgeColoring::new(colors, Palette::numbered(4));
    if let Ok(c) = certify_majority(g, iterated, MajorityMode::Almost) {
        return Ok(c);
    }
    // fall back: cut every vertex into parts of two or three edges and color
    // the split graph properly with Δ + 1 = 4 colors
    let (n_split, edges) = split_vertices(g, parts_2_3);
    let colors = misra_gries(n_split, &edges);
    certify_majority(g, EdgeColoring::new(colors, Palette::numbered(4)), MajorityMode::Almost)
}

/// Part sizes for degree `d`: threes first, then twos; a single part below 2.
pub(crate) fn parts_2_3(d: usize) -> Vec<usize> {
    match d {
        0 => vec![],
        1 => vec![1],
        _ => {
            let (threes, twos) = match d % 3 {
                0 => (d / 3, 0),
                1 => ((d - 4) / 3, 2),
                _ => (d / 3, 1),
            };
            let mut p = vec![3; threes];
            p.extend(std::iter::repeat_n(2, twos));
            p
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerianColoring {
    pub coloring: EdgeColoring,
    /// Majority is guaranteed; this report also says whether the coloring is
    /// distinguishing.
    pub report: VerificationReport,
}

impl EulerianColoring {
    pub fn is_distinguishing(&self) -> bool {
        self.report.witness_automorphism.is_none()
    }
}

/// Alternating 2-coloring along an Euler circuit of a connected graph with
/// even degrees and an even number of edges.
pub fn eulerian_2coloring(g: &Graph, order: &CircuitOrder) -> Result<EulerianColoring> {
    require_connected(g)?;
    if (0..g.n()).any(|v| g.degree(v) % 2 == 1) {
        return Err(ConstructError::NotEulerian);
    }
    if g.m() % 2 == 1 {
        return Err(ConstructError::OddEdgeCount);
    }
    let circuit = match order {
        CircuitOrder::Hierholzer => euler_circuit(g.n(), g.edges(), 0, None),
        CircuitOrder::Explicit(walk) => walk_edges(g, walk)
            .ok_or_else(|| ConstructError::Precondition("walk is not an Euler circuit of the graph".into()))?,
    };
    let mut colors = vec![0; g.m()];
    for (step, &id) in circuit.iter().enumerate() {
        colors[id] = (step % 2) as Color;
    }
    let coloring = certify_majority(g, EdgeColoring::new(colors, Palette::numbered(2)), MajorityMode::Strict)?;
    let report = verify_majority_distinguishing(g, &coloring)?;
    Ok(EulerianColoring { coloring, report })
}
