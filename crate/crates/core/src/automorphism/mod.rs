//! Automorphism groups, stabilizers and color-preserving subgroups.
//!
//! Every query is answered by one individualization–refinement engine.
//! Edge colors become arc labels and fixed vertices become vertex labels, so
//! "automorphisms of `g` fixing `a` and preserving `c`" is just the
//! automorphism group of a labelled structure.

mod engine;
mod perm;

pub use perm::Permutation;

use engine::Structure;

use crate::coloring::{ArcColoring, ColoringError, EdgeColoring};
use crate::graph::{Digraph, Graph, Vertex};

/// What a group is the automorphism group of. Kept so that
/// [`colorings_isomorphic`] can search inside the same group.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Source {
    vertex_labels: Vec<u64>,
    edge_labels: Option<Vec<u64>>,
}

/// A permutation group given by generators together with a base and the
/// orbit sizes along it, so the order is exact.
#[derive(Debug, Clone)]
pub struct AutGroup {
    n: usize,
    generators: Vec<Permutation>,
    base: Vec<Vertex>,
    orbit_sizes: Vec<usize>,
    source: Source,
}

impl AutGroup {
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn base(&self) -> &[Vertex] {
        &self.base
    }

    /// Basic orbit sizes along [`AutGroup::base`]; their product is the order.
    pub fn orbit_sizes(&self) -> &[usize] {
        &self.orbit_sizes
    }

    /// Group order, or `None` if it does not fit in a `u128`.
    pub fn order(&self) -> Option<u128> {
        self.orbit_sizes
            .iter()
            .try_fold(1u128, |acc, &k| acc.checked_mul(k as u128))
    }

    /// Exact group order in decimal.
    pub fn order_string(&self) -> String {
        // little-endian base-10^9 limbs
        let mut limbs: Vec<u64> = vec![1];
        for &k in &self.orbit_sizes {
            let mut carry = 0u64;
            for limb in &mut limbs {
                let x = *limb * k as u64 + carry;
                *limb = x % 1_000_000_000;
                carry = x / 1_000_000_000;
            }
            while carry > 0 {
                limbs.push(carry % 1_000_000_000);
                carry /= 1_000_000_000;
            }
        }
        let mut s = limbs.last().expect("non-empty").to_string();
        for limb in limbs.iter().rev().skip(1) {
            s.push_str(&format!("{limb:09}"));
        }
        s
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.is_empty()
    }

    /// Orbits of the group on vertices, each sorted, ordered by least element.
    pub fn orbits(&self) -> Vec<Vec<Vertex>> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for g in &self.generators {
            for v in 0..self.n {
                let (a, b) = (find(&mut parent, v), find(&mut parent, g.apply(v)));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut orbits: Vec<Vec<Vertex>> = Vec::new();
        let mut index = vec![usize::MAX; self.n];
        for v in 0..self.n {
            let r = find(&mut parent, v);
            if index[r] == usize::MAX {
                index[r] = orbits.len();
                orbits.push(Vec::new());
            }
            orbits[index[r]].push(v);
        }
        orbits
    }

    /// Orbit of a single vertex.
    pub fn orbit(&self, v: Vertex) -> Vec<Vertex> {
        self.orbits()
            .into_iter()
            .find(|o| o.contains(&v))
            .unwrap_or_else(|| vec![v])
    }
}

fn fixed_labels(n: usize, fixed: &[Vertex]) -> Vec<u64> {
    let mut labels = vec![0; n];
    for (i, &v) in fixed.iter().enumerate() {
        labels[v] = i as u64 + 1;
    }
    labels
}

fn edge_labels(c: &EdgeColoring) -> Vec<u64> {
    c.colors.iter().map(|&x| u64::from(x) + 1).collect()
}

fn build(s: &Structure, source: Source) -> AutGroup {
    let data = engine::automorphisms(s, false);
    AutGroup {
        n: s.n(),
        generators: data.generators,
        base: data.base,
        orbit_sizes: data.orbit_sizes,
        source,
    }
}

pub fn automorphism_group(g: &Graph) -> AutGroup {
    stabilizer(g, &[])
}

/// Automorphisms of `g` fixing every vertex of `fixed`.
pub fn stabilizer(g: &Graph, fixed: &[Vertex]) -> AutGroup {
    let s = Structure::from_graph(g, None, Some(fixed_labels(g.n(), fixed)));
    build(
        &s,
        Source {
            vertex_labels: fixed_labels(g.n(), fixed),
            edge_labels: None,
        },
    )
}

pub fn is_asymmetric(g: &Graph) -> bool {
    let s = Structure::from_graph(g, None, None);
    engine::automorphisms(&s, true).generators.is_empty()
}

/// Automorphisms of `g` that preserve `c` edge by edge.
pub fn color_preserving_group(g: &Graph, c: &EdgeColoring) -> Result<AutGroup, ColoringError> {
    color_preserving_stabilizer(g, c, &[])
}

/// Automorphisms fixing `fixed` pointwise and preserving `c`.
pub fn color_preserving_stabilizer(g: &Graph, c: &EdgeColoring, fixed: &[Vertex]) -> Result<AutGroup, ColoringError> {
    c.check(g)?;
    let labels = edge_labels(c);
    let s = Structure::from_graph(g, Some(&labels), Some(fixed_labels(g.n(), fixed)));
    Ok(build(
        &s,
        Source {
            vertex_labels: fixed_labels(g.n(), fixed),
            edge_labels: Some(labels),
        },
    ))
}

/// A non-identity color-preserving automorphism, if any.
pub fn find_color_preserving_automorphism(g: &Graph, c: &EdgeColoring) -> Result<Option<Permutation>, ColoringError> {
    c.check(g)?;
    Ok(labelled_witness(g, &edge_labels(c), &[]))
}

/// A non-identity automorphism of `g` preserving the edge labels and fixing
/// every vertex in `fixed`. Labels are opaque; a partial coloring can use 0
/// for uncolored edges.
pub fn labelled_witness(g: &Graph, edge_labels: &[u64], fixed: &[Vertex]) -> Option<Permutation> {
    let s = Structure::from_graph(g, Some(edge_labels), Some(fixed_labels(g.n(), fixed)));
    engine::automorphisms(&s, true).generators.into_iter().next()
}

/// Group of automorphisms preserving edge labels and vertex labels.
pub fn labelled_group(g: &Graph, edge_labels: &[u64], vertex_labels: &[u64]) -> AutGroup {
    let s = Structure::from_graph(g, Some(edge_labels), Some(vertex_labels.to_vec()));
    let data = engine::automorphisms(&s, false);
    AutGroup {
        n: g.n(),
        generators: data.generators,
        base: data.base,
        orbit_sizes: data.orbit_sizes,
        source: Source {
            vertex_labels: vertex_labels.to_vec(),
            edge_labels: Some(edge_labels.to_vec()),
        },
    }
}

/// An isomorphism `g1 → g2` carrying vertex labels and edge labels of one
/// onto the other.
pub fn find_labelled_isomorphism(
    g1: &Graph,
    edge_labels1: &[u64],
    vertex_labels1: &[u64],
    g2: &Graph,
    edge_labels2: &[u64],
    vertex_labels2: &[u64],
) -> Option<Permutation> {
    if g1.n() != g2.n() || g1.m() != g2.m() {
        return None;
    }
    let a = Structure::from_graph(g1, Some(edge_labels1), Some(vertex_labels1.to_vec()));
    let b = Structure::from_graph(g2, Some(edge_labels2), Some(vertex_labels2.to_vec()));
    engine::find_isomorphism(&a, &b)
}

/// Is there `φ` in `group` with `c1(uv) = c2(φ(u)φ(v))` for every edge?
///
/// `group` must have been computed on `g` by this module; the search runs
/// over the same labelled structure.
pub fn colorings_isomorphic(
    g: &Graph,
    c1: &EdgeColoring,
    c2: &EdgeColoring,
    group: &AutGroup,
) -> Result<bool, ColoringError> {
    c1.check(g)?;
    c2.check(g)?;
    if c1 == c2 {
        return Ok(true);
    }
    let combine = |c: &EdgeColoring| -> Vec<u64> {
        c.colors
            .iter()
            .enumerate()
            .map(|(id, &x)| {
                let base = group.source.edge_labels.as_ref().map_or(0, |l| l[id]);
                (base << 32) | (u64::from(x) + 1)
            })
            .collect()
    };
    let vl = group.source.vertex_labels.clone();
    let a = Structure::from_graph(g, Some(&combine(c1)), Some(vl.clone()));
    let b = Structure::from_graph(g, Some(&combine(c2)), Some(vl));
    Ok(engine::find_isomorphism(&a, &b).is_some())
}

pub fn digraph_automorphism_group(d: &Digraph) -> AutGroup {
    let s = Structure::from_digraph(d, None, None);
    build(
        &s,
        Source {
            vertex_labels: vec![0; d.n()],
            edge_labels: None,
        },
    )
}

pub fn arc_color_preserving_group(d: &Digraph, c: &ArcColoring) -> Result<AutGroup, ColoringError> {
    c.check(d)?;
    let labels: Vec<u64> = c.colors.iter().map(|&x| u64::from(x) + 1).collect();
    let s = Structure::from_digraph(d, Some(&labels), None);
    Ok(build(
        &s,
        Source {
            vertex_labels: vec![0; d.n()],
            edge_labels: Some(labels),
        },
    ))
}

pub fn find_arc_color_preserving_automorphism(d: &Digraph, c: &ArcColoring) -> Result<Option<Permutation>, ColoringError> {
    c.check(d)?;
    let labels: Vec<u64> = c.colors.iter().map(|&x| u64::from(x) + 1).collect();
    Ok(labelled_arc_witness(d, &labels, &[]))
}

/// Digraph analogue of [`labelled_witness`].
pub fn labelled_arc_witness(d: &Digraph, arc_labels: &[u64], fixed: &[Vertex]) -> Option<Permutation> {
    let s = Structure::from_digraph(d, Some(arc_labels), Some(fixed_labels(d.n(), fixed)));
    engine::automorphisms(&s, true).generators.into_iter().next()
}

/// Is `p` an automorphism of `g`?
pub fn is_automorphism(g: &Graph, p: &Permutation) -> bool {
    p.len() == g.n()
        && g.edges()
            .iter()
            .all(|&(u, v)| g.has_edge(p.apply(u), p.apply(v)))
}

/// Image of edge `id` under `p`. `p` must be an automorphism.
pub fn edge_image(g: &Graph, p: &Permutation, id: usize) -> usize {
    let (u, v) = g.edge(id);
    g.edge_id(p.apply(u), p.apply(v))
        .expect("permutation is an automorphism")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
    }

    #[test]
    fn small_orders() {
        assert_eq!(automorphism_group(&complete(4)).order(), Some(24));
        assert_eq!(automorphism_group(&cycle(5)).order(), Some(10));
        let p4 = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(automorphism_group(&p4).order(), Some(2));
        assert_eq!(stabilizer(&cycle(6), &[0]).order(), Some(2));
        assert_eq!(stabilizer(&cycle(6), &[0, 1]).order(), Some(1));
        assert_eq!(stabilizer(&complete(4), &[0]).order(), Some(6));
    }

    #[test]
    fn big_order_string() {
        let k = automorphism_group(&complete(40));
        assert_eq!(k.order(), None);
        assert_eq!(
            k.order_string(),
            "815915283247897734345611269596115894272000000000"
        );
    }

    #[test]
    fn c4_alternating() {
        let g = cycle(4);
        // edges (0,1) (0,3) (1,2) (2,3)
        let c = EdgeColoring::numbered(vec![0, 1, 1, 0]);
        assert_eq!(color_preserving_group(&g, &c).unwrap().order(), Some(4));
    }

    #[test]
    fn isomorphic_colorings_on_c4() {
        let g = cycle(4);
        let grp = automorphism_group(&g);
        let one = EdgeColoring::numbered(vec![1, 0, 0, 0]);
        let opp = EdgeColoring::numbered(vec![0, 0, 1, 0]);
        let two = EdgeColoring::numbered(vec![1, 1, 0, 0]);
        assert!(colorings_isomorphic(&g, &one, &opp, &grp).unwrap());
        assert!(!colorings_isomorphic(&g, &one, &two, &grp).unwrap());
        // inside the trivial stabilizer of two adjacent vertices nothing moves
        let st = stabilizer(&g, &[0, 1]);
        assert!(!colorings_isomorphic(&g, &one, &opp, &st).unwrap());
    }

    #[test]
    fn orbits_of_path() {
        let p4 = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(automorphism_group(&p4).orbits(), vec![vec![0, 3], vec![1, 2]]);
    }
}
