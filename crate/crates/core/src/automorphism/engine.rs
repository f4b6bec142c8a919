//! Individualization–refinement search over labelled (di)graphs.
//!
//! A [`Structure`] is a vertex set with labelled arcs and an initial vertex
//! labelling. Refinement splits cells by the multiset of
//! `(neighbor cell, direction, arc label)` triples until the ordered partition
//! is equitable. Everything here is equivariant, so an isomorphism maps the
//! refined partition of one side onto the refined partition of the other, and
//! the backtracking in [`find_isomorphism`] is complete.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use super::Permutation;
use crate::graph::{Digraph, Graph};

#[derive(Debug, Clone)]
pub(crate) struct Structure {
    n: usize,
    directed: bool,
    out: Vec<Vec<(usize, u64)>>,
    inn: Vec<Vec<(usize, u64)>>,
    vertex_labels: Vec<u64>,
}

impl Structure {
    /// `edge_labels[id]` labels edge `id`; `vertex_labels` defaults to all zero.
    pub(crate) fn from_graph(g: &Graph, edge_labels: Option<&[u64]>, vertex_labels: Option<Vec<u64>>) -> Self {
        let n = g.n();
        let mut out = vec![Vec::new(); n];
        for (id, &(u, v)) in g.edges().iter().enumerate() {
            let l = edge_labels.map_or(0, |ls| ls[id]);
            out[u].push((v, l));
            out[v].push((u, l));
        }
        for list in &mut out {
            list.sort_unstable();
        }
        Self {
            n,
            directed: false,
            out,
            inn: Vec::new(),
            vertex_labels: vertex_labels.unwrap_or_else(|| vec![0; n]),
        }
    }

    pub(crate) fn from_digraph(d: &Digraph, arc_labels: Option<&[u64]>, vertex_labels: Option<Vec<u64>>) -> Self {
        let n = d.n();
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        for (id, &(u, v)) in d.arcs().iter().enumerate() {
            let l = arc_labels.map_or(0, |ls| ls[id]);
            out[u].push((v, l));
            inn[v].push((u, l));
        }
        for list in out.iter_mut().chain(inn.iter_mut()) {
            list.sort_unstable();
        }
        Self {
            n,
            directed: true,
            out,
            inn,
            vertex_labels: vertex_labels.unwrap_or_else(|| vec![0; n]),
        }
    }

    pub(crate) fn n(&self) -> usize {
        self.n
    }

    fn arc_label(&self, u: usize, v: usize) -> Option<u64> {
        let list = &self.out[u];
        list.binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| list[i].1)
    }

    /// Does `perm` map `self` onto `other`, labels included?
    pub(crate) fn maps_onto(&self, other: &Structure, perm: &[usize]) -> bool {
        if self.n != other.n || self.directed != other.directed {
            return false;
        }
        (0..self.n).all(|u| {
            let pu = perm[u];
            self.vertex_labels[u] == other.vertex_labels[pu]
                && self.out[u].len() == other.out[pu].len()
                && self.out[u]
                    .iter()
                    .all(|&(v, l)| other.arc_label(pu, perm[v]) == Some(l))
        })
    }

    pub(crate) fn initial_partition(&self) -> Partition {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| (self.vertex_labels[v], v));
        let mut cells: Vec<Vec<usize>> = Vec::new();
        let mut labels = Vec::new();
        for v in order {
            let l = self.vertex_labels[v];
            if labels.last() == Some(&l) {
                cells.last_mut().expect("cell exists").push(v);
            } else {
                labels.push(l);
                cells.push(vec![v]);
            }
        }
        Partition::from_cells(self.n, cells)
    }

    fn signature(&self, v: usize, cell_of: &[usize]) -> Vec<(usize, u8, u64)> {
        let mut sig: Vec<(usize, u8, u64)> = self.out[v]
            .iter()
            .map(|&(w, l)| (cell_of[w], 0, l))
            .collect();
        if self.directed {
            sig.extend(self.inn[v].iter().map(|&(w, l)| (cell_of[w], 1, l)));
        }
        sig.sort_unstable();
        sig
    }

    /// Refines to an equitable partition, returning a trace that two
    /// isomorphic branches must share.
    pub(crate) fn refine(&self, mut p: Partition) -> (Partition, Vec<u64>) {
        let mut trace = Vec::new();
        {
            let mut h = DefaultHasher::new();
            for c in &p.cells {
                (c.len(), self.vertex_labels[c[0]]).hash(&mut h);
            }
            trace.push(h.finish());
        }
        loop {
            let mut changed = false;
            let mut next: Vec<Vec<usize>> = Vec::with_capacity(p.cells.len());
            for (ci, cell) in p.cells.iter().enumerate() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<(usize, u8, u64)>, usize)> = cell
                    .iter()
                    .map(|&v| (self.signature(v, &p.cell_of), v))
                    .collect();
                keyed.sort_unstable();
                let split = keyed.windows(2).any(|w| w[0].0 != w[1].0);
                if !split {
                    next.push(cell.clone());
                    continue;
                }
                changed = true;
                let mut h = DefaultHasher::new();
                ci.hash(&mut h);
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        (i - start).hash(&mut h);
                        keyed[start].0.hash(&mut h);
                        next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
                trace.push(h.finish());
            }
            p = Partition::from_cells(self.n, next);
            if !changed {
                break;
            }
        }
        (p, trace)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Partition {
    pub(crate) cells: Vec<Vec<usize>>,
    pub(crate) cell_of: Vec<usize>,
}

impl Partition {
    fn from_cells(n: usize, cells: Vec<Vec<usize>>) -> Self {
        let mut cell_of = vec![0; n];
        for (i, c) in cells.iter().enumerate() {
            for &v in c {
                cell_of[v] = i;
            }
        }
        Self { cells, cell_of }
    }

    pub(crate) fn is_discrete(&self) -> bool {
        self.cells.len() == self.cell_of.len()
    }

    /// First smallest non-singleton cell.
    pub(crate) fn target_cell(&self) -> Option<usize> {
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|&(i, c)| (c.len(), i))
            .map(|(i, _)| i)
    }

    /// Splits cell `t` into `[v]` followed by the rest.
    pub(crate) fn individualize(&self, t: usize, v: usize) -> Partition {
        let mut cells = Vec::with_capacity(self.cells.len() + 1);
        for (i, c) in self.cells.iter().enumerate() {
            if i == t {
                cells.push(vec![v]);
                cells.push(c.iter().copied().filter(|&w| w != v).collect());
            } else {
                cells.push(c.clone());
            }
        }
        Partition::from_cells(self.cell_of.len(), cells)
    }

    fn shape(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }
}

fn leaf_map(pa: &Partition, pb: &Partition) -> Vec<usize> {
    let mut perm = vec![0; pa.cell_of.len()];
    for (ca, cb) in pa.cells.iter().zip(&pb.cells) {
        perm[ca[0]] = cb[0];
    }
    perm
}

/// Searches for an isomorphism `a → b` compatible with the two (refined,
/// matching) partitions.
pub(crate) fn search(a: &Structure, b: &Structure, pa: &Partition, pb: &Partition) -> Option<Permutation> {
    if pa.is_discrete() {
        let perm = leaf_map(pa, pb);
        return a
            .maps_onto(b, &perm)
            .then(|| Permutation::from_images_unchecked(perm));
    }
    let t = pa.target_cell()?;
    let x = pa.cells[t][0];
    let (pa2, ta) = a.refine(pa.individualize(t, x));
    for &y in &pb.cells[t] {
        let (pb2, tb) = b.refine(pb.individualize(t, y));
        if ta != tb || pa2.shape() != pb2.shape() {
            continue;
        }
        if let Some(p) = search(a, b, &pa2, &pb2) {
            return Some(p);
        }
    }
    None
}

/// An isomorphism from `a` to `b` respecting the initial vertex labels.
pub(crate) fn find_isomorphism(a: &Structure, b: &Structure) -> Option<Permutation> {
    if a.n != b.n || a.directed != b.directed {
        return None;
    }
    let (pa, ta) = a.refine(a.initial_partition());
    let (pb, tb) = b.refine(b.initial_partition());
    if ta != tb || pa.shape() != pb.shape() {
        return None;
    }
    for (ca, cb) in pa.cells.iter().zip(&pb.cells) {
        if a.vertex_labels[ca[0]] != b.vertex_labels[cb[0]] {
            return None;
        }
    }
    search(a, b, &pa, &pb)
}

/// Generators and a base with orbit sizes for the automorphism group.
#[derive(Debug, Clone)]
pub(crate) struct GroupData {
    pub(crate) generators: Vec<Permutation>,
    pub(crate) base: Vec<usize>,
    pub(crate) orbit_sizes: Vec<usize>,
}

/// Computes the automorphism group along the refinement base. With
/// `first_only`, stops at the first non-identity automorphism found.
pub(crate) fn automorphisms(s: &Structure, first_only: bool) -> GroupData {
    let mut generators = Vec::new();
    let mut base = Vec::new();
    let mut orbit_sizes = Vec::new();
    let (mut p, _) = s.refine(s.initial_partition());
    while let Some(t) = p.target_cell() {
        let v = p.cells[t][0];
        let (pv, tv) = s.refine(p.individualize(t, v));
        let mut level: Vec<Permutation> = Vec::new();
        let mut in_orbit = vec![false; s.n];
        in_orbit[v] = true;
        let mut orbit = vec![v];
        for &w in &p.cells[t] {
            if in_orbit[w] {
                continue;
            }
            let (pw, tw) = s.refine(p.individualize(t, w));
            if tv != tw || pv.shape() != pw.shape() {
                continue;
            }
            if let Some(phi) = search(s, s, &pv, &pw) {
                generators.push(phi.clone());
                if first_only {
                    return GroupData {
                        generators,
                        base,
                        orbit_sizes,
                    };
                }
                level.push(phi);
                // orbit closure under the generators found at this level
                let mut i = 0;
                while i < orbit.len() {
                    let x = orbit[i];
                    for g in &level {
                        let y = g.apply(x);
                        if !in_orbit[y] {
                            in_orbit[y] = true;
                            orbit.push(y);
                        }
                    }
                    i += 1;
                }
            }
        }
        base.push(v);
        orbit_sizes.push(orbit.len());
        p = pv;
    }
    GroupData {
        generators,
        base,
        orbit_sizes,
    }
}
