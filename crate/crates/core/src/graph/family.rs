//! Named graph families, including the glued-cycle graphs that admit
//! majority distinguishing 2-colorings.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    /// `[n]`
    Complete,
    /// `[a, b]`
    CompleteBipartite,
    /// `[n]`, n ≥ 3
    Cycle,
    /// `[n]` vertices
    Path,
    /// Odd number (≥ 3) of cycle lengths glued along one shared central edge;
    /// the central edge is subdivided when the number of odd cycles is odd.
    GluedCycleEdge,
    /// Distinct even cycle lengths glued at one vertex.
    GluedCycleVertex,
    /// `C_{2k}` plus a path of length `l_i` parallel to every cycle edge.
    ChordPathCycle,
    /// `C_{2k}` plus `k` paths, the i-th joining `v_{2i}` and `v_{2i+2}`.
    AlternateChordPathCycle,
    /// `[]`
    Petersen,
}

impl FamilyKind {
    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Complete => "complete",
            FamilyKind::CompleteBipartite => "complete_bipartite",
            FamilyKind::Cycle => "cycle",
            FamilyKind::Path => "path",
            FamilyKind::GluedCycleEdge => "glued_cycle_edge",
            FamilyKind::GluedCycleVertex => "glued_cycle_vertex",
            FamilyKind::ChordPathCycle => "chord_path_cycle",
            FamilyKind::AlternateChordPathCycle => "alternate_chord_path_cycle",
            FamilyKind::Petersen => "petersen",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let all = [
            FamilyKind::Complete,
            FamilyKind::CompleteBipartite,
            FamilyKind::Cycle,
            FamilyKind::Path,
            FamilyKind::GluedCycleEdge,
            FamilyKind::GluedCycleVertex,
            FamilyKind::ChordPathCycle,
            FamilyKind::AlternateChordPathCycle,
            FamilyKind::Petersen,
        ];
        let key = s.replace('-', "_");
        all.into_iter()
            .find(|k| k.name() == key)
            .ok_or_else(|| format!("unknown family `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub params: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid parameters for {kind}: {reason}")]
pub struct InvalidFamilyParameters {
    pub kind: FamilyKind,
    pub reason: String,
}

/// How [`crate::construct::eulerian_2coloring`] picks its Euler circuit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CircuitOrder {
    /// Hierholzer's algorithm from vertex 0, smallest neighbor first.
    Hierholzer,
    /// A closed walk given as a vertex sequence (first = last).
    Explicit(Vec<usize>),
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, params: impl Into<Vec<usize>>) -> Self {
        Self {
            kind,
            params: params.into(),
        }
    }

    fn invalid(&self, reason: impl Into<String>) -> InvalidFamilyParameters {
        InvalidFamilyParameters {
            kind: self.kind,
            reason: reason.into(),
        }
    }

    fn arity(&self, k: usize) -> Result<(), InvalidFamilyParameters> {
        if self.params.len() == k {
            Ok(())
        } else {
            Err(self.invalid(format!("expected {k} parameter(s), got {}", self.params.len())))
        }
    }

    pub fn validate(&self) -> Result<(), InvalidFamilyParameters> {
        let p = &self.params;
        match self.kind {
            FamilyKind::Complete | FamilyKind::Path => {
                self.arity(1)?;
                if p[0] == 0 {
                    return Err(self.invalid("need at least one vertex"));
                }
            }
            FamilyKind::CompleteBipartite => {
                self.arity(2)?;
                if p[0] == 0 || p[1] == 0 {
                    return Err(self.invalid("both parts must be non-empty"));
                }
            }
            FamilyKind::Cycle => {
                self.arity(1)?;
                if p[0] < 3 {
                    return Err(self.invalid("a cycle needs at least 3 vertices"));
                }
            }
            FamilyKind::Petersen => self.arity(0)?,
            FamilyKind::GluedCycleEdge => {
                if p.len() < 3 || p.len().is_multiple_of(2) {
                    return Err(self.invalid("need an odd number (at least 3) of cycles"));
                }
                if p.iter().any(|&l| l < 3) {
                    return Err(self.invalid("cycle lengths must be at least 3"));
                }
            }
            FamilyKind::GluedCycleVertex => {
                if p.is_empty() {
                    return Err(self.invalid("need at least one cycle"));
                }
                if p.iter().any(|&l| l < 4 || l % 2 == 1) {
                    return Err(self.invalid("cycle lengths must be even and at least 4"));
                }
                let mut s = p.clone();
                s.sort_unstable();
                if s.windows(2).any(|w| w[0] == w[1]) {
                    return Err(self.invalid("cycle lengths must be distinct"));
                }
            }
            FamilyKind::ChordPathCycle => {
                if p.len() < 4 || p.len() % 2 == 1 {
                    return Err(self.invalid("need 2k path lengths with k ≥ 2"));
                }
                if p.iter().any(|&l| l < 2) {
                    return Err(self.invalid("path lengths must be at least 2"));
                }
                if p.iter().sum::<usize>() % 2 == 1 {
                    return Err(self.invalid("sum of path lengths must be even"));
                }
                if !dihedral_distinguishing(p) {
                    return Err(self.invalid("path lengths do not distinguish the cycle"));
                }
            }
            FamilyKind::AlternateChordPathCycle => {
                if p.len() < 3 {
                    return Err(self.invalid("need k ≥ 3 path lengths"));
                }
                if p.iter().any(|&l| l == 0 || l == 2) {
                    return Err(self.invalid("path lengths must be 1 or at least 3"));
                }
                if p.iter().sum::<usize>() % 2 == 1 {
                    return Err(self.invalid("sum of path lengths must be even"));
                }
                if !dihedral_distinguishing(p) {
                    return Err(self.invalid("path lengths do not distinguish the cycle"));
                }
            }
        }
        Ok(())
    }

    /// The closed walk used by the glued-cycle colorings: start at a central
    /// vertex and traverse the cycles from the shortest to the longest.
    pub fn euler_circuit(&self) -> Option<Vec<usize>> {
        self.validate().ok()?;
        match self.kind {
            FamilyKind::GluedCycleEdge => {
                let layout = edge_glued_layout(&self.params);
                let mut order: Vec<usize> = (0..self.params.len()).collect();
                order.sort_by_key(|&i| self.params[i]);
                let mut walk = vec![0];
                let mut at_u = true;
                for i in order {
                    let inner = &layout.inner[i];
                    if at_u {
                        walk.extend(inner.iter().copied());
                        walk.push(1);
                    } else {
                        walk.extend(inner.iter().rev().copied());
                        walk.push(0);
                    }
                    at_u = !at_u;
                }
                // odd number of cycles: we are at w = 1, close via the central edge
                if let Some(x) = layout.subdivision {
                    walk.push(x);
                }
                walk.push(0);
                Some(walk)
            }
            FamilyKind::GluedCycleVertex => {
                let layout = vertex_glued_layout(&self.params);
                let mut order: Vec<usize> = (0..self.params.len()).collect();
                order.sort_by_key(|&i| self.params[i]);
                let mut walk = vec![0];
                for i in order {
                    walk.extend(layout[i].iter().copied());
                    walk.push(0);
                }
                Some(walk)
            }
            _ => None,
        }
    }

    pub fn circuit_order(&self) -> CircuitOrder {
        self.euler_circuit()
            .map(CircuitOrder::Explicit)
            .unwrap_or(CircuitOrder::Hierholzer)
    }
}

/// True iff no non-identity rotation or reflection of the cyclic sequence
/// maps it onto itself.
fn dihedral_distinguishing(seq: &[usize]) -> bool {
    let n = seq.len();
    for shift in 1..n {
        if (0..n).all(|i| seq[i] == seq[(i + shift) % n]) {
            return false;
        }
    }
    for t in 0..n {
        if (0..n).all(|i| seq[i] == seq[(t + n - i) % n]) {
            return false;
        }
    }
    true
}

struct EdgeGlued {
    n: usize,
    inner: Vec<Vec<usize>>,
    subdivision: Option<usize>,
}

fn edge_glued_layout(lengths: &[usize]) -> EdgeGlued {
    let odd = lengths.iter().filter(|&&l| l % 2 == 1).count();
    let mut next = 2;
    let subdivision = if odd % 2 == 1 {
        next += 1;
        Some(2)
    } else {
        None
    };
    let inner = lengths
        .iter()
        .map(|&l| {
            let v: Vec<usize> = (next..next + l - 2).collect();
            next += l - 2;
            v
        })
        .collect();
    EdgeGlued {
        n: next,
        inner,
        subdivision,
    }
}

fn vertex_glued_layout(lengths: &[usize]) -> Vec<Vec<usize>> {
    let mut next = 1;
    lengths
        .iter()
        .map(|&l| {
            let v: Vec<usize> = (next..next + l - 1).collect();
            next += l - 1;
            v
        })
        .collect()
}

fn path_through(edges: &mut Vec<(usize, usize)>, ends: (usize, usize), inner: &[usize]) {
    let mut prev = ends.0;
    for &x in inner {
        edges.push((prev, x));
        prev = x;
    }
    edges.push((prev, ends.1));
}

/// Builds the family member described by `spec`.
pub fn generate(spec: &FamilySpec) -> Result<Graph, InvalidFamilyParameters> {
    spec.validate()?;
    let p = &spec.params;
    let mut edges = Vec::new();
    let n = match spec.kind {
        FamilyKind::Complete => {
            let n = p[0];
            edges.extend((0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))));
            n
        }
        FamilyKind::CompleteBipartite => {
            let (a, b) = (p[0], p[1]);
            edges.extend((0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))));
            a + b
        }
        FamilyKind::Cycle => {
            let n = p[0];
            edges.extend((0..n).map(|i| (i, (i + 1) % n)));
            n
        }
        FamilyKind::Path => {
            let n = p[0];
            edges.extend((1..n).map(|i| (i - 1, i)));
            n
        }
        FamilyKind::Petersen => {
            for i in 0..5 {
                edges.push((i, (i + 1) % 5));
                edges.push((i, i + 5));
                edges.push((5 + i, 5 + (i + 2) % 5));
            }
            10
        }
        FamilyKind::GluedCycleEdge => {
            let layout = edge_glued_layout(p);
            match layout.subdivision {
                Some(x) => {
                    edges.push((0, x));
                    edges.push((x, 1));
                }
                None => edges.push((0, 1)),
            }
            for inner in &layout.inner {
                path_through(&mut edges, (0, 1), inner);
            }
            layout.n
        }
        FamilyKind::GluedCycleVertex => {
            let layout = vertex_glued_layout(p);
            for inner in &layout {
                path_through(&mut edges, (0, 0), inner);
            }
            1 + layout.iter().map(Vec::len).sum::<usize>()
        }
        FamilyKind::ChordPathCycle => {
            let c = p.len();
            edges.extend((0..c).map(|i| (i, (i + 1) % c)));
            let mut next = c;
            for (i, &l) in p.iter().enumerate() {
                let inner: Vec<usize> = (next..next + l - 1).collect();
                next += l - 1;
                path_through(&mut edges, (i, (i + 1) % c), &inner);
            }
            next
        }
        FamilyKind::AlternateChordPathCycle => {
            let k = p.len();
            let c = 2 * k;
            edges.extend((0..c).map(|i| (i, (i + 1) % c)));
            let mut next = c;
            for (i, &l) in p.iter().enumerate() {
                // v_{2i} and v_{2i+2} with 1-based cycle labels
                let a = (2 * (i + 1) - 1) % c;
                let b = (2 * (i + 1) + 1) % c;
                let inner: Vec<usize> = (next..next + l - 1).collect();
                next += l - 1;
                path_through(&mut edges, (a, b), &inner);
            }
            next
        }
    };
    Ok(Graph::new(n, edges).expect("family constructions are simple graphs"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_and_bipartite() {
        let k5 = generate(&FamilySpec::new(FamilyKind::Complete, [5])).unwrap();
        assert_eq!(k5.m(), 10);
        let k23 = generate(&FamilySpec::new(FamilyKind::CompleteBipartite, [2, 3])).unwrap();
        assert_eq!(k23.degree_sequence(), vec![3, 3, 2, 2, 2]);
    }

    #[test]
    fn edge_glued_3_4_5() {
        let spec = FamilySpec::new(FamilyKind::GluedCycleEdge, [3, 4, 5]);
        let g = generate(&spec).unwrap();
        // two odd cycles: no subdivision; 1 central edge + 2 + 3 + 4 path edges
        assert_eq!(g.m(), 10);
        assert_eq!(g.n(), 2 + 1 + 2 + 3);
        assert!(g.degrees().iter().all(|d| d % 2 == 0));
        assert!(g.has_edge(0, 1));
    }

    #[test]
    fn edge_glued_subdivides_with_odd_count_of_odd_cycles() {
        let g = generate(&FamilySpec::new(FamilyKind::GluedCycleEdge, [3, 4, 4])).unwrap();
        assert!(!g.has_edge(0, 1));
        assert!(g.degrees().iter().all(|d| d % 2 == 0));
        assert_eq!(g.m() % 2, 0);
    }

    #[test]
    fn chord_path_cycle_degrees() {
        let g = generate(&FamilySpec::new(FamilyKind::ChordPathCycle, [2, 3, 4, 5])).unwrap();
        let mut ds = g.degrees();
        ds.sort_unstable();
        ds.dedup();
        assert_eq!(ds, vec![2, 4]);
        assert_eq!(g.m() % 2, 0);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(generate(&FamilySpec::new(FamilyKind::GluedCycleEdge, [3, 4])).is_err());
        assert!(generate(&FamilySpec::new(FamilyKind::GluedCycleVertex, [4, 4])).is_err());
        assert!(generate(&FamilySpec::new(FamilyKind::ChordPathCycle, [2, 2, 2, 2])).is_err());
        assert!(generate(&FamilySpec::new(FamilyKind::Cycle, [2])).is_err());
        assert!(generate(&FamilySpec::new(FamilyKind::AlternateChordPathCycle, [1, 3, 2])).is_err());
    }

    #[test]
    fn circuits_cover_every_edge_once() {
        for spec in [
            FamilySpec::new(FamilyKind::GluedCycleEdge, [3, 5, 7]),
            FamilySpec::new(FamilyKind::GluedCycleEdge, [4, 4, 3]),
            FamilySpec::new(FamilyKind::GluedCycleVertex, [8, 4, 6]),
        ] {
            let g = generate(&spec).unwrap();
            let walk = spec.euler_circuit().unwrap();
            assert_eq!(walk.first(), walk.last());
            let mut used = vec![false; g.m()];
            for w in walk.windows(2) {
                let id = g.edge_id(w[0], w[1]).expect("walk follows edges");
                assert!(!used[id]);
                used[id] = true;
            }
            assert!(used.into_iter().all(|u| u));
        }
    }
}
