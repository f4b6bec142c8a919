//! Exhaustive oracles for the four edge indices and the two arc indices.
//!
//! The search tries `k = 1, 2, …` in turn and backtracks over edges in order
//! of decreasing endpoint-degree sum. Colors are symmetry-broken by first
//! occurrence, majority kinds prune on per-vertex tallies with a capacity
//! lookahead, and the distinguishing test runs only on complete colorings.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::automorphism::{labelled_arc_witness, labelled_witness};
use crate::coloring::{ArcColoring, Color, EdgeColoring};
use crate::graph::{find_asymmetric_spanning_subgraph, Digraph, Graph};
use crate::verify::IndexKind;

/// Node budget used when the caller has no opinion.
pub const DEFAULT_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("budget exhausted while searching with {k} colors")]
    BudgetExhausted { k: usize },
    #[error("no valid coloring with at most {k_max} colors")]
    InfeasibleUpToKMax { k_max: usize },
    #[error("input is not connected")]
    NotConnected,
    #[error("digraph is not symmetric")]
    NotSymmetric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ArcIndexKind {
    ArcMajority,
    ArcMajorityDistinguishing,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactResult<C> {
    pub k: usize,
    pub witness: C,
    /// Search nodes spent over all `k`.
    pub nodes: u64,
}

/// A search instance: every item (edge or arc) lies in two slots (the
/// endpoint vertices, or the out-slot of the tail and in-slot of the head).
struct Problem<'a> {
    slots: Vec<[usize; 2]>,
    slot_size: Vec<usize>,
    /// Per-slot cap on a single color, or no majority pruning.
    caps: Option<Vec<usize>>,
    order: Vec<usize>,
    leaf: &'a dyn Fn(&[Color]) -> bool,
}

struct Run<'a, 'b> {
    p: &'b Problem<'a>,
    k: usize,
    colors: Vec<Color>,
    count: Vec<Vec<usize>>,
    uncolored: Vec<usize>,
    budget: u64,
    spent: u64,
}

impl Run<'_, '_> {
    fn spare(&self, slot: usize) -> usize {
        let caps = self.p.caps.as_ref().expect("only called with caps");
        self.count[slot]
            .iter()
            .map(|&c| caps[slot].saturating_sub(c))
            .sum()
    }

    /// `Err` once the budget is gone.
    fn go(&mut self, depth: usize, used: usize) -> Result<bool, ()> {
        self.spent += 1;
        if self.spent > self.budget {
            return Err(());
        }
        if depth == self.p.order.len() {
            return Ok((self.p.leaf)(&self.colors));
        }
        let item = self.p.order[depth];
        let [a, b] = self.p.slots[item];
        let top = (used + 1).min(self.k);
        for c in 0..top {
            if let Some(caps) = &self.p.caps {
                if self.count[a][c] >= caps[a] || self.count[b][c] >= caps[b] {
                    continue;
                }
            }
            self.colors[item] = c as Color;
            self.count[a][c] += 1;
            self.count[b][c] += 1;
            self.uncolored[a] -= 1;
            self.uncolored[b] -= 1;
            let feasible = self.p.caps.is_none()
                || (self.uncolored[a] <= self.spare(a) && self.uncolored[b] <= self.spare(b));
            let r = if feasible {
                self.go(depth + 1, used.max(c + 1))
            } else {
                Ok(false)
            };
            self.count[a][c] -= 1;
            self.count[b][c] -= 1;
            self.uncolored[a] += 1;
            self.uncolored[b] += 1;
            if r? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

fn solve<C>(
    p: &Problem<'_>,
    k_max: usize,
    budget: u64,
    wrap: impl Fn(Vec<Color>, usize) -> C,
) -> Result<ExactResult<C>, ExactError> {
    let m = p.slots.len();
    let mut spent = 0;
    for k in 1..=k_max {
        let mut run = Run {
            p,
            k,
            colors: vec![0; m],
            count: vec![vec![0; k]; p.slot_size.len()],
            uncolored: p.slot_size.clone(),
            budget,
            spent,
        };
        let r = run.go(0, 0);
        spent = run.spent;
        match r {
            Ok(true) => {
                return Ok(ExactResult {
                    k,
                    witness: wrap(run.colors, k),
                    nodes: spent,
                })
            }
            Ok(false) => {}
            Err(()) => return Err(ExactError::BudgetExhausted { k }),
        }
    }
    Err(ExactError::InfeasibleUpToKMax { k_max })
}

fn edge_problem<'a>(g: &Graph, kind: IndexKind, leaf: &'a dyn Fn(&[Color]) -> bool) -> Problem<'a> {
    let slots: Vec<[usize; 2]> = g.edges().iter().map(|&(u, v)| [u, v]).collect();
    let caps = match kind {
        IndexKind::Majority | IndexKind::MajorityDistinguishing => {
            Some(g.degrees().iter().map(|d| d / 2).collect())
        }
        IndexKind::ProperDistinguishing => Some(vec![1; g.n()]),
        IndexKind::Distinguishing => None,
    };
    let mut order: Vec<usize> = (0..g.m()).collect();
    order.sort_by_key(|&id| {
        let (u, v) = g.edge(id);
        (std::cmp::Reverse(g.degree(u) + g.degree(v)), id)
    });
    Problem {
        slots,
        slot_size: g.degrees(),
        caps,
        order,
        leaf,
    }
}

fn edge_leaf(g: &Graph, kind: IndexKind) -> impl Fn(&[Color]) -> bool + '_ {
    move |colors: &[Color]| {
        if !kind.needs_distinguishing() {
            return true;
        }
        let labels: Vec<u64> = colors.iter().map(|&c| u64::from(c) + 1).collect();
        labelled_witness(g, &labels, &[]).is_none()
    }
}

fn edge_precheck(g: &Graph, kind: IndexKind, k_max: usize) -> Result<(), ExactError> {
    if !g.is_connected() {
        return Err(ExactError::NotConnected);
    }
    if kind.needs_majority() && g.m() > 0 && g.min_degree() < 2 {
        return Err(ExactError::InfeasibleUpToKMax { k_max });
    }
    Ok(())
}

/// Smallest `k ≤ k_max` with a coloring of the given kind, plus a witness.
pub fn exact_index(g: &Graph, kind: IndexKind, k_max: usize, budget: u64) -> Result<ExactResult<EdgeColoring>, ExactError> {
    edge_precheck(g, kind, k_max)?;
    let leaf = edge_leaf(g, kind);
    let p = edge_problem(g, kind, &leaf);
    solve(&p, k_max, budget, |cs, _| EdgeColoring::numbered(cs))
}

/// The same oracle without color symmetry breaking or tally pruning: every
/// one of the `k^m` colorings is generated and run through the full check.
/// Only meant for cross-checking [`exact_index`] on tiny graphs.
pub fn exact_index_unpruned(g: &Graph, kind: IndexKind, k_max: usize) -> Result<ExactResult<EdgeColoring>, ExactError> {
    edge_precheck(g, kind, k_max)?;
    let m = g.m();
    let check = |cs: &[Color]| -> bool {
        let c = EdgeColoring::numbered(cs.to_vec());
        crate::verify::verify_index_kind(g, &c, kind)
            .map(|r| r.passed())
            .unwrap_or(false)
    };
    let mut nodes = 0;
    for k in 1..=k_max {
        let mut cs = vec![0 as Color; m];
        loop {
            nodes += 1;
            if check(&cs) {
                return Ok(ExactResult {
                    k,
                    witness: EdgeColoring::numbered(cs),
                    nodes,
                });
            }
            // odometer step
            let mut i = 0;
            while i < m && cs[i] as usize == k - 1 {
                cs[i] = 0;
                i += 1;
            }
            if i == m {
                break;
            }
            cs[i] += 1;
        }
    }
    Err(ExactError::InfeasibleUpToKMax { k_max })
}

/// Exact arc indices of a symmetric digraph.
pub fn exact_arc_index(d: &Digraph, kind: ArcIndexKind, k_max: usize, budget: u64) -> Result<ExactResult<ArcColoring>, ExactError> {
    if !d.is_symmetric() {
        return Err(ExactError::NotSymmetric);
    }
    let g = d.underlying().ok_or(ExactError::NotSymmetric)?;
    if !g.is_connected() {
        return Err(ExactError::NotConnected);
    }
    if g.m() > 0 && g.min_degree() < 2 {
        return Err(ExactError::InfeasibleUpToKMax { k_max });
    }
    let n = d.n();
    let slots: Vec<[usize; 2]> = d.arcs().iter().map(|&(u, v)| [u, n + v]).collect();
    let mut slot_size = vec![0; 2 * n];
    for v in 0..n {
        slot_size[v] = d.out_degree(v);
        slot_size[n + v] = d.in_degree(v);
    }
    let caps = slot_size.iter().map(|s| s / 2).collect();
    let mut order: Vec<usize> = (0..d.arc_count()).collect();
    order.sort_by_key(|&id| {
        let (u, v) = d.arc(id);
        (std::cmp::Reverse(d.out_degree(u) + d.in_degree(v)), id)
    });
    let leaf = |colors: &[Color]| -> bool {
        match kind {
            ArcIndexKind::ArcMajority => true,
            ArcIndexKind::ArcMajorityDistinguishing => {
                let labels: Vec<u64> = colors.iter().map(|&c| u64::from(c) + 1).collect();
                labelled_arc_witness(d, &labels, &[]).is_none()
            }
        }
    };
    let p = Problem {
        slots,
        slot_size,
        caps: Some(caps),
        order,
        leaf: &leaf,
    };
    solve(&p, k_max, budget, |cs, _| ArcColoring::numbered(cs))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProbeStatus {
    /// The conjecture's hypothesis fails; nothing to test.
    PreconditionFailed,
    /// Hypothesis holds and at most five colors suffice.
    Consistent,
    /// Hypothesis holds and the oracle proved five colors are not enough.
    Counterexample,
    /// Could not decide within the budget.
    Undecided,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeReport {
    pub status: ProbeStatus,
    pub min_degree: usize,
    /// Edge list of a certified asymmetric connected spanning subgraph.
    pub asymmetric_subgraph: Option<Vec<(usize, usize)>>,
    /// Whether the subgraph search was exhaustive (so a `None` is a proof).
    pub exhaustive: bool,
    pub k: Option<usize>,
}

/// Above this many edges the subgraph search is randomized.
const EXHAUSTIVE_SUBGRAPH_EDGES: usize = 16;

/// Looks for a connected asymmetric spanning subgraph; exhaustive on small
/// edge sets.
pub fn asymmetric_spanning_subgraph(g: &Graph, attempts: usize, seed: u64) -> (Option<Graph>, bool) {
    let m = g.m();
    if m <= EXHAUSTIVE_SUBGRAPH_EDGES {
        for mask in 0u32..(1u32 << m) {
            if (mask.count_ones() as usize) + 1 < g.n() {
                continue;
            }
            let h = g.spanning_subgraph((0..m).filter(|&i| mask >> i & 1 == 1));
            if h.is_connected() && crate::automorphism::is_asymmetric(&h) {
                return (Some(h), true);
            }
        }
        return (None, true);
    }
    (find_asymmetric_spanning_subgraph(g, attempts, seed).ok(), false)
}

/// Tests one instance of the five-color conjecture; never extrapolates.
pub fn probe_conjecture(g: &Graph, budget: u64, seed: u64) -> Result<ProbeReport, ExactError> {
    if !g.is_connected() {
        return Err(ExactError::NotConnected);
    }
    let min_degree = g.min_degree();
    let (h, exhaustive) = if min_degree >= 2 {
        asymmetric_spanning_subgraph(g, 200, seed)
    } else {
        (None, true)
    };
    let Some(h) = h else {
        return Ok(ProbeReport {
            status: if exhaustive {
                ProbeStatus::PreconditionFailed
            } else {
                ProbeStatus::Undecided
            },
            min_degree,
            asymmetric_subgraph: None,
            exhaustive,
            k: None,
        });
    };
    let (status, k) = match exact_index(g, IndexKind::MajorityDistinguishing, 5, budget) {
        Ok(r) => (ProbeStatus::Consistent, Some(r.k)),
        Err(ExactError::InfeasibleUpToKMax { .. }) => (ProbeStatus::Counterexample, None),
        Err(ExactError::BudgetExhausted { .. }) => (ProbeStatus::Undecided, None),
        Err(e) => return Err(e),
    };
    Ok(ProbeReport {
        status,
        min_degree,
        asymmetric_subgraph: Some(h.edges().to_vec()),
        exhaustive,
        k,
    })
}
