//! Budgeted searches for long cycles, spanning paths and asymmetric spanning
//! subgraphs. All three problems are hard in general; exact modes are used on
//! small inputs and the budget bounds everything else.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use super::{Graph, Vertex};
use crate::automorphism::is_asymmetric;

/// Up to this order [`find_cycle`] proves its answer is a longest cycle.
pub const EXACT_CYCLE_LIMIT: usize = 20;
/// Up to this order [`find_hamiltonian_path`] is exhaustive.
pub const EXACT_PATH_LIMIT: usize = 18;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("search budget exhausted")]
    BudgetExhausted,
    #[error("no cycle of the requested length exists")]
    NoCycleExists,
    #[error("nothing found within the attempt budget (this does not prove nonexistence)")]
    NotFoundWithinBudget,
    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),
}

struct LongestCycle<'a> {
    g: &'a Graph,
    start: Vertex,
    on_path: Vec<bool>,
    path: Vec<Vertex>,
    best: Vec<Vertex>,
    limit: usize,
    budget: u64,
    spent: u64,
}

impl LongestCycle<'_> {
    /// Returns false once the budget is gone.
    fn dfs(&mut self, remaining: usize) -> bool {
        self.spent += 1;
        if self.spent > self.budget {
            return false;
        }
        let u = *self.path.last().expect("path is never empty");
        if self.path.len() >= 3 && self.path.len() > self.best.len() && self.g.has_edge(u, self.start) {
            self.best = self.path.clone();
            if self.best.len() == self.limit {
                return true;
            }
        }
        if self.path.len() + remaining <= self.best.len() {
            return true;
        }
        for &(w, _) in self.g.incident(u) {
            if w <= self.start || self.on_path[w] || self.g.degree(w) < 2 {
                continue;
            }
            self.on_path[w] = true;
            self.path.push(w);
            let ok = self.dfs(remaining - 1);
            self.path.pop();
            self.on_path[w] = false;
            if !ok {
                return false;
            }
            if self.best.len() == self.limit {
                return true;
            }
        }
        true
    }
}

/// Longest cycle through back edges of a DFS tree; a cheap lower bound.
fn dfs_tree_cycle(g: &Graph, root: Vertex) -> Vec<Vertex> {
    let n = g.n();
    let mut depth = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut best: Option<(usize, Vertex, Vertex)> = None;
    let mut stack = vec![(root, 0usize)];
    depth[root] = 0;
    while let Some(&mut (u, ref mut i)) = stack.last_mut() {
        if *i < g.degree(u) {
            let w = g.incident(u)[*i].0;
            *i += 1;
            if depth[w] == usize::MAX {
                depth[w] = depth[u] + 1;
                parent[w] = u;
                stack.push((w, 0));
            } else if w != parent[u] && depth[w] < depth[u] {
                let len = depth[u] - depth[w] + 1;
                if best.is_none_or(|b| len > b.0) {
                    best = Some((len, u, w));
                }
            }
        } else {
            stack.pop();
        }
    }
    let Some((_, mut u, top)) = best else {
        return Vec::new();
    };
    let mut cycle = vec![u];
    while u != top {
        u = parent[u];
        cycle.push(u);
    }
    cycle
}

/// Finds a cycle with at least `min_len` vertices.
///
/// On graphs with at most [`EXACT_CYCLE_LIMIT`] vertices the search is
/// exhaustive and returns a longest cycle; `NoCycleExists` is only reported
/// when that exhaustive search completes. Larger graphs get a budgeted search
/// that returns the longest cycle it saw.
pub fn find_cycle(g: &Graph, min_len: usize, budget: u64) -> Result<Vec<Vertex>, SearchError> {
    if min_len < 3 {
        return Err(SearchError::InvalidArgument("min_len must be at least 3"));
    }
    let n = g.n();
    let mut best: Vec<Vertex> = Vec::new();
    for comp in g.components() {
        if let Some(&r) = comp.first() {
            let c = dfs_tree_cycle(g, r);
            if c.len() > best.len() {
                best = c;
            }
        }
    }
    let limit = g
        .components()
        .iter()
        .map(Vec::len)
        .max()
        .unwrap_or(0);
    let mut spent = 0;
    let mut exhausted = false;
    if best.len() < limit {
        for start in 0..n {
            let remaining = (start + 1..n).filter(|&v| g.degree(v) >= 2).count();
            if remaining < best.len() {
                break;
            }
            let mut search = LongestCycle {
                g,
                start,
                on_path: vec![false; n],
                path: vec![start],
                best: std::mem::take(&mut best),
                limit,
                budget,
                spent,
            };
            search.on_path[start] = true;
            let ok = search.dfs(remaining);
            spent = search.spent;
            best = search.best;
            if !ok {
                exhausted = true;
                break;
            }
            if best.len() == limit {
                break;
            }
        }
    }
    if best.len() >= min_len {
        Ok(best)
    } else if exhausted || n > EXACT_CYCLE_LIMIT {
        Err(SearchError::BudgetExhausted)
    } else {
        Err(SearchError::NoCycleExists)
    }
}

struct PathSearch<'a> {
    g: &'a Graph,
    visited: Vec<bool>,
    path: Vec<Vertex>,
    budget: u64,
    spent: u64,
}

impl PathSearch<'_> {
    fn free_degree(&self, v: Vertex) -> usize {
        self.g.neighbors(v).filter(|&w| !self.visited[w]).count()
    }

    /// `Some(true)` found, `Some(false)` exhausted this subtree, `None` out of budget.
    fn dfs(&mut self) -> Option<bool> {
        self.spent += 1;
        if self.spent > self.budget {
            return None;
        }
        let n = self.g.n();
        if self.path.len() == n {
            return Some(true);
        }
        let u = *self.path.last().expect("path is never empty");
        // An unvisited vertex with no unvisited neighbor must be the final
        // vertex and adjacent to u; at most one such vertex can exist.
        let mut dead = 0;
        for v in 0..n {
            if !self.visited[v] && self.free_degree(v) == 0 {
                if !self.g.has_edge(u, v) || self.path.len() + 1 != n {
                    return Some(false);
                }
                dead += 1;
            }
        }
        if dead > 1 {
            return Some(false);
        }
        let mut next: Vec<Vertex> = self
            .g
            .neighbors(u)
            .filter(|&w| !self.visited[w])
            .collect();
        next.sort_by_key(|&w| (self.free_degree(w), w));
        for w in next {
            self.visited[w] = true;
            self.path.push(w);
            match self.dfs() {
                Some(true) => return Some(true),
                Some(false) => {}
                None => return None,
            }
            self.path.pop();
            self.visited[w] = false;
        }
        Some(false)
    }
}

/// Searches for a spanning path. `Ok(None)` means none exists (only reported
/// after an exhaustive search).
pub fn find_hamiltonian_path(g: &Graph, budget: u64) -> Result<Option<Vec<Vertex>>, SearchError> {
    let n = g.n();
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    if !g.is_connected() {
        return Ok(None);
    }
    if g.degrees().iter().filter(|&&d| d == 1).count() > 2 {
        return Ok(None);
    }
    let mut starts: Vec<Vertex> = (0..n).collect();
    starts.sort_by_key(|&v| (g.degree(v), v));
    let mut spent = 0;
    for s in starts {
        let mut search = PathSearch {
            g,
            visited: vec![false; n],
            path: vec![s],
            budget,
            spent,
        };
        search.visited[s] = true;
        let r = search.dfs();
        spent = search.spent;
        match r {
            Some(true) => return Ok(Some(search.path)),
            Some(false) => {}
            None => return Err(SearchError::BudgetExhausted),
        }
    }
    Ok(None)
}

fn random_spanning_tree(g: &Graph, rng: &mut ChaCha8Rng, depth_first: bool) -> Vec<usize> {
    let n = g.n();
    let mut seen = vec![false; n];
    let root = rng.gen_range(0..n);
    seen[root] = true;
    let mut frontier: Vec<(Vertex, usize)> = Vec::new();
    let push = |v: Vertex, frontier: &mut Vec<(Vertex, usize)>, rng: &mut ChaCha8Rng| {
        let mut inc: Vec<(Vertex, usize)> = g.incident(v).to_vec();
        inc.shuffle(rng);
        frontier.extend(inc);
    };
    push(root, &mut frontier, rng);
    let mut tree = Vec::new();
    while !frontier.is_empty() {
        let idx = if depth_first {
            frontier.len() - 1
        } else {
            rng.gen_range(0..frontier.len())
        };
        let (w, id) = frontier.swap_remove(idx);
        if seen[w] {
            continue;
        }
        seen[w] = true;
        tree.push(id);
        push(w, &mut frontier, rng);
    }
    tree
}

/// Looks for a connected spanning subgraph with trivial automorphism group.
///
/// Each attempt draws a random spanning tree (alternating depth-first and
/// uniform-frontier growth) and then adds random edges of `g` until the
/// candidate is certified asymmetric. Failure does not prove nonexistence.
pub fn find_asymmetric_spanning_subgraph(
    g: &Graph,
    attempts: usize,
    seed: u64,
) -> Result<Graph, SearchError> {
    if !g.is_connected() || g.n() == 0 {
        return Err(SearchError::InvalidArgument("graph must be connected and non-empty"));
    }
    if g.n() == 1 {
        return Ok(g.clone());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..attempts {
        let mut ids = random_spanning_tree(g, &mut rng, attempt % 2 == 0);
        let mut h = g.spanning_subgraph(ids.iter().copied());
        if is_asymmetric(&h) {
            return Ok(h);
        }
        let mut rest: Vec<usize> = (0..g.m()).filter(|id| !ids.contains(id)).collect();
        rest.shuffle(&mut rng);
        let extra = rest.len().min(2 * g.n());
        for &id in &rest[..extra] {
            ids.push(id);
            h = g.spanning_subgraph(ids.iter().copied());
            if is_asymmetric(&h) {
                return Ok(h);
            }
        }
    }
    Err(SearchError::NotFoundWithinBudget)
}
