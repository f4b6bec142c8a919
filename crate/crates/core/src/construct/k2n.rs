//! `K_{2,n}`: every vertex of the large side gets its own ordered color pair.

use super::{certify_md, ConstructError, Result};
use crate::coloring::{Color, EdgeColoring, Palette};
use crate::graph::{Graph, Vertex};

/// Smallest `k` with `k(k − 1) − 1 ≥ n`.
pub fn k2n_colors(n: usize) -> usize {
    (2..).find(|&k| k * (k - 1) > n).expect("unbounded")
}

/// `n` distinct ordered pairs over `k2n_colors(n)` colors, taken by whole
/// shift classes `(a, a + d mod k)` so each color is used almost equally
/// often in each position. `(1, 0)` always appears, `(0, 1)` never does.
fn pair_codes(n: usize) -> Vec<(Color, Color)> {
    let k = k2n_colors(n);
    let mut out = Vec::with_capacity(n);
    'outer: for d in (1..k).rev() {
        for a in 0..k {
            let pair = (a as Color, ((a + d) % k) as Color);
            if pair == (0, 1) {
                continue;
            }
            if out.len() == n {
                break 'outer;
            }
            out.push(pair);
        }
    }
    out
}

/// Colors a graph that is `K_{2,n}` with sides `{x0, x1}` and the rest,
/// possibly plus the edge `x0x1`.
pub(crate) fn color_k2n_shaped(g: &Graph, x0: Vertex, x1: Vertex) -> Result<EdgeColoring> {
    let ys: Vec<Vertex> = (0..g.n()).filter(|&v| v != x0 && v != x1).collect();
    let n = ys.len();
    if n < 3 {
        return Err(ConstructError::Precondition("K_{2,n} needs n ≥ 3".into()));
    }
    let k = k2n_colors(n);
    let mut colors = vec![Color::MAX; g.m()];
    for (&y, (c0, c1)) in ys.iter().zip(pair_codes(n)) {
        let e0 = g.edge_id(x0, y).ok_or_else(|| ConstructError::Precondition("not K_{2,n}-shaped".into()))?;
        let e1 = g.edge_id(x1, y).ok_or_else(|| ConstructError::Precondition("not K_{2,n}-shaped".into()))?;
        colors[e0] = c0;
        colors[e1] = c1;
    }
    if let Some(e) = g.edge_id(x0, x1) {
        let load = |x: Vertex, c: Color| g.incident(x).iter().filter(|&&(_, id)| colors[id] == c).count();
        colors[e] = (0..k as Color)
            .min_by_key(|&c| (load(x0, c).max(load(x1, c)), c))
            .expect("k ≥ 2");
    }
    if colors.contains(&Color::MAX) {
        return Err(ConstructError::Precondition("not K_{2,n}-shaped".into()));
    }
    certify_md(g, EdgeColoring::new(colors, Palette::numbered(k)))
}

/// `K_{2,n}` with sides `{0, 1}` and `{2, …, n + 1}`, colored with exactly
/// [`k2n_colors`]`(n)` colors.
pub fn color_k2n(n: usize) -> Result<(Graph, EdgeColoring)> {
    if n < 3 {
        return Err(ConstructError::Precondition("K_{2,n} needs n ≥ 3".into()));
    }
    let g = Graph::new(n + 2, (2..n + 2).flat_map(|y| [(0, y), (1, y)]))?;
    let c = color_k2n_shaped(&g, 0, 1)?;
    Ok((g, c))
}

/// Same coloring for any labelling of `K_{2,n}` or `K_{2,n} + e`.
pub fn color_k2n_graph(g: &Graph) -> Result<EdgeColoring> {
    let (x0, x1) = k2n_sides(g).ok_or_else(|| ConstructError::Precondition("graph is not K_{2,n} (n ≥ 3)".into()))?;
    color_k2n_shaped(g, x0, x1)
}

/// Detects `K_{2,m}` (m ≥ 3) or `K_{2,m} + e` and returns the small side.
pub(crate) fn k2n_sides(g: &Graph) -> Option<(Vertex, Vertex)> {
    let n = g.n();
    if n < 5 {
        return None;
    }
    let m = n - 2;
    let mut big: Vec<Vertex> = (0..n).filter(|&v| g.degree(v) >= m).collect();
    if big.len() != 2 {
        return None;
    }
    let (x0, x1) = (big.remove(0), big.remove(0));
    let plus_e = g.has_edge(x0, x1);
    let ok = g.m() == 2 * m + usize::from(plus_e)
        && (0..n)
            .filter(|&v| v != x0 && v != x1)
            .all(|y| g.degree(y) == 2 && g.has_edge(x0, y) && g.has_edge(x1, y));
    ok.then_some((x0, x1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formula() {
        assert_eq!(k2n_colors(3), 3);
        assert_eq!(k2n_colors(5), 3);
        assert_eq!(k2n_colors(6), 4);
        assert_eq!(k2n_colors(11), 4);
        assert_eq!(k2n_colors(12), 5);
    }

    #[test]
    fn codes() {
        for n in 3..=40 {
            let p = pair_codes(n);
            assert_eq!(p.len(), n);
            assert!(p.contains(&(1, 0)));
            assert!(!p.contains(&(0, 1)));
            let mut q = p.clone();
            q.sort_unstable();
            q.dedup();
            assert_eq!(q.len(), n);
        }
    }

    #[test]
    fn small_n() {
        for n in 3..=12 {
            let (g, c) = color_k2n(n).unwrap();
            assert_eq!(c.colors_used(), k2n_colors(n), "n={n}");
            assert_eq!(k2n_sides(&g), Some((0, 1)));
        }
        let mut edges: Vec<(usize, usize)> = (2..6).flat_map(|y| [(0, y), (1, y)]).collect();
        edges.push((0, 1));
        let g = Graph::new(6, edges).unwrap();
        assert_eq!(k2n_sides(&g), Some((0, 1)));
        assert!(color_k2n_shaped(&g, 0, 1).is_ok());
    }
}
