//! Colorings anchored on a rigid spanning subgraph: combining two palettes, the
//! asymmetric-subgraph route, complete graphs and traceable graphs.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::two_coloring::{almost_majority_4, balanced_on_edges};
use super::{certify_md, ConstructError, Result};
use crate::automorphism::is_automorphism;
use crate::automorphism::Permutation;
use crate::coloring::{Color, EdgeColoring, Palette};
use crate::exact::{asymmetric_spanning_subgraph, exact_index, DEFAULT_BUDGET};
use crate::graph::{Graph, Vertex};
use crate::verify::{verify_majority, IndexKind, MajorityMode};

/// Union of a coloring of a connected spanning subgraph `h` and a weak
/// majority coloring of `g − h` on disjoint palettes. The hypotheses are
/// checked; the result is certified strict majority on `g`.
pub fn combine_majority(g: &Graph, h: &Graph, c_h: &EdgeColoring, c_rest: &EdgeColoring) -> Result<EdgeColoring> {
    if h.n() != g.n() || h.edges().iter().any(|&(u, v)| !g.has_edge(u, v)) {
        return Err(ConstructError::Precondition("h is not a spanning subgraph of g".into()));
    }
    if !h.is_connected() {
        return Err(ConstructError::Precondition("h is not connected".into()));
    }
    let rest_ids: Vec<usize> = (0..g.m()).filter(|&id| {
        let (u, v) = g.edge(id);
        !h.has_edge(u, v)
    }).collect();
    let rest = g.spanning_subgraph(rest_ids.iter().copied());
    c_h.check(h)?;
    c_rest.check(&rest)?;

    let used_h: std::collections::BTreeSet<&str> = c_h.colors.iter().map(|&c| c_h.palette.label(c)).collect();
    if let Some(shared) = c_rest.colors.iter().map(|&c| c_rest.palette.label(c)).find(|l| used_h.contains(l)) {
        return Err(ConstructError::PaletteOverlap(shared.to_string()));
    }
    for (v, t) in c_h.tallies(h).iter().enumerate() {
        if let Some((&c, _)) = t.iter().find(|&(_, &count)| 2 * count > g.degree(v)) {
            return Err(ConstructError::HypothesisViolated {
                vertex: v,
                color: c_h.palette.label(c).to_string(),
            });
        }
    }
    let weak = verify_majority(&rest, c_rest, MajorityMode::Weak)?;
    if let Some(x) = weak.violations.first() {
        return Err(ConstructError::HypothesisViolated {
            vertex: x.vertex,
            color: c_rest.palette.label(x.color).to_string(),
        });
    }

    // merged palette: h's labels, then the rest's
    let mut labels: Vec<String> = c_h.palette.labels().to_vec();
    let offset = labels.len() as Color;
    labels.extend(c_rest.palette.labels().iter().cloned());
    let mut colors = vec![0; g.m()];
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        colors[id] = match h.edge_id(u, v) {
            Some(hid) => c_h.colors[hid],
            None => offset + c_rest.colors[rest.edge_id(u, v).expect("edge of g − h")],
        };
    }
    super::certify_majority(g, EdgeColoring::new(colors, Palette::from_labels(labels)), MajorityMode::Strict)
}

/// Majority distinguishing coloring with at most seven colors for graphs of
/// minimum degree two that contain a connected asymmetric spanning subgraph.
pub fn color_via_asymmetric_subgraph(g: &Graph, seed: u64) -> Result<EdgeColoring> {
    if !g.is_connected() {
        return Err(ConstructError::NotConnected);
    }
    if g.min_degree() < 2 {
        return Err(ConstructError::MinDegreeTooSmall {
            got: g.min_degree(),
            need: 2,
        });
    }
    let (h, _) = asymmetric_spanning_subgraph(g, 400, seed);
    let h = h.ok_or(ConstructError::NoAsymmetricSubgraphFound)?;
    let c_h = almost_majority_4(&h)?;
    complete_with_rest(g, &h, &c_h.colors, c_h.palette.len())
}

/// Colors `g − h` with two fresh colors (a balanced 2-coloring per
/// component, special vertex where `h` has degree at least 2) and a third
/// fresh color only where a component offers no such vertex. `h` must be rigid and its colors fixed.
fn complete_with_rest(g: &Graph, h: &Graph, h_colors: &[Color], a: usize) -> Result<EdgeColoring> {
    let rest: Vec<usize> = (0..g.m()).filter(|&id| {
        let (u, v) = g.edge(id);
        !h.has_edge(u, v)
    }).collect();
    let pick = |present: &[Vertex]| {
        present
            .iter()
            .copied()
            .filter(|&v| h.degree(v) >= 2)
            .max_by_key(|&v| (h.degree(v), std::cmp::Reverse(v)))
    };
    let (pairs, specials) = balanced_on_edges(g, &rest, &pick, None);
    let mut colors = vec![0 as Color; g.m()];
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        if let Some(hid) = h.edge_id(u, v) {
            colors[id] = h_colors[hid];
        }
    }
    for (id, c) in pairs {
        colors[id] = a as Color + c;
    }
    let mut k = a + 2;
    for u in specials {
        if h.degree(u) >= 2 {
            continue;
        }
        // the excess would break majority at u: move one edge to a third color
        let count = |c: Color| g.incident(u).iter().filter(|&&(_, id)| colors[id] == c).count();
        let heavy = if count(a as Color) > count(a as Color + 1) { a } else { a + 1 } as Color;
        let &(_, id) = g
            .incident(u)
            .iter()
            .find(|&&(_, id)| colors[id] == heavy)
            .expect("heavy color present");
        colors[id] = (a + 2) as Color;
        k = a + 3;
    }
    certify_md(g, EdgeColoring::new(colors, Palette::numbered(k)))
}

/// The explicit three-colorings of `K_5` and `K_6` (vertices `0..n`), as
/// `(green, red, blue)` edge lists.
pub fn complete_fixture(n: usize) -> Option<[Vec<(usize, usize)>; 3]> {
    let e = |list: &[(usize, usize)]| list.iter().map(|&(u, v)| (u - 1, v - 1)).collect::<Vec<_>>();
    match n {
        5 => Some([
            e(&[(1, 2), (2, 3), (3, 4), (4, 5)]),
            e(&[(1, 3), (1, 4), (2, 5)]),
            e(&[(1, 5), (2, 4), (3, 5)]),
        ]),
        6 => Some([
            e(&[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6)]),
            e(&[(1, 3), (1, 4), (2, 5), (2, 6), (3, 6)]),
            e(&[(1, 6), (1, 5), (2, 4), (3, 5), (4, 6)]),
        ]),
        _ => None,
    }
}

fn rgb() -> Palette {
    Palette::from_labels(vec!["green".into(), "red".into(), "blue".into()])
}

fn complete_graph(n: usize) -> Graph {
    Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).expect("simple")
}

/// Majority distinguishing coloring of `K_n`: optimal for `n ≤ 6`, three
/// colors for `n ≥ 5`.
pub fn color_complete(n: usize) -> Result<(Graph, EdgeColoring)> {
    if n < 3 {
        return Err(ConstructError::Precondition("complete graphs need n ≥ 3".into()));
    }
    let g = complete_graph(n);
    if n <= 4 {
        let r = exact_index(&g, IndexKind::ProperDistinguishing, 6, DEFAULT_BUDGET)?;
        let c = certify_md(&g, r.witness)?;
        return Ok((g, c));
    }
    if let Some(classes) = complete_fixture(n) {
        let mut colors = vec![0; g.m()];
        for (c, class) in classes.iter().enumerate() {
            for &(u, v) in class {
                colors[g.edge_id(u, v).expect("edge of K_n")] = c as Color;
            }
        }
        let c = certify_md(&g, EdgeColoring::new(colors, rgb()))?;
        return Ok((g, c));
    }
    // spider with legs 1, 2 and n − 4 around vertex 0: asymmetric, Δ = 3
    let mut tree = vec![(0, 1), (0, 2), (2, 3), (0, 4)];
    tree.extend((4..n - 1).map(|i| (i, i + 1)));
    let t = Graph::new(n, tree)?;
    let c = complete_with_rest(&g, &t, &vec![0; t.m()], 1)?;
    if c.palette.len() > 3 {
        return Err(ConstructError::VerifierRejected("needed a fourth color".into()));
    }
    Ok((g, EdgeColoring::new(c.colors, rgb())))
}

/// Three-coloring of a graph with minimum degree at least 4 along a spanning
/// path: the path is green and the rest is 2-colored so that neither the
/// path's reversal nor anything else survives.
pub fn color_traceable_mindeg4(g: &Graph, path: &[Vertex], seed: u64) -> Result<EdgeColoring> {
    let n = g.n();
    let mut seen = vec![false; n];
    let spanning = path.len() == n
        && path.iter().all(|&v| v < n && !std::mem::replace(&mut seen[v], true))
        && path.windows(2).all(|w| g.has_edge(w[0], w[1]));
    if !spanning {
        return Err(ConstructError::PathNotSpanning);
    }
    if g.min_degree() < 4 {
        return Err(ConstructError::MinDegreeTooSmall {
            got: g.min_degree(),
            need: 4,
        });
    }
    let path_ids: Vec<usize> = path.windows(2).map(|w| g.edge_id(w[0], w[1]).expect("path edge")).collect();
    let mut on_path = vec![false; g.m()];
    for &id in &path_ids {
        on_path[id] = true;
    }
    let rest: Vec<usize> = (0..g.m()).filter(|&id| !on_path[id]).collect();

    // reversal of the path, and whether it is an automorphism of g
    let mut images = vec![0; n];
    for (i, &v) in path.iter().enumerate() {
        images[v] = path[n - 1 - i];
    }
    let rho = Permutation::from_images(images).expect("bijection");
    let rho_is_aut = is_automorphism(g, &rho);
    let ends = [path[0], path[n - 1]];
    let pick = |present: &[Vertex]| {
        present
            .iter()
            .copied()
            .filter(|v| !ends.contains(v))
            .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
    };

    // when the reversal is an automorphism, mirror-image edges at the two
    // ends get opposite colors before the circuits run
    let x1 = path[0];
    let xn = path[n - 1];
    let mut pre: Vec<(usize, Color)> = Vec::new();
    if rho_is_aut {
        let at_x1 = |i: usize| g.edge_id(x1, path[i]);
        let mirror = |i: usize| g.edge_id(xn, path[n - 1 - i]);
        let picks: Vec<usize> = (2..n - 1).filter(|&i| at_x1(i).is_some()).collect();
        if let Some(&i) = picks.first() {
            pre.push((at_x1(i).expect("edge"), 1));
            pre.push((mirror(i).expect("mirror edge"), 2));
            if g.degree(x1) % 2 == 1 {
                if let Some(&j) = picks.iter().find(|&&j| j != i && j != n - 1 - i) {
                    pre.push((at_x1(j).expect("edge"), 2));
                    pre.push((mirror(j).expect("mirror edge"), 1));
                }
            }
        }
    }
    let fixed: Vec<usize> = pre.iter().map(|&(id, _)| id).collect();
    let rest_free: Vec<usize> = rest.iter().copied().filter(|id| !fixed.contains(id)).collect();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut last_err = None;
    for attempt in 0..64 {
        let r = if attempt == 0 { None } else { Some(&mut rng) };
        let (pairs, _) = balanced_on_edges(g, &rest_free, &pick, r);
        let mut colors = vec![0 as Color; g.m()];
        for (id, c) in pairs {
            colors[id] = 1 + c;
        }
        for &(id, c) in &pre {
            colors[id] = c;
        }
        if rho_is_aut {
            let preserved = |colors: &[Color]| {
                (0..g.m()).all(|id| colors[crate::automorphism::edge_image(g, &rho, id)] == colors[id])
            };
            if preserved(&colors) {
                // swap red and blue on the component through x_1 when the
                // reversal moves it elsewhere
                let comp = component_edges(g, &rest_free, x1);
                let moved = comp.iter().any(|&id| {
                    let img = crate::automorphism::edge_image(g, &rho, id);
                    !comp.contains(&img)
                });
                if moved {
                    for &id in &comp {
                        colors[id] = 3 - colors[id];
                    }
                }
                if preserved(&colors) {
                    continue;
                }
            }
        }
        match certify_md(g, EdgeColoring::new(colors, rgb())) {
            Ok(c) => return Ok(c),
            Err(e) => last_err = Some(e),
        }
    }
    Err(last_err.unwrap_or_else(|| ConstructError::VerifierRejected("path reversal survived every circuit".into())))
}

fn component_edges(g: &Graph, ids: &[usize], start: Vertex) -> Vec<usize> {
    let inside: std::collections::HashSet<usize> = ids.iter().copied().collect();
    let mut seen = vec![false; g.n()];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(v) = stack.pop() {
        for &(w, id) in g.incident(v) {
            if inside.contains(&id) && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    ids.iter().copied().filter(|&id| seen[g.edge(id).0]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::Palette;

    #[test]
    fn combine_k4() {
        let g = complete_graph(4);
        let h = Graph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        // h edges sorted: (0,1) (0,3) (1,2) (2,3); alternate around the cycle
        let c_h = EdgeColoring::new(vec![0, 1, 1, 0], Palette::numbered(2));
        let rest = Graph::new(4, [(0, 2), (1, 3)]).unwrap();
        let c_rest = EdgeColoring::new(vec![0, 0], Palette::from_labels(vec!["3".into()]));
        assert!(combine_majority(&g, &h, &c_h, &c_rest).is_ok());
        let _ = rest;
    }

    #[test]
    fn combine_star_violation() {
        let g = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let h = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let c_h = EdgeColoring::new(vec![0, 0], Palette::numbered(1));
        let c_rest = EdgeColoring::new(vec![0], Palette::from_labels(vec!["x".into()]));
        assert!(matches!(
            combine_majority(&g, &h, &c_h, &c_rest),
            Err(ConstructError::HypothesisViolated { vertex: 1, .. })
        ));
    }

    #[test]
    fn complete_small() {
        assert_eq!(color_complete(3).unwrap().1.colors_used(), 3);
        assert_eq!(color_complete(4).unwrap().1.colors_used(), 5);
        for n in 5..=10 {
            assert_eq!(color_complete(n).unwrap().1.colors_used(), 3, "K_{n}");
        }
    }

    #[test]
    fn asym_rejects_c5() {
        let c5 = Graph::new(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert!(matches!(
            color_via_asymmetric_subgraph(&c5, 1),
            Err(ConstructError::NoAsymmetricSubgraphFound)
        ));
    }

    #[test]
    fn asym_k7() {
        let c = color_via_asymmetric_subgraph(&complete_graph(7), 1).unwrap();
        assert!(c.colors_used() <= 7);
    }

    #[test]
    fn traceable_knn() {
        for n in 4..=6 {
            let g = Graph::new(2 * n, (0..n).flat_map(|i| (n..2 * n).map(move |j| (i, j)))).unwrap();
            let path: Vec<usize> = (0..n).flat_map(|i| [i, n + i]).collect();
            let c = color_traceable_mindeg4(&g, &path, 7).unwrap();
            assert_eq!(c.colors_used(), 3);
        }
    }
}
