//! Graphs with cut vertices: rigid, pairwise different block colorings and
//! their assembly over the block–cut tree.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::two_connected::{block_pipeline, check_bound, is_two_connected, proper_distinguishing_small};
use super::util::{cap, greedy_fill, repair, RepairSpec, Tally};
use super::{ceil_sqrt, certify_md, ConstructError, Result};
use crate::automorphism::{colorings_isomorphic, find_labelled_isomorphism, stabilizer};
use crate::coloring::{Color, EdgeColoring, PartialColoring, Palette};
use crate::graph::{block_decomposition, find_cycle, Graph, Vertex};
use crate::verify::{verify_majority, MajorityMode};

/// Random-greedy colorings of a 2-connected `b` over the non-zero part of
/// `Z`, each repaired until only the identity fixes `root` and preserves it,
/// kept when not isomorphic (under `Aut(b)_root`) to an earlier one.
fn block_variants(b: &Graph, root: Vertex, count: usize, s: usize, seed: u64) -> Vec<EdgeColoring> {
    let k = s + 5;
    let allowed: Vec<Color> = (2..k as Color).collect();
    let caps: Vec<usize> = (0..b.n()).map(|v| cap(b.degree(v))).collect();
    let frozen = vec![false; b.m()];
    let group = stabilizer(b, &[root]);
    let mut kept: Vec<EdgeColoring> = Vec::new();
    for attempt in 0..40 * count as u64 + 40 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9e37_79b9).wrapping_add(attempt));
        let mut order: Vec<usize> = (0..b.m()).collect();
        order.shuffle(&mut rng);
        let mut tally = Tally::new(b.n(), k);
        let mut colors = vec![0; b.m()];
        let mut ok = true;
        for id in order {
            let (u, v) = b.edge(id);
            let options: Vec<Color> = allowed.iter().copied().filter(|&c| tally.fits(&caps, u, v, c)).collect();
            if options.is_empty() {
                ok = false;
                break;
            }
            let c = options[rng.gen_range(0..options.len())];
            colors[id] = c;
            tally.add(u, v, c);
        }
        if !ok {
            continue;
        }
        let spec = RepairSpec {
            allowed: &allowed,
            frozen: &frozen,
            caps: &caps,
            fixed: &[root],
            max_steps: 20 * b.m() + 50,
        };
        if !repair(b, &mut colors, &spec, k, &mut rng) {
            continue;
        }
        let c = EdgeColoring::new(colors, Palette::zero_primed(s + 3));
        if !verify_majority(b, &c, MajorityMode::Strict).is_ok_and(|r| r.passed()) {
            continue;
        }
        if kept.iter().any(|x| colorings_isomorphic(b, x, &c, &group).unwrap_or(true)) {
            continue;
        }
        kept.push(c);
        if kept.len() == count {
            break;
        }
    }
    kept
}

fn root_labels(n: usize, root: Vertex) -> Vec<u64> {
    let mut l = vec![0; n];
    l[root] = 1;
    l
}

/// Pairwise non-isomorphic colorings of `h0` over `Z` that only the identity
/// of `Aut(h0)_{u0}` preserves. `h0` is a 2-connected block, or several
/// copies of one block sharing only `u0`.
pub fn enumerate_block_colorings(h0: &Graph, u0: Vertex, count: usize, delta: usize, seed: u64) -> Result<Vec<EdgeColoring>> {
    if u0 >= h0.n() || !h0.is_connected() {
        return Err(ConstructError::Precondition("h0 must be connected and contain u0".into()));
    }
    let s = ceil_sqrt(delta.max(4));
    if is_two_connected(h0) {
        let out = block_variants(h0, u0, count, s, seed);
        if out.len() < count {
            return Err(ConstructError::EnumerationExhausted {
                found: out.len(),
                wanted: count,
            });
        }
        return Ok(out);
    }

    // copies of one block glued at u0
    let bt = block_decomposition(h0);
    if bt.cut_vertices != [u0] || bt.blocks.iter().any(|b| b.len() < 3) {
        return Err(ConstructError::Precondition(
            "h0 must be a 2-connected block or copies of one sharing u0".into(),
        ));
    }
    let locals: Vec<(Graph, Vec<Vertex>)> = bt.block_vertices.iter().map(|vs| h0.induced(vs)).collect();
    let root_of = |vs: &[Vertex]| vs.iter().position(|&v| v == u0).expect("u0 in every block");
    let (b1, map1) = &locals[0];
    let r1 = root_of(map1);
    let mut isos = Vec::new();
    for (bj, mapj) in &locals {
        let rj = root_of(mapj);
        let iso = find_labelled_isomorphism(
            b1,
            &vec![0; b1.m()],
            &root_labels(b1.n(), r1),
            bj,
            &vec![0; bj.m()],
            &root_labels(bj.n(), rj),
        )
        .ok_or_else(|| ConstructError::Precondition("blocks at u0 are not isomorphic".into()))?;
        isos.push(iso);
    }
    let copies = locals.len();
    let need = copies + count - 1;
    let variants = block_variants(b1, r1, need, s, seed);
    if variants.len() < need {
        return Err(ConstructError::EnumerationExhausted {
            found: variants.len().saturating_sub(copies - 1),
            wanted: count,
        });
    }
    let group = stabilizer(h0, &[u0]);
    let mut out: Vec<EdgeColoring> = Vec::new();
    for t in 0..count {
        let mut colors = vec![0; h0.m()];
        for (j, ((bj, mapj), iso)) in locals.iter().zip(&isos).enumerate() {
            let variant = &variants[t + j];
            for (id, &(x, y)) in b1.edges().iter().enumerate() {
                let (u, v) = (mapj[iso.apply(x)], mapj[iso.apply(y)]);
                let _ = bj;
                colors[h0.edge_id(u, v).expect("block edge")] = variant.colors[id];
            }
        }
        let c = EdgeColoring::new(colors, Palette::zero_primed(s + 3));
        let labels: Vec<u64> = c.colors.iter().map(|&x| u64::from(x) + 1).collect();
        if crate::automorphism::labelled_witness(h0, &labels, &[u0]).is_some() {
            continue;
        }
        if out.iter().any(|x| colorings_isomorphic(h0, x, &c, &group).unwrap_or(true)) {
            continue;
        }
        out.push(c);
    }
    if out.len() < count {
        return Err(ConstructError::EnumerationExhausted {
            found: out.len(),
            wanted: count,
        });
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct TreeAttachment {
    pub graph: Graph,
    pub coloring: EdgeColoring,
    /// Vertex of the assembled graph hosting each tree vertex's `u0` copy,
    /// i.e. the leaves, in tree order.
    pub leaves: Vec<Vertex>,
}

/// Glues a copy of `h0` at every leaf of the tree `t` (identifying the leaf
/// with `u0`) and colors the result: distinct block colorings on the copies,
/// tree edges by capacity. Tree vertices keep their numbers; copy vertices
/// follow.
pub fn color_symmetric_tree_attachment(t: &Graph, h0: &Graph, u0: Vertex, seed: u64) -> Result<TreeAttachment> {
    if t.n() < 3 {
        return Err(ConstructError::Precondition("the tree needs order at least 3".into()));
    }
    if !t.is_connected() || t.m() + 1 != t.n() {
        return Err(ConstructError::Precondition("t is not a tree".into()));
    }
    let leaves: Vec<Vertex> = (0..t.n()).filter(|&v| t.degree(v) == 1).collect();
    let mut edges: Vec<(usize, usize)> = t.edges().to_vec();
    let mut next = t.n();
    let mut copy_maps = Vec::new();
    for &leaf in &leaves {
        let map: Vec<Vertex> = (0..h0.n())
            .map(|x| {
                if x == u0 {
                    leaf
                } else {
                    next += 1;
                    next - 1
                }
            })
            .collect();
        edges.extend(h0.edges().iter().map(|&(x, y)| (map[x], map[y])));
        copy_maps.push(map);
    }
    let h = Graph::new(next, edges)?;
    let delta = h.max_degree().max(4);
    let s = ceil_sqrt(delta);
    let k = s + 5;
    let variants = enumerate_block_colorings(h0, u0, leaves.len(), delta, seed)?;
    let mut pc = PartialColoring::new(h.m());
    for (map, variant) in copy_maps.iter().zip(&variants) {
        for (id, &(x, y)) in h0.edges().iter().enumerate() {
            pc.set(h.edge_id(map[x], map[y]).expect("copy edge"), variant.colors[id]);
        }
    }
    let caps: Vec<usize> = (0..h.n()).map(|v| cap(h.degree(v))).collect();
    let mut tally = Tally::of(&h, &pc, k);
    let allowed: Vec<Color> = (2..k as Color).collect();
    greedy_fill(&h, &mut pc, &mut tally, &caps, &allowed);
    let mut colors: Vec<Color> = pc
        .as_slice()
        .iter()
        .map(|c| c.ok_or_else(|| ConstructError::VerifierRejected("a tree edge had no legal color".into())))
        .collect::<Result<_>>()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let frozen = vec![false; h.m()];
    let spec = RepairSpec {
        allowed: &allowed,
        frozen: &frozen,
        caps: &caps,
        fixed: &[],
        max_steps: 20 * h.m() + 50,
    };
    repair(&h, &mut colors, &spec, k, &mut rng);
    let coloring = certify_md(&h, EdgeColoring::new(colors, Palette::zero_primed(s + 3)))?;
    Ok(TreeAttachment {
        graph: h,
        coloring,
        leaves,
    })
}

/// Majority distinguishing coloring with at most `⌈√Δ⌉ + 5` colors of a
/// connected graph with a cut vertex and no pendant edge.
pub fn color_connectivity1(g: &Graph, seed: u64) -> Result<EdgeColoring> {
    if !g.is_connected() {
        return Err(ConstructError::NotConnected);
    }
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 1) {
        return Err(ConstructError::PendantEdgePresent(v));
    }
    let bt = block_decomposition(g);
    if bt.cut_vertices.is_empty() {
        return Err(ConstructError::NotConnectivity1);
    }
    let delta = g.max_degree();
    if delta <= 3 {
        let c = proper_distinguishing_small(g, seed)?;
        check_bound(&c, delta)?;
        return Ok(c);
    }
    let s = ceil_sqrt(delta);
    let k = s + 5;
    let allowed: Vec<Color> = (2..k as Color).collect();
    let caps: Vec<usize> = (0..g.n()).map(|v| cap(g.degree(v))).collect();
    let mut pc = PartialColoring::new(g.m());

    // seed block: one carrying a cycle of length ≥ 5, the largest such
    let b0 = (0..bt.blocks.len())
        .filter(|&b| bt.blocks[b].len() >= 3)
        .max_by_key(|&b| {
            let (local, _) = g.induced(&bt.block_vertices[b]);
            (find_cycle(&local, 5, 200_000).is_ok(), bt.blocks[b].len(), std::cmp::Reverse(b))
        })
        .ok_or(ConstructError::NotConnectivity1)?;
    let (local, map) = g.induced(&bt.block_vertices[b0]);
    let seeded = block_pipeline(&local, s, seed)?;
    for (id, &(x, y)) in local.edges().iter().enumerate() {
        pc.set(g.edge_id(map[x], map[y]).expect("block edge"), seeded.colors[id]);
    }

    // sweep the block–cut tree outward from the seed block
    let mut done_block = vec![false; bt.blocks.len()];
    done_block[b0] = true;
    let mut queue: std::collections::VecDeque<Vertex> =
        bt.block_vertices[b0].iter().copied().filter(|&v| bt.is_cut_vertex(v)).collect();
    let mut round = 0u64;
    while let Some(v) = queue.pop_front() {
        let children: Vec<usize> = bt.blocks_at(v).into_iter().filter(|&b| !done_block[b]).collect();
        // classes of isomorphic child blocks rooted at v
        let mut classes: Vec<Vec<(usize, Graph, Vec<Vertex>, Vertex)>> = Vec::new();
        for b in children {
            done_block[b] = true;
            for &w in &bt.block_vertices[b] {
                if w != v && bt.is_cut_vertex(w) {
                    queue.push_back(w);
                }
            }
            if bt.blocks[b].len() < 3 {
                continue; // bridge, colored at the end
            }
            let (lg, lmap) = g.induced(&bt.block_vertices[b]);
            let root = lmap.iter().position(|&x| x == v).expect("v in block");
            let slot = classes.iter().position(|class| {
                let (_, rg, _, rr) = &class[0];
                find_labelled_isomorphism(
                    rg,
                    &vec![0; rg.m()],
                    &root_labels(rg.n(), *rr),
                    &lg,
                    &vec![0; lg.m()],
                    &root_labels(lg.n(), root),
                )
                .is_some()
            });
            match slot {
                Some(i) => classes[i].push((b, lg, lmap, root)),
                None => classes.push(vec![(b, lg, lmap, root)]),
            }
        }
        for class in &classes {
            round += 1;
            let (_, rg, rmap, rr) = &class[0];
            let variants = block_variants(rg, *rr, class.len(), s, seed ^ round.wrapping_mul(0x5851_f42d));
            for (j, (_, lg, lmap, root)) in class.iter().enumerate() {
                let Some(variant) = variants.get(j).or(variants.first()) else {
                    continue;
                };
                let iso = find_labelled_isomorphism(
                    rg,
                    &vec![0; rg.m()],
                    &root_labels(rg.n(), *rr),
                    lg,
                    &vec![0; lg.m()],
                    &root_labels(lg.n(), *root),
                )
                .expect("same class");
                for (id, &(x, y)) in rg.edges().iter().enumerate() {
                    let (u, w) = (lmap[iso.apply(x)], lmap[iso.apply(y)]);
                    pc.set(g.edge_id(u, w).expect("block edge"), variant.colors[id]);
                }
                let _ = rmap;
            }
        }
    }

    // bridges and anything left
    let mut tally = Tally::of(g, &pc, k);
    // block colorings respect block degrees; make sure the union does too
    let over = (0..g.n()).any(|v| allowed.iter().chain([0, 1].iter()).any(|&c| tally.get(v, c) > caps[v]));
    if over {
        return Err(ConstructError::VerifierRejected("block colorings overload a cut vertex".into()));
    }
    if !greedy_fill(g, &mut pc, &mut tally, &caps, &allowed) {
        return Err(ConstructError::VerifierRejected("an edge had no legal color".into()));
    }
    let mut colors: Vec<Color> = pc.as_slice().iter().map(|c| c.expect("total")).collect();
    let frozen: Vec<bool> = colors.iter().map(|&c| c < 2).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let spec = RepairSpec {
        allowed: &allowed,
        frozen: &frozen,
        caps: &caps,
        fixed: &[],
        max_steps: 20 * g.m() + 100,
    };
    repair(g, &mut colors, &spec, k, &mut rng);
    let c = certify_md(g, EdgeColoring::new(colors, Palette::zero_primed(s + 3)))?;
    check_bound(&c, delta)?;
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn c5_variants() {
        let out = enumerate_block_colorings(&cycle(5), 0, 2, 4, 1).unwrap();
        assert_eq!(out.len(), 2);
        assert!(out.iter().all(|c| c.colors.iter().all(|&x| x >= 2)));
    }

    #[test]
    fn two_triangles() {
        let h0 = Graph::new(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]).unwrap();
        let out = enumerate_block_colorings(&h0, 0, 2, 4, 1).unwrap();
        assert_eq!(out.len(), 2);
        assert!(enumerate_block_colorings(&Graph::new(2, [(0, 1)]).unwrap(), 0, 1, 4, 1).is_err());
    }

    #[test]
    fn star_of_triangles() {
        let t = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let tri = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let r = color_symmetric_tree_attachment(&t, &tri, 0, 1).unwrap();
        assert_eq!(r.leaves, vec![1, 2, 3]);
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert!(color_symmetric_tree_attachment(&p3, &tri, 0, 1).is_ok());
        let p2 = Graph::new(2, [(0, 1)]).unwrap();
        assert!(color_symmetric_tree_attachment(&p2, &tri, 0, 1).is_err());
    }

    #[test]
    fn connectivity_one() {
        // two K5 sharing vertex 0
        let mut e = Vec::new();
        for block in [[0, 1, 2, 3, 4], [0, 5, 6, 7, 8]] {
            for i in 0..5 {
                for j in i + 1..5 {
                    e.push((block[i], block[j]));
                }
            }
        }
        let g = Graph::new(9, e).unwrap();
        assert!(color_connectivity1(&g, 1).unwrap().colors_used() <= 8);
        // three triangles through 0
        let f = Graph::new(7, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4), (0, 5), (5, 6), (0, 6)]).unwrap();
        assert!(color_connectivity1(&f, 1).is_ok());
        let pendant = Graph::new(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        assert!(matches!(color_connectivity1(&pendant, 1), Err(ConstructError::PendantEdgePresent(3))));
    }
}
