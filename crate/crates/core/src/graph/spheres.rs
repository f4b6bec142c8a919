use super::{Graph, Vertex};

/// BFS layering `S_0(a), S_1(a), …` of the component containing `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SphereDecomposition {
    pub root: Vertex,
    pub layers: Vec<Vec<Vertex>>,
    /// Distance from the root, `None` outside the root's component.
    pub distances: Vec<Option<usize>>,
}

impl SphereDecomposition {
    pub fn layer_sizes(&self) -> Vec<usize> {
        self.layers.iter().map(Vec::len).collect()
    }

    pub fn layer_of(&self, v: Vertex) -> Option<usize> {
        self.distances[v]
    }
}

pub fn spheres(g: &Graph, a: Vertex) -> SphereDecomposition {
    let distances = g.distances(a);
    let depth = distances.iter().flatten().max().copied().unwrap_or(0);
    let mut layers = vec![Vec::new(); depth + 1];
    for (v, d) in distances.iter().enumerate() {
        if let Some(d) = d {
            layers[*d].push(v);
        }
    }
    SphereDecomposition {
        root: a,
        layers,
        distances,
    }
}

/// True iff every vertex lies on some shortest `a`–`b` path, i.e.
/// `dist(a,v) + dist(v,b) = dist(a,b)` for all `v`.
pub fn geodesic_cover_check(g: &Graph, a: Vertex, b: Vertex) -> bool {
    let da = g.distances(a);
    let db = g.distances(b);
    let Some(target) = da[b] else {
        return false;
    };
    (0..g.n()).all(|v| match (da[v], db[v]) {
        (Some(x), Some(y)) => x + y == target,
        _ => false,
    })
}
