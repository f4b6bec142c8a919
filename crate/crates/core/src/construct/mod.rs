//! Constructive colorers. Every public entry point runs its output through
//! the matching verifier and returns an error instead of an uncertified
//! coloring.

mod asymmetric;
mod bipartite;
mod blocks;
mod digraph;
mod k2n;
mod sphere;
mod two_coloring;
mod two_connected;
pub(crate) mod util;

use thiserror::Error;

use crate::coloring::{ColoringError, EdgeColoring};
use crate::exact::ExactError;
use crate::graph::{GraphError, SearchError, Vertex};
use crate::verify::{verify_majority, verify_majority_distinguishing, MajorityMode, VerificationReport};

pub use asymmetric::{color_complete, complete_fixture, color_traceable_mindeg4, color_via_asymmetric_subgraph, combine_majority};
pub use bipartite::{majority3_bipartite, majority3_symmetric_digraph};
pub use blocks::{color_connectivity1, color_symmetric_tree_attachment, enumerate_block_colorings, TreeAttachment};
pub use digraph::color_symmetric_digraph;
pub use k2n::{color_k2n, color_k2n_graph, k2n_colors};
pub use sphere::{c0_pattern, color_c0, lemma_h_coloring, LayerTrace, LemmaHOutput};
pub use two_coloring::{almost_majority_4, eulerian_2coloring, two_coloring_balanced, EulerianColoring, TwoColoring, TwoColoringSpec};
pub use two_connected::{color_2connected, color_auto};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("graph has no edges")]
    EmptyGraph,
    #[error("graph is not connected")]
    NotConnected,
    #[error("hypothesis violated at vertex {vertex} for color {color}")]
    HypothesisViolated { vertex: Vertex, color: String },
    #[error("the two palettes share color `{0}`")]
    PaletteOverlap(String),
    #[error("no connected asymmetric spanning subgraph found")]
    NoAsymmetricSubgraphFound,
    #[error("verifier rejected the construction: {0}")]
    VerifierRejected(String),
    #[error("path is not a spanning path of the graph")]
    PathNotSpanning,
    #[error("minimum degree {got} is below the required {need}")]
    MinDegreeTooSmall { got: usize, need: usize },
    #[error("cycle of length {0} is too short")]
    CycleTooShort(usize),
    #[error("invalid seed colors")]
    BadColors,
    #[error("not every vertex lies on a shortest a-b path")]
    PreconditionGeodesicFailed,
    #[error("palette has {got} colors, {need} needed")]
    PaletteTooSmall { got: usize, need: usize },
    #[error("graph is not 2-connected")]
    NotTwoConnected,
    #[error("could only certify {found} of {wanted} pairwise non-isomorphic colorings")]
    EnumerationExhausted { found: usize, wanted: usize },
    #[error("graph has no cut vertex")]
    NotConnectivity1,
    #[error("graph has a pendant edge at vertex {0}")]
    PendantEdgePresent(Vertex),
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("digraph is not symmetric")]
    NotSymmetric,
    #[error("graph is not Eulerian")]
    NotEulerian,
    #[error("graph has an odd number of edges")]
    OddEdgeCount,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

pub type Result<T> = std::result::Result<T, ConstructError>;

fn rejected(r: &VerificationReport) -> ConstructError {
    ConstructError::VerifierRejected(r.to_string())
}

/// Returns `c` if it is a majority distinguishing coloring of `g`.
pub(crate) fn certify_md(g: &crate::graph::Graph, c: EdgeColoring) -> Result<EdgeColoring> {
    let r = verify_majority_distinguishing(g, &c)?;
    if r.passed() {
        Ok(c)
    } else {
        Err(rejected(&r))
    }
}

pub(crate) fn certify_majority(g: &crate::graph::Graph, c: EdgeColoring, mode: MajorityMode) -> Result<EdgeColoring> {
    let r = verify_majority(g, &c, mode)?;
    if r.passed() {
        Ok(c)
    } else {
        Err(rejected(&r))
    }
}

/// Palette size `s + 3` for `s = ⌈√Δ⌉`, the non-zero part of `Z`.
pub(crate) fn ceil_sqrt(x: usize) -> usize {
    let mut s = (x as f64).sqrt() as usize;
    while s * s < x {
        s += 1;
    }
    while s > 0 && (s - 1) * (s - 1) >= x {
        s -= 1;
    }
    s
}

pub(crate) fn ceil_fourth_root(x: usize) -> usize {
    let mut t = 0;
    while t * t * t * t < x {
        t += 1;
    }
    t
}
