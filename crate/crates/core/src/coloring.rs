//! Edge and arc colorings over named palettes.
//!
//! A color is an index into a [`Palette`]; the palette only supplies display
//! labels. Colorings are indexed by edge id (or arc id) of their host.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Digraph, Graph, Vertex};

pub type Color = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("coloring has {got} entries but the host has {expected}")]
    IncompleteColoring { expected: usize, got: usize },
    #[error("edge {edge} uses color {color}, outside a palette of {palette} colors")]
    ColorOutOfPalette { edge: usize, color: Color, palette: usize },
}

/// Ordered color labels; color `i` is displayed as `labels[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Palette {
    labels: Vec<String>,
}

impl Palette {
    /// Colors labelled `1..=k`.
    pub fn numbered(k: usize) -> Self {
        Self {
            labels: (1..=k).map(|i| i.to_string()).collect(),
        }
    }

    /// The palette `{0, 0′, 1, …, top}`. Color 0 is `0`, color 1 is `0′` and
    /// color `i ≥ 2` is labelled `i − 1`.
    pub fn zero_primed(top: usize) -> Self {
        let mut labels = vec!["0".to_string(), "0′".to_string()];
        labels.extend((1..=top).map(|i| i.to_string()));
        Self { labels }
    }

    /// The digraph palette `{0, 1, …, top}`.
    pub fn from_zero(top: usize) -> Self {
        Self {
            labels: (0..=top).map(|i| i.to_string()).collect(),
        }
    }

    pub fn from_labels(labels: Vec<String>) -> Self {
        Self { labels }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, c: Color) -> &str {
        &self.labels[c as usize]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<Color> {
        self.labels.iter().position(|l| l == label).map(|i| i as Color)
    }
}

/// A total edge coloring: `colors[id]` is the color of edge `id`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeColoring {
    pub palette: Palette,
    pub colors: Vec<Color>,
}

impl EdgeColoring {
    pub fn new(colors: Vec<Color>, palette: Palette) -> Self {
        Self { palette, colors }
    }

    /// Colors are used as given; the palette is `1..=max+1`.
    pub fn numbered(colors: Vec<Color>) -> Self {
        let k = colors.iter().max().map_or(0, |&c| c as usize + 1);
        Self::new(colors, Palette::numbered(k))
    }

    pub fn monochromatic(g: &Graph) -> Self {
        Self::numbered(vec![0; g.m()])
    }

    pub fn color(&self, id: usize) -> Color {
        self.colors[id]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Checks totality on `g` and that every color is in the palette.
    pub fn check(&self, g: &Graph) -> Result<(), ColoringError> {
        check_colors(&self.colors, g.m(), self.palette.len())
    }

    /// Number of distinct colors that actually occur.
    pub fn colors_used(&self) -> usize {
        distinct(&self.colors)
    }

    /// `tallies(g)[v][c]` is the number of edges at `v` colored `c`.
    pub fn tallies(&self, g: &Graph) -> Vec<BTreeMap<Color, usize>> {
        let mut t = vec![BTreeMap::new(); g.n()];
        for (id, &(u, v)) in g.edges().iter().enumerate() {
            let c = self.colors[id];
            *t[u].entry(c).or_insert(0) += 1;
            *t[v].entry(c).or_insert(0) += 1;
        }
        t
    }

    /// Applies a color map, keeping the palette.
    pub fn relabel(&self, map: impl Fn(Color) -> Color) -> Self {
        Self::new(self.colors.iter().map(|&c| map(c)).collect(), self.palette.clone())
    }

    /// Colors at `v`, sorted.
    pub fn colors_at(&self, g: &Graph, v: Vertex) -> Vec<Color> {
        let mut cs: Vec<Color> = g.incident(v).iter().map(|&(_, id)| self.colors[id]).collect();
        cs.sort_unstable();
        cs
    }
}

/// A total arc coloring of a digraph, indexed by arc id.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ArcColoring {
    pub palette: Palette,
    pub colors: Vec<Color>,
}

impl ArcColoring {
    pub fn new(colors: Vec<Color>, palette: Palette) -> Self {
        Self { palette, colors }
    }

    pub fn numbered(colors: Vec<Color>) -> Self {
        let k = colors.iter().max().map_or(0, |&c| c as usize + 1);
        Self::new(colors, Palette::numbered(k))
    }

    pub fn check(&self, d: &Digraph) -> Result<(), ColoringError> {
        check_colors(&self.colors, d.arc_count(), self.palette.len())
    }

    pub fn colors_used(&self) -> usize {
        distinct(&self.colors)
    }
}

/// An edge coloring under construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialColoring {
    colors: Vec<Option<Color>>,
}

impl PartialColoring {
    pub fn new(m: usize) -> Self {
        Self {
            colors: vec![None; m],
        }
    }

    pub fn get(&self, id: usize) -> Option<Color> {
        self.colors[id]
    }

    pub fn set(&mut self, id: usize, c: Color) {
        self.colors[id] = Some(c);
    }

    pub fn clear(&mut self, id: usize) {
        self.colors[id] = None;
    }

    pub fn is_colored(&self, id: usize) -> bool {
        self.colors[id].is_some()
    }

    pub fn uncolored(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.colors.len()).filter(|&id| self.colors[id].is_none())
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    pub fn as_slice(&self) -> &[Option<Color>] {
        &self.colors
    }

    /// Count of color `c` among colored edges at `v`.
    pub fn count_at(&self, g: &Graph, v: Vertex, c: Color) -> usize {
        g.incident(v)
            .iter()
            .filter(|&&(_, id)| self.colors[id] == Some(c))
            .count()
    }

    /// Refinement labels: 0 for uncolored, `c + 1` otherwise.
    pub fn labels(&self) -> Vec<u64> {
        self.colors
            .iter()
            .map(|c| c.map_or(0, |c| u64::from(c) + 1))
            .collect()
    }

    /// `None` while any edge is uncolored.
    pub fn into_total(self, palette: Palette) -> Option<EdgeColoring> {
        let colors: Option<Vec<Color>> = self.colors.into_iter().collect();
        colors.map(|cs| EdgeColoring::new(cs, palette))
    }
}

impl From<&EdgeColoring> for PartialColoring {
    fn from(c: &EdgeColoring) -> Self {
        Self {
            colors: c.colors.iter().map(|&x| Some(x)).collect(),
        }
    }
}

fn check_colors(colors: &[Color], expected: usize, palette: usize) -> Result<(), ColoringError> {
    if colors.len() != expected {
        return Err(ColoringError::IncompleteColoring {
            expected,
            got: colors.len(),
        });
    }
    for (edge, &color) in colors.iter().enumerate() {
        if color as usize >= palette {
            return Err(ColoringError::ColorOutOfPalette { edge, color, palette });
        }
    }
    Ok(())
}

fn distinct(colors: &[Color]) -> usize {
    let mut cs = colors.to_vec();
    cs.sort_unstable();
    cs.dedup();
    cs.len()
}
