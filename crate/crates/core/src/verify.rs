//! Checkers for the coloring predicates, with witnesses.
//!
//! "At most half" is always the integer test `2·count ≤ degree`. Reports list
//! every violation rather than stopping at the first one.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::automorphism::{find_arc_color_preserving_automorphism, find_color_preserving_automorphism, Permutation};
use crate::coloring::{ArcColoring, Color, ColoringError, EdgeColoring};
use crate::graph::{Digraph, Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MajorityMode {
    /// `2·d^α(v) ≤ d(v)` everywhere.
    Strict,
    /// `d^α(v) ≤ ⌈d(v)/2⌉`.
    Weak,
    /// Strict except at vertices of degree one.
    Almost,
}

impl MajorityMode {
    /// Largest allowed count of one color at a vertex of degree `d`.
    pub fn threshold(self, d: usize) -> usize {
        match self {
            MajorityMode::Strict => d / 2,
            MajorityMode::Weak => d.div_ceil(2),
            MajorityMode::Almost if d == 1 => 1,
            MajorityMode::Almost => d / 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MajorityMode::Strict => "strict",
            MajorityMode::Weak => "weak",
            MajorityMode::Almost => "almost",
        }
    }
}

impl FromStr for MajorityMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "strict" => Ok(Self::Strict),
            "weak" => Ok(Self::Weak),
            "almost" => Ok(Self::Almost),
            _ => Err(format!("unknown majority mode `{s}`")),
        }
    }
}

/// The four graph invariants the crate computes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IndexKind {
    /// M′
    Majority,
    /// D′
    Distinguishing,
    /// M′_D
    MajorityDistinguishing,
    /// χ′_D
    ProperDistinguishing,
}

impl IndexKind {
    pub fn symbol(self) -> &'static str {
        match self {
            IndexKind::Majority => "M'",
            IndexKind::Distinguishing => "D'",
            IndexKind::MajorityDistinguishing => "M'_D",
            IndexKind::ProperDistinguishing => "chi'_D",
        }
    }

    /// Does the kind need a majority condition (and hence δ ≥ 2)?
    pub fn needs_majority(self) -> bool {
        matches!(self, IndexKind::Majority | IndexKind::MajorityDistinguishing)
    }

    pub fn needs_distinguishing(self) -> bool {
        !matches!(self, IndexKind::Majority)
    }
}

impl FromStr for IndexKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "m" | "majority" => Ok(Self::Majority),
            "d" | "distinguishing" => Ok(Self::Distinguishing),
            "md" | "majority_distinguishing" => Ok(Self::MajorityDistinguishing),
            "chi-d" | "chi_d" | "proper_distinguishing" => Ok(Self::ProperDistinguishing),
            _ => Err(format!("unknown index kind `{s}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    In,
    Out,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Violation {
    pub vertex: Vertex,
    pub color: Color,
    pub count: usize,
    /// Largest count the predicate allows.
    pub threshold: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub direction: Option<Direction>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub verdict: Verdict,
    pub mode: String,
    pub colors_used: usize,
    pub violations: Vec<Violation>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness_automorphism: Option<Permutation>,
}

impl VerificationReport {
    fn new(mode: impl Into<String>, colors_used: usize, violations: Vec<Violation>, witness: Option<Permutation>) -> Self {
        let verdict = if violations.is_empty() && witness.is_none() {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        Self {
            verdict,
            mode: mode.into(),
            colors_used,
            violations,
            witness_automorphism: witness,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: {} colors, {} violations",
            self.mode,
            if self.passed() { "pass" } else { "fail" },
            self.colors_used,
            self.violations.len()
        )?;
        if let Some(w) = &self.witness_automorphism {
            write!(f, ", preserved by {w}")?;
        }
        Ok(())
    }
}

fn majority_violations(g: &Graph, c: &EdgeColoring, mode: MajorityMode) -> Vec<Violation> {
    let tallies = c.tallies(g);
    let mut out = Vec::new();
    for (v, t) in tallies.iter().enumerate() {
        let limit = mode.threshold(g.degree(v));
        for (&color, &count) in t {
            if count > limit {
                out.push(Violation {
                    vertex: v,
                    color,
                    count,
                    threshold: limit,
                    direction: None,
                });
            }
        }
    }
    out
}

pub fn verify_majority(g: &Graph, c: &EdgeColoring, mode: MajorityMode) -> Result<VerificationReport, ColoringError> {
    c.check(g)?;
    Ok(VerificationReport::new(
        mode.name(),
        c.colors_used(),
        majority_violations(g, c, mode),
        None,
    ))
}

pub fn verify_distinguishing(g: &Graph, c: &EdgeColoring) -> Result<VerificationReport, ColoringError> {
    let witness = find_color_preserving_automorphism(g, c)?;
    Ok(VerificationReport::new("distinguishing", c.colors_used(), Vec::new(), witness))
}

pub fn verify_majority_distinguishing(g: &Graph, c: &EdgeColoring) -> Result<VerificationReport, ColoringError> {
    c.check(g)?;
    let witness = find_color_preserving_automorphism(g, c)?;
    Ok(VerificationReport::new(
        "majority_distinguishing",
        c.colors_used(),
        majority_violations(g, c, MajorityMode::Strict),
        witness,
    ))
}

/// Proper: no color twice at a vertex.
pub fn verify_proper(g: &Graph, c: &EdgeColoring) -> Result<VerificationReport, ColoringError> {
    c.check(g)?;
    let mut violations = Vec::new();
    for (v, t) in c.tallies(g).iter().enumerate() {
        for (&color, &count) in t {
            if count > 1 {
                violations.push(Violation {
                    vertex: v,
                    color,
                    count,
                    threshold: 1,
                    direction: None,
                });
            }
        }
    }
    Ok(VerificationReport::new("proper", c.colors_used(), violations, None))
}

pub fn verify_proper_distinguishing(g: &Graph, c: &EdgeColoring) -> Result<VerificationReport, ColoringError> {
    let mut r = verify_proper(g, c)?;
    let witness = find_color_preserving_automorphism(g, c)?;
    r = VerificationReport::new("proper_distinguishing", r.colors_used, r.violations, witness);
    Ok(r)
}

/// The verifier matching an index kind.
pub fn verify_index_kind(g: &Graph, c: &EdgeColoring, kind: IndexKind) -> Result<VerificationReport, ColoringError> {
    match kind {
        IndexKind::Majority => verify_majority(g, c, MajorityMode::Strict),
        IndexKind::Distinguishing => verify_distinguishing(g, c),
        IndexKind::MajorityDistinguishing => verify_majority_distinguishing(g, c),
        IndexKind::ProperDistinguishing => verify_proper_distinguishing(g, c),
    }
}

fn arc_violations(d: &Digraph, c: &ArcColoring) -> Vec<Violation> {
    let mut out = Vec::new();
    for v in 0..d.n() {
        for (dir, arcs) in [(Direction::In, d.in_arcs(v)), (Direction::Out, d.out_arcs(v))] {
            let mut t: std::collections::BTreeMap<Color, usize> = Default::default();
            for &(_, id) in arcs {
                *t.entry(c.colors[id]).or_insert(0) += 1;
            }
            let limit = arcs.len() / 2;
            for (color, count) in t {
                if count > limit {
                    out.push(Violation {
                        vertex: v,
                        color,
                        count,
                        threshold: limit,
                        direction: Some(dir),
                    });
                }
            }
        }
    }
    out
}

/// Strict majority on in-arcs and on out-arcs separately.
pub fn verify_arc_majority(d: &Digraph, c: &ArcColoring) -> Result<VerificationReport, ColoringError> {
    c.check(d)?;
    Ok(VerificationReport::new("arc_majority", c.colors_used(), arc_violations(d, c), None))
}

pub fn verify_arc_distinguishing(d: &Digraph, c: &ArcColoring) -> Result<VerificationReport, ColoringError> {
    let witness = find_arc_color_preserving_automorphism(d, c)?;
    Ok(VerificationReport::new("arc_distinguishing", c.colors_used(), Vec::new(), witness))
}

pub fn verify_arc_majority_distinguishing(d: &Digraph, c: &ArcColoring) -> Result<VerificationReport, ColoringError> {
    c.check(d)?;
    let witness = find_arc_color_preserving_automorphism(d, c)?;
    Ok(VerificationReport::new(
        "arc_majority_distinguishing",
        c.colors_used(),
        arc_violations(d, c),
        witness,
    ))
}
