//! Named graph families. Weight lists always have one entry per vertex;
//! entries for sources are normalized to 1.

use std::fmt;
use std::str::FromStr;

use super::WeightedOrientedGraph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    Path,
    Cycle,
    CompleteNatural,
    StarCenterSink,
    RootedTree,
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "path" => Self::Path,
            "cycle" => Self::Cycle,
            "complete_natural" => Self::CompleteNatural,
            "star_center_sink" => Self::StarCenterSink,
            "rooted_tree" => Self::RootedTree,
            other => return Err(Error::Family(format!("unknown family `{other}`"))),
        })
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Path => "path",
            Self::Cycle => "cycle",
            Self::CompleteNatural => "complete_natural",
            Self::StarCenterSink => "star_center_sink",
            Self::RootedTree => "rooted_tree",
        })
    }
}

/// Edge orientation for paths and cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Orientation {
    /// Every edge `i -> i+1`, and `n -> 1` closing a cycle.
    Natural,
    /// One flag per edge in path order; `true` keeps the natural direction.
    PerEdge(Vec<bool>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyParams {
    pub n: usize,
    pub weights: Vec<u32>,
    pub orientation: Orientation,
    /// Parents of vertices `2..=n` for a rooted tree.
    pub parents: Option<Vec<usize>>,
}

impl FamilyParams {
    pub fn new(n: usize, weights: Vec<u32>) -> Self {
        Self {
            n,
            weights,
            orientation: Orientation::Natural,
            parents: None,
        }
    }
}

pub fn family(kind: FamilyKind, params: &FamilyParams) -> Result<WeightedOrientedGraph> {
    if params.weights.len() != params.n {
        return Err(Error::Family(format!(
            "{} weights given for {} vertices",
            params.weights.len(),
            params.n
        )));
    }
    match kind {
        FamilyKind::Path => path(&params.weights, &params.orientation),
        FamilyKind::Cycle => cycle(&params.weights, &params.orientation),
        FamilyKind::CompleteNatural => complete_natural(&params.weights),
        FamilyKind::StarCenterSink => star_center_sink(&params.weights),
        FamilyKind::RootedTree => {
            let parents = params
                .parents
                .as_deref()
                .ok_or_else(|| Error::Family("rooted_tree needs a parent array".into()))?;
            rooted_tree(&params.weights, parents)
        }
    }
}

fn at_least_two(weights: &[u32]) -> Result<usize> {
    if weights.len() < 2 {
        return Err(Error::Family(format!("size {} is below 2", weights.len())));
    }
    Ok(weights.len())
}

fn weighted(weights: &[u32]) -> Vec<(usize, u32)> {
    weights
        .iter()
        .enumerate()
        .map(|(k, &w)| (k + 1, w))
        .collect()
}

fn oriented(pairs: Vec<(usize, usize)>, orientation: &Orientation) -> Result<Vec<(usize, usize)>> {
    match orientation {
        Orientation::Natural => Ok(pairs),
        Orientation::PerEdge(flags) => {
            if flags.len() != pairs.len() {
                return Err(Error::Family(format!(
                    "{} orientation flags given for {} edges",
                    flags.len(),
                    pairs.len()
                )));
            }
            Ok(pairs
                .into_iter()
                .zip(flags)
                .map(|((u, v), &fwd)| if fwd { (u, v) } else { (v, u) })
                .collect())
        }
    }
}

pub fn path(weights: &[u32], orientation: &Orientation) -> Result<WeightedOrientedGraph> {
    let n = at_least_two(weights)?;
    let edges = oriented((1..n).map(|i| (i, i + 1)).collect(), orientation)?;
    WeightedOrientedGraph::new(n, &edges, &weighted(weights))
}

pub fn cycle(weights: &[u32], orientation: &Orientation) -> Result<WeightedOrientedGraph> {
    let n = weights.len();
    if n < 3 {
        return Err(Error::Family(format!(
            "a cycle needs at least 3 vertices, got {n}"
        )));
    }
    let mut pairs: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
    pairs.push((n, 1));
    WeightedOrientedGraph::new(n, &oriented(pairs, orientation)?, &weighted(weights))
}

/// Edges `(i, j)` for all `i < j`.
pub fn complete_natural(weights: &[u32]) -> Result<WeightedOrientedGraph> {
    let n = at_least_two(weights)?;
    let edges: Vec<_> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect();
    WeightedOrientedGraph::new(n, &edges, &weighted(weights))
}

/// Edges `(i, n)` for all `i < n`.
pub fn star_center_sink(weights: &[u32]) -> Result<WeightedOrientedGraph> {
    let n = at_least_two(weights)?;
    let edges: Vec<_> = (1..n).map(|i| (i, n)).collect();
    WeightedOrientedGraph::new(n, &edges, &weighted(weights))
}

/// Tree rooted at vertex 1 with every edge oriented away from the root.
/// `parents[k]` is the parent of vertex `k + 2`.
pub fn rooted_tree(weights: &[u32], parents: &[usize]) -> Result<WeightedOrientedGraph> {
    let n = at_least_two(weights)?;
    if parents.len() != n - 1 {
        return Err(Error::Family(format!(
            "{} parents given for {} non-root vertices",
            parents.len(),
            n - 1
        )));
    }
    let parent_of = |v: usize| parents[v - 2];
    for v in 2..=n {
        let p = parent_of(v);
        if !(1..=n).contains(&p) || p == v {
            return Err(Error::Family(format!("vertex {v} has invalid parent {p}")));
        }
        let mut cur = v;
        for _ in 0..n {
            if cur == 1 {
                break;
            }
            cur = parent_of(cur);
        }
        if cur != 1 {
            return Err(Error::Family(format!("vertex {v} does not reach the root")));
        }
    }
    let edges: Vec<_> = (2..=n).map(|v| (parent_of(v), v)).collect();
    WeightedOrientedGraph::new(n, &edges, &weighted(weights))
}
