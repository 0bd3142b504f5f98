//! Exhaustive small-graph experiments on two open questions:
//!
//! * `underlying-graph`: how the Betti numbers of `R/I(D)` compare with those
//!   of the underlying unweighted graph `G`. Tested claims are `β_i(G) ≤ β_i(D)`
//!   for every `i`, `pdim(G) ≤ pdim(D)` and `reg(G) ≤ reg(D)`.
//! * `weight-reduction`: for every non-trivial vertex `v` (sink or not) and
//!   `D'` the weight-reduced form on `v`, whether the totals agree, whether
//!   the sink-case graded recursion through `D \ v` still holds, whether the
//!   projective dimension agrees and whether the regularity drops by one.
//!
//! Graphs are enumerated up to relabeling, using a canonical form computed
//! by trying every vertex permutation.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rayon::prelude::*;

use crate::betti::{multigraded_betti, quotient_betti, GradedBetti};
use crate::cli::render_graph_file;
use crate::error::{Error, Result};
use crate::graph::WeightedOrientedGraph;
use crate::homology::FieldSpec;
use crate::ideal::edge_ideal;

pub const MAX_N: usize = 6;
pub const MAX_WEIGHT: u32 = 3;
/// Counterexamples printed per claim.
pub const SHOWN_COUNTEREXAMPLES: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Question {
    UnderlyingGraph,
    WeightReduction,
}

impl FromStr for Question {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "underlying-graph" => Ok(Self::UnderlyingGraph),
            "weight-reduction" => Ok(Self::WeightReduction),
            _ => Err(Error::Bounds(format!("unknown question `{s}`"))),
        }
    }
}

impl fmt::Display for Question {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::UnderlyingGraph => "underlying-graph",
            Self::WeightReduction => "weight-reduction",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExperimentBounds {
    pub max_n: usize,
    pub max_weight: u32,
    pub question: Question,
}

impl ExperimentBounds {
    pub fn validate(&self, force: bool) -> Result<()> {
        if self.max_n == 0 || self.max_weight == 0 {
            return Err(Error::Bounds(
                "max-n and max-weight must be positive".into(),
            ));
        }
        if !force && (self.max_n > MAX_N || self.max_weight > MAX_WEIGHT) {
            return Err(Error::Bounds(format!(
                "max-n {} / max-weight {} exceed {MAX_N} / {MAX_WEIGHT}; pass --force to run anyway",
                self.max_n, self.max_weight
            )));
        }
        Ok(())
    }
}

type CanonicalKey = (Vec<(usize, usize)>, Vec<u32>);

/// Lexicographically least `(edges, weights)` over all relabelings.
pub fn canonical_form(d: &WeightedOrientedGraph) -> CanonicalKey {
    let n = d.n();
    let edges: Vec<_> = d.edges().collect();
    (0..n)
        .permutations(n)
        .map(|perm| {
            // perm[v - 1] is the new 0-based label of v
            let mut e: Vec<_> = edges
                .iter()
                .map(|&(u, v)| (perm[u - 1] + 1, perm[v - 1] + 1))
                .collect();
            e.sort_unstable();
            let mut w = vec![0; n];
            for v in 1..=n {
                w[perm[v - 1]] = d.weight(v);
            }
            (e, w)
        })
        .min()
        .expect("n >= 1")
}

/// One representative per isomorphism class of weighted oriented graphs on
/// exactly `n` vertices with weights `<= max_weight`, edgeless graphs included.
pub fn graphs_on(n: usize, max_weight: u32) -> Vec<WeightedOrientedGraph> {
    let pairs: Vec<(usize, usize)> = (1..=n).tuple_combinations().collect();
    let mut shapes = BTreeSet::new();
    let mut oriented = Vec::new();
    for code in 0..3usize.pow(pairs.len() as u32) {
        let mut c = code;
        let mut edges = Vec::new();
        for &(u, v) in &pairs {
            match c % 3 {
                1 => edges.push((u, v)),
                2 => edges.push((v, u)),
                _ => {}
            }
            c /= 3;
        }
        let g = WeightedOrientedGraph::new(n, &edges, &[]).expect("simple by construction");
        if shapes.insert(canonical_form(&g)) {
            oriented.push(g);
        }
    }
    let classes: Vec<Vec<WeightedOrientedGraph>> = oriented
        .par_iter()
        .map(|g| {
            let free: Vec<usize> = (1..=n).filter(|&v| !g.role(v).is_source).collect();
            let edges: Vec<_> = g.edges().collect();
            if free.is_empty() {
                return vec![g.clone()];
            }
            let mut seen = BTreeSet::new();
            let mut out = Vec::new();
            for ws in (0..free.len())
                .map(|_| 1..=max_weight)
                .multi_cartesian_product()
            {
                let weights: Vec<_> = free.iter().copied().zip(ws).collect();
                let d = WeightedOrientedGraph::new(n, &edges, &weights).expect("valid weights");
                if seen.insert(canonical_form(&d)) {
                    out.push(d);
                }
            }
            out
        })
        .collect();
    classes.into_iter().flatten().collect()
}

/// Representatives for every vertex count in `1..=max_n`.
pub fn enumerate_graphs(max_n: usize, max_weight: u32) -> Vec<WeightedOrientedGraph> {
    (1..=max_n).flat_map(|n| graphs_on(n, max_weight)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tally {
    pub holds: usize,
    pub fails: usize,
    /// First few failing instances, each a graph and the reduced vertex.
    pub counterexamples: Vec<(WeightedOrientedGraph, Option<usize>)>,
}

impl Tally {
    fn new() -> Self {
        Self {
            holds: 0,
            fails: 0,
            counterexamples: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, d: &WeightedOrientedGraph, v: Option<usize>) {
        if ok {
            self.holds += 1;
        } else {
            self.fails += 1;
            if self.counterexamples.len() < SHOWN_COUNTEREXAMPLES {
                self.counterexamples.push((d.clone(), v));
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExplorationReport {
    pub bounds: ExperimentBounds,
    pub field: u32,
    pub graphs: usize,
    pub instances: usize,
    /// Keyed by `scope/claim`.
    pub claims: BTreeMap<String, Tally>,
}

impl ExplorationReport {
    pub fn tally(&self, key: &str) -> Option<&Tally> {
        self.claims.get(key)
    }
}

impl fmt::Display for ExplorationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = &self.bounds;
        writeln!(
            f,
            "explore question={} max_n={} max_weight={} field={}",
            b.question, b.max_n, b.max_weight, self.field
        )?;
        writeln!(f, "graphs {}", self.graphs)?;
        writeln!(f, "instances {}", self.instances)?;
        for (key, t) in &self.claims {
            writeln!(f, "claim {key} holds={} fails={}", t.holds, t.fails)?;
        }
        for (key, t) in &self.claims {
            for (d, v) in &t.counterexamples {
                match v {
                    Some(v) => writeln!(f, "counterexample {key} vertex={v}")?,
                    None => writeln!(f, "counterexample {key}")?,
                }
                f.write_str(&render_graph_file(d))?;
                writeln!(f, "end")?;
            }
        }
        Ok(())
    }
}

/// Outcome of one instance: `(claim, holds)` pairs under each scope.
type Outcome = (
    WeightedOrientedGraph,
    Option<usize>,
    Vec<(&'static str, Vec<(&'static str, bool)>)>,
);

pub fn run_explore(
    bounds: ExperimentBounds,
    field: FieldSpec,
    force: bool,
) -> Result<ExplorationReport> {
    bounds.validate(force)?;
    let graphs: Vec<_> = enumerate_graphs(bounds.max_n, bounds.max_weight)
        .into_iter()
        .filter(|d| d.edge_count() > 0)
        .collect();
    let outcomes: Vec<Vec<Outcome>> = graphs
        .par_iter()
        .map(|d| match bounds.question {
            Question::UnderlyingGraph => underlying_graph(d, field).map(|o| vec![o]),
            Question::WeightReduction => weight_reduction(d, field),
        })
        .collect::<Result<_>>()?;
    let mut claims: BTreeMap<String, Tally> = BTreeMap::new();
    let mut instances = 0;
    for (d, v, scopes) in outcomes.iter().flatten() {
        instances += 1;
        for (scope, results) in scopes {
            for (claim, ok) in results {
                claims
                    .entry(format!("{scope}/{claim}"))
                    .or_insert_with(Tally::new)
                    .record(*ok, d, *v);
            }
        }
    }
    Ok(ExplorationReport {
        bounds,
        field: field.p(),
        graphs: graphs.len(),
        instances,
        claims,
    })
}

fn underlying(d: &WeightedOrientedGraph) -> WeightedOrientedGraph {
    let edges: Vec<_> = d.edges().map(|(u, v)| (u.min(v), u.max(v))).collect();
    WeightedOrientedGraph::new(d.n(), &edges, &[]).expect("same simple graph")
}

fn underlying_graph(d: &WeightedOrientedGraph, field: FieldSpec) -> Result<Outcome> {
    let td = quotient_betti(&edge_ideal(d), field)?;
    let tg = quotient_betti(&edge_ideal(&underlying(d)), field)?;
    let (bd, bg) = (td.totals(), tg.totals());
    let totals = bg
        .iter()
        .enumerate()
        .all(|(i, &g)| g <= bd.get(i).copied().unwrap_or(0));
    let (id, ig) = (td.invariants(), tg.invariants());
    let claims = vec![
        ("totals-bounded", totals),
        ("pdim-bounded", ig.pdim <= id.pdim),
        ("reg-bounded", ig.reg <= id.reg),
    ];
    Ok((d.clone(), None, vec![("all", claims)]))
}

fn weight_reduction(d: &WeightedOrientedGraph, field: FieldSpec) -> Result<Vec<Outcome>> {
    let n = d.n();
    let t = multigraded_betti(&edge_ideal(d), field)?;
    let mut out = Vec::new();
    for v in (1..=n).filter(|&v| d.weight(v) >= 2) {
        let reduced = d.weight_reduce(v)?;
        let r = multigraded_betti(&edge_ideal(&reduced), field)?;
        let s = match d.delete_vertex(v)? {
            Some(sub) => multigraded_betti(&edge_ideal(&sub.graph), field)?.graded(),
            None => GradedBetti::default(),
        };
        let (gt, gr) = (t.graded(), r.graded());
        let keys: BTreeSet<(i64, i64)> = gt
            .entries()
            .chain(gr.entries().map(|(i, j, x)| (i, j + 1, x)))
            .chain(s.entries())
            .chain(s.entries().map(|(i, j, x)| (i, j + 1, x)))
            .map(|(i, j, _)| (i as i64, j as i64))
            .collect();
        let recursion = keys.iter().all(|&(i, j)| {
            gt.get(i, j) as i64
                == gr.get(i, j - 1) as i64 - s.get(i, j - 1) as i64 + s.get(i, j) as i64
        });
        let (qt, qr) = (t.to_quotient().invariants(), r.to_quotient().invariants());
        let claims = vec![
            ("a-totals-equal", t.totals() == r.totals()),
            ("b-graded-recursion", recursion),
            ("c-pdim-equal", qt.pdim == qr.pdim),
            ("d-reg-drops-by-one", qt.reg == qr.reg + 1),
        ];
        let mut scopes = vec![("all", claims.clone())];
        scopes.push((
            if d.role(v).is_sink {
                "sink"
            } else {
                "non-sink"
            },
            claims.clone(),
        ));
        if d.weight(v) > 2 {
            scopes.push(("weight-above-2", claims));
        }
        out.push((d.clone(), Some(v), scopes));
    }
    Ok(out)
}
