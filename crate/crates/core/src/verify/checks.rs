use std::collections::BTreeSet;

use itertools::Itertools;

use super::{taylor_betti, Check, VerificationReport};
use crate::betti::{multigraded_betti, quotient_betti, BettiTable, GradedBetti, Ideal, Quotient};
use crate::error::{Error, Result};
use crate::graph::WeightedOrientedGraph;
use crate::homology::FieldSpec;
use crate::ideal::{edge_ideal, Monomial, MonomialIdeal};

fn graph_table(d: &WeightedOrientedGraph, field: FieldSpec) -> Result<BettiTable<Quotient>> {
    quotient_betti(&edge_ideal(d), field)
}

/// Support of several graded tables, each shifted by `(di, dj)`.
fn shifted_keys(parts: &[(&GradedBetti, i64, i64)]) -> BTreeSet<(i64, i64)> {
    parts
        .iter()
        .flat_map(|&(g, di, dj)| {
            g.entries()
                .map(move |(i, j, _)| (i as i64 + di, j as i64 + dj))
        })
        .collect()
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, t| acc * (n - t) as u64 / (t + 1) as u64)
}

/// All generators share one degree `d` and `β_{i,j}(I) = 0` unless `j = i + d`.
pub(crate) fn is_linear(ideal: &MonomialIdeal, field: FieldSpec) -> Result<bool> {
    let Some(d) = ideal.generators().first().map(|g| g.degree() as usize) else {
        return Ok(false);
    };
    let table = multigraded_betti(ideal, field)?;
    Ok(table.graded().entries().all(|(i, j, _)| j == i + d))
}

pub fn oracle_compare(ideal: &MonomialIdeal, field: FieldSpec) -> Result<VerificationReport> {
    let koszul = quotient_betti(ideal, field)?;
    let taylor = taylor_betti(ideal, field)?;
    let mut report = VerificationReport::new(ideal.to_string(), field.p());
    let keys: BTreeSet<(usize, Monomial)> = koszul
        .entries()
        .chain(taylor.entries())
        .map(|(i, b, _)| (i, b.clone()))
        .collect();
    report.push(Check::identity(
        "oracle/multigraded",
        keys,
        |(i, b)| koszul.get(*i, b) as i64,
        |(i, b)| taylor.get(*i, b) as i64,
    ));
    report.push(Check::compare(
        "oracle/totals",
        taylor.totals().iter().join(","),
        koszul.totals().iter().join(","),
    ));
    Ok(report)
}

pub fn check_betti_splitting(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    k: &MonomialIdeal,
    field: FieldSpec,
) -> Result<VerificationReport> {
    for part in [j, k] {
        if part.n_vars() != i.n_vars() {
            return Err(Error::AmbientMismatch {
                expected: i.n_vars(),
                found: part.n_vars(),
            });
        }
    }
    if j.is_zero() || k.is_zero() {
        return Err(Error::BadSplit("both parts must be nonzero".into()));
    }
    let gi: BTreeSet<&Monomial> = i.generators().iter().collect();
    let gj: BTreeSet<&Monomial> = j.generators().iter().collect();
    let gk: BTreeSet<&Monomial> = k.generators().iter().collect();
    if !gj.is_disjoint(&gk) {
        return Err(Error::BadSplit("parts share a generator".into()));
    }
    if gj.union(&gk).copied().collect::<BTreeSet<_>>() != gi {
        return Err(Error::BadSplit(
            "parts do not partition the minimal generators".into(),
        ));
    }
    let jk = j.intersect(k);
    let [ti, tj, tk, tjk] = [i, j, k, &jk].map(|x| quotient_betti(x, field).map(|t| t.graded()));
    let (ti, tj, tk, tjk) = (ti?, tj?, tk?, tjk?);
    let keys = shifted_keys(&[(&ti, 0, 0), (&tj, 0, 0), (&tk, 0, 0), (&tjk, 1, 0)]);
    let lhs = |&(a, b): &(i64, i64)| ti.get(a, b) as i64;
    let rhs = |&(a, b): &(i64, i64)| (tj.get(a, b) + tk.get(a, b) + tjk.get(a - 1, b)) as i64;
    let mut report = VerificationReport::new(format!("{i} = {j} + {k}"), field.p());
    report.push(Check::identity(
        "splitting/first-row",
        keys.iter().copied().filter(|&(a, b)| a == 1 && b >= 1),
        lhs,
        rhs,
    ));
    report.push(Check::identity(
        "splitting/higher-rows",
        keys.iter().copied().filter(|&(a, b)| a >= 2 && b >= 1),
        lhs,
        rhs,
    ));
    Ok(report)
}

/// One splitting check per vertex `v`, with `J` the generators divisible by
/// `x_v`. Applicable when both parts are nonzero and `J` is linear.
pub fn check_linear_splittings(
    d: &WeightedOrientedGraph,
    field: FieldSpec,
) -> Result<VerificationReport> {
    let ideal = edge_ideal(d);
    let n = d.n();
    let mut report = VerificationReport::new(d.to_string(), field.p());
    for v in 1..=n {
        let id = format!("splitting/x{v}");
        let (j, k): (Vec<Monomial>, Vec<Monomial>) = ideal
            .generators()
            .iter()
            .cloned()
            .partition(|g| g.exponent(v) > 0);
        if j.is_empty() || k.is_empty() {
            report.push(Check::not_applicable(id, "both parts nonzero"));
            continue;
        }
        let (j, k) = (MonomialIdeal::new(n, j)?, MonomialIdeal::new(n, k)?);
        if !is_linear(&j, field)? {
            report.push(Check::not_applicable(id, "J has a linear resolution"));
            continue;
        }
        report.absorb(&id, check_betti_splitting(&ideal, &j, &k, field)?);
    }
    Ok(report)
}

pub fn check_weight_reduction(
    d: &WeightedOrientedGraph,
    v: usize,
    field: FieldSpec,
) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(format!("{d} at x{v}"), field.p());
    let role = d.role(v);
    if !role.is_sink || role.is_source {
        report.push(Check::not_applicable("weight-reduction", "v is a sink"));
        return Ok(report);
    }
    let w = d.weight(v);
    if w < 2 {
        report.push(Check::not_applicable("weight-reduction", "w_v >= 2"));
        return Ok(report);
    }
    let n = d.n();
    let reduced = d.weight_reduce(v)?;
    let deleted = d.delete_vertex(v)?.expect("a sink has an in-neighbor");
    let t: BettiTable<Ideal> = multigraded_betti(&edge_ideal(d), field)?;
    let r: BettiTable<Ideal> = multigraded_betti(&edge_ideal(&reduced), field)?;
    let s: BettiTable<Ideal> = multigraded_betti(&edge_ideal(&deleted.graph), field)?
        .map_multidegrees(n, |b| b.embed(&deleted.labels, n));

    let zero_keys: BTreeSet<(usize, Monomial)> = [&t, &r, &s]
        .iter()
        .flat_map(|x| x.entries())
        .filter(|(_, b, _)| b.exponent(v) == 0)
        .map(|(i, b, _)| (i, b.clone()))
        .collect();
    let c1 = Check::identity(
        "b_v=0/deletion",
        zero_keys.iter().cloned(),
        |(i, b)| t.get(*i, b) as i64,
        |(i, b)| s.get(*i, b) as i64,
    );
    let c1r = Check::identity(
        "b_v=0/reduction",
        zero_keys.iter().cloned(),
        |(i, b)| t.get(*i, b) as i64,
        |(i, b)| r.get(*i, b) as i64,
    );
    let stray: Vec<String> = t
        .entries()
        .filter(|(_, b, _)| b.exponent(v) != 0 && b.exponent(v) != w)
        .map(|(i, b, _)| format!("({i},{})", b.to_csv()))
        .collect();
    let c_support = Check::holds(
        "b_v-support",
        stray.is_empty(),
        format!("b_v in {{0,{w}}}"),
        stray
            .first()
            .cloned()
            .unwrap_or_else(|| format!("b_v in {{0,{w}}}")),
    );
    let transported = t.map_multidegrees(n, |b| transport(b, v, w));
    let shift_keys: BTreeSet<(usize, Monomial)> = transported
        .entries()
        .chain(r.entries())
        .map(|(i, b, _)| (i, b.clone()))
        .collect();
    let c2 = Check::identity(
        "b_v=w/transport",
        shift_keys,
        |(i, b)| transported.get(*i, b) as i64,
        |(i, b)| r.get(*i, b) as i64,
    );
    let c3 = Check::compare(
        "totals",
        r.totals().iter().join(","),
        t.totals().iter().join(","),
    );

    let (gt, gr, gs) = (t.graded(), r.graded(), s.graded());
    let keys = shifted_keys(&[(&gt, 0, 0), (&gr, 0, 1), (&gs, 0, 1), (&gs, 0, 0)]);
    let c4 = Check::identity(
        "graded-recursion",
        keys,
        |&(i, j)| gt.get(i, j) as i64,
        |&(i, j)| gr.get(i, j - 1) as i64 - gs.get(i, j - 1) as i64 + gs.get(i, j) as i64,
    );
    let (qt, qr) = (t.to_quotient().invariants(), r.to_quotient().invariants());
    let c5 = Check::compare("pdim", qr.pdim, qt.pdim);
    let c6 = Check::compare("reg", qr.reg + 1, qt.reg);
    let c6w = Check::holds(
        "reg-within-one",
        qt.reg == qr.reg || qt.reg == qr.reg + 1,
        format!("{{{},{}}}", qr.reg, qr.reg + 1),
        qt.reg.to_string(),
    );
    // reg(D) = max(reg of the b_v = w-1 part of D' plus one, reg(D \ v))
    let strand_reg = r
        .entries()
        .filter(|(_, b, _)| b.exponent(v) == w - 1)
        .map(|(i, b, _)| b.degree() as usize - i - 1)
        .max();
    let rest_reg = s.to_quotient().invariants().reg;
    let c6s = Check::compare(
        "reg-by-strand",
        strand_reg.map_or(rest_reg, |x| rest_reg.max(x + 1)),
        qt.reg,
    );
    let consistent = !(c1.status == super::Status::Pass
        && c2.status == super::Status::Pass
        && c_support.status == super::Status::Pass)
        || c3.status == super::Status::Pass;
    let c7 = Check::holds(
        "consistency",
        consistent,
        "multidegree checks imply totals",
        if consistent {
            "multidegree checks imply totals"
        } else {
            "totals disagree despite multidegree agreement"
        },
    );
    for c in [c1, c1r, c_support, c2, c3, c4, c5, c6, c6w, c6s, c7] {
        report.push(c.with_prefix("weight-reduction"));
    }
    Ok(report)
}

/// Lowers `b_v` from `w` to `w - 1`, leaving other multidegrees alone.
fn transport(b: &Monomial, v: usize, w: u32) -> Monomial {
    let mut e = b.exponents().to_vec();
    if e[v - 1] == w {
        e[v - 1] = w - 1;
    }
    Monomial::new(e)
}

pub fn check_mapping_cone(
    d: &WeightedOrientedGraph,
    v: usize,
    field: FieldSpec,
) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(format!("{d} at x{v}"), field.p());
    let role = d.role(v);
    if !(role.is_leaf && role.is_sink) {
        report.push(Check::not_applicable(
            "mapping-cone",
            "v is a leaf and a sink",
        ));
        return Ok(report);
    }
    let u = d.in_neighbors(v)[0];
    let w = d.weight(v) as i64;
    let deleted = d.delete_vertex(v)?.expect("a leaf has a neighbor");
    let u_new = deleted
        .labels
        .iter()
        .position(|&x| x == u)
        .expect("u survives")
        + 1;
    let rest = edge_ideal(&deleted.graph);
    let colon = rest.colon(&Monomial::var_power(deleted.graph.n(), u_new, 1));
    let gt = graph_table(d, field)?.graded();
    let ga = quotient_betti(&rest, field)?.graded();
    let gb = quotient_betti(&colon, field)?.graded();
    let keys = shifted_keys(&[(&gt, 0, 0), (&ga, 0, 0), (&gb, 1, w + 1)]);
    report.push(Check::identity(
        "mapping-cone/recursion",
        keys,
        |&(i, j)| gt.get(i, j) as i64,
        |&(i, j)| (ga.get(i, j) + gb.get(i - 1, j - w - 1)) as i64,
    ));
    let expected_reg = ga.reg().max(gb.reg() + w as usize);
    let expected_pdim = ga.pdim().max(gb.pdim() + 1);
    report.push(Check::compare("mapping-cone/reg", expected_reg, gt.reg()));
    report.push(Check::compare(
        "mapping-cone/pdim",
        expected_pdim,
        gt.pdim(),
    ));
    Ok(report)
}

pub fn check_complete_sink(
    d: &WeightedOrientedGraph,
    field: FieldSpec,
) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(d.to_string(), field.p());
    let n = d.n();
    if n < 3 || !d.is_tournament() {
        report.push(Check::not_applicable(
            "complete-sink",
            "complete on at least 3 vertices",
        ));
        return Ok(report);
    }
    let Some(&s) = d.sinks().first() else {
        report.push(Check::not_applicable("complete-sink", "has a sink"));
        return Ok(report);
    };
    let w = d.weight(s) as i64;
    let rest = d.delete_vertex(s)?.expect("n >= 3");
    let gt = graph_table(d, field)?.graded();
    let gp = graph_table(&rest.graph, field)?.graded();
    let mut keys = shifted_keys(&[(&gt, 0, 0), (&gp, 0, 0), (&gp, 1, w)]);
    keys.extend((1..n as i64).map(|i| (i, i + w)));
    let binom = |i: i64, j: i64| {
        if j == i + w {
            binomial(n - 1, i as usize)
        } else {
            0
        }
    };
    report.push(Check::identity(
        "complete-sink/recursion",
        keys.into_iter().filter(|&(i, _)| i >= 2),
        |&(i, j)| gt.get(i, j) as i64,
        |&(i, j)| (gp.get(i, j) + binom(i, j) + gp.get(i - 1, j - w)) as i64,
    ));
    let ideal = edge_ideal(d);
    let (j, k): (Vec<Monomial>, Vec<Monomial>) = ideal
        .generators()
        .iter()
        .cloned()
        .partition(|g| g.exponent(s) > 0);
    let split = check_betti_splitting(
        &ideal,
        &MonomialIdeal::new(n, j)?,
        &MonomialIdeal::new(n, k)?,
        field,
    )?;
    report.absorb("complete-sink", split);
    let pdim = gt.pdim();
    report.push(Check::holds(
        "complete-sink/pdim",
        pdim == n - 1 || pdim == n,
        format!("{{{},{n}}}", n - 1),
        pdim.to_string(),
    ));
    report.push(Check::compare(
        "complete-sink/reg",
        gp.reg() + w as usize - 1,
        gt.reg(),
    ));
    Ok(report)
}

/// Vertex order of a graph whose underlying graph is a path, read so that
/// the last two edges point forward.
fn path_order_ending_forward(d: &WeightedOrientedGraph) -> Option<Vec<usize>> {
    let n = d.n();
    if n < 3 || d.edge_count() != n - 1 || (1..=n).any(|v| d.degree(v) > 2) {
        return None;
    }
    let ends: Vec<usize> = (1..=n).filter(|&v| d.degree(v) == 1).collect();
    for &start in &ends {
        let mut order = vec![start];
        while order.len() < n {
            let cur = *order.last().unwrap();
            let prev = order.len().checked_sub(2).map(|k| order[k]);
            match (1..=n).find(|&x| Some(x) != prev && x != cur && d.adjacent(cur, x)) {
                Some(next) => order.push(next),
                None => break,
            }
        }
        if order.len() == n
            && d.has_edge(order[n - 3], order[n - 2])
            && d.has_edge(order[n - 2], order[n - 1])
        {
            return Some(order);
        }
    }
    None
}

fn is_acyclic(d: &WeightedOrientedGraph) -> bool {
    let n = d.n();
    let mut indegree: Vec<usize> = (0..=n)
        .map(|v| if v == 0 { 0 } else { d.in_neighbors(v).len() })
        .collect();
    let mut ready: Vec<usize> = (1..=n).filter(|&v| indegree[v] == 0).collect();
    let mut removed = 0;
    while let Some(u) = ready.pop() {
        removed += 1;
        for v in d.out_neighbors(u) {
            indegree[v] -= 1;
            if indegree[v] == 0 {
                ready.push(v);
            }
        }
    }
    removed == n
}

fn prefix_reg(p: &WeightedOrientedGraph, len: usize, field: FieldSpec) -> Result<usize> {
    if len == 0 {
        return Ok(0);
    }
    let sub = p.induced_subgraph(&(1..=len).collect::<Vec<_>>())?;
    Ok(graph_table(&sub.graph, field)?.invariants().reg)
}

pub fn check_closed_formulas(
    d: &WeightedOrientedGraph,
    field: FieldSpec,
) -> Result<VerificationReport> {
    let n = d.n();
    let sum = d.weight_sum() as usize;
    let table = graph_table(d, field)?;
    let inv = table.invariants();
    let top = Monomial::new(d.weights().to_vec());
    let mut report = VerificationReport::new(d.to_string(), field.p());

    let full = d.has_full_pdim_structure();
    report.push(Check::compare(
        "max-pdim/characterization",
        full,
        inv.pdim == n,
    ));
    if full {
        report.push(Check::holds(
            "max-pdim/top-betti",
            table.get(n, &top) != 0,
            "nonzero",
            table.get(n, &top).to_string(),
        ));
        report.push(Check::compare("max-pdim/reg", sum - n, inv.reg));
    } else {
        report.push(Check::not_applicable(
            "max-pdim/reg",
            "every vertex has a non-trivial in-neighbor",
        ));
    }

    match d.root() {
        Some(r) if n >= 2 && is_acyclic(d) && (1..=n).all(|v| v == r || d.weight(v) >= 2) => {
            report.push(Check::compare("rooted/pdim", n - 1, inv.pdim));
            report.push(Check::compare("rooted/reg", sum - n + 1, inv.reg));
            let b = table.get(n - 1, &top);
            report.push(Check::holds(
                "rooted/top-betti",
                b != 0,
                "nonzero",
                b.to_string(),
            ));
        }
        _ => report.push(Check::not_applicable(
            "rooted",
            "acyclic rooted with non-trivial non-root weights",
        )),
    }

    match d.transitive_order() {
        Some(_) if n >= 2 && d.weights().iter().any(|&w| w >= 2) => {
            report.push(Check::compare("complete-natural/pdim", n - 1, inv.pdim));
            report.push(Check::compare("complete-natural/reg", sum - n + 1, inv.reg));
        }
        _ => report.push(Check::not_applicable(
            "complete-natural",
            "naturally oriented complete with a non-trivial weight",
        )),
    }

    report.checks.extend(check_complete_sink(d, field)?.checks);

    match d.star_center_sink() {
        Some(c) => {
            let w = d.weight(c) as usize;
            report.push(Check::compare("star-sink/pdim", n - 1, inv.pdim));
            report.push(Check::compare("star-sink/reg", w, inv.reg));
            let g = table.graded();
            let off: Vec<String> = (1..n)
                .map(|i| (i, i + w))
                .filter(|&(i, j)| g.get(i as i64, j as i64) != binomial(n - 1, i))
                .chain(
                    g.entries()
                        .filter(|&(i, j, _)| i >= 1 && j != i + w)
                        .map(|(i, j, _)| (i, j)),
                )
                .map(|(i, j)| format!("({i},{j}):{}", g.get(i as i64, j as i64)))
                .collect();
            report.push(Check::holds(
                "star-sink/linear",
                off.is_empty(),
                "binomial-linear",
                off.first()
                    .cloned()
                    .unwrap_or_else(|| "binomial-linear".into()),
            ));
        }
        None => report.push(Check::not_applicable("star-sink", "star with center sink")),
    }

    match d.natural_cycle_order() {
        Some(_) if d.weights().iter().all(|&w| w >= 2) => {
            report.push(Check::compare("cycle/pdim", n, inv.pdim));
            report.push(Check::compare("cycle/reg", sum - n, inv.reg));
        }
        _ => report.push(Check::not_applicable(
            "cycle",
            "natural cycle with non-trivial weights",
        )),
    }

    match path_order_ending_forward(d) {
        Some(order) => {
            let p = d.relabel(&order)?;
            let wn = p.weight(n) as usize;
            let prev = prefix_reg(&p, n - 1, field)?;
            if p.weight(n - 1) > 1 {
                report.push(Check::compare("path/reg", prev + wn - 1, inv.reg));
                let sub = p.induced_subgraph(&(1..n).collect::<Vec<_>>())?.graph;
                let reduced = graph_table(&sub.weight_reduce(n - 1)?, field)?
                    .invariants()
                    .reg;
                report.push(Check::compare(
                    "path/reg-via-colon",
                    prev.max(reduced + wn),
                    inv.reg,
                ));
            } else {
                report.push(Check::compare(
                    "path/reg",
                    prev.max(prefix_reg(&p, n - 3, field)? + wn),
                    inv.reg,
                ));
            }
        }
        None => report.push(Check::not_applicable(
            "path",
            "path whose last two edges point forward",
        )),
    }
    Ok(report)
}
