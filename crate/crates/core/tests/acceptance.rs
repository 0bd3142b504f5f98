// Acceptance suite: one [PASS]/[FAIL] line per criterion.
//
// Two stated regularity identities are false on small graphs. Their
// sub-checks stay in the suite and report FAIL; the harness additionally
// confirms that the pinned counterexample is among the failures, so the
// process exits 0 exactly when every outcome is the recorded one.

use std::collections::BTreeMap;
use std::process::Command;
use std::time::Instant;

use itertools::Itertools;
use rand::Rng;
use rayon::prelude::*;
use wobetti::betti::{quotient_betti, GradedBetti};
use wobetti::cli::{parse_graph_file, render_graph_file};
use wobetti::explore::enumerate_graphs;
use wobetti::graph::{complete_natural, path, star_center_sink, Orientation};
use wobetti::homology::SimplicialComplex;
use wobetti::ideal::edge_ideal;
use wobetti::random::{self, seeded};
use wobetti::verify::{
    check_closed_formulas, check_complete_sink, check_mapping_cone, check_weight_reduction,
    oracle_compare, Status, VerificationReport,
};
use wobetti::{FieldSpec, Monomial, WeightedOrientedGraph};

const SEED: u64 = 0x5EED;

const DIAGRAM_D: &str = "       0   1   2   3   4
------------------------
0:     1   -   -   -   -
1:     -   2   -   -   -
2:     -   1   2   -   -
3:     -   1   2   1   -
4:     -   -   2   3   1
------------------------
Tot:   1   4   6   4   1
";

struct Sub {
    name: String,
    ok: bool,
    detail: String,
    /// For a refuted claim: whether the pinned counterexample failed as recorded.
    refuted: Option<bool>,
}

struct Criterion {
    id: u8,
    title: &'static str,
    subs: Vec<Sub>,
    graphs: Vec<WeightedOrientedGraph>,
}

impl Criterion {
    fn new(id: u8, title: &'static str) -> Self {
        Self {
            id,
            title,
            subs: Vec::new(),
            graphs: Vec::new(),
        }
    }

    fn check(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.subs.push(Sub {
            name: name.into(),
            ok,
            detail: detail.into(),
            refuted: None,
        });
    }

    fn refuted(
        &mut self,
        name: impl Into<String>,
        ok: bool,
        detail: impl Into<String>,
        pinned_fails: bool,
    ) {
        self.subs.push(Sub {
            name: name.into(),
            ok,
            detail: detail.into(),
            refuted: Some(pinned_fails),
        });
    }

    fn passed(&self) -> bool {
        self.subs.iter().all(|s| s.ok)
    }

    fn as_recorded(&self) -> bool {
        self.subs.iter().all(|s| match s.refuted {
            None => s.ok,
            Some(pinned) => !s.ok && pinned,
        })
    }
}

fn f() -> FieldSpec {
    FieldSpec::default()
}

fn graded(d: &WeightedOrientedGraph) -> GradedBetti {
    quotient_betti(&edge_ideal(d), f()).unwrap().graded()
}

fn graph(n: usize, edges: &[(usize, usize)], weights: &[(usize, u32)]) -> WeightedOrientedGraph {
    WeightedOrientedGraph::new(n, edges, weights).unwrap()
}

fn chain() -> [WeightedOrientedGraph; 4] {
    let e = [(2, 1), (3, 2), (4, 3), (4, 5)];
    [
        graph(5, &e, &[(2, 3), (3, 2)]),
        graph(5, &e, &[(2, 2), (3, 2)]),
        graph(5, &e, &[(2, 2)]),
        graph(5, &e, &[]),
    ]
}

fn bin(args: &[&str], stdin_file: Option<(&str, &str)>) -> std::process::Output {
    let mut args: Vec<String> = args.iter().map(|s| s.to_string()).collect();
    if let Some((name, text)) = stdin_file {
        let dir = std::env::temp_dir().join(format!("wobetti-acceptance-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let p = dir.join(name);
        std::fs::write(&p, text).unwrap();
        args.push(p.to_string_lossy().into_owned());
    }
    Command::new(env!("CARGO_BIN_EXE_wobetti"))
        .args(&args)
        .output()
        .unwrap()
}

fn entries_match(g: &GradedBetti, expected: &[((usize, usize), u64)]) -> (bool, String) {
    let bad: Vec<String> = expected
        .iter()
        .filter(|&&((i, j), v)| g.get(i as i64, j as i64) != v)
        .map(|&((i, j), v)| format!("β({i},{j})={} want {v}", g.get(i as i64, j as i64)))
        .collect();
    (bad.is_empty(), bad.join("; "))
}

fn first<T: std::fmt::Display>(bad: &[T]) -> String {
    bad.first().map(|b| format!("e.g. {b}")).unwrap_or_default()
}

fn list(v: &[u64]) -> String {
    v.iter().join(",")
}

fn golden() -> Criterion {
    let mut c = Criterion::new(1, "golden Betti tables of the reduction chain");
    let [d, d1, d2, d3] = chain();
    let out = bin(&["compute"], Some(("d.wog", &render_graph_file(&d))));
    let diagram = String::from_utf8(out.stdout).unwrap();
    c.check(
        "D diagram via compute",
        diagram == DIAGRAM_D,
        diagram.lines().last().unwrap_or(""),
    );

    let g = graded(&d);
    let expected = [
        ((1, 2), 2),
        ((1, 3), 1),
        ((1, 4), 1),
        ((2, 4), 2),
        ((2, 5), 2),
        ((2, 6), 2),
        ((3, 6), 1),
        ((3, 7), 3),
        ((4, 8), 1),
    ];
    let (ok, detail) = entries_match(&g, &expected);
    c.check("D graded entries", ok && g.entries().count() == 10, detail);
    c.check("D totals", g.totals() == [1, 4, 6, 4, 1], list(&g.totals()));
    c.check(
        "D pdim/reg",
        (g.pdim(), g.reg()) == (4, 4),
        format!("{} {}", g.pdim(), g.reg()),
    );

    let g1 = graded(&d1);
    c.check(
        "D' totals",
        g1.totals() == [1, 4, 6, 4, 1],
        list(&g1.totals()),
    );

    let g2 = graded(&d2);
    let (ok, detail) = entries_match(
        &g2,
        &[
            ((1, 2), 3),
            ((1, 3), 1),
            ((2, 3), 1),
            ((2, 4), 4),
            ((3, 5), 2),
        ],
    );
    c.check("D'' entries", ok, detail);
    c.check(
        "D'' totals",
        g2.totals() == [1, 4, 5, 2],
        list(&g2.totals()),
    );

    let g3 = graded(&d3);
    c.check(
        "D''' totals",
        g3.totals() == [1, 4, 4, 1],
        list(&g3.totals()),
    );
    c.check(
        "D''' pdim/reg",
        (g3.pdim(), g3.reg()) == (3, 2),
        format!("{} {}", g3.pdim(), g3.reg()),
    );
    c.graphs.extend(chain());
    c
}

fn max_pdim() -> Criterion {
    let mut c = Criterion::new(3, "pdim = n characterization, exhaustive n <= 4, w <= 2");
    let graphs = enumerate_graphs(4, 2);
    let results: Vec<(bool, bool, bool, String)> = graphs
        .par_iter()
        .map(|d| {
            let table = quotient_betti(&edge_ideal(d), f()).unwrap();
            let inv = table.invariants();
            let n = d.n();
            let full = d.has_full_pdim_structure();
            let iff = full == (inv.pdim == n);
            let top = table.get(n, &Monomial::new(d.weights().to_vec()));
            let reg = !full || inv.reg as u64 == d.weight_sum() - n as u64;
            (iff, !full || top != 0, reg, d.to_string())
        })
        .collect();
    let positives = graphs
        .iter()
        .filter(|d| d.has_full_pdim_structure())
        .count();
    for (k, name) in ["iff", "top Betti nonzero", "reg = Σw - n"]
        .iter()
        .enumerate()
    {
        let bad: Vec<&String> = results
            .iter()
            .filter(|r| !match k {
                0 => r.0,
                1 => r.1,
                _ => r.2,
            })
            .map(|r| &r.3)
            .collect();
        c.check(
            *name,
            bad.is_empty(),
            format!(
                "{} graphs, {positives} positive, {} bad {}",
                graphs.len(),
                bad.len(),
                first(&bad)
            ),
        );
    }
    c.graphs = graphs;
    c
}

fn closed_formulas() -> Criterion {
    let mut c = Criterion::new(
        4,
        "closed formulas: natural complete, rooted trees, center-sink stars",
    );
    let mut rng = seeded(SEED);
    let mut bad = Vec::new();
    let mut count = 0;
    for n in 3..=5 {
        for _ in 0..12 {
            let w = loop {
                let mut w: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=3)).collect();
                w[0] = 1;
                if w.iter().any(|&x| x >= 2) {
                    break w;
                }
            };
            let k = complete_natural(&w).unwrap();
            let g = graded(&k);
            let sum: u64 = w.iter().map(|&x| x as u64).sum();
            count += 1;
            if g.pdim() != n - 1 || g.reg() as u64 != sum - n as u64 + 1 {
                bad.push(format!("{k}: pdim {} reg {}", g.pdim(), g.reg()));
            }
            c.graphs.push(k);
        }
    }
    c.check(
        "natural complete",
        bad.is_empty(),
        format!("{count} graphs {}", first(&bad)),
    );

    let mut bad = Vec::new();
    for _ in 0..20 {
        let n = rng.gen_range(2..=5);
        let t = random::rooted(&mut rng, n, &[2, 3]);
        let g = graded(&t);
        if g.pdim() != n - 1 || g.reg() as u64 != t.weight_sum() - n as u64 + 1 {
            bad.push(format!("{t}: pdim {} reg {}", g.pdim(), g.reg()));
        }
        c.graphs.push(t);
    }
    c.check(
        "rooted trees",
        bad.is_empty(),
        format!("20 trees {}", first(&bad)),
    );

    let mut bad = Vec::new();
    for n in 3..=5 {
        for w in [2u32, 3] {
            let mut weights = vec![1; n];
            weights[n - 1] = w;
            let s = star_center_sink(&weights).unwrap();
            let g = graded(&s);
            let w = w as usize;
            let linear = g
                .entries()
                .all(|(i, j, v)| i == 0 || (j == i + w && v == binom(n - 1, i)));
            if g.pdim() != n - 1 || g.reg() != w || !linear {
                bad.push(format!(
                    "{s}: pdim {} reg {} linear {linear}",
                    g.pdim(),
                    g.reg()
                ));
            }
            c.graphs.push(s);
        }
    }
    c.check(
        "center-sink stars",
        bad.is_empty(),
        format!("6 stars {}", first(&bad)),
    );
    c
}

fn binom(n: usize, k: usize) -> u64 {
    (0..k).fold(1u64, |a, t| a * (n - t) as u64 / (t + 1) as u64)
}

fn failures(reports: &[VerificationReport], id: &str) -> Vec<String> {
    reports
        .iter()
        .filter(|r| r.find(id).is_some_and(|c| c.status == Status::Fail))
        .map(|r| r.subject.clone())
        .collect()
}

fn applicable(reports: &[VerificationReport], id: &str) -> usize {
    reports
        .iter()
        .filter(|r| {
            r.find(id)
                .is_some_and(|c| c.status != Status::NotApplicable)
        })
        .count()
}

fn recursions() -> Criterion {
    let mut c = Criterion::new(
        5,
        "recursions: complete with sink, leaf-sink mapping cone, path regularity",
    );

    let tournaments: Vec<_> = enumerate_graphs(4, 3)
        .into_iter()
        .filter(|d| d.n() >= 3 && d.is_tournament() && !d.sinks().is_empty())
        .collect();
    let reports: Vec<_> = tournaments
        .par_iter()
        .map(|d| check_complete_sink(d, f()).unwrap())
        .collect();
    let bad: Vec<_> = reports
        .iter()
        .filter(|r| !r.overall() || !r.applicable())
        .map(|r| r.subject.clone())
        .collect();
    c.check(
        "complete with sink",
        bad.is_empty(),
        format!("{} tournaments {}", tournaments.len(), first(&bad)),
    );
    c.graphs.extend(tournaments);

    let mut rng = seeded(SEED + 1);
    let leafy: Vec<_> = (0..30)
        .map(|_| {
            let n = rng.gen_range(2..=6);
            random::leaf_sink_graph(&mut rng, n, 3)
        })
        .collect();
    let reports: Vec<_> = leafy
        .par_iter()
        .map(|d| check_mapping_cone(d, d.n(), f()).unwrap())
        .collect();
    let bad: Vec<_> = reports
        .iter()
        .filter(|r| !r.overall() || !r.applicable())
        .map(|r| r.subject.clone())
        .collect();
    c.check(
        "mapping cone",
        bad.is_empty(),
        format!("30 graphs {}", first(&bad)),
    );
    c.graphs.extend(leafy);

    let paths: Vec<_> = (3..=6)
        .flat_map(|n| {
            (1..n)
                .map(|_| 1..=3u32)
                .multi_cartesian_product()
                .map(move |w| [vec![1], w].concat())
        })
        .map(|w| path(&w, &Orientation::Natural).unwrap())
        .collect();
    let reports: Vec<_> = paths
        .par_iter()
        .map(|p| check_closed_formulas(p, f()).unwrap())
        .collect();
    let (trivial, heavy): (Vec<_>, Vec<_>) = reports
        .iter()
        .cloned()
        .partition(|r| r.find("path/reg-via-colon").is_none());
    let bad_b = failures(&trivial, "path/reg");
    c.check(
        "path branch w_{n-1} = 1",
        bad_b.is_empty(),
        format!("{} paths {}", trivial.len(), first(&bad_b)),
    );
    let bad_a = failures(&heavy, "path/reg");
    let pinned = path(&[1, 2, 1, 2, 1], &Orientation::Natural)
        .unwrap()
        .to_string();
    c.refuted(
        "path branch w_{n-1} > 1 as stated",
        bad_a.is_empty(),
        format!(
            "{}/{} paths fail, {}",
            bad_a.len(),
            heavy.len(),
            first(&bad_a)
        ),
        bad_a.contains(&pinned),
    );
    let bad_colon = failures(&heavy, "path/reg-via-colon");
    c.check(
        "path branch w_{n-1} > 1 via colon",
        bad_colon.is_empty(),
        format!("{} paths {}", heavy.len(), first(&bad_colon)),
    );
    c.graphs.extend(paths);
    c
}

fn weight_reduction() -> Criterion {
    let mut c = Criterion::new(6, "sink weight reduction, exhaustive n <= 4, w <= 3");
    let graphs: Vec<_> = enumerate_graphs(4, 3)
        .into_iter()
        .filter(|d| d.sinks().iter().any(|&v| d.weight(v) >= 2))
        .collect();
    let reports: Vec<VerificationReport> = graphs
        .par_iter()
        .flat_map_iter(|d| {
            d.sinks()
                .into_iter()
                .filter(|&v| d.weight(v) >= 2)
                .map(|v| check_weight_reduction(d, v, f()).unwrap())
                .filter(|r| r.applicable())
                .collect::<Vec<_>>()
        })
        .collect();
    let ids = [
        ("b_v = 0 equals deletion", "weight-reduction/b_v=0/deletion"),
        (
            "b_v = 0 equals reduction",
            "weight-reduction/b_v=0/reduction",
        ),
        ("b_v in {0, w}", "weight-reduction/b_v-support"),
        ("b_v = w transport", "weight-reduction/b_v=w/transport"),
        ("total Betti equality", "weight-reduction/totals"),
        ("graded recursion", "weight-reduction/graded-recursion"),
        ("pdim equality", "weight-reduction/pdim"),
        ("internal consistency", "weight-reduction/consistency"),
    ];
    for (name, id) in ids {
        let bad = failures(&reports, id);
        c.check(
            name,
            bad.is_empty() && applicable(&reports, id) == reports.len(),
            format!("{} instances {}", reports.len(), first(&bad)),
        );
    }
    let bad = failures(&reports, "weight-reduction/reg");
    let pinned = format!(
        "{} at x3",
        graph(4, &[(1, 2), (1, 4), (2, 3)], &[(3, 2), (4, 2)])
    );
    c.refuted(
        "reg drops by one as stated",
        bad.is_empty(),
        format!(
            "{}/{} instances fail, {}",
            bad.len(),
            reports.len(),
            first(&bad)
        ),
        bad.contains(&pinned),
    );
    for (name, id) in [
        ("reg within one", "weight-reduction/reg-within-one"),
        ("reg by strand", "weight-reduction/reg-by-strand"),
    ] {
        let bad = failures(&reports, id);
        c.check(
            name,
            bad.is_empty(),
            format!("{} instances {}", reports.len(), first(&bad)),
        );
    }
    c.graphs = graphs;
    c
}

fn oracle(graphs: &[WeightedOrientedGraph]) -> Criterion {
    let mut c = Criterion::new(2, "upper-Koszul and Taylor engines agree");
    let mut rng = seeded(SEED + 2);
    let ideals: Vec<_> = (0..200)
        .map(|_| {
            let n = rng.gen_range(1..=5);
            random::monomial_ideal(&mut rng, n, 6, 3)
        })
        .collect();
    let bad: Vec<String> = ideals
        .par_iter()
        .filter(|i| !oracle_compare(i, f()).unwrap().overall())
        .map(|i| i.to_string())
        .collect();
    c.check(
        "200 random ideals",
        bad.is_empty(),
        format!("{} {}", ideals.len(), first(&bad)),
    );
    let nonzero: Vec<_> = graphs.iter().filter(|d| d.edge_count() > 0).collect();
    let bad: Vec<String> = nonzero
        .par_iter()
        .filter(|d| !oracle_compare(&edge_ideal(d), f()).unwrap().overall())
        .map(|d| d.to_string())
        .collect();
    c.check(
        "criterion graphs",
        bad.is_empty(),
        format!("{} graphs {}", nonzero.len(), first(&bad)),
    );
    c
}

fn homology() -> Criterion {
    let mut c = Criterion::new(7, "homology kernel properties on random complexes");
    let mut rng = seeded(SEED + 3);
    let complexes: Vec<(SimplicialComplex, FieldSpec)> = (0..500)
        .map(|k| {
            let n = rng.gen_range(1..=8);
            let field = if k % 2 == 0 {
                f()
            } else {
                FieldSpec::new(2).unwrap()
            };
            (random::complex(&mut rng, n, 6), field)
        })
        .collect();
    let mut bad: BTreeMap<&str, usize> = BTreeMap::new();
    for (x, field) in &complexes {
        let top = x.dim().unwrap_or(-1);
        for d in 0..=top + 1 {
            if !x
                .boundary_matrix(d, *field)
                .mul(&x.boundary_matrix(d + 1, *field), *field)
                .is_zero()
            {
                *bad.entry("boundary squared").or_default() += 1;
            }
        }
        for d in 0..=top {
            let m = x.boundary_matrix(d, *field);
            let kernel = m.kernel_basis(*field);
            let (_, cols) = m.shape();
            if kernel.len() + m.rank(*field) != cols
                || kernel
                    .iter()
                    .any(|v| m.apply(v, *field).iter().any(|&e| e != 0))
            {
                *bad.entry("rank nullity").or_default() += 1;
            }
        }
        let h = x.reduced_homology(*field);
        let euler: i64 = h
            .iter()
            .map(|(&d, &b)| {
                if d.rem_euclid(2) == 0 {
                    b as i64
                } else {
                    -(b as i64)
                }
            })
            .sum();
        if euler != x.reduced_euler_characteristic() {
            *bad.entry("euler").or_default() += 1;
        }
        if !x.is_void() {
            let apex = x.universe().iter().max().copied().unwrap_or(0) + 1;
            let mut universe = x.universe().to_vec();
            universe.push(apex);
            let facets: Vec<Vec<usize>> = x
                .facets()
                .iter()
                .map(|f| [f.vertices(), vec![apex]].concat())
                .collect();
            let cone = SimplicialComplex::from_faces(&universe, &facets).unwrap();
            if !cone.reduced_homology(*field).is_empty() {
                *bad.entry("cone").or_default() += 1;
            }
        }
    }
    for name in ["boundary squared", "rank nullity", "euler", "cone"] {
        let n = bad.get(name).copied().unwrap_or(0);
        c.check(name, n == 0, format!("500 complexes, {n} bad"));
    }
    c
}

fn interface(graphs: &[WeightedOrientedGraph]) -> Criterion {
    let mut c = Criterion::new(8, "determinism, graph-file round-trip, exit status");
    let d = render_graph_file(&chain()[0]);
    let runs: Vec<Vec<u8>> = (0..3)
        .map(|_| bin(&["compute"], Some(("d.wog", &d))).stdout)
        .collect();
    c.check(
        "diagram byte-identical",
        runs.iter().all(|r| r == DIAGRAM_D.as_bytes()),
        format!("{} runs", runs.len()),
    );

    let bad: Vec<String> = graphs
        .iter()
        .filter(|g| {
            parse_graph_file(&render_graph_file(g))
                .map(|p| p.graph != **g)
                .unwrap_or(true)
        })
        .map(|g| g.to_string())
        .collect();
    c.check(
        "round-trip",
        bad.is_empty(),
        format!("{} graphs {}", graphs.len(), first(&bad)),
    );

    let pass = bin(&["verify"], Some(("pass.wog", &d)));
    let text = String::from_utf8_lossy(&pass.stdout).into_owned();
    c.check(
        "verify PASS exits 0",
        pass.status.code() == Some(0) && text.ends_with("overall PASS\n"),
        text.lines().last().unwrap_or("").to_string(),
    );
    let stays = "vertices 4\nedge 1 2\nedge 1 4\nedge 2 3\nweight 3 2\nweight 4 2\n";
    let fail = bin(&["verify"], Some(("fail.wog", stays)));
    c.check(
        "verify FAIL exits 1",
        fail.status.code() == Some(1),
        format!("{:?}", fail.status.code()),
    );
    let err = bin(&["verify"], Some(("bad.wog", "vertices 2\nedge 1 1\n")));
    c.check(
        "verify error exits 2",
        err.status.code() == Some(2),
        format!("{:?}", err.status.code()),
    );
    let again = bin(&["verify"], Some(("pass.wog", &d)));
    c.check("verify output stable", again.stdout == pass.stdout, "");
    c
}

fn main() {
    let start = Instant::now();
    let c1 = golden();
    let c3 = max_pdim();
    let c4 = closed_formulas();
    let c5 = recursions();
    let c6 = weight_reduction();
    let c7 = homology();
    let graphs: Vec<WeightedOrientedGraph> = [&c1, &c3, &c4, &c5, &c6]
        .iter()
        .flat_map(|c| c.graphs.iter().cloned())
        .collect();
    let c2 = oracle(&graphs);
    let c8 = interface(&graphs);

    let mut all_recorded = true;
    for c in [&c1, &c2, &c3, &c4, &c5, &c6, &c7, &c8] {
        println!(
            "[{}] criterion {}: {}",
            if c.passed() { "PASS" } else { "FAIL" },
            c.id,
            c.title
        );
        for s in &c.subs {
            let tag = match (s.ok, s.refuted) {
                (true, _) => "ok",
                (false, Some(true)) => "refuted",
                (false, _) => "FAILED",
            };
            println!("    {tag:<8} {}: {}", s.name, s.detail);
        }
        all_recorded &= c.as_recorded();
    }
    println!("elapsed {:.1}s", start.elapsed().as_secs_f64());
    if !all_recorded {
        println!("unexpected outcome: a check failed without a recorded counterexample, or a refuted claim passed");
        std::process::exit(1);
    }
}
