//! Command layer behind the `wobetti` binary.
//!
//! Each subcommand is a pure function from parsed arguments to an
//! [`Output`], so the binary only prints and exits. Exit status is 0 on
//! success, 1 when a verification check fails and 2 on any error.

mod graph_file;
mod records;

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::betti::{multigraded_betti_capped, render_diagram, GradedBetti};
use crate::error::{Error, Result};
use crate::explore::{run_explore, ExperimentBounds, Question};
use crate::graph::{family, FamilyKind, FamilyParams, Orientation, WeightedOrientedGraph};
use crate::homology::FieldSpec;
use crate::ideal::{edge_ideal, DEFAULT_GENERATOR_CAP};
use crate::random::{self, DEFAULT_SEED};
use crate::verify::{
    check_closed_formulas, check_linear_splittings, check_mapping_cone, check_weight_reduction,
    oracle_compare, Check, VerificationReport,
};

pub use graph_file::{parse_graph_file, render_graph_file, GraphFile};
pub use records::{csv, graded_records, invariant_records, multigraded_records, total_records};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "wobetti",
    version,
    about = "Betti numbers of edge ideals of weighted oriented graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Betti table of a graph file.
    Compute(ComputeArgs),
    /// Run every applicable identity check on a graph file.
    Verify(VerifyArgs),
    /// Emit a graph file for a named family.
    Family(FamilyArgs),
    /// Compare the upper-Koszul and Taylor engines.
    Oracle(OracleArgs),
    /// Exhaustive small-graph experiments.
    Explore(ExploreArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum View {
    Diagram,
    Graded,
    Multigraded,
    Totals,
    Invariants,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    Quotient,
    Ideal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    Oracle,
    WeightReduction,
    MappingCone,
    Splitting,
    ClosedFormulas,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    pub file: PathBuf,
    #[arg(long, default_value_t = FieldSpec::default().p() as u64)]
    pub field: u64,
    #[arg(long, value_enum, default_value_t = View::Diagram)]
    pub view: View,
    #[arg(long, value_enum, default_value_t = ConventionArg::Quotient)]
    pub convention: ConventionArg,
    /// Lift the generator cap on the lcm lattice.
    #[arg(long)]
    pub force_cap: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub file: PathBuf,
    #[arg(long, default_value_t = FieldSpec::default().p() as u64)]
    pub field: u64,
    #[arg(long, value_enum, value_delimiter = ',')]
    pub checks: Vec<CheckKind>,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    /// path, cycle, complete_natural, star_center_sink or rooted_tree
    pub kind: FamilyKind,
    #[arg(long)]
    pub n: usize,
    /// Comma-separated weights, one per vertex (default all 1).
    #[arg(long, value_delimiter = ',')]
    pub weights: Vec<u32>,
    /// `natural`, or one `f`/`b` flag per edge.
    #[arg(long, default_value = "natural")]
    pub orient: String,
    /// Parents of vertices 2..=n, for rooted trees.
    #[arg(long, value_delimiter = ',')]
    pub parents: Vec<usize>,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    pub file: Option<PathBuf>,
    #[arg(long, default_value_t = FieldSpec::default().p() as u64)]
    pub field: u64,
    /// Number of seeded random ideals to compare instead of a file.
    #[arg(long)]
    pub random: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct ExploreArgs {
    #[arg(long, value_parser = parse_question)]
    pub question: Question,
    #[arg(long)]
    pub max_n: usize,
    #[arg(long)]
    pub max_weight: u32,
    #[arg(long, default_value_t = FieldSpec::default().p() as u64)]
    pub field: u64,
    /// Run beyond the default bounds.
    #[arg(long)]
    pub force: bool,
}

fn parse_question(s: &str) -> std::result::Result<Question, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub status: i32,
}

impl Output {
    fn ok(stdout: String, warnings: &[String]) -> Self {
        Self {
            stdout,
            stderr: warn_lines(warnings),
            status: EXIT_PASS,
        }
    }
}

fn warn_lines(warnings: &[String]) -> String {
    warnings.iter().map(|w| format!("warning: {w}\n")).collect()
}

pub fn execute(cli: &Cli) -> Output {
    let result = match &cli.command {
        Command::Compute(a) => compute(a),
        Command::Verify(a) => verify(a),
        Command::Family(a) => family_cmd(a),
        Command::Oracle(a) => oracle(a),
        Command::Explore(a) => explore(a),
    };
    result.unwrap_or_else(|e| Output {
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
        status: EXIT_ERROR,
    })
}

pub fn read_graph_file(path: &Path) -> Result<GraphFile> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        msg: format!("cannot read {}: {e}", path.display()),
    })?;
    parse_graph_file(&text)
}

fn compute(a: &ComputeArgs) -> Result<Output> {
    let GraphFile { graph, warnings } = read_graph_file(&a.file)?;
    let field = FieldSpec::new(a.field)?;
    let cap = if a.force_cap {
        usize::MAX
    } else {
        DEFAULT_GENERATOR_CAP
    };
    let ideal_table = multigraded_betti_capped(&edge_ideal(&graph), field, cap)?;
    let quotient = ideal_table.to_quotient();
    let (graded, multigraded, totals): (GradedBetti, String, Vec<u64>) = match a.convention {
        ConventionArg::Quotient => (
            quotient.graded(),
            multigraded_records(&quotient),
            quotient.totals(),
        ),
        ConventionArg::Ideal => (
            ideal_table.graded(),
            multigraded_records(&ideal_table),
            ideal_table.totals(),
        ),
    };
    let stdout = match a.view {
        View::Diagram => render_diagram(&graded),
        View::Graded => graded_records(&graded),
        View::Multigraded => multigraded,
        View::Totals => total_records(&totals),
        View::Invariants => invariant_records(&quotient.graded()),
    };
    Ok(Output::ok(stdout, &warnings))
}

/// Runs the selected checks (all when `kinds` is empty) on one graph.
pub fn verify_graph(
    d: &WeightedOrientedGraph,
    kinds: &[CheckKind],
    field: FieldSpec,
) -> Result<VerificationReport> {
    let all = [
        CheckKind::Oracle,
        CheckKind::WeightReduction,
        CheckKind::MappingCone,
        CheckKind::Splitting,
        CheckKind::ClosedFormulas,
    ];
    let kinds = if kinds.is_empty() { &all[..] } else { kinds };
    let mut report = VerificationReport::new(d.to_string(), field.p());
    let ideal = edge_ideal(d);
    for kind in kinds {
        match kind {
            CheckKind::Oracle if ideal.is_zero() => {
                report.push(Check::not_applicable("oracle", "nonzero ideal"))
            }
            CheckKind::Oracle => report.absorb("all", oracle_compare(&ideal, field)?),
            CheckKind::WeightReduction | CheckKind::MappingCone => {
                let mut any = false;
                for v in 1..=d.n() {
                    let r = if *kind == CheckKind::WeightReduction {
                        check_weight_reduction(d, v, field)?
                    } else {
                        check_mapping_cone(d, v, field)?
                    };
                    if r.applicable() {
                        any = true;
                        report.absorb(&format!("x{v}"), r);
                    }
                }
                if !any {
                    let (id, hyp) = match kind {
                        CheckKind::WeightReduction => {
                            ("weight-reduction", "a sink with weight at least 2")
                        }
                        _ => ("mapping-cone", "a leaf that is a sink"),
                    };
                    report.push(Check::not_applicable(id, hyp));
                }
            }
            CheckKind::Splitting => report.absorb("all", check_linear_splittings(d, field)?),
            CheckKind::ClosedFormulas => report.absorb("all", check_closed_formulas(d, field)?),
        }
    }
    Ok(report)
}

fn status_of(report: &VerificationReport) -> i32 {
    if report.overall() {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

fn verify(a: &VerifyArgs) -> Result<Output> {
    let GraphFile { graph, warnings } = read_graph_file(&a.file)?;
    let report = verify_graph(&graph, &a.checks, FieldSpec::new(a.field)?)?;
    Ok(Output {
        stdout: report.to_string(),
        stderr: warn_lines(&warnings),
        status: status_of(&report),
    })
}

fn parse_orientation(s: &str) -> Result<Orientation> {
    if s == "natural" {
        return Ok(Orientation::Natural);
    }
    s.split(',')
        .map(|t| match t.trim() {
            "f" => Ok(true),
            "b" => Ok(false),
            other => Err(Error::Family(format!(
                "orientation flag `{other}` is neither f nor b"
            ))),
        })
        .collect::<Result<_>>()
        .map(Orientation::PerEdge)
}

fn family_cmd(a: &FamilyArgs) -> Result<Output> {
    let weights = if a.weights.is_empty() {
        vec![1; a.n]
    } else {
        a.weights.clone()
    };
    let params = FamilyParams {
        n: a.n,
        weights,
        orientation: parse_orientation(&a.orient)?,
        parents: (!a.parents.is_empty()).then(|| a.parents.clone()),
    };
    let g = family(a.kind, &params)?;
    Ok(Output::ok(render_graph_file(&g), g.notes()))
}

fn oracle(a: &OracleArgs) -> Result<Output> {
    let field = FieldSpec::new(a.field)?;
    match (&a.file, a.random) {
        (Some(path), None) => {
            let GraphFile { graph, warnings } = read_graph_file(path)?;
            let ideal = edge_ideal(&graph);
            if ideal.is_zero() {
                let mut r = VerificationReport::new(graph.to_string(), field.p());
                r.push(Check::not_applicable("oracle", "nonzero ideal"));
                return Ok(Output::ok(r.to_string(), &warnings));
            }
            let report = oracle_compare(&ideal, field)?;
            Ok(Output {
                stdout: report.to_string(),
                stderr: warn_lines(&warnings),
                status: status_of(&report),
            })
        }
        (None, Some(count)) => {
            let mut rng = random::seeded(a.seed);
            let mut stdout = String::new();
            let mut failed = false;
            for _ in 0..count {
                let ideal = random::monomial_ideal(&mut rng, 5, 6, 3);
                let report = oracle_compare(&ideal, field)?;
                failed |= !report.overall();
                stdout.push_str(&report.to_string());
            }
            stdout.push_str(&format!(
                "summary {count} ideals {}\n",
                if failed { "FAIL" } else { "PASS" }
            ));
            Ok(Output {
                stdout,
                stderr: String::new(),
                status: if failed { EXIT_FAIL } else { EXIT_PASS },
            })
        }
        _ => Err(Error::Bounds(
            "give either a graph file or --random COUNT".into(),
        )),
    }
}

fn explore(a: &ExploreArgs) -> Result<Output> {
    let bounds = ExperimentBounds {
        max_n: a.max_n,
        max_weight: a.max_weight,
        question: a.question,
    };
    let report = run_explore(bounds, FieldSpec::new(a.field)?, a.force)?;
    Ok(Output::ok(report.to_string(), &[]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> Output {
        let mut full = vec!["wobetti"];
        full.extend_from_slice(args);
        execute(&Cli::try_parse_from(full).unwrap())
    }

    #[test]
    fn family_emits_graph_files() {
        let out = run(&[
            "family",
            "path",
            "--n",
            "3",
            "--weights",
            "1,1,3",
            "--orient",
            "f,b",
        ]);
        assert_eq!(out.status, EXIT_PASS);
        assert_eq!(
            out.stdout,
            "vertices 3\nedge 1 2\nedge 3 2\nweight 2 1\n".replace("weight 2 1\n", "")
        );
        assert!(out.stderr.contains("warning"), "{}", out.stderr);
        let out = run(&[
            "family",
            "rooted_tree",
            "--n",
            "3",
            "--weights",
            "1,2,2",
            "--parents",
            "1,1",
        ]);
        assert_eq!(
            out.stdout,
            "vertices 3\nedge 1 2\nedge 1 3\nweight 2 2\nweight 3 2\n"
        );
        assert_eq!(run(&["family", "cycle", "--n", "2"]).status, EXIT_ERROR);
    }

    #[test]
    fn orientation_flags() {
        assert_eq!(parse_orientation("natural").unwrap(), Orientation::Natural);
        assert_eq!(
            parse_orientation("f,b").unwrap(),
            Orientation::PerEdge(vec![true, false])
        );
        assert!(parse_orientation("f,x").is_err());
    }

    #[test]
    fn random_oracle() {
        let out = run(&["oracle", "--random", "5", "--seed", "3"]);
        assert_eq!(out.status, EXIT_PASS, "{}", out.stdout);
        assert!(out.stdout.ends_with("summary 5 ideals PASS\n"));
        assert_eq!(run(&["oracle"]).status, EXIT_ERROR);
    }

    #[test]
    fn verify_graph_covers_each_kind() {
        let d = WeightedOrientedGraph::new(3, &[(1, 2), (2, 3)], &[(3, 2)]).unwrap();
        let r = verify_graph(&d, &[], FieldSpec::default()).unwrap();
        assert!(r.overall(), "{r}");
        for id in [
            "all/oracle/multigraded",
            "x3/weight-reduction/totals",
            "x3/mapping-cone/recursion",
            "all/path/reg",
        ] {
            assert!(r.find(id).is_some(), "{id} missing from\n{r}");
        }
        let r = verify_graph(&d, &[CheckKind::MappingCone], FieldSpec::default()).unwrap();
        assert!(r.checks.iter().all(|c| c.id.starts_with("x3/mapping-cone")));
    }
}
