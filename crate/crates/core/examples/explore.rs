// Sweep all small graphs and tally how weight reduction at every
// non-trivial vertex behaves.

use wobetti::explore::{run_explore, ExperimentBounds, Question};
use wobetti::{FieldSpec, Result};

pub fn run_example() -> Result<()> {
    let bounds = ExperimentBounds {
        max_n: 3,
        max_weight: 2,
        question: Question::WeightReduction,
    };
    let report = run_explore(bounds, FieldSpec::default(), false)?;
    print!("{report}");
    let bounds = ExperimentBounds {
        question: Question::UnderlyingGraph,
        ..bounds
    };
    let report = run_explore(bounds, FieldSpec::default(), false)?;
    for (claim, t) in &report.claims {
        println!("{claim}: {} hold, {} fail", t.holds, t.fails);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
