// Lower the weight of a sink and compare the two resolutions.
//
// Totals, projective dimension and every multidegree identity survive. The
// regularity usually drops by one, but not always: in the second graph it is
// carried by a generator that avoids the reduced vertex.

use wobetti::verify::{check_weight_reduction, Status};
use wobetti::{FieldSpec, Result, WeightedOrientedGraph};

pub fn run_example() -> Result<()> {
    let path = WeightedOrientedGraph::new(3, &[(1, 2), (2, 3)], &[(3, 3)])?;
    let report = check_weight_reduction(&path, 3, FieldSpec::default())?;
    print!("{report}");
    assert!(report.overall());

    let d = WeightedOrientedGraph::new(4, &[(1, 2), (1, 4), (2, 3)], &[(3, 2), (4, 2)])?;
    let report = check_weight_reduction(&d, 3, FieldSpec::default())?;
    print!("{report}");
    let failed: Vec<_> = report.failures().map(|c| c.id.as_str()).collect();
    assert_eq!(failed, ["weight-reduction/reg"]);
    assert_eq!(
        report
            .find("weight-reduction/reg-by-strand")
            .map(|c| c.status),
        Some(Status::Pass)
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
