// Complete graphs: closed formulas for the natural orientation and the
// splitting recursion at a sink.

use wobetti::betti::quotient_betti;
use wobetti::graph::complete_natural;
use wobetti::ideal::edge_ideal;
use wobetti::verify::check_complete_sink;
use wobetti::{FieldSpec, Result, WeightedOrientedGraph};

pub fn run_example() -> Result<()> {
    let field = FieldSpec::default();
    let k = complete_natural(&[1, 2, 3, 2])?;
    let inv = quotient_betti(&edge_ideal(&k), field)?.invariants();
    println!("natural K4 w=(1,2,3,2): pdim {} reg {}", inv.pdim, inv.reg);
    assert_eq!((inv.pdim, inv.reg), (3, 5));

    // x3 is the sink of a tournament that is not naturally ordered
    let t = WeightedOrientedGraph::new(3, &[(2, 1), (1, 3), (2, 3)], &[(1, 2), (3, 3)])?;
    let report = check_complete_sink(&t, field)?;
    print!("{report}");
    assert!(report.overall());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
