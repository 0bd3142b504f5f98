// Delete a leaf sink and rebuild the graded Betti numbers from the smaller
// graph and a colon ideal.

use wobetti::graph::{path, Orientation};
use wobetti::verify::check_mapping_cone;
use wobetti::{FieldSpec, Result};

pub fn run_example() -> Result<()> {
    for weights in [[1, 1, 2, 1], [1, 3, 1, 2], [1, 2, 2, 3]] {
        let p = path(&weights, &Orientation::Natural)?;
        let report = check_mapping_cone(&p, 4, FieldSpec::default())?;
        print!("{report}");
        assert!(report.overall());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
