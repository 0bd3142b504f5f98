// Cross-check the upper-Koszul engine against the Taylor complex on seeded
// random monomial ideals.

use wobetti::random::{monomial_ideal, seeded};
use wobetti::verify::oracle_compare;
use wobetti::{FieldSpec, Result};

pub fn run_example() -> Result<()> {
    let mut rng = seeded(11);
    for _ in 0..10 {
        let ideal = monomial_ideal(&mut rng, 4, 5, 3);
        let report = oracle_compare(&ideal, FieldSpec::default())?;
        let totals = &report.find("oracle/totals").expect("always present").actual;
        println!(
            "{ideal}: totals {totals} {}",
            if report.overall() {
                "agree"
            } else {
                "DISAGREE"
            }
        );
        assert!(report.overall());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
