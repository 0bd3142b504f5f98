// Graphs whose quotient reaches projective dimension `n`.

use wobetti::betti::quotient_betti;
use wobetti::graph::{cycle, Orientation};
use wobetti::ideal::edge_ideal;
use wobetti::{FieldSpec, Monomial, Result};

pub fn run_example() -> Result<()> {
    for weights in [vec![2, 2, 2], vec![2, 1, 3], vec![3, 2, 2, 2]] {
        let c = cycle(&weights, &Orientation::Natural)?;
        let table = quotient_betti(&edge_ideal(&c), FieldSpec::default())?;
        let inv = table.invariants();
        let top = table.get(c.n(), &Monomial::new(weights.clone()));
        println!(
            "cycle w={weights:?}: full structure {}, pdim {}, reg {}, top Betti {top}",
            c.has_full_pdim_structure(),
            inv.pdim,
            inv.reg
        );
        assert_eq!(c.has_full_pdim_structure(), inv.pdim == c.n());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
