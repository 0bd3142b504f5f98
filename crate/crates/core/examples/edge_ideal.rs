// Build a weighted oriented graph, read off vertex roles and form its edge
// ideal and lcm lattice.

use wobetti::ideal::edge_ideal;
use wobetti::{Result, WeightedOrientedGraph};

pub fn run_example() -> Result<()> {
    // weight 5 on the source x4 is overridden to 1
    let d = WeightedOrientedGraph::new(
        5,
        &[(2, 1), (3, 2), (4, 3), (4, 5)],
        &[(2, 3), (3, 2), (4, 5)],
    )?;
    for note in d.notes() {
        println!("note: {note}");
    }
    println!("{d}");
    println!(
        "sources {:?}, sinks {:?}, root {:?}",
        d.sources(),
        d.sinks(),
        d.root()
    );

    let ideal = edge_ideal(&d);
    println!("I = {ideal}");
    let lattice = ideal.lcm_closure()?;
    println!(
        "lcm lattice: {} elements, top {}",
        lattice.len(),
        ideal.top_lcm()
    );

    let colon = ideal.colon(&wobetti::Monomial::var_power(5, 2, 1));
    println!("I : x2 = {colon}");
    assert_eq!(lattice.len(), 15);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
