// Betti diagrams along a chain of weight reductions.

use wobetti::betti::multigraded_betti;
use wobetti::cli::read_graph_file;
use wobetti::ideal::edge_ideal;
use wobetti::{FieldSpec, Result};

pub fn run_example() -> Result<()> {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/data");
    for name in ["chain_d0", "chain_d1", "chain_d2", "chain_d3"] {
        let d = read_graph_file(format!("{dir}/{name}.wog").as_ref())?.graph;
        let ideal = edge_ideal(&d);
        let table = multigraded_betti(&ideal, FieldSpec::default())?.to_quotient();
        let inv = table.invariants();
        println!("{name}: I = {ideal}");
        print!("{}", table.render_diagram());
        println!(
            "pdim {}  reg {}  extremals {:?}\n",
            inv.pdim, inv.reg, inv.extremals
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
