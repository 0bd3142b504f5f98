// Build family members, write them as graph files and read them back.

use wobetti::cli::{parse_graph_file, render_graph_file};
use wobetti::graph::{family, FamilyKind, FamilyParams, Orientation};
use wobetti::Result;

pub fn run_example() -> Result<()> {
    let mut params = FamilyParams::new(4, vec![1, 2, 1, 3]);
    params.orientation = Orientation::PerEdge(vec![true, false, true]);
    let p = family(FamilyKind::Path, &params)?;
    let text = render_graph_file(&p);
    print!("{text}");
    assert_eq!(parse_graph_file(&text)?.graph, p);

    let mut params = FamilyParams::new(5, vec![1, 2, 2, 3, 2]);
    params.parents = Some(vec![1, 1, 2, 2]);
    let t = family(FamilyKind::RootedTree, &params)?;
    print!("{}", render_graph_file(&t));

    let parsed = parse_graph_file("vertices 2\nedge 1 2\nweight 2 2\nweight 2 4\n")?;
    println!("{} with warnings {:?}", parsed.graph, parsed.warnings);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
