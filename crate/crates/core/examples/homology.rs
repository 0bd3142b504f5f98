// Reduced homology over prime fields.

use wobetti::homology::{FieldSpec, SimplicialComplex};
use wobetti::Result;

pub fn run_example() -> Result<()> {
    let circle = SimplicialComplex::from_faces(&[1, 2, 3], &[vec![1, 2], vec![2, 3], vec![1, 3]])?;
    println!(
        "hollow triangle: {:?}",
        circle.reduced_homology(FieldSpec::default())
    );

    // six-vertex triangulation of the projective plane
    let rp2 = [
        [1, 2, 3],
        [1, 3, 4],
        [1, 4, 5],
        [1, 5, 6],
        [1, 2, 6],
        [2, 3, 5],
        [3, 4, 6],
        [2, 4, 5],
        [3, 5, 6],
        [2, 4, 6],
    ];
    let faces: Vec<Vec<usize>> = rp2.iter().map(|f| f.to_vec()).collect();
    let rp2 = SimplicialComplex::from_faces(&[1, 2, 3, 4, 5, 6], &faces)?;
    for p in [2, 3] {
        println!(
            "RP2 over GF({p}): {:?}",
            rp2.reduced_homology(FieldSpec::new(p)?)
        );
    }
    println!(
        "void: {:?}",
        SimplicialComplex::void(&[1, 2]).reduced_homology(FieldSpec::default())
    );
    println!(
        "irrelevant: {:?}",
        SimplicialComplex::irrelevant(&[1, 2]).reduced_homology(FieldSpec::default())
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
