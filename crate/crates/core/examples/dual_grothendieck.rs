//! Dual stable Grothendieck polynomials from reverse plane partitions and
//! from Yamanouchi tabloids, compared under each inflation convention.

use circloid::symfunc::{self, Basis, GrothMethod, KConvention};
use circloid::verify;
use circloid::SkewShape;

fn main() -> circloid::Result<()> {
    let shape = SkewShape::new(vec![3, 2], vec![1])?;
    let rpp = symfunc::dual_groth(&shape, 3, GrothMethod::Rpp, KConvention::Decompress)?;
    println!("g[{:?}/{:?}] in 3 variables, from plane partitions:", shape.outer(), shape.inner());
    print!("{}", rpp.to_basis(Basis::Schur)?.to_lines());
    let tab = symfunc::dual_groth(&shape, 3, GrothMethod::Schur, KConvention::Decompress)?;
    assert_eq!(tab, rpp.to_basis(Basis::Schur)?);

    let (results, collision) = verify::ktheory_analysis(5, 4)?;
    println!("\nconvention comparison, |nu| <= 5, 4 variables:");
    for r in &results {
        println!("  {:?}: {}/{} shapes agree", r.convention, r.agree, r.shapes);
    }
    println!("  compression collisions: {}", collision.map_or("none".to_string(), |c| c.to_string()));
    Ok(())
}
