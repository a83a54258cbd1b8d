//! Fundamental quasisymmetric expansions indexed by clockwise ascent sets.

use circloid::enumerate;
use circloid::symfunc::{self, Basis};
use circloid::Partition;

fn main() -> circloid::Result<()> {
    let mu = Partition::new(vec![2, 2])?;
    for c in enumerate::circloids(&mu, 2).take(6) {
        println!("{c}  ascents {:?}  cocharge {}", c.clockwise_ascents(), c.cocharge()?);
    }
    let q = symfunc::macdonald_qsym(&mu, mu.degree())?;
    println!("\nH~[{mu}] in fundamental quasisymmetric functions:");
    print!("{}", q.to_lines());
    println!("\nin Schur functions:");
    print!("{}", q.to_basis(Basis::Schur)?.to_lines());
    Ok(())
}
