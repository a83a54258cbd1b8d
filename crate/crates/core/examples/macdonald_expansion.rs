//! Modified Macdonald polynomials from fillings, circloids, charge and
//! quasisymmetric expansions, all landing on the same Schur expansion.

use circloid::symfunc::{self, Basis};
use circloid::Partition;

fn main() -> circloid::Result<()> {
    let mu = Partition::new(vec![2, 1])?;
    let n = mu.degree();

    let hhl = symfunc::macdonald_hhl(&mu, n)?;
    println!("H~[{mu}] from inv/maj fillings, Schur basis:");
    print!("{}", hhl.to_basis(Basis::Schur)?.to_lines());

    let circ = symfunc::macdonald_circloid(&mu, n)?;
    let charge = symfunc::macdonald_circloid_charge(&mu, n)?;
    let qsym = symfunc::macdonald_qsym(&mu, n)?;
    println!("\nfundamental quasisymmetric expansion:");
    print!("{}", qsym.to_lines());

    assert_eq!(circ, hhl);
    assert_eq!(charge, hhl.map_coeffs(|c| c.reverse_t(mu.n_stat() as u32)));
    assert_eq!(qsym.to_basis(Basis::Monomial)?, hhl);
    println!("\ncircloid, charge and quasisymmetric sums agree with the filling sum");

    let conj = symfunc::macdonald_hhl(&mu.conjugate(), n)?;
    assert_eq!(hhl.swap_qt(), conj);
    println!("swapping q and t gives H~[{}]", mu.conjugate());
    Ok(())
}
