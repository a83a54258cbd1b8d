//! The `q = 0` specialization four ways, and a table of Kostka-Foulkes
//! polynomials.

use circloid::symfunc::{self, HlMethod};
use circloid::Partition;

fn main() -> circloid::Result<()> {
    let n = 4;
    let parts = Partition::all(n);
    for mu in &parts {
        let base = symfunc::hl_specialization(mu, n, HlMethod::Kostka)?;
        for m in HlMethod::ALL {
            assert_eq!(symfunc::hl_specialization(mu, n, m)?, base, "{m:?} on {mu}");
        }
        println!("H~[{mu}](x; 0, t):");
        print!("{}", base.to_lines());
    }

    println!("\nKostka-Foulkes K(lambda, mu; t) for n = {n}:");
    for lambda in &parts {
        let row: Vec<String> = parts
            .iter()
            .map(|mu| symfunc::kostka_foulkes(lambda, mu).map(|k| k.to_string()))
            .collect::<circloid::Result<_>>()?;
        println!("  {:<10} {}", lambda.to_string(), row.join(" | "));
    }
    Ok(())
}
