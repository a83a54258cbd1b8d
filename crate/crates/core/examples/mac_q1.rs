//! The `q = 1` specialization from semistandard colored tabloids, from block
//! majors of Yamanouchi words and from standard tableaux.

use circloid::symfunc::{self, Q1Method};
use circloid::Partition;

fn main() -> circloid::Result<()> {
    for mu in Partition::all(4) {
        let n = mu.degree();
        let base = symfunc::mac_q1(&mu, n, Q1Method::HhlQ1)?;
        for m in Q1Method::ALL {
            assert_eq!(symfunc::mac_q1(&mu, n, m)?, base, "{m:?} on {mu}");
        }
        println!("H~[{mu}](x; 1, t):");
        print!("{}", base.to_lines());
    }
    Ok(())
}
