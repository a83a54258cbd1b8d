//! Companions of fillings: which properties of a filling show up in the
//! columns of its companion tabloid.

use circloid::enumerate;
use circloid::maps;
use circloid::{Partition, SkewShape};

fn main() -> circloid::Result<()> {
    let shape = SkewShape::straight(vec![2, 1]);
    let lambda = Partition::empty();
    println!("{:<14} {:>5} {:>6} {:>7} {:>6} {:>6}", "filling", "yam", "super", "cstrict", "prism", "lyam");
    for f in enumerate::fillings(&shape, 3) {
        if f.partition_weight().is_err() {
            continue;
        }
        let t = maps::companion_rows(&f, 3)?;
        println!(
            "{:<14} {:>5} {:>6} {:>7} {:>6} {:>6}",
            format!("{:?}", f.rows()),
            f.is_yamanouchi(),
            f.is_super_yamanouchi(),
            f.is_column_strict(),
            t.columns_prismatic_increasing(),
            t.is_lambda_yamanouchi(&lambda),
        );
    }

    let t = enumerate::tabloids(&circloid::Composition::new(vec![2, 2]), 2);
    let jammed = t.iter().filter(|f| f.is_jammed().unwrap_or(false)).count();
    println!("\n{} tabloids of shape (2,2) with entries <= 2, {jammed} jammed", t.len());
    Ok(())
}
