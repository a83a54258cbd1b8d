//! Cocharge and betrayal of circloids, and how they transport to inv and
//! maj of fillings through the bijection `f`.

use circloid::maps;
use circloid::verify::worked;

fn main() -> circloid::Result<()> {
    for (name, c) in [("C1", worked::c1()), ("C2", worked::c2())] {
        println!("{name} = {c}");
        println!("  shape {:?}, cocharge {}, betrayal {}", c.shape().parts(), c.cocharge()?, c.betrayal()?);
    }

    let c = worked::c1();
    let f = maps::f_map(&c)?;
    println!("\nf(C1) has rows (bottom up) {:?}", f.rows());
    println!("  inv {} = betrayal {}", f.inv()?, c.betrayal()?);
    println!("  maj {} = cocharge {}", f.maj()?, c.cocharge()?);
    assert_eq!(maps::f_inv_sectors(&f, c.num_sectors())?, c);

    let sq = worked::square_filling();
    let back = maps::f_inv(&sq);
    println!("\nthe (3,3,3) filling {:?}", sq.rows());
    println!("  corresponds to {back}");
    println!("  inv {} maj {}", sq.inv()?, sq.maj()?);

    let t = worked::companion_tabloid();
    let comp = maps::companion(&t);
    println!("\ncompanion of {:?}:", t.rows());
    for r in (1..=comp.num_rows()).rev() {
        let row: Vec<String> = comp.row(r).iter().map(|l| l.to_string()).collect();
        println!("  row {r}: {}", row.join(" "));
    }
    println!("  reverse colored: {}", comp.is_reverse_colored());
    Ok(())
}
