//! Word, circloid, dagger and tensor crystals: components, highest weights
//! and Graphviz export.

use circloid::crystals::{self, CrystalVertex};
use circloid::{Composition, Partition};

fn main() -> circloid::Result<()> {
    let g = crystals::word_crystal(3, 3)?;
    g.check_unique_highest_weights()?;
    println!("word crystal [3]^3: {} vertices, {} edges", g.vertices.len(), g.edges.len());
    for mu in Partition::all(3) {
        let hw: Vec<String> = g.highest_weights_of(&mu).iter().map(|&k| g.vertices[k].to_string()).collect();
        println!("  highest weights of weight {mu}: {}", hw.join(", "));
    }

    let gamma = Composition::new(vec![2, 1]);
    let c = crystals::circloid_crystal(&gamma, 3)?;
    println!("\ncircloid crystal, letter multiplicities {gamma}, 3 sectors: {} components", c.components().len());
    for k in c.highest_weights() {
        let v = &c.vertices[k];
        println!("  {v}  weight {:?}  cocharge {}", CrystalVertex::weight(v), v.cocharge()?);
    }

    let d = crystals::dagger_crystal(&Composition::new(vec![1, 1]), 2)?;
    println!("\ndagger crystal for (1,1), isomorphic to [2]^2:");
    print!("{}", d.to_dot("dagger"));

    let t = crystals::tensor_crystal(&Composition::new(vec![2, 1]), 3)?;
    let bad = t.stat_constant_on_components(|b| b.zmaj().ok().map(|z| z as i64));
    println!("\ntensor crystal B(2) x B(1) over [3]: {} vertices, zmaj constant on components: {}", t.vertices.len(), bad.is_none());
    Ok(())
}
