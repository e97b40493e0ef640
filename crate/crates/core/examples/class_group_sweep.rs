// Class groups of all fields with |D| <= 500 and the genus-theory check
// 2-rank = t - 1.

use std::collections::BTreeMap;

use obstruct::quad_field::{fundamental_discriminants, ImagQuadField};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut by_structure: BTreeMap<Vec<u64>, usize> = BTreeMap::new();
    let discs = fundamental_discriminants(500);
    for &d in &discs {
        let k = ImagQuadField::from_discriminant(d)?;
        let cg = k.class_group()?;
        assert_eq!(cg.two_rank(), k.genus_two_rank(), "D = {d}");
        *by_structure.entry(cg.invariants).or_default() += 1;
    }
    println!("{} fundamental discriminants", discs.len());
    for (inv, count) in by_structure {
        println!("  Cl = {inv:?}: {count}");
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
