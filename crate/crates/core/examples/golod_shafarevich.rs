// The field with m = -3*5*7*11*13*17*19: eight ramified primes, so 2-rank 7.
// Scans both field conditions over its 127 nonzero classes.

use obstruct::cup_obstruct::{property_ssa, property_ssb, triple_cup};
use obstruct::quad_field::ImagQuadField;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let k = ImagQuadField::new(-4849845)?;
    let discs: Vec<i64> = k.prime_discriminants().iter().map(|d| d.value()).collect();
    println!("D = {}, prime discriminants {discs:?}", k.discriminant());
    println!(
        "2-rank (genus) = {}, H^1 classes = {}",
        k.genus_two_rank(),
        k.h1_classes().len()
    );
    let cubes = k
        .h1_classes()
        .iter()
        .filter(|x| triple_cup(&k, x, x).map(|e| e.parity == 1).unwrap_or(false))
        .count();
    println!("classes with x^3 != 0: {cubes}");
    println!("property (a): {}", property_ssa(&k).name());
    println!("property (b): {}", property_ssb(&k).name());
    assert_eq!(k.h1_classes().len(), 127);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
