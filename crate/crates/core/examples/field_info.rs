// Discriminants, class groups and H^1 classes of a few imaginary quadratic fields.

use obstruct::cup_obstruct::cohomology_summary;
use obstruct::quad_field::ImagQuadField;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for m in [-1, -3, -15, -255, -195, -145] {
        let k = ImagQuadField::new(m)?;
        let cg = k.class_group()?;
        let summary = cohomology_summary(&k);
        let discs: Vec<i64> = k.prime_discriminants().iter().map(|d| d.value()).collect();
        println!(
            "m = {m:>5}  D = {:>5}  h = {:>2}  Cl = {:?}  prime discs = {discs:?}  dims = {:?}  H^1 = {:?}",
            k.discriminant(),
            cg.order,
            cg.invariants,
            summary.dims,
            summary.h1_labels,
        );
        assert_eq!(cg.two_rank(), k.genus_two_rank());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
