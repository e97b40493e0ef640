// Mod-2 cohomology of Z/2 and Z/2 x Z/2 from the bar resolution, and the
// cup-product basis of H^3(Z/2 x Z/2).

use obstruct::cohomology::{classify3, cohomology_basis, QuotientGroup, SmallGroup};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (name, g) in [
        ("Z/2", SmallGroup::cyclic(2)),
        ("Z/2 x Z/2", SmallGroup::klein_four()),
    ] {
        let dims: Vec<usize> = (0..=4)
            .map(|n| cohomology_basis(&g, n).map(|b| b.dimension))
            .collect::<Result<_, _>>()?;
        println!("H^n({name}; F_2) for n = 0..4: {dims:?}");
    }
    let v4 = QuotientGroup::KleinFour;
    for (i, c) in v4.h3_basis().iter().enumerate() {
        let class = classify3(v4, c)?;
        println!(
            "basis element {i}: {class}, {} nonzero values",
            c.values().count_ones()
        );
    }
    assert_eq!(cohomology_basis(&SmallGroup::klein_four(), 3)?.dimension, 4);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
