// Arithmetic in F_9 = F_3[x]/(x^2 + 1) and the primitive element used by
// the matrix-group constructions.

use obstruct::finite_field::FiniteField;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let f = FiniteField::new(3, 2)?;
    let theta = f.primitive_element();
    println!("modulus (low to high): {:?}", f.modulus());
    println!("theta = {:?} (coefficients)", f.coeffs(theta));
    for e in 0..8 {
        let x = f.primitive_pow(e);
        println!(
            "theta^{e} = {:?}  frobenius -> {:?}",
            f.coeffs(x),
            f.coeffs(f.frobenius(x, 3)?)
        );
    }
    // theta^4 = -1, so theta is a square root of -1 times a non-square
    assert_eq!(f.primitive_pow(4), f.from_int(-1));
    assert!(!f.is_square(theta));
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
