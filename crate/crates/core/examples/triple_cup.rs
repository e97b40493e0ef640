// Evaluating x ∪ x ∪ y through inert primes, with the per-prime evidence.

use obstruct::cup_obstruct::{triple_cup, triple_cup_complement};
use obstruct::quad_field::ImagQuadField;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for m in [-15, -255, -145, -5] {
        let k = ImagQuadField::new(m)?;
        println!("Q(sqrt({m})), D = {}", k.discriminant());
        for x in k.h1_classes() {
            for y in k.h1_classes() {
                let ev = triple_cup(&k, &x, &y)?;
                let primes: Vec<String> = ev
                    .per_prime
                    .iter()
                    .map(|p| {
                        format!(
                            "{}^{}:{}",
                            p.p,
                            p.exponent,
                            if p.inert { "inert" } else { "split" }
                        )
                    })
                    .collect();
                println!(
                    "  x = {:<6} y = {:<6} c_y = {:<5} [{}] -> {}",
                    k.label(&x),
                    k.label(&y),
                    ev.y_generator,
                    primes.join(", "),
                    ev.parity
                );
                assert_eq!(ev.parity, triple_cup_complement(&k, &x, &y)?.parity);
            }
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
