// Fields Q(sqrt(-pq)) and Q(sqrt(-p1 p2 p3)) picked out by Legendre-symbol
// conditions, each re-checked through the cup-product criterion.

use obstruct::cup_obstruct::{search_family_a, search_family_b};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let a = search_family_a(30)?;
    println!("family a, primes <= 30: {} fields", a.len());
    for hit in &a {
        println!(
            "  (p, q) = ({}, {})  m = {}",
            hit.primes[0], hit.primes[1], hit.m
        );
    }
    let b = search_family_b(40)?;
    println!("family b, primes <= 40: {} fields", b.len());
    for hit in &b {
        println!("  {:?}  m = {}", hit.primes, hit.m);
    }
    assert!(b.iter().any(|h| h.m == -255));
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
