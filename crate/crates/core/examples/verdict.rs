// Realizability verdicts for M(q^2) and Aut(PSL(2,q^2)) over several fields.

use obstruct::cup_obstruct::{verdict, GroupFamily, Outcome};
use obstruct::quad_field::ImagQuadField;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [
        (-15, GroupFamily::M, 3),
        (-255, GroupFamily::AutPSL, 3),
        (-3, GroupFamily::M, 3),
        (-145, GroupFamily::M, 3),
        (-15, GroupFamily::AutPSL, 3),
        (-35, GroupFamily::M, 7),
    ];
    for (m, family, q) in cases {
        let k = ImagQuadField::new(m)?;
        let r = verdict(&k, family, q)?;
        println!(
            "m = {m:>4} {family:?} q = {q}: {:?}, field condition {}, live certificate {}, solvable quotient realizable {}",
            r.outcome,
            r.field_condition.name(),
            r.certificate.is_live(),
            r.solvable_quotient_realizable
        );
    }
    let k = ImagQuadField::new(-15)?;
    assert_eq!(verdict(&k, GroupFamily::M, 3)?.outcome, Outcome::Obstructed);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
