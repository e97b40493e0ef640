// PSL(2,q^2) equals its commutator subgroup, checked by closure.

use obstruct::matrix_groups::{perfectness_check, DEFAULT_GROUP_CAP};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for q in [3, 5] {
        let r = perfectness_check(q, DEFAULT_GROUP_CAP)?;
        println!(
            "PSL(2,{}): order {}, derived subgroup order {}, perfect: {}",
            q * q,
            r.group_order,
            r.derived_order,
            r.perfect
        );
        assert!(r.perfect);
    }
    match perfectness_check(7, DEFAULT_GROUP_CAP) {
        Err(e) => println!("PSL(2,49): {e}"),
        Ok(_) => unreachable!("above the cap"),
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
