// The crossed-module 3-cocycle of M(9) = M_10 over Z/2.

use obstruct::matrix_groups::m_group_cocycle;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let c = m_group_cocycle(3)?;
    for g in 0..2 {
        for h in 0..2 {
            for k in 0..2 {
                println!("c({g},{h},{k}) = {}", c.table.get(g, h, k) as u8);
            }
        }
    }
    let class = c.table.classify()?;
    println!("cocycle: {}, class: {class}", c.table.is_cocycle());
    println!("lift of F(1,1): {:?}", c.lift_at(1, 1));
    assert_eq!(c.table.values.support(), vec![vec![1, 1, 1]]);
    assert_eq!(class.to_string(), "a^3");
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
