// The 3-cocycle of Aut(PSL(2,q^2)) over Z/2 x Z/2 and its restrictions to
// the three order-2 subgroups.

use obstruct::cohomology::{is_coboundary, pullback, SmallGroup};
use obstruct::matrix_groups::{aut_group_cocycle, m_group_cocycle};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let z2 = SmallGroup::cyclic(2);
    for q in [3, 5] {
        let c = aut_group_cocycle(q)?;
        let class = c.table.classify()?;
        println!("q = {q}: class {class}");
        let m = m_group_cocycle(q)?;
        for (name, map) in c.table.group.inclusions() {
            let pulled = pullback(&z2, &c.table.group.group(), &map, &c.table.values)?;
            println!(
                "  {name:<13} trivial: {:<5}  equals M(q^2) class: {}",
                is_coboundary(&z2, &pulled)?,
                is_coboundary(&z2, &pulled.add(&m.table.values))?
            );
        }
        assert!(class.is_a_squared_b_shape());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
