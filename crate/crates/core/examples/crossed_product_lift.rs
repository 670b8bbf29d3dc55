//! kV4 as a V4-interior D8-algebra: crossed product with D8 and lifts of its
//! group basis along three transversals.

use blockbasis::blocks::GroupAlgebra;
use blockbasis::group::{Perm, PermGroup};
use blockbasis::stable::{crossed_product, lift_basis, ActionBasis, InteriorAlgebra};

fn main() -> blockbasis::Result<()> {
    let p = |s: &str| Perm::parse_cycles(s, 4);
    let d8 = PermGroup::generate(4, &[p("(1 2 3 4)")?, p("(1 3)")?])?;
    let v4 = d8.subgroup(&[p("(1 3)")?, p("(2 4)")?])?;
    let kd = GroupAlgebra::over_splitting_field(&d8, 2, None)?;
    let ia = InteriorAlgebra::subgroup_algebra(&kd, &v4)?;
    let cp = crossed_product(&ia)?;
    println!("dim kV4 = {}, dim kV4 (x)_V4 D8 = {}", ia.dim(), cp.interior.dim());
    let omega = ActionBasis::new(&ia, v4.elements().iter().map(|x| ia.sigma(x).expect("element of V4").clone()).collect())?;
    for t in [
        vec![d8.identity(), p("(1 2 3 4)")?],
        vec![p("(1 3)")?, p("(1 2 3 4)")?],
        vec![d8.identity(), p("(1 2)(3 4)")?],
    ] {
        let names: Vec<String> = t.iter().map(|x| x.to_string()).collect();
        let lifted = lift_basis(&ia, &omega, Some(&t))?;
        println!(
            "transversal {{{}}}: {} elements, unital {}",
            names.join(", "),
            lifted.basis.len(),
            lifted.basis.is_unital(lifted.crossed.interior.algebra())
        );
    }
    Ok(())
}

