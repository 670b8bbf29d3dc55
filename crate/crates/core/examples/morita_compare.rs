//! Necessary conditions for basic Morita equivalence: the principal 2-block
//! of S4 against itself and against kD8.

use blockbasis::blocks::{BlockData, GroupAlgebra};
use blockbasis::group::{GroupHom, Perm, PermGroup};
use blockbasis::pipeline::morita_necessary_check;
use blockbasis::report::Report;

fn main() -> blockbasis::Result<()> {
    let p = |s: &str| Perm::parse_cycles(s, 4);
    let s4 = PermGroup::generate(4, &[p("(1 2 3 4)")?, p("(1 2)")?])?;
    let b = BlockData::nth(&GroupAlgebra::over_splitting_field(&s4, 2, None)?, 0, 1)?;
    let d = b.defect_group.clone();
    println!("S4 against itself:");
    print!("{}", morita_necessary_check(&b, &b, &GroupHom::identity(&d), 1)?.text());
    let bd = BlockData::nth(&GroupAlgebra::over_splitting_field(&d, 2, None)?, 0, 1)?;
    let lambda = GroupHom::from_images(&d, &bd.defect_group, d.elements())?;
    println!("S4 against D8:");
    print!("{}", morita_necessary_check(&b, &bd, &lambda, 1)?.text());
    Ok(())
}
