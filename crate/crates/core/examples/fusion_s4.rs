//! Fusion of the principal 2-block of S4: automizers, focal and hyperfocal
//! subgroups, compared with the group fusion system.

use blockbasis::blocks::{BlockData, GroupAlgebra};
use blockbasis::fusion::FusionSystem;
use blockbasis::group::{Perm, PermGroup};

fn main() -> blockbasis::Result<()> {
    let s4 = PermGroup::generate(4, &[Perm::parse_cycles("(1 2 3 4)", 4)?, Perm::parse_cycles("(1 2)", 4)?])?;
    let kg = GroupAlgebra::over_splitting_field(&s4, 2, None)?;
    let b = BlockData::nth(&kg, 0, 1)?;
    let f = FusionSystem::block_fusion(&b)?;
    let g = FusionSystem::group_fusion(&s4, &b.defect_group)?;
    println!("block fusion equals group fusion: {}", f.same_morphisms(&g));
    for (i, r) in f.objects().iter().enumerate() {
        println!("  |R| = {}  |Aut_F(R)| = {}", r.order(), f.aut_group(i).order());
    }
    let foc = f.focal();
    let derived = s4.commutator_subgroup();
    let meet = foc.elements().iter().all(|x| derived.contains(x));
    println!("focal order {}, inside [G, G]: {meet}", foc.order());
    println!("hyperfocal order {}", f.hyperfocal().order());
    Ok(())
}
