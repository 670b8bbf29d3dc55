//! The faithful 3-block of SL(2,3): nilpotent, with a 4-dimensional
//! hyperfocal subalgebra inside its 12-dimensional source algebra.

use std::path::Path;

use blockbasis::blocks::{BlockData, GroupAlgebra};
use blockbasis::fusion::FusionSystem;
use blockbasis::group::{read_group_file, PermGroup};
use blockbasis::pipeline::{search_hyperfocal, verify_hyperfocal};

fn main() -> blockbasis::Result<()> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("catalog/groups/sl23.txt");
    let g = read_group_file(path)?;
    let kg = GroupAlgebra::over_splitting_field(&g, 3, None)?;
    let b = BlockData::nth(&kg, 2, 1)?;
    let f = FusionSystem::block_fusion(&b)?;
    println!("|D| = {}, dim A = {}, |hyp| = {}", b.defect_group.order(), b.source.dim(), f.hyperfocal().order());
    let s = search_hyperfocal(&b, &f, &PermGroup::trivial(g.degree()), 1)?;
    for a in &s.attempts {
        println!("  {a}");
    }
    if let Some(c) = s.candidate {
        println!("dim A~ = {}, verified again: {}", c.space.dim(), verify_hyperfocal(&b, &c).accepted);
    }
    Ok(())
}
