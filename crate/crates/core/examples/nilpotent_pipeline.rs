//! Runs the stable-basis pipeline on every catalog block small enough for it
//! and prints one verdict line per block.

use std::path::Path;

use blockbasis::blocks::{BlockData, GroupAlgebra};
use blockbasis::fusion::FusionSystem;
use blockbasis::group::read_group_file;
use blockbasis::pipeline::corollary15_suite;
use blockbasis::report::load_manifests;

fn main() -> blockbasis::Result<()> {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("catalog");
    for (_, entry) in load_manifests(&root.join("manifest"))? {
        let entry = entry?;
        let g = read_group_file(root.join(&entry.group_file))?;
        let kg = GroupAlgebra::over_splitting_field(&g, entry.prime, None)?;
        for b in BlockData::all(&kg, 1)? {
            if b.source.dim() > 24 {
                println!("{:<10} block {}: dim A = {} skipped", entry.name, b.index, b.source.dim());
                continue;
            }
            let f = FusionSystem::block_fusion(&b)?;
            let r = corollary15_suite(&b, &f, 1)?;
            println!(
                "{:<10} block {}: {:<16} A~ {:?}, A {:?}",
                entry.name, b.index, r.branch, r.run.hyperfocal_verdict, r.run.source_verdict
            );
        }
    }
    Ok(())
}
