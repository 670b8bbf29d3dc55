//! Rewrites catalog/goldens from the current code. Run after an intended
//! change in verdicts or invariants, then review the diff.

use std::path::Path;

use blockbasis::blocks::{BlockData, GroupAlgebra};
use blockbasis::group::read_group_file;
use blockbasis::report::{golden_record, load_manifests, write_golden};

fn main() -> blockbasis::Result<()> {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("catalog");
    let goldens = root.join("goldens");
    for (path, entry) in load_manifests(&root.join("manifest"))? {
        let entry = entry.map_err(|e| {
            eprintln!("{}: {e}", path.display());
            e
        })?;
        let g = read_group_file(root.join(&entry.group_file))?;
        let kg = GroupAlgebra::over_splitting_field(&g, entry.prime, entry.field_degree)?;
        for b in BlockData::all(&kg, 1)? {
            let rec = golden_record(&entry.group, &b, 1)?;
            let out = write_golden(&goldens, &rec)?;
            println!("{}", out.strip_prefix(&root).unwrap_or(&out).display());
        }
    }
    Ok(())
}
