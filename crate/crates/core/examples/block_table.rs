//! Block table of a catalog group: `cargo run --example block_table -- a5 2`.

use std::path::Path;

use blockbasis::blocks::{BlockData, GroupAlgebra};
use blockbasis::group::read_group_file;
use blockbasis::report::{block_table, Report};

fn main() -> blockbasis::Result<()> {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "a5".into());
    let p: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(2);
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("catalog/groups").join(format!("{name}.txt"));
    let g = read_group_file(path)?;
    let kg = GroupAlgebra::over_splitting_field(&g, p, None)?;
    let blocks = BlockData::all(&kg, 1)?;
    print!("{}", block_table(&kg, &blocks).text());
    for b in &blocks {
        let pairs: Vec<String> = b.brauer_pairs.iter().map(|bp| bp.subgroup.order().to_string()).collect();
        println!("block {}: Brauer pairs at subgroup orders [{}]", b.index, pairs.join(", "));
    }
    Ok(())
}
