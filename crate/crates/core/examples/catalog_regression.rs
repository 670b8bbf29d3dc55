//! Recomputes the catalog manifests and compares the golden records.

use std::path::Path;

use blockbasis::report::{run_regression, Report};

fn main() -> blockbasis::Result<()> {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("catalog");
    let summary = run_regression(&root, Some(&root.join("goldens")), 1)?;
    print!("{}", summary.text());
    if !summary.passed {
        std::process::exit(1);
    }
    Ok(())
}
