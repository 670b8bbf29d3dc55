//! Stable basis, bifreeness and the unit criterion on the source algebras of
//! the 2-blocks of S3.

use blockbasis::algebra::UnitSearch;
use blockbasis::blocks::{BlockData, GroupAlgebra};
use blockbasis::group::{Perm, PermGroup};
use blockbasis::stable::{bifree_stable_basis, criterion, stabilizer_iso, InteriorAlgebra};

fn main() -> blockbasis::Result<()> {
    let s3 = PermGroup::generate(3, &[Perm::parse_cycles("(1 2 3)", 3)?, Perm::parse_cycles("(1 2)", 3)?])?;
    let kg = GroupAlgebra::over_splitting_field(&s3, 2, None)?;
    for b in BlockData::all(&kg, 1)? {
        let ia = InteriorAlgebra::source_algebra(&b)?;
        let basis = bifree_stable_basis(&ia, 1)?;
        println!("block {}: dim A = {}, {} orbit(s) on the stable basis", b.index, ia.dim(), basis.orbits().len());
        for orbit in basis.orbits() {
            let phi = stabilizer_iso(&ia, &basis, orbit[0])?;
            println!("  orbit of size {}, stabilizer Delta(phi) with |dom phi| = {}", orbit.len(), phi.domain().order());
        }
        let rep = criterion(&ia, &basis, &UnitSearch::default())?;
        println!("  criterion: {:?}", rep.verdict);
        for c in &rep.classes {
            println!("    |Delta| = {}  dim A^Delta = {}  dim A(phi) = {}", c.order, c.fixed_dim, c.brauer_quotient_dim);
        }
        if let Some(u) = rep.unital_basis {
            println!("  unital stable basis: {u:?}");
        }
    }
    Ok(())
}
