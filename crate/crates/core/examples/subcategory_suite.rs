//! Exhaustive checks of the plain and normalizer subcategories of the 2-fusion
//! of S4 and A4, one line per statement.

use blockbasis::fusion::{proposition_suite, thm14_hypothesis, FusionSystem};
use blockbasis::group::{Perm, PermGroup};

fn main() -> blockbasis::Result<()> {
    let p = |s: &str| Perm::parse_cycles(s, 4);
    let s4 = PermGroup::generate(4, &[p("(1 2 3 4)")?, p("(1 2)")?])?;
    let a4 = PermGroup::generate(4, &[p("(1 2 3)")?, p("(1 2)(3 4)")?])?;
    for (name, g) in [("S4", s4), ("A4", a4)] {
        let d = g.sylow(2);
        let f = FusionSystem::group_fusion(&g, &d)?;
        for dt in d.all_subgroups().into_iter().filter(|h| h.is_normal_in(&d)) {
            let checks = proposition_suite(&f, &dt)?;
            let failed = checks.iter().filter(|c| !c.holds).count();
            print!("{name}, |D~| = {}: {} checks, {failed} failed", dt.order(), checks.len());
            match thm14_hypothesis(&f, &dt) {
                Ok(v) => println!(", normalizer hypothesis {}", if v.holds { "holds" } else { "fails" }),
                Err(_) => println!(", hyp(F) not in D~"),
            }
        }
    }
    Ok(())
}
