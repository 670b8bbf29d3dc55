//! Radical and primitive idempotents of F_3[S3], and the blocks of F_2[S3].

use blockbasis::algebra::{primitive_idempotent_decomposition, radical};
use blockbasis::blocks::{block_idempotents, GroupAlgebra};
use blockbasis::group::{Perm, PermGroup};

fn main() -> blockbasis::Result<()> {
    let s3 = PermGroup::generate(3, &[Perm::parse_cycles("(1 2 3)", 3)?, Perm::parse_cycles("(1 2)", 3)?])?;
    let k3 = GroupAlgebra::over_splitting_field(&s3, 3, None)?;
    let a = k3.algebra();
    println!("F_3[S3]: dim {}, radical dim {}", a.dim(), radical(a)?.dim());
    let dec = primitive_idempotent_decomposition(a, &a.one(), 1)?;
    println!("primitive decomposition of 1 has {} idempotents", dec.idempotents.len());
    println!("blocks over F_3: {}", block_idempotents(&k3)?.len());

    let k2 = GroupAlgebra::over_splitting_field(&s3, 2, None)?;
    for (i, b) in block_idempotents(&k2)?.iter().enumerate() {
        let support: Vec<String> = s3
            .elements()
            .iter()
            .zip(b)
            .filter(|(_, &c)| c != 0)
            .map(|(g, c)| format!("{c}*{g}"))
            .collect();
        println!("F_4[S3] block {i}: {}", support.join(" + "));
    }
    Ok(())
}
