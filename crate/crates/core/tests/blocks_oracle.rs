mod support;

use blockbasis::algebra::{primitive_idempotent_decomposition, radical, radical_brute_force};
use blockbasis::blocks::{block_idempotents, brauer_pairs, relative_multiplicity, BlockData, GroupAlgebra};
use blockbasis::fusion::FusionSystem;
use blockbasis::group::PermGroup;
use blockbasis::pipeline::source_conjugation;

use support::*;

/// Groups whose centres are small enough to enumerate.
const SMALL: [(&str, u64); 9] = [
    ("s3", 2),
    ("s3", 3),
    ("c6", 2),
    ("c6", 3),
    ("a4", 2),
    ("a4", 3),
    ("s4", 3),
    ("c3c4", 2),
    ("d8", 2),
];

#[test]
fn block_idempotents_match_central_enumeration() {
    for (name, p) in SMALL {
        let kg = GroupAlgebra::over_splitting_field(&catalog_group(name), p, None).unwrap();
        if (kg.field().size() as u64).pow(class_sums(&kg).len() as u32) > 1 << 16 {
            continue;
        }
        let mut lib = block_idempotents(&kg).unwrap();
        let mut brute = central_primitive_idempotents_brute(&kg);
        lib.sort();
        brute.sort();
        assert_eq!(lib, brute, "{name} p={p}");
        for b in BlockData::all(&kg, 1).unwrap() {
            assert_eq!(b.defect_group.order(), defect_order_brute(&kg, &b.idempotent), "{name} p={p} block {}", b.index);
        }
    }
}

#[test]
fn block_idempotents_sum_to_one_and_are_orthogonal() {
    for (name, p) in catalog_pairs() {
        let kg = GroupAlgebra::over_splitting_field(&catalog_group(name), p, None).unwrap();
        let blocks = block_idempotents(&kg).unwrap();
        let mut total = vec![0; kg.dim()];
        for (i, e) in blocks.iter().enumerate() {
            for (j, f) in blocks.iter().enumerate() {
                let prod = kg_mul(&kg, e, f);
                assert!(if i == j { prod == *e } else { is_zero(&prod) }, "{name} p={p}");
            }
            total = kg.algebra().add(&total, e);
        }
        assert_eq!(total, kg.element(&kg.group().identity()), "{name} p={p}");
    }
}

#[test]
fn defect_zero_blocks_have_trivial_source_algebras() {
    for (name, p) in catalog_pairs() {
        for b in blocks_of(name, p) {
            if b.defect_group.is_trivial() {
                assert_eq!(b.source.dim(), 1, "{name} p={p} block {}", b.index);
            }
            // dim kGb is a multiple of [G:D]_p^2.
            let g = b.kg.group().order() as u64;
            let index_p = blockbasis::group::p_part(g, p) / b.defect_group.order() as u64;
            assert_eq!(b.block_dim() as u64 % (index_p * index_p), 0, "{name} p={p} block {}", b.index);
        }
    }
}

#[test]
fn source_algebras_are_interior_and_sized_by_defect() {
    for (name, p) in catalog_pairs() {
        for b in blocks_of(name, p) {
            let d = &b.defect_group;
            assert_eq!(b.source.dim() % d.order(), 0, "{name} p={p} block {}", b.index);
            // Left translation by D is invertible on A.
            let a = b.source.algebra();
            let one = a.one();
            for u in d.generators() {
                let left = source_translate(&b, u, &one, &d.identity());
                assert!(!is_zero(&left));
                let back = source_translate(&b, &u.inverse(), &left, &d.identity());
                assert_eq!(back, one);
            }
        }
    }
}

#[test]
fn principal_block_fusion_is_group_fusion() {
    for (name, p) in catalog_pairs() {
        let g = catalog_group(name);
        let b = &blocks_of(name, p)[0];
        assert!(b.principal);
        let block = FusionSystem::block_fusion(b).unwrap();
        let group = FusionSystem::group_fusion(&g, &b.defect_group).unwrap();
        assert!(block.same_morphisms(&group), "{name} p={p}");
    }
}

#[test]
fn brauer_pairs_cover_every_subgroup_of_d() {
    for (name, p) in [("s4", 2u64), ("a4", 2), ("sl23", 3), ("c6", 2)] {
        for b in blocks_of(name, p) {
            let pairs = brauer_pairs(&b.kg, &b.defect_group, b.source_idempotent()).unwrap();
            assert_eq!(pairs.len(), b.defect_group.all_subgroups().len(), "{name} p={p}");
            for bp in &pairs {
                let e = &bp.block_in_group;
                assert!(b.kg.algebra().is_idempotent(e) && !is_zero(e));
            }
        }
    }
}

#[test]
fn radical_of_small_source_algebras_matches_brute_force() {
    let mut checked = 0;
    for (name, p) in catalog_pairs() {
        for b in blocks_of(name, p) {
            let a = b.source.algebra();
            if (a.field().size() as u64).checked_pow(a.dim() as u32).is_none_or(|t| t > 4096) {
                continue;
            }
            assert_eq!(radical(a).unwrap(), radical_brute_force(a).unwrap(), "{name} p={p} block {}", b.index);
            checked += 1;
        }
    }
    assert!(checked >= 10);
}

#[test]
fn relative_multiplicity_counts_conjugate_idempotents() {
    // The faithful 3-block of SL(2,3) has source algebra M_2(k) (x) kC3:
    // one point of the trivial subgroup, of multiplicity 2.
    let b = &blocks_of("sl23", 3)[2];
    let a = b.source.algebra();
    let one = a.one();
    let dec = primitive_idempotent_decomposition(a, &one, 3).unwrap();
    assert_eq!(dec.idempotents.len(), 2);
    let triv = PermGroup::trivial(b.kg.group().degree());
    let action = source_conjugation(b, &triv).unwrap();
    let m = relative_multiplicity(a, &action, &triv, &dec.idempotents[0], &one, 5).unwrap();
    assert_eq!(m, 2);
}
