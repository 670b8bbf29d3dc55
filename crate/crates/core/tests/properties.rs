mod support;

use proptest::prelude::*;

use blockbasis::algebra::{
    idempotent_conjugacy, is_primitive_idempotent, primitive_idempotent_decomposition, radical, radical_brute_force,
    unit_in_subspace, UnitSearch, UnitSearchOutcome,
};
use blockbasis::blocks::{BlockData, GroupAlgebra};
use blockbasis::field::{Field, Fq};
use blockbasis::group::{Perm, PermGroup};
use blockbasis::linalg::{Mat, Subspace};
use blockbasis::stable::{bifree_stable_basis, criterion, find_stable_basis, ActionBasis, InteriorAlgebra, Verdict};

use support::*;

const FIELDS: [(u64, u32); 9] = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (2, 4), (5, 2)];

fn field_and_elems() -> impl Strategy<Value = (Field, Fq, Fq, Fq)> {
    (0..FIELDS.len(), any::<u16>(), any::<u16>(), any::<u16>()).prop_map(|(k, a, b, c)| {
        let (p, m) = FIELDS[k];
        let f = Field::new(p, m).unwrap();
        let q = f.size() as u16;
        (f, a % q, b % q, c % q)
    })
}

fn matrix(f: &Field, rows: usize, cols: usize, seed: &[u16]) -> Mat {
    let q = f.size() as u16;
    let data: Vec<Vec<Fq>> = (0..rows).map(|i| (0..cols).map(|j| seed[(i * cols + j) % seed.len()] % q).collect()).collect();
    Mat::from_rows(cols, &data)
}

fn element(f: &Field, n: usize, seed: &[u16]) -> Vec<Fq> {
    let q = f.size() as u16;
    (0..n).map(|i| seed[i % seed.len()] % q).collect()
}

fn s3_algebra(p: u64) -> GroupAlgebra {
    GroupAlgebra::over_splitting_field(&s3(), p, None).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms((f, a, b, c) in field_and_elems()) {
        prop_assert_eq!(f.add(a, f.add(b, c)), f.add(f.add(a, b), c));
        prop_assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), 0);
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        if a != 0 {
            prop_assert_eq!(f.mul(a, f.inv(a)), 1);
            prop_assert_eq!(f.pow(a, f.size() as u64 - 1), 1);
        }
        // Frobenius is a field automorphism.
        prop_assert_eq!(f.frobenius(f.add(a, b), 1), f.add(f.frobenius(a, 1), f.frobenius(b, 1)));
        prop_assert_eq!(f.frobenius(f.mul(a, b), 1), f.mul(f.frobenius(a, 1), f.frobenius(b, 1)));
    }

    #[test]
    fn rank_plus_nullity(k in 0..FIELDS.len(), rows in 1usize..7, cols in 1usize..7, seed in prop::collection::vec(any::<u16>(), 1..49)) {
        let (p, m) = FIELDS[k];
        let f = Field::new(p, m).unwrap();
        let a = matrix(&f, rows, cols, &seed);
        let ker = a.kernel(&f);
        prop_assert_eq!(a.rank(&f) + ker.len(), cols);
        for v in &ker {
            prop_assert!(is_zero(&a.mul_vec(&f, v)));
        }
        prop_assert_eq!(a.transpose().rank(&f), a.rank(&f));
        if rows == cols && a.is_invertible(&f) {
            let inv = a.inverse(&f).unwrap();
            prop_assert_eq!(a.mul(&f, &inv), Mat::identity(rows));
        }
    }

    #[test]
    fn subspace_operations(k in 0..FIELDS.len(), seed in prop::collection::vec(any::<u16>(), 1..40)) {
        let (p, m) = FIELDS[k];
        let f = Field::new(p, m).unwrap();
        let n = 5;
        let a = matrix(&f, 3, n, &seed).to_rows();
        let b = matrix(&f, 3, n, &seed[seed.len() / 2..].iter().chain(&seed).copied().collect::<Vec<_>>()).to_rows();
        let sa = Subspace::span(&f, n, &a);
        let sb = Subspace::span(&f, n, &b);
        let sum = sa.sum(&f, &sb);
        let meet = sa.intersect(&f, &sb);
        prop_assert_eq!(sum.dim() + meet.dim(), sa.dim() + sb.dim());
        prop_assert!(meet.is_subspace_of(&f, &sa) && meet.is_subspace_of(&f, &sb));
        for v in &a {
            let c = sa.coords(&f, v).unwrap();
            prop_assert_eq!(&sa.combine(&f, &c), v);
        }
    }

    #[test]
    fn permutation_group_laws(a in prop::sample::select(s4().elements().to_vec()), b in prop::sample::select(s4().elements().to_vec()), c in prop::sample::select(s4().elements().to_vec())) {
        prop_assert_eq!(a.compose(&b.compose(&c)), a.compose(&b).compose(&c));
        prop_assert!(a.compose(&a.inverse()).is_identity());
        prop_assert!(a.pow(a.order()).is_identity());
        let h = s4().subgroup(&[a.clone(), b.clone()]).unwrap();
        prop_assert_eq!(24 % h.order(), 0);
        prop_assert_eq!(h.order() as u64 % a.order(), 0);
        let n = s4().normalizer(&h).unwrap();
        prop_assert!(h.is_normal_in(&n));
        let c_h = s4().centralizer(&h).unwrap();
        prop_assert!(c_h.elements().iter().all(|x| h.elements().iter().all(|y| x.compose(y) == y.compose(x))));
    }

    #[test]
    fn group_algebra_product_matches_group_law(p in prop::sample::select(vec![2u64, 3]), sa in prop::collection::vec(any::<u16>(), 6), sb in prop::collection::vec(any::<u16>(), 6)) {
        let kg = s3_algebra(p);
        let f = kg.field();
        let x = element(f, 6, &sa);
        let y = element(f, 6, &sb);
        prop_assert_eq!(kg.algebra().mul(&x, &y), kg_mul(&kg, &x, &y));
    }

    #[test]
    fn radical_of_generated_subalgebras(p in prop::sample::select(vec![2u64, 3]), seeds in prop::collection::vec(prop::collection::vec(any::<u16>(), 6), 1..3)) {
        let kg = s3_algebra(p);
        let a = kg.algebra();
        let f = a.field();
        let gens: Vec<Vec<Fq>> = seeds.iter().map(|s| element(f, 6, s)).collect();
        let span = a.generated_subalgebra(&gens);
        let sub = a.subalgebra(&span, &a.one()).unwrap();
        prop_assume!((f.size() as u64).pow(sub.algebra.dim() as u32) <= 4096);
        prop_assert_eq!(radical(&sub.algebra).unwrap(), radical_brute_force(&sub.algebra).unwrap());
    }

    #[test]
    fn primitive_decompositions(p in prop::sample::select(vec![2u64, 3]), seed in 0u64..1000) {
        let kg = s3_algebra(p);
        let a = kg.algebra();
        let dec = primitive_idempotent_decomposition(a, &a.one(), seed).unwrap();
        let mut total = a.zero();
        for (i, e) in dec.idempotents.iter().enumerate() {
            prop_assert!(is_primitive_idempotent(a, e).unwrap());
            for (j, g) in dec.idempotents.iter().enumerate() {
                if i != j {
                    prop_assert!(is_zero(&a.mul(e, g)));
                }
            }
            total = a.add(&total, e);
        }
        prop_assert_eq!(total, a.one());
        // F_4[S3]: 1 + 2 (the 2-dimensional simple module), F_3[S3]: 2.
        prop_assert_eq!(dec.idempotents.len(), if p == 2 { 3 } else { 2 });
    }

    #[test]
    fn conjugate_idempotents_are_recognised(seed in 0u64..200, us in prop::collection::vec(any::<u16>(), 6)) {
        let kg = s3_algebra(2);
        let a = kg.algebra();
        let f = a.field();
        let u = element(f, 6, &us);
        prop_assume!(a.is_unit(&u));
        let dec = primitive_idempotent_decomposition(a, &a.one(), seed).unwrap();
        let i = &dec.idempotents[0];
        let j = a.mul3(&u, i, &a.inverse(&u).unwrap());
        let q = idempotent_conjugacy(a, i, &j, seed).unwrap().expect("conjugate idempotents");
        prop_assert_eq!(a.mul3(&q, &j, &a.inverse(&q).unwrap()), i.clone());
    }

    #[test]
    fn unit_search_outcomes(p in prop::sample::select(vec![2u64, 3]), seeds in prop::collection::vec(prop::collection::vec(any::<u16>(), 6), 1..4), seed in 0u64..100) {
        let kg = s3_algebra(p);
        let a = kg.algebra();
        let f = a.field();
        let vecs: Vec<Vec<Fq>> = seeds.iter().map(|s| element(f, 6, s)).collect();
        let v = Subspace::span(f, 6, &vecs);
        let opts = UnitSearch { seed, ..UnitSearch::default() };
        let brute = all_vectors(f, v.dim()).iter().any(|c| is_unit_brute(a, &v.combine(f, c)));
        match unit_in_subspace(a, &v, &opts).unwrap() {
            UnitSearchOutcome::Found { unit } => {
                prop_assert!(v.contains(f, &unit) && is_unit_brute(a, &unit));
            }
            UnitSearchOutcome::NoneExists => prop_assert!(!brute),
            UnitSearchOutcome::Undetermined { .. } => prop_assert!(false, "small spaces are scanned exhaustively"),
        }
    }

    #[test]
    fn stable_bases_of_kd8_for_any_seed(seed in 0u64..500) {
        let kg = GroupAlgebra::over_splitting_field(&d8(), 2, None).unwrap();
        let ia = InteriorAlgebra::group_algebra(&kg).unwrap();
        let vecs = find_stable_basis(ia.pair_action(), seed).unwrap();
        prop_assert!(is_stable_set(ia.pair_action(), &vecs));
        prop_assert_eq!(rank(ia.field(), 8, &vecs), 8);
        let basis = ActionBasis::new(&ia, vecs).unwrap();
        prop_assert!(basis.is_bifree(&ia));
    }

    #[test]
    fn criterion_verdict_does_not_depend_on_seeds(seed in 0u64..500) {
        let kg = s3_algebra(2);
        let b = BlockData::nth(&kg, 0, seed).unwrap();
        let ia = InteriorAlgebra::source_algebra(&b).unwrap();
        let basis = bifree_stable_basis(&ia, seed).unwrap();
        let rep = criterion(&ia, &basis, &UnitSearch { seed, ..UnitSearch::default() }).unwrap();
        prop_assert_eq!(rep.verdict, Verdict::Holds);
        let out = rep.unital_basis.unwrap();
        prop_assert!(is_stable_set(ia.pair_action(), &out));
        prop_assert!(out.iter().all(|v| is_unit_brute(ia.algebra(), v)));
    }

    #[test]
    fn blocks_do_not_depend_on_seeds(seed in 0u64..50) {
        let kg = GroupAlgebra::over_splitting_field(&a4(), 2, None).unwrap();
        let blocks = BlockData::all(&kg, seed).unwrap();
        prop_assert_eq!(blocks.len(), 1);
        let b = &blocks[0];
        prop_assert_eq!(b.defect_group.order(), 4);
        prop_assert_eq!(b.source.dim(), 4 * 3);
        prop_assert!(check_source_basis_shape(b));
    }
}

/// Source idempotent is an idempotent of `(kGb)^D` with `Br_D(l) != 0`.
fn check_source_basis_shape(b: &BlockData) -> bool {
    let kg = &b.kg;
    let l = b.source_idempotent();
    let d = &b.defect_group;
    kg_mul(kg, l, l) == *l && kg.is_fixed(d, l) && !is_zero(&kg.brauer_map(l, d).unwrap().1)
}

#[test]
fn perm_parse_and_display_roundtrip() {
    for g in s4().elements() {
        let again = Perm::parse_cycles(&g.to_string(), 4).unwrap();
        assert_eq!(&again, g);
    }
    assert!(Perm::parse_cycles("(1 5)", 4).is_err());
    assert!(PermGroup::generate(3, &[perm("(1 2 3)", 3)]).unwrap().order() == 3);
}
