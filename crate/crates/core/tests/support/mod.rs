//! Shared fixtures and brute-force oracles for the integration tests.
//!
//! The oracles deliberately avoid the library's algebra routines: products
//! in `kG` are recomputed from permutation composition, central idempotents
//! are found by enumerating the span of the class sums, and stable unital
//! bases are searched over all unit orbits.
#![allow(dead_code)]

use std::path::{Path, PathBuf};

use blockbasis::algebra::{FinAlgebra, LinearAction};
use blockbasis::blocks::{BlockData, GroupAlgebra};
use blockbasis::field::{Field, Fq};
use blockbasis::group::{read_group_file, GroupHom, Perm, PermGroup};
use blockbasis::linalg::{Mat, Subspace};
use blockbasis::stable::InteriorAlgebra;

pub fn perm(s: &str, n: usize) -> Perm {
    Perm::parse_cycles(s, n).unwrap()
}

pub fn group(n: usize, gens: &[&str]) -> PermGroup {
    let g: Vec<Perm> = gens.iter().map(|s| perm(s, n)).collect();
    PermGroup::generate(n, &g).unwrap()
}

pub fn s3() -> PermGroup {
    group(3, &["(1 2 3)", "(1 2)"])
}

pub fn s4() -> PermGroup {
    group(4, &["(1 2 3 4)", "(1 2)"])
}

pub fn a4() -> PermGroup {
    group(4, &["(1 2 3)", "(1 2)(3 4)"])
}

pub fn d8() -> PermGroup {
    group(4, &["(1 2 3 4)", "(1 3)"])
}

pub fn cyclic(n: usize) -> PermGroup {
    let cycle: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    group(n, &[&format!("({})", cycle.join(" "))])
}

pub fn catalog_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("catalog")
}

pub fn catalog_group(name: &str) -> PermGroup {
    read_group_file(catalog_dir().join("groups").join(format!("{name}.txt"))).unwrap()
}

/// Catalog groups that are p-groups, with their prime.
pub fn catalog_p_groups() -> Vec<(&'static str, u64)> {
    vec![
        ("c2", 2),
        ("c3", 3),
        ("c4", 2),
        ("c5", 5),
        ("c7", 7),
        ("c8", 2),
        ("c9", 3),
        ("d8", 2),
        ("q8", 2),
        ("e4", 2),
        ("e8", 2),
        ("e9", 3),
    ]
}

/// Every (group, prime) pair in the catalog manifests.
pub fn catalog_pairs() -> Vec<(&'static str, u64)> {
    let mut out = catalog_p_groups();
    out.extend([
        ("s3", 2),
        ("s3", 3),
        ("s4", 2),
        ("s4", 3),
        ("a4", 2),
        ("a4", 3),
        ("a5", 2),
        ("a5", 3),
        ("a5", 5),
        ("c6", 2),
        ("c6", 3),
        ("sl23", 2),
        ("sl23", 3),
        ("c3c4", 2),
        ("c3c4", 3),
    ]);
    out
}

pub fn blocks_of(name: &str, p: u64) -> Vec<BlockData> {
    let kg = GroupAlgebra::over_splitting_field(&catalog_group(name), p, None).unwrap();
    BlockData::all(&kg, 1).unwrap()
}

/// Product in `kG` from the multiplication of the group itself.
pub fn kg_mul(kg: &GroupAlgebra, a: &[Fq], b: &[Fq]) -> Vec<Fq> {
    let g = kg.group();
    let f = kg.field();
    let mut out = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            if y == 0 {
                continue;
            }
            let k = g.index_of(&g.element(i).compose(g.element(j))).unwrap();
            out[k] = f.add(out[k], f.mul(x, y));
        }
    }
    out
}

pub fn is_zero(v: &[Fq]) -> bool {
    v.iter().all(|&x| x == 0)
}

/// All vectors of `F_q^n`, in base-q order.
pub fn all_vectors(f: &Field, n: usize) -> Vec<Vec<Fq>> {
    let q = f.size();
    let total = q.pow(n as u32);
    (0..total)
        .map(|mut k| {
            (0..n)
                .map(|_| {
                    let d = (k % q) as Fq;
                    k /= q;
                    d
                })
                .collect()
        })
        .collect()
}

/// Class sums of `G`, computed by conjugating every element.
pub fn class_sums(kg: &GroupAlgebra) -> Vec<Vec<Fq>> {
    let g = kg.group();
    let n = g.order();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for i in 0..n {
        if seen[i] {
            continue;
        }
        let mut v = vec![0; n];
        for x in g.elements() {
            let c = x.compose(g.element(i)).compose(&x.inverse());
            let k = g.index_of(&c).unwrap();
            if !seen[k] {
                seen[k] = true;
                v[k] = 1;
            }
        }
        out.push(v);
    }
    out
}

/// Primitive central idempotents of `kG`, by enumerating every element of
/// the span of the class sums.
pub fn central_primitive_idempotents_brute(kg: &GroupAlgebra) -> Vec<Vec<Fq>> {
    let f = kg.field();
    let sums = class_sums(kg);
    let n = kg.dim();
    let idem: Vec<Vec<Fq>> = all_vectors(f, sums.len())
        .into_iter()
        .map(|c| {
            let mut v = vec![0; n];
            for (ci, s) in c.iter().zip(&sums) {
                for k in 0..n {
                    v[k] = f.add(v[k], f.mul(*ci, s[k]));
                }
            }
            v
        })
        .filter(|v| !is_zero(v) && kg_mul(kg, v, v) == *v)
        .collect();
    idem.iter()
        .filter(|e| {
            !idem
                .iter()
                .any(|e2| e2 != *e && kg_mul(kg, e, e2) == *e2)
        })
        .cloned()
        .collect()
}

/// Largest p-subgroup `Q` with `Br_Q(e) != 0`, i.e. with `e` supported on
/// `C_G(Q)`; p-subgroups are generated from pairs of p-elements.
pub fn defect_order_brute(kg: &GroupAlgebra, e: &[Fq]) -> usize {
    let g = kg.group();
    let p = kg.characteristic();
    let p_elems: Vec<&Perm> = g
        .elements()
        .iter()
        .filter(|x| {
            let mut o = x.order();
            while o.is_multiple_of(p) {
                o /= p;
            }
            o == 1
        })
        .collect();
    let mut best = 1;
    for a in &p_elems {
        for b in &p_elems {
            let q = PermGroup::generate(g.degree(), &[(*a).clone(), (*b).clone()]).unwrap();
            if !q.is_p_group(p) || q.order() <= best {
                continue;
            }
            let supported = g.elements().iter().enumerate().any(|(k, x)| {
                e[k] != 0 && q.elements().iter().all(|y| x.compose(y) == y.compose(x))
            });
            if supported {
                best = q.order();
            }
        }
    }
    best
}

pub fn rank(f: &Field, n: usize, vecs: &[Vec<Fq>]) -> usize {
    if vecs.is_empty() {
        return 0;
    }
    Mat::from_rows(n, vecs).rank(f)
}

/// `a` is a unit iff left multiplication by `a` is bijective.
pub fn is_unit_brute(a: &FinAlgebra, x: &[Fq]) -> bool {
    let n = a.dim();
    let cols: Vec<Vec<Fq>> = (0..n).map(|i| a.mul(x, &a.basis_element(i))).collect();
    rank(a.field(), n, &cols) == n
}

/// The set `vecs` is permuted by every group element of `action`.
pub fn is_stable_set(action: &LinearAction, vecs: &[Vec<Fq>]) -> bool {
    action
        .group()
        .elements()
        .iter()
        .all(|g| vecs.iter().all(|v| vecs.contains(&action.apply(g, v))))
}

/// Existence of a stable basis made of units, by exhaustive search: every
/// unit orbit with independent members, then a depth-first choice of
/// disjoint orbits whose union is a basis.
pub fn stable_unital_basis_exists(a: &FinAlgebra, action: &LinearAction) -> bool {
    let f = a.field();
    let n = a.dim();
    let mut orbits: Vec<Vec<Vec<Fq>>> = Vec::new();
    let mut covered = std::collections::HashSet::new();
    for v in all_vectors(f, n) {
        if covered.contains(&v) || !is_unit_brute(a, &v) {
            continue;
        }
        let mut orbit: Vec<Vec<Fq>> = action.group().elements().iter().map(|g| action.apply(g, &v)).collect();
        orbit.sort();
        orbit.dedup();
        for w in &orbit {
            covered.insert(w.clone());
        }
        if rank(f, n, &orbit) == orbit.len() {
            orbits.push(orbit);
        }
    }
    fn dfs(f: &Field, n: usize, orbits: &[Vec<Vec<Fq>>], start: usize, span: &Subspace) -> bool {
        if span.dim() == n {
            return true;
        }
        for i in start..orbits.len() {
            let grown = span.sum(f, &Subspace::span(f, n, &orbits[i]));
            if grown.dim() == span.dim() + orbits[i].len() && dfs(f, n, orbits, i + 1, &grown) {
                return true;
            }
        }
        false
    }
    dfs(f, n, &orbits, 0, &Subspace::zero(n))
}

/// Every injective homomorphism `u -> v`, by trying all generator images.
pub fn all_isos(u: &PermGroup, v: &PermGroup) -> Vec<GroupHom> {
    let gens = u.generators().to_vec();
    let mut out = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    loop {
        let imgs: Vec<Perm> = choice.iter().map(|&c| v.element(c).clone()).collect();
        if let Ok(h) = GroupHom::from_generator_images(u, v, &gens, &imgs) {
            if h.is_injective() {
                out.push(h);
            }
        }
        let mut i = 0;
        loop {
            if i == choice.len() {
                return out;
            }
            choice[i] += 1;
            if choice[i] < v.order() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// `M_2(F_2)` with `G = N = C2` acting through the swap matrix.
pub fn m2_swap() -> InteriorAlgebra {
    let f = Field::prime(2).unwrap();
    let a = FinAlgebra::matrix_algebra(f.clone(), 2);
    let c2 = cyclic(2);
    let s = vec![0, 1, 1, 0];
    let conj = LinearAction::from_fn(f, 4, &c2, |x| {
        if x.is_identity() {
            a.left_matrix(&a.one())
        } else {
            a.left_matrix(&s).mul(a.field(), &a.right_matrix(&s))
        }
    })
    .unwrap();
    InteriorAlgebra::new(a.clone(), &c2, &c2, vec![a.one(), s], conj).unwrap()
}

/// `F_q x F_q` with `G = C2` swapping the factors and `N = 1`.
pub fn swapped_pair(q_degree: u32) -> InteriorAlgebra {
    let f = Field::new(2, q_degree).unwrap();
    let a = FinAlgebra::diagonal(f.clone(), 2);
    let c2 = cyclic(2);
    let swap = Mat::from_rows(2, &[vec![0, 1], vec![1, 0]]);
    let conj = LinearAction::from_fn(f, 2, &c2, |x| if x.is_identity() { Mat::identity(2) } else { swap.clone() }).unwrap();
    InteriorAlgebra::new(a.clone(), &c2, &PermGroup::trivial(2), vec![a.one()], conj).unwrap()
}

/// Pair-group action on the source algebra recomputed in `kG`:
/// `(u, v) a = u a v^-1`, returned in source coordinates.
pub fn source_translate(block: &BlockData, u: &Perm, a: &[Fq], v: &Perm) -> Vec<Fq> {
    let kg = &block.kg;
    let sub = &block.source.sub;
    let x = sub.to_parent(a);
    let y = kg_mul(kg, &kg_mul(kg, &kg.element(u), &x), &kg.element(&v.inverse()));
    sub.from_parent(&y).expect("translation stays in the source algebra")
}

/// `vecs` is a `D x D`-stable basis of units of the source algebra,
/// checked without the library's actions.
pub fn check_source_basis(block: &BlockData, vecs: &[Vec<Fq>]) -> Result<(), String> {
    let a = block.source.algebra();
    let n = a.dim();
    if vecs.len() != n || rank(a.field(), n, vecs) != n {
        return Err(format!("{} vectors of rank {} in dimension {n}", vecs.len(), rank(a.field(), n, vecs)));
    }
    if let Some(k) = vecs.iter().position(|v| !is_unit_brute(a, v)) {
        return Err(format!("vector {k} is not a unit"));
    }
    let d = &block.defect_group;
    for u in d.generators() {
        for v in vecs {
            let left = source_translate(block, u, v, &d.identity());
            let right = source_translate(block, &d.identity(), v, u);
            if !vecs.contains(&left) || !vecs.contains(&right) {
                return Err(format!("translation by {u} leaves the basis"));
            }
        }
    }
    Ok(())
}
