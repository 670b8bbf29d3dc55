//! Fusion systems on a p-group, realized by a group or by the Brauer pairs
//! of a block, and the subcategories cut out by a normal subgroup.

mod subcat;

pub use subcat::{proposition_suite, thm14_hypothesis, SubcategoryView, SuiteCheck, Thm14Verdict, ViewMode};

use std::collections::{BTreeSet, HashMap};
use std::sync::OnceLock;

use serde::Serialize;

use crate::algebra::Elem;
use crate::blocks::{BlockData, GroupAlgebra};
use crate::error::{Error, Result};
use crate::group::{is_prime, ElementSet, Perm, PermGroup};

/// An injective map between objects, stored as the images (indices into
/// the elements of `D`) of the sorted elements of the source object.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Morphism {
    pub source: usize,
    pub target: usize,
    pub images: Vec<usize>,
}

#[derive(Clone, Debug)]
enum Realization {
    Group,
    /// `e_R` in `kG` coordinates, one per object.
    Block { kg: GroupAlgebra, pairs: Vec<Elem> },
}

#[derive(Debug)]
pub struct FusionSystem {
    d: PermGroup,
    ambient: PermGroup,
    p: u64,
    objects: Vec<PermGroup>,
    sets: Vec<Vec<usize>>,
    lookup: HashMap<Vec<usize>, usize>,
    d_in_g: Vec<usize>,
    g_to_d: Vec<Option<usize>>,
    realization: Realization,
    cache: Vec<OnceLock<Vec<Morphism>>>,
}

fn prime_of(order: usize) -> u64 {
    (2..=order as u64).find(|&q| is_prime(q) && (order as u64).is_multiple_of(q)).unwrap_or(2)
}

impl FusionSystem {
    fn build(g: &PermGroup, d: &PermGroup, realization: Realization) -> Result<Self> {
        if !d.is_subgroup_of(g) {
            return Err(Error::arg("D is not a subgroup of G"));
        }
        let p = prime_of(d.order());
        if !d.is_p_group(p) {
            return Err(Error::arg("D is not a p-group"));
        }
        let set_list: Vec<ElementSet> = d.subgroup_sets_where(|_| true);
        let objects: Vec<PermGroup> = set_list.iter().map(|s| d.subgroup_from_set(s)).collect();
        let sets: Vec<Vec<usize>> = set_list.iter().map(|s| s.iter().collect()).collect();
        let lookup = sets.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        let d_in_g: Vec<usize> = d.elements().iter().map(|x| g.index_of(x).expect("D <= G")).collect();
        let mut g_to_d = vec![None; g.order()];
        for (i, &gi) in d_in_g.iter().enumerate() {
            g_to_d[gi] = Some(i);
        }
        let n = objects.len();
        Ok(FusionSystem {
            d: d.clone(),
            ambient: g.clone(),
            p,
            objects,
            sets,
            lookup,
            d_in_g,
            g_to_d,
            realization,
            cache: (0..n * n).map(|_| OnceLock::new()).collect(),
        })
    }

    /// `F_D(G)`: conjugations by elements of `G`.
    pub fn group_fusion(g: &PermGroup, d: &PermGroup) -> Result<Self> {
        Self::build(g, d, Realization::Group)
    }

    /// `F_D(D)`.
    pub fn inner(d: &PermGroup) -> Result<Self> {
        Self::group_fusion(d, d)
    }

    /// Conjugations `c_x` with `x (R1, e_R1) x^-1 <= (R2, e_R2)`.
    pub fn block_fusion(bd: &BlockData) -> Result<Self> {
        let d = &bd.defect_group;
        let g = bd.kg.group();
        let mut fs = Self::build(g, d, Realization::Group)?;
        let mut pairs = Vec::with_capacity(fs.objects.len());
        for r in &fs.objects {
            let bp = bd
                .pair(r)
                .ok_or_else(|| Error::internal("Brauer pair table misses a subgroup of D"))?;
            pairs.push(bp.block_in_group.clone());
        }
        fs.realization = Realization::Block { kg: bd.kg.clone(), pairs };
        Ok(fs)
    }

    pub fn defect_group(&self) -> &PermGroup {
        &self.d
    }

    pub fn ambient(&self) -> &PermGroup {
        &self.ambient
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn is_block_fusion(&self) -> bool {
        matches!(self.realization, Realization::Block { .. })
    }

    pub fn objects(&self) -> &[PermGroup] {
        &self.objects
    }

    pub fn object(&self, i: usize) -> &PermGroup {
        &self.objects[i]
    }

    /// Sorted indices (into `D`'s elements) of an object.
    pub fn object_set(&self, i: usize) -> &[usize] {
        &self.sets[i]
    }

    pub fn object_index(&self, r: &PermGroup) -> Option<usize> {
        let mut s: Vec<usize> = r.elements().iter().map(|x| self.d.index_of(x)).collect::<Option<_>>()?;
        s.sort_unstable();
        self.lookup.get(&s).copied()
    }

    pub fn object_index_of_set(&self, set: &[usize]) -> Option<usize> {
        let mut s = set.to_vec();
        s.sort_unstable();
        s.dedup();
        self.lookup.get(&s).copied()
    }

    /// Index of the whole of `D`.
    pub fn top(&self) -> usize {
        self.objects.len() - 1
    }

    pub fn d_mul(&self, a: usize, b: usize) -> usize {
        self.d.table().mul(a, b)
    }

    pub fn d_inv(&self, a: usize) -> usize {
        self.d.table().inv(a)
    }

    /// The subgroup of `D` generated by the given elements, as an object.
    pub fn generated(&self, elems: &[usize]) -> usize {
        let set = self.d.table().closure(elems);
        let v: Vec<usize> = set.iter().collect();
        self.lookup[&v]
    }

    fn compute_hom(&self, i: usize, j: usize) -> Vec<Morphism> {
        let t = self.ambient.table();
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for x in 0..self.ambient.order() {
            let imgs: Option<Vec<usize>> = self.sets[i]
                .iter()
                .map(|&u| self.g_to_d[t.conj(x, self.d_in_g[u])])
                .collect();
            let Some(imgs) = imgs else { continue };
            if !imgs.iter().all(|v| self.sets[j].binary_search(v).is_ok()) || seen.contains(&imgs) {
                continue;
            }
            if let Realization::Block { kg, pairs } = &self.realization {
                let k = self.object_index_of_set(&imgs).expect("image is a subgroup of D");
                let xp = self.ambient.element(x);
                if kg.conjugate(xp, &pairs[i]) != pairs[k] {
                    continue;
                }
            }
            seen.insert(imgs.clone());
            out.push(Morphism {
                source: i,
                target: j,
                images: imgs,
            });
        }
        out.sort();
        out
    }

    /// `Hom_F(R_i, R_j)`, sorted.
    pub fn hom(&self, i: usize, j: usize) -> &[Morphism] {
        self.cache[i * self.objects.len() + j].get_or_init(|| self.compute_hom(i, j))
    }

    pub fn hom_groups(&self, r1: &PermGroup, r2: &PermGroup) -> Result<&[Morphism]> {
        let i = self.object_index(r1).ok_or_else(|| Error::arg("R1 is not a subgroup of D"))?;
        let j = self.object_index(r2).ok_or_else(|| Error::arg("R2 is not a subgroup of D"))?;
        Ok(self.hom(i, j))
    }

    pub fn contains(&self, phi: &Morphism) -> bool {
        self.hom(phi.source, phi.target).binary_search(phi).is_ok()
    }

    pub fn apply(&self, phi: &Morphism, u: usize) -> usize {
        let k = self.sets[phi.source].binary_search(&u).expect("element of the source");
        phi.images[k]
    }

    pub fn identity(&self, i: usize) -> Morphism {
        self.inclusion(i, i).expect("R <= R")
    }

    pub fn inclusion(&self, i: usize, j: usize) -> Option<Morphism> {
        let ok = self.sets[i].iter().all(|u| self.sets[j].binary_search(u).is_ok());
        ok.then(|| Morphism {
            source: i,
            target: j,
            images: self.sets[i].clone(),
        })
    }

    pub fn is_inclusion(&self, phi: &Morphism) -> bool {
        phi.images == self.sets[phi.source]
    }

    /// Object index of `phi(R1)`.
    pub fn image(&self, phi: &Morphism) -> usize {
        self.object_index_of_set(&phi.images).expect("image is a subgroup")
    }

    /// `R1 -> phi(R1)`.
    pub fn onto_image(&self, phi: &Morphism) -> Morphism {
        Morphism {
            target: self.image(phi),
            ..phi.clone()
        }
    }

    /// The inverse of `R1 -> phi(R1)`.
    pub fn inverse(&self, phi: &Morphism) -> Morphism {
        let img = self.image(phi);
        let mut pairs: Vec<(usize, usize)> = phi.images.iter().copied().zip(self.sets[phi.source].iter().copied()).collect();
        pairs.sort_unstable();
        Morphism {
            source: img,
            target: phi.source,
            images: pairs.into_iter().map(|(_, u)| u).collect(),
        }
    }

    /// `phi . psi`; needs `psi.target == phi.source`.
    pub fn compose(&self, phi: &Morphism, psi: &Morphism) -> Result<Morphism> {
        if psi.target != phi.source {
            return Err(Error::arg("morphisms are not composable"));
        }
        Ok(Morphism {
            source: psi.source,
            target: phi.target,
            images: psi.images.iter().map(|&v| self.apply(phi, v)).collect(),
        })
    }

    /// Restriction to a subobject of the source.
    pub fn restrict(&self, phi: &Morphism, k: usize) -> Result<Morphism> {
        if !self.sets[k].iter().all(|u| self.sets[phi.source].binary_search(u).is_ok()) {
            return Err(Error::arg("restriction to a non-subgroup of the source"));
        }
        Ok(Morphism {
            source: k,
            target: phi.target,
            images: self.sets[k].iter().map(|&u| self.apply(phi, u)).collect(),
        })
    }

    /// `c_x: R_i -> R_j` for `x` in `D`, if `x R_i x^-1 <= R_j`.
    pub fn d_conjugation(&self, x: usize, i: usize, j: usize) -> Option<Morphism> {
        let t = self.d.table();
        let images: Vec<usize> = self.sets[i].iter().map(|&u| t.conj(x, u)).collect();
        images.iter().all(|v| self.sets[j].binary_search(v).is_ok()).then_some(Morphism {
            source: i,
            target: j,
            images,
        })
    }

    /// `Aut_F(R)` acting on the positions of `R`'s sorted elements.
    pub fn aut_group(&self, i: usize) -> PermGroup {
        let n = self.sets[i].len();
        let perms: Vec<Perm> = self
            .hom(i, i)
            .iter()
            .map(|phi| {
                let imgs = phi
                    .images
                    .iter()
                    .map(|v| self.sets[i].binary_search(v).expect("automorphism") as u16)
                    .collect();
                Perm::from_images(imgs).expect("bijection")
            })
            .collect();
        PermGroup::from_elements(n, perms).expect("Aut_F(R) is closed")
    }

    fn perm_to_morphism(&self, i: usize, sigma: &Perm) -> Morphism {
        Morphism {
            source: i,
            target: i,
            images: (0..self.sets[i].len()).map(|k| self.sets[i][sigma.apply(k)]).collect(),
        }
    }

    fn residue_subgroup(&self, hyper: bool) -> PermGroup {
        let mut gens = BTreeSet::new();
        for i in 0..self.objects.len() {
            let auts: Vec<Morphism> = if hyper {
                let a = self.aut_group(i).o_p_residual(self.p);
                a.elements().iter().map(|s| self.perm_to_morphism(i, s)).collect()
            } else {
                self.hom(i, i).to_vec()
            };
            for phi in &auts {
                for (&u, &v) in self.sets[i].iter().zip(&phi.images) {
                    gens.insert(self.d_mul(u, self.d_inv(v)));
                }
            }
        }
        let gens: Vec<usize> = gens.into_iter().collect();
        self.objects[self.generated(&gens)].clone()
    }

    /// `foc(F)`.
    pub fn focal(&self) -> PermGroup {
        self.residue_subgroup(false)
    }

    /// `hyp(F)`, with automorphisms ranging over `O^p(Aut_F(R))`.
    pub fn hyperfocal(&self) -> PermGroup {
        self.residue_subgroup(true)
    }

    /// The same hom-sets as another fusion system on the same `D`.
    pub fn same_morphisms(&self, other: &FusionSystem) -> bool {
        self.d == other.d
            && (0..self.objects.len())
                .all(|i| (0..self.objects.len()).all(|j| self.hom(i, j) == other.hom(i, j)))
    }

    /// Morphisms rendered as `(u, phi(u))` pairs over the source generators.
    pub fn describe(&self, phi: &Morphism) -> String {
        let parts: Vec<String> = self.objects[phi.source]
            .generators()
            .iter()
            .map(|g| {
                let u = self.d.index_of(g).expect("generator");
                format!("{} -> {}", g, self.d.element(self.apply(phi, u)))
            })
            .collect();
        format!(
            "|R1| = {} -> |R2| = {}: {}",
            self.objects[phi.source].order(),
            self.objects[phi.target].order(),
            if parts.is_empty() { "trivial".to_string() } else { parts.join(", ") }
        )
    }

    pub fn summary(&self) -> FusionSummary {
        let n = self.objects.len();
        let mut hom_sizes = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let c = self.hom(i, j).len();
                if c > 0 {
                    hom_sizes.push([i, j, c]);
                }
            }
        }
        let foc = self.focal();
        let hyp = self.hyperfocal();
        FusionSummary {
            prime: self.p,
            defect_order: self.d.order(),
            realization: if self.is_block_fusion() { "block" } else { "group" }.to_string(),
            objects: self
                .objects
                .iter()
                .map(|r| ObjectSummary {
                    order: r.order(),
                    generators: r.generators().iter().map(|g| g.to_string()).collect(),
                })
                .collect(),
            hom_sizes,
            aut_orders: (0..n).map(|i| self.hom(i, i).len()).collect(),
            focal_order: foc.order(),
            focal_generators: foc.generators().iter().map(|g| g.to_string()).collect(),
            hyperfocal_order: hyp.order(),
            hyperfocal_generators: hyp.generators().iter().map(|g| g.to_string()).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ObjectSummary {
    pub order: usize,
    pub generators: Vec<String>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct FusionSummary {
    pub prime: u64,
    pub defect_order: usize,
    pub realization: String,
    pub objects: Vec<ObjectSummary>,
    /// `[i, j, |Hom(R_i, R_j)|]` for nonempty hom-sets.
    pub hom_sizes: Vec<[usize; 3]>,
    pub aut_orders: Vec<usize>,
    pub focal_order: usize,
    pub focal_generators: Vec<String>,
    pub hyperfocal_order: usize,
    pub hyperfocal_generators: Vec<String>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::GroupAlgebra;

    fn g(n: usize, gens: &[&str]) -> PermGroup {
        let gens: Vec<Perm> = gens.iter().map(|s| Perm::parse_cycles(s, n).unwrap()).collect();
        PermGroup::generate(n, &gens).unwrap()
    }

    fn s4() -> PermGroup {
        g(4, &["(1 2 3 4)", "(1 2)"])
    }

    fn a4() -> PermGroup {
        g(4, &["(1 2 3)", "(1 2)(3 4)"])
    }

    fn intersect(a: &PermGroup, b: &PermGroup) -> PermGroup {
        let elems: Vec<Perm> = a.elements().iter().filter(|x| b.contains(x)).cloned().collect();
        PermGroup::from_elements(a.degree(), elems).unwrap()
    }

    #[test]
    fn inner_fusion_has_trivial_hyperfocal() {
        let d8 = g(4, &["(1 2 3 4)", "(1 3)"]);
        let f = FusionSystem::inner(&d8).unwrap();
        assert!(f.hyperfocal().is_trivial());
        assert_eq!(f.focal(), d8.commutator_subgroup());
        for i in 0..f.objects().len() {
            assert!(f.hom(i, i).contains(&f.identity(i)));
        }
    }

    #[test]
    fn s4_focal_and_hyperfocal() {
        let s4 = s4();
        let d = s4.sylow(2);
        let f = FusionSystem::group_fusion(&s4, &d).unwrap();
        let foc = f.focal();
        assert_eq!(foc.order(), 4);
        assert_eq!(foc, f.hyperfocal());
        assert_eq!(foc, intersect(&d, &s4.commutator_subgroup()));
        let v4 = intersect(&d, &a4());
        let i = f.object_index(&v4).unwrap();
        assert_eq!(f.aut_group(i).order(), 6);
        assert!(f.aut_group(i).elements().iter().any(|x| x.order() == 3));
    }

    #[test]
    fn a4_automorphisms_of_v4() {
        let a4 = a4();
        let d = a4.sylow(2);
        let f = FusionSystem::group_fusion(&a4, &d).unwrap();
        assert_eq!(f.aut_group(f.top()).order(), 3);
        assert_eq!(f.hyperfocal(), d);
    }

    #[test]
    fn principal_block_fusion_matches_group_fusion() {
        for (grp, p) in [(s4(), 2), (a4(), 2), (g(3, &["(1 2 3)", "(1 2)"]), 2), (s4(), 3)] {
            let kg = GroupAlgebra::over_splitting_field(&grp, p, None).unwrap();
            let b = BlockData::nth(&kg, 0, 11).unwrap();
            let fb = FusionSystem::block_fusion(&b).unwrap();
            let fg = FusionSystem::group_fusion(&grp, &b.defect_group).unwrap();
            assert!(fb.same_morphisms(&fg), "order {} p {p}", grp.order());
        }
    }

    #[test]
    fn nilpotent_block_of_sl23_has_inner_fusion() {
        let sl23 = g(8, &["(1 4 7)(2 8 5)", "(1 6 2 3)(4 7 8 5)"]);
        let kg = GroupAlgebra::over_splitting_field(&sl23, 3, None).unwrap();
        let blocks = BlockData::all(&kg, 4).unwrap();
        let faithful = blocks.iter().find(|b| b.block_dim() == 12).unwrap();
        let f = FusionSystem::block_fusion(faithful).unwrap();
        assert!(f.same_morphisms(&FusionSystem::inner(&faithful.defect_group).unwrap()));
        assert!(f.hyperfocal().is_trivial());
        let principal = FusionSystem::block_fusion(&blocks[0]).unwrap();
        assert!(principal.hyperfocal().is_trivial());
    }

    #[test]
    fn trivial_dtilde_keeps_only_inclusions() {
        let s4 = s4();
        let f = FusionSystem::group_fusion(&s4, &s4.sylow(2)).unwrap();
        let one = PermGroup::trivial(4);
        let view = SubcategoryView::plain(&f, &one).unwrap();
        for i in 0..f.objects().len() {
            for j in 0..f.objects().len() {
                assert!(view.hom(i, j).unwrap().iter().all(|m| f.is_inclusion(m)));
            }
        }
        let whole = SubcategoryView::plain(&f, f.defect_group()).unwrap();
        assert_eq!(whole.hom(f.top(), f.top()).unwrap(), f.hom(f.top(), f.top()).to_vec());
    }

    #[test]
    fn propositions_on_s4_and_a4() {
        let s4 = s4();
        let d = s4.sylow(2);
        let f = FusionSystem::group_fusion(&s4, &d).unwrap();
        for dt in [PermGroup::trivial(4), f.focal(), d.clone()] {
            for c in proposition_suite(&f, &dt).unwrap() {
                assert!(c.holds, "{c:?}");
            }
        }
        let a4 = a4();
        let f = FusionSystem::group_fusion(&a4, &a4.sylow(2)).unwrap();
        for dt in [PermGroup::trivial(4), a4.sylow(2)] {
            assert!(proposition_suite(&f, &dt).unwrap().iter().all(|c| c.holds));
        }
    }

    #[test]
    fn thm14_hypothesis_cases() {
        let d8 = g(4, &["(1 2 3 4)", "(1 3)"]);
        let inner = FusionSystem::inner(&d8).unwrap();
        assert!(thm14_hypothesis(&inner, &PermGroup::trivial(4)).unwrap().holds);
        let s4 = s4();
        let f = FusionSystem::group_fusion(&s4, &s4.sylow(2)).unwrap();
        let v = thm14_hypothesis(&f, f.defect_group()).unwrap();
        assert!(!v.holds);
        assert!(v.counterexample.is_some());
        assert!(thm14_hypothesis(&f, &PermGroup::trivial(4)).is_err());
        let a4 = a4();
        let f = FusionSystem::group_fusion(&a4, &a4.sylow(2)).unwrap();
        assert!(thm14_hypothesis(&f, f.defect_group()).unwrap().holds);
    }

    #[test]
    fn normalizer_view_rejects_outside_objects() {
        let s4 = s4();
        let d = s4.sylow(2);
        let f = FusionSystem::group_fusion(&s4, &d).unwrap();
        let r = f.objects().iter().find(|r| r.order() == 2 && !r.is_normal_in(&d)).unwrap().clone();
        let view = SubcategoryView::normalizer(&f, &d, &r).unwrap();
        let outside = (0..f.objects().len()).find(|&i| !view.is_object(i)).unwrap();
        assert!(view.contains(&f.identity(outside)).is_err());
    }
}
