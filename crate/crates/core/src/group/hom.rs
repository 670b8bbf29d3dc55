use std::collections::VecDeque;

use super::{Perm, PermGroup};
use crate::error::{Error, Result};

/// A homomorphism between enumerated groups, stored as a full element map.
#[derive(Clone, Debug)]
pub struct GroupHom {
    domain: PermGroup,
    codomain: PermGroup,
    /// `images[i]` is the codomain index of the image of domain element `i`.
    images: Vec<usize>,
    injective: bool,
}

impl PartialEq for GroupHom {
    fn eq(&self, other: &Self) -> bool {
        self.domain == other.domain && self.codomain == other.codomain && self.images == other.images
    }
}

impl Eq for GroupHom {}

impl GroupHom {
    /// Extends generator images to the whole domain, rejecting maps that do
    /// not preserve relations.
    pub fn from_generator_images(
        domain: &PermGroup,
        codomain: &PermGroup,
        generators: &[Perm],
        images: &[Perm],
    ) -> Result<Self> {
        if generators.len() != images.len() {
            return Err(Error::arg("generator and image lists differ in length"));
        }
        for (g, h) in generators.iter().zip(images) {
            if !domain.contains(g) {
                return Err(Error::arg(format!("{g} is not in the domain")));
            }
            if !codomain.contains(h) {
                return Err(Error::arg(format!("{h} is not in the codomain")));
            }
        }
        let n = domain.order();
        let mut map: Vec<Option<Perm>> = vec![None; n];
        map[0] = Some(codomain.identity());
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            let x = domain.element(i).clone();
            let fx = map[i].clone().expect("visited");
            for (g, h) in generators.iter().zip(images) {
                let y = x.compose(g);
                let fy = fx.compose(h);
                let j = domain.index_of(&y).ok_or_else(|| Error::arg("generators leave the domain"))?;
                match &map[j] {
                    Some(prev) if *prev != fy => {
                        return Err(Error::arg("generator images do not define a homomorphism"));
                    }
                    Some(_) => {}
                    None => {
                        map[j] = Some(fy);
                        queue.push_back(j);
                    }
                }
            }
        }
        let images: Vec<Perm> = map
            .into_iter()
            .map(|m| m.ok_or_else(|| Error::arg("generators do not generate the domain")))
            .collect::<Result<_>>()?;
        Self::from_images(domain, codomain, &images)
    }

    /// Builds from the image of every domain element (in domain order),
    /// checking the homomorphism property on all pairs.
    pub fn from_images(domain: &PermGroup, codomain: &PermGroup, images: &[Perm]) -> Result<Self> {
        if images.len() != domain.order() {
            return Err(Error::arg("image list length differs from domain order"));
        }
        let idx: Vec<usize> = images
            .iter()
            .map(|h| codomain.index_of(h).ok_or_else(|| Error::arg(format!("{h} not in codomain"))))
            .collect::<Result<_>>()?;
        let dt = domain.table();
        let ct = codomain.table();
        for a in 0..domain.order() {
            for b in 0..domain.order() {
                if idx[dt.mul(a, b)] != ct.mul(idx[a], idx[b]) {
                    return Err(Error::arg("map does not preserve multiplication"));
                }
            }
        }
        let mut hit = vec![false; codomain.order()];
        let mut injective = true;
        for &j in &idx {
            if hit[j] {
                injective = false;
            }
            hit[j] = true;
        }
        Ok(GroupHom {
            domain: domain.clone(),
            codomain: codomain.clone(),
            images: idx,
            injective,
        })
    }

    pub fn identity(g: &PermGroup) -> Self {
        GroupHom {
            domain: g.clone(),
            codomain: g.clone(),
            images: (0..g.order()).collect(),
            injective: true,
        }
    }

    /// The conjugation map `c_x : Q -> xQx^-1`, with codomain `target`.
    pub fn conjugation(x: &Perm, domain: &PermGroup, target: &PermGroup) -> Result<Self> {
        let images: Vec<Perm> = domain.elements().iter().map(|u| x.conjugate(u)).collect();
        Self::from_images(domain, target, &images)
    }

    pub fn domain(&self) -> &PermGroup {
        &self.domain
    }

    pub fn codomain(&self) -> &PermGroup {
        &self.codomain
    }

    pub fn is_injective(&self) -> bool {
        self.injective
    }

    pub fn apply(&self, x: &Perm) -> Option<&Perm> {
        self.domain
            .index_of(x)
            .map(|i| self.codomain.element(self.images[i]))
    }

    pub fn image_indices(&self) -> &[usize] {
        &self.images
    }

    /// `(x, f(x))` pairs in domain order.
    pub fn pairs(&self) -> impl Iterator<Item = (&Perm, &Perm)> + '_ {
        self.domain
            .elements()
            .iter()
            .zip(&self.images)
            .map(|(x, &j)| (x, self.codomain.element(j)))
    }

    pub fn image(&self) -> PermGroup {
        let elems = self.images.iter().map(|&j| self.codomain.element(j).clone()).collect();
        PermGroup::from_closed_set(self.codomain.degree(), elems)
    }

    pub fn kernel(&self) -> PermGroup {
        let elems = self
            .images
            .iter()
            .zip(self.domain.elements())
            .filter(|(&j, _)| j == 0)
            .map(|(_, x)| x.clone())
            .collect();
        PermGroup::from_closed_set(self.domain.degree(), elems)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GroupHom) -> Result<GroupHom> {
        let images: Vec<Perm> = other
            .pairs()
            .map(|(_, y)| {
                self.apply(y)
                    .cloned()
                    .ok_or_else(|| Error::arg("image of the inner map leaves the outer domain"))
            })
            .collect::<Result<_>>()?;
        GroupHom::from_images(&other.domain, &self.codomain, &images)
    }

    /// Inverse of an injective map, as a map from its image.
    pub fn inverse(&self) -> Result<GroupHom> {
        if !self.injective {
            return Err(Error::arg("map is not injective"));
        }
        let img = self.image();
        let mut images = vec![Perm::identity(self.domain.degree()); img.order()];
        for (x, y) in self.pairs() {
            images[img.index_of(y).expect("in image")] = x.clone();
        }
        GroupHom::from_images(&img, &self.domain, &images)
    }

    /// `Δ(φ) = {(φ(u), u) : u ∈ dom φ}` inside `G x G`. Requires `φ` injective
    /// and both groups on the same points.
    pub fn delta(&self) -> Result<PermGroup> {
        if !self.injective {
            return Err(Error::arg("Δ(φ) requires an injective φ"));
        }
        if self.domain.degree() != self.codomain.degree() {
            return Err(Error::arg("domain and codomain must live in a common group"));
        }
        let elems = self.pairs().map(|(u, v)| Perm::direct_pair(v, u)).collect();
        Ok(PermGroup::from_closed_set(2 * self.domain.degree(), elems))
    }
}

/// `G/N`, realized as the permutation action of `G` on the cosets of `N`.
#[derive(Clone, Debug)]
pub struct QuotientGroup {
    parent: PermGroup,
    normal: PermGroup,
    /// Cosets as sorted lists of parent element indices, ordered by smallest member.
    cosets: Vec<Vec<usize>>,
    coset_of: Vec<usize>,
    group: PermGroup,
    projection: GroupHom,
}

impl QuotientGroup {
    pub(crate) fn new(parent: &PermGroup, normal: &PermGroup) -> Result<Self> {
        if !normal.is_normal_in(parent) {
            return Err(Error::arg("N is not a normal subgroup"));
        }
        let t = parent.table();
        let n = parent.order();
        let nset: Vec<usize> = normal.elements().iter().map(|e| parent.index_of(e).unwrap()).collect();
        let mut coset_of = vec![usize::MAX; n];
        let mut cosets: Vec<Vec<usize>> = Vec::new();
        for g in 0..n {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let mut c: Vec<usize> = nset.iter().map(|&m| t.mul(g, m)).collect();
            c.sort_unstable();
            for &x in &c {
                coset_of[x] = cosets.len();
            }
            cosets.push(c);
        }
        let k = cosets.len();
        let action = |g: usize| -> Perm {
            let images: Vec<u16> = cosets.iter().map(|c| coset_of[t.mul(g, c[0])] as u16).collect();
            Perm::from_images(images).expect("left multiplication permutes cosets")
        };
        let gens: Vec<Perm> = parent
            .generators()
            .iter()
            .map(|x| action(parent.index_of(x).unwrap()))
            .collect();
        let group = PermGroup::generate(k.max(1), &gens)?;
        let images: Vec<Perm> = (0..n).map(action).collect();
        let projection = GroupHom::from_images(parent, &group, &images)?;
        Ok(QuotientGroup {
            parent: parent.clone(),
            normal: normal.clone(),
            cosets,
            coset_of,
            group,
            projection,
        })
    }

    pub fn parent(&self) -> &PermGroup {
        &self.parent
    }

    pub fn normal(&self) -> &PermGroup {
        &self.normal
    }

    pub fn order(&self) -> usize {
        self.cosets.len()
    }

    pub fn cosets(&self) -> &[Vec<usize>] {
        &self.cosets
    }

    /// Index of the coset containing parent element `g`.
    pub fn coset_of(&self, g: &Perm) -> Option<usize> {
        self.parent.index_of(g).map(|i| self.coset_of[i])
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn projection(&self) -> &GroupHom {
        &self.projection
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(degree: usize, gens: &[&str]) -> PermGroup {
        let gens: Vec<Perm> = gens.iter().map(|s| Perm::parse_cycles(s, degree).unwrap()).collect();
        PermGroup::generate(degree, &gens).unwrap()
    }

    #[test]
    fn quotient_examples() {
        let d8 = g(4, &["(1 2 3 4)", "(1 3)"]);
        let q = d8.quotient(&d8.center()).unwrap();
        assert_eq!(q.order(), 4);
        assert_eq!(q.group().order(), 4);
        assert_eq!(q.projection().kernel(), d8.center());
        assert_eq!(d8.quotient(&d8).unwrap().order(), 1);
        let q1 = d8.quotient(&PermGroup::trivial(4)).unwrap();
        assert_eq!(q1.order(), 8);
        assert!(q1.projection().is_injective());
    }

    #[test]
    fn quotient_rejects_non_normal() {
        let s3 = g(3, &["(1 2 3)", "(1 2)"]);
        let c2 = g(3, &["(1 2)"]);
        assert!(s3.quotient(&c2).is_err());
    }

    #[test]
    fn hom_from_generators_rejects_non_hom() {
        let c4 = g(4, &["(1 2 3 4)"]);
        let x = Perm::parse_cycles("(1 2 3 4)", 4).unwrap();
        let y = Perm::parse_cycles("(1 3)(2 4)", 4).unwrap();
        let sq = GroupHom::from_generator_images(&c4, &c4, std::slice::from_ref(&x), &[y]).unwrap();
        assert!(!sq.is_injective());
        assert_eq!(sq.kernel().order(), 2);
        let s3 = g(3, &["(1 2 3)", "(1 2)"]);
        let r = Perm::parse_cycles("(1 2 3)", 3).unwrap();
        let t = Perm::parse_cycles("(1 2)", 3).unwrap();
        let bad = GroupHom::from_generator_images(&s3, &s3, &[r.clone(), t], &[r, Perm::identity(3)]);
        assert!(bad.is_err());
    }

    #[test]
    fn delta_examples() {
        let d8 = g(4, &["(1 2 3 4)", "(1 3)"]);
        let r = g(4, &["(1 3)"]);
        let id = GroupHom::identity(&r);
        let delta = id.delta().unwrap();
        assert_eq!(delta.order(), 2);
        let x = Perm::parse_cycles("(1 2 3 4)", 4).unwrap();
        let target = d8.conjugate_subgroup(&x, &r);
        let cx = GroupHom::conjugation(&x, &r, &target).unwrap();
        let dcx = cx.delta().unwrap();
        for u in r.elements() {
            assert!(dcx.contains(&Perm::direct_pair(&x.conjugate(u), u)));
        }
        let c4 = g(4, &["(1 2 3 4)"]);
        let sq = GroupHom::from_generator_images(&c4, &c4, std::slice::from_ref(&x), &[x.pow(2)]).unwrap();
        assert!(sq.delta().is_err());
    }
}
