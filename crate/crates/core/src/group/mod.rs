//! Finite permutation groups with eagerly enumerated elements.
//!
//! Every subgroup is itself a [`PermGroup`] on the same points. All subgroup
//! operations are exhaustive scans over the element list, which is capped
//! (default [`DEFAULT_ORDER_CAP`]).

mod file;
mod hom;
mod perm;
mod table;

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::{Arc, OnceLock};

pub use file::{parse_group_file, read_group_file, write_group_file};
pub use hom::{GroupHom, QuotientGroup};
pub use perm::Perm;
pub(crate) use perm::gcd;
pub use table::{ElementSet, GroupTable};

use crate::error::{Error, Result};

pub const DEFAULT_ORDER_CAP: usize = 2000;

#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: Arc<Vec<Perm>>,
    index: Arc<HashMap<Perm, usize>>,
    table: OnceLock<Arc<GroupTable>>,
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for PermGroup {}

impl PermGroup {
    /// Enumerates the group generated by `generators` on `degree` points.
    pub fn generate(degree: usize, generators: &[Perm]) -> Result<Self> {
        Self::generate_with_cap(degree, generators, DEFAULT_ORDER_CAP)
    }

    pub fn generate_with_cap(degree: usize, generators: &[Perm], cap: usize) -> Result<Self> {
        for g in generators {
            if g.degree() != degree {
                return Err(Error::arg(format!(
                    "generator {g} has degree {}, expected {degree}",
                    g.degree()
                )));
            }
        }
        let gens: Vec<Perm> = generators.iter().filter(|g| !g.is_identity()).cloned().collect();
        let id = Perm::identity(degree);
        let mut seen: HashSet<Perm> = HashSet::new();
        seen.insert(id.clone());
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let y = x.compose(g);
                if seen.insert(y.clone()) {
                    if seen.len() > cap {
                        return Err(Error::InstanceTooLarge(format!(
                            "group closure exceeds the order cap {cap}"
                        )));
                    }
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Perm> = seen.into_iter().collect();
        elements.sort();
        Ok(Self::from_sorted(degree, gens, elements))
    }

    /// The trivial group on `degree` points.
    pub fn trivial(degree: usize) -> Self {
        Self::from_sorted(degree, Vec::new(), vec![Perm::identity(degree)])
    }

    fn from_sorted(degree: usize, generators: Vec<Perm>, elements: Vec<Perm>) -> Self {
        let index = elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        PermGroup {
            degree,
            generators,
            elements: Arc::new(elements),
            index: Arc::new(index),
            table: OnceLock::new(),
        }
    }

    /// Builds a subgroup from a set of elements already known to be closed.
    /// A small generating set is chosen greedily in element order.
    pub(crate) fn from_closed_set(degree: usize, mut elements: Vec<Perm>) -> Self {
        elements.sort();
        elements.dedup();
        let mut gens = Vec::new();
        let mut current: HashSet<Perm> = HashSet::from([Perm::identity(degree)]);
        for e in &elements {
            if !current.contains(e) {
                gens.push(e.clone());
                current = closure_set(degree, &gens);
            }
        }
        Self::from_sorted(degree, gens, elements)
    }

    /// Builds the subgroup consisting of exactly `elements`, verifying closure.
    pub fn from_elements(degree: usize, elements: Vec<Perm>) -> Result<Self> {
        let set: HashSet<&Perm> = elements.iter().collect();
        if !set.contains(&Perm::identity(degree)) {
            return Err(Error::arg("element set lacks the identity"));
        }
        for a in &elements {
            if !set.contains(&a.inverse()) {
                return Err(Error::arg("element set is not closed under inverses"));
            }
            for b in &elements {
                if !set.contains(&a.compose(b)) {
                    return Err(Error::arg("element set is not closed under products"));
                }
            }
        }
        Ok(Self::from_closed_set(degree, elements))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    /// Elements in sorted order; index 0 is the identity.
    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn identity(&self) -> Perm {
        Perm::identity(self.degree)
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.index.contains_key(p)
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    /// The Cayley table, built on first use.
    pub fn table(&self) -> &GroupTable {
        self.table.get_or_init(|| Arc::new(GroupTable::build(self)))
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .all(|a| self.generators.iter().all(|b| a.compose(b) == b.compose(a)))
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|e| other.contains(e))
    }

    pub fn is_normal_in(&self, other: &PermGroup) -> bool {
        self.is_subgroup_of(other)
            && other
                .generators
                .iter()
                .all(|g| self.generators.iter().all(|h| self.contains(&g.conjugate(h))))
    }

    pub fn is_p_group(&self, p: u64) -> bool {
        is_power_of(self.order() as u64, p)
    }

    pub fn exponent(&self) -> u64 {
        self.elements.iter().fold(1, |acc, e| perm::lcm(acc, e.order()))
    }

    /// The subgroup generated by `gens`, which must lie in `self`.
    pub fn subgroup(&self, gens: &[Perm]) -> Result<PermGroup> {
        for g in gens {
            if !self.contains(g) {
                return Err(Error::arg(format!("{g} is not an element of the group")));
            }
        }
        PermGroup::generate(self.degree, gens)
    }

    pub(crate) fn subgroup_from_set(&self, set: &ElementSet) -> PermGroup {
        let elems = set.iter().map(|i| self.elements[i].clone()).collect();
        PermGroup::from_closed_set(self.degree, elems)
    }

    fn check_subgroup(&self, h: &PermGroup) -> Result<()> {
        if !h.is_subgroup_of(self) {
            return Err(Error::arg("argument is not a subgroup"));
        }
        Ok(())
    }

    /// Elements `g` with `g h g^-1 = h` for every `h` in `h_group`.
    pub fn centralizer(&self, h_group: &PermGroup) -> Result<PermGroup> {
        self.check_subgroup(h_group)?;
        let elems = self
            .elements
            .iter()
            .filter(|g| h_group.generators.iter().all(|h| g.compose(h) == h.compose(g)))
            .cloned()
            .collect();
        Ok(PermGroup::from_closed_set(self.degree, elems))
    }

    pub fn normalizer(&self, h_group: &PermGroup) -> Result<PermGroup> {
        self.check_subgroup(h_group)?;
        let elems = self
            .elements
            .iter()
            .filter(|g| h_group.generators.iter().all(|h| h_group.contains(&g.conjugate(h))))
            .cloned()
            .collect();
        Ok(PermGroup::from_closed_set(self.degree, elems))
    }

    pub fn center(&self) -> PermGroup {
        self.centralizer(self).expect("a group is a subgroup of itself")
    }

    /// `[G, G]`, the closure of all commutators.
    pub fn commutator_subgroup(&self) -> PermGroup {
        self.commutator_with(self)
    }

    fn commutator_with(&self, other: &PermGroup) -> PermGroup {
        let mut comms: HashSet<Perm> = HashSet::new();
        for a in self.elements.iter() {
            let ai = a.inverse();
            for b in other.elements.iter() {
                let c = ai.compose(&b.inverse()).compose(a).compose(b);
                comms.insert(c);
            }
        }
        let gens: Vec<Perm> = comms.into_iter().collect();
        let g = PermGroup::generate(self.degree, &gens).expect("subgroup of a capped group");
        PermGroup::from_closed_set(self.degree, g.elements.to_vec())
    }

    /// `O^p(G)`: the subgroup generated by all elements of order prime to `p`.
    pub fn o_p_residual(&self, p: u64) -> PermGroup {
        let gens: Vec<Perm> = self
            .elements
            .iter()
            .filter(|e| e.order() % p != 0)
            .cloned()
            .collect();
        let g = PermGroup::generate(self.degree, &gens).expect("subgroup of a capped group");
        PermGroup::from_closed_set(self.degree, g.elements.to_vec())
    }

    /// A Sylow `p`-subgroup, grown greedily inside normalizers.
    ///
    /// A non-Sylow p-subgroup `H` always has some `g` in `N_G(H) \ H` with
    /// `g^p` in `H`, so the greedy extension reaches full p-part order.
    pub fn sylow(&self, p: u64) -> PermGroup {
        let t = self.table();
        let mut h = ElementSet::singleton(self.order(), 0);
        loop {
            let ext = (0..self.order()).find(|&g| {
                !h.contains(g) && h.contains(t.pow(g, p)) && t.normalizes(g, &h)
            });
            match ext {
                Some(g) => h = t.extend_normalizing(&h, g, p),
                None => break,
            }
        }
        self.subgroup_from_set(&h)
    }

    /// Every p-subgroup (including the trivial one), ordered by increasing
    /// order and then by element set.
    pub fn p_subgroups(&self, p: u64) -> Vec<PermGroup> {
        self.p_subgroup_sets(p)
            .iter()
            .map(|s| self.subgroup_from_set(s))
            .collect()
    }

    pub(crate) fn p_subgroup_sets(&self, p: u64) -> Vec<ElementSet> {
        let t = self.table();
        let start = ElementSet::singleton(self.order(), 0);
        let mut seen: HashSet<ElementSet> = HashSet::from([start.clone()]);
        let mut frontier = vec![start];
        while let Some(h) = frontier.pop() {
            for g in 0..self.order() {
                if h.contains(g) || !h.contains(t.pow(g, p)) || !t.normalizes(g, &h) {
                    continue;
                }
                let k = t.extend_normalizing(&h, g, p);
                if seen.insert(k.clone()) {
                    frontier.push(k);
                }
            }
        }
        let mut out: Vec<ElementSet> = seen.into_iter().collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    /// All subgroups, by repeated single-element extension. Meant for small
    /// groups (p-groups of desk-scale order, fiber products of those).
    pub fn all_subgroups(&self) -> Vec<PermGroup> {
        self.subgroup_sets_where(|_| true)
            .iter()
            .map(|s| self.subgroup_from_set(s))
            .collect()
    }

    /// Subgroups satisfying a property inherited by subgroups.
    pub(crate) fn subgroup_sets_where(&self, keep: impl Fn(&ElementSet) -> bool) -> Vec<ElementSet> {
        let t = self.table();
        let start = ElementSet::singleton(self.order(), 0);
        let mut seen: HashSet<ElementSet> = HashSet::from([start.clone()]);
        let mut frontier = vec![start];
        while let Some(h) = frontier.pop() {
            for g in 0..self.order() {
                if h.contains(g) {
                    continue;
                }
                let k = t.join_element(&h, g);
                if !seen.contains(&k) && keep(&k) {
                    seen.insert(k.clone());
                    frontier.push(k);
                }
            }
        }
        let mut out: Vec<ElementSet> = seen.into_iter().collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let t = self.table();
        let n = self.order();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let mut cls: Vec<usize> = (0..n).map(|g| t.conj(g, x)).collect();
            cls.sort_unstable();
            cls.dedup();
            for &y in &cls {
                class_of[y] = classes.len();
            }
            classes.push(cls);
        }
        classes
    }

    /// `x H x^-1` for `x` in this group.
    pub fn conjugate_subgroup(&self, x: &Perm, h_group: &PermGroup) -> PermGroup {
        let elems = h_group.elements.iter().map(|h| x.conjugate(h)).collect();
        PermGroup::from_closed_set(self.degree, elems)
    }

    /// Whether `a` and `b` are conjugate in this group; returns a conjugating
    /// element `x` with `x a x^-1 = b`.
    pub fn conjugating_element(&self, a: &PermGroup, b: &PermGroup) -> Option<Perm> {
        if a.order() != b.order() {
            return None;
        }
        self.elements
            .iter()
            .find(|x| a.generators.iter().all(|h| b.contains(&x.conjugate(h))))
            .cloned()
    }

    /// Left-coset representatives of `h_group`, the smallest element of each coset.
    pub fn left_transversal(&self, h_group: &PermGroup) -> Result<Vec<Perm>> {
        self.check_subgroup(h_group)?;
        let mut covered: HashSet<Perm> = HashSet::new();
        let mut reps = Vec::new();
        for g in self.elements.iter() {
            if covered.contains(g) {
                continue;
            }
            reps.push(g.clone());
            for h in h_group.elements.iter() {
                covered.insert(g.compose(h));
            }
        }
        Ok(reps)
    }

    pub fn quotient(&self, normal: &PermGroup) -> Result<QuotientGroup> {
        QuotientGroup::new(self, normal)
    }

    /// `G x H` realized on the disjoint union of the point sets.
    pub fn direct_product(&self, other: &PermGroup) -> PermGroup {
        let deg = self.degree + other.degree;
        let id_l = self.identity();
        let id_r = other.identity();
        let mut gens: Vec<Perm> = self.generators.iter().map(|g| Perm::direct_pair(g, &id_r)).collect();
        gens.extend(other.generators.iter().map(|g| Perm::direct_pair(&id_l, g)));
        let mut elems = Vec::with_capacity(self.order() * other.order());
        for a in self.elements.iter() {
            for b in other.elements.iter() {
                elems.push(Perm::direct_pair(a, b));
            }
        }
        elems.sort();
        PermGroup::from_sorted(deg, gens, elems)
    }

    /// `G x^{G/N} G = {(u, v) : uN = vN}` as a subgroup of `G x G`.
    pub fn bar_fiber_subgroup(&self, normal: &PermGroup) -> Result<PermGroup> {
        if !normal.is_normal_in(self) {
            return Err(Error::arg("N is not a normal subgroup"));
        }
        let mut elems = Vec::with_capacity(self.order() * normal.order());
        for v in self.elements.iter() {
            for n in normal.elements.iter() {
                elems.push(Perm::direct_pair(&n.compose(v), v));
            }
        }
        Ok(PermGroup::from_closed_set(2 * self.degree, elems))
    }

    /// The diagonal `{(g, g)}` in `G x G`.
    pub fn diagonal(&self) -> PermGroup {
        let elems = self.elements.iter().map(|g| Perm::direct_pair(g, g)).collect();
        PermGroup::from_closed_set(2 * self.degree, elems)
    }

    /// Left and right components of the elements of a subgroup of `G x G`.
    pub fn project_pairs(&self, pairs: &PermGroup) -> (PermGroup, PermGroup) {
        let (mut l, mut r) = (Vec::new(), Vec::new());
        for e in pairs.elements() {
            let (a, b) = e.split_pair(self.degree);
            l.push(a);
            r.push(b);
        }
        (
            PermGroup::from_closed_set(self.degree, l),
            PermGroup::from_closed_set(self.degree, r),
        )
    }
}

pub(crate) fn closure_set(degree: usize, gens: &[Perm]) -> HashSet<Perm> {
    let id = Perm::identity(degree);
    let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.compose(g);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

pub fn is_power_of(mut n: u64, p: u64) -> bool {
    if n == 0 {
        return false;
    }
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// The largest power of `p` dividing `n`.
pub fn p_part(mut n: u64, p: u64) -> u64 {
    let mut out = 1;
    while n.is_multiple_of(p) {
        n /= p;
        out *= p;
    }
    out
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(degree: usize, gens: &[&str]) -> PermGroup {
        let gens: Vec<Perm> = gens.iter().map(|s| Perm::parse_cycles(s, degree).unwrap()).collect();
        PermGroup::generate(degree, &gens).unwrap()
    }

    fn s4() -> PermGroup {
        g(4, &["(1 2 3 4)", "(1 2)"])
    }

    /// Brute-force oracle: largest p-subgroup order among all subgroups.
    fn max_p_subgroup_order_brute(grp: &PermGroup, p: u64) -> usize {
        grp.all_subgroups()
            .iter()
            .filter(|h| h.is_p_group(p))
            .map(|h| h.order())
            .max()
            .unwrap()
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(g(3, &["(1 2 3)", "(1 2)"]).order(), 6);
        assert_eq!(PermGroup::generate(1, &[]).unwrap().order(), 1);
        assert_eq!(g(4, &["(1 2 3 4)", "(1 3)"]).order(), 8);
    }

    #[test]
    fn cap_is_enforced() {
        let gens = [
            Perm::parse_cycles("(1 2 3 4 5 6 7)", 7).unwrap(),
            Perm::parse_cycles("(1 2)", 7).unwrap(),
        ];
        assert!(matches!(
            PermGroup::generate(7, &gens),
            Err(Error::InstanceTooLarge(_))
        ));
        assert_eq!(PermGroup::generate_with_cap(7, &gens, 6000).unwrap().order(), 5040);
    }

    #[test]
    fn sylow_examples_match_brute_force() {
        let s3 = g(3, &["(1 2 3)", "(1 2)"]);
        assert_eq!(s4().sylow(2).order(), 8);
        assert_eq!(max_p_subgroup_order_brute(&s4(), 2), 8);
        assert_eq!(s3.sylow(3).order(), 3);
        assert_eq!(max_p_subgroup_order_brute(&s3, 3), 3);
        assert_eq!(g(5, &["(1 2 3 4 5)"]).sylow(2).order(), 1);
    }

    #[test]
    fn residual_examples() {
        let a4 = g(4, &["(1 2 3)", "(2 3 4)"]);
        assert_eq!(s4().o_p_residual(2), a4);
        assert_eq!(a4.o_p_residual(2), a4);
        let d8 = g(4, &["(1 2 3 4)", "(1 3)"]);
        assert!(d8.o_p_residual(2).is_trivial());
    }

    #[test]
    fn commutator_centralizer_normalizer() {
        let a4 = g(4, &["(1 2 3)", "(2 3 4)"]);
        assert_eq!(s4().commutator_subgroup(), a4);
        let s3 = g(3, &["(1 2 3)", "(1 2)"]);
        let c3 = g(3, &["(1 2 3)"]);
        assert_eq!(s3.centralizer(&c3).unwrap(), c3);
        assert_eq!(s4().normalizer(&s4()).unwrap(), s4());
        let not_sub = g(4, &["(1 2)"]);
        assert!(s3.centralizer(&not_sub).is_err());
    }

    #[test]
    fn fiber_subgroup_examples() {
        let d8 = g(4, &["(1 2 3 4)", "(1 3)"]);
        let z = d8.center();
        assert_eq!(z.order(), 2);
        assert_eq!(d8.bar_fiber_subgroup(&z).unwrap().order(), 16);
        assert_eq!(d8.bar_fiber_subgroup(&d8).unwrap(), d8.direct_product(&d8));
        assert_eq!(
            d8.bar_fiber_subgroup(&PermGroup::trivial(4)).unwrap(),
            d8.diagonal()
        );
    }

    #[test]
    fn fiber_contains_normal_diagonal_product() {
        let d8 = g(4, &["(1 2 3 4)", "(1 3)"]);
        let z = d8.center();
        let fiber = d8.bar_fiber_subgroup(&z).unwrap();
        let mut gens: Vec<Perm> = d8.diagonal().generators().to_vec();
        gens.extend(z.direct_product(&z).generators().iter().cloned());
        let nn_delta = PermGroup::generate(8, &gens).unwrap();
        assert!(nn_delta.is_normal_in(&fiber));
    }

    #[test]
    fn p_subgroups_of_s4() {
        let subs = s4().p_subgroups(2);
        // 1 + 9 of order 2 + 7 of order 4 (4 cyclic/Klein conjugates... counted exhaustively) + 3 of order 8
        let brute = s4().all_subgroups().into_iter().filter(|h| h.is_p_group(2)).count();
        assert_eq!(subs.len(), brute);
        assert_eq!(subs.iter().filter(|h| h.order() == 8).count(), 3);
    }

    #[test]
    fn quotient_p_group_by_residual() {
        for grp in [s4(), g(4, &["(1 2 3)", "(2 3 4)"]), g(3, &["(1 2 3)", "(1 2)"])] {
            for p in [2, 3] {
                let r = grp.o_p_residual(p);
                assert!(r.is_normal_in(&grp));
                assert!(is_power_of((grp.order() / r.order()) as u64, p));
            }
        }
    }
}
