use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::group::{ElementSet, GroupHom, PermGroup};

use super::{ActionBasis, InteriorAlgebra};

/// `Delta(phi) = {(phi(u), u)}`. With `fiber = Some((G, N))` membership in
/// `G x^{G/N} G` is checked.
pub fn iso_to_subgroup(phi: &GroupHom, fiber: Option<(&PermGroup, &PermGroup)>) -> Result<PermGroup> {
    let h = phi.delta()?;
    if let Some((g, n)) = fiber {
        let deg = g.degree();
        for x in h.generators() {
            let (a, b) = x.split_pair(deg);
            if !g.contains(&a) || !g.contains(&b) || !n.contains(&a.compose(&b.inverse())) {
                return Err(Error::arg("Delta(phi) is not inside G x^{G/N} G"));
            }
        }
    }
    Ok(h)
}

fn side_trivial(h: &PermGroup, deg: usize) -> bool {
    h.elements().iter().skip(1).all(|x| {
        let (a, b) = x.split_pair(deg);
        !a.is_identity() && !b.is_identity()
    })
}

/// `phi_H: pi'(H) -> pi(H)`, `phi_H(u) = v` for `(v, u) in H`.
pub fn subgroup_to_iso(h: &PermGroup, g: &PermGroup, n: &PermGroup) -> Result<GroupHom> {
    let deg = g.degree();
    if h.degree() != 2 * deg {
        return Err(Error::arg("H is not a subgroup of G x G"));
    }
    for x in h.generators() {
        let (a, b) = x.split_pair(deg);
        if !g.contains(&a) || !g.contains(&b) || !n.contains(&a.compose(&b.inverse())) {
            return Err(Error::arg("H is not inside G x^{G/N} G"));
        }
    }
    if !side_trivial(h, deg) {
        return Err(Error::arg("H meets N x 1 or 1 x N nontrivially"));
    }
    let (left, right) = g.project_pairs(h);
    let mut images = vec![right.identity(); right.order()];
    for x in h.elements() {
        let (a, b) = x.split_pair(deg);
        images[right.index_of(&b).expect("right projection")] = a;
    }
    GroupHom::from_images(&right, &left, &images)
}

/// The family of subgroups `H <= G x^{G/N} G` meeting `N x 1` and `1 x N`
/// trivially, in canonical order.
pub fn h_family(pairs: &PermGroup, deg: usize) -> Vec<PermGroup> {
    let side: Vec<bool> = pairs
        .elements()
        .iter()
        .map(|x| {
            let (a, b) = x.split_pair(deg);
            !x.is_identity() && (a.is_identity() || b.is_identity())
        })
        .collect();
    pairs
        .subgroup_sets_where(|s| s.iter().all(|i| !side[i]))
        .iter()
        .map(|s| pairs.subgroup_from_set(s))
        .collect()
}

/// One representative per conjugacy class of the family, first in
/// canonical order.
pub fn h_classes(pairs: &PermGroup, deg: usize) -> Vec<PermGroup> {
    let t = pairs.table();
    let fam = h_family(pairs, deg);
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut out = Vec::new();
    for h in fam {
        let idx: Vec<usize> = h.elements().iter().map(|x| pairs.index_of(x).expect("subgroup")).collect();
        let key = {
            let mut v = idx.clone();
            v.sort_unstable();
            v
        };
        if seen.contains(&key) {
            continue;
        }
        for x in 0..pairs.order() {
            let mut s = ElementSet::empty(pairs.order());
            for &i in &idx {
                s.insert(t.conj(x, i));
            }
            seen.insert(s.iter().collect());
        }
        out.push(h);
    }
    out
}

/// `phi` with `N(omega_k) = Delta(phi)`; needs a bifree basis.
pub fn stabilizer_iso(ia: &InteriorAlgebra, basis: &ActionBasis, k: usize) -> Result<GroupHom> {
    if !basis.is_bifree(ia) {
        return Err(Error::pre("basis is not bifree"));
    }
    subgroup_to_iso(&basis.stabilizer(k), ia.group(), ia.normal())
}
