use std::collections::HashMap;

use crate::algebra::{primitive_idempotent_decomposition, Elem, FinAlgebra, LinearAction};
use crate::error::{Error, Result};
use crate::group::{Perm, PermGroup};
use crate::linalg::{unit_vector, Mat, Subspace};

use super::InteriorAlgebra;

/// A basis permuted by a group action, with its permutation data.
#[derive(Clone, Debug)]
pub struct ActionBasis {
    vectors: Vec<Elem>,
    /// `perms[g][k]`: index of `g . omega_k`, `g` indexed like the acting group.
    perms: Vec<Vec<usize>>,
    /// Sorted orbits, each sorted; the first entry is the representative.
    orbits: Vec<Vec<usize>>,
    group: PermGroup,
}

impl ActionBasis {
    /// Checks that `vectors` is a basis and that every group element maps
    /// it onto itself.
    pub fn from_action(action: &LinearAction, vectors: Vec<Elem>) -> Result<Self> {
        let f = action.field();
        let n = action.dim();
        if vectors.len() != n || Subspace::span(f, n, &vectors).dim() != n {
            return Err(Error::arg("vectors do not form a basis"));
        }
        let index: HashMap<&Elem, usize> = vectors.iter().enumerate().map(|(k, v)| (v, k)).collect();
        let group = action.group().clone();
        let mut perms = Vec::with_capacity(group.order());
        for gi in 0..group.order() {
            let m = action.matrix_at(gi);
            let p: Vec<usize> = vectors
                .iter()
                .map(|v| {
                    index
                        .get(&m.mul_vec(f, v))
                        .copied()
                        .ok_or_else(|| Error::arg("basis is not stable under the action"))
                })
                .collect::<Result<_>>()?;
            perms.push(p);
        }
        let mut seen = vec![false; n];
        let mut orbits = Vec::new();
        for k in 0..n {
            if seen[k] {
                continue;
            }
            let mut orb: Vec<usize> = perms.iter().map(|p| p[k]).collect();
            orb.sort_unstable();
            orb.dedup();
            for &j in &orb {
                seen[j] = true;
            }
            orbits.push(orb);
        }
        Ok(ActionBasis {
            vectors,
            perms,
            orbits,
            group,
        })
    }

    pub fn new(ia: &InteriorAlgebra, vectors: Vec<Elem>) -> Result<Self> {
        Self::from_action(ia.pair_action(), vectors)
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Elem] {
        &self.vectors
    }

    pub fn into_vectors(self) -> Vec<Elem> {
        self.vectors
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    pub fn image(&self, g: &Perm, k: usize) -> usize {
        self.perms[self.group.index_of(g).expect("element of the acting group")][k]
    }

    /// `N(omega_k)`.
    pub fn stabilizer(&self, k: usize) -> PermGroup {
        let elems = (0..self.group.order())
            .filter(|&g| self.perms[g][k] == k)
            .map(|g| self.group.element(g).clone())
            .collect();
        PermGroup::from_elements(self.group.degree(), elems).expect("stabilizers are subgroups")
    }

    /// Elements of `G x^{G/N} G` fixing some `omega_k` never lie in
    /// `N x 1` or `1 x N` except for the identity.
    pub fn is_bifree(&self, ia: &InteriorAlgebra) -> bool {
        let deg = ia.group().degree();
        (1..self.group.order()).all(|g| {
            let (u, v) = self.group.element(g).split_pair(deg);
            let side = u.is_identity() || v.is_identity();
            !side || (0..self.len()).all(|k| self.perms[g][k] != k)
        })
    }

    pub fn is_unital(&self, a: &FinAlgebra) -> bool {
        self.vectors.iter().all(|v| a.is_unit(v))
    }
}

/// Matrix of the action of `g` in the basis `vectors`; a permutation matrix
/// for a stable basis.
pub fn matrix_in_basis(action: &LinearAction, vectors: &[Elem], g: &Perm) -> Result<Mat> {
    let f = action.field();
    let n = action.dim();
    let b = Mat::from_cols(n, vectors);
    let binv = b.inverse(f).ok_or_else(|| Error::arg("vectors do not form a basis"))?;
    Ok(binv.mul(f, &action.matrix(g).mul(f, &b)))
}

fn radical_of_module(action: &LinearAction, w: &Subspace) -> Subspace {
    let f = action.field();
    let mut vecs = Vec::new();
    for g in action.group().generators() {
        let m = action.matrix(g);
        for x in w.basis() {
            let mut y = m.mul_vec(f, x);
            f.axpy(&mut y, f.neg(1), x);
            vecs.push(y);
        }
    }
    Subspace::span(f, action.dim(), &vecs)
}

/// An orbit basis of an indecomposable summand `w` isomorphic to some
/// `k[P/Q]`: an element of `w^Q` outside `J(kP) w` generates `w`, and its
/// orbit has at most `[P:Q] = dim w` members.
fn orbit_basis(action: &LinearAction, w: &Subspace) -> Result<Vec<Elem>> {
    let f = action.field();
    let p = action.group();
    let d = w.dim();
    if !p.order().is_multiple_of(d) {
        return Err(Error::Structure(format!(
            "summand of dimension {d} is not a transitive permutation module"
        )));
    }
    let qorder = p.order() / d;
    let rad = radical_of_module(action, w);
    let sets = p.subgroup_sets_where(|s| s.len() <= qorder);
    for s in sets.iter().filter(|s| s.len() == qorder) {
        let q = p.subgroup_from_set(s);
        let wq = w.intersect(f, &action.fixed_subspace(&q));
        let Some(x) = wq.basis().iter().find(|x| !rad.contains(f, x)) else {
            continue;
        };
        let mut orbit: Vec<Elem> = p.elements().iter().map(|g| action.apply(g, x)).collect();
        orbit.sort();
        orbit.dedup();
        if orbit.len() == d && Subspace::span(f, action.dim(), &orbit).dim() == d {
            return Ok(orbit);
        }
    }
    Err(Error::Structure(format!(
        "no transitive permutation basis for a summand of dimension {d}"
    )))
}

/// A basis permuted by a p-group acting on a p-permutation module: split
/// the module by primitive idempotents of its endomorphism algebra and take
/// an orbit basis of each summand.
pub fn find_stable_basis(action: &LinearAction, seed: u64) -> Result<Vec<Elem>> {
    let f = action.field();
    let n = action.dim();
    let gens: Vec<&Perm> = action.group().generators().iter().collect();
    if gens.iter().all(|g| action.matrix(g).is_permutation_matrix()) {
        return Ok((0..n).map(|k| unit_vector(n, k)).collect());
    }
    if !action.group().is_p_group(f.characteristic()) {
        return Err(Error::arg("stable bases are searched for p-group actions only"));
    }
    let mn = FinAlgebra::matrix_algebra(f.clone(), n);
    let flat = |m: &Mat| -> Elem {
        let mut v = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                v[i * n + j] = m.get(i, j);
            }
        }
        v
    };
    let gen_elems: Vec<Elem> = gens.iter().map(|g| flat(action.matrix(g))).collect();
    let end = mn.subalgebra(&mn.commutant(&gen_elems), &mn.one())?;
    let dec = primitive_idempotent_decomposition(&end.algebra, &end.algebra.one(), seed)?;
    let mut out = Vec::with_capacity(n);
    for e in &dec.idempotents {
        let ev = end.to_parent(e);
        let cols: Vec<Elem> = (0..n).map(|j| (0..n).map(|i| ev[i * n + j]).collect()).collect();
        let w = Subspace::span(f, n, &cols);
        out.extend(orbit_basis(action, &w)?);
    }
    if Subspace::span(f, n, &out).dim() != n {
        return Err(Error::internal("orbit bases of the summands are dependent"));
    }
    Ok(out)
}
