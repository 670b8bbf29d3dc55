//! Idempotent decompositions.
//!
//! Splitting uses only exact Frobenius-fixed elements: in a commutative
//! algebra `K` the elements with `y^q = y` are exactly the `F_q`-combinations
//! of the primitive idempotents of `K`, and for such `y` and an eigenvalue
//! `c`, `f - (y - c f)^{q-1}` is the idempotent of the `c`-eigenspace.
//! Primitivity of `f` is certified by `fAf / fJf` being a field.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{poly_roots, radical, Elem, FinAlgebra, QuotientSpace};
use crate::error::{Error, Result};
use crate::field::Fq;
use crate::linalg::{is_zero, Mat, Subspace};

const SPLIT_ATTEMPTS: usize = 500;

/// Orthogonal primitive idempotents summing to the decomposed idempotent,
/// sorted by coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub idempotents: Vec<Elem>,
}

enum Locality {
    Local,
    /// A non-scalar element of `fAf` whose image in the quotient is fixed by Frobenius.
    Splittable(Option<Elem>),
}

struct Context<'a> {
    alg: &'a FinAlgebra,
    rad: Subspace,
    rng: ChaCha8Rng,
}

impl<'a> Context<'a> {
    fn power_bound(&self) -> u64 {
        let q = self.alg.field().size() as u64;
        let mut e = q;
        while (e as usize) < self.alg.dim() {
            e *= q;
        }
        e
    }

    fn locality(&self, f: &[Fq]) -> Locality {
        let a = self.alg;
        let fld = a.field();
        let corner = a.corner_space(f, f);
        let frad: Vec<Elem> = self.rad.basis().iter().map(|j| a.mul3(f, j, f)).collect();
        let frad = Subspace::span(fld, a.dim(), &frad);
        let quot = QuotientSpace::new(fld, &corner, &frad);
        let reps = quot.representatives().to_vec();
        for (i, u) in reps.iter().enumerate() {
            for v in &reps[i + 1..] {
                if !quot.is_zero(fld, &a.commutator(u, v)) {
                    return Locality::Splittable(None);
                }
            }
        }
        // quotient is commutative, so Frobenius is linear on it
        let q = fld.size() as u64;
        let cols: Vec<Elem> = reps.iter().map(|u| quot.coords(fld, &a.pow(u, q))).collect();
        let frob = Mat::from_cols(quot.dim(), &cols);
        let fixed = frob.sub(fld, &Mat::identity(quot.dim())).kernel(fld);
        if fixed.len() <= 1 {
            return Locality::Local;
        }
        let fclass = quot.coords(fld, f);
        let scalar_line = Subspace::span(fld, quot.dim(), &[fclass]);
        let y = fixed
            .iter()
            .find(|v| !scalar_line.contains(fld, v))
            .map(|v| quot.lift(fld, v))
            .expect("fixed space of dimension >= 2 has a non-scalar vector");
        // strip the nilpotent part: the semisimple part is a q-power of y
        Locality::Splittable(Some(a.pow(&y, self.power_bound())))
    }

    /// Splits `f` along the eigenvalues of a Frobenius-fixed `y` in `fAf`.
    fn split_with(&self, f: &[Fq], y: &[Fq]) -> Option<(Elem, Elem)> {
        let a = self.alg;
        let fld = a.field();
        let q = fld.size() as u64;
        let roots = self.eigenvalues(f, y);
        if roots.len() < 2 {
            return None;
        }
        let c = roots[0];
        let shifted = a.sub(y, &a.scale(c, f));
        let other = a.pow(&shifted, q - 1);
        let g = a.sub(f, &other);
        if is_zero(&g) || g == f || !a.is_idempotent(&g) {
            return None;
        }
        Some((g, other))
    }

    /// Roots of the minimal polynomial of `y` inside `fAf` (identity `f`).
    fn eigenvalues(&self, f: &[Fq], y: &[Fq]) -> Vec<Fq> {
        let a = self.alg;
        let fld = a.field();
        let mut powers: Vec<Elem> = vec![f.to_vec()];
        let mut span = Subspace::span(fld, a.dim(), &powers);
        loop {
            let next = a.mul(powers.last().expect("nonempty"), y);
            if span.contains(fld, &next) {
                let m = Mat::from_cols(a.dim(), &powers);
                let c = m.solve(fld, &next).expect("in span");
                let mut poly: Vec<Fq> = c.iter().map(|&x| fld.neg(x)).collect();
                poly.push(1);
                return poly_roots(fld, &poly);
            }
            span.insert(fld, &next);
            powers.push(next);
        }
    }

    /// Random element `x` of `fAf`; returns a Frobenius-fixed non-scalar element
    /// of `F_q[x]` if `F_q[x]` has at least two primitive idempotents.
    fn random_split_element(&mut self, f: &[Fq]) -> Option<Elem> {
        let a = self.alg;
        let fld = a.field();
        let q = fld.size();
        let r: Elem = (0..a.dim()).map(|_| self.rng.gen_range(0..q) as Fq).collect();
        let x = a.mul3(f, &r, f);
        let mut powers: Vec<Elem> = vec![f.to_vec()];
        let mut span = Subspace::span(fld, a.dim(), &powers);
        loop {
            let next = a.mul(powers.last().expect("nonempty"), &x);
            if !span.insert(fld, &next) {
                break;
            }
            powers.push(next);
        }
        if powers.len() < 2 {
            return None;
        }
        let basis = Mat::from_cols(a.dim(), &powers);
        let qpow = q as u64;
        let cols: Vec<Elem> = powers
            .iter()
            .map(|u| basis.solve(fld, &a.pow(u, qpow)).expect("F_q[x] is closed"))
            .collect();
        let frob = Mat::from_cols(powers.len(), &cols);
        let fixed = frob.sub(fld, &Mat::identity(powers.len())).kernel(fld);
        if fixed.len() < 2 {
            return None;
        }
        // any fixed vector off the line of f (coordinate vector e_0)
        fixed
            .iter()
            .find(|v| v[1..].iter().any(|&c| c != 0))
            .map(|v| basis.mul_vec(fld, v))
    }

    fn decompose(&mut self, e: &[Fq]) -> Result<Vec<Elem>> {
        let mut pending = vec![e.to_vec()];
        let mut done = Vec::new();
        while let Some(f) = pending.pop() {
            if is_zero(&f) {
                continue;
            }
            let y = match self.locality(&f) {
                Locality::Local => {
                    done.push(f);
                    continue;
                }
                Locality::Splittable(Some(y)) => Some(y),
                Locality::Splittable(None) => None,
            };
            let mut split = y.and_then(|y| self.split_with(&f, &y));
            let mut attempts = 0;
            while split.is_none() && attempts < SPLIT_ATTEMPTS {
                attempts += 1;
                if let Some(y) = self.random_split_element(&f) {
                    split = self.split_with(&f, &y);
                }
            }
            let (g, h) = split.ok_or_else(|| {
                Error::Construction(format!(
                    "no splitting element found for a non-primitive idempotent after {SPLIT_ATTEMPTS} attempts"
                ))
            })?;
            pending.push(g);
            pending.push(h);
        }
        done.sort();
        Ok(done)
    }
}

/// Decomposes the idempotent `e` of `a` into orthogonal primitive idempotents.
pub fn primitive_idempotent_decomposition(a: &FinAlgebra, e: &[Fq], seed: u64) -> Result<Decomposition> {
    if !a.is_idempotent(e) {
        return Err(Error::arg("element is not an idempotent"));
    }
    if is_zero(e) {
        return Ok(Decomposition { idempotents: Vec::new() });
    }
    // work in the corner eAe, whose radical is eJ(A)e
    let corner = a.corner(e)?;
    let mut ctx = Context {
        alg: &corner.algebra,
        rad: radical(&corner.algebra)?,
        rng: ChaCha8Rng::seed_from_u64(seed),
    };
    let one = corner.algebra.one();
    let local = ctx.decompose(&one)?;
    let mut idempotents: Vec<Elem> = local.iter().map(|v| corner.to_parent(v)).collect();
    idempotents.sort();
    verify_decomposition(a, e, &idempotents)?;
    Ok(Decomposition { idempotents })
}

fn verify_decomposition(a: &FinAlgebra, e: &[Fq], parts: &[Elem]) -> Result<()> {
    let mut sum = a.zero();
    for (k, i) in parts.iter().enumerate() {
        for (l, j) in parts.iter().enumerate() {
            let ij = a.mul(i, j);
            let ok = if k == l { ij == *i } else { is_zero(&ij) };
            if !ok {
                return Err(Error::internal("decomposition is not orthogonal"));
            }
        }
        sum = a.add(&sum, i);
    }
    if sum != e {
        return Err(Error::internal("decomposition does not sum to the idempotent"));
    }
    Ok(())
}

/// Whether `i` is a primitive idempotent, certified by `iAi / iJi` being a field.
pub fn is_primitive_idempotent(a: &FinAlgebra, i: &[Fq]) -> Result<bool> {
    if !a.is_idempotent(i) || is_zero(i) {
        return Ok(false);
    }
    let corner = a.corner(i)?;
    let ctx = Context {
        alg: &corner.algebra,
        rad: radical(&corner.algebra)?,
        rng: ChaCha8Rng::seed_from_u64(0),
    };
    Ok(matches!(ctx.locality(&corner.algebra.one()), Locality::Local))
}

/// Primitive idempotents of a commutative algebra, found deterministically
/// from the Frobenius-fixed subalgebra. Sorted by coordinates.
pub fn commutative_primitive_idempotents(a: &FinAlgebra) -> Result<Vec<Elem>> {
    if !a.is_commutative() {
        return Err(Error::arg("algebra is not commutative"));
    }
    let f = a.field();
    let q = f.size() as u64;
    let cols: Vec<Elem> = (0..a.dim()).map(|j| a.pow(&a.basis_element(j), q)).collect();
    let frob = Mat::from_cols(a.dim(), &cols);
    let fixed = frob.sub(f, &Mat::identity(a.dim())).kernel(f);
    let ctx = Context {
        alg: a,
        rad: Subspace::zero(a.dim()),
        rng: ChaCha8Rng::seed_from_u64(0),
    };
    let mut parts = vec![a.one()];
    for y in &fixed {
        let mut next = Vec::new();
        for e in parts {
            let ye = a.mul(y, &e);
            let roots = ctx.eigenvalues(&e, &ye);
            if roots.len() < 2 {
                next.push(e);
                continue;
            }
            for c in roots {
                let shifted = a.sub(&ye, &a.scale(c, &e));
                next.push(a.sub(&e, &a.pow(&shifted, q - 1)));
            }
        }
        parts = next;
    }
    parts.retain(|e| !is_zero(e));
    parts.sort();
    verify_decomposition(a, &a.one(), &parts)?;
    Ok(parts)
}

/// Primitive idempotents of the center of `a` (the block idempotents for a
/// group algebra), in parent coordinates.
pub fn central_primitive_idempotents(a: &FinAlgebra) -> Result<Vec<Elem>> {
    let z = a.subalgebra(&a.center(), &a.one())?;
    let mut out: Vec<Elem> = commutative_primitive_idempotents(&z.algebra)?
        .iter()
        .map(|v| z.to_parent(v))
        .collect();
    out.sort();
    Ok(out)
}

/// Inverse of `w` inside the corner `eAe`, if `w` is a unit there.
pub fn unit_in_corner(a: &FinAlgebra, e: &[Fq], w: &[Fq]) -> Option<Elem> {
    let padded = a.add(w, &a.sub(&a.one(), e));
    let inv = a.inverse(&padded)?;
    Some(a.mul3(e, &inv, e))
}

/// For primitive `i`, `j`: elements `s in iAj`, `s' in jAi` with `s s' = i`
/// and `s' s = j`, if `iA` and `jA` are isomorphic.
pub(crate) fn primitive_pair_link(a: &FinAlgebra, i: &[Fq], j: &[Fq]) -> Option<(Elem, Elem)> {
    let ij = a.corner_space(i, j);
    let ji = a.corner_space(j, i);
    link_from_spaces(a, i, j, &ij, &ji)
}

/// Same as [`primitive_pair_link`] with `s`, `s'` drawn from given subspaces
/// of `iAj` and `jAi` whose products span ideals of the local `iAi`.
pub(crate) fn link_from_spaces(
    a: &FinAlgebra,
    i: &[Fq],
    j: &[Fq],
    left: &Subspace,
    right: &Subspace,
) -> Option<(Elem, Elem)> {
    for s in left.basis() {
        for t in right.basis() {
            let w = a.mul(s, t);
            if let Some(winv) = unit_in_corner(a, i, &w) {
                let s2 = a.mul(t, &winv);
                if a.mul(s, &s2) == i && a.mul(&s2, s) == j {
                    return Some((s.clone(), s2));
                }
            }
        }
    }
    None
}

/// Matches the primitive decompositions of `i` and `j`; returns `s in iAj`,
/// `s' in jAi` with `s s' = i`, `s' s = j`.
fn link_idempotents(a: &FinAlgebra, i: &[Fq], j: &[Fq], seed: u64) -> Result<Option<(Elem, Elem)>> {
    let di = primitive_idempotent_decomposition(a, i, seed)?.idempotents;
    let dj = primitive_idempotent_decomposition(a, j, seed.wrapping_add(1))?.idempotents;
    if di.len() != dj.len() {
        return Ok(None);
    }
    let mut used = vec![false; dj.len()];
    let mut s = a.zero();
    let mut s2 = a.zero();
    for x in &di {
        let mut found = false;
        for (k, y) in dj.iter().enumerate() {
            if used[k] {
                continue;
            }
            if let Some((u, v)) = primitive_pair_link(a, x, y) {
                used[k] = true;
                s = a.add(&s, &u);
                s2 = a.add(&s2, &v);
                found = true;
                break;
            }
        }
        if !found {
            return Ok(None);
        }
    }
    Ok(Some((s, s2)))
}

/// A unit `q` with `i = q j q^{-1}`, if one exists.
pub fn idempotent_conjugacy(a: &FinAlgebra, i: &[Fq], j: &[Fq], seed: u64) -> Result<Option<Elem>> {
    if !a.is_idempotent(i) || !a.is_idempotent(j) {
        return Err(Error::arg("idempotent_conjugacy requires idempotents"));
    }
    if i == j {
        return Ok(Some(a.one()));
    }
    let Some((s, _)) = link_idempotents(a, i, j, seed)? else {
        return Ok(None);
    };
    let ci = a.sub(&a.one(), i);
    let cj = a.sub(&a.one(), j);
    let Some((t, _)) = link_idempotents(a, &ci, &cj, seed.wrapping_add(2))? else {
        return Ok(None);
    };
    let q = a.add(&s, &t);
    let qinv = a
        .inverse(&q)
        .ok_or_else(|| Error::internal("assembled conjugating element is not a unit"))?;
    if a.mul3(&q, j, &qinv) != i {
        return Err(Error::internal("assembled element does not conjugate j to i"));
    }
    Ok(Some(q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::group::{Perm, PermGroup};
    use std::sync::Arc;

    fn group_algebra(p: u64, m: u32, degree: usize, gens: &[&str]) -> FinAlgebra {
        let gens: Vec<Perm> = gens.iter().map(|s| Perm::parse_cycles(s, degree).unwrap()).collect();
        let g = PermGroup::generate(degree, &gens).unwrap();
        FinAlgebra::group_algebra(Field::new(p, m).unwrap(), Arc::new(g.table().clone()))
    }

    #[test]
    fn local_algebra_has_trivial_decomposition() {
        let a = FinAlgebra::truncated_polynomials(Field::prime(3).unwrap(), 3);
        let d = primitive_idempotent_decomposition(&a, &a.one(), 1).unwrap();
        assert_eq!(d.idempotents, vec![a.one()]);
    }

    #[test]
    fn diagonal_algebra_splits_fully() {
        let a = FinAlgebra::diagonal(Field::prime(2).unwrap(), 3);
        let d = primitive_idempotent_decomposition(&a, &a.one(), 1).unwrap();
        assert_eq!(d.idempotents, vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]);
    }

    #[test]
    fn f3_s3_decomposes_into_three() {
        // trivial and sign are the only simples, both of dimension 1
        let a = group_algebra(3, 1, 3, &["(1 2 3)", "(1 2)"]);
        let d = primitive_idempotent_decomposition(&a, &a.one(), 7).unwrap();
        assert_eq!(d.idempotents.len(), 2);
        for i in &d.idempotents {
            assert!(is_primitive_idempotent(&a, i).unwrap());
        }
    }

    #[test]
    fn f2_s3_decomposition() {
        // F_4[S3] / J = F_4 x M_2(F_4): 1 + 2 primitive idempotents
        let a = group_algebra(2, 2, 3, &["(1 2 3)", "(1 2)"]);
        let d = primitive_idempotent_decomposition(&a, &a.one(), 3).unwrap();
        assert_eq!(d.idempotents.len(), 3);
    }

    #[test]
    fn matrix_units_are_conjugate() {
        let a = FinAlgebra::matrix_algebra(Field::prime(2).unwrap(), 2);
        let e11 = a.basis_element(0);
        let e22 = a.basis_element(3);
        let q = idempotent_conjugacy(&a, &e11, &e22, 0).unwrap().unwrap();
        let qinv = a.inverse(&q).unwrap();
        assert_eq!(a.mul3(&q, &e22, &qinv), e11);
    }

    #[test]
    fn central_idempotents_are_not_conjugate() {
        let a = FinAlgebra::diagonal(Field::prime(5).unwrap(), 2);
        let r = idempotent_conjugacy(&a, &[1, 0], &[0, 1], 0).unwrap();
        assert!(r.is_none());
        assert_eq!(idempotent_conjugacy(&a, &[1, 0], &[1, 0], 0).unwrap(), Some(a.one()));
    }

    #[test]
    fn blocks_of_small_group_algebras() {
        let s3 = ["(1 2 3)", "(1 2)"];
        assert_eq!(central_primitive_idempotents(&group_algebra(2, 2, 3, &s3)).unwrap().len(), 2);
        assert_eq!(central_primitive_idempotents(&group_algebra(3, 1, 3, &s3)).unwrap().len(), 1);
        let c4 = ["(1 2 3 4)"];
        assert_eq!(central_primitive_idempotents(&group_algebra(2, 1, 4, &c4)).unwrap().len(), 1);
    }

    #[test]
    fn rejects_non_idempotent() {
        let a = FinAlgebra::truncated_polynomials(Field::prime(2).unwrap(), 2);
        assert!(primitive_idempotent_decomposition(&a, &[0, 1], 0).is_err());
    }
}
