//! Group algebras over finite fields and their blocks.

mod block;
mod points;

use std::sync::Arc;

pub use block::{
    block_idempotents, brauer_pairs, defect_group, source_algebra, source_idempotent, BlockData,
    BrauerPair, SourceAlgebra,
};
pub use points::{points, relative_multiplicity, brauer_kernel, Point};
pub(crate) use block::{brauer_nonzero, fixed_block_algebra};

use crate::algebra::{Elem, FinAlgebra, LinearAction};
use crate::error::{Error, Result};
use crate::field::{splitting_degree, Field, Fq};
use crate::group::{Perm, PermGroup};
use crate::linalg::{Mat, Subspace};

/// `F_q G` with basis the elements of `G` in their sorted order.
#[derive(Clone, Debug)]
pub struct GroupAlgebra {
    group: PermGroup,
    algebra: FinAlgebra,
}

impl GroupAlgebra {
    pub fn new(group: &PermGroup, field: Field) -> Self {
        let algebra = FinAlgebra::group_algebra(field, Arc::new(group.table().clone()));
        GroupAlgebra {
            group: group.clone(),
            algebra,
        }
    }

    /// Over the splitting field `F_{p^m}` of the field-size policy, or over
    /// `F_{p^degree}` when a degree is given (it must be a multiple of `m`).
    pub fn over_splitting_field(group: &PermGroup, p: u64, degree: Option<u32>) -> Result<Self> {
        Field::prime(p)?;
        let m = splitting_degree(p, group.exponent());
        let m = match degree {
            None => m,
            Some(d) if d % m == 0 => d,
            Some(d) => {
                return Err(Error::arg(format!(
                    "field degree {d} is not a multiple of the splitting degree {m}"
                )))
            }
        };
        Ok(Self::new(group, Field::new(p, m)?))
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn algebra(&self) -> &FinAlgebra {
        &self.algebra
    }

    pub fn field(&self) -> &Field {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.group.order()
    }

    pub fn characteristic(&self) -> u64 {
        self.field().characteristic()
    }

    /// The basis element of a group element.
    pub fn element(&self, g: &Perm) -> Elem {
        let mut v = vec![0; self.dim()];
        v[self.group.index_of(g).expect("element of the group")] = 1;
        v
    }

    /// Sum of coefficients, the augmentation.
    pub fn augmentation(&self, a: &[Fq]) -> Fq {
        let f = self.field();
        a.iter().fold(0, |acc, &x| f.add(acc, x))
    }

    /// Sums over the orbits of `h` acting by conjugation, in order of the
    /// smallest orbit member.
    pub fn orbit_sums(&self, h: &PermGroup) -> Vec<Elem> {
        let t = self.group.table();
        let hidx: Vec<usize> = h
            .elements()
            .iter()
            .map(|x| self.group.index_of(x).expect("subgroup element"))
            .collect();
        let n = self.dim();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for g in 0..n {
            if seen[g] {
                continue;
            }
            let mut v = vec![0; n];
            for &x in &hidx {
                let y = t.conj(x, g);
                seen[y] = true;
                v[y] = 1;
            }
            out.push(v);
        }
        out
    }

    /// `(kG)^H` for `H` acting by conjugation.
    pub fn fixed_subspace(&self, h: &PermGroup) -> Subspace {
        Subspace::span(self.field(), self.dim(), &self.orbit_sums(h))
    }

    pub fn is_fixed(&self, h: &PermGroup, a: &[Fq]) -> bool {
        let t = self.group.table();
        h.generators().iter().all(|x| {
            let xi = self.group.index_of(x).expect("subgroup element");
            (0..self.dim()).all(|g| a[t.conj(xi, g)] == a[g])
        })
    }

    /// `x a x^-1`.
    pub fn conjugate(&self, x: &Perm, a: &[Fq]) -> Elem {
        let t = self.group.table();
        let xi = self.group.index_of(x).expect("element of the group");
        let mut out = vec![0; self.dim()];
        for (g, &c) in a.iter().enumerate() {
            out[t.conj(xi, g)] = c;
        }
        out
    }

    /// `u a v^-1`.
    pub fn translate(&self, u: &Perm, a: &[Fq], v: &Perm) -> Elem {
        let t = self.group.table();
        let ui = self.group.index_of(u).expect("element of the group");
        let vi = t.inv(self.group.index_of(v).expect("element of the group"));
        let mut out = vec![0; self.dim()];
        for (g, &c) in a.iter().enumerate() {
            if c != 0 {
                out[t.mul(t.mul(ui, g), vi)] = c;
            }
        }
        out
    }

    /// Conjugation action of a subgroup on `kG` as permutation matrices.
    pub fn conjugation_action(&self, h: &PermGroup) -> Result<LinearAction> {
        let n = self.dim();
        LinearAction::from_fn(self.field().clone(), n, h, |x| {
            let mut m = Mat::zeros(n, n);
            for g in 0..n {
                let xg = self.conjugate(x, &crate::linalg::unit_vector(n, g));
                let target = xg.iter().position(|&c| c != 0).expect("basis permuted");
                m.set(target, g, 1);
            }
            m
        })
    }

    /// `Br_P(a)`: the truncation of a `P`-fixed `a` to `C_G(P)`, in the basis
    /// of `k C_G(P)` (sorted elements of the centralizer).
    pub fn brauer_map(&self, a: &[Fq], p: &PermGroup) -> Result<(PermGroup, Elem)> {
        if !self.is_fixed(p, a) {
            return Err(Error::arg("Brauer map needs a P-fixed element"));
        }
        let c = self.group.centralizer(p)?;
        let out = c
            .elements()
            .iter()
            .map(|x| a[self.group.index_of(x).expect("centralizer element")])
            .collect();
        Ok((c, out))
    }

    /// Same truncation, left in `kG` coordinates.
    pub fn brauer_truncate(&self, a: &[Fq], p: &PermGroup) -> Result<Elem> {
        let (c, br) = self.brauer_map(a, p)?;
        Ok(self.embed(&c, &br))
    }

    /// Embeds an element of `kH`, `H <= G`, into `kG`.
    pub fn embed(&self, h: &PermGroup, a: &[Fq]) -> Elem {
        let mut out = vec![0; self.dim()];
        for (x, &c) in h.elements().iter().zip(a) {
            out[self.group.index_of(x).expect("subgroup element")] = c;
        }
        out
    }

    /// Restricts an element of `kG` supported on `H` to `kH` coordinates.
    pub fn restrict_to(&self, h: &PermGroup, a: &[Fq]) -> Option<Elem> {
        let out: Elem = h
            .elements()
            .iter()
            .map(|x| a[self.group.index_of(x).expect("subgroup element")])
            .collect();
        let total = a.iter().filter(|&&c| c != 0).count();
        (out.iter().filter(|&&c| c != 0).count() == total).then_some(out)
    }

    /// The group algebra of a subgroup over the same field.
    pub fn subgroup_algebra(&self, h: &PermGroup) -> GroupAlgebra {
        GroupAlgebra::new(h, self.field().clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> PermGroup {
        PermGroup::generate(
            3,
            &[Perm::parse_cycles("(1 2 3)", 3).unwrap(), Perm::parse_cycles("(1 2)", 3).unwrap()],
        )
        .unwrap()
    }

    #[test]
    fn brauer_map_of_transposition_class_sum() {
        let g = s3();
        let kg = GroupAlgebra::new(&g, Field::prime(2).unwrap());
        let t = Perm::parse_cycles("(1 2)", 3).unwrap();
        let p = g.subgroup(std::slice::from_ref(&t)).unwrap();
        let mut class = vec![0; 6];
        for x in g.elements() {
            if x.order() == 2 {
                class[g.index_of(x).unwrap()] = 1;
            }
        }
        let br = kg.brauer_truncate(&class, &p).unwrap();
        assert_eq!(br, kg.element(&t));
        assert_eq!(kg.brauer_truncate(&kg.algebra().one(), &p).unwrap(), kg.algebra().one());
        let trivial = PermGroup::trivial(3);
        assert_eq!(kg.brauer_truncate(&class, &trivial).unwrap(), class);
        assert!(kg.brauer_map(&kg.element(&t), &g.subgroup(&[Perm::parse_cycles("(1 2 3)", 3).unwrap()]).unwrap()).is_err());
    }

    #[test]
    fn brauer_map_is_multiplicative_on_fixed_points() {
        let g = s3();
        let kg = GroupAlgebra::new(&g, Field::prime(3).unwrap());
        let p = g.subgroup(&[Perm::parse_cycles("(1 2 3)", 3).unwrap()]).unwrap();
        let sums = kg.orbit_sums(&p);
        let c = g.centralizer(&p).unwrap();
        let kc = kg.subgroup_algebra(&c);
        for a in &sums {
            for b in &sums {
                let ab = kg.algebra().mul(a, b);
                let lhs = kg.brauer_map(&ab, &p).unwrap().1;
                let rhs = kc.algebra().mul(&kg.brauer_map(a, &p).unwrap().1, &kg.brauer_map(b, &p).unwrap().1);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn splitting_field_choice() {
        let g = s3();
        assert_eq!(GroupAlgebra::over_splitting_field(&g, 2, None).unwrap().field().size(), 4);
        assert_eq!(GroupAlgebra::over_splitting_field(&g, 3, None).unwrap().field().size(), 3);
        assert_eq!(GroupAlgebra::over_splitting_field(&g, 3, Some(2)).unwrap().field().size(), 9);
        assert!(GroupAlgebra::over_splitting_field(&g, 2, Some(3)).is_err());
    }
}
