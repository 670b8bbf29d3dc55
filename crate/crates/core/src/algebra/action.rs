use crate::error::{Error, Result};
use crate::field::{Field, Fq};
use crate::group::{Perm, PermGroup};
use crate::linalg::{Mat, Subspace};

/// A linear action of a permutation group, one matrix per group element
/// (indexed like [`PermGroup::elements`]). Matrices act on column vectors.
#[derive(Clone, Debug)]
pub struct LinearAction {
    field: Field,
    dim: usize,
    group: PermGroup,
    mats: Vec<Mat>,
}

impl LinearAction {
    /// Builds from a matrix per element and verifies the homomorphism
    /// property against the group generators.
    pub fn new(field: Field, dim: usize, group: PermGroup, mats: Vec<Mat>) -> Result<Self> {
        if mats.len() != group.order() {
            return Err(Error::arg("one matrix per group element is required"));
        }
        let act = LinearAction {
            field,
            dim,
            group,
            mats,
        };
        act.verify()?;
        Ok(act)
    }

    pub fn from_fn(field: Field, dim: usize, group: &PermGroup, f: impl Fn(&Perm) -> Mat) -> Result<Self> {
        let mats = group.elements().iter().map(f).collect();
        Self::new(field, dim, group.clone(), mats)
    }

    fn verify(&self) -> Result<()> {
        let f = &self.field;
        if self.mats[0] != Mat::identity(self.dim) {
            return Err(Error::arg("identity does not act trivially"));
        }
        let t = self.group.table();
        for g in self.group.generators() {
            let gi = self.group.index_of(g).expect("generator in group");
            for x in 0..self.group.order() {
                if self.mats[gi].mul(f, &self.mats[x]) != self.mats[t.mul(gi, x)] {
                    return Err(Error::arg("matrices do not define an action"));
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn matrix(&self, g: &Perm) -> &Mat {
        &self.mats[self.group.index_of(g).expect("element of the acting group")]
    }

    pub fn matrix_at(&self, i: usize) -> &Mat {
        &self.mats[i]
    }

    pub fn apply(&self, g: &Perm, v: &[Fq]) -> Vec<Fq> {
        self.matrix(g).mul_vec(&self.field, v)
    }

    /// Points fixed by every element of `h`.
    pub fn fixed_subspace(&self, h: &PermGroup) -> Subspace {
        let mats: Vec<Mat> = h.generators().iter().map(|g| self.matrix(g).clone()).collect();
        fixed_subspace(&self.field, self.dim, &mats)
    }

    pub fn is_fixed(&self, h: &PermGroup, v: &[Fq]) -> bool {
        h.generators().iter().all(|g| self.apply(g, v) == v)
    }

    /// `Tr_K^H(a)`: the sum of `x a` over a left transversal of `K` in `H`.
    pub fn relative_trace(&self, h: &PermGroup, k: &PermGroup, a: &[Fq]) -> Result<Vec<Fq>> {
        if !self.is_fixed(k, a) {
            return Err(Error::arg("element is not fixed by the smaller group"));
        }
        let mut out = vec![0; self.dim];
        for x in h.left_transversal(k)? {
            self.field.axpy(&mut out, 1, &self.apply(&x, a));
        }
        Ok(out)
    }

    /// Image `Tr_K^H(V^K)` as a subspace.
    pub fn trace_image(&self, h: &PermGroup, k: &PermGroup) -> Result<Subspace> {
        let fixed = self.fixed_subspace(k);
        let images: Vec<Vec<Fq>> = fixed
            .basis()
            .iter()
            .map(|v| self.relative_trace(h, k, v))
            .collect::<Result<_>>()?;
        Ok(Subspace::span(&self.field, self.dim, &images))
    }

    /// Restriction to a subgroup.
    pub fn restrict(&self, h: &PermGroup) -> Result<LinearAction> {
        if !h.is_subgroup_of(&self.group) {
            return Err(Error::arg("not a subgroup of the acting group"));
        }
        let mats = h.elements().iter().map(|g| self.matrix(g).clone()).collect();
        Ok(LinearAction {
            field: self.field.clone(),
            dim: self.dim,
            group: h.clone(),
            mats,
        })
    }
}

/// Common fixed points of a family of linear maps.
pub fn fixed_subspace(f: &Field, dim: usize, maps: &[Mat]) -> Subspace {
    if maps.is_empty() {
        return Subspace::full(dim);
    }
    let id = Mat::identity(dim);
    let mut rows = Vec::with_capacity(maps.len() * dim);
    for m in maps {
        rows.extend(m.sub(f, &id).to_rows());
    }
    Subspace::span(f, dim, &Mat::from_rows(dim, &rows).kernel(f))
}

/// Free-function form of [`LinearAction::relative_trace`].
pub fn relative_trace(action: &LinearAction, h: &PermGroup, k: &PermGroup, a: &[Fq]) -> Result<Vec<Fq>> {
    action.relative_trace(h, k, a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c2() -> PermGroup {
        PermGroup::generate(2, &[Perm::parse_cycles("(1 2)", 2).unwrap()]).unwrap()
    }

    fn swap_action(f: &Field) -> LinearAction {
        LinearAction::from_fn(f.clone(), 2, &c2(), |g| {
            if g.is_identity() {
                Mat::identity(2)
            } else {
                Mat::from_rows(2, &[vec![0, 1], vec![1, 0]])
            }
        })
        .unwrap()
    }

    #[test]
    fn swap_fixes_diagonal() {
        let f = Field::prime(3).unwrap();
        let act = swap_action(&f);
        assert_eq!(act.fixed_subspace(&c2()), Subspace::span(&f, 2, &[vec![1, 1]]));
        assert_eq!(act.fixed_subspace(&PermGroup::trivial(2)), Subspace::full(2));
    }

    #[test]
    fn trace_from_trivial_subgroup() {
        let f = Field::prime(2).unwrap();
        let act = swap_action(&f);
        let one = PermGroup::trivial(2);
        // orbit sum of e_1
        assert_eq!(act.relative_trace(&c2(), &one, &[1, 0]).unwrap(), vec![1, 1]);
        // 2 * v = 0 in characteristic 2
        assert_eq!(act.relative_trace(&c2(), &one, &[1, 1]).unwrap(), vec![0, 0]);
        assert_eq!(act.relative_trace(&c2(), &c2(), &[1, 1]).unwrap(), vec![1, 1]);
        assert!(act.relative_trace(&c2(), &c2(), &[1, 0]).is_err());
    }

    #[test]
    fn rejects_non_action() {
        let f = Field::prime(3).unwrap();
        let r = LinearAction::from_fn(f, 1, &c2(), |g| {
            if g.is_identity() {
                Mat::identity(1)
            } else {
                Mat::zeros(1, 1)
            }
        });
        assert!(r.is_err());
    }
}
