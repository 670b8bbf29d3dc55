use crate::algebra::{Elem, FinAlgebra, LinearAction, SubAlgebra};
use crate::blocks::{BlockData, GroupAlgebra};
use crate::error::{Error, Result};
use crate::field::{Field, Fq};
use crate::group::{Perm, PermGroup};
use crate::linalg::{unit_vector, Mat};

/// An `N`-interior `G`-algebra: a structural map `sigma: N -> A^x` and a
/// `G`-action by algebra automorphisms restricting to conjugation by
/// `sigma` on `N`.
#[derive(Clone, Debug)]
pub struct InteriorAlgebra {
    algebra: FinAlgebra,
    group: PermGroup,
    normal: PermGroup,
    /// Indexed like the elements of `N`.
    sigma: Vec<Elem>,
    conj: LinearAction,
    pairs: PermGroup,
    pair_action: LinearAction,
}

impl InteriorAlgebra {
    pub fn new(algebra: FinAlgebra, group: &PermGroup, normal: &PermGroup, sigma: Vec<Elem>, conj: LinearAction) -> Result<Self> {
        if !normal.is_normal_in(group) {
            return Err(Error::arg("N is not normal in G"));
        }
        if sigma.len() != normal.order() || conj.group() != group || conj.dim() != algebra.dim() {
            return Err(Error::arg("structural map or action has the wrong shape"));
        }
        let f = algebra.field().clone();
        let nt = normal.table();
        for x in normal.generators() {
            let xi = normal.index_of(x).expect("generator");
            if !algebra.is_unit(&sigma[xi]) {
                return Err(Error::arg("structural map does not land in units"));
            }
            for y in 0..normal.order() {
                if algebra.mul(&sigma[xi], &sigma[y]) != sigma[nt.mul(xi, y)] {
                    return Err(Error::arg("structural map is not a homomorphism"));
                }
            }
        }
        if sigma[0] != algebra.one() {
            return Err(Error::arg("structural map sends 1 to a non-identity"));
        }
        let basis: Vec<Elem> = (0..algebra.dim()).map(|i| algebra.basis_element(i)).collect();
        for g in group.generators() {
            let m = conj.matrix(g);
            for a in &basis {
                for b in &basis {
                    let lhs = m.mul_vec(&f, &algebra.mul(a, b));
                    let rhs = algebra.mul(&m.mul_vec(&f, a), &m.mul_vec(&f, b));
                    if lhs != rhs {
                        return Err(Error::arg("G does not act by algebra automorphisms"));
                    }
                }
            }
            for (k, n) in normal.elements().iter().enumerate() {
                let gn = g.conjugate(n);
                let gi = normal.index_of(&gn).expect("N is normal");
                if m.mul_vec(&f, &sigma[k]) != sigma[gi] {
                    return Err(Error::arg("structural map is not G-equivariant"));
                }
            }
        }
        for n in normal.generators() {
            let k = normal.index_of(n).expect("generator");
            let inv = algebra.inverse(&sigma[k]).expect("unit");
            let m = conj.matrix(n);
            for a in &basis {
                if m.mul_vec(&f, a) != algebra.mul3(&sigma[k], a, &inv) {
                    return Err(Error::arg("action of N is not conjugation by the structural map"));
                }
            }
        }
        let pairs = group.bar_fiber_subgroup(normal)?;
        let deg = group.degree();
        let pair_action = LinearAction::from_fn(f, algebra.dim(), &pairs, |x| {
            let (u, v) = x.split_pair(deg);
            let n = u.compose(&v.inverse());
            let s = &sigma[normal.index_of(&n).expect("uv^-1 in N")];
            algebra.left_matrix(s).mul(algebra.field(), conj.matrix(&v))
        })?;
        Ok(InteriorAlgebra {
            algebra,
            group: group.clone(),
            normal: normal.clone(),
            sigma,
            conj,
            pairs,
            pair_action,
        })
    }

    /// A unitary subalgebra `S` of `kH` (identity `l`), stable under
    /// conjugation by `G <= H` and containing `N l` for `N <= G`, with
    /// `sigma(u) = u l` and `G` acting by conjugation.
    pub fn from_group_algebra_part(kh: &GroupAlgebra, sub: &SubAlgebra, group: &PermGroup, normal: &PermGroup) -> Result<Self> {
        let l = sub.to_parent(&sub.algebra.one());
        let ka = kh.algebra();
        let sigma: Vec<Elem> = normal
            .elements()
            .iter()
            .map(|u| {
                let ul = ka.mul(&kh.element(u), &l);
                sub.from_parent(&ul).ok_or_else(|| Error::arg("u l is not in the subalgebra"))
            })
            .collect::<Result<_>>()?;
        let d = sub.algebra.dim();
        let failed = std::cell::Cell::new(false);
        let conj = LinearAction::from_fn(ka.field().clone(), d, group, |g| {
            let cols: Vec<Elem> = (0..d)
                .map(|k| {
                    let x = sub.to_parent(&unit_vector(d, k));
                    sub.from_parent(&kh.conjugate(g, &x)).unwrap_or_else(|| {
                        failed.set(true);
                        vec![0; d]
                    })
                })
                .collect();
            Mat::from_cols(d, &cols)
        });
        if failed.get() {
            return Err(Error::arg("subalgebra is not stable under conjugation"));
        }
        Self::new(sub.algebra.clone(), group, normal, sigma, conj?)
    }

    /// `kG` as a `G`-interior `G`-algebra.
    pub fn group_algebra(kg: &GroupAlgebra) -> Result<Self> {
        let a = kg.algebra();
        let whole = a.subalgebra(&crate::linalg::Subspace::full(a.dim()), &a.one())?;
        Self::from_group_algebra_part(kg, &whole, kg.group(), kg.group())
    }

    /// `kH` for `H <= G` as an `H`-interior `G`-algebra, with `H` normal in `G`.
    pub fn subgroup_algebra(kg: &GroupAlgebra, h: &PermGroup) -> Result<Self> {
        let a = kg.algebra();
        let vecs: Vec<Elem> = h.elements().iter().map(|x| kg.element(x)).collect();
        let space = crate::linalg::Subspace::span(kg.field(), a.dim(), &vecs);
        let sub = a.subalgebra(&space, &a.one())?;
        Self::from_group_algebra_part(kg, &sub, kg.group(), h)
    }

    /// The source algebra of a block as a `D`-interior `D`-algebra.
    pub fn source_algebra(block: &BlockData) -> Result<Self> {
        let d = &block.defect_group;
        Self::from_group_algebra_part(&block.kg, &block.source.sub, d, d)
    }

    pub fn algebra(&self) -> &FinAlgebra {
        &self.algebra
    }

    pub fn field(&self) -> &Field {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn normal(&self) -> &PermGroup {
        &self.normal
    }

    pub fn sigma(&self, n: &Perm) -> Option<&Elem> {
        self.normal.index_of(n).map(|k| &self.sigma[k])
    }

    /// The `G`-action by automorphisms.
    pub fn conjugation(&self) -> &LinearAction {
        &self.conj
    }

    /// `G x^{G/N} G`, pairs encoded by [`Perm::direct_pair`].
    pub fn pair_group(&self) -> &PermGroup {
        &self.pairs
    }

    /// `(u, v) a = sigma(u v^-1) . (v a)`.
    pub fn pair_action(&self) -> &LinearAction {
        &self.pair_action
    }

    pub fn pair(&self, u: &Perm, v: &Perm) -> Perm {
        Perm::direct_pair(u, v)
    }

    pub fn act(&self, pair: &Perm, a: &[Fq]) -> Elem {
        self.pair_action.apply(pair, a)
    }

    pub fn is_p_group_setting(&self) -> bool {
        self.group.is_p_group(self.field().characteristic())
    }
}
