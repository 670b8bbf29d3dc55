use crate::algebra::{Elem, FinAlgebra, LinearAction};
use crate::error::{Error, Result};
use crate::group::{Perm, PermGroup};
use crate::linalg::{unit_vector, Subspace};

use super::{ActionBasis, InteriorAlgebra};

/// `f(Omega)`: each orbit representative `omega` is replaced by the given
/// unit `f(omega)` fixed by `N(omega)`, and `f((x, y) omega) = (x, y) f(omega)`.
/// `units` pairs a member of each orbit with its unit.
pub fn unitalize(ia: &InteriorAlgebra, basis: &ActionBasis, units: &[(usize, Elem)]) -> Result<ActionBasis> {
    let a = ia.algebra();
    let action = ia.pair_action();
    let pg = action.group();
    if basis.group() != pg {
        return Err(Error::arg("basis belongs to a different action"));
    }
    let mut image: Vec<Option<Elem>> = vec![None; basis.len()];
    for orbit in basis.orbits() {
        let mut given = units.iter().filter(|(k, _)| orbit.binary_search(k).is_ok());
        let (rep, u) = given.next().ok_or_else(|| Error::arg("an orbit has no unit assigned"))?;
        if given.next().is_some() {
            return Err(Error::arg("an orbit has several units assigned"));
        }
        if !a.is_unit(u) {
            return Err(Error::arg("assigned element is not a unit"));
        }
        let stab = basis.stabilizer(*rep);
        if !action.is_fixed(&stab, u) {
            return Err(Error::arg("assigned unit is not fixed by the stabilizer"));
        }
        for g in pg.elements() {
            let k = basis.image(g, *rep);
            let v = action.apply(g, u);
            match &image[k] {
                Some(w) if *w != v => return Err(Error::internal("unit transport is not well defined")),
                Some(_) => {}
                None => image[k] = Some(v),
            }
        }
    }
    let vectors: Vec<Elem> = image.into_iter().map(|v| v.expect("orbits cover the basis")).collect();
    if Subspace::span(a.field(), a.dim(), &vectors).dim() != a.dim() {
        return Err(Error::Construction("transported units are linearly dependent".into()));
    }
    ActionBasis::from_action(action, vectors)
}

/// `A (x)_N G` with basis `b_k (x) s_j` at index `j * dim A + k`, `s_j` the
/// smallest element of each coset of `N`.
#[derive(Clone, Debug)]
pub struct CrossedProduct {
    pub interior: InteriorAlgebra,
    pub transversal: Vec<Perm>,
    base_dim: usize,
    base: InteriorAlgebra,
}

fn coset_reps(g: &PermGroup, n: &PermGroup) -> Vec<Perm> {
    let mut reps: Vec<Perm> = Vec::new();
    for x in g.elements() {
        if !reps.iter().any(|s| n.contains(&x.compose(&s.inverse()))) {
            reps.push(x.clone());
        }
    }
    reps
}

impl CrossedProduct {
    /// `a (x) g` in crossed-product coordinates.
    pub fn embed(&self, a: &[crate::field::Fq], g: &Perm) -> Elem {
        let base = &self.base;
        let n = base.normal();
        let j = self
            .transversal
            .iter()
            .position(|s| n.contains(&g.compose(&s.inverse())))
            .expect("transversal covers G");
        let m = g.compose(&self.transversal[j].inverse());
        let am = base.algebra().mul(a, base.sigma(&m).expect("g s^-1 in N"));
        let mut out = vec![0; self.base_dim * self.transversal.len()];
        out[j * self.base_dim..(j + 1) * self.base_dim].copy_from_slice(&am);
        out
    }

    pub fn base(&self) -> &InteriorAlgebra {
        &self.base
    }
}

/// The crossed product as a `G`-interior `G`-algebra.
pub fn crossed_product(ia: &InteriorAlgebra) -> Result<CrossedProduct> {
    let g = ia.group();
    let reps = coset_reps(g, ia.normal());
    let da = ia.dim();
    let dim = da * reps.len();
    let f = ia.field().clone();
    let a = ia.algebra();
    let conj = ia.conjugation();
    let proto = CrossedProduct {
        interior: ia.clone(),
        transversal: reps.clone(),
        base_dim: da,
        base: ia.clone(),
    };
    let mut consts = Vec::with_capacity(dim * dim);
    for si in reps.iter() {
        for k in 0..da {
            let bk = unit_vector(da, k);
            for sj in reps.iter() {
                for l in 0..da {
                    let bl = conj.apply(si, &unit_vector(da, l));
                    let prod = proto.embed(&a.mul(&bk, &bl), &si.compose(sj));
                    consts.push(prod.into_iter().enumerate().filter(|t| t.1 != 0).collect());
                }
            }
        }
    }
    let one = proto.embed(&a.one(), &g.identity());
    let alg = FinAlgebra::new(f.clone(), dim, consts, one)?;
    let sigma: Vec<Elem> = g.elements().iter().map(|x| proto.embed(&a.one(), x)).collect();
    let inverses: Vec<Elem> = g.elements().iter().map(|x| proto.embed(&a.one(), &x.inverse())).collect();
    let gconj = LinearAction::from_fn(f, dim, g, |x| {
        let xi = g.index_of(x).expect("element");
        let l = alg.left_matrix(&sigma[xi]);
        let r = alg.right_matrix(&inverses[xi]);
        l.mul(alg.field(), &r)
    })?;
    let interior = InteriorAlgebra::new(alg, g, g, sigma, gconj)?;
    Ok(CrossedProduct {
        interior,
        transversal: reps,
        base_dim: da,
        base: ia.clone(),
    })
}

/// `B = { omega (x) u : omega in Omega, u in S }` for a transversal `S` of
/// `N` in `G`, checked `G x G`-stable and unital.
#[derive(Clone, Debug)]
pub struct LiftedBasis {
    pub crossed: CrossedProduct,
    pub basis: ActionBasis,
    pub transversal: Vec<Perm>,
}

pub fn lift_basis(ia: &InteriorAlgebra, omega: &ActionBasis, transversal: Option<&[Perm]>) -> Result<LiftedBasis> {
    if omega.group() != ia.pair_group() {
        return Err(Error::pre("basis is not stable under G x^{G/N} G"));
    }
    if !omega.is_unital(ia.algebra()) {
        return Err(Error::pre("basis is not unital"));
    }
    let crossed = crossed_product(ia)?;
    let g = ia.group();
    let n = ia.normal();
    let s: Vec<Perm> = match transversal {
        Some(t) => t.to_vec(),
        None => crossed.transversal.clone(),
    };
    let covers = s.len() * n.order() == g.order()
        && s.iter().all(|u| g.contains(u))
        && s.iter().enumerate().all(|(i, u)| {
            s[..i].iter().all(|w| !n.contains(&u.compose(&w.inverse())))
        });
    if !covers {
        return Err(Error::arg("not a transversal of N in G"));
    }
    let mut vectors = Vec::with_capacity(omega.len() * s.len());
    for u in &s {
        for w in omega.vectors() {
            vectors.push(crossed.embed(w, u));
        }
    }
    let basis = ActionBasis::new(&crossed.interior, vectors)?;
    if !basis.is_unital(crossed.interior.algebra()) {
        return Err(Error::internal("lifted basis has a non-unit"));
    }
    Ok(LiftedBasis {
        crossed,
        basis,
        transversal: s,
    })
}
