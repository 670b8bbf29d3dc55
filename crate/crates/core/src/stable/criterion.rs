use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{idempotent_conjugacy, primitive_pair_link_in, unit_in_subspace, Elem, UnitSearch, UnitSearchOutcome};
use crate::blocks::brauer_kernel;
use crate::error::{Error, Result};
use crate::field::Fq;
use crate::group::{GroupHom, PermGroup};
use crate::linalg::Subspace;

use super::{find_stable_basis, h_classes, iso_to_subgroup, subgroup_to_iso, unitalize, ActionBasis, InteriorAlgebra};

/// `dim A(phi)` for `Delta = Delta(phi)`: `dim A^Delta` minus the dimension
/// of the sum of traces from maximal subgroups.
pub fn brauer_quotient_dim_of(ia: &InteriorAlgebra, delta: &PermGroup) -> Result<usize> {
    let p = ia.field().characteristic();
    if !delta.is_p_group(p) {
        return Err(Error::arg("Brauer quotients need a p-subgroup"));
    }
    if !delta.is_subgroup_of(ia.pair_group()) {
        return Err(Error::arg("subgroup is not inside G x^{G/N} G"));
    }
    let act = ia.pair_action().restrict(delta)?;
    let fixed = act.fixed_subspace(delta).dim();
    let kernel = brauer_kernel(&act, delta)?.dim();
    Ok(fixed - kernel)
}

pub fn brauer_quotient_dim(ia: &InteriorAlgebra, phi: &GroupHom) -> Result<usize> {
    let delta = iso_to_subgroup(phi, Some((ia.group(), ia.normal())))?;
    brauer_quotient_dim_of(ia, &delta)
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Fails,
    Undetermined,
}

/// One class of `phi` (equivalently of `Delta(phi)` up to conjugacy).
#[derive(Clone, Debug, Serialize)]
pub struct PhiClass {
    pub order: usize,
    /// `(phi(u), u)` generators of `Delta(phi)`.
    pub generators: Vec<String>,
    pub fixed_dim: usize,
    pub brauer_quotient_dim: usize,
    /// `None` when `A(phi) = 0`, where nothing is required.
    pub unit_search: Option<UnitSearchOutcome>,
    #[serde(skip)]
    pub subgroup: PermGroup,
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionReport {
    pub verdict: Verdict,
    pub classes: Vec<PhiClass>,
    /// Index into `classes` of the first class without a unit.
    pub failing: Option<usize>,
    /// On success: a unital stable basis as coordinate vectors.
    pub unital_basis: Option<Vec<Elem>>,
    /// On success, when transporting units failed to give a basis.
    pub construction_error: Option<String>,
}

/// A stable basis, checked bifree.
pub fn bifree_stable_basis(ia: &InteriorAlgebra, seed: u64) -> Result<ActionBasis> {
    let vecs = find_stable_basis(ia.pair_action(), seed).map_err(|e| Error::pre(format!("no stable basis: {e}")))?;
    let basis = ActionBasis::new(ia, vecs)?;
    if !basis.is_bifree(ia) {
        return Err(Error::pre("stable basis is not bifree"));
    }
    Ok(basis)
}

/// For each class of `phi` with `A(phi) != 0`, searches `A^{Delta(phi)}`
/// for a unit. All found: a unital stable basis is assembled.
pub fn criterion(ia: &InteriorAlgebra, basis: &ActionBasis, search: &UnitSearch) -> Result<CriterionReport> {
    if !basis.is_bifree(ia) {
        return Err(Error::pre("criterion needs a bifree stable basis"));
    }
    let a = ia.algebra();
    let deg = ia.group().degree();
    let pairs = ia.pair_group();
    let mut classes = Vec::new();
    let mut failing = None;
    let mut undetermined = false;
    for (ci, h) in h_classes(pairs, deg).into_iter().enumerate() {
        subgroup_to_iso(&h, ia.group(), ia.normal())?;
        let act = ia.pair_action().restrict(&h)?;
        let fixed = act.fixed_subspace(&h);
        let bq = if h.is_p_group(ia.field().characteristic()) {
            brauer_quotient_dim_of(ia, &h)?
        } else {
            return Err(Error::arg("G must be a p-group for the criterion"));
        };
        let outcome = if bq > 0 {
            let opts = UnitSearch {
                seed: search.seed.wrapping_add(ci as u64),
                ..search.clone()
            };
            let o = unit_in_subspace(a, &fixed, &opts)?;
            match o {
                UnitSearchOutcome::NoneExists if failing.is_none() => failing = Some(ci),
                UnitSearchOutcome::Undetermined { .. } => undetermined = true,
                _ => {}
            }
            Some(o)
        } else {
            None
        };
        classes.push(PhiClass {
            order: h.order(),
            generators: h.generators().iter().map(|g| g.to_string()).collect(),
            fixed_dim: fixed.dim(),
            brauer_quotient_dim: bq,
            unit_search: outcome,
            subgroup: h,
        });
    }
    let verdict = if failing.is_some() {
        Verdict::Fails
    } else if undetermined {
        Verdict::Undetermined
    } else {
        Verdict::Holds
    };
    let mut report = CriterionReport {
        verdict,
        classes,
        failing,
        unital_basis: None,
        construction_error: None,
    };
    if report.verdict == Verdict::Holds {
        match unital_basis_search(ia, basis, &report.classes, search) {
            Ok(b) => report.unital_basis = Some(b.into_vectors()),
            Err(Error::Construction(m)) => report.construction_error = Some(m),
            Err(e) => return Err(e),
        }
    }
    Ok(report)
}

/// Unit choices per orbit: the transported witness first, then random units
/// fixed by the stabilizer, accepted greedily while the images stay
/// independent. Restarts reshuffle the random candidates.
fn unital_basis_search(ia: &InteriorAlgebra, basis: &ActionBasis, classes: &[PhiClass], search: &UnitSearch) -> Result<ActionBasis> {
    const RESTARTS: u64 = 8;
    let a = ia.algebra();
    let f = a.field();
    let action = ia.pair_action();
    let pairs = ia.pair_group();
    let q = f.size() as u64;
    let mut plan = Vec::new();
    for orbit in basis.orbits() {
        let rep = orbit[0];
        let stab = basis.stabilizer(rep);
        let witness = classes.iter().find_map(|c| {
            let x = pairs.conjugating_element(&c.subgroup, &stab)?;
            let u = c.unit_search.as_ref()?.unit()?;
            Some(ia.act(&x, u))
        });
        plan.push((rep, orbit.len(), action.fixed_subspace(&stab), witness));
    }
    for restart in 0..RESTARTS {
        let mut rng = ChaCha8Rng::seed_from_u64(search.seed ^ (restart << 32));
        let mut span = Subspace::zero(a.dim());
        let mut chosen = Vec::new();
        for (rep, len, fixed, witness) in &plan {
            let mut candidates: Vec<Elem> = witness.iter().cloned().collect();
            for _ in 0..search.random_trials {
                let coords: Vec<Fq> = (0..fixed.dim()).map(|_| rng.gen_range(0..q) as Fq).collect();
                candidates.push(fixed.combine(f, &coords));
            }
            let accepted = candidates.into_iter().find_map(|u| {
                if !a.is_unit(&u) {
                    return None;
                }
                let images: Vec<Elem> = pairs.elements().iter().map(|g| action.apply(g, &u)).collect();
                let grown = span.sum(f, &Subspace::span(f, a.dim(), &images));
                (grown.dim() == span.dim() + len).then_some((u, grown))
            });
            match accepted {
                Some((u, grown)) => {
                    span = grown;
                    chosen.push((*rep, u));
                }
                None => break,
            }
        }
        if chosen.len() == plan.len() {
            return unitalize(ia, basis, &chosen);
        }
    }
    Err(Error::Construction(format!(
        "no independent choice of units found after {RESTARTS} restarts"
    )))
}

/// `(s, s')` with `s in i A^{Delta(phi)} j`, `s' in j A^{Delta(phi^-1)} i`,
/// `s s' = i`, `s' s = j`; `r = s + (1 - i) q (1 - j)` and its inverse.
#[derive(Clone, Debug)]
pub struct Isofusion {
    pub s: Elem,
    pub s_prime: Elem,
    pub r: Option<Elem>,
    pub r_inverse: Option<Elem>,
}

fn product_corner(ia: &InteriorAlgebra, left: &[Fq], space: &Subspace, right: &[Fq]) -> Subspace {
    let a = ia.algebra();
    let vecs: Vec<Elem> = space.basis().iter().map(|b| a.mul3(left, b, right)).collect();
    Subspace::span(a.field(), a.dim(), &vecs)
}

pub fn isofusion_factorize(ia: &InteriorAlgebra, i: &[Fq], j: &[Fq], phi: &GroupHom, seed: u64) -> Result<Option<Isofusion>> {
    let a = ia.algebra();
    if !a.is_idempotent(i) || !a.is_idempotent(j) || crate::linalg::is_zero(i) || crate::linalg::is_zero(j) {
        return Err(Error::arg("i and j must be nonzero idempotents"));
    }
    let fiber = Some((ia.group(), ia.normal()));
    let d = iso_to_subgroup(phi, fiber)?;
    let dinv = iso_to_subgroup(&phi.inverse()?, fiber)?;
    let act = ia.pair_action();
    let left = product_corner(ia, i, &act.fixed_subspace(&d), j);
    let right = product_corner(ia, j, &act.fixed_subspace(&dinv), i);
    let Some((s, s_prime)) = primitive_pair_link_in(a, i, j, &left, &right) else {
        return Ok(None);
    };
    let (r, r_inverse) = match idempotent_conjugacy(a, i, j, seed)? {
        Some(q) => {
            let qinv = a.inverse(&q).ok_or_else(|| Error::internal("conjugating element is not a unit"))?;
            let ci = a.sub(&a.one(), i);
            let cj = a.sub(&a.one(), j);
            let r = a.add(&s, &a.mul3(&ci, &q, &cj));
            let rp = a.add(&s_prime, &a.mul3(&cj, &qinv, &ci));
            if a.mul(&r, &rp) != a.one() || a.mul(&rp, &r) != a.one() {
                return Err(Error::internal("assembled r is not inverted by r'"));
            }
            (Some(r), Some(rp))
        }
        None => (None, None),
    };
    Ok(Some(Isofusion { s, s_prime, r, r_inverse }))
}
