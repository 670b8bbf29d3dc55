use serde::Serialize;

use crate::algebra::{idempotent_conjugacy, is_primitive_idempotent, primitive_idempotent_decomposition, Elem};
use crate::blocks::{brauer_nonzero, fixed_block_algebra, BlockData};
use crate::error::{Error, Result};
use crate::fusion::FusionSystem;
use crate::group::PermGroup;
use crate::linalg::{is_zero, Subspace};

/// A proposed hyperfocal subalgebra: a subspace of the source algebra,
/// in `kG` coordinates, for a normal subgroup `D~` of `D`.
#[derive(Clone, Debug)]
pub struct HyperfocalCandidate {
    pub dtilde: PermGroup,
    pub space: Subspace,
    /// How the candidate was produced.
    pub method: String,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct HyperfocalCheck {
    pub accepted: bool,
    /// The first failed condition.
    pub failure: Option<String>,
}

impl HyperfocalCheck {
    fn fail(msg: impl Into<String>) -> Self {
        HyperfocalCheck {
            accepted: false,
            failure: Some(msg.into()),
        }
    }
}

/// Checks that the candidate is a unitary, `D`-stable subalgebra of `A`
/// meeting `D l` in `D~ l` and with `A` the direct sum of `A~ u` over a
/// transversal of `D~` in `D`.
pub fn verify_hyperfocal(block: &BlockData, c: &HyperfocalCandidate) -> HyperfocalCheck {
    let kg = &block.kg;
    let a = kg.algebra();
    let f = kg.field();
    let d = &block.defect_group;
    let dt = &c.dtilde;
    let l = block.source_idempotent();
    let whole = block.source.sub.space();
    if c.space.ambient() != kg.dim() {
        return HyperfocalCheck::fail("candidate lives in the wrong ambient space");
    }
    if !dt.is_subgroup_of(d) || !dt.is_normal_in(d) {
        return HyperfocalCheck::fail("D~ is not a normal subgroup of D");
    }
    if !c.space.is_subspace_of(f, whole) {
        return HyperfocalCheck::fail("candidate is not inside the source algebra");
    }
    if !c.space.contains(f, l) {
        return HyperfocalCheck::fail("not unitary: l is missing");
    }
    let basis = c.space.basis();
    for x in basis {
        for y in basis {
            if !c.space.contains(f, &a.mul(x, y)) {
                return HyperfocalCheck::fail("not closed under multiplication");
            }
        }
    }
    for u in d.generators() {
        if basis.iter().any(|x| !c.space.contains(f, &kg.conjugate(u, x))) {
            return HyperfocalCheck::fail(format!("not stable under conjugation by {u}"));
        }
    }
    for u in d.elements() {
        let ul = a.mul(&kg.element(u), l);
        if c.space.contains(f, &ul) != dt.contains(u) {
            return HyperfocalCheck::fail(format!("intersection with D l is not D~ l at {u}"));
        }
    }
    let index = d.order() / dt.order();
    if c.space.dim() * index != whole.dim() {
        return HyperfocalCheck::fail(format!(
            "dimension {} times index {index} is not dim A = {}",
            c.space.dim(),
            whole.dim()
        ));
    }
    let transversal = match d.left_transversal(dt) {
        Ok(t) => t,
        Err(e) => return HyperfocalCheck::fail(e.to_string()),
    };
    let mut vecs = Vec::with_capacity(whole.dim());
    for u in &transversal {
        let ue = kg.element(u);
        vecs.extend(basis.iter().map(|x| a.mul(x, &ue)));
    }
    if Subspace::span(f, kg.dim(), &vecs).dim() != whole.dim() {
        return HyperfocalCheck::fail("the translates A~ u do not span A");
    }
    HyperfocalCheck {
        accepted: true,
        failure: None,
    }
}

#[derive(Clone, Debug)]
pub struct HyperfocalSearch {
    pub candidate: Option<HyperfocalCandidate>,
    /// One line per tried route.
    pub attempts: Vec<String>,
}

/// Looks for a hyperfocal subalgebra for `D~`. With `D~ = D` it is `A`.
/// Otherwise every normal `H` of `G` with `H n D = D~` and `HD = G` is
/// tried: a primitive idempotent `i` of `(kHb)^D` surviving `Br_D` and
/// primitive in `(kGb)^D` is conjugated onto `l`, carrying `i kH i` into
/// `A`. Candidates are returned only after [`verify_hyperfocal`].
pub fn search_hyperfocal(block: &BlockData, fusion: &FusionSystem, dtilde: &PermGroup, seed: u64) -> Result<HyperfocalSearch> {
    let d = &block.defect_group;
    if !dtilde.is_subgroup_of(d) || !dtilde.is_normal_in(d) {
        return Err(Error::pre("D~ is not a normal subgroup of D"));
    }
    if !fusion.hyperfocal().is_subgroup_of(dtilde) {
        return Err(Error::pre("hyp(F) is not contained in D~"));
    }
    let mut attempts = Vec::new();
    if dtilde.order() == d.order() {
        let c = HyperfocalCandidate {
            dtilde: dtilde.clone(),
            space: block.source.sub.space().clone(),
            method: "whole source algebra".into(),
        };
        let check = verify_hyperfocal(block, &c);
        attempts.push(format!("D~ = D: {}", describe(&check)));
        return Ok(HyperfocalSearch {
            candidate: check.accepted.then_some(c),
            attempts,
        });
    }
    let kg = &block.kg;
    let g = kg.group();
    let a = kg.algebra();
    let b = &block.idempotent;
    let l = block.source_idempotent();
    let big = fixed_block_algebra(kg, b, d)?;
    let l_big = big.from_parent(l).ok_or_else(|| Error::internal("l is not in (kGb)^D"))?;
    if block.source.dim() == d.order() {
        let vecs: Vec<Elem> = dtilde.elements().iter().map(|u| a.mul(l, &kg.element(u))).collect();
        let c = HyperfocalCandidate {
            dtilde: dtilde.clone(),
            space: Subspace::span(kg.field(), kg.dim(), &vecs),
            method: "span of l u for u in D~".into(),
        };
        let check = verify_hyperfocal(block, &c);
        attempts.push(format!("dim A = |D|, l kD~: {}", describe(&check)));
        if check.accepted {
            return Ok(HyperfocalSearch {
                candidate: Some(c),
                attempts,
            });
        }
    }
    for h in g.all_subgroups() {
        let meet: Vec<_> = h.elements().iter().filter(|x| d.contains(x)).cloned().collect();
        if meet.len() != dtilde.order() || !meet.iter().all(|x| dtilde.contains(x)) {
            continue;
        }
        if h.order() * d.order() != g.order() * dtilde.order() || !h.is_normal_in(g) {
            continue;
        }
        let tag = format!("H of order {}", h.order());
        if kg.restrict_to(&h, b).is_none() {
            attempts.push(format!("{tag}: b is not supported on H"));
            continue;
        }
        let sums: Vec<Elem> = kg
            .orbit_sums(d)
            .into_iter()
            .filter(|s| kg.restrict_to(&h, s).is_some())
            .map(|s| a.mul(b, &s))
            .collect();
        let small = a.subalgebra(&Subspace::span(kg.field(), kg.dim(), &sums), b)?;
        let dec = primitive_idempotent_decomposition(&small.algebra, &small.algebra.one(), seed)?;
        let mut found = false;
        for ic in &dec.idempotents {
            let i = small.to_parent(ic);
            if !brauer_nonzero(kg, &i, d)? {
                continue;
            }
            let Some(i_big) = big.from_parent(&i) else { continue };
            if !is_primitive_idempotent(&big.algebra, &i_big)? {
                continue;
            }
            let Some(q) = idempotent_conjugacy(&big.algebra, &l_big, &i_big, seed)? else {
                continue;
            };
            let qinv = big.algebra.inverse(&q).ok_or_else(|| Error::internal("conjugator is not a unit"))?;
            let (q, qinv) = (big.to_parent(&q), big.to_parent(&qinv));
            let vecs: Vec<Elem> = h
                .elements()
                .iter()
                .map(|x| a.mul3(&q, &a.mul3(&i, &kg.element(x), &i), &qinv))
                .filter(|v| !is_zero(v))
                .collect();
            let c = HyperfocalCandidate {
                dtilde: dtilde.clone(),
                space: Subspace::span(kg.field(), kg.dim(), &vecs),
                method: format!("transported corner of kH, |H| = {}", h.order()),
            };
            let check = verify_hyperfocal(block, &c);
            attempts.push(format!("{tag}: {}", describe(&check)));
            if check.accepted {
                return Ok(HyperfocalSearch {
                    candidate: Some(c),
                    attempts,
                });
            }
            found = true;
        }
        if !found {
            attempts.push(format!("{tag}: no idempotent of (kHb)^D conjugate to l"));
        }
    }
    if attempts.is_empty() {
        attempts.push("no normal H with H n D = D~ and HD = G".into());
    }
    Ok(HyperfocalSearch {
        candidate: None,
        attempts,
    })
}

fn describe(c: &HyperfocalCheck) -> String {
    match &c.failure {
        None => "accepted".into(),
        Some(m) => format!("rejected ({m})"),
    }
}
