use serde::Serialize;

use crate::algebra::{Elem, UnitSearch};
use crate::blocks::BlockData;
use crate::error::Result;
use crate::fusion::{thm14_hypothesis, FusionSystem, Thm14Verdict};
use crate::group::PermGroup;
use crate::stable::{bifree_stable_basis, criterion, lift_basis, ActionBasis, CriterionReport, InteriorAlgebra, Verdict};

use super::{search_hyperfocal, verify_hyperfocal, HyperfocalCandidate};

#[derive(Clone, Copy, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum StageStatus {
    Passed,
    Failed,
    Undetermined,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct Stage {
    pub name: String,
    pub status: StageStatus,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum ConjectureVerdict {
    Verified,
    Refuted,
    Undetermined,
    NotReached,
}

/// Transcript of the pipeline on one block and one choice of `D~`.
#[derive(Clone, Debug, Serialize)]
pub struct ConjectureReport {
    pub block: usize,
    pub principal: bool,
    pub prime: u64,
    pub field_order: usize,
    pub group_order: usize,
    pub defect_order: usize,
    pub source_dim: usize,
    pub dtilde_order: usize,
    pub dtilde_generators: Vec<String>,
    pub hyperfocal_order: usize,
    pub seed: u64,
    pub stages: Vec<Stage>,
    pub hypothesis: Option<Thm14Verdict>,
    pub hyperfocal_dim: Option<usize>,
    pub hyperfocal_method: Option<String>,
    pub criterion: Option<CriterionReport>,
    /// `D x^{D/D~} D`-stable unital basis of `A~`.
    pub hyperfocal_verdict: ConjectureVerdict,
    /// `D x D`-stable unital basis of `A`.
    pub source_verdict: ConjectureVerdict,
    /// Source-algebra coordinates of the lifted basis.
    pub source_basis: Option<Vec<Elem>>,
}

impl ConjectureReport {
    fn stage(&mut self, name: &str, status: StageStatus, detail: impl Into<String>) {
        self.stages.push(Stage {
            name: name.to_string(),
            status,
            detail: detail.into(),
        });
    }

    pub fn stage_status(&self, name: &str) -> Option<StageStatus> {
        self.stages.iter().find(|s| s.name == name).map(|s| s.status)
    }
}

/// Runs hyperfocal search (unless a candidate is given), the fusion
/// hypothesis, a stable basis of `A~`, the unit criterion, unitalization,
/// the lift to `A~ (x)_{D~} D` and an independent re-check of the lifted
/// basis inside `A`. Stage failures are recorded, not returned.
pub fn run_thm14(
    block: &BlockData,
    fusion: &FusionSystem,
    dtilde: &PermGroup,
    candidate: Option<HyperfocalCandidate>,
    seed: u64,
) -> Result<ConjectureReport> {
    let kg = &block.kg;
    let d = &block.defect_group;
    let hyp = fusion.hyperfocal();
    let mut rep = ConjectureReport {
        block: block.index,
        principal: block.principal,
        prime: kg.characteristic(),
        field_order: kg.field().size(),
        group_order: kg.group().order(),
        defect_order: d.order(),
        source_dim: block.source.dim(),
        dtilde_order: dtilde.order(),
        dtilde_generators: dtilde.generators().iter().map(|g| g.to_string()).collect(),
        hyperfocal_order: hyp.order(),
        seed,
        stages: Vec::new(),
        hypothesis: None,
        hyperfocal_dim: None,
        hyperfocal_method: None,
        criterion: None,
        hyperfocal_verdict: ConjectureVerdict::NotReached,
        source_verdict: ConjectureVerdict::NotReached,
        source_basis: None,
    };
    if !dtilde.is_subgroup_of(d) || !dtilde.is_normal_in(d) || !hyp.is_subgroup_of(dtilde) {
        rep.stage("hyperfocal_in_dtilde", StageStatus::Failed, "need hyp(F) <= D~ normal in D");
        return Ok(rep);
    }
    rep.stage("hyperfocal_in_dtilde", StageStatus::Passed, format!("|hyp| = {}, |D~| = {}", hyp.order(), dtilde.order()));

    let hv = thm14_hypothesis(fusion, dtilde)?;
    let status = if hv.holds { StageStatus::Passed } else { StageStatus::Failed };
    let detail = hv.counterexample.clone().unwrap_or_else(|| "subcategory equals its normalizer at D".into());
    rep.stage("thm14_hypothesis", status, detail);
    rep.hypothesis = Some(hv);

    let cand = match candidate {
        Some(c) => {
            let check = verify_hyperfocal(block, &c);
            if !check.accepted {
                rep.stage("hyperfocal_subalgebra", StageStatus::Failed, check.failure.unwrap_or_default());
                return Ok(rep);
            }
            c
        }
        None => {
            let search = search_hyperfocal(block, fusion, dtilde, seed)?;
            match search.candidate {
                Some(c) => c,
                None => {
                    rep.stage("hyperfocal_subalgebra", StageStatus::Undetermined, search.attempts.join("; "));
                    return Ok(rep);
                }
            }
        }
    };
    rep.stage("hyperfocal_subalgebra", StageStatus::Passed, format!("dim {} via {}", cand.space.dim(), cand.method));
    rep.hyperfocal_dim = Some(cand.space.dim());
    rep.hyperfocal_method = Some(cand.method.clone());

    let sub = kg.algebra().subalgebra(&cand.space, block.source_idempotent())?;
    let tilde = InteriorAlgebra::from_group_algebra_part(kg, &sub, d, dtilde)?;
    let basis = match bifree_stable_basis(&tilde, seed) {
        Ok(b) => b,
        Err(e) => {
            rep.stage("stable_basis", StageStatus::Failed, e.to_string());
            return Ok(rep);
        }
    };
    rep.stage("stable_basis", StageStatus::Passed, format!("{} orbits, bifree", basis.orbits().len()));

    let search = UnitSearch {
        seed,
        ..UnitSearch::default()
    };
    let cr = criterion(&tilde, &basis, &search)?;
    let unital = cr.unital_basis.clone();
    match cr.verdict {
        Verdict::Holds => rep.stage("criterion", StageStatus::Passed, format!("{} classes", cr.classes.len())),
        Verdict::Fails => {
            rep.stage("criterion", StageStatus::Failed, format!("class {} has no unit", cr.failing.unwrap_or(0)));
            rep.hyperfocal_verdict = ConjectureVerdict::Refuted;
        }
        Verdict::Undetermined => {
            rep.stage("criterion", StageStatus::Undetermined, "random unit search inconclusive");
            rep.hyperfocal_verdict = ConjectureVerdict::Undetermined;
        }
    }
    let construction_error = cr.construction_error.clone();
    rep.criterion = Some(cr);
    let Some(unital) = unital else {
        if let Some(m) = construction_error {
            rep.stage("unitalize", StageStatus::Undetermined, m);
            rep.hyperfocal_verdict = ConjectureVerdict::Undetermined;
        }
        return Ok(rep);
    };
    rep.stage("unitalize", StageStatus::Passed, format!("{} units", unital.len()));
    rep.hyperfocal_verdict = ConjectureVerdict::Verified;

    let omega = ActionBasis::new(&tilde, unital)?;
    let lifted = match lift_basis(&tilde, &omega, None) {
        Ok(l) => l,
        Err(e) => {
            rep.stage("lift", StageStatus::Failed, e.to_string());
            return Ok(rep);
        }
    };
    rep.stage("lift", StageStatus::Passed, format!("{} elements", lifted.basis.len()));

    // a (x) u  ->  a u  in kG, then into source coordinates.
    let a = kg.algebra();
    let da = tilde.dim();
    let mut in_source = Vec::with_capacity(lifted.basis.len());
    for v in lifted.basis.vectors() {
        let mut x = vec![0; kg.dim()];
        for (j, s) in lifted.crossed.transversal.iter().enumerate() {
            let part = &v[j * da..(j + 1) * da];
            if part.iter().all(|&c| c == 0) {
                continue;
            }
            let y = a.mul(&sub.to_parent(part), &kg.element(s));
            x = a.add(&x, &y);
        }
        match block.source.sub.from_parent(&x) {
            Some(c) => in_source.push(c),
            None => {
                rep.stage("reverify", StageStatus::Failed, "lifted element is not in A");
                rep.source_verdict = ConjectureVerdict::Undetermined;
                return Ok(rep);
            }
        }
    }
    let source_ia = InteriorAlgebra::source_algebra(block)?;
    match ActionBasis::new(&source_ia, in_source.clone()) {
        Ok(b) if b.is_unital(source_ia.algebra()) => {
            rep.stage("reverify", StageStatus::Passed, "D x D-stable, unital basis of A");
            rep.source_verdict = ConjectureVerdict::Verified;
            rep.source_basis = Some(in_source);
        }
        Ok(_) => {
            rep.stage("reverify", StageStatus::Failed, "image contains a non-unit");
            rep.source_verdict = ConjectureVerdict::Undetermined;
        }
        Err(e) => {
            rep.stage("reverify", StageStatus::Failed, e.to_string());
            rep.source_verdict = ConjectureVerdict::Undetermined;
        }
    }
    Ok(rep)
}

#[derive(Clone, Debug, Serialize)]
pub struct NilpotentSuiteReport {
    pub block: usize,
    pub hyperfocal_order: usize,
    pub nilpotent: bool,
    /// `"nilpotent"` (run with `D~ = 1`) or `"dtilde_equals_d"`.
    pub branch: String,
    pub run: ConjectureReport,
}

/// Nilpotent blocks run the pipeline with `D~ = 1`; the rest with `D~ = D`.
pub fn corollary15_suite(block: &BlockData, fusion: &FusionSystem, seed: u64) -> Result<NilpotentSuiteReport> {
    let hyp = fusion.hyperfocal();
    let nilpotent = hyp.is_trivial();
    let d = &block.defect_group;
    let (branch, dtilde) = if nilpotent {
        ("nilpotent", PermGroup::trivial(d.degree()))
    } else {
        ("dtilde_equals_d", d.clone())
    };
    let run = run_thm14(block, fusion, &dtilde, None, seed)?;
    Ok(NilpotentSuiteReport {
        block: block.index,
        hyperfocal_order: hyp.order(),
        nilpotent,
        branch: branch.into(),
        run,
    })
}
