use serde::Serialize;

use crate::algebra::LinearAction;
use crate::blocks::{points, BlockData};
use crate::error::{Error, Result};
use crate::fusion::{FusionSystem, Morphism};
use crate::group::{GroupHom, PermGroup};

/// Local points of one subgroup on a source algebra.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct LocalPointData {
    pub subgroup_order: usize,
    pub subgroup_generators: Vec<String>,
    pub points: usize,
    pub local_points: usize,
    /// Sorted multiplicities of the local points.
    pub local_multiplicities: Vec<usize>,
    /// Sum of all multiplicities.
    pub total_multiplicity: usize,
}

/// Conjugation action of `R` on the source algebra.
pub fn source_conjugation(block: &BlockData, r: &PermGroup) -> Result<LinearAction> {
    let kg = &block.kg;
    let src = &block.source;
    LinearAction::from_fn(kg.field().clone(), src.dim(), r, |u| src.translation_matrix(kg, u, u))
}

pub fn local_point_data(block: &BlockData, r: &PermGroup, seed: u64) -> Result<LocalPointData> {
    let action = source_conjugation(block, r)?;
    let pts = points(block.source.algebra(), &action, r, seed)?;
    let mut local: Vec<usize> = pts.iter().filter(|p| p.local).map(|p| p.multiplicity).collect();
    local.sort_unstable();
    Ok(LocalPointData {
        subgroup_order: r.order(),
        subgroup_generators: r.generators().iter().map(|g| g.to_string()).collect(),
        points: pts.len(),
        local_points: local.len(),
        local_multiplicities: local,
        total_multiplicity: pts.iter().map(|p| p.multiplicity).sum(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct MoritaCheckReport {
    pub fusion_transported: bool,
    pub local_point_counts_match: bool,
    pub multiplicities_match: bool,
    /// Subgroups with several local points sharing a multiplicity, where the
    /// matching of points is not determined.
    pub ambiguous: Vec<String>,
    pub mismatches: Vec<String>,
    /// Necessary conditions all hold; never a proof of equivalence.
    pub consistent: bool,
}

fn transport(lambda: &GroupHom, fa: &FusionSystem, fb: &FusionSystem, phi: &Morphism) -> Option<Morphism> {
    let map = |u: usize| -> usize { lambda.image_indices()[u] };
    let src_a = fa.object_set(phi.source);
    let mut pairs: Vec<(usize, usize)> = src_a.iter().zip(&phi.images).map(|(&u, &v)| (map(u), map(v))).collect();
    pairs.sort_unstable();
    let mut tgt: Vec<usize> = fa.object_set(phi.target).iter().map(|&u| map(u)).collect();
    tgt.sort_unstable();
    let src: Vec<usize> = pairs.iter().map(|p| p.0).collect();
    Some(Morphism {
        source: fb.object_index_of_set(&src)?,
        target: fb.object_index_of_set(&tgt)?,
        images: pairs.into_iter().map(|p| p.1).collect(),
    })
}

/// Necessary conditions for a basic Morita equivalence inducing `lambda:
/// D -> D'`: `lambda` carries the fusion system of the first block onto that
/// of the second, and local points correspond with equal multiplicities.
pub fn morita_necessary_check(a: &BlockData, b: &BlockData, lambda: &GroupHom, seed: u64) -> Result<MoritaCheckReport> {
    let (da, db) = (&a.defect_group, &b.defect_group);
    if lambda.domain() != da || lambda.codomain() != db || !lambda.is_injective() || da.order() != db.order() {
        return Err(Error::arg("lambda is not an isomorphism between the defect groups"));
    }
    let fa = FusionSystem::block_fusion(a)?;
    let fb = FusionSystem::block_fusion(b)?;
    let mut mismatches = Vec::new();
    let n = fa.objects().len();
    let mut fusion_ok = true;
    'outer: for i in 0..n {
        for j in 0..n {
            let moved: Option<Vec<Morphism>> = fa.hom(i, j).iter().map(|phi| transport(lambda, &fa, &fb, phi)).collect();
            let Some(mut moved) = moved else {
                mismatches.push("lambda does not map subgroups onto subgroups".into());
                fusion_ok = false;
                break 'outer;
            };
            moved.sort();
            let (bi, bj) = match moved.first() {
                Some(m) => (m.source, m.target),
                None => {
                    let tr = transport(lambda, &fa, &fb, &fa.identity(i)).expect("subgroup image");
                    let tj = transport(lambda, &fa, &fb, &fa.identity(j)).expect("subgroup image");
                    (tr.source, tj.source)
                }
            };
            if fb.hom(bi, bj) != moved.as_slice() {
                mismatches.push(format!(
                    "hom-sets differ between subgroups of orders {} and {}",
                    fa.object(i).order(),
                    fa.object(j).order()
                ));
                fusion_ok = false;
                break 'outer;
            }
        }
    }
    let mut counts_ok = true;
    let mut mults_ok = true;
    let mut ambiguous = Vec::new();
    for r in fa.objects() {
        let images: Vec<_> = r.elements().iter().map(|x| lambda.apply(x).expect("domain element").clone()).collect();
        let r2 = PermGroup::from_elements(db.degree(), images)?;
        let pa = local_point_data(a, r, seed)?;
        let pb = local_point_data(b, &r2, seed)?;
        let label = format!("R of order {} <{}>", r.order(), pa.subgroup_generators.join(", "));
        if pa.local_points != pb.local_points {
            counts_ok = false;
            mismatches.push(format!("{label}: {} vs {} local points", pa.local_points, pb.local_points));
        } else if pa.local_multiplicities != pb.local_multiplicities {
            mults_ok = false;
            mismatches.push(format!(
                "{label}: multiplicities {:?} vs {:?}",
                pa.local_multiplicities, pb.local_multiplicities
            ));
        }
        if pa.local_multiplicities.windows(2).any(|w| w[0] == w[1]) {
            ambiguous.push(label);
        }
    }
    Ok(MoritaCheckReport {
        fusion_transported: fusion_ok,
        local_point_counts_match: counts_ok,
        multiplicities_match: mults_ok,
        ambiguous,
        consistent: mismatches.is_empty(),
        mismatches,
    })
}
