use crate::algebra::{primitive_idempotent_decomposition, Elem, FinAlgebra, LinearAction, SubAlgebra};
use crate::algebra::primitive_pair_link as idempotent_link;
use crate::error::{Error, Result};
use crate::field::Fq;
use crate::group::PermGroup;
use crate::linalg::Subspace;

/// A point of `R` on `B`: a `(B^R)^x`-conjugacy class of primitive
/// idempotents of `B^R`, stored by a representative in `B` coordinates.
#[derive(Clone, Debug)]
pub struct Point {
    pub subgroup: PermGroup,
    pub representative: Elem,
    /// Members of the class in a primitive decomposition of `1`.
    pub multiplicity: usize,
    /// `Br_R` does not vanish on the point.
    pub local: bool,
}

fn fixed_algebra(b: &FinAlgebra, action: &LinearAction, r: &PermGroup) -> Result<SubAlgebra> {
    b.subalgebra(&action.fixed_subspace(r), &b.one())
}

/// `sum_Q Tr_Q^R(B^Q)` over the maximal subgroups `Q` of the p-group `R`:
/// the kernel of `Br_R` on `B^R` for a p-permutation algebra.
pub fn brauer_kernel(action: &LinearAction, r: &PermGroup) -> Result<Subspace> {
    let f = action.field();
    let mut out = Subspace::zero(action.dim());
    if r.is_trivial() {
        return Ok(out);
    }
    let mut subs = r.all_subgroups();
    subs.retain(|q| q.order() < r.order());
    let top: Vec<&PermGroup> = subs
        .iter()
        .filter(|q| !subs.iter().any(|s| s.order() > q.order() && q.is_subgroup_of(s)))
        .collect();
    for q in top {
        out = out.sum(f, &action.trace_image(r, q)?);
    }
    Ok(out)
}

/// Groups the idempotents of `list` (in `sub` coordinates) by conjugacy in `sub`.
fn classes(sub: &FinAlgebra, list: &[Elem]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    for (k, i) in list.iter().enumerate() {
        match out.iter_mut().find(|c| idempotent_link(sub, &list[c[0]], i).is_some()) {
            Some(c) => c.push(k),
            None => out.push(vec![k]),
        }
    }
    out
}

/// Points of `R` on `B`, in order of their first representative in a
/// primitive decomposition of `1_{B^R}`.
pub fn points(b: &FinAlgebra, action: &LinearAction, r: &PermGroup, seed: u64) -> Result<Vec<Point>> {
    if action.dim() != b.dim() {
        return Err(Error::arg("action and algebra dimensions differ"));
    }
    let fixed = fixed_algebra(b, action, r)?;
    let dec = primitive_idempotent_decomposition(&fixed.algebra, &fixed.algebra.one(), seed)?;
    let kernel = brauer_kernel(action, r)?;
    let out = classes(&fixed.algebra, &dec.idempotents)
        .into_iter()
        .map(|c| {
            let rep = fixed.to_parent(&dec.idempotents[c[0]]);
            Point {
                subgroup: r.clone(),
                local: !kernel.contains(fixed.algebra.field(), &rep),
                representative: rep,
                multiplicity: c.len(),
            }
        })
        .collect();
    Ok(out)
}

/// Number of members of the point `tau` of `T` in a primitive decomposition
/// of `i in B^U` inside `B^T`, for `T <= U`.
pub fn relative_multiplicity(
    b: &FinAlgebra,
    action: &LinearAction,
    t: &PermGroup,
    tau: &[Fq],
    i: &[Fq],
    seed: u64,
) -> Result<usize> {
    if !action.is_fixed(t, i) || !action.is_fixed(t, tau) {
        return Err(Error::arg("idempotents must be fixed by the smaller group"));
    }
    let fixed = fixed_algebra(b, action, t)?;
    let tau_c = fixed.from_parent(tau).ok_or_else(|| Error::arg("tau not in B^T"))?;
    let i_c = fixed.from_parent(i).ok_or_else(|| Error::arg("i not in B^T"))?;
    let dec = primitive_idempotent_decomposition(&fixed.algebra, &i_c, seed)?;
    Ok(dec
        .idempotents
        .iter()
        .filter(|j| idempotent_link(&fixed.algebra, &tau_c, j).is_some())
        .count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::{BlockData, GroupAlgebra};
    use crate::field::Field;
    use crate::group::Perm;
    use crate::linalg::Mat;

    fn cyc(n: usize) -> PermGroup {
        let s = format!("({})", (1..=n).map(|i| i.to_string()).collect::<Vec<_>>().join(" "));
        PermGroup::generate(n, &[Perm::parse_cycles(&s, n).unwrap()]).unwrap()
    }

    #[test]
    fn p_group_has_one_local_point() {
        let p = cyc(4);
        let kg = GroupAlgebra::new(&p, Field::prime(2).unwrap());
        let act = kg.conjugation_action(&p).unwrap();
        let pts = points(kg.algebra(), &act, &p, 1).unwrap();
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0].multiplicity, 1);
        assert!(pts[0].local);
    }

    #[test]
    fn product_of_fields_has_two_points() {
        let f = Field::new(2, 2).unwrap();
        let b = FinAlgebra::diagonal(f.clone(), 2);
        let r = PermGroup::trivial(1);
        let act = LinearAction::from_fn(f, 2, &r, |_| Mat::identity(2)).unwrap();
        let pts = points(&b, &act, &r, 3).unwrap();
        assert_eq!(pts.len(), 2);
        assert!(pts.iter().all(|p| p.multiplicity == 1 && p.local));
    }

    #[test]
    fn source_algebra_points_of_s3() {
        let g = PermGroup::generate(
            3,
            &[Perm::parse_cycles("(1 2 3)", 3).unwrap(), Perm::parse_cycles("(1 2)", 3).unwrap()],
        )
        .unwrap();
        let kg = GroupAlgebra::over_splitting_field(&g, 2, None).unwrap();
        let blk = BlockData::nth(&kg, 0, 5).unwrap();
        let src = &blk.source;
        let d = &blk.defect_group;
        let act = src.pair_action(&kg).unwrap().restrict(&d.diagonal()).unwrap();
        let dd = d.diagonal();
        let pts = points(src.algebra(), &act, &dd, 5).unwrap();
        let total: usize = pts.iter().map(|p| p.multiplicity).sum();
        let fixed = fixed_algebra(src.algebra(), &act, &dd).unwrap();
        let len = primitive_idempotent_decomposition(&fixed.algebra, &fixed.algebra.one(), 9)
            .unwrap()
            .idempotents
            .len();
        assert_eq!(total, len);
        assert!(pts.iter().any(|p| p.local));
        let one = src.algebra().one();
        for pt in &pts {
            let m = relative_multiplicity(src.algebra(), &act, &dd, &pt.representative, &one, 2).unwrap();
            assert_eq!(m, pt.multiplicity);
        }
    }
}
