use crate::algebra::{
    central_primitive_idempotents, primitive_idempotent_decomposition, Elem, FinAlgebra, LinearAction, SubAlgebra,
};
use crate::error::{Error, Result};
use crate::field::Fq;
use crate::group::{Perm, PermGroup};
use crate::linalg::{is_zero, Mat, Subspace};

use super::GroupAlgebra;

/// Block idempotents of `kG`: the principal block first, then the others
/// in coordinate order.
pub fn block_idempotents(kg: &GroupAlgebra) -> Result<Vec<Elem>> {
    let mut blocks = central_primitive_idempotents(kg.algebra())?;
    let principal = blocks
        .iter()
        .position(|b| kg.augmentation(b) != 0)
        .ok_or_else(|| Error::internal("no block acts nontrivially on the trivial module"))?;
    let b0 = blocks.remove(principal);
    blocks.insert(0, b0);
    Ok(blocks)
}

pub(crate) fn brauer_nonzero(kg: &GroupAlgebra, a: &[Fq], p: &PermGroup) -> Result<bool> {
    Ok(!is_zero(&kg.brauer_map(a, p)?.1))
}

/// A defect group of the block `b`: a largest p-subgroup `P` with
/// `Br_P(b) != 0`, first in canonical subgroup order. Every p-subgroup with
/// nonzero Brauer image is checked to lie in a conjugate of the result.
pub fn defect_group(kg: &GroupAlgebra, b: &[Fq]) -> Result<PermGroup> {
    let p = kg.characteristic();
    let g = kg.group();
    let mut good = Vec::new();
    for s in g.p_subgroups(p) {
        if brauer_nonzero(kg, b, &s)? {
            good.push(s);
        }
    }
    let top = good.iter().map(|s| s.order()).max().ok_or_else(|| Error::internal("Br_1(b) vanished"))?;
    let d = good.iter().find(|s| s.order() == top).expect("nonempty").clone();
    for s in &good {
        let contained = g.elements().iter().any(|x| s.elements().iter().all(|u| d.contains(&x.conjugate(u))));
        if !contained {
            return Err(Error::internal(format!(
                "p-subgroup of order {} with nonzero Brauer image is not subconjugate to the defect group",
                s.order()
            )));
        }
    }
    Ok(d)
}

/// `(kGb)^D` as an algebra with identity `b`.
pub(crate) fn fixed_block_algebra(kg: &GroupAlgebra, b: &[Fq], d: &PermGroup) -> Result<SubAlgebra> {
    let a = kg.algebra();
    let vecs: Vec<Elem> = kg.orbit_sums(d).iter().map(|s| a.mul(b, s)).collect();
    let space = Subspace::span(kg.field(), kg.dim(), &vecs);
    a.subalgebra(&space, b)
}

/// A primitive idempotent `l` of `(kGb)^D` with `Br_D(l) != 0`: the first
/// such in coordinate order among the idempotents of a primitive
/// decomposition of `b`.
pub fn source_idempotent(kg: &GroupAlgebra, b: &[Fq], d: &PermGroup, seed: u64) -> Result<Elem> {
    let c = fixed_block_algebra(kg, b, d)?;
    let dec = primitive_idempotent_decomposition(&c.algebra, &c.algebra.one(), seed)?;
    let mut cands: Vec<Elem> = dec.idempotents.iter().map(|i| c.to_parent(i)).collect();
    cands.sort();
    for l in cands {
        if brauer_nonzero(kg, &l, d)? {
            return Ok(l);
        }
    }
    Err(Error::internal("no primitive idempotent of (kGb)^D survives Br_D"))
}

/// The source algebra `l kG l` of a block, as a subalgebra of `kG`.
#[derive(Clone, Debug)]
pub struct SourceAlgebra {
    pub sub: SubAlgebra,
    pub defect_group: PermGroup,
    pub source_idempotent: Elem,
}

impl SourceAlgebra {
    pub fn algebra(&self) -> &FinAlgebra {
        &self.sub.algebra
    }

    pub fn dim(&self) -> usize {
        self.sub.algebra.dim()
    }

    /// `u l` in source-algebra coordinates.
    pub fn structural_element(&self, kg: &GroupAlgebra, u: &Perm) -> Elem {
        let ul = kg.algebra().mul(&kg.element(u), &self.source_idempotent);
        self.sub.from_parent(&ul).expect("u l lies in l kG l")
    }

    /// Matrix of `a -> u a v^-1` in source-algebra coordinates.
    pub fn translation_matrix(&self, kg: &GroupAlgebra, u: &Perm, v: &Perm) -> Mat {
        let cols: Vec<Elem> = self
            .sub
            .space()
            .basis()
            .iter()
            .map(|x| {
                let y = kg.translate(u, x, v);
                self.sub.from_parent(&y).expect("l kG l is D x D stable")
            })
            .collect();
        Mat::from_cols(self.dim(), &cols)
    }

    /// The action of `D x D` by `(u, v) a = u a v^-1`.
    pub fn pair_action(&self, kg: &GroupAlgebra) -> Result<LinearAction> {
        let d = &self.defect_group;
        let dd = d.direct_product(d);
        let n = d.degree();
        LinearAction::from_fn(self.algebra().field().clone(), self.dim(), &dd, |x| {
            let (u, v) = x.split_pair(n);
            self.translation_matrix(kg, &u, &v)
        })
    }
}

pub fn source_algebra(kg: &GroupAlgebra, d: &PermGroup, l: &[Fq]) -> Result<SourceAlgebra> {
    let a = kg.algebra();
    let sub = a.subalgebra(&a.corner_space(l, l), l)?;
    Ok(SourceAlgebra {
        sub,
        defect_group: d.clone(),
        source_idempotent: l.to_vec(),
    })
}

/// `(R, e_R)` with `e_R` the unique block of `kC_G(R)` not killed by `Br_R(l)`.
#[derive(Clone, Debug)]
pub struct BrauerPair {
    pub subgroup: PermGroup,
    pub centralizer: PermGroup,
    /// In `kC_G(R)` coordinates.
    pub block: Elem,
    /// The same idempotent in `kG` coordinates.
    pub block_in_group: Elem,
}

/// Brauer pairs `(R, e_R)` for every `R <= D`, in canonical subgroup order.
pub fn brauer_pairs(kg: &GroupAlgebra, d: &PermGroup, l: &[Fq]) -> Result<Vec<BrauerPair>> {
    let mut out = Vec::new();
    for r in d.all_subgroups() {
        let c = kg.group().centralizer(&r)?;
        let kc = kg.subgroup_algebra(&c);
        let (c2, brl) = kg.brauer_map(l, &r)?;
        debug_assert_eq!(c, c2);
        let blocks = central_primitive_idempotents(kc.algebra())?;
        let hits: Vec<&Elem> = blocks.iter().filter(|e| !is_zero(&kc.algebra().mul(&brl, e))).collect();
        if hits.len() != 1 {
            return Err(Error::internal(format!(
                "{} blocks of kC_G(R) meet Br_R(l) for |R| = {}",
                hits.len(),
                r.order()
            )));
        }
        let block = hits[0].clone();
        out.push(BrauerPair {
            block_in_group: kg.embed(&c, &block),
            subgroup: r,
            centralizer: c,
            block,
        });
    }
    Ok(out)
}

/// A block with its local data.
#[derive(Clone, Debug)]
pub struct BlockData {
    pub kg: GroupAlgebra,
    pub index: usize,
    pub idempotent: Elem,
    pub principal: bool,
    pub defect_group: PermGroup,
    pub source: SourceAlgebra,
    pub brauer_pairs: Vec<BrauerPair>,
    pub seed: u64,
}

impl BlockData {
    pub fn new(kg: &GroupAlgebra, index: usize, b: &[Fq], seed: u64) -> Result<Self> {
        let d = defect_group(kg, b)?;
        let l = source_idempotent(kg, b, &d, seed)?;
        let source = source_algebra(kg, &d, &l)?;
        let pairs = brauer_pairs(kg, &d, &l)?;
        Ok(BlockData {
            kg: kg.clone(),
            index,
            idempotent: b.to_vec(),
            principal: kg.augmentation(b) != 0,
            defect_group: d,
            source,
            brauer_pairs: pairs,
            seed,
        })
    }

    /// Every block of `kG`, indexed as in [`block_idempotents`].
    pub fn all(kg: &GroupAlgebra, seed: u64) -> Result<Vec<Self>> {
        block_idempotents(kg)?
            .iter()
            .enumerate()
            .map(|(i, b)| Self::new(kg, i, b, seed))
            .collect()
    }

    pub fn nth(kg: &GroupAlgebra, index: usize, seed: u64) -> Result<Self> {
        let blocks = block_idempotents(kg)?;
        let b = blocks
            .get(index)
            .ok_or_else(|| Error::arg(format!("block index {index} out of range (have {})", blocks.len())))?;
        Self::new(kg, index, b, seed)
    }

    pub fn source_idempotent(&self) -> &Elem {
        &self.source.source_idempotent
    }

    /// `dim kGb`.
    pub fn block_dim(&self) -> usize {
        let a = self.kg.algebra();
        let vecs: Vec<Elem> = (0..a.dim()).map(|i| a.mul(&self.idempotent, &a.basis_element(i))).collect();
        Subspace::span(a.field(), a.dim(), &vecs).dim()
    }

    pub fn pair(&self, r: &PermGroup) -> Option<&BrauerPair> {
        self.brauer_pairs.iter().find(|bp| bp.subgroup == *r)
    }
}
