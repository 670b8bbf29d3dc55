use serde::Serialize;

use super::{FusionSystem, Morphism};
use crate::error::{Error, Result};
use crate::group::PermGroup;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ViewMode {
    /// Morphisms with `u^-1 phi(u)` in `D~` for every `u`.
    Plain,
    /// Objects below `N_D(R)`; morphisms extending to `R R1 -> R R2` in the
    /// plain view with `R` mapped onto itself. Holds the object index of `R`.
    Normalizer(usize),
}

/// A subcategory of a fusion system cut out by a normal subgroup `D~` of `D`.
#[derive(Debug)]
pub struct SubcategoryView<'a> {
    parent: &'a FusionSystem,
    dtilde: PermGroup,
    in_dtilde: Vec<bool>,
    mode: ViewMode,
    /// Objects of the view: subgroups of `N_D(R)` in normalizer mode.
    allowed: Vec<bool>,
}

impl<'a> SubcategoryView<'a> {
    pub fn plain(parent: &'a FusionSystem, dtilde: &PermGroup) -> Result<Self> {
        let d = parent.defect_group();
        if !dtilde.is_normal_in(d) {
            return Err(Error::arg("D~ is not a normal subgroup of D"));
        }
        let in_dtilde = d.elements().iter().map(|x| dtilde.contains(x)).collect();
        Ok(SubcategoryView {
            parent,
            dtilde: dtilde.clone(),
            in_dtilde,
            mode: ViewMode::Plain,
            allowed: vec![true; parent.objects().len()],
        })
    }

    pub fn normalizer(parent: &'a FusionSystem, dtilde: &PermGroup, r: &PermGroup) -> Result<Self> {
        let mut view = Self::plain(parent, dtilde)?;
        let ri = parent.object_index(r).ok_or_else(|| Error::arg("R is not a subgroup of D"))?;
        let nd = parent.defect_group().normalizer(r)?;
        view.allowed = parent.objects().iter().map(|s| s.is_subgroup_of(&nd)).collect();
        view.mode = ViewMode::Normalizer(ri);
        Ok(view)
    }

    pub fn parent(&self) -> &FusionSystem {
        self.parent
    }

    pub fn dtilde(&self) -> &PermGroup {
        &self.dtilde
    }

    pub fn mode(&self) -> &ViewMode {
        &self.mode
    }

    pub fn objects(&self) -> Vec<usize> {
        (0..self.allowed.len()).filter(|&i| self.allowed[i]).collect()
    }

    pub fn is_object(&self, i: usize) -> bool {
        self.allowed[i]
    }

    /// `u^-1 phi(u) in D~` for all `u`, i.e. `Delta(phi) <= D x_{D/D~} D`.
    fn plain_condition(&self, phi: &Morphism) -> bool {
        let f = self.parent;
        f.object_set(phi.source)
            .iter()
            .zip(&phi.images)
            .all(|(&u, &v)| self.in_dtilde[f.d_mul(f.d_inv(u), v)])
    }

    fn extends(&self, r: usize, phi: &Morphism) -> bool {
        let f = self.parent;
        let join = |k: usize| {
            let mut gens = f.object_set(r).to_vec();
            gens.extend_from_slice(f.object_set(k));
            f.generated(&gens)
        };
        let (a, b) = (join(phi.source), join(phi.target));
        let rset = f.object_set(r);
        f.hom(a, b).iter().any(|psi| {
            self.plain_condition(psi)
                && rset.iter().all(|&u| rset.binary_search(&f.apply(psi, u)).is_ok())
                && f.object_set(phi.source)
                    .iter()
                    .zip(&phi.images)
                    .all(|(&u, &v)| f.apply(psi, u) == v)
        })
    }

    /// Membership of a morphism of the parent.
    pub fn contains(&self, phi: &Morphism) -> Result<bool> {
        if !self.parent.contains(phi) {
            return Err(Error::arg("morphism is not in the parent fusion system"));
        }
        if !self.allowed[phi.source] || !self.allowed[phi.target] {
            return Err(Error::arg("source or target is not below N_D(R)"));
        }
        if !self.plain_condition(phi) {
            return Ok(false);
        }
        Ok(match self.mode {
            ViewMode::Plain => true,
            ViewMode::Normalizer(r) => self.extends(r, phi),
        })
    }

    pub fn hom(&self, i: usize, j: usize) -> Result<Vec<Morphism>> {
        let mut out = Vec::new();
        for phi in self.parent.hom(i, j) {
            if self.contains(phi)? {
                out.push(phi.clone());
            }
        }
        Ok(out)
    }

    /// Category axioms on the view: inclusions, isomorphisms onto images and
    /// their inverses, closure under composition. Returns the first failure.
    pub fn check_category_axioms(&self) -> Result<Option<String>> {
        let f = self.parent;
        let objs = self.objects();
        let mut homs = std::collections::HashMap::new();
        for &i in &objs {
            for &j in &objs {
                homs.insert((i, j), self.hom(i, j)?);
            }
        }
        for &i in &objs {
            for &j in &objs {
                if let Some(inc) = f.inclusion(i, j) {
                    if !homs[&(i, j)].contains(&inc) {
                        return Ok(Some(format!("inclusion {} missing", f.describe(&inc))));
                    }
                }
                for phi in &homs[&(i, j)] {
                    let iso = f.onto_image(phi);
                    let inv = f.inverse(phi);
                    if !homs[&(iso.source, iso.target)].contains(&iso) {
                        return Ok(Some(format!("isomorphism onto image of {} missing", f.describe(phi))));
                    }
                    if !homs[&(inv.source, inv.target)].contains(&inv) {
                        return Ok(Some(format!("inverse of {} missing", f.describe(phi))));
                    }
                    for &k in &objs {
                        for psi in &homs[&(j, k)] {
                            let c = f.compose(psi, phi)?;
                            if !homs[&(i, k)].contains(&c) {
                                return Ok(Some(format!("composite {} missing", f.describe(&c))));
                            }
                        }
                    }
                }
            }
        }
        Ok(None)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Thm14Verdict {
    pub holds: bool,
    pub counterexample: Option<String>,
    #[serde(skip)]
    pub counterexample_morphism: Option<Morphism>,
}

/// Whether the plain view equals its normalizer view at `R = D`.
pub fn thm14_hypothesis(f: &FusionSystem, dtilde: &PermGroup) -> Result<Thm14Verdict> {
    if !f.hyperfocal().is_subgroup_of(dtilde) {
        return Err(Error::pre("hyp(F) is not contained in D~"));
    }
    let plain = SubcategoryView::plain(f, dtilde)?;
    let norm = SubcategoryView::normalizer(f, dtilde, f.defect_group())?;
    let n = f.objects().len();
    for i in 0..n {
        for j in 0..n {
            for phi in f.hom(i, j) {
                if plain.contains(phi)? != norm.contains(phi)? {
                    return Ok(Thm14Verdict {
                        holds: false,
                        counterexample: Some(f.describe(phi)),
                        counterexample_morphism: Some(phi.clone()),
                    });
                }
            }
        }
    }
    Ok(Thm14Verdict {
        holds: true,
        counterexample: None,
        counterexample_morphism: None,
    })
}

/// One exhaustively checked statement about the views.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SuiteCheck {
    pub name: String,
    /// Subgroup `R` for normalizer checks, as its order and generators.
    pub subgroup: Option<String>,
    pub applicable: bool,
    pub holds: bool,
    pub detail: String,
}

impl SuiteCheck {
    fn new(name: &str, subgroup: Option<&PermGroup>, applicable: bool, failure: Option<String>) -> Self {
        SuiteCheck {
            name: name.to_string(),
            subgroup: subgroup.map(|r| {
                let gens: Vec<String> = r.generators().iter().map(|g| g.to_string()).collect();
                format!("order {} <{}>", r.order(), gens.join(", "))
            }),
            applicable,
            holds: failure.is_none(),
            detail: failure.unwrap_or_default(),
        }
    }
}

fn first_mismatch(f: &FusionSystem, objs: &[usize], lhs: impl Fn(usize, usize) -> Result<Vec<Morphism>>, rhs: impl Fn(usize, usize) -> Result<Vec<Morphism>>) -> Result<Option<String>> {
    for &i in objs {
        for &j in objs {
            let (a, b) = (lhs(i, j)?, rhs(i, j)?);
            if a != b {
                let phi = a.iter().find(|m| !b.contains(m)).or_else(|| b.iter().find(|m| !a.contains(m)));
                return Ok(Some(format!(
                    "hom-sets differ for objects {i}, {j}: {}",
                    phi.map(|m| f.describe(m)).unwrap_or_default()
                )));
            }
        }
    }
    Ok(None)
}

/// `N_F(R)`: morphisms between subgroups of `N_D(R)` extending to
/// `R R1 -> R R2` in `F` with `R` mapped onto itself.
fn normalizer_in_parent(f: &FusionSystem, r: usize, i: usize, j: usize) -> Vec<Morphism> {
    let everything = f.defect_group().clone();
    let view = SubcategoryView::plain(f, &everything).expect("D is normal in D");
    f.hom(i, j).iter().filter(|phi| view.extends(r, phi)).cloned().collect()
}

/// Exhaustive checks of the structural statements about the plain and
/// normalizer views for one `D~`, every `R <= D` for the normalizer part.
/// Statements whose hypothesis fails are reported as not applicable.
pub fn proposition_suite(f: &FusionSystem, dtilde: &PermGroup) -> Result<Vec<SuiteCheck>> {
    let d = f.defect_group();
    let derived_in = d.commutator_subgroup().is_subgroup_of(dtilde);
    let focal_in = f.focal().is_subgroup_of(dtilde);
    let trivial = dtilde.is_trivial();
    let n = f.objects().len();
    let all: Vec<usize> = (0..n).collect();
    let plain = SubcategoryView::plain(f, dtilde)?;
    let mut out = Vec::new();

    out.push(SuiteCheck::new("subcategory_axioms", None, true, plain.check_category_axioms()?));

    let mut fail = None;
    if derived_in {
        'outer: for x in 0..d.order() {
            for &i in &all {
                for &j in &all {
                    if let Some(c) = f.d_conjugation(x, i, j) {
                        if !plain.contains(&c)? {
                            fail = Some(format!("D-conjugation {} rejected", f.describe(&c)));
                            break 'outer;
                        }
                    }
                }
            }
        }
    }
    out.push(SuiteCheck::new("contains_d_conjugations_if_derived_in_dtilde", None, derived_in, fail));

    let fail = if focal_in {
        first_mismatch(f, &all, |i, j| plain.hom(i, j), |i, j| Ok(f.hom(i, j).to_vec()))?
    } else {
        None
    };
    out.push(SuiteCheck::new("equals_parent_if_focal_in_dtilde", None, focal_in, fail));

    let fail = if trivial {
        first_mismatch(f, &all, |i, j| plain.hom(i, j), |i, j| Ok(f.inclusion(i, j).into_iter().collect()))?
    } else {
        None
    };
    out.push(SuiteCheck::new("inclusions_only_if_dtilde_trivial", None, trivial, fail));

    for (ri, r) in f.objects().iter().enumerate() {
        let view = SubcategoryView::normalizer(f, dtilde, r)?;
        let objs = view.objects();
        out.push(SuiteCheck::new("normalizer_subcategory_axioms", Some(r), true, view.check_category_axioms()?));

        let nd = d.normalizer(r)?;
        let mut fail = None;
        if derived_in {
            'outer2: for x in nd.elements() {
                let xi = d.index_of(x).expect("element of D");
                for &i in &objs {
                    for &j in &objs {
                        if let Some(c) = f.d_conjugation(xi, i, j) {
                            if !view.contains(&c)? {
                                fail = Some(format!("N_D(R)-conjugation {} rejected", f.describe(&c)));
                                break 'outer2;
                            }
                        }
                    }
                }
            }
        }
        out.push(SuiteCheck::new("normalizer_contains_conjugations_if_derived_in_dtilde", Some(r), derived_in, fail));

        let fail = if focal_in {
            first_mismatch(f, &objs, |i, j| view.hom(i, j), |i, j| Ok(normalizer_in_parent(f, ri, i, j)))?
        } else {
            None
        };
        out.push(SuiteCheck::new("normalizer_equals_parent_normalizer_if_focal_in_dtilde", Some(r), focal_in, fail));

        let applicable = trivial && ri == f.top();
        let fail = if applicable {
            first_mismatch(f, &objs, |i, j| view.hom(i, j), |i, j| Ok(f.inclusion(i, j).into_iter().collect()))?
        } else {
            None
        };
        out.push(SuiteCheck::new("normalizer_of_d_inclusions_only_if_dtilde_trivial", Some(r), applicable, fail));
    }
    Ok(out)
}
