//! Finite-dimensional associative unital algebras over `F_q`.
//!
//! Elements are plain coordinate vectors ([`Elem`]) in the algebra's basis;
//! the algebra value carries the field and the multiplication.

mod action;
mod idempotent;
mod io;
mod quotient;
mod radical;
mod units;

use std::sync::Arc;

pub use action::{fixed_subspace, relative_trace, LinearAction};
pub use idempotent::{
    central_primitive_idempotents, commutative_primitive_idempotents, idempotent_conjugacy,
    is_primitive_idempotent, primitive_idempotent_decomposition, unit_in_corner, Decomposition,
};
pub(crate) use idempotent::{link_from_spaces as primitive_pair_link_in, primitive_pair_link};
pub use io::{read_algebra, write_algebra, AlgebraFile};
pub use quotient::QuotientSpace;
pub use radical::{radical, radical_brute_force};
pub use units::{unit_in_subspace, UnitSearch, UnitSearchOutcome};

use crate::error::{Error, Result};
use crate::field::{Field, Fq};
use crate::group::GroupTable;
use crate::linalg::{unit_vector, Mat, Subspace};

pub type Elem = Vec<Fq>;

#[derive(Clone)]
enum Mult {
    /// Basis indexed by group elements.
    Group(Arc<GroupTable>),
    /// `consts[i * dim + j]` lists the nonzero coefficients of `b_i b_j`.
    Sparse(Arc<Vec<Vec<(u32, Fq)>>>),
}

#[derive(Clone)]
pub struct FinAlgebra {
    field: Field,
    dim: usize,
    mult: Mult,
    unit: Elem,
}

impl std::fmt::Debug for FinAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FinAlgebra")
            .field("field", &self.field)
            .field("dim", &self.dim)
            .finish()
    }
}

impl FinAlgebra {
    /// Builds from structure constants, verifying associativity and the unit.
    pub fn new(field: Field, dim: usize, consts: Vec<Vec<(usize, Fq)>>, unit: Elem) -> Result<Self> {
        let a = Self::from_consts_unchecked(field, dim, consts, unit)?;
        a.check_axioms()?;
        Ok(a)
    }

    pub(crate) fn from_consts_unchecked(
        field: Field,
        dim: usize,
        consts: Vec<Vec<(usize, Fq)>>,
        unit: Elem,
    ) -> Result<Self> {
        if consts.len() != dim * dim {
            return Err(Error::arg(format!(
                "expected {} products, got {}",
                dim * dim,
                consts.len()
            )));
        }
        if unit.len() != dim {
            return Err(Error::arg("unit vector has the wrong length"));
        }
        let consts = consts
            .into_iter()
            .map(|terms| {
                let mut dense: Vec<(u32, Fq)> = Vec::new();
                for (k, c) in terms {
                    if k >= dim {
                        return Err(Error::arg(format!("basis index {k} out of range")));
                    }
                    if c != 0 {
                        dense.push((k as u32, c));
                    }
                }
                dense.sort_unstable_by_key(|t| t.0);
                let mut merged: Vec<(u32, Fq)> = Vec::with_capacity(dense.len());
                for (k, c) in dense {
                    match merged.last_mut() {
                        Some(last) if last.0 == k => last.1 = field.add(last.1, c),
                        _ => merged.push((k, c)),
                    }
                }
                merged.retain(|t| t.1 != 0);
                Ok(merged)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FinAlgebra {
            field,
            dim,
            mult: Mult::Sparse(Arc::new(consts)),
            unit,
        })
    }

    /// The group algebra `F_q G` in the basis of group elements.
    pub fn group_algebra(field: Field, table: Arc<GroupTable>) -> Self {
        let dim = table.order();
        FinAlgebra {
            field,
            dim,
            mult: Mult::Group(table),
            unit: unit_vector(dim, 0),
        }
    }

    /// `F_q`-algebra of dimension one.
    pub fn ground_field(field: Field) -> Self {
        Self::from_consts_unchecked(field, 1, vec![vec![(0, 1)]], vec![1]).expect("valid")
    }

    /// `F_q[x]/(x^n)`.
    pub fn truncated_polynomials(field: Field, n: usize) -> Self {
        let mut consts = vec![Vec::new(); n * n];
        for i in 0..n {
            for j in 0..n {
                if i + j < n {
                    consts[i * n + j] = vec![(i + j, 1)];
                }
            }
        }
        Self::from_consts_unchecked(field, n, consts, unit_vector(n, 0)).expect("valid")
    }

    /// `F_q^n` with componentwise product.
    pub fn diagonal(field: Field, n: usize) -> Self {
        let mut consts = vec![Vec::new(); n * n];
        for i in 0..n {
            consts[i * n + i] = vec![(i, 1)];
        }
        Self::from_consts_unchecked(field, n, consts, vec![1; n]).expect("valid")
    }

    /// `M_n(F_q)` in the matrix-unit basis `E_{ij}` at index `i n + j`.
    pub fn matrix_algebra(field: Field, n: usize) -> Self {
        let d = n * n;
        let mut consts = vec![Vec::new(); d * d];
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    consts[(i * n + j) * d + (j * n + l)] = vec![(i * n + l, 1)];
                }
            }
        }
        let mut unit = vec![0; d];
        for i in 0..n {
            unit[i * n + i] = 1;
        }
        Self::from_consts_unchecked(field, d, consts, unit).expect("valid")
    }

    /// Direct product of two algebras, basis of `self` first.
    pub fn product(&self, other: &FinAlgebra) -> Result<FinAlgebra> {
        if self.field != other.field {
            return Err(Error::arg("algebras over different fields"));
        }
        let (d1, d2) = (self.dim, other.dim);
        let d = d1 + d2;
        let mut consts = vec![Vec::new(); d * d];
        for i in 0..d1 {
            for j in 0..d1 {
                consts[i * d + j] = sparse(&self.basis_product(i, j));
            }
        }
        for i in 0..d2 {
            for j in 0..d2 {
                consts[(d1 + i) * d + d1 + j] =
                    sparse(&other.basis_product(i, j)).into_iter().map(|(k, c)| (k + d1, c)).collect();
            }
        }
        let mut unit = self.unit.clone();
        unit.extend_from_slice(&other.unit);
        Self::from_consts_unchecked(self.field.clone(), d, consts, unit)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn one(&self) -> Elem {
        self.unit.clone()
    }

    pub fn zero(&self) -> Elem {
        vec![0; self.dim]
    }

    pub fn basis_element(&self, i: usize) -> Elem {
        unit_vector(self.dim, i)
    }

    pub fn is_group_algebra(&self) -> bool {
        matches!(self.mult, Mult::Group(_))
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Elem {
        let mut out = vec![0; self.dim];
        match &self.mult {
            Mult::Group(t) => out[t.mul(i, j)] = 1,
            Mult::Sparse(c) => {
                for &(k, x) in &c[i * self.dim + j] {
                    out[k as usize] = x;
                }
            }
        }
        out
    }

    pub fn mul(&self, a: &[Fq], b: &[Fq]) -> Elem {
        let f = &self.field;
        let mut out = vec![0; self.dim];
        let nz_b: Vec<(usize, Fq)> = b.iter().copied().enumerate().filter(|t| t.1 != 0).collect();
        match &self.mult {
            Mult::Group(t) => {
                for (i, &x) in a.iter().enumerate() {
                    if x == 0 {
                        continue;
                    }
                    for &(j, y) in &nz_b {
                        let k = t.mul(i, j);
                        out[k] = f.add(out[k], f.mul(x, y));
                    }
                }
            }
            Mult::Sparse(c) => {
                for (i, &x) in a.iter().enumerate() {
                    if x == 0 {
                        continue;
                    }
                    let row = &c[i * self.dim..(i + 1) * self.dim];
                    for &(j, y) in &nz_b {
                        let xy = f.mul(x, y);
                        for &(k, z) in &row[j] {
                            let k = k as usize;
                            out[k] = f.add(out[k], f.mul(xy, z));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn mul3(&self, a: &[Fq], b: &[Fq], c: &[Fq]) -> Elem {
        self.mul(&self.mul(a, b), c)
    }

    pub fn add(&self, a: &[Fq], b: &[Fq]) -> Elem {
        let mut out = a.to_vec();
        self.field.axpy(&mut out, 1, b);
        out
    }

    pub fn sub(&self, a: &[Fq], b: &[Fq]) -> Elem {
        let mut out = a.to_vec();
        self.field.axpy(&mut out, self.field.neg(1), b);
        out
    }

    pub fn scale(&self, c: Fq, a: &[Fq]) -> Elem {
        a.iter().map(|&x| self.field.mul(c, x)).collect()
    }

    pub fn commutator(&self, a: &[Fq], b: &[Fq]) -> Elem {
        self.sub(&self.mul(a, b), &self.mul(b, a))
    }

    pub fn pow(&self, a: &[Fq], mut e: u64) -> Elem {
        let mut base = a.to_vec();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Matrix of `x -> a x`; column `j` holds `a b_j`.
    pub fn left_matrix(&self, a: &[Fq]) -> Mat {
        let cols: Vec<Elem> = (0..self.dim).map(|j| self.mul(a, &self.basis_element(j))).collect();
        Mat::from_cols(self.dim, &cols)
    }

    /// Matrix of `x -> x a`.
    pub fn right_matrix(&self, a: &[Fq]) -> Mat {
        let cols: Vec<Elem> = (0..self.dim).map(|j| self.mul(&self.basis_element(j), a)).collect();
        Mat::from_cols(self.dim, &cols)
    }

    /// Two-sided inverse if `a` is a unit.
    pub fn inverse(&self, a: &[Fq]) -> Option<Elem> {
        let l = self.left_matrix(a);
        let b = l.solve(&self.field, &self.unit)?;
        // a b = 1 forces b a = 1 in finite dimension; checked anyway
        if self.mul(&b, a) != self.unit {
            return None;
        }
        Some(b)
    }

    pub fn is_unit(&self, a: &[Fq]) -> bool {
        self.left_matrix(a).is_invertible(&self.field)
    }

    pub fn is_idempotent(&self, a: &[Fq]) -> bool {
        self.mul(a, a) == a
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (i + 1..self.dim).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    pub fn is_central(&self, a: &[Fq]) -> bool {
        (0..self.dim).all(|j| {
            let b = self.basis_element(j);
            self.mul(a, &b) == self.mul(&b, a)
        })
    }

    /// Verifies associativity on all basis triples and the two-sided unit.
    pub fn check_axioms(&self) -> Result<()> {
        for i in 0..self.dim {
            let bi = self.basis_element(i);
            if self.mul(&self.unit, &bi) != bi || self.mul(&bi, &self.unit) != bi {
                return Err(Error::arg(format!("unit fails on basis element {i}")));
            }
            for j in 0..self.dim {
                let bij = self.basis_product(i, j);
                for k in 0..self.dim {
                    let bk = self.basis_element(k);
                    let lhs = self.mul(&bij, &bk);
                    let rhs = self.mul(&bi, &self.basis_product(j, k));
                    if lhs != rhs {
                        return Err(Error::arg(format!("associativity fails on ({i}, {j}, {k})")));
                    }
                }
            }
        }
        Ok(())
    }

    /// `{a : a x = x a for all x in gens}`.
    pub fn commutant(&self, gens: &[Elem]) -> Subspace {
        let f = &self.field;
        let d = self.dim;
        if gens.is_empty() {
            return Subspace::full(d);
        }
        // rows: for each generator the d equations of (L_x - R_x) a = 0 ... as matrix acting on a
        let mut rows: Vec<Vec<Fq>> = Vec::with_capacity(gens.len() * d);
        for x in gens {
            let r = self.right_matrix(x);
            let l = self.left_matrix(x);
            let m = r.sub(f, &l);
            rows.extend(m.to_rows());
        }
        Subspace::span(f, d, &Mat::from_rows(d, &rows).kernel(f))
    }

    pub fn center(&self) -> Subspace {
        let gens: Vec<Elem> = (0..self.dim).map(|i| self.basis_element(i)).collect();
        self.commutant(&gens)
    }

    /// Span of all products `u v` with `u` in `a`, `v` in `b`.
    pub fn product_space(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut s = Subspace::zero(self.dim);
        for u in a.basis() {
            for v in b.basis() {
                s.insert(&self.field, &self.mul(u, v));
                if s.dim() == self.dim {
                    return s;
                }
            }
        }
        s
    }

    /// `e A f` as a subspace.
    pub fn corner_space(&self, e: &[Fq], f: &[Fq]) -> Subspace {
        let mut s = Subspace::zero(self.dim);
        for i in 0..self.dim {
            let v = self.mul3(e, &self.basis_element(i), f);
            s.insert(&self.field, &v);
        }
        s
    }

    /// Subspace `s` as an algebra with identity `unit` (which must lie in `s`
    /// and act as identity on it). Closure under products is verified.
    pub fn subalgebra(&self, s: &Subspace, unit: &[Fq]) -> Result<SubAlgebra> {
        let f = &self.field;
        let basis: Vec<Elem> = s.basis().to_vec();
        let d = basis.len();
        let unit_coords = s
            .coords(f, unit)
            .ok_or_else(|| Error::arg("subalgebra unit is not in the subspace"))?;
        let mut consts = Vec::with_capacity(d * d);
        for u in &basis {
            for v in &basis {
                let uv = self.mul(u, v);
                let c = s
                    .coords(f, &uv)
                    .ok_or_else(|| Error::arg("subspace is not closed under multiplication"))?;
                consts.push(c.into_iter().enumerate().filter(|t| t.1 != 0).collect());
            }
        }
        let algebra = FinAlgebra::from_consts_unchecked(f.clone(), d, consts, unit_coords)?;
        for i in 0..d {
            let bi = algebra.basis_element(i);
            if algebra.mul(&algebra.unit, &bi) != bi || algebra.mul(&bi, &algebra.unit) != bi {
                return Err(Error::arg("given element is not an identity of the subalgebra"));
            }
        }
        Ok(SubAlgebra {
            algebra,
            space: s.clone(),
        })
    }

    /// `e A e` with identity `e`.
    pub fn corner(&self, e: &[Fq]) -> Result<SubAlgebra> {
        if !self.is_idempotent(e) {
            return Err(Error::arg("corner requires an idempotent"));
        }
        self.subalgebra(&self.corner_space(e, e), e)
    }

    /// The subalgebra generated by `gens` and the identity.
    pub fn generated_subalgebra(&self, gens: &[Elem]) -> Subspace {
        let f = &self.field;
        let mut s = Subspace::span(f, self.dim, &[self.one()]);
        let mut frontier: Vec<Elem> = vec![self.one()];
        for g in gens {
            if s.insert(f, g) {
                frontier.push(g.clone());
            }
        }
        while let Some(x) = frontier.pop() {
            for g in gens {
                for y in [self.mul(&x, g), self.mul(g, &x)] {
                    if s.insert(f, &y) {
                        frontier.push(y);
                    }
                }
            }
        }
        s
    }

    /// Powers `1, a, a^2, ..` up to the first linear dependence, returning
    /// the spanning powers and the monic minimal polynomial (low to high).
    pub fn minimal_polynomial(&self, a: &[Fq]) -> (Vec<Elem>, Vec<Fq>) {
        let f = &self.field;
        let mut powers: Vec<Elem> = vec![self.one()];
        let mut span = Subspace::span(f, self.dim, &powers);
        loop {
            let next = self.mul(powers.last().expect("nonempty"), a);
            if span.contains(f, &next) {
                // solve next = Σ c_i a^i
                let m = Mat::from_cols(self.dim, &powers);
                let c = m.solve(f, &next).expect("in span");
                let mut poly: Vec<Fq> = c.iter().map(|&x| f.neg(x)).collect();
                poly.push(1);
                return (powers, poly);
            }
            span.insert(f, &next);
            powers.push(next);
        }
    }
}

/// An algebra realized inside a parent algebra by a subspace basis.
#[derive(Clone, Debug)]
pub struct SubAlgebra {
    pub algebra: FinAlgebra,
    space: Subspace,
}

impl SubAlgebra {
    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn to_parent(&self, a: &[Fq]) -> Elem {
        self.space.combine(self.algebra.field(), a)
    }

    pub fn from_parent(&self, v: &[Fq]) -> Option<Elem> {
        self.space.coords(self.algebra.field(), v)
    }

    /// Maps a subspace of the parent contained in this subalgebra.
    pub fn subspace_from_parent(&self, s: &Subspace) -> Option<Subspace> {
        let f = self.algebra.field();
        let vecs: Option<Vec<Elem>> = s.basis().iter().map(|v| self.from_parent(v)).collect();
        Some(Subspace::span(f, self.algebra.dim(), &vecs?))
    }

    pub fn subspace_to_parent(&self, s: &Subspace) -> Subspace {
        let f = self.algebra.field();
        let vecs: Vec<Elem> = s.basis().iter().map(|v| self.to_parent(v)).collect();
        Subspace::span(f, self.space.ambient(), &vecs)
    }
}

pub(crate) fn sparse(v: &[Fq]) -> Vec<(usize, Fq)> {
    v.iter().copied().enumerate().filter(|t| t.1 != 0).collect()
}

/// Roots in `F_q` of a polynomial given low to high.
pub(crate) fn poly_roots(f: &Field, poly: &[Fq]) -> Vec<Fq> {
    f.elements()
        .filter(|&x| poly.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c)) == 0)
        .collect()
}
