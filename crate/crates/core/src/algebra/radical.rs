//! Jacobson radicals.
//!
//! Commutative algebras: the radical is the kernel of the linear map
//! `x -> x^{q^k}` once `q^k` reaches the dimension. In general we use the
//! trace filtration of Cohen, Ivanyos and Wales on the regular representation
//! over `F_p`: `I_{-1} = A`, `I_i = {x in I_{i-1} : g_i(xy) = 0 for all y}`
//! with `g_i(x) = Tr(X^{p^i}) / p^i mod p` for an integer lift `X` of the
//! matrix of `x`. Then `J(A) = I_l` for `l = floor(log_p n)`. Since `g_i` is
//! additive on `I_{i-1}` it only has to be evaluated on a basis of it.

use super::{Elem, FinAlgebra};
use crate::error::{Error, Result};
use crate::field::{Field, Fq};
use crate::linalg::{Mat, Subspace};

pub fn radical(a: &FinAlgebra) -> Result<Subspace> {
    if a.dim() == 0 {
        return Ok(Subspace::zero(0));
    }
    if a.is_commutative() {
        Ok(radical_commutative(a))
    } else {
        radical_trace_filtration(a)
    }
}

fn radical_commutative(a: &FinAlgebra) -> Subspace {
    let f = a.field();
    let q = f.size() as u64;
    let mut e = q;
    while (e as usize) < a.dim() {
        e *= q;
    }
    let cols: Vec<Elem> = (0..a.dim()).map(|j| a.pow(&a.basis_element(j), e)).collect();
    let m = Mat::from_cols(a.dim(), &cols);
    Subspace::span(f, a.dim(), &m.kernel(f))
}

/// Restriction of scalars to `F_p`: coordinate `(i, t)` is digit `t` of entry `i`.
struct PrimeView<'a> {
    alg: &'a FinAlgebra,
    fp: Field,
    m: usize,
    n: usize,
}

impl<'a> PrimeView<'a> {
    fn new(alg: &'a FinAlgebra) -> Result<Self> {
        let f = alg.field();
        let m = f.degree() as usize;
        Ok(PrimeView {
            alg,
            fp: Field::prime(f.characteristic())?,
            m,
            n: alg.dim() * m,
        })
    }

    fn to_fp(&self, a: &[Fq]) -> Vec<Fq> {
        let f = self.alg.field();
        a.iter().flat_map(|&x| f.digits(x)).collect()
    }

    fn unpack(&self, v: &[Fq]) -> Elem {
        let f = self.alg.field();
        v.chunks(self.m).map(|d| f.from_digits(d)).collect()
    }

    /// `F_p`-basis element `(i, t)`, i.e. `x^t b_i` with `x` the field generator.
    fn basis(&self, k: usize) -> Elem {
        let (i, t) = (k / self.m, k % self.m);
        let mut v = vec![0; self.alg.dim()];
        v[i] = (self.fp.characteristic() as u32).pow(t as u32) as Fq;
        v
    }

    /// Integer matrix of left multiplication by `z`, entries in `0..p`.
    fn left_matrix(&self, z: &[Fq]) -> Vec<u64> {
        let n = self.n;
        let mut out = vec![0u64; n * n];
        for k in 0..n {
            let col = self.to_fp(&self.alg.mul(z, &self.basis(k)));
            for (r, &x) in col.iter().enumerate() {
                out[r * n + k] = x as u64;
            }
        }
        out
    }
}

fn mat_mul_mod(a: &[u64], b: &[u64], n: usize, modulus: u64) -> Vec<u64> {
    let mut out = vec![0u64; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x == 0 {
                continue;
            }
            let brow = &b[k * n..(k + 1) * n];
            let orow = &mut out[i * n..(i + 1) * n];
            for (o, &y) in orow.iter_mut().zip(brow) {
                *o += x * y;
            }
        }
        for o in &mut out[i * n..(i + 1) * n] {
            *o %= modulus;
        }
    }
    out
}

fn g_value(view: &PrimeView, z: &[Fq], level: u32) -> Result<Fq> {
    let p = view.fp.characteristic();
    let n = view.n;
    let pi = p.pow(level);
    let modulus = pi * p;
    let x = view.left_matrix(z);
    // X^{p^level} by repeated p-th powers
    let mut acc = x;
    for _ in 0..level {
        let base = acc.clone();
        for _ in 1..p {
            acc = mat_mul_mod(&acc, &base, n, modulus);
        }
    }
    let tr = (0..n).map(|i| acc[i * n + i]).sum::<u64>() % modulus;
    if !tr.is_multiple_of(pi) {
        return Err(Error::internal(format!(
            "trace {tr} not divisible by {pi} at level {level}"
        )));
    }
    Ok(((tr / pi) % p) as Fq)
}

fn radical_trace_filtration(a: &FinAlgebra) -> Result<Subspace> {
    let view = PrimeView::new(a)?;
    let fp = &view.fp;
    let p = fp.characteristic();
    let n = view.n;
    let mut l = 0u32;
    while p.pow(l + 1) <= n as u64 {
        l += 1;
    }
    let y_basis: Vec<Elem> = (0..n).map(|k| view.basis(k)).collect();
    let mut ideal = Subspace::full(n);
    for level in 0..=l {
        if ideal.dim() == 0 {
            break;
        }
        let xs: Vec<Elem> = ideal.basis().iter().map(|v| view.unpack(v)).collect();
        let gvals: Vec<Fq> = xs.iter().map(|x| g_value(&view, x, level)).collect::<Result<_>>()?;
        let mut rows = Vec::with_capacity(xs.len());
        for x in &xs {
            let mut row = Vec::with_capacity(n);
            for y in &y_basis {
                let xy = view.to_fp(&a.mul(x, y));
                let c = ideal
                    .coords(fp, &xy)
                    .ok_or_else(|| Error::internal("trace filtration step is not an ideal"))?;
                row.push(fp.dot(&c, &gvals));
            }
            rows.push(row);
        }
        let m = Mat::from_rows(n, &rows);
        let kept: Vec<Vec<Fq>> = m
            .left_kernel(fp)
            .into_iter()
            .map(|c| ideal.combine(fp, &c))
            .collect();
        ideal = Subspace::span(fp, n, &kept);
    }
    let vecs: Vec<Elem> = ideal.basis().iter().map(|v| view.unpack(v)).collect();
    Ok(Subspace::span(a.field(), a.dim(), &vecs))
}

/// Exhaustive oracle: `J(A) = {x : a x is nilpotent for all a}`. Only for
/// algebras with at most 4096 elements.
pub fn radical_brute_force(a: &FinAlgebra) -> Result<Subspace> {
    let f = a.field();
    let q = f.size() as u64;
    let d = a.dim();
    let total = q
        .checked_pow(d as u32)
        .filter(|&t| t <= 4096)
        .ok_or_else(|| Error::InstanceTooLarge("brute-force radical needs |A| <= 4096".into()))?;
    let all: Vec<Elem> = (0..total).map(|k| number_to_vec(k, q, d)).collect();
    let nilpotent = |z: &Elem| a.pow(z, d as u64 + 1).iter().all(|&c| c == 0);
    let members: Vec<Elem> = all
        .iter()
        .filter(|x| all.iter().all(|y| nilpotent(&a.mul(y, x))))
        .cloned()
        .collect();
    Ok(Subspace::span(f, d, &members))
}

pub(crate) fn number_to_vec(mut k: u64, q: u64, d: usize) -> Elem {
    (0..d)
        .map(|_| {
            let c = (k % q) as Fq;
            k /= q;
            c
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{Perm, PermGroup};
    use std::sync::Arc;

    fn group_algebra(p: u64, m: u32, degree: usize, gens: &[&str]) -> FinAlgebra {
        let gens: Vec<Perm> = gens.iter().map(|s| Perm::parse_cycles(s, degree).unwrap()).collect();
        let g = PermGroup::generate(degree, &gens).unwrap();
        FinAlgebra::group_algebra(Field::new(p, m).unwrap(), Arc::new(g.table().clone()))
    }

    #[test]
    fn semisimple_and_dual_numbers() {
        let f = Field::prime(2).unwrap();
        assert_eq!(radical(&FinAlgebra::diagonal(f.clone(), 2)).unwrap().dim(), 0);
        let dual = FinAlgebra::truncated_polynomials(f, 2);
        assert_eq!(radical(&dual).unwrap(), Subspace::span(dual.field(), 2, &[vec![0, 1]]));
    }

    #[test]
    fn augmentation_ideal_of_c2() {
        let a = group_algebra(2, 1, 2, &["(1 2)"]);
        assert_eq!(radical(&a).unwrap(), Subspace::span(a.field(), 2, &[vec![1, 1]]));
    }

    #[test]
    fn trace_filtration_matches_brute_force() {
        // F_2[S3] is non-commutative of dimension 6
        let a = group_algebra(2, 1, 3, &["(1 2 3)", "(1 2)"]);
        let j = radical_trace_filtration(&a).unwrap();
        assert_eq!(j, radical_brute_force(&a).unwrap());
        assert_eq!(j.dim(), 1);
        let b = group_algebra(3, 1, 3, &["(1 2 3)", "(1 2)"]);
        let jb = radical_trace_filtration(&b).unwrap();
        assert_eq!(jb.dim(), 4);
        assert_eq!(jb, radical_brute_force(&b).unwrap());
    }

    #[test]
    fn trace_filtration_over_extension_field() {
        let a = group_algebra(2, 2, 3, &["(1 2 3)", "(1 2)"]);
        let j = radical_trace_filtration(&a).unwrap();
        assert_eq!(j.dim(), 1);
        let m2 = FinAlgebra::matrix_algebra(Field::new(2, 2).unwrap(), 2);
        assert_eq!(radical(&m2).unwrap().dim(), 0);
    }

    #[test]
    fn commutative_path_agrees_with_filtration() {
        let a = group_algebra(2, 1, 4, &["(1 2 3 4)"]);
        assert_eq!(radical_commutative(&a), radical_trace_filtration(&a).unwrap());
        assert_eq!(radical_commutative(&a).dim(), 3);
    }
}
