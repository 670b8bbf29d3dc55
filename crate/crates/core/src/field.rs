//! Finite fields `F_{p^m}` with elements encoded as `u16` integers.
//!
//! An element `c_0 + c_1 x + .. + c_{m-1} x^{m-1}` is stored as
//! `c_0 + c_1 p + .. + c_{m-1} p^{m-1}`. The prime field is therefore
//! `0..p`, and `0`, `1` are the usual zero and one.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::is_prime;

pub type Fq = u16;

/// Largest supported field size (keeps element codes inside `u16`).
pub const MAX_FIELD_SIZE: usize = 1 << 15;

const TABLE_LIMIT: usize = 256;

#[derive(Clone)]
pub struct Field {
    inner: Arc<Inner>,
}

struct Inner {
    p: u16,
    m: u32,
    q: usize,
    /// Monic defining polynomial, coefficients from low to high degree.
    poly: Vec<u16>,
    exp: Vec<Fq>,
    log: Vec<u32>,
    inv: Vec<Fq>,
    neg: Vec<Fq>,
    /// Full tables when `q` is small.
    add_table: Option<Vec<Fq>>,
    mul_table: Option<Vec<Fq>>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.inner.p == other.inner.p && self.inner.m == other.inner.m && self.inner.poly == other.inner.poly
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.inner.q)?;
        if self.inner.m > 1 {
            write!(f, " [poly {:?}]", self.inner.poly)?;
        }
        Ok(())
    }
}

impl Field {
    /// `F_{p^m}` defined by the lexicographically first primitive polynomial.
    pub fn new(p: u64, m: u32) -> Result<Self> {
        if !is_prime(p) || p > u16::MAX as u64 {
            return Err(Error::arg(format!("{p} is not a supported prime")));
        }
        if m == 0 {
            return Err(Error::arg("field degree must be positive"));
        }
        let q = (p as u128).checked_pow(m).filter(|&q| q <= MAX_FIELD_SIZE as u128);
        let q = q.ok_or_else(|| Error::InstanceTooLarge(format!("field of size {p}^{m}")))? as usize;
        let p = p as u16;
        let poly = first_primitive_poly(p, m, q);
        Ok(Self::with_poly(p, m, q, poly))
    }

    pub fn prime(p: u64) -> Result<Self> {
        Self::new(p, 1)
    }

    /// Splitting field for a group of exponent `exponent`: `m` is the
    /// multiplicative order of `p` modulo the `p'`-part of the exponent.
    pub fn splitting(p: u64, exponent: u64) -> Result<Self> {
        Self::new(p, splitting_degree(p, exponent))
    }

    fn with_poly(p: u16, m: u32, q: usize, poly: Vec<u16>) -> Self {
        let mut exp = vec![0 as Fq; q - 1];
        let mut log = vec![0u32; q];
        let mut cur = vec![0u16; m as usize];
        cur[0] = 1;
        for (i, slot) in exp.iter_mut().enumerate() {
            let code = encode(&cur, p);
            *slot = code;
            log[code as usize] = i as u32;
            cur = times_x(&cur, &poly, p);
        }
        let add = |a: Fq, b: Fq| -> Fq { digit_add(a, b, p, m) };
        let mut neg = vec![0 as Fq; q];
        for (a, slot) in neg.iter_mut().enumerate() {
            *slot = digit_neg(a as Fq, p, m);
        }
        let mut inv = vec![0 as Fq; q];
        for a in 1..q {
            let l = log[a] as usize;
            inv[a] = exp[(q - 1 - l) % (q - 1)];
        }
        let (add_table, mul_table) = if q <= TABLE_LIMIT {
            let mut at = vec![0 as Fq; q * q];
            let mut mt = vec![0 as Fq; q * q];
            for a in 0..q {
                for b in 0..q {
                    at[a * q + b] = add(a as Fq, b as Fq);
                    mt[a * q + b] = if a == 0 || b == 0 {
                        0
                    } else {
                        exp[(log[a] as usize + log[b] as usize) % (q - 1)]
                    };
                }
            }
            (Some(at), Some(mt))
        } else {
            (None, None)
        };
        Field {
            inner: Arc::new(Inner {
                p,
                m,
                q,
                poly,
                exp,
                log,
                inv,
                neg,
                add_table,
                mul_table,
            }),
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.inner.p as u64
    }

    pub fn degree(&self) -> u32 {
        self.inner.m
    }

    pub fn size(&self) -> usize {
        self.inner.q
    }

    pub fn defining_polynomial(&self) -> &[u16] {
        &self.inner.poly
    }

    #[inline]
    pub fn add(&self, a: Fq, b: Fq) -> Fq {
        if self.inner.p == 2 {
            return a ^ b;
        }
        match &self.inner.add_table {
            Some(t) => t[a as usize * self.inner.q + b as usize],
            None => digit_add(a, b, self.inner.p, self.inner.m),
        }
    }

    #[inline]
    pub fn neg(&self, a: Fq) -> Fq {
        self.inner.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: Fq, b: Fq) -> Fq {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fq, b: Fq) -> Fq {
        match &self.inner.mul_table {
            Some(t) => t[a as usize * self.inner.q + b as usize],
            None => {
                if a == 0 || b == 0 {
                    0
                } else {
                    let q1 = self.inner.q - 1;
                    let l = self.inner.log[a as usize] as usize + self.inner.log[b as usize] as usize;
                    self.inner.exp[l % q1]
                }
            }
        }
    }

    /// Multiplicative inverse; `inv(0)` is 0.
    #[inline]
    pub fn inv(&self, a: Fq) -> Fq {
        self.inner.inv[a as usize]
    }

    pub fn div(&self, a: Fq, b: Fq) -> Fq {
        debug_assert!(b != 0, "division by zero");
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: Fq, e: u64) -> Fq {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let q1 = (self.inner.q - 1) as u64;
        let l = self.inner.log[a as usize] as u64 * (e % q1) % q1;
        self.inner.exp[l as usize]
    }

    /// `dst += c * src`, the inner kernel of all elimination loops.
    #[inline]
    pub fn axpy(&self, dst: &mut [Fq], c: Fq, src: &[Fq]) {
        debug_assert_eq!(dst.len(), src.len());
        if c == 0 {
            return;
        }
        let inner = &*self.inner;
        if inner.q == 2 {
            for (d, &s) in dst.iter_mut().zip(src) {
                *d ^= s;
            }
            return;
        }
        match (&inner.mul_table, &inner.add_table) {
            (Some(mt), Some(at)) => {
                let q = inner.q;
                let row = &mt[c as usize * q..(c as usize + 1) * q];
                for (d, &s) in dst.iter_mut().zip(src) {
                    if s != 0 {
                        *d = at[*d as usize * q + row[s as usize] as usize];
                    }
                }
            }
            _ => {
                for (d, &s) in dst.iter_mut().zip(src) {
                    if s != 0 {
                        *d = self.add(*d, self.mul(c, s));
                    }
                }
            }
        }
    }

    pub fn scale(&self, v: &mut [Fq], c: Fq) {
        if c == 1 {
            return;
        }
        for x in v.iter_mut() {
            *x = self.mul(*x, c);
        }
    }

    pub fn dot(&self, a: &[Fq], b: &[Fq]) -> Fq {
        a.iter().zip(b).fold(0, |acc, (&x, &y)| self.add(acc, self.mul(x, y)))
    }

    /// Image of an integer in the prime field.
    pub fn from_int(&self, k: i64) -> Fq {
        k.rem_euclid(self.inner.p as i64) as Fq
    }

    /// A generator of the multiplicative group.
    pub fn primitive_element(&self) -> Fq {
        self.inner.exp[1 % (self.inner.q - 1)]
    }

    pub fn elements(&self) -> impl Iterator<Item = Fq> {
        0..self.inner.q as Fq
    }

    pub fn is_prime_field_element(&self, a: Fq) -> bool {
        (a as usize) < self.inner.p as usize
    }

    /// Coordinates of `a` over the prime field in the power basis.
    pub fn digits(&self, a: Fq) -> Vec<u16> {
        let p = self.inner.p;
        let mut a = a;
        (0..self.inner.m)
            .map(|_| {
                let d = a % p;
                a /= p;
                d
            })
            .collect()
    }

    pub fn from_digits(&self, digits: &[u16]) -> Fq {
        encode(digits, self.inner.p)
    }

    /// `x^{p^k}` for the `k`-th power of Frobenius.
    pub fn frobenius(&self, a: Fq, k: u32) -> Fq {
        self.pow(a, (self.inner.p as u64).pow(k % self.inner.m))
    }
}

/// Multiplicative order of `p` modulo the `p'`-part of `exponent`.
pub fn splitting_degree(p: u64, exponent: u64) -> u32 {
    let mut e = exponent.max(1);
    loop {
        let g = crate::group::gcd(p, e);
        if g == 1 {
            break;
        }
        e /= g;
    }
    if e == 1 {
        return 1;
    }
    let mut m = 1;
    let mut acc = p % e;
    while acc != 1 {
        acc = acc * p % e;
        m += 1;
    }
    m
}

fn encode(digits: &[u16], p: u16) -> Fq {
    digits.iter().rev().fold(0u32, |acc, &d| acc * p as u32 + d as u32) as Fq
}

fn digit_add(a: Fq, b: Fq, p: u16, m: u32) -> Fq {
    let (mut a, mut b) = (a as u32, b as u32);
    let p32 = p as u32;
    let mut out = 0u32;
    let mut place = 1u32;
    for _ in 0..m {
        out += ((a % p32 + b % p32) % p32) * place;
        a /= p32;
        b /= p32;
        place *= p32;
    }
    out as Fq
}

fn digit_neg(a: Fq, p: u16, m: u32) -> Fq {
    let mut a = a as u32;
    let p32 = p as u32;
    let mut out = 0u32;
    let mut place = 1u32;
    for _ in 0..m {
        out += ((p32 - a % p32) % p32) * place;
        a /= p32;
        place *= p32;
    }
    out as Fq
}

/// Multiplies a residue by `x` modulo the monic `poly`.
fn times_x(cur: &[u16], poly: &[u16], p: u16) -> Vec<u16> {
    let m = cur.len();
    let top = cur[m - 1] as u32;
    let mut out = vec![0u16; m];
    for i in (1..m).rev() {
        out[i] = cur[i - 1];
    }
    if m == 1 {
        out[0] = 0;
    }
    let p32 = p as u32;
    for (i, slot) in out.iter_mut().enumerate() {
        let sub = top * poly[i] as u32 % p32;
        *slot = ((*slot as u32 + p32 - sub) % p32) as u16;
    }
    out
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn poly_mul_mod(a: &[u16], b: &[u16], poly: &[u16], p: u16) -> Vec<u16> {
    // Horner over the digits of b, highest first
    let m = a.len();
    let p32 = p as u32;
    let mut acc = vec![0u16; m];
    for &d in b.iter().rev() {
        acc = times_x(&acc, poly, p);
        for i in 0..m {
            acc[i] = ((acc[i] as u32 + a[i] as u32 * d as u32) % p32) as u16;
        }
    }
    acc
}

fn x_pow_mod(e: u64, poly: &[u16], p: u16, m: usize) -> Vec<u16> {
    let mut base = vec![0u16; m];
    if m == 1 {
        base[0] = ((p as u32 - poly[0] as u32) % p as u32) as u16;
    } else {
        base[1] = 1;
    }
    let mut acc = vec![0u16; m];
    acc[0] = 1;
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mul_mod(&acc, &base, poly, p);
        }
        base = poly_mul_mod(&base, &base, poly, p);
        e >>= 1;
    }
    acc
}

/// Whether `x` has multiplicative order exactly `q - 1` modulo `poly`, which
/// forces the quotient ring to be a field.
fn is_primitive(poly: &[u16], p: u16, m: u32, q: usize) -> bool {
    if poly[0] == 0 {
        return false;
    }
    let m = m as usize;
    let mut one = vec![0u16; m];
    one[0] = 1;
    let order = (q - 1) as u64;
    if x_pow_mod(order, poly, p, m) != one {
        return false;
    }
    prime_factors(order)
        .into_iter()
        .all(|r| x_pow_mod(order / r, poly, p, m) != one)
}

fn first_primitive_poly(p: u16, m: u32, q: usize) -> Vec<u16> {
    let mu = m as usize;
    for code in 0..q {
        let mut poly = Vec::with_capacity(mu + 1);
        let mut c = code;
        for _ in 0..mu {
            poly.push((c % p as usize) as u16);
            c /= p as usize;
        }
        if is_primitive(&poly, p, m, q) {
            poly.push(1);
            return poly;
        }
    }
    unreachable!("primitive polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_axioms(f: &Field) {
        let q = f.size() as Fq;
        for a in 0..q {
            assert_eq!(f.add(a, f.neg(a)), 0);
            assert_eq!(f.mul(a, 1), a);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a)), 1);
            }
            for b in 0..q {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in [0, 1, q - 1, q / 2] {
                    let lhs = f.mul(a, f.add(b, c));
                    let rhs = f.add(f.mul(a, b), f.mul(a, c));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn small_fields_satisfy_axioms() {
        for (p, m) in [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (5, 1), (5, 2), (7, 1)] {
            check_axioms(&Field::new(p, m).unwrap());
        }
    }

    #[test]
    fn large_field_uses_log_tables() {
        let f = Field::new(3, 6).unwrap();
        assert_eq!(f.size(), 729);
        let g = f.primitive_element();
        assert_eq!(f.pow(g, 728), 1);
        assert_ne!(f.pow(g, 364), 1);
        for a in [1, 5, 100, 728] {
            assert_eq!(f.mul(a, f.inv(a)), 1);
            assert_eq!(f.sub(f.add(a, 17), 17), a);
        }
    }

    #[test]
    fn frobenius_fixes_prime_field() {
        let f = Field::new(2, 4).unwrap();
        for a in f.elements() {
            let fixed = f.frobenius(a, 1) == a;
            assert_eq!(fixed, f.is_prime_field_element(a));
            assert_eq!(f.frobenius(a, 4), a);
        }
    }

    #[test]
    fn f4_polynomial_is_x2_x_1() {
        let f = Field::new(2, 2).unwrap();
        assert_eq!(f.defining_polynomial(), &[1, 1, 1]);
        // x * x = x + 1
        assert_eq!(f.mul(2, 2), 3);
    }

    #[test]
    fn splitting_degrees() {
        assert_eq!(splitting_degree(2, 6), 2);
        assert_eq!(splitting_degree(3, 6), 1);
        assert_eq!(splitting_degree(2, 30), 4);
        assert_eq!(splitting_degree(3, 30), 4);
        assert_eq!(splitting_degree(5, 30), 2);
        assert_eq!(splitting_degree(2, 8), 1);
        assert_eq!(splitting_degree(3, 12), 2);
        // Not a prime: the loop still terminates.
        assert_eq!(splitting_degree(4, 6), 1);
    }
}
