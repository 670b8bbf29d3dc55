use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{0, .., n-1}`; displayed and parsed 1-based in cycle notation.
///
/// Products compose right to left: `(a * b)(i) = a(b(i))`, so groups act on
/// the left.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u16>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree as u16).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<u16>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(Error::arg(format!("images {images:?} are not a bijection")));
            }
            seen[i] = true;
        }
        Ok(Perm { images })
    }

    /// Parses cycle notation such as `(1 2 3)(4 5)` on `degree` points.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self> {
        let mut images: Vec<u16> = (0..degree as u16).collect();
        let mut used = vec![false; degree];
        let mut rest = text.trim();
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::arg(format!("expected '(' in {text:?}")))?;
            let close = open
                .find(')')
                .ok_or_else(|| Error::arg(format!("unbalanced cycle in {text:?}")))?;
            let body = &open[..close];
            let points: Vec<usize> = body
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|_| Error::arg(format!("bad point {s:?} in {text:?}")))
                })
                .collect::<Result<_>>()?;
            for &pt in &points {
                if pt == 0 || pt > degree {
                    return Err(Error::arg(format!("point {pt} outside 1..={degree}")));
                }
                if used[pt - 1] {
                    return Err(Error::arg(format!("point {pt} repeated in {text:?}")));
                }
                used[pt - 1] = true;
            }
            for (k, &pt) in points.iter().enumerate() {
                let next = points[(k + 1) % points.len()];
                images[pt - 1] = (next - 1) as u16;
            }
            rest = open[close + 1..].trim_start();
        }
        Ok(Perm { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> &[u16] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    /// `self * other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: other.images.iter().map(|&j| self.images[j as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u16; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u16;
        }
        Perm { images: inv }
    }

    /// `self * other * self^-1`.
    pub fn conjugate(&self, other: &Perm) -> Perm {
        self.compose(other).compose(&self.inverse())
    }

    pub fn pow(&self, mut e: u64) -> Perm {
        let mut base = self.clone();
        let mut acc = Perm::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.degree()];
        let mut ord: u64 = 1;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.apply(i);
                len += 1;
            }
            ord = lcm(ord, len);
        }
        ord
    }

    /// Places `left` on the first block of points and `right` on the second.
    pub fn direct_pair(left: &Perm, right: &Perm) -> Perm {
        let n = left.degree() as u16;
        let mut images = left.images.clone();
        images.extend(right.images.iter().map(|&j| j + n));
        Perm { images }
    }

    /// Inverse of [`Perm::direct_pair`] for a permutation preserving both halves.
    pub fn split_pair(&self, left_degree: usize) -> (Perm, Perm) {
        let n = left_degree as u16;
        let left = Perm {
            images: self.images[..left_degree].to_vec(),
        };
        let right = Perm {
            images: self.images[left_degree..].iter().map(|&j| j - n).collect(),
        };
        (left, right)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            let mut cyc = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cyc.push(i);
                i = self.apply(i);
            }
            out.push(cyc);
        }
        out
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_roundtrip() {
        let p = Perm::parse_cycles("(1 2 3)(4 5)", 6).unwrap();
        assert_eq!(p.to_string(), "(1 2 3)(4 5)");
        assert_eq!(p.order(), 6);
        assert_eq!(Perm::parse_cycles("()", 3).unwrap(), Perm::identity(3));
    }

    #[test]
    fn composition_is_right_to_left() {
        let a = Perm::parse_cycles("(1 2)", 3).unwrap();
        let b = Perm::parse_cycles("(2 3)", 3).unwrap();
        // apply b then a: 2 -> 3 -> 3, 3 -> 2 -> 1
        let ab = a.compose(&b);
        assert_eq!(ab.apply(1), 2);
        assert_eq!(ab.apply(2), 0);
    }

    #[test]
    fn rejects_bad_cycles() {
        assert!(Perm::parse_cycles("(1 2", 3).is_err());
        assert!(Perm::parse_cycles("(1 4)", 3).is_err());
        assert!(Perm::parse_cycles("(1 2)(2 3)", 3).is_err());
    }

    #[test]
    fn pair_split_inverts_direct_pair() {
        let a = Perm::parse_cycles("(1 2 3)", 3).unwrap();
        let b = Perm::parse_cycles("(1 2)", 3).unwrap();
        let ab = Perm::direct_pair(&a, &b);
        assert_eq!(ab.split_pair(3), (a, b));
    }
}
