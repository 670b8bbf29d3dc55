use super::PermGroup;

/// Cayley table of an enumerated group, indexed like `PermGroup::elements`.
#[derive(Debug, Clone)]
pub struct GroupTable {
    n: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
}

impl GroupTable {
    pub(crate) fn build(g: &PermGroup) -> Self {
        let n = g.order();
        let mut mul = vec![0u32; n * n];
        for (i, a) in g.elements().iter().enumerate() {
            for (j, b) in g.elements().iter().enumerate() {
                mul[i * n + j] = g.index_of(&a.compose(b)).expect("closed") as u32;
            }
        }
        let mut inv = vec![0u32; n];
        for i in 0..n {
            for j in 0..n {
                if mul[i * n + j] == 0 {
                    inv[i] = j as u32;
                    break;
                }
            }
        }
        GroupTable { n, mul, inv }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `g x g^-1`
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn pow(&self, a: usize, e: u64) -> usize {
        let mut acc = 0;
        for _ in 0..e {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn normalizes(&self, g: usize, h: &ElementSet) -> bool {
        h.iter().all(|x| h.contains(self.conj(g, x)))
    }

    /// `<H, g>` when `g` normalizes `H` and `g^p` lies in `H`.
    pub(crate) fn extend_normalizing(&self, h: &ElementSet, g: usize, p: u64) -> ElementSet {
        let mut out = h.clone();
        let mut gk = 0;
        for _ in 1..p {
            gk = self.mul(gk, g);
            for x in h.iter() {
                out.insert(self.mul(gk, x));
            }
        }
        out
    }

    /// Closure of `H` together with one extra element.
    pub(crate) fn join_element(&self, h: &ElementSet, g: usize) -> ElementSet {
        let gens: Vec<usize> = h.iter().chain(std::iter::once(g)).collect();
        self.closure(&gens)
    }

    pub fn closure(&self, gens: &[usize]) -> ElementSet {
        let mut set = ElementSet::singleton(self.n, 0);
        let mut stack = vec![0usize];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !set.contains(y) {
                    set.insert(y);
                    stack.push(y);
                }
            }
        }
        set
    }
}

/// A subset of a group's elements stored as a bitset over element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet {
    words: Vec<u64>,
    n: usize,
}

impl ElementSet {
    pub fn empty(n: usize) -> Self {
        ElementSet {
            words: vec![0; n.div_ceil(64)],
            n,
        }
    }

    pub fn singleton(n: usize, i: usize) -> Self {
        let mut s = Self::empty(n);
        s.insert(i);
        s
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for i in 0..n {
            s.insert(i);
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        ElementSet {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
            n: self.n,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&i| self.contains(i))
    }
}
