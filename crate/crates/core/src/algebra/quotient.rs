use crate::field::{Field, Fq};
use crate::linalg::Subspace;

/// Coordinates of `V / S` for subspaces `S <= V` of a common ambient space.
#[derive(Clone, Debug)]
pub struct QuotientSpace {
    sub: Subspace,
    reps: Subspace,
}

impl QuotientSpace {
    pub fn new(f: &Field, whole: &Subspace, sub: &Subspace) -> Self {
        let reduced: Vec<Vec<Fq>> = whole.basis().iter().map(|v| sub.reduce(f, v)).collect();
        QuotientSpace {
            sub: sub.clone(),
            reps: Subspace::span(f, whole.ambient(), &reduced),
        }
    }

    pub fn dim(&self) -> usize {
        self.reps.dim()
    }

    /// Coordinates of the class of `v`; `v` must lie in the larger space.
    pub fn coords(&self, f: &Field, v: &[Fq]) -> Vec<Fq> {
        let r = self.sub.reduce(f, v);
        self.reps.coords(f, &r).expect("vector lies in the larger space")
    }

    pub fn is_zero(&self, f: &Field, v: &[Fq]) -> bool {
        self.sub.contains(f, v)
    }

    /// Representative vectors of the quotient basis.
    pub fn representatives(&self) -> &[Vec<Fq>] {
        self.reps.basis()
    }

    pub fn lift(&self, f: &Field, coords: &[Fq]) -> Vec<Fq> {
        self.reps.combine(f, coords)
    }
}
