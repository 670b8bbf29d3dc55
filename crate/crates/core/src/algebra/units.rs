use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::radical::number_to_vec;
use super::{Elem, FinAlgebra};
use crate::error::{Error, Result};
use crate::field::Fq;
use crate::linalg::{Mat, Subspace};

/// Parameters of [`unit_in_subspace`].
#[derive(Clone, Debug)]
pub struct UnitSearch {
    /// Scan every vector when `q^{dim V}` is at most this.
    pub exhaustive_limit: u64,
    pub random_trials: usize,
    pub seed: u64,
}

impl Default for UnitSearch {
    fn default() -> Self {
        UnitSearch {
            exhaustive_limit: 1_000_000,
            random_trials: 400,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum UnitSearchOutcome {
    Found { unit: Elem },
    /// Certified by an exhaustive scan.
    NoneExists,
    /// Random sampling found nothing. `failure_bound` bounds the probability
    /// of this outcome if a unit does exist (1.0 when no bound applies).
    Undetermined { trials: usize, failure_bound: f64 },
}

impl UnitSearchOutcome {
    pub fn unit(&self) -> Option<&Elem> {
        match self {
            UnitSearchOutcome::Found { unit } => Some(unit),
            _ => None,
        }
    }
}

/// Searches the subspace `v` of `a` for a unit.
pub fn unit_in_subspace(a: &FinAlgebra, v: &Subspace, opts: &UnitSearch) -> Result<UnitSearchOutcome> {
    let f = a.field();
    if v.ambient() != a.dim() {
        return Err(Error::arg("subspace lives in a space of the wrong dimension"));
    }
    let k = v.dim();
    if k == 0 {
        return Ok(UnitSearchOutcome::NoneExists);
    }
    if v.contains(f, &a.one()) {
        return Ok(UnitSearchOutcome::Found { unit: a.one() });
    }
    let lefts: Vec<Mat> = v.basis().iter().map(|b| a.left_matrix(b)).collect();
    let combine_matrix = |coords: &[Fq]| -> Mat {
        let mut m = Mat::zeros(a.dim(), a.dim());
        for (c, l) in coords.iter().zip(&lefts) {
            if *c != 0 {
                m = m.add(f, &scaled(f, l, *c));
            }
        }
        m
    };
    for (i, b) in v.basis().iter().enumerate() {
        if lefts[i].is_invertible(f) {
            return Ok(UnitSearchOutcome::Found { unit: b.clone() });
        }
    }
    let q = f.size() as u64;
    let total = q.checked_pow(k as u32).filter(|&t| t <= opts.exhaustive_limit);
    if let Some(total) = total {
        for n in 1..total {
            let coords = number_to_vec(n, q, k);
            if combine_matrix(&coords).is_invertible(f) {
                return Ok(UnitSearchOutcome::Found {
                    unit: v.combine(f, &coords),
                });
            }
        }
        return Ok(UnitSearchOutcome::NoneExists);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..opts.random_trials {
        let coords: Vec<Fq> = (0..k).map(|_| rng.gen_range(0..q) as Fq).collect();
        if combine_matrix(&coords).is_invertible(f) {
            return Ok(UnitSearchOutcome::Found {
                unit: v.combine(f, &coords),
            });
        }
    }
    // det of a generic element of v has degree <= dim A
    let ratio = a.dim() as f64 / q as f64;
    let failure_bound = if ratio < 1.0 {
        ratio.powi(opts.random_trials as i32)
    } else {
        1.0
    };
    Ok(UnitSearchOutcome::Undetermined {
        trials: opts.random_trials,
        failure_bound,
    })
}

fn scaled(f: &crate::field::Field, m: &Mat, c: Fq) -> Mat {
    let mut out = Mat::zeros(m.rows(), m.cols());
    for i in 0..m.rows() {
        let row: Vec<Fq> = m.row(i).iter().map(|&x| f.mul(x, c)).collect();
        out.row_mut(i).copy_from_slice(&row);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::radical;
    use crate::field::Field;

    #[test]
    fn whole_algebra_gives_one() {
        let a = FinAlgebra::truncated_polynomials(Field::prime(2).unwrap(), 2);
        let r = unit_in_subspace(&a, &Subspace::full(2), &UnitSearch::default()).unwrap();
        assert_eq!(r, UnitSearchOutcome::Found { unit: a.one() });
    }

    #[test]
    fn radical_has_no_unit() {
        let a = FinAlgebra::truncated_polynomials(Field::prime(3).unwrap(), 3);
        let j = radical(&a).unwrap();
        let r = unit_in_subspace(&a, &j, &UnitSearch::default()).unwrap();
        assert_eq!(r, UnitSearchOutcome::NoneExists);
    }

    #[test]
    fn finds_unit_in_shifted_line() {
        let a = FinAlgebra::truncated_polynomials(Field::prime(2).unwrap(), 2);
        let v = Subspace::span(a.field(), 2, &[vec![0, 1], vec![1, 1]]);
        let r = unit_in_subspace(&a, &v, &UnitSearch::default()).unwrap();
        assert!(a.is_unit(r.unit().unwrap()));
    }

    #[test]
    fn random_regime_reports_bound() {
        let f = Field::new(2, 4).unwrap();
        let a = FinAlgebra::diagonal(f, 6);
        // span of the first five coordinates never contains a unit
        let vecs: Vec<Vec<u16>> = (0..5).map(|i| a.basis_element(i)).collect();
        let v = Subspace::span(a.field(), 6, &vecs);
        let opts = UnitSearch {
            exhaustive_limit: 1000,
            random_trials: 10,
            seed: 3,
        };
        match unit_in_subspace(&a, &v, &opts).unwrap() {
            UnitSearchOutcome::Undetermined { trials, failure_bound } => {
                assert_eq!(trials, 10);
                assert!(failure_bound < 1e-2);
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
