//! Algebra interchange files (JSON).
//!
//! Structure constants are sparse `[i, j, k, c]` quadruples meaning that
//! `b_i b_j` has coefficient `c` at `b_k`, sorted, zero entries omitted.
//! Field elements are integer codes (base-p digits of the power basis).

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::FinAlgebra;
use crate::error::{Error, Result};
use crate::field::{Field, Fq};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub p: u64,
    pub m: u32,
    pub defining_polynomial: Vec<u16>,
    pub dimension: usize,
    pub structure_constants: Vec<[u32; 4]>,
    pub unit: Vec<Fq>,
}

impl AlgebraFile {
    pub fn from_algebra(a: &FinAlgebra) -> Self {
        let d = a.dim();
        let mut consts = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for (k, &c) in a.basis_product(i, j).iter().enumerate() {
                    if c != 0 {
                        consts.push([i as u32, j as u32, k as u32, c as u32]);
                    }
                }
            }
        }
        AlgebraFile {
            p: a.field().characteristic(),
            m: a.field().degree(),
            defining_polynomial: a.field().defining_polynomial().to_vec(),
            dimension: d,
            structure_constants: consts,
            unit: a.one(),
        }
    }

    pub fn to_algebra(&self) -> Result<FinAlgebra> {
        let field = Field::new(self.p, self.m)?;
        if field.defining_polynomial() != self.defining_polynomial.as_slice() {
            return Err(Error::arg(format!(
                "defining polynomial {:?} differs from the canonical {:?}",
                self.defining_polynomial,
                field.defining_polynomial()
            )));
        }
        let d = self.dimension;
        let mut consts = vec![Vec::new(); d * d];
        for &[i, j, k, c] in &self.structure_constants {
            let (i, j) = (i as usize, j as usize);
            if i >= d || j >= d || c as usize >= field.size() {
                return Err(Error::arg(format!("structure constant [{i}, {j}, {k}, {c}] out of range")));
            }
            consts[i * d + j].push((k as usize, c as Fq));
        }
        FinAlgebra::new(field, d, consts, self.unit.clone())
    }

    /// Canonical serialization (fixed field order, one line).
    pub fn to_canonical_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}

pub fn read_algebra(path: impl AsRef<Path>) -> Result<FinAlgebra> {
    let text = std::fs::read_to_string(path)?;
    let file: AlgebraFile = serde_json::from_str(&text)?;
    file.to_algebra()
}

pub fn write_algebra(a: &FinAlgebra, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, AlgebraFile::from_algebra(a).to_canonical_json())?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_is_bit_exact() {
        let a = FinAlgebra::matrix_algebra(Field::new(2, 2).unwrap(), 2);
        let file = AlgebraFile::from_algebra(&a);
        let text = file.to_canonical_json();
        let back: AlgebraFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back, file);
        let b = back.to_algebra().unwrap();
        assert_eq!(AlgebraFile::from_algebra(&b).to_canonical_json(), text);
    }

    #[test]
    fn rejects_foreign_polynomial() {
        let a = FinAlgebra::ground_field(Field::new(2, 2).unwrap());
        let mut file = AlgebraFile::from_algebra(&a);
        file.defining_polynomial = vec![1, 0, 1];
        assert!(file.to_algebra().is_err());
    }

    #[test]
    fn file_roundtrip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("a.json");
        let a = FinAlgebra::truncated_polynomials(Field::prime(5).unwrap(), 3);
        write_algebra(&a, &path).unwrap();
        let b = read_algebra(&path).unwrap();
        assert_eq!(AlgebraFile::from_algebra(&b), AlgebraFile::from_algebra(&a));
    }
}
