//! Dense matrices and subspaces over a [`Field`].
//!
//! Matrices are row-major. Echelon forms are fully reduced (leading ones,
//! pivot columns cleared), which makes them canonical.

use crate::field::{Field, Fq};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Fq>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(cols: usize, rows: &[Vec<Fq>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend_from_slice(r);
        }
        Mat {
            rows: rows.len(),
            cols,
            data,
        }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(rows: usize, cols: &[Vec<Fq>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, &x) in c.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Fq {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: Fq) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Fq] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [Fq] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Fq> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Fq>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn mul(&self, f: &Field, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            let mut acc = vec![0; other.cols];
            for k in 0..self.cols {
                f.axpy(&mut acc, self.get(i, k), other.row(k));
            }
            out.row_mut(i).copy_from_slice(&acc);
        }
        out
    }

    /// `M v`
    pub fn mul_vec(&self, f: &Field, v: &[Fq]) -> Vec<Fq> {
        (0..self.rows).map(|i| f.dot(self.row(i), v)).collect()
    }

    /// `v M`
    pub fn vec_mul(&self, f: &Field, v: &[Fq]) -> Vec<Fq> {
        let mut acc = vec![0; self.cols];
        for (k, &c) in v.iter().enumerate() {
            f.axpy(&mut acc, c, self.row(k));
        }
        acc
    }

    pub fn add(&self, f: &Field, other: &Mat) -> Mat {
        let mut out = self.clone();
        f.axpy(&mut out.data, 1, &other.data);
        out
    }

    pub fn sub(&self, f: &Field, other: &Mat) -> Mat {
        let mut out = self.clone();
        f.axpy(&mut out.data, f.neg(1), &other.data);
        out
    }

    /// Reduces in place to reduced row echelon form; returns pivot columns.
    pub fn rref_in_place(&mut self, f: &Field) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..self.cols {
                    self.data.swap(pr * self.cols + j, r * self.cols + j);
                }
            }
            let inv = f.inv(self.get(r, c));
            f.scale(self.row_mut(r), inv);
            let pivot_row = self.row(r).to_vec();
            for i in 0..self.rows {
                if i != r {
                    let x = self.get(i, c);
                    if x != 0 {
                        f.axpy(self.row_mut(i), f.neg(x), &pivot_row);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rref(&self, f: &Field) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let piv = m.rref_in_place(f);
        (m, piv)
    }

    pub fn rank(&self, f: &Field) -> usize {
        self.rref(f).1.len()
    }

    /// Basis of `{x : M x = 0}`, one vector per free column, in column order.
    pub fn kernel(&self, f: &Field) -> Vec<Vec<Fq>> {
        let (r, pivots) = self.rref(f);
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0; self.cols];
            v[free] = 1;
            for (k, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.get(k, free));
            }
            out.push(v);
        }
        out
    }

    /// Basis of `{x : x M = 0}`.
    pub fn left_kernel(&self, f: &Field) -> Vec<Vec<Fq>> {
        self.transpose().kernel(f)
    }

    pub fn inverse(&self, f: &Field) -> Option<Mat> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Mat::zeros(n, 2 * n);
        for i in 0..n {
            aug.row_mut(i)[..n].copy_from_slice(self.row(i));
            aug.set(i, n + i, 1);
        }
        let piv = aug.rref_in_place(f);
        if piv.len() < n || piv[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Mat::zeros(n, n);
        for i in 0..n {
            inv.row_mut(i).copy_from_slice(&aug.row(i)[n..]);
        }
        Some(inv)
    }

    pub fn is_invertible(&self, f: &Field) -> bool {
        self.rows == self.cols && self.rank(f) == self.rows
    }

    /// Some `x` with `M x = b`.
    pub fn solve(&self, f: &Field, b: &[Fq]) -> Option<Vec<Fq>> {
        let mut aug = Mat::zeros(self.rows, self.cols + 1);
        for (i, &bi) in b.iter().enumerate().take(self.rows) {
            aug.row_mut(i)[..self.cols].copy_from_slice(self.row(i));
            aug.set(i, self.cols, bi);
        }
        let piv = aug.rref_in_place(f);
        if piv.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![0; self.cols];
        for (k, &c) in piv.iter().enumerate() {
            x[c] = aug.get(k, self.cols);
        }
        Some(x)
    }

    pub fn is_permutation_matrix(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        let mut col_hit = vec![false; self.cols];
        for i in 0..self.rows {
            let nz: Vec<usize> = (0..self.cols).filter(|&j| self.get(i, j) != 0).collect();
            if nz.len() != 1 || self.get(i, nz[0]) != 1 || col_hit[nz[0]] {
                return false;
            }
            col_hit[nz[0]] = true;
        }
        true
    }
}

pub fn is_zero(v: &[Fq]) -> bool {
    v.iter().all(|&x| x == 0)
}

pub fn unit_vector(n: usize, i: usize) -> Vec<Fq> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

/// A subspace of `F^n` held as a reduced echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    n: usize,
    basis: Vec<Vec<Fq>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(n: usize) -> Self {
        Subspace {
            n,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(n: usize) -> Self {
        Subspace {
            n,
            basis: (0..n).map(|i| unit_vector(n, i)).collect(),
            pivots: (0..n).collect(),
        }
    }

    pub fn span(f: &Field, n: usize, vectors: &[Vec<Fq>]) -> Self {
        let mut s = Self::zero(n);
        for v in vectors {
            s.insert(f, v);
            if s.dim() == n {
                break;
            }
        }
        s
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Fq>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its echelon projection; zero iff `v` lies in the subspace.
    pub fn reduce(&self, f: &Field, v: &[Fq]) -> Vec<Fq> {
        let mut r = v.to_vec();
        for (b, &pc) in self.basis.iter().zip(&self.pivots) {
            let x = r[pc];
            if x != 0 {
                f.axpy(&mut r, f.neg(x), b);
            }
        }
        r
    }

    pub fn contains(&self, f: &Field, v: &[Fq]) -> bool {
        is_zero(&self.reduce(f, v))
    }

    /// Coordinates with respect to [`Subspace::basis`], if `v` lies inside.
    pub fn coords(&self, f: &Field, v: &[Fq]) -> Option<Vec<Fq>> {
        if !self.contains(f, v) {
            return None;
        }
        Some(self.pivots.iter().map(|&pc| v[pc]).collect())
    }

    pub fn combine(&self, f: &Field, coords: &[Fq]) -> Vec<Fq> {
        let mut out = vec![0; self.n];
        for (b, &c) in self.basis.iter().zip(coords) {
            f.axpy(&mut out, c, b);
        }
        out
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, f: &Field, v: &[Fq]) -> bool {
        let mut r = self.reduce(f, v);
        let Some(pc) = r.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(r[pc]);
        f.scale(&mut r, inv);
        for b in self.basis.iter_mut() {
            let x = b[pc];
            if x != 0 {
                f.axpy(b, f.neg(x), &r);
            }
        }
        let pos = self.pivots.partition_point(|&c| c < pc);
        self.pivots.insert(pos, pc);
        self.basis.insert(pos, r);
        true
    }

    pub fn is_subspace_of(&self, f: &Field, other: &Subspace) -> bool {
        self.basis.iter().all(|b| other.contains(f, b))
    }

    pub fn sum(&self, f: &Field, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for b in &other.basis {
            s.insert(f, b);
        }
        s
    }

    pub fn intersect(&self, f: &Field, other: &Subspace) -> Subspace {
        if self.dim() == 0 || other.dim() == 0 {
            return Subspace::zero(self.n);
        }
        // solve Σ a_i u_i - Σ b_j w_j = 0
        let mut cols: Vec<Vec<Fq>> = self.basis.clone();
        for w in &other.basis {
            cols.push(w.iter().map(|&x| f.neg(x)).collect());
        }
        let m = Mat::from_cols(self.n, &cols);
        let k = self.dim();
        let vecs: Vec<Vec<Fq>> = m.kernel(f).into_iter().map(|sol| self.combine(f, &sol[..k])).collect();
        Subspace::span(f, self.n, &vecs)
    }

    /// Echelon-basis matrix (rows are basis vectors).
    pub fn matrix(&self) -> Mat {
        Mat::from_rows(self.n, &self.basis)
    }
}
