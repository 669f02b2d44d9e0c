//! Dense exact linear algebra over the prime field GF(p).
//!
//! Everything downstream (representations, Hom spaces, filtrations) reduces to
//! the operations here: reduced row echelon form, kernels, linear solves, and
//! subspace arithmetic. Arithmetic is exact; there are no tolerances anywhere.
//!
//! Pivoting is deterministic (first nonzero entry), so every basis produced by
//! this module is reproducible across runs. Subspaces are kept in a canonical
//! column basis (the transposed RREF of their span), which makes subspace
//! equality a plain matrix comparison.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatError {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} out of range (need 2 <= p < 2^31)")]
    ModulusOutOfRange(u64),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("fields differ: GF({0}) vs GF({1})")]
    FieldMismatch(u64, u64),
    #[error("entry {0} out of range for GF({1})")]
    EntryOutOfRange(u64, u64),
    #[error("row {row} has length {got}, expected {expected}")]
    RaggedRows {
        row: usize,
        got: usize,
        expected: usize,
    },
}

/// The prime field GF(p), with p checked prime at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    p: u64,
}

impl FieldSpec {
    /// Desk scale: p < 2^31 keeps (p-1)^2 well inside u64.
    pub fn new(p: u64) -> Result<Self, MatError> {
        if p < 2 || p >= (1 << 31) {
            return Err(MatError::ModulusOutOfRange(p));
        }
        if !is_prime(p) {
            return Err(MatError::NotPrime(p));
        }
        Ok(FieldSpec { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn neg(&self, a: u64) -> u64 {
        (self.p - a % self.p) % self.p
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    /// Multiplicative inverse by Fermat; panics on zero.
    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.p != 0, "inverse of zero in GF({})", self.p);
        self.pow(a, self.p - 2)
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        base %= self.p;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }

    pub fn reduce(&self, a: u64) -> u64 {
        a % self.p
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Dense matrix over GF(p), row-major. 0×n and n×0 matrices are legal and
/// represent maps to or from the zero space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    entries: Vec<u64>,
    field: FieldSpec,
}

impl Mat {
    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            entries: vec![0; rows * cols],
            field,
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Mat::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from rows, reducing entries mod p.
    pub fn from_rows(field: FieldSpec, rows: &[Vec<u64>]) -> Result<Self, MatError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut entries = Vec::with_capacity(r * c);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != c {
                return Err(MatError::RaggedRows {
                    row: i,
                    got: row.len(),
                    expected: c,
                });
            }
            entries.extend(row.iter().map(|&e| field.reduce(e)));
        }
        Ok(Mat {
            rows: r,
            cols: c,
            entries,
            field,
        })
    }

    /// Like `from_rows` but with an explicit shape, so 0×n and n×0 survive.
    pub fn from_rows_sized(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        data: &[Vec<u64>],
    ) -> Result<Self, MatError> {
        if data.len() != rows {
            return Err(MatError::DimensionMismatch(format!(
                "expected {} rows, got {}",
                rows,
                data.len()
            )));
        }
        let mut entries = Vec::with_capacity(rows * cols);
        for (i, row) in data.iter().enumerate() {
            if row.len() != cols {
                return Err(MatError::RaggedRows {
                    row: i,
                    got: row.len(),
                    expected: cols,
                });
            }
            entries.extend(row.iter().map(|&e| field.reduce(e)));
        }
        Ok(Mat {
            rows,
            cols,
            entries,
            field,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        debug_assert!(i < self.rows && j < self.cols);
        self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        debug_assert!(i < self.rows && j < self.cols);
        self.entries[i * self.cols + j] = self.field.reduce(v);
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    /// Row-major nested vectors, the JSON wire form.
    pub fn to_rows(&self) -> Vec<Vec<u64>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j)).collect())
            .collect()
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zero(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.field, other.field, "field mismatch");
        assert_eq!(
            self.cols, other.rows,
            "shape mismatch: {}x{} * {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut out = Mat::zero(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = self.field.add(out.get(i, j), self.field.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows);
        assert_eq!(self.cols, other.cols);
        let mut out = self.clone();
        for (e, o) in out.entries.iter_mut().zip(other.entries.iter()) {
            *e = self.field.add(*e, *o);
        }
        out
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows);
        assert_eq!(self.cols, other.cols);
        let mut out = self.clone();
        for (e, o) in out.entries.iter_mut().zip(other.entries.iter()) {
            *e = self.field.sub(*e, *o);
        }
        out
    }

    pub fn scale(&self, c: u64) -> Mat {
        let mut out = self.clone();
        for e in out.entries.iter_mut() {
            *e = self.field.mul(*e, c);
        }
        out
    }

    /// Horizontal concatenation [self | other].
    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows);
        let mut out = Mat::zero(self.field, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j));
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j));
            }
        }
        out
    }

    /// Vertical concatenation [self; other].
    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols);
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Mat {
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
            field: self.field,
        }
    }

    pub fn column(&self, j: usize) -> Mat {
        let mut out = Mat::zero(self.field, self.rows, 1);
        for i in 0..self.rows {
            out.set(i, 0, self.get(i, j));
        }
        out
    }

    pub fn select_columns(&self, sel: &[usize]) -> Mat {
        let mut out = Mat::zero(self.field, self.rows, sel.len());
        for (jj, &j) in sel.iter().enumerate() {
            for i in 0..self.rows {
                out.set(i, jj, self.get(i, j));
            }
        }
        out
    }

    pub fn select_rows(&self, sel: &[usize]) -> Mat {
        let mut out = Mat::zero(self.field, sel.len(), self.cols);
        for (ii, &i) in sel.iter().enumerate() {
            for j in 0..self.cols {
                out.set(ii, j, self.get(i, j));
            }
        }
        out
    }

    /// Flattens row-major into a column vector of length rows*cols.
    pub fn vectorize(&self) -> Mat {
        Mat {
            rows: self.rows * self.cols,
            cols: 1,
            entries: self.entries.clone(),
            field: self.field,
        }
    }

    /// Inverse of vectorize.
    pub fn from_vector(field: FieldSpec, rows: usize, cols: usize, v: &Mat) -> Mat {
        assert_eq!(v.cols, 1);
        assert_eq!(v.rows, rows * cols);
        Mat {
            rows,
            cols,
            entries: v.entries.clone(),
            field,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    pub fn inverse(&self) -> Option<Mat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let aug = self.hstack(&Mat::identity(self.field, n));
        let r = aug.rref();
        if r.rank < n {
            return None;
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        Some(r.mat.select_columns(&cols))
    }
}

/// Result of reduced row echelon form.
#[derive(Debug, Clone)]
pub struct Rref {
    pub mat: Mat,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl Mat {
    /// Unique reduced row echelon form. Deterministic: the pivot is the first
    /// nonzero entry scanning down the current column.
    pub fn rref(&self) -> Rref {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0usize;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            // find pivot
            let mut pr = None;
            for i in row..m.rows {
                if m.get(i, col) != 0 {
                    pr = Some(i);
                    break;
                }
            }
            let Some(pr) = pr else { continue };
            // swap into place
            if pr != row {
                for j in 0..m.cols {
                    let a = m.get(row, j);
                    let b = m.get(pr, j);
                    m.set(row, j, b);
                    m.set(pr, j, a);
                }
            }
            // normalize
            let inv = f.inv(m.get(row, col));
            for j in col..m.cols {
                let v = f.mul(m.get(row, j), inv);
                m.set(row, j, v);
            }
            // eliminate above and below
            for i in 0..m.rows {
                if i == row {
                    continue;
                }
                let c = m.get(i, col);
                if c == 0 {
                    continue;
                }
                for j in col..m.cols {
                    let v = f.sub(m.get(i, j), f.mul(c, m.get(row, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Rref {
            rank: pivots.len(),
            mat: m,
            pivots,
        }
    }

    /// Basis of {x : self·x = 0}, as a canonical subspace of GF(p)^cols.
    pub fn kernel_basis(&self) -> Subspace {
        let r = self.rref();
        let f = self.field;
        let n = self.cols;
        let free: Vec<usize> = (0..n).filter(|j| !r.pivots.contains(j)).collect();
        let mut basis = Mat::zero(f, n, free.len());
        for (k, &fc) in free.iter().enumerate() {
            basis.set(fc, k, 1);
            for (pi, &pc) in r.pivots.iter().enumerate() {
                basis.set(pc, k, f.neg(r.mat.get(pi, fc)));
            }
        }
        Subspace::from_span(&basis)
    }

    /// Any X with self·X = b, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &Mat) -> Result<Option<Mat>, MatError> {
        if self.rows != b.rows {
            return Err(MatError::DimensionMismatch(format!(
                "solve: {} equations vs {} right-hand rows",
                self.rows, b.rows
            )));
        }
        if self.field != b.field {
            return Err(MatError::FieldMismatch(self.field.p, b.field.p));
        }
        let aug = self.hstack(b);
        let r = aug.rref();
        // any pivot in the right block means inconsistency
        if r.pivots.iter().any(|&c| c >= self.cols) {
            return Ok(None);
        }
        let mut x = Mat::zero(self.field, self.cols, b.cols);
        for (pi, &pc) in r.pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, r.mat.get(pi, self.cols + j));
            }
        }
        Ok(Some(x))
    }

    /// Basis of the column space, canonical.
    pub fn column_space(&self) -> Subspace {
        Subspace::from_span(self)
    }
}

/// A subspace of GF(p)^ambient_dim, stored via a canonical column basis: the
/// transposed RREF of the span. Two subspaces are equal iff their `basis`
/// matrices are equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Mat,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Mat::zero(field, ambient_dim, 0),
        }
    }

    pub fn full(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Mat::identity(field, ambient_dim),
        }
    }

    /// Canonicalizes the column span of `span`.
    pub fn from_span(span: &Mat) -> Self {
        let r = span.transpose().rref();
        let sel: Vec<usize> = (0..r.rank).collect();
        Subspace {
            ambient_dim: span.rows(),
            basis: r.mat.select_rows(&sel).transpose(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn field(&self) -> FieldSpec {
        self.basis.field()
    }

    /// Canonical basis, columns independent.
    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    pub fn contains_vector(&self, v: &Mat) -> bool {
        assert_eq!(v.rows(), self.ambient_dim);
        assert_eq!(v.cols(), 1);
        matches!(self.basis.solve(v), Ok(Some(_)))
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), MatError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(MatError::DimensionMismatch(format!(
                "ambient dims differ: {} vs {}",
                self.ambient_dim, other.ambient_dim
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, MatError> {
        self.check_ambient(other)?;
        Ok(Subspace::from_span(&self.basis.hstack(&other.basis)))
    }

    /// Intersection via the kernel of [U | -V].
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, MatError> {
        self.check_ambient(other)?;
        let stacked = self.basis.hstack(&other.basis.scale(self.field().neg(1)));
        let ker = stacked.kernel_basis();
        // first block of each kernel vector gives coefficients in U
        let rows: Vec<usize> = (0..self.dim()).collect();
        let coeffs = ker.basis().select_rows(&rows);
        Ok(Subspace::from_span(&self.basis.mul(&coeffs)))
    }

    pub fn is_contained_in(&self, other: &Subspace) -> Result<bool, MatError> {
        self.check_ambient(other)?;
        let target_rank = other.dim();
        for j in 0..self.dim() {
            let col = self.basis.column(j);
            let aug = other.basis.hstack(&col);
            if aug.rank() != target_rank {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Coordinates of `sub` (a subspace of the same ambient space, contained
    /// in self) with respect to self's basis.
    pub fn coords_of(&self, sub: &Subspace) -> Result<Mat, MatError> {
        self.check_ambient(sub)?;
        match self.basis.solve(sub.basis())? {
            Some(x) => Ok(x),
            None => Err(MatError::DimensionMismatch(
                "coords_of: subspace not contained".into(),
            )),
        }
    }
}

/// Projection and section realizing GF(p)^ambient / u.
///
/// `proj` has rank ambient − dim u with kernel exactly u; `proj · sect` is the
/// identity on the quotient. The section columns are standard basis vectors
/// chosen greedily, so coordinates are reproducible.
pub fn quotient_coords(field: FieldSpec, ambient_dim: usize, u: &Subspace) -> (Mat, Mat) {
    assert_eq!(u.ambient_dim(), ambient_dim);
    let k = u.dim();
    let q = ambient_dim - k;
    // greedily extend u's basis by standard vectors
    let mut ext = u.basis().clone();
    let mut chosen = Vec::new();
    for i in 0..ambient_dim {
        if ext.cols() == ambient_dim {
            break;
        }
        let mut e = Mat::zero(field, ambient_dim, 1);
        e.set(i, 0, 1);
        let cand = ext.hstack(&e);
        if cand.rank() == ext.cols() + 1 {
            ext = cand;
            chosen.push(i);
        }
    }
    assert_eq!(ext.cols(), ambient_dim, "basis extension failed");
    let inv = ext.inverse().expect("extended basis is invertible");
    let rows: Vec<usize> = (k..ambient_dim).collect();
    let proj = inv.select_rows(&rows);
    let mut sect = Mat::zero(field, ambient_dim, q);
    for (jj, &i) in chosen.iter().enumerate() {
        sect.set(i, jj, 1);
    }
    (proj, sect)
}
