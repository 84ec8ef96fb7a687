//! Prime-field arithmetic and dense linear algebra.
//!
//! Everything downstream (Gröbner reduction, slice matrices of module maps,
//! kernels, chain-map lifting) goes through the routines here. Matrices are
//! dense and row-major; pivoting is deterministic (first nonzero entry,
//! scanning columns left to right and rows top to bottom) so repeated runs
//! produce identical bases.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Characteristic used when nothing else is requested.
pub const DEFAULT_CHARACTERISTIC: u32 = 32003;

/// A prime field `F_p` with `p < 2^31`, so products of two residues fit in a `u64`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if p >= (1 << 31) {
            return Err(Error::input(format!("characteristic {p} is too large (must be below 2^31)")));
        }
        if !is_prime(p) {
            return Err(Error::input(format!("characteristic {p} is not prime")));
        }
        Ok(Self { p })
    }

    pub fn characteristic(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        (s % self.p as u64) as u32
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + (self.p - b)
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// `a + b * c`
    #[inline]
    pub fn mul_add(self, a: u32, b: u32, c: u32) -> u32 {
        ((a as u64 + b as u64 * c as u64) % self.p as u64) as u32
    }

    pub fn pow(self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1u32;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero in F_{}", self.p);
        self.pow(a, self.p as u64 - 2)
    }

    pub fn element(self, x: i64) -> FieldElement {
        FieldElement { value: self.reduce(x), field: self }
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let n = n as u64;
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A residue together with its field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u32,
    field: PrimeField,
}

impl FieldElement {
    pub fn value(self) -> u32 {
        self.value
    }

    pub fn field(self) -> PrimeField {
        self.field
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn inverse(self) -> Option<Self> {
        (self.value != 0).then(|| FieldElement { value: self.field.inv(self.value), field: self.field })
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

macro_rules! field_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                assert_eq!(self.field, rhs.field, "mixed characteristics");
                FieldElement { value: self.field.$method(self.value, rhs.value), field: self.field }
            }
        }
    };
}

field_binop!(Add, add);
field_binop!(Sub, sub);
field_binop!(Mul, mul);

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement { value: self.field.neg(self.value), field: self.field }
    }
}

/// Dense row-major matrix over a prime field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    entries: Vec<u32>,
}

impl ScalarMatrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Self { field, rows, cols, entries: vec![0; rows * cols] }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.entries[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from integer rows, reducing every entry.
    pub fn from_rows(field: PrimeField, rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(field, rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                m.entries[i * cols + j] = field.reduce(x);
            }
        }
        m
    }

    /// Builds a matrix from already-reduced column vectors.
    pub fn from_columns(field: PrimeField, rows: usize, columns: &[Vec<u32>]) -> Self {
        let cols = columns.len();
        let mut m = Self::zeros(field, rows, cols);
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length mismatch");
            for (i, &x) in c.iter().enumerate() {
                m.entries[i * cols + j] = x;
            }
        }
        m
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j * self.rows + i] = self.get(i, j);
            }
        }
        t
    }

    pub fn mul(&self, other: &ScalarMatrix) -> ScalarMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let f = self.field;
        let mut out = ScalarMatrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                let orow = other.row(k);
                let base = i * other.cols;
                for (j, &b) in orow.iter().enumerate() {
                    if b != 0 {
                        out.entries[base + j] = f.mul_add(out.entries[base + j], a, b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let f = self.field;
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(0u32, |acc, (&a, &b)| if a == 0 || b == 0 { acc } else { f.mul_add(acc, a, b) })
            })
            .collect()
    }

    /// Reduced row echelon form and the (strictly increasing) pivot columns.
    pub fn rref(&self) -> (ScalarMatrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field;
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    self.entries.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(self.get(r, c));
            for j in c..cols {
                let x = self.get(r, j);
                self.set(r, j, f.mul(x, inv));
            }
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c);
                if factor == 0 {
                    continue;
                }
                let neg = f.neg(factor);
                for j in c..cols {
                    let pv = self.entries[r * cols + j];
                    if pv != 0 {
                        let idx = i * cols + j;
                        self.entries[idx] = f.mul_add(self.entries[idx], neg, pv);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space, one vector per non-pivot column.
    pub fn kernel_basis(&self) -> Vec<Vec<u32>> {
        let f = self.field;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![0u32; self.cols];
                v[free] = 1;
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(r.get(row, free));
                }
                v
            })
            .collect()
    }

    /// Some `x` with `self * x = b`, or `None` when `b` is outside the column space.
    pub fn solve(&self, b: &[u32]) -> Result<Option<Vec<u32>>> {
        if b.len() != self.rows {
            return Err(Error::input(format!(
                "right-hand side has length {} but the matrix has {} rows",
                b.len(),
                self.rows
            )));
        }
        Ok(LinearSolver::new(self).solve(b))
    }
}

impl fmt::Display for ScalarMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

/// Reusable solver for `M x = b` with a fixed `M`.
///
/// Stores the reduced echelon form of `M` together with the row operations
/// `T` that produced it, so each solve is a matrix-vector product plus a
/// back-substitution read off the pivots.
#[derive(Clone, Debug)]
pub struct LinearSolver {
    field: PrimeField,
    rows: usize,
    cols: usize,
    transform: ScalarMatrix,
    pivots: Vec<usize>,
    echelon: ScalarMatrix,
}

impl LinearSolver {
    pub fn new(m: &ScalarMatrix) -> Self {
        let field = m.field;
        let (rows, cols) = (m.rows, m.cols);
        let mut aug = ScalarMatrix::zeros(field, rows, cols + rows);
        for i in 0..rows {
            for j in 0..cols {
                aug.set(i, j, m.get(i, j));
            }
            aug.set(i, cols + i, 1);
        }
        // Pivoting restricted to the first `cols` columns.
        let mut pivots = Vec::new();
        let mut r = 0;
        let width = cols + rows;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| aug.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..width {
                    aug.entries.swap(pr * width + j, r * width + j);
                }
            }
            let inv = field.inv(aug.get(r, c));
            for j in 0..width {
                let x = aug.get(r, j);
                aug.set(r, j, field.mul(x, inv));
            }
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let factor = aug.get(i, c);
                if factor == 0 {
                    continue;
                }
                let neg = field.neg(factor);
                for j in 0..width {
                    let pv = aug.entries[r * width + j];
                    if pv != 0 {
                        let idx = i * width + j;
                        aug.entries[idx] = field.mul_add(aug.entries[idx], neg, pv);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        let mut echelon = ScalarMatrix::zeros(field, rows, cols);
        let mut transform = ScalarMatrix::zeros(field, rows, rows);
        for i in 0..rows {
            for j in 0..cols {
                echelon.set(i, j, aug.get(i, j));
            }
            for j in 0..rows {
                transform.set(i, j, aug.get(i, cols + j));
            }
        }
        Self { field, rows, cols, transform, pivots, echelon }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn solve(&self, b: &[u32]) -> Option<Vec<u32>> {
        assert_eq!(b.len(), self.rows);
        let tb = self.transform.mul_vec(b);
        if tb[self.pivots.len()..].iter().any(|&x| x != 0) {
            return None;
        }
        let mut x = vec![0u32; self.cols];
        for (row, &pc) in self.pivots.iter().enumerate() {
            x[pc] = tb[row];
        }
        Some(x)
    }

    /// Null-space basis of the underlying matrix.
    pub fn kernel_basis(&self) -> Vec<Vec<u32>> {
        let f = self.field;
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![0u32; self.cols];
                v[free] = 1;
                for (row, &pc) in self.pivots.iter().enumerate() {
                    v[pc] = f.neg(self.echelon.get(row, free));
                }
                v
            })
            .collect()
    }
}

/// An incrementally grown subspace of `F_p^dim`, kept in reduced echelon form.
#[derive(Clone, Debug)]
pub struct EchelonSpace {
    field: PrimeField,
    dim: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl EchelonSpace {
    pub fn new(field: PrimeField, dim: usize) -> Self {
        Self { field, dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    /// Reduces `v` against the stored rows.
    pub fn reduce(&self, v: &mut [u32]) {
        let f = self.field;
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = v[pc];
            if c != 0 {
                let neg = f.neg(c);
                for (x, &r) in v.iter_mut().zip(row) {
                    if r != 0 {
                        *x = f.mul_add(*x, neg, r);
                    }
                }
            }
        }
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Adds `v`; returns `true` when it enlarged the space.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        assert_eq!(v.len(), self.dim);
        let f = self.field;
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(pc) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(w[pc]);
        for x in w.iter_mut() {
            *x = f.mul(*x, inv);
        }
        for row in self.rows.iter_mut() {
            let c = row[pc];
            if c != 0 {
                let neg = f.neg(c);
                for (x, &r) in row.iter_mut().zip(&w) {
                    if r != 0 {
                        *x = f.mul_add(*x, neg, r);
                    }
                }
            }
        }
        let at = self.pivots.partition_point(|&p| p < pc);
        self.pivots.insert(at, pc);
        self.rows.insert(at, w);
        true
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.rows
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f7() -> PrimeField {
        PrimeField::new(7).unwrap()
    }

    #[test]
    fn rejects_composite_characteristic() {
        assert!(PrimeField::new(32003).is_ok());
        assert!(PrimeField::new(9).is_err());
        assert!(PrimeField::new(1).is_err());
    }

    #[test]
    fn rref_examples() {
        let f = f7();
        let id = ScalarMatrix::identity(f, 2);
        assert_eq!(id.rref(), (id.clone(), vec![0, 1]));

        let z = ScalarMatrix::zeros(f, 2, 2);
        assert_eq!(z.rref(), (z.clone(), vec![]));

        let m = ScalarMatrix::from_rows(f, &[vec![1, 2], vec![2, 4]]);
        let expected = ScalarMatrix::from_rows(f, &[vec![1, 2], vec![0, 0]]);
        assert_eq!(m.rref(), (expected, vec![0]));
    }

    #[test]
    fn kernel_examples() {
        let f = f7();
        assert!(ScalarMatrix::identity(f, 2).kernel_basis().is_empty());
        assert_eq!(ScalarMatrix::zeros(f, 2, 3).kernel_basis().len(), 3);
        let k = ScalarMatrix::from_rows(f, &[vec![1, 2]]).kernel_basis();
        assert_eq!(k, vec![vec![5, 1]]);
    }

    #[test]
    fn solve_examples() {
        let f = f7();
        let id = ScalarMatrix::identity(f, 2);
        assert_eq!(id.solve(&[3, 4]).unwrap(), Some(vec![3, 4]));
        assert_eq!(ScalarMatrix::zeros(f, 2, 2).solve(&[1, 0]).unwrap(), None);
        let two = ScalarMatrix::from_rows(f, &[vec![2]]);
        assert_eq!(two.solve(&[3]).unwrap(), Some(vec![5]));
        assert!(two.solve(&[1, 2]).is_err());
    }

    #[test]
    fn echelon_space_membership() {
        let f = f7();
        let mut s = EchelonSpace::new(f, 3);
        assert!(s.insert(&[1, 2, 0]));
        assert!(s.insert(&[0, 1, 1]));
        assert!(!s.insert(&[1, 3, 1]));
        assert!(s.contains(&[2, 4, 0]));
        assert!(!s.contains(&[0, 0, 1]));
        assert_eq!(s.dim(), 2);
    }

    #[test]
    fn field_element_ops() {
        let f = f7();
        let a = f.element(3);
        let b = f.element(-2);
        assert_eq!((a + b).value(), 1);
        assert_eq!((a * b).value(), 1);
        assert_eq!((-a).value(), 4);
        assert_eq!(a.inverse().unwrap().value(), 5);
        assert!(f.element(14).inverse().is_none());
    }
}
