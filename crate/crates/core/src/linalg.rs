//! Dense linear algebra over a prime field `GF(p)`.
//!
//! Matrices act on row vectors (`x ↦ x·M`) everywhere else in the crate, but the
//! primitives here are convention-free: [`Matrix::kernel_basis`] is the right
//! null space `{v : M·v = 0}` and [`Matrix::left_kernel_basis`] is `{x : x·M = 0}`.
//!
//! Elimination is deterministic (leftmost pivot column, first nonzero row), so
//! every derived basis is reproducible bit for bit.

use std::fmt;

use crate::error::Error;

/// Default prime used when a presentation does not name one.
pub const DEFAULT_PRIME: u32 = 101;

/// The prime field `GF(p)`. Elements are `u32` values in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, Error> {
        if !(2..(1 << 31)).contains(&p) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p: p as u32 })
    }

    pub fn p(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        if s >= self.p as u64 {
            (s - self.p as u64) as u32
        } else {
            s as u32
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            (a as u64 + self.p as u64 - b as u64) as u32
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

    /// Multiplicative inverse; panics on zero.
    pub fn inv(self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero in GF({})", self.p);
        let (mut t, mut new_t) = (0i64, 1i64);
        let (mut r, mut new_r) = (self.p as i64, a as i64);
        while new_r != 0 {
            let q = r / new_r;
            (t, new_t) = (new_t, t - q * new_t);
            (r, new_r) = (new_r, r - q * new_r);
        }
        self.reduce(t)
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { p: DEFAULT_PRIME }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A dense row-major matrix over a [`PrimeField`]. Zero rows or columns are allowed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Result of [`Matrix::solve`]: one particular solution and a basis of the kernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub particular: Matrix,
    pub kernel: Matrix,
}

impl Matrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from already-reduced entries.
    pub fn from_vec(field: PrimeField, rows: usize, cols: usize, data: Vec<u32>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count does not match shape");
        debug_assert!(data.iter().all(|&x| x < field.p()));
        Matrix { field, rows, cols, data }
    }

    /// Builds a matrix from signed integers, reducing mod p.
    pub fn from_i64(field: PrimeField, rows: usize, cols: usize, data: &[i64]) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count does not match shape");
        Matrix { field, rows, cols, data: data.iter().map(|&x| field.reduce(x)).collect() }
    }

    pub fn from_rows(field: PrimeField, cols: usize, rows: &[Vec<u32>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols);
            data.extend_from_slice(r);
        }
        Matrix { field, rows: rows.len(), cols, data }
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
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let f = self.field;
        let p = f.p() as u64;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        let mut acc = vec![0u64; other.cols];
        for r in 0..self.rows {
            acc.iter_mut().for_each(|x| *x = 0);
            for k in 0..self.cols {
                let a = self.data[r * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                let orow = &other.data[k * other.cols..(k + 1) * other.cols];
                for (x, &b) in acc.iter_mut().zip(orow) {
                    *x += a * b as u64;
                    if *x >= 1 << 62 {
                        *x %= p;
                    }
                }
            }
            for (c, x) in acc.iter().enumerate() {
                out.data[r * other.cols + c] = (x % p) as u32;
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Matrix { field: f, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect();
        Matrix { field: f, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: u32) -> Matrix {
        let f = self.field;
        let data = self.data.iter().map(|&a| f.mul(a, s)).collect();
        Matrix { field: f, rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Matrix {
        let f = self.field;
        let data = self.data.iter().map(|&a| f.neg(a)).collect();
        Matrix { field: f, rows: self.rows, cols: self.cols, data }
    }

    /// Stacks `blocks` on top of each other; all must have `cols` columns.
    pub fn vstack(field: PrimeField, cols: usize, blocks: &[&Matrix]) -> Matrix {
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            assert_eq!(b.cols, cols);
            data.extend_from_slice(&b.data);
            rows += b.rows;
        }
        Matrix { field, rows, cols, data }
    }

    /// Places `blocks` side by side; all must have `rows` rows.
    pub fn hstack(field: PrimeField, rows: usize, blocks: &[&Matrix]) -> Matrix {
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, rows);
            for r in 0..rows {
                out.data[r * cols + off..r * cols + off + b.cols].copy_from_slice(b.row(r));
            }
            off += b.cols;
        }
        out
    }

    pub fn block_diag(field: PrimeField, blocks: &[&Matrix]) -> Matrix {
        let rows: usize = blocks.iter().map(|b| b.rows).sum();
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let (mut ro, mut co) = (0, 0);
        for b in blocks {
            for r in 0..b.rows {
                out.data[(ro + r) * cols + co..(ro + r) * cols + co + b.cols]
                    .copy_from_slice(b.row(r));
            }
            ro += b.rows;
            co += b.cols;
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &r in idx {
            data.extend_from_slice(self.row(r));
        }
        Matrix { field: self.field, rows: idx.len(), cols: self.cols, data }
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows, idx.len());
        for r in 0..self.rows {
            for (j, &c) in idx.iter().enumerate() {
                out.data[r * idx.len() + j] = self.data[r * self.cols + c];
            }
        }
        out
    }

    /// Reduced row echelon form and its pivot columns; zero rows are kept at the bottom.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field;
        let p = f.p() as u64;
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut pr = 0;
        for c in 0..cols {
            if pr == rows {
                break;
            }
            let Some(sel) = (pr..rows).find(|&r| self.data[r * cols + c] != 0) else {
                continue;
            };
            if sel != pr {
                for k in 0..cols {
                    self.data.swap(sel * cols + k, pr * cols + k);
                }
            }
            let inv = f.inv(self.data[pr * cols + c]) as u64;
            for k in c..cols {
                let x = &mut self.data[pr * cols + k];
                *x = ((*x as u64 * inv) % p) as u32;
            }
            for r in 0..rows {
                if r == pr {
                    continue;
                }
                let factor = self.data[r * cols + c];
                if factor == 0 {
                    continue;
                }
                let neg = p - factor as u64;
                for k in c..cols {
                    let pv = self.data[pr * cols + k] as u64;
                    if pv == 0 {
                        continue;
                    }
                    let x = &mut self.data[r * cols + k];
                    *x = ((*x as u64 + neg * pv) % p) as u32;
                }
            }
            pivots.push(c);
            pr += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Rows form a basis of the right null space `{v : self·v = 0}`.
    pub fn kernel_basis(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let f = self.field;
        let free: Vec<usize> = {
            let mut is_pivot = vec![false; self.cols];
            pivots.iter().for_each(|&c| is_pivot[c] = true);
            (0..self.cols).filter(|&c| !is_pivot[c]).collect()
        };
        let mut out = Matrix::zeros(f, free.len(), self.cols);
        for (i, &fc) in free.iter().enumerate() {
            out.set(i, fc, 1);
            for (pi, &pc) in pivots.iter().enumerate() {
                out.set(i, pc, f.neg(r.get(pi, fc)));
            }
        }
        out
    }

    /// Rows form a basis of `{x : x·self = 0}`.
    pub fn left_kernel_basis(&self) -> Matrix {
        self.transpose().kernel_basis()
    }

    /// Nonzero rows of the reduced echelon form: a canonical basis of the row space.
    pub fn row_space_basis(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let k = pivots.len();
        Matrix { field: self.field, rows: k, cols: self.cols, data: r.data[..k * self.cols].to_vec() }
    }

    /// Unit row vectors spanning a complement of the row space, in increasing column order.
    pub fn row_space_complement(&self) -> Matrix {
        let (_, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        pivots.iter().for_each(|&c| is_pivot[c] = true);
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut out = Matrix::zeros(self.field, free.len(), self.cols);
        for (i, &c) in free.iter().enumerate() {
            out.set(i, c, 1);
        }
        out
    }

    /// Solves `self · x = rhs`. Returns `None` if the system is inconsistent.
    pub fn solve(&self, rhs: &Matrix) -> Option<Solution> {
        assert_eq!(self.rows, rhs.rows, "shape mismatch in solve");
        let f = self.field;
        let aug = Matrix::hstack(f, self.rows, &[self, rhs]);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut particular = Matrix::zeros(f, self.cols, rhs.cols);
        for (pi, &pc) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                particular.set(pc, j, r.get(pi, self.cols + j));
            }
        }
        Some(Solution { particular, kernel: self.kernel_basis() })
    }

    /// Given independent rows `self` (r×n) and rows `x` (k×n) in their span,
    /// returns the coefficients `z` (k×r) with `z · self = x`, or `None` if some
    /// row of `x` lies outside the span.
    pub fn solve_left(&self, x: &Matrix) -> Option<Matrix> {
        assert_eq!(self.cols, x.cols, "shape mismatch in solve_left");
        if self.rows == 0 {
            return if x.is_zero() { Some(Matrix::zeros(self.field, x.rows, 0)) } else { None };
        }
        let sol = self.transpose().solve(&x.transpose())?;
        Some(sol.particular.transpose())
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = Matrix::hstack(self.field, n, &[self, &Matrix::identity(self.field, n)]);
        let (r, pivots) = aug.rref();
        if pivots.len() < n || (n > 0 && pivots[n - 1] >= n) {
            return None;
        }
        Some(r.select_cols(&(n..2 * n).collect::<Vec<_>>()))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix[{}x{} over GF({})]", self.rows, self.cols, self.field.p())?;
        for r in 0..self.rows {
            write!(f, "\n  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn field_axioms_exhaustive_gf7() {
        let f = gf(7);
        for a in 0..7 {
            assert_eq!(f.add(a, f.neg(a)), 0);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a)), 1);
            }
            for b in 0..7 {
                assert_eq!(f.add(a, b), ((a + b) % 7));
                assert_eq!(f.mul(a, b), ((a * b) % 7));
                assert_eq!(f.add(f.sub(a, b), b), a);
                for c in 0..7 {
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(91).is_err());
        assert!(PrimeField::new(101).is_ok());
    }

    #[test]
    fn rref_examples() {
        let f = gf(5);
        let id = Matrix::identity(f, 2);
        assert_eq!(id.rref(), (id.clone(), vec![0, 1]));

        let m = Matrix::from_i64(f, 2, 2, &[1, 2, 2, 4]);
        let (r, piv) = m.rref();
        assert_eq!(r, Matrix::from_i64(f, 2, 2, &[1, 2, 0, 0]));
        assert_eq!(piv, vec![0]);

        let empty = Matrix::zeros(f, 0, 3);
        assert_eq!(empty.rref(), (Matrix::zeros(f, 0, 3), vec![]));
    }

    #[test]
    fn kernel_examples() {
        let f = gf(5);
        assert_eq!(Matrix::zeros(f, 2, 3).kernel_basis().rows(), 3);
        assert_eq!(Matrix::identity(f, 4).kernel_basis().rows(), 0);

        // Oracle: enumerate all 25 vectors of GF(5)^2 killed by [[1,2],[2,4]].
        let m = Matrix::from_i64(f, 2, 2, &[1, 2, 2, 4]);
        let mut null = Vec::new();
        for x in 0..5u32 {
            for y in 0..5u32 {
                let v = Matrix::from_vec(f, 2, 1, vec![x, y]);
                if m.mul(&v).is_zero() {
                    null.push((x, y));
                }
            }
        }
        assert_eq!(null.len(), 5); // a single line through the origin
        let k = m.kernel_basis();
        assert_eq!(k.rows(), 1);
        assert_eq!(k.row(0), &[3, 1]);
        assert!(null.contains(&(3, 1)));
    }

    #[test]
    fn solve_examples() {
        let f = gf(7);
        let id = Matrix::identity(f, 3);
        let v = Matrix::from_i64(f, 3, 1, &[1, 5, 6]);
        let s = id.solve(&v).unwrap();
        assert_eq!(s.particular, v);
        assert_eq!(s.kernel.rows(), 0);

        assert!(Matrix::zeros(f, 2, 2).solve(&Matrix::from_i64(f, 2, 1, &[0, 1])).is_none());

        // [[1,1]] x = [3] over GF(7): enumerate GF(7)^2, 7 solutions = one point + a line.
        let m = Matrix::from_i64(f, 1, 2, &[1, 1]);
        let count = (0..7).flat_map(|x| (0..7).map(move |y| (x, y))).filter(|(x, y)| (x + y) % 7 == 3).count();
        assert_eq!(count, 7);
        let s = m.solve(&Matrix::from_i64(f, 1, 1, &[3])).unwrap();
        assert_eq!(m.mul(&s.particular), Matrix::from_i64(f, 1, 1, &[3]));
        assert_eq!(s.kernel.rows(), 1);
        assert!(m.mul(&s.kernel.transpose()).is_zero());
    }

    #[test]
    fn rank_examples() {
        let f = gf(5);
        assert_eq!(Matrix::identity(f, 4).rank(), 4);
        assert_eq!(Matrix::zeros(f, 3, 2).rank(), 0);
        assert_eq!(Matrix::from_i64(f, 2, 2, &[1, 2, 2, 4]).rank(), 1);
    }

    #[test]
    fn inverse_and_solve_left() {
        let f = gf(11);
        let m = Matrix::from_i64(f, 2, 2, &[2, 3, 1, 4]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(f, 2));
        assert!(Matrix::from_i64(f, 2, 2, &[1, 2, 2, 4]).inverse().is_none());

        let b = Matrix::from_i64(f, 2, 3, &[1, 0, 2, 0, 1, 1]);
        let x = Matrix::from_i64(f, 1, 3, &[3, 4, 10]);
        let z = b.solve_left(&x).unwrap();
        assert_eq!(z.mul(&b), x);
        assert!(b.solve_left(&Matrix::from_i64(f, 1, 3, &[0, 0, 1])).is_none());
    }

    fn arb_matrix() -> impl Strategy<Value = Matrix> {
        (0usize..6, 0usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(0u32..13, r * c)
                .prop_map(move |d| Matrix::from_vec(PrimeField::new(13).unwrap(), r, c, d))
        })
    }

    proptest! {
        #[test]
        fn rank_nullity_and_transpose(m in arb_matrix()) {
            prop_assert_eq!(m.rank(), m.transpose().rank());
            prop_assert_eq!(m.rank() + m.kernel_basis().rows(), m.cols());
            prop_assert!(m.mul(&m.kernel_basis().transpose()).is_zero());
        }

        #[test]
        fn rref_idempotent(m in arb_matrix()) {
            let (r, p) = m.rref();
            prop_assert_eq!(r.rref(), (r.clone(), p));
        }

        #[test]
        fn solve_is_exact(m in arb_matrix(), seed in proptest::collection::vec(0u32..13, 6)) {
            let f = m.field();
            let x: Vec<u32> = (0..m.cols()).map(|i| seed[i % seed.len()]).collect();
            let x = Matrix::from_vec(f, m.cols(), 1, x);
            let rhs = m.mul(&x);
            let s = m.solve(&rhs).expect("consistent by construction");
            prop_assert_eq!(m.mul(&s.particular), rhs);
        }
    }
}
