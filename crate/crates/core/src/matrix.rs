//! Dense matrices over GF(p).

use std::fmt;

use crate::field::PrimeField;
use crate::gf2::PackedRows;
use crate::subspace::Subspace;

/// Row-major dense matrix over a prime field.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

/// Reduced row-echelon form: nonzero rows only, with pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    pub rank: usize,
    pub reduced: Mat,
    pub pivots: Vec<usize>,
}

impl Mat {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Self {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from raw residues; entries must already be reduced.
    pub fn from_vec(field: PrimeField, rows: usize, cols: usize, data: Vec<u8>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count does not match shape");
        debug_assert!(data.iter().all(|&x| (x as u32) < field.order()));
        Self {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Builds a matrix from integer rows, reducing mod p.
    pub fn from_rows<R: AsRef<[i64]>>(field: PrimeField, rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().map(|&x| field.reduce(x)));
        }
        Self::from_vec(field, rows.len(), cols, data)
    }

    /// Stacks vectors (each of length `cols`) as rows.
    pub fn from_row_vecs(field: PrimeField, cols: usize, vecs: &[Vec<u8>]) -> Self {
        let mut data = Vec::with_capacity(vecs.len() * cols);
        for v in vecs {
            assert_eq!(v.len(), cols);
            data.extend_from_slice(v);
        }
        Self::from_vec(field, vecs.len(), cols, data)
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn data(&self) -> &[u8] {
        &self.data
    }

    pub fn into_data(self) -> Vec<u8> {
        self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u8) {
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u8] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u8>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<u8> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows)
                .all(|r| (0..self.cols).all(|c| self.get(r, c) == u8::from(r == c)))
    }

    pub fn mul(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows, "inner dimensions differ");
        assert_eq!(self.field, rhs.field);
        let f = self.field;
        let p = f.order();
        let mut out = vec![0u32; self.rows * rhs.cols];
        for i in 0..self.rows {
            let acc = &mut out[i * rhs.cols..(i + 1) * rhs.cols];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k] as u32;
                if a == 0 {
                    continue;
                }
                let row = rhs.row(k);
                for (slot, &b) in acc.iter_mut().zip(row) {
                    *slot += a * b as u32;
                }
            }
        }
        Mat::from_vec(f, self.rows, rhs.cols, out.into_iter().map(|x| (x % p) as u8).collect())
    }

    pub fn mul_vec(&self, v: &[u8]) -> Vec<u8> {
        assert_eq!(self.cols, v.len());
        let p = self.field.order();
        (0..self.rows)
            .map(|r| {
                let s: u32 = self
                    .row(r)
                    .iter()
                    .zip(v)
                    .map(|(&a, &b)| a as u32 * b as u32)
                    .sum();
                (s % p) as u8
            })
            .collect()
    }

    pub fn add(&self, rhs: &Mat) -> Mat {
        self.zip_with(rhs, |f, a, b| f.add(a, b))
    }

    pub fn sub(&self, rhs: &Mat) -> Mat {
        self.zip_with(rhs, |f, a, b| f.sub(a, b))
    }

    fn zip_with(&self, rhs: &Mat, op: impl Fn(PrimeField, u8, u8) -> u8) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        let f = self.field;
        let data = self.data.iter().zip(&rhs.data).map(|(&a, &b)| op(f, a, b)).collect();
        Mat::from_vec(f, self.rows, self.cols, data)
    }

    pub fn scale(&self, s: u8) -> Mat {
        let f = self.field;
        Mat::from_vec(f, self.rows, self.cols, self.data.iter().map(|&a| f.mul(a, s)).collect())
    }

    /// `self += s * rhs`
    pub fn add_scaled(&mut self, rhs: &Mat, s: u8) {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        if s == 0 {
            return;
        }
        let f = self.field;
        for (a, &b) in self.data.iter_mut().zip(&rhs.data) {
            *a = f.add(*a, f.mul(b, s));
        }
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c));
            }
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> Mat {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Mat::identity(self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn is_nilpotent(&self) -> bool {
        self.pow(self.rows as u64).is_zero()
    }

    pub fn vstack(field: PrimeField, cols: usize, parts: &[&Mat]) -> Mat {
        let mut data = Vec::new();
        let mut rows = 0;
        for m in parts {
            assert_eq!(m.cols, cols);
            data.extend_from_slice(&m.data);
            rows += m.rows;
        }
        Mat::from_vec(field, rows, cols, data)
    }

    pub fn hstack(field: PrimeField, rows: usize, parts: &[&Mat]) -> Mat {
        let cols: usize = parts.iter().map(|m| m.cols).sum();
        let mut out = Mat::zeros(field, rows, cols);
        let mut off = 0;
        for m in parts {
            assert_eq!(m.rows, rows);
            for r in 0..rows {
                out.data[r * cols + off..r * cols + off + m.cols].copy_from_slice(m.row(r));
            }
            off += m.cols;
        }
        out
    }

    /// Block-diagonal sum.
    pub fn block_diag(field: PrimeField, parts: &[&Mat]) -> Mat {
        let rows: usize = parts.iter().map(|m| m.rows).sum();
        let cols: usize = parts.iter().map(|m| m.cols).sum();
        let mut out = Mat::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for m in parts {
            for r in 0..m.rows {
                for c in 0..m.cols {
                    out.set(r0 + r, c0 + c, m.get(r, c));
                }
            }
            r0 += m.rows;
            c0 += m.cols;
        }
        out
    }

    pub fn select_cols(&self, cols: &[usize]) -> Mat {
        let mut out = Mat::zeros(self.field, self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out.set(r, j, self.get(r, c));
            }
        }
        out
    }

    pub fn select_rows(&self, rows: &[usize]) -> Mat {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            data.extend_from_slice(self.row(r));
        }
        Mat::from_vec(self.field, rows.len(), self.cols, data)
    }

    /// Reduced row-echelon form. GF(2) goes through the bit-packed path.
    pub fn rref(&self) -> Echelon {
        if self.field.order() == 2 {
            self.rref_packed()
        } else {
            self.rref_dense()
        }
    }

    pub(crate) fn rref_packed(&self) -> Echelon {
        debug_assert_eq!(self.field.order(), 2);
        let mut packed = PackedRows::pack(self.rows, self.cols, &self.data);
        let pivots = packed.rref();
        let rank = pivots.len();
        Echelon {
            rank,
            reduced: Mat::from_vec(self.field, rank, self.cols, packed.unpack(rank)),
            pivots,
        }
    }

    /// Byte-per-entry elimination, valid for every p.
    pub fn rref_dense(&self) -> Echelon {
        let f = self.field;
        let cols = self.cols;
        let mut rows: Vec<Vec<u8>> = self.row_vecs();
        let mut pivots = Vec::new();
        let mut next = 0;
        for c in 0..cols {
            if next == rows.len() {
                break;
            }
            let Some(found) = (next..rows.len()).find(|&r| rows[r][c] != 0) else {
                continue;
            };
            rows.swap(next, found);
            let inv = f.inv(rows[next][c]);
            if inv != 1 {
                for x in rows[next][c..].iter_mut() {
                    *x = f.mul(*x, inv);
                }
            }
            let pivot_row = std::mem::take(&mut rows[next]);
            for (r, row) in rows.iter_mut().enumerate() {
                if r == next {
                    continue;
                }
                let factor = row[c];
                if factor != 0 {
                    for (x, &y) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                        *x = f.sub(*x, f.mul(factor, y));
                    }
                }
            }
            rows[next] = pivot_row;
            pivots.push(c);
            next += 1;
        }
        let rank = pivots.len();
        rows.truncate(rank);
        Echelon {
            rank,
            reduced: Mat::from_row_vecs(f, cols, &rows),
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Right null space `{v : self * v = 0}`.
    pub fn kernel(&self) -> Subspace {
        let ech = self.rref();
        let f = self.field;
        let n = self.cols;
        let mut is_pivot = vec![false; n];
        for &c in &ech.pivots {
            is_pivot[c] = true;
        }
        let mut vecs = Vec::new();
        for free in (0..n).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u8; n];
            v[free] = 1;
            for (i, &pc) in ech.pivots.iter().enumerate() {
                v[pc] = f.neg(ech.reduced.get(i, free));
            }
            vecs.push(v);
        }
        Subspace::from_vectors(f, n, &vecs)
    }

    pub fn inverse(&self) -> Option<Mat> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = Mat::hstack(self.field, n, &[self, &Mat::identity(self.field, n)]);
        let ech = aug.rref();
        if ech.rank < n || ech.pivots[..n].iter().enumerate().any(|(i, &c)| c != i) {
            return None;
        }
        let right: Vec<usize> = (n..2 * n).collect();
        Some(ech.reduced.select_cols(&right))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Image (column space) as a subspace.
    pub fn image(&self) -> Subspace {
        Subspace::from_matrix_rows(&self.transpose())
    }

    pub fn trace(&self) -> u8 {
        assert!(self.is_square());
        (0..self.rows).fold(0, |acc, i| self.field.add(acc, self.get(i, i)))
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat[{}x{} over {}]", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            write!(f, "\n  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn rref_identity_gf2() {
        let id = Mat::identity(gf(2), 2);
        let e = id.rref();
        assert_eq!(e.rank, 2);
        assert_eq!(e.reduced, id);
    }

    #[test]
    fn rref_duplicate_rows_collapse() {
        let m = Mat::from_rows(gf(2), &[[1, 1], [1, 1]]);
        let e = m.rref();
        assert_eq!(e.rank, 1);
        assert_eq!(e.reduced, Mat::from_rows(gf(2), &[[1, 1]]));
    }

    #[test]
    fn rref_dependent_third_row() {
        let m = Mat::from_rows(gf(2), &[[0, 1, 1], [1, 0, 1], [1, 1, 0]]);
        assert_eq!(m.rref().rank, 2);
        assert_eq!(m.rref_dense().rank, 2);
    }

    #[test]
    fn rref_empty() {
        let m = Mat::zeros(gf(3), 0, 4);
        assert_eq!(m.rref().rank, 0);
    }

    #[test]
    fn kernel_examples() {
        let z = Mat::zeros(gf(3), 2, 2);
        assert_eq!(z.kernel().dim(), 2);
        let id = Mat::identity(gf(5), 3);
        assert_eq!(id.kernel().dim(), 0);
        let k = Mat::from_rows(gf(2), &[[1, 1]]).kernel();
        assert_eq!(k.dim(), 1);
        assert_eq!(k.basis().row(0), &[1, 1]);
    }

    #[test]
    fn inverse_round_trip_gf7() {
        let m = Mat::from_rows(gf(7), &[[2, 3, 0], [1, 0, 4], [0, 5, 6]]);
        let inv = m.inverse().expect("invertible");
        assert!(m.mul(&inv).is_identity());
        let sing = Mat::from_rows(gf(7), &[[1, 2], [2, 4]]);
        assert!(sing.inverse().is_none());
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let m = Mat::from_rows(gf(3), &[[1, 1], [0, 1]]);
        assert_eq!(m.pow(3), Mat::identity(gf(3), 2));
        assert_eq!(m.pow(2), m.mul(&m));
    }
}
