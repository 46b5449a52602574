//! Subspaces of GF(p)^n kept in reduced row-echelon form, so equality and
//! hashing are structural.

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::matrix::Mat;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Mat,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: PrimeField, ambient: usize) -> Self {
        Self {
            ambient,
            basis: Mat::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: PrimeField, ambient: usize) -> Self {
        Self {
            ambient,
            basis: Mat::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Row space of `m`.
    pub fn from_matrix_rows(m: &Mat) -> Self {
        let ech = m.rref();
        Self {
            ambient: m.cols(),
            basis: ech.reduced,
            pivots: ech.pivots,
        }
    }

    pub fn from_vectors(field: PrimeField, ambient: usize, vecs: &[Vec<u8>]) -> Self {
        Self::from_matrix_rows(&Mat::from_row_vecs(field, ambient, vecs))
    }

    pub fn field(&self) -> PrimeField {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Basis vectors as rows, in RREF.
    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn vectors(&self) -> Vec<Vec<u8>> {
        self.basis.row_vecs()
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!(
                "ambient dimensions {} and {}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let stacked = Mat::vstack(self.field(), self.ambient, &[&self.basis, &other.basis]);
        Ok(Subspace::from_matrix_rows(&stacked))
    }

    /// Intersection through the left kernel of the stacked bases: pairs
    /// (a, b) with a*A = b*B give the common vectors a*A.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let f = self.field();
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(f, self.ambient));
        }
        let neg_b = other.basis.scale(f.neg(1));
        let stacked = Mat::vstack(f, self.ambient, &[&self.basis, &neg_b]);
        let left_kernel = stacked.transpose().kernel();
        let ka = self.dim();
        let vecs: Vec<Vec<u8>> = left_kernel
            .vectors()
            .into_iter()
            .map(|coeffs| {
                let alpha = Mat::from_vec(f, 1, ka, coeffs[..ka].to_vec());
                alpha.mul(&self.basis).into_data()
            })
            .collect();
        Ok(Subspace::from_vectors(f, self.ambient, &vecs))
    }

    pub fn contains_vector(&self, v: &[u8]) -> bool {
        assert_eq!(v.len(), self.ambient);
        self.reduce_vector(v).iter().all(|&x| x == 0)
    }

    /// Reduces `v` against the basis; the residue is zero iff `v` lies in
    /// the subspace.
    pub fn reduce_vector(&self, v: &[u8]) -> Vec<u8> {
        let f = self.field();
        let mut out = v.to_vec();
        for (i, &pc) in self.pivots.iter().enumerate() {
            let factor = out[pc];
            if factor != 0 {
                for (x, &b) in out.iter_mut().zip(self.basis.row(i)) {
                    *x = f.sub(*x, f.mul(factor, b));
                }
            }
        }
        out
    }

    /// Coordinates of a member vector with respect to the RREF basis.
    pub fn coordinates(&self, v: &[u8]) -> Option<Vec<u8>> {
        let coords: Vec<u8> = self.pivots.iter().map(|&pc| v[pc]).collect();
        let f = self.field();
        let mut rebuilt = vec![0u8; self.ambient];
        for (i, &c) in coords.iter().enumerate() {
            if c != 0 {
                for (x, &b) in rebuilt.iter_mut().zip(self.basis.row(i)) {
                    *x = f.add(*x, f.mul(c, b));
                }
            }
        }
        (rebuilt == v).then_some(coords)
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        Ok((0..other.dim()).all(|i| self.contains_vector(other.basis.row(i))))
    }

    /// Enumerates every vector of the subspace (p^dim of them).
    pub fn elements(&self) -> impl Iterator<Item = Vec<u8>> + '_ {
        let f = self.field();
        let p = f.order() as u64;
        let total = p.pow(self.dim() as u32);
        (0..total).map(move |mut idx| {
            let mut v = vec![0u8; self.ambient];
            for i in 0..self.dim() {
                let c = (idx % p) as u8;
                idx /= p;
                if c != 0 {
                    for (x, &b) in v.iter_mut().zip(self.basis.row(i)) {
                        *x = f.add(*x, f.mul(c, b));
                    }
                }
            }
            v
        })
    }
}

/// Enumerates all vectors of GF(p)^n.
pub fn all_vectors(field: PrimeField, n: usize) -> impl Iterator<Item = Vec<u8>> {
    let p = field.order() as u64;
    let total = p.pow(n as u32);
    (0..total).map(move |mut idx| {
        let mut v = vec![0u8; n];
        for x in v.iter_mut() {
            *x = (idx % p) as u8;
            idx /= p;
        }
        v
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf2() -> PrimeField {
        PrimeField::GF2
    }

    fn span(vs: &[&[u8]]) -> Subspace {
        let n = vs[0].len();
        Subspace::from_vectors(gf2(), n, &vs.iter().map(|v| v.to_vec()).collect::<Vec<_>>())
    }

    #[test]
    fn idempotent_sum_and_intersection() {
        let a = span(&[&[1, 0, 1], &[0, 1, 1]]);
        assert_eq!(a.sum(&a).unwrap(), a);
        assert_eq!(a.intersection(&a).unwrap(), a);
        assert!(a.contains(&a).unwrap());
    }

    #[test]
    fn complementary_lines() {
        let a = span(&[&[1, 0]]);
        let b = span(&[&[0, 1]]);
        assert!(a.sum(&b).unwrap().is_full());
        assert!(a.intersection(&b).unwrap().is_zero());
    }

    #[test]
    fn plane_meets_diagonal() {
        let a = span(&[&[1, 0], &[0, 1]]);
        let b = span(&[&[1, 1]]);
        let expected = b.clone();
        // Oracle: vectors lying in both.
        let common: Vec<Vec<u8>> = all_vectors(gf2(), 2)
            .filter(|v| a.contains_vector(v) && b.contains_vector(v))
            .collect();
        assert_eq!(common.len(), 2);
        assert_eq!(a.intersection(&b).unwrap(), expected);
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let a = span(&[&[1, 0]]);
        let b = span(&[&[1, 0, 0]]);
        assert!(matches!(a.sum(&b), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn coordinates_round_trip() {
        let a = span(&[&[1, 1, 0, 1], &[0, 1, 1, 1]]);
        for v in a.elements() {
            let c = a.coordinates(&v).expect("member");
            assert_eq!(c.len(), 2);
        }
        assert!(a.coordinates(&[1, 0, 0, 0]).is_none());
    }
}
