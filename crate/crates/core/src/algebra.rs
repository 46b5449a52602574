//! Finite-dimensional unital associative algebras given by structure
//! constants over a prime field.

use std::fmt;
use std::ops::Deref;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::matrix::Mat;
use crate::radical::{self, RadicalData};
use crate::subspace::Subspace;

/// Which side the algebra acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

impl std::str::FromStr for Side {
    type Err = Error;
    fn from_str(s: &str) -> Result<Side> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            other => Err(Error::Malformed(format!("unknown side `{other}`"))),
        }
    }
}

/// Structure constants `b_i * b_j = sum_k c[i][j][k] b_k` plus the unit.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraSpec {
    field: PrimeField,
    dim: usize,
    basis_names: Vec<String>,
    mul: Vec<u8>,
    unit: Vec<u8>,
}

impl AlgebraSpec {
    /// Builds and validates an algebra. `mul` is indexed `[i][j][k]`.
    pub fn new(
        field: PrimeField,
        basis_names: Vec<String>,
        mul: Vec<u8>,
        unit: Vec<u8>,
    ) -> Result<Self> {
        let spec = Self::from_parts(field, basis_names, mul, unit)?;
        spec.validate()?;
        Ok(spec)
    }

    /// Shape checks only; associativity and the unit are trusted.
    pub(crate) fn from_parts(
        field: PrimeField,
        basis_names: Vec<String>,
        mul: Vec<u8>,
        unit: Vec<u8>,
    ) -> Result<Self> {
        let dim = basis_names.len();
        if mul.len() != dim * dim * dim {
            return Err(Error::Malformed(format!(
                "multiplication table has {} entries, expected {}",
                mul.len(),
                dim * dim * dim
            )));
        }
        if unit.len() != dim {
            return Err(Error::Malformed(format!(
                "unit has {} coefficients, expected {dim}",
                unit.len()
            )));
        }
        if mul.iter().chain(&unit).any(|&x| x as u32 >= field.order()) {
            return Err(Error::Malformed("entries must be reduced mod p".into()));
        }
        Ok(Self {
            field,
            dim,
            basis_names,
            mul,
            unit,
        })
    }

    /// Checks associativity on all basis triples and the unit on both sides.
    pub fn validate(&self) -> Result<()> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                let ij = self.product_basis(i, j);
                for l in 0..n {
                    let left = self.mul_right_basis(&ij, l);
                    let jl = self.product_basis(j, l);
                    let right = self.mul_left_basis(i, &jl);
                    if left != right {
                        return Err(Error::NonAssociative(i, j, l));
                    }
                }
            }
        }
        for j in 0..n {
            let e = self.basis_vector(j);
            if self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e {
                return Err(Error::UnitFailure(j));
            }
        }
        Ok(())
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn unit(&self) -> &[u8] {
        &self.unit
    }

    /// Raw table, indexed `[i][j][k]`.
    pub fn table(&self) -> &[u8] {
        &self.mul
    }

    #[inline]
    pub fn c(&self, i: usize, j: usize, k: usize) -> u8 {
        self.mul[(i * self.dim + j) * self.dim + k]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<u8> {
        let mut v = vec![0u8; self.dim];
        v[i] = 1;
        v
    }

    pub fn product_basis(&self, i: usize, j: usize) -> Vec<u8> {
        let start = (i * self.dim + j) * self.dim;
        self.mul[start..start + self.dim].to_vec()
    }

    fn mul_right_basis(&self, x: &[u8], l: usize) -> Vec<u8> {
        let f = self.field;
        let mut out = vec![0u8; self.dim];
        for (k, &xk) in x.iter().enumerate() {
            if xk != 0 {
                for (m, o) in out.iter_mut().enumerate() {
                    *o = f.add(*o, f.mul(xk, self.c(k, l, m)));
                }
            }
        }
        out
    }

    fn mul_left_basis(&self, i: usize, x: &[u8]) -> Vec<u8> {
        let f = self.field;
        let mut out = vec![0u8; self.dim];
        for (k, &xk) in x.iter().enumerate() {
            if xk != 0 {
                for (m, o) in out.iter_mut().enumerate() {
                    *o = f.add(*o, f.mul(xk, self.c(i, k, m)));
                }
            }
        }
        out
    }

    /// Product of two elements given as coefficient vectors.
    pub fn mul(&self, x: &[u8], y: &[u8]) -> Vec<u8> {
        let f = self.field;
        let n = self.dim;
        let mut out = vec![0u8; n];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let s = f.mul(xi, yj);
                let start = (i * n + j) * n;
                for (o, &c) in out.iter_mut().zip(&self.mul[start..start + n]) {
                    if c != 0 {
                        *o = f.add(*o, f.mul(s, c));
                    }
                }
            }
        }
        out
    }

    /// Matrix of `y -> x*y` acting on coefficient columns.
    pub fn left_mult_matrix(&self, x: &[u8]) -> Mat {
        let mut m = Mat::zeros(self.field, self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.mul(x, &self.basis_vector(j));
            for (k, &v) in col.iter().enumerate() {
                m.set(k, j, v);
            }
        }
        m
    }

    /// Matrix of `y -> y*x` acting on coefficient columns.
    pub fn right_mult_matrix(&self, x: &[u8]) -> Mat {
        let mut m = Mat::zeros(self.field, self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.mul(&self.basis_vector(j), x);
            for (k, &v) in col.iter().enumerate() {
                m.set(k, j, v);
            }
        }
        m
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.product_basis(i, j) == self.product_basis(j, i)))
    }

    pub fn is_idempotent(&self, e: &[u8]) -> bool {
        self.mul(e, e) == e
    }

    /// Invertible iff left multiplication is bijective.
    pub fn is_unit(&self, x: &[u8]) -> bool {
        self.left_mult_matrix(x).is_invertible()
    }

    pub fn power(&self, x: &[u8], mut e: u64) -> Vec<u8> {
        let mut base = x.to_vec();
        let mut acc = self.unit.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Same basis, multiplication reversed.
    pub fn opposite(&self) -> AlgebraSpec {
        let n = self.dim;
        let mut mul = vec![0u8; n * n * n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    mul[(i * n + j) * n + k] = self.c(j, i, k);
                }
            }
        }
        AlgebraSpec {
            field: self.field,
            dim: n,
            basis_names: self.basis_names.clone(),
            mul,
            unit: self.unit.clone(),
        }
    }

    /// The algebra spanned by `elements` (a subspace closed under
    /// multiplication, with its own identity `unit`), in the given basis.
    pub fn subalgebra(&self, elements: &[Vec<u8>], unit: &[u8]) -> Result<AlgebraSpec> {
        let names = (0..elements.len()).map(|i| format!("s{i}")).collect();
        let mul_fn = |x: &[u8], y: &[u8]| self.mul(x, y);
        build_from_span(self.field, self.dim, names, elements, unit, &mul_fn)
    }

    /// Quotient by a two-sided ideal. The quotient basis is the image of the
    /// basis elements whose index is not a pivot of the ideal.
    pub fn quotient(&self, ideal: &Subspace) -> AlgebraSpec {
        let n = self.dim;
        let mut is_pivot = vec![false; n];
        for &pc in ideal.pivots() {
            is_pivot[pc] = true;
        }
        let keep: Vec<usize> = (0..n).filter(|&i| !is_pivot[i]).collect();
        let project = |v: &[u8]| -> Vec<u8> {
            let r = ideal.reduce_vector(v);
            keep.iter().map(|&i| r[i]).collect()
        };
        let m = keep.len();
        let mut mul = vec![0u8; m * m * m];
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                let prod = project(&self.product_basis(i, j));
                mul[(a * m + b) * m..(a * m + b + 1) * m].copy_from_slice(&prod);
            }
        }
        let names = keep.iter().map(|&i| format!("[{}]", self.basis_names[i])).collect();
        let unit = project(&self.unit);
        AlgebraSpec::from_parts(self.field, names, mul, unit).expect("quotient shape")
    }

    /// Direct product `self x other`.
    pub fn product(&self, other: &AlgebraSpec) -> Result<AlgebraSpec> {
        if self.field != other.field {
            return Err(Error::Incompatible);
        }
        let (n1, n2) = (self.dim, other.dim);
        let n = n1 + n2;
        let mut mul = vec![0u8; n * n * n];
        for i in 0..n1 {
            for j in 0..n1 {
                for k in 0..n1 {
                    mul[(i * n + j) * n + k] = self.c(i, j, k);
                }
            }
        }
        for i in 0..n2 {
            for j in 0..n2 {
                for k in 0..n2 {
                    mul[((n1 + i) * n + n1 + j) * n + n1 + k] = other.c(i, j, k);
                }
            }
        }
        let mut names = self.basis_names.clone();
        names.extend(other.basis_names.iter().map(|s| format!("{s}'")));
        let mut unit = self.unit.clone();
        unit.extend_from_slice(&other.unit);
        AlgebraSpec::new(self.field, names, mul, unit)
    }

    /// Algebra spanned by a family of square matrices that is closed under
    /// multiplication and whose span contains the identity.
    pub fn from_matrix_basis(field: PrimeField, names: Vec<String>, mats: &[Mat]) -> Result<AlgebraSpec> {
        let d = mats.first().map_or(0, |m| m.rows());
        let elements: Vec<Vec<u8>> = mats.iter().map(|m| m.data().to_vec()).collect();
        let identity = Mat::identity(field, d).into_data();
        let mul_fn = |x: &[u8], y: &[u8]| {
            let a = Mat::from_vec(field, d, d, x.to_vec());
            let b = Mat::from_vec(field, d, d, y.to_vec());
            a.mul(&b).into_data()
        };
        let span = Subspace::from_vectors(field, d * d, &elements);
        if span.dim() != elements.len() {
            return Err(Error::Malformed("matrices are linearly dependent".into()));
        }
        if !span.contains_vector(&identity) {
            return Err(Error::Malformed("span does not contain the identity".into()));
        }
        let spec = build_from_span(field, d * d, names, &elements, &identity, &mul_fn)?;
        spec.validate()?;
        Ok(spec)
    }

    /// Number of elements, p^dim.
    pub fn order(&self) -> u128 {
        (self.field.order() as u128).pow(self.dim as u32)
    }
}

/// Structure constants of the span of `elements` under `mul_fn`, expressed
/// in the given (independent) basis.
pub(crate) type MulFn<'a> = dyn Fn(&[u8], &[u8]) -> Vec<u8> + 'a;

pub(crate) fn build_from_span(
    field: PrimeField,
    ambient: usize,
    names: Vec<String>,
    elements: &[Vec<u8>],
    unit: &[u8],
    mul_fn: &MulFn,
) -> Result<AlgebraSpec> {
    let coords = SpanCoordinates::new(field, ambient, elements)?;
    let m = elements.len();
    let mut mul = vec![0u8; m * m * m];
    for i in 0..m {
        for j in 0..m {
            let prod = mul_fn(&elements[i], &elements[j]);
            let c = coords
                .coordinates(&prod)
                .ok_or_else(|| Error::Malformed("span is not closed under multiplication".into()))?;
            mul[(i * m + j) * m..(i * m + j + 1) * m].copy_from_slice(&c);
        }
    }
    let unit = coords
        .coordinates(unit)
        .ok_or_else(|| Error::Malformed("unit is not in the span".into()))?;
    AlgebraSpec::from_parts(field, names, mul, unit)
}

/// Coordinates with respect to an arbitrary independent family.
pub(crate) struct SpanCoordinates {
    span: Subspace,
    // rows: original-basis coordinates of each RREF basis vector
    to_original: Mat,
}

impl SpanCoordinates {
    pub(crate) fn new(field: PrimeField, ambient: usize, elements: &[Vec<u8>]) -> Result<Self> {
        let span = Subspace::from_vectors(field, ambient, elements);
        let m = elements.len();
        if span.dim() != m {
            return Err(Error::Malformed("basis elements are linearly dependent".into()));
        }
        // T: row i = RREF coordinates of elements[i]; original = rref_coords * T^{-1}
        let rows: Vec<Vec<u8>> = elements
            .iter()
            .map(|e| span.coordinates(e).expect("element of its own span"))
            .collect();
        let t = Mat::from_row_vecs(field, m, &rows);
        let to_original = t.inverse().expect("change of basis is invertible");
        Ok(Self { span, to_original })
    }

    pub(crate) fn coordinates(&self, v: &[u8]) -> Option<Vec<u8>> {
        let c = self.span.coordinates(v)?;
        let m = c.len();
        let row = Mat::from_vec(self.span.field(), 1, m, c);
        Some(row.mul(&self.to_original).into_data())
    }
}

/// A validated algebra with its radical computed on demand. Cheap to clone.
#[derive(Clone)]
pub struct Algebra(Arc<AlgebraInner>);

struct AlgebraInner {
    spec: AlgebraSpec,
    radical: OnceLock<RadicalData>,
}

impl Algebra {
    pub fn new(spec: AlgebraSpec) -> Self {
        Algebra(Arc::new(AlgebraInner {
            spec,
            radical: OnceLock::new(),
        }))
    }

    /// Uses a radical computed elsewhere, e.g. from a smaller faithful
    /// representation.
    pub fn with_radical(spec: AlgebraSpec, radical: RadicalData) -> Self {
        let cell = OnceLock::new();
        let _ = cell.set(radical);
        Algebra(Arc::new(AlgebraInner { spec, radical: cell }))
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.0.spec
    }

    pub fn radical(&self) -> &RadicalData {
        self.0.radical.get_or_init(|| radical::jacobson_radical(&self.0.spec))
    }

    /// Basis of J as coefficient vectors.
    pub fn radical_elements(&self) -> Vec<Vec<u8>> {
        self.radical().radical.vectors()
    }

    pub fn same_as(&self, other: &Algebra) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.spec == other.0.spec
    }
}

impl Deref for Algebra {
    type Target = AlgebraSpec;
    fn deref(&self) -> &AlgebraSpec {
        &self.0.spec
    }
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra(dim {} over {})", self.dim(), self.field())
    }
}

impl From<AlgebraSpec> for Algebra {
    fn from(spec: AlgebraSpec) -> Self {
        Algebra::new(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;

    #[test]
    fn truncated_polynomials_accepted() {
        assert!(builtin::u2().validate().is_ok());
    }

    #[test]
    fn example_algebra_accepted_with_unit() {
        let a = builtin::ex61();
        assert!(a.validate().is_ok());
        // 1 = e11 + e22 + e33
        assert_eq!(a.unit(), &[1, 0, 0, 1, 1]);
    }

    #[test]
    fn altered_product_is_non_associative() {
        let a = builtin::ex61();
        let n = a.dim();
        let mut mul = a.table().to_vec();
        // e12 * e22 := e13 instead of e12
        let (e12, e13, e22) = (1, 2, 3);
        let idx = (e12 * n + e22) * n;
        mul[idx + e12] = 0;
        mul[idx + e13] = 1;
        let err = AlgebraSpec::new(a.field(), a.basis_names().to_vec(), mul, a.unit().to_vec()).unwrap_err();
        assert!(matches!(err, Error::NonAssociative(..)));
    }

    #[test]
    fn bad_unit_rejected() {
        let a = builtin::u2();
        let err = AlgebraSpec::new(a.field(), a.basis_names().to_vec(), a.table().to_vec(), vec![0, 1]).unwrap_err();
        assert!(matches!(err, Error::UnitFailure(_)));
    }

    #[test]
    fn opposite_is_involutive_and_reverses_order() {
        let a = builtin::ex61();
        let op = a.opposite();
        assert_eq!(op.opposite(), a);
        // e22 * e12 = e12 in the opposite algebra
        assert_eq!(op.product_basis(3, 1), vec![0, 1, 0, 0, 0]);
        let c = builtin::u3();
        assert_eq!(c.opposite(), c);
    }

    #[test]
    fn quotient_by_radical_of_ex61_is_three_copies_of_gf2() {
        let a = builtin::ex61();
        let j = Subspace::from_vectors(a.field(), 5, &[a.basis_vector(1), a.basis_vector(2)]);
        let q = a.quotient(&j);
        assert_eq!(q.dim(), 3);
        assert!(q.validate().is_ok());
        assert!(q.is_commutative());
    }

    #[test]
    fn matrix_basis_reconstructs_upper_triangular() {
        let f = PrimeField::GF2;
        let e = |r: usize, c: usize| {
            let mut m = Mat::zeros(f, 2, 2);
            m.set(r, c, 1);
            m
        };
        let t = AlgebraSpec::from_matrix_basis(f, vec!["e11".into(), "e12".into(), "e22".into()], &[e(0, 0), e(0, 1), e(1, 1)]).unwrap();
        assert_eq!(t, builtin::t2gf2());
    }
}
