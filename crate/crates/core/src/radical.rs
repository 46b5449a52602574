//! Jacobson radical of a matrix algebra via Frobenius-twisted trace forms.
//!
//! For an algebra `A` of d x d matrices over GF(p), set `I_{-1} = A` and for
//! `i = 0..=floor(log_p d)`
//!
//! ```text
//! I_i = { a in I_{i-1} : g_i(a b) = 0 for all b in A }
//! g_i(x) = (Tr(x~^(p^i)) mod p^(i+1)) / p^i
//! ```
//!
//! where `x~` lifts the entries of `x` to integers in `[0, p)`. The last
//! `I_i` is the radical. When `p > d` this collapses to the kernel of the
//! ordinary trace form.

use crate::algebra::AlgebraSpec;
use crate::field::PrimeField;
use crate::matrix::Mat;
use crate::subspace::Subspace;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalData {
    /// Basis of J in the coordinates of the algebra.
    pub radical: Subspace,
    /// Least k with J^k = 0.
    pub nilpotency_index: usize,
    pub semisimple_dim: usize,
}

pub fn jacobson_radical(a: &AlgebraSpec) -> RadicalData {
    let basis: Vec<Mat> = (0..a.dim()).map(|i| a.left_mult_matrix(&a.basis_vector(i))).collect();
    let radical = matrix_algebra_radical(a.field(), &basis);
    let nilpotency_index = nilpotency_index(a, &radical);
    RadicalData {
        semisimple_dim: a.dim() - radical.dim(),
        radical,
        nilpotency_index,
    }
}

/// Radical of the span of `basis` (square matrices closed under product and
/// containing the identity), returned in coordinates with respect to `basis`.
pub fn matrix_algebra_radical(field: PrimeField, basis: &[Mat]) -> Subspace {
    let m = basis.len();
    if m == 0 {
        return Subspace::zero(field, 0);
    }
    let d = basis[0].rows() as u64;
    let p = field.order() as u64;
    let mut top = 0u32;
    let mut pw = p;
    while pw <= d {
        top += 1;
        pw *= p;
    }

    let mut coords: Vec<Vec<u8>> = (0..m)
        .map(|i| {
            let mut v = vec![0u8; m];
            v[i] = 1;
            v
        })
        .collect();
    let mut elems: Vec<Mat> = basis.to_vec();

    for i in 0..=top {
        if coords.is_empty() {
            break;
        }
        let mut g = Mat::zeros(field, coords.len(), m);
        for (k, a) in elems.iter().enumerate() {
            for (j, b) in basis.iter().enumerate() {
                g.set(k, j, twisted_trace(&a.mul(b), p, i));
            }
        }
        // rows x with x * G = 0
        let left_kernel = g.transpose().kernel();
        let mut next_coords = Vec::with_capacity(left_kernel.dim());
        let mut next_elems = Vec::with_capacity(left_kernel.dim());
        for x in left_kernel.vectors() {
            let mut c = vec![0u8; m];
            let mut e = Mat::zeros(field, elems[0].rows(), elems[0].cols());
            for (k, &xk) in x.iter().enumerate() {
                if xk != 0 {
                    for (ci, &ck) in c.iter_mut().zip(&coords[k]) {
                        *ci = field.add(*ci, field.mul(xk, ck));
                    }
                    e.add_scaled(&elems[k], xk);
                }
            }
            next_coords.push(c);
            next_elems.push(e);
        }
        coords = next_coords;
        elems = next_elems;
    }
    Subspace::from_vectors(field, m, &coords)
}

/// `g_i(x)`: the trace of the `p^i`-th power of the integer lift, taken
/// mod `p^(i+1)` and divided by `p^i`.
fn twisted_trace(x: &Mat, p: u64, i: u32) -> u8 {
    let n = x.rows();
    let modulus = p.pow(i + 1);
    let mut cur: Vec<u64> = x.data().iter().map(|&v| v as u64).collect();
    for _ in 0..i {
        cur = int_pow(&cur, n, p, modulus);
    }
    let tr = (0..n).map(|k| cur[k * n + k]).sum::<u64>() % modulus;
    (tr / p.pow(i)) as u8
}

fn int_mul(a: &[u64], b: &[u64], n: usize, modulus: u64) -> Vec<u64> {
    let mut out = vec![0u64; n * n];
    for r in 0..n {
        for k in 0..n {
            let ark = a[r * n + k];
            if ark == 0 {
                continue;
            }
            for c in 0..n {
                out[r * n + c] = (out[r * n + c] + ark * b[k * n + c]) % modulus;
            }
        }
    }
    out
}

fn int_pow(a: &[u64], n: usize, mut e: u64, modulus: u64) -> Vec<u64> {
    let mut acc: Vec<u64> = (0..n * n).map(|k| u64::from(k / n == k % n)).collect();
    let mut base = a.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = int_mul(&acc, &base, n, modulus);
        }
        e >>= 1;
        if e > 0 {
            base = int_mul(&base, &base, n, modulus);
        }
    }
    acc
}

/// Span of all products `x y` with `x` in `u`, `y` in `v`.
pub fn ideal_product(a: &AlgebraSpec, u: &Subspace, v: &Subspace) -> Subspace {
    let mut prods = Vec::new();
    for x in u.vectors() {
        for y in v.vectors() {
            prods.push(a.mul(&x, &y));
        }
    }
    Subspace::from_vectors(a.field(), a.dim(), &prods)
}

/// Radical data for an algebra whose basis elements act faithfully as the
/// matrices `rep` (any convention for the order of products).
pub fn radical_from_representation(a: &AlgebraSpec, rep: &[Mat]) -> RadicalData {
    let radical = matrix_algebra_radical(a.field(), rep);
    RadicalData {
        semisimple_dim: a.dim() - radical.dim(),
        nilpotency_index: nilpotency_index(a, &radical),
        radical,
    }
}

fn nilpotency_index(a: &AlgebraSpec, j: &Subspace) -> usize {
    let mut k = 1;
    let mut power = j.clone();
    while !power.is_zero() {
        power = ideal_product(a, &power, j);
        k += 1;
        assert!(k <= a.dim() + 1, "radical failed to be nilpotent");
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;
    use crate::subspace::all_vectors;

    /// Largest nilpotent two-sided ideal, by scanning every subspace.
    fn brute_force_radical(a: &AlgebraSpec) -> Subspace {
        let n = a.dim();
        let f = a.field();
        let mut best = Subspace::zero(f, n);
        let vectors: Vec<Vec<u8>> = all_vectors(f, n).collect();
        let mut seen = std::collections::HashSet::new();
        // every subspace is spanned by at most n vectors; grow spans greedily
        let mut frontier = vec![Subspace::zero(f, n)];
        seen.insert(Subspace::zero(f, n));
        while let Some(s) = frontier.pop() {
            if is_two_sided_ideal(a, &s) && is_nilpotent_ideal(a, &s) && s.dim() > best.dim() {
                best = s.clone();
            }
            for v in &vectors {
                if !s.contains_vector(v) {
                    let t = s.sum(&Subspace::from_vectors(f, n, std::slice::from_ref(v))).unwrap();
                    if seen.insert(t.clone()) {
                        frontier.push(t);
                    }
                }
            }
        }
        best
    }

    fn is_two_sided_ideal(a: &AlgebraSpec, s: &Subspace) -> bool {
        s.vectors().iter().all(|x| {
            (0..a.dim()).all(|i| {
                let b = a.basis_vector(i);
                s.contains_vector(&a.mul(&b, x)) && s.contains_vector(&a.mul(x, &b))
            })
        })
    }

    fn is_nilpotent_ideal(a: &AlgebraSpec, s: &Subspace) -> bool {
        let mut power = s.clone();
        for _ in 0..=a.dim() {
            if power.is_zero() {
                return true;
            }
            power = ideal_product(a, &power, s);
        }
        power.is_zero()
    }

    #[test]
    fn example_algebra_radical() {
        let a = builtin::ex61();
        let r = jacobson_radical(&a);
        let expected = Subspace::from_vectors(a.field(), 5, &[a.basis_vector(1), a.basis_vector(2)]);
        assert_eq!(r.radical, expected);
        assert_eq!(r.nilpotency_index, 2);
        assert_eq!(r.semisimple_dim, 3);
    }

    #[test]
    fn semisimple_has_zero_radical() {
        let r = jacobson_radical(&builtin::ss2());
        assert!(r.radical.is_zero());
        assert_eq!(r.nilpotency_index, 1);
    }

    #[test]
    fn truncated_cubic() {
        let a = builtin::u3();
        let r = jacobson_radical(&a);
        assert_eq!(r.radical, brute_force_radical(&a));
        assert_eq!(r.radical.dim(), 2);
        assert_eq!(r.nilpotency_index, 3);
    }

    #[test]
    fn agrees_with_brute_force_on_builtins() {
        for (name, a) in builtin::all() {
            assert_eq!(jacobson_radical(&a).radical, brute_force_radical(&a), "{name}");
        }
        for a in [builtin::full_matrix(PrimeField::GF2, 2), builtin::u2().product(&builtin::u2()).unwrap()] {
            assert_eq!(jacobson_radical(&a).radical, brute_force_radical(&a));
        }
    }

    #[test]
    fn quotient_by_radical_is_semisimple() {
        for (name, a) in builtin::all() {
            let r = jacobson_radical(&a);
            let q = a.quotient(&r.radical);
            assert!(jacobson_radical(&q).radical.is_zero(), "{name}");
        }
    }

    #[test]
    fn odd_characteristic() {
        let f3 = PrimeField::new(3).unwrap();
        // GF(3)[x]/(x^3) has p = d, so the twisted step matters
        let a = builtin::truncated_polynomial(f3, 3);
        assert_eq!(jacobson_radical(&a).radical.dim(), 2);
        let m2 = builtin::full_matrix(f3, 2);
        assert!(jacobson_radical(&m2).radical.is_zero());
        let f5 = PrimeField::new(5).unwrap();
        let u = builtin::truncated_polynomial(f5, 4);
        assert_eq!(jacobson_radical(&u).radical.dim(), 3);
    }

    #[test]
    fn field_extension_is_semisimple() {
        // GF(4) as 2x2 matrices over GF(2): span{I, w} with w^2 = w + 1
        let f = PrimeField::GF2;
        let w = Mat::from_rows(f, &[[0, 1], [1, 1]]);
        let gf4 = AlgebraSpec::from_matrix_basis(f, vec!["1".into(), "w".into()], &[Mat::identity(f, 2), w]).unwrap();
        assert!(jacobson_radical(&gf4).radical.is_zero());
        // GF(4)[t]/(t^2): local with residue field GF(4)
        let gf4_u2 = builtin::tensor(&gf4, &builtin::u2());
        assert_eq!(jacobson_radical(&gf4_u2).radical.dim(), 2);
    }
}
