//! Builtin algebras shipped with the crate.

use crate::algebra::AlgebraSpec;
use crate::error::{Error, Result};
use crate::field::PrimeField;

/// Names accepted by [`by_name`].
pub const NAMES: [&str; 6] = ["ex61", "t2gf2", "u2", "u3", "v2", "ss2"];

pub fn by_name(name: &str) -> Result<AlgebraSpec> {
    Ok(match name {
        "ex61" => ex61(),
        "t2gf2" => t2gf2(),
        "u2" => u2(),
        "u3" => u3(),
        "v2" => v2(),
        "ss2" => ss2(),
        other => return Err(Error::UnknownBuiltin(other.to_string())),
    })
}

/// All builtins, in the order of [`NAMES`].
pub fn all() -> Vec<(&'static str, AlgebraSpec)> {
    NAMES.iter().map(|&n| (n, by_name(n).expect("builtin"))).collect()
}

/// Span of matrix units `e_ij` for the given index pairs, multiplied as
/// `e_ij e_kl = [j == k] e_il`.
fn matrix_unit_algebra(field: PrimeField, units: &[(usize, usize)]) -> AlgebraSpec {
    let n = units.len();
    let mut mul = vec![0u8; n * n * n];
    for (a, &(i, j)) in units.iter().enumerate() {
        for (b, &(k, l)) in units.iter().enumerate() {
            if j == k {
                let c = units.iter().position(|&u| u == (i, l)).expect("closed under products");
                mul[(a * n + b) * n + c] = 1;
            }
        }
    }
    let unit = units.iter().map(|&(i, j)| u8::from(i == j)).collect();
    let names = units.iter().map(|&(i, j)| format!("e{}{}", i + 1, j + 1)).collect();
    AlgebraSpec::new(field, names, mul, unit).expect("matrix unit algebra is valid")
}

/// The 5-dimensional algebra with basis e11, e12, e13, e22, e33 over GF(2).
pub fn ex61() -> AlgebraSpec {
    matrix_unit_algebra(PrimeField::GF2, &[(0, 0), (0, 1), (0, 2), (1, 1), (2, 2)])
}

/// Upper-triangular 2x2 matrices over GF(2), basis e11, e12, e22.
pub fn t2gf2() -> AlgebraSpec {
    matrix_unit_algebra(PrimeField::GF2, &[(0, 0), (0, 1), (1, 1)])
}

/// Full n x n matrices over `field`, basis in row-major order.
pub fn full_matrix(field: PrimeField, n: usize) -> AlgebraSpec {
    let units: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    matrix_unit_algebra(field, &units)
}

/// `field[x]/(x^n)` with basis 1, x, ..., x^(n-1).
pub fn truncated_polynomial(field: PrimeField, n: usize) -> AlgebraSpec {
    let mut mul = vec![0u8; n * n * n];
    for i in 0..n {
        for j in 0..n {
            if i + j < n {
                mul[(i * n + j) * n + i + j] = 1;
            }
        }
    }
    let names = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        })
        .collect();
    let mut unit = vec![0u8; n];
    unit[0] = 1;
    AlgebraSpec::new(field, names, mul, unit).expect("truncated polynomial ring is valid")
}

pub fn u2() -> AlgebraSpec {
    truncated_polynomial(PrimeField::GF2, 2)
}

pub fn u3() -> AlgebraSpec {
    truncated_polynomial(PrimeField::GF2, 3)
}

/// GF(2)[x,y]/(x,y)^2, basis 1, x, y.
pub fn v2() -> AlgebraSpec {
    let n = 3;
    let mut mul = vec![0u8; n * n * n];
    for i in 0..n {
        mul[i * n + i] = 1; // 1 * b_i
        mul[(i * n) * n + i] = 1; // b_i * 1
    }
    AlgebraSpec::new(PrimeField::GF2, vec!["1".into(), "x".into(), "y".into()], mul, vec![1, 0, 0])
        .expect("v2 is valid")
}

/// `field^n` with componentwise product.
pub fn split_semisimple(field: PrimeField, n: usize) -> AlgebraSpec {
    let mut mul = vec![0u8; n * n * n];
    for i in 0..n {
        mul[(i * n + i) * n + i] = 1;
    }
    let names = (0..n).map(|i| format!("f{}", i + 1)).collect();
    AlgebraSpec::new(field, names, mul, vec![1; n]).expect("split semisimple algebra is valid")
}

/// GF(2) x GF(2).
pub fn ss2() -> AlgebraSpec {
    split_semisimple(PrimeField::GF2, 2)
}

/// Tensor product over the common prime field.
pub fn tensor(a: &AlgebraSpec, b: &AlgebraSpec) -> AlgebraSpec {
    assert_eq!(a.field(), b.field());
    let f = a.field();
    let (n1, n2) = (a.dim(), b.dim());
    let n = n1 * n2;
    let mut mul = vec![0u8; n * n * n];
    for i in 0..n1 {
        for k in 0..n1 {
            for m in 0..n1 {
                let c1 = a.c(i, k, m);
                if c1 == 0 {
                    continue;
                }
                for j in 0..n2 {
                    for l in 0..n2 {
                        for o in 0..n2 {
                            let c2 = b.c(j, l, o);
                            if c2 != 0 {
                                mul[((i * n2 + j) * n + k * n2 + l) * n + m * n2 + o] = f.mul(c1, c2);
                            }
                        }
                    }
                }
            }
        }
    }
    let mut names = Vec::with_capacity(n);
    let mut unit = Vec::with_capacity(n);
    for i in 0..n1 {
        for j in 0..n2 {
            names.push(format!("{}*{}", a.basis_names()[i], b.basis_names()[j]));
            unit.push(f.mul(a.unit()[i], b.unit()[j]));
        }
    }
    AlgebraSpec::new(f, names, mul, unit).expect("tensor product of algebras is an algebra")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_validate() {
        for (name, a) in all() {
            assert!(a.validate().is_ok(), "{name}");
        }
        assert_eq!(ex61().dim(), 5);
        assert_eq!(t2gf2().dim(), 3);
    }

    #[test]
    fn unknown_name() {
        assert!(matches!(by_name("nope"), Err(Error::UnknownBuiltin(_))));
    }

    #[test]
    fn ex61_unit_group_has_four_elements() {
        let a = ex61();
        let zero = vec![0u8; 5];
        let elems: Vec<Vec<u8>> = crate::subspace::all_vectors(a.field(), 5).collect();
        assert_eq!(elems.len(), 32);
        // oracle: x is a unit iff some y has xy = yx = 1
        let units = elems
            .iter()
            .filter(|x| elems.iter().any(|y| a.mul(x, y) == a.unit() && a.mul(y, x) == a.unit()))
            .count();
        assert_eq!(units, 4);
        assert_eq!(elems.iter().filter(|x| a.is_unit(x)).count(), 4);
        assert!(!a.is_unit(&zero));
    }
}
