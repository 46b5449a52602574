//! Krull-Schmidt decomposition.
//!
//! A module is indecomposable iff `End(M)` is local, i.e. `End(M)/J` is a
//! field. To split a decomposable module we pick `phi` in `End(M)` and look
//! at the commutative algebra `C = F_p[phi]`. Frobenius `x -> x^p` is linear
//! on `C`; a non-scalar fixed point `z` satisfies `z^p = z`, so it is
//! diagonalizable over F_p and `M = ker(z - l) + im(z - l)` for any
//! eigenvalue `l`, both summands being submodules.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{AlgebraSpec, SpanCoordinates};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::matrix::Mat;
use crate::module::{exhaustible, isomorphism_of_indecomposables, EndAlgebra, Module, DEFAULT_SEED};
use crate::radical::matrix_algebra_radical;
use crate::subspace::Subspace;

/// Order in which endomorphism basis elements are tried as splitting
/// candidates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Order {
    #[default]
    Forward,
    Reverse,
}

#[derive(Clone, Copy, Debug)]
pub struct DecomposeOptions {
    pub order: Order,
    pub seed: u64,
    /// Random endomorphisms tried before falling back to exhaustion.
    pub random_candidates: usize,
}

impl Default for DecomposeOptions {
    fn default() -> Self {
        Self {
            order: Order::Forward,
            seed: DEFAULT_SEED,
            random_candidates: 256,
        }
    }
}

/// An indecomposable summand with the columns spanning it inside the input.
#[derive(Clone, Debug)]
pub struct Part {
    pub module: Module,
    pub embedding: Mat,
    /// Index into [`Decomposition::classes`].
    pub class: usize,
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub parts: Vec<Part>,
    /// One representative per isomorphism class with its multiplicity.
    pub classes: Vec<(Module, usize)>,
    /// `[B_1 | ... | B_k]`: an isomorphism from the direct sum of the parts
    /// onto the input.
    pub witness: Mat,
}

impl Decomposition {
    pub fn direct_sum(&self) -> Result<Module> {
        let refs: Vec<&Module> = self.parts.iter().map(|p| &p.module).collect();
        if refs.is_empty() {
            return Err(Error::Malformed("empty decomposition".into()));
        }
        Module::direct_sum(&refs)
    }
}

/// Indecomposable summands grouped by isomorphism class.
pub fn decompose(m: &Module) -> Result<Vec<(Module, usize)>> {
    Ok(decompose_with(m, DecomposeOptions::default())?.classes)
}

pub fn decompose_with(m: &Module, opts: DecomposeOptions) -> Result<Decomposition> {
    let f = m.field();
    let mut raw = Vec::new();
    split_recursive(m, Mat::identity(f, m.dim()), &opts, &mut raw)?;
    let mut classes: Vec<(Module, usize)> = Vec::new();
    let mut parts = Vec::with_capacity(raw.len());
    for (module, embedding) in raw {
        let mut class = None;
        for (idx, (rep, count)) in classes.iter_mut().enumerate() {
            if isomorphism_of_indecomposables(rep, &module)?.is_some() {
                *count += 1;
                class = Some(idx);
                break;
            }
        }
        let class = class.unwrap_or_else(|| {
            classes.push((module.clone(), 1));
            classes.len() - 1
        });
        parts.push(Part { module, embedding, class });
    }
    let cols: Vec<&Mat> = parts.iter().map(|p| &p.embedding).collect();
    let witness = if cols.is_empty() {
        Mat::zeros(f, 0, 0)
    } else {
        Mat::hstack(f, m.dim(), &cols)
    };
    Ok(Decomposition { parts, classes, witness })
}

fn split_recursive(m: &Module, embedding: Mat, opts: &DecomposeOptions, out: &mut Vec<(Module, Mat)>) -> Result<()> {
    if m.dim() == 0 {
        return Ok(());
    }
    match split_once(m, opts)? {
        None => out.push((m.clone(), embedding)),
        Some((a, b)) => {
            for basis in [a, b] {
                let sub = m.restrict(&basis)?;
                let cols = Mat::from_row_vecs(m.field(), m.dim(), &basis).transpose();
                split_recursive(&sub, embedding.mul(&cols), opts, out)?;
            }
        }
    }
    Ok(())
}

/// Whether `End(M)/J(End(M))` is a field.
pub fn is_indecomposable(m: &Module) -> Result<bool> {
    if m.dim() == 0 {
        return Ok(false);
    }
    let end = EndAlgebra::new(m)?;
    Ok(local_quotient(&end).is_none())
}

/// `None` when `End(M)` is local, else the semisimple quotient.
fn local_quotient(end: &EndAlgebra) -> Option<AlgebraSpec> {
    let f = end.spec.field();
    let j = matrix_algebra_radical(f, &end.basis);
    if end.basis.len() - j.dim() == 1 {
        return None;
    }
    let b = end.spec.quotient(&j);
    // a finite semisimple algebra is a field iff it is commutative and its
    // Frobenius-fixed elements are just the prime field
    if b.is_commutative() && frobenius_fixed(&b).dim() == 1 {
        return None;
    }
    Some(b)
}

/// `{x : x^p = x}` in a commutative algebra, where Frobenius is linear.
fn frobenius_fixed(b: &AlgebraSpec) -> Subspace {
    let f = b.field();
    let n = b.dim();
    let p = f.order() as u64;
    let mut phi_minus_id = Mat::zeros(f, n, n);
    for i in 0..n {
        let img = b.power(&b.basis_vector(i), p);
        for (k, &v) in img.iter().enumerate() {
            phi_minus_id.set(k, i, v);
        }
        let d = phi_minus_id.get(i, i);
        phi_minus_id.set(i, i, f.sub(d, 1));
    }
    phi_minus_id.kernel()
}

/// Two complementary submodule bases, or `None` if `M` is indecomposable.
/// Bases of two complementary submodules.
type Split = (Vec<Vec<u8>>, Vec<Vec<u8>>);

fn split_once(m: &Module, opts: &DecomposeOptions) -> Result<Option<Split>> {
    let end = EndAlgebra::new(m)?;
    if local_quotient(&end).is_none() {
        return Ok(None);
    }
    let f = m.field();
    let mut candidates: Vec<Mat> = end.basis.clone();
    if opts.order == Order::Reverse {
        candidates.reverse();
    }
    for phi in &candidates {
        if let Some(s) = split_with(m, phi) {
            return Ok(Some(s));
        }
    }
    let h = end.basis.len();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let p = f.order() as u8;
    for _ in 0..opts.random_candidates {
        let coeffs: Vec<u8> = (0..h).map(|_| rng.gen_range(0..p)).collect();
        if let Some(s) = split_with(m, &end.element(&coeffs)) {
            return Ok(Some(s));
        }
    }
    if exhaustible(f, h) {
        for coeffs in crate::subspace::all_vectors(f, h) {
            if let Some(s) = split_with(m, &end.element(&coeffs)) {
                return Ok(Some(s));
            }
        }
    }
    Err(Error::Invariant(format!(
        "End(M) is not local but no splitting endomorphism was found (dim M = {})",
        m.dim()
    )))
}

fn split_with(m: &Module, phi: &Mat) -> Option<Split> {
    let f = m.field();
    let d = m.dim();
    let z = semisimple_fixed_point(f, phi)?;
    for lambda in f.elements() {
        let shifted = z.sub(&Mat::identity(f, d).scale(lambda));
        let ker = shifted.kernel();
        if ker.dim() > 0 && ker.dim() < d {
            let im = shifted.image();
            debug_assert_eq!(ker.dim() + im.dim(), d);
            return Some((ker.vectors(), im.vectors()));
        }
    }
    None
}

/// A non-scalar element `z` of `F_p[phi]` with `z^p = z`, if any.
fn semisimple_fixed_point(f: PrimeField, phi: &Mat) -> Option<Mat> {
    let d = phi.rows();
    let mut powers = vec![Mat::identity(f, d)];
    loop {
        let next = powers.last().expect("nonempty").mul(phi);
        let flat: Vec<Vec<u8>> = powers.iter().chain(std::iter::once(&next)).map(|x| x.data().to_vec()).collect();
        if Subspace::from_vectors(f, d * d, &flat).dim() < flat.len() {
            break;
        }
        powers.push(next);
    }
    let k = powers.len();
    if k < 2 {
        return None;
    }
    let flat: Vec<Vec<u8>> = powers.iter().map(|x| x.data().to_vec()).collect();
    let coords = SpanCoordinates::new(f, d * d, &flat).ok()?;
    let p = f.order() as u64;
    let mut frob = Mat::zeros(f, k, k);
    for (i, x) in powers.iter().enumerate() {
        let img = coords.coordinates(x.pow(p).data())?;
        for (r, &v) in img.iter().enumerate() {
            frob.set(r, i, v);
        }
        frob.set(i, i, f.sub(frob.get(i, i), 1));
    }
    let fixed = frob.kernel();
    if fixed.dim() < 2 {
        return None;
    }
    fixed.vectors().into_iter().find_map(|c| {
        let mut z = Mat::zeros(f, d, d);
        for (x, &ci) in powers.iter().zip(&c) {
            z.add_scaled(x, ci);
        }
        let scalar = z.get(0, 0);
        (z != Mat::identity(f, d).scale(scalar)).then_some(z)
    })
}

/// Matches the indecomposable summands of `m` and `n` and assembles an
/// isomorphism from the block isomorphisms.
pub(crate) fn isomorphism_via_decomposition(m: &Module, n: &Module, seed: u64) -> Result<Option<Mat>> {
    let opts = DecomposeOptions {
        seed,
        ..DecomposeOptions::default()
    };
    let dm = decompose_with(m, opts)?;
    let dn = decompose_with(n, opts)?;
    if dm.parts.len() != dn.parts.len() {
        return Ok(None);
    }
    let f = m.field();
    let d = m.dim();
    let mut used = vec![false; dn.parts.len()];
    // block map from the sum of m's parts to the sum of n's parts
    let mut g = Mat::zeros(f, d, d);
    let offsets = |parts: &[Part]| {
        let mut acc = 0;
        parts
            .iter()
            .map(|p| {
                let o = acc;
                acc += p.module.dim();
                o
            })
            .collect::<Vec<_>>()
    };
    let (om, on) = (offsets(&dm.parts), offsets(&dn.parts));
    for (i, pm) in dm.parts.iter().enumerate() {
        let mut matched = false;
        for (j, pn) in dn.parts.iter().enumerate() {
            if used[j] {
                continue;
            }
            if let Some(iso) = isomorphism_of_indecomposables(&pm.module, &pn.module)? {
                used[j] = true;
                for r in 0..iso.rows() {
                    for c in 0..iso.cols() {
                        g.set(on[j] + r, om[i] + c, iso.get(r, c));
                    }
                }
                matched = true;
                break;
            }
        }
        if !matched {
            return Ok(None);
        }
    }
    let wm_inv = dm
        .witness
        .inverse()
        .ok_or_else(|| Error::Invariant("decomposition witness is singular".into()))?;
    let iso = dn.witness.mul(&g).mul(&wm_inv);
    if !m.is_homomorphism(n, &iso) || !iso.is_invertible() {
        return Err(Error::Invariant("assembled isomorphism fails to intertwine".into()));
    }
    Ok(Some(iso))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Algebra, Side};
    use crate::builtin;

    fn dims(parts: &[(Module, usize)]) -> Vec<(usize, usize)> {
        let mut v: Vec<(usize, usize)> = parts.iter().map(|(m, k)| (m.dim(), *k)).collect();
        v.sort();
        v
    }

    #[test]
    fn right_regular_of_example() {
        let a = Algebra::new(builtin::ex61());
        let r = Module::regular(&a, Side::Right);
        let d = decompose_with(&r, DecomposeOptions::default()).unwrap();
        assert_eq!(dims(&d.classes), vec![(1, 1), (1, 1), (3, 1)]);
        let sum = d.direct_sum().unwrap();
        assert!(sum.is_homomorphism(&r, &d.witness));
        assert!(d.witness.is_invertible());
    }

    #[test]
    fn semisimple_power_groups() {
        let a = Algebra::new(builtin::ex61());
        let r = Module::regular(&a, Side::Right);
        let s = r.submodule(&r.spin(&[a.basis_vector(3)]));
        let parts = decompose(&s.power(3)).unwrap();
        assert_eq!(dims(&parts), vec![(1, 3)]);
    }

    #[test]
    fn radical_of_example_splits_into_two_simples() {
        let a = Algebra::new(builtin::ex61());
        let r = Module::regular(&a, Side::Right);
        let j = r.radical_module();
        let parts = decompose(&j).unwrap();
        assert_eq!(dims(&parts), vec![(1, 1), (1, 1)]);
    }

    #[test]
    fn local_rings_are_indecomposable() {
        for spec in [builtin::u2(), builtin::u3(), builtin::v2()] {
            let a = Algebra::new(spec);
            assert!(is_indecomposable(&Module::regular(&a, Side::Left)).unwrap());
        }
        let ss = Algebra::new(builtin::ss2());
        assert!(!is_indecomposable(&Module::regular(&ss, Side::Left)).unwrap());
    }

    #[test]
    fn matrix_algebra_regular_module() {
        // M2(GF(2)) = column module twice; End/J is M2(GF(2)), not commutative
        let a = Algebra::new(builtin::full_matrix(PrimeField::GF2, 2));
        let parts = decompose(&Module::regular(&a, Side::Left)).unwrap();
        assert_eq!(dims(&parts), vec![(2, 2)]);
    }

    #[test]
    fn field_extension_summand_is_indecomposable() {
        // GF(4) over GF(2): End of the regular module is GF(4), a field
        let f = PrimeField::GF2;
        let w = Mat::from_rows(f, &[[0, 1], [1, 1]]);
        let gf4 = AlgebraSpec::from_matrix_basis(f, vec!["1".into(), "w".into()], &[Mat::identity(f, 2), w]).unwrap();
        let a = Algebra::new(gf4);
        let r = Module::regular(&a, Side::Left);
        assert!(is_indecomposable(&r).unwrap());
        let parts = decompose(&r.power(2)).unwrap();
        assert_eq!(dims(&parts), vec![(2, 2)]);
    }

    #[test]
    fn iso_via_decomposition_builds_witness() {
        let a = Algebra::new(builtin::t2gf2());
        let r = Module::regular(&a, Side::Right);
        let m = r.power(2);
        // scramble the basis
        let p = Mat::from_rows(
            a.field(),
            &[
                [1, 1, 0, 0, 0, 1],
                [0, 1, 0, 0, 0, 0],
                [0, 0, 1, 1, 0, 0],
                [0, 0, 0, 1, 0, 0],
                [1, 0, 0, 0, 1, 0],
                [0, 0, 0, 0, 0, 1],
            ],
        );
        let n = m.conjugate(&p).unwrap();
        let w = isomorphism_via_decomposition(&m, &n, 7).unwrap().unwrap();
        assert!(m.is_homomorphism(&n, &w) && w.is_invertible());
    }
}
