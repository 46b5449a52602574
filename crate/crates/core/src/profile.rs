//! Indecomposable projectives of an algebra and the simple-multiplicity
//! profiles, covers and hulls built from them.

use std::cmp::Reverse;

use serde::Serialize;

use crate::algebra::{Algebra, AlgebraSpec, Side};
use crate::decompose::{decompose_with, DecomposeOptions};
use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::module::{check_compatible, hom, hom_dim, isomorphism_of_indecomposables, search_combination, Module, DEFAULT_SEED};

/// One isomorphism class of indecomposable projective `P_i` with its simple
/// top `S_i`.
#[derive(Clone, Debug)]
pub struct ProjectiveBlock {
    pub projective: Module,
    pub multiplicity: usize,
    pub simple: Module,
    /// Orthogonal idempotents `e` with `eA` (or `Ae`) isomorphic to `P_i`,
    /// one per copy in the regular module.
    pub idempotents: Vec<Vec<u8>>,
    /// `dim End(S_i)`.
    pub simple_end_dim: usize,
}

#[derive(Clone, Debug)]
pub struct ProjectiveProfile {
    pub side: Side,
    pub blocks: Vec<ProjectiveBlock>,
    /// Isomorphism from the direct sum of all copies onto the regular module.
    pub witness: Mat,
}

/// Multiplicity of each simple class, indexed like the projective profile.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimpleProfile {
    pub multiplicities: Vec<usize>,
    pub dim: usize,
}

impl SimpleProfile {
    pub fn total(&self) -> usize {
        self.multiplicities.iter().sum()
    }
}

fn rank_signature(m: &Module) -> Vec<usize> {
    m.action().iter().map(Mat::rank).collect()
}

impl ProjectiveProfile {
    /// Krull-Schmidt decomposition of the regular module.
    pub fn new(algebra: &Algebra, side: Side) -> Result<Self> {
        let regular = Module::regular(algebra, side);
        let dec = decompose_with(&regular, DecomposeOptions::default())?;
        let winv = dec
            .witness
            .inverse()
            .ok_or_else(|| Error::Invariant("regular decomposition witness is singular".into()))?;
        // split 1 along the summands: its components are orthogonal idempotents
        let unit_coords = winv.mul_vec(algebra.unit());
        let mut offset = 0;
        let mut idempotents: Vec<Vec<Vec<u8>>> = vec![Vec::new(); dec.classes.len()];
        for part in &dec.parts {
            let k = part.module.dim();
            let e = part.embedding.mul_vec(&unit_coords[offset..offset + k]);
            offset += k;
            if !algebra.is_idempotent(&e) {
                return Err(Error::Invariant("unit component is not idempotent".into()));
            }
            idempotents[part.class].push(e);
        }
        let mut blocks: Vec<ProjectiveBlock> = dec
            .classes
            .into_iter()
            .zip(idempotents)
            .map(|((projective, multiplicity), idempotents)| {
                let simple = projective.top();
                let simple_end_dim = hom_dim(&simple, &simple)?;
                Ok(ProjectiveBlock {
                    projective,
                    multiplicity,
                    simple,
                    idempotents,
                    simple_end_dim,
                })
            })
            .collect::<Result<_>>()?;
        blocks.sort_by_key(|b| (Reverse(rank_signature(&b.simple)), Reverse(rank_signature(&b.projective))));
        Ok(Self {
            side,
            blocks,
            witness: dec.witness,
        })
    }

    /// Profile from a complete set of primitive idempotents whose
    /// projectives are pairwise non-isomorphic (a basic algebra).
    pub fn from_basic_idempotents(algebra: &Algebra, side: Side, idempotents: &[Vec<u8>]) -> Result<Self> {
        let regular = Module::regular(algebra, side);
        let f = algebra.field();
        let mut blocks = Vec::with_capacity(idempotents.len());
        let mut columns = Vec::new();
        for e in idempotents {
            let ideal = regular.spin(std::slice::from_ref(e));
            let projective = regular.submodule(&ideal);
            columns.push(Mat::from_row_vecs(f, algebra.dim(), &ideal.vectors()).transpose());
            let simple = projective.top();
            let simple_end_dim = hom_dim(&simple, &simple)?;
            blocks.push(ProjectiveBlock {
                projective,
                multiplicity: 1,
                simple,
                idempotents: vec![e.clone()],
                simple_end_dim,
            });
        }
        let refs: Vec<&Mat> = columns.iter().collect();
        let witness = Mat::hstack(f, algebra.dim(), &refs);
        if !witness.is_invertible() {
            return Err(Error::Invariant("idempotents do not decompose the regular module".into()));
        }
        Ok(Self { side, blocks, witness })
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn multiplicities(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.multiplicity).collect()
    }

    pub fn simples(&self) -> Vec<&Module> {
        self.blocks.iter().map(|b| &b.simple).collect()
    }

    pub fn projectives(&self) -> Vec<&Module> {
        self.blocks.iter().map(|b| &b.projective).collect()
    }

    /// Index of the simple class isomorphic to `s`.
    pub fn simple_index(&self, s: &Module) -> Result<Option<usize>> {
        for (i, b) in self.blocks.iter().enumerate() {
            if isomorphism_of_indecomposables(&b.simple, s)?.is_some() {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    /// Multiplicities of the simples in a semisimple module, read off from
    /// `dim Hom(S_i, X) / dim End(S_i)`.
    pub fn semisimple_profile(&self, x: &Module) -> Result<SimpleProfile> {
        if x.side() != self.side {
            return Err(Error::Incompatible);
        }
        let mut multiplicities = Vec::with_capacity(self.blocks.len());
        let mut accounted = 0;
        for b in &self.blocks {
            let h = hom_dim(&b.simple, x)?;
            if h % b.simple_end_dim != 0 {
                return Err(Error::UnmatchedSimple);
            }
            let u = h / b.simple_end_dim;
            accounted += u * b.simple.dim();
            multiplicities.push(u);
        }
        if accounted != x.dim() {
            return Err(Error::UnmatchedSimple);
        }
        Ok(SimpleProfile {
            multiplicities,
            dim: x.dim(),
        })
    }

    pub fn socle_profile(&self, m: &Module) -> Result<SimpleProfile> {
        self.semisimple_profile(&m.socle_module())
    }

    pub fn top_profile(&self, m: &Module) -> Result<SimpleProfile> {
        self.semisimple_profile(&m.top())
    }

    /// `P(M) = sum P_i^(s_i)` with a surjection onto `m`.
    pub fn projective_cover(&self, m: &Module) -> Result<(Module, Mat)> {
        let top = self.top_profile(m)?;
        let parts: Vec<&Module> = self
            .blocks
            .iter()
            .zip(&top.multiplicities)
            .flat_map(|(b, &s)| std::iter::repeat_n(&b.projective, s))
            .collect();
        if parts.is_empty() {
            return Ok((Module::zero(m.algebra(), m.side()), Mat::zeros(m.field(), m.dim(), 0)));
        }
        let cover = Module::direct_sum(&parts)?;
        let maps = hom(&cover, m)?;
        let d = m.dim();
        let surj = search_combination(m.field(), &maps, DEFAULT_SEED, |f| f.rank() == d)
            .ok_or_else(|| Error::Invariant("no surjection from the projective cover".into()))?;
        Ok((cover, surj))
    }
}

/// Indecomposable injectives on `side`: duals of the projectives on the
/// other side, ordered by the class of their (simple) socle.
pub fn injective_indecomposables(profile: &ProjectiveProfile, opposite: &ProjectiveProfile) -> Result<Vec<Module>> {
    if opposite.side != profile.side.opposite() {
        return Err(Error::Incompatible);
    }
    let mut slots: Vec<Option<Module>> = vec![None; profile.len()];
    for b in &opposite.blocks {
        let e = b.projective.k_dual();
        let idx = profile.simple_index(&e.socle_module())?.ok_or(Error::UnmatchedSimple)?;
        if slots[idx].replace(e).is_some() {
            return Err(Error::Invariant("two injectives with the same socle".into()));
        }
    }
    slots
        .into_iter()
        .map(|s| s.ok_or_else(|| Error::Invariant("simple class without an injective hull".into())))
        .collect()
}

/// `E(M) = sum E(S_i)^(u_i)` with an injective homomorphism `m -> E(M)`.
pub fn injective_hull(profile: &ProjectiveProfile, injectives: &[Module], m: &Module) -> Result<(Module, Mat)> {
    if m.dim() == 0 {
        return Ok((Module::zero(m.algebra(), m.side()), Mat::zeros(m.field(), 0, 0)));
    }
    let soc = profile.socle_profile(m)?;
    let parts: Vec<&Module> = injectives
        .iter()
        .zip(&soc.multiplicities)
        .flat_map(|(e, &u)| std::iter::repeat_n(e, u))
        .collect();
    let hull = Module::direct_sum(&parts)?;
    check_compatible(m, &hull)?;
    let maps = hom(m, &hull)?;
    let d = m.dim();
    let emb = search_combination(m.field(), &maps, DEFAULT_SEED, |f| f.rank() == d).ok_or(Error::NoEmbeddingFound)?;
    Ok((hull, emb))
}

/// `eAe` for `e` the sum of one primitive idempotent per projective class.
pub fn basic_ring(algebra: &Algebra) -> Result<AlgebraSpec> {
    let profile = ProjectiveProfile::new(algebra, Side::Right)?;
    if profile.blocks.iter().all(|b| b.multiplicity == 1) {
        return Ok(algebra.spec().clone());
    }
    let f = algebra.field();
    let n = algebra.dim();
    let mut e = vec![0u8; n];
    for b in &profile.blocks {
        for (x, &y) in e.iter_mut().zip(&b.idempotents[0]) {
            *x = f.add(*x, y);
        }
    }
    let products: Vec<Vec<u8>> = (0..n)
        .map(|i| algebra.mul(&algebra.mul(&e, &algebra.basis_vector(i)), &e))
        .collect();
    let span = crate::subspace::Subspace::from_vectors(f, n, &products);
    algebra.subalgebra(&span.vectors(), &e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;
    use crate::field::PrimeField;
    use crate::radical::jacobson_radical;

    fn ex61_right() -> (Algebra, ProjectiveProfile) {
        let a = Algebra::new(builtin::ex61());
        let p = ProjectiveProfile::new(&a, Side::Right).unwrap();
        (a, p)
    }

    #[test]
    fn example_right_profile_order() {
        let (a, p) = ex61_right();
        assert_eq!(p.multiplicities(), vec![1, 1, 1]);
        let dims: Vec<usize> = p.projectives().iter().map(|m| m.dim()).collect();
        assert_eq!(dims, vec![3, 1, 1]);
        // S2 is e22R and S3 is e33R
        let r = Module::regular(&a, Side::Right);
        let e22r = r.submodule(&r.spin(&[a.basis_vector(3)]));
        let e33r = r.submodule(&r.spin(&[a.basis_vector(4)]));
        assert_eq!(p.simple_index(&e22r).unwrap(), Some(1));
        assert_eq!(p.simple_index(&e33r).unwrap(), Some(2));
    }

    #[test]
    fn example_socle_profiles() {
        let (a, p) = ex61_right();
        let r = Module::regular(&a, Side::Right);
        let q1 = r.submodule(&r.spin(&[a.basis_vector(0)]));
        assert_eq!(p.socle_profile(&q1).unwrap().multiplicities, vec![0, 1, 1]);
        assert_eq!(p.socle_profile(&r).unwrap().multiplicities, vec![0, 2, 2]);
        assert_eq!(p.top_profile(&q1).unwrap().multiplicities, vec![1, 0, 0]);
        for (i, s) in p.simples().iter().enumerate() {
            let mut expected = vec![0; 3];
            expected[i] = 1;
            assert_eq!(p.socle_profile(s).unwrap().multiplicities, expected);
        }
    }

    #[test]
    fn idempotents_decompose_the_unit() {
        for (name, spec) in builtin::all() {
            let a = Algebra::new(spec);
            for side in [Side::Left, Side::Right] {
                let p = ProjectiveProfile::new(&a, side).unwrap();
                let f = a.field();
                let mut sum = vec![0u8; a.dim()];
                for b in &p.blocks {
                    assert_eq!(b.idempotents.len(), b.multiplicity);
                    for e in &b.idempotents {
                        for (x, &y) in sum.iter_mut().zip(e) {
                            *x = f.add(*x, y);
                        }
                    }
                }
                assert_eq!(sum, a.unit(), "{name} {side}");
                let total: usize = p.blocks.iter().map(|b| b.multiplicity * b.projective.dim()).sum();
                assert_eq!(total, a.dim());
            }
        }
    }

    #[test]
    fn upper_triangular_blocks() {
        let a = Algebra::new(builtin::t2gf2());
        let p = ProjectiveProfile::new(&a, Side::Right).unwrap();
        let mut dims: Vec<usize> = p.projectives().iter().map(|m| m.dim()).collect();
        dims.sort();
        assert_eq!(dims, vec![1, 2]);
    }

    #[test]
    fn covers() {
        let (a, p) = ex61_right();
        let r = Module::regular(&a, Side::Right);
        let q1 = r.submodule(&r.spin(&[a.basis_vector(0)]));
        let q2 = q1.quotient(&q1.spin(&[q1.socle().vectors()[1].clone()]));
        let (cover, surj) = p.projective_cover(&q2).unwrap();
        assert_eq!(cover.dim(), 3);
        assert!(cover.is_homomorphism(&q2, &surj));
        assert_eq!(surj.rank(), 2);
        let (c1, _) = p.projective_cover(&q1).unwrap();
        assert!(isomorphism_of_indecomposables(&c1, &q1).unwrap().is_some());
        let s1_s2 = Module::direct_sum(&[&p.blocks[0].simple, &p.blocks[1].simple]).unwrap();
        let (c, _) = p.projective_cover(&s1_s2).unwrap();
        assert_eq!(c.dim(), 4);
    }

    #[test]
    fn example_injectives_left() {
        let a = Algebra::new(builtin::ex61());
        let left = ProjectiveProfile::new(&a, Side::Left).unwrap();
        let right = ProjectiveProfile::new(&a, Side::Right).unwrap();
        let inj = injective_indecomposables(&left, &right).unwrap();
        let dims: Vec<usize> = inj.iter().map(Module::dim).collect();
        assert_eq!(dims.iter().sum::<usize>(), 5);
        for (i, e) in inj.iter().enumerate() {
            let soc = left.socle_profile(e).unwrap();
            assert_eq!(soc.total(), 1);
            assert_eq!(soc.multiplicities[i], 1);
        }
    }

    #[test]
    fn self_injective_truncated_cubic() {
        let a = Algebra::new(builtin::u3());
        let left = ProjectiveProfile::new(&a, Side::Left).unwrap();
        let right = ProjectiveProfile::new(&a, Side::Right).unwrap();
        let inj = injective_indecomposables(&left, &right).unwrap();
        assert_eq!(inj.len(), 1);
        assert!(isomorphism_of_indecomposables(&inj[0], &Module::regular(&a, Side::Left)).unwrap().is_some());
    }

    #[test]
    fn hull_embeds() {
        let a = Algebra::new(builtin::ex61());
        let left = ProjectiveProfile::new(&a, Side::Left).unwrap();
        let right = ProjectiveProfile::new(&a, Side::Right).unwrap();
        let inj = injective_indecomposables(&left, &right).unwrap();
        let reg = Module::regular(&a, Side::Left);
        let (hull, emb) = injective_hull(&left, &inj, &reg).unwrap();
        assert!(reg.is_homomorphism(&hull, &emb));
        assert_eq!(emb.rank(), reg.dim());
        assert_eq!(left.socle_profile(&hull).unwrap(), left.socle_profile(&reg).unwrap());
    }

    #[test]
    fn basic_rings() {
        let a = Algebra::new(builtin::ex61());
        assert_eq!(basic_ring(&a).unwrap(), *a.spec());
        let m2 = Algebra::new(builtin::full_matrix(PrimeField::GF2, 2));
        let b = basic_ring(&m2).unwrap();
        assert_eq!(b.dim(), 1);
        let prod = Algebra::new(builtin::split_semisimple(PrimeField::GF2, 1).product(m2.spec()).unwrap());
        let b = basic_ring(&prod).unwrap();
        assert_eq!(b.dim(), 2);
        assert!(b.is_commutative());
        assert!(jacobson_radical(&b).radical.is_zero());
        // idempotent up to isomorphism
        assert_eq!(basic_ring(&Algebra::new(b.clone())).unwrap().dim(), 2);
    }
}
