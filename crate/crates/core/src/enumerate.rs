//! Bounded catalogs of indecomposable modules, the Auslander ring of a
//! catalog, and Morita-dual data.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{build_from_span, Algebra, AlgebraSpec, Side, SpanCoordinates};
use crate::decompose::{decompose, is_indecomposable};
use crate::error::{Error, Result};
use crate::lattice::{submodule_lattice, Budget};
use crate::matrix::Mat;
use crate::module::{hom, hom_dim, isomorphism_of_indecomposables, Module};
use crate::profile::{injective_indecomposables, ProjectiveProfile, SimpleProfile};
use crate::radical::radical_from_representation;
use crate::subspace::Subspace;

/// Cheap isomorphism invariant used to bucket candidates before the full
/// isomorphism test.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Fingerprint {
    pub dim: usize,
    pub socle: Vec<usize>,
    pub top: Vec<usize>,
    /// `dim Hom(P_j, X)` for each indecomposable projective.
    pub hom_from_projectives: Vec<usize>,
}

impl Fingerprint {
    pub fn of(profile: &ProjectiveProfile, m: &Module) -> Result<Self> {
        Ok(Self {
            dim: m.dim(),
            socle: profile.socle_profile(m)?.multiplicities,
            top: profile.top_profile(m)?.multiplicities,
            hom_from_projectives: profile
                .projectives()
                .iter()
                .map(|p| hom_dim(p, m))
                .collect::<Result<_>>()?,
        })
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub module: Module,
    pub fingerprint: Fingerprint,
}

impl CatalogEntry {
    pub fn socle(&self) -> SimpleProfile {
        SimpleProfile {
            multiplicities: self.fingerprint.socle.clone(),
            dim: self.module.socle().dim(),
        }
    }

    pub fn top(&self) -> SimpleProfile {
        SimpleProfile {
            multiplicities: self.fingerprint.top.clone(),
            dim: self.module.dim() - self.module.radical().dim(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Catalog {
    pub side: Side,
    /// Bound on the top length; `None` for the cyclic catalog.
    pub length_bound: Option<usize>,
    pub dim_cap: Option<usize>,
    pub classes: Vec<CatalogEntry>,
    pub complete: bool,
}

impl Catalog {
    pub fn modules(&self) -> Vec<&Module> {
        self.classes.iter().map(|c| &c.module).collect()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.module.dim()).collect()
    }

    /// Index of the class isomorphic to an indecomposable `m`.
    pub fn find(&self, m: &Module) -> Result<Option<usize>> {
        for (i, c) in self.classes.iter().enumerate() {
            if c.module.dim() == m.dim() && isomorphism_of_indecomposables(&c.module, m)?.is_some() {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }
}

/// Collects indecomposables up to isomorphism, bucketed by fingerprint.
struct Collector<'a> {
    profile: &'a ProjectiveProfile,
    buckets: BTreeMap<Fingerprint, Vec<Module>>,
}

impl<'a> Collector<'a> {
    fn new(profile: &'a ProjectiveProfile) -> Self {
        Self {
            profile,
            buckets: BTreeMap::new(),
        }
    }

    fn offer(&mut self, m: Module) -> Result<()> {
        let fp = Fingerprint::of(self.profile, &m)?;
        let bucket = self.buckets.entry(fp).or_default();
        for known in bucket.iter() {
            if isomorphism_of_indecomposables(known, &m)?.is_some() {
                return Ok(());
            }
        }
        bucket.push(m);
        Ok(())
    }

    /// Larger modules first, then by fingerprint.
    fn finish(self) -> Vec<CatalogEntry> {
        let mut out: Vec<CatalogEntry> = self
            .buckets
            .into_iter()
            .flat_map(|(fp, ms)| {
                ms.into_iter().map(move |module| CatalogEntry {
                    module,
                    fingerprint: fp.clone(),
                })
            })
            .collect();
        out.sort_by(|a, b| b.fingerprint.dim.cmp(&a.fingerprint.dim).then_with(|| a.fingerprint.cmp(&b.fingerprint)));
        out
    }
}

/// All one-sided ideals: the submodules of the regular module.
pub fn enumerate_ideals(algebra: &Algebra, side: Side, budget: Budget) -> Result<Vec<Subspace>> {
    Ok(submodule_lattice(&Module::regular(algebra, side), budget)?.members().to_vec())
}

/// Indecomposable summands of the cyclic modules `A/I`.
pub fn enumerate_cyclic_indecomposables(profile: &ProjectiveProfile, algebra: &Algebra, budget: Budget) -> Result<Catalog> {
    let side = profile.side;
    let regular = Module::regular(algebra, side);
    let mut collector = Collector::new(profile);
    for ideal in enumerate_ideals(algebra, side, budget)? {
        if ideal.is_full() {
            continue;
        }
        for (summand, _) in decompose(&regular.quotient(&ideal))? {
            collector.offer(summand)?;
        }
    }
    Ok(Catalog {
        side,
        length_bound: None,
        dim_cap: None,
        classes: collector.finish(),
        complete: true,
    })
}

#[derive(Clone, Copy, Debug)]
pub struct EnumerateOptions {
    /// Largest top length `sum l_i`.
    pub length_bound: usize,
    pub dim_cap: Option<usize>,
    pub budget: Budget,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        Self {
            length_bound: 3,
            dim_cap: None,
            budget: Budget::default(),
        }
    }
}

/// Vectors `l` of length `n` with `1 <= sum l <= bound`.
fn compositions(n: usize, bound: usize) -> Vec<Vec<usize>> {
    fn go(i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == cur.len() {
            if cur.iter().sum::<usize>() > 0 {
                out.push(cur.clone());
            }
            return;
        }
        for k in 0..=left {
            cur[i] = k;
            go(i + 1, left - k, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    go(0, bound, &mut vec![0; n], &mut out);
    out
}

/// Every indecomposable with top length at most the bound. Each is
/// `P/K` for its projective cover `P = sum P_i^(l_i)` and some `K` inside
/// `rad P`, so only those quotients are examined.
pub fn enumerate_indecomposables(profile: &ProjectiveProfile, opts: EnumerateOptions) -> Result<Catalog> {
    let mut collector = Collector::new(profile);
    let mut complete = true;
    for l in compositions(profile.len(), opts.length_bound) {
        let parts: Vec<&Module> = profile
            .blocks
            .iter()
            .zip(&l)
            .flat_map(|(b, &k)| std::iter::repeat_n(&b.projective, k))
            .collect();
        let p = Module::direct_sum(&parts)?;
        let rad = p.radical();
        let rad_module = p.submodule(&rad);
        let lattice = match submodule_lattice(&rad_module, opts.budget) {
            Ok(lattice) => lattice,
            Err(Error::BudgetExceeded(_)) => {
                complete = false;
                continue;
            }
            Err(e) => return Err(e),
        };
        let rad_basis = Mat::from_row_vecs(p.field(), p.dim(), &rad.vectors());
        for k in lattice.members() {
            if opts.dim_cap.is_some_and(|cap| p.dim() - k.dim() > cap) {
                continue;
            }
            let in_p = k.basis().mul(&rad_basis);
            let quotient = p.quotient(&Subspace::from_matrix_rows(&in_p));
            if is_indecomposable(&quotient)? {
                collector.offer(quotient)?;
            }
        }
    }
    Ok(Catalog {
        side: profile.side,
        length_bound: Some(opts.length_bound),
        dim_cap: opts.dim_cap,
        classes: collector.finish(),
        complete,
    })
}

/// `T = End(U_1 + ... + U_n)` with the product `s.t = t o s`, so that
/// `T e_i = Hom(V, U_i)` and `e_i T = Hom(U_i, V)`.
pub struct AuslanderData {
    pub algebra: Algebra,
    /// Identity of `U_i` as an element of `T`.
    pub epsilons: Vec<Vec<u8>>,
    /// `T e_i` as left `T`-modules.
    pub left_projectives: Vec<Module>,
    /// `e_i T` as right `T`-modules.
    pub right_projectives: Vec<Module>,
    pub left_profile: ProjectiveProfile,
    pub right_profile: ProjectiveProfile,
    /// Block matrices on `V` for the basis of `T`.
    pub basis: Vec<Mat>,
}

/// Largest Auslander ring built; its structure constants are stored densely.
pub const AUSLANDER_DIM_CAP: usize = 256;

pub fn auslander_ring(catalog: &Catalog) -> Result<AuslanderData> {
    if !catalog.complete {
        return Err(Error::IncompleteCatalog);
    }
    let us = catalog.modules();
    let mut total = 0;
    for x in &us {
        for y in &us {
            total += hom_dim(x, y)?;
        }
    }
    if total > AUSLANDER_DIM_CAP {
        return Err(Error::BudgetExceeded(AUSLANDER_DIM_CAP));
    }
    let first = us.first().ok_or_else(|| Error::Malformed("empty catalog".into()))?;
    let f = first.field();
    let offsets: Vec<usize> = us
        .iter()
        .scan(0, |acc, u| {
            let o = *acc;
            *acc += u.dim();
            Some(o)
        })
        .collect();
    let v = offsets.last().unwrap() + us.last().unwrap().dim();
    let mut basis = Vec::new();
    let mut names = Vec::new();
    for (i, ui) in us.iter().enumerate() {
        for (j, uj) in us.iter().enumerate() {
            for (k, h) in hom(ui, uj)?.into_iter().enumerate() {
                let mut big = Mat::zeros(f, v, v);
                for r in 0..h.rows() {
                    for c in 0..h.cols() {
                        big.set(offsets[j] + r, offsets[i] + c, h.get(r, c));
                    }
                }
                basis.push(big);
                names.push(format!("h{}_{}_{}", i + 1, j + 1, k));
            }
        }
    }
    let (spec, coords) = diagrammatic_algebra(f, v, names, &basis)?;
    let rad = radical_from_representation(&spec, &basis);
    let algebra = Algebra::with_radical(spec, rad);
    let epsilons: Vec<Vec<u8>> = us
        .iter()
        .enumerate()
        .map(|(i, u)| {
            let mut e = Mat::zeros(f, v, v);
            for d in 0..u.dim() {
                e.set(offsets[i] + d, offsets[i] + d, 1);
            }
            coords.coordinates(e.data()).expect("identity of a summand lies in T")
        })
        .collect();
    let left_profile = ProjectiveProfile::from_basic_idempotents(&algebra, Side::Left, &epsilons)?;
    let right_profile = ProjectiveProfile::from_basic_idempotents(&algebra, Side::Right, &epsilons)?;
    Ok(AuslanderData {
        left_projectives: left_profile.projectives().into_iter().cloned().collect(),
        right_projectives: right_profile.projectives().into_iter().cloned().collect(),
        algebra,
        epsilons,
        left_profile,
        right_profile,
        basis,
    })
}

/// Span of square matrices with product `x.y = y x`.
fn diagrammatic_algebra(
    f: crate::field::PrimeField,
    v: usize,
    names: Vec<String>,
    basis: &[Mat],
) -> Result<(AlgebraSpec, SpanCoordinates)> {
    let flat: Vec<Vec<u8>> = basis.iter().map(|b| b.data().to_vec()).collect();
    let mul = |x: &[u8], y: &[u8]| {
        Mat::from_vec(f, v, v, y.to_vec()).mul(&Mat::from_vec(f, v, v, x.to_vec())).into_data()
    };
    let spec = build_from_span(f, v * v, names, &flat, Mat::identity(f, v).data(), &mul)?;
    let coords = SpanCoordinates::new(f, v * v, &flat)?;
    Ok((spec, coords))
}

/// `Q = E(S_1) + ... + E(S_m)`, `S = End(Q)` (diagrammatic product) and the
/// functor `Hom(-, Q)` into right `S`-modules.
pub struct MoritaDual {
    pub q: Module,
    pub injectives: Vec<Module>,
    pub s: Algebra,
    basis: Vec<Mat>,
}

pub fn morita_dual_data(algebra: &Algebra, side: Side) -> Result<MoritaDual> {
    let here = ProjectiveProfile::new(algebra, side)?;
    let there = ProjectiveProfile::new(algebra, side.opposite())?;
    let injectives = injective_indecomposables(&here, &there)?;
    let refs: Vec<&Module> = injectives.iter().collect();
    let q = Module::direct_sum(&refs)?;
    let basis = hom(&q, &q)?;
    let names = (0..basis.len()).map(|i| format!("s{i}")).collect();
    let (spec, _) = diagrammatic_algebra(q.field(), q.dim(), names, &basis)?;
    let rad = radical_from_representation(&spec, &basis);
    Ok(MoritaDual {
        s: Algebra::with_radical(spec, rad),
        q,
        injectives,
        basis,
    })
}

impl MoritaDual {
    /// `Hom(X, Q)` as a right `S`-module, `h.s = s o h`.
    pub fn dualize(&self, x: &Module) -> Result<Module> {
        let hs = hom(x, &self.q)?;
        let f = x.field();
        if hs.is_empty() {
            return Ok(Module::zero(&self.s, Side::Right));
        }
        let flat: Vec<Vec<u8>> = hs.iter().map(|h| h.data().to_vec()).collect();
        let coords = SpanCoordinates::new(f, self.q.dim() * x.dim(), &flat)?;
        let k = hs.len();
        let action = self
            .basis
            .iter()
            .map(|s| {
                let mut m = Mat::zeros(f, k, k);
                for (c, h) in hs.iter().enumerate() {
                    let col = coords
                        .coordinates(s.mul(h).data())
                        .expect("post-composition stays in Hom(X, Q)");
                    for (r, &val) in col.iter().enumerate() {
                        m.set(r, c, val);
                    }
                }
                m
            })
            .collect();
        Module::new(&self.s, Side::Right, k, action)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;

    fn setup(spec: AlgebraSpec, side: Side) -> (Algebra, ProjectiveProfile) {
        let a = Algebra::new(spec);
        let p = ProjectiveProfile::new(&a, side).unwrap();
        (a, p)
    }

    #[test]
    fn ideal_counts() {
        let b = Budget::default();
        assert_eq!(enumerate_ideals(&Algebra::new(builtin::u2()), Side::Left, b).unwrap().len(), 3);
        assert_eq!(enumerate_ideals(&Algebra::new(builtin::ss2()), Side::Left, b).unwrap().len(), 4);
    }

    #[test]
    fn example_cyclic_catalog() {
        let (a, p) = setup(builtin::ex61(), Side::Right);
        let cat = enumerate_cyclic_indecomposables(&p, &a, Budget::default()).unwrap();
        assert_eq!(cat.dims(), vec![3, 2, 2, 1, 1, 1]);
    }

    #[test]
    fn example_length_two_matches_cyclic() {
        let (a, p) = setup(builtin::ex61(), Side::Right);
        let cyclic = enumerate_cyclic_indecomposables(&p, &a, Budget::default()).unwrap();
        let opts = EnumerateOptions {
            length_bound: 2,
            dim_cap: Some(5),
            budget: Budget::default(),
        };
        let full = enumerate_indecomposables(&p, opts).unwrap();
        assert!(full.complete);
        assert_eq!(full.dims(), cyclic.dims());
        for m in full.modules() {
            assert!(cyclic.find(m).unwrap().is_some());
        }
    }

    #[test]
    fn small_catalogs() {
        let (a, p) = setup(builtin::u3(), Side::Left);
        assert_eq!(enumerate_cyclic_indecomposables(&p, &a, Budget::default()).unwrap().dims(), vec![3, 2, 1]);
        let (_, p) = setup(builtin::t2gf2(), Side::Right);
        let cat = enumerate_indecomposables(&p, EnumerateOptions { length_bound: 2, ..Default::default() }).unwrap();
        assert_eq!(cat.dims(), vec![2, 1, 1]);
        let (_, p) = setup(builtin::ss2(), Side::Left);
        let cat = enumerate_indecomposables(&p, EnumerateOptions::default()).unwrap();
        assert_eq!(cat.dims(), vec![1, 1]);
    }

    #[test]
    fn auslander_dimensions() {
        for (spec, side, expected) in [
            (builtin::ss2(), Side::Left, 2),
            (builtin::u2(), Side::Left, 5),
            (builtin::t2gf2(), Side::Right, 5),
        ] {
            let (_, p) = setup(spec, side);
            let cat = enumerate_indecomposables(&p, EnumerateOptions::default()).unwrap();
            let t = auslander_ring(&cat).unwrap();
            // oracle: sum of pairwise Hom dimensions
            let us = cat.modules();
            let total: usize = us.iter().flat_map(|x| us.iter().map(move |y| hom_dim(x, y).unwrap())).sum();
            assert_eq!(t.algebra.dim(), total);
            assert_eq!(t.algebra.dim(), expected);
            let f = t.algebra.field();
            let mut sum = vec![0u8; t.algebra.dim()];
            for e in &t.epsilons {
                assert!(t.algebra.is_idempotent(e));
                for (x, &y) in sum.iter_mut().zip(e) {
                    *x = f.add(*x, y);
                }
            }
            assert_eq!(sum, t.algebra.unit());
        }
    }

    #[test]
    fn incomplete_catalog_is_rejected() {
        let (_, p) = setup(builtin::u2(), Side::Left);
        let mut cat = enumerate_indecomposables(&p, EnumerateOptions::default()).unwrap();
        cat.complete = false;
        assert!(matches!(auslander_ring(&cat), Err(Error::IncompleteCatalog)));
    }

    #[test]
    fn morita_dual_of_truncated_cubic() {
        let a = Algebra::new(builtin::u3());
        let md = morita_dual_data(&a, Side::Left).unwrap();
        assert_eq!(md.q.dim(), 3);
        assert_eq!(md.s.dim(), 3);
        assert!(md.s.is_commutative());
        let d = md.dualize(&Module::regular(&a, Side::Left)).unwrap();
        assert_eq!(d.dim(), 3);
    }

    #[test]
    fn morita_dual_of_example_left() {
        let a = Algebra::new(builtin::ex61());
        let md = morita_dual_data(&a, Side::Left).unwrap();
        assert_eq!(md.q.dim(), 5);
        assert_eq!(md.s.dim(), 5);
        let mut dims: Vec<usize> = md.injectives.iter().map(Module::dim).collect();
        dims.sort();
        assert_eq!(dims, vec![1, 1, 3]);
    }

    #[test]
    fn compositions_count() {
        // l in N^3 with 1 <= |l| <= 2: 3 + 6
        assert_eq!(compositions(3, 2).len(), 9);
    }
}
