//! Invariants checked on random inputs, plus lattice predicates compared
//! against the set-based oracle in `common`.

mod common;

use common::Oracle;
use kothe::decompose::Order;
use kothe::lattice::{submodule_lattice, Budget, Predicate};
use kothe::module::{hom_dim, is_isomorphic};
use kothe::profile::ProjectiveProfile;
use kothe::{builtin, decompose_with, Algebra, DecomposeOptions, Mat, Module, PrimeField, Side, Subspace};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn field() -> impl Strategy<Value = PrimeField> {
    prop_oneof![Just(2u32), Just(3), Just(5), Just(7)].prop_map(|p| PrimeField::new(p).unwrap())
}

fn matrix(max: usize) -> impl Strategy<Value = Mat> {
    (field(), 1..=max, 1..=max).prop_flat_map(|(f, r, c)| {
        prop::collection::vec(0..f.order() as u8, r * c).prop_map(move |data| Mat::from_vec(f, r, c, data))
    })
}

fn gf2_matrix(max: usize) -> impl Strategy<Value = Mat> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        prop::collection::vec(0..2u8, r * c).prop_map(move |data| Mat::from_vec(PrimeField::GF2, r, c, data))
    })
}

/// Three subspaces of one ambient space.
fn subspaces() -> impl Strategy<Value = (Subspace, Subspace, Subspace)> {
    (field(), 1..=6usize).prop_flat_map(|(f, n)| {
        let one = move || {
            prop::collection::vec(prop::collection::vec(0..f.order() as u8, n), 0..=n)
                .prop_map(move |vs| Subspace::from_vectors(f, n, &vs))
        };
        (one(), one(), one())
    })
}

/// A quotient of a sum of at most three indecomposable projectives by the
/// submodule spun from one or two random vectors; `None` if too big.
fn random_module(seed: u64, names: &[&str], max_dim: usize) -> Option<Module> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = Algebra::new(builtin::by_name(names[rng.gen_range(0..names.len())]).unwrap());
    let side = if rng.gen() { Side::Left } else { Side::Right };
    let profile = ProjectiveProfile::new(&a, side).unwrap();
    let ps = profile.projectives();
    let parts: Vec<&Module> = (0..rng.gen_range(1..=3)).map(|_| ps[rng.gen_range(0..ps.len())]).collect();
    let p = Module::direct_sum(&parts).unwrap();
    let vs: Vec<Vec<u8>> = (0..rng.gen_range(0..=2))
        .map(|_| (0..p.dim()).map(|_| rng.gen_range(0..2)).collect())
        .collect();
    let m = p.quotient(&p.spin(&vs));
    (m.dim() >= 1 && m.dim() <= max_dim).then_some(m)
}

const ALL: [&str; 6] = ["ex61", "t2gf2", "u2", "u3", "v2", "ss2"];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rref_is_idempotent(a in matrix(7)) {
        let e = a.rref();
        let again = e.reduced.rref();
        prop_assert_eq!(&again.reduced, &e.reduced);
        prop_assert_eq!(again.pivots, e.pivots);
    }

    #[test]
    fn rank_nullity(a in matrix(7)) {
        prop_assert_eq!(a.rank() + a.kernel().dim(), a.cols());
        for v in a.kernel().vectors() {
            prop_assert!(a.mul_vec(&v).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn packed_gf2_matches_dense(a in gf2_matrix(70)) {
        let packed = a.rref();
        let dense = a.rref_dense();
        prop_assert_eq!(packed.reduced, dense.reduced);
        prop_assert_eq!(packed.pivots, dense.pivots);
    }

    #[test]
    fn dimension_formula((u, v, _) in subspaces()) {
        let s = u.sum(&v).unwrap();
        let i = u.intersection(&v).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), u.dim() + v.dim());
        prop_assert!(s.contains(&u).unwrap() && u.contains(&i).unwrap() && v.contains(&i).unwrap());
    }

    #[test]
    fn modular_law((a, b, c) in subspaces()) {
        // Force a <= c.
        let a = a.intersection(&c).unwrap();
        let left = a.sum(&b.intersection(&c).unwrap()).unwrap();
        let right = a.sum(&b).unwrap().intersection(&c).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn hom_is_additive(s1 in any::<u64>(), s2 in any::<u64>(), s3 in any::<u64>()) {
        let names = ["ex61"];
        let (Some(m), Some(n), Some(x)) = (random_module(s1, &names, 4), random_module(s2, &names, 4), random_module(s3, &names, 4)) else {
            return Ok(());
        };
        if m.side() != n.side() || n.side() != x.side() {
            return Ok(());
        }
        let mn = Module::direct_sum(&[&m, &n]).unwrap();
        prop_assert_eq!(hom_dim(&mn, &x).unwrap(), hom_dim(&m, &x).unwrap() + hom_dim(&n, &x).unwrap());
        prop_assert_eq!(hom_dim(&x, &mn).unwrap(), hom_dim(&x, &m).unwrap() + hom_dim(&x, &n).unwrap());
    }

    #[test]
    fn vector_space_dual_swaps_socle_and_top(seed in any::<u64>()) {
        let Some(m) = random_module(seed, &ALL, 6) else { return Ok(()) };
        let d = m.k_dual();
        prop_assert_eq!(d.side(), m.side().opposite());
        prop_assert_eq!(d.socle().dim(), m.dim() - m.radical().dim());
        prop_assert_eq!(d.dim() - d.radical().dim(), m.socle().dim());
        prop_assert_eq!(d.k_dual(), m);
    }

    #[test]
    fn socle_is_essential(seed in any::<u64>()) {
        let Some(m) = random_module(seed, &ALL, 5) else { return Ok(()) };
        let lattice = submodule_lattice(&m, Budget::default()).unwrap();
        prop_assert!(lattice.is_essential(&m.socle()).unwrap());
        prop_assert_eq!(lattice.socle(), m.socle());
        prop_assert_eq!(lattice.radical(), m.radical());
    }

    #[test]
    fn krull_schmidt_is_order_independent(seed in any::<u64>()) {
        let Some(m) = random_module(seed, &ALL, 6) else { return Ok(()) };
        let run = |order| decompose_with(&m, DecomposeOptions { order, ..DecomposeOptions::default() }).unwrap();
        let (f, r) = (run(Order::Forward), run(Order::Reverse));
        prop_assert_eq!(f.parts.len(), r.parts.len());
        for (x, k) in &f.classes {
            let matched: Vec<usize> = r.classes.iter().filter(|(y, _)| is_isomorphic(x, y).unwrap().is_some()).map(|(_, j)| *j).collect();
            prop_assert_eq!(matched, vec![*k]);
        }
        for dec in [&f, &r] {
            prop_assert!(dec.direct_sum().unwrap().is_homomorphism(&m, &dec.witness));
            prop_assert_eq!(dec.witness.rank(), m.dim());
        }
    }

    #[test]
    fn conjugate_modules_are_isomorphic(seed in any::<u64>()) {
        let Some(m) = random_module(seed, &ALL, 6) else { return Ok(()) };
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xabcd);
        let p = loop {
            let data = (0..m.dim() * m.dim()).map(|_| rng.gen_range(0..2)).collect();
            let p = Mat::from_vec(m.field(), m.dim(), m.dim(), data);
            if p.rank() == m.dim() {
                break p;
            }
        };
        let n = m.conjugate(&p).unwrap();
        let w = is_isomorphic(&m, &n).unwrap().expect("conjugates are isomorphic");
        prop_assert!(m.is_homomorphism(&n, &w));
        prop_assert_eq!(w.rank(), m.dim());
    }

    #[test]
    fn lattice_matches_oracle_on_random_modules(seed in any::<u64>()) {
        let Some(m) = random_module(seed, &ALL, 4) else { return Ok(()) };
        check_against_oracle(&m);
    }
}

fn check_against_oracle(m: &Module) {
    let o = Oracle::new(m);
    let lat = submodule_lattice(m, Budget::default()).unwrap();
    assert_eq!(lat.len(), o.members.len());
    for s in &o.members {
        assert!(lat.contains(&o.to_subspace(s)));
    }
    let holds = |p| lat.holds(p).unwrap();
    assert_eq!(holds(Predicate::Uniform), o.uniform(), "uniform");
    assert_eq!(holds(Predicate::CoCyclic), o.uniform(), "co-cyclic");
    assert_eq!(holds(Predicate::SquareFree), o.square_free(), "square-free");
    assert_eq!(holds(Predicate::Distributive), o.distributive(), "distributive");
    assert_eq!(holds(Predicate::Uniserial), o.uniserial(), "uniserial");
    assert_eq!(holds(Predicate::Extending), o.extending(), "extending");
    assert_eq!(holds(Predicate::Cyclic), o.cyclic(), "cyclic");
    assert_eq!(holds(Predicate::CyclicSocle), o.cyclic_socle(), "cyclic socle");
    assert_eq!(m.socle(), o.to_subspace(&o.socle()));
}

#[test]
fn lattice_matches_oracle_on_small_subquotients() {
    let mut count = 0;
    for (_, a) in common::builtin_algebras() {
        for m in common::subquotients(&a, 3) {
            check_against_oracle(&m);
            count += 1;
        }
    }
    assert!(count > 20, "only {count} modules");
}
