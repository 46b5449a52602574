//! Krull-Schmidt decompositions, isomorphism witnesses and the effect of
//! the endomorphism ordering.
//!
//! ```text
//! cargo run --example decompose
//! ```

use kothe::decompose::Order;
use kothe::io::builtin_module;
use kothe::module::is_isomorphic;
use kothe::{builtin, decompose, decompose_with, Algebra, DecomposeOptions, Module, Side};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> kothe::Result<()> {
    let a = Algebra::new(builtin::ex61());

    let r = Module::regular(&a, Side::Right);
    let dims: Vec<(usize, usize)> = decompose(&r)?.iter().map(|(m, k)| (m.dim(), *k)).collect();
    println!("ex61 right regular module: (dim, multiplicity) {dims:?}");

    for (x, y) in [("e22R", "e12R"), ("e33R", "e13R"), ("e12R", "e13R")] {
        let iso = is_isomorphic(&builtin_module(&a, x)?, &builtin_module(&a, y)?)?;
        println!("{x} ~ {y}: {}", iso.is_some());
    }

    // A seeded quotient of R + R, decomposed under both orderings.
    let rr = Module::direct_sum(&[&r, &r])?;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let v: Vec<u8> = (0..rr.dim()).map(|_| rng.gen_range(0..2)).collect();
    let m = rr.quotient(&rr.spin(&[v]));
    let mut seen = Vec::new();
    for order in [Order::Forward, Order::Reverse] {
        let dec = decompose_with(
            &m,
            DecomposeOptions {
                order,
                ..DecomposeOptions::default()
            },
        )?;
        let mut dims: Vec<usize> = dec.parts.iter().map(|p| p.module.dim()).collect();
        dims.sort_unstable();
        let witness_ok = dec.direct_sum()?.is_homomorphism(&m, &dec.witness) && dec.witness.rank() == m.dim();
        println!("dim {} quotient, {order:?}: summand dims {dims:?}, witness ok {witness_ok}", m.dim());
        seen.push(dims);
    }
    assert_eq!(seen[0], seen[1]);
    Ok(())
}
