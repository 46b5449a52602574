//! Jacobson radicals of the builtin algebras and a few generated ones.
//!
//! ```text
//! cargo run --example radical
//! ```

use kothe::builtin;
use kothe::{Algebra, AlgebraSpec, PrimeField};

fn show(name: &str, spec: AlgebraSpec) {
    let a = Algebra::new(spec);
    let r = a.radical();
    let basis: Vec<String> = r
        .radical
        .vectors()
        .iter()
        .map(|v| {
            let terms: Vec<&str> = v
                .iter()
                .zip(a.basis_names())
                .filter(|(c, _)| **c != 0)
                .map(|(_, n)| n.as_str())
                .collect();
            terms.join("+")
        })
        .collect();
    println!(
        "{name:12} dim {:2}  J = <{}>  J^{} = 0  dim A/J = {}",
        a.dim(),
        basis.join(", "),
        r.nilpotency_index,
        r.semisimple_dim
    );
}

fn main() {
    for (name, spec) in builtin::all() {
        show(name, spec);
    }
    let gf3 = PrimeField::new(3).unwrap();
    show("GF(3)[x]/x^4", builtin::truncated_polynomial(gf3, 4));
    show("M2(GF(3))", builtin::full_matrix(gf3, 2));
    show("u2 (x) t2gf2", builtin::tensor(&builtin::u2(), &builtin::t2gf2()));
}
