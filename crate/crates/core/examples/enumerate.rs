//! Catalogs of indecomposable modules: the cyclic ones, and all of them up
//! to a bound on the number of projective summands in the cover.
//!
//! ```text
//! cargo run --example enumerate [algebra] [max-length]
//! ```

use kothe::enumerate::{enumerate_cyclic_indecomposables, enumerate_indecomposables, Catalog, EnumerateOptions};
use kothe::lattice::Budget;
use kothe::profile::ProjectiveProfile;
use kothe::{builtin, Algebra, Side};

fn print(title: &str, c: &Catalog) {
    println!("{title}: {} classes, complete {}", c.classes.len(), c.complete);
    for (i, e) in c.classes.iter().enumerate() {
        let f = &e.fingerprint;
        println!("  {:2}. dim {}  socle {:?}  top {:?}", i + 1, f.dim, f.socle, f.top);
    }
}

fn main() -> kothe::Result<()> {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "ex61".into());
    let length_bound = args.next().and_then(|s| s.parse().ok()).unwrap_or(3);
    let a = Algebra::new(builtin::by_name(&name)?);
    for side in [Side::Right, Side::Left] {
        let profile = ProjectiveProfile::new(&a, side)?;
        print(
            &format!("{name} {side} cyclic"),
            &enumerate_cyclic_indecomposables(&profile, &a, Budget::default())?,
        );
        let opts = EnumerateOptions {
            length_bound,
            dim_cap: None,
            budget: Budget::default(),
        };
        print(
            &format!("{name} {side} up to length {length_bound}"),
            &enumerate_indecomposables(&profile, opts)?,
        );
    }
    Ok(())
}
