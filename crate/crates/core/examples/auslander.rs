//! Auslander rings `T = End(U_1 + ... + U_n)` of complete catalogs and
//! their QF-2 flags.
//!
//! ```text
//! cargo run --example auslander
//! ```

use kothe::classify::{qf2_flags, socle_predicates, top_predicates};
use kothe::enumerate::{auslander_ring, enumerate_indecomposables, EnumerateOptions};
use kothe::profile::ProjectiveProfile;
use kothe::{builtin, Algebra, Side};

fn main() -> kothe::Result<()> {
    for (name, side) in [("t2gf2", Side::Right), ("u3", Side::Right), ("ex61", Side::Right), ("ex61", Side::Left)] {
        let a = Algebra::new(builtin::by_name(name)?);
        let profile = ProjectiveProfile::new(&a, side)?;
        let catalog = enumerate_indecomposables(&profile, EnumerateOptions::default())?;
        let t = auslander_ring(&catalog)?;
        let flags = qf2_flags(&t)?;
        println!(
            "{name} {side}: {} classes, dim T = {}, J(T) dim {}",
            catalog.classes.len(),
            t.algebra.dim(),
            t.algebra.radical().radical.dim()
        );
        for (i, (u, p)) in catalog.classes.iter().zip(&t.left_projectives).enumerate() {
            let soc = socle_predicates(&t.left_profile, p)?;
            let top = top_predicates(&t.right_profile, &t.right_projectives[i])?;
            println!(
                "  U_{} dim {}  T e_{} dim {:2} simple socle {}  e_{} T simple top {}",
                i + 1,
                u.module.dim(),
                i + 1,
                p.dim(),
                soc.simple,
                i + 1,
                top.simple
            );
        }
        println!(
            "  left QF-2 {}  right co-QF-2 {}  generalized {}/{}",
            flags.left_qf2, flags.right_co_qf2, flags.generalized_left_qf2, flags.generalized_right_co_qf2
        );
    }
    Ok(())
}
