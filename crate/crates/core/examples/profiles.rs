//! Projective profiles, simple multiplicities of socles and tops,
//! projective covers and injective hulls.
//!
//! ```text
//! cargo run --example profiles
//! ```

use kothe::io::builtin_module;
use kothe::profile::{basic_ring, injective_hull, injective_indecomposables, ProjectiveProfile};
use kothe::{builtin, Algebra, Side};

fn main() -> kothe::Result<()> {
    let a = Algebra::new(builtin::ex61());
    let right = ProjectiveProfile::new(&a, Side::Right)?;
    let left = ProjectiveProfile::new(&a, Side::Left)?;
    for b in &right.blocks {
        println!(
            "P dim {}  x{}  simple dim {}  idempotent {:?}",
            b.projective.dim(),
            b.multiplicity,
            b.simple.dim(),
            b.idempotents[0]
        );
    }

    let injectives = injective_indecomposables(&right, &left)?;
    let dims: Vec<usize> = injectives.iter().map(|e| e.dim()).collect();
    println!("right injective indecomposables: dims {dims:?}");

    for name in ["e11R", "J-right", "Q2", "regular-right"] {
        let m = builtin_module(&a, name)?;
        let soc = right.socle_profile(&m)?;
        let top = right.top_profile(&m)?;
        let (cover, _) = right.projective_cover(&m)?;
        let (hull, embedding) = injective_hull(&right, &injectives, &m)?;
        assert!(m.is_homomorphism(&hull, &embedding));
        println!(
            "{name:14} dim {}  socle {:?}  top {:?}  cover dim {}  hull dim {}",
            m.dim(),
            soc.multiplicities,
            top.multiplicities,
            cover.dim(),
            hull.dim()
        );
    }

    let basic = basic_ring(&Algebra::new(builtin::full_matrix(kothe::PrimeField::GF2, 2)))?;
    println!("basic ring of M2(GF(2)) has dim {}", basic.dim());
    Ok(())
}
