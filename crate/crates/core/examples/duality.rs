//! The minimal cogenerator `Q`, its endomorphism ring `S`, and the socle/top
//! exchange under `Hom(-, Q)` and the vector-space dual.
//!
//! ```text
//! cargo run --example duality [algebra] [left|right]
//! ```

use kothe::enumerate::{enumerate_indecomposables, morita_dual_data, EnumerateOptions};
use kothe::module::hom_dim;
use kothe::profile::ProjectiveProfile;
use kothe::{builtin, Algebra, Side};

fn main() -> kothe::Result<()> {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "ex61".into());
    let side: Side = args.next().map(|s| s.parse()).transpose()?.unwrap_or(Side::Left);
    let a = Algebra::new(builtin::by_name(&name)?);
    let dual = morita_dual_data(&a, side)?;
    let dims: Vec<usize> = dual.injectives.iter().map(|e| e.dim()).collect();
    println!("{name} {side}: injective indecomposables {dims:?}, dim Q = {}, dim S = {}", dual.q.dim(), dual.s.dim());

    let profile = ProjectiveProfile::new(&a, side)?;
    let catalog = enumerate_indecomposables(&profile, EnumerateOptions::default())?;
    for (i, c) in catalog.classes.iter().enumerate() {
        let x = &c.module;
        let hx = dual.dualize(x)?;
        println!(
            "  X_{:<2} dim {}  Hom(X,Q) dim {}  soc {} = Hom(top X,Q) {}  top {} = Hom(soc X,Q) {}  soc D(X) {} = top X {}",
            i + 1,
            x.dim(),
            hx.dim(),
            hx.socle().dim(),
            hom_dim(&x.top(), &dual.q)?,
            hx.dim() - hx.radical().dim(),
            hom_dim(&x.socle_module(), &dual.q)?,
            x.k_dual().socle().dim(),
            x.top().dim()
        );
    }
    Ok(())
}
