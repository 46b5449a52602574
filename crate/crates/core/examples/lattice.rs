//! Submodule lattices and the predicates read off them.
//!
//! ```text
//! cargo run --example lattice
//! ```

use kothe::io::builtin_module;
use kothe::lattice::{submodule_lattice, Budget, Predicate};
use kothe::{builtin, Algebra, Module, Side};

fn report(name: &str, m: &Module) -> kothe::Result<()> {
    let lat = submodule_lattice(m, Budget::default())?;
    let flags: Vec<String> = Predicate::ALL
        .iter()
        .map(|&p| Ok(format!("{p}={}", lat.holds(p)?)))
        .collect::<kothe::Result<_>>()?;
    println!("{name:14} dim {}  {:3} submodules  {}", m.dim(), lat.len(), flags.join(" "));
    Ok(())
}

fn main() -> kothe::Result<()> {
    let ex61 = Algebra::new(builtin::ex61());
    for name in ["e11R", "J-right", "Re11", "regular-right", "regular-left"] {
        report(&format!("ex61 {name}"), &builtin_module(&ex61, name)?)?;
    }
    for name in ["u3", "v2", "t2gf2", "ss2"] {
        let a = Algebra::new(builtin::by_name(name)?);
        report(&format!("{name} regular"), &Module::regular(&a, Side::Right))?;
    }
    Ok(())
}
