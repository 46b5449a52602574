//! Algebra and module files, catalog directories, and the command line
//! driven in-process.
//!
//! ```text
//! cargo run --example file_formats
//! ```

use kothe::enumerate::enumerate_cyclic_indecomposables;
use kothe::io::{self, builtin_module};
use kothe::lattice::Budget;
use kothe::profile::ProjectiveProfile;
use kothe::{builtin, cli, Algebra, Side};

fn main() -> kothe::Result<()> {
    let dir = std::env::temp_dir().join("kothe-file-formats");
    std::fs::create_dir_all(&dir)?;

    // An algebra file, read back and checked.
    let text = io::algebra_to_string(&builtin::t2gf2());
    println!("t2gf2 as an algebra file:\n{text}");
    let alg_path = dir.join("t2.json");
    std::fs::write(&alg_path, &text)?;
    assert_eq!(io::parse_algebra(&alg_path)?, builtin::t2gf2());

    // A module file whose algebra reference is the file next to it.
    let a = Algebra::new(builtin::t2gf2());
    let m = builtin_module(&a, "e11R")?;
    let mod_path = dir.join("e11R.json");
    std::fs::write(&mod_path, io::module_to_string(&m, "t2.json"))?;
    assert_eq!(io::parse_module(&mod_path)?, m);

    // A catalog directory with a manifest.
    let ex61 = Algebra::new(builtin::ex61());
    let profile = ProjectiveProfile::new(&ex61, Side::Right)?;
    let catalog = enumerate_cyclic_indecomposables(&profile, &ex61, Budget::default())?;
    let cat_dir = dir.join("ex61-cyclic");
    io::write_catalog(&cat_dir, &catalog, "ex61")?;
    println!("catalog written to {} with dims {:?}", cat_dir.display(), io::read_catalog(&cat_dir)?.dims());

    // Parse errors carry a position.
    if let Err(e) = io::parse_algebra_str("{\"format_version\": 1,\n  \"dim\": }") {
        println!("{e}");
    }

    let module = mod_path.to_string_lossy().into_owned();
    for args in [vec!["decompose", "--module", &module], vec!["predicate", "--module", "e11R", "--which", "uniform"]] {
        let (code, out, err) = cli::execute(std::iter::once("kothe").chain(args.iter().copied()));
        println!("$ kothe {}\n{out}{err}(exit {code})", args.join(" "));
    }
    Ok(())
}
