//! The `kothe` command line.
//!
//! Exit codes: 0 success (a verdict was computed, whatever its value),
//! 2 input error, 3 budget exceeded or incomplete catalog, 4 internal
//! invariant violation, including a failed theorem cross-check.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::algebra::{Algebra, AlgebraSpec, Side};
use crate::builtin;
use crate::classify::{classify_both, classify_ring, Check, ClassifyOptions, RingReport};
use crate::decompose::{decompose_with, DecomposeOptions};
use crate::enumerate::{enumerate_cyclic_indecomposables, enumerate_indecomposables, morita_dual_data, Catalog, EnumerateOptions};
use crate::error::{Error, Result};
use crate::io::{self, to_json};
use crate::lattice::{submodule_lattice, Budget, Predicate};
use crate::module::{hom_dim, Module, DEFAULT_SEED};
use crate::profile::ProjectiveProfile;

#[derive(Parser, Debug)]
#[command(name = "kothe", version, about = "Module theory over finite-dimensional algebras over GF(p)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Algebra: a builtin id or a path to an algebra file. Also the default
    /// algebra for bare module names (ex61 if omitted).
    #[arg(long, global = true)]
    algebra: Option<String>,
    #[arg(long, global = true, default_value_t = Side::Right)]
    side: Side,
    /// Length bound L for catalogs.
    #[arg(long, global = true, default_value_t = 3)]
    max_length: usize,
    /// Seed for the isomorphism and splitting samplers.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Cap on submodule-lattice size.
    #[arg(long, global = true)]
    budget: Option<usize>,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check an algebra or module file.
    Validate {
        #[arg(long)]
        module: Option<String>,
    },
    /// Jacobson radical of the algebra.
    Radical,
    /// Socle of a module and its simple profile.
    Socle {
        #[arg(long)]
        module: String,
    },
    /// Top of a module and its simple profile.
    Top {
        #[arg(long)]
        module: String,
    },
    /// Krull-Schmidt decomposition.
    Decompose {
        #[arg(long)]
        module: String,
    },
    /// Brute-force submodule lattice.
    Lattice {
        #[arg(long)]
        module: String,
    },
    /// Decide a lattice predicate.
    Predicate {
        #[arg(long)]
        module: String,
        #[arg(long)]
        which: Predicate,
    },
    /// Catalog of indecomposables up to the length bound.
    Enumerate {
        /// Only cyclic indecomposables (quotients of the regular module).
        #[arg(long)]
        cyclic: bool,
        #[arg(long)]
        dim_cap: Option<usize>,
        /// Write the catalog as module files plus a manifest.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Ring-level verdicts.
    Classify {
        #[arg(long)]
        dim_cap: Option<usize>,
        /// Classify both sides.
        #[arg(long)]
        both: bool,
    },
    /// Consistency cross-checks on the catalogs; exit 4 on any failure.
    Crosscheck {
        #[arg(long)]
        dim_cap: Option<usize>,
    },
    /// Socle/top identities for Hom(-, Q) and the k-dual.
    DualityCheck,
    /// Print a builtin algebra as an algebra file, or list the builtins.
    Example { name: Option<String> },
}

struct Ctx {
    algebra: Option<String>,
    side: Side,
    max_length: usize,
    seed: u64,
    budget: Budget,
    json: bool,
}

impl Ctx {
    fn algebra_ref(&self) -> Result<&str> {
        self.algebra
            .as_deref()
            .ok_or_else(|| Error::Malformed("this command needs --algebra".into()))
    }

    fn algebra(&self) -> Result<Algebra> {
        io::resolve_algebra(self.algebra_ref()?, None)
    }

    fn module(&self, reference: &str) -> Result<Module> {
        io::resolve_module(reference, self.algebra.as_deref().unwrap_or("ex61"))
    }

    fn classify_options(&self, dim_cap: Option<usize>) -> ClassifyOptions {
        ClassifyOptions {
            length_bound: self.max_length,
            dim_cap,
            budget: self.budget,
            seed: self.seed,
        }
    }
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let (code, out, err) = execute(argv);
    print!("{out}");
    eprint!("{err}");
    code
}

/// Like [`run`], returning `(exit code, stdout, stderr)`.
pub fn execute<I, T>(argv: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 { (0, text, String::new()) } else { (2, String::new(), text) };
        }
    };
    let ctx = Ctx {
        algebra: cli.algebra,
        side: cli.side,
        max_length: cli.max_length,
        seed: cli.seed.unwrap_or(DEFAULT_SEED),
        budget: match cli.budget {
            Some(cap) => Budget {
                lattice_cap: cap,
                ..Budget::default()
            },
            None => Budget::default(),
        },
        json: cli.json,
    };
    match dispatch(&ctx, cli.command) {
        Ok((code, out)) => (code, out, String::new()),
        Err(e) => (e.exit_code(), String::new(), format!("error: {e}\n")),
    }
}

fn element(spec: &AlgebraSpec, v: &[u8]) -> String {
    let terms: Vec<String> = v
        .iter()
        .zip(spec.basis_names())
        .filter(|(c, _)| **c != 0)
        .map(|(&c, n)| if c == 1 { n.clone() } else { format!("{c}*{n}") })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn tuple(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(usize::to_string).collect();
    format!("({})", parts.join(","))
}

fn dispatch(ctx: &Ctx, command: Command) -> Result<(i32, String)> {
    let mut out = String::new();
    let mut code = 0;
    match command {
        Command::Validate { module } => {
            if let Some(r) = module {
                let m = ctx.module(&r)?;
                if ctx.json {
                    out = to_json(&json!({"kind": "module", "side": m.side(), "dim": m.dim(), "valid": true}));
                } else {
                    writeln!(out, "valid {} module of dim {}", m.side(), m.dim()).unwrap();
                }
            } else {
                let a = ctx.algebra()?;
                if ctx.json {
                    out = to_json(&json!({"kind": "algebra", "field_order": a.field().order(), "dim": a.dim(), "valid": true}));
                } else {
                    writeln!(out, "valid algebra of dim {} over GF({})", a.dim(), a.field().order()).unwrap();
                }
            }
        }
        Command::Radical => {
            let a = ctx.algebra()?;
            let r = a.radical();
            let basis = r.radical.vectors();
            if ctx.json {
                out = to_json(&json!({
                    "dim": r.radical.dim(),
                    "basis": basis,
                    "nilpotency_index": r.nilpotency_index,
                    "semisimple_dim": r.semisimple_dim,
                }));
            } else {
                let names: Vec<String> = basis.iter().map(|v| element(&a, v)).collect();
                writeln!(out, "radical dim {}: {}", r.radical.dim(), names.join(", ")).unwrap();
                writeln!(out, "nilpotency index {}", r.nilpotency_index).unwrap();
                writeln!(out, "dim A/J = {}", r.semisimple_dim).unwrap();
            }
        }
        Command::Socle { module } => out = layer(ctx, &module, true)?,
        Command::Top { module } => out = layer(ctx, &module, false)?,
        Command::Decompose { module } => {
            let m = ctx.module(&module)?;
            let dec = decompose_with(
                &m,
                DecomposeOptions {
                    seed: ctx.seed,
                    ..DecomposeOptions::default()
                },
            )?;
            let mut classes: Vec<(usize, usize)> = dec.classes.iter().map(|(c, k)| (c.dim(), *k)).collect();
            classes.sort_by(|x, y| y.cmp(x));
            if ctx.json {
                let list: Vec<_> = classes.iter().map(|(d, k)| json!({"dim": d, "multiplicity": k})).collect();
                out = to_json(&json!({"dim": m.dim(), "summands": dec.parts.len(), "classes": list}));
            } else {
                writeln!(out, "{} indecomposable summands", dec.parts.len()).unwrap();
                for (d, k) in classes {
                    writeln!(out, "  dim {d} x{k}").unwrap();
                }
            }
        }
        Command::Lattice { module } => {
            let m = ctx.module(&module)?;
            let lat = submodule_lattice(&m, ctx.budget)?;
            let mut by_dim = vec![0usize; m.dim() + 1];
            for s in lat.members() {
                by_dim[s.dim()] += 1;
            }
            if ctx.json {
                let members: Vec<Vec<Vec<u8>>> = lat.members().iter().map(|s| s.vectors()).collect();
                out = to_json(&json!({
                    "size": lat.len(),
                    "by_dim": by_dim,
                    "atoms": lat.atoms().len(),
                    "coatoms": lat.coatoms().len(),
                    "members": members,
                }));
            } else {
                writeln!(out, "{} submodules", lat.len()).unwrap();
                for (d, k) in by_dim.iter().enumerate() {
                    writeln!(out, "  dim {d}: {k}").unwrap();
                }
                writeln!(out, "{} atoms, {} coatoms", lat.atoms().len(), lat.coatoms().len()).unwrap();
            }
        }
        Command::Predicate { module, which } => {
            let m = ctx.module(&module)?;
            let holds = submodule_lattice(&m, ctx.budget)?.holds(which)?;
            if ctx.json {
                out = to_json(&json!({"predicate": which, "holds": holds}));
            } else {
                writeln!(out, "{holds}").unwrap();
            }
        }
        Command::Enumerate { cyclic, dim_cap, out: dir } => {
            let a = ctx.algebra()?;
            let profile = ProjectiveProfile::new(&a, ctx.side)?;
            let catalog = if cyclic {
                enumerate_cyclic_indecomposables(&profile, &a, ctx.budget)?
            } else {
                enumerate_indecomposables(
                    &profile,
                    EnumerateOptions {
                        length_bound: ctx.max_length,
                        dim_cap,
                        budget: ctx.budget,
                    },
                )?
            };
            if let Some(dir) = dir {
                io::write_catalog(&dir, &catalog, ctx.algebra_ref()?)?;
            }
            out = catalog_summary(ctx, &catalog);
        }
        Command::Classify { dim_cap, both } => {
            let a = ctx.algebra()?;
            let id = ctx.algebra_ref()?;
            let opts = ctx.classify_options(dim_cap);
            let reports = if both {
                let (l, r) = classify_both(&a, id, &opts)?;
                vec![l, r]
            } else {
                vec![classify_ring(&a, id, ctx.side, &opts)?]
            };
            if ctx.json {
                out = if both { to_json(&reports) } else { to_json(&reports[0]) };
            } else {
                for r in &reports {
                    out += &report_text(r);
                }
            }
        }
        Command::Crosscheck { dim_cap } => {
            let a = ctx.algebra()?;
            let report = classify_ring(&a, ctx.algebra_ref()?, ctx.side, &ctx.classify_options(dim_cap))?;
            if !report.complete {
                return Err(Error::IncompleteCatalog);
            }
            if !report.all_checks_pass() {
                code = 4;
            }
            out = checks_text(ctx, &report.consistency);
        }
        Command::DualityCheck => {
            let checks = duality_checks(ctx)?;
            if checks.iter().any(|c| !c.passed) {
                code = 4;
            }
            out = checks_text(ctx, &checks);
        }
        Command::Example { name } => match name {
            Some(n) => out = io::algebra_to_string(&builtin::by_name(&n)?),
            None => {
                for (n, spec) in builtin::all() {
                    writeln!(out, "{n:6} dim {} over GF({})", spec.dim(), spec.field().order()).unwrap();
                }
            }
        },
    }
    Ok((code, out))
}

fn layer(ctx: &Ctx, reference: &str, socle: bool) -> Result<String> {
    let m = ctx.module(reference)?;
    let profile = ProjectiveProfile::new(m.algebra(), m.side())?;
    let (sub, p) = if socle {
        (m.socle(), profile.socle_profile(&m)?)
    } else {
        let r = m.radical();
        (r, profile.top_profile(&m)?)
    };
    let what = if socle { "socle" } else { "top" };
    let dim = if socle { sub.dim() } else { m.dim() - sub.dim() };
    Ok(if ctx.json {
        let key = if socle { "basis" } else { "radical_basis" };
        to_json(&json!({"layer": what, "dim": dim, "profile": p.multiplicities, key: sub.vectors()}))
    } else {
        format!("{what} dim {dim}, profile {}\n", tuple(&p.multiplicities))
    })
}

fn catalog_summary(ctx: &Ctx, catalog: &Catalog) -> String {
    if ctx.json {
        let classes: Vec<_> = catalog.classes.iter().map(|c| &c.fingerprint).collect();
        return to_json(&json!({
            "side": catalog.side,
            "length_bound": catalog.length_bound,
            "dim_cap": catalog.dim_cap,
            "complete": catalog.complete,
            "classes": classes,
        }));
    }
    let mut out = String::new();
    let bound = match catalog.length_bound {
        Some(l) => format!("up to length {l}"),
        None => "cyclic".into(),
    };
    let status = if catalog.complete { "complete" } else { "incomplete" };
    writeln!(out, "{} classes ({bound}, {status})", catalog.classes.len()).unwrap();
    for (i, c) in catalog.classes.iter().enumerate() {
        writeln!(
            out,
            "  {:>3}  dim {:>2}  socle {}  top {}",
            i + 1,
            c.module.dim(),
            tuple(&c.fingerprint.socle),
            tuple(&c.fingerprint.top)
        )
        .unwrap();
    }
    out
}

fn report_text(r: &RingReport) -> String {
    let v = &r.verdicts;
    let mut out = String::new();
    let status = if r.complete { "complete" } else { "incomplete" };
    writeln!(out, "{} {} side, {} classes up to length {} ({status})", r.algebra, r.side, r.classes.len(), r.length_bound).unwrap();
    writeln!(out, "  co_kothe {}  strongly {}  very_strongly {}", v.co_kothe, v.strongly_co_kothe, v.very_strongly_co_kothe).unwrap();
    writeln!(
        out,
        "  kothe_side {}  strongly {}  very_strongly {}",
        v.kothe_side, v.strongly_kothe_side, v.very_strongly_kothe_side
    )
    .unwrap();
    writeln!(out, "  left_serial {}  right_serial {}  artinian_serial {}", v.left_serial, v.right_serial, v.artinian_serial).unwrap();
    match &r.auslander {
        Some(t) => writeln!(
            out,
            "  auslander dim {}: left_qf2 {}  right_co_qf2 {}  generalized {}/{}",
            t.dim, t.left_qf2, t.right_co_qf2, t.generalized_left_qf2, t.generalized_right_co_qf2
        )
        .unwrap(),
        None => writeln!(out, "  auslander ring not built").unwrap(),
    }
    let failed: Vec<&str> = r.consistency.iter().filter(|c| !c.passed).map(|c| c.id.as_str()).collect();
    if failed.is_empty() {
        writeln!(out, "  all {} cross-checks pass", r.consistency.len()).unwrap();
    } else {
        writeln!(out, "  failed cross-checks: {}", failed.join(", ")).unwrap();
    }
    out
}

fn checks_text(ctx: &Ctx, checks: &[Check]) -> String {
    if ctx.json {
        return to_json(&checks);
    }
    let mut out = String::new();
    for c in checks {
        writeln!(out, "{} {}: {}", if c.passed { "pass" } else { "FAIL" }, c.id, c.detail).unwrap();
    }
    out
}

fn duality_checks(ctx: &Ctx) -> Result<Vec<Check>> {
    let a = ctx.algebra()?;
    let profile = ProjectiveProfile::new(&a, ctx.side)?;
    let catalog = enumerate_indecomposables(
        &profile,
        EnumerateOptions {
            length_bound: ctx.max_length,
            dim_cap: None,
            budget: ctx.budget,
        },
    )?;
    let dual = morita_dual_data(&a, ctx.side)?;
    let mut checks = Vec::new();
    for (i, c) in catalog.classes.iter().enumerate() {
        let x = &c.module;
        let hx = dual.dualize(x)?;
        let soc_hx = hx.socle().dim();
        let top_hx = hx.dim() - hx.radical().dim();
        let hom_top = hom_dim(&x.top(), &dual.q)?;
        let hom_soc = hom_dim(&x.socle_module(), &dual.q)?;
        checks.push(Check {
            id: format!("class-{}-socle", i + 1),
            passed: soc_hx == hom_top,
            detail: format!("dim soc Hom(X,Q) = {soc_hx}, dim Hom(top X, Q) = {hom_top}"),
        });
        checks.push(Check {
            id: format!("class-{}-top", i + 1),
            passed: top_hx == hom_soc,
            detail: format!("dim top Hom(X,Q) = {top_hx}, dim Hom(soc X, Q) = {hom_soc}"),
        });
        let kd = x.k_dual();
        let top_x = x.dim() - x.radical().dim();
        checks.push(Check {
            id: format!("class-{}-k-dual", i + 1),
            passed: kd.socle().dim() == top_x,
            detail: format!("dim soc D(X) = {}, dim top X = {top_x}", kd.socle().dim()),
        });
    }
    Ok(checks)
}
