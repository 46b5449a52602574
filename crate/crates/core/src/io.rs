//! JSON file formats for algebras, modules and catalogs, plus the named
//! builtin modules accepted wherever a module file is.
//!
//! Numbers are plain non-negative integers, reduced mod p on load.

use std::fs;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{Algebra, AlgebraSpec, Side};
use crate::builtin;
use crate::enumerate::{enumerate_cyclic_indecomposables, Catalog, CatalogEntry, Fingerprint};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::lattice::Budget;
use crate::matrix::Mat;
use crate::module::Module;
use crate::profile::ProjectiveProfile;

pub const FILE_FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub format_version: u32,
    pub field_order: u32,
    pub dim: usize,
    pub basis_names: Vec<String>,
    /// `mul_table[i][j]` holds the coordinates of `b_i b_j`.
    pub mul_table: Vec<Vec<Vec<u64>>>,
    pub unit: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleFile {
    pub format_version: u32,
    /// A builtin id such as `ex61`, or a path to an algebra file, relative
    /// to the module file.
    pub algebra: String,
    pub side: Side,
    pub dim: usize,
    /// One `dim x dim` matrix per basis element, as rows.
    pub action: Vec<Vec<Vec<u64>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogManifest {
    pub format_version: u32,
    pub algebra: String,
    pub side: Side,
    pub length_bound: Option<usize>,
    pub dim_cap: Option<usize>,
    pub complete: bool,
    pub classes: Vec<ManifestEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub file: String,
    pub fingerprint: Fingerprint,
}

fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        col: e.column(),
        msg: e.to_string(),
    })
}

/// Pretty JSON with arrays of scalars kept on one line, so matrices read as
/// rows.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("plain data serializes");
    let mut out = String::new();
    write_value(&v, 0, &mut out);
    out.push('\n');
    out
}

fn write_value(v: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Array(items) if items.iter().any(|x| x.is_array() || x.is_object()) => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(x, indent + 1, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (i, (k, x)) in map.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_value(x, indent + 1, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(Value::to_string).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        other => out.push_str(&other.to_string()),
    }
}

fn reduce(field: PrimeField, x: u64) -> u8 {
    (x % field.order() as u64) as u8
}

fn check_version(v: u32) -> Result<()> {
    if v != FILE_FORMAT_VERSION {
        return Err(Error::Malformed(format!("unsupported format_version {v}")));
    }
    Ok(())
}

impl AlgebraFile {
    pub fn from_spec(spec: &AlgebraSpec) -> Self {
        let n = spec.dim();
        Self {
            format_version: FILE_FORMAT_VERSION,
            field_order: spec.field().order(),
            dim: n,
            basis_names: spec.basis_names().to_vec(),
            mul_table: (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| spec.product_basis(i, j).into_iter().map(u64::from).collect())
                        .collect()
                })
                .collect(),
            unit: spec.unit().iter().map(|&x| x as u64).collect(),
        }
    }

    pub fn to_spec(&self) -> Result<AlgebraSpec> {
        check_version(self.format_version)?;
        let field = PrimeField::new(self.field_order)?;
        let n = self.dim;
        if self.basis_names.len() != n {
            return Err(Error::DimensionMismatch(format!("{} basis names for dim {n}", self.basis_names.len())));
        }
        let mut mul = Vec::with_capacity(n * n * n);
        if self.mul_table.len() != n {
            return Err(Error::DimensionMismatch(format!("mul_table has {} rows, expected {n}", self.mul_table.len())));
        }
        for (i, row) in self.mul_table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch(format!("mul_table[{i}] has {} entries, expected {n}", row.len())));
            }
            for (j, v) in row.iter().enumerate() {
                if v.len() != n {
                    return Err(Error::DimensionMismatch(format!("mul_table[{i}][{j}] has {} entries, expected {n}", v.len())));
                }
                mul.extend(v.iter().map(|&x| reduce(field, x)));
            }
        }
        let unit = self.unit.iter().map(|&x| reduce(field, x)).collect();
        AlgebraSpec::new(field, self.basis_names.clone(), mul, unit)
    }
}

impl ModuleFile {
    pub fn from_module(m: &Module, algebra: &str) -> Self {
        Self {
            format_version: FILE_FORMAT_VERSION,
            algebra: algebra.to_string(),
            side: m.side(),
            dim: m.dim(),
            action: m
                .action()
                .iter()
                .map(|a| a.row_vecs().into_iter().map(|r| r.into_iter().map(u64::from).collect()).collect())
                .collect(),
        }
    }

    /// Builds the module over an already resolved algebra.
    pub fn to_module(&self, algebra: &Algebra) -> Result<Module> {
        check_version(self.format_version)?;
        let f = algebra.field();
        let d = self.dim;
        let mut action = Vec::with_capacity(self.action.len());
        for (i, rows) in self.action.iter().enumerate() {
            if rows.len() != d || rows.iter().any(|r| r.len() != d) {
                return Err(Error::DimensionMismatch(format!("action[{i}] is not {d} x {d}")));
            }
            let data = rows.iter().flatten().map(|&x| reduce(f, x)).collect();
            action.push(Mat::from_vec(f, d, d, data));
        }
        Module::new(algebra, self.side, d, action)
    }
}

pub fn parse_algebra_str(text: &str) -> Result<AlgebraSpec> {
    from_json::<AlgebraFile>(text)?.to_spec()
}

pub fn parse_algebra(path: &Path) -> Result<AlgebraSpec> {
    parse_algebra_str(&fs::read_to_string(path)?)
}

pub fn algebra_to_string(spec: &AlgebraSpec) -> String {
    to_json(&AlgebraFile::from_spec(spec))
}

pub fn module_to_string(m: &Module, algebra: &str) -> String {
    to_json(&ModuleFile::from_module(m, algebra))
}

/// A builtin id or a path to an algebra file. Builtin ids win.
pub fn resolve_algebra(reference: &str, base: Option<&Path>) -> Result<Algebra> {
    if builtin::NAMES.contains(&reference) {
        return Ok(Algebra::new(builtin::by_name(reference)?));
    }
    let path = match base {
        Some(dir) => dir.join(reference),
        None => PathBuf::from(reference),
    };
    if !path.exists() {
        return Err(Error::UnknownBuiltin(reference.to_string()));
    }
    Ok(Algebra::new(parse_algebra(&path)?))
}

/// Parses module-file text whose algebra reference resolves against `base`.
pub fn parse_module_str(text: &str, base: Option<&Path>) -> Result<Module> {
    let file: ModuleFile = from_json(text)?;
    let algebra = resolve_algebra(&file.algebra, base)?;
    file.to_module(&algebra)
}

pub fn parse_module(path: &Path) -> Result<Module> {
    parse_module_str(&fs::read_to_string(path)?, path.parent())
}

/// Named modules over a builtin algebra:
///
/// * `regular-left`, `regular-right`;
/// * `<b>R` and `R<b>`: the right and left ideals generated by the basis
///   element named `<b>`, e.g. `e11R`;
/// * `J-left`, `J-right`: the radical;
/// * `Q<i>`: the i-th class (from 1) of the right cyclic indecomposable
///   catalog, largest first.
pub fn builtin_module(algebra: &Algebra, name: &str) -> Result<Module> {
    let unknown = || Error::UnknownBuiltin(name.to_string());
    match name {
        "regular-left" => return Ok(Module::regular(algebra, Side::Left)),
        "regular-right" => return Ok(Module::regular(algebra, Side::Right)),
        "J-left" => return Ok(Module::regular(algebra, Side::Left).radical_module()),
        "J-right" => return Ok(Module::regular(algebra, Side::Right).radical_module()),
        _ => {}
    }
    if let Some(i) = name.strip_prefix('Q').and_then(|s| s.parse::<usize>().ok()) {
        let profile = ProjectiveProfile::new(algebra, Side::Right)?;
        let catalog = enumerate_cyclic_indecomposables(&profile, algebra, Budget::default())?;
        return i
            .checked_sub(1)
            .and_then(|k| catalog.classes.get(k))
            .map(|c| c.module.clone())
            .ok_or_else(unknown);
    }
    let names = algebra.basis_names();
    let ideal = |b: &str, side: Side| {
        let k = names.iter().position(|n| n == b)?;
        let r = Module::regular(algebra, side);
        let span = r.spin(&[algebra.basis_vector(k)]);
        Some(r.submodule(&span))
    };
    if let Some(m) = name.strip_suffix('R').and_then(|b| ideal(b, Side::Right)) {
        return Ok(m);
    }
    if let Some(m) = name.strip_prefix('R').and_then(|b| ideal(b, Side::Left)) {
        return Ok(m);
    }
    Err(unknown())
}

/// A module reference from the command line: a module file, `alg:name` for
/// a named builtin module, or a bare name over `default_algebra`.
pub fn resolve_module(reference: &str, default_algebra: &str) -> Result<Module> {
    let path = Path::new(reference);
    if path.is_file() {
        return parse_module(path);
    }
    let (alg, name) = reference.split_once(':').unwrap_or((default_algebra, reference));
    let algebra = resolve_algebra(alg, None)?;
    builtin_module(&algebra, name)
}

/// Writes one module file per class plus `manifest.json` into `dir`.
pub fn write_catalog(dir: &Path, catalog: &Catalog, algebra: &str) -> Result<()> {
    fs::create_dir_all(dir)?;
    let mut classes = Vec::new();
    for (i, c) in catalog.classes.iter().enumerate() {
        let file = format!("class-{:03}.json", i + 1);
        fs::write(dir.join(&file), module_to_string(&c.module, algebra))?;
        classes.push(ManifestEntry {
            file,
            fingerprint: c.fingerprint.clone(),
        });
    }
    let manifest = CatalogManifest {
        format_version: FILE_FORMAT_VERSION,
        algebra: algebra.to_string(),
        side: catalog.side,
        length_bound: catalog.length_bound,
        dim_cap: catalog.dim_cap,
        complete: catalog.complete,
        classes,
    };
    fs::write(dir.join("manifest.json"), to_json(&manifest))?;
    Ok(())
}

pub fn read_catalog(dir: &Path) -> Result<Catalog> {
    let manifest: CatalogManifest = from_json(&fs::read_to_string(dir.join("manifest.json"))?)?;
    check_version(manifest.format_version)?;
    let algebra = resolve_algebra(&manifest.algebra, Some(dir))?;
    let mut classes = Vec::new();
    for entry in manifest.classes {
        let file: ModuleFile = from_json(&fs::read_to_string(dir.join(&entry.file))?)?;
        let module = file.to_module(&algebra)?;
        if module.side() != manifest.side {
            return Err(Error::Incompatible);
        }
        classes.push(CatalogEntry {
            module,
            fingerprint: entry.fingerprint,
        });
    }
    Ok(Catalog {
        side: manifest.side,
        length_bound: manifest.length_bound,
        dim_cap: manifest.dim_cap,
        classes,
        complete: manifest.complete,
    })
}
