//! Ring-level verdicts assembled from a bounded catalog of indecomposables.
//!
//! Every verdict is a claim about the catalog only: indecomposables whose
//! top has length at most the bound. The report carries that bound and
//! whether the catalog was complete.

use serde::Serialize;

use crate::algebra::{Algebra, Side};
use crate::enumerate::{auslander_ring, enumerate_indecomposables, AuslanderData, Catalog, EnumerateOptions};
use crate::error::{Error, Result};
use crate::lattice::{submodule_lattice, Budget, Predicate, SubmoduleLattice};
use crate::module::{hom, isomorphism_of_indecomposables, search_combination, Module, DEFAULT_SEED};
use crate::profile::{ProjectiveProfile, SimpleProfile};

pub const REPORT_FORMAT_VERSION: u32 = 1;

/// (cyclic, square-free, simple) for a socle or top profile against the
/// multiplicities `t` of the simples in `A/J`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ProfileFlags {
    pub cyclic: bool,
    pub square_free: bool,
    pub simple: bool,
}

impl ProfileFlags {
    pub fn of(profile: &SimpleProfile, t: &[usize]) -> Self {
        let u = &profile.multiplicities;
        Self {
            cyclic: u.iter().zip(t).all(|(a, b)| a <= b),
            square_free: u.iter().all(|&x| x <= 1),
            simple: profile.total() == 1,
        }
    }
}

pub fn socle_predicates(profile: &ProjectiveProfile, m: &Module) -> Result<ProfileFlags> {
    Ok(ProfileFlags::of(&profile.socle_profile(m)?, &profile.multiplicities()))
}

pub fn top_predicates(profile: &ProjectiveProfile, m: &Module) -> Result<ProfileFlags> {
    Ok(ProfileFlags::of(&profile.top_profile(m)?, &profile.multiplicities()))
}

/// Lattice-oracle facts; `None` when the lattice exceeds the budget.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleFlags {
    pub square_free: bool,
    pub uniform: bool,
    pub uniserial: bool,
    pub distributive: bool,
    pub extending: bool,
    pub cyclic_socle: bool,
    pub cyclic_top: bool,
}

impl OracleFlags {
    fn of(lattice: &SubmoduleLattice) -> Result<Self> {
        Ok(Self {
            square_free: lattice.holds(Predicate::SquareFree)?,
            uniform: lattice.holds(Predicate::Uniform)?,
            uniserial: lattice.holds(Predicate::Uniserial)?,
            distributive: lattice.holds(Predicate::Distributive)?,
            extending: lattice.holds(Predicate::Extending)?,
            cyclic_socle: lattice.holds(Predicate::CyclicSocle)?,
            cyclic_top: lattice.holds(Predicate::CyclicTop)?,
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassFacts {
    pub dim: usize,
    pub socle_profile: Vec<usize>,
    pub top_profile: Vec<usize>,
    pub socle: ProfileFlags,
    pub top: ProfileFlags,
    pub oracle: Option<OracleFlags>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Verdicts {
    pub co_kothe: bool,
    pub strongly_co_kothe: bool,
    pub very_strongly_co_kothe: bool,
    pub kothe_side: bool,
    pub strongly_kothe_side: bool,
    pub very_strongly_kothe_side: bool,
    pub left_serial: bool,
    pub right_serial: bool,
    pub artinian_serial: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AuslanderFlags {
    pub dim: usize,
    /// Every `T e_i` has a simple socle.
    pub left_qf2: bool,
    /// Every `e_i T` has a simple top.
    pub right_co_qf2: bool,
    /// Every `T e_i` has a square-free socle.
    pub generalized_left_qf2: bool,
    /// Every `e_i T` has a square-free top.
    pub generalized_right_co_qf2: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(id: &str, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            id: id.to_string(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RingReport {
    pub format_version: u32,
    pub algebra: String,
    pub side: Side,
    pub length_bound: usize,
    pub complete: bool,
    /// Dimensions of the simples `S_i`, in profile order.
    pub simple_dims: Vec<usize>,
    /// Multiplicities `t_i` of `P_i` in the regular module.
    pub projective_multiplicities: Vec<usize>,
    pub classes: Vec<ClassFacts>,
    pub verdicts: Verdicts,
    pub auslander: Option<AuslanderFlags>,
    pub consistency: Vec<Check>,
}

impl RingReport {
    pub fn all_checks_pass(&self) -> bool {
        self.consistency.iter().all(|c| c.passed)
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.consistency.iter().find(|c| c.id == id)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ClassifyOptions {
    pub length_bound: usize,
    pub dim_cap: Option<usize>,
    pub budget: Budget,
    pub seed: u64,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        Self {
            length_bound: 3,
            dim_cap: None,
            budget: Budget::default(),
            seed: DEFAULT_SEED,
        }
    }
}

impl ClassifyOptions {
    fn enumerate(&self) -> EnumerateOptions {
        EnumerateOptions {
            length_bound: self.length_bound,
            dim_cap: self.dim_cap,
            budget: self.budget,
        }
    }
}

/// Everything computed for one side.
pub struct SideData {
    pub profile: ProjectiveProfile,
    pub catalog: Catalog,
    pub facts: Vec<ClassFacts>,
    pub serial: bool,
}

impl SideData {
    pub fn new(algebra: &Algebra, side: Side, opts: &ClassifyOptions) -> Result<Self> {
        let profile = ProjectiveProfile::new(algebra, side)?;
        let catalog = enumerate_indecomposables(&profile, opts.enumerate())?;
        let t = profile.multiplicities();
        let facts = catalog
            .classes
            .iter()
            .map(|c| {
                let oracle = match submodule_lattice(&c.module, opts.budget) {
                    Ok(l) => Some(OracleFlags::of(&l)?),
                    Err(Error::BudgetExceeded(_)) => None,
                    Err(e) => return Err(e),
                };
                Ok(ClassFacts {
                    dim: c.module.dim(),
                    socle: ProfileFlags::of(&c.socle(), &t),
                    top: ProfileFlags::of(&c.top(), &t),
                    socle_profile: c.fingerprint.socle.clone(),
                    top_profile: c.fingerprint.top.clone(),
                    oracle,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let mut serial = true;
        for p in profile.projectives() {
            serial &= submodule_lattice(p, opts.budget)?.holds(Predicate::Uniserial)?;
        }
        Ok(Self {
            profile,
            catalog,
            facts,
            serial,
        })
    }

    fn all(&self, f: impl Fn(&ClassFacts) -> bool) -> bool {
        self.facts.iter().all(f)
    }

    /// `None` if some oracle flag is missing.
    fn all_oracle(&self, f: impl Fn(&OracleFlags) -> bool) -> Option<bool> {
        let mut acc = true;
        for c in &self.facts {
            acc &= f(c.oracle.as_ref()?);
        }
        Some(acc)
    }
}

pub fn qf2_flags(t: &AuslanderData) -> Result<AuslanderFlags> {
    let mut flags = AuslanderFlags {
        dim: t.algebra.dim(),
        left_qf2: true,
        right_co_qf2: true,
        generalized_left_qf2: true,
        generalized_right_co_qf2: true,
    };
    for p in &t.left_projectives {
        let soc = socle_predicates(&t.left_profile, p)?;
        flags.left_qf2 &= soc.simple;
        flags.generalized_left_qf2 &= soc.square_free;
    }
    for p in &t.right_projectives {
        let top = top_predicates(&t.right_profile, p)?;
        flags.right_co_qf2 &= top.simple;
        flags.generalized_right_co_qf2 &= top.square_free;
    }
    Ok(flags)
}

/// Classifies `algebra` on `side` up to the length bound.
pub fn classify_ring(algebra: &Algebra, id: &str, side: Side, opts: &ClassifyOptions) -> Result<RingReport> {
    let here = SideData::new(algebra, side, opts)?;
    let there = SideData::new(algebra, side.opposite(), opts)?;
    classify_from(algebra, id, side, &here, &there, opts)
}

/// Reports for both sides, sharing the per-side computations.
pub fn classify_both(algebra: &Algebra, id: &str, opts: &ClassifyOptions) -> Result<(RingReport, RingReport)> {
    let left = SideData::new(algebra, Side::Left, opts)?;
    let right = SideData::new(algebra, Side::Right, opts)?;
    Ok((
        classify_from(algebra, id, Side::Left, &left, &right, opts)?,
        classify_from(algebra, id, Side::Right, &right, &left, opts)?,
    ))
}

pub fn classify_from(
    algebra: &Algebra,
    id: &str,
    side: Side,
    here: &SideData,
    there: &SideData,
    opts: &ClassifyOptions,
) -> Result<RingReport> {
    let (left_serial, right_serial) = match side {
        Side::Left => (here.serial, there.serial),
        Side::Right => (there.serial, here.serial),
    };
    let verdicts = Verdicts {
        co_kothe: here.all(|c| c.socle.cyclic),
        strongly_co_kothe: here.all(|c| c.socle.square_free),
        very_strongly_co_kothe: here.all(|c| c.socle.simple),
        kothe_side: here.all(|c| c.top.cyclic),
        strongly_kothe_side: here.all(|c| c.top.square_free),
        very_strongly_kothe_side: here.all(|c| c.top.simple),
        left_serial,
        right_serial,
        artinian_serial: left_serial && right_serial,
    };
    let complete = here.catalog.complete && there.catalog.complete;
    let auslander_data = match auslander_ring(&here.catalog) {
        Ok(t) => Some(t),
        Err(Error::BudgetExceeded(_) | Error::IncompleteCatalog) => None,
        Err(e) => return Err(e),
    };
    let auslander = auslander_data.as_ref().map(qf2_flags).transpose()?;
    let consistency = crosscheck_theorems(algebra, here, there, &verdicts, auslander_data.as_ref(), opts)?;
    Ok(RingReport {
        format_version: REPORT_FORMAT_VERSION,
        algebra: id.to_string(),
        side,
        length_bound: opts.length_bound,
        complete,
        simple_dims: here.profile.simples().iter().map(|s| s.dim()).collect(),
        projective_multiplicities: here.profile.multiplicities(),
        classes: here.facts.clone(),
        verdicts,
        auslander,
        consistency,
    })
}

fn iff(a: bool, b: bool) -> bool {
    a == b
}

/// Catalog-level consistency checks between the verdicts and the oracle.
pub fn crosscheck_theorems(
    algebra: &Algebra,
    here: &SideData,
    there: &SideData,
    v: &Verdicts,
    t: Option<&AuslanderData>,
    opts: &ClassifyOptions,
) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let missing = "oracle lattice over budget";

    out.push(Check::new(
        "monotone-verdicts",
        (!v.very_strongly_co_kothe || v.strongly_co_kothe)
            && (!v.strongly_co_kothe || v.co_kothe)
            && (!v.very_strongly_kothe_side || v.strongly_kothe_side)
            && (!v.strongly_kothe_side || v.kothe_side),
        "very strongly => strongly => plain, for socles and tops",
    ));

    match here.all_oracle(|o| o.uniform) {
        Some(all_uniform) => out.push(Check::new(
            "simple-socle-iff-uniform",
            iff(v.very_strongly_co_kothe, all_uniform),
            format!("all socles simple: {}, all classes uniform: {all_uniform}", v.very_strongly_co_kothe),
        )),
        None => out.push(Check::new("simple-socle-iff-uniform", false, missing)),
    }

    match here.all_oracle(|o| o.square_free) {
        Some(all_sf) => out.push(Check::new(
            "square-free-socle-iff-square-free",
            iff(v.strongly_co_kothe, all_sf),
            format!("all socles square-free: {}, all classes square-free: {all_sf}", v.strongly_co_kothe),
        )),
        None => out.push(Check::new("square-free-socle-iff-square-free", false, missing)),
    }

    let quasi_duo = here.profile.multiplicities().iter().all(|&t| t == 1);
    out.push(Check::new(
        "quasi-duo-cyclic-iff-square-free",
        !quasi_duo || iff(v.co_kothe, v.strongly_co_kothe),
        if quasi_duo {
            format!("A/J is a product of division rings; cyclic: {}, square-free: {}", v.co_kothe, v.strongly_co_kothe)
        } else {
            "A/J has a matrix block; nothing to check".to_string()
        },
    ));

    let opposite_cyclic_top = there.all(|c| c.top.cyclic);
    out.push(Check::new(
        "strong-socle-implies-opposite-cyclic-top",
        !v.strongly_co_kothe || opposite_cyclic_top,
        format!(
            "strongly co-Köthe: {}, every opposite-side class has cyclic top: {opposite_cyclic_top}",
            v.strongly_co_kothe
        ),
    ));

    if algebra.is_commutative() {
        let values = [
            v.co_kothe,
            v.strongly_co_kothe,
            v.very_strongly_co_kothe,
            v.kothe_side,
            v.strongly_kothe_side,
            v.very_strongly_kothe_side,
        ];
        let agree = values.iter().all(|&x| x == v.artinian_serial);
        out.push(Check::new(
            "commutative-verdicts-agree",
            agree,
            format!("verdicts {values:?}, projectives uniserial: {}", v.artinian_serial),
        ));
    }

    let both_simple = here.all(|c| c.socle.simple && c.top.simple) && there.all(|c| c.socle.simple && c.top.simple);
    match (here.all_oracle(|o| o.uniserial), there.all_oracle(|o| o.uniserial)) {
        (Some(a), Some(b)) => {
            let all_uniserial = a && b;
            out.push(Check::new(
                "serial-web",
                v.artinian_serial == both_simple && both_simple == all_uniserial,
                format!("serial: {}, simple socle and top: {both_simple}, all uniserial: {all_uniserial}", v.artinian_serial),
            ));
        }
        _ => out.push(Check::new("serial-web", false, missing)),
    }

    // soc(U) embeds in A/J, found as an injective map rather than from profiles
    let semisimple_quotient = Module::regular(algebra, here.profile.side).top();
    let mut embeds = true;
    for c in &here.catalog.classes {
        let soc = c.module.socle_module();
        let maps = hom(&soc, &semisimple_quotient)?;
        let d = soc.dim();
        embeds &= search_combination(soc.field(), &maps, opts.seed, |f| f.rank() == d).is_some();
    }
    out.push(Check::new(
        "socle-embeds-in-semisimple-quotient",
        iff(v.co_kothe, embeds),
        format!("cyclic socles: {}, every socle embeds in A/J: {embeds}", v.co_kothe),
    ));

    let mut socle_is_a_simple = true;
    for c in &here.catalog.classes {
        let soc = c.module.socle_module();
        let mut hit = false;
        for s in here.profile.simples() {
            if isomorphism_of_indecomposables(s, &soc)?.is_some() {
                hit = true;
                break;
            }
        }
        socle_is_a_simple &= hit;
    }
    out.push(Check::new(
        "simple-socle-is-a-simple-top",
        iff(v.very_strongly_co_kothe, socle_is_a_simple),
        format!("simple socles: {}, each socle isomorphic to some A e/J e: {socle_is_a_simple}", v.very_strongly_co_kothe),
    ));

    if let Some(t) = t {
        let mut sf = true;
        let mut simple = true;
        for (facts, p) in here.facts.iter().zip(&t.left_projectives) {
            let tp = socle_predicates(&t.left_profile, p)?;
            sf &= facts.socle.square_free == tp.square_free;
            simple &= facts.socle.simple == tp.simple;
        }
        out.push(Check::new(
            "auslander-square-free-socle-transfer",
            sf,
            "U_i has a square-free socle iff Hom(V, U_i) does",
        ));
        out.push(Check::new(
            "auslander-simple-socle-transfer",
            simple,
            "U_i has a simple socle iff Hom(V, U_i) does",
        ));
    }

    Ok(out)
}
