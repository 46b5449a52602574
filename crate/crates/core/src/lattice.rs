//! Brute-force submodule lattices and the predicates decided on them.
//!
//! Every submodule is a sum of cyclic submodules, so the lattice is the
//! closure of `{ A v : v in M }` under sums. Predicates below read the
//! lattice literally and serve as the oracle for the fast paths elsewhere.

use std::cell::RefCell;
use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::module::{isomorphism_of_indecomposables, Module};
use crate::subspace::{all_vectors, Subspace};

/// Limits for brute-force enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Most vectors scanned when generating cyclic submodules (`p^dim`).
    pub vectors: u64,
    /// Most lattice members.
    pub lattice_cap: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            vectors: 1 << 12,
            lattice_cap: 20_000,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Predicate {
    SquareFree,
    Uniform,
    Uniserial,
    Distributive,
    Extending,
    CoCyclic,
    Cyclic,
    CyclicSocle,
    CyclicTop,
}

impl Predicate {
    pub const ALL: [Predicate; 9] = [
        Predicate::SquareFree,
        Predicate::Uniform,
        Predicate::Uniserial,
        Predicate::Distributive,
        Predicate::Extending,
        Predicate::CoCyclic,
        Predicate::Cyclic,
        Predicate::CyclicSocle,
        Predicate::CyclicTop,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Predicate::SquareFree => "square-free",
            Predicate::Uniform => "uniform",
            Predicate::Uniserial => "uniserial",
            Predicate::Distributive => "distributive",
            Predicate::Extending => "extending",
            Predicate::CoCyclic => "co-cyclic",
            Predicate::Cyclic => "cyclic",
            Predicate::CyclicSocle => "cyclic-socle",
            Predicate::CyclicTop => "cyclic-top",
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Predicate {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Predicate::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::Malformed(format!("unknown predicate `{s}`")))
    }
}

pub struct SubmoduleLattice {
    module: Module,
    /// Sorted by dimension, then by RREF basis.
    members: Vec<Subspace>,
    cyclics: Vec<Subspace>,
    index: HashMap<Subspace, usize>,
    /// Lazily filled meet and join tables (`u32::MAX` = not yet known).
    meet: RefCell<Vec<u32>>,
    join: RefCell<Vec<u32>>,
}

const UNKNOWN: u32 = u32::MAX;

/// All cyclic submodules `A v`, deduplicated.
pub fn cyclic_submodules(m: &Module, budget: Budget) -> Result<Vec<Subspace>> {
    check_vector_budget(m, budget)?;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for v in all_vectors(m.field(), m.dim()) {
        let s = m.spin(&[v]);
        if seen.insert(s.clone()) {
            out.push(s);
        }
    }
    out.sort_by(|a, b| (a.dim(), a).cmp(&(b.dim(), b)));
    Ok(out)
}

fn check_vector_budget(m: &Module, budget: Budget) -> Result<()> {
    let count = (m.field().order() as u64).checked_pow(m.dim() as u32);
    match count {
        Some(c) if c <= budget.vectors => Ok(()),
        _ => Err(Error::BudgetExceeded(budget.vectors as usize)),
    }
}

pub fn submodule_lattice(m: &Module, budget: Budget) -> Result<SubmoduleLattice> {
    let cyclics = cyclic_submodules(m, budget)?;
    let zero = Subspace::zero(m.field(), m.dim());
    let mut seen: HashSet<Subspace> = HashSet::new();
    seen.insert(zero.clone());
    let mut queue = VecDeque::from([zero]);
    let mut members = Vec::new();
    while let Some(x) = queue.pop_front() {
        for c in &cyclics {
            if x.contains(c)? {
                continue;
            }
            let y = x.sum(c)?;
            if seen.insert(y.clone()) {
                if seen.len() > budget.lattice_cap {
                    return Err(Error::BudgetExceeded(budget.lattice_cap));
                }
                queue.push_back(y);
            }
        }
        members.push(x);
    }
    members.sort_by(|a, b| (a.dim(), a).cmp(&(b.dim(), b)));
    let index = members.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
    Ok(SubmoduleLattice {
        module: m.clone(),
        members,
        cyclics,
        index,
        meet: RefCell::new(Vec::new()),
        join: RefCell::new(Vec::new()),
    })
}

/// Decides `which` on `m` from its lattice.
pub fn predicate(m: &Module, which: Predicate, budget: Budget) -> Result<bool> {
    submodule_lattice(m, budget)?.holds(which)
}

impl SubmoduleLattice {
    pub fn module(&self) -> &Module {
        &self.module
    }

    pub fn members(&self) -> &[Subspace] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: &Subspace) -> bool {
        self.index.contains_key(s)
    }

    fn full(&self) -> Subspace {
        Subspace::full(self.module.field(), self.module.dim())
    }

    fn cached(&self, table: &RefCell<Vec<u32>>, i: usize, j: usize, op: impl Fn(&Subspace, &Subspace) -> Subspace) -> usize {
        let n = self.members.len();
        {
            let mut t = table.borrow_mut();
            if t.is_empty() {
                *t = vec![UNKNOWN; n * n];
            }
            let v = t[i * n + j];
            if v != UNKNOWN {
                return v as usize;
            }
        }
        let k = self.index[&op(&self.members[i], &self.members[j])];
        let mut t = table.borrow_mut();
        t[i * n + j] = k as u32;
        t[j * n + i] = k as u32;
        k
    }

    fn meet(&self, i: usize, j: usize) -> usize {
        self.cached(&self.meet, i, j, |a, b| a.intersection(b).expect("same ambient"))
    }

    fn join(&self, i: usize, j: usize) -> usize {
        self.cached(&self.join, i, j, |a, b| a.sum(b).expect("same ambient"))
    }

    /// Minimal nonzero members: the simple submodules. Simple submodules
    /// are cyclic, so they are the minimal nonzero cyclic ones.
    pub fn atoms(&self) -> Vec<&Subspace> {
        let nonzero: Vec<&Subspace> = self.cyclics.iter().filter(|s| !s.is_zero()).collect();
        nonzero
            .iter()
            .filter(|s| !nonzero.iter().any(|t| t.dim() < s.dim() && s.contains(t).expect("same ambient")))
            .copied()
            .collect()
    }

    /// Maximal proper members: adding any cyclic submodule either changes
    /// nothing or gives everything.
    pub fn coatoms(&self) -> Vec<&Subspace> {
        let d = self.module.dim();
        self.members
            .iter()
            .filter(|x| !x.is_full())
            .filter(|x| {
                self.cyclics.iter().all(|c| {
                    let y = x.sum(c).expect("same ambient");
                    y.dim() == x.dim() || y.dim() == d
                })
            })
            .collect()
    }

    /// Length of a maximal chain.
    pub fn height(&self) -> usize {
        let mut x = Subspace::zero(self.module.field(), self.module.dim());
        let mut steps = 0;
        while !x.is_full() {
            x = self
                .members
                .iter()
                .filter(|y| y.dim() > x.dim() && y.contains(&x).expect("same ambient"))
                .min_by_key(|y| y.dim())
                .expect("the whole module lies above")
                .clone();
            steps += 1;
        }
        steps
    }

    /// Sum of all simple submodules.
    pub fn socle(&self) -> Subspace {
        let mut acc = Subspace::zero(self.module.field(), self.module.dim());
        for a in self.atoms() {
            acc = acc.sum(a).expect("same ambient");
        }
        acc
    }

    /// Intersection of all maximal submodules.
    pub fn radical(&self) -> Subspace {
        let mut acc = self.full();
        for c in self.coatoms() {
            acc = acc.intersection(c).expect("same ambient");
        }
        acc
    }

    /// `n` meets every nonzero member.
    pub fn is_essential(&self, n: &Subspace) -> Result<bool> {
        if self.module.dim() == 0 {
            return Ok(false);
        }
        for s in self.members.iter().filter(|s| !s.is_zero()) {
            if s.intersection(n)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn holds(&self, which: Predicate) -> Result<bool> {
        Ok(match which {
            Predicate::SquareFree => self.is_square_free()?,
            Predicate::Uniform | Predicate::CoCyclic => self.module.dim() > 0 && self.atoms().len() == 1,
            Predicate::Uniserial => self.is_chain(),
            Predicate::Distributive => self.is_distributive(),
            Predicate::Extending => self.is_extending(),
            Predicate::Cyclic => self.generated_by_one(&self.full(), None),
            Predicate::CyclicSocle => self.generated_by_one(&self.socle(), None),
            Predicate::CyclicTop => self.generated_by_one(&self.full(), Some(&self.radical())),
        })
    }

    /// No two isomorphic nonzero members with zero intersection. Any such
    /// pair contains an isomorphic pair of simple members, so the atoms
    /// suffice.
    fn is_square_free(&self) -> Result<bool> {
        let atoms = self.atoms();
        let mods: Vec<Module> = atoms.iter().map(|a| self.module.submodule(a)).collect();
        for i in 0..atoms.len() {
            for j in i + 1..atoms.len() {
                if atoms[i].intersection(atoms[j])?.is_zero() && isomorphism_of_indecomposables(&mods[i], &mods[j])?.is_some() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    fn is_chain(&self) -> bool {
        self.members
            .windows(2)
            .all(|w| w[0].dim() < w[1].dim() && w[1].contains(&w[0]).expect("same ambient"))
    }

    /// `a & (b | c) = (a & b) | (a & c)` on all triples. A distributive
    /// lattice of height h has at most 2^h elements, which bounds the work.
    fn is_distributive(&self) -> bool {
        let n = self.members.len();
        let h = self.height();
        if h < usize::BITS as usize && n > 1usize << h {
            return false;
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.meet(a, b);
                for c in b + 1..n {
                    if self.meet(a, self.join(b, c)) != self.join(ab, self.meet(a, c)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Every member is essential in a direct summand. `x` is essential in
    /// `d` iff every atom below `d` is below `x`.
    fn is_extending(&self) -> bool {
        let d = self.module.dim();
        let summands: Vec<&Subspace> = self
            .members
            .iter()
            .filter(|s| {
                self.members
                    .iter()
                    .any(|c| s.dim() + c.dim() == d && s.intersection(c).expect("same ambient").is_zero())
            })
            .collect();
        let atoms = self.atoms();
        self.members.iter().all(|x| {
            summands.iter().any(|s| {
                s.contains(x).expect("same ambient")
                    && atoms
                        .iter()
                        .all(|a| !s.contains(a).expect("same ambient") || x.contains(a).expect("same ambient"))
            })
        })
    }

    /// Some vector of `target` generates it, modulo `modulo` when given.
    fn generated_by_one(&self, target: &Subspace, modulo: Option<&Subspace>) -> bool {
        let m = &self.module;
        let base = modulo.cloned().unwrap_or_else(|| Subspace::zero(m.field(), m.dim()));
        let goal = target.sum(&base).expect("same ambient");
        if goal == base {
            return true;
        }
        target.elements().any(|v| {
            let s = m.spin(&[v]).sum(&base).expect("same ambient");
            s == goal
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Algebra, Side};
    use crate::builtin;

    fn e11r() -> Module {
        let a = Algebra::new(builtin::ex61());
        let r = Module::regular(&a, Side::Right);
        r.submodule(&r.spin(&[a.basis_vector(0)]))
    }

    #[test]
    fn e11r_lattice() {
        let m = e11r();
        let l = submodule_lattice(&m, Budget::default()).unwrap();
        assert_eq!(l.len(), 5);
        assert!(l.holds(Predicate::Distributive).unwrap());
        assert!(!l.holds(Predicate::Uniform).unwrap());
        assert!(l.holds(Predicate::SquareFree).unwrap());
        assert!(!l.holds(Predicate::Uniserial).unwrap());
        assert!(l.holds(Predicate::Cyclic).unwrap());
        assert!(l.holds(Predicate::CyclicTop).unwrap());
        assert!(l.holds(Predicate::CyclicSocle).unwrap());
        assert_eq!(l.socle(), m.socle());
        assert_eq!(l.radical(), m.radical());
        let one_simple = l.atoms()[0].clone();
        assert!(!l.is_essential(&one_simple).unwrap());
        assert!(l.is_essential(&m.socle()).unwrap());
        assert!(!l.is_essential(&Subspace::zero(m.field(), 3)).unwrap());
    }

    #[test]
    fn truncated_cubic_chain() {
        let a = Algebra::new(builtin::u3());
        let r = Module::regular(&a, Side::Left);
        let l = submodule_lattice(&r, Budget::default()).unwrap();
        assert_eq!(l.len(), 4);
        for p in Predicate::ALL {
            assert!(l.holds(p).unwrap(), "{p}");
        }
    }

    #[test]
    fn simple_module_predicates() {
        let a = Algebra::new(builtin::ex61());
        let r = Module::regular(&a, Side::Right);
        let s = r.submodule(&r.spin(&[a.basis_vector(3)]));
        let l = submodule_lattice(&s, Budget::default()).unwrap();
        assert_eq!(l.len(), 2);
        for p in Predicate::ALL {
            assert!(l.holds(p).unwrap(), "{p}");
        }
    }

    #[test]
    fn local_non_uniserial() {
        let a = Algebra::new(builtin::v2());
        let r = Module::regular(&a, Side::Left);
        let l = submodule_lattice(&r, Budget::default()).unwrap();
        assert!(!l.holds(Predicate::SquareFree).unwrap());
        assert!(!l.holds(Predicate::CyclicSocle).unwrap());
        assert!(!l.holds(Predicate::Distributive).unwrap());
        assert!(l.holds(Predicate::Cyclic).unwrap());
    }

    #[test]
    fn zero_module_conventions() {
        let a = Algebra::new(builtin::u2());
        let z = Module::zero(&a, Side::Left);
        let l = submodule_lattice(&z, Budget::default()).unwrap();
        assert_eq!(l.len(), 1);
        assert!(l.holds(Predicate::SquareFree).unwrap());
        assert!(!l.holds(Predicate::CoCyclic).unwrap());
        assert!(!l.holds(Predicate::Uniform).unwrap());
    }

    #[test]
    fn budget_is_enforced() {
        let a = Algebra::new(builtin::ex61());
        let r = Module::regular(&a, Side::Right).power(3);
        assert!(matches!(submodule_lattice(&r, Budget::default()), Err(Error::BudgetExceeded(_))));
        let small = Budget {
            vectors: 1 << 12,
            lattice_cap: 3,
        };
        assert!(matches!(submodule_lattice(&e11r(), small), Err(Error::BudgetExceeded(3))));
    }

    #[test]
    fn predicate_names_round_trip() {
        for p in Predicate::ALL {
            assert_eq!(p.name().parse::<Predicate>().unwrap(), p);
        }
    }
}
