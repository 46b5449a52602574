//! Brute-force oracles shared by the integration tests. They work on
//! explicit sets of vectors and never call the library's linear algebra.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use kothe::module::is_isomorphic;
use kothe::{builtin, Algebra, Mat, Module, Side, Subspace};

pub type Vector = Vec<u8>;
pub type Set = BTreeSet<Vector>;

pub fn all_vectors(p: u8, d: usize) -> Vec<Vector> {
    let mut out = vec![vec![]];
    for _ in 0..d {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..p).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

fn add(p: u8, a: &[u8], b: &[u8]) -> Vector {
    a.iter().zip(b).map(|(x, y)| ((*x as u16 + *y as u16) % p as u16) as u8).collect()
}

fn scale(p: u8, c: u8, a: &[u8]) -> Vector {
    a.iter().map(|x| ((c as u16 * *x as u16) % p as u16) as u8).collect()
}

pub fn apply(m: &Mat, v: &[u8]) -> Vector {
    let p = m.field().order();
    (0..m.rows())
        .map(|r| ((0..m.cols()).map(|c| m.get(r, c) as u32 * v[c] as u32).sum::<u32>() % p) as u8)
        .collect()
}

/// The submodule lattice as sets of vectors, found by closing `{0}` under
/// adding one vector at a time and keeping the subspaces closed under the
/// action.
pub struct Oracle {
    pub p: u8,
    pub dim: usize,
    pub members: Vec<Set>,
    module: Module,
}

impl Oracle {
    pub fn new(m: &Module) -> Self {
        let p = m.field().order() as u8;
        let d = m.dim();
        let vectors = all_vectors(p, d);
        let zero: Set = [vec![0; d]].into_iter().collect();
        let mut subspaces: BTreeSet<Set> = [zero.clone()].into_iter().collect();
        let mut frontier = vec![zero];
        while let Some(s) = frontier.pop() {
            for v in &vectors {
                if s.contains(v) {
                    continue;
                }
                let mut t = Set::new();
                for c in 0..p {
                    let cv = scale(p, c, v);
                    for x in &s {
                        t.insert(add(p, x, &cv));
                    }
                }
                if subspaces.insert(t.clone()) {
                    frontier.push(t);
                }
            }
        }
        let members = subspaces
            .into_iter()
            .filter(|s| s.iter().all(|v| m.action().iter().all(|a| s.contains(&apply(a, v)))))
            .collect();
        Self {
            p,
            dim: d,
            members,
            module: m.clone(),
        }
    }

    pub fn full(&self) -> &Set {
        self.members.iter().max_by_key(|s| s.len()).unwrap()
    }

    fn nonzero(&self) -> impl Iterator<Item = &Set> {
        self.members.iter().filter(|s| s.len() > 1)
    }

    pub fn meet(&self, a: &Set, b: &Set) -> Set {
        a.intersection(b).cloned().collect()
    }

    /// Smallest member containing both.
    pub fn join(&self, a: &Set, b: &Set) -> Set {
        self.members
            .iter()
            .filter(|s| a.is_subset(s) && b.is_subset(s))
            .min_by_key(|s| s.len())
            .unwrap()
            .clone()
    }

    pub fn atoms(&self) -> Vec<&Set> {
        self.nonzero()
            .filter(|s| !self.nonzero().any(|t| t.len() < s.len() && t.is_subset(s)))
            .collect()
    }

    /// Sum of the simple submodules.
    pub fn socle(&self) -> Set {
        let mut acc = self.members.iter().min_by_key(|s| s.len()).unwrap().clone();
        for a in self.atoms() {
            acc = self.join(&acc, a);
        }
        acc
    }

    pub fn to_subspace(&self, s: &Set) -> Subspace {
        let vecs: Vec<Vector> = s.iter().cloned().collect();
        Subspace::from_vectors(self.module.field(), self.dim, &vecs)
    }

    fn is_zero(s: &Set) -> bool {
        s.len() == 1
    }

    pub fn uniform(&self) -> bool {
        let nz: Vec<&Set> = self.nonzero().collect();
        !nz.is_empty() && nz.iter().all(|a| nz.iter().all(|b| !Self::is_zero(&self.meet(a, b))))
    }

    pub fn square_free(&self) -> bool {
        let nz: Vec<&Set> = self.nonzero().collect();
        for (i, a) in nz.iter().enumerate() {
            for b in &nz[i + 1..] {
                if a.len() == b.len() && Self::is_zero(&self.meet(a, b)) {
                    let ma = self.module.submodule(&self.to_subspace(a));
                    let mb = self.module.submodule(&self.to_subspace(b));
                    if is_isomorphic(&ma, &mb).unwrap().is_some() {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn distributive(&self) -> bool {
        let ms = &self.members;
        ms.iter().all(|a| {
            ms.iter().all(|b| {
                ms.iter()
                    .all(|c| self.meet(a, &self.join(b, c)) == self.join(&self.meet(a, b), &self.meet(a, c)))
            })
        })
    }

    pub fn uniserial(&self) -> bool {
        let ms = &self.members;
        ms.iter().all(|a| ms.iter().all(|b| a.is_subset(b) || b.is_subset(a)))
    }

    fn essential_in(&self, n: &Set, d: &Set) -> bool {
        n.is_subset(d) && self.nonzero().filter(|x| x.is_subset(d)).all(|x| !Self::is_zero(&self.meet(x, n)))
    }

    pub fn extending(&self) -> bool {
        let total = self.full().len();
        let summands: Vec<&Set> = self
            .members
            .iter()
            .filter(|d| self.members.iter().any(|c| Self::is_zero(&self.meet(d, c)) && d.len() * c.len() == total))
            .collect();
        self.members.iter().all(|n| summands.iter().any(|d| self.essential_in(n, d)))
    }

    fn generated(&self, v: &Vector) -> Set {
        self.members.iter().filter(|s| s.contains(v)).min_by_key(|s| s.len()).unwrap().clone()
    }

    pub fn cyclic(&self) -> bool {
        let full = self.full();
        full.iter().any(|v| &self.generated(v) == full)
    }

    /// Some single vector generates the socle.
    pub fn cyclic_socle(&self) -> bool {
        let soc = self.socle();
        soc.iter().any(|v| self.generated(v) == soc)
    }
}

pub fn builtin_algebras() -> Vec<(&'static str, Algebra)> {
    builtin::all().into_iter().map(|(n, s)| (n, Algebra::new(s))).collect()
}

fn key(m: &Module) -> (Side, usize, Vec<usize>) {
    (m.side(), m.dim(), m.action().iter().map(Mat::rank).collect())
}

/// Pushes `m` unless an isomorphic module is already present.
pub fn push_new(classes: &mut HashMap<(Side, usize, Vec<usize>), Vec<Module>>, m: Module) -> bool {
    let bucket = classes.entry(key(&m)).or_default();
    for x in bucket.iter() {
        if is_isomorphic(x, &m).unwrap().is_some() {
            return false;
        }
    }
    bucket.push(m);
    true
}

/// Isomorphism classes of subquotients `K/N` of dimension 1..=`max_dim`
/// of the regular modules, the sums of two indecomposable projectives, and
/// `R + R`, on both sides, whenever the ambient module has dimension at
/// most 6.
pub fn subquotients(a: &Algebra, max_dim: usize) -> Vec<Module> {
    let mut classes = HashMap::new();
    let mut out = Vec::new();
    for side in [Side::Left, Side::Right] {
        let r = Module::regular(a, side);
        let profile = kothe::profile::ProjectiveProfile::new(a, side).unwrap();
        let ps = profile.projectives();
        let mut ambients = vec![r.clone()];
        for i in 0..ps.len() {
            for j in i..ps.len() {
                ambients.push(Module::direct_sum(&[ps[i], ps[j]]).unwrap());
            }
        }
        ambients.push(Module::direct_sum(&[&r, &r]).unwrap());
        for m in ambients.into_iter().filter(|m| m.dim() <= 6) {
            let lattice = kothe::lattice::submodule_lattice(&m, Default::default()).unwrap();
            for k in lattice.members() {
                let km = m.submodule(k);
                let sub = kothe::lattice::submodule_lattice(&km, Default::default()).unwrap();
                for n in sub.members() {
                    let d = k.dim() - n.dim();
                    if d == 0 || d > max_dim {
                        continue;
                    }
                    let q = km.quotient(n);
                    if push_new(&mut classes, q.clone()) {
                        out.push(q);
                    }
                }
            }
        }
    }
    out
}
