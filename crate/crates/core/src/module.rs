//! Modules given by action matrices, with socle, radical, top, Hom spaces,
//! endomorphism algebras and isomorphism tests.
//!
//! A left module stores `rho(b)` with `rho(b_i) rho(b_j) = rho(b_i b_j)`; a
//! right module acting on column vectors stores `rho(b)` for `v -> v.b`, so
//! `rho(b_i b_j) = rho(b_j) rho(b_i)`.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, AlgebraSpec, Side, SpanCoordinates};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::matrix::Mat;
use crate::subspace::Subspace;

/// Seed for every seeded search unless overridden.
pub const DEFAULT_SEED: u64 = 0x5eed_0fca_7a10_6500;

/// Exhaustive searches run when the search space has at most this many
/// elements.
pub const EXHAUSTIVE_LIMIT: u64 = 1 << 16;

/// Random candidates tried when the space is too large to exhaust.
pub const SAMPLE_COUNT: usize = 512;

#[derive(Clone)]
pub struct Module {
    algebra: Algebra,
    side: Side,
    dim: usize,
    action: Vec<Mat>,
}

impl Module {
    /// Checks shapes, the unit and the multiplication relations.
    pub fn new(algebra: &Algebra, side: Side, dim: usize, action: Vec<Mat>) -> Result<Self> {
        let bad = |reason: String| Error::InvalidModule { side, reason };
        if action.len() != algebra.dim() {
            return Err(bad(format!(
                "{} action matrices for an algebra of dimension {}",
                action.len(),
                algebra.dim()
            )));
        }
        if let Some(m) = action.iter().find(|m| m.rows() != dim || m.cols() != dim || m.field() != algebra.field()) {
            return Err(bad(format!("action matrix of shape {}x{} in a module of dimension {dim}", m.rows(), m.cols())));
        }
        let module = Self::from_trusted(algebra, side, dim, action);
        if !module.act(algebra.unit()).is_identity() {
            return Err(bad("the unit does not act as the identity".into()));
        }
        let n = algebra.dim();
        for i in 0..n {
            for j in 0..n {
                let lhs = match side {
                    Side::Left => module.action[i].mul(&module.action[j]),
                    Side::Right => module.action[j].mul(&module.action[i]),
                };
                if lhs != module.act(&algebra.product_basis(i, j)) {
                    return Err(bad(format!(
                        "action of {} * {} is not the product of the actions",
                        algebra.basis_names()[i],
                        algebra.basis_names()[j]
                    )));
                }
            }
        }
        Ok(module)
    }

    pub(crate) fn from_trusted(algebra: &Algebra, side: Side, dim: usize, action: Vec<Mat>) -> Self {
        Self {
            algebra: algebra.clone(),
            side,
            dim,
            action,
        }
    }

    pub fn zero(algebra: &Algebra, side: Side) -> Self {
        let action = vec![Mat::zeros(algebra.field(), 0, 0); algebra.dim()];
        Self::from_trusted(algebra, side, 0, action)
    }

    /// The algebra acting on itself by left or right multiplication.
    pub fn regular(algebra: &Algebra, side: Side) -> Self {
        let action = (0..algebra.dim())
            .map(|i| {
                let b = algebra.basis_vector(i);
                match side {
                    Side::Left => algebra.left_mult_matrix(&b),
                    Side::Right => algebra.right_mult_matrix(&b),
                }
            })
            .collect();
        Self::from_trusted(algebra, side, algebra.dim(), action)
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn spec(&self) -> &AlgebraSpec {
        self.algebra.spec()
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> PrimeField {
        self.algebra.field()
    }

    pub fn action(&self) -> &[Mat] {
        &self.action
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    /// Action of an algebra element given by coefficients.
    pub fn act(&self, x: &[u8]) -> Mat {
        let mut out = Mat::zeros(self.field(), self.dim, self.dim);
        for (m, &c) in self.action.iter().zip(x) {
            if c != 0 {
                out.add_scaled(m, c);
            }
        }
        out
    }

    fn radical_actions(&self) -> Vec<Mat> {
        self.algebra.radical_elements().iter().map(|j| self.act(j)).collect()
    }

    /// Vectors killed by the radical of the algebra.
    pub fn socle(&self) -> Subspace {
        let js = self.radical_actions();
        if js.is_empty() || self.dim == 0 {
            return Subspace::full(self.field(), self.dim);
        }
        let refs: Vec<&Mat> = js.iter().collect();
        Mat::vstack(self.field(), self.dim, &refs).kernel()
    }

    /// `J M`.
    pub fn radical(&self) -> Subspace {
        let js = self.radical_actions();
        if js.is_empty() || self.dim == 0 {
            return Subspace::zero(self.field(), self.dim);
        }
        let refs: Vec<&Mat> = js.iter().collect();
        Mat::hstack(self.field(), self.dim, &refs).image()
    }

    pub fn top(&self) -> Module {
        self.quotient(&self.radical())
    }

    pub fn socle_module(&self) -> Module {
        self.submodule(&self.socle())
    }

    pub fn radical_module(&self) -> Module {
        self.submodule(&self.radical())
    }

    pub fn is_semisimple(&self) -> bool {
        self.radical().is_zero()
    }

    pub fn is_submodule(&self, sub: &Subspace) -> bool {
        sub.ambient_dim() == self.dim
            && sub
                .vectors()
                .iter()
                .all(|v| self.action.iter().all(|m| sub.contains_vector(&m.mul_vec(v))))
    }

    /// Smallest submodule containing `vecs`.
    pub fn spin(&self, vecs: &[Vec<u8>]) -> Subspace {
        let f = self.field();
        let mut current = Subspace::from_vectors(f, self.dim, vecs);
        let mut frontier = current.vectors();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for v in &frontier {
                for m in &self.action {
                    let w = m.mul_vec(v);
                    if !current.contains_vector(&w) {
                        current = current.sum(&Subspace::from_vectors(f, self.dim, std::slice::from_ref(&w))).expect("same ambient");
                        next.push(w);
                    }
                }
            }
            frontier = next;
        }
        current
    }

    /// Restriction to a submodule, in the RREF basis of `sub`.
    pub fn submodule(&self, sub: &Subspace) -> Module {
        self.restrict(&sub.vectors()).expect("submodule basis is independent and stable")
    }

    /// Restriction to the submodule with the given basis (in that order).
    pub fn restrict(&self, basis: &[Vec<u8>]) -> Result<Module> {
        let f = self.field();
        let k = basis.len();
        if k == 0 {
            return Ok(Module::zero(&self.algebra, self.side));
        }
        let coords = SpanCoordinates::new(f, self.dim, basis)?;
        let mut action = Vec::with_capacity(self.action.len());
        for m in &self.action {
            let mut r = Mat::zeros(f, k, k);
            for (c, v) in basis.iter().enumerate() {
                let image = m.mul_vec(v);
                let col = coords
                    .coordinates(&image)
                    .ok_or_else(|| Error::Invariant("restriction to a subspace that is not a submodule".into()))?;
                for (row, &x) in col.iter().enumerate() {
                    r.set(row, c, x);
                }
            }
            action.push(r);
        }
        Ok(Module::from_trusted(&self.algebra, self.side, k, action))
    }

    /// Quotient by a submodule. The quotient basis is the images of the
    /// standard vectors at the non-pivot positions of `sub`.
    pub fn quotient(&self, sub: &Subspace) -> Module {
        let (keep, _) = self.quotient_map(sub);
        let k = keep.len();
        let f = self.field();
        let action = self
            .action
            .iter()
            .map(|m| {
                let mut r = Mat::zeros(f, k, k);
                for (c, &src) in keep.iter().enumerate() {
                    let image = sub.reduce_vector(&m.column(src));
                    for (row, &idx) in keep.iter().enumerate() {
                        r.set(row, c, image[idx]);
                    }
                }
                r
            })
            .collect();
        Module::from_trusted(&self.algebra, self.side, k, action)
    }

    /// Kept coordinates and the matrix of the projection onto the quotient.
    pub fn quotient_map(&self, sub: &Subspace) -> (Vec<usize>, Mat) {
        let mut is_pivot = vec![false; self.dim];
        for &p in sub.pivots() {
            is_pivot[p] = true;
        }
        let keep: Vec<usize> = (0..self.dim).filter(|&i| !is_pivot[i]).collect();
        let mut proj = Mat::zeros(self.field(), keep.len(), self.dim);
        for c in 0..self.dim {
            let mut e = vec![0u8; self.dim];
            e[c] = 1;
            let r = sub.reduce_vector(&e);
            for (row, &idx) in keep.iter().enumerate() {
                proj.set(row, c, r[idx]);
            }
        }
        (keep, proj)
    }

    pub fn direct_sum(parts: &[&Module]) -> Result<Module> {
        let first = parts.first().ok_or_else(|| Error::Malformed("empty direct sum".into()))?;
        for p in parts {
            check_compatible(first, p)?;
        }
        let dim = parts.iter().map(|p| p.dim).sum();
        let action = (0..first.algebra.dim())
            .map(|i| {
                let blocks: Vec<&Mat> = parts.iter().map(|p| &p.action[i]).collect();
                Mat::block_diag(first.field(), &blocks)
            })
            .collect();
        Ok(Module::from_trusted(&first.algebra, first.side, dim, action))
    }

    /// `M^(n)`.
    pub fn power(&self, n: usize) -> Module {
        if n == 0 {
            return Module::zero(&self.algebra, self.side);
        }
        let parts: Vec<&Module> = std::iter::repeat_n(self, n).collect();
        Module::direct_sum(&parts).expect("copies are compatible")
    }

    /// Vector-space dual: a module on the other side with transposed action.
    pub fn k_dual(&self) -> Module {
        let action = self.action.iter().map(Mat::transpose).collect();
        Module::from_trusted(&self.algebra, self.side.opposite(), self.dim, action)
    }

    /// Transports the structure along an invertible change of basis `p`
    /// (new coordinates `w` correspond to old vectors `p w`).
    pub fn conjugate(&self, p: &Mat) -> Result<Module> {
        let inv = p.inverse().ok_or_else(|| Error::Malformed("change of basis is singular".into()))?;
        let action = self.action.iter().map(|m| inv.mul(m).mul(p)).collect();
        Ok(Module::from_trusted(&self.algebra, self.side, self.dim, action))
    }

    /// Whether `f: self -> other` commutes with every action matrix.
    pub fn is_homomorphism(&self, other: &Module, f: &Mat) -> bool {
        f.rows() == other.dim
            && f.cols() == self.dim
            && self.action.iter().zip(&other.action).all(|(a, b)| f.mul(a) == b.mul(f))
    }
}

impl PartialEq for Module {
    fn eq(&self, other: &Self) -> bool {
        self.side == other.side && self.dim == other.dim && self.action == other.action && self.algebra.same_as(&other.algebra)
    }
}

impl Eq for Module {}

impl fmt::Debug for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Module({} dim {} over {:?})", self.side, self.dim, self.algebra)
    }
}

pub(crate) fn check_compatible(m: &Module, n: &Module) -> Result<()> {
    if m.side != n.side || !m.algebra.same_as(&n.algebra) {
        return Err(Error::Incompatible);
    }
    Ok(())
}

/// Basis of `Hom(m, n)` as `dim n x dim m` matrices.
pub fn hom(m: &Module, n: &Module) -> Result<Vec<Mat>> {
    check_compatible(m, n)?;
    let f = m.field();
    let (dm, dn) = (m.dim, n.dim);
    if dm == 0 || dn == 0 {
        return Ok(Vec::new());
    }
    let unknowns = dm * dn;
    // unknown (r, c) of the map sits at index r * dm + c
    let mut rows: Vec<Vec<u8>> = Vec::new();
    for (am, an) in m.action.iter().zip(&n.action) {
        if am.is_identity() && an.is_identity() {
            continue;
        }
        for r in 0..dn {
            for c in 0..dm {
                let mut eq = vec![0u8; unknowns];
                for k in 0..dm {
                    let v = am.get(k, c);
                    if v != 0 {
                        eq[r * dm + k] = f.add(eq[r * dm + k], v);
                    }
                }
                for k in 0..dn {
                    let v = an.get(r, k);
                    if v != 0 {
                        eq[k * dm + c] = f.sub(eq[k * dm + c], v);
                    }
                }
                if eq.iter().any(|&x| x != 0) {
                    rows.push(eq);
                }
            }
        }
    }
    let system = Mat::from_row_vecs(f, unknowns, &rows);
    let kernel = if rows.is_empty() { Subspace::full(f, unknowns) } else { system.kernel() };
    Ok(kernel.vectors().into_iter().map(|v| Mat::from_vec(f, dn, dm, v)).collect())
}

pub fn hom_dim(m: &Module, n: &Module) -> Result<usize> {
    Ok(hom(m, n)?.len())
}

/// `End(M)` with product `f . g = f o g` on the Hom basis.
pub struct EndAlgebra {
    pub spec: AlgebraSpec,
    pub basis: Vec<Mat>,
    coords: SpanCoordinates,
    dim: usize,
}

impl EndAlgebra {
    pub fn new(m: &Module) -> Result<Self> {
        let basis = hom(m, m)?;
        let f = m.field();
        let d = m.dim;
        let flat: Vec<Vec<u8>> = basis.iter().map(|b| b.data().to_vec()).collect();
        let names = (0..basis.len()).map(|i| format!("f{i}")).collect();
        let mul = |x: &[u8], y: &[u8]| {
            Mat::from_vec(f, d, d, x.to_vec()).mul(&Mat::from_vec(f, d, d, y.to_vec())).into_data()
        };
        let spec = crate::algebra::build_from_span(f, d * d, names, &flat, Mat::identity(f, d).data(), &mul)?;
        let coords = SpanCoordinates::new(f, d * d, &flat)?;
        Ok(Self { spec, basis, coords, dim: d })
    }

    pub fn coordinates(&self, map: &Mat) -> Option<Vec<u8>> {
        self.coords.coordinates(map.data())
    }

    pub fn element(&self, x: &[u8]) -> Mat {
        let f = self.spec.field();
        let mut out = Mat::zeros(f, self.dim, self.dim);
        for (b, &c) in self.basis.iter().zip(x) {
            if c != 0 {
                out.add_scaled(b, c);
            }
        }
        out
    }
}

pub fn endomorphism_algebra(m: &Module) -> Result<AlgebraSpec> {
    Ok(EndAlgebra::new(m)?.spec)
}

/// Isomorphism test for two indecomposable modules. If `M ~ N` then some
/// `g o f` with `f`, `g` taken from Hom bases is outside the radical of the
/// local ring `End(M)`, hence a unit, which forces `f` to be invertible. So
/// it suffices to inspect the basis of `Hom(M, N)`.
pub fn isomorphism_of_indecomposables(m: &Module, n: &Module) -> Result<Option<Mat>> {
    check_compatible(m, n)?;
    if m.dim != n.dim {
        return Ok(None);
    }
    if m.dim == 0 {
        return Ok(Some(Mat::zeros(m.field(), 0, 0)));
    }
    Ok(hom(m, n)?.into_iter().find(Mat::is_invertible))
}

/// An invertible homomorphism `m -> n`, if one exists.
pub fn is_isomorphic(m: &Module, n: &Module) -> Result<Option<Mat>> {
    is_isomorphic_seeded(m, n, DEFAULT_SEED)
}

pub fn is_isomorphic_seeded(m: &Module, n: &Module, seed: u64) -> Result<Option<Mat>> {
    check_compatible(m, n)?;
    if m.dim != n.dim {
        return Ok(None);
    }
    if m.dim == 0 {
        return Ok(Some(Mat::zeros(m.field(), 0, 0)));
    }
    if m == n {
        return Ok(Some(Mat::identity(m.field(), m.dim)));
    }
    if m.socle().dim() != n.socle().dim() || m.radical().dim() != n.radical().dim() {
        return Ok(None);
    }
    let fs = hom(m, n)?;
    if fs.is_empty() {
        return Ok(None);
    }
    let end_dim = hom_dim(m, m)?;
    if fs.len() != end_dim || hom_dim(n, n)? != end_dim {
        return Ok(None);
    }
    if let Some(w) = search_combination(m.field(), &fs, seed, |f| f.is_invertible()) {
        return Ok(Some(w));
    }
    if exhaustible(m.field(), fs.len()) {
        return Ok(None);
    }
    crate::decompose::isomorphism_via_decomposition(m, n, seed)
}

pub(crate) fn exhaustible(field: PrimeField, h: usize) -> bool {
    (field.order() as u64).checked_pow(h as u32).is_some_and(|n| n <= EXHAUSTIVE_LIMIT)
}

/// Looks for a linear combination of `basis` satisfying `accept`: every
/// nonzero combination when the space is small, else seeded samples.
pub(crate) fn search_combination(
    field: PrimeField,
    basis: &[Mat],
    seed: u64,
    mut accept: impl FnMut(&Mat) -> bool,
) -> Option<Mat> {
    let h = basis.len();
    if h == 0 {
        return None;
    }
    let combine = |coeffs: &[u8]| {
        let mut out = Mat::zeros(field, basis[0].rows(), basis[0].cols());
        for (b, &c) in basis.iter().zip(coeffs) {
            if c != 0 {
                out.add_scaled(b, c);
            }
        }
        out
    };
    // basis elements first: often already enough
    for b in basis {
        if accept(b) {
            return Some(b.clone());
        }
    }
    if exhaustible(field, h) {
        for coeffs in crate::subspace::all_vectors(field, h).skip(1) {
            let candidate = combine(&coeffs);
            if accept(&candidate) {
                return Some(candidate);
            }
        }
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = field.order() as u8;
    for _ in 0..SAMPLE_COUNT {
        let coeffs: Vec<u8> = (0..h).map(|_| rng.gen_range(0..p)).collect();
        let candidate = combine(&coeffs);
        if accept(&candidate) {
            return Some(candidate);
        }
    }
    None
}
