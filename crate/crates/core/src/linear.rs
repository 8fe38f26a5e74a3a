//! Rational vector spaces with a semivector space sitting inside: bases
//! shared by both, restricted, converging and diverging maps, inner
//! products and semilinear algebras.
//!
//! Spaces over R are modelled by Q (and R° by Q°).

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::constructors::TruncPolyAlgebra;
use crate::error::{Error, Result};
use crate::finite::{Axiom, AxiomReport, Collector, StructureClass, DEFAULT_CAP};
use crate::rational::{format_rat, int, rat, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VecQ(#[serde(with = "rat_vec")] pub Vec<Rat>);

mod rat_vec {
    use super::Rat;
    use crate::rational::{format_rat, parse_rat};
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rat], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(format_rat).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rat>, D::Error> {
        let raw = Vec::<serde_json::Value>::deserialize(d)?;
        raw.iter()
            .map(|v| match v {
                serde_json::Value::String(s) => parse_rat(s).map_err(serde::de::Error::custom),
                serde_json::Value::Number(n) => n
                    .as_i64()
                    .map(Rat::from_integer)
                    .ok_or_else(|| serde::de::Error::custom(format!("{n} is not an integer"))),
                other => Err(serde::de::Error::custom(format!("{other} is not a rational"))),
            })
            .collect()
    }
}

impl VecQ {
    pub fn ints(xs: &[i64]) -> Self {
        VecQ(xs.iter().map(|&x| int(x)).collect())
    }

    pub fn zero(n: usize) -> Self {
        VecQ(vec![Rat::zero(); n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zero(n);
        v.0[i] = int(1);
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn add(&self, o: &VecQ) -> VecQ {
        VecQ(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, a: &Rat) -> VecQ {
        VecQ(self.0.iter().map(|x| a * x).collect())
    }
}

impl fmt::Display for VecQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(format_rat).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Coordinate sets a semivector space may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Comp {
    /// Z° = Z+ ∪ {0}
    #[serde(rename = "Z0")]
    ZNonNeg,
    /// Q° = Q+ ∪ {0}
    #[serde(rename = "Q0")]
    QNonNeg,
    Q,
    #[serde(rename = "{0}")]
    Zero,
}

impl Comp {
    pub fn member(self, x: &Rat) -> bool {
        match self {
            Comp::ZNonNeg => x.is_integer() && !x.is_negative(),
            Comp::QNonNeg => !x.is_negative(),
            Comp::Q => true,
            Comp::Zero => x.is_zero(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Comp::ZNonNeg => "Z0",
            Comp::QNonNeg => "Q0",
            Comp::Q => "Q",
            Comp::Zero => "{0}",
        }
    }
}

/// Semifields used as scalars.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Semifield {
    #[serde(rename = "Z0")]
    ZNonNeg,
    #[serde(rename = "Q0")]
    QNonNeg,
}

impl Semifield {
    pub fn as_comp(self) -> Comp {
        match self {
            Semifield::ZNonNeg => Comp::ZNonNeg,
            Semifield::QNonNeg => Comp::QNonNeg,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemiVecDescriptor {
    pub components: Vec<Comp>,
    pub scalars: Semifield,
}

impl SemiVecDescriptor {
    pub fn new(components: Vec<Comp>, scalars: Semifield) -> Self {
        Self { components, scalars }
    }

    pub fn uniform(c: Comp, n: usize, scalars: Semifield) -> Self {
        Self::new(vec![c; n], scalars)
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn contains(&self, v: &VecQ) -> bool {
        v.dim() == self.dim() && self.components.iter().zip(&v.0).all(|(c, x)| c.member(x))
    }

    pub fn describe(&self) -> String {
        let cs: Vec<&str> = self.components.iter().map(|c| c.name()).collect();
        format!("({}) over {}", cs.join(", "), self.scalars.as_comp().name())
    }
}

/// Fixed seed, sample count and coordinate bound for randomized audits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditConfig {
    pub seed: u64,
    pub samples: usize,
    pub magnitude: i64,
}

impl Default for AuditConfig {
    fn default() -> Self {
        Self { seed: 0, samples: 500, magnitude: 20 }
    }
}

struct Sampler {
    rng: ChaCha8Rng,
    mag: i64,
}

impl Sampler {
    fn new(cfg: &AuditConfig) -> Self {
        Self { rng: ChaCha8Rng::seed_from_u64(cfg.seed), mag: cfg.magnitude.max(1) }
    }

    fn comp(&mut self, c: Comp) -> Rat {
        let m = self.mag;
        match c {
            Comp::Zero => Rat::zero(),
            Comp::ZNonNeg => int(self.rng.gen_range(0..=m)),
            Comp::QNonNeg => rat(self.rng.gen_range(0..=m), self.rng.gen_range(1..=m)),
            Comp::Q => rat(self.rng.gen_range(-m..=m), self.rng.gen_range(1..=m)),
        }
    }

    fn vec(&mut self, cs: &[Comp]) -> VecQ {
        VecQ(cs.iter().map(|&c| self.comp(c)).collect())
    }

    fn full(&mut self, n: usize) -> VecQ {
        self.vec(&vec![Comp::Q; n])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemiVecVerdict {
    pub holds: bool,
    /// A scalar and a vector whose product leaves the set.
    pub witness: Option<(String, VecQ)>,
    pub report: AxiomReport<String>,
}

/// Whether the scalar action of `k` keeps `c` inside itself.
fn action_closed(c: Comp, k: Semifield) -> bool {
    !(c == Comp::ZNonNeg && k == Semifield::QNonNeg)
}

pub fn is_semivector_space(w: &SemiVecDescriptor) -> SemiVecVerdict {
    is_semivector_space_with(w, &AuditConfig::default())
}

/// Rule table per coordinate, confirmed on random samples.
pub fn is_semivector_space_with(w: &SemiVecDescriptor, cfg: &AuditConfig) -> SemiVecVerdict {
    let mut c = Collector::new(StructureClass::SemivectorSpace, DEFAULT_CAP);
    let n = w.dim();
    let bad: Vec<usize> = (0..n).filter(|&i| !action_closed(w.components[i], w.scalars)).collect();
    let mut witness = None;
    if !bad.is_empty() {
        let a = rat(3, 7);
        let mut v = VecQ::zero(n);
        for &i in bad.iter().take(2) {
            v.0[i] = int(1);
        }
        c.push(Axiom::ScalarClosure, vec![format_rat(&a), v.to_string()]);
        witness = Some((format_rat(&a), v));
    }
    let mut s = Sampler::new(cfg);
    for _ in 0..cfg.samples {
        let (u, v) = (s.vec(&w.components), s.vec(&w.components));
        let a = s.comp(w.scalars.as_comp());
        if !w.contains(&u.add(&v)) && !c.push(Axiom::AddClosure, vec![u.to_string(), v.to_string()]) {
            break;
        }
        let au = u.scale(&a);
        if !w.contains(&au) && bad.is_empty() && !c.push(Axiom::ScalarClosure, vec![format_rat(&a), u.to_string()]) {
            break;
        }
    }
    let report = c.finish();
    SemiVecVerdict { holds: report.passed(), witness, report }
}

/// Rank over Q by fraction-exact Gaussian elimination.
pub fn rank(rows: &[VecQ]) -> usize {
    let mut m: Vec<Vec<Rat>> = rows.iter().map(|r| r.0.clone()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c] / m[r][c];
                for j in c..cols {
                    let t = m[r][j] * f;
                    m[i][j] -= t;
                }
            }
        }
        r += 1;
    }
    r
}

/// Inverse of a square matrix, `None` when singular.
pub fn invert(a: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = a.len();
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { int(1) } else { Rat::zero() }));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(c, p);
        let piv = m[c][c];
        for x in m[c].iter_mut() {
            *x /= piv;
        }
        for i in 0..n {
            if i != c && !m[i][c].is_zero() {
                let f = m[i][c];
                for j in 0..2 * n {
                    let t = m[c][j] * f;
                    m[i][j] -= t;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// A basis of Qⁿ that also generates `w` over its semifield, every element
/// uniquely. With `M` the matrix of basis columns this needs every column of
/// `M⁻¹` applied to generators of `w` to land in the semifield.
pub fn is_s_definite_basis(b: &[VecQ], n: usize, w: &SemiVecDescriptor) -> Result<bool> {
    if w.dim() != n {
        return Err(Error::DimensionMismatch(format!("descriptor has {} coordinates, space has {n}", w.dim())));
    }
    if let Some(v) = b.iter().find(|v| v.dim() != n) {
        return Err(Error::DimensionMismatch(format!("vector {v} does not have {n} coordinates")));
    }
    if b.len() != n || rank(b) != n || !is_semivector_space(w).holds {
        return Ok(false);
    }
    if !b.iter().all(|v| w.contains(v)) {
        return Ok(false);
    }
    // Q coordinates contain negatives, Q° coordinates over Z° need infinitely
    // many generators; neither has a finite basis.
    let k = w.scalars.as_comp();
    if !w.components.iter().all(|&c| c == k) {
        return Ok(false);
    }
    let cols: Vec<Vec<Rat>> = (0..n).map(|i| (0..n).map(|j| b[j].0[i]).collect()).collect();
    let inv = invert(&cols).expect("rank n");
    Ok(inv.iter().flatten().all(|x| k.member(x)))
}

/// `n` when some candidate admits a basis that is also a Q-basis of Qⁿ.
/// Such a candidate is `K°ⁿ` over `K°`, so the standard basis decides it.
pub fn s_definite_dimension(n: usize, candidates: &[SemiVecDescriptor]) -> Option<usize> {
    let std: Vec<VecQ> = (0..n).map(|i| VecQ::unit(n, i)).collect();
    candidates
        .iter()
        .any(|w| w.dim() == n && is_s_definite_basis(&std, n, w).unwrap_or(false))
        .then_some(n)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LinearMap {
    /// Row-major; `rows.len()` outputs by `rows[0].len()` inputs.
    Matrix {
        #[serde(with = "rat_rows")]
        rows: Vec<Vec<Rat>>,
    },
    /// Coordinatewise absolute value (not linear).
    Abs,
    Zero,
    Identity,
}

mod rat_rows {
    use super::{Rat, VecQ};
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[Vec<Rat>], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(|r| VecQ(r.clone())).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<Rat>>, D::Error> {
        Ok(Vec::<VecQ>::deserialize(d)?.into_iter().map(|v| v.0).collect())
    }
}

impl LinearMap {
    pub fn matrix(rows: &[&[i64]]) -> Self {
        LinearMap::Matrix { rows: rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect() }
    }

    /// Output dimension for an `n`-dimensional input; `Zero` keeps `out`.
    fn out_dim(&self, n: usize, out: usize) -> usize {
        match self {
            LinearMap::Matrix { rows } => rows.len(),
            LinearMap::Zero => out,
            _ => n,
        }
    }

    fn check_dims(&self, n: usize, out: usize) -> Result<()> {
        let ok = match self {
            LinearMap::Matrix { rows } => rows.len() == out && rows.iter().all(|r| r.len() == n),
            LinearMap::Zero => true,
            LinearMap::Abs | LinearMap::Identity => n == out,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(format!("map does not send {n} coordinates to {out}")))
        }
    }

    pub fn apply(&self, x: &VecQ, out: usize) -> VecQ {
        match self {
            LinearMap::Matrix { rows } => VecQ(
                rows.iter()
                    .map(|r| r.iter().zip(&x.0).map(|(a, b)| a * b).fold(Rat::zero(), |s, t| s + t))
                    .collect(),
            ),
            LinearMap::Abs => VecQ(x.0.iter().map(|v| v.abs()).collect()),
            LinearMap::Zero => VecQ::zero(self.out_dim(x.dim(), out)),
            LinearMap::Identity => x.clone(),
        }
    }

    /// Matrix form when the map is linear.
    fn as_matrix(&self, n: usize, out: usize) -> Option<Vec<Vec<Rat>>> {
        match self {
            LinearMap::Matrix { rows } => Some(rows.clone()),
            LinearMap::Zero => Some(vec![vec![Rat::zero(); n]; out]),
            LinearMap::Identity => Some((0..n).map(|i| VecQ::unit(n, i).0).collect()),
            LinearMap::Abs => None,
        }
    }
}

impl FromStr for LinearMap {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "abs" => Ok(LinearMap::Abs),
            "zero" => Ok(LinearMap::Zero),
            "identity" => Ok(LinearMap::Identity),
            _ => Err(Error::UnknownKind(format!("map expression `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictedMap {
    pub map: LinearMap,
    pub domain: SemiVecDescriptor,
    pub codomain: SemiVecDescriptor,
}

impl RestrictedMap {
    pub fn new(map: LinearMap, domain: SemiVecDescriptor, codomain: SemiVecDescriptor) -> Result<Self> {
        map.check_dims(domain.dim(), codomain.dim())?;
        Ok(Self { map, domain, codomain })
    }
}

/// Whether `m · from ⊆ to`.
fn term_in(m: &Rat, from: Comp, to: Comp) -> bool {
    if m.is_zero() || from == Comp::Zero {
        return true;
    }
    match to {
        Comp::Q => true,
        Comp::Zero => false,
        Comp::QNonNeg => m.is_positive() && from != Comp::Q,
        Comp::ZNonNeg => m.is_positive() && from == Comp::ZNonNeg && m.is_integer(),
    }
}

/// A point of `from` that `m` sends outside `to`.
fn term_witness(m: &Rat, from: Comp, to: Comp) -> Rat {
    let cands = [int(1), int(-1), rat(1, 2 * m.numer().abs().max(1))];
    cands
        .into_iter()
        .find(|x| from.member(x) && !to.member(&(m * x)))
        .unwrap_or_else(|| int(1))
}

/// Exact containment of `T(domain)` in the codomain: `None` when it holds,
/// otherwise a domain point mapped outside.
pub fn containment_witness(m: &RestrictedMap) -> Option<VecQ> {
    let (n, out) = (m.domain.dim(), m.codomain.dim());
    match m.map.as_matrix(n, out) {
        Some(rows) => {
            for (i, row) in rows.iter().enumerate() {
                for (j, a) in row.iter().enumerate() {
                    let (from, to) = (m.domain.components[j], m.codomain.components[i]);
                    if !term_in(a, from, to) {
                        let mut x = VecQ::zero(n);
                        x.0[j] = term_witness(a, from, to);
                        return Some(x);
                    }
                }
            }
            None
        }
        None => {
            // |x| per coordinate
            (0..n).find_map(|j| {
                let (from, to) = (m.domain.components[j], m.codomain.components[j]);
                let abs_from = if from == Comp::Q { Comp::QNonNeg } else { from };
                if term_in(&int(1), abs_from, to) {
                    None
                } else {
                    let mut x = VecQ::zero(n);
                    x.0[j] = [int(1), int(-1), rat(1, 2)]
                        .into_iter()
                        .find(|v| from.member(v) && !to.member(&v.abs()))
                        .unwrap_or_else(|| int(1));
                    Some(x)
                }
            })
        }
    }
}

pub fn verify_restricted_transformation(m: &RestrictedMap) -> AxiomReport<String> {
    verify_restricted_with(m, &AuditConfig::default())
}

pub fn verify_restricted_with(m: &RestrictedMap, cfg: &AuditConfig) -> AxiomReport<String> {
    let mut c = Collector::new(StructureClass::RestrictedMap, DEFAULT_CAP);
    let out = m.codomain.dim();
    let t = |x: &VecQ| m.map.apply(x, out);
    if let Some(x) = containment_witness(m) {
        c.push(Axiom::ImageContainment, vec![x.to_string(), t(&x).to_string()]);
    }
    let mut s = Sampler::new(cfg);
    for _ in 0..cfg.samples {
        let (u, v) = (s.vec(&m.domain.components), s.vec(&m.domain.components));
        let a = s.comp(m.domain.scalars.as_comp());
        let lhs = t(&u.scale(&a).add(&v));
        let rhs = t(&u).scale(&a).add(&t(&v));
        if lhs != rhs && !c.push(Axiom::Linearity, vec![format_rat(&a), u.to_string(), v.to_string()]) {
            break;
        }
        if !c.full() && !m.codomain.contains(&t(&u)) && !c.fails(Axiom::ImageContainment) {
            c.push(Axiom::ImageContainment, vec![u.to_string(), t(&u).to_string()]);
        }
    }
    c.finish()
}

/// Audits `T: Qⁿ → W` with additivity and homogeneity over all of Q.
pub fn verify_converging(t: &LinearMap, n: usize, w: &SemiVecDescriptor, cfg: &AuditConfig) -> Result<AxiomReport<String>> {
    t.check_dims(n, w.dim())?;
    let mut c = Collector::new(StructureClass::ConvergingMap, DEFAULT_CAP);
    let out = w.dim();
    let f = |x: &VecQ| t.apply(x, out);
    let mut s = Sampler::new(cfg);
    let mut pairs: Vec<(VecQ, VecQ, Rat)> = (0..n).map(|i| (VecQ::unit(n, i), VecQ::unit(n, i).scale(&int(-1)), int(-1))).collect();
    pairs.extend((0..cfg.samples).map(|_| {
        let a = s.comp(Comp::Q);
        (s.full(n), s.full(n), a)
    }));
    for (x, y, a) in &pairs {
        if f(&x.add(y)) != f(x).add(&f(y)) && !c.push(Axiom::Additivity, vec![x.to_string(), y.to_string()]) {
            break;
        }
        if f(&x.scale(a)) != f(x).scale(a) && !c.push(Axiom::Homogeneity, vec![format_rat(a), x.to_string()]) {
            break;
        }
        if !w.contains(&f(x)) && !c.fails(Axiom::ImageContainment) && !c.push(Axiom::ImageContainment, vec![x.to_string(), f(x).to_string()]) {
            break;
        }
    }
    Ok(c.finish())
}

/// Audits `T: W → Qⁿ` for `T(ax + y) = aT(x) + T(y)`, `a` in Q, `x, y` in W.
pub fn verify_diverging(t: &LinearMap, w: &SemiVecDescriptor, n: usize, cfg: &AuditConfig) -> Result<AxiomReport<String>> {
    t.check_dims(w.dim(), n)?;
    let mut c = Collector::new(StructureClass::DivergingMap, DEFAULT_CAP);
    let f = |x: &VecQ| t.apply(x, n);
    let mut s = Sampler::new(cfg);
    for _ in 0..cfg.samples {
        let (x, y, a) = (s.vec(&w.components), s.vec(&w.components), s.comp(Comp::Q));
        if f(&x.scale(&a).add(&y)) != f(&x).scale(&a).add(&f(&y))
            && !c.push(Axiom::Linearity, vec![format_rat(&a), x.to_string(), y.to_string()])
        {
            break;
        }
    }
    Ok(c.finish())
}

fn form_value(x: &VecQ, y: &VecQ, form: Option<&[Vec<Rat>]>) -> Rat {
    match form {
        None => x.0.iter().zip(&y.0).map(|(a, b)| a * b).fold(Rat::zero(), |s, t| s + t),
        Some(g) => {
            let mut s = Rat::zero();
            for (i, row) in g.iter().enumerate() {
                for (j, gij) in row.iter().enumerate() {
                    s += gij * x.0[i] * y.0[j];
                }
            }
            s
        }
    }
}

/// `Σ form_ij x_i y_j`, the identity form when `form` is `None`.
pub fn inner_product(x: &VecQ, y: &VecQ, w: &SemiVecDescriptor, form: Option<&[Vec<Rat>]>) -> Result<Rat> {
    for v in [x, y] {
        if !w.contains(v) {
            return Err(Error::NotInLattice(format!("{v} is not in {}", w.describe())));
        }
    }
    if let Some(g) = form {
        if g.len() != w.dim() || g.iter().any(|r| r.len() != w.dim()) {
            return Err(Error::DimensionMismatch("form is not square of the space's dimension".into()));
        }
    }
    Ok(form_value(x, y, form))
}

/// Additivity, scalar compatibility and positivity on samples. Conjugate
/// symmetry is automatic over Q.
pub fn audit_inner_product(w: &SemiVecDescriptor, form: Option<&[Vec<Rat>]>, cfg: &AuditConfig) -> AxiomReport<String> {
    let mut c = Collector::new(StructureClass::InnerProduct, DEFAULT_CAP);
    let mut s = Sampler::new(cfg);
    let ip = |a: &VecQ, b: &VecQ| form_value(a, b, form);
    for _ in 0..cfg.samples {
        let (a, b, g) = (s.vec(&w.components), s.vec(&w.components), s.vec(&w.components));
        let k = s.comp(w.scalars.as_comp());
        if ip(&a.add(&b), &g) != ip(&a, &g) + ip(&b, &g) && !c.push(Axiom::Additivity, vec![a.to_string(), b.to_string(), g.to_string()]) {
            break;
        }
        if ip(&a.scale(&k), &b) != k * ip(&a, &b) && !c.push(Axiom::ScalarCompatibility, vec![format_rat(&k), a.to_string(), b.to_string()]) {
            break;
        }
        if !a.is_zero() && !ip(&a, &a).is_positive() && !c.push(Axiom::Positivity, vec![a.to_string()]) {
            break;
        }
    }
    c.finish()
}

/// Exhaustive facts about orthogonality in Z°ⁿ with coordinates up to `bound`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrthogonalityReport {
    pub n: usize,
    pub bound: i64,
    pub pairs_checked: usize,
    /// `(x|y) = 0` exactly when the supports of x and y are disjoint.
    pub disjoint_support_iff_orthogonal: bool,
    /// Only 0 satisfies `(x|x) = 0`.
    pub self_orthogonal_only_zero: bool,
    /// Only 0 is orthogonal to every vector.
    pub orthogonal_to_all_only_zero: bool,
    /// A nonzero orthogonal pair, when one exists.
    pub nonzero_orthogonal_pair: Option<(VecQ, VecQ)>,
}

pub fn orthogonality_report(n: usize, bound: i64) -> OrthogonalityReport {
    let pts: Vec<VecQ> = itertools::Itertools::multi_cartesian_product((0..n).map(|_| 0..=bound))
        .map(|v| VecQ::ints(&v))
        .collect();
    let pts = if n == 0 { vec![VecQ::zero(0)] } else { pts };
    let mut iff = true;
    let mut pair = None;
    let mut checked = 0;
    for x in &pts {
        for y in &pts {
            checked += 1;
            let orth = form_value(x, y, None).is_zero();
            let disjoint = x.0.iter().zip(&y.0).all(|(a, b)| a.is_zero() || b.is_zero());
            iff &= orth == disjoint;
            if orth && pair.is_none() && !x.is_zero() && !y.is_zero() {
                pair = Some((x.clone(), y.clone()));
            }
        }
    }
    let self_zero = pts.iter().all(|x| x.is_zero() || !form_value(x, x, None).is_zero());
    let all_zero = pts
        .iter()
        .filter(|x| pts.iter().all(|y| form_value(x, y, None).is_zero()))
        .all(VecQ::is_zero);
    OrthogonalityReport {
        n,
        bound,
        pairs_checked: checked,
        disjoint_support_iff_orthogonal: iff,
        self_orthogonal_only_zero: self_zero,
        orthogonal_to_all_only_zero: all_zero,
        nonzero_orthogonal_pair: pair,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProductRule {
    Coordinatewise,
    Matrix,
    TruncatedPolynomial,
}

impl FromStr for ProductRule {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "coordinatewise" => Ok(ProductRule::Coordinatewise),
            "matrix" => Ok(ProductRule::Matrix),
            "truncated-polynomial" => Ok(ProductRule::TruncatedPolynomial),
            _ => Err(Error::UnsupportedProduct(s.to_string())),
        }
    }
}

/// `size` is the number of coordinates, the matrix order, or the truncation
/// bound (`x^(size+1) = 1`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemilinearDescriptor {
    pub rule: ProductRule,
    pub size: usize,
    pub component: Comp,
    pub scalars: Semifield,
}

impl SemilinearDescriptor {
    pub fn element_len(&self) -> usize {
        match self.rule {
            ProductRule::Coordinatewise => self.size,
            ProductRule::Matrix => self.size * self.size,
            ProductRule::TruncatedPolynomial => self.size + 1,
        }
    }

    pub fn product(&self, u: &VecQ, v: &VecQ) -> VecQ {
        match self.rule {
            ProductRule::Coordinatewise => VecQ(u.0.iter().zip(&v.0).map(|(a, b)| a * b).collect()),
            ProductRule::Matrix => {
                let k = self.size;
                let mut out = VecQ::zero(k * k);
                for i in 0..k {
                    for j in 0..k {
                        out.0[i * k + j] = (0..k).map(|l| u.0[i * k + l] * v.0[l * k + j]).fold(Rat::zero(), |s, t| s + t);
                    }
                }
                out
            }
            ProductRule::TruncatedPolynomial => VecQ(TruncPolyAlgebra::new(self.size).mul(&u.0, &v.0)),
        }
    }

    fn space(&self) -> SemiVecDescriptor {
        SemiVecDescriptor::uniform(self.component, self.element_len(), self.scalars)
    }
}

pub fn is_semilinear_algebra(d: &SemilinearDescriptor, cfg: &AuditConfig) -> AxiomReport<String> {
    let mut c = Collector::new(StructureClass::SemilinearAlgebra, DEFAULT_CAP);
    let w = d.space();
    let sv = is_semivector_space_with(&w, cfg);
    for v in sv.report.violations {
        c.push(v.axiom, v.witness);
    }
    let mut s = Sampler::new(&AuditConfig { magnitude: cfg.magnitude.min(6), ..*cfg });
    let p = |a: &VecQ, b: &VecQ| d.product(a, b);
    for _ in 0..cfg.samples {
        let (u, v, t) = (s.vec(&w.components), s.vec(&w.components), s.vec(&w.components));
        let k = s.comp(d.scalars.as_comp());
        let show = || vec![u.to_string(), v.to_string(), t.to_string()];
        let checks = [
            (Axiom::MulClosure, w.contains(&p(&u, &v))),
            (Axiom::MulAssociativity, p(&u, &p(&v, &t)) == p(&p(&u, &v), &t)),
            (Axiom::LeftDistributivity, p(&u, &v.add(&t)) == p(&u, &v).add(&p(&u, &t))),
            (Axiom::RightDistributivity, p(&u.add(&v), &t) == p(&u, &t).add(&p(&v, &t))),
        ];
        for (ax, ok) in checks {
            if !ok && !c.fails(ax) {
                c.push(ax, show());
            }
        }
        let kuv = p(&u, &v).scale(&k);
        if (kuv != p(&u.scale(&k), &v) || kuv != p(&u, &v.scale(&k))) && !c.fails(Axiom::ScalarCompatibility) {
            c.push(Axiom::ScalarCompatibility, vec![format_rat(&k), u.to_string(), v.to_string()]);
        }
    }
    c.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z0(n: usize) -> SemiVecDescriptor {
        SemiVecDescriptor::uniform(Comp::ZNonNeg, n, Semifield::ZNonNeg)
    }

    #[test]
    fn semivector_verdicts() {
        assert!(is_semivector_space(&z0(3)).holds);
        let bad = SemiVecDescriptor::uniform(Comp::ZNonNeg, 4, Semifield::QNonNeg);
        let v = is_semivector_space(&bad);
        assert!(!v.holds);
        let (a, w) = v.witness.unwrap();
        assert_eq!(a, "3/7");
        assert_eq!(w, VecQ::ints(&[1, 1, 0, 0]));
        assert!(is_semivector_space(&SemiVecDescriptor::uniform(Comp::Zero, 3, Semifield::QNonNeg)).holds);
    }

    #[test]
    fn basis_verdicts() {
        let std: Vec<VecQ> = (0..3).map(|i| VecQ::unit(3, i)).collect();
        assert!(is_s_definite_basis(&std, 3, &z0(3)).unwrap());
        let odd = [VecQ::ints(&[0, 3, 0]), VecQ::ints(&[0, 0, 1]), VecQ::ints(&[4, 0, 0])];
        assert!(!is_s_definite_basis(&odd, 3, &z0(3)).unwrap());
        let zero = SemiVecDescriptor::uniform(Comp::Zero, 3, Semifield::ZNonNeg);
        assert!(!is_s_definite_basis(&std, 3, &zero).unwrap());
        assert!(matches!(is_s_definite_basis(&std, 4, &z0(3)), Err(Error::DimensionMismatch(_))));
        let perm = [VecQ::ints(&[0, 1, 0]), VecQ::ints(&[0, 0, 1]), VecQ::ints(&[1, 0, 0])];
        assert!(is_s_definite_basis(&perm, 3, &z0(3)).unwrap());
    }

    #[test]
    fn dimensions() {
        assert_eq!(s_definite_dimension(6, &[z0(6)]), Some(6));
        let q0 = SemiVecDescriptor::uniform(Comp::QNonNeg, 3, Semifield::ZNonNeg);
        assert_eq!(s_definite_dimension(3, &[q0]), None);
        assert_eq!(s_definite_dimension(1, &[z0(1)]), Some(1));
    }

    #[test]
    fn restricted_maps() {
        let t = LinearMap::matrix(&[&[1, 1, 0, 0, 0], &[0, 0, 0, 1, 0], &[0, 1, 0, 0, 0], &[0, 0, 1, 1, 1]]);
        let cod = SemiVecDescriptor::new(vec![Comp::QNonNeg, Comp::QNonNeg, Comp::ZNonNeg, Comp::QNonNeg], Semifield::ZNonNeg);
        let m = RestrictedMap::new(t, z0(5), cod).unwrap();
        assert!(verify_restricted_transformation(&m).passed());
        let id = RestrictedMap::new(LinearMap::Identity, z0(3), z0(3)).unwrap();
        assert!(verify_restricted_transformation(&id).passed());
        let diff = RestrictedMap::new(LinearMap::matrix(&[&[1, -1]]), z0(2), z0(1)).unwrap();
        let r = verify_restricted_transformation(&diff);
        assert_eq!(r.first(Axiom::ImageContainment).unwrap().witness[0], "(0, 1)");
        assert!(RestrictedMap::new(LinearMap::matrix(&[&[1]]), z0(2), z0(1)).is_err());
    }

    #[test]
    fn converging_and_diverging() {
        let cfg = AuditConfig::default();
        let q4 = SemiVecDescriptor::uniform(Comp::QNonNeg, 4, Semifield::QNonNeg);
        let t = LinearMap::matrix(&[&[1, -1, 0, 0], &[0, 1, -1, 0], &[0, 0, 1, -1], &[-1, 0, 0, 1]]);
        assert!(verify_diverging(&t, &q4, 4, &cfg).unwrap().passed());
        assert!(verify_diverging(&LinearMap::Zero, &q4, 4, &cfg).unwrap().passed());
        assert!(verify_converging(&LinearMap::Zero, 4, &q4, &cfg).unwrap().passed());
        let r = verify_converging(&LinearMap::Abs, 3, &SemiVecDescriptor::uniform(Comp::QNonNeg, 3, Semifield::QNonNeg), &cfg).unwrap();
        let v = r.first(Axiom::Additivity).unwrap();
        assert_eq!(v.witness, vec!["(1, 0, 0)", "(-1, 0, 0)"]);
        let r = verify_converging(&LinearMap::Identity, 3, &z0(3), &cfg).unwrap();
        assert!(!r.passed());
    }

    #[test]
    fn inner_products() {
        let w = z0(4);
        let cfg = AuditConfig::default();
        assert!(audit_inner_product(&w, None, &cfg).passed());
        let x = VecQ::ints(&[1, 2, 0, 3]);
        assert_eq!(inner_product(&x, &VecQ::zero(4), &w, None).unwrap(), int(0));
        assert!(matches!(inner_product(&VecQ::ints(&[-1, 0, 0, 0]), &x, &w, None), Err(Error::NotInLattice(_))));
        let rep = orthogonality_report(4, 3);
        assert!(rep.disjoint_support_iff_orthogonal && rep.self_orthogonal_only_zero && rep.orthogonal_to_all_only_zero);
        assert!(rep.nonzero_orthogonal_pair.is_some());
    }

    #[test]
    fn semilinear() {
        let cfg = AuditConfig { samples: 200, ..AuditConfig::default() };
        for (rule, size, comp) in [
            (ProductRule::Coordinatewise, 3, Comp::ZNonNeg),
            (ProductRule::Matrix, 2, Comp::ZNonNeg),
            (ProductRule::TruncatedPolynomial, 5, Comp::QNonNeg),
        ] {
            let d = SemilinearDescriptor { rule, size, component: comp, scalars: Semifield::ZNonNeg };
            assert!(is_semilinear_algebra(&d, &cfg).passed(), "{rule:?}");
        }
        let bad = SemilinearDescriptor { rule: ProductRule::Coordinatewise, size: 2, component: Comp::ZNonNeg, scalars: Semifield::QNonNeg };
        assert!(!is_semilinear_algebra(&bad, &cfg).passed());
        assert!(matches!("cross".parse::<ProductRule>(), Err(Error::UnsupportedProduct(_))));
    }

    fn comp() -> impl Strategy<Value = Comp> {
        prop_oneof![Just(Comp::ZNonNeg), Just(Comp::QNonNeg), Just(Comp::Q), Just(Comp::Zero)]
    }

    proptest! {
        #[test]
        fn containment_matches_lattice_scan(
            rows in proptest::collection::vec(proptest::collection::vec(-2i64..=2, 2), 2),
            dom in proptest::collection::vec(comp(), 2),
            cod in proptest::collection::vec(comp(), 2),
        ) {
            let m = RestrictedMap::new(
                LinearMap::Matrix { rows: rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect() },
                SemiVecDescriptor::new(dom.clone(), Semifield::ZNonNeg),
                SemiVecDescriptor::new(cod, Semifield::ZNonNeg),
            ).unwrap();
            let grid: Vec<Rat> = (-40..=40).map(|k| rat(k, 4)).collect();
            let mut escapes = false;
            for a in &grid {
                for b in &grid {
                    let x = VecQ(vec![*a, *b]);
                    if m.domain.contains(&x) && !m.codomain.contains(&m.map.apply(&x, 2)) {
                        escapes = true;
                    }
                }
            }
            let w = containment_witness(&m);
            prop_assert_eq!(w.is_some(), escapes);
            if let Some(x) = w {
                prop_assert!(m.domain.contains(&x) && !m.codomain.contains(&m.map.apply(&x, 2)));
            }
        }

        #[test]
        fn rank_of_identity_blocks(n in 1usize..6, k in 1i64..5) {
            let b: Vec<VecQ> = (0..n).map(|i| VecQ::unit(n, i).scale(&int(k))).collect();
            prop_assert_eq!(rank(&b), n);
            prop_assert_eq!(is_s_definite_basis(&b, n, &z0(n)).unwrap(), k == 1);
        }
    }
}
