//! Finite magmas and two-operation tables, axiom checkers for every
//! structure class in use, and enumeration of closed subsets.
//!
//! Elements are dense indices `0..n`; labels only matter for display.
//! Cayley tables are row-major with the row as the left operand.

use std::collections::{HashSet, VecDeque};

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type ElementId = usize;

pub const DEFAULT_CAP: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "MagmaRepr", into = "MagmaRepr")]
pub struct FiniteMagma {
    labels: Vec<String>,
    table: Vec<ElementId>,
}

#[derive(Serialize, Deserialize)]
struct MagmaRepr {
    labels: Vec<String>,
    table: Vec<Vec<ElementId>>,
}

impl TryFrom<MagmaRepr> for FiniteMagma {
    type Error = Error;
    fn try_from(r: MagmaRepr) -> Result<Self> {
        FiniteMagma::new(r.labels, r.table)
    }
}

impl From<FiniteMagma> for MagmaRepr {
    fn from(m: FiniteMagma) -> Self {
        MagmaRepr {
            table: m.rows(),
            labels: m.labels,
        }
    }
}

fn validate_labels(labels: &[String]) -> Result<()> {
    let mut seen = HashSet::new();
    for l in labels {
        if !seen.insert(l) {
            return Err(Error::Malformed(format!("duplicate element label `{l}`")));
        }
    }
    Ok(())
}

fn flatten(n: usize, rows: Vec<Vec<ElementId>>, what: &str) -> Result<Vec<ElementId>> {
    if rows.len() != n {
        return Err(Error::TableShape(format!(
            "{what} table has {} rows, expected {n}",
            rows.len()
        )));
    }
    let mut table = Vec::with_capacity(n * n);
    for (i, row) in rows.into_iter().enumerate() {
        if row.len() != n {
            return Err(Error::TableShape(format!(
                "{what} table row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
        if let Some((j, v)) = row.iter().enumerate().find(|(_, &v)| v >= n) {
            return Err(Error::TableShape(format!(
                "{what} table entry ({i}, {j}) = {v} is not an element index below {n}"
            )));
        }
        table.extend(row);
    }
    Ok(table)
}

impl FiniteMagma {
    pub fn new(labels: Vec<String>, rows: Vec<Vec<ElementId>>) -> Result<Self> {
        validate_labels(&labels)?;
        let table = flatten(labels.len(), rows, "operation")?;
        Ok(Self { labels, table })
    }

    pub fn from_fn(labels: Vec<String>, op: impl Fn(ElementId, ElementId) -> ElementId) -> Result<Self> {
        let n = labels.len();
        let rows = (0..n).map(|a| (0..n).map(|b| op(a, b)).collect()).collect();
        Self::new(labels, rows)
    }

    /// Labels `0..n` as decimal strings.
    pub fn numbered(n: usize, op: impl Fn(ElementId, ElementId) -> ElementId) -> Result<Self> {
        Self::from_fn((0..n).map(|i| i.to_string()).collect(), op)
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: ElementId) -> &str {
        &self.labels[a]
    }

    pub fn index_of(&self, label: &str) -> Option<ElementId> {
        self.labels.iter().position(|l| l == label)
    }

    #[inline]
    pub fn op(&self, a: ElementId, b: ElementId) -> ElementId {
        self.table[a * self.size() + b]
    }

    pub fn rows(&self) -> Vec<Vec<ElementId>> {
        let n = self.size();
        (0..n).map(|i| self.table[i * n..(i + 1) * n].to_vec()).collect()
    }

    pub fn elements(&self) -> Vec<ElementId> {
        (0..self.size()).collect()
    }

    pub fn is_closed(&self, subset: &[ElementId]) -> bool {
        let mask = mask_of(self.size(), subset);
        subset
            .iter()
            .all(|&a| subset.iter().all(|&b| mask.contains(self.op(a, b))))
    }

    /// Smallest closed subset containing `gens`, sorted.
    pub fn closure(&self, gens: &[ElementId]) -> Vec<ElementId> {
        closure_multi(&[self], &[], gens)
    }

    /// Two-sided identity of the whole magma.
    pub fn identity(&self) -> Option<ElementId> {
        identity_on(self, &self.elements())
    }

    /// The sub-magma on a closed subset, relabelled densely in the order given.
    pub fn restrict(&self, subset: &[ElementId]) -> Result<FiniteMagma> {
        if !self.is_closed(subset) {
            return Err(Error::NotClosed);
        }
        let pos = |x: ElementId| subset.iter().position(|&s| s == x).unwrap();
        let labels = subset.iter().map(|&a| self.labels[a].clone()).collect();
        FiniteMagma::from_fn(labels, |i, j| pos(self.op(subset[i], subset[j])))
    }

    pub fn sub_table(&self, subset: &[ElementId]) -> Vec<Vec<ElementId>> {
        subset
            .iter()
            .map(|&a| subset.iter().map(|&b| self.op(a, b)).collect())
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RingRepr", into = "RingRepr")]
pub struct FiniteRingTable {
    add: FiniteMagma,
    mul: FiniteMagma,
}

#[derive(Serialize, Deserialize)]
struct RingRepr {
    labels: Vec<String>,
    add: Vec<Vec<ElementId>>,
    mul: Vec<Vec<ElementId>>,
}

impl TryFrom<RingRepr> for FiniteRingTable {
    type Error = Error;
    fn try_from(r: RingRepr) -> Result<Self> {
        FiniteRingTable::new(r.labels, r.add, r.mul)
    }
}

impl From<FiniteRingTable> for RingRepr {
    fn from(r: FiniteRingTable) -> Self {
        RingRepr {
            add: r.add.rows(),
            mul: r.mul.rows(),
            labels: r.add.labels,
        }
    }
}

impl FiniteRingTable {
    pub fn new(labels: Vec<String>, add: Vec<Vec<ElementId>>, mul: Vec<Vec<ElementId>>) -> Result<Self> {
        validate_labels(&labels)?;
        let n = labels.len();
        let add = flatten(n, add, "addition")?;
        let mul = flatten(n, mul, "multiplication")?;
        Ok(Self {
            add: FiniteMagma {
                labels: labels.clone(),
                table: add,
            },
            mul: FiniteMagma { labels, table: mul },
        })
    }

    pub fn from_fns(
        labels: Vec<String>,
        add: impl Fn(ElementId, ElementId) -> ElementId,
        mul: impl Fn(ElementId, ElementId) -> ElementId,
    ) -> Result<Self> {
        let n = labels.len();
        let a = (0..n).map(|x| (0..n).map(|y| add(x, y)).collect()).collect();
        let m = (0..n).map(|x| (0..n).map(|y| mul(x, y)).collect()).collect();
        Self::new(labels, a, m)
    }

    pub fn size(&self) -> usize {
        self.add.size()
    }

    pub fn labels(&self) -> &[String] {
        self.add.labels()
    }

    pub fn label(&self, a: ElementId) -> &str {
        self.add.label(a)
    }

    pub fn elements(&self) -> Vec<ElementId> {
        self.add.elements()
    }

    pub fn additive(&self) -> &FiniteMagma {
        &self.add
    }

    pub fn multiplicative(&self) -> &FiniteMagma {
        &self.mul
    }

    #[inline]
    pub fn add(&self, a: ElementId, b: ElementId) -> ElementId {
        self.add.op(a, b)
    }

    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        self.mul.op(a, b)
    }

    pub fn zero(&self) -> Option<ElementId> {
        self.add.identity()
    }

    pub fn one(&self) -> Option<ElementId> {
        self.mul.identity()
    }

    pub fn is_closed(&self, subset: &[ElementId]) -> bool {
        self.add.is_closed(subset) && self.mul.is_closed(subset)
    }

    pub fn closure(&self, gens: &[ElementId]) -> Vec<ElementId> {
        closure_multi(&[&self.add, &self.mul], &[], gens)
    }

    pub fn restrict(&self, subset: &[ElementId]) -> Result<FiniteRingTable> {
        let add = self.add.restrict(subset)?;
        let mul = self.mul.restrict(subset)?;
        Ok(FiniteRingTable { add, mul })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StructureClass {
    Semigroup,
    Monoid,
    Group,
    CommutativeMagma,
    CommutativeSemigroup,
    AbelianGroup,
    Ring,
    CommutativeRing,
    DivisionRing,
    Field,
    Semiring,
    Semifield,
    NearRing,
    SeminearRing,
    DistributiveLattice,
    NGroup,
    Homomorphism,
    SemivectorSpace,
    RestrictedMap,
    ConvergingMap,
    DivergingMap,
    InnerProduct,
    SemilinearAlgebra,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Closure,
    Associativity,
    Identity,
    Inverse,
    Commutativity,
    AddClosure,
    AddAssociativity,
    AddIdentity,
    AddInverse,
    AddCommutativity,
    MulClosure,
    MulAssociativity,
    MulIdentity,
    MulInverse,
    MulCommutativity,
    LeftDistributivity,
    RightDistributivity,
    Strictness,
    ZeroDivisor,
    Nontrivial,
    Idempotence,
    ActionSum,
    ActionProduct,
    PreservesAdd,
    PreservesMul,
    PreservesOp,
    ScalarClosure,
    Additivity,
    Homogeneity,
    Linearity,
    ImageContainment,
    Symmetry,
    Positivity,
    ScalarCompatibility,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation<W = ElementId> {
    pub axiom: Axiom,
    pub witness: Vec<W>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport<W = ElementId> {
    pub class: StructureClass,
    pub violations: Vec<Violation<W>>,
    /// Set when scanning stopped at the violation cap.
    pub truncated: bool,
}

impl<W> AxiomReport<W> {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn fails(&self, axiom: Axiom) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }

    pub fn first(&self, axiom: Axiom) -> Option<&Violation<W>> {
        self.violations.iter().find(|v| v.axiom == axiom)
    }
}

/// Collects violations up to a cap.
pub struct Collector<W> {
    class: StructureClass,
    cap: usize,
    violations: Vec<Violation<W>>,
    truncated: bool,
}

impl<W> Collector<W> {
    pub fn new(class: StructureClass, cap: usize) -> Self {
        Self {
            class,
            cap,
            violations: Vec::new(),
            truncated: false,
        }
    }

    /// Records a violation; returns false once the cap is hit.
    pub fn push(&mut self, axiom: Axiom, witness: Vec<W>) -> bool {
        if self.violations.len() >= self.cap {
            self.truncated = true;
            return false;
        }
        self.violations.push(Violation { axiom, witness });
        true
    }

    pub fn full(&self) -> bool {
        self.truncated
    }

    pub fn fails(&self, axiom: Axiom) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }

    pub fn finish(self) -> AxiomReport<W> {
        AxiomReport {
            class: self.class,
            violations: self.violations,
            truncated: self.truncated,
        }
    }
}

fn mask_of(n: usize, subset: &[ElementId]) -> FixedBitSet {
    let mut m = FixedBitSet::with_capacity(n);
    for &a in subset {
        m.insert(a);
    }
    m
}

fn identity_on(m: &FiniteMagma, sub: &[ElementId]) -> Option<ElementId> {
    sub.iter()
        .copied()
        .find(|&e| sub.iter().all(|&a| m.op(e, a) == a && m.op(a, e) == a))
}

type C = Collector<ElementId>;

fn scan_closure(m: &FiniteMagma, sub: &[ElementId], axiom: Axiom, c: &mut C) {
    let mask = mask_of(m.size(), sub);
    for &a in sub {
        for &b in sub {
            if !mask.contains(m.op(a, b)) && !c.push(axiom, vec![a, b]) {
                return;
            }
        }
    }
}

fn scan_assoc(m: &FiniteMagma, sub: &[ElementId], axiom: Axiom, c: &mut C) {
    for &a in sub {
        for &b in sub {
            let ab = m.op(a, b);
            for &x in sub {
                if m.op(ab, x) != m.op(a, m.op(b, x)) && !c.push(axiom, vec![a, b, x]) {
                    return;
                }
            }
        }
    }
}

fn scan_comm(m: &FiniteMagma, sub: &[ElementId], axiom: Axiom, c: &mut C) {
    for (i, &a) in sub.iter().enumerate() {
        for &b in &sub[i + 1..] {
            if m.op(a, b) != m.op(b, a) && !c.push(axiom, vec![a, b]) {
                return;
            }
        }
    }
}

/// Identity and inverses; returns the identity if one exists.
fn scan_group_part(
    m: &FiniteMagma,
    sub: &[ElementId],
    (id_ax, inv_ax): (Axiom, Axiom),
    c: &mut C,
) -> Option<ElementId> {
    let Some(e) = identity_on(m, sub) else {
        c.push(id_ax, vec![]);
        return None;
    };
    if inv_ax != id_ax {
        for &a in sub {
            let has = sub.iter().any(|&b| m.op(a, b) == e && m.op(b, a) == e);
            if !has && !c.push(inv_ax, vec![a]) {
                break;
            }
        }
    }
    Some(e)
}

fn scan_right_dist(r: &FiniteRingTable, sub: &[ElementId], c: &mut C) {
    for &a in sub {
        for &b in sub {
            let ab = r.add(a, b);
            for &x in sub {
                if r.mul(ab, x) != r.add(r.mul(a, x), r.mul(b, x))
                    && !c.push(Axiom::RightDistributivity, vec![a, b, x])
                {
                    return;
                }
            }
        }
    }
}

fn scan_left_dist(r: &FiniteRingTable, sub: &[ElementId], c: &mut C) {
    for &a in sub {
        for &b in sub {
            for &x in sub {
                if r.mul(a, r.add(b, x)) != r.add(r.mul(a, b), r.mul(a, x))
                    && !c.push(Axiom::LeftDistributivity, vec![a, b, x])
                {
                    return;
                }
            }
        }
    }
}

fn scan_zero_divisors(r: &FiniteRingTable, sub: &[ElementId], zero: ElementId, c: &mut C) {
    for &a in sub.iter().filter(|&&a| a != zero) {
        for &b in sub.iter().filter(|&&b| b != zero) {
            if r.mul(a, b) == zero && !c.push(Axiom::ZeroDivisor, vec![a, b]) {
                return;
            }
        }
    }
}

/// Axiom checker with a configurable violation cap. The `*_on` methods check
/// the restriction of the operations to a subset without materialising it.
#[derive(Debug, Clone, Copy)]
pub struct Checker {
    pub cap: usize,
}

impl Default for Checker {
    fn default() -> Self {
        Self { cap: DEFAULT_CAP }
    }
}

impl Checker {
    pub fn new(cap: usize) -> Self {
        Self { cap: cap.max(1) }
    }

    pub fn semigroup_on(&self, m: &FiniteMagma, sub: &[ElementId]) -> AxiomReport {
        let mut c = C::new(StructureClass::Semigroup, self.cap);
        scan_closure(m, sub, Axiom::Closure, &mut c);
        scan_assoc(m, sub, Axiom::Associativity, &mut c);
        c.finish()
    }

    pub fn monoid_on(&self, m: &FiniteMagma, sub: &[ElementId]) -> AxiomReport {
        let mut c = C::new(StructureClass::Monoid, self.cap);
        scan_closure(m, sub, Axiom::Closure, &mut c);
        scan_assoc(m, sub, Axiom::Associativity, &mut c);
        scan_group_part(m, sub, (Axiom::Identity, Axiom::Identity), &mut c);
        c.finish()
    }

    pub fn group_on(&self, m: &FiniteMagma, sub: &[ElementId]) -> AxiomReport {
        let mut c = C::new(StructureClass::Group, self.cap);
        scan_closure(m, sub, Axiom::Closure, &mut c);
        scan_assoc(m, sub, Axiom::Associativity, &mut c);
        scan_group_part(m, sub, (Axiom::Identity, Axiom::Inverse), &mut c);
        c.finish()
    }

    pub fn commutative_on(&self, m: &FiniteMagma, sub: &[ElementId]) -> AxiomReport {
        let mut c = C::new(StructureClass::CommutativeMagma, self.cap);
        scan_comm(m, sub, Axiom::Commutativity, &mut c);
        c.finish()
    }

    pub fn commutative_semigroup_on(&self, m: &FiniteMagma, sub: &[ElementId]) -> AxiomReport {
        let mut c = C::new(StructureClass::CommutativeSemigroup, self.cap);
        scan_closure(m, sub, Axiom::Closure, &mut c);
        scan_assoc(m, sub, Axiom::Associativity, &mut c);
        scan_comm(m, sub, Axiom::Commutativity, &mut c);
        c.finish()
    }

    pub fn abelian_group_on(&self, m: &FiniteMagma, sub: &[ElementId]) -> AxiomReport {
        let mut c = C::new(StructureClass::AbelianGroup, self.cap);
        scan_closure(m, sub, Axiom::Closure, &mut c);
        scan_assoc(m, sub, Axiom::Associativity, &mut c);
        scan_group_part(m, sub, (Axiom::Identity, Axiom::Inverse), &mut c);
        scan_comm(m, sub, Axiom::Commutativity, &mut c);
        c.finish()
    }

    fn additive_group(&self, r: &FiniteRingTable, sub: &[ElementId], c: &mut C) -> Option<ElementId> {
        scan_closure(&r.add, sub, Axiom::AddClosure, c);
        scan_assoc(&r.add, sub, Axiom::AddAssociativity, c);
        scan_group_part(&r.add, sub, (Axiom::AddIdentity, Axiom::AddInverse), c)
    }

    fn mul_semigroup(&self, r: &FiniteRingTable, sub: &[ElementId], c: &mut C) {
        scan_closure(&r.mul, sub, Axiom::MulClosure, c);
        scan_assoc(&r.mul, sub, Axiom::MulAssociativity, c);
    }

    pub fn ring_on(&self, r: &FiniteRingTable, sub: &[ElementId]) -> AxiomReport {
        let mut c = C::new(StructureClass::Ring, self.cap);
        self.additive_group(r, sub, &mut c);
        self.mul_semigroup(r, sub, &mut c);
        scan_left_dist(r, sub, &mut c);
        scan_right_dist(r, sub, &mut c);
        c.finish()
    }

    pub fn commutative_ring_on(&self, r: &FiniteRingTable, sub: &[ElementId]) -> AxiomReport {
        let mut c = C::new(StructureClass::CommutativeRing, self.cap);
        self.additive_group(r, sub, &mut c);
        self.mul_semigroup(r, sub, &mut c);
        scan_comm(&r.mul, sub, Axiom::MulCommutativity, &mut c);
        scan_left_dist(r, sub, &mut c);
        scan_right_dist(r, sub, &mut c);
        c.finish()
    }

    fn division_like(&self, r: &FiniteRingTable, sub: &[ElementId], commutative: bool) -> AxiomReport {
        let class = if commutative {
            StructureClass::Field
        } else {
            StructureClass::DivisionRing
        };
        let mut c = C::new(class, self.cap);
        let zero = self.additive_group(r, sub, &mut c);
        self.mul_semigroup(r, sub, &mut c);
        if commutative {
            scan_comm(&r.mul, sub, Axiom::MulCommutativity, &mut c);
        }
        scan_left_dist(r, sub, &mut c);
        scan_right_dist(r, sub, &mut c);
        if sub.len() < 2 {
            c.push(Axiom::Nontrivial, sub.to_vec());
        }
        if let Some(z) = zero {
            scan_zero_divisors(r, sub, z, &mut c);
            let units: Vec<ElementId> = sub.iter().copied().filter(|&a| a != z).collect();
            if !units.is_empty() {
                scan_group_part(&r.mul, &units, (Axiom::MulIdentity, Axiom::MulInverse), &mut c);
            }
        }
        c.finish()
    }

    pub fn field_on(&self, r: &FiniteRingTable, sub: &[ElementId]) -> AxiomReport {
        self.division_like(r, sub, true)
    }

    pub fn division_ring_on(&self, r: &FiniteRingTable, sub: &[ElementId]) -> AxiomReport {
        self.division_like(r, sub, false)
    }

    fn semiring_into(&self, r: &FiniteRingTable, sub: &[ElementId], c: &mut C) -> Option<ElementId> {
        scan_closure(&r.add, sub, Axiom::AddClosure, c);
        scan_assoc(&r.add, sub, Axiom::AddAssociativity, c);
        let zero = scan_group_part(&r.add, sub, (Axiom::AddIdentity, Axiom::AddIdentity), c);
        scan_comm(&r.add, sub, Axiom::AddCommutativity, c);
        self.mul_semigroup(r, sub, c);
        scan_left_dist(r, sub, c);
        scan_right_dist(r, sub, c);
        zero
    }

    pub fn semiring_on(&self, r: &FiniteRingTable, sub: &[ElementId]) -> AxiomReport {
        let mut c = C::new(StructureClass::Semiring, self.cap);
        self.semiring_into(r, sub, &mut c);
        c.finish()
    }

    /// Commutative strict semiring with unit and no zero divisors.
    pub fn semifield_on(&self, r: &FiniteRingTable, sub: &[ElementId]) -> AxiomReport {
        let mut c = C::new(StructureClass::Semifield, self.cap);
        let zero = self.semiring_into(r, sub, &mut c);
        scan_comm(&r.mul, sub, Axiom::MulCommutativity, &mut c);
        scan_group_part(&r.mul, sub, (Axiom::MulIdentity, Axiom::MulIdentity), &mut c);
        if sub.len() < 2 {
            c.push(Axiom::Nontrivial, sub.to_vec());
        }
        if let Some(z) = zero {
            for &a in sub {
                for &b in sub {
                    if r.add(a, b) == z && (a != z || b != z) && !c.push(Axiom::Strictness, vec![a, b]) {
                        break;
                    }
                }
            }
            scan_zero_divisors(r, sub, z, &mut c);
        }
        c.finish()
    }

    /// (N,+) a group, (N,⊙) a semigroup, right distributivity.
    pub fn near_ring_on(&self, r: &FiniteRingTable, sub: &[ElementId]) -> AxiomReport {
        let mut c = C::new(StructureClass::NearRing, self.cap);
        self.additive_group(r, sub, &mut c);
        self.mul_semigroup(r, sub, &mut c);
        scan_right_dist(r, sub, &mut c);
        c.finish()
    }

    /// (N,+) and (N,⊙) semigroups, right distributivity.
    pub fn seminear_ring_on(&self, r: &FiniteRingTable, sub: &[ElementId]) -> AxiomReport {
        let mut c = C::new(StructureClass::SeminearRing, self.cap);
        scan_closure(&r.add, sub, Axiom::AddClosure, &mut c);
        scan_assoc(&r.add, sub, Axiom::AddAssociativity, &mut c);
        self.mul_semigroup(r, sub, &mut c);
        scan_right_dist(r, sub, &mut c);
        c.finish()
    }

    /// Semiring whose elements are idempotent under both operations.
    pub fn distributive_lattice_on(&self, r: &FiniteRingTable, sub: &[ElementId]) -> AxiomReport {
        let mut c = C::new(StructureClass::DistributiveLattice, self.cap);
        self.semiring_into(r, sub, &mut c);
        scan_comm(&r.mul, sub, Axiom::MulCommutativity, &mut c);
        for &a in sub {
            if (r.add(a, a) != a || r.mul(a, a) != a) && !c.push(Axiom::Idempotence, vec![a]) {
                break;
            }
        }
        c.finish()
    }

    pub fn left_distributivity_on(&self, r: &FiniteRingTable, sub: &[ElementId]) -> AxiomReport {
        let mut c = C::new(StructureClass::Ring, self.cap);
        scan_left_dist(r, sub, &mut c);
        c.finish()
    }
}

macro_rules! whole {
    ($($name:ident => $on:ident : $t:ty),* $(,)?) => {
        $(
            pub fn $name(x: &$t) -> AxiomReport {
                Checker::default().$on(x, &x.elements())
            }
        )*
    };
}

whole! {
    check_semigroup => semigroup_on: FiniteMagma,
    check_monoid => monoid_on: FiniteMagma,
    check_group => group_on: FiniteMagma,
    check_commutative => commutative_on: FiniteMagma,
    check_abelian_group => abelian_group_on: FiniteMagma,
    check_ring => ring_on: FiniteRingTable,
    check_commutative_ring => commutative_ring_on: FiniteRingTable,
    check_field => field_on: FiniteRingTable,
    check_division_ring => division_ring_on: FiniteRingTable,
    check_semiring => semiring_on: FiniteRingTable,
    check_semifield => semifield_on: FiniteRingTable,
    check_near_ring => near_ring_on: FiniteRingTable,
    check_seminear_ring => seminear_ring_on: FiniteRingTable,
    check_distributive_lattice => distributive_lattice_on: FiniteRingTable,
}

/// Closure of `closed ∪ gens` under every operation in `ops`, assuming
/// `closed` is already closed. Result sorted ascending.
pub(crate) fn closure_multi(ops: &[&FiniteMagma], closed: &[ElementId], gens: &[ElementId]) -> Vec<ElementId> {
    let n = ops[0].size();
    let mut mask = FixedBitSet::with_capacity(n);
    let mut list: Vec<ElementId> = Vec::with_capacity(closed.len() + gens.len());
    for &a in closed {
        if !mask.put(a) {
            list.push(a);
        }
    }
    let done = list.len();
    for &g in gens {
        if !mask.put(g) {
            list.push(g);
        }
    }
    let mut i = done;
    while i < list.len() {
        let x = list[i];
        let mut j = 0;
        while j <= i {
            let y = list[j];
            for m in ops {
                for z in [m.op(x, y), m.op(y, x)] {
                    if !mask.put(z) {
                        list.push(z);
                    }
                }
            }
            j += 1;
        }
        i += 1;
    }
    list.sort_unstable();
    list
}

fn size_lex(a: &Vec<ElementId>, b: &Vec<ElementId>) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// Every nonempty subset closed under all of `ops`, ordered by size then
/// lexicographically. Built from closures of generator sets.
pub fn enumerate_closed_subsets_multi(ops: &[&FiniteMagma], max_count: Option<usize>) -> Result<Vec<Vec<ElementId>>> {
    let n = ops.first().map_or(0, |m| m.size());
    let mut seen: HashSet<Vec<ElementId>> = HashSet::new();
    let mut queue = VecDeque::new();
    let limit = max_count.unwrap_or(usize::MAX);
    let admit = |s: Vec<ElementId>, seen: &mut HashSet<Vec<ElementId>>, queue: &mut VecDeque<Vec<ElementId>>| {
        if seen.contains(&s) {
            return Ok(());
        }
        if seen.len() >= limit {
            return Err(Error::CapacityExceeded(limit));
        }
        seen.insert(s.clone());
        queue.push_back(s);
        Ok(())
    };
    for x in 0..n {
        admit(closure_multi(ops, &[], &[x]), &mut seen, &mut queue)?;
    }
    while let Some(c) = queue.pop_front() {
        let mask = mask_of(n, &c);
        for x in (0..n).filter(|&x| !mask.contains(x)) {
            admit(closure_multi(ops, &c, &[x]), &mut seen, &mut queue)?;
        }
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort_by(size_lex);
    Ok(out)
}

pub fn enumerate_closed_subsets(m: &FiniteMagma, max_count: Option<usize>) -> Result<Vec<Vec<ElementId>>> {
    let rep = Checker::new(1).semigroup_on(m, &m.elements());
    if let Some(v) = rep.violations.first() {
        return Err(Error::AxiomFailure(format!(
            "closed-subset enumeration needs an associative operation; ({}) fails",
            v.witness
                .iter()
                .map(|&a| m.label(a))
                .collect::<Vec<_>>()
                .join(", ")
        )));
    }
    enumerate_closed_subsets_multi(&[m], max_count)
}

/// Whether `h` is fixed setwise by every conjugation in the group `g`.
pub fn is_normal(g: &FiniteMagma, h: &[ElementId]) -> Result<bool> {
    if !check_group(g).passed() {
        return Err(Error::AxiomFailure("is_normal needs a group".into()));
    }
    if h.is_empty() || !Checker::new(1).group_on(g, h).passed() {
        return Err(Error::NotASubgroup);
    }
    let e = g.identity().expect("group has identity");
    let inv = |a: ElementId| (0..g.size()).find(|&b| g.op(a, b) == e).unwrap();
    let mask = mask_of(g.size(), h);
    Ok((0..g.size()).all(|x| {
        let xi = inv(x);
        h.iter().all(|&y| mask.contains(g.op(g.op(x, y), xi)))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn zn_mul(n: usize) -> FiniteMagma {
        FiniteMagma::numbered(n, |a, b| a * b % n).unwrap()
    }

    fn zn_add(n: usize) -> FiniteMagma {
        FiniteMagma::numbered(n, |a, b| (a + b) % n).unwrap()
    }

    fn zn_ring(n: usize) -> FiniteRingTable {
        FiniteRingTable::from_fns((0..n).map(|i| i.to_string()).collect(), |a, b| (a + b) % n, |a, b| a * b % n)
            .unwrap()
    }

    fn brute_closed(m: &FiniteMagma) -> Vec<Vec<ElementId>> {
        let n = m.size();
        let mut out: Vec<Vec<ElementId>> = (1u32..1 << n)
            .map(|bits| (0..n).filter(|i| bits >> i & 1 == 1).collect::<Vec<_>>())
            .filter(|s| m.is_closed(s))
            .collect();
        out.sort_by(size_lex);
        out
    }

    #[test]
    fn shape_errors_name_the_row() {
        let err = FiniteMagma::new(vec!["a".into(), "b".into()], vec![vec![0, 1], vec![0]]).unwrap_err();
        assert!(matches!(err, Error::TableShape(ref s) if s.contains("row 1")));
        assert!(FiniteMagma::new(vec!["a".into(), "a".into()], vec![vec![0, 0], vec![0, 0]]).is_err());
        assert!(FiniteMagma::new(vec!["a".into()], vec![vec![3]]).is_err());
    }

    #[test]
    fn unit_group_of_z10() {
        let m = zn_mul(10);
        let p = [1, 3, 7, 9];
        assert!(Checker::default().semigroup_on(&m, &p).passed());
        assert!(Checker::default().group_on(&m, &p).passed());
        let full = check_group(&m);
        assert_eq!(full.first(Axiom::Inverse).unwrap().witness, vec![0]);
        let evens = [2, 4, 6, 8];
        assert!(Checker::default().group_on(&m, &evens).passed());
        assert_eq!(identity_on(&m, &evens), Some(6));
    }

    #[test]
    fn two_element_left_zero_like_table() {
        // op(a,b) = a except op(b,b) = a.
        let m = FiniteMagma::new(vec!["a".into(), "b".into()], vec![vec![0, 0], vec![1, 0]]).unwrap();
        let mut want = Vec::new();
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    if m.op(m.op(a, b), c) != m.op(a, m.op(b, c)) {
                        want.push(vec![a, b, c]);
                    }
                }
            }
        }
        let got: Vec<_> = check_semigroup(&m).violations.into_iter().map(|v| v.witness).collect();
        assert_eq!(got, want);
        let one = FiniteMagma::numbered(1, |_, _| 0).unwrap();
        assert!(check_semigroup(&one).passed());
        assert!(check_group(&one).passed());
    }

    #[test]
    fn ring_classes() {
        assert!(check_field(&zn_ring(5)).passed());
        let z12 = zn_ring(12);
        assert!(check_ring(&z12).passed());
        let f = check_field(&z12);
        assert!(f.fails(Axiom::ZeroDivisor));
        assert!(f.violations.iter().any(|v| v.witness == vec![2, 6]));
        let near = FiniteRingTable::from_fns((0..5).map(|i| i.to_string()).collect(), |a, b| (a + b) % 5, |a, _| a)
            .unwrap();
        assert!(check_near_ring(&near).passed());
        let left = Checker::default().left_distributivity_on(&near, &near.elements());
        assert!(left.violations.iter().any(|v| v.witness == vec![1, 1, 1]));
    }

    #[test]
    fn semifield_rejects_rings() {
        let r = check_semifield(&zn_ring(5));
        assert!(r.fails(Axiom::Strictness));
        assert!(check_semiring(&zn_ring(6)).passed());
    }

    #[test]
    fn closed_subsets_small() {
        let z6: Vec<Vec<usize>> = enumerate_closed_subsets(&zn_add(6), None).unwrap();
        assert_eq!(z6, vec![vec![0], vec![0, 3], vec![0, 2, 4], (0..6).collect()]);
        let z4 = enumerate_closed_subsets(&zn_mul(4), None).unwrap();
        for s in [vec![0], vec![1], vec![0, 2], vec![1, 3]] {
            assert!(z4.contains(&s));
        }
        assert_eq!(z4, brute_closed(&zn_mul(4)));
        let one = FiniteMagma::numbered(1, |_, _| 0).unwrap();
        assert_eq!(enumerate_closed_subsets(&one, None).unwrap().len(), 1);
        assert_eq!(
            enumerate_closed_subsets(&zn_mul(12), Some(3)),
            Err(Error::CapacityExceeded(3))
        );
    }

    #[test]
    fn non_associative_rejected() {
        let m = FiniteMagma::numbered(3, |a, b| (2 * a + b) % 3).unwrap();
        assert!(matches!(enumerate_closed_subsets(&m, None), Err(Error::AxiomFailure(_))));
    }

    #[test]
    fn normality() {
        // Z_3 inside Z_6 (additive, abelian).
        let g = zn_add(6);
        assert!(is_normal(&g, &[0, 2, 4]).unwrap());
        assert!(is_normal(&g, &g.elements()).unwrap());
        assert_eq!(is_normal(&g, &[0, 1]), Err(Error::NotASubgroup));
    }

    fn random_table(n: usize) -> impl Strategy<Value = FiniteMagma> {
        proptest::collection::vec(0..n, n * n).prop_map(move |t| {
            FiniteMagma::numbered(n, |a, b| t[a * n + b]).unwrap()
        })
    }

    fn zn_or_mul() -> impl Strategy<Value = FiniteMagma> {
        (1usize..=12, any::<bool>()).prop_map(|(n, add)| if add { zn_add(n) } else { zn_mul(n) })
    }

    proptest! {
        #[test]
        fn enumeration_matches_brute_force(m in zn_or_mul()) {
            prop_assert_eq!(enumerate_closed_subsets(&m, None).unwrap(), brute_closed(&m));
        }

        #[test]
        fn report_agrees_with_triple_scan(m in (1usize..=4).prop_flat_map(random_table)) {
            let n = m.size();
            let mut bad = 0;
            for a in 0..n { for b in 0..n { for c in 0..n {
                if m.op(m.op(a, b), c) != m.op(a, m.op(b, c)) { bad += 1; }
            }}}
            let rep = Checker::new(usize::MAX).semigroup_on(&m, &m.elements());
            prop_assert_eq!(rep.violations.len(), bad);
        }

        #[test]
        fn restriction_keeps_associativity(m in zn_or_mul(), pick in any::<prop::sample::Index>()) {
            let subs = enumerate_closed_subsets(&m, None).unwrap();
            let s = &subs[pick.index(subs.len())];
            let r = m.restrict(s).unwrap();
            prop_assert!(check_semigroup(&r).passed());
        }

        #[test]
        fn closed_subsets_of_groups_are_subgroups(n in 1usize..=16) {
            let g = zn_add(n);
            for s in enumerate_closed_subsets(&g, None).unwrap() {
                prop_assert!(Checker::default().group_on(&g, &s).passed());
            }
        }
    }

    #[test]
    fn capped_reports_are_truncated() {
        let m = FiniteMagma::numbered(4, |a, b| (a + 2 * b + 1) % 4).unwrap();
        let r = Checker::new(2).semigroup_on(&m, &m.elements());
        assert_eq!(r.violations.len(), 2);
        assert!(r.truncated);
    }

    #[test]
    fn ring_table_serde_round_trip() {
        let r = zn_ring(3);
        let text = serde_json::to_string(&r).unwrap();
        let back: FiniteRingTable = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        let _ = zn_ring(2).restrict(&[0]).unwrap();
    }
}
