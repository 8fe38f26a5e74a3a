//! Detectors for Smarandache properties, in both directions: a strong
//! structure hiding inside a weak one (a group inside a semigroup, a field
//! inside a ring) and a weak structure inside a strong one (a semigroup
//! inside a group, a semiring inside a ring).
//!
//! A weak-in-strong witness must itself fail the strong axioms; a subgroup
//! never counts as a semigroup witness inside a group. Trivial witnesses
//! (empty, singletons, `{0}`) are skipped unless [`Detector::allow_trivial`]
//! is set.
//!
//! Finite structures are searched exhaustively over closed subsets. Symbolic
//! structures consult a fixed witness catalog and check each entry with
//! [`LatticeSet`] rules.

mod catalog;
mod homomorphism;
mod sweep;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finite::{
    enumerate_closed_subsets_multi, AxiomReport, Checker, ElementId, FiniteMagma, FiniteRingTable,
    StructureClass, DEFAULT_CAP,
};
use crate::ideals::is_ideal;
use crate::symbolic::LatticeSet;

pub use catalog::SymbolicStructure;
pub use homomorphism::{DEFAULT_SAMPLES, verify_lattice_homomorphism, verify_s_homomorphism, LatticeDomain, LatticeMap, LatticeOps};
pub use sweep::{sweep, sweep_with, Conjecture, Family, SweepHit, SweepOptions, SweepReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Property {
    SSemigroup,
    SSpecialDefiniteGroup,
    CommutativeSSDG,
    StronglyCommutativeSSDG,
    SRing,
    SDefiniteSpecialRing,
    SSpecialDefiniteField,
    SDefiniteSpecialField,
    SSpecialDefinitePrimeField,
    SDoublyStrong,
    SStrongSpecialDefiniteRing,
    SIdeallyStrong,
    SSpecialDefiniteDivisionRing,
    SDefiniteSpecialNearRing,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    StrongInWeak,
    WeakInStrong,
    Both,
}

impl Property {
    pub const ALL: [Property; 14] = [
        Property::SSemigroup,
        Property::SSpecialDefiniteGroup,
        Property::CommutativeSSDG,
        Property::StronglyCommutativeSSDG,
        Property::SRing,
        Property::SDefiniteSpecialRing,
        Property::SSpecialDefiniteField,
        Property::SDefiniteSpecialField,
        Property::SSpecialDefinitePrimeField,
        Property::SDoublyStrong,
        Property::SStrongSpecialDefiniteRing,
        Property::SIdeallyStrong,
        Property::SSpecialDefiniteDivisionRing,
        Property::SDefiniteSpecialNearRing,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Property::SSemigroup => "SSemigroup",
            Property::SSpecialDefiniteGroup => "SSpecialDefiniteGroup",
            Property::CommutativeSSDG => "CommutativeSSDG",
            Property::StronglyCommutativeSSDG => "StronglyCommutativeSSDG",
            Property::SRing => "SRing",
            Property::SDefiniteSpecialRing => "SDefiniteSpecialRing",
            Property::SSpecialDefiniteField => "SSpecialDefiniteField",
            Property::SDefiniteSpecialField => "SDefiniteSpecialField",
            Property::SSpecialDefinitePrimeField => "SSpecialDefinitePrimeField",
            Property::SDoublyStrong => "SDoublyStrong",
            Property::SStrongSpecialDefiniteRing => "SStrongSpecialDefiniteRing",
            Property::SIdeallyStrong => "SIdeallyStrong",
            Property::SSpecialDefiniteDivisionRing => "SSpecialDefiniteDivisionRing",
            Property::SDefiniteSpecialNearRing => "SDefiniteSpecialNearRing",
        }
    }

    /// Class the ambient structure must belong to.
    pub fn strong_class(self) -> StructureClass {
        use Property::*;
        match self {
            SSemigroup => StructureClass::Semigroup,
            SSpecialDefiniteGroup | CommutativeSSDG | StronglyCommutativeSSDG => StructureClass::Group,
            SRing | SDefiniteSpecialRing | SDoublyStrong | SStrongSpecialDefiniteRing | SIdeallyStrong => {
                StructureClass::Ring
            }
            SSpecialDefiniteField | SDefiniteSpecialField | SSpecialDefinitePrimeField => StructureClass::Field,
            SSpecialDefiniteDivisionRing => StructureClass::DivisionRing,
            SDefiniteSpecialNearRing => StructureClass::NearRing,
        }
    }

    /// Class the witness must belong to.
    pub fn weak_class(self) -> StructureClass {
        use Property::*;
        match self {
            SSemigroup => StructureClass::Group,
            SSpecialDefiniteGroup => StructureClass::Semigroup,
            CommutativeSSDG | StronglyCommutativeSSDG => StructureClass::CommutativeSemigroup,
            SRing => StructureClass::Field,
            SDefiniteSpecialRing | SDoublyStrong | SStrongSpecialDefiniteRing | SIdeallyStrong => {
                StructureClass::Semiring
            }
            SSpecialDefiniteField | SSpecialDefinitePrimeField | SSpecialDefiniteDivisionRing => StructureClass::Ring,
            SDefiniteSpecialField => StructureClass::Semifield,
            SDefiniteSpecialNearRing => StructureClass::SeminearRing,
        }
    }

    pub fn direction(self) -> Direction {
        match self {
            Property::SSemigroup | Property::SRing => Direction::StrongInWeak,
            Property::SDoublyStrong => Direction::Both,
            _ => Direction::WeakInStrong,
        }
    }

    /// Properties whose witness is a single subset checked by one pair of
    /// axiom checks.
    fn is_simple(self) -> bool {
        !matches!(
            self,
            Property::StronglyCommutativeSSDG
                | Property::SSpecialDefinitePrimeField
                | Property::SDoublyStrong
                | Property::SStrongSpecialDefiniteRing
                | Property::SIdeallyStrong
        )
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Property {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let key: String = s.chars().filter(|c| c.is_ascii_alphanumeric()).collect::<String>().to_lowercase();
        Property::ALL
            .into_iter()
            .find(|p| p.tag().to_lowercase() == key)
            .ok_or_else(|| Error::UnknownKind(format!("property `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Structure {
    Magma { name: String, table: FiniteMagma },
    Ring { name: String, table: FiniteRingTable },
    Symbolic { structure: SymbolicStructure },
}

impl Structure {
    pub fn magma(name: impl Into<String>, table: FiniteMagma) -> Self {
        Structure::Magma { name: name.into(), table }
    }

    pub fn ring(name: impl Into<String>, table: FiniteRingTable) -> Self {
        Structure::Ring { name: name.into(), table }
    }

    pub fn symbolic(s: SymbolicStructure) -> Self {
        Structure::Symbolic { structure: s }
    }

    pub fn name(&self) -> String {
        match self {
            Structure::Magma { name, .. } | Structure::Ring { name, .. } => name.clone(),
            Structure::Symbolic { structure } => structure.name(),
        }
    }

    pub fn is_finite(&self) -> bool {
        !matches!(self, Structure::Symbolic { .. })
    }

    pub fn size(&self) -> Option<usize> {
        match self {
            Structure::Magma { table, .. } => Some(table.size()),
            Structure::Ring { table, .. } => Some(table.size()),
            Structure::Symbolic { .. } => None,
        }
    }

    fn label(&self, a: ElementId) -> String {
        match self {
            Structure::Magma { table, .. } => table.label(a).to_string(),
            Structure::Ring { table, .. } => table.label(a).to_string(),
            Structure::Symbolic { .. } => a.to_string(),
        }
    }

    pub fn format_subset(&self, s: &[ElementId]) -> String {
        let parts: Vec<String> = s.iter().map(|&a| self.label(a)).collect();
        format!("{{{}}}", parts.join(", "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Exhaustive,
    Catalog,
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exhaustive" => Ok(Mode::Exhaustive),
            "catalog" => Ok(Mode::Catalog),
            _ => Err(Error::UnknownKind(format!("mode `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Finite { elements: Vec<ElementId> },
    Lattice { set: LatticeSet },
    /// Group-ring elements whose coefficients all lie in `set`.
    Coefficients { set: LatticeSet },
    Named { name: String },
    Composite { parts: Vec<Certificate> },
}

/// One symbolic rule evaluated on a witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleCheck {
    pub rule: String,
    pub expected: bool,
    pub observed: bool,
}

impl RuleCheck {
    pub fn new(rule: impl Into<String>, expected: bool, observed: bool) -> Self {
        Self { rule: rule.into(), expected, observed }
    }

    pub fn holds(&self) -> bool {
        self.expected == self.observed
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub property: Property,
    pub structure: Structure,
    pub witness: Witness,
    pub allow_trivial: bool,
    /// Weak-class axioms on the witness (finite witnesses).
    pub weak_axioms: Option<AxiomReport>,
    /// Failing strong-class report: on the witness for weak-in-strong
    /// properties, on the parent for [`Property::SSemigroup`].
    pub strong_failure: Option<AxiomReport>,
    pub rules: Vec<RuleCheck>,
}

impl Certificate {
    pub fn witness_text(&self) -> String {
        match &self.witness {
            Witness::Finite { elements } => self.structure.format_subset(elements),
            Witness::Lattice { set } => set.to_string(),
            Witness::Coefficients { set } => format!("({set})G"),
            Witness::Named { name } => name.clone(),
            Witness::Composite { parts } => {
                let inner: Vec<String> = parts.iter().map(|c| format!("{}: {}", c.property, c.witness_text())).collect();
                format!("[{}]", inner.join("; "))
            }
        }
    }

    pub fn finite_witness(&self) -> Option<&[ElementId]> {
        match &self.witness {
            Witness::Finite { elements } => Some(elements),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Detection {
    Found { certificate: Box<Certificate> },
    NotFound { exhaustive: bool, refutation: Option<String> },
}

impl Detection {
    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            Detection::Found { certificate } => Some(certificate),
            Detection::NotFound { .. } => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, Detection::Found { .. })
    }

    fn found(c: Certificate) -> Self {
        Detection::Found { certificate: Box::new(c) }
    }

    fn absent(exhaustive: bool) -> Self {
        Detection::NotFound { exhaustive, refutation: None }
    }

    fn refuted(exhaustive: bool, why: String) -> Self {
        Detection::NotFound { exhaustive, refutation: Some(why) }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Detector {
    pub allow_trivial: bool,
    pub cap: usize,
    /// Bound on closed subsets enumerated per structure.
    pub max_subsets: Option<usize>,
}

impl Default for Detector {
    fn default() -> Self {
        Self { allow_trivial: false, cap: DEFAULT_CAP, max_subsets: Some(1 << 20) }
    }
}

pub fn detect(s: &Structure, p: Property, mode: Mode) -> Result<Detection> {
    Detector::default().detect(s, p, mode)
}

/// Re-derives the certificate from its structure and witness and compares.
pub fn verify_certificate(c: &Certificate) -> bool {
    let d = Detector { allow_trivial: c.allow_trivial, ..Detector::default() };
    let again = match &c.witness {
        Witness::Composite { parts } => {
            if !parts.iter().all(verify_certificate) {
                return false;
            }
            let mode = if c.structure.is_finite() { Mode::Exhaustive } else { Mode::Catalog };
            d.detect(&c.structure, c.property, mode).ok().and_then(|x| x.certificate().cloned())
        }
        w => d.certify(&c.structure, c.property, w).ok().flatten(),
    };
    again.as_ref() == Some(c)
}

/// A `NotFound` carries nothing to check.
pub fn verify_detection(d: &Detection) -> bool {
    d.certificate().is_some_and(verify_certificate)
}

fn mismatch(s: &Structure, p: Property, detail: &str) -> Error {
    Error::ClassMismatch(format!(
        "{p} needs a {:?} ambient; {} {detail}",
        p.strong_class(),
        s.name()
    ))
}

impl Detector {
    pub fn detect(&self, s: &Structure, p: Property, mode: Mode) -> Result<Detection> {
        self.check_parent(s, p)?;
        match (s, mode) {
            (Structure::Symbolic { structure }, Mode::Catalog) => catalog::detect(self, structure, p),
            (Structure::Symbolic { .. }, Mode::Exhaustive) => Err(Error::ClassMismatch(format!(
                "exhaustive mode needs a finite structure; {} is symbolic",
                s.name()
            ))),
            (_, Mode::Catalog) => Ok(Detection::absent(false)),
            (_, Mode::Exhaustive) => self.search(s, p),
        }
    }

    /// Checks a proposed witness for a simple property.
    pub fn certify(&self, s: &Structure, p: Property, w: &Witness) -> Result<Option<Certificate>> {
        self.check_parent(s, p)?;
        if !p.is_simple() {
            return Ok(None);
        }
        match (s, w) {
            (Structure::Symbolic { structure }, _) => Ok(catalog::certify(self, structure, p, w)),
            (_, Witness::Finite { elements }) => Ok(self.certify_finite(s, p, elements)),
            _ => Ok(None),
        }
    }

    fn check_parent(&self, s: &Structure, p: Property) -> Result<()> {
        let ck = Checker::new(1);
        use StructureClass as K;
        match s {
            Structure::Magma { table, .. } => {
                let all = table.elements();
                match p.strong_class() {
                    K::Semigroup => {
                        if !ck.semigroup_on(table, &all).passed() {
                            return Err(mismatch(s, p, "is not a semigroup"));
                        }
                        if ck.group_on(table, &all).passed() {
                            return Err(mismatch(s, p, "is already a group"));
                        }
                        Ok(())
                    }
                    K::Group if ck.group_on(table, &all).passed() => Ok(()),
                    K::Group => Err(mismatch(s, p, "is not a group")),
                    _ => Err(mismatch(s, p, "has a single operation")),
                }
            }
            Structure::Ring { table, .. } => {
                let all = table.elements();
                let ok = match p.strong_class() {
                    K::Ring => ck.ring_on(table, &all).passed(),
                    K::Field => ck.field_on(table, &all).passed(),
                    K::DivisionRing => ck.division_ring_on(table, &all).passed(),
                    K::NearRing => ck.near_ring_on(table, &all).passed(),
                    _ => return Err(mismatch(s, p, "has two operations")),
                };
                if ok {
                    Ok(())
                } else {
                    Err(mismatch(s, p, "fails those axioms"))
                }
            }
            Structure::Symbolic { structure } => {
                if structure.satisfies(p.strong_class()) {
                    Ok(())
                } else {
                    Err(mismatch(s, p, "is not of that class"))
                }
            }
        }
    }

    fn ops<'a>(s: &'a Structure) -> Vec<&'a FiniteMagma> {
        match s {
            Structure::Magma { table, .. } => vec![table],
            Structure::Ring { table, .. } => vec![table.additive(), table.multiplicative()],
            Structure::Symbolic { .. } => vec![],
        }
    }

    /// Closed proper subsets, largest first, ties broken lexicographically.
    fn candidates(&self, s: &Structure) -> Result<Vec<Vec<ElementId>>> {
        let n = s.size().unwrap_or(0);
        let mut all = enumerate_closed_subsets_multi(&Self::ops(s), self.max_subsets)?;
        let min = if self.allow_trivial { 1 } else { 2 };
        all.retain(|c| c.len() < n && c.len() >= min);
        all.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        Ok(all)
    }

    fn weak_report(&self, s: &Structure, p: Property, w: &[ElementId]) -> Option<AxiomReport> {
        let ck = Checker::new(self.cap);
        use Property::*;
        Some(match (s, p) {
            (Structure::Magma { table, .. }, SSemigroup) => ck.group_on(table, w),
            (Structure::Magma { table, .. }, SSpecialDefiniteGroup) => ck.semigroup_on(table, w),
            (Structure::Magma { table, .. }, CommutativeSSDG) => ck.commutative_semigroup_on(table, w),
            (Structure::Ring { table, .. }, SRing) => ck.field_on(table, w),
            (Structure::Ring { table, .. }, SDefiniteSpecialRing) => ck.semiring_on(table, w),
            (Structure::Ring { table, .. }, SSpecialDefiniteField | SSpecialDefiniteDivisionRing) => {
                ck.ring_on(table, w)
            }
            (Structure::Ring { table, .. }, SDefiniteSpecialField) => ck.semifield_on(table, w),
            (Structure::Ring { table, .. }, SDefiniteSpecialNearRing) => ck.seminear_ring_on(table, w),
            _ => return None,
        })
    }

    /// The strong-class report that has to fail.
    fn strong_report(&self, s: &Structure, p: Property, w: &[ElementId]) -> Option<AxiomReport> {
        let ck = Checker::new(self.cap);
        use Property::*;
        Some(match (s, p) {
            (Structure::Magma { table, .. }, SSemigroup) => ck.group_on(table, &table.elements()),
            (Structure::Magma { table, .. }, SSpecialDefiniteGroup | CommutativeSSDG) => ck.group_on(table, w),
            (Structure::Ring { table, .. }, SDefiniteSpecialRing) => ck.ring_on(table, w),
            (Structure::Ring { table, .. }, SSpecialDefiniteField | SDefiniteSpecialField) => ck.field_on(table, w),
            (Structure::Ring { table, .. }, SSpecialDefiniteDivisionRing) => ck.division_ring_on(table, w),
            (Structure::Ring { table, .. }, SDefiniteSpecialNearRing) => ck.near_ring_on(table, w),
            _ => return None,
        })
    }

    fn shape_ok(&self, s: &Structure, w: &[ElementId]) -> bool {
        let n = s.size().unwrap_or(0);
        let sorted = w.windows(2).all(|p| p[0] < p[1]);
        let min = if self.allow_trivial { 1 } else { 2 };
        sorted && w.len() >= min && w.len() < n && w.iter().all(|&a| a < n)
    }

    fn certify_finite(&self, s: &Structure, p: Property, w: &[ElementId]) -> Option<Certificate> {
        if !self.shape_ok(s, w) || !s.size().is_some_and(|n| Self::ops(s).iter().all(|m| m.size() == n)) {
            return None;
        }
        let weak = self.weak_report(s, p, w)?;
        if !weak.passed() {
            return None;
        }
        let strong = self.strong_report(s, p, w);
        if strong.as_ref().is_some_and(|r| r.passed()) {
            return None;
        }
        Some(Certificate {
            property: p,
            structure: s.clone(),
            witness: Witness::Finite { elements: w.to_vec() },
            allow_trivial: self.allow_trivial,
            weak_axioms: Some(weak),
            strong_failure: strong,
            rules: Vec::new(),
        })
    }

    fn first_simple(&self, s: &Structure, p: Property, cands: &[Vec<ElementId>]) -> Option<Certificate> {
        cands.iter().find_map(|c| self.certify_finite(s, p, c))
    }

    fn all_simple(&self, s: &Structure, p: Property, cands: &[Vec<ElementId>]) -> Vec<Certificate> {
        cands.iter().filter_map(|c| self.certify_finite(s, p, c)).collect()
    }

    fn composite(&self, s: &Structure, p: Property, parts: Vec<Certificate>, rules: Vec<RuleCheck>) -> Certificate {
        Certificate {
            property: p,
            structure: s.clone(),
            witness: Witness::Composite { parts },
            allow_trivial: self.allow_trivial,
            weak_axioms: None,
            strong_failure: None,
            rules,
        }
    }

    fn search(&self, s: &Structure, p: Property) -> Result<Detection> {
        let cands = self.candidates(s)?;
        if p.is_simple() {
            return Ok(self.first_simple(s, p, &cands).map_or(Detection::absent(true), Detection::found));
        }
        let Structure::Ring { table: r, .. } = s else {
            return self.strongly_commutative_search(s, &cands);
        };
        let ck = Checker::new(1);
        match p {
            Property::SSpecialDefinitePrimeField => {
                let Some(inner) = self.first_simple(s, Property::SSpecialDefiniteField, &cands) else {
                    return Ok(Detection::absent(true));
                };
                if let Some(sub) = cands.iter().find(|c| c.len() >= 2 && ck.field_on(r, c).passed()) {
                    return Ok(Detection::refuted(true, format!("proper subfield {}", s.format_subset(sub))));
                }
                let rule = RuleCheck::new("no proper subfield", true, true);
                Ok(Detection::found(self.composite(s, p, vec![inner], vec![rule])))
            }
            Property::SDoublyStrong => {
                let a = self.first_simple(s, Property::SRing, &cands);
                let b = self.first_simple(s, Property::SDefiniteSpecialRing, &cands);
                Ok(match (a, b) {
                    (Some(a), Some(b)) => Detection::found(self.composite(s, p, vec![a, b], Vec::new())),
                    _ => Detection::absent(true),
                })
            }
            Property::SStrongSpecialDefiniteRing | Property::SIdeallyStrong => {
                let subrings: Vec<&Vec<ElementId>> =
                    cands.iter().filter(|c| c.len() >= 2 && ck.ring_on(r, c).passed()).collect();
                let inside = |v: &Vec<ElementId>| {
                    let within: Vec<Vec<ElementId>> = cands
                        .iter()
                        .filter(|c| c.len() < v.len() && c.iter().all(|x| v.binary_search(x).is_ok()))
                        .cloned()
                        .collect();
                    self.first_simple(s, Property::SDefiniteSpecialRing, &within)
                };
                if p == Property::SStrongSpecialDefiniteRing {
                    if subrings.is_empty() {
                        return Ok(Detection::refuted(true, "no proper nonzero subrings".into()));
                    }
                    let mut parts = Vec::new();
                    let mut rules = Vec::new();
                    for v in subrings {
                        match inside(v) {
                            Some(c) => {
                                rules.push(RuleCheck::new(
                                    format!("{} ⊂ {}", c.witness_text(), s.format_subset(v)),
                                    true,
                                    true,
                                ));
                                parts.push(c);
                            }
                            None => {
                                return Ok(Detection::refuted(
                                    true,
                                    format!("subring {} holds no semiring witness", s.format_subset(v)),
                                ))
                            }
                        }
                    }
                    Ok(Detection::found(self.composite(s, p, parts, rules)))
                } else {
                    let special: Vec<(&Vec<ElementId>, Certificate)> =
                        subrings.into_iter().filter_map(|v| inside(v).map(|c| (v, c))).collect();
                    if special.is_empty() {
                        return Ok(Detection::absent(true));
                    }
                    let mut parts = Vec::new();
                    let mut rules = Vec::new();
                    for (v, c) in special {
                        let ideal = is_ideal(r, v);
                        if !ideal {
                            return Ok(Detection::refuted(
                                true,
                                format!("S-definite special subring {} is not an ideal", s.format_subset(v)),
                            ));
                        }
                        rules.push(RuleCheck::new(format!("{} is an ideal", s.format_subset(v)), true, ideal));
                        parts.push(c);
                    }
                    Ok(Detection::found(self.composite(s, p, parts, rules)))
                }
            }
            _ => Ok(Detection::absent(true)),
        }
    }

    fn strongly_commutative_search(&self, s: &Structure, cands: &[Vec<ElementId>]) -> Result<Detection> {
        let all = self.all_simple(s, Property::SSpecialDefiniteGroup, cands);
        if all.is_empty() {
            return Ok(Detection::absent(true));
        }
        let mut parts = Vec::new();
        for c in all {
            let w = c.finite_witness().unwrap_or(&[]).to_vec();
            match self.certify_finite(s, Property::CommutativeSSDG, &w) {
                Some(cc) => parts.push(cc),
                None => {
                    return Ok(Detection::refuted(
                        true,
                        format!("non-commutative semigroup {}", s.format_subset(&w)),
                    ))
                }
            }
        }
        let rule = RuleCheck::new("every S-special definite witness is commutative", true, true);
        Ok(Detection::found(self.composite(s, Property::StronglyCommutativeSSDG, parts, vec![rule])))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum StrongCommutativity {
    /// Every semigroup witness is commutative; `witnesses` lists them.
    Holds { witnesses: Vec<String> },
    /// No proper non-subgroup semigroup exists, so the claim is vacuous.
    NoSemigroupSubsets,
    Refuted { semigroup: String, pair: (String, String) },
    Unknown,
}

impl StrongCommutativity {
    pub fn as_bool(&self) -> Option<bool> {
        match self {
            StrongCommutativity::Holds { .. } | StrongCommutativity::NoSemigroupSubsets => Some(true),
            StrongCommutativity::Refuted { .. } => Some(false),
            StrongCommutativity::Unknown => None,
        }
    }
}

pub fn detect_strongly_commutative(s: &Structure) -> Result<StrongCommutativity> {
    let d = Detector::default();
    d.check_parent(s, Property::StronglyCommutativeSSDG)?;
    let Structure::Magma { table, .. } = s else {
        let Structure::Symbolic { structure } = s else {
            return Err(mismatch(s, Property::StronglyCommutativeSSDG, "is a ring"));
        };
        return Ok(catalog::strongly_commutative(structure));
    };
    let cands = d.candidates(s)?;
    let all = d.all_simple(s, Property::SSpecialDefiniteGroup, &cands);
    if all.is_empty() {
        return Ok(StrongCommutativity::NoSemigroupSubsets);
    }
    let mut names = Vec::new();
    for c in &all {
        let w = c.finite_witness().unwrap_or(&[]);
        for &a in w {
            for &b in w {
                if table.op(a, b) != table.op(b, a) {
                    return Ok(StrongCommutativity::Refuted {
                        semigroup: s.format_subset(w),
                        pair: (table.label(a).into(), table.label(b).into()),
                    });
                }
            }
        }
        names.push(s.format_subset(w));
    }
    Ok(StrongCommutativity::Holds { witnesses: names })
}
