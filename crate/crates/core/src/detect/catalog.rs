//! Infinite structures and their stored witnesses. Every entry is checked
//! by rule predicates before a certificate is issued, so a wrong entry
//! yields `NotFound` rather than a false certificate.

use serde::{Deserialize, Serialize};

use super::{Certificate, Detection, Detector, Property, RuleCheck, StrongCommutativity, Structure, Witness};
use crate::constructors::{quaternion_mul, Coefficients, GroupRing, Quaternion};
use crate::finite::{check_semigroup, FiniteMagma, StructureClass};
use crate::rational::{int, Rat};
use crate::symbolic::{Dense, LatticeSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SymbolicStructure {
    /// (Z, +)
    ZAdd,
    /// (Q \ {0}, ×)
    QNonZeroMul,
    /// (Z, +, ×)
    ZRing,
    /// (Q, +, ×)
    QField,
    /// (Z, +, ⊙) with a ⊙ b = a.
    ZNearRing,
    /// (Q, +, ⊙) with a ⊙ b = a.
    QNearRing,
    /// Rational quaternions; lattice witnesses sit on the real axis.
    Quaternions,
    /// Nonsingular 2×2 rational matrices under multiplication.
    Gl2Q,
    /// ZG for a finite group G.
    GroupRingZ { base_name: String, base: FiniteMagma },
}

pub const P_INT: &str = "integer nonsingular 2x2 matrices";
pub const T_POWERS: &str = "powers of [[1,-2],[-2,1]]";

impl SymbolicStructure {
    pub fn name(&self) -> String {
        match self {
            SymbolicStructure::ZAdd => "(Z, +)".into(),
            SymbolicStructure::QNonZeroMul => "(Q\\{0}, ×)".into(),
            SymbolicStructure::ZRing => "(Z, +, ×)".into(),
            SymbolicStructure::QField => "(Q, +, ×)".into(),
            SymbolicStructure::ZNearRing => "(Z, +, ⊙)".into(),
            SymbolicStructure::QNearRing => "(Q, +, ⊙)".into(),
            SymbolicStructure::Quaternions => "rational quaternions".into(),
            SymbolicStructure::Gl2Q => "GL(2, Q)".into(),
            SymbolicStructure::GroupRingZ { base_name, .. } => format!("Z{base_name}"),
        }
    }

    pub fn satisfies(&self, class: StructureClass) -> bool {
        use StructureClass as K;
        use SymbolicStructure as S;
        match self {
            S::ZAdd | S::QNonZeroMul | S::Gl2Q => class == K::Group,
            S::ZRing | S::GroupRingZ { .. } => class == K::Ring,
            S::QField => matches!(class, K::Ring | K::Field | K::DivisionRing),
            S::Quaternions => matches!(class, K::Ring | K::DivisionRing),
            S::ZNearRing | S::QNearRing => class == K::NearRing,
        }
    }

    /// The rational set lattice witnesses are compared against.
    fn base(&self) -> Option<LatticeSet> {
        use SymbolicStructure as S;
        Some(match self {
            S::ZAdd | S::ZRing | S::ZNearRing => LatticeSet::integers(),
            S::QNonZeroMul => LatticeSet::Dense(Dense::QNonZero),
            S::QField | S::QNearRing | S::Quaternions => LatticeSet::Dense(Dense::Q),
            S::Gl2Q | S::GroupRingZ { .. } => return None,
        })
    }
}

fn z0() -> LatticeSet {
    LatticeSet::z_nonneg()
}

fn nz_nonneg(n: i64) -> LatticeSet {
    LatticeSet::lattice(int(n), crate::symbolic::Sign::Pos, true).expect("positive scale")
}

fn entries(s: &SymbolicStructure, p: Property) -> Vec<Witness> {
    use Property::*;
    use SymbolicStructure as S;
    let lat = |set: LatticeSet| Witness::Lattice { set };
    match (s, p) {
        (S::ZAdd, SSpecialDefiniteGroup | CommutativeSSDG) => vec![lat(LatticeSet::z_pos())],
        (S::QNonZeroMul, SSpecialDefiniteGroup | CommutativeSSDG) => {
            vec![lat(LatticeSet::z_nonzero()), lat(LatticeSet::z_pos())]
        }
        (S::Gl2Q, SSpecialDefiniteGroup) => vec![Witness::Named { name: P_INT.into() }],
        (S::Gl2Q, CommutativeSSDG) => vec![Witness::Named { name: T_POWERS.into() }],
        (S::ZRing, SDefiniteSpecialRing) => vec![lat(nz_nonneg(2)), lat(z0())],
        (S::QField, SDefiniteSpecialRing) => vec![lat(z0())],
        (S::QField, SSpecialDefiniteField) => vec![lat(LatticeSet::integers())],
        (S::QField, SDefiniteSpecialField) => vec![lat(z0()), lat(LatticeSet::Dense(Dense::QNonNeg))],
        (S::ZNearRing, SDefiniteSpecialNearRing) => vec![lat(z0())],
        (S::QNearRing, SDefiniteSpecialNearRing) => vec![lat(LatticeSet::Dense(Dense::QNonNeg)), lat(z0())],
        (S::Quaternions | S::QField, SSpecialDefiniteDivisionRing) => vec![lat(LatticeSet::integers())],
        (S::Quaternions, SDefiniteSpecialRing) => vec![lat(z0())],
        (S::Quaternions, SRing) => vec![lat(LatticeSet::Dense(Dense::Q))],
        (S::GroupRingZ { .. }, SDefiniteSpecialRing) => vec![Witness::Coefficients { set: z0() }],
        _ => Vec::new(),
    }
}

pub(super) fn detect(d: &Detector, s: &SymbolicStructure, p: Property) -> crate::Result<Detection> {
    let st = Structure::symbolic(s.clone());
    if p.is_simple() {
        return Ok(entries(s, p)
            .iter()
            .find_map(|w| certify(d, s, p, w))
            .map_or(Detection::absent(false), Detection::found));
    }
    let simple = |q: Property| entries(s, q).iter().find_map(|w| certify(d, s, q, w));
    Ok(match p {
        Property::StronglyCommutativeSSDG => match strongly_commutative(s) {
            StrongCommutativity::Holds { .. } => match simple(Property::CommutativeSSDG) {
                Some(c) => {
                    let rule = RuleCheck::new("ambient is commutative, so every witness is", true, true);
                    Detection::found(d.composite(&st, p, vec![c], vec![rule]))
                }
                None => Detection::absent(false),
            },
            StrongCommutativity::Refuted { semigroup, pair } => Detection::refuted(
                false,
                format!("{semigroup} is a non-commutative semigroup: {} and {} do not commute", pair.0, pair.1),
            ),
            _ => Detection::absent(false),
        },
        Property::SSpecialDefinitePrimeField => match (s, simple(Property::SSpecialDefiniteField)) {
            (SymbolicStructure::QField, Some(c)) => {
                let rule = RuleCheck::new("Q has no proper subfield", true, true);
                Detection::found(d.composite(&st, p, vec![c], vec![rule]))
            }
            _ => Detection::absent(false),
        },
        Property::SDoublyStrong => match (simple(Property::SRing), simple(Property::SDefiniteSpecialRing)) {
            (Some(a), Some(b)) => Detection::found(d.composite(&st, p, vec![a, b], Vec::new())),
            _ => Detection::absent(false),
        },
        Property::SStrongSpecialDefiniteRing | Property::SIdeallyStrong if *s == SymbolicStructure::ZRing => {
            z_subrings(d, &st, p)
        }
        Property::SIdeallyStrong if *s == SymbolicStructure::QField => {
            let z = LatticeSet::integers();
            let prod = LatticeSet::Dense(Dense::Q).set_product(&z);
            match (certify(d, s, Property::SSpecialDefiniteField, &Witness::Lattice { set: z.clone() }), prod) {
                (Some(_), Ok(prod)) if !prod.subset_of(&z) => Detection::refuted(
                    false,
                    format!("Z holds the semiring Z0 but Q·Z = {prod} is not inside Z, so Z is not an ideal"),
                ),
                _ => Detection::absent(false),
            }
        }
        _ => Detection::absent(false),
    })
}

/// Subrings of Z other than {0} and Z are nZ, n ≥ 2; checked up to this n.
pub const Z_SUBRING_LIMIT: i64 = 50;

fn z_subrings(d: &Detector, st: &Structure, p: Property) -> Detection {
    let s = SymbolicStructure::ZRing;
    let mut parts = Vec::new();
    let mut rules = vec![RuleCheck::new(
        format!("subrings nZ checked for 2 ≤ n ≤ {Z_SUBRING_LIMIT}"),
        true,
        true,
    )];
    let z = LatticeSet::integers();
    for n in 2..=Z_SUBRING_LIMIT {
        let v = LatticeSet::multiples(int(n));
        let w = nz_nonneg(n);
        let Some(c) = certify(d, &s, Property::SDefiniteSpecialRing, &Witness::Lattice { set: w.clone() }) else {
            return Detection::absent(false);
        };
        rules.push(RuleCheck::new(format!("{w} ⊂ {v}"), true, w.subset_of(&v) && w != v));
        if p == Property::SIdeallyStrong {
            let absorbs = z.set_product(&v).is_ok_and(|x| x.subset_of(&v));
            rules.push(RuleCheck::new(format!("Z·{v} ⊆ {v}"), true, absorbs));
        }
        parts.push(c);
    }
    if !rules.iter().all(RuleCheck::holds) {
        return Detection::absent(false);
    }
    Detection::found(d.composite(st, p, parts, rules))
}

pub(super) fn strongly_commutative(s: &SymbolicStructure) -> StrongCommutativity {
    match s {
        SymbolicStructure::ZAdd | SymbolicStructure::QNonZeroMul => StrongCommutativity::Holds {
            witnesses: vec!["every subset of a commutative group".into()],
        },
        SymbolicStructure::Gl2Q => {
            let (a, b) = noncommuting_pair();
            StrongCommutativity::Refuted { semigroup: P_INT.into(), pair: (fmt_mat(&a), fmt_mat(&b)) }
        }
        _ => StrongCommutativity::Unknown,
    }
}

pub(super) fn certify(d: &Detector, s: &SymbolicStructure, p: Property, w: &Witness) -> Option<Certificate> {
    let rules = match (s, w) {
        (SymbolicStructure::Gl2Q, Witness::Named { name }) => matrix_rules(p, name)?,
        (SymbolicStructure::GroupRingZ { base, .. }, Witness::Coefficients { set }) => group_ring_rules(p, base, set)?,
        (_, Witness::Lattice { set }) => lattice_rules(s, p, set)?,
        _ => return None,
    };
    if !rules.iter().all(RuleCheck::holds) {
        return None;
    }
    Some(Certificate {
        property: p,
        structure: Structure::symbolic(s.clone()),
        witness: w.clone(),
        allow_trivial: d.allow_trivial,
        weak_axioms: None,
        strong_failure: None,
        rules,
    })
}

fn yes(rule: impl Into<String>, observed: bool) -> RuleCheck {
    RuleCheck::new(rule, true, observed)
}

fn no(rule: impl Into<String>, observed: bool) -> RuleCheck {
    RuleCheck::new(rule, false, observed)
}

fn semiring_rules(w: &LatticeSet, out: &mut Vec<RuleCheck>) {
    out.push(yes("closed under +", w.is_closed_add()));
    out.push(yes("closed under ×", w.is_closed_mul()));
    out.push(yes("contains 0", w.contains_zero()));
}

fn lattice_rules(s: &SymbolicStructure, p: Property, w: &LatticeSet) -> Option<Vec<RuleCheck>> {
    use Property::*;
    use SymbolicStructure as S;
    let base = s.base()?;
    let mut r = vec![
        yes(format!("{w} ⊊ {base}"), w.subset_of(&base) && *w != base || *s == S::Quaternions),
        yes("nonempty and not {0}", !matches!(w, LatticeSet::Empty | LatticeSet::Zero)),
    ];
    if *s == S::Quaternions {
        r.push(yes("inside the real axis Q·1", w.subset_of(&base)));
    }
    let one = w.member(&int(1));
    let (neg, _, pos) = w.signs();
    match (s, p) {
        (S::ZAdd, SSpecialDefiniteGroup | CommutativeSSDG) => {
            r.push(yes("closed under +", w.is_closed_add()));
            if p == CommutativeSSDG {
                r.push(yes("+ is commutative", true));
            }
            r.push(no("subgroup: contains 0 and closed under negation", w.contains_zero() && w.is_closed_neg()));
        }
        (S::QNonZeroMul, SSpecialDefiniteGroup | CommutativeSSDG) => {
            r.push(yes("closed under ×", w.is_closed_mul()));
            if p == CommutativeSSDG {
                r.push(yes("× is commutative", true));
            }
            r.push(no("subgroup: contains 1 and closed under inverses", one && w.is_closed_inv()));
        }
        (S::ZRing | S::QField | S::Quaternions, SDefiniteSpecialRing) => {
            semiring_rules(w, &mut r);
            r.push(no("subring: closed under negation", w.is_closed_neg()));
        }
        (S::ZRing | S::QField | S::Quaternions, SRing) => {
            semiring_rules(w, &mut r);
            r.push(yes("closed under negation", w.is_closed_neg()));
            r.push(yes("contains 1", one));
            r.push(yes("nonzero elements closed under inverses", w.is_closed_inv()));
        }
        (S::QField | S::Quaternions, SSpecialDefiniteField | SSpecialDefiniteDivisionRing) => {
            semiring_rules(w, &mut r);
            r.push(yes("closed under negation", w.is_closed_neg()));
            if *s == S::Quaternions {
                r.push(yes("real-axis products agree with quaternion products", axis_products_agree()));
                r.push(yes("2q ≠ 1 for integer quaternions q (norm 4N(q) ≠ 1)", two_not_invertible()));
            }
            r.push(no("contains 1 and nonzero elements have inverses", one && w.is_closed_inv()));
        }
        (S::QField, SDefiniteSpecialField) => {
            semiring_rules(w, &mut r);
            r.push(yes("contains 1", one));
            r.push(yes("strict: no x, -x pair besides 0", !(neg && pos)));
            r.push(yes("no zero divisors (inherited from Q)", true));
            r.push(yes("× is commutative", true));
            r.push(no("subfield: closed under negation and inverses", w.is_closed_neg() && w.is_closed_inv()));
        }
        (S::ZNearRing | S::QNearRing, SDefiniteSpecialNearRing) => {
            r.push(yes("closed under +", w.is_closed_add()));
            r.push(yes("closed under ⊙ (a ⊙ b = a)", true));
            r.push(yes("(a + b) ⊙ c = a ⊙ c + b ⊙ c (both equal a + b)", true));
            r.push(no("(W, +) a group: contains 0 and closed under negation", w.contains_zero() && w.is_closed_neg()));
        }
        _ => return None,
    }
    Some(r)
}

fn axis_products_agree() -> bool {
    (-5..=5).all(|a| (-5..=5).all(|b| quaternion_mul(Quaternion::new(a, 0, 0, 0), Quaternion::new(b, 0, 0, 0)) == Quaternion::new(a * b, 0, 0, 0)))
}

fn two_not_invertible() -> bool {
    let two = Quaternion::new(2, 0, 0, 0);
    let r = -3..=3;
    r.clone().all(|a| {
        r.clone().all(|b| {
            r.clone().all(|c| {
                r.clone().all(|e| {
                    let q = Quaternion::new(a, b, c, e);
                    let p = quaternion_mul(two, q);
                    p != Quaternion::ONE && p.norm() == 4 * q.norm()
                })
            })
        })
    })
}

fn group_ring_rules(p: Property, base: &FiniteMagma, set: &LatticeSet) -> Option<Vec<RuleCheck>> {
    if p != Property::SDefiniteSpecialRing || base.size() > 64 {
        return None;
    }
    let z = LatticeSet::integers();
    let mut r = vec![
        yes(format!("{set} ⊊ Z"), set.subset_of(&z) && *set != z),
        yes("nonempty and not {0}", !matches!(set, LatticeSet::Empty | LatticeSet::Zero)),
        yes("base is associative", check_semigroup(base).passed()),
    ];
    semiring_rules(set, &mut r);
    let ring = GroupRing::semigroup_ring(Coefficients::Integers, base.clone()).ok()?;
    let samples = set.truncate(3).unwrap_or_default();
    let coeffs: Vec<i64> = samples.iter().filter(|x| x.is_integer()).map(|x| x.to_integer()).collect();
    let elems: Vec<_> = (0..base.size())
        .flat_map(|g| coeffs.iter().map(move |&c| (g, c)))
        .filter_map(|(g, c)| ring.from_terms(&[(g, c), ((g + 1) % base.size(), c)]).ok())
        .collect();
    let stays = elems.iter().all(|a| {
        elems.iter().all(|b| {
            [ring.mul(a, b), ring.add(a, b)]
                .iter()
                .all(|x| x.support().all(|(_, &c)| set.member(&Rat::from_integer(c))))
        })
    });
    r.push(yes("sampled sums and products keep coefficients in the set", stays));
    r.push(no("subring: coefficients closed under negation", set.is_closed_neg()));
    Some(r)
}

type Mat = [[i64; 2]; 2];

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let mut c = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    c
}

fn det(a: &Mat) -> i64 {
    a[0][0] * a[1][1] - a[0][1] * a[1][0]
}

/// Inverse entries are integers exactly when det = ±1.
fn integral_inverse(a: &Mat) -> bool {
    det(a).abs() == 1
}

fn fmt_mat(a: &Mat) -> String {
    format!("[[{},{}],[{},{}]]", a[0][0], a[0][1], a[1][0], a[1][1])
}

fn noncommuting_pair() -> (Mat, Mat) {
    ([[1, 1], [0, 1]], [[1, 0], [1, 1]])
}

fn small_integer_matrices() -> Vec<Mat> {
    let r = -1..=2;
    let mut out = Vec::new();
    for a in r.clone() {
        for b in r.clone() {
            for c in r.clone() {
                for d in r.clone() {
                    let m = [[a, b], [c, d]];
                    if det(&m) != 0 {
                        out.push(m);
                    }
                }
            }
        }
    }
    out
}

fn matrix_rules(p: Property, name: &str) -> Option<Vec<RuleCheck>> {
    let commutative = p == Property::CommutativeSSDG;
    if !matches!(p, Property::SSpecialDefiniteGroup | Property::CommutativeSSDG) {
        return None;
    }
    let mut r = Vec::new();
    match name {
        P_INT => {
            let ms = small_integer_matrices();
            let closed = ms.iter().all(|a| ms.iter().all(|b| det(&mat_mul(a, b)) == det(a) * det(b) && det(&mat_mul(a, b)) != 0));
            r.push(yes("products of sampled integer matrices stay integral and nonsingular", closed));
            let (a, b) = noncommuting_pair();
            let comm = mat_mul(&a, &b) == mat_mul(&b, &a);
            if commutative {
                r.push(yes(format!("{} and {} commute", fmt_mat(&a), fmt_mat(&b)), comm));
            }
            let two = [[2, 0], [0, 1]];
            r.push(no(format!("{} has an integral inverse", fmt_mat(&two)), integral_inverse(&two)));
        }
        T_POWERS => {
            let a: Mat = [[1, -2], [-2, 1]];
            let mut pw = vec![a];
            for k in 1..8 {
                pw.push(mat_mul(&pw[k - 1], &a));
            }
            let closed = (0..4).all(|i| (0..4).all(|j| mat_mul(&pw[i], &pw[j]) == pw[i + j + 1]));
            r.push(yes("A^i A^j = A^(i+j)", closed));
            if commutative {
                let comm = (0..8).all(|i| (0..8).all(|j| mat_mul(&pw[i], &pw[j]) == mat_mul(&pw[j], &pw[i])));
                r.push(yes("powers of A commute", comm));
            }
            let dets_grow = pw.iter().enumerate().all(|(k, m)| det(m) == (-3i64).pow(k as u32 + 1));
            r.push(yes("det(A^k) = (-3)^k, never ±1", dets_grow));
            r.push(no("A has an integral inverse", integral_inverse(&a)));
        }
        _ => return None,
    }
    Some(r)
}

#[cfg(test)]
mod tests {
    use super::super::{detect, detect_strongly_commutative, verify_certificate, Detection, Mode};
    use super::*;
    use crate::constructors::cyclic;

    fn sym(s: SymbolicStructure) -> Structure {
        Structure::symbolic(s)
    }

    fn witness(s: SymbolicStructure, p: Property) -> Option<String> {
        detect(&sym(s), p, Mode::Catalog).unwrap().certificate().map(|c| {
            assert!(verify_certificate(c));
            c.witness_text()
        })
    }

    #[test]
    fn catalog_witnesses() {
        use Property::*;
        use SymbolicStructure as S;
        assert_eq!(witness(S::ZAdd, SSpecialDefiniteGroup).unwrap(), "1*Z+");
        assert_eq!(witness(S::QNonZeroMul, SSpecialDefiniteGroup).unwrap(), "1*Z!0");
        assert_eq!(witness(S::ZRing, SDefiniteSpecialRing).unwrap(), "2*Z+,0");
        assert_eq!(witness(S::QField, SSpecialDefiniteField).unwrap(), "1*Z");
        assert_eq!(witness(S::QField, SDefiniteSpecialField).unwrap(), "1*Z+,0");
        assert_eq!(witness(S::ZNearRing, SDefiniteSpecialNearRing).unwrap(), "1*Z+,0");
        assert_eq!(witness(S::Quaternions, SSpecialDefiniteDivisionRing).unwrap(), "1*Z");
        assert_eq!(witness(S::Gl2Q, SSpecialDefiniteGroup).unwrap(), P_INT);
        assert_eq!(witness(S::Gl2Q, CommutativeSSDG).unwrap(), T_POWERS);
        assert!(witness(S::ZRing, SRing).is_none());
        assert!(witness(S::ZRing, SStrongSpecialDefiniteRing).is_some());
        assert!(witness(S::ZRing, SIdeallyStrong).is_some());
        assert!(witness(S::QField, SSpecialDefinitePrimeField).is_some());
        assert!(witness(S::Quaternions, SDoublyStrong).is_some());
        assert!(witness(S::QField, SIdeallyStrong).is_none());
    }

    #[test]
    fn group_ring_catalog() {
        let s = S::GroupRingZ { base_name: "C_3".into(), base: cyclic(3).unwrap() };
        assert_eq!(witness(s, Property::SDefiniteSpecialRing).unwrap(), "(1*Z+,0)G");
    }
    use SymbolicStructure as S;

    #[test]
    fn subgroups_rejected() {
        let d = Detector::default();
        let q_pos = Witness::Lattice { set: LatticeSet::Dense(Dense::QPos) };
        assert!(d.certify(&sym(S::QNonZeroMul), Property::SSpecialDefiniteGroup, &q_pos).unwrap().is_none());
        let evens = Witness::Lattice { set: LatticeSet::multiples(int(2)) };
        assert!(d.certify(&sym(S::ZAdd), Property::SSpecialDefiniteGroup, &evens).unwrap().is_none());
        let p = Witness::Named { name: P_INT.into() };
        assert!(d.certify(&sym(S::Gl2Q), Property::CommutativeSSDG, &p).unwrap().is_none());
    }

    #[test]
    fn strong_commutativity() {
        let r = detect_strongly_commutative(&sym(S::Gl2Q)).unwrap();
        assert_eq!(r.as_bool(), Some(false));
        assert_eq!(detect_strongly_commutative(&sym(S::ZAdd)).unwrap().as_bool(), Some(true));
        let d = detect(&sym(S::Gl2Q), Property::StronglyCommutativeSSDG, Mode::Catalog).unwrap();
        assert!(matches!(d, Detection::NotFound { refutation: Some(_), .. }));
    }

    #[test]
    fn exhaustive_on_symbolic_rejected() {
        assert!(detect(&sym(S::ZAdd), Property::SSpecialDefiniteGroup, Mode::Exhaustive).is_err());
    }
}
