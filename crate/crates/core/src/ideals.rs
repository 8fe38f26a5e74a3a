//! Ideals of finite rings and of Z, S-ideals, S-definite ideals relative to
//! a field subset, ideals of a semigroup inside `(Q \ {0}, ×)`, and ideals of
//! a subring of Q.
//!
//! Conventions: "maximal" is maximal among proper ideals, "minimal" is
//! minimal among nonzero proper ideals, and prime ideals are proper.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finite::{enumerate_closed_subsets_multi, check_ring, Checker, ElementId, FiniteRingTable};
use crate::rational::{format_rat, int, is_int, Rat};
use crate::symbolic::{LatticeSet, Sign};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealClassification {
    pub ideal: String,
    pub prime: bool,
    pub maximal: bool,
    pub minimal: bool,
    pub principal: bool,
    /// `{0}` or the whole ring.
    pub trivial: bool,
    pub generator: Option<String>,
    /// `(x, y)` with `xy` in the ideal but neither factor.
    pub non_prime_witness: Option<(String, String)>,
    /// A proper ideal strictly containing this one.
    pub larger_ideal: Option<String>,
    /// A nonzero ideal strictly inside this one.
    pub smaller_ideal: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelativeIdealWitness {
    pub ideal: Vec<ElementId>,
    pub reference: Vec<ElementId>,
    /// `(s, b, s·b)` for every `s` in the ideal and `b` in the reference.
    pub pairs: Vec<(ElementId, ElementId, ElementId)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SIdealSearch {
    /// Proper ideals paired with a field strictly inside them.
    pub found: Vec<(Vec<ElementId>, Vec<ElementId>)>,
    /// Proper ideals that are fields themselves but contain no smaller field.
    pub near_misses: Vec<Vec<ElementId>>,
}

impl SIdealSearch {
    pub fn witness(&self) -> Option<&(Vec<ElementId>, Vec<ElementId>)> {
        self.found.first()
    }
}

pub fn format_subset(r: &FiniteRingTable, s: &[ElementId]) -> String {
    let parts: Vec<&str> = s.iter().map(|&a| r.label(a)).collect();
    format!("{{{}}}", parts.join(","))
}

fn require_ring(r: &FiniteRingTable) -> Result<()> {
    let rep = check_ring(r);
    match rep.violations.first() {
        None => Ok(()),
        Some(v) => Err(Error::AxiomFailure(format!("not a ring: {:?} fails", v.axiom))),
    }
}

fn absorbs(r: &FiniteRingTable, s: &[ElementId]) -> bool {
    let mut mask = vec![false; r.size()];
    for &a in s {
        mask[a] = true;
    }
    s.iter()
        .all(|&i| (0..r.size()).all(|x| mask[r.mul(x, i)] && mask[r.mul(i, x)]))
}

fn additive_subgroups(r: &FiniteRingTable) -> Result<Vec<Vec<ElementId>>> {
    enumerate_closed_subsets_multi(&[r.additive()], None)
}

/// Two-sided ideals, ordered by size then lexicographically.
pub fn enumerate_ideals(r: &FiniteRingTable) -> Result<Vec<Vec<ElementId>>> {
    require_ring(r)?;
    Ok(additive_subgroups(r)?.into_iter().filter(|s| absorbs(r, s)).collect())
}

pub fn is_ideal(r: &FiniteRingTable, s: &[ElementId]) -> bool {
    !s.is_empty() && Checker::new(1).additive_group_only(r, s) && absorbs(r, s)
}

impl Checker {
    fn additive_group_only(&self, r: &FiniteRingTable, s: &[ElementId]) -> bool {
        self.group_on(r.additive(), s).passed()
    }
}

/// Smallest ideal containing `g`.
pub fn generated_ideal(r: &FiniteRingTable, g: ElementId) -> Vec<ElementId> {
    let n = r.size();
    let mut seeds = vec![g];
    for x in 0..n {
        seeds.push(r.mul(x, g));
        seeds.push(r.mul(g, x));
        for y in 0..n {
            seeds.push(r.mul(r.mul(x, g), y));
        }
    }
    seeds.sort_unstable();
    seeds.dedup();
    r.additive().closure(&seeds)
}

fn sorted(s: &[ElementId]) -> Vec<ElementId> {
    let mut v = s.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

fn strict_subset(a: &[ElementId], b: &[ElementId]) -> bool {
    a.len() < b.len() && a.iter().all(|x| b.binary_search(x).is_ok())
}

pub fn classify_ideal(r: &FiniteRingTable, ideal: &[ElementId]) -> Result<IdealClassification> {
    let ideal = sorted(ideal);
    let all = enumerate_ideals(r)?;
    if !all.contains(&ideal) {
        return Err(Error::NotAnIdeal(format_subset(r, &ideal)));
    }
    let n = r.size();
    let zero = r.zero().expect("rings have a zero");
    let proper = ideal.len() < n;
    let nonzero = ideal != [zero];
    let inside = |x: ElementId| ideal.binary_search(&x).is_ok();

    let non_prime = if proper {
        (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .find(|&(x, y)| inside(r.mul(x, y)) && !inside(x) && !inside(y))
    } else {
        None
    };
    let larger = all
        .iter()
        .find(|j| j.len() < n && strict_subset(&ideal, j))
        .filter(|_| proper);
    let smaller = all
        .iter()
        .find(|j| *j != &vec![zero] && strict_subset(j, &ideal));
    let generator = ideal.iter().copied().find(|&g| generated_ideal(r, g) == ideal);

    Ok(IdealClassification {
        ideal: format_subset(r, &ideal),
        prime: proper && non_prime.is_none(),
        maximal: proper && larger.is_none(),
        minimal: proper && nonzero && smaller.is_none(),
        principal: generator.is_some(),
        trivial: !proper || !nonzero,
        generator: generator.map(|g| r.label(g).to_string()),
        non_prime_witness: non_prime.map(|(x, y)| (r.label(x).to_string(), r.label(y).to_string())),
        larger_ideal: larger.map(|j| format_subset(r, j)),
        smaller_ideal: smaller.map(|j| format_subset(r, j)),
    })
}

/// Fields among the subsets closed under both operations, strictly inside `a`.
fn fields_inside(r: &FiniteRingTable, a: &[ElementId], subrings: &[Vec<ElementId>]) -> Vec<Vec<ElementId>> {
    let ck = Checker::new(1);
    subrings
        .iter()
        .filter(|s| strict_subset(s, a) && ck.field_on(r, s).passed())
        .cloned()
        .collect()
}

fn subrings(r: &FiniteRingTable) -> Result<Vec<Vec<ElementId>>> {
    Ok(additive_subgroups(r)?
        .into_iter()
        .filter(|s| r.multiplicative().is_closed(s))
        .collect())
}

/// S-ideals: proper ideals `A` with a field strictly inside `A`.
pub fn find_s_ideal(r: &FiniteRingTable) -> Result<SIdealSearch> {
    let ideals = enumerate_ideals(r)?;
    let subs = subrings(r)?;
    let ck = Checker::new(1);
    let mut found = Vec::new();
    let mut near_misses = Vec::new();
    for a in ideals.iter().filter(|a| a.len() < r.size()) {
        let fs = fields_inside(r, a, &subs);
        if fs.is_empty() {
            if ck.field_on(r, a).passed() {
                near_misses.push(a.clone());
            }
        } else {
            found.extend(fs.into_iter().map(|f| (a.clone(), f)));
        }
    }
    Ok(SIdealSearch { found, near_misses })
}

/// Right S-definite ideals relative to the field subset `b`: additive
/// abelian subgroups `S` with `s·b ∈ S`. All rings in scope are
/// commutative, so left and right coincide.
pub fn find_s_definite_ideals(r: &FiniteRingTable, b: &[ElementId]) -> Result<Vec<RelativeIdealWitness>> {
    require_ring(r)?;
    let b = sorted(b);
    if b.len() >= r.size() || !Checker::new(1).field_on(r, &b).passed() {
        return Err(Error::NotAField);
    }
    let ck = Checker::new(1);
    Ok(additive_subgroups(r)?
        .into_iter()
        .filter(|s| ck.abelian_group_on(r.additive(), s).passed())
        .filter_map(|s| {
            let pairs: Vec<_> = s
                .iter()
                .flat_map(|&x| b.iter().map(move |&y| (x, y)))
                .map(|(x, y)| (x, y, r.mul(x, y)))
                .collect();
            pairs
                .iter()
                .all(|&(_, _, p)| s.binary_search(&p).is_ok())
                .then(|| RelativeIdealWitness {
                    ideal: s.clone(),
                    reference: b.clone(),
                    pairs,
                })
        })
        .collect())
}

pub fn verify_relative_witness(r: &FiniteRingTable, w: &RelativeIdealWitness) -> bool {
    let ck = Checker::new(1);
    ck.abelian_group_on(r.additive(), &w.ideal).passed()
        && w.pairs.len() == w.ideal.len() * w.reference.len()
        && w.pairs
            .iter()
            .all(|&(s, b, p)| r.mul(s, b) == p && w.ideal.contains(&p) && w.ideal.contains(&s) && w.reference.contains(&b))
}

fn smallest_prime_factor(n: u64) -> Option<u64> {
    (2..=n).find(|d| n % d == 0)
}

fn is_prime(n: u64) -> bool {
    smallest_prime_factor(n) == Some(n)
}

/// Classes of `nZ` in Z.
pub fn classify_nz(n: u64) -> Result<IdealClassification> {
    match n {
        0 => return Err(Error::Malformed("classify_nz needs n >= 1".into())),
        1 => return Err(Error::ImproperIdeal("1Z is all of Z".into())),
        _ => {}
    }
    let q = smallest_prime_factor(n).unwrap();
    let prime = q == n;
    Ok(IdealClassification {
        ideal: format!("{n}Z"),
        prime,
        maximal: prime,
        minimal: false,
        principal: true,
        trivial: false,
        generator: Some(n.to_string()),
        non_prime_witness: (!prime).then(|| (q.to_string(), (n / q).to_string())),
        larger_ideal: (!prime).then(|| format!("{q}Z")),
        smaller_ideal: Some(format!("{}Z", 2 * n)),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupIdealCheck {
    pub ideal: bool,
    /// `(t, p, t·p)` with the product outside P.
    pub witness: Option<(String, String, String)>,
}

/// Elements of a lattice set by increasing magnitude, positive first.
fn lattice_walk(s: &LatticeSet, count: i64) -> Vec<Rat> {
    let Some(q) = s.scale() else {
        return if s.contains_zero() { vec![Rat::zero()] } else { Vec::new() };
    };
    let mut out = Vec::new();
    for k in 1..=count {
        for x in [q * int(k), -(q * int(k))] {
            if s.member(&x) {
                out.push(x);
            }
        }
    }
    if s.contains_zero() {
        out.push(Rat::zero());
    }
    out
}

/// `P` is an ideal of the multiplicative semigroup `T` iff `T·P ⊆ P`
/// (commutative, so one side suffices).
pub fn verify_semigroup_ideal(t: &LatticeSet, p: &LatticeSet) -> Result<SemigroupIdealCheck> {
    if !p.subset_of(t) {
        return Err(Error::NotSubset(format!("{p} is not inside {t}")));
    }
    if !t.is_closed_mul() {
        return Err(Error::AxiomFailure(format!("{t} is not closed under multiplication")));
    }
    let prod = t.set_product(p)?;
    if prod.subset_of(p) {
        return Ok(SemigroupIdealCheck {
            ideal: true,
            witness: None,
        });
    }
    let ts = lattice_walk(t, 12);
    let ps = lattice_walk(p, 12);
    let witness = ts.iter().find_map(|a| {
        ps.iter()
            .find(|b| !p.member(&(a * *b)))
            .map(|b| (format_rat(a), format_rat(b), format_rat(&(a * b))))
    });
    Ok(SemigroupIdealCheck {
        ideal: false,
        witness,
    })
}

fn integer_scale(s: &LatticeSet) -> Option<u64> {
    s.scale().filter(is_int).map(|q| q.to_integer() as u64)
}

/// Ideals `mZ⁺` of `Z⁺` and `mZ \ {0}` of `Z \ {0}`, classified among the
/// ideals of the same lattice shape: maximal ⇔ prime ⇔ `m` prime, always
/// principal, never minimal.
pub fn classify_group_side(p: &LatticeSet, t: &LatticeSet) -> Result<IdealClassification> {
    let check = verify_semigroup_ideal(t, p)?;
    if !check.ideal {
        return Err(Error::NotAnIdeal(p.to_string()));
    }
    let shape_ok = |s: &LatticeSet, want: Sign| {
        matches!(s, LatticeSet::Lattice { sign, with_zero: false, .. } if *sign == want)
    };
    let sign = match t {
        _ if *t == LatticeSet::z_pos() => Sign::Pos,
        _ if *t == LatticeSet::z_nonzero() => Sign::NonZero,
        _ => return Err(Error::Unsupported(format!("group-side ideals are classified inside Z+ or Z!0, not {t}"))),
    };
    if !shape_ok(p, sign) {
        return Err(Error::Unsupported(format!("{p} is not of the form mZ inside {t}")));
    }
    let m = integer_scale(p).ok_or_else(|| Error::Unsupported(format!("{p} has a non-integer scale")))?;
    if m == 1 {
        return Err(Error::ImproperIdeal(p.to_string()));
    }
    let q = smallest_prime_factor(m).unwrap();
    let prime = q == m;
    let shape = |k: u64| LatticeSet::lattice(int(k as i64), sign, false).unwrap().to_string();
    Ok(IdealClassification {
        ideal: p.to_string(),
        prime,
        maximal: prime,
        minimal: false,
        principal: true,
        trivial: false,
        generator: Some(m.to_string()),
        non_prime_witness: (!prime).then(|| (q.to_string(), (m / q).to_string())),
        larger_ideal: (!prime).then(|| shape(q)),
        smaller_ideal: Some(shape(2 * m)),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSideReport {
    pub subring: String,
    pub classification: IdealClassification,
    /// Always false: `kZ ⊋ 2kZ` for every candidate.
    pub minimal_ideals_exist: bool,
}

/// Ideals `kZ` of a subring `nZ` of Q. Primality is decided exactly on
/// residues: with `a = nx`, `b = ny`, membership depends only on `x, y mod k`.
pub fn field_side_ideals(field: &LatticeSet, subring: &LatticeSet, ideal: &LatticeSet) -> Result<FieldSideReport> {
    if *field != LatticeSet::Dense(crate::symbolic::Dense::Q) {
        return Err(Error::UnsupportedSubring(format!("field-side ideals are computed inside Q, not {field}")));
    }
    let full = |s: &LatticeSet| matches!(s, LatticeSet::Lattice { sign: Sign::All, .. });
    let n = integer_scale(subring)
        .filter(|_| full(subring))
        .ok_or_else(|| Error::UnsupportedSubring(subring.to_string()))?;
    let k = integer_scale(ideal)
        .filter(|_| full(ideal))
        .ok_or_else(|| Error::UnsupportedSubring(format!("{ideal} is not of the form kZ")))?;
    if k % n != 0 {
        return Err(Error::NotSubset(format!("{ideal} is not inside {subring}")));
    }
    if k == n {
        return Err(Error::ImproperIdeal(ideal.to_string()));
    }
    let in_ideal = |v: u64| v % k == 0;
    let non_prime = (1..k)
        .flat_map(|x| (1..k).map(move |y| (x, y)))
        .find(|&(x, y)| in_ideal(n * n % k * x % k * y) && !in_ideal(n * x) && !in_ideal(n * y))
        .map(|(x, y)| ((n * x).to_string(), (n * y).to_string()));
    let ratio = k / n;
    let maximal = is_prime(ratio);
    let larger = (!maximal).then(|| format!("{}Z", n * smallest_prime_factor(ratio).unwrap()));
    let name = |s: &LatticeSet| {
        let q = s.scale().unwrap();
        if q.is_positive() && q.is_integer() && q.to_integer() == 1 {
            "Z".to_string()
        } else {
            format!("{}Z", format_rat(&q))
        }
    };
    Ok(FieldSideReport {
        subring: name(subring),
        classification: IdealClassification {
            ideal: name(ideal),
            prime: non_prime.is_none(),
            maximal,
            minimal: false,
            principal: true,
            trivial: false,
            generator: Some(k.to_string()),
            non_prime_witness: non_prime,
            larger_ideal: larger,
            smaller_ideal: Some(format!("{}Z", 2 * k)),
        },
        minimal_ideals_exist: false,
    })
}
