use serde::{Deserialize, Serialize};

use super::Structure;
use crate::error::{Error, Result};
use crate::finite::{Axiom, AxiomReport, Collector, ElementId, StructureClass, DEFAULT_CAP};
use crate::rational::{format_rat, rat, Rat};
use crate::symbolic::LatticeSet;

/// Checks that `map[x]` preserves every operation. Magma to magma checks
/// the single operation, ring to ring checks both.
pub fn verify_s_homomorphism(map: &[ElementId], domain: &Structure, codomain: &Structure) -> Result<AxiomReport<String>> {
    let (n, m) = match (domain.size(), codomain.size()) {
        (Some(n), Some(m)) => (n, m),
        _ => return Err(Error::ClassMismatch("finite maps need finite structures".into())),
    };
    if map.len() != n {
        return Err(Error::PartialMap(format!("map has {} entries for {n} domain elements", map.len())));
    }
    if let Some((x, &y)) = map.iter().enumerate().find(|(_, &y)| y >= m) {
        return Err(Error::PartialMap(format!("element {x} maps to {y}, outside the codomain")));
    }
    let mut c = Collector::new(StructureClass::Homomorphism, DEFAULT_CAP);
    let lbl = |s: &Structure, a: ElementId| s.format_subset(&[a]).trim_matches(['{', '}']).to_string();
    let pair = |x, y| vec![lbl(domain, x), lbl(domain, y)];
    match (domain, codomain) {
        (Structure::Magma { table: a, .. }, Structure::Magma { table: b, .. }) => {
            'o: for x in 0..n {
                for y in 0..n {
                    if map[a.op(x, y)] != b.op(map[x], map[y]) && !c.push(Axiom::PreservesOp, pair(x, y)) {
                        break 'o;
                    }
                }
            }
        }
        (Structure::Ring { table: a, .. }, Structure::Ring { table: b, .. }) => {
            'r: for x in 0..n {
                for y in 0..n {
                    if map[a.add(x, y)] != b.add(map[x], map[y]) && !c.push(Axiom::PreservesAdd, pair(x, y)) {
                        break 'r;
                    }
                    if map[a.mul(x, y)] != b.mul(map[x], map[y]) && !c.push(Axiom::PreservesMul, pair(x, y)) {
                        break 'r;
                    }
                }
            }
        }
        _ => return Err(Error::ClassMismatch("domain and codomain must both be magmas or both rings".into())),
    }
    Ok(c.finish())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LatticeOps {
    Add,
    Mul,
    Ring,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeDomain {
    pub set: LatticeSet,
    pub ops: LatticeOps,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum LatticeMap {
    /// `x ↦ factor · x`.
    Scale {
        #[serde(with = "crate::rational::text")]
        factor: Rat,
    },
}

impl LatticeMap {
    pub fn identity() -> Self {
        LatticeMap::Scale { factor: rat(1, 1) }
    }

    pub fn apply(&self, x: &Rat) -> Rat {
        match self {
            LatticeMap::Scale { factor } => factor * x,
        }
    }
}

/// The first `count` members of `set` in the order
/// 1, -1, 2, -2, 1/2, -1/2, ... (by height), with 0 last.
pub(crate) fn walk(set: &LatticeSet, count: usize) -> Vec<Rat> {
    let mut out = Vec::new();
    if let Some(q) = set.scale() {
        let mut k = 1;
        while out.len() < count && k <= 4 * count as i64 + 4 {
            for x in [q * Rat::from_integer(k), -q * Rat::from_integer(k)] {
                if set.member(&x) && out.len() < count {
                    out.push(x);
                }
            }
            k += 1;
        }
    } else {
        'h: for h in 1..=64i64 {
            for d in 1..=h {
                for x in [rat(h, d), -rat(h, d)] {
                    if set.member(&x) && !out.contains(&x) {
                        out.push(x);
                        if out.len() >= count {
                            break 'h;
                        }
                    }
                }
            }
        }
    }
    if set.contains_zero() && out.len() < count.max(1) {
        out.push(Rat::from_integer(0));
    }
    out
}

pub const DEFAULT_SAMPLES: usize = 20;

/// Samples `samples` domain elements and checks every pair among them.
pub fn verify_lattice_homomorphism(
    map: &LatticeMap,
    domain: &LatticeDomain,
    codomain: &LatticeDomain,
    samples: usize,
) -> Result<AxiomReport<String>> {
    let ring = |d: &LatticeDomain| d.ops == LatticeOps::Ring;
    if ring(domain) != ring(codomain) {
        return Err(Error::ClassMismatch("ring maps need rings on both sides".into()));
    }
    let xs = walk(&domain.set, samples);
    if xs.is_empty() {
        return Err(Error::PartialMap(format!("no sample points in {}", domain.set)));
    }
    let mut c = Collector::new(StructureClass::Homomorphism, DEFAULT_CAP);
    let f = |x: &Rat| map.apply(x);
    let apply = |ops: LatticeOps, a: &Rat, b: &Rat| match ops {
        LatticeOps::Add | LatticeOps::Ring => a + b,
        LatticeOps::Mul => a * b,
    };
    for x in &xs {
        if !codomain.set.member(&f(x)) && !c.push(Axiom::ImageContainment, vec![format_rat(x)]) {
            return Ok(c.finish());
        }
    }
    'o: for x in &xs {
        for y in &xs {
            let w = || vec![format_rat(x), format_rat(y)];
            let first = if ring(domain) { Axiom::PreservesAdd } else { Axiom::PreservesOp };
            if f(&apply(domain.ops, x, y)) != apply(codomain.ops, &f(x), &f(y)) && !c.push(first, w()) {
                break 'o;
            }
            if ring(domain) && f(&(x * y)) != f(x) * f(y) && !c.push(Axiom::PreservesMul, w()) {
                break 'o;
            }
        }
    }
    Ok(c.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{build_zn, zn_add};
    use crate::rational::int;

    fn dom(set: LatticeSet, ops: LatticeOps) -> LatticeDomain {
        LatticeDomain { set, ops }
    }

    #[test]
    fn inclusion_2z_into_z() {
        let r = verify_lattice_homomorphism(
            &LatticeMap::identity(),
            &dom(LatticeSet::multiples(int(2)), LatticeOps::Ring),
            &dom(LatticeSet::integers(), LatticeOps::Ring),
            DEFAULT_SAMPLES,
        )
        .unwrap();
        assert!(r.passed());
    }

    #[test]
    fn additive_to_multiplicative_fails_at_one_one() {
        let r = verify_lattice_homomorphism(
            &LatticeMap::identity(),
            &dom(LatticeSet::integers(), LatticeOps::Add),
            &dom(LatticeSet::integers(), LatticeOps::Mul),
            DEFAULT_SAMPLES,
        )
        .unwrap();
        let v = r.first(Axiom::PreservesOp).unwrap();
        assert_eq!(v.witness, vec!["1", "1"]);
    }

    #[test]
    fn doubling_leaves_z_pos_inside() {
        let m = LatticeMap::Scale { factor: int(2) };
        let r = verify_lattice_homomorphism(
            &m,
            &dom(LatticeSet::z_pos(), LatticeOps::Add),
            &dom(LatticeSet::z_pos(), LatticeOps::Add),
            10,
        )
        .unwrap();
        assert!(r.passed());
        let r = verify_lattice_homomorphism(
            &m,
            &dom(LatticeSet::integers(), LatticeOps::Ring),
            &dom(LatticeSet::integers(), LatticeOps::Ring),
            10,
        )
        .unwrap();
        assert!(r.fails(Axiom::PreservesMul));
    }

    #[test]
    fn finite_maps() {
        let z6 = Structure::ring("Z_6", build_zn(6).unwrap());
        let z3 = Structure::ring("Z_3", build_zn(3).unwrap());
        let red: Vec<usize> = (0..6).map(|x| x % 3).collect();
        assert!(verify_s_homomorphism(&red, &z6, &z3).unwrap().passed());
        let id: Vec<usize> = (0..6).collect();
        assert!(verify_s_homomorphism(&id, &z6, &z6).unwrap().passed());
        let bad: Vec<usize> = (0..6).map(|x| (x + 1) % 6).collect();
        assert!(!verify_s_homomorphism(&bad, &z6, &z6).unwrap().passed());
        assert!(matches!(verify_s_homomorphism(&red[..3], &z6, &z3), Err(Error::PartialMap(_))));
        let g = Structure::magma("Z_6 (+)", zn_add(6).unwrap());
        assert!(matches!(verify_s_homomorphism(&id, &g, &z6), Err(Error::ClassMismatch(_))));
    }

    #[test]
    fn walk_order() {
        assert_eq!(walk(&LatticeSet::integers(), 5), vec![int(1), int(-1), int(2), int(-2), int(3)]);
        let q = walk(&LatticeSet::Dense(crate::symbolic::Dense::QPos), 3);
        assert_eq!(q.len(), 3);
    }
}
