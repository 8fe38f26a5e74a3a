mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;

use common::*;
use sdalg::automata::build_near_ring_zn;
use sdalg::constructors::{
    build_poly_quotient, build_zn, cyclic, dihedral, is_irreducible, quaternion_mul, symmetric_group, zn_mul,
    Coefficients, GroupRing, Quaternion,
};
use sdalg::detect::{detect, Detection, Mode, Property, Structure};
use sdalg::finite::{enumerate_closed_subsets, Checker, FiniteMagma};
use sdalg::ideals::{classify_ideal, enumerate_ideals};
use sdalg::linear::{is_s_definite_basis, rank, Comp, SemiVecDescriptor, Semifield, VecQ};
use sdalg::symbolic::SymbolicAmbient;
use sdalg::LatticeSet;

fn lat(s: &str) -> LatticeSet {
    s.parse().unwrap()
}

fn divisors(n: usize) -> usize {
    (1..=n).filter(|d| n % d == 0).count()
}

#[test]
fn closed_subsets_of_groups_are_subgroups() {
    let groups: Vec<FiniteMagma> = (1..=12)
        .map(|n| cyclic(n).unwrap())
        .chain((2..=6).map(|n| dihedral(n).unwrap()))
        .chain([symmetric_group(3).unwrap()])
        .collect();
    let c = Checker::new(1);
    for g in &groups {
        for s in enumerate_closed_subsets(g, None).unwrap() {
            assert!(c.group_on(g, &s).passed(), "{s:?}");
            assert!(c.semigroup_on(&g.restrict(&s).unwrap(), &(0..s.len()).collect::<Vec<_>>()).passed());
        }
    }
}

#[test]
fn ideal_count_is_divisor_count() {
    for n in 1..=60 {
        let r = build_zn(n).unwrap();
        assert_eq!(enumerate_ideals(&r).unwrap().len(), divisors(n), "Z_{n}");
    }
}

fn brute_flags(n: usize, ideal: &[usize], all: &[Vec<usize>]) -> (bool, bool, bool, bool) {
    let set: BTreeSet<usize> = ideal.iter().copied().collect();
    let proper = set.len() < n;
    let nonzero = set.len() > 1;
    let prime = proper && (0..n).all(|a| (0..n).all(|b| !set.contains(&(a * b % n)) || set.contains(&a) || set.contains(&b)));
    let others: Vec<BTreeSet<usize>> = all.iter().map(|i| i.iter().copied().collect()).collect();
    let maximal = proper && others.iter().all(|j| j.len() == n || !set.is_subset(j) || *j == set);
    let minimal = nonzero && others.iter().all(|j| j.len() == 1 || !j.is_subset(&set) || *j == set);
    let principal = (0..n).any(|g| (0..n).map(|r| g * r % n).collect::<BTreeSet<_>>() == set);
    (prime, maximal, minimal, principal)
}

#[test]
fn ideal_flags_match_definitions() {
    for n in 2..=60 {
        let r = build_zn(n).unwrap();
        let all = enumerate_ideals(&r).unwrap();
        if n <= 16 {
            assert_eq!(all, brute_ideals(n, |a, b| (a + b) % n, |a, b| a * b % n), "Z_{n}");
        }
        for i in &all {
            if i.len() == 1 || i.len() == n {
                continue;
            }
            let c = classify_ideal(&r, i).unwrap();
            assert_eq!((c.prime, c.maximal, c.minimal, c.principal), brute_flags(n, i, &all), "Z_{n} {i:?}");
        }
    }
}

#[test]
fn detection_directions_are_sound() {
    let c = Checker::new(1);
    for n in 2..=20 {
        let m = zn_mul(n).unwrap();
        if let Detection::Found { certificate } = detect(&Structure::magma("m", m.clone()), Property::SSemigroup, Mode::Exhaustive).unwrap() {
            let w = certificate.finite_witness().unwrap();
            assert!(c.group_on(&m, w).passed() && !c.group_on(&m, &m.elements()).passed());
        }
        let r = build_zn(n).unwrap();
        let s = Structure::ring("r", r.clone());
        for p in [Property::SDefiniteSpecialRing, Property::SDefiniteSpecialField] {
            if let Ok(Detection::Found { certificate }) = detect(&s, p, Mode::Exhaustive) {
                let w = certificate.finite_witness().unwrap();
                assert!(c.semiring_on(&r, w).passed() && !c.ring_on(&r, w).passed(), "{p} on Z_{n}");
            }
        }
        if let Detection::Found { certificate } = detect(&s, Property::SRing, Mode::Exhaustive).unwrap() {
            assert!(c.field_on(&r, certificate.finite_witness().unwrap()).passed());
        }
    }
}

#[test]
fn not_found_is_reproducible() {
    for n in [8, 9, 16] {
        let s = Structure::ring(format!("Z_{n}"), build_zn(n).unwrap());
        let a = detect(&s, Property::SRing, Mode::Exhaustive).unwrap();
        let b = detect(&s, Property::SRing, Mode::Exhaustive).unwrap();
        assert!(matches!(a, Detection::NotFound { exhaustive: true, .. }));
        assert_eq!(a, b);
    }
}

#[test]
fn near_rings_have_no_s_definite_special_witness() {
    for n in 1..=24 {
        let nr = build_near_ring_zn(n).unwrap();
        assert_eq!(nr.left_distributivity_witness().is_some(), n > 1, "n = {n}");
        let d = detect(&nr.structure(), Property::SDefiniteSpecialNearRing, Mode::Exhaustive).unwrap();
        assert!(matches!(d, Detection::NotFound { exhaustive: true, .. }), "n = {n}");
    }
}

#[test]
fn quotient_field_verdict_matches_irreducibility() {
    for p in [2i64, 3, 5] {
        for deg in 1..=3u32 {
            for code in 0..(p as usize).pow(deg) {
                let mut f: Vec<i64> = (0..deg).map(|i| (code / (p as usize).pow(i)) as i64 % p).collect();
                f.push(1);
                let q = build_poly_quotient(p as u64, &f).unwrap();
                assert_eq!(q.order(), (p as u64).pow(deg));
                assert_eq!(q.quotient_is_field().field, is_irreducible(p as u64, &f).unwrap().irreducible, "{f:?} mod {p}");
            }
        }
    }
    for f in [[1i64, 1, 0, 0, 1], [1, 0, 0, 0, 1], [2, 0, 0, 0, 1], [1, 1, 1, 1, 1]] {
        let q = build_poly_quotient(3, &f).unwrap();
        assert_eq!(q.quotient_is_field().field, is_irreducible(3, &f).unwrap().irreducible, "{f:?}");
    }
}

#[test]
fn coset_non_partition() {
    let h = lat("Z+");
    let a = h.left_coset(&r(2, 1), SymbolicAmbient::QNonZeroMul).unwrap();
    let b = h.left_coset(&r(1, 2), SymbolicAmbient::QNonZeroMul).unwrap();
    assert!(!a.intersect(&b).is_empty());
    assert_ne!(a, b);
}

/// Gaussian-elimination rank, kept separate from the library's.
fn oracle_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<sdalg::Rat>> = rows.iter().map(|r| r.iter().map(|&x| sdalg::Rat::from_integer(x)).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| m[i][c] != sdalg::Rat::from_integer(0)) else { continue };
        m.swap(rank, p);
        for i in 0..m.len() {
            if i != rank {
                let f = m[i][c] / m[rank][c];
                for j in 0..cols {
                    let t = m[rank][j] * f;
                    m[i][j] -= t;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Every lattice point of Z°^n with coordinates up to `bound` is a Z°
/// combination of `basis`, found by bounded search.
fn represents_all(basis: &[Vec<i64>], n: usize, bound: i64) -> bool {
    let mut reachable = BTreeSet::new();
    fn go(basis: &[Vec<i64>], i: usize, acc: Vec<i64>, bound: i64, out: &mut BTreeSet<Vec<i64>>) {
        if acc.iter().any(|&x| x > bound || x < 0) {
            return;
        }
        if i == basis.len() {
            out.insert(acc);
            return;
        }
        let mut cur = acc;
        loop {
            go(basis, i + 1, cur.clone(), bound, out);
            if basis[i].iter().all(|&x| x == 0) {
                break;
            }
            cur = cur.iter().zip(&basis[i]).map(|(a, b)| a + b).collect();
            if cur.iter().any(|&x| x > bound || x < 0) {
                break;
            }
        }
    }
    go(basis, 0, vec![0; n], bound, &mut reachable);
    reachable.len() == ((bound + 1) as usize).pow(n as u32)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn double_coset_scale_law(m in 1i64..=50, n in 1i64..=50, x in -50i64..=50) {
        prop_assume!(x != 0);
        let d = LatticeSet::double_coset(&lat(&format!("{m}Z+")), &r(x, 1), &lat(&format!("{n}Z+"))).unwrap();
        let sign = if x > 0 { "+" } else { "-" };
        prop_assert_eq!(&d, &lat(&format!("{}Z{sign}", m * x.abs() * n)));
        prop_assert_eq!(d.is_closed_mul(), x > 0);
    }

    #[test]
    fn lattice_products_match_enumeration(
        a in (1i64..=50, 1i64..=3, 0u8..4, any::<bool>()),
        b in (1i64..=50, 1i64..=3, 0u8..4, any::<bool>()),
    ) {
        let sa = lattice_from(r(a.0, a.1), a.2, a.3);
        let sb = lattice_from(r(b.0, b.1), b.2, b.3);
        prop_assert!(product_matches(&sa, &sb, &sa.set_product(&sb).unwrap(), 2_000));
        prop_assert!(intersection_matches(&sa, &sb, &sa.intersect(&sb), 10_000));
    }

    #[test]
    fn quaternion_identity_and_associativity(v in proptest::collection::vec(-9i64..=9, 12)) {
        let q = |i: usize| Quaternion::new(v[i], v[i + 1], v[i + 2], v[i + 3]);
        let (a, b, c) = (q(0), q(4), q(8));
        prop_assert_eq!(quaternion_mul(Quaternion::ONE, a), a);
        prop_assert_eq!(quaternion_mul(a, Quaternion::ONE), a);
        prop_assert_eq!(quaternion_mul(quaternion_mul(a, b), c), quaternion_mul(a, quaternion_mul(b, c)));
    }

    #[test]
    fn group_ring_is_associative(t in proptest::collection::vec((0usize..6, -5i64..=5), 12)) {
        let ring = GroupRing::group_ring(Coefficients::Integers, symmetric_group(3).unwrap()).unwrap();
        let el = |k: usize| ring.from_terms(&t[4 * k..4 * k + 4]).unwrap();
        let (a, b, c) = (el(0), el(1), el(2));
        prop_assert_eq!(ring.mul(&ring.mul(&a, &b), &c), ring.mul(&a, &ring.mul(&b, &c)));
    }

    #[test]
    fn s_definite_bases_pass_both_oracles(rows in proptest::collection::vec(proptest::collection::vec(0i64..=2, 2), 2)) {
        let w = SemiVecDescriptor::uniform(Comp::ZNonNeg, 2, Semifield::ZNonNeg);
        let b: Vec<VecQ> = rows.iter().map(|r| VecQ::ints(r)).collect();
        if is_s_definite_basis(&b, 2, &w).unwrap() {
            prop_assert_eq!(oracle_rank(&rows), 2);
            prop_assert_eq!(rank(&b), 2);
            prop_assert!(represents_all(&rows, 2, 20));
        }
    }
}
