//! Brute-force oracles shared by the integration tests. None of these call
//! into the library's own algorithms beyond building tables.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};
use sdalg::{LatticeSet, Rat};

pub fn r(n: i64, d: i64) -> Rat {
    Rat::new(n, d)
}

/// `{m·a·x·n·b : a, b ≥ 1}` cut at `bound`, by direct enumeration.
pub fn double_coset_positive(m: i64, x: i64, n: i64, bound: i64) -> BTreeSet<i64> {
    let mut out = BTreeSet::new();
    let step = m * x * n;
    let mut a = 1;
    while step * a <= bound {
        let mut b = 1;
        while step * a * b <= bound {
            out.insert(step * a * b);
            b += 1;
        }
        a += 1;
    }
    out
}

/// Lattice set from a scale, a sign code (+, -, !0, all) and a zero flag.
pub fn lattice_from(scale: Rat, sign: u8, zero: bool) -> LatticeSet {
    let text = match sign % 4 {
        0 => "Z+",
        1 => "Z-",
        2 => "Z!0",
        _ => "Z",
    };
    let z = if zero && sign % 4 != 3 { ",0" } else { "" };
    format!("{}/{}*{text}{z}", scale.numer(), scale.denom()).parse().unwrap()
}

/// Smallest nonzero magnitude in a lattice set, if any.
pub fn min_abs(els: &[Rat]) -> Option<Rat> {
    els.iter().filter(|x| !x.is_zero()).map(|x| x.abs()).min()
}

/// Checks `prod == a·b` against enumeration: every product of truncated
/// elements is a member, and every truncated member factors.
pub fn product_matches(a: &LatticeSet, b: &LatticeSet, prod: &LatticeSet, bound: i64) -> bool {
    let (Some(ta), Some(tb), Some(tp)) = (a.truncate(bound), b.truncate(bound), prod.truncate(bound)) else {
        return true;
    };
    let bound_q = Rat::from_integer(bound);
    for x in &ta {
        for y in &tb {
            let p = x * y;
            if p.abs() <= bound_q && !prod.member(&p) {
                return false;
            }
        }
    }
    if ta.is_empty() || tb.is_empty() {
        return tp.is_empty();
    }
    tp.iter().all(|c| {
        if c.is_zero() {
            return ta.iter().any(Zero::is_zero) || tb.iter().any(Zero::is_zero);
        }
        let mb = min_abs(&tb).unwrap_or(Rat::from_integer(1));
        let reach = (c.abs() / mb).ceil().to_integer();
        a.truncate(reach.max(1)).unwrap().iter().any(|x| !x.is_zero() && b.member(&(c / x)))
    })
}

/// `a ∩ b` against filtering the truncation of `a`.
pub fn intersection_matches(a: &LatticeSet, b: &LatticeSet, meet: &LatticeSet, bound: i64) -> bool {
    let (Some(ta), Some(tm)) = (a.truncate(bound), meet.truncate(bound)) else {
        return true;
    };
    let expect: Vec<Rat> = ta.into_iter().filter(|x| b.member(x)).collect();
    expect == tm
}

/// `a·h`, compared elementwise in both directions.
pub fn scaled_matches(h: &LatticeSet, a: &Rat, out: &LatticeSet, bound: i64) -> bool {
    let Some(th) = h.truncate(bound) else { return true };
    let Some(to) = out.truncate(bound) else { return true };
    th.iter().all(|x| out.member(&(a * x))) && to.iter().all(|y| h.member(&(y / a)))
}

/// Sparse convolution over a semigroup table with coefficients mod `m`.
pub fn convolve(table: &[Vec<usize>], a: &[i64], b: &[i64], m: i64) -> Vec<i64> {
    let mut out = vec![0; a.len()];
    for (g, &ca) in a.iter().enumerate() {
        for (h, &cb) in b.iter().enumerate() {
            let k = table[g][h];
            out[k] = (out[k] + ca * cb).rem_euclid(m);
        }
    }
    out
}

/// Unit products from the rules ij = k, jk = i, ki = j and their reverses.
/// Units are 0 = 1, 1 = i, 2 = j, 3 = k; the result is `(sign, unit)`.
pub fn unit_rule(a: usize, b: usize) -> (i64, usize) {
    match (a, b) {
        (0, x) | (x, 0) => (1, x),
        (x, y) if x == y => (-1, 0),
        (1, 2) => (1, 3),
        (2, 3) => (1, 1),
        (3, 1) => (1, 2),
        (2, 1) => (-1, 3),
        (3, 2) => (-1, 1),
        (1, 3) => (-1, 2),
        _ => unreachable!(),
    }
}

/// All subsets of 0..n closed under both operations of a ring and forming
/// ideals, by exhaustive subset scan.
pub fn brute_ideals(n: usize, add: impl Fn(usize, usize) -> usize, mul: impl Fn(usize, usize) -> usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        let s: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let inside = |x: usize| mask >> x & 1 == 1;
        let ok = s.iter().all(|&a| s.iter().all(|&b| inside(add(a, b))))
            && s.iter().all(|&a| (0..n).all(|r| inside(mul(a, r)) && inside(mul(r, a))));
        if ok {
            out.push(s);
        }
    }
    out
}
