//! Integer quaternions, truncated polynomial algebras, small matrix rings
//! and table-driven lattice semirings.

use itertools::Itertools;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::guard;
use crate::error::{Error, Result};
use crate::finite::{check_distributive_lattice, ElementId, FiniteRingTable};
use crate::rational::{format_rat, Rat};

/// `a0 + a1 i + a2 j + a3 k` with integer coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Quaternion {
    pub a0: i64,
    pub a1: i64,
    pub a2: i64,
    pub a3: i64,
}

impl Quaternion {
    pub const fn new(a0: i64, a1: i64, a2: i64, a3: i64) -> Self {
        Self { a0, a1, a2, a3 }
    }

    pub const ONE: Quaternion = Quaternion::new(1, 0, 0, 0);
    pub const I: Quaternion = Quaternion::new(0, 1, 0, 0);
    pub const J: Quaternion = Quaternion::new(0, 0, 1, 0);
    pub const K: Quaternion = Quaternion::new(0, 0, 0, 1);

    pub fn neg(self) -> Self {
        Self::new(-self.a0, -self.a1, -self.a2, -self.a3)
    }

    pub fn add(self, o: Self) -> Self {
        Self::new(self.a0 + o.a0, self.a1 + o.a1, self.a2 + o.a2, self.a3 + o.a3)
    }

    pub fn norm(self) -> i64 {
        self.a0 * self.a0 + self.a1 * self.a1 + self.a2 * self.a2 + self.a3 * self.a3
    }
}

pub fn quaternion_mul(a: Quaternion, b: Quaternion) -> Quaternion {
    Quaternion {
        a0: a.a0 * b.a0 - a.a1 * b.a1 - a.a2 * b.a2 - a.a3 * b.a3,
        a1: a.a0 * b.a1 + a.a1 * b.a0 + a.a2 * b.a3 - a.a3 * b.a2,
        a2: a.a0 * b.a2 + a.a2 * b.a0 - a.a1 * b.a3 + a.a3 * b.a1,
        a3: a.a0 * b.a3 - a.a2 * b.a1 + a.a1 * b.a2 + a.a3 * b.a0,
    }
}

/// Polynomials over Q with `x^(n+1) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncPolyAlgebra {
    pub bound: usize,
}

impl TruncPolyAlgebra {
    pub fn new(bound: usize) -> Self {
        Self { bound }
    }

    fn period(&self) -> usize {
        self.bound + 1
    }

    /// Folds exponents mod `n+1` into a length-`n+1` coefficient vector.
    pub fn reduce(&self, p: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.period()];
        for (i, c) in p.iter().enumerate() {
            out[i % self.period()] += c;
        }
        out
    }

    pub fn mul(&self, p: &[Rat], q: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.period()];
        for (i, a) in p.iter().enumerate() {
            for (j, b) in q.iter().enumerate() {
                out[(i + j) % self.period()] += a * b;
            }
        }
        out
    }

    pub fn add(&self, p: &[Rat], q: &[Rat]) -> Vec<Rat> {
        let (p, q) = (self.reduce(p), self.reduce(q));
        p.iter().zip(&q).map(|(a, b)| a + b).collect()
    }

    pub fn format(&self, p: &[Rat]) -> String {
        let mut out = String::new();
        for (i, c) in self.reduce(p).iter().enumerate().rev().filter(|(_, c)| !c.is_zero()) {
            let mag = c.abs();
            let coef = if i > 0 && mag.is_one() { String::new() } else { format_rat(&mag) };
            let term = match i {
                0 => coef,
                1 => format!("{coef}x"),
                _ => format!("{coef}x^{i}"),
            };
            let neg = c.is_negative();
            if out.is_empty() {
                out = if neg { format!("-{term}") } else { term };
            } else {
                out.push_str(if neg { " - " } else { " + " });
                out.push_str(&term);
            }
        }
        if out.is_empty() {
            "0".into()
        } else {
            out
        }
    }
}

/// `k×k` matrices over a finite ring, `k <= 2`. An element's index writes
/// its row-major entries as base-`n` digits, first entry least significant.
pub fn matrix_ring(coeff: &FiniteRingTable, k: usize) -> Result<FiniteRingTable> {
    if k == 0 || k > 2 {
        return Err(Error::SizeGuard(format!("matrix rings are materialised for k <= 2, got {k}")));
    }
    let n = coeff.size();
    let cells = k * k;
    let count = n.checked_pow(cells as u32).unwrap_or(usize::MAX);
    guard("matrix ring", count)?;
    let zero = coeff
        .zero()
        .ok_or_else(|| Error::AxiomFailure("coefficient ring has no additive identity".into()))?;
    let decode = |mut idx: usize| -> Vec<ElementId> {
        (0..cells)
            .map(|_| {
                let d = idx % n;
                idx /= n;
                d
            })
            .collect()
    };
    let encode = |m: &[ElementId]| m.iter().rev().fold(0, |acc, &d| acc * n + d);
    let mats: Vec<Vec<ElementId>> = (0..count).map(decode).collect();
    let labels = mats
        .iter()
        .map(|m| {
            let rows = m.chunks(k).map(|r| format!("[{}]", r.iter().map(|&d| coeff.label(d)).join(",")));
            format!("[{}]", rows.collect::<Vec<_>>().join(","))
        })
        .collect();
    FiniteRingTable::from_fns(
        labels,
        |a, b| {
            let s: Vec<ElementId> = mats[a].iter().zip(&mats[b]).map(|(&x, &y)| coeff.add(x, y)).collect();
            encode(&s)
        },
        |a, b| {
            let (x, y) = (&mats[a], &mats[b]);
            let p: Vec<ElementId> = (0..cells)
                .map(|c| {
                    let (i, j) = (c / k, c % k);
                    (0..k).fold(zero, |acc, t| coeff.add(acc, coeff.mul(x[i * k + t], y[t * k + j])))
                })
                .collect();
            encode(&p)
        },
    )
}

/// A distributive lattice as a semiring with `+ = join`, `× = meet`.
pub fn lattice_semiring(
    labels: Vec<String>,
    join: Vec<Vec<ElementId>>,
    meet: Vec<Vec<ElementId>>,
) -> Result<FiniteRingTable> {
    let r = FiniteRingTable::new(labels, join, meet)?;
    let rep = check_distributive_lattice(&r);
    if let Some(v) = rep.violations.first() {
        let w: Vec<&str> = v.witness.iter().map(|&a| r.label(a)).collect();
        return Err(Error::AxiomFailure(format!(
            "lattice tables fail {:?} at ({})",
            v.axiom,
            w.join(", ")
        )));
    }
    Ok(r)
}

/// The chain `l0 < l1 < …` with join = max and meet = min.
pub fn chain_lattice(labels: Vec<String>) -> Result<FiniteRingTable> {
    let n = labels.len();
    let join = (0..n).map(|a| (0..n).map(|b| a.max(b)).collect()).collect();
    let meet = (0..n).map(|a| (0..n).map(|b| a.min(b)).collect()).collect();
    lattice_semiring(labels, join, meet)
}
