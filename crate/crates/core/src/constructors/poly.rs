//! `Z_p[x]/(f)` for prime `p` and monic `f`. Coefficient vectors are
//! little-endian: `[1, 1, 0, 1]` is `x³ + x + 1`.

use serde::{Deserialize, Serialize};

use super::guard;
use crate::error::{Error, Result};
use crate::finite::FiniteRingTable;

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // p is prime, so a^(p-2) is the inverse.
    let mut base = a % p;
    let mut e = p - 2;
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

fn poly_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| (a.get(i).unwrap_or(&0) + p - b.get(i).unwrap_or(&0) % p) % p)
        .collect();
    trim(out)
}

/// Quotient and remainder of `a` by a nonzero `b` over `Z_p`.
fn poly_divmod(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead_inv = inv_mod(*b.last().expect("nonzero divisor"), p);
    let mut q = vec![0; r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() * lead_inv % p;
        q[shift] = c;
        for (i, &bi) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p * p - c * bi % p) % p;
        }
        r = trim(r);
    }
    (trim(q), r)
}

/// Renders `[1, 0, 2]` as `2x^2 + 1`.
pub fn format_poly(c: &[u64]) -> String {
    let terms: Vec<String> = c
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &a)| a != 0)
        .map(|(i, &a)| {
            let coef = if a == 1 && i > 0 { String::new() } else { a.to_string() };
            match i {
                0 => coef,
                1 => format!("{coef}x"),
                _ => format!("{coef}x^{i}"),
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PolyModElement {
    /// Exactly `d` coefficients, constant term first.
    pub coeffs: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyModRing {
    pub p: u64,
    /// Monic, little-endian, degree `d >= 1`.
    pub modulus: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Irreducibility {
    pub irreducible: bool,
    /// A monic factor of degree at most `d/2` and its cofactor.
    pub factors: Option<(Vec<u64>, Vec<u64>)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FieldVerdict {
    pub field: bool,
    pub zero_divisor: Option<(PolyModElement, PolyModElement)>,
}

/// Normalises `f` (reduced mod `p`, scaled monic) after checking `p` prime.
pub fn normalize_modulus(p: u64, f: &[i64]) -> Result<Vec<u64>> {
    if !is_prime(p) {
        return Err(Error::NonPrimeModulus(p));
    }
    let mut raw: Vec<i64> = f.to_vec();
    while raw.last() == Some(&0) {
        raw.pop();
    }
    if raw.len() < 2 {
        return Err(Error::ZeroDegree);
    }
    let red: Vec<u64> = raw.iter().map(|&c| c.rem_euclid(p as i64) as u64).collect();
    let lead = *red.last().unwrap();
    if lead == 0 {
        return Err(Error::NonInvertibleLeading(*raw.last().unwrap() as u64));
    }
    let s = inv_mod(lead, p);
    Ok(red.iter().map(|c| c * s % p).collect())
}

pub fn build_poly_quotient(p: u64, f: &[i64]) -> Result<PolyModRing> {
    let modulus = normalize_modulus(p, f)?;
    Ok(PolyModRing { p, modulus })
}

/// Exhaustive search for a monic divisor of degree `1..=d/2`.
pub fn is_irreducible(p: u64, f: &[i64]) -> Result<Irreducibility> {
    let f = normalize_modulus(p, f)?;
    let d = f.len() - 1;
    for k in 1..=d / 2 {
        let count = p.pow(k as u32);
        for idx in 0..count {
            let mut g: Vec<u64> = digits(idx, p, k);
            g.push(1);
            let (q, r) = poly_divmod(&f, &g, p);
            if r.is_empty() {
                return Ok(Irreducibility {
                    irreducible: false,
                    factors: Some((g, q)),
                });
            }
        }
    }
    Ok(Irreducibility {
        irreducible: true,
        factors: None,
    })
}

pub fn poly_product(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    poly_mul(a, b, p)
}

fn digits(mut idx: u64, p: u64, len: usize) -> Vec<u64> {
    (0..len)
        .map(|_| {
            let c = idx % p;
            idx /= p;
            c
        })
        .collect()
}

impl PolyModRing {
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn order(&self) -> u64 {
        self.p.pow(self.degree() as u32)
    }

    pub fn element(&self, coeffs: &[i64]) -> PolyModElement {
        let v: Vec<u64> = coeffs.iter().map(|&c| c.rem_euclid(self.p as i64) as u64).collect();
        self.reduce(&v)
    }

    fn reduce(&self, v: &[u64]) -> PolyModElement {
        let (_, r) = poly_divmod(v, &self.modulus, self.p);
        let mut coeffs = r;
        coeffs.resize(self.degree(), 0);
        PolyModElement { coeffs }
    }

    pub fn zero(&self) -> PolyModElement {
        self.element(&[])
    }

    pub fn one(&self) -> PolyModElement {
        self.element(&[1])
    }

    pub fn add(&self, a: &PolyModElement, b: &PolyModElement) -> PolyModElement {
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| (x + y) % self.p).collect();
        PolyModElement { coeffs }
    }

    pub fn neg(&self, a: &PolyModElement) -> PolyModElement {
        let coeffs = a.coeffs.iter().map(|x| (self.p - x) % self.p).collect();
        PolyModElement { coeffs }
    }

    pub fn mul(&self, a: &PolyModElement, b: &PolyModElement) -> PolyModElement {
        self.reduce(&poly_mul(&trim(a.coeffs.clone()), &trim(b.coeffs.clone()), self.p))
    }

    /// Extended Euclid on `(e, f)`; `None` when the gcd is not a unit.
    pub fn inverse(&self, e: &PolyModElement) -> Option<PolyModElement> {
        let p = self.p;
        let (mut r0, mut r1) = (self.modulus.clone(), trim(e.coeffs.clone()));
        let (mut t0, mut t1): (Vec<u64>, Vec<u64>) = (Vec::new(), vec![1]);
        while !r1.is_empty() {
            let (q, r) = poly_divmod(&r0, &r1, p);
            let t = poly_sub(&t0, &poly_mul(&q, &t1, p), p);
            r0 = std::mem::replace(&mut r1, r);
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.len() != 1 {
            return None;
        }
        let s = inv_mod(r0[0], p);
        let scaled: Vec<u64> = t0.iter().map(|c| c * s % p).collect();
        Some(self.reduce(&scaled))
    }

    pub fn index(&self, e: &PolyModElement) -> usize {
        e.coeffs.iter().rev().fold(0u64, |acc, &c| acc * self.p + c) as usize
    }

    pub fn from_index(&self, idx: usize) -> PolyModElement {
        PolyModElement {
            coeffs: digits(idx as u64, self.p, self.degree()),
        }
    }

    pub fn elements(&self) -> Vec<PolyModElement> {
        (0..self.order() as usize).map(|i| self.from_index(i)).collect()
    }

    pub fn label(&self, e: &PolyModElement) -> String {
        format_poly(&e.coeffs)
    }

    pub fn to_ring_table(&self) -> Result<FiniteRingTable> {
        guard("polynomial quotient", self.order() as usize)?;
        let els = self.elements();
        let labels = els.iter().map(|e| self.label(e)).collect();
        FiniteRingTable::from_fns(
            labels,
            |a, b| self.index(&self.add(&els[a], &els[b])),
            |a, b| self.index(&self.mul(&els[a], &els[b])),
        )
    }

    /// Field test by units: every nonzero `a` must satisfy `a^(q-1) = 1`.
    /// When that fails, a zero-divisor pair is located by a pair scan.
    pub fn quotient_is_field(&self) -> FieldVerdict {
        let one = self.one();
        let q = self.order();
        let els = self.elements();
        let all_units = els.iter().skip(1).all(|a| self.pow(a, q - 1) == one);
        if all_units {
            return FieldVerdict {
                field: true,
                zero_divisor: None,
            };
        }
        let zero = self.zero();
        let pair = els.iter().skip(1).find_map(|a| {
            els.iter()
                .skip(1)
                .find(|b| self.mul(a, b) == zero)
                .map(|b| (a.clone(), b.clone()))
        });
        FieldVerdict {
            field: false,
            zero_divisor: pair,
        }
    }

    pub fn pow(&self, a: &PolyModElement, mut e: u64) -> PolyModElement {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Indices of `{0, 1, 2·1, …, (p-1)·1}`.
    pub fn prime_subfield(&self) -> Vec<usize> {
        let mut ids: Vec<usize> = (0..self.p as i64).map(|c| self.index(&self.element(&[c]))).collect();
        ids.sort_unstable();
        ids
    }

    /// Checks that `c ↦ c·1` carries the tables of `Z_p` onto the prime
    /// subfield entrywise.
    pub fn prime_subfield_matches_zp(&self) -> bool {
        let p = self.p as i64;
        let img = |c: i64| self.element(&[c]);
        (0..p).all(|a| {
            (0..p).all(|b| {
                self.add(&img(a), &img(b)) == img((a + b) % p) && self.mul(&img(a), &img(b)) == img(a * b % p)
            })
        })
    }
}
