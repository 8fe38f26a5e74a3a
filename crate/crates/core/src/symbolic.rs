//! Exact infinite subsets of Q: dense sign-classes and scaled integer
//! lattices, with products, cosets, double cosets and intersections.
//!
//! Every value is kept in a canonical form, so structural equality is set
//! equality. Internally a set is a base (dense, or a lattice `qZ`) plus a
//! mask over the three sign classes `{neg, zero, pos}`.

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{format_rat, is_int, parse_rat, rat_lcm, Rat};

const NEG: u8 = 1;
const ZERO: u8 = 2;
const POS: u8 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dense {
    /// All of Q.
    Q,
    /// Q \ {0}.
    QNonZero,
    /// Positive rationals.
    QPos,
    /// Nonnegative rationals, written Q°.
    QNonNeg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Pos,
    Neg,
    NonZero,
    All,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LatticeSet {
    Empty,
    /// The singleton {0}.
    Zero,
    Dense(Dense),
    /// `{scale * k : k in the signed integer domain}`, plus 0 when `with_zero`.
    /// Canonical: `scale > 0`, `All` always carries zero, `NonZero` never does.
    Lattice { scale: Rat, sign: Sign, with_zero: bool },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SymbolicAmbient {
    /// (Q \ {0}, ×)
    QNonZeroMul,
    /// (Q, +)
    QAdd,
    /// (Z, +, ×)
    ZRing,
    /// (Q, +, ×)
    QField,
}

#[derive(Debug, Clone, PartialEq)]
enum Base {
    Dense,
    Lattice(Rat),
}

fn dense_mask(d: Dense) -> u8 {
    match d {
        Dense::Q => NEG | ZERO | POS,
        Dense::QNonZero => NEG | POS,
        Dense::QPos => POS,
        Dense::QNonNeg => POS | ZERO,
    }
}

fn sign_mask(s: Sign) -> u8 {
    match s {
        Sign::Pos => POS,
        Sign::Neg => NEG,
        Sign::NonZero | Sign::All => NEG | POS,
    }
}

fn mask_of(x: &Rat) -> u8 {
    if x.is_zero() {
        ZERO
    } else if x.is_positive() {
        POS
    } else {
        NEG
    }
}

/// Sign classes of `{ab : a in A, b in B}` given the classes of A and B.
fn mask_product(a: u8, b: u8) -> u8 {
    let mut out = 0;
    for x in [NEG, ZERO, POS] {
        for y in [NEG, ZERO, POS] {
            if a & x != 0 && b & y != 0 {
                out |= match (x, y) {
                    (ZERO, _) | (_, ZERO) => ZERO,
                    (NEG, NEG) | (POS, POS) => POS,
                    _ => NEG,
                };
            }
        }
    }
    out
}

fn flip(mask: u8) -> u8 {
    (mask & ZERO) | if mask & NEG != 0 { POS } else { 0 } | if mask & POS != 0 { NEG } else { 0 }
}

fn mask_name(mask: u8) -> &'static str {
    match mask {
        NEG => "negative",
        m if m == NEG | ZERO => "nonpositive",
        _ => "mixed",
    }
}

impl LatticeSet {
    pub fn lattice(scale: Rat, sign: Sign, with_zero: bool) -> Result<Self> {
        if !scale.is_positive() {
            return Err(Error::Malformed(format!(
                "lattice scale must be positive, got {}",
                format_rat(&scale)
            )));
        }
        let mut mask = sign_mask(sign);
        if with_zero || sign == Sign::All {
            mask |= ZERO;
        }
        Ok(Self::from_parts(Base::Lattice(scale), mask).expect("lattice masks are representable"))
    }

    /// `n Z⁺` for a positive integer or rational `n`.
    pub fn pos(scale: Rat) -> Self {
        Self::lattice(scale, Sign::Pos, false).expect("positive scale")
    }

    pub fn z_pos() -> Self {
        Self::pos(Rat::from_integer(1))
    }

    /// Z° = Z⁺ ∪ {0}.
    pub fn z_nonneg() -> Self {
        Self::lattice(Rat::from_integer(1), Sign::Pos, true).unwrap()
    }

    pub fn integers() -> Self {
        Self::multiples(Rat::from_integer(1))
    }

    pub fn multiples(scale: Rat) -> Self {
        Self::lattice(scale, Sign::All, true).expect("positive scale")
    }

    pub fn z_nonzero() -> Self {
        Self::lattice(Rat::from_integer(1), Sign::NonZero, false).unwrap()
    }

    fn parts(&self) -> Option<(Base, u8)> {
        match self {
            LatticeSet::Empty => None,
            LatticeSet::Zero => Some((Base::Dense, ZERO)),
            LatticeSet::Dense(d) => Some((Base::Dense, dense_mask(*d))),
            LatticeSet::Lattice {
                scale,
                sign,
                with_zero,
            } => {
                let mut m = sign_mask(*sign);
                if *with_zero {
                    m |= ZERO;
                }
                Some((Base::Lattice(*scale), m))
            }
        }
    }

    fn from_parts(base: Base, mask: u8) -> Result<Self> {
        if mask == 0 {
            return Ok(LatticeSet::Empty);
        }
        if mask == ZERO {
            return Ok(LatticeSet::Zero);
        }
        let with_zero = mask & ZERO != 0;
        let nz = mask & (NEG | POS);
        match base {
            Base::Dense => {
                let d = match mask {
                    m if m == NEG | ZERO | POS => Dense::Q,
                    m if m == NEG | POS => Dense::QNonZero,
                    POS => Dense::QPos,
                    m if m == POS | ZERO => Dense::QNonNeg,
                    m => {
                        return Err(Error::Unsupported(format!(
                            "the {} rationals have no canonical form",
                            mask_name(m)
                        )))
                    }
                };
                Ok(LatticeSet::Dense(d))
            }
            Base::Lattice(scale) => {
                let sign = match (nz, with_zero) {
                    (POS, _) => Sign::Pos,
                    (NEG, _) => Sign::Neg,
                    (_, false) => Sign::NonZero,
                    (_, true) => Sign::All,
                };
                Ok(LatticeSet::Lattice {
                    scale,
                    sign,
                    with_zero,
                })
            }
        }
    }

    /// Which of (negative, zero, positive) elements occur.
    pub fn signs(&self) -> (bool, bool, bool) {
        self.parts()
            .map_or((false, false, false), |(_, m)| (m & NEG != 0, m & ZERO != 0, m & POS != 0))
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, LatticeSet::Empty)
    }

    pub fn contains_zero(&self) -> bool {
        self.parts().is_some_and(|(_, m)| m & ZERO != 0)
    }

    /// Scale of a lattice set; `None` for dense, `{0}` and empty.
    pub fn scale(&self) -> Option<Rat> {
        match self {
            LatticeSet::Lattice { scale, .. } => Some(*scale),
            _ => None,
        }
    }

    pub fn member(&self, x: &Rat) -> bool {
        match self.parts() {
            None => false,
            Some((base, mask)) => {
                if mask & mask_of(x) == 0 {
                    return false;
                }
                match base {
                    Base::Dense => true,
                    Base::Lattice(q) => x.is_zero() || is_int(&(x / q)),
                }
            }
        }
    }

    /// Elementwise product `{ab : a ∈ self, b ∈ other}`. Uses
    /// `{kl : k, l ∈ Z⁺} = Z⁺`, so lattice scales multiply and signs combine.
    pub fn set_product(&self, other: &LatticeSet) -> Result<LatticeSet> {
        let (Some((ba, ma)), Some((bb, mb))) = (self.parts(), other.parts()) else {
            return Ok(LatticeSet::Empty);
        };
        let mask = mask_product(ma, mb);
        let base = if ma == ZERO || mb == ZERO {
            Base::Dense
        } else {
            match (ba, bb) {
                (Base::Lattice(a), Base::Lattice(b)) => Base::Lattice(a * b),
                _ => Base::Dense,
            }
        };
        Self::from_parts(base, mask)
    }

    /// The singleton `{x}` as a product operand.
    fn scalar_product(&self, x: &Rat) -> Result<LatticeSet> {
        if x.is_zero() {
            return Ok(if self.is_empty() {
                LatticeSet::Empty
            } else {
                LatticeSet::Zero
            });
        }
        let Some((base, mask)) = self.parts() else {
            return Ok(LatticeSet::Empty);
        };
        let mask = if x.is_negative() { flip(mask) } else { mask };
        let base = match base {
            Base::Lattice(q) => Base::Lattice(q * x.abs()),
            Base::Dense => Base::Dense,
        };
        Self::from_parts(base, mask)
    }

    pub fn left_coset(&self, a: &Rat, ambient: SymbolicAmbient) -> Result<LatticeSet> {
        match ambient {
            SymbolicAmbient::QNonZeroMul => {
                if a.is_zero() {
                    return Err(Error::ZeroScalar);
                }
                self.scalar_product(a)
            }
            SymbolicAmbient::ZRing | SymbolicAmbient::QField => self.scalar_product(a),
            SymbolicAmbient::QAdd => self.translate(a),
        }
    }

    /// `a + H`, only when the result is again one of the canonical shapes.
    fn translate(&self, a: &Rat) -> Result<LatticeSet> {
        if a.is_zero() {
            return Ok(self.clone());
        }
        match self {
            LatticeSet::Empty => Ok(LatticeSet::Empty),
            LatticeSet::Dense(Dense::Q) => Ok(self.clone()),
            LatticeSet::Lattice {
                sign: Sign::All, ..
            } if self.member(a) => Ok(self.clone()),
            _ => Err(Error::Unsupported(format!(
                "the additive coset {} + {} is not a lattice set",
                format_rat(a),
                self
            ))),
        }
    }

    /// `H x K = {h x k}`.
    pub fn double_coset(h: &LatticeSet, x: &Rat, k: &LatticeSet) -> Result<LatticeSet> {
        if x.is_zero() {
            return Err(Error::ZeroScalar);
        }
        h.set_product(&k.scalar_product(x)?)
    }

    pub fn is_closed_mul(&self) -> bool {
        match self.parts() {
            None => true,
            Some((base, mask)) => {
                if mask_product(mask, mask) & !mask != 0 {
                    return false;
                }
                match base {
                    Base::Lattice(q) if mask & (NEG | POS) != 0 => is_int(&q),
                    _ => true,
                }
            }
        }
    }

    pub fn is_closed_add(&self) -> bool {
        match self.parts() {
            None => true,
            Some((_, mask)) => mask & (NEG | POS) != NEG | POS || mask & ZERO != 0,
        }
    }

    pub fn is_closed_neg(&self) -> bool {
        self.parts().is_none_or(|(_, m)| flip(m) == m)
    }

    /// Closure under `x ↦ 1/x` on the nonzero part.
    pub fn is_closed_inv(&self) -> bool {
        match self.parts() {
            None => true,
            Some((Base::Dense, _)) => true,
            Some((Base::Lattice(_), mask)) => mask & (NEG | POS) == 0,
        }
    }

    pub fn intersect(&self, other: &LatticeSet) -> LatticeSet {
        let (Some((ba, ma)), Some((bb, mb))) = (self.parts(), other.parts()) else {
            return LatticeSet::Empty;
        };
        let mask = ma & mb;
        let base = match (ba, bb) {
            (Base::Lattice(a), Base::Lattice(b)) => Base::Lattice(rat_lcm(&a, &b)),
            (Base::Lattice(a), Base::Dense) | (Base::Dense, Base::Lattice(a)) => Base::Lattice(a),
            (Base::Dense, Base::Dense) => Base::Dense,
        };
        Self::from_parts(base, mask).expect("intersections of canonical sets are canonical")
    }

    pub fn subset_of(&self, other: &LatticeSet) -> bool {
        let Some((ba, ma)) = self.parts() else {
            return true;
        };
        let Some((bb, mb)) = other.parts() else {
            return false;
        };
        if ma & !mb != 0 {
            return false;
        }
        if ma & (NEG | POS) == 0 {
            return true;
        }
        match (ba, bb) {
            (_, Base::Dense) => true,
            (Base::Dense, Base::Lattice(_)) => false,
            (Base::Lattice(a), Base::Lattice(b)) => is_int(&(a / b)),
        }
    }

    /// Elements of magnitude at most `bound`, ascending. Dense sets are not
    /// enumerable and yield `None`.
    pub fn truncate(&self, bound: i64) -> Option<Vec<Rat>> {
        match self.parts() {
            None => Some(Vec::new()),
            Some((_, ZERO)) => Some(vec![Rat::zero()]),
            Some((Base::Dense, _)) => None,
            Some((Base::Lattice(q), _)) => {
                let kmax = (Rat::from_integer(bound) / q).floor().to_integer();
                Some(
                    (-kmax..=kmax)
                        .map(|k| q * Rat::from_integer(k))
                        .filter(|x| self.member(x))
                        .collect(),
                )
            }
        }
    }
}

impl fmt::Display for LatticeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeSet::Empty => f.write_str("{}"),
            LatticeSet::Zero => f.write_str("{0}"),
            LatticeSet::Dense(d) => f.write_str(match d {
                Dense::Q => "Q",
                Dense::QNonZero => "Q!0",
                Dense::QPos => "Q+",
                Dense::QNonNeg => "Q0",
            }),
            LatticeSet::Lattice {
                scale,
                sign,
                with_zero,
            } => {
                let s = match sign {
                    Sign::Pos => "+",
                    Sign::Neg => "-",
                    Sign::NonZero => "!0",
                    Sign::All => "",
                };
                let z = if *with_zero && *sign != Sign::All { ",0" } else { "" };
                write!(f, "{}*Z{s}{z}", format_rat(scale))
            }
        }
    }
}

impl FromStr for LatticeSet {
    type Err = Error;

    /// Accepts the canonical form plus a few shorthands: `Z+`, `2Z+`,
    /// `Z0` for Z°, and `nZ\{0}`-style `nZ!0`.
    fn from_str(text: &str) -> Result<Self> {
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        match t.as_str() {
            "{}" => return Ok(LatticeSet::Empty),
            "{0}" => return Ok(LatticeSet::Zero),
            "Q" => return Ok(LatticeSet::Dense(Dense::Q)),
            "Q!0" => return Ok(LatticeSet::Dense(Dense::QNonZero)),
            "Q+" => return Ok(LatticeSet::Dense(Dense::QPos)),
            "Q0" | "Q+,0" => return Ok(LatticeSet::Dense(Dense::QNonNeg)),
            _ => {}
        }
        let bad = || Error::Malformed(format!("`{text}` is not a lattice set"));
        let zpos = t.find('Z').ok_or_else(bad)?;
        let head = t[..zpos].trim_end_matches('*');
        let scale = if head.is_empty() {
            Rat::from_integer(1)
        } else {
            parse_rat(head).map_err(|_| bad())?
        };
        let tail = &t[zpos + 1..];
        let (sign_part, with_zero) = match tail.strip_suffix(",0") {
            Some(rest) => (rest, true),
            None => (tail, false),
        };
        let (sign, with_zero) = match sign_part {
            "+" => (Sign::Pos, with_zero),
            "-" => (Sign::Neg, with_zero),
            "!0" => (Sign::NonZero, with_zero),
            "" => (Sign::All, true),
            "0" if !with_zero => (Sign::Pos, true),
            _ => return Err(bad()),
        };
        LatticeSet::lattice(scale, sign, with_zero)
    }
}

impl Serialize for LatticeSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for LatticeSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
