//! Group rings and semigroup rings `RG` over `R = Z` or `Z_n`, stored as
//! finitely supported sums with convolution multiplication.

use std::collections::BTreeMap;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::guard;
use crate::error::{Error, Result};
use crate::finite::{check_group, check_semigroup, ElementId, FiniteMagma, FiniteRingTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Coefficients {
    Integers,
    Mod(u64),
}

impl Coefficients {
    fn reduce(&self, c: i64) -> i64 {
        match self {
            Coefficients::Integers => c,
            Coefficients::Mod(n) => c.rem_euclid(*n as i64),
        }
    }

    pub fn name(&self) -> String {
        match self {
            Coefficients::Integers => "Z".into(),
            Coefficients::Mod(n) => format!("Z_{n}"),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        match text {
            "Z" => Ok(Coefficients::Integers),
            _ => text
                .strip_prefix("Z_")
                .and_then(|n| n.parse::<u64>().ok())
                .filter(|&n| n >= 1)
                .map(Coefficients::Mod)
                .ok_or_else(|| Error::Malformed(format!("unknown coefficient ring `{text}`"))),
        }
    }
}

/// `Σ c_g g` with no zero coefficients stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SupportedSum(pub BTreeMap<ElementId, i64>);

impl SupportedSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn support(&self) -> impl Iterator<Item = (&ElementId, &i64)> {
        self.0.iter()
    }

    pub fn coefficient(&self, g: ElementId) -> i64 {
        self.0.get(&g).copied().unwrap_or(0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupRing {
    pub coeff: Coefficients,
    pub base: FiniteMagma,
}

impl GroupRing {
    /// `RG`; the base must be a group.
    pub fn group_ring(coeff: Coefficients, base: FiniteMagma) -> Result<Self> {
        if !check_group(&base).passed() {
            return Err(Error::AxiomFailure("group ring base is not a group".into()));
        }
        Ok(Self { coeff, base })
    }

    /// `RS`; the base only needs to be a semigroup.
    pub fn semigroup_ring(coeff: Coefficients, base: FiniteMagma) -> Result<Self> {
        if !check_semigroup(&base).passed() {
            return Err(Error::AxiomFailure("semigroup ring base is not associative".into()));
        }
        Ok(Self { coeff, base })
    }

    pub fn from_terms(&self, terms: &[(ElementId, i64)]) -> Result<SupportedSum> {
        let mut acc = BTreeMap::new();
        for &(g, c) in terms {
            if g >= self.base.size() {
                return Err(Error::Malformed(format!("basis element {g} out of range")));
            }
            *acc.entry(g).or_insert(0) += c;
        }
        Ok(self.normalize(acc))
    }

    fn normalize(&self, m: BTreeMap<ElementId, i64>) -> SupportedSum {
        SupportedSum(
            m.into_iter()
                .map(|(g, c)| (g, self.coeff.reduce(c)))
                .filter(|&(_, c)| c != 0)
                .collect(),
        )
    }

    pub fn basis(&self, g: ElementId) -> SupportedSum {
        self.normalize(BTreeMap::from([(g, 1)]))
    }

    /// The identity `1·e` when the base has an identity `e`.
    pub fn one(&self) -> Option<SupportedSum> {
        self.base.identity().map(|e| self.basis(e))
    }

    pub fn add(&self, a: &SupportedSum, b: &SupportedSum) -> SupportedSum {
        let mut acc = a.0.clone();
        for (&g, &c) in &b.0 {
            *acc.entry(g).or_insert(0) += c;
        }
        self.normalize(acc)
    }

    pub fn neg(&self, a: &SupportedSum) -> SupportedSum {
        self.normalize(a.0.iter().map(|(&g, &c)| (g, -c)).collect())
    }

    /// `(Σ a_g g)(Σ b_h h) = Σ (a_g b_h)(gh)`.
    pub fn mul(&self, a: &SupportedSum, b: &SupportedSum) -> SupportedSum {
        let mut acc = BTreeMap::new();
        for (&g, &x) in &a.0 {
            for (&h, &y) in &b.0 {
                let e = acc.entry(self.base.op(g, h)).or_insert(0i64);
                *e = self.coeff.reduce(*e + x * y);
            }
        }
        self.normalize(acc)
    }

    pub fn label(&self, a: &SupportedSum) -> String {
        if a.0.is_empty() {
            return "0".into();
        }
        a.0.iter()
            .map(|(&g, &c)| {
                let l = self.base.label(g);
                let l = if l.parse::<i64>().is_ok() { format!("g{l}") } else { l.to_string() };
                match c {
                    1 => l,
                    -1 => format!("-{l}"),
                    _ => format!("{c}*{l}"),
                }
            })
            .join(" + ")
    }

    /// Number of elements when coefficients are finite.
    pub fn order(&self) -> Option<u128> {
        match self.coeff {
            Coefficients::Integers => None,
            Coefficients::Mod(n) => (n as u128).checked_pow(self.base.size() as u32),
        }
    }

    /// All elements, for finite coefficients below the table guard. Element
    /// `i` has coefficient digit `k` (base `n`) on basis element `k`.
    pub fn enumerate(&self) -> Result<Vec<SupportedSum>> {
        let Coefficients::Mod(n) = self.coeff else {
            return Err(Error::SizeGuard("Z-coefficient group rings are infinite".into()));
        };
        let count = self.order().filter(|&c| c <= usize::MAX as u128).unwrap_or(u128::MAX);
        guard("group ring", count.min(usize::MAX as u128) as usize)?;
        let k = self.base.size();
        Ok((0..count as u64)
            .map(|mut idx| {
                let terms: BTreeMap<_, _> = (0..k)
                    .map(|g| {
                        let c = (idx % n) as i64;
                        idx /= n;
                        (g, c)
                    })
                    .collect();
                self.normalize(terms)
            })
            .collect())
    }

    pub fn to_ring_table(&self) -> Result<FiniteRingTable> {
        let els = self.enumerate()?;
        let index: std::collections::HashMap<&SupportedSum, usize> =
            els.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let labels = els.iter().map(|e| self.label(e)).collect();
        FiniteRingTable::from_fns(
            labels,
            |a, b| index[&self.add(&els[a], &els[b])],
            |a, b| index[&self.mul(&els[a], &els[b])],
        )
    }
}
