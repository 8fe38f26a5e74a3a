//! Exhaustive sweeps over structure families for the finiteness claims.

use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use super::{Certificate, Detection, Detector, Mode, Property, Structure, Witness};
use crate::constructors::{
    build_poly_quotient, build_zn, cyclic, dihedral, is_prime, near_ring_zn, symmetric_group, TABLE_GUARD,
};
use crate::error::{Error, Result};
use crate::finite::{enumerate_closed_subsets, Checker};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Conjecture {
    /// No finite S-special definite group.
    C1,
    /// No finite S-definite special ring.
    C2,
    /// No finite S-special definite field.
    C3,
    /// No finite S-definite special near-ring with a ⊙ b = a.
    C4,
    /// Every closed nonempty subset of a finite group is a subgroup.
    C5,
}

impl Conjecture {
    pub fn statement(self) -> &'static str {
        match self {
            Conjecture::C1 => "no finite S-special definite group",
            Conjecture::C2 => "no finite S-definite special ring",
            Conjecture::C3 => "no finite S-special definite field",
            Conjecture::C4 => "no finite S-definite special near-ring (a ⊙ b = a)",
            Conjecture::C5 => "every closed nonempty subset of a finite group is a subgroup",
        }
    }
}

impl FromStr for Conjecture {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "C1" => Ok(Conjecture::C1),
            "C2" => Ok(Conjecture::C2),
            "C3" => Ok(Conjecture::C3),
            "C4" => Ok(Conjecture::C4),
            "C5" => Ok(Conjecture::C5),
            _ => Err(Error::UnknownKind(format!("conjecture `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// Cyclic groups, bounded by order.
    Cyclic,
    /// Dihedral groups, bounded by order 2m.
    Dihedral,
    /// Symmetric groups, bounded by degree.
    Symmetric,
    ZnRings,
    ZnNearRings,
    /// Z_p[x]/(f) for monic f, bounded by p^deg.
    PolyQuotients,
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cyclic" => Ok(Family::Cyclic),
            "dihedral" => Ok(Family::Dihedral),
            "symmetric" => Ok(Family::Symmetric),
            "zn-rings" => Ok(Family::ZnRings),
            "zn-near-rings" => Ok(Family::ZnNearRings),
            "poly-quotients" => Ok(Family::PolyQuotients),
            _ => Err(Error::UnknownKind(format!("family `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepHit {
    pub member: String,
    pub certificate: Certificate,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub conjecture: Conjecture,
    pub statement: String,
    pub family: Family,
    pub max_size: usize,
    /// Sizes of the members examined, in processing order.
    pub sizes: Vec<usize>,
    pub members: Vec<String>,
    pub witness_count: usize,
    /// Closed subsets inspected, summed over members.
    pub subsets_examined: usize,
    pub counterexamples: Vec<SweepHit>,
}

impl SweepReport {
    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepOptions {
    pub time_limit: Duration,
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self { time_limit: Duration::from_secs(600) }
    }
}

pub fn sweep(conjecture: Conjecture, family: Family, max_size: usize) -> Result<SweepReport> {
    sweep_with(conjecture, family, max_size, SweepOptions::default())
}

fn members(conjecture: Conjecture, family: Family, max: usize) -> Result<Vec<Structure>> {
    use Conjecture::*;
    use Family::*;
    let fits = match conjecture {
        C1 | C5 => matches!(family, Cyclic | Dihedral | Symmetric),
        C2 | C3 => matches!(family, ZnRings | PolyQuotients),
        C4 => family == ZnNearRings,
    };
    if !fits {
        return Err(Error::ClassMismatch(format!("{conjecture:?} does not apply to family {family:?}")));
    }
    let budget = |what: &str, bound: usize| {
        if max > bound {
            Err(Error::Budget(format!("{what} sweeps stop at {bound}; asked for {max}")))
        } else {
            Ok(())
        }
    };
    let mut out = Vec::new();
    match family {
        Cyclic => {
            budget("cyclic", TABLE_GUARD)?;
            for n in 1..=max {
                out.push(Structure::magma(format!("C_{n}"), cyclic(n)?));
            }
        }
        Dihedral => {
            budget("dihedral", TABLE_GUARD)?;
            for m in 1..=max / 2 {
                out.push(Structure::magma(format!("D_{m}"), dihedral(m)?));
            }
        }
        Symmetric => {
            budget("symmetric", 6)?;
            for k in 1..=max {
                out.push(Structure::magma(format!("S_{k}"), symmetric_group(k)?));
            }
        }
        ZnRings => {
            budget("Z_n", TABLE_GUARD)?;
            for n in 1..=max {
                if conjecture == C3 && !is_prime(n as u64) {
                    continue;
                }
                out.push(Structure::ring(format!("Z_{n}"), build_zn(n)?));
            }
        }
        ZnNearRings => {
            budget("near-ring", TABLE_GUARD)?;
            for n in 1..=max {
                out.push(Structure::ring(format!("(Z_{n}, +, ⊙)"), near_ring_zn(n)?));
            }
        }
        PolyQuotients => {
            budget("quotient", 256)?;
            for p in (2..=max as u64).filter(|&p| is_prime(p)) {
                let mut deg = 1u32;
                while (p as usize).pow(deg) <= max {
                    for tail in 0..(p as usize).pow(deg) {
                        let mut f: Vec<i64> = (0..deg).map(|i| ((tail / (p as usize).pow(i)) % p as usize) as i64).collect();
                        f.push(1);
                        let q = build_poly_quotient(p, &f)?;
                        let field = q.quotient_is_field().field;
                        if conjecture == C3 && !field {
                            continue;
                        }
                        let name = format!("Z_{p}[x]/({})", crate::constructors::format_poly(&q.modulus));
                        out.push(Structure::ring(name, q.to_ring_table()?));
                    }
                    deg += 1;
                }
            }
        }
    }
    Ok(out)
}

struct Outcome {
    size: usize,
    examined: usize,
    hits: Vec<SweepHit>,
}

fn run_member(conjecture: Conjecture, s: &Structure) -> Result<Outcome> {
    let size = s.size().unwrap_or(0);
    let d = Detector { max_subsets: None, ..Detector::default() };
    let hits = |det: Detection| -> Vec<SweepHit> {
        det.certificate()
            .map(|c| SweepHit { member: s.name(), certificate: c.clone() })
            .into_iter()
            .collect()
    };
    match conjecture {
        Conjecture::C5 => {
            let Structure::Magma { table, .. } = s else { unreachable!("C5 members are groups") };
            let all = enumerate_closed_subsets(table, None)?;
            let ck = Checker::new(1);
            let loose = Detector { allow_trivial: true, ..d };
            let mut found = Vec::new();
            for c in &all {
                if !ck.group_on(table, c).passed() {
                    let cert = loose
                        .certify(s, Property::SSpecialDefiniteGroup, &Witness::Finite { elements: c.clone() })?
                        .expect("closed non-subgroup is a semigroup witness");
                    found.push(SweepHit { member: s.name(), certificate: cert });
                }
            }
            Ok(Outcome { size, examined: all.len(), hits: found })
        }
        _ => {
            let p = match conjecture {
                Conjecture::C1 => Property::SSpecialDefiniteGroup,
                Conjecture::C2 => Property::SDefiniteSpecialRing,
                Conjecture::C3 => Property::SSpecialDefiniteField,
                _ => Property::SDefiniteSpecialNearRing,
            };
            let examined = d.candidates(s)?.len();
            Ok(Outcome { size, examined, hits: hits(d.detect(s, p, Mode::Exhaustive)?) })
        }
    }
}

pub fn sweep_with(conjecture: Conjecture, family: Family, max_size: usize, opts: SweepOptions) -> Result<SweepReport> {
    let start = Instant::now();
    let ms = members(conjecture, family, max_size)?;
    let over = || {
        if start.elapsed() > opts.time_limit {
            Err(Error::Budget(format!("sweep exceeded {:?}", opts.time_limit)))
        } else {
            Ok(())
        }
    };
    #[cfg(feature = "parallel")]
    let outcomes: Vec<Result<Outcome>> = {
        use rayon::prelude::*;
        ms.par_iter().map(|s| over().and_then(|_| run_member(conjecture, s))).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let outcomes: Vec<Result<Outcome>> = ms.iter().map(|s| over().and_then(|_| run_member(conjecture, s))).collect();
    let mut report = SweepReport {
        conjecture,
        statement: conjecture.statement().into(),
        family,
        max_size,
        sizes: Vec::new(),
        members: ms.iter().map(Structure::name).collect(),
        witness_count: 0,
        subsets_examined: 0,
        counterexamples: Vec::new(),
    };
    for o in outcomes {
        let o = o?;
        report.sizes.push(o.size);
        report.subsets_examined += o.examined;
        report.witness_count += o.hits.len();
        report.counterexamples.extend(o.hits);
    }
    over()?;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweeps_hold() {
        for (c, f, m) in [
            (Conjecture::C1, Family::Cyclic, 12),
            (Conjecture::C1, Family::Symmetric, 3),
            (Conjecture::C2, Family::ZnRings, 12),
            (Conjecture::C3, Family::ZnRings, 13),
            (Conjecture::C3, Family::PolyQuotients, 9),
            (Conjecture::C4, Family::ZnNearRings, 10),
            (Conjecture::C5, Family::Dihedral, 12),
        ] {
            let r = sweep(c, f, m).unwrap();
            assert!(r.holds(), "{c:?} {f:?}");
            assert_eq!(r.witness_count, 0);
        }
    }

    #[test]
    fn vacuous_and_guarded() {
        let r = sweep(Conjecture::C1, Family::Cyclic, 1).unwrap();
        assert!(r.holds() && r.sizes == vec![1]);
        assert!(matches!(sweep(Conjecture::C1, Family::Symmetric, 9), Err(Error::Budget(_))));
        assert!(matches!(sweep(Conjecture::C2, Family::Cyclic, 4), Err(Error::ClassMismatch(_))));
        let t = SweepOptions { time_limit: Duration::ZERO };
        assert!(matches!(sweep_with(Conjecture::C1, Family::Cyclic, 8, t), Err(Error::Budget(_))));
    }

    #[test]
    fn deterministic() {
        let a = sweep(Conjecture::C2, Family::PolyQuotients, 8).unwrap();
        let b = sweep(Conjecture::C2, Family::PolyQuotients, 8).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.members.len(), a.sizes.len());
    }
}
