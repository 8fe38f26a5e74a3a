//! The a ⊙ b = a near-rings, N-group actions, bounded freeness of additive
//! generating sets, and semiautomata / automata over such alphabets.
//!
//! Transitions are `μ: states × P → states` and outputs
//! `λ: states × P → S`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::constructors::near_ring_zn;
use crate::detect::{Certificate, Detection, Mode, Property, Structure};
use crate::error::{Error, Result};
use crate::finite::{check_near_ring, Axiom, AxiomReport, Checker, Collector, ElementId, FiniteMagma, FiniteRingTable, StructureClass, DEFAULT_CAP};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NearRingZn {
    pub n: usize,
    pub table: FiniteRingTable,
}

impl NearRingZn {
    /// First `(a, b, c)` with `a ⊙ (b + c) ≠ a ⊙ b + a ⊙ c`, nonzero triples
    /// scanned before the rest.
    pub fn left_distributivity_witness(&self) -> Option<(ElementId, ElementId, ElementId)> {
        let r = &self.table;
        let n = self.n;
        let fails = |&(a, b, c): &(usize, usize, usize)| r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c));
        let triples = |lo: usize| (lo..n).flat_map(move |a| (lo..n).flat_map(move |b| (lo..n).map(move |c| (a, b, c))));
        triples(1).find(fails).or_else(|| triples(0).find(fails))
    }

    pub fn structure(&self) -> Structure {
        Structure::ring(format!("(Z_{}, +, ⊙)", self.n), self.table.clone())
    }
}

pub fn build_near_ring_zn(n: usize) -> Result<NearRingZn> {
    let table = near_ring_zn(n)?;
    if let Some(v) = check_near_ring(&table).violations.first() {
        return Err(Error::AxiomFailure(format!("near-ring check failed: {:?}", v.axiom)));
    }
    Ok(NearRingZn { n, table })
}

/// Checks `(n + n₁)p = np + n₁p` and `(n n₁)p = n(n₁p)` for the action
/// `mu[n][p]` of the near-ring on the abelian group `p`.
pub fn check_n_group(near: &FiniteRingTable, p: &FiniteMagma, mu: &[Vec<ElementId>]) -> Result<AxiomReport> {
    let (nn, np) = (near.size(), p.size());
    if mu.len() != nn || mu.iter().any(|r| r.len() != np || r.iter().any(|&x| x >= np)) {
        return Err(Error::TableShape(format!("action table must be {nn} rows of {np} entries below {np}")));
    }
    let mut c = Collector::new(StructureClass::NGroup, DEFAULT_CAP);
    let pg = Checker::new(DEFAULT_CAP).abelian_group_on(p, &p.elements());
    for v in pg.violations {
        c.push(v.axiom, v.witness);
    }
    'o: for a in 0..nn {
        for b in 0..nn {
            for x in 0..np {
                if mu[near.add(a, b)][x] != p.op(mu[a][x], mu[b][x]) && !c.push(Axiom::ActionSum, vec![a, b, x]) {
                    break 'o;
                }
                if mu[near.mul(a, b)][x] != mu[a][mu[b][x]] && !c.push(Axiom::ActionProduct, vec![a, b, x]) {
                    break 'o;
                }
            }
        }
    }
    Ok(c.finish())
}

pub const DEFAULT_FREENESS_BOUND: usize = 12;

/// Multiplicities over the generator list.
pub type Multiset = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Freeness {
    /// No two multisets of size at most `bound` share a sum.
    Free { bound: usize },
    NotFree { left: Multiset, right: Multiset, sum: Vec<i64> },
}

impl Freeness {
    pub fn is_free(&self) -> bool {
        matches!(self, Freeness::Free { .. })
    }
}

fn sum_of(gens: &[Vec<i64>], m: &Multiset) -> Vec<i64> {
    let dim = gens.first().map_or(0, Vec::len);
    let mut s = vec![0; dim];
    for (g, &k) in gens.iter().zip(m) {
        for (acc, x) in s.iter_mut().zip(g) {
            *acc += k as i64 * x;
        }
    }
    s
}

/// All multiplicity vectors over `k` generators with total `size`, in
/// lexicographically decreasing order.
fn compositions(k: usize, size: usize) -> Vec<Multiset> {
    if k == 0 {
        return if size == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=size).rev() {
        for mut rest in compositions(k - 1, size - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Searches multisets by total size for two with the same sum.
pub fn freeness_check(gens: &[Vec<i64>], bound: usize) -> Freeness {
    let mut seen: HashMap<Vec<i64>, Multiset> = HashMap::new();
    for size in 1..=bound {
        for m in compositions(gens.len(), size) {
            let s = sum_of(gens, &m);
            if let Some(prev) = seen.get(&s) {
                return Freeness::NotFree { left: prev.clone(), right: m, sum: s };
            }
            seen.insert(s, m);
        }
    }
    Freeness::Free { bound }
}

pub fn multiset_sum(gens: &[Vec<i64>], m: &Multiset) -> Vec<i64> {
    sum_of(gens, m)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "kebab-case")]
pub enum TransitionRule {
    /// `μ(z, p) = (z + Σ p) mod |states|`.
    AddMod,
    /// `table[z][p]`.
    Table { table: Vec<Vec<usize>> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemiAutomaton {
    pub states: usize,
    pub alphabet: Vec<Vec<i64>>,
    delta: Vec<Vec<usize>>,
}

fn letter_value(p: &[i64]) -> i64 {
    p.iter().sum()
}

pub fn build_semiautomaton(states: usize, alphabet: Vec<Vec<i64>>, rule: &TransitionRule) -> Result<SemiAutomaton> {
    if states == 0 {
        return Err(Error::Malformed("a semiautomaton needs at least one state".into()));
    }
    let delta = match rule {
        TransitionRule::AddMod => (0..states)
            .map(|z| {
                alphabet
                    .iter()
                    .map(|p| (z as i64 + letter_value(p)).rem_euclid(states as i64) as usize)
                    .collect()
            })
            .collect(),
        TransitionRule::Table { table } => {
            if table.len() != states || table.iter().any(|r| r.len() != alphabet.len() || r.iter().any(|&z| z >= states)) {
                return Err(Error::TableShape(format!(
                    "transition table must be {states} rows of {} states below {states}",
                    alphabet.len()
                )));
            }
            table.clone()
        }
    };
    Ok(SemiAutomaton { states, alphabet, delta })
}

impl SemiAutomaton {
    pub fn step(&self, z: usize, p: usize) -> Result<usize> {
        if p >= self.alphabet.len() {
            return Err(Error::UnknownLetter(p));
        }
        Ok(self.delta[z][p])
    }

    /// States visited, starting with `start`; one longer than the word.
    pub fn run(&self, start: usize, word: &[usize]) -> Result<Vec<usize>> {
        if start >= self.states {
            return Err(Error::Malformed(format!("start state {start} out of range")));
        }
        let mut trace = vec![start];
        for &p in word {
            let z = *trace.last().unwrap();
            trace.push(self.step(z, p)?);
        }
        Ok(trace)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "kebab-case")]
pub enum OutputRule {
    /// `λ(z, p) = p`; outputs are the input letters.
    Projection,
    /// `λ(z, p) = (z + Σ p) mod outputs`.
    SumMod,
    Table { table: Vec<Vec<usize>> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Automaton {
    pub semi: SemiAutomaton,
    pub outputs: usize,
    lambda: Vec<Vec<usize>>,
}

pub fn build_automaton(
    states: usize,
    alphabet: Vec<Vec<i64>>,
    outputs: usize,
    mu: &TransitionRule,
    lambda: &OutputRule,
) -> Result<Automaton> {
    let semi = build_semiautomaton(states, alphabet, mu)?;
    let k = semi.alphabet.len();
    let lambda = match lambda {
        OutputRule::Projection => {
            if outputs != k {
                return Err(Error::Malformed("projection needs one output per input letter".into()));
            }
            vec![(0..k).collect(); states]
        }
        OutputRule::SumMod => {
            if outputs == 0 {
                return Err(Error::Malformed("sum-mod needs at least one output".into()));
            }
            (0..states)
                .map(|z| {
                    semi.alphabet
                        .iter()
                        .map(|p| (z as i64 + letter_value(p)).rem_euclid(outputs as i64) as usize)
                        .collect()
                })
                .collect()
        }
        OutputRule::Table { table } => {
            if table.len() != states || table.iter().any(|r| r.len() != k || r.iter().any(|&s| s >= outputs)) {
                return Err(Error::TableShape(format!("output table must be {states} rows of {k} outputs below {outputs}")));
            }
            table.clone()
        }
    };
    Ok(Automaton { semi, outputs, lambda })
}

impl Automaton {
    pub fn run_io(&self, start: usize, word: &[usize]) -> Result<(Vec<usize>, Vec<usize>)> {
        let trace = self.semi.run(start, word)?;
        let out = word.iter().zip(&trace).map(|(&p, &z)| self.lambda[z][p]).collect();
        Ok((trace, out))
    }
}

pub fn parse_word(text: &str) -> Result<Vec<usize>> {
    text.split_whitespace()
        .map(|t| t.parse::<usize>().map_err(|_| Error::Malformed(format!("`{t}` is not a letter index"))))
        .collect()
}

pub fn format_trace(trace: &[usize]) -> String {
    trace.iter().map(|z| format!("{z}\n")).collect()
}

/// An automaton over an additive alphabet whose near-ring has passed the
/// S-definite special detector.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SNearAutomaton {
    pub automaton: Automaton,
    pub near_ring: Certificate,
    pub freeness: Freeness,
}

/// States `Z_m`, transitions and outputs by sum mod `m`. Refuses near-rings
/// without an S-definite special certificate.
pub fn build_s_near_automaton(near: &Structure, states: usize, alphabet: Vec<Vec<i64>>, bound: usize) -> Result<SNearAutomaton> {
    let mode = if near.is_finite() { Mode::Exhaustive } else { Mode::Catalog };
    let cert = match crate::detect::detect(near, Property::SDefiniteSpecialNearRing, mode)? {
        Detection::Found { certificate } => *certificate,
        Detection::NotFound { .. } => {
            return Err(Error::AxiomFailure(format!("{} is not an S-definite special near-ring", near.name())));
        }
    };
    let freeness = freeness_check(&alphabet, bound);
    let automaton = build_automaton(states, alphabet, states, &TransitionRule::AddMod, &OutputRule::SumMod)?;
    Ok(SNearAutomaton { automaton, near_ring: cert, freeness })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{build_zn, zn_add};
    use crate::detect::SymbolicStructure;
    use proptest::prelude::*;

    #[test]
    fn near_ring_family() {
        let n5 = build_near_ring_zn(5).unwrap();
        assert_eq!(n5.left_distributivity_witness(), Some((1, 1, 1)));
        let n1 = build_near_ring_zn(1).unwrap();
        assert_eq!(n1.left_distributivity_witness(), None);
        for n in 2..=12 {
            assert!(build_near_ring_zn(n).unwrap().left_distributivity_witness().is_some());
        }
    }

    #[test]
    fn n_groups() {
        let trivial = near_ring_zn(1).unwrap();
        let p0 = zn_add(1).unwrap();
        assert!(check_n_group(&trivial, &p0, &[vec![0]]).unwrap().passed());
        let z6 = build_zn(6).unwrap();
        let p6 = zn_add(6).unwrap();
        let mu: Vec<Vec<usize>> = (0..6).map(|a| (0..6).map(|x| a * x % 6).collect()).collect();
        assert!(check_n_group(&z6, &p6, &mu).unwrap().passed());
        let nr = near_ring_zn(4).unwrap();
        let p4 = zn_add(4).unwrap();
        let proj: Vec<Vec<usize>> = (0..4).map(|_| (0..4).collect()).collect();
        let r = check_n_group(&nr, &p4, &proj).unwrap();
        let w = &r.first(Axiom::ActionSum).unwrap().witness;
        let x = w[2];
        assert_ne!((2 * x) % 4, x);
    }

    #[test]
    fn freeness() {
        assert!(freeness_check(&[vec![1, 2, 3]], DEFAULT_FREENESS_BOUND).is_free());
        match freeness_check(&[vec![1], vec![2]], 12) {
            Freeness::NotFree { left, right, sum } => {
                assert_eq!(sum, vec![2]);
                assert_eq!((left, right), (vec![0, 1], vec![2, 0]));
            }
            f => panic!("{f:?}"),
        }
        let g = [vec![4], vec![7], vec![5]];
        let Freeness::NotFree { left, right, .. } = freeness_check(&g, 12) else { panic!() };
        assert_eq!(multiset_sum(&g, &left), multiset_sum(&g, &right));
        assert_ne!(left, right);
        assert_eq!(multiset_sum(&g, &vec![7, 0, 0]), multiset_sum(&g, &vec![0, 4, 0]));
        assert!(!freeness_check(&[vec![0, 0]], 3).is_free());
    }

    #[test]
    fn runs() {
        let sa = build_semiautomaton(4, vec![vec![1]], &TransitionRule::AddMod).unwrap();
        assert_eq!(sa.run(0, &[0, 0, 0]).unwrap(), vec![0, 1, 2, 3]);
        assert!(matches!(sa.run(0, &[1]), Err(Error::UnknownLetter(1))));
        let one = build_semiautomaton(1, vec![vec![3], vec![5]], &TransitionRule::Table { table: vec![vec![0, 0]] }).unwrap();
        assert_eq!(one.run(0, &[0, 1, 1]).unwrap(), vec![0; 4]);
        let a = build_automaton(3, vec![vec![1], vec![2]], 2, &TransitionRule::AddMod, &OutputRule::Projection).unwrap();
        let (t, o) = a.run_io(0, &[1, 0, 1]).unwrap();
        assert_eq!(o, vec![1, 0, 1]);
        assert_eq!(t, a.semi.run(0, &[1, 0, 1]).unwrap());
        assert_eq!(a.run_io(2, &[]).unwrap(), (vec![2], vec![]));
        assert_eq!(parse_word(" 1 0  2").unwrap(), vec![1, 0, 2]);
        assert_eq!(format_trace(&[0, 1]), "0\n1\n");
    }

    #[test]
    fn gated_construction() {
        let z = Structure::symbolic(SymbolicStructure::ZNearRing);
        let built = build_s_near_automaton(&z, 12, vec![vec![4, 7, 5]], DEFAULT_FREENESS_BOUND).unwrap();
        assert!(built.freeness.is_free());
        let (t, o) = built.automaton.run_io(0, &[0, 0]).unwrap();
        assert_eq!(t, vec![0, 4, 8]);
        assert_eq!(o, vec![4, 8]);
        let fam = build_s_near_automaton(&z, 12, vec![vec![4], vec![7], vec![5]], 12).unwrap();
        assert!(!fam.freeness.is_free());
        let finite = build_near_ring_zn(5).unwrap().structure();
        assert!(build_s_near_automaton(&finite, 5, vec![vec![1]], 4).is_err());
    }

    proptest! {
        #[test]
        fn word_extension_law(table in proptest::collection::vec(proptest::collection::vec(0usize..4, 3), 4), p1 in 0usize..3, p2 in 0usize..3, z in 0usize..4) {
            let sa = build_semiautomaton(4, vec![vec![0]; 3], &TransitionRule::Table { table: table.clone() }).unwrap();
            let t = sa.run(z, &[p1, p2]).unwrap();
            prop_assert_eq!(t[2], table[table[z][p1]][p2]);
        }

        #[test]
        fn automaton_trace_matches_semiautomaton(word in proptest::collection::vec(0usize..3, 0..20), start in 0usize..5) {
            let alpha = vec![vec![1], vec![2, 2], vec![-3]];
            let a = build_automaton(5, alpha.clone(), 3, &TransitionRule::AddMod, &OutputRule::SumMod).unwrap();
            let sa = build_semiautomaton(5, alpha, &TransitionRule::AddMod).unwrap();
            let (t, o) = a.run_io(start, &word).unwrap();
            prop_assert_eq!(o.len(), word.len());
            prop_assert_eq!(t, sa.run(start, &word).unwrap());
        }

        #[test]
        fn singletons_are_free(v in proptest::collection::vec(0i64..5, 1..4), bound in 1usize..15) {
            prop_assume!(v.iter().any(|&x| x != 0));
            prop_assert!(freeness_check(&[v], bound).is_free());
        }
    }
}
