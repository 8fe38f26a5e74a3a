//! Builders for the named structures: `Z_n`, cyclic, dihedral and symmetric
//! groups, the symmetric semigroup `S(n)`, polynomial quotient rings, group
//! and semigroup rings, matrix rings, lattice semirings, integer quaternions
//! and truncated polynomial algebras.

mod algebras;
mod group_ring;
mod poly;

pub use algebras::{
    chain_lattice, lattice_semiring, matrix_ring, quaternion_mul, Quaternion, TruncPolyAlgebra,
};
pub use group_ring::{Coefficients, GroupRing, SupportedSum};
pub use poly::{
    build_poly_quotient, format_poly, is_irreducible, is_prime, poly_product, FieldVerdict, Irreducibility, PolyModElement,
    PolyModRing,
};

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::finite::{FiniteMagma, FiniteRingTable};

/// Largest element count materialised as a Cayley table.
pub const TABLE_GUARD: usize = 4096;

pub(crate) fn guard(what: &str, count: usize) -> Result<()> {
    if count > TABLE_GUARD {
        return Err(Error::SizeGuard(format!(
            "{what} would have {count} elements; the table limit is {TABLE_GUARD}"
        )));
    }
    Ok(())
}

fn numbered(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

/// `(Z_n, +, ×)` with residues as labels.
pub fn build_zn(n: usize) -> Result<FiniteRingTable> {
    if n == 0 {
        return Err(Error::SizeGuard("Z_n needs n >= 1".into()));
    }
    guard("Z_n", n)?;
    FiniteRingTable::from_fns(numbered(n), |a, b| (a + b) % n, |a, b| a * b % n)
}

pub fn zn_add(n: usize) -> Result<FiniteMagma> {
    Ok(build_zn(n)?.additive().clone())
}

pub fn zn_mul(n: usize) -> Result<FiniteMagma> {
    Ok(build_zn(n)?.multiplicative().clone())
}

/// The cyclic group of order `n`, written additively.
pub fn cyclic(n: usize) -> Result<FiniteMagma> {
    zn_add(n)
}

/// The dihedral group `⟨a, b | a² = bᵐ = 1, bab = a⟩` of order `2m`.
/// Element `b^k a^f` has index `f·m + k`.
pub fn dihedral(m: usize) -> Result<FiniteMagma> {
    if m == 0 {
        return Err(Error::SizeGuard("dihedral group needs m >= 1".into()));
    }
    guard("dihedral group", 2 * m)?;
    let label = |i: usize| {
        let (f, k) = (i / m, i % m);
        let b = match k {
            0 => String::new(),
            1 => "b".to_string(),
            _ => format!("b^{k}"),
        };
        match (b.is_empty(), f) {
            (true, 0) => "e".to_string(),
            (_, 0) => b,
            _ => format!("{b}a"),
        }
    };
    let labels = (0..2 * m).map(label).collect();
    FiniteMagma::from_fn(labels, |x, y| {
        let (f, k) = (x / m, x % m);
        let (g, l) = (y / m, y % m);
        let k2 = if f == 0 { (k + l) % m } else { (k + m - l) % m };
        ((f + g) % 2) * m + k2
    })
}

fn compose_left_first(f: &[usize], g: &[usize]) -> Vec<usize> {
    f.iter().map(|&x| g[x]).collect()
}

fn map_label(f: &[usize]) -> String {
    f.iter().map(|x| (x + 1).to_string()).collect()
}

/// Full transformation semigroup on `{1..n}` under left-first composition
/// `(f∘g)(x) = g(f(x))`. Maps are ordered lexicographically by image tuple
/// and labelled by it, so in `S(2)` the labels are `11, 12, 21, 22`.
pub fn symmetric_semigroup(n: usize) -> Result<FiniteMagma> {
    if n == 0 || n > 5 {
        return Err(Error::SizeGuard(format!("S(n) is built for 1 <= n <= 5, got {n}")));
    }
    let maps: Vec<Vec<usize>> = (0..n).map(|_| 0..n).multi_cartesian_product().collect();
    transformation_magma(maps)
}

/// The symmetric group on `{1..k}`, permutations in lexicographic order,
/// with the same left-first composition as [`symmetric_semigroup`].
pub fn symmetric_group(k: usize) -> Result<FiniteMagma> {
    if k == 0 || k > 6 {
        return Err(Error::SizeGuard(format!("S_k is built for 1 <= k <= 6, got {k}")));
    }
    transformation_magma((0..k).permutations(k).collect())
}

fn transformation_magma(maps: Vec<Vec<usize>>) -> Result<FiniteMagma> {
    let index: std::collections::HashMap<Vec<usize>, usize> =
        maps.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let labels = maps.iter().map(|m| map_label(m)).collect();
    FiniteMagma::from_fn(labels, |a, b| index[&compose_left_first(&maps[a], &maps[b])])
}

/// Near-ring tables `(Z_n, +, ⊙)` with `a ⊙ b = a`.
pub fn near_ring_zn(n: usize) -> Result<FiniteRingTable> {
    if n == 0 {
        return Err(Error::SizeGuard("Z_n needs n >= 1".into()));
    }
    guard("Z_n", n)?;
    FiniteRingTable::from_fns(numbered(n), |a, b| (a + b) % n, |a, _| a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::{check_group, check_ring, check_semigroup, is_normal, Checker};

    #[test]
    fn small_groups() {
        let d6 = dihedral(6).unwrap();
        assert_eq!(d6.size(), 12);
        assert!(check_group(&d6).passed());
        assert!(!crate::finite::check_commutative(&d6).passed());
        assert!(check_group(&dihedral(1).unwrap()).passed());
        assert_eq!(cyclic(1).unwrap().size(), 1);
        assert!(check_group(&cyclic(1).unwrap()).passed());
        assert!(check_ring(&build_zn(12).unwrap()).passed());
        assert!(matches!(symmetric_group(7), Err(Error::SizeGuard(_))));
    }

    #[test]
    fn dihedral_relations() {
        let m = 5;
        let d = dihedral(m).unwrap();
        let (a, b) = (d.index_of("a").unwrap(), d.index_of("b").unwrap());
        let e = d.index_of("e").unwrap();
        assert_eq!(d.op(a, a), e);
        assert_eq!(d.op(d.op(b, a), b), a);
        let mut x = e;
        for _ in 0..m {
            x = d.op(x, b);
        }
        assert_eq!(x, e);
    }

    #[test]
    fn symmetric_groups() {
        let s3 = symmetric_group(3).unwrap();
        assert!(check_group(&s3).passed());
        let a3: Vec<usize> = ["123", "231", "312"].iter().map(|l| s3.index_of(l).unwrap()).collect();
        assert!(is_normal(&s3, &a3).unwrap());
        let s4 = symmetric_group(4).unwrap();
        assert_eq!(s4.size(), 24);
        // The rotations of a square with vertices 1..4.
        let rot: Vec<usize> = ["1234", "2341", "3412", "4123"]
            .iter()
            .map(|l| s4.index_of(l).unwrap())
            .collect();
        assert!(s4.is_closed(&rot));
        assert!(Checker::default().group_on(&s4, &rot).passed());
        assert!(!is_normal(&s4, &rot).unwrap());
    }

    #[test]
    fn symmetric_semigroup_left_first() {
        let s2 = symmetric_semigroup(2).unwrap();
        assert_eq!(s2.labels(), ["11", "12", "21", "22"]);
        let (p1, p2) = (s2.index_of("21").unwrap(), s2.index_of("11").unwrap());
        assert_eq!(s2.op(p1, p2), p2);
        // (f∘g)(x) = g(f(x)): every point goes to 1, then 1 goes to 2.
        let (f, g) = (s2.index_of("11").unwrap(), s2.index_of("21").unwrap());
        assert_eq!(s2.label(s2.op(f, g)), "22");
        let e = s2.index_of("12").unwrap();
        for x in 0..4 {
            assert_eq!(s2.op(e, x), x);
            assert_eq!(s2.op(x, e), x);
        }
        let s3 = symmetric_semigroup(3).unwrap();
        assert_eq!(s3.size(), 27);
        assert!(check_semigroup(&s3).passed());
    }

    #[test]
    fn near_rings() {
        let n = near_ring_zn(5).unwrap();
        assert!(crate::finite::check_near_ring(&n).passed());
        assert!(crate::finite::check_near_ring(&near_ring_zn(1).unwrap()).passed());
    }
}
