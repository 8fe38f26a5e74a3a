//! JSON structure descriptors.
//!
//! ```json
//! {"kind": "zn", "n": 12}
//! {"kind": "poly_quotient", "p": 2, "modulus": [1, 1, 0, 1]}
//! {"kind": "cayley_magma", "table": [[0, 1], [1, 0]]}
//! {"kind": "symbolic", "name": "Q_field"}
//! ```
//!
//! Tables are row = left operand; polynomial coefficients are constant term
//! first.

use serde::{Deserialize, Serialize};

use crate::constructors::{
    build_poly_quotient, build_zn, cyclic, dihedral, format_poly, lattice_semiring, matrix_ring, near_ring_zn,
    symmetric_group, symmetric_semigroup, zn_add, zn_mul, Coefficients, GroupRing,
};
use crate::detect::{Structure, SymbolicStructure};
use crate::error::{Error, Result};
use crate::finite::{ElementId, FiniteMagma, FiniteRingTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ZnOp {
    Add,
    Mul,
    #[default]
    Ring,
}

impl ZnOp {
    fn is_default(&self) -> bool {
        *self == ZnOp::Ring
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupFamily {
    Cyclic,
    /// `n` is the number of rotations; the order is `2n`.
    Dihedral,
    /// `n` is the degree.
    Symmetric,
}

macro_rules! payload {
    ($(#[$m:meta])* $name:ident { $($(#[$fm:meta])* $f:ident : $t:ty),* $(,)? }) => {
        $(#[$m])*
        #[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
        #[serde(deny_unknown_fields)]
        pub struct $name { $($(#[$fm])* pub $f: $t),* }
    };
}

payload!(CayleyMagma {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
    table: Vec<Vec<ElementId>>,
});
payload!(CayleyRing {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
    add: Vec<Vec<ElementId>>,
    mul: Vec<Vec<ElementId>>,
});
payload!(Zn {
    n: usize,
    #[serde(default, skip_serializing_if = "ZnOp::is_default")]
    op: ZnOp,
});
payload!(Order { n: usize });
payload!(PolyQuotient { p: u64, modulus: Vec<i64> });
payload!(Group { family: GroupFamily, n: usize });
payload!(
    /// `coefficients` is `"Z"` or `"Z_n"`.
    OverBase { coefficients: String, base: Box<StructureDescriptor> }
);
payload!(MatrixRing { over: Box<StructureDescriptor>, k: usize });
payload!(LatticeSemiring {
    labels: Vec<String>,
    join: Vec<Vec<ElementId>>,
    meet: Vec<Vec<ElementId>>,
});
payload!(Symbolic { name: String });

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StructureDescriptor {
    CayleyMagma(CayleyMagma),
    CayleyRing(CayleyRing),
    Zn(Zn),
    NearRingZn(Order),
    PolyQuotient(PolyQuotient),
    Group(Group),
    SymmetricSemigroup(Order),
    GroupRing(OverBase),
    SemigroupRing(OverBase),
    MatrixRing(MatrixRing),
    LatticeSemiring(LatticeSemiring),
    Symbolic(Symbolic),
}

pub const KINDS: [&str; 12] = [
    "cayley_magma",
    "cayley_ring",
    "zn",
    "near_ring_zn",
    "poly_quotient",
    "group",
    "symmetric_semigroup",
    "group_ring",
    "semigroup_ring",
    "matrix_ring",
    "lattice_semiring",
    "symbolic",
];

pub const SYMBOLIC_NAMES: [&str; 8] = [
    "Z_add",
    "Q_nonzero_mul",
    "Z_ring",
    "Q_field",
    "Z_near_ring",
    "Q_near_ring",
    "quaternions",
    "GL2_Q",
];

fn symbolic_named(name: &str) -> Result<SymbolicStructure> {
    Ok(match name {
        "Z_add" => SymbolicStructure::ZAdd,
        "Q_nonzero_mul" => SymbolicStructure::QNonZeroMul,
        "Z_ring" => SymbolicStructure::ZRing,
        "Q_field" => SymbolicStructure::QField,
        "Z_near_ring" => SymbolicStructure::ZNearRing,
        "Q_near_ring" => SymbolicStructure::QNearRing,
        "quaternions" => SymbolicStructure::Quaternions,
        "GL2_Q" => SymbolicStructure::Gl2Q,
        _ => return Err(Error::UnknownKind(format!("symbolic structure `{name}`"))),
    })
}

fn payload<T: serde::de::DeserializeOwned>(v: serde_json::Value, path: &str) -> Result<T> {
    serde_path_to_error::deserialize(v).map_err(|e| {
        let at = e.path().to_string();
        let at = if at == "." { String::new() } else { at };
        Error::Malformed(format!("{path}{at}: {}", e.into_inner()))
    })
}

fn parse_value(v: serde_json::Value, path: &str) -> Result<StructureDescriptor> {
    use StructureDescriptor as D;
    let serde_json::Value::Object(mut m) = v else {
        return Err(Error::Malformed(format!("{path}: descriptor must be a JSON object")));
    };
    let kind = match m.remove("kind") {
        Some(serde_json::Value::String(k)) => k,
        Some(_) => return Err(Error::Malformed(format!("{path}kind: expected a string"))),
        None => return Err(Error::Malformed(format!("{path}kind: missing field"))),
    };
    for key in ["base", "over"] {
        if let Some(child) = m.get(key).filter(|_| matches!(kind.as_str(), "group_ring" | "semigroup_ring" | "matrix_ring")) {
            parse_value(child.clone(), &format!("{path}{key}."))?;
        }
    }
    let v = serde_json::Value::Object(m);
    Ok(match kind.as_str() {
        "cayley_magma" => D::CayleyMagma(payload(v, path)?),
        "cayley_ring" => D::CayleyRing(payload(v, path)?),
        "zn" => D::Zn(payload(v, path)?),
        "near_ring_zn" => D::NearRingZn(payload(v, path)?),
        "poly_quotient" => D::PolyQuotient(payload(v, path)?),
        "group" => D::Group(payload(v, path)?),
        "symmetric_semigroup" => D::SymmetricSemigroup(payload(v, path)?),
        "group_ring" => D::GroupRing(payload(v, path)?),
        "semigroup_ring" => D::SemigroupRing(payload(v, path)?),
        "matrix_ring" => D::MatrixRing(payload(v, path)?),
        "lattice_semiring" => D::LatticeSemiring(payload(v, path)?),
        "symbolic" => D::Symbolic(payload(v, path)?),
        other => return Err(Error::UnknownKind(format!("{other} at {path}kind; expected one of {}", KINDS.join(", ")))),
    })
}

/// Parses and validates. Errors name the offending field.
pub fn parse_descriptor(text: &str) -> Result<StructureDescriptor> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::Malformed(format!("line {} column {}: {e}", e.line(), e.column())))?;
    let d = parse_value(value, "")?;
    d.build()?;
    Ok(d)
}

pub fn to_json(d: &StructureDescriptor) -> String {
    serde_json::to_string(d).expect("descriptors serialize")
}

fn labels_or_numbered(labels: &Option<Vec<String>>, n: usize) -> Result<Vec<String>> {
    match labels {
        Some(l) if l.len() != n => Err(Error::TableShape(format!("{} labels for a table of {n} rows", l.len()))),
        Some(l) => Ok(l.clone()),
        None => Ok((0..n).map(|i| i.to_string()).collect()),
    }
}

fn as_magma(s: Structure, role: &str) -> Result<(String, FiniteMagma)> {
    match s {
        Structure::Magma { name, table } => Ok((name, table)),
        _ => Err(Error::ClassMismatch(format!("{role} must be a finite magma"))),
    }
}

fn as_ring(s: Structure, role: &str) -> Result<(String, FiniteRingTable)> {
    match s {
        Structure::Ring { name, table } => Ok((name, table)),
        _ => Err(Error::ClassMismatch(format!("{role} must be a finite ring"))),
    }
}

impl StructureDescriptor {
    pub fn build(&self) -> Result<Structure> {
        use StructureDescriptor as D;
        Ok(match self {
            D::CayleyMagma(CayleyMagma { name, labels, table }) => {
                let l = labels_or_numbered(labels, table.len())?;
                Structure::magma(name.clone().unwrap_or_else(|| "magma".into()), FiniteMagma::new(l, table.clone())?)
            }
            D::CayleyRing(CayleyRing { name, labels, add, mul }) => {
                let l = labels_or_numbered(labels, add.len())?;
                Structure::ring(name.clone().unwrap_or_else(|| "ring".into()), FiniteRingTable::new(l, add.clone(), mul.clone())?)
            }
            D::Zn(Zn { n, op }) => match op {
                ZnOp::Ring => Structure::ring(format!("Z_{n}"), build_zn(*n)?),
                ZnOp::Add => Structure::magma(format!("(Z_{n}, +)"), zn_add(*n)?),
                ZnOp::Mul => Structure::magma(format!("(Z_{n}, ×)"), zn_mul(*n)?),
            },
            D::NearRingZn(Order { n }) => Structure::ring(format!("(Z_{n}, +, ⊙)"), near_ring_zn(*n)?),
            D::PolyQuotient(PolyQuotient { p, modulus }) => {
                let q = build_poly_quotient(*p, modulus)?;
                Structure::ring(format!("Z_{p}[x]/({})", format_poly(&q.modulus)), q.to_ring_table()?)
            }
            D::Group(Group { family, n }) => match family {
                GroupFamily::Cyclic => Structure::magma(format!("C_{n}"), cyclic(*n)?),
                GroupFamily::Dihedral => Structure::magma(format!("D_{n}"), dihedral(*n)?),
                GroupFamily::Symmetric => Structure::magma(format!("S_{n}"), symmetric_group(*n)?),
            },
            D::SymmetricSemigroup(Order { n }) => Structure::magma(format!("S({n})"), symmetric_semigroup(*n)?),
            D::GroupRing(OverBase { coefficients, base }) | D::SemigroupRing(OverBase { coefficients, base }) => {
                let group = matches!(self, D::GroupRing(_));
                let c = Coefficients::parse(coefficients)?;
                let (bname, b) = as_magma(base.build()?, "base")?;
                if group && c == Coefficients::Integers {
                    GroupRing::group_ring(c, b.clone())?;
                    Structure::symbolic(SymbolicStructure::GroupRingZ { base_name: bname, base: b })
                } else {
                    let r = if group { GroupRing::group_ring(c, b)? } else { GroupRing::semigroup_ring(c, b)? };
                    Structure::ring(format!("{}{bname}", c.name()), r.to_ring_table()?)
                }
            }
            D::MatrixRing(MatrixRing { over, k }) => {
                let (rname, r) = as_ring(over.build()?, "over")?;
                Structure::ring(format!("M_{k}({rname})"), matrix_ring(&r, *k)?)
            }
            D::LatticeSemiring(LatticeSemiring { labels, join, meet }) => {
                Structure::ring("lattice", lattice_semiring(labels.clone(), join.clone(), meet.clone())?)
            }
            D::Symbolic(Symbolic { name }) => Structure::symbolic(symbolic_named(name)?),
        })
    }
}
