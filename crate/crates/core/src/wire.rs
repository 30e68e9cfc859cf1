//! JSON wire formats: problem documents, matrices as string entries, and
//! the payloads that reports embed (certificates, witnesses, radical data).
//!
//! Scalars cross the wire as strings ("5/6" over Q, decimal residues over
//! F_p); the field itself is declared once in the document header and
//! inherited by every matrix. All containers are struct- or BTreeMap-backed,
//! so serialization is byte-stable.

use serde::{Deserialize, Serialize};

use crate::algebra::RadicalReport;
use crate::endosim::{FinSuppOp, FinVec, OrdIndex};
use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec};
use crate::matrix::Matrix;
use crate::tri::{Flag, McCoyReport, ObstructionKind, Triangularization, Verdict, Witness};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixWire {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

impl MatrixWire {
    pub fn from_matrix<K: Field>(m: &Matrix<K>) -> Self {
        let f = m.field();
        let entries = (0..m.rows())
            .map(|r| m.row(r).iter().map(|e| f.format(e)).collect())
            .collect();
        MatrixWire { rows: m.rows(), cols: m.cols(), entries }
    }

    pub fn to_matrix<K: Field>(&self, field: &K) -> Result<Matrix<K>> {
        if self.entries.len() != self.rows
            || self.entries.iter().any(|r| r.len() != self.cols)
        {
            return Err(Error::Parse("matrix entry grid does not match rows/cols".into()));
        }
        let mut data = Vec::with_capacity(self.rows * self.cols);
        for row in &self.entries {
            for cell in row {
                data.push(field.parse(cell)?);
            }
        }
        Ok(Matrix::new(field.clone(), self.rows, self.cols, data))
    }
}

fn format_vec<K: Field>(field: &K, v: &[K::Elem]) -> Vec<String> {
    v.iter().map(|e| field.format(e)).collect()
}

fn parse_vec<K: Field>(field: &K, v: &[String]) -> Result<Vec<K::Elem>> {
    v.iter().map(|s| field.parse(s)).collect()
}

/// Options block of a problem document.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DocOptions {
    #[serde(default = "default_unital")]
    pub unital: bool,
    #[serde(default)]
    pub strict: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<u64>,
}

fn default_unital() -> bool {
    true
}

impl Default for DocOptions {
    fn default() -> Self {
        DocOptions { unital: true, strict: false, bound: None }
    }
}

/// Self-describing problem document: field, matrix size, generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProblemDocWire {
    #[serde(flatten)]
    pub field: FieldSpec,
    pub n: usize,
    pub generators: Vec<MatrixWire>,
    #[serde(default)]
    pub options: DocOptions,
}

impl ProblemDocWire {
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("wire structs always serialize")
    }

    /// Typed generators over a concrete field handle. The handle must match
    /// the declared field spec.
    pub fn generators<K: Field>(&self, field: &K) -> Result<Vec<Matrix<K>>> {
        if field.spec() != self.field {
            return Err(Error::FieldMismatch);
        }
        if self.n == 0 {
            return Err(Error::Parse("matrix size n must be positive".into()));
        }
        let mut out = Vec::with_capacity(self.generators.len());
        for g in &self.generators {
            let m = g.to_matrix(field)?;
            if m.rows() != self.n || m.cols() != self.n {
                return Err(Error::SizeMismatch);
            }
            out.push(m);
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangularizationWire {
    /// Change-of-basis matrix P, flag vectors as columns.
    pub flag: MatrixWire,
    pub conjugated: Vec<MatrixWire>,
    pub strict: bool,
    pub diagonal_map: Vec<Vec<String>>,
}

impl TriangularizationWire {
    pub fn from_tri<K: Field>(t: &Triangularization<K>) -> Self {
        let field = t.flag.matrix().field();
        TriangularizationWire {
            flag: MatrixWire::from_matrix(t.flag.matrix()),
            conjugated: t.conjugated.iter().map(MatrixWire::from_matrix).collect(),
            strict: t.strict,
            diagonal_map: t.diagonal_map.iter().map(|d| format_vec(field, d)).collect(),
        }
    }

    pub fn to_tri<K: Field>(&self, field: &K) -> Result<Triangularization<K>> {
        let p = self.flag.to_matrix(field)?;
        if !p.is_square() {
            return Err(Error::Parse("flag matrix must be square".into()));
        }
        let basis = (0..p.cols()).map(|j| p.col_vec(j)).collect();
        let flag = Flag::new(field.clone(), basis);
        let conjugated = self
            .conjugated
            .iter()
            .map(|m| m.to_matrix(field))
            .collect::<Result<Vec<_>>>()?;
        let diagonal_map = self
            .diagonal_map
            .iter()
            .map(|d| parse_vec(field, d))
            .collect::<Result<Vec<_>>>()?;
        Ok(Triangularization { flag, conjugated, strict: self.strict, diagonal_map })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessWire {
    pub stage: usize,
    pub kind: String,
    pub flag_prefix: Vec<Vec<String>>,
    pub induced: Vec<MatrixWire>,
}

impl WitnessWire {
    pub fn from_witness<K: Field>(field: &K, w: &Witness<K>) -> Self {
        let kind = match w.kind {
            ObstructionKind::NoCommonEigenvector => "no_common_eigenvector",
            ObstructionKind::TrivialCommonKernel => "trivial_common_kernel",
        };
        WitnessWire {
            stage: w.stage,
            kind: kind.into(),
            flag_prefix: w.flag_prefix.iter().map(|v| format_vec(field, v)).collect(),
            induced: w.induced.iter().map(MatrixWire::from_matrix).collect(),
        }
    }

    pub fn to_witness<K: Field>(&self, field: &K) -> Result<Witness<K>> {
        let kind = match self.kind.as_str() {
            "no_common_eigenvector" => ObstructionKind::NoCommonEigenvector,
            "trivial_common_kernel" => ObstructionKind::TrivialCommonKernel,
            other => return Err(Error::Parse(format!("unknown witness kind {other:?}"))),
        };
        Ok(Witness {
            stage: self.stage,
            kind,
            flag_prefix: self
                .flag_prefix
                .iter()
                .map(|v| parse_vec(field, v))
                .collect::<Result<Vec<_>>>()?,
            induced: self
                .induced
                .iter()
                .map(|m| m.to_matrix(field))
                .collect::<Result<Vec<_>>>()?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictWire {
    pub outcome: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<TriangularizationWire>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessWire>,
}

impl VerdictWire {
    pub fn from_verdict<K: Field>(field: &K, v: &Verdict<K>) -> Self {
        match v {
            Verdict::Triangularizable(t) => VerdictWire {
                outcome: "triangularizable".into(),
                certificate: Some(TriangularizationWire::from_tri(t)),
                witness: None,
            },
            Verdict::StrictlyTriangularizable(t) => VerdictWire {
                outcome: "strictly_triangularizable".into(),
                certificate: Some(TriangularizationWire::from_tri(t)),
                witness: None,
            },
            Verdict::Not(w) => VerdictWire {
                outcome: "not_triangularizable".into(),
                certificate: None,
                witness: Some(WitnessWire::from_witness(field, w)),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadicalReportWire {
    pub algebra_dim: usize,
    pub radical_dim: usize,
    pub m: usize,
    pub quotient_commutative: bool,
    pub split_as_km: bool,
    /// Radical basis in algebra coordinates and as ambient matrices.
    pub radical_coords: Vec<Vec<String>>,
    pub radical_matrices: Vec<MatrixWire>,
}

impl RadicalReportWire {
    pub fn from_report<K: Field>(field: &K, r: &RadicalReport<K>) -> Self {
        RadicalReportWire {
            algebra_dim: r.algebra_dim,
            radical_dim: r.radical.dim(),
            m: r.m,
            quotient_commutative: r.quotient_commutative,
            split_as_km: r.split_as_km,
            radical_coords: r.radical.basis().iter().map(|v| format_vec(field, v)).collect(),
            radical_matrices: r.radical_matrices.iter().map(MatrixWire::from_matrix).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct McCoyReportWire {
    pub triangularizable: bool,
    pub algebra_dim: usize,
    pub radical_dim: usize,
    pub m: usize,
    pub quotient_commutative: bool,
    pub split_as_km: bool,
    pub radical_coords: Vec<Vec<String>>,
    pub radical_matrices: Vec<MatrixWire>,
}

impl McCoyReportWire {
    pub fn from_report<K: Field>(field: &K, r: &McCoyReport<K>) -> Self {
        let rad = RadicalReportWire::from_report(field, &r.radical);
        McCoyReportWire {
            triangularizable: r.triangularizable,
            algebra_dim: rad.algebra_dim,
            radical_dim: rad.radical_dim,
            m: rad.m,
            quotient_commutative: rad.quotient_commutative,
            split_as_km: rad.split_as_km,
            radical_coords: rad.radical_coords,
            radical_matrices: rad.radical_matrices,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinVecWire {
    pub entries: Vec<FinVecEntryWire>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinVecEntryWire {
    pub index: String,
    pub val: String,
}

impl FinVecWire {
    pub fn from_vec<K: Field>(v: &FinVec<K>) -> Self {
        let f = v.field();
        FinVecWire {
            entries: v
                .support()
                .map(|(i, x)| FinVecEntryWire { index: i.to_string(), val: f.format(x) })
                .collect(),
        }
    }

    pub fn to_vec<K: Field>(&self, field: &K) -> Result<FinVec<K>> {
        let mut entries = vec![];
        for e in &self.entries {
            let i: OrdIndex = e.index.parse()?;
            entries.push((i, field.parse(&e.val)?));
        }
        Ok(FinVec::from_entries(field.clone(), entries))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinSuppOpWire {
    pub id_scalar: String,
    pub entries: Vec<FinSuppOpEntryWire>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinSuppOpEntryWire {
    pub row: String,
    pub col: String,
    pub val: String,
}

impl FinSuppOpWire {
    pub fn from_op<K: Field>(op: &FinSuppOp<K>) -> Self {
        let f = op.field();
        FinSuppOpWire {
            id_scalar: f.format(op.id_scalar()),
            entries: op
                .entries()
                .map(|((r, c), x)| FinSuppOpEntryWire {
                    row: r.to_string(),
                    col: c.to_string(),
                    val: f.format(x),
                })
                .collect(),
        }
    }

    pub fn to_op<K: Field>(&self, field: &K) -> Result<FinSuppOp<K>> {
        let mut op = FinSuppOp::zero(field.clone());
        op.set_id_scalar(field.parse(&self.id_scalar)?);
        for e in &self.entries {
            let r: OrdIndex = e.row.parse()?;
            let c: OrdIndex = e.col.parse()?;
            let prev = op.entry(r, c);
            op.set_entry(r, c, field.add(&prev, &field.parse(&e.val)?));
        }
        Ok(op)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use proptest::prelude::*;

    #[test]
    fn field_spec_wire_format() {
        assert_eq!(serde_json::to_string(&FieldSpec::Q).unwrap(), r#"{"field":"Q"}"#);
        assert_eq!(
            serde_json::to_string(&FieldSpec::Fp { p: 5 }).unwrap(),
            r#"{"field":"Fp","p":5}"#
        );
        let q: FieldSpec = serde_json::from_str(r#"{"field":"Q"}"#).unwrap();
        assert_eq!(q, FieldSpec::Q);
    }

    #[test]
    fn doc_parses_with_defaults() {
        let json = r#"{
            "field": "Q",
            "n": 2,
            "generators": [
                {"rows": 2, "cols": 2, "entries": [["0", "-1"], ["1", "0"]]}
            ]
        }"#;
        let doc = ProblemDocWire::from_json(json).unwrap();
        assert_eq!(doc.field, FieldSpec::Q);
        assert!(doc.options.unital);
        assert!(!doc.options.strict);
        let gens = doc.generators(&Rationals).unwrap();
        assert_eq!(gens.len(), 1);
        assert_eq!(*gens[0].get(0, 1), Rationals.from_int(-1));
    }

    #[test]
    fn doc_over_fp() {
        let json = r#"{
            "field": "Fp", "p": 5,
            "n": 1,
            "generators": [{"rows": 1, "cols": 1, "entries": [["-3"]]}]
        }"#;
        let doc = ProblemDocWire::from_json(json).unwrap();
        let f5 = PrimeField::new(5).unwrap();
        let gens = doc.generators(&f5).unwrap();
        assert_eq!(*gens[0].get(0, 0), 2);
    }

    #[test]
    fn malformed_entry_is_a_parse_error() {
        let json = r#"{
            "field": "Q",
            "n": 1,
            "generators": [{"rows": 1, "cols": 1, "entries": [["1/0"]]}]
        }"#;
        let doc = ProblemDocWire::from_json(json).unwrap();
        match doc.generators(&Rationals) {
            Err(Error::Parse(_)) => {}
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn wrong_size_generator_is_rejected() {
        let json = r#"{
            "field": "Q",
            "n": 2,
            "generators": [{"rows": 1, "cols": 1, "entries": [["1"]]}]
        }"#;
        let doc = ProblemDocWire::from_json(json).unwrap();
        assert_eq!(doc.generators(&Rationals).unwrap_err(), Error::SizeMismatch);
    }

    proptest! {
        #[test]
        fn doc_round_trip(
            n in 1usize..4,
            seed_entries in proptest::collection::vec(-9i64..=9, 1..=32),
            unital in any::<bool>(),
            strict in any::<bool>(),
            bound in proptest::option::of(1u64..10_000),
        ) {
            let field = Rationals;
            let count = (seed_entries.len() / (n * n)).max(1).min(3);
            let mut gens = vec![];
            for g in 0..count {
                let mut m = Matrix::zero(field, n, n);
                for r in 0..n {
                    for c in 0..n {
                        let idx = (g * n * n + r * n + c) % seed_entries.len();
                        m.set(r, c, field.from_int(seed_entries[idx]));
                    }
                }
                gens.push(m);
            }
            let doc = ProblemDocWire {
                field: FieldSpec::Q,
                n,
                generators: gens.iter().map(MatrixWire::from_matrix).collect(),
                options: DocOptions { unital, strict, bound },
            };
            let json = doc.to_json();
            let back = ProblemDocWire::from_json(&json).unwrap();
            prop_assert_eq!(&back, &doc);
            let typed = back.generators(&field).unwrap();
            prop_assert_eq!(typed, gens);
        }
    }

    #[test]
    fn op_wire_round_trip() {
        use crate::endosim::OrdIndex;
        let mut op = FinSuppOp::zero(Rationals);
        op.set_id_scalar(Rationals.from_int(3));
        op.set_entry(OrdIndex::nat(3), OrdIndex::top(0), Rationals.parse("1/2").unwrap());
        op.set_entry(OrdIndex::nat(1), OrdIndex::nat(2), Rationals.from_int(-1));
        let wire = FinSuppOpWire::from_op(&op);
        let back = wire.to_op(&Rationals).unwrap();
        assert_eq!(back, op);
        // the documented shape
        let json = serde_json::to_string(&wire).unwrap();
        assert!(json.contains(r#""id_scalar":"3""#));
        assert!(json.contains(r#""row":"n:3""#));
        assert!(json.contains(r#""col":"inf:0""#));
    }
}
