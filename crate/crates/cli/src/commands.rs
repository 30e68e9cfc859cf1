//! Command drivers: parse the document, dispatch on the declared field, run
//! the engine, and assemble the report. Every "yes" certificate is re-checked
//! by the independent verifier before it is reported.

use flagstone::algebra;
use flagstone::error::{Error, Result};
use flagstone::field::{Field, FieldSpec, PrimeField, Rationals};
use flagstone::matrix::Matrix;
use flagstone::poly::FieldRoots;
use flagstone::tri::{self, Caps};
use flagstone::wire::{
    DocOptions, MatrixWire, McCoyReportWire, ProblemDocWire, RadicalReportWire, VerdictWire,
};

use crate::report::{ClosureWire, Report};

/// Run a body once with the concrete field handle named by a `FieldSpec`.
macro_rules! with_field {
    ($spec:expr, $k:ident => $body:expr) => {
        match $spec {
            FieldSpec::Q => {
                let $k = Rationals;
                $body
            }
            FieldSpec::Fp { p } => {
                let $k = PrimeField::new(p)?;
                $body
            }
        }
    };
}

fn caps_from(options: &DocOptions, override_bound: Option<u64>) -> Caps {
    match override_bound.or(options.bound) {
        Some(b) => Caps { eigen_tuples: b, root_candidates: b },
        None => Caps::default(),
    }
}

fn base_report(command: &str, doc: &ProblemDocWire, options: DocOptions) -> Report {
    let mut r = Report::new(command, doc.field, doc.n);
    r.generators = doc.generators.clone();
    r.options = options;
    r
}

pub fn cmd_triangularize(
    doc: &ProblemDocWire,
    strict_flag: bool,
    bound: Option<u64>,
) -> Result<Report> {
    let mut options = doc.options;
    options.strict = options.strict || strict_flag;
    if let Some(b) = bound {
        options.bound = Some(b);
    }
    let caps = caps_from(&options, bound);
    with_field!(doc.field, k => {
        let gens = doc.generators(&k)?;
        let verdict = if options.strict {
            tri::strict_triangularize_sized(k.clone(), doc.n, &gens, &caps)?
        } else {
            tri::triangularize_sized(k.clone(), doc.n, &gens, &caps)?
        };
        if let Some(t) = verdict.triangularization() {
            // never report a certificate the independent checker rejects
            if !tri::verify(t, &gens) {
                return Err(Error::Parse("internal: emitted certificate failed verification".into()));
            }
        }
        let mut report = base_report("triangularize", doc, options);
        report.exit = if verdict.is_yes() { 0 } else { 1 };
        report.verdict = Some(VerdictWire::from_verdict(&k, &verdict));
        Ok(report)
    })
}

pub fn cmd_mccoy(doc: &ProblemDocWire, bound: Option<u64>) -> Result<Report> {
    let mut options = doc.options;
    if let Some(b) = bound {
        options.bound = Some(b);
    }
    let caps = caps_from(&options, bound);
    with_field!(doc.field, k => {
        let gens = doc.generators(&k)?;
        let mccoy = tri::check_mccoy_sized(k.clone(), doc.n, &gens)?;
        let constructive = tri::triangularize_sized(k.clone(), doc.n, &gens, &caps)?;
        let agreement = constructive.is_yes() == mccoy.triangularizable;
        let mut report = base_report("mccoy", doc, options);
        report.exit = if mccoy.triangularizable { 0 } else { 1 };
        report.mccoy = Some(McCoyReportWire::from_report(&k, &mccoy));
        report.agreement_with_constructive = Some(agreement);
        Ok(report)
    })
}

pub fn cmd_radical(doc: &ProblemDocWire, bound: Option<u64>) -> Result<Report> {
    let mut options = doc.options;
    if let Some(b) = bound {
        options.bound = Some(b);
    }
    with_field!(doc.field, k => {
        let gens = doc.generators(&k)?;
        let alg = algebra::close_algebra_sized(k.clone(), doc.n, &gens, true)?;
        let analysis = algebra::analyze(&alg)?;
        let mut report = base_report("radical", doc, options);
        report.radical = Some(RadicalReportWire::from_report(&k, &analysis));
        Ok(report)
    })
}

pub fn cmd_closure(doc: &ProblemDocWire, nonunital: bool, bound: Option<u64>) -> Result<Report> {
    let mut options = doc.options;
    if nonunital {
        options.unital = false;
    }
    if let Some(b) = bound {
        options.bound = Some(b);
    }
    with_field!(doc.field, k => {
        let gens = doc.generators(&k)?;
        let alg = algebra::close_algebra_sized(k.clone(), doc.n, &gens, options.unital)?;
        let mut report = base_report("closure", doc, options);
        report.closure = Some(ClosureWire {
            unital: alg.is_unital(),
            dim: alg.dim(),
            basis: alg.elements().iter().map(MatrixWire::from_matrix).collect(),
        });
        Ok(report)
    })
}

/// Result of re-checking a previously emitted report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyOutcome {
    /// The certificate or witness replayed cleanly.
    Valid(&'static str),
    /// It did not.
    Invalid(&'static str),
}

pub fn cmd_verify(report: &Report) -> Result<VerifyOutcome> {
    let Some(verdict) = &report.verdict else {
        return Err(Error::Parse(
            "report carries no verdict; only triangularize reports are verifiable".into(),
        ));
    };
    let caps = caps_from(&report.options, None);
    with_field!(report.field, k => {
        let gens: Vec<Matrix<_>> = report
            .generators
            .iter()
            .map(|g| g.to_matrix(&k))
            .collect::<Result<_>>()?;
        verify_typed(&k, report.n, &gens, verdict, &caps)
    })
}

fn verify_typed<K: Field + FieldRoots>(
    field: &K,
    n: usize,
    gens: &[Matrix<K>],
    verdict: &VerdictWire,
    caps: &Caps,
) -> Result<VerifyOutcome> {
    if let Some(cert) = &verdict.certificate {
        let t = cert.to_tri(field)?;
        let expected_strict = verdict.outcome == "strictly_triangularizable";
        if t.strict != expected_strict {
            return Ok(VerifyOutcome::Invalid("certificate"));
        }
        return Ok(if tri::verify(&t, gens) {
            VerifyOutcome::Valid("certificate")
        } else {
            VerifyOutcome::Invalid("certificate")
        });
    }
    if let Some(w) = &verdict.witness {
        let witness = w.to_witness(field)?;
        return Ok(if tri::replay_witness(field.clone(), n, gens, &witness, caps)? {
            VerifyOutcome::Valid("witness")
        } else {
            VerifyOutcome::Invalid("witness")
        });
    }
    Err(Error::Parse("verdict carries neither certificate nor witness".into()))
}
