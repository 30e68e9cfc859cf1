//! Report envelope emitted by every subcommand. The JSON form embeds the
//! full problem (field, generators, options) next to the verdict, so a
//! report is replayable without the original input file. Byte-for-byte
//! determinism is part of the contract: nothing time- or environment-
//! dependent is serialized.

use serde::{Deserialize, Serialize};

use flagstone::field::FieldSpec;
use flagstone::wire::{
    DocOptions, FinSuppOpWire, FinVecWire, MatrixWire, McCoyReportWire, RadicalReportWire,
    VerdictWire,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    #[serde(flatten)]
    pub field: FieldSpec,
    pub n: usize,
    pub generators: Vec<MatrixWire>,
    pub options: DocOptions,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<VerdictWire>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mccoy: Option<McCoyReportWire>,
    /// For mccoy runs: does the structural verdict agree with the
    /// constructive engine on the same document?
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agreement_with_constructive: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closure: Option<ClosureWire>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub radical: Option<RadicalReportWire>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub demo: Option<DemoWire>,
    /// Exit code the producing run terminated with: 0 yes, 1 no, 2 error.
    pub exit: i32,
}

impl Report {
    pub fn new(command: &str, field: FieldSpec, n: usize) -> Self {
        Report {
            command: command.into(),
            field,
            n,
            generators: vec![],
            options: DocOptions::default(),
            verdict: None,
            mccoy: None,
            agreement_with_constructive: None,
            closure: None,
            radical: None,
            demo: None,
            exit: 0,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report structs always serialize")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureWire {
    pub unital: bool,
    pub dim: usize,
    pub basis: Vec<MatrixWire>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "name")]
pub enum DemoWire {
    #[serde(rename = "lower-tri")]
    LowerTri {
        bound: u64,
        outcome: String,
        /// Vector still alive after `bound` lowering steps.
        survivor: FinVecWire,
        /// A sample vector, the operator that pushes it out of its own
        /// span, and the escaped image.
        escape_vector: FinVecWire,
        escape_op: FinSuppOpWire,
        escape_image: FinVecWire,
    },
    #[serde(rename = "shift")]
    Shift {
        window_max: u64,
        /// (window index m, step at which e_m dies); the step equals m.
        kill_steps: Vec<KillStepWire>,
        overall_killed_at: u64,
    },
    #[serde(rename = "non-iso")]
    NonIso {
        idempotents: u64,
        relations_ok: bool,
        draws: u32,
        diag_rows_ok: u32,
        sample: NonIsoSampleWire,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KillStepWire {
    pub index: u64,
    pub steps: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonIsoSampleWire {
    pub id_scalar: String,
    pub coefficients: Vec<String>,
    pub diag_row: Vec<String>,
}

/// Human-readable rendering; the JSON form is the stable interface.
pub fn render_human(report: &Report) -> String {
    let mut out = String::new();
    let push = |out: &mut String, line: String| {
        out.push_str(&line);
        out.push('\n');
    };
    push(&mut out, format!("command:  {}", report.command));
    push(&mut out, format!("field:    {}", report.field));
    if report.n > 0 {
        push(&mut out, format!("n:        {}", report.n));
    }
    if let Some(v) = &report.verdict {
        push(&mut out, format!("verdict:  {}", v.outcome));
        if let Some(c) = &v.certificate {
            push(&mut out, format!("strict:   {}", c.strict));
            push(&mut out, "flag matrix P (columns are the flag):".into());
            for row in &c.flag.entries {
                push(&mut out, format!("  [{}]", row.join(", ")));
            }
            for (g, m) in c.conjugated.iter().enumerate() {
                push(&mut out, format!("conjugated generator {g}:"));
                for row in &m.entries {
                    push(&mut out, format!("  [{}]", row.join(", ")));
                }
            }
        }
        if let Some(w) = &v.witness {
            push(&mut out, format!("witness:  stage {} ({})", w.stage, w.kind));
        }
    }
    if let Some(m) = &report.mccoy {
        push(&mut out, format!("triangularizable: {}", m.triangularizable));
        push(&mut out, format!("algebra dim:      {}", m.algebra_dim));
        push(&mut out, format!("radical dim:      {}", m.radical_dim));
        push(&mut out, format!("m:                {}", m.m));
        push(&mut out, format!("quotient commutative: {}", m.quotient_commutative));
        push(&mut out, format!("splits as k^m:        {}", m.split_as_km));
    }
    if let Some(agree) = report.agreement_with_constructive {
        push(&mut out, format!("agreement with constructive route: {agree}"));
    }
    if let Some(c) = &report.closure {
        push(&mut out, format!("closure dim: {} (unital: {})", c.dim, c.unital));
    }
    if let Some(r) = &report.radical {
        push(&mut out, format!("algebra dim: {}", r.algebra_dim));
        push(&mut out, format!("radical dim: {}", r.radical_dim));
        push(&mut out, format!("quotient m:  {}", r.m));
    }
    if let Some(d) = &report.demo {
        match d {
            DemoWire::LowerTri { bound, outcome, survivor, .. } => {
                push(&mut out, format!("probe bound: {bound}"));
                push(&mut out, format!("outcome:     {outcome}"));
                let idx = survivor
                    .entries
                    .first()
                    .map(|e| e.index.clone())
                    .unwrap_or_default();
                push(&mut out, format!("survivor:    basis vector {idx}"));
            }
            DemoWire::Shift { window_max, kill_steps, overall_killed_at } => {
                push(&mut out, format!("window:      e_1 .. e_{window_max}"));
                for k in kill_steps {
                    push(&mut out, format!("  e_{} dies at step {}", k.index, k.steps));
                }
                push(&mut out, format!("window dead by step {overall_killed_at}"));
            }
            DemoWire::NonIso { idempotents, relations_ok, draws, diag_rows_ok, sample } => {
                push(&mut out, format!("idempotents:     E_1 .. E_{idempotents}"));
                push(&mut out, format!("relations ok:    {relations_ok}"));
                push(&mut out, format!("diag rows ok:    {diag_rows_ok}/{draws}"));
                push(
                    &mut out,
                    format!(
                        "sample: a = {}, a_i = [{}], diag = [{}]",
                        sample.id_scalar,
                        sample.coefficients.join(", "),
                        sample.diag_row.join(", ")
                    ),
                );
            }
        }
    }
    push(&mut out, format!("exit:     {}", report.exit));
    out
}
