//! Built-in demonstrations on the countable-dimensional sandbox, all over Q.
//!
//! - lower-tri: the strictly-lower finite-support family, where the chain
//!   E_{n,n-1}...E_{2,1} marches a vector out forever and no line is
//!   invariant. The probe survives every bound with witness e_{bound+1}.
//! - shift: the backward shift kills each window vector e_m in exactly m
//!   steps.
//! - non-iso: the orthogonal idempotents E_i with an extra column at the top
//!   index, whose diagonal map rows are (a_1+a, ..., a_n+a, a).

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use flagstone::endosim::{
    bounded_nilpotence_probe, kill_step, one_dim_invariant_probe, FinSuppOp, FinVec,
    InvarianceOutcome, OrdIndex, ProbeOutcome,
};
use flagstone::error::{Error, Result};
use flagstone::field::{Field, FieldSpec, Rationals};
use flagstone::wire::{FinSuppOpWire, FinVecWire};

use crate::report::{DemoWire, KillStepWire, NonIsoSampleWire, Report};

type QOp = FinSuppOp<Rationals>;
type QVec = FinVec<Rationals>;

pub const DEFAULT_BOUND: u64 = 1000;
const SHIFT_WINDOW: u64 = 12;
const NONISO_IDEMPOTENTS: u64 = 8;
const NONISO_DRAWS: u32 = 100;

fn nat(i: u64) -> OrdIndex {
    OrdIndex::nat(i)
}

pub fn run_demo(name: &str, bound: Option<u64>) -> Result<Report> {
    let bound = bound.unwrap_or(DEFAULT_BOUND);
    let demo = match name {
        "lower-tri" => lower_tri(bound)?,
        "shift" => shift(bound)?,
        "non-iso" => non_iso()?,
        other => return Err(Error::Parse(format!("unknown demo {other:?}"))),
    };
    let mut report = Report::new("demo", FieldSpec::Q, 0);
    report.demo = Some(demo);
    Ok(report)
}

/// seq(k) = E_{k+1,k} applied to e_1: never dies, witness e_{bound+1}.
fn lower_tri(bound: u64) -> Result<DemoWire> {
    let window = vec![QVec::unit(Rationals, nat(1))];
    let outcome = bounded_nilpotence_probe(
        |k| QOp::unit(Rationals, nat(k + 1), nat(k)),
        &window,
        bound,
    );
    let survivor = match outcome {
        ProbeOutcome::Survived { witness } => witness,
        ProbeOutcome::Killed(n) => {
            return Err(Error::Parse(format!(
                "lowering chain unexpectedly died at step {n}"
            )))
        }
    };
    // no line is invariant: for any finitely-supported v with top natural
    // index n, the operator E_{n+1,n} pushes it out of its own span
    let f = Rationals;
    let v = QVec::from_entries(
        Rationals,
        vec![(nat(1), f.from_int(1)), (nat(2), f.from_int(2)), (nat(3), f.from_int(3))],
    );
    let top = v.max_nat_support().expect("nonzero sample vector");
    let escape_op = QOp::unit(Rationals, nat(top + 1), nat(top));
    let image = match one_dim_invariant_probe(&[escape_op.clone()], &v)? {
        InvarianceOutcome::Escapes { image, .. } => image,
        InvarianceOutcome::Invariant => {
            return Err(Error::Parse("expected an escape from the sample line".into()))
        }
    };
    Ok(DemoWire::LowerTri {
        bound,
        outcome: "survived".into(),
        survivor: FinVecWire::from_vec(&survivor),
        escape_vector: FinVecWire::from_vec(&v),
        escape_op: FinSuppOpWire::from_op(&escape_op),
        escape_image: FinVecWire::from_vec(&image),
    })
}

/// Backward shift truncated to the window: e_m dies in exactly m steps.
fn shift(bound: u64) -> Result<DemoWire> {
    let m = SHIFT_WINDOW;
    let mut op = QOp::zero(Rationals);
    for i in 2..=m {
        op.set_entry(nat(i - 1), nat(i), Rationals.one());
    }
    let mut kill_steps = vec![];
    for i in 1..=m {
        let v = QVec::unit(Rationals, nat(i));
        let steps = kill_step(|_| op.clone(), &v, bound).ok_or(Error::Parse(format!(
            "shift failed to kill e_{i} within the bound"
        )))?;
        kill_steps.push(KillStepWire { index: i, steps });
    }
    let window: Vec<QVec> = (1..=m).map(|i| QVec::unit(Rationals, nat(i))).collect();
    let overall = match bounded_nilpotence_probe(|_| op.clone(), &window, bound) {
        ProbeOutcome::Killed(n) => n,
        ProbeOutcome::Survived { .. } => {
            return Err(Error::Parse("shift window unexpectedly survived".into()))
        }
    };
    Ok(DemoWire::Shift { window_max: m, kill_steps, overall_killed_at: overall })
}

/// E_i sends both e_i and e_top to e_i: orthogonal idempotents, triangular
/// but not strict, with diagonal map rows (a_1+a, ..., a_n+a, a).
fn non_iso() -> Result<DemoWire> {
    let f = Rationals;
    let n = NONISO_IDEMPOTENTS;
    let idem = |i: u64| {
        let mut op = QOp::zero(Rationals);
        op.set_entry(nat(i), nat(i), f.one());
        op.set_entry(nat(i), OrdIndex::top(0), f.one());
        op
    };
    let mut relations_ok = true;
    for i in 1..=n {
        for j in 1..=n {
            let prod = idem(i).compose(&idem(j));
            let expected_ok =
                if i == j { prod == idem(i) } else { prod.is_zero() };
            relations_ok &= expected_ok;
            relations_ok &= idem(i).is_triangular() && !idem(i).is_strictly_triangular();
        }
    }

    let window: Vec<OrdIndex> = (1..=n).map(nat).chain([OrdIndex::top(0)]).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_cafe);
    let mut diag_rows_ok = 0u32;
    let mut sample = None;
    for draw in 0..NONISO_DRAWS {
        let a = f.from_int(rng.gen_range(-9..=9));
        let coeffs: Vec<_> = (0..n).map(|_| f.from_int(rng.gen_range(-9..=9))).collect();
        let mut op = QOp::identity_multiple(Rationals, a.clone());
        for (idx, c) in coeffs.iter().enumerate() {
            let i = nat(idx as u64 + 1);
            op.set_entry(i, i, c.clone());
            op.set_entry(i, OrdIndex::top(0), c.clone());
        }
        let diag = op.diag_map(&window)?;
        let expected: Vec<_> = coeffs
            .iter()
            .map(|c| f.add(c, &a))
            .chain([a.clone()])
            .collect();
        if diag == expected {
            diag_rows_ok += 1;
        }
        if draw == 0 {
            sample = Some(NonIsoSampleWire {
                id_scalar: f.format(&a),
                coefficients: coeffs.iter().map(|c| f.format(c)).collect(),
                diag_row: diag.iter().map(|c| f.format(c)).collect(),
            });
        }
    }
    Ok(DemoWire::NonIso {
        idempotents: n,
        relations_ok,
        draws: NONISO_DRAWS,
        diag_rows_ok,
        sample: sample.expect("at least one draw"),
    })
}
