//! Derived invariants of a self-injective algebra checked across a tilting
//! complex: self-injectivity, Nakayama permutations and symmetry of `B`.

use serde::Serialize;
use serde_json::{json, Value};

use super::{end_algebra, verify_tilting, EndAlgebra, TiltingReport, Verdict, ISO_SEED};
use crate::algebra::{Algebra, Decision, NakayamaFunctor};
use crate::error::{Error, Result};
use crate::homotopy::{iso_in_kb, IsoVerdict, ProjComplex};
use crate::k0::{are_conjugate, k0_matrix, verify_intertwining};
use crate::perm::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// A randomized search ended without a decision.
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub status: CheckStatus,
    pub detail: Value,
}

impl Check {
    fn new(name: &'static str, passed: bool, detail: Value) -> Check {
        Check { name, status: if passed { CheckStatus::Pass } else { CheckStatus::Fail }, detail }
    }
}

#[derive(Clone, Debug)]
pub struct InvarianceReport {
    pub tilting: TiltingReport,
    pub end: EndAlgebra,
    pub sigma_a: Permutation,
    pub sigma_b: Option<Permutation>,
    pub checks: Vec<Check>,
}

impl InvarianceReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status == CheckStatus::Pass)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail).collect()
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn decision_check(name: &'static str, d: Decision, detail: Value) -> Check {
    let status = match d {
        Decision::Yes => CheckStatus::Pass,
        Decision::No => CheckStatus::Fail,
        Decision::Unknown => CheckStatus::Undecided,
    };
    Check { name, status, detail }
}

fn cycle_json(s: &Permutation) -> Value {
    json!({ "cycles": s.to_string(), "cycle_type": s.cycle_type() })
}

/// Builds `B = End(T)^op` for a verified tilting complex over a basic
/// self-injective `A` and checks the invariants that transfer to `B`.
pub fn derived_invariance_report(alg: &Algebra, summands: &[ProjComplex], depth: usize) -> Result<InvarianceReport> {
    if !alg.is_self_injective()? {
        return Err(Error::NotSelfInjective);
    }
    let sigma_a = alg.nakayama_permutation()?;
    let tilting = verify_tilting(alg, summands, depth)?;
    if tilting.verdict != Verdict::Tilting {
        return Err(Error::Invalid(format!("complex is not verified tilting: {:?}", tilting.verdict)));
    }
    let end = end_algebra(alg, summands)?;
    let b = &end.algebra;
    let mut checks = Vec::new();

    let b_si = b.is_self_injective()?;
    checks.push(Check::new("b_self_injective", b_si, json!({ "dim_b": b.dim() })));

    let sigma_b = if b_si { b.nakayama_permutation().ok() } else { None };
    checks.push(Check::new("sigma_b_exists", sigma_b.is_some(), Value::Null));

    let c = k0_matrix(alg, summands);
    if let Some(sb) = &sigma_b {
        checks.push(Check::new(
            "cycle_types_agree",
            are_conjugate(&sigma_a, sb),
            json!({ "sigma_a": cycle_json(&sigma_a), "sigma_b": cycle_json(sb) }),
        ));
        checks.push(Check::new(
            "intertwining",
            verify_intertwining(&sigma_a, sb, &c.matrix)?,
            json!({ "k0_matrix": c.matrix.to_i64_rows() }),
        ));
        if sigma_a.is_identity() {
            checks.push(Check::new("weakly_symmetric_preserved", b.is_weakly_symmetric()?, Value::Null));
        }
    }
    checks.push(Check::new(
        "k0_determinant_unit",
        c.is_unimodular(),
        json!({ "determinant": c.determinant().map(|d| d.to_string()) }),
    ));

    if alg.is_symmetric()? == Decision::Yes {
        checks.push(decision_check("symmetric_preserved", b.is_symmetric()?, Value::Null));
    }

    let nu = NakayamaFunctor::for_algebra(alg)?;
    let t = summands.iter().fold(ProjComplex::zero(), |acc, x| acc.direct_sum(alg, x));
    let verdict = iso_in_kb(alg, &t.nu(&nu), &t, ISO_SEED)?;
    let status = match verdict {
        IsoVerdict::Isomorphic => CheckStatus::Pass,
        IsoVerdict::NotIsomorphic(_) => CheckStatus::Fail,
        IsoVerdict::Unknown => CheckStatus::Undecided,
    };
    checks.push(Check { name: "nu_fixes_t", status, detail: json!({ "verdict": verdict }) });

    Ok(InvarianceReport { tilting, end, sigma_a, sigma_b, checks })
}
