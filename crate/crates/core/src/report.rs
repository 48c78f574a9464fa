//! Ordered verification reports for a single algebra.

use crate::config::Config;
use crate::error::{Result, WhaError};
use crate::integrals::{
    counitals_of_lambda_check, distinguished_grouplikes, dual_integral, nondegenerate_left_integral,
    semisimplicity_battery, trace_formula_1, verify_radford,
};
use crate::numerics::QMatrix;
use crate::repcat::{
    canonical_pivotal, fp_element, is_pseudounitary, s2_positive, ser_cvec, verify_ll, verify_pivotal, w_colinearity,
    RepData,
};
use crate::theorems::{class_equation, second_trace_formula};
use crate::wha::{WeakBialgebra, WeakHopfAlgebra};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Entry {
    pub name: String,
    pub verdict: Verdict,
    pub anchor: String,
    pub details: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub algebra: String,
    pub seed: u64,
    pub entries: Vec<Entry>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.verdict != Verdict::Fail)
    }

    pub fn first_failure(&self) -> Option<&Entry> {
        self.entries.iter().find(|e| e.verdict == Verdict::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("algebra: {}\nseed: {}\n", self.algebra, self.seed);
        for e in &self.entries {
            let v = match e.verdict {
                Verdict::Pass => "PASS",
                Verdict::Fail => "FAIL",
                Verdict::Skipped => "SKIP",
            };
            s += &format!("{v:<5}{:<34}[{}]\n", e.name, e.anchor);
            if e.verdict != Verdict::Pass {
                s += &format!("     {}\n", e.details);
            }
        }
        s += if self.passed() { "result: pass\n" } else { "result: FAIL\n" };
        s
    }
}

/// Checks run by `check-all`, in report order: (name, anchor).
pub const CHECKS: &[(&str, &str)] = &[
    ("verify_axioms", "definition: weak Hopf algebra"),
    ("semisimplicity_battery", "proposition: semisimplicity criteria"),
    ("counitals_of_lambda", "proposition: counital maps on the canonical integral"),
    ("radford", "Radford formula for S^4"),
    ("trace_formula_1", "first trace formula"),
    ("fusion_ring", "K0(A) and the duality of characters"),
    ("dimension_bounds", "|V|^2 <= FPdim(V)^2"),
    ("verify_LL", "inclusion matrix: Lambda^t Lambda f = mu f"),
    ("fp_element", "Frobenius-Perron element of A_s"),
    ("w_colinearity", "w_A* is proportional to w_A acting on the counit"),
    ("positivity_criterion", "pseudo-unitary iff S^2 has positive spectrum"),
    ("canonical_pivotal", "G = wS(w)^-1 is a trivial pivotal element"),
    ("class_equation", "theorem: class equation"),
    ("second_trace_formula", "theorem: second trace formula"),
];

fn anchor(name: &str) -> String {
    CHECKS.iter().find(|(n, _)| *n == name).map_or_else(String::new, |(_, a)| a.to_string())
}

fn entry(name: &str, verdict: Verdict, details: Value) -> Entry {
    Entry { name: name.into(), verdict, anchor: anchor(name), details }
}

fn pass_if(ok: bool) -> Verdict {
    if ok {
        Verdict::Pass
    } else {
        Verdict::Fail
    }
}

/// Turns a check result into an entry. Equivalence violations propagate; unmet preconditions become skips.
fn run<T>(name: &str, r: Result<T>, judge: impl FnOnce(T) -> (bool, Value)) -> Result<Entry> {
    match r {
        Ok(t) => {
            let (ok, details) = judge(t);
            Ok(entry(name, pass_if(ok), details))
        }
        Err(e @ WhaError::EquivalenceViolated(_)) => Err(e),
        Err(e @ (WhaError::NotConnected | WhaError::NotBiconnected | WhaError::NotSemisimple)) => {
            Ok(entry(name, Verdict::Skipped, json!({ "reason": e.to_string() })))
        }
        Err(e) => Ok(entry(name, Verdict::Fail, json!({ "error": e.to_string() }))),
    }
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("serializable")
}

/// Runs every verifier on a validated algebra.
pub fn check_all(a: &WeakHopfAlgebra, cfg: &Config) -> Result<Report> {
    let tol = cfg.tol();
    let seed = cfg.seed;
    let mut entries = Vec::new();
    let axioms = a.verify_axioms();
    entries.push(entry("verify_axioms", pass_if(axioms.passed()), to_value(&axioms)));
    entries
        .push(run("semisimplicity_battery", semisimplicity_battery(a), |b| (b.verdict == Some(true), to_value(&b)))?);
    entries.push(run("counitals_of_lambda", counitals_of_lambda_check(a, tol, seed), |c| (c.passed(), to_value(&c)))?);
    entries.push(run("radford", radford(a, seed), |v| v)?);
    entries.push(run("trace_formula_1", trace_formula_1(a, seed), |t| (t.passed(), to_value(&t)))?);
    let rep = RepData::new(a, tol, seed);
    let rep = match rep {
        Ok(r) => Some(r),
        Err(e @ WhaError::EquivalenceViolated(_)) => return Err(e),
        Err(e) => {
            let reason = e.to_string();
            for (name, _) in &CHECKS[5..] {
                let verdict = if matches!(e, WhaError::NotConnected | WhaError::NotSemisimple) {
                    Verdict::Skipped
                } else {
                    Verdict::Fail
                };
                entries.push(entry(name, verdict, json!({ "reason": reason })));
            }
            None
        }
    };
    if let Some(rep) = rep {
        let checks = rep.fusion.checks();
        entries.push(entry(
            "fusion_ring",
            pass_if(checks.passed() && rep.fp_multiplicative),
            json!({ "checks": checks, "fp_multiplicative": rep.fp_multiplicative, "rank": rep.fusion.rank }),
        ));
        entries.push(entry(
            "dimension_bounds",
            pass_if(rep.dims.sqnorm_bound && rep.dims.dim_bound),
            to_value(&rep.dims),
        ));
        let ll = verify_ll(&rep, tol);
        entries.push(entry("verify_LL", pass_if(ll.holds()), to_value(&ll)));
        entries.push(run("fp_element", fp_element(a, &rep, tol), |f| (f.passed(), to_value(&f)))?);
        entries.push(run("w_colinearity", w_colinearity(a, &rep, tol, seed), |w| (w.proportional, to_value(&w)))?);
        entries.push(run("positivity_criterion", is_pseudounitary(a, &rep, tol), |p| {
            (p, json!({ "pseudo_unitary": p, "s2_positive": s2_positive(a, tol) }))
        })?);
        entries.push(run("canonical_pivotal", pivotal(a, &rep, tol), |v| v)?);
        entries.push(run("class_equation", class_equation(a, &rep, tol, seed), |c| (c.passed(), to_value(&c)))?);
        let st = second_trace_formula(a, &rep, tol);
        entries.push(entry("second_trace_formula", pass_if(st.passed()), to_value(&st)));
    }
    Ok(Report { algebra: a.label().to_string(), seed, entries })
}

fn radford(a: &WeakHopfAlgebra, seed: u64) -> Result<(bool, Value)> {
    let ok = verify_radford(a, seed)?;
    let ell = nondegenerate_left_integral(a, seed)?;
    let pair = dual_integral(a, &ell)?;
    let g = distinguished_grouplikes(a, &pair)?;
    Ok((ok, json!({ "holds": ok, "alpha": to_value(&g.alpha), "a": to_value(&g.a) })))
}

fn pivotal(a: &WeakHopfAlgebra, rep: &RepData, tol: &crate::numerics::Tolerances) -> Result<(bool, Value)> {
    let g = canonical_pivotal(a, rep, tol)?;
    let p = verify_pivotal(a, rep, &g, tol)?;
    Ok((p.passed(), json!({ "G": to_value(&g), "report": to_value(&p) })))
}

/// Report for a file that failed validation: the axiom results, with the rest skipped.
pub fn check_all_unchecked(core: WeakBialgebra, antipode: Option<QMatrix>, seed: u64) -> Report {
    let label = core.label().to_string();
    let a = match antipode {
        Some(s) => Ok(WeakHopfAlgebra::from_parts_unchecked(core.clone(), s)),
        None => core.solve_antipode().map(|s| WeakHopfAlgebra::from_parts_unchecked(core.clone(), s)),
    };
    let first = match a {
        Ok(a) => {
            let r = a.verify_axioms();
            entry("verify_axioms", pass_if(r.passed()), to_value(&r))
        }
        Err(e) => {
            let r = core.verify_bialgebra_axioms();
            entry("verify_axioms", Verdict::Fail, json!({ "error": e.to_string(), "bialgebra": to_value(&r) }))
        }
    };
    let mut entries = vec![first];
    for (name, _) in &CHECKS[1..] {
        entries.push(entry(name, Verdict::Skipped, json!({ "reason": "axioms failed" })));
    }
    Report { algebra: label, seed, entries }
}

/// `report dims`: dimension invariants of a connected semisimple algebra.
pub fn dims_report(a: &WeakHopfAlgebra, cfg: &Config) -> Result<Value> {
    let tol = cfg.tol();
    let rep = RepData::new(a, tol, cfg.seed)?;
    let ll = verify_ll(&rep, tol);
    let pseudo = is_pseudounitary(a, &rep, tol)?;
    let mut dims = rep.dims.clone();
    let mut pivotal = Value::Null;
    if pseudo {
        if let Ok(g) = canonical_pivotal(a, &rep, tol) {
            let p = verify_pivotal(a, &rep, &g, tol)?;
            dims.d_quantum = Some(p.quantum_dims.clone());
            pivotal = to_value(&g);
        }
    }
    let mut eig = a.s2_eigenvalues();
    eig.sort_by(|x, y| x.re.total_cmp(&y.re).then(x.im.total_cmp(&y.im)));
    let spectrum = SpectrumView(eig);
    Ok(json!({
        "algebra": a.label(),
        "d": dims.d,
        "dimA": to_value(&dims)["dimA"],
        "FPdimA": to_value(&dims)["FPdimA"],
        "mu": to_value(&dims)["mu"],
        "f": to_value(&dims)["f"],
        "d_quantum": to_value(&dims)["d_quantum"],
        "sqnorms": to_value(&dims)["sqnorms"],
        "v": to_value(&ll)["v"],
        "Lambda": rep.inclusion.lambda,
        "n_alpha": rep.inclusion.n_alpha,
        "S2_spectrum": to_value(&spectrum),
        "pseudo_unitary": pseudo,
        "pivotal": pivotal,
    }))
}

#[derive(Serialize)]
struct SpectrumView(#[serde(serialize_with = "ser_cvec")] Vec<crate::numerics::C64>);

/// `report fusion`: the fusion ring.
pub fn fusion_report(a: &WeakHopfAlgebra, cfg: &Config) -> Result<Value> {
    let rep = RepData::new(a, cfg.tol(), cfg.seed)?;
    Ok(json!({
        "algebra": a.label(),
        "fusion": to_value(&rep.fusion),
        "dims": rep.wedderburn.dims(),
        "f": to_value(&rep.dims)["f"],
    }))
}
