//! Acceptance criteria. Prints one PASS/FAIL line per criterion; exits nonzero on any FAIL.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::Instant;

use wha_lab::builders::{by_name, save, standard_examples};
use wha_lab::integrals::{
    distinguished_grouplikes, dual_integral, nondegenerate_left_integral, semisimplicity_battery, trace_formula_1,
    verify_radford,
};
use wha_lab::modalg::{fixtures, k0_module, orbit_theorem_check, verify_radical_stability};
use wha_lab::numerics::rational::to_f64;
use wha_lab::numerics::{q, span, Tolerances};
use wha_lab::repcat::{is_pseudounitary, s2_positive, verify_ll, RepData};
use wha_lab::theorems::{class_equation, second_trace_formula, Integrality};
use wha_lab::{WeakHopfAlgebra, WhaError};

const SEED: u64 = 0x5748_4131;
const EPS: f64 = 1e-8;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn tol() -> Tolerances {
    Tolerances::default()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn close(x: f64, y: f64) -> bool {
    (x - y).abs() <= EPS
}

fn connected(examples: &[WeakHopfAlgebra]) -> Vec<(&WeakHopfAlgebra, RepData)> {
    examples
        .iter()
        .filter(|a| a.connectivity().connected)
        .map(|a| (a, RepData::new(a, &tol(), SEED).unwrap_or_else(|e| panic!("{}: {e}", a.label()))))
        .collect()
}

fn rep_of(name: &str) -> (WeakHopfAlgebra, RepData) {
    let a = by_name(name).unwrap();
    let rep = RepData::new(&a, &tol(), SEED).unwrap();
    (a, rep)
}

fn c1_axioms() -> Outcome {
    let start = Instant::now();
    let examples = standard_examples();
    for a in &examples {
        let r = a.verify_axioms();
        ensure(r.passed(), || format!("{}: {:?}", a.label(), r.first_failure()))?;
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 5.0, || format!("took {secs:.2} s"))?;
    Ok(format!("{} examples in {secs:.2} s", examples.len()))
}

fn c2_battery() -> Outcome {
    let mut n = 0;
    for a in standard_examples().iter().filter(|a| a.connectivity().biconnected) {
        let r = semisimplicity_battery(a).map_err(|e| format!("{}: {e}", a.label()))?;
        ensure(r.verdict == Some(true) && r.conditions.len() == 5, || format!("{}: {:?}", a.label(), r.conditions))?;
        n += 1;
    }
    ensure(n > 0, || "no biconnected examples".into())?;
    Ok(format!("5 conditions true on {n} biconnected examples"))
}

fn c3_dimensions() -> Outcome {
    let expect = [("pair(2)", 2, 1.0, 1.0, 2.0), ("grp(S3)", 1, 6.0, 6.0, 6.0), ("gpd(2,Z2)", 2, 2.0, 2.0, 4.0)];
    for (name, d, dim_a, fp, mu) in expect {
        let (_, rep) = rep_of(name);
        let x = &rep.dims;
        ensure(x.d == d && close(to_f64(&x.dim_a), dim_a) && close(x.fp_dim_a, fp) && close(x.index_mu, mu), || {
            format!("{name}: d={} dimA={} FPdimA={} mu={}", x.d, x.dim_a, x.fp_dim_a, x.index_mu)
        })?;
    }
    Ok("pair(2), grp(S3), gpd(2,Z2) match".into())
}

fn c4_ll() -> Outcome {
    let examples = standard_examples();
    let reps = connected(&examples);
    for (a, rep) in &reps {
        ensure(verify_ll(rep, &tol()).holds(), || a.label().to_string())?;
    }
    let (_, rep) = rep_of("gpd(2,Z2)");
    ensure(rep.inclusion.lambda == vec![vec![1, 1], vec![1, 1]], || {
        format!("gpd(2,Z2) Lambda = {:?}", rep.inclusion.lambda)
    })?;
    Ok(format!("{} connected examples (of {}); gpd(2,Z2) Lambda exact", reps.len(), examples.len()))
}

fn c5_trace_formula() -> Outcome {
    let examples = standard_examples();
    for a in &examples {
        let r = trace_formula_1(a, SEED).map_err(|e| format!("{}: {e}", a.label()))?;
        ensure(r.holds, || format!("{}: Tr S^2 = {} vs {}", a.label(), r.trace_s2, r.pairing))?;
        ensure(r.random_operators.len() == 5 && r.random_operators.iter().all(|&b| b), || {
            format!("{}: random operators {:?}", a.label(), r.random_operators)
        })?;
    }
    Ok(format!("exact on {} examples, 5 random operators each", examples.len()))
}

fn c6_second_trace() -> Outcome {
    let examples = standard_examples();
    let reps = connected(&examples);
    for (a, rep) in &reps {
        let r = second_trace_formula(a, rep, &tol());
        ensure(close(r.dim_a, r.t_rho / r.d as f64 * r.fp_dim_a), || format!("{}: {r:?}", a.label()))?;
        if is_pseudounitary(a, rep, &tol()).map_err(|e| e.to_string())? {
            ensure(close(r.t_rho, r.d as f64), || format!("{}: t_rho = {} d = {}", a.label(), r.t_rho, r.d))?;
        }
    }
    Ok(format!("{} connected examples, t_rho = d on pseudo-unitary ones", reps.len()))
}

fn c7_class_equation() -> Outcome {
    let examples = standard_examples();
    let reps = connected(&examples);
    for (a, rep) in &reps {
        let r = class_equation(a, rep, &tol(), SEED).map_err(|e| format!("{}: {e}", a.label()))?;
        let total: f64 = r.terms.iter().map(|t| t.n.re).sum();
        ensure(close(total, r.dim_a), || format!("{}: sum {total} vs {}", a.label(), r.dim_a))?;
    }
    let (a, rep) = rep_of("grp(Z2)");
    let r = class_equation(&a, &rep, &tol(), SEED).map_err(|e| e.to_string())?;
    let ns: Vec<f64> = r.terms.iter().map(|t| t.n.re).collect();
    ensure(ns.len() == 2 && ns.iter().all(|n| close(*n, 1.0)), || format!("grp(Z2) terms {ns:?}"))?;
    let (a, rep) = rep_of("grp(S3)");
    let r = class_equation(&a, &rep, &tol(), SEED).map_err(|e| e.to_string())?;
    ensure(r.terms.iter().all(|t| matches!(t.integrality, Integrality::Integer(_))), || {
        format!("grp(S3) ratios {:?}", r.terms.iter().map(|t| t.ratio).collect::<Vec<_>>())
    })?;
    Ok(format!("sum identity on {} connected examples; grp(Z2) = 1+1; grp(S3) ratios integral", reps.len()))
}

fn c8_radford() -> Outcome {
    let examples = standard_examples();
    for a in &examples {
        ensure(verify_radford(a, SEED).map_err(|e| e.to_string())?, || a.label().to_string())?;
        let ell = nondegenerate_left_integral(a, SEED).map_err(|e| e.to_string())?;
        let pair = dual_integral(a, &ell).map_err(|e| e.to_string())?;
        let g = distinguished_grouplikes(a, &pair).map_err(|e| e.to_string())?;
        ensure(a.is_grouplike(&g.a.element) && a.dual_ref().is_grouplike(&g.alpha.element), || {
            format!("{}: distinguished elements not group-like", a.label())
        })?;
    }
    Ok(format!("{} examples", examples.len()))
}

fn c9_positivity() -> Outcome {
    let examples = standard_examples();
    let reps = connected(&examples);
    for (a, rep) in &reps {
        // EquivalenceViolated here would mean the two verdicts disagree
        let pu =
            is_pseudounitary(a, rep, &tol()).map_err(|e| format!("{}: {e} (exit {})", a.label(), e.exit_code()))?;
        let pos = s2_positive(a, &tol());
        ensure(pu && pos, || format!("{}: pseudo-unitary {pu}, S^2 positive {pos}", a.label()))?;
    }
    let code = WhaError::EquivalenceViolated(String::new()).exit_code();
    ensure(code == 3, || format!("disagreement exit code {code}"))?;
    Ok(format!("verdicts agree (all true) on {} connected examples; disagreement exits 3", reps.len()))
}

fn c10_radical() -> Outcome {
    let (a, m) = fixtures::dual_numbers_sign().map_err(|e| e.to_string())?;
    let r = verify_radical_stability(&a, &m, &tol(), SEED).map_err(|e| e.to_string())?;
    let x = vec![q(0), q(1)];
    ensure(r.radical.len() == 1 && span::contains(&r.radical, &x), || format!("J(M) = {:?}", r.radical))?;
    ensure(r.stable && r.equal, || format!("A.J = J fails: stable {} equal {}", r.stable, r.equal))?;
    ensure(r.lrt.passed(), || format!("LRT: {:?}", r.lrt))?;
    Ok("grp(Z2) on k[x]/(x^2): A.J = J = span{x}, LRT identities exact".into())
}

fn c11_orbits() -> Outcome {
    let cases = [
        ("fun(S3), k^{S3/Z3}", fixtures::coset_comodule("S3", 3), 3.0),
        ("grp(S3), k[Z3]", fixtures::subgroup_comodule("S3", 3), 2.0),
    ];
    for (name, fixture, expect) in cases {
        let (a, m) = fixture.map_err(|e| e.to_string())?;
        let rep = RepData::new(&a, &tol(), SEED).map_err(|e| e.to_string())?;
        let data = k0_module(&a, &rep, &m, &tol(), SEED).map_err(|e| format!("{name}: {e}"))?;
        let o = orbit_theorem_check(&rep, &data, &tol());
        for (row, erow) in o.ratios.iter().zip(&o.expansion) {
            for (r, e) in row.iter().zip(erow) {
                ensure(close(*r, expect) && close(*r, *e), || format!("{name}: ratio {r}, expansion {e}"))?;
            }
        }
        ensure(o.all_integers(), || format!("{name}: {:?}", o.integrality))?;
    }
    Ok("ratios 3 and 2, integer, match the expansion".into())
}

fn c12_determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let examples = standard_examples();
    for (i, a) in examples.iter().enumerate() {
        let path = dir.path().join(format!("ex{i}.json"));
        save(a, &path).map_err(|e| e.to_string())?;
        let run = || {
            Command::new(env!("CARGO_BIN_EXE_wha"))
                .env_remove("WHA_SEED")
                .args(["check-all", "--json", "--seed", "12345"])
                .arg(&path)
                .output()
                .expect("spawn wha")
        };
        let (x, y) = (run(), run());
        ensure(x.status.success(), || format!("{}: exit {:?}", a.label(), x.status.code()))?;
        ensure(x.stdout == y.stdout, || format!("{}: reports differ", a.label()))?;
    }
    Ok(format!("byte-identical check-all JSON on {} examples", examples.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("axiom suite", c1_axioms),
        ("semisimplicity equivalences", c2_battery),
        ("dimension identities", c3_dimensions),
        ("inclusion matrix", c4_ll),
        ("first trace formula", c5_trace_formula),
        ("second trace formula", c6_second_trace),
        ("class equation", c7_class_equation),
        ("Radford S^4", c8_radford),
        ("positivity criterion", c9_positivity),
        ("radical stability", c10_radical),
        ("orbit theorem", c11_orbits),
        ("determinism", c12_determinism),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default())
        });
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!("{} passed, {failed} failed in {:.1} s", criteria.len() - failed, start.elapsed().as_secs_f64());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
