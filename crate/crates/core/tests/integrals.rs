use wha_lab::builders::{by_name, standard_examples};
use wha_lab::integrals::*;
use wha_lab::numerics::{q, qf, vecops, Tolerances, Q};
use wha_lab::WhaError;

const SEED: u64 = 0x5748_4131;

fn tol() -> Tolerances {
    Tolerances::default()
}

#[test]
fn integral_space_examples() {
    let z2 = by_name("grp(Z2)").unwrap();
    let l = integral_space(&z2, Side::Left).unwrap();
    assert_eq!(l.basis.len(), 1);
    assert_eq!(l.basis[0][0], l.basis[0][1]);
    assert_eq!(integral_space(&by_name("pair(2)").unwrap(), Side::Left).unwrap().basis.len(), 2);
    assert_eq!(integral_space(&by_name("gpd(2,Z2)").unwrap(), Side::Left).unwrap().basis.len(), 2);
}

#[test]
fn canonical_integral_examples() {
    let z2 = by_name("grp(Z2)").unwrap();
    assert_eq!(canonical_integral(&z2), vec![q(2), q(0)]);
    let p2 = by_name("pair(2)").unwrap();
    let lam = canonical_integral(&p2);
    assert_eq!(vecops::dot(&lam, p2.unit()), q(4));
    for (i, l) in lam.iter().enumerate() {
        assert_eq!(*l, p2.algebra().regular_trace(&p2.basis(i)));
    }
    // blockwise on a direct sum
    let ds = by_name("ds(grp(Z2),pair(2))").unwrap();
    let l = canonical_integral(&ds);
    assert_eq!(&l[..2], &canonical_integral(&z2)[..]);
    assert_eq!(&l[2..], &lam[..]);
}

#[test]
fn canonical_integral_is_dual_left_integral() {
    for a in standard_examples() {
        let lam = canonical_integral(&a);
        assert!(is_left_integral(a.dual_ref(), &lam), "{}", a.label());
        assert!(lambda_is_generalized_character(&a, &lam), "{}", a.label());
    }
}

#[test]
fn normalized_and_haar_examples() {
    let z2 = by_name("grp(Z2)").unwrap();
    assert_eq!(normalized_integral(&z2).unwrap(), Some(vec![qf(1, 2), qf(1, 2)]));
    assert!(normalized_integral(&by_name("pair(2)").unwrap()).unwrap().is_some());
    let z3 = by_name("grp(Z3)").unwrap();
    assert_eq!(haar_integral(&z3).unwrap(), Some(vec![qf(1, 3); 3]));
    let p2 = by_name("pair(2)").unwrap();
    let h = haar_integral(&p2).unwrap().unwrap();
    assert_eq!(p2.s(&h), h);
    assert!(haar_integral(&by_name("gpd(2,Z2)").unwrap()).unwrap().is_some());
}

#[test]
fn haar_properties_on_builders() {
    for a in standard_examples() {
        let h = haar_integral(&a).unwrap().expect("semisimple examples have a Haar integral");
        assert_eq!(a.counital_target(&h), a.unit());
        assert_eq!(a.s(&h), h);
    }
}

#[test]
fn dual_integral_examples() {
    let z2 = by_name("grp(Z2)").unwrap();
    let pair = dual_integral(&z2, &[q(1), q(1)]).unwrap();
    assert_eq!(pair.lambda, vec![q(1), q(0)]);
    let p2 = by_name("pair(2)").unwrap();
    let ell = nondegenerate_left_integral(&p2, SEED).unwrap();
    let pr = dual_integral(&p2, &ell).unwrap();
    assert_eq!(hit_left(&p2, &pr.lambda, &pr.ell), p2.unit());
    assert_eq!(dual_integral(&z2, &[q(0), q(0)]), Err(WhaError::DegenerateIntegral));
}

#[test]
fn dual_integral_round_trip_all() {
    for a in standard_examples() {
        let ell = nondegenerate_left_integral(&a, SEED).unwrap();
        let pr = dual_integral(&a, &ell).unwrap();
        assert_eq!(hit_left(&a, &pr.lambda, &ell), a.unit());
        assert_eq!(fn_hit_left(&a, &ell, &pr.lambda), a.counit());
    }
}

#[test]
fn battery_examples() {
    for name in ["grp(S3)", "pair(3)", "gpd(2,Z2)", "fun(S3)"] {
        let r = semisimplicity_battery(&by_name(name).unwrap()).unwrap();
        assert_eq!(r.verdict, Some(true), "{name}");
        assert!(r.conditions.iter().all(|c| c.verdict));
    }
    assert_eq!(semisimplicity_battery(&by_name("ds(grp(Z2),grp(Z2))").unwrap()).unwrap_err(), WhaError::NotConnected);
}

#[test]
fn counitals_of_lambda_examples() {
    let z2 = by_name("grp(Z2)").unwrap();
    let r = counitals_of_lambda_check(&z2, &tol(), SEED).unwrap();
    assert_eq!(r.trace_s2, q(2));
    assert!(r.passed());
    let p2 = by_name("pair(2)").unwrap();
    let r = counitals_of_lambda_check(&p2, &tol(), SEED).unwrap();
    assert_eq!((r.trace_s2.clone(), r.d), (q(4), 2));
    assert!(r.passed());
    let r = counitals_of_lambda_check(&by_name("gpd(2,Z2)").unwrap(), &tol(), SEED).unwrap();
    assert!(r.passed());
    assert!(r.source_exact);
}

#[test]
fn distinguished_grouplike_examples() {
    let z2 = by_name("grp(Z2)").unwrap();
    let h = haar_integral(&z2).unwrap().unwrap();
    let dg = distinguished_grouplikes(&z2, &dual_integral(&z2, &h).unwrap()).unwrap();
    assert_eq!(dg.alpha.element, z2.counit());
    assert_eq!(dg.a.element, z2.unit());

    let p2 = by_name("pair(2)").unwrap();
    let h = haar_integral(&p2).unwrap().unwrap();
    let dg = distinguished_grouplikes(&p2, &dual_integral(&p2, &h).unwrap()).unwrap();
    assert!(dg.a.trivial_witness.is_some());
    assert!(dg.alpha.trivial_witness.is_some());

    // rescale ℓ by an invertible z ∈ A_t: α may change, triviality does not
    let z: Vec<Q> = vec![q(2), q(0), q(0), q(5)];
    let ell2 = p2.mul(&h, &z);
    let dg2 = distinguished_grouplikes(&p2, &dual_integral(&p2, &ell2).unwrap()).unwrap();
    assert!(dg2.alpha.trivial_witness.is_some());
    assert!(dg2.a.trivial_witness.is_some());
}

#[test]
fn radford_on_all_examples() {
    for a in standard_examples() {
        assert!(verify_radford(&a, SEED).unwrap(), "{}", a.label());
    }
}

#[test]
fn first_trace_formula_examples() {
    let z2 = by_name("grp(Z2)").unwrap();
    let r = trace_formula_1(&z2, SEED).unwrap();
    assert_eq!(r.trace_s2, q(2));
    assert!(r.passed());
    let r = trace_formula_1(&by_name("pair(2)").unwrap(), SEED).unwrap();
    assert_eq!((r.trace_s2.clone(), r.pairing.clone()), (q(4), q(4)));
    for a in standard_examples() {
        let r = trace_formula_1(&a, SEED).unwrap();
        assert!(r.passed(), "{}: {r:?}", a.label());
        assert_eq!(r.random_operators.len(), 5);
    }
}

#[test]
fn unimodularity_examples() {
    let s3 = by_name("grp(S3)").unwrap();
    assert!(is_unimodular(&s3, SEED).unwrap());
    let r = s_invariant_integral_dim_check(&s3, SEED).unwrap();
    assert_eq!(r.s_invariant_dim, 1);
    let r = s_invariant_integral_dim_check(&by_name("pair(2)").unwrap(), SEED).unwrap();
    assert!(r.unimodular && r.holds);
    assert_eq!(r.center_target_dim, 1);
    let r = s_invariant_integral_dim_check(&by_name("ds(grp(Z2),grp(Z2))").unwrap(), SEED).unwrap();
    assert!(r.unimodular && r.holds);
    assert_eq!(r.s_invariant_dim, 2);
}
