use wha_lab::builders::by_name;
use wha_lab::integrals::Side;
use wha_lab::modalg::fixtures::{self, Fixture};
use wha_lab::modalg::*;
use wha_lab::numerics::{q, Tolerances};
use wha_lab::repcat::RepData;
use wha_lab::theorems::Integrality;
use wha_lab::WhaError;

const SEED: u64 = 0x5748_4131;

fn tol() -> Tolerances {
    Tolerances::default()
}

#[test]
fn module_algebra_examples_pass() {
    let (a, m) = fixtures::dual_numbers_sign().unwrap();
    assert!(verify_module_algebra(&a, &m).passed());
    let (a, m) = fixtures::square_zero_standard().unwrap();
    assert!(verify_module_algebra(&a, &m).passed(), "{:?}", verify_module_algebra(&a, &m));
    for name in ["pair(2)", "gpd(2,Z2)", "grp(S3)", "dual(pair(2))"] {
        let a = by_name(name).unwrap();
        let m = fixtures::target_module(&a).unwrap();
        assert!(verify_module_algebra(&a, &m).passed(), "{name}: {:?}", verify_module_algebra(&a, &m));
    }
}

#[test]
fn broken_action_is_reported() {
    let (a, mut m) = fixtures::dual_numbers_sign().unwrap();
    // g·x = 2x is not an action of Z2
    m.action.add_to(1, 1, 1, &q(3));
    let r = verify_module_algebra(&a, &m);
    assert!(!r.passed());
    assert!(!r.get("action").unwrap().passed);
}

#[test]
fn comodule_algebra_examples_pass() {
    let (a, m) = fixtures::subgroup_comodule("S3", 3).unwrap();
    assert!(verify_comodule_algebra(&a, &m).passed());
    let (a, m) = fixtures::coset_comodule("S3", 3).unwrap();
    assert!(verify_comodule_algebra(&a, &m).passed());
    for name in ["pair(2)", "gpd(2,Z2)", "grp(Z3)"] {
        let a = by_name(name).unwrap();
        let m = fixtures::target_comodule(&a).unwrap();
        assert!(verify_comodule_algebra(&a, &m).passed(), "{name}");
    }
}

#[test]
fn comodule_to_module_gives_right_module_algebras() {
    let cases = [
        fixtures::subgroup_comodule("S3", 3).unwrap(),
        fixtures::coset_comodule("S3", 3).unwrap(),
        (by_name("pair(2)").unwrap(), fixtures::target_comodule(&by_name("pair(2)").unwrap()).unwrap()),
        (by_name("gpd(2,Z2)").unwrap(), fixtures::target_comodule(&by_name("gpd(2,Z2)").unwrap()).unwrap()),
    ];
    for (a, m) in cases {
        let r = comodule_to_module(&m);
        assert_eq!(r.side, Side::Right);
        let rep = verify_module_algebra(a.dual_ref(), &r);
        assert!(rep.passed(), "{}: {rep:?}", m.label);
    }
}

#[test]
fn subgroup_comodule_grades_by_group_elements() {
    let (a, m) = fixtures::subgroup_comodule("S3", 3).unwrap();
    let r = comodule_to_module(&m);
    // m_i · δ_g = [h_i = g] m_i
    let h = fixtures::cyclic_subgroup(&wha_lab::builders::FiniteGroup::symmetric(3).unwrap(), 3).unwrap();
    for (i, hi) in h.iter().enumerate() {
        for g in 0..a.dim() {
            let img = r.act(&a.dual_ref().basis(g), &wha_lab::numerics::vecops::unit(3, i));
            let expect = if g == *hi { wha_lab::numerics::vecops::unit(3, i) } else { vec![q(0); 3] };
            assert_eq!(img, expect);
        }
    }
}

#[test]
fn jacobson_radical_examples() {
    let z2 = wha_lab::builders::grp("Z2").unwrap();
    assert!(jacobson_radical(z2.algebra()).is_empty());
    assert_eq!(jacobson_radical(&fixtures::dual_numbers()), vec![vec![q(0), q(1)]]);
    let j = jacobson_radical(&fixtures::upper_triangular());
    assert_eq!(j.len(), 1);
    assert_eq!(j[0][0], q(0));
    assert_eq!(j[0][2], q(0));
}

#[test]
fn radical_stability_examples() {
    let (a, m) = fixtures::dual_numbers_sign().unwrap();
    let r = verify_radical_stability(&a, &m, &tol(), SEED).unwrap();
    assert!(r.passed(), "{r:?}");
    assert_eq!(r.radical, vec![vec![q(0), q(1)]]);
    assert_eq!(r.a_radical_dim, 1);
    let (a, m) = fixtures::square_zero_standard().unwrap();
    let r = verify_radical_stability(&a, &m, &tol(), SEED).unwrap();
    assert!(r.passed());
    assert_eq!(r.radical.len(), 2);
    let (a, m) = fixtures::matrix_trivial().unwrap();
    let r = verify_radical_stability(&a, &m, &tol(), SEED).unwrap();
    assert!(r.passed() && r.radical.is_empty());
}

#[test]
fn lrt_on_target_modules() {
    for name in ["pair(2)", "gpd(2,Z2)", "pair(3)"] {
        let a = by_name(name).unwrap();
        let m = fixtures::target_module(&a).unwrap();
        assert!(verify_lrt(&a, &m).passed(), "{name}");
    }
}

fn k0(a: &wha_lab::WeakHopfAlgebra, m: &ComoduleAlgebra) -> wha_lab::Result<(RepData, K0ModuleData)> {
    let rep = RepData::new(a, &tol(), SEED)?;
    let d = k0_module(a, &rep, m, &tol(), SEED)?;
    Ok((rep, d))
}

#[test]
fn k0_cosets() {
    let (a, m) = fixtures::coset_comodule("S3", 3).unwrap();
    let (rep, d) = k0(&a, &m).unwrap();
    assert!(d.passed());
    assert_eq!(d.k0.dims, vec![1, 1]);
    assert!(d.fp_xi.iter().all(|x| (x - 1.0).abs() < 1e-9));
    assert!((d.fp_dim_m - 2.0).abs() < 1e-9);
    let o = orbit_theorem_check(&rep, &d, &tol());
    assert!(o.passed());
    for row in &o.integrality {
        assert!(row.iter().all(|x| *x == Integrality::Integer(3)));
    }
}

#[test]
fn k0_subgroup() {
    let (a, m) = fixtures::subgroup_comodule("S3", 3).unwrap();
    let (rep, d) = k0(&a, &m).unwrap();
    assert!(d.passed());
    assert_eq!(d.k0.dims, vec![1, 1, 1]);
    assert!(d.fp_xi.iter().all(|x| (x - 1.0).abs() < 1e-9));
    assert!((d.fp_dim_m - 3.0).abs() < 1e-9);
    // restriction of the standard representation to Z3 contains each nontrivial character once
    let std = 2;
    let col_sums: Vec<i64> = (0..3).map(|k| (0..3).map(|i| d.k0.action[std][i][k]).sum()).collect();
    assert_eq!(col_sums, vec![2, 2, 2]);
    let o = orbit_theorem_check(&rep, &d, &tol());
    assert!(o.passed() && o.all_integers());
    assert!(o.ratios.iter().flatten().all(|r| (r - 2.0).abs() < 1e-8));
}

#[test]
fn target_comodule_over_groupoid_is_decomposable() {
    let a = by_name("gpd(2,Z2)").unwrap();
    let m = fixtures::target_comodule(&a).unwrap();
    assert_eq!(k0(&a, &m).unwrap_err(), WhaError::Decomposable);
    let rep = RepData::new(&a, &tol(), SEED).unwrap();
    let act = k0_action(&a, &rep, &m, &tol(), SEED).unwrap();
    assert_eq!(act.dims.len(), 2);
}

#[test]
fn non_semisimple_comodule_rejected() {
    let a = by_name("grp(Z2)").unwrap();
    let alg = fixtures::dual_numbers();
    // δ(m) = 1 ⊗ m
    let mut t = wha_lab::numerics::Tensor3::zeros(2, 2, 2);
    t.add_to(0, 0, 0, &q(1));
    t.add_to(1, 0, 1, &q(1));
    let m = ComoduleAlgebra::new("trivial", alg, t).unwrap();
    assert!(verify_comodule_algebra(&a, &m).passed());
    assert_eq!(k0(&a, &m).unwrap_err(), WhaError::NotSemisimpleM);
}

#[test]
fn fixtures_by_name_and_json_roundtrip() {
    for spec in [
        "dual-numbers",
        "square-zero-std",
        "upper-triangular",
        "target(pair(2))",
        "subgroup(S3,3)",
        "cosets(S3,Z3)",
        "target-comodule(gpd(2,Z2))",
    ] {
        match fixtures::by_name(spec).unwrap() {
            Fixture::Module(a, m) => {
                let f = AlgebraFile::parse(&AlgebraFile::from_module(&m).to_json()).unwrap();
                assert_eq!(f.module_algebra(a.dim()).unwrap(), m, "{spec}");
            }
            Fixture::Comodule(a, m) => {
                let f = AlgebraFile::parse(&AlgebraFile::from_comodule(&m).to_json()).unwrap();
                assert_eq!(f.comodule_algebra(a.dim()).unwrap(), m, "{spec}");
            }
        }
    }
    assert!(matches!(fixtures::by_name("nope"), Err(WhaError::InvalidParams(_))));
}
