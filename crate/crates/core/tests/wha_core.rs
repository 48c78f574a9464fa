use wha_lab::builders::{by_name, gpd, grp, pair, standard_examples};
use wha_lab::numerics::{q, vecops, QMatrix, Q};
use wha_lab::wha::WeakHopfAlgebra;
use wha_lab::WhaError;

fn ex(s: &str) -> WeakHopfAlgebra {
    by_name(s).unwrap()
}

#[test]
fn axioms_pass_on_group_and_pair() {
    assert!(grp("Z2").unwrap().verify_axioms().passed());
    let p = pair(2).unwrap();
    assert!(p.verify_axioms().passed());
    assert!(!p.is_hopf());
}

#[test]
fn zero_antipode_fails() {
    let a = grp("Z2").unwrap();
    let broken = WeakHopfAlgebra::from_parts_unchecked(a.core().clone(), QMatrix::zeros(2, 2));
    let rep = broken.verify_axioms();
    assert!(!rep.passed());
    assert!(!rep.get("antipode target").unwrap().passed);
    assert!(rep.get("associativity").unwrap().passed);
}

#[test]
fn dual_examples() {
    let f = grp("Z2").unwrap().dual();
    assert!(f.verify_axioms().passed());
    assert!(f.algebra().is_commutative());
    let p = pair(2).unwrap();
    let dd = p.dual().dual();
    assert_eq!(dd.mult(), p.mult());
    assert_eq!(dd.comult(), p.comult());
    assert_eq!(dd.antipode(), p.antipode());
    let d3 = pair(3).unwrap().dual();
    assert_eq!(d3.dim(), 9);
    assert!(d3.algebra().is_commutative());
    assert!(d3.verify_axioms().passed());
}

#[test]
fn counital_maps() {
    for a in [grp("Z2").unwrap(), pair(2).unwrap()] {
        assert_eq!(a.counital_target(a.unit()), a.unit());
        assert_eq!(a.counital_source(a.unit()), a.unit());
    }
    let g = grp("Z2").unwrap();
    for i in 0..2 {
        let e = g.basis(i);
        assert_eq!(g.counital_target(&e), vecops::scale(g.unit(), &g.eps(&e)));
    }
    // pair(2): basis order 0->0, 0->1, 1->0, 1->1; ε_t(i→j) = id_j
    let p = pair(2).unwrap();
    let id = |x: usize| p.basis(if x == 0 { 0 } else { 3 });
    assert_eq!(p.counital_target(&p.basis(1)), id(1));
    assert_eq!(p.counital_target(&p.basis(2)), id(0));
    assert_eq!(p.counital_source(&p.basis(1)), id(0));
}

#[test]
fn bases_dimensions() {
    assert_eq!(grp("S3").unwrap().d(), 1);
    assert_eq!(pair(3).unwrap().d(), 3);
    assert_eq!(pair(3).unwrap().source_basis().len(), 3);
    assert_eq!(gpd(2, "Z2").unwrap().d(), 2);
    assert!(gpd(2, "Z2").unwrap().bases_commute());
}

#[test]
fn minimal_subalgebra_examples() {
    assert_eq!(grp("S3").unwrap().minimal_subalgebra().len(), 1);
    assert_eq!(pair(2).unwrap().minimal_subalgebra().len(), 2);
    assert_eq!(ex("ds(grp(Z2),pair(2))").minimal_subalgebra().len(), 3);
}

#[test]
fn regularity() {
    assert!(grp("Z2").unwrap().is_regular());
    assert!(pair(3).unwrap().is_regular());
    for a in standard_examples() {
        assert!(a.is_regular(), "{}", a.label());
    }
}

#[test]
fn connectivity_examples() {
    let p = pair(2).unwrap().connectivity();
    assert!(p.connected);
    // A_s = A_t for groupoid algebras, so only the one-object case is coconnected
    assert!(!p.coconnected);
    assert!(!ex("ds(grp(Z2),grp(Z2))").connectivity().connected);
    assert!(grp("S3").unwrap().connectivity().biconnected);
    assert!(grp("S3").unwrap().dual().connectivity().biconnected);
}

#[test]
fn center_examples() {
    assert_eq!(pair(3).unwrap().center().len(), 1);
    assert_eq!(grp("S3").unwrap().center().len(), 3);
    let ds = ex("ds(grp(S3),pair(2))");
    assert_eq!(ds.center().len(), 4);
}

#[test]
fn antipode_recovery() {
    for name in ["grp(Z2)", "pair(2)", "gpd(2,Z2)", "dual(pair(2))"] {
        let a = ex(name);
        assert_eq!(&a.solve_antipode().unwrap(), a.antipode(), "{name}");
    }
}

#[test]
fn corrupted_comult_has_no_antipode() {
    let a = grp("Z2").unwrap();
    let mut comult = a.comult().clone();
    comult.add_to(1, 0, 0, &q(1));
    let core =
        wha_lab::WeakBialgebra::new("bad", a.mult().clone(), a.unit().to_vec(), comult, a.counit().to_vec()).unwrap();
    assert!(!core.verify_bialgebra_axioms().passed());
    assert_eq!(core.solve_antipode(), Err(WhaError::NoAntipode));
}

#[test]
fn grouplike_examples() {
    let g = grp("Z2").unwrap();
    assert!(g.is_grouplike(g.unit()));
    assert!(g.is_trivial(g.unit()).is_some());
    let x = g.basis(1);
    assert!(g.is_grouplike(&x));
    assert!(g.is_trivial(&x).is_none());

    let p = pair(2).unwrap();
    let y: Vec<Q> = vec![q(2), q(0), q(0), q(3)];
    let gl = p.trivial_grouplike(&y).unwrap();
    assert!(p.is_grouplike(&gl.element));
    assert!(p.is_trivial(&gl.element).is_some());
    assert_eq!(p.mul(&gl.element, &gl.inverse), p.unit());
}

#[test]
fn s_squared_examples() {
    for name in ["grp(S3)", "pair(2)"] {
        let a = ex(name);
        assert_eq!(a.s_squared(), QMatrix::identity(a.dim()));
    }
    for a in standard_examples() {
        assert!(a.s2_eigenvalues().iter().all(|z| z.re > 0.0 && z.im.abs() < 1e-9));
    }
}

#[test]
fn direct_sum_examples() {
    let a = ex("ds(grp(Z2),grp(Z2))");
    assert_eq!(a.dim(), 4);
    assert!(a.verify_axioms().passed());
    assert_eq!(ex("ds(pair(2),grp(Z3))").dim(), 7);
    assert!(!a.connectivity().connected);
}

#[test]
fn hopf_iff_one_dimensional_target() {
    for a in standard_examples() {
        assert_eq!(a.is_hopf(), a.d() == 1, "{}", a.label());
    }
}

#[test]
fn antipode_is_anti_homomorphism() {
    for a in standard_examples() {
        assert_eq!(a.anti_homomorphism_failure(), None, "{}", a.label());
    }
}

#[test]
fn counital_maps_idempotent_and_bases_commute() {
    for a in standard_examples() {
        let t = a.eps_t_matrix();
        let s = a.eps_s_matrix();
        assert_eq!(&t.mul(t), t);
        assert_eq!(&s.mul(s), s);
        assert!(a.bases_commute());
        assert_eq!(a.target_basis().len(), a.source_basis().len());
    }
}
