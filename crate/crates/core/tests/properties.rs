//! Property tests for the library-wide invariants.

use proptest::prelude::*;
use wha_lab::builders::{groupoid_algebra_unchecked, FiniteGroup, FiniteGroupoid};
use wha_lab::integrals::{canonical_integral, haar_integral, integral_space, verify_radford, Side};
use wha_lab::numerics::{
    eig_decompose, format_q, parse_q, perron, q_nullspace, q_solve, qf, span, vecops, CMatrix, QMatrix, Tensor3,
    Tolerances, C64, Q,
};
use wha_lab::repcat::RepData;
use wha_lab::report::check_all;
use wha_lab::theorems::class_equation;
use wha_lab::{Config, WeakHopfAlgebra};

fn tol() -> Tolerances {
    Tolerances::default()
}

fn small_q() -> impl Strategy<Value = Q> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| qf(n, d))
}

fn q_vec(n: usize) -> impl Strategy<Value = Vec<Q>> {
    prop::collection::vec(small_q(), n)
}

fn int_matrix(r: usize, c: usize, lo: i64, hi: i64) -> impl Strategy<Value = QMatrix> {
    prop::collection::vec(lo..=hi, r * c)
        .prop_map(move |v| QMatrix::from_fn(r, c, |i, j| Q::from_integer(v[i * c + j].into())))
}

const GROUPS: [&str; 4] = ["Z1", "Z2", "Z3", "S3"];

/// Connected component: object count and vertex group.
fn component() -> impl Strategy<Value = (usize, &'static str)> {
    (1usize..=3, prop::sample::select(&GROUPS[..]))
        .prop_filter("keep dimensions small", |(n, g)| n * n * FiniteGroup::by_name(g).unwrap().order() <= 18)
}

fn groupoid_of(parts: &[(usize, &str)]) -> FiniteGroupoid {
    let conn =
        |(n, g): &(usize, &str)| FiniteGroupoid::connected_groupoid(*n, &FiniteGroup::by_name(g).unwrap()).unwrap();
    parts[1..].iter().fold(conn(&parts[0]), |acc, p| FiniteGroupoid::disjoint_union(&acc, &conn(p)).unwrap())
}

fn groupoid() -> impl Strategy<Value = Vec<(usize, &'static str)>> {
    prop::collection::vec(component(), 1..=2).prop_filter("total dimension at most 24", |parts| {
        parts.iter().map(|(n, g)| n * n * FiniteGroup::by_name(g).unwrap().order()).sum::<usize>() <= 24
    })
}

/// A groupoid algebra or its dual.
fn algebra() -> impl Strategy<Value = WeakHopfAlgebra> {
    (groupoid(), any::<bool>()).prop_map(|(parts, dual)| {
        let a = groupoid_algebra_unchecked(&groupoid_of(&parts), "random");
        if dual {
            a.dual()
        } else {
            a
        }
    })
}

fn connected_algebra() -> impl Strategy<Value = WeakHopfAlgebra> {
    component().prop_map(|p| groupoid_algebra_unchecked(&groupoid_of(&[p]), "random"))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_format_parse_round_trip(n in any::<i64>(), d in 1i64..=i64::MAX) {
        let x = qf(n, d);
        prop_assert_eq!(parse_q(&format_q(&x)).unwrap(), x);
    }

    #[test]
    fn q_solve_satisfies_system(a in int_matrix(4, 3, -5, 5), x in q_vec(3)) {
        let b = a.mul_vec(&x);
        let y = q_solve(&a, &b).unwrap();
        prop_assert_eq!(a.mul_vec(&y), b);
    }

    #[test]
    fn q_nullspace_is_kernel_with_full_nullity(a in int_matrix(3, 5, -3, 3)) {
        let ker = q_nullspace(&a);
        for v in &ker {
            prop_assert!(vecops::is_zero(&a.mul_vec(v)));
        }
        prop_assert_eq!(ker.len() + a.rank(), 5);
    }

    #[test]
    fn tensor_permutations_compose(v in prop::collection::vec(small_q(), 24)) {
        let t = Tensor3::from_fn(2, 3, 4, |i, j, k| v[(i * 3 + j) * 4 + k].clone());
        let p = [1, 2, 0];
        let back = t.permute(p).permute(p).permute(p);
        prop_assert_eq!(back, t.clone());
        let s = t.permute([1, 0, 2]);
        prop_assert_eq!(s.get(2, 1, 3), t.get(1, 2, 3));
    }

    #[test]
    fn perron_dominates_spectrum(m in int_matrix(4, 4, 1, 9)) {
        let (r, v) = perron(&m, &tol()).unwrap();
        prop_assert!(v.iter().all(|x| *x > 0.0));
        for mu in CMatrix::from_q(&m).eigenvalues() {
            prop_assert!(r >= mu.norm() - 10.0 * tol().zero * r.max(1.0));
        }
    }

    #[test]
    fn spectral_projections_resolve_identity(m in int_matrix(4, 4, -4, 4)) {
        let sym = m.add(&m.transpose());
        let c = CMatrix::from_q(&sym);
        let Ok(clusters) = eig_decompose(&c, &tol()) else { return Ok(()) };
        let mut sum = CMatrix::zeros(4, 4).0;
        for (i, p) in clusters.iter().enumerate() {
            let pm = &p.projection.0;
            sum += pm;
            for q in &clusters[i + 1..] {
                prop_assert!((pm * &q.projection.0).camax() < 1e-8);
            }
            prop_assert!((pm * pm - pm).camax() < 1e-8);
        }
        prop_assert!((sum - CMatrix::identity(4).0).camax() < 1e-8);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn builder_output_passes_axioms(a in algebra()) {
        prop_assert!(a.verify_axioms().passed());
        prop_assert!(a.anti_homomorphism_failure().is_none());
    }

    #[test]
    fn counital_maps_idempotent_and_commuting(a in algebra()) {
        let (et, es) = (a.eps_t_matrix(), a.eps_s_matrix());
        prop_assert_eq!(&et.mul(et), et);
        prop_assert_eq!(&es.mul(es), es);
        prop_assert!(a.bases_commute());
        prop_assert_eq!(a.target_basis().len(), a.source_basis().len());
    }

    #[test]
    fn double_dual_is_identity(a in algebra()) {
        let dd = a.dual().dual();
        prop_assert_eq!(dd.mult(), a.mult());
        prop_assert_eq!(dd.comult(), a.comult());
        prop_assert_eq!(dd.unit(), a.unit());
        prop_assert_eq!(dd.counit(), a.counit());
        prop_assert_eq!(dd.antipode(), a.antipode());
    }

    #[test]
    fn hopf_iff_trivial_target(a in algebra()) {
        prop_assert_eq!(a.is_hopf(), a.d() == 1);
    }

    #[test]
    fn groupoid_algebra_shape(parts in groupoid()) {
        let g = groupoid_of(&parts);
        let a = groupoid_algebra_unchecked(&g, "random");
        prop_assert_eq!(a.d(), g.objects().len());
        prop_assert_eq!(a.connectivity().connected, g.is_connected());
        prop_assert_eq!(a.s_squared(), QMatrix::identity(a.dim()));
    }

    #[test]
    fn disjoint_union_is_direct_sum(p in component(), q in component()) {
        let (g1, g2) = (groupoid_of(&[p]), groupoid_of(&[q]));
        let u = groupoid_algebra_unchecked(&FiniteGroupoid::disjoint_union(&g1, &g2).unwrap(), "u");
        let s = groupoid_algebra_unchecked(&g1, "a").direct_sum(&groupoid_algebra_unchecked(&g2, "b"));
        prop_assert_eq!(u.mult(), s.mult());
        prop_assert_eq!(u.comult(), s.comult());
        prop_assert_eq!(u.antipode(), s.antipode());
    }

    #[test]
    fn antipode_reverses_products(a in algebra().prop_flat_map(|a| { let n = a.dim(); (Just(a), q_vec(n), q_vec(n)) })) {
        let (a, x, y) = a;
        prop_assert_eq!(a.s(&a.mul(&x, &y)), a.mul(&a.s(&y), &a.s(&x)));
    }

    #[test]
    fn trivial_grouplikes_from_source_elements(
        (a, c) in algebra().prop_flat_map(|a| { let k = a.source_basis().len(); (Just(a), q_vec(k)) })
    ) {
        let y = vecops::combine(&c, a.source_basis(), a.dim());
        prop_assume!(a.algebra().inverse(&y).is_some());
        let g = a.trivial_grouplike(&y).unwrap();
        prop_assert!(a.is_grouplike(&g.element));
        let w = a.is_trivial(&g.element);
        prop_assert!(w.is_some());
        prop_assert_eq!(a.trivial_grouplike(&w.unwrap()).unwrap().element, g.element);
    }

    #[test]
    fn canonical_integral_is_left_integral_of_dual(a in algebra()) {
        let lambda = canonical_integral(&a);
        let space = integral_space(a.dual_ref(), Side::Left).unwrap();
        prop_assert!(span::contains(&space.basis, &lambda));
    }

    #[test]
    fn haar_integral_properties(a in algebra()) {
        let h = haar_integral(&a).unwrap().expect("groupoid algebras are semisimple");
        prop_assert_eq!(a.counital_target(&h), a.unit().to_vec());
        prop_assert_eq!(a.s(&h), h);
    }

    #[test]
    fn radford_holds(a in algebra(), seed in any::<u64>()) {
        prop_assert!(verify_radford(&a, seed).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn representation_invariants(a in connected_algebra(), seed in any::<u64>()) {
        let rep = RepData::new(&a, &tol(), seed).unwrap();
        let dims: usize = rep.wedderburn.blocks.iter().map(|b| b.dim_v * b.dim_v).sum();
        prop_assert_eq!(dims, a.dim());
        prop_assert!(rep.fusion.checks().passed());
        prop_assert!(rep.fp_multiplicative);
        let f = &rep.dims.f;
        for (i, j) in rep.fusion.star.iter().enumerate() {
            prop_assert!((f[i] - f[*j]).abs() < 1e-9);
        }
        let dim_a = wha_lab::numerics::rational::to_f64(&rep.dims.dim_a);
        prop_assert!(dim_a <= rep.dims.fp_dim_a + 1e-9);
    }

    #[test]
    fn wedderburn_is_seed_independent(a in connected_algebra(), s1 in any::<u64>(), s2 in any::<u64>()) {
        let w1 = RepData::new(&a, &tol(), s1).unwrap();
        let w2 = RepData::new(&a, &tol(), s2).unwrap();
        prop_assert_eq!(&w1.fusion.n, &w2.fusion.n);
        let dv = |r: &RepData| r.wedderburn.blocks.iter().map(|b| b.dim_v).collect::<Vec<_>>();
        prop_assert_eq!(dv(&w1), dv(&w2));
    }

    #[test]
    fn class_equation_sum_any_seed(a in connected_algebra(), seed in any::<u64>()) {
        let rep = RepData::new(&a, &tol(), seed).unwrap();
        let r = class_equation(&a, &rep, &tol(), seed).unwrap();
        let total: C64 = r.terms.iter().map(|t| t.n).sum();
        prop_assert!((total.re - r.dim_a).abs() < 1e-8 && total.im.abs() < 1e-8);
        prop_assert!(r.seed_independent);
    }

}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn check_all_deterministic(a in algebra(), seed in any::<u64>()) {
        let cfg = Config { seed, ..Config::default() };
        let r1 = check_all(&a, &cfg).unwrap();
        let r2 = check_all(&a, &cfg).unwrap();
        prop_assert!(r1.passed(), "{}", r1.to_text());
        prop_assert_eq!(r1.to_json(), r2.to_json());
    }
}
