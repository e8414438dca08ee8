use brauer_type::algebra::presentations::{def21, def83};
use brauer_type::algebra::{
    check_relations, symbolic_values, Algebra, Gen, LinearModel, ParamSet, Probes, Rebind, Regular, Variant,
};
use brauer_type::exactnum::{Ring, SparseVecExt};
use brauer_type::refgroups::build_g_m1n;
use brauer_type::reps::lk_rep;
use brauer_type::theorem86::{
    compare, cyclo_model, engine_map, lk_delta_values, phi_images, phi_values, psi_images, ComparisonError,
};

const CASES: [(u32, usize); 3] = [(2, 2), (3, 2), (2, 3)];

#[test]
fn comparison_passes_on_small_cases() {
    for (m, n) in CASES.into_iter().chain([(4, 2), (3, 3)]) {
        let r = compare(m, n).unwrap();
        assert!(r.passed(), "G({},1,{}): {}", m, n, r.to_json());
        assert!(r.e0_nonzero);
        assert_eq!(r.phi_printed.failures.len(), 0);
    }
}

#[test]
fn corrected_loop_values_do_not_hold_in_diagrams() {
    // the diagram algebra sees e_1 t_1^a e_1 = delta_a e_1, the printed value
    for (m, n) in CASES {
        let r = compare(m, n).unwrap();
        let failed = r.phi_corrected.failed_names();
        assert!(!failed.is_empty());
        assert!(failed.iter().all(|f| f.starts_with("12) i=")), "{:?}", failed);
        assert!(!failed.iter().any(|f| f.starts_with("12) i=0")));
    }
}

#[test]
fn phi_psi_is_identity_on_generators() {
    for (m, n) in CASES {
        let alg = cyclo_model(m, n).unwrap();
        let regular = Regular(&alg);
        let phi = Rebind::new(&regular, phi_images(m, n).unwrap());
        let psi = psi_images(m, n).unwrap();
        let composed = Rebind::new(&phi, psi.into_iter().map(|(k, v)| (k, Some(v))).collect());
        let unit = alg.unit();
        for j in 1..=n {
            let want = regular.act_word(&[Gen::T(j)], &unit).unwrap();
            let got = composed.act_word(&[Gen::T(j)], &unit).unwrap();
            assert_eq!(want, got, "({},{}) t{}", m, n, j);
        }
    }
    assert_eq!(
        psi_images(2, 3).unwrap()[&Gen::T(3)],
        [Gen::S(2), Gen::S(1), Gen::S(0), Gen::S(1), Gen::S(2)]
    );
}

#[test]
fn wrong_psi_is_detected() {
    let (m, n) = (2, 2);
    let alg = cyclo_model(m, n).unwrap();
    let regular = Regular(&alg);
    let phi = Rebind::new(&regular, phi_images(m, n).unwrap());
    let mut psi = psi_images(m, n).unwrap();
    psi.insert(Gen::T(2), vec![Gen::S(0)]);
    let composed = Rebind::new(&phi, psi.into_iter().map(|(k, v)| (k, Some(v))).collect());
    let ring = regular.ring();
    let unit = alg.unit();
    let mut diff = regular.act_word(&[Gen::T(2)], &unit).unwrap();
    diff.add_scaled(
        ring,
        &ring.neg(&ring.one()),
        &composed.act_word(&[Gen::T(2)], &unit).unwrap(),
    );
    assert!(!diff.is_empty());
}

#[test]
fn phi_kills_e0_only() {
    let phi = phi_images(3, 2).unwrap();
    assert_eq!(phi[&Gen::E(0)], None);
    assert_eq!(phi[&Gen::S(0)], Some(vec![Gen::T(1)]));
    assert_eq!(phi[&Gen::E(1)], Some(vec![Gen::E(1)]));
    let alg = cyclo_model(3, 2).unwrap();
    let vals = phi_values(&alg).unwrap();
    assert_eq!(vals["mu1"], vals["mu2"]);
    assert_eq!(vals["tau1"], alg.ring().var("d0").unwrap());
}

#[test]
fn lk_needs_unit_mu_and_forced_loop_values() {
    let (m, n) = (2u32, 3usize);
    let g = build_g_m1n(m, n).unwrap();
    let params = ParamSet::symbolic(&g);
    let ring = params.ring();
    let vals = symbolic_values(params.vars(), &ring).unwrap();
    let ev = params.evaluate(&ring, &vals).unwrap();
    let lk = lk_rep(&g, &ring, &ev);
    let in_lk = Rebind::new(&lk, engine_map(&g));
    // the corrected B'_G list holds for symbolic mu
    let rep = check_relations(
        &in_lk,
        &def83(m, n, Variant::Corrected).unwrap(),
        &vals,
        &Probes::AllBasis,
    )
    .unwrap();
    assert!(rep.passed(), "{:?}", rep.failed_names());
    // through Psi, e_1 e_2 e_1 = mu^2 e_1, so the diagram relations need mu = 1
    let psi = Rebind::new(
        &in_lk,
        psi_images(m, n)
            .unwrap()
            .into_iter()
            .map(|(k, v)| (k, Some(v)))
            .collect(),
    );
    let deltas = lk_delta_values(m, &ring, &vals).unwrap();
    let rep = check_relations(&psi, &def21(m, n, Variant::Corrected), &deltas, &Probes::AllBasis).unwrap();
    let failed = rep.failed_names();
    assert!(failed.iter().any(|f| f.starts_with("n) 1,2")), "{:?}", failed);
    // printed loop values delta_a = mu_a fail in p)
    let mut printed = deltas.clone();
    printed.insert("delta1".into(), vals["mu1"].clone());
    let mut unit_vals = vals.clone();
    unit_vals.insert("mu".into(), ring.one());
    let ev1 = params.evaluate(&ring, &unit_vals).unwrap();
    let lk1 = lk_rep(&g, &ring, &ev1);
    let in_lk1 = Rebind::new(&lk1, engine_map(&g));
    let psi1 = Rebind::new(
        &in_lk1,
        psi_images(m, n)
            .unwrap()
            .into_iter()
            .map(|(k, v)| (k, Some(v)))
            .collect(),
    );
    let good = check_relations(
        &psi1,
        &def21(m, n, Variant::Corrected),
        &lk_delta_values(m, &ring, &unit_vals).unwrap(),
        &Probes::AllBasis,
    )
    .unwrap();
    assert!(good.passed(), "{:?}", good.failed_names());
    printed.insert("delta0".into(), vals["tau1"].clone());
    let bad = check_relations(&psi1, &def21(m, n, Variant::Corrected), &printed, &Probes::AllBasis).unwrap();
    assert!(bad
        .failed_names()
        .iter()
        .all(|f| f.starts_with("p)") || f.starts_with("n)") || f.starts_with("m)")));
    assert!(bad.failed_names().iter().any(|f| f.starts_with("p)")));
}

#[test]
fn f_elements_follow_the_labels() {
    let r = compare(2, 3).unwrap();
    let f = &r.f_elements;
    assert!(f.conflicts.is_empty());
    assert!(f.labels_natural);
    assert!(f.conjugates_checked > 0);
    let word = |h: &str| f.words.iter().find(|(n, _)| n == h).map(|(_, w)| w.clone()).unwrap();
    assert_eq!(word("H1"), "E0");
    assert_eq!(word("H1,2;0"), "E1");
    assert_eq!(word("H2,3;0"), "E2");
    assert_eq!(word("H2"), "S1 E0 S1");
    assert_eq!(f.words.len(), 9);
}

#[test]
fn rank_one_is_rejected() {
    assert!(matches!(phi_images(1, 2), Err(ComparisonError::Unsupported(1, 2))));
    assert!(matches!(compare(2, 1), Err(ComparisonError::Unsupported(2, 1))));
}
