use brauer_type::algebra::{
    coxeter_labels, g_m1n_labels, mul, BrauerTypeAlgebra, Gen, LabelError, LabelRule, ParamSet, ParamValues,
};
use brauer_type::exactnum::ModP;
use brauer_type::refgroups::{build_dihedral, build_g_m1n, build_h3, build_type_a, ReflectionGroup};

#[test]
fn g_m1n_closure_is_bijective_and_uses_every_rule() {
    for (m, n) in [(2u32, 2usize), (3, 2), (2, 3), (3, 3), (2, 4)] {
        let g = build_g_m1n(m, n).unwrap();
        let rep = g_m1n_labels(&g).unwrap();
        assert_eq!(rep.labels.len(), n + m as usize * n * (n - 1) / 2);
        assert!(rep.natural, "({m},{n})");
        assert_eq!(rep.elements_checked, g.order());
        // (i) needs a swap disjoint from a pair, so four coordinates
        if n >= 3 {
            for r in LabelRule::PROOF_RULES
                .into_iter()
                .filter(|&r| n >= 4 || r != LabelRule::I)
            {
                assert!(
                    rep.rule_instances.get(&r).copied().unwrap_or(0) > 0,
                    "({m},{n}) rule {:?}",
                    r
                );
            }
        }
    }
}

/// Labels by the conjugates w e_i w^-1 inside the algebra, moved by
/// conjugation with the generators.
fn conjugate_labels(g: &ReflectionGroup) -> Result<Vec<brauer_type::exactnum::SparseVec<u64>>, LabelError> {
    let p = ParamSet::unit_mu(g);
    let vals: ParamValues<u64> = p.vars().names().iter().map(|n| (n.clone(), 5)).collect();
    let alg = BrauerTypeAlgebra::new(g, &p, ModP::new(1_000_003), &vals).unwrap();
    let gens = g.generators().to_vec();
    let base: Vec<_> = gens
        .iter()
        .map(|&s| alg.normal_form(&[Gen::E(g.hyperplane_of(s).unwrap())]).unwrap())
        .collect();
    let act = |k: usize, x: &brauer_type::exactnum::SparseVec<u64>| {
        let s = alg.normal_form(&[Gen::W(gens[k])]).unwrap();
        mul(&alg, &mul(&alg, &s, x), &s)
    };
    let labels = coxeter_labels(g, &base, act)?;
    assert_eq!(labels.len(), g.num_hyperplanes());
    for (h, l) in labels.iter().enumerate() {
        assert_eq!(*l, alg.normal_form(&[Gen::E(h)]).unwrap());
    }
    Ok(labels)
}

#[test]
fn coxeter_closure_on_conjugates() {
    for g in [
        build_dihedral(5).unwrap(),
        build_dihedral(6).unwrap(),
        build_type_a(4).unwrap(),
        build_h3().unwrap(),
    ] {
        conjugate_labels(&g).unwrap();
    }
}

#[test]
fn wrong_base_is_rejected() {
    let g = build_dihedral(5).unwrap();
    // every generator labeled by the same hyperplane index: (1) fails
    let err = coxeter_labels(&g, &[0usize, 0], |k, &h| g.act_hyp(g.generators()[k], h)).unwrap_err();
    assert!(matches!(err, LabelError::Hypothesis(_)), "{err}");
}
