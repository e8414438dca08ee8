use brauer_type::algebra::presentations::def11;
use brauer_type::algebra::{check_relations, symbolic_values, ParamSet, ParamValues, Probes};
use brauer_type::exactnum::{ModP, ParamPoly, PolyRing, Ring};
use brauer_type::refgroups::{build_dihedral, build_g_m1n, build_h3, build_type_a, ReflectionGroup};
use brauer_type::reps::{
    generated_algebra_dim, h3_induced_rep, h3_rho4, lk_alpha, lk_blocks, lk_rep, m_matrix, H3Data, MatrixRep,
};

fn supported_groups() -> Vec<ReflectionGroup> {
    let mut out: Vec<ReflectionGroup> = (3..=8).map(|m| build_dihedral(m).unwrap()).collect();
    out.push(build_type_a(3).unwrap());
    out.push(build_type_a(4).unwrap());
    out.push(build_h3().unwrap());
    for (m, n) in [(2, 2), (3, 2), (4, 2), (2, 3), (3, 3)] {
        out.push(build_g_m1n(m, n).unwrap());
    }
    out
}

fn symbolic(g: &ReflectionGroup) -> (ParamSet, PolyRing, ParamValues<ParamPoly>) {
    let p = ParamSet::symbolic(g);
    let ring = p.ring();
    let vals = symbolic_values(p.vars(), &ring).unwrap();
    (p, ring, vals)
}

#[test]
fn lk_rep_satisfies_definition_relations() {
    for g in supported_groups() {
        let (p, ring, vals) = symbolic(&g);
        let rep = lk_rep(&g, &ring, &p.symbolic_values());
        let report = check_relations(&rep, &def11(&g, &p), &vals, &Probes::AllBasis).unwrap();
        assert!(report.passed(), "{}: {:?}", g.name(), report.failed_names());
        assert!(report.unsupported.is_empty());
    }
}

#[test]
fn wrong_tau_breaks_relation_two() {
    let g = build_dihedral(5).unwrap();
    let (p, ring, mut vals) = symbolic(&g);
    let rep = lk_rep(&g, &ring, &p.symbolic_values());
    let tau = vals["tau"].clone();
    vals.insert("tau".into(), ring.sub(&tau, &ring.one()));
    let report = check_relations(&rep, &def11(&g, &p), &vals, &Probes::AllBasis).unwrap();
    let names = report.failed_names();
    assert!(names.iter().any(|n| n.starts_with("(2)")), "{:?}", names);
}

#[test]
fn lk_blocks_follow_orbits() {
    let sizes = |g: &ReflectionGroup| {
        let (p, ring, _) = symbolic(g);
        let rep = lk_rep(g, &ring, &p.symbolic_values());
        let mut s: Vec<usize> = lk_blocks(&rep, g).unwrap().iter().map(|(k, _)| k.len()).collect();
        s.sort();
        s
    };
    assert_eq!(sizes(&build_dihedral(6).unwrap()), vec![3, 3]);
    assert_eq!(sizes(&build_dihedral(5).unwrap()), vec![5]);
    assert_eq!(sizes(&build_g_m1n(2, 2).unwrap()), vec![2, 2]);
    assert_eq!(sizes(&build_g_m1n(3, 3).unwrap()), vec![3, 9]);
}

#[test]
fn lk_weights_count_conjugating_reflections() {
    for g in [
        build_dihedral(5).unwrap(),
        build_dihedral(6).unwrap(),
        build_type_a(4).unwrap(),
        build_h3().unwrap(),
    ] {
        let p = ParamSet::unit_mu(&g);
        let ring = p.ring();
        let v = p.symbolic_values();
        let refl = |h: usize| g.reflections_at(h)[0];
        for i in 0..g.num_hyperplanes() {
            for j in 0..g.num_hyperplanes() {
                if i == j {
                    continue;
                }
                let count = g
                    .reflections()
                    .iter()
                    .filter(|&&r| g.mul_all(&[r, refl(j), r]) == refl(i))
                    .count();
                assert_eq!(
                    lk_alpha(&g, &ring, &v, i, j),
                    ring.from_int(count as i64),
                    "{} {} {}",
                    g.name(),
                    i,
                    j
                );
            }
        }
    }
}

fn tau_ring() -> (PolyRing, ParamPoly) {
    let p = ParamSet::unit_mu(&build_dihedral(3).unwrap());
    let ring = p.ring();
    let tau = ring.var("tau").unwrap();
    (ring, tau)
}

fn h3_suite(rep: &MatrixRep<PolyRing>, g: &ReflectionGroup) {
    let p = ParamSet::unit_mu(g);
    let vals = symbolic_values(p.vars(), rep.ring()).unwrap();
    let report = check_relations(rep, &def11(g, &p), &vals, &Probes::AllBasis).unwrap();
    assert!(report.passed(), "{:?}", report.failed_names());
}

#[test]
fn h3_induced_representations() {
    let g = build_h3().unwrap();
    let data = H3Data::new(&g).unwrap();
    let (ring, tau) = tau_ring();
    let f = ModP::new(1_000_003);
    let mut signatures = Vec::new();
    for alpha in 0..4 {
        let rep = h3_induced_rep(&g, &data, alpha, &ring, &tau).unwrap();
        h3_suite(&rep, &g);
        let m = m_matrix(&rep).unwrap();
        for (i, row) in m.entries.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if i == j {
                    assert_eq!(*x, tau);
                } else {
                    let c = x.as_constant().expect("constant off the diagonal");
                    let allowed = [-1, 0, 1].map(brauer_type::exactnum::int);
                    assert!(allowed.contains(&c));
                    if alpha == 0 && !data.perpendicular(i, j) {
                        assert_eq!(c, brauer_type::exactnum::int(1));
                    }
                }
            }
        }
        let coeffs = m.det.univariate_coeffs(0).unwrap();
        assert_eq!(coeffs.len(), 16, "alpha={} det={}", alpha, m.det);
        assert_eq!(coeffs[15], brauer_type::exactnum::int(1));
        // at tau = 7 the generated algebra is all of End(V)
        let rep7 = h3_induced_rep(&g, &data, alpha, &f, &7).unwrap();
        let gens: Vec<_> = [data.s0, data.s1, data.s2]
            .iter()
            .map(|&s| rep7.group_op(s).clone())
            .chain([rep7.idem_op(data.h0).unwrap().clone()])
            .collect();
        assert_eq!(generated_algebra_dim(&f, &gens, 15), 225, "alpha={}", alpha);
        signatures.push((data.sigma(alpha, data.s2), data.sigma(alpha, data.c)));
    }
    signatures.sort();
    signatures.dedup();
    assert_eq!(signatures.len(), 4);
}

#[test]
fn h3_rho4_matrix_and_determinant() {
    let g = build_h3().unwrap();
    let data = H3Data::new(&g).unwrap();
    let (ring, tau) = tau_ring();
    let rep = h3_rho4(&g, &data, &ring, &tau);
    assert_eq!(rep.dim(), 5);
    h3_suite(&rep, &g);
    let m = m_matrix(&rep).unwrap();
    let t1 = ring.sub(&tau, &ring.one());
    let want = ring.mul(&ring.pow(&t1, 4), &ring.add(&tau, &ring.from_int(4)));
    assert_eq!(m.det, want);
    let f = ModP::new(1_000_003);
    for (t, want_dim) in [(7u64, 25usize), (1, 24)] {
        let r = h3_rho4(&g, &data, &f, &t);
        let gens: Vec<_> = [data.s0, data.s1, data.s2]
            .iter()
            .map(|&s| r.group_op(s).clone())
            .chain([r.idem_op(data.h0).unwrap().clone()])
            .collect();
        let d = generated_algebra_dim(&f, &gens, 5);
        if t == 7 {
            assert_eq!(d, want_dim);
        } else {
            assert!(d < 25, "tau=1 gives {}", d);
        }
    }
}
