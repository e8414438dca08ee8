use std::time::Instant;

use brauer_type::algebra::{symbolic_values, BrauerTypeAlgebra, ParamSet};
use brauer_type::connections::{assemble, ConnectionError, ConnectionFamily, ConnectionKind};
use brauer_type::exactnum::{ModP, PolyRing, Ring};
use brauer_type::refgroups::{build_dihedral, build_g_m1n, build_h3, build_type_a, EdgeReport, ReflectionGroup};
use brauer_type::reps::{algebra_regular, group_regular, lk_rep, MatrixRep};

fn groups() -> Vec<ReflectionGroup> {
    vec![
        build_dihedral(5).unwrap(),
        build_dihedral(6).unwrap(),
        build_type_a(4).unwrap(),
        build_h3().unwrap(),
        build_g_m1n(2, 3).unwrap(),
        build_g_m1n(3, 2).unwrap(),
    ]
}

fn symbolic_lk(g: &ReflectionGroup) -> (ParamSet, MatrixRep<PolyRing>) {
    let p = ParamSet::symbolic(g);
    let rep = lk_rep(g, &p.ring(), &p.symbolic_values());
    (p, rep)
}

fn assert_flat_invariant<R: Ring>(c: &ConnectionFamily<R>, g: &ReflectionGroup, rep: &MatrixRep<R>, what: &str) {
    let flat = c.check_flat();
    assert!(flat.flat(), "{} {}: {:?}", what, g.name(), flat.violations);
    let inv = c.check_invariant(g, rep);
    assert!(inv.invariant(), "{} {}: {:?}", what, g.name(), inv.violations);
}

#[test]
fn bmr_on_group_regular() {
    for g in groups() {
        let p = ParamSet::symbolic(&g);
        let ring = p.ring();
        let rep = group_regular(&g, &ring);
        let c = assemble(ConnectionKind::Bmr, &g, &p.symbolic_values(), &rep).unwrap();
        assert_flat_invariant(&c, &g, &rep, "bmr");
    }
}

#[test]
fn bmr_sums_pseudo_reflections_over_a_hyperplane() {
    let g = build_g_m1n(3, 2).unwrap();
    let p = ParamSet::symbolic(&g);
    let ring = p.ring();
    let v = p.symbolic_values();
    let rep = group_regular(&g, &ring);
    let c = assemble(ConnectionKind::Bmr, &g, &v, &rep).unwrap();
    let h = (0..g.num_hyperplanes())
        .find(|&i| g.reflections_at(i).len() == 2)
        .unwrap();
    let id = g.identity();
    let col = &c.op(h).unwrap()[id];
    assert_eq!(col.len(), 2);
    for &s in g.reflections_at(h) {
        assert_eq!(col[&s], v.mu[g.class_of(s).unwrap()]);
    }
}

#[test]
fn bgu_and_lk_on_lk_reps() {
    for g in groups() {
        let (p, rep) = symbolic_lk(&g);
        for kind in [ConnectionKind::Bgu, ConnectionKind::Lk] {
            let c = assemble(kind, &g, &p.symbolic_values(), &rep).unwrap();
            assert_flat_invariant(&c, &g, &rep, "lk");
        }
    }
}

#[test]
fn bgu_on_algebra_regular_reps() {
    let cases = [
        build_dihedral(5).unwrap(),
        build_dihedral(6).unwrap(),
        build_type_a(3).unwrap(),
        build_type_a(4).unwrap(),
    ];
    for g in cases {
        let p = ParamSet::symbolic(&g);
        let ring = p.ring();
        let vals = symbolic_values(p.vars(), &ring).unwrap();
        let alg = BrauerTypeAlgebra::new(&g, &p, ring, &vals).unwrap();
        let rep = algebra_regular(&alg, &g, (0..alg.basis().len()).map(|b| b.to_string()).collect());
        let c = assemble(ConnectionKind::Bgu, &g, alg.values(), &rep).unwrap();
        assert_flat_invariant(&c, &g, &rep, "regular");
    }
}

#[test]
fn bgu_on_h3_algebra_regular() {
    let g = build_h3().unwrap();
    let p = ParamSet::unit_mu(&g);
    let ring = p.ring();
    let vals = symbolic_values(p.vars(), &ring).unwrap();
    let t = Instant::now();
    let alg = BrauerTypeAlgebra::new(&g, &p, ring, &vals).unwrap();
    let rep = algebra_regular(&alg, &g, (0..alg.basis().len()).map(|b| b.to_string()).collect());
    let c = assemble(ConnectionKind::Bgu, &g, alg.values(), &rep).unwrap();
    assert_eq!(c.dim(), 1045);
    assert_flat_invariant(&c, &g, &rep, "regular");
    eprintln!("h3 regular connection: {:?}", t.elapsed());
}

#[test]
fn perturbed_alpha_breaks_flatness() {
    for g in groups() {
        let (p, rep) = symbolic_lk(&g);
        let ring = rep.ring().clone();
        let c = assemble(ConnectionKind::Lk, &g, &p.symbolic_values(), &rep).unwrap();
        // an off-diagonal entry of p_0 in a non-trivial spot
        let j = (1..g.num_hyperplanes())
            .find(|&j| EdgeReport::classify(&g).edge_of(0, j).is_some())
            .unwrap();
        let bad = c.perturbed(0, 0, j, &ring.one()).unwrap();
        let report = bad.check_flat();
        assert!(!report.flat(), "{}", g.name());
        assert!(report.violations.iter().all(|v| v.nonzero_entries > 0));
    }
}

#[test]
fn non_orbit_constant_tau_fails() {
    for g in [
        build_dihedral(5).unwrap(),
        build_h3().unwrap(),
        build_type_a(4).unwrap(),
    ] {
        let (p, rep) = symbolic_lk(&g);
        let ring = rep.ring().clone();
        let c = assemble(ConnectionKind::Lk, &g, &p.symbolic_values(), &rep).unwrap();
        let bad = c.perturbed(0, 0, 0, &ring.one()).unwrap();
        let flat = bad.check_flat().flat();
        let inv = bad.check_invariant(&g, &rep).invariant();
        assert!(!(flat && inv), "{}", g.name());
        assert!(!inv);
    }
}

#[test]
fn flatness_is_scale_free() {
    for g in groups() {
        let (p, rep) = symbolic_lk(&g);
        let ring = rep.ring().clone();
        let c = assemble(ConnectionKind::Bgu, &g, &p.symbolic_values(), &rep).unwrap();
        let three = ring.from_int(3);
        assert!(c.scaled(&three).check_flat().flat());
        let bad = c.perturbed(0, 0, 0, &ring.one()).unwrap();
        let (a, b) = (bad.check_flat(), bad.scaled(&three).check_flat());
        assert_eq!(a.violations.len(), b.violations.len());
    }
}

#[test]
fn swapped_coefficients_are_not_invariant() {
    let g = build_dihedral(5).unwrap();
    let f = ModP::new(1_000_003);
    let rep = group_regular(&g, &f);
    let p = ParamSet::unit_mu(&g);
    let v = p.evaluate(&f, &[("tau".to_string(), 5u64)].into()).unwrap();
    let c = assemble(ConnectionKind::Bmr, &g, &v, &rep).unwrap();
    assert!(c.check_invariant(&g, &rep).invariant());
    assert!(!c.swapped(0, 1).unwrap().check_invariant(&g, &rep).invariant());
}

#[test]
fn restrictions() {
    let g = build_h3().unwrap();
    let (p, rep) = symbolic_lk(&g);
    let c = assemble(ConnectionKind::Lk, &g, &p.symbolic_values(), &rep).unwrap();
    let all: Vec<usize> = (0..g.num_hyperplanes()).collect();
    let same = c.restrict(&g, &all).unwrap();
    assert_eq!(same.edges(), c.edges());
    assert!(all.iter().all(|&i| same.op(i) == c.op(i)));
    let five = EdgeReport::classify(&g)
        .edges()
        .iter()
        .find(|e| e.hyps.len() == 5)
        .unwrap()
        .hyps
        .clone();
    let sub = c.restrict(&g, &five).unwrap();
    assert_eq!(sub.edges().len(), 1);
    assert_eq!(sub.edges()[0].1, five);
    assert!(sub.check_flat().flat());
    assert_eq!(
        c.restrict(&g, &five[..2]).unwrap_err(),
        ConnectionError::NotClosed(five[2])
    );

    let a3 = build_type_a(4).unwrap();
    let pa = ParamSet::symbolic(&a3);
    let ring = pa.ring();
    let vals = symbolic_values(pa.vars(), &ring).unwrap();
    let alg = BrauerTypeAlgebra::new(&a3, &pa, ring, &vals).unwrap();
    let reg = algebra_regular(&alg, &a3, (0..alg.basis().len()).map(|b| b.to_string()).collect());
    let ca = assemble(ConnectionKind::Bgu, &a3, alg.values(), &reg).unwrap();
    let line = EdgeReport::classify(&a3)
        .edges()
        .iter()
        .find(|e| e.hyps.len() == 3)
        .unwrap()
        .hyps
        .clone();
    let sub = ca.restrict(&a3, &line).unwrap();
    assert!(sub.check_flat().flat());
}

#[test]
fn single_hyperplane_is_vacuously_flat() {
    let g = build_type_a(2).unwrap();
    assert_eq!(g.num_hyperplanes(), 1);
    let (p, rep) = symbolic_lk(&g);
    let c = assemble(ConnectionKind::Lk, &g, &p.symbolic_values(), &rep).unwrap();
    let r = c.check_flat();
    assert_eq!(r.edges_checked, 0);
    assert!(r.flat());
}
