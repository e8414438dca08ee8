use std::collections::HashMap;

use brauer_type::algebra::presentations::{def81_even, def81_odd, def82};
use brauer_type::algebra::{
    check_relations, symbolic_values, BrauerTypeAlgebra, Gen, ParamSet, Probes, Rebind, RelationList, RelationReport,
    Variant,
};
use brauer_type::exactnum::PolyRing;
use brauer_type::refgroups::{build_coxeter, build_dihedral, build_h3, ReflectionGroup};

/// Evaluates a generator presentation inside the engine table with
/// S_k the k-th simple reflection and E_k its idempotent.
fn check_in_engine(g: &ReflectionGroup, rels: &RelationList) -> RelationReport {
    let p = ParamSet::symbolic(g);
    let ring: PolyRing = p.ring();
    let vals = symbolic_values(p.vars(), &ring).unwrap();
    let alg = BrauerTypeAlgebra::new(g, &p, ring, &vals).unwrap();
    let map: HashMap<Gen, Option<Vec<Gen>>> = g
        .generators()
        .iter()
        .enumerate()
        .flat_map(|(k, &s)| {
            [
                (Gen::S(k), Some(vec![Gen::W(s)])),
                (Gen::E(k), Some(vec![Gen::E(g.hyperplane_of(s).unwrap())])),
            ]
        })
        .collect();
    let model = Rebind::new(&alg, map);
    check_relations(&model, rels, &vals, &Probes::AllBasis).unwrap()
}

#[test]
fn odd_dihedral_presentation_holds() {
    for m in [3u32, 5, 7] {
        let g = build_dihedral(m).unwrap();
        let rep = check_in_engine(&g, &def81_odd(m).unwrap());
        assert!(rep.passed(), "m={} {:?}", m, rep.failed_names());
    }
}

#[test]
fn even_dihedral_presentation() {
    for m in [4u32, 6, 8] {
        let g = build_dihedral(m).unwrap();
        let rep = check_in_engine(&g, &def81_even(m, Variant::Corrected).unwrap());
        assert!(rep.passed(), "m={} {:?}", m, rep.failed_names());
        let printed = check_in_engine(&g, &def81_even(m, Variant::Printed).unwrap());
        let k = m / 2;
        let mut want = vec![format!("5) i={}", k), "6) i=1".to_string()];
        want.sort();
        let short: Vec<String> = printed
            .failed_names()
            .iter()
            .map(|n| n.split(':').next().unwrap().to_string())
            .collect();
        assert_eq!(short, want, "m={}", m);
    }
}

#[test]
fn coxeter_presentation_holds() {
    let groups = [
        build_coxeter(&[vec![1, 5], vec![5, 1]], 200).unwrap(),
        build_coxeter(&[vec![1, 6], vec![6, 1]], 200).unwrap(),
        build_coxeter(&[vec![1, 3, 2], vec![3, 1, 3], vec![2, 3, 1]], 200).unwrap(),
        build_h3().unwrap(),
    ];
    for g in &groups {
        let p = ParamSet::symbolic(g);
        let rep = check_in_engine(g, &def82(g, &p, Variant::Corrected));
        assert!(rep.passed(), "{} {:?}", g.name(), rep.failed_names());
        // printed 9) at l = k: E_i s E_i with s fixing H_i is tau_i E_i
        let printed = check_in_engine(g, &def82(g, &p, Variant::Printed));
        let even_edge = g.name() == "Coxeter[6]";
        assert_eq!(printed.passed(), !even_edge, "{}", g.name());
        for name in printed.failed_names() {
            assert!(name.starts_with("9)"), "{} {}", g.name(), name);
        }
    }
}
