use brauer_type::algebra::presentations::{def21, table1};
use brauer_type::algebra::{check_relations, symbolic_values, ParamValues, Probes, Regular, Variant};
use brauer_type::diagrams::{loop_class, BrauerAlgebra, CycloAlgebra};
use brauer_type::exactnum::{ParamPoly, PolyRing, Vars};

#[test]
fn brauer_diagrams_satisfy_table1() {
    let ring = PolyRing::new(Vars::new(&["tau"]));
    let tau = ring.var("tau").unwrap();
    for n in 2..=4 {
        let alg = BrauerAlgebra::new(n, ring.clone(), tau.clone()).unwrap();
        let rels = table1(n);
        let vals = symbolic_values(&rels.vars, &ring).unwrap();
        let report = check_relations(&Regular(&alg), &rels, &vals, &Probes::AllBasis).unwrap();
        assert!(report.passed(), "n={}: {:?}", n, report.failed_names());
    }
}

fn cyclo(m: u32, n: usize) -> (CycloAlgebra<PolyRing>, ParamValues<ParamPoly>) {
    let names: Vec<String> = (0..=m / 2).map(|c| format!("d{}", c)).collect();
    let ring = PolyRing::new(Vars::new(&names));
    let delta = names.iter().map(|x| ring.var(x).unwrap()).collect();
    let vals = (0..m)
        .map(|a| {
            (
                format!("delta{}", a),
                ring.var(&names[loop_class(a as i64, m) as usize]).unwrap(),
            )
        })
        .collect();
    (CycloAlgebra::new(m, n, ring, delta).unwrap(), vals)
}

#[test]
fn cyclotomic_diagrams_satisfy_corrected_presentation() {
    for (m, n) in [(2u32, 2usize), (3, 2), (2, 3)] {
        let (alg, vals) = cyclo(m, n);
        let rels = def21(m, n, Variant::Corrected);
        let report = check_relations(&Regular(&alg), &rels, &vals, &Probes::AllBasis).unwrap();
        assert!(report.passed(), "({},{}): {:?}", m, n, report.failed_names());
    }
}

#[test]
fn printed_relation_l_fails_in_diagrams() {
    let (alg, vals) = cyclo(2, 3);
    let rels = def21(2, 3, Variant::Printed);
    let report = check_relations(&Regular(&alg), &rels, &vals, &Probes::AllBasis).unwrap();
    let failed = report.failed_names();
    assert!(!failed.is_empty());
    assert!(failed.iter().all(|f| f.starts_with("l) i=1")), "{:?}", failed);
}
