//! Relation lists for every presentation handled here, expanded from the
//! alternating-word notation `[S_i S_j ...]_k`.
//!
//! The `printed` variants reproduce the relations as originally stated,
//! index ranges included. Where a printed relation contradicts the others,
//! a `corrected` variant carries the repaired form; the tests record which
//! printed instances fail.

use serde::Serialize;
use thiserror::Error;

use super::params::ParamSet;
use super::relations::{Gen, RelationList, Word};
use crate::exactnum::{int, Vars};
use crate::refgroups::{
    build_coxeter, build_dihedral, build_g_m1n, EdgeReport, GroupError, GroupKind, ReflectionGroup,
};

#[derive(Debug, Error)]
pub enum PresentationError {
    #[error("unsupported parameters: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Which version of a presentation to emit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Variant {
    Printed,
    Corrected,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PresentationKind {
    /// Dihedral presentation on S0, S1, E0, E1 (m odd).
    Def81Odd(u32),
    /// Dihedral presentation on S0, S1, E0, E1 (m even).
    Def81Even(u32, Variant),
    /// Presentation attached to a Coxeter matrix; nodes are 0-based.
    Def82(Vec<Vec<u32>>, Variant),
    /// Presentation of type G(m,1,n) on S0..S_{n-1}, E0..E_{n-1}.
    Def83(u32, usize, Variant),
    /// The Brauer algebra B_n on s_1..s_{n-1}, e_1..e_{n-1}.
    Table1(usize),
    /// Simply laced Brauer algebra of a graph given by adjacency.
    Table2(Vec<Vec<bool>>),
    /// The cyclotomic Brauer algebra on s_i, e_i (1..n-1) and t_j (1..n).
    Def21(u32, usize, Variant),
}

pub fn presentation(kind: &PresentationKind) -> Result<RelationList, PresentationError> {
    match kind {
        PresentationKind::Def81Odd(m) => def81_odd(*m),
        PresentationKind::Def81Even(m, v) => def81_even(*m, *v),
        PresentationKind::Def82(matrix, v) => {
            let g = build_coxeter(matrix, 5000)?;
            Ok(def82(&g, &ParamSet::symbolic(&g), *v))
        }
        PresentationKind::Def83(m, n, v) => def83(*m, *n, *v),
        PresentationKind::Table1(n) => Ok(table1(*n)),
        PresentationKind::Table2(adj) => Ok(table2(adj)),
        PresentationKind::Def21(m, n, v) => Ok(def21(*m, *n, *v)),
    }
}

/// `[a b a ...]` of the given length.
pub fn alt(a: Gen, b: Gen, len: usize) -> Word {
    (0..len).map(|k| if k % 2 == 0 { a } else { b }).collect()
}

fn cat(parts: &[&[Gen]]) -> Word {
    parts.concat()
}

fn power(g: Gen, k: usize) -> Word {
    vec![g; k]
}

fn group_word(g: &ReflectionGroup, w: usize, letter: impl Fn(usize) -> Gen) -> Word {
    g.word(w).iter().map(|&k| letter(k)).collect()
}

/// The defining relations (0)-(6) on generators `W(w)` (group elements)
/// and `E(i)` (hyperplanes).
pub fn def11(g: &ReflectionGroup, params: &ParamSet) -> RelationList {
    let mut rl = RelationList::new(params.vars().clone());
    let w = Gen::W;
    let e = Gen::E;
    rl.push_eq("(0) unit", vec![w(g.identity())], vec![]);
    for &a in g.generators() {
        for b in 0..g.order() {
            rl.push_eq(format!("(0) {}*{}", a, b), vec![w(a), w(b)], vec![w(g.mul(a, b))]);
        }
    }
    let nh = g.num_hyperplanes();
    for i in 0..nh {
        let s = g.distinguished(i);
        rl.push_eq(format!("(1) i={}", i), vec![w(s), e(i)], vec![e(i)]);
        rl.push_eq(format!("(1) i={} right", i), vec![e(i), w(s)], vec![e(i)]);
    }
    for (x, i) in g.relation1prime_pairs() {
        rl.push_eq(format!("(1') w={} i={}", x, i), vec![w(x), e(i)], vec![e(i)]);
        rl.push_eq(format!("(1') w={} i={} right", x, i), vec![e(i), w(x)], vec![e(i)]);
    }
    for i in 0..nh {
        let tau = params.tau_of(g, i).clone();
        rl.push(format!("(2) i={}", i), vec![e(i), e(i)], vec![(tau, vec![e(i)])]);
    }
    for &a in g.generators() {
        for j in 0..nh {
            rl.push_eq(
                format!("(3) w={} j={}", a, j),
                vec![w(a), e(j)],
                vec![e(g.act_hyp(a, j)), w(a)],
            );
        }
    }
    let edges = EdgeReport::classify(g);
    for i in 0..nh {
        for j in 0..nh {
            if i == j {
                continue;
            }
            if edges.is_crossing(i, j) {
                rl.push_eq(format!("(4) {},{}", i, j), vec![e(i), e(j)], vec![e(j), e(i)]);
                continue;
            }
            let r = g.r_set(i, j).expect("distinct hyperplanes");
            if r.is_empty() {
                rl.push(format!("(6) {},{}", i, j), vec![e(i), e(j)], vec![]);
            } else {
                let left = r
                    .iter()
                    .map(|&s| (params.mu_of(g, s).clone(), vec![w(s), e(j)]))
                    .collect();
                let right = r
                    .iter()
                    .map(|&s| (params.mu_of(g, s).clone(), vec![e(i), w(s)]))
                    .collect();
                rl.push(format!("(5) {},{}", i, j), vec![e(i), e(j)], left);
                rl.push(format!("(5') {},{}", i, j), vec![e(i), e(j)], right);
            }
        }
    }
    rl
}

fn dihedral_vars(m: u32) -> Result<(ReflectionGroup, ParamSet), PresentationError> {
    let g = build_dihedral(m)?;
    let p = ParamSet::symbolic(&g);
    Ok((g, p))
}

/// Odd dihedral presentation, m = 2k+1.
pub fn def81_odd(m: u32) -> Result<RelationList, PresentationError> {
    if m < 3 || m.is_multiple_of(2) {
        return Err(PresentationError::Unsupported(format!(
            "odd dihedral needs odd m >= 3, got {}",
            m
        )));
    }
    let (_, p) = dihedral_vars(m)?;
    let k = (m / 2) as usize;
    let mut rl = RelationList::new(p.vars().clone());
    let (s0, s1, e0, e1) = (Gen::S(0), Gen::S(1), Gen::E(0), Gen::E(1));
    let mu = rl.var("mu");
    let tau = rl.var("tau");
    rl.push_eq("1)", alt(s0, s1, m as usize), alt(s1, s0, m as usize));
    rl.push_eq("2) S0", vec![s0, s0], vec![]);
    rl.push_eq("2) S1", vec![s1, s1], vec![]);
    for (s, e) in [(s0, e0), (s1, e1)] {
        rl.push_eq(format!("3) {}", s), vec![s, e], vec![e]);
        rl.push_eq(format!("3) {} right", s), vec![e, s], vec![e]);
        rl.push(format!("4) {}", e), vec![e, e], vec![(tau.clone(), vec![e])]);
    }
    for i in 1..=k {
        let w = alt(s1, s0, 2 * i - 1);
        rl.push(
            format!("5) i={}", i),
            cat(&[&[e0], &w, &[e0]]),
            vec![(mu.clone(), vec![e0])],
        );
        let w = alt(s0, s1, 2 * i - 1);
        rl.push(
            format!("6) i={}", i),
            cat(&[&[e1], &w, &[e1]]),
            vec![(mu.clone(), vec![e1])],
        );
    }
    let w = alt(s0, s1, 2 * k);
    rl.push_eq("7)", cat(&[&w, &[e0]]), cat(&[&[e1], &w]));
    let w = alt(s1, s0, 2 * k);
    rl.push_eq("8)", cat(&[&w, &[e1]]), cat(&[&[e0], &w]));
    Ok(rl)
}

/// Even dihedral presentation, m = 2k. The corrected variant drops the
/// instance i = k of 5) and i = 1 of 6), whose words fix the hyperplane of
/// the idempotent and so contradict 3), 7) and 8).
pub fn def81_even(m: u32, variant: Variant) -> Result<RelationList, PresentationError> {
    if m < 4 || m % 2 == 1 {
        return Err(PresentationError::Unsupported(format!(
            "even dihedral needs even m >= 4, got {}",
            m
        )));
    }
    let (g, p) = dihedral_vars(m)?;
    let k = (m / 2) as usize;
    let mut rl = RelationList::new(p.vars().clone());
    let (s0, s1, e0, e1) = (Gen::S(0), Gen::S(1), Gen::E(0), Gen::E(1));
    // mu_i is the parameter of the reflection s_i
    let mu_i = |i: usize| {
        let s = crate::refgroups::DihedralElem::S((i % m as usize) as u32).index(m);
        p.mu_of(&g, s).clone()
    };
    rl.push_eq("1)", alt(s0, s1, m as usize), alt(s1, s0, m as usize));
    rl.push_eq("2) S0", vec![s0, s0], vec![]);
    rl.push_eq("2) S1", vec![s1, s1], vec![]);
    for (idx, (s, e)) in [(s0, e0), (s1, e1)].into_iter().enumerate() {
        rl.push_eq(format!("3) {}", s), vec![s, e], vec![e]);
        rl.push_eq(format!("3) {} right", s), vec![e, s], vec![e]);
        let tau = rl.var(&format!("tau{}", idx));
        rl.push(format!("4) {}", e), vec![e, e], vec![(tau, vec![e])]);
    }
    let (r5, r6) = match variant {
        Variant::Printed => (1..=k, 1..=k),
        Variant::Corrected => (1..=k - 1, 2..=k),
    };
    for i in r5 {
        let w = alt(s1, s0, 2 * i - 1);
        let c = mu_i(i).try_add(&mu_i(i + k)).unwrap();
        rl.push(format!("5) i={}", i), cat(&[&[e0], &w, &[e0]]), vec![(c, vec![e0])]);
    }
    for i in r6 {
        let w = alt(s1, s0, 2 * i - 1);
        let c = mu_i(i).try_add(&mu_i(i + k)).unwrap();
        rl.push(format!("6) i={}", i), cat(&[&[e1], &w, &[e1]]), vec![(c, vec![e1])]);
    }
    let w = alt(s1, s0, 2 * k - 1);
    rl.push_eq("7)", cat(&[&w, &[e0]]), vec![e0]);
    rl.push_eq("7) right", cat(&[&[e0], &w]), vec![e0]);
    let w = alt(s0, s1, 2 * k - 1);
    rl.push_eq("8)", cat(&[&w, &[e1]]), vec![e1]);
    rl.push_eq("8) right", cat(&[&[e1], &w]), vec![e1]);
    for x in 0..g.order() {
        let w = group_word(&g, x, Gen::S);
        rl.push(
            format!("9) E1 W E0, W={}", g.element_name(x)),
            cat(&[&[e1], &w, &[e0]]),
            vec![],
        );
        rl.push(
            format!("9) E0 W E1, W={}", g.element_name(x)),
            cat(&[&[e0], &w, &[e1]]),
            vec![],
        );
    }
    Ok(rl)
}

/// Coxeter-type presentation. `g` must come from [`build_coxeter`]; node i
/// is generator `S(i)`, `E(i)` and the reflection `g.generators()[i]`.
/// `Corrected` drops 9) at l = k, where the word is a reflection fixing H_i.
pub fn def82(g: &ReflectionGroup, params: &ParamSet, variant: Variant) -> RelationList {
    let GroupKind::Coxeter { matrix } = g.kind() else {
        panic!("def82 needs a Coxeter group");
    };
    let n = matrix.len();
    let simple = g.generators();
    let hyp = |i: usize| g.hyperplane_of(simple[i]).expect("simple reflection");
    let mut rl = RelationList::new(params.vars().clone());
    let (s, e) = (Gen::S, Gen::E);
    // group element of a word in the simple generators
    let elem = |w: &Word| {
        let xs: Vec<usize> = w
            .iter()
            .map(|x| match x {
                Gen::S(i) => simple[*i],
                _ => unreachable!(),
            })
            .collect();
        g.mul_all(&xs)
    };
    for i in 0..n {
        rl.push_eq(format!("1) i={}", i), vec![s(i), s(i)], vec![]);
        rl.push_eq(format!("3) i={}", i), vec![s(i), e(i)], vec![e(i)]);
        rl.push_eq(format!("3) i={} right", i), vec![e(i), s(i)], vec![e(i)]);
        let tau = params.tau_of(g, hyp(i)).clone();
        rl.push(format!("4) i={}", i), vec![e(i), e(i)], vec![(tau, vec![e(i)])]);
    }
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let mij = matrix[i][j] as usize;
            if i < j {
                rl.push_eq(format!("2) {},{}", i, j), alt(s(i), s(j), mij), alt(s(j), s(i), mij));
            }
            if mij == 2 {
                rl.push_eq(format!("5) {},{}", i, j), vec![s(i), e(j)], vec![e(j), s(i)]);
                rl.push_eq(format!("6) {},{}", i, j), vec![e(i), e(j)], vec![e(j), e(i)]);
            } else if mij.is_multiple_of(2) {
                let k = mij / 2;
                let w = alt(s(j), s(i), 2 * k - 1);
                rl.push_eq(format!("7) {},{}", i, j), cat(&[&w, &[e(i)]]), vec![e(i)]);
                rl.push_eq(format!("7) {},{} right", i, j), cat(&[&[e(i)], &w]), vec![e(i)]);
                let sub = g.subgroup(&[simple[i], simple[j]]);
                for x in sub {
                    let w = group_word_in(g, x, &[(simple[i], i), (simple[j], j)]);
                    rl.push(
                        format!("8) {},{} W={}", i, j, g.element_name(x)),
                        cat(&[&[e(i)], &w, &[e(j)]]),
                        vec![],
                    );
                }
                let centre = elem(&alt(s(i), s(j), 2 * k));
                let top = if variant == Variant::Printed { k } else { k - 1 };
                for l in 1..=top {
                    let w = alt(s(j), s(i), 2 * l - 1);
                    let refl = elem(&w);
                    let other = g.mul(refl, centre);
                    let c = params.mu_of(g, refl).try_add(params.mu_of(g, other)).unwrap();
                    rl.push(
                        format!("9) {},{} l={}", i, j, l),
                        cat(&[&[e(i)], &w, &[e(i)]]),
                        vec![(c, vec![e(i)])],
                    );
                }
            } else {
                let k = mij / 2;
                for l in 1..=k {
                    let w = alt(s(j), s(i), 2 * l - 1);
                    let eps = if l % 2 == 1 { i } else { j };
                    let c = params.mu_of(g, simple[eps]).clone();
                    rl.push(
                        format!("10) {},{} l={}", i, j, l),
                        cat(&[&[e(i)], &w, &[e(i)]]),
                        vec![(c, vec![e(i)])],
                    );
                }
                let w = alt(s(i), s(j), 2 * k);
                rl.push_eq(format!("11) {},{}", i, j), cat(&[&w, &[e(i)]]), cat(&[&[e(j)], &w]));
            }
        }
    }
    rl
}

/// A word for `x` in a subgroup generated by the given (element, node)
/// pairs, found by breadth-first search.
fn group_word_in(g: &ReflectionGroup, x: usize, gens: &[(usize, usize)]) -> Word {
    use std::collections::{HashMap, VecDeque};
    let mut prev: HashMap<usize, (usize, usize)> = HashMap::new();
    let mut queue = VecDeque::from([g.identity()]);
    prev.insert(g.identity(), (usize::MAX, usize::MAX));
    while let Some(y) = queue.pop_front() {
        if y == x {
            break;
        }
        for &(h, node) in gens {
            let z = g.mul(y, h);
            if let std::collections::hash_map::Entry::Vacant(v) = prev.entry(z) {
                v.insert((y, node));
                queue.push_back(z);
            }
        }
    }
    let mut word = Vec::new();
    let mut y = x;
    while y != g.identity() {
        let (p, node) = prev[&y];
        word.push(Gen::S(node));
        y = p;
    }
    word.reverse();
    word
}

/// Parameter names of the G(m,1,n) presentation.
pub fn def83_vars(m: u32) -> Vars {
    let mut names = vec!["mu".to_string()];
    names.extend((1..m).map(|k| format!("mu{}", k)));
    names.push("tau0".into());
    names.push("tau1".into());
    Vars::new(&names)
}

/// Presentation of type G(m,1,n). In 12) the instance i = 0 reads
/// E1 E1 = mu_0 E1, and mu_0 is taken to be tau1.
///
/// The corrected variant replaces 12) and 13) by the values forced by the
/// hyperplane relations: E1 S0^i E1 = (mu_i + mu_{m-i} + mu * #{b : 2b = i
/// mod m}) E1 and E0 S1 E0 = m mu E0.
pub fn def83(m: u32, n: usize, variant: Variant) -> Result<RelationList, PresentationError> {
    if m < 2 || n < 2 {
        return Err(PresentationError::Unsupported(format!(
            "G({},1,{}) needs m, n >= 2",
            m, n
        )));
    }
    let small = build_g_m1n(m, 2)?;
    let mut rl = RelationList::new(def83_vars(m));
    let (s, e) = (Gen::S, Gen::E);
    let mu = rl.var("mu");
    let mu_i = |rl: &RelationList, i: u32| {
        if i.is_multiple_of(m) {
            rl.var("tau1")
        } else {
            rl.var(&format!("mu{}", i % m))
        }
    };
    let md = m as usize;
    rl.push_eq("1) S0^m", power(s(0), md), vec![]);
    for i in 1..n {
        rl.push_eq(format!("1) S{}^2", i), vec![s(i), s(i)], vec![]);
    }
    rl.push_eq("2)", vec![s(0), s(1), s(0), s(1)], vec![s(1), s(0), s(1), s(0)]);
    for i in 0..n {
        for j in i + 2..n {
            rl.push_eq(format!("3) {},{}", i, j), vec![s(i), s(j)], vec![s(j), s(i)]);
        }
    }
    for i in 1..n.saturating_sub(1) {
        rl.push_eq(
            format!("4) i={}", i),
            vec![s(i), s(i + 1), s(i)],
            vec![s(i + 1), s(i), s(i + 1)],
        );
    }
    rl.push("5)", vec![e(0), e(0)], vec![(rl.var("tau0"), vec![e(0)])]);
    for i in 1..n {
        rl.push(
            format!("6) i={}", i),
            vec![e(i), e(i)],
            vec![(rl.var("tau1"), vec![e(i)])],
        );
    }
    rl.push_eq("7)", vec![s(1), s(0), s(1), e(0)], vec![e(0)]);
    rl.push_eq("7) right", vec![e(0), s(1), s(0), s(1)], vec![e(0)]);
    for i in 1..n.saturating_sub(1) {
        rl.push_eq(
            format!("8) i={}", i),
            vec![s(i), s(i + 1), e(i)],
            vec![e(i + 1), s(i), s(i + 1)],
        );
    }
    for i in 0..n {
        for j in 0..n {
            if i.abs_diff(j) >= 2 {
                rl.push_eq(format!("9) {},{}", i, j), vec![s(i), e(j)], vec![e(j), s(i)]);
            }
        }
    }
    for i in 0..md {
        let w = cat(&[&power(s(0), i), &[s(1)], &power(s(0), i)]);
        rl.push_eq(format!("10) i={}", i), cat(&[&w, &[e(1)]]), cat(&[&[e(1)], &w]));
    }
    for i in 0..n {
        rl.push_eq(format!("11) i={}", i), vec![s(i), e(i)], vec![e(i)]);
        rl.push_eq(format!("11) i={} right", i), vec![e(i), s(i)], vec![e(i)]);
    }
    for i in 0..m {
        let c = match variant {
            Variant::Printed => mu_i(&rl, i),
            Variant::Corrected if i == 0 => rl.var("tau1"),
            Variant::Corrected => {
                let halves = (0..m).filter(|b| (2 * b) % m == i).count() as i64;
                mu_i(&rl, i)
                    .try_add(&mu_i(&rl, m - i))
                    .and_then(|x| x.try_add(&mu.scale(&int(halves))))
                    .unwrap()
            }
        };
        let lhs = cat(&[&[e(1)], &power(s(0), i as usize), &[e(1)]]);
        rl.push(format!("12) i={}", i), lhs, vec![(c, vec![e(1)])]);
    }
    let c13 = match variant {
        Variant::Printed => mu.scale(&int(m as i64 - 1)),
        Variant::Corrected => mu.scale(&int(m as i64)),
    };
    rl.push("13)", vec![e(0), s(1), e(0)], vec![(c13, vec![e(0)])]);
    for i in 0..n {
        for j in i + 2..n {
            rl.push_eq(format!("14) {},{}", i, j), vec![e(i), e(j)], vec![e(j), e(i)]);
        }
    }
    for x in 0..small.order() {
        let w = group_word(&small, x, Gen::S);
        let name = small.element_name(x);
        rl.push(format!("15) E0 W E1, W={}", name), cat(&[&[e(0)], &w, &[e(1)]]), vec![]);
        rl.push(format!("15) E1 W E0, W={}", name), cat(&[&[e(1)], &w, &[e(0)]]), vec![]);
    }
    for i in 1..n.saturating_sub(1) {
        rl.push(
            format!("16) i={}", i),
            vec![e(i), e(i + 1)],
            vec![(mu.clone(), vec![s(i), s(i + 1), s(i), e(i + 1)])],
        );
    }
    Ok(rl)
}

/// Brauer algebra B_n(tau), generators 1-based.
pub fn table1(n: usize) -> RelationList {
    let mut rl = RelationList::new(Vars::new(&["tau"]));
    let tau = rl.var("tau");
    let (s, e) = (Gen::S, Gen::E);
    for i in 1..n.saturating_sub(1) {
        rl.push_eq(
            format!("braid i={}", i),
            vec![s(i), s(i + 1), s(i)],
            vec![s(i + 1), s(i), s(i + 1)],
        );
    }
    for i in 2..n {
        rl.push_eq(
            format!("s_i s_i-1 e_i i={}", i),
            vec![s(i), s(i - 1), e(i)],
            vec![e(i - 1), s(i), s(i - 1)],
        );
    }
    for i in 1..n.saturating_sub(1) {
        rl.push_eq(
            format!("s_i s_i+1 e_i i={}", i),
            vec![s(i), s(i + 1), e(i)],
            vec![e(i + 1), s(i), s(i + 1)],
        );
    }
    for i in 1..n {
        for j in 1..n {
            if i.abs_diff(j) >= 2 {
                rl.push_eq(format!("s commute {},{}", i, j), vec![s(i), s(j)], vec![s(j), s(i)]);
                rl.push_eq(format!("s e commute {},{}", i, j), vec![s(i), e(j)], vec![e(j), s(i)]);
            }
        }
        rl.push_eq(format!("s^2 i={}", i), vec![s(i), s(i)], vec![]);
        rl.push_eq(format!("s e i={}", i), vec![s(i), e(i)], vec![e(i)]);
        rl.push(
            format!("e^2 i={}", i),
            vec![e(i), e(i)],
            vec![(tau.clone(), vec![e(i)])],
        );
    }
    for i in 1..n.saturating_sub(1) {
        rl.push_eq(format!("e s_i+1 e i={}", i), vec![e(i), s(i + 1), e(i)], vec![e(i)]);
    }
    for i in 2..n {
        rl.push_eq(format!("e s_i-1 e i={}", i), vec![e(i), s(i - 1), e(i)], vec![e(i)]);
    }
    rl
}

/// Simply laced Brauer algebra of the graph with adjacency `adj`.
pub fn table2(adj: &[Vec<bool>]) -> RelationList {
    let mut rl = RelationList::new(Vars::new(&["tau"]));
    let tau = rl.var("tau");
    let (s, e) = (Gen::S, Gen::E);
    let k = adj.len();
    for i in 0..k {
        for j in 0..k {
            if i == j {
                continue;
            }
            if adj[i][j] {
                rl.push_eq(
                    format!("braid {},{}", i, j),
                    vec![s(i), s(j), s(i)],
                    vec![s(j), s(i), s(j)],
                );
                rl.push_eq(
                    format!("s s e {},{}", i, j),
                    vec![s(i), s(j), e(i)],
                    vec![e(j), s(i), s(j)],
                );
                rl.push_eq(format!("e s e {},{}", i, j), vec![e(i), s(j), e(i)], vec![e(i)]);
            } else {
                rl.push_eq(format!("s commute {},{}", i, j), vec![s(i), s(j)], vec![s(j), s(i)]);
                rl.push_eq(format!("s e commute {},{}", i, j), vec![s(i), e(j)], vec![e(j), s(i)]);
            }
        }
        rl.push_eq(format!("s^2 i={}", i), vec![s(i), s(i)], vec![]);
        rl.push_eq(format!("s e i={}", i), vec![s(i), e(i)], vec![e(i)]);
        rl.push(
            format!("e^2 i={}", i),
            vec![e(i), e(i)],
            vec![(tau.clone(), vec![e(i)])],
        );
    }
    rl
}

/// Parameter names of the cyclotomic Brauer presentation: delta0..delta{m-1}.
pub fn def21_vars(m: u32) -> Vars {
    let names: Vec<String> = (0..m).map(|a| format!("delta{}", a)).collect();
    Vars::new(&names)
}

/// Cyclotomic Brauer presentation. Index ranges follow the evident intent
/// (a: i < n; o: 1 <= i < n). The corrected variant states l) as
/// s_i e_{i+1} s_i = s_{i+1} e_i s_{i+1}.
pub fn def21(m: u32, n: usize, variant: Variant) -> RelationList {
    let mut rl = RelationList::new(def21_vars(m));
    let (s, e, t) = (Gen::S, Gen::E, Gen::T);
    let delta = |rl: &RelationList, a: u32| rl.var(&format!("delta{}", a));
    for i in 1..n {
        rl.push_eq(format!("a) i={}", i), vec![s(i), s(i)], vec![]);
        for j in 1..n {
            if i.abs_diff(j) > 1 {
                rl.push_eq(format!("b) {},{}", i, j), vec![s(i), s(j)], vec![s(j), s(i)]);
                rl.push_eq(format!("f) {},{}", i, j), vec![s(i), e(j)], vec![e(j), s(i)]);
                rl.push_eq(format!("g) {},{}", i, j), vec![e(i), e(j)], vec![e(j), e(i)]);
            }
            if i.abs_diff(j) == 1 {
                rl.push_eq(format!("n) {},{}", i, j), vec![e(i), e(j), e(i)], vec![e(i)]);
            }
        }
        for j in 1..=n {
            if j != i && j != i + 1 {
                rl.push_eq(format!("d) {},{}", i, j), vec![s(i), t(j)], vec![t(j), s(i)]);
                rl.push_eq(format!("h) {},{}", i, j), vec![e(i), t(j)], vec![t(j), e(i)]);
            }
        }
        rl.push(
            format!("e) i={}", i),
            vec![e(i), e(i)],
            vec![(delta(&rl, 0), vec![e(i)])],
        );
        rl.push_eq(format!("j) i={}", i), vec![s(i), t(i)], vec![t(i + 1), s(i)]);
        rl.push_eq(format!("k) i={}", i), vec![e(i), s(i)], vec![e(i)]);
        rl.push_eq(format!("k) i={} left", i), vec![s(i), e(i)], vec![e(i)]);
        rl.push_eq(format!("o) i={}", i), vec![e(i), t(i), t(i + 1)], vec![e(i)]);
        rl.push_eq(format!("o) i={} left", i), vec![t(i), t(i + 1), e(i)], vec![e(i)]);
        for a in 1..m {
            let lhs = cat(&[&[e(i)], &power(t(i), a as usize), &[e(i)]]);
            rl.push(format!("p) i={} a={}", i, a), lhs, vec![(delta(&rl, a), vec![e(i)])]);
        }
    }
    for i in 1..n.saturating_sub(1) {
        rl.push_eq(
            format!("c) i={}", i),
            vec![s(i), s(i + 1), s(i)],
            vec![s(i + 1), s(i), s(i + 1)],
        );
        let rhs = match variant {
            Variant::Printed => vec![s(i + 1), e(i)],
            Variant::Corrected => vec![s(i + 1), e(i), s(i + 1)],
        };
        rl.push_eq(format!("l) i={}", i), vec![s(i), e(i + 1), s(i)], rhs);
        rl.push_eq(
            format!("m) i={}", i),
            vec![e(i + 1), e(i), s(i + 1)],
            vec![e(i + 1), s(i)],
        );
    }
    for i in 1..=n {
        for j in 1..=n {
            if i < j {
                rl.push_eq(format!("i) {},{}", i, j), vec![t(i), t(j)], vec![t(j), t(i)]);
            }
        }
        rl.push_eq(format!("q) i={}", i), power(t(i), m as usize), vec![]);
    }
    rl
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(rl: &RelationList) -> Vec<String> {
        rl.rels.iter().map(|r| r.to_string()).collect()
    }

    #[test]
    fn even_dihedral_instance() {
        let rl = def81_even(6, Variant::Printed).unwrap();
        let r = rl.rels.iter().find(|r| r.name == "5) i=2").unwrap();
        // s_2 and s_5 have parameters mu0 and mu1 (parity classes)
        assert_eq!(r.to_string(), "5) i=2: E0 S1 S0 S1 E0 = (mu0 + mu1) E0");
        let corrected = def81_even(6, Variant::Corrected).unwrap();
        assert!(corrected.rels.iter().all(|r| r.name != "5) i=3" && r.name != "6) i=1"));
    }

    #[test]
    fn g_m1n_instances() {
        let rl = def83(3, 3, Variant::Printed).unwrap();
        assert!(names(&rl).contains(&"13): E0 S1 E0 = (2*mu) E0".to_string()));
        let rl = def83(4, 2, Variant::Corrected).unwrap();
        let r = rl.rels.iter().find(|r| r.name == "12) i=2").unwrap();
        assert_eq!(r.to_string(), "12) i=2: E1 S0 S0 E1 = (2*mu + 2*mu2) E1");
    }

    #[test]
    fn table2_is_inside_def82_for_simply_laced() {
        let a3 = vec![vec![1, 3, 2], vec![3, 1, 3], vec![2, 3, 1]];
        let g = build_coxeter(&a3, 100).unwrap();
        let p = ParamSet::unit_mu(&g);
        let d82: Vec<String> = def82(&g, &p, Variant::Printed)
            .rels
            .iter()
            .map(|r| r.to_string().split_once(": ").unwrap().1.to_string())
            .collect();
        let adj: Vec<Vec<bool>> = a3.iter().map(|row| row.iter().map(|&x| x == 3).collect()).collect();
        for r in table2(&adj).rels {
            let body = r.to_string().split_once(": ").unwrap().1.to_string();
            let (l, rhs) = body.split_once(" = ").unwrap();
            let flipped = format!("{} = {}", rhs, l);
            assert!(d82.contains(&body) || d82.contains(&flipped), "missing {}", body);
        }
    }

    #[test]
    fn def11_dihedral_examples() {
        let g = build_dihedral(6).unwrap();
        let rl = def11(&g, &ParamSet::symbolic(&g));
        assert!(names(&rl).contains(&"(6) 0,1: E0 E1 = 0".to_string()));
        let g = build_dihedral(5).unwrap();
        let rl = def11(&g, &ParamSet::unit_mu(&g));
        let s1 = crate::refgroups::DihedralElem::S(1).index(5);
        assert!(names(&rl).contains(&format!("(5) 0,2: E0 E2 = w{} E2", s1)));
    }
}
