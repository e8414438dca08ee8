//! The algebra B_G(Υ) on an explicit basis of normal words, for the groups
//! where a basis is known (dihedral, H3, small symmetric groups).
//!
//! The generators act on the span of the normal words (left regular
//! action). Products of basis elements are computed by applying the stored
//! witness word of the left factor, so the table is associative as soon as
//! every defining relation holds on every basis vector; that check is
//! [`BrauerTypeAlgebra::relation_soundness`].

use std::collections::HashMap;
use std::fmt;

use num_traits::Zero;
use serde_json::{json, Value};
use thiserror::Error;

use super::params::{Evaluated, ParamSet};
use super::presentations::def11;
use super::relations::{check_relations, Gen, LinearModel, ParamValues, Probes, RelationReport, Word};
use super::table::{Algebra, Elem, Starred};

use crate::exactnum::{ExactError, Rational, Ring, SparseVec, SparseVecExt};
use crate::refgroups::{EdgeReport, GroupKind, ReflectionGroup};

#[derive(Debug, Error)]
pub enum EngineError {
    #[error("no basis is available for {0}")]
    Unsupported(String),
    #[error("crossing hyperplanes do not split into cliques")]
    CrossingNotCliques,
    #[error("star needs mu_s = mu_(s^-1)")]
    StarPrecondition,
    #[error("rescaling factor must be nonzero")]
    ZeroScale,
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// A basis element: a group element, `w e_j` or `w E_a` where `E_a` is the
/// product of two idempotents of the crossing class `a`. In the last two
/// forms `w` is the least element of its coset modulo the stabilizer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NormalWord {
    Group(usize),
    Single { w: usize, j: usize },
    Pair { w: usize, class: usize },
}

impl NormalWord {
    /// Number of idempotent letters.
    pub fn e_length(&self) -> u32 {
        match self {
            NormalWord::Group(_) => 0,
            NormalWord::Single { .. } => 1,
            NormalWord::Pair { .. } => 2,
        }
    }

    pub fn to_json(&self) -> Value {
        match *self {
            NormalWord::Group(w) => json!({"w": w}),
            NormalWord::Single { w, j } => json!({"w": w, "e": j}),
            NormalWord::Pair { w, class } => json!({"w": w, "E": class}),
        }
    }
}

impl fmt::Display for NormalWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormalWord::Group(w) => write!(f, "w{}", w),
            NormalWord::Single { w, j } => write!(f, "w{} e{}", w, j),
            NormalWord::Pair { w, class } => write!(f, "w{} E[{}]", w, class),
        }
    }
}

/// Largest basis the engine will build.
pub const ENGINE_MAX_DIM: usize = 5000;

pub struct BrauerTypeAlgebra<R: Ring> {
    group: ReflectionGroup,
    params: ParamSet,
    ring: R,
    values: Evaluated<R::Elem>,
    assignment: ParamValues<R::Elem>,
    edges: EdgeReport,
    /// Crossing cliques as sorted hyperplane lists.
    classes: Vec<Vec<usize>>,
    class_of_hyp: Vec<Option<usize>>,
    single_rep: Vec<Vec<u32>>,
    pair_rep: Vec<Vec<u32>>,
    single_stab: Vec<Vec<usize>>,
    pair_stab: Vec<Vec<usize>>,
    r_sets: Vec<Vec<Vec<usize>>>,
    basis: Vec<NormalWord>,
    index: HashMap<NormalWord, usize>,
}

fn supported(g: &ReflectionGroup) -> Result<(), EngineError> {
    match g.kind() {
        GroupKind::Dihedral { .. } => Ok(()),
        GroupKind::TypeA { n } if *n <= 4 => Ok(()),
        GroupKind::Coxeter { .. } if g.order() <= 200 => Ok(()),
        _ => Err(EngineError::Unsupported(g.name().to_string())),
    }
}

impl<R: Ring> BrauerTypeAlgebra<R> {
    /// Builds the algebra with the parameters `params` evaluated by
    /// `values` into `ring`.
    pub fn new(
        group: &ReflectionGroup,
        params: &ParamSet,
        ring: R,
        values: &ParamValues<R::Elem>,
    ) -> Result<Self, EngineError> {
        supported(group)?;
        let ev = params.evaluate(&ring, values)?;
        let g = group;
        let nh = g.num_hyperplanes();
        let edges = EdgeReport::classify(g);
        let classes = crossing_cliques(&edges, nh)?;
        let mut class_of_hyp = vec![None; nh];
        for (c, hs) in classes.iter().enumerate() {
            for &h in hs {
                class_of_hyp[h] = Some(c);
            }
        }
        let prime = g.relation1prime_pairs();
        let single_stab: Vec<Vec<usize>> = (0..nh)
            .map(|i| {
                let mut gens = vec![g.distinguished(i)];
                gens.extend(prime.iter().filter(|p| p.1 == i).map(|p| p.0));
                g.subgroup(&gens)
            })
            .collect();
        let pair_stab: Vec<Vec<usize>> = classes
            .iter()
            .map(|hs| {
                (0..g.order())
                    .filter(|&w| hs.iter().all(|&h| hs.contains(&g.act_hyp(w, h))))
                    .collect()
            })
            .collect();
        let reps =
            |stab: &Vec<usize>| -> Vec<u32> { (0..g.order()).map(|w| g.min_coset_rep(w, stab) as u32).collect() };
        let single_rep: Vec<Vec<u32>> = single_stab.iter().map(reps).collect();
        let pair_rep: Vec<Vec<u32>> = pair_stab.iter().map(reps).collect();
        let r_sets = (0..nh)
            .map(|i| {
                (0..nh)
                    .map(|j| if i == j { Vec::new() } else { g.r_set(i, j).unwrap() })
                    .collect()
            })
            .collect();
        let mut basis: Vec<NormalWord> = (0..g.order()).map(NormalWord::Group).collect();
        for (j, rep) in single_rep.iter().enumerate() {
            let mut ws: Vec<usize> = rep.iter().map(|&w| w as usize).collect();
            ws.sort_unstable();
            ws.dedup();
            basis.extend(ws.into_iter().map(|w| NormalWord::Single { w, j }));
        }
        for (class, rep) in pair_rep.iter().enumerate() {
            let mut ws: Vec<usize> = rep.iter().map(|&w| w as usize).collect();
            ws.sort_unstable();
            ws.dedup();
            basis.extend(ws.into_iter().map(|w| NormalWord::Pair { w, class }));
        }
        if basis.len() > ENGINE_MAX_DIM {
            return Err(EngineError::Unsupported(format!(
                "{} (dimension {})",
                g.name(),
                basis.len()
            )));
        }
        let index = basis.iter().enumerate().map(|(k, &b)| (b, k)).collect();
        Ok(BrauerTypeAlgebra {
            group: g.clone(),
            params: params.clone(),
            ring,
            values: ev,
            assignment: values.clone(),
            edges,
            classes,
            class_of_hyp,
            single_rep,
            pair_rep,
            single_stab,
            pair_stab,
            r_sets,
            basis,
            index,
        })
    }

    pub fn group(&self) -> &ReflectionGroup {
        &self.group
    }

    pub fn params(&self) -> &ParamSet {
        &self.params
    }

    pub fn values(&self) -> &Evaluated<R::Elem> {
        &self.values
    }

    pub fn basis(&self) -> &[NormalWord] {
        &self.basis
    }

    pub fn index_of(&self, b: &NormalWord) -> Option<usize> {
        self.index.get(b).copied()
    }

    /// Crossing classes (hyperplane lists) used by the `Pair` basis words.
    pub fn crossing_classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn single_stabilizer(&self, j: usize) -> &[usize] {
        &self.single_stab[j]
    }

    pub fn pair_stabilizer(&self, class: usize) -> &[usize] {
        &self.pair_stab[class]
    }

    fn mu(&self, s: usize) -> &R::Elem {
        &self.values.mu[self.group.class_of(s).expect("pseudo-reflection")]
    }

    fn tau(&self, i: usize) -> &R::Elem {
        &self.values.tau[self.group.orbit_of(i)]
    }

    fn single(&self, w: usize, j: usize) -> usize {
        let w = self.single_rep[j][w] as usize;
        self.index[&NormalWord::Single { w, j }]
    }

    fn pair(&self, w: usize, class: usize) -> usize {
        let w = self.pair_rep[class][w] as usize;
        self.index[&NormalWord::Pair { w, class }]
    }

    /// The two hyperplanes whose product defines `E_class`.
    pub fn class_pair(&self, class: usize) -> (usize, usize) {
        (self.classes[class][0], self.classes[class][1])
    }

    fn act_group(&self, x: usize, b: usize) -> SparseVec<R::Elem> {
        let g = &self.group;
        let k = match self.basis[b] {
            NormalWord::Group(w) => g.mul(x, w),
            NormalWord::Single { w, j } => self.single(g.mul(x, w), j),
            NormalWord::Pair { w, class } => self.pair(g.mul(x, w), class),
        };
        SparseVec::unit(&self.ring, k)
    }

    /// `w e_k e_j` with k != j.
    fn e_times_single(&self, w: usize, k: usize, j: usize) -> SparseVec<R::Elem> {
        let g = &self.group;
        let mut out = SparseVec::new();
        if self.edges.is_crossing(k, j) {
            let c = self.class_of_hyp[j].expect("crossing hyperplanes lie in a class");
            out.add_term(&self.ring, self.pair(w, c), self.ring.one());
            return out;
        }
        for &s in &self.r_sets[k][j] {
            out.add_term(&self.ring, self.single(g.mul(w, s), j), self.mu(s).clone());
        }
        out
    }

    fn act_e(&self, i: usize, b: usize) -> SparseVec<R::Elem> {
        let g = &self.group;
        let ring = &self.ring;
        match self.basis[b] {
            NormalWord::Group(w) => {
                let k = g.act_hyp(g.inverse(w), i);
                SparseVec::unit(ring, self.single(w, k))
            }
            NormalWord::Single { w, j } => {
                let k = g.act_hyp(g.inverse(w), i);
                if k == j {
                    let mut out = SparseVec::new();
                    out.add_term(ring, b, self.tau(j).clone());
                    out
                } else {
                    self.e_times_single(w, k, j)
                }
            }
            NormalWord::Pair { w, class } => {
                let k = g.act_hyp(g.inverse(w), i);
                let mut out = SparseVec::new();
                let members = &self.classes[class];
                if members.contains(&k) {
                    out.add_term(ring, b, self.tau(k).clone());
                    return out;
                }
                // e_k E = e_k e_a (rest) with a noncrossing to k
                let Some(&a) = members.iter().find(|&&a| !self.edges.is_crossing(k, a)) else {
                    panic!("hyperplane {} crosses every member of class {}", k, class);
                };
                for &s in &self.r_sets[k][a] {
                    out.add_term(ring, self.pair(g.mul(w, s), class), self.mu(s).clone());
                }
                out
            }
        }
    }

    /// A word whose image on the unit is basis element `b`.
    pub fn witness(&self, b: usize) -> Word {
        match self.basis[b] {
            NormalWord::Group(w) => vec![Gen::W(w)],
            NormalWord::Single { w, j } => vec![Gen::W(w), Gen::E(j)],
            NormalWord::Pair { w, class } => {
                let (x, y) = self.class_pair(class);
                vec![Gen::W(w), Gen::E(x), Gen::E(y)]
            }
        }
    }

    /// Rewrites a word to a combination of basis elements.
    pub fn normal_form(&self, word: &[Gen]) -> Option<Elem<Self>> {
        self.act_word(word, &self.unit())
    }

    /// Every relation (0)-(6) evaluated on every basis vector.
    pub fn relation_soundness(&self) -> Result<RelationReport, EngineError> {
        let rels = def11(&self.group, &self.params);
        Ok(check_relations(self, &rels, &self.assignment, &Probes::AllBasis)?)
    }

    /// `mu_s = mu_(s^-1)` for every pseudo-reflection.
    pub fn star_precondition(&self) -> bool {
        let g = &self.group;
        g.reflections().iter().all(|&s| self.mu(s) == self.mu(g.inverse(s)))
    }

    /// Image under the map to the group algebra (idempotents to zero).
    pub fn pi(&self, b: usize) -> Option<usize> {
        match self.basis[b] {
            NormalWord::Group(w) => Some(w),
            _ => None,
        }
    }

    /// Kernel of the map to the group algebra: basis elements with an
    /// idempotent letter.
    pub fn pi_kernel(&self) -> Vec<usize> {
        (0..self.basis.len()).filter(|&b| self.pi(b).is_none()).collect()
    }

    /// Checks that the map to the group algebra is multiplicative on the
    /// given pairs and a section on group elements.
    pub fn check_pi(&self, pairs: &[(usize, usize)]) -> bool {
        let g = &self.group;
        let section = (0..g.order()).all(|w| self.pi(self.index[&NormalWord::Group(w)]) == Some(w));
        let hom = pairs.iter().all(|&(a, b)| {
            let prod = self.mul_basis(a, b);
            let mut image: HashMap<usize, R::Elem> = HashMap::new();
            for (&c, x) in &prod {
                if let Some(w) = self.pi(c) {
                    let e = image.entry(w).or_insert_with(|| self.ring.zero());
                    *e = self.ring.add(e, x);
                }
            }
            image.retain(|_, v| !self.ring.is_zero(v));
            let want: HashMap<usize, R::Elem> = match (self.pi(a), self.pi(b)) {
                (Some(x), Some(y)) => [(g.mul(x, y), self.ring.one())].into(),
                _ => HashMap::new(),
            };
            image == want
        });
        section && hom
    }

    pub fn basis_json(&self) -> Value {
        Value::Array(self.basis.iter().map(|b| b.to_json()).collect())
    }
}

/// Components of the crossing graph with at least two hyperplanes; each
/// must be a clique.
fn crossing_cliques(edges: &EdgeReport, nh: usize) -> Result<Vec<Vec<usize>>, EngineError> {
    let mut seen = vec![false; nh];
    let mut out = Vec::new();
    for start in 0..nh {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut k = 0;
        while k < comp.len() {
            let a = comp[k];
            for b in 0..nh {
                if !seen[b] && edges.is_crossing(a, b) {
                    seen[b] = true;
                    comp.push(b);
                }
            }
            k += 1;
        }
        if comp.len() < 2 {
            continue;
        }
        comp.sort_unstable();
        for (x, &a) in comp.iter().enumerate() {
            for &b in &comp[x + 1..] {
                if !edges.is_crossing(a, b) {
                    return Err(EngineError::CrossingNotCliques);
                }
            }
        }
        out.push(comp);
    }
    Ok(out)
}

impl<R: Ring> LinearModel for BrauerTypeAlgebra<R> {
    type R = R;
    fn ring(&self) -> &R {
        &self.ring
    }
    fn dim(&self) -> usize {
        self.basis.len()
    }
    fn act_basis(&self, g: Gen, b: usize) -> Option<SparseVec<R::Elem>> {
        match g {
            Gen::W(x) if x < self.group.order() => Some(self.act_group(x, b)),
            Gen::E(i) if i < self.group.num_hyperplanes() => Some(self.act_e(i, b)),
            _ => None,
        }
    }
}

impl<R: Ring> Algebra for BrauerTypeAlgebra<R> {
    type R = R;
    fn ring(&self) -> &R {
        &self.ring
    }
    fn dim(&self) -> usize {
        self.basis.len()
    }
    fn label(&self, b: usize) -> String {
        self.basis[b].to_string()
    }
    fn unit(&self) -> Elem<Self> {
        SparseVec::unit(&self.ring, self.index[&NormalWord::Group(self.group.identity())])
    }
    fn mul_basis(&self, a: usize, b: usize) -> Elem<Self> {
        let v = SparseVec::unit(&self.ring, b);
        self.act_word(&self.witness(a), &v)
            .expect("witness letters are interpreted")
    }
    fn gen_image(&self, g: Gen) -> Option<Elem<Self>> {
        let unit = Algebra::unit(self);
        self.act_basis(g, *unit.keys().next().unwrap())
    }
}

impl<R: Ring> Starred for BrauerTypeAlgebra<R> {
    /// `w -> w^-1`, `e_i -> e_i`, reversing products.
    fn star_basis(&self, b: usize) -> Elem<Self> {
        let g = &self.group;
        let word: Word = self
            .witness(b)
            .into_iter()
            .rev()
            .map(|x| match x {
                Gen::W(w) => Gen::W(g.inverse(w)),
                other => other,
            })
            .collect();
        self.normal_form(&word).expect("witness letters are interpreted")
    }
}

/// Evidence that `E_i -> lambda e_i` identifies B_G(lambda mu, lambda tau)
/// with B_G(mu, tau).
#[derive(Debug, Clone, serde::Serialize)]
pub struct RescaleReport {
    pub pairs_checked: usize,
    pub mismatches: usize,
}

/// Builds the algebra with parameters scaled by `lambda` and checks that
/// `b' -> lambda^(e-length) b` carries its products to products.
pub fn rescale_iso<R: Ring>(
    alg: &BrauerTypeAlgebra<R>,
    lambda: &Rational,
    pairs: Option<&[(usize, usize)]>,
) -> Result<(BrauerTypeAlgebra<R>, RescaleReport), EngineError> {
    if lambda.is_zero() {
        return Err(EngineError::ZeroScale);
    }
    let ring = alg.ring.clone();
    let p = &alg.params;
    let scaled = ParamSet::custom(
        p.vars().clone(),
        (0..alg.values.mu.len()).map(|c| p.mu_class(c).scale(lambda)).collect(),
        (0..alg.values.tau.len())
            .map(|o| p.tau_orbit(o).scale(lambda))
            .collect(),
    );
    let other = BrauerTypeAlgebra::new(&alg.group, &scaled, ring.clone(), &alg.assignment)?;
    let lambda = ring.from_rational(lambda)?;
    let d = alg.basis.len();
    let all: Vec<(usize, usize)>;
    let pairs = match pairs {
        Some(p) => p,
        None => {
            all = (0..d).flat_map(|a| (0..d).map(move |b| (a, b))).collect();
            &all
        }
    };
    let factor = |b: usize| ring.pow(&lambda, alg.basis[b].e_length());
    use rayon::prelude::*;
    let mismatches = pairs
        .par_iter()
        .filter(|&&(a, b)| {
            // psi(x' y') vs psi(x') psi(y'), with psi(b') = lambda^len(b) b
            let mut lhs = SparseVec::new();
            for (&c, x) in &other.mul_basis(a, b) {
                lhs.add_term(&ring, c, ring.mul(x, &factor(c)));
            }
            let scale = ring.mul(&factor(a), &factor(b));
            let rhs = alg.mul_basis(a, b).scaled(&ring, &scale);
            lhs != rhs
        })
        .count();
    Ok((
        other,
        RescaleReport {
            pairs_checked: pairs.len(),
            mismatches,
        },
    ))
}
