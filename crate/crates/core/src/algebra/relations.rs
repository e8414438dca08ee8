//! Generators, relation lists and the verifier that evaluates relations in
//! any linear model.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;
use serde_json::{json, Value};

use crate::exactnum::{ExactError, ParamPoly, Ring, SparseVec, SparseVecExt, Vars};

/// Abstract generator symbols. `W` is a group element by index and `E` a
/// hyperplane idempotent in group-level presentations; presentations of
/// Coxeter or diagram type use `S`, `E` and `T` with their own numbering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Gen {
    W(usize),
    E(usize),
    S(usize),
    T(usize),
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::W(k) => write!(f, "w{}", k),
            Gen::E(k) => write!(f, "E{}", k),
            Gen::S(k) => write!(f, "S{}", k),
            Gen::T(k) => write!(f, "t{}", k),
        }
    }
}

/// A product of generators, written left to right; acting on a vector the
/// rightmost letter applies first.
pub type Word = Vec<Gen>;

#[derive(Debug, Clone)]
pub struct Term {
    pub coeff: ParamPoly,
    pub word: Word,
}

#[derive(Debug, Clone)]
pub struct Relation {
    pub name: String,
    pub lhs: Vec<Term>,
    pub rhs: Vec<Term>,
}

fn side_string(side: &[Term]) -> String {
    if side.is_empty() {
        return "0".into();
    }
    side.iter()
        .map(|t| {
            let w = if t.word.is_empty() {
                "1".to_string()
            } else {
                t.word.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(" ")
            };
            match t.coeff.as_constant() {
                Some(c) if c == crate::exactnum::int(1) => w,
                _ => format!("({}) {}", t.coeff, w),
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} = {}",
            self.name,
            side_string(&self.lhs),
            side_string(&self.rhs)
        )
    }
}

/// Relations sharing one coefficient variable list.
#[derive(Debug, Clone)]
pub struct RelationList {
    pub vars: Vars,
    pub rels: Vec<Relation>,
}

impl RelationList {
    pub fn new(vars: Vars) -> Self {
        RelationList { vars, rels: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.rels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rels.is_empty()
    }

    pub fn one(&self) -> ParamPoly {
        ParamPoly::one(&self.vars)
    }

    pub fn var(&self, name: &str) -> ParamPoly {
        ParamPoly::var(&self.vars, name).expect("relation variable declared")
    }

    /// `lhs_word = rhs_word`, both with coefficient 1.
    pub fn push_eq(&mut self, name: impl Into<String>, lhs: Word, rhs: Word) {
        let one = self.one();
        self.rels.push(Relation {
            name: name.into(),
            lhs: vec![Term {
                coeff: one.clone(),
                word: lhs,
            }],
            rhs: vec![Term { coeff: one, word: rhs }],
        });
    }

    /// `lhs_word = sum of coeff * word`.
    pub fn push(&mut self, name: impl Into<String>, lhs: Word, rhs: Vec<(ParamPoly, Word)>) {
        let one = self.one();
        self.rels.push(Relation {
            name: name.into(),
            lhs: vec![Term { coeff: one, word: lhs }],
            rhs: rhs.into_iter().map(|(coeff, word)| Term { coeff, word }).collect(),
        });
    }

    pub fn extend(&mut self, other: RelationList) {
        assert_eq!(self.vars, other.vars, "relation lists over different variables");
        self.rels.extend(other.rels);
    }

    pub fn generators(&self) -> Vec<Gen> {
        let mut gens: Vec<Gen> = self
            .rels
            .iter()
            .flat_map(|r| r.lhs.iter().chain(&r.rhs))
            .flat_map(|t| t.word.iter().copied())
            .collect();
        gens.sort_unstable();
        gens.dedup();
        gens
    }

    pub fn to_json(&self) -> Value {
        json!({
            "params": self.vars.names(),
            "relations": self.rels.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        })
    }
}

/// A vector space with linear operators for some generators.
pub trait LinearModel: Sync {
    type R: Ring;
    fn ring(&self) -> &Self::R;
    fn dim(&self) -> usize;
    /// Image of basis vector `b` under generator `g`, or `None` if the model
    /// does not interpret `g`.
    fn act_basis(&self, g: Gen, b: usize) -> Option<SparseVec<<Self::R as Ring>::Elem>>;

    fn act(&self, g: Gen, v: &SparseVec<<Self::R as Ring>::Elem>) -> Option<SparseVec<<Self::R as Ring>::Elem>> {
        let ring = self.ring();
        let mut out = SparseVec::new();
        for (&b, c) in v {
            let img = self.act_basis(g, b)?;
            out.add_scaled(ring, c, &img);
        }
        Some(out)
    }

    fn act_word(
        &self,
        word: &[Gen],
        v: &SparseVec<<Self::R as Ring>::Elem>,
    ) -> Option<SparseVec<<Self::R as Ring>::Elem>> {
        let mut cur = v.clone();
        for &g in word.iter().rev() {
            if cur.is_empty() {
                return Some(cur);
            }
            cur = self.act(g, &cur)?;
        }
        Some(cur)
    }
}

/// Reinterprets generators as words in another model's generators; a
/// generator mapped to `None` acts as zero.
pub struct Rebind<'a, M: LinearModel> {
    inner: &'a M,
    map: HashMap<Gen, Option<Word>>,
}

impl<'a, M: LinearModel> Rebind<'a, M> {
    pub fn new(inner: &'a M, map: HashMap<Gen, Option<Word>>) -> Self {
        Rebind { inner, map }
    }
}

impl<M: LinearModel> LinearModel for Rebind<'_, M> {
    type R = M::R;
    fn ring(&self) -> &M::R {
        self.inner.ring()
    }
    fn dim(&self) -> usize {
        self.inner.dim()
    }
    fn act_basis(&self, g: Gen, b: usize) -> Option<SparseVec<<M::R as Ring>::Elem>> {
        match self.map.get(&g)? {
            None => Some(SparseVec::new()),
            Some(word) => {
                let v = SparseVec::unit(self.inner.ring(), b);
                self.inner.act_word(word, &v)
            }
        }
    }
}

/// Which vectors relations are tested on.
#[derive(Debug, Clone)]
pub enum Probes {
    /// Every basis vector: operator identities.
    AllBasis,
    /// Only the given basis vectors, e.g. the unit of a regular module.
    Basis(Vec<usize>),
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationFailure {
    pub relation: String,
    pub probe: usize,
    pub residual_terms: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationReport {
    pub checked: usize,
    pub failures: Vec<RelationFailure>,
    pub unsupported: Vec<String>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.unsupported.is_empty()
    }

    pub fn failed_names(&self) -> Vec<String> {
        let mut names: Vec<String> = self.failures.iter().map(|f| f.relation.clone()).collect();
        names.dedup();
        names
    }
}

/// Coefficient values for a relation list, keyed by variable name.
pub type ParamValues<E> = HashMap<String, E>;

fn coeff_values<R: Ring>(vars: &Vars, values: &ParamValues<R::Elem>) -> Result<Vec<R::Elem>, ExactError> {
    vars.names()
        .iter()
        .map(|n| {
            values
                .get(n)
                .cloned()
                .ok_or_else(|| ExactError::MissingVariable(n.clone()))
        })
        .collect()
}

/// Evaluates `lhs - rhs` of every relation on the probe vectors.
pub fn check_relations<M: LinearModel>(
    model: &M,
    rels: &RelationList,
    values: &ParamValues<<M::R as Ring>::Elem>,
    probes: &Probes,
) -> Result<RelationReport, ExactError> {
    use rayon::prelude::*;
    let ring = model.ring();
    let vals = coeff_values::<M::R>(&rels.vars, values)?;
    let probe_list: Vec<usize> = match probes {
        Probes::AllBasis => (0..model.dim()).collect(),
        Probes::Basis(v) => v.clone(),
    };
    let results: Vec<Result<(Vec<RelationFailure>, Option<String>), ExactError>> = rels
        .rels
        .par_iter()
        .map(|rel| {
            let lhs: Vec<(<M::R as Ring>::Elem, &Word)> = rel
                .lhs
                .iter()
                .map(|t| Ok((t.coeff.eval_in(ring, &vals)?, &t.word)))
                .collect::<Result<_, ExactError>>()?;
            let rhs: Vec<(<M::R as Ring>::Elem, &Word)> = rel
                .rhs
                .iter()
                .map(|t| Ok((ring.neg(&t.coeff.eval_in(ring, &vals)?), &t.word)))
                .collect::<Result<_, ExactError>>()?;
            let mut fails = Vec::new();
            for &p in &probe_list {
                let v = SparseVec::unit(ring, p);
                let mut acc = SparseVec::new();
                for (c, w) in lhs.iter().chain(&rhs) {
                    match model.act_word(w, &v) {
                        Some(img) => acc.add_scaled(ring, c, &img),
                        None => return Ok((Vec::new(), Some(rel.name.clone()))),
                    }
                }
                if !acc.is_empty() {
                    fails.push(RelationFailure {
                        relation: rel.to_string(),
                        probe: p,
                        residual_terms: acc.len(),
                    });
                }
            }
            Ok((fails, None))
        })
        .collect();
    let mut report = RelationReport {
        checked: rels.len(),
        failures: Vec::new(),
        unsupported: Vec::new(),
    };
    for r in results {
        let (f, u) = r?;
        report.failures.extend(f);
        report.unsupported.extend(u);
    }
    Ok(report)
}

/// Identity assignment: each variable of `vars` to itself in `ring`'s
/// polynomial ring, matched by name.
pub fn symbolic_values(rels: &Vars, target: &crate::exactnum::PolyRing) -> Result<ParamValues<ParamPoly>, ExactError> {
    rels.names().iter().map(|n| Ok((n.clone(), target.var(n)?))).collect()
}
