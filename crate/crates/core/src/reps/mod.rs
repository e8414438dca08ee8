//! Matrix representations: the generalized Lawrence-Krammer representation,
//! regular representations of group and algebra, the H3 representations
//! and their M-matrices.

mod h3;
mod op;

use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::{Evaluated, Gen, LinearModel};
use crate::exactnum::{det_poly, ExactError, Field, Matrix, ModP, ParamPoly, PolyRing, Ring, SparseVec, SparseVecExt};
use crate::refgroups::{GroupError, ReflectionGroup};

pub use h3::{h3_induced_rep, h3_rho4, H3Data};
pub use op::{op_apply, op_compose, op_from_dense, op_identity, op_to_dense, Operator};

#[derive(Debug, Error)]
pub enum RepError {
    #[error("generator {0} has no matrix")]
    MissingGenerator(String),
    #[error("block {0:?} is not invariant")]
    BlockLeak(Vec<usize>),
    #[error("idempotent {0} has rank > 1 or image off its line")]
    NotRankOne(usize),
    #[error("element {0} is not in the stabilizer subgroup")]
    NotInStabilizer(String),
    #[error("relation check failed: {0:?}")]
    Relations(Vec<String>),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// Operators for every group element and (optionally) every hyperplane
/// idempotent, acting on column vectors.
#[derive(Debug, Clone)]
pub struct MatrixRep<R: Ring> {
    ring: R,
    dim: usize,
    group: Vec<Operator<R::Elem>>,
    idem: Vec<Operator<R::Elem>>,
    labels: Vec<String>,
    /// image line of each idempotent, when it has one
    lines: Vec<Option<usize>>,
    choices: Value,
}

impl<R: Ring> MatrixRep<R> {
    pub fn new(ring: R, group: Vec<Operator<R::Elem>>, idem: Vec<Operator<R::Elem>>, labels: Vec<String>) -> Self {
        let dim = labels.len();
        MatrixRep {
            ring,
            dim,
            group,
            idem,
            labels,
            lines: Vec::new(),
            choices: Value::Null,
        }
    }

    pub fn with_lines(mut self, lines: Vec<Option<usize>>) -> Self {
        self.lines = lines;
        self
    }

    pub fn with_choices(mut self, choices: Value) -> Self {
        self.choices = choices;
        self
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn group_op(&self, w: usize) -> &Operator<R::Elem> {
        &self.group[w]
    }
    pub fn idem_op(&self, i: usize) -> Option<&Operator<R::Elem>> {
        self.idem.get(i)
    }
    pub fn has_idempotents(&self) -> bool {
        !self.idem.is_empty()
    }
    pub fn choices(&self) -> &Value {
        &self.choices
    }

    /// Sub-representation on the coordinates `keep`, if they span an
    /// invariant subspace.
    pub fn restrict(&self, keep: &[usize]) -> Result<MatrixRep<R>, RepError> {
        let pos: std::collections::HashMap<usize, usize> = keep.iter().enumerate().map(|(a, &b)| (b, a)).collect();
        let cut = |op: &Operator<R::Elem>| -> Option<Operator<R::Elem>> {
            keep.iter()
                .map(|&b| {
                    op[b]
                        .iter()
                        .map(|(k, x)| pos.get(k).map(|&p| (p, x.clone())))
                        .collect::<Option<SparseVec<_>>>()
                })
                .collect()
        };
        let leak = || RepError::BlockLeak(keep.to_vec());
        let group = self
            .group
            .iter()
            .map(|o| cut(o).ok_or_else(leak))
            .collect::<Result<_, _>>()?;
        let idem = self
            .idem
            .iter()
            .map(|o| cut(o).ok_or_else(leak))
            .collect::<Result<_, _>>()?;
        let labels = keep.iter().map(|&b| self.labels[b].clone()).collect();
        Ok(MatrixRep::new(self.ring.clone(), group, idem, labels))
    }

    /// Entries as a dense matrix per generator, for export.
    pub fn to_json(&self, g: &ReflectionGroup) -> Value
    where
        R::Elem: std::fmt::Display,
    {
        let dense = |op: &Operator<R::Elem>| -> Vec<Vec<String>> {
            op_to_dense(&self.ring, op, self.dim)
                .into_iter()
                .map(|row| row.iter().map(|x| x.to_string()).collect())
                .collect()
        };
        let gens: Vec<Value> = g
            .generators()
            .iter()
            .map(|&s| json!({"element": g.element_name(s), "matrix": dense(&self.group[s])}))
            .collect();
        let idem: Vec<Value> = self
            .idem
            .iter()
            .enumerate()
            .map(|(i, o)| json!({"hyperplane": i, "matrix": dense(o)}))
            .collect();
        json!({
            "dim": self.dim,
            "basis": self.labels,
            "generators": gens,
            "idempotents": idem,
            "choices": self.choices,
        })
    }
}

impl<R: Ring> LinearModel for MatrixRep<R> {
    type R = R;
    fn ring(&self) -> &R {
        &self.ring
    }
    fn dim(&self) -> usize {
        self.dim
    }
    fn act_basis(&self, g: Gen, b: usize) -> Option<SparseVec<R::Elem>> {
        match g {
            Gen::W(w) => self.group.get(w).map(|op| op[b].clone()),
            Gen::E(i) => self.idem.get(i).map(|op| op[b].clone()),
            _ => None,
        }
    }
}

/// Permutation operator sending basis b to `perm[b]`.
fn permutation<R: Ring>(ring: &R, perm: impl Iterator<Item = usize>) -> Operator<R::Elem> {
    perm.map(|t| SparseVec::unit(ring, t)).collect()
}

/// The representation on V_G = span{v_i}: w permutes hyperplanes and
/// e_i acts as p_i, with p_i v_i = tau v_i and p_i v_j = alpha_{i,j} v_i.
pub fn lk_rep<R: Ring>(g: &ReflectionGroup, ring: &R, values: &Evaluated<R::Elem>) -> MatrixRep<R> {
    let nh = g.num_hyperplanes();
    let group = (0..g.order())
        .map(|w| permutation(ring, (0..nh).map(|i| g.act_hyp(w, i))))
        .collect();
    let idem = (0..nh)
        .map(|i| {
            (0..nh)
                .map(|j| {
                    let c = if i == j {
                        values.tau[g.orbit_of(i)].clone()
                    } else {
                        lk_alpha(g, ring, values, i, j)
                    };
                    let mut col = SparseVec::new();
                    col.add_term(ring, i, c);
                    col
                })
                .collect()
        })
        .collect();
    let labels = (0..nh).map(|i| format!("v{}", i)).collect();
    MatrixRep::new(ring.clone(), group, idem, labels).with_lines((0..nh).map(Some).collect())
}

/// alpha_{i,j}: sum of mu_s over pseudo-reflections s with s(H_j) = H_i.
pub fn lk_alpha<R: Ring>(g: &ReflectionGroup, ring: &R, values: &Evaluated<R::Elem>, i: usize, j: usize) -> R::Elem {
    g.reflections()
        .iter()
        .filter(|&&s| g.act_hyp(s, j) == i)
        .fold(ring.zero(), |acc, &s| {
            ring.add(&acc, &values.mu[g.class_of(s).expect("pseudo-reflection")])
        })
}

/// Coordinates of each hyperplane orbit, each checked to span an invariant
/// subspace.
pub fn lk_blocks<R: Ring>(
    rep: &MatrixRep<R>,
    g: &ReflectionGroup,
) -> Result<Vec<(Vec<usize>, MatrixRep<R>)>, RepError> {
    g.orbits()
        .iter()
        .map(|orbit| {
            let mut keep = orbit.clone();
            keep.sort_unstable();
            rep.restrict(&keep).map(|sub| (keep, sub))
        })
        .collect()
}

/// Left regular representation of the group algebra.
pub fn group_regular<R: Ring>(g: &ReflectionGroup, ring: &R) -> MatrixRep<R> {
    let n = g.order();
    let group = (0..n).map(|w| permutation(ring, (0..n).map(|x| g.mul(w, x)))).collect();
    MatrixRep::new(
        ring.clone(),
        group,
        Vec::new(),
        (0..n).map(|w| g.element_name(w)).collect(),
    )
}

/// Left regular representation of an algebra given as a linear model on
/// itself (group elements as `W`, idempotents as `E`).
pub fn algebra_regular<M: LinearModel>(model: &M, g: &ReflectionGroup, labels: Vec<String>) -> MatrixRep<M::R> {
    use rayon::prelude::*;
    let d = model.dim();
    let build = |x: Gen| -> Operator<<M::R as Ring>::Elem> {
        (0..d)
            .into_par_iter()
            .map(|b| model.act_basis(x, b).expect("model interprets the generator"))
            .collect()
    };
    let group = (0..g.order()).map(|w| build(Gen::W(w))).collect();
    let idem = (0..g.num_hyperplanes()).map(|i| build(Gen::E(i))).collect();
    MatrixRep::new(model.ring().clone(), group, idem, labels)
}

/// The matrix (m_{p,q}) with e acting on v_q as m_{p,q} v_p, p the image
/// line. Idempotents sharing a line must agree.
#[derive(Debug, Clone)]
pub struct MMatrix {
    pub entries: Matrix<ParamPoly>,
    pub det: ParamPoly,
}

impl MMatrix {
    pub fn to_json(&self) -> Value {
        json!({
            "entries": self.entries.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "det": self.det.to_string(),
        })
    }
}

pub fn m_matrix(rep: &MatrixRep<PolyRing>) -> Result<MMatrix, RepError> {
    let ring = rep.ring();
    let d = rep.dim();
    let mut rows: Vec<Option<Vec<ParamPoly>>> = vec![None; d];
    for (i, op) in rep.idem.iter().enumerate() {
        let line = rep.lines.get(i).copied().flatten().ok_or(RepError::NotRankOne(i))?;
        let mut row = vec![ring.zero(); d];
        for (q, col) in op.iter().enumerate() {
            for (&p, x) in col {
                if p != line {
                    return Err(RepError::NotRankOne(i));
                }
                row[q] = x.clone();
            }
        }
        match &rows[line] {
            Some(old) if *old != row => return Err(RepError::NotRankOne(i)),
            _ => rows[line] = Some(row),
        }
    }
    let entries: Matrix<ParamPoly> = rows
        .into_iter()
        .enumerate()
        .map(|(p, r)| r.ok_or(RepError::NotRankOne(p)))
        .collect::<Result<_, _>>()?;
    let det = det_poly(ring, &entries)?;
    Ok(MMatrix { entries, det })
}

/// Dimension of the algebra spanned by products of the given operators
/// (and the identity), over a prime field.
pub fn generated_algebra_dim(f: &ModP, gens: &[Operator<u64>], dim: usize) -> usize {
    // echelon rows with their pivot column, pivots normalized to 1
    let mut echelon: Vec<(usize, Vec<u64>)> = Vec::new();
    let mut frontier = vec![op_identity(f, dim)];
    while let Some(x) = frontier.pop() {
        let mut v: Vec<u64> = op_to_dense(f, &x, dim).into_iter().flatten().collect();
        for (col, row) in &echelon {
            let c = v[*col];
            if c != 0 {
                for (a, b) in v.iter_mut().zip(row) {
                    *a = f.sub(a, &f.mul(&c, b));
                }
            }
        }
        let Some(col) = v.iter().position(|&a| a != 0) else {
            continue;
        };
        let inv = f.inv(&v[col]).expect("nonzero pivot");
        v.iter_mut().for_each(|a| *a = f.mul(a, &inv));
        echelon.push((col, v));
        if echelon.len() == dim * dim {
            break;
        }
        frontier.extend(gens.iter().map(|g| op_compose(f, g, &x)));
    }
    echelon.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ParamSet;
    use crate::refgroups::{build_dihedral, build_type_a};

    #[test]
    fn lk_dihedral5_m_matrix() {
        let g = build_dihedral(5).unwrap();
        let p = ParamSet::unit_mu(&g);
        let ring = p.ring();
        let rep = lk_rep(&g, &ring, &p.symbolic_values());
        let m = m_matrix(&rep).unwrap();
        let tau = ring.var("tau").unwrap();
        let t1 = ring.sub(&tau, &ring.one());
        let want = ring.mul(&ring.pow(&t1, 4), &ring.add(&tau, &ring.from_int(4)));
        assert_eq!(m.det, want);
    }

    #[test]
    fn lk_a2_alpha_is_mu() {
        let g = build_type_a(3).unwrap();
        let p = ParamSet::symbolic(&g);
        let ring = p.ring();
        let v = p.symbolic_values();
        let mu = ring.var("mu").unwrap();
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    assert_eq!(lk_alpha(&g, &ring, &v, i, j), mu);
                }
            }
        }
    }
}
