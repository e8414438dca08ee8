//! KZ-type connections sum X_i w_i inside a concrete representation, with
//! Kohno's flatness test on codimension-2 edges and the G-invariance test.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::Evaluated;
use crate::exactnum::{rank, Ring, SparseVec, SparseVecExt};
use crate::refgroups::{EdgeReport, ReflectionGroup};
use crate::reps::{op_compose, MatrixRep, Operator};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConnectionError {
    #[error("representation has no matrix for {0}")]
    MissingGenerator(String),
    #[error("representation dimension {dim} is not the number of hyperplanes {hyperplanes}")]
    NotLk { dim: usize, hyperplanes: usize },
    #[error("hyperplane {0} contains the intersection of the kept set but is not kept")]
    NotClosed(usize),
    #[error("hyperplane {0} is not in the family")]
    UnknownHyperplane(usize),
}

/// Which coefficient formula: group only, group minus e_i, or the
/// Lawrence-Krammer form iota(s) - p_i.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ConnectionKind {
    Bmr,
    Bgu,
    Lk,
}

impl std::str::FromStr for ConnectionKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "bmr" => Ok(ConnectionKind::Bmr),
            "bgu" => Ok(ConnectionKind::Bgu),
            "lk" => Ok(ConnectionKind::Lk),
            other => Err(format!("unknown connection kind {}", other)),
        }
    }
}

/// Coefficients X_i keyed by hyperplane index, and the edges of the
/// arrangement they live on (each edge given by the kept hyperplanes
/// containing it, tagged with its index in the full arrangement).
#[derive(Debug, Clone)]
pub struct ConnectionFamily<R: Ring> {
    ring: R,
    dim: usize,
    pub kind: ConnectionKind,
    ops: BTreeMap<usize, Operator<R::Elem>>,
    edges: Vec<(usize, Vec<usize>)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlatViolation {
    pub edge: usize,
    pub i: usize,
    pub nonzero_entries: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct FlatReport {
    pub edges_checked: usize,
    pub pairs_checked: usize,
    pub violations: Vec<FlatViolation>,
}

impl FlatReport {
    pub fn flat(&self) -> bool {
        self.violations.is_empty()
    }
    pub fn to_json(&self) -> Value {
        json!({"flat": self.flat(), "edges_checked": self.edges_checked, "pairs_checked": self.pairs_checked, "violations": self.violations})
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InvarianceReport {
    pub checks: usize,
    /// (generator position, hyperplane)
    pub violations: Vec<(usize, usize)>,
}

impl InvarianceReport {
    pub fn invariant(&self) -> bool {
        self.violations.is_empty()
    }
}

fn lincomb<R: Ring>(ring: &R, dim: usize, terms: &[(R::Elem, &Operator<R::Elem>)]) -> Operator<R::Elem> {
    (0..dim)
        .map(|b| {
            let mut col = SparseVec::new();
            for (c, op) in terms {
                col.add_scaled(ring, c, &op[b]);
            }
            col
        })
        .collect()
}

fn nonzeros<E>(op: &Operator<E>) -> usize {
    op.iter().map(|c| c.len()).sum()
}

/// `a*b - b*a`.
fn commutator<R: Ring>(ring: &R, a: &Operator<R::Elem>, b: &Operator<R::Elem>) -> Operator<R::Elem> {
    let ab = op_compose(ring, a, b);
    let ba = op_compose(ring, b, a);
    let minus = ring.neg(&ring.one());
    ab.into_iter()
        .zip(&ba)
        .map(|(mut col, other)| {
            col.add_scaled(ring, &minus, other);
            col
        })
        .collect()
}

/// Builds X_i = sum over pseudo-reflections s at H_i of mu_s rho(s), minus
/// rho(e_i) for `Bgu` and `Lk`.
pub fn assemble<R: Ring>(
    kind: ConnectionKind,
    g: &ReflectionGroup,
    values: &Evaluated<R::Elem>,
    rep: &MatrixRep<R>,
) -> Result<ConnectionFamily<R>, ConnectionError> {
    let ring = rep.ring();
    let dim = rep.dim();
    let nh = g.num_hyperplanes();
    if kind == ConnectionKind::Lk && dim != nh {
        return Err(ConnectionError::NotLk { dim, hyperplanes: nh });
    }
    let minus = ring.neg(&ring.one());
    let mut ops = BTreeMap::new();
    for i in 0..nh {
        let mut terms: Vec<(R::Elem, &Operator<R::Elem>)> = g
            .reflections_at(i)
            .iter()
            .map(|&s| {
                (
                    values.mu[g.class_of(s).expect("pseudo-reflection")].clone(),
                    rep.group_op(s),
                )
            })
            .collect();
        if kind != ConnectionKind::Bmr {
            let e = rep
                .idem_op(i)
                .ok_or_else(|| ConnectionError::MissingGenerator(format!("e{}", i)))?;
            terms.push((minus.clone(), e));
        }
        ops.insert(i, lincomb(ring, dim, &terms));
    }
    let edges = EdgeReport::classify(g)
        .edges()
        .iter()
        .enumerate()
        .map(|(k, e)| (k, e.hyps.clone()))
        .collect();
    Ok(ConnectionFamily {
        ring: ring.clone(),
        dim,
        kind,
        ops,
        edges,
    })
}

impl<R: Ring> ConnectionFamily<R> {
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn hyperplanes(&self) -> Vec<usize> {
        self.ops.keys().copied().collect()
    }
    pub fn op(&self, i: usize) -> Option<&Operator<R::Elem>> {
        self.ops.get(&i)
    }
    pub fn edges(&self) -> &[(usize, Vec<usize>)] {
        &self.edges
    }

    /// For every edge L and i in I_L, [X_i, sum_{j in I_L} X_j] = 0.
    pub fn check_flat(&self) -> FlatReport {
        let pairs: Vec<(usize, usize)> = self
            .edges
            .iter()
            .enumerate()
            .flat_map(|(pos, (_, hyps))| hyps.iter().map(move |&i| (pos, i)))
            .collect();
        let sums: Vec<Operator<R::Elem>> = self
            .edges
            .iter()
            .map(|(_, hyps)| {
                let one = self.ring.one();
                let terms: Vec<_> = hyps.iter().map(|j| (one.clone(), &self.ops[j])).collect();
                lincomb(&self.ring, self.dim, &terms)
            })
            .collect();
        let violations = pairs
            .par_iter()
            .filter_map(|&(pos, i)| {
                let c = commutator(&self.ring, &self.ops[&i], &sums[pos]);
                let n = nonzeros(&c);
                (n > 0).then(|| FlatViolation {
                    edge: self.edges[pos].0,
                    i,
                    nonzero_entries: n,
                })
            })
            .collect();
        FlatReport {
            edges_checked: self.edges.len(),
            pairs_checked: pairs.len(),
            violations,
        }
    }

    /// rho(s) X_i = X_{s(i)} rho(s) for each generator s and kept i.
    pub fn check_invariant(&self, g: &ReflectionGroup, rep: &MatrixRep<R>) -> InvarianceReport {
        let mut checks = 0;
        let mut violations = Vec::new();
        for (k, &s) in g.generators().iter().enumerate() {
            let rs = rep.group_op(s);
            for (&i, x) in &self.ops {
                checks += 1;
                let ok = self
                    .ops
                    .get(&g.act_hyp(s, i))
                    .is_some_and(|y| op_compose(&self.ring, rs, x) == op_compose(&self.ring, y, rs));
                if !ok {
                    violations.push((k, i));
                }
            }
        }
        InvarianceReport { checks, violations }
    }

    /// Sub-family on `keep`, which must contain every hyperplane containing
    /// the common intersection of the kept ones. Edges are cut down to the
    /// kept hyperplanes.
    pub fn restrict(&self, g: &ReflectionGroup, keep: &[usize]) -> Result<Self, ConnectionError> {
        for &i in keep {
            if !self.ops.contains_key(&i) {
                return Err(ConnectionError::UnknownHyperplane(i));
            }
        }
        let forms: Vec<Vec<_>> = keep.iter().map(|&i| g.form(i).to_vec()).collect();
        let base = rank(g.field(), &forms);
        for &k in self.ops.keys() {
            if keep.contains(&k) {
                continue;
            }
            let mut with = forms.clone();
            with.push(g.form(k).to_vec());
            if rank(g.field(), &with) == base {
                return Err(ConnectionError::NotClosed(k));
            }
        }
        let ops = self
            .ops
            .iter()
            .filter(|(i, _)| keep.contains(i))
            .map(|(&i, x)| (i, x.clone()))
            .collect();
        let edges = self
            .edges
            .iter()
            .filter_map(|(id, hyps)| {
                let kept: Vec<usize> = hyps.iter().copied().filter(|h| keep.contains(h)).collect();
                (kept.len() >= 2).then_some((*id, kept))
            })
            .collect();
        Ok(ConnectionFamily {
            ring: self.ring.clone(),
            dim: self.dim,
            kind: self.kind,
            ops,
            edges,
        })
    }

    /// All X_i multiplied by the same constant.
    pub fn scaled(&self, c: &R::Elem) -> Self {
        let mut out = self.clone();
        for x in out.ops.values_mut() {
            for col in x.iter_mut() {
                *col = col
                    .iter()
                    .filter_map(|(&r, v)| {
                        let y = self.ring.mul(c, v);
                        (!self.ring.is_zero(&y)).then_some((r, y))
                    })
                    .collect();
            }
        }
        out
    }

    /// Adds `delta` to entry (row, col) of X_i.
    pub fn perturbed(&self, i: usize, row: usize, col: usize, delta: &R::Elem) -> Result<Self, ConnectionError> {
        let mut out = self.clone();
        let x = out.ops.get_mut(&i).ok_or(ConnectionError::UnknownHyperplane(i))?;
        x[col].add_term(&self.ring, row, delta.clone());
        Ok(out)
    }

    /// X_i and X_j exchanged.
    pub fn swapped(&self, i: usize, j: usize) -> Result<Self, ConnectionError> {
        let mut out = self.clone();
        let xi = out.ops.remove(&i).ok_or(ConnectionError::UnknownHyperplane(i))?;
        let xj = out.ops.remove(&j).ok_or(ConnectionError::UnknownHyperplane(j))?;
        out.ops.insert(i, xj);
        out.ops.insert(j, xi);
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ParamSet;
    use crate::exactnum::ModP;
    use crate::refgroups::build_dihedral;
    use crate::reps::{group_regular, lk_rep};

    #[test]
    fn bmr_on_dihedral_regular_is_reflection() {
        let g = build_dihedral(5).unwrap();
        let f = ModP::new(101);
        let rep = group_regular(&g, &f);
        let values = Evaluated {
            mu: vec![1],
            tau: vec![3],
        };
        let c = assemble(ConnectionKind::Bmr, &g, &values, &rep).unwrap();
        let s = g.reflections_at(0)[0];
        assert_eq!(c.op(0).unwrap(), rep.group_op(s));
        assert!(c.check_flat().flat());
        assert!(c.check_invariant(&g, &rep).invariant());
    }

    #[test]
    fn lk_needs_hyperplane_sized_rep() {
        let g = build_dihedral(3).unwrap();
        let p = ParamSet::unit_mu(&g);
        let ring = p.ring();
        let rep = lk_rep(&g, &ring, &p.symbolic_values());
        assert!(assemble(ConnectionKind::Lk, &g, &p.symbolic_values(), &rep).is_ok());
        let f = ModP::new(101);
        let reg = group_regular(&g, &f);
        let values = Evaluated {
            mu: vec![1],
            tau: vec![3],
        };
        assert!(matches!(
            assemble(ConnectionKind::Lk, &g, &values, &reg),
            Err(ConnectionError::NotLk { .. })
        ));
    }
}
