//! Cell data for the dihedral and H3 algebras over Z/p at a fixed tau, and
//! a verifier for the three cellularity axioms against the normal-form
//! engine.

mod group;

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

pub use group::{exponent, group_cells, GroupCell};

use crate::algebra::{star, BrauerTypeAlgebra, EngineError, Gen, LinearModel, NormalWord};
use crate::exactnum::{Field, ModP, Ring, SparseVec, SparseVecExt};
use crate::refgroups::{DihedralElem, GroupKind};
use crate::reps::{H3Data, MatrixRep, Operator, RepError};

#[derive(Debug, Error)]
pub enum CellError {
    #[error("no cell datum for {0}")]
    Unsupported(String),
    #[error("group algebra datum: {0}")]
    GroupDatum(String),
    #[error("unknown cell {0}")]
    UnknownCell(String),
    #[error("cell basis has rank {rank} < {dim}")]
    NotBasis { rank: usize, dim: usize },
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Rep(#[from] RepError),
}

type Vector = SparseVec<u64>;

#[derive(Debug, Clone)]
pub struct Cell {
    pub name: String,
    /// labels of M(lambda)
    pub index: Vec<String>,
    /// `elems[s][t]` is C_{s,t} in engine coordinates
    pub elems: Vec<Vec<Vector>>,
}

impl Cell {
    pub fn size(&self) -> usize {
        self.index.len()
    }
}

/// Cells with a strict order `lower[b]` (cells strictly below b).
#[derive(Debug, Clone)]
pub struct CellDatum {
    pub cells: Vec<Cell>,
    pub lower: Vec<Vec<usize>>,
    pub tau: u64,
}

impl CellDatum {
    pub fn sum_squares(&self) -> usize {
        self.cells.iter().map(|c| c.size() * c.size()).sum()
    }
    pub fn cell_index(&self, name: &str) -> Option<usize> {
        self.cells.iter().position(|c| c.name == name)
    }
    pub fn below(&self, a: usize, b: usize) -> bool {
        self.lower[b].contains(&a)
    }
    pub fn to_json(&self) -> Value {
        let cells: Vec<Value> = self
            .cells
            .iter()
            .enumerate()
            .map(|(k, c)| {
                json!({
                    "name": c.name,
                    "size": c.size(),
                    "below": self.lower[k].iter().map(|&l| self.cells[l].name.clone()).collect::<Vec<_>>(),
                })
            })
            .collect();
        json!({"tau": self.tau, "cells": cells, "sum_squares": self.sum_squares()})
    }
}

fn nf(alg: &BrauerTypeAlgebra<ModP>, word: &[Gen]) -> Vector {
    alg.normal_form(word).expect("engine interprets W and E")
}

fn group_basis(alg: &BrauerTypeAlgebra<ModP>, w: usize) -> usize {
    alg.index_of(&NormalWord::Group(w))
        .expect("group elements are basis words")
}

/// The datum: group-algebra cells on top (pairwise incomparable), the
/// idempotent cells below them.
pub fn build_cell_datum(alg: &BrauerTypeAlgebra<ModP>) -> Result<CellDatum, CellError> {
    let g = alg.group();
    let f = *alg.ring();
    let tau = alg.values().tau.first().copied().unwrap_or(0);
    let mut lower_cells: Vec<Cell> = Vec::new();
    // strictly-lower relation among the idempotent cells, by position
    let mut lower_order: Vec<Vec<usize>> = Vec::new();
    match *g.kind() {
        GroupKind::Dihedral { m } => {
            let s = |k: u32| DihedralElem::S(k % m).index(m);
            let e = |k: u32| g.hyperplane_of(s(k)).expect("reflection");
            if m % 2 == 1 {
                let elems = (0..m)
                    .map(|i| {
                        (0..m)
                            .map(|j| {
                                let k = if (i + j) % 2 == 0 { (i + j) / 2 } else { (i + j + m) / 2 };
                                nf(alg, &[Gen::W(s(k)), Gen::E(e(j))])
                            })
                            .collect()
                    })
                    .collect();
                lower_cells.push(Cell {
                    name: "LK".into(),
                    index: (0..m).map(|i| i.to_string()).collect(),
                    elems,
                });
                lower_order.push(Vec::new());
            } else {
                let k = m / 2;
                let half = f.inv(&2).expect("odd prime");
                for parity in 0..2u32 {
                    let elems = (0..k)
                        .map(|i| {
                            (0..k)
                                .map(|j| {
                                    let a = nf(alg, &[Gen::W(s(i + j + parity)), Gen::E(e(2 * j + parity))]);
                                    let b = nf(alg, &[Gen::W(s(i + j + k + parity)), Gen::E(e(2 * j + parity))]);
                                    let mut v = Vector::new();
                                    v.add_scaled(&f, &half, &a);
                                    v.add_scaled(&f, &half, &b);
                                    v
                                })
                                .collect()
                        })
                        .collect();
                    lower_cells.push(Cell {
                        name: format!("LK{}", parity),
                        index: (0..k).map(|i| i.to_string()).collect(),
                        elems,
                    });
                    lower_order.push(Vec::new());
                }
            }
        }
        _ => {
            let data = H3Data::new(g).map_err(|_| CellError::Unsupported(g.name().to_string()))?;
            let nh = g.num_hyperplanes();
            // the s_0-free half of G_0: 1, c, s_2, s_2 c
            let j_terms: Vec<usize> = data.g0.iter().take(4).map(|x| x.0).collect();
            for alpha in 0..4 {
                let elems = (0..nh)
                    .map(|i| {
                        (0..nh)
                            .map(|j| {
                                let mut v = Vector::new();
                                for &u in &j_terms {
                                    let sign = f.from_int(data.sigma(alpha, u).expect("u in G_0"));
                                    let wi_u = g.mul(data.coset_reps[i], u);
                                    let term = nf(
                                        alg,
                                        &[Gen::W(wi_u), Gen::E(data.h0), Gen::W(g.inverse(data.coset_reps[j]))],
                                    );
                                    v.add_scaled(&f, &sign, &term);
                                }
                                v
                            })
                            .collect()
                    })
                    .collect();
                lower_cells.push(Cell {
                    name: format!("lambda{}", alpha),
                    index: (0..nh).map(|i| format!("H{}", i)).collect(),
                    elems,
                });
            }
            let k = data.classes.len();
            let elems = (0..k)
                .map(|beta| {
                    (0..k)
                        .map(|alpha| {
                            let cl = &data.classes[alpha];
                            nf(
                                alg,
                                &[Gen::W(data.transporter[alpha][beta]), Gen::E(cl[0]), Gen::E(cl[1])],
                            )
                        })
                        .collect()
                })
                .collect();
            lower_cells.push(Cell {
                name: "lambda4".into(),
                index: (0..k).map(|b| format!("R{}", b)).collect(),
                elems,
            });
            lower_order = vec![vec![4], vec![4], vec![4], vec![4], Vec::new()];
        }
    }
    let base = group_cells(g, f)?;
    let n_low = lower_cells.len();
    let mut cells = lower_cells;
    let mut lower = lower_order;
    for (k, gc) in base.iter().enumerate() {
        let elems = gc
            .elems
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| {
                        x.iter()
                            .enumerate()
                            .filter(|p| *p.1 != 0)
                            .map(|(w, &c)| (group_basis(alg, w), c))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        cells.push(Cell {
            name: format!("G{}_{}", k, gc.dim),
            index: (0..gc.dim).map(|i| i.to_string()).collect(),
            elems,
        });
        lower.push((0..n_low).collect());
    }
    Ok(CellDatum { cells, lower, tau })
}

/// Dense inverse by Gauss-Jordan; `Err(rank)` if singular. Returns the
/// columns of the inverse.
fn inverse_columns(f: &ModP, cols: &[Vector], n: usize) -> Result<Vec<Vec<u64>>, usize> {
    // rows of [M | I], M having `cols` as columns
    let mut rows: Vec<Vec<u64>> = vec![vec![0; 2 * n]; n];
    for (c, col) in cols.iter().enumerate() {
        for (&r, &x) in col {
            rows[r][c] = x;
        }
    }
    for (r, row) in rows.iter_mut().enumerate() {
        row[n + r] = 1;
    }
    let mut rank = 0;
    for c in 0..n {
        let Some(p) = (rank..n).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = f.inv(&rows[rank][c]).expect("pivot");
        rows[rank].iter_mut().for_each(|x| *x = f.mul(x, &inv));
        let pivot_row = rows[rank].clone();
        rows.par_iter_mut().enumerate().for_each(|(r, row)| {
            let k = row[c];
            if r != rank && k != 0 {
                for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                    if *y != 0 {
                        *x = f.sub(x, &f.mul(&k, y));
                    }
                }
            }
        });
        rank += 1;
    }
    if rank < n {
        return Err(rank);
    }
    Ok((0..n).map(|j| rows.iter().map(|row| row[n + j]).collect()).collect())
}

/// Coordinates of engine vectors in the cell basis.
pub struct CellCoords {
    f: ModP,
    /// flat position of each (cell, s, t)
    offsets: Vec<usize>,
    inverse: Vec<Vec<u64>>,
}

impl CellCoords {
    /// `Err(rank)` when the cell elements are not a basis.
    pub fn new(d: &CellDatum, f: ModP, dim: usize) -> Result<Self, usize> {
        let mut offsets = Vec::new();
        let mut cols = Vec::new();
        for c in &d.cells {
            offsets.push(cols.len());
            for row in &c.elems {
                cols.extend(row.iter().cloned());
            }
        }
        if cols.len() != dim {
            return Err(cols.len().min(dim));
        }
        let inverse = inverse_columns(&f, &cols, dim)?;
        Ok(CellCoords { f, offsets, inverse })
    }

    pub fn coords(&self, v: &Vector) -> Vec<u64> {
        let n = self.inverse.len();
        let mut out = vec![0; n];
        for (&r, c) in v {
            for (o, x) in out.iter_mut().zip(&self.inverse[r]) {
                if *x != 0 {
                    *o = self.f.add(o, &self.f.mul(c, x));
                }
            }
        }
        out
    }

    /// Cells carrying a nonzero coordinate of `v`.
    pub fn support(&self, d: &CellDatum, v: &Vector) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .coords(v)
            .iter()
            .enumerate()
            .filter(|p| *p.1 != 0)
            .map(|(pos, _)| self.locate(d, pos).0)
            .collect();
        out.dedup();
        out
    }

    /// (cell, s, t) of a flat position.
    pub fn locate(&self, d: &CellDatum, pos: usize) -> (usize, usize, usize) {
        let cell = self.offsets.partition_point(|&o| o <= pos) - 1;
        let k = d.cells[cell].size();
        let local = pos - self.offsets[cell];
        (cell, local / k, local % k)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct C3Failure {
    pub generator: String,
    pub cell: String,
    pub s: usize,
    pub t: usize,
    pub kind: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct CellReport {
    pub dim: usize,
    pub sum_squares: usize,
    pub c1_rank: usize,
    pub c1: bool,
    pub c2_failures: Vec<(String, usize, usize)>,
    pub c3_checked: usize,
    pub c3_failures: Vec<C3Failure>,
}

impl CellReport {
    pub fn c2(&self) -> bool {
        self.c2_failures.is_empty()
    }
    pub fn c3(&self) -> bool {
        self.c1 && self.c3_failures.is_empty()
    }
    pub fn passed(&self) -> bool {
        self.c1 && self.c2() && self.c3() && self.sum_squares == self.dim
    }
    pub fn to_json(&self) -> Value {
        json!({
            "dim": self.dim,
            "sum_squares": self.sum_squares,
            "C1": {"pass": self.c1, "rank": self.c1_rank},
            "C2": {"pass": self.c2(), "failures": self.c2_failures.iter().take(20).collect::<Vec<_>>()},
            "C3": {"pass": self.c3(), "checked": self.c3_checked, "failures": self.c3_failures.iter().take(20).collect::<Vec<_>>(), "failure_count": self.c3_failures.len()},
            "cellular": self.passed(),
        })
    }
}

/// Simple reflections and every e_i.
fn generators(alg: &BrauerTypeAlgebra<ModP>) -> Vec<Gen> {
    let g = alg.group();
    let mut out: Vec<Gen> = g.generators().iter().map(|&s| Gen::W(s)).collect();
    out.extend((0..g.num_hyperplanes()).map(Gen::E));
    out
}

pub fn verify_cellular(d: &CellDatum, alg: &BrauerTypeAlgebra<ModP>) -> CellReport {
    let f = *alg.ring();
    let dim = alg.dim();
    let c2_failures = d
        .cells
        .par_iter()
        .flat_map(|c| {
            let k = c.size();
            (0..k)
                .flat_map(|s| (0..k).map(move |t| (s, t)))
                .filter(|&(s, t)| star(alg, &c.elems[s][t]) != c.elems[t][s])
                .map(|(s, t)| (c.name.clone(), s, t))
                .collect::<Vec<_>>()
        })
        .collect();
    let coords = match CellCoords::new(d, f, dim) {
        Ok(c) => c,
        Err(rank) => {
            return CellReport {
                dim,
                sum_squares: d.sum_squares(),
                c1_rank: rank,
                c1: false,
                c2_failures,
                c3_checked: 0,
                c3_failures: Vec::new(),
            }
        }
    };
    let gens = generators(alg);
    let tasks: Vec<(Gen, usize, usize)> = gens
        .iter()
        .flat_map(|&a| (0..d.cells.len()).flat_map(move |c| (0..d.cells[c].size()).map(move |s| (a, c, s))))
        .collect();
    let c3_checked = tasks.iter().map(|&(_, c, _)| d.cells[c].size()).sum();
    let c3_failures = tasks
        .par_iter()
        .flat_map(|&(a, c, s)| c3_row(d, alg, &coords, a, c, s))
        .collect();
    CellReport {
        dim,
        sum_squares: d.sum_squares(),
        c1_rank: dim,
        c1: true,
        c2_failures,
        c3_checked,
        c3_failures,
    }
}

/// r_a(., s) from a C_{s,t}; `Err` names the first violation.
fn c3_column(d: &CellDatum, coords: &CellCoords, cell: usize, t: usize, v: &[u64]) -> Result<Vec<u64>, &'static str> {
    let k = d.cells[cell].size();
    let mut r = vec![0; k];
    for (pos, &x) in v.iter().enumerate().filter(|p| *p.1 != 0) {
        let (c, s2, t2) = coords.locate(d, pos);
        if d.below(c, cell) {
            continue;
        }
        if c != cell {
            return Err("leaks into a cell not below");
        }
        if t2 != t {
            return Err("changes the right index");
        }
        r[s2] = x;
    }
    Ok(r)
}

fn c3_row(
    d: &CellDatum,
    alg: &BrauerTypeAlgebra<ModP>,
    coords: &CellCoords,
    a: Gen,
    cell: usize,
    s: usize,
) -> Vec<C3Failure> {
    let c = &d.cells[cell];
    let fail = |t: usize, kind: &'static str| C3Failure {
        generator: a.to_string(),
        cell: c.name.clone(),
        s,
        t,
        kind,
    };
    let mut out = Vec::new();
    let mut first: Option<Vec<u64>> = None;
    for t in 0..c.size() {
        let v = alg.act(a, &c.elems[s][t]).expect("generator acts");
        match c3_column(d, coords, cell, t, &coords.coords(&v)) {
            Err(kind) => out.push(fail(t, kind)),
            Ok(r) => match &first {
                None => first = Some(r),
                Some(r0) if *r0 != r => out.push(fail(t, "coefficients depend on the right index")),
                Some(_) => {}
            },
        }
    }
    out
}

/// The left cell module of `name`: basis M(lambda), action read off a
/// C_{s,0} modulo lower cells.
pub fn cell_module(d: &CellDatum, alg: &BrauerTypeAlgebra<ModP>, name: &str) -> Result<MatrixRep<ModP>, CellError> {
    let cell = d
        .cell_index(name)
        .ok_or_else(|| CellError::UnknownCell(name.to_string()))?;
    let f = *alg.ring();
    let coords = CellCoords::new(d, f, alg.dim()).map_err(|rank| CellError::NotBasis { rank, dim: alg.dim() })?;
    let c = &d.cells[cell];
    let op = |a: Gen| -> Operator<u64> {
        (0..c.size())
            .map(|s| {
                let v = alg.act(a, &c.elems[s][0]).expect("generator acts");
                let r = c3_column(d, &coords, cell, 0, &coords.coords(&v)).unwrap_or_default();
                r.into_iter()
                    .enumerate()
                    .filter(|p| p.1 != 0)
                    .collect::<BTreeMap<_, _>>()
            })
            .collect()
    };
    let g = alg.group();
    let group = (0..g.order()).into_par_iter().map(|w| op(Gen::W(w))).collect();
    let idem = (0..g.num_hyperplanes())
        .into_par_iter()
        .map(|i| op(Gen::E(i)))
        .collect();
    Ok(MatrixRep::new(f, group, idem, c.index.clone()))
}
