//! Dimension counts, trace-form radicals mod primes, the determinant
//! criterion for generic semisimplicity and Wedderburn accounting.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::{Algebra, BrauerTypeAlgebra, ParamSet};
use crate::exactnum::{det_poly, poly_roots, ExactError, Field, ModP, ParamPoly, Rational, Ring};
use crate::refgroups::{GroupKind, ReflectionGroup};
use crate::reps::{
    generated_algebra_dim, h3_induced_rep, h3_rho4, lk_rep, m_matrix, H3Data, MatrixRep, Operator, RepError,
};

#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error("no criterion for {0}")]
    Unsupported(String),
    #[error("no two primes agree on the Gram rank: {0:?}")]
    NoAgreement(Vec<(u64, usize)>),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

#[derive(Debug, Clone, Serialize)]
pub struct DimensionReport {
    pub group: String,
    pub dim: usize,
    pub by_e_length: BTreeMap<u32, usize>,
    pub expected: Option<usize>,
    pub matches: Option<bool>,
}

fn double_factorial_odd(n: usize) -> usize {
    (1..2 * n).step_by(2).product()
}

pub fn expected_dim(g: &ReflectionGroup) -> Option<usize> {
    match *g.kind() {
        GroupKind::Dihedral { m } => {
            let m = m as usize;
            Some(if m % 2 == 1 { 2 * m + m * m } else { 2 * m + m * m / 2 })
        }
        GroupKind::TypeA { n } => Some(double_factorial_odd(n)),
        GroupKind::Coxeter { .. } if g.order() == 120 && g.rank() == 3 => Some(1045),
        _ => None,
    }
}

pub fn dimension_report<R: Ring>(alg: &BrauerTypeAlgebra<R>) -> DimensionReport {
    let mut by_e_length = BTreeMap::new();
    for b in alg.basis() {
        *by_e_length.entry(b.e_length()).or_insert(0) += 1;
    }
    let dim = alg.basis().len();
    let expected = expected_dim(alg.group());
    DimensionReport {
        group: alg.group().name().to_string(),
        dim,
        by_e_length,
        expected,
        matches: expected.map(|e| e == dim),
    }
}

/// G_{a,b} = trace(L_a L_b) = t(ab), with t(c) the trace of left
/// multiplication by c.
pub fn trace_gram<A: Algebra<R = ModP>>(alg: &A) -> Vec<Vec<u64>> {
    let f = *alg.ring();
    let d = alg.dim();
    let t: Vec<u64> = (0..d)
        .into_par_iter()
        .map(|c| (0..d).fold(0, |acc, b| f.add(&acc, alg.mul_basis(c, b).get(&b).unwrap_or(&0))))
        .collect();
    (0..d)
        .into_par_iter()
        .map(|a| {
            (0..d)
                .map(|b| {
                    alg.mul_basis(a, b)
                        .iter()
                        .fold(0, |acc, (c, x)| f.add(&acc, &f.mul(x, &t[*c])))
                })
                .collect()
        })
        .collect()
}

/// Rank by row reduction, rows eliminated in parallel.
pub fn rank_mod_p_dense(f: &ModP, mut rows: Vec<Vec<u64>>) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = f.inv(&rows[rank][c]).expect("pivot");
        rows[rank].iter_mut().for_each(|x| *x = f.mul(x, &inv));
        let pivot = rows[rank].clone();
        rows[rank + 1..].par_iter_mut().for_each(|row| {
            let k = row[c];
            if k != 0 {
                for (x, y) in row.iter_mut().zip(&pivot).skip(c) {
                    if *y != 0 {
                        *x = f.sub(x, &f.mul(&k, y));
                    }
                }
            }
        });
        rank += 1;
    }
    rank
}

#[derive(Debug, Clone, Serialize)]
pub struct RadicalReport {
    pub dim: usize,
    /// (prime, Gram rank)
    pub ranks: Vec<(u64, usize)>,
    pub radical: usize,
}

impl RadicalReport {
    pub fn semisimple(&self) -> bool {
        self.radical == 0
    }
    pub fn to_json(&self) -> Value {
        json!({"dim": self.dim, "ranks": self.ranks, "radical": self.radical, "semisimple": self.semisimple()})
    }
}

/// Gram ranks of the algebra built mod each prime. The radical is taken
/// from the first two primes that agree; ranks mod p never exceed the
/// characteristic-0 rank.
pub fn radical_rank<A, F>(build: F, primes: &[u64]) -> Result<RadicalReport, AnalysisError>
where
    A: Algebra<R = ModP>,
    F: Fn(ModP) -> Result<A, AnalysisError>,
{
    let mut ranks: Vec<(u64, usize)> = Vec::new();
    for &p in primes {
        let f = ModP::new(p);
        let alg = build(f)?;
        let dim = alg.dim();
        let r = rank_mod_p_dense(&f, trace_gram(&alg));
        if ranks.iter().any(|&(_, q)| q == r) {
            ranks.push((p, r));
            return Ok(RadicalReport {
                dim,
                ranks,
                radical: dim - r,
            });
        }
        ranks.push((p, r));
    }
    Err(AnalysisError::NoAgreement(ranks))
}

/// The determinant criterion: factors det M for each module representation,
/// their product, and the rational roots of the product.
#[derive(Debug, Clone)]
pub struct Criterion {
    pub factors: Vec<(String, ParamPoly)>,
    pub product: ParamPoly,
    /// rational roots with multiplicity, when the product is univariate
    pub roots: Option<Vec<(Rational, u32)>>,
}

impl Criterion {
    pub fn eval(&self, values: &[Rational]) -> Result<Rational, ExactError> {
        self.product.eval_in(&crate::exactnum::Rationals, values)
    }
    pub fn to_json(&self) -> Value {
        json!({
            "factors": self.factors.iter().map(|(n, p)| json!({"rep": n, "det": p.to_string()})).collect::<Vec<_>>(),
            "product_degree": self.product.total_degree(),
            "rational_roots": self.roots.as_ref().map(|r| r.iter().map(|(q, k)| json!({"root": q.to_string(), "multiplicity": k})).collect::<Vec<_>>()),
        })
    }
}

pub fn generic_criterion(g: &ReflectionGroup) -> Result<Criterion, AnalysisError> {
    let params = ParamSet::unit_mu(g);
    let ring = params.ring();
    let mut factors = Vec::new();
    match *g.kind() {
        GroupKind::Dihedral { .. } => {
            let rep = lk_rep(g, &ring, &params.symbolic_values());
            let m = m_matrix(&rep)?;
            for (k, orbit) in g.orbits().iter().enumerate() {
                let mut keep = orbit.clone();
                keep.sort_unstable();
                let block: Vec<Vec<ParamPoly>> = keep
                    .iter()
                    .map(|&i| keep.iter().map(|&j| m.entries[i][j].clone()).collect())
                    .collect();
                factors.push((format!("LK block {}", k), det_poly(&ring, &block)?));
            }
        }
        _ => {
            let data = H3Data::new(g).map_err(|_| AnalysisError::Unsupported(g.name().to_string()))?;
            let tau = ring.var("tau")?;
            for alpha in 0..4 {
                let rep = h3_induced_rep(g, &data, alpha, &ring, &tau)?;
                factors.push((format!("rho{}", alpha), m_matrix(&rep)?.det));
            }
            factors.push(("rho4".to_string(), m_matrix(&h3_rho4(g, &data, &ring, &tau))?.det));
        }
    }
    let product = factors.iter().fold(ring.one(), |acc, (_, p)| ring.mul(&acc, p));
    let roots = if params.vars().len() == 1 {
        Some(rational_roots(&product)?)
    } else {
        None
    };
    Ok(Criterion {
        factors,
        product,
        roots,
    })
}

/// 2^61 - 1.
const RECON_PRIME: u64 = 2_305_843_009_213_693_951;

/// n/d with |n|, d below sqrt(p/2) and n = a d mod p, if one exists.
fn reconstruct(a: u64, p: u64) -> Option<Rational> {
    let bound = ((p / 2) as f64).sqrt() as i128;
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 >= bound {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if t1 == 0 || t1.abs() >= bound {
        return None;
    }
    let (n, d) = if t1 < 0 { (-r1, -t1) } else { (r1, t1) };
    Some(Rational::new(BigInt::from(n), BigInt::from(d)))
}

/// Rational roots of a univariate polynomial (found mod a large prime and
/// confirmed by exact division), with multiplicities. Roots of height
/// above ~10^9 are missed.
pub fn rational_roots(poly: &ParamPoly) -> Result<Vec<(Rational, u32)>, ExactError> {
    let vars = poly.vars().clone();
    let coeffs = poly.univariate_coeffs(0).unwrap_or_default();
    let f = ModP::new(RECON_PRIME);
    let reduced: Vec<u64> = coeffs.iter().map(|c| f.from_rational(c)).collect::<Result<_, _>>()?;
    let x = ParamPoly::var_at(&vars, 0);
    let mut out = Vec::new();
    for r in poly_roots(&f, &reduced) {
        let Some(q) = reconstruct(r, RECON_PRIME) else {
            continue;
        };
        let lin = x.try_sub(&ParamPoly::constant(&vars, q.clone()))?;
        let mut rest = poly.clone();
        let mut mult = 0;
        while !rest.is_zero() {
            match rest.div_exact(&lin) {
                Ok(next) => {
                    rest = next;
                    mult += 1;
                }
                Err(_) => break,
            }
        }
        if mult > 0 {
            out.push((q, mult));
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct WedderburnAccount {
    pub dim: usize,
    pub group_part: usize,
    /// (name, dimension, generated-algebra dimension)
    pub reps: Vec<(String, usize, usize)>,
    pub total: usize,
    pub matches: bool,
    pub note: &'static str,
}

/// |G| for the group algebra (split over the working field) plus dim^2 for
/// each supplied representation, each checked to generate its full
/// endomorphism algebra.
pub fn wedderburn_account(
    alg_dim: usize,
    g: &ReflectionGroup,
    reps: &[(String, &MatrixRep<ModP>)],
) -> WedderburnAccount {
    let rows: Vec<(String, usize, usize)> = reps
        .iter()
        .map(|(name, rep)| {
            let mut gens: Vec<Operator<u64>> = g.generators().iter().map(|&s| rep.group_op(s).clone()).collect();
            gens.extend((0..g.num_hyperplanes()).filter_map(|i| rep.idem_op(i).cloned()));
            let generated = generated_algebra_dim(rep.ring(), &gens, rep.dim());
            (name.clone(), rep.dim(), generated)
        })
        .collect();
    let total = g.order() + rows.iter().map(|r| r.1 * r.1).sum::<usize>();
    let all_irreducible = rows.iter().all(|r| r.2 == r.1 * r.1);
    WedderburnAccount {
        dim: alg_dim,
        group_part: g.order(),
        total,
        matches: total == alg_dim && all_irreducible,
        note: "group algebra counted as |G|, assuming a splitting field",
        reps: rows,
    }
}

/// Sampled tau values avoiding the given roots.
pub fn non_roots(roots: &[(Rational, u32)], count: usize) -> Vec<Rational> {
    let mut out = Vec::new();
    let mut k: i64 = 5;
    while out.len() < count {
        let q = Rational::new(BigInt::from(2 * k + 1), BigInt::from(3));
        if !roots.iter().any(|(r, _)| *r == q) && !q.is_zero() && !q.is_negative() {
            out.push(q);
        }
        k += 7;
    }
    out
}
