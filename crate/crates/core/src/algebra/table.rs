//! Finite-dimensional algebras given by a basis and a way to multiply basis
//! elements, plus the generic checks run on them.

use rayon::prelude::*;
use serde_json::{json, Value};

use super::relations::{Gen, LinearModel};
use crate::exactnum::{ParamPoly, Ring, SparseVec, SparseVecExt};

pub type Elem<A> = SparseVec<<<A as Algebra>::R as Ring>::Elem>;

pub trait Algebra: Sync {
    type R: Ring;
    fn ring(&self) -> &Self::R;
    fn dim(&self) -> usize;
    fn label(&self, b: usize) -> String;
    fn unit(&self) -> Elem<Self>;
    fn mul_basis(&self, a: usize, b: usize) -> Elem<Self>;
    /// Image of a presentation generator.
    fn gen_image(&self, g: Gen) -> Option<Elem<Self>>;
}

pub fn mul<A: Algebra + ?Sized>(alg: &A, x: &Elem<A>, y: &Elem<A>) -> Elem<A> {
    let ring = alg.ring();
    let mut out = SparseVec::new();
    for (&a, ca) in x {
        for (&b, cb) in y {
            let c = ring.mul(ca, cb);
            out.add_scaled(ring, &c, &alg.mul_basis(a, b));
        }
    }
    out
}

/// The left regular module of an algebra.
pub struct Regular<'a, A: Algebra>(pub &'a A);

impl<A: Algebra> LinearModel for Regular<'_, A> {
    type R = A::R;
    fn ring(&self) -> &A::R {
        self.0.ring()
    }
    fn dim(&self) -> usize {
        self.0.dim()
    }
    fn act_basis(&self, g: Gen, b: usize) -> Option<Elem<A>> {
        let x = self.0.gen_image(g)?;
        let ring = self.0.ring();
        let mut out = SparseVec::new();
        for (&a, c) in &x {
            out.add_scaled(ring, c, &self.0.mul_basis(a, b));
        }
        Some(out)
    }
}

/// Algebras with a linear anti-involution given on the basis.
pub trait Starred: Algebra {
    fn star_basis(&self, b: usize) -> Elem<Self>;
}

pub fn star<A: Starred>(alg: &A, x: &Elem<A>) -> Elem<A> {
    let ring = alg.ring();
    let mut out = SparseVec::new();
    for (&b, c) in x {
        out.add_scaled(ring, c, &alg.star_basis(b));
    }
    out
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct StarReport {
    pub involution_failures: usize,
    pub anti_failures: usize,
    pub pairs_checked: usize,
}

impl StarReport {
    pub fn passed(&self) -> bool {
        self.involution_failures == 0 && self.anti_failures == 0
    }
}

/// Checks `star(star(b)) = b` on every basis element and
/// `star(ab) = star(b) star(a)` on the given basis pairs (all pairs when
/// `pairs` is `None`).
pub fn check_star<A: Starred>(alg: &A, pairs: Option<&[(usize, usize)]>) -> StarReport {
    let ring = alg.ring();
    let involution_failures = (0..alg.dim())
        .into_par_iter()
        .filter(|&b| star(alg, &alg.star_basis(b)) != SparseVec::unit(ring, b))
        .count();
    let all: Vec<(usize, usize)>;
    let pairs = match pairs {
        Some(p) => p,
        None => {
            let d = alg.dim();
            all = (0..d).flat_map(|a| (0..d).map(move |b| (a, b))).collect();
            &all
        }
    };
    let anti_failures = pairs
        .par_iter()
        .filter(|&&(a, b)| {
            let lhs = star(alg, &alg.mul_basis(a, b));
            let rhs = mul(alg, &alg.star_basis(b), &alg.star_basis(a));
            lhs != rhs
        })
        .count();
    StarReport {
        involution_failures,
        anti_failures,
        pairs_checked: pairs.len(),
    }
}

/// Every product of basis elements, as `[a, b, [[c, coeff], ..]]`.
pub fn products_json<A>(alg: &A) -> Value
where
    A: Algebra,
    A::R: Ring<Elem = ParamPoly>,
{
    let d = alg.dim();
    let rows: Vec<Value> = (0..d)
        .into_par_iter()
        .flat_map_iter(|a| {
            (0..d).map(move |b| {
                let terms: Vec<Value> = alg
                    .mul_basis(a, b)
                    .iter()
                    .map(|(c, p)| json!([c, p.to_json()]))
                    .collect();
                json!([a, b, terms])
            })
        })
        .collect();
    Value::Array(rows)
}

/// Structure constants of two algebras agree under a basis bijection
/// `map[b]` (basis of `x` to basis of `y`) and a coefficient translation.
pub fn isomorphic_under<X, Y, F>(x: &X, y: &Y, map: &[usize], coeff: F) -> Result<(), (usize, usize)>
where
    X: Algebra,
    Y: Algebra,
    F: Fn(&<X::R as Ring>::Elem) -> <Y::R as Ring>::Elem + Sync,
{
    let d = x.dim();
    if y.dim() != d || map.len() != d {
        return Err((usize::MAX, usize::MAX));
    }
    let bad = (0..d).into_par_iter().find_map_any(|a| {
        (0..d).find_map(|b| {
            let lhs: SparseVec<_> = x.mul_basis(a, b).iter().map(|(&c, v)| (map[c], coeff(v))).collect();
            let rhs = y.mul_basis(map[a], map[b]);
            (lhs != rhs).then_some((a, b))
        })
    });
    match bad {
        Some(p) => Err(p),
        None => Ok(()),
    }
}
