use std::collections::HashMap;

use serde_json::{json, Value};

use super::{glue, BrauerDiagram, DiagramError};
use crate::algebra::{Algebra, Elem, Gen};
use crate::exactnum::{Ring, SparseVec, SparseVecExt};

/// A Brauer diagram whose pairs carry a decoration in Z/m. Each pair is
/// oriented from its smaller endpoint (top to bottom for through strands,
/// left to right for arcs); the decoration is read along that orientation
/// and stored at the smaller endpoint.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycloDiagram {
    matching: BrauerDiagram,
    deco: Vec<u32>,
}

impl CycloDiagram {
    pub fn new(matching: BrauerDiagram, m: u32, raw: &[i64]) -> Self {
        let mut deco = vec![0u32; matching.partner().len()];
        for (p, &q) in matching.partner().iter().enumerate() {
            if p < q as usize {
                deco[p] = raw[p].rem_euclid(m as i64) as u32;
            }
        }
        CycloDiagram { matching, deco }
    }

    pub fn plain(matching: BrauerDiagram) -> Self {
        let deco = vec![0; matching.partner().len()];
        CycloDiagram { matching, deco }
    }

    pub fn matching(&self) -> &BrauerDiagram {
        &self.matching
    }

    pub fn decorations(&self) -> &[u32] {
        &self.deco
    }

    /// t_j (1-based): the identity with decoration 1 on strand j.
    pub fn t(n: usize, m: u32, j: usize) -> Self {
        let mut raw = vec![0i64; 2 * n];
        raw[j - 1] = 1;
        Self::new(BrauerDiagram::identity(n), m, &raw)
    }

    /// Product and the loop classes (decoration sums up to sign, in 0..=m/2).
    pub fn compose(&self, other: &Self, m: u32) -> Result<(Self, Vec<u32>), DiagramError> {
        let n = self.matching.n();
        if other.matching.n() != n {
            return Err(DiagramError::SizeMismatch(n, other.matching.n()));
        }
        let da: Vec<i64> = self.deco.iter().map(|&x| x as i64).collect();
        let db: Vec<i64> = other.deco.iter().map(|&x| x as i64).collect();
        let g = glue(n, self.matching.partner(), &da, other.matching.partner(), &db);
        let d = CycloDiagram::new(BrauerDiagram::from_partner(g.partner), m, &g.deco);
        let loops = g.loops.iter().map(|&v| loop_class(v, m)).collect();
        Ok((d, loops))
    }

    pub fn to_json(&self) -> Value {
        let pairs: Vec<Value> = self
            .matching
            .pairs()
            .into_iter()
            .map(|(p, q)| json!([p, q, self.deco[p]]))
            .collect();
        Value::Array(pairs)
    }
}

/// A closed loop has no preferred direction, so its decoration is only
/// defined up to sign.
pub fn loop_class(v: i64, m: u32) -> u32 {
    let a = v.rem_euclid(m as i64) as u32;
    a.min(m - a)
}

/// The cyclotomic Brauer algebra on n strands with Z/m decorations.
/// `delta[c]` is the value of a loop of class c (see [`loop_class`]).
pub struct CycloAlgebra<R: Ring> {
    m: u32,
    n: usize,
    ring: R,
    delta: Vec<R::Elem>,
    basis: Vec<CycloDiagram>,
    index: HashMap<CycloDiagram, usize>,
}

pub const CYCLO_MAX_DIM: usize = 2000;

impl<R: Ring> CycloAlgebra<R> {
    pub fn new(m: u32, n: usize, ring: R, delta: Vec<R::Elem>) -> Result<Self, DiagramError> {
        let size = (m as usize).pow(n as u32) * (1..=2 * n).step_by(2).product::<usize>();
        if size > CYCLO_MAX_DIM || m < 2 {
            return Err(DiagramError::TooLarge(size, CYCLO_MAX_DIM));
        }
        assert_eq!(delta.len(), m as usize / 2 + 1, "one loop value per class");
        let mut basis = Vec::with_capacity(size);
        for d in BrauerDiagram::all(n) {
            let starts: Vec<usize> = d.pairs().iter().map(|&(p, _)| p).collect();
            for code in 0..(m as usize).pow(n as u32) {
                let mut raw = vec![0i64; 2 * n];
                let mut c = code;
                for &p in &starts {
                    raw[p] = (c % m as usize) as i64;
                    c /= m as usize;
                }
                basis.push(CycloDiagram::new(d.clone(), m, &raw));
            }
        }
        let index = basis.iter().cloned().enumerate().map(|(i, d)| (d, i)).collect();
        Ok(CycloAlgebra {
            m,
            n,
            ring,
            delta,
            basis,
            index,
        })
    }

    pub fn m(&self) -> u32 {
        self.m
    }
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn diagram(&self, b: usize) -> &CycloDiagram {
        &self.basis[b]
    }

    pub fn basis_of(&self, d: &CycloDiagram) -> Elem<Self> {
        SparseVec::unit(&self.ring, self.index[d])
    }
}

impl<R: Ring> Algebra for CycloAlgebra<R> {
    type R = R;
    fn ring(&self) -> &R {
        &self.ring
    }
    fn dim(&self) -> usize {
        self.basis.len()
    }
    fn label(&self, b: usize) -> String {
        self.basis[b].to_json().to_string()
    }
    fn unit(&self) -> Elem<Self> {
        self.basis_of(&CycloDiagram::plain(BrauerDiagram::identity(self.n)))
    }
    fn mul_basis(&self, a: usize, b: usize) -> Elem<Self> {
        let (d, loops) = self.basis[a].compose(&self.basis[b], self.m).expect("same size");
        let c = loops
            .iter()
            .fold(self.ring.one(), |acc, &l| self.ring.mul(&acc, &self.delta[l as usize]));
        let mut v = SparseVec::new();
        v.add_term(&self.ring, self.index[&d], c);
        v
    }
    fn gen_image(&self, g: Gen) -> Option<Elem<Self>> {
        let n = self.n;
        let d = match g {
            Gen::S(i) if (1..n).contains(&i) => CycloDiagram::plain(BrauerDiagram::s(n, i)),
            Gen::E(i) if (1..n).contains(&i) => CycloDiagram::plain(BrauerDiagram::e(n, i)),
            Gen::T(j) if (1..=n).contains(&j) => CycloDiagram::t(n, self.m, j),
            _ => return None,
        };
        Some(self.basis_of(&d))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::mul;
    use crate::exactnum::ModP;

    fn model(m: u32, n: usize) -> CycloAlgebra<ModP> {
        let f = ModP::new(1_000_003);
        let delta = (0..=m / 2).map(|c| 11 + 7 * c as u64).collect();
        CycloAlgebra::new(m, n, f, delta).unwrap()
    }

    #[test]
    fn dimensions_and_generators() {
        let a = model(3, 2);
        assert_eq!(a.dim(), 27);
        let t1 = a.gen_image(Gen::T(1)).unwrap();
        let t1_cubed = mul(&a, &mul(&a, &t1, &t1), &t1);
        assert_eq!(t1_cubed, a.unit());
        let e = a.gen_image(Gen::E(1)).unwrap();
        let t2 = a.gen_image(Gen::T(2)).unwrap();
        let lhs = mul(&a, &e, &mul(&a, &t1, &t2));
        assert_eq!(lhs, e);
    }

    #[test]
    fn associativity_small() {
        for (m, n) in [(2u32, 2usize), (3, 2), (2, 3)] {
            let a = model(m, n);
            let d = a.dim();
            let step = if d > 50 { 7 } else { 1 };
            for x in (0..d).step_by(step) {
                for y in 0..d {
                    for z in (0..d).step_by(step) {
                        let l = mul(&a, &a.mul_basis(x, y), &SparseVec::unit(a.ring(), z));
                        let r = mul(&a, &SparseVec::unit(a.ring(), x), &a.mul_basis(y, z));
                        assert_eq!(l, r, "({m},{n}) triple {x},{y},{z}");
                    }
                }
            }
        }
    }

    #[test]
    fn loop_classes_are_sign_free() {
        assert_eq!(loop_class(1, 3), 1);
        assert_eq!(loop_class(2, 3), 1);
        assert_eq!(loop_class(-2, 4), 2);
        assert_eq!(loop_class(0, 5), 0);
    }
}
