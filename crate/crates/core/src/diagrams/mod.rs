//! Brauer diagrams and their cyclotomic (decorated) variant, as independent
//! combinatorial models of the algebras defined by presentations.
//!
//! Points `0..n` are the top row and `n..2n` the bottom row. In a product
//! `a * b` the diagram `a` sits on top of `b`.

mod cyclo;

pub use cyclo::{loop_class, CycloAlgebra, CycloDiagram};

use std::collections::HashMap;

use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::{mul, Algebra, BrauerTypeAlgebra, Elem, Gen, Starred};
use crate::exactnum::{Ring, SparseVec, SparseVecExt};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("diagram sizes differ ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("{0} basis elements exceed the supported bound {1}")]
    TooLarge(usize, usize),
    #[error("invalid generator index {0}")]
    BadGenerator(usize),
}

/// A perfect matching on the 2n boundary points.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BrauerDiagram {
    partner: Vec<u8>,
}

/// Result of stacking two matchings: the new matching, the decoration sum
/// carried by each new pair (keyed by its smaller endpoint) and one signed
/// decoration sum per closed loop.
pub(crate) struct Glued {
    pub partner: Vec<u8>,
    pub deco: Vec<i64>,
    pub loops: Vec<i64>,
}

fn signed(deco: &[i64], p: usize, q: usize) -> i64 {
    if p < q {
        deco[p]
    } else {
        -deco[q]
    }
}

/// Stacks `a` over `b`. Pairs are oriented from their smaller endpoint;
/// decorations add along traced paths, negated when walked backwards.
pub(crate) fn glue(n: usize, pa: &[u8], da: &[i64], pb: &[u8], db: &[i64]) -> Glued {
    let mut partner = vec![0u8; 2 * n];
    let mut deco = vec![0i64; 2 * n];
    let mut seen_mid = vec![false; n];
    let mut done = vec![false; 2 * n];
    for start in 0..2 * n {
        if done[start] {
            continue;
        }
        let mut in_a = start < n;
        let mut p = start;
        let mut sum = 0i64;
        let end = loop {
            if in_a {
                let q = pa[p] as usize;
                sum += signed(da, p, q);
                if q < n {
                    break q;
                }
                seen_mid[q - n] = true;
                in_a = false;
                p = q - n;
            } else {
                let q = pb[p] as usize;
                sum += signed(db, p, q);
                if q >= n {
                    break q;
                }
                seen_mid[q] = true;
                in_a = true;
                p = q + n;
            }
        };
        done[start] = true;
        done[end] = true;
        partner[start] = end as u8;
        partner[end] = start as u8;
        deco[start] = sum;
    }
    let mut loops = Vec::new();
    for k in 0..n {
        if seen_mid[k] {
            continue;
        }
        // walk the lower diagram first, from the leftmost unvisited middle point
        let mut sum = 0i64;
        let mut p = k;
        let mut in_a = false;
        loop {
            if in_a {
                let q = pa[p] as usize;
                sum += signed(da, p, q);
                seen_mid[q - n] = true;
                p = q - n;
                in_a = false;
            } else {
                let q = pb[p] as usize;
                sum += signed(db, p, q);
                seen_mid[q] = true;
                p = q + n;
                in_a = true;
            }
            if !in_a && p == k {
                break;
            }
        }
        loops.push(sum);
    }
    Glued { partner, deco, loops }
}

impl BrauerDiagram {
    pub fn from_partner(partner: Vec<u8>) -> Self {
        debug_assert!(partner.len().is_multiple_of(2));
        debug_assert!(partner
            .iter()
            .enumerate()
            .all(|(i, &p)| partner[p as usize] as usize == i && p as usize != i));
        BrauerDiagram { partner }
    }

    pub fn n(&self) -> usize {
        self.partner.len() / 2
    }

    pub fn partner(&self) -> &[u8] {
        &self.partner
    }

    pub fn identity(n: usize) -> Self {
        Self::permutation(&(0..n).collect::<Vec<_>>())
    }

    /// Bottom point j joined to top point `perm[j]`; composition of these
    /// diagrams matches composition of permutations.
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut partner = vec![0u8; 2 * n];
        for (j, &t) in perm.iter().enumerate() {
            partner[n + j] = t as u8;
            partner[t] = (n + j) as u8;
        }
        BrauerDiagram { partner }
    }

    /// Transposition of strands a and b (0-based).
    pub fn swap(n: usize, a: usize, b: usize) -> Self {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(a, b);
        Self::permutation(&perm)
    }

    /// Top arc {a,b}, bottom arc {a,b}, other strands vertical (0-based).
    pub fn cup_cap(n: usize, a: usize, b: usize) -> Self {
        let mut d = Self::identity(n);
        d.partner[a] = b as u8;
        d.partner[b] = a as u8;
        d.partner[n + a] = (n + b) as u8;
        d.partner[n + b] = (n + a) as u8;
        d
    }

    /// Generator s_i, 1-based.
    pub fn s(n: usize, i: usize) -> Self {
        Self::swap(n, i - 1, i)
    }

    /// Generator e_i, 1-based.
    pub fn e(n: usize, i: usize) -> Self {
        Self::cup_cap(n, i - 1, i)
    }

    /// All (2n-1)!! diagrams in lexicographic order of partner arrays.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut partner = vec![u8::MAX; 2 * n];
        enumerate_matchings(&mut partner, &mut out);
        out.sort();
        out
    }

    pub fn compose(&self, other: &Self) -> Result<(Self, usize), DiagramError> {
        let n = self.n();
        if other.n() != n {
            return Err(DiagramError::SizeMismatch(n, other.n()));
        }
        let zeros = vec![0i64; 2 * n];
        let g = glue(n, &self.partner, &zeros, &other.partner, &zeros);
        Ok((BrauerDiagram { partner: g.partner }, g.loops.len()))
    }

    /// Top/bottom reflection: the anti-involution of the diagram algebra.
    pub fn flip(&self) -> Self {
        let n = self.n();
        let sw = |p: usize| if p < n { p + n } else { p - n };
        let mut partner = vec![0u8; 2 * n];
        for p in 0..2 * n {
            partner[sw(p)] = sw(self.partner[p] as usize) as u8;
        }
        BrauerDiagram { partner }
    }

    pub fn num_through(&self) -> usize {
        let n = self.n();
        (0..n).filter(|&p| self.partner[p] as usize >= n).count()
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.partner.len())
            .filter(|&p| p < self.partner[p] as usize)
            .map(|p| (p, self.partner[p] as usize))
            .collect()
    }

    pub fn to_json(&self) -> Value {
        json!(self.pairs())
    }
}

pub(crate) fn enumerate_matchings(partner: &mut Vec<u8>, out: &mut Vec<BrauerDiagram>) {
    let Some(first) = partner.iter().position(|&p| p == u8::MAX) else {
        out.push(BrauerDiagram {
            partner: partner.clone(),
        });
        return;
    };
    for q in first + 1..partner.len() {
        if partner[q] != u8::MAX {
            continue;
        }
        partner[first] = q as u8;
        partner[q] = first as u8;
        enumerate_matchings(partner, out);
        partner[first] = u8::MAX;
        partner[q] = u8::MAX;
    }
}

/// The Brauer algebra B_n with loop value `tau`.
pub struct BrauerAlgebra<R: Ring> {
    n: usize,
    ring: R,
    tau: R::Elem,
    diagrams: Vec<BrauerDiagram>,
    index: HashMap<BrauerDiagram, usize>,
}

pub const BRAUER_MAX_N: usize = 5;

impl<R: Ring> BrauerAlgebra<R> {
    pub fn new(n: usize, ring: R, tau: R::Elem) -> Result<Self, DiagramError> {
        if n == 0 || n > BRAUER_MAX_N {
            return Err(DiagramError::TooLarge(n, BRAUER_MAX_N));
        }
        let diagrams = BrauerDiagram::all(n);
        let index = diagrams.iter().cloned().enumerate().map(|(i, d)| (d, i)).collect();
        Ok(BrauerAlgebra {
            n,
            ring,
            tau,
            diagrams,
            index,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn diagram(&self, b: usize) -> &BrauerDiagram {
        &self.diagrams[b]
    }

    pub fn index_of(&self, d: &BrauerDiagram) -> Option<usize> {
        self.index.get(d).copied()
    }

    pub fn basis_of(&self, d: &BrauerDiagram) -> Elem<Self> {
        SparseVec::unit(&self.ring, self.index[d])
    }
}

/// The canonical correspondence from a type-A engine table to B_n: s to
/// the swap of its hyperplane's coordinate pair, e_h to the cup-cap on
/// that pair. Returns the image diagram of each engine basis word, or
/// `None` if some word does not go to a single diagram with coefficient 1.
pub fn type_a_basis_map<R: Ring>(eng: &BrauerTypeAlgebra<R>, dia: &BrauerAlgebra<R>) -> Option<Vec<usize>> {
    let g = eng.group();
    let ring = dia.ring();
    let n = dia.n();
    let gens = g.generators();
    let letter = |x: Gen| -> Option<Vec<BrauerDiagram>> {
        match x {
            Gen::W(w) => g
                .word(w)
                .iter()
                .map(|&k| {
                    let (a, b) = g.type_a_pair(g.hyperplane_of(gens[k])?)?;
                    Some(BrauerDiagram::swap(n, a, b))
                })
                .collect(),
            Gen::E(h) => {
                let (a, b) = g.type_a_pair(h)?;
                Some(vec![BrauerDiagram::cup_cap(n, a, b)])
            }
            _ => None,
        }
    };
    (0..eng.dim())
        .map(|b| {
            let mut acc = dia.unit();
            for x in eng.witness(b) {
                for d in letter(x)? {
                    acc = mul(dia, &acc, &dia.basis_of(&d));
                }
            }
            match acc.iter().next() {
                Some((&d, c)) if acc.len() == 1 && *c == ring.one() => Some(d),
                _ => None,
            }
        })
        .collect()
}

impl<R: Ring> Algebra for BrauerAlgebra<R> {
    type R = R;
    fn ring(&self) -> &R {
        &self.ring
    }
    fn dim(&self) -> usize {
        self.diagrams.len()
    }
    fn label(&self, b: usize) -> String {
        format!("{:?}", self.diagrams[b].pairs())
    }
    fn unit(&self) -> Elem<Self> {
        self.basis_of(&BrauerDiagram::identity(self.n))
    }
    fn mul_basis(&self, a: usize, b: usize) -> Elem<Self> {
        let (d, loops) = self.diagrams[a].compose(&self.diagrams[b]).expect("same size");
        let c = self.ring.pow(&self.tau, loops as u32);
        let mut v = SparseVec::new();
        v.add_term(&self.ring, self.index[&d], c);
        v
    }
    fn gen_image(&self, g: Gen) -> Option<Elem<Self>> {
        match g {
            Gen::S(i) if (1..self.n).contains(&i) => Some(self.basis_of(&BrauerDiagram::s(self.n, i))),
            Gen::E(i) if (1..self.n).contains(&i) => Some(self.basis_of(&BrauerDiagram::e(self.n, i))),
            _ => None,
        }
    }
}

impl<R: Ring> Starred for BrauerAlgebra<R> {
    fn star_basis(&self, b: usize) -> Elem<Self> {
        self.basis_of(&self.diagrams[b].flip())
    }
}
