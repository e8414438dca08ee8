use std::collections::BTreeMap;

use super::ring::Ring;

/// Coordinates on an indexed basis; zero entries are never stored.
pub type SparseVec<E> = BTreeMap<usize, E>;

pub trait SparseVecExt<R: Ring> {
    fn unit(ring: &R, k: usize) -> Self;
    /// `self += c * v`
    fn add_scaled(&mut self, ring: &R, c: &R::Elem, v: &Self);
    fn add_term(&mut self, ring: &R, k: usize, c: R::Elem);
    fn scaled(&self, ring: &R, c: &R::Elem) -> Self;
    fn minus(&self, ring: &R, v: &Self) -> Self;
}

impl<R: Ring> SparseVecExt<R> for SparseVec<R::Elem> {
    fn unit(ring: &R, k: usize) -> Self {
        let mut v = BTreeMap::new();
        v.insert(k, ring.one());
        v
    }

    fn add_scaled(&mut self, ring: &R, c: &R::Elem, v: &Self) {
        if ring.is_zero(c) {
            return;
        }
        for (k, x) in v {
            self.add_term(ring, *k, ring.mul(c, x));
        }
    }

    fn add_term(&mut self, ring: &R, k: usize, c: R::Elem) {
        if ring.is_zero(&c) {
            return;
        }
        match self.entry(k) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = ring.add(e.get(), &c);
                if ring.is_zero(&s) {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    fn scaled(&self, ring: &R, c: &R::Elem) -> Self {
        let mut out = BTreeMap::new();
        if ring.is_zero(c) {
            return out;
        }
        for (k, x) in self {
            let y = ring.mul(c, x);
            if !ring.is_zero(&y) {
                out.insert(*k, y);
            }
        }
        out
    }

    fn minus(&self, ring: &R, v: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(ring, &ring.from_int(-1), v);
        out
    }
}
