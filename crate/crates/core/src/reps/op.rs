//! Linear operators stored by columns: `op[b]` is the image of basis b.

use crate::exactnum::{Matrix, Ring, SparseVec, SparseVecExt};

pub type Operator<E> = Vec<SparseVec<E>>;

pub fn op_identity<R: Ring>(ring: &R, dim: usize) -> Operator<R::Elem> {
    (0..dim).map(|b| SparseVec::unit(ring, b)).collect()
}

pub fn op_apply<R: Ring>(ring: &R, op: &Operator<R::Elem>, v: &SparseVec<R::Elem>) -> SparseVec<R::Elem> {
    let mut out = SparseVec::new();
    for (&b, c) in v {
        out.add_scaled(ring, c, &op[b]);
    }
    out
}

/// `a * b` (b applied first).
pub fn op_compose<R: Ring>(ring: &R, a: &Operator<R::Elem>, b: &Operator<R::Elem>) -> Operator<R::Elem> {
    b.iter().map(|col| op_apply(ring, a, col)).collect()
}

/// Row-major dense matrix.
pub fn op_to_dense<R: Ring>(ring: &R, op: &Operator<R::Elem>, dim: usize) -> Matrix<R::Elem> {
    let mut m = vec![vec![ring.zero(); op.len()]; dim];
    for (b, col) in op.iter().enumerate() {
        for (&r, x) in col {
            m[r][b] = x.clone();
        }
    }
    m
}

pub fn op_from_dense<R: Ring>(ring: &R, m: &Matrix<R::Elem>) -> Operator<R::Elem> {
    let cols = m.first().map_or(0, |r| r.len());
    (0..cols)
        .map(|b| {
            let mut col = SparseVec::new();
            for (r, row) in m.iter().enumerate() {
                col.add_term(ring, r, row[b].clone());
            }
            col
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, Rationals};

    #[test]
    fn dense_round_trip_and_compose() {
        let q = Rationals;
        let m = vec![vec![int(1), int(2)], vec![int(0), int(3)]];
        let op = op_from_dense(&q, &m);
        assert_eq!(op_to_dense(&q, &op, 2), m);
        let sq = op_compose(&q, &op, &op);
        assert_eq!(
            op_to_dense(&q, &sq, 2),
            vec![vec![int(1), int(8)], vec![int(0), int(9)]]
        );
    }
}
