use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use super::poly::{ParamPoly, PolyRing};
use super::ring::{Field, ModP, Ring};
use super::{ExactError, Rational};

/// Dense row-major matrix.
pub type Matrix<E> = Vec<Vec<E>>;

pub fn identity<R: Ring>(ring: &R, n: usize) -> Matrix<R::Elem> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { ring.one() } else { ring.zero() }).collect())
        .collect()
}

pub fn transpose<E: Clone>(m: &Matrix<E>) -> Matrix<E> {
    if m.is_empty() {
        return vec![];
    }
    (0..m[0].len())
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect()
}

pub fn mat_mul<R: Ring>(ring: &R, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    let n = a.len();
    let k = b.len();
    let m = if k == 0 { 0 } else { b[0].len() };
    let mut out = vec![vec![ring.zero(); m]; n];
    for i in 0..n {
        for l in 0..k {
            let x = &a[i][l];
            if ring.is_zero(x) {
                continue;
            }
            for j in 0..m {
                if !ring.is_zero(&b[l][j]) {
                    out[i][j] = ring.add(&out[i][j], &ring.mul(x, &b[l][j]));
                }
            }
        }
    }
    out
}

pub fn mat_add<R: Ring>(ring: &R, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.iter().zip(y).map(|(p, q)| ring.add(p, q)).collect())
        .collect()
}

pub fn mat_sub<R: Ring>(ring: &R, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.iter().zip(y).map(|(p, q)| ring.sub(p, q)).collect())
        .collect()
}

pub fn mat_scale<R: Ring>(ring: &R, c: &R::Elem, a: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    a.iter()
        .map(|row| row.iter().map(|x| ring.mul(c, x)).collect())
        .collect()
}

/// Row echelon form in place; returns pivot columns.
fn echelon<F: Field>(f: &F, m: &mut Matrix<F::Elem>) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return vec![];
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !f.is_zero(&m[i][c])) else {
            continue;
        };
        m.swap(r, p);
        let inv = f.inv(&m[r][c]).expect("pivot is nonzero");
        for j in c..cols {
            m[r][j] = f.mul(&m[r][j], &inv);
        }
        let pivot_row = m[r].clone();
        for i in 0..rows {
            if i == r || f.is_zero(&m[i][c]) {
                continue;
            }
            let factor = m[i][c].clone();
            for j in c..cols {
                if !f.is_zero(&pivot_row[j]) {
                    m[i][j] = f.sub(&m[i][j], &f.mul(&factor, &pivot_row[j]));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(f: &F, m: &Matrix<F::Elem>) -> usize {
    let mut a = m.clone();
    forward_rank(f, &mut a)
}

/// Forward elimination only; cheaper than a full reduced echelon form.
fn forward_rank<F: Field>(f: &F, m: &mut Matrix<F::Elem>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !f.is_zero(&m[i][c])) else {
            continue;
        };
        m.swap(r, p);
        let inv = f.inv(&m[r][c]).expect("pivot is nonzero");
        let (top, bottom) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in bottom.iter_mut() {
            if f.is_zero(&row[c]) {
                continue;
            }
            let factor = f.mul(&row[c], &inv);
            for j in c..cols {
                if !f.is_zero(&pivot_row[j]) {
                    row[j] = f.sub(&row[j], &f.mul(&factor, &pivot_row[j]));
                }
            }
        }
        r += 1;
    }
    r
}

/// Basis of the right null space {x : m x = 0}.
pub fn kernel<F: Field>(f: &F, m: &Matrix<F::Elem>, cols: usize) -> Vec<Vec<F::Elem>> {
    let mut a = m.clone();
    let pivots = echelon(f, &mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![f.zero(); cols];
            v[fc] = f.one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(&a[r][fc]);
            }
            v
        })
        .collect()
}

/// Some solution of `a x = b`, if the system is consistent.
pub fn solve<F: Field>(f: &F, a: &Matrix<F::Elem>, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
    let cols = if a.is_empty() { 0 } else { a[0].len() };
    let mut aug: Matrix<F::Elem> = a
        .iter()
        .zip(b)
        .map(|(row, x)| {
            let mut r = row.clone();
            r.push(x.clone());
            r
        })
        .collect();
    let pivots = echelon(f, &mut aug);
    if pivots.contains(&cols) {
        return None;
    }
    let mut x = vec![f.zero(); cols];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[r][cols].clone();
    }
    Some(x)
}

pub fn det<F: Field>(f: &F, m: &Matrix<F::Elem>) -> F::Elem {
    let n = m.len();
    let mut a = m.clone();
    let mut d = f.one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !f.is_zero(&a[i][c])) else {
            return f.zero();
        };
        if p != c {
            a.swap(p, c);
            d = f.neg(&d);
        }
        d = f.mul(&d, &a[c][c]);
        let inv = f.inv(&a[c][c]).expect("pivot is nonzero");
        for i in c + 1..n {
            if f.is_zero(&a[i][c]) {
                continue;
            }
            let factor = f.mul(&a[i][c], &inv);
            for j in c..n {
                let t = f.mul(&factor, &a[c][j]);
                a[i][j] = f.sub(&a[i][j], &t);
            }
        }
    }
    d
}

/// Determinant over a polynomial ring by fraction-free (Bareiss) elimination.
pub fn det_poly(ring: &PolyRing, m: &Matrix<ParamPoly>) -> Result<ParamPoly, ExactError> {
    let n = m.len();
    if n == 0 {
        return Ok(ring.one());
    }
    let mut a = m.clone();
    let mut sign = false;
    let mut prev = ring.one();
    for k in 0..n - 1 {
        if ring.is_zero(&a[k][k]) {
            let Some(p) = (k + 1..n).find(|&i| !ring.is_zero(&a[i][k])) else {
                return Ok(ring.zero());
            };
            a.swap(p, k);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = ring.sub(&ring.mul(&a[k][k], &a[i][j]), &ring.mul(&a[i][k], &a[k][j]));
                a[i][j] = num.div_exact(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if sign { ring.neg(&d) } else { d })
}

fn clear_row(row: &[Rational]) -> Vec<BigInt> {
    let mut l = BigInt::one();
    for x in row {
        l = l.lcm(x.denom());
    }
    row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
}

/// Exact rank by fraction-free elimination over the integers.
pub fn rank_exact(m: &Matrix<Rational>) -> usize {
    let mut a: Vec<Vec<BigInt>> = m.iter().map(|r| clear_row(r)).collect();
    let rows = a.len();
    if rows == 0 {
        return 0;
    }
    let cols = a[0].len();
    let mut r = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = (&a[r][c] * &a[i][j] - &a[i][c] * &a[r][j]) / &prev;
                a[i][j] = v;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

pub fn rank_mod_p(m: &Matrix<Rational>, p: u64) -> Result<usize, ExactError> {
    let f = ModP::new(p);
    let a: Result<Matrix<u64>, _> = m
        .iter()
        .map(|row| row.iter().map(|x| f.from_rational(x)).collect())
        .collect();
    Ok(rank(&f, &a?))
}

/// A rank backed by agreeing modular computations, or by exact elimination
/// when no two primes agree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankCert {
    pub rank: usize,
    pub modular: Vec<(u64, usize)>,
    pub exact_fallback: bool,
}

/// Modular ranks never exceed the exact rank, so two agreeing primes are
/// accepted; otherwise further primes are tried and finally exact elimination.
pub fn certified_rank(m: &Matrix<Rational>, primes: &[u64]) -> Result<RankCert, ExactError> {
    let mut seen: Vec<(u64, usize)> = Vec::new();
    for &p in primes {
        match rank_mod_p(m, p) {
            Ok(r) => {
                if seen.iter().any(|&(_, s)| s == r) {
                    seen.push((p, r));
                    return Ok(RankCert {
                        rank: r,
                        modular: seen,
                        exact_fallback: false,
                    });
                }
                seen.push((p, r));
            }
            Err(ExactError::BadPrime(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(RankCert {
        rank: rank_exact(m),
        modular: seen,
        exact_fallback: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat, Rationals, Vars};

    #[test]
    fn small_ranks() {
        let id: Matrix<Rational> = identity(&Rationals, 5);
        assert_eq!(rank_exact(&id), 5);
        let ones = vec![vec![int(1); 4]; 4];
        assert_eq!(rank_exact(&ones), 1);
        assert_eq!(rank(&Rationals, &ones), 1);
        assert_eq!(rank_mod_p(&ones, 1_000_003).unwrap(), 1);
    }

    #[test]
    fn kernel_and_solve() {
        let m = vec![vec![int(1), int(2), int(3)], vec![int(2), int(4), int(6)]];
        let k = kernel(&Rationals, &m, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            for row in &m {
                let s: Rational = row.iter().zip(v).map(|(a, b)| a * b).sum();
                assert!(s.is_zero());
            }
        }
        let a = vec![vec![int(2), int(1)], vec![int(1), int(3)]];
        let x = solve(&Rationals, &a, &[int(3), int(4)]).unwrap();
        assert_eq!(x, vec![int(1), int(1)]);
        assert!(solve(&Rationals, &m, &[int(1), int(3)]).is_none());
    }

    #[test]
    fn bareiss_determinant() {
        let r = PolyRing::new(Vars::new(&["tau"]));
        let t = r.var("tau").unwrap();
        let n = 5;
        let m: Matrix<ParamPoly> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { t.clone() } else { r.one() }).collect())
            .collect();
        let d = det_poly(&r, &m).unwrap();
        let expect = r.mul(&r.pow(&r.sub(&t, &r.one()), 4), &r.add(&t, &r.from_int(4)));
        assert_eq!(d, expect);
    }

    #[test]
    fn field_determinant() {
        let a = vec![vec![rat(1, 2), int(1)], vec![int(3), int(4)]];
        assert_eq!(det(&Rationals, &a), int(-1));
    }

    #[test]
    fn certified_rank_agrees_with_exact() {
        let m = vec![
            vec![int(1), int(2), int(3)],
            vec![int(4), int(5), int(6)],
            vec![int(7), int(8), int(9)],
        ];
        let c = certified_rank(&m, &[1_000_003, 1_000_033]).unwrap();
        assert_eq!(c.rank, 2);
        assert!(!c.exact_fallback);
    }
}
