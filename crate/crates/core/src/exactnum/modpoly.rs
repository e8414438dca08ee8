//! Dense polynomials over Z/p, lowest degree first, and their roots by
//! equal-degree splitting. Also a search for primes in a residue class.

use super::{Field, ModP, Ring};

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn sub(f: &ModP, a: &[u64], b: &[u64]) -> Vec<u64> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|k| f.sub(a.get(k).unwrap_or(&0), b.get(k).unwrap_or(&0)))
        .collect();
    trim(out)
}

fn mul(f: &ModP, a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = f.add(&out[i + j], &f.mul(x, y));
        }
    }
    trim(out)
}

/// (quotient, remainder); `b` must be nonzero.
fn divrem(f: &ModP, a: &[u64], b: &[u64]) -> (Vec<u64>, Vec<u64>) {
    let lead = f.inv(b.last().expect("nonzero divisor")).expect("unit lead");
    let mut r = a.to_vec();
    if r.len() < b.len() {
        return (Vec::new(), trim(r));
    }
    let mut q = vec![0; r.len() - b.len() + 1];
    for k in (0..q.len()).rev() {
        let c = f.mul(&r[k + b.len() - 1], &lead);
        q[k] = c;
        if c != 0 {
            for (j, y) in b.iter().enumerate() {
                r[k + j] = f.sub(&r[k + j], &f.mul(&c, y));
            }
        }
    }
    r.truncate(b.len() - 1);
    (trim(q), trim(r))
}

fn gcd(f: &ModP, a: &[u64], b: &[u64]) -> Vec<u64> {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = divrem(f, &a, &b).1;
        a = b;
        b = r;
    }
    if let Some(l) = a.last() {
        let inv = f.inv(l).expect("unit lead");
        a.iter_mut().for_each(|x| *x = f.mul(x, &inv));
    }
    a
}

/// `base^e mod m`.
fn powmod(f: &ModP, base: &[u64], mut e: u64, m: &[u64]) -> Vec<u64> {
    let mut acc = vec![1];
    let mut b = divrem(f, base, m).1;
    while e > 0 {
        if e & 1 == 1 {
            acc = divrem(f, &mul(f, &acc, &b), m).1;
        }
        b = divrem(f, &mul(f, &b, &b), m).1;
        e >>= 1;
    }
    acc
}

/// Distinct roots in Z/p, sorted.
pub fn poly_roots(f: &ModP, poly: &[u64]) -> Vec<u64> {
    let poly = trim(poly.to_vec());
    if poly.len() <= 1 {
        return Vec::new();
    }
    let p = f.prime();
    // product of (x - r) over the distinct roots
    let xp = powmod(f, &[0, 1], p, &poly);
    let split = gcd(f, &poly, &sub(f, &xp, &[0, 1]));
    let mut out = Vec::new();
    let mut stack = vec![split];
    while let Some(g) = stack.pop() {
        match g.len() {
            0 | 1 => {}
            2 => out.push(f.neg(&f.mul(&g[0], &f.inv(&g[1]).expect("unit lead")))),
            _ => {
                for a in 1.. {
                    let h = sub(f, &powmod(f, &[a, 1], (p - 1) / 2, &g), &[1]);
                    let d = gcd(f, &g, &h);
                    if d.len() > 1 && d.len() < g.len() {
                        let rest = divrem(f, &g, &d).0;
                        stack.push(d);
                        stack.push(rest);
                        break;
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The smallest prime p > `above` with p = 1 mod `modulus`.
pub fn prime_one_mod(modulus: u64, above: u64) -> u64 {
    let mut p = above - above % modulus + 1;
    while p <= above || !is_prime(p) {
        p += modulus;
    }
    p
}
