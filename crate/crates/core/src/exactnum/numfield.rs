use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::ring::{Field, ModP, Ring};
use super::{int, ExactError, Rational};

#[derive(Debug, PartialEq, Eq)]
struct FieldData {
    name: String,
    /// Monic modulus, lowest degree first, length `deg + 1`.
    modulus: Vec<Rational>,
}

/// The field Q[x]/(f) for a monic f assumed irreducible.
#[derive(Debug, Clone)]
pub struct NumberField {
    data: Arc<FieldData>,
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.data, &other.data) || self.data == other.data
    }
}
impl Eq for NumberField {}

#[derive(Clone)]
pub struct NumberFieldElem {
    field: NumberField,
    coeffs: Vec<Rational>,
}

impl PartialEq for NumberFieldElem {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && self.field == other.field
    }
}
impl Eq for NumberFieldElem {}

impl Hash for NumberFieldElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for NumberFieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for NumberFieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "({})*x", c)?,
                _ => write!(f, "({})*x^{}", c, k)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl NumberField {
    /// `modulus` lists coefficients lowest degree first and must be monic.
    pub fn new(name: impl Into<String>, modulus: Vec<Rational>) -> Self {
        assert!(modulus.len() >= 2, "modulus must have degree at least 1");
        assert!(modulus.last().unwrap().is_one(), "modulus must be monic");
        NumberField {
            data: Arc::new(FieldData {
                name: name.into(),
                modulus,
            }),
        }
    }

    /// Q itself, presented as Q[x]/(x).
    pub fn rationals() -> Self {
        Self::new("Q", vec![int(0), int(1)])
    }

    /// Q[x]/(x^2 - d).
    pub fn quadratic(d: i64) -> Self {
        Self::new(format!("Q(sqrt{})", d), vec![int(-d), int(0), int(1)])
    }

    /// Q[x]/(Phi_m), x a primitive m-th root of unity.
    pub fn cyclotomic(m: u32) -> Self {
        Self::new(format!("Q(zeta{})", m), cyclotomic_poly(m))
    }

    pub fn name(&self) -> &str {
        &self.data.name
    }

    pub fn degree(&self) -> usize {
        self.data.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[Rational] {
        &self.data.modulus
    }

    pub fn elem(&self, coeffs: Vec<Rational>) -> NumberFieldElem {
        self.reduce(coeffs)
    }

    pub fn from_q(&self, q: Rational) -> NumberFieldElem {
        let mut c = vec![Rational::zero(); self.degree()];
        c[0] = q;
        NumberFieldElem {
            field: self.clone(),
            coeffs: c,
        }
    }

    /// The class of x.
    pub fn gen(&self) -> NumberFieldElem {
        self.reduce(vec![int(0), int(1)])
    }

    fn reduce(&self, mut c: Vec<Rational>) -> NumberFieldElem {
        let d = self.degree();
        let f = &self.data.modulus;
        while c.len() > d {
            let lead = c.pop().unwrap();
            if !lead.is_zero() {
                let shift = c.len() - d;
                for k in 0..d {
                    c[shift + k] -= &lead * &f[k];
                }
            }
        }
        c.resize(d, Rational::zero());
        NumberFieldElem {
            field: self.clone(),
            coeffs: c,
        }
    }

    /// Applies the ring map x -> `image` to an element written in x.
    pub fn substitute(&self, a: &NumberFieldElem, image: &NumberFieldElem) -> NumberFieldElem {
        let mut acc = self.zero();
        for c in a.coeffs.iter().rev() {
            acc = self.mul(&acc, image);
            acc = self.add(&acc, &self.from_q(c.clone()));
        }
        acc
    }

    /// Reduction modulo p after choosing an image `root` of x in Z/p.
    pub fn to_mod_p(&self, a: &NumberFieldElem, fp: &ModP, root: u64) -> Result<u64, ExactError> {
        let mut acc = 0u64;
        for c in a.coeffs.iter().rev() {
            acc = fp.mul(&acc, &root);
            acc = fp.add(&acc, &fp.from_rational(c)?);
        }
        Ok(acc)
    }

    /// A root of the modulus in Z/p, found by search. Used to map a number
    /// field into a prime field.
    pub fn root_mod_p(&self, fp: &ModP) -> Option<u64> {
        let f = &self.data.modulus;
        if f.len() == 3 && f[1].is_zero() {
            let c = fp.from_rational(&-f[0].clone()).ok()?;
            return fp.sqrt(c);
        }
        (0..fp.prime().min(1 << 20)).find(|&r| {
            let mut acc = 0u64;
            for c in f.iter().rev() {
                acc = fp.mul(&acc, &r);
                match fp.from_rational(c) {
                    Ok(v) => acc = fp.add(&acc, &v),
                    Err(_) => return false,
                }
            }
            acc == 0
        })
    }
}

impl NumberFieldElem {
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The rational value, if the element lies in Q.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn checked_add(&self, b: &Self) -> Result<Self, ExactError> {
        self.same_field(b)?;
        Ok(self.field.add(self, b))
    }

    pub fn checked_mul(&self, b: &Self) -> Result<Self, ExactError> {
        self.same_field(b)?;
        Ok(self.field.mul(self, b))
    }

    pub fn inverse(&self) -> Result<Self, ExactError> {
        self.field.inv(self)
    }

    fn same_field(&self, b: &Self) -> Result<(), ExactError> {
        if self.field == b.field {
            Ok(())
        } else {
            Err(ExactError::FieldMismatch)
        }
    }
}

impl Ring for NumberField {
    type Elem = NumberFieldElem;

    fn zero(&self) -> NumberFieldElem {
        self.from_q(Rational::zero())
    }
    fn one(&self) -> NumberFieldElem {
        self.from_q(Rational::one())
    }
    fn add(&self, a: &NumberFieldElem, b: &NumberFieldElem) -> NumberFieldElem {
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        NumberFieldElem {
            field: self.clone(),
            coeffs,
        }
    }
    fn neg(&self, a: &NumberFieldElem) -> NumberFieldElem {
        NumberFieldElem {
            field: self.clone(),
            coeffs: a.coeffs.iter().map(|x| -x).collect(),
        }
    }
    fn mul(&self, a: &NumberFieldElem, b: &NumberFieldElem) -> NumberFieldElem {
        let d = self.degree();
        let mut prod = vec![Rational::zero(); 2 * d - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        self.reduce(prod)
    }
    fn is_zero(&self, a: &NumberFieldElem) -> bool {
        a.is_zero()
    }
    fn from_rational(&self, q: &Rational) -> Result<NumberFieldElem, ExactError> {
        Ok(self.from_q(q.clone()))
    }
}

impl Field for NumberField {
    /// Solves a * y = 1 through the multiplication-by-a matrix.
    fn inv(&self, a: &NumberFieldElem) -> Result<NumberFieldElem, ExactError> {
        if a.is_zero() {
            return Err(ExactError::ZeroInverse);
        }
        let d = self.degree();
        if d == 1 {
            return Ok(self.from_q(a.coeffs[0].recip()));
        }
        // column k of the matrix holds a * x^k
        let mut cols = Vec::with_capacity(d);
        let mut xk = self.one();
        let x = self.gen();
        for _ in 0..d {
            cols.push(self.mul(a, &xk).coeffs);
            xk = self.mul(&xk, &x);
        }
        let mut m: Vec<Vec<Rational>> = (0..d)
            .map(|r| {
                let mut row: Vec<Rational> = (0..d).map(|c| cols[c][r].clone()).collect();
                row.push(if r == 0 { Rational::one() } else { Rational::zero() });
                row
            })
            .collect();
        for col in 0..d {
            let piv = (col..d)
                .find(|&r| !m[r][col].is_zero())
                .ok_or(ExactError::ZeroInverse)?;
            m.swap(col, piv);
            let inv = m[col][col].recip();
            for c in col..=d {
                m[col][c] = &m[col][c] * &inv;
            }
            for r in 0..d {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for c in col..=d {
                        let t = &f * &m[col][c];
                        m[r][c] -= t;
                    }
                }
            }
        }
        Ok(self.reduce(m.into_iter().map(|row| row[d].clone()).collect()))
    }
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division of integer polynomials by a monic divisor.
fn poly_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut q = vec![BigInt::zero(); rem.len() - dd];
    for k in (0..q.len()).rev() {
        let c = rem[k + dd].clone();
        q[k] = c.clone();
        for (j, dj) in den.iter().enumerate() {
            rem[k + j] -= &c * dj;
        }
    }
    q
}

/// Phi_m with integer coefficients, lowest degree first.
pub(crate) fn cyclotomic_int(m: u32) -> Vec<BigInt> {
    let mut num = vec![BigInt::zero(); m as usize + 1];
    num[0] = BigInt::from(-1);
    num[m as usize] = BigInt::one();
    let mut den = vec![BigInt::one()];
    for d in 1..m {
        if m.is_multiple_of(d) {
            den = poly_mul(&den, &cyclotomic_int(d));
        }
    }
    poly_div_monic(&num, &den)
}

fn cyclotomic_poly(m: u32) -> Vec<Rational> {
    cyclotomic_int(m).into_iter().map(Rational::from_integer).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn sqrt5_arithmetic() {
        let k = NumberField::quadratic(5);
        let x = k.gen();
        assert_eq!(k.mul(&x, &x), k.from_q(int(5)));
        let xi = k.inv(&x).unwrap();
        assert_eq!(xi, k.elem(vec![int(0), rat(1, 5)]));
    }

    #[test]
    fn gaussian_integers() {
        let k = NumberField::cyclotomic(4);
        let i = k.gen();
        assert_eq!(k.mul(&i, &i), k.from_q(int(-1)));
    }

    #[test]
    fn cyclotomic_degrees() {
        for (m, d) in [(1, 1), (2, 1), (3, 2), (5, 4), (6, 2), (8, 4), (9, 6), (10, 4), (12, 4)] {
            assert_eq!(NumberField::cyclotomic(m).degree(), d, "m = {}", m);
        }
        let k = NumberField::cyclotomic(7);
        let z = k.gen();
        assert_eq!(k.pow(&z, 7), k.one());
        assert_ne!(k.pow(&z, 1), k.one());
    }

    #[test]
    fn field_mismatch_reported() {
        let a = NumberField::quadratic(5).gen();
        let b = NumberField::quadratic(2).gen();
        assert_eq!(a.checked_mul(&b), Err(ExactError::FieldMismatch));
        assert_eq!(NumberField::quadratic(5).zero().inverse(), Err(ExactError::ZeroInverse));
    }

    #[test]
    fn reduction_to_prime_field() {
        let k = NumberField::quadratic(5);
        let fp = ModP::new(1_000_099);
        if let Some(r) = k.root_mod_p(&fp) {
            let x = k.gen();
            let sq = k.mul(&x, &x);
            let img = k.to_mod_p(&sq, &fp, r).unwrap();
            assert_eq!(img, 5);
        }
    }
}
