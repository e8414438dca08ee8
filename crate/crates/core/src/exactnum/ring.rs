use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::{ExactError, Rational};

/// A commutative ring given as an object; elements carry no context of
/// their own, which keeps modular and symbolic arithmetic uniform.
pub trait Ring: Clone + Send + Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn from_rational(&self, q: &Rational) -> Result<Self::Elem, ExactError>;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn from_int(&self, n: i64) -> Self::Elem {
        self.from_rational(&super::int(n))
            .expect("integers embed in every ring used here")
    }

    fn pow(&self, a: &Self::Elem, mut e: u32) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

pub trait Field: Ring {
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, ExactError>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, ExactError> {
        Ok(self.mul(a, &self.inv(b)?))
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = Rational;
    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn from_rational(&self, q: &Rational) -> Result<Rational, ExactError> {
        Ok(q.clone())
    }
}

impl Field for Rationals {
    fn inv(&self, a: &Rational) -> Result<Rational, ExactError> {
        if a.is_zero() {
            Err(ExactError::ZeroInverse)
        } else {
            Ok(a.recip())
        }
    }
}

/// The prime field Z/p. The prime is trusted, not tested.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModP {
    p: u64,
}

impl ModP {
    pub fn new(p: u64) -> Self {
        assert!(p > 2 && p < (1 << 62), "prime out of supported range");
        ModP { p }
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn reduce_int(&self, n: &BigInt) -> u64 {
        let p = BigInt::from(self.p);
        let r = n.mod_floor(&p);
        r.to_u64().expect("residue fits in u64")
    }

    pub fn pow_mod(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, a, self.p);
            }
            a = mulmod(a, a, self.p);
            e >>= 1;
        }
        acc
    }

    /// Square root by Tonelli-Shanks, if one exists.
    pub fn sqrt(&self, a: u64) -> Option<u64> {
        let p = self.p;
        let a = a % p;
        if a == 0 {
            return Some(0);
        }
        if self.pow_mod(a, (p - 1) / 2) != 1 {
            return None;
        }
        let mut q = p - 1;
        let mut s = 0;
        while q.is_multiple_of(2) {
            q /= 2;
            s += 1;
        }
        let mut z = 2;
        while self.pow_mod(z, (p - 1) / 2) != p - 1 {
            z += 1;
        }
        let mut m = s;
        let mut c = self.pow_mod(z, q);
        let mut t = self.pow_mod(a, q);
        let mut r = self.pow_mod(a, q.div_ceil(2));
        while t != 1 {
            let mut i = 0;
            let mut t2 = t;
            while t2 != 1 {
                t2 = mulmod(t2, t2, p);
                i += 1;
            }
            let b = self.pow_mod(c, 1 << (m - i - 1));
            m = i;
            c = mulmod(b, b, p);
            t = mulmod(t, c, p);
            r = mulmod(r, b, p);
        }
        Some(r)
    }
}

#[inline]
fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

impl Ring for ModP {
    type Elem = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    #[inline]
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mulmod(*a, *b, self.p)
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn from_rational(&self, q: &Rational) -> Result<u64, ExactError> {
        let d = self.reduce_int(q.denom());
        if d == 0 {
            return Err(ExactError::BadPrime(self.p));
        }
        let n = self.reduce_int(q.numer());
        Ok(mulmod(n, self.pow_mod(d, self.p - 2), self.p))
    }
    fn from_int(&self, n: i64) -> u64 {
        let p = self.p as i128;
        (((n as i128) % p + p) % p) as u64
    }
}

impl Field for ModP {
    fn inv(&self, a: &u64) -> Result<u64, ExactError> {
        if *a == 0 {
            Err(ExactError::ZeroInverse)
        } else {
            Ok(self.pow_mod(*a, self.p - 2))
        }
    }
}
