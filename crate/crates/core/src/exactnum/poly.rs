use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use super::ring::Ring;
use super::{ExactError, Rational};

/// Ordered parameter names shared by a family of polynomials.
#[derive(Clone, Debug)]
pub struct Vars(Arc<[String]>);

impl PartialEq for Vars {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}
impl Eq for Vars {}

impl Vars {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        Vars(names.iter().map(|s| s.as_ref().to_string()).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|v| v == name)
    }
}

/// Sparse multivariate polynomial with rational coefficients.
#[derive(Clone, PartialEq)]
pub struct ParamPoly {
    vars: Vars,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl ParamPoly {
    pub fn zero(vars: &Vars) -> Self {
        ParamPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &Vars, c: Rational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    pub fn one(vars: &Vars) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn var(vars: &Vars, name: &str) -> Result<Self, ExactError> {
        let k = vars
            .index_of(name)
            .ok_or_else(|| ExactError::UnknownVariable(name.to_string()))?;
        Ok(Self::var_at(vars, k))
    }

    pub fn var_at(vars: &Vars, k: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[k] = 1;
        let mut p = Self::zero(vars);
        p.terms.insert(e, Rational::one());
        p
    }

    pub fn from_terms(vars: &Vars, terms: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    fn check(&self, other: &Self) -> Result<(), ExactError> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(ExactError::VarMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ExactError> {
        self.check(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ExactError> {
        self.check(other)?;
        Ok(self.add_unchecked(&other.neg()))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ExactError> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn add_unchecked(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let mut out = Self::zero(&self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        ParamPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero(&self.vars);
        }
        ParamPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * q)).collect(),
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, k: usize) -> u32 {
        self.terms.keys().map(|e| e[k]).max().unwrap_or(0)
    }

    /// Exact evaluation. Every variable that occurs must be assigned.
    pub fn eval(&self, assignment: &HashMap<String, Rational>) -> Result<Rational, ExactError> {
        let mut vals = Vec::with_capacity(self.vars.len());
        for (k, name) in self.vars.names().iter().enumerate() {
            match assignment.get(name) {
                Some(v) => vals.push(v.clone()),
                None if self.degree_in(k) == 0 => vals.push(Rational::zero()),
                None => return Err(ExactError::MissingVariable(name.clone())),
            }
        }
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (v, &x) in vals.iter().zip(e) {
                if x > 0 {
                    t *= num_traits::pow(v.clone(), x as usize);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Image under the ring map sending variable k to `values[k]`.
    pub fn eval_in<R: Ring>(&self, ring: &R, values: &[R::Elem]) -> Result<R::Elem, ExactError> {
        if values.len() != self.vars.len() {
            return Err(ExactError::Dimension(format!(
                "{} values for {} variables",
                values.len(),
                self.vars.len()
            )));
        }
        let mut acc = ring.zero();
        for (e, c) in &self.terms {
            let mut t = ring.from_rational(c)?;
            for (v, &x) in values.iter().zip(e) {
                if x > 0 {
                    t = ring.mul(&t, &ring.pow(v, x));
                }
            }
            acc = ring.add(&acc, &t);
        }
        Ok(acc)
    }

    /// Rewrites the polynomial over another variable list, matching by name.
    pub fn with_vars(&self, target: &Vars) -> Result<Self, ExactError> {
        let map: Vec<Option<usize>> = self.vars.names().iter().map(|n| target.index_of(n)).collect();
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut ne = vec![0; target.len()];
            for (k, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                match map[k] {
                    Some(j) => ne[j] = x,
                    None => return Err(ExactError::UnknownVariable(self.vars.names()[k].clone())),
                }
            }
            out.add_term(ne, c.clone());
        }
        Ok(out)
    }

    fn leading(&self) -> Option<(&Vec<u32>, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Exact quotient under lexicographic division; errors if a remainder
    /// would be left.
    pub fn div_exact(&self, d: &Self) -> Result<Self, ExactError> {
        self.check(d)?;
        let (de, dc) = d.leading().ok_or(ExactError::ZeroInverse)?;
        let (de, dc) = (de.clone(), dc.clone());
        let mut q = Self::zero(&self.vars);
        let mut r = self.clone();
        while let Some((re, rc)) = r.leading() {
            if re.iter().zip(&de).any(|(a, b)| a < b) {
                return Err(ExactError::NotExact);
            }
            let e: Vec<u32> = re.iter().zip(&de).map(|(a, b)| a - b).collect();
            let c = rc / &dc;
            let t = Self::from_terms(&self.vars, [(e, c)]);
            r = r.add_unchecked(&t.mul_unchecked(d).neg());
            q = q.add_unchecked(&t);
        }
        Ok(q)
    }

    /// Coefficients in variable k, lowest first, when no other variable occurs.
    pub fn univariate_coeffs(&self, k: usize) -> Option<Vec<Rational>> {
        let deg = self.degree_in(k) as usize;
        let mut out = vec![Rational::zero(); deg + 1];
        for (e, c) in &self.terms {
            if e.iter().enumerate().any(|(j, &x)| j != k && x > 0) {
                return None;
            }
            out[e[k] as usize] = c.clone();
        }
        Some(out)
    }

    /// `[[exponents], num, den]` triples; big integers become strings.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(e, c)| json!([e, big_json(c.numer()), big_json(c.denom())]))
                .collect(),
        )
    }
}

fn big_json(n: &num_bigint::BigInt) -> Value {
    match n.to_i64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if n == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(k, &x)| {
                    let name = &self.vars.names()[k];
                    if x == 1 {
                        name.clone()
                    } else {
                        format!("{}^{}", name, x)
                    }
                })
                .collect();
            if mono.is_empty() {
                write!(f, "{}", a)?;
            } else if a.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", a, mono.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Polynomials over one fixed variable list, as a [`Ring`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing {
    vars: Vars,
}

impl PolyRing {
    pub fn new(vars: Vars) -> Self {
        PolyRing { vars }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn var(&self, name: &str) -> Result<ParamPoly, ExactError> {
        ParamPoly::var(&self.vars, name)
    }
}

impl Ring for PolyRing {
    type Elem = ParamPoly;
    fn zero(&self) -> ParamPoly {
        ParamPoly::zero(&self.vars)
    }
    fn one(&self) -> ParamPoly {
        ParamPoly::one(&self.vars)
    }
    fn add(&self, a: &ParamPoly, b: &ParamPoly) -> ParamPoly {
        debug_assert!(a.vars == self.vars && b.vars == self.vars);
        a.add_unchecked(b)
    }
    fn neg(&self, a: &ParamPoly) -> ParamPoly {
        a.neg()
    }
    fn mul(&self, a: &ParamPoly, b: &ParamPoly) -> ParamPoly {
        debug_assert!(a.vars == self.vars && b.vars == self.vars);
        a.mul_unchecked(b)
    }
    fn is_zero(&self, a: &ParamPoly) -> bool {
        a.is_zero()
    }
    fn from_rational(&self, q: &Rational) -> Result<ParamPoly, ExactError> {
        Ok(ParamPoly::constant(&self.vars, q.clone()))
    }
}
