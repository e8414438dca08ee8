//! The parameter data Υ: one μ per reflection class, one τ per hyperplane
//! orbit.

use serde_json::{json, Value};

use super::relations::ParamValues;
use crate::exactnum::{ExactError, ParamPoly, PolyRing, Ring, Vars};
use crate::refgroups::ReflectionGroup;

#[derive(Debug, Clone)]
pub struct ParamSet {
    vars: Vars,
    mu: Vec<ParamPoly>,
    tau: Vec<ParamPoly>,
}

impl ParamSet {
    /// Every μ and τ an independent variable, named after the group's
    /// class and orbit names.
    pub fn symbolic(g: &ReflectionGroup) -> Self {
        let mut names: Vec<String> = g.class_names().to_vec();
        names.extend(g.orbit_names().iter().cloned());
        let vars = Vars::new(&names);
        let mu = g
            .class_names()
            .iter()
            .map(|n| ParamPoly::var(&vars, n).unwrap())
            .collect();
        let tau = g
            .orbit_names()
            .iter()
            .map(|n| ParamPoly::var(&vars, n).unwrap())
            .collect();
        ParamSet { vars, mu, tau }
    }

    /// μ = 1 on every class, τ symbolic.
    pub fn unit_mu(g: &ReflectionGroup) -> Self {
        let vars = Vars::new(g.orbit_names());
        let mu = vec![ParamPoly::one(&vars); g.refl_classes().len()];
        let tau = g
            .orbit_names()
            .iter()
            .map(|n| ParamPoly::var(&vars, n).unwrap())
            .collect();
        ParamSet { vars, mu, tau }
    }

    pub fn custom(vars: Vars, mu: Vec<ParamPoly>, tau: Vec<ParamPoly>) -> Self {
        ParamSet { vars, mu, tau }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn ring(&self) -> PolyRing {
        PolyRing::new(self.vars.clone())
    }

    pub fn mu_class(&self, c: usize) -> &ParamPoly {
        &self.mu[c]
    }

    pub fn tau_orbit(&self, o: usize) -> &ParamPoly {
        &self.tau[o]
    }

    /// μ_s for a pseudo-reflection s.
    pub fn mu_of(&self, g: &ReflectionGroup, s: usize) -> &ParamPoly {
        &self.mu[g.class_of(s).expect("not a pseudo-reflection")]
    }

    /// τ of the orbit of hyperplane i.
    pub fn tau_of(&self, g: &ReflectionGroup, i: usize) -> &ParamPoly {
        &self.tau[g.orbit_of(i)]
    }

    /// Values of μ and τ in another ring.
    pub fn evaluate<R: Ring>(&self, ring: &R, values: &ParamValues<R::Elem>) -> Result<Evaluated<R::Elem>, ExactError> {
        let vals: Vec<R::Elem> = self
            .vars
            .names()
            .iter()
            .map(|n| {
                values
                    .get(n)
                    .cloned()
                    .ok_or_else(|| ExactError::MissingVariable(n.clone()))
            })
            .collect::<Result<_, _>>()?;
        let ev = |p: &ParamPoly| p.eval_in(ring, &vals);
        Ok(Evaluated {
            mu: self.mu.iter().map(ev).collect::<Result<_, _>>()?,
            tau: self.tau.iter().map(ev).collect::<Result<_, _>>()?,
        })
    }

    /// The parameters as elements of their own polynomial ring.
    pub fn symbolic_values(&self) -> Evaluated<ParamPoly> {
        Evaluated {
            mu: self.mu.clone(),
            tau: self.tau.clone(),
        }
    }

    /// Every μ must be nonzero.
    pub fn validate<R: Ring>(&self, ring: &R, ev: &Evaluated<R::Elem>) -> Result<(), ParamError> {
        match ev.mu.iter().position(|m| ring.is_zero(m)) {
            Some(c) => Err(ParamError::ZeroMu(c)),
            None => Ok(()),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "vars": self.vars.names(),
            "mu": self.mu.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "tau": self.tau.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParamError {
    #[error("mu of reflection class {0} is zero")]
    ZeroMu(usize),
}

/// μ per reflection class and τ per orbit, as ring elements.
#[derive(Debug, Clone)]
pub struct Evaluated<E> {
    pub mu: Vec<E>,
    pub tau: Vec<E>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, Rationals};
    use crate::refgroups::{build_dihedral, build_g_m1n};

    #[test]
    fn names_follow_the_group() {
        let g = build_dihedral(6).unwrap();
        let p = ParamSet::symbolic(&g);
        assert_eq!(p.vars().names(), ["mu0", "mu1", "tau0", "tau1"]);
        let s1 = g.generators()[1];
        assert_eq!(p.mu_of(&g, s1).to_string(), "mu1");
        let u = ParamSet::unit_mu(&build_dihedral(5).unwrap());
        assert_eq!(u.vars().names(), ["tau"]);
        let g = build_g_m1n(3, 2).unwrap();
        assert_eq!(ParamSet::symbolic(&g).vars().len(), 5);
    }

    #[test]
    fn zero_mu_is_rejected() {
        let g = build_dihedral(5).unwrap();
        let p = ParamSet::symbolic(&g);
        let vals: ParamValues<_> = [("mu".to_string(), int(0)), ("tau".to_string(), int(3))].into();
        let ev = p.evaluate(&Rationals, &vals).unwrap();
        assert_eq!(p.validate(&Rationals, &ev), Err(ParamError::ZeroMu(0)));
    }
}
