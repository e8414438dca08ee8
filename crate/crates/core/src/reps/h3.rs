//! The four 15-dimensional representations induced from characters of the
//! centralizer of s_0, and the 5-dimensional one on perpendicular classes.
//! All use mu = 1.

use serde_json::json;

use super::{MatrixRep, Operator, RepError};
use crate::exactnum::{Ring, SparseVec, SparseVecExt};
use crate::refgroups::{GroupKind, ReflectionGroup};

/// Fixed choices for H3: generators, the central element, the stabilizer
/// G_0 of s_0, coset representatives and the perpendicular classes.
#[derive(Debug, Clone)]
pub struct H3Data {
    pub s0: usize,
    pub s1: usize,
    pub s2: usize,
    pub c: usize,
    /// the reflection of each hyperplane
    pub refl: Vec<usize>,
    pub h0: usize,
    /// G_0 elements with their (s_2, c) exponents
    pub g0: Vec<(usize, (u8, u8))>,
    /// w_i with w_i(H_0) = H_i, minimal, w_0 = identity
    pub coset_reps: Vec<usize>,
    /// perpendicular classes as sorted hyperplane lists
    pub classes: Vec<Vec<usize>>,
    pub class_of_hyp: Vec<usize>,
    /// `transporter[a][b]`: minimal w with w(R_a) = R_b
    pub transporter: Vec<Vec<usize>>,
}

impl H3Data {
    pub fn new(g: &ReflectionGroup) -> Result<Self, RepError> {
        let is_h3 = matches!(g.kind(), GroupKind::Coxeter { .. }) && g.order() == 120 && g.rank() == 3;
        if !is_h3 {
            return Err(RepError::MissingGenerator(format!("{} is not H3", g.name())));
        }
        let (s0, s1, s2) = (g.generators()[0], g.generators()[1], g.generators()[2]);
        let c = (0..5).fold(g.identity(), |acc, _| g.mul_all(&[acc, s2, s0, s1]));
        let nh = g.num_hyperplanes();
        let refl: Vec<usize> = (0..nh).map(|i| g.reflections_at(i)[0]).collect();
        let h0 = g.hyperplane_of(s0).expect("reflection");
        let mut g0 = Vec::new();
        for a in 0..2 {
            for b in 0..2u8 {
                for d in 0..2u8 {
                    let pick = |x: usize, e: u8| if e == 1 { x } else { g.identity() };
                    let v = g.mul_all(&[pick(s0, a), pick(s2, b), pick(c, d)]);
                    g0.push((v, (b, d)));
                }
            }
        }
        let centralizer = (0..g.order()).filter(|&w| g.mul(w, s0) == g.mul(s0, w)).count();
        let mut distinct: Vec<usize> = g0.iter().map(|x| x.0).collect();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() != 8 || centralizer != 8 {
            return Err(RepError::NotInStabilizer(
                "<s0, s2, c> is not the centralizer of s0".into(),
            ));
        }
        let coset_reps = (0..nh)
            .map(|i| {
                if i == h0 {
                    g.identity()
                } else {
                    (0..g.order()).find(|&w| g.act_hyp(w, h0) == i).expect("transitive")
                }
            })
            .collect();
        let perp = g.perp_classes()?;
        let classes: Vec<Vec<usize>> = perp
            .iter()
            .map(|cl| {
                let mut h: Vec<usize> = cl.iter().map(|&s| g.hyperplane_of(s).expect("reflection")).collect();
                h.sort_unstable();
                h
            })
            .collect();
        let mut class_of_hyp = vec![0; nh];
        for (a, cl) in classes.iter().enumerate() {
            for &h in cl {
                class_of_hyp[h] = a;
            }
        }
        let move_class = |w: usize, a: usize| class_of_hyp[g.act_hyp(w, classes[a][0])];
        let transporter = (0..classes.len())
            .map(|a| {
                (0..classes.len())
                    .map(|b| {
                        (0..g.order())
                            .find(|&w| move_class(w, a) == b)
                            .expect("transitive on classes")
                    })
                    .collect()
            })
            .collect();
        Ok(H3Data {
            s0,
            s1,
            s2,
            c,
            refl,
            h0,
            g0,
            coset_reps,
            classes,
            class_of_hyp,
            transporter,
        })
    }

    /// sigma_alpha(v) for v in G_0; alpha = 0..3 picks the signs on
    /// (s_2, c) as (+,+), (-,+), (+,-), (-,-).
    pub fn sigma(&self, alpha: usize, v: usize) -> Option<i64> {
        let (b, d) = self.g0.iter().find(|x| x.0 == v)?.1;
        let s2_sign = if alpha & 1 == 1 { -1 } else { 1 };
        let c_sign = if alpha & 2 == 2 { -1 } else { 1 };
        Some(if b == 1 { s2_sign } else { 1 } * if d == 1 { c_sign } else { 1 })
    }

    pub fn perpendicular(&self, i: usize, j: usize) -> bool {
        i != j && self.class_of_hyp[i] == self.class_of_hyp[j]
    }

    /// The unique reflection s with s(H_j) = H_i, for non-perpendicular i != j.
    pub fn transporting_reflection(&self, g: &ReflectionGroup, i: usize, j: usize) -> Option<usize> {
        let found: Vec<usize> = self.refl.iter().copied().filter(|&s| g.act_hyp(s, j) == i).collect();
        (found.len() == 1).then(|| found[0])
    }
}

fn scalar<R: Ring>(ring: &R, x: i64) -> R::Elem {
    ring.from_int(x)
}

/// The induced representation extended by the idempotent action.
pub fn h3_induced_rep<R: Ring>(
    g: &ReflectionGroup,
    data: &H3Data,
    alpha: usize,
    ring: &R,
    tau: &R::Elem,
) -> Result<MatrixRep<R>, RepError> {
    let nh = g.num_hyperplanes();
    let w_of = &data.coset_reps;
    let sigma = |v: usize| {
        data.sigma(alpha, v)
            .ok_or_else(|| RepError::NotInStabilizer(g.element_name(v)))
    };
    let group: Vec<Operator<R::Elem>> = (0..g.order())
        .map(|w| {
            (0..nh)
                .map(|i| {
                    let k = g.act_hyp(w, i);
                    let v = g.mul_all(&[g.inverse(w_of[k]), w, w_of[i]]);
                    Ok(SparseVec::from([(k, scalar(ring, sigma(v)?))]))
                })
                .collect::<Result<_, RepError>>()
        })
        .collect::<Result<_, _>>()?;
    let idem: Vec<Operator<R::Elem>> = (0..nh)
        .map(|i| {
            (0..nh)
                .map(|j| {
                    let mut col = SparseVec::new();
                    if i == j {
                        col.add_term(ring, i, tau.clone());
                    } else if !data.perpendicular(i, j) {
                        let s = data
                            .transporting_reflection(g, i, j)
                            .ok_or_else(|| RepError::NotInStabilizer(format!("R({},{})", i, j)))?;
                        let v = g.mul_all(&[g.inverse(w_of[i]), s, w_of[j]]);
                        col.add_term(ring, i, scalar(ring, sigma(v)?));
                    }
                    Ok(col)
                })
                .collect::<Result<_, RepError>>()
        })
        .collect::<Result<_, _>>()?;
    let labels = (0..nh).map(|i| format!("v{}", i)).collect();
    let choices = json!({
        "alpha": alpha,
        "coset_reps": w_of.iter().map(|&w| g.element_name(w)).collect::<Vec<_>>(),
        "c": g.element_name(data.c),
    });
    Ok(MatrixRep::new(ring.clone(), group, idem, labels)
        .with_lines((0..nh).map(Some).collect())
        .with_choices(choices))
}

/// The 5-dimensional representation on the perpendicular classes.
pub fn h3_rho4<R: Ring>(g: &ReflectionGroup, data: &H3Data, ring: &R, tau: &R::Elem) -> MatrixRep<R> {
    let k = data.classes.len();
    let group = (0..g.order())
        .map(|w| {
            (0..k)
                .map(|p| SparseVec::unit(ring, data.class_of_hyp[g.act_hyp(w, data.classes[p][0])]))
                .collect()
        })
        .collect();
    let idem = (0..g.num_hyperplanes())
        .map(|i| {
            let own = data.class_of_hyp[i];
            (0..k)
                .map(|p| {
                    let mut col = SparseVec::new();
                    if p == own {
                        col.add_term(ring, own, tau.clone());
                    } else {
                        col.add_term(ring, own, ring.one());
                    }
                    col
                })
                .collect()
        })
        .collect();
    let labels = (0..k).map(|p| format!("u{}", p)).collect();
    let lines = data.class_of_hyp.iter().map(|&p| Some(p)).collect();
    MatrixRep::new(ring.clone(), group, idem, labels)
        .with_lines(lines)
        .with_choices(json!({"classes": data.classes}))
}
