//! Comparison of the G(m,1,n) presentation B'_G with the cyclotomic Brauer
//! diagram algebra. Phi: S_i -> s_i, S_0 -> t_1, E_i -> e_i, E_0 -> 0;
//! Psi: s_i -> S_i, t_i -> S_{i-1}..S_1 S_0 S_1..S_{i-1}, e_i -> E_i.
//!
//! Both directions are checked as generator identities in two models: the
//! regular module of the diagram algebra and the LK representation of
//! B_G(Υ), where E_0 does not vanish.

use std::collections::HashMap;

use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::presentations::{def21, def83};
use crate::algebra::{
    check_relations, g_m1n_labels, symbolic_values, Algebra, Gen, LabelError, LinearModel, ParamSet, ParamValues,
    PresentationError, Probes, Rebind, Regular, RelationReport, Variant, Word,
};
use crate::diagrams::{loop_class, CycloAlgebra, DiagramError};
use crate::exactnum::{ExactError, ParamPoly, PolyRing, Ring, SparseVec, SparseVecExt, Vars};
use crate::refgroups::{build_g_m1n, GroupError, ReflectionGroup};
use crate::reps::{lk_rep, MatrixRep};

#[derive(Debug, Error)]
pub enum ComparisonError {
    #[error("G({0},1,{1}) needs m, n >= 2")]
    Unsupported(u32, usize),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Label(#[from] LabelError),
}

fn check_size(m: u32, n: usize) -> Result<(), ComparisonError> {
    if m < 2 || n < 2 {
        return Err(ComparisonError::Unsupported(m, n));
    }
    Ok(())
}

/// Phi on the generators of B'_G, as words in the diagram generators
/// (S(i), E(i), T(j) 1-based); `None` is zero.
pub fn phi_images(m: u32, n: usize) -> Result<HashMap<Gen, Option<Word>>, ComparisonError> {
    check_size(m, n)?;
    let mut map = HashMap::new();
    map.insert(Gen::S(0), Some(vec![Gen::T(1)]));
    map.insert(Gen::E(0), None);
    for i in 1..n {
        map.insert(Gen::S(i), Some(vec![Gen::S(i)]));
        map.insert(Gen::E(i), Some(vec![Gen::E(i)]));
    }
    Ok(map)
}

/// Psi on the diagram generators, as words in S_0..S_{n-1}, E_1..E_{n-1}.
pub fn psi_images(m: u32, n: usize) -> Result<HashMap<Gen, Word>, ComparisonError> {
    check_size(m, n)?;
    let mut map = HashMap::new();
    for i in 1..n {
        map.insert(Gen::S(i), vec![Gen::S(i)]);
        map.insert(Gen::E(i), vec![Gen::E(i)]);
    }
    for i in 1..=n {
        let down: Word = (1..i).rev().map(Gen::S).collect();
        let up: Word = (1..i).map(Gen::S).collect();
        map.insert(Gen::T(i), [down, vec![Gen::S(0)], up].concat());
    }
    Ok(map)
}

/// The diagram algebra over Q[d_0..d_{m/2}], one loop variable per class
/// {a, m-a}.
pub fn cyclo_model(m: u32, n: usize) -> Result<CycloAlgebra<PolyRing>, ComparisonError> {
    check_size(m, n)?;
    let ring = PolyRing::new(Vars::new(&loop_names(m)));
    let delta = loop_names(m).iter().map(|x| ring.var(x)).collect::<Result<_, _>>()?;
    Ok(CycloAlgebra::new(m, n, ring, delta)?)
}

fn loop_names(m: u32) -> Vec<String> {
    (0..=m / 2).map(|c| format!("d{}", c)).collect()
}

/// Values of the B'_G parameters under Phi: mu = 1, mu_a = delta_a,
/// tau1 = delta_0. tau0 only multiplies E_0 and is set to delta_0 as well.
pub fn phi_values(alg: &CycloAlgebra<PolyRing>) -> Result<ParamValues<ParamPoly>, ComparisonError> {
    let ring = alg.ring();
    let m = alg.m();
    let class = |a: u32| ring.var(&format!("d{}", loop_class(a as i64, m)));
    let mut vals = HashMap::new();
    vals.insert("mu".to_string(), ring.one());
    for a in 1..m {
        vals.insert(format!("mu{}", a), class(a)?);
    }
    vals.insert("tau0".to_string(), class(0)?);
    vals.insert("tau1".to_string(), class(0)?);
    Ok(vals)
}

/// Loop values forced in B_G(Υ): delta_0 = tau1 and delta_a = mu_a +
/// mu_{m-a} + mu * #{b : 2b = a mod m}, from the B'_G parameter values.
pub fn lk_delta_values(
    m: u32,
    ring: &PolyRing,
    vals: &ParamValues<ParamPoly>,
) -> Result<ParamValues<ParamPoly>, ComparisonError> {
    let get = |name: String| vals.get(&name).cloned().ok_or(ExactError::MissingVariable(name));
    let mut out = HashMap::new();
    out.insert("delta0".to_string(), get("tau1".into())?);
    for a in 1..m {
        let halves = (0..m).filter(|b| (2 * b) % m == a).count() as i64;
        let mu = get("mu".into())?;
        let v = get(format!("mu{}", a))?
            .try_add(&get(format!("mu{}", m - a))?)?
            .try_add(&ring.mul(&mu, &ring.from_int(halves)))?;
        out.insert(format!("delta{}", a), v);
    }
    Ok(out)
}

/// S_k to the k-th generator of G(m,1,n) and E_k to its hyperplane.
pub fn engine_map(g: &ReflectionGroup) -> HashMap<Gen, Option<Word>> {
    g.generators()
        .iter()
        .enumerate()
        .flat_map(|(k, &s)| {
            [
                (Gen::S(k), Some(vec![Gen::W(s)])),
                (
                    Gen::E(k),
                    Some(vec![Gen::E(g.hyperplane_of(s).expect("generator is a reflection"))]),
                ),
            ]
        })
        .collect()
}

fn some_words(map: HashMap<Gen, Word>) -> HashMap<Gen, Option<Word>> {
    map.into_iter().map(|(k, v)| (k, Some(v))).collect()
}

/// Generators on which two models disagree on some basis vector.
fn disagreements<A, B>(a: &A, b: &B, gens: &[Gen]) -> Vec<String>
where
    A: LinearModel,
    B: LinearModel<R = A::R>,
{
    let ring = a.ring();
    let mut out = Vec::new();
    for &g in gens {
        let differs = (0..a.dim()).any(|v| {
            let (x, y) = (a.act_basis(g, v), b.act_basis(g, v));
            match (x, y) {
                (Some(x), Some(y)) => {
                    let mut d = x;
                    d.add_scaled(ring, &ring.neg(&ring.one()), &y);
                    !d.is_empty()
                }
                _ => true,
            }
        });
        if differs {
            out.push(g.to_string());
        }
    }
    out
}

fn diagram_generators(n: usize) -> Vec<Gen> {
    let mut gens: Vec<Gen> = (1..n).flat_map(|i| [Gen::S(i), Gen::E(i)]).collect();
    gens.extend((1..=n).map(Gen::T));
    gens
}

/// Conjugates of the base idempotents onto every hyperplane.
#[derive(Debug, Clone, Serialize)]
pub struct FElements {
    /// hyperplane name and the word w E_k w^-1 in B'_G generators
    pub words: Vec<(String, String)>,
    /// (w, k) pairs with w(H_k) = H compared against the chosen word
    pub conjugates_checked: usize,
    pub conflicts: Vec<String>,
    /// the closure labels of G(m,1,n) agree with the natural ones
    pub labels_natural: bool,
}

/// F(H) = w E_k w^-1 for a shortest w carrying the base hyperplane of
/// E_k (H_1 for k = 0, H_{k,k+1;0} otherwise) to H. Every other (w, k)
/// with w(base_k) = H is compared in the LK representation.
pub fn f_elements(g: &ReflectionGroup, lk: &MatrixRep<PolyRing>) -> Result<FElements, ComparisonError> {
    let labels = g_m1n_labels(g)?;
    let bases: Vec<usize> = g
        .generators()
        .iter()
        .map(|&s| g.hyperplane_of(s).expect("generator is a reflection"))
        .collect();
    let ring = lk.ring();
    let group_word = |w: usize| -> Word { g.word(w).iter().map(|&k| Gen::S(k)).collect() };
    let conj = |w: usize, k: usize| -> Word { [group_word(w), vec![Gen::E(k)], group_word(g.inverse(w))].concat() };
    let model = Rebind::new(lk, engine_map(g));
    let image = |word: &Word| -> Vec<SparseVec<_>> {
        (0..lk.dim())
            .map(|v| {
                model
                    .act_word(word, &SparseVec::unit(ring, v))
                    .expect("engine generators")
            })
            .collect()
    };
    let mut words = Vec::new();
    let mut conflicts = Vec::new();
    let mut checked = 0;
    for h in 0..g.num_hyperplanes() {
        let mut pairs: Vec<(usize, usize)> = (0..g.order())
            .flat_map(|w| (0..bases.len()).map(move |k| (w, k)))
            .filter(|&(w, k)| g.act_hyp(w, bases[k]) == h)
            .collect();
        pairs.sort_by_key(|&(w, k)| (g.word(w).len(), k));
        let (w0, k0) = pairs[0];
        let chosen = conj(w0, k0);
        let reference = image(&chosen);
        for &(w, k) in &pairs[1..] {
            checked += 1;
            if image(&conj(w, k)) != reference {
                conflicts.push(format!("{} via {} and k={}", hyp_name(g, h), g.element_name(w), k));
            }
        }
        let text = chosen.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        words.push((hyp_name(g, h), text));
    }
    Ok(FElements {
        words,
        conjugates_checked: checked,
        conflicts,
        labels_natural: labels.natural,
    })
}

fn hyp_name(g: &ReflectionGroup, h: usize) -> String {
    g.g_hyp_label(h)
        .map(|x| x.to_string())
        .unwrap_or_else(|| format!("H#{}", h))
}

#[derive(Debug, Clone, Serialize)]
pub struct ComparisonReport {
    pub m: u32,
    pub n: usize,
    pub cyclo_dim: usize,
    /// printed B'_G relations through Phi in the diagram algebra
    pub phi_printed: RelationReport,
    /// corrected B'_G relations through Phi, for comparison
    pub phi_corrected: RelationReport,
    /// diagram generators where Phi(Psi(x)) != x
    pub phi_psi_mismatches: Vec<String>,
    /// corrected B'_G relations in the LK representation of B_G(Υ)
    pub lk_def83: RelationReport,
    /// corrected diagram relations through Psi in the LK representation
    pub lk_def21: RelationReport,
    pub lk_dim: usize,
    pub e0_nonzero: bool,
    pub f_elements: FElements,
}

impl ComparisonReport {
    pub fn passed(&self) -> bool {
        self.phi_printed.passed()
            && self.phi_psi_mismatches.is_empty()
            && self.lk_def83.passed()
            && self.lk_def21.passed()
            && self.e0_nonzero
            && self.f_elements.conflicts.is_empty()
    }

    pub fn to_json(&self) -> Value {
        let rel = |r: &RelationReport| json!({"checked": r.checked, "passed": r.passed(), "failed": r.failed_names(), "residuals": r.failures.len()});
        json!({
            "group": format!("G({},1,{})", self.m, self.n),
            "cyclo_dim": self.cyclo_dim,
            "phi": {"printed": rel(&self.phi_printed), "corrected": rel(&self.phi_corrected)},
            "phi_psi_identity": self.phi_psi_mismatches.is_empty(),
            "phi_psi_mismatches": self.phi_psi_mismatches,
            "lk": {
                "dim": self.lk_dim,
                "def83": rel(&self.lk_def83),
                "def21_via_psi": rel(&self.lk_def21),
                "e0_nonzero": self.e0_nonzero,
            },
            "f_elements": self.f_elements,
            "passed": self.passed(),
        })
    }
}

/// Runs both models for G(m,1,n).
pub fn compare(m: u32, n: usize) -> Result<ComparisonReport, ComparisonError> {
    let alg = cyclo_model(m, n)?;
    let regular = Regular(&alg);
    let phi = Rebind::new(&regular, phi_images(m, n)?);
    let vals = phi_values(&alg)?;
    let phi_printed = check_relations(&phi, &def83(m, n, Variant::Printed)?, &vals, &Probes::AllBasis)?;
    let phi_corrected = check_relations(&phi, &def83(m, n, Variant::Corrected)?, &vals, &Probes::AllBasis)?;
    let phi_psi = Rebind::new(&phi, some_words(psi_images(m, n)?));
    let phi_psi_mismatches = disagreements(&regular, &phi_psi, &diagram_generators(n));

    // mu = 1 as in the comparison premise; the other parameters stay free
    let g = build_g_m1n(m, n)?;
    let params = ParamSet::symbolic(&g);
    let ring = params.ring();
    let mut lk_vals = symbolic_values(params.vars(), &ring)?;
    lk_vals.insert("mu".to_string(), ring.one());
    let ev = params.evaluate(&ring, &lk_vals)?;
    let lk = lk_rep(&g, &ring, &ev);
    let in_lk = Rebind::new(&lk, engine_map(&g));
    let lk_def83 = check_relations(&in_lk, &def83(m, n, Variant::Corrected)?, &lk_vals, &Probes::AllBasis)?;
    let psi_lk = Rebind::new(&in_lk, some_words(psi_images(m, n)?));
    let deltas = lk_delta_values(m, &ring, &lk_vals)?;
    let lk_def21 = check_relations(&psi_lk, &def21(m, n, Variant::Corrected), &deltas, &Probes::AllBasis)?;
    let e0_nonzero = (0..lk.dim()).any(|v| in_lk.act_basis(Gen::E(0), v).is_some_and(|x| !x.is_empty()));
    let f_elements = f_elements(&g, &lk)?;
    Ok(ComparisonReport {
        m,
        n,
        cyclo_dim: alg.dim(),
        phi_printed,
        phi_corrected,
        phi_psi_mismatches,
        lk_def83,
        lk_def21,
        lk_dim: lk.dim(),
        e0_nonzero,
        f_elements,
    })
}
