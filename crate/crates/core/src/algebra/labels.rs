//! G-equivariant labelings of hyperplanes generated from base labels, for
//! Coxeter groups (labels on the simple hyperplanes) and for G(m,1,n)
//! (labels v_i, v^a_{i,j} moved by explicit generator rules).

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use serde_json::{json, Value};

use crate::refgroups::{GHyp, GroupKind, ReflectionGroup};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LabelError {
    #[error("hyperplane {hyperplane} labeled both {existing} and {proposed}")]
    Conflict {
        hyperplane: usize,
        existing: String,
        proposed: String,
    },
    #[error("hyperplane {0} never received a label")]
    Unlabeled(usize),
    #[error("hyperplanes {0} and {1} share a label")]
    NotInjective(usize, usize),
    #[error("base labels violate hypothesis {0}")]
    Hypothesis(String),
    #[error("labels not equivariant for element {w} on hyperplane {hyperplane}")]
    NotEquivariant { w: usize, hyperplane: usize },
    #[error("unsupported group {0}")]
    Unsupported(String),
}

/// Labels of G(m,1,n), indices 1-based: `V(i)` is v_i and `Pair` is
/// v^a_{i,j} with i < j.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum GLabel {
    V(usize),
    Pair { i: usize, j: usize, a: u32 },
}

impl fmt::Display for GLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GLabel::V(i) => write!(f, "v{}", i),
            GLabel::Pair { i, j, a } => write!(f, "v^{}_{},{}", a, i, j),
        }
    }
}

/// Which rule moved a label. `A`..`I` are the identities of the G(m,1,n)
/// closure; `GInv`, `HInv` run (g), (h) backwards and `Flip` is
/// S_i v^a_{i,i+1} = v^{-a}_{i,i+1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum LabelRule {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    GInv,
    H,
    HInv,
    I,
    Flip,
}

impl LabelRule {
    pub const PROOF_RULES: [LabelRule; 9] = [
        LabelRule::A,
        LabelRule::B,
        LabelRule::C,
        LabelRule::D,
        LabelRule::E,
        LabelRule::F,
        LabelRule::G,
        LabelRule::H,
        LabelRule::I,
    ];
}

/// The generator rules: `k = 0` is S_0, `k >= 1` the swap S_k.
pub fn g_rule(m: u32, k: usize, label: GLabel) -> (GLabel, LabelRule) {
    use GLabel::*;
    use LabelRule as R;
    if k == 0 {
        return match label {
            V(i) => (V(i), R::A),
            Pair { i: 1, j, a } => (
                Pair {
                    i: 1,
                    j,
                    a: (a + m - 1) % m,
                },
                R::B,
            ),
            p => (p, R::C),
        };
    }
    match label {
        V(j) if j == k => (V(k + 1), R::D),
        V(j) if j == k + 1 => (V(k), R::E),
        v @ V(_) => (v, R::F),
        Pair { i, j, a } if i == k && j == k + 1 => (Pair { i, j, a: (m - a) % m }, R::Flip),
        Pair { i, j, a } if i == k => (Pair { i: k + 1, j, a }, R::G),
        Pair { i, j, a } if i == k + 1 => (Pair { i: k, j, a }, R::GInv),
        Pair { i, j, a } if j == k => (Pair { i, j: k + 1, a }, R::H),
        Pair { i, j, a } if j == k + 1 => (Pair { i, j: k, a }, R::HInv),
        p => (p, R::I),
    }
}

/// The intended correspondence: H_i to v_i and H_{i,j;a} to v^{-a}_{i,j}
/// (S_0 raises a on hyperplanes and lowers it on labels).
pub fn g_natural_label(m: u32, h: GHyp) -> GLabel {
    match h {
        GHyp::Coord(i) => GLabel::V(i),
        GHyp::Diag { i, j, a } => GLabel::Pair { i, j, a: (m - a) % m },
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GLabelReport {
    /// label per hyperplane index
    pub labels: Vec<GLabel>,
    pub rule_instances: BTreeMap<LabelRule, usize>,
    pub natural: bool,
    pub elements_checked: usize,
}

impl GLabelReport {
    pub fn to_json(&self, g: &ReflectionGroup) -> Value {
        let labels: Vec<Value> = self
            .labels
            .iter()
            .enumerate()
            .map(|(h, l)| {
                let hyp = g.g_hyp_label(h).map(|x| x.to_string()).unwrap_or_default();
                json!({"hyperplane": h, "name": hyp, "label": l.to_string()})
            })
            .collect();
        let rules: BTreeMap<String, usize> = self
            .rule_instances
            .iter()
            .map(|(r, c)| (format!("{:?}", r), *c))
            .collect();
        json!({"labels": labels, "rule_instances": rules, "natural": self.natural, "elements_checked": self.elements_checked})
    }
}

/// Closure of the G(m,1,n) labels from v_1 on H_1 and v^0_{i,i+1} on
/// H_{i,i+1;0}, followed by an exhaustive equivariance check over all
/// group elements.
pub fn g_m1n_labels(g: &ReflectionGroup) -> Result<GLabelReport, LabelError> {
    let GroupKind::Gm1n { m, n } = *g.kind() else {
        return Err(LabelError::Unsupported(g.name().to_string()));
    };
    let hyp = |l: GHyp| g.g_hyp_index(l).expect("hyperplane exists");
    let mut seeds = vec![(hyp(GHyp::Coord(1)), GLabel::V(1))];
    seeds.extend((1..n).map(|i| {
        (
            hyp(GHyp::Diag { i, j: i + 1, a: 0 }),
            GLabel::Pair { i, j: i + 1, a: 0 },
        )
    }));
    let mut rule_instances = BTreeMap::new();
    let labels = close(g, &seeds, |k, l| {
        let (out, rule) = g_rule(m, k, *l);
        *rule_instances.entry(rule).or_insert(0) += 1;
        out
    })?;
    let elements_checked = check_equivariant(g, &labels, |k, l| g_rule(m, k, *l).0)?;
    let natural = (0..g.num_hyperplanes()).all(|h| g.g_hyp_label(h).map(|x| g_natural_label(m, x)) == Some(labels[h]));
    Ok(GLabelReport {
        labels,
        rule_instances,
        natural,
        elements_checked,
    })
}

/// Coxeter case: `base[i]` labels the hyperplane of the i-th simple
/// reflection and `act(k, x)` is the action of the k-th generator on the
/// label set. Checks the four hypotheses on the base, then closes.
pub fn coxeter_labels<T, F>(g: &ReflectionGroup, base: &[T], act: F) -> Result<Vec<T>, LabelError>
where
    T: Clone + PartialEq + fmt::Debug,
    F: Fn(usize, &T) -> T,
{
    let gens = g.generators();
    if base.len() != gens.len()
        || !matches!(
            g.kind(),
            GroupKind::Coxeter { .. } | GroupKind::Dihedral { .. } | GroupKind::TypeA { .. }
        )
    {
        return Err(LabelError::Unsupported(g.name().to_string()));
    }
    let apply = |word: &[usize], x: &T| word.iter().rev().fold(x.clone(), |acc, &k| act(k, &acc));
    for i in 0..gens.len() {
        if act(i, &base[i]) != base[i] {
            return Err(LabelError::Hypothesis(format!("(4) at {}", i)));
        }
        for j in 0..gens.len() {
            if i == j {
                continue;
            }
            let mij = g.element_order(g.mul(gens[i], gens[j]));
            // [s_i s_j ...] with `len` letters
            let alt = |len: usize| -> Vec<usize> { (0..len).map(|t| if t % 2 == 0 { i } else { j }).collect() };
            let ok = match mij {
                2 => act(i, &base[j]) == base[j],
                odd if odd % 2 == 1 => apply(&alt(odd - 1), &base[i]) == base[j],
                even => apply(&alt(even - 1), &base[j]) == base[j],
            };
            if !ok {
                return Err(LabelError::Hypothesis(format!("m_{},{} = {}", i, j, mij)));
            }
        }
    }
    let seeds: Vec<(usize, T)> = gens
        .iter()
        .zip(base)
        .map(|(&s, b)| (g.hyperplane_of(s).expect("generator is a reflection"), b.clone()))
        .collect();
    close(g, &seeds, |k, x| act(k, x))
}

fn close<T, F>(g: &ReflectionGroup, seeds: &[(usize, T)], mut act: F) -> Result<Vec<T>, LabelError>
where
    T: Clone + PartialEq + fmt::Debug,
    F: FnMut(usize, &T) -> T,
{
    let gens = g.generators();
    let mut labels: Vec<Option<T>> = vec![None; g.num_hyperplanes()];
    let mut queue = Vec::new();
    for (h, l) in seeds {
        assign(&mut labels, *h, l.clone(), &mut queue)?;
    }
    let mut head = 0;
    while head < queue.len() {
        let h = queue[head];
        head += 1;
        let label = labels[h].clone().expect("queued hyperplanes are labeled");
        for (k, &s) in gens.iter().enumerate() {
            let moved = act(k, &label);
            assign(&mut labels, g.act_hyp(s, h), moved, &mut queue)?;
        }
    }
    let labels: Vec<T> = labels
        .into_iter()
        .enumerate()
        .map(|(h, l)| l.ok_or(LabelError::Unlabeled(h)))
        .collect::<Result<_, _>>()?;
    for a in 0..labels.len() {
        for b in a + 1..labels.len() {
            if labels[a] == labels[b] {
                return Err(LabelError::NotInjective(a, b));
            }
        }
    }
    Ok(labels)
}

fn assign<T: Clone + PartialEq + fmt::Debug>(
    labels: &mut [Option<T>],
    h: usize,
    l: T,
    queue: &mut Vec<usize>,
) -> Result<(), LabelError> {
    match &labels[h] {
        Some(old) if *old != l => Err(LabelError::Conflict {
            hyperplane: h,
            existing: format!("{:?}", old),
            proposed: format!("{:?}", l),
        }),
        Some(_) => Ok(()),
        None => {
            labels[h] = Some(l);
            queue.push(h);
            Ok(())
        }
    }
}

/// `w . label(h) = label(w(h))` for every element, acting through its word.
pub fn check_equivariant<T, F>(g: &ReflectionGroup, labels: &[T], act: F) -> Result<usize, LabelError>
where
    T: Clone + PartialEq,
    F: Fn(usize, &T) -> T,
{
    for w in 0..g.order() {
        let word = g.word(w);
        for (h, l) in labels.iter().enumerate() {
            let moved = word.iter().rev().fold(l.clone(), |acc, &k| act(k, &acc));
            if moved != labels[g.act_hyp(w, h)] {
                return Err(LabelError::NotEquivariant { w, hyperplane: h });
            }
        }
    }
    Ok(g.order())
}
