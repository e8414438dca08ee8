//! Finite (pseudo-)reflection groups with an exact matrix realization, and
//! the arrangement combinatorics derived from them.

mod arrangement;
mod build;

pub use arrangement::{Edge, EdgeReport};
pub use build::{build_coxeter, build_dihedral, build_g_m1n, build_h3, build_type_a, DihedralElem, GHyp};

use std::collections::{HashMap, VecDeque};

use serde_json::{json, Value};
use thiserror::Error;

use crate::exactnum::{identity, mat_mul, mat_sub, rank, Field, Matrix, NumberField, NumberFieldElem, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("enumeration exceeded {0} elements")]
    TooLarge(usize),
    #[error("hyperplane indices must differ")]
    SameHyperplane,
    #[error("commuting relation is not transitive on reflections")]
    NotEquivalence,
    #[error("cannot parse group spec `{0}`")]
    BadSpec(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupKind {
    Dihedral { m: u32 },
    Coxeter { matrix: Vec<Vec<u32>> },
    TypeA { n: usize },
    Gm1n { m: u32, n: usize },
}

const TABLE_LIMIT: usize = 6000;

/// An enumerated finite group generated by pseudo-reflections.
///
/// Elements are indexed in enumeration order; the identity is not assumed
/// to be index 0 (use [`ReflectionGroup::identity`]). Products are written
/// `mul(a, b) = a * b`, acting as `b` first.
#[derive(Debug, Clone)]
pub struct ReflectionGroup {
    name: String,
    kind: GroupKind,
    field: NumberField,
    rank: usize,
    mats: Vec<Matrix<NumberFieldElem>>,
    perms: Vec<Vec<u32>>,
    lookup: HashMap<Vec<u32>, usize>,
    table: Option<Vec<Vec<u32>>>,
    inv: Vec<usize>,
    identity: usize,
    gens: Vec<usize>,
    words: Vec<Vec<usize>>,
    reflections: Vec<usize>,
    hyp_of: Vec<Option<usize>>,
    forms: Vec<Vec<NumberFieldElem>>,
    hyp_action: Vec<Vec<u32>>,
    refl_at: Vec<Vec<usize>>,
    distinguished: Vec<usize>,
    orbits: Vec<Vec<usize>>,
    orbit_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<Option<usize>>,
    orbit_names: Vec<String>,
    class_names: Vec<String>,
}

fn compose(a: &[u32], b: &[u32]) -> Vec<u32> {
    b.iter().map(|&x| a[x as usize]).collect()
}

fn mat_vec(f: &NumberField, m: &Matrix<NumberFieldElem>, v: &[NumberFieldElem]) -> Vec<NumberFieldElem> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(f.zero(), |acc, (a, b)| f.add(&acc, &f.mul(a, b)))
        })
        .collect()
}

fn normalize_form(f: &NumberField, v: &[NumberFieldElem]) -> Option<Vec<NumberFieldElem>> {
    let lead = v.iter().find(|x| !x.is_zero())?;
    let inv = f.inv(lead).ok()?;
    Some(v.iter().map(|x| f.mul(x, &inv)).collect())
}

impl ReflectionGroup {
    /// Closes the generators under multiplication, breadth first from the
    /// identity, so generators come right after it.
    pub(crate) fn from_generators(
        name: String,
        kind: GroupKind,
        field: NumberField,
        gen_mats: Vec<Matrix<NumberFieldElem>>,
        bound: usize,
    ) -> Result<Self, GroupError> {
        let n = gen_mats[0].len();
        let vectors = vector_orbit(&field, &gen_mats, n, bound.saturating_mul(n))?;
        let vindex: HashMap<&Vec<NumberFieldElem>, u32> =
            vectors.iter().enumerate().map(|(i, v)| (v, i as u32)).collect();
        let gen_perms: Vec<Vec<u32>> = gen_mats
            .iter()
            .map(|g| vectors.iter().map(|v| vindex[&mat_vec(&field, g, v)]).collect())
            .collect();
        let id_perm: Vec<u32> = (0..vectors.len() as u32).collect();
        let mut perms = vec![id_perm.clone()];
        let mut mats = vec![identity(&field, n)];
        let mut lookup = HashMap::new();
        lookup.insert(id_perm, 0usize);
        let mut queue = VecDeque::from([0usize]);
        while let Some(w) = queue.pop_front() {
            for (g, gp) in gen_perms.iter().enumerate() {
                let p = compose(gp, &perms[w]);
                if lookup.contains_key(&p) {
                    continue;
                }
                if perms.len() >= bound {
                    return Err(GroupError::TooLarge(bound));
                }
                let idx = perms.len();
                lookup.insert(p.clone(), idx);
                perms.push(p);
                mats.push(mat_mul(&field, &gen_mats[g], &mats[w]));
                queue.push_back(idx);
            }
        }
        let gens = gen_perms.iter().map(|p| lookup[p]).collect();
        Self::assemble(name, kind, field, mats, perms, lookup, gens)
    }

    /// Uses a caller-chosen complete list of element matrices, in order.
    pub(crate) fn from_elements(
        name: String,
        kind: GroupKind,
        field: NumberField,
        mats: Vec<Matrix<NumberFieldElem>>,
        gens: Vec<usize>,
    ) -> Result<Self, GroupError> {
        let n = mats[0].len();
        let vectors = vector_orbit(&field, &mats, n, mats.len() * n)?;
        let vindex: HashMap<&Vec<NumberFieldElem>, u32> =
            vectors.iter().enumerate().map(|(i, v)| (v, i as u32)).collect();
        let perms: Vec<Vec<u32>> = mats
            .iter()
            .map(|g| vectors.iter().map(|v| vindex[&mat_vec(&field, g, v)]).collect())
            .collect();
        let mut lookup = HashMap::new();
        for (i, p) in perms.iter().enumerate() {
            if lookup.insert(p.clone(), i).is_some() {
                return Err(GroupError::InvalidParameter("repeated element".into()));
            }
        }
        for &g in &gens {
            for p in &perms {
                if !lookup.contains_key(&compose(&perms[g], p)) {
                    return Err(GroupError::InvalidParameter("element list not closed".into()));
                }
            }
        }
        Self::assemble(name, kind, field, mats, perms, lookup, gens)
    }

    fn assemble(
        name: String,
        kind: GroupKind,
        field: NumberField,
        mats: Vec<Matrix<NumberFieldElem>>,
        perms: Vec<Vec<u32>>,
        lookup: HashMap<Vec<u32>, usize>,
        gens: Vec<usize>,
    ) -> Result<Self, GroupError> {
        let order = perms.len();
        let n = mats[0].len();
        let id_perm: Vec<u32> = (0..perms[0].len() as u32).collect();
        let identity_idx = lookup[&id_perm];
        let table = (order <= TABLE_LIMIT).then(|| {
            perms
                .iter()
                .map(|a| perms.iter().map(|b| lookup[&compose(a, b)] as u32).collect())
                .collect()
        });
        let inv: Vec<usize> = perms
            .iter()
            .map(|p| {
                let mut q = vec![0u32; p.len()];
                for (x, &y) in p.iter().enumerate() {
                    q[y as usize] = x as u32;
                }
                lookup[&q]
            })
            .collect();

        let idm = identity(&field, n);
        let mut reflections = Vec::new();
        let mut hyp_of = vec![None; order];
        let mut forms: Vec<Vec<NumberFieldElem>> = Vec::new();
        let mut form_index: HashMap<Vec<NumberFieldElem>, usize> = HashMap::new();
        for w in 0..order {
            if w == identity_idx {
                continue;
            }
            let d = mat_sub(&field, &mats[w], &idm);
            if rank(&field, &d) != 1 {
                continue;
            }
            let row = d.iter().find(|r| r.iter().any(|x| !x.is_zero())).unwrap();
            let form = normalize_form(&field, row).unwrap();
            let h = *form_index.entry(form.clone()).or_insert_with(|| {
                forms.push(form);
                forms.len() - 1
            });
            reflections.push(w);
            hyp_of[w] = Some(h);
        }
        let nh = forms.len();
        let mut refl_at = vec![Vec::new(); nh];
        for &s in &reflections {
            refl_at[hyp_of[s].unwrap()].push(s);
        }

        let mut g = ReflectionGroup {
            name,
            kind,
            field,
            rank: n,
            mats,
            perms,
            lookup,
            table,
            inv,
            identity: identity_idx,
            gens,
            words: Vec::new(),
            reflections,
            hyp_of,
            forms,
            hyp_action: Vec::new(),
            refl_at,
            distinguished: Vec::new(),
            orbits: Vec::new(),
            orbit_of: Vec::new(),
            classes: Vec::new(),
            class_of: Vec::new(),
            orbit_names: Vec::new(),
            class_names: Vec::new(),
        };
        g.words = g.shortest_words();
        g.hyp_action = (0..order)
            .map(|w| {
                (0..nh)
                    .map(|i| {
                        let s = g.refl_at[i][0];
                        let c = g.mul(g.mul(w, s), g.inv[w]);
                        g.hyp_of[c].expect("conjugate of a reflection") as u32
                    })
                    .collect()
            })
            .collect();
        g.distinguished = (0..nh)
            .map(|i| {
                let ord = g.refl_at[i].len() + 1;
                *g.refl_at[i]
                    .iter()
                    .find(|&&s| g.element_order(s) == ord)
                    .expect("stabilizer of a hyperplane is cyclic")
            })
            .collect();
        g.compute_orbits_and_classes();
        Ok(g)
    }

    fn shortest_words(&self) -> Vec<Vec<usize>> {
        let mut words: Vec<Option<Vec<usize>>> = vec![None; self.order()];
        words[self.identity] = Some(vec![]);
        let mut queue = VecDeque::from([self.identity]);
        while let Some(w) = queue.pop_front() {
            for (k, &g) in self.gens.iter().enumerate() {
                let x = self.mul(g, w);
                if words[x].is_none() {
                    let mut word = vec![k];
                    word.extend(words[w].as_ref().unwrap());
                    words[x] = Some(word);
                    queue.push_back(x);
                }
            }
        }
        words.into_iter().map(|w| w.expect("generators generate")).collect()
    }

    fn compute_orbits_and_classes(&mut self) {
        let nh = self.forms.len();
        let mut orbit_of = vec![usize::MAX; nh];
        let mut orbits = Vec::new();
        for i in 0..nh {
            if orbit_of[i] != usize::MAX {
                continue;
            }
            let id = orbits.len();
            let mut members = vec![i];
            orbit_of[i] = id;
            let mut k = 0;
            while k < members.len() {
                let x = members[k];
                for &g in &self.gens {
                    let y = self.hyp_action[g][x] as usize;
                    if orbit_of[y] == usize::MAX {
                        orbit_of[y] = id;
                        members.push(y);
                    }
                }
                k += 1;
            }
            members.sort_unstable();
            orbits.push(members);
        }
        let mut class_of = vec![None; self.order()];
        let mut classes = Vec::new();
        for &s in &self.reflections {
            if class_of[s].is_some() {
                continue;
            }
            let id = classes.len();
            let mut members = vec![s];
            class_of[s] = Some(id);
            let mut k = 0;
            while k < members.len() {
                let x = members[k];
                for &g in &self.gens {
                    let y = self.mul(self.mul(g, x), self.inv[g]);
                    if class_of[y].is_none() {
                        class_of[y] = Some(id);
                        members.push(y);
                    }
                }
                k += 1;
            }
            members.sort_unstable();
            classes.push(members);
        }
        self.orbit_names = default_names("tau", orbits.len());
        self.class_names = default_names("mu", classes.len());
        self.orbits = orbits;
        self.orbit_of = orbit_of;
        self.classes = classes;
        self.class_of = class_of;
    }

    pub(crate) fn set_names(&mut self, orbit_names: Vec<String>, class_names: Vec<String>) {
        assert_eq!(orbit_names.len(), self.orbits.len());
        assert_eq!(class_names.len(), self.classes.len());
        self.orbit_names = orbit_names;
        self.class_names = class_names;
    }

    pub fn name(&self) -> &str {
        &self.name
    }
    pub fn kind(&self) -> &GroupKind {
        &self.kind
    }
    pub fn field(&self) -> &NumberField {
        &self.field
    }
    /// Dimension of the space the group acts on.
    pub fn rank(&self) -> usize {
        self.rank
    }
    pub fn order(&self) -> usize {
        self.perms.len()
    }
    pub fn identity(&self) -> usize {
        self.identity
    }
    pub fn generators(&self) -> &[usize] {
        &self.gens
    }
    pub fn matrix(&self, w: usize) -> &Matrix<NumberFieldElem> {
        &self.mats[w]
    }
    pub fn inverse(&self, w: usize) -> usize {
        self.inv[w]
    }
    /// Shortest word in the generators (positions into `generators()`),
    /// read left to right as a product.
    pub fn word(&self, w: usize) -> &[usize] {
        &self.words[w]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a][b] as usize,
            None => self.lookup[&compose(&self.perms[a], &self.perms[b])],
        }
    }

    pub fn mul_all(&self, ws: &[usize]) -> usize {
        ws.iter().fold(self.identity, |acc, &w| self.mul(acc, w))
    }

    pub fn element_order(&self, w: usize) -> usize {
        let mut k = 1;
        let mut x = w;
        while x != self.identity {
            x = self.mul(x, w);
            k += 1;
        }
        k
    }

    pub fn reflections(&self) -> &[usize] {
        &self.reflections
    }
    pub fn is_reflection(&self, w: usize) -> bool {
        self.hyp_of[w].is_some()
    }
    /// The hyperplane fixed pointwise by a pseudo-reflection.
    pub fn hyperplane_of(&self, s: usize) -> Option<usize> {
        self.hyp_of[s]
    }
    pub fn num_hyperplanes(&self) -> usize {
        self.forms.len()
    }
    /// Normalized defining linear form of hyperplane i.
    pub fn form(&self, i: usize) -> &[NumberFieldElem] {
        &self.forms[i]
    }
    /// Index of w(H_i).
    pub fn act_hyp(&self, w: usize, i: usize) -> usize {
        self.hyp_action[w][i] as usize
    }
    pub fn reflections_at(&self, i: usize) -> &[usize] {
        &self.refl_at[i]
    }
    /// Order of the pointwise stabilizer of H_i.
    pub fn stab_order(&self, i: usize) -> usize {
        self.refl_at[i].len() + 1
    }
    /// A generator of the cyclic pointwise stabilizer of H_i.
    pub fn distinguished(&self, i: usize) -> usize {
        self.distinguished[i]
    }
    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }
    pub fn orbit_of(&self, i: usize) -> usize {
        self.orbit_of[i]
    }
    pub fn refl_classes(&self) -> &[Vec<usize>] {
        &self.classes
    }
    pub fn class_of(&self, s: usize) -> Option<usize> {
        self.class_of[s]
    }
    pub fn orbit_names(&self) -> &[String] {
        &self.orbit_names
    }
    pub fn class_names(&self) -> &[String] {
        &self.class_names
    }

    pub fn is_real(&self) -> bool {
        self.reflections.iter().all(|&s| self.element_order(s) == 2)
    }

    /// Readable element name: a word in the simple generators.
    pub fn element_name(&self, w: usize) -> String {
        if let GroupKind::Dihedral { m } = self.kind {
            return DihedralElem::from_index(m, w).to_string();
        }
        if w == self.identity {
            return "1".into();
        }
        self.words[w]
            .iter()
            .map(|k| format!("s{}", k))
            .collect::<Vec<_>>()
            .join("*")
    }

    /// Minimal element (in index order) of the left coset w*H.
    pub fn min_coset_rep(&self, w: usize, subgroup: &[usize]) -> usize {
        subgroup.iter().map(|&h| self.mul(w, h)).min().unwrap()
    }

    /// Closure of a set of elements under multiplication.
    pub fn subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        let mut out = vec![self.identity];
        seen[self.identity] = true;
        let mut k = 0;
        while k < out.len() {
            let x = out[k];
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                }
            }
            k += 1;
        }
        out.sort_unstable();
        out
    }

    /// JSON summary used by the `group` subcommand.
    pub fn report(&self) -> Value {
        let edges = EdgeReport::classify(self);
        let nh = self.num_hyperplanes();
        let mut r_sets = Vec::new();
        for i in 0..nh {
            for j in 0..nh {
                if i != j {
                    r_sets.push(json!([i, j, self.r_set(i, j).unwrap()]));
                }
            }
        }
        json!({
            "name": self.name,
            "order": self.order(),
            "reflections": self.reflections,
            "hyperplanes": nh,
            "orbits": self.orbits,
            "orbit_names": self.orbit_names,
            "refl_classes": self.classes,
            "class_names": self.class_names,
            "crossing_pairs": edges.crossing_pairs(),
            "r_sets": r_sets,
        })
    }
}

fn default_names(base: &str, k: usize) -> Vec<String> {
    if k == 1 {
        vec![base.to_string()]
    } else {
        (0..k).map(|i| format!("{}{}", base, i)).collect()
    }
}

fn vector_orbit(
    f: &NumberField,
    mats: &[Matrix<NumberFieldElem>],
    n: usize,
    bound: usize,
) -> Result<Vec<Vec<NumberFieldElem>>, GroupError> {
    let mut out: Vec<Vec<NumberFieldElem>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { f.one() } else { f.zero() }).collect())
        .collect();
    let mut seen: std::collections::HashSet<Vec<NumberFieldElem>> = out.iter().cloned().collect();
    let mut k = 0;
    while k < out.len() {
        for m in mats {
            let v = mat_vec(f, m, &out[k]);
            if seen.insert(v.clone()) {
                if out.len() >= bound {
                    return Err(GroupError::TooLarge(bound / n));
                }
                out.push(v);
            }
        }
        k += 1;
    }
    Ok(out)
}

/// Parses `dihedral:<m>`, `h3`, `a:<n>` (symmetric group on n letters) and
/// `g:<m>,1,<n>`.
pub fn parse_group_spec(spec: &str) -> Result<ReflectionGroup, GroupError> {
    let bad = || GroupError::BadSpec(spec.to_string());
    let s = spec.trim().to_ascii_lowercase();
    if s == "h3" {
        return build_h3();
    }
    let (kind, rest) = s.split_once(':').ok_or_else(bad)?;
    match kind {
        "dihedral" | "i2" => build_dihedral(rest.parse().map_err(|_| bad())?),
        "a" => build_type_a(rest.parse().map_err(|_| bad())?),
        "g" => {
            let parts: Vec<&str> = rest.split(',').collect();
            if parts.len() != 3 || parts[1] != "1" {
                return Err(bad());
            }
            build_g_m1n(
                parts[0].parse().map_err(|_| bad())?,
                parts[2].parse().map_err(|_| bad())?,
            )
        }
        _ => Err(bad()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_parsing() {
        assert_eq!(parse_group_spec("dihedral:5").unwrap().order(), 10);
        assert_eq!(parse_group_spec("a:3").unwrap().order(), 6);
        assert_eq!(parse_group_spec("g:2,1,2").unwrap().order(), 8);
        assert!(matches!(parse_group_spec("e8"), Err(GroupError::BadSpec(_))));
        assert!(matches!(parse_group_spec("g:2,2,3"), Err(GroupError::BadSpec(_))));
    }

    #[test]
    fn hyperplane_action_is_a_homomorphism() {
        for g in [
            build_dihedral(6).unwrap(),
            build_g_m1n(3, 2).unwrap(),
            build_type_a(4).unwrap(),
        ] {
            for a in 0..g.order() {
                for b in 0..g.order() {
                    let ab = g.mul(a, b);
                    for i in 0..g.num_hyperplanes() {
                        assert_eq!(g.act_hyp(a, g.act_hyp(b, i)), g.act_hyp(ab, i));
                    }
                }
            }
        }
    }

    #[test]
    fn words_evaluate_to_elements() {
        let g = build_h3().unwrap();
        for w in 0..g.order() {
            let prod: Vec<usize> = g.word(w).iter().map(|&k| g.generators()[k]).collect();
            assert_eq!(g.mul_all(&prod), w);
        }
    }
}
