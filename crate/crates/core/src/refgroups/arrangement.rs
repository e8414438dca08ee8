use std::collections::HashMap;

use super::{GroupError, ReflectionGroup};
use crate::exactnum::{identity, kernel, mat_sub, rank, Matrix, NumberFieldElem, Ring};

/// A codimension-2 intersection L with the hyperplanes containing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub hyps: Vec<usize>,
}

impl Edge {
    pub fn is_crossing(&self) -> bool {
        self.hyps.len() == 2
    }
}

#[derive(Debug, Clone)]
pub struct EdgeReport {
    edges: Vec<Edge>,
    pair_edge: HashMap<(usize, usize), usize>,
}

fn key(i: usize, j: usize) -> (usize, usize) {
    (i.min(j), i.max(j))
}

impl EdgeReport {
    pub fn classify(g: &ReflectionGroup) -> Self {
        let nh = g.num_hyperplanes();
        let f = g.field();
        let mut edges = Vec::new();
        let mut pair_edge = HashMap::new();
        for i in 0..nh {
            for j in i + 1..nh {
                if pair_edge.contains_key(&(i, j)) {
                    continue;
                }
                let hyps: Vec<usize> = (0..nh)
                    .filter(|&k| {
                        let m = vec![g.form(i).to_vec(), g.form(j).to_vec(), g.form(k).to_vec()];
                        rank(f, &m) == 2
                    })
                    .collect();
                let id = edges.len();
                for (a, &x) in hyps.iter().enumerate() {
                    for &y in &hyps[a + 1..] {
                        pair_edge.insert((x, y), id);
                    }
                }
                edges.push(Edge { hyps });
            }
        }
        EdgeReport { edges, pair_edge }
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Index of the edge H_i ∩ H_j.
    pub fn edge_of(&self, i: usize, j: usize) -> Option<usize> {
        self.pair_edge.get(&key(i, j)).copied()
    }

    pub fn is_crossing(&self, i: usize, j: usize) -> bool {
        self.edge_of(i, j).is_some_and(|e| self.edges[e].is_crossing())
    }

    pub fn crossing_pairs(&self) -> Vec<[usize; 2]> {
        self.edges
            .iter()
            .filter(|e| e.is_crossing())
            .map(|e| [e.hyps[0], e.hyps[1]])
            .collect()
    }
}

impl ReflectionGroup {
    /// Pseudo-reflections carrying H_j onto H_i.
    pub fn r_set(&self, i: usize, j: usize) -> Result<Vec<usize>, GroupError> {
        if i == j {
            return Err(GroupError::SameHyperplane);
        }
        Ok(self
            .reflections()
            .iter()
            .copied()
            .filter(|&s| self.act_hyp(s, j) == i)
            .collect())
    }

    /// Every s in R(i,j) fixes H_i ∩ H_j pointwise.
    pub fn r_sets_fix_intersections(&self) -> bool {
        let f = self.field();
        let nh = self.num_hyperplanes();
        let idm = identity(f, self.rank());
        for i in 0..nh {
            for j in 0..nh {
                if i == j {
                    continue;
                }
                let basis = kernel(f, &vec![self.form(i).to_vec(), self.form(j).to_vec()], self.rank());
                for s in self.r_set(i, j).unwrap() {
                    let d = mat_sub(f, self.matrix(s), &idm);
                    for v in &basis {
                        let moved = d.iter().any(|row| {
                            let x = row
                                .iter()
                                .zip(v)
                                .fold(f.zero(), |acc, (a, b)| f.add(&acc, &f.mul(a, b)));
                            !x.is_zero()
                        });
                        if moved {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Pairs (w, i) with w(H_i) = H_i and H_i ∩ ker(w - 1) a noncrossing
    /// codimension-2 edge.
    pub fn relation1prime_pairs(&self) -> Vec<(usize, usize)> {
        let f = self.field();
        let n = self.rank();
        let idm = identity(f, n);
        let mut out = Vec::new();
        for w in 0..self.order() {
            if w == self.identity() {
                continue;
            }
            let d = mat_sub(f, self.matrix(w), &idm);
            for i in 0..self.num_hyperplanes() {
                if self.act_hyp(w, i) != i {
                    continue;
                }
                let mut rows: Matrix<NumberFieldElem> = d.clone();
                rows.push(self.form(i).to_vec());
                let r = rank(f, &rows);
                if r != 2 {
                    continue;
                }
                let containing: Vec<usize> = (0..self.num_hyperplanes())
                    .filter(|&k| {
                        let mut ext = rows.clone();
                        ext.push(self.form(k).to_vec());
                        rank(f, &ext) == r
                    })
                    .collect();
                let forms: Matrix<NumberFieldElem> = containing.iter().map(|&k| self.form(k).to_vec()).collect();
                if rank(f, &forms) == 2 && containing.len() > 2 {
                    out.push((w, i));
                }
            }
        }
        out
    }

    /// Connected components of the graph on reflections joining distinct
    /// commuting pairs, as sorted element lists.
    pub fn commuting_components(&self) -> Vec<Vec<usize>> {
        let refl = self.reflections();
        let commute = |a: usize, b: usize| self.mul(a, b) == self.mul(b, a);
        let mut comp = vec![usize::MAX; refl.len()];
        let mut out = Vec::new();
        for start in 0..refl.len() {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            comp[start] = id;
            let mut members = vec![start];
            let mut k = 0;
            while k < members.len() {
                let a = members[k];
                for b in 0..refl.len() {
                    if comp[b] == usize::MAX && b != a && commute(refl[a], refl[b]) {
                        comp[b] = id;
                        members.push(b);
                    }
                }
                k += 1;
            }
            let mut elems: Vec<usize> = members.iter().map(|&x| refl[x]).collect();
            elems.sort_unstable();
            out.push(elems);
        }
        out
    }

    /// Classes of mutually commuting reflections, failing if commuting is
    /// not transitive on distinct reflections.
    pub fn perp_classes(&self) -> Result<Vec<Vec<usize>>, GroupError> {
        let comps = self.commuting_components();
        for c in &comps {
            for &a in c {
                for &b in c {
                    if self.mul(a, b) != self.mul(b, a) {
                        return Err(GroupError::NotEquivalence);
                    }
                }
            }
        }
        Ok(comps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::refgroups::{build_dihedral, build_g_m1n, build_h3, build_type_a, DihedralElem, GHyp};

    #[test]
    fn dihedral_arrangement() {
        for m in 3..=8u32 {
            let g = build_dihedral(m).unwrap();
            let e = EdgeReport::classify(&g);
            assert_eq!(e.edges().len(), 1);
            assert_eq!(e.edges()[0].hyps.len(), m as usize);
            assert!(e.crossing_pairs().is_empty());
            for i in 0..m as usize {
                for j in 0..m as usize {
                    if i == j {
                        continue;
                    }
                    let r = g.r_set(i, j).unwrap();
                    if (i + j) % 2 == 0 {
                        let k = (i + j) / 2;
                        let opts = [
                            DihedralElem::S(k as u32).index(m),
                            DihedralElem::S((k as u32 + m / 2) % m).index(m),
                        ];
                        assert!(r.iter().all(|s| opts.contains(s)));
                        let want = if m % 2 == 1 { 1 } else { 2 };
                        assert_eq!(r.len(), want);
                    } else if m % 2 == 0 {
                        assert!(r.is_empty());
                    } else {
                        assert_eq!(r.len(), 1);
                    }
                }
            }
            assert!(g.r_sets_fix_intersections());
            assert!(g.r_set(0, 0).is_err());
        }
    }

    #[test]
    fn relation_1prime() {
        let g = build_dihedral(5).unwrap();
        assert!(g.relation1prime_pairs().is_empty());
        let g = build_dihedral(6).unwrap();
        let pairs = g.relation1prime_pairs();
        for i in 0..6u32 {
            let s = DihedralElem::S((i + 3) % 6).index(6);
            assert!(pairs.contains(&(s, i as usize)));
        }
        let h = build_h3().unwrap();
        assert!(h.relation1prime_pairs().is_empty());
    }

    #[test]
    fn h3_perp_classes() {
        let g = build_h3().unwrap();
        let classes = g.perp_classes().unwrap();
        assert_eq!(classes.len(), 5);
        assert!(classes.iter().all(|c| c.len() == 3));
        let e = EdgeReport::classify(&g);
        let refl = g.reflections();
        for (a, &s) in refl.iter().enumerate() {
            for &t in &refl[a + 1..] {
                let (i, j) = (g.hyperplane_of(s).unwrap(), g.hyperplane_of(t).unwrap());
                let commute = g.mul(s, t) == g.mul(t, s);
                assert_eq!(e.is_crossing(i, j), commute);
                if !commute {
                    assert!(e.edges()[e.edge_of(i, j).unwrap()].hyps.len() > 2);
                }
            }
        }
        assert_eq!(e.crossing_pairs().len(), 15);
        assert!(g.r_sets_fix_intersections());
        let [s0, s1, s2] = [g.generators()[0], g.generators()[1], g.generators()[2]];
        let w0 = g.mul_all(&[s1, s2, s1, s0, s1, s0, s1]);
        let si0 = g.mul_all(&[g.inverse(w0), s0, w0]);
        let c0 = classes.iter().find(|c| c.contains(&s0)).unwrap();
        let mut want = vec![s0, s2, si0];
        want.sort_unstable();
        assert_eq!(c0, &want);
    }

    #[test]
    fn type_a3_crossing() {
        let g = build_type_a(4).unwrap();
        let e = EdgeReport::classify(&g);
        let find = |a, b| (0..6).find(|&h| g.type_a_pair(h) == Some((a, b))).unwrap();
        assert!(e.is_crossing(find(0, 1), find(2, 3)));
        assert!(!e.is_crossing(find(0, 1), find(1, 2)));
        assert_eq!(g.perp_classes().unwrap().len(), 3);
    }

    #[test]
    fn imprimitive_r_sets() {
        let g = build_g_m1n(2, 2).unwrap();
        let h1 = g.g_hyp_index(GHyp::Coord(1)).unwrap();
        let h2 = g.g_hyp_index(GHyp::Coord(2)).unwrap();
        let r = g.r_set(h1, h2).unwrap();
        assert_eq!(r.len(), 2);
        for s in r {
            let h = g.g_hyp_label(g.hyperplane_of(s).unwrap()).unwrap();
            assert!(matches!(h, GHyp::Diag { i: 1, j: 2, .. }));
        }
        assert!(g.r_sets_fix_intersections());
        assert!(build_g_m1n(3, 2).unwrap().r_sets_fix_intersections());
    }
}
