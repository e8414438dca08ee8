use std::fmt;

use num_integer::Integer;

use super::{GroupError, GroupKind, ReflectionGroup};
use crate::exactnum::{identity, rat, Matrix, NumberField, NumberFieldElem, Ring};

const DEFAULT_BOUND: usize = 100_000;

/// Dihedral elements by their symbolic names: reflections `s_k` and
/// rotations `r_k`, indices mod m.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DihedralElem {
    S(u32),
    R(u32),
}

impl DihedralElem {
    /// Element order used by [`build_dihedral`]: `r_0, s_0..s_{m-1}, r_1..r_{m-1}`.
    pub fn from_index(m: u32, idx: usize) -> Self {
        let m = m as usize;
        match idx {
            0 => DihedralElem::R(0),
            i if i <= m => DihedralElem::S((i - 1) as u32),
            i => DihedralElem::R((i - m) as u32),
        }
    }

    pub fn index(self, m: u32) -> usize {
        match self {
            DihedralElem::R(0) => 0,
            DihedralElem::S(k) => 1 + (k % m) as usize,
            DihedralElem::R(k) => {
                let k = k % m;
                if k == 0 {
                    0
                } else {
                    m as usize + k as usize
                }
            }
        }
    }

    /// The symbolic multiplication rule.
    pub fn mul(self, other: Self, m: u32) -> Self {
        let m = m as i64;
        let md = |x: i64| x.rem_euclid(m) as u32;
        match (self, other) {
            (DihedralElem::S(i), DihedralElem::S(j)) => DihedralElem::R(md(i as i64 - j as i64)),
            (DihedralElem::R(i), DihedralElem::R(j)) => DihedralElem::R(md(i as i64 + j as i64)),
            (DihedralElem::S(i), DihedralElem::R(j)) => DihedralElem::S(md(i as i64 - j as i64)),
            (DihedralElem::R(j), DihedralElem::S(i)) => DihedralElem::S(md(i as i64 + j as i64)),
        }
    }
}

impl fmt::Display for DihedralElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DihedralElem::S(k) => write!(f, "s{}", k),
            DihedralElem::R(k) => write!(f, "r{}", k),
        }
    }
}

/// The dihedral group of order 2m acting on C^2 in the eigenbasis of the
/// rotations, so all entries lie in Q(zeta_m). Hyperplane k is fixed by s_k.
pub fn build_dihedral(m: u32) -> Result<ReflectionGroup, GroupError> {
    if m < 3 {
        return Err(GroupError::InvalidParameter(format!("dihedral order m={} < 3", m)));
    }
    let f = NumberField::cyclotomic(m);
    let z = f.gen();
    let zp = |k: i64| f.pow(&z, k.rem_euclid(m as i64) as u32);
    let mats: Vec<Matrix<NumberFieldElem>> = (0..2 * m as usize)
        .map(|idx| match DihedralElem::from_index(m, idx) {
            DihedralElem::S(k) => vec![vec![f.zero(), zp(k as i64)], vec![zp(-(k as i64)), f.zero()]],
            DihedralElem::R(k) => vec![vec![zp(k as i64), f.zero()], vec![f.zero(), zp(-(k as i64))]],
        })
        .collect();
    let gens = vec![DihedralElem::S(0).index(m), DihedralElem::S(1).index(m)];
    ReflectionGroup::from_elements(format!("I2({})", m), GroupKind::Dihedral { m }, f, mats, gens)
}

enum CoxField {
    Rational,
    Sqrt(i64),
    Cyclotomic(u32),
}

fn cos_pi_over(f: &NumberField, kind: &CoxField, m: u32) -> NumberFieldElem {
    match (kind, m) {
        (_, 2) => f.zero(),
        (_, 3) => f.from_q(rat(1, 2)),
        (CoxField::Sqrt(5), 5) => f.elem(vec![rat(1, 4), rat(1, 4)]),
        (CoxField::Sqrt(2), 4) | (CoxField::Sqrt(3), 6) => f.elem(vec![rat(0, 1), rat(1, 2)]),
        (CoxField::Cyclotomic(big), m) => {
            // zeta is a primitive 2L-th root, so zeta^(L/m) = exp(i pi / m)
            let e = big / 2 / m;
            let z = f.gen();
            let a = f.pow(&z, e);
            let b = f.pow(&z, big - e);
            f.mul(&f.from_q(rat(1, 2)), &f.add(&a, &b))
        }
        _ => unreachable!("field chosen to contain cos(pi/m)"),
    }
}

/// Coxeter group in its geometric representation on the span of the
/// simple roots. `matrix[i][j]` is the order of s_i s_j.
pub fn build_coxeter(matrix: &[Vec<u32>], bound: usize) -> Result<ReflectionGroup, GroupError> {
    let n = matrix.len();
    if n == 0 || matrix.iter().any(|r| r.len() != n) {
        return Err(GroupError::InvalidParameter("Coxeter matrix must be square".into()));
    }
    for i in 0..n {
        for j in 0..n {
            let ok = if i == j {
                matrix[i][j] == 1
            } else {
                matrix[i][j] >= 2 && matrix[i][j] == matrix[j][i]
            };
            if !ok {
                return Err(GroupError::InvalidParameter("not a Coxeter matrix".into()));
            }
        }
    }
    let offdiag: Vec<u32> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .map(|(i, j)| matrix[i][j])
        .filter(|&x| x > 3)
        .collect();
    let kind = if offdiag.is_empty() {
        CoxField::Rational
    } else if offdiag.iter().all(|&x| x == 5) {
        CoxField::Sqrt(5)
    } else if offdiag.iter().all(|&x| x == 4) {
        CoxField::Sqrt(2)
    } else if offdiag.iter().all(|&x| x == 6) {
        CoxField::Sqrt(3)
    } else {
        let l = offdiag.iter().fold(1u32, |a, &b| a.lcm(&b));
        CoxField::Cyclotomic(2 * l)
    };
    let f = match kind {
        CoxField::Rational => NumberField::rationals(),
        CoxField::Sqrt(d) => NumberField::quadratic(d),
        CoxField::Cyclotomic(k) => NumberField::cyclotomic(k),
    };
    let two = f.from_int(2);
    let gens: Vec<Matrix<NumberFieldElem>> = (0..n)
        .map(|i| {
            let mut m = identity(&f, n);
            for j in 0..n {
                // s_i(alpha_j) = alpha_j + 2 cos(pi/m_ij) alpha_i
                m[i][j] = if i == j {
                    f.neg(&f.one())
                } else {
                    f.mul(&two, &cos_pi_over(&f, &kind, matrix[i][j]))
                };
            }
            m
        })
        .collect();
    let name = coxeter_name(matrix);
    ReflectionGroup::from_generators(
        name,
        GroupKind::Coxeter {
            matrix: matrix.to_vec(),
        },
        f,
        gens,
        bound,
    )
}

fn coxeter_name(matrix: &[Vec<u32>]) -> String {
    if matrix.len() == 3 && matrix[0][1] == 5 && matrix[1][2] == 3 && matrix[0][2] == 2 {
        return "H3".into();
    }
    let entries: Vec<String> = matrix
        .iter()
        .enumerate()
        .flat_map(|(i, r)| r.iter().skip(i + 1).map(|x| x.to_string()).collect::<Vec<_>>())
        .collect();
    format!("Coxeter[{}]", entries.join(","))
}

/// H3 with s_0 s_1 of order 5, s_1 s_2 of order 3, s_0 s_2 of order 2.
pub fn build_h3() -> Result<ReflectionGroup, GroupError> {
    build_coxeter(&[vec![1, 5, 2], vec![5, 1, 3], vec![2, 3, 1]], 200)
}

/// The symmetric group on n letters by permutation matrices on Q^n.
/// Generators swap coordinates i and i+1.
pub fn build_type_a(n: usize) -> Result<ReflectionGroup, GroupError> {
    if !(2..=6).contains(&n) {
        return Err(GroupError::InvalidParameter(format!(
            "type A needs 2 <= n <= 6, got {}",
            n
        )));
    }
    let f = NumberField::rationals();
    let gens = (0..n - 1).map(|i| swap_matrix(&f, n, i)).collect();
    ReflectionGroup::from_generators(format!("A{}", n - 1), GroupKind::TypeA { n }, f, gens, DEFAULT_BOUND)
}

fn swap_matrix(f: &NumberField, n: usize, i: usize) -> Matrix<NumberFieldElem> {
    let mut m = identity(f, n);
    m[i][i] = f.zero();
    m[i + 1][i + 1] = f.zero();
    m[i][i + 1] = f.one();
    m[i + 1][i] = f.one();
    m
}

/// Hyperplanes of G(m,1,n), coordinates 1-based: `Coord(i)` is z_i = 0 and
/// `Diag { i, j, a }` is z_i = xi^a z_j with i < j.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GHyp {
    Coord(usize),
    Diag { i: usize, j: usize, a: u32 },
}

impl fmt::Display for GHyp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GHyp::Coord(i) => write!(f, "H{}", i),
            GHyp::Diag { i, j, a } => write!(f, "H{},{};{}", i, j, a),
        }
    }
}

/// G(m,1,n) as monomial matrices over Q(xi). Generators: S_0 = diag(xi,1,..)
/// then the coordinate swaps S_1..S_{n-1}.
pub fn build_g_m1n(m: u32, n: usize) -> Result<ReflectionGroup, GroupError> {
    if m < 2 || n < 2 {
        return Err(GroupError::InvalidParameter("G(m,1,n) needs m, n >= 2".into()));
    }
    let order = (m as f64).powi(n as i32) * (1..=n).product::<usize>() as f64;
    if order > DEFAULT_BOUND as f64 {
        return Err(GroupError::TooLarge(DEFAULT_BOUND));
    }
    let f = NumberField::cyclotomic(m);
    let mut s0 = identity(&f, n);
    s0[0][0] = f.gen();
    let mut gens = vec![s0];
    gens.extend((0..n - 1).map(|i| swap_matrix(&f, n, i)));
    let mut g = ReflectionGroup::from_generators(
        format!("G({},1,{})", m, n),
        GroupKind::Gm1n { m, n },
        f,
        gens,
        DEFAULT_BOUND + 1,
    )?;
    let h1 = g.g_hyp_index(GHyp::Coord(1)).expect("coordinate hyperplane");
    let h12 = g
        .g_hyp_index(GHyp::Diag { i: 1, j: 2, a: 0 })
        .expect("diagonal hyperplane");
    let orbit_names = (0..g.orbits().len())
        .map(|o| {
            if o == g.orbit_of(h1) {
                "tau0".to_string()
            } else if o == g.orbit_of(h12) {
                "tau1".to_string()
            } else {
                format!("tau_extra{}", o)
            }
        })
        .collect();
    let s1 = g.generators()[1];
    let s0 = g.generators()[0];
    let class_names = (0..g.refl_classes().len())
        .map(|c| {
            if Some(c) == g.class_of(s1) {
                return "mu".to_string();
            }
            let mut x = s0;
            for k in 1..m {
                if Some(c) == g.class_of(x) {
                    return format!("mu{}", k);
                }
                x = g.mul(x, s0);
            }
            format!("mu_extra{}", c)
        })
        .collect();
    g.set_names(orbit_names, class_names);
    Ok(g)
}

impl ReflectionGroup {
    /// Label of a G(m,1,n) hyperplane, read off its normalized form.
    pub fn g_hyp_label(&self, h: usize) -> Option<GHyp> {
        let GroupKind::Gm1n { m, .. } = self.kind else {
            return None;
        };
        let f = &self.field;
        let form = &self.forms[h];
        let nz: Vec<usize> = (0..form.len()).filter(|&k| !form[k].is_zero()).collect();
        match nz.as_slice() {
            [i] => Some(GHyp::Coord(i + 1)),
            [i, j] => {
                // form is z_i - xi^a z_j
                let c = f.neg(&form[*j]);
                let a = (0..m).find(|&a| f.pow(&f.gen(), a) == c)?;
                Some(GHyp::Diag { i: i + 1, j: j + 1, a })
            }
            _ => None,
        }
    }

    pub fn g_hyp_index(&self, label: GHyp) -> Option<usize> {
        (0..self.num_hyperplanes()).find(|&h| self.g_hyp_label(h) == Some(label))
    }

    /// For the symmetric group: the pair (a, b), 0-based with a < b, of the
    /// hyperplane z_a = z_b.
    pub fn type_a_pair(&self, h: usize) -> Option<(usize, usize)> {
        let GroupKind::TypeA { .. } = self.kind else {
            return None;
        };
        let form = &self.forms[h];
        let nz: Vec<usize> = (0..form.len()).filter(|&k| !form[k].is_zero()).collect();
        match nz.as_slice() {
            [a, b] => Some((*a, *b)),
            _ => None,
        }
    }

    /// Dihedral group element as a symbolic name.
    pub fn dihedral(&self, w: usize) -> Option<DihedralElem> {
        match self.kind {
            GroupKind::Dihedral { m } => Some(DihedralElem::from_index(m, w)),
            _ => None,
        }
    }
}
