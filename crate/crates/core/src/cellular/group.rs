//! A cell datum for the group algebra F_p G, p = 1 mod the exponent of G:
//! central idempotents from random central elements, matrix units from
//! an element of each block with distinct eigenvalues, and an invariant
//! symmetric form B so that C_{a,b} = sum_g (B rho(g^-1))_{b,a} g is
//! compatible with g -> g^-1.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::CellError;
use crate::exactnum::{kernel, poly_roots, Field, Matrix, ModP, Ring};
use crate::refgroups::ReflectionGroup;

/// Dense element of F_p G indexed by group element.
pub type GroupElem = Vec<u64>;

/// One Wedderburn block as a cell: `elems[a][b]` is C_{a,b}.
#[derive(Debug, Clone)]
pub struct GroupCell {
    pub dim: usize,
    pub elems: Vec<Vec<GroupElem>>,
}

struct GroupAlg<'a> {
    g: &'a ReflectionGroup,
    f: ModP,
}

impl GroupAlg<'_> {
    fn n(&self) -> usize {
        self.g.order()
    }
    fn basis(&self, w: usize) -> GroupElem {
        let mut v = vec![0; self.n()];
        v[w] = 1;
        v
    }
    fn mul(&self, a: &[u64], b: &[u64]) -> GroupElem {
        let f = &self.f;
        let mut out = vec![0; self.n()];
        for (x, ca) in a.iter().enumerate().filter(|p| *p.1 != 0) {
            for (y, cb) in b.iter().enumerate().filter(|p| *p.1 != 0) {
                let z = self.g.mul(x, y);
                out[z] = f.add(&out[z], &f.mul(ca, cb));
            }
        }
        out
    }
    fn lin(&self, terms: &[(u64, &GroupElem)]) -> GroupElem {
        let f = &self.f;
        let mut out = vec![0; self.n()];
        for (c, v) in terms {
            for (o, x) in out.iter_mut().zip(v.iter()) {
                *o = f.add(o, &f.mul(c, x));
            }
        }
        out
    }

    /// Minimal polynomial of `x` in the algebra with unit `unit`, monic,
    /// lowest degree first.
    fn min_poly(&self, x: &GroupElem, unit: &GroupElem) -> Vec<u64> {
        let f = &self.f;
        let mut powers = vec![unit.clone()];
        loop {
            let next = self.mul(x, powers.last().expect("nonempty"));
            powers.push(next);
            let cols = powers.len();
            let m: Matrix<u64> = (0..self.n()).map(|r| powers.iter().map(|p| p[r]).collect()).collect();
            if let Some(k) = kernel(f, &m, cols).into_iter().next() {
                let lead = f.inv(&k[cols - 1]).expect("minimal relation has top term");
                return k.iter().map(|c| f.mul(c, &lead)).collect();
            }
        }
    }

    /// Orthogonal idempotents summing to `unit` from the eigenvalues of `x`;
    /// `None` unless the minimal polynomial has `want` distinct roots.
    fn spectral_idempotents(&self, x: &GroupElem, unit: &GroupElem, want: usize) -> Option<Vec<GroupElem>> {
        let f = &self.f;
        let mp = self.min_poly(x, unit);
        if mp.len() != want + 1 {
            return None;
        }
        let roots = poly_roots(f, &mp);
        if roots.len() != want {
            return None;
        }
        let shifted: Vec<GroupElem> = roots.iter().map(|l| self.lin(&[(1, x), (f.neg(l), unit)])).collect();
        Some(
            (0..want)
                .map(|k| {
                    let mut e = unit.clone();
                    for j in (0..want).filter(|&j| j != k) {
                        let scale = f.inv(&f.sub(&roots[k], &roots[j])).expect("distinct roots");
                        e = self.mul(&e, &shifted[j]);
                        e = self.lin(&[(scale, &e)]);
                    }
                    e
                })
                .collect(),
        )
    }
}

fn conjugacy_classes(g: &ReflectionGroup) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.order()];
    let mut out = Vec::new();
    for x in 0..g.order() {
        if seen[x] {
            continue;
        }
        let mut class: Vec<usize> = (0..g.order()).map(|w| g.mul_all(&[w, x, g.inverse(w)])).collect();
        class.sort_unstable();
        class.dedup();
        for &c in &class {
            seen[c] = true;
        }
        out.push(class);
    }
    out
}

/// Exponent of the group, for choosing a splitting prime.
pub fn exponent(g: &ReflectionGroup) -> u64 {
    (0..g.order()).fold(1u64, |acc, w| {
        let o = g.element_order(w) as u64;
        acc / num_integer::gcd(acc, o) * o
    })
}

pub fn group_cells(g: &ReflectionGroup, f: ModP) -> Result<Vec<GroupCell>, CellError> {
    if f.prime() % exponent(g) != 1 {
        return Err(CellError::GroupDatum(format!(
            "p = {} is not 1 mod the exponent",
            f.prime()
        )));
    }
    let alg = GroupAlg { g, f };
    let n = g.order();
    let one = alg.basis(g.identity());
    let classes = conjugacy_classes(g);
    let sums: Vec<GroupElem> = classes
        .iter()
        .map(|c| {
            let mut v = vec![0; n];
            c.iter().for_each(|&w| v[w] = 1);
            v
        })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(f.prime());
    let central = (0..20)
        .find_map(|_| {
            let terms: Vec<(u64, &GroupElem)> = sums.iter().map(|s| (rng.gen_range(0..f.prime()), s)).collect();
            alg.spectral_idempotents(&alg.lin(&terms), &one, classes.len())
        })
        .ok_or_else(|| CellError::GroupDatum("no central element separates the blocks".into()))?;
    let order = f.from_int(n as i64);
    let mut cells = Vec::new();
    for eps in central {
        // eps(1) = d^2 / |G|
        let d2 = f.mul(&eps[g.identity()], &order);
        let d = (1..=n)
            .find(|&d| f.from_int((d * d) as i64) == d2)
            .ok_or_else(|| CellError::GroupDatum("block dimension not a square".into()))?;
        cells.push(block_cell(&alg, &eps, d)?);
    }
    cells.sort_by_key(|c| c.dim);
    Ok(cells)
}

fn block_cell(alg: &GroupAlg, eps: &GroupElem, d: usize) -> Result<GroupCell, CellError> {
    let (g, f) = (alg.g, &alg.f);
    let n = g.order();
    let idem = (0..n)
        .find_map(|h| alg.spectral_idempotents(&alg.mul(eps, &alg.basis(h)), eps, d))
        .ok_or_else(|| CellError::GroupDatum("no element with distinct eigenvalues in a block".into()))?;
    let f1 = &idem[0];
    let pivot = f1.iter().position(|&x| x != 0).expect("nonzero idempotent");
    let ratio = |y: &GroupElem| f.mul(&y[pivot], &f.inv(&f1[pivot]).expect("pivot"));
    // e_{k1} and e_{1k} with e_{1k} e_{k1} = f_1
    let mut down = vec![f1.clone()];
    let mut up = vec![f1.clone()];
    for fk in &idem[1..] {
        let nonzero = |a: &GroupElem, b: &GroupElem| {
            (0..n)
                .map(|w| alg.mul(&alg.mul(a, &alg.basis(w)), b))
                .find(|v| v.iter().any(|&x| x != 0))
        };
        let ek1 = nonzero(fk, f1).ok_or_else(|| CellError::GroupDatum("f_k G f_1 = 0".into()))?;
        let e1k = nonzero(f1, fk).ok_or_else(|| CellError::GroupDatum("f_1 G f_k = 0".into()))?;
        let c = ratio(&alg.mul(&e1k, &ek1));
        let inv = f
            .inv(&c)
            .map_err(|_| CellError::GroupDatum("degenerate matrix units".into()))?;
        down.push(ek1);
        up.push(alg.lin(&[(inv, &e1k)]));
    }
    // rho(s) on the basis e_{k1} of the left ideal, for each generator
    let rho_gen: Vec<Matrix<u64>> = g
        .generators()
        .iter()
        .map(|&s| {
            let sv = alg.basis(s);
            (0..d)
                .map(|r| {
                    (0..d)
                        .map(|k| ratio(&alg.mul(&alg.mul(&up[r], &sv), &down[k])))
                        .collect()
                })
                .collect()
        })
        .collect();
    let mut rho: Vec<Option<Matrix<u64>>> = vec![None; n];
    rho[g.identity()] = Some(crate::exactnum::identity(f, d));
    let mut queue = vec![g.identity()];
    while let Some(x) = queue.pop() {
        for (k, &s) in g.generators().iter().enumerate() {
            let y = g.mul(s, x);
            if rho[y].is_none() {
                rho[y] = Some(crate::exactnum::mat_mul(
                    f,
                    &rho_gen[k],
                    rho[x].as_ref().expect("visited"),
                ));
                queue.push(y);
            }
        }
    }
    let rho: Vec<Matrix<u64>> = rho.into_iter().map(|m| m.expect("generators generate")).collect();
    let form = invariant_form(f, &rho_gen, d)?;
    let elems = (0..d)
        .map(|a| {
            (0..d)
                .map(|b| {
                    (0..n)
                        .map(|w| {
                            let r = &rho[g.inverse(w)];
                            (0..d).fold(0, |acc, c| f.add(&acc, &f.mul(&form[b][c], &r[c][a])))
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    Ok(GroupCell { dim: d, elems })
}

/// The symmetric B with rho(s)^T B rho(s) = B for every generator; the
/// generators are involutions so this is B rho(s) = rho(s)^T B.
fn invariant_form(f: &ModP, rho_gen: &[Matrix<u64>], d: usize) -> Result<Matrix<u64>, CellError> {
    let var = |i: usize, j: usize| i * d + j;
    let mut rows: Matrix<u64> = Vec::new();
    for r in rho_gen {
        for i in 0..d {
            for j in 0..d {
                let mut row = vec![0; d * d];
                for k in 0..d {
                    // (B r)_{ij} - (r^T B)_{ij}
                    row[var(i, k)] = f.add(&row[var(i, k)], &r[k][j]);
                    row[var(k, j)] = f.sub(&row[var(k, j)], &r[k][i]);
                }
                rows.push(row);
            }
        }
    }
    let ker = kernel(f, &rows, d * d);
    if ker.len() != 1 {
        return Err(CellError::GroupDatum(format!(
            "invariant forms span {} dimensions",
            ker.len()
        )));
    }
    let b: Matrix<u64> = (0..d).map(|i| (0..d).map(|j| ker[0][var(i, j)]).collect()).collect();
    if (0..d).any(|i| (0..d).any(|j| b[i][j] != b[j][i])) {
        return Err(CellError::GroupDatum("invariant form is not symmetric".into()));
    }
    Ok(b)
}
