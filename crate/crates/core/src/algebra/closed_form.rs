//! Closed-form multiplication for odd dihedral m, on the basis
//! S_i = s_i, R_i = r_i, T_{i,j} = s_i e_j, with mu = 1.

use serde::Serialize;

/// A basis label of the closed-form algebra; indices are residues mod m.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum OddDihedral {
    S(u32),
    R(u32),
    T(u32, u32),
}

/// A product: `tau^tau_power` times a basis label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClosedProduct {
    pub tau_power: u32,
    pub label: OddDihedral,
}

pub struct ClosedFormOdd {
    m: u32,
}

impl ClosedFormOdd {
    pub fn new(m: u32) -> Option<Self> {
        (m >= 3 && m % 2 == 1).then_some(ClosedFormOdd { m })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    fn md(&self, x: i64) -> u32 {
        x.rem_euclid(self.m as i64) as u32
    }

    pub fn labels(&self) -> Vec<OddDihedral> {
        let m = self.m;
        let mut out: Vec<OddDihedral> = (0..m).map(OddDihedral::S).collect();
        out.extend((0..m).map(OddDihedral::R));
        for i in 0..m {
            out.extend((0..m).map(|j| OddDihedral::T(i, j)));
        }
        out
    }

    /// Which branch of the T*T rule applies, for reporting coverage:
    /// 0 the idempotent branch, 1 the `v` branch, 2 the `u` branch.
    pub fn tt_branch(&self, j: u32, p: u32, q: u32) -> u8 {
        let m = self.m as i64;
        let d = 2 * p as i64 - j as i64 - q as i64;
        if d.rem_euclid(m) == 0 {
            0
        } else if ((2 * p as i64 - j as i64).rem_euclid(m) + q as i64) % 2 == 0 {
            1
        } else {
            2
        }
    }

    pub fn product(&self, a: OddDihedral, b: OddDihedral) -> ClosedProduct {
        use OddDihedral::*;
        let md = |x: i64| self.md(x);
        let plain = |label| ClosedProduct { tau_power: 0, label };
        match (a, b) {
            (S(i), S(j)) => plain(R(md(i as i64 - j as i64))),
            (R(i), R(j)) => plain(R(md(i as i64 + j as i64))),
            (S(i), R(j)) => plain(S(md(i as i64 - j as i64))),
            (R(j), S(i)) => plain(S(md(i as i64 + j as i64))),
            (S(l), T(i, j)) => plain(T(md(l as i64 - i as i64 + j as i64), j)),
            (T(i, j), S(l)) => plain(T(md(i as i64 - j as i64 + l as i64), md(2 * l as i64 - j as i64))),
            (R(l), T(i, j)) => plain(T(md(i as i64 + l as i64), j)),
            (T(i, j), R(l)) => plain(T(md(i as i64 - l as i64), md(j as i64 - 2 * l as i64))),
            (T(i, j), T(p, q)) => {
                let (i, j, p, q) = (i as i64, j as i64, p as i64, q as i64);
                let m = self.m as i64;
                let bracket = (2 * p - j).rem_euclid(m);
                match self.tt_branch(j as u32, p as u32, q as u32) {
                    0 => ClosedProduct {
                        tau_power: 1,
                        label: T(md(i - p + q), q as u32),
                    },
                    1 => plain(T(md((2 * i + bracket + q - 2 * p) / 2), q as u32)),
                    _ => plain(T(md((2 * i + bracket + q + m - 2 * p) / 2), q as u32)),
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn idempotent_branch() {
        let c = ClosedFormOdd::new(5).unwrap();
        // T_{1,2} T_{2,2} = tau T_{1,2}
        let p = c.product(OddDihedral::T(1, 2), OddDihedral::T(2, 2));
        assert_eq!(
            p,
            ClosedProduct {
                tau_power: 1,
                label: OddDihedral::T(1, 2)
            }
        );
        assert!(ClosedFormOdd::new(6).is_none());
    }
}
