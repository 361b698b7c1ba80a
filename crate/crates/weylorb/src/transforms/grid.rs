//! The grid F_M of points Σ (s_i/M) ω_i^∨ with s_0 + Σ s_i m_i = M, and the
//! torus T_m = (1/m)Q^∨/Q^∨.

use std::collections::BTreeSet;

use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::Q;
use crate::rootsys::{RootSystem, DEFAULT_GROUP_LIMIT};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GridPoint {
    pub s: Vec<i64>,
    pub s0: i64,
}

impl GridPoint {
    pub fn is_interior(&self) -> bool {
        self.s0 > 0 && self.s.iter().all(|&v| v > 0)
    }

    /// Coordinates s_i/M in the ω^∨-basis.
    pub fn coweight_coords(&self, m: i64) -> Vec<Q> {
        self.s.iter().map(|&v| Q::new(v, m)).collect()
    }

    /// Coordinates in the ω-basis: (s_i/M)·2/⟨α_i,α_i⟩.
    pub fn omega_coords(&self, rs: &RootSystem, m: i64) -> Vec<Q> {
        self.s
            .iter()
            .zip(rs.root_norms())
            .map(|(&v, nrm)| Q::new(v, m) * 2 / *nrm)
            .collect()
    }

    pub fn omega_f64(&self, rs: &RootSystem, m: i64) -> Vec<f64> {
        self.omega_coords(rs, m).iter().map(|v| v.to_f64().unwrap()).collect()
    }

    /// Coordinates in the α^∨-basis.
    pub fn coroot_coords(&self, rs: &RootSystem, m: i64) -> Vec<Q> {
        coweight_to_coroot(rs, &self.coweight_coords(m))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GridFM {
    pub m: i64,
    pub points: Vec<GridPoint>,
}

impl GridFM {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn interior(&self) -> impl Iterator<Item = &GridPoint> {
        self.points.iter().filter(|p| p.is_interior())
    }
}

/// All nonnegative solutions of s_0 + Σ s_i m_i = M, lexicographic in s.
pub fn grid_fm(rs: &RootSystem, m: i64) -> Result<GridFM> {
    if m < 1 {
        return Err(Error::InvalidParameter(format!("M must be positive, got {m}")));
    }
    Ok(GridFM { m, points: bounded_tuples(rs.marks(), m) })
}

/// Tuples s ≥ 0 with Σ s_i c_i ≤ total, paired with the slack s_0.
pub(crate) fn bounded_tuples(coeffs: &[i64], total: i64) -> Vec<GridPoint> {
    fn rec(coeffs: &[i64], rem: i64, cur: &mut Vec<i64>, out: &mut Vec<GridPoint>) {
        match coeffs.split_first() {
            None => out.push(GridPoint { s: cur.clone(), s0: rem }),
            Some((&c, rest)) => {
                for v in 0..=rem / c {
                    cur.push(v);
                    rec(rest, rem - v * c, cur, out);
                    cur.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    rec(coeffs, total, &mut Vec::new(), &mut out);
    out
}

/// ω^∨-coordinates to α^∨-coordinates: z_k = Σ_i y_i (C⁻¹)_{ki}.
pub fn coweight_to_coroot(rs: &RootSystem, y: &[Q]) -> Vec<Q> {
    let inv = rs.cartan_inv();
    (0..rs.rank())
        .map(|k| y.iter().enumerate().map(|(i, v)| *v * inv[k][i]).sum())
        .collect()
}

fn frac(v: Q) -> Q {
    v - v.floor()
}

/// The m^n points of T_m = (1/m)Q^∨/Q^∨ as α^∨-coordinates d_i/m.
pub fn tm_points(rs: &RootSystem, m: i64) -> Result<Vec<Vec<Q>>> {
    if m < 1 {
        return Err(Error::InvalidParameter(format!("m must be positive, got {m}")));
    }
    let n = rs.rank();
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<Q>| {
                (0..m).map(move |d| {
                    let mut q = p.clone();
                    q.push(Q::new(d, m));
                    q
                })
            })
            .collect();
    }
    Ok(out)
}

/// W-orbits of the grid points lying in (1/M)Q^∨, reduced modulo Q^∨.
/// Returns sorted α^∨-coordinates in [0, 1).
pub fn tm_expand(rs: &RootSystem, grid: &GridFM) -> Result<Vec<Vec<Q>>> {
    if rs.weyl_order() > DEFAULT_GROUP_LIMIT {
        return Err(Error::GroupTooLarge { order: rs.weyl_order(), limit: DEFAULT_GROUP_LIMIT });
    }
    let n = rs.rank();
    let c = rs.cartan();
    let mut seen: BTreeSet<Vec<Q>> = BTreeSet::new();
    for p in &grid.points {
        let z: Vec<Q> = p.coroot_coords(rs, grid.m).into_iter().map(frac).collect();
        if z.iter().any(|v| (*v * grid.m).denom() != &1) {
            continue;
        }
        if !seen.insert(z.clone()) {
            continue;
        }
        let mut stack = vec![z];
        while let Some(x) = stack.pop() {
            for j in 0..n {
                let pair: Q = (0..n).map(|k| x[k] * c[j][k]).sum();
                if pair.is_zero() {
                    continue;
                }
                let mut y = x.clone();
                y[j] = frac(y[j] - pair);
                if seen.insert(y.clone()) {
                    stack.push(y);
                }
            }
        }
    }
    Ok(seen.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(label: &str) -> RootSystem {
        RootSystem::from_label(label).unwrap()
    }

    fn coords(g: &GridFM) -> Vec<Vec<Q>> {
        g.points.iter().map(|p| p.coweight_coords(g.m)).collect()
    }

    fn q(n: i64, d: i64) -> Q {
        Q::new(n, d)
    }

    #[test]
    fn a2_m2() {
        let g = grid_fm(&rs("A2"), 2).unwrap();
        let mut got = coords(&g);
        got.sort();
        let mut want = vec![
            vec![q(0, 1), q(0, 1)],
            vec![q(1, 1), q(0, 1)],
            vec![q(0, 1), q(1, 1)],
            vec![q(1, 2), q(0, 1)],
            vec![q(0, 1), q(1, 2)],
            vec![q(1, 2), q(1, 2)],
        ];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn a2_m5_interior() {
        let g = grid_fm(&rs("A2"), 5).unwrap();
        let inner: Vec<Vec<i64>> = g.interior().map(|p| p.s.clone()).collect();
        assert_eq!(inner, vec![vec![1, 1], vec![1, 2], vec![1, 3], vec![2, 1], vec![2, 2], vec![3, 1]]);
    }

    #[test]
    fn g2_m3() {
        let g = grid_fm(&rs("G2"), 3).unwrap();
        let mut got = coords(&g);
        got.sort();
        assert_eq!(got, vec![vec![q(0, 1), q(0, 1)], vec![q(0, 1), q(1, 3)], vec![q(1, 3), q(0, 1)]]);
    }

    #[test]
    fn a2_counts() {
        for m in 1..9 {
            let g = grid_fm(&rs("A2"), m).unwrap();
            assert_eq!(g.len() as i64, (m + 1) * (m + 2) / 2);
        }
        assert!(grid_fm(&rs("A2"), 0).is_err());
    }

    #[test]
    fn tm_examples() {
        let a1 = rs("A1");
        let t = tm_expand(&a1, &grid_fm(&a1, 2).unwrap()).unwrap();
        assert_eq!(t, vec![vec![q(0, 1)], vec![q(1, 2)]]);
        let zero = GridFM { m: 2, points: vec![GridPoint { s: vec![0], s0: 2 }] };
        assert_eq!(tm_expand(&a1, &zero).unwrap(), vec![vec![q(0, 1)]]);
        let a2 = rs("A2");
        assert_eq!(tm_expand(&a2, &grid_fm(&a2, 3).unwrap()).unwrap().len(), 9);
    }

    #[test]
    fn tm_expand_fills_torus() {
        for (label, m) in [("A2", 4), ("B2", 4), ("C2", 6), ("G2", 6), ("A3", 3), ("C3", 4)] {
            let r = rs(label);
            let t = tm_expand(&r, &grid_fm(&r, m).unwrap()).unwrap();
            assert_eq!(t, tm_points(&r, m).unwrap(), "{label} m={m}");
        }
    }
}
