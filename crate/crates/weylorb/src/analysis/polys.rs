//! Symmetric and antisymmetric multivariate polynomials built from a
//! one-variable family p_k, and the quotient P^anti = p^anti / Vandermonde.

use itertools::Itertools;

use crate::error::{check_len, Result};
use crate::linalg::{det_f, factorial};
use crate::transforms::continuous::for_each_midpoint;
use crate::transforms::QuadSpec;

use super::hermite::{MultiIndex, Variant};

/// A one-variable polynomial family with an orthogonality weight.
pub trait PolyFamily {
    /// Power-basis coefficients of p_k, constant term first.
    fn coeffs(&self, k: usize) -> Vec<f64>;

    fn weight(&self, x: f64) -> f64;

    /// Interval carrying the weight; infinite ends are allowed.
    fn support(&self) -> (f64, f64);

    /// p_k^{(r)}(x) / r!.
    fn taylor(&self, k: usize, r: usize, x: f64) -> f64 {
        let c = self.coeffs(k);
        let mut acc = 0.0;
        for (d, &cd) in c.iter().enumerate().skip(r).rev() {
            acc = acc * x + cd * binom(d, r);
        }
        acc
    }

    fn eval(&self, k: usize, x: f64) -> f64 {
        self.taylor(k, 0, x)
    }
}

fn binom(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Coefficients of p_{k} from p_{k+1} = (a_k x + b_k) p_k − c_k p_{k−1}.
fn three_term(k: usize, p0: f64, p1: [f64; 2], step: impl Fn(usize) -> (f64, f64, f64)) -> Vec<f64> {
    let mut prev = vec![p0];
    if k == 0 {
        return prev;
    }
    let mut cur = p1.to_vec();
    for j in 1..k {
        let (a, b, c) = step(j);
        let mut next = vec![0.0; cur.len() + 1];
        for (d, &v) in cur.iter().enumerate() {
            next[d + 1] += a * v;
            next[d] += b * v;
        }
        for (d, &v) in prev.iter().enumerate() {
            next[d] -= c * v;
        }
        prev = cur;
        cur = next;
    }
    cur
}

/// x^k, with unit weight on [−1, 1].
#[derive(Debug, Clone, Copy, Default)]
pub struct Monomials;

impl PolyFamily for Monomials {
    fn coeffs(&self, k: usize) -> Vec<f64> {
        let mut c = vec![0.0; k + 1];
        c[k] = 1.0;
        c
    }
    fn weight(&self, _x: f64) -> f64 {
        1.0
    }
    fn support(&self) -> (f64, f64) {
        (-1.0, 1.0)
    }
}

/// Physicists' Hermite polynomials H_k, weight e^{−x²}.
#[derive(Debug, Clone, Copy, Default)]
pub struct Hermite;

impl PolyFamily for Hermite {
    fn coeffs(&self, k: usize) -> Vec<f64> {
        three_term(k, 1.0, [0.0, 2.0], |j| (2.0, 0.0, 2.0 * j as f64))
    }
    fn weight(&self, x: f64) -> f64 {
        (-x * x).exp()
    }
    fn support(&self) -> (f64, f64) {
        (f64::NEG_INFINITY, f64::INFINITY)
    }
}

/// H_k / √(2^k k! √π), orthonormal for e^{−x²}.
#[derive(Debug, Clone, Copy, Default)]
pub struct HermiteOrthonormal;

impl PolyFamily for HermiteOrthonormal {
    fn coeffs(&self, k: usize) -> Vec<f64> {
        let norm = (2f64.powi(k as i32) * factorial(k as u64) as f64 * std::f64::consts::PI.sqrt()).sqrt();
        Hermite.coeffs(k).into_iter().map(|c| c / norm).collect()
    }
    fn weight(&self, x: f64) -> f64 {
        Hermite.weight(x)
    }
    fn support(&self) -> (f64, f64) {
        Hermite.support()
    }
}

/// Legendre polynomials scaled to be orthonormal on [−1, 1].
#[derive(Debug, Clone, Copy, Default)]
pub struct LegendreOrthonormal;

impl PolyFamily for LegendreOrthonormal {
    fn coeffs(&self, k: usize) -> Vec<f64> {
        let p = three_term(k, 1.0, [0.0, 1.0], |j| {
            let j = j as f64;
            ((2.0 * j + 1.0) / (j + 1.0), 0.0, j / (j + 1.0))
        });
        let s = ((2 * k + 1) as f64 / 2.0).sqrt();
        p.into_iter().map(|c| c * s).collect()
    }
    fn weight(&self, _x: f64) -> f64 {
        1.0
    }
    fn support(&self) -> (f64, f64) {
        (-1.0, 1.0)
    }
}

/// Σ over the distinct rearrangements m' of m of Π_j p_{m'_j}(x_j).
pub fn p_sym(fam: &impl PolyFamily, m: &MultiIndex, x: &[f64]) -> Result<f64> {
    check_len(m.len(), x.len())?;
    let table: Vec<Vec<f64>> = m.0.iter().map(|&k| x.iter().map(|&v| fam.eval(k, v)).collect()).collect();
    Ok((0..m.len())
        .permutations(m.len())
        .map(|p| p.iter().map(|&i| m.0[i]).collect::<Vec<_>>())
        .unique()
        .map(|arr| {
            arr.iter()
                .enumerate()
                .map(|(j, &k)| table[m.0.iter().position(|&v| v == k).unwrap()][j])
                .product::<f64>()
        })
        .sum())
}

/// det(p_{m_i}(x_j)).
pub fn p_anti(fam: &impl PolyFamily, m: &MultiIndex, x: &[f64]) -> Result<f64> {
    check_len(m.len(), x.len())?;
    Ok(det_f(m.0.iter().map(|&k| x.iter().map(|&v| fam.eval(k, v)).collect()).collect()))
}

/// Confluent matrix: column j uses the r_j-th Taylor coefficient, where r_j
/// counts earlier coordinates equal to x_j.
fn confluent(fam: &impl PolyFamily, degrees: &[usize], x: &[f64]) -> Vec<Vec<f64>> {
    let r: Vec<usize> = (0..x.len()).map(|j| x[..j].iter().filter(|&&v| v == x[j]).count()).collect();
    degrees
        .iter()
        .map(|&k| x.iter().zip(&r).map(|(&v, &rj)| fam.taylor(k, rj, v)).collect())
        .collect()
}

/// P^anti_m = p^anti_m / Π_{i<j}(x_i − x_j). At coincident coordinates both
/// determinants are replaced by their confluent limits.
pub fn p_anti_quotient(fam: &impl PolyFamily, m: &MultiIndex, x: &[f64]) -> Result<f64> {
    check_len(m.len(), x.len())?;
    m.require(Variant::Anti)?;
    let n = x.len();
    let vander: Vec<usize> = (0..n).rev().collect();
    let num = det_f(confluent(fam, &m.0, x));
    let den = det_f(confluent(&Monomials, &vander, x));
    Ok(num / den)
}

/// ∫ p_m p_m' Π w(x_j) dx over the ordered region x_1 > … > x_n. The
/// integrand is symmetric, so this is the midpoint rule over the whole
/// clipped support divided by n!.
pub fn ordered_inner(
    fam: &impl PolyFamily,
    m: &MultiIndex,
    mp: &MultiIndex,
    variant: Variant,
    spec: &QuadSpec,
) -> Result<f64> {
    check_len(m.len(), mp.len())?;
    let n = m.len();
    let (lo, hi) = fam.support();
    let lo = vec![lo.max(-spec.extent); n];
    let hi = vec![hi.min(spec.extent); n];
    let eval = |k: &MultiIndex, x: &[f64]| match variant {
        Variant::Anti => p_anti(fam, k, x),
        Variant::Sym => p_sym(fam, k, x),
    };
    let mut acc = 0.0;
    let mut err = None;
    for_each_midpoint(&lo, &hi, spec, |x, vol| {
        if err.is_some() {
            return;
        }
        match (eval(m, x), eval(mp, x)) {
            (Ok(a), Ok(b)) => acc += a * b * x.iter().map(|&v| fam.weight(v)).product::<f64>() * vol,
            (Err(e), _) | (_, Err(e)) => err = Some(e),
        }
    })?;
    err.map_or(Ok(acc / factorial(n as u64) as f64), Err)
}
