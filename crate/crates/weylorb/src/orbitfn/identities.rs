//! Generating-function identities for antisymmetric orbit functions of A_n
//! written as polynomial alternants a_μ(y) = det(y_j^{μ_i}).
//!
//! The finite identities are checked exactly on integers. Their terms are
//! Vandermonde products V(μ) = Π_{i<j}(μ_i − μ_j), the value the alternant
//! takes in the limit described by the Weyl dimension formula.

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{binomial, det_c, C64};

/// ρ_k = (k−1, …, 1, 0).
pub fn rho(k: usize) -> Vec<i64> {
    (0..k as i64).rev().collect()
}

pub fn vandermonde(v: &[i64]) -> i128 {
    let mut p: i128 = 1;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            p *= (v[i] - v[j]) as i128;
        }
    }
    p
}

pub fn vandermonde_c(y: &[C64]) -> C64 {
    let mut p = C64::one();
    for i in 0..y.len() {
        for j in i + 1..y.len() {
            p *= y[i] - y[j];
        }
    }
    p
}

/// a_μ(y) = det(y_j^{μ_i}).
pub fn alternant(mu: &[i64], y: &[C64]) -> C64 {
    let m: Vec<Vec<C64>> = mu
        .iter()
        .map(|&e| y.iter().map(|v| v.powi(e as i32)).collect())
        .collect();
    det_c(m)
}

/// Partitions of `total` into at most `parts` parts, padded with zeros.
pub fn partitions(total: i64, parts: usize) -> Vec<Vec<i64>> {
    fn rec(rem: i64, max: i64, slots: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if slots == 0 {
            if rem == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for v in (0..=rem.min(max)).rev() {
            if rem - v > v * (slots as i64 - 1) {
                break;
            }
            cur.push(v);
            rec(rem - v, v, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(total, total, parts, &mut Vec::new(), &mut out);
    out
}

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn pad(a: &[i64], len: usize) -> Vec<i64> {
    let mut v = a.to_vec();
    v.resize(len, 0);
    v
}

/// Both sides of an exact identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactCheck {
    pub lhs: i128,
    pub rhs: i128,
}

impl ExactCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Σ_{|m|=m} V_s(m+ρ_s) V_r(m̂+ρ_r) = C(sr+m−1, m) V_s(ρ_s) V_r(ρ_r), where m
/// has s parts and m̂ is m padded with zeros to r parts (r ≥ s ≥ 1).
pub fn cha5(s: usize, r: usize, m: i64) -> Result<ExactCheck> {
    if s == 0 || r < s {
        return Err(Error::InvalidParameter(format!("need r >= s >= 1, got s={s}, r={r}")));
    }
    let (rs, rr) = (rho(s), rho(r));
    let lhs = partitions(m, s)
        .iter()
        .map(|p| vandermonde(&add(p, &rs)) * vandermonde(&add(&pad(p, r), &rr)))
        .sum();
    let rhs = binomial((s * r) as u64 + m as u64 - 1, m as u64) as i128 * vandermonde(&rs) * vandermonde(&rr);
    Ok(ExactCheck { lhs, rhs })
}

/// Σ_{|m|=m} V(2m+ρ) = C(m + n(n+1)/2 − 1, m) V(ρ).
pub fn cha6(n: usize, m: i64) -> Result<ExactCheck> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    let r = rho(n);
    let lhs = partitions(m, n)
        .iter()
        .map(|p| vandermonde(&add(&p.iter().map(|v| 2 * v).collect::<Vec<_>>(), &r)))
        .sum();
    let k = (n * (n + 1) / 2) as u64;
    let rhs = binomial(m as u64 + k - 1, m as u64) as i128 * vandermonde(&r);
    Ok(ExactCheck { lhs, rhs })
}

fn doubled(p: &[i64], n: usize) -> Vec<i64> {
    let mut v: Vec<i64> = p.iter().flat_map(|&x| [x, x]).collect();
    v.resize(n, 0);
    v
}

/// Σ_{|m|=m} V(m̃+ρ) = C(m + n(n−1)/2 − 1, m) V(ρ) with m̃ = (m_1,m_1,m_2,m_2,…).
pub fn cha7(n: usize, m: i64) -> Result<ExactCheck> {
    if n < 2 {
        return Err(Error::InvalidParameter("n must be at least 2".into()));
    }
    let r = rho(n);
    let lhs = partitions(m, n / 2).iter().map(|p| vandermonde(&add(&doubled(p, n), &r))).sum();
    let k = (n * (n - 1) / 2) as u64;
    let rhs = binomial(m as u64 + k - 1, m as u64) as i128 * vandermonde(&r);
    Ok(ExactCheck { lhs, rhs })
}

fn check_disc(name: &str, v: &[C64]) -> Result<()> {
    if let Some(bad) = v.iter().find(|c| c.norm() >= 1.0) {
        return Err(Error::Divergent(format!("|{name}| = {} >= 1", bad.norm())));
    }
    Ok(())
}

/// V(y)V(z)Π(1−y_i z_j)⁻¹ against Σ_s a_{s+ρ_1}(y) a_{ŝ+ρ_2}(z) over
/// partitions with |s| ≤ k. Returns |LHS − RHS|.
pub fn r1_residual(y: &[C64], z: &[C64], k: i64) -> Result<f64> {
    check_disc("y", y)?;
    check_disc("z", z)?;
    let (n1, n2) = (y.len(), z.len());
    let mut prod = C64::one();
    for a in y {
        for b in z {
            prod /= C64::one() - a * b;
        }
    }
    let lhs = vandermonde_c(y) * vandermonde_c(z) * prod;
    let (r1, r2) = (rho(n1), rho(n2));
    let mut rhs = C64::zero();
    for total in 0..=k {
        for p in partitions(total, n1.min(n2)) {
            rhs += alternant(&add(&pad(&p, n1), &r1), y) * alternant(&add(&pad(&p, n2), &r2), z);
        }
    }
    Ok((lhs - rhs).norm())
}

/// Cauchy determinant identity: residuals of det((1−y_i z_j)⁻¹) against the
/// product V(y)V(z)/Π(1−y_i z_j) and against the truncated series
/// Σ_λ a_{λ+ρ}(y) a_{λ+ρ}(z).
pub fn cauchy_residuals(y: &[C64], z: &[C64], k: i64) -> Result<(f64, f64)> {
    check_disc("y", y)?;
    check_disc("z", z)?;
    if y.len() != z.len() {
        return Err(Error::DimensionMismatch { expected: y.len(), got: z.len() });
    }
    let n = y.len();
    let m: Vec<Vec<C64>> = y
        .iter()
        .map(|a| z.iter().map(|b| C64::one() / (C64::one() - a * b)).collect())
        .collect();
    let d = det_c(m);
    let mut prod = C64::one();
    for a in y {
        for b in z {
            prod /= C64::one() - a * b;
        }
    }
    let closed = vandermonde_c(y) * vandermonde_c(z) * prod;
    let r = rho(n);
    let mut series = C64::zero();
    for total in 0..=k {
        for p in partitions(total, n) {
            let mu = add(&p, &r);
            series += alternant(&mu, y) * alternant(&mu, z);
        }
    }
    Ok(((d - closed).norm(), (d - series).norm()))
}

/// Σ_m a_{2m+ρ}(y) t^{|m|} against V(y) Π_{i≤j}(1 − t y_i y_j)⁻¹.
pub fn cha3_residual(y: &[C64], t: C64, k: i64) -> Result<f64> {
    check_disc("y", y)?;
    check_disc("t", &[t])?;
    let n = y.len();
    let r = rho(n);
    let mut lhs = C64::zero();
    for total in 0..=k {
        for p in partitions(total, n) {
            let mu = add(&p.iter().map(|v| 2 * v).collect::<Vec<_>>(), &r);
            lhs += alternant(&mu, y) * t.powi(total as i32);
        }
    }
    let mut rhs = vandermonde_c(y);
    for i in 0..n {
        for j in i..n {
            rhs /= C64::one() - t * y[i] * y[j];
        }
    }
    Ok((lhs - rhs).norm())
}

/// Σ_m a_{m̃+ρ}(y) t^{|m|} against V(y) Π_{i<j}(1 − t y_i y_j)⁻¹.
pub fn cha4_residual(y: &[C64], t: C64, k: i64) -> Result<f64> {
    check_disc("y", y)?;
    check_disc("t", &[t])?;
    let n = y.len();
    let r = rho(n);
    let mut lhs = C64::zero();
    for total in 0..=k {
        for p in partitions(total, n / 2) {
            lhs += alternant(&add(&doubled(&p, n), &r), y) * t.powi(total as i32);
        }
    }
    let mut rhs = vandermonde_c(y);
    for i in 0..n {
        for j in i + 1..n {
            rhs /= C64::one() - t * y[i] * y[j];
        }
    }
    Ok((lhs - rhs).norm())
}

/// Named identity with its parameters, for uniform dispatch.
#[derive(Debug, Clone)]
pub enum Identity {
    R1 { y: Vec<C64>, z: Vec<C64>, cutoff: i64 },
    Cauchy { y: Vec<C64>, z: Vec<C64>, cutoff: i64 },
    Cha3 { y: Vec<C64>, t: C64, cutoff: i64 },
    Cha4 { y: Vec<C64>, t: C64, cutoff: i64 },
    Cha5 { s: usize, r: usize, m: i64 },
    Cha6 { n: usize, m: i64 },
    Cha7 { n: usize, m: i64 },
}

/// |LHS − RHS| of the identity; exact identities report 0 or the integer gap.
pub fn residual(id: &Identity) -> Result<f64> {
    let gap = |c: ExactCheck| (c.lhs - c.rhs).unsigned_abs() as f64;
    match id {
        Identity::R1 { y, z, cutoff } => r1_residual(y, z, *cutoff),
        Identity::Cauchy { y, z, cutoff } => cauchy_residuals(y, z, *cutoff).map(|(a, b)| a.max(b)),
        Identity::Cha3 { y, t, cutoff } => cha3_residual(y, *t, *cutoff),
        Identity::Cha4 { y, t, cutoff } => cha4_residual(y, *t, *cutoff),
        Identity::Cha5 { s, r, m } => cha5(*s, *r, *m).map(gap),
        Identity::Cha6 { n, m } => cha6(*n, *m).map(gap),
        Identity::Cha7 { n, m } => cha7(*n, *m).map(gap),
    }
}

/// Point on the circle of radius `r` at angle `turns`·2π.
pub fn polar(r: f64, turns: f64) -> C64 {
    Complex64::from_polar(r, 2.0 * std::f64::consts::PI * turns)
}
