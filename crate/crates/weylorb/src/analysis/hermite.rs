//! Symmetric and antisymmetric Hermite polynomials of several variables and
//! their Gaussian-weighted versions, which are eigenfunctions of the
//! two-variable symmetric and antisymmetric exponential integral transforms.

use std::f64::consts::PI;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linalg::{det_f, factorial, permanent_f, C64};
use crate::transforms::QuadSpec;

/// H_k(x) by the three-term recurrence H_{k+1} = 2xH_k − 2kH_{k−1}.
pub fn hermite(k: usize, x: f64) -> f64 {
    let (mut prev, mut cur) = (1.0, 2.0 * x);
    if k == 0 {
        return prev;
    }
    for j in 1..k {
        let next = 2.0 * x * cur - 2.0 * j as f64 * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// H_k(x) = k! Σ_j (−1)^j (2x)^{k−2j} / (j!(k−2j)!), for small k.
pub fn hermite_explicit(k: usize, x: f64) -> f64 {
    (0..=k / 2)
        .map(|j| {
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            let f = |v: usize| factorial(v as u64) as f64;
            sign * f(k) / (f(j) * f(k - 2 * j)) * (2.0 * x).powi((k - 2 * j) as i32)
        })
        .sum()
}

/// A tuple of nonnegative integers labelling a multivariate polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiIndex(pub Vec<usize>);

impl MultiIndex {
    pub fn new(m: &[usize]) -> Self {
        MultiIndex(m.to_vec())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// |m| = Σ m_i.
    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_strictly_decreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    pub fn is_decreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub(crate) fn require(&self, variant: Variant) -> Result<()> {
        let ok = match variant {
            Variant::Anti => self.is_strictly_decreasing(),
            Variant::Sym => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::NonMonotone(format!("{:?}", self.0)))
        }
    }
}

impl FromStr for MultiIndex {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidParameter(format!("bad multi-index entry {t:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(MultiIndex)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    Sym,
    Anti,
}

impl FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "sym" | "symmetric" => Ok(Variant::Sym),
            "anti" | "antisymmetric" => Ok(Variant::Anti),
            _ => Err(Error::InvalidParameter(format!("unknown variant {s:?}"))),
        }
    }
}

/// Sign of the transform kernel e^{±2πi⟨λ,x⟩}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelSign {
    /// e^{+2πi⟨λ,x⟩}, the orbit function itself; eigenvalues i^{|m|}.
    Plus,
    /// e^{−2πi⟨λ,x⟩}; eigenvalues i^{−|m|}.
    Minus,
}

impl KernelSign {
    fn sign(self) -> f64 {
        match self {
            KernelSign::Plus => 1.0,
            KernelSign::Minus => -1.0,
        }
    }

    /// Eigenvalue of the Gaussian-weighted Hermite function of degree |m|.
    pub fn eigenvalue(self, degree: usize) -> C64 {
        let v = C64::i().powi((degree % 4) as i32);
        match self {
            KernelSign::Plus => v,
            KernelSign::Minus => v.conj(),
        }
    }
}

fn matrix(m: &MultiIndex, x: &[f64], f: impl Fn(usize, f64) -> f64) -> Result<Vec<Vec<f64>>> {
    crate::error::check_len(m.len(), x.len())?;
    Ok(m.0.iter().map(|&k| x.iter().map(|&xj| f(k, xj)).collect()).collect())
}

/// H^anti_m = det(H_{m_i}(λ_j)) or H^sym_m = per(H_{m_i}(λ_j)).
pub fn hermite_sym_anti(m: &MultiIndex, lambda: &[f64], variant: Variant) -> Result<f64> {
    m.require(variant)?;
    let a = matrix(m, lambda, hermite)?;
    Ok(match variant {
        Variant::Anti => det_f(a),
        Variant::Sym => permanent_f(&a),
    })
}

/// e^{−π|x|²} H^{sym/anti}_m(√(2π)x).
pub fn hermite_function(m: &MultiIndex, x: &[f64], variant: Variant) -> Result<f64> {
    let s = (2.0 * PI).sqrt();
    let scaled: Vec<f64> = x.iter().map(|v| v * s).collect();
    let r2: f64 = x.iter().map(|v| v * v).sum();
    Ok((-PI * r2).exp() * hermite_sym_anti(m, &scaled, variant)?)
}

/// The two-variable transform g ↦ ∫_{x1>x2} g(x) K_λ(x) dx, where K_λ is
/// the antisymmetric or symmetric orbit function of λ with the chosen
/// kernel sign, discretized by the midpoint rule on [−extent, extent]².
/// Functions are sampled row-major on the node grid (x1 is the row).
#[derive(Debug, Clone)]
pub struct OrbitFourier2 {
    nodes: Vec<f64>,
    /// a[p][k] = h·e^{±2πi t_p t_k}.
    a: Vec<Vec<C64>>,
    variant: Variant,
    sign: KernelSign,
}

fn matmul(x: &[Vec<C64>], y: &[Vec<C64>]) -> Vec<Vec<C64>> {
    let n = y.first().map_or(0, Vec::len);
    x.iter()
        .map(|row| {
            let mut out = vec![C64::new(0.0, 0.0); n];
            for (xv, yrow) in row.iter().zip(y) {
                for (o, yv) in out.iter_mut().zip(yrow) {
                    *o += xv * yv;
                }
            }
            out
        })
        .collect()
}

fn transpose(x: &[Vec<C64>]) -> Vec<Vec<C64>> {
    let n = x.first().map_or(0, Vec::len);
    (0..n).map(|j| x.iter().map(|r| r[j]).collect()).collect()
}

impl OrbitFourier2 {
    pub fn new(spec: &QuadSpec, sign: KernelSign, variant: Variant) -> Result<Self> {
        spec.check(2)?;
        let n = spec.resolution;
        let h = 2.0 * spec.extent / n as f64;
        let nodes: Vec<f64> = (0..n).map(|k| -spec.extent + (k as f64 + 0.5) * h).collect();
        let a = nodes
            .iter()
            .map(|&p| {
                nodes
                    .iter()
                    .map(|&k| C64::from_polar(h, sign.sign() * 2.0 * PI * p * k))
                    .collect()
            })
            .collect();
        Ok(OrbitFourier2 { nodes, a, variant, sign })
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn sample(&self, f: impl Fn(f64, f64) -> f64) -> Vec<Vec<C64>> {
        self.nodes
            .iter()
            .map(|&x1| self.nodes.iter().map(|&x2| C64::new(f(x1, x2), 0.0)).collect())
            .collect()
    }

    /// ½(F ∓ Fᵀ) with F = A G Aᵀ.
    pub fn apply(&self, g: &[Vec<C64>]) -> Vec<Vec<C64>> {
        let f = matmul(&matmul(&self.a, g), &transpose(&self.a));
        let sgn = match self.variant {
            Variant::Anti => -1.0,
            Variant::Sym => 1.0,
        };
        (0..f.len())
            .map(|i| (0..f.len()).map(|j| (f[i][j] + f[j][i] * sgn) * 0.5).collect())
            .collect()
    }
}

fn max_abs(g: &[Vec<C64>]) -> f64 {
    g.iter().flatten().map(|v| v.norm()).fold(0.0, f64::max)
}

fn max_diff(a: &[Vec<C64>], b: &[Vec<C64>], scale: C64) -> f64 {
    a.iter()
        .flatten()
        .zip(b.iter().flatten())
        .map(|(x, y)| (x - y * scale).norm())
        .fold(0.0, f64::max)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HermiteEigenCheck {
    pub expected: C64,
    /// Least-squares eigenvalue ⟨Tg, g⟩/⟨g, g⟩ on the node grid.
    pub estimated: C64,
    /// max |Tg − expected·g| / max |g|.
    pub rel_err: f64,
}

impl OrbitFourier2 {
    /// Transform e^{−π|x|²}H_m(√(2π)x) and compare with eigenvalue·itself
    /// at the grid nodes.
    pub fn eigen_check(&self, m: &MultiIndex) -> Result<HermiteEigenCheck> {
        if m.len() != 2 {
            return Err(Error::InvalidParameter(format!(
                "transform check needs two variables, got {}",
                m.len()
            )));
        }
        m.require(self.variant)?;
        let g = self.sample(|a, b| hermite_function(m, &[a, b], self.variant).expect("two variables"));
        let tg = self.apply(&g);
        let expected = self.sign.eigenvalue(m.degree());
        let num: C64 = tg.iter().flatten().zip(g.iter().flatten()).map(|(x, y)| x * y.conj()).sum();
        let den: f64 = g.iter().flatten().map(|v| v.norm_sqr()).sum();
        Ok(HermiteEigenCheck {
            expected,
            estimated: num / den,
            rel_err: max_diff(&tg, &g, expected) / max_abs(&g),
        })
    }

    /// Apply the transform four times to the sampled f, which should have
    /// the symmetry of the variant, and return max|T⁴f − f| / max|f|.
    pub fn fourth_power_residual(&self, f: impl Fn(f64, f64) -> f64) -> f64 {
        let g = self.sample(f);
        let mut cur = g.clone();
        for _ in 0..4 {
            cur = self.apply(&cur);
        }
        max_diff(&cur, &g, C64::new(1.0, 0.0)) / max_abs(&g)
    }
}

/// [`OrbitFourier2::eigen_check`] on a freshly built transform.
pub fn transform_eigen_check(
    m: &MultiIndex,
    variant: Variant,
    spec: &QuadSpec,
    sign: KernelSign,
) -> Result<HermiteEigenCheck> {
    m.require(variant)?;
    OrbitFourier2::new(spec, sign, variant)?.eigen_check(m)
}

/// [`OrbitFourier2::fourth_power_residual`] on a freshly built transform.
pub fn fourth_power_residual(
    variant: Variant,
    spec: &QuadSpec,
    sign: KernelSign,
    f: impl Fn(f64, f64) -> f64,
) -> Result<f64> {
    Ok(OrbitFourier2::new(spec, sign, variant)?.fourth_power_residual(f))
}

/// Strictly decreasing pairs (anti) or decreasing pairs (sym) of degree at
/// most `max_degree`, with the anti list starting at (1,0).
pub fn pairs_up_to(max_degree: usize, variant: Variant) -> Vec<MultiIndex> {
    let mut out = Vec::new();
    for d in 0..=max_degree {
        for m2 in 0..=d / 2 {
            let m1 = d - m2;
            if variant == Variant::Anti && m1 == m2 {
                continue;
            }
            out.push(MultiIndex(vec![m1, m2]));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recurrence_matches_explicit_sum() {
        for k in 0..=12 {
            for &x in &[-2.3, -0.4, 0.0, 0.7, 1.9] {
                let a = hermite(k, x);
                let b = hermite_explicit(k, x);
                assert!((a - b).abs() <= 1e-10 * b.abs().max(1.0), "k={k} x={x}");
            }
        }
        assert_eq!(hermite(3, 1.0), 8.0 - 12.0);
    }

    #[test]
    fn examples() {
        let (a, b) = (0.7, -0.2);
        let anti = hermite_sym_anti(&MultiIndex::new(&[1, 0]), &[a, b], Variant::Anti).unwrap();
        assert!((anti - (2.0 * a - 2.0 * b)).abs() < 1e-14);
        assert_eq!(hermite_sym_anti(&MultiIndex::new(&[3, 1]), &[a, a], Variant::Anti).unwrap(), 0.0);
        let sym = hermite_sym_anti(&MultiIndex::new(&[1, 1]), &[a, b], Variant::Sym).unwrap();
        assert!((sym - 2.0 * (2.0 * a) * (2.0 * b)).abs() < 1e-14);
        assert!(hermite_sym_anti(&MultiIndex::new(&[1, 1]), &[a, b], Variant::Anti).is_err());
    }

    #[test]
    fn eigenvalue_table() {
        assert_eq!(KernelSign::Minus.eigenvalue(1), C64::new(0.0, -1.0));
        assert_eq!(KernelSign::Plus.eigenvalue(1), C64::new(0.0, 1.0));
        assert_eq!(KernelSign::Minus.eigenvalue(2), C64::new(-1.0, 0.0));
        assert_eq!(KernelSign::Minus.eigenvalue(4), C64::new(1.0, 0.0));
    }

    #[test]
    fn pair_lists() {
        let anti: Vec<Vec<usize>> = pairs_up_to(4, Variant::Anti).into_iter().map(|m| m.0).collect();
        assert_eq!(anti, vec![vec![1, 0], vec![2, 0], vec![3, 0], vec![2, 1], vec![4, 0], vec![3, 1]]);
        assert_eq!(pairs_up_to(4, Variant::Sym).len(), 9);
    }

    #[test]
    fn small_grid_eigen() {
        let spec = QuadSpec { resolution: 120, extent: 5.0, budget: 1_000_000 };
        let m = MultiIndex::new(&[1, 0]);
        let c = transform_eigen_check(&m, Variant::Anti, &spec, KernelSign::Minus).unwrap();
        assert!(c.rel_err < 1e-5, "{}", c.rel_err);
        assert!((c.estimated - C64::new(0.0, -1.0)).norm() < 1e-6);
        let plus = transform_eigen_check(&m, Variant::Anti, &spec, KernelSign::Plus).unwrap();
        assert!((plus.estimated - C64::new(0.0, 1.0)).norm() < 1e-6);
        let zero = transform_eigen_check(&MultiIndex::new(&[0, 0]), Variant::Sym, &spec, KernelSign::Minus).unwrap();
        assert!(zero.rel_err < 1e-5);
        let f = |a: f64, b: f64| (a - b) * (-0.8 * PI * (a * a + b * b)).exp() * (1.0 + a * b);
        let r = fourth_power_residual(Variant::Anti, &spec, KernelSign::Minus, f).unwrap();
        assert!(r < 1e-4, "{r}");
        let big = QuadSpec { resolution: 2000, extent: 6.0, budget: 1_000_000 };
        assert!(matches!(
            transform_eigen_check(&m, Variant::Anti, &big, KernelSign::Minus),
            Err(Error::QuadratureBudget { .. })
        ));
    }
}
