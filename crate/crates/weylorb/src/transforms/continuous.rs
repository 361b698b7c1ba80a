//! Quadrature versions of the continuous transforms.
//!
//! All integrals use the tensor midpoint rule on a bounding box, masked by
//! membership of the integration domain. This is approximate and meant for
//! low rank (n ≤ 2, or n = 3 at small resolution).

use std::f64::consts::PI;

use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::{det_f, permanent_f, C64};
use crate::orbitfn::{Kind, OrbitFunction};
use crate::rootsys::{RootSystem, Weight};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadSpec {
    /// Midpoints per axis.
    pub resolution: usize,
    /// Truncation of unbounded domains, per coordinate.
    pub extent: f64,
    /// Maximum number of quadrature nodes.
    pub budget: u64,
}

impl Default for QuadSpec {
    fn default() -> Self {
        QuadSpec { resolution: 400, extent: 6.0, budget: 50_000_000 }
    }
}

impl QuadSpec {
    pub fn with_resolution(resolution: usize) -> Self {
        QuadSpec { resolution, ..Default::default() }
    }

    pub(crate) fn check(&self, dim: usize) -> Result<()> {
        let needed = (self.resolution as u64).checked_pow(dim as u32).unwrap_or(u64::MAX);
        if needed > self.budget {
            return Err(Error::QuadratureBudget { needed, budget: self.budget });
        }
        if self.resolution == 0 {
            return Err(Error::InvalidParameter("quadrature resolution must be positive".into()));
        }
        Ok(())
    }
}

/// Visit the midpoints of the box Π[lo_i, hi_i] with the cell volume.
pub(crate) fn for_each_midpoint(
    lo: &[f64],
    hi: &[f64],
    spec: &QuadSpec,
    mut visit: impl FnMut(&[f64], f64),
) -> Result<()> {
    let n = lo.len();
    spec.check(n)?;
    let r = spec.resolution;
    let h: Vec<f64> = lo.iter().zip(hi).map(|(a, b)| (b - a) / r as f64).collect();
    let vol: f64 = h.iter().product();
    let mut idx = vec![0usize; n];
    let mut x = vec![0.0; n];
    loop {
        for i in 0..n {
            x[i] = lo[i] + (idx[i] as f64 + 0.5) * h[i];
        }
        visit(&x, vol);
        let mut k = 0;
        loop {
            if k == n {
                return Ok(());
            }
            idx[k] += 1;
            if idx[k] < r {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Volume of the torus E/Q^∨ in θ-coordinates: the coroots have ω-rows
/// (2/⟨α_j,α_j⟩)·C_j.
pub fn torus_volume(rs: &RootSystem) -> f64 {
    let rows: Vec<Vec<f64>> = rs
        .cartan()
        .iter()
        .zip(rs.root_norms())
        .map(|(row, nrm)| {
            let s = 2.0 / nrm.to_f64().unwrap();
            row.iter().map(|&v| v as f64 * s).collect()
        })
        .collect();
    det_f(rows).abs()
}

/// √det S, the Euclidean volume element in θ-coordinates.
fn euclidean_density(rs: &RootSystem) -> f64 {
    det_f(rs.metric_f64().to_vec()).sqrt()
}

#[derive(Debug, Clone)]
pub struct SeriesResult {
    pub coeffs: Vec<C64>,
    /// ∫_F |f|² dμ.
    pub norm_sq: f64,
    /// |Σ|c_λ|² − ∫|f|²| / ∫|f|².
    pub plancherel_residual: f64,
}

/// c_λ = ∫_F f conj(ϕ_λ) dμ with μ normalized so the torus E/Q^∨ has
/// volume 1; `f` takes θ-coordinates.
pub fn series_coefficients(
    rs: &RootSystem,
    f: impl Fn(&[f64]) -> C64,
    labels: &[Weight],
    spec: &QuadSpec,
) -> Result<SeriesResult> {
    let fns = labels
        .iter()
        .map(|l| OrbitFunction::new(rs, Kind::Antisymmetric, l))
        .collect::<Result<Vec<_>>>()?;
    let n = rs.rank();
    let q: Vec<f64> = rs.highest_root().0.iter().map(|v| v.to_f64().unwrap()).collect();
    let q = rs.metric_apply_f64(&q);
    let hi: Vec<f64> = q.iter().map(|v| 1.0 / v).collect();
    let dmu = 1.0 / torus_volume(rs);
    let mut coeffs = vec![C64::zero(); labels.len()];
    let mut norm_sq = 0.0;
    for_each_midpoint(&vec![0.0; n], &hi, spec, |x, vol| {
        let pair: f64 = x.iter().zip(&q).map(|(a, b)| a * b).sum();
        if pair > 1.0 {
            return;
        }
        let fx = f(x);
        let w = vol * dmu;
        norm_sq += fx.norm_sqr() * w;
        for (c, phi) in coeffs.iter_mut().zip(&fns) {
            *c += fx * phi.eval(x).conj() * w;
        }
    })?;
    let total: f64 = coeffs.iter().map(|c| c.norm_sqr()).sum();
    let plancherel_residual = if norm_sq > 0.0 { (total - norm_sq).abs() / norm_sq } else { total };
    Ok(SeriesResult { coeffs, norm_sq, plancherel_residual })
}

/// f̃(λ) = ∫_{D+} f(x) ϕ_λ(x) dx over the dominant chamber truncated to
/// θ_i ≤ extent, with the Euclidean measure; λ real, in the ω-basis.
pub fn orbit_transform(
    rs: &RootSystem,
    f: impl Fn(&[f64]) -> C64,
    lambda: &[f64],
    spec: &QuadSpec,
) -> Result<C64> {
    let phi = OrbitFunction::from_real(rs, Kind::Antisymmetric, lambda)?;
    chamber_integral(rs, spec, |x| f(x) * phi.eval(x))
}

/// f(x) = ∫_{D+} f̃(λ) conj(ϕ_λ(x)) dλ over the truncated dominant chamber.
pub fn orbit_transform_inverse(
    rs: &RootSystem,
    ft: impl Fn(&[f64]) -> C64,
    x: &[f64],
    spec: &QuadSpec,
) -> Result<C64> {
    // ϕ_λ(x) = ϕ_x(λ) for the antisymmetric kind.
    let phi = OrbitFunction::from_real(rs, Kind::Antisymmetric, x)?;
    chamber_integral(rs, spec, |l| ft(l) * phi.eval(l).conj())
}

fn chamber_integral(rs: &RootSystem, spec: &QuadSpec, g: impl Fn(&[f64]) -> C64) -> Result<C64> {
    let n = rs.rank();
    let dens = euclidean_density(rs);
    let mut acc = C64::zero();
    for_each_midpoint(&vec![0.0; n], &vec![spec.extent; n], spec, |x, vol| {
        acc += g(x) * vol * dens;
    })?;
    Ok(acc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntegralKind {
    /// det(sin 2πλ_i x_j).
    Sine,
    /// per(cos 2πλ_i x_j).
    Cosine,
}

pub fn trig_kernel(kind: IntegralKind, lambda: &[f64], x: &[f64]) -> f64 {
    let a: Vec<Vec<f64>> = lambda
        .iter()
        .map(|l| {
            x.iter()
                .map(|v| match kind {
                    IntegralKind::Sine => (2.0 * PI * l * v).sin(),
                    IntegralKind::Cosine => (2.0 * PI * l * v).cos(),
                })
                .collect()
        })
        .collect();
    match kind {
        IntegralKind::Sine => det_f(a),
        IntegralKind::Cosine => permanent_f(&a),
    }
}

fn ordered_integral(n: usize, spec: &QuadSpec, g: impl Fn(&[f64]) -> C64) -> Result<C64> {
    let mut acc = C64::zero();
    for_each_midpoint(&vec![0.0; n], &vec![spec.extent; n], spec, |x, vol| {
        if x.windows(2).all(|w| w[0] > w[1]) {
            acc += g(x) * vol;
        }
    })?;
    Ok(acc)
}

/// f̃(λ) = ∫ f(x) K(λ, x) dx over x_1 > … > x_n > 0, truncated at extent.
pub fn trig_transform(
    kind: IntegralKind,
    f: impl Fn(&[f64]) -> C64,
    lambda: &[f64],
    spec: &QuadSpec,
) -> Result<C64> {
    ordered_integral(lambda.len(), spec, |x| f(x) * trig_kernel(kind, lambda, x))
}

/// f(x) = 2^{2n} ∫ f̃(λ) K(λ, x) dλ over λ_1 > … > λ_n > 0.
pub fn trig_transform_inverse(
    kind: IntegralKind,
    ft: impl Fn(&[f64]) -> C64,
    x: &[f64],
    spec: &QuadSpec,
) -> Result<C64> {
    let n = x.len();
    let s = ordered_integral(n, spec, |l| ft(l) * trig_kernel(kind, l, x))?;
    Ok(s * 4f64.powi(n as i32))
}

/// Plancherel check ∫|f|² = 2^{2n} ∫|f̃|² over the ordered regions, with f̃
/// computed by quadrature at every λ node. Cost is resolution^{2n}.
pub fn trig_plancherel_residual(
    kind: IntegralKind,
    n: usize,
    f: impl Fn(&[f64]) -> C64,
    spec: &QuadSpec,
) -> Result<f64> {
    spec.check(2 * n)?;
    let lhs = ordered_integral(n, spec, |x| C64::new(f(x).norm_sqr(), 0.0))?.re;
    let rhs = ordered_integral(n, spec, |l| {
        let ft = trig_transform(kind, &f, l, spec).unwrap_or_default();
        C64::new(ft.norm_sqr(), 0.0)
    })?
    .re * 4f64.powi(n as i32);
    Ok((lhs - rhs).abs() / lhs.max(f64::MIN_POSITIVE))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(label: &str) -> RootSystem {
        RootSystem::from_label(label).unwrap()
    }

    fn sine_on_unit(lambda: f64) -> f64 {
        let s = |t: f64| if t.abs() < 1e-12 { 1.0 } else { (2.0 * PI * t).sin() / (2.0 * PI * t) };
        0.5 * (s(1.0 - lambda) - s(1.0 + lambda))
    }

    #[test]
    fn a1_sine_transform_analytic() {
        let spec = QuadSpec { extent: 1.0, ..QuadSpec::default() };
        let f = |x: &[f64]| C64::new((2.0 * PI * x[0]).sin(), 0.0);
        for lam in [0.3, 1.0, 1.7, 2.5] {
            let got = trig_transform(IntegralKind::Sine, f, &[lam], &spec).unwrap();
            assert!((got.re - sine_on_unit(lam)).abs() < 2e-5, "{lam}: {got}");
        }
    }

    #[test]
    fn a1_orbit_transform_is_sine_transform() {
        let a1 = rs("A1");
        let r2 = 2f64.sqrt();
        let spec = QuadSpec { extent: r2, resolution: 2000, ..QuadSpec::default() };
        let f = |t: &[f64]| C64::new((2.0 * PI * t[0] / r2).sin(), 0.0);
        for v in [0.4, 1.3] {
            let got = orbit_transform(&a1, f, &[v * r2], &spec).unwrap();
            let want = C64::new(0.0, 2.0 * sine_on_unit(v));
            assert!((got - want).norm() < 1e-5, "{v}: {got} vs {want}");
        }
    }

    #[test]
    fn series_of_orbit_function_is_unit_vector() {
        for label in ["A2", "C2"] {
            let r = rs(label);
            let labels: Vec<Weight> = [[1, 1], [2, 1], [1, 2], [3, 3]]
                .iter()
                .map(|v| Weight::from_ints(v))
                .collect();
            let target = OrbitFunction::new(&r, Kind::Antisymmetric, &labels[1]).unwrap();
            let res = series_coefficients(&r, |x| target.eval(x), &labels, &QuadSpec::default())
                .unwrap();
            for (i, c) in res.coeffs.iter().enumerate() {
                let want = if i == 1 { 1.0 } else { 0.0 };
                assert!((c - want).norm() < 1e-4, "{label} {i}: {c}");
            }
        }
    }

    #[test]
    fn a2_series_plancherel() {
        let r = rs("A2");
        let labels: Vec<Weight> = (1..4)
            .flat_map(|a| (1..4).map(move |b| Weight::from_ints(&[a, b])))
            .collect();
        let parts: Vec<(OrbitFunction, C64)> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| {
                let c = C64::new(1.0 / (1.0 + i as f64), 0.3 * i as f64);
                (OrbitFunction::new(&r, Kind::Antisymmetric, l).unwrap(), c)
            })
            .collect();
        let f = |x: &[f64]| parts.iter().map(|(p, c)| p.eval(x) * c).sum::<C64>();
        let res = series_coefficients(&r, f, &labels, &QuadSpec::default()).unwrap();
        assert!(res.plancherel_residual < 1e-3, "{}", res.plancherel_residual);
    }

    #[test]
    fn trig_round_trip_and_plancherel_1d() {
        let spec = QuadSpec { extent: 5.0, resolution: 500, ..QuadSpec::default() };
        let f = |x: &[f64]| C64::new(x[0] * (-PI * x[0] * x[0]).exp(), 0.0);
        let res = trig_plancherel_residual(IntegralKind::Sine, 1, f, &spec).unwrap();
        assert!(res < 1e-6, "{res}");
        // x e^{-πx²} is its own sine transform up to the factor ½.
        let ft = trig_transform(IntegralKind::Sine, f, &[0.7], &spec).unwrap();
        assert!((ft.re - 0.5 * f(&[0.7]).re).abs() < 1e-8);
        let back = trig_transform_inverse(IntegralKind::Sine, |l| 0.5 * f(l), &[0.9], &spec)
            .unwrap();
        assert!((back - f(&[0.9])).norm() < 1e-8);
    }

    #[test]
    fn budget_enforced() {
        let spec = QuadSpec { resolution: 1000, budget: 10_000, ..QuadSpec::default() };
        let err = trig_transform(IntegralKind::Cosine, |_| C64::new(1.0, 0.0), &[1.0, 0.5], &spec)
            .unwrap_err();
        assert_eq!(err, Error::QuadratureBudget { needed: 1_000_000, budget: 10_000 });
    }
}
