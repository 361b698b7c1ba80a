//! Symmetric and antisymmetric orbit functions: evaluation by definition and
//! by determinant closed forms, ρ-products, characters and dimensions.

pub mod identities;
pub mod rank2;

use std::f64::consts::PI;
use std::str::FromStr;

use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{check_len, Error, Result};
use crate::linalg::{det_c, permanent_c, C64, Q};
use crate::rootsys::{Family, RootSystem, Weight};
use crate::weyl::{orbit, signed_orbit};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    /// φ_λ: sum over the orbit O(λ).
    Symmetric,
    /// φ̂_λ = |W_λ| φ_λ: sum over the whole group.
    NormalizedSymmetric,
    /// ϕ_λ: signed sum over the group, λ strictly dominant.
    Antisymmetric,
}

impl FromStr for Kind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "sym" | "symmetric" => Ok(Kind::Symmetric),
            "symhat" | "normalized" | "sym-hat" => Ok(Kind::NormalizedSymmetric),
            "anti" | "antisymmetric" => Ok(Kind::Antisymmetric),
            _ => Err(Error::InvalidParameter(format!("unknown kind {s:?}"))),
        }
    }
}

/// Argument of an evaluation, tagged with its coordinate system.
#[derive(Debug, Clone, PartialEq)]
pub enum EvalPoint {
    /// θ-coordinates in the ω-basis.
    Omega(Vec<f64>),
    /// Orthogonal coordinates as produced by `point_to_orthogonal`.
    Orth(Vec<f64>),
}

impl EvalPoint {
    pub fn to_omega(&self, rs: &RootSystem) -> Result<Vec<f64>> {
        match self {
            EvalPoint::Omega(x) => {
                check_len(rs.rank(), x.len())?;
                Ok(x.clone())
            }
            EvalPoint::Orth(p) => rs.point_from_orthogonal(p),
        }
    }
}

fn cis(t: f64) -> C64 {
    let (s, c) = t.sin_cos();
    C64::new(c, s)
}

/// Precomputed orbit function: a list of frequency vectors v = Sμ with
/// coefficients, so that f(x) = Σ c·exp(2πi v·x).
#[derive(Debug, Clone)]
pub struct OrbitFunction {
    kind: Kind,
    terms: Vec<(Vec<f64>, f64)>,
    /// Lowest degree of the Taylor expansion at 0: the number of positive
    /// roots for the antisymmetric kind, 0 otherwise.
    min_degree: usize,
}

impl OrbitFunction {
    pub fn new(rs: &RootSystem, kind: Kind, lambda: &Weight) -> Result<Self> {
        check_len(rs.rank(), lambda.len())?;
        let freq = |mu: &Weight| rs.metric_apply_f64(&mu.to_f64());
        let terms = match kind {
            Kind::Antisymmetric => signed_orbit(rs, lambda)?
                .points
                .iter()
                .map(|(mu, s)| (freq(mu), *s as f64))
                .collect(),
            Kind::Symmetric | Kind::NormalizedSymmetric => {
                let pts = orbit(rs, lambda)?;
                let c = if kind == Kind::Symmetric {
                    1.0
                } else {
                    (rs.weyl_order() / pts.len() as u64) as f64
                };
                pts.iter().map(|mu| (freq(mu), c)).collect()
            }
        };
        Ok(OrbitFunction { kind, terms, min_degree: min_degree(rs, kind) })
    }

    /// Orbit function with a real label, summed over the whole group. For
    /// `Symmetric` the sum is divided by the numerically detected stabilizer
    /// order; `Antisymmetric` does not check strict dominance.
    pub fn from_real(rs: &RootSystem, kind: Kind, lambda: &[f64]) -> Result<Self> {
        check_len(rs.rank(), lambda.len())?;
        let g = rs.weyl_group()?;
        let imgs: Vec<(Vec<f64>, i8)> = g
            .elements()
            .iter()
            .map(|w| (w.act_f64(lambda), w.det()))
            .collect();
        let stab = imgs
            .iter()
            .filter(|(v, _)| v.iter().zip(lambda).all(|(a, b)| (a - b).abs() < 1e-9))
            .count() as f64;
        let terms = imgs
            .into_iter()
            .map(|(v, s)| {
                let c = match kind {
                    Kind::Antisymmetric => s as f64,
                    Kind::NormalizedSymmetric => 1.0,
                    Kind::Symmetric => 1.0 / stab,
                };
                (rs.metric_apply_f64(&v), c)
            })
            .collect();
        Ok(OrbitFunction { kind, terms, min_degree: min_degree(rs, kind) })
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn phases(&self, x: &[f64]) -> Vec<f64> {
        self.terms
            .iter()
            .map(|(v, _)| v.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Evaluate at x in ω-coordinates.
    ///
    /// Near the origin the antisymmetric sum cancels to O(|x|^r); there the
    /// Taylor series Σ_{k≥r} (2πi)^k/k! Σ_w det(w)⟨wλ,x⟩^k is summed instead,
    /// using that the terms below degree r vanish identically.
    pub fn eval(&self, x: &[f64]) -> C64 {
        let phases = self.phases(x);
        let reach = phases.iter().fold(0.0f64, |m, t| m.max(t.abs())) * 2.0 * PI;
        if self.min_degree > 0 && reach < 1.0 {
            return self.series(&phases, 1.0);
        }
        let mut acc = C64::zero();
        for ((_, c), t) in self.terms.iter().zip(&phases) {
            acc += cis(2.0 * PI * t) * *c;
        }
        acc
    }

    /// f(x)/s^r from the Taylor series, with x = s·x̂ and `phases` the
    /// values ⟨wλ, x⟩. Requires 2π·max|phase| < 1 for fast convergence.
    fn series(&self, phases: &[f64], s: f64) -> C64 {
        let r = self.min_degree;
        if s == 0.0 {
            return C64::zero();
        }
        let t: Vec<f64> = phases.iter().map(|p| p / s).collect();
        let tmax = t.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        if tmax == 0.0 {
            return C64::zero();
        }
        let weight: f64 = self.terms.iter().map(|(_, c)| c.abs()).sum();
        let mut pw: Vec<f64> = t.iter().map(|v| v.powi(r as i32)).collect();
        let step = C64::new(0.0, 2.0 * PI);
        let mut coef = step.powi(r as i32) / (1..=r).map(|k| k as f64).product::<f64>();
        let mut bound = tmax.powi(r as i32);
        let mut acc = C64::zero();
        for k in r..r + 80 {
            let sk: f64 = self.terms.iter().zip(&pw).map(|((_, c), p)| c * p).sum();
            acc += coef * sk;
            if k > r && coef.norm() * weight * bound < 1e-18 * acc.norm() {
                break;
            }
            for (p, v) in pw.iter_mut().zip(&t) {
                *p *= v;
            }
            bound *= tmax;
            coef *= step * s / (k + 1) as f64;
        }
        acc
    }

    /// f(x)/|x|_∞^r for the antisymmetric kind near the origin, where f(x)
    /// itself underflows relative to rounding. `None` away from the origin.
    pub fn eval_rescaled(&self, x: &[f64]) -> Option<C64> {
        let s = x.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let phases = self.phases(x);
        let reach = phases.iter().fold(0.0f64, |m, t| m.max(t.abs())) * 2.0 * PI;
        (self.min_degree > 0 && s > 0.0 && reach < 1.0).then(|| self.series(&phases, s))
    }
}

fn min_degree(rs: &RootSystem, kind: Kind) -> usize {
    if kind == Kind::Antisymmetric {
        rs.positive_roots().len()
    } else {
        0
    }
}

/// Evaluate an orbit function by its defining sum.
pub fn eval(rs: &RootSystem, kind: Kind, lambda: &Weight, x: &EvalPoint) -> Result<C64> {
    let x = x.to_omega(rs)?;
    Ok(OrbitFunction::new(rs, kind, lambda)?.eval(&x))
}

/// Evaluate through the determinant and permanent closed forms. `m` is the
/// label and `x` the point, both in orthogonal coordinates.
///
/// For A_n the determinant is taken on all n+1 coordinates; a constant shift
/// r of `m` multiplies the value by exp(2πi r Σx).
pub fn eval_closed_form(rs: &RootSystem, kind: Kind, m: &[f64], x: &[f64]) -> Result<C64> {
    let d = rs.orth_dim();
    if !rs.family().is_classical() {
        return Err(Error::Unsupported { op: "closed form", diagram: rs.id().to_string() });
    }
    check_len(d, m.len())?;
    check_len(d, x.len())?;
    let mat = |f: &dyn Fn(f64) -> C64| -> Vec<Vec<C64>> {
        (0..d)
            .map(|i| (0..d).map(|j| f(2.0 * PI * m[i] * x[j])).collect())
            .collect()
    };
    let sin = |t: f64| C64::new(t.sin(), 0.0);
    let cos = |t: f64| C64::new(t.cos(), 0.0);
    let n = d as i32;
    let two_i_n = Complex64::new(0.0, 2.0).powi(n);
    let two_n = 2f64.powi(n);
    let anti = kind == Kind::Antisymmetric;
    let full = match rs.family() {
        Family::A => {
            let e = mat(&cis);
            if anti {
                det_c(e)
            } else {
                permanent_c(&e)
            }
        }
        Family::B | Family::C => {
            if anti {
                two_i_n * det_c(mat(&sin))
            } else {
                permanent_c(&mat(&cos)) * two_n
            }
        }
        Family::D => {
            if anti {
                det_c(mat(&cos)) * (two_n / 2.0) + two_i_n * det_c(mat(&sin)) * 0.5
            } else {
                permanent_c(&mat(&cos)) * (two_n / 2.0) + two_i_n * permanent_c(&mat(&sin)) * 0.5
            }
        }
        _ => unreachable!(),
    };
    if kind == Kind::Symmetric {
        let omega = rs.from_orthogonal(&crate::rootsys::OrthPoint::new(m.to_vec()))?;
        let g = rs.weyl_group()?;
        let stab = g
            .elements()
            .iter()
            .filter(|w| w.act_f64(&omega).iter().zip(&omega).all(|(a, b)| (a - b).abs() < 1e-9))
            .count();
        Ok(full / stab as f64)
    } else {
        Ok(full)
    }
}

/// Product forms over positive roots:
/// `sin_product` = (2i)^r Π sin π⟨α,x⟩ = ϕ_ρ(x), and
/// `cos_product` = 2^r Π cos π⟨α,x⟩ = ϕ_{2ρ}(x)/ϕ_ρ(x).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RhoProducts {
    /// Equals ϕ_ρ.
    pub sin_product: C64,
    /// Equals the ρ character ϕ_{2ρ}/ϕ_ρ, not the symmetric ρ sum.
    pub cos_product: C64,
}

fn rho_from_angles(angles: &[f64]) -> RhoProducts {
    let r = angles.len() as i32;
    let s: f64 = angles.iter().map(|t| (PI * t).sin()).product();
    let c: f64 = angles.iter().map(|t| (PI * t).cos()).product();
    RhoProducts {
        sin_product: Complex64::new(0.0, 2.0).powi(r) * s,
        cos_product: C64::new(2f64.powi(r) * c, 0.0),
    }
}

/// ρ-products at x in ω-coordinates, over the generated positive roots.
pub fn rho_products(rs: &RootSystem, x: &[f64]) -> Result<RhoProducts> {
    check_len(rs.rank(), x.len())?;
    let angles: Vec<f64> = rs.positive_roots().iter().map(|a| rs.pair_root_f64(x, a)).collect();
    Ok(rho_from_angles(&angles))
}

/// ρ-products written directly in orthogonal coordinates, family by family.
pub fn rho_products_orth(rs: &RootSystem, x: &[f64]) -> Result<RhoProducts> {
    check_len(rs.orth_dim(), x.len())?;
    let d = x.len();
    let mut angles = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            angles.push(x[i] - x[j]);
            if rs.family() != Family::A {
                angles.push(x[i] + x[j]);
            }
        }
    }
    match rs.family() {
        Family::A | Family::D => {}
        Family::B => angles.extend(x.iter().copied()),
        Family::C => angles.extend(x.iter().map(|v| 2.0 * v)),
        _ => return Err(Error::Unsupported { op: "orthogonal products", diagram: rs.id().to_string() }),
    }
    Ok(rho_from_angles(&angles))
}

pub const CHARACTER_THRESHOLD: f64 = 1e-12;

/// χ_λ(x) = ϕ_{λ+ρ}(x)/ϕ_ρ(x).
pub fn character(rs: &RootSystem, lambda: &Weight, x: &[f64]) -> Result<C64> {
    character_with_threshold(rs, lambda, x, CHARACTER_THRESHOLD)
}

pub fn character_with_threshold(rs: &RootSystem, lambda: &Weight, x: &[f64], threshold: f64) -> Result<C64> {
    check_len(rs.rank(), lambda.len())?;
    check_len(rs.rank(), x.len())?;
    if !lambda.is_dominant() || !lambda.is_integral() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let rho = rs.rho();
    let den_f = OrbitFunction::new(rs, Kind::Antisymmetric, &rho)?;
    let num_f = OrbitFunction::new(rs, Kind::Antisymmetric, &(lambda + &rho))?;
    if let (Some(den), Some(num)) = (den_f.eval_rescaled(x), num_f.eval_rescaled(x)) {
        if den.norm() < threshold {
            return Err(Error::NearSingular { value: den.norm(), threshold });
        }
        return Ok(num / den);
    }
    let den = den_f.eval(x);
    if den.norm() < threshold {
        return Err(Error::NearSingular { value: den.norm(), threshold });
    }
    Ok(num_f.eval(x) / den)
}

/// Weyl dimension Π_{α>0} ⟨λ+ρ,α⟩/⟨ρ,α⟩, exact.
pub fn dimension(rs: &RootSystem, lambda: &Weight) -> Result<u64> {
    check_len(rs.rank(), lambda.len())?;
    if !lambda.is_dominant() || !lambda.is_integral() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let rho = rs.rho();
    let shifted = lambda + &rho;
    let mut prod = Q::one();
    for a in rs.positive_roots() {
        prod *= rs.pair_root(&shifted, a) / rs.pair_root(&rho, a);
    }
    if !prod.is_integer() {
        return Err(Error::Internal(format!("non-integral dimension {prod}")));
    }
    prod.to_integer()
        .to_u64()
        .ok_or_else(|| Error::Internal(format!("dimension {prod} out of range")))
}
