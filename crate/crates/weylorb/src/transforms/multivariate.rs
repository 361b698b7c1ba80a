//! Antisymmetric and symmetric multivariate discrete transforms built from a
//! one-dimensional kernel g: the antisymmetric kernel is
//! πⁿ |S_n|^{-1/2} det(g(l_i, p_j)) on strictly decreasing tuples, the
//! symmetric one πⁿ |S_n|^{-1/2} per(g(l_i, p_j)) on weakly decreasing
//! tuples, with π the per-variable prefactor of the kind.
//!
//! Weights and norms, with c, h, base taken from the 1-D kernel:
//!
//! ```text
//! anti: w_p = |S_n| Π c(p_j),           ν_l = |π|²ⁿ baseⁿ Π h(l_i)
//! sym:  w_p = |S_n| Π c(p_j) / |S_p|,   ν_l = |π|²ⁿ baseⁿ Π h(l_i) |S_l|
//! ```
//!
//! where |S_t| is the order of the stabilizer of t under permutations.

use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::linalg::{det_c, factorial, multiplicity_factor, permanent_c, C64, Q};

use super::dct::{prefactor, Kernel1d, Kind1d};
use super::plan::DiscretePlan;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MultiKind {
    AntiExp,
    SymExp,
    AntiSine,
    SymCosine,
    /// AMDCT-1..4.
    Amdct(u8),
    /// SMDCT-1..4.
    Smdct(u8),
}

impl MultiKind {
    pub fn is_symmetric(self) -> bool {
        matches!(self, MultiKind::SymExp | MultiKind::SymCosine | MultiKind::Smdct(_))
    }

    fn kernel(self, size: i64) -> Result<(Kernel1d, C64)> {
        let dct = |k: u8| match k {
            1 => Ok(Kind1d::Dct1),
            2 => Ok(Kind1d::Dct2),
            3 => Ok(Kind1d::Dct3),
            4 => Ok(Kind1d::Dct4),
            _ => Err(Error::InvalidParameter(format!("no DCT-{k}"))),
        };
        Ok(match self {
            MultiKind::AntiExp | MultiKind::SymExp => {
                (Kernel1d::exponential(size)?, C64::new((size as f64).powf(-0.5), 0.0))
            }
            MultiKind::AntiSine => (Kernel1d::new(Kind1d::Sine, size)?, prefactor(Kind1d::Sine)),
            MultiKind::SymCosine => {
                (Kernel1d::new(Kind1d::Cosine, size)?, prefactor(Kind1d::Cosine))
            }
            MultiKind::Amdct(k) | MultiKind::Smdct(k) => {
                (Kernel1d::new(dct(k)?, size)?, C64::new(1.0, 0.0))
            }
        })
    }
}

impl FromStr for MultiKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let k = s.to_ascii_lowercase().replace(['-', '_'], "");
        let digit = |p: &str| -> Option<u8> {
            k.strip_prefix(p).and_then(|d| d.parse().ok()).filter(|d| (1..=4).contains(d))
        };
        Ok(match k.as_str() {
            "antiexp" => MultiKind::AntiExp,
            "symexp" => MultiKind::SymExp,
            "antisine" => MultiKind::AntiSine,
            "symcosine" => MultiKind::SymCosine,
            _ => {
                if let Some(d) = digit("amdct") {
                    MultiKind::Amdct(d)
                } else if let Some(d) = digit("smdct") {
                    MultiKind::Smdct(d)
                } else {
                    return Err(Error::InvalidParameter(format!("unknown transform kind {s:?}")));
                }
            }
        })
    }
}

/// A multivariate plan with its label and point tuples.
#[derive(Debug, Clone)]
pub struct MultiPlan {
    kind: MultiKind,
    n: usize,
    kernel1d: Kernel1d,
    labels: Vec<Vec<i64>>,
    points: Vec<Vec<i64>>,
    plan: DiscretePlan,
}

fn decreasing_tuples(values: &[i64], n: usize, strict: bool) -> Vec<Vec<i64>> {
    let mut v = values.to_vec();
    v.sort_unstable_by(|a, b| b.cmp(a));
    if strict {
        v.into_iter().combinations(n).collect()
    } else {
        v.into_iter().combinations_with_replacement(n).collect()
    }
}

/// Build the plan of `kind` in n variables with 1-D size N (or M).
pub fn multivariate_discrete(kind: MultiKind, n: usize, size: i64) -> Result<MultiPlan> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    let (k, pref) = kind.kernel(size)?;
    let sym = kind.is_symmetric();
    let labels = decreasing_tuples(&k.labels, n, !sym);
    let points = decreasing_tuples(&k.points, n, !sym);
    let sn = factorial(n as u64) as f64;
    let factor = pref.powu(n as u32) / sn.sqrt();
    let mut kernel = Vec::with_capacity(labels.len());
    for l in &labels {
        let row = points
            .iter()
            .map(|p| {
                let a: Vec<Vec<C64>> =
                    l.iter().map(|&li| p.iter().map(|&pj| k.g(li, pj)).collect()).collect();
                factor * if sym { permanent_c(&a) } else { det_c(a) }
            })
            .collect();
        kernel.push(row);
    }
    let weights = points
        .iter()
        .map(|p| {
            let c: f64 = sn * p.iter().map(|&v| k.c_of(v)).product::<f64>();
            if sym {
                c / multiplicity_factor(p) as f64
            } else {
                c
            }
        })
        .collect();
    let scale = pref.norm_sqr().powi(n as i32) * k.base().powi(n as i32);
    let norms = labels
        .iter()
        .map(|l| {
            let h: f64 = l.iter().map(|&v| k.h_of(v)).product();
            let stab = if sym { multiplicity_factor(l) as f64 } else { 1.0 };
            scale * h * stab
        })
        .collect();
    let plan = DiscretePlan::new(kernel, weights, norms)?;
    Ok(MultiPlan { kind, n, kernel1d: k, labels, points, plan })
}

impl MultiPlan {
    pub fn kind(&self) -> MultiKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> i64 {
        self.kernel1d.size()
    }

    pub fn labels(&self) -> &[Vec<i64>] {
        &self.labels
    }

    pub fn points(&self) -> &[Vec<i64>] {
        &self.points
    }

    pub fn plan(&self) -> &DiscretePlan {
        &self.plan
    }

    /// Exact coordinates of a point tuple, e.g. (p_i + ½)/N.
    pub fn point_coords(&self, p: &[i64]) -> Vec<Q> {
        p.iter().map(|&v| self.kernel1d.point_coord(v)).collect()
    }

    /// "s1/N,s2/N,…" key of a point tuple.
    pub fn point_key(&self, p: &[i64]) -> String {
        self.point_coords(p).iter().map(|q| q.to_string()).join(",")
    }

    fn check_monotone(&self, t: &[i64]) -> Result<()> {
        if t.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: t.len() });
        }
        let sym = self.kind.is_symmetric();
        let ok = t.windows(2).all(|w| if sym { w[0] >= w[1] } else { w[0] > w[1] });
        if ok {
            Ok(())
        } else {
            Err(Error::NonMonotone(format!("{t:?}")))
        }
    }

    pub fn label_position(&self, l: &[i64]) -> Result<usize> {
        self.check_monotone(l)?;
        self.labels
            .iter()
            .position(|v| v == l)
            .ok_or_else(|| Error::InvalidParameter(format!("label {l:?} outside the label set")))
    }

    pub fn point_position(&self, p: &[i64]) -> Result<usize> {
        self.check_monotone(p)?;
        self.points
            .iter()
            .position(|v| v == p)
            .ok_or_else(|| Error::InvalidParameter(format!("point {p:?} outside the grid")))
    }

    /// Arrange (point tuple, value) pairs into a signal vector; every grid
    /// point must be given exactly once.
    pub fn signal_from_pairs(&self, pairs: &[(Vec<i64>, C64)]) -> Result<Vec<C64>> {
        self.gather(pairs, |t| self.point_position(t), self.points.len())
    }

    /// Arrange (label tuple, coefficient) pairs into a coefficient vector.
    pub fn coeffs_from_pairs(&self, pairs: &[(Vec<i64>, C64)]) -> Result<Vec<C64>> {
        self.gather(pairs, |t| self.label_position(t), self.labels.len())
    }

    fn gather(
        &self,
        pairs: &[(Vec<i64>, C64)],
        pos: impl Fn(&[i64]) -> Result<usize>,
        len: usize,
    ) -> Result<Vec<C64>> {
        if pairs.len() != len {
            return Err(Error::LengthMismatch { expected: len, got: pairs.len() });
        }
        let mut out = vec![None; len];
        for (t, v) in pairs {
            let i = pos(t)?;
            if out[i].replace(*v).is_some() {
                return Err(Error::InvalidParameter(format!("tuple {t:?} given twice")));
            }
        }
        Ok(out.into_iter().map(|v| v.unwrap_or_default()).collect())
    }

    pub fn forward(&self, f: &[C64]) -> Result<Vec<C64>> {
        self.plan.forward(f)
    }

    pub fn inverse(&self, a: &[C64]) -> Result<Vec<C64>> {
        self.plan.inverse(a)
    }
}
