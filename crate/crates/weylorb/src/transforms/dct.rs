//! One-dimensional discrete sine/cosine transforms and DCT/DST-1..4, all
//! described by a common [`Kernel1d`].

use std::f64::consts::PI;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linalg::{C64, Q};

use super::plan::DiscretePlan;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind1d {
    /// 2i sin(πmk/M), m, k = 1..M−1.
    Sine,
    /// 2 cos(πmk/M), m, k = 0..M.
    Cosine,
    Dct1,
    Dct2,
    Dct3,
    Dct4,
    Dst1,
    Dst2,
    Dst3,
    Dst4,
}

impl FromStr for Kind1d {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let k = s.to_ascii_lowercase().replace(['-', '_'], "");
        Ok(match k.as_str() {
            "sine" => Kind1d::Sine,
            "cosine" => Kind1d::Cosine,
            "dct1" => Kind1d::Dct1,
            "dct2" => Kind1d::Dct2,
            "dct3" => Kind1d::Dct3,
            "dct4" => Kind1d::Dct4,
            "dst1" => Kind1d::Dst1,
            "dst2" => Kind1d::Dst2,
            "dst3" => Kind1d::Dst3,
            "dst4" => Kind1d::Dst4,
            _ => return Err(Error::InvalidParameter(format!("unknown 1-D transform {s:?}"))),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Trig {
    Sin,
    Cos,
    /// exp(2πi l p/N).
    Exp,
}

/// A one-dimensional kernel g(l, p) with label and point index sets,
/// point weights c_p and label factors h_l such that
/// Σ_p c_p g(l,p) conj g(l',p) = base·h_l δ_ll'.
#[derive(Debug, Clone)]
pub struct Kernel1d {
    pub(crate) labels: Vec<i64>,
    pub(crate) points: Vec<i64>,
    pub(crate) label_shift: bool,
    pub(crate) point_shift: bool,
    pub(crate) size: i64,
    pub(crate) trig: Trig,
    pub(crate) c: Vec<f64>,
    pub(crate) h: Vec<f64>,
    pub(crate) base: f64,
}

fn ends(range: &[i64], lo: i64, hi: i64, at: f64) -> Vec<f64> {
    range.iter().map(|&v| if v == lo || v == hi { at } else { 1.0 }).collect()
}

impl Kernel1d {
    pub fn new(kind: Kind1d, size: i64) -> Result<Self> {
        let min = match kind {
            Kind1d::Sine | Kind1d::Dst1 => 2,
            _ => 1,
        };
        if size < min {
            return Err(Error::InvalidParameter(format!("size {size} too small for {kind:?}")));
        }
        let n = size;
        let r = |a: i64, b: i64| (a..=b).collect::<Vec<i64>>();
        let half = n as f64 / 2.0;
        let ones = |v: &Vec<i64>| vec![1.0; v.len()];
        let (labels, points, ls, ps, trig) = match kind {
            Kind1d::Sine | Kind1d::Dst1 => (r(1, n - 1), r(1, n - 1), false, false, Trig::Sin),
            Kind1d::Cosine | Kind1d::Dct1 => (r(0, n), r(0, n), false, false, Trig::Cos),
            Kind1d::Dct2 => (r(0, n - 1), r(0, n - 1), true, false, Trig::Cos),
            Kind1d::Dct3 => (r(0, n - 1), r(0, n - 1), false, true, Trig::Cos),
            Kind1d::Dct4 => (r(0, n - 1), r(0, n - 1), true, true, Trig::Cos),
            Kind1d::Dst2 => (r(0, n - 1), r(1, n), true, false, Trig::Sin),
            Kind1d::Dst3 => (r(1, n), r(0, n - 1), false, true, Trig::Sin),
            Kind1d::Dst4 => (r(0, n - 1), r(0, n - 1), true, true, Trig::Sin),
        };
        let (c, h) = match kind {
            Kind1d::Cosine | Kind1d::Dct1 => (ends(&points, 0, n, 0.5), ends(&labels, 0, n, 2.0)),
            Kind1d::Dct2 => (ends(&points, 0, 0, 0.5), ones(&labels)),
            Kind1d::Dct3 => (ones(&points), ends(&labels, 0, 0, 2.0)),
            Kind1d::Dst2 => (ends(&points, n, n, 0.5), ones(&labels)),
            Kind1d::Dst3 => (ones(&points), ends(&labels, n, n, 2.0)),
            _ => (ones(&points), ones(&labels)),
        };
        Ok(Kernel1d {
            labels,
            points,
            label_shift: ls,
            point_shift: ps,
            size: n,
            trig,
            c,
            h,
            base: half,
        })
    }

    /// exp(2πi l p/N) with l, p = 1..N.
    pub fn exponential(size: i64) -> Result<Self> {
        if size < 1 {
            return Err(Error::InvalidParameter(format!("size {size} too small")));
        }
        let v: Vec<i64> = (1..=size).collect();
        Ok(Kernel1d {
            labels: v.clone(),
            points: v.clone(),
            label_shift: false,
            point_shift: false,
            size,
            trig: Trig::Exp,
            c: vec![1.0; v.len()],
            h: vec![1.0; v.len()],
            base: size as f64,
        })
    }

    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    pub fn points(&self) -> &[i64] {
        &self.points
    }

    pub fn size(&self) -> i64 {
        self.size
    }

    fn shifted(v: i64, shift: bool) -> f64 {
        v as f64 + if shift { 0.5 } else { 0.0 }
    }

    /// Point coordinate (p or p+½)/N.
    pub fn point_coord(&self, p: i64) -> Q {
        if self.point_shift {
            Q::new(2 * p + 1, 2 * self.size)
        } else {
            Q::new(p, self.size)
        }
    }

    pub fn g(&self, l: i64, p: i64) -> C64 {
        let a = Self::shifted(l, self.label_shift) * Self::shifted(p, self.point_shift) / self.size as f64;
        match self.trig {
            Trig::Sin => C64::new((PI * a).sin(), 0.0),
            Trig::Cos => C64::new((PI * a).cos(), 0.0),
            Trig::Exp => C64::from_polar(1.0, 2.0 * PI * a),
        }
    }

    pub fn c_of(&self, p: i64) -> f64 {
        self.points.iter().position(|&v| v == p).map_or(0.0, |i| self.c[i])
    }

    pub fn h_of(&self, l: i64) -> f64 {
        self.labels.iter().position(|&v| v == l).map_or(0.0, |i| self.h[i])
    }

    pub fn base(&self) -> f64 {
        self.base
    }
}

/// Prefactor of the kind: 2i for the sine transform, 2 for the cosine
/// transform, 1 for the DCT/DST family.
pub(crate) fn prefactor(kind: Kind1d) -> C64 {
    match kind {
        Kind1d::Sine => C64::new(0.0, 2.0),
        Kind1d::Cosine => C64::new(2.0, 0.0),
        _ => C64::new(1.0, 0.0),
    }
}

/// Plan of a one-dimensional transform. Labels and points are in the order
/// of [`Kernel1d::labels`] and [`Kernel1d::points`].
pub fn dst_dct_1d(kind: Kind1d, size: i64) -> Result<DiscretePlan> {
    let k = Kernel1d::new(kind, size)?;
    let pref = prefactor(kind);
    let kernel = k
        .labels
        .iter()
        .map(|&l| k.points.iter().map(|&p| pref * k.g(l, p)).collect())
        .collect();
    let norms = k.h.iter().map(|h| pref.norm_sqr() * k.base * h).collect();
    DiscretePlan::new(kernel, k.c.clone(), norms)
}
