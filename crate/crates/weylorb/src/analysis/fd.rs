//! Central finite differences for complex functions of several variables.

use crate::error::{Error, Result};
use crate::linalg::C64;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FdStencil {
    h: f64,
}

impl FdStencil {
    pub fn new(h: f64) -> Result<Self> {
        if h > 0.0 && h.is_finite() {
            Ok(FdStencil { h })
        } else {
            Err(Error::InvalidParameter(format!("step must be positive, got {h}")))
        }
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    fn shifted(x: &[f64], moves: &[(usize, f64)]) -> Vec<f64> {
        let mut y = x.to_vec();
        for &(i, d) in moves {
            y[i] += d;
        }
        y
    }

    pub fn first(&self, f: &impl Fn(&[f64]) -> C64, x: &[f64], i: usize) -> C64 {
        let h = self.h;
        (f(&Self::shifted(x, &[(i, h)])) - f(&Self::shifted(x, &[(i, -h)]))) / (2.0 * h)
    }

    pub fn second(&self, f: &impl Fn(&[f64]) -> C64, x: &[f64], i: usize) -> C64 {
        let h = self.h;
        (f(&Self::shifted(x, &[(i, h)])) - f(x) * 2.0 + f(&Self::shifted(x, &[(i, -h)]))) / (h * h)
    }

    /// ∂_i∂_j; falls back to `second` when i = j.
    pub fn mixed(&self, f: &impl Fn(&[f64]) -> C64, x: &[f64], i: usize, j: usize) -> C64 {
        if i == j {
            return self.second(f, x, i);
        }
        let h = self.h;
        let g = |a: f64, b: f64| f(&Self::shifted(x, &[(i, a), (j, b)]));
        (g(h, h) - g(h, -h) - g(-h, h) + g(-h, -h)) / (4.0 * h * h)
    }

    /// ∂_i²∂_j² for i ≠ j, as the product of two second differences.
    pub fn second_second(&self, f: &impl Fn(&[f64]) -> C64, x: &[f64], i: usize, j: usize) -> C64 {
        let inner = |y: &[f64]| self.second(f, y, j);
        self.second(&inner, x, i)
    }

    /// Σ_ij c_ij ∂_i∂_j.
    pub fn operator(&self, f: &impl Fn(&[f64]) -> C64, x: &[f64], c: &[Vec<f64>]) -> C64 {
        let mut acc = C64::new(0.0, 0.0);
        for (i, row) in c.iter().enumerate() {
            for (j, &cij) in row.iter().enumerate() {
                if cij != 0.0 {
                    acc += self.mixed(f, x, i, j) * cij;
                }
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_derivatives() {
        let s = FdStencil::new(1e-3).unwrap();
        let f = |x: &[f64]| C64::new(x[0] * x[0] * x[1] * x[1] + x[0].powi(3), 0.0);
        let x = [0.7, -1.2];
        assert!((s.second(&f, &x, 0).re - (2.0 * 1.44 + 6.0 * 0.7)).abs() < 1e-6);
        assert!((s.mixed(&f, &x, 0, 1).re - 4.0 * 0.7 * -1.2).abs() < 1e-6);
        let coarse = FdStencil::new(1e-2).unwrap();
        assert!((coarse.second_second(&f, &x, 0, 1).re - 4.0).abs() < 1e-6);
        assert!((s.first(&f, &x, 1).re - 2.0 * 0.49 * -1.2).abs() < 1e-6);
        assert!(FdStencil::new(0.0).is_err());
    }
}
