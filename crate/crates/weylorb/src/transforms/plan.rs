use std::str::FromStr;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::C64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Inverse,
}

impl FromStr for Direction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "forward" | "fwd" => Ok(Direction::Forward),
            "inverse" | "inv" | "backward" => Ok(Direction::Inverse),
            _ => Err(Error::InvalidParameter(format!("unknown direction {s:?}"))),
        }
    }
}

/// A discrete transform given by a kernel K (labels × points), point weights
/// w and label norms ν, with
///
/// ```text
/// Σ_k w_k K[r][k] conj(K[s][k]) = ν_r δ_rs.
/// ```
///
/// Analysis is a_r = ν_r⁻¹ Σ_k w_k f_k conj(K[r][k]); synthesis is
/// f_k = Σ_r a_r K[r][k].
#[derive(Debug, Clone)]
pub struct DiscretePlan {
    kernel: Vec<Vec<C64>>,
    weights: Vec<f64>,
    norms: Vec<f64>,
}

impl DiscretePlan {
    pub fn new(kernel: Vec<Vec<C64>>, weights: Vec<f64>, norms: Vec<f64>) -> Result<Self> {
        if norms.len() != kernel.len() {
            return Err(Error::LengthMismatch { expected: kernel.len(), got: norms.len() });
        }
        if let Some(row) = kernel.iter().find(|r| r.len() != weights.len()) {
            return Err(Error::LengthMismatch { expected: weights.len(), got: row.len() });
        }
        Ok(DiscretePlan { kernel, weights, norms })
    }

    pub fn num_labels(&self) -> usize {
        self.kernel.len()
    }

    pub fn num_points(&self) -> usize {
        self.weights.len()
    }

    pub fn kernel(&self) -> &[Vec<C64>] {
        &self.kernel
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn norms(&self) -> &[f64] {
        &self.norms
    }

    pub fn forward(&self, f: &[C64]) -> Result<Vec<C64>> {
        if f.len() != self.num_points() {
            return Err(Error::LengthMismatch { expected: self.num_points(), got: f.len() });
        }
        Ok(self
            .kernel
            .iter()
            .zip(&self.norms)
            .map(|(row, nu)| {
                let s: C64 = row
                    .iter()
                    .zip(f)
                    .zip(&self.weights)
                    .map(|((k, v), w)| v * k.conj() * *w)
                    .sum();
                s / *nu
            })
            .collect())
    }

    pub fn inverse(&self, a: &[C64]) -> Result<Vec<C64>> {
        if a.len() != self.num_labels() {
            return Err(Error::LengthMismatch { expected: self.num_labels(), got: a.len() });
        }
        let mut f = vec![C64::zero(); self.num_points()];
        for (row, c) in self.kernel.iter().zip(a) {
            for (fk, k) in f.iter_mut().zip(row) {
                *fk += c * k;
            }
        }
        Ok(f)
    }

    pub fn apply(&self, direction: Direction, v: &[C64]) -> Result<Vec<C64>> {
        match direction {
            Direction::Forward => self.forward(v),
            Direction::Inverse => self.inverse(v),
        }
    }

    /// G[r][s] = Σ_k w_k K[r][k] conj(K[s][k]).
    pub fn gram(&self) -> Vec<Vec<C64>> {
        self.kernel
            .iter()
            .map(|a| {
                self.kernel
                    .iter()
                    .map(|b| {
                        a.iter()
                            .zip(b)
                            .zip(&self.weights)
                            .map(|((x, y), w)| x * y.conj() * *w)
                            .sum()
                    })
                    .collect()
            })
            .collect()
    }

    /// max |G[r][s] − ν_r δ_rs|.
    pub fn gram_residual(&self) -> f64 {
        max_deviation(&self.gram(), &self.norms)
    }
}

pub(crate) fn max_deviation(gram: &[Vec<C64>], norms: &[f64]) -> f64 {
    let mut worst = 0.0f64;
    for (i, row) in gram.iter().enumerate() {
        for (j, g) in row.iter().enumerate() {
            let target = if i == j { norms[i] } else { 0.0 };
            worst = worst.max((g - target).norm());
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_point_fourier() {
        let k = vec![
            vec![C64::new(1.0, 0.0), C64::new(1.0, 0.0)],
            vec![C64::new(1.0, 0.0), C64::new(-1.0, 0.0)],
        ];
        let p = DiscretePlan::new(k, vec![1.0, 1.0], vec![2.0, 2.0]).unwrap();
        assert!(p.gram_residual() < 1e-15);
        let f = vec![C64::new(3.0, 1.0), C64::new(-2.0, 0.5)];
        let back = p.inverse(&p.forward(&f).unwrap()).unwrap();
        assert!(back.iter().zip(&f).all(|(a, b)| (a - b).norm() < 1e-15));
        assert!(matches!(p.forward(&f[..1]), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn shape_checked() {
        let k = vec![vec![C64::new(1.0, 0.0); 3]];
        assert!(DiscretePlan::new(k, vec![1.0; 2], vec![1.0]).is_err());
    }
}
