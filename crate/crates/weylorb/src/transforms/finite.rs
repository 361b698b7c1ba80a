//! Finite transform in antisymmetric orbit functions on the grid F_M.
//!
//! Samples are the interior points of F_M. Each one stands for its full
//! W-orbit on the torus (1/M)P^∨/Q^∨, which has |P^∨/Q^∨|·M^n points; the
//! scalar product is the torus sum divided by |P^∨/Q^∨|, so that
//!
//! ```text
//! ⟨ϕ_λ, ϕ_μ⟩ = (|W| / |P^∨/Q^∨|) Σ_{x ∈ F_M interior} ϕ_λ(x) conj ϕ_μ(x) = M^n |W| δ_λμ
//! ```
//!
//! for labels in the open alcove Σ t_i m_i^∨ < M, where m_i^∨ are the
//! highest-coroot coefficients.

use crate::error::{Error, Result};
use crate::linalg::C64;
use crate::orbitfn::{Kind, OrbitFunction};
use crate::rootsys::{RootSystem, Weight};

use super::grid::{bounded_tuples, grid_fm, GridPoint};
use super::plan::{max_deviation, DiscretePlan};

/// Relative tolerance of the Gram check, in units of M^n|W|.
pub const SEPARATION_TOL: f64 = 1e-9;

#[derive(Debug, Clone)]
pub struct TransformPlan {
    m: i64,
    points: Vec<GridPoint>,
    labels: Vec<Weight>,
    plan: DiscretePlan,
    gram: Vec<Vec<C64>>,
}

/// Strictly dominant labels t with Σ t_i m_i^∨ < M.
pub fn default_labels(rs: &RootSystem, m: i64) -> Vec<Weight> {
    interior_labels(&rs.dual_marks(), m)
}

/// Strictly dominant labels read off the interior of F_M itself, i.e. bounded
/// with the marks instead of the dual marks. Coincides with
/// [`default_labels`] for simply laced diagrams and for G_2.
pub fn grid_labels(rs: &RootSystem, m: i64) -> Vec<Weight> {
    interior_labels(rs.marks(), m)
}

fn interior_labels(coeffs: &[i64], m: i64) -> Vec<Weight> {
    bounded_tuples(coeffs, m)
        .into_iter()
        .filter(|p| p.is_interior())
        .map(|p| Weight::from_ints(&p.s))
        .collect()
}

impl TransformPlan {
    /// Plan on F_M with the default labels, Gram-verified.
    pub fn new(rs: &RootSystem, m: i64) -> Result<Self> {
        Self::with_labels(rs, m, default_labels(rs, m))
    }

    pub fn with_labels(rs: &RootSystem, m: i64, labels: Vec<Weight>) -> Result<Self> {
        let p = Self::unverified(rs, m, labels)?;
        p.verify()?;
        Ok(p)
    }

    /// Build without the separation check, for diagnostics.
    pub fn unverified(rs: &RootSystem, m: i64, labels: Vec<Weight>) -> Result<Self> {
        let grid = grid_fm(rs, m)?;
        let points: Vec<GridPoint> = grid.interior().cloned().collect();
        let xs: Vec<Vec<f64>> = points.iter().map(|p| p.omega_f64(rs, m)).collect();
        let mut kernel = Vec::with_capacity(labels.len());
        for l in &labels {
            if !l.is_integral() {
                return Err(Error::InvalidParameter(format!("label {l} is not integral")));
            }
            let f = OrbitFunction::new(rs, Kind::Antisymmetric, l)?;
            kernel.push(xs.iter().map(|x| f.eval(x)).collect());
        }
        let w = rs.weyl_order() as f64 / rs.lattice_index() as f64;
        let norm = (m as f64).powi(rs.rank() as i32) * rs.weyl_order() as f64;
        let plan = DiscretePlan::new(kernel, vec![w; points.len()], vec![norm; labels.len()])?;
        let gram = plan.gram();
        Ok(TransformPlan { m, points, labels, plan, gram })
    }

    /// Check the Gram matrix against M^n|W|·I; the first offending pair is
    /// reported.
    pub fn verify(&self) -> Result<()> {
        let norm = self.norm();
        let tol = SEPARATION_TOL * norm;
        for (i, row) in self.gram.iter().enumerate() {
            for (j, g) in row.iter().enumerate() {
                let target = if i == j { norm } else { 0.0 };
                if (g - target).norm() > tol {
                    return Err(Error::NonInvertiblePlan { i, j, value: g.norm() });
                }
            }
        }
        Ok(())
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    /// Interior sample points of F_M, in the order of the signal vector.
    pub fn points(&self) -> &[GridPoint] {
        &self.points
    }

    pub fn labels(&self) -> &[Weight] {
        &self.labels
    }

    /// Evaluation matrix ϕ_λ(x_j), labels × points.
    pub fn matrix(&self) -> &[Vec<C64>] {
        self.plan.kernel()
    }

    pub fn gram(&self) -> &[Vec<C64>] {
        &self.gram
    }

    /// M^n|W|.
    pub fn norm(&self) -> f64 {
        self.plan.norms().first().copied().unwrap_or(0.0)
    }

    pub fn gram_residual(&self) -> f64 {
        max_deviation(&self.gram, self.plan.norms())
    }

    pub fn max_offdiag(&self) -> f64 {
        let mut worst = 0.0f64;
        for (i, row) in self.gram.iter().enumerate() {
            for (j, g) in row.iter().enumerate() {
                if i != j {
                    worst = worst.max(g.norm());
                }
            }
        }
        worst
    }

    pub fn discrete_plan(&self) -> &DiscretePlan {
        &self.plan
    }

    /// a_λ = (M^n|W|)⁻¹ ⟨f, ϕ_λ⟩ from samples on the interior points.
    pub fn forward(&self, f: &[C64]) -> Result<Vec<C64>> {
        self.plan.forward(f)
    }

    /// f(x_j) = Σ a_λ ϕ_λ(x_j).
    pub fn inverse(&self, a: &[C64]) -> Result<Vec<C64>> {
        self.plan.inverse(a)
    }
}
