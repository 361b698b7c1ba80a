//! Shift operators built from T_y f(x) = f(x + y) and the Weyl group, and
//! the vanishing of W-averaged gradients of ϕ_λ.
//!
//! With (wT_y f)(x) = f(wx + y):
//! - D_y ϕ_λ = Σ_w det(w) ϕ_λ(w· + y) = φ_λ(y) ϕ_λ,
//! - D̂_y ϕ_λ = Σ_w ϕ_λ(w· + y) = ϕ_λ(y) φ̂_λ,
//! - D_y φ_λ = ϕ_λ(y) ϕ_λ.
//!
//! The last two are sometimes stated with the symmetric and antisymmetric
//! factors on x exchanged; [`ShiftCheck`] reports that reading as well.

use std::str::FromStr;

use crate::error::{check_len, Error, Result};
use crate::linalg::C64;
use crate::orbitfn::{Kind, OrbitFunction};
use crate::rootsys::{RootSystem, Weight};

use super::fd::FdStencil;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShiftVariant {
    /// D_y applied to ϕ_λ.
    Anti,
    /// D̂_y applied to ϕ_λ.
    Hat,
    /// D_y applied to φ_λ.
    OnSymmetric,
}

impl FromStr for ShiftVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "d" | "dy" | "anti" => Ok(ShiftVariant::Anti),
            "hat" | "dhat" | "dyhat" => Ok(ShiftVariant::Hat),
            "sym" | "onsym" | "dysym" | "onsymmetric" => Ok(ShiftVariant::OnSymmetric),
            _ => Err(Error::InvalidParameter(format!("unknown shift variant {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShiftCheck {
    /// Direct |W|-term evaluation of the operator at x.
    pub lhs: C64,
    /// Eigenrelation right-hand side as stated in the module docs.
    pub rhs: C64,
    /// Right-hand side with the x-factor of the other symmetry type.
    pub swapped_rhs: C64,
    pub rel_err: f64,
    pub swapped_rel_err: f64,
}

fn rel(lhs: C64, rhs: C64) -> f64 {
    (lhs - rhs).norm() / rhs.norm().max(1.0)
}

pub fn shift_operator_check(
    rs: &RootSystem,
    lambda: &Weight,
    x: &[f64],
    y: &[f64],
    variant: ShiftVariant,
) -> Result<ShiftCheck> {
    check_len(rs.rank(), x.len())?;
    check_len(rs.rank(), y.len())?;
    if !lambda.is_strictly_dominant() {
        return Err(Error::NotStrictlyDominant(lambda.to_string()));
    }
    let anti = OrbitFunction::new(rs, Kind::Antisymmetric, lambda)?;
    let sym = OrbitFunction::new(rs, Kind::Symmetric, lambda)?;
    let group = rs.weyl_group()?;
    let target = match variant {
        ShiftVariant::OnSymmetric => &sym,
        _ => &anti,
    };
    let mut lhs = C64::new(0.0, 0.0);
    for w in group.elements() {
        let z: Vec<f64> = w.act_f64(x).iter().zip(y).map(|(a, b)| a + b).collect();
        let v = target.eval(&z);
        lhs += match variant {
            ShiftVariant::Hat => v,
            _ => v * f64::from(w.det()),
        };
    }
    let (ax, sx, ay, sy) = (anti.eval(x), sym.eval(x), anti.eval(y), sym.eval(y));
    let (rhs, swapped_rhs) = match variant {
        ShiftVariant::Anti => (sy * ax, sy * ax),
        ShiftVariant::Hat => (ay * sx, ay * ax),
        ShiftVariant::OnSymmetric => (ay * ax, ay * sx),
    };
    Ok(ShiftCheck {
        lhs,
        rhs,
        swapped_rhs,
        rel_err: rel(lhs, rhs),
        swapped_rel_err: rel(lhs, swapped_rhs),
    })
}

/// max_i |Σ_w (∂_i ϕ_λ)(wx)| in orthogonal coordinates, relative to the
/// largest single term. Derivatives are Richardson-extrapolated central
/// differences with steps h and h/2.
pub fn derivative_identity_residual(rs: &RootSystem, lambda: &Weight, x_omega: &[f64], h: f64) -> Result<f64> {
    check_len(rs.rank(), x_omega.len())?;
    if !lambda.is_strictly_dominant() {
        return Err(Error::NotStrictlyDominant(lambda.to_string()));
    }
    let phi = OrbitFunction::new(rs, Kind::Antisymmetric, lambda)?;
    let coarse = FdStencil::new(h)?;
    let fine = FdStencil::new(h / 2.0)?;
    let f = |y: &[f64]| phi.eval(&rs.point_from_orthogonal(y).expect("length checked"));
    let d = rs.orth_dim();
    let mut sums = vec![C64::new(0.0, 0.0); d];
    let mut largest = 0.0f64;
    for w in rs.weyl_group()?.elements() {
        let p = rs.point_to_orthogonal(&w.act_f64(x_omega))?;
        for (i, s) in sums.iter_mut().enumerate() {
            let g = (fine.first(&f, &p, i) * 4.0 - coarse.first(&f, &p, i)) / 3.0;
            largest = largest.max(g.norm());
            *s += g;
        }
    }
    let worst = sums.iter().map(|s| s.norm()).fold(0.0, f64::max);
    Ok(worst / largest.max(1.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(label: &str) -> RootSystem {
        RootSystem::from_label(label).unwrap()
    }

    const X: [f64; 3] = [0.131, 0.217, 0.093];
    const Y: [f64; 3] = [0.402, -0.155, 0.311];

    #[test]
    fn eigenrelations_hold() {
        for label in ["A2", "C2", "G2", "B3", "A3"] {
            let r = rs(label);
            let n = r.rank();
            let lam = Weight::from_ints(&(1..=n as i64).collect::<Vec<_>>());
            for v in [ShiftVariant::Anti, ShiftVariant::Hat, ShiftVariant::OnSymmetric] {
                let c = shift_operator_check(&r, &lam, &X[..n], &Y[..n], v).unwrap();
                assert!(c.rel_err < 1e-10, "{label} {v:?}: {}", c.rel_err);
            }
        }
    }

    #[test]
    fn swapped_factors_fail_off_the_anti_variant() {
        let r = rs("A2");
        let lam = Weight::from_ints(&[2, 1]);
        let hat = shift_operator_check(&r, &lam, &X[..2], &Y[..2], ShiftVariant::Hat).unwrap();
        assert!(hat.swapped_rel_err > 1e-3);
        let sym = shift_operator_check(&r, &lam, &X[..2], &Y[..2], ShiftVariant::OnSymmetric).unwrap();
        assert!(sym.swapped_rel_err > 1e-3);
    }

    #[test]
    fn hat_at_zero_shift_vanishes() {
        let r = rs("C2");
        let c = shift_operator_check(&r, &Weight::from_ints(&[1, 2]), &X[..2], &[0.0, 0.0], ShiftVariant::Hat).unwrap();
        assert!(c.lhs.norm() < 1e-10 && c.rhs.norm() < 1e-12);
    }

    #[test]
    fn derivative_identity_by_rank() {
        for label in ["A2", "B2", "C3", "D4", "D5"] {
            let r = rs(label);
            let n = r.rank();
            let x: Vec<f64> = (0..n).map(|i| 0.05 + 0.03 * i as f64).collect();
            let lam = Weight::from_ints(&vec![1; n]);
            let res = derivative_identity_residual(&r, &lam, &x, 1e-3).unwrap();
            assert!(res < 1e-6, "{label}: {res}");
        }
        let a1 = rs("A1");
        let res = derivative_identity_residual(&a1, &Weight::from_ints(&[1]), &[0.2], 1e-3).unwrap();
        assert!(res > 0.1);
    }
}
