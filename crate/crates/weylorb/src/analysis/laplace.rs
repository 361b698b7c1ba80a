//! Laplace and σ_k eigenproperties of antisymmetric orbit functions, and the
//! second-order operator written in ω-coordinates.

use std::f64::consts::PI;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::linalg::{C64, Q};
use crate::orbitfn::{Kind, OrbitFunction};
use crate::rootsys::{Family, RootSystem, Weight};
use crate::weyl::{in_fundamental_domain_f64, Region};

use super::fd::FdStencil;

/// Outcome of a finite-difference eigenvalue check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenCheck {
    /// Finite-difference value of the operator applied to ϕ_λ at x.
    pub fd: C64,
    pub eigenvalue: f64,
    pub phi: C64,
    /// |fd − eigenvalue·ϕ| / |eigenvalue·ϕ|.
    pub rel_err: f64,
}

impl EigenCheck {
    fn new(fd: C64, eigenvalue: f64, phi: C64) -> Self {
        let want = phi * eigenvalue;
        EigenCheck {
            fd,
            eigenvalue,
            phi,
            rel_err: (fd - want).norm() / want.norm(),
        }
    }
}

fn antisymmetric(rs: &RootSystem, lambda: &Weight) -> Result<OrbitFunction> {
    if !lambda.is_strictly_dominant() {
        return Err(Error::NotStrictlyDominant(lambda.to_string()));
    }
    OrbitFunction::new(rs, Kind::Antisymmetric, lambda)
}

fn require_classical(rs: &RootSystem, op: &'static str) -> Result<()> {
    match rs.family() {
        Family::A | Family::B | Family::C | Family::D => Ok(()),
        _ => Err(Error::Unsupported {
            op,
            diagram: rs.id().to_string(),
        }),
    }
}

fn require_interior(rs: &RootSystem, x_omega: &[f64], h: f64) -> Result<()> {
    match in_fundamental_domain_f64(rs, x_omega, 10.0 * h) {
        Region::Interior => Ok(()),
        _ => Err(Error::TooCloseToBoundary(h)),
    }
}

fn orth_squares(rs: &RootSystem, lambda: &Weight) -> Result<Vec<f64>> {
    Ok(rs
        .to_orthogonal_exact(lambda)?
        .iter()
        .map(|c| (c * c).to_f64().unwrap())
        .collect())
}

/// Central-difference Laplacian of ϕ_λ in orthogonal coordinates against
/// −4π²|m|²ϕ_λ, where m are the orthogonal coordinates of λ. The point is
/// given in orthogonal coordinates. For C_n, |m|² = 2⟨λ,λ⟩.
pub fn laplace_check(rs: &RootSystem, lambda: &Weight, x_orth: &[f64], h: f64) -> Result<EigenCheck> {
    sigma_k_check(rs, lambda, x_orth, 1, h)
}

/// σ_k(∂_1², …, ∂_d²)ϕ_λ against (−4π²)^k σ_k(m_1², …, m_d²)ϕ_λ, for k ≤ 2.
pub fn sigma_k_check(rs: &RootSystem, lambda: &Weight, x_orth: &[f64], k: usize, h: f64) -> Result<EigenCheck> {
    require_classical(rs, "orthogonal-coordinate Laplace check")?;
    if !(1..=2).contains(&k) {
        return Err(Error::InvalidParameter(format!("sigma_k needs k in 1..=2, got {k}")));
    }
    if k == 2 && rs.rank() > 3 {
        return Err(Error::Unsupported {
            op: "sigma_2 check above rank 3",
            diagram: rs.id().to_string(),
        });
    }
    let stencil = FdStencil::new(h)?;
    let phi = antisymmetric(rs, lambda)?;
    let x_omega = rs.point_from_orthogonal(x_orth)?;
    require_interior(rs, &x_omega, h)?;
    let f = |y: &[f64]| phi.eval(&rs.point_from_orthogonal(y).expect("length checked"));
    let sq = orth_squares(rs, lambda)?;
    let d = sq.len();
    let (fd, sigma) = if k == 1 {
        let fd = (0..d).map(|i| stencil.second(&f, x_orth, i)).sum::<C64>();
        (fd, sq.iter().sum::<f64>())
    } else {
        let mut fd = C64::new(0.0, 0.0);
        let mut sigma = 0.0;
        for i in 0..d {
            for j in i + 1..d {
                fd += stencil.second_second(&f, x_orth, i, j);
                sigma += sq[i] * sq[j];
            }
        }
        (fd, sigma)
    };
    let eigen = (-4.0 * PI * PI).powi(k as i32) * sigma;
    Ok(EigenCheck::new(fd, eigen, f(x_orth)))
}

/// Coefficient matrices c of second-order operators Σ c_ij ∂_i∂_j acting on
/// functions of the ω-coordinates of a point.
#[derive(Debug, Clone, PartialEq)]
pub struct OmegaOperator {
    /// ½ M_ij / ⟨α_j,α_j⟩ taken literally with this crate's Cartan matrix.
    pub literal: Vec<Vec<Q>>,
    /// The explicit low-rank forms as usually displayed (A2, C2, G2, A3, B3,
    /// C3). They equal ½S⁻¹ except C3, whose ∂_3² coefficient is printed as
    /// 2 where ½S⁻¹ gives 1.
    pub display: Option<Vec<Vec<Q>>>,
    /// S⁻¹: the operator with eigenvalue −4π²⟨λ,λ⟩ on ϕ_λ.
    pub metric_dual: Vec<Vec<Q>>,
}

fn q(v: &[&[(i64, i64)]]) -> Vec<Vec<Q>> {
    v.iter()
        .map(|row| row.iter().map(|&(n, d)| Q::new(n, d)).collect())
        .collect()
}

fn display_form(label: &str) -> Option<Vec<Vec<Q>>> {
    let z = (0, 1);
    let one = (1, 1);
    let two = (2, 1);
    let mh = (-1, 2);
    let m1 = (-1, 1);
    Some(match label {
        "A2" => q(&[&[one, mh], &[mh, one]]),
        "C2" => q(&[&[two, m1], &[m1, one]]),
        "G2" => q(&[&[one, (-3, 2)], &[(-3, 2), (3, 1)]]),
        "A3" => q(&[&[one, mh, z], &[mh, one, mh], &[z, mh, one]]),
        "B3" => q(&[&[one, mh, z], &[mh, one, m1], &[z, m1, two]]),
        "C3" => q(&[&[two, m1, z], &[m1, two, m1], &[z, m1, two]]),
        _ => return None,
    })
}

pub fn omega_basis_operator(rs: &RootSystem) -> OmegaOperator {
    let n = rs.rank();
    let norms = rs.root_norms();
    let literal = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Q::from_integer(rs.cartan()[i][j]) / norms[j] / 2)
                .collect()
        })
        .collect();
    OmegaOperator {
        literal,
        display: display_form(&rs.id().to_string()),
        metric_dual: rs.metric_inv().to_vec(),
    }
}

pub(crate) fn to_f64_matrix(c: &[Vec<Q>]) -> Vec<Vec<f64>> {
    c.iter()
        .map(|r| r.iter().map(|v| v.to_f64().unwrap()).collect())
        .collect()
}

/// Σ c_ij ∂_i∂_j ϕ_λ by finite differences in ω-coordinates, against
/// −4π²⟨λ,λ⟩ϕ_λ. Works for every family.
pub fn omega_laplace_check(
    rs: &RootSystem,
    lambda: &Weight,
    x_omega: &[f64],
    coeffs: &[Vec<Q>],
    h: f64,
) -> Result<EigenCheck> {
    crate::error::check_len(rs.rank(), x_omega.len())?;
    let stencil = FdStencil::new(h)?;
    let phi = antisymmetric(rs, lambda)?;
    require_interior(rs, x_omega, h)?;
    let f = |y: &[f64]| phi.eval(y);
    let fd = stencil.operator(&f, x_omega, &to_f64_matrix(coeffs));
    let eigen = -4.0 * PI * PI * rs.inner(lambda, lambda)?.to_f64().unwrap();
    Ok(EigenCheck::new(fd, eigen, f(x_omega)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(label: &str) -> RootSystem {
        RootSystem::from_label(label).unwrap()
    }

    fn interior_orth(r: &RootSystem) -> Vec<f64> {
        let n = r.rank();
        let h = r.pair_highest_root_f64(&vec![1.0; n]);
        let x: Vec<f64> = (0..n).map(|i| (0.7 + 0.13 * i as f64) / (h * 1.6)).collect();
        r.point_to_orthogonal(&x).unwrap()
    }

    #[test]
    fn a2_rho_eigenvalue() {
        let r = rs("A2");
        let c = laplace_check(&r, &r.rho(), &interior_orth(&r), 1e-4).unwrap();
        assert!((c.eigenvalue + 8.0 * PI * PI).abs() < 1e-12);
        assert!(c.rel_err < 1e-6, "{}", c.rel_err);
    }

    #[test]
    fn c2_orthogonal_2_1() {
        let r = rs("C2");
        let lam = r.from_orthogonal_exact(&[Q::from_integer(2), Q::from_integer(1)]).unwrap();
        assert_eq!(lam, Weight::from_ints(&[1, 1]));
        let x = interior_orth(&r);
        let c = laplace_check(&r, &lam, &x, 1e-4).unwrap();
        assert!((c.eigenvalue + 4.0 * PI * PI * 5.0).abs() < 1e-9);
        assert!(c.rel_err < 1e-5);
        let s = sigma_k_check(&r, &lam, &x, 2, 1e-3).unwrap();
        assert!((s.eigenvalue - 16.0 * PI.powi(4) * 4.0).abs() < 1e-6);
        assert!(s.rel_err < 1e-3, "{}", s.rel_err);
    }

    #[test]
    fn rejects_bad_inputs() {
        let r = rs("A2");
        let x = interior_orth(&r);
        assert!(matches!(
            laplace_check(&r, &Weight::from_ints(&[0, 1]), &x, 1e-4),
            Err(Error::NotStrictlyDominant(_))
        ));
        let edge = r.point_to_orthogonal(&[1e-5, 0.3]).unwrap();
        assert!(matches!(
            laplace_check(&r, &r.rho(), &edge, 1e-4),
            Err(Error::TooCloseToBoundary(_))
        ));
        assert!(sigma_k_check(&r, &r.rho(), &x, 3, 1e-3).is_err());
        let g = rs("G2");
        assert!(matches!(laplace_check(&g, &g.rho(), &[0.1, 0.1], 1e-4), Err(Error::Unsupported { .. })));
    }

    #[test]
    fn display_forms_are_half_metric_dual() {
        for label in ["A2", "C2", "G2", "A3", "B3", "C3"] {
            let r = rs(label);
            let op = omega_basis_operator(&r);
            let disp = op.display.unwrap();
            let n = r.rank();
            for i in 0..n {
                for j in 0..n {
                    let half = op.metric_dual[i][j] / 2;
                    if label == "C3" && i == 2 && j == 2 {
                        assert_eq!(disp[i][j], half * 2);
                    } else {
                        assert_eq!(disp[i][j], half, "{label} {i} {j}");
                    }
                }
            }
        }
        let a2 = omega_basis_operator(&rs("A2"));
        assert_eq!(to_f64_matrix(&a2.metric_dual), vec![vec![2.0, -1.0], vec![-1.0, 2.0]]);
        assert_eq!(a2.literal[0][1], Q::new(-1, 4));
    }

    #[test]
    fn metric_dual_certified_in_omega_coordinates() {
        for label in ["A2", "C2", "G2", "B3"] {
            let r = rs(label);
            let op = omega_basis_operator(&r);
            let n = r.rank();
            let h = r.pair_highest_root_f64(&vec![1.0; n]);
            let x: Vec<f64> = (0..n).map(|i| (0.5 + 0.2 * i as f64) / (h * 1.5)).collect();
            let lam = Weight::from_ints(&vec![2; n]);
            let c = omega_laplace_check(&r, &lam, &x, &op.metric_dual, 1e-4).unwrap();
            assert!(c.rel_err < 1e-5, "{label}: {}", c.rel_err);
            if let Some(d) = op.display {
                let c = omega_laplace_check(&r, &lam, &x, &d, 1e-4).unwrap();
                assert!(c.rel_err > 0.1, "{label}");
            }
            if r.family() != Family::G {
                let o = laplace_check(&r, &lam, &r.point_to_orthogonal(&x).unwrap(), 1e-4).unwrap();
                let scale = r.orth_scale().to_f64().unwrap();
                let omega = omega_laplace_check(&r, &lam, &x, &op.metric_dual, 1e-4).unwrap();
                assert!((o.fd / scale - omega.fd).norm() / omega.fd.norm() < 1e-4);
            }
        }
    }
}
