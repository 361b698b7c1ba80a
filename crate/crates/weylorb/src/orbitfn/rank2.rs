//! Explicit rank-two antisymmetric orbit functions, written out term by term.
//! Labels are λ = (a, b) in the ω-basis.

use std::f64::consts::PI;

use crate::linalg::C64;

fn e(t: f64) -> C64 {
    C64::from_polar(1.0, 2.0 * PI * t)
}

/// A_2 with x = ψ_1 α_1 + ψ_2 α_2.
pub fn a2_psi(a: f64, b: f64, p1: f64, p2: f64) -> C64 {
    e(a * p1 + b * p2) - e(-a * p1 + (a + b) * p2) - e((a + b) * p1 - b * p2)
        + e(b * p1 - (a + b) * p2)
        + e(-(a + b) * p1 + a * p2)
        - e(-b * p1 - a * p2)
}

/// A_2 with x = θ_1 ω_1 + θ_2 ω_2.
pub fn a2_theta(a: f64, b: f64, t1: f64, t2: f64) -> C64 {
    let k = 1.0 / 3.0;
    e(k * ((2.0 * a + b) * t1 + (a + 2.0 * b) * t2)) - e(k * ((-a + b) * t1 + (a + 2.0 * b) * t2))
        - e(k * ((2.0 * a + b) * t1 + (a - b) * t2))
        + e(-k * ((a - b) * t1 + (2.0 * a + b) * t2))
        + e(-k * ((a + 2.0 * b) * t1 + (-a + b) * t2))
        - e(-k * ((a + 2.0 * b) * t1 + (2.0 * a + b) * t2))
}

/// A_2 with λ = (a, a), θ-coordinates.
pub fn a2_diagonal(a: f64, t1: f64, t2: f64) -> C64 {
    let s = |t: f64| (2.0 * PI * a * t).sin();
    C64::new(0.0, 2.0 * (s(t1 + t2) - s(t1) - s(t2)))
}

/// A_2 with λ = (a, a), ψ-coordinates.
pub fn a2_diagonal_psi(a: f64, p1: f64, p2: f64) -> C64 {
    let s = |t: f64| (2.0 * PI * a * t).sin();
    C64::new(0.0, 2.0 * (s(p1 + p2) + s(p1 - 2.0 * p2) - s(2.0 * p1 - p2)))
}

/// C_2, θ-coordinates. Real valued.
pub fn c2_theta(a: f64, b: f64, t1: f64, t2: f64) -> f64 {
    let c = |t: f64| 2.0 * (PI * t).cos();
    c((a + b) * t1 + (a + 2.0 * b) * t2) - c(b * t1 + (a + 2.0 * b) * t2) - c((a + b) * t1 + a * t2)
        + c(b * t1 - a * t2)
}

/// G_2 written with the halved metric (1/6)[[6,3],[3,2]]; equals ϕ_λ at θ/2
/// under the standard metric.
pub fn g2_theta(a: f64, b: f64, t1: f64, t2: f64) -> f64 {
    let c = |t: f64| 2.0 * (PI * t).cos();
    let (t, s) = (1.0 / 3.0, 2.0 / 3.0);
    c((2.0 * a + b) * t1 + (a + s * b) * t2) - c((a + b) * t1 + (a + s * b) * t2)
        - c((2.0 * a + b) * t1 + (a + t * b) * t2)
        + c((a + b) * t1 + t * b * t2)
        + c(a * t1 + (a + t * b) * t2)
        - c(a * t1 - t * b * t2)
}
