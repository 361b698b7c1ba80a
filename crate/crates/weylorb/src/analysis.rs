//! Differential and integral eigenproperties of orbit functions, Hermite
//! eigenfunctions of the orbit-function transforms, and symmetric and
//! antisymmetric polynomial families.

pub mod fd;
pub mod hermite;
pub mod laplace;
pub mod polys;
pub mod shift;

pub use fd::FdStencil;
pub use laplace::{
    laplace_check, omega_basis_operator, omega_laplace_check, sigma_k_check, EigenCheck,
    OmegaOperator,
};
pub use shift::{derivative_identity_residual, shift_operator_check, ShiftCheck, ShiftVariant};
pub use hermite::{
    fourth_power_residual, hermite, hermite_function, hermite_sym_anti, pairs_up_to, transform_eigen_check,
    HermiteEigenCheck, KernelSign, MultiIndex, OrbitFourier2, Variant,
};
pub use polys::{
    ordered_inner, p_anti, p_anti_quotient, p_sym, Hermite, HermiteOrthonormal, LegendreOrthonormal,
    Monomials, PolyFamily,
};
