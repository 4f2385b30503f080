//! Complex special functions with principal-branch conventions.

mod bessel;
mod elementary;
mod gamma;
mod hypergeometric;
mod lerch;
mod zeta;

pub use bessel::bessel_k;
pub use elementary::{
    acosh_principal, cos_pi, cot_pi, cpow, csc_pi, ensure_finite, exprel, principal_log, principal_sqrt, sin_pi,
};
pub use gamma::{digamma, recip_gamma};
pub use hypergeometric::gauss_2f1_a1;
pub use lerch::{
    lerch_phi, lerch_phi_neg_int_s, lerch_root_of_unity, lerch_root_of_unity_sderiv, LerchStrategy, RationalAngle,
};
pub use zeta::{glaisher_constant, hurwitz_zeta, hurwitz_zeta_sderiv, riemann_zeta, BERNOULLI_EVEN};
