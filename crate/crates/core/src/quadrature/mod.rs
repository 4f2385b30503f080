//! Double-exponential quadrature and the integration routes for the double
//! integral family.

mod de;
mod guard;
mod integrand;
mod routes;

pub use de::{integrate_halfline, integrate_halfline_scaled, QuadConfig, QuadratureResult};
pub use guard::{removable_singularity_guard, PowerSum, GUARD_EPS};
pub use integrand::{Integrand, LogFactor, Monomial};
pub use routes::{
    integrate_2d, integrate_2d_paper, integrate_product_2d, integrate_reduced, integrate_reduced_1d, Order,
};
