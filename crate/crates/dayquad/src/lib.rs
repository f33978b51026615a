//! Day convolution on finitely supported catLie-modules, the tensor algebra
//! on `C₁`, and the quadratic presentations of the Casimir Lie algebra `C`
//! and the chord diagram algebra `A`.

pub mod day;
pub mod quadratic;

pub use day::{day_convolve, day_product, module_from_models, DayKey};
pub use quadratic::{
    a_side_cell, a_side_quadratic_dim, c1, c_side_cell, free_power, free_power_module, presentation_report, quadratic_quotient,
    quadratic_quotient_dim, quadratic_quotient_module, quadratic_relators, relators_vanish, tensor_power_c1, QuadraticCell,
};
