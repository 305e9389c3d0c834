//! Exact integer matrices, Smith normal form, and modular kernels.

mod matrix;
mod minors;
mod modular;
mod smith;

pub use matrix::{json_int, IntegerMatrix};
pub use minors::{
    determinantal_divisor, minor_gcd_factors, MAX_ORACLE_MAX_DIM, MAX_ORACLE_MIN_DIM,
};
pub(crate) use modular::mul_mod;
pub use modular::{
    gcd_with_modulus, mod_inverse, residue, row_reduce_mod_p, solve_mod, CyclicFactor,
    ModularSolution,
};
pub use smith::{smith_normal_form, SmithDecomposition};
