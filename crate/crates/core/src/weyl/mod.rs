//! Exact normal-ordered algebra of polynomial-coefficient differential
//! operators in one or two variables, and their action on polynomials.

mod op;
mod poly;

pub use op::{OpTerm, WeylOp};
pub use poly::Poly;

use crate::scalar::Scalar;

/// Which coordinate a one-variable building block acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
}

fn coord(nvars: u8, v: Var) -> WeylOp {
    match v {
        Var::X => WeylOp::x(nvars),
        Var::Y => WeylOp::y(),
    }
}

fn deriv(nvars: u8, v: Var) -> WeylOp {
    match v {
        Var::X => WeylOp::dx(nvars),
        Var::Y => WeylOp::dy(),
    }
}

/// Hermite operator `x∂ − ∂²` in the chosen variable.
pub fn hermite_operator(nvars: u8, v: Var) -> WeylOp {
    let c = coord(nvars, v);
    let d = deriv(nvars, v);
    &(&c * &d) - &d.power(2)
}

/// Euler operator `x∂` in the chosen variable.
pub fn euler_operator(nvars: u8, v: Var) -> WeylOp {
    &coord(nvars, v) * &deriv(nvars, v)
}

/// `x∂x + y∂y` on two variables.
pub fn total_euler() -> WeylOp {
    &euler_operator(2, Var::X) + &euler_operator(2, Var::Y)
}

/// Mixed derivative `∂x∂y`.
pub fn mixed_derivative() -> WeylOp {
    &WeylOp::dx(2) * &WeylOp::dy()
}

/// `c·(∂x² + ∂y²)` in two variables, or `c·∂²` in one.
pub fn scaled_laplacian(nvars: u8, c: Scalar) -> WeylOp {
    let mut op = WeylOp::dx(nvars).power(2);
    if nvars == 2 {
        op = &op + &WeylOp::dy().power(2);
    }
    op.scale(&c)
}
