//! Exact scalars and exact linear algebra over Q(ζ₁₂) and Z.

mod cyc;
mod eigen;
mod intmat;
mod matrix;

pub use cyc::CycNum;
pub use eigen::{characteristic_polynomial, rational_eigenspaces, rational_roots, Eigenspace};
pub use intmat::{smith_normal_form, IntMatrix, SmithForm};
pub use matrix::{CycMatrix, Echelon};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is singular")]
    Singular,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("expected rational entries")]
    NotRational,
    #[error("irrational spectrum: rational roots do not exhaust the characteristic polynomial")]
    IrrationalSpectrum,
    #[error("matrix is not diagonalizable over Q")]
    NotDiagonalizable,
}

/// Elementwise arithmetic selector; mirrors the four field operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn cyc_arith(a: &CycNum, b: &CycNum, op: ArithOp) -> Result<CycNum, FieldError> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => a.div(b)?,
    })
}
