//! Exact verification of the E8 model sl(9,C) ⊕ Λ³ ⊕ Λ³, Spin(7) linear algebra on R⁸,
//! and the cellular cohomology criterion `Hom(H³(M,Z), Z₂) = 0`.
//!
//! All arithmetic is exact, over Q(ζ₁₂) or Z.

pub mod cellcoh;
pub mod e8;
pub mod exterior;
pub mod field;
pub mod json;
pub mod report;
pub mod spin7;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/field.md")]
    mod field {}
    #[doc = include_str!("../../../book/src/exterior.md")]
    mod exterior {}
    #[doc = include_str!("../../../book/src/e8.md")]
    mod e8 {}
    #[doc = include_str!("../../../book/src/spin7.md")]
    mod spin7 {}
    #[doc = include_str!("../../../book/src/cohomology.md")]
    mod cohomology {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
