//! Exact arithmetic in the algebra `𝕀ₙ` of polynomial integro-differential
//! operators over `ℚ`.
//!
//! * [`arith`]: rationals, `ℚ[H]` with the shift `H ↦ H + k`, and `ℚ(H)`.
//! * [`i1`]: canonical forms in `𝕀₁` over the basis `Hʲ∂ⁱ, Hʲ, ∫ⁱHʲ, e_st`.
//! * [`tensor`]: `𝕀ₙ` and its mixed quotients `B_{n-m} ⊗ 𝕀ₘ`.
//! * [`skew`]: skew Laurent polynomials `K[H][∂, ∂⁻¹; τ]` and `K(H)[∂, ∂⁻¹; τ]`.
//! * [`lattice`]: ideals of `𝕀ₙ` as antichains of Boolean functions.
//! * [`parser`]: text syntax and canonical printing.
//! * [`cli`]: the `intdiff` command-line front end.

pub mod arith;
pub mod cli;
pub mod error;
pub mod i1;
pub mod lattice;
pub mod parser;
pub mod skew;
pub mod tensor;

pub use arith::{PolyH, Rat, RatFunc};
pub use error::{Error, Result};
pub use i1::{I1Element, I1Monomial, PolyX};
pub use lattice::{BoolFn, IdealAntichain};
pub use parser::{format_operator, parse_operator, parse_poly};
pub use skew::{B1Element, CalB1Element};
pub use tensor::{FactorMonomial, InElement, Mode, PolyXn};
