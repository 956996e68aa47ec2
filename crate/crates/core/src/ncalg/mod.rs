//! Noncommutative algebras presented by generators and commutation rules,
//! with a memoized PBW normal-ordering engine, analytic functions of
//! elements via truncated Taylor series, and tensor powers up to rank 3.

mod algebra;
mod element;
mod monomial;
mod rewrite;
mod tensor;

pub use algebra::{gen_trig_coeffs, Algebra};
pub use element::{AlgebraElement, Element, Scalar, TermKey, Tensor2, Tensor3};
pub use monomial::{GeneratorId, Monomial, MAX_GENS};
pub use rewrite::{RewriteSystem, Truncation};
pub use tensor::{embed, flip, outer, Embedding, Morphism, MorphismKind};

use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NcError {
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("series argument has a term of filtration weight zero; the series cannot terminate")]
    NonNilpotentArgument,
    #[error("series needs at least {needed} coefficients")]
    SeriesTooShort { needed: usize },
    #[error("rule [{left}, {right}] lowers the filtration weight, so degree truncation is unsound")]
    RuleBreaksFiltration { left: String, right: String },
    #[error("morphism has {got} generator images, algebra has {expected} generators")]
    ImageCountMismatch { expected: usize, got: usize },
}
