//! The book chapters, one module each, so that `cargo test` runs their code blocks.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/fields.md")]
pub mod fields {}
#[doc = include_str!("../../../book/src/rings.md")]
pub mod rings {}
#[doc = include_str!("../../../book/src/groebner.md")]
pub mod groebner {}
#[doc = include_str!("../../../book/src/saturation.md")]
pub mod saturation {}
#[doc = include_str!("../../../book/src/descent.md")]
pub mod descent {}
#[doc = include_str!("../../../book/src/problem-files.md")]
pub mod problem_files {}
