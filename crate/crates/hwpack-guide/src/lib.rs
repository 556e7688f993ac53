//! The chapters of `book/` compiled as doc comments, one module per chapter,
//! so `cargo test -p hwpack-guide` runs every code block in the guide.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/parameters.md")]
pub mod parameters {}
#[doc = include_str!("../../../book/src/membership.md")]
pub mod membership {}
#[doc = include_str!("../../../book/src/characters.md")]
pub mod characters {}
#[doc = include_str!("../../../book/src/invariants.md")]
pub mod invariants {}
#[doc = include_str!("../../../book/src/cohomological.md")]
pub mod cohomological {}
#[doc = include_str!("../../../book/src/langlands.md")]
pub mod langlands {}
#[doc = include_str!("../../../book/src/tableaux.md")]
pub mod tableaux {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
