//! The user guide, embedded and doc-tested.
//!
//! Each submodule carries one chapter of the mdBook under `book/` in the
//! repository root, included verbatim. `cargo test` therefore compiles and
//! runs every code snippet in the guide, so the rendered book can never
//! drift from the crate it documents. Read it here in rustdoc, or render
//! the browsable version with `mdbook build book/`.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/strongly-convex.md")]
pub mod strongly_convex {}

#[doc = include_str!("../../../book/src/jensen.md")]
pub mod jensen_gaps {}

#[doc = include_str!("../../../book/src/mercer.md")]
pub mod reflected_points {}

#[doc = include_str!("../../../book/src/young.md")]
pub mod two_means {}

#[doc = include_str!("../../../book/src/operator.md")]
pub mod operator_bounds {}

#[doc = include_str!("../../../book/src/harness.md")]
pub mod verification_harness {}
