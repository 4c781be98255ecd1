//! The snippets of the bornlab guide, run as doc-tests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/spaces.md")]
pub mod spaces {}
#[doc = include_str!("../../../book/src/ideals.md")]
pub mod ideals {}
#[doc = include_str!("../../../book/src/closures.md")]
pub mod closures {}
#[doc = include_str!("../../../book/src/topologies.md")]
pub mod topologies {}
#[doc = include_str!("../../../book/src/verifier.md")]
pub mod verifier {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
