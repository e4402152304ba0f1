//! Guide chapters, compiled so their snippets run as doctests.

#[doc = include_str!("../../../book/src/intro.md")]
pub mod intro {}
#[doc = include_str!("../../../book/src/laurent.md")]
pub mod laurent {}
#[doc = include_str!("../../../book/src/h-functions.md")]
pub mod h_functions {}
#[doc = include_str!("../../../book/src/alexander.md")]
pub mod alexander {}
#[doc = include_str!("../../../book/src/invariants.md")]
pub mod invariants {}
#[doc = include_str!("../../../book/src/detection.md")]
pub mod detection {}
#[doc = include_str!("../../../book/src/catalog-cli.md")]
pub mod catalog_cli {}
