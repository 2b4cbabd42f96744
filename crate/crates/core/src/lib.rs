//! Weight and character combinatorics for the general linear supergroup GL(m|n)
//! over a field of odd characteristic.

pub mod borel_chain;
pub mod charring;
pub mod cli;
pub mod error;
pub mod gl11;
pub mod jantzen;
pub mod root_data;
pub mod weyl;

pub use error::{Error, Result};
pub use root_data::{GLContext, HalfWeight, Root, Weight};
