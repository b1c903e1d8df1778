//! Reference interpreter and derivation checker for a Cartesian cubical
//! programming language.

pub mod checker;
pub mod cli;
pub mod corpus;
pub mod cube;
pub mod gen;
pub mod name;
pub mod opsem;
pub mod props;
pub mod syntax;
