pub mod arith;
pub mod cli;
pub mod cohomology;
pub mod cup_obstruct;
pub mod error;
pub mod f2;
pub mod finite_field;
pub mod matrix_groups;
pub mod quad_field;
pub mod report;

pub use error::{Error, Result};
