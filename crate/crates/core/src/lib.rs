pub mod algebra;
pub mod bialgebra;
pub mod coefficients;
pub mod cohomology;
pub mod combination;
pub mod commands;
pub mod error;
pub mod json;
pub mod linsolve;
pub mod parser;
pub mod sampling;
pub mod scalar;
pub mod suites;
pub mod tensor;
pub mod window;
