pub mod error;
pub mod exactpoly;
pub mod jpoly;
pub mod oracles;
pub mod qcalc;
pub mod qstirling;
pub mod report;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
