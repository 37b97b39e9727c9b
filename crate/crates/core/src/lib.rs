pub mod cli;
pub mod error;
pub mod families;
pub mod graph_core;
pub mod linalg;
pub mod poly;
pub mod rational;
pub mod terwilliger;
pub mod tmodules;
pub mod uniform;

pub use error::{Error, Result};
