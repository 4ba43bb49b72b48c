pub mod closed_forms;
pub mod complex;
pub mod error;
pub mod families;
pub mod io;
pub mod laplacian;
pub mod linalg;
pub mod trees;
pub mod verify;

pub use error::{Error, Result};
