//! File formats, seeded instance generators and verification campaigns on top
//! of [`edgedepth_core`].

pub mod campaign;
pub mod generate;
pub mod io;

pub use edgedepth_core as core;
