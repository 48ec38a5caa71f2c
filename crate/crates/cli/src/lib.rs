//! Library surface of the command-line driver, kept separate from the
//! binary so integration tests and fuzz targets can call the pieces
//! directly.

pub mod commands;
pub mod records;
pub mod report;
