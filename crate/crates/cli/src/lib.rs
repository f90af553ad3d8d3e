//! Library surface of the command-line front end: job-file parsing with
//! JSON-path-located schema errors and deterministic report rendering.

#![warn(missing_docs)]

pub mod json;
pub mod report;
