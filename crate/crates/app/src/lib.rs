//! Command-line runner and teach-loop service for `metaqa-core`.

pub mod commands;
pub mod io;
pub mod oracle;
pub mod service;
pub mod stats;
