//! File formats, rendering, seeded corpora and the command line for
//! `brauer-core`.

pub mod cli;
pub mod corpus;
pub mod fixtures;
pub mod format;
pub mod render;
