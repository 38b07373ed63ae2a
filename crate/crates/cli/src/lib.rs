//! File formats, seeded generators, random corpora and the regression
//! gallery behind the `strong-odd` command-line tool.

pub mod clock;
pub mod corpus;
pub mod gallery;
pub mod generate;
pub mod io;
