//! File formats, reports, seeded corpora, and reproduction suites
//! behind the `ofrac` binary.

pub mod corpus;
pub mod formats;
pub mod report;
pub mod suites;
