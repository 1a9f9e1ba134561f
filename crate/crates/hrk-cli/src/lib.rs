//! Command-line front end: the representation-expression parser, the
//! elaborator onto linear and quaternionic projective spaces, and report
//! emission.

pub mod commands;
pub mod elaborate;
pub mod parser;
pub mod report;
