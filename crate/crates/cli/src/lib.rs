//! Parsing, JSON reports, random inputs and the command-line driver for the
//! `monideal` binary.

pub mod app;
pub mod parse;
pub mod random;
pub mod report;
pub mod selftest;

pub use app::run;
