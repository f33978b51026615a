//! The library behind the `diagcat` command.

pub mod checks;
pub mod commands;
pub mod report;
pub mod tables;

pub use checks::{all_checks, find_check, run_check, Check, Outcome, Settings};
pub use report::{reports_json, verify, verify_all, Status, VerificationReport};
pub use tables::{homspace_show, parse_partition, parse_range, DimsQuery, Row, Space};
