//! Configuration, seeded sampling, verification suites and reports for
//! `cliffpar-core`.

pub mod config;
pub mod report;
pub mod sample;
pub mod suites;

use rayon::prelude::*;

pub use config::{parse_config, ConfigError, SuiteConfig};
pub use report::{emit_report, parse_machine, CheckRecord, Format, Report, Verdict};

/// Run the selected suites concurrently and collect their checks in order.
pub fn run_suites(cfg: &SuiteConfig) -> Report {
    let checks: Vec<CheckRecord> = cfg
        .checks
        .par_iter()
        .map(|name| suites::run_suite(cfg, name))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    Report::new(cfg.seed, cfg.algebra.describe(), checks)
}
