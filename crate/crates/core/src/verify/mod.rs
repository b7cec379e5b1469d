//! Property harness: exact checks, numeric sharpness search and the suite runner.

pub mod checks;
pub mod config;
pub mod search;
pub mod suite;

pub use checks::{
    check_bound_consistency, check_extremal_attainment, check_lemma4, check_member_bounds, check_pqrs_positivity,
    check_schur_relation, check_thm5_pipeline, oracle_case, CheckError, CheckOptions,
};
pub use config::{parse_rational, ClassSelection, ConfigError, OutputFormat, SuiteConfig};
pub use search::{sharpness_search, SearchGrid, SearchPoint, SearchResult};
pub use suite::run_suite;
