//! Library side of the `negcat` command: scenario parsing, task execution,
//! diagrams and self-tests.

pub mod diagram;
pub mod error;
pub mod run;
pub mod scenario;
pub mod selftest;

pub use error::{CliError, Result};
pub use run::{render_diagram, run_scenario, Report, REPORT_VERSION};
pub use scenario::{load, parse, Scenario, Task};
