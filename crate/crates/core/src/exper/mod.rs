//! Seeded sampling of real osculating instances, a resumable record log,
//! frequency tables and checks of the structural laws they should obey.

mod check;
mod config;
mod record;
mod runner;
mod sample;
mod table;

pub use check::{check_structures, LawCheck, LawStatus, StructureReport};
pub use config::{ExecMode, ExperimentConfig};
pub use record::{discarded_log_path, read_discarded, read_log, DiscardRecord, InstanceRecord};
pub use runner::{run_experiment, solve_batch, RunReport};
pub use sample::{derive_seed, sample_instance};
pub use table::{tabulate, FrequencyTable, TableFormat, TableRow};
