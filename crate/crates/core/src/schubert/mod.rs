//! Osculating flags, Schubert-cell charts, the polynomial systems of
//! osculating instances, and Wronskians.

mod chart;
pub(crate) mod flag;
mod instance;
mod point;
mod system;
mod wronskian;

pub use chart::{chart_matrix, Chart, ChartKind, Entry};
pub use flag::{flag_matrix, flag_rows};
pub use instance::{osculation_type, OsculatingInstance, OsculationType};
pub use point::{Mobius, OsculationPoint};
pub use system::{condition_equations, instance_system, stacked_condition_minors, InstanceSystem};
pub use wronskian::{vanishing_order, wronskian, wronskian_symbolic};
