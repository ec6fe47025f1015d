//! Average age of synchronization and power of a status-update server with
//! sleep and wake-up control.
//!
//! Three independent routes produce the same numbers: the SHS chain solver
//! ([`shs`] over chains from [`models`]), closed-form expressions
//! ([`closed_form`]) and discrete-event simulation ([`sim`]). The [`sweep`]
//! module drives them from flat config files.


pub mod analysis;
pub mod closed_form;
mod linalg;
pub mod models;
pub mod params;
pub mod shs;
pub mod sim;
pub mod sweep;



pub use params::{PolicySpec, PowerLevels, Preemption, SleepModel, SystemParams, WakeupPolicy};
pub use shs::{AgeEnergyResult, AgeMap, PowerClass, ShsModel};
