//! Fuzzy-logic driven opportunistic spectrum access for cognitive radio.
//!
//! A secondary user may borrow a licensed channel only while its primary
//! user is idle. This crate scores each candidate secondary user with a
//! three-input fuzzy logic system (spectrum utilization efficiency, degree
//! of mobility, distance to the primary user), fires a 27-rule knowledge
//! base with a product T-norm, and defuzzifies by center-of-sets into a
//! "possibility" in [0, 100]. The user with the highest possibility wins
//! the channel.
//!
//! The crate is organized in four layers:
//!
//! - [`fuzzy`] — membership functions, linguistic variables, fuzzification.
//! - [`engine`] — the rule base, firing, center-of-sets inference, and
//!   argmax user selection.
//! - [`radio`] — descriptor computation from physical state: distances,
//!   Doppler shift, mobility degree, SNR-based ranging, spectrum efficiency.
//! - [`sim`] — a deterministic discrete-event simulator that compares the
//!   fuzzy admission policy against a first-come-first-served baseline
//!   across an arrival-rate sweep.
//!
//! The crate is `no_std`-compatible (with `alloc`): disable default
//! features and enable `libm` for the float math fallback. File formats,
//! configuration, and the command line live in the companion CLI crate.
//!
//! ```
//! use specfuzzy::engine::{DescriptorVector, FlsEngine};
//!
//! let engine = FlsEngine::standard();
//! let d = DescriptorVector::new(83.0, 1.2, 6.0);
//! let possibility = engine.infer(&d);
//! assert!(possibility > 50.0);
//! ```

#![cfg_attr(not(feature = "std"), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

#[cfg(all(not(feature = "std"), not(feature = "libm")))]
compile_error!("no_std builds need the `libm` feature for float math");

mod num;

pub mod engine;
pub mod fuzzy;
pub mod radio;
pub mod sim;

pub use engine::{DescriptorVector, FlsEngine, RuleBase, Selection, TNorm};
pub use fuzzy::{FuzzifiedInput, LinguisticVariable, MembershipFunction};
pub use sim::{MetricsRow, Policy, SimConfig, SweepPoint};
