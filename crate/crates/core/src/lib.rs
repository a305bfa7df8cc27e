//! Simulator and data-analysis toolkit for resonant Rydberg-EIT cross-Kerr
//! nonlinearities.
//!
//! The crate models the cross-phase shift written onto a weak probe beam by
//! Rydberg excitations created by a second (signal) beam inside a cold-atom
//! EIT medium. The cross-phase model is evaluated by three independent
//! routes (closed form, adaptive quadrature of the per-atom phase, and a
//! pairwise Monte Carlo), and the crate also generates synthetic experiment
//! records (spectroscopy scans, beat-note interferometry, signal-power
//! sweeps) plus the full analysis chain: spectroscopy fits, per-pulse phase
//! extraction, slope fits, peak-to-peak-phase rescaling, and a power-law fit
//! with reduced-chi-square error inflation.
//!
//! Units are SI throughout; every frequency-like quantity is an angular
//! frequency in rad/s unless a field name says otherwise (`*_hz`).

pub mod analysis;
pub mod atoms;
pub mod cli;
pub mod config;
pub mod constants;
pub mod eit;
pub mod error;
pub mod io;
pub mod kerr;
pub mod optimize;
pub mod quad;
pub mod simulate;

pub use error::{Error, Result};
