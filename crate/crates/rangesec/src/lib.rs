//! Near-field multiple-antenna simulation library for terahertz range security.
//!
//! Models an Alice/Bob/Eve wiretap link in which the eavesdropper sits inside
//! the transmit beam at the same angle as the legitimate receiver but at a
//! different range. Far-field phased arrays and frequency diverse arrays
//! cannot separate two receivers in the range domain; a widely-spaced planar
//! array whose users fall in its radiative near field can. The crate covers:
//!
//! - spherical-wave and planar-wave path geometry for uniform planar arrays
//!   ([`geometry`]),
//! - LoS channel vectors, Friis path gain and link-budget arithmetic
//!   ([`channel`]),
//! - frequency-diverse-array models: the snapshot array factor and the
//!   symbol-synchronized received signal ([`fda`]),
//! - secrecy-rate formulas, the far-field secrecy-capacity bound and the
//!   conventional far-field beamforming baseline ([`secrecy`]),
//! - the rank-2 generalized-Rayleigh-quotient secrecy optimizer with a
//!   closed-form hybrid beamformer and a phase-only gradient-ascent fallback
//!   ([`ncoa`]),
//! - a seeded, machine-readable experiment runner behind the `rangesec`
//!   binary ([`expcli`]).
//!
//! All internal quantities are SI: meters, radians, Hz, watts. dBm appears
//! only at the CLI boundary.

pub mod channel;
pub mod error;
pub mod expcli;
pub mod fda;
pub mod geometry;
pub mod ncoa;
pub mod secrecy;

pub use error::{Error, Result};

/// Speed of light in vacuum, m/s.
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;
