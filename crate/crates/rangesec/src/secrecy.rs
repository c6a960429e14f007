//! Secrecy-rate formulas, the far-field secrecy-capacity bound and the
//! conventional far-field beamforming baseline.
//!
//! Rates are in bps/Hz (base-2 logarithms throughout). The reported rate is
//! clamped at zero; the `clamped` flag records whether the clamp engaged.

use num_complex::Complex64;

use crate::channel::{self, ChannelVector, FieldModel, LinkBudget};
use crate::error::{Error, Result};
use crate::geometry::{ReceiverLocation, UpaGeometry};

/// Outcome of a secrecy-rate evaluation for one beamformer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SecrecyReport {
    pub rate_bps_hz: f64,
    pub snr_bob: f64,
    pub snr_eve: f64,
    pub clamped: bool,
}

/// `log2(1 + snr)`; rejects negative SNR.
pub fn shannon_capacity(snr: f64) -> Result<f64> {
    if snr < 0.0 || !snr.is_finite() {
        return Err(Error::NegativeSnr(snr));
    }
    Ok((1.0 + snr).log2())
}

/// Secrecy rate of a unit-norm beamformer against the Bob/Eve channel pair:
/// `[log2(1 + P |w^H H_B|^2 a_B^2 / s^2) - log2(1 + P |w^H H_E|^2 a_E^2 / s^2)]^+`.
pub fn secrecy_rate(
    w: &[Complex64],
    h_b: &ChannelVector,
    h_e: &ChannelVector,
    alpha_b: f64,
    alpha_e: f64,
    budget: &LinkBudget,
) -> Result<SecrecyReport> {
    let gain_b = channel::beamforming_gain(w, h_b)?;
    let gain_e = channel::beamforming_gain(w, h_e)?;
    let snr_bob = channel::received_snr(budget, gain_b, alpha_b);
    let snr_eve = channel::received_snr(budget, gain_e, alpha_e);
    let diff = shannon_capacity(snr_bob)? - shannon_capacity(snr_eve)?;
    Ok(SecrecyReport {
        rate_bps_hz: diff.max(0.0),
        snr_bob,
        snr_eve,
        clamped: diff < 0.0,
    })
}

/// Far-field secrecy-capacity bound
/// `[log2(1 + P n_t a_B^2/s^2) - log2(1 + P n_t a_E^2/s^2)]^+`.
///
/// Any transmit scheme whose receivers share an angle in the far field is
/// limited by this value; it is zero whenever Eve is at least as close as
/// Bob.
pub fn farfield_secrecy_capacity_bound(
    n_t: usize,
    alpha_b: f64,
    alpha_e: f64,
    budget: &LinkBudget,
) -> f64 {
    let full = n_t as f64;
    let snr_b = channel::received_snr(budget, full, alpha_b);
    let snr_e = channel::received_snr(budget, full, alpha_e);
    ((1.0 + snr_b).log2() - (1.0 + snr_e).log2()).max(0.0)
}

/// Far-field maximum-ratio beamformer steered at `angle_rad`, normalized to
/// unit power.
pub fn farfield_mrt_beamformer(geom: &UpaGeometry, angle_rad: f64) -> Vec<Complex64> {
    let loc = ReceiverLocation {
        range_m: 1.0,
        angle_rad,
    };
    let h = channel::channel_vector(geom, &loc, FieldModel::FarField);
    let scale = 1.0 / h.norm_sq().sqrt();
    h.entries().iter().map(|e| e * scale).collect()
}

/// Conventional baseline: steer a far-field beam at Bob's angle and evaluate
/// the secrecy rate on channels built with `eval_mode`.
///
/// On far-field channels at a shared angle both gains are the full `n_t`, so
/// the baseline meets the capacity bound exactly; on exact near-field
/// channels it collapses, which is the gap the optimizer exploits.
pub fn traditional_baseline(
    geom: &UpaGeometry,
    loc_b: &ReceiverLocation,
    loc_e: &ReceiverLocation,
    budget: &LinkBudget,
    eval_mode: FieldModel,
) -> Result<SecrecyReport> {
    let w = farfield_mrt_beamformer(geom, loc_b.angle_rad);
    let h_b = channel::channel_vector(geom, loc_b, eval_mode);
    let h_e = channel::channel_vector(geom, loc_e, eval_mode);
    let alpha_b = channel::path_gain(geom.carrier_hz(), loc_b.range_m)?;
    let alpha_e = channel::path_gain(geom.carrier_hz(), loc_e.range_m)?;
    secrecy_rate(&w, &h_b, &h_e, alpha_b, alpha_e, budget)
}
