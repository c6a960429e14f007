//! LoS channel vectors, Friis path gain and link-budget arithmetic.
//!
//! A channel vector collects the per-element phase factors
//! `exp(j 2 pi f0 L(i)/c)` with the residual path length `L` taken from the
//! exact spherical-wave form or the planar far-field form. Entries are unit
//! modulus by construction; amplitude lives separately in the scalar Friis
//! gain so the optimizer can work with rank-structured operators.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::geometry::{self, ReceiverLocation, UpaGeometry};
use crate::SPEED_OF_LIGHT;

/// Residual-path model used when building channel vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldModel {
    /// Spherical-wave residual; depends on range and angle.
    Exact,
    /// Planar-wave residual; depends on the angle only.
    FarField,
}

impl std::fmt::Display for FieldModel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldModel::Exact => write!(f, "exact"),
            FieldModel::FarField => write!(f, "far"),
        }
    }
}

/// Unit-modulus steering entries for one receiver.
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelVector {
    entries: Vec<Complex64>,
    mode: FieldModel,
}

impl ChannelVector {
    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn mode(&self) -> FieldModel {
        self.mode
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Squared Euclidean norm; equals `n_t` up to rounding.
    pub fn norm_sq(&self) -> f64 {
        self.entries.iter().map(|e| e.norm_sqr()).sum()
    }
}

/// Free-space LoS amplitude gain `alpha = c / (4 pi f r)` (Friis).
pub fn path_gain(carrier_hz: f64, range_m: f64) -> Result<f64> {
    if !(carrier_hz > 0.0) {
        return Err(Error::NonPositive {
            name: "carrier_hz",
            value: carrier_hz,
        });
    }
    if !(range_m > 0.0) {
        return Err(Error::NonPositive {
            name: "range_m",
            value: range_m,
        });
    }
    Ok(SPEED_OF_LIGHT / (4.0 * std::f64::consts::PI * carrier_hz * range_m))
}

/// Build the steering vector for `loc` under the requested field model.
///
/// Entry `i` is `exp(j 2 pi f0 L(i)/c)`; the far-field branch never touches
/// the range, so two receivers at the same angle produce bitwise-identical
/// vectors there.
pub fn channel_vector(geom: &UpaGeometry, loc: &ReceiverLocation, mode: FieldModel) -> ChannelVector {
    let k = 2.0 * std::f64::consts::PI * geom.carrier_hz() / SPEED_OF_LIGHT;
    let entries = (1..=geom.n_t())
        .map(|linear| {
            let idx = geom.antenna_index(linear).expect("index in range");
            let residual = match mode {
                FieldModel::Exact => geometry::exact_residual(geom, &idx, loc),
                FieldModel::FarField => geometry::farfield_residual(geom, &idx, loc.angle_rad),
            };
            Complex64::from_polar(1.0, k * residual)
        })
        .collect();
    ChannelVector { entries, mode }
}

/// Transmit power and noise floor, both in watts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinkBudget {
    pub tx_power_w: f64,
    pub noise_w: f64,
}

impl LinkBudget {
    pub fn new(tx_power_w: f64, noise_w: f64) -> Result<Self> {
        if !tx_power_w.is_finite() || tx_power_w < 0.0 {
            return Err(Error::InvalidBudget(format!(
                "tx power must be finite and >= 0, got {tx_power_w}"
            )));
        }
        if !noise_w.is_finite() || noise_w <= 0.0 {
            return Err(Error::InvalidBudget(format!(
                "noise power must be finite and > 0, got {noise_w}"
            )));
        }
        Ok(Self {
            tx_power_w,
            noise_w,
        })
    }

    pub fn from_dbm(tx_power_dbm: f64, noise_dbm: f64) -> Result<Self> {
        Self::new(dbm_to_watts(tx_power_dbm), dbm_to_watts(noise_dbm))
    }
}

/// `|w^H h|^2` for a unit-norm beamformer; lies in `[0, n_t]`.
pub fn beamforming_gain(w: &[Complex64], h: &ChannelVector) -> Result<f64> {
    check_unit_norm(w)?;
    let dot: Complex64 = w
        .iter()
        .zip(h.entries())
        .map(|(wi, hi)| wi.conj() * hi)
        .sum();
    Ok(dot.norm_sqr())
}

pub(crate) fn check_unit_norm(w: &[Complex64]) -> Result<()> {
    let norm_sq: f64 = w.iter().map(|x| x.norm_sqr()).sum();
    if (norm_sq - 1.0).abs() > 1e-9 {
        return Err(Error::UnnormalizedBeamformer { norm_sq });
    }
    Ok(())
}

/// Received SNR `P * gain * alpha^2 / sigma^2`.
pub fn received_snr(budget: &LinkBudget, gain: f64, alpha: f64) -> f64 {
    budget.tx_power_w * gain * alpha * alpha / budget.noise_w
}

/// dBm to watts: `10^((x - 30)/10)`.
pub fn dbm_to_watts(x_dbm: f64) -> f64 {
    10f64.powf((x_dbm - 30.0) / 10.0)
}

/// Watts to dBm; rejects non-positive input rather than returning -inf.
pub fn watts_to_dbm(x_w: f64) -> Result<f64> {
    if !(x_w > 0.0) {
        return Err(Error::NonPositive {
            name: "x_w",
            value: x_w,
        });
    }
    Ok(10.0 * x_w.log10() + 30.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_6;

    const F0: f64 = 300e9;

    fn table1_geometry() -> UpaGeometry {
        let lambda = SPEED_OF_LIGHT / F0;
        UpaGeometry::new(32, 32, 5.0 * lambda, F0).unwrap()
    }

    fn table1_budget() -> LinkBudget {
        LinkBudget::from_dbm(10.0, -80.0).unwrap()
    }

    #[test]
    fn path_gain_reference_values() {
        // 40-digit reference of c / (4 pi f r)
        let a_b = path_gain(F0, 10.0).unwrap();
        assert!((a_b - 7.9522419320615704315e-6).abs() < 1e-20);
        let a_e = path_gain(F0, 5.0).unwrap();
        assert!((a_e - 1.5904483864123140863e-5).abs() < 1e-19);
        // Table 1 ranges force the Friis ratio alpha_E = 2 alpha_B
        assert!((a_e / a_b - 2.0).abs() < 1e-12);
    }

    #[test]
    fn path_gain_halving_range_doubles_gain() {
        let g1 = path_gain(12e9, 7.0).unwrap();
        let g2 = path_gain(12e9, 3.5).unwrap();
        assert!((g2 / g1 - 2.0).abs() < 1e-12);
    }

    #[test]
    fn path_gain_rejects_nonpositive() {
        assert!(path_gain(0.0, 1.0).is_err());
        assert!(path_gain(1e9, 0.0).is_err());
    }

    #[test]
    fn single_antenna_channel_is_unity() {
        let g = UpaGeometry::new(1, 1, 1e-3, F0).unwrap();
        let loc = ReceiverLocation::new(3.0, 0.7).unwrap();
        for mode in [FieldModel::Exact, FieldModel::FarField] {
            let h = channel_vector(&g, &loc, mode);
            assert_eq!(h.len(), 1);
            assert_eq!(h.entries()[0], Complex64::new(1.0, 0.0));
        }
    }

    #[test]
    fn channel_entries_unit_modulus_norm_nt() {
        let g = table1_geometry();
        let loc = ReceiverLocation::new(10.0, FRAC_PI_6).unwrap();
        for mode in [FieldModel::Exact, FieldModel::FarField] {
            let h = channel_vector(&g, &loc, mode);
            for e in h.entries() {
                assert!((e.norm() - 1.0).abs() < 1e-12);
            }
            let n_t = g.n_t() as f64;
            assert!((h.norm_sq() - n_t).abs() / n_t < 1e-9);
        }
    }

    #[test]
    fn farfield_equal_angles_identical_vectors() {
        let g = table1_geometry();
        let bob = ReceiverLocation::new(10.0, FRAC_PI_6).unwrap();
        let eve = ReceiverLocation::new(5.0, FRAC_PI_6).unwrap();
        let h_b = channel_vector(&g, &bob, FieldModel::FarField);
        let h_e = channel_vector(&g, &eve, FieldModel::FarField);
        assert_eq!(h_b.entries(), h_e.entries());
    }

    #[test]
    fn exact_mode_decorrelates_ranges() {
        let g = table1_geometry();
        let bob = ReceiverLocation::new(10.0, FRAC_PI_6).unwrap();
        let eve = ReceiverLocation::new(5.0, FRAC_PI_6).unwrap();
        let h_b = channel_vector(&g, &bob, FieldModel::Exact);
        let h_e = channel_vector(&g, &eve, FieldModel::Exact);
        assert_ne!(h_b.entries(), h_e.entries());
        let dot: Complex64 = h_b
            .entries()
            .iter()
            .zip(h_e.entries())
            .map(|(a, b)| a.conj() * b)
            .sum();
        let rho = dot.norm() / g.n_t() as f64;
        assert!(rho < 1.0, "rho = {rho}");
        // Table 1 scenario leaves the channels strongly uncorrelated
        assert!(rho < 0.2, "rho = {rho}");
    }

    #[test]
    fn matched_beamformer_achieves_full_gain() {
        let g = table1_geometry();
        let loc = ReceiverLocation::new(10.0, FRAC_PI_6).unwrap();
        let h = channel_vector(&g, &loc, FieldModel::Exact);
        let scale = 1.0 / (h.norm_sq()).sqrt();
        let w: Vec<Complex64> = h.entries().iter().map(|e| e * scale).collect();
        let gain = beamforming_gain(&w, &h).unwrap();
        let n_t = g.n_t() as f64;
        assert!((gain - n_t).abs() / n_t < 1e-9);
    }

    #[test]
    fn orthogonal_beamformer_zero_gain() {
        let g = UpaGeometry::new(2, 1, 1e-3, F0).unwrap();
        let loc = ReceiverLocation::new(4.0, 0.3).unwrap();
        let h = channel_vector(&g, &loc, FieldModel::Exact);
        let e = h.entries();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        // (h0, -h1) component pattern is orthogonal to (h0, h1) for unit-modulus entries
        let w = vec![e[0] * s, -e[1] * s];
        let gain = beamforming_gain(&w, &h).unwrap();
        assert!(gain.abs() < 1e-18);
    }

    #[test]
    fn gain_bounded_by_nt_and_phase_invariant() {
        let g = UpaGeometry::new(4, 4, 3e-3, 20e9).unwrap();
        let loc = ReceiverLocation::new(2.0, -0.4).unwrap();
        let h = channel_vector(&g, &loc, FieldModel::Exact);
        let n = g.n_t();
        let mut w: Vec<Complex64> = (0..n)
            .map(|k| Complex64::from_polar(1.0 / (n as f64).sqrt(), 0.37 * k as f64))
            .collect();
        let g0 = beamforming_gain(&w, &h).unwrap();
        assert!(g0 <= n as f64 + 1e-9);
        let rot = Complex64::from_polar(1.0, 1.234);
        for wi in &mut w {
            *wi *= rot;
        }
        let g1 = beamforming_gain(&w, &h).unwrap();
        assert!((g0 - g1).abs() <= 1e-9 * g0.max(1.0));
    }

    #[test]
    fn unnormalized_beamformer_rejected() {
        let g = UpaGeometry::new(2, 2, 1e-3, F0).unwrap();
        let loc = ReceiverLocation::new(1.0, 0.0).unwrap();
        let h = channel_vector(&g, &loc, FieldModel::Exact);
        let w = vec![Complex64::new(1.0, 0.0); 4];
        assert!(matches!(
            beamforming_gain(&w, &h),
            Err(Error::UnnormalizedBeamformer { .. })
        ));
    }

    #[test]
    fn received_snr_reference_value() {
        // Table 1 defaults with full gain n_t = 1024 at r = 10 m
        let snr = received_snr(&table1_budget(), 1024.0, path_gain(F0, 10.0).unwrap());
        assert!((snr - 64.755867387943258683).abs() < 1e-9, "snr = {snr}");
        // roughly 18.1 dB
        assert!((10.0 * snr.log10() - 18.11).abs() < 0.01);
    }

    #[test]
    fn received_snr_linearity_and_zero_power() {
        let b = table1_budget();
        let alpha = path_gain(F0, 10.0).unwrap();
        let zero = LinkBudget::new(0.0, b.noise_w).unwrap();
        assert_eq!(received_snr(&zero, 1024.0, alpha), 0.0);
        let double = LinkBudget::new(2.0 * b.tx_power_w, b.noise_w).unwrap();
        let ratio = received_snr(&double, 7.0, alpha) / received_snr(&b, 7.0, alpha);
        assert!((ratio - 2.0).abs() < 1e-12);
    }

    #[test]
    fn dbm_conversions() {
        assert!((dbm_to_watts(10.0) - 0.01).abs() < 1e-18);
        assert!((dbm_to_watts(-80.0) - 1e-11).abs() < 1e-26);
        for &x in &[-80.0, -3.0, 0.0, 10.0, 33.3] {
            let back = watts_to_dbm(dbm_to_watts(x)).unwrap();
            assert!((back - x).abs() <= 1e-12 * x.abs().max(1.0));
        }
        assert!(watts_to_dbm(0.0).is_err());
        assert!(watts_to_dbm(-1.0).is_err());
    }
}
