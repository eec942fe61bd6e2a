//! Per-bit, per-hop link energy built from the received-energy requirement,
//! the Friis path loss, amplifier drain efficiency and circuit power.

use std::f64::consts::PI;

use crate::error::{ConfigError, DomainError};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PerBitLinkParams {
    /// Required energy per bit at the receiver, J/bit.
    pub e_b: f64,
    /// Bit rate, bit/s.
    pub r_b: f64,
    pub g_t: f64,
    pub g_r: f64,
    /// Carrier wavelength, m.
    pub wavelength: f64,
    /// Link margin.
    pub m_l: f64,
    /// Fading margin.
    pub m_f: f64,
    /// Amplifier inefficiency factor; P_amp = (1 + alpha) * P_out.
    pub alpha_drain: f64,
    /// Transmitter circuit power, W.
    pub p_tx_elec: f64,
    /// Receiver circuit power, W.
    pub p_rx_elec: f64,
}

impl Default for PerBitLinkParams {
    /// Reference set: 2.4 GHz carrier, unity gains and margins, 1 Mb/s,
    /// 10 mW circuit power on each side.
    fn default() -> Self {
        Self {
            e_b: 1e-10,
            r_b: 1e6,
            g_t: 1.0,
            g_r: 1.0,
            wavelength: 0.125,
            m_l: 1.0,
            m_f: 1.0,
            alpha_drain: 0.5,
            p_tx_elec: 10e-3,
            p_rx_elec: 10e-3,
        }
    }
}

impl PerBitLinkParams {
    pub fn validate(&self) -> Result<(), ConfigError> {
        let fields = [
            ("e_b", self.e_b),
            ("r_b", self.r_b),
            ("g_t", self.g_t),
            ("g_r", self.g_r),
            ("wavelength", self.wavelength),
            ("m_l", self.m_l),
            ("m_f", self.m_f),
            ("alpha_drain", self.alpha_drain),
            ("p_tx_elec", self.p_tx_elec),
            ("p_rx_elec", self.p_rx_elec),
        ];
        for (name, v) in fields {
            if !(v > 0.0 && v.is_finite()) {
                return Err(ConfigError::new(name, v, "must be > 0"));
            }
        }
        Ok(())
    }

    fn check_distance(distance: f64) -> Result<(), DomainError> {
        if distance > 0.0 && distance.is_finite() {
            Ok(())
        } else {
            Err(DomainError::new("distance", distance, "must be > 0"))
        }
    }

    /// Radiated power needed to deliver `e_b` per bit at `distance`.
    pub fn output_power(&self, distance: f64) -> Result<f64, DomainError> {
        Self::check_distance(distance)?;
        let path = (4.0 * PI * distance).powi(2) / (self.g_t * self.g_r * self.wavelength.powi(2));
        Ok(self.e_b * self.r_b * path * self.m_l * self.m_f)
    }

    /// Power drawn by the amplifier, `(1 + alpha) * P_out`.
    pub fn amp_power(&self, distance: f64) -> Result<f64, DomainError> {
        Ok((1.0 + self.alpha_drain) * self.output_power(distance)?)
    }

    /// Circuit energy per bit, independent of distance.
    pub fn circuit_energy_per_bit(&self) -> f64 {
        self.p_tx_elec / self.r_b + self.p_rx_elec / self.r_b
    }

    /// Total energy per bit for one hop of `distance` meters.
    pub fn per_hop_energy(&self, distance: f64) -> Result<f64, DomainError> {
        Self::check_distance(distance)?;
        let amp = (1.0 + self.alpha_drain)
            * self.e_b
            * (4.0 * PI * distance).powi(2)
            * self.m_l
            * self.m_f
            / (self.g_t * self.g_r * self.wavelength.powi(2));
        Ok(amp + self.p_tx_elec / self.r_b + self.p_rx_elec / self.r_b)
    }
}
