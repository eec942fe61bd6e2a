//! First-order radio model: electronics cost per bit plus a distance-dependent
//! amplifier cost that is quadratic below the crossover distance and quartic
//! beyond it.

use crate::error::{ConfigError, DomainError};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadioEnergyParams {
    /// Transceiver electronics, J/bit.
    pub e_elec: f64,
    /// Free-space amplifier, J/bit/m^2.
    pub e_fs: f64,
    /// Multi-path amplifier, J/bit/m^4.
    pub e_mp: f64,
    /// Data aggregation, J/bit/signal.
    pub e_da: f64,
}

impl Default for RadioEnergyParams {
    fn default() -> Self {
        Self {
            e_elec: 50e-9,
            e_fs: 10e-12,
            e_mp: 0.0013e-12,
            e_da: 5e-9,
        }
    }
}

impl RadioEnergyParams {
    /// Distance at which the free-space and multi-path amplifier terms agree.
    pub fn d_crossover(&self) -> f64 {
        (self.e_fs / self.e_mp).sqrt()
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        let fields = [
            ("e_elec", self.e_elec),
            ("e_fs", self.e_fs),
            ("e_mp", self.e_mp),
            ("e_da", self.e_da),
        ];
        for (name, v) in fields {
            if !(v > 0.0 && v.is_finite()) {
                return Err(ConfigError::new(name, v, "must be > 0"));
            }
        }
        Ok(())
    }

    /// Energy to transmit `bits` over `distance` meters.
    pub fn tx_energy(&self, bits: u64, distance: f64) -> Result<f64, DomainError> {
        if distance.is_nan() || distance < 0.0 {
            return Err(DomainError::new("distance", distance, "must be >= 0"));
        }
        let b = bits as f64;
        let d2 = distance * distance;
        let amp = if distance < self.d_crossover() {
            self.e_fs * d2
        } else {
            self.e_mp * d2 * d2
        };
        Ok(b * (self.e_elec + amp))
    }

    pub fn rx_energy(&self, bits: u64) -> f64 {
        self.e_elec * bits as f64
    }

    /// Energy to fuse `signals` incoming messages of `bits` each.
    pub fn aggregation_energy(&self, bits: u64, signals: u64) -> f64 {
        self.e_da * bits as f64 * signals as f64
    }
}
