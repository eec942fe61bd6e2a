use super::geometry::{Field, Point};
use crate::error::ConfigError;

/// Immutable description of one deployment experiment.
///
/// Defaults reproduce the reference simulation environment: 100 nodes on a
/// 100 m x 100 m field, 0.5 J per node, election probability 0.1, and a base
/// station 50 m beyond the top edge.
#[derive(Debug, Clone, PartialEq)]
pub struct NetworkConfig {
    pub field_width: f64,
    pub field_height: f64,
    pub node_count: usize,
    pub bs_position: Point,
    pub initial_energy: f64,
    pub packet_bits: u64,
    pub p_opt: f64,
    pub max_rounds: u64,
    pub seed: u64,
}

impl Default for NetworkConfig {
    fn default() -> Self {
        Self {
            field_width: 100.0,
            field_height: 100.0,
            node_count: 100,
            bs_position: Point::new(50.0, 150.0),
            initial_energy: 0.5,
            packet_bits: 4000,
            p_opt: 0.1,
            max_rounds: 5000,
            seed: 1,
        }
    }
}

impl NetworkConfig {
    pub fn field(&self) -> Field {
        Field {
            width: self.field_width,
            height: self.field_height,
        }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if !(self.field_width > 0.0 && self.field_width.is_finite()) {
            return Err(ConfigError::new(
                "field_width",
                self.field_width,
                "must be > 0",
            ));
        }
        if !(self.field_height > 0.0 && self.field_height.is_finite()) {
            return Err(ConfigError::new(
                "field_height",
                self.field_height,
                "must be > 0",
            ));
        }
        if self.node_count < 1 {
            return Err(ConfigError::new("nodes", self.node_count, "must be >= 1"));
        }
        if !(self.p_opt > 0.0 && self.p_opt <= 1.0) {
            return Err(ConfigError::new(
                "p_opt",
                self.p_opt,
                "must satisfy 0 < p_opt <= 1",
            ));
        }
        if !(self.initial_energy > 0.0 && self.initial_energy.is_finite()) {
            return Err(ConfigError::new(
                "initial_energy",
                self.initial_energy,
                "must be > 0",
            ));
        }
        if self.packet_bits < 1 {
            return Err(ConfigError::new(
                "packet_bits",
                self.packet_bits,
                "must be >= 1",
            ));
        }
        if !(self.bs_position.x.is_finite() && self.bs_position.y.is_finite()) {
            return Err(ConfigError::new("bs", self.bs_position, "must be finite"));
        }
        Ok(())
    }
}
