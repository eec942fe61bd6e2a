use rand::Rng;

use crate::error::ConfigError;
use crate::model::{NetworkConfig, Point};

pub const DEFAULT_DROP_MAX: f64 = 0.3;

/// Distance-dependent loss: `p_max * min(1, d^2 / d_ref^2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DropModel {
    pub p_max: f64,
    pub d_ref: f64,
}

impl DropModel {
    /// Reference distance: field diagonal plus the base station's offset
    /// outside the field.
    pub fn default_reference(config: &NetworkConfig) -> f64 {
        let field = config.field();
        field.diagonal() + field.distance_outside(config.bs_position)
    }

    pub fn for_config(
        config: &NetworkConfig,
        p_max: f64,
        d_ref: Option<f64>,
    ) -> Result<Self, ConfigError> {
        if !(0.0..=1.0).contains(&p_max) {
            return Err(ConfigError::new("p_drop_max", p_max, "must lie in [0, 1]"));
        }
        let d_ref = d_ref.unwrap_or_else(|| Self::default_reference(config));
        if !(d_ref > 0.0 && d_ref.is_finite()) {
            return Err(ConfigError::new("d_ref", d_ref, "must be > 0"));
        }
        Ok(Self { p_max, d_ref })
    }

    pub fn lossless() -> Self {
        Self {
            p_max: 0.0,
            d_ref: 1.0,
        }
    }

    pub fn probability(&self, distance: f64) -> f64 {
        let r = distance * distance / (self.d_ref * self.d_ref);
        self.p_max * r.min(1.0)
    }

    /// One draw per packet; `true` when the packet arrives.
    pub fn delivers<R: Rng + ?Sized>(&self, rng: &mut R, from: Point, to: Point) -> bool {
        let p = self.probability(from.distance(to));
        rng.random::<f64>() >= p
    }
}
