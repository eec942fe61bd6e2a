use crate::error::DomainError;

/// Sensitivity constant of the optimal-cluster-count relation.
pub const KOPT_CONSTANT: f64 = 0.5855;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KoptInputs {
    pub n: f64,
    pub e_fs: f64,
    pub e_mp: f64,
    pub half_side: f64,
    pub d_to_bs: f64,
    pub e_elec: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Kopt {
    pub value: f64,
    /// Nearest integer, at least 1.
    pub rounded: usize,
}

/// `sqrt(0.5855 N e_fs a^2 / (e_mp d^4 - E_elec))`.
pub fn k_opt(inputs: &KoptInputs) -> Result<Kopt, DomainError> {
    let positive = [
        ("n", inputs.n),
        ("e_fs", inputs.e_fs),
        ("e_mp", inputs.e_mp),
        ("half_side", inputs.half_side),
        ("d_to_bs", inputs.d_to_bs),
        ("e_elec", inputs.e_elec),
    ];
    for (name, v) in positive {
        if !(v > 0.0 && v.is_finite()) {
            return Err(DomainError::new(name, v, "must be > 0"));
        }
    }
    let denominator = inputs.e_mp * inputs.d_to_bs.powi(4) - inputs.e_elec;
    if denominator.is_nan() || denominator <= 0.0 {
        return Err(DomainError::new(
            "d_to_bs",
            inputs.d_to_bs,
            "optimal cluster count requires e_mp * d_to_bs^4 > e_elec",
        ));
    }
    let value =
        (KOPT_CONSTANT * inputs.n * inputs.e_fs * inputs.half_side.powi(2) / denominator).sqrt();
    Ok(Kopt {
        value,
        rounded: (value.round() as usize).max(1),
    })
}
