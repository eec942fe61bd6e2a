use super::quadrature::integrate_unit_square;
use crate::error::DomainError;

/// Expected non-head population of one of `k` clusters over `n` nodes,
/// `n / k - 1`.
pub fn expected_members(n: usize, k: usize) -> Result<f64, DomainError> {
    if k == 0 {
        return Err(DomainError::new("k", 0.0, "must be >= 1"));
    }
    if k > n {
        return Err(DomainError::new(
            "k",
            k as f64,
            "must not exceed the node count",
        ));
    }
    Ok(n as f64 / k as f64 - 1.0)
}

const QUADRATURE_POINTS: usize = 24;

/// Mean distance from the center of a square of the given side to a point
/// uniform in it.
///
/// One eighth of the square, the triangle `0 <= y <= x <= s/2`, is mapped
/// to the unit square by `x = h u, y = h u v`; the integrand becomes
/// `h^3 u^2 sqrt(1 + v^2)`, smooth on the whole domain, so a fixed
/// Gauss-Legendre rule converges to machine precision.
pub fn mean_center_distance(side: f64) -> f64 {
    let h = side / 2.0;
    let triangle = integrate_unit_square(QUADRATURE_POINTS, |u, v| {
        h.powi(3) * u * u * (1.0 + v * v).sqrt()
    });
    8.0 * triangle / (side * side)
}

/// Expected member-to-head distance when `k` square cells tile a field of
/// half-side `half_side` and each head sits at its cell's center.
pub fn expected_dist_to_ch(half_side: f64, k: usize) -> Result<f64, DomainError> {
    if !(half_side > 0.0 && half_side.is_finite()) {
        return Err(DomainError::new("half_side", half_side, "must be > 0"));
    }
    if k == 0 {
        return Err(DomainError::new("k", 0.0, "must be >= 1"));
    }
    let side = 2.0 * half_side / (k as f64).sqrt();
    Ok(mean_center_distance(side))
}
