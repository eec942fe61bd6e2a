//! Gauss-Legendre rules on [0, 1].

/// Nodes and weights of the `n`-point rule mapped to [0, 1].
pub fn gauss_legendre_unit(n: usize) -> Vec<(f64, f64)> {
    assert!(n >= 1);
    let mut rule = Vec::with_capacity(n);
    for i in 1..=n {
        // Chebyshev guess, then Newton on P_n
        let mut x = (std::f64::consts::PI * (i as f64 - 0.25) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            let pn = if n == 1 { x } else { p1 };
            let pm = if n == 1 { 1.0 } else { p0 };
            dp = n as f64 * (x * pn - pm) / (x * x - 1.0);
            let step = pn / dp;
            x -= step;
            if step.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.push((0.5 * (x + 1.0), 0.5 * w));
    }
    rule
}

/// Tensor-product rule over the unit square.
pub fn integrate_unit_square(n: usize, f: impl Fn(f64, f64) -> f64) -> f64 {
    let rule = gauss_legendre_unit(n);
    rule.iter()
        .map(|&(u, wu)| wu * rule.iter().map(|&(v, wv)| wv * f(u, v)).sum::<f64>())
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_for_polynomials() {
        for n in [1, 2, 5, 12] {
            let w: f64 = gauss_legendre_unit(n).iter().map(|r| r.1).sum();
            assert!((w - 1.0).abs() < 1e-14);
        }
        // degree 2n-1 exactness
        let r = gauss_legendre_unit(4);
        let i: f64 = r.iter().map(|&(x, w)| w * x.powi(7)).sum();
        assert!((i - 0.125).abs() < 1e-14);
        let sq = integrate_unit_square(6, |x, y| x * x * y);
        assert!((sq - 1.0 / 6.0).abs() < 1e-14);
    }
}
