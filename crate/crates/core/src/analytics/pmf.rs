/// Distribution of the number of heads elected in one round.
#[derive(Debug, Clone, PartialEq)]
pub struct ChCountDistribution {
    pub n: usize,
    pub p: f64,
    /// `pmf[k]` is the probability of exactly `k` heads.
    pub pmf: Vec<f64>,
}

/// Binomial(n, p) evaluated term by term in log space.
pub fn ch_count_pmf(n: usize, p: f64) -> ChCountDistribution {
    let mut pmf = vec![0.0; n + 1];
    if p <= 0.0 {
        pmf[0] = 1.0;
    } else if p >= 1.0 {
        pmf[n] = 1.0;
    } else {
        let (lp, lq) = (p.ln(), (-p).ln_1p());
        let nf = n as f64;
        // ln C(n, k) built up incrementally
        let mut ln_choose = 0.0;
        for (k, slot) in pmf.iter_mut().enumerate() {
            if k > 0 {
                ln_choose += (nf - (k as f64 - 1.0)).ln() - (k as f64).ln();
            }
            *slot = (ln_choose + k as f64 * lp + (nf - k as f64) * lq).exp();
        }
    }
    ChCountDistribution { n, p, pmf }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChStats {
    pub ave: f64,
    pub dev: f64,
    /// `dev / ave`; `None` when the mean is zero.
    pub cov: Option<f64>,
}

/// Mean, standard deviation and coefficient of variation of a count pmf.
pub fn ch_stats(dist: &ChCountDistribution) -> ChStats {
    let m1: f64 = dist
        .pmf
        .iter()
        .enumerate()
        .map(|(k, &pk)| k as f64 * pk)
        .sum();
    // centered second moment; E[k^2] - E[k]^2 cancels badly for large n
    let var: f64 = dist
        .pmf
        .iter()
        .enumerate()
        .map(|(k, &pk)| (k as f64 - m1).powi(2) * pk)
        .sum();
    let dev = var.max(0.0).sqrt();
    let cov = (m1 > 0.0).then(|| dev / m1);
    ChStats { ave: m1, dev, cov }
}

/// Same statistics from raw observed counts.
pub fn empirical_distribution(n: usize, p: f64, counts: &[usize]) -> ChCountDistribution {
    let mut pmf = vec![0.0; n + 1];
    for &c in counts {
        pmf[c.min(n)] += 1.0;
    }
    let total = counts.len().max(1) as f64;
    pmf.iter_mut().for_each(|v| *v /= total);
    ChCountDistribution { n, p, pmf }
}

/// Total-variation distance, `0.5 * sum |a_k - b_k|`.
pub fn total_variation(a: &[f64], b: &[f64]) -> f64 {
    let len = a.len().max(b.len());
    let at = |v: &[f64], i: usize| v.get(i).copied().unwrap_or(0.0);
    0.5 * (0..len).map(|i| (at(a, i) - at(b, i)).abs()).sum::<f64>()
}
