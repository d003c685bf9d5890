use crate::{Error, NeumaierSum, Result};

/// Riemann zeta for real `lambda > 1`, with absolute error below `eps`.
///
/// `Σ_{m<N} m^-λ` is summed directly. The tail `Σ_{m≥N} m^-λ` is the
/// trapezoid estimate `∫_N^∞ x^-λ dx + N^-λ/2` plus a correction in
/// `[0, E]`, where `E = (f''(N) + |f'(N)|)/12` bounds the trapezoid error of
/// the convex summand; the midpoint `E/2` is used and `N` doubles until
/// `E/2 < eps`.
pub fn zeta(lambda: f64, eps: f64) -> Result<f64> {
    if !(lambda > 1.0) || !lambda.is_finite() {
        return Err(Error::param("lambda", format!("zeta series diverges for λ = {lambda}; need λ > 1")));
    }
    if !(eps > 0.0) {
        return Err(Error::param("eps", format!("tolerance must be positive, got {eps}")));
    }
    let f = |x: f64| x.powf(-lambda);
    let error_bound = |x: f64| (lambda * (lambda + 1.0) * x.powf(-lambda - 2.0) + lambda * x.powf(-lambda - 1.0)) / 12.0;
    let mut big_n = 8.0f64;
    while error_bound(big_n) / 2.0 >= eps {
        big_n *= 2.0;
    }
    let mut sum: NeumaierSum = (1..big_n as u64).map(|m| f(m as f64)).collect();
    sum.add(big_n.powf(1.0 - lambda) / (lambda - 1.0));
    sum.add(f(big_n) / 2.0);
    sum.add(error_bound(big_n) / 2.0);
    Ok(sum.value())
}
