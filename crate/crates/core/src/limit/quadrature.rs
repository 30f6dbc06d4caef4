//! Quadrature rules and a fixed-topology summation.

/// Pairwise (cascade) sum with a topology fixed by the slice length, so the
/// result does not depend on how the inputs were produced.
pub fn pairwise_sum(values: &[f64]) -> f64 {
    const LEAF: usize = 16;
    if values.len() <= LEAF {
        return values.iter().sum();
    }
    let mid = values.len() / 2;
    pairwise_sum(&values[..mid]) + pairwise_sum(&values[mid..])
}

/// `n` midpoints of `[a, b)` and the common weight `(b − a)/n`.
pub fn midpoints(a: f64, b: f64, n: usize) -> (Vec<f64>, f64) {
    let h = (b - a) / n as f64;
    ((0..n).map(|i| a + h * (i as f64 + 0.5)).collect(), h)
}

/// Half-width of the truncated `t` range of the tanh–sinh rule. Beyond this
/// the nodes would round onto the interval endpoints in double precision.
const TANH_SINH_T: f64 = 3.0;

/// Tanh–sinh (double-exponential) nodes on `(a, b)` from a midpoint grid of
/// `n` points in the transformed variable. Endpoint singularities of
/// algebraic or logarithmic type are integrated to near machine precision.
pub fn tanh_sinh(a: f64, b: f64, n: usize) -> Vec<(f64, f64)> {
    let (ts, h) = midpoints(-TANH_SINH_T, TANH_SINH_T, n);
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let k = std::f64::consts::FRAC_PI_2;
    ts.into_iter()
        .map(|t| {
            let u = k * t.sinh();
            let w = h * k * t.cosh() / u.cosh().powi(2);
            (mid + half * u.tanh(), half * w)
        })
        .collect()
}
