//! Gauss–Legendre quadrature nodes and weights.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

fn cache() -> &'static Mutex<HashMap<usize, Arc<(Vec<f64>, Vec<f64>)>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<(Vec<f64>, Vec<f64>)>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Nodes and weights on [-1, 1], computed by Newton iteration on P_n.
pub fn gauss_legendre(n: usize) -> Arc<(Vec<f64>, Vec<f64>)> {
    assert!(n >= 1);
    if let Some(hit) = cache().lock().unwrap().get(&n) {
        return hit.clone();
    }
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Tricomi-style initial guess
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // evaluate P_n and P_n' by recurrence
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    let arc = Arc::new((nodes, weights));
    cache().lock().unwrap().insert(n, arc.clone());
    arc
}

/// Nodes and weights mapped to [a, b].
pub fn gauss_legendre_on(n: usize, a: f64, b: f64) -> (Vec<f64>, Vec<f64>) {
    let gl = gauss_legendre(n);
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let nodes = gl.0.iter().map(|&x| mid + half * x).collect();
    let weights = gl.1.iter().map(|&w| w * half).collect();
    (nodes, weights)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_order_values() {
        let gl = gauss_legendre(2);
        let s3 = 1.0 / 3f64.sqrt();
        assert!((gl.0[0] + s3).abs() < 1e-15);
        assert!((gl.0[1] - s3).abs() < 1e-15);
        assert!((gl.1[0] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn integrates_polynomials_exactly() {
        // degree 2n-1 exactness
        for n in [5usize, 16, 64] {
            let (x, w) = gauss_legendre_on(n, -0.3, 2.1);
            let deg = 2 * n - 1;
            let integral: f64 = x
                .iter()
                .zip(&w)
                .map(|(&xi, &wi)| wi * xi.powi(deg as i32))
                .sum();
            let exact = (2.1f64.powi(deg as i32 + 1) - (-0.3f64).powi(deg as i32 + 1))
                / (deg as f64 + 1.0);
            assert!(
                (integral - exact).abs() <= 1e-13 * exact.abs().max(1.0),
                "n={n} got {integral} want {exact}"
            );
        }
    }

    #[test]
    fn weights_sum_to_length() {
        let (_, w) = gauss_legendre_on(33, 1.0, 4.5);
        let s: f64 = w.iter().sum();
        assert!((s - 3.5).abs() < 1e-13);
    }
}
