//! Chebyshev series on an interval, with complex coefficients. Backs the
//! numeric profile representation: fits are adaptive (degree doubling until
//! the coefficient tail is negligible), evaluation is Clenshaw, and
//! differentiation/antidifferentiation act on coefficients.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

type C = Complex64;

pub const FIT_TAIL_TOL: f64 = 1e-13;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ChebSeries {
    pub dom: (f64, f64),
    /// Chebyshev coefficients a_k of Σ' a_k T_k(x), x mapped from dom to [-1,1].
    pub coeffs: Vec<C>,
}

impl ChebSeries {
    pub fn zero(dom: (f64, f64)) -> Self {
        ChebSeries { dom, coeffs: vec![] }
    }

    fn to_unit(&self, w: f64) -> f64 {
        let (a, b) = self.dom;
        (2.0 * w - a - b) / (b - a)
    }

    /// Chebyshev–Lobatto points of degree n on dom, ascending in ω.
    pub fn lobatto_points(dom: (f64, f64), n: usize) -> Vec<f64> {
        let (a, b) = dom;
        (0..=n)
            .map(|j| {
                let x = (std::f64::consts::PI * j as f64 / n as f64).cos();
                0.5 * (a + b) - 0.5 * (b - a) * x
            })
            .collect()
    }

    /// Interpolant through values at `lobatto_points(dom, n)` (ascending order).
    pub fn from_lobatto_values(dom: (f64, f64), values: &[C]) -> Self {
        let n = values.len() - 1;
        if n == 0 {
            return ChebSeries {
                dom,
                coeffs: vec![values[0]],
            };
        }
        // values[j] corresponds to x_j = -cos(pi j / n) (ascending ω);
        // standard DCT-I uses f(cos(pi j / n)), so reverse.
        let mut coeffs = vec![C::new(0.0, 0.0); n + 1];
        for (k, ck) in coeffs.iter_mut().enumerate() {
            let mut s = C::new(0.0, 0.0);
            for (j, &v) in values.iter().enumerate() {
                let jj = n - j; // index in standard orientation
                let weight = if jj == 0 || jj == n { 0.5 } else { 1.0 };
                let ang = std::f64::consts::PI * (jj * k) as f64 / n as f64;
                s += v * (weight * ang.cos());
            }
            *ck = s * (2.0 / n as f64);
        }
        coeffs[0] *= 0.5;
        coeffs[n] *= 0.5;
        let mut out = ChebSeries { dom, coeffs };
        out.trim();
        out
    }

    /// Adaptive fit: doubles the degree until the coefficient tail is below
    /// `tol` relative to the largest coefficient.
    pub fn fit(dom: (f64, f64), f: &dyn Fn(f64) -> C, tol: f64) -> Self {
        let mut n = 64usize;
        loop {
            let pts = Self::lobatto_points(dom, n);
            let vals: Vec<C> = pts.iter().map(|&w| f(w)).collect();
            let series = Self::from_lobatto_values(dom, &vals);
            let max = series
                .coeffs
                .iter()
                .map(|c| c.norm())
                .fold(0.0f64, f64::max);
            let tail = series
                .coeffs
                .iter()
                .rev()
                .take(4)
                .map(|c| c.norm())
                .fold(0.0f64, f64::max);
            if max == 0.0 || tail <= tol * max || n >= 4096 {
                return series;
            }
            n *= 2;
        }
    }

    fn trim(&mut self) {
        let max = self
            .coeffs
            .iter()
            .map(|c| c.norm())
            .fold(0.0f64, f64::max);
        let cut = 1e-16 * max;
        while self.coeffs.len() > 1 && self.coeffs.last().is_some_and(|c| c.norm() <= cut) {
            self.coeffs.pop();
        }
        if max == 0.0 {
            self.coeffs.clear();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, w: f64) -> C {
        if self.coeffs.is_empty() {
            return C::new(0.0, 0.0);
        }
        let x = self.to_unit(w);
        let mut b1 = C::new(0.0, 0.0);
        let mut b2 = C::new(0.0, 0.0);
        for &a in self.coeffs.iter().skip(1).rev() {
            let b0 = a + 2.0 * x * b1 - b2;
            b2 = b1;
            b1 = b0;
        }
        self.coeffs[0] + x * b1 - b2
    }

    pub fn deriv(&self) -> ChebSeries {
        let n = self.coeffs.len();
        if n <= 1 {
            return ChebSeries::zero(self.dom);
        }
        let mut d = vec![C::new(0.0, 0.0); n - 1];
        let scale = 2.0 / (self.dom.1 - self.dom.0);
        // recurrence: d_{k-1} = d_{k+1} + 2k a_k (unit interval), then scale
        let mut dkp1 = C::new(0.0, 0.0);
        let mut dkp2 = C::new(0.0, 0.0);
        for k in (1..n).rev() {
            let dk = dkp2 + 2.0 * k as f64 * self.coeffs[k];
            d[k - 1] = dk;
            dkp2 = dkp1;
            dkp1 = dk;
            // shift: careful — recurrence couples k-1 and k+1
            std::mem::swap(&mut dkp1, &mut dkp2);
        }
        d[0] *= 0.5;
        let mut out = ChebSeries {
            dom: self.dom,
            coeffs: d.into_iter().map(|c| c * scale).collect(),
        };
        out.trim();
        out
    }

    /// Antiderivative vanishing at the left endpoint.
    pub fn antideriv(&self) -> ChebSeries {
        let n = self.coeffs.len();
        if n == 0 {
            return ChebSeries::zero(self.dom);
        }
        let half = 0.5 * (self.dom.1 - self.dom.0) / 2.0 * 2.0; // (b-a)/2
        let h = half / 2.0 * 2.0;
        let _ = h;
        let scale = 0.5 * (self.dom.1 - self.dom.0);
        let mut a = self.coeffs.clone();
        a.resize(n + 2, C::new(0.0, 0.0));
        let mut out = vec![C::new(0.0, 0.0); n + 1];
        for k in 1..=n {
            let prev = a[k - 1];
            let next = a[k + 1];
            let mut v = (prev - next) / (2.0 * k as f64);
            if k == 1 {
                v = (2.0 * prev - next) / 2.0; // a_0 enters with weight 1 (T_0' convention)
            }
            out[k] = v * scale;
        }
        let mut series = ChebSeries {
            dom: self.dom,
            coeffs: out,
        };
        let left = series.eval(self.dom.0);
        if series.coeffs.is_empty() {
            series.coeffs.push(-left);
        } else {
            series.coeffs[0] -= left;
        }
        series.trim();
        series
    }

    pub fn scale(&self, f: C) -> ChebSeries {
        let mut out = self.clone();
        for c in &mut out.coeffs {
            *c *= f;
        }
        out.trim();
        out
    }

    pub fn add(&self, other: &ChebSeries) -> ChebSeries {
        assert!(
            (self.dom.0 - other.dom.0).abs() < 1e-12 && (self.dom.1 - other.dom.1).abs() < 1e-12,
            "domain mismatch in ChebSeries::add"
        );
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![C::new(0.0, 0.0); n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, &c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        let mut out = ChebSeries {
            dom: self.dom,
            coeffs,
        };
        out.trim();
        out
    }
}
