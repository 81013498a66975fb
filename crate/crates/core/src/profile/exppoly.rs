//! Exponential-polynomial closures: finite sums Σ p(ω) e^{μω} with complex
//! exponents and polynomial factors. Closed under differentiation, products
//! and exact integration, which keeps the analytic backend at round-off
//! accuracy through chain construction and biorthogonal pairings.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

type C = Complex64;

const MERGE_TOL: f64 = 1e-10;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExpTerm {
    pub mu: C,
    /// Polynomial in ω, coefficient of ω^k at index k.
    pub poly: Vec<C>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct ExpPoly {
    pub terms: Vec<ExpTerm>,
}

fn poly_eval(p: &[C], x: f64) -> C {
    let mut acc = C::new(0.0, 0.0);
    for &c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn poly_deriv(p: &[C]) -> Vec<C> {
    if p.len() <= 1 {
        return vec![];
    }
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(k, &c)| c * k as f64)
        .collect()
}

fn poly_mul(a: &[C], b: &[C]) -> Vec<C> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![C::new(0.0, 0.0); a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_trim(p: &mut Vec<C>) {
    while p.last().is_some_and(|c| c.norm() == 0.0) {
        p.pop();
    }
}

impl ExpPoly {
    pub fn zero() -> Self {
        ExpPoly { terms: vec![] }
    }

    pub fn constant(c: C) -> Self {
        ExpPoly {
            terms: vec![ExpTerm {
                mu: C::new(0.0, 0.0),
                poly: vec![c],
            }],
        }
    }

    /// Single term p(ω) e^{μω}.
    pub fn term(mu: C, poly: Vec<C>) -> Self {
        let mut e = ExpPoly {
            terms: vec![ExpTerm { mu, poly }],
        };
        e.normalize();
        e
    }

    pub fn exp(mu: C) -> Self {
        Self::term(mu, vec![C::new(1.0, 0.0)])
    }

    /// Merges terms with coinciding exponents and drops vanishing ones.
    pub fn normalize(&mut self) {
        let mut merged: Vec<ExpTerm> = Vec::new();
        for t in self.terms.drain(..) {
            let mut poly = t.poly;
            poly_trim(&mut poly);
            if poly.is_empty() {
                continue;
            }
            if let Some(prev) = merged
                .iter_mut()
                .find(|p| (p.mu - t.mu).norm() <= MERGE_TOL * (1.0 + p.mu.norm()))
            {
                let n = prev.poly.len().max(poly.len());
                prev.poly.resize(n, C::new(0.0, 0.0));
                for (k, c) in poly.into_iter().enumerate() {
                    prev.poly[k] += c;
                }
                poly_trim(&mut prev.poly);
            } else {
                merged.push(ExpTerm { mu: t.mu, poly });
            }
        }
        merged.retain(|t| !t.poly.is_empty());
        merged.sort_by(|a, b| {
            (a.mu.re, a.mu.im)
                .partial_cmp(&(b.mu.re, b.mu.im))
                .unwrap()
        });
        self.terms = merged;
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval(&self, w: f64) -> C {
        self.terms
            .iter()
            .map(|t| poly_eval(&t.poly, w) * (t.mu * w).exp())
            .sum()
    }

    pub fn deriv(&self) -> ExpPoly {
        let mut out = ExpPoly::zero();
        for t in &self.terms {
            // (p e^{μω})' = (p' + μ p) e^{μω}
            let mut poly = poly_deriv(&t.poly);
            poly.resize(poly.len().max(t.poly.len()), C::new(0.0, 0.0));
            for (k, &c) in t.poly.iter().enumerate() {
                poly[k] += t.mu * c;
            }
            out.terms.push(ExpTerm { mu: t.mu, poly });
        }
        out.normalize();
        out
    }

    pub fn deriv_n(&self, n: usize) -> ExpPoly {
        let mut cur = self.clone();
        for _ in 0..n {
            cur = cur.deriv();
        }
        cur
    }

    pub fn add(&self, other: &ExpPoly) -> ExpPoly {
        let mut out = ExpPoly {
            terms: self.terms.iter().chain(&other.terms).cloned().collect(),
        };
        out.normalize();
        out
    }

    pub fn scale(&self, f: C) -> ExpPoly {
        let mut out = self.clone();
        for t in &mut out.terms {
            for c in &mut t.poly {
                *c *= f;
            }
        }
        out.normalize();
        out
    }

    pub fn mul(&self, other: &ExpPoly) -> ExpPoly {
        let mut out = ExpPoly::zero();
        for a in &self.terms {
            for b in &other.terms {
                out.terms.push(ExpTerm {
                    mu: a.mu + b.mu,
                    poly: poly_mul(&a.poly, &b.poly),
                });
            }
        }
        out.normalize();
        out
    }

    /// Multiplies by a polynomial in ω.
    pub fn mul_poly(&self, poly: &[C]) -> ExpPoly {
        let mut out = self.clone();
        for t in &mut out.terms {
            t.poly = poly_mul(&t.poly, poly);
        }
        out.normalize();
        out
    }

    /// Complex conjugate as a function of real ω.
    pub fn conj(&self) -> ExpPoly {
        let mut out = ExpPoly {
            terms: self
                .terms
                .iter()
                .map(|t| ExpTerm {
                    mu: t.mu.conj(),
                    poly: t.poly.iter().map(|c| c.conj()).collect(),
                })
                .collect(),
        };
        out.normalize();
        out
    }

    /// Exact ∫_a^b of the function.
    pub fn integrate(&self, a: f64, b: f64) -> C {
        self.terms
            .iter()
            .map(|t| {
                t.poly
                    .iter()
                    .enumerate()
                    .map(|(n, &c)| c * integral_pow_exp(n, t.mu, a, b))
                    .sum::<C>()
            })
            .sum()
    }

    /// Exact L² inner product ∫_a^b self · conj(other).
    pub fn inner(&self, other: &ExpPoly, a: f64, b: f64) -> C {
        self.mul(&other.conj()).integrate(a, b)
    }

    pub fn max_abs_on(&self, a: f64, b: f64, samples: usize) -> f64 {
        (0..=samples)
            .map(|i| {
                let w = a + (b - a) * i as f64 / samples as f64;
                self.eval(w).norm()
            })
            .fold(0.0, f64::max)
    }
}

/// ∫_a^b ω^n e^{μω} dω, exact.
///
/// Uses the closed form by parts when |μ| is large enough, and the series
/// Σ_j μ^j/j! (b^{n+j+1} − a^{n+j+1})/(n+j+1) when μ(b−a) is small, which
/// avoids the cancellation catastrophe near μ = 0.
pub fn integral_pow_exp(n: usize, mu: C, a: f64, b: f64) -> C {
    let scale = a.abs().max(b.abs()).max(b - a);
    if mu.norm() * scale < 0.75 {
        let mut sum = C::new(0.0, 0.0);
        let mut mu_pow = C::new(1.0, 0.0); // μ^j / j!
        for j in 0..60 {
            let k = n + j + 1;
            let term = mu_pow * ((powi(b, k) - powi(a, k)) / k as f64);
            sum += term;
            if term.norm() < 1e-18 * (1.0 + sum.norm()) && j > 2 {
                break;
            }
            mu_pow *= mu / (j + 1) as f64;
        }
        sum
    } else {
        antideriv_pow_exp(n, mu, b) - antideriv_pow_exp(n, mu, a)
    }
}

fn powi(x: f64, k: usize) -> f64 {
    x.powi(k as i32)
}

/// Antiderivative e^{μω} Σ_{j=0}^n (−1)^j n!/(n−j)! ω^{n−j} / μ^{j+1}.
fn antideriv_pow_exp(n: usize, mu: C, w: f64) -> C {
    let mut sum = C::new(0.0, 0.0);
    let mut fact = 1.0; // n! / (n-j)!
    let mut sign = 1.0;
    let mut mu_pow = mu; // μ^{j+1}
    for j in 0..=n {
        sum += C::new(sign * fact, 0.0) * powi(w, n - j) / mu_pow;
        if j < n {
            fact *= (n - j) as f64;
            sign = -sign;
            mu_pow *= mu;
        }
    }
    sum * (mu * w).exp()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C {
        C::new(re, im)
    }

    /// Adaptive Simpson oracle for ∫ f over [a, b].
    fn quad_oracle(f: &dyn Fn(f64) -> C, a: f64, b: f64) -> C {
        let n = 20000;
        let h = (b - a) / n as f64;
        let mut s = f(a) + f(b);
        for i in 1..n {
            let x = a + i as f64 * h;
            s += f(x) * if i % 2 == 1 { 4.0 } else { 2.0 };
        }
        s * (h / 3.0)
    }

    #[test]
    fn integral_pow_exp_vs_quadrature() {
        for &(n, mu) in &[
            (0usize, c(1.5, 2.0)),
            (3, c(-0.7, 4.0)),
            (2, c(0.0, 3.0)),
            (4, c(2.0, 0.0)),
        ] {
            let got = integral_pow_exp(n, mu, -0.8, 1.3);
            let want = quad_oracle(&|w| C::new(w.powi(n as i32), 0.0) * (mu * w).exp(), -0.8, 1.3);
            assert!(
                (got - want).norm() < 1e-9 * (1.0 + want.norm()),
                "n={n} mu={mu} got {got} want {want}"
            );
        }
    }

    #[test]
    fn integral_pow_exp_small_exponent_branch() {
        // both branches must agree across the switch region
        for &mag in &[1e-12, 1e-8, 1e-4, 0.3, 0.74, 0.76, 2.0] {
            let mu = c(mag / 2.0, mag / 2.0);
            let a = -1.0;
            let b = 1.0;
            let got = integral_pow_exp(3, mu, a, b);
            let want = quad_oracle(&|w| C::new(w.powi(3), 0.0) * (mu * w).exp(), a, b);
            assert!(
                (got - want).norm() < 1e-10 * (1.0 + want.norm()),
                "mag={mag} got {got} want {want}"
            );
        }
    }

    #[test]
    fn deriv_and_eval() {
        // f = (1 + ω²) e^{iω};  f' = (2ω + i(1+ω²)) e^{iω}
        let f = ExpPoly::term(c(0.0, 1.0), vec![c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]);
        let d = f.deriv();
        let w = 0.37;
        let want = (c(2.0 * w, 0.0) + c(0.0, 1.0) * c(1.0 + w * w, 0.0)) * (c(0.0, 1.0) * w).exp();
        assert!((d.eval(w) - want).norm() < 1e-14);
    }

    #[test]
    fn inner_product_conjugates_second_argument() {
        let f = ExpPoly::exp(c(0.0, 2.0));
        let g = ExpPoly::exp(c(0.0, 2.0));
        // ∫_0^1 e^{2iω} conj(e^{2iω}) = 1
        let ip = f.inner(&g, 0.0, 1.0);
        assert!((ip - c(1.0, 0.0)).norm() < 1e-13);
    }

    #[test]
    fn merge_collapses_close_exponents() {
        let mut f = ExpPoly {
            terms: vec![
                ExpTerm {
                    mu: c(1.0, 0.0),
                    poly: vec![c(1.0, 0.0)],
                },
                ExpTerm {
                    mu: c(1.0 + 1e-13, 0.0),
                    poly: vec![c(-1.0, 0.0)],
                },
            ],
        };
        f.normalize();
        assert!(f.is_zero());
    }
}
