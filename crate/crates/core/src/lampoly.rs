//! Dense polynomials in the spectral parameter λ.
//!
//! Boundary functionals and ODE coefficients are stored as λ-polynomials so
//! that λ-derivatives of any order are exact. Dilation factors of the form
//! β^{iλ} are kept symbolic elsewhere ([`crate::pencil::FunctionalAtom`]);
//! this type only handles the polynomial part.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

type C = Complex64;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LamPoly {
    /// Coefficient of λ^p at index p.
    pub coeffs: Vec<C>,
}

impl LamPoly {
    pub fn zero() -> Self {
        LamPoly { coeffs: vec![] }
    }

    pub fn constant(c: C) -> Self {
        if c == C::new(0.0, 0.0) {
            Self::zero()
        } else {
            LamPoly { coeffs: vec![c] }
        }
    }

    pub fn real_constant(c: f64) -> Self {
        Self::constant(C::new(c, 0.0))
    }

    /// Builds Σ coeffs[p] λ^p, trimming trailing zeros.
    pub fn new(coeffs: Vec<C>) -> Self {
        let mut p = LamPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while let Some(last) = self.coeffs.last() {
            if last.norm() == 0.0 {
                self.coeffs.pop();
            } else {
                break;
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn eval(&self, lam: C) -> C {
        let mut acc = C::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * lam + c;
        }
        acc
    }

    /// s-th derivative evaluated at λ.
    pub fn eval_deriv(&self, lam: C, s: usize) -> C {
        let mut acc = C::new(0.0, 0.0);
        for p in (s..self.coeffs.len()).rev() {
            // falling factorial p (p-1) ... (p-s+1)
            let mut fall = 1.0;
            for j in 0..s {
                fall *= (p - j) as f64;
            }
            acc = acc * lam + self.coeffs[p] * fall;
        }
        acc
    }

    /// s-th derivative as a polynomial.
    pub fn deriv(&self, s: usize) -> LamPoly {
        if s >= self.coeffs.len() {
            return LamPoly::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - s);
        for p in s..self.coeffs.len() {
            let mut fall = 1.0;
            for j in 0..s {
                fall *= (p - j) as f64;
            }
            out.push(self.coeffs[p] * fall);
        }
        LamPoly::new(out)
    }

    pub fn add(&self, other: &LamPoly) -> LamPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![C::new(0.0, 0.0); n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, &c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        LamPoly::new(out)
    }

    pub fn scale(&self, f: C) -> LamPoly {
        LamPoly::new(self.coeffs.iter().map(|&c| c * f).collect())
    }

    pub fn mul(&self, other: &LamPoly) -> LamPoly {
        if self.is_zero() || other.is_zero() {
            return LamPoly::zero();
        }
        let mut out = vec![C::new(0.0, 0.0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        LamPoly::new(out)
    }

    /// Coefficient-wise conjugation: p̄(λ) with p̄(λ̄) = conj(p(λ)).
    pub fn conj_coeffs(&self) -> LamPoly {
        LamPoly::new(self.coeffs.iter().map(|c| c.conj()).collect())
    }

    /// Substitutes λ → λ + shift.
    pub fn shift(&self, shift: C) -> LamPoly {
        let n = self.coeffs.len();
        let mut out = vec![C::new(0.0, 0.0); n];
        // binomial expansion of (λ + shift)^p
        for (p, &c) in self.coeffs.iter().enumerate() {
            let mut binom = 1.0;
            let mut pw = C::new(1.0, 0.0);
            for j in 0..=p {
                // coefficient of λ^{p-j}: C(p, j) shift^j
                out[p - j] += c * binom * pw;
                binom *= (p - j) as f64 / (j + 1) as f64;
                pw *= shift;
            }
        }
        LamPoly::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C {
        C::new(re, im)
    }

    #[test]
    fn eval_and_derivatives() {
        // p(λ) = 1 + 2λ + 3λ²
        let p = LamPoly::new(vec![c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0)]);
        let lam = c(0.5, -1.0);
        let expect = c(1.0, 0.0) + c(2.0, 0.0) * lam + c(3.0, 0.0) * lam * lam;
        assert!((p.eval(lam) - expect).norm() < 1e-15);
        assert!((p.eval_deriv(lam, 1) - (c(2.0, 0.0) + c(6.0, 0.0) * lam)).norm() < 1e-15);
        assert!((p.eval_deriv(lam, 2) - c(6.0, 0.0)).norm() < 1e-15);
        assert_eq!(p.eval_deriv(lam, 3), c(0.0, 0.0));
        assert!(p.deriv(3).is_zero());
    }

    #[test]
    fn shift_matches_direct_eval() {
        let p = LamPoly::new(vec![c(1.0, 2.0), c(0.0, -1.0), c(2.0, 0.0), c(0.5, 0.5)]);
        let sh = c(-0.3, 1.7);
        let q = p.shift(sh);
        for &lam in &[c(0.0, 0.0), c(1.0, -2.0), c(-3.0, 0.25)] {
            assert!((q.eval(lam) - p.eval(lam + sh)).norm() < 1e-12);
        }
    }

    #[test]
    fn conj_coeffs_identity() {
        let p = LamPoly::new(vec![c(1.0, 2.0), c(-0.5, 0.25)]);
        let lam = c(0.7, -0.4);
        assert!((p.conj_coeffs().eval(lam.conj()) - p.eval(lam).conj()).norm() < 1e-15);
    }
}
