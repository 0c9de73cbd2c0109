use serde::Serialize;

/// Real polynomial, coefficients lowest degree first.
///
/// Exact trailing zeros are trimmed on construction, so the zero polynomial
/// has no coefficients and [`Polynomial::degree`] returns `None` for it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Polynomial {
    coefficients: Vec<f64>,
}

impl Polynomial {
    pub fn new(mut coefficients: Vec<f64>) -> Polynomial {
        while coefficients.last() == Some(&0.0) {
            coefficients.pop();
        }
        Polynomial { coefficients }
    }

    pub fn one() -> Polynomial {
        Polynomial::new(vec![1.0])
    }

    /// `λ^k`.
    pub fn monomial(k: usize) -> Polynomial {
        let mut c = vec![0.0; k + 1];
        c[k] = 1.0;
        Polynomial::new(c)
    }

    /// Monic `∏ (λ - r)`, expanded one linear factor at a time. This is the
    /// characteristic polynomial of any matrix whose eigenvalues are `roots`.
    pub fn from_roots(roots: &[f64]) -> Polynomial {
        let mut c = vec![1.0];
        for &r in roots {
            c.push(0.0);
            for k in (1..c.len()).rev() {
                c[k] = c[k - 1] - r * c[k];
            }
            c[0] *= -r;
        }
        Polynomial::new(c)
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    /// Coefficient of `λ^k`, zero beyond the degree.
    pub fn coefficient(&self, k: usize) -> f64 {
        self.coefficients.get(k).copied().unwrap_or(0.0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: f64) -> f64 {
        self.coefficients.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn scale(&self, factor: f64) -> Polynomial {
        Polynomial::new(self.coefficients.iter().map(|c| c * factor).collect())
    }

    /// Multiplies by `λ^k`.
    pub fn shift(&self, k: usize) -> Polynomial {
        if self.coefficients.is_empty() {
            return self.clone();
        }
        let mut c = vec![0.0; k];
        c.extend_from_slice(&self.coefficients);
        Polynomial::new(c)
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.coefficients.is_empty() || other.coefficients.is_empty() {
            return Polynomial::new(Vec::new());
        }
        let mut c = vec![0.0; self.coefficients.len() + other.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in other.coefficients.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Polynomial::new(c)
    }

    /// `q(λ) = p(a λ²)`. Odd coefficients of the result are exactly zero.
    pub fn substitute_quadratic(&self, a: f64) -> Polynomial {
        let mut c = vec![0.0; 2 * self.coefficients.len()];
        let mut power = 1.0;
        for (k, &coef) in self.coefficients.iter().enumerate() {
            c[2 * k] = coef * power;
            power *= a;
        }
        Polynomial::new(c)
    }

    /// Drops leading coefficients whose magnitude is at most `tol` times the
    /// largest coefficient magnitude.
    pub fn trimmed(&self, tol: f64) -> Polynomial {
        let cutoff = tol * self.max_abs_coefficient();
        let mut c = self.coefficients.clone();
        while c.last().is_some_and(|x| x.abs() <= cutoff) {
            c.pop();
        }
        Polynomial::new(c)
    }

    pub fn max_abs_coefficient(&self) -> f64 {
        self.coefficients.iter().fold(0.0, |acc: f64, c| acc.max(c.abs()))
    }

    /// Largest coefficient difference divided by the largest coefficient
    /// magnitude of either side (or 1 when both are zero).
    pub fn scaled_deviation(&self, other: &Polynomial) -> f64 {
        let len = self.coefficients.len().max(other.coefficients.len());
        let diff = (0..len)
            .map(|k| (self.coefficient(k) - other.coefficient(k)).abs())
            .fold(0.0, f64::max);
        let scale = self.max_abs_coefficient().max(other.max_abs_coefficient());
        if scale == 0.0 {
            diff
        } else {
            diff / scale
        }
    }
}
