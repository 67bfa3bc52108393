use crate::error::{Error, Result};

/// Degree and indices of a Jacobi polynomial P_n^{(ρ,ν)}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiParams {
    n: u32,
    rho: f64,
    nu: f64,
}

impl JacobiParams {
    pub fn new(n: u32, rho: f64, nu: f64) -> Result<Self> {
        if !(rho > -1.0) || !(nu > -1.0) || !rho.is_finite() || !nu.is_finite() {
            return Err(Error::domain(format!(
                "Jacobi indices must exceed −1, got ρ = {rho}, ν = {nu}"
            )));
        }
        Ok(JacobiParams { n, rho, nu })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    /// Evaluates P_n^{(ρ,ν)}(ξ) by the three-term recurrence in degree.
    pub fn eval(&self, xi: f64) -> f64 {
        let (a, b) = (self.rho, self.nu);
        let mut prev = 1.0;
        if self.n == 0 {
            return prev;
        }
        let mut cur = (a + 1.0) + 0.5 * (a + b + 2.0) * (xi - 1.0);
        for k in 2..=self.n {
            let k = f64::from(k);
            let s = 2.0 * k + a + b;
            let c1 = 2.0 * k * (k + a + b) * (s - 2.0);
            let c2 = (s - 1.0) * (s * (s - 2.0) * xi + a * a - b * b);
            let c3 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
            let next = (c2 * cur - c3 * prev) / c1;
            prev = cur;
            cur = next;
        }
        cur
    }
}

pub fn jacobi(jp: JacobiParams, xi: f64) -> f64 {
    jp.eval(xi)
}
