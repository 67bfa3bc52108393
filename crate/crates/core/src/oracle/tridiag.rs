//! Symmetric tridiagonal eigenvalues by Sturm-count bisection.

#[derive(Debug, Clone, PartialEq)]
pub struct SymTridiagonal {
    diag: Vec<f64>,
    off: Vec<f64>,
    off_sq: Vec<f64>,
    pivmin: f64,
}

impl SymTridiagonal {
    /// `off[i]` couples rows i and i+1, so `off.len() + 1 == diag.len()`.
    pub fn new(diag: Vec<f64>, off: Vec<f64>) -> Self {
        assert!(!diag.is_empty() && off.len() + 1 == diag.len(), "inconsistent tridiagonal sizes");
        let off_sq: Vec<f64> = off.iter().map(|e| e * e).collect();
        let max_sq = off_sq.iter().copied().fold(1.0f64, f64::max);
        SymTridiagonal {
            diag,
            off,
            off_sq,
            pivmin: f64::MIN_POSITIVE * max_sq,
        }
    }

    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    /// Number of eigenvalues strictly below `x`.
    pub fn sturm_count(&self, x: f64) -> usize {
        let mut count = 0;
        let mut q = self.diag[0] - x;
        if q.abs() < self.pivmin {
            q = -self.pivmin;
        }
        if q < 0.0 {
            count += 1;
        }
        for i in 1..self.diag.len() {
            q = self.diag[i] - x - self.off_sq[i - 1] / q;
            if q.abs() < self.pivmin {
                q = -self.pivmin;
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    pub fn gershgorin(&self) -> (f64, f64) {
        let n = self.diag.len();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let left = if i > 0 { self.off[i - 1].abs() } else { 0.0 };
            let right = if i + 1 < n { self.off[i].abs() } else { 0.0 };
            lo = lo.min(self.diag[i] - left - right);
            hi = hi.max(self.diag[i] + left + right);
        }
        (lo, hi)
    }

    /// The `k`-th smallest eigenvalue (0-based), bisecting inside `[lo, hi]`.
    /// The caller guarantees `sturm_count(lo) <= k < sturm_count(hi)`.
    pub fn eigenvalue_in(&self, k: usize, mut lo: f64, mut hi: f64) -> f64 {
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if !(lo < mid && mid < hi) {
                break;
            }
            if hi - lo <= 2.0 * f64::EPSILON * (lo.abs().max(hi.abs())) + self.pivmin {
                break;
            }
            if self.sturm_count(mid) > k {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        0.5 * (lo + hi)
    }

    pub fn eigenvalue(&self, k: usize) -> Option<f64> {
        if k >= self.len() {
            return None;
        }
        let (lo, hi) = self.gershgorin();
        let pad = f64::EPSILON * (lo.abs() + hi.abs()) + self.pivmin;
        Some(self.eigenvalue_in(k, lo - pad, hi + pad))
    }

    /// Unit eigenvector for an accurate eigenvalue, by inverse iteration.
    pub fn eigenvector(&self, lambda: f64) -> Vec<f64> {
        let n = self.len();
        let scale = self.gershgorin().1.abs().max(self.gershgorin().0.abs());
        let sigma = lambda + 64.0 * f64::EPSILON * scale.max(lambda.abs());
        let mut x = vec![1.0; n];
        for _ in 0..4 {
            x = self.shifted_solve(sigma, &x);
            let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
            if !(norm > 0.0) || !norm.is_finite() {
                break;
            }
            x.iter_mut().for_each(|v| *v /= norm);
        }
        x
    }

    // Thomas algorithm for (T − σI)y = rhs, nudging zero pivots.
    fn shifted_solve(&self, sigma: f64, rhs: &[f64]) -> Vec<f64> {
        let n = self.len();
        let tiny = f64::EPSILON * (self.gershgorin().1.abs() + 1.0);
        let mut c = vec![0.0; n];
        let mut y = vec![0.0; n];
        let mut piv = self.diag[0] - sigma;
        if piv.abs() < tiny {
            piv = tiny;
        }
        y[0] = rhs[0] / piv;
        for i in 1..n {
            c[i - 1] = self.off[i - 1] / piv;
            piv = self.diag[i] - sigma - self.off[i - 1] * c[i - 1];
            if piv.abs() < tiny {
                piv = tiny;
            }
            y[i] = (rhs[i] - self.off[i - 1] * y[i - 1]) / piv;
        }
        for i in (0..n - 1).rev() {
            y[i] -= c[i] * y[i + 1];
        }
        y
    }
}
