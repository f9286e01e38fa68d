use crate::error::{Error, Result};
use crate::scalar::Real;

/// Symmetric band matrix storing the diagonal and `bandwidth` superdiagonals.
///
/// `rows[i][d]` holds entry `(i, i + d)`.
#[derive(Debug, Clone, PartialEq)]
pub struct BandedSym<T> {
    bandwidth: usize,
    rows: Vec<Vec<T>>,
}

impl<T: Real> BandedSym<T> {
    pub fn zeros(n: usize, bandwidth: usize) -> Self {
        Self {
            bandwidth,
            rows: vec![vec![T::zero(); bandwidth + 1]; n],
        }
    }

    pub fn identity(n: usize, bandwidth: usize) -> Self {
        let mut m = Self::zeros(n, bandwidth);
        for row in &mut m.rows {
            row[0] = T::one();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn bandwidth(&self) -> usize {
        self.bandwidth
    }

    /// Entry `(i, j)`; zero outside the band.
    pub fn get(&self, i: usize, j: usize) -> T {
        let (lo, hi) = if i <= j { (i, j) } else { (j, i) };
        let d = hi - lo;
        if d > self.bandwidth {
            T::zero()
        } else {
            self.rows[lo][d]
        }
    }

    /// Adds `value` to entries `(i, j)` and `(j, i)`.
    ///
    /// # Panics
    /// If `|i - j|` exceeds the bandwidth.
    pub fn add(&mut self, i: usize, j: usize, value: T) {
        let (lo, hi) = if i <= j { (i, j) } else { (j, i) };
        let d = hi - lo;
        assert!(d <= self.bandwidth, "entry ({i}, {j}) outside the band");
        self.rows[lo][d] = self.rows[lo][d] + value;
    }

    /// Adds `u^T u * weight` for a sparse row `u` given as `(index, value)` pairs.
    pub fn add_outer(&mut self, entries: &[(usize, T)], weight: T) {
        for (a, &(i, x)) in entries.iter().enumerate() {
            for &(j, y) in &entries[a..] {
                self.add(i, j, weight * x * y);
            }
        }
    }

    /// `self + alpha * other`.
    pub fn axpy(&self, alpha: T, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        let bw = self.bandwidth.max(other.bandwidth);
        let mut out = Self::zeros(self.dim(), bw);
        for i in 0..self.dim() {
            for d in 0..=bw {
                if i + d < self.dim() {
                    out.rows[i][d] = self.get(i, i + d) + alpha * other.get(i, i + d);
                }
            }
        }
        out
    }

    pub fn matvec(&self, x: &[T]) -> Vec<T> {
        let n = self.dim();
        let mut y = vec![T::zero(); n];
        for i in 0..n {
            for d in 0..=self.bandwidth.min(n - 1 - i) {
                let a = self.rows[i][d];
                y[i] = y[i] + a * x[i + d];
                if d > 0 {
                    y[i + d] = y[i + d] + a * x[i];
                }
            }
        }
        y
    }

    pub fn quadratic_form(&self, x: &[T]) -> T {
        self.matvec(x).iter().zip(x).map(|(&a, &b)| a * b).sum()
    }

    /// Number of negative pivots of the unpivoted `LDL^T` factorization,
    /// which by Sylvester's law equals the number of negative eigenvalues.
    pub fn negative_count(&self) -> Result<usize> {
        let n = self.dim();
        let bw = self.bandwidth;
        // l[i][d] = L(i + d, i), d = 1..=bw
        let mut l = vec![vec![T::zero(); bw + 1]; n];
        let mut diag = vec![T::zero(); n];
        let mut negatives = 0;
        for i in 0..n {
            let mut di = self.rows[i][0];
            for k in i.saturating_sub(bw)..i {
                let lik = l[k][i - k];
                di = di - lik * lik * diag[k];
            }
            if di == T::zero() || !di.is_finite() {
                return Err(Error::Factorization {
                    shift: f64::NAN,
                    row: i,
                    pivot: di.as_f64(),
                });
            }
            diag[i] = di;
            if di < T::zero() {
                negatives += 1;
            }
            for d in 1..=bw.min(n - 1 - i) {
                let j = i + d;
                let mut v = self.rows[i][d];
                for k in j.saturating_sub(bw)..i {
                    v = v - l[k][j - k] * l[k][i - k] * diag[k];
                }
                l[i][d] = v / di;
            }
        }
        Ok(negatives)
    }
}

/// Relative tolerance of [`min_generalized_eig`].
pub const EIG_REL_TOL: f64 = 1e-10;

/// Smallest `lambda` with `A x = lambda B x` for symmetric `A` and positive
/// definite `B`, by bisection on the inertia of `A - sigma B`.
pub fn min_generalized_eig<T: Real>(a: &BandedSym<T>, b: &BandedSym<T>) -> Result<T> {
    if a.dim() != b.dim() || a.dim() == 0 {
        return Err(Error::EigenBracket(format!(
            "pencil dimensions {} and {} must agree and be nonzero",
            a.dim(),
            b.dim()
        )));
    }
    let count = |sigma: T| -> Result<usize> {
        a.axpy(-sigma, b).negative_count().map_err(|e| match e {
            Error::Factorization { row, pivot, .. } => Error::Factorization {
                shift: sigma.as_f64(),
                row,
                pivot,
            },
            other => other,
        })
    };
    // nudge shifts that land exactly on a zero pivot
    let safe_count = |sigma: T| -> Result<usize> {
        count(sigma).or_else(|_| count(sigma * (T::one() + T::lit(1e-12)) + T::lit(1e-300)))
    };

    let mut lo = T::zero();
    let mut step = T::one();
    let mut tries = 0;
    while safe_count(lo)? > 0 {
        lo = lo - step;
        step = step * T::lit(4.0);
        tries += 1;
        if tries > 60 {
            return Err(Error::EigenBracket("no lower bound found".to_string()));
        }
    }
    let mut hi = T::one();
    tries = 0;
    while safe_count(hi)? == 0 {
        lo = hi;
        hi = hi * T::lit(4.0);
        tries += 1;
        if tries > 60 {
            return Err(Error::EigenBracket("no upper bound found".to_string()));
        }
    }
    let tol = T::lit(EIG_REL_TOL).max(T::epsilon() * T::lit(16.0));
    while hi - lo > tol * hi.abs().max(lo.abs()).max(T::lit(1e-12)) {
        let mid = (lo + hi) / T::lit(2.0);
        if mid <= lo || mid >= hi {
            break;
        }
        if safe_count(mid)? > 0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok((lo + hi) / T::lit(2.0))
}
