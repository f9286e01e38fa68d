//! Composite Gauss-Legendre quadrature with dyadic panel refinement.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Gauss-Legendre nodes and weights on `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct GaussLegendre<T> {
    nodes: Vec<T>,
    weights: Vec<T>,
}

/// Legendre `P_n(x)` and `P_n'(x)` by the three-term recurrence.
fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    for k in 1..n {
        let k = k as f64;
        let p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

impl<T: Real> GaussLegendre<T> {
    /// `n`-point rule (exact for polynomials of degree `2n - 1`).
    ///
    /// Nodes are Newton-refined roots of `P_n` in double precision, then
    /// converted to `T`.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "Gauss-Legendre rule needs at least one node");
        let mut nodes = vec![T::zero(); n];
        let mut weights = vec![T::zero(); n];
        if n == 1 {
            weights[0] = T::lit(2.0);
            return Self { nodes, weights };
        }
        let nf = n as f64;
        for i in 0..(n + 1) / 2 {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
            for _ in 0..100 {
                let (p, dp) = legendre_with_derivative(n, x);
                let dx = p / dp;
                x -= dx;
                if dx.abs() <= 1e-16 {
                    break;
                }
            }
            let (_, dp) = legendre_with_derivative(n, x);
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = T::lit(-x);
            nodes[n - 1 - i] = T::lit(x);
            weights[i] = T::lit(w);
            weights[n - 1 - i] = T::lit(w);
        }
        Self { nodes, weights }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// `(node, weight)` pairs mapped to `[a, b]`.
    pub fn mapped(&self, a: T, b: T) -> impl Iterator<Item = (T, T)> + '_ {
        let half = (b - a) / T::lit(2.0);
        let mid = (a + b) / T::lit(2.0);
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(move |(&x, &w)| (mid + half * x, half * w))
    }

    pub fn integrate<F: FnMut(T) -> T>(&self, a: T, b: T, mut f: F) -> T {
        self.mapped(a, b).map(|(x, w)| w * f(x)).sum()
    }

    /// Rule applied on `panels` equal sub-intervals of `[a, b]`.
    pub fn composite<F: FnMut(T) -> T>(&self, a: T, b: T, panels: usize, f: F) -> T {
        self.composite_with_magnitude(a, b, panels, f).0
    }

    /// Composite value together with the same rule applied to `|f|`.
    fn composite_with_magnitude<F: FnMut(T) -> T>(
        &self,
        a: T,
        b: T,
        panels: usize,
        mut f: F,
    ) -> (T, T) {
        let h = (b - a) / T::from_usize(panels).expect("panel count fits");
        let mut sum = T::zero();
        let mut magnitude = T::zero();
        for i in 0..panels {
            let lo = a + h * T::from_usize(i).expect("panel index fits");
            for (x, w) in self.mapped(lo, lo + h) {
                let y = w * f(x);
                sum = sum + y;
                magnitude = magnitude + y.abs();
            }
        }
        (sum, magnitude)
    }
}

/// Integral value with the difference between the last two refinements.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate<T> {
    pub value: T,
    pub error: T,
}

/// Default rule order for the smooth integrands in this crate.
pub const DEFAULT_ORDER: usize = 20;
const MAX_DOUBLINGS: u32 = 14;
const ROUNDING_FLOOR: f64 = 256.0;
const NOISE_FLOOR: f64 = 1e4;

/// Integrates `f` on `[a, b]`, doubling the panel count until successive
/// composite values differ by at most `tol * max(1, |I|)`.
///
/// Also stops when the difference is at the rounding level of `int |f|`:
/// immediately below `ROUNDING_FLOOR * eps`, or below `NOISE_FLOOR * eps`
/// once refinement has stopped reducing it.
pub fn integrate_refined<T: Real, F: FnMut(T) -> T>(
    rule: &GaussLegendre<T>,
    a: T,
    b: T,
    tol: T,
    mut f: F,
) -> Result<Estimate<T>> {
    if a == b {
        return Ok(Estimate {
            value: T::zero(),
            error: T::zero(),
        });
    }
    let mut panels = 1usize;
    let mut coarse = rule.composite(a, b, panels, &mut f);
    let mut previous = T::infinity();
    for _ in 0..MAX_DOUBLINGS {
        panels *= 2;
        let (fine, magnitude) = rule.composite_with_magnitude(a, b, panels, &mut f);
        let error = (fine - coarse).abs();
        let rounding = T::epsilon() * magnitude;
        let stalled = error >= previous / T::lit(2.0) && error <= T::lit(NOISE_FLOOR) * rounding;
        if error <= tol * fine.abs().max(T::one())
            || error <= T::lit(ROUNDING_FLOOR) * rounding
            || stalled
        {
            return Ok(Estimate { value: fine, error });
        }
        previous = error;
        coarse = fine;
    }
    Err(Error::QuadratureNotConverged {
        tol: tol.as_f64(),
        panels,
        estimate: coarse.as_f64(),
    })
}

/// [`integrate_refined`] over consecutive pieces `[breaks[i], breaks[i+1]]`,
/// with the integrand smooth inside each piece.
pub fn integrate_pieces<T: Real, F: FnMut(T) -> T>(
    rule: &GaussLegendre<T>,
    breaks: &[T],
    tol: T,
    mut f: F,
) -> Result<Estimate<T>> {
    let mut total = Estimate {
        value: T::zero(),
        error: T::zero(),
    };
    for w in breaks.windows(2) {
        let e = integrate_refined(rule, w[0], w[1], tol, &mut f)?;
        total.value = total.value + e.value;
        total.error = total.error + e.error;
    }
    Ok(total)
}
