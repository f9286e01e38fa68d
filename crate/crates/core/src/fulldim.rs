//! Full-dimensional cross-check of the spherical-harmonics reduction for
//! `N = 2, 3` with zonal harmonics.

use serde::Serialize;

use crate::constants::{eigenvalue_ck, Parameters};
use crate::error::{Error, Result};
use crate::quadrature::{integrate_pieces, GaussLegendre, DEFAULT_ORDER};
use crate::scalar::{relative_gap, Real};
use crate::trial::{mode_coefficients, RadialProfile};

fn check_dimension(n: u32) -> Result<()> {
    match n {
        2 | 3 => Ok(()),
        _ => Err(Error::UnsupportedDimension { n }),
    }
}

/// Legendre `P_l(x)`, `P_l'(x)`, `P_l''(x)`.
///
/// Uses `P'_{n+1} = P'_{n-1} + (2n+1) P_n` and the same relation one
/// derivative higher, which stay finite at `x = +-1`.
pub fn legendre_jet<T: Real>(l: u32, x: T) -> (T, T, T) {
    let mut p = vec![T::one(), x];
    let mut dp = vec![T::zero(), T::one()];
    let mut ddp = vec![T::zero(), T::zero()];
    for n in 1..l as usize {
        let nf = T::of_u32(n as u32);
        let two_n1 = T::lit(2.0) * nf + T::one();
        p.push((two_n1 * x * p[n] - nf * p[n - 1]) / (nf + T::one()));
        dp.push(dp[n - 1] + two_n1 * p[n]);
        ddp.push(ddp[n - 1] + two_n1 * dp[n]);
    }
    let l = l as usize;
    (p[l], dp[l], ddp[l])
}

/// Unit-norm zonal harmonic of degree `l` on `S^(N-1)` at polar angle `theta`.
pub fn zonal_eval<T: Real>(n: u32, l: u32, theta: T) -> Result<T> {
    Ok(zonal_with_laplacian(n, l, theta)?.0)
}

/// `(phi_l(theta), Lap_S phi_l(theta))`, the spherical Laplacian taken from
/// the derivatives rather than from the eigenvalue.
pub fn zonal_with_laplacian<T: Real>(n: u32, l: u32, theta: T) -> Result<(T, T)> {
    check_dimension(n)?;
    let pi = T::PI();
    if n == 2 {
        if l == 0 {
            return Ok((T::one() / (T::lit(2.0) * pi).sqrt(), T::zero()));
        }
        let lf = T::of_u32(l);
        let c = (lf * theta).cos() / pi.sqrt();
        return Ok((c, -lf * lf * c));
    }
    let norm = ((T::lit(2.0) * T::of_u32(l) + T::one()) / (T::lit(4.0) * pi)).sqrt();
    let x = theta.cos();
    let (p, dp, ddp) = legendre_jet(l, x);
    let lap = (T::one() - x * x) * ddp - T::lit(2.0) * x * dp;
    Ok((norm * p, norm * lap))
}

/// Angular quadrature on `S^(N-1)` for zonal integrands, as
/// `(theta, weight)` pairs.
///
/// `N = 2`: trapezoid rule on `[0, 2 pi)`. `N = 3`: Gauss-Legendre in
/// `cos(theta)` times the azimuthal factor `2 pi`.
pub fn angular_rule<T: Real>(n: u32, points: usize) -> Result<Vec<(T, T)>> {
    check_dimension(n)?;
    let two_pi = T::lit(2.0) * T::PI();
    if n == 2 {
        let w = two_pi / T::from_usize(points).expect("point count fits");
        return Ok((0..points)
            .map(|i| (w * T::from_usize(i).expect("index fits"), w))
            .collect());
    }
    let rule = GaussLegendre::<T>::new(points);
    Ok(rule
        .mapped(-T::one(), T::one())
        .map(|(x, w)| (x.acos(), two_pi * w))
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FullDimComparison<T> {
    pub lhs_full: T,
    pub lhs_decomposed: T,
    pub rhs_full: T,
    pub rhs_decomposed: T,
    pub lhs_gap: T,
    pub rhs_gap: T,
}

impl<T: Real> FullDimComparison<T> {
    pub fn max_gap(&self) -> T {
        self.lhs_gap.max(self.rhs_gap)
    }
}

const ANGULAR_POINTS: usize = 32;

/// Compares `int |Lap(U phi_l)|^2 |x|^m` and `int |x . grad(U phi_l)|^2 |x|^(m-4)`
/// over `R^N` by tensor quadrature against the per-mode radial formulas.
pub fn fulldim_compare<T: Real, P: RadialProfile<T> + ?Sized>(
    params: &Parameters<T>,
    degree: u32,
    profile: &P,
    tol: T,
) -> Result<FullDimComparison<T>> {
    let n = params.n();
    check_dimension(n)?;
    let angles: Vec<(T, T, T)> = angular_rule::<T>(n, ANGULAR_POINTS)?
        .into_iter()
        .map(|(theta, w)| {
            let (phi, lap) = zonal_with_laplacian(n, degree, theta)?;
            Ok((w, phi, lap))
        })
        .collect::<Result<_>>()?;
    let phi_norm: T = angles.iter().map(|&(w, phi, _)| w * phi * phi).sum();

    let rule = GaussLegendre::new(DEFAULT_ORDER);
    let breaks = profile.breakpoints();
    let m = params.m();
    let n1 = params.dim() - T::one();
    let radial = |f: &dyn Fn(T) -> T| -> Result<T> {
        Ok(integrate_pieces(&rule, &breaks, tol, f)?.value)
    };

    let lhs_full = radial(&|r| {
        let u = profile.jet(r);
        let lap_r = u.d2 + n1 * u.d1 / r;
        let ang: T = angles
            .iter()
            .map(|&(w, phi, lap)| {
                let v = lap_r * phi + u.value * lap / (r * r);
                w * v * v
            })
            .sum();
        ang * r.powf(m + n1)
    })?;
    let rhs_full = radial(&|r| {
        let u = profile.jet(r);
        // x . grad(U phi) = r U' phi
        let ang: T = angles
            .iter()
            .map(|&(w, phi, _)| {
                let v = r * u.d1 * phi;
                w * v * v
            })
            .sum();
        ang * r.powf(m - T::lit(4.0) + n1)
    })?;

    let base = params.dim() + m;
    let j2 = radial(&|r| profile.jet(r).d2.powi(2) * r.powf(base - T::one()))?;
    let j1 = radial(&|r| profile.jet(r).d1.powi(2) * r.powf(base - T::lit(3.0)))?;
    let j0 = radial(&|r| profile.jet(r).value.powi(2) * r.powf(base - T::lit(5.0)))?;
    let (c1, c0) = mode_coefficients(params, degree);
    let lhs_decomposed = (j2 + c1 * j1 + c0 * j0) * phi_norm;
    let rhs_decomposed = j1 * phi_norm;

    Ok(FullDimComparison {
        lhs_full,
        lhs_decomposed,
        rhs_full,
        rhs_decomposed,
        lhs_gap: relative_gap(lhs_full, lhs_decomposed),
        rhs_gap: relative_gap(rhs_full, rhs_decomposed),
    })
}

/// Largest deviation from `delta_{l l'}` of the angular Gram matrix for
/// degrees `0..=max_degree`.
pub fn orthonormality_defect<T: Real>(n: u32, max_degree: u32) -> Result<T> {
    let rule = angular_rule::<T>(n, ANGULAR_POINTS)?;
    let mut worst = T::zero();
    for l in 0..=max_degree {
        for lp in l..=max_degree {
            let mut g = T::zero();
            for &(theta, w) in &rule {
                g = g + w * zonal_eval(n, l, theta)? * zonal_eval(n, lp, theta)?;
            }
            let target = if l == lp { T::one() } else { T::zero() };
            worst = worst.max((g - target).abs());
        }
    }
    Ok(worst)
}

/// Largest relative deviation of a centred-difference angular Laplacian of
/// the zonal samples from `-c_l phi_l`, over interior sample angles.
pub fn eigenrelation_defect(n: u32, l: u32) -> Result<f64> {
    check_dimension(n)?;
    let h = 1e-4;
    let c = eigenvalue_ck::<f64>(n, l);
    let phi = |t: f64| zonal_eval::<f64>(n, l, t);
    let mut worst: f64 = 0.0;
    let mut scale: f64 = 0.0;
    for i in 1..40 {
        let t = std::f64::consts::PI * i as f64 / 40.0;
        let second = (phi(t + h)? - 2.0 * phi(t)? + phi(t - h)?) / (h * h);
        let lap = if n == 2 {
            second
        } else {
            second + t.cos() / t.sin() * (phi(t + h)? - phi(t - h)?) / (2.0 * h)
        };
        let target = -c * phi(t)?;
        worst = worst.max((lap - target).abs());
        scale = scale.max(target.abs()).max(phi(t)?.abs());
    }
    Ok(worst / scale)
}
