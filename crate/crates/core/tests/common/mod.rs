#![allow(dead_code)]

/// Infimum over the whole log-radius line of the degree-`k` Rayleigh
/// quotient, from its Fourier symbol.
///
/// With `r = e^t`, `v = r^beta w`, `beta = -(N+m-4)/2` and `y = xi^2` the
/// quotient becomes `(beta-1)^2 + y + A1 + A0 / (beta^2 + y)`, minimized in
/// closed form over `y >= 0`.
pub fn mode_infimum(n: u32, m: f64, k: u32) -> f64 {
    let nf = n as f64;
    let s = nf + m - 4.0;
    let beta = -s / 2.0;
    let c = (k * (k + n).saturating_sub(2)) as f64;
    let c = if n == 1 { 0.0 } else { c };
    let a1 = 2.0 * c + (nf - 1.0) * (1.0 - m);
    let a0 = c * c - c * (m - 2.0) * s;
    let g = |y: f64| {
        let tail = if a0 == 0.0 { 0.0 } else { a0 / (beta * beta + y) };
        (beta - 1.0).powi(2) + y + a1 + tail
    };
    let y = if a0 > 0.0 {
        (a0.sqrt() - beta * beta).max(0.0)
    } else {
        0.0
    };
    g(y)
}

/// `min_k mode_infimum(N, m, k)` over `k <= k_max`, with the minimizing degree.
pub fn fourier_constant(n: u32, m: f64, k_max: u32) -> (f64, u32) {
    let top = if n == 1 { 0 } else { k_max };
    (0..=top)
        .map(|k| (mode_infimum(n, m, k), k))
        .fold((f64::INFINITY, 0), |best, x| if x.0 < best.0 { x } else { best })
}

/// Adaptive Simpson quadrature.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> f64 {
    fn step<F: Fn(f64) -> f64>(
        f: &F,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
        let (flm, frm) = (f(lm), f(rm));
        let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * tol || delta.abs() <= 1e-14 * (left + right).abs() {
            left + right + delta / 15.0
        } else {
            step(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1)
                + step(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1)
        }
    }
    let (fa, fb, fm) = (f(a), f(b), f(0.5 * (a + b)));
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    step(f, a, b, fa, fm, fb, whole, tol, 50)
}
