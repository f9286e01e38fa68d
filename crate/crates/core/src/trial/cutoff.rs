use crate::scalar::Real;

/// Value and first two radial derivatives of a profile at one radius.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct RadialJet<T> {
    pub value: T,
    pub d1: T,
    pub d2: T,
}

impl<T: Real> RadialJet<T> {
    pub fn zero() -> Self {
        Self {
            value: T::zero(),
            d1: T::zero(),
            d2: T::zero(),
        }
    }
}

/// Cutoff `g` equal to 1 on `[0, 1]`, 0 on `[2, inf)`, with a polynomial
/// transition `g(r) = 1 - S(r - 1)` on `[1, 2]`.
///
/// `S` rises from 0 to 1 with `S' = S'' = 0` at both ends, so `g` is `C^2`.
#[derive(Debug, Clone, PartialEq)]
pub struct CutoffSpec {
    /// Coefficients of `S(t)` in increasing powers of `t`.
    pub transition: [f64; 6],
}

impl Default for CutoffSpec {
    fn default() -> Self {
        Self::smoothstep()
    }
}

impl CutoffSpec {
    /// Quintic smoothstep `S(t) = 6t^5 - 15t^4 + 10t^3`.
    pub fn smoothstep() -> Self {
        Self {
            transition: [0.0, 0.0, 0.0, 10.0, -15.0, 6.0],
        }
    }

    pub fn eval<T: Real>(&self, r: T) -> RadialJet<T> {
        if r <= T::one() {
            return RadialJet {
                value: T::one(),
                d1: T::zero(),
                d2: T::zero(),
            };
        }
        if r >= T::lit(2.0) {
            return RadialJet::zero();
        }
        self.transition_jet(r - T::one())
    }

    /// `1 - S(t)` and its derivatives, for any `t`.
    fn transition_jet<T: Real>(&self, t: T) -> RadialJet<T> {
        let c = self.transition.map(T::lit);
        // Horner for S, S', S''
        let mut s = T::zero();
        let mut ds = T::zero();
        let mut dds = T::zero();
        for (p, &coeff) in c.iter().enumerate().rev() {
            s = s * t + coeff;
            if p >= 1 {
                ds = ds * t + coeff * T::of_u32(p as u32);
            }
            if p >= 2 {
                dds = dds * t + coeff * T::of_u32((p * (p - 1)) as u32);
            }
        }
        RadialJet {
            value: T::one() - s,
            d1: -ds,
            d2: -dds,
        }
    }
}

/// Cutoff jet `(g, g', g'')` of the default smoothstep cutoff.
pub fn cutoff_eval<T: Real>(r: T) -> RadialJet<T> {
    CutoffSpec::smoothstep().eval(r)
}
