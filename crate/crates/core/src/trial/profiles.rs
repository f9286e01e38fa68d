use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::cutoff::RadialJet;
use crate::scalar::Real;

/// A `C^2` radial function with compact support in `(0, inf)`.
pub trait RadialProfile<T: Real>: Sync {
    fn jet(&self, r: T) -> RadialJet<T>;

    /// Sorted points splitting the support into pieces on which the profile
    /// is smooth. Empty for the zero profile.
    fn breakpoints(&self) -> Vec<T>;
}

/// One bump `amplitude * (1 - ((r - center)/width)^2)^3` on `|r - center| < width`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bump<T> {
    pub center: T,
    pub width: T,
    pub amplitude: T,
}

impl<T: Real> Bump<T> {
    fn jet(&self, r: T) -> RadialJet<T> {
        let (lo, hi) = (self.center - self.width, self.center + self.width);
        if r <= lo || r >= hi {
            return RadialJet::zero();
        }
        // distances to the support edges keep q accurate where it is small
        let s = (r - self.center) / self.width;
        let q = (hi - r) * (r - lo) / (self.width * self.width);
        let dq = -T::lit(2.0) * s / self.width;
        let ddq = -T::lit(2.0) / (self.width * self.width);
        let a = self.amplitude;
        RadialJet {
            value: a * q * q * q,
            d1: T::lit(3.0) * a * q * q * dq,
            d2: a * (T::lit(6.0) * q * dq * dq + T::lit(3.0) * q * q * ddq),
        }
    }
}

/// Sum of [`Bump`]s.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct BumpProfile<T> {
    pub bumps: Vec<Bump<T>>,
}

impl<T: Real> BumpProfile<T> {
    /// The single bump filling `[a, b]`.
    pub fn on_interval(a: T, b: T) -> Self {
        Self {
            bumps: vec![Bump {
                center: (a + b) / T::lit(2.0),
                width: (b - a) / T::lit(2.0),
                amplitude: T::one(),
            }],
        }
    }

    /// One to four bumps with random centres, widths and signed amplitudes,
    /// all supported in `[a, b]`, reproducible from `seed`.
    pub fn random(a: f64, b: f64, seed: u64) -> Self {
        assert!(0.0 < a && a < b, "support must lie in (0, inf)");
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let count = rng.gen_range(1..=4);
        let bumps = (0..count)
            .map(|_| {
                let center = rng.gen_range(a + 0.1 * (b - a)..b - 0.1 * (b - a));
                let reach = (center - a).min(b - center);
                let width = rng.gen_range(0.3 * reach..=reach);
                let magnitude = rng.gen_range(0.2..2.0);
                let amplitude = if rng.gen_bool(0.5) { magnitude } else { -magnitude };
                Bump {
                    center: T::lit(center),
                    width: T::lit(width),
                    amplitude: T::lit(amplitude),
                }
            })
            .collect();
        Self { bumps }
    }
}

impl<T: Real> RadialProfile<T> for BumpProfile<T> {
    fn jet(&self, r: T) -> RadialJet<T> {
        self.bumps.iter().fold(RadialJet::zero(), |acc, b| {
            let j = b.jet(r);
            RadialJet {
                value: acc.value + j.value,
                d1: acc.d1 + j.d1,
                d2: acc.d2 + j.d2,
            }
        })
    }

    fn breakpoints(&self) -> Vec<T> {
        let mut pts: Vec<T> = self
            .bumps
            .iter()
            .flat_map(|b| [b.center - b.width, b.center + b.width])
            .collect();
        pts.sort_by(|x, y| x.partial_cmp(y).expect("finite breakpoints"));
        pts.dedup();
        pts
    }
}
