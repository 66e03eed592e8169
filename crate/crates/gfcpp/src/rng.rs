//! Reproducible random-number streams.
//!
//! Every sampler in this crate takes an explicit [`RngStream`]. Identical
//! `(seed, stream_id)` pairs reproduce identical draw sequences; distinct
//! stream ids give statistically independent streams, which is what the
//! parallel Monte Carlo drivers rely on (one stream per path index).

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;

/// A counter-based RNG stream keyed by `(seed, stream_id)`.
#[derive(Debug, Clone)]
pub struct RngStream {
    rng: ChaCha12Rng,
}

impl RngStream {
    pub fn new(seed: u64, stream_id: u64) -> Self {
        let mut rng = ChaCha12Rng::seed_from_u64(seed);
        rng.set_stream(stream_id.into());
        Self { rng }
    }

    /// Uniform draw on the open interval (0, 1).
    #[inline]
    pub fn uniform_open(&mut self) -> f64 {
        let u: f64 = self.rng.random();
        u.clamp(1e-300, 1.0 - 1e-16)
    }

    /// Uniform draw on [0, 1).
    #[inline]
    pub fn uniform(&mut self) -> f64 {
        self.rng.random()
    }

    /// Exponential draw with rate `rate`.
    #[inline]
    pub fn exponential(&mut self, rate: f64) -> f64 {
        -self.uniform_open().ln() / rate
    }

    /// Standard normal draw (Box-Muller, both halves discarded but one).
    #[inline]
    pub fn standard_normal(&mut self) -> f64 {
        let u1 = self.uniform_open();
        let u2 = self.uniform();
        (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
    }
}
