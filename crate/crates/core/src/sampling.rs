//! Seeded random momenta, angles and phases.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::kinematics::{AngularParams, FourMomentum};
use crate::tolerance::MINUS_Z_AXIS;

/// FNV-1a hash of `label`, mixed into `seed`, so every check draws an
/// independent stream that does not depend on which other checks run.
pub fn stream_seed(seed: u64, label: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in label.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    seed ^ h
}

pub struct Sampler {
    rng: ChaCha8Rng,
    resampled: usize,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
            resampled: 0,
        }
    }

    pub fn for_stream(seed: u64, label: &str) -> Self {
        Self::new(stream_seed(seed, label))
    }

    /// Number of momenta rejected for lying too close to the -z axis.
    pub fn resampled(&self) -> usize {
        self.resampled
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.gen_range(lo..hi)
    }

    pub fn unit_vector(&mut self) -> [f64; 3] {
        let ct = self.uniform(-1.0, 1.0);
        let phi = self.uniform(0.0, 2.0 * PI);
        let st = (1.0 - ct * ct).max(0.0).sqrt();
        [st * phi.cos(), st * phi.sin(), ct]
    }

    pub fn angles(&mut self) -> AngularParams {
        let theta = self.uniform(-1.0, 1.0).acos();
        let phi = self.uniform(0.0, 2.0 * PI);
        AngularParams::new(theta, phi).expect("sampled angles lie in range")
    }

    pub fn mass(&mut self) -> f64 {
        self.uniform(0.1_f64.ln(), 10.0_f64.ln()).exp()
    }

    /// On-shell momentum: mass log-uniform in `[0.1, 10]`, `|p|` uniform in
    /// `[0, 10 m]`, isotropic direction, kept away from the -z axis.
    pub fn momentum(&mut self) -> FourMomentum {
        loop {
            let m = self.mass();
            let k = self.uniform(0.0, 10.0 * m);
            let [x, y, z] = self.unit_vector();
            let (px, py, pz) = (k * x, k * y, k * z);
            if k > 0.0 && k + pz < MINUS_Z_AXIS * k {
                self.resampled += 1;
                continue;
            }
            return FourMomentum::new(px, py, pz, m).expect("sampled mass is positive");
        }
    }

    /// Momentum with `|p| > 0`, for checks that need a direction.
    pub fn moving_momentum(&mut self) -> FourMomentum {
        loop {
            let p = self.momentum();
            if p.magnitude() > 1e-9 * p.mass() {
                return p;
            }
        }
    }

    pub fn momenta(&mut self, n: usize) -> Vec<FourMomentum> {
        (0..n).map(|_| self.moving_momentum()).collect()
    }
}
