use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{GeometryError, Result};
use crate::hilbert::{event_from_frame, orthonormalize, Event, HilbertVector, UnitVector};
use crate::projective::{pi2_project, ProjectivePoint, ProjectiveSubspace};

pub const RNG_ALGORITHM: &str =
    "ChaCha8 (rand_chacha), seeded with seed_from_u64; child streams keyed by SplitMix64";

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Deterministic random stream. Equal seeds give equal streams on every platform.
#[derive(Debug, Clone)]
pub struct RandomSource {
    seed: u64,
    rng: ChaCha8Rng,
}

impl RandomSource {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Independent stream for work item `index`, a pure function of
    /// `(seed, index)`.
    pub fn child(&self, index: u64) -> Self {
        Self::new(splitmix64(self.seed ^ splitmix64(index)))
    }

    pub fn gaussian(&mut self) -> f64 {
        self.rng.sample(StandardNormal)
    }

    /// Standard complex Gaussian, `E|z|^2 = 1`.
    pub fn complex_gaussian(&mut self) -> Complex64 {
        let scale = std::f64::consts::FRAC_1_SQRT_2;
        Complex64::new(self.gaussian() * scale, self.gaussian() * scale)
    }

    /// Uniform on `[0, 1)`.
    pub fn uniform(&mut self) -> f64 {
        self.rng.random()
    }

    /// Uniform on `low..=high`.
    pub fn int_in(&mut self, low: usize, high: usize) -> usize {
        self.rng.random_range(low..=high)
    }

    fn gaussian_vector(&mut self, dim: usize) -> Result<HilbertVector> {
        HilbertVector::new((0..dim).map(|_| self.complex_gaussian()).collect())
    }
}

/// Haar-distributed point of the unit sphere of `C^dim`.
pub fn random_unit_vector(rng: &mut RandomSource, dim: usize) -> Result<UnitVector> {
    if dim < 2 {
        return Err(GeometryError::DimensionTooSmall(dim));
    }
    loop {
        if let Ok(u) = UnitVector::new(rng.gaussian_vector(dim)?) {
            return Ok(u);
        }
    }
}

/// `count` orthonormal vectors, the first columns of a Haar unitary.
pub fn random_unitary_frame(
    rng: &mut RandomSource,
    dim: usize,
    count: usize,
) -> Result<Vec<UnitVector>> {
    if count > dim {
        return Err(GeometryError::InvalidArgument(format!(
            "cannot fit {count} orthonormal vectors in dimension {dim}"
        )));
    }
    loop {
        let columns = (0..count)
            .map(|_| rng.gaussian_vector(dim))
            .collect::<Result<Vec<_>>>()?;
        match orthonormalize(dim, &columns) {
            Ok(frame) => return Ok(frame),
            Err(GeometryError::RankDeficientFrame) => continue,
            Err(e) => return Err(e),
        }
    }
}

/// Projection onto a Haar-random subspace of dimension `rank`.
pub fn random_event(rng: &mut RandomSource, dim: usize, rank: usize) -> Result<Event> {
    if dim < 2 {
        return Err(GeometryError::DimensionTooSmall(dim));
    }
    if rank > dim {
        return Err(GeometryError::InvalidArgument(format!(
            "rank {rank} exceeds dimension {dim}"
        )));
    }
    match rank {
        0 => Event::zero(dim),
        r if r == dim => Event::identity(dim),
        r => event_from_frame(dim, &random_unitary_frame(rng, dim, r)?),
    }
}

pub fn random_subspace(
    rng: &mut RandomSource,
    dim: usize,
    rank: usize,
) -> Result<ProjectiveSubspace> {
    random_event(rng, dim, rank).map(|e| ProjectiveSubspace::from_event(&e))
}

/// Haar-random point of a non-empty subspace: a random unit combination of its frame.
pub fn random_point_in(rng: &mut RandomSource, s: &ProjectiveSubspace) -> Result<ProjectivePoint> {
    if s.is_empty() {
        return Err(GeometryError::EmptySubspace);
    }
    loop {
        let mut v = HilbertVector::zeros(s.ambient_dim())?;
        for c in s.frame() {
            v = v.add(&c.as_vector().scaled(rng.complex_gaussian()))?;
        }
        if let Ok(u) = UnitVector::new(v) {
            return Ok(pi2_project(&u));
        }
    }
}

/// `lambda` with `log10 |lambda|` uniform on `[-3, 3]` and uniform phase.
pub fn random_scalar(rng: &mut RandomSource) -> Complex64 {
    let modulus = 10f64.powf(6.0 * rng.uniform() - 3.0);
    Complex64::from_polar(modulus, std::f64::consts::TAU * rng.uniform())
}
