//! Cross-checks run by `farey-surgery verify`.
//!
//! Each sweep collects mismatches rather than stopping at the first one so
//! that a failing run names every offending triangle or slope.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::farey::{ball, base_triangle, bfs_distance, flip_path, geodesic_distance, random_walk};
use crate::rationals::{coefficients_with_quotient_sum_at_most, s_sum};
use crate::surgery::{classify, exterior_index, omega, trace, Hyperbolicity};

pub const DEFAULT_SEED: u64 = 0x4f1d_2013;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// BFS radius for the oracle sweeps and the quotient-sum limit for the
    /// slope sweep.
    pub radius: u32,
    pub random_pairs: usize,
    pub seed: u64,
    /// Perturb one distance by one, to prove the harness can fail.
    pub inject_fault: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            radius: 10,
            random_pairs: 1000,
            seed: DEFAULT_SEED,
            inject_fault: false,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepOutcome {
    pub checks: u64,
    pub failures: Vec<String>,
}

impl SweepOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn merge(mut self, other: SweepOutcome) -> SweepOutcome {
        self.checks += other.checks;
        self.failures.extend(other.failures);
        self
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(detail());
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub ball: SweepOutcome,
    pub random_pairs: SweepOutcome,
    pub slopes: SweepOutcome,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.ball.passed() && self.random_pairs.passed() && self.slopes.passed()
    }

    pub fn total_checks(&self) -> u64 {
        self.ball.checks + self.random_pairs.checks + self.slopes.checks
    }
}

/// The walk distance from `△^(0)` against BFS depth for every triangle
/// within `radius`.
pub fn ball_sweep(radius: u32, inject_fault: bool) -> Result<SweepOutcome> {
    let base = base_triangle(0);
    let triangles = ball(&base, radius)?;
    let outcome = triangles
        .par_iter()
        .enumerate()
        .map(|(i, (t, depth))| {
            let mut out = SweepOutcome::default();
            let mut walk = geodesic_distance(&base, t)?;
            if inject_fault && i == triangles.len() - 1 {
                walk += 1;
            }
            out.check(walk == *depth as u64, || {
                format!("d({base}; {t}): walk {walk}, bfs {depth}")
            });
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .fold(SweepOutcome::default(), SweepOutcome::merge);
    Ok(outcome)
}

/// Random pairs at most `radius` apart: walk distance, BFS distance and
/// flip-path length must agree, and the path must be a valid geodesic.
pub fn random_pair_sweep(pairs: usize, radius: u32, seed: u64) -> Result<SweepOutcome> {
    let base = base_triangle(0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut inputs = Vec::with_capacity(pairs);
    for _ in 0..pairs {
        let t1 = random_walk(&base, rng.gen_range(0..=radius), &mut rng)?;
        let t2 = random_walk(&t1, rng.gen_range(0..=radius), &mut rng)?;
        inputs.push((t1, t2));
    }
    let outcome = inputs
        .par_iter()
        .map(|(t1, t2)| {
            let mut out = SweepOutcome::default();
            let walk = geodesic_distance(t1, t2)?;
            let back = geodesic_distance(t2, t1)?;
            let bfs = bfs_distance(t1, t2, radius)? as u64;
            let path = flip_path(t1, t2)?;
            out.check(walk == bfs, || format!("d({t1}; {t2}): walk {walk}, bfs {bfs}"));
            out.check(walk == back, || format!("d({t1}; {t2}) = {walk} but reverse is {back}"));
            out.check(path.len() as u64 == walk && path.is_valid(), || {
                format!(
                    "flip path {t1} -> {t2}: {} flips, valid = {}",
                    path.len(),
                    path.is_valid()
                )
            });
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .fold(SweepOutcome::default(), SweepOutcome::merge);
    Ok(outcome)
}

/// For every hyperbolic slope with `S(p, q) <= max_sum`: the three flip
/// distance identities and agreement of the assembled vertex count with
/// the closed form. Failures are collected, not raised.
pub fn slope_sweep(max_sum: u64) -> Result<SweepOutcome> {
    let mut slopes = coefficients_with_quotient_sum_at_most(max_sum);
    slopes.retain(|x| classify(*x) == Hyperbolicity::Hyperbolic);
    slopes.sort_by(|a, b| a.cmp_value(b));
    let outcome = slopes
        .par_iter()
        .map(|&x| {
            let mut out = SweepOutcome::default();
            let t = trace(x)?;
            let s = s_sum(x) as i128;
            let z = exterior_index(x) as i128;
            let d = t.distances;
            out.check(d.d_m_0 as i128 == s - 1, || {
                format!("{x}: d(△_m, △^(0)) = {}, S = {s}", d.d_m_0)
            });
            out.check(d.d_v_0 as i128 == s - 2, || {
                format!("{x}: d(△_V, △^(0)) = {}, S = {s}", d.d_v_0)
            });
            out.check(d.d_v_z as i128 == d.d_v_0 as i128 - z, || {
                format!("{x}: d(△_V, △^(z)) = {}, d(△_V, △^(0)) = {}, z = {z}", d.d_v_z, d.d_v_0)
            });
            let vertices = t.assembly.block.interior_vertices();
            let correction = u64::from(x.is_integer());
            let w = omega(x);
            out.check(vertices == w + correction, || {
                format!("{x}: assembled {vertices} − {correction}, ω = {w}")
            });
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .fold(SweepOutcome::default(), SweepOutcome::merge);
    Ok(outcome)
}

pub fn verify(options: &VerifyOptions) -> Result<VerifyReport> {
    Ok(VerifyReport {
        ball: ball_sweep(options.radius, options.inject_fault)?,
        random_pairs: random_pair_sweep(options.random_pairs, options.radius, options.seed)?,
        slopes: slope_sweep(options.radius as u64)?,
    })
}
