//! Numeric realization search: random-restart damped least squares on the
//! squared-distance residuals. A positive result is a certificate (it passes
//! `verify` at the sampling tolerance); absence means only "not found".

use super::{Embedding, EmbeddingError};
use crate::geometry::{Point, Scalar};
use crate::graphs::{BicoloredGraph, EdgeLabel, SimpleGraph};
use nalgebra::{DMatrix, DVector};
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Search budget and convergence thresholds for `realize`.
#[derive(Clone, Debug)]
pub struct RealizeConfig {
    /// Number of random restarts.
    pub attempts: usize,
    /// Iteration cap per restart.
    pub max_iterations: usize,
    /// Master seed; restart i derives its own generator from (seed, i).
    pub seed: u64,
    /// Stop a restart when the update step is shorter than this.
    pub step_tolerance: f64,
    /// Accept when every |dist² − target²| is below this.
    pub residual_tolerance: f64,
}

impl Default for RealizeConfig {
    fn default() -> Self {
        RealizeConfig {
            attempts: 64,
            max_iterations: 256,
            seed: 0,
            step_tolerance: 1e-14,
            residual_tolerance: 1e-10,
        }
    }
}

const MAX_REALIZE_N: usize = 16;
/// Points closer than this are treated as coincident during the search.
const COINCIDENCE_DIST: f64 = 1e-3;
const INIT_RANGE: f64 = 2.0;

/// Searches for a unit-distance embedding of a simple graph. `None` means
/// "not found within the budget", never "not realizable".
pub fn realize(g: &SimpleGraph, cfg: &RealizeConfig) -> Result<Option<Embedding>, EmbeddingError> {
    let targets: Vec<(usize, usize, f64)> =
        g.edges().map(|(u, v)| (u, v, 1.0)).collect();
    solve(g.n(), &targets, cfg)
}

/// Searches for an embedding of a bicolored graph with UNIT edges at length 1
/// and D edges at length `d`.
pub fn realize_bicolored(
    bg: &BicoloredGraph,
    d: &Scalar,
    cfg: &RealizeConfig,
) -> Result<Option<Embedding>, EmbeddingError> {
    if !d.is_positive() {
        return Err(EmbeddingError::NonpositiveD);
    }
    let df = d.to_f64();
    let targets: Vec<(usize, usize, f64)> = bg
        .labeled_edges()
        .map(|(u, v, l)| {
            let t = match l {
                EdgeLabel::Unit => 1.0,
                EdgeLabel::D => df,
            };
            (u, v, t)
        })
        .collect();
    solve(bg.n(), &targets, cfg)
}

/// Evaluates `realize_bicolored` on a uniform grid over [d_lo, d_hi].
/// Advisory output: refinable by increasing steps or attempts.
pub fn range_scan(
    bg: &BicoloredGraph,
    d_lo: &Scalar,
    d_hi: &Scalar,
    steps: usize,
    cfg: &RealizeConfig,
) -> Result<Vec<(Scalar, bool)>, EmbeddingError> {
    if !d_lo.is_positive() || d_hi <= d_lo {
        return Err(EmbeddingError::NonpositiveD);
    }
    if steps < 2 {
        return Err(EmbeddingError::InputTooLarge(
            "range scan needs at least 2 steps".into(),
        ));
    }
    let lo = d_lo.to_f64();
    let hi = d_hi.to_f64();
    let mut out = Vec::with_capacity(steps);
    for i in 0..steps {
        let d = lo + (hi - lo) * (i as f64) / ((steps - 1) as f64);
        let ds = Scalar::from_f64(d);
        let found = realize_bicolored(bg, &ds, cfg)?.is_some();
        out.push((ds, found));
    }
    Ok(out)
}

fn solve(
    n: usize,
    targets: &[(usize, usize, f64)],
    cfg: &RealizeConfig,
) -> Result<Option<Embedding>, EmbeddingError> {
    if n > MAX_REALIZE_N {
        return Err(EmbeddingError::InputTooLarge(format!(
            "realize is limited to {MAX_REALIZE_N} vertices, got {n}"
        )));
    }
    if n == 0 {
        return Ok(Some(Embedding::new(vec![])));
    }
    // Restarts are independent and seeded by index, so the lowest-index
    // success is the same whatever the worker count.
    let found = (0..cfg.attempts)
        .into_par_iter()
        .find_first(|&attempt| attempt_once(n, targets, cfg, attempt).is_some())
        .and_then(|attempt| attempt_once(n, targets, cfg, attempt));
    Ok(found.map(|coords| {
        Embedding::new(
            (0..n)
                .map(|i| Point::from_f64(coords[2 * i], coords[2 * i + 1]))
                .collect(),
        )
    }))
}

fn restart_rng(seed: u64, attempt: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ (attempt as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// One damped least-squares descent from a random start. Returns flattened
/// coordinates on success.
fn attempt_once(
    n: usize,
    targets: &[(usize, usize, f64)],
    cfg: &RealizeConfig,
    attempt: usize,
) -> Option<Vec<f64>> {
    let mut rng = restart_rng(cfg.seed, attempt);
    let mut x = DVector::from_fn(2 * n, |_, _| rng.random_range(-INIT_RANGE..INIT_RANGE));
    let mut lambda = 1e-3;
    let mut cost = cost_of(&x, n, targets);
    for _ in 0..cfg.max_iterations {
        if accepted(&x, n, targets, cfg) {
            return Some(x.iter().copied().collect());
        }
        let (r, jac) = residuals_jacobian(&x, n, targets);
        let jt = jac.transpose();
        let g = &jt * &r;
        let mut h = &jt * &jac;
        for i in 0..h.nrows() {
            h[(i, i)] += lambda;
        }
        let step = match h.clone().cholesky() {
            Some(ch) => ch.solve(&g),
            None => {
                lambda = (lambda * 10.0).min(1e10);
                continue;
            }
        };
        if step.norm() < cfg.step_tolerance {
            break;
        }
        let candidate = &x - &step;
        let new_cost = cost_of(&candidate, n, targets);
        if new_cost < cost {
            x = candidate;
            cost = new_cost;
            lambda = (lambda / 3.0).max(1e-12);
        } else {
            lambda = (lambda * 2.0).min(1e10);
        }
    }
    if accepted(&x, n, targets, cfg) {
        Some(x.iter().copied().collect())
    } else {
        None
    }
}

fn pair_dist2(x: &DVector<f64>, i: usize, j: usize) -> f64 {
    let dx = x[2 * i] - x[2 * j];
    let dy = x[2 * i + 1] - x[2 * j + 1];
    dx * dx + dy * dy
}

/// Residual vector: one entry per edge (dist² − target²), plus a barrier
/// entry for every pair inside the coincidence radius.
fn residuals_jacobian(
    x: &DVector<f64>,
    n: usize,
    targets: &[(usize, usize, f64)],
) -> (DVector<f64>, DMatrix<f64>) {
    let barrier2 = COINCIDENCE_DIST * COINCIDENCE_DIST;
    let mut rows: Vec<(usize, usize, f64)> = Vec::new();
    for &(u, v, t) in targets {
        rows.push((u, v, pair_dist2(x, u, v) - t * t));
    }
    for i in 0..n {
        for j in i + 1..n {
            let q = pair_dist2(x, i, j);
            if q < barrier2 {
                rows.push((i, j, q - barrier2));
            }
        }
    }
    let m = rows.len();
    let mut r = DVector::zeros(m);
    let mut jac = DMatrix::zeros(m, 2 * n);
    for (k, &(u, v, res)) in rows.iter().enumerate() {
        r[k] = res;
        let dx = x[2 * u] - x[2 * v];
        let dy = x[2 * u + 1] - x[2 * v + 1];
        jac[(k, 2 * u)] = 2.0 * dx;
        jac[(k, 2 * u + 1)] = 2.0 * dy;
        jac[(k, 2 * v)] = -2.0 * dx;
        jac[(k, 2 * v + 1)] = -2.0 * dy;
    }
    (r, jac)
}

fn cost_of(x: &DVector<f64>, n: usize, targets: &[(usize, usize, f64)]) -> f64 {
    let (r, _) = residuals_jacobian(x, n, targets);
    r.norm_squared()
}

fn accepted(x: &DVector<f64>, n: usize, targets: &[(usize, usize, f64)], cfg: &RealizeConfig) -> bool {
    let barrier2 = COINCIDENCE_DIST * COINCIDENCE_DIST;
    for i in 0..n {
        for j in i + 1..n {
            if pair_dist2(x, i, j) < barrier2 {
                return false;
            }
        }
    }
    targets
        .iter()
        .all(|&(u, v, t)| (pair_dist2(x, u, v) - t * t).abs() < cfg.residual_tolerance)
}
