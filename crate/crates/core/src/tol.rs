//! Centralized numerical tolerances and grid defaults.
//!
//! Every threshold used by the engine lives here so that tests and the CLI
//! agree on the same values.

/// Simplex weights must be nonnegative and sum to 1 within this tolerance.
pub const SIMPLEX_TOL: f64 = 1e-9;

/// A strategy attains a best reply if its payoff is within this tolerance
/// of the maximum, in payoff units.
pub const BEST_REPLY_TOL: f64 = 1e-6;

/// A deviation refutes a claim only if it beats the incumbent payoff by
/// more than this margin (weak inequalities in the equilibrium conditions).
pub const GAIN_TOL: f64 = 1e-6;

/// Default grid resolution: each interval is split into this many steps.
pub const GRID_STEPS: usize = 400;

/// Golden-section argmax refinement target width, in strategy units.
pub const GOLDEN_TOL: f64 = 1e-8;

/// Damping factor for the perceived-best-reply fixed-point iteration.
pub const FP_DAMPING: f64 = 0.5;

/// Iteration cap per seed in the fixed-point solver.
pub const FP_MAX_ITERS: usize = 10_000;

/// Seeds per axis for the fixed-point solver (square lattice).
pub const FP_SEEDS_PER_AXIS: usize = 16;

/// Sign-test tolerance for the taxonomy classifier, as a fraction of the
/// sampled payoff range (central-difference noise floor).
pub const SIGN_TOL_FRAC: f64 = 1e-7;

/// Fraction of genuinely ambiguous derivative samples above which the
/// classifier gives up and reports indeterminate.
pub const AMBIGUOUS_FRAC: f64 = 0.05;

/// Zero-sum detection tolerance as a fraction of the payoff range.
pub const ZERO_SUM_TOL_FRAC: f64 = 1e-9;

/// Lattice edge for validation and detection scans (interior sampling).
pub const LATTICE_33: usize = 33;

/// Lattice edge for Lipschitz-bound estimation.
pub const LATTICE_65: usize = 65;

/// Safety factor applied to the sampled Lipschitz bound.
pub const LIPSCHITZ_SAFETY: f64 = 1.25;

/// Sampled directions for the finite-game monotonicity check.
pub const MONOTONE_DIRS: usize = 129;

/// Alpha-grid size for the finite-game monotonicity check.
pub const MONOTONE_ALPHAS: usize = 33;

/// Points used to sample a continuum equilibrium component when verifying
/// a strong claim over a finite game.
pub const COMPONENT_SAMPLES: usize = 65;

/// Default number of blind-belief targets per player in a deviation family.
pub const BLIND_GRID: usize = 101;

/// Default number of random monotone piecewise deviations per player.
pub const PIECEWISE_SAMPLES: usize = 64;

/// Default RNG seed for seeded family generation.
pub const DEFAULT_SEED: u64 = 7;

/// Default raster resolution for region output.
pub const REGION_RESOLUTION: usize = 200;
