//! Pipeline parameters and threshold arithmetic.
//!
//! All size thresholds derive from `f(k) = 7k*log2(k)`. The thresholds are
//! real-valued while the quantities they gate (edge counts, set sizes) are
//! integers, so every comparison goes through a guarded ceiling that
//! tolerates a hair of floating-point error.

use thiserror::Error;

/// Absolute slack for integer-vs-real threshold comparisons. A threshold
/// like `7*f(k)` is mathematically integral for powers of two; the f64
/// evaluation may land within one ulp of the integer, and a naive ceiling
/// would then be off by one.
pub const GUARD_BAND: f64 = 1e-9;

/// Guarded ceiling: smallest integer `>= x` up to [`GUARD_BAND`] of slack.
pub fn ceil_guard(x: f64) -> i64 {
    (x - GUARD_BAND).ceil() as i64
}

/// Whether an integer count satisfies `count >= threshold` for a real
/// threshold, with the guard band applied.
pub fn meets(count: usize, threshold: f64) -> bool {
    count as i64 >= ceil_guard(threshold)
}

/// `ceil(n / k)` over integers.
pub fn ceil_div(n: usize, k: usize) -> usize {
    assert!(k > 0, "ceil_div by zero");
    n.div_ceil(k)
}

/// `f(k) = 7k*log2(k)`, the class-size scale everything else is measured in.
pub fn threshold_f(k: f64) -> f64 {
    7.0 * k * k.log2()
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParamError {
    #[error("strict parameters require an integer k >= 2, got {0}")]
    StrictKTooSmall(u32),
    #[error("k must be at least 1, got {0}")]
    KTooSmall(u32),
    #[error("threshold override must be finite and non-negative, got {0}")]
    BadOverride(String),
}

/// Run parameters: `k`, the derived threshold `f(k)`, and the class-size
/// requirement `43*f(k)`.
///
/// Strict parameters enforce the size hypotheses as hard preconditions and
/// turn every internal inequality into an assertion. Relaxed parameters log
/// violations and keep going so small instances can exercise every branch;
/// results then carry no guarantee. Relaxed parameters may also override
/// `f(k)` outright to scale the thresholds down to desk size.
#[derive(Debug, Clone, PartialEq)]
pub struct PipelineParams {
    pub k: u32,
    pub f_k: f64,
    pub class_size_req: f64,
    pub relaxed: bool,
}

impl PipelineParams {
    /// Strict parameters for integer `k >= 2`: `f(k) = 7k*log2(k)`,
    /// class-size requirement `43*f(k) = 301*k*log2(k)`.
    pub fn strict(k: u32) -> Result<Self, ParamError> {
        if k < 2 {
            return Err(ParamError::StrictKTooSmall(k));
        }
        let f_k = threshold_f(k as f64);
        Ok(Self {
            k,
            f_k,
            class_size_req: 43.0 * f_k,
            relaxed: false,
        })
    }

    /// Relaxed parameters with the standard threshold function. `k = 1` is
    /// permitted (all thresholds collapse to zero).
    pub fn relaxed(k: u32) -> Result<Self, ParamError> {
        if k < 1 {
            return Err(ParamError::KTooSmall(k));
        }
        let f_k = threshold_f(k as f64).max(0.0);
        Ok(Self {
            k,
            f_k,
            class_size_req: 43.0 * f_k,
            relaxed: true,
        })
    }

    /// Relaxed parameters with a user-supplied threshold in place of `f(k)`,
    /// e.g. `f = 2/7` to make the dominance threshold exactly 2.
    pub fn relaxed_with_f(k: u32, f_k: f64) -> Result<Self, ParamError> {
        if k < 1 {
            return Err(ParamError::KTooSmall(k));
        }
        if !f_k.is_finite() || f_k < 0.0 {
            return Err(ParamError::BadOverride(format!("{f_k}")));
        }
        Ok(Self {
            k,
            f_k,
            class_size_req: 43.0 * f_k,
            relaxed: true,
        })
    }

    pub fn strict_mode(&self) -> bool {
        !self.relaxed
    }

    /// A color is dominant at a vertex once `7*f(k)` incident edges carry it.
    pub fn dominance_threshold(&self) -> f64 {
        7.0 * self.f_k
    }

    /// Target size `ceil(6*f(k))` for the nice set handed to refinement.
    pub fn nice_target(&self) -> usize {
        ceil_guard(6.0 * self.f_k).max(0) as usize
    }

    /// Required stable-set size `ceil(2*f(k))`.
    pub fn stable_goal(&self) -> usize {
        ceil_guard(2.0 * self.f_k).max(0) as usize
    }

    /// Required edge excess `ceil(f(k))` of the one-edge-per-color subgraph.
    pub fn excess_goal(&self) -> i64 {
        ceil_guard(self.f_k)
    }

    /// Upper bound `ceil(f(k)) - 1` on the number of single-cover colors.
    pub fn covered_limit(&self) -> i64 {
        ceil_guard(self.f_k) - 1
    }

    /// Length budget `ceil(n/k)` for the rainbow cycle on an n-vertex host.
    pub fn cycle_target(&self, n: usize) -> usize {
        ceil_div(n, self.k as usize)
    }
}
