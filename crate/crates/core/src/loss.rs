//! Robust loss functions `ρ(x, σ)`, their influence functions `ψ = ρ'`, and
//! cost-image construction.
//!
//! | kind            | `ρ(x, σ)`                                              |
//! |-----------------|--------------------------------------------------------|
//! | L1              | `|x|`                                                  |
//! | truncated L1    | `|x|` if `|x| ≤ σ`, else `σ`                           |
//! | negative Gauss  | `1 − exp(−x² / (0.64σ)²)`                              |
//! | Tukey biweight  | `x²/σ² − x⁴/σ⁴ + x⁶/(3σ⁶)` if `|x| ≤ σ`, else `1/3`    |
//! | Geman-Reynolds  | `−σ / (σ + |x|)`                                       |
//!
//! All kinds except L1 have a redescending influence function. Intensities are
//! normalized to `[0, 1]`, so `σ` equals the filter's range parameter `σ_r`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::image::ImagePlane;

/// Scale factor inside the negative-Gauss exponent.
pub const NEGATIVE_GAUSS_SCALE: f64 = 0.64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LossKind {
    L1,
    TruncatedL1,
    NegativeGauss,
    TukeyBiweight,
    GemanReynolds,
}

impl LossKind {
    pub const ALL: [LossKind; 5] = [
        LossKind::L1,
        LossKind::TruncatedL1,
        LossKind::NegativeGauss,
        LossKind::TukeyBiweight,
        LossKind::GemanReynolds,
    ];

    /// Short name used on the command line and in CSV output.
    pub fn name(self) -> &'static str {
        match self {
            LossKind::L1 => "l1",
            LossKind::TruncatedL1 => "tl1",
            LossKind::NegativeGauss => "ngauss",
            LossKind::TukeyBiweight => "tukey",
            LossKind::GemanReynolds => "gr",
        }
    }

    pub fn is_redescending(self) -> bool {
        self != LossKind::L1
    }
}

impl fmt::Display for LossKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LossKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LossKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::invalid(format!("unknown loss '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LossSpec {
    pub kind: LossKind,
    pub sigma: f64,
}

impl LossSpec {
    pub fn new(kind: LossKind, sigma: f64) -> Result<Self> {
        if !(sigma > 0.0) || !sigma.is_finite() {
            return Err(Error::invalid(format!("loss sigma must be > 0, got {sigma}")));
        }
        Ok(Self { kind, sigma })
    }

    #[inline]
    pub fn loss(&self, x: f64) -> f64 {
        loss(self, x)
    }

    #[inline]
    pub fn influence(&self, x: f64) -> f64 {
        influence(self, x)
    }
}

#[inline]
pub fn loss(spec: &LossSpec, x: f64) -> f64 {
    let s = spec.sigma;
    let ax = x.abs();
    match spec.kind {
        LossKind::L1 => ax,
        LossKind::TruncatedL1 => {
            if ax <= s {
                ax
            } else {
                s
            }
        }
        LossKind::NegativeGauss => {
            let c = NEGATIVE_GAUSS_SCALE * s;
            1.0 - (-(x * x) / (c * c)).exp()
        }
        LossKind::TukeyBiweight => {
            if ax <= s {
                let u = (x / s) * (x / s);
                u - u * u + u * u * u / 3.0
            } else {
                1.0 / 3.0
            }
        }
        LossKind::GemanReynolds => -s / (s + ax),
    }
}

/// Derivative of [`loss`]. At the kinks of L1 (`x = 0`) and truncated L1
/// (`|x| = σ`) the value returned is one of the one-sided derivatives.
#[inline]
pub fn influence(spec: &LossSpec, x: f64) -> f64 {
    let s = spec.sigma;
    let sign = if x > 0.0 {
        1.0
    } else if x < 0.0 {
        -1.0
    } else {
        0.0
    };
    match spec.kind {
        LossKind::L1 => sign,
        LossKind::TruncatedL1 => {
            if x.abs() < s {
                sign
            } else {
                0.0
            }
        }
        LossKind::NegativeGauss => {
            let c2 = (NEGATIVE_GAUSS_SCALE * s).powi(2);
            2.0 * x / c2 * (-(x * x) / c2).exp()
        }
        LossKind::TukeyBiweight => {
            if x.abs() <= s {
                let u = 1.0 - (x / s) * (x / s);
                2.0 * x / (s * s) * u * u
            } else {
                0.0
            }
        }
        LossKind::GemanReynolds => sign * s / (s + x.abs()).powi(2),
    }
}

/// Cost image: pixel `p` holds `ρ(θ − src_p)`.
pub fn cost_image(src: &ImagePlane, theta: f64, spec: &LossSpec) -> ImagePlane {
    src.map(|v| loss(spec, theta - v))
}
