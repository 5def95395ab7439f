use serde::Serialize;

use crate::error::ProfileError;

pub const MIN_FIT_SAMPLES: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GrowthMode {
    PowerLaw,
    Exponential,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Fit {
    /// log(total) ≈ slope · log(size) + intercept.
    PowerLaw {
        slope: f64,
        intercept: f64,
        rms_residual: f64,
    },
    /// total(k+1) / total(k) for consecutive samples.
    Exponential { ratios: Vec<f64> },
}

/// Fits `(size, total)` samples, sizes strictly increasing.
pub fn fit_growth(samples: &[(f64, f64)], mode: GrowthMode) -> Result<Fit, ProfileError> {
    if samples.len() < MIN_FIT_SAMPLES {
        return Err(ProfileError::InsufficientSamples {
            need: MIN_FIT_SAMPLES,
            got: samples.len(),
        });
    }
    if samples.windows(2).any(|w| w[1].0 <= w[0].0) {
        return Err(ProfileError::NonIncreasingSizes);
    }
    Ok(match mode {
        GrowthMode::Exponential => Fit::Exponential {
            ratios: samples.windows(2).map(|w| w[1].1 / w[0].1).collect(),
        },
        GrowthMode::PowerLaw => {
            let pts: Vec<(f64, f64)> = samples.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
            let n = pts.len() as f64;
            let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
            let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
            let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
            let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
            let slope = sxy / sxx;
            let intercept = my - slope * mx;
            let sse: f64 = pts
                .iter()
                .map(|p| (p.1 - (slope * p.0 + intercept)).powi(2))
                .sum();
            Fit::PowerLaw {
                slope,
                intercept,
                rms_residual: (sse / n).sqrt(),
            }
        }
    })
}

impl Fit {
    pub fn slope(&self) -> Option<f64> {
        match self {
            Fit::PowerLaw { slope, .. } => Some(*slope),
            Fit::Exponential { .. } => None,
        }
    }

    pub fn ratios(&self) -> Option<&[f64]> {
        match self {
            Fit::Exponential { ratios } => Some(ratios),
            Fit::PowerLaw { .. } => None,
        }
    }
}
