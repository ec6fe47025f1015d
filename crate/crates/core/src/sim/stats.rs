use statrs::distribution::{ContinuousCDF, StudentsT};

/// Point estimate with a 95% confidence half-width from batch means.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Estimate {
    pub mean: f64,
    pub half_width: f64,
}

impl Estimate {
    pub fn from_batches(batches: &[f64]) -> Self {
        let b = batches.len() as f64;
        let mean = batches.iter().sum::<f64>() / b;
        if batches.len() < 2 {
            return Self { mean, half_width: 0.0 };
        }
        let var = batches.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (b - 1.0);
        let t = StudentsT::new(0.0, 1.0, b - 1.0)
            .expect("positive degrees of freedom")
            .inverse_cdf(0.975);
        Self {
            mean,
            half_width: t * (var / b).sqrt(),
        }
    }

    /// `|value - mean|` in units of the half-width.
    pub fn z(&self, value: f64) -> f64 {
        if self.half_width > 0.0 {
            (value - self.mean).abs() / self.half_width
        } else if value == self.mean {
            0.0
        } else {
            f64::INFINITY
        }
    }
}
