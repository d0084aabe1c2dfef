//! Floating-point accumulation modes for score arithmetic.

/// Controls how score sums and means are accumulated.
///
/// [`Precision::F32`] rounds every arithmetic step through 32-bit floats,
/// which reproduces the kind of single-precision drift seen in systems that
/// accumulate scores as `float`. Results are widened back to `f64` so the
/// rest of the pipeline is unchanged.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Precision {
    /// Double-precision accumulation (default).
    #[default]
    F64,
    /// Round each accumulation step to 32-bit precision.
    F32,
}

impl Precision {
    pub fn add(self, a: f64, b: f64) -> f64 {
        match self {
            Precision::F64 => a + b,
            Precision::F32 => f64::from(a as f32 + b as f32),
        }
    }

    pub fn mul(self, a: f64, b: f64) -> f64 {
        match self {
            Precision::F64 => a * b,
            Precision::F32 => f64::from(a as f32 * b as f32),
        }
    }

    pub fn div(self, a: f64, b: f64) -> f64 {
        match self {
            Precision::F64 => a / b,
            Precision::F32 => f64::from(a as f32 / b as f32),
        }
    }

    /// Arithmetic mean of a non-empty sequence, accumulated in this mode.
    pub fn mean(self, values: impl IntoIterator<Item = f64>) -> f64 {
        let mut sum = 0.0;
        let mut count = 0usize;
        for value in values {
            sum = self.add(sum, value);
            count += 1;
        }
        self.div(sum, count as f64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f64_mean_is_plain_mean() {
        let mean = Precision::F64.mean([7.0, 4.0, 2.0]);
        assert_eq!(mean, 13.0 / 3.0);
    }

    #[test]
    fn f32_mean_rounds_each_step() {
        let mean = Precision::F32.mean([7.0, 4.0, 2.0]);
        assert_eq!(mean, f64::from(13.0_f32 / 3.0_f32));
        assert_ne!(mean, 13.0 / 3.0);
    }

    #[test]
    fn f32_ops_round_through_single_precision() {
        let third = Precision::F32.div(1.0, 3.0);
        assert_eq!(third, f64::from(1.0_f32 / 3.0_f32));
        assert_eq!(Precision::F32.mul(0.1, 0.2), f64::from(0.1_f32 * 0.2_f32));
    }
}
