use std::fmt;

/// Certified interval `[lower, upper]` for a norm quantity. `upper` is `None`
/// when nothing better than "finite" is known.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormBound {
    pub lower: f64,
    pub upper: Option<f64>,
}

impl NormBound {
    /// Builds a bound, clamping `lower` into `[0, upper]`.
    ///
    /// The clamp only ever moves `lower` by rounding-level amounts when the
    /// upper value comes from an exact certificate.
    pub fn new(lower: f64, upper: Option<f64>) -> Self {
        let mut lower = lower.max(0.0);
        if let Some(u) = upper {
            lower = lower.min(u);
        }
        NormBound { lower, upper }
    }

    pub fn exact(value: f64) -> Self {
        NormBound::new(value, Some(value))
    }

    pub fn lower_only(lower: f64) -> Self {
        NormBound::new(lower, None)
    }

    pub fn is_exact(&self) -> bool {
        self.upper == Some(self.lower)
    }

    pub fn width(&self) -> f64 {
        self.upper.map_or(f64::INFINITY, |u| u - self.lower)
    }
}

impl fmt::Display for NormBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.upper {
            Some(u) => write!(f, "[{}, {}]", self.lower, u),
            None => write!(f, "[{}, inf]", self.lower),
        }
    }
}
