use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;

use crate::model::Charge;
use crate::{Error, Result, C64};

pub const UNITARITY_TOL: f64 = 1e-9;

/// Beam splitters `T_j = [[t_j, r_j*], [r_j, -t_j*]]`, path phases and probe charge.
#[derive(Clone, Debug, PartialEq)]
pub struct InterferometerConfig {
    pub t1: C64,
    pub r1: C64,
    pub t2: C64,
    pub r2: C64,
    pub theta_i: f64,
    pub theta_ii: f64,
    pub probe: Charge,
    /// Full twists `(l, r)` in the left and right arms.
    pub twists: (i32, i32),
}

impl InterferometerConfig {
    /// Checked constructor for an untwisted interferometer.
    pub fn new(t1: C64, r1: C64, t2: C64, r2: C64, theta_i: f64, theta_ii: f64, probe: Charge) -> Result<Self> {
        let config = InterferometerConfig {
            t1,
            r1,
            t2,
            r2,
            theta_i,
            theta_ii,
            probe,
            twists: (0, 0),
        };
        config.validate()?;
        Ok(config)
    }

    /// 50/50 real splitters with equal path phases.
    pub fn symmetric(probe: Charge) -> Self {
        let h = C64::new(FRAC_1_SQRT_2, 0.0);
        InterferometerConfig {
            t1: h,
            r1: h,
            t2: h,
            r2: h,
            theta_i: 0.0,
            theta_ii: 0.0,
            probe,
            twists: (0, 0),
        }
    }

    /// Sets `theta_I - theta_II = delta` (with `theta_II = 0`).
    pub fn with_detuning(mut self, delta: f64) -> Self {
        self.theta_i = delta;
        self.theta_ii = 0.0;
        self
    }

    pub fn with_probe(mut self, probe: Charge) -> Self {
        self.probe = probe;
        self
    }

    pub fn detuning(&self) -> f64 {
        self.theta_i - self.theta_ii
    }

    pub fn validate(&self) -> Result<()> {
        for (splitter, t, r) in [(1u8, self.t1, self.r1), (2, self.t2, self.r2)] {
            let norm = t.norm_sqr() + r.norm_sqr();
            if !norm.is_finite() || (norm - 1.0).abs() > UNITARITY_TOL {
                return Err(Error::UnitarityViolation { splitter, norm });
            }
        }
        if !self.theta_i.is_finite() || !self.theta_ii.is_finite() {
            return Err(Error::Parse("path phases must be finite".into()));
        }
        Ok(())
    }

    pub(crate) fn require_untwisted(&self) -> Result<()> {
        self.validate()?;
        match self.twists {
            (0, 0) => Ok(()),
            (l, r) => Err(Error::TwistedConfig { l, r }),
        }
    }
}

/// Which detector registered the probe.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProbeOutcome {
    /// The horizontal (`->`) detector.
    Transmitted,
    /// The vertical (`^`) detector.
    Reflected,
}

impl ProbeOutcome {
    pub const BOTH: [ProbeOutcome; 2] = [ProbeOutcome::Transmitted, ProbeOutcome::Reflected];

    pub fn symbol(self) -> &'static str {
        match self {
            ProbeOutcome::Transmitted => "->",
            ProbeOutcome::Reflected => "^",
        }
    }
}

impl fmt::Display for ProbeOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_config_is_unitary() {
        InterferometerConfig::symmetric(Charge(1)).validate().unwrap();
    }

    #[test]
    fn non_unitary_splitter_is_rejected() {
        let one = C64::new(1.0, 0.0);
        let err = InterferometerConfig::new(one, one, one, C64::new(0.0, 0.0), 0.0, 0.0, Charge(1)).unwrap_err();
        assert!(matches!(err, Error::UnitarityViolation { splitter: 1, .. }));
    }

    #[test]
    fn twisted_config_is_refused_by_untwisted_channel() {
        let mut c = InterferometerConfig::symmetric(Charge(1));
        c.twists = (0, 2);
        assert!(matches!(
            c.require_untwisted(),
            Err(Error::TwistedConfig { l: 0, r: 2 })
        ));
    }
}
