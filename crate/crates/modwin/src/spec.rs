//! Names of the built-in window modules.

use std::fmt;
use std::str::FromStr;

use crate::WinError;

/// A built-in module. Every module is the submodule generated by its
/// generators inside an ambient `𝒜^L_{[lo,hi)}(L^m, H^−)`, the degree
/// `lo..hi` part of `𝒜^L(L^m, H^−)` modulo degree `≥ hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WindowSpec {
    /// `𝒜_{≥lo}(0,−)/𝒜_{≥hi}(0,−)`; `T(A_d)` is `Band { lo: d, hi: d+1 }`.
    Band { lo: usize, hi: usize },
    /// `𝒜Q/𝒜Q_{≥hi}`, generated by `Q_2`.
    QBand { hi: usize },
    /// `A_d P`, generated by `P_d`.
    P { d: usize },
    /// `A_d Q`, generated by `Q_d`.
    Q { d: usize },
    /// `A^L_d = 𝒜^L_d(L, H^−)`.
    Lie { d: usize },
    /// `A^L_d P`, generated by `P^L_d`.
    LieP { d: usize },
    /// `A^L_d Q`, generated by `Q′_d` and, for `d ≥ 2`, `Q″_d`.
    LieQ { d: usize },
    Zero,
}

impl WindowSpec {
    /// `(m, lo, hi)` of the ambient module.
    pub fn ambient(&self) -> (usize, usize, usize) {
        match *self {
            WindowSpec::Band { lo, hi } => (0, lo, hi),
            WindowSpec::QBand { hi } => (0, 2, hi),
            WindowSpec::P { d } | WindowSpec::Q { d } => (0, d, d + 1),
            WindowSpec::Lie { d } | WindowSpec::LieP { d } | WindowSpec::LieQ { d } => (1, d, d + 1),
            WindowSpec::Zero => (0, 0, 0),
        }
    }

    /// Whether the generators generate the whole ambient module.
    pub fn is_ambient(&self) -> bool {
        matches!(self, WindowSpec::Band { .. } | WindowSpec::Lie { .. } | WindowSpec::Zero)
    }

    /// The highest degree present.
    pub fn top_degree(&self) -> usize {
        let (_, lo, hi) = self.ambient();
        hi.saturating_sub(1).max(lo)
    }

    /// The default window `N = 2·d + 2 + m` for the top degree `d`.
    pub fn default_window(&self) -> usize {
        let (m, _, _) = self.ambient();
        2 * self.top_degree() + 2 + m
    }

    fn validate(&self) -> Result<(), WinError> {
        let bad = |s: &str| Err(WinError::Invalid(s.into()));
        match *self {
            WindowSpec::Band { lo, hi } if hi <= lo => bad("need lo < hi"),
            WindowSpec::QBand { hi } if hi <= 2 => bad("need hi ≥ 3"),
            WindowSpec::Q { d } if d < 2 => bad("Q_d needs d ≥ 2"),
            WindowSpec::P { d } if d < 1 => bad("P_d needs d ≥ 1"),
            WindowSpec::LieP { d } | WindowSpec::LieQ { d } if d < 1 => bad("needs d ≥ 1"),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for WindowSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            WindowSpec::Band { lo, hi } if hi == lo + 1 => write!(f, "A{lo}"),
            WindowSpec::Band { lo, hi } => write!(f, "A{lo}modA{hi}"),
            WindowSpec::QBand { hi } => write!(f, "AQmodAQ{hi}"),
            WindowSpec::P { d } => write!(f, "A{d}P"),
            WindowSpec::Q { d } => write!(f, "A{d}Q"),
            WindowSpec::Lie { d } => write!(f, "AL{d}"),
            WindowSpec::LieP { d } => write!(f, "AL{d}P"),
            WindowSpec::LieQ { d } => write!(f, "AL{d}Q"),
            WindowSpec::Zero => write!(f, "zero"),
        }
    }
}

fn number(s: &str) -> Result<usize, WinError> {
    s.parse().map_err(|_| WinError::Invalid(format!("bad number {s:?}")))
}

impl FromStr for WindowSpec {
    type Err = WinError;

    /// Accepts `A{d}`, `A{d}modA{d′}`, `TA{d}`, `AQmodAQ{d′}`, `A{d}P`,
    /// `A{d}Q`, `AL{d}`, `AL{d}P`, `AL{d}Q` and `zero`.
    fn from_str(s: &str) -> Result<Self, WinError> {
        let s = s.trim();
        let spec = if s == "zero" {
            WindowSpec::Zero
        } else if let Some(rest) = s.strip_prefix("AQmodAQ") {
            WindowSpec::QBand { hi: number(rest)? }
        } else if let Some(rest) = s.strip_prefix("AL") {
            if let Some(d) = rest.strip_suffix('P') {
                WindowSpec::LieP { d: number(d)? }
            } else if let Some(d) = rest.strip_suffix('Q') {
                WindowSpec::LieQ { d: number(d)? }
            } else {
                WindowSpec::Lie { d: number(rest)? }
            }
        } else if let Some(rest) = s.strip_prefix("TA") {
            let d = number(rest)?;
            WindowSpec::Band { lo: d, hi: d + 1 }
        } else if let Some(rest) = s.strip_prefix('A') {
            if let Some((a, b)) = rest.split_once("modA") {
                WindowSpec::Band { lo: number(a)?, hi: number(b)? }
            } else if let Some(d) = rest.strip_suffix('P') {
                WindowSpec::P { d: number(d)? }
            } else if let Some(d) = rest.strip_suffix('Q') {
                WindowSpec::Q { d: number(d)? }
            } else {
                let d = number(rest)?;
                WindowSpec::Band { lo: d, hi: d + 1 }
            }
        } else {
            return Err(WinError::Invalid(format!("unknown module {s:?}")));
        };
        spec.validate()?;
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in ["A0modA2", "A2", "AQmodAQ4", "A3Q", "A2P", "AL1", "AL2Q", "AL1P", "zero", "A1modA3"] {
            let spec: WindowSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert_eq!("TA2".parse::<WindowSpec>().unwrap(), WindowSpec::Band { lo: 2, hi: 3 });
        assert!("A1Q".parse::<WindowSpec>().is_err());
        assert!("A3modA3".parse::<WindowSpec>().is_err());
        assert!("B2".parse::<WindowSpec>().is_err());
    }
}
