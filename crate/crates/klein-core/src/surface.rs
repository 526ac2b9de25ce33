//! Topological types of compact Real Riemann surfaces.
//!
//! A compact connected Real Riemann surface `(Σ, τ)` is classified up to
//! equivariant homeomorphism by its type `(g, k, a)`: the genus of `Σ`, the
//! number of circles of real points, and the dividing flag. We follow the
//! convention that `a = 0` means *dividing* (`Σ` minus its real circles is
//! disconnected) and `a = 1` means *non-dividing*; the opposite convention
//! also occurs in the literature.
//!
//! Surfaces are handled purely combinatorially: a quotient `Σ/τ` is recorded
//! as orientability, handle/crosscap count and boundary-circle count, and the
//! Euler characteristic relation `χ(Σ/τ) = (1 - g)` is taken as the contract
//! rather than recomputed from triangulations.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The triple `(g, k, a)` classifying a compact Real Riemann surface.
///
/// `a` is 0 (dividing) or 1 (non-dividing). Arbitrary triples may be built;
/// [`TopologicalType::weichold_valid`] decides whether one is realizable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TopologicalType {
    /// Genus of the complex surface.
    pub g: u32,
    /// Number of circles of real points.
    pub k: u32,
    /// Dividing flag: 0 dividing, 1 non-dividing.
    pub a: u8,
}

/// A compact connected surface with boundary, the quotient `Σ/τ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CompactSurface {
    pub orientable: bool,
    /// Handles if orientable, crosscaps (>= 1) if not.
    pub handles_or_crosscaps: u32,
    /// Number of boundary circles.
    pub boundary: u32,
}

/// The specific Weichold condition a triple violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeicholdViolation {
    /// `a` is neither 0 nor 1.
    FlagRange,
    /// Dividing types need `1 <= k <= g+1`.
    DividingRange,
    /// Dividing types need `k = g+1 (mod 2)`.
    DividingParity,
    /// Non-dividing types need `k <= g`.
    NonDividingBound,
}

impl std::fmt::Display for WeicholdViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            WeicholdViolation::FlagRange => write!(f, "a must be 0 or 1"),
            WeicholdViolation::DividingRange => {
                write!(f, "a = 0 requires 1 <= k <= g+1")
            }
            WeicholdViolation::DividingParity => {
                write!(f, "a = 0 requires k = g+1 (mod 2)")
            }
            WeicholdViolation::NonDividingBound => write!(f, "a = 1 requires k <= g"),
        }
    }
}

impl TopologicalType {
    pub fn new(g: u32, k: u32, a: u8) -> Self {
        TopologicalType { g, k, a }
    }

    /// The Weichold condition this triple violates, if any.
    pub fn weichold_violation(&self) -> Option<WeicholdViolation> {
        match self.a {
            0 => {
                if self.k < 1 || self.k > self.g + 1 {
                    Some(WeicholdViolation::DividingRange)
                } else if (self.k % 2) != ((self.g + 1) % 2) {
                    Some(WeicholdViolation::DividingParity)
                } else {
                    None
                }
            }
            1 => {
                if self.k > self.g {
                    Some(WeicholdViolation::NonDividingBound)
                } else {
                    None
                }
            }
            _ => Some(WeicholdViolation::FlagRange),
        }
    }

    /// Total predicate: is `(g, k, a)` the type of an actual real curve?
    pub fn weichold_valid(&self) -> bool {
        self.weichold_violation().is_none()
    }

    fn checked(&self) -> Result<()> {
        match self.weichold_violation() {
            None => Ok(()),
            Some(v) => Err(Error::Domain(format!(
                "invalid topological type (g={}, k={}, a={}): {v}",
                self.g, self.k, self.a
            ))),
        }
    }

    /// Whether the type attains Harnack's bound `k = g+1` (an M-curve).
    pub fn is_maximal_curve(&self) -> Result<bool> {
        self.checked()?;
        Ok(self.k == self.g + 1)
    }

    /// The quotient surface `Σ/τ` of a surface of this type.
    ///
    /// Dividing types quotient to an orientable surface with
    /// `(g+1-k)/2` handles and `k` boundary circles; non-dividing types to a
    /// non-orientable surface with `g+1-k` crosscaps and `k` boundary circles.
    pub fn quotient_surface(&self) -> Result<CompactSurface> {
        self.checked()?;
        if self.a == 0 {
            Ok(CompactSurface {
                orientable: true,
                handles_or_crosscaps: (self.g + 1 - self.k) / 2,
                boundary: self.k,
            })
        } else {
            Ok(CompactSurface {
                orientable: false,
                handles_or_crosscaps: self.g + 1 - self.k,
                boundary: self.k,
            })
        }
    }
}

impl CompactSurface {
    pub fn orientable(handles: u32, boundary: u32) -> Self {
        CompactSurface {
            orientable: true,
            handles_or_crosscaps: handles,
            boundary,
        }
    }

    pub fn non_orientable(crosscaps: u32, boundary: u32) -> Self {
        CompactSurface {
            orientable: false,
            handles_or_crosscaps: crosscaps,
            boundary,
        }
    }

    /// `2 - 2ĝ - r` in the orientable case, `2 - h - l` otherwise.
    pub fn euler_characteristic(&self) -> i64 {
        let b = i64::from(self.boundary);
        let hc = i64::from(self.handles_or_crosscaps);
        if self.orientable {
            2 - 2 * hc - b
        } else {
            2 - hc - b
        }
    }

    /// The topological type of the double of this surface.
    ///
    /// The double glues two copies of the surface along the boundary (with a
    /// fixed-point-free twist over the circles bounding removed Möbius bands
    /// in the non-orientable case); the orientation-reversing exchange of the
    /// copies realizes the type. A closed orientable surface has a
    /// disconnected double and is rejected.
    pub fn double_surface(&self) -> Result<TopologicalType> {
        if self.orientable {
            if self.boundary == 0 {
                return Err(Error::domain(
                    "disconnected double: a closed orientable surface doubles to two components",
                ));
            }
            Ok(TopologicalType {
                g: 2 * self.handles_or_crosscaps + self.boundary - 1,
                k: self.boundary,
                a: 0,
            })
        } else {
            if self.handles_or_crosscaps == 0 {
                return Err(Error::domain(
                    "non-orientable surface needs at least one crosscap",
                ));
            }
            Ok(TopologicalType {
                g: self.handles_or_crosscaps + self.boundary - 1,
                k: self.boundary,
                a: 1,
            })
        }
    }
}

/// All topological types of real structures on a genus-`g` surface,
/// ordered by `(a, k)` ascending.
pub fn enumerate_topological_types(g: u32) -> Vec<TopologicalType> {
    let mut out = Vec::new();
    for a in 0..=1u8 {
        for k in 0..=g + 1 {
            let t = TopologicalType { g, k, a };
            if t.weichold_valid() {
                out.push(t);
            }
        }
    }
    out
}

/// `floor((3g+4)/2)`, the number of types for genus `g`.
pub fn count_topological_types(g: u32) -> u64 {
    (3 * u64::from(g) + 4) / 2
}
