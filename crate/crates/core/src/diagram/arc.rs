//! Half-weighted arcs on the curves of a diagram and their pairing.
//!
//! An arc endpoint marked `|` is half-contained: it counts with weight 1/2
//! in intersection sums. `[a,b|` runs from `a` (weight 1) to `b` (weight
//! 1/2) along the curve orientation, `[a,a|` is `a` with weight 1/2, and
//! `|a,b|` halves both ends, with `|a,a|` empty.

use std::collections::BTreeMap;

use super::{CombinatorialDiagram, CurveRef, DiagramError};
use crate::rational::Rational;

/// A crossing → {1/2, 1} weight map supported on one curve. Absent
/// crossings have weight 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcWeighting {
    curve: CurveRef,
    weights: BTreeMap<usize, Rational>,
}

impl ArcWeighting {
    pub fn curve(&self) -> CurveRef {
        self.curve
    }

    pub fn weight(&self, c: usize) -> Rational {
        self.weights.get(&c).cloned().unwrap_or_else(Rational::zero)
    }

    /// Nonzero weights, keyed by crossing index.
    pub fn weights(&self) -> &BTreeMap<usize, Rational> {
        &self.weights
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }
}

impl CombinatorialDiagram {
    fn check_on(&self, curve: CurveRef, c: usize) -> Result<(), DiagramError> {
        if self.lies_on(c, curve) {
            Ok(())
        } else {
            Err(DiagramError::CrossingNotOnCurve {
                crossing: self.id(c).to_string(),
                curve,
            })
        }
    }

    /// Crossings strictly between `a` and `b`, walking forward from `a`.
    fn strictly_between(&self, curve: CurveRef, a: usize, b: usize) -> Vec<usize> {
        let order = self.order(curve);
        let start = order.iter().position(|&x| x == a).expect("a on curve");
        let mut out = Vec::new();
        for step in 1..order.len() {
            let x = order[(start + step) % order.len()];
            if x == b {
                break;
            }
            out.push(x);
        }
        out
    }

    /// The whole curve with weight 1 on every crossing.
    pub fn full_curve(&self, curve: CurveRef) -> ArcWeighting {
        ArcWeighting {
            curve,
            weights: self
                .order(curve)
                .iter()
                .map(|&c| (c, Rational::one()))
                .collect(),
        }
    }

    /// `[a,b|` on `curve`.
    pub fn arc_closed_half(
        &self,
        curve: CurveRef,
        a: usize,
        b: usize,
    ) -> Result<ArcWeighting, DiagramError> {
        self.check_on(curve, a)?;
        self.check_on(curve, b)?;
        let mut weights = BTreeMap::new();
        if a == b {
            weights.insert(a, Rational::half());
        } else {
            weights.insert(a, Rational::one());
            for x in self.strictly_between(curve, a, b) {
                weights.insert(x, Rational::one());
            }
            weights.insert(b, Rational::half());
        }
        Ok(ArcWeighting { curve, weights })
    }

    /// `|a,b|` on `curve`.
    pub fn arc_half_half(
        &self,
        curve: CurveRef,
        a: usize,
        b: usize,
    ) -> Result<ArcWeighting, DiagramError> {
        self.check_on(curve, a)?;
        self.check_on(curve, b)?;
        let mut weights = BTreeMap::new();
        if a != b {
            weights.insert(a, Rational::half());
            for x in self.strictly_between(curve, a, b) {
                weights.insert(x, Rational::one());
            }
            weights.insert(b, Rational::half());
        }
        Ok(ArcWeighting { curve, weights })
    }

    /// `⟨A, B⟩ = Σ_x w_A(x) w_B(x) σ(x)` for one α and one β weighting (in
    /// either order).
    pub fn pair(&self, a: &ArcWeighting, b: &ArcWeighting) -> Result<Rational, DiagramError> {
        if a.curve.family == b.curve.family {
            return Err(DiagramError::SameFamily);
        }
        let (small, large) = if a.weights.len() <= b.weights.len() {
            (a, b)
        } else {
            (b, a)
        };
        Ok(small
            .weights
            .iter()
            .filter_map(|(c, w)| large.weights.get(c).map(|v| w * v * self.sign(*c)))
            .sum())
    }
}
