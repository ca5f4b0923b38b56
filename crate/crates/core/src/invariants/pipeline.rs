//! End-to-end evaluation from a layout or a combinatorial diagram.

use super::{explain, layout_euler_term, theta_report, ThetaOptions, ThetaReport};
use crate::diagram::{BasepointChoice, CombinatorialDiagram, CurveRef, DiagramError, Matching};
use crate::layout::{derive_combinatorics, LayoutError, RectLayout};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ThetaError {
    #[error("layout: {0}")]
    Layout(#[from] LayoutError),
    #[error("diagram: {0}")]
    Diagram(#[from] DiagramError),
    #[error("matching {{{requested}}} is not the matching {{{layout}}} the picture was drawn for")]
    MatchingMismatch { layout: String, requested: String },
}

/// What to compute beyond the defaults (the drawn matching, basepoints at
/// its crossings, no λ).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ComputeRequest {
    pub matching: Option<Vec<String>>,
    pub basepoints: Vec<(CurveRef, String)>,
    pub lambda: Option<Rational>,
}

#[derive(Debug, Clone)]
pub struct Computation {
    pub diagram: CombinatorialDiagram,
    pub matching: Matching,
    pub basepoints: BasepointChoice,
    pub options: ThetaOptions,
    pub report: ThetaReport,
    /// A matching other than the drawn one was requested, so `e` and `Θ`
    /// were withheld.
    pub matching_mismatch: bool,
}

impl Computation {
    /// Term-by-term breakdown of the report.
    pub fn explain(&self) -> Vec<String> {
        explain(
            &self.diagram,
            &self.matching,
            &self.basepoints,
            &self.options,
        )
        .expect("inputs already evaluated once")
        .1
    }
}

/// Evaluates a diagram. `drawn` is the matching its half-turn data belongs
/// to; `e` and `Θ` are produced only for that matching.
pub fn compute(
    d: CombinatorialDiagram,
    drawn: Option<Matching>,
    req: &ComputeRequest,
) -> Result<Computation, ThetaError> {
    let matching = match (&req.matching, &drawn) {
        (Some(ids), _) => Matching::from_ids(&d, ids)?,
        (None, Some(m)) => m.clone(),
        (None, None) => {
            return Err(DiagramError::InvalidMatching("no matching given".into()).into())
        }
    };
    let matching_mismatch = drawn.as_ref().is_some_and(|m| *m != matching);
    let basepoints =
        BasepointChoice::from_matching(&d, &matching).with_overrides(&d, &req.basepoints)?;
    let options = ThetaOptions {
        with_euler: drawn.as_ref() == Some(&matching) && d.arc_half_turns().is_some(),
        lambda: req.lambda.clone(),
    };
    let report = theta_report(&d, &matching, &basepoints, &options)?;
    Ok(Computation {
        diagram: d,
        matching,
        basepoints,
        options,
        report,
        matching_mismatch,
    })
}

/// Θ of a layout: derive the diagram, then evaluate. The Euler term is also
/// measured directly on the picture and must agree with the one computed
/// from the derived half-turn counts.
pub fn theta(l: &RectLayout, req: &ComputeRequest) -> Result<Computation, ThetaError> {
    let d = derive_combinatorics(l)?;
    let drawn = Matching::from_ids(&d, &l.matching)?;
    let out = compute(d, Some(drawn), req)?;
    if let Some(e) = &out.report.euler {
        let j = out.diagram.j_matrix()?;
        let measured = layout_euler_term(l, &out.diagram, &j, &out.matching)?;
        assert_eq!(
            *e, measured,
            "Euler term from half-turns disagrees with the picture"
        );
    }
    Ok(out)
}
