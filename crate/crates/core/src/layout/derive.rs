//! From a validated picture to the combinatorial diagram and the degrees of
//! its β arcs.

use super::geom::sub;
use super::turning::turning_half_turns;
use super::validate::{ccw_order, validate_layout};
use super::{CopySide, HalfInt, LayoutError, RectLayout};
use crate::diagram::{CombinatorialDiagram, Crossing, DiagramData, DiagramError};

fn unknown(what: String) -> LayoutError {
    LayoutError::UnknownReference(what)
}

fn beta(l: &RectLayout, j: usize) -> Result<&super::BetaCurve, LayoutError> {
    l.beta_curve(j).ok_or_else(|| unknown(format!("beta {j}")))
}

/// Horizontal direction (±1) of β where it passes through crossing `id`.
fn beta_direction(l: &RectLayout, id: &str) -> Result<i32, LayoutError> {
    for b in &l.beta {
        for arc in &b.arcs {
            if arc.from.crossing == id {
                let pts = l.arc_points(arc).ok_or_else(|| unknown(id.to_string()))?;
                return Ok(sub(&pts[1], &pts[0]).0.signum());
            }
        }
    }
    Err(unknown(format!("crossing {id} is on no beta curve")))
}

/// Sign of (α tangent, β tangent) at one copy of a crossing. The prime copy
/// turns counterclockwise and the second copy clockwise, so with β running
/// horizontally in direction `s` the sign is that of `−(x − center)·s` on the
/// prime copy and `(x − center)·s` on the second.
pub fn sign_at(l: &RectLayout, id: &str, copy: CopySide) -> Result<i8, LayoutError> {
    let x = l.crossing(id).ok_or_else(|| unknown(id.to_string()))?;
    let pair = l
        .alpha_pair(x.alpha)
        .ok_or_else(|| unknown(format!("alpha {}", x.alpha)))?;
    let side = (&x.point(copy).x - &pair.circle(copy).center.x).signum();
    if side == 0 {
        return Err(LayoutError::DegenerateTangent {
            crossing: id.to_string(),
            copy,
        });
    }
    let s = beta_direction(l, id)?;
    let sign = match copy {
        CopySide::Prime => -side * s,
        CopySide::Second => side * s,
    };
    Ok(sign as i8)
}

/// Degree of one arc (`k` is 0-based within β_j), in half-turns.
pub fn de_arc(l: &RectLayout, j: usize, k: usize) -> Result<HalfInt, LayoutError> {
    let arc = beta(l, j)?
        .arcs
        .get(k)
        .ok_or_else(|| unknown(format!("beta {j} arc {}", k + 1)))?;
    let pts = l
        .arc_points(arc)
        .ok_or_else(|| unknown(format!("beta {j} arc {}", k + 1)))?;
    let dirs: Vec<_> = pts.windows(2).map(|w| sub(&w[1], &w[0])).collect();
    turning_half_turns(&dirs)
}

/// Degree of the whole closed curve β_j; always a whole number of turns on
/// a conforming layout.
pub fn de_beta(l: &RectLayout, j: usize) -> Result<HalfInt, LayoutError> {
    let n = beta(l, j)?.arcs.len();
    let total: HalfInt = (0..n).map(|k| de_arc(l, j, k)).sum::<Result<_, _>>()?;
    if !total.is_integer() {
        return Err(LayoutError::OddBetaDegree {
            beta: j,
            half_turns: total.half_turns,
        });
    }
    Ok(total)
}

/// Degree of β_j from crossing `from` to crossing `to` along its
/// orientation; zero when they coincide.
pub fn de_chain(l: &RectLayout, j: usize, from: &str, to: &str) -> Result<HalfInt, LayoutError> {
    let arcs = &beta(l, j)?.arcs;
    let pos = |id: &str| {
        arcs.iter()
            .position(|a| a.from.crossing == id)
            .ok_or_else(|| unknown(format!("crossing {id} on beta {j}")))
    };
    let (mut k, end) = (pos(from)?, pos(to)?);
    let mut total = HalfInt::default();
    while k != end {
        total += de_arc(l, j, k)?;
        k = (k + 1) % arcs.len();
    }
    Ok(total)
}

/// The combinatorial diagram drawn by a valid layout: signs, cyclic orders,
/// arc degrees and the matching.
pub fn derive_combinatorics(l: &RectLayout) -> Result<CombinatorialDiagram, LayoutError> {
    let report = validate_layout(l);
    if !report.passed() {
        return Err(LayoutError::Invalid(report));
    }
    let g = l.genus;
    let mut beta_orders = Vec::with_capacity(g);
    let mut half_turns = Vec::with_capacity(g);
    let mut beta_of = std::collections::HashMap::new();
    for j in 1..=g {
        let b = beta(l, j)?;
        beta_orders.push(
            b.arcs
                .iter()
                .map(|a| a.from.crossing.clone())
                .collect::<Vec<_>>(),
        );
        for a in &b.arcs {
            beta_of.insert(a.from.crossing.as_str(), j);
        }
        half_turns.push(
            (0..b.arcs.len())
                .map(|k| de_arc(l, j, k).map(|h| h.half_turns))
                .collect::<Result<Vec<_>, _>>()?,
        );
        de_beta(l, j)?;
    }
    let mut crossings = Vec::with_capacity(l.crossings.len());
    for x in &l.crossings {
        let prime = sign_at(l, &x.id, CopySide::Prime)?;
        let second = sign_at(l, &x.id, CopySide::Second)?;
        if prime != second {
            return Err(LayoutError::SignMismatch(x.id.clone()));
        }
        crossings.push(Crossing {
            id: x.id.clone(),
            alpha: x.alpha,
            beta: beta_of[x.id.as_str()],
            sign: prime,
        });
    }
    let alpha_orders = (1..=g)
        .map(|i| {
            ccw_order(l, i, CopySide::Prime)
                .into_iter()
                .map(String::from)
                .collect()
        })
        .collect();
    let data = DiagramData {
        genus: g,
        crossings,
        alpha_orders,
        beta_orders,
        arc_half_turns: Some(half_turns),
        matching: Some(l.matching.clone()),
    };
    CombinatorialDiagram::from_data(&data).map_err(|e| match e {
        DiagramError::Invalid(r) => LayoutError::Invalid(r),
        other => LayoutError::Diagram(other),
    })
}
