//! The Euler term, from stored half-turn counts or measured on the picture.

use super::ThetaError;
use crate::diagram::{CombinatorialDiagram, CurveRef, DiagramError, Matching};
use crate::layout::{de_beta, de_chain, RectLayout};
use crate::matrix::RatMatrix;
use crate::rational::Rational;

fn half_turns(d: &CombinatorialDiagram) -> Result<&[Vec<i64>], DiagramError> {
    d.arc_half_turns().ok_or(DiagramError::MissingHalfTurns)
}

/// `d_e(β_j)` (1-based `j`).
pub fn beta_degree(d: &CombinatorialDiagram, j: usize) -> Result<Rational, DiagramError> {
    let total: i64 = half_turns(d)?[j - 1].iter().sum();
    Ok(Rational::new(total, 2))
}

/// Degree of the β-chain from crossing `from` to crossing `to`, following the
/// curve orientation; zero when they coincide.
pub fn chain_degree(
    d: &CombinatorialDiagram,
    j: usize,
    from: usize,
    to: usize,
) -> Result<Rational, DiagramError> {
    let turns = &half_turns(d)?[j - 1];
    let curve = CurveRef::beta(j);
    let order = d.order(curve);
    let pos = |c: usize| {
        order
            .iter()
            .position(|&x| x == c)
            .ok_or_else(|| DiagramError::CrossingNotOnCurve {
                crossing: d.id(c).to_string(),
                curve,
            })
    };
    let (mut k, end) = (pos(from)?, pos(to)?);
    let mut total = 0i64;
    while k != end {
        total += turns[k];
        k = (k + 1) % order.len();
    }
    Ok(Rational::new(total, 2))
}

/// `d_e(c) = d_e(|c_ρ, c|_β) − Σ_{r,s} J_{sr} ⟨α_r, |c_ρ, c|_β⟩ d_e(β_s)` where
/// `c_ρ` is the matching crossing on the β-curve of `c`.
pub fn de_crossing(
    d: &CombinatorialDiagram,
    j: &RatMatrix,
    m: &Matching,
    c: usize,
) -> Result<Rational, DiagramError> {
    let g = d.genus();
    let beta = d.crossing(c).beta;
    let curve = CurveRef::beta(beta);
    let start = m.on(d, curve);
    let mut value = chain_degree(d, beta, start, c)?;
    let arc = d.arc_half_half(curve, start, c)?;
    if arc.is_empty() {
        return Ok(value);
    }
    let beta_degrees = (1..=g)
        .map(|s| beta_degree(d, s))
        .collect::<Result<Vec<_>, _>>()?;
    for r in 0..g {
        let with_alpha = d.pair(&d.full_curve(CurveRef::alpha(r + 1)), &arc)?;
        if with_alpha.is_zero() {
            continue;
        }
        for (s, deg) in beta_degrees.iter().enumerate() {
            value -= &j[(s, r)] * &with_alpha * deg;
        }
    }
    Ok(value)
}

/// `e = Σ_c J_{j(c)i(c)} σ(c) d_e(c)`.
pub fn euler_term(
    d: &CombinatorialDiagram,
    j: &RatMatrix,
    m: &Matching,
) -> Result<Rational, DiagramError> {
    let mut total = Rational::zero();
    for c in 0..d.crossings().len() {
        total += d.j_of(j, c) * d.sign(c) * de_crossing(d, j, m, c)?;
    }
    Ok(total)
}

fn check_drawn_matching(
    l: &RectLayout,
    d: &CombinatorialDiagram,
    m: &Matching,
) -> Result<(), ThetaError> {
    let drawn = Matching::from_ids(d, &l.matching)?;
    if drawn != *m {
        return Err(ThetaError::MatchingMismatch {
            layout: drawn.ids(d).join(","),
            requested: m.ids(d).join(","),
        });
    }
    Ok(())
}

/// `d_e(c)` measured directly on the picture: chain and curve degrees come
/// from the polylines rather than from stored half-turn counts.
pub fn layout_de_crossing(
    l: &RectLayout,
    d: &CombinatorialDiagram,
    j: &RatMatrix,
    m: &Matching,
    c: usize,
) -> Result<Rational, ThetaError> {
    check_drawn_matching(l, d, m)?;
    let g = d.genus();
    let beta = d.crossing(c).beta;
    let curve = CurveRef::beta(beta);
    let start = m.on(d, curve);
    let mut value = de_chain(l, beta, d.id(start), d.id(c))?.to_rational();
    let arc = d.arc_half_half(curve, start, c)?;
    for r in 0..g {
        let with_alpha = d.pair(&d.full_curve(CurveRef::alpha(r + 1)), &arc)?;
        if with_alpha.is_zero() {
            continue;
        }
        for s in 0..g {
            value -= &j[(s, r)] * &with_alpha * de_beta(l, s + 1)?.to_rational();
        }
    }
    Ok(value)
}

/// `e(w, m)` measured on the picture; `m` must be the matching it was drawn
/// for.
pub fn layout_euler_term(
    l: &RectLayout,
    d: &CombinatorialDiagram,
    j: &RatMatrix,
    m: &Matching,
) -> Result<Rational, ThetaError> {
    let mut total = Rational::zero();
    for c in 0..d.crossings().len() {
        total += d.j_of(j, c) * d.sign(c) * layout_de_crossing(l, d, j, m, c)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::fixtures::*;
    use crate::invariants::tests::q;

    #[test]
    fn d1_with_both_exterior_points() {
        let d = d1();
        let j = d.j_matrix().unwrap();
        let m = Matching::from_ids(&d, &["c"]).unwrap();
        let (c, dd) = (0, 1);
        assert_eq!(beta_degree(&d, 1).unwrap(), q(0, 1));
        assert_eq!(chain_degree(&d, 1, c, dd).unwrap(), q(1, 2));
        assert_eq!(chain_degree(&d, 1, c, c).unwrap(), q(0, 1));
        assert_eq!(de_crossing(&d, &j, &m, c).unwrap(), q(0, 1));
        assert_eq!(de_crossing(&d, &j, &m, dd).unwrap(), q(1, 2));
        assert_eq!(euler_term(&d, &j, &m).unwrap(), q(1, 4));

        // the other exterior point: arc d→c turns three half-turns instead
        let other = d1().with_arc_half_turns(vec![vec![1, 3]]).unwrap();
        assert_eq!(beta_degree(&other, 1).unwrap(), q(2, 1));
        assert_eq!(de_crossing(&other, &j, &m, dd).unwrap(), q(-1, 2));
        assert_eq!(euler_term(&other, &j, &m).unwrap(), q(-1, 4));
    }

    #[test]
    fn d2_d3_and_trivial() {
        let d = d2();
        let m = Matching::from_ids(&d, &["c", "e"]).unwrap();
        assert_eq!(euler_term(&d, &d.j_matrix().unwrap(), &m).unwrap(), q(1, 4));

        let d = d3();
        let j = d.j_matrix().unwrap();
        let m = Matching::from_ids(&d, &["c", "e"]).unwrap();
        let g = d.index_of("g").unwrap();
        assert_eq!(de_crossing(&d, &j, &m, g).unwrap(), q(-1, 2));
        assert_eq!(euler_term(&d, &j, &m).unwrap(), q(1, 2));

        let d = s3();
        let m = Matching::from_ids(&d, &["c"]).unwrap();
        assert_eq!(euler_term(&d, &d.j_matrix().unwrap(), &m).unwrap(), q(0, 1));
    }

    #[test]
    fn matching_crossings_have_zero_degree() {
        for (d, ids) in [
            (d1(), vec!["c"]),
            (d2(), vec!["c", "e"]),
            (d3(), vec!["c", "e"]),
        ] {
            let j = d.j_matrix().unwrap();
            let m = Matching::from_ids(&d, &ids).unwrap();
            for &c in m.crossings() {
                assert_eq!(de_crossing(&d, &j, &m, c).unwrap(), q(0, 1));
            }
        }
    }

    #[test]
    fn missing_half_turns() {
        let mut data = d1_data();
        data.arc_half_turns = None;
        let d = CombinatorialDiagram::from_data(&data).unwrap();
        assert_eq!(beta_degree(&d, 1), Err(DiagramError::MissingHalfTurns));
    }
}
