//! The linking-form terms ℓ(c,d), ℓ₂ and lk, the Euler term e, and Θ.

mod euler;
mod pipeline;
mod theta;

use crate::diagram::{
    cycle_check, l_cycle_coefficients, BasepointChoice, CombinatorialDiagram, CurveRef,
    DiagramError, Matching, PairCoefficients,
};
use crate::matrix::RatMatrix;
use crate::rational::Rational;

pub use euler::{
    beta_degree, chain_degree, de_crossing, euler_term, layout_de_crossing, layout_euler_term,
};
pub use pipeline::{compute, theta, Computation, ComputeRequest, ThetaError};
pub use theta::{diagram_hash, explain, theta_report, ThetaOptions, ThetaReport};

/// All values `ℓ(c,d)` for one choice of basepoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EllTable {
    values: RatMatrix,
}

impl EllTable {
    pub fn new(
        d: &CombinatorialDiagram,
        j: &RatMatrix,
        bp: &BasepointChoice,
    ) -> Result<Self, DiagramError> {
        let g = d.genus();
        let n = d.crossings().len();
        // For each crossing: its α-arc from the basepoint, and the pairings
        // of that arc with every β-curve.
        let mut alpha_arcs = Vec::with_capacity(n);
        let mut beta_arcs = Vec::with_capacity(n);
        for c in 0..n {
            let x = d.crossing(c);
            let a_curve = CurveRef::alpha(x.alpha);
            let b_curve = CurveRef::beta(x.beta);
            let a = d.arc_closed_half(a_curve, bp.on(a_curve), c)?;
            let b = d.arc_closed_half(b_curve, bp.on(b_curve), c)?;
            let with_betas = (1..=g)
                .map(|jj| d.pair(&a, &d.full_curve(CurveRef::beta(jj))))
                .collect::<Result<Vec<_>, _>>()?;
            let with_alphas = (1..=g)
                .map(|ii| d.pair(&d.full_curve(CurveRef::alpha(ii)), &b))
                .collect::<Result<Vec<_>, _>>()?;
            alpha_arcs.push((a, with_betas));
            beta_arcs.push((b, with_alphas));
        }
        let mut values = RatMatrix::zeros(n);
        for (c, (a, a_beta)) in alpha_arcs.iter().enumerate() {
            for (e, (b, alpha_b)) in beta_arcs.iter().enumerate() {
                let mut v = d.pair(a, b)?;
                for (jj, ab) in a_beta.iter().enumerate() {
                    if ab.is_zero() {
                        continue;
                    }
                    for (ii, ba) in alpha_b.iter().enumerate() {
                        v -= &j[(jj, ii)] * ab * ba;
                    }
                }
                values[(c, e)] = v;
            }
        }
        Ok(EllTable { values })
    }

    pub fn get(&self, c: usize, e: usize) -> &Rational {
        &self.values[(c, e)]
    }

    pub fn len(&self) -> usize {
        self.values.size()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `Σ g_{cd} ℓ(c,d)` and `Σ g_{cd} ℓ(d,c)`.
    fn both_sums(&self, g: &PairCoefficients) -> (Rational, Rational) {
        let mut straight = Rational::zero();
        let mut swapped = Rational::zero();
        for (c, e, v) in g.nonzero() {
            straight += v * self.get(c, e);
            swapped += v * self.get(e, c);
        }
        (straight, swapped)
    }
}

/// One value `ℓ(c,e)`.
pub fn ell(
    d: &CombinatorialDiagram,
    j: &RatMatrix,
    bp: &BasepointChoice,
    c: usize,
    e: usize,
) -> Result<Rational, DiagramError> {
    Ok(EllTable::new(d, j, bp)?.get(c, e).clone())
}

/// `Σ g_{cd} ℓ(c,d)` for a 2-cycle; refuses coefficient maps that are not
/// cycles.
///
/// # Panics
///
/// If the two evaluations `Σ g_{cd} ℓ(c,d)` and `Σ g_{cd} ℓ(d,c)` differ,
/// which cannot happen for a cycle.
pub fn evaluate_cycle(
    d: &CombinatorialDiagram,
    table: &EllTable,
    g: &PairCoefficients,
) -> Result<Rational, DiagramError> {
    if !cycle_check(d, g) {
        return Err(DiagramError::NotACycle);
    }
    let (straight, swapped) = table.both_sums(g);
    assert_eq!(straight, swapped, "cycle evaluations disagree");
    Ok(straight)
}

pub fn ell_two(d: &CombinatorialDiagram, bp: &BasepointChoice) -> Result<Rational, DiagramError> {
    let j = d.j_matrix()?;
    let table = EllTable::new(d, &j, bp)?;
    ell_two_with(d, &table)
}

pub(crate) fn ell_two_with(
    d: &CombinatorialDiagram,
    table: &EllTable,
) -> Result<Rational, DiagramError> {
    evaluate_cycle(d, table, &PairCoefficients::linking_form(d)?)
}

/// `lk(L(m), L(m)∥)`, evaluated as the tensor square of the matching cycle.
pub fn lk_parallel(
    d: &CombinatorialDiagram,
    bp: &BasepointChoice,
    m: &Matching,
) -> Result<Rational, DiagramError> {
    let j = d.j_matrix()?;
    let table = EllTable::new(d, &j, bp)?;
    lk_parallel_with(d, &table, m)
}

pub(crate) fn lk_parallel_with(
    d: &CombinatorialDiagram,
    table: &EllTable,
    m: &Matching,
) -> Result<Rational, DiagramError> {
    let t = l_cycle_coefficients(d, m)?;
    evaluate_cycle(d, table, &PairCoefficients::tensor_square(&t))
}

/// `lk(L(m), L(m)∥)` written out as three sums: over pairs of matching
/// crossings, over all pairs weighted by `Jσ`, and the mixed terms.
pub fn lk_parallel_expanded(
    d: &CombinatorialDiagram,
    bp: &BasepointChoice,
    m: &Matching,
) -> Result<Rational, DiagramError> {
    let j = d.j_matrix()?;
    let table = EllTable::new(d, &j, bp)?;
    let n = d.crossings().len();
    let weight: Vec<Rational> = (0..n).map(|c| d.j_of(&j, c) * d.sign(c)).collect();
    let mut total = Rational::zero();
    for &ci in m.crossings() {
        for &cj in m.crossings() {
            total += table.get(ci, cj).clone();
        }
    }
    for c in 0..n {
        for e in 0..n {
            total += &weight[c] * &weight[e] * table.get(c, e);
        }
    }
    for &ci in m.crossings() {
        for c in 0..n {
            total -= &weight[c] * (table.get(ci, c) + table.get(c, ci));
        }
    }
    Ok(total)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::diagram::fixtures::*;

    pub(crate) fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn matching_bp(d: &CombinatorialDiagram, ids: &[&str]) -> (Matching, BasepointChoice) {
        let m = Matching::from_ids(d, ids).unwrap();
        let bp = BasepointChoice::from_matching(d, &m);
        (m, bp)
    }

    #[test]
    fn ell_values_on_d1() {
        let d = d1();
        let (_, bp) = matching_bp(&d, &["c"]);
        let t = EllTable::new(&d, &d.j_matrix().unwrap(), &bp).unwrap();
        for c in 0..2 {
            for e in 0..2 {
                assert_eq!(*t.get(c, e), q(1, 8));
            }
        }
    }

    #[test]
    fn ell_values_on_d2() {
        let d = d2();
        let (_, bp) = matching_bp(&d, &["c", "e"]);
        let j = d.j_matrix().unwrap();
        let ix = |s| d.index_of(s).unwrap();
        let t = EllTable::new(&d, &j, &bp).unwrap();
        assert_eq!(*t.get(ix("e"), ix("e")), q(0, 1));
        assert_eq!(*t.get(ix("c"), ix("e")), q(0, 1));
        assert_eq!(*t.get(ix("e"), ix("c")), q(1, 8));
        for a in ["c", "d"] {
            for b in ["c", "d"] {
                assert_eq!(*t.get(ix(a), ix(b)), q(1, 8));
            }
        }
        assert_eq!(ell(&d, &j, &bp, ix("e"), ix("c")).unwrap(), q(1, 8));
    }

    #[test]
    fn ell_on_single_crossing_vanishes() {
        let d = s3();
        let (_, bp) = matching_bp(&d, &["c"]);
        assert_eq!(ell(&d, &d.j_matrix().unwrap(), &bp, 0, 0).unwrap(), q(0, 1));
    }

    #[test]
    fn ell_two_examples() {
        for (d, ids, expected) in [
            (d1(), vec!["c"], q(0, 1)),
            (d2(), vec!["c", "e"], q(0, 1)),
            (d3(), vec!["c", "e"], q(1, 4)),
            (s3(), vec!["c"], q(0, 1)),
        ] {
            let (m, bp) = matching_bp(&d, &ids);
            assert_eq!(ell_two(&d, &bp).unwrap(), expected);
            assert_eq!(lk_parallel(&d, &bp, &m).unwrap(), q(0, 1));
            assert_eq!(lk_parallel_expanded(&d, &bp, &m).unwrap(), q(0, 1));
        }
    }

    #[test]
    fn d3_ell_relations() {
        let d = d3();
        let (_, bp) = matching_bp(&d, &["c", "e"]);
        let t = EllTable::new(&d, &d.j_matrix().unwrap(), &bp).unwrap();
        let ix = |s| d.index_of(s).unwrap();
        let (g, h) = (ix("g"), ix("h"));
        assert_eq!(t.get(g, g) - t.get(h, g), q(1, 4));
        assert_eq!(t.get(h, h) - t.get(h, g), q(-1, 4));
    }

    #[test]
    fn evaluation_rejects_non_cycles() {
        let d = d1();
        let (_, bp) = matching_bp(&d, &["c"]);
        let t = EllTable::new(&d, &d.j_matrix().unwrap(), &bp).unwrap();
        let mut g = PairCoefficients::zeros(2);
        assert_eq!(evaluate_cycle(&d, &t, &g).unwrap(), q(0, 1));
        g.set(0, 0, q(1, 1));
        assert_eq!(evaluate_cycle(&d, &t, &g), Err(DiagramError::NotACycle));
    }

    #[test]
    fn expanded_lk_matches_tensor_square_for_every_matching() {
        for d in [d1(), d2(), d3(), s3()] {
            for m in crate::diagram::enumerate_matchings(&d, 100).unwrap() {
                for bp in BasepointChoice::all(&d) {
                    assert_eq!(
                        lk_parallel(&d, &bp, &m).unwrap(),
                        lk_parallel_expanded(&d, &bp, &m).unwrap()
                    );
                }
            }
        }
    }
}
