//! Coefficient maps on crossing pairs, the 2-cycle condition, and the two
//! canonical coefficient families (the linking-form cycle and the tensor
//! square of the matching 1-cycle).

use super::{CombinatorialDiagram, DiagramError, Matching};
use crate::matrix::RatMatrix;
use crate::rational::Rational;

/// `g_{cd}` for every ordered pair of crossings, indexed by crossing
/// position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairCoefficients {
    matrix: RatMatrix,
}

impl PairCoefficients {
    pub fn zeros(crossings: usize) -> Self {
        PairCoefficients {
            matrix: RatMatrix::zeros(crossings),
        }
    }

    /// `g_{cd} = t(c) t(d)`.
    pub fn tensor_square(t: &[Rational]) -> Self {
        let mut g = Self::zeros(t.len());
        for (c, tc) in t.iter().enumerate() {
            for (d, td) in t.iter().enumerate() {
                g.matrix[(c, d)] = tc * td;
            }
        }
        g
    }

    /// `g_{cd} = J_{j(c)i(d)} J_{j(d)i(c)} σ(c)σ(d) − δ_{cd} J_{j(c)i(c)} σ(c)`.
    pub fn linking_form(d: &CombinatorialDiagram) -> Result<Self, DiagramError> {
        let j = d.j_matrix()?;
        let n = d.crossings().len();
        let mut g = Self::zeros(n);
        for c in 0..n {
            let xc = d.crossing(c);
            for e in 0..n {
                let xe = d.crossing(e);
                let mut v = &j[(xc.beta - 1, xe.alpha - 1)]
                    * &j[(xe.beta - 1, xc.alpha - 1)]
                    * d.sign(c)
                    * d.sign(e);
                if c == e {
                    v -= d.j_of(&j, c) * d.sign(c);
                }
                g.matrix[(c, e)] = v;
            }
        }
        Ok(g)
    }

    pub fn len(&self) -> usize {
        self.matrix.size()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, c: usize, d: usize) -> &Rational {
        &self.matrix[(c, d)]
    }

    pub fn set(&mut self, c: usize, d: usize, value: Rational) {
        self.matrix[(c, d)] = value;
    }

    /// Nonzero entries in row-major order.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        let n = self.len();
        (0..n)
            .flat_map(move |c| (0..n).map(move |d| (c, d)))
            .map(|(c, d)| (c, d, &self.matrix[(c, d)]))
            .filter(|(_, _, v)| !v.is_zero())
    }

    pub fn transpose(&self) -> Self {
        PairCoefficients {
            matrix: self.matrix.transpose(),
        }
    }
}

/// `t(c) = [c ∈ m] − J_{j(c)i(c)} σ(c)`, indexed by crossing position.
pub fn l_cycle_coefficients(
    d: &CombinatorialDiagram,
    m: &Matching,
) -> Result<Vec<Rational>, DiagramError> {
    let j = d.j_matrix()?;
    Ok((0..d.crossings().len())
        .map(|c| {
            let favourite = if m.contains(c) {
                Rational::one()
            } else {
                Rational::zero()
            };
            favourite - d.j_of(&j, c) * d.sign(c)
        })
        .collect())
}

/// True iff `Σ g_{cd}(γ(c) × γ(d))` has zero boundary: for every fixed
/// crossing in one slot, the coefficients in the other slot sum to zero over
/// each α-curve and over each β-curve.
pub fn cycle_check(d: &CombinatorialDiagram, g: &PairCoefficients) -> bool {
    let n = d.crossings().len();
    if g.len() != n {
        return false;
    }
    let genus = d.genus();
    let slot_balanced = |second_slot: bool| {
        (0..n).all(|fixed| {
            let mut by_alpha = vec![Rational::zero(); genus];
            let mut by_beta = vec![Rational::zero(); genus];
            for c in 0..n {
                let v = if second_slot {
                    g.get(fixed, c)
                } else {
                    g.get(c, fixed)
                };
                let x = d.crossing(c);
                by_alpha[x.alpha - 1] += v.clone();
                by_beta[x.beta - 1] += v.clone();
            }
            by_alpha.iter().chain(&by_beta).all(Rational::is_zero)
        })
    };
    slot_balanced(false) && slot_balanced(true)
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn linking_form_on_d1() {
        let d = d1();
        let g = PairCoefficients::linking_form(&d).unwrap();
        assert_eq!(*g.get(0, 0), q(-1, 4));
        assert_eq!(*g.get(0, 1), q(1, 4));
        assert_eq!(*g.get(1, 0), q(1, 4));
        assert_eq!(*g.get(1, 1), q(-1, 4));
        assert!(cycle_check(&d, &g));
    }

    #[test]
    fn unbalanced_map_is_not_a_cycle() {
        let d = d1();
        let mut g = PairCoefficients::zeros(2);
        assert!(cycle_check(&d, &g));
        g.set(0, 0, q(1, 1));
        assert!(!cycle_check(&d, &g));
        assert!(!cycle_check(&d, &PairCoefficients::zeros(3)));
    }

    #[test]
    fn matching_cycle_coefficients() {
        let d = d1();
        let m = Matching::from_ids(&d, &["c"]).unwrap();
        assert_eq!(
            l_cycle_coefficients(&d, &m).unwrap(),
            vec![q(1, 2), q(-1, 2)]
        );

        let d = d2();
        let m = Matching::from_ids(&d, &["c", "e"]).unwrap();
        // crossings sorted c, d, e, f
        assert_eq!(
            l_cycle_coefficients(&d, &m).unwrap(),
            vec![q(1, 2), q(-1, 2), q(0, 1), q(0, 1)]
        );

        let d = s3();
        let m = Matching::from_ids(&d, &["c"]).unwrap();
        assert_eq!(l_cycle_coefficients(&d, &m).unwrap(), vec![q(0, 1)]);
    }

    #[test]
    fn canonical_families_are_cycles() {
        for d in [d1(), d2(), d3(), s3()] {
            assert!(cycle_check(
                &d,
                &PairCoefficients::linking_form(&d).unwrap()
            ));
            for m in super::super::enumerate_matchings(&d, 100).unwrap() {
                let t = l_cycle_coefficients(&d, &m).unwrap();
                assert!(cycle_check(&d, &PairCoefficients::tensor_square(&t)));
            }
        }
    }
}
