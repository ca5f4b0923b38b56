//! Combinatorial Heegaard diagrams.
//!
//! A diagram is the genus, the crossings of α-curves with β-curves (each
//! with a sign), and the cyclic order of crossings along every curve. This
//! is all the data the linking-form terms need; the Euler term additionally
//! needs the half-turn counts of the β arcs, which a rectangular layout
//! supplies.

mod arc;
mod cycle;
mod matching;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::matrix::{LinalgError, RatMatrix};
use crate::rational::Rational;
use crate::report::ValidationReport;

pub use arc::ArcWeighting;
pub use cycle::{cycle_check, l_cycle_coefficients, PairCoefficients};
pub use matching::{enumerate_matchings, BasepointChoice, Matching};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DiagramError {
    #[error("invalid diagram:\n{0}")]
    Invalid(ValidationReport),
    #[error("not a rational homology sphere: the intersection matrix is singular")]
    NotQSphere,
    #[error("crossing {crossing} does not lie on {curve}")]
    CrossingNotOnCurve { crossing: String, curve: CurveRef },
    #[error("unknown crossing {0:?}")]
    UnknownCrossing(String),
    #[error("invalid matching: {0}")]
    InvalidMatching(String),
    #[error("invalid basepoints: {0}")]
    InvalidBasepoints(String),
    #[error("more than {cap} matchings (found {found} before stopping)")]
    CapExceeded { cap: usize, found: usize },
    #[error("pairing needs one alpha and one beta weighting")]
    SameFamily,
    #[error("coefficients do not form a 2-cycle")]
    NotACycle,
    #[error("the diagram carries no arc half-turn data")]
    MissingHalfTurns,
}

impl From<LinalgError> for DiagramError {
    fn from(_: LinalgError) -> Self {
        DiagramError::NotQSphere
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Alpha,
    Beta,
}

/// A curve of the diagram, `index` is 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CurveRef {
    pub family: Family,
    pub index: usize,
}

impl CurveRef {
    pub fn alpha(index: usize) -> Self {
        CurveRef {
            family: Family::Alpha,
            index,
        }
    }

    pub fn beta(index: usize) -> Self {
        CurveRef {
            family: Family::Beta,
            index,
        }
    }
}

impl fmt::Display for CurveRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Alpha => write!(f, "alpha_{}", self.index),
            Family::Beta => write!(f, "beta_{}", self.index),
        }
    }
}

impl std::str::FromStr for CurveRef {
    type Err = String;

    /// Accepts `alpha1`, `alpha_1`, `a1` and the β equivalents.
    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        let (family, rest) = if let Some(r) = s.strip_prefix("alpha") {
            (Family::Alpha, r)
        } else if let Some(r) = s.strip_prefix("beta") {
            (Family::Beta, r)
        } else if let Some(r) = s.strip_prefix('a') {
            (Family::Alpha, r)
        } else if let Some(r) = s.strip_prefix('b') {
            (Family::Beta, r)
        } else {
            return Err(format!("unknown curve {s:?}"));
        };
        let index: usize = rest
            .trim_start_matches('_')
            .parse()
            .map_err(|_| format!("unknown curve {s:?}"))?;
        if index == 0 {
            return Err(format!("curve indices start at 1: {s:?}"));
        }
        Ok(CurveRef { family, index })
    }
}

/// An intersection point of `alpha_{alpha}` and `beta_{beta}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Crossing {
    pub id: String,
    pub alpha: usize,
    pub beta: usize,
    pub sign: i8,
}

/// The plain-data form of a diagram, as read from or written to JSON.
/// Curve lists are indexed by curve number minus one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramData {
    pub genus: usize,
    pub crossings: Vec<Crossing>,
    pub alpha_orders: Vec<Vec<String>>,
    pub beta_orders: Vec<Vec<String>>,
    /// `arc_half_turns[j][k]`: half-turns of the β_{j+1} arc running from
    /// its k-th crossing to the next one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arc_half_turns: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matching: Option<Vec<String>>,
}

/// A validated combinatorial Heegaard diagram.
///
/// Crossings are stored sorted by id and addressed by their position in
/// [`CombinatorialDiagram::crossings`] throughout the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombinatorialDiagram {
    genus: usize,
    crossings: Vec<Crossing>,
    index: HashMap<String, usize>,
    alpha_orders: Vec<Vec<usize>>,
    beta_orders: Vec<Vec<usize>>,
    arc_half_turns: Option<Vec<Vec<i64>>>,
}

fn order_rules(
    report: &mut ValidationReport,
    data: &DiagramData,
    known: &BTreeMap<&str, &Crossing>,
    family: Family,
) {
    let (orders, label) = match family {
        Family::Alpha => (&data.alpha_orders, "alpha"),
        Family::Beta => (&data.beta_orders, "beta"),
    };
    if orders.len() != data.genus {
        report.push(
            "curve-count",
            label,
            format!(
                "expected {} {label} orders, found {}",
                data.genus,
                orders.len()
            ),
        );
    }
    let mut seen: BTreeMap<&str, Vec<usize>> = BTreeMap::new();
    for (k, order) in orders.iter().enumerate() {
        let curve = k + 1;
        for id in order {
            seen.entry(id.as_str()).or_default().push(curve);
            match known.get(id.as_str()) {
                None => report.push(
                    "unknown-crossing",
                    format!("{label}_{curve}"),
                    format!("order of {label}_{curve} names unknown crossing {id:?}"),
                ),
                Some(c) => {
                    let expected = match family {
                        Family::Alpha => c.alpha,
                        Family::Beta => c.beta,
                    };
                    if expected != curve {
                        report.push(
                            &format!("{label}-index-mismatch"),
                            id.clone(),
                            format!(
                                "crossing {id} has {label} index {expected} but is listed on {label}_{curve}"
                            ),
                        );
                    }
                }
            }
        }
    }
    for (id, curves) in &seen {
        let mut distinct = curves.clone();
        distinct.dedup();
        if distinct.len() > 1 {
            report.push(
                &format!("{label}-multiplicity"),
                id.to_string(),
                format!("crossing in multiple {label} curves ({distinct:?})"),
            );
        } else if curves.len() > 1 {
            report.push(
                &format!("{label}-multiplicity"),
                id.to_string(),
                format!(
                    "crossing listed {} times on {label}_{}",
                    curves.len(),
                    curves[0]
                ),
            );
        }
    }
    for id in known.keys() {
        if !seen.contains_key(id) {
            report.push(
                &format!("{label}-multiplicity"),
                id.to_string(),
                format!("crossing missing from every {label} order"),
            );
        }
    }
}

/// Checks every structural invariant of a combinatorial diagram.
pub fn validate_diagram(data: &DiagramData) -> ValidationReport {
    let mut report = ValidationReport::new();
    let g = data.genus;
    let mut known: BTreeMap<&str, &Crossing> = BTreeMap::new();
    for c in &data.crossings {
        if known.insert(c.id.as_str(), c).is_some() {
            report.push("duplicate-crossing", c.id.clone(), "crossing id used twice");
        }
        if c.id.is_empty() {
            report.push("bad-id", "<empty>", "crossing ids must be nonempty");
        }
        if !(1..=g).contains(&c.alpha) || !(1..=g).contains(&c.beta) {
            report.push(
                "bad-index",
                c.id.clone(),
                format!("curve indices ({}, {}) outside 1..={g}", c.alpha, c.beta),
            );
        }
        if c.sign != 1 && c.sign != -1 {
            report.push(
                "bad-sign",
                c.id.clone(),
                format!("sign {} is not +1 or -1", c.sign),
            );
        }
    }
    order_rules(&mut report, data, &known, Family::Alpha);
    order_rules(&mut report, data, &known, Family::Beta);

    if let Some(turns) = &data.arc_half_turns {
        if turns.len() != data.beta_orders.len() {
            report.push(
                "half-turns-shape",
                "arc_half_turns",
                format!(
                    "{} entries for {} beta curves",
                    turns.len(),
                    data.beta_orders.len()
                ),
            );
        }
        for (k, (t, order)) in turns.iter().zip(&data.beta_orders).enumerate() {
            if t.len() != order.len() {
                report.push(
                    "half-turns-shape",
                    format!("beta_{}", k + 1),
                    format!("{} arc degrees for {} crossings", t.len(), order.len()),
                );
            } else if t.iter().sum::<i64>().rem_euclid(2) != 0 {
                report.push(
                    "odd-beta-degree",
                    format!("beta_{}", k + 1),
                    "half-turns around a closed beta curve must sum to an even number",
                );
            }
        }
    }
    if let Some(m) = &data.matching {
        for id in m {
            if !known.contains_key(id.as_str()) {
                report.push(
                    "unknown-crossing",
                    "matching",
                    format!("matching names unknown crossing {id:?}"),
                );
            }
        }
    }
    report
}

impl CombinatorialDiagram {
    /// Validates `data` and builds the indexed diagram. The optional matching
    /// in `data` is ignored here; see [`Matching::from_ids`].
    pub fn from_data(data: &DiagramData) -> Result<Self, DiagramError> {
        let report = validate_diagram(data);
        if !report.passed() {
            return Err(DiagramError::Invalid(report));
        }
        let mut crossings = data.crossings.clone();
        crossings.sort_by(|a, b| a.id.cmp(&b.id));
        let index: HashMap<String, usize> = crossings
            .iter()
            .enumerate()
            .map(|(k, c)| (c.id.clone(), k))
            .collect();
        let resolve = |orders: &Vec<Vec<String>>| -> Vec<Vec<usize>> {
            orders
                .iter()
                .map(|o| o.iter().map(|id| index[id]).collect())
                .collect()
        };
        Ok(CombinatorialDiagram {
            genus: data.genus,
            alpha_orders: resolve(&data.alpha_orders),
            beta_orders: resolve(&data.beta_orders),
            arc_half_turns: data.arc_half_turns.clone(),
            crossings,
            index,
        })
    }

    pub fn to_data(&self) -> DiagramData {
        let names = |orders: &Vec<Vec<usize>>| -> Vec<Vec<String>> {
            orders
                .iter()
                .map(|o| o.iter().map(|&c| self.crossings[c].id.clone()).collect())
                .collect()
        };
        DiagramData {
            genus: self.genus,
            crossings: self.crossings.clone(),
            alpha_orders: names(&self.alpha_orders),
            beta_orders: names(&self.beta_orders),
            arc_half_turns: self.arc_half_turns.clone(),
            matching: None,
        }
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing(&self, c: usize) -> &Crossing {
        &self.crossings[c]
    }

    pub fn id(&self, c: usize) -> &str {
        &self.crossings[c].id
    }

    pub fn index_of(&self, id: &str) -> Result<usize, DiagramError> {
        self.index
            .get(id)
            .copied()
            .ok_or_else(|| DiagramError::UnknownCrossing(id.to_string()))
    }

    pub fn sign(&self, c: usize) -> Rational {
        Rational::from_integer(self.crossings[c].sign as i64)
    }

    /// Crossings of a curve in cyclic order.
    pub fn order(&self, curve: CurveRef) -> &[usize] {
        match curve.family {
            Family::Alpha => &self.alpha_orders[curve.index - 1],
            Family::Beta => &self.beta_orders[curve.index - 1],
        }
    }

    pub fn lies_on(&self, c: usize, curve: CurveRef) -> bool {
        let x = &self.crossings[c];
        match curve.family {
            Family::Alpha => x.alpha == curve.index,
            Family::Beta => x.beta == curve.index,
        }
    }

    pub fn arc_half_turns(&self) -> Option<&[Vec<i64>]> {
        self.arc_half_turns.as_deref()
    }

    /// Replaces the β arc half-turn data (one entry per consecutive pair of
    /// each β order).
    pub fn with_arc_half_turns(mut self, turns: Vec<Vec<i64>>) -> Result<Self, DiagramError> {
        let mut data = self.to_data();
        data.arc_half_turns = Some(turns.clone());
        let report = validate_diagram(&data);
        if !report.passed() {
            return Err(DiagramError::Invalid(report));
        }
        self.arc_half_turns = Some(turns);
        Ok(self)
    }

    /// `A[i][j] = ⟨α_{i+1}, β_{j+1}⟩`, the signed count of their crossings.
    pub fn intersection_matrix(&self) -> RatMatrix {
        let mut m = RatMatrix::zeros(self.genus);
        for c in &self.crossings {
            m[(c.alpha - 1, c.beta - 1)] += Rational::from_integer(c.sign as i64);
        }
        m
    }

    /// Inverse of the intersection matrix. Entry `[j][i]` (0-based) is the
    /// coefficient `J_{ji}` with `Σ_i J_{ji} ⟨α_i, β_k⟩ = δ_{jk}`.
    pub fn j_matrix(&self) -> Result<RatMatrix, DiagramError> {
        Ok(self.intersection_matrix().inverse()?)
    }

    /// `J_{j(c) i(c)}` for a crossing.
    pub fn j_of(&self, j: &RatMatrix, c: usize) -> Rational {
        let x = &self.crossings[c];
        j[(x.beta - 1, x.alpha - 1)].clone()
    }

    /// Canonical JSON of the combinatorial data (crossings sorted by id).
    pub fn canonical_json(&self) -> String {
        serde_json::to_string(&self.to_data()).expect("diagram serializes")
    }
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn validation_examples() {
        assert!(validate_diagram(&d1_data()).passed());
        let empty = DiagramData {
            genus: 0,
            crossings: vec![],
            alpha_orders: vec![],
            beta_orders: vec![],
            arc_half_turns: None,
            matching: None,
        };
        assert!(validate_diagram(&empty).passed());

        let mut bad = d2_data();
        bad.alpha_orders[1].push("c".into());
        let report = validate_diagram(&bad);
        assert!(report.has_rule("alpha-multiplicity"));
        assert!(report
            .violations()
            .iter()
            .any(
                |v| v.message.starts_with("crossing in multiple alpha curves") && v.entity == "c"
            ));
    }

    #[test]
    fn validation_catches_structure_errors() {
        let mut d = d1_data();
        d.crossings[1].sign = 0;
        d.beta_orders[0].push("zz".into());
        d.arc_half_turns = Some(vec![vec![1, 0, 0]]);
        let report = validate_diagram(&d);
        for rule in ["bad-sign", "unknown-crossing", "odd-beta-degree"] {
            assert!(report.has_rule(rule), "missing {rule}: {report}");
        }
    }

    #[test]
    fn crossing_free_beta_is_rejected_by_j() {
        let mut e = d2_data();
        e.beta_orders[1].clear();
        e.beta_orders[0].push("e".into());
        e.crossings[2].beta = 1;
        e.arc_half_turns = None;
        let d = CombinatorialDiagram::from_data(&e).unwrap();
        assert_eq!(d.j_matrix(), Err(DiagramError::NotQSphere));
    }

    #[test]
    fn intersection_matrices() {
        assert_eq!(
            d1().intersection_matrix(),
            RatMatrix::from_i64_rows(&[&[2]]).unwrap()
        );
        assert_eq!(
            d2().intersection_matrix(),
            RatMatrix::from_i64_rows(&[&[2, 0], &[1, 1]]).unwrap()
        );
        let mut neg = s3_data();
        neg.crossings[0].sign = -1;
        let neg = CombinatorialDiagram::from_data(&neg).unwrap();
        assert_eq!(
            neg.intersection_matrix(),
            RatMatrix::from_i64_rows(&[&[-1]]).unwrap()
        );
    }

    #[test]
    fn j_matrix_layout() {
        let j1 = d1().j_matrix().unwrap();
        assert_eq!(j1[(0, 0)], q(1, 2));
        let j2 = d2().j_matrix().unwrap();
        // [j][i] holds J_{ji}
        assert_eq!(j2[(0, 0)], q(1, 2)); // J_11
        assert_eq!(j2[(1, 1)], q(1, 1)); // J_22
        assert_eq!(j2[(0, 1)], q(0, 1)); // J_12
        assert_eq!(j2[(1, 0)], q(-1, 2)); // J_21
                                          // defining identity Σ_i J_ji <α_i, β_k> = δ_jk
        assert!((&j2 * &d2().intersection_matrix()).is_identity());
        assert_eq!(d3().j_matrix().unwrap(), j2);
    }

    #[test]
    fn singular_diagram_is_not_a_q_sphere() {
        // α_2 meets β_1 twice with opposite signs, β_2 meets nothing on α_1
        // and α_2 only through a cancelling pair.
        let data = DiagramData {
            genus: 2,
            crossings: vec![
                Crossing {
                    id: "a".into(),
                    alpha: 1,
                    beta: 1,
                    sign: 1,
                },
                Crossing {
                    id: "b".into(),
                    alpha: 2,
                    beta: 2,
                    sign: 1,
                },
                Crossing {
                    id: "c".into(),
                    alpha: 2,
                    beta: 2,
                    sign: -1,
                },
            ],
            alpha_orders: vec![vec!["a".into()], vec!["b".into(), "c".into()]],
            beta_orders: vec![vec!["a".into()], vec!["b".into(), "c".into()]],
            arc_half_turns: None,
            matching: None,
        };
        let d = CombinatorialDiagram::from_data(&data).unwrap();
        assert_eq!(d.j_matrix(), Err(DiagramError::NotQSphere));
    }

    #[test]
    fn curve_names_parse() {
        assert_eq!("alpha1".parse::<CurveRef>().unwrap(), CurveRef::alpha(1));
        assert_eq!("beta_2".parse::<CurveRef>().unwrap(), CurveRef::beta(2));
        assert_eq!("b3".parse::<CurveRef>().unwrap(), CurveRef::beta(3));
        assert!("gamma1".parse::<CurveRef>().is_err());
        assert!("a0".parse::<CurveRef>().is_err());
    }

    #[test]
    fn json_round_trip() {
        let d = d3();
        let back: DiagramData = serde_json::from_str(&d.canonical_json()).unwrap();
        assert_eq!(CombinatorialDiagram::from_data(&back).unwrap(), d);
    }
}
