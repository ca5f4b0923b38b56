use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::{beta_degree, chain_degree, de_crossing, euler_term, EllTable};
use crate::diagram::{
    l_cycle_coefficients, BasepointChoice, CombinatorialDiagram, CurveRef, DiagramError, Matching,
    PairCoefficients,
};
use crate::rational::Rational;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ThetaOptions {
    /// Compute `e` and `Θ`. Only meaningful when the diagram's half-turn
    /// data was drawn for this matching.
    pub with_euler: bool,
    /// Casson-Walker λ, if known; adds `p1 = 4Θ − 24λ`.
    pub lambda: Option<Rational>,
}

/// `Θ = ℓ₂ + lk − e` with its ingredients. `euler` and `theta` are `None`
/// when the Euler term could not be computed for the requested matching.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaReport {
    pub ell2: Rational,
    pub lk: Rational,
    pub euler: Option<Rational>,
    pub theta: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p1: Option<Rational>,
    pub matching: Vec<String>,
    /// Curve name (`alpha_1`, `beta_2`, ...) to crossing id.
    pub basepoints: BTreeMap<String, String>,
    pub diagram_hash: String,
}

impl fmt::Display for ThetaReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let opt = |v: &Option<Rational>| {
            v.as_ref()
                .map_or("unavailable".to_string(), |r| r.to_string())
        };
        writeln!(f, "ell2  = {}", self.ell2)?;
        writeln!(f, "lk    = {}", self.lk)?;
        writeln!(f, "e     = {}", opt(&self.euler))?;
        writeln!(f, "Theta = {}", opt(&self.theta))?;
        if let Some(p1) = &self.p1 {
            writeln!(f, "p1    = {p1}")?;
        }
        write!(f, "matching = {{{}}}", self.matching.join(", "))
    }
}

pub fn diagram_hash(d: &CombinatorialDiagram) -> String {
    hex::encode(Sha256::digest(d.canonical_json().as_bytes()))
}

fn basepoint_names(d: &CombinatorialDiagram, bp: &BasepointChoice) -> BTreeMap<String, String> {
    let g = d.genus();
    (1..=g)
        .map(CurveRef::alpha)
        .chain((1..=g).map(CurveRef::beta))
        .map(|curve| (curve.to_string(), d.id(bp.on(curve)).to_string()))
        .collect()
}

pub fn theta_report(
    d: &CombinatorialDiagram,
    m: &Matching,
    bp: &BasepointChoice,
    opts: &ThetaOptions,
) -> Result<ThetaReport, DiagramError> {
    let j = d.j_matrix()?;
    let table = EllTable::new(d, &j, bp)?;
    let ell2 = super::ell_two_with(d, &table)?;
    let lk = super::lk_parallel_with(d, &table, m)?;
    let euler = if opts.with_euler {
        Some(euler_term(d, &j, m)?)
    } else {
        None
    };
    let theta = euler.as_ref().map(|e| &ell2 + &lk - e);
    let p1 = match (&theta, &opts.lambda) {
        (Some(t), Some(l)) => Some(Rational::from_integer(4) * t - Rational::from_integer(24) * l),
        _ => None,
    };
    Ok(ThetaReport {
        ell2,
        lk,
        euler,
        theta,
        p1,
        matching: m.ids(d),
        basepoints: basepoint_names(d, bp),
        diagram_hash: diagram_hash(d),
    })
}

/// The report together with a term-by-term breakdown, one item per line.
pub fn explain(
    d: &CombinatorialDiagram,
    m: &Matching,
    bp: &BasepointChoice,
    opts: &ThetaOptions,
) -> Result<(ThetaReport, Vec<String>), DiagramError> {
    let report = theta_report(d, m, bp, opts)?;
    let j = d.j_matrix()?;
    let table = EllTable::new(d, &j, bp)?;
    let n = d.crossings().len();
    let g = d.genus();
    let id = |c: usize| d.id(c);
    let mut lines = Vec::new();

    lines.push(format!("matching = {{{}}}", report.matching.join(", ")));
    for (curve, c) in &report.basepoints {
        lines.push(format!("p({curve}) = {c}"));
    }
    for r in 0..g {
        for s in 0..g {
            lines.push(format!("J[{}][{}] = {}", r + 1, s + 1, j[(r, s)]));
        }
    }
    for c in 0..n {
        lines.push(format!("sigma({}) = {}", id(c), d.sign(c)));
    }
    for c in 0..n {
        for e in 0..n {
            lines.push(format!("ell({},{}) = {}", id(c), id(e), table.get(c, e)));
        }
    }

    let lf = PairCoefficients::linking_form(d)?;
    for (c, e, v) in lf.nonzero() {
        lines.push(format!(
            "ell2 term ({},{}): {} * {} = {}",
            id(c),
            id(e),
            v,
            table.get(c, e),
            v * table.get(c, e)
        ));
    }
    lines.push(format!("ell2 = {}", report.ell2));

    let t = l_cycle_coefficients(d, m)?;
    for c in 0..n {
        lines.push(format!("t({}) = {}", id(c), t[c]));
    }
    for (c, e, v) in PairCoefficients::tensor_square(&t).nonzero() {
        lines.push(format!(
            "lk term ({},{}): {} * {} = {}",
            id(c),
            id(e),
            v,
            table.get(c, e),
            v * table.get(c, e)
        ));
    }
    lines.push(format!("lk = {}", report.lk));

    if opts.with_euler {
        for jj in 1..=g {
            let order = d.order(CurveRef::beta(jj));
            for k in 0..order.len() {
                let (a, b) = (order[k], order[(k + 1) % order.len()]);
                let deg =
                    Rational::new(d.arc_half_turns().expect("checked by euler")[jj - 1][k], 2);
                lines.push(format!(
                    "d_e(arc {}->{} on beta_{jj}) = {deg}",
                    id(a),
                    id(b)
                ));
            }
        }
        for jj in 1..=g {
            lines.push(format!("d_e(beta_{jj}) = {}", beta_degree(d, jj)?));
        }
        for c in 0..n {
            let beta = d.crossing(c).beta;
            let start = m.on(d, CurveRef::beta(beta));
            lines.push(format!(
                "d_e(|{},{}|) = {}",
                id(start),
                id(c),
                chain_degree(d, beta, start, c)?
            ));
        }
        for c in 0..n {
            let de = de_crossing(d, &j, m, c)?;
            lines.push(format!("d_e({}) = {de}", id(c)));
            let w = d.j_of(&j, c) * d.sign(c);
            lines.push(format!("e term {}: {} * {} = {}", id(c), w, de, &w * &de));
        }
    }
    let opt = |v: &Option<Rational>| {
        v.as_ref()
            .map_or("unavailable".to_string(), |r| r.to_string())
    };
    lines.push(format!("e = {}", opt(&report.euler)));
    lines.push(format!("Theta = {}", opt(&report.theta)));
    if let Some(p1) = &report.p1 {
        lines.push(format!("p1 = {p1}"));
    }
    Ok((report, lines))
}
