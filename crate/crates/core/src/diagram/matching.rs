use super::{CombinatorialDiagram, CurveRef, DiagramError, Family};

/// `g` crossings hitting every α-curve and every β-curve exactly once.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    /// Crossing indices, ascending (equivalently, lexicographic by id).
    crossings: Vec<usize>,
}

impl Matching {
    pub fn new(d: &CombinatorialDiagram, mut crossings: Vec<usize>) -> Result<Self, DiagramError> {
        crossings.sort_unstable();
        crossings.dedup();
        let g = d.genus();
        if crossings.len() != g {
            return Err(DiagramError::InvalidMatching(format!(
                "expected {g} distinct crossings, got {}",
                crossings.len()
            )));
        }
        let mut alpha_hit = vec![false; g];
        let mut beta_hit = vec![false; g];
        for &c in &crossings {
            let x = d.crossing(c);
            if std::mem::replace(&mut alpha_hit[x.alpha - 1], true) {
                return Err(DiagramError::InvalidMatching(format!(
                    "alpha_{} holds two matching crossings",
                    x.alpha
                )));
            }
            if std::mem::replace(&mut beta_hit[x.beta - 1], true) {
                return Err(DiagramError::InvalidMatching(format!(
                    "beta_{} holds two matching crossings",
                    x.beta
                )));
            }
        }
        Ok(Matching { crossings })
    }

    pub fn from_ids<S: AsRef<str>>(
        d: &CombinatorialDiagram,
        ids: &[S],
    ) -> Result<Self, DiagramError> {
        let crossings = ids
            .iter()
            .map(|id| d.index_of(id.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(d, crossings)
    }

    pub fn crossings(&self) -> &[usize] {
        &self.crossings
    }

    pub fn contains(&self, c: usize) -> bool {
        self.crossings.binary_search(&c).is_ok()
    }

    /// The matching crossing on `curve`.
    pub fn on(&self, d: &CombinatorialDiagram, curve: CurveRef) -> usize {
        *self
            .crossings
            .iter()
            .find(|&&c| d.lies_on(c, curve))
            .expect("a matching meets every curve")
    }

    pub fn ids(&self, d: &CombinatorialDiagram) -> Vec<String> {
        self.crossings
            .iter()
            .map(|&c| d.id(c).to_string())
            .collect()
    }
}

/// All perfect matchings of the α/β crossing graph, sorted by their
/// crossing-id lists. Fails as soon as more than `cap` are found.
pub fn enumerate_matchings(
    d: &CombinatorialDiagram,
    cap: usize,
) -> Result<Vec<Matching>, DiagramError> {
    fn search(
        d: &CombinatorialDiagram,
        alpha: usize,
        beta_used: &mut [bool],
        chosen: &mut Vec<usize>,
        out: &mut Vec<Matching>,
        cap: usize,
    ) -> Result<(), DiagramError> {
        let g = d.genus();
        if alpha > g {
            if out.len() == cap {
                return Err(DiagramError::CapExceeded {
                    cap,
                    found: out.len() + 1,
                });
            }
            let mut crossings = chosen.clone();
            crossings.sort_unstable();
            out.push(Matching { crossings });
            return Ok(());
        }
        for &c in d.order(CurveRef::alpha(alpha)) {
            let j = d.crossing(c).beta - 1;
            if beta_used[j] {
                continue;
            }
            beta_used[j] = true;
            chosen.push(c);
            search(d, alpha + 1, beta_used, chosen, out, cap)?;
            chosen.pop();
            beta_used[j] = false;
        }
        Ok(())
    }

    let mut out = Vec::new();
    search(
        d,
        1,
        &mut vec![false; d.genus()],
        &mut Vec::new(),
        &mut out,
        cap,
    )?;
    let key = |m: &Matching| -> Vec<String> { m.ids(d) };
    out.sort_by_key(key);
    Ok(out)
}

/// A crossing chosen on every α-curve and every β-curve.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BasepointChoice {
    alpha: Vec<usize>,
    beta: Vec<usize>,
}

impl BasepointChoice {
    pub fn new(
        d: &CombinatorialDiagram,
        alpha: Vec<usize>,
        beta: Vec<usize>,
    ) -> Result<Self, DiagramError> {
        let g = d.genus();
        if alpha.len() != g || beta.len() != g {
            return Err(DiagramError::InvalidBasepoints(format!(
                "need {g} alpha and {g} beta basepoints"
            )));
        }
        for (family, list) in [(Family::Alpha, &alpha), (Family::Beta, &beta)] {
            for (k, &c) in list.iter().enumerate() {
                let curve = CurveRef {
                    family,
                    index: k + 1,
                };
                if c >= d.crossings().len() || !d.lies_on(c, curve) {
                    return Err(DiagramError::CrossingNotOnCurve {
                        crossing: d.crossings().get(c).map_or("?".into(), |x| x.id.clone()),
                        curve,
                    });
                }
            }
        }
        Ok(BasepointChoice { alpha, beta })
    }

    /// Basepoints at the matching crossings.
    pub fn from_matching(d: &CombinatorialDiagram, m: &Matching) -> Self {
        let g = d.genus();
        BasepointChoice {
            alpha: (1..=g).map(|i| m.on(d, CurveRef::alpha(i))).collect(),
            beta: (1..=g).map(|j| m.on(d, CurveRef::beta(j))).collect(),
        }
    }

    /// The first crossing of every curve order.
    pub fn first_crossings(d: &CombinatorialDiagram) -> Result<Self, DiagramError> {
        let g = d.genus();
        let first = |curve: CurveRef| {
            d.order(curve)
                .first()
                .copied()
                .ok_or_else(|| DiagramError::InvalidBasepoints(format!("{curve} has no crossing")))
        };
        Ok(BasepointChoice {
            alpha: (1..=g)
                .map(|i| first(CurveRef::alpha(i)))
                .collect::<Result<_, _>>()?,
            beta: (1..=g)
                .map(|j| first(CurveRef::beta(j)))
                .collect::<Result<_, _>>()?,
        })
    }

    /// Replaces the basepoints of the named curves, e.g. from
    /// `alpha1=c,beta2=e`.
    pub fn with_overrides(
        mut self,
        d: &CombinatorialDiagram,
        overrides: &[(CurveRef, String)],
    ) -> Result<Self, DiagramError> {
        for (curve, id) in overrides {
            if curve.index == 0 || curve.index > d.genus() {
                return Err(DiagramError::InvalidBasepoints(format!("no curve {curve}")));
            }
            let c = d.index_of(id)?;
            if !d.lies_on(c, *curve) {
                return Err(DiagramError::CrossingNotOnCurve {
                    crossing: id.clone(),
                    curve: *curve,
                });
            }
            match curve.family {
                Family::Alpha => self.alpha[curve.index - 1] = c,
                Family::Beta => self.beta[curve.index - 1] = c,
            }
        }
        Ok(self)
    }

    pub fn on(&self, curve: CurveRef) -> usize {
        match curve.family {
            Family::Alpha => self.alpha[curve.index - 1],
            Family::Beta => self.beta[curve.index - 1],
        }
    }

    pub fn alpha(&self) -> &[usize] {
        &self.alpha
    }

    pub fn beta(&self) -> &[usize] {
        &self.beta
    }

    /// Every basepoint assignment (product over curves of their crossings).
    pub fn all(d: &CombinatorialDiagram) -> Vec<BasepointChoice> {
        let g = d.genus();
        let curves: Vec<CurveRef> = (1..=g)
            .map(CurveRef::alpha)
            .chain((1..=g).map(CurveRef::beta))
            .collect();
        let mut out = vec![Vec::new()];
        for curve in &curves {
            let mut next = Vec::new();
            for prefix in &out {
                for &c in d.order(*curve) {
                    let mut p: Vec<usize> = prefix.clone();
                    p.push(c);
                    next.push(p);
                }
            }
            out = next;
        }
        out.into_iter()
            .map(|v| BasepointChoice {
                alpha: v[..g].to_vec(),
                beta: v[g..].to_vec(),
            })
            .collect()
    }
}
