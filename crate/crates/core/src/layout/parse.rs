use std::collections::HashSet;

use super::{LayoutError, RectLayout};

/// Structural parse of a `.hgr` document. Geometry is not checked here.
pub fn parse_layout(text: &str) -> Result<RectLayout, LayoutError> {
    let layout: RectLayout = serde_json::from_str(text).map_err(|e| LayoutError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    check_references(&layout)?;
    Ok(layout)
}

fn check_references(l: &RectLayout) -> Result<(), LayoutError> {
    let mut alphas = HashSet::new();
    for a in &l.alpha {
        if !alphas.insert(a.index) {
            return Err(LayoutError::DuplicateId(format!("alpha {}", a.index)));
        }
    }
    let mut ids = HashSet::new();
    for c in &l.crossings {
        if !ids.insert(c.id.as_str()) {
            return Err(LayoutError::DuplicateId(format!("crossing {}", c.id)));
        }
        if !alphas.contains(&c.alpha) {
            return Err(LayoutError::UnknownReference(format!(
                "crossing {} names alpha {}",
                c.id, c.alpha
            )));
        }
    }
    let mut betas = HashSet::new();
    for b in &l.beta {
        if !betas.insert(b.index) {
            return Err(LayoutError::DuplicateId(format!("beta {}", b.index)));
        }
        for arc in &b.arcs {
            for end in [&arc.from, &arc.to] {
                if !ids.contains(end.crossing.as_str()) {
                    return Err(LayoutError::UnknownReference(format!(
                        "beta {} arc names crossing {}",
                        b.index, end.crossing
                    )));
                }
            }
        }
    }
    for id in &l.matching {
        if !ids.contains(id.as_str()) {
            return Err(LayoutError::UnknownReference(format!(
                "matching names crossing {id}"
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;

    const TINY: &str = r#"{
        "genus": 1,
        "rect": {"xmin": 0, "ymin": 0, "xmax": "38", "ymax": 18.0},
        "alpha": [{"index": 1,
                   "prime": {"center": [10, 9], "radius": 5},
                   "second": {"center": [28, 9], "radius": "5/1"}}],
        "crossings": [{"id": "c", "alpha": 1, "prime_point": [15, 9], "second_point": [23, 9.0]}],
        "beta": [{"index": 1, "arcs": [
            {"from": {"crossing": "c", "copy": "second"},
             "to": {"crossing": "c", "copy": "prime"}, "via": [[1.25e1, "9"]]}]}],
        "matching": ["c"]
    }"#;

    #[test]
    fn parses_numbers_exactly() {
        let l = parse_layout(TINY).unwrap();
        assert_eq!(l.rect.ymax, Rational::from_integer(18));
        assert_eq!(l.beta[0].arcs[0].via[0].x, Rational::new(25, 2));
        assert_eq!(l.alpha[0].second.radius, Rational::from_integer(5));
    }

    #[test]
    fn empty_genus_zero() {
        let l =
            parse_layout(r#"{"genus": 0, "rect": {"xmin": 0, "ymin": 0, "xmax": 1, "ymax": 1}}"#)
                .unwrap();
        assert!(l.alpha.is_empty() && l.crossings.is_empty() && l.beta.is_empty());
    }

    #[test]
    fn reference_errors() {
        let bad = TINY.replace(
            r#""crossing": "c", "copy": "prime""#,
            r#""crossing": "x", "copy": "prime""#,
        );
        assert!(matches!(
            parse_layout(&bad),
            Err(LayoutError::UnknownReference(_))
        ));
        let dup = TINY.replace(
            r#""crossings": [{"id": "c""#,
            r#""crossings": [{"id": "c", "alpha": 1, "prime_point": [1, 1], "second_point": [2, 2]}, {"id": "c""#,
        );
        assert!(matches!(
            parse_layout(&dup),
            Err(LayoutError::DuplicateId(_))
        ));
    }

    #[test]
    fn syntax_errors_carry_position() {
        match parse_layout("{\n  \"genus\": 1,\n  oops\n}") {
            Err(LayoutError::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_layout(
                r#"{"genus": 0, "rect": {"xmin": "1/0", "ymin": 0, "xmax": 1, "ymax": 1}}"#
            ),
            Err(LayoutError::Parse { .. })
        ));
    }
}
