//! Convention and embeddedness checks for rectangular diagrams, all with
//! exact predicates.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

use super::geom::{
    angle_cmp, circle_position, cross, dist2, segment_meets_disk, segments_meet, sub,
};
use super::{BetaArc, Circle, CopySide, Point, RectLayout};
use crate::rational::Rational;
use crate::report::ValidationReport;

pub const CURVE_COUNT: &str = "curve count";
pub const CIRCLE_RADIUS: &str = "circle radius";
pub const CIRCLE_OUTSIDE: &str = "circle outside rectangle";
pub const CIRCLE_OVERLAP: &str = "circle overlap";
pub const ATTACHMENT_INSIDE: &str = "attachment inside disk";
pub const DEGENERATE_TANGENT: &str = "degenerate tangent";
pub const ARC_CHAIN: &str = "arc chain";
pub const CROSSING_COVERAGE: &str = "crossing coverage";
pub const DEGENERATE_SEGMENT: &str = "degenerate segment";
pub const NON_HORIZONTAL_END: &str = "non-horizontal end";
pub const ANTIPARALLEL_VERTEX: &str = "antiparallel vertex";
pub const ATTACHMENT_DIRECTION: &str = "attachment direction";
pub const ARC_OUTSIDE: &str = "arc outside rectangle";
pub const SELF_INTERSECTION: &str = "arc self-intersection";
pub const ARC_MEETS_DISK: &str = "arc meets disk";
pub const ARC_INTERSECTION: &str = "arc intersection";
pub const DIRECTION_CONTINUITY: &str = "direction continuity";
pub const MATCHING: &str = "matching";
pub const FAVOURITE_PLACEMENT: &str = "favourite placement";
pub const ORDER_MISMATCH: &str = "order mismatch";

struct ArcGeometry {
    label: String,
    points: Vec<Point>,
}

fn arc_label(beta: usize, k: usize, arc: &BetaArc) -> String {
    format!(
        "beta_{beta} arc {} ({}->{})",
        k + 1,
        arc.from.crossing,
        arc.to.crossing
    )
}

/// Checks every drawing convention and embeddedness condition. Passes iff the
/// report has no violations.
pub fn validate_layout(l: &RectLayout) -> ValidationReport {
    let mut report = ValidationReport::new();
    let g = l.genus;
    let mut alpha_idx: Vec<usize> = l.alpha.iter().map(|a| a.index).collect();
    alpha_idx.sort_unstable();
    if alpha_idx != (1..=g).collect::<Vec<_>>() {
        report.push(
            CURVE_COUNT,
            "alpha",
            format!("alpha indices {alpha_idx:?}, expected 1..={g}"),
        );
    }
    let mut beta_idx: Vec<usize> = l.beta.iter().map(|b| b.index).collect();
    beta_idx.sort_unstable();
    if beta_idx != (1..=g).collect::<Vec<_>>() {
        report.push(
            CURVE_COUNT,
            "beta",
            format!("beta indices {beta_idx:?}, expected 1..={g}"),
        );
    }

    check_circles(l, &mut report);
    check_attachments(l, &mut report);
    let beta_of = check_chains(l, &mut report);
    let arcs = check_arcs(l, &mut report);
    check_arc_pairs(&arcs, &mut report);
    check_placement(l, &beta_of, &mut report);
    check_orders(l, &mut report);
    report
}

fn check_circles(l: &RectLayout, report: &mut ValidationReport) {
    let r = &l.rect;
    let mut circles = Vec::new();
    for a in &l.alpha {
        for copy in [CopySide::Prime, CopySide::Second] {
            let c = a.circle(copy);
            let name = format!("alpha_{} {copy}", a.index);
            if c.radius <= Rational::zero() {
                report.push(CIRCLE_RADIUS, name.clone(), "radius must be positive");
            }
            let inside = &c.center.x - &c.radius > r.xmin
                && &c.center.x + &c.radius < r.xmax
                && &c.center.y - &c.radius > r.ymin
                && &c.center.y + &c.radius < r.ymax;
            if !inside {
                report.push(
                    CIRCLE_OUTSIDE,
                    name.clone(),
                    "circle must lie strictly inside the rectangle",
                );
            }
            circles.push((name, c));
        }
    }
    for (k, (na, a)) in circles.iter().enumerate() {
        for (nb, b) in &circles[k + 1..] {
            let reach = &a.radius + &b.radius;
            if dist2(&a.center, &b.center) <= &reach * &reach {
                report.push(
                    CIRCLE_OVERLAP,
                    format!("{na} / {nb}"),
                    "disks must be disjoint",
                );
            }
        }
    }
}

fn check_attachments(l: &RectLayout, report: &mut ValidationReport) {
    for x in &l.crossings {
        let Some(pair) = l.alpha_pair(x.alpha) else {
            continue;
        };
        for copy in [CopySide::Prime, CopySide::Second] {
            let (p, c) = (x.point(copy), pair.circle(copy));
            if circle_position(c, p) == Ordering::Less {
                report.push(
                    ATTACHMENT_INSIDE,
                    format!("crossing {}", x.id),
                    format!("{copy} attachment {p} lies inside its circle"),
                );
            }
            if p.x == c.center.x {
                report.push(
                    DEGENERATE_TANGENT,
                    format!("crossing {}", x.id),
                    format!("{copy} attachment {p} has an alpha tangent parallel to beta"),
                );
            }
        }
    }
}

/// Chain structure and coverage; returns the β index of every crossing that
/// starts exactly one arc.
fn check_chains(l: &RectLayout, report: &mut ValidationReport) -> HashMap<String, usize> {
    let mut starts: BTreeMap<&str, Vec<usize>> = BTreeMap::new();
    for b in &l.beta {
        if b.arcs.is_empty() {
            report.push(
                ARC_CHAIN,
                format!("beta_{}", b.index),
                "beta curve has no arcs",
            );
            continue;
        }
        let n = b.arcs.len();
        for (k, arc) in b.arcs.iter().enumerate() {
            starts
                .entry(arc.from.crossing.as_str())
                .or_default()
                .push(b.index);
            let next = &b.arcs[(k + 1) % n];
            if arc.to.crossing != next.from.crossing || arc.to.copy == next.from.copy {
                report.push(
                    ARC_CHAIN,
                    arc_label(b.index, k, arc),
                    format!(
                        "ends at {} {} but the next arc starts at {} {}",
                        arc.to.crossing, arc.to.copy, next.from.crossing, next.from.copy
                    ),
                );
            }
        }
    }
    let mut beta_of = HashMap::new();
    for x in &l.crossings {
        match starts.get(x.id.as_str()).map(Vec::as_slice) {
            Some([j]) => {
                beta_of.insert(x.id.clone(), *j);
            }
            Some(js) => report.push(
                CROSSING_COVERAGE,
                format!("crossing {}", x.id),
                format!("traversed {} times by beta curves", js.len()),
            ),
            None => report.push(
                CROSSING_COVERAGE,
                format!("crossing {}", x.id),
                "not on any beta curve",
            ),
        }
    }
    beta_of
}

fn x_sign(v: &(Rational, Rational)) -> i32 {
    v.0.signum()
}

fn check_arcs(l: &RectLayout, report: &mut ValidationReport) -> Vec<ArcGeometry> {
    let r = &l.rect;
    let circles: Vec<&Circle> = l.alpha.iter().flat_map(|a| [&a.prime, &a.second]).collect();
    let mut out = Vec::new();
    for b in &l.beta {
        let mut dirs_at_ends = Vec::new();
        for (k, arc) in b.arcs.iter().enumerate() {
            let label = arc_label(b.index, k, arc);
            let (Some(start), Some(end), Some(points)) = (
                l.end_geometry(&arc.from),
                l.end_geometry(&arc.to),
                l.arc_points(arc),
            ) else {
                continue;
            };
            let dirs: Vec<_> = points.windows(2).map(|w| sub(&w[1], &w[0])).collect();
            if dirs.iter().any(|d| d.0.is_zero() && d.1.is_zero()) {
                report.push(
                    DEGENERATE_SEGMENT,
                    label.clone(),
                    "two consecutive vertices coincide",
                );
                continue;
            }
            let first = &dirs[0];
            let last = &dirs[dirs.len() - 1];
            if !first.1.is_zero() || !last.1.is_zero() {
                report.push(
                    NON_HORIZONTAL_END,
                    label.clone(),
                    "first and last segments must be horizontal",
                );
            }
            for (v, w) in dirs.iter().zip(&dirs[1..]) {
                if cross(v, w).is_zero() && super::geom::dot(v, w) < Rational::zero() {
                    report.push(
                        ANTIPARALLEL_VERTEX,
                        label.clone(),
                        "the polyline reverses direction at a vertex",
                    );
                }
            }
            let outward = (&start.0.x - &start.1.center.x).signum();
            let inward = (&end.1.center.x - &end.0.x).signum();
            if x_sign(first) != outward || x_sign(last) != inward {
                report.push(
                    ATTACHMENT_DIRECTION,
                    label.clone(),
                    "arcs must leave their start circle outward and enter their end circle inward",
                );
            }
            for p in &points {
                if !(p.x > r.xmin && p.x < r.xmax && p.y > r.ymin && p.y < r.ymax) {
                    report.push(
                        ARC_OUTSIDE,
                        label.clone(),
                        format!("vertex {p} is not strictly inside the rectangle"),
                    );
                    break;
                }
            }
            let segs = points.len() - 1;
            'self_check: for s in 0..segs {
                for t in s + 2..segs {
                    if segments_meet(&points[s], &points[s + 1], &points[t], &points[t + 1]) {
                        report.push(
                            SELF_INTERSECTION,
                            label.clone(),
                            format!("segments {} and {} meet", s + 1, t + 1),
                        );
                        break 'self_check;
                    }
                }
            }
            let start_on = circle_position(start.1, start.0) == Ordering::Equal;
            let end_on = circle_position(end.1, end.0) == Ordering::Equal;
            'disk_check: for s in 0..segs {
                for c in &circles {
                    let own_start = s == 0 && start_on && std::ptr::eq(*c, start.1);
                    let own_end = s == segs - 1 && end_on && std::ptr::eq(*c, end.1);
                    if own_start || own_end {
                        // touches its own circle at the attachment; the outward
                        // direction check keeps the rest of the segment outside
                        continue;
                    }
                    if segment_meets_disk(&points[s], &points[s + 1], c) {
                        report.push(
                            ARC_MEETS_DISK,
                            label.clone(),
                            format!("segment {} meets an alpha disk", s + 1),
                        );
                        break 'disk_check;
                    }
                }
            }
            dirs_at_ends.push((label.clone(), x_sign(first), x_sign(last)));
            out.push(ArcGeometry { label, points });
        }
        let n = dirs_at_ends.len();
        if n == b.arcs.len() {
            for k in 0..n {
                let (label, _, leaving) = &dirs_at_ends[k];
                let (_, arriving, _) = &dirs_at_ends[(k + 1) % n];
                if leaving != arriving {
                    report.push(
                        DIRECTION_CONTINUITY,
                        label.clone(),
                        "the horizontal direction must continue through the crossing",
                    );
                }
            }
        }
    }
    out
}

fn check_arc_pairs(arcs: &[ArcGeometry], report: &mut ValidationReport) {
    for (k, a) in arcs.iter().enumerate() {
        'pair: for b in &arcs[k + 1..] {
            for sa in a.points.windows(2) {
                for sb in b.points.windows(2) {
                    if segments_meet(&sa[0], &sa[1], &sb[0], &sb[1]) {
                        report.push(
                            ARC_INTERSECTION,
                            format!("{} / {}", a.label, b.label),
                            "arcs meet",
                        );
                        break 'pair;
                    }
                }
            }
        }
    }
}

fn check_placement(
    l: &RectLayout,
    beta_of: &HashMap<String, usize>,
    report: &mut ValidationReport,
) {
    let g = l.genus;
    let mut alphas: Vec<usize> = Vec::new();
    let mut betas: Vec<usize> = Vec::new();
    for id in &l.matching {
        if let Some(x) = l.crossing(id) {
            alphas.push(x.alpha);
        }
        if let Some(&j) = beta_of.get(id) {
            betas.push(j);
        }
    }
    alphas.sort_unstable();
    alphas.dedup();
    betas.sort_unstable();
    betas.dedup();
    if l.matching.len() != g || alphas.len() != g || betas.len() != g {
        report.push(
            MATCHING,
            "matching",
            format!(
                "{{{}}} does not meet every alpha and beta curve exactly once",
                l.matching.join(", ")
            ),
        );
    }
    for x in &l.crossings {
        let Some(pair) = l.alpha_pair(x.alpha) else {
            continue;
        };
        let favourite = l.matching.contains(&x.id);
        for copy in [CopySide::Prime, CopySide::Second] {
            let side = (&x.point(copy).x - &pair.circle(copy).center.x).signum();
            // the prime copy turns counterclockwise, so its tangent points up
            // on the right; the second copy turns clockwise
            let up = match copy {
                CopySide::Prime => side > 0,
                CopySide::Second => side < 0,
            };
            if side != 0 && up != favourite {
                report.push(
                    FAVOURITE_PLACEMENT,
                    format!("crossing {}", x.id),
                    if favourite {
                        format!("matching crossing sits at a down-tangent point of the {copy} copy")
                    } else {
                        format!(
                            "non-matching crossing sits at an up-tangent point of the {copy} copy"
                        )
                    },
                );
            }
        }
    }
}

/// Crossing ids of an α copy sorted counterclockwise around its center.
pub(crate) fn ccw_order(l: &RectLayout, alpha: usize, copy: CopySide) -> Vec<&str> {
    let Some(pair) = l.alpha_pair(alpha) else {
        return Vec::new();
    };
    let center = &pair.circle(copy).center;
    let mut pts: Vec<(&str, (Rational, Rational))> = l
        .crossings
        .iter()
        .filter(|x| x.alpha == alpha)
        .map(|x| (x.id.as_str(), sub(x.point(copy), center)))
        .collect();
    pts.sort_by(|a, b| angle_cmp(&a.1, &b.1).then_with(|| a.0.cmp(b.0)));
    pts.into_iter().map(|(id, _)| id).collect()
}

fn same_cyclic_word(a: &[&str], b: &[&str]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    (0..b.len()).any(|shift| {
        a.iter()
            .enumerate()
            .all(|(k, x)| *x == b[(k + shift) % b.len()])
    })
}

fn check_orders(l: &RectLayout, report: &mut ValidationReport) {
    for a in &l.alpha {
        let prime = ccw_order(l, a.index, CopySide::Prime);
        let mut second = ccw_order(l, a.index, CopySide::Second);
        second.reverse();
        if !same_cyclic_word(&prime, &second) {
            report.push(
                ORDER_MISMATCH,
                format!("alpha_{}", a.index),
                format!(
                    "prime copy reads ({}) counterclockwise, second copy reads ({}) clockwise",
                    prime.join(","),
                    second.join(",")
                ),
            );
        }
        let distinct_angles = |copy| {
            let center = &a.circle(copy).center;
            let mut dirs: Vec<_> = l
                .crossings
                .iter()
                .filter(|x| x.alpha == a.index)
                .map(|x| sub(x.point(copy), center))
                .collect();
            dirs.sort_by(angle_cmp);
            dirs.windows(2)
                .all(|w| angle_cmp(&w[0], &w[1]) != Ordering::Equal)
        };
        if !distinct_angles(CopySide::Prime) || !distinct_angles(CopySide::Second) {
            report.push(
                ORDER_MISMATCH,
                format!("alpha_{}", a.index),
                "two attachments share a direction from the center",
            );
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_words() {
        assert!(same_cyclic_word(&["a", "b", "c"], &["c", "a", "b"]));
        assert!(!same_cyclic_word(&["a", "b", "c"], &["a", "c", "b"]));
        assert!(same_cyclic_word(&[], &[]));
    }
}
