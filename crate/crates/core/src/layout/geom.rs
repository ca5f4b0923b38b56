//! Exact planar predicates on rational points.

use std::cmp::Ordering;

use super::{Circle, Point};
use crate::rational::Rational;

pub(crate) fn sub(a: &Point, b: &Point) -> (Rational, Rational) {
    (&a.x - &b.x, &a.y - &b.y)
}

pub(crate) fn cross(u: &(Rational, Rational), v: &(Rational, Rational)) -> Rational {
    &u.0 * &v.1 - &u.1 * &v.0
}

pub(crate) fn dot(u: &(Rational, Rational), v: &(Rational, Rational)) -> Rational {
    &u.0 * &v.0 + &u.1 * &v.1
}

/// Sign of the turn a → b → c.
pub(crate) fn orient(a: &Point, b: &Point, c: &Point) -> i32 {
    cross(&sub(b, a), &sub(c, a)).signum()
}

fn on_segment(a: &Point, b: &Point, p: &Point) -> bool {
    // p collinear with a, b is assumed
    p.x >= a.x.clone().min(b.x.clone())
        && p.x <= a.x.clone().max(b.x.clone())
        && p.y >= a.y.clone().min(b.y.clone())
        && p.y <= a.y.clone().max(b.y.clone())
}

/// Closed segments `[a,b]` and `[c,d]` share at least one point.
pub(crate) fn segments_meet(a: &Point, b: &Point, c: &Point, d: &Point) -> bool {
    let o1 = orient(a, b, c);
    let o2 = orient(a, b, d);
    let o3 = orient(c, d, a);
    let o4 = orient(c, d, b);
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    (o1 == 0 && on_segment(a, b, c))
        || (o2 == 0 && on_segment(a, b, d))
        || (o3 == 0 && on_segment(c, d, a))
        || (o4 == 0 && on_segment(c, d, b))
}

pub(crate) fn dist2(a: &Point, b: &Point) -> Rational {
    let d = sub(a, b);
    dot(&d, &d)
}

/// Squared distance from `p` to the closed segment `[a,b]`.
pub(crate) fn segment_dist2(a: &Point, b: &Point, p: &Point) -> Rational {
    let ab = sub(b, a);
    let len2 = dot(&ab, &ab);
    if len2.is_zero() {
        return dist2(a, p);
    }
    let t = &dot(&sub(p, a), &ab) / &len2;
    let t = if t < Rational::zero() {
        Rational::zero()
    } else if t > Rational::one() {
        Rational::one()
    } else {
        t
    };
    let foot = Point::new(&a.x + &t * &ab.0, &a.y + &t * &ab.1);
    dist2(&foot, p)
}

/// Where `p` sits relative to the circle: `Less` inside, `Equal` on it.
pub(crate) fn circle_position(c: &Circle, p: &Point) -> Ordering {
    dist2(&c.center, p).cmp(&(&c.radius * &c.radius))
}

pub(crate) fn segment_meets_disk(a: &Point, b: &Point, c: &Circle) -> bool {
    segment_dist2(a, b, &c.center) <= &c.radius * &c.radius
}

/// Compares the counterclockwise angles of `u` and `v` measured from the
/// positive x-axis, in `[0, 2π)`.
pub(crate) fn angle_cmp(u: &(Rational, Rational), v: &(Rational, Rational)) -> Ordering {
    let upper = |w: &(Rational, Rational)| {
        w.1 > Rational::zero() || (w.1.is_zero() && w.0 > Rational::zero())
    };
    match (upper(u), upper(v)) {
        (true, false) => Ordering::Less,
        (false, true) => Ordering::Greater,
        _ => 0.cmp(&cross(u, v).signum()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point {
        Point::from_i64(x, y)
    }

    #[test]
    fn segment_intersection_cases() {
        assert!(segments_meet(&p(0, 0), &p(4, 4), &p(0, 4), &p(4, 0)));
        assert!(!segments_meet(&p(0, 0), &p(1, 1), &p(2, 2), &p(3, 3)));
        assert!(segments_meet(&p(0, 0), &p(2, 2), &p(2, 2), &p(3, 0)));
        assert!(segments_meet(&p(0, 0), &p(4, 0), &p(1, 0), &p(2, 0)));
        assert!(!segments_meet(&p(0, 0), &p(4, 0), &p(0, 1), &p(4, 1)));
        // touching at an interior point
        assert!(segments_meet(&p(0, 0), &p(4, 0), &p(2, 0), &p(2, 3)));
    }

    #[test]
    fn disk_distance() {
        let c = Circle {
            center: p(0, 0),
            radius: Rational::from_integer(5),
        };
        assert!(segment_meets_disk(&p(-10, 5), &p(10, 5), &c));
        assert!(!segment_meets_disk(&p(-10, 6), &p(10, 6), &c));
        assert!(!segment_meets_disk(&p(6, -10), &p(6, 10), &c));
        assert_eq!(circle_position(&c, &p(3, 4)), Ordering::Equal);
        assert_eq!(circle_position(&c, &p(3, 3)), Ordering::Less);
        assert_eq!(
            segment_dist2(&p(10, 0), &p(20, 0), &p(0, 0)),
            Rational::from_integer(100)
        );
    }

    #[test]
    fn angles_sort_counterclockwise() {
        let r = |x, y| (Rational::from_integer(x), Rational::from_integer(y));
        let mut v = vec![r(0, -1), r(-1, 0), r(1, 1), r(1, 0), r(-1, 1), r(1, -1)];
        v.sort_by(angle_cmp);
        assert_eq!(
            v,
            vec![r(1, 0), r(1, 1), r(-1, 1), r(-1, 0), r(0, -1), r(1, -1)]
        );
    }
}
