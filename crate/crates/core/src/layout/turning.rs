//! Exact turning numbers of polylines that start and end horizontally.
//!
//! The total rotation of the tangent, divided by π, equals the signed number
//! of times the tangent sweeps past a vertical direction. A direction lying
//! exactly on a vertical is treated as if rotated infinitesimally
//! counterclockwise of it, so a counterclockwise step counts a vertical
//! reached at its end but not one it starts on, and a clockwise step counts
//! a vertical it starts on but not one it ends on. This keeps every pass
//! counted exactly once.

use super::geom::{cross, dot};
use super::{HalfInt, LayoutError};
use crate::rational::Rational;

type Dir = (Rational, Rational);

fn same_direction(u: &Dir, v: &Dir) -> bool {
    cross(u, v).is_zero() && dot(u, v) > Rational::zero()
}

/// `t` is swept by the counterclockwise turn from `u` to `v`, end included.
fn swept_ccw(u: &Dir, v: &Dir, t: &Dir) -> bool {
    cross(u, t) > Rational::zero() && (cross(t, v) > Rational::zero() || same_direction(t, v))
}

/// `t` is swept by the clockwise turn from `u` to `v`, start included.
fn swept_cw(u: &Dir, v: &Dir, t: &Dir) -> bool {
    (cross(u, t) < Rational::zero() || same_direction(u, t)) && cross(t, v) < Rational::zero()
}

/// Total rotation of a direction sequence in half-turns.
pub fn turning_half_turns(directions: &[Dir]) -> Result<HalfInt, LayoutError> {
    let horizontal = |d: &Dir| d.1.is_zero() && !d.0.is_zero();
    match (directions.first(), directions.last()) {
        (Some(a), Some(b)) if horizontal(a) && horizontal(b) => {}
        _ => return Err(LayoutError::NonHorizontalEnds),
    }
    let verticals: [Dir; 2] = [
        (Rational::zero(), Rational::one()),
        (Rational::zero(), -Rational::one()),
    ];
    let mut total = 0i64;
    for (index, pair) in directions.windows(2).enumerate() {
        let (u, v) = (&pair[0], &pair[1]);
        if u.0.is_zero() && u.1.is_zero() || v.0.is_zero() && v.1.is_zero() {
            return Err(LayoutError::AntiparallelStep { index });
        }
        match cross(u, v).signum() {
            0 if dot(u, v) < Rational::zero() => {
                return Err(LayoutError::AntiparallelStep { index })
            }
            0 => {}
            1 => total += verticals.iter().filter(|t| swept_ccw(u, v, t)).count() as i64,
            _ => total -= verticals.iter().filter(|t| swept_cw(u, v, t)).count() as i64,
        }
    }
    Ok(HalfInt::new(total))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn dirs(v: &[(i64, i64)]) -> Vec<Dir> {
        v.iter()
            .map(|&(x, y)| (Rational::from_integer(x), Rational::from_integer(y)))
            .collect()
    }

    fn half_turns(v: &[(i64, i64)]) -> i64 {
        turning_half_turns(&dirs(v)).unwrap().half_turns
    }

    /// Sum of signed turning angles over π.
    fn float_oracle(v: &[(i64, i64)]) -> f64 {
        v.windows(2)
            .map(|w| {
                let (a, b) = (w[0], w[1]);
                let c = (a.0 * b.1 - a.1 * b.0) as f64;
                let d = (a.0 * b.0 + a.1 * b.1) as f64;
                c.atan2(d)
            })
            .sum::<f64>()
            / std::f64::consts::PI
    }

    #[test]
    fn examples() {
        assert_eq!(half_turns(&[(1, 0)]), 0);
        assert_eq!(half_turns(&[(1, 0), (3, 0), (1, 0)]), 0);
        // left, up-left, left, down, right: the D1 arc from c to d
        assert_eq!(
            half_turns(&[(-2, 0), (-5, 7), (-15, 0), (0, -7), (4, 0)]),
            1
        );
        // passing exactly through a vertical and back
        assert_eq!(half_turns(&[(-1, 0), (0, -1), (-1, 0)]), 0);
        assert_eq!(half_turns(&[(1, 0), (0, 1), (1, 0)]), 0);
        assert_eq!(half_turns(&[(1, 0), (0, 1), (-1, 0)]), 1);
        assert_eq!(half_turns(&[(1, 0), (0, -1), (-1, 0)]), -1);
        // a full loop
        assert_eq!(half_turns(&[(1, 0), (0, 1), (-1, 0), (0, -1), (1, 0)]), 2);
    }

    #[test]
    fn errors() {
        assert_eq!(
            turning_half_turns(&dirs(&[(1, 0), (-2, 0)])),
            Err(LayoutError::AntiparallelStep { index: 0 })
        );
        assert_eq!(
            turning_half_turns(&dirs(&[(1, 0), (0, 1), (0, -1), (1, 0)])),
            Err(LayoutError::AntiparallelStep { index: 1 })
        );
        assert_eq!(
            turning_half_turns(&dirs(&[(1, 1), (1, 0)])),
            Err(LayoutError::NonHorizontalEnds)
        );
        assert_eq!(turning_half_turns(&[]), Err(LayoutError::NonHorizontalEnds));
    }

    fn random_sequence(rng: &mut ChaCha8Rng) -> Vec<(i64, i64)> {
        let len = rng.gen_range(2..12);
        let mut v: Vec<(i64, i64)> = Vec::with_capacity(len);
        v.push((if rng.gen() { 1 } else { -1 } * rng.gen_range(1..5), 0));
        while v.len() < len {
            let last = *v.last().unwrap();
            let next = if v.len() == len - 1 {
                (if rng.gen() { 1 } else { -1 } * rng.gen_range(1..5), 0)
            } else if rng.gen_bool(0.25) {
                // axis directions exercise the boundary cases
                [(1, 0), (-1, 0), (0, 1), (0, -1)][rng.gen_range(0..4)]
            } else {
                (rng.gen_range(-4..=4), rng.gen_range(-4..=4))
            };
            let antiparallel =
                last.0 * next.1 == last.1 * next.0 && last.0 * next.0 + last.1 * next.1 < 0;
            if next == (0, 0) || antiparallel {
                if v.len() == len - 1 {
                    // restart: the closing direction cannot follow `last`
                    v.truncate(1);
                }
                continue;
            }
            v.push(next);
        }
        v
    }

    #[test]
    fn agrees_with_float_oracle_on_random_sequences() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..2000 {
            let v = random_sequence(&mut rng);
            let oracle = float_oracle(&v);
            assert!((oracle - oracle.round()).abs() < 1e-6, "{v:?} -> {oracle}");
            assert_eq!(half_turns(&v), oracle.round() as i64, "{v:?}");
        }
    }

    proptest! {
        #[test]
        fn wiggle_leaves_turning_unchanged(
            base in prop::collection::vec((-4i64..=4, -4i64..=4), 0..6),
            at in 0usize..8,
            bump in (1i64..4, 1i64..4),
        ) {
            let mut v = vec![(1, 0)];
            for d in base {
                let last = *v.last().unwrap();
                let anti = last.0 * d.1 == last.1 * d.0 && last.0 * d.0 + last.1 * d.1 < 0;
                if d != (0, 0) && !anti {
                    v.push(d);
                }
            }
            let last = *v.last().unwrap();
            let close = if last.0 < 0 { (-1, 0) } else { (1, 0) };
            v.push(close);
            let before = half_turns(&v);
            // replace a horizontal-free spot with a there-and-back bump along the segment
            let k = at % v.len();
            let d = v[k];
            let bumped = [(d.0 * 2 + bump.0 * -d.1, d.1 * 2 + bump.0 * d.0), (d.0 * 2 - bump.1 * -d.1, d.1 * 2 - bump.1 * d.0)];
            let mut w = v.clone();
            w.splice(k + 1..k + 1, bumped.iter().copied().chain(std::iter::once(d)));
            prop_assume!(w.windows(2).all(|p| !(p[0].0 * p[1].1 == p[0].1 * p[1].0 && p[0].0 * p[1].0 + p[0].1 * p[1].1 < 0)));
            prop_assert_eq!(half_turns(&w), before);
            prop_assert_eq!(before as f64, float_oracle(&v).round());
        }
    }
}
