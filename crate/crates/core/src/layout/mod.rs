//! Rectangular diagrams: the planar picture obtained by cutting the surface
//! along the α-curves and removing a disk around an exterior point.
//!
//! Each α-curve becomes two circles, the prime copy (oriented
//! counterclockwise) and the second copy (oriented clockwise). β-curves are
//! chains of polyline arcs running between attachment points on those
//! circles, horizontal where they meet a circle.

mod derive;
mod geom;
mod parse;
mod svg;
mod turning;
mod validate;


use std::fmt;
use std::ops::{Add, AddAssign, Neg};

use serde::{Deserialize, Serialize};

use crate::diagram::DiagramError;
use crate::rational::Rational;
use crate::report::ValidationReport;

pub use derive::{de_arc, de_beta, de_chain, derive_combinatorics, sign_at};
pub use parse::parse_layout;
pub use svg::{render_svg, SvgOptions};
pub use turning::turning_half_turns;
pub use validate::validate_layout;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LayoutError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("duplicate id {0}")]
    DuplicateId(String),
    #[error("unknown reference {0}")]
    UnknownReference(String),
    #[error("layout fails validation:\n{0}")]
    Invalid(ValidationReport),
    #[error("crossing {0}: sign differs between the prime and second copies")]
    SignMismatch(String),
    #[error("crossing {crossing}: alpha tangent parallel to beta on the {copy} copy")]
    DegenerateTangent { crossing: String, copy: CopySide },
    #[error("directions {index} and {} are antiparallel", index + 1)]
    AntiparallelStep { index: usize },
    #[error("first and last directions must be horizontal")]
    NonHorizontalEnds,
    #[error("beta_{beta} turns by {half_turns} half-turns, not a whole number of turns")]
    OddBetaDegree { beta: usize, half_turns: i64 },
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "[Rational; 2]", into = "[Rational; 2]")]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn from_i64(x: i64, y: i64) -> Self {
        Point::new(Rational::from_integer(x), Rational::from_integer(y))
    }
}

impl From<[Rational; 2]> for Point {
    fn from([x, y]: [Rational; 2]) -> Self {
        Point { x, y }
    }
}

impl From<Point> for [Rational; 2] {
    fn from(p: Point) -> Self {
        [p.x, p.y]
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rect {
    pub xmin: Rational,
    pub ymin: Rational,
    pub xmax: Rational,
    pub ymax: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Circle {
    pub center: Point,
    pub radius: Rational,
}

/// The two copies of one α-curve.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaPair {
    pub index: usize,
    pub prime: Circle,
    pub second: Circle,
}

impl AlphaPair {
    pub fn circle(&self, copy: CopySide) -> &Circle {
        match copy {
            CopySide::Prime => &self.prime,
            CopySide::Second => &self.second,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CopySide {
    Prime,
    Second,
}

impl CopySide {
    pub fn other(self) -> Self {
        match self {
            CopySide::Prime => CopySide::Second,
            CopySide::Second => CopySide::Prime,
        }
    }
}

impl fmt::Display for CopySide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CopySide::Prime => "prime",
            CopySide::Second => "second",
        })
    }
}

/// A crossing and its attachment point on each copy of its α-curve.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LayoutCrossing {
    pub id: String,
    pub alpha: usize,
    pub prime_point: Point,
    pub second_point: Point,
}

impl LayoutCrossing {
    pub fn point(&self, copy: CopySide) -> &Point {
        match copy {
            CopySide::Prime => &self.prime_point,
            CopySide::Second => &self.second_point,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcEnd {
    pub crossing: String,
    pub copy: CopySide,
}

/// A polyline from one attachment point through `via` to another.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BetaArc {
    pub from: ArcEnd,
    pub to: ArcEnd,
    #[serde(default)]
    pub via: Vec<Point>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BetaCurve {
    pub index: usize,
    pub arcs: Vec<BetaArc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RectLayout {
    pub genus: usize,
    pub rect: Rect,
    #[serde(default)]
    pub alpha: Vec<AlphaPair>,
    #[serde(default)]
    pub crossings: Vec<LayoutCrossing>,
    #[serde(default)]
    pub beta: Vec<BetaCurve>,
    #[serde(default)]
    pub matching: Vec<String>,
}

impl RectLayout {
    pub fn crossing(&self, id: &str) -> Option<&LayoutCrossing> {
        self.crossings.iter().find(|c| c.id == id)
    }

    pub fn alpha_pair(&self, index: usize) -> Option<&AlphaPair> {
        self.alpha.iter().find(|a| a.index == index)
    }

    pub fn beta_curve(&self, index: usize) -> Option<&BetaCurve> {
        self.beta.iter().find(|b| b.index == index)
    }

    /// Point and circle of an arc end.
    pub fn end_geometry(&self, end: &ArcEnd) -> Option<(&Point, &Circle)> {
        let x = self.crossing(&end.crossing)?;
        let pair = self.alpha_pair(x.alpha)?;
        Some((x.point(end.copy), pair.circle(end.copy)))
    }

    /// All vertices of an arc: start attachment, via points, end attachment.
    pub fn arc_points(&self, arc: &BetaArc) -> Option<Vec<Point>> {
        let start = self
            .crossing(&arc.from.crossing)?
            .point(arc.from.copy)
            .clone();
        let end = self.crossing(&arc.to.crossing)?.point(arc.to.copy).clone();
        let mut pts = Vec::with_capacity(arc.via.len() + 2);
        pts.push(start);
        pts.extend(arc.via.iter().cloned());
        pts.push(end);
        Some(pts)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("layout serializes")
    }
}

/// A multiple of 1/2, stored as its count of half-turns.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfInt {
    pub half_turns: i64,
}

impl HalfInt {
    pub fn new(half_turns: i64) -> Self {
        HalfInt { half_turns }
    }

    pub fn is_integer(self) -> bool {
        self.half_turns % 2 == 0
    }

    pub fn to_rational(self) -> Rational {
        Rational::new(self.half_turns, 2)
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt::new(self.half_turns + rhs.half_turns)
    }
}

impl AddAssign for HalfInt {
    fn add_assign(&mut self, rhs: HalfInt) {
        self.half_turns += rhs.half_turns;
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt::new(-self.half_turns)
    }
}

impl std::iter::Sum for HalfInt {
    fn sum<I: Iterator<Item = HalfInt>>(iter: I) -> HalfInt {
        iter.fold(HalfInt::default(), Add::add)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_rational().fmt(f)
    }
}
