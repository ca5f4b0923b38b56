//! The bundled example layouts.

use crate::layout::{parse_layout, RectLayout};

pub const D1_W: &str = include_str!("../corpus/d1_w.hgr");
pub const D1_WPRIME: &str = include_str!("../corpus/d1_wprime.hgr");
pub const D2_W: &str = include_str!("../corpus/d2_w.hgr");
pub const D3_W: &str = include_str!("../corpus/d3_w.hgr");
pub const S3_TRIVIAL: &str = include_str!("../corpus/s3_trivial.hgr");

/// `(file name, contents)` for every bundled layout.
pub const ALL: [(&str, &str); 5] = [
    ("d1_w.hgr", D1_W),
    ("d1_wprime.hgr", D1_WPRIME),
    ("d2_w.hgr", D2_W),
    ("d3_w.hgr", D3_W),
    ("s3_trivial.hgr", S3_TRIVIAL),
];

/// Parses a bundled layout.
///
/// # Panics
///
/// If `name` is not one of [`ALL`].
pub fn layout(name: &str) -> RectLayout {
    let (_, text) = ALL
        .iter()
        .find(|(n, _)| *n == name)
        .unwrap_or_else(|| panic!("no bundled layout {name}"));
    parse_layout(text).expect("bundled layouts parse")
}
