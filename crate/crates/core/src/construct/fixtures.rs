//! Hand-made covers of the small graphs built from `K3` and `K5`.
//!
//! Letters map to ids alphabetically, primed letters after the unprimed ones:
//!
//! | fixture            | ids                                          |
//! |--------------------|----------------------------------------------|
//! | `K3K3-cut-vertex`  | u0 v1 w2 x3 y4 (triangles uvw, wxy)          |
//! | `K5K3-cut-vertex`  | s0 t1 u2 v3 w4 x5 y6 (K5 on u..y, K3 vst)     |
//! | `K5K5-cut-vertex`  | u0 v1 w2 x3 y4 u'5 w'6 x'7 y'8 (cut vertex v) |
//! | `K5-minus-edge`    | u0 v1 w2 x3 y4 (edge uv missing)             |
//! | `K5K5-two-bridge`  | u0 v1 w2 x3 y4 u'5 v'6 w'7 x'8 y'9 (uu', vv') |

use std::fmt;
use std::str::FromStr;

use super::ConstructError;
use crate::cover::{DiPath, PathCover};
use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FixtureName {
    K3K3CutVertex,
    K5K3CutVertex,
    K5K5CutVertex,
    K5MinusEdge,
    K5K5TwoBridge,
}

impl FixtureName {
    pub const ALL: [FixtureName; 5] = [
        FixtureName::K3K3CutVertex,
        FixtureName::K5K3CutVertex,
        FixtureName::K5K5CutVertex,
        FixtureName::K5MinusEdge,
        FixtureName::K5K5TwoBridge,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FixtureName::K3K3CutVertex => "K3K3-cut-vertex",
            FixtureName::K5K3CutVertex => "K5K3-cut-vertex",
            FixtureName::K5K5CutVertex => "K5K5-cut-vertex",
            FixtureName::K5MinusEdge => "K5-minus-edge",
            FixtureName::K5K5TwoBridge => "K5K5-two-bridge",
        }
    }

    /// Letter of each vertex id.
    pub fn labels(self) -> &'static [&'static str] {
        match self {
            FixtureName::K3K3CutVertex | FixtureName::K5MinusEdge => &["u", "v", "w", "x", "y"],
            FixtureName::K5K3CutVertex => &["s", "t", "u", "v", "w", "x", "y"],
            FixtureName::K5K5CutVertex => &["u", "v", "w", "x", "y", "u'", "w'", "x'", "y'"],
            FixtureName::K5K5TwoBridge => &["u", "v", "w", "x", "y", "u'", "v'", "w'", "x'", "y'"],
        }
    }

    fn graph(self) -> Graph {
        let k = |vs: &[VertexId], g: &mut Graph| {
            for (i, &a) in vs.iter().enumerate() {
                for &b in &vs[i + 1..] {
                    g.add_edge(a, b).expect("fixture edges are distinct");
                }
            }
        };
        let mut g = Graph::empty(self.labels().len());
        match self {
            FixtureName::K3K3CutVertex => {
                k(&[0, 1, 2], &mut g);
                k(&[2, 3, 4], &mut g);
            }
            FixtureName::K5K3CutVertex => {
                k(&[2, 3, 4, 5, 6], &mut g);
                k(&[0, 1, 3], &mut g);
            }
            FixtureName::K5K5CutVertex => {
                k(&[0, 1, 2, 3, 4], &mut g);
                k(&[1, 5, 6, 7, 8], &mut g);
            }
            FixtureName::K5MinusEdge => {
                k(&[0, 1, 2, 3, 4], &mut g);
                g = g.without_edges(&[(0, 1)]);
            }
            FixtureName::K5K5TwoBridge => {
                k(&[0, 1, 2, 3, 4], &mut g);
                k(&[5, 6, 7, 8, 9], &mut g);
                g.add_edge(0, 5).unwrap();
                g.add_edge(1, 6).unwrap();
            }
        }
        g
    }

    fn words(self) -> &'static [&'static str] {
        match self {
            FixtureName::K3K3CutVertex => &["uwxy", "ywvu", "xw", "wuv", "vwyx"],
            FixtureName::K5K3CutVertex => {
                &["yvwux", "wxvyu", "xywv", "tsvuyxw", "vt", "uvs", "stvxuwy"]
            }
            FixtureName::K5K5CutVertex => &[
                "uxwyvy'w'x'u'",
                "ywxuvu'x'w'y'",
                "x'vx",
                "u'vu",
                "xyuwvw'u'y'x'",
                "wuyxvx'y'u'w'",
                "w'vw",
                "y'v",
                "vy",
            ],
            FixtureName::K5MinusEdge => &["uyxw", "yvwux", "wxvyu", "xywv", "vxuwy"],
            FixtureName::K5K5TwoBridge => &[
                "uxywvv'y'u'x'w'",
                "xvwu",
                "wxuvy",
                "yuu'",
                "vuwyx",
                "v'x'y'w'u'uyvxw",
                "x'u'w'v'",
                "w'x'v'u'y'",
                "y'v'v",
                "u'v'w'y'x'",
            ],
        }
    }
}

impl fmt::Display for FixtureName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FixtureName {
    type Err = ConstructError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FixtureName::ALL
            .into_iter()
            .find(|f| f.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| ConstructError::UnknownFixture(s.to_string()))
    }
}

/// Splits a word such as `"uxwyvy'w'"` into letter ids.
fn spell(word: &str, labels: &[&str]) -> DiPath {
    let mut seq = Vec::new();
    let chars: Vec<char> = word.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let primed = chars.get(i + 1) == Some(&'\'');
        let letter: String = if primed {
            chars[i..i + 2].iter().collect()
        } else {
            chars[i].to_string()
        };
        let id = labels
            .iter()
            .position(|&l| l == letter)
            .unwrap_or_else(|| panic!("letter {letter} not in fixture"));
        seq.push(id);
        i += if primed { 2 } else { 1 };
    }
    DiPath::new(seq)
}

/// The named graph and its cover, paths in their listed order.
pub fn builtin_fixture(name: FixtureName) -> (Graph, PathCover) {
    let labels = name.labels();
    let paths = name.words().iter().map(|w| spell(w, labels)).collect();
    (name.graph(), PathCover::new(paths))
}

/// The cover of `K5 - uv` as paths over ids u0 v1 w2 x3 y4.
pub(crate) fn k5_minus_edge_paths() -> Vec<DiPath> {
    builtin_fixture(FixtureName::K5MinusEdge).1.into_paths()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::verify_oppdc;

    #[test]
    fn every_fixture_is_valid() {
        for name in FixtureName::ALL {
            let (g, c) = builtin_fixture(name);
            assert_eq!(c.len(), g.order(), "{name}");
            let r = verify_oppdc(&g, &c, true).unwrap();
            assert!(r.valid, "{name}: {r}");
        }
    }

    #[test]
    fn k5_minus_edge_counts() {
        let (g, c) = builtin_fixture(FixtureName::K5MinusEdge);
        assert_eq!(g.size(), 9);
        assert_eq!(c.arc_count(), 18);
        assert_eq!(c.paths()[0], DiPath::new(vec![0, 4, 3, 2]));
    }

    #[test]
    fn names_round_trip() {
        for name in FixtureName::ALL {
            assert_eq!(name.as_str().parse::<FixtureName>().unwrap(), name);
        }
        assert!("K4".parse::<FixtureName>().is_err());
    }

    #[test]
    fn primes_are_read_as_one_letter() {
        let labels = FixtureName::K5K5TwoBridge.labels();
        assert_eq!(spell("y'v'v", labels), DiPath::new(vec![9, 6, 1]));
    }
}
