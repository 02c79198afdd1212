//! The Farey tessellation of the hyperbolic plane and its dual tree.
//!
//! Vertices are slopes `a/b` in `Q ∪ {∞}`; two slopes span an edge when
//! their determinant is `±1`. A triangle of the tessellation stands for the
//! isotopy class of a theta-curve on a torus, and crossing an edge into the
//! adjacent triangle is a flip of that theta-curve. The dual graph is a
//! tree, so the flip distance is a tree distance.

mod oracle;
mod proj;
mod walk;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rationals::{gcd, parse_bounded_int, SurgeryCoefficient};
use proj::Proj;

pub use oracle::{ball, bfs_distance, random_walk, DEFAULT_RADIUS_CAP};
pub use walk::{closest_triangle_with_vertex, flip_path, geodesic_distance, step_distance};

/// A vertex of the tessellation: `a/b` with `b > 0` and `gcd(|a|, b) = 1`,
/// or `∞ = 1/0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Slope {
    a: i64,
    b: i64,
}

impl Slope {
    pub const INFINITY: Slope = Slope { a: 1, b: 0 };

    /// Reduce and sign-normalise `a/b`. Any `(a, 0)` with `a != 0` is `∞`.
    pub fn new(a: i64, b: i64) -> Result<Slope> {
        if a == 0 && b == 0 {
            return Err(Error::InvalidCoefficient);
        }
        if b == 0 {
            return Ok(Slope::INFINITY);
        }
        let g = gcd(a.unsigned_abs(), b.unsigned_abs()) as i128;
        let (mut a, mut b) = (a as i128 / g, b as i128 / g);
        if b < 0 {
            (a, b) = (-a, -b);
        }
        let a = i64::try_from(a).map_err(|_| Error::Overflow("slope numerator"))?;
        Ok(Slope { a, b: b as i64 })
    }

    pub const fn integer(k: i64) -> Slope {
        Slope { a: k, b: 1 }
    }

    pub fn numerator(&self) -> i64 {
        self.a
    }

    pub fn denominator(&self) -> i64 {
        self.b
    }

    pub fn is_infinity(&self) -> bool {
        self.b == 0
    }

    pub(crate) fn proj(self) -> Proj {
        Proj {
            a: self.a as i128,
            b: self.b as i128,
        }
    }

    pub(crate) fn from_proj(p: Proj) -> Result<Slope> {
        Ok(Slope {
            a: i64::try_from(p.a).map_err(|_| Error::Overflow("slope numerator"))?,
            b: i64::try_from(p.b).map_err(|_| Error::Overflow("slope denominator"))?,
        })
    }
}

impl From<SurgeryCoefficient> for Slope {
    fn from(x: SurgeryCoefficient) -> Slope {
        Slope {
            a: x.p() as i64,
            b: x.q() as i64,
        }
    }
}

impl Ord for Slope {
    /// Circular order on the boundary, read as the extended real line
    /// with `∞` greatest.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.proj().cmp(&other.proj())
    }
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinity() {
            f.write_str("inf")
        } else {
            write!(f, "{}/{}", self.a, self.b)
        }
    }
}

impl FromStr for Slope {
    type Err = Error;

    /// `p/q`, `p`, or `inf`.
    fn from_str(s: &str) -> Result<Slope> {
        let s = s.trim();
        if s == "inf" {
            return Ok(Slope::INFINITY);
        }
        match s.split_once('/') {
            Some((a, b)) => Slope::new(parse_bounded_int(a, s)?, parse_bounded_int(b, s)?),
            None => Slope::new(parse_bounded_int(s, s)?, 1),
        }
    }
}

impl Serialize for Slope {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Slope {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `|a·d − b·c| = 1`: the two slopes span an edge of the tessellation.
pub fn unimodular(s1: Slope, s2: Slope) -> bool {
    let det = s1.a as i128 * s2.b as i128 - s1.b as i128 * s2.a as i128;
    det.abs() == 1
}

/// A triangle of the tessellation, with vertices kept in circular order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FareyTriangle {
    vertices: [Slope; 3],
}

impl FareyTriangle {
    pub fn new(s1: Slope, s2: Slope, s3: Slope) -> Result<FareyTriangle> {
        let mut vertices = [s1, s2, s3];
        vertices.sort_unstable();
        if vertices[0] == vertices[1] || vertices[1] == vertices[2] {
            return Err(Error::RepeatedVertex);
        }
        for (x, y) in [(s1, s2), (s2, s3), (s1, s3)] {
            if !unimodular(x, y) {
                return Err(Error::NotUnimodular(x.to_string(), y.to_string()));
            }
        }
        Ok(FareyTriangle { vertices })
    }

    pub fn vertices(&self) -> [Slope; 3] {
        self.vertices
    }

    pub fn contains(&self, s: Slope) -> bool {
        self.vertices.contains(&s)
    }

    /// Number of shared vertices with `other`.
    pub fn shared_vertices(&self, other: &FareyTriangle) -> usize {
        self.vertices.iter().filter(|v| other.contains(**v)).count()
    }

    pub(crate) fn projs(&self) -> [Proj; 3] {
        self.vertices.map(Slope::proj)
    }

    /// Rebuilds a triangle from vertices already known to form a Farey
    /// triangle; only range and ordering are handled here.
    pub(crate) fn from_projs(mut projs: [Proj; 3]) -> Result<FareyTriangle> {
        projs.sort_unstable();
        Ok(FareyTriangle {
            vertices: [
                Slope::from_proj(projs[0])?,
                Slope::from_proj(projs[1])?,
                Slope::from_proj(projs[2])?,
            ],
        })
    }

    fn position(&self, s: Slope) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| *v == s)
            .ok_or_else(|| Error::NotAVertex {
                vertex: s.to_string(),
                triangle: self.to_string(),
            })
    }
}

impl fmt::Display for FareyTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x, y, z] = self.vertices;
        write!(f, "{x},{y},{z}")
    }
}

impl FromStr for FareyTriangle {
    type Err = Error;

    /// `a/b,c/d,e/f`, each component in slope syntax.
    fn from_str(s: &str) -> Result<FareyTriangle> {
        let s = s.trim();
        let parts: Vec<&str> = s.split(',').collect();
        let [x, y, z] = parts[..] else {
            return Err(Error::Parse {
                input: s.to_string(),
                reason: "expected three comma-separated slopes",
            });
        };
        FareyTriangle::new(x.parse()?, y.parse()?, z.parse()?)
    }
}

impl Serialize for FareyTriangle {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FareyTriangle {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `△^(i)`: the triangle with vertices `i`, `i + 1` and `∞`.
pub fn base_triangle(i: i64) -> FareyTriangle {
    let next = i.checked_add(1).expect("base triangle index overflow");
    FareyTriangle {
        vertices: [Slope::integer(i), Slope::integer(next), Slope::INFINITY],
    }
}

/// The triangle across the edge of `t` opposite to `opposite`.
pub fn neighbor(t: &FareyTriangle, opposite: Slope) -> Result<FareyTriangle> {
    let i = t.position(opposite)?;
    let projs = t.projs();
    let replacement = proj_neighbor(&projs, i)?;
    let mut next = projs;
    next[i] = replacement;
    FareyTriangle::from_projs(next)
}

/// Replacement for vertex `i` of a Farey triangle when crossing the
/// opposite edge.
pub(crate) fn proj_neighbor(tri: &[Proj; 3], i: usize) -> Result<Proj> {
    let (u, w) = (tri[(i + 1) % 3], tri[(i + 2) % 3]);
    let [sum, diff] = u.third_vertices(w)?;
    if sum == tri[i] {
        Ok(diff)
    } else {
        debug_assert_eq!(diff, tri[i], "not a Farey triangle");
        Ok(sum)
    }
}

/// Flip the theta-curve class `t`, keeping the edge `keep_edge`.
pub fn flip(t: &FareyTriangle, keep_edge: (Slope, Slope)) -> Result<FareyTriangle> {
    let (x, y) = keep_edge;
    if x == y || !t.contains(x) || !t.contains(y) {
        return Err(Error::NotAnEdge {
            edge: format!("{x},{y}"),
            triangle: t.to_string(),
        });
    }
    let opposite = t
        .vertices
        .into_iter()
        .find(|v| *v != x && *v != y)
        .expect("triangle has three distinct vertices");
    neighbor(t, opposite)
}

/// A sequence of triangles, each one flip from the previous.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlipPath {
    triangles: Vec<FareyTriangle>,
}

impl FlipPath {
    pub(crate) fn from_triangles(triangles: Vec<FareyTriangle>) -> FlipPath {
        FlipPath { triangles }
    }

    pub fn triangles(&self) -> &[FareyTriangle] {
        &self.triangles
    }

    /// Number of flips.
    pub fn len(&self) -> usize {
        self.triangles.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Consecutive triangles share exactly an edge and no triangle repeats.
    pub fn is_valid(&self) -> bool {
        let adjacent = self.triangles.windows(2).all(|w| w[0].shared_vertices(&w[1]) == 2);
        let mut seen = std::collections::HashSet::new();
        adjacent && self.triangles.iter().all(|t| seen.insert(*t))
    }
}
