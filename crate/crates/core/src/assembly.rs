//! Manifolds with a theta-curve on each boundary torus, tracked only by the
//! isotopy class of each theta-curve and the number of interior true
//! vertices of a simple relative spine.
//!
//! Gluing two such blocks along boundary tori whose theta-curves sit `d`
//! flips apart costs `d` extra vertices, one per flip layer inserted
//! between them.
//!
//! All theta classes are expressed in one coordinate frame. The gluing map
//! is applied by the caller before a block is built (for surgery on the
//! knot exterior: the solid-torus meridian is placed at slope `p/q`).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::farey::{base_triangle, closest_triangle_with_vertex, geodesic_distance, neighbor, FareyTriangle, Slope};

/// Interior true vertices of the known relative spines of the figure-eight
/// knot exterior.
pub const KNOT_EXTERIOR_VERTICES: u64 = 10;

/// A boundary torus and the class of the theta-curve on it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryTorus {
    pub label: String,
    pub theta: FareyTriangle,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    name: String,
    boundaries: Vec<BoundaryTorus>,
    interior_vertices: u64,
}

impl Block {
    /// Fails when two boundary tori share a label.
    pub fn new(name: impl Into<String>, boundaries: Vec<BoundaryTorus>, interior_vertices: u64) -> Result<Block> {
        let name = name.into();
        for (i, b) in boundaries.iter().enumerate() {
            if boundaries[..i].iter().any(|other| other.label == b.label) {
                return Err(Error::Parse {
                    input: b.label.clone(),
                    reason: "duplicate boundary label",
                });
            }
        }
        Ok(Block {
            name,
            boundaries,
            interior_vertices,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn boundaries(&self) -> &[BoundaryTorus] {
        &self.boundaries
    }

    pub fn interior_vertices(&self) -> u64 {
        self.interior_vertices
    }

    pub fn boundary(&self, label: &str) -> Result<&BoundaryTorus> {
        self.boundaries
            .iter()
            .find(|b| b.label == label)
            .ok_or_else(|| Error::UnknownBoundary {
                block: self.name.clone(),
                label: label.to_string(),
            })
    }

    /// `true` for a closed manifold: no boundary tori remain.
    pub fn is_closed(&self) -> bool {
        self.boundaries.is_empty()
    }
}

/// One line of an assembly bill.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CostItem {
    pub step: String,
    pub vertices: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssemblyResult {
    pub block: Block,
    pub cost_breakdown: Vec<CostItem>,
}

/// The two triangles of the solid-torus block for a given meridian:
/// `△_m`, the triangle at the meridian closest to `base`, and `△_V`, its
/// neighbour across the edge opposite the meridian.
pub fn solid_torus_triangles(meridian: Slope, base: &FareyTriangle) -> Result<(FareyTriangle, FareyTriangle)> {
    let triangle_m = closest_triangle_with_vertex(meridian, base).map_err(|e| match e {
        Error::SlopeOnBase(s) => Error::MeridianOnBase(s),
        other => other,
    })?;
    let triangle_v = neighbor(&triangle_m, meridian)?;
    debug_assert!(!triangle_v.contains(meridian));
    debug_assert_eq!(triangle_v.shared_vertices(&triangle_m), 2);
    Ok((triangle_m, triangle_v))
}

/// Solid torus whose theta-curve does not contain the meridian but is one
/// flip from one that does. Its relative spine (boundary, a Möbius band
/// and part of a meridian disc) has no interior true vertices.
pub fn solid_torus_block(meridian: Slope, base: &FareyTriangle) -> Result<Block> {
    let (_, triangle_v) = solid_torus_triangles(meridian, base)?;
    Block::new(
        format!("solid torus (meridian {meridian})"),
        vec![BoundaryTorus {
            label: "boundary".into(),
            theta: triangle_v,
        }],
        0,
    )
}

/// `T × [0, 1]` with theta-curves one flip apart on its two ends.
pub fn flip_block(theta_from: &FareyTriangle, theta_to: &FareyTriangle) -> Result<Block> {
    if theta_from.shared_vertices(theta_to) != 2 {
        return Err(Error::NotAdjacent(geodesic_distance(theta_from, theta_to)?));
    }
    Block::new(
        "flip",
        vec![
            BoundaryTorus {
                label: "bottom".into(),
                theta: *theta_from,
            },
            BoundaryTorus {
                label: "top".into(),
                theta: *theta_to,
            },
        ],
        1,
    )
}

/// The figure-eight knot exterior with theta-curve class `△^(i)` in the
/// canonical meridian/longitude frame. Spines are known for `i` in `0..=3`.
pub fn knot_exterior_block(i: i64) -> Result<Block> {
    if !(0..=3).contains(&i) {
        return Err(Error::NoSpineConstant(i));
    }
    Block::new(
        format!("figure-eight exterior {i}"),
        vec![BoundaryTorus {
            label: "boundary".into(),
            theta: base_triangle(i),
        }],
        KNOT_EXTERIOR_VERTICES,
    )
}

/// Glue `b1` along torus `t1_label` to `b2` along torus `t2_label`.
///
/// The remaining boundary tori keep their labels; a label of `b2` that
/// clashes with one of `b1` is prefixed with `b2`'s name.
pub fn assemble(b1: &Block, t1_label: &str, b2: &Block, t2_label: &str) -> Result<AssemblyResult> {
    if std::ptr::eq(b1, b2) {
        return Err(Error::SelfGluing);
    }
    let theta1 = b1.boundary(t1_label)?.theta;
    let theta2 = b2.boundary(t2_label)?.theta;
    let flips = geodesic_distance(&theta1, &theta2)?;

    let mut boundaries: Vec<BoundaryTorus> = b1.boundaries.iter().filter(|b| b.label != t1_label).cloned().collect();
    for b in b2.boundaries.iter().filter(|b| b.label != t2_label) {
        let mut b = b.clone();
        if boundaries.iter().any(|existing| existing.label == b.label) {
            b.label = format!("{}.{}", b2.name, b.label);
        }
        boundaries.push(b);
    }

    let cost_breakdown = vec![
        CostItem {
            step: format!("{} interior", b1.name),
            vertices: b1.interior_vertices,
        },
        CostItem {
            step: format!("{} interior", b2.name),
            vertices: b2.interior_vertices,
        },
        CostItem {
            step: format!("flips from {theta1} to {theta2}"),
            vertices: flips,
        },
    ];
    let total = cost_breakdown.iter().map(|c| c.vertices).sum();
    let block = Block::new(format!("{} + {}", b1.name, b2.name), boundaries, total)?;
    Ok(AssemblyResult { block, cost_breakdown })
}
