//! Geodesics in the dual tree, found without search.
//!
//! From any triangle that is not the goal, exactly one of its three edges
//! separates it from the goal: the one whose far arc on the boundary circle
//! holds a vertex of the goal. Stepping across that edge repeatedly traces
//! the unique tree path.
//!
//! Long geodesics spend most of their length turning around a single
//! vertex (one partial quotient per fan), so [`geodesic_distance`] counts a
//! whole fan at once with an exponential search over the fan index. The
//! one-step-at-a-time walk is kept for [`flip_path`] and [`step_distance`].

use crate::error::{Error, Result};

use super::proj::{strictly_beyond, Proj};
use super::{proj_neighbor, FareyTriangle, FlipPath, Slope};

trait Goal {
    fn reached(&self, tri: &[Proj; 3]) -> bool;

    /// The goal lies across the edge `{x, y}`, on the side away from `z`.
    fn beyond(&self, x: Proj, y: Proj, z: Proj) -> bool;
}

struct TriangleGoal([Proj; 3]);

impl Goal for TriangleGoal {
    fn reached(&self, tri: &[Proj; 3]) -> bool {
        let mut sorted = *tri;
        sorted.sort_unstable();
        sorted == self.0
    }

    fn beyond(&self, x: Proj, y: Proj, z: Proj) -> bool {
        self.0.iter().any(|&w| strictly_beyond(x, y, z, w))
    }
}

struct VertexGoal(Proj);

impl Goal for VertexGoal {
    fn reached(&self, tri: &[Proj; 3]) -> bool {
        tri.contains(&self.0)
    }

    fn beyond(&self, x: Proj, y: Proj, z: Proj) -> bool {
        strictly_beyond(x, y, z, self.0)
    }
}

/// Index of the vertex opposite the separating edge.
fn separating_vertex(tri: &[Proj; 3], goal: &impl Goal) -> usize {
    (0..3)
        .find(|&i| goal.beyond(tri[(i + 1) % 3], tri[(i + 2) % 3], tri[i]))
        .expect("a triangle other than the goal has a separating edge")
}

fn walk_steps(start: [Proj; 3], goal: &impl Goal, mut visit: impl FnMut(&[Proj; 3]) -> Result<()>) -> Result<u64> {
    let mut tri = start;
    let mut steps = 0;
    visit(&tri)?;
    while !goal.reached(&tri) {
        let i = separating_vertex(&tri, goal);
        tri[i] = proj_neighbor(&tri, i)?;
        steps += 1;
        visit(&tri)?;
    }
    Ok(steps)
}

/// The fan of triangles around `pivot` entered by crossing `{pivot, w}`
/// from `{pivot, w, z}`: the k-th triangle (k >= 1) is
/// `{pivot, w + (k-1)·step, w + k·step}`.
struct Fan {
    pivot: Proj,
    w: Proj,
    step: Proj,
}

impl Fan {
    fn new(pivot: Proj, w: Proj, z: Proj) -> Result<Fan> {
        let next = proj_neighbor(&[z, pivot, w], 0)?;
        let (da, db) = next.checked_sub(w)?;
        let step = if (da, db) == (pivot.a, pivot.b) || (da, db) == (-pivot.a, -pivot.b) {
            Proj { a: da, b: db }
        } else {
            // next is stored with the opposite sign of w + step
            let (sa, sb) = next.checked_add(w)?;
            Proj { a: -sa, b: -sb }
        };
        Ok(Fan { pivot, w, step })
    }

    /// `w + k·step` as a normalised point.
    fn spoke(&self, k: u128) -> Result<Proj> {
        let k = i128::try_from(k).map_err(|_| Error::Overflow("fan index"))?;
        let a = k
            .checked_mul(self.step.a)
            .and_then(|x| x.checked_add(self.w.a))
            .ok_or(Error::Overflow("fan spoke"))?;
        let b = k
            .checked_mul(self.step.b)
            .and_then(|x| x.checked_add(self.w.b))
            .ok_or(Error::Overflow("fan spoke"))?;
        Proj::from_vector(a, b)
    }

    fn triangle(&self, k: u128) -> Result<[Proj; 3]> {
        Ok([self.pivot, self.spoke(k - 1)?, self.spoke(k)?])
    }

    /// From the k-th triangle the walk continues around the pivot.
    fn continues(&self, k: u128, goal: &impl Goal) -> Result<bool> {
        Ok(goal.beyond(self.pivot, self.spoke(k)?, self.spoke(k - 1)?))
    }

    /// Largest `K` such that the walk keeps turning around the pivot for
    /// fan triangles `1..=K`. The predicate is monotone because the arcs
    /// beyond successive spokes are nested.
    fn extent(&self, goal: &impl Goal) -> Result<u128> {
        let mut lo = 0u128;
        let mut hi = 1u128;
        while self.continues(hi, goal)? {
            lo = hi;
            hi = hi.checked_mul(2).ok_or(Error::Overflow("fan length"))?;
        }
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if self.continues(mid, goal)? {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Ok(lo)
    }
}

/// Accelerated walk: returns the final triangle and the number of flips.
fn fast_walk(start: [Proj; 3], goal: &impl Goal) -> Result<([Proj; 3], u64)> {
    let mut tri = start;
    let mut steps: u128 = 0;
    while !goal.reached(&tri) {
        let i = separating_vertex(&tri, goal);
        let (x, y, z) = (tri[(i + 1) % 3], tri[(i + 2) % 3], tri[i]);
        let around_x = Fan::new(x, y, z)?;
        let around_y = Fan::new(y, x, z)?;
        let (kx, ky) = (around_x.extent(goal)?, around_y.extent(goal)?);
        // at most one of the two fans continues past its first triangle
        let (fan, extra) = if kx >= ky { (around_x, kx) } else { (around_y, ky) };
        tri = fan.triangle(1 + extra)?;
        steps += 1 + extra;
    }
    let steps = u64::try_from(steps).map_err(|_| Error::Overflow("distance"))?;
    Ok((tri, steps))
}

/// Flip distance between two theta-curve classes: the length of the
/// path joining them in the dual tree.
pub fn geodesic_distance(t1: &FareyTriangle, t2: &FareyTriangle) -> Result<u64> {
    let goal = TriangleGoal(t2.projs());
    fast_walk(t1.projs(), &goal).map(|(_, d)| d)
}

/// The same distance as [`geodesic_distance`], one flip at a time.
pub fn step_distance(t1: &FareyTriangle, t2: &FareyTriangle) -> Result<u64> {
    let goal = TriangleGoal(t2.projs());
    walk_steps(t1.projs(), &goal, |_| Ok(()))
}

/// The geodesic sequence of triangles from `t1` to `t2`, both included.
pub fn flip_path(t1: &FareyTriangle, t2: &FareyTriangle) -> Result<FlipPath> {
    let goal = TriangleGoal(t2.projs());
    let mut triangles = Vec::new();
    walk_steps(t1.projs(), &goal, |tri| {
        triangles.push(FareyTriangle::from_projs(*tri)?);
        Ok(())
    })?;
    Ok(FlipPath::from_triangles(triangles))
}

/// Among the triangles incident to `v`, the one nearest to `base`: where the
/// tree path from `base` first enters the star of `v`.
pub fn closest_triangle_with_vertex(v: Slope, base: &FareyTriangle) -> Result<FareyTriangle> {
    if base.contains(v) {
        return Err(Error::SlopeOnBase(v.to_string()));
    }
    let (tri, _) = fast_walk(base.projs(), &VertexGoal(v.proj()))?;
    FareyTriangle::from_projs(tri)
}

#[cfg(test)]
mod tests {
    use super::super::{base_triangle, bfs_distance, neighbor};
    use super::*;

    fn tri(text: &str) -> FareyTriangle {
        text.parse().unwrap()
    }

    fn s(text: &str) -> Slope {
        text.parse().unwrap()
    }

    #[test]
    fn distance_examples() {
        let t0 = base_triangle(0);
        assert_eq!(geodesic_distance(&base_triangle(1), &t0).unwrap(), 1);
        assert_eq!(geodesic_distance(&t0, &t0).unwrap(), 0);
        assert_eq!(geodesic_distance(&tri("4,5,inf"), &t0).unwrap(), 4);
        assert_eq!(geodesic_distance(&t0, &base_triangle(3)).unwrap(), 3);
        assert_eq!(geodesic_distance(&t0, &tri("0,1/2,1")).unwrap(), 1);
        assert_eq!(step_distance(&tri("4,5,inf"), &t0).unwrap(), 4);
    }

    #[test]
    fn long_fans_are_counted_exactly() {
        let t0 = base_triangle(0);
        let far = base_triangle(1_000_000_000);
        assert_eq!(geodesic_distance(&t0, &far).unwrap(), 1_000_000_000);
        assert_eq!(geodesic_distance(&far, &t0).unwrap(), 1_000_000_000);
        let left = base_triangle(-77);
        assert_eq!(geodesic_distance(&left, &far).unwrap(), 1_000_000_077);
        // 1/n sits n - 1 flips below {0, 1, inf} through the fan around 0
        let near_zero = tri("0,1/1000,1/999");
        assert_eq!(geodesic_distance(&t0, &near_zero).unwrap(), 999);
        assert_eq!(step_distance(&t0, &near_zero).unwrap(), 999);
    }

    #[test]
    fn flip_path_examples() {
        let t0 = base_triangle(0);
        let p = flip_path(&t0, &t0).unwrap();
        assert_eq!(p.triangles(), &[t0]);
        assert_eq!(p.len(), 0);
        let p = flip_path(&t0, &base_triangle(2)).unwrap();
        assert_eq!(p.triangles(), &[t0, base_triangle(1), base_triangle(2)]);
        assert!(p.is_valid());
    }

    #[test]
    fn closest_triangle_examples() {
        let t0 = base_triangle(0);
        let m = closest_triangle_with_vertex(s("5"), &t0).unwrap();
        assert_eq!(m, tri("4,5,inf"));
        assert_eq!(geodesic_distance(&m, &t0).unwrap(), 4);

        let m = closest_triangle_with_vertex(s("1/2"), &t0).unwrap();
        assert_eq!(m, tri("0,1/2,1"));
        assert_eq!(geodesic_distance(&m, &t0).unwrap(), 1);

        let m = closest_triangle_with_vertex(s("2/5"), &t0).unwrap();
        assert!(m.contains(s("2/5")));
        assert_eq!(geodesic_distance(&m, &t0).unwrap(), 3);
        assert_eq!(bfs_distance(&m, &t0, 3).unwrap(), 3);
        // no other triangle at vertex 2/5 is as close
        for v in m.vertices().into_iter().filter(|v| *v != s("2/5")) {
            let other = neighbor(&m, v).unwrap();
            assert!(geodesic_distance(&other, &t0).unwrap() > 3);
        }

        let m = closest_triangle_with_vertex(s("-3/2"), &t0).unwrap();
        assert!(m.contains(s("-3/2")));

        assert!(matches!(
            closest_triangle_with_vertex(s("1"), &t0),
            Err(Error::SlopeOnBase(_))
        ));
        assert!(matches!(
            closest_triangle_with_vertex(Slope::INFINITY, &t0),
            Err(Error::SlopeOnBase(_))
        ));
    }

    #[test]
    fn fans_around_infinity_and_negative_slopes() {
        let a = tri("-3,-5/2,-2");
        let b = tri("2,7/3,5/2");
        let d = geodesic_distance(&a, &b).unwrap();
        assert_eq!(d, step_distance(&a, &b).unwrap());
        assert_eq!(d, bfs_distance(&a, &b, 15).unwrap() as u64);
        assert_eq!(d, geodesic_distance(&b, &a).unwrap());
    }
}
