//! Breadth-first search over triangle adjacency.
//!
//! Slow and obviously correct: it knows nothing about the circular order
//! and only uses [`neighbor`]. Used to validate the separation walk.

use std::collections::{HashMap, HashSet};

use rand::Rng;

use crate::error::{Error, Result};

use super::{neighbor, FareyTriangle};

/// Default search radius; the frontier at radius `r` holds `3·2^(r-1)`
/// triangles, about 50k at this cap.
pub const DEFAULT_RADIUS_CAP: u32 = 15;

fn neighbors(t: &FareyTriangle) -> Result<[FareyTriangle; 3]> {
    let [x, y, z] = t.vertices();
    Ok([neighbor(t, x)?, neighbor(t, y)?, neighbor(t, z)?])
}

/// Flip distance by breadth-first search, giving up beyond `radius_cap`.
pub fn bfs_distance(t1: &FareyTriangle, t2: &FareyTriangle, radius_cap: u32) -> Result<u32> {
    let mut seen = HashSet::from([*t1]);
    let mut frontier = vec![*t1];
    for depth in 0..=radius_cap {
        if frontier.contains(t2) {
            return Ok(depth);
        }
        if depth == radius_cap {
            break;
        }
        let mut next = Vec::with_capacity(frontier.len() * 2);
        for t in &frontier {
            for n in neighbors(t)? {
                if seen.insert(n) {
                    next.push(n);
                }
            }
        }
        frontier = next;
    }
    Err(Error::CapExceeded { cap: radius_cap })
}

/// Every triangle within `radius` flips of `center`, with its BFS depth.
pub fn ball(center: &FareyTriangle, radius: u32) -> Result<Vec<(FareyTriangle, u32)>> {
    let mut depth = HashMap::from([(*center, 0u32)]);
    let mut order = vec![(*center, 0)];
    let mut frontier = vec![*center];
    for d in 1..=radius {
        let mut next = Vec::new();
        for t in &frontier {
            for n in neighbors(t)? {
                if let std::collections::hash_map::Entry::Vacant(e) = depth.entry(n) {
                    e.insert(d);
                    order.push((n, d));
                    next.push(n);
                }
            }
        }
        frontier = next;
    }
    Ok(order)
}

/// A random non-backtracking walk of `len` flips from `start`; since the
/// dual graph is a tree the endpoint is exactly `len` flips away.
pub fn random_walk<R: Rng + ?Sized>(start: &FareyTriangle, len: u32, rng: &mut R) -> Result<FareyTriangle> {
    let mut current = *start;
    let mut previous: Option<FareyTriangle> = None;
    for _ in 0..len {
        let choices: Vec<FareyTriangle> = neighbors(&current)?
            .into_iter()
            .filter(|n| Some(*n) != previous)
            .collect();
        let next = choices[rng.gen_range(0..choices.len())];
        previous = Some(current);
        current = next;
    }
    Ok(current)
}
