//! Complexity bounds for Dehn surgeries on the figure-eight knot.
//!
//! [`omega`] evaluates the closed-form bound. [`pipeline`] rebuilds the same
//! number by assembling the knot exterior block `△^(z)` with the solid-torus
//! block for meridian `p/q` and paying one vertex per flip between their
//! theta-curves. The two routes share no arithmetic beyond `S(p, q)`.

use std::cmp::Ordering;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::assembly::{assemble, knot_exterior_block, solid_torus_block, solid_torus_triangles, AssemblyResult};
use crate::error::{Error, Result};
use crate::farey::{base_triangle, geodesic_distance, FareyTriangle, Slope};
use crate::rationals::{evaluate_quotients, s_sum, SurgeryCoefficient};

/// Number of hyperbolic surgeries with `ω <= 12` claimed by the census
/// comparison. Reported alongside enumerations, never asserted.
pub const CLAIMED_HYPERBOLIC_COUNT: usize = 46;

/// `ω` bound up to which the bound is known to equal the complexity.
pub const SHARPNESS_LIMIT: u64 = 12;

/// Complexity of the five exceptional (non-hyperbolic) surgeries.
pub const EXCEPTIONAL_COMPLEXITY: u64 = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Hyperbolicity {
    Hyperbolic,
    Exceptional,
}

/// Surgery is non-hyperbolic exactly at `0, 1, 2, 3, 4` (and `∞`, which
/// is not a surgery coefficient here).
pub fn classify(x: SurgeryCoefficient) -> Hyperbolicity {
    if x.is_integer() && x.p() <= 4 {
        Hyperbolicity::Exceptional
    } else {
        Hyperbolicity::Hyperbolic
    }
}

/// `a(p/q)`: 6 at `4`, 7 at other integers, 8 otherwise.
pub fn a_value(x: SurgeryCoefficient) -> u64 {
    match (x.is_integer(), x.p()) {
        (true, 4) => 6,
        (true, _) => 7,
        (false, _) => 8,
    }
}

/// `ω(p/q) = a(p/q) + max([p/q] − 3, 0) + S(rem(p, q), q)`.
pub fn omega(x: SurgeryCoefficient) -> u64 {
    a_value(x) + x.integer_part().saturating_sub(3) + s_sum(x.fractional_part())
}

/// `z = min([p/q], 3)`: which knot exterior block to glue in.
pub fn exterior_index(x: SurgeryCoefficient) -> u64 {
    x.integer_part().min(3)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceIdentities {
    /// `d(△_m, △^(0))`
    pub d_m_0: u64,
    /// `d(△_V, △^(0))`
    pub d_v_0: u64,
    /// `d(△_V, △^(z))`
    pub d_v_z: u64,
}

/// Everything computed for one surgery coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmegaReport {
    pub slope: SurgeryCoefficient,
    pub a_value: u64,
    pub omega: u64,
    pub hyperbolicity: Hyperbolicity,
    pub z: u64,
    pub triangle_m: Option<FareyTriangle>,
    pub triangle_v: Option<FareyTriangle>,
    pub d_m_0: Option<u64>,
    pub d_v_0: Option<u64>,
    pub d_v_z: Option<u64>,
    pub pipeline_vertices: Option<u64>,
    pub integer_correction: Option<u64>,
    pub complexity_claim: Option<u64>,
    pub assembly: Option<AssemblyResult>,
}

impl OmegaReport {
    pub const CSV_HEADER: &'static str = "p,q,omega,hyperbolic,z,d_m_0,d_v_0,d_v_z,pipeline_vertices,complexity_claim";

    pub fn is_hyperbolic(&self) -> bool {
        self.hyperbolicity == Hyperbolicity::Hyperbolic
    }

    /// One line matching [`OmegaReport::CSV_HEADER`]; absent values are
    /// empty fields.
    pub fn csv_row(&self) -> String {
        fn opt(v: Option<u64>) -> String {
            v.map(|v| v.to_string()).unwrap_or_default()
        }
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.slope.p(),
            self.slope.q(),
            self.omega,
            self.is_hyperbolic(),
            self.z,
            opt(self.d_m_0),
            opt(self.d_v_0),
            opt(self.d_v_z),
            opt(self.pipeline_vertices),
            opt(self.complexity_claim),
        )
    }
}

fn claim(omega: u64) -> Option<u64> {
    (omega <= SHARPNESS_LIMIT).then_some(omega)
}

fn violation(x: SurgeryCoefficient, detail: String) -> Error {
    Error::IdentityViolation {
        slope: x.to_string(),
        detail,
    }
}

/// Raw distances for a hyperbolic slope, with no checks applied.
pub(crate) struct PipelineTrace {
    pub triangle_m: FareyTriangle,
    pub triangle_v: FareyTriangle,
    pub distances: DistanceIdentities,
    pub assembly: AssemblyResult,
}

pub(crate) fn trace(x: SurgeryCoefficient) -> Result<PipelineTrace> {
    if classify(x) == Hyperbolicity::Exceptional {
        return Err(Error::NotHyperbolic(x.to_string()));
    }
    let base = base_triangle(0);
    let z = exterior_index(x);
    let meridian = Slope::from(x);
    let (triangle_m, triangle_v) = solid_torus_triangles(meridian, &base)?;
    let distances = DistanceIdentities {
        d_m_0: geodesic_distance(&triangle_m, &base)?,
        d_v_0: geodesic_distance(&triangle_v, &base)?,
        d_v_z: geodesic_distance(&triangle_v, &base_triangle(z as i64))?,
    };
    let exterior = knot_exterior_block(z as i64)?;
    let solid = solid_torus_block(meridian, &base)?;
    let assembly = assemble(&exterior, "boundary", &solid, "boundary")?;
    Ok(PipelineTrace {
        triangle_m,
        triangle_v,
        distances,
        assembly,
    })
}

/// The three flip distances of the construction, checked against
/// `d(△_m, △^(0)) = S − 1`, `d(△_V, △^(0)) = S − 2` and
/// `d(△_V, △^(z)) = d(△_V, △^(0)) − z`. Any failure is a hard error.
pub fn distance_identities(x: SurgeryCoefficient) -> Result<DistanceIdentities> {
    let t = trace(x)?;
    check_identities(x, &t.distances)?;
    Ok(t.distances)
}

fn check_identities(x: SurgeryCoefficient, d: &DistanceIdentities) -> Result<()> {
    let s = s_sum(x) as i128;
    let z = exterior_index(x);
    let dz0 = geodesic_distance(&base_triangle(z as i64), &base_triangle(0))?;
    if dz0 != z {
        return Err(violation(x, format!("d(△^(z), △^(0)) = {dz0}, expected z = {z}")));
    }
    if d.d_m_0 as i128 != s - 1 {
        return Err(violation(
            x,
            format!("d(△_m, △^(0)) = {}, expected S − 1 = {}", d.d_m_0, s - 1),
        ));
    }
    if d.d_v_0 as i128 != s - 2 {
        return Err(violation(
            x,
            format!("d(△_V, △^(0)) = {}, expected S − 2 = {}", d.d_v_0, s - 2),
        ));
    }
    if d.d_v_z as i128 != d.d_v_0 as i128 - z as i128 {
        return Err(violation(
            x,
            format!("d(△_V, △^(z)) = {}, expected {} − {z}", d.d_v_z, d.d_v_0),
        ));
    }
    Ok(())
}

/// Build the spine count for a hyperbolic slope by assembly and check it
/// against the closed form.
pub fn pipeline(x: SurgeryCoefficient) -> Result<OmegaReport> {
    let t = trace(x)?;
    check_identities(x, &t.distances)?;
    let omega = omega(x);
    let pipeline_vertices = t.assembly.block.interior_vertices();
    // integer slopes admit one further simplification of the spine
    let integer_correction = u64::from(x.is_integer());
    if pipeline_vertices.checked_sub(integer_correction) != Some(omega) {
        return Err(violation(
            x,
            format!("assembled {pipeline_vertices} − {integer_correction} vertices, formula gives {omega}"),
        ));
    }
    Ok(OmegaReport {
        slope: x,
        a_value: a_value(x),
        omega,
        hyperbolicity: Hyperbolicity::Hyperbolic,
        z: exterior_index(x),
        triangle_m: Some(t.triangle_m),
        triangle_v: Some(t.triangle_v),
        d_m_0: Some(t.distances.d_m_0),
        d_v_0: Some(t.distances.d_v_0),
        d_v_z: Some(t.distances.d_v_z),
        pipeline_vertices: Some(pipeline_vertices),
        integer_correction: Some(integer_correction),
        complexity_claim: claim(omega),
        assembly: Some(t.assembly),
    })
}

/// Report for any slope: the pipeline for hyperbolic slopes, the closed
/// form alone for the exceptional ones.
pub fn report(x: SurgeryCoefficient) -> Result<OmegaReport> {
    match classify(x) {
        Hyperbolicity::Hyperbolic => pipeline(x),
        Hyperbolicity::Exceptional => {
            let omega = omega(x);
            Ok(OmegaReport {
                slope: x,
                a_value: a_value(x),
                omega,
                hyperbolicity: Hyperbolicity::Exceptional,
                z: exterior_index(x),
                triangle_m: None,
                triangle_v: None,
                d_m_0: None,
                d_v_0: None,
                d_v_z: None,
                pipeline_vertices: None,
                integer_correction: None,
                complexity_claim: Some(EXCEPTIONAL_COMPLEXITY),
                assembly: None,
            })
        }
    }
}

/// Evidence that an enumeration missed nothing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchAudit {
    pub max_omega: u64,
    /// First integer not scanned and its `ω`; `ω(p) = p + 4` beyond 4.
    pub integer_frontier: (u64, u64),
    /// Integer part at which non-integers stop, with `ω` of
    /// `a0 + 1/2`, the minimum over that integer part.
    pub integer_part_frontier: (u64, u64),
    /// Continued-fraction prefixes cut for exceeding the quotient budget.
    pub pruned_prefixes: u64,
    /// Smallest `ω` over the rationals named by the cut prefixes.
    pub min_pruned_omega: Option<u64>,
    pub candidates: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Enumeration {
    pub reports: Vec<OmegaReport>,
    pub hyperbolic_count: usize,
    pub claimed_hyperbolic_count: usize,
    pub audit: SearchAudit,
}

fn sort_key_cmp(a: &OmegaReport, b: &OmegaReport) -> Ordering {
    a.omega.cmp(&b.omega).then_with(|| a.slope.cmp_value(&b.slope))
}

fn unproven(msg: String) -> Error {
    Error::UnprovenBound(msg)
}

/// Candidates with `ω <= n`, generated from continued fractions.
///
/// Integers are scanned up to `max(4, n − 4)`. A non-integer `a0 + r/q`
/// has `ω = 8 + max(a0 − 3, 0) + S(r, q)` with `S(r, q) >= 2`, so `a0` runs
/// up to `n − 7`; its fractional part is any canonical tail `[0; a1, …]`
/// with quotient sum within the remaining budget. Each tail prefix that
/// overshoots the budget is evaluated and its `ω` must exceed `n`.
fn candidates(n: u64) -> Result<(Vec<SurgeryCoefficient>, SearchAudit)> {
    let mut out = Vec::new();
    let int_max = 4.max(n - 4);
    for p in 0..=int_max {
        out.push(SurgeryCoefficient::new(p as i64, 1)?);
    }
    let next = SurgeryCoefficient::new(int_max as i64 + 1, 1)?;
    let integer_frontier = (next.p(), omega(next));
    if integer_frontier.1 <= n {
        return Err(unproven(format!("integer {} has ω = {}", next, integer_frontier.1)));
    }

    let mut pruned = 0u64;
    let mut min_pruned: Option<u64> = None;
    let mut a0 = 0u64;
    while 8 + a0.saturating_sub(3) + 2 <= n {
        let budget = n - 8 - a0.saturating_sub(3);
        let mut stack: Vec<Vec<u64>> = (1..=budget + 1).map(|a| vec![a]).collect();
        while let Some(tail) = stack.pop() {
            let mut quotients = vec![a0];
            quotients.extend_from_slice(&tail);
            let (p, q) = evaluate_quotients(&quotients).ok_or(Error::Overflow("candidate"))?;
            let x = SurgeryCoefficient::new(p as i64, q as i64)?;
            let sum: u64 = tail.iter().sum();
            if sum > budget {
                // every extension of this prefix has an even larger sum
                pruned += 1;
                let w = omega(x);
                if w <= n {
                    return Err(unproven(format!("pruned prefix {quotients:?} names {x} with ω = {w}")));
                }
                min_pruned = Some(min_pruned.map_or(w, |m| m.min(w)));
                continue;
            }
            if *tail.last().expect("non-empty tail") >= 2 {
                out.push(x);
            }
            for a in 1..=budget - sum + 1 {
                let mut longer = tail.clone();
                longer.push(a);
                stack.push(longer);
            }
        }
        a0 += 1;
    }

    // a0 + 1/2 has the least ω among non-integers with integer part a0,
    // and ω only grows with a0 from here on
    let half = SurgeryCoefficient::new(2 * a0 as i64 + 1, 2)?;
    let integer_part_frontier = (a0, omega(half));
    if integer_part_frontier.1 <= n {
        return Err(unproven(format!(
            "integer part {a0}: ω({half}) = {}",
            integer_part_frontier.1
        )));
    }

    let audit = SearchAudit {
        max_omega: n,
        integer_frontier,
        integer_part_frontier,
        pruned_prefixes: pruned,
        min_pruned_omega: min_pruned,
        candidates: out.len() as u64,
    };
    Ok((out, audit))
}

/// All surgery coefficients with `ω <= n`, sorted by `(ω, p/q)`, each
/// with its full report.
pub fn enumerate_omega_le(n: u64) -> Result<Enumeration> {
    if n < 7 {
        return Err(Error::OmegaTooSmall(n));
    }
    let (candidates, audit) = candidates(n)?;
    let mut reports: Vec<OmegaReport> = candidates
        .into_par_iter()
        .filter(|x| omega(*x) <= n)
        .map(report)
        .collect::<Result<_>>()?;
    reports.sort_by(sort_key_cmp);
    let hyperbolic_count = reports.iter().filter(|r| r.is_hyperbolic()).count();
    Ok(Enumeration {
        reports,
        hyperbolic_count,
        claimed_hyperbolic_count: CLAIMED_HYPERBOLIC_COUNT,
        audit,
    })
}
