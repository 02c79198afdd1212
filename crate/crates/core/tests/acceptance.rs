//! Acceptance criteria, one line of output per criterion.
//!
//! Runs as a plain binary (`harness = false`) so the PASS/FAIL lines are
//! always printed; exits non-zero if any criterion fails.

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use farey_surgery::farey::{ball, random_walk};
use farey_surgery::rationals::{coefficients_with_quotient_sum_at_most, evaluate_quotients};
use farey_surgery::surgery::CLAIMED_HYPERBOLIC_COUNT;
use farey_surgery::verify::{random_pair_sweep, DEFAULT_SEED};
use farey_surgery::{
    base_triangle, classify, closest_triangle_with_vertex, distance_identities, enumerate_omega_le, expand_cf,
    flip_path, geodesic_distance, neighbor, normalize, omega, pipeline, s_sum, Hyperbolicity, Slope,
    SurgeryCoefficient,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn hyperbolic_with_sum_at_most(max_sum: u64) -> Vec<SurgeryCoefficient> {
    let mut v: Vec<_> = coefficients_with_quotient_sum_at_most(max_sum)
        .into_iter()
        .filter(|x| classify(*x) == Hyperbolicity::Hyperbolic)
        .collect();
    v.sort_by(|a, b| a.cmp_value(b));
    v
}

/// Criterion 1: ω = 7 at the five exceptional slopes.
fn exceptional_values() -> Outcome {
    for p in 0..=4 {
        let x = normalize(p, 1).unwrap();
        ensure(classify(x) == Hyperbolicity::Exceptional, || {
            format!("{x} not exceptional")
        })?;
        ensure(omega(x) == 7, || format!("ω({x}) = {}", omega(x)))?;
    }
    Ok("ω = 7 at 0, 1, 2, 3, 4".into())
}

/// Criterion 2: d(△_m, △^(0)) = S − 1 for every slope with 1 <= S <= 12 off △^(0).
fn farey_distance_law() -> Outcome {
    let base = base_triangle(0);
    let mut count = 0;
    for x in coefficients_with_quotient_sum_at_most(12) {
        let s = s_sum(x);
        let v = Slope::from(x);
        if s == 0 || base.contains(v) {
            continue;
        }
        let m = closest_triangle_with_vertex(v, &base).map_err(|e| e.to_string())?;
        let d = geodesic_distance(&m, &base).map_err(|e| e.to_string())?;
        ensure(m.contains(v) && d == s - 1, || {
            format!("{x}: d(△_m, △^(0)) = {d}, S = {s}")
        })?;
        // the two other triangles at v next to △_m are farther away
        for u in m.vertices().into_iter().filter(|u| *u != v) {
            let other = neighbor(&m, u).map_err(|e| e.to_string())?;
            let d_other = geodesic_distance(&other, &base).map_err(|e| e.to_string())?;
            ensure(d_other == d + 1, || format!("{x}: fan neighbour {other} at {d_other}"))?;
        }
        count += 1;
    }
    ensure(count > 2000, || format!("only {count} slopes"))?;
    Ok(format!("{count} slopes"))
}

/// Criterion 3: Walk distance equals BFS distance on the radius-12 ball and on
/// ten thousand random pairs within radius 10.
fn oracle_equivalence() -> Outcome {
    let base = base_triangle(0);
    let triangles = ball(&base, 12).map_err(|e| e.to_string())?;
    for (t, depth) in &triangles {
        let d = geodesic_distance(&base, t).map_err(|e| e.to_string())?;
        ensure(d == *depth as u64, || format!("d(△^(0), {t}) = {d}, bfs {depth}"))?;
    }
    let pairs = random_pair_sweep(10_000, 10, DEFAULT_SEED).map_err(|e| e.to_string())?;
    ensure(pairs.passed(), || pairs.failures.join("; "))?;
    Ok(format!(
        "{} ball triangles, {} pair checks",
        triangles.len(),
        pairs.checks
    ))
}

/// Criterion 4: Assembled vertex count minus the integer correction equals ω.
fn theorem_agreement() -> Outcome {
    let slopes = hyperbolic_with_sum_at_most(12);
    for &x in &slopes {
        let r = pipeline(x).map_err(|e| e.to_string())?;
        let net = r.pipeline_vertices.unwrap() - r.integer_correction.unwrap();
        ensure(net == omega(x), || format!("{x}: pipeline {net}, ω {}", omega(x)))?;
    }
    Ok(format!("{} hyperbolic slopes", slopes.len()))
}

/// Criterion 5: d(△_V, △^(0)) = S − 2 and d(△_V, △^(z)) = d(△_V, △^(0)) − z.
fn identity_sweep() -> Outcome {
    let slopes = hyperbolic_with_sum_at_most(12);
    for &x in &slopes {
        let d = distance_identities(x).map_err(|e| e.to_string())?;
        let s = s_sum(x);
        let z = x.integer_part().min(3);
        ensure(d.d_v_0 + 2 == s, || {
            format!("{x}: d(△_V, △^(0)) = {}, S = {s}", d.d_v_0)
        })?;
        ensure(d.d_v_z + z == d.d_v_0, || {
            format!("{x}: d(△_V, △^(z)) = {}, z = {z}", d.d_v_z)
        })?;
    }
    Ok(format!("{} hyperbolic slopes", slopes.len()))
}

/// Criterion 6: Enumeration of ω <= 12: complete, consistent, deterministic.
fn enumeration_audit() -> Outcome {
    let n = 12;
    let e = enumerate_omega_le(n).map_err(|e| e.to_string())?;
    let again = enumerate_omega_le(n).map_err(|e| e.to_string())?;
    ensure(e == again, || "enumeration is not deterministic".into())?;
    for r in &e.reports {
        ensure(r.omega <= n && r.omega == omega(r.slope), || {
            format!("{} has ω = {}", r.slope, r.omega)
        })?;
    }
    ensure(
        e.reports
            .windows(2)
            .all(|w| (w[0].omega, w[0].slope.p() * w[1].slope.q()) < (w[1].omega, w[1].slope.p() * w[0].slope.q())),
        || "not sorted by (ω, p/q)".into(),
    )?;
    let audit = &e.audit;
    ensure(audit.integer_frontier.1 > n, || {
        format!("integer frontier {:?}", audit.integer_frontier)
    })?;
    ensure(audit.integer_part_frontier.1 > n, || {
        format!("integer part frontier {:?}", audit.integer_part_frontier)
    })?;
    ensure(audit.min_pruned_omega.is_none_or(|w| w > n), || {
        format!("pruned ω {:?}", audit.min_pruned_omega)
    })?;

    // independent scan well past the cut: q <= 64 (the cut needs only
    // q <= 2^(n-8) = 16), integer part <= n
    let mut scanned = HashSet::new();
    for q in 1..=64u64 {
        for p in 0..=n * q + q {
            let x = normalize(p as i64, q as i64).unwrap();
            if x.q() == q && omega(x) <= n {
                scanned.insert((x.p(), x.q()));
            }
        }
    }
    let listed: HashSet<(u64, u64)> = e.reports.iter().map(|r| (r.slope.p(), r.slope.q())).collect();
    ensure(scanned == listed, || {
        format!(
            "scan and enumeration differ: {:?} / {:?}",
            scanned.difference(&listed).collect::<Vec<_>>(),
            listed.difference(&scanned).collect::<Vec<_>>()
        )
    })?;

    let agreement = if e.hyperbolic_count == CLAIMED_HYPERBOLIC_COUNT {
        "agrees with"
    } else {
        "differs from"
    };
    Ok(format!(
        "{} slopes, hyperbolic count = {} ({agreement} the claimed {}); {} pruned prefixes, min pruned ω = {:?}; \
         frontiers {:?} / {:?}",
        e.reports.len(),
        e.hyperbolic_count,
        CLAIMED_HYPERBOLIC_COUNT,
        audit.pruned_prefixes,
        audit.min_pruned_omega,
        audit.integer_frontier,
        audit.integer_part_frontier,
    ))
}

/// Criterion 7: Flip paths: length = distance, consecutive adjacent, all distinct.
fn flip_path_validity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED ^ 7);
    let base = base_triangle(0);
    for _ in 0..1000 {
        let t1 = random_walk(&base, rng.gen_range(0..=20), &mut rng).map_err(|e| e.to_string())?;
        let t2 = random_walk(&base, rng.gen_range(0..=20), &mut rng).map_err(|e| e.to_string())?;
        let path = flip_path(&t1, &t2).map_err(|e| e.to_string())?;
        let d = geodesic_distance(&t1, &t2).map_err(|e| e.to_string())?;
        let tri = path.triangles();
        ensure(tri.first() == Some(&t1) && tri.last() == Some(&t2), || {
            format!("{t1} -> {t2}: wrong ends")
        })?;
        ensure(path.len() as u64 == d, || {
            format!("{t1} -> {t2}: {} flips, distance {d}", path.len())
        })?;
        ensure(tri.windows(2).all(|w| w[0].shared_vertices(&w[1]) == 2), || {
            format!("{t1} -> {t2}: non-adjacent step")
        })?;
        ensure(tri.iter().collect::<HashSet<_>>().len() == tri.len(), || {
            format!("{t1} -> {t2}: repeated triangle")
        })?;
    }
    Ok("1000 random pairs".into())
}

/// Criterion 8: Continued fractions: round trip, convention independence, and
/// the recursion S(p, q) = [p/q] + S(rem(p, q), q).
fn continued_fraction_properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED ^ 8);
    let mut count = 0;
    while count < 10_000 {
        let q: i64 = rng.gen_range(1..=1_000_000);
        let p: i64 = rng.gen_range(0..=1_000_000_000);
        let x = normalize(p, q).unwrap();
        if x.q() != q as u64 {
            continue;
        }
        let cf = expand_cf(x);
        ensure(cf.evaluate() == Some((x.p(), x.q())), || {
            format!("{x}: {cf} does not round-trip")
        })?;
        if let Some(alt) = cf.alternate_form() {
            ensure(evaluate_quotients(&alt) == Some((x.p(), x.q())), || {
                format!("{x}: {alt:?}")
            })?;
            ensure(alt.iter().sum::<u64>() == cf.sum(), || format!("{x}: sums differ"))?;
        }
        let rem = normalize((x.p() % x.q()) as i64, x.q() as i64).unwrap();
        ensure(s_sum(x) == x.integer_part() + s_sum(rem), || {
            format!("{x}: recursion fails")
        })?;
        count += 1;
    }
    Ok(format!("{count} coprime pairs"))
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let criteria = [
        Criterion {
            id: 1,
            name: "exceptional values",
            limit: Some(Duration::from_secs(1)),
            run: exceptional_values,
        },
        Criterion {
            id: 2,
            name: "Farey distance law",
            limit: Some(Duration::from_secs(10)),
            run: farey_distance_law,
        },
        Criterion {
            id: 3,
            name: "oracle equivalence",
            limit: Some(Duration::from_secs(60)),
            run: oracle_equivalence,
        },
        Criterion {
            id: 4,
            name: "theorem-shaped agreement",
            limit: Some(Duration::from_secs(10)),
            run: theorem_agreement,
        },
        Criterion {
            id: 5,
            name: "distance identities",
            limit: None,
            run: identity_sweep,
        },
        Criterion {
            id: 6,
            name: "enumeration audit",
            limit: Some(Duration::from_secs(5)),
            run: enumeration_audit,
        },
        Criterion {
            id: 7,
            name: "flip-path validity",
            limit: None,
            run: flip_path_validity,
        },
        Criterion {
            id: 8,
            name: "continued-fraction properties",
            limit: Some(Duration::from_secs(5)),
            run: continued_fraction_properties,
        },
    ];

    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = match (outcome, c.limit) {
            (Ok(_), Some(limit)) if elapsed > limit => Err(format!("took {elapsed:.2?}, limit {limit:?}")),
            (other, _) => other,
        };
        match outcome {
            Ok(detail) => println!("[PASS] AC{} {}: {detail} ({elapsed:.2?})", c.id, c.name),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] AC{} {}: {detail} ({elapsed:.2?})", c.id, c.name);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
