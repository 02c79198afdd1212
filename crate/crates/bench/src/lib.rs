//! Shared inputs for the benchmarks.

use farey_surgery::{base_triangle, FareyTriangle, SurgeryCoefficient};

/// Triangles whose distance from `△^(0)` is dominated by one long fan.
pub fn fan_targets() -> Vec<(u64, FareyTriangle)> {
    [10i64, 1_000, 1_000_000, 1_000_000_000]
        .into_iter()
        .map(|k| (k as u64, base_triangle(k)))
        .collect()
}

/// Slopes whose continued fractions are all ones but the last quotient:
/// many short fans.
pub fn fibonacci_slopes(count: usize) -> Vec<SurgeryCoefficient> {
    let (mut a, mut b) = (1i64, 2i64);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        out.push(SurgeryCoefficient::new(a, b).expect("consecutive Fibonacci numbers are coprime"));
        (a, b) = (b, a + b);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_well_formed() {
        assert_eq!(fan_targets().len(), 4);
        let slopes = fibonacci_slopes(40);
        assert_eq!(slopes[2].to_string(), "3/5");
        assert!(slopes.iter().all(|x| x.q() > x.p()));
    }
}
