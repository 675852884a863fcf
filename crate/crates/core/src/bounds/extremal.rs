//! Growth-rate facts for the maximum number of unit distances among n
//! points: the crossing-argument constant, the resulting n^(4/3) upper
//! coefficient, and the density recurrence check for the small-n table.

use crate::geometry::Scalar;

/// Maximizes h(t) = cbrt(t + (1-t)/4) + cbrt((1-t)/4) over [0, 1] by
/// golden-section search; the maximum equals cbrt((2/3)(2 + sqrt 3)).
pub fn crossing_constant() -> Scalar {
    let h = |t: f64| -> f64 {
        let q = (1.0 - t) / 4.0;
        (t + q).cbrt() + q.cbrt()
    };
    let phi = (5f64.sqrt() - 1.0) / 2.0;
    let (mut a, mut b) = (0.0f64, 1.0f64);
    while b - a > 1e-13 {
        let c = b - phi * (b - a);
        let d = a + phi * (b - a);
        if h(c) < h(d) {
            a = c;
        } else {
            b = d;
        }
    }
    Scalar::from_f64(h((a + b) / 2.0))
}

/// Closed form of the crossing constant: cbrt((2/3)(2 + sqrt 3)).
pub fn crossing_constant_closed_form() -> Scalar {
    (Scalar::from_i64(2) / Scalar::from_i64(3) * (Scalar::from_i64(2) + Scalar::from_i64(3).sqrt()))
        .cbrt()
}

/// Coefficient of the n^(4/3) upper bound on the unit-distance count:
/// cbrt((2/3)(2 + sqrt 3) * 29) / 2 = 2.082...
pub fn u_upper_coefficient() -> Scalar {
    (crossing_constant_closed_form().square() * crossing_constant_closed_form()
        * Scalar::from_i64(29))
    .cbrt()
        / Scalar::from_i64(2)
}

/// The n^(4/3) upper bound itself, evaluated exactly as coeff * n * cbrt(n).
pub fn u_upper(n: u64) -> Scalar {
    let nn = Scalar::from_i64(n as i64);
    u_upper_coefficient() * &nn * &nn.cbrt()
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RecurrenceReport {
    /// Entries n where u(n) * (n - 2) > n * u(n-1) fails the recurrence.
    pub violations: Vec<usize>,
    /// Entries n where the recurrence holds with equality.
    pub tight: Vec<usize>,
}

/// Checks the density recurrence u(n) <= n/(n-2) * u(n-1) over a table of
/// (n, u(n)) rows, in exact integer arithmetic.
pub fn density_recurrence_check(table: &[(usize, u64)]) -> RecurrenceReport {
    let mut report = RecurrenceReport::default();
    for w in table.windows(2) {
        let (n_prev, u_prev) = w[0];
        let (n, u) = w[1];
        if n != n_prev + 1 || n < 3 {
            continue;
        }
        let lhs = u as u128 * (n as u128 - 2);
        let rhs = n as u128 * u_prev as u128;
        if lhs > rhs {
            report.violations.push(n);
        } else if lhs == rhs {
            report.tight.push(n);
        }
    }
    report
}

/// The known maximum unit-distance counts u(n) for n = 1..=16.
pub fn max_unit_distance_table() -> Vec<(usize, u64)> {
    [0u64, 1, 3, 5, 7, 9, 12, 14, 18, 20, 23, 27, 30, 33, 37, 41]
        .iter()
        .enumerate()
        .map(|(i, &u)| (i + 1, u))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crossing_constant_matches_closed_form() {
        let searched = crossing_constant().to_f64();
        let closed = crossing_constant_closed_form().to_f64();
        assert!((searched - closed).abs() < 1e-9, "{searched} vs {closed}");
        assert!((closed - 1.3550399396).abs() < 1e-9);
    }

    #[test]
    fn coefficient_value() {
        let c = u_upper_coefficient().to_f64();
        assert!((c - 2.0815560).abs() < 1e-6, "{c}");
    }

    #[test]
    fn upper_bound_dominates_table() {
        for (n, u) in max_unit_distance_table() {
            assert!(u_upper(n as u64).to_f64() >= u as f64, "n = {n}");
        }
    }

    #[test]
    fn recurrence_holds_and_is_tight_at_nine() {
        let report = density_recurrence_check(&max_unit_distance_table());
        assert!(report.violations.is_empty(), "{report:?}");
        assert!(report.tight.contains(&9));
    }

    #[test]
    fn recurrence_flags_violations() {
        let bad = vec![(3, 3), (4, 7)];
        let report = density_recurrence_check(&bad);
        assert_eq!(report.violations, vec![4]);
    }
}
