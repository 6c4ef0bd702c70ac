//! Exact coprime lattice-point counting in triangular regions with rational
//! slopes, with and without congruence restrictions.
//!
//! A plain region `T(M, k1, k2)` is bounded by the horizontal axis, the ray
//! `m = k1 n`, and the line `m = k2 n + M`; a cut region additionally clips
//! below the ray `m = k3 n` (`k3 > k1`). Rows are the closed integer
//! intervals `[ceil(k1 n), floor(k2 n + M)]` for `n = 1..=floor(M/(k1-k2))`,
//! intersected with `m <= floor(k3 n)` when the cut is present. All floors
//! and ceilings are exact integer divisions; slopes are `Rational64`.

use num_integer::gcd;
use num_rational::Rational64;

use crate::arith::{is_prime, ArithTables};
use crate::error::{capacity, domain, Result};
use crate::Method;

/// Candidate-point budget for brute scans.
const BRUTE_POINT_LIMIT: u64 = 100_000_000;

/// A triangular counting region; see the module docs for the geometry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TriangleRegion {
    pub m: i64,
    pub k1: Rational64,
    pub k2: Rational64,
    pub k3: Option<Rational64>,
}

impl TriangleRegion {
    pub fn new(m: i64, k1: Rational64, k2: Rational64) -> Result<Self> {
        Self::build(m, k1, k2, None)
    }

    pub fn with_cut(m: i64, k1: Rational64, k2: Rational64, k3: Rational64) -> Result<Self> {
        Self::build(m, k1, k2, Some(k3))
    }

    fn build(m: i64, k1: Rational64, k2: Rational64, k3: Option<Rational64>) -> Result<Self> {
        if m < 1 {
            return Err(domain("region intercept M must be a positive integer"));
        }
        if k1 <= Rational64::from_integer(0) {
            return Err(domain("slope k1 must be positive"));
        }
        if k1 <= k2 {
            return Err(domain("slope ordering k1 > k2 violated"));
        }
        if let Some(k3) = k3 {
            if k3 <= k1 {
                return Err(domain("cut slope k3 must exceed k1"));
            }
        }
        Ok(TriangleRegion { m, k1, k2, k3 })
    }

    /// Number of lattice rows: `floor(M / (k1 - k2))`.
    pub fn row_count(&self) -> i64 {
        let d = self.k1 - self.k2;
        floor_div(self.m as i128 * *d.denom() as i128, *d.numer() as i128) as i64
    }

    /// Area of the region: `M^2 / (2(k1-k2))`, minus the cut part when k3 is
    /// present, i.e. `(M^2/2) (1/(k1-k2) - 1/(k3-k2))`.
    pub fn area(&self) -> f64 {
        let m2 = (self.m as f64) * (self.m as f64);
        let k2 = self.k2;
        let inv = |k: Rational64| {
            let d = k - k2;
            *d.denom() as f64 / *d.numer() as f64
        };
        let mut area = m2 / 2.0 * inv(self.k1);
        if let Some(k3) = self.k3 {
            area -= m2 / 2.0 * inv(k3);
        }
        area
    }
}

/// Coprime pairs in a region, split by the congruence `m = n (mod 3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RegionCount {
    /// All coprime pairs in the region.
    pub total_coprime: u64,
    /// Coprime pairs with `m != n (mod 3)`.
    pub coprime_mod3_distinct: u64,
    /// Coprime pairs with `m = n (mod 3)`.
    pub coprime_mod3_equal: u64,
}

/// Exact floor of `a / b` for `b > 0`.
pub(crate) fn floor_div(a: i128, b: i128) -> i128 {
    debug_assert!(b > 0);
    a.div_euclid(b)
}

/// Exact ceiling of `a / b` for `b > 0`.
pub(crate) fn ceil_div(a: i128, b: i128) -> i128 {
    debug_assert!(b > 0);
    -(-a).div_euclid(b)
}

/// floor(k * n)
fn floor_slope(k: Rational64, n: i64) -> i64 {
    floor_div(*k.numer() as i128 * n as i128, *k.denom() as i128) as i64
}

/// ceil(k * n)
fn ceil_slope(k: Rational64, n: i64) -> i64 {
    ceil_div(*k.numer() as i128 * n as i128, *k.denom() as i128) as i64
}

/// floor(k * n + m)
fn floor_affine(k: Rational64, n: i64, m: i64) -> i64 {
    let q = *k.denom() as i128;
    floor_div(*k.numer() as i128 * n as i128 + m as i128 * q, q) as i64
}

/// Count integers in the closed interval `[lo, hi]` coprime to `n`,
/// including nonpositive values (`gcd(0, n) = n`, `gcd(-k, n) = gcd(k, n)`).
pub fn coprime_in_range(tables: &ArithTables, lo: i64, hi: i64, n: u64) -> Result<u64> {
    if lo > hi {
        return Ok(0);
    }
    let f = |x: u64| tables.coprime_count_up_to(x, n);
    let mut count = 0u64;
    // Positive part.
    let a = lo.max(1);
    if a <= hi {
        count += f(hi as u64)? - f(a as u64 - 1)?;
    }
    // Zero contributes exactly when n = 1.
    if lo <= 0 && 0 <= hi && n == 1 {
        count += 1;
    }
    // Negative part mirrors to [max(-hi,1), -lo].
    let b = hi.min(-1);
    if lo <= b {
        count += f((-lo) as u64)? - f((-b) as u64 - 1)?;
    }
    Ok(count)
}

/// Count integers `m` in `[lo, hi]` with `m = n (mod p)` and `gcd(m, n) = 1`,
/// for prime `p`, via the substitution `m = n + p t` (so `gcd(m, n) =
/// gcd(p t, n)`, which is 1 iff `p` does not divide `n` and `gcd(t, n) = 1`).
pub fn coprime_in_range_congruent(
    tables: &ArithTables,
    lo: i64,
    hi: i64,
    n: u64,
    p: u64,
) -> Result<u64> {
    if n.is_multiple_of(p) {
        return Ok(0);
    }
    let n_i = n as i64;
    let t_lo = ceil_div(lo as i128 - n_i as i128, p as i128) as i64;
    let t_hi = floor_div(hi as i128 - n_i as i128, p as i128) as i64;
    coprime_in_range(tables, t_lo, t_hi, n)
}

/// Closed row interval `[lo, hi]` for row `n` of a region, empty rows as None.
fn row_interval(r: &TriangleRegion, n: i64) -> Option<(i64, i64)> {
    let lo = ceil_slope(r.k1, n);
    let mut hi = floor_affine(r.k2, n, r.m);
    if let Some(k3) = r.k3 {
        hi = hi.min(floor_slope(k3, n));
    }
    (lo <= hi).then_some((lo, hi))
}

fn count_rows(tables: &ArithTables, r: &TriangleRegion, method: Method) -> Result<RegionCount> {
    let rows = r.row_count();
    let mut total = 0u64;
    let mut equal = 0u64;
    let mut budget = BRUTE_POINT_LIMIT;
    for n in 1..=rows {
        let Some((lo, hi)) = row_interval(r, n) else {
            continue;
        };
        let nn = n as u64;
        match method {
            Method::Fast => {
                total += coprime_in_range(tables, lo, hi, nn)?;
                equal += coprime_in_range_congruent(tables, lo, hi, nn, 3)?;
            }
            Method::Brute => {
                let width = (hi - lo + 1) as u64;
                budget = budget.checked_sub(width).ok_or_else(|| {
                    capacity("brute region scan exceeds the candidate budget")
                })?;
                for m in lo..=hi {
                    if gcd(m.unsigned_abs(), nn) == 1 {
                        total += 1;
                        if m.rem_euclid(3) == n.rem_euclid(3) {
                            equal += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(RegionCount {
        total_coprime: total,
        coprime_mod3_distinct: total - equal,
        coprime_mod3_equal: equal,
    })
}

/// Count coprime pairs in a plain region `T(M, k1, k2)`, split by the mod-3
/// congruence. Fast and brute routes agree exactly.
pub fn count_region(tables: &ArithTables, r: &TriangleRegion, method: Method) -> Result<RegionCount> {
    if r.k3.is_some() {
        return Err(domain("region has a cut slope; use count_region_cut"));
    }
    count_rows(tables, r, method)
}

/// Count coprime pairs in a cut region `T(M, k1, k2, k3)`.
pub fn count_region_cut(
    tables: &ArithTables,
    r: &TriangleRegion,
    method: Method,
) -> Result<RegionCount> {
    if r.k3.is_none() {
        return Err(domain("count_region_cut needs a cut slope k3"));
    }
    count_rows(tables, r, method)
}

/// Density predictions from the area law: total coprime pairs go to
/// `(6/pi^2) * area`, and the distinct-mod-3 subset carries 3/4 of that.
pub fn asymptotic_prediction(r: &TriangleRegion) -> (f64, f64) {
    let total = 6.0 / (std::f64::consts::PI * std::f64::consts::PI) * r.area();
    (total, 0.75 * total)
}

/// Count pairs `(m, n)` in the box `[1, size]^2` that are coprime with
/// `m != n (mod p)`, for prime `p`.
pub fn count_coprime_box_modp(
    tables: &ArithTables,
    size: u64,
    p: u64,
    method: Method,
) -> Result<u64> {
    if !is_prime(p) {
        return Err(domain(format!("{p} is not prime")));
    }
    if size == 0 {
        return Ok(0);
    }
    match method {
        Method::Fast => {
            let mut count = 0u64;
            for n in 1..=size {
                let coprime = tables.coprime_count_up_to(size, n)?;
                let congruent =
                    coprime_in_range_congruent(tables, 1, size as i64, n, p)?;
                count += coprime - congruent;
            }
            Ok(count)
        }
        Method::Brute => {
            if size > 100_000 {
                return Err(capacity("brute box scan capped at size 10^5"));
            }
            let mut count = 0u64;
            for n in 1..=size {
                for m in 1..=size {
                    if gcd(m, n) == 1 && m % p != n % p {
                        count += 1;
                    }
                }
            }
            Ok(count)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ArithTables;

    fn tables() -> ArithTables {
        ArithTables::build(100_000).unwrap()
    }

    fn ratio(p: i64, q: i64) -> Rational64 {
        Rational64::new(p, q)
    }

    #[test]
    fn region_invariants_are_enforced() {
        assert!(TriangleRegion::new(10, ratio(1, 1), ratio(-1, 1)).is_ok());
        assert!(TriangleRegion::new(0, ratio(1, 1), ratio(-1, 1)).is_err());
        assert!(TriangleRegion::new(10, ratio(-1, 1), ratio(-2, 1)).is_err());
        assert!(TriangleRegion::new(10, ratio(1, 1), ratio(2, 1)).is_err());
        assert!(TriangleRegion::with_cut(10, ratio(1, 1), ratio(-1, 1), ratio(1, 2)).is_err());
    }

    #[test]
    fn worked_example_m10() {
        let t = tables();
        let r = TriangleRegion::new(10, ratio(1, 1), ratio(-1, 1)).unwrap();
        for method in [Method::Fast, Method::Brute] {
            let c = count_region(&t, &r, method).unwrap();
            assert_eq!(c.total_coprime, 16);
            assert_eq!(c.coprime_mod3_distinct, 12);
            assert_eq!(c.coprime_mod3_equal, 4);
        }
        let empty = TriangleRegion::new(1, ratio(1, 1), ratio(-1, 1)).unwrap();
        assert_eq!(
            count_region(&t, &empty, Method::Fast).unwrap().total_coprime,
            0
        );
    }

    #[test]
    fn cut_region_baseline() {
        let t = tables();
        let r = TriangleRegion::with_cut(10, ratio(1, 1), ratio(-1, 1), ratio(3, 1)).unwrap();
        let fast = count_region_cut(&t, &r, Method::Fast).unwrap();
        let brute = count_region_cut(&t, &r, Method::Brute).unwrap();
        assert_eq!(fast, brute);
        // Cut plus complement equals the full triangle: T(M,k1,k2) splits
        // along k3 into T_cut(M,k1,k2,k3) and T(M,k3,k2) up to the shared
        // boundary; verified numerically by the area law instead.
        let tiny = TriangleRegion::with_cut(1, ratio(1, 1), ratio(-1, 1), ratio(3, 1)).unwrap();
        assert_eq!(
            count_region_cut(&t, &tiny, Method::Fast)
                .unwrap()
                .total_coprime,
            0
        );
    }

    #[test]
    fn areas() {
        let r = TriangleRegion::new(10, ratio(1, 1), ratio(-1, 1)).unwrap();
        assert!((r.area() - 25.0).abs() < 1e-12);
        let rc = TriangleRegion::with_cut(10, ratio(1, 1), ratio(-1, 1), ratio(2, 1)).unwrap();
        assert!((rc.area() - 25.0 / 3.0).abs() < 1e-12);
        let (pred_total, pred_distinct) = asymptotic_prediction(&r);
        assert!((pred_total - 6.0 / (std::f64::consts::PI.powi(2)) * 25.0).abs() < 1e-9);
        assert!((pred_distinct / pred_total - 0.75).abs() < 1e-12);
    }

    #[test]
    fn fast_equals_brute_on_a_randomized_suite() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let t = tables();
        let mut rng = StdRng::seed_from_u64(0x5eed);
        let mut checked = 0;
        while checked < 60 {
            let m = rng.random_range(1..=1000i64);
            let k1 = ratio(rng.random_range(1..=21), rng.random_range(1..=7));
            let k2 = ratio(rng.random_range(-21..=21), rng.random_range(1..=7));
            if k1 <= k2 {
                continue;
            }
            let region = if rng.random_bool(0.5) {
                let k3 = k1 + ratio(rng.random_range(1..=14), rng.random_range(1..=7));
                TriangleRegion::with_cut(m, k1, k2, k3).unwrap()
            } else {
                TriangleRegion::new(m, k1, k2).unwrap()
            };
            let fast = count_rows(&t, &region, Method::Fast).unwrap();
            let brute = count_rows(&t, &region, Method::Brute).unwrap();
            assert_eq!(fast, brute, "mismatch on {region:?}");
            assert_eq!(
                fast.total_coprime,
                fast.coprime_mod3_distinct + fast.coprime_mod3_equal
            );
            checked += 1;
        }
    }

    #[test]
    fn counts_converge_to_the_area_law() {
        // Each slope pair: error below 1% at M = 10^4 and shrinking from
        // M = 10^3, distinct-mod-3 share within 1% of 3/4, and the count
        // within 1.5% of (6/pi^2) * area.
        let t = tables();
        let six_over_pi2 = 6.0 / (std::f64::consts::PI * std::f64::consts::PI);
        for (k1, k2) in [
            (ratio(1, 1), ratio(-1, 1)),
            (ratio(2, 1), ratio(-1, 2)),
            (ratio(3, 1), ratio(0, 1)),
        ] {
            let err_at = |m: i64| {
                let region = TriangleRegion::new(m, k1, k2).unwrap();
                let count = count_region(&t, &region, Method::Fast).unwrap();
                let expect = six_over_pi2 * region.area();
                let err = (count.total_coprime as f64 / expect - 1.0).abs();
                let share = count.coprime_mod3_distinct as f64 / count.total_coprime as f64;
                (err, share)
            };
            let (err3, _) = err_at(1_000);
            let (err4, share4) = err_at(10_000);
            assert!(err4 < 0.01, "area law error {err4} for ({k1}, {k2})");
            assert!(err4 < err3, "error grew for ({k1}, {k2})");
            assert!((share4 - 0.75).abs() < 0.01, "share {share4} for ({k1}, {k2})");
        }
        // Cut region at M = 10^4: within 1.5% of its own area prediction.
        let cut = TriangleRegion::with_cut(10_000, ratio(1, 1), ratio(-1, 1), ratio(2, 1)).unwrap();
        let count = count_region_cut(&t, &cut, Method::Fast).unwrap();
        let expect = six_over_pi2 * cut.area();
        assert!((count.total_coprime as f64 / expect - 1.0).abs() < 0.015);
    }

    #[test]
    fn box_modp_examples() {
        let t = tables();
        assert_eq!(
            count_coprime_box_modp(&t, 4, 2, Method::Brute).unwrap(),
            8
        );
        assert_eq!(count_coprime_box_modp(&t, 4, 2, Method::Fast).unwrap(), 8);
        for p in [2u64, 3, 5, 7] {
            assert_eq!(count_coprime_box_modp(&t, 1, p, Method::Fast).unwrap(), 0);
        }
        assert!(count_coprime_box_modp(&t, 10, 4, Method::Fast).is_err());
        for p in [2u64, 3, 5] {
            for size in [17u64, 100, 997] {
                assert_eq!(
                    count_coprime_box_modp(&t, size, p, Method::Fast).unwrap(),
                    count_coprime_box_modp(&t, size, p, Method::Brute).unwrap(),
                    "box size {size}, p {p}"
                );
            }
        }
    }

    #[test]
    fn range_helpers_match_scans() {
        let t = tables();
        for n in 1..=40u64 {
            for lo in -25i64..=25 {
                for hi in lo..=25 {
                    let expect = (lo..=hi)
                        .filter(|&k| {
                            if k == 0 {
                                n == 1
                            } else {
                                gcd(k.unsigned_abs(), n) == 1
                            }
                        })
                        .count() as u64;
                    assert_eq!(
                        coprime_in_range(&t, lo, hi, n).unwrap(),
                        expect,
                        "range [{lo},{hi}] n={n}"
                    );
                    for p in [2u64, 3, 5] {
                        let expect_c = (lo..=hi)
                            .filter(|&k| {
                                let congruent = k.rem_euclid(p as i64) as u64 == n % p;
                                let coprime = if k == 0 {
                                    n == 1
                                } else {
                                    gcd(k.unsigned_abs(), n) == 1
                                };
                                congruent && coprime
                            })
                            .count() as u64;
                        assert_eq!(
                            coprime_in_range_congruent(&t, lo, hi, n, p).unwrap(),
                            expect_c,
                            "congruent range [{lo},{hi}] n={n} p={p}"
                        );
                    }
                }
            }
        }
    }
}
