//! Exact counts of coprime and prime triples in the cuboid
//! `1 <= z0 <= 6N/5, 1 <= z1 <= N, 1 <= z2 <= 6N/5`, on the surface, and in
//! the comparison plane `z2 = 0`, with definitional brute-force oracles for
//! every fast counter.

use rayon::prelude::*;

use num_integer::gcd;
use num_rational::Rational64;

use crate::arith::{is_prime, ArithTables};
use crate::error::{capacity, Result};
use crate::regions::{self, TriangleRegion};
use crate::surface::{self, Triple};
use crate::Method;

/// Largest N served by the brute-force cuboid oracles.
pub const BRUTE_LIMIT: u64 = 300;

/// Largest N served by the surface counters.
pub const SURFACE_LIMIT: u64 = 1_000_000_000;

/// All four headline counts at one N.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountReport {
    pub n: u64,
    /// Prime triples in the cuboid (coprime, at least one prime coordinate).
    pub x_plus: u128,
    /// Coprime triples in the cuboid.
    pub y_plus: u128,
    /// Prime triples on the surface.
    pub xs: u64,
    /// Coprime triples on the surface.
    pub ys: u64,
    pub method: Method,
}

fn box_bound(n: u64) -> u64 {
    6 * n / 5
}

fn require_table(tables: &ArithTables, needed: u64, what: &str) -> Result<()> {
    if tables.limit() < needed {
        return Err(capacity(format!(
            "{what} needs tables up to {needed}, have {}",
            tables.limit()
        )));
    }
    Ok(())
}

fn require_positive(n: u64) -> Result<()> {
    if n == 0 {
        return Err(crate::error::domain("N must be a positive integer"));
    }
    Ok(())
}

/// Coprime triples in the cuboid.
///
/// Fast route: the Moebius sum `sum over d of mu(d) floor(N/d)
/// floor(floor(6N/5)/d)^2`. Brute route: a gcd scan of the whole cuboid
/// (N <= 300).
pub fn count_y_plus(tables: &ArithTables, n: u64, method: Method) -> Result<u128> {
    require_positive(n)?;
    match method {
        Method::Fast => {
            require_table(tables, n, "count_y_plus")?;
            let bound = box_bound(n);
            let total: i128 = (1..=n)
                .into_par_iter()
                .map(|d| {
                    let mu = tables.mobius(d).expect("d <= limit") as i128;
                    if mu == 0 {
                        return 0;
                    }
                    let a = (bound / d) as i128;
                    let b = (n / d) as i128;
                    mu * a * a * b
                })
                .sum();
            debug_assert!(total >= 0);
            Ok(total as u128)
        }
        Method::Brute => Ok(brute_force_counts(n)?.y_plus),
    }
}

/// Prime triples in the cuboid.
///
/// Fast route: (all triples) - (all-composite triples) - (triples that
/// contain a prime coordinate but are not coprime). A triple of the third
/// kind has every coordinate a multiple of some prime p with one coordinate
/// equal to p, and those classes are disjoint across p, so the correction is
/// the exact sum over p <= N of `a^2 b - (a-1)^2 (b-1)` with
/// `a = floor(floor(6N/5)/p)`, `b = floor(N/p)`.
pub fn count_x_plus(tables: &ArithTables, n: u64, method: Method) -> Result<u128> {
    require_positive(n)?;
    match method {
        Method::Fast => {
            let bound = box_bound(n);
            require_table(tables, bound.max(2), "count_x_plus")?;
            let total = bound as u128 * bound as u128 * n as u128;
            let composites_outer = (bound - tables.prime_count(bound)?) as u128;
            let composites_mid = (n - tables.prime_count(n)?) as u128;
            let all_composite = composites_outer * composites_outer * composites_mid;
            let with_prime = total - all_composite;
            let primes = tables.primes();
            let upper = primes.partition_point(|&p| p <= n);
            let not_coprime: u128 = primes[..upper]
                .par_iter()
                .map(|&p| {
                    let a = (bound / p) as u128;
                    let b = (n / p) as u128;
                    a * a * b - (a - 1) * (a - 1) * (b - 1)
                })
                .sum();
            Ok(with_prime - not_coprime)
        }
        Method::Brute => Ok(brute_force_counts(n)?.x_plus),
    }
}

/// Largest m with `m^2 + mn + n^2 <= limit` for a fixed n, or 0 when none.
fn m_upper(n: u64, limit: u64) -> u64 {
    match (4 * limit).checked_sub(3 * n * n) {
        Some(disc) => {
            let s = disc.isqrt();
            if s <= n {
                0
            } else {
                (s - n) / 2
            }
        }
        None => 0,
    }
}

/// Coprime triples on the surface.
///
/// Fast route: `1 + 4 W(N)` where `W(N)` counts parameter pairs with
/// `gcd(m,n) = 1`, `m > n`, `m != n (mod 3)`, `m^2 + mn + n^2 <= N`; each of
/// the four disjoint families contributes one point per pair and `(1,1,1)`
/// stands alone. Per row the pair count is a coprime range count minus its
/// congruent-mod-3 part. Brute route: cuboid scan (N <= 300).
pub fn count_ys(tables: &ArithTables, n: u64, method: Method) -> Result<u64> {
    require_positive(n)?;
    match method {
        Method::Fast => {
            if n > SURFACE_LIMIT {
                return Err(capacity(format!("surface counts capped at {SURFACE_LIMIT}")));
            }
            require_table(tables, (n / 3).isqrt() + 1, "count_ys")?;
            let mut pairs = 0u64;
            for row in 1u64.. {
                let hi = m_upper(row, n);
                if hi <= row {
                    break;
                }
                let coprime = tables.coprime_count_up_to(hi, row)?
                    - tables.coprime_count_up_to(row, row)?;
                let congruent = if row % 3 == 0 {
                    0
                } else {
                    tables.coprime_count_up_to((hi - row) / 3, row)?
                };
                pairs += coprime - congruent;
            }
            Ok(1 + 4 * pairs)
        }
        Method::Brute => {
            let (ys, _) = brute_surface_counts(n)?;
            Ok(ys)
        }
    }
}

/// Prime triples on the surface.
///
/// Fast route: walk the parameterized points with `z1 <= N` and count images
/// having at least one prime coordinate (`(1,1,1)` has none). Rows of the
/// parameter region are independent, so they are counted in parallel and
/// summed. Primality is answered by the sieve below its limit and by the
/// deterministic 64-bit test above it. Brute route: cuboid scan (N <= 300).
pub fn count_xs(tables: &ArithTables, n: u64, method: Method) -> Result<u64> {
    require_positive(n)?;
    match method {
        Method::Fast => {
            if n > SURFACE_LIMIT {
                return Err(capacity(format!("surface counts capped at {SURFACE_LIMIT}")));
            }
            let prime = |v: u64| -> bool {
                if v <= tables.limit() {
                    tables.is_prime_sieved(v).expect("in range")
                } else {
                    is_prime(v)
                }
            };
            let row_max = (n / 3).isqrt() + 1;
            let count: u64 = (1..=row_max)
                .into_par_iter()
                .map(|row| {
                    let mut acc = 0u64;
                    for m in row + 1..=m_upper(row, n) {
                        if !surface::in_omega(m, row) {
                            continue;
                        }
                        // Families 2 and 4 mirror 1 and 3 coordinate for
                        // coordinate, so each hit counts twice. The outer
                        // coordinates factor: m^2 + 2mn = m(m + 2n) is never
                        // prime over Omega, n^2 + 2mn = n(n + 2m) only for
                        // n = 1, and m^2 - n^2 = (m-n)(m+n) only for
                        // m - n = 1.
                        let middle = prime(m * m + m * row + row * row);
                        if middle || row == 1 && prime(2 * m + 1) {
                            acc += 2;
                        }
                        if middle || m == row + 1 && prime(m + row) {
                            acc += 2;
                        }
                    }
                    acc
                })
                .sum();
            Ok(count)
        }
        Method::Brute => {
            let (_, xs) = brute_surface_counts(n)?;
            Ok(xs)
        }
    }
}

/// All four counts at one N.
pub fn count_report(tables: &ArithTables, n: u64, method: Method) -> Result<CountReport> {
    match method {
        Method::Fast => Ok(CountReport {
            n,
            x_plus: count_x_plus(tables, n, Method::Fast)?,
            y_plus: count_y_plus(tables, n, Method::Fast)?,
            xs: count_xs(tables, n, Method::Fast)?,
            ys: count_ys(tables, n, Method::Fast)?,
            method,
        }),
        Method::Brute => brute_force_counts(n),
    }
}

/// Definitional oracle: scan the whole cuboid, testing gcd and primality
/// coordinate by coordinate. Independent of the sieve tables.
pub fn brute_force_counts(n: u64) -> Result<CountReport> {
    let reports = brute_force_reports_up_to(n)?;
    Ok(reports[reports.len() - 1])
}

/// Brute-force counts for every `N <= n_max` in one cuboid pass: each triple
/// is binned at the smallest N whose cuboid contains it, and prefix sums
/// produce the per-N counts. The scan itself is definitional (gcd of the
/// coordinates, primality of each coordinate, quadratic form for surface
/// membership); no sieve tables are involved.
pub fn brute_force_reports_up_to(n_max: u64) -> Result<Vec<CountReport>> {
    if n_max == 0 || n_max > BRUTE_LIMIT {
        return Err(capacity(format!(
            "brute-force oracle serves 1 <= N <= {BRUTE_LIMIT}"
        )));
    }
    let bound = box_bound(n_max);
    let prime_flag: Vec<bool> = (0..=bound).map(is_prime).collect();
    // enter_outer[z] = smallest N with z <= floor(6N/5).
    let enter_outer: Vec<u64> = (0..=bound).map(|z| (5 * z).div_ceil(6)).collect();

    struct Bins {
        y: Vec<u64>,
        x: Vec<u64>,
        ys: Vec<u64>,
        xs: Vec<u64>,
    }
    let fresh = || Bins {
        y: vec![0; n_max as usize + 1],
        x: vec![0; n_max as usize + 1],
        ys: vec![0; n_max as usize + 1],
        xs: vec![0; n_max as usize + 1],
    };

    let bins = (1..=bound)
        .into_par_iter()
        .fold(fresh, |mut bins, z0| {
            for z2 in 1..=bound {
                let g02 = gcd(z0, z2);
                let enter02 = enter_outer[z0 as usize].max(enter_outer[z2 as usize]);
                let prime02 = prime_flag[z0 as usize] || prime_flag[z2 as usize];
                let s = z0 * z0 + z2 * z2 - z0 * z2;
                let root = s.isqrt();
                let on_surface_at = (root * root == s).then_some(root);
                for z1 in 1..=n_max {
                    let enter = enter02.max(z1) as usize;
                    if enter > n_max as usize {
                        break;
                    }
                    if gcd(g02, z1) == 1 {
                        bins.y[enter] += 1;
                        let has_prime = prime02 || prime_flag[z1 as usize];
                        if has_prime {
                            bins.x[enter] += 1;
                        }
                        if on_surface_at == Some(z1) {
                            bins.ys[enter] += 1;
                            if has_prime {
                                bins.xs[enter] += 1;
                            }
                        }
                    }
                }
            }
            bins
        })
        .reduce(fresh, |mut a, b| {
            for (dst, src) in [
                (&mut a.y, &b.y),
                (&mut a.x, &b.x),
                (&mut a.ys, &b.ys),
                (&mut a.xs, &b.xs),
            ] {
                for (d, s) in dst.iter_mut().zip(src.iter()) {
                    *d += s;
                }
            }
            a
        });

    let mut out = Vec::with_capacity(n_max as usize);
    let (mut y, mut x, mut ys, mut xs) = (0u128, 0u128, 0u64, 0u64);
    for n in 1..=n_max as usize {
        y += bins.y[n] as u128;
        x += bins.x[n] as u128;
        ys += bins.ys[n];
        xs += bins.xs[n];
        out.push(CountReport {
            n: n as u64,
            x_plus: x,
            y_plus: y,
            xs,
            ys,
            method: Method::Brute,
        });
    }
    Ok(out)
}

/// Surface-only brute counts `(ys, xs)` by scanning the outer coordinates
/// and solving the form for the middle one. Equivalent to the cuboid scan
/// restricted to the surface, but quadratic instead of cubic.
fn brute_surface_counts(n: u64) -> Result<(u64, u64)> {
    if n == 0 || n > 10_000 {
        return Err(capacity("surface brute scan serves 1 <= N <= 10^4"));
    }
    let bound = box_bound(n);
    let mut ys = 0u64;
    let mut xs = 0u64;
    for z0 in 1..=bound {
        for z2 in 1..=bound {
            let s = z0 * z0 + z2 * z2 - z0 * z2;
            let z1 = s.isqrt();
            if z1 * z1 != s || z1 < 1 || z1 > n {
                continue;
            }
            let z = Triple::new(z0, z1, z2);
            if z.gcd() == 1 {
                ys += 1;
                if z.has_prime_coordinate() {
                    xs += 1;
                }
            }
        }
    }
    Ok((ys, xs))
}

/// Coprime and prime pair counts in the comparison plane `z2 = 0`: pairs
/// `(z0, z1)` with `1 <= z0 <= 6N/5`, `1 <= z1 <= N`. Since
/// `gcd(z0, z1, 0) = gcd(z0, z1)` and 0 is never prime, the counts follow the
/// same Moebius sum and prime-correction pattern as the cuboid.
pub fn plane_baseline_counts(tables: &ArithTables, n: u64) -> Result<(u128, u128)> {
    require_positive(n)?;
    let bound = box_bound(n);
    require_table(tables, bound.max(2), "plane_baseline_counts")?;
    let ya: i128 = (1..=n)
        .into_par_iter()
        .map(|d| {
            let mu = tables.mobius(d).expect("d <= limit") as i128;
            mu * (bound / d) as i128 * (n / d) as i128
        })
        .sum();
    let total = bound as u128 * n as u128;
    let all_composite =
        (bound - tables.prime_count(bound)?) as u128 * (n - tables.prime_count(n)?) as u128;
    let with_prime = total - all_composite;
    let primes = tables.primes();
    let upper = primes.partition_point(|&p| p <= n);
    let not_coprime: u128 = primes[..upper]
        .par_iter()
        .map(|&p| {
            let a = (bound / p) as u128;
            let b = (n / p) as u128;
            a * b - (a - 1) * (b - 1)
        })
        .sum();
    Ok((with_prime - not_coprime, ya as u128))
}

/// Pair-scan oracle for the plane counts (N <= 300).
pub fn plane_baseline_brute(n: u64) -> Result<(u128, u128)> {
    if n == 0 || n > BRUTE_LIMIT {
        return Err(capacity(format!(
            "plane brute oracle serves 1 <= N <= {BRUTE_LIMIT}"
        )));
    }
    let bound = box_bound(n);
    let mut ya = 0u128;
    let mut xa = 0u128;
    for z0 in 1..=bound {
        for z1 in 1..=n {
            if gcd(z0, z1) == 1 {
                ya += 1;
                if is_prime(z0) || is_prime(z1) {
                    xa += 1;
                }
            }
        }
    }
    Ok((xa, ya))
}

/// Two-sided bound data for the per-family surface pair count `W(N)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SandwichReport {
    /// Pairs counted in a rational triangle guaranteed inside the true region.
    pub lower: u64,
    /// The exact pair count `W(N) = (count_ys(N) - 1) / 4`.
    pub pairs: u64,
    /// Pairs counted in rational triangles jointly covering the true region.
    pub upper: u64,
}

/// Rational interval bounds for the square roots that appear in the tangent
/// construction, denominator 10^4; each bracket provably contains its root.
const SQRT2_BOUNDS: (i64, i64) = (14142, 14143);
const SQRT3_BOUNDS: (i64, i64) = (17320, 17321);
const SQRT6_BOUNDS: (i64, i64) = (24494, 24495);
const ROOT_DENOM: i64 = 10_000;

/// Sandwich the pair count `W(N)` between exact counts over rational-slope
/// regions.
///
/// Pairs `(m, n)` with `m^2 + mn + n^2 <= N` fill the elliptical sector
/// between the ray `m = n` and the horizontal axis. A secant triangle (apex
/// ray `m = n`, base cut by the chord through the sector's boundary points)
/// sits inside the sector, and three tangent-line triangles jointly cover it;
/// replacing the irrational slopes and intercepts by rational bounds in the
/// safe direction keeps both inclusions mathematically guaranteed, so
/// `lower <= W(N) <= upper` is an unconditional check on the fast counter.
pub fn surface_pair_sandwich(tables: &ArithTables, n: u64) -> Result<SandwichReport> {
    let pairs = (count_ys(tables, n, Method::Fast)? - 1) / 4;
    let ratio = Rational64::new;

    let s_lo = n.isqrt() as i64;
    let s_hi = if (s_lo as u64) * (s_lo as u64) == n {
        s_lo
    } else {
        s_lo + 1
    };

    // Inner triangle: left edge m = n, chord m = (1 - sqrt3) n + sqrt(N)
    // shrunk to rational values below the true line.
    let chord_slope = ratio(ROOT_DENOM - SQRT3_BOUNDS.1, ROOT_DENOM); // <= 1 - sqrt3
    let inner = TriangleRegion::new(s_lo.max(1), ratio(1, 1), chord_slope)?;
    let lower = regions::count_region(tables, &inner, Method::Fast)?.coprime_mod3_distinct;

    // Outer cover: tangent lines m = -n + (2 sqrt3 / 3) sqrt(N),
    // m = (1 - sqrt3) n + (sqrt6 - sqrt2) sqrt(N), m = -n/2 + sqrt(N), split
    // along the rays to the two inner tangency corners; every slope and
    // intercept is rounded outward.
    let (s2l, s2h) = SQRT2_BOUNDS;
    let (s3l, s3h) = SQRT3_BOUNDS;
    let (s6l, s6h) = SQRT6_BOUNDS;
    let d = ROOT_DENOM;

    // Corner ray slopes: kb for the L1/L2 corner, kc for the L2/L3 corner.
    let kb_num = (ratio(s6l, d) - ratio(2 * s3h, 3 * d) + ratio(s2l, d) - 2,
                  ratio(s6h, d) - ratio(2 * s3l, 3 * d) + ratio(s2h, d) - 2);
    let kb_den = (ratio(-s6h, d) + ratio(4 * s3l, 3 * d) - ratio(s2h, d) + 2,
                  ratio(-s6l, d) + ratio(4 * s3h, 3 * d) - ratio(s2l, d) + 2);
    let kb = (kb_num.0 / kb_den.1, kb_num.1 / kb_den.0);
    let kc_num = (ratio(-s6h, 3 * d) + ratio(2 * s3l, 3 * d) - ratio(s2h, d) + 2,
                  ratio(-s6l, 3 * d) + ratio(2 * s3h, 3 * d) - ratio(s2l, d) + 2);
    let kc_den = (ratio(2 * s6l, 3 * d) - ratio(4 * s3h, 3 * d) + ratio(2 * s2l, d) - 2,
                  ratio(2 * s6h, 3 * d) - ratio(4 * s3l, 3 * d) + ratio(2 * s2h, d) - 2);
    let kc = (kc_num.0 / kc_den.1, kc_num.1 / kc_den.0);

    let ceil_mul = |r: Rational64, s: i64| -> i64 {
        regions::ceil_div(*r.numer() as i128 * s as i128, *r.denom() as i128) as i64
    };
    let m1 = ceil_mul(ratio(2 * s3h, 3 * d), s_hi).max(1);
    let m2 = ceil_mul(ratio(s6h - s2l, d), s_hi).max(1);
    let m3 = s_hi.max(1);

    let t1 = TriangleRegion::with_cut(m1, ratio(1, 1), ratio(-1, 1), kb.1)?;
    let t2 = TriangleRegion::with_cut(m2, kb.0, ratio(d - s3l, d), kc.1)?;
    let t3 = TriangleRegion::new(m3, kc.0, ratio(-1, 2))?;
    let upper = regions::count_region_cut(tables, &t1, Method::Fast)?.coprime_mod3_distinct
        + regions::count_region_cut(tables, &t2, Method::Fast)?.coprime_mod3_distinct
        + regions::count_region(tables, &t3, Method::Fast)?.coprime_mod3_distinct;

    Ok(SandwichReport {
        lower,
        pairs,
        upper,
    })
}
