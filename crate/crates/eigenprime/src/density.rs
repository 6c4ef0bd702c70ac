//! Densities of prime triples among coprime triples, the limit constants
//! they are compared against, and sweep tables over ranges of N.

use rayon::prelude::*;

use crate::arith::ArithTables;
use crate::counting::{count_report, CountReport};
use crate::error::{domain, Result};
use crate::Method;

/// Riemann zeta at an integer argument `s >= 2` by partial summation with an
/// integral tail correction; the absolute error is below `tol`.
///
/// With `M` terms the tail lies between the integrals from `M` and from
/// `M+1`, so adding the integral from `M` (`M^(1-s)/(s-1)`) leaves an error
/// of at most `M^-s`; `M` is chosen as `tol^(-1/s)` rounded up.
pub fn zeta(s: u32, tol: f64) -> f64 {
    assert!(s >= 2, "zeta(s) needs s >= 2");
    assert!(tol > 0.0, "tolerance must be positive");
    let terms = (tol.powf(-1.0 / s as f64).ceil() as u64).max(2);
    let mut sum = 0.0;
    // Small terms first to keep the summation error negligible.
    for n in (1..=terms).rev() {
        sum += (n as f64).powi(-(s as i32));
    }
    sum + (terms as f64).powi(1 - s as i32) / (s as f64 - 1.0)
}

/// The constants the finite-N measurements are compared against.
///
/// `lower_norm`/`upper_norm` bound the normalized surface prime density
/// `P_S(N) log N`; divided by `3 zeta(3)` they become the liminf/limsup
/// bounds on the density ratio. `ys_lower`/`ys_upper` bound the coprime
/// surface count per unit N, and `plane_ratio` is the limit of the same
/// density ratio for the plane `z2 = 0`.
#[derive(Debug, Clone, Copy)]
pub struct ConstantsTable {
    pub zeta2: f64,
    pub zeta3: f64,
    pub three_zeta3: f64,
    pub lower_norm: f64,
    pub upper_norm: f64,
    pub liminf_bound: f64,
    pub limsup_bound: f64,
    pub ys_lower: f64,
    pub ys_upper: f64,
    pub plane_ratio: f64,
}

/// Evaluate every constant to at least 12 significant digits.
pub fn constants() -> ConstantsTable {
    let pi = std::f64::consts::PI;
    let pi2 = pi * pi;
    let zeta2 = zeta(2, 1e-13);
    let zeta3 = zeta(3, 1e-14);
    let sqrt2 = std::f64::consts::SQRT_2;
    let sqrt3 = 3.0_f64.sqrt();
    let sqrt6 = 6.0_f64.sqrt();
    let corner = (3.0 - sqrt6) * (sqrt2 - 1.0);
    ConstantsTable {
        zeta2,
        zeta3,
        three_zeta3: 3.0 * zeta3,
        lower_norm: pi2 / (12.0 * corner),
        upper_norm: 2.0 * sqrt3 * pi2 / 9.0,
        liminf_bound: pi2 / (36.0 * corner * zeta3),
        limsup_bound: 2.0 * sqrt3 * pi2 / (27.0 * zeta3),
        ys_lower: 3.0 * sqrt3 / pi2,
        ys_upper: 24.0 * corner / pi2,
        plane_ratio: 2.0 * zeta2 / (3.0 * zeta3),
    }
}

/// Counts and derived densities at one N.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensitySample {
    pub n: u64,
    pub x_plus: u128,
    pub y_plus: u128,
    pub xs: u64,
    pub ys: u64,
    /// Prime-triple density in the cuboid: x_plus / y_plus.
    pub p_plus: f64,
    /// Prime-triple density on the surface: xs / ys.
    pub p_s: f64,
    /// p_s / p_plus; undefined until the cuboid holds a prime triple.
    pub ratio: Option<f64>,
    pub p_plus_log_n: f64,
    pub p_s_log_n: f64,
}

impl DensitySample {
    fn from_report(r: CountReport) -> Self {
        let p_plus = r.x_plus as f64 / r.y_plus as f64;
        let p_s = r.xs as f64 / r.ys as f64;
        let log_n = (r.n as f64).ln();
        DensitySample {
            n: r.n,
            x_plus: r.x_plus,
            y_plus: r.y_plus,
            xs: r.xs,
            ys: r.ys,
            p_plus,
            p_s,
            ratio: (r.x_plus > 0).then(|| p_s / p_plus),
            p_plus_log_n: p_plus * log_n,
            p_s_log_n: p_s * log_n,
        }
    }
}

/// All counts and densities at one N.
pub fn density_sample(tables: &ArithTables, n: u64, method: Method) -> Result<DensitySample> {
    Ok(DensitySample::from_report(count_report(tables, n, method)?))
}

/// One sample per N, computed independently (and concurrently); the output
/// order follows the input order.
pub fn sweep(tables: &ArithTables, ns: &[u64], method: Method) -> Result<Vec<DensitySample>> {
    if ns.is_empty() {
        return Err(domain("sweep needs at least one N"));
    }
    if !ns.windows(2).all(|w| w[0] < w[1]) {
        return Err(domain("sweep Ns must be strictly ascending"));
    }
    ns.par_iter()
        .map(|&n| density_sample(tables, n, method))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ArithTables;

    #[test]
    fn zeta_values() {
        assert!((zeta(3, 1e-9) - 1.202_056_903).abs() < 1e-9);
        let pi2_6 = std::f64::consts::PI.powi(2) / 6.0;
        assert!((zeta(2, 1e-9) - pi2_6).abs() < 1e-9);
        assert!((zeta(2, 1.0) - pi2_6).abs() < 1.0);
        assert!((zeta(4, 1e-12) - 1.082_323_233_711_138).abs() < 1e-12);
    }

    fn round4(x: f64) -> f64 {
        (x * 1e4).round() / 1e4
    }

    #[test]
    fn constants_match_their_four_decimal_quotes() {
        let c = constants();
        assert_eq!(round4(c.three_zeta3), 3.6062);
        assert_eq!(round4(c.lower_norm), 3.6069);
        assert_eq!(round4(c.upper_norm), 3.7988);
        assert_eq!(round4(c.liminf_bound), 1.0002);
        assert_eq!(round4(c.limsup_bound), 1.0534);
        assert_eq!(round4(c.plane_ratio), 0.9123);
    }

    #[test]
    fn constants_are_ordered_sanely() {
        let c = constants();
        assert!(c.liminf_bound < c.limsup_bound);
        let sqrt3_over_pi = 3.0_f64.sqrt() / std::f64::consts::PI;
        assert!(c.ys_lower < sqrt3_over_pi && sqrt3_over_pi < c.ys_upper);
        for v in [
            c.zeta2,
            c.zeta3,
            c.three_zeta3,
            c.lower_norm,
            c.upper_norm,
            c.liminf_bound,
            c.limsup_bound,
            c.ys_lower,
            c.ys_upper,
            c.plane_ratio,
        ] {
            assert!(v.is_finite() && v > 0.0);
        }
    }

    #[test]
    fn samples_and_sweeps() {
        let t = ArithTables::build(1_000).unwrap();
        let s10 = density_sample(&t, 10, Method::Fast).unwrap();
        assert!((s10.p_s - 0.8).abs() < 1e-15); // 4 prime of 5 coprime points
        let s1 = density_sample(&t, 1, Method::Fast).unwrap();
        assert_eq!(s1.p_plus, 0.0);
        assert_eq!(s1.p_s, 0.0);
        assert!(s1.ratio.is_none());

        let sw = sweep(&t, &[10, 100, 500], Method::Fast).unwrap();
        assert_eq!(sw.len(), 3);
        assert!(sw[0].ys < sw[1].ys && sw[1].ys < sw[2].ys);
        assert!(sweep(&t, &[], Method::Fast).is_err());
        assert!(sweep(&t, &[10, 10], Method::Fast).is_err());
        assert!(sweep(&t, &[100, 10], Method::Fast).is_err());
        let single = sweep(&t, &[1], Method::Fast).unwrap();
        assert!(single[0].ratio.is_none());
    }
}
