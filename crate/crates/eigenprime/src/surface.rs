//! The quadratic surface `z0^2 - z1^2 + z2^2 - z0*z2 = 0`, its
//! characteristic-polynomial origin, and the complete parameterization of its
//! coprime nonnegative integer points.
//!
//! Coprime points other than `(1,1,1)` fall into four disjoint families, the
//! images of four quadratic maps over the parameter set Omega =
//! `{(m,n): gcd(m,n)=1, m > n, m != n (mod 3)}`; this module evaluates the
//! maps, inverts them, and enumerates all coprime points with `z1 <= N`.

use num_complex::Complex64;
use num_integer::gcd;

use crate::arith::is_prime;
use crate::error::{capacity, domain, Result};

/// Coordinate guard for [`q_value`]: below this bound the form fits i64.
pub const COORD_LIMIT: u64 = 1 << 31;

/// Largest enumeration bound accepted by [`enumerate_coprime_solutions`].
pub const ENUMERATION_LIMIT: u64 = 1_000_000_000;

/// A point of the nonnegative integer lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple {
    pub z0: u64,
    pub z1: u64,
    pub z2: u64,
}

impl Triple {
    pub fn new(z0: u64, z1: u64, z2: u64) -> Self {
        Triple { z0, z1, z2 }
    }

    pub fn gcd(&self) -> u64 {
        gcd(gcd(self.z0, self.z1), self.z2)
    }

    /// Mirror symmetry of the surface: swaps the outer coordinates.
    pub fn mirrored(&self) -> Self {
        Triple::new(self.z2, self.z1, self.z0)
    }

    /// True when at least one coordinate is a prime number.
    pub fn has_prime_coordinate(&self) -> bool {
        is_prime(self.z0) || is_prime(self.z1) || is_prime(self.z2)
    }
}

impl std::fmt::Display for Triple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.z0, self.z1, self.z2)
    }
}

/// A parameter pair `(m, n)`; members of Omega satisfy `gcd(m,n) = 1`,
/// `m > n`, and `m != n (mod 3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParamPair {
    pub m: u64,
    pub n: u64,
}

/// Which of the five disjoint classes a coprime surface point belongs to.
///
/// `Delta0` is the lone equilateral point `(1,1,1)`; `Delta1..Delta4` are the
/// images of the four parameterizing maps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DeltaTag {
    Delta0,
    Delta1,
    Delta2,
    Delta3,
    Delta4,
}

impl DeltaTag {
    pub fn family_index(self) -> Option<u8> {
        match self {
            DeltaTag::Delta0 => None,
            DeltaTag::Delta1 => Some(1),
            DeltaTag::Delta2 => Some(2),
            DeltaTag::Delta3 => Some(3),
            DeltaTag::Delta4 => Some(4),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            DeltaTag::Delta0 => "delta0",
            DeltaTag::Delta1 => "delta1",
            DeltaTag::Delta2 => "delta2",
            DeltaTag::Delta3 => "delta3",
            DeltaTag::Delta4 => "delta4",
        }
    }
}

/// Coefficients of `c00 z0^2 + c11 z1^2 + c22 z2^2 + c02 z0 z2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfacePolynomial {
    pub c00: f64,
    pub c11: f64,
    pub c22: f64,
    pub c02: f64,
}

/// The defining form itself: returns `z0^2 - z1^2 + z2^2 - z0*z2` exactly.
/// Coordinates must stay below [`COORD_LIMIT`] so the value fits a signed 64.
pub fn q_value(z: Triple) -> Result<i64> {
    if z.z0 >= COORD_LIMIT || z.z1 >= COORD_LIMIT || z.z2 >= COORD_LIMIT {
        return Err(capacity(format!(
            "coordinate of {z} at or above 2^31; the form would overflow i64"
        )));
    }
    let (a, b, c) = (z.z0 as i128, z.z1 as i128, z.z2 as i128);
    let q = a * a - b * b + c * c - a * c;
    Ok(q as i64)
}

/// True iff the point lies on the surface.
pub fn on_surface(z: Triple) -> Result<bool> {
    Ok(q_value(z)? == 0)
}

/// Characteristic polynomial `det(z0 I + z1 R(a) + z2 R(at))` of the dihedral
/// pair with rotation angle `theta`, expanded symbolically over the complex
/// 2x2 matrices `R(a) = antidiag(e^{i theta}, e^{-i theta})` and
/// `R(at) = diag(e^{i theta}, e^{-i theta})`.
///
/// The result is always of the form `z0^2 - z1^2 + z2^2 + 2cos(theta) z0 z2`;
/// residual imaginary parts and cross terms stay below 1e-12 and are checked
/// before being dropped. At `theta = 2pi/3` this is exactly the surface form.
pub fn dihedral_char_poly(theta: f64) -> SurfacePolynomial {
    let w = Complex64::from_polar(1.0, theta);
    let wb = w.conj();
    let zero = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);

    // Each matrix entry is a linear form a*z0 + b*z1 + c*z2.
    #[derive(Clone, Copy)]
    struct Lin {
        a: Complex64,
        b: Complex64,
        c: Complex64,
    }
    // z0*I + z1*R(a) + z2*R(at)
    let e00 = Lin { a: one, b: zero, c: w };
    let e01 = Lin { a: zero, b: w, c: zero };
    let e10 = Lin { a: zero, b: wb, c: zero };
    let e11 = Lin { a: one, b: zero, c: wb };

    // det = e00*e11 - e01*e10, expanded into monomial coefficients.
    let prod = |x: Lin, y: Lin| -> [Complex64; 6] {
        [
            x.a * y.a,             // z0^2
            x.b * y.b,             // z1^2
            x.c * y.c,             // z2^2
            x.a * y.b + x.b * y.a, // z0 z1
            x.a * y.c + x.c * y.a, // z0 z2
            x.b * y.c + x.c * y.b, // z1 z2
        ]
    };
    let main = prod(e00, e11);
    let anti = prod(e01, e10);
    let det: Vec<Complex64> = main.iter().zip(anti.iter()).map(|(m, a)| m - a).collect();

    const RESIDUAL: f64 = 1e-12;
    for (i, c) in det.iter().enumerate() {
        assert!(
            c.im.abs() < RESIDUAL,
            "imaginary residual {} in coefficient {i}",
            c.im
        );
    }
    assert!(det[3].norm() < RESIDUAL && det[5].norm() < RESIDUAL);

    SurfacePolynomial {
        c00: det[0].re,
        c11: det[1].re,
        c22: det[2].re,
        c02: det[4].re,
    }
}

/// The four parameterizing maps; `k` selects the family (1..=4).
///
/// Family 1 sends `(m,n)` to `(m^2+2mn, m^2+mn+n^2, n^2+2mn)`; family 2 swaps
/// the outer coordinates; families 3 and 4 replace `n^2+2mn` by `m^2-n^2`.
/// Over Omega every image is a coprime surface point.
pub fn phi_map(k: u8, m: u64, n: u64) -> Result<Triple> {
    if !(1..=4).contains(&k) {
        return Err(domain(format!("family index {k} must be in 1..=4")));
    }
    if m == 0 || n == 0 {
        return Err(domain("parameters must be positive"));
    }
    if m >= COORD_LIMIT || n >= COORD_LIMIT {
        return Err(capacity("parameters at or above 2^31 would overflow"));
    }
    let middle = m * m + m * n + n * n;
    let outer_a = m * m + 2 * m * n;
    let outer_b = match k {
        1 | 2 => n * n + 2 * m * n,
        _ => {
            if m <= n {
                return Err(domain("families 3 and 4 need m > n"));
            }
            m * m - n * n
        }
    };
    Ok(match k {
        1 | 3 => Triple::new(outer_a, middle, outer_b),
        _ => Triple::new(outer_b, middle, outer_a),
    })
}

/// Membership in the parameter set Omega.
pub fn in_omega(m: u64, n: u64) -> bool {
    m > n && n >= 1 && gcd(m, n) == 1 && m % 3 != n % 3
}

/// Invert the parameterization: given a coprime surface point, return its
/// class and, for the four map families, the unique parameter pair.
///
/// The inversion is algebraic (`z1 = m^2+mn+n^2` in all families; the
/// remaining coordinates determine `mn` or `m-n`), with a bounded search over
/// `n <= sqrt(z1/3)` as a fallback. Errors: points off the surface or with a
/// common factor are rejected.
pub fn classify(z: Triple) -> Result<(DeltaTag, Option<ParamPair>)> {
    if !on_surface(z)? {
        return Err(domain(format!("{z} is not on the surface")));
    }
    if z.gcd() != 1 {
        return Err(domain(format!("{z} is not coprime")));
    }
    if z == Triple::new(1, 1, 1) {
        return Ok((DeltaTag::Delta0, None));
    }
    let candidates: [(DeltaTag, u8); 4] = [
        (DeltaTag::Delta1, 1),
        (DeltaTag::Delta2, 2),
        (DeltaTag::Delta3, 3),
        (DeltaTag::Delta4, 4),
    ];
    for (tag, k) in candidates {
        let inverted = match k {
            1 => invert_mixed_family(z),
            2 => invert_mixed_family(z.mirrored()),
            3 => invert_difference_family(z),
            _ => invert_difference_family(z.mirrored()),
        };
        if let Some(pair) = inverted {
            if in_omega(pair.m, pair.n) && phi_map(k, pair.m, pair.n)? == z {
                return Ok((tag, Some(pair)));
            }
        }
    }
    // Fallback: scan n, solving m^2 + mn + (n^2 - z1) = 0 for integer m.
    for n in 1..=(z.z1 / 3).isqrt() + 1 {
        let disc = match (4 * z.z1).checked_sub(3 * n * n) {
            Some(d) => d,
            None => break,
        };
        let s = disc.isqrt();
        if s * s != disc || s <= n || (s - n) % 2 != 0 {
            continue;
        }
        let m = (s - n) / 2;
        if !in_omega(m, n) {
            continue;
        }
        for (tag, k) in candidates {
            if phi_map(k, m, n)? == z {
                return Ok((tag, Some(ParamPair { m, n })));
            }
        }
    }
    Err(domain(format!("{z} admits no parameterization")))
}

/// Family 1 inverse: `z0 + z2 - z1 = 3mn`, and `m^2, n^2` are the roots of
/// `t^2 - (z1 - mn) t + (mn)^2`.
fn invert_mixed_family(z: Triple) -> Option<ParamPair> {
    let s = (z.z0 + z.z2).checked_sub(z.z1)?;
    if s == 0 || !s.is_multiple_of(3) {
        return None;
    }
    let mn = s / 3;
    let sum_sq = z.z1.checked_sub(mn)?; // m^2 + n^2
    let disc = (sum_sq as u128 * sum_sq as u128).checked_sub(4 * (mn as u128 * mn as u128))?;
    let root = disc.isqrt();
    if root * root != disc {
        return None;
    }
    let m2 = (sum_sq as u128 + root) / 2;
    let n2 = (sum_sq as u128).checked_sub(root)? / 2;
    if !(sum_sq as u128 + root).is_multiple_of(2) {
        return None;
    }
    let m = (m2 as u64).isqrt();
    let n = (n2 as u64).isqrt();
    if m as u128 * m as u128 != m2 || n as u128 * n as u128 != n2 || n == 0 {
        return None;
    }
    Some(ParamPair { m, n })
}

/// Family 3 inverse: `(m-n)^2 = 2 z1 - 2 z0 + z2` and `n (m-n) = z0 - z1`.
fn invert_difference_family(z: Triple) -> Option<ParamPair> {
    let dd = (2 * z.z1 + z.z2).checked_sub(2 * z.z0)?;
    let d = dd.isqrt();
    if d == 0 || d * d != dd {
        return None;
    }
    let num = z.z0.checked_sub(z.z1)?;
    if num == 0 || num % d != 0 {
        return None;
    }
    let n = num / d;
    Some(ParamPair { m: n + d, n })
}

/// One enumerated coprime surface point with its class and parameters.
pub type Solution = (DeltaTag, Option<ParamPair>, Triple);

/// Stream every coprime surface point with `z1 <= n_limit`: the point
/// `(1,1,1)` followed by all four family images of each Omega pair, ordered
/// by ascending `n`, then `m`, then family index. The streamed points are
/// exactly the coprime surface points of the cuboid, without duplicates.
pub fn enumerate_coprime_solutions(n_limit: u64) -> Result<SolutionIter> {
    if n_limit == 0 {
        return Err(domain("enumeration bound must be positive"));
    }
    if n_limit > ENUMERATION_LIMIT {
        return Err(capacity(format!(
            "enumeration bound {n_limit} exceeds {ENUMERATION_LIMIT}"
        )));
    }
    Ok(SolutionIter {
        n_limit,
        emitted_origin: false,
        n: 1,
        m: 1,
        m_max: 0,
        k: 4,
        primed: false,
    })
}

/// Iterator behind [`enumerate_coprime_solutions`].
pub struct SolutionIter {
    n_limit: u64,
    emitted_origin: bool,
    n: u64,
    m: u64,
    m_max: u64,
    k: u8,
    primed: bool,
}

impl SolutionIter {
    /// Largest m with m^2 + mn + n^2 <= limit, or 0 when none.
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

    /// Advance (n, m) to the next Omega pair; false when exhausted.
    fn advance_pair(&mut self) -> bool {
        loop {
            if self.primed {
                self.m += 1;
            } else {
                self.m_max = Self::m_upper(self.n, self.n_limit);
                self.m = self.n + 1;
                self.primed = true;
            }
            if self.m > self.m_max {
                self.n += 1;
                self.m_max = Self::m_upper(self.n, self.n_limit);
                if self.m_max <= self.n {
                    return false; // m_upper decreases in n: nothing further
                }
                self.m = self.n + 1;
            }
            if in_omega(self.m, self.n) {
                return true;
            }
        }
    }
}

impl Iterator for SolutionIter {
    type Item = Solution;

    fn next(&mut self) -> Option<Solution> {
        if !self.emitted_origin {
            self.emitted_origin = true;
            return Some((DeltaTag::Delta0, None, Triple::new(1, 1, 1)));
        }
        if self.k < 4 {
            self.k += 1;
        } else {
            if !self.advance_pair() {
                return None;
            }
            self.k = 1;
        }
        let pair = ParamPair {
            m: self.m,
            n: self.n,
        };
        let tag = match self.k {
            1 => DeltaTag::Delta1,
            2 => DeltaTag::Delta2,
            3 => DeltaTag::Delta3,
            _ => DeltaTag::Delta4,
        };
        let triple = phi_map(self.k, self.m, self.n).expect("bounds checked");
        Some((tag, Some(pair), triple))
    }
}
