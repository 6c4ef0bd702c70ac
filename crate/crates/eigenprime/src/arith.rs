//! Multiplicative-function sieves, primality testing, prime counting in
//! arithmetic progressions, coprime counting, and the totient partial sums
//! `Phi(N)`, `Phi1(N)`, `Phi(N,3)`, `Phi1(N,3)` together with their
//! recurrences.
//!
//! Everything here is exact integer or exact rational arithmetic. Floors are
//! integer divisions, square roots are [`u64::isqrt`], and the ratio sums use
//! big rationals so that the recurrence identities can be checked bit for bit.

use num_bigint::{BigInt, BigUint};
use num_integer::gcd;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{capacity, domain, Result};

/// Largest supported sieve limit. The tables cost about nine bytes per
/// integer, so this cap keeps a full build under ~2 GiB.
pub const MAX_SIEVE_LIMIT: u64 = 200_000_000;

/// Exact rational value; always stored in lowest terms with a positive
/// denominator.
pub type ExactRational = BigRational;

/// Which evaluation route a recurrence-backed sum should take.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumMethod {
    /// Sum the defining series term by term.
    Direct,
    /// Apply the division-by-3 recurrence down to the base case.
    Iterative,
}

/// Sieved tables of the Moebius function, Euler totient, smallest prime
/// factor, and the ascending prime list up to a fixed limit.
///
/// Immutable after construction; all queries are pure, so a table can be
/// shared freely across threads.
pub struct ArithTables {
    limit: u64,
    mobius: Vec<i8>,
    totient: Vec<u32>,
    spf: Vec<u32>,
    primes: Vec<u64>,
}

impl ArithTables {
    /// Build all tables up to `limit` with a linear sieve (one pass, each
    /// composite struck exactly once by its smallest prime factor).
    pub fn build(limit: u64) -> Result<Self> {
        if limit < 2 {
            return Err(capacity(format!("sieve limit {limit} is below 2")));
        }
        if limit > MAX_SIEVE_LIMIT {
            return Err(capacity(format!(
                "sieve limit {limit} exceeds the supported maximum {MAX_SIEVE_LIMIT}"
            )));
        }
        let lim = limit as usize;
        let mut mobius = vec![0i8; lim + 1];
        let mut totient = vec![0u32; lim + 1];
        let mut spf = vec![0u32; lim + 1];
        let mut primes: Vec<u64> = Vec::with_capacity(prime_count_estimate(limit));
        mobius[1] = 1;
        totient[1] = 1;
        for i in 2..=lim {
            if spf[i] == 0 {
                spf[i] = i as u32;
                mobius[i] = -1;
                totient[i] = (i - 1) as u32;
                primes.push(i as u64);
            }
            for &p in &primes {
                let p = p as usize;
                if p > spf[i] as usize || i * p > lim {
                    break;
                }
                spf[i * p] = p as u32;
                if p == spf[i] as usize {
                    mobius[i * p] = 0;
                    totient[i * p] = totient[i] * p as u32;
                } else {
                    mobius[i * p] = -mobius[i];
                    totient[i * p] = totient[i] * (p as u32 - 1);
                }
            }
        }
        Ok(ArithTables {
            limit,
            mobius,
            totient,
            spf,
            primes,
        })
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    fn check(&self, n: u64) -> Result<usize> {
        if n == 0 {
            return Err(domain("argument must be a positive integer"));
        }
        if n > self.limit {
            return Err(capacity(format!(
                "{n} exceeds the sieve limit {}",
                self.limit
            )));
        }
        Ok(n as usize)
    }

    /// Moebius function: 1 at n=1, (-1)^k on a product of k distinct primes,
    /// 0 when a squared prime divides n.
    pub fn mobius(&self, n: u64) -> Result<i32> {
        Ok(self.mobius[self.check(n)?] as i32)
    }

    /// Euler totient: the count of 1..=n coprime to n.
    pub fn totient(&self, n: u64) -> Result<u64> {
        Ok(self.totient[self.check(n)?] as u64)
    }

    /// Smallest prime factor of `n >= 2`.
    pub fn smallest_prime_factor(&self, n: u64) -> Result<u64> {
        let i = self.check(n)?;
        if i < 2 {
            return Err(domain("smallest prime factor needs n >= 2"));
        }
        Ok(self.spf[i] as u64)
    }

    /// True iff `n` is prime, answered from the sieve.
    pub fn is_prime_sieved(&self, n: u64) -> Result<bool> {
        let i = self.check(n)?;
        Ok(i >= 2 && self.spf[i] as usize == i)
    }

    /// Ascending list of all primes up to the table limit.
    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// Prime factorization as `(prime, exponent)` pairs in ascending order.
    pub fn factorize(&self, n: u64) -> Result<Vec<(u64, u32)>> {
        let mut i = self.check(n)?;
        let mut out = Vec::new();
        while i > 1 {
            let p = self.spf[i] as usize;
            let mut e = 0u32;
            while i % p == 0 {
                i /= p;
                e += 1;
            }
            out.push((p as u64, e));
        }
        Ok(out)
    }

    /// Number of distinct prime factors of `n` (omega).
    pub fn omega(&self, n: u64) -> Result<u32> {
        Ok(self.factorize(n)?.len() as u32)
    }

    /// Number of positive divisors of `n`.
    pub fn divisor_count(&self, n: u64) -> Result<u64> {
        Ok(self
            .factorize(n)?
            .iter()
            .map(|&(_, e)| e as u64 + 1)
            .product())
    }

    /// pi(n): the number of primes up to `n`.
    pub fn prime_count(&self, n: u64) -> Result<u64> {
        self.check(n)?;
        Ok(self.primes.partition_point(|&p| p <= n) as u64)
    }

    /// pi(n; q, a): primes p <= n with p congruent to a modulo q.
    /// Requires gcd(a, q) = 1.
    pub fn prime_count_ap(&self, n: u64, q: u64, a: u64) -> Result<u64> {
        if q == 0 || a == 0 {
            return Err(domain("modulus and residue must be positive"));
        }
        if gcd(a, q) != 1 {
            return Err(domain(format!("residue {a} is not coprime to modulus {q}")));
        }
        self.check(n)?;
        let r = a % q;
        let upper = self.primes.partition_point(|&p| p <= n);
        Ok(self.primes[..upper].iter().filter(|&&p| p % q == r).count() as u64)
    }

    /// Squarefree divisors of `n` with their Moebius signs.
    fn squarefree_divisors_signed(&self, n: u64) -> Result<Vec<(u64, i8)>> {
        let factors = self.factorize(n)?;
        let mut divs = vec![(1u64, 1i8)];
        for &(p, _) in &factors {
            let len = divs.len();
            for i in 0..len {
                let (d, s) = divs[i];
                divs.push((d * p, -s));
            }
        }
        Ok(divs)
    }

    /// f(upper, n): how many integers in 1..=upper are coprime to n, by the
    /// divisor sum `sum over d|n of mu(d) * floor(upper/d)` (no scanning).
    pub fn coprime_count_up_to(&self, upper: u64, n: u64) -> Result<u64> {
        let mut acc: i128 = 0;
        for (d, s) in self.squarefree_divisors_signed(n)? {
            acc += s as i128 * (upper / d) as i128;
        }
        debug_assert!(acc >= 0);
        Ok(acc as u64)
    }

    /// Phi(n): the partial sum of the totient over 1..=n.
    pub fn totient_sum(&self, n: u64) -> Result<u64> {
        let i = self.check(n)?;
        Ok(self.totient[1..=i].iter().map(|&v| v as u64).sum())
    }

    /// Phi(n, 3): the partial totient sum restricted to multiples of 3.
    ///
    /// The direct route sums the table; the iterative route applies
    /// `Phi(n,3) = 2 Phi(floor(n/3)) + Phi(floor(n/3), 3)` down to an empty
    /// tail, using `floor(floor(n/a)/b) = floor(n/ab)` to step the argument.
    /// Both routes are exact and must agree.
    pub fn totient_sum_div3(&self, n: u64, method: SumMethod) -> Result<u64> {
        self.check(n)?;
        match method {
            SumMethod::Direct => Ok((3..=n)
                .step_by(3)
                .map(|k| self.totient[k as usize] as u64)
                .sum()),
            SumMethod::Iterative => {
                let mut acc = 0u64;
                let mut m = n / 3;
                while m >= 1 {
                    acc += 2 * self.totient_sum(m)?;
                    m /= 3;
                }
                Ok(acc)
            }
        }
    }

    /// Phi1(n): the exact rational partial sum of totient(k)/k over 1..=n.
    pub fn totient_ratio_sum(&self, n: u64) -> Result<ExactRational> {
        self.check(n)?;
        let mut acc = CommonDenomSums::new(1);
        for k in 1..=n {
            acc.add(0, self.totient[k as usize] as u64, k);
        }
        Ok(acc.rational(0))
    }

    /// Phi1(n, 3): the exact rational partial sum of totient(k)/k over
    /// multiples of 3 up to n.
    ///
    /// The iterative route applies
    /// `Phi1(n,3) = (2/3) Phi1(floor(n/3)) + (1/3) Phi1(floor(n/3), 3)`
    /// recursively; both routes agree exactly.
    pub fn totient_ratio_sum_div3(&self, n: u64, method: SumMethod) -> Result<ExactRational> {
        self.check(n)?;
        match method {
            SumMethod::Direct => {
                let mut acc = CommonDenomSums::new(1);
                let mut k = 3;
                while k <= n {
                    acc.add(0, self.totient[k as usize] as u64, k);
                    k += 3;
                }
                Ok(acc.rational(0))
            }
            SumMethod::Iterative => {
                let two_thirds = big_ratio(2, 3);
                let third = big_ratio(1, 3);
                // Arguments n/3, n/9, ... down to the empty base case.
                let mut args = Vec::new();
                let mut m = n / 3;
                while m >= 1 {
                    args.push(m);
                    m /= 3;
                }
                let mut acc: ExactRational = BigRational::zero();
                for &m in args.iter().rev() {
                    acc = &two_thirds * self.totient_ratio_sum(m)? + &third * acc;
                }
                Ok(acc)
            }
        }
    }

    /// Floating-point Phi1(n) for large-n asymptotic diagnostics only; the
    /// counting paths never touch this.
    pub fn totient_ratio_sum_f64(&self, n: u64) -> Result<f64> {
        self.check(n)?;
        Ok((1..=n)
            .map(|k| self.totient[k as usize] as f64 / k as f64)
            .sum())
    }
}

fn prime_count_estimate(limit: u64) -> usize {
    let x = limit as f64;
    (1.2 * x / x.ln()) as usize + 16
}

fn big_ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Running sums of small fractions `p/q` kept over one shared denominator.
///
/// The shared denominator is the lcm of every reduced `q` seen so far, so an
/// add costs one divide and one multiply-add of a big integer by a machine
/// word instead of a full big-rational reduction.
pub(crate) struct CommonDenomSums {
    denom: BigUint,
    slots: Vec<BigUint>,
}

impl CommonDenomSums {
    pub(crate) fn new(slots: usize) -> Self {
        CommonDenomSums {
            denom: BigUint::from(1u32),
            slots: vec![BigUint::zero(); slots],
        }
    }

    /// Grow the shared denominator so that `q` divides it, rescaling every
    /// slot by the same factor.
    fn ensure_divides(&mut self, q: u64) {
        let rem = (&self.denom % q).to_u64().expect("remainder fits u64");
        let g = if rem == 0 { q } else { gcd(rem, q) };
        let factor = q / g;
        if factor > 1 {
            self.denom *= factor;
            for s in &mut self.slots {
                *s *= factor;
            }
        }
    }

    /// Add `p/q` to slot `i` and return the scaled numerator that was added.
    pub(crate) fn add(&mut self, i: usize, p: u64, q: u64) -> BigUint {
        let g = gcd(p, q);
        let (p, q) = (p / g, q / g);
        self.ensure_divides(q);
        let delta = (&self.denom / q) * p;
        self.slots[i] += &delta;
        delta
    }

    /// Add a pre-scaled numerator to slot `i`.
    pub(crate) fn add_scaled(&mut self, i: usize, delta: &BigUint) {
        self.slots[i] += delta;
    }

    pub(crate) fn slots_equal(&self, i: usize, j: usize) -> bool {
        self.slots[i] == self.slots[j]
    }

    pub(crate) fn rational(&self, i: usize) -> ExactRational {
        BigRational::new(
            BigInt::from(self.slots[i].clone()),
            BigInt::from(self.denom.clone()),
        )
    }
}

/// Scan n = 1..=n_max checking `totient_sum_div3(n, Direct) ==
/// totient_sum_div3(n, Iterative)` at every n, in O(n_max log n_max) integer
/// work; returns the first failing n, or None when the identity holds
/// throughout.
pub fn totient_recurrence_first_failure(tables: &ArithTables, n_max: u64) -> Result<Option<u64>> {
    tables.check(n_max)?;
    let mut direct = 0u64;
    let mut iterative = 0u64;
    for n in 1..=n_max {
        // The iterative side is the expansion 2 * sum of Phi(floor(n/3^k));
        // level k gains the term totient(n/3^k) exactly when 3^k divides n.
        let mut step = 3u64;
        while n.is_multiple_of(step) {
            iterative += 2 * tables.totient[(n / step) as usize] as u64;
            step *= 3;
        }
        if n.is_multiple_of(3) {
            direct += tables.totient[n as usize] as u64;
        }
        if direct != iterative {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

/// Scan n = 1..=n_max checking `totient_ratio_sum_div3(n, Direct) ==
/// totient_ratio_sum_div3(n, Iterative)` at every n, exactly.
///
/// The check compares `3^K * Phi1(n,3)` with
/// `sum over k of 2 * 3^(K-k) * Phi1(floor(n/3^k))` over a shared
/// denominator, which is the fully expanded recurrence; recomputing both
/// sides from scratch at every n would be quadratic in n_max.
pub fn ratio_recurrence_first_failure(tables: &ArithTables, n_max: u64) -> Result<Option<u64>> {
    tables.check(n_max)?;
    let levels = ilog3(n_max) + 1; // 3^levels > n_max, so the expansion is complete
    let mut pow3 = vec![1u64; levels + 1];
    for k in 1..=levels {
        pow3[k] = pow3[k - 1] * 3;
    }
    // Slot 0: 3^K * Phi1(n, 3). Slot 1: the expanded iterative sum.
    let mut sums = CommonDenomSums::new(2);
    for n in 1..=n_max {
        for k in 1..=levels {
            if !n.is_multiple_of(pow3[k]) {
                break;
            }
            let m = n / pow3[k];
            let phi = tables.totient[m as usize] as u64;
            // Weight the fresh term phi(m)/m by 2 * 3^(K - k).
            let added = sums.add(1, phi, m);
            let weight = 2 * pow3[levels - k];
            sums.add_scaled(1, &(&added * (weight - 1)));
        }
        if n.is_multiple_of(3) {
            let phi = tables.totient[n as usize] as u64;
            let added = sums.add(0, phi, n);
            let weight = pow3[levels];
            sums.add_scaled(0, &(&added * (weight - 1)));
        }
        if !sums.slots_equal(0, 1) {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

fn ilog3(n: u64) -> usize {
    let mut k = 0;
    let mut v = n;
    while v >= 3 {
        v /= 3;
        k += 1;
    }
    k
}

/// Deterministic primality test for any 64-bit integer (Miller-Rabin with a
/// fixed witness set that is exhaustive for this range).
pub fn is_prime(n: u64) -> bool {
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for p in SMALL {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let d = (n - 1) >> (n - 1).trailing_zeros();
    let s = (n - 1).trailing_zeros();
    'witness: for a in SMALL {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}
