//! Exact counting of prime and coprime integer triples on the surface
//! `z0^2 - z1^2 + z2^2 - z0*z2 = 0` — the eigensurface cut out by the joint
//! characteristic polynomial of an irreducible representation of the
//! symmetric group on three letters — and in the ambient cuboid
//! `1 <= z0 <= 6N/5, 1 <= z1 <= N, 1 <= z2 <= 6N/5`.
//!
//! A triple is *coprime* when the gcd of its three coordinates is 1, and
//! *prime* when it is coprime and at least one coordinate is a prime number.
//! The library counts both kinds of triples exactly (never by floating-point
//! approximation), on the surface and off it, and reports the resulting
//! densities: the headline quantity is the ratio of the surface prime density
//! to the ambient prime density, which stays a few tenths of a percent above
//! 1 as `N` grows.
//!
//! Every fast counter is paired with a brute-force oracle so the whole stack
//! can be re-verified bit for bit at small scale (`verify` subcommand, or the
//! `acceptance` integration test).
//!
//! ## Modules
//!
//! - [`arith`] — linear sieve (Moebius, totient, smallest prime factor,
//!   primes), deterministic 64-bit primality, prime counts in arithmetic
//!   progressions, coprime counting by divisor inclusion-exclusion, and the
//!   totient partial sums with their division-by-3 recurrences.
//! - [`surface`] — the quadratic form, its dihedral characteristic-polynomial
//!   generator, the coprime parameterization of the surface and its inverse,
//!   and exhaustive enumeration of coprime surface points.
//! - [`regions`] — exact coprime lattice counts in triangular regions with
//!   rational slopes, with and without congruence restrictions.
//! - [`counting`] — the four headline counts (box/surface, coprime/prime),
//!   the planar baseline, and brute-force oracles for all of them.
//! - [`density`] — zeta values, the table of limit constants, and density
//!   sweeps over ranges of `N`.
//! - [`cli`] — the batch command-line front end (`count`, `sweep`, `verify`,
//!   `regions`, `classify`, `enumerate`, `charpoly`, `constants`).
//!
//! ## Examples directory
//!
//! Each major capability has a runnable example:
//!
//! ```text
//! cargo run --release --example constants            # limit constants table
//! cargo run --release --example enumerate_surface    # coprime surface points
//! cargo run --release --example classify_triples     # invert the parameterization
//! cargo run --release --example characteristic_polynomial
//! cargo run --release --example triangle_regions     # coprime counts vs area law
//! cargo run --release --example coprime_box_mod_p    # p/(p+1) * 6/pi^2 law
//! cargo run --release --example totient_recurrences  # Phi(N,3), Phi1(N,3)
//! cargo run --release --example count_triples        # box vs surface counts
//! cargo run --release --example surface_sandwich     # two-sided region bounds
//! cargo run --release --example plane_baseline       # the z2 = 0 comparison
//! cargo run --release --example density_sweep        # headline density ratio
//! ```
//!
//! The thin `eigenprime` binary exposes the same operations in batch form;
//! see the README for the subcommand grammar.

pub mod arith;
pub mod cli;
pub mod counting;
pub mod density;
mod error;
pub mod regions;
pub mod surface;

pub use error::{Error, Result};

/// Which route a counting operation should take.
///
/// `Fast` is the production path (sieve-backed, no scanning); `Brute` is the
/// definitional scan used as an oracle at small sizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Fast,
    Brute,
}
