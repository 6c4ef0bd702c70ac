//! The headline measurement: the surface prime density stays above the
//! cuboid prime density, so the surface meets primes more often. Pass a
//! maximum N as an argument to push the sweep further (default 10^6; 10^7
//! reproduces the full desk-scale run and needs ~150 MB of sieve tables).

use eigenprime::arith::ArithTables;
use eigenprime::density::{constants, sweep};
use eigenprime::Method;

fn main() {
    let max_n: u64 = std::env::args()
        .nth(1)
        .map(|a| a.parse().expect("numeric max N"))
        .unwrap_or(1_000_000);
    let mut ns = vec![10_000u64];
    while *ns.last().unwrap() * 10 <= max_n {
        ns.push(ns.last().unwrap() * 10);
    }
    let tables = ArithTables::build(6 * max_n / 5).unwrap();
    let samples = sweep(&tables, &ns, Method::Fast).unwrap();

    let c = constants();
    println!(
        "{:>9} {:>10} {:>10} {:>11} {:>11} {:>8}",
        "N", "p_plus", "p_s", "p+*logN", "ps*logN", "ratio"
    );
    for s in &samples {
        println!(
            "{:>9} {:>10.6} {:>10.6} {:>11.5} {:>11.5} {:>8.5}",
            s.n,
            s.p_plus,
            s.p_s,
            s.p_plus_log_n,
            s.p_s_log_n,
            s.ratio.unwrap()
        );
    }
    println!(
        "\np+*logN tends to 3 zeta(3) = {:.4}; ps*logN is bounded by ({:.4}, {:.4});",
        c.three_zeta3, c.lower_norm, c.upper_norm
    );
    println!(
        "the ratio stays above 1 (asymptotic window [{:.4}, {:.4}])",
        c.liminf_bound, c.limsup_bound
    );
}
