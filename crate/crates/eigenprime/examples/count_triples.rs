//! The four headline counts: coprime and prime triples, in the cuboid and on
//! the surface, with the fast counters checked against the brute-force
//! oracle at small N.

use eigenprime::arith::ArithTables;
use eigenprime::counting::{brute_force_counts, count_report};
use eigenprime::Method;

fn main() {
    let tables = ArithTables::build(1_300_000).unwrap();

    let n = 200;
    let fast = count_report(&tables, n, Method::Fast).unwrap();
    let brute = brute_force_counts(n).unwrap();
    println!("N = {n}:");
    println!("  fast : x+ = {:>9}, y+ = {:>9}, xs = {:>3}, ys = {:>3}", fast.x_plus, fast.y_plus, fast.xs, fast.ys);
    println!("  brute: x+ = {:>9}, y+ = {:>9}, xs = {:>3}, ys = {:>3}", brute.x_plus, brute.y_plus, brute.xs, brute.ys);
    assert_eq!((fast.x_plus, fast.y_plus, fast.xs, fast.ys),
               (brute.x_plus, brute.y_plus, brute.xs, brute.ys));

    println!("\nfast counts at scale:");
    println!(
        "{:>9} {:>22} {:>22} {:>9} {:>9}",
        "N", "x_plus", "y_plus", "xs", "ys"
    );
    for n in [1_000u64, 10_000, 100_000, 1_000_000] {
        let r = count_report(&tables, n, Method::Fast).unwrap();
        println!(
            "{n:>9} {:>22} {:>22} {:>9} {:>9}",
            r.x_plus, r.y_plus, r.xs, r.ys
        );
    }
    println!("(y_plus grows like (36 / 25 zeta(3)) N^3; ys like (sqrt(3)/pi) N)");
}
