//! Exact coprime pair counts in triangular regions, against the area law
//! (6/pi^2 per unit area) and the 3/4 share of pairs with m != n (mod 3).

use eigenprime::arith::ArithTables;
use eigenprime::regions::{asymptotic_prediction, count_region, count_region_cut, TriangleRegion};
use eigenprime::Method;
use num_rational::Rational64;

fn main() {
    let tables = ArithTables::build(200_000).unwrap();
    let r = Rational64::new;

    println!("T(M, 1, -1): rows n = 1..M/2, columns ceil(n) .. floor(M - n)");
    println!(
        "{:>7} {:>12} {:>12} {:>9} {:>9}",
        "M", "coprime", "predicted", "rel.err", "mod3 share"
    );
    for m in [100i64, 1_000, 10_000, 100_000] {
        let region = TriangleRegion::new(m, r(1, 1), r(-1, 1)).unwrap();
        let count = count_region(&tables, &region, Method::Fast).unwrap();
        let (predicted, _) = asymptotic_prediction(&region);
        println!(
            "{m:>7} {:>12} {predicted:>12.0} {:>9.5} {:>9.5}",
            count.total_coprime,
            (count.total_coprime as f64 - predicted).abs() / predicted,
            count.coprime_mod3_distinct as f64 / count.total_coprime as f64,
        );
    }

    println!("\ncut region T(M, 1, -1, 2) (clipped below m = 2n):");
    println!(
        "{:>7} {:>12} {:>12} {:>9}",
        "M", "coprime", "predicted", "rel.err"
    );
    for m in [100i64, 1_000, 10_000] {
        let region = TriangleRegion::with_cut(m, r(1, 1), r(-1, 1), r(2, 1)).unwrap();
        let count = count_region_cut(&tables, &region, Method::Fast).unwrap();
        let (predicted, _) = asymptotic_prediction(&region);
        println!(
            "{m:>7} {:>12} {predicted:>12.0} {:>9.5}",
            count.total_coprime,
            (count.total_coprime as f64 - predicted).abs() / predicted,
        );
    }

    let small = TriangleRegion::new(500, r(2, 7), r(-5, 3)).unwrap();
    let fast = count_region(&tables, &small, Method::Fast).unwrap();
    let brute = count_region(&tables, &small, Method::Brute).unwrap();
    println!("\nfast vs brute on T(500, 2/7, -5/3): {fast:?} == {brute:?}: {}", fast == brute);
}
