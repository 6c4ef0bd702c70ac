//! The comparison plane z2 = 0: its prime density ratio against the cuboid
//! drifts toward 2 zeta(2) / (3 zeta(3)) < 1, the opposite behavior to the
//! counting surface.

use eigenprime::arith::ArithTables;
use eigenprime::counting::{count_x_plus, count_y_plus, plane_baseline_counts};
use eigenprime::density::constants;
use eigenprime::Method;

fn main() {
    let tables = ArithTables::build(1_300_000).unwrap();
    let limit = constants().plane_ratio;
    println!("{:>9} {:>14} {:>16} {:>10} {:>10}", "N", "xa", "ya", "ratio", "limit");
    for n in [10_000u64, 100_000, 1_000_000] {
        let (xa, ya) = plane_baseline_counts(&tables, n).unwrap();
        let x = count_x_plus(&tables, n, Method::Fast).unwrap();
        let y = count_y_plus(&tables, n, Method::Fast).unwrap();
        let ratio = (xa as f64 / ya as f64) / (x as f64 / y as f64);
        println!("{n:>9} {xa:>14} {ya:>16} {ratio:>10.6} {limit:>10.6}");
    }
}
