//! Two-sided verification of the surface pair count: exact counts over
//! rational-slope triangles that provably sit inside / jointly cover the
//! elliptical parameter region pin W(N) from both sides.

use eigenprime::arith::ArithTables;
use eigenprime::counting::surface_pair_sandwich;

fn main() {
    let tables = ArithTables::build(10_000).unwrap();
    println!(
        "{:>9} {:>10} {:>10} {:>10} {:>8} {:>8}",
        "N", "lower", "W(N)", "upper", "lo/W", "up/W"
    );
    for n in [1_000u64, 10_000, 100_000, 1_000_000, 10_000_000] {
        let s = surface_pair_sandwich(&tables, n).unwrap();
        assert!(s.lower <= s.pairs && s.pairs <= s.upper);
        println!(
            "{n:>9} {:>10} {:>10} {:>10} {:>8.4} {:>8.4}",
            s.lower,
            s.pairs,
            s.upper,
            s.lower as f64 / s.pairs as f64,
            s.upper as f64 / s.pairs as f64
        );
    }
    println!("\nevery row satisfies lower <= W(N) <= upper by construction of the bounds");
}
