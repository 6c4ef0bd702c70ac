//! For a prime p, the density of coprime pairs with m != n (mod p) in a
//! large box tends to p/(p+1) * 6/pi^2.

use eigenprime::arith::ArithTables;
use eigenprime::regions::count_coprime_box_modp;
use eigenprime::Method;

fn main() {
    let size = 10_000u64;
    let tables = ArithTables::build(size).unwrap();
    let pi2 = std::f64::consts::PI * std::f64::consts::PI;
    println!("box [1, {size}]^2");
    println!(
        "{:>3} {:>12} {:>10} {:>10} {:>9}",
        "p", "count", "density", "limit", "rel.err"
    );
    for p in [2u64, 3, 5, 7, 11] {
        let count = count_coprime_box_modp(&tables, size, p, Method::Fast).unwrap();
        let density = count as f64 / (size as f64 * size as f64);
        let limit = p as f64 / (p as f64 + 1.0) * 6.0 / pi2;
        println!(
            "{p:>3} {count:>12} {density:>10.6} {limit:>10.6} {:>9.5}",
            (density - limit).abs() / limit
        );
    }
}
