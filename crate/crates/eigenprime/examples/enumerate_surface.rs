//! List every coprime surface point with z1 <= 50, then show how the count
//! grows linearly in N (one isolated point plus four points per parameter
//! pair).

use eigenprime::surface::enumerate_coprime_solutions;

fn main() {
    println!("coprime surface points with z1 <= 50:");
    println!("{:>8} {:>4} {:>4}   point", "family", "m", "n");
    for (tag, pair, z) in enumerate_coprime_solutions(50).unwrap() {
        match pair {
            Some(p) => println!("{:>8} {:>4} {:>4}   {}", tag.name(), p.m, p.n, z),
            None => println!("{:>8}    -    -   {}", tag.name(), z),
        }
    }

    println!("\ncount growth:");
    println!("{:>10} {:>10} {:>12}", "N", "points", "points/N");
    for n in [10u64, 100, 1_000, 10_000, 100_000] {
        let count = enumerate_coprime_solutions(n).unwrap().count();
        println!("{n:>10} {count:>10} {:>12.6}", count as f64 / n as f64);
    }
    println!("(the density settles near sqrt(3)/pi = {:.6})", 3.0f64.sqrt() / std::f64::consts::PI);
}
