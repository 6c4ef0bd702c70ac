//! The division-by-3 recurrences for the totient partial sums:
//! Phi(N,3) = 2 Phi(N/3) + Phi(N/3, 3) in integers, and
//! Phi1(N,3) = (2/3) Phi1(N/3) + (1/3) Phi1(N/3, 3) in exact rationals.

use eigenprime::arith::{
    ratio_recurrence_first_failure, totient_recurrence_first_failure, ArithTables, SumMethod,
};

fn main() {
    let tables = ArithTables::build(100_000).unwrap();

    println!("{:>8} {:>14} {:>14}", "N", "direct", "iterative");
    for n in [10u64, 100, 1_000, 10_000, 100_000] {
        let direct = tables.totient_sum_div3(n, SumMethod::Direct).unwrap();
        let iterative = tables.totient_sum_div3(n, SumMethod::Iterative).unwrap();
        println!("{n:>8} {direct:>14} {iterative:>14}");
        assert_eq!(direct, iterative);
    }

    println!("\nexact rational ratio sums over multiples of 3:");
    for n in [9u64, 100, 1_000] {
        let direct = tables.totient_ratio_sum_div3(n, SumMethod::Direct).unwrap();
        let iterative = tables
            .totient_ratio_sum_div3(n, SumMethod::Iterative)
            .unwrap();
        assert_eq!(direct, iterative);
        let digits = direct.denom().to_string().len();
        println!("  N = {n:>5}: both methods give the same rational ({digits}-digit denominator)");
    }
    let small = tables.totient_ratio_sum_div3(9, SumMethod::Direct).unwrap();
    println!("  N = 9 exactly: {small}");

    println!("\nfull scans (None means the identity held at every N):");
    println!(
        "  integers  up to 10^5: {:?}",
        totient_recurrence_first_failure(&tables, 100_000).unwrap()
    );
    println!(
        "  rationals up to 10^5: {:?}",
        ratio_recurrence_first_failure(&tables, 100_000).unwrap()
    );
}
