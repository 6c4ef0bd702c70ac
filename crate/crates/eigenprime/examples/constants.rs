//! Print the limit constants that every density measurement is compared
//! against, next to their familiar 4-decimal values.

use eigenprime::density::constants;

fn main() {
    let c = constants();
    let rows = [
        ("zeta(2)", c.zeta2, "pi^2 / 6"),
        ("zeta(3)", c.zeta3, "Apery's constant"),
        ("3 zeta(3)", c.three_zeta3, "cuboid prime density * log N"),
        ("lower norm", c.lower_norm, "pi^2 / (12 (3-sqrt6)(sqrt2-1))"),
        ("upper norm", c.upper_norm, "2 sqrt3 pi^2 / 9"),
        ("liminf bound", c.liminf_bound, "lower norm / 3 zeta(3)"),
        ("limsup bound", c.limsup_bound, "upper norm / 3 zeta(3)"),
        ("ys lower", c.ys_lower, "3 sqrt3 / pi^2"),
        ("ys upper", c.ys_upper, "24 (3-sqrt6)(sqrt2-1) / pi^2"),
        ("plane ratio", c.plane_ratio, "2 zeta(2) / (3 zeta(3))"),
    ];
    println!("{:<14} {:>16} {:>9}  meaning", "constant", "value", "(4 d.p.)");
    for (name, value, meaning) in rows {
        println!("{name:<14} {value:>16.12} {value:>9.4}  {meaning}");
    }
}
