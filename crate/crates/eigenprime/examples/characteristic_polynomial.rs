//! Expand det(z0 I + z1 R(a) + z2 R(at)) for the dihedral rotation pair at a
//! few angles. At 120 degrees the coefficients are exactly those of the
//! counting surface; at most other angles the cross coefficient 2 cos(theta)
//! is irrational and the surface holds no interesting integer points.

use eigenprime::surface::dihedral_char_poly;

fn main() {
    println!("{:>9}  {:>6} {:>6} {:>6} {:>12}", "angle", "z0^2", "z1^2", "z2^2", "z0*z2");
    for deg in [120.0f64, 90.0, 72.0, 60.0, 45.0, 30.0] {
        let p = dihedral_char_poly(deg.to_radians());
        println!(
            "{deg:>8.1}  {:>6.3} {:>6.3} {:>6.3} {:>12.9}",
            p.c00, p.c11, p.c22, p.c02
        );
    }
    let s3 = dihedral_char_poly(120.0f64.to_radians());
    println!(
        "\n120 degrees reproduces z0^2 - z1^2 + z2^2 - z0*z2 with residual {:.2e}",
        (s3.c00 - 1.0)
            .abs()
            .max((s3.c11 + 1.0).abs())
            .max((s3.c22 - 1.0).abs())
            .max((s3.c02 + 1.0).abs())
    );
}
