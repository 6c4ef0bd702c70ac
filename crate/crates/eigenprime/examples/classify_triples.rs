//! Invert the surface parameterization: recover the family and parameter
//! pair of some coprime surface points, including a round trip through all
//! four maps.

use eigenprime::surface::{classify, phi_map, Triple};

fn main() {
    for z in [
        Triple::new(1, 1, 1),
        Triple::new(8, 7, 5),
        Triple::new(5, 7, 8),
        Triple::new(8, 7, 3),
        Triple::new(3, 7, 8),
        Triple::new(21, 19, 16),
        phi_map(2, 571, 123).unwrap(),
    ] {
        let (tag, pair) = classify(z).unwrap();
        match pair {
            Some(p) => println!("{z} -> {} with (m, n) = ({}, {})", tag.name(), p.m, p.n),
            None => println!("{z} -> {} (the equilateral point)", tag.name()),
        }
    }

    println!("\nround trip through every family at (m, n) = (44, 7):");
    for k in 1..=4u8 {
        let z = phi_map(k, 44, 7).unwrap();
        let (tag, pair) = classify(z).unwrap();
        println!("  phi_{k}(44, 7) = {z} -> {} {:?}", tag.name(), pair.unwrap());
    }

    println!("\npoints off the surface or with a common factor are rejected:");
    println!("  (5, 0, 6): {:?}", classify(Triple::new(5, 0, 6)).unwrap_err());
    println!("  (16, 14, 10): {:?}", classify(Triple::new(16, 14, 10)).unwrap_err());
}
