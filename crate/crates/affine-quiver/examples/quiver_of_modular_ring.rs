//! Compute the quiver of the affine monoid of Z/8 and walk through what the
//! vertices and arrows mean.
//!
//! Run with: cargo run --example quiver_of_modular_ring

use affine_quiver::{affine_quiver, orbits, FiniteRing};

fn main() {
    let ring = FiniteRing::parse("Z/8").unwrap();
    let quiver = affine_quiver(&ring).unwrap();

    println!("ring: {}", ring.describe());
    println!();

    // Vertices are the simple modules: the trivial one, plus one per pair
    // (orbit of the unit group on additive characters, character of the
    // orbit's stabilizer). The dimension of W(Ok,rj) is the size of orbit k.
    let orbit_data = orbits(&ring).unwrap();
    for o in &orbit_data.orbits {
        println!(
            "orbit O{}: {} character(s), stabilizer of order {}",
            o.orbit_id,
            o.len(),
            o.stabilizer.len()
        );
    }
    println!();
    println!("{quiver}");
}
