//! Over a finite field F the quiver is as simple as it gets: q + 1 vertices
//! and a single arrow, from the trivial module to the (q - 1)-dimensional
//! simple. Since there is no path of length 2, the algebra is hereditary.
//!
//! Run with: cargo run --example finite_field_quiver

use affine_quiver::{field_quiver, FiniteRing};

fn main() {
    for q in [2usize, 3, 4, 5, 7, 8, 9] {
        let field = FiniteRing::parse(&format!("GF({q})")).unwrap();
        let quiver = field_quiver(&field).unwrap();
        let ((src, dst), _) = quiver.arrows().next().unwrap();
        println!(
            "GF({q}): {} vertices, 1 arrow {} -> {} (dim {} target)",
            quiver.vertex_count(),
            quiver.vertices()[src].label(),
            quiver.vertices()[dst].label(),
            quiver.vertices()[dst].dim
        );
    }
}
