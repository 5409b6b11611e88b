//! A finite commutative ring splits into local factors, and the quiver of
//! the product is the tensor of the factor quivers: vertices multiply, and
//! each arrow of one factor crosses each vertex of the other.
//!
//! Run with: cargo run --example product_ring_tensor

use affine_quiver::{affine_quiver, local_quiver, FiniteRing};

fn main() {
    let z6 = FiniteRing::parse("Z/6").unwrap();
    let decomposition = z6.local_decomposition();
    println!("Z/6 splits into:");
    let mut quivers = Vec::new();
    for factor in &decomposition.factors {
        let q = local_quiver(factor).unwrap();
        println!(
            "  {}: {} vertices, {} arrows",
            factor.describe(),
            q.vertex_count(),
            q.arrow_count()
        );
        quivers.push(q);
    }

    let combined = affine_quiver(&z6).unwrap();
    let (a, b) = (&quivers[0], &quivers[1]);
    println!();
    println!(
        "tensor: {} x {} = {} vertices",
        a.vertex_count(),
        b.vertex_count(),
        combined.vertex_count()
    );
    println!(
        "        {} x {} + {} x {} = {} arrows",
        a.arrow_count(),
        b.vertex_count(),
        a.vertex_count(),
        b.arrow_count(),
        combined.arrow_count()
    );
    println!();
    println!("{combined}");
}
