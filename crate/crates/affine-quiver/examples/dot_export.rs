//! Export a quiver as DOT for rendering with graphviz. Multiplicities
//! become parallel edges and the output is byte-deterministic.
//!
//! Run with: cargo run --example dot_export > z9.dot && dot -Tpdf z9.dot

use affine_quiver::{affine_quiver, FiniteRing};

fn main() {
    let ring = FiniteRing::parse("Z/9").unwrap();
    let quiver = affine_quiver(&ring).unwrap();
    print!("{}", quiver.to_dot());
}
