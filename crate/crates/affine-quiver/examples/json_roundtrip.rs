//! Serialize a quiver to JSON and parse it back losslessly. The schema is
//! {"vertices":[{"id","label","dim"}],"arrows":[{"src","dst","mult"}]}.
//!
//! Run with: cargo run --example json_roundtrip

use affine_quiver::{affine_quiver, FiniteRing, Quiver};

fn main() {
    let ring = FiniteRing::parse("Z/4 x Z/3").unwrap();
    let quiver = affine_quiver(&ring).unwrap();
    let json = quiver.to_json();
    println!("{json}");

    let parsed = Quiver::from_json(&json).unwrap();
    assert_eq!(parsed, quiver);
    println!();
    println!(
        "round-trip ok: {} vertices, {} arrows",
        parsed.vertex_count(),
        parsed.arrow_count()
    );
}
