//! Inspect the affine monoid of Z/4 directly: its composition law, its
//! idempotents and its Green's relation structure.
//!
//! Run with: cargo run --example green_relations

use affine_quiver::{build_aff, green_data, FiniteRing};

fn main() {
    let ring = FiniteRing::parse("Z/4").unwrap();
    let monoid = build_aff(&ring);
    println!(
        "Aff(Z/4): {} elements (maps ax + b), identity = x",
        monoid.order()
    );

    let green = green_data(&monoid);
    println!(
        "R-classes: {}, L-classes: {}, J-classes: {}",
        green.r_classes.len(),
        green.l_classes.len(),
        green.j_classes.len()
    );

    println!("idempotents ({}):", green.idempotents.len());
    for &e in &green.idempotents {
        let (a, b) = monoid.label(e as usize).unwrap();
        println!("  {a}x + {b}");
    }

    // The regular J-classes are the unit group and the constant maps.
    println!("regular J-classes:");
    for &j in &green.regular_j {
        let class = &green.j_classes[j as usize];
        let (a, b) = monoid.label(class[0] as usize).unwrap();
        println!("  size {:2}, e.g. {a}x + {b}", class.len());
    }
}
