//! Build F2[x,y]/(x,y)^2 as an explicit table ring and compute its quiver.
//!
//! This ring is local but its maximal ideal is not principal: the classes of
//! associates in m \ m^2 are {x}, {y} and {x+y}. Each class contributes a
//! loop at the vertex of the trivial character, and different classes can
//! reach the same target, which is exactly how multiple edges arise.
//!
//! Run with: cargo run --example custom_table_ring

use affine_quiver::{local_quiver, FiniteRing, LocalQuiverInput, TableFile};

/// Elements a + b x + c y encoded as a + 2b + 4c over F2.
fn f2xy() -> TableFile {
    let split = |i: usize| (i & 1, (i >> 1) & 1, (i >> 2) & 1);
    let join = |a: usize, b: usize, c: usize| a | (b << 1) | (c << 2);
    let mut add = vec![vec![0usize; 8]; 8];
    let mut mul = vec![vec![0usize; 8]; 8];
    for i in 0..8 {
        for j in 0..8 {
            let (a1, b1, c1) = split(i);
            let (a2, b2, c2) = split(j);
            add[i][j] = join(a1 ^ a2, b1 ^ b2, c1 ^ c2);
            mul[i][j] = join(a1 & a2, (a1 & b2) ^ (a2 & b1), (a1 & c2) ^ (a2 & c1));
        }
    }
    TableFile {
        order: 8,
        zero: 0,
        one: 1,
        add,
        mul,
    }
}

fn main() {
    let ring = FiniteRing::from_tables(&f2xy()).unwrap();
    let data = ring.local_data().unwrap();
    println!("order {} local ring, maximal ideal of size {}", ring.order(), data.maximal_ideal.len());
    println!(
        "classes of associates in m \\ m^2: {:?}",
        data.associate_classes
    );

    let quiver = local_quiver(&ring).unwrap();
    let input = LocalQuiverInput::new(&ring).unwrap();
    let v = input.vertex_index(0, 0);
    println!();
    println!("{quiver}");
    println!();
    println!(
        "loops at the trivial-character vertex: {} (one per associate class)",
        quiver.multiplicity(v, v)
    );
    let multi: Vec<_> = quiver.arrows().filter(|&(_, m)| m > 1).collect();
    println!("arrows of multiplicity > 1: {multi:?}");
}
