//! The data behind the vertex set: additive characters of Z/8, the orbits of
//! the unit group on them, stabilizers and stabilizer characters — all in
//! exact arithmetic over Q/Z.
//!
//! Run with: cargo run --example character_orbits

use affine_quiver::{orbits, FiniteRing, RingElem};

fn main() {
    let ring = FiniteRing::parse("Z/8").unwrap();
    let data = orbits(&ring).unwrap();

    println!("characters of (Z/8, +), grouped into unit-group orbits:");
    for orbit in &data.orbits {
        let rep = data.representative(orbit.orbit_id);
        println!(
            "orbit O{}: size {}, representative sends 1 to {}",
            orbit.orbit_id,
            orbit.len(),
            rep.value(RingElem(1))
        );
        let stab: Vec<String> = orbit
            .stabilizer
            .elements()
            .iter()
            .map(|u| u.to_string())
            .collect();
        println!("  stabilizer {{{}}}", stab.join(", "));
        for (j, rho) in orbit.stabilizer_characters.iter().enumerate() {
            let values: Vec<String> = orbit
                .stabilizer
                .elements()
                .iter()
                .map(|&u| format!("{}", rho.value(u)))
                .collect();
            println!("  r{j}: ({})", values.join(", "));
        }
    }
}
