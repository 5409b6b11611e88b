//! Gabriel quivers of complex algebras of affine monoids.
//!
//! The affine monoid of a finite commutative unital ring R is the monoid of
//! all maps `x -> ax + b` on R under composition. This crate computes the
//! quiver of its complex monoid algebra along two independent routes:
//!
//! * a closed form driven by character theory: rings split into local
//!   factors, each local factor's quiver is assembled from the orbits of the
//!   unit group on additive characters, and factors recombine through the
//!   tensor-product quiver construction;
//! * a brute-force route that builds the monoid explicitly, computes Green's
//!   relations, and counts arrows as multiplicities of irreducible
//!   constituents in a submodule of a permutation module, using exact
//!   rational linear algebra.
//!
//! The two routes agree on every supported input; the CLI flag `--oracle`
//! (and the `oracle_cross_check` example) exposes the comparison.
//!
//! See the `examples/` directory for one runnable example per capability.

pub mod characters;
pub mod cli;
pub mod error;
pub mod local;
pub mod monoid;
pub mod oracle;
pub mod quiver;
pub mod qz;
pub mod ring;

mod abelian;
mod linalg;

pub use characters::{
    act, additive_characters, kernel_contains, orbits, restrict, subgroup_characters,
    AdditiveCharacter, CharacterOrbits, GroupCharacter, OrbitDatum, UnitSubgroup,
};
pub use error::Error;
pub use local::{
    affine_quiver, arrows_between_simples, field_quiver, local_quiver,
    local_quiver_with_choices, trivial_arrow_target, vertex_labels, LocalQuiverInput,
    RepresentativeChoices,
};
pub use monoid::{
    build_aff, check_r_trivial_idempotent_submonoid, green_data, FiniteMonoid, GreenData,
};
pub use oracle::{
    arrow_count, arrow_module, group_irreducibles, oracle_quiver, oracle_quiver_with_report,
    ArrowModule, InducedCharacter, OracleReport, ORACLE_MONOID_LIMIT,
};
pub use quiver::{Quiver, VertexKind, VertexLabel};
pub use qz::Qz;
pub use ring::{Decomposition, FiniteRing, LocalData, RingElem, TableFile};

#[cfg(test)]
pub(crate) mod test_support {
    use crate::ring::TableFile;

    /// F2[x,y]/(x,y)^2 as an order-8 table: elements a + b x + c y indexed
    /// by a + 2b + 4c, with x^2 = x y = y^2 = 0.
    pub fn f2xy_table() -> TableFile {
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
}
