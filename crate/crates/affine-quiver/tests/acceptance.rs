//! Acceptance suite: golden quivers, the field law, brute-force equivalence,
//! structural invariants, representative independence and exactness gates.
//! Each test prints one PASS line; a failed assertion fails the criterion.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use affine_quiver::cli::check_invariants;
use affine_quiver::{
    affine_quiver, field_quiver, local_quiver, local_quiver_with_choices,
    oracle_quiver_with_report, FiniteRing, LocalQuiverInput, Quiver, RepresentativeChoices,
    TableFile, VertexLabel,
};

fn ring(spec: &str) -> FiniteRing {
    FiniteRing::parse(spec).unwrap()
}

fn arrows_of(q: &Quiver) -> Vec<((usize, usize), u32)> {
    q.arrows().collect()
}

fn dims_of(q: &Quiver) -> Vec<u64> {
    q.vertices().iter().map(|v| v.dim).collect()
}

/// F2[x,y]/(x,y)^2 as a table file: elements a + b x + c y indexed by
/// a + 2b + 4c, with x^2 = x y = y^2 = 0.
fn f2xy_table() -> TableFile {
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

#[test]
fn criterion_1_golden_quiver_z4() {
    let start = Instant::now();
    let q = affine_quiver(&ring("Z/4")).unwrap();
    assert_eq!(q.vertex_count(), 6);
    assert_eq!(dims_of(&q), vec![1, 1, 1, 2, 1, 1]);
    // Vertex 1 = (trivial orbit, trivial character), vertex 4 = (order-2
    // orbit, trivial character), vertex 3 = the 2-dimensional module.
    assert_eq!(
        arrows_of(&q),
        vec![((0, 4), 1), ((1, 1), 1), ((1, 4), 1), ((4, 3), 1)]
    );
    assert!(start.elapsed() < Duration::from_secs(1), "over 1 s");
    println!("PASS criterion 1: Z/4 golden quiver (6 vertices, 4 arrows, exact)");
}

#[test]
fn criterion_2_golden_quiver_z8() {
    let start = Instant::now();
    let q = affine_quiver(&ring("Z/8")).unwrap();
    assert_eq!(q.vertex_count(), 12);
    assert_eq!(dims_of(&q), vec![1, 1, 1, 1, 1, 4, 2, 2, 1, 1, 1, 1]);
    // Two loops; two parallel chains into the dimension-2 vertex, then the
    // dimension-4 one; one arrow from the trivial module.
    assert_eq!(
        arrows_of(&q),
        vec![
            ((0, 8), 1),
            ((1, 1), 1),
            ((1, 8), 1),
            ((3, 3), 1),
            ((3, 10), 1),
            ((6, 5), 1),
            ((8, 6), 1),
            ((10, 6), 1)
        ]
    );
    assert!(start.elapsed() < Duration::from_secs(1), "over 1 s");
    println!("PASS criterion 2: Z/8 golden quiver (12 vertices, 8 arrows, exact)");
}

#[test]
fn criterion_3_golden_quiver_z9() {
    let start = Instant::now();
    let q = affine_quiver(&ring("Z/9")).unwrap();
    assert_eq!(q.vertex_count(), 11);
    assert_eq!(dims_of(&q), vec![1, 1, 1, 1, 1, 1, 1, 6, 2, 2, 2]);
    // Loops at two 1-dimensional vertices, both feeding the induced vertex
    // (dimension 2 = index of the stabilizer), one arrow from the trivial
    // module into it, and one arrow from it into the dimension-6 vertex.
    assert_eq!(
        arrows_of(&q),
        vec![
            ((0, 8), 1),
            ((1, 1), 1),
            ((1, 8), 1),
            ((4, 4), 1),
            ((4, 8), 1),
            ((8, 7), 1)
        ]
    );
    assert_eq!(q.vertices()[8].dim, 2);
    assert_eq!(q.vertices()[7].dim, 6);
    assert!(start.elapsed() < Duration::from_secs(1), "over 1 s");
    println!("PASS criterion 3: Z/9 golden quiver (11 vertices, 6 arrows, exact)");
}

#[test]
fn criterion_4_golden_quiver_z6_tensor() {
    let start = Instant::now();
    let q = affine_quiver(&ring("Z/6")).unwrap();
    assert_eq!(q.vertex_count(), 12);
    assert_eq!(q.arrow_count(), 7);

    // Expected shape, built by hand from the two factor quivers: factor A
    // has vertices {C, a, I} with the arrow C -> I, factor B has vertices
    // {C, a, I2} (I2 of dimension 2) with the arrow C -> I2. Vertex (i, j)
    // is 4i + j; every A-arrow crosses each B-vertex and vice versa.
    let mut expected = Quiver::new(
        (0..12)
            .map(|v| VertexLabel::simple(v, 0, [1, 1, 1, 2][v % 4]))
            .collect(),
    );
    for j in 0..4 {
        expected.add_arrow(j, 8 + j, 1);
    }
    for i in 0..3 {
        expected.add_arrow(4 * i, 4 * i + 3, 1);
    }
    assert!(q.isomorphic(&expected), "Z/6 quiver shape mismatch");
    assert!(start.elapsed() < Duration::from_secs(1), "over 1 s");
    println!("PASS criterion 4: Z/6 tensor quiver (12 vertices, 7 arrows, isomorphic)");
}

#[test]
fn criterion_5_field_law() {
    let start = Instant::now();
    for q in [2usize, 3, 4, 5, 7, 8, 9] {
        let f = ring(&format!("GF({q})"));
        let quiver = field_quiver(&f).unwrap();
        assert_eq!(quiver.vertex_count(), q + 1, "GF({q})");
        assert_eq!(quiver.arrow_count(), 1, "GF({q})");
        let ((src, dst), mult) = quiver.arrows().next().unwrap();
        assert_eq!(src, 0, "GF({q})");
        assert_eq!(mult, 1, "GF({q})");
        assert_eq!(quiver.vertices()[dst].dim, (q - 1) as u64, "GF({q})");
        assert_eq!(quiver, affine_quiver(&f).unwrap());
    }
    assert!(start.elapsed() < Duration::from_secs(1), "over 1 s total");
    println!("PASS criterion 5: field law for q in {{2,3,4,5,7,8,9}}");
}

/// The brute-force ring set: every modular and field case plus the
/// non-chain table ring, the latter exercising the table-file interface.
fn oracle_suite() -> Vec<(String, FiniteRing)> {
    let mut out: Vec<(String, FiniteRing)> = [
        "Z/4", "Z/8", "Z/9", "Z/16", "Z/25", "Z/27", "GF(4)", "GF(8)",
    ]
    .iter()
    .map(|s| (s.to_string(), ring(s)))
    .collect();
    let dir = std::env::temp_dir().join(format!("affq-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("f2xy.json");
    std::fs::write(&path, serde_json::to_string(&f2xy_table()).unwrap()).unwrap();
    let spec = format!("table:{}", path.display());
    out.push(("F2[x,y]/(x,y)^2".into(), ring(&spec)));
    out
}

#[test]
fn criterion_6_oracle_equivalence() {
    let start = Instant::now();
    for (name, r) in oracle_suite() {
        let closed = local_quiver(&r).unwrap();
        let (brute, _) = oracle_quiver_with_report(&r).unwrap();
        assert!(
            brute == closed || brute.isomorphic(&closed),
            "{name}: brute force disagrees with the closed form\nclosed: {}\nbrute: {}",
            closed.to_json(),
            brute.to_json()
        );
    }
    assert!(
        start.elapsed() < Duration::from_secs(600),
        "over the 10 minute budget"
    );
    println!("PASS criterion 6: brute-force equivalence on all 9 rings");
}

#[test]
fn criterion_7_structural_invariants() {
    let mut suite: Vec<FiniteRing> = oracle_suite().into_iter().map(|(_, r)| r).collect();
    for spec in ["Z/2", "Z/3", "GF(5)", "GF(7)", "GF(9)", "Z/6", "Z/12", "Z/4 x Z/2"] {
        suite.push(ring(spec));
    }
    for r in &suite {
        let decomposition = r.local_decomposition();
        let factor_quivers: Vec<Quiver> = decomposition
            .factors
            .iter()
            .map(|f| local_quiver(f).unwrap())
            .collect();
        let mut composite = factor_quivers[0].clone();
        for q in &factor_quivers[1..] {
            composite = composite.tensor(q);
        }
        check_invariants(&decomposition.factors, &factor_quivers, &composite)
            .unwrap_or_else(|e| panic!("{}: {e}", r.describe()));
    }
    println!("PASS criterion 7: structural invariants on every produced quiver");
}

#[test]
fn criterion_8_representative_independence() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for spec in ["Z/4", "Z/8", "Z/9", "Z/6"] {
        let r = ring(spec);
        let decomposition = r.local_decomposition();
        let canonical: Vec<Quiver> = decomposition
            .factors
            .iter()
            .map(|f| local_quiver(f).unwrap())
            .collect();
        for _trial in 0..20 {
            for (factor, expected) in decomposition.factors.iter().zip(canonical.iter()) {
                let input = LocalQuiverInput::new(factor).unwrap();
                let choices = RepresentativeChoices {
                    orbit_member: input
                        .orbits
                        .orbits
                        .iter()
                        .map(|o| rng.gen_range(0..o.len()))
                        .collect(),
                    class_unit: (0..input.data.associate_reps.len())
                        .map(|_| rng.gen_range(0..input.data.units.len()))
                        .collect(),
                };
                let randomized = local_quiver_with_choices(factor, &choices).unwrap();
                assert_eq!(
                    randomized,
                    *expected,
                    "{spec}: arrow multiset changed under choices {choices:?}"
                );
            }
        }
    }
    println!("PASS criterion 8: 20 randomized representative trials per golden ring");
}

#[test]
fn criterion_9_exactness_gates() {
    let mut traces = 0u64;
    let mut mults = 0u64;
    let mut worst = 0.0f64;
    for (name, r) in oracle_suite() {
        let (_, report) = oracle_quiver_with_report(&r).unwrap();
        assert!(
            report.max_integrality_deviation <= 1e-6,
            "{name}: deviation {}",
            report.max_integrality_deviation
        );
        assert!(report.traces_computed > 0, "{name}");
        assert!(report.multiplicities_checked > 0, "{name}");
        traces += report.traces_computed;
        mults += report.multiplicities_checked;
        worst = worst.max(report.max_integrality_deviation);
    }
    println!(
        "PASS criterion 9: {traces} traces integral, {mults} multiplicities within {worst:.2e} of integers"
    );
}
