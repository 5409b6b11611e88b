//! Closed-form quiver of the complex algebra of the affine monoid of a local
//! ring, and the tensor composition over local factors for arbitrary finite
//! commutative rings.
//!
//! For a local ring the simple modules are the trivial module plus one
//! module per (character orbit, stabilizer character) pair. Arrows:
//!
//! * nothing ever ends at the trivial module;
//! * exactly one arrow leaves the trivial module, toward the orbit of
//!   characters that kill the maximal ideal (with the trivial stabilizer
//!   character);
//! * for each class of associates in m \ m^2 with representative p and
//!   annihilator ideal a: every source (orbit of chi with a inside ker chi,
//!   rho killing 1 + a) gets one arrow to each (orbit of chi', restriction of
//!   rho) where chi'(p x) = chi(x) for all x. Distinct classes contribute
//!   additively, which is the only way multiple edges arise.
//!
//! The scan runs over every member of the source orbit and dedupes targets
//! per (class, source, target), so the outcome is independent of which
//! orbit or associate representatives were chosen; `RepresentativeChoices`
//! exists to exercise exactly that independence.

use std::collections::{BTreeMap, BTreeSet};

use crate::characters::{kernel_contains, orbits, restrict, CharacterOrbits};
use crate::error::Error;
use crate::quiver::{Quiver, VertexLabel};
use crate::ring::{FiniteRing, LocalData, RingElem};

/// Everything the closed form consumes for one local ring.
pub struct LocalQuiverInput {
    pub ring: FiniteRing,
    pub data: LocalData,
    pub orbits: CharacterOrbits,
}

impl LocalQuiverInput {
    pub fn new(ring: &FiniteRing) -> Result<LocalQuiverInput, Error> {
        let data = ring.local_data()?;
        let orbits = orbits(ring)?;
        let covered: usize = orbits.orbits.iter().map(|o| o.len()).sum();
        if covered != ring.order() {
            return Err(Error::Invariant(format!(
                "orbits cover {covered} of {} characters",
                ring.order()
            )));
        }
        Ok(LocalQuiverInput {
            ring: ring.clone(),
            data,
            orbits,
        })
    }

    /// Vertex index of the simple labeled `(orbit, rho)`; vertex 0 is the
    /// trivial module.
    pub fn vertex_index(&self, orbit: usize, rho: usize) -> usize {
        let mut idx = 1;
        for o in &self.orbits.orbits[..orbit] {
            idx += o.stabilizer_characters.len();
        }
        idx + rho
    }
}

/// Non-canonical representative choices, used to check that the arrow rule
/// does not depend on them.
#[derive(Clone, Debug)]
pub struct RepresentativeChoices {
    /// For each orbit, which member (by position in the sorted member list)
    /// plays the representative.
    pub orbit_member: Vec<usize>,
    /// For each associate class, which unit (by position in the unit list)
    /// rescales the stored class representative.
    pub class_unit: Vec<usize>,
}

impl RepresentativeChoices {
    pub fn canonical(input: &LocalQuiverInput) -> RepresentativeChoices {
        RepresentativeChoices {
            orbit_member: vec![0; input.orbits.orbits.len()],
            class_unit: vec![0; input.data.associate_reps.len()],
        }
    }
}

/// The vertex list in canonical order: the trivial module first, then one
/// simple per (orbit, stabilizer character), dimensions 1 and orbit size.
pub fn vertices(input: &LocalQuiverInput) -> Vec<VertexLabel> {
    vertex_labels(&input.orbits)
}

/// Same, from a bare orbit structure; shared with the brute-force path so
/// both routes label vertices identically.
pub fn vertex_labels(orbits: &CharacterOrbits) -> Vec<VertexLabel> {
    let mut out = vec![VertexLabel::trivial()];
    for (oi, orbit) in orbits.orbits.iter().enumerate() {
        let dim = orbit.len() as u64;
        for ri in 0..orbit.stabilizer_characters.len() {
            out.push(VertexLabel::simple(oi, ri, dim));
        }
    }
    out
}

/// Quiver of the affine monoid of a finite field: q + 1 vertices and a
/// single arrow, from the trivial module to the (q - 1)-dimensional one.
pub fn field_quiver(ring: &FiniteRing) -> Result<Quiver, Error> {
    if !ring.is_field() {
        return Err(Error::NotAField(ring.describe()));
    }
    let input = LocalQuiverInput::new(ring)?;
    let verts = vertices(&input);
    let q = ring.order();
    if input.orbits.orbits.len() != 2
        || input.orbits.orbits[1].len() != q - 1
        || verts.len() != q + 1
    {
        return Err(Error::Invariant(format!(
            "unexpected orbit structure over {}",
            ring.describe()
        )));
    }
    let mut quiver = Quiver::new(verts);
    quiver.add_arrow(0, input.vertex_index(1, 0), 1);
    Ok(quiver)
}

/// The unique target of the arrow leaving the trivial module: the orbit of a
/// nontrivial character that kills the maximal ideal, paired with the
/// trivial stabilizer character.
pub fn trivial_arrow_target(input: &LocalQuiverInput) -> Result<VertexLabel, Error> {
    let (orbit, rho) = trivial_arrow_coords(input, &RepresentativeChoices::canonical(input))?;
    Ok(VertexLabel::simple(
        orbit,
        rho,
        input.orbits.orbits[orbit].len() as u64,
    ))
}

fn trivial_arrow_coords(
    input: &LocalQuiverInput,
    choices: &RepresentativeChoices,
) -> Result<(usize, usize), Error> {
    let mut found = None;
    for (oi, orbit) in input.orbits.orbits.iter().enumerate() {
        let member = orbit.member_indices[choices.orbit_member[oi] % orbit.len()];
        let chi = &input.orbits.characters[member];
        let qualifies = !chi.is_trivial() && kernel_contains(chi, &input.data.maximal_ideal);
        // The condition is a property of the whole orbit.
        for &m in &orbit.member_indices {
            let c = &input.orbits.characters[m];
            let q = !c.is_trivial() && kernel_contains(c, &input.data.maximal_ideal);
            if q != qualifies {
                return Err(Error::Invariant(
                    "kernel condition varies along an orbit".into(),
                ));
            }
        }
        if qualifies {
            if found.is_some() {
                return Err(Error::Invariant(
                    "several orbits kill the maximal ideal".into(),
                ));
            }
            found = Some(oi);
        }
    }
    let oi = found.ok_or_else(|| {
        Error::Invariant("no nontrivial character kills the maximal ideal".into())
    })?;
    let rho0 = &input.orbits.orbits[oi].stabilizer_characters[0];
    if !rho0.is_trivial() {
        return Err(Error::Invariant(
            "canonical character order must start with the trivial character".into(),
        ));
    }
    Ok((oi, 0))
}

/// Arrows between the non-trivial simples, keyed by
/// `((orbit, rho), (orbit', rho'))` with multiplicities summed over the
/// associate classes.
pub fn arrows_between_simples(
    input: &LocalQuiverInput,
) -> Result<BTreeMap<((usize, usize), (usize, usize)), u32>, Error> {
    arrows_between_simples_with(input, &RepresentativeChoices::canonical(input))
}

pub(crate) fn arrows_between_simples_with(
    input: &LocalQuiverInput,
    choices: &RepresentativeChoices,
) -> Result<BTreeMap<((usize, usize), (usize, usize)), u32>, Error> {
    let ring = &input.ring;
    let data = &input.data;
    let orbs = &input.orbits;
    let n = ring.order();
    let one = ring.one();
    let mut arrows: BTreeMap<((usize, usize), (usize, usize)), u32> = BTreeMap::new();

    for (ci, &rep) in data.associate_reps.iter().enumerate() {
        let unit = data.units[choices.class_unit[ci] % data.units.len()];
        let p = ring.mul(unit, rep);
        // The annihilator is a property of the class, not the chosen member.
        let ann: Vec<RingElem> = ring
            .elements()
            .filter(|&r| ring.mul(r, p) == ring.zero())
            .collect();
        if ann != data.annihilators[ci] {
            return Err(Error::Invariant(
                "annihilator varies across a class of associates".into(),
            ));
        }
        let one_plus_ann: Vec<RingElem> = ann.iter().map(|&a| ring.add(one, a)).collect();

        // chi' solves chi'(p x) = chi(x) exactly when the pullback of chi'
        // along multiplication by p is chi; bucket every character by its
        // pullback once per class.
        let mut solutions: Vec<Vec<usize>> = vec![Vec::new(); n];
        for idx in 0..n {
            solutions[orbs.pullback_index(ring, p, idx)].push(idx);
        }

        for (oi, orbit) in orbs.orbits.iter().enumerate() {
            let member = orbit.member_indices[choices.orbit_member[oi] % orbit.len()];
            let qualifies = kernel_contains(&orbs.characters[member], &ann);
            for &m in &orbit.member_indices {
                if kernel_contains(&orbs.characters[m], &ann) != qualifies {
                    return Err(Error::Invariant(
                        "annihilator-kernel condition varies along an orbit".into(),
                    ));
                }
            }
            if !qualifies {
                continue;
            }
            // a inside ker chi forces 1 + a inside the stabilizer.
            if one_plus_ann.iter().any(|&u| !orbit.stabilizer.contains(u)) {
                return Err(Error::Invariant(
                    "1 + annihilator escapes the stabilizer".into(),
                ));
            }

            for (ri, rho) in orbit.stabilizer_characters.iter().enumerate() {
                if !one_plus_ann.iter().all(|&u| rho.value(u).is_zero()) {
                    continue;
                }
                // Scan all members of the orbit; dedupe targets within this
                // associate class.
                let mut targets: BTreeSet<(usize, usize)> = BTreeSet::new();
                for &chi_idx in &orbit.member_indices {
                    for &sol in &solutions[chi_idx] {
                        let o2 = orbs.orbit_of[sol];
                        let st2 = &orbs.orbits[o2].stabilizer;
                        if !st2.is_subgroup_of(&orbit.stabilizer) {
                            return Err(Error::Invariant(
                                "target stabilizer escapes the source stabilizer".into(),
                            ));
                        }
                        let restricted = restrict(rho, st2)?;
                        let r2 = orbs.orbits[o2]
                            .stabilizer_characters
                            .iter()
                            .position(|c| *c == restricted)
                            .ok_or_else(|| {
                                Error::Invariant("restricted character not found".into())
                            })?;
                        targets.insert((o2, r2));
                    }
                }
                for target in targets {
                    *arrows.entry(((oi, ri), target)).or_insert(0) += 1;
                }
            }
        }
    }
    Ok(arrows)
}

/// Closed-form quiver of the affine monoid of a local ring.
pub fn local_quiver(ring: &FiniteRing) -> Result<Quiver, Error> {
    let input = LocalQuiverInput::new(ring)?;
    let choices = RepresentativeChoices::canonical(&input);
    local_quiver_from(&input, &choices)
}

/// Same computation with explicit representative choices; the result must
/// not depend on them.
pub fn local_quiver_with_choices(
    ring: &FiniteRing,
    choices: &RepresentativeChoices,
) -> Result<Quiver, Error> {
    let input = LocalQuiverInput::new(ring)?;
    local_quiver_from(&input, choices)
}

fn local_quiver_from(
    input: &LocalQuiverInput,
    choices: &RepresentativeChoices,
) -> Result<Quiver, Error> {
    if input.ring.is_field() {
        return field_quiver(&input.ring);
    }
    let verts = vertices(input);
    let mut quiver = Quiver::new(verts);
    let (to, tr) = trivial_arrow_coords(input, choices)?;
    quiver.add_arrow(0, input.vertex_index(to, tr), 1);
    for (((so, sr), (to, tr)), mult) in arrows_between_simples_with(input, choices)? {
        quiver.add_arrow(input.vertex_index(so, sr), input.vertex_index(to, tr), mult);
    }
    if quiver.arrows().any(|((_, t), _)| t == 0) {
        return Err(Error::Invariant("an arrow ends at the trivial module".into()));
    }
    Ok(quiver)
}

/// Quiver over any finite commutative ring: local factors, each factor's
/// quiver, folded with the tensor construction.
pub fn affine_quiver(ring: &FiniteRing) -> Result<Quiver, Error> {
    let decomposition = ring.local_decomposition();
    let mut quivers = decomposition.factors.iter().map(local_quiver);
    let mut out = quivers.next().expect("at least one local factor")?;
    for q in quivers {
        out = out.tensor(&q?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::VertexKind;

    fn ring(spec: &str) -> FiniteRing {
        FiniteRing::parse(spec).unwrap()
    }

    #[test]
    fn field_quivers_have_one_arrow() {
        for (spec, q) in [("Z/2", 2), ("Z/3", 3), ("GF(4)", 4)] {
            let f = ring(spec);
            let quiver = field_quiver(&f).unwrap();
            assert_eq!(quiver.vertex_count(), q + 1, "{spec}");
            assert_eq!(quiver.arrow_count(), 1);
            let ((src, dst), m) = quiver.arrows().next().unwrap();
            assert_eq!(src, 0);
            assert_eq!(m, 1);
            assert_eq!(quiver.vertices()[dst].dim, (q - 1) as u64);
            assert_eq!(quiver.vertices()[0].kind, VertexKind::Trivial);
        }
        assert!(matches!(
            field_quiver(&ring("Z/4")),
            Err(Error::NotAField(_))
        ));
    }

    #[test]
    fn vertex_counts() {
        let z4 = LocalQuiverInput::new(&ring("Z/4")).unwrap();
        assert_eq!(vertices(&z4).len(), 6);
        let z8 = LocalQuiverInput::new(&ring("Z/8")).unwrap();
        assert_eq!(vertices(&z8).len(), 12);
        let f9 = LocalQuiverInput::new(&ring("GF(9)")).unwrap();
        assert_eq!(vertices(&f9).len(), 10);
    }

    #[test]
    fn trivial_arrow_lands_on_the_ideal_killing_orbit() {
        let input = LocalQuiverInput::new(&ring("Z/4")).unwrap();
        let target = trivial_arrow_target(&input).unwrap();
        // Over Z/4 the qualifying orbit is the singleton of the order-2
        // character; canonically it is the last orbit and the dimension is 1.
        assert_eq!(target.dim, 1);
        match target.kind {
            VertexKind::Simple { orbit, rho } => {
                assert_eq!(rho, 0);
                let rep = input.orbits.representative(orbit);
                assert_eq!(rep.value(RingElem(1)), crate::qz::Qz::new(1, 2));
            }
            other => panic!("expected a simple vertex, got {other:?}"),
        }
    }

    #[test]
    fn z4_quiver_exact() {
        let q = local_quiver(&ring("Z/4")).unwrap();
        assert_eq!(q.vertex_count(), 6);
        assert_eq!(q.arrow_count(), 4);
        // Canonical vertex order: C, (O0,r0), (O0,r1), (O1,r0) dim 2,
        // (O2,r0), (O2,r1).
        let dims: Vec<u64> = q.vertices().iter().map(|v| v.dim).collect();
        assert_eq!(dims, vec![1, 1, 1, 2, 1, 1]);
        let arrows: Vec<((usize, usize), u32)> = q.arrows().collect();
        assert_eq!(
            arrows,
            vec![((0, 4), 1), ((1, 1), 1), ((1, 4), 1), ((4, 3), 1)]
        );
    }

    #[test]
    fn z9_quiver_exact() {
        let q = local_quiver(&ring("Z/9")).unwrap();
        assert_eq!(q.vertex_count(), 11);
        assert_eq!(q.arrow_count(), 6);
        let arrows: Vec<((usize, usize), u32)> = q.arrows().collect();
        assert_eq!(
            arrows,
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
    }

    #[test]
    fn loops_at_the_trivial_character_count_associate_classes() {
        // F2[x,y]/(x,y)^2: three classes of associates, each annihilated by
        // the whole maximal ideal, so three loops at (O0, r0).
        let r = crate::ring::FiniteRing::from_tables(&crate::test_support::f2xy_table()).unwrap();
        let data = r.local_data().unwrap();
        assert_eq!(data.associate_reps.len(), 3);
        for ann in &data.annihilators {
            assert_eq!(ann.len(), 4);
        }
        let q = local_quiver(&r).unwrap();
        let input = LocalQuiverInput::new(&r).unwrap();
        let v = input.vertex_index(0, 0);
        assert_eq!(q.multiplicity(v, v), 3);
    }

    #[test]
    fn no_arrows_into_trivial_and_one_out() {
        for spec in ["Z/4", "Z/8", "Z/9", "Z/16", "Z/25", "Z/27", "GF(4)", "GF(9)"] {
            let q = local_quiver(&ring(spec)).unwrap();
            assert!(q.arrows().all(|((_, t), _)| t != 0), "{spec}");
            let out: u32 = q
                .arrows()
                .filter(|&((s, _), _)| s == 0)
                .map(|(_, m)| m)
                .sum();
            assert_eq!(out, 1, "{spec}");
        }
    }

    #[test]
    fn chain_rings_have_no_multiple_edges() {
        for spec in ["Z/4", "Z/8", "Z/16", "Z/27", "GF(8)"] {
            let q = local_quiver(&ring(spec)).unwrap();
            assert!(q.arrows().all(|(_, m)| m == 1), "{spec}");
        }
    }

    #[test]
    fn field_quivers_have_no_length_two_paths() {
        for spec in ["Z/2", "Z/5", "GF(8)", "GF(9)"] {
            let q = local_quiver(&ring(spec)).unwrap();
            for ((_, mid), _) in q.arrows() {
                assert!(q.arrows().all(|((s, _), _)| s != mid), "{spec}");
            }
        }
    }

    #[test]
    fn z6_tensor_counts() {
        let q = affine_quiver(&ring("Z/6")).unwrap();
        assert_eq!(q.vertex_count(), 12);
        assert_eq!(q.arrow_count(), 7);
    }

    #[test]
    fn single_factor_fold_is_identity() {
        let f = ring("GF(5)");
        assert_eq!(affine_quiver(&f).unwrap(), field_quiver(&f).unwrap());
    }

    #[test]
    fn z4_cross_z2_counts_follow_the_tensor_laws() {
        let q = affine_quiver(&ring("Z/4 x Z/2")).unwrap();
        assert_eq!(q.vertex_count(), 6 * 3);
        assert_eq!(q.arrow_count(), 4 * 3 + 6 * 1);
    }
}
