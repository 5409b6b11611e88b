//! Exact character theory of finite abelian groups: the additive character
//! group of a ring, the unit-group action on it, orbits with stabilizers, and
//! character groups of unit subgroups.
//!
//! Everything is valued in Q/Z so that kernels, stabilizers and the arrow
//! conditions downstream are decided exactly.

use crate::abelian;
use crate::error::Error;
use crate::qz::Qz;
use crate::ring::{FiniteRing, RingElem};

/// A character of the additive group of a ring, stored as its full value
/// table over the ring's element enumeration.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct AdditiveCharacter {
    values: Vec<Qz>,
}

impl AdditiveCharacter {
    pub fn value(&self, a: RingElem) -> Qz {
        self.values[a.0]
    }

    pub fn values(&self) -> &[Qz] {
        &self.values
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }
}

/// True iff the character vanishes on every element of `set`.
pub fn kernel_contains(chi: &AdditiveCharacter, set: &[RingElem]) -> bool {
    set.iter().all(|&a| chi.value(a).is_zero())
}

/// A subgroup of the unit group, kept as a sorted element list.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct UnitSubgroup {
    elements: Vec<RingElem>,
}

impl UnitSubgroup {
    /// Validates closure under multiplication, membership of 1 and that all
    /// elements are units (which in a finite group forces inverse closure).
    pub fn new(ring: &FiniteRing, mut elements: Vec<RingElem>) -> Result<UnitSubgroup, Error> {
        elements.sort_unstable();
        elements.dedup();
        if elements.binary_search(&ring.one()).is_err() {
            return Err(Error::Invariant("subgroup must contain 1".into()));
        }
        for &g in &elements {
            if !ring.is_unit(g) {
                return Err(Error::NonUnit(g.0));
            }
            for &h in &elements {
                if elements.binary_search(&ring.mul(g, h)).is_err() {
                    return Err(Error::Invariant(format!(
                        "subgroup not closed: {g} * {h} escapes"
                    )));
                }
            }
        }
        Ok(UnitSubgroup { elements })
    }

    pub fn elements(&self) -> &[RingElem] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, g: RingElem) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    pub fn position(&self, g: RingElem) -> Option<usize> {
        self.elements.binary_search(&g).ok()
    }

    pub fn is_subgroup_of(&self, other: &UnitSubgroup) -> bool {
        self.elements.iter().all(|&g| other.contains(g))
    }
}

/// A character of a unit subgroup; values aligned with the sorted element
/// list of the domain.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct GroupCharacter {
    domain: UnitSubgroup,
    values: Vec<Qz>,
}

impl GroupCharacter {
    pub fn domain(&self) -> &UnitSubgroup {
        &self.domain
    }

    pub fn value(&self, g: RingElem) -> Qz {
        let i = self
            .domain
            .position(g)
            .expect("element outside the character's domain");
        self.values[i]
    }

    pub fn values(&self) -> &[Qz] {
        &self.values
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }
}

/// Restriction of a character to a subgroup of its domain.
pub fn restrict(rho: &GroupCharacter, sub: &UnitSubgroup) -> Result<GroupCharacter, Error> {
    if !sub.is_subgroup_of(rho.domain()) {
        return Err(Error::Containment(format!(
            "restriction target of order {} is not contained in the domain of order {}",
            sub.len(),
            rho.domain().len()
        )));
    }
    let values = sub.elements().iter().map(|&g| rho.value(g)).collect();
    Ok(GroupCharacter {
        domain: sub.clone(),
        values,
    })
}

/// All characters of a unit subgroup, sorted by value table. There are
/// exactly `|H|` of them, pairwise distinct.
pub fn subgroup_characters(ring: &FiniteRing, h: &UnitSubgroup) -> Vec<GroupCharacter> {
    let ids: Vec<usize> = h.elements().iter().map(|e| e.0).collect();
    let op = |a: usize, b: usize| ring.mul(RingElem(a), RingElem(b)).0;
    let dec = abelian::decompose(&ids, ring.one().0, &op);
    let mut out = Vec::with_capacity(h.len());
    let mut tuple = vec![0usize; dec.orders.len()];
    loop {
        let values: Vec<Qz> = h
            .elements()
            .iter()
            .map(|&g| {
                let coords = &dec.coords[&g.0];
                let mut v = Qz::ZERO;
                for ((&t, &c), &d) in tuple.iter().zip(coords.iter()).zip(dec.orders.iter()) {
                    v = v + Qz::new((t * c) as i64, d as i64);
                }
                v
            })
            .collect();
        out.push(GroupCharacter {
            domain: h.clone(),
            values,
        });
        // Advance the mixed-radix counter.
        let mut i = tuple.len();
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            tuple[i] += 1;
            if tuple[i] < dec.orders[i] {
                break;
            }
            tuple[i] = 0;
        }
        if tuple.iter().all(|&t| t == 0) {
            break;
        }
    }
    out.sort();
    out.dedup();
    assert_eq!(out.len(), h.len(), "character count must equal group order");
    out
}

/// The additive character system: the cyclic decomposition of (R, +) along
/// with all |R| characters in mixed-radix enumeration order.
pub(crate) struct CharacterSystem {
    pub generators: Vec<usize>,
    pub orders: Vec<usize>,
    pub characters: Vec<AdditiveCharacter>,
}

impl CharacterSystem {
    pub fn new(ring: &FiniteRing) -> CharacterSystem {
        let n = ring.order();
        let ids: Vec<usize> = (0..n).collect();
        let op = |a: usize, b: usize| ring.add(RingElem(a), RingElem(b)).0;
        let dec = abelian::decompose(&ids, ring.zero().0, &op);
        let k = dec.orders.len();
        // Character with tuple index t sends an element with coordinates c to
        // sum of t_i c_i / d_i.
        let mut characters = Vec::with_capacity(n);
        assert_eq!(dec.order(), n);
        for idx in 0..n {
            let tuple = decode_tuple(idx, &dec.orders);
            let values: Vec<Qz> = (0..n)
                .map(|x| {
                    let coords = &dec.coords[&x];
                    let mut v = Qz::ZERO;
                    for i in 0..k {
                        v = v + Qz::new((tuple[i] * coords[i]) as i64, dec.orders[i] as i64);
                    }
                    v
                })
                .collect();
            characters.push(AdditiveCharacter { values });
        }
        CharacterSystem {
            generators: dec.generators,
            orders: dec.orders,
            characters,
        }
    }

}

fn decode_tuple(mut idx: usize, orders: &[usize]) -> Vec<usize> {
    let mut tuple = vec![0usize; orders.len()];
    for (slot, &d) in tuple.iter_mut().zip(orders.iter()).rev() {
        *slot = idx % d;
        idx /= d;
    }
    tuple
}

/// All |R| characters of the additive group of the ring. Pairwise distinct
/// and separating points.
pub fn additive_characters(ring: &FiniteRing) -> Vec<AdditiveCharacter> {
    CharacterSystem::new(ring).characters
}

/// The unit action on additive characters: `(u chi)(a) = chi(u a)`.
pub fn act(
    ring: &FiniteRing,
    u: RingElem,
    chi: &AdditiveCharacter,
) -> Result<AdditiveCharacter, Error> {
    if !ring.is_unit(u) {
        return Err(Error::NonUnit(u.0));
    }
    let values: Vec<Qz> = ring
        .elements()
        .map(|a| chi.value(ring.mul(u, a)))
        .collect();
    Ok(AdditiveCharacter { values })
}

/// One orbit of the unit group on the additive characters.
#[derive(Clone, Debug)]
pub struct OrbitDatum {
    /// Position in the canonical orbit ordering.
    pub orbit_id: usize,
    /// Indices into the master character list, sorted so the value tables
    /// ascend lexicographically; the first entry is the canonical
    /// representative.
    pub member_indices: Vec<usize>,
    /// Stabilizer of any member (constant along the orbit; checked).
    pub stabilizer: UnitSubgroup,
    /// All characters of the stabilizer, sorted by value table.
    pub stabilizer_characters: Vec<GroupCharacter>,
}

impl OrbitDatum {
    pub fn len(&self) -> usize {
        self.member_indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.member_indices.is_empty()
    }

    pub fn rep_index(&self) -> usize {
        self.member_indices[0]
    }
}

/// The full orbit structure of the unit action on additive characters.
pub struct CharacterOrbits {
    /// Master character list in enumeration order.
    pub characters: Vec<AdditiveCharacter>,
    /// Orbits in canonical order (ascending representative value table).
    pub orbits: Vec<OrbitDatum>,
    /// Orbit id of each master-list character.
    pub orbit_of: Vec<usize>,
    pub(crate) system_generators: Vec<usize>,
    pub(crate) system_orders: Vec<usize>,
}

impl CharacterOrbits {
    pub fn representative(&self, orbit_id: usize) -> &AdditiveCharacter {
        &self.characters[self.orbits[orbit_id].rep_index()]
    }

    /// Master-list index of the character whose values on the additive
    /// generators are given.
    pub(crate) fn index_by_generator_values(&self, vals: &[Qz]) -> Option<usize> {
        let mut idx = 0usize;
        for (&v, &d) in vals.iter().zip(self.system_orders.iter()) {
            let d = d as i64;
            if d % v.denom() != 0 {
                return None;
            }
            let t = v.numer() * (d / v.denom());
            idx = idx * d as usize + t as usize;
        }
        Some(idx)
    }

    /// Master-list index of `a -> chi(m a)` for the character at `chi_idx`.
    pub(crate) fn pullback_index(
        &self,
        ring: &FiniteRing,
        m: RingElem,
        chi_idx: usize,
    ) -> usize {
        let chi = &self.characters[chi_idx];
        let vals: Vec<Qz> = self
            .system_generators
            .iter()
            .map(|&g| chi.value(ring.mul(m, RingElem(g))))
            .collect();
        self.index_by_generator_values(&vals)
            .expect("pullback of a character is a character")
    }
}

/// Partitions the additive characters into unit-group orbits, with
/// stabilizers and stabilizer character tables.
pub fn orbits(ring: &FiniteRing) -> Result<CharacterOrbits, Error> {
    let system = CharacterSystem::new(ring);
    let n = ring.order();
    let characters = system.characters;
    let units: Vec<RingElem> = ring.elements().filter(|&u| ring.is_unit(u)).collect();

    // Index permutation of each unit's action, via values on the additive
    // generators.
    let helper = CharacterOrbits {
        characters,
        orbits: Vec::new(),
        orbit_of: Vec::new(),
        system_generators: system.generators,
        system_orders: system.orders,
    };
    let mut perms: Vec<Vec<usize>> = Vec::with_capacity(units.len());
    for &u in &units {
        let perm: Vec<usize> = (0..n).map(|i| helper.pullback_index(ring, u, i)).collect();
        perms.push(perm);
    }

    let mut orbit_of = vec![usize::MAX; n];
    let mut raw_orbits: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let id = raw_orbits.len();
        let mut members = vec![start];
        orbit_of[start] = id;
        let mut queue = vec![start];
        while let Some(i) = queue.pop() {
            for perm in &perms {
                let j = perm[i];
                if orbit_of[j] == usize::MAX {
                    orbit_of[j] = id;
                    members.push(j);
                    queue.push(j);
                }
            }
        }
        raw_orbits.push(members);
    }

    let mut data = Vec::with_capacity(raw_orbits.len());
    for members in raw_orbits.iter_mut() {
        members.sort_by(|&a, &b| helper.characters[a].cmp(&helper.characters[b]));
        let rep = members[0];
        let stab_elems: Vec<RingElem> = units
            .iter()
            .zip(perms.iter())
            .filter(|(_, perm)| perm[rep] == rep)
            .map(|(&u, _)| u)
            .collect();
        let stabilizer = UnitSubgroup::new(ring, stab_elems)?;
        if members.len() * stabilizer.len() != units.len() {
            return Err(Error::Invariant(format!(
                "orbit-stabilizer mismatch: {} * {} != {}",
                members.len(),
                stabilizer.len(),
                units.len()
            )));
        }
        // The stabilizer is constant along the orbit.
        for &m in members.iter() {
            for (ui, perm) in perms.iter().enumerate() {
                let fixes = perm[m] == m;
                if fixes != stabilizer.contains(units[ui]) {
                    return Err(Error::Invariant(
                        "stabilizer varies along an orbit".into(),
                    ));
                }
            }
        }
        let stabilizer_characters = subgroup_characters(ring, &stabilizer);
        data.push((members.clone(), stabilizer, stabilizer_characters));
    }

    // Canonical order: ascending representative value table.
    let mut order: Vec<usize> = (0..data.len()).collect();
    order.sort_by(|&a, &b| {
        helper.characters[data[a].0[0]].cmp(&helper.characters[data[b].0[0]])
    });
    let mut orbits_out = Vec::with_capacity(data.len());
    let mut final_orbit_of = vec![usize::MAX; n];
    for (new_id, &old_id) in order.iter().enumerate() {
        let (members, stabilizer, stabilizer_characters) = data[old_id].clone();
        for &m in &members {
            final_orbit_of[m] = new_id;
        }
        orbits_out.push(OrbitDatum {
            orbit_id: new_id,
            member_indices: members,
            stabilizer,
            stabilizer_characters,
        });
    }

    Ok(CharacterOrbits {
        characters: helper.characters,
        orbits: orbits_out,
        orbit_of: final_orbit_of,
        system_generators: helper.system_generators,
        system_orders: helper.system_orders,
    })
}
