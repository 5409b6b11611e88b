//! Finite monoids by multiplication table, the affine monoid of a ring, and
//! Green's relations computed by brute force.

use std::collections::HashMap;

use crate::error::Error;
use crate::ring::{FiniteRing, RingElem};

/// Fixed-width bit set used for principal ideals and element subsets.
#[derive(Clone, PartialEq, Eq, Hash)]
pub(crate) struct Bits {
    words: Vec<u64>,
}

impl Bits {
    pub fn new(n: usize) -> Bits {
        Bits {
            words: vec![0; n.div_ceil(64)],
        }
    }

    pub fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn or_assign(&mut self, other: &Bits) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= b;
        }
    }
}

/// A finite monoid with a flat composition table. For affine monoids each
/// element carries its `(a, b)` label meaning the map `x -> ax + b`.
pub struct FiniteMonoid {
    order: usize,
    table: Vec<u32>,
    identity: usize,
    labels: Option<Vec<(RingElem, RingElem)>>,
}

impl FiniteMonoid {
    /// Builds a monoid from an explicit table, locating the identity and
    /// checking associativity exhaustively.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<FiniteMonoid, Error> {
        let n = table.len();
        if n == 0 || table.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidRing("composition table must be square".into()));
        }
        if table.iter().flatten().any(|&v| v >= n) {
            return Err(Error::InvalidRing("table entries out of range".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::InvalidRing("no identity element".into()))?;
        let flat: Vec<u32> = table
            .iter()
            .flat_map(|row| row.iter().map(|&v| v as u32))
            .collect();
        let m = FiniteMonoid {
            order: n,
            table: flat,
            identity,
            labels: None,
        };
        m.validate_associativity()?;
        Ok(m)
    }

    /// Exhaustive associativity check, O(order^3).
    pub fn validate_associativity(&self) -> Result<(), Error> {
        let n = self.order;
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::AxiomViolation {
                            axiom: "associativity".into(),
                            witness: format!("({a} * {b}) * {c} != {a} * ({b} * {c})"),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    /// Label of an affine-monoid element.
    pub fn label(&self, m: usize) -> Option<(RingElem, RingElem)> {
        self.labels.as_ref().map(|l| l[m])
    }

    /// Index of the affine map `a x + b` in a monoid built by `build_aff`.
    pub fn affine_index(ring: &FiniteRing, a: RingElem, b: RingElem) -> usize {
        a.0 * ring.order() + b.0
    }
}

/// The affine monoid of a ring: all maps `x -> ax + b` under composition,
/// `(a, b) (c, d) = (ac, ad + b)`. Order is the square of the ring order and
/// the identity is `(1, 0)`.
pub fn build_aff(ring: &FiniteRing) -> FiniteMonoid {
    let n = ring.order();
    let order = n * n;
    let mut labels = Vec::with_capacity(order);
    for a in ring.elements() {
        for b in ring.elements() {
            labels.push((a, b));
        }
    }
    let mut table = vec![0u32; order * order];
    for (i, &(a, b)) in labels.iter().enumerate() {
        for (j, &(c, d)) in labels.iter().enumerate() {
            let first = ring.mul(a, c);
            let second = ring.add(ring.mul(a, d), b);
            table[i * order + j] = (first.0 * n + second.0) as u32;
        }
    }
    FiniteMonoid {
        order,
        table,
        identity: ring.one().0 * n + ring.zero().0,
        labels: Some(labels),
    }
}

/// Green's relations and related data, all computed by direct set
/// comparison of principal ideals.
pub struct GreenData {
    pub r_class_of: Vec<u32>,
    pub l_class_of: Vec<u32>,
    pub j_class_of: Vec<u32>,
    pub r_classes: Vec<Vec<u32>>,
    pub l_classes: Vec<Vec<u32>>,
    pub j_classes: Vec<Vec<u32>>,
    pub idempotents: Vec<u32>,
    /// J-class ids that contain an idempotent.
    pub regular_j: Vec<u32>,
    pub l_tilde_class_of: Vec<u32>,
    pub l_tilde_classes: Vec<Vec<u32>>,
    /// Principal two-sided ideal per J-class.
    j_ideals: Vec<Bits>,
    /// Principal right ideal per R-class.
    r_ideals: Vec<Bits>,
}

impl GreenData {
    /// True iff `x` lies in the two-sided ideal M m M.
    pub fn two_sided_ideal_contains(&self, m: usize, x: usize) -> bool {
        self.j_ideals[self.j_class_of[m] as usize].get(x)
    }

    /// True iff `x` lies in the right ideal m M.
    pub fn right_ideal_contains(&self, m: usize, x: usize) -> bool {
        self.r_ideals[self.r_class_of[m] as usize].get(x)
    }
}

fn group_by_key(n: usize, keys: Vec<Bits>) -> (Vec<u32>, Vec<Vec<u32>>) {
    let mut class_of = vec![0u32; n];
    let mut classes: Vec<Vec<u32>> = Vec::new();
    let mut lookup: HashMap<Bits, u32> = HashMap::new();
    for (i, key) in keys.into_iter().enumerate() {
        let id = *lookup.entry(key).or_insert_with(|| {
            classes.push(Vec::new());
            (classes.len() - 1) as u32
        });
        class_of[i] = id;
        classes[id as usize].push(i as u32);
    }
    (class_of, classes)
}

/// Computes Green's R, L and J classes, idempotents, regular J-classes and
/// the coarser partition by right-identity idempotent profiles.
pub fn green_data(m: &FiniteMonoid) -> GreenData {
    let n = m.order();

    // Right ideals a M.
    let mut right_keys = Vec::with_capacity(n);
    for a in 0..n {
        let mut bits = Bits::new(n);
        for x in 0..n {
            bits.set(m.mul(a, x));
        }
        right_keys.push(bits);
    }
    let (r_class_of, r_classes) = group_by_key(n, right_keys.clone());
    let r_ideals: Vec<Bits> = r_classes
        .iter()
        .map(|cls| right_keys[cls[0] as usize].clone())
        .collect();

    // Left ideals M a.
    let mut left_keys = Vec::with_capacity(n);
    for a in 0..n {
        let mut bits = Bits::new(n);
        for x in 0..n {
            bits.set(m.mul(x, a));
        }
        left_keys.push(bits);
    }
    let (l_class_of, l_classes) = group_by_key(n, left_keys);

    // Two-sided ideals M a M, computed once per L-class: M a M is the union
    // of the right ideals of the elements of M a.
    let mut j_key_of_l_class: Vec<Bits> = Vec::with_capacity(l_classes.len());
    for cls in &l_classes {
        let a = cls[0] as usize;
        let mut bits = Bits::new(n);
        for x in 0..n {
            let xa = m.mul(x, a);
            bits.or_assign(&right_keys[xa]);
        }
        j_key_of_l_class.push(bits);
    }
    let j_keys: Vec<Bits> = (0..n)
        .map(|a| j_key_of_l_class[l_class_of[a] as usize].clone())
        .collect();
    let (j_class_of, j_classes) = group_by_key(n, j_keys);
    let j_ideals: Vec<Bits> = j_classes
        .iter()
        .map(|cls| {
            let a = cls[0] as usize;
            j_key_of_l_class[l_class_of[a] as usize].clone()
        })
        .collect();

    let idempotents: Vec<u32> = (0..n).filter(|&e| m.mul(e, e) == e).map(|e| e as u32).collect();
    let mut regular_j: Vec<u32> = idempotents.iter().map(|&e| j_class_of[e as usize]).collect();
    regular_j.sort_unstable();
    regular_j.dedup();

    // Profiles of right identities among the idempotents.
    let mut profile_keys = Vec::with_capacity(n);
    for a in 0..n {
        let mut bits = Bits::new(idempotents.len());
        for (i, &e) in idempotents.iter().enumerate() {
            if m.mul(a, e as usize) == a {
                bits.set(i);
            }
        }
        profile_keys.push(bits);
    }
    let (l_tilde_class_of, l_tilde_classes) = group_by_key(n, profile_keys);

    GreenData {
        r_class_of,
        l_class_of,
        j_class_of,
        r_classes,
        l_classes,
        j_classes,
        idempotents,
        regular_j,
        l_tilde_class_of,
        l_tilde_classes,
        j_ideals,
        r_ideals,
    }
}

/// Generates the submonoid spanned by the idempotents and tests whether it
/// is R-trivial (`m N = n N` forces `m = n` inside the submonoid `N`).
pub fn check_r_trivial_idempotent_submonoid(m: &FiniteMonoid) -> bool {
    let n = m.order();
    let mut member = vec![false; n];
    let mut elements: Vec<usize> = Vec::new();
    member[m.identity()] = true;
    elements.push(m.identity());
    for e in 0..n {
        if m.mul(e, e) == e && !member[e] {
            member[e] = true;
            elements.push(e);
        }
    }
    let mut frontier = elements.clone();
    while let Some(x) = frontier.pop() {
        for i in 0..elements.len() {
            let y = elements[i];
            for z in [m.mul(x, y), m.mul(y, x)] {
                if !member[z] {
                    member[z] = true;
                    elements.push(z);
                    frontier.push(z);
                }
            }
        }
    }
    elements.sort_unstable();

    let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
    for &a in &elements {
        let mut ideal: Vec<usize> = elements.iter().map(|&x| m.mul(a, x)).collect();
        ideal.sort_unstable();
        ideal.dedup();
        if let Some(&other) = seen.get(&ideal) {
            if other != a {
                return false;
            }
        }
        seen.insert(ideal, a);
    }
    true
}
