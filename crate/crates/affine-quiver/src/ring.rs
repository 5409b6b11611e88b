//! Finite commutative unital rings with a fixed element enumeration.
//!
//! A ring is one of four concrete shapes: integers modulo n, a Galois field
//! given by an irreducible modulus polynomial, a direct product of rings, or
//! an explicit pair of operation tables. Every shape exposes the same indexed
//! interface: elements are `RingElem(i)` for `i < order`, and the enumeration
//! is fixed for the lifetime of the instance, so canonical representatives
//! chosen by index are reproducible.

use std::collections::HashMap;
use std::fmt;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Index of an element in a ring's fixed enumeration.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct RingElem(pub usize);

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Debug)]
enum Repr {
    /// Integers modulo n; element i is the residue i.
    Modular { n: usize },
    /// Field of order p^k; element i has base-p digits equal to the
    /// coefficients of its polynomial representative, least degree first.
    /// `modulus` is monic of degree k, length k+1.
    Galois {
        p: usize,
        k: usize,
        modulus: Vec<usize>,
    },
    /// Direct product; element index is the mixed-radix encoding of the
    /// factor tuple with the first factor most significant.
    Product { factors: Vec<FiniteRing> },
    /// Explicit operation tables, row-major `order x order`.
    Table {
        add: Vec<u32>,
        mul: Vec<u32>,
        zero: usize,
        one: usize,
    },
}

/// A finite commutative unital ring.
#[derive(Clone, Debug)]
pub struct FiniteRing {
    order: usize,
    repr: Repr,
}

/// On-disk format for table rings.
#[derive(Serialize, Deserialize)]
pub struct TableFile {
    pub order: usize,
    pub zero: usize,
    pub one: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
}

impl FiniteRing {
    /// Z/n for n >= 2. The zero ring is rejected.
    pub fn modular(n: usize) -> Result<FiniteRing, Error> {
        if n < 2 {
            return Err(Error::InvalidRing(format!(
                "Z/{n} is not supported; the ring must have at least 2 elements"
            )));
        }
        Ok(FiniteRing {
            order: n,
            repr: Repr::Modular { n },
        })
    }

    /// GF(p^k) with a built-in modulus: the lexicographically least monic
    /// irreducible of degree k over F_p. Built-in moduli cover p^k <= 512;
    /// beyond that an explicit modulus is required.
    pub fn galois(p: usize, k: usize) -> Result<FiniteRing, Error> {
        if !is_prime(p) {
            return Err(Error::InvalidRing(format!("{p} is not prime")));
        }
        if k == 0 {
            return Err(Error::InvalidRing("GF exponent must be positive".into()));
        }
        if k == 1 {
            return FiniteRing::modular(p);
        }
        let order = checked_pow(p, k).ok_or_else(|| {
            Error::InvalidRing(format!("field order {p}^{k} overflows"))
        })?;
        if order > 512 {
            return Err(Error::InvalidRing(format!(
                "no built-in modulus for GF({order}); supply an irreducible polynomial"
            )));
        }
        let modulus = default_modulus(p, k);
        FiniteRing::galois_with_modulus(p, k, &modulus)
    }

    /// GF(p^k) with a caller-supplied monic modulus of degree k
    /// (`modulus[i]` is the coefficient of x^i). Irreducibility is checked
    /// by trial division against every monic polynomial of lower degree.
    pub fn galois_with_modulus(p: usize, k: usize, modulus: &[usize]) -> Result<FiniteRing, Error> {
        if !is_prime(p) {
            return Err(Error::InvalidRing(format!("{p} is not prime")));
        }
        if k < 2 {
            return Err(Error::InvalidRing(
                "explicit modulus requires degree at least 2".into(),
            ));
        }
        if modulus.len() != k + 1 || modulus[k] != 1 {
            return Err(Error::InvalidRing(format!(
                "modulus must be monic of degree {k}"
            )));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidRing(format!(
                "modulus coefficients must lie in [0, {p})"
            )));
        }
        if let Some(divisor) = find_monic_divisor(p, modulus) {
            return Err(Error::ReduciblePolynomial(format!(
                "{} divides the modulus {}",
                poly_string(&divisor),
                poly_string(modulus)
            )));
        }
        let order = checked_pow(p, k)
            .ok_or_else(|| Error::InvalidRing(format!("field order {p}^{k} overflows")))?;
        Ok(FiniteRing {
            order,
            repr: Repr::Galois {
                p,
                k,
                modulus: modulus.to_vec(),
            },
        })
    }

    /// Direct product of one or more rings.
    pub fn product(factors: Vec<FiniteRing>) -> Result<FiniteRing, Error> {
        if factors.is_empty() {
            return Err(Error::InvalidRing("empty product".into()));
        }
        if factors.len() == 1 {
            return Ok(factors.into_iter().next().unwrap());
        }
        let mut order = 1usize;
        for f in &factors {
            order = order.checked_mul(f.order()).ok_or_else(|| {
                Error::InvalidRing("product order overflows".into())
            })?;
        }
        Ok(FiniteRing {
            order,
            repr: Repr::Product { factors },
        })
    }

    /// Builds a table ring after exhaustively checking every ring axiom.
    pub fn from_tables(table: &TableFile) -> Result<FiniteRing, Error> {
        validate_table(table)?;
        let n = table.order;
        let flat = |m: &Vec<Vec<usize>>| -> Vec<u32> {
            m.iter()
                .flat_map(|row| row.iter().map(|&v| v as u32))
                .collect()
        };
        Ok(FiniteRing {
            order: n,
            repr: Repr::Table {
                add: flat(&table.add),
                mul: flat(&table.mul),
                zero: table.zero,
                one: table.one,
            },
        })
    }

    /// Reads and validates a table-ring JSON file.
    pub fn from_table_file(path: impl AsRef<Path>) -> Result<FiniteRing, Error> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.display().to_string(),
            source,
        })?;
        let table: TableFile = serde_json::from_str(&text)?;
        FiniteRing::from_tables(&table)
    }

    /// Parses a ring expression: `atom (" x " atom)*` where an atom is
    /// `Z/<n>`, `GF(<q>)` or `table:<path>`.
    pub fn parse(spec: &str) -> Result<FiniteRing, Error> {
        let spec = spec.trim();
        if spec.is_empty() {
            return Err(Error::Parse("empty ring expression".into()));
        }
        let mut factors = Vec::new();
        for atom in spec.split(" x ") {
            factors.push(parse_atom(atom.trim())?);
        }
        FiniteRing::product(factors)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn elements(&self) -> impl Iterator<Item = RingElem> {
        (0..self.order).map(RingElem)
    }

    pub fn zero(&self) -> RingElem {
        match &self.repr {
            Repr::Modular { .. } | Repr::Galois { .. } => RingElem(0),
            Repr::Product { factors } => {
                let tuple: Vec<usize> = factors.iter().map(|f| f.zero().0).collect();
                RingElem(self.encode(&tuple))
            }
            Repr::Table { zero, .. } => RingElem(*zero),
        }
    }

    pub fn one(&self) -> RingElem {
        match &self.repr {
            Repr::Modular { .. } | Repr::Galois { .. } => RingElem(1),
            Repr::Product { factors } => {
                let tuple: Vec<usize> = factors.iter().map(|f| f.one().0).collect();
                RingElem(self.encode(&tuple))
            }
            Repr::Table { one, .. } => RingElem(*one),
        }
    }

    pub fn add(&self, a: RingElem, b: RingElem) -> RingElem {
        debug_assert!(a.0 < self.order && b.0 < self.order);
        match &self.repr {
            Repr::Modular { n } => RingElem((a.0 + b.0) % n),
            Repr::Galois { p, k, .. } => {
                let mut out = 0usize;
                let mut stride = 1usize;
                let (mut x, mut y) = (a.0, b.0);
                for _ in 0..*k {
                    out += ((x + y) % p) * stride;
                    x /= p;
                    y /= p;
                    stride *= p;
                }
                RingElem(out)
            }
            Repr::Product { factors } => {
                let ta = self.decode(a.0);
                let tb = self.decode(b.0);
                let tuple: Vec<usize> = factors
                    .iter()
                    .zip(ta.iter().zip(tb.iter()))
                    .map(|(f, (&x, &y))| f.add(RingElem(x), RingElem(y)).0)
                    .collect();
                RingElem(self.encode(&tuple))
            }
            Repr::Table { add, .. } => RingElem(add[a.0 * self.order + b.0] as usize),
        }
    }

    pub fn mul(&self, a: RingElem, b: RingElem) -> RingElem {
        debug_assert!(a.0 < self.order && b.0 < self.order);
        match &self.repr {
            Repr::Modular { n } => RingElem((a.0 * b.0) % n),
            Repr::Galois { p, k, modulus } => {
                // Schoolbook product of the digit polynomials, reduced by the
                // monic modulus.
                let mut prod = [0usize; 32];
                let digits = |mut v: usize| {
                    let mut d = [0usize; 16];
                    for slot in d.iter_mut().take(*k) {
                        *slot = v % p;
                        v /= p;
                    }
                    d
                };
                let da = digits(a.0);
                let db = digits(b.0);
                for i in 0..*k {
                    if da[i] == 0 {
                        continue;
                    }
                    for j in 0..*k {
                        prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
                    }
                }
                for deg in (*k..=2 * (*k - 1)).rev() {
                    let c = prod[deg];
                    if c == 0 {
                        continue;
                    }
                    prod[deg] = 0;
                    for (i, &m) in modulus.iter().enumerate().take(*k) {
                        let idx = deg - *k + i;
                        prod[idx] = (prod[idx] + c * (p - m) % p) % p;
                    }
                }
                let mut out = 0usize;
                let mut stride = 1usize;
                for &d in prod.iter().take(*k) {
                    out += d * stride;
                    stride *= p;
                }
                RingElem(out)
            }
            Repr::Product { factors } => {
                let ta = self.decode(a.0);
                let tb = self.decode(b.0);
                let tuple: Vec<usize> = factors
                    .iter()
                    .zip(ta.iter().zip(tb.iter()))
                    .map(|(f, (&x, &y))| f.mul(RingElem(x), RingElem(y)).0)
                    .collect();
                RingElem(self.encode(&tuple))
            }
            Repr::Table { mul, .. } => RingElem(mul[a.0 * self.order + b.0] as usize),
        }
    }

    pub fn neg(&self, a: RingElem) -> RingElem {
        match &self.repr {
            Repr::Modular { n } => RingElem((n - a.0) % n),
            Repr::Galois { p, k, .. } => {
                let mut out = 0usize;
                let mut stride = 1usize;
                let mut x = a.0;
                for _ in 0..*k {
                    out += ((p - x % p) % p) * stride;
                    x /= p;
                    stride *= p;
                }
                RingElem(out)
            }
            _ => {
                let zero = self.zero();
                self.elements()
                    .find(|&b| self.add(a, b) == zero)
                    .expect("additive inverse exists")
            }
        }
    }

    pub fn sub(&self, a: RingElem, b: RingElem) -> RingElem {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse by exhaustive search.
    pub fn inverse(&self, a: RingElem) -> Option<RingElem> {
        let one = self.one();
        self.elements().find(|&b| self.mul(a, b) == one)
    }

    pub fn is_unit(&self, a: RingElem) -> bool {
        self.inverse(a).is_some()
    }

    /// Mixed-radix decoding of a product-ring index; panics on non-products.
    fn decode(&self, mut index: usize) -> Vec<usize> {
        match &self.repr {
            Repr::Product { factors } => {
                let mut tuple = vec![0usize; factors.len()];
                for (slot, f) in tuple.iter_mut().zip(factors.iter()).rev() {
                    *slot = index % f.order();
                    index /= f.order();
                }
                tuple
            }
            _ => unreachable!("decode on non-product ring"),
        }
    }

    fn encode(&self, tuple: &[usize]) -> usize {
        match &self.repr {
            Repr::Product { factors } => {
                let mut index = 0usize;
                for (f, &i) in factors.iter().zip(tuple.iter()) {
                    index = index * f.order() + i;
                }
                index
            }
            _ => unreachable!("encode on non-product ring"),
        }
    }

    /// Human-readable name for diagnostics.
    pub fn describe(&self) -> String {
        match &self.repr {
            Repr::Modular { n } => format!("Z/{n}"),
            Repr::Galois { p, k, .. } => format!("GF({})", checked_pow(*p, *k).unwrap()),
            Repr::Product { factors } => factors
                .iter()
                .map(|f| f.describe())
                .collect::<Vec<_>>()
                .join(" x "),
            Repr::Table { .. } => format!("table ring of order {}", self.order),
        }
    }

    /// Exhaustive check of every ring axiom. O(order^3).
    pub fn validate_axioms(&self) -> Result<(), Error> {
        let table = self.to_table_file();
        validate_table(&table)
    }

    /// Exports the ring as explicit operation tables.
    pub fn to_table_file(&self) -> TableFile {
        let n = self.order;
        let mut add = vec![vec![0usize; n]; n];
        let mut mul = vec![vec![0usize; n]; n];
        for i in 0..n {
            for j in 0..n {
                add[i][j] = self.add(RingElem(i), RingElem(j)).0;
                mul[i][j] = self.mul(RingElem(i), RingElem(j)).0;
            }
        }
        TableFile {
            order: n,
            zero: self.zero().0,
            one: self.one().0,
            add,
            mul,
        }
    }

    /// True iff every nonzero element is a unit.
    pub fn is_field(&self) -> bool {
        let zero = self.zero();
        self.elements().all(|a| a == zero || self.is_unit(a))
    }

    /// True iff the non-units form an ideal (equivalently, the ring has a
    /// unique maximal ideal).
    pub fn is_local(&self) -> bool {
        self.local_data().is_ok()
    }

    /// Units, maximal ideal, its square, and one representative per class of
    /// associates in m \ m^2 together with the annihilator of each.
    pub fn local_data(&self) -> Result<LocalData, Error> {
        let n = self.order;
        let zero = self.zero();
        let mut unit_mask = vec![false; n];
        for a in self.elements() {
            unit_mask[a.0] = self.is_unit(a);
        }
        let units: Vec<RingElem> = (0..n).filter(|&i| unit_mask[i]).map(RingElem).collect();
        let maximal_ideal: Vec<RingElem> =
            (0..n).filter(|&i| !unit_mask[i]).map(RingElem).collect();

        // Local means the non-units absorb addition.
        for &a in &maximal_ideal {
            for &b in &maximal_ideal {
                let s = self.add(a, b);
                if unit_mask[s.0] {
                    return Err(Error::NotLocal(format!(
                        "{} in {}: non-units {} + {} = {} is a unit",
                        self.describe(),
                        self.describe(),
                        a,
                        b,
                        s
                    )));
                }
            }
        }
        // Absorption under multiplication holds in any commutative ring; keep
        // the check as a guard against broken table input.
        for &a in &maximal_ideal {
            for r in self.elements() {
                let p = self.mul(r, a);
                if unit_mask[p.0] {
                    return Err(Error::Invariant(format!(
                        "non-unit {a} times {r} is a unit in {}",
                        self.describe()
                    )));
                }
            }
        }

        // m^2: additive closure of the set of pairwise products.
        let mut in_m2 = vec![false; n];
        let mut products = Vec::new();
        for &a in &maximal_ideal {
            for &b in &maximal_ideal {
                let p = self.mul(a, b);
                if !in_m2[p.0] {
                    in_m2[p.0] = true;
                    products.push(p);
                }
            }
        }
        let generators = products.clone();
        let mut queue = products;
        while let Some(x) = queue.pop() {
            for &g in &generators {
                let s = self.add(x, g);
                if !in_m2[s.0] {
                    in_m2[s.0] = true;
                    queue.push(s);
                }
            }
        }
        in_m2[zero.0] = true;
        let m_squared: Vec<RingElem> = (0..n).filter(|&i| in_m2[i]).map(RingElem).collect();

        // Associate classes of m \ m^2, scanned in index order so the least
        // element of each class is met first.
        let mut seen = vec![false; n];
        let mut associate_classes = Vec::new();
        let mut associate_reps = Vec::new();
        let mut annihilators = Vec::new();
        for &a in &maximal_ideal {
            if in_m2[a.0] || seen[a.0] {
                continue;
            }
            let mut class: Vec<RingElem> = units
                .iter()
                .map(|&u| self.mul(u, a))
                .collect::<std::collections::BTreeSet<_>>()
                .into_iter()
                .collect();
            class.sort();
            for &c in &class {
                debug_assert!(!in_m2[c.0], "associate class leaves m \\ m^2");
                seen[c.0] = true;
            }
            let ann: Vec<RingElem> = self
                .elements()
                .filter(|&r| self.mul(r, a) == zero)
                .collect();
            associate_reps.push(a);
            associate_classes.push(class);
            annihilators.push(ann);
        }

        Ok(LocalData {
            units,
            maximal_ideal,
            m_squared,
            associate_classes,
            associate_reps,
            annihilators,
        })
    }

    /// Splits the ring into local factors with explicit index maps.
    ///
    /// Modular rings split along the prime factorization, products split
    /// factorwise, and table rings are split by scanning for primitive
    /// idempotents and forming the corresponding components.
    pub fn local_decomposition(&self) -> Decomposition {
        match &self.repr {
            Repr::Modular { n } => {
                let primes = prime_power_factors(*n);
                if primes.len() == 1 {
                    return Decomposition::identity(self);
                }
                let factors: Vec<FiniteRing> = primes
                    .iter()
                    .map(|&q| FiniteRing::modular(q).expect("prime power >= 2"))
                    .collect();
                let forward: Vec<Vec<usize>> = (0..*n)
                    .map(|i| primes.iter().map(|&q| i % q).collect())
                    .collect();
                Decomposition::new(factors, forward)
            }
            Repr::Galois { .. } => Decomposition::identity(self),
            Repr::Product { factors } => {
                let subs: Vec<Decomposition> = factors.iter().map(|f| f.local_decomposition()).collect();
                let mut all_factors = Vec::new();
                for s in &subs {
                    all_factors.extend(s.factors.iter().cloned());
                }
                let forward: Vec<Vec<usize>> = (0..self.order)
                    .map(|i| {
                        let tuple = self.decode(i);
                        let mut row = Vec::new();
                        for (s, &fi) in subs.iter().zip(tuple.iter()) {
                            row.extend(s.forward[fi].iter().copied());
                        }
                        row
                    })
                    .collect();
                Decomposition::new(all_factors, forward)
            }
            Repr::Table { .. } => self.table_decomposition(),
        }
    }

    /// Peirce decomposition of a table ring along its primitive idempotents.
    fn table_decomposition(&self) -> Decomposition {
        let zero = self.zero();
        let one = self.one();
        let idempotents: Vec<RingElem> = self
            .elements()
            .filter(|&e| self.mul(e, e) == e)
            .collect();
        let primitive: Vec<RingElem> = idempotents
            .iter()
            .copied()
            .filter(|&e| {
                e != zero
                    && !idempotents
                        .iter()
                        .any(|&f| f != zero && f != e && self.mul(f, e) == f)
            })
            .collect();
        if primitive.len() == 1 {
            debug_assert_eq!(primitive[0], one);
            return Decomposition::identity(self);
        }
        // Orthogonality and completeness of the primitive idempotents.
        let mut total = zero;
        for (i, &e) in primitive.iter().enumerate() {
            for &f in primitive.iter().skip(i + 1) {
                debug_assert_eq!(self.mul(e, f), zero, "primitive idempotents overlap");
            }
            total = self.add(total, e);
        }
        assert_eq!(total, one, "primitive idempotents must sum to 1");

        let mut factors = Vec::new();
        let mut positions: Vec<HashMap<usize, usize>> = Vec::new();
        for &e in &primitive {
            let mut members: Vec<usize> = self
                .elements()
                .map(|r| self.mul(e, r).0)
                .collect::<std::collections::BTreeSet<_>>()
                .into_iter()
                .collect();
            members.sort_unstable();
            let pos: HashMap<usize, usize> =
                members.iter().enumerate().map(|(i, &m)| (m, i)).collect();
            let m = members.len();
            let mut add = vec![vec![0usize; m]; m];
            let mut mul = vec![vec![0usize; m]; m];
            for i in 0..m {
                for j in 0..m {
                    add[i][j] = pos[&self.add(RingElem(members[i]), RingElem(members[j])).0];
                    mul[i][j] = pos[&self.mul(RingElem(members[i]), RingElem(members[j])).0];
                }
            }
            let table = TableFile {
                order: m,
                zero: pos[&zero.0],
                one: pos[&e.0],
                add,
                mul,
            };
            factors.push(FiniteRing::from_tables(&table).expect("component of a valid ring"));
            positions.push(pos);
        }
        let forward: Vec<Vec<usize>> = (0..self.order)
            .map(|i| {
                primitive
                    .iter()
                    .zip(positions.iter())
                    .map(|(&e, pos)| pos[&self.mul(e, RingElem(i)).0])
                    .collect()
            })
            .collect();
        Decomposition::new(factors, forward)
    }
}

/// Units, maximal ideal and the derived invariants of a local ring.
#[derive(Clone, Debug)]
pub struct LocalData {
    pub units: Vec<RingElem>,
    pub maximal_ideal: Vec<RingElem>,
    pub m_squared: Vec<RingElem>,
    /// Classes of associates partitioning m \ m^2, each sorted, ordered by
    /// least member.
    pub associate_classes: Vec<Vec<RingElem>>,
    /// Least member of each associate class.
    pub associate_reps: Vec<RingElem>,
    /// Annihilator ideal of each representative, aligned with
    /// `associate_reps`. Annihilators do not depend on the representative
    /// chosen within a class.
    pub annihilators: Vec<Vec<RingElem>>,
}

impl LocalData {
    pub fn is_field(&self) -> bool {
        self.maximal_ideal.len() == 1
    }

    /// Number of associate classes in m \ m^2.
    pub fn class_count(&self) -> usize {
        self.associate_reps.len()
    }
}

/// A ring isomorphism onto a product of local rings, given by index maps.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub factors: Vec<FiniteRing>,
    /// For each element index of the original ring, its image tuple.
    pub forward: Vec<Vec<usize>>,
    backward: HashMap<Vec<usize>, usize>,
}

impl Decomposition {
    fn new(factors: Vec<FiniteRing>, forward: Vec<Vec<usize>>) -> Decomposition {
        let backward: HashMap<Vec<usize>, usize> = forward
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), i))
            .collect();
        assert_eq!(backward.len(), forward.len(), "index map is not injective");
        Decomposition {
            factors,
            forward,
            backward,
        }
    }

    fn identity(ring: &FiniteRing) -> Decomposition {
        let forward: Vec<Vec<usize>> = (0..ring.order()).map(|i| vec![i]).collect();
        Decomposition::new(vec![ring.clone()], forward)
    }

    pub fn backward(&self, tuple: &[usize]) -> Option<usize> {
        self.backward.get(tuple).copied()
    }
}

fn parse_atom(atom: &str) -> Result<FiniteRing, Error> {
    if let Some(n) = atom.strip_prefix("Z/") {
        let n: usize = n
            .parse()
            .map_err(|_| Error::Parse(format!("bad modulus in `{atom}`")))?;
        return FiniteRing::modular(n);
    }
    if let Some(rest) = atom.strip_prefix("GF(") {
        let inner = rest
            .strip_suffix(')')
            .ok_or_else(|| Error::Parse(format!("missing `)` in `{atom}`")))?;
        let q: usize = inner
            .parse()
            .map_err(|_| Error::Parse(format!("bad field order in `{atom}`")))?;
        let (p, k) = prime_power_split(q)
            .ok_or_else(|| Error::Parse(format!("GF({q}): {q} is not a prime power")))?;
        return FiniteRing::galois(p, k);
    }
    if let Some(path) = atom.strip_prefix("table:") {
        return FiniteRing::from_table_file(path);
    }
    Err(Error::Parse(format!(
        "unrecognized atom `{atom}`; expected Z/<n>, GF(<q>) or table:<path>"
    )))
}

fn validate_table(t: &TableFile) -> Result<(), Error> {
    let n = t.order;
    if n < 2 {
        return Err(Error::InvalidRing(
            "table ring must have at least 2 elements".into(),
        ));
    }
    let shape_ok = |m: &Vec<Vec<usize>>| m.len() == n && m.iter().all(|r| r.len() == n);
    if !shape_ok(&t.add) || !shape_ok(&t.mul) {
        return Err(Error::InvalidRing(format!("tables must be {n} x {n}")));
    }
    let in_range = |m: &Vec<Vec<usize>>| m.iter().flatten().all(|&v| v < n);
    if !in_range(&t.add) || !in_range(&t.mul) || t.zero >= n || t.one >= n {
        return Err(Error::InvalidRing(format!("entries must lie in [0, {n})")));
    }
    if t.zero == t.one {
        return Err(Error::InvalidRing("0 = 1; the zero ring is rejected".into()));
    }
    let fail = |axiom: &str, witness: String| {
        Err(Error::AxiomViolation {
            axiom: axiom.into(),
            witness,
        })
    };
    for a in 0..n {
        if t.add[a][t.zero] != a {
            return fail("additive identity", format!("{a} + 0 = {}", t.add[a][t.zero]));
        }
        if t.mul[a][t.one] != a {
            return fail("multiplicative identity", format!("{a} * 1 = {}", t.mul[a][t.one]));
        }
        if !(0..n).any(|b| t.add[a][b] == t.zero) {
            return fail("additive inverse", format!("{a} has no negative"));
        }
    }
    for a in 0..n {
        for b in 0..n {
            if t.add[a][b] != t.add[b][a] {
                return fail("additive commutativity", format!("{a} + {b} != {b} + {a}"));
            }
            if t.mul[a][b] != t.mul[b][a] {
                return fail(
                    "multiplicative commutativity",
                    format!("{a} * {b} != {b} * {a}"),
                );
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if t.add[t.add[a][b]][c] != t.add[a][t.add[b][c]] {
                    return fail(
                        "additive associativity",
                        format!("({a} + {b}) + {c} != {a} + ({b} + {c})"),
                    );
                }
                if t.mul[t.mul[a][b]][c] != t.mul[a][t.mul[b][c]] {
                    return fail(
                        "multiplicative associativity",
                        format!("({a} * {b}) * {c} != {a} * ({b} * {c})"),
                    );
                }
                if t.mul[a][t.add[b][c]] != t.add[t.mul[a][b]][t.mul[a][c]] {
                    return fail(
                        "distributivity",
                        format!("{a} * ({b} + {c}) != {a}*{b} + {a}*{c}"),
                    );
                }
            }
        }
    }
    Ok(())
}

fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2usize;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn checked_pow(base: usize, exp: usize) -> Option<usize> {
    let mut out = 1usize;
    for _ in 0..exp {
        out = out.checked_mul(base)?;
    }
    Some(out)
}

/// Splits q as p^k for prime p, if possible.
fn prime_power_split(q: usize) -> Option<(usize, usize)> {
    if q < 2 {
        return None;
    }
    let mut p = 2usize;
    while p * p <= q {
        if q % p == 0 {
            let mut rest = q;
            let mut k = 0usize;
            while rest % p == 0 {
                rest /= p;
                k += 1;
            }
            return if rest == 1 { Some((p, k)) } else { None };
        }
        p += 1;
    }
    Some((q, 1))
}

/// Prime power factors of n in ascending prime order.
fn prime_power_factors(n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut rest = n;
    let mut p = 2usize;
    while p * p <= rest {
        if rest % p == 0 {
            let mut q = 1usize;
            while rest % p == 0 {
                rest /= p;
                q *= p;
            }
            out.push(q);
        }
        p += 1;
    }
    if rest > 1 {
        out.push(rest);
    }
    out
}

/// Remainder of `a` modulo monic `b` over F_p; polynomials as coefficient
/// vectors, least degree first.
fn poly_rem(a: &[usize], b: &[usize], p: usize) -> Vec<usize> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().unwrap();
        let dr = r.len() - 1;
        if lead != 0 {
            for i in 0..db {
                let idx = dr - db + i;
                r[idx] = (r[idx] + lead * (p - b[i]) % p) % p;
            }
        }
        r.pop();
    }
    while r.len() > 1 && *r.last().unwrap() == 0 {
        r.pop();
    }
    r
}

/// Lexicographically least monic irreducible of degree k over F_p, with
/// lower-degree coefficients compared as base-p digits.
fn default_modulus(p: usize, k: usize) -> Vec<usize> {
    let count = checked_pow(p, k).expect("bounded search space");
    for c in 0..count {
        let mut poly: Vec<usize> = Vec::with_capacity(k + 1);
        let mut v = c;
        for _ in 0..k {
            poly.push(v % p);
            v /= p;
        }
        poly.push(1);
        if find_monic_divisor(p, &poly).is_none() {
            return poly;
        }
    }
    unreachable!("an irreducible of every degree exists over every prime field")
}

/// Finds a monic divisor of lower degree, if any. The scan covers every
/// monic polynomial of degree 1..k-1 over F_p.
fn find_monic_divisor(p: usize, modulus: &[usize]) -> Option<Vec<usize>> {
    let k = modulus.len() - 1;
    for d in 1..k {
        let count = checked_pow(p, d).expect("small search space");
        for c in 0..count {
            let mut poly: Vec<usize> = Vec::with_capacity(d + 1);
            let mut v = c;
            for _ in 0..d {
                poly.push(v % p);
                v /= p;
            }
            poly.push(1);
            let r = poly_rem(modulus, &poly, p);
            if r.len() == 1 && r[0] == 0 {
                return Some(poly);
            }
        }
    }
    None
}

fn poly_string(poly: &[usize]) -> String {
    let terms: Vec<String> = poly
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| match i {
            0 => format!("{c}"),
            1 if c == 1 => "x".into(),
            1 => format!("{c}x"),
            _ if c == 1 => format!("x^{i}"),
            _ => format!("{c}x^{i}"),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}
