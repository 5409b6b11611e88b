//! Cyclic decomposition of a finite abelian group presented by an operation
//! on element ids.
//!
//! The decomposition is greedy: extract an element of maximal order, find a
//! complement for the cyclic subgroup it generates by scanning elements in id
//! order, and recurse on the complement. An element of maximal order always
//! generates a direct summand, and the greedy scan always completes because
//! the quotient by any partial complement still has the same exponent.

use std::collections::HashMap;

/// A direct-sum decomposition into cyclic subgroups.
pub(crate) struct CyclicDecomposition {
    /// Generator element ids.
    pub generators: Vec<usize>,
    /// Orders of the generators, aligned.
    pub orders: Vec<usize>,
    /// Coordinates of every group element: `coords[&x][i] < orders[i]` and
    /// x = sum of coords * generators.
    pub coords: HashMap<usize, Vec<usize>>,
}

impl CyclicDecomposition {
    /// Group order.
    pub fn order(&self) -> usize {
        self.orders.iter().product()
    }
}

/// Decomposes the abelian group on `elements` under `op` with the given
/// identity. Deterministic: ties in the maximal-order scan break toward the
/// least element id.
pub(crate) fn decompose(
    elements: &[usize],
    identity: usize,
    op: &dyn Fn(usize, usize) -> usize,
) -> CyclicDecomposition {
    let n = elements.len();
    if n == 1 {
        let mut coords = HashMap::new();
        coords.insert(identity, Vec::new());
        return CyclicDecomposition {
            generators: Vec::new(),
            orders: Vec::new(),
            coords,
        };
    }

    let order_of = |x: usize| -> usize {
        let mut k = 1usize;
        let mut y = x;
        while y != identity {
            y = op(y, x);
            k += 1;
        }
        k
    };

    let mut best = (0usize, identity);
    for &x in elements {
        let o = order_of(x);
        if o > best.0 || (o == best.0 && x < best.1) {
            best = (o, x);
        }
    }
    let (d, g) = best;

    let mut cyclic = HashMap::new();
    let mut y = identity;
    for j in 0..d {
        cyclic.insert(y, j);
        y = op(y, g);
    }
    debug_assert_eq!(y, identity);

    // Complement of <g>, grown one generator at a time. Adjoining x extends a
    // subgroup C to the union of cosets C, Cx, ..., Cx^{m-1} where m is least
    // with x^m in C.
    let target = n / d;
    let mut complement: Vec<usize> = vec![identity];
    let mut in_complement: HashMap<usize, ()> = HashMap::new();
    in_complement.insert(identity, ());
    if target > 1 {
        for &x in elements {
            if in_complement.contains_key(&x) {
                continue;
            }
            let mut m = 1usize;
            let mut p = x;
            while !in_complement.contains_key(&p) {
                p = op(p, x);
                m += 1;
            }
            let mut extended: Vec<usize> = Vec::with_capacity(complement.len() * m);
            let mut power = identity;
            for _ in 0..m {
                for &c in &complement {
                    extended.push(op(c, power));
                }
                power = op(power, x);
            }
            // Reject if the extension meets <g> beyond the identity.
            if extended
                .iter()
                .any(|&y| y != identity && cyclic.contains_key(&y))
            {
                continue;
            }
            complement = extended;
            in_complement = complement.iter().map(|&c| (c, ())).collect();
            debug_assert_eq!(in_complement.len(), complement.len());
            if complement.len() == target {
                break;
            }
        }
    }
    assert_eq!(
        complement.len(),
        target,
        "complement search failed; the operation is not a group operation"
    );

    complement.sort_unstable();
    let sub = decompose(&complement, identity, op);

    // g^(d-1) is the inverse of g.
    let mut g_inv = identity;
    for _ in 0..d - 1 {
        g_inv = op(g_inv, g);
    }

    let mut coords = HashMap::with_capacity(n);
    for &x in elements {
        let mut y = x;
        let mut found = None;
        for j in 0..d {
            if let Some(rest) = sub.coords.get(&y) {
                let mut c = Vec::with_capacity(1 + rest.len());
                c.push(j);
                c.extend(rest.iter().copied());
                found = Some(c);
                break;
            }
            y = op(y, g_inv);
        }
        coords.insert(x, found.expect("every element splits across the summands"));
    }

    let mut generators = vec![g];
    generators.extend(sub.generators);
    let mut orders = vec![d];
    orders.extend(sub.orders);
    CyclicDecomposition {
        generators,
        orders,
        coords,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(n: usize, op: impl Fn(usize, usize) -> usize) {
        let elements: Vec<usize> = (0..n).collect();
        let dec = decompose(&elements, 0, &op);
        assert_eq!(dec.order(), n);
        // Coordinates are a bijection onto the full tuple space.
        let mut seen = std::collections::HashSet::new();
        for &x in &elements {
            let c = &dec.coords[&x];
            assert_eq!(c.len(), dec.orders.len());
            for (ci, oi) in c.iter().zip(dec.orders.iter()) {
                assert!(ci < oi);
            }
            assert!(seen.insert(c.clone()));
            // Reconstruct x from its coordinates.
            let mut y = 0usize;
            for (g, &k) in dec.generators.iter().zip(c.iter()) {
                for _ in 0..k {
                    y = op(y, *g);
                }
            }
            assert_eq!(y, x);
        }
    }

    #[test]
    fn cyclic_group() {
        check(12, |a, b| (a + b) % 12);
    }

    #[test]
    fn klein_four_group() {
        check(4, |a, b| a ^ b);
    }

    #[test]
    fn elementary_abelian_eight() {
        check(8, |a, b| a ^ b);
    }

    #[test]
    fn mixed_exponent() {
        // Z/4 x Z/2 encoded as 0..8 with a = 2*i + j.
        let op = |a: usize, b: usize| {
            let (i1, j1) = (a / 2, a % 2);
            let (i2, j2) = (b / 2, b % 2);
            2 * ((i1 + i2) % 4) + ((j1 + j2) % 2)
        };
        check(8, op);
    }
}
