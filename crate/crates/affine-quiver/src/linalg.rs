//! Exact rational row reduction for the brute-force arrow count.
//!
//! The spanning vectors of the arrow-counting module have small integer
//! entries; elimination runs over arbitrary-precision rationals and the
//! fully reduced basis is then rescaled to one integer matrix plus a common
//! denominator. In reduced echelon form every vector of the span is
//! determined by its pivot coordinates, which makes membership tests and
//! restricted traces pure integer arithmetic.

use num::rational::Ratio;
use num::{BigInt, BigRational, Signed, ToPrimitive, Zero};

/// A fully reduced basis of the rational span of a set of integer vectors.
pub(crate) struct ReducedBasis {
    pub ambient: usize,
    /// Pivot coordinate of each basis vector, strictly ascending.
    pub pivots: Vec<usize>,
    /// `scaled[j] = denom * b_j`, integral.
    pub scaled: Vec<Vec<i64>>,
    /// Common denominator, >= 1.
    pub denom: i64,
}

impl ReducedBasis {
    pub fn dimension(&self) -> usize {
        self.pivots.len()
    }

    /// Membership test for a vector given in the same `denom` scaling: the
    /// candidate must equal the pivot-coordinate combination of the basis.
    pub fn contains_scaled(&self, w: &[i64]) -> bool {
        debug_assert_eq!(w.len(), self.ambient);
        for c in 0..self.ambient {
            let mut acc: i128 = 0;
            for (j, &p) in self.pivots.iter().enumerate() {
                acc += w[p] as i128 * self.scaled[j][c] as i128;
            }
            if acc != self.denom as i128 * w[c] as i128 {
                return false;
            }
        }
        true
    }
}

/// Gauss-Jordan over Q. Deterministic: vectors are folded in input order and
/// pivots are the first nonzero coordinates.
pub(crate) fn reduced_basis(vectors: &[Vec<i64>], ambient: usize) -> ReducedBasis {
    let mut rows: Vec<(usize, Vec<BigRational>)> = Vec::new();
    for v in vectors {
        debug_assert_eq!(v.len(), ambient);
        let mut work: Vec<BigRational> = v
            .iter()
            .map(|&x| BigRational::from_integer(BigInt::from(x)))
            .collect();
        for (pivot, row) in &rows {
            let c = work[*pivot].clone();
            if !c.is_zero() {
                for (w, r) in work.iter_mut().zip(row.iter()) {
                    *w -= &c * r;
                }
            }
        }
        let Some(pivot) = work.iter().position(|x| !x.is_zero()) else {
            continue;
        };
        let lead = work[pivot].clone();
        for w in work.iter_mut() {
            *w /= &lead;
        }
        for (_, row) in rows.iter_mut() {
            let c = row[pivot].clone();
            if !c.is_zero() {
                for (r, w) in row.iter_mut().zip(work.iter()) {
                    *r -= &c * w;
                }
            }
        }
        rows.push((pivot, work));
    }
    rows.sort_by_key(|(p, _)| *p);

    let mut denom = BigInt::from(1);
    for (_, row) in &rows {
        for x in row {
            denom = num::integer::lcm(denom.clone(), x.denom().abs());
        }
    }
    let scaled: Vec<Vec<i64>> = rows
        .iter()
        .map(|(_, row)| {
            row.iter()
                .map(|x| {
                    let v: BigRational = x * Ratio::from_integer(denom.clone());
                    debug_assert!(v.is_integer());
                    v.to_integer().to_i64().expect("basis entries fit in i64")
                })
                .collect()
        })
        .collect();
    ReducedBasis {
        ambient,
        pivots: rows.into_iter().map(|(p, _)| p).collect(),
        scaled,
        denom: denom.to_i64().expect("denominator fits in i64"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_vectors_reduce_to_themselves() {
        let vectors = vec![vec![0, 1, 0, 0], vec![0, 0, 0, 1]];
        let b = reduced_basis(&vectors, 4);
        assert_eq!(b.dimension(), 2);
        assert_eq!(b.pivots, vec![1, 3]);
        assert_eq!(b.denom, 1);
        assert!(b.contains_scaled(&[0, 1, 0, 1]));
        assert!(!b.contains_scaled(&[1, 0, 0, 0]));
    }

    #[test]
    fn differences_span_the_sum_zero_space() {
        let vectors = vec![vec![1, -1, 0], vec![1, 0, -1], vec![0, 1, -1]];
        let b = reduced_basis(&vectors, 3);
        assert_eq!(b.dimension(), 2);
        assert!(b.contains_scaled(&[2, -1, -1]));
        assert!(!b.contains_scaled(&[1, 1, 1]));
    }

    #[test]
    fn dependent_vectors_collapse() {
        let vectors = vec![vec![2, 4], vec![1, 2], vec![3, 6]];
        let b = reduced_basis(&vectors, 2);
        assert_eq!(b.dimension(), 1);
        // Reduced row 1, 2 has pivot 0 and denominator 1 after scaling.
        assert_eq!(b.scaled, vec![vec![1, 2]]);
    }

    #[test]
    fn fractional_reductions_get_a_common_denominator() {
        let vectors = vec![vec![2, 1, 0], vec![0, 3, 1]];
        let b = reduced_basis(&vectors, 3);
        assert_eq!(b.dimension(), 2);
        // Rows are (1, 0, -1/6) and (0, 1, 1/3).
        assert_eq!(b.denom, 6);
        assert_eq!(b.scaled, vec![vec![6, 0, -1], vec![0, 6, 2]]);
        // 6 * (2, 1, 0) is the scaled form of an input vector.
        assert!(b.contains_scaled(&[12, 6, 0]));
        assert!(!b.contains_scaled(&[12, 6, -1]));
    }

    #[test]
    fn empty_input() {
        let b = reduced_basis(&[], 5);
        assert_eq!(b.dimension(), 0);
        assert!(b.contains_scaled(&[0; 5]));
        assert!(!b.contains_scaled(&[1, 0, 0, 0, 0]));
    }
}
