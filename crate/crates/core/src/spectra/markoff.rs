//! Markoff triples via the Vieta tree and the discrete Lagrange values
//! L_j = sqrt(9 - 4/M_j^2).

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use num::bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::surd::QuadSurd;

/// A solution of a^2 + b^2 + c^2 = 3abc, sorted ascending.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MarkoffTriple {
    pub a: u128,
    pub b: u128,
    pub c: u128,
}

impl MarkoffTriple {
    fn sorted(mut t: [u128; 3]) -> Self {
        t.sort_unstable();
        MarkoffTriple {
            a: t[0],
            b: t[1],
            c: t[2],
        }
    }

    pub fn max(&self) -> u128 {
        self.c
    }

    pub fn satisfies_equation(&self) -> bool {
        let (a, b, c) = (self.a, self.b, self.c);
        match (
            a.checked_mul(a),
            b.checked_mul(b),
            c.checked_mul(c),
            a.checked_mul(b).and_then(|ab| ab.checked_mul(c)),
        ) {
            (Some(aa), Some(bb), Some(cc), Some(abc)) => {
                aa.checked_add(bb)
                    .and_then(|s| s.checked_add(cc))
                    .zip(abc.checked_mul(3))
                    .map(|(lhs, rhs)| lhs == rhs)
                    .unwrap_or(false)
            }
            _ => false,
        }
    }

    /// Vieta branching: replace one coordinate x by 3yz - x.
    fn neighbors(&self) -> Result<[MarkoffTriple; 3]> {
        let (a, b, c) = (self.a, self.b, self.c);
        let flip = |x: u128, y: u128, z: u128| -> Result<MarkoffTriple> {
            let yz = y.checked_mul(z).ok_or(Error::Overflow("markoff neighbor"))?;
            let t = yz
                .checked_mul(3)
                .and_then(|v| v.checked_sub(x))
                .ok_or(Error::Overflow("markoff neighbor"))?;
            Ok(MarkoffTriple::sorted([t, y, z]))
        };
        Ok([flip(a, b, c)?, flip(b, a, c)?, flip(c, a, b)?])
    }
}

/// First `count` triples of the Vieta tree, ordered by max element.
pub fn markoff_triples(count: usize) -> Result<Vec<MarkoffTriple>> {
    let root = MarkoffTriple::sorted([1, 1, 1]);
    let mut heap: BinaryHeap<Reverse<(u128, [u128; 3])>> = BinaryHeap::new();
    let mut seen: HashSet<MarkoffTriple> = HashSet::new();
    heap.push(Reverse((root.max(), [root.a, root.b, root.c])));
    seen.insert(root);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let Some(Reverse((_, t))) = heap.pop() else {
            break;
        };
        let triple = MarkoffTriple::sorted(t);
        assert!(
            triple.satisfies_equation(),
            "generated triple violates a^2+b^2+c^2 = 3abc: {triple:?}"
        );
        out.push(triple);
        for n in triple.neighbors()? {
            if seen.insert(n) {
                heap.push(Reverse((n.max(), [n.a, n.b, n.c])));
            }
        }
    }
    Ok(out)
}

/// First `count` Markoff numbers: sorted distinct max elements. Uniqueness
/// per number is the classical conjecture and only labels the index j; the
/// values themselves are exact.
pub fn markoff_numbers(count: usize) -> Result<Vec<u128>> {
    let mut numbers = Vec::with_capacity(count);
    let mut batch = count.max(4);
    loop {
        let triples = markoff_triples(batch)?;
        numbers.clear();
        for t in &triples {
            if numbers.last() != Some(&t.max()) {
                numbers.push(t.max());
            }
        }
        if numbers.len() >= count {
            numbers.truncate(count);
            return Ok(numbers);
        }
        if triples.len() < batch {
            return Ok(numbers); // tree exhausted (cannot happen in practice)
        }
        batch *= 2;
    }
}

/// L(M) = sqrt(9 - 4/M^2) = sqrt(9 M^2 - 4)/M, exactly.
pub fn lagrange_value_of(m: u128) -> Result<QuadSurd> {
    if m == 0 {
        return Err(Error::Domain("Markoff numbers are positive".to_string()));
    }
    let m = BigInt::from(m);
    QuadSurd::new(0, 1, m.clone(), BigInt::from(9) * &m * &m - BigInt::from(4))
}

/// The j-th discrete Lagrange value (1-based), with its Markoff number.
pub fn lagrange_l(j: usize) -> Result<(u128, QuadSurd)> {
    if j == 0 {
        return Err(Error::Domain("Lagrange values are indexed from 1".to_string()));
    }
    let numbers = markoff_numbers(j)?;
    let m = *numbers.last().ok_or(Error::Domain("index out of range".to_string()))?;
    Ok((m, lagrange_value_of(m)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_markoff_numbers() {
        assert_eq!(
            markoff_numbers(9).unwrap(),
            vec![1, 2, 5, 13, 29, 34, 89, 169, 194]
        );
    }

    #[test]
    fn triples_all_satisfy_the_equation() {
        let triples = markoff_triples(40).unwrap();
        assert_eq!(triples.len(), 40);
        assert!(triples.iter().all(|t| t.satisfies_equation()));
        // sorted by max element
        assert!(triples.windows(2).all(|w| w[0].max() <= w[1].max()));
    }

    #[test]
    fn vieta_tree_shape() {
        let triples = markoff_triples(5).unwrap();
        assert_eq!(triples[0], MarkoffTriple { a: 1, b: 1, c: 1 });
        assert_eq!(triples[1], MarkoffTriple { a: 1, b: 1, c: 2 });
        assert_eq!(triples[2], MarkoffTriple { a: 1, b: 2, c: 5 });
        assert_eq!(triples[3], MarkoffTriple { a: 1, b: 5, c: 13 });
        assert_eq!(triples[4], MarkoffTriple { a: 2, b: 5, c: 29 });
    }

    #[test]
    fn classical_lagrange_values() {
        let (m1, l1) = lagrange_l(1).unwrap();
        assert_eq!(m1, 1);
        assert_eq!(l1, QuadSurd::new(0, 1, 1, 5).unwrap());
        let (m2, l2) = lagrange_l(2).unwrap();
        assert_eq!(m2, 2);
        assert_eq!(l2, QuadSurd::new(0, 1, 1, 8).unwrap());
        let (m3, l3) = lagrange_l(3).unwrap();
        assert_eq!(m3, 5);
        assert_eq!(l3, QuadSurd::new(0, 1, 5, 221).unwrap());
    }

    #[test]
    fn l3_enclosure_contains_reference_decimal() {
        let (_, l3) = lagrange_l(3).unwrap();
        assert_eq!(&l3.decimal(10)[..11], "2.973213749");
    }
}
