//! Exact partition arithmetic: enumeration, centralizer orders, symmetric
//! group class sizes, parity, and the prepend identity.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// A partition of a natural number: weakly decreasing positive parts.
///
/// Indexes the conjugacy classes of the symmetric group of its size.
/// Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u64>,
}

/// Parity of permutations of a given cycle type.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Partition {
    /// Builds a partition from arbitrary-order positive parts.
    /// The empty sequence gives the empty partition of 0.
    pub fn new(parts: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut parts: Vec<u64> = parts.into_iter().collect();
        if let Some(&zero) = parts.iter().find(|&&p| p == 0) {
            return Err(Error::InvalidPart(zero as i64));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// Builds from parts already known to be weakly decreasing and positive.
    pub(crate) fn from_sorted_unchecked(parts: Vec<u64>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part multiplicities m_i: how many parts equal each value i.
    pub fn part_counts(&self) -> PartCountTable {
        let mut counts = BTreeMap::new();
        for &p in &self.parts {
            *counts.entry(p).or_insert(0u64) += 1;
        }
        PartCountTable { counts }
    }

    pub fn all_parts_distinct(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    pub fn has_even_part(&self) -> bool {
        self.parts.iter().any(|&p| p % 2 == 0)
    }

    pub fn all_parts_odd(&self) -> bool {
        self.parts.iter().all(|&p| p % 2 == 1)
    }

    /// Parity of permutations of this cycle type: a cycle of length c
    /// contributes c - 1 transpositions, so the type is even iff
    /// size - #parts is even.
    pub fn sign(&self) -> Parity {
        if (self.size() - self.len() as u64) % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Centralizer order in the symmetric group:
    /// C(lambda) = prod_i i^{m_i} * m_i!.
    ///
    /// When all parts are distinct this is just the product of the parts.
    pub fn centralizer_order(&self) -> BigUint {
        self.part_counts().centralizer_order()
    }

    /// Conjugacy class size in the symmetric group of degree size():
    /// n! / C(lambda).
    pub fn class_size_sym(&self) -> BigUint {
        factorial(self.size()) / self.centralizer_order()
    }

    /// Prepends a new largest part. Requires lambda0 >= current first part.
    ///
    /// When the inequality is strict, C((lambda0, lambda)) = lambda0 * C(lambda);
    /// the identity is asserted in that case.
    pub fn prepend(&self, lambda0: u64) -> Result<Partition> {
        if lambda0 == 0 {
            return Err(Error::InvalidPart(0));
        }
        let first = self.parts.first().copied().unwrap_or(0);
        if lambda0 < first {
            return Err(Error::PrependTooSmall {
                lambda0,
                first_part: first,
            });
        }
        let mut parts = Vec::with_capacity(self.parts.len() + 1);
        parts.push(lambda0);
        parts.extend_from_slice(&self.parts);
        let result = Partition::from_sorted_unchecked(parts);
        if lambda0 > first {
            assert_eq!(
                result.centralizer_order(),
                BigUint::from(lambda0) * self.centralizer_order(),
                "prepend identity violated for lambda0 = {lambda0}, lambda = {self}"
            );
        }
        Ok(result)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Part-value -> multiplicity table for one partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartCountTable {
    counts: BTreeMap<u64, u64>,
}

impl PartCountTable {
    pub fn counts(&self) -> &BTreeMap<u64, u64> {
        &self.counts
    }

    /// C(lambda) = prod_i i^{m_i} * m_i! over this table.
    pub fn centralizer_order(&self) -> BigUint {
        let mut acc = BigUint::one();
        for (&value, &mult) in &self.counts {
            acc *= BigUint::from(value).pow(mult as u32);
            acc *= factorial(mult);
        }
        acc
    }
}

/// n! as an exact big integer.
pub fn factorial(n: u64) -> BigUint {
    let mut acc = BigUint::one();
    for i in 2..=n {
        acc *= BigUint::from(i);
    }
    acc
}

/// Iterator over all partitions of n in reverse-lexicographic order:
/// (n), (n-1,1), ..., (1,1,...,1). Deterministic; yields p(n) items.
pub fn enumerate_partitions(n: u64) -> PartitionIter {
    PartitionIter {
        current: if n == 0 { None } else { Some(vec![n]) },
        emitted_empty: false,
        n,
    }
}

pub struct PartitionIter {
    current: Option<Vec<u64>>,
    emitted_empty: bool,
    n: u64,
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.n == 0 {
            if self.emitted_empty {
                return None;
            }
            self.emitted_empty = true;
            return Some(Partition::from_sorted_unchecked(Vec::new()));
        }
        let current = self.current.take()?;
        let out = Partition::from_sorted_unchecked(current.clone());

        // Successor in reverse-lex order: strip trailing 1s, decrement the
        // last remaining part, then refill greedily with parts of that size.
        let mut next = current;
        let mut rest: u64 = 0;
        while next.last() == Some(&1) {
            next.pop();
            rest += 1;
        }
        if let Some(last) = next.last_mut() {
            *last -= 1;
            rest += 1;
            let cap = *last;
            while rest >= cap {
                next.push(cap);
                rest -= cap;
            }
            if rest > 0 {
                next.push(rest);
            }
            self.current = Some(next);
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent p(n) oracle via the pentagonal-number recurrence.
    pub(crate) fn partition_count_recurrence(n: usize) -> u64 {
        let mut table = vec![0i64; n + 1];
        table[0] = 1;
        for i in 1..=n {
            let mut sum: i64 = 0;
            let mut k: usize = 1;
            loop {
                let g1 = k * (3 * k - 1) / 2;
                if g1 > i {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                sum += sign * table[i - g1];
                let g2 = k * (3 * k + 1) / 2;
                if g2 <= i {
                    sum += sign * table[i - g2];
                }
                k += 1;
            }
            table[i] = sum;
        }
        table[n] as u64
    }

    #[test]
    fn make_partition_sorts_and_validates() {
        let p = Partition::new([1, 9, 10]).unwrap();
        assert_eq!(p.parts(), &[10, 9, 1]);
        assert_eq!(p.size(), 20);

        let empty = Partition::new([]).unwrap();
        assert_eq!(empty.size(), 0);
        assert!(empty.is_empty());

        let sorted = Partition::new([3, 3, 1]).unwrap();
        assert_eq!(sorted.parts(), &[3, 3, 1]);
        assert_eq!(sorted.size(), 7);

        assert!(Partition::new([3, 0, 1]).is_err());
    }

    #[test]
    fn enumeration_counts_match_recurrence() {
        assert_eq!(enumerate_partitions(0).count(), 1);
        assert_eq!(enumerate_partitions(5).count(), 7);
        assert_eq!(enumerate_partitions(40).count(), 37338);
        for n in 0..=60u64 {
            let count = enumerate_partitions(n).count();
            assert_eq!(
                count as u64,
                partition_count_recurrence(n as usize),
                "p({n}) mismatch"
            );
        }
    }

    #[test]
    fn enumeration_is_reverse_lex_and_duplicate_free() {
        for n in 0..=20u64 {
            let all: Vec<Partition> = enumerate_partitions(n).collect();
            for w in all.windows(2) {
                assert!(w[0].parts() > w[1].parts(), "order violated at n={n}");
            }
            for p in &all {
                assert_eq!(p.size(), n);
            }
        }
    }

    #[test]
    fn centralizer_order_examples() {
        let c = |parts: &[u64]| Partition::new(parts.to_vec()).unwrap().centralizer_order();
        assert_eq!(c(&[10, 9, 1]), BigUint::from(90u32));
        assert_eq!(c(&[15, 3, 2]), BigUint::from(90u32));
        assert_eq!(c(&[1, 1, 1, 1]), BigUint::from(24u32));
        assert_eq!(c(&[2, 1, 1]), BigUint::from(4u32));
        assert_eq!(c(&[]), BigUint::one());
    }

    #[test]
    fn class_size_examples() {
        let s = |parts: &[u64]| Partition::new(parts.to_vec()).unwrap().class_size_sym();
        assert_eq!(s(&[1, 1, 1, 1]), BigUint::one());
        assert_eq!(s(&[2, 1, 1]), BigUint::from(6u32));
        assert_eq!(s(&[3, 1]), BigUint::from(8u32));
    }

    #[test]
    fn sign_examples() {
        let sg = |parts: &[u64]| Partition::new(parts.to_vec()).unwrap().sign();
        assert_eq!(sg(&[1, 1, 1]), Parity::Even);
        assert_eq!(sg(&[2, 1]), Parity::Odd);
        assert_eq!(sg(&[10, 9, 1]), Parity::Odd);
        assert_eq!(sg(&[]), Parity::Even);
    }

    #[test]
    fn prepend_examples() {
        let base = Partition::new([10, 9, 1]).unwrap();
        let ext = base.prepend(18).unwrap();
        assert_eq!(ext.parts(), &[18, 10, 9, 1]);
        assert_eq!(ext.centralizer_order(), BigUint::from(1620u32));

        let ext = Partition::new([3, 1]).unwrap().prepend(5).unwrap();
        assert_eq!(ext.parts(), &[5, 3, 1]);
        assert_eq!(ext.centralizer_order(), BigUint::from(15u32));

        // Boundary: lambda0 == first part is accepted but the product
        // identity does not hold (and is not asserted).
        let ext = Partition::new([3, 1]).unwrap().prepend(3).unwrap();
        assert_eq!(ext.parts(), &[3, 3, 1]);

        assert!(Partition::new([3, 1]).unwrap().prepend(2).is_err());
    }

    #[test]
    fn class_equation_small_n() {
        for n in 0..=12u64 {
            let total: BigUint = enumerate_partitions(n).map(|p| p.class_size_sym()).sum();
            assert_eq!(total, factorial(n), "class equation fails for S_{n}");
        }
    }

    #[test]
    fn distinct_parts_centralizer_is_product() {
        for n in 0..=15u64 {
            for p in enumerate_partitions(n).filter(|p| p.all_parts_distinct()) {
                let product: BigUint = p.parts().iter().map(|&x| BigUint::from(x)).product();
                assert_eq!(p.centralizer_order(), product);
            }
        }
    }
}
