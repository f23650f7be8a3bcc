//! Conjugacy-class data for symmetric and alternating groups computed from
//! partitions alone, plus class-size multiplicity reports.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, factorial, Parity, Partition};

/// Which group a class or report belongs to.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupTag {
    Sym(u64),
    Alt(u64),
    Oracle(String),
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupTag::Sym(n) => write!(f, "sym {n}"),
            GroupTag::Alt(n) => write!(f, "alt {n}"),
            GroupTag::Oracle(id) => write!(f, "oracle {id}"),
        }
    }
}

/// Label distinguishing the two halves of a split alternating-group class.
/// The convention is fixed for determinism; nothing downstream depends on
/// which half is which.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash)]
pub enum SplitLabel {
    First,
    Second,
}

/// Class representative: a cycle type for sym/alt classes, or a one-line
/// permutation image for oracle classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassRep {
    CycleType(Partition),
    Permutation(Vec<usize>),
}

impl fmt::Display for ClassRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassRep::CycleType(p) => write!(f, "{p}"),
            ClassRep::Permutation(images) => {
                write!(f, "[")?;
                for (i, x) in images.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, "]")
            }
        }
    }
}

/// One conjugacy class with its exact size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassRecord {
    pub group: GroupTag,
    pub rep: ClassRep,
    pub split_label: Option<SplitLabel>,
    pub class_size: BigUint,
}

/// Histogram of class sizes with the maximum multiplicity m.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityReport {
    pub group: GroupTag,
    pub histogram: BTreeMap<BigUint, u64>,
    pub max_multiplicity: u64,
    pub argmax_sizes: Vec<BigUint>,
}

impl MultiplicityReport {
    pub fn from_sizes(group: GroupTag, sizes: impl IntoIterator<Item = BigUint>) -> Self {
        let mut histogram: BTreeMap<BigUint, u64> = BTreeMap::new();
        for size in sizes {
            *histogram.entry(size).or_insert(0) += 1;
        }
        let max_multiplicity = histogram.values().copied().max().unwrap_or(0);
        let argmax_sizes = histogram
            .iter()
            .filter(|(_, &count)| count == max_multiplicity)
            .map(|(size, _)| size.clone())
            .collect();
        MultiplicityReport {
            group,
            histogram,
            max_multiplicity,
            argmax_sizes,
        }
    }

    /// Total group order accounted for: sum of size * count.
    pub fn total_mass(&self) -> BigUint {
        self.histogram
            .iter()
            .map(|(size, &count)| size * BigUint::from(count))
            .sum()
    }

    /// Number of conjugacy classes in the histogram.
    pub fn class_count(&self) -> u64 {
        self.histogram.values().sum()
    }
}

/// Whether the S_n class of cycle type `lambda` splits into two A_n classes:
/// true iff all parts are odd and all parts are distinct (exactly the
/// condition putting the S_n-centralizer inside A_n).
pub fn splits_in_alt(lambda: &Partition) -> Result<bool> {
    if lambda.sign() != Parity::Even {
        return Err(Error::OddPartition(lambda.parts().to_vec()));
    }
    Ok(lambda.all_parts_odd() && lambda.all_parts_distinct())
}

/// The A_n classes contained in the S_n class of `lambda`: two halves if the
/// class splits, otherwise one class of the full S_n class size.
pub fn alt_classes(lambda: &Partition) -> Result<Vec<ClassRecord>> {
    let n = lambda.size();
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "alt_classes requires size >= 2, got {n}"
        )));
    }
    let group = GroupTag::Alt(n);
    let sym_size = lambda.class_size_sym();
    if splits_in_alt(lambda)? {
        let half = sym_size / BigUint::from(2u32);
        Ok(vec![
            ClassRecord {
                group: group.clone(),
                rep: ClassRep::CycleType(lambda.clone()),
                split_label: Some(SplitLabel::First),
                class_size: half.clone(),
            },
            ClassRecord {
                group,
                rep: ClassRep::CycleType(lambda.clone()),
                split_label: Some(SplitLabel::Second),
                class_size: half,
            },
        ])
    } else {
        Ok(vec![ClassRecord {
            group,
            rep: ClassRep::CycleType(lambda.clone()),
            split_label: None,
            class_size: sym_size,
        }])
    }
}

/// Full class-size multiplicity report for S_n or A_n, driven entirely by
/// partition formulas. Oracle groups are reported by the oracle module.
pub fn multiplicity_report(group: &GroupTag) -> Result<MultiplicityReport> {
    match *group {
        GroupTag::Sym(n) => Ok(MultiplicityReport::from_sizes(
            group.clone(),
            enumerate_partitions(n).map(|p| p.class_size_sym()),
        )),
        GroupTag::Alt(n) => {
            if n < 2 {
                // A_0 and A_1 are trivial.
                return Ok(MultiplicityReport::from_sizes(
                    group.clone(),
                    std::iter::once(BigUint::one()),
                ));
            }
            let mut sizes = Vec::new();
            for p in enumerate_partitions(n) {
                if p.sign() == Parity::Even {
                    for record in alt_classes(&p)? {
                        sizes.push(record.class_size);
                    }
                }
            }
            Ok(MultiplicityReport::from_sizes(group.clone(), sizes))
        }
        GroupTag::Oracle(_) => Err(Error::InvalidParameter(
            "oracle groups are reported via the oracle module".into(),
        )),
    }
}

/// Expected group order for sym/alt tags (class-equation right-hand side).
pub fn group_order(group: &GroupTag) -> Option<BigUint> {
    match *group {
        GroupTag::Sym(n) => Some(factorial(n)),
        GroupTag::Alt(n) if n >= 2 => Some(factorial(n) / BigUint::from(2u32)),
        GroupTag::Alt(_) => Some(BigUint::one()),
        GroupTag::Oracle(_) => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn splitting_rule_examples() {
        assert!(splits_in_alt(&part(&[5])).unwrap());
        assert!(!splits_in_alt(&part(&[3, 1, 1])).unwrap());
        assert!(!splits_in_alt(&part(&[2, 2, 1])).unwrap());
        assert!(splits_in_alt(&part(&[2, 1])).is_err());
    }

    #[test]
    fn alt_class_examples() {
        let five_cycles = alt_classes(&part(&[5])).unwrap();
        assert_eq!(five_cycles.len(), 2);
        assert!(five_cycles
            .iter()
            .all(|c| c.class_size == BigUint::from(12u32)));

        let three_cycles_a4 = alt_classes(&part(&[3, 1])).unwrap();
        assert_eq!(three_cycles_a4.len(), 2);
        assert!(three_cycles_a4
            .iter()
            .all(|c| c.class_size == BigUint::from(4u32)));

        let double_transpositions = alt_classes(&part(&[2, 2, 1])).unwrap();
        assert_eq!(double_transpositions.len(), 1);
        assert_eq!(double_transpositions[0].class_size, BigUint::from(15u32));
        assert_eq!(double_transpositions[0].split_label, None);
    }

    #[test]
    fn report_sym4() {
        let report = multiplicity_report(&GroupTag::Sym(4)).unwrap();
        let expected: BTreeMap<BigUint, u64> = [(1u32, 1u64), (3, 1), (6, 2), (8, 1)]
            .into_iter()
            .map(|(size, count)| (BigUint::from(size), count))
            .collect();
        assert_eq!(report.histogram, expected);
        assert_eq!(report.max_multiplicity, 2);
        assert_eq!(report.argmax_sizes, vec![BigUint::from(6u32)]);
    }

    #[test]
    fn report_alt5() {
        let report = multiplicity_report(&GroupTag::Alt(5)).unwrap();
        let expected: BTreeMap<BigUint, u64> = [(1u32, 1u64), (12, 2), (15, 1), (20, 1)]
            .into_iter()
            .map(|(size, count)| (BigUint::from(size), count))
            .collect();
        assert_eq!(report.histogram, expected);
        assert_eq!(report.max_multiplicity, 2);
        assert_eq!(report.argmax_sizes, vec![BigUint::from(12u32)]);
    }

    #[test]
    fn trivial_reports() {
        for tag in [GroupTag::Sym(1), GroupTag::Alt(1), GroupTag::Alt(2)] {
            let report = multiplicity_report(&tag).unwrap();
            assert_eq!(report.class_count(), 1);
            assert_eq!(report.max_multiplicity, 1);
            assert_eq!(report.total_mass(), BigUint::one());
        }
    }

    #[test]
    fn class_equation_through_reports() {
        for n in 1..=30u64 {
            for tag in [GroupTag::Sym(n), GroupTag::Alt(n)] {
                let report = multiplicity_report(&tag).unwrap();
                assert_eq!(
                    report.total_mass(),
                    group_order(&tag).unwrap(),
                    "class equation fails for {tag}"
                );
            }
        }
    }

    #[test]
    fn alt_mass_matches_sym_class() {
        for n in 2..=15u64 {
            for p in enumerate_partitions(n).filter(|p| p.sign() == Parity::Even) {
                let total: BigUint = alt_classes(&p)
                    .unwrap()
                    .iter()
                    .map(|c| c.class_size.clone())
                    .sum();
                assert_eq!(total, p.class_size_sym());
            }
        }
    }
}
