//! Exact conjugacy-class-size multiplicity toolkit.
//!
//! - [`partition`]: partition enumeration, centralizer orders, class sizes.
//! - [`sym_alt`]: S_n / A_n class data and multiplicity reports.
//! - [`family`]: constructed families of equal-centralizer even partitions.
//! - [`numbers`]: totient, Legendre exponents, d(n!), growth ratios.
//! - [`oracle`]: brute-force permutation-group engine for cross-checks.

pub mod error;
pub mod family;
pub mod numbers;
pub mod oracle;
pub mod partition;
pub mod sym_alt;

pub use error::{Error, Result};
pub use family::{BlockChoice, Branch, FamilyMember, FamilyParams};
pub use partition::{Parity, Partition};
pub use sym_alt::{ClassRecord, ClassRep, GroupTag, MultiplicityReport, SplitLabel};
