//! Constructive families of even partitions sharing one centralizer size,
//! certifying many equal-size alternating-group conjugacy classes.
//!
//! Blocks (10,9,1) and (15,3,2) both have size 20 and centralizer 90.
//! Scaling block i by 21^{i-1} and concatenating k blocks gives 2^k
//! partitions of size 21^k - 1 with all parts distinct, hence a common
//! centralizer equal to the product of the parts.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::partition::{factorial, Parity, Partition};
use crate::sym_alt::{ClassRecord, ClassRep, GroupTag};

/// One of the two base blocks.
#[derive(Debug, Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BlockChoice {
    /// (10,9,1)
    TypeA,
    /// (15,3,2)
    TypeB,
}

impl BlockChoice {
    pub fn triple(self) -> [u64; 3] {
        match self {
            BlockChoice::TypeA => [10, 9, 1],
            BlockChoice::TypeB => [15, 3, 2],
        }
    }

    pub fn label(self) -> char {
        match self {
            BlockChoice::TypeA => 'A',
            BlockChoice::TypeB => 'B',
        }
    }
}

/// Which family to build.
#[derive(Debug, Copy, Clone, PartialEq, Eq)]
pub enum Branch {
    /// 2^k partitions of size 21^k - 1 (odd for odd k).
    P,
    /// 2^{k+1} even partitions of size 21^{k+1} - 1.
    PPrime,
}

/// One member of a constructed family: its block word, the assembled
/// partition, and the centralizer order certified at construction time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyMember {
    pub choices: Vec<BlockChoice>,
    pub partition: Partition,
    pub certified_centralizer: BigUint,
}

impl FamilyMember {
    /// Block word as a string, innermost (unscaled) block first.
    pub fn word(&self) -> String {
        self.choices.iter().map(|c| c.label()).collect()
    }
}

/// Parameters derived from a required multiplicity M.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyParams {
    pub required_multiplicity: u64,
    pub k: u32,
    pub min_even_n: u64,
    pub min_odd_n: u64,
}

/// Smallest odd k with 2^k > M.
pub fn choose_k(m: u64) -> u32 {
    let mut k = 1u32;
    loop {
        if k < 64 && (1u128 << k) > m as u128 {
            return k;
        }
        k += 2;
    }
}

/// The minimal even and odd n admitting the construction for a given odd k:
/// strictly above 21^k + 15*21^{k-1} (even case) and
/// 21^{k+1} + 15*21^k (odd case), rounded up to the required parity.
pub fn thresholds(k: u32) -> Result<(u64, u64)> {
    ensure_odd(k)?;
    let even_bound = pow21(k) + 15 * pow21(k - 1);
    let odd_bound = pow21(k + 1) + 15 * pow21(k);
    let min_even = next_with_parity(even_bound + 1, 0);
    let min_odd = next_with_parity(odd_bound + 1, 1);
    Ok((min_even, min_odd))
}

pub fn family_params(m: u64) -> Result<FamilyParams> {
    if m == 0 {
        return Err(Error::InvalidParameter("M must be positive".into()));
    }
    let k = choose_k(m);
    let (min_even_n, min_odd_n) = thresholds(k)?;
    Ok(FamilyParams {
        required_multiplicity: m,
        k,
        min_even_n,
        min_odd_n,
    })
}

/// Builds the family for odd k: 2^k members (branch P, size 21^k - 1) or
/// 2^{k+1} members (branch P', size 21^{k+1} - 1). Members are ordered
/// lexicographically in the block word with TypeA < TypeB, innermost first.
pub fn build_family(k: u32, branch: Branch) -> Result<Vec<FamilyMember>> {
    ensure_odd(k)?;
    let len = match branch {
        Branch::P => k,
        Branch::PPrime => k + 1,
    };
    let mut members = Vec::with_capacity(1usize << len);
    for code in 0u64..(1u64 << len) {
        // Bit i of `code` picks block i+1 (scale 21^i); bit 0 is innermost.
        let choices: Vec<BlockChoice> = (0..len)
            .map(|i| {
                if code >> i & 1 == 0 {
                    BlockChoice::TypeA
                } else {
                    BlockChoice::TypeB
                }
            })
            .collect();
        members.push(assemble_member(choices));
    }
    members.sort_by(|a, b| a.choices.cmp(&b.choices));
    Ok(members)
}

fn assemble_member(choices: Vec<BlockChoice>) -> FamilyMember {
    let mut parts = Vec::with_capacity(choices.len() * 3);
    for (i, choice) in choices.iter().enumerate() {
        let scale = pow21(i as u32);
        for v in choice.triple() {
            parts.push(v * scale);
        }
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    let partition = Partition::new(parts).expect("block parts are positive");
    // All parts are distinct, so the centralizer is the product of the parts.
    let certified_centralizer = partition
        .parts()
        .iter()
        .map(|&p| BigUint::from(p))
        .product();
    FamilyMember {
        choices,
        partition,
        certified_centralizer,
    }
}

/// Closed form 90^len * 21^{3*len*(len-1)/2} for the common centralizer of
/// a family with `len` blocks.
pub fn closed_form_centralizer(len: u32) -> BigUint {
    let exp = 3 * len * (len.saturating_sub(1)) / 2;
    BigUint::from(90u32).pow(len) * BigUint::from(21u32).pow(exp)
}

/// At least M+1 equal-size A_n conjugacy classes for any n meeting the
/// parity threshold: extend every family member by the leading part
/// n - |member|. None of the extended partitions splits (each keeps an even
/// part), so the A_n class sizes are literally equal.
pub fn equal_class_family(n: u64, m: u64) -> Result<Vec<ClassRecord>> {
    let params = family_params(m)?;
    let (branch, block_size) = if n % 2 == 0 {
        if n < params.min_even_n {
            return Err(Error::BelowThreshold {
                n,
                parity: "even",
                minimal: params.min_even_n,
            });
        }
        (Branch::P, pow21(params.k) - 1)
    } else {
        if n < params.min_odd_n {
            return Err(Error::BelowThreshold {
                n,
                parity: "odd",
                minimal: params.min_odd_n,
            });
        }
        (Branch::PPrime, pow21(params.k + 1) - 1)
    };
    let lead = n - block_size;
    let n_factorial = factorial(n);
    let mut records = Vec::new();
    for member in build_family(params.k, branch)? {
        let extended = member.partition.prepend(lead)?;
        debug_assert_eq!(extended.sign(), Parity::Even);
        debug_assert!(extended.has_even_part());
        let centralizer = BigUint::from(lead) * &member.certified_centralizer;
        records.push(ClassRecord {
            group: GroupTag::Alt(n),
            rep: ClassRep::CycleType(extended),
            split_label: None,
            class_size: &n_factorial / centralizer,
        });
    }
    Ok(records)
}

/// Result of one verification check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Independent re-check of a family: sizes, signs, distinctness, even parts,
/// centralizers by the general formula (not the product shortcut), and
/// cross-member equality. Failures are report entries, not faults.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

pub fn verify_family(members: &[FamilyMember], expected_size: u64) -> VerificationReport {
    let mut checks = Vec::new();
    let mut push = |name: String, passed: bool, detail: String| {
        checks.push(CheckResult {
            name,
            passed,
            detail,
        })
    };

    let mut centralizers: Vec<BigUint> = Vec::with_capacity(members.len());
    for (idx, member) in members.iter().enumerate() {
        let word = member.word();
        let size = member.partition.size();
        push(
            format!("member[{idx}:{word}] size"),
            size == expected_size,
            format!("size {size}, expected {expected_size}"),
        );
        push(
            format!("member[{idx}:{word}] distinct parts"),
            member.partition.all_parts_distinct(),
            format!("parts {}", member.partition),
        );
        push(
            format!("member[{idx}:{word}] even part present"),
            member.partition.has_even_part(),
            format!("parts {}", member.partition),
        );
        // General formula, deliberately not the product-of-parts shortcut
        // the constructor certifies with.
        let general = member.partition.part_counts().centralizer_order();
        push(
            format!("member[{idx}:{word}] centralizer formula"),
            general == member.certified_centralizer,
            format!(
                "formula {general}, certified {}",
                member.certified_centralizer
            ),
        );
        centralizers.push(general);
    }

    if let Some(first) = centralizers.first() {
        push(
            "common centralizer".into(),
            centralizers.iter().all(|c| c == first),
            format!("reference {first}"),
        );
        let signs: Vec<Parity> = members.iter().map(|m| m.partition.sign()).collect();
        push(
            "uniform sign".into(),
            signs.iter().all(|&s| s == signs[0]),
            format!("reference {:?}", signs[0]),
        );
    }
    let mut sorted: Vec<&Partition> = members.iter().map(|m| &m.partition).collect();
    sorted.sort();
    sorted.dedup();
    push(
        "pairwise distinct members".into(),
        sorted.len() == members.len(),
        format!("{} distinct of {}", sorted.len(), members.len()),
    );

    VerificationReport { checks }
}

fn ensure_odd(k: u32) -> Result<()> {
    if k == 0 || k % 2 == 0 {
        return Err(Error::EvenK(k as u64));
    }
    Ok(())
}

fn pow21(e: u32) -> u64 {
    21u64.pow(e)
}

fn next_with_parity(at_least: u64, parity: u64) -> u64 {
    if at_least % 2 == parity {
        at_least
    } else {
        at_least + 1
    }
}
