//! Brute-force engine for small permutation groups: closure from
//! generators, conjugacy classes by orbit computation, centralizer orders,
//! PSL(2,p) on the projective line, and power-conjugacy analysis.
//!
//! Everything here is independent of the partition formulas; the two sides
//! cross-check each other.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::numbers::totient;
use crate::partition::{Parity, Partition};
use crate::sym_alt::{ClassRecord, ClassRep, GroupTag, MultiplicityReport};

pub const DEFAULT_CAP: usize = 1_000_000;

/// A permutation of 0..degree-1 stored as its image sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &img in &images {
            if img >= d || seen[img] {
                return Err(Error::InvalidParameter(format!(
                    "image sequence {images:?} is not a bijection on 0..{d}"
                )));
            }
            seen[img] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    /// (self * other)(x) = self(other(x)).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    /// Conjugate of `self` by `g`: g * self * g^{-1}.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[g.images[i]] = g.images[x];
        }
        Permutation { images }
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut acc = Permutation::identity(self.degree());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order.
    pub fn order(&self) -> u64 {
        let mut current = self.clone();
        let mut ord = 1u64;
        while !current.is_identity() {
            current = current.compose(self);
            ord += 1;
        }
        ord
    }

    /// Cycle lengths as a partition of the degree (fixed points included).
    pub fn cycle_type(&self) -> Partition {
        let mut seen = vec![false; self.images.len()];
        let mut lengths = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut point = start;
            while !seen[point] {
                seen[point] = true;
                point = self.images[point];
                len += 1;
            }
            lengths.push(len);
        }
        Partition::new(lengths).expect("cycle lengths are positive")
    }

    pub fn parity(&self) -> Parity {
        self.cycle_type().sign()
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation; fixed points omitted, identity printed as "()".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.images.len()];
        let mut wrote = false;
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            write!(f, "(")?;
            let mut point = start;
            let mut first = true;
            while !seen[point] {
                seen[point] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{point}")?;
                first = false;
                point = self.images[point];
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// A finite permutation group with its fully enumerated element set.
/// Elements are sorted lexicographically on image sequences.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Vec<usize>, usize>,
}

impl PermGroup {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Elements in the canonical (lexicographic) order.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, x: &Permutation) -> bool {
        x.degree() == self.degree && self.index.contains_key(x.images())
    }
}

/// Breadth-first closure of the generators. Faults when the element count
/// exceeds `cap`, reporting the partial count.
pub fn close_group(gens: &[Permutation], degree: usize, cap: usize) -> Result<PermGroup> {
    for g in gens {
        if g.degree() != degree {
            return Err(Error::DegreeMismatch(degree, g.degree()));
        }
    }
    let identity = Permutation::identity(degree);
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut elements = vec![identity.clone()];
    index.insert(identity.images().to_vec(), 0);
    let mut frontier = vec![identity];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for g in gens {
                let y = g.compose(x);
                if !index.contains_key(y.images()) {
                    if elements.len() >= cap {
                        return Err(Error::CapExceeded {
                            cap,
                            partial: elements.len(),
                        });
                    }
                    index.insert(y.images().to_vec(), elements.len());
                    elements.push(y.clone());
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    elements.sort();
    let index = elements
        .iter()
        .enumerate()
        .map(|(i, e)| (e.images().to_vec(), i))
        .collect();
    Ok(PermGroup {
        degree,
        generators: gens.to_vec(),
        elements,
        index,
    })
}

/// One oracle conjugacy class: all elements, with the lexicographically
/// minimal one as representative.
#[derive(Debug, Clone)]
pub struct OracleClass {
    pub rep: Permutation,
    pub member_indices: Vec<usize>,
}

impl OracleClass {
    pub fn size(&self) -> usize {
        self.member_indices.len()
    }
}

/// Conjugacy classes by orbit closure under conjugation by the generators,
/// ordered by (size, minimal element).
pub fn conjugacy_classes(group: &PermGroup) -> Vec<OracleClass> {
    let n = group.order();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<OracleClass> = Vec::new();
    for seed in 0..n {
        if class_of[seed] != usize::MAX {
            continue;
        }
        let class_id = classes.len();
        class_of[seed] = class_id;
        let mut members = vec![seed];
        let mut frontier = vec![seed];
        while let Some(idx) = frontier.pop() {
            let x = &group.elements[idx];
            for g in &group.generators {
                let y = x.conjugate_by(g);
                let y_idx = group.index[y.images()];
                if class_of[y_idx] == usize::MAX {
                    class_of[y_idx] = class_id;
                    members.push(y_idx);
                    frontier.push(y_idx);
                }
            }
        }
        members.sort_unstable();
        classes.push(OracleClass {
            // seeds are visited in lexicographic element order, so the seed
            // is the minimal member
            rep: group.elements[seed].clone(),
            member_indices: members,
        });
    }
    classes.sort_by(|a, b| (a.size(), &a.rep).cmp(&(b.size(), &b.rep)));
    classes
}

/// Class records for an oracle group, tagged with `id`.
pub fn class_records(group: &PermGroup, id: &str) -> Vec<ClassRecord> {
    conjugacy_classes(group)
        .into_iter()
        .map(|class| ClassRecord {
            group: GroupTag::Oracle(id.to_string()),
            rep: ClassRep::Permutation(class.rep.images().to_vec()),
            split_label: None,
            class_size: BigUint::from(class.size()),
        })
        .collect()
}

/// Multiplicity report straight from the oracle class sizes.
pub fn multiplicity_report_oracle(group: &PermGroup, id: &str) -> MultiplicityReport {
    MultiplicityReport::from_sizes(
        GroupTag::Oracle(id.to_string()),
        conjugacy_classes(group)
            .iter()
            .map(|c| BigUint::from(c.size())),
    )
}

/// |C_G(x)| = |G| / |cl_G(x)|.
pub fn centralizer_order_of(group: &PermGroup, x: &Permutation) -> Result<usize> {
    Ok(group.order() / conjugacy_class_of(group, x)?.size())
}

/// |C_G(x)| by direct commuting-element count; quadratic, test use only.
pub fn centralizer_order_direct(group: &PermGroup, x: &Permutation) -> Result<usize> {
    if !group.contains(x) {
        return Err(Error::NotInGroup);
    }
    Ok(group
        .elements()
        .iter()
        .filter(|g| g.compose(x) == x.compose(g))
        .count())
}

fn conjugacy_class_of(group: &PermGroup, x: &Permutation) -> Result<OracleClass> {
    if !group.contains(x) {
        return Err(Error::NotInGroup);
    }
    let start = group.index[x.images()];
    let mut in_class = vec![false; group.order()];
    in_class[start] = true;
    let mut members = vec![start];
    let mut frontier = vec![start];
    let mut min_idx = start;
    while let Some(idx) = frontier.pop() {
        for g in &group.generators {
            let y = group.elements[idx].conjugate_by(g);
            let y_idx = group.index[y.images()];
            if !in_class[y_idx] {
                in_class[y_idx] = true;
                min_idx = min_idx.min(y_idx);
                members.push(y_idx);
                frontier.push(y_idx);
            }
        }
    }
    members.sort_unstable();
    Ok(OracleClass {
        rep: group.elements[min_idx].clone(),
        member_indices: members,
    })
}

/// Power-conjugacy data for one element: its order, how many coprime powers
/// are conjugate to it, and the resulting lower bound
/// ceil(phi(ord) / conj_power_count) on the number of classes of generators
/// of <x>, all of which share one centralizer order.
#[derive(Debug, Copy, Clone, PartialEq, Eq)]
pub struct PowerConjugacy {
    pub element_order: u64,
    pub conj_power_count: u64,
    pub equal_size_class_lower_bound: u64,
}

pub fn power_conjugacy(group: &PermGroup, x: &Permutation) -> Result<PowerConjugacy> {
    let class = conjugacy_class_of(group, x)?;
    let in_class: std::collections::HashSet<&[usize]> = class
        .member_indices
        .iter()
        .map(|&i| group.elements[i].images())
        .collect();
    let ord = x.order();
    let mut conj_power_count = 0u64;
    for t in 1..=ord {
        if num_integer::gcd(t, ord) == 1 && in_class.contains(x.pow(t).images()) {
            conj_power_count += 1;
        }
    }
    let phi = totient(ord);
    Ok(PowerConjugacy {
        element_order: ord,
        conj_power_count,
        equal_size_class_lower_bound: phi.div_ceil(conj_power_count),
    })
}

/// Generators of S_n: a transposition and an n-cycle (degenerating for
/// n <= 2).
pub fn symmetric_generators(n: usize) -> Vec<Permutation> {
    match n {
        0 | 1 => Vec::new(),
        2 => vec![transposition(n, 0, 1)],
        _ => vec![transposition(n, 0, 1), cycle(n, &(0..n).collect::<Vec<_>>())],
    }
}

/// Generators of A_n: a 3-cycle together with an n-cycle (n odd) or an
/// (n-1)-cycle on 1..n (n even).
pub fn alternating_generators(n: usize) -> Vec<Permutation> {
    match n {
        0..=2 => Vec::new(),
        3 => vec![cycle(n, &[0, 1, 2])],
        _ => {
            let long = if n % 2 == 1 {
                cycle(n, &(0..n).collect::<Vec<_>>())
            } else {
                cycle(n, &(1..n).collect::<Vec<_>>())
            };
            vec![cycle(n, &[0, 1, 2]), long]
        }
    }
}

pub fn transposition(degree: usize, a: usize, b: usize) -> Permutation {
    let mut images: Vec<usize> = (0..degree).collect();
    images.swap(a, b);
    Permutation { images }
}

pub fn cycle(degree: usize, points: &[usize]) -> Permutation {
    let mut images: Vec<usize> = (0..degree).collect();
    for w in points.windows(2) {
        images[w[0]] = w[1];
    }
    if points.len() > 1 {
        images[points[points.len() - 1]] = points[0];
    }
    Permutation { images }
}

/// PSL(2,p) acting on the projective line over F_p: points 0..p-1 are the
/// field elements and point p is infinity. Generated by x -> x+1 and
/// x -> -1/x. Rejects p = 2, 3 and composites.
pub fn psl2_group(p: u64, cap: usize) -> Result<PermGroup> {
    if p < 5 || !is_prime(p) {
        return Err(Error::BadPslPrime(p));
    }
    let p = p as usize;
    let infinity = p;
    let degree = p + 1;

    // x -> x + 1, fixing infinity
    let translation = Permutation {
        images: (0..degree)
            .map(|x| if x == infinity { infinity } else { (x + 1) % p })
            .collect(),
    };
    // x -> -1/x, swapping 0 and infinity
    let inversion = Permutation {
        images: (0..degree)
            .map(|x| {
                if x == infinity {
                    0
                } else if x == 0 {
                    infinity
                } else {
                    (p - mod_inverse(x, p)) % p
                }
            })
            .collect(),
    };
    close_group(&[translation, inversion], degree, cap)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn mod_inverse(x: usize, p: usize) -> usize {
    // Fermat: x^{p-2} mod p
    let mut result = 1u64;
    let mut base = x as u64 % p as u64;
    let mut e = p as u64 - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    result as usize
}

/// Parses one permutation in cycle notation, e.g. "(0 1)(2 3)".
/// Points may also be comma-separated. "()" is the identity.
pub fn parse_cycles(text: &str, degree: usize, line: usize) -> Result<Permutation> {
    let parse_err = |msg: String| Error::Parse { line, msg };
    let mut images: Vec<usize> = (0..degree).collect();
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(parse_err("empty permutation".into()));
    }
    let mut rest = trimmed;
    while !rest.is_empty() {
        if !rest.starts_with('(') {
            return Err(parse_err(format!("expected '(' at: {rest}")));
        }
        let close = rest
            .find(')')
            .ok_or_else(|| parse_err(format!("unclosed cycle: {rest}")))?;
        let body = &rest[1..close];
        let points: Vec<usize> = body
            .split([' ', ','])
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<usize>()
                    .map_err(|_| parse_err(format!("bad point '{s}'")))
            })
            .collect::<Result<_>>()?;
        for &pt in &points {
            if pt >= degree {
                return Err(parse_err(format!("point {pt} exceeds degree {degree}")));
            }
        }
        let mut distinct = points.clone();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() != points.len() {
            return Err(parse_err(format!("repeated point in cycle ({body})")));
        }
        for w in points.windows(2) {
            images[w[0]] = w[1];
        }
        if points.len() > 1 {
            images[points[points.len() - 1]] = points[0];
        }
        rest = rest[close + 1..].trim_start();
    }
    Permutation::new(images).map_err(|e| parse_err(e.to_string()))
}

/// Parses a generator file: one permutation per line in cycle notation,
/// blank lines and '#' comments skipped. Degree inferred from the largest
/// point unless given.
pub fn parse_generator_file(text: &str, degree: Option<usize>) -> Result<Vec<Permutation>> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let degree = match degree {
        Some(d) => d,
        None => {
            let mut max_point = 0usize;
            for (line, l) in &lines {
                for token in l.split(|c: char| !c.is_ascii_digit()) {
                    if !token.is_empty() {
                        let pt: usize = token.parse().map_err(|_| Error::Parse {
                            line: *line,
                            msg: format!("bad point '{token}'"),
                        })?;
                        max_point = max_point.max(pt);
                    }
                }
            }
            max_point + 1
        }
    };
    lines
        .into_iter()
        .map(|(line, l)| parse_cycles(l, degree, line))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sym_alt;

    #[test]
    fn closure_of_s4_and_a5() {
        let s4 = close_group(&symmetric_generators(4), 4, DEFAULT_CAP).unwrap();
        assert_eq!(s4.order(), 24);

        let a5 = close_group(&alternating_generators(5), 5, DEFAULT_CAP).unwrap();
        assert_eq!(a5.order(), 60);

        match close_group(&symmetric_generators(4), 4, 10) {
            Err(Error::CapExceeded { cap: 10, partial }) => assert!(partial >= 10),
            other => panic!("expected cap breach, got {other:?}"),
        }
    }

    #[test]
    fn symmetric_and_alternating_orders() {
        let mut expected = 1usize;
        for n in 1..=7usize {
            expected *= n;
            let sn = close_group(&symmetric_generators(n), n.max(1), DEFAULT_CAP).unwrap();
            assert_eq!(sn.order(), expected, "|S_{n}|");
            let an = close_group(&alternating_generators(n), n.max(1), DEFAULT_CAP).unwrap();
            assert_eq!(an.order(), expected.max(2) / 2, "|A_{n}|");
        }
    }

    #[test]
    fn s4_class_sizes() {
        let s4 = close_group(&symmetric_generators(4), 4, DEFAULT_CAP).unwrap();
        let sizes: Vec<usize> = conjugacy_classes(&s4).iter().map(|c| c.size()).collect();
        assert_eq!(sizes, vec![1, 3, 6, 6, 8]);
    }

    #[test]
    fn a5_class_sizes() {
        let a5 = close_group(&alternating_generators(5), 5, DEFAULT_CAP).unwrap();
        let sizes: Vec<usize> = conjugacy_classes(&a5).iter().map(|c| c.size()).collect();
        assert_eq!(sizes, vec![1, 12, 12, 15, 20]);
    }

    #[test]
    fn trivial_group() {
        let g = close_group(&[], 1, DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(conjugacy_classes(&g).len(), 1);
    }

    #[test]
    fn class_invariants_hold() {
        for (gens, degree) in [
            (symmetric_generators(5), 5),
            (alternating_generators(6), 6),
        ] {
            let g = close_group(&gens, degree, DEFAULT_CAP).unwrap();
            let classes = conjugacy_classes(&g);
            let total: usize = classes.iter().map(|c| c.size()).sum();
            assert_eq!(total, g.order());
            assert!(classes.iter().all(|c| g.order() % c.size() == 0));
            assert!(classes[0].rep.is_identity());
            assert_eq!(classes[0].size(), 1);
        }
    }

    #[test]
    fn cyclic_group_is_all_singletons() {
        let p = 7;
        let g = close_group(&[cycle(p, &(0..p).collect::<Vec<_>>())], p, DEFAULT_CAP).unwrap();
        let report = multiplicity_report_oracle(&g, "c7");
        assert_eq!(report.histogram.len(), 1);
        assert_eq!(report.max_multiplicity, p as u64);
    }

    #[test]
    fn psl2_orders_and_class_counts() {
        for p in [5u64, 7, 11, 13, 17, 19] {
            let g = psl2_group(p, DEFAULT_CAP).unwrap();
            assert_eq!(g.order() as u64, p * (p * p - 1) / 2, "|PSL(2,{p})|");
            assert_eq!(
                conjugacy_classes(&g).len() as u64,
                (p + 5) / 2,
                "class count of PSL(2,{p})"
            );
        }
        assert!(psl2_group(2, DEFAULT_CAP).is_err());
        assert!(psl2_group(3, DEFAULT_CAP).is_err());
        assert!(psl2_group(9, DEFAULT_CAP).is_err());
    }

    #[test]
    fn psl2_7_report() {
        let g = psl2_group(7, DEFAULT_CAP).unwrap();
        let sizes: Vec<usize> = conjugacy_classes(&g).iter().map(|c| c.size()).collect();
        assert_eq!(sizes, vec![1, 21, 24, 24, 42, 56]);
        let report = multiplicity_report_oracle(&g, "psl2_7");
        assert_eq!(report.max_multiplicity, 2);
        assert_eq!(report.argmax_sizes, vec![BigUint::from(24u32)]);
    }

    #[test]
    fn power_conjugacy_examples() {
        let g = psl2_group(7, DEFAULT_CAP).unwrap();
        let x = g
            .elements()
            .iter()
            .find(|e| e.order() == 7)
            .expect("order-7 element");
        let pc = power_conjugacy(&g, x).unwrap();
        assert_eq!(pc.element_order, 7);
        assert_eq!(pc.conj_power_count, 3);
        assert_eq!(pc.equal_size_class_lower_bound, 2);

        let identity = Permutation::identity(g.degree());
        let pc = power_conjugacy(&g, &identity).unwrap();
        assert_eq!(
            pc,
            PowerConjugacy {
                element_order: 1,
                conj_power_count: 1,
                equal_size_class_lower_bound: 1
            }
        );

        let s4 = close_group(&symmetric_generators(4), 4, DEFAULT_CAP).unwrap();
        let four_cycle = cycle(4, &[0, 1, 2, 3]);
        let pc = power_conjugacy(&s4, &four_cycle).unwrap();
        assert_eq!(pc.element_order, 4);
        assert_eq!(pc.conj_power_count, 2);
        assert_eq!(pc.equal_size_class_lower_bound, 1);
    }

    #[test]
    fn centralizer_orders() {
        let s4 = close_group(&symmetric_generators(4), 4, DEFAULT_CAP).unwrap();
        let t = transposition(4, 0, 1);
        assert_eq!(centralizer_order_of(&s4, &t).unwrap(), 4);
        assert_eq!(centralizer_order_direct(&s4, &t).unwrap(), 4);
        let identity = Permutation::identity(4);
        assert_eq!(centralizer_order_of(&s4, &identity).unwrap(), 24);

        let a5 = close_group(&alternating_generators(5), 5, DEFAULT_CAP).unwrap();
        let five_cycle = cycle(5, &[0, 1, 2, 3, 4]);
        assert_eq!(centralizer_order_of(&a5, &five_cycle).unwrap(), 5);

        let not_in = transposition(5, 0, 1);
        assert!(centralizer_order_of(&a5, &not_in).is_err());
    }

    #[test]
    fn coprime_powers_share_centralizers() {
        for group in [
            close_group(&symmetric_generators(5), 5, DEFAULT_CAP).unwrap(),
            psl2_group(7, DEFAULT_CAP).unwrap(),
        ] {
            for x in group.elements().iter().step_by(7) {
                let ord = x.order();
                let c = centralizer_order_of(&group, x).unwrap();
                for t in 1..=ord {
                    if num_integer::gcd(t, ord) == 1 {
                        assert_eq!(centralizer_order_of(&group, &x.pow(t)).unwrap(), c);
                    }
                }
            }
        }
    }

    #[test]
    fn power_conjugacy_bound_is_respected() {
        let g = psl2_group(7, DEFAULT_CAP).unwrap();
        let x = g.elements().iter().find(|e| e.order() == 7).unwrap();
        let pc = power_conjugacy(&g, x).unwrap();
        let c = centralizer_order_of(&g, x).unwrap();
        let classes = conjugacy_classes(&g);
        let matching = classes
            .iter()
            .filter(|cl| g.order() / cl.size() == c)
            .count() as u64;
        assert!(matching >= pc.equal_size_class_lower_bound);
    }

    #[test]
    fn oracle_matches_partition_formulas_for_s4() {
        let s4 = close_group(&symmetric_generators(4), 4, DEFAULT_CAP).unwrap();
        for class in conjugacy_classes(&s4) {
            let lambda = class.rep.cycle_type();
            assert_eq!(BigUint::from(class.size()), lambda.class_size_sym());
        }
        let report = multiplicity_report_oracle(&s4, "s4");
        let formula = sym_alt::multiplicity_report(&GroupTag::Sym(4)).unwrap();
        assert_eq!(report.histogram, formula.histogram);
    }

    #[test]
    fn sign_matches_brute_force_parity() {
        for n in 1..=8usize {
            let sn = close_group(&symmetric_generators(n), n, DEFAULT_CAP).unwrap();
            // sample to keep S_8 affordable
            for x in sn.elements().iter().step_by(97.min(sn.order())) {
                assert_eq!(x.parity(), x.cycle_type().sign());
            }
        }
        // explicit 20-point permutation of type (10,9,1)
        let mut points: Vec<usize> = (0..10).collect();
        let c10 = cycle(20, &points);
        points = (10..19).collect();
        let c9 = cycle(20, &points);
        let x = c10.compose(&c9);
        assert_eq!(x.cycle_type().parts(), &[10, 9, 1]);
        assert_eq!(x.parity(), Parity::Odd);
    }

    #[test]
    fn parse_cycle_notation() {
        let p = parse_cycles("(0 1)(2 3)", 4, 1).unwrap();
        assert_eq!(p.images(), &[1, 0, 3, 2]);

        let p = parse_cycles("(0 1 2)", 5, 1).unwrap();
        assert_eq!(p.images(), &[1, 2, 0, 3, 4]);

        assert!(parse_cycles("(0 1", 4, 1).is_err());
        assert!(parse_cycles("(0 0)", 4, 1).is_err());
        assert!(parse_cycles("(0 9)", 4, 1).is_err());

        let gens = parse_generator_file("(0 1)\n(0 1 2 3)\n", None).unwrap();
        assert_eq!(gens.len(), 2);
        assert_eq!(gens[0].degree(), 4);
        let g = close_group(&gens, 4, DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 24);
    }

    #[test]
    fn display_roundtrip() {
        let p = parse_cycles("(0 1)(2 3)", 4, 1).unwrap();
        assert_eq!(p.to_string(), "(0 1)(2 3)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
    }
}
