//! The ordered sequence sets `S` and `B`, the weights `λ`, and the order
//! embedding `τ : B → [0, 1]`.
//!
//! `S` is the set of finite sequences of positive integers; `B ⊆ S` consists
//! of the sequences with `s(i) ≤ i`. The linear order `≺` compares at the
//! first differing index and otherwise puts prefixes first. The weight of a
//! length-`n` sequence is `λ(n) = 1/(2^n n!)`, and
//! `τ(s) = Σ_{t ≺ s} λ(ℓ(t))`, a convergent series because `|B_n| = n!`.
//!
//! `τ` is evaluated by the closed recurrence
//!
//! ```text
//! τ(⟨1⟩) = 0
//! τ(p + ⟨1⟩) = τ(p) + λ(ℓ(p))
//! τ(p + ⟨m⟩) = τ(p + ⟨1⟩) + (m − 1) · 2λ(ℓ(p) + 1)
//! ```
//!
//! while the series itself survives as the independent oracle
//! [`tau_oracle`], whose enumeration brackets `τ(s)` with a `2^−depth`
//! tail bound.

use crate::rational::{format_rational, factorial, pow2, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Default cap for exhaustive enumeration of `B_n` (`|B_8| = 40320`).
pub const DEFAULT_ENUM_MAX: u32 = 8;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeqError {
    #[error("sequence must be non-empty")]
    Empty,
    #[error("sequence entries must be positive integers")]
    ZeroEntry,
    #[error("sequence not in B: entry {value} at position {position} exceeds its index")]
    NotBounded { position: usize, value: u32 },
    #[error("lambda(0) is undefined; weights apply to lengths >= 1")]
    LambdaZero,
    #[error("oracle depth {depth} is below the sequence length {len}")]
    DepthTooSmall { depth: u32, len: usize },
    #[error("enumeration of B_{n} exceeds the configured maximum {max}")]
    EnumerationTooDeep { n: u32, max: u32 },
    #[error("n must be >= 1")]
    ZeroLength,
    #[error("point {0} lies outside [0, 1]")]
    OutOfUnitInterval(String),
    #[error("locate depth must be >= 1")]
    ZeroDepth,
    #[error("invalid sequence literal `{0}`")]
    BadLiteral(String),
}

/// A finite sequence of positive integers; the element `s ∈ S`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Seq {
    entries: Vec<u32>,
}

impl Seq {
    pub fn new(entries: Vec<u32>) -> Result<Self, SeqError> {
        if entries.is_empty() {
            return Err(SeqError::Empty);
        }
        if entries.contains(&0) {
            return Err(SeqError::ZeroEntry);
        }
        Ok(Seq { entries })
    }

    /// The singleton `⟨m⟩`.
    pub fn singleton(m: u32) -> Self {
        Seq::new(vec![m]).unwrap()
    }

    /// `count·⟨value⟩`: the constant sequence of given length.
    pub fn repeated(count: u32, value: u32) -> Result<Self, SeqError> {
        if count == 0 {
            return Err(SeqError::Empty);
        }
        Seq::new(vec![value; count as usize])
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false // invariant: length >= 1
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// Membership in `B`: `s(i) ≤ i` for all `i` (1-based).
    pub fn is_bounded(&self) -> bool {
        self.entries
            .iter()
            .enumerate()
            .all(|(i, &e)| e as usize <= i + 1)
    }

    pub fn ensure_bounded(&self) -> Result<(), SeqError> {
        match self
            .entries
            .iter()
            .enumerate()
            .find(|(i, &e)| e as usize > i + 1)
        {
            None => Ok(()),
            Some((i, &e)) => Err(SeqError::NotBounded {
                position: i + 1,
                value: e,
            }),
        }
    }

    /// Concatenation `s + s′`.
    pub fn concat(&self, other: &Seq) -> Seq {
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Seq { entries }
    }

    /// `s + ⟨m⟩`.
    pub fn extended(&self, m: u32) -> Seq {
        assert!(m >= 1);
        let mut entries = self.entries.clone();
        entries.push(m);
        Seq { entries }
    }

    pub fn last(&self) -> u32 {
        *self.entries.last().unwrap()
    }

    /// Everything but the last entry; `None` for singletons.
    pub fn parent(&self) -> Option<Seq> {
        if self.entries.len() == 1 {
            None
        } else {
            Some(Seq {
                entries: self.entries[..self.entries.len() - 1].to_vec(),
            })
        }
    }
}

impl fmt::Display for Seq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Seq {
    type Err = SeqError;

    /// Parses the comma literal, e.g. `"1,2,3"`.
    fn from_str(text: &str) -> Result<Self, SeqError> {
        let entries: Result<Vec<u32>, _> = text
            .split(',')
            .map(|p| p.trim().parse::<u32>())
            .collect();
        match entries {
            Ok(v) => Seq::new(v).map_err(|_| SeqError::BadLiteral(text.to_string())),
            Err(_) => Err(SeqError::BadLiteral(text.to_string())),
        }
    }
}

/// The order `≺`: case i) compares at the first differing index, case ii)
/// puts a sequence before its proper extensions. Total on all of `S`.
pub fn compare(s: &Seq, t: &Seq) -> Ordering {
    let min = s.len().min(t.len());
    for i in 0..min {
        if s.entries[i] != t.entries[i] {
            return s.entries[i].cmp(&t.entries[i]);
        }
    }
    s.len().cmp(&t.len())
}

impl PartialOrd for Seq {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Seq {
    fn cmp(&self, other: &Self) -> Ordering {
        compare(self, other)
    }
}

/// The weight `λ(n) = 1/(2^n n!)`, defined for `n ≥ 1`.
pub fn lambda(n: u32) -> Result<Rational, SeqError> {
    if n == 0 {
        return Err(SeqError::LambdaZero);
    }
    Ok(Rational::new(BigInt::one(), pow2(n) * factorial(n)))
}

/// `τ(s)` for `s ∈ B`, via the closed recurrence. Always in `[0, 1]`.
pub fn tau(s: &Seq) -> Result<Rational, SeqError> {
    s.ensure_bounded()?;
    let mut value = Rational::zero();
    // walk prefixes: tau(p + <m>) = tau(p) + lambda(l(p)) + (m-1) * 2*lambda(l(p)+1)
    for (pos, &m) in s.entries.iter().enumerate().skip(1) {
        let prefix_len = pos as u32;
        value += lambda(prefix_len)?;
        if m > 1 {
            let step = lambda(prefix_len + 1)?;
            value += Rational::from_integer(BigInt::from(2 * (m as i64 - 1))) * step;
        }
    }
    Ok(value)
}

/// Series oracle for `τ(s)`: brackets the infinite sum by summing
/// `λ(ℓ(t))` over all predecessors `t ≺ s` of length `≤ depth` and adding
/// the exact tail bound `2^−depth` (each full level `B_n` contributes
/// `n!·λ(n) = 2^−n`).
///
/// Predecessor counts per length are obtained by a pruned walk of the `B`
/// tree: a node comparing strictly (case i) against `s` decides all its
/// extensions at once, and a length-`j` node has `n!/j!` extensions of
/// length `n`. Only prefixes of `s` branch, so the walk is small while the
/// count is exactly the number of enumerated predecessors.
pub fn tau_oracle(s: &Seq, depth: u32) -> Result<(Rational, Rational), SeqError> {
    s.ensure_bounded()?;
    if (depth as usize) < s.len() {
        return Err(SeqError::DepthTooSmall {
            depth,
            len: s.len(),
        });
    }
    let mut counts: Vec<BigInt> = vec![BigInt::zero(); depth as usize + 1];
    count_predecessors(s, &Seq::singleton(1), depth, &mut counts);
    let mut lo = Rational::zero();
    for n in 1..=depth {
        if !counts[n as usize].is_zero() {
            lo += Rational::from_integer(counts[n as usize].clone()) * lambda(n)?;
        }
    }
    let hi = &lo + Rational::new(BigInt::one(), pow2(depth));
    Ok((lo, hi))
}

/// Number of length-`n` extensions of a length-`j` element of `B`:
/// positions `j+1..n` admit `j+1, j+2, …, n` choices, so `n!/j!`.
fn extension_count(j: u32, n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for k in (j + 1)..=n {
        acc *= k;
    }
    acc
}

fn count_predecessors(s: &Seq, node: &Seq, depth: u32, counts: &mut [BigInt]) {
    let j = node.len() as u32;
    if j > depth {
        return;
    }
    // compare node against s at the first differing index within the node
    let min = (node.len()).min(s.len());
    let mut decided: Option<Ordering> = None;
    for i in 0..min {
        if node.entries()[i] != s.entries()[i] {
            decided = Some(node.entries()[i].cmp(&s.entries()[i]));
            break;
        }
    }
    match decided {
        Some(Ordering::Less) => {
            // the whole subtree precedes s
            for n in j..=depth {
                counts[n as usize] += extension_count(j, n);
            }
        }
        Some(Ordering::Greater) => {} // the whole subtree follows s
        Some(Ordering::Equal) => unreachable!(),
        None => {
            if node.len() < s.len() {
                // node is a proper prefix of s: it precedes s, children vary
                counts[j as usize] += BigInt::one();
                for m in 1..=(j + 1) {
                    count_predecessors(s, &node.extended(m), depth, counts);
                }
            } else if node.len() == s.len() {
                // node == s: strict predecessors exclude it, extensions follow s
            } else {
                // s is a proper prefix of node: node follows s
            }
        }
    }
}

/// All of `B_n` in strictly `≺`-increasing order; `|B_n| = n!`.
pub fn enumerate_b(n: u32) -> Result<Vec<Seq>, SeqError> {
    enumerate_b_capped(n, DEFAULT_ENUM_MAX)
}

pub fn enumerate_b_capped(n: u32, max: u32) -> Result<Vec<Seq>, SeqError> {
    if n == 0 {
        return Err(SeqError::ZeroLength);
    }
    if n > max {
        return Err(SeqError::EnumerationTooDeep { n, max });
    }
    let mut level = vec![Seq::singleton(1)];
    for next_len in 2..=n {
        let mut grown = Vec::with_capacity(level.len() * next_len as usize);
        for s in &level {
            for m in 1..=next_len {
                grown.push(s.extended(m));
            }
        }
        level = grown;
    }
    Ok(level)
}

/// Result of locating `x ∈ [0,1]` against the covering intervals
/// `[τ(s), τ(s+⟨1⟩))` of generation `≤ depth`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LocateResult {
    /// `x ∈ [τ(s), τ(s+⟨1⟩))`, with `offset = x − τ(s) < λ(ℓ(s))`.
    Interval { seq: Seq, offset: Rational },
    /// No covering interval up to `depth`; `bound` is a certified upper
    /// bound on the distance from `x` to an enumerated interval endpoint.
    Gap { depth: u32, bound: Rational },
}

/// Walks the maximal-element chain `s_i = max{s ∈ B_i; τ(s) ≤ x}`.
///
/// Ties (`x = τ(s)` exactly) resolve to the interval starting at `s`, so the
/// intervals are treated as half open on the right.
pub fn locate(x: &Rational, depth: u32) -> Result<LocateResult, SeqError> {
    if depth == 0 {
        return Err(SeqError::ZeroDepth);
    }
    if x.is_negative() || x > &Rational::one() {
        return Err(SeqError::OutOfUnitInterval(format_rational(x)));
    }
    let mut s = Seq::singleton(1);
    let mut tau_s = Rational::zero();
    let mut best: Option<Rational> = None;
    let mut note = |candidate: Rational| {
        debug_assert!(!candidate.is_negative());
        best = match best.take() {
            None => Some(candidate),
            Some(b) => Some(b.min(candidate)),
        };
    };
    for i in 1..=depth {
        let lam_i = lambda(i)?;
        let end = &tau_s + &lam_i; // τ(s + ⟨1⟩)
        if x < &end {
            return Ok(LocateResult::Interval {
                offset: x - tau_s,
                seq: s,
            });
        }
        // x ≥ end: this right endpoint is enumerated and ≤ x
        note(x - &end);
        if i == depth {
            break;
        }
        // descend: s_{i+1} = s + ⟨m⟩ with m maximal such that τ(s+⟨m⟩) ≤ x,
        // where τ(s+⟨m⟩) = end + (m−1)·2λ(i+1)
        let two_lam = Rational::from_integer(BigInt::from(2)) * lambda(i + 1)?;
        let rank = ((x - &end) / &two_lam).floor().to_integer();
        let max_child = BigInt::from(i + 1);
        let m_big = (rank + BigInt::one()).min(max_child.clone());
        let m = m_big.to_u32().expect("child index fits in u32");
        let tau_child = &end + Rational::from_integer(BigInt::from(m as i64 - 1)) * &two_lam;
        if m < i + 1 {
            // τ(s+⟨m+1⟩) starts an enumerated interval above x
            note((&tau_child + &two_lam) - x);
        }
        s = s.extended(m);
        tau_s = tau_child;
    }
    Ok(LocateResult::Gap {
        depth,
        bound: best.expect("at least one endpoint was enumerated"),
    })
}

/// One row per grid point: the point and its exact distance to the union of
/// generation-`≤ depth` intervals.
#[derive(Debug, Clone)]
pub struct DensityReport {
    pub depth: u32,
    pub grid: u32,
    pub rows: Vec<(Rational, Rational)>,
    pub max_gap: Rational,
}

/// Exact distance profile of the interval family against a uniform grid.
///
/// All intervals `[τ(s), τ(s)+λ(ℓ(s))]` with `ℓ(s) ≤ depth` are enumerated,
/// merged, and each grid point `j/grid` is measured against the merged
/// family. The maximum is non-increasing in `depth`.
pub fn density_report(depth: u32, grid: u32) -> Result<DensityReport, SeqError> {
    if depth == 0 {
        return Err(SeqError::ZeroDepth);
    }
    // |B_1 ∪ … ∪ B_10| is already 4 million intervals
    let cap = DEFAULT_ENUM_MAX + 2;
    if depth > cap {
        return Err(SeqError::EnumerationTooDeep { n: depth, max: cap });
    }
    assert!(grid >= 2, "grid must have at least two points");
    let mut intervals: Vec<(Rational, Rational)> = Vec::new();
    for n in 1..=depth {
        let lam = lambda(n)?;
        for s in enumerate_b_capped(n, cap)? {
            let start = tau(&s)?;
            let end = &start + &lam;
            intervals.push((start, end));
        }
    }
    intervals.sort();
    let merged = merge_intervals(intervals);
    let grid_den = BigInt::from(grid);
    let mut rows = Vec::with_capacity(grid as usize + 1);
    let mut max_gap = Rational::zero();
    for j in 0..=grid {
        let x = Rational::new(BigInt::from(j), grid_den.clone());
        let d = distance_to_family(&x, &merged);
        if d > max_gap {
            max_gap = d.clone();
        }
        rows.push((x, d));
    }
    Ok(DensityReport {
        depth,
        grid,
        rows,
        max_gap,
    })
}

fn merge_intervals(sorted: Vec<(Rational, Rational)>) -> Vec<(Rational, Rational)> {
    let mut merged: Vec<(Rational, Rational)> = Vec::new();
    for (a, b) in sorted {
        match merged.last_mut() {
            Some((_, end)) if *end >= a => {
                if b > *end {
                    *end = b;
                }
            }
            _ => merged.push((a, b)),
        }
    }
    merged
}

fn distance_to_family(x: &Rational, merged: &[(Rational, Rational)]) -> Rational {
    // binary search for the first interval starting after x
    let mut lo = 0usize;
    let mut hi = merged.len();
    while lo < hi {
        let mid = (lo + hi) / 2;
        if &merged[mid].0 <= x {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    let mut best: Option<Rational> = None;
    if lo > 0 {
        let (_, end) = &merged[lo - 1];
        if end >= x {
            return Rational::zero();
        }
        best = Some(x - end);
    }
    if lo < merged.len() {
        let gap = &merged[lo].0 - x;
        best = Some(match best {
            None => gap,
            Some(b) => b.min(gap),
        });
    }
    best.expect("interval family is non-empty")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn seq(entries: &[u32]) -> Seq {
        Seq::new(entries.to_vec()).unwrap()
    }

    #[test]
    fn order_cases() {
        // prefix case ii)
        assert_eq!(compare(&seq(&[1]), &seq(&[1, 1])), Ordering::Less);
        // first differing index case i), cross-checked by rank in B_2
        assert_eq!(compare(&seq(&[1, 1]), &seq(&[1, 2])), Ordering::Less);
        assert_eq!(compare(&seq(&[1, 3]), &seq(&[1, 3])), Ordering::Equal);
        assert_eq!(compare(&seq(&[2, 1]), &seq(&[1, 9, 9])), Ordering::Greater);
    }

    #[test]
    fn lambda_values() {
        assert_eq!(lambda(1).unwrap(), rat(1, 2));
        assert_eq!(lambda(2).unwrap(), rat(1, 8));
        // big-integer factorial oracle: 2^5 * 5! = 3840
        assert_eq!(lambda(5).unwrap(), rat(1, 3840));
        assert_eq!(lambda(0), Err(SeqError::LambdaZero));
    }

    #[test]
    fn tau_values() {
        assert_eq!(tau(&seq(&[1])).unwrap(), rat(0, 1));
        assert_eq!(tau(&seq(&[1, 1])).unwrap(), rat(1, 2));
        assert_eq!(tau(&seq(&[1, 2, 3])).unwrap(), rat(23, 24));
        assert!(matches!(
            tau(&seq(&[2])),
            Err(SeqError::NotBounded { position: 1, value: 2 })
        ));
    }

    #[test]
    fn tau_oracle_brackets() {
        let (lo, hi) = tau_oracle(&seq(&[1]), 5).unwrap();
        assert_eq!(lo, rat(0, 1));
        assert_eq!(hi, rat(1, 32));

        let (lo, hi) = tau_oracle(&seq(&[1, 1]), 6).unwrap();
        assert_eq!(&hi - &lo, rat(1, 64));
        assert!(lo <= rat(1, 2) && rat(1, 2) <= hi);

        // every s in B_3 at depth 10: interval of width 2^-10 containing tau(s)
        for s in enumerate_b(3).unwrap() {
            let t = tau(&s).unwrap();
            let (lo, hi) = tau_oracle(&s, 10).unwrap();
            assert_eq!(&hi - &lo, rat(1, 1024));
            assert!(lo <= t && t <= hi, "oracle misses tau({s})");
        }

        assert!(matches!(
            tau_oracle(&seq(&[1, 1, 1]), 2),
            Err(SeqError::DepthTooSmall { .. })
        ));
    }

    #[test]
    fn oracle_counts_match_literal_enumeration() {
        // the pruned predecessor count must agree with literal enumeration
        for s in enumerate_b(4).unwrap() {
            let depth = 6;
            let mut counts = vec![BigInt::zero(); depth + 1];
            count_predecessors(&s, &Seq::singleton(1), depth as u32, &mut counts);
            for (n, count) in counts.iter().enumerate().skip(1) {
                let literal = enumerate_b(n as u32)
                    .unwrap()
                    .into_iter()
                    .filter(|t| compare(t, &s) == Ordering::Less)
                    .count();
                assert_eq!(count, &BigInt::from(literal), "s={s} n={n}");
            }
        }
    }

    #[test]
    fn enumerate_b_is_sorted_with_factorial_cardinality() {
        assert_eq!(enumerate_b(1).unwrap(), vec![seq(&[1])]);
        assert_eq!(
            enumerate_b(2).unwrap(),
            vec![seq(&[1, 1]), seq(&[1, 2])]
        );
        let b4 = enumerate_b(4).unwrap();
        assert_eq!(b4.len(), 24);
        assert!(b4.windows(2).all(|w| compare(&w[0], &w[1]) == Ordering::Less));
        assert!(matches!(
            enumerate_b(9),
            Err(SeqError::EnumerationTooDeep { n: 9, max: 8 })
        ));
    }

    #[test]
    fn sibling_window_characterization() {
        // s+⟨m⟩ ⪯ t ≺ s+⟨m+1⟩ exactly when t extends s with t(n+1) = m
        for s in enumerate_b(3).unwrap() {
            let n = s.len();
            for m in 1..=3u32 {
                let lo = s.extended(m);
                let hi = s.extended(m + 1);
                for len in 1..=5u32 {
                    for t in enumerate_b(len).unwrap() {
                        let in_window = compare(&lo, &t) != Ordering::Greater
                            && compare(&t, &hi) == Ordering::Less;
                        let extends = t.len() > n
                            && t.entries()[..n] == *s.entries()
                            && t.entries()[n] == m;
                        assert_eq!(in_window, extends, "s={s} m={m} t={t}");
                    }
                }
            }
        }
    }

    #[test]
    fn locate_examples() {
        // tau(<1>) = 0 and tau(<1,1>) = 1/2 bracket 1/4
        assert_eq!(
            locate(&rat(1, 4), 3).unwrap(),
            LocateResult::Interval {
                seq: seq(&[1]),
                offset: rat(1, 4)
            }
        );
        assert_eq!(
            locate(&rat(0, 1), 1).unwrap(),
            LocateResult::Interval {
                seq: seq(&[1]),
                offset: rat(0, 1)
            }
        );
        // x = 1 is a gap at every depth
        for depth in 1..=10 {
            match locate(&rat(1, 1), depth).unwrap() {
                LocateResult::Gap { bound, .. } => {
                    assert!(bound.is_positive());
                    assert!(bound <= Rational::new(BigInt::one(), pow2(depth)));
                }
                other => panic!("expected Gap at depth {depth}, got {other:?}"),
            }
        }
        assert!(locate(&rat(3, 2), 2).is_err());
        assert!(locate(&rat(-1, 2), 2).is_err());
    }

    #[test]
    fn locate_ties_go_right() {
        // x = tau(<1,1>) exactly: assigned to the interval starting there
        let x = rat(1, 2);
        assert_eq!(
            locate(&x, 4).unwrap(),
            LocateResult::Interval {
                seq: seq(&[1, 1]),
                offset: rat(0, 1)
            }
        );
    }

    #[test]
    fn locate_agrees_with_interval_enumeration() {
        // oracle: check the located interval really contains x, and that a
        // reported gap really misses every enumerated interval
        let depth = 5u32;
        let mut intervals = Vec::new();
        for n in 1..=depth {
            for s in enumerate_b(n).unwrap() {
                let start = tau(&s).unwrap();
                let end = &start + lambda(n).unwrap();
                intervals.push((s, start, end));
            }
        }
        for j in 0..=97u32 {
            let x = rat(j as i64, 97);
            match locate(&x, depth).unwrap() {
                LocateResult::Interval { seq: s, offset } => {
                    let t = tau(&s).unwrap();
                    assert_eq!(&t + &offset, x);
                    assert!(offset < lambda(s.len() as u32).unwrap());
                }
                LocateResult::Gap { bound, .. } => {
                    for (_, start, end) in &intervals {
                        assert!(&x < start || &x >= end, "gap point {x} is covered");
                    }
                    // bound certifies distance to some endpoint
                    let attained = intervals.iter().any(|(_, start, end)| {
                        (&x - start).abs() <= bound || (&x - end).abs() <= bound
                    });
                    assert!(attained);
                }
            }
        }
    }

    #[test]
    fn density_depth_one() {
        // only [0, 1/2] exists at depth 1; farthest grid point is 1
        let report = density_report(1, 10).unwrap();
        assert_eq!(report.max_gap, rat(1, 2));
    }

    #[test]
    fn density_monotone() {
        let mut previous: Option<Rational> = None;
        for depth in 1..=6 {
            let r = density_report(depth, 100).unwrap();
            if let Some(p) = previous {
                assert!(r.max_gap <= p, "density must not worsen with depth");
            }
            previous = Some(r.max_gap);
        }
        assert!(matches!(
            density_report(11, 10),
            Err(SeqError::EnumerationTooDeep { .. })
        ));
    }
}
