//! Integer partitions: orders, conjugation, hooks, abacus core/quotient,
//! regularization and enumeration.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-indexed), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        let mut out = Vec::with_capacity(first);
        for j in 0..first {
            out.push(self.0.iter().take_while(|&&x| x > j).count());
        }
        Partition(out)
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// Hook length at 0-indexed cell (i, j).
    pub fn hook_length(&self, i: usize, j: usize) -> usize {
        let conj = self.conjugate();
        self.0[i] - j + conj.part(j) - i - 1
    }

    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.0
            .iter()
            .enumerate()
            .map(|(i, &row)| (0..row).map(|j| row - j + conj.part(j) - i - 1).collect())
            .collect()
    }

    pub fn durfee(&self) -> usize {
        self.0.iter().enumerate().take_while(|(i, &x)| x > *i).count()
    }

    pub fn diagonal_hooks(&self) -> Vec<usize> {
        let conj = self.conjugate();
        (0..self.durfee())
            .map(|k| self.0[k] + conj.part(k) - 2 * k - 1)
            .collect()
    }

    pub fn is_p_regular(&self, p: usize) -> bool {
        let mut run = 1;
        for w in self.0.windows(2) {
            if w[0] == w[1] {
                run += 1;
                if run >= p {
                    return false;
                }
            } else {
                run = 1;
            }
        }
        p > 1 || self.is_empty()
    }

    /// Addable cells as 0-indexed (row, col), top to bottom.
    pub fn addable(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..=self.len() {
            let here = self.part(i);
            if i == 0 || self.part(i - 1) > here {
                out.push((i, here));
            }
        }
        out
    }

    /// Removable cells as 0-indexed (row, col), top to bottom.
    pub fn removable(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .filter(|&i| self.part(i + 1) < self.0[i])
            .map(|i| (i, self.0[i] - 1))
            .collect()
    }

    /// Adds one box in row `i`; caller guarantees it is addable.
    pub fn with_added(&self, i: usize) -> Partition {
        let mut v = self.0.clone();
        if i == v.len() {
            v.push(1);
        } else {
            v[i] += 1;
        }
        Partition(v)
    }

    /// Removes one box from row `i`; caller guarantees it is removable.
    pub fn with_removed(&self, i: usize) -> Partition {
        let mut v = self.0.clone();
        v[i] -= 1;
        if v[i] == 0 {
            v.pop();
        }
        Partition(v)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Accepts "10,4,4,1", "(10,4,4,1)", "[10,4,4,1]" and the empty string.
impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']'])
            .trim();
        if t.is_empty() || t == "∅" {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse(s.to_string()))?;
        Partition::new(parts)
    }
}

#[macro_export]
macro_rules! part {
    () => { $crate::partition::Partition::empty() };
    ($($x:expr),+ $(,)?) => {
        $crate::partition::Partition::new(vec![$($x),+]).expect("valid partition literal")
    };
}

fn same_size(a: &Partition, b: &Partition) -> Result<()> {
    if a.size() != b.size() {
        return Err(Error::SizeMismatch { left: a.clone(), right: b.clone() });
    }
    Ok(())
}

pub fn conjugate(l: &Partition) -> Partition {
    l.conjugate()
}

pub fn dominance_leq(l: &Partition, m: &Partition) -> Result<bool> {
    same_size(l, m)?;
    let (mut a, mut b) = (0, 0);
    for k in 0..l.len().max(m.len()) {
        a += l.part(k);
        b += m.part(k);
        if a > b {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn lex_cmp(l: &Partition, m: &Partition) -> Ordering {
    l.parts().cmp(m.parts())
}

pub fn lex_leq(l: &Partition, m: &Partition) -> Result<bool> {
    same_size(l, m)?;
    Ok(lex_cmp(l, m) != Ordering::Greater)
}

/// λ ≤′ μ iff μ′ ≤ λ′ lexicographically.
pub fn lexprime_cmp(l: &Partition, m: &Partition) -> Ordering {
    lex_cmp(&m.conjugate(), &l.conjugate())
}

pub fn lexprime_leq(l: &Partition, m: &Partition) -> Result<bool> {
    same_size(l, m)?;
    Ok(lexprime_cmp(l, m) != Ordering::Greater)
}

pub fn is_p_regular(l: &Partition, p: usize) -> bool {
    l.is_p_regular(p)
}

pub fn hook_lengths(l: &Partition) -> Vec<Vec<usize>> {
    l.hook_lengths()
}

pub fn diagonal_hooks(l: &Partition) -> Vec<usize> {
    l.diagonal_hooks()
}

fn check_p(p: usize) -> Result<()> {
    if p < 2 {
        return Err(Error::BadModulus(p));
    }
    Ok(())
}

/// A p-tuple of partitions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PMultipartition {
    pub components: Vec<Partition>,
}

impl PMultipartition {
    pub fn new(components: Vec<Partition>) -> Self {
        PMultipartition { components }
    }

    pub fn empty(p: usize) -> Self {
        PMultipartition { components: vec![Partition::empty(); p] }
    }

    pub fn p(&self) -> usize {
        self.components.len()
    }

    pub fn size(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }

    /// ((λ^p)′, …, (λ¹)′)
    pub fn reversed_conjugate(&self) -> Self {
        PMultipartition {
            components: self.components.iter().rev().map(Partition::conjugate).collect(),
        }
    }
}

impl fmt::Display for PMultipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.components.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoreQuotientPair {
    pub core: Partition,
    pub quotient: PMultipartition,
    pub p: usize,
}

impl CoreQuotientPair {
    pub fn n(&self) -> usize {
        self.core.size() + self.p * self.quotient.size()
    }
}

// Abacus with a bead count that is a multiple of p, so that runner k is
// independent of the padding.
struct Abacus {
    p: usize,
    // levels[k] = sorted ascending bead levels on runner k
    levels: Vec<Vec<usize>>,
}

impl Abacus {
    fn of(l: &Partition, p: usize) -> Self {
        let r = l.len().div_ceil(p) * p;
        let mut levels = vec![Vec::new(); p];
        for i in 0..r {
            let beta = l.part(i) + r - 1 - i;
            levels[beta % p].push(beta / p);
        }
        for lv in &mut levels {
            lv.sort_unstable();
        }
        Abacus { p, levels }
    }

    fn to_partition(&self) -> Partition {
        let mut betas: Vec<usize> = self
            .levels
            .iter()
            .enumerate()
            .flat_map(|(k, lv)| lv.iter().map(move |&l| l * self.p + k))
            .collect();
        betas.sort_unstable_by(|a, b| b.cmp(a));
        let r = betas.len();
        Partition::from_unsorted(betas.iter().enumerate().map(|(i, &b)| b + i + 1 - r).collect())
    }

    fn is_compact(&self) -> bool {
        self.levels.iter().all(|lv| lv.iter().enumerate().all(|(j, &l)| l == j))
    }

    fn runner_quotient(lv: &[usize]) -> Partition {
        let b = lv.len();
        // lv ascending: level of j-th largest bead is lv[b-1-j]
        Partition::from_unsorted((0..b).map(|j| lv[b - 1 - j] - (b - 1 - j)).collect())
    }
}

pub fn is_p_core(l: &Partition, p: usize) -> bool {
    p >= 2 && Abacus::of(l, p).is_compact()
}

pub fn p_core(l: &Partition, p: usize) -> Result<Partition> {
    check_p(p)?;
    let mut ab = Abacus::of(l, p);
    for lv in &mut ab.levels {
        let b = lv.len();
        *lv = (0..b).collect();
    }
    Ok(ab.to_partition())
}

pub fn p_quotient(l: &Partition, p: usize) -> Result<PMultipartition> {
    check_p(p)?;
    let ab = Abacus::of(l, p);
    Ok(PMultipartition::new(ab.levels.iter().map(|lv| Abacus::runner_quotient(lv)).collect()))
}

pub fn p_weight(l: &Partition, p: usize) -> Result<usize> {
    Ok((l.size() - p_core(l, p)?.size()) / p)
}

pub fn core_quotient(l: &Partition, p: usize) -> Result<CoreQuotientPair> {
    Ok(CoreQuotientPair { core: p_core(l, p)?, quotient: p_quotient(l, p)?, p })
}

pub fn from_core_quotient(cq: &CoreQuotientPair) -> Result<Partition> {
    let p = cq.p;
    check_p(p)?;
    if cq.quotient.p() != p {
        return Err(Error::QuotientLength { expected: p, got: cq.quotient.p() });
    }
    if !is_p_core(&cq.core, p) {
        return Err(Error::NotACore { partition: cq.core.clone(), p });
    }
    let maxq = cq.quotient.components.iter().map(Partition::len).max().unwrap_or(0);
    // enough padding that every runner carries at least maxq beads
    let r = p * (cq.core.len() + maxq + 1);
    let mut levels = vec![0usize; p];
    for i in 0..r {
        levels[(cq.core.part(i) + r - 1 - i) % p] += 1;
    }
    let ab = Abacus {
        p,
        levels: levels
            .iter()
            .zip(&cq.quotient.components)
            .map(|(&b, q)| (0..b).map(|j| q.part(j) + (b - 1 - j)).collect())
            .collect(),
    };
    Ok(ab.to_partition())
}

/// Both identities: core(λ′) = core(λ)′ and quotient(λ′) is the reversed
/// conjugated quotient of λ.
pub fn conjugate_core_quotient_law_check(l: &Partition, p: usize) -> bool {
    let c = l.conjugate();
    match (p_core(l, p), p_core(&c, p), p_quotient(l, p), p_quotient(&c, p)) {
        (Ok(a), Ok(b), Ok(q), Ok(qc)) => b == a.conjugate() && qc == q.reversed_conjugate(),
        _ => false,
    }
}

/// p-regularization: every node slides to the top of its p-ladder.
pub fn regularize(l: &Partition, p: usize) -> Result<Partition> {
    check_p(p)?;
    // ladder of 0-indexed (i, j) is i + (p-1) j
    let mut counts: Vec<usize> = Vec::new();
    for (i, &row) in l.parts().iter().enumerate() {
        for j in 0..row {
            let lad = i + (p - 1) * j;
            if counts.len() <= lad {
                counts.resize(lad + 1, 0);
            }
            counts[lad] += 1;
        }
    }
    let mut rows: Vec<usize> = Vec::new();
    for (lad, &c) in counts.iter().enumerate() {
        // cells on the ladder, topmost first: largest j with i = lad - (p-1) j
        let jmax = lad / (p - 1);
        for j in (0..=jmax).rev().take(c) {
            let i = lad - (p - 1) * j;
            if rows.len() <= i {
                rows.resize(i + 1, 0);
            }
            rows[i] += 1;
            debug_assert!(rows[i] == j + 1, "regularization left a gap");
        }
    }
    Partition::new(rows.into_iter().filter(|&x| x > 0).collect())
}

/// Partitions of n in lex-descending order, from (n) down to (1^n).
#[derive(Debug, Clone)]
pub struct Partitions {
    next: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = Partition;
    fn next(&mut self) -> Option<Partition> {
        let cur = self.next.take()?;
        // successor: decrement the last part > 1, refill the tail greedily
        if let Some(k) = cur.iter().rposition(|&x| x > 1) {
            let mut nxt = cur[..k].to_vec();
            let v = cur[k] - 1;
            let mut rest = cur[k..].iter().sum::<usize>();
            while rest > 0 {
                let take = v.min(rest);
                nxt.push(take);
                rest -= take;
            }
            self.next = Some(nxt);
        }
        Some(Partition(cur))
    }
}

pub fn partitions_of(n: usize) -> Partitions {
    Partitions { next: Some(if n == 0 { vec![] } else { vec![n] }) }
}

pub fn p_regular_partitions_of(n: usize, p: usize) -> impl Iterator<Item = Partition> {
    partitions_of(n).filter(move |l| l.is_p_regular(p))
}

pub fn self_conjugate_partitions_of(n: usize) -> impl Iterator<Item = Partition> {
    partitions_of(n).filter(Partition::is_self_conjugate)
}

/// All p-cores of size n.
pub fn p_cores_of(n: usize, p: usize) -> impl Iterator<Item = Partition> {
    partitions_of(n).filter(move |l| is_p_core(l, p))
}
