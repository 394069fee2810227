//! The Mullineux involution on p-regular partitions.
//!
//! Two independent algorithms: the Mullineux symbol (p-rim stripping) and
//! the good-node path in the Kleshchev crystal with residues negated.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::partition::{p_regular_partitions_of, Partition};

fn check(l: &Partition, p: usize) -> Result<()> {
    if p < 2 {
        return Err(Error::BadModulus(p));
    }
    if !l.is_p_regular(p) {
        return Err(Error::NotRegular { partition: l.clone(), p });
    }
    Ok(())
}

/// Cells of the p-rim, 0-indexed (row, col).
fn p_rim(l: &Partition, p: usize) -> Vec<(usize, usize)> {
    let rows = l.len();
    let mut out = Vec::new();
    let mut start = 0;
    while start < rows {
        // walk the rim from the end of row `start`
        let mut taken = 0;
        let mut last_row = start;
        'seg: for i in start..rows {
            let lo = l.part(i + 1).max(1);
            for j in (lo..=l.part(i)).rev() {
                out.push((i, j - 1));
                taken += 1;
                last_row = i;
                if taken == p {
                    break 'seg;
                }
            }
        }
        if taken < p {
            break;
        }
        start = last_row + 1;
    }
    out
}

fn strip(l: &Partition, cells: &[(usize, usize)]) -> Partition {
    let mut v = l.parts().to_vec();
    for &(i, _) in cells {
        v[i] -= 1;
    }
    Partition::from_unsorted(v)
}

/// The Mullineux symbol: columns (A_i, R_i) from the first p-rim onwards.
pub fn mullineux_symbol(l: &Partition, p: usize) -> Result<Vec<(usize, usize)>> {
    check(l, p)?;
    let mut cur = l.clone();
    let mut cols = Vec::new();
    while !cur.is_empty() {
        let rim = p_rim(&cur, p);
        cols.push((rim.len(), cur.len()));
        cur = strip(&cur, &rim);
    }
    Ok(cols)
}

/// Candidates λ ⊇ μ with `rows` rows, |λ/μ| = extra and λ/μ inside the rim of λ.
fn extensions(mu: &Partition, rows: usize, extra: usize, out: &mut Vec<Partition>) {
    fn go(mu: &Partition, rows: usize, i: usize, left: usize, acc: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == rows {
            if left == 0 {
                out.push(Partition::from_unsorted(acc.clone()));
            }
            return;
        }
        let lo = mu.part(i).max(1);
        let mut hi = mu.part(i) + left;
        if i > 0 {
            hi = hi.min(acc[i - 1]).min(mu.part(i - 1) + 1);
        }
        if lo > hi {
            return;
        }
        for x in (lo..=hi).rev() {
            acc.push(x);
            go(mu, rows, i + 1, left - (x - mu.part(i)), acc, out);
            acc.pop();
        }
    }
    if rows < mu.len() {
        return;
    }
    go(mu, rows, 0, extra, &mut Vec::new(), out);
}

/// Inverse of [`mullineux_symbol`].
pub fn from_mullineux_symbol(cols: &[(usize, usize)], p: usize) -> Result<Partition> {
    let mut mu = Partition::empty();
    for &(a, r) in cols.iter().rev() {
        let mut cands = Vec::new();
        extensions(&mu, r, a, &mut cands);
        let found = cands.into_iter().find(|lam| {
            lam.is_p_regular(p) && {
                let rim = p_rim(lam, p);
                rim.len() == a && strip(lam, &rim) == mu
            }
        });
        mu = found.ok_or_else(|| Error::Precondition(format!("not a Mullineux symbol: {cols:?}")))?;
    }
    Ok(mu)
}

fn mullineux_uncached(l: &Partition, p: usize) -> Result<Partition> {
    let sym = mullineux_symbol(l, p)?;
    let image: Vec<_> = sym
        .iter()
        .map(|&(a, r)| {
            let eps = usize::from(a % p != 0);
            (a, eps + a - r)
        })
        .collect();
    from_mullineux_symbol(&image, p)
}

const CACHE_CAP: usize = 1 << 16;

fn cache() -> &'static Mutex<HashMap<(Partition, usize), Partition>> {
    static C: OnceLock<Mutex<HashMap<(Partition, usize), Partition>>> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

/// m(λ), via the Mullineux symbol. Memoized in a bounded process-wide cache.
pub fn mullineux(l: &Partition, p: usize) -> Result<Partition> {
    let key = (l.clone(), p);
    if let Some(v) = cache().lock().expect("cache poisoned").get(&key) {
        return Ok(v.clone());
    }
    let v = mullineux_uncached(l, p)?;
    let mut c = cache().lock().expect("cache poisoned");
    if c.len() >= CACHE_CAP {
        c.clear();
    }
    c.insert(key, v.clone());
    Ok(v)
}

pub fn residue(row: usize, col: usize, p: usize) -> usize {
    // 0-indexed cells; same as (col - row) mod p for 1-indexed ones
    (col + p * (row / p + 1) - row) % p
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Sig {
    Add(usize),
    Rem(usize),
}

/// Uncancelled i-signature, read top to bottom with "addable above removable" pairs cancelled.
fn reduced_signature(l: &Partition, i: usize, p: usize) -> Vec<Sig> {
    let mut nodes: Vec<(usize, Sig)> = Vec::new();
    for (r, c) in l.addable() {
        if residue(r, c, p) == i {
            nodes.push((r, Sig::Add(r)));
        }
    }
    for (r, c) in l.removable() {
        if residue(r, c, p) == i {
            nodes.push((r, Sig::Rem(r)));
        }
    }
    nodes.sort_by_key(|&(r, _)| r);
    let mut stack: Vec<Sig> = Vec::new();
    for (_, s) in nodes {
        match (s, stack.last()) {
            (Sig::Rem(_), Some(Sig::Add(_))) => {
                stack.pop();
            }
            _ => stack.push(s),
        }
    }
    stack
}

/// Row of the good removable i-node, if any.
pub fn good_removable(l: &Partition, i: usize, p: usize) -> Option<usize> {
    reduced_signature(l, i, p).iter().rev().find_map(|s| match s {
        Sig::Rem(r) => Some(*r),
        _ => None,
    })
}

/// Row of the good addable i-node, if any.
pub fn good_addable(l: &Partition, i: usize, p: usize) -> Option<usize> {
    reduced_signature(l, i, p).iter().find_map(|s| match s {
        Sig::Add(r) => Some(*r),
        _ => None,
    })
}

/// Residues of a good-node path from ∅ to λ, in the order the nodes are added.
pub fn good_node_path(l: &Partition, p: usize) -> Result<Vec<usize>> {
    check(l, p)?;
    let mut cur = l.clone();
    let mut path = Vec::with_capacity(l.size());
    while !cur.is_empty() {
        let (i, r) = (0..p)
            .find_map(|i| good_removable(&cur, i, p).map(|r| (i, r)))
            .expect("nonempty p-regular partition has a good node");
        path.push(i);
        cur = cur.with_removed(r);
    }
    path.reverse();
    Ok(path)
}

/// m(λ), via the crystal: follow the good-node path with negated residues.
pub fn mullineux_alt(l: &Partition, p: usize) -> Result<Partition> {
    let path = good_node_path(l, p)?;
    let mut cur = Partition::empty();
    for i in path {
        let j = (p - i) % p;
        let r = good_addable(&cur, j, p).ok_or_else(|| {
            Error::Precondition(format!("no good addable {j}-node on {cur}"))
        })?;
        cur = cur.with_added(r);
    }
    Ok(cur)
}

pub fn is_mullineux_fixed(l: &Partition, p: usize) -> Result<bool> {
    Ok(mullineux(l, p)? == *l)
}

/// ℳ_n^p in lex-descending order.
pub fn mullineux_fixed(n: usize, p: usize) -> Result<Vec<Partition>> {
    if p < 2 {
        return Err(Error::BadModulus(p));
    }
    let mut out = Vec::new();
    for l in p_regular_partitions_of(n, p) {
        if mullineux(&l, p)? == l {
            out.push(l);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn symbol_roundtrip() {
        for n in 0..=10 {
            for l in p_regular_partitions_of(n, 3) {
                let s = mullineux_symbol(&l, 3).unwrap();
                assert_eq!(from_mullineux_symbol(&s, 3).unwrap(), l);
            }
        }
    }

    #[test]
    fn golden() {
        for f in [mullineux, mullineux_alt] {
            assert_eq!(f(&part![2, 2, 1], 3).unwrap(), part![4, 1]);
            assert_eq!(f(&part![3, 1, 1], 3).unwrap(), part![3, 1, 1]);
            assert_eq!(f(&part![3, 2], 3).unwrap(), part![5]);
            assert_eq!(f(&part![5], 3).unwrap(), part![3, 2]);
            assert_eq!(f(&part![1], 3).unwrap(), part![1]);
            assert_eq!(f(&part![6, 2, 2, 1, 1], 3).unwrap(), part![5, 3, 2, 2]);
        }
    }

    #[test]
    fn rejects_singular() {
        assert!(matches!(mullineux(&part![1, 1, 1], 3), Err(Error::NotRegular { .. })));
        assert!(mullineux_alt(&part![1, 1, 1], 3).is_err());
    }

    #[test]
    fn large_p_is_conjugation() {
        for l in crate::partition::partitions_of(6) {
            assert_eq!(mullineux(&l, 7).unwrap(), l.conjugate());
            assert_eq!(mullineux_alt(&l, 7).unwrap(), l.conjugate());
        }
    }

    #[test]
    fn residues() {
        assert_eq!(residue(0, 0, 3), 0);
        assert_eq!(residue(1, 0, 3), 2);
        assert_eq!(residue(0, 3, 3), 0);
        assert_eq!(residue(7, 0, 3), 2);
    }
}
