//! Basic-set calculus: verification on matrix models, the order ⪯ and the
//! map Θ, the sign-adapted basic set B̃, and the ρ-swap.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{is_unimodular, BasicSetDatum, DecompMatrixModel, Entry, Label, TotalOrderSpec};
use crate::mullineux::mullineux;
use crate::partition::{is_p_core, p_core, p_regular_partitions_of, Partition};

/// True iff the rows `b` of `d` form a ℤ-basis: the square submatrix on
/// `b` × all columns has determinant ±1.
pub fn verify_basic_set(d: &DecompMatrixModel, b: &[Label]) -> Result<bool> {
    if b.len() != d.cols().len() {
        return Err(Error::Datum(format!("|B| = {} but there are {} columns", b.len(), d.cols().len())));
    }
    let sub = d.submatrix(b, d.cols())?;
    is_unimodular(&sub.complete_entries()?)
}

/// A failed unitriangularity condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Violation {
    /// d_{λ,Ψ(λ)} ≠ 1.
    Diagonal { row: Label, col: Label, entry: Entry },
    /// d_{λ,M} ≠ 0 although λ > Ψ⁻¹(M).
    AboveDiagonal { row: Label, col: Label, entry: u64 },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::Diagonal { row, col, entry } => match entry {
                Some(e) => write!(f, "d[{row},{col}] = {e}, expected 1"),
                None => write!(f, "d[{row},{col}] unknown, expected 1"),
            },
            Violation::AboveDiagonal { row, col, entry } => {
                write!(f, "d[{row},{col}] = {entry} but {row} is above the preimage of {col}")
            }
        }
    }
}

/// Checks both unitriangularity conditions over every row of `d`.
///
/// With `strict`, unknown entries that matter are errors; otherwise only
/// known entries are judged (an unknown diagonal entry is still reported).
pub fn unitriangular_violations(d: &DecompMatrixModel, datum: &BasicSetDatum, strict: bool) -> Result<Vec<Violation>> {
    let mut out = Vec::new();
    for b in &datum.set {
        let col = datum.psi_of(b).expect("datum checked");
        let e = d.get(b, col)?;
        if e.is_none() && strict {
            return Err(Error::UnknownEntry { row: b.to_string(), col: col.to_string() });
        }
        if e != Some(1) {
            out.push(Violation::Diagonal { row: b.clone(), col: col.clone(), entry: e });
        }
    }
    let preimages: Vec<&Label> = d
        .cols()
        .iter()
        .map(|c| datum.psi_inv(c).ok_or_else(|| Error::Datum(format!("column {c} is not in the image of Ψ"))))
        .collect::<Result<_>>()?;
    let mut all: Vec<Label> = d.rows().to_vec();
    all.extend(preimages.iter().map(|&l| l.clone()));
    let rank = datum.order.ranks(&all)?;
    let col_rank: Vec<usize> = preimages.iter().map(|l| rank[*l]).collect();
    for (r, row) in d.rows().iter().enumerate() {
        let rr = rank[row];
        for (c, col) in d.cols().iter().enumerate() {
            let e = d.entries()[r][c];
            if e == Some(0) || rr <= col_rank[c] {
                continue;
            }
            match e {
                Some(x) => out.push(Violation::AboveDiagonal { row: row.clone(), col: col.clone(), entry: x }),
                None if strict => return Err(Error::UnknownEntry { row: row.to_string(), col: col.to_string() }),
                None => {}
            }
        }
    }
    Ok(out)
}

/// Both conditions hold on a complete model.
pub fn verify_unitriangular_basic_set(d: &DecompMatrixModel, datum: &BasicSetDatum) -> Result<bool> {
    Ok(unitriangular_violations(d, datum, true)?.is_empty())
}

/// Both conditions hold on the known entries, and every diagonal entry is known.
pub fn verify_known_entries(d: &DecompMatrixModel, datum: &BasicSetDatum) -> Result<bool> {
    Ok(unitriangular_violations(d, datum, false)?.is_empty())
}

/// λ ⪯ μ for the order built from `base`.
pub fn prec(l: &Partition, m: &Partition, base: &TotalOrderSpec) -> Result<bool> {
    Ok(TotalOrderSpec::prec(base.clone()).cmp_partitions(l, m)? != Ordering::Greater)
}

/// Θ(λ): λ if m(λ) ≤ λ, m(λ)′ otherwise.
pub fn theta(l: &Partition, p: usize, base: &TotalOrderSpec) -> Result<Partition> {
    let m = mullineux(l, p)?;
    Ok(if base.cmp_partitions(&m, l)? == Ordering::Greater { m.conjugate() } else { l.clone() })
}

/// The basic set B̃ with its order ⪯ and bijection Ψ̃ = Ψ∘Θ⁻¹ onto the
/// p-regular column labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TildeBasicSet {
    pub n: usize,
    pub p: usize,
    pub base: TotalOrderSpec,
    /// {λ p-regular | m(λ) < λ}.
    pub below: Vec<Partition>,
    /// {λ′ | λ ∈ below}.
    pub below_conjugates: Vec<Partition>,
    /// {λ p-regular | m(λ) = λ}.
    pub fixed: Vec<Partition>,
    pub datum: BasicSetDatum,
}

impl TildeBasicSet {
    pub fn members(&self) -> impl Iterator<Item = &Label> {
        self.datum.set.iter()
    }

    pub fn contains(&self, l: &Partition) -> bool {
        self.datum.contains(&Label::plain(l.clone()))
    }

    pub fn psi(&self, l: &Partition) -> Option<Partition> {
        self.datum.psi_of(&Label::plain(l.clone())).map(|c| c.partition.clone())
    }
}

pub fn build_tilde_basic_set(n: usize, p: usize, base: &TotalOrderSpec) -> Result<TildeBasicSet> {
    if p < 2 {
        return Err(Error::BadModulus(p));
    }
    if matches!(base, TotalOrderSpec::Custom(_)) {
        return Err(Error::Datum("B̃ needs a partition order, not a custom list".into()));
    }
    let mut below = Vec::new();
    let mut fixed = Vec::new();
    let mut psi = Vec::new();
    for l in p_regular_partitions_of(n, p) {
        let m = mullineux(&l, p)?;
        match base.cmp_partitions(&m, &l)? {
            Ordering::Less => {
                psi.push((Label::plain(l.clone()), Label::plain(l.clone())));
                // Θ(m(λ)) = λ′, so Ψ̃(λ′) = m(λ)
                psi.push((Label::plain(l.conjugate()), Label::plain(m)));
                below.push(l);
            }
            Ordering::Equal => {
                psi.push((Label::plain(l.clone()), Label::plain(l.clone())));
                fixed.push(l);
            }
            Ordering::Greater => {}
        }
    }
    let below_conjugates: Vec<Partition> = below.iter().map(Partition::conjugate).collect();
    let mut seen = BTreeSet::new();
    for l in below.iter().chain(&below_conjugates).chain(&fixed) {
        if !seen.insert(l.clone()) {
            return Err(Error::Datum(format!("the three parts of B̃ overlap at {l}")));
        }
    }
    let set = psi.iter().map(|(b, _)| b.clone()).collect();
    let datum = BasicSetDatum::new(set, TotalOrderSpec::prec(base.clone()), psi)?;
    Ok(TildeBasicSet { n, p, base: base.clone(), below, below_conjugates, fixed, datum })
}

/// m̃(λ) = λ if λ is Mullineux-fixed, λ′ otherwise.
pub fn tilde_mullineux(l: &Partition, b: &TildeBasicSet) -> Result<Partition> {
    if !b.contains(l) {
        return Err(Error::Precondition(format!("{l} is not in B̃")));
    }
    Ok(if b.fixed.contains(l) { l.clone() } else { l.conjugate() })
}

/// B̃ cut down to the block of a p-core, split into B̃¹ and B̃².
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockTilde {
    pub core: Partition,
    pub p: usize,
    pub n: usize,
    /// B̃¹: non-fixed members and their conjugates.
    pub part1: Vec<Partition>,
    /// B̃²: Mullineux-fixed members.
    pub part2: Vec<Partition>,
    pub datum: BasicSetDatum,
}

/// Members whose column label has p-core γ (equivalently, whose own p-core is γ).
pub fn restrict_to_block(b: &TildeBasicSet, core: &Partition) -> Result<BlockTilde> {
    if !is_p_core(core, b.p) {
        return Err(Error::NotACore { partition: core.clone(), p: b.p });
    }
    let mut psi = Vec::new();
    let mut part1 = Vec::new();
    let mut part2 = Vec::new();
    for (l, c) in &b.datum.psi {
        if p_core(&c.partition, b.p)? != *core {
            continue;
        }
        debug_assert_eq!(p_core(&l.partition, b.p)?, *core);
        psi.push((l.clone(), c.clone()));
        if b.fixed.contains(&l.partition) {
            part2.push(l.partition.clone());
        } else {
            part1.push(l.partition.clone());
        }
    }
    let set = psi.iter().map(|(l, _)| l.clone()).collect();
    let datum = BasicSetDatum::new(set, b.datum.order.clone(), psi)?;
    let key = |v: &mut Vec<Partition>| v.sort_by(|x, y| y.cmp(x));
    key(&mut part1);
    key(&mut part2);
    Ok(BlockTilde { core: core.clone(), p: b.p, n: b.n, part1, part2, datum })
}

/// A failed ρ-swap condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RhoViolation {
    pub mu: Partition,
    pub nu: Partition,
    /// The intermediate λ, or `None` for the d_{ρ(μ),μ} = 1 condition.
    pub lambda: Option<Partition>,
    pub col: Label,
    pub entry: Entry,
}

impl std::fmt::Display for RhoViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let e = self.entry.map_or("?".to_string(), |x| x.to_string());
        match &self.lambda {
            None => write!(f, "mu={} nu={}: d[nu,{}] = {e}, expected 1", self.mu, self.nu, self.col),
            Some(l) => write!(f, "mu={} nu={} lambda={}: d[nu,{}] = {e}, expected 0", self.mu, self.nu, l, self.col),
        }
    }
}

/// Checks, for each μ ∈ B̃², that d_{ρ(μ),Ψ̃(μ)} = 1 and d_{ρ(μ),Ψ̃(λ)} = 0
/// for every λ ∈ B̃_γ with ρ(μ) ≺ λ ≺ μ. Entries come from `d`, whose rows
/// must contain the ρ-images.
pub fn rho_swap_violations(
    block: &BlockTilde,
    rho: &[(Partition, Partition)],
    d: &DecompMatrixModel,
) -> Result<Vec<RhoViolation>> {
    check_rho(block, rho)?;
    let order = &block.datum.order;
    let mut out = Vec::new();
    for (mu, nu) in rho {
        let mu_l = Label::plain(mu.clone());
        let nu_l = Label::plain(nu.clone());
        let col = block.datum.psi_of(&mu_l).expect("checked").clone();
        let e = d.get(&nu_l, &col)?;
        if e != Some(1) {
            out.push(RhoViolation { mu: mu.clone(), nu: nu.clone(), lambda: None, col, entry: e });
        }
        for l in &block.datum.set {
            let between = order.cmp(&nu_l, l)? == Ordering::Less && order.cmp(l, &mu_l)? == Ordering::Less;
            if !between {
                continue;
            }
            let col = block.datum.psi_of(l).expect("checked").clone();
            let e = d.get(&nu_l, &col)?;
            if e != Some(0) {
                out.push(RhoViolation { mu: mu.clone(), nu: nu.clone(), lambda: Some(l.partition.clone()), col, entry: e });
            }
        }
    }
    Ok(out)
}

fn check_rho(block: &BlockTilde, rho: &[(Partition, Partition)]) -> Result<()> {
    let dom: BTreeSet<&Partition> = rho.iter().map(|(m, _)| m).collect();
    let img: BTreeSet<&Partition> = rho.iter().map(|(_, n)| n).collect();
    let want: BTreeSet<&Partition> = block.part2.iter().collect();
    if dom != want || dom.len() != rho.len() {
        return Err(Error::Datum("ρ must be defined exactly on B̃²".into()));
    }
    if img.len() != rho.len() {
        return Err(Error::Datum("ρ is not injective".into()));
    }
    for (_, nu) in rho {
        if !nu.is_self_conjugate() || nu.diagonal_hooks().iter().any(|h| h % block.p == 0) {
            return Err(Error::Datum(format!("ρ-image {nu} is not in the set of self-conjugate partitions with diagonal hooks prime to p")));
        }
        if p_core(nu, block.p)? != block.core {
            return Err(Error::Datum(format!("ρ-image {nu} lies outside the block")));
        }
        if block.part1.contains(nu) {
            return Err(Error::Datum(format!("ρ-image {nu} already lies in B̃¹")));
        }
    }
    Ok(())
}

/// B̃′ = B̃¹ ⊔ ρ(B̃²) with Ψ̃′(ρ(μ)) = Ψ̃(μ), after checking both conditions.
pub fn rho_swap(block: &BlockTilde, rho: &[(Partition, Partition)], d: &DecompMatrixModel) -> Result<BasicSetDatum> {
    let v = rho_swap_violations(block, rho, d)?;
    if !v.is_empty() {
        let msg: Vec<String> = v.iter().map(ToString::to_string).collect();
        return Err(Error::Condition(msg.join("; ")));
    }
    let mut psi = Vec::new();
    for (l, c) in &block.datum.psi {
        match rho.iter().find(|(m, _)| *m == l.partition) {
            Some((_, nu)) => psi.push((Label::plain(nu.clone()), c.clone())),
            None => psi.push((l.clone(), c.clone())),
        }
    }
    let set = psi.iter().map(|(l, _)| l.clone()).collect();
    BasicSetDatum::new(set, block.datum.order.clone(), psi)
}

/// Row and column orders putting a matrix in lower-unitriangular form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

/// Can rows and columns be permuted to give 1s on the diagonal and 0s above?
///
/// Repeatedly picks a row whose only nonzero entry among the remaining
/// columns is a 1, and retires that row and column. Retiring never makes
/// another row ineligible, so the first choice among ties is as good as any
/// and no backtracking is needed.
pub fn is_unitriangularisable(m: &[Vec<u64>]) -> Result<Option<Witness>> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::Matrix("matrix is not square".into()));
    }
    let mut row_done = vec![false; n];
    let mut col_done = vec![false; n];
    let mut w = Witness { rows: Vec::with_capacity(n), cols: Vec::with_capacity(n) };
    for _ in 0..n {
        let pick = (0..n).filter(|&r| !row_done[r]).find_map(|r| {
            let mut nz = (0..n).filter(|&c| !col_done[c] && m[r][c] != 0);
            match (nz.next(), nz.next()) {
                (Some(c), None) if m[r][c] == 1 => Some((r, c)),
                _ => None,
            }
        });
        let Some((r, c)) = pick else { return Ok(None) };
        row_done[r] = true;
        col_done[c] = true;
        w.rows.push(r);
        w.cols.push(c);
    }
    Ok(Some(w))
}

/// Necessary condition: a unitriangularisable n×n matrix has at least
/// n(n−1)/2 zero entries.
pub fn zero_count_condition(m: &[Vec<u64>]) -> bool {
    let n = m.len();
    let zeros = m.iter().flatten().filter(|&&x| x == 0).count();
    zeros >= n * n.saturating_sub(1) / 2
}

/// Whether the witness really is lower unitriangular.
pub fn check_witness(m: &[Vec<u64>], w: &Witness) -> bool {
    let n = m.len();
    w.rows.len() == n
        && w.cols.len() == n
        && (0..n).all(|i| m[w.rows[i]][w.cols[i]] == 1 && (i + 1..n).all(|j| m[w.rows[i]][w.cols[j]] == 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn prec_examples() {
        let lex = TotalOrderSpec::Lex;
        assert!(prec(&part![2, 2, 1], &part![2, 2, 1], &lex).unwrap());
        assert!(prec(&part![1, 1, 1, 1, 1], &part![5], &lex).unwrap());
        assert!(!prec(&part![5], &part![1, 1, 1, 1, 1], &lex).unwrap());
        assert!(prec(&part![3, 1, 1], &part![5], &lex).unwrap());
        assert!(prec(&part![3], &part![2], &lex).is_err());
    }

    #[test]
    fn theta_examples() {
        let lex = TotalOrderSpec::Lex;
        assert_eq!(theta(&part![2, 2, 1], 3, &lex).unwrap(), part![2, 1, 1, 1]);
        assert_eq!(theta(&part![3, 1, 1], 3, &lex).unwrap(), part![3, 1, 1]);
        assert_eq!(theta(&part![3, 2], 3, &lex).unwrap(), part![1, 1, 1, 1, 1]);
        assert_eq!(theta(&part![5], 3, &lex).unwrap(), part![5]);
    }

    #[test]
    fn tilde_n5() {
        let b = build_tilde_basic_set(5, 3, &TotalOrderSpec::Lex).unwrap();
        let got: BTreeSet<_> = b.members().map(|l| l.partition.clone()).collect();
        let want: BTreeSet<_> =
            [part![5], part![1, 1, 1, 1, 1], part![3, 1, 1], part![4, 1], part![2, 1, 1, 1]].into_iter().collect();
        assert_eq!(got, want);
        assert_eq!(tilde_mullineux(&part![3, 1, 1], &b).unwrap(), part![3, 1, 1]);
        assert_eq!(tilde_mullineux(&part![5], &b).unwrap(), part![1, 1, 1, 1, 1]);
        assert_eq!(tilde_mullineux(&part![4, 1], &b).unwrap(), part![2, 1, 1, 1]);
        assert!(tilde_mullineux(&part![3, 2], &b).is_err());
        assert_eq!(b.psi(&part![1, 1, 1, 1, 1]), Some(part![3, 2]));
    }

    #[test]
    fn tilde_trivial() {
        let b = build_tilde_basic_set(0, 3, &TotalOrderSpec::Lex).unwrap();
        assert_eq!(b.datum.set, vec![Label::plain(Partition::empty())]);
    }

    #[test]
    fn unitriangularisable_examples() {
        assert!(is_unitriangularisable(&[vec![1, 1, 0], vec![2, 1, 1], vec![2, 0, 1]]).unwrap().is_none());
        assert!(!zero_count_condition(&[vec![1, 1, 0], vec![2, 1, 1], vec![2, 0, 1]]));
        let id = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
        assert!(check_witness(&id, &is_unitriangularisable(&id).unwrap().unwrap()));
        let m = vec![vec![1, 0], vec![5, 1]];
        assert!(check_witness(&m, &is_unitriangularisable(&m).unwrap().unwrap()));
        assert!(is_unitriangularisable(&[vec![1, 0]]).is_err());
        assert!(is_unitriangularisable(&[]).unwrap().is_some());
    }
}
