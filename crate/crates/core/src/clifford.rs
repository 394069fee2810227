//! The index-two pair (S_n, A_n) at the level of labeled decomposition
//! matrices: blocks, splitting, the sets 𝒯 and 𝒞_γ, split class values,
//! and restriction/induction of unitriangular basic sets.
//!
//! Every entry computed here comes from an explicit Frobenius-reciprocity
//! identity; entries the identities leave open stay unknown.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigUint;
use serde::Serialize;

use crate::basicsets::{build_tilde_basic_set, restrict_to_block, verify_known_entries};
use crate::error::{Error, Result};
use crate::matrix::{BasicSetDatum, DecompMatrixModel, Entry, Label, Sign, TotalOrderSpec};
use crate::mullineux::mullineux;
use crate::partition::{is_p_core, p_core, p_quotient, partitions_of, self_conjugate_partitions_of, Partition};

fn check_odd(p: usize) -> Result<()> {
    match p {
        0 | 1 => Err(Error::BadModulus(p)),
        p if p % 2 == 0 => Err(Error::EvenModulus(p)),
        _ => Ok(()),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BlockDescriptor {
    pub n: usize,
    pub p: usize,
    pub core: Partition,
    pub weight: usize,
    pub self_conjugate_core: bool,
}

impl BlockDescriptor {
    pub fn new(n: usize, p: usize, core: Partition) -> Result<Self> {
        if !is_p_core(&core, p) {
            return Err(Error::NotACore { partition: core, p });
        }
        if core.size() > n || !(n - core.size()).is_multiple_of(p) {
            return Err(Error::Precondition(format!("no block of S_{n} has {p}-core {core}")));
        }
        let self_conjugate_core = core.is_self_conjugate();
        Ok(BlockDescriptor { n, p, weight: (n - core.size()) / p, core, self_conjugate_core })
    }
}

impl fmt::Display for BlockDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S_{} p={} core={} weight={}", self.n, self.p, self.core, self.weight)
    }
}

/// A block with its member partitions, lex-descending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Block {
    pub descriptor: BlockDescriptor,
    pub members: Vec<Partition>,
}

impl Block {
    pub fn regular_members(&self) -> impl Iterator<Item = &Partition> {
        let p = self.descriptor.p;
        self.members.iter().filter(move |l| l.is_p_regular(p))
    }
}

pub fn block_of(l: &Partition, p: usize) -> Result<BlockDescriptor> {
    BlockDescriptor::new(l.size(), p, p_core(l, p)?)
}

/// All p-blocks of S_n, grouped by p-core.
pub fn blocks(n: usize, p: usize) -> Result<Vec<Block>> {
    if p < 2 {
        return Err(Error::BadModulus(p));
    }
    let mut by_core: BTreeMap<Partition, Vec<Partition>> = BTreeMap::new();
    for l in partitions_of(n) {
        by_core.entry(p_core(&l, p)?).or_default().push(l);
    }
    by_core
        .into_iter()
        .map(|(core, members)| Ok(Block { descriptor: BlockDescriptor::new(n, p, core)?, members }))
        .collect()
}

/// The block with the given core.
pub fn block(n: usize, p: usize, core: &Partition) -> Result<Block> {
    let descriptor = BlockDescriptor::new(n, p, core.clone())?;
    let members = partitions_of(n).filter(|l| p_core(l, p).is_ok_and(|c| c == *core)).collect();
    Ok(Block { descriptor, members })
}

/// Tensoring with the sign character sends the block of γ to that of γ′.
pub fn epsilon_on_block(b: &BlockDescriptor) -> BlockDescriptor {
    BlockDescriptor { core: b.core.conjugate(), ..b.clone() }
}

/// λ ∈ 𝒯: self-conjugate with no diagonal hook divisible by p.
pub fn in_t(l: &Partition, p: usize) -> bool {
    l.is_self_conjugate() && l.diagonal_hooks().iter().all(|h| h % p != 0)
}

/// The same test read off the p-quotient: λ self-conjugate and the middle
/// quotient component empty.
pub fn in_t_by_quotient(l: &Partition, p: usize) -> Result<bool> {
    check_odd(p)?;
    if !l.is_self_conjugate() {
        return Ok(false);
    }
    let q = p_quotient(l, p)?;
    Ok(q.components[(p - 1) / 2].is_empty())
}

/// 𝒢_γ: members of the block of γ lying in 𝒯.
pub fn g_gamma(core: &Partition, n: usize, p: usize) -> Result<Vec<Partition>> {
    check_odd(p)?;
    if !is_p_core(core, p) {
        return Err(Error::NotACore { partition: core.clone(), p });
    }
    let mut out = Vec::new();
    for l in self_conjugate_partitions_of(n) {
        if in_t(&l, p) && p_core(&l, p)? == *core {
            out.push(l);
        }
    }
    Ok(out)
}

/// 𝒞_γ: the labels of the non-σ-stable characters of an A_n basic set in
/// the block of γ. As a set of partitions this is 𝒢_γ.
pub fn c_gamma(core: &Partition, n: usize, p: usize) -> Result<Vec<Partition>> {
    g_gamma(core, n, p)
}

/// Value of a split character on a split class: x ± y with
/// x = ½(−1)^{(n−k)/2} and y = ½√((−1)^{(n−k)/2} d₁⋯d_k), kept symbolic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitClassValue {
    /// x = x_sign / 2.
    pub x_sign: i8,
    /// Sign in front of y.
    pub y_sign: i8,
    /// y is imaginary (the radicand is negative).
    pub imaginary: bool,
    /// d₁⋯d_k.
    pub radicand: BigUint,
}

impl fmt::Display for SplitClassValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let x = if self.x_sign < 0 { "-1/2" } else { "1/2" };
        let op = if self.y_sign < 0 { "-" } else { "+" };
        let r = if self.imaginary { format!("-{}", self.radicand) } else { self.radicand.to_string() };
        write!(f, "{x} {op} 1/2*sqrt({r})")
    }
}

/// Values of ρ_λ^+ and ρ_λ^- on the classes t₊ and t₋ of cycle type λ̄.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitCharacterValues {
    pub diagonal_hooks: Vec<usize>,
    pub plus_on_plus: SplitClassValue,
    pub plus_on_minus: SplitClassValue,
    pub minus_on_plus: SplitClassValue,
    pub minus_on_minus: SplitClassValue,
}

impl SplitCharacterValues {
    /// ρ⁺ + ρ⁻ on either split class: 2x, an integer ±1.
    pub fn sum_on_class(&self) -> i8 {
        self.plus_on_plus.x_sign
    }
}

pub fn split_class_values(l: &Partition) -> Result<SplitCharacterValues> {
    if !l.is_self_conjugate() {
        return Err(Error::NotSelfConjugate(l.clone()));
    }
    let hooks = l.diagonal_hooks();
    let k = hooks.len();
    let n = l.size();
    let odd = ((n - k) / 2) % 2 == 1;
    let x_sign = if odd { -1 } else { 1 };
    let radicand: BigUint = hooks.iter().map(|&h| BigUint::from(h)).product();
    let v = |y_sign| SplitClassValue { x_sign, y_sign, imaginary: odd, radicand: radicand.clone() };
    Ok(SplitCharacterValues {
        diagonal_hooks: hooks,
        plus_on_plus: v(1),
        plus_on_minus: v(-1),
        minus_on_plus: v(-1),
        minus_on_minus: v(1),
    })
}

/// Lex-larger of λ and λ′: the label of the restriction of either.
pub fn canonical_row(l: &Partition) -> Partition {
    let c = l.conjugate();
    if c > *l { c } else { l.clone() }
}

/// Lex-larger of μ and m(μ): the label of the restriction of either.
pub fn canonical_col(m: &Partition, p: usize) -> Result<Partition> {
    let mm = mullineux(m, p)?;
    Ok(if mm > *m { mm } else { m.clone() })
}

/// Row and column labels of the A_n block(s) covered by an S_n block.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnBlock {
    pub rows: Vec<Label>,
    pub cols: Vec<Label>,
    pub defect_zero: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnShape {
    pub descriptor: BlockDescriptor,
    /// Core of the other S_n block fused into the same A_n block, if any.
    pub fused_with: Option<Partition>,
    pub blocks: Vec<AnBlock>,
}

pub fn an_shape(b: &BlockDescriptor) -> Result<AnShape> {
    check_odd(b.p)?;
    let p = b.p;
    let sn = block(b.n, p, &b.core)?;
    if b.weight == 0 && b.self_conjugate_core {
        let c = b.core.clone();
        let one = |s| AnBlock { rows: vec![Label::signed(c.clone(), s)], cols: vec![Label::signed(c.clone(), s)], defect_zero: true };
        return Ok(AnShape { descriptor: b.clone(), fused_with: None, blocks: vec![one(Sign::Plus), one(Sign::Minus)] });
    }
    let mut rows = Vec::new();
    let mut seen = BTreeSet::new();
    for l in &sn.members {
        if l.is_self_conjugate() {
            rows.push(Label::signed(l.clone(), Sign::Plus));
            rows.push(Label::signed(l.clone(), Sign::Minus));
        } else if seen.insert(canonical_row(l)) {
            rows.push(Label::plain(canonical_row(l)));
        }
    }
    let mut cols = Vec::new();
    let mut seen = BTreeSet::new();
    for m in sn.regular_members() {
        if mullineux(m, p)? == *m {
            cols.push(Label::signed(m.clone(), Sign::Plus));
            cols.push(Label::signed(m.clone(), Sign::Minus));
        } else {
            let c = canonical_col(m, p)?;
            if seen.insert(c.clone()) {
                cols.push(Label::plain(c));
            }
        }
    }
    let fused_with = (!b.self_conjugate_core).then(|| b.core.conjugate());
    Ok(AnShape { descriptor: b.clone(), fused_with, blocks: vec![AnBlock { rows, cols, defect_zero: false }] })
}

/// Number of Brauer characters of the restriction of a block with ε-stable
/// basic set `b`: (|B| − f)/2 + 2f, f = number of self-conjugate labels.
pub fn count_ibr_an(b: &[Partition]) -> Result<usize> {
    let set: BTreeSet<&Partition> = b.iter().collect();
    let mut conj = BTreeSet::new();
    for l in &set {
        let c = l.conjugate();
        if !set.contains(&c) {
            return Err(Error::Precondition(format!("set is not closed under conjugation: {l} without {c}")));
        }
        conj.insert(c);
    }
    let f = set.iter().filter(|l| l.is_self_conjugate()).count();
    Ok((set.len() - f) / 2 + 2 * f)
}

fn add(a: Entry, b: Entry) -> Entry {
    Some(a? + b?)
}

/// One position of the restricted or induced datum: either a pair of
/// characters swapped by the twist, or a single split/fixed one.
#[derive(Debug, Clone)]
enum Item {
    /// S_n side: {χ, εχ} with χ the smaller in the order.
    Pair { rep: Label, other: Label },
    Stable(Label),
}

/// Result of restricting an S_n basic set to A_n.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnRestriction {
    /// Rows and columns listed from the largest basic-set element down,
    /// so the matrix reads lower unitriangular.
    pub model: DecompMatrixModel,
    pub datum: BasicSetDatum,
}

fn order_ranks(datum: &BasicSetDatum) -> HashMap<Label, usize> {
    datum.set.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect()
}

/// Restricts an ε-stable unitriangular basic set with ε-equivariant Ψ to
/// A_n, filling every entry the restriction identities determine.
pub fn restrict_basic_set_to_an(d: &DecompMatrixModel, datum: &BasicSetDatum) -> Result<AnRestriction> {
    let p = d.p;
    check_odd(p)?;
    let rank = order_ranks(datum);
    let members: BTreeSet<&Label> = datum.set.iter().collect();
    for b in &datum.set {
        if b.is_split() {
            return Err(Error::Precondition(format!("S_n label {b} carries a sign")));
        }
        let c = Label::plain(b.partition.conjugate());
        if !members.contains(&c) {
            return Err(Error::Precondition(format!("B is not ε-stable: {b} without {c}")));
        }
        let psi_b = datum.psi_of(b).expect("datum checked");
        let want = Label::plain(mullineux(&psi_b.partition, p)?);
        if datum.psi_of(&c) != Some(&want) {
            return Err(Error::Precondition(format!("Ψ is not ε-equivariant at {b}: Ψ({c}) should be {want}")));
        }
        if b.partition.is_self_conjugate() && !in_t(&b.partition, p) {
            return Err(Error::Precondition(format!("ε-stable {b} is not in 𝒯")));
        }
    }
    let cols: BTreeSet<&Label> = d.cols().iter().collect();
    let images: BTreeSet<Label> = datum.columns().into_iter().collect();
    if cols != images.iter().collect() {
        return Err(Error::Precondition("columns of the matrix are not Ψ(B)".into()));
    }

    let mut items: Vec<Item> = Vec::new();
    let mut done = BTreeSet::new();
    for b in &datum.set {
        if b.partition.is_self_conjugate() {
            items.push(Item::Stable(b.clone()));
        } else if done.insert(b.partition.clone()) {
            let other = Label::plain(b.partition.conjugate());
            done.insert(other.partition.clone());
            items.push(Item::Pair { rep: b.clone(), other });
        }
    }

    // A_n labels per item, ascending: (−, +) for split ones.
    let mut row_groups: Vec<Vec<Label>> = Vec::new();
    let mut col_groups: Vec<Vec<Label>> = Vec::new();
    for it in &items {
        match it {
            Item::Pair { rep, .. } => {
                let col = datum.psi_of(rep).expect("checked");
                row_groups.push(vec![Label::plain(canonical_row(&rep.partition))]);
                col_groups.push(vec![Label::plain(canonical_col(&col.partition, p)?)]);
            }
            Item::Stable(l) => {
                let col = datum.psi_of(l).expect("checked");
                if mullineux(&col.partition, p)? != col.partition {
                    return Err(Error::Precondition(format!("Ψ({l}) = {col} is not Mullineux-fixed")));
                }
                let s = |x: &Partition, sg| Label::signed(x.clone(), sg);
                row_groups.push(vec![s(&l.partition, Sign::Minus), s(&l.partition, Sign::Plus)]);
                col_groups.push(vec![s(&col.partition, Sign::Minus), s(&col.partition, Sign::Plus)]);
            }
        }
    }

    let k = items.len();
    let mut blocks: Vec<Vec<Vec<Vec<Entry>>>> = Vec::with_capacity(k);
    for (a, ia) in items.iter().enumerate() {
        let mut line = Vec::with_capacity(k);
        for (b, ib) in items.iter().enumerate() {
            let theta_b = match ib {
                Item::Pair { rep, .. } | Item::Stable(rep) => datum.psi_of(rep).expect("checked"),
            };
            let row_sum = match ia {
                Item::Pair { rep, other } => add(d.get(rep, theta_b)?, d.get(other, theta_b)?),
                Item::Stable(l) => d.get(l, theta_b)?,
            };
            let cell = restricted_cell(ia, ib, a == b, row_sum)?;
            // Rows strictly above the column's preimage vanish.
            let above = match ia {
                Item::Pair { rep, .. } | Item::Stable(rep) => {
                    let rb = match ib {
                        Item::Pair { rep, .. } | Item::Stable(rep) => rep,
                    };
                    rank[rep] > rank[rb]
                }
            };
            line.push(force_zero(cell, above, &row_groups[a], &col_groups[b])?);
        }
        blocks.push(line);
    }

    let (model, datum_an) = assemble(p, d.n, d.core.clone(), &row_groups, &col_groups, &blocks)?;
    Ok(AnRestriction { model, datum: datum_an })
}

fn restricted_cell(ia: &Item, ib: &Item, diag: bool, s: Entry) -> Result<Vec<Vec<Entry>>> {
    Ok(match (ia, ib) {
        (Item::Pair { .. }, Item::Pair { .. }) => vec![vec![s]],
        (Item::Pair { .. }, Item::Stable(_)) => {
            // σ fixes the row and swaps φ⁺, φ⁻: both entries are s/2
            let half = match s {
                Some(x) if x % 2 == 1 => {
                    return Err(Error::Precondition("odd sum against a split column".into()));
                }
                x => x.map(|x| x / 2),
            };
            vec![vec![half, half]]
        }
        (Item::Stable(_), Item::Pair { .. }) => vec![vec![s], vec![s]],
        (Item::Stable(_), Item::Stable(_)) if diag => {
            if s.is_some_and(|x| x != 1) {
                return Err(Error::Precondition(format!("diagonal entry {s:?} ≠ 1")));
            }
            vec![vec![Some(1), Some(0)], vec![Some(0), Some(1)]]
        }
        (Item::Stable(_), Item::Stable(_)) => {
            let e = if s == Some(0) { Some(0) } else { None };
            vec![vec![e, e], vec![e, e]]
        }
    })
}

/// Applies a vanishing region: unknowns become 0, known nonzeros are a
/// contradiction in the input.
fn force_zero(mut cell: Vec<Vec<Entry>>, zero: bool, rows: &[Label], cols: &[Label]) -> Result<Vec<Vec<Entry>>> {
    if !zero {
        return Ok(cell);
    }
    for (i, line) in cell.iter_mut().enumerate() {
        for (j, e) in line.iter_mut().enumerate() {
            if let Some(x) = *e {
                if x != 0 {
                    return Err(Error::Precondition(format!(
                        "input is not unitriangular: entry {x} at ({}, {}) must vanish",
                        rows[i], cols[j]
                    )));
                }
            }
            *e = Some(0);
        }
    }
    Ok(cell)
}

/// Lays out item blocks largest-first and builds the ascending datum.
fn assemble(
    p: usize,
    n: usize,
    core: Option<Partition>,
    row_groups: &[Vec<Label>],
    col_groups: &[Vec<Label>],
    blocks: &[Vec<Vec<Vec<Entry>>>],
) -> Result<(DecompMatrixModel, BasicSetDatum)> {
    let asc_rows: Vec<Label> = row_groups.iter().flatten().cloned().collect();
    let psi: Vec<(Label, Label)> = row_groups
        .iter()
        .zip(col_groups)
        .flat_map(|(r, c)| r.iter().cloned().zip(c.iter().cloned()))
        .collect();
    let k = row_groups.len();
    let mut rows = Vec::new();
    let mut entries = Vec::new();
    for a in (0..k).rev() {
        for i in (0..row_groups[a].len()).rev() {
            rows.push(row_groups[a][i].clone());
            let mut line = Vec::new();
            for b in (0..k).rev() {
                for j in (0..col_groups[b].len()).rev() {
                    line.push(blocks[a][b][i][j]);
                }
            }
            entries.push(line);
        }
    }
    let cols: Vec<Label> = (0..k).rev().flat_map(|b| col_groups[b].iter().rev().cloned()).collect();
    let mut model = DecompMatrixModel::new(p, n, rows, cols, entries)?;
    model.core = core;
    let datum = BasicSetDatum::new(asc_rows.clone(), TotalOrderSpec::Custom(asc_rows), psi)?;
    Ok((model, datum))
}

/// Result of inducing an A_n basic set to S_n.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SnInduction {
    pub model: DecompMatrixModel,
    pub datum: BasicSetDatum,
    /// For each twisted pair, the row and column declared "+": the pairing
    /// of {λ, λ′} with {μ, m(μ)} is a labeling choice, not a computed fact.
    pub pairing: Vec<(Partition, Partition)>,
    /// Labels removed from b before inducing (the E(φ)* characters).
    pub dropped: Vec<Label>,
}

/// Induces a unitriangular basic set of an A_n block to the covering S_n
/// block(s). `d` holds the A_n entries on rows ⊇ b and all columns.
pub fn induce_basic_set_to_sn(d: &DecompMatrixModel, datum: &BasicSetDatum) -> Result<SnInduction> {
    let p = d.p;
    check_odd(p)?;
    for c in datum.columns() {
        if d.col_of(&c).is_none() {
            return Err(Error::Precondition(format!("column {c} missing from the matrix")));
        }
    }
    let rank = order_ranks(datum);
    // E(φ)* for each split column pair: the smaller preimage
    let mut dropped = Vec::new();
    let split: BTreeSet<Partition> = datum.columns().iter().filter(|c| c.is_split()).map(|c| c.partition.clone()).collect();
    for mu in &split {
        let pre = |s| {
            datum
                .psi_inv(&Label::signed(mu.clone(), s))
                .cloned()
                .ok_or_else(|| Error::Precondition(format!("split column {mu} lacks a constituent")))
        };
        let (a, b) = (pre(Sign::Plus)?, pre(Sign::Minus)?);
        dropped.push(if rank[&a] < rank[&b] { a } else { b });
    }
    let kept: Vec<Label> = datum.set.iter().filter(|l| !dropped.contains(l)).cloned().collect();

    let mut row_groups = Vec::new();
    let mut col_groups = Vec::new();
    let mut pairing = Vec::new();
    for psi_row in &kept {
        let col = datum.psi_of(psi_row).expect("checked");
        if psi_row.is_split() != col.is_split() {
            return Err(Error::Precondition(format!(
                "{psi_row} and Ψ({psi_row}) = {col} disagree on σ-stability"
            )));
        }
        if psi_row.is_split() {
            if !psi_row.partition.is_self_conjugate() {
                return Err(Error::Precondition(format!("split row {psi_row} is not self-conjugate")));
            }
            row_groups.push(vec![Label::plain(psi_row.partition.clone())]);
            col_groups.push(vec![Label::plain(col.partition.clone())]);
        } else {
            let l = psi_row.partition.clone();
            let mu = col.partition.clone();
            let (lc, mm) = (l.conjugate(), mullineux(&mu, p)?);
            if lc == l || mm == mu {
                return Err(Error::Precondition(format!("unsplit label {psi_row} or {col} is fixed by the twist")));
            }
            pairing.push((l.clone(), mu.clone()));
            row_groups.push(vec![Label::plain(lc), Label::plain(l)]);
            col_groups.push(vec![Label::plain(mm), Label::plain(mu)]);
        }
    }

    let da = |r: &Label, c: &Label| d.get(r, c);
    let k = kept.len();
    let mut blocks = Vec::with_capacity(k);
    for a in 0..k {
        let ra = &kept[a];
        let mut line = Vec::with_capacity(k);
        for b in 0..k {
            let cb = datum.psi_of(&kept[b]).expect("checked");
            let cell = if a == b {
                if ra.is_split() {
                    vec![vec![Some(1)]]
                } else {
                    vec![vec![Some(1), Some(0)], vec![Some(0), Some(1)]]
                }
            } else {
                match (ra.is_split(), cb.is_split()) {
                    (false, false) => {
                        let s = da(ra, cb)?;
                        let e = if s == Some(0) { Some(0) } else { None };
                        vec![vec![e, e], vec![e, e]]
                    }
                    (false, true) => {
                        let s = add(da(ra, cb)?, da(ra, &cb.sigma())?);
                        vec![vec![s], vec![s]]
                    }
                    (true, false) => vec![vec![da(ra, cb)?, da(ra, cb)?]],
                    (true, true) => vec![vec![add(da(ra, cb)?, da(ra, &cb.sigma())?)]],
                }
            };
            line.push(force_zero(cell, a != b && a > b, &row_groups[a], &col_groups[b])?);
        }
        blocks.push(line);
    }
    let (model, datum_sn) = assemble(p, d.n, d.core.clone(), &row_groups, &col_groups, &blocks)?;
    Ok(SnInduction { model, datum: datum_sn, pairing, dropped })
}

/// Checks that the split rows of an A_n basic set are labeled by 𝒞_γ and
/// that each λ ∈ 𝒞_γ labels some row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabelReport {
    pub ok: bool,
    pub split_outside: Vec<Partition>,
    pub missing: Vec<Partition>,
}

pub fn validate_an_basic_set_labels(rows: &[Label], core: &Partition, n: usize, p: usize) -> Result<LabelReport> {
    let b = BlockDescriptor::new(n, p, core.clone())?;
    if b.weight == 0 || !b.self_conjugate_core {
        return Err(Error::Precondition("needs positive weight and a self-conjugate core".into()));
    }
    let c: BTreeSet<Partition> = c_gamma(core, n, p)?.into_iter().collect();
    let split: BTreeSet<Partition> = rows.iter().filter(|l| l.is_split()).map(|l| l.partition.clone()).collect();
    let labeled: BTreeSet<Partition> = rows.iter().map(|l| l.partition.clone()).collect();
    let split_outside: Vec<Partition> = split.difference(&c).cloned().collect();
    let missing: Vec<Partition> = c.difference(&labeled).cloned().collect();
    Ok(LabelReport { ok: split_outside.is_empty() && missing.is_empty(), split_outside, missing })
}

/// The S_n block datum B̃_γ with an entry model carrying only what the
/// datum forces: 1 on the diagonal, 0 where a row lies above the preimage
/// of the column, unknown elsewhere.
pub fn structural_model(datum: &BasicSetDatum, p: usize, n: usize, cols: &[Label]) -> Result<DecompMatrixModel> {
    let rank = order_ranks(datum);
    let mut entries = Vec::with_capacity(datum.set.len());
    for r in &datum.set {
        let line = cols
            .iter()
            .map(|c| {
                let pre = datum.psi_inv(c).ok_or_else(|| Error::Datum(format!("{c} not in Ψ(B)")))?;
                Ok(if pre == r {
                    Some(1)
                } else if rank[r] > rank[pre] {
                    Some(0)
                } else {
                    None
                })
            })
            .collect::<Result<Vec<_>>>()?;
        entries.push(line);
    }
    DecompMatrixModel::new(p, n, datum.set.clone(), cols.to_vec(), entries)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OddWeightResult {
    pub descriptor: BlockDescriptor,
    pub sn_model: DecompMatrixModel,
    pub sn_datum: BasicSetDatum,
    pub an: AnRestriction,
}

/// Unitriangular basic set of the A_n block covered by an ε-stable S_n
/// block of odd weight: the restriction of B̃_γ.
pub fn odd_weight_basic_set(b: &BlockDescriptor, base: &TotalOrderSpec) -> Result<OddWeightResult> {
    check_odd(b.p)?;
    if b.weight.is_multiple_of(2) {
        return Err(Error::Precondition(format!("weight {} is even", b.weight)));
    }
    if !b.self_conjugate_core {
        return Err(Error::Precondition("core is not self-conjugate; the A_n block is covered by two S_n blocks".into()));
    }
    let c = c_gamma(&b.core, b.n, b.p)?;
    if !c.is_empty() {
        return Err(Error::Precondition(format!("𝒞_γ should be empty for odd weight, found {}", c[0])));
    }
    let tilde = build_tilde_basic_set(b.n, b.p, base)?;
    let bt = restrict_to_block(&tilde, &b.core)?;
    if !bt.part2.is_empty() {
        return Err(Error::Precondition(format!("Mullineux-fixed label {} in an odd-weight block", bt.part2[0])));
    }
    // the datum's index order already follows ⪯
    let cols: Vec<Label> = bt.datum.columns();
    let sn_model = structural_model(&bt.datum, b.p, b.n, &cols)?.with_core(b.core.clone());
    let an = restrict_basic_set_to_an(&sn_model, &bt.datum)?;
    if !verify_known_entries(&an.model, &an.datum)? {
        return Err(Error::Condition("restricted datum fails unitriangularity on known entries".into()));
    }
    Ok(OddWeightResult { descriptor: b.clone(), sn_model, sn_datum: bt.datum, an })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn blocks_and_weights() {
        let b = block_of(&part![3, 2, 1], 3).unwrap();
        assert_eq!(b.core, Partition::empty());
        assert_eq!(b.weight, 2);
        let all = blocks(18, 3).unwrap();
        let principal = all.iter().find(|b| b.descriptor.core.is_empty()).unwrap();
        assert_eq!(principal.descriptor.weight, 6);
        for b in blocks(7, 3).unwrap() {
            if b.descriptor.weight == 0 {
                assert_eq!(b.members, vec![b.descriptor.core.clone()]);
            }
        }
        let total: usize = blocks(10, 3).unwrap().iter().map(|b| b.members.len()).sum();
        assert_eq!(total, 42);
    }

    #[test]
    fn epsilon() {
        let d = BlockDescriptor::new(5, 3, part![2]).unwrap();
        assert_eq!(epsilon_on_block(&d).core, part![1, 1]);
        let d = BlockDescriptor::new(23, 3, part![3, 1, 1]).unwrap();
        assert_eq!(epsilon_on_block(&d), d);
        assert!(BlockDescriptor::new(5, 3, part![3]).is_err());
    }

    #[test]
    fn t_membership() {
        assert!(in_t(&part![3, 2, 1], 3));
        assert!(!in_t(&part![2, 1], 3));
        assert!(!in_t(&part![4, 1], 3));
        assert_eq!(
            c_gamma(&Partition::empty(), 18, 3).unwrap(),
            vec![part![9, 2, 1, 1, 1, 1, 1, 1, 1], part![7, 4, 2, 2, 1, 1, 1], part![6, 5, 2, 2, 2, 1]]
        );
        assert_eq!(
            c_gamma(&part![1], 19, 3).unwrap(),
            vec![part![10, 1, 1, 1, 1, 1, 1, 1, 1, 1], part![7, 4, 3, 2, 1, 1, 1], part![6, 5, 3, 2, 2, 1]]
        );
    }

    #[test]
    fn split_values() {
        let v = split_class_values(&part![2, 1]).unwrap();
        assert_eq!(v.diagonal_hooks, vec![3]);
        assert_eq!(v.plus_on_plus.x_sign, -1);
        assert!(v.plus_on_plus.imaginary);
        assert_eq!(v.plus_on_plus.radicand, BigUint::from(3u8));
        let v = split_class_values(&part![3, 2, 1]).unwrap();
        assert_eq!(v.plus_on_plus.x_sign, 1);
        assert!(!v.plus_on_plus.imaginary);
        assert_eq!(v.plus_on_plus.radicand, BigUint::from(5u8));
        assert_eq!(v.plus_on_plus.to_string(), "1/2 + 1/2*sqrt(5)");
        assert_eq!(v.minus_on_plus.y_sign, -1);
        assert!(split_class_values(&part![2]).is_err());
    }

    #[test]
    fn counting() {
        let b = [part![6], part![1, 1, 1, 1, 1, 1], part![5, 1], part![2, 1, 1, 1, 1], part![3, 2, 1]];
        assert_eq!(count_ibr_an(&b).unwrap(), 4);
        assert_eq!(count_ibr_an(&[part![2, 1]]).unwrap(), 2);
        assert_eq!(count_ibr_an(&[part![3], part![1, 1, 1]]).unwrap(), 1);
        assert!(count_ibr_an(&[part![3]]).is_err());
    }

    #[test]
    fn shapes() {
        let d = BlockDescriptor::new(6, 3, Partition::empty()).unwrap();
        let s = an_shape(&d).unwrap();
        assert_eq!(s.blocks[0].cols.len(), 4);
        let d = BlockDescriptor::new(5, 3, part![2]).unwrap();
        let s = an_shape(&d).unwrap();
        assert_eq!(s.fused_with, Some(part![1, 1]));
        assert_eq!(s.blocks[0].cols.len(), block(5, 3, &part![2]).unwrap().regular_members().count());
        let d = BlockDescriptor::new(3, 5, part![2, 1]).unwrap();
        let s = an_shape(&d).unwrap();
        assert_eq!(s.blocks.len(), 2);
        assert!(s.blocks.iter().all(|b| b.defect_zero));
    }
}
