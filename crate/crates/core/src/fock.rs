//! Level-1 Fock space over ℤ[v]: lowering operators F_i and their divided
//! powers, operator words, and decomposition columns.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mullineux::residue;
use crate::partition::Partition;
use crate::poly::VPolynomial;

/// Which nodes the v-exponent of F_i counts, relative to the added node.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Above,
    Below,
}

/// The exponent is `sign · (#addable − #removable i-nodes on `side`)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Convention {
    pub side: Side,
    pub sign: i32,
    /// Divide by the balanced factorial Π (v^{k}−v^{−k})/(v−v^{−1}) instead of [a]_v!.
    pub balanced: bool,
}

impl Convention {
    /// Addable minus removable i-nodes above the added node, balanced factorial.
    /// The only variant reproducing the published A(10,4,4,1) coefficients.
    pub const STANDARD: Convention = Convention { side: Side::Above, sign: 1, balanced: true };

    pub fn all() -> Vec<Convention> {
        let mut v = Vec::new();
        for side in [Side::Above, Side::Below] {
            for sign in [1, -1] {
                for balanced in [true, false] {
                    v.push(Convention { side, sign, balanced });
                }
            }
        }
        v
    }
}

/// Sparse vector Σ c_λ(v) λ over partitions of a fixed size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FockVector {
    pub n: usize,
    pub p: usize,
    terms: BTreeMap<Partition, VPolynomial>,
}

impl FockVector {
    pub fn vacuum(p: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Partition::empty(), VPolynomial::one());
        FockVector { n: 0, p, terms }
    }

    pub fn zero(n: usize, p: usize) -> Self {
        FockVector { n, p, terms: BTreeMap::new() }
    }

    pub fn basis(l: Partition, p: usize) -> Self {
        let n = l.size();
        let mut terms = BTreeMap::new();
        terms.insert(l, VPolynomial::one());
        FockVector { n, p, terms }
    }

    pub fn add_term(&mut self, l: Partition, c: &VPolynomial) -> Result<()> {
        if l.size() != self.n {
            return Err(Error::Precondition(format!("{l} is not a partition of {}", self.n)));
        }
        let slot = self.terms.entry(l.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&l);
        }
        Ok(())
    }

    pub fn coeff(&self, l: &Partition) -> VPolynomial {
        self.terms.get(l).cloned().unwrap_or_default()
    }

    /// Terms in lex-descending order of partitions.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &VPolynomial)> {
        self.terms.iter().rev()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn map_coeffs(&self, f: impl Fn(&VPolynomial) -> Option<VPolynomial>) -> Option<FockVector> {
        let mut terms = BTreeMap::new();
        for (l, c) in &self.terms {
            terms.insert(l.clone(), f(c)?);
        }
        Some(FockVector { n: self.n, p: self.p, terms })
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &VPolynomial) -> FockVector {
        let mut out = FockVector::zero(self.n, self.p);
        for (l, x) in &self.terms {
            let y = x * c;
            if !y.is_zero() {
                out.terms.insert(l.clone(), y);
            }
        }
        out
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    partition: Partition,
    poly: VPolynomial,
}

#[derive(Serialize, Deserialize)]
struct FockJson {
    n: usize,
    p: usize,
    terms: Vec<TermJson>,
}

impl Serialize for FockVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FockJson {
            n: self.n,
            p: self.p,
            terms: self
                .terms()
                .map(|(l, c)| TermJson { partition: l.clone(), poly: c.clone() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FockVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = FockJson::deserialize(d)?;
        let mut v = FockVector::zero(j.n, j.p);
        for t in j.terms {
            v.add_term(t.partition, &t.poly).map_err(D::Error::custom)?;
        }
        Ok(v)
    }
}

/// v-exponent of adding the i-node in row `row` of `l`.
fn exponent(l: &Partition, row: usize, i: usize, p: usize, conv: Convention) -> i32 {
    let on_side = |r: usize| match conv.side {
        Side::Above => r < row,
        Side::Below => r > row,
    };
    let add = l
        .addable()
        .into_iter()
        .filter(|&(r, c)| on_side(r) && residue(r, c, p) == i)
        .count() as i32;
    let rem = l
        .removable()
        .into_iter()
        .filter(|&(r, c)| on_side(r) && residue(r, c, p) == i)
        .count() as i32;
    conv.sign * (add - rem)
}

pub fn apply_f_with(i: usize, x: &FockVector, conv: Convention) -> FockVector {
    let p = x.p;
    let mut out = FockVector::zero(x.n + 1, p);
    for (l, c) in &x.terms {
        for (r, col) in l.addable() {
            if residue(r, col, p) != i {
                continue;
            }
            let e = exponent(l, r, i, p, conv);
            let mu = l.with_added(r);
            let slot = out.terms.entry(mu.clone()).or_default();
            *slot += &c.shift(e);
            if slot.is_zero() {
                out.terms.remove(&mu);
            }
        }
    }
    out
}

/// F_i · x.
pub fn apply_f(i: usize, x: &FockVector) -> FockVector {
    apply_f_with(i, x, Convention::STANDARD)
}

/// The factorial the divided power divides by under `conv`.
pub fn divided_power_factorial(a: u32, conv: Convention) -> VPolynomial {
    if conv.balanced {
        VPolynomial::balanced_factorial(a)
    } else {
        VPolynomial::gaussian_factorial(a)
    }
}

/// Like [`apply_f_divided`], but `None` when the division is inexact.
pub fn try_apply_f_divided_with(i: usize, a: u32, x: &FockVector, conv: Convention) -> Option<FockVector> {
    let mut y = x.clone();
    for _ in 0..a {
        y = apply_f_with(i, &y, conv);
    }
    let d = divided_power_factorial(a, conv);
    y.map_coeffs(|c| c.div_exact(&d))
}

pub fn apply_f_divided_with(i: usize, a: u32, x: &FockVector, conv: Convention) -> FockVector {
    try_apply_f_divided_with(i, a, x, conv)
        .unwrap_or_else(|| panic!("F_{i}^{a} not divisible by [{a}]!: operator convention bug"))
}

/// F_i^{(a)} · x = F_i^a · x / [a]!.
///
/// Panics if the division is inexact, which can only mean an internal bug.
pub fn apply_f_divided(i: usize, a: u32, x: &FockVector) -> FockVector {
    apply_f_divided_with(i, a, x, Convention::STANDARD)
}

/// A product F_{i_1}^{(a_1)} ⋯ F_{i_k}^{(a_k)}, stored left to right as printed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OperatorWord {
    pub p: usize,
    pub letters: Vec<(usize, u32)>,
}

impl OperatorWord {
    pub fn new(p: usize, letters: Vec<(usize, u32)>) -> Result<Self> {
        if p < 2 {
            return Err(Error::BadModulus(p));
        }
        for &(i, a) in &letters {
            if i >= p || a == 0 {
                return Err(Error::Word(format!("bad letter {i}:{a} for p={p}")));
            }
        }
        Ok(OperatorWord { p, letters })
    }

    /// Parses "i:a,i:a,…" (left to right as printed); a bare "i" means power 1.
    pub fn parse(p: usize, s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (i, a) = match tok.split_once(':') {
                Some((i, a)) => (i.trim(), a.trim()),
                None => (tok, "1"),
            };
            let i = i.parse().map_err(|_| Error::Word(format!("bad residue in {tok:?}")))?;
            let a = a.parse().map_err(|_| Error::Word(format!("bad power in {tok:?}")))?;
            letters.push((i, a));
        }
        OperatorWord::new(p, letters)
    }

    /// Residue sequence in application order (rightmost letter first).
    pub fn eta(&self) -> Vec<usize> {
        self.letters
            .iter()
            .rev()
            .flat_map(|&(i, a)| std::iter::repeat_n(i, a as usize))
            .collect()
    }

    /// Groups a residue sequence (application order) into maximal runs.
    pub fn from_eta(p: usize, eta: &[usize]) -> Result<Self> {
        let mut letters: Vec<(usize, u32)> = Vec::new();
        for &i in eta {
            match letters.last_mut() {
                Some((j, a)) if *j == i => *a += 1,
                _ => letters.push((i, 1)),
            }
        }
        letters.reverse();
        OperatorWord::new(p, letters)
    }

    pub fn grade(&self) -> usize {
        self.letters.iter().map(|&(_, a)| a as usize).sum()
    }
}

impl fmt::Display for OperatorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.letters.iter().map(|(i, a)| format!("{i}:{a}")).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for OperatorWord {
    type Err = Error;
    /// "p=3;0:1,2:1,…" or just the letters with p=3 implied is not allowed.
    fn from_str(s: &str) -> Result<Self> {
        let (p, rest) = s
            .split_once(';')
            .ok_or_else(|| Error::Word("expected \"p=<p>;<letters>\"".into()))?;
        let p = p
            .trim()
            .trim_start_matches("p=")
            .parse()
            .map_err(|_| Error::Word(format!("bad modulus in {s:?}")))?;
        OperatorWord::parse(p, rest)
    }
}

pub fn try_apply_word_with(w: &OperatorWord, conv: Convention) -> Option<FockVector> {
    let mut x = FockVector::vacuum(w.p);
    for &(i, a) in w.letters.iter().rev() {
        x = try_apply_f_divided_with(i, a, &x, conv)?;
    }
    Some(x)
}

pub fn apply_word_with(w: &OperatorWord, conv: Convention) -> FockVector {
    let mut x = FockVector::vacuum(w.p);
    for &(i, a) in w.letters.iter().rev() {
        x = apply_f_divided_with(i, a, &x, conv);
    }
    x
}

/// Applies the word to the vacuum, rightmost letter first.
pub fn apply_word(w: &OperatorWord) -> FockVector {
    apply_word_with(w, Convention::STANDARD)
}

/// Words for which the ladder construction is replaced (p = 3).
const OVERRIDES: &[(&[usize], &str)] = &[
    (&[10, 4, 4, 1], "0:1,2:1,1:2,0:1,2:2,1:1,0:3,1:1,2:2,0:1,1:2,2:1,0:1"),
    (
        &[9, 6, 3, 3, 1, 1],
        "2:1,1:2,0:2,2:3,1:1,0:2,1:2,2:1,0:1,1:1,2:1,1:1,0:1,2:1,1:1,2:1,0:1",
    ),
    (&[10, 4, 4, 3, 1, 1], "0:1,2:1,1:3,0:1,2:4,1:1,0:2,1:2,2:2,0:2,1:2,2:1,0:1"),
];

pub fn override_word(l: &Partition, p: usize) -> Option<OperatorWord> {
    if p != 3 {
        return None;
    }
    OVERRIDES
        .iter()
        .find(|(parts, _)| *parts == l.parts())
        .map(|(_, w)| OperatorWord::parse(3, w).expect("override table is well-formed"))
}

/// The plain ladder word: ladders in increasing order, one divided power
/// per ladder, with the residue shared by all nodes of the ladder.
pub fn standard_ladder_word(l: &Partition, p: usize) -> Result<OperatorWord> {
    if p < 2 {
        return Err(Error::BadModulus(p));
    }
    if !l.is_p_regular(p) {
        return Err(Error::NotRegular { partition: l.clone(), p });
    }
    let mut counts: Vec<u32> = Vec::new();
    for (i, &row) in l.parts().iter().enumerate() {
        for j in 0..row {
            let lad = i + (p - 1) * j;
            if counts.len() <= lad {
                counts.resize(lad + 1, 0);
            }
            counts[lad] += 1;
        }
    }
    // node (i, j) on ladder i + (p-1) j has residue j - i ≡ -ladder (mod p)
    let letters: Vec<(usize, u32)> = counts
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(lad, &c)| ((p - lad % p) % p, c))
        .rev()
        .collect();
    OperatorWord::new(p, letters)
}

/// Operator word for λ: a tabulated word where one is known, otherwise the
/// standard ladder word.
pub fn ladder_word(l: &Partition, p: usize) -> Result<OperatorWord> {
    if let Some(w) = override_word(l, p) {
        return Ok(w);
    }
    standard_ladder_word(l, p)
}

/// The term with a non-vℕ[v] coefficient, if it is unique and equals 1.
fn leading_unit(x: &FockVector) -> Option<&Partition> {
    let mut lead = None;
    for (m, c) in x.terms() {
        if !c.is_in_v_natural() {
            if lead.is_some() || *c != VPolynomial::one() {
                return None;
            }
            lead = Some(m);
        }
    }
    lead
}

/// Depth-first search for a word whose value has the shape λ + Σ vℕ[v]·μ,
/// keeping that shape on every prefix. Returns the first word found.
pub fn search_word(l: &Partition, p: usize) -> Result<Option<OperatorWord>> {
    fn go(
        x: &FockVector,
        l: &Partition,
        last: Option<usize>,
        word: &mut Vec<(usize, u32)>,
    ) -> bool {
        if x.n == l.size() {
            return leading_unit(x) == Some(l);
        }
        let p = x.p;
        for i in (0..p).filter(|&i| Some(i) != last) {
            for a in 1..=(l.size() - x.n) as u32 {
                let Some(y) = try_apply_f_divided_with(i, a, x, Convention::STANDARD) else {
                    break;
                };
                if y.is_empty() {
                    break;
                }
                if leading_unit(&y).is_some_and(|m| l.contains(m)) {
                    word.push((i, a));
                    if go(&y, l, Some(i), word) {
                        return true;
                    }
                    word.pop();
                }
            }
        }
        false
    }
    if !l.is_p_regular(p) {
        return Err(Error::NotRegular { partition: l.clone(), p });
    }
    let mut word = Vec::new();
    if go(&FockVector::vacuum(p), l, None, &mut word) {
        word.reverse();
        Ok(Some(OperatorWord::new(p, word)?))
    } else {
        Ok(None)
    }
}

/// Entries {μ ↦ a_μ(1)} of one column of the decomposition matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionColumn {
    pub label: Partition,
    pub entries: BTreeMap<Partition, u64>,
}

impl DecompositionColumn {
    pub fn get(&self, m: &Partition) -> u64 {
        self.entries.get(m).copied().unwrap_or(0)
    }
}

#[derive(Serialize, Deserialize)]
struct ColumnJson {
    label: Partition,
    entries: Vec<(Partition, u64)>,
}

impl Serialize for DecompositionColumn {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ColumnJson {
            label: self.label.clone(),
            entries: self.entries.iter().rev().map(|(k, v)| (k.clone(), *v)).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for DecompositionColumn {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = ColumnJson::deserialize(d)?;
        Ok(DecompositionColumn { label: j.label, entries: j.entries.into_iter().collect() })
    }
}

/// Reads off d_{μ,λ} = a_μ(1) after checking x = λ + Σ_{μ≠λ} a_μ μ with
/// every a_μ ∈ vℕ[v].
pub fn extract_decomposition_column(x: &FockVector, l: &Partition) -> Result<DecompositionColumn> {
    let fail = |m: &Partition, reason: String| Error::Hypothesis { partition: m.clone(), reason };
    if !l.is_p_regular(x.p) {
        return Err(Error::NotRegular { partition: l.clone(), p: x.p });
    }
    let lead = x.coeff(l);
    if lead != VPolynomial::one() {
        return Err(fail(l, format!("coefficient of the label is {lead}, expected 1")));
    }
    let mut entries = BTreeMap::new();
    for (m, c) in x.terms() {
        if m == l {
            entries.insert(m.clone(), 1);
            continue;
        }
        if !c.is_in_v_natural() {
            return Err(fail(m, format!("coefficient {c} is not in vN[v]")));
        }
        let d = u64::try_from(c.eval_at_one())
            .map_err(|_| fail(m, "coefficient too large".into()))?;
        entries.insert(m.clone(), d);
    }
    Ok(DecompositionColumn { label: l.clone(), entries })
}

const CACHE_VERSION: u32 = 1;

/// Content-addressed on-disk cache of [`apply_word`] results.
#[derive(Debug, Clone)]
pub struct FockCache {
    dir: std::path::PathBuf,
}

#[derive(Serialize, Deserialize)]
struct CacheEntry {
    version: u32,
    word: OperatorWord,
    vector: FockVector,
}

impl FockCache {
    pub fn new(dir: impl Into<std::path::PathBuf>) -> Self {
        FockCache { dir: dir.into() }
    }

    /// `MODREP_CACHE` wins over the given directory.
    pub fn from_env_or(dir: Option<std::path::PathBuf>) -> Option<Self> {
        std::env::var_os("MODREP_CACHE")
            .filter(|v| !v.is_empty())
            .map(std::path::PathBuf::from)
            .or(dir)
            .map(FockCache::new)
    }

    pub fn dir(&self) -> &std::path::Path {
        &self.dir
    }

    fn key(w: &OperatorWord) -> String {
        use sha2::{Digest, Sha256};
        let mut h = Sha256::new();
        h.update(format!("v{CACHE_VERSION}|p={}|{w}", w.p));
        hex::encode(h.finalize())
    }

    fn path(&self, w: &OperatorWord) -> std::path::PathBuf {
        self.dir.join(format!("{}.json", Self::key(w)))
    }

    pub fn get(&self, w: &OperatorWord) -> Option<FockVector> {
        let text = std::fs::read_to_string(self.path(w)).ok()?;
        let e: CacheEntry = serde_json::from_str(&text).ok()?;
        (e.version == CACHE_VERSION && e.word == *w).then_some(e.vector)
    }

    /// Writes through a temporary file and an atomic rename, so concurrent
    /// writers never expose a partial entry.
    pub fn put(&self, w: &OperatorWord, x: &FockVector) -> Result<()> {
        std::fs::create_dir_all(&self.dir)?;
        let entry = CacheEntry { version: CACHE_VERSION, word: w.clone(), vector: x.clone() };
        let final_path = self.path(w);
        let tmp = self.dir.join(format!(
            ".{}.{}.{:?}.tmp",
            Self::key(w),
            std::process::id(),
            std::thread::current().id()
        ));
        std::fs::write(&tmp, serde_json::to_vec(&entry)?)?;
        std::fs::rename(&tmp, &final_path)?;
        Ok(())
    }

    pub fn apply_word(&self, w: &OperatorWord) -> Result<FockVector> {
        if let Some(x) = self.get(w) {
            return Ok(x);
        }
        let x = apply_word(w);
        self.put(w, &x)?;
        Ok(x)
    }
}
