//! Labeled decomposition-matrix models with possibly unknown entries,
//! total orders on labels, and basic-set data.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{lex_cmp, lexprime_cmp, Partition};

/// Which constituent of a split character a label denotes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum Sign {
    #[default]
    None,
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::None => Sign::None,
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    fn suffix(self) -> &'static str {
        match self {
            Sign::None => "",
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }
}

/// A row or column label: a partition, plus a sign for split characters.
///
/// Symmetric-group labels never carry a sign. Alternating-group labels use
/// the canonical representative of a conjugate pair (rows) or Mullineux
/// pair (columns) when unsplit, and a ± sign when split.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label {
    pub partition: Partition,
    pub sign: Sign,
}

impl Label {
    pub fn plain(partition: Partition) -> Self {
        Label { partition, sign: Sign::None }
    }

    pub fn signed(partition: Partition, sign: Sign) -> Self {
        Label { partition, sign }
    }

    pub fn is_split(&self) -> bool {
        self.sign != Sign::None
    }

    /// The other constituent of a split label; unsplit labels are fixed.
    pub fn sigma(&self) -> Label {
        Label { partition: self.partition.clone(), sign: self.sign.flip() }
    }
}

impl From<Partition> for Label {
    fn from(p: Partition) -> Self {
        Label::plain(p)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.partition, self.sign.suffix())
    }
}

impl FromStr for Label {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (body, sign) = if let Some(b) = s.strip_suffix('+') {
            (b, Sign::Plus)
        } else if let Some(b) = s.strip_suffix('-') {
            (b, Sign::Minus)
        } else {
            (s, Sign::None)
        };
        Ok(Label { partition: body.parse()?, sign })
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum LabelJson {
    Plain(Partition),
    Signed { partition: Partition, sign: String },
}

impl Serialize for Label {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.sign {
            Sign::None => self.partition.serialize(s),
            sign => LabelJson::Signed { partition: self.partition.clone(), sign: sign.suffix().into() }
                .serialize(s),
        }
    }
}

impl<'de> Deserialize<'de> for Label {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        Ok(match LabelJson::deserialize(d)? {
            LabelJson::Plain(p) => Label::plain(p),
            LabelJson::Signed { partition, sign } => {
                let sign = match sign.as_str() {
                    "+" => Sign::Plus,
                    "-" => Sign::Minus,
                    "" => Sign::None,
                    other => return Err(D::Error::custom(format!("bad sign {other:?}"))),
                };
                Label { partition, sign }
            }
        })
    }
}

/// Matrix entry: `Some(d)` known, `None` unknown.
pub type Entry = Option<u64>;

/// A labeled decomposition matrix, rows = ordinary characters, columns =
/// Brauer characters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ModelJson", into = "ModelJson")]
pub struct DecompMatrixModel {
    pub p: usize,
    pub n: usize,
    pub core: Option<Partition>,
    rows: Vec<Label>,
    cols: Vec<Label>,
    entries: Vec<Vec<Entry>>,
    row_index: HashMap<Label, usize>,
    col_index: HashMap<Label, usize>,
}

#[derive(Serialize, Deserialize)]
struct ModelJson {
    p: usize,
    n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    core: Option<Partition>,
    rows: Vec<Label>,
    cols: Vec<Label>,
    entries: Vec<Vec<Entry>>,
}

impl TryFrom<ModelJson> for DecompMatrixModel {
    type Error = Error;
    fn try_from(j: ModelJson) -> Result<Self> {
        let mut m = DecompMatrixModel::new(j.p, j.n, j.rows, j.cols, j.entries)?;
        m.core = j.core;
        Ok(m)
    }
}

impl From<DecompMatrixModel> for ModelJson {
    fn from(m: DecompMatrixModel) -> Self {
        ModelJson { p: m.p, n: m.n, core: m.core, rows: m.rows, cols: m.cols, entries: m.entries }
    }
}

fn index(labels: &[Label], what: &str) -> Result<HashMap<Label, usize>> {
    let mut idx = HashMap::with_capacity(labels.len());
    for (i, l) in labels.iter().enumerate() {
        if idx.insert(l.clone(), i).is_some() {
            return Err(Error::Matrix(format!("duplicate {what} label {l}")));
        }
    }
    Ok(idx)
}

impl DecompMatrixModel {
    pub fn new(p: usize, n: usize, rows: Vec<Label>, cols: Vec<Label>, entries: Vec<Vec<Entry>>) -> Result<Self> {
        if p < 2 {
            return Err(Error::BadModulus(p));
        }
        if entries.len() != rows.len() {
            return Err(Error::Matrix(format!("{} rows labeled but {} given", rows.len(), entries.len())));
        }
        if let Some(r) = entries.iter().position(|r| r.len() != cols.len()) {
            return Err(Error::Matrix(format!("row {} has {} entries, expected {}", rows[r], entries[r].len(), cols.len())));
        }
        for l in rows.iter().chain(&cols) {
            if l.partition.size() != n {
                return Err(Error::Matrix(format!("label {l} is not a partition of {n}")));
            }
        }
        for c in &cols {
            if !c.partition.is_p_regular(p) {
                return Err(Error::NotRegular { partition: c.partition.clone(), p });
            }
        }
        let row_index = index(&rows, "row")?;
        let col_index = index(&cols, "column")?;
        Ok(DecompMatrixModel { p, n, core: None, rows, cols, entries, row_index, col_index })
    }

    /// A model with every entry unknown.
    pub fn unknown(p: usize, n: usize, rows: Vec<Label>, cols: Vec<Label>) -> Result<Self> {
        let e = vec![vec![None; cols.len()]; rows.len()];
        Self::new(p, n, rows, cols, e)
    }

    pub fn with_core(mut self, core: Partition) -> Self {
        self.core = Some(core);
        self
    }

    pub fn rows(&self) -> &[Label] {
        &self.rows
    }

    pub fn cols(&self) -> &[Label] {
        &self.cols
    }

    pub fn entries(&self) -> &[Vec<Entry>] {
        &self.entries
    }

    pub fn row_of(&self, l: &Label) -> Option<usize> {
        self.row_index.get(l).copied()
    }

    pub fn col_of(&self, l: &Label) -> Option<usize> {
        self.col_index.get(l).copied()
    }

    /// Entry at (row, col). Errors if either label is absent.
    pub fn get(&self, row: &Label, col: &Label) -> Result<Entry> {
        let r = self.row_of(row).ok_or_else(|| Error::Matrix(format!("no row {row}")))?;
        let c = self.col_of(col).ok_or_else(|| Error::Matrix(format!("no column {col}")))?;
        Ok(self.entries[r][c])
    }

    /// Known entry at (row, col), or an `UnknownEntry` error.
    pub fn known(&self, row: &Label, col: &Label) -> Result<u64> {
        self.get(row, col)?.ok_or_else(|| Error::UnknownEntry { row: row.to_string(), col: col.to_string() })
    }

    pub fn set(&mut self, row: &Label, col: &Label, e: Entry) -> Result<()> {
        let r = self.row_of(row).ok_or_else(|| Error::Matrix(format!("no row {row}")))?;
        let c = self.col_of(col).ok_or_else(|| Error::Matrix(format!("no column {col}")))?;
        self.entries[r][c] = e;
        Ok(())
    }

    pub fn is_complete(&self) -> bool {
        self.entries.iter().flatten().all(Option::is_some)
    }

    pub fn unknown_count(&self) -> usize {
        self.entries.iter().flatten().filter(|e| e.is_none()).count()
    }

    /// Sub-model on the given rows and columns, in the given order.
    pub fn submatrix(&self, rows: &[Label], cols: &[Label]) -> Result<DecompMatrixModel> {
        let mut e = Vec::with_capacity(rows.len());
        for r in rows {
            let mut line = Vec::with_capacity(cols.len());
            for c in cols {
                line.push(self.get(r, c)?);
            }
            e.push(line);
        }
        let mut m = DecompMatrixModel::new(self.p, self.n, rows.to_vec(), cols.to_vec(), e)?;
        m.core = self.core.clone();
        Ok(m)
    }

    /// The entries as a complete integer matrix, or an error naming the
    /// first unknown entry.
    pub fn complete_entries(&self) -> Result<Vec<Vec<u64>>> {
        self.entries
            .iter()
            .enumerate()
            .map(|(r, line)| {
                line.iter()
                    .enumerate()
                    .map(|(c, e)| {
                        e.ok_or_else(|| Error::UnknownEntry {
                            row: self.rows[r].to_string(),
                            col: self.cols[c].to_string(),
                        })
                    })
                    .collect()
            })
            .collect()
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// First row: column labels; first column: row labels; cells: integer or "?".
    /// `p` and `n` are not part of the CSV and must be supplied.
    pub fn from_csv(s: &str, p: usize) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new().has_headers(false).trim(csv::Trim::All).from_reader(s.as_bytes());
        let mut records = rdr.records();
        let header = records
            .next()
            .ok_or_else(|| Error::Matrix("empty CSV".into()))?
            .map_err(|e| Error::Matrix(e.to_string()))?;
        let cols: Vec<Label> = header.iter().skip(1).map(str::parse).collect::<Result<_>>()?;
        let mut rows = Vec::new();
        let mut entries = Vec::new();
        for rec in records {
            let rec = rec.map_err(|e| Error::Matrix(e.to_string()))?;
            let mut it = rec.iter();
            let label: Label = it.next().unwrap_or_default().parse()?;
            let line: Vec<Entry> = it
                .map(|c| match c {
                    "?" => Ok(None),
                    x => x.parse::<u64>().map(Some).map_err(|_| Error::Matrix(format!("bad cell {x:?}"))),
                })
                .collect::<Result<_>>()?;
            rows.push(label);
            entries.push(line);
        }
        let n = rows.first().or(cols.first()).map_or(0, |l| l.partition.size());
        DecompMatrixModel::new(p, n, rows, cols, entries)
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::Io(e.to_string());
        let mut head = vec![String::new()];
        head.extend(self.cols.iter().map(Label::to_string));
        w.write_record(&head).map_err(io)?;
        for (r, line) in self.rows.iter().zip(&self.entries) {
            let mut rec = vec![r.to_string()];
            rec.extend(line.iter().map(|e| e.map_or("?".to_string(), |d| d.to_string())));
            w.write_record(&rec).map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
    }

    /// Loads JSON, or CSV when the path ends in `.csv`.
    pub fn load(path: &std::path::Path, p_for_csv: usize) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        if path.extension().is_some_and(|e| e == "csv") {
            Self::from_csv(&text, p_for_csv)
        } else {
            Self::from_json(&text)
        }
    }
}

impl fmt::Display for DecompMatrixModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.rows.iter().map(|l| l.to_string().len()).max().unwrap_or(0);
        for (l, line) in self.rows.iter().zip(&self.entries) {
            write!(f, "{:>w$} |", l.to_string())?;
            for e in line {
                match e {
                    Some(d) => write!(f, " {d}")?,
                    None => write!(f, " ?")?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Determinant of a square integer matrix by fraction-free elimination.
pub fn determinant(m: &[Vec<u64>]) -> Result<BigInt> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::Matrix("determinant of a non-square matrix".into()));
    }
    let mut a: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(s) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(BigInt::zero());
            };
            a.swap(k, s);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    Ok(if n == 0 { BigInt::one() } else { sign * &a[n - 1][n - 1] })
}

pub fn is_unimodular(m: &[Vec<u64>]) -> Result<bool> {
    Ok(determinant(m)?.abs().is_one())
}

/// A total order on labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "labels")]
pub enum TotalOrderSpec {
    /// Lexicographic order on partitions.
    Lex,
    /// λ ≤′ μ iff λ′ ≥ μ′ lexicographically.
    Lexprime,
    /// The order ⪯ built from a base order.
    Prec(Box<TotalOrderSpec>),
    /// Explicit ascending list.
    Custom(Vec<Label>),
}

impl TotalOrderSpec {
    pub fn prec(base: TotalOrderSpec) -> Self {
        TotalOrderSpec::Prec(Box::new(base))
    }

    /// Compares two labels. Partition-based orders break ties between
    /// split constituents by sign (− before +).
    pub fn cmp(&self, a: &Label, b: &Label) -> Result<Ordering> {
        let tie = |o: Ordering| o.then_with(|| sign_rank(a.sign).cmp(&sign_rank(b.sign)));
        match self {
            TotalOrderSpec::Custom(list) => {
                let pos = |l: &Label| {
                    list.iter().position(|x| x == l).ok_or_else(|| Error::Datum(format!("{l} not in custom order")))
                };
                Ok(pos(a)?.cmp(&pos(b)?))
            }
            base => Ok(tie(base.cmp_partitions(&a.partition, &b.partition)?)),
        }
    }

    /// Comparison on bare partitions; fails for custom orders.
    pub fn cmp_partitions(&self, a: &Partition, b: &Partition) -> Result<Ordering> {
        if a.size() != b.size() {
            return Err(Error::SizeMismatch { left: a.clone(), right: b.clone() });
        }
        match self {
            TotalOrderSpec::Lex => Ok(lex_cmp(a, b)),
            TotalOrderSpec::Lexprime => Ok(lexprime_cmp(a, b)),
            TotalOrderSpec::Prec(base) => {
                let key = |l: &Partition| -> Result<Partition> {
                    let c = l.conjugate();
                    Ok(if base.cmp_partitions(l, &c)? == Ordering::Less { c } else { l.clone() })
                };
                let (ka, kb) = (key(a)?, key(b)?);
                Ok(base.cmp_partitions(&ka, &kb)?.then(base.cmp_partitions(a, b)?))
            }
            TotalOrderSpec::Custom(_) => {
                self.cmp(&Label::plain(a.clone()), &Label::plain(b.clone()))
            }
        }
    }

    pub fn leq(&self, a: &Label, b: &Label) -> Result<bool> {
        Ok(self.cmp(a, b)? != Ordering::Greater)
    }

    /// Position of each label in ascending order.
    pub fn ranks(&self, labels: &[Label]) -> Result<HashMap<Label, usize>> {
        if let TotalOrderSpec::Custom(list) = self {
            let pos: HashMap<&Label, usize> = list.iter().enumerate().map(|(i, l)| (l, i)).collect();
            return labels
                .iter()
                .map(|l| {
                    pos.get(l)
                        .map(|&i| (l.clone(), i))
                        .ok_or_else(|| Error::Datum(format!("{l} not in custom order")))
                })
                .collect();
        }
        let mut v = labels.to_vec();
        v.sort();
        v.dedup();
        self.sort(&mut v)?;
        Ok(v.into_iter().enumerate().map(|(i, l)| (l, i)).collect())
    }

    /// Sorts ascending.
    pub fn sort(&self, labels: &mut [Label]) -> Result<()> {
        let mut err = None;
        labels.sort_by(|a, b| {
            self.cmp(a, b).unwrap_or_else(|e| {
                err.get_or_insert(e);
                Ordering::Equal
            })
        });
        err.map_or(Ok(()), Err)
    }
}

fn sign_rank(s: Sign) -> u8 {
    match s {
        Sign::Minus => 0,
        Sign::None => 1,
        Sign::Plus => 2,
    }
}

impl FromStr for TotalOrderSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lex" => Ok(TotalOrderSpec::Lex),
            "lexprime" => Ok(TotalOrderSpec::Lexprime),
            "prec-lex" => Ok(TotalOrderSpec::prec(TotalOrderSpec::Lex)),
            "prec-lexprime" => Ok(TotalOrderSpec::prec(TotalOrderSpec::Lexprime)),
            other => Err(Error::Parse(format!("unknown order {other:?}"))),
        }
    }
}

/// (B, ≤, Ψ): a subset of row labels, a total order, and a bijection onto
/// the column labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasicSetDatum {
    /// B, ascending in `order`.
    pub set: Vec<Label>,
    pub order: TotalOrderSpec,
    /// Ψ as (b, Ψ(b)) pairs.
    pub psi: Vec<(Label, Label)>,
}

impl BasicSetDatum {
    /// Sorts `set` by `order` and checks that Ψ is a bijection from B.
    pub fn new(mut set: Vec<Label>, order: TotalOrderSpec, psi: Vec<(Label, Label)>) -> Result<Self> {
        order.sort(&mut set)?;
        let d = BasicSetDatum { set, order, psi };
        d.check()?;
        Ok(d)
    }

    fn check(&self) -> Result<()> {
        if self.psi.len() != self.set.len() {
            return Err(Error::Datum(format!("|B| = {} but Ψ has {} pairs", self.set.len(), self.psi.len())));
        }
        let mut dom: Vec<&Label> = self.psi.iter().map(|(b, _)| b).collect();
        let mut img: Vec<&Label> = self.psi.iter().map(|(_, c)| c).collect();
        let mut set: Vec<&Label> = self.set.iter().collect();
        dom.sort();
        img.sort();
        set.sort();
        if dom != set {
            return Err(Error::Datum("Ψ is not defined on exactly B".into()));
        }
        if img.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Datum("Ψ is not injective".into()));
        }
        if set.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Datum("B has repeated labels".into()));
        }
        Ok(())
    }

    pub fn psi_of(&self, b: &Label) -> Option<&Label> {
        self.psi.iter().find(|(x, _)| x == b).map(|(_, c)| c)
    }

    pub fn psi_inv(&self, c: &Label) -> Option<&Label> {
        self.psi.iter().find(|(_, y)| y == c).map(|(b, _)| b)
    }

    pub fn contains(&self, l: &Label) -> bool {
        self.set.contains(l)
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    /// Columns Ψ(b) in the order of B.
    pub fn columns(&self) -> Vec<Label> {
        self.set.iter().map(|b| self.psi_of(b).expect("checked").clone()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    fn l(s: &str) -> Label {
        s.parse().unwrap()
    }

    #[test]
    fn labels() {
        assert_eq!(l("3,2,1+"), Label::signed(part![3, 2, 1], Sign::Plus));
        assert_eq!(l("(5,1)").to_string(), "(5,1)");
        assert_eq!(l("3,2,1-").sigma(), l("3,2,1+"));
        let j = serde_json::to_string(&vec![l("5,1"), l("3,2,1+")]).unwrap();
        assert_eq!(j, r#"[[5,1],{"partition":[3,2,1],"sign":"+"}]"#);
        let back: Vec<Label> = serde_json::from_str(&j).unwrap();
        assert_eq!(back, vec![l("5,1"), l("3,2,1+")]);
    }

    #[test]
    fn model_json_and_csv() {
        let m = DecompMatrixModel::new(
            3,
            3,
            vec![l("3"), l("2,1"), l("1,1,1")],
            vec![l("3"), l("2,1")],
            vec![vec![Some(1), Some(0)], vec![Some(1), Some(1)], vec![None, Some(1)]],
        )
        .unwrap();
        let j = m.to_json().unwrap();
        assert!(j.contains("null"));
        assert_eq!(DecompMatrixModel::from_json(&j).unwrap(), m);
        let c = m.to_csv().unwrap();
        assert!(c.contains('?'));
        assert_eq!(DecompMatrixModel::from_csv(&c, 3).unwrap(), m);
        assert_eq!(m.unknown_count(), 1);
        assert!(m.complete_entries().is_err());
    }

    #[test]
    fn model_rejects_bad_input() {
        let bad = DecompMatrixModel::new(3, 3, vec![l("3")], vec![l("1,1,1")], vec![vec![Some(1)]]);
        assert!(matches!(bad, Err(Error::NotRegular { .. })));
        let bad = DecompMatrixModel::new(3, 3, vec![l("3")], vec![l("3")], vec![vec![]]);
        assert!(bad.is_err());
        let bad = DecompMatrixModel::new(3, 3, vec![l("3"), l("3")], vec![l("3")], vec![vec![Some(1)], vec![Some(1)]]);
        assert!(bad.is_err());
    }

    #[test]
    fn determinants() {
        assert_eq!(determinant(&[vec![1, 1, 0], vec![2, 1, 1], vec![2, 0, 1]]).unwrap(), BigInt::from(1));
        assert_eq!(determinant(&[vec![0, 1], vec![1, 0]]).unwrap(), BigInt::from(-1));
        assert_eq!(determinant(&[vec![2, 4], vec![1, 2]]).unwrap(), BigInt::zero());
        assert_eq!(determinant(&[]).unwrap(), BigInt::one());
        assert!(is_unimodular(&[vec![1, 0, 0], vec![5, 1, 0], vec![3, 7, 1]]).unwrap());
    }

    #[test]
    fn orders() {
        let lex = TotalOrderSpec::Lex;
        assert_eq!(lex.cmp(&l("5"), &l("4,1")).unwrap(), Ordering::Greater);
        let pl = TotalOrderSpec::prec(TotalOrderSpec::Lex);
        // (1^5) sits just below (5)
        assert_eq!(pl.cmp(&l("1,1,1,1,1"), &l("5")).unwrap(), Ordering::Less);
        assert_eq!(pl.cmp(&l("4,1"), &l("1,1,1,1,1")).unwrap(), Ordering::Less);
        let c = TotalOrderSpec::Custom(vec![l("2,1"), l("3")]);
        assert!(c.leq(&l("2,1"), &l("3")).unwrap());
        assert!(c.cmp(&l("1,1,1"), &l("3")).is_err());
        assert!(lex.cmp(&l("3"), &l("2")).is_err());
        let j = serde_json::to_string(&pl).unwrap();
        assert_eq!(serde_json::from_str::<TotalOrderSpec>(&j).unwrap(), pl);
    }

    #[test]
    fn datum_checks() {
        let ok = BasicSetDatum::new(vec![l("3"), l("2,1")], TotalOrderSpec::Lex, vec![(l("3"), l("3")), (l("2,1"), l("2,1"))]);
        assert_eq!(ok.unwrap().set, vec![l("2,1"), l("3")]);
        let bad = BasicSetDatum::new(vec![l("3"), l("2,1")], TotalOrderSpec::Lex, vec![(l("3"), l("3")), (l("2,1"), l("3"))]);
        assert!(bad.is_err());
    }
}
