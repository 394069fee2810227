//! End-to-end computations over the shipped data files, each reported as a
//! list of PASS/FAIL steps.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::basicsets::{
    build_tilde_basic_set, is_unitriangularisable, restrict_to_block, rho_swap, verify_basic_set,
    verify_known_entries, verify_unitriangular_basic_set, zero_count_condition,
};
use crate::clifford::{
    c_gamma, count_ibr_an, induce_basic_set_to_sn, odd_weight_basic_set, restrict_basic_set_to_an, structural_model,
    blocks, SnInduction,
};
use crate::error::{Error, Result};
use crate::fock::{apply_word, extract_decomposition_column, ladder_word, DecompositionColumn, FockCache, FockVector, OperatorWord};
use crate::matrix::{BasicSetDatum, DecompMatrixModel, Entry, Label, Sign, TotalOrderSpec};
use crate::mullineux::{mullineux, mullineux_fixed};
use crate::part;
use crate::partition::{dominance_leq, p_core, regularize, Partition};
use crate::poly::VPolynomial;

pub const S6_PRINCIPAL: &str = include_str!("../data/s6_principal_p3.json");
pub const A18_SUBMATRIX: &str = include_str!("../data/a18_block0_submatrix.json");
pub const FOCK_A19: &str = include_str!("../data/fock_a19.json");
pub const FOCK_S23_963311: &str = include_str!("../data/fock_s23_963311.json");
pub const FOCK_S23_1044311: &str = include_str!("../data/fock_s23_1044311.json");

pub const SCENARIOS: [&str; 5] = ["s6-a6", "a18-counterexample", "a19-counterexample", "s23-block", "odd-weight-sweep"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Step {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScenarioReport {
    pub name: String,
    pub title: String,
    pub steps: Vec<Step>,
    pub verdict: String,
}

impl ScenarioReport {
    fn new(name: &str, title: &str) -> Self {
        ScenarioReport { name: name.into(), title: title.into(), steps: Vec::new(), verdict: String::new() }
    }

    fn step(&mut self, name: &str, pass: bool, detail: impl Into<String>) -> bool {
        self.steps.push(Step { name: name.into(), pass, detail: detail.into() });
        pass
    }

    /// Records a failed step instead of propagating the error.
    fn try_step<T>(&mut self, name: &str, r: Result<T>) -> Option<T> {
        match r {
            Ok(x) => Some(x),
            Err(e) => {
                self.step(name, false, format!("error: {e}"));
                None
            }
        }
    }

    pub fn passed(&self) -> bool {
        !self.steps.is_empty() && self.steps.iter().all(|s| s.pass)
    }
}

impl fmt::Display for ScenarioReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "== {}: {}", self.name, self.title)?;
        for s in &self.steps {
            writeln!(f, "{} {}: {}", if s.pass { "PASS" } else { "FAIL" }, s.name, s.detail)?;
        }
        write!(f, "{} verdict: {}", if self.passed() { "PASS" } else { "FAIL" }, self.verdict)
    }
}

pub fn run_scenario(name: &str, cache: Option<&FockCache>) -> Result<ScenarioReport> {
    match name {
        "s6-a6" => Ok(s6_a6()),
        "a18-counterexample" => Ok(a18()),
        "a19-counterexample" => Ok(a19(cache)),
        "s23-block" => Ok(s23(cache)),
        "odd-weight-sweep" => Ok(odd_weight_sweep(25)),
        other => Err(Error::Precondition(format!("unknown scenario {other:?}; known: {}", SCENARIOS.join(", ")))),
    }
}

fn names<'a>(v: impl IntoIterator<Item = &'a Partition>) -> String {
    v.into_iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn evaluate(w: &OperatorWord, cache: Option<&FockCache>) -> Result<FockVector> {
    match cache {
        Some(c) => c.apply_word(w),
        None => Ok(apply_word(w)),
    }
}

// ---------------------------------------------------------------- S_6 / A_6

/// The principal 3-block of S_6 with its printed basic set and the
/// matrices printed for the A_6 block.
#[derive(Debug, Clone)]
pub struct S6Data {
    pub matrix: DecompMatrixModel,
    pub datum: BasicSetDatum,
    pub printed: DecompMatrixModel,
    pub an_restriction: DecompMatrixModel,
    /// An extra A_6 row ψ, its entries on the A_6 columns, and its image
    /// under the alternative bijection.
    pub an_extra: (Label, Vec<Entry>, Label),
}

#[derive(Deserialize)]
struct S6Json {
    basic_set: BasicSetJson,
    printed: Sub,
    an_restriction: Sub,
    an_extra_row: Extra,
}

#[derive(Deserialize)]
struct BasicSetJson {
    ascending: Vec<Label>,
    psi: Vec<(Label, Label)>,
}

#[derive(Deserialize)]
struct Sub {
    rows: Vec<Label>,
    cols: Vec<Label>,
    entries: Vec<Vec<Entry>>,
}

#[derive(Deserialize)]
struct Extra {
    row: Partition,
    entries: Vec<Entry>,
    psi: Label,
}

pub fn s6_data() -> Result<S6Data> {
    let matrix = DecompMatrixModel::from_json(S6_PRINCIPAL)?;
    let j: S6Json = serde_json::from_str(S6_PRINCIPAL)?;
    let asc = j.basic_set.ascending;
    let datum = BasicSetDatum::new(asc.clone(), TotalOrderSpec::Custom(asc), j.basic_set.psi)?;
    let sub = |s: Sub| DecompMatrixModel::new(3, 6, s.rows, s.cols, s.entries);
    Ok(S6Data {
        matrix,
        datum,
        printed: sub(j.printed)?,
        an_restriction: sub(j.an_restriction)?,
        an_extra: (Label::plain(j.an_extra_row.row), j.an_extra_row.entries, j.an_extra_row.psi),
    })
}

/// The alternative A_6 basic set: the "−" constituent of the split row is
/// replaced by the extra row.
pub fn s6_alternative_an_input(data: &S6Data, restricted: &DecompMatrixModel, datum: &BasicSetDatum) -> Result<(DecompMatrixModel, BasicSetDatum)> {
    let (extra, extra_entries, extra_col) = data.an_extra.clone();
    let minus = datum
        .set
        .iter()
        .find(|l| l.sign == Sign::Minus)
        .cloned()
        .ok_or_else(|| Error::Datum("no split row to replace".into()))?;
    let mut rows = Vec::new();
    let mut entries = Vec::new();
    for (i, l) in restricted.rows().iter().enumerate() {
        if *l != minus {
            rows.push(l.clone());
            entries.push(restricted.entries()[i].clone());
        }
    }
    rows.push(extra.clone());
    entries.push(extra_entries);
    let mut model = DecompMatrixModel::new(restricted.p, restricted.n, rows, restricted.cols().to_vec(), entries)?;
    model.core = restricted.core.clone();
    let mut psi: Vec<(Label, Label)> = datum.psi.iter().filter(|(l, _)| *l != minus).cloned().collect();
    psi.push((extra.clone(), extra_col));
    // the extra row sits below every other member
    let mut asc = vec![extra];
    asc.extend(datum.set.iter().filter(|l| **l != minus).cloned());
    let d = BasicSetDatum::new(asc.clone(), TotalOrderSpec::Custom(asc), psi)?;
    Ok((model, d))
}

/// Unknown entries form exactly one contiguous 2×2 block.
pub fn single_unknown_square(m: &DecompMatrixModel) -> Option<(usize, usize)> {
    let cells: Vec<(usize, usize)> = m
        .entries()
        .iter()
        .enumerate()
        .flat_map(|(r, line)| line.iter().enumerate().filter(|(_, e)| e.is_none()).map(move |(c, _)| (r, c)))
        .collect();
    let &(r, c) = cells.first()?;
    (cells == [(r, c), (r, c + 1), (r + 1, c), (r + 1, c + 1)]).then_some((r, c))
}

fn same_induction(a: &SnInduction, b: &SnInduction) -> bool {
    let psi = |i: &SnInduction| i.datum.psi.iter().cloned().collect::<BTreeSet<_>>();
    a.model == b.model && a.datum.set == b.datum.set && psi(a) == psi(b)
}

fn s6_a6() -> ScenarioReport {
    let mut r = ScenarioReport::new("s6-a6", "principal 3-blocks of S_6 and A_6");
    let Some(data) = r.try_step("load", s6_data()) else { return r };
    let d = &data.matrix;

    let mut agree = true;
    let mut bad = String::new();
    for col in d.cols() {
        let column = ladder_word(&col.partition, 3)
            .map(|w| apply_word(&w))
            .and_then(|x| extract_decomposition_column(&x, &col.partition));
        match column {
            Ok(fc) => {
                for (i, row) in d.rows().iter().enumerate() {
                    let want = d.entries()[i][d.col_of(col).expect("own column")];
                    if want != Some(fc.get(&row.partition)) {
                        agree = false;
                        bad = format!("d[{row},{col}]");
                    }
                }
            }
            Err(e) => {
                agree = false;
                bad = e.to_string();
            }
        }
    }
    r.step("fock-columns", agree, if agree { "all five columns agree with the Fock space".into() } else { bad });

    let basic = verify_basic_set(d, &data.datum.set).unwrap_or(false);
    r.step("basic-set", basic, "the printed B spans the Brauer characters over Z");
    let sub = d.submatrix(data.printed.rows(), data.printed.cols());
    let ok = matches!(&sub, Ok(s) if s.entries() == data.printed.entries());
    r.step("printed-submatrix", ok, "restriction of the block matrix to B equals the printed matrix");
    let ok = verify_unitriangular_basic_set(&data.printed, &data.datum).unwrap_or(false);
    r.step("unitriangular", ok, "the printed B is unitriangular for its order");

    let tilde = build_tilde_basic_set(6, 3, &TotalOrderSpec::Lex).and_then(|t| restrict_to_block(&t, &Partition::empty()));
    let ok = matches!(&tilde, Ok(bt) if verify_unitriangular_basic_set(d, &bt.datum).unwrap_or(false));
    r.step("tilde-basic-set", ok, "B̃ on the block is unitriangular against the full matrix");

    let n_cols = count_ibr_an(&data.datum.set.iter().map(|l| l.partition.clone()).collect::<Vec<_>>());
    r.step("count-an-columns", n_cols == Ok(4), format!("|IBr(A_6 block)| = {n_cols:?}"));

    let Some(res) = r.try_step("restrict", restrict_basic_set_to_an(d, &data.datum)) else { return r };
    let ok = res.model.rows() == data.an_restriction.rows()
        && res.model.cols() == data.an_restriction.cols()
        && res.model.entries() == data.an_restriction.entries();
    r.step("restrict", ok, format!("A_6 matrix:\n{}", res.model));
    let ok = verify_unitriangular_basic_set(&res.model, &res.datum).unwrap_or(false);
    r.step("restrict-unitriangular", ok, "restricted datum is unitriangular");

    let Some(ind) = r.try_step("induce", induce_basic_set_to_sn(&res.model, &res.datum)) else { return r };
    let square = single_unknown_square(&ind.model);
    let consistent = ind.model.rows().iter().enumerate().all(|(i, row)| {
        ind.model.cols().iter().enumerate().all(|(j, col)| match ind.model.entries()[i][j] {
            Some(x) => d.get(row, col).ok() == Some(Some(x)),
            None => true,
        })
    });
    r.step(
        "induce",
        square.is_some() && consistent && verify_known_entries(&ind.model, &ind.datum).unwrap_or(false),
        format!("S_6 matrix with one undetermined 2x2 block:\n{}", ind.model),
    );

    let alt = s6_alternative_an_input(&data, &res.model, &res.datum)
        .and_then(|(m, dt)| Ok((verify_basic_set(&m, m.rows())?, induce_basic_set_to_sn(&m, &dt)?)));
    let Some((alt_basic, alt_ind)) = r.try_step("alternative-input", alt) else { return r };
    r.step(
        "alternative-input",
        alt_basic && same_induction(&ind, &alt_ind),
        format!("dropped {:?}; same S_6 basic set", alt_ind.dropped.iter().map(ToString::to_string).collect::<Vec<_>>()),
    );
    r.verdict = "A_6 principal 3-block has the printed unitriangular basic set; induction recovers the S_6 shape".into();
    r
}

// ---------------------------------------------------------------- A_18

#[derive(Deserialize)]
struct SubmatrixJson {
    p: usize,
    n: usize,
    rows: Vec<Label>,
    cols: Vec<Label>,
    entries: Vec<Vec<Entry>>,
}

pub fn a18_submatrix() -> Result<DecompMatrixModel> {
    let j: SubmatrixJson = serde_json::from_str(A18_SUBMATRIX)?;
    DecompMatrixModel::new(j.p, j.n, j.rows, j.cols, j.entries)
}

fn a18() -> ScenarioReport {
    let mut r = ScenarioReport::new("a18-counterexample", "principal 3-block of A_18");
    let (n, p) = (18, 3);
    let core = Partition::empty();
    let Some(fixed) = r.try_step("mullineux-fixed", mullineux_fixed(n, p)) else { return r };
    let fixed: BTreeSet<Partition> = fixed.into_iter().filter(|m| p_core(m, p).ok() == Some(core.clone())).collect();
    let want: BTreeSet<Partition> = [part![10, 4, 4], part![9, 4, 4, 1], part![7, 5, 2, 2, 1, 1]].into();
    r.step("mullineux-fixed", fixed == want, format!("fixed points in the block: {}", names(&fixed)));

    let Some(c) = r.try_step("split-labels", c_gamma(&core, n, p)) else { return r };
    let c: BTreeSet<Partition> = c.into_iter().collect();
    let want_c: BTreeSet<Partition> =
        [part![9, 2, 1, 1, 1, 1, 1, 1, 1], part![7, 4, 2, 2, 1, 1, 1], part![6, 5, 2, 2, 2, 1]].into();
    r.step("split-labels", c == want_c, format!("self-conjugate labels with hooks prime to 3: {}", names(&c)));

    let Some(m) = r.try_step("submatrix", a18_submatrix()) else { return r };
    let rows: BTreeSet<Partition> = m.rows().iter().map(|l| l.partition.clone()).collect();
    let cols: BTreeSet<Partition> = m.cols().iter().map(|l| l.partition.clone()).collect();
    r.step("submatrix", rows == c && cols == fixed, format!("golden submatrix on these labels:\n{m}"));
    let Some(e) = r.try_step("unitriangularisable", m.complete_entries()) else { return r };
    let w = is_unitriangularisable(&e);
    r.step("unitriangularisable", matches!(w, Ok(None)), "no row/column ordering makes it lower unitriangular");
    let zeros = e.iter().flatten().filter(|&&x| x == 0).count();
    r.step("zero-count", !zero_count_condition(&e), format!("{zeros} zero entries, at least 3 needed"));
    r.verdict = "no unitriangular 3-basic set for the principal 3-block of A_18".into();
    r
}

// ---------------------------------------------------------------- Fock goldens

/// A printed expansion of an operator word applied to the vacuum.
#[derive(Debug, Clone, Deserialize)]
pub struct PrintedExpansion {
    pub p: usize,
    pub n: usize,
    pub lambda: Partition,
    pub printed_word: String,
    pub word: String,
    pub terms: Vec<PrintedTerm>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct PrintedTerm {
    pub partition: Vec<usize>,
    pub printed: String,
    pub poly: VPolynomial,
    pub flags: Vec<String>,
}

impl PrintedExpansion {
    pub fn parse(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn operator_word(&self) -> Result<OperatorWord> {
        OperatorWord::parse(self.p, &self.word)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExpansionComparison {
    pub matched: usize,
    /// (partition, printed, computed) for well-formed printed terms that disagree.
    pub mismatched: Vec<(Partition, String, String)>,
    /// Defective printed terms, with the computed coefficient for reference.
    pub flagged: Vec<(Vec<usize>, Vec<String>, String)>,
    /// Computed terms that appear nowhere in print.
    pub unprinted: Vec<Partition>,
}

impl ExpansionComparison {
    pub fn agrees(&self) -> bool {
        self.mismatched.is_empty()
    }
}

pub fn compare_expansion(x: &FockVector, g: &PrintedExpansion) -> ExpansionComparison {
    let mut out = ExpansionComparison { matched: 0, mismatched: Vec::new(), flagged: Vec::new(), unprinted: Vec::new() };
    let mut seen = BTreeSet::new();
    for t in &g.terms {
        let l = Partition::from_unsorted(t.partition.clone());
        let c = if l.size() == x.n { x.coeff(&l) } else { VPolynomial::zero() };
        if !t.flags.is_empty() {
            out.flagged.push((t.partition.clone(), t.flags.clone(), c.to_string()));
            if c == t.poly {
                seen.insert(l);
            }
            continue;
        }
        if c == t.poly {
            out.matched += 1;
        } else {
            out.mismatched.push((l.clone(), t.poly.to_string(), c.to_string()));
        }
        seen.insert(l);
    }
    out.unprinted = x.terms().map(|(l, _)| l.clone()).filter(|l| !seen.contains(l)).collect();
    out
}

fn column_from_golden(
    r: &mut ScenarioReport,
    step: &str,
    golden: &str,
    cache: Option<&FockCache>,
) -> Option<(PrintedExpansion, DecompositionColumn)> {
    let g = r.try_step(step, PrintedExpansion::parse(golden))?;
    let w = r.try_step(step, g.operator_word())?;
    let x = r.try_step(step, evaluate(&w, cache))?;
    let cmp = compare_expansion(&x, &g);
    r.step(
        step,
        cmp.agrees(),
        format!(
            "A{} = {} terms; {} printed terms agree, {} disagree, {} flagged as defective in print, {} not printed",
            g.lambda,
            x.len(),
            cmp.matched,
            cmp.mismatched.len(),
            cmp.flagged.len(),
            cmp.unprinted.len()
        ),
    );
    let col = r.try_step(step, extract_decomposition_column(&x, &g.lambda))?;
    Some((g, col))
}

// ---------------------------------------------------------------- A_19

fn a19(cache: Option<&FockCache>) -> ScenarioReport {
    let mut r = ScenarioReport::new("a19-counterexample", "3-block of A_19 with core (1)");
    let (n, p) = (19, 3);
    let core = part![1];
    let lambda = part![10, 4, 4, 1];
    let fixed = mullineux(&lambda, p).map(|m| m == lambda);
    r.step("mullineux-fixed", fixed == Ok(true), format!("m{lambda} = {lambda}"));
    let Some((_, col)) = column_from_golden(&mut r, "fock-expansion", FOCK_A19, cache) else { return r };
    r.step("column", true, "every coefficient lies in vN[v], so the column can be read off at v = 1");

    let Some(c) = r.try_step("split-labels", c_gamma(&core, n, p)) else { return r };
    let want = [part![6, 5, 3, 2, 2, 1], part![7, 4, 3, 2, 1, 1, 1], part![10, 1, 1, 1, 1, 1, 1, 1, 1, 1]];
    let set_ok = c.iter().collect::<BTreeSet<_>>() == want.iter().collect::<BTreeSet<_>>();
    r.step("split-labels", set_ok, format!("self-conjugate labels with hooks prime to 3: {}", names(&c)));
    let values: Vec<u64> = want.iter().map(|m| col.get(m)).collect();
    r.step("column-values", values == [2, 3, 0], format!("d[·,{lambda}] on those labels = {values:?}"));
    let obstruction = !values.contains(&1);
    r.step(
        "obstruction",
        obstruction,
        "a unitriangular ordering needs a 1 in every column of the split-label rows; this column has none",
    );
    r.verdict = "no unitriangular 3-basic set for the 3-block of A_19 with core (1)".into();
    r
}

// ---------------------------------------------------------------- S_23

pub fn s23_rho() -> Vec<(Partition, Partition)> {
    vec![
        (part![12, 6, 5], part![12, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1]),
        (part![9, 6, 3, 3, 1, 1], part![6, 5, 5, 3, 3, 1]),
        (part![10, 4, 4, 3, 1, 1], part![9, 4, 3, 2, 1, 1, 1, 1, 1]),
    ]
}

/// What is known about the ρ-image rows of a block: the given computed
/// Fock columns, the regularization entry d_{ν,ν^R} = 1, and the zeros forced by
/// dominance and by d_{ν,M} = d_{ν′,m(M)} for self-conjugate ν.
pub fn rho_entry_model(
    cols: &[Label],
    rows: &[Partition],
    known_columns: &[DecompositionColumn],
    p: usize,
) -> Result<DecompMatrixModel> {
    let n = rows.first().map_or(0, Partition::size);
    let mut entries = Vec::with_capacity(rows.len());
    for nu in rows {
        let mut line = Vec::with_capacity(cols.len());
        for c in cols {
            let m = &c.partition;
            let e = if let Some(fc) = known_columns.iter().find(|fc| fc.label == *m) {
                Some(fc.get(nu))
            } else if regularize(nu, p)? == *m {
                Some(1)
            } else if !dominance_leq(nu, m)? || !dominance_leq(nu, &mullineux(m, p)?)? {
                Some(0)
            } else {
                None
            };
            line.push(e);
        }
        entries.push(line);
    }
    DecompMatrixModel::new(p, n, rows.iter().cloned().map(Label::plain).collect(), cols.to_vec(), entries)
}

fn s23(cache: Option<&FockCache>) -> ScenarioReport {
    let mut r = ScenarioReport::new("s23-block", "3-block of S_23 with core (3,1,1)");
    let (n, p) = (23, 3);
    let core = part![3, 1, 1];
    let Some(tilde) = r.try_step("tilde-basic-set", build_tilde_basic_set(n, p, &TotalOrderSpec::Lexprime)) else {
        return r;
    };
    let Some(bt) = r.try_step("tilde-basic-set", restrict_to_block(&tilde, &core)) else { return r };
    let half = bt.part1.iter().filter(|l| tilde.below.contains(l)).count();
    let counts = (bt.datum.len(), half, bt.part1.len() - half, bt.part2.len());
    r.step(
        "block-counts",
        counts == (65, 31, 31, 3),
        format!("|B̃| = {} = {} + {} + {}", counts.0, counts.1, counts.2, counts.3),
    );
    let want: BTreeSet<Partition> = s23_rho().into_iter().map(|(m, _)| m).collect();
    let got: BTreeSet<Partition> = bt.part2.iter().cloned().collect();
    r.step("fixed-part", got == want, format!("Mullineux-fixed members: {}", names(&got)));

    let Some((_, c1)) = column_from_golden(&mut r, "fock-(9,6,3,3,1,1)", FOCK_S23_963311, cache) else { return r };
    let Some((_, c2)) = column_from_golden(&mut r, "fock-(10,4,4,3,1,1)", FOCK_S23_1044311, cache) else { return r };
    let reg = regularize(&s23_rho()[0].1, p);
    r.step("regularization", reg == Ok(part![12, 6, 5]), match &reg {
            Ok(x) => format!("(12,1^11) regularizes to {x}"),
            Err(e) => e.to_string(),
        });
    let d1 = c1.get(&s23_rho()[1].1);
    let d2 = c2.get(&s23_rho()[2].1);
    r.step("rho-targets", d1 == 1 && d2 == 1, format!("d = 1 (regularization), {d1}, {d2} at the three ρ-images"));

    let rows: Vec<Partition> = s23_rho().into_iter().map(|(_, nu)| nu).collect();
    let cols = bt.datum.columns();
    let Some(model) = r.try_step("entry-model", rho_entry_model(&cols, &rows, &[c1, c2], p)) else { return r };
    let Some(swapped) = r.try_step("rho-swap", rho_swap(&bt, &s23_rho(), &model)) else { return r };
    r.step("rho-swap", true, "both ρ conditions hold; B̃¹ ⊔ ρ(B̃²) is a unitriangular basic set");

    let ready = structural_model(&swapped, p, n, &cols).and_then(|m| restrict_basic_set_to_an(&m, &swapped));
    let ok = ready.is_ok();
    r.step(
        "restriction-ready",
        ok,
        match ready {
            Ok(a) => format!("ε-stable with equivariant bijection; restricts to {} A_23 labels", a.datum.len()),
            Err(e) => e.to_string(),
        },
    );
    r.verdict = "the 3-block of A_23 with core (3,1,1) has a unitriangular basic set".into();
    r
}

// ---------------------------------------------------------------- odd weight

/// Every odd-weight block with a self-conjugate core, for p = 3 and 5 and n ≤ `max_n`.
pub fn odd_weight_sweep(max_n: usize) -> ScenarioReport {
    let mut r = ScenarioReport::new("odd-weight-sweep", "A_n blocks of odd weight");
    let mut count = 0;
    let mut failures = Vec::new();
    for p in [3, 5] {
        for n in 1..=max_n {
            let all = match blocks(n, p) {
                Ok(b) => b,
                Err(e) => {
                    failures.push(format!("n={n} p={p}: {e}"));
                    continue;
                }
            };
            for b in all {
                let b = b.descriptor;
                if !b.self_conjugate_core || b.weight % 2 == 0 {
                    continue;
                }
                count += 1;
                let split = c_gamma(&b.core, n, p).map(|c| c.len());
                if split != Ok(0) {
                    failures.push(format!("n={n} p={p} core={}: split labels {split:?}", b.core));
                }
                if let Err(e) = odd_weight_basic_set(&b, &TotalOrderSpec::Lex) {
                    failures.push(format!("n={n} p={p} core={}: {e}", b.core));
                }
            }
        }
    }
    let ok = failures.is_empty();
    r.step(
        "sweep",
        ok,
        if ok { format!("{count} blocks, no split labels, restricted data unitriangular") } else { failures.join("; ") },
    );
    r.verdict = "every odd-weight A_n block swept has a unitriangular basic set".into();
    r
}

/// The ρ-swap on a block, with the entry model built from whatever can be
/// derived: Fock columns of the Mullineux-fixed members whose ladder word
/// satisfies the extraction hypothesis, regularization, and dominance.
pub fn derived_rho_swap(
    bt: &crate::basicsets::BlockTilde,
    rho: &[(Partition, Partition)],
    cache: Option<&FockCache>,
) -> Result<(DecompMatrixModel, BasicSetDatum)> {
    let mut known = Vec::new();
    for mu in &bt.part2 {
        let w = ladder_word(mu, bt.p)?;
        if let Ok(c) = evaluate(&w, cache).and_then(|x| extract_decomposition_column(&x, mu)) {
            known.push(c);
        }
    }
    let rows: Vec<Partition> = rho.iter().map(|(_, nu)| nu.clone()).collect();
    let model = rho_entry_model(&bt.datum.columns(), &rows, &known, bt.p)?;
    let datum = rho_swap(bt, rho, &model)?;
    Ok((model, datum))
}
