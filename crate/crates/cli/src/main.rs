use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use modrep_core::basicsets::{
    build_tilde_basic_set, is_unitriangularisable, restrict_to_block, unitriangular_violations, verify_basic_set,
    zero_count_condition,
};
use modrep_core::clifford::{induce_basic_set_to_sn, restrict_basic_set_to_an};
use modrep_core::fock::{apply_word, extract_decomposition_column, ladder_word, FockCache, FockVector, OperatorWord};
use modrep_core::matrix::{BasicSetDatum, DecompMatrixModel, TotalOrderSpec};
use modrep_core::mullineux::{mullineux, mullineux_alt, mullineux_fixed};
use modrep_core::partition::{
    core_quotient, p_core, partitions_of, regularize, Partition,
};
use modrep_core::scenarios::{derived_rho_swap, run_scenario, SCENARIOS};

#[derive(Parser)]
#[command(name = "modrep", version, about = "Modular representation combinatorics for S_n and A_n")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    /// Directory for cached Fock-space computations (MODREP_CACHE wins).
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Subcommand)]
enum Cmd {
    /// Partition combinatorics.
    #[command(subcommand)]
    Partition(PartitionCmd),
    /// The Mullineux map.
    #[command(subcommand)]
    Mullineux(MullineuxCmd),
    /// Level-1 Fock space.
    #[command(subcommand)]
    Fock(FockCmd),
    /// Basic sets of decomposition matrices.
    #[command(subcommand)]
    Basicset(BasicsetCmd),
    /// Run a named end-to-end computation, or `all`.
    Scenario { name: String },
}

#[derive(Args)]
struct Lambda {
    /// Partition, e.g. 10,4,4,1 (empty string for ∅).
    #[arg(allow_hyphen_values = true)]
    lambda: String,
}

#[derive(Subcommand)]
enum PartitionCmd {
    Conjugate(Lambda),
    /// p-core, p-quotient and weight.
    Core {
        #[command(flatten)]
        l: Lambda,
        #[arg(long)]
        p: usize,
    },
    Quotient {
        #[command(flatten)]
        l: Lambda,
        #[arg(long)]
        p: usize,
    },
    /// Hook lengths and diagonal hooks.
    Hooks(Lambda),
    Regularize {
        #[command(flatten)]
        l: Lambda,
        #[arg(long)]
        p: usize,
    },
    /// All partitions of n, optionally only the p-regular ones.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        self_conjugate: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Algorithm {
    Symbol,
    Crystal,
}

#[derive(Subcommand)]
enum MullineuxCmd {
    Map {
        #[command(flatten)]
        l: Lambda,
        #[arg(long)]
        p: usize,
        #[arg(long, value_enum, default_value = "symbol")]
        algorithm: Algorithm,
    },
    /// Mullineux-fixed p-regular partitions of n, optionally in one block.
    Fixed {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        #[arg(long, allow_hyphen_values = true)]
        core: Option<String>,
    },
}

#[derive(Subcommand)]
enum FockCmd {
    /// Apply a word "i:a,i:a,..." (left to right as written) to the vacuum.
    ApplyWord {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        word: String,
    },
    /// The ladder word used for a p-regular partition.
    LadderWord {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        lambda: String,
    },
    /// One column of the decomposition matrix, read off at v = 1.
    DecompColumn {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        lambda: String,
        /// Word to use instead of the ladder word.
        #[arg(long)]
        word: Option<String>,
    },
}

#[derive(Args)]
struct MatrixArgs {
    /// Matrix file (JSON, or CSV when the name ends in .csv).
    #[arg(long)]
    matrix: PathBuf,
    /// Modulus for CSV input.
    #[arg(long)]
    p: Option<usize>,
}

#[derive(Subcommand)]
enum BasicsetCmd {
    /// The basic set B̃ of S_n, optionally cut down to one block.
    BuildTilde {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        #[arg(long, default_value = "lex")]
        order: String,
        #[arg(long, allow_hyphen_values = true)]
        core: Option<String>,
    },
    /// Check a basic-set datum against a matrix.
    Verify {
        #[command(flatten)]
        m: MatrixArgs,
        #[arg(long)]
        datum: PathBuf,
    },
    /// Replace the Mullineux-fixed members of a block by their ρ-images.
    Swap {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        #[arg(long, default_value = "lex")]
        order: String,
        #[arg(long, allow_hyphen_values = true)]
        core: String,
        /// Pairs "mu>nu" separated by ';', e.g. "12,6,5>12,1,1,...".
        #[arg(long)]
        rho: String,
    },
    /// Whether rows and columns of a square complete matrix can be
    /// permuted into lower unitriangular form.
    Unitriangularisable {
        #[command(flatten)]
        m: MatrixArgs,
    },
    /// Restrict an S_n basic set to A_n.
    Restrict {
        #[command(flatten)]
        m: MatrixArgs,
        #[arg(long)]
        datum: PathBuf,
    },
    /// Induce an A_n basic set to S_n.
    Induce {
        #[command(flatten)]
        m: MatrixArgs,
        #[arg(long)]
        datum: PathBuf,
    },
}

/// Exit 1: the input was understood but the computation failed or the
/// verdict is negative. Exit 2: the input was not understood.
enum Failure {
    Domain(String),
    Usage(String),
}

impl From<modrep_core::Error> for Failure {
    fn from(e: modrep_core::Error) -> Self {
        use modrep_core::Error as E;
        match e {
            E::Parse(_) | E::NotAPartition(_) | E::Word(_) => Failure::Usage(e.to_string()),
            E::Io(_) => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

type Res<T> = Result<T, Failure>;

/// A result in every format it supports.
struct Output {
    json: Value,
    plain: String,
    csv: Option<String>,
    ok: bool,
}

impl Output {
    fn new(json: Value, plain: impl Into<String>) -> Self {
        Output { json, plain: plain.into(), csv: None, ok: true }
    }

    fn with_csv(mut self, csv: String) -> Self {
        self.csv = Some(csv);
        self
    }
}

fn to_json<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn parse_partition(s: &str) -> Res<Partition> {
    s.parse().map_err(|_| Failure::Usage(format!("invalid partition literal {s:?}")))
}

fn parse_order(s: &str) -> Res<TotalOrderSpec> {
    s.parse().map_err(|_| Failure::Usage(format!("unknown order {s:?}; use lex or lexprime")))
}

fn list(ls: &[Partition]) -> String {
    ls.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n")
}

fn load_matrix(m: &MatrixArgs) -> Res<DecompMatrixModel> {
    if m.matrix.extension().is_some_and(|e| e == "csv") && m.p.is_none() {
        return Err(Failure::Usage("CSV matrices need --p".into()));
    }
    let text = std::fs::read_to_string(&m.matrix)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", m.matrix.display())))?;
    let parsed = if m.matrix.extension().is_some_and(|e| e == "csv") {
        DecompMatrixModel::from_csv(&text, m.p.unwrap_or(0))
    } else {
        DecompMatrixModel::from_json(&text)
    };
    parsed.map_err(|e| Failure::Usage(format!("{}: {e}", m.matrix.display())))
}

fn load_datum(path: &Path) -> Res<BasicSetDatum> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    let d: BasicSetDatum =
        serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Ok(BasicSetDatum::new(d.set, d.order, d.psi)?)
}

fn cache(cli: &Cli) -> Option<FockCache> {
    FockCache::from_env_or(cli.cache.clone())
}

fn evaluate(w: &OperatorWord, cache: Option<&FockCache>) -> Res<FockVector> {
    Ok(match cache {
        Some(c) => c.apply_word(w)?,
        None => apply_word(w),
    })
}

fn fock_plain(x: &FockVector) -> String {
    x.terms().map(|(l, c)| format!("{c}  {l}")).collect::<Vec<_>>().join("\n")
}

fn partition_cmd(c: &PartitionCmd) -> Res<Output> {
    Ok(match c {
        PartitionCmd::Conjugate(l) => {
            let c = parse_partition(&l.lambda)?.conjugate();
            Output::new(to_json(&c), c.to_string())
        }
        PartitionCmd::Core { l, p } => {
            let cq = core_quotient(&parse_partition(&l.lambda)?, *p)?;
            let weight = cq.quotient.size();
            let plain = format!("core {}\nquotient {}\nweight {weight}", cq.core, fmt_quotient(&cq.quotient.components));
            Output::new(json!({"core": cq.core, "quotient": cq.quotient.components, "weight": weight}), plain)
        }
        PartitionCmd::Quotient { l, p } => {
            let q = core_quotient(&parse_partition(&l.lambda)?, *p)?.quotient;
            Output::new(to_json(&q.components), fmt_quotient(&q.components))
        }
        PartitionCmd::Hooks(l) => {
            let l = parse_partition(&l.lambda)?;
            let h = l.hook_lengths();
            let plain = h.iter().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")).collect::<Vec<_>>();
            Output::new(json!({"hooks": h, "diagonal": l.diagonal_hooks()}), plain.join("\n"))
        }
        PartitionCmd::Regularize { l, p } => {
            let r = regularize(&parse_partition(&l.lambda)?, *p)?;
            Output::new(to_json(&r), r.to_string())
        }
        PartitionCmd::Enumerate { n, p, self_conjugate } => {
            if let Some(p) = p {
                if *p < 2 {
                    return Err(Failure::Domain(format!("modulus must be at least 2, got {p}")));
                }
            }
            let all: Vec<Partition> = partitions_of(*n)
                .filter(|l| p.is_none_or(|p| l.is_p_regular(p)))
                .filter(|l| !self_conjugate || l.is_self_conjugate())
                .collect();
            Output::new(to_json(&all), list(&all))
        }
    })
}

fn fmt_quotient(q: &[Partition]) -> String {
    format!("({})", q.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))
}

fn mullineux_cmd(c: &MullineuxCmd) -> Res<Output> {
    Ok(match c {
        MullineuxCmd::Map { l, p, algorithm } => {
            let l = parse_partition(&l.lambda)?;
            let m = match algorithm {
                Algorithm::Symbol => mullineux(&l, *p)?,
                Algorithm::Crystal => mullineux_alt(&l, *p)?,
            };
            Output::new(to_json(&m), m.to_string())
        }
        MullineuxCmd::Fixed { n, p, core } => {
            let mut fixed = mullineux_fixed(*n, *p)?;
            if let Some(c) = core {
                let c = parse_partition(c)?;
                let mut keep = Vec::new();
                for m in fixed {
                    if p_core(&m, *p)? == c {
                        keep.push(m);
                    }
                }
                fixed = keep;
            }
            Output::new(to_json(&fixed), list(&fixed))
        }
    })
}

fn fock_cmd(c: &FockCmd, cache: Option<&FockCache>) -> Res<Output> {
    Ok(match c {
        FockCmd::ApplyWord { p, word } => {
            let w = OperatorWord::parse(*p, word)?;
            let x = evaluate(&w, cache)?;
            Output::new(to_json(&x), fock_plain(&x))
        }
        FockCmd::LadderWord { p, lambda } => {
            let w = ladder_word(&parse_partition(lambda)?, *p)?;
            Output::new(json!({"p": p, "word": w.to_string()}), w.to_string())
        }
        FockCmd::DecompColumn { p, lambda, word } => {
            let l = parse_partition(lambda)?;
            let w = match word {
                Some(s) => OperatorWord::parse(*p, s)?,
                None => ladder_word(&l, *p)?,
            };
            let x = evaluate(&w, cache)?;
            let col = extract_decomposition_column(&x, &l)?;
            let plain = col.entries.iter().rev().map(|(m, d)| format!("{d}  {m}")).collect::<Vec<_>>().join("\n");
            let mut csv = String::from("partition,d\n");
            for (m, d) in col.entries.iter().rev() {
                csv.push_str(&format!("\"{m}\",{d}\n"));
            }
            Output::new(to_json(&col), plain).with_csv(csv)
        }
    })
}

fn parse_rho(s: &str) -> Res<Vec<(Partition, Partition)>> {
    s.split(';')
        .filter(|x| !x.trim().is_empty())
        .map(|pair| {
            let (a, b) = pair.split_once('>').ok_or_else(|| Failure::Usage(format!("bad ρ pair {pair:?}; use mu>nu")))?;
            Ok((parse_partition(a)?, parse_partition(b)?))
        })
        .collect()
}

fn basicset_cmd(c: &BasicsetCmd, cache: Option<&FockCache>) -> Res<Output> {
    Ok(match c {
        BasicsetCmd::BuildTilde { n, p, order, core } => {
            let t = build_tilde_basic_set(*n, *p, &parse_order(order)?)?;
            let datum = match core {
                Some(c) => {
                    let bt = restrict_to_block(&t, &parse_partition(c)?)?;
                    let plain = datum_plain(&bt.datum);
                    return Ok(Output::new(to_json(&bt), plain));
                }
                None => &t.datum,
            };
            Output::new(to_json(&t), datum_plain(datum))
        }
        BasicsetCmd::Verify { m, datum } => {
            let d = load_matrix(m)?;
            let datum = load_datum(datum)?;
            let complete = d.is_complete();
            let basic = if complete { Some(verify_basic_set(&d, &datum.set)?) } else { None };
            let violations = unitriangular_violations(&d, &datum, false)?;
            let unknown = d.unknown_count();
            let unitriangular = violations.is_empty();
            let plain = format!(
                "basic set: {}\nunitriangular on known entries: {unitriangular}\nunknown entries: {unknown}{}",
                basic.map_or("undetermined".into(), |b| b.to_string()),
                violations.iter().map(|v| format!("\n  {v}")).collect::<String>()
            );
            let mut out = Output::new(
                json!({"basic_set": basic, "unitriangular": unitriangular, "unknown_entries": unknown, "violations": violations}),
                plain,
            );
            out.ok = unitriangular && basic != Some(false);
            out
        }
        BasicsetCmd::Swap { n, p, order, core, rho } => {
            let t = build_tilde_basic_set(*n, *p, &parse_order(order)?)?;
            let bt = restrict_to_block(&t, &parse_partition(core)?)?;
            let (model, datum) = derived_rho_swap(&bt, &parse_rho(rho)?, cache)?;
            Output::new(json!({"datum": datum, "entry_model": model}), datum_plain(&datum))
        }
        BasicsetCmd::Unitriangularisable { m } => {
            let d = load_matrix(m)?;
            let e = d.complete_entries()?;
            let w = is_unitriangularisable(&e)?;
            let zero = zero_count_condition(&e);
            let plain = match &w {
                Some(w) => format!("true\nrows {:?}\ncols {:?}", w.rows, w.cols),
                None => format!("false\nzero-count condition {}", if zero { "holds" } else { "fails" }),
            };
            Output::new(json!({"unitriangularisable": w.is_some(), "witness": w, "zero_count_condition": zero}), plain)
        }
        BasicsetCmd::Restrict { m, datum } => {
            let r = restrict_basic_set_to_an(&load_matrix(m)?, &load_datum(datum)?)?;
            Output::new(to_json(&r), r.model.to_string()).with_csv(r.model.to_csv()?)
        }
        BasicsetCmd::Induce { m, datum } => {
            let r = induce_basic_set_to_sn(&load_matrix(m)?, &load_datum(datum)?)?;
            Output::new(to_json(&r), r.model.to_string()).with_csv(r.model.to_csv()?)
        }
    })
}

fn datum_plain(d: &BasicSetDatum) -> String {
    d.set
        .iter()
        .rev()
        .map(|b| format!("{b} -> {}", d.psi_of(b).expect("datum is a bijection")))
        .collect::<Vec<_>>()
        .join("\n")
}

fn scenario_cmd(name: &str, cache: Option<&FockCache>) -> Res<Output> {
    let names: Vec<&str> = if name == "all" { SCENARIOS.to_vec() } else { vec![name] };
    let mut reports = Vec::new();
    for n in names {
        reports.push(run_scenario(n, cache).map_err(|e| Failure::Usage(e.to_string()))?);
    }
    let ok = reports.iter().all(|r| r.passed());
    let plain = reports.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n\n");
    let json = if reports.len() == 1 { to_json(&reports[0]) } else { to_json(&reports) };
    let mut out = Output::new(json, plain);
    out.ok = ok;
    Ok(out)
}

fn run(cli: &Cli) -> Res<Output> {
    let cache = cache(cli);
    match &cli.cmd {
        Cmd::Partition(c) => partition_cmd(c),
        Cmd::Mullineux(c) => mullineux_cmd(c),
        Cmd::Fock(c) => fock_cmd(c, cache.as_ref()),
        Cmd::Basicset(c) => basicset_cmd(c, cache.as_ref()),
        Cmd::Scenario { name } => scenario_cmd(name, cache.as_ref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let text = match cli.format {
                Format::Json => serde_json::to_string_pretty(&out.json).expect("valid JSON"),
                Format::Plain => out.plain,
                Format::Csv => match out.csv {
                    Some(c) => c.trim_end().to_string(),
                    None => {
                        eprintln!("error: CSV output is only available for matrices and columns");
                        return ExitCode::from(2);
                    }
                },
            };
            println!("{text}");
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Domain(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}
