//! `schubert`: equivariant Schubert calculus and Peterson Schubert calculus
//! from the command line.
//!
//! Exit status: 0 on success, 1 when a mathematical check fails, 2 on usage
//! errors, 3 when a resource cap aborts the run.

mod cache;

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use schubert_core::gkm::{type_json, GkmError, LocalizedClass, SchubertCalculus};
use schubert_core::peterson::{PetersonCalculus, PetersonError};
use schubert_core::rootsys::{CoxeterOrder, RootSysError, RootSystem, SubsetK, WeylGroup, DEFAULT_MAX_WEYL};
use schubert_core::verify::{run_suites, Suite};

#[derive(Parser, Debug)]
#[command(name = "schubert", version, about = "Localization computations on G/B and Peterson varieties")]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GlobalOpts {
    /// Root system type label, e.g. A3, B2, D4.
    #[arg(long = "type", global = true)]
    type_label: Option<String>,
    /// JSON file of the form {"cartan": [[2,-1],[-1,2]]}.
    #[arg(long, global = true)]
    cartan: Option<PathBuf>,
    #[arg(long = "out", global = true, value_enum, default_value_t = Format::Text)]
    out: Format,
    /// Directory for memoized restrictions.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    /// Worker threads for table and verify sweeps.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Abort if the Weyl group has more elements than this.
    #[arg(long = "max-weyl", global = true, default_value_t = DEFAULT_MAX_WEYL)]
    max_weyl: usize,
    /// Order of the reflections in the Coxeter elements v_K.
    #[arg(long = "coxeter-order", global = true, value_enum, default_value_t = OrderArg::Increasing)]
    coxeter_order: OrderArg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OrderArg {
    Increasing,
    Decreasing,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableKind {
    /// c_{uv}^w on G/B.
    Gkm,
    /// c_{I,J}^K on the Peterson variety.
    Peterson,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Restriction of a Schubert class to a fixed point.
    Restrict {
        system: Option<String>,
        #[arg(long = "class")]
        class: String,
        #[arg(long)]
        at: String,
    },
    /// Structure constants c_{uv}^w.
    Mult {
        system: Option<String>,
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
    },
    /// Expand a class (JSON file) in the Schubert basis, or integrate it.
    Expand {
        system: Option<String>,
        #[arg(long = "class-file")]
        class_file: PathBuf,
        /// Print the pushforward to a point instead of the expansion.
        #[arg(long)]
        integrate: bool,
    },
    /// Peterson structure constants c_{I,J}^K.
    PetersonMult {
        system: Option<String>,
        #[arg(long = "I", allow_hyphen_values = true)]
        i: String,
        #[arg(long = "J", allow_hyphen_values = true)]
        j: String,
    },
    /// Coefficients b_w^K of the pullback of a Schubert class.
    Pullback {
        system: Option<String>,
        #[arg(long)]
        w: String,
    },
    /// Run verification suites.
    Verify {
        system: Option<String>,
        /// positivity, gkm, roundtrip, triangularity, reduced-words,
        /// support, closed-form, consistency, or all.
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Full structure-constant table.
    Table {
        system: Option<String>,
        #[arg(long, value_enum, default_value_t = TableKind::Gkm)]
        kind: TableKind,
    },
}

impl Command {
    fn system(&self) -> Option<&str> {
        match self {
            Command::Restrict { system, .. }
            | Command::Mult { system, .. }
            | Command::Expand { system, .. }
            | Command::PetersonMult { system, .. }
            | Command::Pullback { system, .. }
            | Command::Verify { system, .. }
            | Command::Table { system, .. } => system.as_deref(),
        }
    }
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Math(String),
    Cap(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Math(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Cap(_) => 3,
        }
    }
}

impl From<RootSysError> for CliError {
    fn from(e: RootSysError) -> Self {
        match e {
            RootSysError::WeylCapExceeded { .. } | RootSysError::NotFiniteType(_) => CliError::Cap(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<GkmError> for CliError {
    fn from(e: GkmError) -> Self {
        match e {
            GkmError::NotInSpan(_)
            | GkmError::NonPolynomialResult(_)
            | GkmError::PositivityViolation { .. }
            | GkmError::NonIntegral { .. } => CliError::Math(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<PetersonError> for CliError {
    fn from(e: PetersonError) -> Self {
        match e {
            PetersonError::NotInSpan(_)
            | PetersonError::PositivityViolation { .. }
            | PetersonError::ShapeViolation { .. } => CliError::Math(e.to_string()),
            PetersonError::RootSys(r) => r.into(),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

/// Stdout payload plus whether a verification check failed.
struct Outcome {
    body: String,
    failed: bool,
}

impl Outcome {
    fn ok(body: String) -> Self {
        Outcome { body, failed: false }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = match cli.global.jobs {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build() {
            Ok(pool) => pool.install(|| run(&cli)),
            Err(e) => Err(CliError::Usage(e.to_string())),
        },
        None => run(&cli),
    };
    match result {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.body.as_bytes());
            let _ = stdout.flush();
            if out.failed {
                eprintln!("schubert: verification failed");
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            let (CliError::Usage(m) | CliError::Math(m) | CliError::Cap(m)) = &e;
            eprintln!("schubert: {m}");
            ExitCode::from(e.code())
        }
    }
}

fn load_root_system(cli: &Cli) -> Result<RootSystem, CliError> {
    let label = cli.command.system().or(cli.global.type_label.as_deref());
    match (label, &cli.global.cartan) {
        (Some(_), Some(_)) => Err(CliError::Usage("give either a type label or --cartan, not both".into())),
        (Some(l), None) => Ok(RootSystem::from_label(l)?),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
            let v: Value = serde_json::from_str(&text)
                .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
            let cartan: Vec<Vec<i64>> = v
                .get("cartan")
                .cloned()
                .and_then(|c| serde_json::from_value(c).ok())
                .ok_or_else(|| CliError::Usage(format!("{}: expected {{\"cartan\": [[...]]}}", path.display())))?;
            Ok(RootSystem::from_cartan(cartan)?)
        }
        (None, None) => Err(CliError::Usage("no root system given (type label or --cartan)".into())),
    }
}

struct Engines {
    group: Arc<WeylGroup>,
    schubert: Arc<SchubertCalculus>,
    order: CoxeterOrder,
    cached: bool,
}

impl Engines {
    fn peterson(&self) -> Result<PetersonCalculus, CliError> {
        Ok(if self.cached {
            PetersonCalculus::shared(self.schubert.clone(), self.order)?
        } else {
            PetersonCalculus::with_order(self.group.clone(), self.order)?
        })
    }
}

fn build(cli: &Cli) -> Result<Engines, CliError> {
    let rs = Arc::new(load_root_system(cli)?);
    let group = Arc::new(WeylGroup::new(rs.clone(), cli.global.max_weyl)?);
    let mut schubert = SchubertCalculus::new(group.clone());
    if let Some(dir) = &cli.global.cache {
        let store = cache::DiskStore::new(dir, &rs)
            .map_err(|e| CliError::Usage(format!("cache directory {}: {e}", dir.display())))?;
        schubert = schubert.with_store(Arc::new(store));
    }
    let order = match cli.global.coxeter_order {
        OrderArg::Increasing => CoxeterOrder::Increasing,
        OrderArg::Decreasing => CoxeterOrder::Decreasing,
    };
    Ok(Engines {
        group,
        schubert: Arc::new(schubert),
        order,
        cached: cli.global.cache.is_some(),
    })
}

fn parse_subset(text: &str, rank: usize) -> Result<SubsetK, CliError> {
    let k = SubsetK::parse(text).map_err(CliError::Usage)?;
    if !k.is_subset_of(SubsetK::full(rank)) {
        return Err(CliError::Usage(format!("subset {{{k}}} exceeds rank {rank}")));
    }
    Ok(k)
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let eng = build(cli)?;
    let rs = eng.group.root_system().clone();
    let g = &eng.group;
    let fmt = cli.global.out;
    let parse = |s: &str| -> Result<_, CliError> {
        let w = rs.parse_element(s)?;
        g.index_of(&w).ok_or_else(|| CliError::Usage(format!("{s} is not in the Weyl group")))
    };
    let word = |w: usize| g.element(w).word_string();

    match &cli.command {
        Command::Restrict { class, at, .. } => {
            let (v, w) = (parse(class)?, parse(at)?);
            let p = eng.schubert.restriction(v, w);
            Ok(Outcome::ok(match fmt {
                Format::Text => format!("{p}\n"),
                Format::Csv => csv_table(&["v", "w", "restriction"], vec![vec![word(v), word(w), p.to_string()]]),
                Format::Json => json_line(json!({
                    "type": type_json(&rs),
                    "v": word(v),
                    "w": word(w),
                    "restriction": p.to_json(),
                    "text": p.to_string(),
                })),
            }))
        }
        Command::Mult { u, v, .. } => {
            let (u, v) = (parse(u)?, parse(v)?);
            let row = eng.schubert.structure_constants_at(u, v)?;
            let rows = row
                .iter()
                .map(|(&w, c)| (vec![word(u), word(v), word(w), c.to_string()], c.to_json()))
                .collect();
            Ok(Outcome::ok(render_rows(fmt, &rs, &["u", "v", "w", "coefficient"], rows)))
        }
        Command::Expand { class_file, integrate, .. } => {
            let text = std::fs::read_to_string(class_file)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", class_file.display())))?;
            let v: Value = serde_json::from_str(&text)
                .map_err(|e| CliError::Usage(format!("{}: {e}", class_file.display())))?;
            let class = LocalizedClass::from_json(g.clone(), &v)?;
            if *integrate {
                let p = eng.schubert.integrate(&class)?;
                return Ok(Outcome::ok(match fmt {
                    Format::Text => format!("{p}\n"),
                    Format::Csv => csv_table(&["integral"], vec![vec![p.to_string()]]),
                    Format::Json => json_line(json!({"type": type_json(&rs), "integral": p.to_json(), "text": p.to_string()})),
                }));
            }
            let coeffs = eng.schubert.expand_in_schubert_basis(&class)?;
            let rows = coeffs
                .iter()
                .map(|(&w, c)| (vec![word(w), c.to_string()], c.to_json()))
                .collect();
            Ok(Outcome::ok(render_rows(fmt, &rs, &["w", "coefficient"], rows)))
        }
        Command::PetersonMult { i, j, .. } => {
            let (i, j) = (parse_subset(i, rs.rank())?, parse_subset(j, rs.rank())?);
            let exp = eng.peterson()?.peterson_structure_constants(i, j)?;
            let rows = exp
                .iter()
                .map(|(k, c)| (vec![i.to_string(), j.to_string(), k.to_string(), c.to_string()], c.to_json()))
                .collect();
            Ok(Outcome::ok(render_rows(fmt, &rs, &["I", "J", "K", "coefficient"], rows)))
        }
        Command::Pullback { w, .. } => {
            let w = parse(w)?;
            let exp = eng.peterson()?.pullback_expansion_at(w)?;
            let rows = exp
                .iter()
                .map(|(k, c)| (vec![word(w), k.to_string(), c.to_string()], c.to_json()))
                .collect();
            Ok(Outcome::ok(render_rows(fmt, &rs, &["w", "K", "coefficient"], rows)))
        }
        Command::Verify { suite, .. } => {
            let suites = Suite::parse(suite).ok_or_else(|| CliError::Usage(format!("unknown suite {suite:?}")))?;
            let report = run_suites(&eng.schubert, &eng.peterson()?, &suites);
            let body = match fmt {
                Format::Text => report.to_text(),
                Format::Json => json_line(report.to_json()),
                Format::Csv => csv_table(
                    &["suite", "checks", "failures", "status"],
                    report
                        .suites
                        .iter()
                        .map(|s| {
                            let status = if s.skipped.is_some() {
                                "skip"
                            } else if s.passed() {
                                "pass"
                            } else {
                                "fail"
                            };
                            vec![s.suite.name().into(), s.checks.to_string(), s.failures.len().to_string(), status.into()]
                        })
                        .collect(),
                ),
            };
            Ok(Outcome {
                body,
                failed: !report.passed(),
            })
        }
        Command::Table { kind: TableKind::Gkm, .. } => {
            let table = eng.schubert.structure_table()?;
            let rows = table
                .entries
                .iter()
                .map(|(&(u, v, w), c)| (vec![word(u), word(v), word(w), c.to_string()], c.to_json()))
                .collect();
            Ok(Outcome::ok(render_rows(fmt, &rs, &["u", "v", "w", "coefficient"], rows)))
        }
        Command::Table {
            kind: TableKind::Peterson,
            ..
        } => {
            let table = eng.peterson()?.structure_table()?;
            let rows = table
                .iter()
                .map(|(i, j, k, c)| (vec![i.to_string(), j.to_string(), k.to_string(), c.to_string()], c.to_json()))
                .collect();
            Ok(Outcome::ok(render_rows(fmt, &rs, &["I", "J", "K", "coefficient"], rows)))
        }
    }
}

/// Rows sorted lexicographically by their text fields, rendered in `fmt`.
/// Each row carries the JSON form of its coefficient.
fn render_rows(fmt: Format, rs: &RootSystem, header: &[&str], mut rows: Vec<(Vec<String>, Value)>) -> String {
    rows.sort_by(|a, b| a.0.cmp(&b.0));
    match fmt {
        Format::Csv => csv_table(header, rows.into_iter().map(|r| r.0).collect()),
        Format::Text => {
            let mut out = String::new();
            let n = header.len();
            for (fields, _) in &rows {
                let keys: Vec<String> = header[..n - 1]
                    .iter()
                    .zip(fields)
                    .map(|(h, f)| format!("{h}={{{f}}}"))
                    .collect();
                let _ = writeln!(out, "{}  {}", keys.join(" "), fields[n - 1]);
            }
            out
        }
        Format::Json => {
            let rows: Vec<Value> = rows
                .into_iter()
                .map(|(fields, terms)| {
                    let mut obj = serde_json::Map::new();
                    for (h, f) in header.iter().zip(fields) {
                        obj.insert(h.to_string(), Value::String(f));
                    }
                    obj.insert("terms".into(), terms);
                    Value::Object(obj)
                })
                .collect();
            json_line(json!({"type": type_json(rs), "rows": rows}))
        }
    }
}

/// RFC 4180 CSV with a header row and LF line endings.
fn csv_table(header: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

fn json_line(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("serializable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_quotes_fields_with_commas() {
        let out = csv_table(&["K", "c"], vec![vec!["1,2".into(), "2".into()], vec!["".into(), "t^1".into()]]);
        assert_eq!(out, "K,c\n\"1,2\",2\n,t^1\n");
    }

    #[test]
    fn rows_are_sorted_in_every_format() {
        let rs = RootSystem::from_label("A1").unwrap();
        let rows = vec![
            (vec!["s1".to_string(), "1".to_string()], json!(1)),
            (vec!["e".to_string(), "a1".to_string()], json!(2)),
        ];
        assert_eq!(render_rows(Format::Csv, &rs, &["w", "c"], rows.clone()), "w,c\ne,a1\ns1,1\n");
        assert_eq!(render_rows(Format::Text, &rs, &["w", "c"], rows.clone()), "w={e}  a1\nw={s1}  1\n");
        let v: Value = serde_json::from_str(&render_rows(Format::Json, &rs, &["w", "c"], rows)).unwrap();
        assert_eq!(v["type"], "A1");
        assert_eq!(v["rows"][0]["w"], "e");
        assert_eq!(v["rows"][1]["terms"], 1);
    }

    #[test]
    fn error_classes_map_to_exit_codes() {
        assert_eq!(CliError::from(RootSysError::WeylCapExceeded { cap: 1 }).code(), 3);
        assert_eq!(CliError::from(RootSysError::UnknownType("Q".into())).code(), 2);
        assert_eq!(CliError::from(GkmError::NotInSpan("x".into())).code(), 1);
        assert_eq!(CliError::from(PetersonError::NotTypeA).code(), 2);
    }

    #[test]
    fn subsets_are_bounded_by_rank() {
        assert_eq!(parse_subset("1,2", 2).unwrap(), SubsetK::of(&[1, 2]));
        assert!(parse_subset("3", 2).is_err());
        assert!(parse_subset("x", 2).is_err());
    }
}
