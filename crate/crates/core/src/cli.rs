//! The `qcat` command line.
//!
//! ```text
//! qcat enumerate --object dyck --type B --n 3 --format csv
//! qcat poly --object ideal --type B --n 2 --stat area
//! echo "e2-e1 e3-e2" | qcat map --via phiA --n 3
//! qcat verify --all
//! qcat selftest
//! ```
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error.

use std::ffi::OsString;
use std::io::{BufRead, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bijmaps::{phi, psi_a, psi_b, verify_phi_theorems, verify_psi_theorems, Report};
use crate::noncrossing::{
    d4_counterexample, nc_elements, perm_to_partition_a, perm_to_partition_b, rev_nc,
};
use crate::paths::{
    area_a, area_b, enumerate_a, enumerate_b, maj_a, maj_b, DyckWordA, DyckWordB, MAX_ENUM_A,
    MAX_ENUM_B,
};
use crate::qseries::{Family, GroupType, QPoly};
use crate::rootposets::{ideal_maj, ideals, ideals_unguarded, OrderIdeal};
use crate::signedperm::{
    coxeter_element, imaj, length_s, length_t_typed, maj, CoxeterVariant, SignedPerm,
};
use crate::sortable::{enumerate_sortables, enumerate_sortables_unguarded, standard_c_word};
use crate::{selftest, Error, Result};

#[derive(Parser, Debug)]
#[command(
    name = "qcat",
    version,
    about = "q-Catalan combinatorics for types A, B and D"
)]
struct Cli {
    /// Worker threads for enumeration and verification (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print every object of a kind, one per line.
    Enumerate(ObjectArgs),
    /// Generating polynomial of a statistic.
    Poly(ObjectArgs),
    /// Apply a bijection to one object read from stdin.
    Map(MapArgs),
    /// Run theorem verifiers.
    Verify(VerifyArgs),
    /// Check the built-in worked examples.
    Selftest {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args, Debug)]
struct ObjectArgs {
    #[arg(long, value_enum)]
    object: Object,
    #[arg(long = "type", value_enum, ignore_case = true, default_value_t = TypeArg::A)]
    family: TypeArg,
    /// Number of letters (`A_{n-1}`, `B_n`, `D_n`).
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum)]
    stat: Option<Stat>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Skip the rank guards.
    #[arg(long = "unsafe")]
    unguarded: bool,
}

#[derive(Args, Debug)]
struct MapArgs {
    #[arg(long, value_enum)]
    via: Via,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_enum, required_unless_present = "all")]
    via: Option<Via>,
    #[arg(long, required_unless_present = "all")]
    n: Option<usize>,
    /// Every verifier at every rank up to its default bound.
    #[arg(long)]
    all: bool,
    /// Lower the rank bound used by `--all`.
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long = "unsafe")]
    unguarded: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TypeArg {
    A,
    B,
    D,
}

impl From<TypeArg> for Family {
    fn from(t: TypeArg) -> Family {
        match t {
            TypeArg::A => Family::A,
            TypeArg::B => Family::B,
            TypeArg::D => Family::D,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Object {
    Dyck,
    Ideal,
    Nc,
    Revnc,
    Sortable,
    Partition,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Stat {
    Area,
    Maj,
    Ls,
    Lt,
    Majimaj,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Via {
    #[value(name = "phiA")]
    PhiA,
    #[value(name = "phiB")]
    PhiB,
    #[value(name = "psiA")]
    PsiA,
    #[value(name = "psiB")]
    PsiB,
}

impl Via {
    fn family(self) -> Family {
        match self {
            Via::PhiA | Via::PsiA => Family::A,
            Via::PhiB | Via::PsiB => Family::B,
        }
    }
}

/// Outcome of a command, mapped to an exit code by [`run`].
enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(format!("i/o error: {e}"))
    }
}

type Outcome = std::result::Result<(), Failure>;

/// One enumerated object with its serialized forms.
enum Item {
    Dyck(DyckWordA),
    DyckB(DyckWordB),
    Ideal(OrderIdeal),
    Perm(SignedPerm),
    Partition(String, SignedPerm),
}

impl Item {
    fn text(&self) -> String {
        match self {
            Item::Dyck(d) => d.to_string(),
            Item::DyckB(d) => d.to_string(),
            Item::Ideal(i) => i.to_string(),
            Item::Perm(p) => p.to_string(),
            Item::Partition(s, _) => s.clone(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Item::Dyck(d) => json!({ "steps": d.to_string() }),
            Item::DyckB(d) => json!({ "steps": d.to_string() }),
            Item::Ideal(i) => json!({ "roots": i.root_strings() }),
            Item::Perm(p) => json!({ "oneline": p.oneline() }),
            Item::Partition(s, _) => {
                json!({ "blocks": serde_json::from_str::<Value>(s).unwrap_or(Value::Null) })
            }
        }
    }

    fn stat(&self, stat: Stat, family: Family) -> Result<usize> {
        let unsupported = || {
            Err(Error::Domain(format!(
                "statistic {stat:?} is not defined for {}",
                self.kind()
            )))
        };
        match (self, stat) {
            (Item::Dyck(d), Stat::Area) => Ok(area_a(d)),
            (Item::Dyck(d), Stat::Maj) => Ok(maj_a(d)),
            (Item::DyckB(d), Stat::Area) => Ok(area_b(d)),
            (Item::DyckB(d), Stat::Maj) => Ok(maj_b(d)),
            (Item::Ideal(i), Stat::Area) => Ok(i.len()),
            (Item::Ideal(i), Stat::Maj) => ideal_maj(i),
            (Item::Perm(p) | Item::Partition(_, p), s) => match s {
                Stat::Ls => length_s(p, family),
                Stat::Lt => length_t_typed(p, family),
                Stat::Maj => maj(p, family),
                Stat::Majimaj => Ok(maj(p, family)? + imaj(p, family)?),
                Stat::Area => unsupported(),
            },
            _ => unsupported(),
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            Item::Dyck(_) | Item::DyckB(_) => "Dyck paths",
            Item::Ideal(_) => "ideals",
            Item::Perm(_) => "group elements",
            Item::Partition(..) => "set partitions",
        }
    }

    /// The two columns of the CSV form.
    fn default_stats(&self) -> (Stat, Stat) {
        match self {
            Item::Dyck(_) | Item::DyckB(_) | Item::Ideal(_) => (Stat::Area, Stat::Maj),
            Item::Perm(_) | Item::Partition(..) => (Stat::Ls, Stat::Majimaj),
        }
    }
}

fn nc_guard(family: Family) -> usize {
    match family {
        Family::A => 8,
        Family::B => 6,
        Family::D => 5,
    }
}

fn check_guard(what: &'static str, max: usize, n: usize, unguarded: bool) -> Result<()> {
    if !unguarded && n > max {
        return Err(Error::Size { what, max, got: n });
    }
    Ok(())
}

fn enumerate_items(args: &ObjectArgs) -> Result<Vec<Item>> {
    let family: Family = args.family.into();
    let n = args.n;
    let t = GroupType::on_letters(family, n);
    let items = match args.object {
        Object::Dyck => match family {
            Family::A => {
                check_guard("dyck(A)", MAX_ENUM_A, n, args.unguarded)?;
                enumerate_a(n).into_iter().map(Item::Dyck).collect()
            }
            Family::B => {
                check_guard("dyck(B)", MAX_ENUM_B, n, args.unguarded)?;
                enumerate_b(n).into_iter().map(Item::DyckB).collect()
            }
            Family::D => return Err(Error::Domain("type D has no Dyck paths".into())),
        },
        Object::Ideal => {
            let all = if args.unguarded {
                ideals_unguarded(t)
            } else {
                ideals(t)?
            };
            all.into_iter().map(Item::Ideal).collect()
        }
        Object::Nc | Object::Revnc | Object::Partition => {
            check_guard("nc", nc_guard(family), n, args.unguarded)?;
            let c = coxeter_element(family, n, CoxeterVariant::Ascending).element;
            let elts = if args.object == Object::Revnc {
                rev_nc(family, &c)?
            } else {
                nc_elements(family, &c)?
            };
            if args.object == Object::Partition {
                elts.into_iter()
                    .map(|p| {
                        let text = match family {
                            Family::A => Ok(perm_to_partition_a(&p).to_string()),
                            Family::B => Ok(perm_to_partition_b(&p).to_string()),
                            Family::D => Err(Error::Domain(
                                "set partitions are available for types A and B".into(),
                            )),
                        }?;
                        Ok(Item::Partition(text, p))
                    })
                    .collect::<Result<Vec<_>>>()?
            } else {
                elts.into_iter().map(Item::Perm).collect()
            }
        }
        Object::Sortable => {
            let c = standard_c_word(family, n);
            let all = if args.unguarded {
                enumerate_sortables_unguarded(family, n, &c)?
            } else {
                enumerate_sortables(family, n, &c)?
            };
            all.into_iter().map(Item::Perm).collect()
        }
    };
    Ok(items)
}

fn write_csv(out: &mut dyn Write, rows: Vec<Vec<String>>) -> Outcome {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.write_record(&row)
            .map_err(|e| Failure::Usage(e.to_string()))?;
    }
    w.flush()?;
    Ok(())
}

fn cmd_enumerate(args: &ObjectArgs, out: &mut dyn Write) -> Outcome {
    let family: Family = args.family.into();
    let mut items = enumerate_items(args)?;
    items.sort_by_cached_key(Item::text);
    match args.format {
        Format::Text => {
            for item in &items {
                match args.stat {
                    Some(s) => writeln!(out, "{}  {}", item.text(), item.stat(s, family)?)?,
                    None => writeln!(out, "{}", item.text())?,
                }
            }
        }
        Format::Json => {
            for item in &items {
                let mut v = item.json();
                if let Some(s) = args.stat {
                    v[stat_name(s)] = json!(item.stat(s, family)?);
                }
                writeln!(out, "{v}")?;
            }
        }
        Format::Csv => {
            let mut rows = Vec::with_capacity(items.len());
            for item in &items {
                let (a, b) = match args.stat {
                    Some(s) => (s, item.default_stats().1),
                    None => item.default_stats(),
                };
                let second = item
                    .stat(b, family)
                    .map(|v| v.to_string())
                    .unwrap_or_default();
                rows.push(vec![item.text(), item.stat(a, family)?.to_string(), second]);
            }
            write_csv(out, rows)?;
        }
    }
    Ok(())
}

fn stat_name(s: Stat) -> &'static str {
    match s {
        Stat::Area => "area",
        Stat::Maj => "maj",
        Stat::Ls => "ls",
        Stat::Lt => "lt",
        Stat::Majimaj => "majimaj",
    }
}

fn cmd_poly(args: &ObjectArgs, out: &mut dyn Write) -> Outcome {
    let family: Family = args.family.into();
    let stat = args
        .stat
        .ok_or_else(|| Failure::Usage("poly needs --stat".into()))?;
    let items = enumerate_items(args)?;
    let stats = items
        .iter()
        .map(|i| i.stat(stat, family))
        .collect::<Result<Vec<_>>>()?;
    let poly = QPoly::from_stats(stats);
    match args.format {
        Format::Json => writeln!(
            out,
            "{}",
            serde_json::to_string(&poly).map_err(|e| Failure::Usage(e.to_string()))?
        )?,
        Format::Text => writeln!(out, "{poly}")?,
        Format::Csv => {
            let rows = poly
                .coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| vec![k.to_string(), c.to_string()])
                .collect();
            write_csv(out, rows)?;
        }
    }
    Ok(())
}

fn read_object(input: &mut dyn BufRead) -> Result<String> {
    let mut s = String::new();
    input
        .read_to_string(&mut s)
        .map_err(|e| Error::Parse(format!("cannot read stdin: {e}")))?;
    let s = s.trim().to_string();
    if s.is_empty() {
        return Err(Error::Parse("expected one object on stdin".into()));
    }
    Ok(s)
}

/// Accepts a bare value or a JSON object carrying it under `key`.
fn unwrap_json(s: &str, key: &str) -> Result<String> {
    if !s.starts_with('{') {
        return Ok(s.to_string());
    }
    let v: Value = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    match &v[key] {
        Value::String(x) => Ok(x.clone()),
        Value::Array(xs) => Ok(xs
            .iter()
            .map(|x| {
                x.as_str()
                    .map(str::to_string)
                    .unwrap_or_else(|| x.to_string())
            })
            .collect::<Vec<_>>()
            .join(" ")),
        _ => Err(Error::Parse(format!(
            "expected a JSON object with key {key:?}"
        ))),
    }
}

fn cmd_map(args: &MapArgs, input: &mut dyn BufRead, out: &mut dyn Write) -> Outcome {
    let raw = read_object(input)?;
    let family = args.via.family();
    let n = args.n;
    let (source, source_stats, image, word) = match args.via {
        Via::PhiA | Via::PhiB => {
            let ideal = OrderIdeal::parse(
                GroupType::on_letters(family, n),
                &unwrap_json(&raw, "roots")?,
            )?;
            let stats = json!({ "area": ideal.len(), "maj": ideal_maj(&ideal)? });
            (
                json!({ "roots": ideal.root_strings() }),
                stats,
                phi(&ideal)?,
                None,
            )
        }
        Via::PsiA => {
            let d: DyckWordA = unwrap_json(&raw, "steps")?.parse()?;
            if d.semilength() != n {
                return Err(Failure::Usage(format!(
                    "path has semilength {}, expected {n}",
                    d.semilength()
                )));
            }
            let (s, w) = psi_a(&d)?;
            let stats = json!({ "area": area_a(&d), "maj": maj_a(&d) });
            (json!({ "steps": d.to_string() }), stats, s, Some(w))
        }
        Via::PsiB => {
            let d: DyckWordB = unwrap_json(&raw, "steps")?.parse()?;
            if d.order() != n {
                return Err(Failure::Usage(format!(
                    "path has order {}, expected {n}",
                    d.order()
                )));
            }
            let (s, w) = psi_b(&d)?;
            let stats = json!({ "area": area_b(&d), "maj": maj_b(&d) });
            (json!({ "steps": d.to_string() }), stats, s, Some(w))
        }
    };
    let ls = length_s(&image, family)?;
    let mi = maj(&image, family)? + imaj(&image, family)?;
    match args.format {
        Format::Text => writeln!(out, "{image}  ls={ls}")?,
        Format::Json => {
            let mut v = json!({
                "input": source,
                "input_stats": source_stats,
                "image": { "oneline": image.oneline() },
                "ls": ls,
                "majimaj": mi,
            });
            if let Some(w) = word {
                v["word"] = json!(w.to_string());
            }
            writeln!(out, "{v}")?;
        }
        Format::Csv => write_csv(
            out,
            vec![vec![image.to_string(), ls.to_string(), mi.to_string()]],
        )?,
    }
    Ok(())
}

const DEFAULT_MAX_A: usize = 8;
const DEFAULT_MAX_B: usize = 5;

fn run_verifier(via: Via, n: usize) -> Result<Report> {
    match via {
        Via::PhiA | Via::PhiB => verify_phi_theorems(via.family(), n),
        Via::PsiA | Via::PsiB => verify_psi_theorems(via.family(), n),
    }
}

fn print_report(out: &mut dyn Write, report: &Report, format: Format) -> Outcome {
    match format {
        Format::Json => writeln!(
            out,
            "{}",
            serde_json::to_string(report).map_err(|e| Failure::Usage(e.to_string()))?
        )?,
        Format::Text | Format::Csv => {
            let mark = if report.passed() { "PASS" } else { "FAIL" };
            writeln!(
                out,
                "{mark}  {}  (checked {})",
                report.identity, report.checked
            )?;
            for f in report.failures.iter().take(20) {
                writeln!(out, "      {f}")?;
            }
        }
    }
    Ok(())
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Outcome {
    let mut jobs: Vec<(Via, usize)> = Vec::new();
    if args.all {
        for via in [Via::PhiA, Via::PhiB, Via::PsiA, Via::PsiB] {
            let default = if via.family() == Family::A {
                DEFAULT_MAX_A
            } else {
                DEFAULT_MAX_B
            };
            let top = args
                .max_n
                .map_or(default, |m| if args.unguarded { m } else { m.min(default) });
            jobs.extend((1..=top).map(|n| (via, n)));
        }
    } else {
        let (via, n) = (
            args.via.expect("clap enforces --via"),
            args.n.expect("clap enforces --n"),
        );
        let max = if via.family() == Family::A {
            DEFAULT_MAX_A
        } else {
            DEFAULT_MAX_B
        };
        check_guard("verify", max, n, args.unguarded)?;
        jobs.push((via, n));
    }
    let mut ok = true;
    for (via, n) in jobs {
        let report = run_verifier(via, n)?;
        ok &= report.passed();
        print_report(out, &report, args.format)?;
    }
    if args.all {
        let d4 = d4_counterexample()?;
        let holds = d4.holds();
        ok &= holds;
        match args.format {
            Format::Json => writeln!(
                out,
                "{}",
                json!({
                    "identity": "Cat(D4;q) differs from every rev(NC) and Cox_c generating function",
                    "checked": d4.nc_cases.len() + d4.sortable_cases.len(),
                    "failures": if holds { json!([]) } else { json!(["equality found"]) },
                })
            )?,
            _ => writeln!(
                out,
                "{}  Cat(D4;q) differs from every rev(NC) and Cox_c generating function  (checked {})",
                if holds { "PASS" } else { "FAIL" },
                d4.nc_cases.len() + d4.sortable_cases.len()
            )?,
        }
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn cmd_selftest(format: Format, out: &mut dyn Write) -> Outcome {
    let checks = selftest::run();
    for c in &checks {
        match format {
            Format::Json => writeln!(out, "{}", json!({ "name": c.name, "passed": c.passed }))?,
            _ => writeln!(
                out,
                "{}  {}",
                if c.passed { "PASS" } else { "FAIL" },
                c.name
            )?,
        }
    }
    if checks.iter().all(|c| c.passed) {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, input: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    if let Some(j) = cli.jobs {
        // a second build in the same process is harmless; keep the first pool
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build_global();
    }
    let outcome = match &cli.command {
        Command::Enumerate(a) => cmd_enumerate(a, out),
        Command::Poly(a) => cmd_poly(a, out),
        Command::Map(a) => cmd_map(a, input, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Selftest { format } => cmd_selftest(*format, out),
    };
    match outcome {
        Ok(()) => 0,
        Err(Failure::Verification) => 1,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "qcat: {msg}");
            2
        }
    }
}
