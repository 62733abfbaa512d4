//! Command-line front end. Every command is a pure function of its arguments;
//! output is written in a fixed order so repeated runs are byte-identical.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bmfunc::{iota_transport, serre_weights, LambdaBox, TameType};
use crate::chars::{all_ordinary_chars, brauer_basis, decompose, gl2_label_index, gl2_labels, ordinary_char, BrauerIrredLabel, OrdChar};
use crate::classfn::{enumerate_full_classes, representative, FullClass, Group};
use crate::error::{Error, Result};
use crate::jl::{dl_character, jl_basis, jl_classfn, jl_star, GrothElt};
use crate::json::{
    class_labels, classfn_from_json, classfn_to_json, groth_from_json, groth_to_json, iota_from_json, iota_to_json,
    ClassFnJson, ClassLabel, GrothJson, IotaJson, LabelJson,
};
use crate::scalars::{CycInt, FieldCtx, FlElem};
use crate::suites::{run_suite, Suite, SuiteOptions, SuiteReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "modjl", version, about = "Exact Brauer characters of GL2(F_q) and the mod p Jacquet-Langlands map")]
pub struct Cli {
    /// Worker threads (defaults to all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct FieldArgs {
    #[arg(long)]
    pub p: u32,
    #[arg(long, default_value_t = 1)]
    pub f: u32,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum JlAs {
    Basis,
    Classfn,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TypeKind {
    Scalar,
    Ps,
    Cuspidal,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Semisimple conjugacy classes of GL2(F_q).
    Classes(FieldArgs),
    /// Irreducible Brauer characters.
    BrauerTable(FieldArgs),
    /// Ordinary irreducible characters on the semisimple classes.
    OrdinaryTable(FieldArgs),
    /// JL of a character of l^x or of a Grothendieck/class-function input.
    Jl {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        char_exp: Option<u32>,
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long = "as", value_enum, default_value_t = JlAs::Basis)]
        as_: JlAs,
    },
    /// Adjoint JL* of a GL2 Grothendieck element or a single irreducible.
    JlStar {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long = "in")]
        input: Option<PathBuf>,
        /// Digits of the irreducible, comma separated.
        #[arg(long, value_delimiter = ',')]
        r: Option<Vec<u32>>,
        #[arg(long, default_value_t = 0)]
        m: u32,
    },
    /// Deligne-Lusztig character of the non-split torus.
    Dl {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        char_exp: u32,
    },
    /// Decompose a class function into irreducibles.
    Decompose {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Run verification suites; exits 2 when any identity fails.
    Verify {
        #[command(flatten)]
        field: FieldArgs,
        /// A suite name or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Weight box `lo:hi` per embedding.
        #[arg(long)]
        lambda_box: Option<String>,
        /// Restrict `thm42` to one tame type.
        #[arg(long = "type", value_enum)]
        kind: Option<TypeKind>,
        /// Character exponents for `--type`.
        #[arg(long, value_delimiter = ',')]
        char_exp: Vec<u32>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Pull a functional on R(GL2) back along JL.
    TransportIota {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Labels where a functional is positive.
    SerreWeights {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long = "in")]
        input: PathBuf,
    },
}

/// A rendered document in both formats.
struct Doc {
    json: String,
    csv: Vec<Vec<String>>,
}

impl Doc {
    fn new<T: Serialize>(value: &T, csv: Vec<Vec<String>>) -> Result<Self> {
        Ok(Doc { json: crate::json::to_string(value)?, csv })
    }

    fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => Ok(self.json.clone()),
            Format::Csv => {
                let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
                for row in &self.csv {
                    w.write_record(row).map_err(|e| Error::Schema(e.to_string()))?;
                }
                let bytes = w.into_inner().map_err(|e| Error::Schema(e.to_string()))?;
                String::from_utf8(bytes).map_err(|e| Error::Schema(e.to_string()))
            }
        }
    }
}

fn cyc_cell(v: &CycInt) -> String {
    let parts: Vec<String> = v.coeffs().iter().map(i64::to_string).collect();
    format!("({})", parts.join(";"))
}

fn class_cell(l: &ClassLabel) -> String {
    match l {
        ClassLabel::Central { x } => format!("central:{x}"),
        ClassLabel::Split { x, y } => format!("split:{x}:{y}"),
        ClassLabel::Elliptic { z } => format!("elliptic:{z}"),
        ClassLabel::Element { t } => format!("element:{t}"),
    }
}

fn label_cell(l: &LabelJson) -> String {
    match l {
        LabelJson::Irred { r, m } => {
            let r: Vec<String> = r.iter().map(u32::to_string).collect();
            format!("r={};m={m}", r.join(":"))
        }
        LabelJson::LChar { exp } => format!("exp={exp}"),
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

fn context(field: &FieldArgs) -> Result<Arc<FieldCtx>> {
    FieldCtx::new(field.p, field.f)
}

#[derive(Serialize)]
struct ClassEntry {
    class: ClassLabel,
    size: u64,
    representative: [[FlElem; 2]; 2],
}

#[derive(Serialize)]
struct ClassesDoc {
    group: &'static str,
    q: u32,
    classes: Vec<ClassEntry>,
}

fn classes(ctx: &FieldCtx) -> Result<Doc> {
    let entries: Vec<ClassEntry> = enumerate_full_classes(ctx)
        .into_iter()
        .filter_map(|c| match c {
            FullClass::Semisimple(s) => Some(ClassEntry {
                class: s.into(),
                size: s.size(ctx.q()),
                representative: representative(ctx, &c),
            }),
            FullClass::NonSemisimple { .. } => None,
        })
        .collect();
    let mut csv = vec![vec!["class".to_string(), "size".to_string()]];
    csv.extend(entries.iter().map(|e| vec![class_cell(&e.class), e.size.to_string()]));
    Doc::new(&ClassesDoc { group: "GL2", q: ctx.q(), classes: entries }, csv)
}

#[derive(Serialize)]
struct TableRow<L> {
    label: L,
    dimension: u32,
    values: Vec<CycInt>,
}

#[derive(Serialize)]
struct TableDoc<L> {
    group: &'static str,
    q: u32,
    classes: Vec<ClassLabel>,
    rows: Vec<TableRow<L>>,
}

fn table_csv<L>(classes: &[ClassLabel], rows: &[TableRow<L>], cell: impl Fn(&L) -> String) -> Vec<Vec<String>> {
    let mut header = vec!["label".to_string(), "dimension".to_string()];
    header.extend(classes.iter().map(class_cell));
    let mut out = vec![header];
    for row in rows {
        let mut r = vec![cell(&row.label), row.dimension.to_string()];
        r.extend(row.values.iter().map(cyc_cell));
        out.push(r);
    }
    out
}

fn brauer_table(ctx: &FieldCtx) -> Result<Doc> {
    let basis = brauer_basis(ctx);
    let rows: Vec<TableRow<LabelJson>> = gl2_labels(ctx)
        .into_iter()
        .enumerate()
        .map(|(i, l)| TableRow {
            dimension: l.dimension(),
            label: LabelJson::Irred { r: l.r, m: l.m },
            values: basis.basis_element(ctx, i).values().to_vec(),
        })
        .collect();
    let classes = class_labels(ctx, Group::Gl2);
    let csv = table_csv(&classes, &rows, label_cell);
    Doc::new(&TableDoc { group: "GL2", q: ctx.q(), classes, rows }, csv)
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
enum OrdLabel {
    DetTwist { m: u32 },
    SteinbergTwist { m: u32 },
    PrincipalSeries { m1: u32, m2: u32 },
    Cuspidal { e: u32 },
}

impl From<OrdChar> for OrdLabel {
    fn from(c: OrdChar) -> Self {
        match c {
            OrdChar::DetTwist(m) => OrdLabel::DetTwist { m },
            OrdChar::SteinbergTwist(m) => OrdLabel::SteinbergTwist { m },
            OrdChar::PrincipalSeries(m1, m2) => OrdLabel::PrincipalSeries { m1, m2 },
            OrdChar::Cuspidal(e) => OrdLabel::Cuspidal { e },
        }
    }
}

fn ordinary_table(ctx: &FieldCtx) -> Result<Doc> {
    let chars = all_ordinary_chars(ctx);
    let rows = chars
        .iter()
        .map(|&c| {
            Ok(TableRow { label: c, dimension: c.dimension(ctx.q()), values: ordinary_char(ctx, c)?.values().to_vec() })
        })
        .collect::<Result<Vec<_>>>()?;
    let classes = class_labels(ctx, Group::Gl2);
    let csv = table_csv(&classes, &rows, |c| c.to_string());
    let rows: Vec<TableRow<OrdLabel>> =
        rows.into_iter().map(|r| TableRow { label: r.label.into(), dimension: r.dimension, values: r.values }).collect();
    Doc::new(&TableDoc { group: "GL2", q: ctx.q(), classes, rows }, csv)
}

fn groth_doc(ctx: &FieldCtx, v: &GrothElt) -> Result<Doc> {
    let doc = groth_to_json(ctx, v);
    let mut csv = vec![vec!["label".to_string(), "value".to_string()]];
    csv.extend(doc.coeffs.iter().map(|c| vec![label_cell(&c.label), c.value.to_string()]));
    Doc::new(&doc, csv)
}

fn classfn_doc(ctx: &FieldCtx, chi: &crate::classfn::ClassFn) -> Result<Doc> {
    let doc = classfn_to_json(ctx, chi);
    let mut csv = vec![vec!["class".to_string(), "value".to_string()]];
    csv.extend(chi.values().iter().zip(&doc.values).map(|(v, e)| vec![class_cell(&e.class), cyc_cell(v)]));
    Doc::new(&doc, csv)
}

fn iota_doc(doc: &IotaJson) -> Result<Doc> {
    let mut csv = vec![vec!["label".to_string(), "value".to_string()]];
    csv.extend(doc.entries.iter().map(|e| vec![label_cell(&e.label), e.value.to_string()]));
    Doc::new(doc, csv)
}

/// The `jl` input: a character exponent, a Grothendieck element, or a class function.
fn jl(ctx: &FieldCtx, char_exp: Option<u32>, input: Option<&Path>, as_: JlAs) -> Result<Doc> {
    let source = match (char_exp, input) {
        (Some(e), None) => {
            if e >= ctx.n() {
                return Err(Error::LabelOutOfRange(format!("character exponent {e}")));
            }
            GrothElt::unit(ctx, Group::Lx, e as usize)
        }
        (None, Some(path)) => {
            let value: serde_json::Value = read_json(path)?;
            if value.get("basis").is_some() {
                groth_from_json(ctx, &serde_json::from_value::<GrothJson>(value)?)?
            } else {
                decompose(ctx, &classfn_from_json(ctx, &serde_json::from_value::<ClassFnJson>(value)?)?)?
            }
        }
        _ => return Err(Error::Schema("jl needs exactly one of --char-exp and --in".into())),
    };
    if source.group() != Group::Lx {
        return Err(Error::GroupMismatch);
    }
    match as_ {
        JlAs::Basis => groth_doc(ctx, &jl_basis(ctx, &source)?),
        JlAs::Classfn => {
            let chi = crate::chars::recombine(ctx, &source)?;
            classfn_doc(ctx, &jl_classfn(ctx, &chi)?)
        }
    }
}

fn jl_star_cmd(ctx: &FieldCtx, input: Option<&Path>, r: Option<Vec<u32>>, m: u32) -> Result<Doc> {
    let source = match (input, r) {
        (Some(path), None) => groth_from_json(ctx, &read_json::<GrothJson>(path)?)?,
        (None, Some(r)) => {
            let idx = gl2_label_index(ctx, &BrauerIrredLabel::new(r, m))?;
            GrothElt::unit(ctx, Group::Gl2, idx)
        }
        _ => return Err(Error::Schema("jl-star needs exactly one of --in and --r".into())),
    };
    groth_doc(ctx, &jl_star(ctx, &source)?)
}

#[derive(Serialize)]
struct VerifyDoc {
    p: u32,
    f: u32,
    q: u32,
    passed: bool,
    suites: Vec<SuiteReport>,
}

fn tame_type(kind: Option<TypeKind>, exps: &[u32]) -> Result<Option<TameType>> {
    let bad = |need: usize| Error::Schema(format!("--type needs {need} character exponent(s), got {}", exps.len()));
    Ok(match kind {
        None if exps.is_empty() => None,
        None => return Err(Error::Schema("--char-exp given without --type".into())),
        Some(TypeKind::Scalar) => Some(TameType::Scalar(*exps.first().filter(|_| exps.len() == 1).ok_or_else(|| bad(1))?)),
        Some(TypeKind::Cuspidal) => {
            Some(TameType::Cuspidal(*exps.first().filter(|_| exps.len() == 1).ok_or_else(|| bad(1))?))
        }
        Some(TypeKind::Ps) => match exps {
            [a, b] => Some(TameType::PrincipalSeries(*a, *b)),
            _ => return Err(bad(2)),
        },
    })
}

/// Runs the selected suites. The flag is `true` when all passed.
fn verify(ctx: &FieldCtx, suite: &str, opts: &SuiteOptions) -> Result<(Doc, bool)> {
    let suites: Vec<Suite> = if suite == "all" { Suite::ALL.to_vec() } else { vec![suite.parse()?] };
    let reports = suites.iter().map(|&s| run_suite(ctx, s, opts)).collect::<Result<Vec<_>>>()?;
    let passed = reports.iter().all(SuiteReport::passed);
    let mut csv = vec![vec!["suite".into(), "q".into(), "checked".into(), "failures".into(), "status".into()]];
    csv.extend(reports.iter().map(|r| {
        let status = match (&r.skipped, r.passed()) {
            (Some(_), _) => "skipped",
            (None, true) => "pass",
            (None, false) => "fail",
        };
        vec![r.suite.to_string(), r.q.to_string(), r.checked.to_string(), r.failures.len().to_string(), status.into()]
    }));
    let doc = VerifyDoc { p: ctx.p(), f: ctx.f(), q: ctx.q(), passed, suites: reports };
    Ok((Doc::new(&doc, csv)?, passed))
}

#[derive(Serialize)]
struct WeightsDoc {
    group: &'static str,
    q: u32,
    weights: Vec<LabelJson>,
}

fn emit(field: &FieldArgs, doc: &Doc) -> Result<()> {
    let text = doc.render(field.format)?;
    match &field.out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

/// Runs one command, writes its output, and reports whether every checked
/// identity held.
fn dispatch(command: Command) -> Result<bool> {
    let (field, doc, ok) = match command {
        Command::Classes(field) => {
            let doc = classes(&*context(&field)?)?;
            (field, doc, true)
        }
        Command::BrauerTable(field) => {
            let doc = brauer_table(&*context(&field)?)?;
            (field, doc, true)
        }
        Command::OrdinaryTable(field) => {
            let doc = ordinary_table(&*context(&field)?)?;
            (field, doc, true)
        }
        Command::Jl { field, char_exp, input, as_ } => {
            let doc = jl(&*context(&field)?, char_exp, input.as_deref(), as_)?;
            (field, doc, true)
        }
        Command::JlStar { field, input, r, m } => {
            let doc = jl_star_cmd(&*context(&field)?, input.as_deref(), r, m)?;
            (field, doc, true)
        }
        Command::Dl { field, char_exp } => {
            let ctx = context(&field)?;
            let doc = classfn_doc(&ctx, &dl_character(&ctx, char_exp))?;
            (field, doc, true)
        }
        Command::Decompose { field, input } => {
            let ctx = context(&field)?;
            let chi = classfn_from_json(&ctx, &read_json(&input)?)?;
            let doc = groth_doc(&ctx, &decompose(&ctx, &chi)?)?;
            (field, doc, true)
        }
        Command::Verify { field, suite, lambda_box, kind, char_exp, seed, samples } => {
            let ctx = context(&field)?;
            let opts = SuiteOptions {
                lambda_box: lambda_box.as_deref().map(LambdaBox::parse).transpose()?,
                tame_type: tame_type(kind, &char_exp)?,
                seed,
                samples,
            };
            let (doc, ok) = verify(&ctx, &suite, &opts)?;
            (field, doc, ok)
        }
        Command::TransportIota { field, input } => {
            let ctx = context(&field)?;
            let iota = iota_from_json(&ctx, &read_json(&input)?)?;
            let doc = iota_doc(&iota_to_json(&ctx, &iota_transport(&ctx, &iota)?))?;
            (field, doc, true)
        }
        Command::SerreWeights { field, input } => {
            let ctx = context(&field)?;
            let iota = iota_from_json(&ctx, &read_json(&input)?)?;
            let weights: Vec<LabelJson> = serre_weights(&ctx, &iota)?.iter().map(LabelJson::from).collect();
            let mut csv = vec![vec!["label".to_string()]];
            csv.extend(weights.iter().map(|l| vec![label_cell(l)]));
            let doc = Doc::new(&WeightsDoc { group: iota.group().tag(), q: ctx.q(), weights }, csv)?;
            (field, doc, true)
        }
    };
    emit(&field, &doc)?;
    Ok(ok)
}

/// Exit code for a parsed command line.
pub fn run(cli: Cli) -> i32 {
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return EXIT_INPUT;
        }
    }
    match dispatch(cli.command) {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_VERIFY_FAILED,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INPUT
        }
    }
}
