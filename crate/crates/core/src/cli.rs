//! The `bent` command line and the `BFN1` / `BPT1` text formats.
//!
//! ```text
//! BFN1
//! n=12 m=6 group=4 modulus=43 pairing=trace layout=xy
//! 0 0 1 3 ...
//! ```
//!
//! `group` lists the cyclic factor orders, `modulus` is the field modulus in
//! hex (or `-`), and layout `xy` means the value at `(x, y)` sits at position
//! `x * 2^m + y`. Partitions are written as
//!
//! ```text
//! BPT1
//! n=12 m=6 k=2 which=gamma1 modulus=43 cells=4
//! trace:0 0 1 2 ...
//! ```
//!
//! with one line per cell: label, then its points.
//!
//! Exit codes: 0 success or a positive verdict, 1 a negative verdict, 2 usage
//! or precondition errors.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::analyze::{
    classify_exponents, constant_on, constant_on_cells, triple_dual_check, CharacterSums, SumKind,
};
use crate::boolfun::{anf_degree, PairingSpec, PairingTag, TruthTable};
use crate::construct::{
    carlet, default_pi, mm, partition_bent, psap, spread_construction, trace_family, Assignment,
    CarletKind, ExponentPair, SpreadVariant, TraceVariant,
};
use crate::error::{invalid, Error, Result};
use crate::gf::{make_field, FieldElement, FieldSpec};
use crate::groupfun::{is_generalized_bent, is_group_bent, GroupFunction, GroupSpec};
use crate::spread::{desarguesian, gamma_partition, Partition, Side};

/// A function on `V_n` with its metadata, as stored on disk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionFile {
    pub m: Option<u32>,
    pub modulus: Option<u32>,
    pub pairing: PairingTag,
    pub function: GroupFunction,
}

impl FunctionFile {
    pub fn new(field: Option<&FieldSpec>, pairing: PairingTag, function: GroupFunction) -> Self {
        FunctionFile {
            m: field.map(|f| f.m()),
            modulus: field.map(|f| f.modulus()),
            pairing,
            function,
        }
    }

    pub fn field(&self) -> Result<Option<FieldSpec>> {
        self.m.map(|m| make_field(m, self.modulus)).transpose()
    }

    pub fn pairing_spec(&self, tag: PairingTag) -> Result<PairingSpec> {
        match tag {
            PairingTag::Dot => Ok(PairingSpec::dot(self.function.n())),
            PairingTag::Trace => {
                let field = self
                    .field()?
                    .ok_or_else(|| Error::Format("trace pairing needs m".into()))?;
                if 2 * field.m() != self.function.n() {
                    return Err(Error::Format(format!(
                        "m = {} does not match n = {}",
                        field.m(),
                        self.function.n()
                    )));
                }
                Ok(PairingSpec::trace(&field))
            }
            PairingTag::Custom => Err(invalid("custom pairings are not stored in files")),
        }
    }

    pub fn to_text(&self) -> String {
        let f = &self.function;
        let orders: Vec<String> = f.group().orders().iter().map(u32::to_string).collect();
        let mut out = String::with_capacity(f.values().len() * 3 + 80);
        let _ = writeln!(
            out,
            "BFN1\nn={} m={} group={} modulus={} pairing={} layout=xy",
            f.n(),
            self.m.map_or("-".into(), |m| m.to_string()),
            orders.join(","),
            self.modulus.map_or("-".into(), |p| format!("{p:x}")),
            match self.pairing {
                PairingTag::Trace => "trace",
                _ => "dot",
            }
        );
        for row in f.values().chunks(64) {
            let line: Vec<String> = row.iter().map(u32::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        if lines.next().map(str::trim) != Some("BFN1") {
            return Err(Error::Format("missing BFN1 tag".into()));
        }
        let header = parse_header(lines.next().unwrap_or(""))?;
        let n: u32 = header.num("n")?;
        if n > 26 {
            return Err(Error::Format(format!("n = {n} is too large")));
        }
        let m = header.optional_num("m")?;
        let orders = header
            .get("group")?
            .split(',')
            .map(|o| {
                o.parse()
                    .map_err(|_| Error::Format(format!("bad group order {o:?}")))
            })
            .collect::<Result<Vec<u32>>>()?;
        let modulus = match header.get("modulus")? {
            "-" => None,
            hex => Some(parse_hex(hex)?),
        };
        let pairing = match header.get("pairing")? {
            "dot" => PairingTag::Dot,
            "trace" => PairingTag::Trace,
            other => return Err(Error::Format(format!("unknown pairing {other:?}"))),
        };
        if header.get("layout")? != "xy" {
            return Err(Error::Format("only layout=xy is supported".into()));
        }
        let values = lines
            .flat_map(str::split_whitespace)
            .map(|v| {
                v.parse()
                    .map_err(|_| Error::Format(format!("bad value {v:?}")))
            })
            .collect::<Result<Vec<u32>>>()?;
        if values.len() != 1 << n {
            return Err(Error::Format(format!(
                "expected {} values, found {}",
                1u64 << n,
                values.len()
            )));
        }
        let function = GroupFunction::new(n, GroupSpec::new(orders)?, values)?;
        Ok(FunctionFile {
            m,
            modulus,
            pairing,
            function,
        })
    }

    pub fn read(path: &Path) -> Result<Self> {
        Self::parse(&read_text(path)?)
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        write_text(path, &self.to_text())
    }
}

/// Text form of a partition.
pub fn partition_to_text(p: &Partition, field: &FieldSpec, k: Option<u32>, which: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "BPT1\nn={} m={} k={} which={which} modulus={:x} cells={}",
        p.n(),
        field.m(),
        k.map_or("-".into(), |k| k.to_string()),
        field.modulus(),
        p.len()
    );
    for (label, cell) in p.labels().iter().zip(p.cells()) {
        let _ = write!(out, "{label}");
        for x in cell {
            let _ = write!(out, " {x}");
        }
        out.push('\n');
    }
    out
}

struct Header(Vec<(String, String)>);

impl Header {
    fn get(&self, key: &str) -> Result<&str> {
        self.0
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
            .ok_or_else(|| Error::Format(format!("header lacks {key}")))
    }

    fn num(&self, key: &str) -> Result<u32> {
        let v = self.get(key)?;
        v.parse()
            .map_err(|_| Error::Format(format!("bad {key}={v}")))
    }

    fn optional_num(&self, key: &str) -> Result<Option<u32>> {
        match self.get(key)? {
            "-" => Ok(None),
            _ => self.num(key).map(Some),
        }
    }
}

fn parse_header(line: &str) -> Result<Header> {
    line.split_whitespace()
        .map(|kv| {
            kv.split_once('=')
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .ok_or_else(|| Error::Format(format!("bad header field {kv:?}")))
        })
        .collect::<Result<_>>()
        .map(Header)
}

fn parse_hex(s: &str) -> Result<u32> {
    let digits = s.strip_prefix("0x").unwrap_or(s);
    u32::from_str_radix(digits, 16).map_err(|_| Error::Format(format!("bad hex value {s:?}")))
}

fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Format(format!("{}: {e}", path.display())))
}

fn write_text(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Format(format!("{}: {e}", path.display())))
}

#[derive(Parser, Debug)]
#[command(name = "bent", about = "Construct and verify bent functions", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a function and write it as BFN1.
    Construct(ConstructArgs),
    /// Check a BFN1 file.
    Verify(VerifyArgs),
    #[command(subcommand)]
    Analyze(AnalyzeCommand),
    /// Write a partition of F_2^m x F_2^m as BPT1.
    Partition(PartitionArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    F1,
    F2,
    Fa,
    Fb,
    Psap,
    Cons1,
    Cons2,
    CarletG,
    CarletGstar,
    Mm,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum SideArg {
    A,
    B,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::A => Side::A,
            SideArg::B => Side::B,
        }
    }
}

#[derive(Args, Debug)]
struct FieldArgs {
    #[arg(long)]
    m: u32,
    /// Field modulus in hex; the smallest irreducible by default.
    #[arg(long)]
    modulus: Option<String>,
}

impl FieldArgs {
    fn field(&self) -> Result<FieldSpec> {
        make_field(self.m, self.modulus.as_deref().map(parse_hex).transpose()?)
    }
}

#[derive(Args, Debug)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[command(flatten)]
    field: FieldArgs,
    #[arg(long)]
    k: Option<u32>,
    /// Images of 0, 1, .. in GF(2^k), as field words.
    #[arg(long, value_delimiter = ',')]
    pi: Option<Vec<u32>>,
    #[arg(long, default_value_t = 0)]
    u_label: u32,
    /// Elements of GF(2^k) as field words.
    #[arg(long, value_delimiter = ',')]
    subset: Option<Vec<u32>>,
    #[arg(long)]
    include_hyper: bool,
    #[arg(long, value_enum, default_value = "a")]
    side: SideArg,
    #[arg(long, value_delimiter = ',')]
    beta: Option<Vec<u32>>,
    #[arg(long)]
    exponent: Option<i64>,
    /// Cyclic factor orders of the target group.
    #[arg(long, value_delimiter = ',')]
    group: Option<Vec<u32>>,
    /// The value owning whole subspaces in `cons2`.
    #[arg(long, default_value_t = 1)]
    tilde: u32,
    #[arg(long)]
    out: PathBuf,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Mode {
    Boolean,
    Gbent,
    Zbent,
    Group,
    Vectorial,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum PairingArg {
    Dot,
    Trace,
}

impl From<PairingArg> for PairingTag {
    fn from(p: PairingArg) -> PairingTag {
        match p {
            PairingArg::Dot => PairingTag::Dot,
            PairingArg::Trace => PairingTag::Trace,
        }
    }
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    mode: Mode,
    /// Overrides the pairing in the file header.
    #[arg(long, value_enum)]
    pairing: Option<PairingArg>,
    file: PathBuf,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Which {
    Desarguesian,
    Gamma1,
    Gamma2,
}

#[derive(Subcommand, Debug)]
enum AnalyzeCommand {
    /// Classify exponent classes by the triple condition.
    #[command(visible_alias = "table1")]
    Exponents {
        #[arg(long)]
        n: u32,
    },
    /// Compare both character sums with their closed forms over all arguments.
    Omega {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        k: u32,
    },
    /// Algebraic degree of every coordinate function.
    Degree { file: PathBuf },
    /// Whether a function is constant on the cells of a partition.
    ConstantOn {
        #[arg(long, value_enum)]
        partition: Which,
        #[arg(long)]
        k: Option<u32>,
        file: PathBuf,
    },
    /// Whether the dual of the sum of three bent functions is the sum of duals.
    TripleDual {
        f0: PathBuf,
        f1: PathBuf,
        f2: PathBuf,
        #[arg(long, value_enum)]
        pairing: Option<PairingArg>,
    },
}

#[derive(Args, Debug)]
struct PartitionArgs {
    #[arg(long, value_enum)]
    which: Which,
    #[command(flatten)]
    field: FieldArgs,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    out: PathBuf,
}

/// Outcome of a command: exit code and report text.
pub type Outcome = (i32, String);

/// Run with `args[0]` the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    let threads = std::env::var("BENT_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok());
    let go = || dispatch(cli.command).unwrap_or_else(|e| (2, format!("error: {e}\n")));
    match threads.filter(|&t| t > 0) {
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(go),
            Err(e) => (2, format!("error: {e}\n")),
        },
        None => go(),
    }
}

fn dispatch(command: Command) -> Result<Outcome> {
    match command {
        Command::Construct(a) => construct(a),
        Command::Verify(a) => verify(a),
        Command::Analyze(a) => analyze(a),
        Command::Partition(a) => partition(a),
    }
}

fn need_k(k: Option<u32>) -> Result<u32> {
    k.ok_or_else(|| invalid("--k is required"))
}

fn element(field: &FieldSpec, w: u32) -> Result<FieldElement> {
    field.element(w)
}

fn group_arg(group: &Option<Vec<u32>>, default: GroupSpec) -> Result<GroupSpec> {
    match group {
        Some(orders) => GroupSpec::new(orders.clone()),
        None => Ok(default),
    }
}

fn construct(a: ConstructArgs) -> Result<Outcome> {
    let field = a.field.field()?;
    let n = 2 * field.m();
    let trace = PairingTag::Trace;
    let boolean = |t: TruthTable| FunctionFile::new(Some(&field), trace, GroupFunction::lift(&t));
    let file = match a.kind {
        Kind::F1 | Kind::F2 => {
            let pair = ExponentPair::new(field.m(), need_k(a.k)?)?;
            let basis = field.subfield_basis(pair.k())?;
            let variant = if a.kind == Kind::F1 {
                TraceVariant::F1
            } else {
                TraceVariant::F2
            };
            FunctionFile::new(
                Some(&field),
                trace,
                trace_family(&field, &pair, variant, &basis)?,
            )
        }
        Kind::Fa | Kind::Fb => {
            let k = need_k(a.k)?;
            let pi = match &a.pi {
                Some(words) => words
                    .iter()
                    .map(|&w| element(&field, w))
                    .collect::<Result<Vec<_>>>()?,
                None => default_pi(&field, k)?,
            };
            let group = group_arg(&a.group, GroupSpec::cyclic(k))?;
            let side = if a.kind == Kind::Fa { Side::A } else { Side::B };
            FunctionFile::new(
                Some(&field),
                trace,
                partition_bent(&field, k, side, &pi, &group, a.u_label)?,
            )
        }
        Kind::Psap => {
            let k = need_k(a.k)?;
            let subset = match &a.subset {
                Some(words) => words
                    .iter()
                    .map(|&w| element(&field, w))
                    .collect::<Result<Vec<_>>>()?,
                None => field
                    .subfield_elements(k)?
                    .into_iter()
                    .take(1 << (k - 1))
                    .collect(),
            };
            boolean(psap(&field, k, &subset, a.include_hyper, a.side.into())?)
        }
        Kind::Cons1 | Kind::Cons2 => {
            let group = group_arg(&a.group, GroupSpec::cyclic(1))?;
            let variant = if a.kind == Kind::Cons1 {
                SpreadVariant::I
            } else {
                SpreadVariant::II
            };
            let asg = Assignment::sequential(&group, variant, field.m(), a.tilde)?;
            let spread = desarguesian(&field);
            FunctionFile::new(
                Some(&field),
                trace,
                spread_construction(spread.cells(), n, &group, variant, &asg)?,
            )
        }
        Kind::CarletG | Kind::CarletGstar => {
            let pair = ExponentPair::new(field.m(), need_k(a.k)?)?;
            let betas = a.beta.as_deref().unwrap_or(&[]);
            let [b0, b1, b2] = betas else {
                return Err(invalid("--beta needs three elements"));
            };
            let betas = [
                element(&field, *b0)?,
                element(&field, *b1)?,
                element(&field, *b2)?,
            ];
            let which = if a.kind == Kind::CarletG {
                CarletKind::G
            } else {
                CarletKind::GStar
            };
            boolean(carlet(&field, &pair, betas, which)?)
        }
        Kind::Mm => {
            let beta = match a.beta.as_deref() {
                Some([b]) => element(&field, *b)?,
                None => FieldElement::ONE,
                Some(_) => return Err(invalid("--beta takes one element")),
            };
            let exponent = match (a.exponent, a.k) {
                (Some(t), _) => t,
                (None, Some(k)) => ExponentPair::new(field.m(), k)?.d() as i64,
                (None, None) => 1,
            };
            boolean(mm(&field, beta, exponent)?)
        }
    };
    file.write(&a.out)?;
    Ok((
        0,
        format!(
            "wrote {} ({} values)\n",
            a.out.display(),
            file.function.values().len()
        ),
    ))
}

fn verdict(ok: bool, what: &str) -> Outcome {
    if ok {
        (0, format!("{what}: yes\n"))
    } else {
        (1, format!("{what}: no\n"))
    }
}

fn verify(a: VerifyArgs) -> Result<Outcome> {
    let file = FunctionFile::read(&a.file)?;
    let p = file.pairing_spec(a.pairing.map_or(file.pairing, Into::into))?;
    let f = &file.function;
    Ok(match a.mode {
        Mode::Boolean => {
            if f.group().size() != 2 {
                return Err(invalid("boolean mode needs group=2"));
            }
            verdict(f.bit_tables()[0].is_bent(&p)?, "bent")
        }
        Mode::Gbent => verdict(is_generalized_bent(f, &p)?, "generalized bent"),
        Mode::Zbent => {
            if !f.group().is_cyclic() {
                return Err(invalid("zbent mode needs a cyclic group"));
            }
            verdict(is_group_bent(f, &p)?, "Z-bent")
        }
        Mode::Group => verdict(is_group_bent(f, &p)?, "group bent"),
        Mode::Vectorial => {
            if !f.group().is_elementary() {
                return Err(invalid("vectorial mode needs group=2,2,..."));
            }
            verdict(is_group_bent(f, &p)?, "vectorial bent")
        }
    })
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    let v: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    if v.is_empty() {
        "(none)".into()
    } else {
        v.join(", ")
    }
}

fn analyze(a: AnalyzeCommand) -> Result<Outcome> {
    match a {
        AnalyzeCommand::Exponents { n } => {
            let t = classify_exponents(n)?;
            Ok((
                0,
                format!(
                    "n={n}\nfulfilling: {}\nnot fulfilling: {}\n",
                    join(&t.fulfilled),
                    join(&t.not_fulfilled)
                ),
            ))
        }
        AnalyzeCommand::Omega { field, k } => {
            let field = field.field()?;
            let sums = CharacterSums::new(&field, k)?;
            let gammas = field.subfield_elements(k)?;
            let mut report = String::new();
            let mut all = true;
            for (kind, name) in [(SumKind::Omega, "omega"), (SumKind::Upsilon, "upsilon")] {
                let mut cases = 0u64;
                let mut bad = 0u64;
                for u in field.elements() {
                    for v in field.elements() {
                        let skip = match kind {
                            SumKind::Omega => v.is_zero(),
                            SumKind::Upsilon => u.is_zero(),
                        };
                        if skip {
                            continue;
                        }
                        for &g in &gammas {
                            cases += 1;
                            bad +=
                                (sums.brute(kind, u, v, g)? != sums.closed(kind, u, v, g)?) as u64;
                        }
                    }
                }
                all &= bad == 0;
                let _ = writeln!(report, "{name}: {cases} cases, {bad} mismatches");
            }
            Ok((if all { 0 } else { 1 }, report))
        }
        AnalyzeCommand::Degree { file } => {
            let file = FunctionFile::read(&file)?;
            let mut report = String::new();
            for (i, t) in file.function.bit_tables().iter().enumerate() {
                let _ = writeln!(report, "bit {i}: degree {}", anf_degree(t).degree);
            }
            Ok((0, report))
        }
        AnalyzeCommand::ConstantOn { partition, k, file } => {
            let file = FunctionFile::read(&file)?;
            let field = file
                .field()?
                .ok_or_else(|| Error::Format("the file has no field".into()))?;
            let f = &file.function;
            let ok = match partition {
                Which::Desarguesian => {
                    constant_on_cells(f, f.n(), &desarguesian(&field).punctured_cells())?
                }
                Which::Gamma1 => constant_on(f, &gamma_partition(&field, need_k(k)?, Side::A)?)?,
                Which::Gamma2 => constant_on(f, &gamma_partition(&field, need_k(k)?, Side::B)?)?,
            };
            Ok(verdict(ok, "constant on cells"))
        }
        AnalyzeCommand::TripleDual {
            f0,
            f1,
            f2,
            pairing,
        } => {
            let files = [f0, f1, f2].map(|p| FunctionFile::read(&p));
            let [a, b, c] = files;
            let (a, b, c) = (a?, b?, c?);
            let p = a.pairing_spec(pairing.map_or(a.pairing, Into::into))?;
            let tables: Vec<TruthTable> = [&a, &b, &c]
                .iter()
                .map(|f| {
                    if f.function.group().size() != 2 {
                        Err(invalid("triple-dual needs Boolean functions"))
                    } else {
                        Ok(f.function.bit_tables().remove(0))
                    }
                })
                .collect::<Result<_>>()?;
            Ok(verdict(
                triple_dual_check(&tables[0], &tables[1], &tables[2], &p)?,
                "dual of sum is sum of duals",
            ))
        }
    }
}

fn partition(a: PartitionArgs) -> Result<Outcome> {
    let field = a.field.field()?;
    let (p, name) = match a.which {
        Which::Desarguesian => (desarguesian(&field), "desarguesian"),
        Which::Gamma1 => (gamma_partition(&field, need_k(a.k)?, Side::A)?, "gamma1"),
        Which::Gamma2 => (gamma_partition(&field, need_k(a.k)?, Side::B)?, "gamma2"),
    };
    write_text(&a.out, &partition_to_text(&p, &field, a.k, name))?;
    Ok((
        0,
        format!("wrote {} ({} cells)\n", a.out.display(), p.len()),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let field = make_field(3, None).unwrap();
        let g = GroupSpec::new(vec![4, 2]).unwrap();
        let f = GroupFunction::from_fn(6, g, |x| (x * 5 % 8) as u32).unwrap();
        let file = FunctionFile::new(Some(&field), PairingTag::Trace, f);
        let text = file.to_text();
        assert!(text.starts_with("BFN1\nn=6 m=3 group=4,2 modulus=b pairing=trace layout=xy\n"));
        assert_eq!(FunctionFile::parse(&text).unwrap(), file);
    }

    #[test]
    fn parse_errors() {
        assert!(FunctionFile::parse("BFN2\n").is_err());
        let head = "BFN1\nn=2 m=- group=2 modulus=- pairing=dot layout=xy\n";
        assert!(FunctionFile::parse(&format!("{head}0 1 1")).is_err());
        assert!(FunctionFile::parse(&format!("{head}0 1 1 2")).is_err());
        let ok = FunctionFile::parse(&format!("{head}0 1\n1 0")).unwrap();
        assert_eq!(ok.function.values(), &[0, 1, 1, 0]);
        assert!(ok.pairing_spec(PairingTag::Trace).is_err());
        let hex = "BFN1\nn=2 m=1 group=2 modulus=0x3 pairing=trace layout=xy\n0 0 0 1";
        assert_eq!(FunctionFile::parse(hex).unwrap().modulus, Some(3));
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run(["bent", "frobnicate"]).0, 2);
        assert_eq!(run(["bent", "analyze", "table1"]).0, 2);
        assert_eq!(run(["bent", "analyze", "table1", "--n", "40"]).0, 2);
    }

    #[test]
    fn exponents_report() {
        let (code, text) = run(["bent", "analyze", "table1", "--n", "6"]);
        assert_eq!(code, 0);
        assert!(text.contains("not fulfilling: 15\n"), "{text}");
    }
}
