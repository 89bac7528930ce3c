//! Command-line front end. [`run`] parses arguments, dispatches, and returns
//! the process exit code.

pub mod render;

use std::ffi::OsString;
use std::fmt;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

use crate::cartan::Rank;
use crate::crystalgraph::{
    check_crystal_axioms, check_dual_reading, check_isomorphism_with, check_weight_multiplicities,
    export_dot, export_json, generate_with, CrystalGraph, GenerateOptions, Realization,
    VerificationReport, DEFAULT_MAX_NODES,
};
use crate::error::{Error, Result};
use crate::isomorphism::{psi, psi_inverse, psi_mutant, psi_unchecked};
use crate::kostant::KostantPartition;
use crate::tableaux::{MLTableau, Reading};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_UNDEFINED: i32 = 2;
pub const EXIT_VERIFY_FAILED: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    E,
    F,
}

/// A whitespace-separated word such as `f1 f2 e4`, applied left to right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorString(pub Vec<(Op, usize)>);

impl FromStr for OperatorString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut ops = Vec::new();
        for tok in s.split_whitespace() {
            let (head, tail) = tok.split_at(tok.char_indices().nth(1).map_or(tok.len(), |(p, _)| p));
            let op = match head {
                "e" | "E" => Op::E,
                "f" | "F" => Op::F,
                _ => return Err(Error::OperatorParse(format!("`{tok}` does not start with e or f"))),
            };
            let i: usize = tail
                .parse()
                .map_err(|_| Error::OperatorParse(format!("`{tok}` has no color index")))?;
            ops.push((op, i));
        }
        Ok(OperatorString(ops))
    }
}

impl fmt::Display for OperatorString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<String> = self
            .0
            .iter()
            .map(|(op, i)| format!("{}{i}", if *op == Op::E { 'e' } else { 'f' }))
            .collect();
        f.write_str(&words.join(" "))
    }
}

impl OperatorString {
    pub fn validate(&self, rank: Rank) -> Result<()> {
        for &(_, i) in &self.0 {
            rank.check_index(i)?;
        }
        Ok(())
    }
}

/// An element of either realization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Element {
    Tableau(MLTableau),
    Kostant(KostantPartition),
}

impl Element {
    /// Tableaux carry `rows`, partitions carry `parts`.
    pub fn from_json_str(s: &str) -> Result<Self> {
        let v: serde_json::Value = serde_json::from_str(s)?;
        if v.get("rows").is_some() {
            Ok(Element::Tableau(MLTableau::from_json_value(v)?))
        } else if v.get("parts").is_some() {
            Ok(Element::Kostant(KostantPartition::from_json_value(v)?))
        } else {
            Err(Error::InvalidPartition("expected a `rows` or `parts` field".into()))
        }
    }

    pub fn rank(&self) -> Rank {
        match self {
            Element::Tableau(t) => t.rank(),
            Element::Kostant(a) => a.rank(),
        }
    }

    pub fn to_json(&self) -> String {
        match self {
            Element::Tableau(t) => t.to_json(),
            Element::Kostant(a) => a.to_json(),
        }
    }

    /// Applies `ops` left to right; `None` as soon as some `e_i` is undefined.
    pub fn apply(&self, ops: &OperatorString, reading: Reading) -> Result<Option<Element>> {
        ops.validate(self.rank())?;
        let mut cur = self.clone();
        for &(op, i) in &ops.0 {
            cur = match (cur, op) {
                (Element::Tableau(t), Op::F) => Element::Tableau(t.f_with(i, reading)),
                (Element::Tableau(t), Op::E) => match t.e_with(i, reading) {
                    Some(x) => Element::Tableau(x),
                    None => return Ok(None),
                },
                (Element::Kostant(a), Op::F) => Element::Kostant(a.f(i)),
                (Element::Kostant(a), Op::E) => match a.e(i) {
                    Some(x) => Element::Kostant(x),
                    None => return Ok(None),
                },
            };
        }
        Ok(Some(cur))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReadingArg {
    Middle,
    Far,
}

impl From<ReadingArg> for Reading {
    fn from(r: ReadingArg) -> Self {
        match r {
            ReadingArg::Middle => Reading::Middle,
            ReadingArg::Far => Reading::Far,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RealizationArg {
    Tableaux,
    Kostant,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Dot,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    T2kp,
    Kp2t,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Style {
    /// One row per line, shaded boxes included.
    Ascii,
    /// Tableau without shaded boxes.
    Reduced,
    /// Stack blocks, one per part.
    Stack,
    /// Stacks side by side.
    StackRow,
    /// `5β(1,1) + …`.
    Linear,
}

#[derive(Debug, Parser)]
#[command(name = "dinfty", version, about = "The crystal B(∞) of type D_n: tableaux, Kostant partitions, and the map between them")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate the ball of radius DEPTH around the highest-weight element.
    Gen {
        #[arg(long, value_enum, default_value = "tableaux")]
        realization: RealizationArg,
        #[arg(long = "n")]
        n: usize,
        #[arg(long)]
        depth: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
        #[arg(long, value_enum, default_value = "middle")]
        reading: ReadingArg,
        #[arg(long, default_value_t = DEFAULT_MAX_NODES)]
        max_nodes: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply an operator word such as "f1 f2 e4" to an element.
    Apply {
        /// Element JSON; standard input when omitted.
        file: Option<PathBuf>,
        #[arg(long)]
        ops: String,
        #[arg(long, value_enum, default_value = "middle")]
        reading: ReadingArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Map a tableau to its Kostant partition or back.
    Map {
        #[arg(value_enum)]
        direction: Direction,
        file: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the isomorphism on a ball; exit status 3 on any failure.
    Verify {
        #[arg(long = "n")]
        n: usize,
        #[arg(long)]
        depth: usize,
        /// Also run the crystal axioms, dual-reading and multiplicity checks.
        #[arg(long)]
        all: bool,
        #[arg(long)]
        json: bool,
        #[arg(long, hide = true)]
        mutant: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render an element as text.
    Render {
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "ascii")]
        style: Style,
        /// Print barred letters with an overline.
        #[arg(long)]
        utf8: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(outcome) => {
            if let Err(e) = emit(&outcome.out, &outcome.text) {
                eprintln!("error: {e}");
                return EXIT_INVALID;
            }
            outcome.code
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INVALID
        }
    }
}

/// Text produced by a command, where it goes, and the exit code.
pub struct Outcome {
    pub text: String,
    pub out: Option<PathBuf>,
    pub code: i32,
}

fn read_input(file: &Option<PathBuf>) -> Result<String> {
    match file {
        Some(p) => Ok(std::fs::read_to_string(p)?),
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<()> {
    let mut body = text.to_string();
    if !body.is_empty() && !body.ends_with('\n') {
        body.push('\n');
    }
    match out {
        Some(p) => std::fs::write(p, body)?,
        None => std::io::stdout().write_all(body.as_bytes())?,
    }
    Ok(())
}

pub fn execute(cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Gen { realization, n, depth, format, reading, max_nodes, out } => {
            let rank = Rank::new(*n)?;
            let opts = GenerateOptions { reading: (*reading).into(), max_nodes: *max_nodes, enforce_limits: true };
            let text = match realization {
                RealizationArg::Tableaux => {
                    let g: CrystalGraph<MLTableau> = generate_with(rank, *depth, &opts)?;
                    export(&g, *format)
                }
                RealizationArg::Kostant => {
                    let g: CrystalGraph<KostantPartition> = generate_with(rank, *depth, &opts)?;
                    export(&g, *format)
                }
            };
            Ok(Outcome { text, out: out.clone(), code: EXIT_OK })
        }
        Command::Apply { file, ops, reading, out } => {
            let x = Element::from_json_str(&read_input(file)?)?;
            let ops: OperatorString = ops.parse()?;
            Ok(match x.apply(&ops, (*reading).into())? {
                Some(y) => Outcome { text: y.to_json(), out: out.clone(), code: EXIT_OK },
                None => Outcome { text: "null".into(), out: out.clone(), code: EXIT_UNDEFINED },
            })
        }
        Command::Map { direction, file, out } => {
            let x = Element::from_json_str(&read_input(file)?)?;
            let text = match (direction, x) {
                (Direction::T2kp, Element::Tableau(t)) => psi(&t)?.to_json(),
                (Direction::Kp2t, Element::Kostant(a)) => psi_inverse(&a).to_json(),
                (Direction::T2kp, _) => return Err(Error::InvalidPartition("t2kp expects a tableau".into())),
                (Direction::Kp2t, _) => {
                    return Err(Error::InvalidPartition("kp2t expects a Kostant partition".into()))
                }
            };
            Ok(Outcome { text, out: out.clone(), code: EXIT_OK })
        }
        Command::Verify { n, depth, all, json, mutant, out } => {
            let rank = Rank::new(*n)?;
            let report = verify(rank, *depth, *all, *mutant)?;
            let text = if *json {
                serde_json::to_string_pretty(&report)?
            } else {
                report.to_string()
            };
            let code = if report.passed() { EXIT_OK } else { EXIT_VERIFY_FAILED };
            Ok(Outcome { text, out: out.clone(), code })
        }
        Command::Render { file, style, utf8, out } => {
            let x = Element::from_json_str(&read_input(file)?)?;
            let text = render_element(&x, *style, *utf8)?;
            Ok(Outcome { text, out: out.clone(), code: EXIT_OK })
        }
    }
}

fn export<C: crate::crystalgraph::Crystal>(g: &CrystalGraph<C>, format: FormatArg) -> String {
    match format {
        FormatArg::Dot => export_dot(g),
        FormatArg::Json => export_json(g),
    }
}

pub fn verify(rank: Rank, depth: usize, all: bool, mutant: bool) -> Result<VerificationReport> {
    let map: &(dyn Fn(&MLTableau) -> KostantPartition + Sync) = if mutant { &psi_mutant } else { &psi_unchecked };
    let mut report = check_isomorphism_with(rank, depth, map)?;
    if all {
        let opts = GenerateOptions::default();
        let tg: CrystalGraph<MLTableau> = generate_with(rank, depth, &opts)?;
        let kg: CrystalGraph<KostantPartition> = generate_with(rank, depth, &opts)?;
        report.absorb(check_crystal_axioms(&tg));
        report.absorb(check_crystal_axioms(&kg));
        report.absorb(check_dual_reading(&tg)?);
        report.absorb(check_weight_multiplicities(&tg));
        report.absorb(check_weight_multiplicities(&kg));
    }
    Ok(report)
}

pub fn render_element(x: &Element, style: Style, utf8: bool) -> Result<String> {
    Ok(match (style, x) {
        (Style::Ascii, Element::Tableau(t)) => render::tableau_text(t, utf8),
        (Style::Reduced, Element::Tableau(t)) => render::reduced_text(t, utf8),
        (Style::Stack, Element::Kostant(a)) => render::stack_blocks(a),
        (Style::StackRow, Element::Kostant(a)) => render::stack_row(a),
        (Style::Linear, Element::Kostant(a)) | (Style::Ascii, Element::Kostant(a)) => a.to_string(),
        (Style::Stack | Style::StackRow | Style::Linear, Element::Tableau(_)) => {
            return Err(Error::InvalidPartition("this style needs a Kostant partition".into()))
        }
        (Style::Reduced, Element::Kostant(_)) => {
            return Err(Error::InvalidPartition("reduced style needs a tableau".into()))
        }
    })
}

impl From<Realization> for RealizationArg {
    fn from(r: Realization) -> Self {
        match r {
            Realization::Tableaux => RealizationArg::Tableaux,
            Realization::Kostant => RealizationArg::Kostant,
        }
    }
}
