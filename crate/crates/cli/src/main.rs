use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use dehn_core::constructions::{
    branched_double_cover, filling_family, mapping_torus_homology, swap_matrix, trefoil_completions,
};
use dehn_core::fibration::{double, fiber_sum, gn_fibration};
use dehn_core::homology::homology_action;
use dehn_core::rewrite::positivize;
use dehn_core::selftest::{self, Check};
use dehn_core::{
    verify, AbelianGroup, Base, Certification, Config, EngineChoice, Error, Fibration, Strategy,
    SurfaceSig, Twist, TwistWord, Verdict, DEFAULT_WORD_CAP,
};

const EXIT_OK: u8 = 0;
const EXIT_FALSE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_UNKNOWN: u8 = 3;

#[derive(Parser)]
#[command(
    name = "dehn",
    version,
    about = "Exact computations with Dehn twist words"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Maximum length of any intermediate free-group word.
    #[arg(long, global = true, default_value_t = DEFAULT_WORD_CAP)]
    cap: usize,

    /// Engine used for equality checks.
    #[arg(long, global = true, value_enum, default_value_t = EngineArg::Auto)]
    engine: EngineArg,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Emit JSON (the only format; accepted for compatibility).
    #[arg(long, global = true)]
    json: bool,

    /// Read the request from this file instead of standard input.
    #[arg(long, global = true)]
    input: Option<PathBuf>,

    /// Include wall-clock time in the report.
    #[arg(long, global = true)]
    timing: bool,

    /// Run on one thread.
    #[arg(long, global = true)]
    sequential: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum EngineArg {
    Auto,
    Homology,
    Pi1,
    Closed,
}

impl From<EngineArg> for EngineChoice {
    fn from(e: EngineArg) -> Self {
        match e {
            EngineArg::Auto => EngineChoice::Auto,
            EngineArg::Homology => EngineChoice::Homology,
            EngineArg::Pi1 => EngineChoice::Pi1,
            EngineArg::Closed => EngineChoice::Closed,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether `lhs` and `rhs` are the same mapping class.
    Verify,
    /// Replace negative twists by products of positive ones.
    Positivize,
    /// Close a fibration over the disk to one over the sphere.
    Double,
    /// Euler characteristic, first homology and allowability.
    Invariants,
    /// Fillings obtained by repeated chain substitution.
    Family {
        #[arg(long)]
        n: u32,
    },
    /// The two torus completions of the trefoil fibration.
    Trefoil,
    /// The doubled bundle with monodromy φ # φ⁻¹.
    BranchedDouble,
    /// Fiber sum of two fibrations over the sphere.
    Fibersum,
    /// The genus n fibration (a1 b1 … an bn)^(4n+2) over the sphere.
    Gn {
        #[arg(long)]
        n: u32,
    },
    /// Relator corpus and chain relation checks.
    Selftest,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Verify => "verify",
            Command::Positivize => "positivize",
            Command::Double => "double",
            Command::Invariants => "invariants",
            Command::Family { .. } => "family",
            Command::Trefoil => "trefoil",
            Command::BranchedDouble => "branched-double",
            Command::Fibersum => "fibersum",
            Command::Gn { .. } => "gn",
            Command::Selftest => "selftest",
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct WordInput {
    surface: SurfaceSig,
    word: Vec<Twist>,
    #[serde(default)]
    base: Option<Base>,
}

impl WordInput {
    fn twist_word(self) -> Result<TwistWord, Error> {
        TwistWord::new(self.surface, self.word)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct VerifyInput {
    surface: SurfaceSig,
    lhs: Vec<Twist>,
    #[serde(default)]
    rhs: Vec<Twist>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FibersumInput {
    first: WordInput,
    second: WordInput,
}

#[derive(Serialize, Default)]
struct Report {
    command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    verdict: Option<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    engine: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    chi: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    h1: Option<AbelianGroup>,
    #[serde(skip_serializing_if = "Option::is_none")]
    word_out: Option<TwistWord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    steps: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    runtime_ms: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    letters: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    allowable: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    base: Option<Base>,
    #[serde(skip_serializing_if = "Option::is_none")]
    chis: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    h1s: Option<Vec<AbelianGroup>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verdicts: Option<Vec<Certification>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    checks: Option<Vec<Check>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    words: Option<Vec<TwistWord>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

/// A failed run: exit code and diagnostic.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::WordGrowthExceeded { .. } => EXIT_UNKNOWN,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn input_error(message: String) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message,
    }
}

fn read_request<T: DeserializeOwned>(path: &Option<PathBuf>) -> Result<T, Failure> {
    let text = match path {
        Some(p) => fs::read_to_string(p)
            .map_err(|e| input_error(format!("cannot read {}: {e}", p.display())))?,
        None => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| input_error(format!("cannot read standard input: {e}")))?;
            s
        }
    };
    let de = &mut serde_json::Deserializer::from_str(&text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let field = if path == "." {
            "request".to_string()
        } else {
            format!("field `{path}`")
        };
        input_error(format!("invalid {field}: {}", e.inner()))
    })
}

fn verdict_code(v: Verdict) -> u8 {
    match v {
        Verdict::Equal => EXIT_OK,
        Verdict::NotEqual => EXIT_FALSE,
        Verdict::Unknown => EXIT_UNKNOWN,
    }
}

fn certified(report: &mut Report, c: &Certification) -> u8 {
    report.verdict = Some(c.verdict);
    report.engine = Some(c.engine.clone());
    verdict_code(c.verdict)
}

fn describe(report: &mut Report, f: &Fibration) -> Result<(), Failure> {
    report.chi = Some(f.euler_characteristic());
    report.h1 = Some(f.first_homology()?);
    report.allowable = Some(f.is_allowable()?);
    report.letters = Some(f.word.len());
    report.base = Some(f.base);
    Ok(())
}

fn run(cli: &Cli, report: &mut Report) -> Result<u8, Failure> {
    let config = Config {
        cap: cli.cap,
        strategy: if cli.sequential {
            Strategy::Sequential
        } else {
            Strategy::Parallel
        },
    };
    let engine = EngineChoice::from(cli.engine);
    match &cli.command {
        Command::Verify => {
            let req: VerifyInput = read_request(&cli.input)?;
            let lhs = TwistWord::new(req.surface, req.lhs)?;
            let rhs = TwistWord::new(req.surface, req.rhs)?;
            let c = verify(&lhs, &rhs, engine, &config)?;
            Ok(certified(report, &c))
        }
        Command::Positivize => {
            let w = read_request::<WordInput>(&cli.input)?.twist_word()?;
            let r = positivize(&w, engine, &config)?;
            report.steps = Some(r.steps);
            report.letters = Some(r.output.len());
            report.word_out = Some(r.output);
            Ok(certified(report, &r.verified))
        }
        Command::Double => {
            let w = read_request::<WordInput>(&cli.input)?.twist_word()?;
            let palf = Fibration::disk(w)?;
            let (f, r) = double(&palf, &config)?;
            describe(report, &f)?;
            report.steps = Some(r.steps);
            report.word_out = Some(f.word);
            Ok(certified(report, &r.verified))
        }
        Command::Invariants => {
            let req: WordInput = read_request(&cli.input)?;
            let base = req.base.unwrap_or(Base::Disk);
            let f = Fibration::new(base, req.twist_word()?)?;
            describe(report, &f)?;
            Ok(EXIT_OK)
        }
        Command::Family { n } => {
            let r = filling_family(*n, &config)?;
            report.chis = Some(r.chis);
            report.h1s = Some(r.h1s);
            report.words = Some(r.fillings.into_iter().map(|f| f.word).collect());
            let worst = r
                .equal_verdicts
                .iter()
                .map(|c| verdict_code(c.verdict))
                .max()
                .unwrap_or(EXIT_OK);
            report.allowable = Some(r.allowable.iter().all(|&a| a));
            report.steps = Some(r.steps.iter().sum());
            report.verdicts = Some(r.equal_verdicts);
            Ok(worst)
        }
        Command::Trefoil => {
            let t = trefoil_completions(&config)?;
            report.chis = Some(vec![
                t.big.euler_characteristic(),
                t.small.euler_characteristic(),
            ]);
            report.h1s = Some(vec![t.big.first_homology()?, t.small.first_homology()?]);
            report.words = Some(vec![t.big.word, t.small.word]);
            Ok(certified(report, &t.agree))
        }
        Command::BranchedDouble => {
            let w = read_request::<WordInput>(&cli.input)?.twist_word()?;
            let d = branched_double_cover(w.surface, &w)?;
            let m1 = homology_action(&d.copy1)?;
            let m2 = homology_action(&d.copy2)?;
            let m = homology_action(&d.monodromy)?;
            let s = swap_matrix(w.surface.genus)?;
            let commute = m1.mul(&m2)? == m2.mul(&m1)?;
            let swapped = s.mul(&m)?.mul(&s.symplectic_inverse())? == m.symplectic_inverse();
            let check = |name: &str, ok: bool| Check {
                name: name.to_string(),
                verdict: if ok {
                    Verdict::Equal
                } else {
                    Verdict::NotEqual
                },
                engine: "homology(exact-matrix)".to_string(),
            };
            report.checks = Some(vec![
                check("halves commute", commute),
                check("swap conjugates monodromy to its inverse", swapped),
            ]);
            report.h1 = Some(mapping_torus_homology(d.fiber, &d.monodromy)?);
            report.word_out = Some(d.monodromy);
            Ok(if commute && swapped {
                EXIT_OK
            } else {
                EXIT_FALSE
            })
        }
        Command::Fibersum => {
            let req: FibersumInput = read_request(&cli.input)?;
            let f1 = Fibration::sphere(req.first.twist_word()?)?;
            let f2 = Fibration::sphere(req.second.twist_word()?)?;
            let f = fiber_sum(&f1, &f2)?;
            describe(report, &f)?;
            report.word_out = Some(f.word);
            Ok(EXIT_OK)
        }
        Command::Gn { n } => {
            let f = gn_fibration(*n)?;
            describe(report, &f)?;
            report.word_out = Some(f.word);
            Ok(EXIT_OK)
        }
        Command::Selftest => {
            let checks = selftest::run(&config)?;
            let code = checks
                .iter()
                .map(|c| verdict_code(c.verdict))
                .max()
                .unwrap_or(EXIT_OK);
            report.verdict = Some(if code == EXIT_OK {
                Verdict::Equal
            } else {
                Verdict::NotEqual
            });
            report.checks = Some(checks);
            Ok(code)
        }
    }
}

fn emit(cli: &Cli, report: &Report) -> io::Result<()> {
    let mut text = serde_json::to_string_pretty(report).map_err(io::Error::other)?;
    text.push('\n');
    match &cli.out {
        Some(p) => fs::write(p, text),
        None => io::stdout().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let mut report = Report {
        command: cli.command.name().to_string(),
        ..Report::default()
    };
    let code = match run(&cli, &mut report) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("dehn: {}", f.message);
            report = Report {
                command: report.command,
                error: Some(f.message),
                ..Report::default()
            };
            f.code
        }
    };
    if cli.timing {
        report.runtime_ms = Some(start.elapsed().as_millis() as u64);
    }
    if let Err(e) = emit(&cli, &report) {
        eprintln!("dehn: cannot write report: {e}");
        return ExitCode::from(EXIT_INPUT);
    }
    ExitCode::from(code)
}
