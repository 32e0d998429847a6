//! Command-line front end. `run` parses arguments, dispatches, and returns
//! the process exit code: 0 pass, 1 fail, 2 usage, parse or size-guard error.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::{Error, Result};
use crate::exactmath::{parse_rational, Rational};
use crate::plactic::{self, RelationSet};
use crate::report::{self, Check, VerificationReport};
use crate::shapes::{count_ssyt, enumerate_ssyt, Alphabet, Partition, SignedLetter, SignedWord, Ssyt};
use crate::symfunc::{self, CharacterPoly};

#[derive(Parser, Debug)]
#[command(name = "superplactic-kit", version, about = "Super tableaux, hook Schur characters and plactic checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Super semistandard tableaux
    #[command(subcommand)]
    Ssyt(SsytCmd),
    /// Schur and hook Schur characters
    #[command(subcommand)]
    Char(CharCmd),
    /// Super-plactic monoid
    #[command(subcommand)]
    Plactic(PlacticCmd),
    /// Individual verifications
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Combined reports
    #[command(subcommand)]
    Report(ReportCmd),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Route {
    Ssyt,
    Factorized,
}

#[derive(Args, Debug)]
struct ShapeArgs {
    #[arg(long)]
    shape: Partition,
    #[arg(long, default_value_t = 0)]
    m: usize,
    #[arg(long, default_value_t = 0)]
    n: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Subcommand, Debug)]
enum SsytCmd {
    List(ShapeArgs),
    Count(ShapeArgs),
}

#[derive(Subcommand, Debug)]
enum CharCmd {
    Schur(ShapeArgs),
    HookSchur {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, value_enum, default_value = "ssyt")]
        route: Route,
    },
}

#[derive(Subcommand, Debug)]
enum PlacticCmd {
    NormalForm {
        #[arg(long, allow_hyphen_values = true)]
        word: SignedWord,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    Product {
        #[arg(long)]
        left: Ssyt,
        #[arg(long)]
        right: Ssyt,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    Classes {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        length: usize,
        #[arg(long, hide = true)]
        corrupt_relations: bool,
    },
}

fn q_arg(s: &str) -> std::result::Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

#[derive(Subcommand, Debug)]
enum VerifyCmd {
    SchurIdentity {
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 6)]
        max_degree: u32,
    },
    HookIdentity {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 6)]
        max_degree: u32,
    },
    Ybe {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    Idempotent,
    Gamma {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = q_arg, default_value = "7/3")]
        q: Rational,
    },
    Dimensions {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
        #[arg(long, value_parser = q_arg, default_value = "7/3")]
        q: Rational,
    },
    SchurWeyl {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    Gl {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand, Debug)]
enum ReportCmd {
    All {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
        #[arg(long, value_parser = q_arg, default_value = "7/3")]
        q: Rational,
        #[arg(long)]
        out: Option<std::path::PathBuf>,
        #[arg(long, hide = true)]
        corrupt_relations: bool,
    },
}

/// Runs the CLI on `args` (including the program name) writing to the
/// process's stdout and stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with(args, &mut std::io::stdout(), &mut std::io::stderr())
}

pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Parse(format!("i/o: {e}"))
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn shape_str(p: &Partition) -> String {
    p.parts().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn print_character(c: &CharacterPoly, format: Format, out: &mut dyn Write) -> Result<()> {
    match format {
        Format::Text => writeln!(out, "{c}"),
        Format::Json => writeln!(out, "{}", c.to_json()),
        Format::Csv => {
            writeln!(out, "exponents,coefficient").map_err(io)?;
            for (e, x) in c.poly.terms() {
                let exps: Vec<String> = e.iter().map(|v| v.to_string()).collect();
                writeln!(out, "{},{}", csv_field(&exps.join(",")), crate::exactmath::format_rational(x)).map_err(io)?;
            }
            Ok(())
        }
    }
    .map_err(io)
}

fn word_alphabet(letters: impl Iterator<Item = SignedLetter>) -> Alphabet {
    let (mut m, mut n) = (0, 0);
    for a in letters {
        if a.is_odd() {
            n = n.max(a.index());
        } else {
            m = m.max(a.index());
        }
    }
    Alphabet::new(m as usize, n as usize)
}

fn print_single(check: Check, out: &mut dyn Write) -> Result<bool> {
    let params = check.parameters.clone();
    let rep = VerificationReport::new(params, vec![check]);
    writeln!(out, "{}", rep.to_pretty()).map_err(io)?;
    Ok(rep.passed())
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<bool> {
    match cmd {
        Command::Ssyt(SsytCmd::Count(a)) => {
            let c = count_ssyt(&a.shape, a.m, a.n);
            match a.format {
                Format::Text => writeln!(out, "{c}"),
                Format::Json => writeln!(out, "{}", json!({"shape": a.shape.parts(), "m": a.m, "n": a.n, "count": c})),
                Format::Csv => writeln!(out, "shape,m,n,count\n{},{},{},{c}", csv_field(&shape_str(&a.shape)), a.m, a.n),
            }
            .map_err(io)?;
            Ok(true)
        }
        Command::Ssyt(SsytCmd::List(a)) => {
            let ts = enumerate_ssyt(&a.shape, a.m, a.n);
            match a.format {
                Format::Text => {
                    for t in &ts {
                        writeln!(out, "{t}").map_err(io)?;
                    }
                }
                Format::Json => {
                    let v: Vec<serde_json::Value> = ts.iter().map(|t| serde_json::from_str(&t.to_json()).unwrap()).collect();
                    writeln!(out, "{}", serde_json::Value::Array(v)).map_err(io)?;
                }
                Format::Csv => {
                    writeln!(out, "index,tableau,reading_word").map_err(io)?;
                    for (i, t) in ts.iter().enumerate() {
                        writeln!(out, "{i},{},{}", csv_field(&t.to_string()), csv_field(&t.reading_word().to_string())).map_err(io)?;
                    }
                }
            }
            Ok(true)
        }
        Command::Char(CharCmd::Schur(a)) => {
            print_character(&symfunc::schur(&a.shape, a.m), a.format, out)?;
            Ok(true)
        }
        Command::Char(CharCmd::HookSchur { shape: a, route }) => {
            let c = match route {
                Route::Ssyt => symfunc::hook_schur_ssyt(&a.shape, a.m, a.n),
                Route::Factorized => symfunc::hook_schur_factorized(&a.shape, a.m, a.n),
            };
            print_character(&c, a.format, out)?;
            Ok(true)
        }
        Command::Plactic(PlacticCmd::NormalForm { word, format }) => {
            let nf = plactic::normal_form(&word)?;
            match format {
                Format::Json => writeln!(
                    out,
                    "{}",
                    json!({"sign": nf.sign, "tableau": serde_json::from_str::<serde_json::Value>(&nf.tableau.to_json()).unwrap()})
                ),
                Format::Text => writeln!(out, "{} {}", nf.sign, nf.tableau),
                Format::Csv => writeln!(out, "sign,tableau\n{},{}", nf.sign, csv_field(&nf.tableau.to_string())),
            }
            .map_err(io)?;
            Ok(true)
        }
        Command::Plactic(PlacticCmd::Product { left, right, format }) => {
            let alphabet = word_alphabet(left.letters().chain(right.letters()));
            let nf = plactic::plactic_product(&left, &right, alphabet)?;
            match format {
                Format::Json => writeln!(
                    out,
                    "{}",
                    json!({"sign": nf.sign, "tableau": serde_json::from_str::<serde_json::Value>(&nf.tableau.to_json()).unwrap()})
                ),
                Format::Text => writeln!(out, "{} {}", nf.sign, nf.tableau),
                Format::Csv => writeln!(out, "sign,tableau\n{},{}", nf.sign, csv_field(&nf.tableau.to_string())),
            }
            .map_err(io)?;
            Ok(true)
        }
        Command::Plactic(PlacticCmd::Classes { m, n, length, corrupt_relations }) => {
            let rel = if corrupt_relations { RelationSet::FirstFamilyOnly } else { RelationSet::Super };
            print_single(report::check_plactic_classes(m, n, length, rel)?, out)
        }
        Command::Verify(v) => {
            let check = match v {
                VerifyCmd::SchurIdentity { m, max_degree } => report::check_schur_identity(m, max_degree)?,
                VerifyCmd::HookIdentity { m, n, max_degree } => report::check_hook_identity(m, n, max_degree)?,
                VerifyCmd::Ybe { m, n } => report::check_ybe(m, n)?,
                VerifyCmd::Idempotent => report::check_idempotent()?,
                VerifyCmd::Gamma { m, n, q } => report::check_gamma(m, n, &q)?,
                VerifyCmd::Dimensions { m, n, max_degree, q } => report::check_dimensions(m, n, max_degree, &q)?,
                VerifyCmd::SchurWeyl { m, n, r } => report::check_schur_weyl(m, n, r)?,
                VerifyCmd::Gl { m, n } => report::check_gl_relations(m, n)?,
            };
            print_single(check, out)
        }
        Command::Report(ReportCmd::All { m, n, max_degree, q, out: path, corrupt_relations }) => {
            let rel = if corrupt_relations { RelationSet::FirstFamilyOnly } else { RelationSet::Super };
            let rep = report::report_all(m, n, max_degree, &q, rel)?;
            let text = rep.to_pretty();
            match path {
                Some(p) => {
                    std::fs::write(&p, format!("{text}\n")).map_err(io)?;
                    writeln!(out, "{}: {}", p.display(), if rep.passed() { "pass" } else { "fail" }).map_err(io)?;
                }
                None => writeln!(out, "{text}").map_err(io)?,
            }
            Ok(rep.passed())
        }
    }
}
