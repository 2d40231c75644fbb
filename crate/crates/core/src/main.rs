use clap::{Parser, Subcommand, ValueEnum};
use etale_core::functors::c_object;
use etale_core::workbench::{
    self, adjunction_stage, chi_roundtrip, crm_stage, generate_corpus, omega_roundtrip, omega_stage, parse_document,
    rqf_document, rqf_of, run_corpus, section_lines, serialize_document, topcat_document, topcat_of, Body, Corpus,
    Document, Section,
};
use etale_core::{Error, Limits, Report};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

const EXIT_FAIL: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_BOUND: u8 = 3;
const EXIT_USAGE: u8 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Exhaustive checks on finite étale categories, restriction quantal frames
/// and complete restriction monoids.
#[derive(Debug, Parser)]
#[command(name = "etale-workbench", version)]
struct Cli {
    /// Largest category handed to the opens construction.
    #[arg(long, global = true, default_value_t = Limits::default().max_arrows)]
    max_arrows: usize,
    /// Largest lattice handed to filter enumeration.
    #[arg(long, global = true, default_value_t = Limits::default().max_elements)]
    max_elements: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for the randomly generated corpus frames.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads; defaults to one per core.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Include per-stage timings in JSON output.
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Layered axiom checks on any document.
    Validate { file: PathBuf },
    /// Emit the restriction quantal frame of opens of a category.
    Omega {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Emit the category of completely prime filters of a quantal frame.
    Cpoints {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check the comparison map back to the original is an isomorphism.
    Roundtrip { file: PathBuf },
    /// Translate between monoid and quantal frame and back.
    Crm { file: PathBuf },
    /// Enumerate both hom-sets of an adjunction and check the transposes.
    Adjoint { category: PathBuf, other: PathBuf },
    /// Generated fixtures and whole-suite runs.
    #[command(subcommand)]
    Corpus(CorpusCommand),
}

#[derive(Debug, Subcommand)]
enum CorpusCommand {
    /// Run the whole suite over the fixture directory, or the generated corpus.
    Run {
        #[arg(long, env = "WORKBENCH_CORPUS_DIR")]
        dir: Option<PathBuf>,
    },
    /// Write the generated corpus as fixture files.
    Write { dir: PathBuf },
}

fn read(path: &Path) -> Result<Document, Error> {
    let text = std::fs::read_to_string(path)?;
    parse_document(&text)
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Syntax { .. } | Error::Semantic { .. } | Error::Io(_) => EXIT_INPUT,
        Error::BoundExceeded { .. } => EXIT_BOUND,
        Error::Rejected { .. } => EXIT_FAIL,
    }
}

fn stage_section(doc: &Document, stage: &'static str, report: Report) -> Section {
    Section {
        instance: doc.name.clone(),
        stage,
        report,
        millis: 0,
    }
}

struct Output {
    format: Format,
    timings: bool,
}

impl Output {
    fn emit(&self, sections: &[Section], ok: bool, to_stderr: bool) -> std::io::Result<()> {
        let text = match self.format {
            Format::Text => {
                let mut lines: Vec<String> = sections.iter().flat_map(section_lines).collect();
                let (pass, fail, skipped) = workbench::counts(sections);
                lines.push(format!(
                    "{} passed, {} failed, {} skipped: {}",
                    pass,
                    fail,
                    skipped,
                    if ok { "ok" } else { "FAILED" }
                ));
                lines.join("\n") + "\n"
            }
            Format::Json => {
                let v = workbench::json_summary(sections, ok, self.timings);
                serde_json::to_string_pretty(&v).expect("plain data") + "\n"
            }
        };
        if to_stderr {
            std::io::stderr().lock().write_all(text.as_bytes())
        } else {
            std::io::stdout().lock().write_all(text.as_bytes())
        }
    }
}

fn load_dir(dir: &Path) -> Result<Corpus, Error> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && p.file_name().is_some_and(|n| n != "adjunctions.json"))
        .collect();
    paths.sort();
    let mut documents = Vec::new();
    for p in &paths {
        documents.push(read(p).map_err(|e| match e {
            Error::Syntax { line, column, message } => Error::Syntax {
                line,
                column,
                message: format!("{}: {message}", p.display()),
            },
            Error::Semantic { path, message } => Error::Semantic {
                path,
                message: format!("{}: {message}", p.display()),
            },
            e => e,
        })?);
    }
    let pairs = dir.join("adjunctions.json");
    let adjunctions = if pairs.exists() {
        let text = std::fs::read_to_string(&pairs)?;
        serde_json::from_str::<Vec<(String, String)>>(&text).map_err(|e| Error::Syntax {
            line: e.line(),
            column: e.column(),
            message: format!("{}: {e}", pairs.display()),
        })?
    } else {
        Vec::new()
    };
    Ok(Corpus { documents, adjunctions })
}

fn write_dir(corpus: &Corpus, dir: &Path) -> Result<(), Error> {
    std::fs::create_dir_all(dir)?;
    for doc in &corpus.documents {
        let file = dir.join(format!("{}.{}", doc.name, workbench::extension(doc.kind())));
        std::fs::write(file, serialize_document(doc))?;
    }
    let pairs = serde_json::to_string_pretty(&corpus.adjunctions).expect("plain data") + "\n";
    std::fs::write(dir.join("adjunctions.json"), pairs)?;
    Ok(())
}

fn emit_document(doc: &Document, output: &Option<PathBuf>) -> Result<bool, Error> {
    let text = serialize_document(doc);
    match output {
        Some(path) => {
            std::fs::write(path, text)?;
            Ok(false)
        }
        None => {
            std::io::stdout().lock().write_all(text.as_bytes())?;
            Ok(true)
        }
    }
}

fn run(cli: &Cli) -> Result<bool, Error> {
    let limits = Limits {
        max_arrows: cli.max_arrows,
        max_elements: cli.max_elements,
        ..Limits::default()
    };
    let out = Output {
        format: cli.format,
        timings: cli.timings,
    };
    match &cli.command {
        Command::Validate { file } => {
            let doc = read(file)?;
            let sections = vec![stage_section(&doc, "validate", workbench::validate_document(&doc))];
            let ok = sections.iter().all(Section::is_pass);
            out.emit(&sections, ok, false)?;
            Ok(ok)
        }
        Command::Omega { file, output } => {
            let doc = read(file)?;
            let report = omega_stage(&doc, &limits)?;
            let ok = report.is_pass();
            let om = etale_core::functors::omega_object(&topcat_of(&doc)?, &limits)?;
            let emitted = emit_document(&rqf_document(&format!("omega-{}", doc.name), &om.rqf), output)?;
            out.emit(&[stage_section(&doc, "omega", report)], ok, emitted)?;
            Ok(ok)
        }
        Command::Cpoints { file, output } => {
            let doc = read(file)?;
            let q = rqf_of(&doc)?;
            let c = c_object(&q, &limits)?;
            let ok = c.laws.is_pass();
            let emitted = emit_document(&topcat_document(&format!("points-{}", doc.name), &c), output)?;
            out.emit(&[stage_section(&doc, "cpoints", c.laws.clone())], ok, emitted)?;
            Ok(ok)
        }
        Command::Roundtrip { file } => {
            let doc = read(file)?;
            let report = match &doc.body {
                Body::Category(_) | Body::TopCategory(_) => omega_roundtrip(&doc, &limits)?,
                Body::Frame(_) | Body::Rqf(_) => chi_roundtrip(&doc, &limits)?,
                _ => {
                    return Err(Error::Semantic {
                        path: "kind".into(),
                        message: format!("no round trip for kind {}", doc.kind()),
                    })
                }
            };
            let ok = report.is_pass();
            out.emit(&[stage_section(&doc, "roundtrip", report)], ok, false)?;
            Ok(ok)
        }
        Command::Crm { file } => {
            let doc = read(file)?;
            let report = crm_stage(&doc, &limits)?;
            let ok = report.is_pass();
            out.emit(&[stage_section(&doc, "crm", report)], ok, false)?;
            Ok(ok)
        }
        Command::Adjoint { category, other } => {
            let (c, q) = (read(category)?, read(other)?);
            let report = adjunction_stage(&c, &q, &limits)?;
            let ok = report.is_pass();
            let section = Section {
                instance: format!("{}|{}", c.name, q.name),
                stage: "adjunction",
                report,
                millis: 0,
            };
            out.emit(&[section], ok, false)?;
            Ok(ok)
        }
        Command::Corpus(CorpusCommand::Write { dir }) => {
            write_dir(&generate_corpus(cli.seed, &limits)?, dir)?;
            Ok(true)
        }
        Command::Corpus(CorpusCommand::Run { dir }) => {
            let corpus = match dir {
                Some(dir) => load_dir(dir)?,
                None => generate_corpus(cli.seed, &limits)?,
            };
            let start = Instant::now();
            let progress = |s: &Section| {
                let status = if s.is_pass() { "ok" } else { "fail" };
                let _ = writeln!(
                    std::io::stderr().lock(),
                    "{status:<5} {} {} ({} ms)",
                    s.instance,
                    s.stage,
                    s.millis
                );
            };
            let sections = run_corpus(&corpus, &limits, &progress)?;
            let ok = sections
                .iter()
                .filter(|s| s.stage == "expected" || s.stage == "adjunction")
                .all(Section::is_pass);
            let _ = writeln!(
                std::io::stderr().lock(),
                "corpus finished in {:.1} s",
                start.elapsed().as_secs_f64()
            );
            out.emit(&sections, ok, false)?;
            Ok(ok)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_FAIL),
        Err(e) => {
            if let Error::Rejected { report, .. } = &e {
                let section = Section {
                    instance: "input".into(),
                    stage: "rejected",
                    report: report.clone(),
                    millis: 0,
                };
                let out = Output {
                    format: cli.format,
                    timings: cli.timings,
                };
                let _ = out.emit(&[section], false, false);
            }
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
