use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use lesgp::corpus::{corpus_files, write_corpus};
use lesgp::hunt::parse_constraints;
use lesgp::report::{human_decomposition, human_theorems, to_machine};
use lesgp::{
    check_decomposition, down_set, emit_report, enumerate_le_semigroups, hunt, j_classes,
    read_structure, write_structure, AnalysisDocument, Dedupe, EnumerationTask, LeSemigroup, Mode,
    Status, TheoremId,
};

#[derive(Parser)]
#[command(name = "lesgp", version, about = "Finite lattice-ordered semigroups")]
struct Cli {
    /// Worker threads for enumeration (results do not depend on it).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and check every axiom.
    Validate { file: PathBuf },
    /// Properties, classes, decomposition and theorem checks.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        machine: bool,
    },
    /// The 𝒥-classes with their Green / subsemigroup / subgroup flags.
    Jclasses {
        file: PathBuf,
        #[arg(long)]
        machine: bool,
    },
    /// Run theorem checks; exits 1 on a violation.
    Check {
        file: PathBuf,
        /// A theorem id (e.g. `main`, `sd-fwd`) or `all`.
        #[arg(long, default_value = "all")]
        theorem: String,
        #[arg(long)]
        machine: bool,
    },
    /// The semilattice-of-classes decomposition record.
    Decompose {
        file: PathBuf,
        #[arg(long)]
        machine: bool,
    },
    /// The down-set ]e] of an ideal element, as a structure file.
    Downset {
        file: PathBuf,
        #[arg(long)]
        element: usize,
    },
    /// Write every le-semigroup of order 1..=N (or exactly N) to a directory.
    Enumerate {
        #[arg(short = 'n')]
        n: usize,
        /// One representative per isomorphism class.
        #[arg(long)]
        canonical: bool,
        /// Only order N instead of 1..=N.
        #[arg(long)]
        only: bool,
        #[arg(short = 'o', long = "out")]
        out: PathBuf,
    },
    /// Search order N for structures meeting the constraints.
    Hunt {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, num_args = 1..)]
        require: Vec<String>,
        #[arg(long, num_args = 1..)]
        forbid: Vec<String>,
        #[arg(long)]
        limit: Option<usize>,
        /// Search all labeled structures instead of isomorphism classes.
        #[arg(long)]
        labeled: bool,
        /// Exit 1 if anything is found.
        #[arg(long)]
        expect_none: bool,
        /// Write hits as a corpus instead of printing them.
        #[arg(short = 'o', long = "out")]
        out: Option<PathBuf>,
    },
}

enum Failure {
    /// Exit 1.
    Found,
    /// Exit 2.
    Invalid(String),
}

impl From<lesgp::Error> for Failure {
    fn from(e: lesgp::Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

fn load(path: &PathBuf) -> Result<LeSemigroup, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?;
    read_structure(&text).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))
}

fn mode(machine: bool) -> Mode {
    if machine {
        Mode::Machine
    } else {
        Mode::Human
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let jobs = cli.jobs;
    match cli.command {
        Command::Validate { file } => {
            let s = load(&file)?;
            println!(
                "ok: n={} top={} bottom={}",
                s.size(),
                s.lattice().top(),
                s.bottom()
            );
        }
        Command::Analyze { file, machine } => {
            let s = load(&file)?;
            let doc = AnalysisDocument::new(&s, Some(file.display().to_string()));
            print!("{}", emit_report(&doc, mode(machine)));
            if doc.theorems.iter().any(|t| t.status == Status::Violation) {
                return Err(Failure::Found);
            }
        }
        Command::Jclasses { file, machine } => {
            let s = load(&file)?;
            let jc = j_classes(&s);
            if machine {
                print!("{}", to_machine(&jc));
            } else {
                for c in &jc.classes {
                    let members: Vec<String> = c.members.iter().map(ToString::to_string).collect();
                    println!(
                        "J_{}: {{{}}}  green={} subsemigroup={} subgroup={}",
                        c.representative,
                        members.join(", "),
                        c.green,
                        c.subsemigroup,
                        c.subgroup
                    );
                }
            }
        }
        Command::Check {
            file,
            theorem,
            machine,
        } => {
            let s = load(&file)?;
            let ids: Vec<TheoremId> = if theorem.eq_ignore_ascii_case("all") {
                TheoremId::ALL.to_vec()
            } else {
                vec![theorem.parse()?]
            };
            let ctx = lesgp::theorems::Context::new(&s);
            let reports: Vec<_> = ids.iter().map(|&id| ctx.check(id)).collect();
            if machine {
                print!("{}", to_machine(&reports));
            } else {
                print!("{}", human_theorems(&reports));
            }
            if reports.iter().any(|r| r.status == Status::Violation) {
                return Err(Failure::Found);
            }
        }
        Command::Decompose { file, machine } => {
            let s = load(&file)?;
            let d = check_decomposition(&s);
            if machine {
                print!("{}", to_machine(&d));
            } else {
                print!("{}", human_decomposition(&d));
            }
        }
        Command::Downset { file, element } => {
            let s = load(&file)?;
            let e = s.element(element)?;
            let ds = down_set(&s, e)?;
            let members: Vec<String> = ds.members.iter().map(ToString::to_string).collect();
            println!(
                "# ]{element}] = {{{}}}; local i is parent member i",
                members.join(", ")
            );
            print!("{}", write_structure(&ds.structure));
        }
        Command::Enumerate {
            n,
            canonical,
            only,
            out,
        } => {
            let dedupe = if canonical {
                Dedupe::Canonical
            } else {
                Dedupe::Labeled
            };
            let orders: Vec<usize> = if only { vec![n] } else { (1..=n).collect() };
            let mut by_order = Vec::new();
            for k in orders {
                let mut task = EnumerationTask::new(k);
                task.dedupe = dedupe;
                task.jobs = jobs;
                by_order.push((k, enumerate_le_semigroups(&task)?));
            }
            write_corpus(&out, &by_order, dedupe)?;
            print!(
                "{}",
                lesgp::corpus::index_text(
                    &by_order
                        .iter()
                        .map(|(k, v)| (*k, v.len()))
                        .collect::<Vec<_>>(),
                    dedupe
                )
            );
        }
        Command::Hunt {
            n,
            require,
            forbid,
            limit,
            labeled,
            expect_none,
            out,
        } => {
            let (req, forb) = parse_constraints(&require, &forbid)?;
            let mut task = EnumerationTask::new(n);
            task.require = req;
            task.forbid = forb;
            task.limit = limit;
            task.jobs = jobs;
            if labeled {
                task.dedupe = Dedupe::Labeled;
            }
            let hits = hunt(&task)?;
            match &out {
                Some(dir) => {
                    write_corpus(dir, &[(n, hits.clone())], task.dedupe)?;
                }
                None => {
                    for (name, text) in corpus_files(&hits, task.dedupe) {
                        println!("# {name}");
                        print!("{text}");
                    }
                }
            }
            eprintln!("{} structure(s) found", hits.len());
            if expect_none && !hits.is_empty() {
                return Err(Failure::Found);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Found) => ExitCode::from(1),
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
