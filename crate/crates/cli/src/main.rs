use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use schur_weyl::checks::{self, SuiteReport};
use schur_weyl::json::{ComputationalJson, MatrixJson, StateJson};
use schur_weyl::tableaux::{Alphabet, StandardYoungTableau};
use schur_weyl::{decode, encode, schur_matrix, AmplitudeEngine, Config, SchurWeylState, SwyGraph};

#[derive(Parser)]
#[command(name = "schur", version, about = "Exact Schur-Weyl transform of qudit registers")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalArgs {
    /// Local dimension of each qudit
    #[arg(long, global = true, default_value_t = 2, value_parser = clap::value_parser!(u8).range(1..))]
    d: u8,
    /// Edge amplitude engine
    #[arg(long, global = true, value_enum, default_value_t = EngineArg::Louck)]
    engine: EngineArg,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Largest d^n allowed for full-matrix work
    #[arg(long, global = true, env = "SCHUR_SIZE_BOUND", default_value_t = schur_weyl::DEFAULT_SIZE_BOUND)]
    size_bound: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum EngineArg {
    Louck,
    Pattern,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Expand a computational basis word in the Schur-Weyl basis
    Encode {
        /// `0101` for qubits, comma-separated letters `1..d` otherwise
        word: String,
        /// Also print each Weyl tableau as a Gelfand-Tsetlin pattern
        #[arg(long)]
        show_patterns: bool,
    },
    /// Expand a Schur-Weyl state (JSON) in the computational basis
    Decode {
        /// Path to a state file, `-` for stdin, or inline JSON
        state: String,
    },
    /// Build the Schur-Weyl-Young graph up to level n
    Graph {
        #[arg(long)]
        n: usize,
        /// Write Graphviz DOT to this path (`-` for stdout)
        #[arg(long)]
        dot: Option<String>,
        /// Write the JSON dump to this path (`-` for stdout)
        #[arg(long)]
        json: Option<String>,
    },
    /// Run the self-check suites for (d, n)
    Check {
        #[arg(long)]
        n: usize,
    },
    /// Print the full transform matrix for (d, n)
    Matrix {
        #[arg(long)]
        n: usize,
    },
}

enum Failure {
    Validation(String),
    Check,
    Io(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Validation(_) => 2,
            Failure::Check => 3,
            Failure::Io(_) => 4,
        }
    }
}

fn invalid(e: impl ToString) -> Failure {
    Failure::Validation(e.to_string())
}

fn config(args: &GlobalArgs) -> Result<Config, Failure> {
    let engine = match args.engine {
        EngineArg::Louck => AmplitudeEngine::Louck,
        EngineArg::Pattern => AmplitudeEngine::PatternD2,
        EngineArg::Both => AmplitudeEngine::BothVerify,
    };
    engine.check_dimension(args.d as usize).map_err(invalid)?;
    Ok(Config::default().with_engine(engine).with_size_bound(args.size_bound))
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable") + "\n"
}

fn render_state(state: &SchurWeylState, show_patterns: bool) -> String {
    let mut out = String::new();
    for (t, a) in state.terms() {
        let young = StandardYoungTableau::from_path(t.young());
        out.push_str(&format!("{a}\t{:.6}\t{}\t{}\t{young}", a.to_f64(), t.shape(), t.weyl()));
        if show_patterns {
            out.push_str(&format!("\t{}", t.pattern()));
        }
        out.push('\n');
    }
    out
}

fn read_input(source: &str) -> Result<String, Failure> {
    let trimmed = source.trim_start();
    if trimmed.starts_with('{') {
        return Ok(source.to_string());
    }
    if source == "-" {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf).map_err(|e| Failure::Io(format!("stdin: {e}")))?;
        return Ok(buf);
    }
    fs::read_to_string(source).map_err(|e| Failure::Io(format!("{source}: {e}")))
}

fn write_output(path: &str, text: &str, stdout: &mut String) -> Result<(), Failure> {
    if path == "-" {
        stdout.push_str(text);
        Ok(())
    } else {
        fs::write(path, text).map_err(|e| Failure::Io(format!("{path}: {e}")))
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    let args = &cli.global;
    let cfg = config(args)?;
    let d = args.d as usize;
    let json = args.format == Format::Json;
    match cli.command {
        Command::Encode { word, show_patterns } => {
            let letters = Alphabet::new(args.d).parse_word(&word).map_err(invalid)?;
            let state = encode(&letters, d, &cfg.engine).map_err(invalid)?;
            Ok(if json { to_json(&StateJson::from_state(&state)) } else { render_state(&state, show_patterns) })
        }
        Command::Decode { state } => {
            let text = read_input(&state)?;
            let parsed: StateJson =
                serde_json::from_str(&text).map_err(|e| invalid(format!("malformed state JSON: {e}")))?;
            cfg.engine.check_dimension(parsed.d).map_err(invalid)?;
            let state = parsed.to_state().map_err(invalid)?;
            let words = decode(&state, &cfg.engine).map_err(invalid)?;
            if json {
                return Ok(to_json(&ComputationalJson::from_state(&words)));
            }
            let alphabet = Alphabet::new(words.d() as u8);
            Ok(words
                .terms()
                .iter()
                .map(|(w, a)| format!("{}\t{a}\t{:.6}\n", alphabet.format_word(w), a.to_f64()))
                .collect())
        }
        Command::Graph { n, dot, json: json_path } => {
            let graph = SwyGraph::build_with(d, n, &cfg).map_err(invalid)?;
            let mut out = String::new();
            if let Some(path) = &dot {
                write_output(path, &graph.to_dot(), &mut out)?;
            }
            if let Some(path) = &json_path {
                write_output(path, &to_json(&graph.to_json()), &mut out)?;
            }
            if dot.is_none() && json_path.is_none() {
                if json {
                    out.push_str(&to_json(&graph.to_json()));
                } else {
                    for level in 0..=n {
                        let census: Vec<String> =
                            graph.level_census(level).iter().map(|(s, c)| format!("{s}:{c}")).collect();
                        out.push_str(&format!("level {level}: {}\n", census.join(" ")));
                    }
                    out.push_str(&format!("{} nodes, {} edges\n", graph.vertices().len(), graph.edges().len()));
                }
            }
            Ok(out)
        }
        Command::Check { n } => {
            let reports = checks::run_all(d, n, &cfg).map_err(invalid)?;
            let out = if json { to_json(&reports) } else { reports.iter().map(|r| format!("{r}\n")).collect() };
            if reports.iter().any(SuiteReport::failed) {
                print!("{out}");
                return Err(Failure::Check);
            }
            Ok(out)
        }
        Command::Matrix { n } => {
            let (index, m) = schur_matrix(d, n, &cfg).map_err(invalid)?;
            if json {
                return Ok(to_json(&MatrixJson::from_matrix(&index, &m)));
            }
            let mut out = String::new();
            for (row, t) in index.triplets().iter().enumerate() {
                let young = StandardYoungTableau::from_path(t.young());
                out.push_str(&format!("row {row}\t{}\t{}\t{young}\n", t.shape(), t.weyl()));
            }
            let alphabet = Alphabet::new(args.d);
            for (&(row, col), a) in m.entries() {
                let word = alphabet.format_word(&schur_weyl::transform::word_of_index(col, d, n));
                out.push_str(&format!("{row}\t{word}\t{a}\t{:.6}\n", a.to_f64()));
            }
            Ok(out)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(4);
            }
            ExitCode::SUCCESS
        }
        Err(failure) => {
            match &failure {
                Failure::Validation(msg) | Failure::Io(msg) => eprintln!("error: {msg}"),
                Failure::Check => eprintln!("error: check suite failed"),
            }
            ExitCode::from(failure.code())
        }
    }
}
