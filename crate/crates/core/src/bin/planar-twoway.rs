//! Command-line front end: `planar-twoway <command> ...`.
//!
//! Exit status: 0 on success, 1 when the checked property fails, 2 on usage
//! or input errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use planar_twoway::alphabet::{Alphabet, Symbol, TapeSymbol, Word};
use planar_twoway::constructions::{
    compose_with_report, flipflop_to_planar, is_aperiodic_sequential, mrt_to_planar, reverse_transducer,
};
use planar_twoway::io::{emit_dot, parse_document, serialize_two_way, DotView, MachineDocument, TwoWayTag};
use planar_twoway::monoid::{machine_monoid, DEFAULT_MONOID_CAP};
use planar_twoway::oracles::{semantic_equiv, DEFAULT_MAX_LENGTH};
use planar_twoway::planarity::{check_planar_machine, find_planar_order, LetterScope, MachinePlanarity, DEFAULT_ORDER_SEARCH_CAP};
use planar_twoway::{Error, TwoWayMachine};

#[derive(Parser)]
#[command(name = "planar-twoway", version, about = "Planar two-way automata and transducers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Letters {
    All,
    Input,
}

#[derive(Subcommand)]
enum Command {
    /// Report determinism, reversibility and planarity.
    Check {
        file: PathBuf,
        /// Ignore the declared order and search for a planar one.
        #[arg(long)]
        search_order: bool,
        #[arg(long, value_enum, default_value = "all")]
        letters: Letters,
    },
    /// Run a machine on a word.
    Run {
        file: PathBuf,
        word: String,
        #[arg(long)]
        trace: bool,
    },
    /// Compute the behaviour monoid and test it for aperiodicity.
    Monoid {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MONOID_CAP)]
        cap: usize,
    },
    /// Write a transducer computing SECOND ∘ FIRST.
    Compose {
        first: PathBuf,
        second: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Translate a sequential or register transducer into a planar reversible one.
    Translate {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Write the three-state reversing transducer.
    GenReverse {
        /// Space-separated symbols.
        #[arg(long)]
        alphabet: String,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Compare two machines on every word up to a length.
    Equiv {
        left: PathBuf,
        right: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_LENGTH)]
        maxlen: usize,
    },
    /// Emit a Graphviz diagram of one transition or of a run.
    Diagram {
        file: PathBuf,
        #[command(flatten)]
        view: ViewArgs,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct ViewArgs {
    #[arg(long)]
    letter: Option<String>,
    #[arg(long)]
    run: Option<String>,
}

enum Failure {
    Property,
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn load(path: &Path) -> Result<MachineDocument, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse_document(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn two_way(doc: MachineDocument, path: &Path) -> Result<(TwoWayTag, TwoWayMachine), Failure> {
    match doc {
        MachineDocument::TwoWay { tag, machine } => Ok((tag, machine)),
        other => Err(Failure::Input(format!(
            "{}: expected a two-way machine, found `{}`",
            path.display(),
            other.kind_tag()
        ))),
    }
}

fn write_out(path: &Path, text: &str) -> Outcome {
    fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn input_alphabet(doc: &MachineDocument) -> &Alphabet {
    match doc {
        MachineDocument::TwoWay { machine, .. } => machine.input_alphabet(),
        MachineDocument::Sequential(s) => s.input_alphabet(),
        MachineDocument::Register(m) => m.input_alphabet(),
    }
}

fn output_alphabet(doc: &MachineDocument) -> &Alphabet {
    match doc {
        MachineDocument::TwoWay { machine, .. } => machine.output_alphabet(),
        MachineDocument::Sequential(s) => s.output_alphabet(),
        MachineDocument::Register(m) => m.output_alphabet(),
    }
}

/// The partial function computed by a document; `None` when undefined.
fn evaluate(doc: &MachineDocument, w: &[Symbol]) -> Option<Word> {
    match doc {
        MachineDocument::TwoWay { machine, .. } => machine.run(w).ok()?.into_output(),
        MachineDocument::Sequential(s) => s.apply(w).ok(),
        MachineDocument::Register(m) => m.apply(w).ok(),
    }
}

fn show_word(alphabet: &Alphabet, w: &[Symbol]) -> String {
    format!("\"{}\"", alphabet.format(w))
}

fn print_planarity(m: &TwoWayMachine, result: &MachinePlanarity) -> bool {
    match result {
        MachinePlanarity::Planar => {
            println!("planar: yes");
            true
        }
        MachinePlanarity::NonPlanar { symbol, witness } => {
            let s = m.states();
            let v = |x: planar_twoway::planarity::Vertex| format!("({},{})", s.name(x.state), x.side.sign());
            println!("planar: no");
            println!(
                "witness on {symbol}: u={} r={} v={} s={}",
                v(witness.u),
                v(witness.r),
                v(witness.v),
                v(witness.s)
            );
            false
        }
    }
}

fn order_names(m: &TwoWayMachine, order: &[usize]) -> String {
    order.iter().map(|&q| m.states().name(q)).collect::<Vec<_>>().join(" < ")
}

fn check(file: &Path, search_order: bool, letters: Letters) -> Outcome {
    let scope = match letters {
        Letters::All => LetterScope::All,
        Letters::Input => LetterScope::InputOnly,
    };
    match load(file)? {
        MachineDocument::TwoWay { tag, mut machine } => {
            println!("kind: {}", tag.as_str());
            println!("deterministic: {}", yes_no(machine.is_deterministic()));
            let reversible = machine.is_reversible();
            println!("reversible: {}", yes_no(reversible));
            let planar = if search_order {
                machine.clear_order();
                match find_planar_order(&machine, scope, DEFAULT_ORDER_SEARCH_CAP)? {
                    Some(order) => {
                        println!("planar: yes");
                        println!("order: {}", order_names(&machine, &order));
                        true
                    }
                    None => {
                        println!("planar: no (no order works)");
                        false
                    }
                }
            } else {
                let order = machine.states().order().map(<[usize]>::to_vec).unwrap_or_default();
                println!("order: {}", order_names(&machine, &order));
                print_planarity(&machine, &check_planar_machine(&machine, scope)?)
            };
            let claim_ok = tag != TwoWayTag::ReversiblePlanar || reversible;
            if planar && claim_ok {
                Ok(())
            } else {
                Err(Failure::Property)
            }
        }
        MachineDocument::Sequential(s) => {
            println!("kind: seq");
            println!("states: {}", s.state_count());
            let aperiodic = is_aperiodic_sequential(&s)?;
            println!("aperiodic: {}", yes_no(aperiodic));
            if aperiodic {
                Ok(())
            } else {
                Err(Failure::Property)
            }
        }
        MachineDocument::Register(m) => {
            println!("kind: mrt");
            match m.check_copyless_monotone() {
                Ok(()) => {
                    println!("copyless monotone: yes");
                    Ok(())
                }
                Err(e) => {
                    println!("copyless monotone: no ({e})");
                    Err(Failure::Property)
                }
            }
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn run(file: &Path, word: &str, trace: bool) -> Outcome {
    let doc = load(file)?;
    let w = input_alphabet(&doc).tokenize(word)?;
    let out_alpha = output_alphabet(&doc).clone();
    match &doc {
        MachineDocument::TwoWay { machine, .. } => {
            let result = if trace {
                machine.run_traced(&w)?
            } else {
                machine.run(&w)?
            };
            if let Some(steps) = &result.trace {
                let s = machine.states();
                for step in steps {
                    let c = &step.config;
                    let tape = |xs: &[TapeSymbol]| xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
                    println!(
                        "[{}] {} [{}]  emits {}",
                        tape(&c.left),
                        s.name(c.state),
                        tape(&c.right),
                        show_word(&out_alpha, &step.emitted)
                    );
                }
            }
            println!("status: {:?}", result.status);
            println!("steps: {}", result.steps);
            if result.accepted() {
                println!("output: {}", show_word(&out_alpha, &result.output));
                Ok(())
            } else {
                Err(Failure::Property)
            }
        }
        _ => {
            let out = evaluate(&doc, &w).expect("sequential and register transducers are total");
            println!("status: Accepted");
            println!("output: {}", show_word(&out_alpha, &out));
            Ok(())
        }
    }
}

fn monoid(file: &Path, cap: usize) -> Outcome {
    let (_, machine) = two_way(load(file)?, file)?;
    let m = machine_monoid(&machine, cap)?;
    let report = m.aperiodicity();
    println!("elements: {}", m.len());
    println!("aperiodic: {}", yes_no(report.aperiodic));
    if report.aperiodic {
        println!("index: {}", report.index);
        Ok(())
    } else {
        let (x, cycle) = report.offending.expect("offending element");
        let s = machine.states();
        let pairs: Vec<String> = x
            .pairs()
            .map(|(q, r)| format!("({},{})", s.name(q), s.name(r)))
            .collect();
        println!(
            "offending: {{{}}} threshold {} period {}",
            pairs.join(", "),
            cycle.threshold,
            cycle.period
        );
        Err(Failure::Property)
    }
}

fn compose(first: &Path, second: &Path, output: &Path) -> Outcome {
    let (_, t1) = two_way(load(first)?, first)?;
    let (_, t2) = two_way(load(second)?, second)?;
    let c = compose_with_report(&t1, &t2)?;
    eprintln!("composite: {} states, order {:?}", c.machine.states().len(), c.order);
    write_out(output, &serialize_two_way(TwoWayTag::ReversiblePlanar, &c.machine))
}

fn translate(file: &Path, output: &Path) -> Outcome {
    let machine = match load(file)? {
        MachineDocument::Sequential(s) => flipflop_to_planar(&s)?,
        MachineDocument::Register(m) => mrt_to_planar(&m)?,
        MachineDocument::TwoWay { .. } => {
            return Err(Failure::Input(format!(
                "{}: only `seq` and `mrt` documents can be translated",
                file.display()
            )))
        }
    };
    write_out(output, &serialize_two_way(TwoWayTag::ReversiblePlanar, &machine))
}

fn gen_reverse(alphabet: &str, output: &Path) -> Outcome {
    let sigma = Alphabet::new(alphabet.split_whitespace())?;
    write_out(output, &serialize_two_way(TwoWayTag::ReversiblePlanar, &reverse_transducer(&sigma)))
}

fn equiv(left: &Path, right: &Path, maxlen: usize) -> Outcome {
    let l = load(left)?;
    let r = load(right)?;
    let sigma = input_alphabet(&l).clone();
    let report = semantic_equiv(|w| evaluate(&l, w), |w| evaluate(&r, w), &sigma, maxlen);
    println!("words checked: {} (length <= {})", report.words_checked, report.max_length);
    match report.counterexample {
        None => {
            println!("equal: yes");
            Ok(())
        }
        Some((w, a, b)) => {
            let show = |alpha: &Alphabet, x: &Option<Word>| match x {
                Some(x) => show_word(alpha, x),
                None => "undefined".into(),
            };
            println!("equal: no");
            println!("counterexample: {}", show_word(&sigma, &w));
            println!("left: {}", show(output_alphabet(&l), &a));
            println!("right: {}", show(output_alphabet(&r), &b));
            Err(Failure::Property)
        }
    }
}

fn diagram(file: &Path, view: &ViewArgs, output: Option<&Path>) -> Outcome {
    let (_, m) = two_way(load(file)?, file)?;
    let view = match (&view.letter, &view.run) {
        (Some(x), _) => DotView::Profile(match x.as_str() {
            "^" => TapeSymbol::LeftMarker,
            "$" => TapeSymbol::RightMarker,
            a => {
                let a = Symbol::new(a);
                if !m.input_alphabet().contains(&a) {
                    return Err(Error::AlphabetError(a.to_string()).into());
                }
                TapeSymbol::Letter(a)
            }
        }),
        (None, Some(w)) => DotView::Run(m.input_alphabet().tokenize(w)?),
        (None, None) => unreachable!("clap enforces one view"),
    };
    let dot = emit_dot(&m, &view)?;
    match output {
        Some(p) => write_out(p, &dot),
        None => {
            print!("{dot}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Check {
            file,
            search_order,
            letters,
        } => check(file, *search_order, *letters),
        Command::Run { file, word, trace } => run(file, word, *trace),
        Command::Monoid { file, cap } => monoid(file, *cap),
        Command::Compose { first, second, output } => compose(first, second, output),
        Command::Translate { file, output } => translate(file, output),
        Command::GenReverse { alphabet, output } => gen_reverse(alphabet, output),
        Command::Equiv { left, right, maxlen } => equiv(left, right, *maxlen),
        Command::Diagram { file, view, output } => diagram(file, view, output.as_deref()),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Property) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
