use std::fmt::Display;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use goldman::geometricity::{is_geometric_with_budget, DEFAULT_ORIENTATION_BUDGET};
use goldman::selftest::{self, SelftestConfig};
use goldman::{bracket_words, find_witness, CyclicWord, Homomorphism, PeripheralInfo, Reason, RibbonSurface, Word};

const USAGE: u8 = 1;
const INVALID: u8 = 2;
const NOT_ISOMORPHISM: u8 = 3;
const NOT_GEOMETRIC: u8 = 4;
const NOT_PERIPHERAL: u8 = 5;

/// Goldman bracket computations on one-vertex ribbon surfaces.
#[derive(Parser)]
#[command(name = "goldman", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the topology and boundary words of a surface.
    Info { surface: PathBuf },
    /// Bracket of two classes given by (not necessarily reduced) words.
    Bracket { surface: PathBuf, x: String, y: String },
    /// Decide whether a class is a power of a boundary class.
    Peripheral { surface: PathBuf, word: String },
    /// Decide whether a map of fundamental groups comes from a homeomorphism.
    Mapcheck {
        #[command(flatten)]
        map: MapArgs,
    },
    /// Search for a pair of classes on which a map fails to commute with the bracket.
    Witness {
        #[command(flatten)]
        map: MapArgs,
    },
    /// Run the seeded property suites.
    Selftest {
        #[arg(long, default_value_t = SelftestConfig::default().rank_max)]
        rank_max: usize,
        #[arg(long, default_value_t = SelftestConfig::default().len_max)]
        len_max: usize,
        #[arg(long, default_value_t = SelftestConfig::default().trials)]
        trials: usize,
        #[arg(long, default_value_t = SelftestConfig::default().seed)]
        seed: u64,
    },
}

#[derive(Args)]
struct MapArgs {
    /// Source surface file.
    from: PathBuf,
    /// Target surface file.
    to: PathBuf,
    /// Generator images, e.g. "a->a,b->ba".
    map: String,
    /// Bracket comparisons allowed for orientation and witness search.
    #[arg(long, default_value_t = DEFAULT_ORIENTATION_BUDGET)]
    samples: usize,
    /// Largest total length of a witness pair.
    #[arg(long, default_value_t = 6)]
    maxlen: usize,
    /// Count anticommuting pairs as failures to commute.
    #[arg(long)]
    strict: bool,
}

/// An early exit with a message for stderr.
struct Failure(u8, String);

fn invalid(e: impl Display) -> Failure {
    Failure(INVALID, e.to_string())
}

fn load_surface(path: &Path) -> Result<RibbonSurface, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| invalid(format!("{}: {e}", path.display())))?;
    text.parse().map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn info(path: &Path) -> Result<u8, Failure> {
    let s = load_surface(path)?;
    let t = s.topology();
    println!("rank {}", s.rank());
    println!("chi {}", t.euler_characteristic);
    println!("genus {}", t.genus);
    println!("boundary {}", t.boundary_count);
    for (i, w) in s.boundary_words().iter().enumerate() {
        println!("C{i}: {w}");
    }
    Ok(0)
}

fn bracket(path: &Path, x: &str, y: &str) -> Result<u8, Failure> {
    let s = load_surface(path)?;
    let x = Word::parse(x, s.rank()).map_err(invalid)?;
    let y = Word::parse(y, s.rank()).map_err(invalid)?;
    println!("{}", bracket_words(&s, &x, &y).map_err(invalid)?);
    Ok(0)
}

fn peripheral(path: &Path, word: &str) -> Result<u8, Failure> {
    let s = load_surface(path)?;
    let x: CyclicWord = Word::parse(word, s.rank()).map_err(invalid)?.cyclic_canonical();
    match s.is_peripheral(&x).map_err(invalid)? {
        PeripheralInfo::Peripheral { component, exponent } => {
            println!("peripheral component {component} exponent {exponent}");
            Ok(0)
        }
        PeripheralInfo::NotPeripheral => {
            println!("not peripheral");
            Ok(NOT_PERIPHERAL)
        }
    }
}

fn load_map(args: &MapArgs) -> Result<(RibbonSurface, RibbonSurface, Homomorphism), Failure> {
    let from = load_surface(&args.from)?;
    let to = load_surface(&args.to)?;
    let f = Homomorphism::parse(&args.map, to.rank()).map_err(invalid)?;
    if f.source_rank() != from.rank() {
        return Err(invalid(format!(
            "map has {} generators but the source surface has rank {}",
            f.source_rank(),
            from.rank()
        )));
    }
    Ok((from, to, f))
}

fn print_witness(found: Option<(CyclicWord, CyclicWord)>) -> bool {
    match &found {
        Some((x, y)) => println!("witness: ({x}, {y})"),
        None => println!("witness: none found"),
    }
    found.is_some()
}

fn mapcheck(args: &MapArgs) -> Result<u8, Failure> {
    let (from, to, f) = load_map(args)?;
    let report = is_geometric_with_budget(&f, &from, &to, args.samples).map_err(invalid)?;
    println!("{report}");
    if report.reason == Reason::NotIsomorphism {
        return Ok(NOT_ISOMORPHISM);
    }
    if report.geometric && (!args.strict || report.strictly_commutes()) {
        return Ok(0);
    }
    if report.geometric {
        println!("strict: not bracket-commuting");
    }
    print_witness(find_witness(&f, &from, &to, args.maxlen, args.samples, args.strict).map_err(invalid)?);
    Ok(NOT_GEOMETRIC)
}

fn witness(args: &MapArgs) -> Result<u8, Failure> {
    let (from, to, f) = load_map(args)?;
    if !f.is_isomorphism() {
        println!("{}", Reason::NotIsomorphism);
        return Ok(NOT_ISOMORPHISM);
    }
    let found = find_witness(&f, &from, &to, args.maxlen, args.samples, args.strict).map_err(invalid)?;
    Ok(if print_witness(found) { NOT_GEOMETRIC } else { 0 })
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Info { surface } => info(&surface),
        Command::Bracket { surface, x, y } => bracket(&surface, &x, &y),
        Command::Peripheral { surface, word } => peripheral(&surface, &word),
        Command::Mapcheck { map } => mapcheck(&map),
        Command::Witness { map } => witness(&map),
        Command::Selftest { rank_max, len_max, trials, seed } => {
            let report = selftest::run(SelftestConfig { rank_max, len_max, trials, seed }).map_err(invalid)?;
            println!("{report}");
            Ok(if report.passed() { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, message)) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}
