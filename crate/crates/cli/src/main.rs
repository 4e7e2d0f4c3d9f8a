mod verify;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use sdcodes::circulant::{self, DEFAULT_CIRCULANT_BUDGET};
use sdcodes::formats::{self, CodeFile, DatabaseFile};
use sdcodes::{
    classify_up_to, code_min_distance, codes_equivalent, euler_transform, lengthen_search, mass_lower_bound,
    mass_total, selfdual_count_oracle, standard_form, weight_enumerator, ClassifyOptions, Error, Exec,
    DEFAULT_ENUMERATION_CAP, DEFAULT_ORBIT_BUDGET,
};

/// Classification of self-dual additive codes over F_{m²} by orbits of
/// m-weighted graphs under generalized local complementation.
#[derive(Parser, Debug)]
#[command(name = "sdcodes", version)]
struct Cli {
    /// Worker threads; 1 runs every loop sequentially.
    #[arg(long, global = true, env = "SDCODES_WORKERS")]
    workers: Option<usize>,
    /// Maximum number of classes visited per orbit.
    #[arg(long, global = true, env = "SDCODES_ORBIT_BUDGET", default_value_t = DEFAULT_ORBIT_BUDGET)]
    orbit_budget: usize,
    /// Maximum number of codewords (or maps) enumerated by one computation.
    #[arg(long, global = true, env = "SDCODES_ENUM_CAP", default_value_t = DEFAULT_ENUMERATION_CAP)]
    enum_cap: u128,
    /// Print progress to stderr.
    #[arg(short, long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify indecomposable codes of length N and write the orbit database.
    Classify {
        /// Alphabet parameter: 2, 3, 4 or 5.
        #[arg(long)]
        m: u8,
        /// Code length.
        #[arg(long)]
        n: usize,
        /// Attach weight enumerators to every representative.
        #[arg(long)]
        enumerators: bool,
        /// Write here instead of stdout.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Extend a database by one vertex, keeping codes of distance at least D.
    Lengthen {
        /// Database of length n containing every orbit with d >= D - 1.
        db: PathBuf,
        /// Keep only codes of length n + 1 with at least this distance.
        #[arg(long)]
        target_d: usize,
        /// Attach weight enumerators to every representative.
        #[arg(long)]
        enumerators: bool,
        /// Write here instead of stdout.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Print i_n, t_n, the mass lower bound and distance counts up to length N.
    Table {
        /// Alphabet parameter: 2, 3, 4 or 5.
        #[arg(long)]
        m: u8,
        /// Code length.
        #[arg(long)]
        n: usize,
        /// Use these comma-separated i_1, i_2, ... instead of classifying.
        #[arg(long, value_delimiter = ',')]
        counts: Option<Vec<u128>>,
    },
    /// Print the number of self-dual codes and the class-count lower bound.
    Mass {
        /// Alphabet parameter: 2, 3, 4 or 5.
        #[arg(long)]
        m: u8,
        /// Code length.
        #[arg(long)]
        n: usize,
        /// Also count isotropic subspaces by brute force.
        #[arg(long)]
        oracle: bool,
    },
    /// Order of the automorphism group of a code, by brute force.
    Aut {
        /// Graph, circulant, code or stabilizer file.
        file: PathBuf,
    },
    /// Orbit size and isomorphism-class representatives of a graph's orbit.
    Orbit {
        /// Graph, circulant, code or stabilizer file.
        file: PathBuf,
    },
    /// Minimum distance of a code.
    Mindist {
        /// Graph, circulant, code or stabilizer file.
        file: PathBuf,
    },
    /// Weight enumerator of a code.
    Wenum {
        /// Graph, circulant, code or stabilizer file.
        file: PathBuf,
    },
    /// Whether two codes are equivalent.
    Equiv {
        /// Graph, circulant, code or stabilizer file.
        first: PathBuf,
        second: PathBuf,
    },
    /// Reduce a stabilizer matrix to graph form; the transcript goes to stderr.
    Graphform {
        /// Stabilizer file.
        file: PathBuf,
        /// Write here instead of stdout.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive search over circulant graph codes.
    Circulant {
        /// Alphabet parameter: 2, 3, 4 or 5.
        #[arg(long, required_unless_present = "verify_paper_list")]
        m: Option<u8>,
        /// Code length.
        #[arg(long, required_unless_present = "verify_paper_list")]
        n: Option<usize>,
        /// Discard codes below this distance.
        #[arg(long)]
        floor: Option<usize>,
        /// Print every witness row instead of the first.
        #[arg(long)]
        witnesses: bool,
        /// Recompute the listed circulant codes (restricted to --m/--n when given).
        #[arg(long)]
        verify_paper_list: bool,
        /// Maximum number of first rows searched.
        #[arg(long, default_value_t = DEFAULT_CIRCULANT_BUDGET)]
        budget: u128,
    },
    /// Run the regression suite against the published tables.
    Verify {
        /// Include the slower cases: m=3 n=8 with the lengthening chain, m=2 n=10,
        /// the n = 17, 18 listed codes and circulant cells with up to 6·10⁴ first rows.
        #[arg(long)]
        long: bool,
    },
}

#[derive(Debug)]
enum Failure {
    Mismatch,
    Input(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

struct Ctx {
    exec: Exec,
    orbit_budget: usize,
    enum_cap: u128,
    verbose: bool,
}

impl Ctx {
    fn log(&self, msg: impl AsRef<str>) {
        if self.verbose {
            eprintln!("{}", msg.as_ref());
        }
    }

    fn options(&self, enumerators: bool) -> ClassifyOptions {
        ClassifyOptions {
            exec: self.exec,
            orbit_budget: self.orbit_budget,
            enumerator_cap: enumerators.then_some(self.enum_cap),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn with_path<T>(path: &Path, r: sdcodes::Result<T>) -> Result<T, Failure> {
    r.map_err(|e| match Failure::from(e) {
        Failure::Input(msg) => Failure::Input(format!("{}: {msg}", path.display())),
        other => other,
    })
}

fn read_code_file(path: &Path) -> Result<CodeFile, Failure> {
    with_path(path, formats::parse_code_file(&read(path)?))
}

fn emit(out: &Option<PathBuf>, text: &str) -> Outcome {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn metadata(ctx: &Ctx, enumerators: bool) -> BTreeMap<String, String> {
    BTreeMap::from([
        ("version".to_string(), env!("CARGO_PKG_VERSION").to_string()),
        ("orbit_budget".to_string(), ctx.orbit_budget.to_string()),
        ("enumerators".to_string(), enumerators.to_string()),
    ])
}

fn run(cli: Cli) -> Outcome {
    let ctx = Ctx {
        exec: Exec::with_workers(cli.workers),
        orbit_budget: cli.orbit_budget,
        enum_cap: cli.enum_cap,
        verbose: cli.verbose,
    };
    match cli.command {
        Command::Classify { m, n, enumerators, out } => {
            let dbs = classify_up_to(m, n.max(1), &ctx.options(enumerators))?;
            let db = dbs.into_iter().last().expect("at least length 1");
            ctx.log(format!("m = {m}, n = {n}: {} orbits", db.i_count()));
            emit(&out, &formats::write_database(&DatabaseFile { db, meta: metadata(&ctx, enumerators) }))
        }
        Command::Lengthen { db, target_d, enumerators, out } => {
            let file = with_path(&db, formats::parse_database(&read(&db)?))?;
            let next = lengthen_search(&file.db, target_d, &ctx.options(enumerators))?;
            ctx.log(format!("n = {}: {} orbits with d ≥ {target_d}", next.n, next.i_count()));
            emit(&out, &formats::write_database(&DatabaseFile { db: next, meta: metadata(&ctx, enumerators) }))
        }
        Command::Table { m, n, counts } => {
            let (i_list, distances) = match counts {
                Some(list) => (list, Vec::new()),
                None => {
                    let dbs = classify_up_to(m, n, &ctx.options(false))?;
                    let i_list = dbs.iter().map(|d| d.i_count() as u128).collect();
                    (i_list, dbs.iter().map(|d| d.distance_counts()).collect())
                }
            };
            let table = euler_transform(&i_list)?;
            let mut text = String::from("n\ti_n\tt_n\tlower_bound\tdistances\n");
            for k in 0..table.t_list.len() {
                let dist: Vec<String> =
                    distances.get(k).map(|d| d.iter().map(|(d, c)| format!("{d}:{c}")).collect()).unwrap_or_default();
                let _ = writeln!(
                    text,
                    "{}\t{}\t{}\t{}\t{}",
                    k + 1,
                    table.i_list[k],
                    table.t_list[k],
                    mass_lower_bound(m, k + 1),
                    if dist.is_empty() { "-".to_string() } else { dist.join(",") }
                );
            }
            print!("{text}");
            Ok(())
        }
        Command::Mass { m, n, oracle } => {
            sdcodes::Field::standard(m)?;
            println!("total\t{}", mass_total(m, n));
            println!("lower_bound\t{}", mass_lower_bound(m, n));
            if oracle {
                println!("oracle\t{}", selfdual_count_oracle(m, n, ctx.enum_cap)?);
            }
            Ok(())
        }
        Command::Aut { file } => {
            let code = read_code_file(&file)?.to_code()?;
            println!("{}", sdcodes::aut_order_bruteforce(&code, ctx.enum_cap)?);
            Ok(())
        }
        Command::Orbit { file } => {
            let g = with_path(&file, read_code_file(&file)?.to_graph())?;
            let members = sdcodes::lc_orbit(&g, ctx.orbit_budget, ctx.exec)?;
            println!("size\t{}", members.len());
            for h in &members {
                let upper: String = h.upper().iter().map(|&w| char::from_digit(w as u32, 16).unwrap_or('?')).collect();
                println!("{} {} {}", h.m(), h.n(), if upper.is_empty() { "-" } else { &upper });
            }
            Ok(())
        }
        Command::Mindist { file } => {
            let code = read_code_file(&file)?.to_code()?;
            println!("{}", code_min_distance(&code, ctx.exec)?);
            Ok(())
        }
        Command::Wenum { file } => {
            let code = read_code_file(&file)?.to_code()?;
            println!("{}", weight_enumerator(&code, ctx.enum_cap, ctx.exec)?);
            Ok(())
        }
        Command::Equiv { first, second } => {
            let a = read_code_file(&first)?.to_code()?;
            let b = read_code_file(&second)?.to_code()?;
            let same = codes_equivalent(&a, &b, ctx.orbit_budget, ctx.exec)?;
            println!("{}", if same { "yes" } else { "no" });
            Ok(())
        }
        Command::Graphform { file, out } => {
            let s = with_path(&file, formats::parse_stabilizer(&read(&file)?))?;
            let sf = with_path(&file, standard_form(&s))?;
            for step in &sf.transcript {
                eprintln!("{step}");
            }
            emit(&out, &formats::write_graph(&sf.graph))
        }
        Command::Circulant { m, n, floor, witnesses, verify_paper_list, budget } => {
            let mut ok = true;
            if let (Some(m), Some(n)) = (m, n) {
                let r = circulant::search_circulant(m, n, floor, budget, ctx.exec)?;
                println!("m\tn\tbest_d\tcount\twitness");
                let rows: Vec<String> =
                    r.witnesses.iter().map(|w| w.iter().map(|&x| char::from(b'0' + x)).collect()).collect();
                let shown = if witnesses { rows.len() } else { rows.len().min(1) };
                if rows.is_empty() {
                    println!("{m}\t{n}\t{}\t0\t-", r.best_d);
                }
                for row in &rows[..shown] {
                    println!("{m}\t{n}\t{}\t{}\t{row}", r.best_d, rows.len());
                }
            }
            if verify_paper_list {
                let listed: Vec<_> = circulant::LISTED_CODES
                    .iter()
                    .copied()
                    .filter(|c| m.is_none_or(|m| c.m == m) && n.is_none_or(|n| c.n == n))
                    .collect();
                for check in circulant::verify_codes(&listed, ctx.enum_cap, ctx.exec)? {
                    let c = check.code;
                    let what = if check.computed_enumerator.is_some() { "d+W" } else { "d" };
                    println!(
                        "{}\t({},{}^{},{})\t{}\t{what}\td={}",
                        if check.ok { "PASS" } else { "FAIL" },
                        c.n,
                        c.m,
                        c.n,
                        c.d,
                        c.row,
                        check.computed_d
                    );
                    ok &= check.ok;
                }
            }
            if ok {
                Ok(())
            } else {
                Err(Failure::Mismatch)
            }
        }
        Command::Verify { long } => {
            if verify::run(&ctx, long)? {
                Ok(())
            } else {
                Err(Failure::Mismatch)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
