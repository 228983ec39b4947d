//! Command-line front end for the stretch-factor toolkit.
//!
//! Every subcommand prints a deterministic report (human text or `--json`)
//! and exits with: 0 = all checks pass, 1 = any failure, 2 = input error,
//! 3 = some check inconclusive with no failure.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use salem_core::algebraic::AlgebraicReal;
use salem_core::cyclotomic::strip_cyclotomic_factors;
use salem_core::dataset;
use salem_core::error::Error;
use salem_core::graphspec::{
    self, as_starlike, char_poly_adjacency, classify_coxeter, realize_starlike, tree_salem_poly,
    CoxeterClass, Graph, StarlikeTree,
};
use salem_core::homology::{self, homological_stretch, TwistWord};
use salem_core::intpoly::IntPoly;
use salem_core::modulus::MaxModulus;
use salem_core::numfmt::{format_decimals, parse_decimal};
use salem_core::powerpoly::power_min_poly;
use salem_core::rootloc::{classify_number, prove_irreducible_one_big_root, IrreducibilityVerdict};
use salem_core::thurston::{self, parse_word, standard_system, CurveSystem};
use salem_core::verify::{self, Verdict, VerificationReport};

#[derive(Parser)]
#[command(
    name = "salem",
    version,
    about = "Exact pseudo-Anosov stretch factors: Thurston's construction, starlike-tree spectra, homology actions, Salem/Pisot certificates"
)]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Include wall-clock timings (off by default so output is
    /// byte-reproducible).
    #[arg(long, global = true)]
    timings: bool,

    /// Cache directory for reports (also SALEM_CACHE_DIR).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,

    /// Also write the report to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a two-multitwist curve system and classify a word in it.
    Construct(ConstructArgs),
    /// Spectrum and classification of a starlike tree or an arbitrary graph.
    Tree(TreeArgs),
    /// Homology action of a twist word and its homological stretch factor.
    Homology(HomologyArgs),
    /// Root location, Salem/Pisot class, and irreducibility certificate.
    Classify(ClassifyArgs),
    /// Polynomial whose roots are the k-th powers of the input's roots.
    Power(PowerArgs),
    /// Theorem- and table-level verification pipelines.
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Args)]
struct ConstructArgs {
    /// Genus of the standard system (with --k).
    #[arg(long)]
    g: Option<u32>,
    /// Multiplicity of the last twist in the standard system.
    #[arg(long)]
    k: Option<u32>,
    /// Standard system as one flag: `--standard g,k`.
    #[arg(long, conflicts_with_all = ["g", "k", "matrix"])]
    standard: Option<String>,
    /// File with rows of space-separated non-negative intersection numbers.
    #[arg(long, conflicts_with_all = ["g", "k"])]
    matrix: Option<PathBuf>,
    /// Word over A a B b (lowercase = inverse twist).
    #[arg(long, default_value = "AB")]
    word: String,
    /// Decimal digits for the stretch factor.
    #[arg(long, default_value_t = 3)]
    decimals: u32,
}

#[derive(Args)]
struct TreeArgs {
    /// Arm lengths, e.g. `2,1,1,1` or `T:2,1,1,1`.
    #[arg(long)]
    arms: Option<String>,
    /// Graph file: first line vertex count, then `u v` edge lines.
    #[arg(long, conflicts_with = "arms")]
    graph: Option<PathBuf>,
    /// Decimal digits for the spectral radius.
    #[arg(long, default_value_t = 3)]
    decimals: u32,
}

#[derive(Args)]
struct HomologyArgs {
    /// Genus of the surface.
    #[arg(long)]
    g: usize,
    /// Twist word, e.g. `a0a0d0C0D1C0` (uppercase = inverse twist).
    #[arg(long)]
    word: String,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Ascending comma-separated integer coefficients, e.g. `1,-2,-2,-2,1`.
    #[arg(long)]
    poly: String,
    /// Decimal digits for the largest root.
    #[arg(long, default_value_t = 3)]
    decimals: u32,
}

#[derive(Args)]
struct PowerArgs {
    /// Ascending comma-separated integer coefficients of a monic polynomial.
    #[arg(long)]
    poly: String,
    /// Power exponent.
    #[arg(long)]
    k: u32,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Pseudo-Anosov family check: three computation paths must agree.
    TheoremA {
        #[arg(long, default_value_t = 2)]
        gmin: u32,
        #[arg(long, default_value_t = 4)]
        gmax: u32,
        #[arg(long, default_value_t = 3)]
        kmin: u32,
        #[arg(long, default_value_t = 4)]
        kmax: u32,
    },
    /// Irreducibility certificates for the k = 4 family polynomials.
    TheoremB {
        #[arg(long, default_value_t = 10)]
        gmax: u32,
    },
    /// Exact bracketing of the stretch factor just below k - 1.
    Limit {
        #[arg(long, default_value_t = 4)]
        k: u32,
        #[arg(long, default_value = "1e-3")]
        delta: String,
        #[arg(long, default_value_t = 10)]
        g: u32,
    },
    /// Degree preservation of powered Salem polynomials.
    Covers {
        #[arg(long, default_value_t = 4)]
        g: u32,
        #[arg(long, default_value_t = 6)]
        kmax: u32,
    },
    /// Published example tables.
    Tables {
        /// JSONL dataset path; the bundled copy is used when omitted.
        #[arg(long)]
        dataset: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cache_dir = cli
        .cache_dir
        .clone()
        .or_else(|| std::env::var_os("SALEM_CACHE_DIR").map(PathBuf::from));
    let key = cache_key(&std::env::args().collect::<Vec<_>>());
    let cached = cache_dir.as_ref().and_then(|dir| cache_read(dir, &key));
    let (out, code) = match cached {
        Some((code, out)) => (out, code),
        None => match run(&cli) {
            Ok((out, code)) => {
                if let Some(dir) = &cache_dir {
                    cache_write(dir, &key, code, &out);
                }
                (out, code)
            }
            Err(e) => {
                eprintln!("error: {e}");
                let code = match e {
                    Error::Inconclusive(_) => 3u8,
                    _ => 2u8,
                };
                return ExitCode::from(code);
            }
        },
    };
    print!("{out}");
    let _ = std::io::stdout().flush();
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, &out) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    ExitCode::from(code)
}

fn cache_key(args: &[String]) -> String {
    let mut h = DefaultHasher::new();
    env!("CARGO_PKG_VERSION").hash(&mut h);
    for a in args.iter().skip(1) {
        a.hash(&mut h);
    }
    format!("{:016x}", h.finish())
}

fn cache_read(dir: &PathBuf, key: &str) -> Option<(u8, String)> {
    let path = dir.join(format!("salem-{key}.report"));
    let text = std::fs::read_to_string(path).ok()?;
    let (first, rest) = text.split_once('\n')?;
    let code: u8 = first.strip_prefix("exit ")?.parse().ok()?;
    Some((code, rest.to_string()))
}

fn cache_write(dir: &PathBuf, key: &str, code: u8, out: &str) {
    if std::fs::create_dir_all(dir).is_err() {
        return;
    }
    let path = dir.join(format!("salem-{key}.report"));
    let _ = std::fs::write(path, format!("exit {code}\n{out}"));
}

/// A rendered section of key/value output lines.
#[derive(serde::Serialize)]
struct Section {
    id: String,
    items: Vec<(String, String)>,
}

impl Section {
    fn new(id: impl Into<String>) -> Self {
        Section {
            id: id.into(),
            items: Vec::new(),
        }
    }

    fn push(&mut self, k: impl Into<String>, v: impl ToString) -> &mut Self {
        self.items.push((k.into(), v.to_string()));
        self
    }
}

fn render(cli: &Cli, sections: &[Section]) -> String {
    if cli.json {
        let mut s = serde_json::to_string_pretty(sections).expect("sections serialize");
        s.push('\n');
        s
    } else {
        let mut s = String::new();
        for sec in sections {
            s.push_str(&format!("[{}]\n", sec.id));
            for (k, v) in &sec.items {
                s.push_str(&format!("  {k}: {v}\n"));
            }
        }
        s
    }
}

fn report_section(cli: &Cli, rep: &VerificationReport) -> Section {
    let mut sec = Section::new(rep.id.clone());
    for (k, v) in &rep.inputs {
        sec.push(format!("input.{k}"), v);
    }
    sec.push("verdict", format!("{:?}", rep.verdict));
    for (k, v) in &rep.witnesses {
        sec.push(k, v);
    }
    if cli.timings {
        sec.push("wall_ms", rep.wall_ms);
    }
    sec
}

fn verdict_code(reports: &[VerificationReport]) -> u8 {
    if reports.iter().any(|r| r.verdict == Verdict::Fail) {
        1
    } else if reports.iter().any(|r| r.verdict == Verdict::Inconclusive) {
        3
    } else {
        0
    }
}

fn run(cli: &Cli) -> Result<(String, u8), Error> {
    match &cli.command {
        Command::Construct(args) => run_construct(cli, args),
        Command::Tree(args) => run_tree(cli, args),
        Command::Homology(args) => run_homology(cli, args),
        Command::Classify(args) => run_classify(cli, args),
        Command::Power(args) => run_power(cli, args),
        Command::Verify(v) => run_verify(cli, v),
    }
}

fn matrix_to_string(m: &salem_core::IntMatrix) -> String {
    (0..m.rows())
        .map(|i| {
            (0..m.cols())
                .map(|j| m[(i, j)].to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("; ")
}

fn run_construct(cli: &Cli, args: &ConstructArgs) -> Result<(String, u8), Error> {
    let standard_pair = match &args.standard {
        Some(s) => {
            let (g, k) = s
                .split_once(',')
                .ok_or_else(|| Error::InputError("--standard wants `g,k`".into()))?;
            let g: u32 = g
                .trim()
                .parse()
                .map_err(|_| Error::InputError(format!("bad genus `{g}`")))?;
            let k: u32 = k
                .trim()
                .parse()
                .map_err(|_| Error::InputError(format!("bad multiplicity `{k}`")))?;
            Some((g, k))
        }
        None => args.g.zip(args.k),
    };
    let system: CurveSystem = match (&args.matrix, standard_pair) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::InputError(format!("{}: {e}", path.display())))?;
            CurveSystem::parse_matrix_text(&text)?
        }
        (None, Some((g, k))) => standard_system(g, k)?,
        _ => {
            return Err(Error::InputError(
                "construct needs --g and --k (or --standard g,k), or --matrix".into(),
            ))
        }
    };
    let mut sec = Section::new("construct");
    sec.push("intersection_matrix", matrix_to_string(&system.matrix));
    if system.has_zero_row_or_column() {
        sec.push(
            "filling",
            "matrix has an empty row or column; the system cannot fill",
        );
    } else if args.matrix.is_some() {
        sec.push(
            "filling",
            "not checkable from the matrix alone; verdicts are conditional on filling",
        );
    }
    let spectrum = thurston::analyze(&system)?;
    sec.push("nu_minimal_factor", spectrum.modulus.to_csv());
    let mut nu = spectrum.nu.clone();
    nu.refine_to_width(&decimal_width(args.decimals));
    sec.push(
        "nu",
        format_decimals(&nu.approx(args.decimals), args.decimals),
    );
    let word = parse_word(&args.word)?;
    let cls = thurston::classify_word_with(&spectrum, &word)?;
    sec.push("word", &args.word);
    sec.push("class", format!("{:?}", cls.tag));
    if let Some(stretch) = &cls.stretch {
        sec.push("stretch_polynomial", stretch.defining().to_csv());
        sec.push(
            "lambda",
            format_decimals(&stretch.approx(args.decimals), args.decimals),
        );
    }
    if let Some((g, k)) = standard_pair {
        let family = salem_core::salem_family_poly(g, k)?;
        sec.push("family_polynomial", family.to_csv());
    }
    Ok((render(cli, &[sec]), 0))
}

fn decimal_width(decimals: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10u32).pow(decimals + 1))
}

fn run_tree(cli: &Cli, args: &TreeArgs) -> Result<(String, u8), Error> {
    let (graph, tree): (Graph, Option<StarlikeTree>) = match (&args.arms, &args.graph) {
        (Some(arms), None) => {
            let text = arms.trim();
            let tree = if text.starts_with("T:") {
                StarlikeTree::parse_text(text)?
            } else {
                StarlikeTree::parse_text(&format!("T:{text}"))?
            };
            (realize_starlike(&tree), Some(tree))
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::InputError(format!("{}: {e}", path.display())))?;
            let g = Graph::parse_text(&text)?;
            let t = as_starlike(&g);
            (g, t)
        }
        _ => {
            return Err(Error::InputError(
                "tree needs exactly one of --arms or --graph".into(),
            ))
        }
    };
    let mut sec = Section::new("tree");
    if let Some(t) = &tree {
        sec.push(
            "arms",
            t.arms()
                .iter()
                .map(|a| a.to_string())
                .collect::<Vec<_>>()
                .join(","),
        );
    }
    sec.push("vertices", graph.vertex_count());
    sec.push("charpoly", char_poly_adjacency(&graph).to_csv());
    let mu = graphspec::spectral_radius(&graph)?;
    sec.push(
        "spectral_radius",
        format_decimals(&mu.approx(args.decimals), args.decimals),
    );
    let class = classify_coxeter(&graph)?;
    sec.push("coxeter_class", format!("{class:?}"));
    if let Some(t) = &tree {
        if class == CoxeterClass::NonCriticalDominant {
            let salem = tree_salem_poly(t)?;
            sec.push("salem_polynomial", salem.to_csv());
            let lambda = AlgebraicReal::largest_root(&salem)?;
            sec.push(
                "lambda",
                format_decimals(&lambda.approx(args.decimals), args.decimals),
            );
        }
    }
    Ok((render(cli, &[sec]), 0))
}

fn run_homology(cli: &Cli, args: &HomologyArgs) -> Result<(String, u8), Error> {
    let word = TwistWord::parse(&args.word, args.g)?;
    let act = homology::xtrain_action(&word)?;
    let mut sec = Section::new("homology");
    sec.push("genus", args.g);
    sec.push("word", &args.word);
    sec.push("action_matrix", matrix_to_string(&act.matrix));
    sec.push("symplectic", act.is_symplectic());
    let cp = homology::char_poly(&act);
    sec.push("charpoly", cp.to_csv());
    match homological_stretch(&act)? {
        MaxModulus::Real(r) => {
            sec.push("homological_stretch", format_decimals(&r.approx(9), 9));
            sec.push("stretch_defining", r.defining().to_csv());
        }
        MaxModulus::Enclosure { lo, hi } => {
            sec.push(
                "homological_stretch_enclosure",
                format!(
                    "({}, {}]",
                    format_decimals(&lo, 10),
                    format_decimals(&hi, 10)
                ),
            );
        }
    }
    Ok((render(cli, &[sec]), 0))
}

fn run_classify(cli: &Cli, args: &ClassifyArgs) -> Result<(String, u8), Error> {
    let poly = IntPoly::parse_csv(&args.poly)?;
    let mut sec = Section::new("classify");
    sec.push("polynomial", poly.to_string());
    sec.push("coefficients", poly.to_csv());
    let (stripped_x, x_power) = poly.strip_x_powers();
    if x_power > 0 {
        sec.push("x_power_stripped", x_power);
    }
    let loc = salem_core::unit_circle_location(&stripped_x)?;
    sec.push(
        "root_location",
        format!(
            "inside={} on={} outside={}",
            loc.inside, loc.on, loc.outside
        ),
    );
    let mut inconclusive = false;
    if stripped_x.is_monic() {
        let cls = classify_number(&stripped_x)?;
        sec.push("class", format!("{:?}", cls.class));
        let cert = prove_irreducible_one_big_root(&stripped_x)?;
        sec.push("irreducibility", format!("{:?}", cert.verdict));
        if cert.verdict == IrreducibilityVerdict::Inconclusive {
            sec.push("irreducibility_reason", &cert.reason);
            inconclusive = true;
        }
        if !cert.cyclotomic_indices.is_empty() {
            sec.push(
                "cyclotomic_factors",
                format!("{:?}", cert.cyclotomic_indices),
            );
        }
    } else {
        sec.push("class", "not monic: Salem/Pisot classification skipped");
    }
    if salem_core::sturm::count_real_roots(&stripped_x)? > 0 {
        let r = AlgebraicReal::largest_root(&stripped_x)?;
        sec.push(
            "largest_real_root",
            format_decimals(&r.approx(args.decimals), args.decimals),
        );
    }
    let code = if inconclusive { 3 } else { 0 };
    Ok((render(cli, &[sec]), code))
}

fn run_power(cli: &Cli, args: &PowerArgs) -> Result<(String, u8), Error> {
    let poly = IntPoly::parse_csv(&args.poly)?;
    let powered = power_min_poly(&poly, args.k)?;
    let mut sec = Section::new("power");
    sec.push("input", poly.to_csv());
    sec.push("k", args.k);
    sec.push("result", powered.to_csv());
    sec.push("result_pretty", powered.to_string());
    let (stripped, removed) = strip_cyclotomic_factors(&powered)?;
    if !removed.is_empty() {
        sec.push("cyclotomic_factors_in_result", format!("{removed:?}"));
        sec.push("after_stripping", stripped.to_csv());
    }
    Ok((render(cli, &[sec]), 0))
}

fn run_verify(cli: &Cli, cmd: &VerifyCommand) -> Result<(String, u8), Error> {
    let mut reports: Vec<VerificationReport> = Vec::new();
    match cmd {
        VerifyCommand::TheoremA {
            gmin,
            gmax,
            kmin,
            kmax,
        } => {
            if gmin < &2 || kmin < &3 || gmax < gmin || kmax < kmin {
                return Err(Error::OutOfRange(
                    "theorem-a needs 2 <= gmin <= gmax and 3 <= kmin <= kmax".into(),
                ));
            }
            for g in *gmin..=*gmax {
                for k in *kmin..=*kmax {
                    reports.push(verify::verify_theorem_a(g, k)?);
                }
            }
        }
        VerifyCommand::TheoremB { gmax } => {
            reports.push(verify::verify_theorem_b(*gmax)?);
        }
        VerifyCommand::Limit { k, delta, g } => {
            let delta = parse_decimal(delta)?;
            reports.push(verify::verify_limit(*k, &delta, *g)?);
        }
        VerifyCommand::Covers { g, kmax } => {
            reports.push(verify::verify_cover_degrees(*g, *kmax)?);
        }
        VerifyCommand::Tables { dataset: path } => {
            let rows = match path {
                Some(p) => {
                    let text = std::fs::read_to_string(p)
                        .map_err(|e| Error::InputError(format!("{}: {e}", p.display())))?;
                    dataset::parse_jsonl(&text)?
                }
                None => dataset::bundled_tables(),
            };
            reports.push(verify::verify_tables(&rows)?);
        }
    }
    reports.sort_by(|a, b| a.id.cmp(&b.id));
    let sections: Vec<Section> = reports.iter().map(|r| report_section(cli, r)).collect();
    let mut out = render(cli, &sections);
    if !cli.json {
        let pass = reports
            .iter()
            .filter(|r| r.verdict == Verdict::Pass)
            .count();
        out.push_str(&format!("summary: {pass}/{} pass\n", reports.len()));
    }
    Ok((out, verdict_code(&reports)))
}
